//! Rational (2,2)-tangles from twist vectors, their fractions and closures.
//!
//! Boundary legs are addressed SW, SE, NE, NW (indices 0..4, counterclockwise).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::diagram::{DiagramError, Edge, Pseudodiagram};
use crate::wiring::{Dir, Fragment, RawSite};

pub const SW: usize = 0;
pub const SE: usize = 1;
pub const NE: usize = 2;
pub const NW: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangleError {
    #[error("twist vector must be nonempty")]
    EmptyTwistVector,
    #[error("bad tangle {0:?}: expected +1, -1, smooth or a twist vector like [2,3]")]
    Syntax(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connectivity {
    /// SW-SE and NW-NE.
    Zero,
    /// SW-NW and SE-NE.
    Infinity,
    /// SW-NE and SE-NW.
    Cross,
}

/// Conway fraction of a rational tangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Fraction {
    Finite(BigRational),
    Infinity,
}

impl Fraction {
    /// Reduced numerator and denominator, with `Infinity` as `1/0`.
    pub fn parts(&self) -> (BigInt, BigInt) {
        match self {
            Fraction::Finite(r) => (r.numer().clone(), r.denom().clone()),
            Fraction::Infinity => (BigInt::one(), BigInt::zero()),
        }
    }

    fn recip(&self) -> Self {
        match self {
            Fraction::Infinity => Fraction::Finite(BigRational::zero()),
            Fraction::Finite(r) if r.is_zero() => Fraction::Infinity,
            Fraction::Finite(r) => Fraction::Finite(r.recip()),
        }
    }

    fn plus(&self, a: i64) -> Self {
        match self {
            Fraction::Infinity => Fraction::Infinity,
            Fraction::Finite(r) => Fraction::Finite(r + BigRational::from_integer(a.into())),
        }
    }

    /// Boundary connectivity implied by the parities of the fraction.
    pub fn connectivity(&self) -> Connectivity {
        let (p, q) = self.parts();
        if p.is_even() {
            Connectivity::Zero
        } else if q.is_even() {
            Connectivity::Infinity
        } else {
            Connectivity::Cross
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fraction::Infinity => write!(f, "∞"),
            Fraction::Finite(r) => write!(f, "{r}"),
        }
    }
}

/// `a_n + 1/(a_{n-1} + 1/(... + 1/a_1))`.
pub fn tangle_fraction(tv: &[i64]) -> Fraction {
    let mut f = Fraction::Finite(BigRational::zero());
    for (k, &a) in tv.iter().enumerate() {
        f = if k == 0 { f.plus(a) } else { f.recip().plus(a) };
    }
    f
}

#[derive(Clone, Debug)]
pub struct Tangle {
    twists: Vec<i64>,
    name: Option<String>,
    frag: Fragment,
    connectivity: Connectivity,
}

fn corner_site(positive: bool, sw: Edge, se: Edge, ne: Edge, nw: Edge) -> RawSite {
    // "/" over when positive: the SE-NW strand passes under
    if positive {
        RawSite::crossing([se, ne, nw, sw])
    } else {
        RawSite::crossing([sw, se, ne, nw])
    }
}

impl Tangle {
    /// The rational tangle of a twist vector. Entries alternate between
    /// horizontal and vertical twisting, ending horizontal.
    pub fn rational(tv: &[i64]) -> Result<Self, TangleError> {
        if tv.is_empty() {
            return Err(TangleError::EmptyTwistVector);
        }
        let n = tv.len();
        let mut next: Edge = 1;
        let mut fresh = || {
            next += 1;
            next - 1
        };
        let (e1, e2) = (fresh(), fresh());
        let mut legs = if (n - 1).is_multiple_of(2) { [e1, e1, e2, e2] } else { [e1, e2, e2, e1] };
        let mut sites = Vec::new();
        for (i, &a) in tv.iter().enumerate() {
            let horizontal = (n - 1 - i).is_multiple_of(2);
            for _ in 0..a.unsigned_abs() {
                let (x, y) = (fresh(), fresh());
                if horizontal {
                    sites.push(corner_site(a > 0, legs[SE], y, x, legs[NE]));
                    legs[NE] = x;
                    legs[SE] = y;
                } else {
                    sites.push(corner_site(a > 0, legs[NW], legs[NE], y, x));
                    legs[NW] = x;
                    legs[NE] = y;
                }
            }
        }
        let frag = Fragment { sites, legs };
        let connectivity = strand_pairing(&frag);
        Ok(Self { twists: tv.to_vec(), name: None, frag, connectivity })
    }

    /// `+1`, `-1`, `smooth` or a bracketed twist vector.
    pub fn parse(text: &str) -> Result<Self, TangleError> {
        let t = text.trim();
        let named = |tv: &[i64], name: &str| Self::rational(tv).map(|x| x.with_name(name));
        match t {
            "+1" => named(&[1], "+1"),
            "-1" => named(&[-1], "-1"),
            "smooth" => named(&[0, 0], "smooth"),
            _ => {
                let inner = t
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| TangleError::Syntax(t.to_string()))?;
                let tv = inner
                    .split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| TangleError::Syntax(t.to_string()))?;
                Self::rational(&tv)
            }
        }
    }

    pub fn plus_one() -> Self {
        Self::parse("+1").expect("built-in tangle")
    }

    pub fn minus_one() -> Self {
        Self::parse("-1").expect("built-in tangle")
    }

    /// The crossingless tangle joining SW-NW and SE-NE, which is the oriented
    /// smoothing of a precrossing.
    pub fn smooth() -> Self {
        Self::parse("smooth").expect("built-in tangle")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn crossing_count(&self) -> usize {
        self.frag.sites.len()
    }

    pub fn connectivity(&self) -> Connectivity {
        self.connectivity
    }

    pub fn fraction(&self) -> Fraction {
        tangle_fraction(&self.twists)
    }

    pub(crate) fn fragment(&self) -> &Fragment {
        &self.frag
    }

    /// The tangle turned half a revolution in the plane.
    pub fn rotated(&self) -> Self {
        let legs = std::array::from_fn(|k| self.frag.legs[(k + 2) % 4]);
        Self { frag: Fragment { sites: self.frag.sites.clone(), legs }, name: None, ..self.clone() }
    }

    /// Closure joining SW-NW and SE-NE.
    pub fn denominator_closure(&self) -> Result<Pseudodiagram, DiagramError> {
        self.closure([(SW, NW), (SE, NE)])
    }

    /// Closure joining SW-SE and NW-NE.
    pub fn numerator_closure(&self) -> Result<Pseudodiagram, DiagramError> {
        self.closure([(SW, SE), (NW, NE)])
    }

    fn closure(&self, pairs: [(usize, usize); 2]) -> Result<Pseudodiagram, DiagramError> {
        let seeded = |legs: &[usize]| {
            let mut w = self.frag.close(pairs);
            for &leg in legs {
                if let Some((s, i)) = self.frag.leg_slot(leg) {
                    w.sites[s].dirs[i] = Some(Dir::In);
                }
            }
            w.finish()
        };
        seeded(&[SW, SE]).or_else(|_| seeded(&[SW]))
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n}"),
            None => {
                let parts: Vec<String> = self.twists.iter().map(i64::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// Follows each strand from leg SW to the leg where it exits.
fn strand_pairing(frag: &Fragment) -> Connectivity {
    let find_site = |e: Edge, not: Option<(usize, usize)>| {
        frag.sites.iter().enumerate().find_map(|(s, site)| {
            (0..4).find(|&i| site.slots[i] == e && Some((s, i)) != not).map(|i| (s, i))
        })
    };
    let mut e = frag.legs[SW];
    let mut from: Option<(usize, usize)> = None;
    loop {
        if let Some(k) = (0..4).find(|&k| k != SW && frag.legs[k] == e) {
            return match k {
                SE => Connectivity::Zero,
                NW => Connectivity::Infinity,
                _ => Connectivity::Cross,
            };
        }
        let (s, i) = find_site(e, from).expect("strand continues into a site");
        let o = (s, (i + 2) % 4);
        e = frag.sites[s].slots[o.1];
        from = Some(o);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::jones;
    use crate::laurent::{delta, LaurentPoly, Var};

    fn r(p: i64, q: i64) -> Fraction {
        Fraction::Finite(BigRational::new(p.into(), q.into()))
    }

    #[test]
    fn fractions() {
        assert_eq!(tangle_fraction(&[1]), r(1, 1));
        assert_eq!(tangle_fraction(&[0]), r(0, 1));
        assert_eq!(tangle_fraction(&[2, 3]), r(7, 2));
        assert_eq!(tangle_fraction(&[0, 0]), Fraction::Infinity);
        assert_eq!(tangle_fraction(&[0, 5]), Fraction::Infinity);
    }

    #[test]
    fn builtins() {
        let p = Tangle::plus_one();
        assert_eq!(p.crossing_count(), 1);
        assert_eq!(p.connectivity(), Connectivity::Cross);
        assert_eq!(Tangle::rational(&[0]).unwrap().connectivity(), Connectivity::Zero);
        assert_eq!(Tangle::smooth().connectivity(), Connectivity::Infinity);
        assert_eq!(Tangle::smooth().crossing_count(), 0);
        assert_eq!(Tangle::rational(&[2, 3]).unwrap().crossing_count(), 5);
        assert_eq!(Tangle::rational(&[]).unwrap_err(), TangleError::EmptyTwistVector);
        assert!(Tangle::parse("[2,x]").is_err());
        assert_eq!(Tangle::parse("[2, -3]").unwrap().twists(), &[2, -3]);
    }

    #[test]
    fn closures_of_basic_tangles() {
        let one = LaurentPoly::one(Var::A);
        for t in [Tangle::plus_one(), Tangle::minus_one()] {
            let d = t.denominator_closure().unwrap();
            assert_eq!(d.num_sites(), 1);
            assert_eq!(jones(&d).unwrap(), one);
        }
        let s = Tangle::smooth().denominator_closure().unwrap();
        assert_eq!(s.free_loops(), 2);
        assert_eq!(jones(&s).unwrap(), delta());
        let z = Tangle::rational(&[0]).unwrap();
        assert_eq!(z.denominator_closure().unwrap().free_loops(), 1);
        assert_eq!(z.numerator_closure().unwrap().free_loops(), 2);
    }
}
