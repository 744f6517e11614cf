//! Tangle insertion at precrossings, the expanded invariant, the pseudoknot
//! invariant gated by the coefficient relation, and weighted resolution sets.

use std::cell::Cell;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::alexander::{alexander, AlexanderError};
use crate::bracket::{jones, BracketError};
use crate::diagram::{DiagramError, Pseudodiagram};
use crate::laurent::{AlgebraError, LaurentPoly, RationalFunction, Var};
use crate::tangle::{Tangle, TangleError};
use crate::wiring::Wiring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PseudoError {
    #[error("site {0} is not a precrossing")]
    NotAPrecrossing(usize),
    #[error("orientation mismatch")]
    OrientationMismatch,
    #[error(transparent)]
    Diagram(DiagramError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error("bad recipe entry {0:?}: expected <tangle>:<coefficient>")]
    Recipe(String),
    #[error("tangle set must be nonempty")]
    EmptyTangleSet,
    #[error("unknown base invariant {0:?} (expected jones or alexander)")]
    UnknownBase(String),
    #[error("coefficient relation fails; result is only a singular/rigid-vertex invariant — use hat_invariant")]
    RelationFails,
    #[error("fingerprint basis must be nonempty")]
    EmptyBasis,
    #[error("assignment has {got} tangles for {want} precrossings")]
    AssignmentLength { got: usize, want: usize },
}

impl From<DiagramError> for PseudoError {
    fn from(e: DiagramError) -> Self {
        match e {
            DiagramError::OrientationMismatch => PseudoError::OrientationMismatch,
            other => PseudoError::Diagram(other),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseInvariant {
    Jones,
    Alexander,
}

impl BaseInvariant {
    pub fn var(self) -> Var {
        match self {
            BaseInvariant::Jones => Var::A,
            BaseInvariant::Alexander => Var::T,
        }
    }

    pub fn eval(self, d: &Pseudodiagram) -> Result<LaurentPoly, PseudoError> {
        Ok(match self {
            BaseInvariant::Jones => jones(d)?,
            BaseInvariant::Alexander => alexander(d)?,
        })
    }

    pub fn parse(text: &str) -> Result<Self, PseudoError> {
        match text.trim() {
            "jones" => Ok(BaseInvariant::Jones),
            "alexander" => Ok(BaseInvariant::Alexander),
            other => Err(PseudoError::UnknownBase(other.to_string())),
        }
    }
}

impl fmt::Display for BaseInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseInvariant::Jones => "jones",
            BaseInvariant::Alexander => "alexander",
        })
    }
}

/// Tangles paired with their coefficients.
#[derive(Clone, Debug)]
pub struct TangleSet {
    entries: Vec<(Tangle, RationalFunction)>,
}

impl TangleSet {
    pub fn new(entries: Vec<(Tangle, RationalFunction)>) -> Result<Self, PseudoError> {
        if entries.is_empty() {
            return Err(PseudoError::EmptyTangleSet);
        }
        Ok(Self { entries })
    }

    /// Parses `<tangle>:<coefficient>[,...]`, e.g. `+1:1/2,-1:1/2`.
    pub fn parse(text: &str, var: Var) -> Result<Self, PseudoError> {
        let mut entries = Vec::new();
        for part in split_top_level(text) {
            let part = part.trim();
            let (t, c) = part.split_once(':').ok_or_else(|| PseudoError::Recipe(part.to_string()))?;
            entries.push((Tangle::parse(t)?, RationalFunction::parse(c, var)?));
        }
        Self::new(entries)
    }

    /// `{(+1, p), (-1, 1-p)}`.
    pub fn weighted(p_plus: &BigRational) -> Self {
        let c = |x: BigRational| RationalFunction::constant(Var::A, x);
        Self {
            entries: vec![
                (Tangle::plus_one(), c(p_plus.clone())),
                (Tangle::minus_one(), c(BigRational::one() - p_plus)),
            ],
        }
    }

    /// `{(+1, 1/2), (-1, 1/2)}`.
    pub fn uniform() -> Self {
        Self::weighted(&BigRational::new(1.into(), 2.into()))
    }

    /// `{(smooth, 1/(-A^2 - A^-2))}`.
    pub fn smoothing() -> Self {
        let c = RationalFunction::from_poly(crate::laurent::delta()).recip().expect("delta is nonzero");
        Self { entries: vec![(Tangle::smooth(), c)] }
    }

    pub fn entries(&self) -> &[(Tangle, RationalFunction)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn coefficient(&self, k: usize, base: BaseInvariant) -> Result<RationalFunction, PseudoError> {
        Ok(self.entries[k].1.clone().with_var(base.var())?)
    }
}

impl fmt::Display for TangleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(t, c)| format!("{t}:{c}")).collect();
        f.write_str(&parts.join(","))
    }
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Replaces the precrossing at `site` by the tangle, legs glued
/// SW, SE, NE, NW to the site's slots in order.
pub fn insert(p: &Pseudodiagram, site: usize, t: &Tangle) -> Result<Pseudodiagram, PseudoError> {
    if p.sites().get(site).is_none_or(|s| !s.is_pre()) {
        return Err(PseudoError::NotAPrecrossing(site));
    }
    let mut w = Wiring::from_diagram(p);
    w.replace_site(site, t.fragment());
    Ok(w.finish()?)
}

/// Inserts `tangles[k]` at the `k`-th precrossing, all in one splice.
pub fn resolve_all(p: &Pseudodiagram, tangles: &[&Tangle]) -> Result<Pseudodiagram, PseudoError> {
    let pre = p.precrossings();
    if pre.len() != tangles.len() {
        return Err(PseudoError::AssignmentLength { got: tangles.len(), want: pre.len() });
    }
    let mut w = Wiring::from_diagram(p);
    for (&site, t) in pre.iter().zip(tangles).rev() {
        w.replace_site(site, t.fragment());
    }
    Ok(w.finish()?)
}

thread_local! {
    static EVALUATIONS: Cell<u64> = const { Cell::new(0) };
}

/// Number of base-invariant evaluations made by [`hat_invariant`] on this
/// thread since the last reset.
pub fn evaluation_count() -> u64 {
    EVALUATIONS.with(Cell::get)
}

pub fn reset_evaluation_count() {
    EVALUATIONS.with(|c| c.set(0));
}

/// Expands the first precrossing over the tangle set, recursively, down to
/// classical diagrams.
pub fn hat_invariant(p: &Pseudodiagram, ts: &TangleSet, base: BaseInvariant) -> Result<RationalFunction, PseudoError> {
    let Some(&site) = p.precrossings().first() else {
        EVALUATIONS.with(|c| c.set(c.get() + 1));
        return Ok(RationalFunction::from_poly(base.eval(p)?));
    };
    let mut sum = RationalFunction::zero(base.var());
    for k in 0..ts.len() {
        let coeff = ts.coefficient(k, base)?;
        if coeff.is_zero() {
            EVALUATIONS.with(|c| c.set(c.get() + ts.len().pow(p.precrossing_count() as u32 - 1) as u64));
            continue;
        }
        let sub = hat_invariant(&insert(p, site, &ts.entries[k].0)?, ts, base)?;
        sum = sum.checked_add(&coeff.checked_mul(&sub)?)?;
    }
    Ok(sum)
}

/// Sums over every assignment of tangles to precrossings directly, splicing
/// each full assignment at once.
pub fn hat_invariant_direct(
    p: &Pseudodiagram,
    ts: &TangleSet,
    base: BaseInvariant,
) -> Result<RationalFunction, PseudoError> {
    let n = p.precrossing_count();
    let m = ts.len();
    let total = m.pow(n as u32);
    let terms: Vec<RationalFunction> = (0..total)
        .into_par_iter()
        .map(|mut code| {
            let mut tangles = Vec::with_capacity(n);
            let mut coeff = RationalFunction::one(base.var());
            for _ in 0..n {
                let k = code % m;
                code /= m;
                tangles.push(&ts.entries[k].0);
                coeff = coeff.checked_mul(&ts.coefficient(k, base)?)?;
            }
            if coeff.is_zero() {
                return Ok(coeff);
            }
            let value = base.eval(&resolve_all(p, &tangles)?)?;
            Ok(coeff.mul_poly(&value)?)
        })
        .collect::<Result<_, PseudoError>>()?;
    let mut sum = RationalFunction::zero(base.var());
    for t in &terms {
        sum = sum.checked_add(t)?;
    }
    Ok(sum)
}

/// `sum_i A_i I(D(t_i))`.
pub fn relation_sum(ts: &TangleSet, base: BaseInvariant) -> Result<RationalFunction, PseudoError> {
    let mut sum = RationalFunction::zero(base.var());
    for (k, (t, _)) in ts.entries.iter().enumerate() {
        let value = base.eval(&t.denominator_closure()?)?;
        sum = sum.checked_add(&ts.coefficient(k, base)?.mul_poly(&value)?)?;
    }
    Ok(sum)
}

pub fn check_relation(ts: &TangleSet, base: BaseInvariant) -> Result<bool, PseudoError> {
    Ok(relation_sum(ts, base)?.is_one())
}

/// The expanded invariant, refused unless the coefficient relation holds.
pub fn pseudo_invariant(p: &Pseudodiagram, ts: &TangleSet, base: BaseInvariant) -> Result<RationalFunction, PseudoError> {
    if !check_relation(ts, base)? {
        return Err(PseudoError::RelationFails);
    }
    hat_invariant(p, ts, base)
}

/// Invariant values standing in for a knot type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub jones: Option<LaurentPoly>,
    pub alexander: Option<LaurentPoly>,
}

impl Fingerprint {
    /// Jones when requested; Alexander when requested and the diagram is a
    /// knot (for links it is only an error when Alexander is the sole basis).
    pub fn of(d: &Pseudodiagram, basis: &[BaseInvariant]) -> Result<Self, PseudoError> {
        if basis.is_empty() {
            return Err(PseudoError::EmptyBasis);
        }
        let want_jones = basis.contains(&BaseInvariant::Jones);
        let jones = if want_jones { Some(jones(d)?) } else { None };
        let alexander = if !basis.contains(&BaseInvariant::Alexander) {
            None
        } else if d.is_knot() || !want_jones {
            Some(alexander(d)?)
        } else {
            None
        };
        Ok(Self { jones, alexander })
    }

    pub fn get(&self, base: BaseInvariant) -> Option<&LaurentPoly> {
        match base {
            BaseInvariant::Jones => self.jones.as_ref(),
            BaseInvariant::Alexander => self.alexander.as_ref(),
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(j) = &self.jones {
            parts.push(format!("jones={j}"));
        }
        if let Some(a) = &self.alexander {
            parts.push(format!("alexander={a}"));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WereEntry {
    pub fingerprint: Fingerprint,
    pub name: Option<String>,
    pub probability: BigRational,
}

/// Distinct resolution fingerprints with their probabilities, in order of
/// first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WereSet {
    entries: Vec<WereEntry>,
}

impl WereSet {
    pub fn entries(&self) -> &[WereEntry] {
        &self.entries
    }

    /// Attaches names from a lookup.
    pub fn identify(mut self, lookup: impl Fn(&Fingerprint) -> Option<String>) -> Self {
        for e in &mut self.entries {
            e.name = lookup(&e.fingerprint);
        }
        self
    }

    pub fn total_probability(&self) -> BigRational {
        self.entries.iter().map(|e| e.probability.clone()).sum()
    }

    /// Equality as a set of weighted fingerprints, ignoring order and names.
    pub fn same_as(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.iter().all(|e| {
                other.entries.iter().any(|o| o.fingerprint == e.fingerprint && o.probability == e.probability)
            })
    }

    /// `sum_i p_i I(K_i)`, when every fingerprint carries `base`.
    pub fn expectation(&self, base: BaseInvariant) -> Option<RationalFunction> {
        let mut sum = LaurentPoly::zero(base.var());
        for e in &self.entries {
            let v = e.fingerprint.get(base)?;
            sum = &sum + &v.scale(&e.probability);
        }
        Some(RationalFunction::from_poly(sum))
    }
}

impl fmt::Display for WereSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.name {
                Some(n) => writeln!(f, "{}\t{}", e.probability, n)?,
                None => writeln!(f, "{}\t{}", e.probability, e.fingerprint)?,
            }
        }
        Ok(())
    }
}

/// Resolves each precrossing positively with probability `p_plus`.
pub fn were_set_weighted(
    p: &Pseudodiagram,
    basis: &[BaseInvariant],
    p_plus: &BigRational,
) -> Result<WereSet, PseudoError> {
    let n = p.precrossing_count();
    let (plus, minus) = (Tangle::plus_one(), Tangle::minus_one());
    let p_minus = BigRational::one() - p_plus;
    let resolved: Vec<(Fingerprint, BigRational)> = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let mut prob = BigRational::one();
            let tangles: Vec<&Tangle> = (0..n)
                .map(|k| {
                    if (mask >> k) & 1 == 0 {
                        prob *= p_plus;
                        &plus
                    } else {
                        prob *= &p_minus;
                        &minus
                    }
                })
                .collect();
            Ok((Fingerprint::of(&resolve_all(p, &tangles)?, basis)?, prob))
        })
        .collect::<Result<_, PseudoError>>()?;
    let mut entries: Vec<WereEntry> = Vec::new();
    for (fingerprint, prob) in resolved {
        if prob.is_zero() {
            continue;
        }
        match entries.iter_mut().find(|e| e.fingerprint == fingerprint) {
            Some(e) => e.probability += prob,
            None => entries.push(WereEntry { fingerprint, name: None, probability: prob }),
        }
    }
    Ok(WereSet { entries })
}

/// Uniform resolution: each of the `2^n` sign choices has probability `2^-n`.
pub fn were_set(p: &Pseudodiagram, basis: &[BaseInvariant]) -> Result<WereSet, PseudoError> {
    were_set_weighted(p, basis, &BigRational::new(BigInt::one(), BigInt::from(2)))
}
