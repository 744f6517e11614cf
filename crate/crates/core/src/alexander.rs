//! Alexander polynomial of a knot diagram from its arc/crossing matrix.

use num_traits::{One, Signed};
use thiserror::Error;

use crate::diagram::{Pseudodiagram, SiteKind};
use crate::laurent::{Coeff, LaurentPoly, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("Alexander restricted to knots (diagram has {0} components)")]
    NotAKnot(usize),
    #[error("Alexander undefined for pseudodiagrams (site {0} is a precrossing)")]
    Precrossing(usize),
    #[error("internal consistency failure: |Δ(1)| = {0}, expected 1")]
    Inconsistent(String),
}

/// Arc index of every edge: edges are merged across each crossing's
/// over-strand, so an arc is a maximal run broken only when passing under.
pub fn arcs(d: &Pseudodiagram) -> (Vec<usize>, usize) {
    let m = d.num_edges();
    let mut parent: Vec<usize> = (0..=m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for site in d.sites() {
        let [_, b, _, d4] = site.slots();
        let (rb, rd) = (find(&mut parent, b as usize), find(&mut parent, d4 as usize));
        parent[rb] = rd;
    }
    let mut index = vec![usize::MAX; m + 1];
    let mut label = vec![0; m + 1];
    let mut count = 0;
    for (e, slot) in label.iter_mut().enumerate().skip(1) {
        let r = find(&mut parent, e);
        if index[r] == usize::MAX {
            index[r] = count;
            count += 1;
        }
        *slot = index[r];
    }
    (label, count)
}

/// Fraction-free determinant (Bareiss) of a square matrix of ordinary
/// polynomials in `t` (all exponents nonnegative).
pub fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(Var::T);
    }
    let mut sign = Coeff::one();
    let mut prev = LaurentPoly::one(Var::T);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(Var::T),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&sign)
}

type Dense = Vec<i128>;

fn dense_trim(mut p: Dense) -> Dense {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn dense_mul_sub(a: &Dense, b: &Dense, c: &Dense, d: &Dense) -> Option<Dense> {
    let mut r = vec![0i128; (a.len() + b.len()).max(c.len() + d.len())];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] = r[i + j].checked_add(x.checked_mul(*y)?)?;
        }
    }
    for (i, x) in c.iter().enumerate() {
        for (j, y) in d.iter().enumerate() {
            r[i + j] = r[i + j].checked_sub(x.checked_mul(*y)?)?;
        }
    }
    Some(dense_trim(r))
}

/// Exact division of integer polynomials, `None` on a remainder.
fn dense_div(num: &Dense, den: &Dense) -> Option<Dense> {
    if num.is_empty() {
        return Some(Vec::new());
    }
    let (dl, lead) = (den.len(), *den.last()?);
    if num.len() < dl {
        return None;
    }
    let mut rem = num.clone();
    let mut q = vec![0i128; num.len() - dl + 1];
    for k in (0..q.len()).rev() {
        let top = rem[k + dl - 1];
        if top % lead != 0 {
            return None;
        }
        let c = top / lead;
        q[k] = c;
        for (j, y) in den.iter().enumerate() {
            rem[k + j] = rem[k + j].checked_sub(c.checked_mul(*y)?)?;
        }
    }
    rem.iter().all(|&x| x == 0).then(|| dense_trim(q))
}

/// Bareiss over integer polynomials in machine arithmetic; `None` when an
/// intermediate value overflows.
fn dense_bareiss(mut m: Vec<Vec<Dense>>) -> Option<Dense> {
    let n = m.len();
    if n == 0 {
        return Some(vec![1]);
    }
    let mut negate = false;
    let mut prev: Dense = vec![1];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&r| !m[r][k].is_empty()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Some(Vec::new()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = dense_mul_sub(&m[i][j], &m[k][k], &m[i][k], &m[k][j])?;
                m[i][j] = dense_div(&v, &prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if negate {
        det.iter_mut().for_each(|c| *c = -*c);
    }
    Some(det)
}

fn dense_to_laurent(p: &Dense) -> LaurentPoly {
    LaurentPoly::from_terms(Var::T, p.iter().enumerate().map(|(e, &c)| (e as i32, Coeff::from_integer(c.into()))))
}

/// Multiplies by `±t^k` so the minimum exponent is 0 and the constant term
/// is positive.
pub fn canonical(p: &LaurentPoly) -> LaurentPoly {
    match p.min_exp() {
        None => p.clone(),
        Some(e) => {
            let q = p.shift(-e);
            if q.lowest_coeff().is_negative() {
                -&q
            } else {
                q
            }
        }
    }
}

pub fn alexander(d: &Pseudodiagram) -> Result<LaurentPoly, AlexanderError> {
    if let Some(&p) = d.precrossings().first() {
        return Err(AlexanderError::Precrossing(p));
    }
    if !d.is_knot() {
        return Err(AlexanderError::NotAKnot(d.num_components()));
    }
    let n = d.num_sites();
    if n == 0 {
        return Ok(LaurentPoly::one(Var::T));
    }
    let (arc, count) = arcs(d);
    debug_assert_eq!(count, n);
    // each row as [constant, t] coefficient pairs
    let mut rows = vec![vec![[0i128; 2]; n]; n];
    for (r, site) in d.sites().iter().enumerate() {
        let [a, b, c, _] = site.slots();
        let (i, j, k) = (arc[a as usize], arc[c as usize], arc[b as usize]);
        let (at_j, at_i) = match site.kind() {
            SiteKind::Positive => ([-1, 0], [0, 1]),
            _ => ([0, 1], [-1, 0]),
        };
        for (col, add) in [(k, [1, -1]), (j, at_j), (i, at_i)] {
            rows[r][col][0] += add[0];
            rows[r][col][1] += add[1];
        }
    }
    rows.pop();
    for row in &mut rows {
        row.pop();
    }
    let dense: Vec<Vec<Dense>> =
        rows.iter().map(|row| row.iter().map(|e| dense_trim(e.to_vec())).collect()).collect();
    let det = match dense_bareiss(dense.clone()) {
        Some(p) => dense_to_laurent(&p),
        None => bareiss_det(dense.iter().map(|row| row.iter().map(dense_to_laurent).collect()).collect()),
    };
    let delta = canonical(&det);
    let at_one = delta.eval_at_one();
    if at_one.abs() != Coeff::one() {
        return Err(AlexanderError::Inconsistent(at_one.to_string()));
    }
    Ok(delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_ints(Var::T, terms)
    }

    #[test]
    fn trefoil_and_unknot() {
        let k = Pseudodiagram::parse("components: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]").unwrap();
        assert_eq!(alexander(&k).unwrap(), t(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(alexander(&k.mirror()).unwrap(), t(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(alexander(&Pseudodiagram::unlink(1).unwrap()).unwrap(), t(&[(0, 1)]));
        let kink = Pseudodiagram::parse("components: 1-2\npd: X+[1,1,2,2]").unwrap();
        assert_eq!(alexander(&kink).unwrap(), t(&[(0, 1)]));
    }

    #[test]
    fn rejects_links_and_precrossings() {
        assert_eq!(alexander(&Pseudodiagram::unlink(2).unwrap()), Err(AlexanderError::NotAKnot(2)));
        let p = Pseudodiagram::parse("components: 1-6\npd: P[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]").unwrap();
        assert!(matches!(alexander(&p), Err(AlexanderError::Precrossing(_))));
    }

    #[test]
    fn bareiss_matches_expansion() {
        let x = |c: &[(i32, i64)]| t(c);
        let m = vec![
            vec![x(&[(1, 1)]), x(&[(0, 2)]), x(&[(0, 1)])],
            vec![x(&[(0, 1)]), x(&[(1, 1)]), x(&[(0, 3)])],
            vec![x(&[(0, 0)]), x(&[(0, 1)]), x(&[(2, 1)])],
        ];
        // t*(t^3 - 3) - 2*(t^2) + 1*(1)
        assert_eq!(bareiss_det(m), t(&[(4, 1), (2, -2), (1, -3), (0, 1)]));
        let z = vec![vec![x(&[]), x(&[(0, 1)])], vec![x(&[(0, 1)]), x(&[])]];
        assert_eq!(bareiss_det(z), t(&[(0, -1)]));
    }

    proptest::proptest! {
        #[test]
        fn dense_bareiss_matches_generic(
            n in 1usize..5,
            cells in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 0..3), 16),
        ) {
            let dense: Vec<Vec<Dense>> = (0..n)
                .map(|i| (0..n).map(|j| dense_trim(cells[i * 4 + j].iter().map(|&c| c as i128).collect())).collect())
                .collect();
            let generic: Vec<Vec<LaurentPoly>> = dense.iter().map(|r| r.iter().map(dense_to_laurent).collect()).collect();
            let fast = dense_bareiss(dense).expect("small entries do not overflow");
            proptest::prop_assert_eq!(dense_to_laurent(&fast), bareiss_det(generic));
        }
    }
}
