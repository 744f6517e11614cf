//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use pseudoknot::pseudo::{resolve_all, BaseInvariant, TangleSet};
use pseudoknot::{LaurentPoly, Pseudodiagram, RationalFunction, Var};

type Poly = BTreeMap<i32, i64>;

fn add_term(p: &mut Poly, e: i32, c: i64) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

fn mul(p: &Poly, q: &Poly) -> Poly {
    let mut r = Poly::new();
    for (&e1, &c1) in p {
        for (&e2, &c2) in q {
            add_term(&mut r, e1 + e2, c1 * c2);
        }
    }
    r
}

fn to_laurent(p: &Poly) -> LaurentPoly {
    let terms: Vec<(i32, i64)> = p.iter().map(|(&e, &c)| (e, c)).collect();
    LaurentPoly::from_ints(Var::A, &terms)
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Kauffman bracket by brute force over states, joining edge labels with a
/// union-find: at `X[a,b,c,d]` the A-smoothing joins `a-b`, `c-d` and the
/// B-smoothing `a-d`, `b-c`.
pub fn bracket(d: &Pseudodiagram) -> LaurentPoly {
    let n = d.num_sites();
    let m = d.num_edges();
    let delta: Poly = [(2, -1), (-2, -1)].into_iter().collect();
    let mut total = Poly::new();
    for state in 0u64..(1 << n) {
        let mut parent: Vec<usize> = (0..=m).collect();
        let mut a_count = 0i32;
        for (k, site) in d.sites().iter().enumerate() {
            assert!(!site.is_pre(), "oracle bracket needs a classical diagram");
            let [a, b, c, e] = site.slots().map(|x| x as usize);
            let pairs = if (state >> k) & 1 == 0 {
                a_count += 1;
                [(a, b), (c, e)]
            } else {
                a_count -= 1;
                [(a, e), (b, c)]
            };
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
        let loops = (1..=m).filter(|&e| find(&mut parent, e) == e).count() + d.free_loops();
        let mut term: Poly = [(a_count, 1)].into_iter().collect();
        for _ in 1..loops {
            term = mul(&term, &delta);
        }
        for (e, c) in term {
            add_term(&mut total, e, c);
        }
    }
    to_laurent(&total)
}

/// `(-A^3)^(-w) <D>`.
pub fn jones(d: &Pseudodiagram) -> LaurentPoly {
    let w = d.writhe().unwrap();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    &LaurentPoly::from_ints(Var::A, &[(-3 * w, sign)]) * &bracket(d)
}

/// Enumerates every tangle assignment as a mixed-radix counter, most
/// significant digit first, evaluating each full resolution.
pub fn brute_force_hat(
    d: &Pseudodiagram,
    ts: &TangleSet,
    base: BaseInvariant,
    eval: impl Fn(&Pseudodiagram) -> LaurentPoly,
) -> RationalFunction {
    let n = d.precrossing_count();
    let entries = ts.entries();
    let mut digits = vec![0usize; n];
    let mut sum = RationalFunction::zero(base.var());
    loop {
        let tangles: Vec<_> = digits.iter().map(|&k| &entries[k].0).collect();
        let mut term = RationalFunction::from_poly(eval(&resolve_all(d, &tangles).unwrap()));
        for &k in &digits {
            term = &term * &entries[k].1.clone().with_var(base.var()).unwrap();
        }
        sum = &sum + &term;
        let mut i = n;
        loop {
            if i == 0 {
                return sum;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < entries.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}
