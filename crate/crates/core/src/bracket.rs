//! Kauffman bracket by full state sum, and the Jones polynomial.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::Pseudodiagram;
use crate::laurent::{delta, Coeff, LaurentPoly, Var};

pub const DEFAULT_SITE_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("bracket undefined for pseudodiagrams (site {0} is a precrossing)")]
    Precrossing(usize),
    #[error("diagram too large: {sites} sites exceeds the cap of {cap}")]
    TooLarge { sites: usize, cap: usize },
}

/// Number of states with a given `(#A - #B, loops)` pair. Loops include the
/// diagram's free loops.
pub type StateCounts = BTreeMap<(i32, usize), u64>;

struct Graph {
    n: usize,
    // slot node -> the slot node at the other end of its edge
    edge_partner: Vec<usize>,
}

/// Slot joined to slot `i` at a site by the A-smoothing (`a-b`, `c-d`) and
/// by the B-smoothing (`a-d`, `b-c`).
const A_PARTNER: [usize; 4] = [1, 0, 3, 2];
const B_PARTNER: [usize; 4] = [3, 2, 1, 0];

impl Graph {
    fn new(d: &Pseudodiagram) -> Self {
        let n = d.num_sites();
        let mut edge_partner = vec![0; 4 * n];
        for [(s, i), (t, j)] in d.occurrences().into_values() {
            edge_partner[4 * s + i] = 4 * t + j;
            edge_partner[4 * t + j] = 4 * s + i;
        }
        Self { n, edge_partner }
    }

    /// Sites in an order where each touches as many earlier ones as
    /// possible, keeping the frontier narrow.
    fn order(&self) -> Vec<usize> {
        let mut done = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let next = (0..self.n)
                .filter(|&s| !done[s])
                .max_by_key(|&s| {
                    let touching = (0..4)
                        .filter(|&i| {
                            let t = self.edge_partner[4 * s + i] / 4;
                            t != s && done[t]
                        })
                        .count();
                    (touching, std::cmp::Reverse(s))
                })
                .expect("unprocessed site");
            done[next] = true;
            order.push(next);
        }
        order
    }
}

/// Partial states keyed by how the frontier ends are paired through the
/// processed sites; values count states by `(B-smoothings, closed loops)`.
type Partial = HashMap<Vec<u8>, Vec<u64>>;

struct Step {
    /// Frontier ends (slot nodes) after the site is added.
    ends: Vec<usize>,
    /// For each old end, the slot of the new site it is glued to.
    glued: Vec<Option<usize>>,
    /// For each slot of the new site: its edge leads to another slot of the
    /// site, to an old end, or out of the processed region.
    slot_link: [Link; 4],
}

#[derive(Clone, Copy)]
enum Link {
    Slot(usize),
    Old(usize),
    Open,
}

fn plan(g: &Graph, site: usize, ends: &[usize]) -> Step {
    let mut glued = vec![None; ends.len()];
    let mut slot_link = [Link::Open; 4];
    for (i, link) in slot_link.iter_mut().enumerate() {
        let p = g.edge_partner[4 * site + i];
        if p / 4 == site {
            *link = Link::Slot(p % 4);
        } else if let Some(k) = ends.iter().position(|&e| e == p) {
            glued[k] = Some(i);
            *link = Link::Old(k);
        }
    }
    let mut next: Vec<usize> = ends.iter().zip(&glued).filter(|(_, g)| g.is_none()).map(|(&e, _)| e).collect();
    next.extend((0..4).filter(|&i| matches!(slot_link[i], Link::Open)).map(|i| 4 * site + i));
    Step { ends: next, glued, slot_link }
}

/// New pairing and number of loops closed when the site is smoothed with
/// `partner` on top of the old pairing.
fn advance(step: &Step, old: &[u8], partner: &[usize; 4]) -> (Vec<u8>, u64) {
    let m = old.len();
    // local nodes: old ends 0..m, slots m..m+4
    let neighbours = |v: usize| -> [Option<usize>; 2] {
        if v < m {
            [Some(old[v] as usize), step.glued[v].map(|i| m + i)]
        } else {
            let i = v - m;
            let other = match step.slot_link[i] {
                Link::Slot(j) => Some(m + j),
                Link::Old(k) => Some(k),
                Link::Open => None,
            };
            [Some(m + partner[i]), other]
        }
    };
    let index_of = |v: usize| -> Option<usize> {
        let node = if v < m { None } else { Some(v - m) };
        match node {
            None => step.glued[v].is_none().then(|| (0..v).filter(|&k| step.glued[k].is_none()).count()),
            Some(i) => matches!(step.slot_link[i], Link::Open).then(|| {
                m - step.glued.iter().filter(|g| g.is_some()).count()
                    + (0..i).filter(|&j| matches!(step.slot_link[j], Link::Open)).count()
            }),
        }
    };
    let mut seen = vec![false; m + 4];
    let mut pairing = vec![0u8; step.ends.len()];
    let walk = |start: usize, seen: &mut Vec<bool>| -> usize {
        let (mut prev, mut v) = (usize::MAX, start);
        loop {
            seen[v] = true;
            let next = neighbours(v).into_iter().flatten().find(|&w| w != prev || neighbours(v)[0] == neighbours(v)[1]);
            match next {
                Some(w) if !seen[w] || w == start => {
                    if w == start {
                        return w;
                    }
                    prev = v;
                    v = w;
                }
                _ => return v,
            }
        }
    };
    for v in 0..m + 4 {
        if seen[v] {
            continue;
        }
        if let Some(k) = index_of(v) {
            let end = walk(v, &mut seen);
            let j = index_of(end).expect("open path ends on the frontier");
            pairing[k] = j as u8;
            pairing[j] = k as u8;
        }
    }
    let mut closed = 0;
    for v in 0..m + 4 {
        if !seen[v] {
            walk(v, &mut seen);
            closed += 1;
        }
    }
    (pairing, closed)
}

fn check(d: &Pseudodiagram, cap: usize) -> Result<(), BracketError> {
    if let Some(&p) = d.precrossings().first() {
        return Err(BracketError::Precrossing(p));
    }
    if d.num_sites() > cap {
        return Err(BracketError::TooLarge { sites: d.num_sites(), cap });
    }
    Ok(())
}

/// Counts the `2^n` smoothing states by `(#A - #B, loops)`, adding sites
/// one at a time and merging partial states that pair the open edge ends
/// the same way.
pub fn state_counts(d: &Pseudodiagram, cap: usize) -> Result<StateCounts, BracketError> {
    check(d, cap)?;
    let g = Graph::new(d);
    let width = 2 * g.n + 1;
    let mut start = vec![0u64; (g.n + 1) * width];
    start[0] = 1;
    let mut states: Partial = HashMap::from([(Vec::new(), start)]);
    let mut ends: Vec<usize> = Vec::new();
    for site in g.order() {
        let step = plan(&g, site, &ends);
        let mut next: Partial = HashMap::new();
        for (pairing, counts) in &states {
            for (b, partner) in [(0, &A_PARTNER), (1, &B_PARTNER)] {
                let (key, closed) = advance(&step, pairing, partner);
                let target = next.entry(key).or_insert_with(|| vec![0; (g.n + 1) * width]);
                for (idx, &c) in counts.iter().enumerate().filter(|(_, &c)| c > 0) {
                    let (bs, loops) = (idx / width + b, idx % width + closed as usize);
                    target[bs * width + loops] += c;
                }
            }
        }
        states = next;
        ends = step.ends;
    }
    let mut counts = StateCounts::new();
    for table in states.into_values() {
        for (idx, &c) in table.iter().enumerate().filter(|(_, &c)| c > 0) {
            let (b, loops) = (idx / width, idx % width);
            *counts.entry((g.n as i32 - 2 * b as i32, loops + d.free_loops())).or_default() += c;
        }
    }
    Ok(counts)
}

pub fn bracket_with_cap(d: &Pseudodiagram, cap: usize) -> Result<LaurentPoly, BracketError> {
    let counts = state_counts(d, cap)?;
    let max_loops = counts.keys().map(|k| k.1).max().unwrap_or(1);
    let mut delta_pow = vec![LaurentPoly::one(Var::A)];
    for k in 1..max_loops {
        delta_pow.push(&delta_pow[k - 1] * &delta());
    }
    let mut sum = LaurentPoly::zero(Var::A);
    for ((diff, loops), c) in counts {
        let term = delta_pow[loops - 1].shift(diff).scale(&Coeff::from_integer(BigInt::from(c)));
        sum = &sum + &term;
    }
    Ok(sum)
}

/// `<D>` with the default site cap.
pub fn bracket(d: &Pseudodiagram) -> Result<LaurentPoly, BracketError> {
    bracket_with_cap(d, DEFAULT_SITE_CAP)
}

/// `(-A^3)^(-w) <D>`.
pub fn jones_with_cap(d: &Pseudodiagram, cap: usize) -> Result<LaurentPoly, BracketError> {
    let b = bracket_with_cap(d, cap)?;
    let w = d.writhe().expect("classical diagram");
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(b.shift(-3 * w).scale(&Coeff::from_integer(BigInt::from(sign))))
}

pub fn jones(d: &Pseudodiagram) -> Result<LaurentPoly, BracketError> {
    jones_with_cap(d, DEFAULT_SITE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(text: &str) -> Pseudodiagram {
        Pseudodiagram::parse(text).unwrap()
    }

    fn a(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_ints(Var::A, terms)
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(bracket(&Pseudodiagram::unlink(1).unwrap()).unwrap(), a(&[(0, 1)]));
        assert_eq!(jones(&Pseudodiagram::unlink(1).unwrap()).unwrap(), a(&[(0, 1)]));
    }

    #[test]
    fn free_loop_multiplies_by_delta() {
        assert_eq!(bracket(&Pseudodiagram::unlink(3).unwrap()).unwrap(), &delta() * &delta());
        let t = pd("components: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]");
        let t2 = pd("loops: 1\ncomponents: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]");
        assert_eq!(bracket(&t2).unwrap(), &bracket(&t).unwrap() * &delta());
    }

    #[test]
    fn kinks() {
        let pos = pd("components: 1-2\npd: X+[1,1,2,2]");
        let neg = pd("components: 1-2\npd: X-[1,2,2,1]");
        assert_eq!(pos.writhe(), Ok(1));
        assert_eq!(neg.writhe(), Ok(-1));
        assert_eq!(bracket(&pos).unwrap(), a(&[(3, -1)]));
        assert_eq!(bracket(&neg).unwrap(), a(&[(-3, -1)]));
        assert_eq!(jones(&pos).unwrap(), a(&[(0, 1)]));
    }

    #[test]
    fn trefoil_state_sum() {
        let t = pd("components: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]");
        let counts = state_counts(&t, DEFAULT_SITE_CAP).unwrap();
        assert_eq!(counts.values().sum::<u64>(), 8);
        let b = bracket(&t).unwrap();
        let m = bracket(&t.mirror()).unwrap();
        assert_eq!(m, b.reflect());
        assert!(b == a(&[(5, -1), (-3, -1), (-7, 1)]) || b == a(&[(-5, -1), (3, -1), (7, 1)]));
    }

    #[test]
    fn cap_and_precrossing_errors() {
        let t = pd("components: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]");
        assert_eq!(bracket_with_cap(&t, 2), Err(BracketError::TooLarge { sites: 3, cap: 2 }));
        let p = pd("components: 1-6\npd: X+[1,5,2,4] P[3,1,4,6] X+[5,3,6,2]");
        assert_eq!(bracket(&p), Err(BracketError::Precrossing(1)));
    }
}
