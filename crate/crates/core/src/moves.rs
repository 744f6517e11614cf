//! Classical and pseudo-Reidemeister moves as local rewrites.
//!
//! Add moves are constructible everywhere; R1, R2 and PR1 removals are found
//! by curl and bigon search; R3 and PR3 rewrite triangle faces in place and
//! are their own inverses. PR2 flips a precrossing half a turn about a
//! vertical or horizontal axis, adding the two crossings that twist its legs.

use std::collections::HashMap;
use std::fmt;

use rand::seq::IndexedRandom;
use rand::Rng;
use thiserror::Error;

use crate::diagram::{DiagramError, Edge, Pseudodiagram};
use crate::laurent::{LaurentPoly, RationalFunction, Var};
use crate::pseudo::{hat_invariant, pseudo_invariant, resolve_all, were_set, BaseInvariant, PseudoError, TangleSet};
use crate::tangle::Tangle;
use crate::wiring::{Dir, Fragment, RawSite, Wiring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1,
    R2,
    R3,
    PR1,
    PR2,
    PR3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] = [MoveKind::R1, MoveKind::R2, MoveKind::R3, MoveKind::PR1, MoveKind::PR2, MoveKind::PR3];

    pub fn parse(text: &str) -> Option<Self> {
        Some(match text.trim().to_ascii_lowercase().as_str() {
            "r1" => MoveKind::R1,
            "r2" => MoveKind::R2,
            "r3" => MoveKind::R3,
            "pr1" => MoveKind::PR1,
            "pr2" => MoveKind::PR2,
            "pr3" => MoveKind::PR3,
            _ => return None,
        })
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Add,
    Remove,
}

pub type Dart = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Edge(Edge),
    FreeLoop,
    Site(usize),
    /// Two darts of one face, for a finger move.
    Darts(Dart, Dart),
    /// The first dart of a bigon or triangle face.
    Face(Dart),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoveSpec {
    pub kind: MoveKind,
    pub direction: Direction,
    pub location: Location,
    /// R1: 0 positive kink, 1 negative. R2: 0 first strand over, 1 under.
    /// PR2: 0..4 for axis (vertical, horizontal) times side (front, back).
    pub variant: u8,
}

impl MoveSpec {
    /// Expected change in the number of sites.
    pub fn site_delta(&self) -> i32 {
        let sign = if self.direction == Direction::Add { 1 } else { -1 };
        match self.kind {
            MoveKind::R1 | MoveKind::PR1 => sign,
            MoveKind::R2 | MoveKind::PR2 => 2 * sign,
            MoveKind::R3 | MoveKind::PR3 => 0,
        }
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::Add => "add",
            Direction::Remove => "remove",
        };
        write!(f, "{}-{} {:?} v{}", self.kind, dir, self.location, self.variant)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move {0} is not applicable to this diagram (stale or invalid location)")]
    NotApplicable(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn partner_map(d: &Pseudodiagram) -> HashMap<Dart, Dart> {
    let mut m = HashMap::new();
    for [p, q] in d.occurrences().into_values() {
        m.insert(p, q);
        m.insert(q, p);
    }
    m
}

/// All syntactically applicable moves of one kind and direction.
pub fn applicable_moves(d: &Pseudodiagram, kind: MoveKind, direction: Direction) -> Vec<MoveSpec> {
    let mk = |location, variant| MoveSpec { kind, direction, location, variant };
    let mut out = Vec::new();
    match (kind, direction) {
        (MoveKind::R1 | MoveKind::PR1, Direction::Add) => {
            let variants: u8 = if kind == MoveKind::R1 { 2 } else { 1 };
            for e in 1..=d.num_edges() as Edge {
                out.extend((0..variants).map(|v| mk(Location::Edge(e), v)));
            }
            if d.free_loops() > 0 {
                out.extend((0..variants).map(|v| mk(Location::FreeLoop, v)));
            }
        }
        (MoveKind::R1 | MoveKind::PR1, Direction::Remove) => {
            let want_pre = kind == MoveKind::PR1;
            for (s, site) in d.sites().iter().enumerate() {
                let sl = site.slots();
                if site.is_pre() == want_pre && (0..4).any(|i| sl[i] == sl[(i + 1) % 4]) {
                    out.push(mk(Location::Site(s), 0));
                }
            }
        }
        (MoveKind::R2, Direction::Add) => {
            let sites = d.sites();
            for face in d.faces() {
                for (a, &d1) in face.iter().enumerate() {
                    for &d2 in &face[a + 1..] {
                        if sites[d1.0].slots()[d1.1] != sites[d2.0].slots()[d2.1] {
                            out.extend((0..2).map(|v| mk(Location::Darts(d1, d2), v)));
                        }
                    }
                }
            }
        }
        (MoveKind::R2, Direction::Remove) => {
            let partner = partner_map(d);
            for face in d.faces() {
                if let Some(b) = bigon(d, &partner, &face) {
                    out.push(mk(Location::Face(b), 0));
                }
            }
        }
        (MoveKind::R3 | MoveKind::PR3, _) => {
            let partner = partner_map(d);
            for face in d.faces() {
                if let Some(t) = triangle(d, &partner, &face, kind == MoveKind::PR3) {
                    out.push(mk(Location::Face(t.d1), 0));
                }
            }
        }
        (MoveKind::PR2, Direction::Add) => {
            for s in d.precrossings() {
                out.extend((0..4).map(|v| mk(Location::Site(s), v)));
            }
        }
        (MoveKind::PR2, Direction::Remove) => {}
    }
    out
}

/// A bigon face between two distinct classical sites along which one strand
/// stays over; returns its first dart.
fn bigon(d: &Pseudodiagram, partner: &HashMap<Dart, Dart>, face: &[Dart]) -> Option<Dart> {
    let [d1, d2] = face else { return None };
    let (s, i) = *d1;
    let (t, j) = partner[d1];
    let sites = d.sites();
    if s == t || d2.0 != t || sites[s].is_pre() || sites[t].is_pre() {
        return None;
    }
    (i % 2 == j % 2).then_some(*d1)
}

struct Triangle {
    d1: Dart,
    s: [usize; 3],
    i1: usize,
    k: usize,
    m: usize,
}

fn triangle(d: &Pseudodiagram, partner: &HashMap<Dart, Dart>, face: &[Dart], pseudo: bool) -> Option<Triangle> {
    let [d1, d2, d3] = face else { return None };
    let (s1, i1) = *d1;
    let (s2, k) = partner[d1];
    let (s3, m) = partner[d2];
    if d2.0 != s2 || d3.0 != s3 || s1 == s2 || s2 == s3 || s1 == s3 {
        return None;
    }
    let sites = d.sites();
    let pre: Vec<bool> = [s1, s2, s3].iter().map(|&s| sites[s].is_pre()).collect();
    let p_over_q = i1 % 2 == 0;
    let q_over_r = k % 2 == 1;
    let r_over_p = m % 2 == 1;
    let ok = match (pseudo, pre.as_slice()) {
        (false, [false, false, false]) => !(p_over_q == q_over_r && q_over_r == r_over_p),
        (true, [true, false, false]) => !q_over_r == r_over_p,
        (true, [false, true, false]) => p_over_q == !r_over_p,
        (true, [false, false, true]) => !p_over_q == q_over_r,
        _ => false,
    };
    ok.then_some(Triangle { d1: *d1, s: [s1, s2, s3], i1, k, m })
}

pub fn apply_move(d: &Pseudodiagram, m: &MoveSpec) -> Result<Pseudodiagram, MoveError> {
    if !applicable_moves(d, m.kind, m.direction).contains(m) {
        return Err(MoveError::NotApplicable(m.to_string()));
    }
    let mut w = Wiring::from_diagram(d);
    match (m.kind, m.direction, &m.location) {
        (MoveKind::R1 | MoveKind::PR1, Direction::Add, loc) => {
            let pre = m.kind == MoveKind::PR1;
            let (x, y) = match loc {
                Location::Edge(e) => {
                    let tail = d.tail(*e).expect("edge exists");
                    w.split_edge(tail)
                }
                _ => {
                    w.free_loops -= 1;
                    let x = w.fresh();
                    (x, x)
                }
            };
            let l = w.fresh();
            use Dir::*;
            let site = match (pre, m.variant) {
                (true, _) => RawSite { pre: true, slots: [x, y, l, l], dirs: [Some(In), None, None, None] },
                (false, 0) => RawSite { pre: false, slots: [x, y, l, l], dirs: [Some(In), Some(Out), Some(Out), Some(In)] },
                _ => RawSite { pre: false, slots: [l, x, y, l], dirs: [Some(In), Some(In), Some(Out), Some(Out)] },
            };
            w.push(site);
        }
        (MoveKind::R1 | MoveKind::PR1, Direction::Remove, Location::Site(s)) => {
            w.replace_site(*s, &Fragment::passthrough());
        }
        (MoveKind::R2, Direction::Add, Location::Darts(d1, d2)) => {
            let (ea, ec) = w.split_edge(*d1);
            let (fa, fc) = w.split_edge(*d2);
            let (eb, fb) = (w.fresh(), w.fresh());
            let (mut xr, mut xl) = ([ea, fc, eb, fb], [ec, fb, eb, fa]);
            if m.variant == 0 {
                xr.rotate_right(1);
                xl.rotate_right(1);
            }
            w.push(RawSite::crossing(xr));
            w.push(RawSite::crossing(xl));
        }
        (MoveKind::R2, Direction::Remove, Location::Face(d1)) => {
            let t = partner_map(d)[d1].0;
            let (hi, lo) = if d1.0 > t { (d1.0, t) } else { (t, d1.0) };
            w.replace_site(hi, &Fragment::passthrough());
            w.replace_site(lo, &Fragment::passthrough());
        }
        (MoveKind::R3 | MoveKind::PR3, _, Location::Face(d1)) => {
            let partner = partner_map(d);
            let face = d.faces().into_iter().find(|f| f.first() == Some(d1)).expect("listed face");
            let t = triangle(d, &partner, &face, m.kind == MoveKind::PR3).expect("listed triangle");
            rewrite_triangle(d, &mut w, &t);
        }
        (MoveKind::PR2, Direction::Add, Location::Site(s)) => {
            w.replace_site(*s, &flip_fragment(m.variant));
        }
        _ => return Err(MoveError::NotApplicable(m.to_string())),
    }
    Ok(w.finish()?)
}

fn rewrite_triangle(d: &Pseudodiagram, w: &mut Wiring, t: &Triangle) {
    let [s1, s2, s3] = t.s;
    let old = |s: usize, i: usize| (w.sites[s].slots[i % 4], w.sites[s].dirs[i % 4]);
    let mid = |s: usize, i: usize| (w.sites[s].slots[i % 4], None);
    let (q_mid, p_w, q_sw, p_mid) = (mid(s1, t.i1), old(s1, t.i1 + 1), old(s1, t.i1 + 2), mid(s1, t.i1 + 3));
    let (r_mid, q_ne, r_nw) = (mid(s2, t.k + 1), old(s2, t.k + 2), old(s2, t.k + 3));
    let (r_se, p_e) = (old(s3, t.m + 2), old(s3, t.m + 3));
    let p_over_q = t.i1.is_multiple_of(2);
    let q_over_r = t.k % 2 == 1;
    let p_over_r = t.m.is_multiple_of(2);
    let site = |pre: bool, ends: [(Edge, Option<Dir>); 4], first_over: bool| {
        let mut ends = ends;
        if first_over && !pre {
            ends.rotate_left(1);
        }
        RawSite { pre, slots: ends.map(|x| x.0), dirs: ends.map(|x| x.1) }
    };
    let pre = |s: usize| d.sites()[s].is_pre();
    let new1 = site(pre(s1), [p_e, q_ne, p_mid, q_mid], p_over_q);
    let new2 = site(pre(s2), [q_mid, r_mid, q_sw, r_se], q_over_r);
    let new3 = site(pre(s3), [p_mid, r_nw, p_w, r_mid], p_over_r);
    w.sites[s1] = new1;
    w.sites[s2] = new2;
    w.sites[s3] = new3;
}

/// The precrossing turned half a revolution, legs twisted by two crossings.
fn flip_fragment(variant: u8) -> Fragment {
    let (isw, ise, ine, inw) = (1, 2, 3, 4);
    let (lsw, lse, lne, lnw) = (5, 6, 7, 8);
    let (x, y) = match variant {
        0 => ([ine, lne, lnw, inw], [lsw, lse, ise, isw]),
        1 => ([inw, ine, lne, lnw], [lse, ise, isw, lsw]),
        2 => ([lsw, isw, inw, lnw], [lse, lne, ine, ise]),
        _ => ([isw, inw, lnw, lsw], [ise, lse, lne, ine]),
    };
    Fragment {
        sites: vec![RawSite::pre([isw, ise, ine, inw]), RawSite::crossing(x), RawSite::crossing(y)],
        legs: [lsw, lse, lne, lnw],
    }
}

/// Picks a random applicable move among `kinds` that keeps the diagram at
/// or below `max_sites` sites.
pub fn random_move<R: Rng>(d: &Pseudodiagram, kinds: &[MoveKind], max_sites: usize, rng: &mut R) -> Option<MoveSpec> {
    let mut options: Vec<MoveSpec> = Vec::new();
    for &kind in kinds {
        for dir in [Direction::Add, Direction::Remove] {
            if matches!(kind, MoveKind::R3 | MoveKind::PR3) && dir == Direction::Remove {
                continue;
            }
            let moves = applicable_moves(d, kind, dir);
            let fits = |m: &MoveSpec| d.num_sites() as i32 + m.site_delta() <= max_sites as i32;
            // keep each (kind, direction) group equally likely regardless of its size
            let fitting: Vec<MoveSpec> = moves.into_iter().filter(fits).collect();
            if let Some(m) = fitting.choose(rng) {
                options.push(m.clone());
            }
        }
    }
    options.choose(rng).cloned()
}

/// One invariant tracked along random move sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzCheck {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl FuzzCheck {
    fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), checked: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(context());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for FuzzCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {} checks, {} failures", self.name, self.checked, self.failures)?;
        if let Some(c) = &self.first_failure {
            write!(f, " (first: {c})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub kinds: Vec<MoveKind>,
    pub iterations: usize,
    pub seed: u64,
    pub max_sites: usize,
    pub max_length: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self { kinds: MoveKind::ALL.to_vec(), iterations: 200, seed: 0, max_sites: 14, max_length: 6 }
    }
}

/// A tangle set and base invariant under test. Gated recipes go through
/// `pseudo_invariant`, ungated ones through `hat_invariant`.
#[derive(Clone, Debug)]
pub struct Recipe {
    pub name: String,
    pub tangles: TangleSet,
    pub base: BaseInvariant,
    pub gated: bool,
}

impl Recipe {
    pub fn new(tangles: TangleSet, base: BaseInvariant, gated: bool) -> Self {
        let name = format!("{base} {{{tangles}}}{}", if gated { "" } else { " (hat)" });
        Self { name, tangles, base, gated }
    }

    pub fn eval(&self, d: &Pseudodiagram) -> Result<RationalFunction, PseudoError> {
        if self.gated {
            pseudo_invariant(d, &self.tangles, self.base)
        } else {
            hat_invariant(d, &self.tangles, self.base)
        }
    }
}

/// Bracket of the diagram with every precrossing resolved positively.
pub fn positive_resolution_bracket(d: &Pseudodiagram) -> Result<LaurentPoly, String> {
    let plus = Tangle::plus_one();
    let tangles = vec![&plus; d.precrossing_count()];
    let r = resolve_all(d, &tangles).map_err(|e| e.to_string())?;
    crate::bracket::bracket(&r).map_err(|e| e.to_string())
}

fn kink_factor(sign: i32) -> LaurentPoly {
    LaurentPoly::from_ints(Var::A, &[(3 * sign, -1)])
}

/// Applies `iterations` seeded random move sequences to `d` and checks that
/// each recipe's pseudoknot invariant and the were-set stay fixed, and that
/// the bracket obeys the regular-isotopy rules for R1, R2 and R3.
pub fn fuzz(d: &Pseudodiagram, cfg: &FuzzConfig, recipes: &[Recipe]) -> Vec<FuzzCheck> {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    let basis = [BaseInvariant::Jones, BaseInvariant::Alexander];
    let base_values: Vec<_> = recipes.iter().map(|r| r.eval(d)).collect();
    let base_were = were_set(d, &basis);
    let mut checks: Vec<FuzzCheck> = recipes.iter().map(|r| FuzzCheck::new(format!("invariant {}", r.name))).collect();
    checks.push(FuzzCheck::new("were-set"));
    checks.push(FuzzCheck::new("bracket regular isotopy"));
    checks.push(FuzzCheck::new("move validity"));
    let nr = recipes.len();

    for it in 0..cfg.iterations {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(it as u64));
        let len = rng.random_range(1..=cfg.max_length.max(1));
        let mut cur = d.clone();
        let mut trail: Vec<String> = Vec::new();
        let mut bracket_before = positive_resolution_bracket(&cur).ok();
        for _ in 0..len {
            let Some(m) = random_move(&cur, &cfg.kinds, cfg.max_sites, &mut rng) else { break };
            trail.push(m.to_string());
            let ctx = || format!("iteration {it}: {}", trail.join(", "));
            let next = match apply_move(&cur, &m) {
                Ok(n) => n,
                Err(e) => {
                    checks[nr + 2].record(false, || format!("{}: {e}", ctx()));
                    break;
                }
            };
            let delta_ok = next.num_sites() as i32 - cur.num_sites() as i32 == m.site_delta();
            checks[nr + 2].record(delta_ok, ctx);

            let bracket_after = positive_resolution_bracket(&next).ok();
            if let (Some(b0), Some(b1)) = (&bracket_before, &bracket_after) {
                let ok = match (m.kind, m.direction) {
                    (MoveKind::R1, Direction::Add) => {
                        Some(*b1 == b0 * &kink_factor(if m.variant == 0 { 1 } else { -1 }))
                    }
                    (MoveKind::R1, Direction::Remove) => match m.location {
                        Location::Site(s) => Some(*b0 == b1 * &kink_factor(cur.sites()[s].sign().unwrap_or(1))),
                        _ => None,
                    },
                    (MoveKind::R2 | MoveKind::R3, _) => Some(b0 == b1),
                    _ => None,
                };
                if let Some(ok) = ok {
                    checks[nr + 1].record(ok, ctx);
                }
            }
            bracket_before = bracket_after;

            for (k, r) in recipes.iter().enumerate() {
                let v = r.eval(&next);
                checks[k].record(v == base_values[k], ctx);
            }
            let ws = were_set(&next, &basis);
            let same = match (&ws, &base_were) {
                (Ok(a), Ok(b)) => a.same_as(b),
                (Err(a), Err(b)) => a == b,
                _ => false,
            };
            checks[nr].record(same, ctx);
            cur = next;
        }
    }
    checks
}
