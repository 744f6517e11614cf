//! Oriented pseudodiagrams as extended PD codes.
//!
//! A site `X±[a,b,c,d]` lists its four edges counterclockwise starting at the
//! incoming under-edge `a`; the under-strand runs `a -> c`. The crossing is
//! positive when the over-strand enters at `d` (`succ(d) = b`) and negative
//! when it enters at `b` (`succ(b) = d`). A precrossing `P[a,b,c,d]` joins
//! `a-c` and `b-d` with no over/under data; its slots are kept so that both
//! `a` and `b` are incoming, which fixes the local frame used for tangle
//! insertion (`a` is SW, `b` SE, `c` NE, `d` NW).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::wiring::{Dir, RawSite, Wiring};

pub type Edge = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SiteKind {
    Positive,
    Negative,
    Pre,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Site {
    kind: SiteKind,
    slots: [Edge; 4],
}

impl Site {
    pub(crate) fn new(kind: SiteKind, slots: [Edge; 4]) -> Self {
        Self { kind, slots }
    }

    pub fn kind(&self) -> SiteKind {
        self.kind
    }

    pub fn slots(&self) -> [Edge; 4] {
        self.slots
    }

    pub fn is_pre(&self) -> bool {
        self.kind == SiteKind::Pre
    }

    /// `+1` / `-1` for classical crossings.
    pub fn sign(&self) -> Option<i32> {
        match self.kind {
            SiteKind::Positive => Some(1),
            SiteKind::Negative => Some(-1),
            SiteKind::Pre => None,
        }
    }

    /// Whether slot `i` belongs to the over-strand of a classical crossing.
    pub fn is_over(&self, i: usize) -> bool {
        i % 2 == 1
    }

    pub(crate) fn slot_dirs(kind: SiteKind) -> [Dir; 4] {
        use Dir::*;
        match kind {
            SiteKind::Positive => [In, Out, Out, In],
            SiteKind::Negative => [In, In, Out, Out],
            SiteKind::Pre => [In, In, Out, Out],
        }
    }

    pub(crate) fn dirs(&self) -> [Dir; 4] {
        Self::slot_dirs(self.kind)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("edge {edge} appears {count} times (expected exactly 2)")]
    EdgeCount { edge: Edge, count: usize },
    #[error("edge {0} lies outside every component range")]
    UnknownEdge(Edge),
    #[error("site {site}: {msg}")]
    Succession { site: usize, msg: String },
    #[error("site {site}: declared sign {declared} but the orientation gives {computed}")]
    SignMismatch { site: usize, declared: char, computed: char },
    #[error("diagram has no sites and no free loops")]
    Empty,
    #[error("orientation mismatch")]
    OrientationMismatch,
    #[error("writhe undefined for pseudodiagrams")]
    WritheOfPseudodiagram,
    #[error("edge {0} is not present in the diagram")]
    EdgeNotFound(Edge),
    #[error("no site {0}")]
    NoSuchSite(usize),
    #[error("no component {0}")]
    NoSuchComponent(usize),
}

/// An oriented link diagram with zero or more precrossings.
///
/// Values are always validated and canonically numbered: each component's
/// edges form a consecutive range followed in orientation order.
#[derive(Clone, Debug)]
pub struct Pseudodiagram {
    sites: Vec<Site>,
    components: Vec<(Edge, Edge)>,
    free_loops: usize,
    name: Option<String>,
}

impl PartialEq for Pseudodiagram {
    fn eq(&self, other: &Self) -> bool {
        self.sites == other.sites && self.components == other.components && self.free_loops == other.free_loops
    }
}

impl Eq for Pseudodiagram {}

impl Pseudodiagram {
    pub(crate) fn from_parts(
        sites: Vec<Site>,
        components: Vec<(Edge, Edge)>,
        free_loops: usize,
        name: Option<String>,
    ) -> Self {
        Self { sites, components, free_loops, name }
    }

    /// `k` crossing-free unknotted circles.
    pub fn unlink(k: usize) -> Result<Self, DiagramError> {
        Wiring::new(Vec::new(), k, None).finish()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn components(&self) -> &[(Edge, Edge)] {
        &self.components
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn num_sites(&self) -> usize {
        self.sites.len()
    }

    pub fn num_edges(&self) -> usize {
        2 * self.sites.len()
    }

    /// Link components, counting free loops.
    pub fn num_components(&self) -> usize {
        self.components.len() + self.free_loops
    }

    pub fn is_knot(&self) -> bool {
        self.num_components() == 1
    }

    /// Site indices of the precrossings, in site order.
    pub fn precrossings(&self) -> Vec<usize> {
        (0..self.sites.len()).filter(|&i| self.sites[i].is_pre()).collect()
    }

    pub fn precrossing_count(&self) -> usize {
        self.sites.iter().filter(|s| s.is_pre()).count()
    }

    pub fn is_classical(&self) -> bool {
        self.precrossing_count() == 0
    }

    pub fn succ(&self, e: Edge) -> Option<Edge> {
        self.components
            .iter()
            .find(|(lo, hi)| (*lo..=*hi).contains(&e))
            .map(|&(lo, hi)| if e == hi { lo } else { e + 1 })
    }

    pub fn writhe(&self) -> Result<i32, DiagramError> {
        self.sites.iter().map(|s| s.sign().ok_or(DiagramError::WritheOfPseudodiagram)).sum()
    }

    /// Positions `(site, slot)` where each edge occurs.
    pub fn occurrences(&self) -> HashMap<Edge, [(usize, usize); 2]> {
        let mut tmp: HashMap<Edge, Vec<(usize, usize)>> = HashMap::new();
        for (s, site) in self.sites.iter().enumerate() {
            for (i, &e) in site.slots.iter().enumerate() {
                tmp.entry(e).or_default().push((s, i));
            }
        }
        tmp.into_iter().map(|(e, v)| (e, [v[0], v[1]])).collect()
    }

    /// Occurrence `(site, slot)` where the edge enters a site.
    pub fn head(&self, e: Edge) -> Option<(usize, usize)> {
        self.sites.iter().enumerate().find_map(|(s, site)| {
            let dirs = site.dirs();
            (0..4).find(|&i| site.slots[i] == e && dirs[i] == Dir::In).map(|i| (s, i))
        })
    }

    /// Occurrence `(site, slot)` where the edge leaves a site.
    pub fn tail(&self, e: Edge) -> Option<(usize, usize)> {
        self.sites.iter().enumerate().find_map(|(s, site)| {
            let dirs = site.dirs();
            (0..4).find(|&i| site.slots[i] == e && dirs[i] == Dir::Out).map(|i| (s, i))
        })
    }

    /// Swaps over and under at every classical crossing.
    pub fn mirror(&self) -> Self {
        let mut w = Wiring::from_diagram(self);
        for site in &mut w.sites {
            if site.pre {
                continue;
            }
            // the old over-strand becomes the under-strand: rotate it into slots 0-2
            let rot = if site.dirs[3] == Some(Dir::In) { 3 } else { 1 };
            site.slots = std::array::from_fn(|k| site.slots[(k + rot) % 4]);
            site.dirs = std::array::from_fn(|k| site.dirs[(k + rot) % 4]);
        }
        w.finish().expect("mirroring preserves validity")
    }

    /// The same diagram with the given sites turned into precrossings.
    pub fn with_precrossings(&self, sites: &[usize]) -> Result<Self, DiagramError> {
        let mut w = Wiring::from_diagram(self);
        for &s in sites {
            let site = w.sites.get_mut(s).ok_or(DiagramError::NoSuchSite(s))?;
            site.pre = true;
        }
        w.finish()
    }

    /// The same diagram with component `k` (in `components()` order)
    /// traversed the other way.
    pub fn reverse_component(&self, k: usize) -> Result<Self, DiagramError> {
        let &(lo, hi) = self.components.get(k).ok_or(DiagramError::NoSuchComponent(k))?;
        let mut w = Wiring::from_diagram(self);
        for site in &mut w.sites {
            for i in 0..4 {
                if (lo..=hi).contains(&site.slots[i]) {
                    site.dirs[i] = site.dirs[i].map(|d| match d {
                        Dir::In => Dir::Out,
                        Dir::Out => Dir::In,
                    });
                }
            }
        }
        w.finish()
    }

    /// Connected sum along edge `e1` of `self` and edge `e2` of `other`.
    pub fn connected_sum(&self, e1: Edge, other: &Self, e2: Edge) -> Result<Self, DiagramError> {
        let h1 = self.head(e1).ok_or(DiagramError::EdgeNotFound(e1))?;
        let h2 = other.head(e2).ok_or(DiagramError::EdgeNotFound(e2))?;
        let offset = self.num_edges() as Edge + 1;
        let mut w = Wiring::from_diagram(self);
        let n1 = w.sites.len();
        for s in Wiring::from_diagram(other).sites {
            w.push(RawSite { slots: s.slots.map(|e| e + offset), ..s });
        }
        w.sites[h1.0].slots[h1.1] = e2 + offset;
        w.sites[n1 + h2.0].slots[h2.1] = e1;
        w.free_loops += other.free_loops;
        w.name = None;
        w.finish()
    }

    /// Faces of the planar embedding as cycles of darts `(site, slot)`; each
    /// dart leaves its site along the slot's edge with the face on its right.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let occ = self.occurrences();
        let partner = |(s, i): (usize, usize)| {
            let [p, q] = occ[&self.sites[s].slots[i]];
            if p == (s, i) {
                q
            } else {
                p
            }
        };
        let mut seen = vec![[false; 4]; self.sites.len()];
        let mut faces = Vec::new();
        for s in 0..self.sites.len() {
            for i in 0..4 {
                if seen[s][i] {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = (s, i);
                while !seen[d.0][d.1] {
                    seen[d.0][d.1] = true;
                    face.push(d);
                    let (t, j) = partner(d);
                    d = (t, (j + 1) % 4);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Number of connected pieces of the site graph (free loops excluded).
    pub fn num_pieces(&self) -> usize {
        let n = self.sites.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for [(a, _), (b, _)] in self.occurrences().into_values() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        parse_diagram(text)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Pseudodiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name: {name}")?;
        }
        if self.free_loops > 0 {
            writeln!(f, "loops: {}", self.free_loops)?;
        }
        let comps: Vec<String> = self.components.iter().map(|(lo, hi)| format!("{lo}-{hi}")).collect();
        writeln!(f, "components: {}", comps.join("; "))?;
        let sites: Vec<String> = self
            .sites
            .iter()
            .map(|s| {
                let tag = match s.kind {
                    SiteKind::Positive => "X+",
                    SiteKind::Negative => "X-",
                    SiteKind::Pre => "P",
                };
                let [a, b, c, d] = s.slots;
                format!("{tag}[{a},{b},{c},{d}]")
            })
            .collect();
        writeln!(f, "pd: {}", sites.join(" "))
    }
}

struct Parsed {
    name: Option<String>,
    loops: usize,
    ranges: Vec<(Edge, Edge)>,
    sites: Vec<(Option<char>, [Edge; 4])>,
}

fn syntax(line: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Syntax { line, msg: msg.into() }
}

/// Declared sign marker (`None` for a precrossing) and slots.
type RawSlots = (Option<char>, [Edge; 4]);

fn parse_sites(line: usize, text: &str) -> Result<Vec<RawSlots>, DiagramError> {
    let mut out = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        let open = rest.find('[').ok_or_else(|| syntax(line, format!("expected '[' in {rest:?}")))?;
        let close = rest.find(']').ok_or_else(|| syntax(line, "unclosed '['"))?;
        if close < open {
            return Err(syntax(line, "unexpected ']'"));
        }
        let sign = match rest[..open].trim() {
            "X+" => Some('+'),
            "X-" => Some('-'),
            "P" => None,
            other => return Err(syntax(line, format!("unknown site tag {other:?}"))),
        };
        let nums: Vec<&str> = rest[open + 1..close].split(',').map(str::trim).collect();
        if nums.len() != 4 {
            return Err(syntax(line, format!("a site needs 4 edge labels, found {}", nums.len())));
        }
        let mut slots = [0; 4];
        for (k, n) in nums.iter().enumerate() {
            slots[k] = n.parse().map_err(|_| syntax(line, format!("bad edge label {n:?}")))?;
        }
        out.push((sign, slots));
        rest = rest[close + 1..].trim_start();
    }
    Ok(out)
}

fn parse_fields(text: &str) -> Result<Parsed, DiagramError> {
    let mut p = Parsed { name: None, loops: 0, ranges: Vec::new(), sites: Vec::new() };
    let (mut have_components, mut have_pd, mut have_loops) = (false, false, false);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (key, value) = l.split_once(':').ok_or_else(|| syntax(line, "expected 'key: value'"))?;
        let value = value.trim();
        let dup = |seen: &mut bool| {
            if std::mem::replace(seen, true) {
                Err(syntax(line, format!("duplicate '{}' line", key.trim())))
            } else {
                Ok(())
            }
        };
        match key.trim() {
            "name" => {
                if p.name.replace(value.to_string()).is_some() {
                    return Err(syntax(line, "duplicate 'name' line"));
                }
            }
            "loops" => {
                dup(&mut have_loops)?;
                p.loops = value.parse().map_err(|_| syntax(line, format!("bad loop count {value:?}")))?;
            }
            "components" => {
                dup(&mut have_components)?;
                for part in value.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                    let (lo, hi) = part.split_once('-').ok_or_else(|| syntax(line, format!("bad range {part:?}")))?;
                    let lo: Edge = lo.trim().parse().map_err(|_| syntax(line, format!("bad range {part:?}")))?;
                    let hi: Edge = hi.trim().parse().map_err(|_| syntax(line, format!("bad range {part:?}")))?;
                    if lo > hi {
                        return Err(syntax(line, format!("empty range {part:?}")));
                    }
                    p.ranges.push((lo, hi));
                }
            }
            "pd" => {
                dup(&mut have_pd)?;
                p.sites = parse_sites(line, value)?;
            }
            other => return Err(syntax(line, format!("unknown key {other:?}"))),
        }
    }
    if !have_components {
        return Err(syntax(0, "missing 'components:' line"));
    }
    if !have_pd {
        return Err(syntax(0, "missing 'pd:' line"));
    }
    let mut sorted = p.ranges.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0].1 >= w[1].0) {
        return Err(syntax(0, "component ranges overlap"));
    }
    Ok(p)
}

fn parse_diagram(text: &str) -> Result<Pseudodiagram, DiagramError> {
    let p = parse_fields(text)?;
    let succ = |e: Edge| -> Option<Edge> {
        p.ranges.iter().find(|(lo, hi)| (*lo..=*hi).contains(&e)).map(|&(lo, hi)| if e == hi { lo } else { e + 1 })
    };

    let mut count: HashMap<Edge, usize> = HashMap::new();
    for (_, slots) in &p.sites {
        for &e in slots {
            if succ(e).is_none() {
                return Err(DiagramError::UnknownEdge(e));
            }
            *count.entry(e).or_default() += 1;
        }
    }
    for &(lo, hi) in &p.ranges {
        for e in lo..=hi {
            let c = count.get(&e).copied().unwrap_or(0);
            if c != 2 {
                return Err(DiagramError::EdgeCount { edge: e, count: c });
            }
        }
    }

    let mut raw = Vec::with_capacity(p.sites.len());
    for (site, (sign, [a, b, c, d])) in p.sites.iter().copied().enumerate() {
        if succ(a) != Some(c) {
            return Err(DiagramError::Succession { site, msg: format!("edge {c} does not follow edge {a}") });
        }
        let plus = succ(d) == Some(b);
        let minus = succ(b) == Some(d);
        if !plus && !minus {
            return Err(DiagramError::Succession {
                site,
                msg: format!("edges {b} and {d} are not consecutive along a component"),
            });
        }
        use Dir::*;
        let dirs = match sign {
            Some('+') if !plus => {
                return Err(DiagramError::SignMismatch { site, declared: '+', computed: '-' })
            }
            Some('-') if !minus => {
                return Err(DiagramError::SignMismatch { site, declared: '-', computed: '+' })
            }
            Some('+') => [Some(In), Some(Out), Some(Out), Some(In)],
            Some(_) => [Some(In), Some(In), Some(Out), Some(Out)],
            None if plus && minus => [Some(In), None, Some(Out), None],
            None if plus => [Some(In), Some(Out), Some(Out), Some(In)],
            None => [Some(In), Some(In), Some(Out), Some(Out)],
        };
        raw.push(RawSite { pre: sign.is_none(), slots: [a, b, c, d], dirs });
    }
    Wiring::new(raw, p.loops, p.name).finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "components: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]";

    #[test]
    fn parses_a_trefoil() {
        let d = Pseudodiagram::parse(TREFOIL).unwrap();
        assert_eq!(d.num_sites(), 3);
        assert_eq!(d.components(), &[(1, 6)]);
        assert_eq!(d.writhe(), Ok(3));
        assert!(d.is_knot());
    }

    #[test]
    fn round_trip_is_a_fixed_point() {
        let d = Pseudodiagram::parse(TREFOIL).unwrap();
        let again = Pseudodiagram::parse(&d.to_text()).unwrap();
        assert_eq!(d, again);
        assert_eq!(d.to_text(), again.to_text());
    }

    #[test]
    fn rejects_duplicated_site() {
        let err = Pseudodiagram::parse("components: 1-4\npd: X+[1,2,3,4] X+[1,2,3,4]").unwrap_err();
        assert!(matches!(err, DiagramError::Succession { .. } | DiagramError::EdgeCount { .. }), "{err}");
        let err = Pseudodiagram::parse("components: 1-2\npd: X+[1,2,1,2] X+[1,2,1,2]").unwrap_err();
        assert!(matches!(err, DiagramError::EdgeCount { edge: 1, count: 4 }), "{err}");
    }

    #[test]
    fn rejects_wrong_sign_marker() {
        let err = Pseudodiagram::parse("components: 1-6\npd: X-[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]").unwrap_err();
        assert_eq!(err, DiagramError::SignMismatch { site: 0, declared: '-', computed: '+' });
    }

    #[test]
    fn rejects_missing_lines_and_bad_tags() {
        assert!(matches!(Pseudodiagram::parse("pd: X+[1,5,2,4]"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(
            Pseudodiagram::parse("components: 1-6\npd: Y[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]"),
            Err(DiagramError::Syntax { line: 2, .. })
        ));
        assert!(matches!(Pseudodiagram::parse("components: 1-6\npd: X+[1,5,2,9]"), Err(DiagramError::UnknownEdge(9))));
    }

    #[test]
    fn empty_diagram_needs_a_loop() {
        assert_eq!(Pseudodiagram::parse("components:\npd:"), Err(DiagramError::Empty));
        let u = Pseudodiagram::parse("loops: 1\ncomponents:\npd:").unwrap();
        assert_eq!(u.writhe(), Ok(0));
        assert!(u.is_knot());
    }

    #[test]
    fn mirror_flips_signs_and_is_an_involution() {
        let d = Pseudodiagram::parse(TREFOIL).unwrap();
        let m = d.mirror();
        assert_eq!(m.writhe(), Ok(-3));
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn precrossings_are_framed_with_two_inputs() {
        // d incoming: the slots rotate so that the first two are inputs
        let d = Pseudodiagram::parse("components: 1-6\npd: P[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]").unwrap();
        assert_eq!(d.precrossing_count(), 1);
        let p = &d.sites()[0];
        let [a, b, c, _] = p.slots();
        assert_eq!(d.succ(a), Some(c));
        assert_eq!(d.head(a).unwrap(), (0, 0));
        assert_eq!(d.head(b).unwrap(), (0, 1));
        assert!(d.writhe().is_err());
        assert_eq!(d.mirror().precrossing_count(), 1);
    }

    #[test]
    fn faces_satisfy_euler() {
        let d = Pseudodiagram::parse(TREFOIL).unwrap();
        assert_eq!(d.faces().len(), d.num_sites() + 2);
        assert_eq!(d.num_pieces(), 1);
    }

    #[test]
    fn connected_sum_adds_sites_and_writhe() {
        let d = Pseudodiagram::parse(TREFOIL).unwrap();
        let s = d.connected_sum(1, &d.mirror(), 2).unwrap();
        assert_eq!(s.num_sites(), 6);
        assert_eq!(s.writhe(), Ok(0));
        assert!(s.is_knot());
        assert_eq!(s.faces().len(), 8);
        assert_eq!(d.connected_sum(99, &d, 1), Err(DiagramError::EdgeNotFound(99)));
    }
}
