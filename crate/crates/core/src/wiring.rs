//! Mutable, loosely labelled working form of a diagram.
//!
//! Rewrites (tangle insertion, Reidemeister moves, mirror, connected sum)
//! edit a `Wiring` with arbitrary edge labels and partially known strand
//! directions, then call [`Wiring::finish`] to orient every strand, rotate
//! every site into its canonical slot order and renumber edges.
//!
//! Raw slot conventions: slots are listed counterclockwise; for a classical
//! site the under-strand joins slots 0 and 2; for a precrossing the strands
//! are 0-2 and 1-3.

use std::collections::HashMap;

use crate::diagram::{DiagramError, Edge, Pseudodiagram, Site, SiteKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Dir {
    In,
    Out,
}

impl Dir {
    fn flip(self) -> Self {
        match self {
            Dir::In => Dir::Out,
            Dir::Out => Dir::In,
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct RawSite {
    pub pre: bool,
    pub slots: [Edge; 4],
    pub dirs: [Option<Dir>; 4],
}

impl RawSite {
    pub fn crossing(slots: [Edge; 4]) -> Self {
        Self { pre: false, slots, dirs: [None; 4] }
    }

    pub fn pre(slots: [Edge; 4]) -> Self {
        Self { pre: true, slots, dirs: [None; 4] }
    }
}

/// A piece of diagram with four dangling ends, spliced in place of a site.
/// `legs[k]` is the fragment edge attached to host slot `k`; every label
/// appears exactly twice across `sites` and `legs`.
#[derive(Clone, Debug)]
pub(crate) struct Fragment {
    pub sites: Vec<RawSite>,
    pub legs: [Edge; 4],
}

impl Fragment {
    /// Strands pass straight through: slot 0 to 2 and slot 1 to 3.
    pub fn passthrough() -> Self {
        Self { sites: Vec::new(), legs: [0, 1, 0, 1] }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Wiring {
    pub sites: Vec<RawSite>,
    pub free_loops: usize,
    pub name: Option<String>,
    next: Edge,
}

struct Dsu(HashMap<Edge, Edge>);

impl Dsu {
    fn find(&mut self, x: Edge) -> Edge {
        let p = *self.0.get(&x).unwrap_or(&x);
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0.insert(x, r);
        r
    }

    fn union(&mut self, a: Edge, b: Edge) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0.insert(rb, ra);
        }
    }
}

impl Wiring {
    pub fn new(sites: Vec<RawSite>, free_loops: usize, name: Option<String>) -> Self {
        let next = sites.iter().flat_map(|s| s.slots).max().map_or(1, |m| m + 1);
        Self { sites, free_loops, name, next }
    }

    pub fn from_diagram(d: &Pseudodiagram) -> Self {
        let sites = d
            .sites()
            .iter()
            .map(|s| RawSite { pre: s.is_pre(), slots: s.slots(), dirs: s.dirs().map(Some) })
            .collect();
        Self::new(sites, d.free_loops(), d.name().map(str::to_string))
    }

    pub fn fresh(&mut self) -> Edge {
        let e = self.next;
        self.next += 1;
        e
    }

    /// Appends sites whose labels are already meaningful in this wiring.
    pub fn push(&mut self, site: RawSite) {
        if let Some(m) = site.slots.iter().max() {
            self.next = self.next.max(m + 1);
        }
        self.sites.push(site);
    }

    pub fn occurrences(&self) -> HashMap<Edge, Vec<(usize, usize)>> {
        let mut occ: HashMap<Edge, Vec<(usize, usize)>> = HashMap::new();
        for (s, site) in self.sites.iter().enumerate() {
            for (i, &e) in site.slots.iter().enumerate() {
                occ.entry(e).or_default().push((s, i));
            }
        }
        occ
    }

    /// Gives the occurrence `at` of an edge a new label and the other
    /// occurrence another new label, returning `(label at at, other label)`.
    /// Both labels are left dangling for the caller to reconnect.
    pub fn split_edge(&mut self, at: (usize, usize)) -> (Edge, Edge) {
        let e = self.sites[at.0].slots[at.1];
        let other = self
            .occurrences()
            .remove(&e)
            .unwrap_or_default()
            .into_iter()
            .find(|&o| o != at)
            .expect("edge has a second occurrence");
        let (x, y) = (self.fresh(), self.fresh());
        self.sites[at.0].slots[at.1] = x;
        self.sites[other.0].slots[other.1] = y;
        (x, y)
    }

    /// Replaces site `idx` by `frag`, in place. Fragment legs are glued to the
    /// edges that met the removed site and inherit their directions; closed
    /// curves left without sites become free loops.
    pub fn replace_site(&mut self, idx: usize, frag: &Fragment) {
        let host = self.sites[idx].slots;
        let mut map: HashMap<Edge, Edge> = HashMap::new();
        let mut relabel = |e: Edge, w: &mut Self| *map.entry(e).or_insert_with(|| w.fresh());
        let mut new_sites = Vec::with_capacity(frag.sites.len());
        for s in &frag.sites {
            let mut t = s.clone();
            for k in 0..4 {
                t.slots[k] = relabel(s.slots[k], self);
            }
            new_sites.push(t);
        }
        let legs = frag.legs.map(|e| relabel(e, self));
        let host_dirs = self.sites[idx].dirs;
        for k in 0..4 {
            let at = new_sites.iter().enumerate().find_map(|(s, t)| t.slots.iter().position(|&x| x == legs[k]).map(|i| (s, i)));
            if let Some((s, i)) = at {
                new_sites[s].dirs[i] = new_sites[s].dirs[i].or(host_dirs[k]);
            }
        }

        let mut dsu = Dsu(HashMap::new());
        for k in 0..4 {
            dsu.union(host[k], legs[k]);
        }
        self.sites.splice(idx..idx + 1, new_sites);
        for site in &mut self.sites {
            for e in site.slots.iter_mut() {
                *e = dsu.find(*e);
            }
        }
        let occ = self.occurrences();
        let mut roots: Vec<Edge> = host.iter().map(|&e| dsu.find(e)).collect();
        roots.sort_unstable();
        roots.dedup();
        self.free_loops += roots.iter().filter(|r| !occ.contains_key(r)).count();
    }

    /// Orients every strand, canonicalises slot order and renumbers edges.
    pub fn finish(self) -> Result<Pseudodiagram, DiagramError> {
        let occ = self.occurrences();
        for (&e, v) in &occ {
            if v.len() != 2 {
                return Err(DiagramError::EdgeCount { edge: e, count: v.len() });
            }
        }
        let partner = |o: (usize, usize)| -> (usize, usize) {
            let v = &occ[&self.sites[o.0].slots[o.1]];
            if v[0] == o {
                v[1]
            } else {
                v[0]
            }
        };

        let mut dirs: Vec<[Option<Dir>; 4]> = self.sites.iter().map(|s| s.dirs).collect();
        let mut seen = vec![[false; 4]; self.sites.len()];
        for s in 0..self.sites.len() {
            for i in 0..4 {
                if seen[s][i] {
                    continue;
                }
                // walk the strand, assuming the edge at (s, i) leaves site s
                let mut cycle = Vec::new();
                let mut o = (s, i);
                loop {
                    seen[o.0][o.1] = true;
                    cycle.push((o, Dir::Out));
                    let p = partner(o);
                    seen[p.0][p.1] = true;
                    cycle.push((p, Dir::In));
                    o = (p.0, (p.1 + 2) % 4);
                    if o == (s, i) {
                        break;
                    }
                }
                let (mut agree, mut disagree) = (0, 0);
                for &((a, b), d) in &cycle {
                    match dirs[a][b] {
                        Some(k) if k == d => agree += 1,
                        Some(_) => disagree += 1,
                        None => {}
                    }
                }
                if agree > 0 && disagree > 0 {
                    return Err(DiagramError::OrientationMismatch);
                }
                for ((a, b), d) in cycle {
                    dirs[a][b] = Some(if disagree > 0 { d.flip() } else { d });
                }
            }
        }

        let mut oriented: Vec<(SiteKind, [Edge; 4])> = Vec::with_capacity(self.sites.len());
        for (site, d) in self.sites.iter().zip(&dirs) {
            let d = d.map(|x| x.expect("every slot oriented"));
            let rot = if site.pre {
                (0..4).find(|&r| d[r] == Dir::In && d[(r + 1) % 4] == Dir::In).expect("precrossing has two adjacent inputs")
            } else if d[0] == Dir::In {
                0
            } else {
                2
            };
            let slots: [Edge; 4] = std::array::from_fn(|k| site.slots[(k + rot) % 4]);
            let kind = if site.pre {
                SiteKind::Pre
            } else if d[(3 + rot) % 4] == Dir::In {
                SiteKind::Positive
            } else {
                SiteKind::Negative
            };
            oriented.push((kind, slots));
        }

        // canonical renumbering: components in order of first appearance,
        // edges numbered consecutively along the orientation
        let mut in_at: HashMap<Edge, (usize, usize)> = HashMap::new();
        for (s, (kind, slots)) in oriented.iter().enumerate() {
            let dirs = Site::slot_dirs(*kind);
            for i in 0..4 {
                if dirs[i] == Dir::In {
                    in_at.insert(slots[i], (s, i));
                }
            }
        }
        let mut label: HashMap<Edge, Edge> = HashMap::new();
        let mut components = Vec::new();
        let mut counter: Edge = 1;
        for s in 0..oriented.len() {
            for i in 0..4 {
                let start = oriented[s].1[i];
                if label.contains_key(&start) {
                    continue;
                }
                let lo = counter;
                let mut e = start;
                loop {
                    label.insert(e, counter);
                    counter += 1;
                    let (ns, ni) = in_at[&e];
                    e = oriented[ns].1[(ni + 2) % 4];
                    if e == start {
                        break;
                    }
                }
                components.push((lo, counter - 1));
            }
        }
        let sites: Vec<Site> = oriented.into_iter().map(|(k, slots)| Site::new(k, slots.map(|e| label[&e]))).collect();
        if sites.is_empty() && self.free_loops == 0 {
            return Err(DiagramError::Empty);
        }
        Ok(Pseudodiagram::from_parts(sites, components, self.free_loops, self.name))
    }
}

impl Fragment {
    /// Joins the fragment's legs in the given pairs, yielding a closed
    /// wiring. Curves without sites become free loops.
    pub fn close(&self, pairs: [(usize, usize); 2]) -> Wiring {
        let mut dsu = Dsu(HashMap::new());
        for (i, j) in pairs {
            dsu.union(self.legs[i], self.legs[j]);
        }
        let sites: Vec<RawSite> = self
            .sites
            .iter()
            .map(|s| RawSite { slots: s.slots.map(|e| dsu.find(e)), ..s.clone() })
            .collect();
        let mut w = Wiring::new(sites, 0, None);
        let occ = w.occurrences();
        let mut roots: Vec<Edge> = self.legs.iter().map(|&e| dsu.find(e)).collect();
        roots.sort_unstable();
        roots.dedup();
        w.free_loops = roots.iter().filter(|r| !occ.contains_key(r)).count();
        w
    }

    /// Site slot holding the given leg's edge, if the leg meets a site.
    pub fn leg_slot(&self, leg: usize) -> Option<(usize, usize)> {
        let e = self.legs[leg];
        self.sites.iter().enumerate().find_map(|(s, site)| site.slots.iter().position(|&x| x == e).map(|i| (s, i)))
    }
}
