//! Built-in diagrams and fingerprint identification.

use std::sync::OnceLock;

use thiserror::Error;

use crate::diagram::{DiagramError, Edge, Pseudodiagram};
use crate::pseudo::{BaseInvariant, Fingerprint};
use crate::wiring::{Dir, RawSite, Wiring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry {name:?}; available: {available}")]
    Unknown { name: String, available: String },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub diagram: Pseudodiagram,
    /// `(invariant, value text)` pairs that recompute exactly.
    pub expected: &'static [(&'static str, &'static str)],
}

struct Raw {
    name: &'static str,
    text: &'static str,
    expected: &'static [(&'static str, &'static str)],
}

macro_rules! raw {
    ($name:literal, $($k:literal => $v:literal),* $(,)?) => {
        Raw {
            name: $name,
            text: include_str!(concat!("../data/", $name, ".pd")),
            expected: &[$(($k, $v)),*],
        }
    };
}

const RAW: &[Raw] = &[
    raw!("unknot", "jones" => "1", "alexander" => "1"),
    raw!("trefoil_lh", "jones" => "-A^16 + A^12 + A^4", "alexander" => "t^2 - t + 1"),
    raw!("trefoil_rh", "jones" => "-A^-16 + A^-12 + A^-4", "alexander" => "t^2 - t + 1"),
    raw!("figure8", "jones" => "A^8 - A^4 + 1 - A^-4 + A^-8", "alexander" => "t^2 - 3*t + 1"),
    raw!("hopf_L2a1_1", "bracket" => "-A^4 - A^-4", "jones" => "-A^-2 - A^-10"),
    raw!("hopf_L2a1_0", "bracket" => "-A^4 - A^-4", "jones" => "-A^10 - A^2"),
    raw!("whitehead", "jones" => "-A^6 + A^2 - 2*A^-2 + A^-6 - 2*A^-10 + A^-14"),
    raw!("borromean", "jones" => "-A^12 + 3*A^8 - 2*A^4 + 4 - 2*A^-4 + 3*A^-8 - A^-12"),
    raw!("k7_3",
        "jones" => "A^-8 - A^-12 + 2*A^-16 - 2*A^-20 + 3*A^-24 - 2*A^-28 + A^-32 - A^-36",
        "alexander" => "2*t^4 - 3*t^3 + 3*t^2 - 3*t + 2"),
    raw!("k10_148",
        "jones" => "-1 + 3*A^-4 - 4*A^-8 + 6*A^-12 - 5*A^-16 + 5*A^-20 - 4*A^-24 + 2*A^-28 - A^-32",
        "alexander" => "t^6 - 3*t^5 + 7*t^4 - 9*t^3 + 7*t^2 - 3*t + 1"),
    raw!("k10_160",
        "jones" => "1 - 2*A^-4 + 3*A^-8 - 3*A^-12 + 4*A^-16 - 3*A^-20 + 3*A^-24 - 2*A^-28",
        "alexander" => "t^6 - 4*t^5 + 4*t^4 - 3*t^3 + 4*t^2 - 4*t + 1"),
    raw!("perko_a",
        "jones" => "A^-12 + A^-24 - A^-28 + A^-32 - A^-36 + A^-40 - A^-44",
        "alexander" => "t^6 - 2*t^4 + 3*t^3 - 2*t^2 + 1"),
    raw!("perko_b",
        "jones" => "A^-12 + A^-24 - A^-28 + A^-32 - A^-36 + A^-40 - A^-44",
        "alexander" => "t^6 - 2*t^4 + 3*t^3 - 2*t^2 + 1"),
    raw!("pseudo_trefoil", ),
    raw!("pseudo_trefoil_mirror", ),
    raw!("pseudo_borromean", ),
    raw!("pseudo_perko_a", ),
    raw!("pseudo_perko_b", ),
    raw!("precrossed_curl", ),
];

fn table() -> &'static [CatalogEntry] {
    static TABLE: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        RAW.iter()
            .map(|r| CatalogEntry {
                name: r.name,
                diagram: Pseudodiagram::parse(r.text)
                    .unwrap_or_else(|e| panic!("catalog entry {} is invalid: {e}", r.name))
                    .with_name(r.name),
                expected: r.expected,
            })
            .collect()
    })
}

pub fn names() -> Vec<&'static str> {
    RAW.iter().map(|r| r.name).collect()
}

pub fn entries() -> &'static [CatalogEntry] {
    table()
}

pub fn catalog_get(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    table()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::Unknown { name: name.to_string(), available: names().join(", ") })
}

/// Catalog entries containing precrossings.
pub fn pseudodiagrams() -> impl Iterator<Item = &'static CatalogEntry> {
    table().iter().filter(|e| !e.diagram.is_classical())
}

fn fingerprints() -> &'static [(&'static str, Fingerprint)] {
    static PRINTS: OnceLock<Vec<(&'static str, Fingerprint)>> = OnceLock::new();
    PRINTS.get_or_init(|| {
        table()
            .iter()
            .filter(|e| e.diagram.is_classical())
            .map(|e| {
                let f = Fingerprint::of(&e.diagram, &[BaseInvariant::Jones, BaseInvariant::Alexander])
                    .unwrap_or_else(|err| panic!("catalog entry {}: {err}", e.name));
                (e.name, f)
            })
            .collect()
    })
}

/// Name of the first classical entry agreeing with every value present in
/// the fingerprint.
pub fn identify(f: &Fingerprint) -> Option<String> {
    if f.jones.is_none() && f.alexander.is_none() {
        return None;
    }
    let agrees = |mine: &Option<_>, theirs: &Option<_>| mine.is_none() || mine == theirs;
    fingerprints()
        .iter()
        .find(|(_, g)| agrees(&f.jones, &g.jones) && agrees(&f.alexander, &g.alexander))
        .map(|(n, _)| n.to_string())
}

/// Closure of a braid on `strands` strands; `k` stands for the generator
/// crossing positions `k` and `k+1` positively, `-k` for its inverse.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Pseudodiagram, DiagramError> {
    let mut next: Edge = 1;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let start: Vec<Edge> = (0..strands).map(|_| fresh()).collect();
    let mut cur = start.clone();
    let mut sites = Vec::new();
    use Dir::*;
    for &g in word {
        let k = g.unsigned_abs() as usize - 1;
        let (sw, se) = (cur[k], cur[k + 1]);
        let (nw, ne) = (fresh(), fresh());
        sites.push(if g > 0 {
            RawSite { pre: false, slots: [se, ne, nw, sw], dirs: [Some(In), Some(Out), Some(Out), Some(In)] }
        } else {
            RawSite { pre: false, slots: [sw, se, ne, nw], dirs: [Some(In), Some(In), Some(Out), Some(Out)] }
        });
        cur[k] = nw;
        cur[k + 1] = ne;
    }
    let mut free_loops = 0;
    for (s, f) in start.iter().zip(&cur) {
        if s == f {
            free_loops += 1;
        }
        for site in &mut sites {
            for e in site.slots.iter_mut() {
                if e == f {
                    *e = *s;
                }
            }
        }
    }
    Wiring::new(sites, free_loops, None).finish()
}
