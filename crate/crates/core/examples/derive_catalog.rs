//! Regenerates the catalog data files from table braid words and PD codes
//! and the precrossing placement searches.
//!
//! cargo run --release --example derive_catalog -- <data dir>

use std::fs;
use std::path::{Path, PathBuf};

use pseudoknot::alexander::alexander;
use pseudoknot::bracket::jones;
use pseudoknot::catalog::braid_closure;
use pseudoknot::pseudo::{insert, resolve_all, BaseInvariant, Fingerprint};
use pseudoknot::tangle::Tangle;
use pseudoknot::{LaurentPoly, Pseudodiagram, Var};

fn write(dir: &Path, name: &str, d: &Pseudodiagram) {
    fs::write(dir.join(format!("{name}.pd")), d.to_text()).expect("write data file");
    println!("{name}: {} sites, {} precrossings", d.num_sites(), d.precrossing_count());
}

fn fp(d: &Pseudodiagram) -> Fingerprint {
    Fingerprint::of(d, &[BaseInvariant::Jones, BaseInvariant::Alexander]).expect("classical diagram")
}

/// Knot table PD code (edges numbered along the orientation, slots
/// counterclockwise from the incoming under-strand) in the data file format.
fn from_table_pd(code: &[[u32; 4]]) -> Pseudodiagram {
    let m = 2 * code.len() as u32;
    let succ = |e: u32| if e == m { 1 } else { e + 1 };
    let sites: Vec<String> = code
        .iter()
        .map(|&[a, b, c, d]| {
            let sign = if succ(d) == b { '+' } else { '-' };
            format!("X{sign}[{a},{b},{c},{d}]")
        })
        .collect();
    Pseudodiagram::parse(&format!("components: 1-{m}\npd: {}\n", sites.join(" "))).expect("table PD code")
}

/// Resolutions of a two-precrossing diagram as `[[aa, ab], [ba, bb]]` for
/// tangles `a` and `b`.
fn resolutions(p: &Pseudodiagram, a: &Tangle, b: &Tangle) -> [[Fingerprint; 2]; 2] {
    let t = [a, b];
    std::array::from_fn(|i| std::array::from_fn(|j| fp(&resolve_all(p, &[t[i], t[j]]).unwrap())))
}

/// Ordered crossing pairs `(i, j)` and tangle `a` (with `b` the other unit
/// tangle) whose four resolutions give `bb = perko`, `ab = ba = mixed` and
/// `aa` among `both_a`.
fn perko_placements(
    d: &Pseudodiagram,
    perko: &Fingerprint,
    mixed: &Fingerprint,
    both_a: &[&Fingerprint],
) -> Vec<(usize, usize, &'static str, Fingerprint)> {
    let (plus, minus) = (Tangle::plus_one(), Tangle::minus_one());
    let mut out = Vec::new();
    for i in 0..d.num_sites() {
        for j in 0..d.num_sites() {
            if i == j {
                continue;
            }
            let p = d.with_precrossings(&[i, j]).unwrap();
            for (name, a, b) in [("+1", &plus, &minus), ("-1", &minus, &plus)] {
                let r = resolutions(&p, a, b);
                if &r[1][1] == perko && &r[0][1] == mixed && &r[1][0] == mixed && both_a.contains(&&r[0][0]) {
                    out.push((i, j, name, r[0][0].clone()));
                }
            }
        }
    }
    out
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "crates/core/data".into()));
    let braids: &[(&str, usize, &[i32])] = &[
        ("trefoil_rh", 2, &[1, 1, 1]),
        ("trefoil_lh", 2, &[-1, -1, -1]),
        ("figure8", 3, &[1, -2, 1, -2]),
        ("hopf_L2a1_1", 2, &[1, 1]),
        ("borromean", 3, &[1, -2, 1, -2, 1, -2]),
        ("k7_3", 3, &[1, 1, 1, 1, 1, 2, -1, 2]),
    ];
    for &(name, strands, word) in braids {
        let d = braid_closure(strands, word).unwrap();
        println!("  jones {}", jones(&d).unwrap());
        if d.is_knot() {
            println!("  alexander {}", alexander(&d).unwrap());
        }
        write(&dir, name, &d);
    }
    fs::write(dir.join("unknot.pd"), "loops: 1\ncomponents:\npd:\n").unwrap();
    let hopf = braid_closure(2, &[1, 1]).unwrap();
    write(&dir, "hopf_L2a1_0", &hopf.reverse_component(1).unwrap());

    // the Whitehead link: the 5-crossing 2-component closed 3-braid whose
    // Jones polynomial is the published one
    let whitehead_jones =
        LaurentPoly::parse("-A^6 + A^2 - 2*A^-2 + A^-6 - 2*A^-10 + A^-14", Var::A).unwrap();
    let mut whitehead = None;
    'search: for code in 0..(4u32.pow(5)) {
        let word: Vec<i32> = (0..5).map(|k| [1, -1, 2, -2][((code >> (2 * k)) & 3) as usize]).collect();
        let d = braid_closure(3, &word).unwrap();
        if d.num_components() != 2 || d.free_loops() > 0 {
            continue;
        }
        for r in [None, Some(0), Some(1)] {
            let e = match r {
                None => d.clone(),
                Some(k) => d.reverse_component(k).unwrap(),
            };
            if jones(&e).unwrap() == whitehead_jones {
                println!("whitehead braid {word:?} reversed {r:?}");
                whitehead = Some(e);
                break 'search;
            }
        }
    }
    let whitehead = whitehead.expect("whitehead found");
    write(&dir, "whitehead", &whitehead);

    let trefoil = braid_closure(2, &[1, 1, 1]).unwrap();
    let hopf1 = fp(&hopf);
    let s = (0..3)
        .find(|&s| {
            let p = trefoil.with_precrossings(&[s]).unwrap();
            fp(&insert(&p, 0, &Tangle::smooth()).unwrap()) == hopf1
        })
        .expect("pseudo-trefoil placement");
    let pt = trefoil.with_precrossings(&[s]).unwrap();
    write(&dir, "pseudo_trefoil", &pt);
    write(&dir, "pseudo_trefoil_mirror", &pt.mirror());

    let borromean = braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap();
    let wf = fp(&whitehead);
    let hits: Vec<usize> = (0..6)
        .filter(|&s| {
            let p = borromean.with_precrossings(&[s]).unwrap();
            let site = p.precrossings()[0];
            fp(&insert(&p, site, &Tangle::smooth()).unwrap()) == wf
        })
        .collect();
    println!("borromean sites whose smoothing is the Whitehead link: {hits:?}");
    write(&dir, "pseudo_borromean", &borromean.with_precrossings(&hits[..1]).unwrap());

    fs::write(dir.join("precrossed_curl.pd"), "components: 1-2\npd: P[1,1,2,2]\n").unwrap();

    // Perko pair: the table diagram of the Perko knot (writhe 10) and the
    // closure of its 10-crossing braid word (writhe 8)
    let k10_148 = from_table_pd(&[
        [2, 17, 3, 18], [4, 9, 5, 10], [6, 19, 7, 20], [7, 13, 8, 12], [10, 3, 11, 4],
        [11, 15, 12, 14], [13, 9, 14, 8], [16, 1, 17, 2], [18, 5, 19, 6], [20, 15, 1, 16],
    ])
    .mirror();
    let k10_160 = from_table_pd(&[
        [1, 13, 2, 12], [4, 18, 5, 17], [6, 14, 7, 13], [8, 4, 9, 3], [10, 15, 11, 16],
        [11, 1, 12, 20], [14, 6, 15, 5], [16, 9, 17, 10], [18, 8, 19, 7], [19, 3, 20, 2],
    ]);
    let perko_a = from_table_pd(&[
        [1, 13, 2, 12], [4, 18, 5, 17], [6, 14, 7, 13], [8, 4, 9, 3], [9, 17, 10, 16],
        [11, 1, 12, 20], [14, 6, 15, 5], [15, 11, 16, 10], [18, 8, 19, 7], [19, 3, 20, 2],
    ]);
    let perko_b = braid_closure(3, &[1, 1, 1, 2, -1, 2, 1, 1, 2, 2]).unwrap();
    for (name, d) in [("k10_148", &k10_148), ("k10_160", &k10_160), ("perko_a", &perko_a), ("perko_b", &perko_b)] {
        println!("  writhe {}\n  jones {}\n  alexander {}", d.writhe().unwrap(), jones(d).unwrap(), alexander(d).unwrap());
        write(&dir, name, d);
    }
    let k7_3 = braid_closure(3, &[1, 1, 1, 1, 1, 2, -1, 2]).unwrap();
    let perko = fp(&perko_a);
    assert_eq!(fp(&perko_b), perko);
    let (f148, f160, f73) = (fp(&k10_148), fp(&k10_160), fp(&k7_3));
    let a_hits = perko_placements(&perko_a, &perko, &f73, &[&f148, &f160]);
    let b_hits = perko_placements(&perko_b, &perko, &f73, &[&f148, &f160]);
    for (name, hits) in [("perko_a", &a_hits), ("perko_b", &b_hits)] {
        let shown: Vec<_> = hits.iter().map(|h| (h.0, h.1, h.2, if h.3 == f148 { "10_148" } else { "10_160" })).collect();
        println!("{name} placements (i, j, tangle a, both-a knot): {shown:?}");
    }
    let (pa, pb) = (&a_hits[0], &b_hits[0]);
    assert_eq!(pa.2, pb.2, "both diagrams insert the same tangle as (a)");
    assert_ne!(pa.3, pb.3, "both-(a) insertions are distinct knots");
    write(&dir, "pseudo_perko_a", &perko_a.with_precrossings(&[pa.0, pa.1]).unwrap());
    write(&dir, "pseudo_perko_b", &perko_b.with_precrossings(&[pb.0, pb.1]).unwrap());
}
