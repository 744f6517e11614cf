mod common;

use pseudoknot::alexander::alexander;
use pseudoknot::bracket::{bracket, jones};
use pseudoknot::catalog::{catalog_get, entries, identify, names, pseudodiagrams};
use pseudoknot::pseudo::{insert, resolve_all, BaseInvariant, Fingerprint};
use pseudoknot::tangle::Tangle;
use pseudoknot::{LaurentPoly, Var};

const BASIS: [BaseInvariant; 2] = [BaseInvariant::Jones, BaseInvariant::Alexander];

fn fp(d: &pseudoknot::Pseudodiagram) -> Fingerprint {
    Fingerprint::of(d, &BASIS).unwrap()
}

/// Jones polynomial from a knot table, written in `t` with integer
/// exponents, converted with `t = A^-4` (or `A^4` for the mirror image).
fn table_jones(terms: &[(i32, i64)], mirrored: bool) -> LaurentPoly {
    let k = if mirrored { 4 } else { -4 };
    let converted: Vec<(i32, i64)> = terms.iter().map(|&(e, c)| (k * e, c)).collect();
    LaurentPoly::from_ints(Var::A, &converted)
}

fn table_alexander(coeffs: &[i64]) -> LaurentPoly {
    let terms: Vec<(i32, i64)> = coeffs.iter().enumerate().map(|(e, &c)| (e as i32, c)).collect();
    LaurentPoly::from_ints(Var::T, &terms)
}

#[test]
fn required_names_are_present() {
    let required = [
        "unknot", "trefoil_lh", "trefoil_rh", "figure8", "hopf_L2a1_1", "hopf_L2a1_0", "whitehead", "borromean",
        "k7_3", "k10_148", "k10_160", "perko_a", "perko_b", "pseudo_trefoil", "pseudo_trefoil_mirror",
        "pseudo_borromean", "pseudo_perko_a", "pseudo_perko_b", "precrossed_curl",
    ];
    for name in required {
        assert!(names().contains(&name), "{name}");
        assert_eq!(catalog_get(name).unwrap().diagram.name(), Some(name));
    }
}

#[test]
fn expected_values_recompute() {
    for e in entries() {
        for &(inv, text) in e.expected {
            let got = match inv {
                "bracket" => bracket(&e.diagram).unwrap(),
                "jones" => jones(&e.diagram).unwrap(),
                "alexander" => alexander(&e.diagram).unwrap(),
                other => panic!("unknown invariant {other}"),
            };
            let var = if inv == "alexander" { Var::T } else { Var::A };
            assert_eq!(got, LaurentPoly::parse(text, var).unwrap(), "{} {inv}", e.name);
        }
    }
}

#[test]
fn classical_entries_match_knot_tables() {
    let cases: &[(&str, &[(i32, i64)], bool, &[i64])] = &[
        ("trefoil_rh", &[(1, 1), (3, 1), (4, -1)], false, &[1, -1, 1]),
        ("trefoil_lh", &[(1, 1), (3, 1), (4, -1)], true, &[1, -1, 1]),
        ("figure8", &[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)], false, &[1, -3, 1]),
        ("k7_3", &[(2, 1), (3, -1), (4, 2), (5, -2), (6, 3), (7, -2), (8, 1), (9, -1)], false, &[2, -3, 3, -3, 2]),
        (
            "k10_148",
            &[(-8, -1), (-7, 2), (-6, -4), (-5, 5), (-4, -5), (-3, 6), (-2, -4), (-1, 3), (0, -1)],
            true,
            &[1, -3, 7, -9, 7, -3, 1],
        ),
        (
            "k10_160",
            &[(0, 1), (1, -2), (2, 3), (3, -3), (4, 4), (5, -3), (6, 3), (7, -2)],
            false,
            &[1, -4, 4, -3, 4, -4, 1],
        ),
        ("perko_a", &[(3, 1), (6, 1), (7, -1), (8, 1), (9, -1), (10, 1), (11, -1)], false, &[1, 0, -2, 3, -2, 0, 1]),
        ("perko_b", &[(3, 1), (6, 1), (7, -1), (8, 1), (9, -1), (10, 1), (11, -1)], false, &[1, 0, -2, 3, -2, 0, 1]),
    ];
    for &(name, j, mirrored, a) in cases {
        let d = &catalog_get(name).unwrap().diagram;
        assert_eq!(jones(d).unwrap(), table_jones(j, mirrored), "{name}");
        assert_eq!(alexander(d).unwrap(), table_alexander(a), "{name}");
    }
    let links: &[(&str, &[(i32, i64)])] = &[
        ("hopf_L2a1_1", &[(-2, -1), (-10, -1)]),
        ("hopf_L2a1_0", &[(2, -1), (10, -1)]),
        ("whitehead", &[(-14, 1), (-10, -2), (-6, 1), (-2, -2), (2, 1), (6, -1)]),
        ("borromean", &[(0, 4), (12, -1), (8, 3), (4, -2), (-4, -2), (-8, 3), (-12, -1)]),
    ];
    for &(name, terms) in links {
        let d = &catalog_get(name).unwrap().diagram;
        assert_eq!(jones(d).unwrap(), LaurentPoly::from_ints(Var::A, terms), "{name}");
    }
}

#[test]
fn bracket_agrees_with_reference_state_sum() {
    for e in entries().iter().filter(|e| e.diagram.is_classical()) {
        assert_eq!(bracket(&e.diagram).unwrap(), common::bracket(&e.diagram), "{}", e.name);
        assert_eq!(jones(&e.diagram).unwrap(), common::jones(&e.diagram), "{}", e.name);
    }
}

#[test]
fn text_round_trip() {
    for e in entries() {
        let again = pseudoknot::Pseudodiagram::parse(&e.diagram.to_text()).unwrap();
        assert_eq!(again.to_text(), e.diagram.to_text(), "{}", e.name);
    }
}

#[test]
fn identification() {
    for name in ["unknot", "trefoil_rh", "figure8", "whitehead", "k7_3"] {
        assert_eq!(identify(&fp(&catalog_get(name).unwrap().diagram)).as_deref(), Some(name));
    }
    let pb = &catalog_get("pseudo_borromean").unwrap().diagram;
    let smoothed = insert(pb, pb.precrossings()[0], &Tangle::smooth()).unwrap();
    assert_eq!(identify(&fp(&smoothed)).as_deref(), Some("whitehead"));
    let k5_1 = pseudoknot::catalog::braid_closure(2, &[1, 1, 1, 1, 1]).unwrap();
    assert_eq!(identify(&fp(&k5_1)), None);
}

#[test]
fn pseudo_trefoil_smoothings_are_hopf_links() {
    for (name, hopf) in [("pseudo_trefoil", "hopf_L2a1_1"), ("pseudo_trefoil_mirror", "hopf_L2a1_0")] {
        let p = &catalog_get(name).unwrap().diagram;
        assert_eq!(p.num_sites(), 3);
        assert_eq!(p.precrossing_count(), 1);
        let s = insert(p, p.precrossings()[0], &Tangle::smooth()).unwrap();
        assert_eq!(fp(&s), fp(&catalog_get(hopf).unwrap().diagram), "{name}");
    }
}

#[test]
fn pseudo_borromean_shape() {
    let p = &catalog_get("pseudo_borromean").unwrap().diagram;
    assert_eq!(p.num_sites(), 6);
    assert_eq!(p.precrossing_count(), 1);
}

#[test]
fn perko_placements_reproduce_the_pattern() {
    // tangle (a) is the negative unit tangle, (b) the positive one
    let (a, b) = (Tangle::minus_one(), Tangle::plus_one());
    let res = |name: &str, x: &Tangle, y: &Tangle| {
        fp(&resolve_all(&catalog_get(name).unwrap().diagram, &[x, y]).unwrap())
    };
    let perko = fp(&catalog_get("perko_a").unwrap().diagram);
    let k7_3 = fp(&catalog_get("k7_3").unwrap().diagram);
    for name in ["pseudo_perko_a", "pseudo_perko_b"] {
        assert_eq!(catalog_get(name).unwrap().diagram.precrossing_count(), 2);
        assert_eq!(res(name, &b, &b), perko, "{name} bb");
        assert_eq!(res(name, &a, &b), k7_3, "{name} ab");
        assert_eq!(res(name, &b, &a), k7_3, "{name} ba");
    }
    assert_eq!(identify(&res("pseudo_perko_a", &a, &a)).as_deref(), Some("k10_160"));
    assert_eq!(identify(&res("pseudo_perko_b", &a, &a)).as_deref(), Some("k10_148"));
    assert_eq!(catalog_get("perko_a").unwrap().diagram.writhe(), Ok(10));
    assert_eq!(catalog_get("perko_b").unwrap().diagram.writhe(), Ok(8));
}

#[test]
fn pseudodiagram_listing() {
    let listed: Vec<&str> = pseudodiagrams().map(|e| e.name).collect();
    assert_eq!(
        listed,
        ["pseudo_trefoil", "pseudo_trefoil_mirror", "pseudo_borromean", "pseudo_perko_a", "pseudo_perko_b", "precrossed_curl"]
    );
}
