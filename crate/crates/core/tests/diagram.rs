use proptest::prelude::*;
use pseudoknot::bracket::jones;
use pseudoknot::catalog::{braid_closure, catalog_get, entries};
use pseudoknot::{DiagramError, Pseudodiagram};

const TREFOIL: &str = "components: 1-6\npd: X+[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]";

fn braid() -> impl Strategy<Value = Pseudodiagram> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let gen = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
            (Just(n), prop::collection::vec(gen, 0..8))
        })
        .prop_map(|(n, w)| braid_closure(n, &w).unwrap())
}

proptest! {
    #[test]
    fn mirror_is_an_involution(d in braid()) {
        prop_assert_eq!(d.mirror().mirror(), d.clone());
        prop_assert_eq!(d.mirror().writhe().unwrap(), -d.writhe().unwrap());
        prop_assert_eq!(d.mirror().precrossing_count(), d.precrossing_count());
        prop_assert_eq!(d.mirror().num_components(), d.num_components());
    }

    #[test]
    fn serialization_is_a_fixed_point(d in braid()) {
        let once = Pseudodiagram::parse(&d.to_text()).unwrap();
        prop_assert_eq!(once.to_text(), d.to_text());
    }

    #[test]
    fn classical_signs_follow_succession(d in braid()) {
        for s in d.sites() {
            let [_, b, _, dd] = s.slots();
            let positive = d.succ(dd) == Some(b);
            let negative = d.succ(b) == Some(dd);
            prop_assert!(positive || negative);
            // on a two-edge component both edges succeed each other
            if positive != negative {
                prop_assert_eq!(s.sign(), Some(if positive { 1 } else { -1 }));
            }
        }
    }
}

#[test]
fn trefoil_parses() {
    let d = Pseudodiagram::parse(TREFOIL).unwrap();
    assert_eq!(d.num_sites(), 3);
    assert!(d.is_knot());
    assert_eq!(d.writhe(), Ok(3));
    assert_eq!(d.mirror().writhe(), Ok(-3));
}

#[test]
fn invalid_texts_are_rejected() {
    assert!(Pseudodiagram::parse("pd: X+[1,2,3,4] X+[1,2,3,4]").is_err());
    assert!(matches!(
        Pseudodiagram::parse("components: 1-6\npd: X-[1,5,2,4] X+[3,1,4,6] X+[5,3,6,2]"),
        Err(DiagramError::SignMismatch { .. })
    ));
    assert!(matches!(Pseudodiagram::parse("components: 1-6\npd: X+[1,5,2,4"), Err(DiagramError::Syntax { .. })));
}

#[test]
fn digit_mutations_break_pairing() {
    for e in entries() {
        let text = e.diagram.to_text();
        let start = text.find("pd:").map_or(text.len(), |i| i + 3);
        for (i, ch) in text.char_indices().skip_while(|&(i, _)| i < start) {
            if !ch.is_ascii_digit() {
                continue;
            }
            for r in ('0'..='9').filter(|&r| r != ch) {
                let mut mutated = text.clone();
                mutated.replace_range(i..i + 1, &r.to_string());
                assert!(Pseudodiagram::parse(&mutated).is_err(), "{} accepted {mutated:?}", e.name);
            }
        }
    }
}

#[test]
fn writhe_values() {
    assert_eq!(catalog_get("hopf_L2a1_1").unwrap().diagram.writhe(), Ok(2));
    assert_eq!(catalog_get("hopf_L2a1_0").unwrap().diagram.writhe(), Ok(-2));
    assert_eq!(Pseudodiagram::unlink(1).unwrap().writhe(), Ok(0));
    assert_eq!(
        catalog_get("pseudo_trefoil").unwrap().diagram.writhe(),
        Err(DiagramError::WritheOfPseudodiagram)
    );
    assert_eq!(Pseudodiagram::unlink(0), Err(DiagramError::Empty));
}

#[test]
fn connected_sum_of_trefoils() {
    let t = Pseudodiagram::parse(TREFOIL).unwrap();
    let s = t.connected_sum(1, &t, 4).unwrap();
    assert_eq!(s.num_sites(), 6);
    assert_eq!(s.writhe(), Ok(6));
    assert!(s.is_knot());
    let j = jones(&t).unwrap();
    assert_eq!(jones(&s).unwrap(), &j * &j);
    assert_eq!(t.connected_sum(7, &t, 1), Err(DiagramError::EdgeNotFound(7)));
}

#[test]
fn catalog_diagrams_round_trip() {
    for e in entries() {
        let d = Pseudodiagram::parse(&e.diagram.to_text()).unwrap();
        assert_eq!(d, e.diagram, "{}", e.name);
        assert_eq!(d.mirror().mirror(), d, "{}", e.name);
    }
}
