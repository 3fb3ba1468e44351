use stringc::catalog::{self, params, CatalogError, EntryReport};
use stringc::fracture::two_fracture_graph;
use stringc::reps::graph_of;
use stringc::sggi::CChecker;
use stringc::{Edge, GroupKind, Sggi};

fn reports(pattern: &str) -> Vec<EntryReport> {
    let r = catalog::verify_matching(pattern, &CChecker::default()).unwrap();
    assert!(!r.is_empty(), "{pattern} matched nothing");
    r
}

fn assert_all_pass(pattern: &str) {
    let failed: Vec<String> = reports(pattern).iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    assert!(failed.is_empty(), "{}", failed.join(""));
}

#[test]
fn every_graph_is_a_valid_representation() {
    for e in catalog::all_entries() {
        e.graph.validate().unwrap_or_else(|err| panic!("{}: {err}", e.id));
        assert_eq!(e.sggi().unwrap().degree(), e.graph.degree());
    }
}

#[test]
fn alternating_table() {
    assert_all_pass("T2.*");
    for e in catalog::expand("T2.*").unwrap() {
        let s = e.sggi().unwrap();
        assert_eq!(s.group().identify().kind, GroupKind::Alternating(s.degree()), "{}", e.id);
    }
}

#[test]
fn imprimitive_table() {
    assert_all_pass("T3.*");
}

#[test]
fn primitive_table() {
    assert_all_pass("T4.*");
    for e in catalog::expand("T4.*").unwrap() {
        let id = e.sggi().unwrap().group().identify();
        assert_eq!((id.kind, id.primitive), (GroupKind::Other, Some(true)), "{}", e.id);
    }
}

#[test]
fn two_fracture_table() {
    assert_all_pass("T5.*");
    for e in catalog::expand("T5.*").unwrap() {
        assert!(two_fracture_graph(&e.sggi().unwrap()).is_some(), "{}", e.id);
    }
}

#[test]
fn exceptional_table_is_informational() {
    let rs = reports("T6.*");
    assert!(rs.iter().all(|r| r.passed()));
    assert!(rs.iter().all(|r| r.lines.iter().all(|l| l.informational)));
}

#[test]
fn intersection_property_failures() {
    let failed: Vec<String> = reports("IPF.*").iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    assert!(failed.is_empty(), "{}", failed.join(""));
}

#[test]
fn parameterized_intersection_property_failures() {
    let rs = reports("IPF2.*");
    assert!(rs.len() > 40);
    let failed: Vec<String> = rs.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    assert!(failed.is_empty(), "{}", failed.join(""));
}

#[test]
fn parameterized_failures_over_the_full_range() {
    let checker = CChecker::default();
    for id in catalog::ids().into_iter().filter(|id| id.starts_with("IPF2.")) {
        for r in 6..=8 {
            for h in 0..=r {
                let names = catalog::family_range(id).unwrap().0;
                let p = if names.contains(&"h") { params(&[("r", r), ("h", h)]) } else { params(&[("r", r)]) };
                if let Ok(e) = catalog::instantiate(id, &p) {
                    assert!(checker.check(&e.sggi().unwrap()).is_false(), "{}", e.id);
                }
            }
        }
    }
}

#[test]
fn dihedral_path() {
    let e = catalog::resolve("T5.9").unwrap();
    let want = [Edge::new(0, 1, 0), Edge::new(1, 2, 1), Edge::new(2, 3, 0), Edge::new(3, 4, 1)];
    let mut got = e.graph.edges().to_vec();
    got.sort_by_key(|e| e.u);
    assert_eq!(got, want);
    let s = e.sggi().unwrap();
    assert_eq!(s.group().order(), 10);
    assert_eq!(s.schlafli().unwrap(), vec![5]);
    assert!(CChecker::default().check(&s).is_true());
}

#[test]
fn graph_one_orders() {
    let s = catalog::resolve("IPF.1").unwrap().sggi().unwrap();
    assert_eq!(s.subgroup_without(&[0]).order(), 4320);
    let inter = s.subgroup_without(&[3]).intersection_order(&s.subgroup_without(&[0]), 1 << 30).unwrap();
    assert_eq!(inter, 240);
}

#[test]
fn graph_three_and_its_dual() {
    let s = catalog::resolve("IPF.3").unwrap().sggi().unwrap();
    let want = Sggi::from_cycles(7, &["(1,2)", "(2,3)(4,5)", "(3,4)(5,6)", "(6,7)"]).unwrap();
    assert_eq!(s, want);
    let v = CChecker::default().check(&s);
    let w = v.witness().expect("not a C-group");
    assert_eq!((w.intersection_order, w.expected_order), (120, 10));
    // the pendant 0-edge at point 1 becomes a pendant 3-edge
    let d = graph_of(&s.dual());
    assert!(d.edges().contains(&Edge::new(0, 1, 3)));
    assert_eq!(d.edges().iter().filter(|e| e.u == 0 || e.v == 0).count(), 1);
}

#[test]
fn references_and_errors() {
    assert!(matches!(catalog::resolve("T9.9"), Err(CatalogError::UnknownId(_))));
    assert!(matches!(catalog::resolve("T5.1"), Err(CatalogError::MissingParam(_))));
    assert!(matches!(catalog::resolve("T5.1@r=1"), Err(CatalogError::OutOfRange(_))));
    assert!(matches!(catalog::resolve("T3.1@r=5"), Err(CatalogError::OutOfRange(_))));
    assert!(matches!(catalog::resolve("T5.1@q=3"), Err(CatalogError::UnexpectedParam(_))));
    assert!(matches!(catalog::resolve("T5.9@r=3"), Err(CatalogError::UnexpectedParam(_))));
    assert!(matches!(catalog::resolve("T5.1@r"), Err(CatalogError::BadReference(_))));
    assert!(matches!(catalog::expand("["), Err(CatalogError::BadPattern(_))));
    let e = catalog::resolve("IPF2.5@r=6,h=2").unwrap();
    assert_eq!(e.id, "IPF2.5@h=2,r=6");
    assert_eq!(e.sggi().unwrap().rank(), 6);
    assert!(catalog::is_family("T5.11") && !catalog::is_family("T5.9"));
}

#[test]
fn corrected_entry_carries_a_note() {
    let e = catalog::resolve("T3.5").unwrap();
    assert!(e.notes.is_some());
    assert_eq!(e.sggi().unwrap().group().order(), 36);
}
