mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use stringc::catalog;
use stringc::reps::{graph_of, sggi_of};
use stringc::sggi::CChecker;
use stringc::{PermRepGraph, Sggi};

#[test]
fn dual_preserves_the_verdict_on_small_strings() {
    let checker = CChecker::default();
    for n in 3..=6 {
        for r in 3..=4 {
            for s in common::sggi_up_to_conjugacy(n, r) {
                assert_eq!(checker.check(&s).is_true(), checker.check(&s.dual()).is_true(), "{s:?}");
                assert_eq!(s.dual().dual(), s);
            }
        }
    }
}

#[test]
fn dual_preserves_the_verdict_on_the_catalog() {
    let checker = CChecker::default();
    for e in catalog::all_entries() {
        let s = e.sggi().unwrap();
        let (a, b) = (checker.check(&s), checker.check(&s.dual()));
        assert_eq!(a.is_true(), b.is_true(), "{}", e.id);
        let mut rev = s.schlafli().unwrap();
        rev.reverse();
        assert_eq!(s.dual().schlafli().unwrap(), rev, "{}", e.id);
    }
}

/// Random label sets on string C-groups of higher rank: |G_J ∩ G_K| = |G_{J∩K}|.
#[test]
fn intersection_spot_checks() {
    let checker = CChecker::default();
    let mut pool: Vec<Sggi> = common::enumerated_cgroups(7);
    pool.extend(
        catalog::all_entries().into_iter().map(|e| e.sggi().unwrap()).filter(|s| s.rank() >= 5 && checker.check(s).is_true()),
    );
    assert!(pool.len() > 40);
    let mut rng = common::rng(7);
    for s in &pool {
        let r = s.rank();
        for _ in 0..10 {
            let mut labels: Vec<usize> = (0..r).collect();
            labels.shuffle(&mut rng);
            let j: Vec<usize> = labels.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
            let k: Vec<usize> = labels.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
            let both: Vec<usize> = j.iter().copied().filter(|x| k.contains(x)).collect();
            let inter = s.subgroup(&j).intersection_order(&s.subgroup(&k), 1 << 40).unwrap();
            assert_eq!(inter, s.subgroup(&both).order(), "{s:?} J={j:?} K={k:?}");
        }
    }
}

#[test]
fn schlafli_of_simplex() {
    assert_eq!(Sggi::simplex(6).schlafli().unwrap(), vec![3, 3, 3, 3]);
}

#[test]
fn catalog_graphs_round_trip() {
    for e in catalog::all_entries() {
        let g = &e.graph;
        g.validate().unwrap_or_else(|err| panic!("{}: {err}", e.id));
        assert_eq!(&graph_of(&sggi_of(g).unwrap()), g, "{}", e.id);
        let once = PermRepGraph::parse_dsl(&g.to_dsl()).unwrap();
        assert_eq!(PermRepGraph::parse_dsl(&once.to_dsl()).unwrap(), once, "{}", e.id);
        assert_eq!(&once, g);
        assert_eq!(&PermRepGraph::parse_dot(&g.to_dot()).unwrap(), g, "{}", e.id);
        let s = e.sggi().unwrap();
        assert_eq!(Sggi::parse(&s.to_text()).unwrap(), s, "{}", e.id);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_strings_round_trip_through_graphs(seed in any::<u64>(), n in 2usize..10, r in 1usize..6) {
        let mut rng = common::rng(seed);
        let s = common::random_sggi(n, r, &mut rng);
        let g = graph_of(&s);
        prop_assert!(g.validate().is_ok());
        prop_assert_eq!(g.rank(), r);
        prop_assert_eq!(sggi_of(&g).unwrap(), s.clone());
        prop_assert_eq!(graph_of(&sggi_of(&g).unwrap()), g.clone());
        prop_assert_eq!(PermRepGraph::parse_dsl(&g.to_dsl()).unwrap(), g);
    }
}
