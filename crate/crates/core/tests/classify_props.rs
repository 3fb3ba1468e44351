mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use stringc::classify::{
    bijection_map, enumerate, enumerate_reference, equivalence_key, equivalent, ClassifyConfig,
};
use stringc::group::DEFAULT_CAP;
use stringc::sggi::CChecker;
use stringc::{Perm, Sggi};

fn cfg() -> ClassifyConfig {
    ClassifyConfig::default()
}

#[test]
fn no_string_cgroup_of_full_rank() {
    for n in 4..=6 {
        assert_eq!(enumerate(n, n, &cfg()).unwrap().count, 0, "S_{n}");
    }
}

#[test]
fn pruned_search_matches_reference_search() {
    for n in 4..=6 {
        for r in 3..n {
            let fast = enumerate(n, r, &cfg()).unwrap();
            assert!(fast.complete);
            assert_eq!(fast.count, enumerate_reference(n, r, DEFAULT_CAP), "S_{n} rank {r}");
        }
    }
}

#[test]
fn small_table_counts() {
    let expected = [(4, 3, 2), (5, 3, 4), (5, 4, 1), (6, 3, 2), (6, 4, 4), (6, 5, 1), (7, 5, 1), (7, 6, 1)];
    for (n, r, count) in expected {
        assert_eq!(enumerate(n, r, &cfg()).unwrap().count, count, "S_{n} rank {r}");
    }
    // up to conjugacy and duality only, degree 6 has more classes
    assert_eq!(enumerate(6, 4, &cfg()).unwrap().stats.inner_count, 7);
}

#[test]
fn prunes_never_discard_a_cgroup() {
    let c = ClassifyConfig { verify_prunes: true, ..cfg() };
    for (n, r) in [(4, 3), (5, 3), (5, 4), (6, 3), (6, 4), (6, 5), (7, 5), (7, 6)] {
        let res = enumerate(n, r, &c).unwrap();
        assert_eq!(res.stats.prune_violations, 0, "S_{n} rank {r}: {:?}", res.stats);
    }
}

#[test]
fn worker_count_does_not_change_the_output() {
    for (n, r) in [(6, 4), (7, 4)] {
        let runs: Vec<Vec<Sggi>> = [1, 2, 4]
            .into_iter()
            .map(|w| enumerate(n, r, &ClassifyConfig { workers: Some(w), ..cfg() }).unwrap().representatives)
            .collect();
        assert_eq!(runs[0], runs[1]);
        assert_eq!(runs[0], runs[2]);
    }
}

#[test]
fn representatives_are_pairwise_inequivalent_cgroups() {
    let checker = CChecker::default();
    for (n, r) in [(5, 3), (7, 4)] {
        let reps = enumerate(n, r, &cfg()).unwrap().representatives;
        for (i, a) in reps.iter().enumerate() {
            assert!(checker.check(a).is_true());
            assert_eq!(a.group().identify().kind, stringc::GroupKind::Symmetric(n));
            for b in &reps[..i] {
                assert!(!equivalent(a, b));
            }
        }
    }
}

#[test]
fn bijection_lands_in_the_next_degree() {
    let checker = CChecker::default();
    for (kappa, n) in [(1, 5), (1, 6)] {
        let src = enumerate(n, n - kappa, &cfg()).unwrap();
        let dst = enumerate(n + 1, n + 1 - kappa, &cfg()).unwrap();
        let (images, injective) = bijection_map(&src).unwrap();
        assert!(injective);
        assert_eq!(images.len(), src.count);
        let outer = n + 1 == 6;
        let targets: Vec<Vec<u8>> = dst.representatives.iter().map(|s| equivalence_key(s, outer)).collect();
        for img in &images {
            let s = &img.image;
            assert_eq!((s.degree(), s.rank()), (n + 1, n + 1 - kappa));
            assert!(checker.check(s).is_true());
            assert!(targets.contains(&equivalence_key(s, outer)));
        }
        assert_eq!(src.count, dst.count);
    }
}

fn random_perm(n: usize, seed: u64) -> Perm {
    let mut img: Vec<usize> = (0..n).collect();
    img.shuffle(&mut common::rng(seed));
    Perm::from_images(&img).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn equivalence_is_reflexive_symmetric_and_dual_compatible(idx in 0usize..35, seed in any::<u64>(), dual in any::<bool>()) {
        let reps = enumerate(7, 3, &cfg()).unwrap().representatives;
        let p = &reps[idx % reps.len()];
        prop_assert!(equivalent(p, p));
        let g = random_perm(7, seed);
        let q = if dual { p.conj(&g).dual() } else { p.conj(&g) };
        prop_assert!(equivalent(p, &q));
        prop_assert!(equivalent(&q, p));
        prop_assert!(equivalent(&p.dual(), &q.dual()));
        prop_assert_eq!(equivalence_key(p, false), equivalence_key(&q, false));
        let other = &reps[(idx + 1) % reps.len()];
        prop_assert!(!equivalent(other, &q));
        prop_assert_ne!(equivalence_key(other, false), equivalence_key(&q, false));
    }
}
