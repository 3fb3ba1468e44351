#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stringc::classify::{enumerate, involution_class_reps, involutions, ClassifyConfig};
use stringc::{Perm, Sggi};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly chosen number of disjoint transpositions on random points.
pub fn random_involution(n: usize, rng: &mut impl Rng) -> Perm {
    let mut pts: Vec<usize> = (0..n).collect();
    pts.shuffle(rng);
    let k = rng.gen_range(1..=n / 2);
    let mut img: Vec<usize> = (0..n).collect();
    for c in pts.chunks(2).take(k) {
        img[c[0]] = c[1];
        img[c[1]] = c[0];
    }
    Perm::from_images(&img).unwrap()
}

/// Rejection sampling, generator by generator; restarts when a slot cannot be filled.
pub fn random_sggi(n: usize, r: usize, rng: &mut impl Rng) -> Sggi {
    'outer: loop {
        let mut gens: Vec<Perm> = Vec::with_capacity(r);
        for i in 0..r {
            let mut found = None;
            for _ in 0..500 {
                let g = random_involution(n, rng);
                if gens[..i.saturating_sub(1)].iter().all(|h| h.commutes_with(&g)) {
                    found = Some(g);
                    break;
                }
            }
            match found {
                Some(g) => gens.push(g),
                None => continue 'outer,
            }
        }
        return Sggi::new(n, gens).unwrap();
    }
}

/// Every sggi of degree `n` and rank `r` whose first generator is an
/// involution-class representative (so every sggi up to conjugacy).
pub fn sggi_up_to_conjugacy(n: usize, r: usize) -> Vec<Sggi> {
    let all = involutions(n);
    let mut out = Vec::new();
    let mut stack: Vec<Perm> = Vec::new();
    fn rec(n: usize, r: usize, all: &[Perm], stack: &mut Vec<Perm>, out: &mut Vec<Sggi>) {
        if stack.len() == r {
            out.push(Sggi::new(n, stack.clone()).unwrap());
            return;
        }
        let i = stack.len();
        for g in all {
            if stack[..i.saturating_sub(1)].iter().all(|h| h.commutes_with(g)) {
                stack.push(g.clone());
                rec(n, r, all, stack, out);
                stack.pop();
            }
        }
    }
    for first in involution_class_reps(n) {
        stack.push(first);
        rec(n, r, &all, &mut stack, &mut out);
        stack.pop();
    }
    out
}

/// Representatives of all string C-groups of `S_n`, every rank from 3 to n-1.
pub fn enumerated_cgroups(n: usize) -> Vec<Sggi> {
    let cfg = ClassifyConfig::default();
    (3..n).flat_map(|r| enumerate(n, r, &cfg).unwrap().representatives).collect()
}
