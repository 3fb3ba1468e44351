//! Exhaustive classification of string C-groups of `S_n` up to isomorphism and duality.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::extend::{rd_extend, ExtendError};
use crate::fracture::split_at;
use crate::group::{factorial, orbits_of, PermGroup, DEFAULT_CAP};
use crate::perm::Perm;
use crate::reps::graph_of;
use crate::sggi::{CChecker, CVerdict, Sggi};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("degree {n} exceeds the configured maximum {max}")]
    DegreeTooLarge { n: usize, max: usize },
    #[error("rank {0} is below 3")]
    RankTooSmall(usize),
    #[error("representative {index} has no perfect split with a trivial side away from the end labels")]
    EmptyInteriorPSet { index: usize, sggi: String },
    #[error(transparent)]
    Extend(#[from] ExtendError),
}

#[derive(Debug, Clone)]
pub struct ClassifyConfig {
    pub cap: u128,
    pub max_degree: usize,
    /// `None` uses rayon's default pool.
    pub workers: Option<usize>,
    /// Re-explores every pruned node without pruning and counts accepted tuples found there.
    pub verify_prunes: bool,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig { cap: DEFAULT_CAP, max_degree: 9, workers: None, verify_prunes: false }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub candidates_tested: u64,
    pub prunes: BTreeMap<String, u64>,
    pub indeterminate: u64,
    /// accepted tuples found below pruned nodes (only with `verify_prunes`)
    pub prune_violations: u64,
    /// classes counted up to conjugacy and duality only (differs from `count` only for degree 6)
    pub inner_count: usize,
}

impl SearchStats {
    fn prune(&mut self, why: &str) {
        *self.prunes.entry(why.to_string()).or_insert(0) += 1;
    }

    fn merge(&mut self, o: SearchStats) {
        self.nodes += o.nodes;
        self.candidates_tested += o.candidates_tested;
        self.indeterminate += o.indeterminate;
        self.prune_violations += o.prune_violations;
        for (k, v) in o.prunes {
            *self.prunes.entry(k).or_insert(0) += v;
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClassificationResult {
    pub degree: usize,
    pub rank: usize,
    pub representatives: Vec<Sggi>,
    pub count: usize,
    pub complete: bool,
    pub stats: SearchStats,
}

impl ClassificationResult {
    pub fn to_json(&self) -> serde_json::Value {
        let reps: Vec<serde_json::Value> = self
            .representatives
            .iter()
            .map(|s| {
                serde_json::json!({
                    "generators": s.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "schlafli": s.schlafli().unwrap_or_default(),
                    "graph_dsl": graph_of(s).to_dsl(),
                })
            })
            .collect();
        serde_json::json!({
            "degree": self.degree,
            "rank": self.rank,
            "count": self.count,
            "complete": self.complete,
            "representatives": reps,
            "stats": self.stats,
        })
    }
}

/// All involutions of `S_n`, ordered by image list.
pub fn involutions(n: usize) -> Vec<Perm> {
    fn rec(n: usize, img: &mut Vec<usize>, x: usize, out: &mut Vec<Perm>) {
        if x == n {
            out.push(Perm::from_images(img).unwrap());
            return;
        }
        if img[x] != usize::MAX {
            return rec(n, img, x + 1, out);
        }
        img[x] = x;
        rec(n, img, x + 1, out);
        for y in x + 1..n {
            if img[y] == usize::MAX {
                img[x] = y;
                img[y] = x;
                rec(n, img, x + 1, out);
                img[y] = usize::MAX;
            }
        }
        img[x] = usize::MAX;
    }
    let mut out = Vec::new();
    rec(n, &mut vec![usize::MAX; n], 0, &mut out);
    out.retain(|p| !p.is_identity());
    out.sort();
    out
}

/// `(1,2)(3,4)...` with `k` transpositions, for `k = 1..n/2`.
pub fn involution_class_reps(n: usize) -> Vec<Perm> {
    (1..=n / 2)
        .map(|k| {
            let cycles: Vec<Vec<usize>> = (0..k).map(|t| vec![2 * t, 2 * t + 1]).collect();
            Perm::from_cycles(n, &cycles).unwrap()
        })
        .collect()
}

/// Canonical form of a tuple under simultaneous conjugation, valid when the
/// tuple generates a transitive group: breadth-first relabelling from every
/// start point, keeping the smallest result.
pub fn canonical_form(gens: &[Perm]) -> Vec<u8> {
    let n = gens.first().map(|g| g.degree()).unwrap_or(0);
    let mut best: Option<Vec<u8>> = None;
    let mut label = vec![u8::MAX; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        label.iter_mut().for_each(|l| *l = u8::MAX);
        order.clear();
        label[start] = 0;
        order.push(start);
        let mut k = 0;
        while k < order.len() {
            let x = order[k];
            for g in gens {
                let y = g.apply(x);
                if label[y] == u8::MAX {
                    label[y] = order.len() as u8;
                    order.push(y);
                }
            }
            k += 1;
        }
        if order.len() != n {
            // not transitive: fall back to the raw tuple, which is still a valid (finer) key
            return gens.iter().flat_map(|g| g.raw().to_vec()).collect();
        }
        let mut form = Vec::with_capacity(n * gens.len());
        for g in gens {
            for &x in &order {
                form.push(label[g.apply(x)]);
            }
        }
        if best.as_ref().map_or(true, |b| form < *b) {
            best = Some(form);
        }
    }
    best.unwrap_or_default()
}

/// An outer automorphism of `S_6`, tabulated on all 720 elements.
pub fn s6_outer_automorphism() -> &'static HashMap<Perm, Perm> {
    static TABLE: OnceLock<HashMap<Perm, Perm>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = 6;
        let s: Vec<Perm> = (0..5).map(|i| Perm::transposition(n, i, i + 1)).collect();
        let triples: Vec<Perm> = involutions(n).into_iter().filter(|p| p.transpositions().len() == 3).collect();
        // images of the Coxeter generators must satisfy the Coxeter relations
        fn rec(t: &mut Vec<Perm>, triples: &[Perm]) -> bool {
            if t.len() == 5 {
                return true;
            }
            for c in triples {
                let ok = t.iter().enumerate().all(|(j, p)| {
                    let o = p.then(c).order();
                    if j + 1 == t.len() {
                        o == 3
                    } else {
                        o == 2
                    }
                });
                if ok {
                    t.push(c.clone());
                    if rec(t, triples) {
                        return true;
                    }
                    t.pop();
                }
            }
            false
        }
        let mut t = Vec::new();
        assert!(rec(&mut t, &triples), "S_6 has an outer automorphism");
        let mut table = HashMap::new();
        let id = Perm::identity(n);
        table.insert(id.clone(), id.clone());
        let mut queue = vec![id];
        while let Some(g) = queue.pop() {
            let img = table[&g].clone();
            for (si, ti) in s.iter().zip(&t) {
                let h = g.then(si);
                if !table.contains_key(&h) {
                    table.insert(h.clone(), img.then(ti));
                    queue.push(h);
                }
            }
        }
        assert_eq!(table.len(), 720);
        table
    })
}

/// Equivalence key: the least canonical form over the tuple, its dual and,
/// when `outer` is set (degree 6), their images under the outer automorphism.
pub fn equivalence_key(s: &Sggi, outer: bool) -> Vec<u8> {
    let mut forms = vec![canonical_form(s.gens()), canonical_form(s.dual().gens())];
    if outer && s.degree() == 6 {
        let phi = s6_outer_automorphism();
        for t in [s.clone(), s.dual()] {
            let img: Vec<Perm> = t.gens().iter().map(|g| phi[g].clone()).collect();
            forms.push(canonical_form(&img));
        }
    }
    forms.into_iter().min().unwrap()
}

/// Whether two strings are equivalent: conjugate in `S_n` to each other or to the dual.
pub fn equivalent(a: &Sggi, b: &Sggi) -> bool {
    if a.degree() != b.degree() || a.rank() != b.rank() {
        return false;
    }
    let sn = PermGroup::symmetric(a.degree());
    crate::group::tuple_conjugator(a.gens(), b.gens(), &sn).is_some()
        || crate::group::tuple_conjugator(a.gens(), b.dual().gens(), &sn).is_some()
}

struct Search<'a> {
    n: usize,
    r: usize,
    invs: &'a [Perm],
    checker: &'a CChecker,
    fracture_regime: bool,
    n_fact: u128,
    verify: bool,
}

enum Prune {
    Keep,
    Cut(&'static str),
}

impl<'a> Search<'a> {
    /// Cheap-to-expensive prefix tests; the prefix has `len` generators.
    fn prefix_test(&self, prefix: &[Perm], stats: &mut SearchStats) -> Prune {
        let k = prefix.len();
        let last = &prefix[k - 1];
        if k >= 2 {
            // adjacent generators commuting splits G as a direct product; S_n (n >= 3) is indecomposable
            if last.commutes_with(&prefix[k - 2]) {
                return Prune::Cut("adjacent_commute");
            }
        }
        if k < self.r {
            let g = PermGroup::new(self.n, prefix.to_vec());
            // string C-groups satisfy rho_{r-1} not in G_{r-1}, so a proper prefix is a proper subgroup
            if g.order() == self.n_fact {
                return Prune::Cut("prefix_full_group");
            }
            // in the fracture regime every G_i, hence every proper prefix, is intransitive
            if self.fracture_regime && orbits_of(self.n, prefix).len() == 1 {
                return Prune::Cut("prefix_transitive");
            }
        }
        if k >= 3 {
            // consecutive parabolics of string C-groups are string C-groups
            let s = Sggi::new_unchecked(self.n, prefix.to_vec());
            match self.checker.check(&s) {
                CVerdict::True => {}
                CVerdict::False { .. } => return Prune::Cut("prefix_not_c"),
                CVerdict::Indeterminate { .. } => {
                    stats.indeterminate += 1;
                    return Prune::Cut("indeterminate");
                }
            }
        }
        Prune::Keep
    }

    /// Final filter for a full-length tuple.
    fn accept(&self, tuple: &[Perm], stats: &mut SearchStats) -> bool {
        stats.candidates_tested += 1;
        if orbits_of(self.n, tuple).len() != 1 {
            stats.prune("not_transitive");
            return false;
        }
        let g = PermGroup::new(self.n, tuple.to_vec());
        if g.order() != self.n_fact {
            stats.prune("not_symmetric");
            return false;
        }
        true
    }

    /// Candidates for position `k` given the prefix.
    fn candidates(&self, prefix: &[Perm]) -> Vec<&'a Perm> {
        let k = prefix.len();
        self.invs
            .iter()
            .filter(|c| (0..k.saturating_sub(1)).all(|j| c.commutes_with(&prefix[j])))
            .filter(|c| !prefix.contains(c))
            .collect()
    }

    /// Orbit representatives of `cands` under conjugation by `cent`, with the
    /// stabiliser of each representative.
    fn orbit_reps(&self, cands: &[&'a Perm], cent: &[Perm]) -> Vec<(&'a Perm, Vec<Perm>)> {
        if cent.is_empty() {
            return cands.iter().map(|&c| (c, Vec::new())).collect();
        }
        let index: HashMap<&Perm, usize> = cands.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut seen = vec![false; cands.len()];
        let mut out = Vec::new();
        for start in 0..cands.len() {
            if seen[start] {
                continue;
            }
            // orbit with transversal: trans[i] conjugates cands[start] to cands[orbit[i]]
            let mut orbit = vec![start];
            let mut trans = vec![Perm::identity(self.n)];
            let mut pos: HashMap<usize, usize> = HashMap::from([(start, 0)]);
            seen[start] = true;
            let mut q = 0;
            while q < orbit.len() {
                let x = orbit[q];
                for s in cent {
                    let y = index[&cands[x].conj(s)];
                    if !pos.contains_key(&y) {
                        pos.insert(y, orbit.len());
                        orbit.push(y);
                        trans.push(trans[q].then(s));
                        seen[y] = true;
                    }
                }
                q += 1;
            }
            // Schreier generators of the stabiliser, kept only when new
            let mut stab: Vec<Perm> = Vec::new();
            let mut sg = PermGroup::new(self.n, Vec::new());
            for (qi, &x) in orbit.iter().enumerate() {
                for s in cent {
                    let y = index[&cands[x].conj(s)];
                    let g = trans[qi].then(s).then(&trans[pos[&y]].inverse());
                    if !g.is_identity() && !sg.contains(&g) {
                        stab.push(g);
                        sg = PermGroup::new(self.n, stab.clone());
                    }
                }
            }
            out.push((cands[start], stab));
        }
        out
    }

    fn dfs(&self, prefix: &mut Vec<Perm>, cent: &[Perm], found: &mut Vec<Sggi>, stats: &mut SearchStats) {
        stats.nodes += 1;
        if prefix.len() == self.r {
            if self.accept(prefix, stats) {
                let s = Sggi::new_unchecked(self.n, prefix.clone());
                match self.checker.check(&s) {
                    CVerdict::True => found.push(s),
                    CVerdict::False { .. } => stats.prune("not_c"),
                    CVerdict::Indeterminate { .. } => stats.indeterminate += 1,
                }
            }
            return;
        }
        let cands = self.candidates(prefix);
        for (c, stab) in self.orbit_reps(&cands, cent) {
            prefix.push(c.clone());
            match self.prefix_test(prefix, stats) {
                Prune::Keep => self.dfs(prefix, &stab, found, stats),
                Prune::Cut(why) => {
                    stats.prune(why);
                    if self.verify {
                        stats.prune_violations += self.unpruned_count(prefix) as u64;
                    }
                }
            }
            prefix.pop();
        }
    }

    /// Accepted completions of `prefix` with no pruning or symmetry reduction.
    fn unpruned_count(&self, prefix: &mut Vec<Perm>) -> usize {
        if prefix.len() == self.r {
            let mut scratch = SearchStats::default();
            let ok = self.accept(prefix, &mut scratch)
                && self.checker.check(&Sggi::new_unchecked(self.n, prefix.clone())).is_true();
            return ok as usize;
        }
        let mut total = 0;
        for c in self.candidates(prefix) {
            prefix.push(c.clone());
            total += self.unpruned_count(prefix);
            prefix.pop();
        }
        total
    }
}

fn centralizer_gens_of_class_rep(n: usize, rho: &Perm) -> Vec<Perm> {
    // C(rho) for rho = (1,2)...(2k-1,2k) is (C_2 wr S_k) x S_{n-2k}
    let k = rho.transpositions().len();
    let mut gens = Vec::new();
    if k >= 1 {
        gens.push(Perm::transposition(n, 0, 1));
    }
    if k >= 2 {
        gens.push(Perm::from_cycles(n, &[vec![0, 2], vec![1, 3]]).unwrap());
        let cyc_a: Vec<usize> = (0..k).map(|t| 2 * t).collect();
        let cyc_b: Vec<usize> = (0..k).map(|t| 2 * t + 1).collect();
        gens.push(Perm::from_cycles(n, &[cyc_a, cyc_b]).unwrap());
    }
    if n - 2 * k >= 2 {
        gens.push(Perm::transposition(n, 2 * k, 2 * k + 1));
        gens.push(Perm::from_cycles(n, &[(2 * k..n).collect()]).unwrap());
    }
    gens
}

fn outer_applies(n: usize) -> bool {
    n == 6
}

/// Classifies the string C-groups of `S_n` of rank `r` up to isomorphism and duality.
pub fn enumerate(n: usize, r: usize, cfg: &ClassifyConfig) -> Result<ClassificationResult, ClassifyError> {
    let checker = CChecker::new(cfg.cap);
    enumerate_with(n, r, cfg, &checker)
}

pub fn enumerate_with(
    n: usize,
    r: usize,
    cfg: &ClassifyConfig,
    checker: &CChecker,
) -> Result<ClassificationResult, ClassifyError> {
    if n > cfg.max_degree {
        return Err(ClassifyError::DegreeTooLarge { n, max: cfg.max_degree });
    }
    if r < 3 {
        return Err(ClassifyError::RankTooSmall(r));
    }
    let invs = involutions(n);
    let search = Search {
        n,
        r,
        invs: &invs,
        checker,
        // 2r >= n + 3, except in degree 6: twisting the simplex by the outer
        // automorphism gives a string C-group with a transitive G_{r-1}
        fracture_regime: 2 * r >= n + 3 && n != 6,
        n_fact: factorial(n).expect("degree fits"),
        verify: cfg.verify_prunes,
    };

    // depth-1 tasks: a class representative for rho_0 and an orbit representative for rho_1
    let mut tasks: Vec<(Perm, Perm, Vec<Perm>)> = Vec::new();
    let mut stats = SearchStats::default();
    for rho0 in involution_class_reps(n) {
        stats.nodes += 1;
        let cent = centralizer_gens_of_class_rep(n, &rho0);
        let prefix = vec![rho0.clone()];
        let cands = search.candidates(&prefix);
        for (c, stab) in search.orbit_reps(&cands, &cent) {
            tasks.push((rho0.clone(), c.clone(), stab));
        }
    }

    let run = |(rho0, rho1, stab): &(Perm, Perm, Vec<Perm>)| {
        let mut st = SearchStats::default();
        let mut found = Vec::new();
        let mut prefix = vec![rho0.clone(), rho1.clone()];
        match search.prefix_test(&prefix, &mut st) {
            Prune::Keep => search.dfs(&mut prefix, stab, &mut found, &mut st),
            Prune::Cut(why) => {
                st.prune(why);
                if search.verify {
                    st.prune_violations += search.unpruned_count(&mut prefix) as u64;
                }
            }
        }
        (found, st)
    };
    let results: Vec<(Vec<Sggi>, SearchStats)> = match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(|| tasks.par_iter().map(run).collect()),
        None => tasks.par_iter().map(run).collect(),
    };

    let outer = outer_applies(n);
    let mut reps = Vec::new();
    let mut keys = HashSet::new();
    let mut inner_keys = HashSet::new();
    for (found, st) in results {
        stats.merge(st);
        for s in found {
            if outer {
                inner_keys.insert(equivalence_key(&s, false));
            }
            if keys.insert(equivalence_key(&s, outer)) {
                reps.push(s);
            } else {
                stats.prune("duplicate");
            }
        }
    }
    stats.inner_count = if outer { inner_keys.len() } else { reps.len() };
    let complete = stats.indeterminate == 0;
    Ok(ClassificationResult { degree: n, rank: r, count: reps.len(), representatives: reps, complete, stats })
}

/// `|Σ^κ(n)|`.
pub fn sigma(n: usize, kappa: usize, cfg: &ClassifyConfig) -> Result<usize, ClassifyError> {
    if n < kappa + 3 {
        return Err(ClassifyError::RankTooSmall(n.saturating_sub(kappa)));
    }
    Ok(enumerate(n, n - kappa, cfg)?.count)
}

/// Slow reference: every string of involutions (no symmetry reduction, no
/// pruning beyond the commuting property), filtered and deduplicated.
pub fn enumerate_reference(n: usize, r: usize, cap: u128) -> usize {
    let invs = involutions(n);
    let checker = CChecker::new(cap);
    let nf = factorial(n).unwrap();
    fn rec(
        n: usize,
        r: usize,
        invs: &[Perm],
        prefix: &mut Vec<Perm>,
        out: &mut Vec<Sggi>,
        checker: &CChecker,
        nf: u128,
    ) {
        let k = prefix.len();
        if k == r {
            if orbits_of(n, prefix).len() == 1 && PermGroup::new(n, prefix.clone()).order() == nf {
                let s = Sggi::new_unchecked(n, prefix.clone());
                if checker.check(&s).is_true() {
                    out.push(s);
                }
            }
            return;
        }
        for c in invs {
            if (0..k.saturating_sub(1)).all(|j| c.commutes_with(&prefix[j])) {
                prefix.push(c.clone());
                rec(n, r, invs, prefix, out, checker, nf);
                prefix.pop();
            }
        }
    }
    let found: Vec<Vec<u8>> = invs
        .par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            rec(n, r, &invs, &mut vec![first.clone()], &mut out, &checker, nf);
            out.into_iter().map(|s| equivalence_key(&s, outer_applies(n))).collect::<Vec<_>>()
        })
        .collect();
    found.into_iter().collect::<HashSet<_>>().len()
}

/// Labels of perfect splits at which one side action is trivial.
pub fn p_set(s: &Sggi) -> Vec<usize> {
    (0..s.rank())
        .filter(|&i| match split_at(s, i) {
            Some(sp) => sp.perfect && (sp.alpha().is_identity() || sp.beta().is_identity()),
            None => false,
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct BijectionImage {
    pub source_index: usize,
    pub label: usize,
    pub image: Sggi,
}

/// Extends each representative at the least interior label of its P-set.
/// Also reports whether the images are pairwise inequivalent.
pub fn bijection_map(result: &ClassificationResult) -> Result<(Vec<BijectionImage>, bool), ClassifyError> {
    let mut out = Vec::new();
    for (idx, phi) in result.representatives.iter().enumerate() {
        let r = phi.rank();
        let j = p_set(phi).into_iter().find(|&i| i != 0 && i + 1 != r);
        let j = j.ok_or_else(|| ClassifyError::EmptyInteriorPSet { index: idx, sggi: phi.to_text() })?;
        let ext = rd_extend(phi, j)?;
        out.push(BijectionImage { source_index: idx, label: j, image: ext.result });
    }
    let outer = out.first().map_or(false, |b| outer_applies(b.image.degree()));
    let keys: HashSet<Vec<u8>> = out.iter().map(|b| equivalence_key(&b.image, outer)).collect();
    let injective = keys.len() == out.len();
    Ok((out, injective))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        assert_eq!(involutions(4).len(), 9);
        assert_eq!(involutions(6).len(), 75);
        assert_eq!(involutions(7).len(), 231);
    }

    #[test]
    fn canonical_form_is_conjugation_invariant() {
        let s = Sggi::simplex(5);
        let g = Perm::parse("(1,4,2)(3,5)", 5).unwrap();
        assert_eq!(canonical_form(s.gens()), canonical_form(s.conj(&g).gens()));
        let h = Sggi::from_cycles(4, &["(1,2)(3,4)", "(2,3)", "(3,4)"]).unwrap();
        assert_ne!(
            canonical_form(h.gens()),
            canonical_form(Sggi::simplex(4).gens())
        );
    }

    #[test]
    fn outer_automorphism_is_a_homomorphism() {
        let phi = s6_outer_automorphism();
        let a = Perm::parse("(1,2,3)", 6).unwrap();
        let b = Perm::parse("(2,5)(3,6)", 6).unwrap();
        assert_eq!(phi[&a.then(&b)], phi[&a].then(&phi[&b]));
        assert_eq!(phi[&Perm::parse("(1,2)", 6).unwrap()].transpositions().len(), 3);
    }

    #[test]
    fn small_counts() {
        let cfg = ClassifyConfig::default();
        // the tetrahedron and the hemicube
        assert_eq!(enumerate(4, 3, &cfg).unwrap().count, 2);
        assert_eq!(enumerate(5, 4, &cfg).unwrap().count, 1);
        assert_eq!(enumerate(5, 3, &cfg).unwrap().count, 4);
    }

    #[test]
    fn p_sets() {
        assert_eq!(p_set(&Sggi::simplex(4)), vec![0, 1, 2]);
        let h = Sggi::from_cycles(4, &["(1,2)(3,4)", "(2,3)", "(3,4)"]).unwrap();
        assert!(p_set(&h).contains(&0));
    }
}
