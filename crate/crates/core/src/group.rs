//! Permutation groups: stabilizer chains, orbits, blocks, intersections and
//! simultaneous conjugacy.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::perm::Perm;

pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("resource cap of {cap} exceeded")]
    CapExceeded { cap: u128 },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    // transversal[x] maps `point` to x
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(n: usize, point: usize) -> Level {
        let mut l = Level { point, gens: Vec::new(), orbit: Vec::new(), transversal: vec![None; n] };
        l.rebuild(n);
        l
    }

    fn rebuild(&mut self, n: usize) {
        self.transversal = vec![None; n];
        self.transversal[self.point] = Some(Perm::identity(n));
        self.orbit = vec![self.point];
        let mut k = 0;
        while k < self.orbit.len() {
            let x = self.orbit[k];
            for s in &self.gens {
                let y = s.apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(s);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            k += 1;
        }
    }
}

#[derive(Debug, Clone)]
struct Chain {
    levels: Vec<Level>,
}

impl Chain {
    /// Deterministic Schreier–Sims. Base points beyond `prefix` are the smallest
    /// points moved by the element that forced a new level.
    fn build(n: usize, gens: &[Perm], prefix: &[usize]) -> Chain {
        let mut levels: Vec<Level> = prefix.iter().map(|&b| Level::new(n, b)).collect();
        let mut chain = Chain { levels: Vec::new() };
        for g in gens {
            if g.is_identity() {
                continue;
            }
            if levels.iter().all(|l| g.apply(l.point) == l.point) {
                levels.push(Level::new(n, g.support()[0]));
            }
            // a generator belongs to level l if it fixes every earlier base point
            for l in 0..levels.len() {
                levels[l].gens.push(g.clone());
                if g.apply(levels[l].point) != levels[l].point {
                    break;
                }
            }
        }
        for l in levels.iter_mut() {
            l.rebuild(n);
        }
        chain.levels = levels;
        if chain.levels.is_empty() {
            return chain;
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut hit: Option<(Perm, usize)> = None;
            'scan: for oi in 0..chain.levels[lvl].orbit.len() {
                let x = chain.levels[lvl].orbit[oi];
                for si in 0..chain.levels[lvl].gens.len() {
                    let level = &chain.levels[lvl];
                    let s = &level.gens[si];
                    let y = s.apply(x);
                    let ux = level.transversal[x].as_ref().unwrap();
                    let uy = level.transversal[y].as_ref().unwrap();
                    let us = ux.then(s);
                    if &us == uy {
                        continue;
                    }
                    let g = us.then(&uy.inverse());
                    let (h, j) = chain.strip_from(g, lvl + 1);
                    if j < chain.levels.len() || !h.is_identity() {
                        hit = Some((h, j));
                        break 'scan;
                    }
                }
            }
            match hit {
                None => i -= 1,
                Some((h, j)) => {
                    if j == chain.levels.len() {
                        let b = h.support()[0];
                        chain.levels.push(Level::new(n, b));
                    }
                    for l in lvl + 1..=j {
                        chain.levels[l].gens.push(h.clone());
                        chain.levels[l].rebuild(n);
                    }
                    i = j as isize;
                }
            }
        }
        chain
    }

    /// Sifts `g` starting at `start`; returns the residue and the level where it stopped.
    fn strip_from(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let x = g.apply(level.point);
            match &level.transversal[x] {
                None => return (g, l),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    fn contains(&self, g: &Perm) -> bool {
        let (h, j) = self.strip_from(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }
}

/// A permutation group given by generators; the stabilizer chain is built once, on demand.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<Chain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup { degree: self.degree, gens: self.gens.clone(), chain }
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> PermGroup {
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        PermGroup { degree, gens, chain: OnceLock::new() }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new())
    }

    pub fn symmetric(degree: usize) -> PermGroup {
        let gens = (0..degree.saturating_sub(1)).map(|i| Perm::transposition(degree, i, i + 1)).collect();
        PermGroup::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    fn chain(&self) -> &Chain {
        self.chain.get_or_init(|| Chain::build(self.degree, &self.gens, &[]))
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(|g| g.is_identity())
    }

    /// Orbit partition, each orbit sorted, orbits ordered by their minima.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree).filter(|&x| self.gens.iter().all(|g| g.apply(x) == x)).collect()
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree).filter(|&x| self.gens.iter().any(|g| g.apply(x) != x)).collect()
    }

    /// Smallest block containing `a` and `b` in the partition it generates.
    pub fn minimal_block(&self, a: usize, b: usize) -> Vec<usize> {
        let mut uf = UnionFind::new(self.degree);
        uf.union(a, b);
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            for g in &self.gens {
                let (u, v) = (g.apply(x), g.apply(y));
                if uf.union(u, v) {
                    queue.push((u, v));
                }
            }
        }
        let r = uf.find(a);
        (0..self.degree).filter(|&x| uf.find(x) == r).collect()
    }

    /// `None` for intransitive groups.
    pub fn is_primitive(&self) -> Option<bool> {
        if !self.is_transitive() {
            return None;
        }
        if self.degree <= 2 {
            return Some(true);
        }
        Some((1..self.degree).all(|b| self.minimal_block(0, b).len() == self.degree))
    }

    /// All elements, in chain order. Only sensible for small groups.
    pub fn elements(&self) -> Vec<Perm> {
        let chain = self.chain();
        let mut out = vec![Perm::identity(self.degree)];
        for level in chain.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &x in &level.orbit {
                    next.push(h.then(level.transversal[x].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }

    /// Calls `f` on every element until it returns false.
    fn for_each_element(&self, mut f: impl FnMut(&Perm) -> bool) {
        let chain = self.chain();
        let k = chain.levels.len();
        fn rec(chain: &Chain, l: usize, acc: &Perm, f: &mut dyn FnMut(&Perm) -> bool) -> bool {
            if l == usize::MAX {
                return f(acc);
            }
            let level = &chain.levels[l];
            for &x in &level.orbit {
                let g = acc.then(level.transversal[x].as_ref().unwrap());
                let next = if l == 0 { usize::MAX } else { l - 1 };
                if !rec(chain, next, &g, f) {
                    return false;
                }
            }
            true
        }
        if k == 0 {
            f(&Perm::identity(self.degree));
        } else {
            rec(chain, k - 1, &Perm::identity(self.degree), &mut f);
        }
    }

    pub fn intersection(&self, other: &PermGroup, cap: u128) -> Result<PermGroup, GroupError> {
        if self.degree != other.degree {
            return Err(GroupError::DegreeMismatch(self.degree, other.degree));
        }
        let (small, big) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        if small.order() <= cap {
            let mut k = PermGroup::trivial(self.degree);
            small.for_each_element(|g| {
                if big.contains(g) && !k.contains(g) {
                    let mut gens = k.gens.clone();
                    gens.push(g.clone());
                    k = PermGroup::new(self.degree, gens);
                }
                true
            });
            return Ok(k);
        }
        backtrack_intersection(self, other, cap)
    }

    pub fn intersection_order(&self, other: &PermGroup, cap: u128) -> Result<u128, GroupError> {
        if self.degree != other.degree {
            return Err(GroupError::DegreeMismatch(self.degree, other.degree));
        }
        let (small, big) = if self.order() <= other.order() { (self, other) } else { (other, self) };
        if small.order() <= cap {
            let mut count = 0u128;
            small.for_each_element(|g| {
                if big.contains(g) {
                    count += 1;
                }
                true
            });
            return Ok(count);
        }
        Ok(backtrack_intersection(self, other, cap)?.order())
    }

    pub fn identify(&self) -> GroupIdentity {
        let order = self.order();
        let support = self.support();
        let m = support.len();
        let orbits = self.orbits();
        let support_orbits = orbits.iter().filter(|o| o.len() > 1).count();
        let transitive_on_support = m >= 2 && support_orbits == 1;
        let kind = if transitive_on_support && Some(order) == factorial(m) {
            GroupKind::Symmetric(m)
        } else if transitive_on_support
            && factorial(m).map(|f| f / 2) == Some(order)
            && self.gens.iter().all(|g| !g.is_odd())
        {
            GroupKind::Alternating(m)
        } else {
            GroupKind::Other
        };
        GroupIdentity { kind, order, transitive: orbits.len() <= 1, primitive: self.is_primitive() }
    }
}

pub fn factorial(m: usize) -> Option<u128> {
    (1..=m as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    Symmetric(usize),
    Alternating(usize),
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupIdentity {
    pub kind: GroupKind,
    pub order: u128,
    pub transitive: bool,
    pub primitive: Option<bool>,
}

impl std::fmt::Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupKind::Symmetric(m) => write!(f, "Symmetric({m})"),
            GroupKind::Alternating(m) => write!(f, "Alternating({m})"),
            GroupKind::Other => f.write_str("Other"),
        }
    }
}

pub fn build_chain(gens: Vec<Perm>, degree: usize) -> PermGroup {
    let g = PermGroup::new(degree, gens);
    g.order();
    g
}

pub fn orbits_of(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for g in gens {
        for x in 0..n {
            uf.union(x, g.apply(x));
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        by_root[uf.find(x)].push(x);
    }
    let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|o| !o.is_empty()).collect();
    out.sort_by_key(|o| o[0]);
    out
}

/// Search nodes the backtrack may visit per unit of enumeration cap.
pub const NODES_PER_CAP: u128 = 100;

/// Subgroup intersection by backtracking over the base images of `g`'s chain,
/// pruned by the chain of `h` built on the same base. Visits at most
/// `cap * NODES_PER_CAP` nodes.
fn backtrack_intersection(g: &PermGroup, h: &PermGroup, cap: u128) -> Result<PermGroup, GroupError> {
    let budget = cap.saturating_mul(NODES_PER_CAP);
    let n = g.degree;
    let gc = g.chain();
    let base = gc.base();
    let hc = Chain::build(n, &h.gens, &base);
    let k = base.len();
    let mut found: Vec<Perm> = Vec::new();
    let mut nodes: u128 = 0;

    struct Ctx<'a> {
        gc: &'a Chain,
        hc: &'a Chain,
        h: &'a PermGroup,
        nodes: &'a mut u128,
        cap: u128,
    }

    // `t` is the partial element of G; `v` an element of H agreeing with `t`
    // on the base points before level `m`.
    fn search(ctx: &mut Ctx, m: usize, t: &Perm, v: &Perm) -> Result<Option<Perm>, GroupError> {
        *ctx.nodes += 1;
        if *ctx.nodes > ctx.cap {
            return Err(GroupError::CapExceeded { cap: ctx.cap / NODES_PER_CAP });
        }
        if m == ctx.gc.levels.len() {
            return Ok(ctx.h.contains(t).then(|| t.clone()));
        }
        let level = &ctx.gc.levels[m];
        let hl = &ctx.hc.levels[m];
        let vinv = v.inverse();
        let mut cands: Vec<(usize, usize)> = level.orbit.iter().map(|&x| (t.apply(x), x)).collect();
        cands.sort();
        for (img, x) in cands {
            let y = vinv.apply(img);
            let hv = match &hl.transversal[y] {
                None => continue,
                Some(u) => u.then(v),
            };
            let nt = level.transversal[x].as_ref().unwrap().then(t);
            if let Some(e) = search(ctx, m + 1, &nt, &hv)? {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    for l in (0..k).rev() {
        let level = &gc.levels[l];
        let mut kgroup = PermGroup::new(n, found.clone());
        for &x in &level.orbit {
            if x == level.point {
                continue;
            }
            // already reachable by what we have
            let reach = orbit_of_point(&kgroup, level.point, &base[..l]);
            if reach.contains(&x) {
                continue;
            }
            let t = level.transversal[x].as_ref().unwrap().clone();
            // H must map base[..l] to themselves and base[l] to x
            let mut v = Perm::identity(n);
            let mut ok = true;
            for j in 0..=l {
                let target = if j == l { x } else { base[j] };
                let y = v.inverse().apply(target);
                match &hc.levels[j].transversal[y] {
                    None => {
                        ok = false;
                        break;
                    }
                    Some(u) => v = u.then(&v),
                }
            }
            if !ok {
                continue;
            }
            let mut ctx = Ctx { gc, hc: &hc, h, nodes: &mut nodes, cap: budget };
            if let Some(e) = search(&mut ctx, l + 1, &t, &v)? {
                found.push(e);
                kgroup = PermGroup::new(n, found.clone());
            }
        }
    }
    Ok(PermGroup::new(n, found))
}

/// Orbit of `p` under the pointwise stabilizer of `fixed` inside `k`.
fn orbit_of_point(k: &PermGroup, p: usize, fixed: &[usize]) -> HashSet<usize> {
    let stab: Vec<Perm> = k.gens.iter().filter(|g| fixed.iter().all(|&b| g.apply(b) == b)).cloned().collect();
    let mut seen = HashSet::from([p]);
    let mut q = VecDeque::from([p]);
    while let Some(x) = q.pop_front() {
        for g in &stab {
            let y = g.apply(x);
            if seen.insert(y) {
                q.push_back(y);
            }
        }
    }
    seen
}

/// Finds `g` in `ambient` with `a[i]^g == b[i]` for all `i`, or `None`.
///
/// Backtracks over images of the minima of the orbits of `<a>`, in ascending
/// order; an image choice propagates along the generators, so each choice fixes
/// the conjugator on a whole orbit.
pub fn tuple_conjugator(a: &[Perm], b: &[Perm], ambient: &PermGroup) -> Option<Perm> {
    if a.len() != b.len() {
        return None;
    }
    let n = ambient.degree();
    if a.iter().chain(b).any(|p| p.degree() != n) {
        return None;
    }
    // cycle types must agree
    for (x, y) in a.iter().zip(b) {
        let mut cx: Vec<usize> = x.cycles().iter().map(|c| c.len()).collect();
        let mut cy: Vec<usize> = y.cycles().iter().map(|c| c.len()).collect();
        cx.sort();
        cy.sort();
        if cx != cy {
            return None;
        }
    }
    let orbits = orbits_of(n, a);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn rec(
        k: usize,
        orbits: &[Vec<usize>],
        a: &[Perm],
        b: &[Perm],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ambient: &PermGroup,
    ) -> Option<Perm> {
        let n = map.len();
        if k == orbits.len() {
            let g = Perm::from_images(map).ok()?;
            return ambient.contains(&g).then_some(g);
        }
        let start = orbits[k][0];
        for y in 0..n {
            if used[y] {
                continue;
            }
            // propagate start -> y along the generators
            let mut assigned = vec![start];
            map[start] = y;
            used[y] = true;
            let mut ok = true;
            let mut qi = 0;
            while ok && qi < assigned.len() {
                let x = assigned[qi];
                qi += 1;
                for (p, q) in a.iter().zip(b) {
                    let (x2, y2) = (p.apply(x), q.apply(map[x]));
                    if map[x2] == usize::MAX {
                        if used[y2] {
                            ok = false;
                            break;
                        }
                        map[x2] = y2;
                        used[y2] = true;
                        assigned.push(x2);
                    } else if map[x2] != y2 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                if let Some(g) = rec(k + 1, orbits, a, b, map, used, ambient) {
                    return Some(g);
                }
            }
            for &x in &assigned {
                used[map[x]] = false;
                map[x] = usize::MAX;
            }
        }
        None
    }

    rec(0, &orbits, a, b, &mut map, &mut used, ambient)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Merges and reports whether the two were in different classes.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // smaller root wins, keeping representatives deterministic
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }
}

/// Brute-force closure of the generated group, `None` if larger than `limit`.
pub fn closure(degree: usize, gens: &[Perm], limit: usize) -> Option<HashSet<Perm>> {
    let id = Perm::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut q = VecDeque::from([id]);
    while let Some(x) = q.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                q.push_back(y);
            }
        }
    }
    Some(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| p(s, n)).collect())
    }

    #[test]
    fn small_orders() {
        assert_eq!(grp(4, &["(1,2)", "(2,3)", "(3,4)"]).order(), 24);
        assert_eq!(PermGroup::trivial(5).order(), 1);
        assert_eq!(grp(5, &["(1,2,3,4,5)", "(1,2)"]).order(), 120);
        assert_eq!(grp(8, &["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)"]).order(), 8);
        let gens: Vec<Perm> = ["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"].iter().map(|s| p(s, 8)).collect();
        assert_eq!(PermGroup::new(8, gens.clone()).order() as usize, closure(8, &gens, 100000).unwrap().len());
        assert_eq!(PermGroup::symmetric(9).order(), 362880);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(grp(3, &["(1,2)"]).orbits(), vec![vec![0, 1], vec![2]]);
        assert_eq!(grp(4, &["(1,2)", "(2,3)", "(3,4)"]).orbits(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(grp(4, &["(1,2)", "(3,4)"]).orbits(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn membership() {
        let g = grp(5, &["(1,2,3)", "(3,4,5)"]);
        assert_eq!(g.order(), 60);
        assert!(g.contains(&p("(1,2)(3,4)", 5)));
        assert!(!g.contains(&p("(1,2)", 5)));
    }

    #[test]
    fn simple_intersections() {
        let a = grp(4, &["(1,2)"]);
        let b = grp(4, &["(1,2)", "(3,4)"]);
        assert_eq!(a.intersection(&b, DEFAULT_CAP).unwrap().order(), 2);
        assert_eq!(b.intersection(&b, DEFAULT_CAP).unwrap().order(), 4);
        // force the backtrack path
        let s = PermGroup::symmetric(7);
        let t = grp(7, &["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"]);
        let k = s.intersection(&t, 5).unwrap();
        assert_eq!(k.order(), 14);
        let u = grp(7, &["(1,2)", "(2,3)", "(4,5)", "(5,6)"]);
        let v = grp(7, &["(1,2,3,4)", "(1,2)", "(6,7)"]);
        assert_eq!(u.intersection(&v, 3).unwrap().order(), u.intersection(&v, DEFAULT_CAP).unwrap().order());
        let c9 = grp(9, &["(1,2,3,4,5,6,7,8,9)", "(1,2)(3,4)(5,6)"]);
        assert!(matches!(PermGroup::symmetric(9).intersection(&c9, 0), Err(GroupError::CapExceeded { .. })));
    }

    #[test]
    fn conjugator_examples() {
        let s3 = PermGroup::symmetric(3);
        let a = [p("(1,2)", 3), p("(2,3)", 3)];
        let b = [p("(1,2)", 3), p("(1,3)", 3)];
        let g = tuple_conjugator(&a, &b, &s3).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(&x.conj(&g), y);
        }
        let brute: Vec<Perm> =
            s3.elements().into_iter().filter(|g| a.iter().zip(&b).all(|(x, y)| &x.conj(g) == y)).collect();
        assert!(brute.contains(&g));
        assert!(tuple_conjugator(&a, &[p("(1,2)", 3), p("(1,2)", 3)], &s3).is_none());
    }

    #[test]
    fn identify_examples() {
        let id = grp(5, &["(1,2)", "(2,3)", "(3,4)", "(4,5)"]).identify();
        assert_eq!(id.kind, GroupKind::Symmetric(5));
        assert_eq!(id.primitive, Some(true));
        let a5 = grp(5, &["(1,2,3)", "(3,4,5)"]).identify();
        assert_eq!(a5.kind, GroupKind::Alternating(5));
        let d4 = grp(4, &["(1,2)(3,4)", "(2,3)"]).identify();
        assert_eq!(d4.kind, GroupKind::Other);
        assert_eq!(d4.primitive, Some(false));
        let s2 = grp(4, &["(1,2)"]).identify();
        assert_eq!(s2.kind, GroupKind::Symmetric(2));
        assert!(!s2.transitive);
        assert_eq!(s2.primitive, None);
    }
}
