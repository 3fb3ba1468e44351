//! Fracture graphs, 2-fracture graphs, splits and split-attachability.

use serde_json::{json, Value};

use crate::group::{orbits_of, UnionFind};
use crate::perm::Perm;
use crate::reps::{graph_of, Edge};
use crate::sggi::{CChecker, Sggi};

/// `orbit_id[x]` for the group generated by all generators except `skip`.
fn orbit_ids(s: &Sggi, skip: Option<usize>) -> (Vec<usize>, usize) {
    let gens: Vec<Perm> =
        s.gens().iter().enumerate().filter(|(j, _)| Some(*j) != skip).map(|(_, g)| g.clone()).collect();
    let orbits = orbits_of(s.degree(), &gens);
    let mut id = vec![0; s.degree()];
    for (k, o) in orbits.iter().enumerate() {
        for &x in o {
            id[x] = k;
        }
    }
    (id, orbits.len())
}

/// Transpositions of `rho_i` whose points lie in different `G_i`-orbits.
pub fn crossing_edges(s: &Sggi, i: usize) -> Vec<Edge> {
    let (id, _) = orbit_ids(s, Some(i));
    s.gen(i).transpositions().into_iter().filter(|&(a, b)| id[a] != id[b]).map(|(a, b)| Edge::new(a, b, i)).collect()
}

/// One orbit-crossing edge per label, forming a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractureGraph {
    pub edges: Vec<Edge>,
}

/// The lexicographically first acyclic choice of one crossing edge per label, if any.
pub fn fracture_graph(s: &Sggi) -> Option<FractureGraph> {
    let r = s.rank();
    let (_, base_orbits) = orbit_ids(s, None);
    let mut cands = Vec::with_capacity(r);
    for i in 0..r {
        if orbit_ids(s, Some(i)).1 <= base_orbits {
            return None;
        }
        cands.push(crossing_edges(s, i));
    }

    fn acyclic(n: usize, edges: &[Edge]) -> bool {
        let mut uf = UnionFind::new(n);
        edges.iter().all(|e| uf.union(e.u, e.v))
    }

    fn rec(n: usize, cands: &[Vec<Edge>], chosen: &mut Vec<Edge>) -> bool {
        let i = chosen.len();
        if i == cands.len() {
            return true;
        }
        for e in &cands[i] {
            chosen.push(*e);
            if acyclic(n, chosen) && rec(n, cands, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::with_capacity(r);
    rec(s.degree(), &cands, &mut chosen).then_some(FractureGraph { edges: chosen })
}

/// Two crossing edges per label (the first two in edge order), if every label has two.
pub fn two_fracture_graph(s: &Sggi) -> Option<Vec<Edge>> {
    let mut out = Vec::with_capacity(2 * s.rank());
    for i in 0..s.rank() {
        let c = crossing_edges(s, i);
        if c.len() < 2 {
            return None;
        }
        out.extend_from_slice(&c[..2]);
    }
    Some(out)
}

/// Whether `edges` is a 2-fracture graph of `s`: exactly two edges of each label,
/// each an edge of the representation graph crossing `G_label`-orbits.
pub fn is_two_fracture_selection(s: &Sggi, edges: &[Edge]) -> bool {
    let g = graph_of(s);
    (0..s.rank()).all(|i| {
        let mine: Vec<&Edge> = edges.iter().filter(|e| e.label == i).collect();
        let crossing = crossing_edges(s, i);
        mine.len() == 2 && mine[0] != mine[1] && mine.iter().all(|e| crossing.contains(e) && g.edges().contains(e))
    }) && edges.iter().all(|e| e.label < s.rank())
}

/// The decomposition of an `i`-split `{a, b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    pub label: usize,
    pub a: usize,
    pub b: usize,
    /// the `G_i`-orbit containing `a`
    pub o1: Vec<usize>,
    /// the `G_i`-orbit containing `b`
    pub o2: Vec<usize>,
    /// restriction of each generator to `o1`; for the split label the crossing
    /// transposition is removed first
    pub alphas: Vec<Perm>,
    pub betas: Vec<Perm>,
    pub j_a: Vec<usize>,
    pub j_b: Vec<usize>,
    pub perfect: bool,
}

impl SplitReport {
    pub fn alpha(&self) -> &Perm {
        &self.alphas[self.label]
    }

    pub fn beta(&self) -> &Perm {
        &self.betas[self.label]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "pair": [self.a + 1, self.b + 1],
            "n1": self.o1.len(),
            "n2": self.o2.len(),
            "perfect": self.perfect,
            "alpha": self.alpha().to_string(),
            "beta": self.beta().to_string(),
            "J_A": self.j_a,
            "J_B": self.j_b,
        })
    }
}

fn decompose(s: &Sggi, i: usize, a: usize, b: usize, o1: &[usize], o2: &[usize]) -> SplitReport {
    let n = s.degree();
    let cross = Perm::transposition(n, a, b);
    let part = |j: usize, side: &[usize]| {
        let g = if j == i { s.gen(j).then(&cross) } else { s.gen(j).clone() };
        g.restrict_to(side)
    };
    let r = s.rank();
    let alphas: Vec<Perm> = (0..r).map(|j| part(j, o1)).collect();
    let betas: Vec<Perm> = (0..r).map(|j| part(j, o2)).collect();
    let j_a: Vec<usize> = (0..r).filter(|&j| j != i && !alphas[j].is_identity()).collect();
    let j_b: Vec<usize> = (0..r).filter(|&j| j != i && !betas[j].is_identity()).collect();
    let perfect = (i + 1..r).all(|j| alphas[j].is_identity()) && (0..i).all(|j| betas[j].is_identity());
    SplitReport { label: i, a, b, o1: o1.to_vec(), o2: o2.to_vec(), alphas, betas, j_a, j_b, perfect }
}

/// The split at label `i`, if `i` is the label of a split.
///
/// The sides are the two `G_i`-orbits that merge under `rho_i`. When exactly
/// one assignment of the sides to `(O_1, O_2)` makes the split perfect that one
/// is used, otherwise `O_1` is the side holding the smaller point.
pub fn split_at(s: &Sggi, i: usize) -> Option<SplitReport> {
    let (gid, gcount) = orbit_ids(s, None);
    let (id, count) = orbit_ids(s, Some(i));
    if count != gcount + 1 {
        return None;
    }
    let cross: Vec<(usize, usize)> = s.gen(i).transpositions().into_iter().filter(|&(a, b)| id[a] != id[b]).collect();
    if cross.len() != 1 {
        return None;
    }
    let (x, y) = cross[0];
    debug_assert_eq!(gid[x], gid[y]);
    let side = |k: usize| -> Vec<usize> { (0..s.degree()).filter(|&p| id[p] == k).collect() };
    let (sx, sy) = (side(id[x]), side(id[y]));
    let fwd = decompose(s, i, x, y, &sx, &sy);
    let rev = decompose(s, i, y, x, &sy, &sx);
    Some(match (fwd.perfect, rev.perfect) {
        (false, true) => rev,
        (true, false) => fwd,
        _ => {
            if sx[0] < sy[0] {
                fwd
            } else {
                rev
            }
        }
    })
}

pub fn find_splits(s: &Sggi) -> Vec<SplitReport> {
    (0..s.rank()).filter_map(|i| split_at(s, i)).collect()
}

/// Result of attaching a new extreme-label edge at a pendant vertex.
#[derive(Debug, Clone)]
pub struct Attachment {
    pub vertex: usize,
    /// label of the new edge in the extended string (0 or r)
    pub new_label: usize,
    pub extended: Sggi,
}

/// Candidate extensions by a pendant extreme edge, in deterministic order:
/// pendant 0-edges first, then pendant (r-1)-edges, vertices ascending.
pub fn attachments(s: &Sggi) -> Vec<Attachment> {
    let n = s.degree();
    let r = s.rank();
    if r == 0 {
        return Vec::new();
    }
    let g = graph_of(s);
    let mut deg = vec![0usize; n];
    for e in g.edges() {
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    let mut out = Vec::new();
    for (label, new_label) in [(0, 0), (r - 1, r)] {
        for e in g.edges_with_label(label) {
            for v in [e.u, e.v] {
                if deg[v] != 1 {
                    continue;
                }
                let mut gens: Vec<Perm> = s.gens().iter().map(|p| p.extend(n + 1)).collect();
                let t = Perm::transposition(n + 1, v, n);
                if new_label == 0 {
                    gens.insert(0, t);
                } else {
                    gens.push(t);
                }
                if let Ok(ext) = Sggi::new(n + 1, gens) {
                    out.push(Attachment { vertex: v, new_label, extended: ext });
                }
            }
        }
        if r == 1 {
            break;
        }
    }
    out
}

/// First attachment that is a string C-group with a perfect split at the new label.
pub fn is_split_attachable(s: &Sggi, checker: &CChecker) -> Option<Attachment> {
    attachments(s).into_iter().find(|att| {
        checker.check(&att.extended).is_true()
            && split_at(&att.extended, att.new_label).map(|sp| sp.perfect).unwrap_or(false)
    })
}
