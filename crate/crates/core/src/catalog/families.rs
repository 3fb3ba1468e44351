//! Label-pattern generators for the graphs drawn with elided middle sections.
//!
//! Each generator validates its parameters against the declared range and
//! returns the graph, the dashed edges (if the drawing has any) and the claims
//! that depend on the parameters.

use std::collections::BTreeMap;

use super::{CatalogError, Claim, GroupClaim};
use crate::group::factorial;
use crate::reps::{Edge, PermRepGraph};

pub type Params = BTreeMap<String, usize>;

pub(crate) struct Built {
    pub graph: PermRepGraph,
    pub dashed: Vec<Edge>,
    pub claims: Vec<Claim>,
}

#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<Edge>,
    dashed: Vec<Edge>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// A fresh path with the given labels; returns its vertices.
    fn path(&mut self, labels: &[usize]) -> Vec<usize> {
        let start = self.vertex();
        self.extend(start, labels)
    }

    /// Continues a path from `from`; the returned list starts with `from`.
    fn extend(&mut self, from: usize, labels: &[usize]) -> Vec<usize> {
        let mut vs = vec![from];
        for &l in labels {
            let v = self.vertex();
            self.edge(*vs.last().unwrap(), v, l);
            vs.push(v);
        }
        vs
    }

    fn edge(&mut self, u: usize, v: usize, l: usize) {
        self.edges.push(Edge::new(u, v, l));
    }

    fn dashed(&mut self, u: usize, v: usize, l: usize) {
        self.edge(u, v, l);
        self.dashed.push(Edge::new(u, v, l));
    }

    /// Hangs a pendant `l`-edge below each of `tops`, returning the new vertices.
    fn hang(&mut self, tops: &[usize], l: usize) -> Vec<usize> {
        tops.iter()
            .map(|&t| {
                let b = self.vertex();
                self.edge(t, b, l);
                b
            })
            .collect()
    }

    /// Joins consecutive vertices of `vs` with the given labels.
    fn join(&mut self, vs: &[usize], labels: &[usize]) {
        assert_eq!(vs.len(), labels.len() + 1);
        for (k, &l) in labels.iter().enumerate() {
            self.edge(vs[k], vs[k + 1], l);
        }
    }

    fn build(self, claims: Vec<Claim>) -> Result<Built, CatalogError> {
        let graph = PermRepGraph::new(self.n, self.edges).map_err(|e| CatalogError::Invalid(e.to_string()))?;
        Ok(Built { graph, dashed: self.dashed, claims })
    }
}

/// `a, a+1, ..., b` (empty if `a > b`).
fn up(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

/// `a, a-1, ..., b` (empty if `a < b`).
fn down(a: usize, b: usize) -> Vec<usize> {
    (b..=a).rev().collect()
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.concat()
}

fn get(p: &Params, key: &str) -> Result<usize, CatalogError> {
    p.get(key).copied().ok_or_else(|| CatalogError::MissingParam(key.to_string()))
}

fn ensure(ok: bool, range: &str) -> Result<(), CatalogError> {
    if ok {
        Ok(())
    } else {
        Err(CatalogError::OutOfRange(range.to_string()))
    }
}

pub(crate) type Generator = fn(&Params) -> Result<Built, CatalogError>;

pub(crate) struct Family {
    pub id: &'static str,
    pub params: &'static [&'static str],
    pub range: &'static str,
    pub generate: Generator,
    /// parameter sets exercised by catalog verification
    pub samples: fn() -> Vec<Params>,
}

fn params(pairs: &[(&str, usize)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn over(key: &str, vals: impl IntoIterator<Item = usize>) -> Vec<Params> {
    vals.into_iter().map(|v| params(&[(key, v)])).collect()
}

/// Every `(r, h)` with `r` in `rs` and `h` in `lo(r)..=hi(r)`.
fn rh(rs: &[usize], lo: fn(usize) -> usize, hi: fn(usize) -> usize) -> Vec<Params> {
    let mut out = Vec::new();
    for &r in rs {
        for h in lo(r)..=hi(r) {
            out.push(params(&[("r", r), ("h", h)]));
        }
    }
    out
}

fn rhk(rs: &[usize]) -> Vec<Params> {
    let mut out = Vec::new();
    for &r in rs {
        for h in 4..=r - 2 {
            for k in 1..=h - 3 {
                out.push(params(&[("r", r), ("h", h), ("k", k)]));
            }
        }
    }
    out
}

pub(crate) static FAMILIES: &[Family] = &[
    Family { id: "T3.1", params: &["r"], range: "r even, r >= 4", generate: t3_1, samples: || over("r", [4, 6, 8]) },
    Family { id: "T5.1", params: &["r"], range: "r >= 3", generate: t5_1, samples: || over("r", 3..=7) },
    Family { id: "T5.2", params: &["r"], range: "r >= 3", generate: t5_2, samples: || over("r", 3..=7) },
    Family { id: "T5.11", params: &["n"], range: "n odd, n >= 7", generate: t5_11, samples: || over("n", [7, 9, 11, 13]) },
    Family { id: "T5.13", params: &["n"], range: "n odd, n >= 7", generate: t5_13, samples: || over("n", [7, 9, 11, 13]) },
    Family { id: "IPF2.1a", params: &["r"], range: "r >= 6", generate: ipf2_1a, samples: || over("r", 6..=8) },
    Family { id: "IPF2.1b", params: &["r"], range: "r >= 7", generate: ipf2_1b, samples: || over("r", 7..=8) },
    Family { id: "IPF2.2a", params: &["r"], range: "r >= 5", generate: ipf2_2a, samples: || over("r", 6..=8) },
    Family {
        id: "IPF2.2b",
        params: &["r", "h"],
        range: "3 <= h <= r-2",
        generate: ipf2_2b,
        samples: || rh(&[6, 7, 8], |_| 3, |r| r - 2),
    },
    Family {
        id: "IPF2.2c",
        params: &["r", "h"],
        range: "3 <= h <= r-3",
        generate: ipf2_2c,
        samples: || rh(&[6, 7, 8], |_| 3, |r| r - 3),
    },
    Family { id: "IPF2.3a", params: &["r"], range: "r >= 5", generate: ipf2_3a, samples: || over("r", 6..=8) },
    Family { id: "IPF2.3b", params: &["r"], range: "r >= 6", generate: ipf2_3b, samples: || over("r", 6..=8) },
    Family { id: "IPF2.4a", params: &["r"], range: "r >= 5", generate: ipf2_4a, samples: || over("r", 6..=8) },
    Family { id: "IPF2.4b", params: &["r"], range: "r >= 6", generate: ipf2_4b, samples: || over("r", 6..=8) },
    Family {
        id: "IPF2.5",
        params: &["r", "h"],
        range: "1 <= h <= r-3",
        generate: ipf2_5,
        samples: || rh(&[6, 7, 8], |_| 1, |r| r - 3),
    },
    Family {
        id: "IPF2.6a",
        params: &["r", "h"],
        range: "3 <= h <= r-2",
        generate: ipf2_6a,
        samples: || rh(&[6, 7, 8], |_| 3, |r| r - 2),
    },
    Family {
        id: "IPF2.6b",
        params: &["r", "h"],
        range: "2 <= h <= r-3",
        generate: ipf2_6b,
        samples: || rh(&[6, 7, 8], |_| 2, |r| r - 3),
    },
    Family { id: "T6.I", params: &["r"], range: "r >= 3, n = 2r", generate: t6_1, samples: || over("r", 5..=6) },
    Family { id: "T6.II", params: &["r"], range: "r >= 3, n = 2r", generate: t6_2, samples: || over("r", 5..=6) },
    Family { id: "T6.III", params: &["r"], range: "r >= 3, n = 2r-1", generate: t6_3, samples: || over("r", 5..=6) },
    Family { id: "T6.IV", params: &["r"], range: "r >= 4, n = 2r", generate: t6_4, samples: || over("r", 5..=6) },
    Family { id: "T6.V", params: &["r"], range: "r >= 5, n = 2r", generate: t6_5, samples: || over("r", 5..=6) },
    Family { id: "T6.VI", params: &["r"], range: "r >= 4, n = 2r", generate: t6_6, samples: || over("r", 5..=6) },
    Family { id: "T6.VII", params: &["r"], range: "r >= 5, n = 2r", generate: t6_7, samples: || over("r", 5..=6) },
    Family { id: "T6.VIII", params: &["r"], range: "r >= 5, n = 2r", generate: t6_8, samples: || over("r", 5..=6) },
    Family { id: "T6.IX", params: &["r"], range: "r >= 5, n = 2r", generate: t6_9, samples: || over("r", 5..=6) },
    Family {
        id: "T6.X",
        params: &["r", "h"],
        range: "1 <= h <= r-2, n = 2r-1",
        generate: t6_10,
        samples: || rh(&[5, 6], |_| 1, |r| r - 2),
    },
    Family {
        id: "T6.XI",
        params: &["r", "h"],
        range: "1 <= h <= r-2, n = 2r",
        generate: t6_11,
        samples: || rh(&[5, 6], |_| 1, |r| r - 2),
    },
    Family { id: "T6.XII", params: &["r"], range: "r >= 4, n = 2r", generate: t6_12, samples: || over("r", 5..=6) },
    Family { id: "T6.XIII", params: &[], range: "n = 10, r = 5", generate: t6_13, samples: || vec![Params::new()] },
    Family {
        id: "T6.XIV",
        params: &["r", "h"],
        range: "2 <= h <= r-2, n = 2r-1",
        generate: t6_14,
        samples: || rh(&[5, 6], |_| 2, |r| r - 2),
    },
    Family {
        id: "T6.XV",
        params: &["r", "h"],
        range: "2 <= h <= r-2, n = 2r",
        generate: t6_15,
        samples: || rh(&[5, 6], |_| 2, |r| r - 2),
    },
    Family {
        id: "T6.XVI",
        params: &["r", "h", "k"],
        range: "1 <= k <= h-3, h <= r-2, n = 2r",
        generate: t6_16,
        samples: || rhk(&[6, 7]),
    },
    Family {
        id: "T6.XVII",
        params: &["r", "h", "k"],
        range: "1 <= k <= h-3, h <= r-2, n = 2r",
        generate: t6_17,
        samples: || rhk(&[6, 7]),
    },
];

// ---- imprimitive ladders -------------------------------------------------

/// Two rows of `r-1` vertices; row edges `r-1, ..., 2`, rungs `{0,1}` except a
/// single `0` rung at the end.
///
/// Rung `0` swaps all `r-1` columns and `G_0` holds every even product of
/// column swaps, so odd `r` puts `rho_0` inside `G_0`: only even ranks occur.
fn t3_1(p: &Params) -> Result<Built, CatalogError> {
    let r = get(p, "r")?;
    ensure(r >= 4 && r % 2 == 0, "r even, r >= 4")?;
    let mut b = Builder::default();
    let labels = down(r - 1, 2);
    let top = b.path(&labels);
    let bot = b.path(&labels);
    for k in 0..top.len() {
        b.edge(top[k], bot[k], 0);
        if k + 1 < top.len() {
            b.edge(top[k], bot[k], 1);
        }
    }
    b.build(vec![Claim::Degree { value: 2 * r - 2 }, Claim::Rank { value: r }])
}

// ---- 2-fracture families -------------------------------------------------

/// Two rows of `r` vertices with row edges `1..r-1` from the right, joined by
/// `0`-rungs; only the rungs at the second and third column from the right are solid.
fn ladder_c2(r: usize, first_rung: bool) -> Builder {
    let mut b = Builder::default();
    let labels = up(1, r - 1);
    let top = b.path(&labels);
    let bot = b.path(&labels);
    for k in 0..r {
        if k == 0 && !first_rung {
            continue;
        }
        if k == 1 || k == 2 {
            b.edge(top[k], bot[k], 0);
        } else {
            b.dashed(top[k], bot[k], 0);
        }
    }
    b
}

fn t5_1(p: &Params) -> Result<Built, CatalogError> {
    let r = get(p, "r")?;
    ensure(r >= 3, "r >= 3")?;
    let order = 2 * factorial(r).unwrap() as u64;
    ladder_c2(r, true).build(vec![Claim::Degree { value: 2 * r }, Claim::Rank { value: r }, Claim::Order { value: order }])
}

fn t5_2(p: &Params) -> Result<Built, CatalogError> {
    let r = get(p, "r")?;
    ensure(r >= 3, "r >= 3")?;
    let e = if r % 2 == 0 { r } else { r - 1 };
    let order = (1u64 << e) * factorial(r).unwrap() as u64;
    ladder_c2(r, false).build(vec![
        Claim::Degree { value: 2 * r },
        Claim::Rank { value: r },
        Claim::Order { value: order },
    ])
}

fn odd_n(p: &Params) -> Result<usize, CatalogError> {
    let n = get(p, "n")?;
    ensure(n >= 7 && n % 2 == 1, "n odd, n >= 7")?;
    Ok(n)
}

fn t5_11(p: &Params) -> Result<Built, CatalogError> {
    let n = odd_n(p)?;
    let r = (n - 1) / 2;
    let mut b = Builder::default();
    let top = b.path(&cat(&[&[1, 0, 1], &up(2, r - 1)]));
    let bot = b.path(&up(2, r - 1));
    for (j, k) in (3..=r + 1).enumerate() {
        if k == 3 {
            b.edge(top[k], bot[j], 0);
        } else {
            b.dashed(top[k], bot[j], 0);
        }
    }
    let group = match n {
        7 => GroupClaim::Symmetric,
        9 => GroupClaim::Alternating,
        _ if n % 4 == 1 => GroupClaim::Alternating,
        _ => GroupClaim::Symmetric,
    };
    let g0 = (factorial(r - 1).unwrap() * factorial(r).unwrap()) as u64;
    b.build(vec![
        Claim::Degree { value: n },
        Claim::Rank { value: r },
        Claim::Group { value: group },
        Claim::ParabolicOrder { without: vec![0], value: g0 },
    ])
}

fn t5_13(p: &Params) -> Result<Built, CatalogError> {
    let n = odd_n(p)?;
    let r = (n - 1) / 2;
    let mut b = Builder::default();
    let top = b.path(&up(0, r - 1));
    let bot = b.path(&up(1, r - 1));
    for (j, k) in (1..=r).enumerate() {
        if k == 1 {
            continue;
        }
        if k == 2 {
            b.edge(top[k], bot[j], 0);
        } else {
            b.dashed(top[k], bot[j], 0);
        }
    }
    b.build(vec![
        Claim::Degree { value: n },
        Claim::Rank { value: r },
        Claim::Group { value: GroupClaim::AlternatingOrSymmetric },
    ])
}

// ---- graphs whose string groups fail the intersection property ----------

fn rank_at_least(p: &Params, min: usize) -> Result<usize, CatalogError> {
    let r = get(p, "r")?;
    ensure(r >= min, &format!("r >= {min}"))?;
    Ok(r)
}

fn h_in(p: &Params, lo: usize, hi: usize, range: &str) -> Result<usize, CatalogError> {
    let h = get(p, "h")?;
    ensure(lo <= h && h <= hi, range)?;
    Ok(h)
}

fn not_c(b: Builder, r: usize) -> Result<Built, CatalogError> {
    b.build(vec![Claim::Rank { value: r }, Claim::StringC { value: false }])
}

/// The shared tail `r-4, r-3, r-4, r-3, r-2, r-1, r-2, r-1`.
fn tail_1(r: usize) -> Vec<usize> {
    vec![r - 4, r - 3, r - 4, r - 3, r - 2, r - 1, r - 2, r - 1]
}

fn ipf2_1a(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 6)?;
    let mut b = Builder::default();
    b.path(&cat(&[&down(r - 5, 1), &[0], &up(1, r - 5), &tail_1(r)]));
    not_c(b, r)
}

fn ipf2_1b(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 7)?;
    let mut b = Builder::default();
    let top = b.path(&cat(&[&up(0, r - 6), &[r - 5], &tail_1(r)]));
    let bot = b.hang(&top[..=r - 6], r - 5);
    b.join(&bot, &up(0, r - 7));
    not_c(b, r)
}

/// Top path `0..r-1, r-2..h`, verticals `h-1` below its first `h-1` vertices,
/// bottom path `0..h-2`.
fn hooked(r: usize, h: usize) -> Builder {
    let mut b = Builder::default();
    let top = b.path(&cat(&[&up(0, r - 1), &down(r - 2, h)]));
    let bot = b.hang(&top[..h - 1], h - 1);
    let last = b.vertex();
    let mut row = bot;
    row.push(last);
    b.join(&row, &up(0, h - 2));
    b
}

fn ipf2_2a(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    not_c(hooked(r, 3), r)
}

fn ipf2_2b(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let h = h_in(p, 3, r - 2, "3 <= h <= r-2")?;
    not_c(hooked(r, h), r)
}

/// Verticals `l` below `top[from..]` with a bottom path carrying the same labels as the top.
fn right_ladder(b: &mut Builder, top: &[usize], from: usize, l: usize) {
    let bot = b.hang(&top[from..], l);
    b.join(&bot, &up(from, top.len() - 2));
}

fn ipf2_2c(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 6)?;
    let h = h_in(p, 3, r - 3, "3 <= h <= r-3")?;
    let mut b = Builder::default();
    let top = b.path(&up(0, r - 1));
    let bot = b.hang(&top[..h - 1], h - 1);
    let last = b.vertex();
    let mut row = bot;
    row.push(last);
    b.join(&row, &up(0, h - 2));
    right_ladder(&mut b, &top, h + 2, h);
    not_c(b, r)
}

/// Bottom `b0 -1- b1 -0- b2` with `2`-verticals from the first two top vertices to `b1`, `b2`.
fn crossed_foot(b: &mut Builder, top: &[usize]) {
    let bot = b.path(&[1, 0]);
    b.edge(top[0], bot[1], 2);
    b.edge(top[1], bot[2], 2);
}

fn ipf2_3a(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let mut b = Builder::default();
    let top = b.path(&cat(&[&up(0, r - 1), &down(r - 2, 3)]));
    crossed_foot(&mut b, &top);
    not_c(b, r)
}

fn ipf2_3b(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 6)?;
    let mut b = Builder::default();
    let top = b.path(&up(0, r - 1));
    crossed_foot(&mut b, &top);
    right_ladder(&mut b, &top, 5, 3);
    not_c(b, r)
}

/// A pendant `1`-edge before `0..`, with a `0`-edge hung below the first two
/// path vertices by `2`-verticals. Returns the top path without the pendant vertex.
fn pendant_foot(b: &mut Builder, labels: &[usize]) -> Vec<usize> {
    let s = b.vertex();
    let mut top = b.extend(s, &cat(&[&[1], labels]));
    top.remove(0);
    let bot = b.hang(&top[..2], 2);
    b.edge(bot[0], bot[1], 0);
    top
}

fn ipf2_4a(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let mut b = Builder::default();
    pendant_foot(&mut b, &cat(&[&up(0, r - 1), &down(r - 2, 3)]));
    not_c(b, r)
}

fn ipf2_4b(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 6)?;
    let mut b = Builder::default();
    let top = pendant_foot(&mut b, &up(0, r - 1));
    right_ladder(&mut b, &top, 5, 3);
    not_c(b, r)
}

fn ipf2_5(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 4)?;
    let h = h_in(p, 1, r - 3, "1 <= h <= r-3")?;
    let mut b = Builder::default();
    b.path(&cat(&[&down(h, 1), &[0], &up(1, r - 2), &[r - 1], &down(r - 2, h + 1)]));
    not_c(b, r)
}

fn ipf2_6a(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let h = h_in(p, 3, r - 2, "3 <= h <= r-2")?;
    let mut b = Builder::default();
    let v = b.path(&cat(&[&[h], &down(h - 1, 0), &up(1, r - 1), &down(r - 2, h)]));
    b.edge(v[0], v[1], h - 2);
    not_c(b, r)
}

fn ipf2_6b(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let h = h_in(p, 2, r - 3, "2 <= h <= r-3")?;
    let mut b = Builder::default();
    let v = b.path(&cat(&[&[h], &down(h - 1, 1), &[0], &up(1, r - 2), &[r - 1], &down(r - 2, h + 1), &[h]]));
    b.edge(v[0], v[1], h - 2);
    let m = v.len();
    b.edge(v[m - 2], v[m - 1], h + 2);
    not_c(b, r)
}

// ---- graphs with a split that is not perfect ------------------------------

fn informational(b: Builder, n: usize, r: usize) -> Result<Built, CatalogError> {
    b.build(vec![
        Claim::Degree { value: n },
        Claim::Rank { value: r },
        Claim::Group { value: GroupClaim::Symmetric },
        Claim::FractureGraph { value: true },
        Claim::NonPerfectSplit,
        Claim::StringC { value: true },
    ])
}

/// Two rows with edges `r-1, ..., 2` joined by `0`-rungs; returns the top row.
fn zero_ladder(b: &mut Builder, r: usize) -> Vec<usize> {
    let labels = down(r - 1, 2);
    let top = b.path(&labels);
    let bot = b.path(&labels);
    for k in 0..top.len() {
        b.edge(top[k], bot[k], 0);
    }
    top
}

fn t6_1(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 3)?;
    let mut b = Builder::default();
    let top = zero_ladder(&mut b, r);
    b.extend(*top.last().unwrap(), &[1, 2]);
    informational(b, 2 * r, r)
}

fn t6_2(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 3)?;
    let mut b = Builder::default();
    let top = zero_ladder(&mut b, r);
    let v = b.extend(*top.last().unwrap(), &[1, 2]);
    b.edge(v[1], v[2], 0);
    informational(b, 2 * r, r)
}

fn t6_3(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 3)?;
    let mut b = Builder::default();
    let top = zero_ladder(&mut b, r);
    b.extend(*top.last().unwrap(), &[1]);
    informational(b, 2 * r - 1, r)
}

fn v_path(r: usize) -> Vec<usize> {
    cat(&[&down(r - 3, 1), &[0], &up(1, r - 3)])
}

fn t6_4(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 4)?;
    let mut b = Builder::default();
    b.path(&cat(&[&v_path(r), &[r - 2, r - 1, r - 2, r - 1]]));
    informational(b, 2 * r, r)
}

fn t6_5(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let mut b = Builder::default();
    let v = b.path(&cat(&[&v_path(r), &[r - 2, r - 1, r - 2, r - 1]]));
    let m = v.len();
    b.edge(v[m - 2], v[m - 1], r - 3);
    informational(b, 2 * r, r)
}

fn t6_6(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 4)?;
    let mut b = Builder::default();
    let v = b.path(&cat(&[&v_path(r), &[r - 2, r - 1]]));
    let m = v.len();
    let (x, y) = (v[m - 2], v[m - 1]);
    let bx = b.hang(&[x], r - 3)[0];
    let by = b.hang(&[y], r - 3)[0];
    b.edge(y, by, r - 2);
    b.edge(bx, by, r - 1);
    informational(b, 2 * r, r)
}

/// Top `r-1, r-2, r-1, r-2, r-3, r-4, r-5..0` with `r-3`-verticals under the
/// descending `r-5..0` section and a copy of it below.
fn t6_7_base(b: &mut Builder, r: usize) -> Vec<usize> {
    let top = b.path(&cat(&[&[r - 1, r - 2, r - 1, r - 2, r - 3, r - 4], &down(r - 5, 0)]));
    let bot = b.hang(&top[6..], r - 3);
    b.join(&bot, &down(r - 5, 0));
    top
}

fn t6_7(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let mut b = Builder::default();
    t6_7_base(&mut b, r);
    informational(b, 2 * r, r)
}

fn t6_8(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let mut b = Builder::default();
    let top = t6_7_base(&mut b, r);
    b.edge(top[0], top[1], r - 3);
    informational(b, 2 * r, r)
}

fn t6_9(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 5)?;
    let mut b = Builder::default();
    let top = b.path(&down(r - 1, 0));
    let head = b.hang(&top[..2], r - 3);
    b.edge(top[0], head[0], r - 2);
    b.edge(head[0], head[1], r - 1);
    let bot = b.hang(&top[4..], r - 3);
    b.join(&bot, &down(r - 5, 0));
    informational(b, 2 * r, r)
}

fn t6_10(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 3)?;
    let h = h_in(p, 1, r - 2, "1 <= h <= r-2")?;
    let mut b = Builder::default();
    let top = b.path(&cat(&[&down(h, 1), &[0], &up(1, r - 1)]));
    // vertices from the start of the (h+3)-edge onwards, i.e. after the (h+2)-edge
    if h + 2 <= r - 1 {
        let from = top.len() - (r - 1 - (h + 2)) - 1;
        let bot = b.hang(&top[from..], h + 1);
        b.join(&bot, &up(h + 3, r - 1));
    }
    informational(b, 2 * r - 1, r)
}

fn t6_11(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 3)?;
    let h = h_in(p, 1, r - 2, "1 <= h <= r-2")?;
    let mut b = Builder::default();
    b.path(&cat(&[&down(h, 1), &[0], &up(1, r - 2), &[r - 1], &down(r - 2, h)]));
    informational(b, 2 * r, r)
}

fn t6_12(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 4)?;
    let mut b = Builder::default();
    let v = b.path(&cat(&[&[2, 1, 0], &up(1, r - 2), &[r - 1], &down(r - 2, 2)]));
    b.edge(v[0], v[1], 0);
    informational(b, 2 * r, r)
}

/// Three stacked rows joined by `1`- and `0`-rungs; reconstructed for `n = 10`, `r = 5`.
fn t6_13(_: &Params) -> Result<Built, CatalogError> {
    let mut b = Builder::default();
    let a = b.path(&[4, 3, 2]);
    let mid = b.path(&[4, 3]);
    let low = b.path(&[4, 3]);
    for k in 0..3 {
        b.edge(a[k], mid[k], 1);
        b.edge(mid[k], low[k], 0);
    }
    informational(b, 10, 5)
}

fn t6_14(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 4)?;
    let h = h_in(p, 2, r - 2, "2 <= h <= r-2")?;
    let mut b = Builder::default();
    let top = b.path(&up(0, r - 1));
    let left = b.hang(&top[..h], h);
    b.join(&left, &up(0, h - 2));
    if h + 3 <= r {
        right_ladder(&mut b, &top, h + 3, h + 1);
    }
    informational(b, 2 * r - 1, r)
}

fn t6_15(p: &Params) -> Result<Built, CatalogError> {
    let r = rank_at_least(p, 4)?;
    let h = h_in(p, 2, r - 2, "2 <= h <= r-2")?;
    let mut b = Builder::default();
    let top = b.path(&down(r - 1, 1));
    let left = b.hang(&top[..=r - 2 - h], h);
    b.join(&left, &down(r - 1, h + 2));
    let right = b.path(&down(h, 1));
    b.edge(*top.last().unwrap(), *right.last().unwrap(), 0);
    informational(b, 2 * r, r)
}

fn hk(p: &Params) -> Result<(usize, usize, usize), CatalogError> {
    let r = rank_at_least(p, 6)?;
    let h = h_in(p, 4, r - 2, "1 <= k <= h-3, h <= r-2")?;
    let k = get(p, "k")?;
    ensure(1 <= k && k + 3 <= h, "1 <= k <= h-3, h <= r-2")?;
    Ok((r, h, k))
}

/// `h`-verticals below `top[..h]`, doubled with label `k` below `top[..k]`,
/// and a bottom path `0..h-2`.
fn double_foot(b: &mut Builder, top: &[usize], h: usize, k: usize) {
    let bot = b.hang(&top[..h], h);
    for j in 0..k {
        b.edge(top[j], bot[j], k);
    }
    b.join(&bot, &up(0, h - 2));
}

fn t6_16(p: &Params) -> Result<Built, CatalogError> {
    let (r, h, k) = hk(p)?;
    let mut b = Builder::default();
    let top = b.path(&cat(&[&up(0, r - 1), &down(r - 2, h)]));
    double_foot(&mut b, &top, h, k);
    informational(b, 2 * r, r)
}

fn t6_17(p: &Params) -> Result<Built, CatalogError> {
    let (r, h, k) = hk(p)?;
    let mut b = Builder::default();
    let top = b.path(&up(0, r - 1));
    double_foot(&mut b, &top, h, k);
    right_ladder(&mut b, &top, h + 2, h);
    informational(b, 2 * r, r)
}
