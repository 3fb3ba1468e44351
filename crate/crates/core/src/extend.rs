//! Sesqui-extensions and rank-and-degree extensions.

use serde::Serialize;
use thiserror::Error;

use crate::fracture::{fracture_graph, split_at, SplitReport};
use crate::perm::Perm;
use crate::sggi::{Sggi, SggiError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("tau lies in the group")]
    TauInGroup,
    #[error("tau does not commute with generator {0}")]
    TauNotCommuting(usize),
    #[error("tau is not an involution")]
    TauNotInvolution,
    #[error("tau has degree {tau}, smaller than the string's degree {degree}")]
    TauDegree { tau: usize, degree: usize },
    #[error("generator index {0} out of range")]
    BadIndex(usize),
    #[error("{0} is not the label of a perfect split")]
    NotAPerfectSplit(usize),
    #[error("construction did not produce a string of involutions: {0}")]
    NotAnSggi(#[from] SggiError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SesquiKind {
    /// the group doubles: `G* = G x <tau>`
    Proper,
    /// `G*` is isomorphic to `G`
    Improper,
}

#[derive(Debug, Clone)]
pub struct SesquiResult {
    pub extended: Sggi,
    pub tau: Perm,
    pub kind: SesquiKind,
    pub base_order: u128,
    pub extended_order: u128,
}

/// Multiplies generator `k` by an outside involution `tau` that centralises the
/// string. The string is lifted to `tau`'s degree, new points fixed.
pub fn sesqui_extend(s: &Sggi, k: usize, tau: &Perm) -> Result<SesquiResult, ExtendError> {
    if k >= s.rank() {
        return Err(ExtendError::BadIndex(k));
    }
    let m = tau.degree();
    if m < s.degree() {
        return Err(ExtendError::TauDegree { tau: m, degree: s.degree() });
    }
    if !tau.is_involution() {
        return Err(ExtendError::TauNotInvolution);
    }
    let lifted = s.extend_degree(m);
    for (i, g) in lifted.gens().iter().enumerate() {
        if !g.commutes_with(tau) {
            return Err(ExtendError::TauNotCommuting(i));
        }
    }
    let g = lifted.group();
    if g.contains(tau) {
        return Err(ExtendError::TauInGroup);
    }
    let gens: Vec<Perm> =
        lifted.gens().iter().enumerate().map(|(i, p)| if i == k { p.then(tau) } else { p.clone() }).collect();
    let extended = Sggi::new(m, gens)?;
    let base_order = g.order();
    let extended_order = extended.group().order();
    let kind = if extended_order == 2 * base_order { SesquiKind::Proper } else { SesquiKind::Improper };
    Ok(SesquiResult { extended, tau: tau.clone(), kind, base_order, extended_order })
}

#[derive(Debug, Clone)]
pub struct RdExtension {
    pub source: Sggi,
    pub split_label: usize,
    /// the added point (0-based), always the old degree
    pub new_point: usize,
    pub split: SplitReport,
    pub result: Sggi,
}

/// Inserts a new point `c` into the perfect `i`-split `{a, b}`:
/// `rho_i = alpha_i beta_i (a,b)` becomes `alpha_i (a,c)` and `beta_i (c,b)`,
/// and later generators move up one label.
pub fn rd_extend(s: &Sggi, i: usize) -> Result<RdExtension, ExtendError> {
    let split = match split_at(s, i) {
        Some(sp) if sp.perfect => sp,
        _ => return Err(ExtendError::NotAPerfectSplit(i)),
    };
    let n = s.degree();
    let c = n;
    let up = |p: &Perm| p.extend(n + 1);
    // the part of rho_i outside the two split sides (only for intransitive groups)
    let sides: Vec<usize> = split.o1.iter().chain(&split.o2).copied().collect();
    let rest: Vec<usize> = (0..n).filter(|x| !sides.contains(x)).collect();
    let rest_i = up(&s.gen(i).restrict_to(&rest));
    let mut gens = Vec::with_capacity(s.rank() + 1);
    for j in 0..i {
        gens.push(up(s.gen(j)));
    }
    gens.push(up(split.alpha()).then(&Perm::transposition(n + 1, split.a, c)).then(&rest_i));
    gens.push(up(split.beta()).then(&Perm::transposition(n + 1, c, split.b)));
    for j in i + 1..s.rank() {
        gens.push(up(s.gen(j)));
    }
    let result = Sggi::new(n + 1, gens)?;
    Ok(RdExtension { source: s.clone(), split_label: i, new_point: c, split, result })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RdGuard {
    GuaranteedStringC,
    NoGuarantee,
}

/// Whether the sufficient conditions for the extension to stay a string C-group
/// hold: a trivial side action, a fracture graph, and neither split point fixed by `G_i`.
pub fn rd_guard(s: &Sggi, i: usize) -> Result<RdGuard, ExtendError> {
    let split = match split_at(s, i) {
        Some(sp) if sp.perfect => sp,
        _ => return Err(ExtendError::NotAPerfectSplit(i)),
    };
    let one_side_trivial = split.alpha().is_identity() || split.beta().is_identity();
    let has_fracture = fracture_graph(s).is_some();
    let fixed = s.subgroup_without(&[i]).fixed_points();
    let moved = !fixed.contains(&split.a) && !fixed.contains(&split.b);
    Ok(if one_side_trivial && has_fracture && moved { RdGuard::GuaranteedStringC } else { RdGuard::NoGuarantee })
}

/// Undoes an extension at label `i`: deletes point `c` and merges labels `i`, `i+1`.
pub fn rd_contract(s: &Sggi, i: usize, c: usize) -> Result<Sggi, ExtendError> {
    let n = s.degree();
    if i + 1 >= s.rank() || c >= n {
        return Err(ExtendError::BadIndex(i));
    }
    let (a, b) = (s.gen(i).apply(c), s.gen(i + 1).apply(c));
    let keep: Vec<usize> = (0..n).filter(|&x| x != c).collect();
    let mut map = vec![usize::MAX; n];
    for (k, &x) in keep.iter().enumerate() {
        map[x] = k;
    }
    let shrink = |p: &Perm| -> Perm {
        let img: Vec<usize> = keep.iter().map(|&x| map[p.apply(x)]).collect();
        Perm::from_images(&img).expect("c is fixed")
    };
    let strip = |p: &Perm, x: usize| p.then(&Perm::transposition(n, x, c));
    let fused = strip(s.gen(i), a).then(&strip(s.gen(i + 1), b));
    let mut gens = Vec::new();
    for j in 0..s.rank() {
        if j == i {
            gens.push(shrink(&fused).then(&Perm::transposition(n - 1, map[a], map[b])));
        } else if j != i + 1 {
            gens.push(shrink(s.gen(j)));
        }
    }
    Ok(Sggi::new(n - 1, gens)?)
}
