//! Strings of involutions and the intersection property.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use serde::Serialize;
use thiserror::Error;

use crate::group::{GroupError, PermGroup, DEFAULT_CAP};
use crate::perm::{Perm, PermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SggiError {
    #[error("generator {0} is not an involution")]
    NotInvolution(usize),
    #[error("generators {0} and {1} do not commute")]
    StringConditionFails(usize, usize),
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch { index: usize, expected: usize, found: usize },
    #[error("rank {0} is too small for this operation")]
    RankTooSmall(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// An ordered tuple of involutions in which non-adjacent members commute.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sggi {
    degree: usize,
    gens: Vec<Perm>,
}

impl Sggi {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Sggi, SggiError> {
        for (i, g) in gens.iter().enumerate() {
            if g.degree() != degree {
                return Err(SggiError::DegreeMismatch { index: i, expected: degree, found: g.degree() });
            }
            if !g.is_involution() {
                return Err(SggiError::NotInvolution(i));
            }
        }
        for i in 0..gens.len() {
            for j in i + 2..gens.len() {
                if !gens[i].commutes_with(&gens[j]) {
                    return Err(SggiError::StringConditionFails(i, j));
                }
            }
        }
        Ok(Sggi { degree, gens })
    }

    /// Parses generators given in 1-based cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Sggi, SggiError> {
        let gens = gens.iter().map(|s| Perm::parse(s, degree)).collect::<Result<Vec<_>, _>>()?;
        Sggi::new(degree, gens)
    }

    /// The `degree`-point simplex: consecutive transpositions.
    pub fn simplex(degree: usize) -> Sggi {
        let gens = (0..degree - 1).map(|i| Perm::transposition(degree, i, i + 1)).collect();
        Sggi { degree, gens }
    }

    pub(crate) fn new_unchecked(degree: usize, gens: Vec<Perm>) -> Sggi {
        Sggi { degree, gens }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn gen(&self, i: usize) -> &Perm {
        &self.gens[i]
    }

    pub fn group(&self) -> PermGroup {
        PermGroup::new(self.degree, self.gens.clone())
    }

    pub fn dual(&self) -> Sggi {
        Sggi { degree: self.degree, gens: self.gens.iter().rev().cloned().collect() }
    }

    /// The sub-tuple of the generators whose labels are in `labels` (kept in label order).
    pub fn select(&self, labels: &[usize]) -> Parabolic {
        let mut labels: Vec<usize> = labels.iter().copied().filter(|&i| i < self.rank()).collect();
        labels.sort();
        labels.dedup();
        let gens = labels.iter().map(|&i| self.gens[i].clone()).collect();
        Parabolic { labels, sggi: Sggi { degree: self.degree, gens } }
    }

    /// The sub-tuple with the labels in `labels` removed.
    pub fn delete(&self, labels: &[usize]) -> Parabolic {
        let keep: Vec<usize> = (0..self.rank()).filter(|i| !labels.contains(i)).collect();
        self.select(&keep)
    }

    /// Subgroup generated by the generators with labels in `labels`.
    pub fn subgroup(&self, labels: &[usize]) -> PermGroup {
        self.select(labels).sggi.group()
    }

    /// Subgroup generated by all generators except the listed ones (`G_i`, `G_{i,j}`, ...).
    pub fn subgroup_without(&self, labels: &[usize]) -> PermGroup {
        self.delete(labels).sggi.group()
    }

    pub fn schlafli(&self) -> Result<Vec<u64>, SggiError> {
        if self.rank() < 2 {
            return Err(SggiError::RankTooSmall(self.rank()));
        }
        Ok(self.gens.windows(2).map(|w| w[0].then(&w[1]).order()).collect())
    }

    /// Points moved by some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree).filter(|&x| self.gens.iter().any(|g| g.apply(x) != x)).collect()
    }

    /// The same tuple acting faithfully on its moved points, relabelled in ascending order.
    pub fn restrict_to_support(&self) -> Sggi {
        let supp = self.support();
        let mut map = vec![usize::MAX; self.degree];
        for (k, &x) in supp.iter().enumerate() {
            map[x] = k;
        }
        let m = supp.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let img: Vec<usize> = supp.iter().map(|&x| map[g.apply(x)]).collect();
                Perm::from_images(&img).unwrap()
            })
            .collect();
        Sggi { degree: m, gens }
    }

    /// The same tuple on a larger domain; new points are fixed.
    pub fn extend_degree(&self, n: usize) -> Sggi {
        Sggi { degree: n, gens: self.gens.iter().map(|g| g.extend(n)).collect() }
    }

    /// Conjugates every generator by `g`.
    pub fn conj(&self, g: &Perm) -> Sggi {
        Sggi { degree: self.degree, gens: self.gens.iter().map(|x| x.conj(g)).collect() }
    }

    /// Text form: a `degree <n>` line and one generator per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("degree {}\n", self.degree);
        for g in &self.gens {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Sggi, SggiError> {
        let mut degree = None;
        let mut gens = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| SggiError::Parse { line: k + 1, msg };
            match degree {
                None => {
                    let rest = line.strip_prefix("degree").ok_or_else(|| perr("expected `degree <n>`".into()))?;
                    let n: usize = rest.trim().parse().map_err(|_| perr("bad degree".into()))?;
                    if n == 0 || n > 255 {
                        return Err(perr(format!("degree {n} out of range")));
                    }
                    degree = Some(n);
                }
                Some(n) => gens.push(Perm::parse(line, n).map_err(|e| perr(e.to_string()))?),
            }
        }
        let n = degree.ok_or(SggiError::Parse { line: 1, msg: "missing degree line".into() })?;
        Sggi::new(n, gens)
    }
}

impl fmt::Debug for Sggi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sggi[{}](", self.degree)?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// A parabolic sub-tuple together with the labels it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parabolic {
    pub labels: Vec<usize>,
    pub sggi: Sggi,
}

/// Pair of label sets whose generated subgroups violate the intersection property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub j: Vec<usize>,
    pub k: Vec<usize>,
    /// `|<rho_J> ∩ <rho_K>|`
    pub intersection_order: u128,
    /// `|<rho_{J∩K}>|`
    pub expected_order: u128,
}

impl Witness {
    fn shifted(&self, by: usize) -> Witness {
        Witness {
            j: self.j.iter().map(|x| x + by).collect(),
            k: self.k.iter().map(|x| x + by).collect(),
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum CVerdict {
    True,
    False { witness: Witness },
    Indeterminate { cap: u128 },
}

impl CVerdict {
    pub fn is_true(&self) -> bool {
        matches!(self, CVerdict::True)
    }

    pub fn is_false(&self) -> bool {
        matches!(self, CVerdict::False { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            CVerdict::False { witness } => Some(witness),
            _ => None,
        }
    }
}

impl fmt::Display for CVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CVerdict::True => f.write_str("true"),
            CVerdict::False { .. } => f.write_str("false"),
            CVerdict::Indeterminate { .. } => f.write_str("indeterminate"),
        }
    }
}

fn fmt_labels(ls: &[usize]) -> String {
    let inner: Vec<String> = ls.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "J={} K={}: |<J>∩<K>|={} vs |<J∩K>|={}",
            fmt_labels(&self.j),
            fmt_labels(&self.k),
            self.intersection_order,
            self.expected_order
        )
    }
}

type Memo = HashMap<Vec<Perm>, Option<Witness>>;

/// Recursive intersection-property checker with a shared verdict cache.
///
/// A string is a C-group iff both maximal end-parabolics are (each acting on
/// its own support) and `G_0 ∩ G_{r-1} = G_{0,r-1}`; the two orders are compared.
#[derive(Debug)]
pub struct CChecker {
    cap: u128,
    memo: RwLock<Memo>,
}

impl Default for CChecker {
    fn default() -> Self {
        CChecker::new(DEFAULT_CAP)
    }
}

impl CChecker {
    pub fn new(cap: u128) -> CChecker {
        CChecker { cap, memo: RwLock::new(HashMap::new()) }
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    pub fn check(&self, s: &Sggi) -> CVerdict {
        match self.rec(s) {
            Ok(None) => CVerdict::True,
            Ok(Some(witness)) => CVerdict::False { witness },
            Err(_) => CVerdict::Indeterminate { cap: self.cap },
        }
    }

    fn rec(&self, s: &Sggi) -> Result<Option<Witness>, GroupError> {
        let r = s.rank();
        if r <= 1 {
            return Ok(None);
        }
        if r == 2 {
            // distinct involutions generate a dihedral group meeting trivially in <a>,<b>
            return Ok(if s.gens[0] == s.gens[1] {
                Some(Witness { j: vec![0], k: vec![1], intersection_order: 2, expected_order: 1 })
            } else {
                None
            });
        }
        let local = s.restrict_to_support();
        if let Some(hit) = self.memo.read().unwrap().get(&local.gens) {
            return Ok(hit.clone());
        }
        let out = self.rec_uncached(&local)?;
        self.memo.write().unwrap().insert(local.gens.clone(), out.clone());
        Ok(out)
    }

    fn rec_uncached(&self, s: &Sggi) -> Result<Option<Witness>, GroupError> {
        let r = s.rank();
        let first = Sggi { degree: s.degree, gens: s.gens[1..].to_vec() };
        if let Some(w) = self.rec(&first)? {
            return Ok(Some(w.shifted(1)));
        }
        let last = Sggi { degree: s.degree, gens: s.gens[..r - 1].to_vec() };
        if let Some(w) = self.rec(&last)? {
            return Ok(Some(w));
        }
        let g0 = first.group();
        let gl = last.group();
        let both = PermGroup::new(s.degree, s.gens[1..r - 1].to_vec());
        let expected = both.order();
        // G_{0,r-1} <= G_0 ∩ G_{r-1}; equal orders settle it
        let inter = g0.intersection_order(&gl, self.cap)?;
        if inter != expected {
            return Ok(Some(Witness {
                j: (1..r).collect(),
                k: (0..r - 1).collect(),
                intersection_order: inter,
                expected_order: expected,
            }));
        }
        Ok(None)
    }
}

pub fn is_string_cgroup(s: &Sggi) -> CVerdict {
    CChecker::default().check(s)
}

pub fn is_string_cgroup_with_cap(s: &Sggi, cap: u128) -> CVerdict {
    CChecker::new(cap).check(s)
}

/// Checks `<rho_J> ∩ <rho_K> = <rho_{J∩K}>` for every pair of label sets directly.
pub fn intersection_property_bruteforce(s: &Sggi, cap: u128) -> CVerdict {
    let r = s.rank();
    assert!(r <= 12, "brute force over 4^{r} pairs is not sensible");
    let full = 1usize << r;
    let labels = |m: usize| -> Vec<usize> { (0..r).filter(|i| m >> i & 1 == 1).collect() };
    let groups: Vec<PermGroup> = (0..full).map(|m| s.subgroup(&labels(m))).collect();
    for jm in 0..full {
        for km in 0..full {
            // nested sets satisfy the condition trivially
            if jm & km == jm || jm & km == km {
                continue;
            }
            let expected = groups[jm & km].order();
            match groups[jm].intersection_order(&groups[km], cap) {
                Err(_) => return CVerdict::Indeterminate { cap },
                Ok(inter) if inter != expected => {
                    return CVerdict::False {
                        witness: Witness {
                            j: labels(jm),
                            k: labels(km),
                            intersection_order: inter,
                            expected_order: expected,
                        },
                    }
                }
                Ok(_) => {}
            }
        }
    }
    CVerdict::True
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex4() -> Sggi {
        Sggi::from_cycles(4, &["(1,2)", "(2,3)", "(3,4)"]).unwrap()
    }

    fn hemicube() -> Sggi {
        Sggi::from_cycles(4, &["(1,2)(3,4)", "(2,3)", "(3,4)"]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(simplex4().rank(), 3);
        assert_eq!(Sggi::from_cycles(4, &["(1,2)", "(3,4)", "(2,3)"]), Err(SggiError::StringConditionFails(0, 2)));
        assert_eq!(Sggi::from_cycles(4, &["(1,2,3)", "(3,4)"]), Err(SggiError::NotInvolution(0)));
        assert_eq!(Sggi::from_cycles(4, &["()", "(3,4)"]), Err(SggiError::NotInvolution(0)));
    }

    #[test]
    fn dual_and_parabolics() {
        let s = simplex4();
        assert_eq!(s.dual(), Sggi::from_cycles(4, &["(3,4)", "(2,3)", "(1,2)"]).unwrap());
        assert_eq!(s.dual().dual(), s);
        let p = s.delete(&[1]);
        assert_eq!(p.labels, vec![0, 2]);
        assert_eq!(p.sggi.group().orbits(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(s.select(&[]).sggi.rank(), 0);
        assert_eq!(s.select(&[]).sggi.group().order(), 1);
    }

    #[test]
    fn schlafli_types() {
        assert_eq!(simplex4().schlafli().unwrap(), vec![3, 3]);
        assert_eq!(Sggi::simplex(5).schlafli().unwrap(), vec![3, 3, 3]);
        assert_eq!(hemicube().schlafli().unwrap(), vec![4, 3]);
        assert!(Sggi::simplex(2).schlafli().is_err());
    }

    #[test]
    fn verdicts() {
        assert!(is_string_cgroup(&simplex4()).is_true());
        assert!(is_string_cgroup(&hemicube()).is_true());
        let bad = Sggi::from_cycles(5, &["(5,1)", "(1,2)(3,4)", "(2,3)", "(3,4)"]).unwrap();
        assert!(is_string_cgroup(&bad).is_false());
        assert!(intersection_property_bruteforce(&bad, DEFAULT_CAP).is_false());
        assert!(intersection_property_bruteforce(&simplex4(), DEFAULT_CAP).is_true());
        let dup = Sggi::from_cycles(3, &["(1,2)", "(1,2)"]).unwrap();
        assert!(is_string_cgroup(&dup).is_false());
        assert!(intersection_property_bruteforce(&dup, DEFAULT_CAP).is_false());
    }

    #[test]
    fn text_round_trip() {
        let t = hemicube().to_text();
        assert_eq!(t, "degree 4\n(1,2)(3,4)\n(2,3)\n(3,4)\n");
        assert_eq!(Sggi::parse(&t).unwrap(), hemicube());
        assert!(matches!(Sggi::parse("degree 3\n(1,4)\n"), Err(SggiError::Parse { line: 2, .. })));
    }
}
