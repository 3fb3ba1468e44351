//! Permutations of `{0..n}` with right action.
//!
//! Points are 0-based inside the library; the cycle text form is 1-based
//! (`(1,2)(3,4)`), which is what every human-facing format uses.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("point {point} outside 1..{degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree {0} exceeds the supported maximum of 255")]
    DegreeTooLarge(usize),
    #[error("cannot parse permutation {0:?}: {1}")]
    Parse(String, String),
}

/// A bijection of `{0..degree}` stored as its image list.
///
/// Composition is left to right: `p.then(q)` maps `x` to `q(p(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= 255, "degree {n} too large");
        Perm { img: (0..n as u8).collect() }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Perm, PermError> {
        let n = images.len();
        if n > 255 {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Perm { img: images.iter().map(|&x| x as u8).collect() })
    }

    /// Product of disjoint or overlapping cycles (0-based points), applied left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm, PermError> {
        let mut p = Perm::identity(n);
        for c in cycles {
            for &x in c {
                if x >= n {
                    return Err(PermError::PointOutOfRange { point: x + 1, degree: n });
                }
            }
            if c.len() < 2 {
                continue;
            }
            let mut img: Vec<usize> = (0..n).collect();
            for k in 0..c.len() {
                img[c[k]] = c[(k + 1) % c.len()];
            }
            let cyc = Perm::from_images(&img)?;
            p = p.then(&cyc);
        }
        Ok(p)
    }

    /// The transposition swapping 0-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.img.swap(a, b);
        p
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.img.iter().map(|&x| x as usize)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.img
    }

    /// `self` followed by `q`.
    pub fn then(&self, q: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), q.degree());
        Perm { img: self.img.iter().map(|&x| q.img[x as usize]).collect() }
    }

    pub fn compose(&self, q: &Perm) -> Result<Perm, PermError> {
        if self.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(self.then(q))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { img: inv }
    }

    /// `g^-1 self g`, so that `x^self` maps to `(x^g)^(self^g)`.
    pub fn conj(&self, g: &Perm) -> Perm {
        let mut out = vec![0u8; self.img.len()];
        for (x, &y) in self.img.iter().enumerate() {
            out[g.img[x] as usize] = g.img[y as usize];
        }
        Perm { img: out }
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.img.iter().enumerate().all(|(i, &x)| self.img[x as usize] as usize == i)
    }

    pub fn commutes_with(&self, q: &Perm) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| q.img[x as usize] == self.img[q.img[i] as usize])
    }

    /// Cycles of length at least two, each starting at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// The 2-cycles `(a, b)` with `a < b`, in ascending order of `a`.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        (0..self.degree())
            .filter_map(|a| {
                let b = self.apply(a);
                (a < b && self.apply(b) == a).then_some((a, b))
            })
            .collect()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.apply(x) != x).collect()
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// True for odd permutations.
    pub fn is_odd(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 1
    }

    pub fn parity(&self) -> Parity {
        if self.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Same permutation on a larger domain, new points fixed.
    pub fn extend(&self, n: usize) -> Perm {
        assert!(n >= self.degree() && n <= 255);
        let mut img = self.img.clone();
        img.extend(self.degree() as u8..n as u8);
        Perm { img }
    }

    /// Restriction to a set of points closed under the permutation.
    /// Points outside `keep` are fixed.
    pub fn restrict_to(&self, keep: &[usize]) -> Perm {
        let mut img: Vec<u8> = (0..self.degree() as u8).collect();
        for &x in keep {
            img[x] = self.img[x];
        }
        Perm { img }
    }

    /// Relabels through an injective map `old point -> new point` into a domain of size `n`.
    pub fn relabel(&self, map: &[usize], n: usize) -> Perm {
        let mut img: Vec<u8> = (0..n as u8).collect();
        for (x, &y) in self.img.iter().enumerate() {
            img[map[x]] = map[y as usize] as u8;
        }
        Perm { img }
    }

    /// Parses 1-based cycle notation such as `(1,2)(3,4)`; `()` is the identity.
    pub fn parse(s: &str, n: usize) -> Result<Perm, PermError> {
        let err = |m: &str| PermError::Parse(s.to_string(), m.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if n > 255 {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut cycles = Vec::new();
        let mut rest = t.as_str();
        if rest.is_empty() {
            return Err(err("empty"));
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body.find(')').ok_or_else(|| err("missing ')'"))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let mut c = Vec::new();
            for tok in inner.split(',') {
                let v: usize = tok.parse().map_err(|_| err("bad point"))?;
                if v == 0 || v > n {
                    return Err(PermError::PointOutOfRange { point: v, degree: n });
                }
                if c.contains(&(v - 1)) {
                    return Err(err("repeated point in cycle"));
                }
                c.push(v - 1);
            }
            cycles.push(c);
        }
        Perm::from_cycles(n, &cycles)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

pub fn compose(p: &Perm, q: &Perm) -> Result<Perm, PermError> {
    p.compose(q)
}

pub fn parity(p: &Perm) -> Parity {
    p.parity()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return f.write_str("()");
        }
        for c in cs {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}
