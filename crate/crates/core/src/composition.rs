//! Compositions and their cyclic (rotation) classes.
//!
//! A composition of `n` is an ordered sequence of positive parts summing to
//! `n`. A cyclic composition is its equivalence class under rotation; the
//! canonical representative is the lexicographically least rotation, and the
//! order of the class is the number of distinct rotations, which always
//! divides the number of parts.

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// An ordered sequence of positive integer parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Builds a composition; every part must be positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::BadShape("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    /// The parts in order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts that are at least 2.
    pub fn parts_ge2(&self) -> usize {
        self.parts.iter().filter(|&&p| p >= 2).count()
    }

    /// Parses a comma-separated list such as `"3,1,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Composition::new(Vec::new());
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part {tok:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

/// A rotation class of compositions, stored by its lexicographically least
/// rotation together with the number of distinct rotations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicComposition {
    canonical: Vec<usize>,
    order: usize,
}

impl CyclicComposition {
    /// The canonical (lexicographically least) rotation.
    pub fn canonical(&self) -> &[usize] {
        &self.canonical
    }

    /// Number of distinct rotations; equals the minimal period.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Sum of the parts.
    pub fn sum(&self) -> usize {
        self.canonical.iter().sum()
    }

    /// Number of parts.
    pub fn num_parts(&self) -> usize {
        self.canonical.len()
    }

    /// Number of parts that are at least 2 (a rotation invariant).
    pub fn parts_ge2(&self) -> usize {
        self.canonical.iter().filter(|&&p| p >= 2).count()
    }

    /// True when the order equals the number of parts.
    pub fn is_primitive(&self) -> bool {
        self.order == self.canonical.len()
    }

    /// The primitive class this one is a repetition of, and the repetition
    /// count `d` (so `d * primitive.num_parts() == self.num_parts()`).
    pub fn primitive_root(&self) -> (CyclicComposition, usize) {
        let d = self.canonical.len() / self.order;
        let root = cyclic_of(&Composition::new(self.canonical[..self.order].to_vec()).expect("parts stay positive"));
        debug_assert!(root.is_primitive());
        (root, d)
    }
}

impl fmt::Display for CyclicComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.canonical.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", strs.join(","))
    }
}

impl fmt::Debug for CyclicComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicComposition({self}, order {})", self.order)
    }
}

/// The rotation class of a composition.
pub fn cyclic_of(c: &Composition) -> CyclicComposition {
    let parts = c.parts();
    let k = parts.len();
    if k == 0 {
        return CyclicComposition {
            canonical: Vec::new(),
            order: 0,
        };
    }
    let rotation = |start: usize| -> Vec<usize> { (0..k).map(|j| parts[(start + j) % k]).collect() };
    let mut best = rotation(0);
    for start in 1..k {
        let cand = rotation(start);
        if cand < best {
            best = cand;
        }
    }
    // Minimal period = least p > 0 with s[(i+p) mod k] == s[i] for all i.
    let mut order = k;
    for p in 1..=k {
        if k % p == 0 && (0..k).all(|i| best[(i + p) % k] == best[i]) {
            order = p;
            break;
        }
    }
    CyclicComposition { canonical: best, order }
}

/// All compositions of `n` into `k` positive parts with exactly `m` parts at
/// least 2, in lexicographic order. The count is `C(n-k-1, m-1) * C(k, m)`.
pub fn enumerate_compositions(n: usize, k: usize, m: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(k);
    compositions_rec(n, k, m, &mut parts, &mut out);
    out
}

fn compositions_rec(n: usize, k: usize, m: usize, parts: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if k == 0 {
        if n == 0 && m == 0 {
            out.push(Composition::new(parts.clone()).expect("parts are positive"));
        }
        return;
    }
    // Feasibility: k parts need sum >= k, and the m big parts need one extra each.
    if n < k + m || m > k {
        return;
    }
    for p in 1..=(n - (k - 1)) {
        let m_left = if p >= 2 {
            if m == 0 {
                break;
            }
            m - 1
        } else {
            m
        };
        parts.push(p);
        compositions_rec(n - p, k - 1, m_left, parts, out);
        parts.pop();
    }
}

/// All distinct cyclic classes of compositions of `n` into `k` parts with
/// exactly `m` parts at least 2.
pub fn enumerate_cyclic_classes(n: usize, k: usize, m: usize) -> Vec<CyclicComposition> {
    let mut set = BTreeSet::new();
    for c in enumerate_compositions(n, k, m) {
        set.insert(cyclic_of(&c));
    }
    set.into_iter().collect()
}

/// All distinct cyclic classes of compositions of `n` (any part count).
pub fn enumerate_all_cyclic_classes(n: usize) -> Vec<CyclicComposition> {
    let mut set = BTreeSet::new();
    for k in 1..=n {
        for m in 0..=k {
            for c in enumerate_compositions(n, k, m) {
                set.insert(cyclic_of(&c));
            }
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::binomial;
    use num_bigint::BigInt;

    fn cc(parts: &[usize]) -> CyclicComposition {
        cyclic_of(&Composition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Composition::new(vec![1, 0, 2]).is_err());
        assert!(Composition::new(vec![]).is_ok());
    }

    #[test]
    fn cyclic_order_examples() {
        assert_eq!(cc(&[1, 2, 1, 1, 2, 1]).order(), 3);
        assert_eq!(cc(&[1, 1, 1]).order(), 1);
        let c41 = cc(&[4, 1]);
        assert_eq!(c41.canonical(), &[1, 4]);
        assert_eq!(c41.order(), 2);
    }

    #[test]
    fn primitive_root_examples() {
        let (root, d) = cc(&[1, 2, 1, 1, 2, 1]).primitive_root();
        assert_eq!(root, cc(&[1, 2, 1]));
        assert_eq!(d, 2);
        let prim = cc(&[1, 3, 2]);
        assert_eq!(prim.primitive_root(), (prim.clone(), 1));
        let (root, d) = cc(&[2, 2, 2, 2]).primitive_root();
        assert_eq!(root, cc(&[2]));
        assert_eq!(d, 4);
    }

    #[test]
    fn rotation_classes_agree_for_all_rotations() {
        let parts = [3, 1, 2, 1];
        let k = parts.len();
        let base = cc(&parts);
        for start in 0..k {
            let rot: Vec<usize> = (0..k).map(|j| parts[(start + j) % k]).collect();
            assert_eq!(cc(&rot), base);
        }
    }

    #[test]
    fn enumerate_composition_examples() {
        let got: Vec<String> = enumerate_compositions(5, 2, 1).iter().map(|c| c.to_string()).collect();
        assert_eq!(got, vec!["1,4", "4,1"]);
        assert_eq!(enumerate_compositions(4, 4, 0).len(), 1);
        assert_eq!(enumerate_compositions(7, 3, 2).len(), 9);
    }

    #[test]
    fn composition_counts_match_binomials() {
        for n in 1..=14usize {
            for k in 1..=n {
                for m in 0..=k {
                    let count = enumerate_compositions(n, k, m).len();
                    let expected = binomial(n as i64 - k as i64 - 1, m as i64 - 1) * binomial(k as i64, m as i64);
                    assert_eq!(BigInt::from(count), expected, "n={n} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn primitive_root_reconstructs_class() {
        for n in 1..=9usize {
            for class in enumerate_all_cyclic_classes(n) {
                let k = class.num_parts();
                let (root, d) = class.primitive_root();
                assert_eq!(root.num_parts() * d, k);
                assert_eq!(k % class.order(), 0, "order divides k");
                let mut rebuilt = Vec::new();
                for _ in 0..d {
                    rebuilt.extend_from_slice(root.canonical());
                }
                assert_eq!(cc(&rebuilt), class);
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let c = Composition::parse("3, 1, 2").unwrap();
        assert_eq!(c.to_string(), "3,1,2");
        assert_eq!(c.sum(), 6);
        assert_eq!(c.parts_ge2(), 2);
        assert!(Composition::parse("3,x").is_err());
    }
}
