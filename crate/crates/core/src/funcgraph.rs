//! Endofunctions on `{0, …, n-1}` and their functional graphs.
//!
//! A function `f` is stored as its image vector; its functional graph has
//! one edge `[v, f(v)]` per vertex. `g` commutes with `f` exactly when `g`
//! maps every edge of that graph onto an edge, and both views are exposed
//! here ([`Endofunction::commutes`] and [`Endofunction::is_endomorphism`])
//! so they can be checked against each other.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A total self-map of `{0, …, n-1}`. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Endofunction {
    images: Vec<usize>,
}

/// Edge list `[v, f(v)]` of a functional graph, one edge per vertex.
pub type EdgeList = Vec<[usize; 2]>;

impl Endofunction {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some((index, &value)) = images.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::OutOfRange { index, value, n });
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds `x ↦ rule(x)` on `{0, …, n-1}`; images are validated.
    pub fn from_fn(n: usize, rule: impl FnMut(usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(rule).collect())
    }

    /// Rebuilds a function from its edge list. Every vertex needs exactly
    /// one outgoing edge.
    pub fn from_edges(n: usize, edges: &[[usize; 2]]) -> Result<Self> {
        let mut images = vec![None; n];
        for &[v, w] in edges {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if images[v].replace(w).is_some() {
                return Err(Error::Precondition(format!(
                    "vertex {v} has more than one outgoing edge"
                )));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(v, w)| {
                w.ok_or_else(|| Error::Precondition(format!("vertex {v} has no outgoing edge")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `f^k(x)`.
    pub fn iterate(&self, mut x: usize, k: usize) -> usize {
        for _ in 0..k {
            x = self.images[x];
        }
        x
    }

    pub fn edges(&self) -> EdgeList {
        self.images
            .iter()
            .enumerate()
            .map(|(v, &w)| [v, w])
            .collect()
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// `self ∘ g`, i.e. `x ↦ self(g(x))`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_size(g)?;
        Ok(Self {
            images: g.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    pub fn commutes(&self, g: &Self) -> Result<bool> {
        self.check_size(g)?;
        Ok(commutes_raw(&self.images, &g.images))
    }

    /// True when `g` sends every edge `[v, f(v)]` of this graph to an edge,
    /// i.e. `[g(v), g(f(v))]` is again an edge of the graph.
    pub fn is_endomorphism(&self, g: &Self) -> Result<bool> {
        self.check_size(g)?;
        let edges = self.edges();
        Ok(edges.iter().all(|&[v, w]| {
            let (gv, gw) = (g.apply(v), g.apply(w));
            edges.contains(&[gv, gw])
        }))
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.len()];
        for &y in &self.images {
            if std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        true
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_bijective() {
            return Err(Error::NotBijective);
        }
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Ok(Self { images })
    }

    /// `p ∘ self ∘ p⁻¹`: the same graph with vertex `v` renamed `p(v)`.
    pub fn conjugate_by(&self, p: &Self) -> Result<Self> {
        self.check_size(p)?;
        let p_inv = p.inverse()?;
        p.compose(&self.compose(&p_inv)?)
    }

    /// `f^k`, with `f^0` the identity.
    pub fn power(&self, k: usize) -> Self {
        Self {
            images: (0..self.len()).map(|x| self.iterate(x, k)).collect(),
        }
    }

    /// `preimages()[v]` lists `f⁻¹(v)` in ascending order.
    pub fn preimages(&self) -> Vec<Vec<usize>> {
        let mut pre = vec![Vec::new(); self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            pre[y].push(x);
        }
        pre
    }

    /// Lengths of the cycles of a permutation, sorted ascending.
    pub fn cycle_type(&self) -> Result<Vec<usize>> {
        if !self.is_bijective() {
            return Err(Error::NotBijective);
        }
        let mut seen = vec![false; self.len()];
        let mut lengths = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.images[v];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        Ok(lengths)
    }

    /// All `n^n` endofunctions in ascending lexicographic order.
    pub fn all(n: usize) -> AllEndofunctions {
        AllEndofunctions {
            n,
            next: Some(vec![0; n]),
        }
    }

    /// All `n!` permutations in ascending lexicographic order.
    pub fn permutations(n: usize) -> impl Iterator<Item = Endofunction> {
        (0..n).permutations(n).map(|images| Endofunction { images })
    }
}

impl fmt::Display for Endofunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl TryFrom<Vec<usize>> for Endofunction {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Endofunction> for Vec<usize> {
    fn from(f: Endofunction) -> Self {
        f.images
    }
}

pub(crate) fn commutes_raw(f: &[usize], g: &[usize]) -> bool {
    f.iter().zip(g).all(|(&fx, &gx)| g[fx] == f[gx])
}

/// Lexicographic odometer over all endofunctions of a fixed size.
#[derive(Debug, Clone)]
pub struct AllEndofunctions {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllEndofunctions {
    type Item = Endofunction;

    fn next(&mut self) -> Option<Endofunction> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = self.n;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.n {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Endofunction { images: current })
    }
}

/// Calls `visit` with every map `{0..len} → {0..n}` in lexicographic order
/// without allocating per candidate.
pub(crate) fn visit_all_maps(len: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    if len > 0 && n == 0 {
        return;
    }
    let mut current = vec![0; len];
    loop {
        visit(&current);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            current[i] += 1;
            if current[i] < n {
                break;
            }
            current[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ef(images: &[usize]) -> Endofunction {
        Endofunction::new(images.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        let sq = ef(&[0, 1, 4, 0, 7, 7, 0, 4, 1]);
        assert_eq!(sq.len(), 9);
        assert_eq!(sq, Endofunction::from_fn(9, |x| x * x % 9).unwrap());
        assert!(Endofunction::new(vec![]).unwrap().is_empty());
        assert_eq!(
            Endofunction::new(vec![0, 3, 1]),
            Err(Error::OutOfRange {
                index: 1,
                value: 3,
                n: 3
            })
        );
    }

    #[test]
    fn composition() {
        let f = ef(&[2, 2, 0]);
        assert_eq!(Endofunction::identity(3).compose(&f).unwrap(), f);
        assert_eq!(ef(&[1, 0]).compose(&ef(&[1, 0])).unwrap(), ef(&[0, 1]));
        // f(g(0)) = f(2) = 0, f(g(1)) = f(0) = 1, f(g(2)) = f(1) = 2
        assert_eq!(
            ef(&[1, 2, 0]).compose(&ef(&[2, 0, 1])).unwrap(),
            ef(&[0, 1, 2])
        );
        assert!(matches!(
            f.compose(&ef(&[0])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn commuting_examples() {
        let f = ef(&[1, 0, 2]);
        let g = ef(&[0, 2, 1]);
        // fg = [1,2,0], gf = [2,0,1]
        assert_eq!(f.compose(&g).unwrap(), ef(&[1, 2, 0]));
        assert_eq!(g.compose(&f).unwrap(), ef(&[2, 0, 1]));
        assert!(!f.commutes(&g).unwrap());
        assert!(!ef(&[1, 0]).is_endomorphism(&ef(&[0, 0])).unwrap());
    }

    #[test]
    fn bijectivity() {
        assert!(ef(&[1, 2, 0]).is_bijective());
        assert!(!ef(&[0, 0, 1]).is_bijective());
        assert!(!Endofunction::from_fn(9, |x| x * x % 9)
            .unwrap()
            .is_bijective());
        assert_eq!(ef(&[0, 0]).inverse(), Err(Error::NotBijective));
    }

    #[test]
    fn edge_roundtrip() {
        let f = ef(&[0, 1, 4, 0, 7, 7, 0, 4, 1]);
        assert_eq!(Endofunction::from_edges(9, &f.edges()).unwrap(), f);
        assert!(Endofunction::from_edges(2, &[[0, 1]]).is_err());
    }

    #[test]
    fn commuting_maps_are_endomorphisms_exhaustive() {
        for n in 0..=4 {
            let all: Vec<_> = Endofunction::all(n).collect();
            for f in &all {
                for g in &all {
                    assert_eq!(
                        f.commutes(g).unwrap(),
                        f.is_endomorphism(g).unwrap(),
                        "{f} {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn odometer_counts() {
        assert_eq!(Endofunction::all(0).count(), 1);
        assert_eq!(Endofunction::all(3).count(), 27);
        assert_eq!(Endofunction::permutations(4).count(), 24);
        let mut seen = 0;
        visit_all_maps(2, 3, |_| seen += 1);
        assert_eq!(seen, 9);
        let first: Vec<_> = Endofunction::all(2).collect();
        assert_eq!(
            first,
            vec![ef(&[0, 0]), ef(&[0, 1]), ef(&[1, 0]), ef(&[1, 1])]
        );
    }

    #[test]
    fn cycle_type_of_permutation() {
        assert_eq!(ef(&[1, 0, 3, 4, 2, 5]).cycle_type().unwrap(), vec![1, 2, 3]);
    }

    fn endofunction(max_n: usize) -> impl Strategy<Value = Endofunction> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0..n, n).prop_map(|v| Endofunction::new(v).unwrap())
        })
    }

    fn pair(max_n: usize) -> impl Strategy<Value = (Endofunction, Endofunction, Endofunction)> {
        (1..=max_n).prop_flat_map(|n| {
            (
                proptest::collection::vec(0..n, n),
                proptest::collection::vec(0..n, n),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
                .prop_map(|(f, g, p)| {
                    (
                        Endofunction::new(f).unwrap(),
                        Endofunction::new(g).unwrap(),
                        Endofunction::new(p).unwrap(),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn commutes_with_own_powers(f in endofunction(9), k in 0usize..5) {
            prop_assert!(f.commutes(&f.power(k)).unwrap());
            prop_assert!(f.commutes(&Endofunction::identity(f.len())).unwrap());
        }

        #[test]
        fn commuting_is_symmetric_and_conjugation_invariant((f, g, p) in pair(7)) {
            let c = f.commutes(&g).unwrap();
            prop_assert_eq!(c, g.commutes(&f).unwrap());
            let (fc, gc) = (f.conjugate_by(&p).unwrap(), g.conjugate_by(&p).unwrap());
            prop_assert_eq!(c, fc.commutes(&gc).unwrap());
        }
    }
}
