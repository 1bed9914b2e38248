//! Brute-force reference implementations.
//!
//! Everything here works straight from the definitions by scanning
//! candidate spaces. Nothing in this module calls into the tree codes, the
//! class machinery or the counting DP, so agreement with those is real
//! evidence.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::decompose::RootedTree;
use crate::funcgraph::{commutes_raw, visit_all_maps};
use crate::{Count, Endofunction, Error, Result};

/// Environment variable that raises or lowers both size bounds.
pub const MAX_BRUTE_N_VAR: &str = "FGC_MAX_BRUTE_N";

/// Largest candidate space a brute hom count will scan.
pub const MAX_HOM_CANDIDATES: u128 = 10_000_000;

/// Largest number of non-root vertices [`brute_antichains`] accepts.
pub const MAX_ANTICHAIN_VERTICES: usize = 20;

/// Largest tree [`brute_tree_aut`] accepts.
pub const MAX_AUT_VERTICES: usize = 8;

/// Size limits for centralizer scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `n` for the `n^n` scan.
    pub all: usize,
    /// Largest `n` for the `n!` scan.
    pub bijective: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            all: 8,
            bijective: 9,
        }
    }
}

impl Bounds {
    /// Same bound for both scans.
    pub fn uniform(n: usize) -> Self {
        Self {
            all: n,
            bijective: n,
        }
    }

    /// Defaults, overridden by `FGC_MAX_BRUTE_N` when it holds an integer.
    pub fn from_env() -> Self {
        std::env::var(MAX_BRUTE_N_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Self::uniform)
            .unwrap_or_default()
    }

    fn check(&self, n: usize, bijective_only: bool) -> Result<()> {
        let (max_n, what) = if bijective_only {
            (self.bijective, "bijective centralizer scan")
        } else {
            (self.all, "centralizer scan")
        };
        if n > max_n {
            return Err(Error::BoundExceeded {
                what,
                n,
                max_n,
                candidates: candidate_estimate(n, bijective_only),
            });
        }
        Ok(())
    }
}

/// Size of the candidate space of a centralizer scan, as a decimal string.
pub fn candidate_estimate(n: usize, bijective_only: bool) -> String {
    let count: Count = if bijective_only {
        (1..=n).map(Count::from).product()
    } else {
        num_traits::pow(Count::from(n), n)
    };
    count.to_string()
}

fn scan(f: &Endofunction, bijective_only: bool, mut visit: impl FnMut(&[usize])) {
    let images = f.images();
    if bijective_only {
        for g in Endofunction::permutations(f.len()) {
            if commutes_raw(images, g.images()) {
                visit(g.images());
            }
        }
    } else {
        visit_all_maps(f.len(), f.len(), |g| {
            if commutes_raw(images, g) {
                visit(g);
            }
        });
    }
}

/// Every `g` with `f∘g = g∘f` (bijective ones only, if asked), sorted.
pub fn brute_centralizer(f: &Endofunction, bijective_only: bool) -> Result<Vec<Endofunction>> {
    brute_centralizer_with(f, bijective_only, &Bounds::default())
}

pub fn brute_centralizer_with(
    f: &Endofunction,
    bijective_only: bool,
    bounds: &Bounds,
) -> Result<Vec<Endofunction>> {
    bounds.check(f.len(), bijective_only)?;
    let mut out = Vec::new();
    scan(f, bijective_only, |g| {
        out.push(Endofunction::new(g.to_vec()).expect("scan stays in range"))
    });
    out.sort();
    Ok(out)
}

/// Size of [`brute_centralizer`] without materializing it.
pub fn brute_centralizer_count(f: &Endofunction, bijective_only: bool) -> Result<u64> {
    brute_centralizer_count_with(f, bijective_only, &Bounds::default())
}

pub fn brute_centralizer_count_with(
    f: &Endofunction,
    bijective_only: bool,
    bounds: &Bounds,
) -> Result<u64> {
    bounds.check(f.len(), bijective_only)?;
    let mut count = 0u64;
    scan(f, bijective_only, |_| count += 1);
    Ok(count)
}

/// Maps `h` from `src_vertices` into the domain of `tgt_f` with
/// `h(f(v)) = tgt_f(h(v))` for every `v`. `src_vertices` must be closed
/// under `f`.
pub fn brute_hom_count(
    src_vertices: &[usize],
    f: &Endofunction,
    tgt_f: &Endofunction,
) -> Result<u64> {
    let all: Vec<usize> = (0..tgt_f.len()).collect();
    brute_hom_count_into(src_vertices, f, tgt_f, &all)
}

/// As [`brute_hom_count`] with images restricted to `tgt_vertices`.
pub fn brute_hom_count_into(
    src_vertices: &[usize],
    f: &Endofunction,
    tgt_f: &Endofunction,
    tgt_vertices: &[usize],
) -> Result<u64> {
    let src: Vec<usize> = src_vertices.iter().copied().sorted().dedup().collect();
    let mut local = vec![usize::MAX; f.len()];
    for (i, &v) in src.iter().enumerate() {
        if v >= f.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: f.len(),
            });
        }
        local[v] = i;
    }
    if let Some(&v) = tgt_vertices.iter().find(|&&v| v >= tgt_f.len()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: tgt_f.len(),
        });
    }
    let succ: Vec<usize> = src
        .iter()
        .map(|&v| match local[f.apply(v)] {
            usize::MAX => Err(Error::Precondition(format!(
                "source vertex set is not closed: {v} maps outside it"
            ))),
            i => Ok(i),
        })
        .collect::<Result<_>>()?;
    let candidates = (tgt_vertices.len() as u128).checked_pow(src.len() as u32);
    if candidates.is_none_or(|c| c > MAX_HOM_CANDIDATES) {
        return Err(Error::BoundExceeded {
            what: "homomorphism scan",
            n: src.len(),
            max_n: src.len(),
            candidates: num_traits::pow(Count::from(tgt_vertices.len()), src.len()).to_string(),
        });
    }
    let mut count = 0;
    visit_all_maps(src.len(), tgt_vertices.len(), |choice| {
        let ok = (0..src.len())
            .all(|i| tgt_vertices[choice[succ[i]]] == tgt_f.apply(tgt_vertices[choice[i]]));
        if ok {
            count += 1;
        }
    });
    Ok(count)
}

fn ancestors(t: &RootedTree, mut v: usize) -> Vec<usize> {
    let mut up = Vec::new();
    while let Some(p) = t.parent_of(v) {
        up.push(p);
        v = p;
    }
    up
}

/// All sets of non-root vertices with no vertex above another, sorted by
/// size and then lexicographically.
pub fn brute_antichains(t: &RootedTree) -> Result<Vec<BTreeSet<usize>>> {
    let proper: Vec<usize> = t
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != t.root())
        .collect();
    let k = proper.len();
    if k > MAX_ANTICHAIN_VERTICES {
        return Err(Error::BoundExceeded {
            what: "antichain scan",
            n: k,
            max_n: MAX_ANTICHAIN_VERTICES,
            candidates: (Count::from(1u8) << k).to_string(),
        });
    }
    let above: Vec<Vec<usize>> = proper.iter().map(|&v| ancestors(t, v)).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << k) {
        let chosen: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
        let independent = chosen.iter().all(|&i| {
            chosen
                .iter()
                .all(|&j| i == j || !above[i].contains(&proper[j]))
        });
        if independent {
            out.push(chosen.iter().map(|&i| proper[i]).collect::<BTreeSet<_>>());
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Number of vertex permutations fixing the root that preserve every
/// parent edge.
pub fn brute_tree_aut(t: &RootedTree) -> Result<u64> {
    let vs = t.vertices();
    if vs.len() > MAX_AUT_VERTICES {
        return Err(Error::BoundExceeded {
            what: "tree automorphism scan",
            n: vs.len(),
            max_n: MAX_AUT_VERTICES,
            candidates: (1..=vs.len())
                .map(Count::from)
                .product::<Count>()
                .to_string(),
        });
    }
    let pos = |v: usize| vs.iter().position(|&w| w == v).expect("tree vertex");
    let parent: Vec<Option<usize>> = vs.iter().map(|&v| t.parent_of(v).map(pos)).collect();
    let root = pos(t.root());
    let count = (0..vs.len())
        .permutations(vs.len())
        .filter(|p| p[root] == root)
        .filter(|p| (0..vs.len()).all(|i| parent[p[i]] == parent[i].map(|q| p[q])))
        .count();
    Ok(count as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::tree_at;

    fn ef(images: &[usize]) -> Endofunction {
        Endofunction::new(images.to_vec()).unwrap()
    }

    #[test]
    fn centralizer_scans() {
        let swap = ef(&[1, 0]);
        assert_eq!(
            brute_centralizer(&swap, false).unwrap(),
            vec![ef(&[0, 1]), ef(&[1, 0])]
        );
        let id3 = Endofunction::identity(3);
        assert_eq!(brute_centralizer(&id3, true).unwrap().len(), 6);
        assert_eq!(brute_centralizer_count(&id3, false).unwrap(), 27);
        let ex7 = ef(&[1, 2, 3, 0, 0, 4, 1, 1, 2, 2]);
        assert!(matches!(
            brute_centralizer(&ex7, false),
            Err(Error::BoundExceeded {
                n: 10,
                max_n: 8,
                ..
            })
        ));
        assert_eq!(candidate_estimate(10, false), "10000000000");
        let w = ef(&[0, 0, 0]);
        assert_eq!(
            brute_centralizer_count_with(&w, false, &Bounds::uniform(3)).unwrap(),
            9
        );
        assert!(brute_centralizer_count_with(&w, true, &Bounds::uniform(2)).is_err());
    }

    #[test]
    fn hom_scans() {
        let f = ef(&[1, 2, 3, 0, 5, 4]);
        assert_eq!(
            brute_hom_count_into(&[0, 1, 2, 3], &f, &f, &[4, 5]).unwrap(),
            2
        );
        assert_eq!(brute_hom_count(&[0, 1, 2, 3], &f, &f).unwrap(), 6);
        let ex7 = ef(&[1, 2, 3, 0, 0, 4, 1, 1, 2, 2]);
        let all: Vec<usize> = (0..10).collect();
        // 10^10 candidates is over the limit
        assert!(brute_hom_count(&all, &ex7, &ex7).is_err());
        assert!(brute_hom_count(&[0], &f, &f).is_err());
    }

    #[test]
    fn antichain_scans() {
        let ex9 = RootedTree::from_parents(0, &[(1, 0), (2, 0), (3, 1), (4, 1), (5, 2)]).unwrap();
        let sets = brute_antichains(&ex9).unwrap();
        assert_eq!(sets.len(), 15);
        assert!(sets.contains(&BTreeSet::from([2, 3, 4])));
        let chain = RootedTree::from_parents(0, &[(1, 0), (2, 1)]).unwrap();
        assert_eq!(brute_antichains(&chain).unwrap().len(), 3);
        let chain3 = RootedTree::from_parents(0, &[(1, 0), (2, 1), (3, 2)]).unwrap();
        assert_eq!(brute_antichains(&chain3).unwrap().len(), 4);
        let single = RootedTree::from_parents(7, &[]).unwrap();
        assert_eq!(brute_antichains(&single).unwrap(), vec![BTreeSet::new()]);
    }

    #[test]
    fn automorphism_scans() {
        let ex5 = ef(&[1, 2, 3, 0, 0, 0, 2, 2]);
        assert_eq!(brute_tree_aut(&tree_at(&ex5, 0).unwrap()).unwrap(), 2);
        assert_eq!(brute_tree_aut(&tree_at(&ex5, 2).unwrap()).unwrap(), 2);
        let chain = RootedTree::from_parents(0, &[(1, 0), (2, 1), (3, 2)]).unwrap();
        assert_eq!(brute_tree_aut(&chain).unwrap(), 1);
        let star = RootedTree::from_parents(0, &[(1, 0), (2, 0), (3, 0), (4, 0)]).unwrap();
        assert_eq!(brute_tree_aut(&star).unwrap(), 24);
    }
}
