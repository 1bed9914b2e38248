//! Counting and enumerating the functions that commute with `f`.
//!
//! A commuting `g` is an endomorphism of `Γ(f)`, and endomorphisms split
//! over the components of the source: each component maps independently
//! into the whole graph. Hence
//!
//! ```text
//! |C(f)| = ∏_P Σ_{P'} |Hom(P, P')|
//! ```
//!
//! The bijective part is counted from the cyclic-isomorphism classes: every
//! class of `n_T` components with index `s_T` contributes `n_T! · s_T^{n_T}`,
//! and each tree can additionally be twisted by its automorphisms.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::canonical::{self, aut_count, vertex_codes};
use crate::decompose::{self, component_index, cycle_flags, Pseudocycle};
use crate::homcount::{hom_counts_into, HomSearch, SearchMode, TargetGraph};
use crate::num::{factorial, from_usize, power, Counter};
use crate::{Endofunction, Error, Result};

/// `matrix[i][j] = |Hom(P_i, P_j)|` over the components of `f`.
pub fn hom_matrix<C: Counter>(f: &Endofunction) -> Vec<Vec<C>> {
    let comps = decompose::components(f);
    let target = TargetGraph::new(f);
    comps
        .iter()
        .map(|p| hom_counts_into(p, &target, &comps))
        .collect()
}

/// `|C(f)|`.
pub fn count_centralizer<C: Counter>(f: &Endofunction) -> C {
    hom_matrix::<C>(f)
        .into_iter()
        .map(|row| row.into_iter().fold(C::zero(), |acc, x| acc + x))
        .fold(C::one(), |acc, x| acc * x)
}

/// `|C_bij(f)| = ∏_T n_T! s_T^{n_T} · ∏_{z on a cycle} |Aut(T(z))|`.
pub fn count_bij_centralizer<C: Counter>(f: &Endofunction) -> C {
    let comps = decompose::components(f);
    let classes = canonical::classify(&comps);
    let shuffle = classes.iter().fold(C::one(), |acc, class| {
        acc * factorial::<C>(class.multiplicity())
            * power(from_usize::<C>(class.index), class.multiplicity())
    });
    comps
        .iter()
        .flat_map(Pseudocycle::trees)
        .fold(shuffle, |acc, t| acc * aut_count::<C>(t))
}

/// Multiplicities `n_i` of cycle lengths of a permutation, keyed by length.
fn cycle_multiplicities(f: &Endofunction) -> Result<BTreeMap<usize, usize>> {
    let mut counts = BTreeMap::new();
    for len in f.cycle_type()? {
        *counts.entry(len).or_insert(0) += 1;
    }
    Ok(counts)
}

/// `|C_bij(f)| = ∏_i n_i! · i^{n_i}` for a permutation `f`.
pub fn count_bij_centralizer_perm<C: Counter>(f: &Endofunction) -> Result<C> {
    Ok(cycle_multiplicities(f)?
        .into_iter()
        .fold(C::one(), |acc, (i, n_i)| {
            acc * factorial::<C>(n_i) * power(from_usize::<C>(i), n_i)
        }))
}

/// `|C(f)| = ∏_i (Σ_{d | i} d · n_d)^{n_i}` for a permutation `f`.
pub fn count_centralizer_perm<C: Counter>(f: &Endofunction) -> Result<C> {
    let counts = cycle_multiplicities(f)?;
    Ok(counts.iter().fold(C::one(), |acc, (&i, &n_i)| {
        let base: usize = counts
            .iter()
            .filter(|&(&d, _)| i % d == 0)
            .map(|(&d, &n_d)| d * n_d)
            .sum();
        acc * power(from_usize::<C>(base), n_i)
    }))
}

/// Stream of the members of `C(f)` (or `C_bij(f)`) in ascending
/// lexicographic order of their image vectors.
pub struct CentralizerStream<'a> {
    search: HomSearch<'a>,
}

impl Iterator for CentralizerStream<'_> {
    type Item = Endofunction;

    fn next(&mut self) -> Option<Endofunction> {
        let images = self.search.next()?;
        Some(Endofunction::new(images).expect("images stay in range"))
    }
}

/// Enumerates `C(f)`, or only its bijective members.
///
/// Bijective enumeration searches automorphisms directly: every vertex must
/// go to an unused vertex with the same cycle status and the same subtree
/// code, so components only move within their class and trees map by
/// isomorphisms.
pub fn enumerate_centralizer(f: &Endofunction, bijective_only: bool) -> CentralizerStream<'_> {
    let on_cycle = cycle_flags(f);
    let (mode, codes) = if bijective_only {
        (SearchMode::Bijective, Some(vertex_codes(f)))
    } else {
        (SearchMode::All, None)
    };
    CentralizerStream {
        search: HomSearch::new(f.images().to_vec(), &on_cycle, f, mode, codes),
    }
}

fn require_commuting(f: &Endofunction, g: &Endofunction) -> Result<()> {
    if !f.commutes(g)? {
        return Err(Error::NotCommuting);
    }
    Ok(())
}

/// For each component of `f`, the component that `g` sends it into.
pub fn induced_component_map(f: &Endofunction, g: &Endofunction) -> Result<Vec<usize>> {
    require_commuting(f, g)?;
    let comps = decompose::components(f);
    let index = component_index(f.len(), &comps);
    Ok(comps.iter().map(|p| index[g.apply(p.cycle()[0])]).collect())
}

/// Cycle lengths of a permutation `g` commuting with a permutation `f`,
/// predicted from how `g` permutes the cycles of `f`. Sorted ascending.
///
/// Take a cycle of the induced permutation running through `k` cycles of
/// `f` of length `i`, and let `g^k` act on the first of them as the shift
/// `f^j`. That orbit contributes `gcd(i, j)` cycles of length
/// `k · i / gcd(i, j)`, where `gcd(i, 0) = i`.
pub fn predicted_cycle_type(f: &Endofunction, g: &Endofunction) -> Result<Vec<usize>> {
    if !f.is_bijective() || !g.is_bijective() {
        return Err(Error::NotBijective);
    }
    let induced = induced_component_map(f, g)?;
    let comps = decompose::components(f);
    let mut seen = vec![false; comps.len()];
    let mut lengths = Vec::new();
    for start in 0..comps.len() {
        if seen[start] {
            continue;
        }
        let mut k = 0;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = induced[c];
            k += 1;
        }
        let cycle = comps[start].cycle();
        let i = cycle.len();
        let x = cycle[0];
        let gk = g.iterate(x, k);
        let j = (0..i)
            .find(|&j| cycle[j] == gk)
            .expect("g^k maps the cycle to itself");
        let d = i.gcd(&j);
        lengths.extend(std::iter::repeat_n(k * i / d, d));
    }
    lengths.sort_unstable();
    Ok(lengths)
}

/// One star of the forest `g` draws from a source cycle onto a target cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestTree {
    pub root: usize,
    pub leaves: Vec<usize>,
}

impl ForestTree {
    pub fn size(&self) -> usize {
        self.leaves.len() + 1
    }
}

/// The `g`-edges leaving the cycle of component `src` when `g` maps it onto
/// the distinct cycle of component `tgt`; one star per target vertex. For a
/// permutation `f` with cycle lengths `i` and `k` this gives `k` trees of
/// `i/k + 1` vertices.
pub fn tree_forest_shape(
    f: &Endofunction,
    g: &Endofunction,
    src: usize,
    tgt: usize,
) -> Result<Vec<ForestTree>> {
    if !f.is_bijective() {
        return Err(Error::NotBijective);
    }
    let induced = induced_component_map(f, g)?;
    if src >= induced.len() || tgt >= induced.len() {
        return Err(Error::Precondition("component index out of range".into()));
    }
    if src == tgt {
        return Err(Error::Precondition(
            "source and target cycles must be distinct".into(),
        ));
    }
    if induced[src] != tgt {
        return Err(Error::Precondition(format!(
            "g does not map component {src} onto component {tgt}"
        )));
    }
    let comps = decompose::components(f);
    let mut stars: BTreeMap<usize, Vec<usize>> = comps[tgt]
        .cycle()
        .iter()
        .map(|&w| (w, Vec::new()))
        .collect();
    for &v in comps[src].cycle() {
        stars
            .get_mut(&g.apply(v))
            .expect("image on target cycle")
            .push(v);
    }
    Ok(stars
        .into_iter()
        .map(|(root, leaves)| ForestTree { root, leaves })
        .collect())
}

/// Factors contributed by one cyclic-isomorphism class to `|C_bij(f)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFactor<C> {
    pub key: String,
    pub multiplicity: usize,
    pub index: usize,
    /// `n_T!`
    pub permutations: C,
    /// `s_T^{n_T}`
    pub rotations: C,
    /// Product of tree automorphism counts over all member components.
    pub automorphisms: C,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerReport<C> {
    pub total: C,
    pub bijective_total: C,
    pub per_component: Vec<Vec<C>>,
    pub class_summary: Vec<ClassFactor<C>>,
}

pub fn report<C: Counter>(f: &Endofunction) -> CentralizerReport<C> {
    let comps = decompose::components(f);
    let per_component = hom_matrix::<C>(f);
    let total = per_component
        .iter()
        .map(|row| row.iter().fold(C::zero(), |acc, x| acc + x.clone()))
        .fold(C::one(), |acc, x| acc * x);
    let class_summary: Vec<ClassFactor<C>> = canonical::classify(&comps)
        .into_iter()
        .map(|class| {
            let automorphisms = class
                .members
                .iter()
                .flat_map(|&i| comps[i].trees())
                .fold(C::one(), |acc, t| acc * aut_count::<C>(t));
            ClassFactor {
                key: class.key(),
                multiplicity: class.multiplicity(),
                index: class.index,
                permutations: factorial(class.multiplicity()),
                rotations: power(from_usize(class.index), class.multiplicity()),
                automorphisms,
            }
        })
        .collect();
    let bijective_total = class_summary.iter().fold(C::one(), |acc, c| {
        acc * c.permutations.clone() * c.rotations.clone() * c.automorphisms.clone()
    });
    CentralizerReport {
        total,
        bijective_total,
        per_component,
        class_summary,
    }
}
