//! Graph homomorphisms between pseudocycles.
//!
//! A map `h` from a source component into `Γ(g)` is a homomorphism when
//! `g(h(v)) = h(succ(v))` for every source vertex. The primary counter is a
//! tree DP: with `H(x, v)` the number of ways to map the subtree at `x` with
//! `x ↦ v`,
//!
//! ```text
//! H(x, v) = ∏_{children c of x} Σ_{u ∈ g⁻¹(v)} H(c, u)
//! ```
//!
//! and a pseudocycle count is a sum over cycle rotations of products of
//! root values. The antichain sum ([`hom_via_antichains`]) computes the same
//! number by a different decomposition and is kept as a cross-check.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use serde::Serialize;

use crate::canonical::vertex_codes;
use crate::decompose::{self, cycle_flags, Pseudocycle, RootedTree};
use crate::num::Counter;
use crate::{Endofunction, Error, Result};

/// A map from source vertices to target vertices, ordered by source.
pub type VertexMap = BTreeMap<usize, usize>;

/// Upper bound on the number of `(rotation, antichain sequence)` terms the
/// antichain sum will visit.
pub const MAX_ANTICHAIN_TERMS: usize = 1 << 22;

/// Preimage index and cycle data of a target graph, shared across queries.
#[derive(Debug, Clone)]
pub struct TargetGraph<'a> {
    f: &'a Endofunction,
    pre: Vec<Vec<usize>>,
    on_cycle: Vec<bool>,
    heights: Vec<usize>,
}

impl<'a> TargetGraph<'a> {
    pub fn new(f: &'a Endofunction) -> Self {
        Self {
            f,
            pre: f.preimages(),
            on_cycle: cycle_flags(f),
            heights: decompose::heights(f),
        }
    }

    pub fn function(&self) -> &Endofunction {
        self.f
    }

    pub fn height(&self, v: usize) -> usize {
        self.heights[v]
    }

    /// Tree vertices at height 1 hanging at the cycle vertex `z`; the roots
    /// of the forest left after removing `z` from its tree.
    pub fn forest_roots(&self, z: usize) -> impl Iterator<Item = usize> + '_ {
        self.pre[z].iter().copied().filter(|&u| !self.on_cycle[u])
    }

    /// The cycle through `z` starting at `z`, or `None` if `z` is off-cycle.
    fn cycle_through(&self, z: usize) -> Option<Vec<usize>> {
        if !self.on_cycle[z] {
            return None;
        }
        let mut cycle = vec![z];
        let mut v = self.f.apply(z);
        while v != z {
            cycle.push(v);
            v = self.f.apply(v);
        }
        Some(cycle)
    }

    /// `H(x, ·)` for every vertex `x` of `t`.
    fn tree_table<C: Counter>(&self, t: &RootedTree) -> HashMap<usize, Vec<C>> {
        let n = self.f.len();
        let mut table: HashMap<usize, Vec<C>> = HashMap::with_capacity(t.len());
        for &x in t.vertices().iter().rev() {
            let mut row = vec![C::one(); n];
            for c in t.children(x) {
                let child = &table[c];
                for (v, cell) in row.iter_mut().enumerate() {
                    let mut sum = C::zero();
                    for &u in &self.pre[v] {
                        sum += &child[u];
                    }
                    *cell *= &sum;
                }
            }
            table.insert(x, row);
        }
        table
    }

    fn root_row<C: Counter>(&self, t: &RootedTree) -> Vec<C> {
        self.tree_table(t).remove(&t.root()).expect("root row")
    }
}

/// Number of maps of `src` into `Γ(tgt_f)` that send the root to `tgt_root`
/// and every edge onto an edge.
pub fn hom_tree_rooted<C: Counter>(src: &RootedTree, tgt_f: &Endofunction, tgt_root: usize) -> C {
    TargetGraph::new(tgt_f).root_row::<C>(src)[tgt_root].clone()
}

fn check_divides(src: &Pseudocycle, tgt: &Pseudocycle) -> Result<()> {
    let (m, l) = (src.cycle_len(), tgt.cycle_len());
    if m % l != 0 {
        return Err(Error::DivisibilityViolation {
            source_len: m,
            target: l,
        });
    }
    Ok(())
}

fn anchored_product<C: Counter>(rows: &[Vec<C>], tgt_cycle: &[usize], k: usize) -> C {
    let l = tgt_cycle.len();
    rows.iter().enumerate().fold(C::one(), |acc, (i, row)| {
        acc * row[tgt_cycle[(k + i) % l]].clone()
    })
}

/// Homomorphisms `src → tgt` that send the first cycle vertex of `src` to
/// position `k` of the cycle of `tgt`.
pub fn hom_anchored<C: Counter>(
    src: &Pseudocycle,
    tgt: &Pseudocycle,
    tgt_f: &Endofunction,
    k: usize,
) -> Result<C> {
    check_divides(src, tgt)?;
    if k >= tgt.cycle_len() {
        return Err(Error::Precondition(format!(
            "rotation {k} out of range for cycle length {}",
            tgt.cycle_len()
        )));
    }
    let target = TargetGraph::new(tgt_f);
    let rows: Vec<Vec<C>> = src.trees().iter().map(|t| target.root_row(t)).collect();
    Ok(anchored_product(&rows, tgt.cycle(), k))
}

/// `|Hom(src, tgt)|`; zero unless the target cycle length divides the
/// source cycle length.
pub fn hom_pseudocycle<C: Counter>(
    src: &Pseudocycle,
    tgt: &Pseudocycle,
    tgt_f: &Endofunction,
) -> C {
    hom_counts_into(src, &TargetGraph::new(tgt_f), std::slice::from_ref(tgt))
        .pop()
        .expect("one target")
}

/// `|Hom(src, P')|` for each `P'` in `targets`, sharing one DP table.
pub fn hom_counts_into<C: Counter>(
    src: &Pseudocycle,
    target: &TargetGraph<'_>,
    targets: &[Pseudocycle],
) -> Vec<C> {
    let m = src.cycle_len();
    let mut rows: Option<Vec<Vec<C>>> = None;
    targets
        .iter()
        .map(|tgt| {
            let l = tgt.cycle_len();
            if !m.is_multiple_of(l) {
                return C::zero();
            }
            let rows = rows
                .get_or_insert_with(|| src.trees().iter().map(|t| target.root_row(t)).collect());
            (0..l).fold(C::zero(), |acc, k| {
                acc + anchored_product(rows, tgt.cycle(), k)
            })
        })
        .collect()
}

/// A set of non-root tree vertices no two of which are comparable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Antichain {
    pub vertices: BTreeSet<usize>,
}

impl Antichain {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Members at height `h` of `t`.
    pub fn at_height<'a>(
        &'a self,
        t: &'a RootedTree,
        h: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        self.vertices
            .iter()
            .copied()
            .filter(move |&x| t.height_of(x) == Some(h))
    }
}

impl<const N: usize> From<[usize; N]> for Antichain {
    fn from(vs: [usize; N]) -> Self {
        Antichain {
            vertices: vs.into_iter().collect(),
        }
    }
}

/// Antichains of the subtree at `x` (may contain `x` itself).
fn antichains_below(t: &RootedTree, x: usize) -> Vec<BTreeSet<usize>> {
    let mut out = forest_antichains(t, t.children(x));
    out.push(BTreeSet::from([x]));
    out
}

fn forest_antichains(t: &RootedTree, roots: &[usize]) -> Vec<BTreeSet<usize>> {
    roots.iter().fold(vec![BTreeSet::new()], |acc, &c| {
        let below = antichains_below(t, c);
        acc.iter()
            .cartesian_product(below.iter())
            .map(|(a, b)| a.union(b).copied().collect())
            .collect()
    })
}

/// All antichains of non-root vertices of `t`, including the empty one,
/// sorted by size and then lexicographically.
pub fn antichains(t: &RootedTree) -> Vec<Antichain> {
    let mut all = forest_antichains(t, t.children(t.root()));
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all.into_iter()
        .map(|vertices| Antichain { vertices })
        .collect()
}

/// `|Inc(T)| = ∏_{c child of root} A(c)` with `A(c) = 1 + ∏_{d child of c} A(d)`.
pub fn antichain_count<C: Counter>(t: &RootedTree) -> C {
    fn below<C: Counter>(t: &RootedTree, x: usize) -> C {
        let inner = t
            .children(x)
            .iter()
            .fold(C::one(), |acc, &d| acc * below::<C>(t, d));
        C::one() + inner
    }
    t.children(t.root())
        .iter()
        .fold(C::one(), |acc, &c| acc * below::<C>(t, c))
}

/// One term of the antichain sum for a fixed rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntichainTerm<C> {
    pub antichains: Vec<Antichain>,
    pub contribution: C,
}

/// Every antichain sequence for anchor rotation `k` together with its
/// contribution `∏_i ∏_h ∏_{x ∈ A_i(h)} |Hom(T(x), T̃'_{i+k-h+1})|`.
///
/// A member `x` at height `h` of tree `i` lands on a height-1 vertex of the
/// target tree `h - 1` steps back along the cycle from the image of the
/// `i`-th cycle vertex.
pub fn antichain_terms<C: Counter>(
    src: &Pseudocycle,
    tgt: &Pseudocycle,
    tgt_f: &Endofunction,
    k: usize,
) -> Result<Vec<AntichainTerm<C>>> {
    check_divides(src, tgt)?;
    let l = tgt.cycle_len();
    if k >= l {
        return Err(Error::Precondition(format!(
            "rotation {k} out of range for cycle length {l}"
        )));
    }
    let per_tree: Vec<Vec<Antichain>> = src.trees().iter().map(antichains).collect();
    let total = per_tree
        .iter()
        .try_fold(l, |acc, a| acc.checked_mul(a.len()));
    if total.is_none_or(|t| t > MAX_ANTICHAIN_TERMS) {
        return Err(Error::BoundExceeded {
            what: "antichain sum",
            n: src.size(),
            max_n: 0,
            candidates: total.map_or_else(|| "overflow".into(), |t| t.to_string()),
        });
    }
    let target = TargetGraph::new(tgt_f);
    let mut factor_memo: HashMap<(usize, usize), C> = HashMap::new();
    let mut factor = |tree: &RootedTree, x: usize, pos: usize| -> C {
        factor_memo
            .entry((x, pos))
            .or_insert_with(|| {
                let sub = tree.subtree(x);
                let row = target.root_row::<C>(&sub);
                target
                    .forest_roots(tgt.cycle()[pos])
                    .fold(C::zero(), |acc, r| acc + row[r].clone())
            })
            .clone()
    };
    let mut terms = Vec::new();
    for seq in per_tree.iter().map(|a| a.iter()).multi_cartesian_product() {
        let mut contribution = C::one();
        for (i, a) in seq.iter().enumerate() {
            let tree = &src.trees()[i];
            for &x in &a.vertices {
                let h = tree.height_of(x).expect("antichain member in tree");
                let pos = (i + k + 1 + l * h - h) % l;
                contribution *= &factor(tree, x, pos);
            }
        }
        terms.push(AntichainTerm {
            antichains: seq.into_iter().cloned().collect(),
            contribution,
        });
    }
    Ok(terms)
}

/// `|Hom(src, tgt)|` as a sum over rotations and antichain sequences.
/// Exponential in tree size; guarded by [`MAX_ANTICHAIN_TERMS`].
pub fn hom_via_antichains<C: Counter>(
    src: &Pseudocycle,
    tgt: &Pseudocycle,
    tgt_f: &Endofunction,
) -> Result<C> {
    if !src.cycle_len().is_multiple_of(tgt.cycle_len()) {
        return Ok(C::zero());
    }
    let mut total = C::zero();
    for k in 0..tgt.cycle_len() {
        for term in antichain_terms::<C>(src, tgt, tgt_f, k)? {
            total += &term.contribution;
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SearchMode {
    All,
    Bijective,
}

/// Lexicographic backtracking over homomorphisms from a successor-closed
/// source vertex set into a target graph.
///
/// Assigning a vertex forces its whole forward orbit. A candidate is only
/// accepted if every still unassigned child of a newly assigned vertex has
/// a feasible image, so the search never dead-ends and visits each
/// homomorphism exactly once, in increasing order of the image vector.
pub(crate) struct HomSearch<'a> {
    succ: Vec<usize>,
    children: Vec<Vec<usize>>,
    tgt: &'a Endofunction,
    tgt_pre: Vec<Vec<usize>>,
    /// `feasible[x][u]`: the subtree at tree vertex `x` maps with `x ↦ u`.
    feasible: Vec<Vec<bool>>,
    /// Bijective mode: canonical codes and cycle flags of both sides.
    codes: Option<Codes>,
    assign: Vec<Option<usize>>,
    used: Vec<bool>,
    stack: Vec<Frame>,
    started: bool,
    finished: bool,
}

struct Codes {
    src: Vec<(bool, crate::canonical::TreeCode)>,
    tgt: Vec<(bool, crate::canonical::TreeCode)>,
}

struct Frame {
    pos: usize,
    candidate: usize,
    assigned: Vec<usize>,
}

impl<'a> HomSearch<'a> {
    /// `succ` and `src_on_cycle` are indexed by local position; `succ` must
    /// stay inside `0..succ.len()`.
    pub(crate) fn new(
        succ: Vec<usize>,
        src_on_cycle: &[bool],
        tgt: &'a Endofunction,
        mode: SearchMode,
        src_codes: Option<Vec<crate::canonical::TreeCode>>,
    ) -> Self {
        let len = succ.len();
        let n = tgt.len();
        let tgt_pre = tgt.preimages();
        let mut children = vec![Vec::new(); len];
        for (x, &s) in succ.iter().enumerate() {
            if !src_on_cycle[x] {
                children[s].push(x);
            }
        }
        // bottom-up order over tree vertices: repeatedly peel vertices whose
        // children are all done
        let mut feasible = vec![Vec::new(); len];
        if mode == SearchMode::All {
            let mut pending: Vec<usize> = (0..len).map(|x| children[x].len()).collect();
            let mut ready: Vec<usize> = (0..len)
                .filter(|&x| !src_on_cycle[x] && pending[x] == 0)
                .collect();
            while let Some(x) = ready.pop() {
                feasible[x] = (0..n)
                    .map(|v| {
                        children[x]
                            .iter()
                            .all(|&c| tgt_pre[v].iter().any(|&u| feasible[c][u]))
                    })
                    .collect();
                let p = succ[x];
                pending[p] -= 1;
                if pending[p] == 0 && !src_on_cycle[p] {
                    ready.push(p);
                }
            }
        }
        let codes = (mode == SearchMode::Bijective).then(|| {
            let src_codes = src_codes.expect("bijective search needs source codes");
            let tgt_cycle = cycle_flags(tgt);
            Codes {
                src: src_on_cycle.iter().copied().zip(src_codes).collect(),
                tgt: tgt_cycle.into_iter().zip(vertex_codes(tgt)).collect(),
            }
        });
        Self {
            succ,
            children,
            tgt,
            tgt_pre,
            feasible,
            codes,
            assign: vec![None; len],
            used: vec![false; n],
            stack: Vec::new(),
            started: false,
            finished: false,
        }
    }

    fn undo(&mut self, assigned: &[usize]) {
        for &v in assigned {
            if let Some(b) = self.assign[v].take() {
                self.used[b] = false;
            }
        }
    }

    fn child_feasible(&self, c: usize, b: usize) -> bool {
        match &self.codes {
            None => self.tgt_pre[b].iter().any(|&u| self.feasible[c][u]),
            Some(codes) => self.tgt_pre[b]
                .iter()
                .any(|&u| !self.used[u] && codes.tgt[u] == codes.src[c]),
        }
    }

    /// Tries `pos ↦ a`; on success returns the vertices it assigned.
    fn try_assign(&mut self, pos: usize, a: usize) -> Option<Vec<usize>> {
        let mut assigned = Vec::new();
        let (mut v, mut b) = (pos, a);
        let ok = loop {
            if let Some(x) = self.assign[v] {
                break x == b;
            }
            if let Some(codes) = &self.codes {
                if self.used[b] || codes.src[v] != codes.tgt[b] {
                    break false;
                }
            }
            self.assign[v] = Some(b);
            self.used[b] = true;
            assigned.push(v);
            v = self.succ[v];
            b = self.tgt.apply(b);
        };
        let ok = ok
            && assigned.iter().all(|&w| {
                let b = self.assign[w].expect("just assigned");
                self.children[w]
                    .iter()
                    .all(|&c| self.assign[c].is_some() || self.child_feasible(c, b))
            });
        if ok {
            Some(assigned)
        } else {
            self.undo(&assigned);
            None
        }
    }

    fn search(&mut self, mut pos: usize, mut from: usize) -> bool {
        let len = self.succ.len();
        loop {
            while pos < len && self.assign[pos].is_some() {
                pos += 1;
            }
            if pos == len {
                return true;
            }
            let found =
                (from..self.tgt.len()).find_map(|a| self.try_assign(pos, a).map(|s| (a, s)));
            match found {
                Some((candidate, assigned)) => {
                    self.stack.push(Frame {
                        pos,
                        candidate,
                        assigned,
                    });
                    pos += 1;
                    from = 0;
                }
                None => match self.stack.pop() {
                    Some(frame) => {
                        self.undo(&frame.assigned);
                        pos = frame.pos;
                        from = frame.candidate + 1;
                    }
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for HomSearch<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.finished {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.search(0, 0)
        } else {
            match self.stack.pop() {
                Some(frame) => {
                    self.undo(&frame.assigned);
                    self.search(frame.pos, frame.candidate + 1)
                }
                None => false,
            }
        };
        if found {
            Some(self.assign.iter().map(|a| a.expect("complete")).collect())
        } else {
            self.finished = true;
            None
        }
    }
}

/// Stream of every homomorphism from `src` into `Γ(tgt_f)`, ascending in
/// the image vector of the source vertices sorted by id.
pub struct HomStream<'a> {
    vertices: Vec<usize>,
    search: HomSearch<'a>,
}

impl Iterator for HomStream<'_> {
    type Item = VertexMap;

    fn next(&mut self) -> Option<VertexMap> {
        let images = self.search.next()?;
        Some(self.vertices.iter().copied().zip(images).collect())
    }
}

pub fn enumerate_homs<'a>(src: &Pseudocycle, tgt_f: &'a Endofunction) -> HomStream<'a> {
    let vertices = src.vertices();
    let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let succ: Vec<usize> = vertices
        .iter()
        .map(|&v| local[&src.successor(v).expect("vertex of src")])
        .collect();
    let cycle: BTreeSet<usize> = src.cycle().iter().copied().collect();
    let on_cycle: Vec<bool> = vertices.iter().map(|v| cycle.contains(v)).collect();
    HomStream {
        vertices,
        search: HomSearch::new(succ, &on_cycle, tgt_f, SearchMode::All, None),
    }
}

/// The triple that determines a homomorphism of a pseudocycle: the image of
/// the first cycle vertex, one antichain per tree (the vertices whose images
/// sit at height 1), and the restriction to the subtree of each member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomTriple {
    pub anchor_image: usize,
    pub antichains: Vec<Antichain>,
    pub tree_homs: BTreeMap<usize, VertexMap>,
}

fn check_hom(h: &VertexMap, src: &Pseudocycle, tgt_f: &Endofunction) -> Result<()> {
    for v in src.vertices() {
        let hv = *h.get(&v).ok_or(Error::NotAHomomorphism(v))?;
        let hs = *h
            .get(&src.successor(v).expect("vertex of src"))
            .ok_or(Error::NotAHomomorphism(v))?;
        if hv >= tgt_f.len() || tgt_f.apply(hv) != hs {
            return Err(Error::NotAHomomorphism(v));
        }
    }
    if h.len() != src.size() {
        return Err(Error::Precondition(
            "map has vertices outside the source".into(),
        ));
    }
    Ok(())
}

pub fn hom_to_triple(h: &VertexMap, src: &Pseudocycle, tgt_f: &Endofunction) -> Result<HomTriple> {
    check_hom(h, src, tgt_f)?;
    let heights = decompose::heights(tgt_f);
    let antichains: Vec<Antichain> = src
        .trees()
        .iter()
        .map(|t| Antichain {
            vertices: t
                .proper_vertices()
                .iter()
                .copied()
                .filter(|x| heights[h[x]] == 1)
                .collect(),
        })
        .collect();
    let mut tree_homs = BTreeMap::new();
    for (t, a) in src.trees().iter().zip(&antichains) {
        for &x in &a.vertices {
            let sub = t.subtree(x);
            tree_homs.insert(x, sub.vertices().iter().map(|v| (*v, h[v])).collect());
        }
    }
    Ok(HomTriple {
        anchor_image: h[&src.cycle()[0]],
        antichains,
        tree_homs,
    })
}

pub fn triple_to_hom(
    triple: &HomTriple,
    src: &Pseudocycle,
    tgt_f: &Endofunction,
) -> Result<VertexMap> {
    let invalid = |msg: String| Error::InvalidTriple(msg);
    let target = TargetGraph::new(tgt_f);
    let m = src.cycle_len();
    if triple.anchor_image >= tgt_f.len() {
        return Err(invalid(format!(
            "anchor {} out of range",
            triple.anchor_image
        )));
    }
    let tgt_cycle = target.cycle_through(triple.anchor_image).ok_or_else(|| {
        invalid(format!(
            "anchor {} is not a cycle vertex",
            triple.anchor_image
        ))
    })?;
    let l = tgt_cycle.len();
    if !m.is_multiple_of(l) {
        return Err(invalid(format!(
            "target cycle length {l} does not divide {m}"
        )));
    }
    if triple.antichains.len() != m {
        return Err(invalid(format!(
            "expected {m} antichains, got {}",
            triple.antichains.len()
        )));
    }
    let mut h = VertexMap::new();
    let mut members = BTreeSet::new();
    for (i, (t, a)) in src.trees().iter().zip(&triple.antichains).enumerate() {
        for (&x, &y) in a.vertices.iter().tuple_combinations() {
            if t.comparable(x, y) {
                return Err(invalid(format!("{x} and {y} are comparable")));
            }
        }
        let covered: BTreeSet<usize> = a
            .vertices
            .iter()
            .map(|&x| {
                if !t.contains(x) || x == t.root() {
                    return Err(invalid(format!("{x} is not a proper vertex of tree {i}")));
                }
                Ok(t.subtree(x).vertices().to_vec())
            })
            .flatten_ok()
            .collect::<Result<_>>()?;
        // everything outside the antichain subtrees sits on the cycle, `height`
        // steps behind the image of the root
        for &v in t.vertices() {
            if covered.contains(&v) {
                continue;
            }
            let hv = t.height_of(v).expect("vertex of tree");
            h.insert(v, tgt_cycle[(i + l * hv - hv) % l]);
        }
        members.extend(a.vertices.iter().copied());
        for &x in &a.vertices {
            let map = triple
                .tree_homs
                .get(&x)
                .ok_or_else(|| invalid(format!("missing subtree map for {x}")))?;
            let sub = t.subtree(x);
            if map.len() != sub.len() || sub.vertices().iter().any(|v| !map.contains_key(v)) {
                return Err(invalid(format!("subtree map for {x} has the wrong domain")));
            }
            if map.values().any(|&y| y >= tgt_f.len()) {
                return Err(invalid(format!("subtree map for {x} leaves the target")));
            }
            if target.height(map[&x]) != 1 {
                return Err(invalid(format!("image of {x} is not at height 1")));
            }
            h.extend(map.iter().map(|(&k, &v)| (k, v)));
        }
    }
    if triple.tree_homs.keys().any(|x| !members.contains(x)) {
        return Err(invalid(
            "subtree map for a vertex outside the antichains".into(),
        ));
    }
    check_hom(&h, src, tgt_f).map_err(|e| invalid(e.to_string()))?;
    Ok(h)
}
