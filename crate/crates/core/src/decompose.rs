//! Splitting a functional graph into pseudocycles.
//!
//! Every weakly connected component of a functional graph on a finite set
//! contains exactly one directed cycle `(z_0, …, z_{m-1})`; the remaining
//! vertices form rooted trees hanging at the cycle vertices, with edges
//! pointing toward the root.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::{Endofunction, Error, Result};

/// A directed tree with every edge pointing from child to parent.
///
/// Children are kept in ascending vertex order; `vertices()` is the
/// breadth-first order from the root that this induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    vertices: Vec<usize>,
    parent: BTreeMap<usize, usize>,
    children: BTreeMap<usize, Vec<usize>>,
    height: BTreeMap<usize, usize>,
}

impl RootedTree {
    fn build(root: usize, mut children_of: impl FnMut(usize) -> Vec<usize>) -> Self {
        let mut vertices = Vec::new();
        let mut parent = BTreeMap::new();
        let mut children = BTreeMap::new();
        let mut height = BTreeMap::new();
        let mut queue = VecDeque::from([root]);
        height.insert(root, 0);
        while let Some(v) = queue.pop_front() {
            vertices.push(v);
            let mut kids = children_of(v);
            kids.sort_unstable();
            for &c in &kids {
                parent.insert(c, v);
                height.insert(c, height[&v] + 1);
                queue.push_back(c);
            }
            children.insert(v, kids);
        }
        Self {
            root,
            vertices,
            parent,
            children,
            height,
        }
    }

    /// Builds a tree from `(child, parent)` pairs. Every vertex other than
    /// `root` must appear exactly once as a child and reach `root`.
    pub fn from_parents(root: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut by_parent: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for &(c, p) in edges {
            if c == root || !seen.insert(c) {
                return Err(Error::Precondition(format!("vertex {c} has two parents")));
            }
            by_parent.entry(p).or_default().push(c);
        }
        let tree = Self::build(root, |v| by_parent.get(&v).cloned().unwrap_or_default());
        if tree.len() != edges.len() + 1 {
            return Err(Error::Precondition(
                "edges do not form a tree at the root".into(),
            ));
        }
        Ok(tree)
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Breadth-first order from the root.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// A tree always holds its root.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.height.contains_key(&v)
    }

    pub fn parent_of(&self, v: usize) -> Option<usize> {
        self.parent.get(&v).copied()
    }

    pub fn children(&self, v: usize) -> &[usize] {
        self.children.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn height_of(&self, v: usize) -> Option<usize> {
        self.height.get(&v).copied()
    }

    pub fn depth(&self) -> usize {
        self.height.values().copied().max().unwrap_or(0)
    }

    /// Non-root vertices in breadth-first order.
    pub fn proper_vertices(&self) -> &[usize] {
        &self.vertices[1..]
    }

    /// True when `x` lies strictly below `y`, i.e. `y` is reached from `x`
    /// by following parents.
    pub fn is_below(&self, x: usize, y: usize) -> bool {
        let mut v = x;
        while let Some(p) = self.parent_of(v) {
            if p == y {
                return true;
            }
            v = p;
        }
        false
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.is_below(x, y) || self.is_below(y, x)
    }

    /// The subtree of all vertices at or below `x`, rooted at `x`.
    pub fn subtree(&self, x: usize) -> RootedTree {
        Self::build(x, |v| self.children(v).to_vec())
    }

    /// Deletes the root and returns the forest of subtrees at its children.
    pub fn remove_root(&self) -> Vec<RootedTree> {
        self.children(self.root)
            .iter()
            .map(|&c| self.subtree(c))
            .collect()
    }
}

/// One weakly connected component: a directed cycle with a rooted tree at
/// each cycle vertex. `trees[i]` is rooted at `cycle[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pseudocycle {
    cycle: Vec<usize>,
    trees: Vec<RootedTree>,
    size: usize,
}

impl Pseudocycle {
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// All vertices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .trees
            .iter()
            .flat_map(|t| t.vertices().iter().copied())
            .collect();
        vs.sort_unstable();
        vs
    }

    pub fn min_vertex(&self) -> usize {
        self.trees
            .iter()
            .flat_map(|t| t.vertices().iter().copied())
            .min()
            .expect("pseudocycle is never empty")
    }

    /// Index of the tree holding `v`.
    pub fn tree_index_of(&self, v: usize) -> Option<usize> {
        self.trees.iter().position(|t| t.contains(v))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.tree_index_of(v).is_some()
    }

    /// The image of `v` under the function this component came from.
    pub fn successor(&self, v: usize) -> Option<usize> {
        let i = self.tree_index_of(v)?;
        match self.trees[i].parent_of(v) {
            Some(p) => Some(p),
            None => Some(self.cycle[(i + 1) % self.cycle.len()]),
        }
    }
}

/// `flags[v]` is true iff `v` lies on a directed cycle.
///
/// Three-color walk: each start vertex is followed until it meets a vertex
/// that was already finished or is on the current path; in the latter case
/// the tail of the path from that vertex is a new cycle.
pub(crate) fn cycle_flags(f: &Endofunction) -> Vec<bool> {
    #[derive(Clone, Copy, PartialEq, Eq)]
    enum State {
        Unvisited,
        OnPath,
        Done,
    }
    let n = f.len();
    let mut state = vec![State::Unvisited; n];
    let mut on_cycle = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n {
        if state[start] != State::Unvisited {
            continue;
        }
        let mut v = start;
        while state[v] == State::Unvisited {
            state[v] = State::OnPath;
            path.push(v);
            v = f.apply(v);
        }
        if state[v] == State::OnPath {
            for &w in path.iter().rev() {
                on_cycle[w] = true;
                if w == v {
                    break;
                }
            }
        }
        for w in path.drain(..) {
            state[w] = State::Done;
        }
    }
    on_cycle
}

/// `heights(f)[v]` is the number of steps from `v` to the first cycle vertex.
pub fn heights(f: &Endofunction) -> Vec<usize> {
    let on_cycle = cycle_flags(f);
    let pre = f.preimages();
    let mut height = vec![0; f.len()];
    let mut queue: VecDeque<usize> = (0..f.len()).filter(|&v| on_cycle[v]).collect();
    while let Some(v) = queue.pop_front() {
        for &u in &pre[v] {
            if !on_cycle[u] {
                height[u] = height[v] + 1;
                queue.push_back(u);
            }
        }
    }
    height
}

pub fn height(f: &Endofunction, v: usize) -> usize {
    heights(f)[v]
}

pub fn cycle_vertices(f: &Endofunction) -> BTreeSet<usize> {
    cycle_flags(f)
        .into_iter()
        .enumerate()
        .filter_map(|(v, c)| c.then_some(v))
        .collect()
}

fn tree_with(pre: &[Vec<usize>], on_cycle: &[bool], z: usize) -> RootedTree {
    RootedTree::build(z, |v| {
        pre[v].iter().copied().filter(|&u| !on_cycle[u]).collect()
    })
}

/// The full tree rooted at the cycle vertex `z`, without the cycle edge
/// entering `z`.
pub fn tree_at(f: &Endofunction, z: usize) -> Result<RootedTree> {
    if z >= f.len() {
        return Err(Error::VertexOutOfRange {
            vertex: z,
            n: f.len(),
        });
    }
    let on_cycle = cycle_flags(f);
    if !on_cycle[z] {
        return Err(Error::NotACycleVertex(z));
    }
    Ok(tree_with(&f.preimages(), &on_cycle, z))
}

/// All components of the functional graph, ordered by smallest vertex.
/// Each cycle starts at its smallest vertex.
pub fn components(f: &Endofunction) -> Vec<Pseudocycle> {
    let on_cycle = cycle_flags(f);
    let pre = f.preimages();
    let mut done = vec![false; f.len()];
    let mut comps = Vec::new();
    for z in 0..f.len() {
        if !on_cycle[z] || done[z] {
            continue;
        }
        // z is the smallest vertex of its cycle since cycles are visited in
        // ascending order of their first vertex
        let mut cycle = vec![z];
        done[z] = true;
        let mut v = f.apply(z);
        while v != z {
            done[v] = true;
            cycle.push(v);
            v = f.apply(v);
        }
        let trees: Vec<RootedTree> = cycle
            .iter()
            .map(|&c| tree_with(&pre, &on_cycle, c))
            .collect();
        let size = trees.iter().map(RootedTree::len).sum();
        comps.push(Pseudocycle { cycle, trees, size });
    }
    comps.sort_by_key(Pseudocycle::min_vertex);
    comps
}

/// `component_index(f, comps)[v]` is the index of the component holding `v`.
pub(crate) fn component_index(n: usize, comps: &[Pseudocycle]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n];
    for (i, p) in comps.iter().enumerate() {
        for t in p.trees() {
            for &v in t.vertices() {
                idx[v] = i;
            }
        }
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ef(images: &[usize]) -> Endofunction {
        Endofunction::new(images.to_vec()).unwrap()
    }

    fn squares_mod_9() -> Endofunction {
        Endofunction::from_fn(9, |x| x * x % 9).unwrap()
    }

    fn ex7() -> Endofunction {
        ef(&[1, 2, 3, 0, 0, 4, 1, 1, 2, 2])
    }

    #[test]
    fn squares_mod_9_components() {
        let comps = components(&squares_mod_9());
        assert_eq!(comps.len(), 3);
        let sets: Vec<Vec<usize>> = comps.iter().map(Pseudocycle::vertices).collect();
        assert_eq!(sets, vec![vec![0, 3, 6], vec![1, 8], vec![2, 4, 5, 7]]);
        let lens: Vec<usize> = comps.iter().map(Pseudocycle::cycle_len).collect();
        assert_eq!(lens, vec![1, 1, 2]);
        assert_eq!(comps[2].cycle(), &[4, 7]);
        assert_eq!(
            cycle_vertices(&squares_mod_9()),
            BTreeSet::from([0, 1, 4, 7])
        );
        assert_eq!(height(&squares_mod_9(), 3), 1);
        assert_eq!(height(&squares_mod_9(), 2), 1);
    }

    #[test]
    fn identity_and_single_cycle() {
        let comps = components(&Endofunction::identity(4));
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|p| p.size() == 1 && p.cycle_len() == 1));
        let comps = components(&ef(&[1, 2, 3, 0]));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].cycle(), &[0, 1, 2, 3]);
        assert!(comps[0].trees().iter().all(|t| t.len() == 1));
        assert_eq!(cycle_vertices(&ef(&[2, 0, 1])).len(), 3);
    }

    #[test]
    fn ex7_trees() {
        let f = ex7();
        assert_eq!(cycle_vertices(&f), BTreeSet::from([0, 1, 2, 3]));
        let t0 = tree_at(&f, 0).unwrap();
        assert_eq!(t0.vertices(), &[0, 4, 5]);
        assert_eq!(t0.height_of(4), Some(1));
        assert_eq!(t0.height_of(5), Some(2));
        assert_eq!(tree_at(&f, 3).unwrap().len(), 1);
        assert_eq!(height(&f, 5), 2);
        assert_eq!(height(&f, 4), 1);
        assert_eq!(height(&f, 2), 0);
        assert_eq!(tree_at(&f, 4), Err(Error::NotACycleVertex(4)));
        let forest = t0.remove_root();
        assert_eq!(forest.len(), 1);
        assert_eq!(forest[0].root(), 4);
        assert_eq!(forest[0].vertices(), &[4, 5]);
        assert_eq!(forest[0].height_of(5), Some(1));
    }

    #[test]
    fn remove_root_edge_cases() {
        let single = RootedTree::from_parents(0, &[]).unwrap();
        assert!(single.remove_root().is_empty());
        let star = RootedTree::from_parents(0, &[(1, 0), (2, 0), (3, 0)]).unwrap();
        let forest = star.remove_root();
        assert_eq!(forest.len(), 3);
        assert!(forest.iter().all(|t| t.len() == 1));
        assert!(RootedTree::from_parents(0, &[(1, 2)]).is_err());
    }

    #[test]
    fn successor_matches_function() {
        let f = ex7();
        for p in components(&f) {
            for v in p.vertices() {
                assert_eq!(p.successor(v), Some(f.apply(v)));
            }
        }
    }

    fn endofunction(max_n: usize) -> impl Strategy<Value = Endofunction> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0..n, n).prop_map(|v| Endofunction::new(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn decomposition_invariants(f in endofunction(12)) {
            let comps = components(&f);
            let mut all: Vec<usize> = comps.iter().flat_map(|p| p.vertices()).collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..f.len()).collect::<Vec<_>>());
            prop_assert_eq!(comps.iter().map(Pseudocycle::size).sum::<usize>(), f.len());
            let hs = heights(&f);
            let cyc = cycle_vertices(&f);
            for p in &comps {
                // a vertex is on the cycle iff it is reachable from its own image
                let members = p.vertices();
                let reach: BTreeSet<usize> = members.iter().copied()
                    .filter(|&v| (1..=f.len()).any(|k| f.iterate(v, k) == v))
                    .collect();
                prop_assert_eq!(reach, p.cycle().iter().copied().collect::<BTreeSet<_>>());
                prop_assert_eq!(p.cycle()[0], *p.cycle().iter().min().unwrap());
                for (i, t) in p.trees().iter().enumerate() {
                    prop_assert_eq!(t.root(), p.cycle()[i]);
                    prop_assert_eq!(f.apply(p.cycle()[i]), p.cycle()[(i + 1) % p.cycle_len()]);
                    for &v in t.proper_vertices() {
                        prop_assert_eq!(t.parent_of(v), Some(f.apply(v)));
                        prop_assert_eq!(t.height_of(v).unwrap(), hs[v]);
                    }
                }
            }
            for (v, &h) in hs.iter().enumerate() {
                prop_assert!(cyc.contains(&f.iterate(v, h)));
                if h > 0 {
                    prop_assert!(!cyc.contains(&f.iterate(v, h - 1)));
                }
            }
        }
    }
}
