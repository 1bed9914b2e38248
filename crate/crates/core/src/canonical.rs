//! Canonical forms and symmetry counts for the pieces of a functional graph.
//!
//! Rooted trees get the classical bracket code: a leaf is `()`, an inner
//! vertex wraps the sorted codes of its children. A pseudocycle is keyed by
//! the lexicographically least rotation of its cycle of tree codes, and a
//! whole functional graph by the sorted list of its component keys.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::decompose::{self, cycle_flags, Pseudocycle, RootedTree};
use crate::num::{factorial, Counter};
use crate::Endofunction;

/// Canonical code of a rooted tree; equal codes ⇔ isomorphic trees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TreeCode(String);

impl TreeCode {
    pub fn leaf() -> Self {
        TreeCode("()".into())
    }

    fn wrap(mut children: Vec<&str>) -> Self {
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(|c| c.len()).sum::<usize>());
        s.push('(');
        for c in children {
            s.push_str(c);
        }
        s.push(')');
        TreeCode(s)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of vertices in the encoded tree.
    pub fn size(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Codes of every vertex of `t`, keyed by vertex.
fn tree_codes(t: &RootedTree) -> BTreeMap<usize, TreeCode> {
    let mut codes: BTreeMap<usize, TreeCode> = BTreeMap::new();
    for &v in t.vertices().iter().rev() {
        let kids = t.children(v).iter().map(|c| codes[c].as_str()).collect();
        let code = TreeCode::wrap(kids);
        codes.insert(v, code);
    }
    codes
}

pub fn tree_code(t: &RootedTree) -> TreeCode {
    tree_codes(t).remove(&t.root()).expect("root has a code")
}

/// Order of the automorphism group of a rooted tree.
///
/// Each vertex contributes `k!` for every group of `k` isomorphic children.
pub fn aut_count<C: Counter>(t: &RootedTree) -> C {
    let codes = tree_codes(t);
    let mut total = C::one();
    for &v in t.vertices() {
        for (_, group) in &t
            .children(v)
            .iter()
            .map(|c| &codes[c])
            .sorted()
            .chunk_by(|c| *c)
        {
            total *= &factorial::<C>(group.count());
        }
    }
    total
}

/// Primitive period of a cyclic sequence: the least `p` dividing its
/// length with `codes[i] == codes[(i + p) % m]` for all `i`.
pub fn rotation_order<T: PartialEq>(codes: &[T]) -> usize {
    let m = codes.len();
    (1..=m)
        .filter(|p| m.is_multiple_of(*p))
        .find(|&p| (0..m).all(|i| codes[i] == codes[(i + p) % m]))
        .unwrap_or(m)
}

/// Lexicographically least rotation and the offset it starts at.
pub fn min_rotation<T: Ord + Clone>(codes: &[T]) -> (Vec<T>, usize) {
    let m = codes.len();
    let rotated = |k: usize| -> Vec<T> { (0..m).map(|i| codes[(i + k) % m].clone()).collect() };
    (0..m.max(1))
        .map(|k| (rotated(k), k))
        .min()
        .expect("at least one rotation")
}

fn class_key(rotation: &[TreeCode]) -> String {
    format!("[{}]", rotation.iter().join(","))
}

/// Cyclic-isomorphism class of pseudocycles within one functional graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCycleClass {
    /// Tree codes around the cycle, least rotation first.
    pub codes: Vec<TreeCode>,
    /// Indices into [`decompose::components`] of the members.
    pub members: Vec<usize>,
    /// Primitive period of `codes`.
    pub ord: usize,
    /// `cycle_len / ord`.
    pub index: usize,
}

impl TreeCycleClass {
    pub fn key(&self) -> String {
        class_key(&self.codes)
    }

    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }

    pub fn cycle_len(&self) -> usize {
        self.codes.len()
    }
}

/// Codes of the trees around the cycle of `p`, in cycle order.
pub fn cycle_codes(p: &Pseudocycle) -> Vec<TreeCode> {
    p.trees().iter().map(tree_code).collect()
}

/// Canonical key of a single pseudocycle.
pub fn component_key(p: &Pseudocycle) -> String {
    class_key(&min_rotation(&cycle_codes(p)).0)
}

/// Groups the components of `f` into cyclic-isomorphism classes, ordered by
/// their first member.
pub fn classify_components(f: &Endofunction) -> Vec<TreeCycleClass> {
    classify(&decompose::components(f))
}

pub fn classify(comps: &[Pseudocycle]) -> Vec<TreeCycleClass> {
    let mut classes: Vec<TreeCycleClass> = Vec::new();
    for (i, p) in comps.iter().enumerate() {
        let (codes, _) = min_rotation(&cycle_codes(p));
        match classes.iter_mut().find(|c| c.codes == codes) {
            Some(class) => class.members.push(i),
            None => {
                let ord = rotation_order(&codes);
                classes.push(TreeCycleClass {
                    index: codes.len() / ord,
                    codes,
                    members: vec![i],
                    ord,
                });
            }
        }
    }
    classes
}

/// Code of the subtree at every vertex; a cycle vertex gets the code of the
/// full tree hanging at it.
pub fn vertex_codes(f: &Endofunction) -> Vec<TreeCode> {
    let on_cycle = cycle_flags(f);
    let heights = decompose::heights(f);
    let pre = f.preimages();
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(heights[v]));
    let mut codes: Vec<Option<TreeCode>> = vec![None; f.len()];
    for v in order {
        let kids = pre[v]
            .iter()
            .filter(|&&u| !on_cycle[u])
            .map(|&u| codes[u].as_ref().expect("children coded first").as_str())
            .collect();
        codes[v] = Some(TreeCode::wrap(kids));
    }
    codes.into_iter().map(|c| c.expect("all coded")).collect()
}

/// Canonical key of the whole functional graph. Two endofunctions have
/// equal keys iff their graphs are isomorphic, i.e. they are conjugate by a
/// permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GraphKey(String);

impl GraphKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Keys of the components, sorted.
    pub fn component_keys(&self) -> Vec<&str> {
        if self.0 == EMPTY_KEY {
            Vec::new()
        } else {
            self.0.split('+').collect()
        }
    }

    /// Joins component keys into a graph key.
    pub fn from_component_keys<S: AsRef<str>>(keys: &[S]) -> Self {
        if keys.is_empty() {
            return GraphKey(EMPTY_KEY.into());
        }
        GraphKey(keys.iter().map(AsRef::as_ref).sorted().join("+"))
    }
}

const EMPTY_KEY: &str = "empty";

impl fmt::Display for GraphKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn graph_key(f: &Endofunction) -> GraphKey {
    let on_cycle = cycle_flags(f);
    let codes = vertex_codes(f);
    let mut done = vec![false; f.len()];
    let mut keys = Vec::new();
    for z in 0..f.len() {
        if !on_cycle[z] || done[z] {
            continue;
        }
        let mut seq = Vec::new();
        let mut v = z;
        loop {
            done[v] = true;
            seq.push(codes[v].clone());
            v = f.apply(v);
            if v == z {
                break;
            }
        }
        keys.push(class_key(&min_rotation(&seq).0));
    }
    GraphKey::from_component_keys(&keys)
}

pub fn weakly_isomorphic(f: &Endofunction, g: &Endofunction) -> bool {
    f.len() == g.len() && graph_key(f) == graph_key(g)
}
