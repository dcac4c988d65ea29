//! Increasing trees on `[0, p]`: enumeration, the DFS-sequence codec,
//! out-degree profiles, and constrained counting.
//!
//! A tree is stored solely as its parent array; the increasing property
//! `parent(v) < v` makes the array a free choice of `parent(v)` in
//! `[0, v-1]`, so there are exactly `p!` trees.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact_numbers::{exact_div, factorial, int, Integer};
use crate::multi_index::MultiIndex;
use crate::Error;

/// Rooted tree on `[0, p]` with `parent(v) < v` for every `v >= 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IncreasingTree {
    parent: Vec<usize>,
}

impl IncreasingTree {
    /// Wrap a parent array `parent[v-1] = parent(v)`, `v = 1..=p`.
    pub fn new(parent: Vec<usize>) -> Result<Self, Error> {
        for (i, &pa) in parent.iter().enumerate() {
            if pa > i {
                return Err(Error::InvalidStructure("parent(v) must be < v"));
            }
        }
        Ok(Self { parent })
    }

    /// Number of non-root vertices.
    pub fn p(&self) -> usize {
        self.parent.len()
    }

    pub fn parent_of(&self, v: usize) -> usize {
        self.parent[v - 1]
    }

    pub fn parent_array(&self) -> &[usize] {
        &self.parent
    }

    /// Children of `v` in increasing order.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..=self.p()).filter(|&c| self.parent[c - 1] == v).collect()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (1..=self.p()).filter(|&c| self.parent[c - 1] == v).count()
    }

    /// Leaves; for `p >= 1` the root always has vertex 1 as a child, so
    /// leaves lie in `[1, p]`.
    pub fn leaf_count(&self) -> usize {
        (1..=self.p()).filter(|&v| self.out_degree(v) == 0).count()
    }

    /// True when every non-root vertex has at most one child.
    pub fn is_starlike(&self) -> bool {
        (1..=self.p()).all(|v| self.out_degree(v) <= 1)
    }

    /// Out-degree profile `a`: `a(0) + 1` is the number of leaves and
    /// `a(i)` counts vertices in `[1, p]` with exactly `i` children.
    /// Satisfies `weight(a) = p - 1` and `degree(a) = p - d'(0)`.
    pub fn profile(&self) -> MultiIndex {
        let mut a = MultiIndex::zero();
        for v in 1..=self.p() {
            let d = self.out_degree(v);
            if d == 0 {
                continue;
            }
            a = a.plus_unit(d);
        }
        let leaves = self.leaf_count();
        debug_assert!(leaves >= 1);
        a.plus_scaled_unit(0, leaves as u64 - 1)
    }

    /// DFS vertex sequence `c_0..c_p`, visiting the greater child sooner.
    pub fn to_dfs_sequence(&self) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.p() + 1);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            seq.push(v);
            // push ascending so the greatest child is popped first
            stack.extend(self.children(v));
        }
        seq
    }

    /// Render as `[-,p1,p2,...]`, the root marked with a dash.
    pub fn render(&self) -> alloc::string::String {
        use core::fmt::Write as _;
        let mut s = alloc::string::String::from("[-");
        for &pa in &self.parent {
            let _ = write!(s, ",{pa}");
        }
        s.push(']');
        s
    }
}

/// Decode a DFS sequence back into the tree, via the PARENT algorithm:
/// walk the sequence left to right, climbing from the previous vertex until
/// an ancestor smaller than the current label is found.
pub fn from_dfs_sequence(c: &[usize]) -> Result<IncreasingTree, Error> {
    if c.is_empty() || c[0] != 0 {
        return Err(Error::InvalidDfsSequence("sequence must start at 0"));
    }
    let p = c.len() - 1;
    let mut seen = vec![false; p + 1];
    seen[0] = true;
    for &v in &c[1..] {
        if v == 0 || v > p || seen[v] {
            return Err(Error::InvalidDfsSequence(
                "sequence must be a permutation of [1,p] after the 0",
            ));
        }
        seen[v] = true;
    }
    let mut parent = vec![0usize; p];
    for i in 1..=p {
        if i == 1 {
            parent[c[1] - 1] = 0;
            continue;
        }
        let mut v = c[i - 1];
        while c[i] < v {
            v = if v == 0 { 0 } else { parent[v - 1] };
        }
        parent[c[i] - 1] = v;
    }
    IncreasingTree::new(parent)
}

/// All increasing trees on `[0, p]` in lexicographic parent-array order.
pub fn enumerate_trees(p: usize) -> Vec<IncreasingTree> {
    assert!(p >= 1);
    let mut out = Vec::new();
    let mut parent = vec![0usize; p];
    loop {
        out.push(IncreasingTree {
            parent: parent.clone(),
        });
        // odometer: digit v-1 ranges over 0..v
        let mut v = p;
        loop {
            if v == 0 {
                return out;
            }
            parent[v - 1] += 1;
            if parent[v - 1] < v {
                break;
            }
            parent[v - 1] = 0;
            v -= 1;
        }
    }
}

// h_i = p - i - sum_{j > i} l_j is the number of vertices still available
// as children of vertex i when the child sets are fixed top-down.
fn availability(ell: &[u64]) -> Vec<i64> {
    let p = ell.len() + 1;
    let mut h = vec![0i64; ell.len() + 1]; // h[i] for i = 0..=p-1
    let mut tail: i64 = 0;
    for i in (1..p).rev() {
        h[i] = (p - i) as i64 - tail;
        tail += ell[i - 1] as i64;
    }
    h[0] = p as i64 - tail;
    h
}

/// The product `g(l_1..l_{p-1})` counting ordered child choices: for each
/// `i` the clamped falling factorial `(h_i)(h_i - 1)...(h_i - l_i + 1)`,
/// where a nonpositive factor collapses the whole product to zero.
pub fn g_value(ell: &[u64]) -> Integer {
    let h = availability(ell);
    let mut g = Integer::one();
    for (i, &l) in ell.iter().enumerate() {
        for r in 0..l as i64 {
            let factor = h[i + 1] - r;
            if factor <= 0 {
                return Integer::zero();
            }
            g *= int(factor);
        }
    }
    g
}

/// Number of increasing trees on `[0, p]` with `d'(i) = l_i` for
/// `i = 1..=p-1`: `g(l) / prod l_i!`. Positive exactly when the degree
/// sequence is feasible (`sum_{i=j}^{p-1} l_i <= p - j` for all `j`).
pub fn count_trees_with_out_degrees(ell: &[u64]) -> Integer {
    let g = g_value(ell);
    if g.is_zero() {
        return g;
    }
    let mut denom = Integer::one();
    for &l in ell {
        denom *= factorial(l);
    }
    exact_div(&g, &denom)
}

/// Tree families with classical counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeClass {
    /// Trees with a unique internal vertex in `[1, p]`, of out-degree
    /// `m` (all other non-root vertices are leaves); counted by
    /// `C(p, m+1)`. Supported for `1 <= m <= p-1`.
    SingleInternal(usize),
    /// Starlike trees with `m` leaves; counted by `{p brace m}`.
    StarlikeMLeaves(usize),
    /// Trees with `m + 1` leaves; counted by `<p angle m>`.
    MPlusOneLeaves(usize),
    /// Trees whose root has `m` children; counted by `[p brack m]`.
    RootMChildren(usize),
}

/// Exhaustive count of trees on `[0, p]` in the given class.
pub fn count_by_class(p: usize, class: TreeClass) -> Result<Integer, Error> {
    if p == 0 {
        return Err(Error::OutOfRange("p >= 1 required"));
    }
    if let TreeClass::SingleInternal(m) = class {
        // m = 0 would make the distinguished vertex a leaf and non-unique.
        if m == 0 || m > p - 1 {
            return Err(Error::OutOfRange(
                "single-internal class needs 1 <= m <= p-1",
            ));
        }
    }
    let count = enumerate_trees(p)
        .into_iter()
        .filter(|t| matches_class(t, class))
        .count();
    Ok(int(count as i64))
}

fn matches_class(t: &IncreasingTree, class: TreeClass) -> bool {
    match class {
        TreeClass::SingleInternal(m) => {
            let internal: Vec<usize> = (1..=t.p()).filter(|&v| t.out_degree(v) > 0).collect();
            internal.len() == 1 && t.out_degree(internal[0]) == m
        }
        TreeClass::StarlikeMLeaves(m) => t.is_starlike() && t.leaf_count() == m,
        TreeClass::MPlusOneLeaves(m) => t.leaf_count() == m + 1,
        TreeClass::RootMChildren(m) => t.out_degree(0) == m,
    }
}

/// Distribution of balls `D_1..D_p` into urns `f_0..f_{p-1}` where each
/// ball's label strictly exceeds its urn's label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BallUrnDistribution {
    urn_of: Vec<usize>,
}

impl BallUrnDistribution {
    /// `urn_of[i-1]` is the urn of ball `D_i`.
    pub fn new(urn_of: Vec<usize>) -> Result<Self, Error> {
        let p = urn_of.len();
        for (i, &u) in urn_of.iter().enumerate() {
            if u >= i + 1 || u >= p {
                return Err(Error::InvalidDistribution(
                    "ball label must exceed urn label",
                ));
            }
        }
        Ok(Self { urn_of })
    }

    pub fn p(&self) -> usize {
        self.urn_of.len()
    }

    pub fn urn_of(&self, ball: usize) -> usize {
        self.urn_of[ball - 1]
    }

    /// All `p!` valid distributions, lexicographic by urn array.
    pub fn enumerate(p: usize) -> Vec<Self> {
        enumerate_trees(p)
            .into_iter()
            .map(|t| Self {
                urn_of: t.parent_array().to_vec(),
            })
            .collect()
    }
}

/// The tree with an edge `{i, j}` for every ball `D_i` in urn `f_j`; since
/// ball labels exceed urn labels this is exactly the parent array read as a
/// tree, and the map is a bijection onto increasing trees.
pub fn tree_from_distribution(d: &BallUrnDistribution) -> IncreasingTree {
    IncreasingTree {
        parent: d.urn_of.clone(),
    }
}
