//! The combinatorial model behind `alpha_{pm}(k)`: distributions of
//! balls `D_1..D_p` into urns `x_0..x_{pk}`, the forests that encode
//! them, the edge-coloring map onto increasing trees, and the bijection
//! between forests and (colored tree, root component) pairs.
//!
//! Branch symbols `r_1..r_{p-1}` are encoded as the negative integers
//! `-1..-(p-1)`, which makes "smaller than any positive vertex" the
//! native integer order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::alpha_beta::alpha_rec;
use crate::exact_numbers::{int, int_pow, stirling_first_unsigned, stirling_second, Integer};
use crate::increasing_trees::IncreasingTree;
use crate::report::Report;
use crate::Error;

pub const DEFAULT_ENUM_BUDGET: u64 = 1_000_000;

/// Placement of balls `D_1..D_p` into urns `x_0..x_{pk}`: urn `x_0` is
/// unbounded, every other urn holds at most one ball, and `D_m` may only
/// enter `x_j` when `ceil(j/k) < m`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PKDistribution {
    p: usize,
    k: usize,
    urn_of: Vec<usize>,
}

impl PKDistribution {
    pub fn new(p: usize, k: usize, urn_of: Vec<usize>) -> Result<Self, Error> {
        if p == 0 || k == 0 {
            return Err(Error::OutOfRange("need p >= 1 and k >= 1"));
        }
        if urn_of.len() != p {
            return Err(Error::InvalidDistribution("urn vector length must equal p"));
        }
        let mut seen = vec![false; p * k + 1];
        for (idx, &j) in urn_of.iter().enumerate() {
            let m = idx + 1;
            // ceil(j/k) < m, i.e. j <= (m-1)k
            if j > (m - 1) * k {
                return Err(Error::InvalidDistribution("ball label must exceed the urn block"));
            }
            if j > 0 {
                if seen[j] {
                    return Err(Error::InvalidDistribution("urn above x_0 holds more than one ball"));
                }
                seen[j] = true;
            }
        }
        Ok(Self { p, k, urn_of })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Urn index of ball `D_m` (0 means `x_0`), `m` in `[1, p]`.
    pub fn urn_of(&self, m: usize) -> usize {
        self.urn_of[m - 1]
    }

    pub fn urns(&self) -> &[usize] {
        &self.urn_of
    }

    pub fn balls_in_x0(&self) -> usize {
        self.urn_of.iter().filter(|&&j| j == 0).count()
    }
}

/// All valid distributions under the default enumeration budget, in
/// lexicographic order of the urn vector.
pub fn enumerate_distributions(p: usize, k: usize) -> Result<Vec<PKDistribution>, Error> {
    enumerate_distributions_with_budget(p, k, DEFAULT_ENUM_BUDGET)
}

pub fn enumerate_distributions_with_budget(
    p: usize,
    k: usize,
    budget: u64,
) -> Result<Vec<PKDistribution>, Error> {
    if p == 0 || k == 0 {
        return Err(Error::OutOfRange("need p >= 1 and k >= 1"));
    }
    let mut out = Vec::new();
    let mut urn_of = Vec::with_capacity(p);
    let mut occupied = vec![false; (p - 1) * k + 1];
    place_ball(p, k, budget, &mut urn_of, &mut occupied, &mut out)?;
    Ok(out)
}

fn place_ball(
    p: usize,
    k: usize,
    budget: u64,
    urn_of: &mut Vec<usize>,
    occupied: &mut Vec<bool>,
    out: &mut Vec<PKDistribution>,
) -> Result<(), Error> {
    let m = urn_of.len() + 1;
    if m > p {
        if out.len() as u64 >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        out.push(PKDistribution {
            p,
            k,
            urn_of: urn_of.clone(),
        });
        return Ok(());
    }
    for j in 0..=(m - 1) * k {
        if j > 0 && occupied[j] {
            continue;
        }
        if j > 0 {
            occupied[j] = true;
        }
        urn_of.push(j);
        let r = place_ball(p, k, budget, urn_of, occupied, out);
        urn_of.pop();
        if j > 0 {
            occupied[j] = false;
        }
        r?;
    }
    Ok(())
}

/// A forest on `{0..(p-1)k+1} ∪ {r_1..r_{p-1}}` (with `r_i` stored as
/// `-i`) encoding a distribution: the children of `r_i` are the fixed
/// block `(i-1)k+2 .. ik`, and ball `D_m`'s vertex `(m-1)k+1` hangs
/// under 0 (urn `x_0`) or under the urn vertex holding it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PKForest {
    p: usize,
    k: usize,
    /// parent of every vertex in `[1, (p-1)k+1]`; roots `0` and `-i`
    /// carry no entry.
    parent: BTreeMap<i64, i64>,
}

impl PKForest {
    pub fn new(p: usize, k: usize, parent: BTreeMap<i64, i64>) -> Result<Self, Error> {
        if p == 0 || k < 2 {
            return Err(Error::UnsupportedK);
        }
        let top = ((p - 1) * k + 1) as i64;
        if parent.len() as i64 != top {
            return Err(Error::InvalidStructure("parent map must cover [1, (p-1)k+1]"));
        }
        let mut child_count: BTreeMap<i64, usize> = BTreeMap::new();
        for (&v, &u) in &parent {
            if v < 1 || v > top {
                return Err(Error::InvalidStructure("vertex outside [1, (p-1)k+1]"));
            }
            let ok_parent = u == 0
                || (u >= 1 && u < v)
                || (-(u) as usize) <= p.saturating_sub(1) && u < 0;
            if !ok_parent {
                return Err(Error::InvalidStructure("parent must be a smaller vertex or a branch root"));
            }
            *child_count.entry(u).or_insert(0) += 1;
        }
        // fixed block edges and vertex 1 under 0
        if parent.get(&1) != Some(&0) {
            return Err(Error::InvalidStructure("vertex 1 must be a child of 0"));
        }
        for i in 1..p {
            for c in (i - 1) * k + 2..=i * k {
                if parent.get(&(c as i64)) != Some(&(-(i as i64))) {
                    return Err(Error::InvalidStructure("branch root children must be its fixed block"));
                }
            }
        }
        // starlike away from the roots
        for (&u, &n) in &child_count {
            if u > 0 && n > 1 {
                return Err(Error::InvalidStructure("positive vertex with more than one child"));
            }
        }
        let forest = Self { p, k, parent };
        // only ball vertices may hang below 0 or below another vertex's
        // single slot; climbing from each ball vertex must reach a root
        for v in 1..=top {
            if forest.root_of(v).is_none() {
                return Err(Error::InvalidStructure("parent chain does not reach a root"));
            }
        }
        Ok(forest)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parent_of(&self, v: i64) -> Option<i64> {
        self.parent.get(&v).copied()
    }

    pub fn parent_map(&self) -> &BTreeMap<i64, i64> {
        &self.parent
    }

    /// Ball vertex of `D_m`.
    pub fn ball_vertex(&self, m: usize) -> i64 {
        ((m - 1) * self.k + 1) as i64
    }

    /// Root of the component containing `v`: `Some(0)` or `Some(-i)`.
    pub fn root_of(&self, mut v: i64) -> Option<i64> {
        let mut steps = 0usize;
        loop {
            match self.parent.get(&v) {
                None => return Some(v),
                Some(&u) => {
                    v = u;
                    steps += 1;
                    if steps > self.parent.len() + 1 {
                        return None;
                    }
                }
            }
        }
    }

    pub fn children(&self, u: i64) -> Vec<i64> {
        self.parent
            .iter()
            .filter(|&(_, &w)| w == u)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Plain-text indentation diagram, components in root order.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let mut roots: Vec<i64> = (1..self.p as i64).map(|i| -i).collect();
        roots.push(0);
        for root in roots {
            self.render_vertex(root, 0, &mut s);
        }
        s
    }

    fn render_vertex(&self, v: i64, depth: usize, s: &mut String) {
        for _ in 0..depth {
            s.push_str("  ");
        }
        if v < 0 {
            s.push_str(&format!("r{}\n", -v));
        } else {
            s.push_str(&format!("{v}\n"));
        }
        for c in self.children(v) {
            self.render_vertex(c, depth + 1, s);
        }
    }
}

/// Build the forest of a distribution. Needs `k >= 2`: with `k = 1` the
/// fixed blocks are empty and the coloring's color range vanishes; that
/// case is already covered by the plain increasing-tree model.
pub fn forest_from_distribution(d: &PKDistribution) -> Result<PKForest, Error> {
    if d.k() < 2 {
        return Err(Error::UnsupportedK);
    }
    let (p, k) = (d.p(), d.k());
    let mut parent = BTreeMap::new();
    for i in 1..p {
        for c in (i - 1) * k + 2..=i * k {
            parent.insert(c as i64, -(i as i64));
        }
    }
    for m in 1..=p {
        let b = ((m - 1) * k + 1) as i64;
        parent.insert(b, d.urn_of(m) as i64);
    }
    PKForest::new(p, k, parent)
}

/// Read the distribution back off a forest: ball `D_m` sits in the urn
/// its vertex hangs under.
pub fn distribution_from_forest(f: &PKForest) -> Result<PKDistribution, Error> {
    let mut urn_of = Vec::with_capacity(f.p());
    for m in 1..=f.p() {
        match f.parent_of(f.ball_vertex(m)) {
            Some(u) if u >= 0 => urn_of.push(u as usize),
            _ => return Err(Error::InvalidStructure("root component keys must be positive, increasing, starlike")),
        }
    }
    PKDistribution::new(f.p(), f.k(), urn_of)
}

/// An increasing tree on `[0, p]` with edge colors in `[0, k-1]`: root
/// edges carry color 0, all others a color in `[1, k-1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ColoredIncreasingTree {
    tree: IncreasingTree,
    /// color of the edge above vertex `v`, at index `v - 1`.
    colors: Vec<usize>,
    k: usize,
}

impl ColoredIncreasingTree {
    pub fn new(tree: IncreasingTree, colors: Vec<usize>, k: usize) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::UnsupportedK);
        }
        if colors.len() != tree.p() {
            return Err(Error::InvalidStructure("color vector length must equal p"));
        }
        for v in 1..=tree.p() {
            let c = colors[v - 1];
            let root_edge = tree.parent_of(v) == 0;
            if (root_edge && c != 0) || (!root_edge && !(1..k).contains(&c)) {
                return Err(Error::InvalidStructure("edge color out of range for its depth"));
            }
        }
        Ok(Self { tree, colors, k })
    }

    pub fn tree(&self) -> &IncreasingTree {
        &self.tree
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v - 1]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// The component `(S_0, 0)` of a forest, given by the parent of each
/// ball vertex it contains (0 or another ball vertex in the component).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct RootComponent {
    parent: BTreeMap<i64, i64>,
}

impl RootComponent {
    pub fn new(parent: BTreeMap<i64, i64>) -> Result<Self, Error> {
        let mut child_count: BTreeMap<i64, usize> = BTreeMap::new();
        for (&v, &u) in &parent {
            if v <= 0 || u < 0 || u >= v || (u > 0 && !parent.contains_key(&u)) {
                return Err(Error::InvalidStructure("root component keys must be positive, increasing, starlike"));
            }
            *child_count.entry(u).or_insert(0) += 1;
        }
        for (&u, &n) in &child_count {
            if u > 0 && n > 1 {
                return Err(Error::InvalidStructure("chained vertex with more than one child"));
            }
        }
        Ok(Self { parent })
    }

    pub fn parent_map(&self) -> &BTreeMap<i64, i64> {
        &self.parent
    }

    pub fn vertices(&self) -> Vec<i64> {
        self.parent.keys().copied().collect()
    }

    /// Out-degree of 0 — the number of balls placed directly in `x_0`.
    pub fn root_out_degree(&self) -> usize {
        self.parent.values().filter(|&&u| u == 0).count()
    }
}

/// The coloring map: vertex `v` of the tree hangs under 0 when its ball
/// vertex lies in `S_0` (color 0), or under `i` when it lies in `S_i`,
/// colored by the unique fixed-block ancestor `(i-1)k+r+1`.
pub fn omega(f: &PKForest) -> Result<ColoredIncreasingTree, Error> {
    let (p, k) = (f.p(), f.k());
    let mut parents = Vec::with_capacity(p);
    let mut colors = Vec::with_capacity(p);
    for v in 1..=p {
        let b = f.ball_vertex(v);
        match f.root_of(b) {
            Some(0) => {
                parents.push(0);
                colors.push(0);
            }
            Some(r) if r < 0 => {
                let i = (-r) as usize;
                // climb until the fixed block (i-1)k+2 .. ik
                let (lo, hi) = (((i - 1) * k + 2) as i64, (i * k) as i64);
                let mut u = b;
                let anchor = loop {
                    if (lo..=hi).contains(&u) {
                        break u;
                    }
                    u = f.parent_of(u).ok_or(Error::InvalidStructure("ball vertex missing a fixed-block ancestor"))?;
                };
                parents.push(i);
                colors.push((anchor - lo + 1) as usize);
            }
            _ => return Err(Error::InvalidStructure("ball vertex in no component")),
        }
    }
    ColoredIncreasingTree::new(IncreasingTree::new(parents)?, colors, k)
}

/// The bijection: a forest splits into its colored tree and its root
/// component.
pub fn xi(f: &PKForest) -> Result<(ColoredIncreasingTree, RootComponent), Error> {
    let t = omega(f)?;
    let mut parent = BTreeMap::new();
    for v in 1..=f.p() {
        let b = f.ball_vertex(v);
        if f.root_of(b) == Some(0) {
            parent.insert(b, f.parent_of(b).ok_or(Error::InvalidStructure("ball vertex in no component"))?);
        }
    }
    Ok((t, RootComponent::new(parent)?))
}

/// Rebuild the forest from a (colored tree, root component) pair. For
/// each color class of the children of `i`, the ball vertices chain in
/// increasing order below the fixed vertex `(i-1)k+r+1` — the only
/// starlike increasing arrangement.
pub fn xi_inverse(t: &ColoredIncreasingTree, s0: &RootComponent) -> Result<PKForest, Error> {
    let (p, k) = (t.tree().p(), t.k());
    let ball = |v: usize| ((v - 1) * k + 1) as i64;
    let expected: Vec<i64> = t.tree().children(0).into_iter().map(ball).collect();
    if s0.vertices() != expected {
        return Err(Error::InvalidStructure("root component must list the tree root children"));
    }
    let mut parent = BTreeMap::new();
    for i in 1..p {
        for c in (i - 1) * k + 2..=i * k {
            parent.insert(c as i64, -(i as i64));
        }
    }
    for (&v, &u) in s0.parent_map() {
        parent.insert(v, u);
    }
    for i in 1..=p {
        for r in 1..k {
            // children(i) is ascending, so each chain comes out sorted
            let mut below = ((i - 1) * k + r + 1) as i64;
            for v in t.tree().children(i) {
                if t.color_of(v) == r {
                    parent.insert(ball(v), below);
                    below = ball(v);
                }
            }
        }
    }
    PKForest::new(p, k, parent)
}

/// Group all forests by `(j, m)` — root out-degree of the tree and of
/// `S_0` — and check the counts against `[p brack j]{j brace m}(k-1)^{p-j}`
/// and their `m`-totals against `alpha_{pm}(k)`.
pub fn verify_counting_identity(p: usize, k: usize) -> Result<Report, Error> {
    verify_counting_identity_with_budget(p, k, DEFAULT_ENUM_BUDGET)
}

pub fn verify_counting_identity_with_budget(
    p: usize,
    k: usize,
    budget: u64,
) -> Result<Report, Error> {
    if k < 2 {
        return Err(Error::UnsupportedK);
    }
    let mut report = Report::new();
    let mut by_jm: BTreeMap<(usize, usize), Integer> = BTreeMap::new();
    for d in enumerate_distributions_with_budget(p, k, budget)? {
        let f = forest_from_distribution(&d)?;
        let (t, s0) = xi(&f)?;
        let key = (t.tree().out_degree(0), s0.root_out_degree());
        *by_jm.entry(key).or_insert_with(Integer::zero) += int(1);
    }
    for j in 1..=p as u64 {
        for m in 1..=j {
            let expect = stirling_first_unsigned(p as u64, j)
                * stirling_second(j, m)
                * int_pow(&int(k as i64 - 1), p as u64 - j);
            let got = by_jm
                .get(&(j as usize, m as usize))
                .cloned()
                .unwrap_or_else(Integer::zero);
            report.eq(
                "triple count vs stirling product",
                format!("p={p} k={k} j={j} m={m}"),
                got,
                expect,
            );
        }
    }
    for m in 1..=p as u64 {
        let total: Integer = by_jm
            .iter()
            .filter(|&(&(_, mm), _)| mm == m as usize)
            .map(|(_, c)| c.clone())
            .fold(Integer::zero(), |a, b| a + b);
        report.eq(
            "triple m-total vs alpha",
            format!("p={p} k={k} m={m}"),
            total,
            alpha_rec(p as u64, m, &int(k as i64)),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(p: usize, k: usize, urns: &[usize]) -> PKDistribution {
        PKDistribution::new(p, k, urns.to_vec()).unwrap()
    }

    #[test]
    fn distribution_validation() {
        assert!(PKDistribution::new(1, 3, vec![0]).is_ok());
        // ball 1 can only enter x_0
        assert!(PKDistribution::new(1, 3, vec![1]).is_err());
        // ceil(5/2) = 3 is not < 3
        assert!(PKDistribution::new(3, 2, vec![0, 0, 5]).is_err());
        assert!(PKDistribution::new(3, 2, vec![0, 0, 4]).is_ok());
        // urn collision
        assert!(PKDistribution::new(3, 2, vec![0, 2, 2]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_distributions(1, 4).unwrap().len(), 1);
        // D_2 may go to x_0, x_1, x_2
        assert_eq!(enumerate_distributions(2, 2).unwrap().len(), 3);
        let all = enumerate_distributions(3, 2).unwrap();
        for m in 1..=3u64 {
            let count = all.iter().filter(|d| d.balls_in_x0() == m as usize).count();
            assert_eq!(int(count as i64), alpha_rec(3, m, &int(2)));
        }
        assert!(matches!(
            enumerate_distributions_with_budget(4, 3, 10),
            Err(Error::BudgetExceeded { budget: 10 })
        ));
    }

    #[test]
    fn histogram_matches_alpha() {
        for p in 1..=5usize {
            for k in 1..=4usize {
                let all = enumerate_distributions(p, k).unwrap();
                for m in 1..=p as u64 {
                    let count = all.iter().filter(|d| d.balls_in_x0() == m as usize).count();
                    assert_eq!(
                        int(count as i64),
                        alpha_rec(p as u64, m, &int(k as i64)),
                        "p={p} k={k} m={m}"
                    );
                }
            }
        }
    }

    fn figure_forest() -> PKForest {
        forest_from_distribution(&dist(4, 3, &[0, 2, 4, 9])).unwrap()
    }

    #[test]
    fn figure_example_forest() {
        let f = figure_forest();
        assert_eq!(f.parent_of(1), Some(0));
        assert_eq!(f.children(-1), vec![2, 3]);
        assert_eq!(f.parent_of(4), Some(2));
        assert_eq!(f.parent_of(7), Some(4));
        assert_eq!(f.children(-2), vec![5, 6]);
        assert_eq!(f.children(-3), vec![8, 9]);
        assert_eq!(f.parent_of(10), Some(9));
        assert_eq!(f.root_of(7), Some(-1));
        assert_eq!(f.root_of(10), Some(-3));
    }

    #[test]
    fn small_forest_examples() {
        let f = forest_from_distribution(&dist(2, 2, &[0, 0])).unwrap();
        assert_eq!(f.children(0), vec![1, 3]);
        assert_eq!(f.children(-1), vec![2]);
        let f1 = forest_from_distribution(&dist(1, 2, &[0])).unwrap();
        assert_eq!(f1.parent_of(1), Some(0));
        assert_eq!(f1.parent_map().len(), 1);
        assert!(matches!(
            forest_from_distribution(&dist(2, 1, &[0, 0])),
            Err(Error::UnsupportedK)
        ));
    }

    #[test]
    fn figure_example_coloring() {
        let t = omega(&figure_forest()).unwrap();
        assert_eq!(t.tree().parent_array(), &[0, 1, 1, 3]);
        assert_eq!(t.colors(), &[0, 1, 1, 2]);
    }

    #[test]
    fn trivial_colorings() {
        let t = omega(&forest_from_distribution(&dist(1, 3, &[0])).unwrap()).unwrap();
        assert_eq!(t.tree().parent_array(), &[0]);
        assert_eq!(t.colors(), &[0]);
        let t = omega(&forest_from_distribution(&dist(2, 2, &[0, 2])).unwrap()).unwrap();
        assert_eq!(t.tree().parent_array(), &[0, 1]);
        assert_eq!(t.colors(), &[0, 1]);
    }

    #[test]
    fn colored_tree_validation() {
        let path = IncreasingTree::new(vec![0, 1]).unwrap();
        assert!(ColoredIncreasingTree::new(path.clone(), vec![0, 1], 2).is_ok());
        // non-root edge must not carry color 0
        assert!(ColoredIncreasingTree::new(path.clone(), vec![0, 0], 2).is_err());
        // color out of range for k = 2
        assert!(ColoredIncreasingTree::new(path.clone(), vec![0, 2], 2).is_err());
        // root edge must carry color 0
        let star = IncreasingTree::new(vec![0, 0]).unwrap();
        assert!(ColoredIncreasingTree::new(star, vec![0, 1], 2).is_err());
        assert!(ColoredIncreasingTree::new(path, vec![0, 1], 1).is_err());
    }

    #[test]
    fn xi_inverse_traced_example() {
        let path = IncreasingTree::new(vec![0, 1]).unwrap();
        let t = ColoredIncreasingTree::new(path, vec![0, 1], 2).unwrap();
        let s0 = RootComponent::new([(1, 0)].into_iter().collect()).unwrap();
        let f = xi_inverse(&t, &s0).unwrap();
        assert_eq!(f.parent_of(3), Some(2));
        assert_eq!(distribution_from_forest(&f).unwrap(), dist(2, 2, &[0, 2]));
    }

    #[test]
    fn xi_roundtrip_figure() {
        let f = figure_forest();
        let (t, s0) = xi(&f).unwrap();
        assert_eq!(xi_inverse(&t, &s0).unwrap(), f);
    }

    #[test]
    fn xi_roundtrip_exhaustive() {
        for p in 1..=4usize {
            for k in 2..=3usize {
                for d in enumerate_distributions(p, k).unwrap() {
                    let f = forest_from_distribution(&d).unwrap();
                    let (t, s0) = xi(&f).unwrap();
                    let back = xi_inverse(&t, &s0).unwrap();
                    assert_eq!(back, f, "p={p} k={k} d={:?}", d.urns());
                    assert_eq!(distribution_from_forest(&back).unwrap(), d);
                }
            }
        }
    }

    #[test]
    fn structural_invariants() {
        for p in 1..=4usize {
            for k in 2..=3usize {
                for d in enumerate_distributions(p, k).unwrap() {
                    let f = forest_from_distribution(&d).unwrap();
                    assert_eq!(f.parent_of(1), Some(0));
                    for u in 2..=(p - 1) * k {
                        if u % k != 1 {
                            let parent = f.parent_of(u as i64).unwrap();
                            assert!(parent < 0, "vertex {u} should hang under a branch root");
                        }
                    }
                    let t = omega(&f).unwrap();
                    for v in 1..=p {
                        assert_eq!(t.color_of(v) == 0, t.tree().parent_of(v) == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn counting_identity_small() {
        for p in 1..=4usize {
            for k in 2..=4usize {
                let r = verify_counting_identity(p, k).unwrap();
                assert!(r.all_pass(), "p={p} k={k} {:?}", r.first_failure());
            }
        }
        assert!(verify_counting_identity(3, 1).is_err());
    }

    #[test]
    fn render_shows_components() {
        let s = figure_forest().render();
        assert!(s.starts_with("r1\n"));
        assert!(s.contains("\n0\n  1\n"));
    }
}
