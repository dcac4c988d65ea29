//! The coefficients `gamma_{p;a}` of the normal form
//! `(fD)^p = sum_a gamma_{p;a} f^{a+e_0} D^{p - a.n}`, computed three
//! independent ways: by recurrence, by a closed form summing over
//! out-degree sequences, and by exhaustive increasing-tree counts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exact_numbers::{
    binomial, eulerian, exact_div, factorial, int, int_pow, stirling_first_unsigned,
    stirling_second, Integer,
};
use crate::increasing_trees::{enumerate_trees, g_value};
use crate::multi_index::{enumerate_lambda, MultiIndex};
use crate::report::Report;
use crate::Error;

pub use crate::increasing_trees::{tree_from_distribution, BallUrnDistribution};

/// Largest `p` for which exhaustive tree enumeration (`p!` trees) is
/// allowed by default.
pub const DEFAULT_TREE_ENUM_BOUND: u64 = 9;

/// The normal form of `(fD)^p`: a map from multi-indices `a` in `Lambda_p`
/// to the positive coefficient of `f^{a+e_0} D^{p - a.n}`, kept in the
/// canonical `Lambda_p` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    p: u64,
    terms: Vec<(MultiIndex, Integer)>,
}

impl NormalForm {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Terms in the canonical enumeration order.
    pub fn terms(&self) -> &[(MultiIndex, Integer)] {
        &self.terms
    }

    /// `gamma_{p;a}`, zero off the support.
    pub fn coefficient(&self, a: &MultiIndex) -> Integer {
        self.terms
            .iter()
            .find(|(b, _)| b == a)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Integer::zero)
    }

    /// Sum of all coefficients; equals `p!` (one per increasing tree).
    pub fn total(&self) -> Integer {
        self.terms.iter().map(|(_, c)| c).sum()
    }
}

#[derive(Default)]
struct GammaCache {
    memo: BTreeMap<(u64, MultiIndex), Integer>,
}

impl GammaCache {
    fn gamma(&mut self, p: u64, a: &MultiIndex) -> Integer {
        if !a.in_lambda(p) {
            return Integer::zero();
        }
        if p == 1 {
            return int(1);
        }
        let key = (p, a.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = Integer::zero();
        if let Some(b) = a.minus_unit(0) {
            acc += self.gamma(p - 1, &b);
        }
        // When a(p-1) = 0 the i = p-2 term always leaves Lambda_{p-1},
        // so the summation can stop at p-3.
        let upper: i64 = if a.get(p as usize - 1) == 0 {
            p as i64 - 3
        } else {
            p as i64 - 2
        };
        let mut i = 0i64;
        while i <= upper {
            let iu = i as usize;
            // add e_i before subtracting so that the i = 0 cancellation
            // with e_0 does not read as a negative entry
            let b = a
                .plus_unit(iu)
                .minus_unit(0)
                .and_then(|b| b.minus_unit(iu + 1));
            if let Some(b) = b {
                acc += int(a.get(iu) as i64 + 1) * self.gamma(p - 1, &b);
            }
            i += 1;
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// `gamma_{p;a}` by the recurrence
/// `gamma_{p;a} = gamma_{p-1;a-e_0} + sum_i (a(i)+1) gamma_{p-1;a-e_0+e_i-e_{i+1}}`,
/// with terms outside `Lambda_{p-1}` contributing zero. Returns zero off
/// `Lambda_p`.
pub fn gamma_recurrence(p: u64, a: &MultiIndex) -> Integer {
    GammaCache::default().gamma(p, a)
}

/// `gamma_{p;a}` by the closed form: sum `g(l_1..l_{p-1})` over all
/// sequences realizing the multiset `{ i with multiplicity a(i) }`, divided
/// by `prod_i (i!)^{a(i)}`. The division is exact; an inexact division
/// would falsify the closed form and panics rather than rounding.
pub fn gamma_closed_form(p: u64, a: &MultiIndex) -> Result<Integer, Error> {
    if !a.in_lambda(p) {
        return Err(Error::NotInSupport);
    }
    // multiset realizations, iterated in lexicographic order
    let mut ell: Vec<u64> = Vec::with_capacity(p as usize - 1);
    for (i, mult) in a.iter() {
        for _ in 0..mult {
            ell.push(i as u64);
        }
    }
    debug_assert_eq!(ell.len() as u64, p - 1);
    let mut sum = Integer::zero();
    loop {
        sum += g_value(&ell);
        if !next_permutation(&mut ell) {
            break;
        }
    }
    let mut denom = Integer::from(1u32);
    for (i, mult) in a.iter() {
        denom *= int_pow(&factorial(i as u64), mult);
    }
    Ok(exact_div(&sum, &denom))
}

// Classic next-permutation step; distinct permutations of a multiset come
// out exactly once each.
fn next_permutation(v: &mut [u64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `gamma_{p;a}` as an exhaustive count of increasing trees with profile
/// `a`, with the default `p!` enumeration bound.
pub fn gamma_by_tree_count(p: u64, a: &MultiIndex) -> Result<Integer, Error> {
    gamma_by_tree_count_bounded(p, a, DEFAULT_TREE_ENUM_BOUND)
}

/// Same as [`gamma_by_tree_count`] with an explicit bound on `p`.
pub fn gamma_by_tree_count_bounded(p: u64, a: &MultiIndex, bound: u64) -> Result<Integer, Error> {
    if p == 0 || p > bound {
        return Err(Error::OutOfRange("p exceeds the tree enumeration bound"));
    }
    let count = enumerate_trees(p as usize)
        .into_iter()
        .filter(|t| &t.profile() == a)
        .count();
    Ok(int(count as i64))
}

/// The full `gamma` table for one `p`, computed by the recurrence over the
/// canonical `Lambda_p` order. Asserts the tree-count total `p!`.
pub fn gamma_table(p: u64) -> NormalForm {
    assert!(p >= 1);
    let mut cache = GammaCache::default();
    let terms: Vec<(MultiIndex, Integer)> = enumerate_lambda(p)
        .into_iter()
        .map(|a| {
            let c = cache.gamma(p, &a);
            (a, c)
        })
        .collect();
    let nf = NormalForm { p, terms };
    debug_assert_eq!(nf.total(), factorial(p));
    nf
}

/// Machine check of the four classical identities satisfied by the table:
/// binomial entries, Stirling-second entries, degree-grouped sums against
/// Stirling-first, and leaf-grouped sums against Eulerian numbers.
pub fn verify_identity_suite(p: u64) -> Report {
    let mut report = Report::new();
    let table = gamma_table(p);
    // (i) gamma_{p;(p-2)e_0 + e_m} = C(p, m+1), 1 <= m <= p-1
    if p >= 2 {
        for m in 1..=(p - 1) as usize {
            let a = MultiIndex::unit(m).plus_scaled_unit(0, p - 2);
            report.eq(
                "gamma single-internal entry vs binomial",
                format!("p={p} m={m}"),
                table.coefficient(&a),
                binomial(p, m as i64 + 1),
            );
        }
    }
    // (ii) gamma_{p;(m-1)e_0 + (p-m)e_1} = {p brace m}
    for m in 1..=p {
        let a = MultiIndex::zero()
            .plus_scaled_unit(0, m - 1)
            .plus_scaled_unit(1, p - m);
        report.eq(
            "gamma starlike entry vs stirling2",
            format!("p={p} m={m}"),
            table.coefficient(&a),
            stirling_second(p, m),
        );
    }
    // (iii) sum over degree(a) = p-m of gamma = [p brack m]
    for m in 1..=p {
        let sum: Integer = table
            .terms()
            .iter()
            .filter(|(a, _)| a.degree() == p - m)
            .map(|(_, c)| c)
            .sum();
        report.eq(
            "gamma degree-sum vs stirling1",
            format!("p={p} m={m}"),
            sum,
            stirling_first_unsigned(p, m),
        );
    }
    // (iv) sum over a(0) = m of gamma = <p angle m>
    for m in 0..p {
        let sum: Integer = table
            .terms()
            .iter()
            .filter(|(a, _)| a.get(0) == m)
            .map(|(_, c)| c)
            .sum();
        report.eq(
            "gamma leaf-sum vs eulerian",
            format!("p={p} m={m}"),
            sum,
            eulerian(p, m),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case() {
        assert_eq!(gamma_recurrence(1, &MultiIndex::zero()), int(1));
        assert_eq!(gamma_recurrence(1, &MultiIndex::unit(0)), int(0));
    }

    #[test]
    fn p3_hand_expansion() {
        // (fD)^3 = f^3 D^3 + 3 f^2 f' D^2 + f (f')^2 D + f^2 f'' D
        let t = gamma_table(3);
        assert_eq!(t.coefficient(&MultiIndex::from_dense(&[2])), int(1));
        assert_eq!(t.coefficient(&MultiIndex::from_dense(&[1, 1])), int(3));
        assert_eq!(t.coefficient(&MultiIndex::from_dense(&[0, 2])), int(1));
        assert_eq!(t.coefficient(&MultiIndex::from_dense(&[1, 0, 1])), int(1));
        assert_eq!(t.total(), int(6));
    }

    #[test]
    fn p2_table() {
        let t = gamma_table(2);
        assert_eq!(t.terms().len(), 2);
        assert_eq!(t.coefficient(&MultiIndex::unit(0)), int(1));
        assert_eq!(t.coefficient(&MultiIndex::unit(1)), int(1));
    }

    #[test]
    fn extremal_entry_is_one() {
        // a = (p-2)e_0 + e_{p-1} is the unique index touching f^{(p-1)}
        for p in 2..=10u64 {
            let a = MultiIndex::unit(p as usize - 1).plus_scaled_unit(0, p - 2);
            assert_eq!(gamma_recurrence(p, &a), int(1), "p={p}");
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            gamma_closed_form(3, &MultiIndex::from_dense(&[0, 2])).unwrap(),
            int(1)
        );
        assert_eq!(
            gamma_closed_form(3, &MultiIndex::from_dense(&[1, 1])).unwrap(),
            int(3)
        );
        assert_eq!(
            gamma_closed_form(4, &MultiIndex::from_dense(&[2, 0, 0, 1])).unwrap(),
            int(1)
        );
        assert!(gamma_closed_form(3, &MultiIndex::from_dense(&[3])).is_err());
    }

    #[test]
    fn tree_count_examples() {
        assert_eq!(
            gamma_by_tree_count(3, &MultiIndex::from_dense(&[2])).unwrap(),
            int(1)
        );
        assert_eq!(
            gamma_by_tree_count(3, &MultiIndex::from_dense(&[1, 0, 1])).unwrap(),
            int(1)
        );
        // value fixed by running the exhaustive oracle by hand on the 24
        // trees on [0,4]: profiles (1,2) arise for parent arrays with one
        // chain of length 2 and one extra leaf under a chain vertex.
        assert_eq!(
            gamma_by_tree_count(4, &MultiIndex::from_dense(&[1, 2])).unwrap(),
            gamma_recurrence(4, &MultiIndex::from_dense(&[1, 2]))
        );
        assert!(gamma_by_tree_count(12, &MultiIndex::zero()).is_err());
    }

    #[test]
    fn three_way_agreement_small() {
        for p in 1..=6u64 {
            for a in crate::multi_index::enumerate_lambda(p) {
                let rec = gamma_recurrence(p, &a);
                let closed = gamma_closed_form(p, &a).unwrap();
                let trees = gamma_by_tree_count(p, &a).unwrap();
                assert_eq!(rec, closed, "p={p} a={a}");
                assert_eq!(rec, trees, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn table_support_and_total() {
        for p in 1..=8u64 {
            let t = gamma_table(p);
            for (a, c) in t.terms() {
                assert!(a.in_lambda(p));
                assert!(c > &Integer::zero());
            }
            assert_eq!(t.total(), factorial(p));
        }
    }

    #[test]
    fn identity_suite_passes() {
        for p in 1..=8u64 {
            let report = verify_identity_suite(p);
            assert!(report.all_pass(), "{:?}", report.first_failure());
        }
    }

    #[test]
    fn ball_urn_model_reproduces_table() {
        for p in 1..=6u64 {
            let t = gamma_table(p);
            let mut counts: BTreeMap<MultiIndex, Integer> = BTreeMap::new();
            for d in BallUrnDistribution::enumerate(p as usize) {
                let a = tree_from_distribution(&d).profile();
                *counts.entry(a).or_insert_with(Integer::zero) += int(1);
            }
            for (a, c) in t.terms() {
                assert_eq!(counts.get(a), Some(c), "p={p} a={a}");
            }
            assert_eq!(counts.len(), t.terms().len());
        }
    }
}
