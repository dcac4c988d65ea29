//! Finite-support exponent vectors and the index set `Lambda_p`.
//!
//! A [`MultiIndex`] `a` records, per position `i`, a nonnegative exponent
//! `a(i)`. The normal form of `(fD)^p` is supported on
//! `Lambda_p = { a : sum_i a(i) = p-1, sum_i i a(i) < p }`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;

/// Finite-support vector over nonnegative integer positions.
///
/// Canonical form: zero entries are never stored, so structural equality is
/// value equality and the map can key coefficient tables directly.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex {
    entries: BTreeMap<usize, u64>,
}

impl MultiIndex {
    /// The zero vector.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `e_m`.
    pub fn unit(m: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(m, 1);
        Self { entries }
    }

    /// Build from a dense prefix `(a0, a1, ...)`; trailing zeros irrelevant.
    pub fn from_dense(dense: &[u64]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, &v) in dense.iter().enumerate() {
            if v != 0 {
                entries.insert(i, v);
            }
        }
        Self { entries }
    }

    /// `a(i)`, zero for absent positions.
    pub fn get(&self, i: usize) -> u64 {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero entries in position order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    /// Largest position with a nonzero entry.
    pub fn max_position(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// `sum_i a(i)` (the dot product with the all-ones vector).
    pub fn weight(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `sum_i i * a(i)` (the dot product with `(0, 1, 2, ...)`).
    pub fn degree(&self) -> u64 {
        self.entries.iter().map(|(&i, &v)| i as u64 * v).sum()
    }

    /// `self + e_m`.
    pub fn plus_unit(&self, m: usize) -> Self {
        let mut out = self.clone();
        *out.entries.entry(m).or_insert(0) += 1;
        out
    }

    /// `self - e_m`, or `None` when the result would leave `N^infty`.
    /// Recurrences treat such terms as contributing zero.
    pub fn minus_unit(&self, m: usize) -> Option<Self> {
        let mut out = self.clone();
        match out.entries.get_mut(&m) {
            None => return None,
            Some(v) => {
                *v -= 1;
                if *v == 0 {
                    out.entries.remove(&m);
                }
            }
        }
        Some(out)
    }

    /// `k * e_0 + self` style scaled addition.
    pub fn plus_scaled_unit(&self, m: usize, count: u64) -> Self {
        if count == 0 {
            return self.clone();
        }
        let mut out = self.clone();
        *out.entries.entry(m).or_insert(0) += count;
        out
    }

    /// Dense prefix up to the last nonzero entry; `[0]` for the zero vector.
    pub fn dense(&self) -> Vec<u64> {
        let len = self.max_position().map_or(1, |m| m + 1);
        (0..len).map(|i| self.get(i)).collect()
    }

    /// Membership in `Lambda_p`.
    pub fn in_lambda(&self, p: u64) -> bool {
        p >= 1 && self.weight() == p - 1 && self.degree() < p
    }

    /// Textual form `(a0,a1,...,ak)` with trailing zeros trimmed.
    pub fn render(&self) -> String {
        let mut s = String::from("(");
        for (i, v) in self.dense().iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{v}");
        }
        s.push(')');
        s
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// Lexicographic on the dense expansion (with implicit zero tail). This is
// the tiebreak inside each degree class of the canonical enumeration order.
impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self
            .max_position()
            .unwrap_or(0)
            .max(other.max_position().unwrap_or(0));
        for i in 0..=n {
            match self.get(i).cmp(&other.get(i)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// All of `Lambda_p` in the canonical order: graded by degree, then
/// lexicographic on entries. The order is fixed so that exports are
/// byte-for-byte reproducible.
pub fn enumerate_lambda(p: u64) -> Vec<MultiIndex> {
    assert!(p >= 1, "Lambda_p needs p >= 1");
    let mut out = Vec::new();
    // Positions >= 1 carry a partition of the degree d into at most p-1
    // parts; position 0 absorbs the remaining weight.
    for d in 0..p {
        let mut parts = Vec::new();
        collect_partitions(d, d.min(p - 1), p - 1, &mut parts, &mut |parts| {
            let mut a = MultiIndex::zero();
            for &part in parts.iter() {
                a = a.plus_unit(part as usize);
            }
            let used: u64 = parts.len() as u64;
            out.push(a.plus_scaled_unit(0, p - 1 - used));
        });
    }
    out.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.cmp(y)));
    out
}

// Partitions of `d` into at most `max_parts` nonzero parts, each <= max_part.
fn collect_partitions(
    d: u64,
    max_part: u64,
    max_parts: u64,
    acc: &mut Vec<u64>,
    emit: &mut impl FnMut(&[u64]),
) {
    if d == 0 {
        emit(acc);
        return;
    }
    if max_parts == 0 || max_part == 0 {
        return;
    }
    for part in (1..=max_part.min(d)).rev() {
        acc.push(part);
        collect_partitions(d - part, part, max_parts - 1, acc, emit);
        acc.pop();
    }
}
