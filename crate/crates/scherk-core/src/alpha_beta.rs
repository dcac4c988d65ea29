//! The coefficient families `alpha_{pm}(k)` and `beta_{pm}(k)` of the
//! expansions `(x^k D)^p = x^{p(k-1)} sum_m alpha_{pm}(k) x^m D^m` and
//! `x^{kp} D^p = sum_m beta_{pm}(k) x^{(p-m)(k-1)} (x^k D)^m`.
//!
//! Each family is computed several independent ways: a two-term
//! recurrence, closed-form polynomials in `k - 1` with Stirling-product
//! coefficients, and finite-difference formulas, plus an
//! inclusion-exclusion matrix count that certifies integrality.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::exact_numbers::{
    binomial, binomial_integer, factorial, finite_difference_at_zero, int, int_pow,
    is_integer, rat, sign, stirling_first_unsigned, stirling_second, Integer, Rational,
};
use crate::report::Report;
use crate::Error;

/// Integer polynomial in the indeterminate `k - 1`, low degree first.
/// This is the natural basis: the alpha coefficients there are the
/// nonnegative Stirling products, and the beta/alpha reflection is a
/// clean substitution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffPolynomial {
    coeffs: Vec<Integer>,
}

impl CoeffPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Integer::zero());
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::from_coeffs(vec![Integer::zero()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `(k-1)^d`.
    pub fn coeff(&self, d: usize) -> Integer {
        self.coeffs.get(d).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Evaluate at an integer `k`.
    pub fn eval_int(&self, k: &Integer) -> Integer {
        let x = k - int(1);
        let mut acc = Integer::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Evaluate at a rational `k`.
    pub fn eval_rat(&self, k: &Rational) -> Rational {
        let x = k - rat(1, 1);
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![Integer::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Rebase to powers of `k`, for display.
    pub fn to_k_basis(&self) -> Vec<Integer> {
        // substitute (k - 1)^d = sum_j C(d, j) (-1)^{d-j} k^j
        let mut out = vec![Integer::zero(); self.coeffs.len()];
        for (d, c) in self.coeffs.iter().enumerate() {
            for j in 0..=d {
                out[j] += c * binomial(d as u64, j as i64) * sign((d - j) as u64);
            }
        }
        out
    }
}

/// `alpha_{pm}(k)` by the recurrence
/// `alpha_{pm} = alpha_{p-1,m-1} + ((p-1)(k-1) + m) alpha_{p-1,m}`
/// with `alpha_{p,0} = 0 (p > 0)`, `alpha_{p,p} = 1`.
pub fn alpha_rec(p: u64, m: u64, k: &Integer) -> Integer {
    recurrence_value(p, m, |row_p, row_m, prev| {
        prev(row_m as i64 - 1)
            + (int((row_p - 1) as i64) * (k - int(1)) + int(row_m as i64)) * prev(row_m as i64)
    })
}

/// `beta_{pm}(k)` by the recurrence
/// `beta_{pm} = beta_{p-1,m-1} - (m(k-1) + p-1) beta_{p-1,m}`
/// with the same boundary rows.
pub fn beta_rec(p: u64, m: u64, k: &Integer) -> Integer {
    recurrence_value(p, m, |row_p, row_m, prev| {
        prev(row_m as i64 - 1)
            - (int(row_m as i64) * (k - int(1)) + int((row_p - 1) as i64)) * prev(row_m as i64)
    })
}

fn recurrence_value(
    p: u64,
    m: u64,
    step: impl Fn(u64, u64, &dyn Fn(i64) -> Integer) -> Integer,
) -> Integer {
    if m > p {
        return Integer::zero();
    }
    if p == 0 {
        return Integer::one();
    }
    if m == 0 {
        return Integer::zero();
    }
    let mut row: Vec<Integer> = vec![Integer::one()]; // row p = 0
    for rp in 1..=p {
        let prev = row.clone();
        let get = |j: i64| -> Integer {
            if j < 0 || j as usize >= prev.len() {
                Integer::zero()
            } else {
                prev[j as usize].clone()
            }
        };
        row = (0..=rp)
            .map(|rm| {
                if rm == 0 {
                    Integer::zero()
                } else {
                    step(rp, rm, &get)
                }
            })
            .collect();
    }
    row[m as usize].clone()
}

/// `alpha_{pm}` as the polynomial
/// `sum_{j=m}^p [p brack j] {j brace m} (k-1)^{p-j}` of degree `p - m`.
pub fn alpha_poly(p: u64, m: u64) -> Result<CoeffPolynomial, Error> {
    if m < 1 || m > p {
        return Err(Error::OutOfRange("alpha_poly requires 1 <= m <= p"));
    }
    let mut coeffs = vec![Integer::zero(); (p - m + 1) as usize];
    for j in m..=p {
        coeffs[(p - j) as usize] = stirling_first_unsigned(p, j) * stirling_second(j, m);
    }
    Ok(CoeffPolynomial::from_coeffs(coeffs))
}

/// `beta_{pm}` as the polynomial
/// `(-1)^{p-m} sum_{j=m}^p [p brack j] {j brace m} (k-1)^{j-m}`.
pub fn beta_poly(p: u64, m: u64) -> Result<CoeffPolynomial, Error> {
    if m < 1 || m > p {
        return Err(Error::OutOfRange("beta_poly requires 1 <= m <= p"));
    }
    let s = sign(p - m);
    let mut coeffs = vec![Integer::zero(); (p - m + 1) as usize];
    for j in m..=p {
        coeffs[(j - m) as usize] = &s * stirling_first_unsigned(p, j) * stirling_second(j, m);
    }
    Ok(CoeffPolynomial::from_coeffs(coeffs))
}

/// Verify `sum_m alpha_{pm} beta_{mq} = delta_{pq}` and the transposed
/// product, as polynomial identities in `k - 1`, over the whole triangle
/// up to `p`.
pub fn inverse_check(p: u64) -> Report {
    let mut report = Report::new();
    for row in 1..=p {
        for q in 1..=row {
            let mut ab = CoeffPolynomial::zero();
            let mut ba = CoeffPolynomial::zero();
            for m in q..=row {
                let a_rm = alpha_poly(row, m).expect("in range");
                let b_mq = beta_poly(m, q).expect("in range");
                ab = ab.add(&a_rm.mul(&b_mq));
                let b_rm = beta_poly(row, m).expect("in range");
                let a_mq = alpha_poly(m, q).expect("in range");
                ba = ba.add(&b_rm.mul(&a_mq));
            }
            let expect = if row == q {
                CoeffPolynomial::from_coeffs(vec![Integer::one()])
            } else {
                CoeffPolynomial::zero()
            };
            report.eq(
                "alpha.beta product vs delta",
                format!("p={row} q={q}"),
                ab,
                expect.clone(),
            );
            report.eq(
                "beta.alpha product vs delta",
                format!("p={row} q={q}"),
                ba,
                expect,
            );
        }
    }
    report
}

/// Verify the reflection `beta_{pm}(k) = (1-k)^{p-m} alpha_{pm}(k/(k-1))`
/// by exact rational evaluation. `k = 1` is rejected.
pub fn reflection_check(p: u64, m: u64, k: &Integer) -> Result<Report, Error> {
    if k == &int(1) {
        return Err(Error::OutOfRange("reflection check needs k != 1"));
    }
    if m < 1 || m > p {
        return Err(Error::OutOfRange("reflection_check requires 1 <= m <= p"));
    }
    let mut report = Report::new();
    let beta = Rational::from_integer(beta_poly(p, m)?.eval_int(k));
    let point = Rational::new(k.clone(), k - int(1));
    let scale = Rational::from_integer(int(1) - k);
    let mut alpha_at = alpha_poly(p, m)?.eval_rat(&point);
    for _ in 0..(p - m) {
        alpha_at *= &scale;
    }
    report.eq(
        "beta vs reflected alpha",
        format!("p={p} m={m} k={k}"),
        beta,
        alpha_at,
    );
    Ok(report)
}

/// Verify the `k = 2` specialization against the factorial closed form
/// `p!/m! C(p-1, m-1)` (the classical second-kind/first-kind product sum).
pub fn lah_check(p: u64, m: u64) -> Report {
    let mut report = Report::new();
    let lah = factorial(p) / factorial(m) * binomial(p - 1, m as i64 - 1);
    report.eq(
        "alpha at k=2 vs lah",
        format!("p={p} m={m}"),
        alpha_rec(p, m, &int(2)),
        lah.clone(),
    );
    report.eq(
        "beta at k=2 vs signed lah",
        format!("p={p} m={m}"),
        beta_rec(p, m, &int(2)),
        sign(p - m) * lah,
    );
    report
}

/// The inclusion-exclusion count
/// `n_pmt = sum_l (-1)^l C(m, l) C(p + tm - tl - 1, p)`.
///
/// Conventions the formulas leave open: the count is 1 when `p = m = 0`
/// (the empty matrix) and 0 when `m >= 1, t = 0` (a zero-row column is a
/// zero column).
pub fn n_pmt_formula(p: u64, m: u64, t: u64) -> Integer {
    if p == 0 && m == 0 {
        return Integer::one();
    }
    let mut acc = Integer::zero();
    for l in 0..=m {
        let top = int((p + t * m) as i64) - int((t * l) as i64) - int(1);
        let term = binomial(m, l as i64) * binomial_integer(&top, p);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Exhaustive count of `t x m` nonnegative-integer matrices with entry sum
/// `p` and no zero column. Column sums are enumerated first so that zero
/// columns prune immediately; every surviving matrix is visited.
pub fn n_pmt_oracle(p: u64, m: u64, t: u64) -> Integer {
    if m == 0 {
        return if p == 0 { Integer::one() } else { Integer::zero() };
    }
    if t == 0 {
        return Integer::zero();
    }
    fn columns(remaining: u64, cols_left: u64, t: u64, count: &mut Integer) {
        if cols_left == 0 {
            if remaining == 0 {
                *count += int(1);
            }
            return;
        }
        // each remaining column needs sum >= 1
        let max_here = remaining.saturating_sub(cols_left - 1);
        for s in 1..=max_here {
            let mut cells = Integer::zero();
            cells_in_column(s, t, &mut cells);
            if cells.is_zero() {
                continue;
            }
            let mut sub = Integer::zero();
            columns(remaining - s, cols_left - 1, t, &mut sub);
            *count += cells * sub;
        }
    }
    // exhaustively walk the compositions of s into t cells
    fn cells_in_column(s: u64, t: u64, count: &mut Integer) {
        if t == 1 {
            *count += int(1);
            return;
        }
        for first in 0..=s {
            cells_in_column(s - first, t - 1, count);
        }
    }
    let mut count = Integer::zero();
    columns(p, m, t, &mut count);
    count
}

/// `alpha_{pm}(k)` via `(1/m!) Delta^m A(z)` at `z = 0`, with
/// `A(z) = prod_i (z + i(k-1))`.
pub fn alpha_fd(p: u64, m: u64, k: &Integer) -> Integer {
    let a = |z: u64| -> Rational {
        let mut acc = Rational::one();
        for i in 0..p {
            acc *= Rational::from_integer(int(z as i64) + int(i as i64) * (k - int(1)));
        }
        acc
    };
    let d = finite_difference_at_zero(a, m) / Rational::from_integer(factorial(m));
    assert!(is_integer(&d), "alpha finite-difference form must be integral");
    d.to_integer()
}

/// `beta_{pm}(k)` via `(-1)^{p-m}/(m!(k-1)^m) Delta^m B(z)` at `z = 0`,
/// with `B(z) = prod_i ((k-1)z + i)`. Expanding `B` through the rising
/// factorial shows the difference quotient alone equals `|beta|`, so the
/// alternating sign has to be applied on top. Requires `k != 1`; the
/// value is returned as a rational, and integrality is a checked
/// postcondition of the agreement suites rather than an assumption here.
pub fn beta_fd(p: u64, m: u64, k: &Integer) -> Result<Rational, Error> {
    if k == &int(1) {
        return Err(Error::OutOfRange("beta_fd needs k != 1"));
    }
    let b = |z: u64| -> Rational {
        let mut acc = Rational::one();
        for i in 0..p {
            acc *= Rational::from_integer((k - int(1)) * int(z as i64) + int(i as i64));
        }
        acc
    };
    let denom = Rational::from_integer(factorial(m) * int_pow(&(k - int(1)), m));
    // the difference vanishes for m > p, so the saturation is harmless
    let s = Rational::from_integer(sign(p.saturating_sub(m)));
    Ok(finite_difference_at_zero(b, m) / denom * s)
}

/// Verify that `(m!/p!) (k-1)^m |beta_{pm}(k)|` is a nonnegative integer
/// equal to the exhaustive `(k-1) x m` matrix count, for integer `k >= 2`.
pub fn integrality_check(p: u64, m: u64, k: u64) -> Result<Report, Error> {
    if k < 2 {
        return Err(Error::OutOfRange("integrality check needs k >= 2"));
    }
    let mut report = Report::new();
    let beta = beta_rec(p, m, &int(k as i64));
    let value = Rational::new(
        factorial(m) * int_pow(&int(k as i64 - 1), m) * beta.abs(),
        factorial(p),
    );
    if !is_integer(&value) {
        report.fail(
            "scaled |beta| integrality",
            format!("p={p} m={m} k={k}"),
            format!("not an integer: {value}"),
        );
        return Ok(report);
    }
    report.eq(
        "scaled |beta| vs matrix count",
        format!("p={p} m={m} k={k}"),
        value.to_integer(),
        n_pmt_oracle(p, m, k - 1),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_numbers::exact_div;

    #[test]
    fn recurrence_boundaries() {
        for p in 0..=6u64 {
            assert_eq!(alpha_rec(p, p, &int(5)), int(1));
            assert_eq!(beta_rec(p, p, &int(5)), int(1));
            if p > 0 {
                assert_eq!(alpha_rec(p, 0, &int(5)), int(0));
                assert_eq!(beta_rec(p, 0, &int(5)), int(0));
            }
            assert_eq!(alpha_rec(p, p + 1, &int(5)), int(0));
        }
        // hand expansion: (x^k D)^2 = k x^{2k-1} D + x^{2k} D^2
        for k in -2..=4i64 {
            assert_eq!(alpha_rec(2, 1, &int(k)), int(k));
            assert_eq!(beta_rec(2, 1, &int(k)), int(-k));
        }
    }

    #[test]
    fn polynomial_examples() {
        let a = alpha_poly(2, 1).unwrap();
        assert_eq!(a.coeffs(), &[int(1), int(1)]); // (k-1) + 1 = k
        assert_eq!(a.eval_int(&int(7)), int(7));
        let b = beta_poly(2, 1).unwrap();
        assert_eq!(b.coeffs(), &[-int(1), -int(1)]); // -k
        assert_eq!(alpha_poly(3, 3).unwrap().coeffs(), &[int(1)]);
        assert!(alpha_poly(2, 0).is_err());
        assert!(beta_poly(2, 3).is_err());
    }

    #[test]
    fn polynomials_match_recurrences() {
        for p in 1..=7u64 {
            for m in 1..=p {
                let ap = alpha_poly(p, m).unwrap();
                let bp = beta_poly(p, m).unwrap();
                assert_eq!(ap.degree() as u64, p - m);
                for k in -3..=5i64 {
                    assert_eq!(ap.eval_int(&int(k)), alpha_rec(p, m, &int(k)), "a p={p} m={m} k={k}");
                    assert_eq!(bp.eval_int(&int(k)), beta_rec(p, m, &int(k)), "b p={p} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn specializations_at_k_one() {
        // alpha at k=1 is {p brace m}; beta at k=1 is the signed [p brack m]
        for p in 1..=10u64 {
            for m in 1..=p {
                assert_eq!(alpha_rec(p, m, &int(1)), stirling_second(p, m));
                assert_eq!(
                    beta_rec(p, m, &int(1)),
                    sign(p - m) * stirling_first_unsigned(p, m)
                );
                let ap = alpha_poly(p, m).unwrap();
                assert_eq!(ap.coeff(0), stirling_second(p, m));
                assert_eq!(ap.coeff((p - m) as usize), stirling_first_unsigned(p, m));
            }
        }
    }

    #[test]
    fn inversion_small() {
        let r = inverse_check(6);
        assert!(r.all_pass(), "{:?}", r.first_failure());
    }

    #[test]
    fn reflection_examples() {
        assert!(reflection_check(3, 1, &int(1)).is_err());
        let r = reflection_check(2, 1, &int(2)).unwrap();
        assert!(r.all_pass());
        for p in 1..=6u64 {
            for m in 1..=p {
                for k in [-2i64, 2, 3, 4] {
                    let r = reflection_check(p, m, &int(k)).unwrap();
                    assert!(r.all_pass(), "p={p} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn lah_specialization() {
        for p in 1..=8u64 {
            for m in 1..=p {
                let r = lah_check(p, m);
                assert!(r.all_pass(), "p={p} m={m} {:?}", r.first_failure());
            }
        }
    }

    #[test]
    fn n_pmt_examples() {
        assert_eq!(n_pmt_oracle(2, 1, 1), int(1));
        assert_eq!(n_pmt_formula(2, 1, 1), int(1));
        assert_eq!(n_pmt_oracle(2, 2, 1), int(1));
        assert_eq!(n_pmt_oracle(3, 1, 0), int(0));
        assert_eq!(n_pmt_formula(3, 1, 0), int(0));
        assert_eq!(n_pmt_formula(0, 0, 3), int(1));
        assert_eq!(n_pmt_oracle(0, 0, 3), int(1));
    }

    #[test]
    fn n_pmt_formula_matches_oracle() {
        for p in 0..=5u64 {
            for m in 0..=p {
                for t in 0..=3u64 {
                    assert_eq!(
                        n_pmt_formula(p, m, t),
                        n_pmt_oracle(p, m, t),
                        "p={p} m={m} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn stirling_product_sum_vs_n_pmt() {
        // sum_j [p brack j]{j brace m} t^j = (p!/m!) n_pmt
        for p in 1..=6u64 {
            for m in 1..=p {
                for t in 0..=3u64 {
                    let mut lhs = Integer::zero();
                    for j in 1..=p {
                        lhs += stirling_first_unsigned(p, j)
                            * stirling_second(j, m)
                            * int_pow(&int(t as i64), j);
                    }
                    let rhs =
                        exact_div(&(factorial(p) * n_pmt_formula(p, m, t)), &factorial(m));
                    assert_eq!(lhs, rhs, "p={p} m={m} t={t}");
                }
            }
        }
    }

    #[test]
    fn finite_difference_forms() {
        assert_eq!(alpha_fd(4, 4, &int(3)), int(1));
        assert_eq!(alpha_fd(2, 1, &int(3)), int(3));
        assert_eq!(beta_fd(2, 1, &int(2)).unwrap(), rat(-2, 1));
        assert!(beta_fd(2, 1, &int(1)).is_err());
        for p in 1..=6u64 {
            for m in 1..=p {
                for k in 2..=4i64 {
                    assert_eq!(alpha_fd(p, m, &int(k)), alpha_rec(p, m, &int(k)));
                    let bf = beta_fd(p, m, &int(k)).unwrap();
                    assert!(is_integer(&bf));
                    assert_eq!(bf.to_integer(), beta_rec(p, m, &int(k)));
                }
            }
        }
    }

    #[test]
    fn integrality_remark() {
        assert!(integrality_check(3, 1, 1).is_err());
        for p in 1..=5u64 {
            for m in 1..=p {
                for k in 2..=4u64 {
                    let r = integrality_check(p, m, k).unwrap();
                    assert!(r.all_pass(), "p={p} m={m} k={k} {:?}", r.first_failure());
                }
            }
        }
    }

    #[test]
    fn k_basis_conversion() {
        let a = alpha_poly(2, 1).unwrap(); // k
        assert_eq!(a.to_k_basis(), alloc::vec![int(0), int(1)]);
        let b = beta_poly(2, 1).unwrap(); // -k
        assert_eq!(b.to_k_basis(), alloc::vec![int(0), -int(1)]);
    }
}
