//! Arbitrary-precision combinatorial number families and finite-calculus
//! primitives.
//!
//! All triangles follow the usual summation conventions: out-of-range
//! arguments yield `0` rather than an error, so formulas that sum over an
//! unrestricted index can be transcribed directly.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision signed integer; every coefficient in the crate is one.
pub type Integer = num_bigint::BigInt;

/// Exact rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an `Integer` from a machine integer.
pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

/// Shorthand for the exact rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(int(n), int(d))
}

/// `n!`
pub fn factorial(n: u64) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= int(i as i64);
    }
    acc
}

/// Binomial coefficient `C(n, m)`; `0` for `m < 0` or `m > n`.
pub fn binomial(n: u64, m: i64) -> Integer {
    if m < 0 || m as u64 > n {
        return Integer::zero();
    }
    binomial_integer(&int(n as i64), m as u64)
}

/// Generalized binomial `C(x, m) = x(x-1)...(x-m+1)/m!` for integer `x`,
/// possibly negative. Needed by inclusion-exclusion formulas whose upper
/// entry can dip below zero.
pub fn binomial_integer(x: &Integer, m: u64) -> Integer {
    let mut num = Integer::one();
    for i in 0..m {
        num *= x - int(i as i64);
    }
    num / factorial(m)
}

// Triangles are built row by row from their Pascal-type recurrences; at the
// sizes this crate targets (n in the tens) a fresh row walk is cheaper than
// any shared cache would be worth.
fn triangle_row(n: u64, step: impl Fn(u64, u64, &[Integer]) -> Integer) -> Vec<Integer> {
    let mut row: Vec<Integer> = vec![Integer::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i as usize + 1);
        for m in 0..=i {
            next.push(step(i, m, &row));
        }
        row = next;
    }
    row
}

fn row_get(row: &[Integer], m: i64) -> Integer {
    if m < 0 || m as usize >= row.len() {
        Integer::zero()
    } else {
        row[m as usize].clone()
    }
}

/// Stirling number of the second kind `{n brace m}`: partitions of an
/// `n`-set into `m` blocks. `{0 brace 0} = 1`.
pub fn stirling_second(n: u64, m: u64) -> Integer {
    if m > n || (n > 0 && m == 0) {
        return Integer::zero();
    }
    triangle_row(n, |_, j, prev| {
        int(j as i64) * row_get(prev, j as i64) + row_get(prev, j as i64 - 1)
    })[m as usize]
        .clone()
}

/// Unsigned Stirling number of the first kind `[n brack m]`: permutations
/// of `n` elements with `m` cycles. `[0 brack 0] = 1`.
pub fn stirling_first_unsigned(n: u64, m: u64) -> Integer {
    if m > n || (n > 0 && m == 0) {
        return Integer::zero();
    }
    triangle_row(n, |i, j, prev| {
        int(i as i64 - 1) * row_get(prev, j as i64) + row_get(prev, j as i64 - 1)
    })[m as usize]
        .clone()
}

/// Eulerian number `<n angle m>`: permutations of `n` elements with `m`
/// descents. Zero when `m >= n >= 1`.
pub fn eulerian(n: u64, m: u64) -> Integer {
    if n >= 1 && m >= n {
        return Integer::zero();
    }
    if m > n {
        return Integer::zero();
    }
    triangle_row(n, |i, j, prev| {
        int(j as i64 + 1) * row_get(prev, j as i64) + int((i - j) as i64) * row_get(prev, j as i64 - 1)
    })[m as usize]
        .clone()
}

/// Rising factorial `x (x+1) ... (x+n-1)`; `1` when `n = 0`.
pub fn rising_factorial(x: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc *= x + Rational::from_integer(int(i as i64));
    }
    acc
}

/// Falling factorial `x (x-1) ... (x-n+1)`; `1` when `n = 0`.
pub fn falling_factorial(x: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc *= x - Rational::from_integer(int(i as i64));
    }
    acc
}

/// Lah number `p!/m! C(p-1, m-1)`, which also equals
/// `sum_j [p brack j] {j brace m}`.
pub fn lah(p: u64, m: u64) -> Result<Integer, Error> {
    if p == 0 || m == 0 || m > p {
        return Err(Error::OutOfRange("lah requires 1 <= m <= p"));
    }
    Ok(factorial(p) / factorial(m) * binomial(p - 1, m as i64 - 1))
}

/// `p`-th forward difference of a sequence at zero:
/// `sum_{i=0}^p (-1)^i C(p,i) a_{p-i}`.
pub fn finite_difference_at_zero(seq: impl Fn(u64) -> Rational, p: u64) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..=p {
        let term = Rational::from_integer(binomial(p, i as i64)) * seq(p - i);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Exact integer division; panics if `b` does not divide `a`. Used where a
/// closed form promises divisibility and rounding would mask a real bug.
pub fn exact_div(a: &Integer, b: &Integer) -> Integer {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    assert!(r.is_zero(), "inexact division: {a} / {b}");
    q
}

/// `base^exp` for integer base.
pub fn int_pow(base: &Integer, exp: u64) -> Integer {
    let mut acc = Integer::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `(-1)^n` as an `Integer`.
pub fn sign(n: u64) -> Integer {
    if n % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// True if `r` is an integer (denominator one).
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one() || (r.numer().is_zero() && r.denom().abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_second_small() {
        assert_eq!(stirling_second(0, 0), int(1));
        assert_eq!(stirling_second(3, 3), int(1));
        assert_eq!(stirling_second(3, 2), int(3));
        assert_eq!(stirling_second(4, 2), int(7));
        assert_eq!(stirling_second(5, 0), int(0));
        assert_eq!(stirling_second(2, 5), int(0));
    }

    #[test]
    fn stirling_first_small() {
        assert_eq!(stirling_first_unsigned(0, 0), int(1));
        assert_eq!(stirling_first_unsigned(4, 4), int(1));
        assert_eq!(stirling_first_unsigned(3, 1), int(2));
        assert_eq!(stirling_first_unsigned(4, 2), int(11));
        assert_eq!(stirling_first_unsigned(4, 0), int(0));
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian(0, 0), int(1));
        assert_eq!(eulerian(5, 0), int(1));
        assert_eq!(eulerian(3, 1), int(4));
        assert_eq!(eulerian(4, 2), int(11));
        assert_eq!(eulerian(3, 3), int(0));
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 0), int(1));
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(3, 4), int(0));
        assert_eq!(binomial(3, -1), int(0));
        // generalized upper entry
        assert_eq!(binomial_integer(&int(-1), 0), int(1));
        assert_eq!(binomial_integer(&int(-1), 2), int(1));
        assert_eq!(binomial_integer(&int(-2), 3), -int(4));
    }

    #[test]
    fn factorials() {
        assert_eq!(rising_factorial(&rat(1, 1), 4), rat(24, 1));
        assert_eq!(falling_factorial(&rat(3, 1), 3), rat(6, 1));
        assert_eq!(rising_factorial(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(rising_factorial(&rat(7, 3), 0), rat(1, 1));
        assert_eq!(falling_factorial(&rat(2, 1), 5), rat(0, 1));
    }

    #[test]
    fn lah_small() {
        assert_eq!(lah(3, 3).unwrap(), int(1));
        assert_eq!(lah(3, 1).unwrap(), int(6));
        assert_eq!(lah(3, 2).unwrap(), int(6));
        assert!(lah(2, 3).is_err());
        assert!(lah(3, 0).is_err());
        // lah(p, m) = sum_j [p brack j] {j brace m}
        for p in 1..=8u64 {
            for m in 1..=p {
                let mut sum = Integer::zero();
                for j in 0..=p {
                    sum += stirling_first_unsigned(p, j) * stirling_second(j, m);
                }
                assert_eq!(sum, lah(p, m).unwrap(), "p={p} m={m}");
            }
        }
    }

    #[test]
    fn finite_differences() {
        assert_eq!(finite_difference_at_zero(|_| rat(1, 1), 1), rat(0, 1));
        assert_eq!(finite_difference_at_zero(|n| rat(n as i64, 1), 1), rat(1, 1));
        assert_eq!(
            finite_difference_at_zero(|n| rat((n * n) as i64, 1), 2),
            rat(2, 1)
        );
        // Delta^p of a degree-p polynomial x^p is p!.
        for p in 0..=6u64 {
            let d = finite_difference_at_zero(
                |n| rat((n as i64).pow(p as u32), 1),
                p,
            );
            assert_eq!(d, Rational::from_integer(factorial(p)));
        }
    }

    #[test]
    fn rising_factorial_expands_in_stirling_first() {
        // (x)^{rising n} = sum_j [n brack j] x^j, coefficient by coefficient:
        // expand the product x(x+1)...(x+n-1) symbolically.
        for n in 0..=12u64 {
            let mut poly = vec![Integer::one()]; // coefficients, low degree first
            for i in 0..n {
                let mut next = vec![Integer::zero(); poly.len() + 1];
                for (d, c) in poly.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] += c * int(i as i64);
                }
                poly = next;
            }
            for (j, c) in poly.iter().enumerate() {
                assert_eq!(*c, stirling_first_unsigned(n, j as u64), "n={n} j={j}");
            }
        }
    }
}
