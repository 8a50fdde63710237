use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k), zero outside `0 <= k <= n`.
///
/// Negative `n` is not representable; callers that accept signed input
/// reject it before reaching here.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    range_product(n - k + 1, n) / range_product(1, k)
}

/// Product of the integers in `lo..=hi` (1 when empty), by balanced splitting.
fn range_product(lo: u64, hi: u64) -> BigInt {
    if lo > hi {
        return BigInt::one();
    }
    if hi - lo < 16 {
        return (lo..=hi).fold(BigInt::one(), |acc, f| acc * f);
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

/// n(n-1)...(n-i+1); 1 for `i = 0`, 0 for `i > n`.
pub fn falling_factorial(n: u64, i: u64) -> BigInt {
    if i > n {
        return BigInt::zero();
    }
    range_product(n - i + 1, n)
}

pub fn factorial(n: u64) -> BigInt {
    falling_factorial(n, n)
}

/// C(2n, n).
pub fn central_binomial(n: u64) -> BigInt {
    binomial(2 * n, n as i64)
}

/// Catalan number C(2n, n) / (n + 1).
pub fn catalan(n: u64) -> BigInt {
    central_binomial(n) / (n + 1)
}

/// Row `n` of the Stirling triangle of the second kind: `S(n, 0..=n)`.
pub fn stirling2_row(n: u64) -> Vec<BigInt> {
    let n = n as usize;
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let stay = if k < m { &row[k] * k } else { BigInt::zero() };
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// Stirling number of the second kind S(n, k).
pub fn stirling2(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_row(n).swap_remove(k as usize)
}
