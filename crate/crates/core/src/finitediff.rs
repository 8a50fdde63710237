//! Forward differences of power sequences and the surjection count behind
//! the constant `n!` reached after `n` differencing steps of `(k^n)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactcore::{binomial, factorial, stirling2};

/// Row 0 is the input; row `j` holds the forward differences of row `j − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffTable {
    rows: Vec<Vec<BigInt>>,
}

impl DiffTable {
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn last_row(&self) -> &[BigInt] {
        self.rows.last().expect("row 0 always present")
    }

    pub fn is_last_row_constant(&self) -> bool {
        self.last_row().windows(2).all(|w| w[0] == w[1])
    }
}

pub fn difference_table(seq: &[BigInt], steps: usize) -> Result<DiffTable> {
    if seq.len() <= steps {
        return Err(Error::PrefixTooShort {
            len: seq.len(),
            steps,
        });
    }
    let mut rows = vec![seq.to_vec()];
    for _ in 0..steps {
        let next = rows
            .last()
            .unwrap()
            .windows(2)
            .map(|w| &w[1] - &w[0])
            .collect();
        rows.push(next);
    }
    Ok(DiffTable { rows })
}

pub const MAX_POWER: u32 = 20;

/// Differences `(k^n)_{k=1..n+2}` `n` times and returns the constant final
/// row's value.
pub fn power_diff_constant(n: u32) -> Result<BigInt> {
    if !(1..=MAX_POWER).contains(&n) {
        return Err(Error::out_of_range("n", n, "1 <= n <= 20"));
    }
    let seq: Vec<BigInt> = (1..=n as u64 + 2)
        .map(|k| num_traits::pow(BigInt::from(k), n as usize))
        .collect();
    let table = difference_table(&seq, n as usize)?;
    assert!(
        table.is_last_row_constant(),
        "n-th difference of k^n is not constant for n = {n}"
    );
    Ok(table.last_row()[0].clone())
}

fn pow_u(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Onto maps from an n-set to an m-set, by inclusion–exclusion
/// `Σ_k (−1)^k C(m,k) (m−k)^n` with `0^0 = 1`.
pub fn surjections(n: u32, m: u32) -> BigInt {
    (0..=m)
        .map(|k| {
            let term = binomial(m as u64, k as i64) * pow_u((m - k) as u64, n);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `m!·S(n, m)`.
pub fn surjections_via_stirling(n: u32, m: u32) -> BigInt {
    factorial(m as u64) * stirling2(n as u64, m as u64)
}

/// `A(n, j)` for the sequence `(k^n)` with the exponent fixed at `n`:
/// `A(n, 1) = n^n − (n−1)^n` and `A(n, j) = A(n, j−1) − A(n−1, j−1)`.
pub fn a_recursion(n: u32, j: u32) -> Result<BigInt> {
    if n == 0 || j == 0 || j > n {
        return Err(Error::out_of_range("j", j, "1 <= j <= n"));
    }
    // level[i] = A(i, depth) for the fixed exponent, i in 1..=n
    let exp = n;
    let mut level: Vec<BigInt> = (0..=n as u64)
        .map(|i| {
            if i == 0 {
                BigInt::zero()
            } else {
                pow_u(i, exp) - pow_u(i - 1, exp)
            }
        })
        .collect();
    for depth in 2..=j as usize {
        // A(i, depth) needs A(i − 1, depth − 1), so only i >= depth is kept meaningful
        let mut next = vec![BigInt::zero(); level.len()];
        for i in depth..level.len() {
            next[i] = &level[i] - &level[i - 1];
        }
        level = next;
    }
    Ok(level.swap_remove(n as usize))
}

/// `Σ_{k=0}^{j} (−1)^k C(j,k) (n−k)^n`.
pub fn a_closed(n: u32, j: u32) -> BigInt {
    (0..=j.min(n))
        .map(|k| {
            let term = binomial(j as u64, k as i64) * pow_u((n - k) as u64, n);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `A(n, n) = n!`.
pub fn a_diagonal_is_factorial(n: u32) -> Result<bool> {
    Ok(a_recursion(n, n)? == factorial(n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn table_examples() {
        let cubes = ints(&[1, 8, 27, 64, 125, 216]);
        let t = difference_table(&cubes, 3).unwrap();
        assert_eq!(t.rows()[1], ints(&[7, 19, 37, 61, 91]));
        assert_eq!(t.rows()[2], ints(&[12, 18, 24, 30]));
        assert_eq!(t.last_row(), ints(&[6, 6, 6]).as_slice());
        assert_eq!(
            difference_table(&cubes, 0).unwrap().last_row(),
            cubes.as_slice()
        );
        let squares = ints(&[1, 4, 9, 16]);
        assert_eq!(
            difference_table(&squares, 2).unwrap().last_row(),
            ints(&[2, 2]).as_slice()
        );
        assert_eq!(
            difference_table(&squares, 4),
            Err(Error::PrefixTooShort { len: 4, steps: 4 })
        );
    }

    #[test]
    fn power_constant_examples() {
        assert_eq!(power_diff_constant(3).unwrap(), BigInt::from(6));
        assert_eq!(power_diff_constant(1).unwrap(), BigInt::from(1));
        assert_eq!(power_diff_constant(5).unwrap(), BigInt::from(120));
        assert!(power_diff_constant(0).is_err());
        assert!(power_diff_constant(21).is_err());
        for n in 1..=MAX_POWER {
            assert_eq!(power_diff_constant(n).unwrap(), factorial(n as u64));
        }
    }

    #[test]
    fn surjection_examples() {
        assert_eq!(surjections(3, 3), BigInt::from(6));
        assert_eq!(surjections(4, 2), BigInt::from(14));
        assert_eq!(surjections(2, 3), BigInt::zero());
        assert_eq!(surjections(0, 0), BigInt::one());
        for n in 0..=10 {
            for m in 0..=10 {
                assert_eq!(
                    surjections(n, m),
                    surjections_via_stirling(n, m),
                    "F({n},{m})"
                );
                if m > n && n >= 1 {
                    assert_eq!(surjections(n, m), BigInt::zero());
                }
            }
            assert_eq!(surjections(n, n), factorial(n as u64));
        }
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_recursion(3, 2).unwrap(), BigInt::from(12));
        assert_eq!(a_closed(3, 2), BigInt::from(12));
        assert_eq!(a_recursion(2, 1).unwrap(), BigInt::from(3));
        assert!(a_recursion(3, 4).is_err());
        assert!(a_recursion(3, 0).is_err());
        for n in 1..=12 {
            assert!(a_diagonal_is_factorial(n).unwrap());
        }
    }

    #[test]
    fn a_recursion_matches_inclusion_exclusion() {
        for n in 1..=10 {
            for j in 1..=n {
                assert_eq!(a_recursion(n, j).unwrap(), a_closed(n, j), "A({n},{j})");
            }
        }
    }

    #[test]
    fn a_values_appear_in_power_tables() {
        // A(n, j) is the last entry of row j of the table for (1^n, .., n^n)
        for n in 1..=8u32 {
            let seq: Vec<BigInt> = (1..=n as u64).map(|k| pow_u(k, n)).collect();
            let t = difference_table(&seq, n as usize - 1).unwrap();
            for j in 1..n {
                assert_eq!(
                    t.rows()[j as usize].last().unwrap(),
                    &a_recursion(n, j).unwrap()
                );
            }
        }
    }

    proptest! {
        #[test]
        fn differencing_is_linear(
            s in proptest::collection::vec(-1000i64..1000, 2..12),
            t in proptest::collection::vec(-1000i64..1000, 12),
            alpha in -9i64..9,
            beta in -9i64..9,
            steps in 0usize..11,
        ) {
            let len = s.len();
            prop_assume!(steps < len);
            let s = ints(&s);
            let t = ints(&t[..len]);
            let mixed: Vec<BigInt> = s.iter().zip(&t).map(|(a, b)| a * alpha + b * beta).collect();
            let ts = difference_table(&s, steps).unwrap();
            let tt = difference_table(&t, steps).unwrap();
            let tm = difference_table(&mixed, steps).unwrap();
            for (j, row) in tm.rows().iter().enumerate() {
                let expected: Vec<BigInt> = ts.rows()[j].iter().zip(&tt.rows()[j]).map(|(a, b)| a * alpha + b * beta).collect();
                prop_assert_eq!(row, &expected);
                prop_assert_eq!(row.len(), len - j);
            }
        }
    }
}
