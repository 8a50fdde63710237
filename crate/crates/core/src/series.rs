//! Weighted binomial sums with closed forms:
//!
//! * `S(x) = Σ_{i=0}^{n} r/(r+i)·(−1)^i·C(n,i)·x^(r+i)` and its `(1+x)`
//!   counterpart `M(x)`, each against an antiderivative closed form;
//! * the telescoping reciprocal-product series `Σ_r 1/∏_{i=0}^{n}(r+i)`;
//! * `Σ_r C(n,r)·a^(n−r)·r^k·(bm)^r` against its Stirling expansion.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactcore::{
    binomial, falling_factorial, int, ratio, rpow, sign_pow, stirling2, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesParams {
    n: u32,
    r: u32,
    x: Rational,
}

impl SeriesParams {
    /// `x = 0` is accepted; every closed form is defined there.
    pub fn new(n: u32, r: u32, x: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::out_of_range("n", n, "n >= 1"));
        }
        if r == 0 {
            return Err(Error::out_of_range("r", r, "r >= 1"));
        }
        Ok(Self { n, r, x })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    fn with_x(&self, x: Rational) -> Self {
        Self { x, ..self.clone() }
    }
}

/// `P_i^r / P_i^(n+i)` as an exact ratio of falling factorials.
fn falling_ratio(r: u32, n: u32, i: u32) -> Rational {
    Rational::new(
        falling_factorial(r as u64, i as u64),
        falling_factorial((n + i) as u64, i as u64),
    )
}

fn weighted_sum(p: &SeriesParams, alternate: bool) -> Rational {
    let (n, r) = (p.n, p.r);
    (0..=n)
        .map(|i| {
            let sign = if alternate {
                sign_pow(i as u64)
            } else {
                Rational::one()
            };
            ratio(r, r + i)
                * sign
                * Rational::from_integer(binomial(n as u64, i as i64))
                * rpow(&p.x, r + i)
        })
        .sum()
}

pub fn s_direct(p: &SeriesParams) -> Rational {
    weighted_sum(p, true)
}

/// `−Σ_{i=1}^{r} x^(r−i)·(1−x)^(n+i)·P_i^r/P_i^(n+i) + 1/C(n+r, r)`
pub fn s_closed(p: &SeriesParams) -> Rational {
    let (n, r) = (p.n, p.r);
    let one_minus = Rational::one() - &p.x;
    let body: Rational = (1..=r)
        .map(|i| rpow(&p.x, r - i) * rpow(&one_minus, n + i) * falling_ratio(r, n, i))
        .sum();
    Rational::new(BigInt::one(), binomial((n + r) as u64, r as i64)) - body
}

pub fn m_direct(p: &SeriesParams) -> Rational {
    weighted_sum(p, false)
}

/// `Σ_{i=1}^{r} (−1)^(i−1)·x^(r−i)·(1+x)^(n+i)·P_i^r/P_i^(n+i) + (−1)^r/C(n+r, r)`
pub fn m_closed(p: &SeriesParams) -> Rational {
    let (n, r) = (p.n, p.r);
    let one_plus = Rational::one() + &p.x;
    let body: Rational = (1..=r)
        .map(|i| {
            sign_pow((i - 1) as u64)
                * rpow(&p.x, r - i)
                * rpow(&one_plus, n + i)
                * falling_ratio(r, n, i)
        })
        .sum();
    body + sign_pow(r as u64) * Rational::new(BigInt::one(), binomial((n + r) as u64, r as i64))
}

/// `(−1)^r · S(−x)`, which must equal `M(x)`.
pub fn m_by_reflection(p: &SeriesParams) -> Rational {
    sign_pow(p.r as u64) * s_direct(&p.with_x(-&p.x))
}

/// `(2^(n+1) − 1)/(n + 1)`: the plain sum Σ C(n,r)/(r+1).
pub fn plain_sum_closed(n: u32) -> Rational {
    ratio((BigInt::one() << (n + 1)) - 1, n + 1)
}

/// `1/(n + 1)`: the alternating sum Σ (−1)^r C(n,r)/(r+1).
pub fn alternating_sum_closed(n: u32) -> Rational {
    ratio(1, n + 1)
}

fn rising_product(start: u64, count: u32) -> BigInt {
    (0..count as u64).map(|i| BigInt::from(start + i)).product()
}

fn check_mn(m: u32, n: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::out_of_range("m", m, "m >= 1"));
    }
    if n == 0 {
        return Err(Error::out_of_range("n", n, "n >= 1"));
    }
    Ok(())
}

/// `Σ_{r=m}^{upper} 1/∏_{i=0}^{n}(r+i)` summed term by term.
pub fn telescope_product_series(m: u32, n: u32, upper: u32) -> Result<Rational> {
    check_mn(m, n)?;
    if upper < m {
        return Err(Error::out_of_range("M", upper, "M >= m"));
    }
    Ok((m..=upper)
        .map(|r| Rational::new(BigInt::one(), rising_product(r as u64, n + 1)))
        .sum())
}

/// `(1/n)·(1/∏_{i=0}^{n−1}(m+i) − 1/∏_{i=1}^{n}(M+i))`
pub fn telescope_closed_form(m: u32, n: u32, upper: u32) -> Result<Rational> {
    check_mn(m, n)?;
    if upper < m {
        return Err(Error::out_of_range("M", upper, "M >= m"));
    }
    let head = Rational::new(BigInt::one(), rising_product(m as u64, n));
    let tail = Rational::new(BigInt::one(), rising_product(upper as u64 + 1, n));
    Ok((head - tail) / int(n))
}

/// The infinite sum `1/(n·n!·C(n+m−1, m−1))`.
pub fn telescope_limit(m: u32, n: u32) -> Result<Rational> {
    check_mn(m, n)?;
    let den = BigInt::from(n)
        * falling_factorial(n as u64, n as u64)
        * binomial((n + m - 1) as u64, m as i64 - 1);
    Ok(Rational::new(BigInt::one(), den))
}

/// `n/(r·C(n+r, r)) = 1/C(n+r−1, r−1) − 1/C(n+r, r)`
pub fn telescope_summand_holds(n: u32, r: u32) -> bool {
    if n == 0 || r == 0 {
        return false;
    }
    let full = Rational::from_integer(binomial((n + r) as u64, r as i64));
    let lhs = ratio(n, r) / &full;
    let rhs =
        Rational::new(BigInt::one(), binomial((n + r - 1) as u64, r as i64 - 1)) - full.recip();
    lhs == rhs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumParams {
    pub a: Rational,
    pub b: Rational,
    pub m: Rational,
    pub n: u32,
    pub k: u32,
}

impl PowerSumParams {
    /// `m > 0`, `n ≥ 1`, `k ≥ 1`; `a` and `b` are unrestricted.
    pub fn new(a: Rational, b: Rational, m: Rational, n: u32, k: u32) -> Result<Self> {
        if !m.is_positive() {
            return Err(Error::Usage("m must be a positive rational".into()));
        }
        if n == 0 {
            return Err(Error::out_of_range("n", n, "n >= 1"));
        }
        if k == 0 {
            return Err(Error::out_of_range("k", k, "k >= 1"));
        }
        Ok(Self { a, b, m, n, k })
    }
}

/// `(lhs, rhs)` with
/// lhs = Σ_{r=0}^{n} C(n,r)·a^(n−r)·r^k·(bm)^r and
/// rhs = Σ_{i=1}^{k} S(k,i)·P_i^n·(a+bm)^(n−i)·(bm)^i.
/// Terms with `i > n` vanish because `P_i^n = 0`.
pub fn power_sum_both_sides(p: &PowerSumParams) -> (Rational, Rational) {
    let bm = &p.b * &p.m;
    let lhs: Rational = (1..=p.n)
        .map(|r| {
            Rational::from_integer(
                binomial(p.n as u64, r as i64) * num_traits::pow(BigInt::from(r), p.k as usize),
            ) * rpow(&p.a, p.n - r)
                * rpow(&bm, r)
        })
        .sum();
    let shifted = &p.a + &bm;
    let rhs: Rational = (1..=p.k.min(p.n))
        .map(|i| {
            Rational::from_integer(
                stirling2(p.k as u64, i as u64) * falling_factorial(p.n as u64, i as u64),
            ) * rpow(&shifted, p.n - i)
                * rpow(&bm, i)
        })
        .sum();
    (lhs, rhs)
}

/// `n(n+1)·2^(n−2)`, the value of Σ r²·C(n, r).
pub fn putnam_value(n: u32) -> Rational {
    let two = int(2);
    int(n as u64 * (n as u64 + 1)) * num_traits::pow(two, n as usize) / int(4)
}

/// `Σ_{i=1}^{k} S(k,i)·P_i^n·2^(n−i)`, the value of Σ r^k·C(n, r).
pub fn stirling_power_sum(n: u32, k: u32) -> BigInt {
    (1..=k.min(n))
        .map(|i| (stirling2(k as u64, i as u64) * falling_factorial(n as u64, i as u64)) << (n - i))
        .sum()
}

/// Σ_{r=1}^{n} r^k·C(n, r) evaluated directly.
pub fn plain_power_sum(n: u32, k: u32) -> BigInt {
    (1..=n)
        .map(|r| binomial(n as u64, r as i64) * num_traits::pow(BigInt::from(r), k as usize))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, r: u32, x: Rational) -> SeriesParams {
        SeriesParams::new(n, r, x).unwrap()
    }

    fn x_grid() -> Vec<Rational> {
        vec![
            int(2),
            int(-2),
            int(1),
            int(-1),
            ratio(1, 2),
            ratio(-1, 2),
            ratio(1, 3),
            ratio(-1, 3),
            ratio(1, 4),
            int(0),
        ]
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_direct(&params(2, 1, int(1))), ratio(1, 3));
        assert_eq!(s_direct(&params(1, 2, ratio(1, 2))), ratio(1, 6));
        for n in 1..=5 {
            assert_eq!(s_direct(&params(n, 3, int(0))), int(0));
            assert_eq!(s_closed(&params(n, 3, int(0))), int(0));
        }
        assert_eq!(s_closed(&params(2, 1, int(1))), ratio(1, 3));
    }

    #[test]
    fn s_special_cases() {
        for n in 1..=8u32 {
            for r in 1..=6u32 {
                let expected = Rational::new(BigInt::one(), binomial((n + r) as u64, r as i64));
                assert_eq!(s_closed(&params(n, r, int(1))), expected);
                assert_eq!(s_direct(&params(n, r, int(1))), expected);
            }
            for x in x_grid() {
                let expected =
                    (Rational::one() - rpow(&(Rational::one() - &x), n + 1)) / int(n + 1);
                assert_eq!(s_closed(&params(n, 1, x)), expected);
            }
        }
    }

    #[test]
    fn m_examples() {
        let p = params(2, 1, int(1));
        assert_eq!(m_direct(&p), ratio(7, 3));
        assert_eq!(m_closed(&p), ratio(7, 3));
        assert_eq!(plain_sum_closed(2), ratio(7, 3));
        assert_eq!(m_direct(&params(2, 1, int(-1))), ratio(-1, 3));
        assert_eq!(m_direct(&params(4, 2, int(0))), int(0));
        assert_eq!(m_closed(&params(4, 2, int(0))), int(0));
    }

    #[test]
    fn closed_forms_match_on_grid() {
        for n in 1..=10 {
            for r in 1..=6 {
                for x in x_grid() {
                    let p = params(n, r, x);
                    assert_eq!(s_direct(&p), s_closed(&p), "S n={n} r={r} x={}", p.x);
                    assert_eq!(m_direct(&p), m_closed(&p), "M n={n} r={r} x={}", p.x);
                    assert_eq!(m_direct(&p), m_by_reflection(&p));
                }
            }
        }
    }

    #[test]
    fn binomial_reciprocal_sums() {
        for n in 1..=20 {
            assert_eq!(m_direct(&params(n, 1, int(1))), plain_sum_closed(n));
            assert_eq!(s_direct(&params(n, 1, int(1))), alternating_sum_closed(n));
        }
    }

    #[test]
    fn params_validation() {
        assert!(SeriesParams::new(0, 1, int(1)).is_err());
        assert!(SeriesParams::new(1, 0, int(1)).is_err());
        assert!(PowerSumParams::new(int(1), int(1), int(0), 2, 2).is_err());
        assert!(PowerSumParams::new(int(1), int(1), int(-1), 2, 2).is_err());
        assert!(PowerSumParams::new(int(1), int(1), int(1), 2, 0).is_err());
        assert!(PowerSumParams::new(int(1), int(1), int(1), 0, 1).is_err());
    }

    #[test]
    fn telescope_examples() {
        assert_eq!(telescope_product_series(1, 1, 9).unwrap(), ratio(9, 10));
        assert_eq!(telescope_limit(1, 1).unwrap(), int(1));
        assert!(telescope_summand_holds(2, 3));
        // 2/(3·C(5,3)) = 1/15
        assert_eq!(ratio(2, 3) / int(10), ratio(1, 6) - ratio(1, 10));
        assert!(telescope_product_series(3, 1, 2).is_err());
        assert!(telescope_limit(0, 1).is_err());
    }

    #[test]
    fn telescope_partial_sums_match_closed_form() {
        for m in 1..=8 {
            for n in 1..=8 {
                let limit = telescope_limit(m, n).unwrap();
                let mut prev_tail: Option<Rational> = None;
                for upper in m..=50 {
                    let partial = telescope_product_series(m, n, upper).unwrap();
                    assert_eq!(partial, telescope_closed_form(m, n, upper).unwrap());
                    let tail = &limit - &partial;
                    assert!(tail.is_positive());
                    if let Some(prev) = prev_tail {
                        assert!(tail < prev);
                    }
                    prev_tail = Some(tail);
                }
                assert!(telescope_summand_holds(n, m));
            }
        }
    }

    #[test]
    fn putnam_and_power_sum_examples() {
        let p = PowerSumParams::new(int(1), int(1), int(1), 3, 2).unwrap();
        assert_eq!(power_sum_both_sides(&p), (int(24), int(24)));
        assert_eq!(putnam_value(3), int(24));
        let p = PowerSumParams::new(int(0), int(1), int(1), 3, 3).unwrap();
        assert_eq!(power_sum_both_sides(&p), (int(27), int(27)));
        for n in 1..=12 {
            assert_eq!(
                Rational::from_integer(plain_power_sum(n, 2)),
                putnam_value(n)
            );
            for k in 1..=n {
                assert_eq!(stirling_power_sum(n, k), plain_power_sum(n, k));
            }
        }
    }

    #[test]
    fn power_sum_grid() {
        let values = [int(0), int(1), int(-1), ratio(1, 2), ratio(-3, 2), int(2)];
        let ms = [int(1), ratio(1, 3), int(2)];
        for k in 1..=8 {
            for n in 1..=8 {
                for a in &values {
                    for b in &values {
                        for m in &ms {
                            let p =
                                PowerSumParams::new(a.clone(), b.clone(), m.clone(), n, k).unwrap();
                            let (lhs, rhs) = power_sum_both_sides(&p);
                            assert_eq!(lhs, rhs, "a={a} b={b} m={m} n={n} k={k}");
                        }
                    }
                }
            }
        }
    }
}
