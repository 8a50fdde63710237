//! Certified rational enclosure of π from Machin's identity
//! π = 16·atan(1/5) − 4·atan(1/239).
//!
//! The arctan series at `1/m` alternates with decreasing terms, so two
//! consecutive exact partial sums bracket the true value. The exact bracket is
//! then rounded outward onto the dyadic grid `2^-(bits+8)` to keep
//! denominators small for the comparisons done downstream.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, RationalInterval};
use crate::error::{Error, Result};

const GUARD_BITS: u32 = 8;

/// Enclosure `[lo, hi]` of π with `lo < π < hi` and `hi - lo < 2^-bits`.
///
/// Enclosures are nested: a larger `bits` never yields an endpoint outside a
/// smaller one's interval.
pub fn pi_enclosure(bits: u32) -> Result<RationalInterval> {
    if bits < 8 {
        return Err(Error::out_of_range("bits", bits, "bits >= 8"));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, RationalInterval>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&bits) {
        return Ok(hit.clone());
    }
    let computed = compute(bits);
    cache.lock().unwrap().insert(bits, computed.clone());
    Ok(computed)
}

fn compute(bits: u32) -> RationalInterval {
    // 25^K > 2^(4K) and 239^2 > 2^15 bound the first omitted terms.
    let terms5 = (bits + 12) / 4 + 1;
    let terms239 = (bits + 12) / 15 + 1;
    let (lo5, hi5) = atan_recip_bracket(5, terms5);
    let (lo239, hi239) = atan_recip_bracket(239, terms239);

    let lo = Rational::from_integer(16.into()) * lo5 - Rational::from_integer(4.into()) * hi239;
    let hi = Rational::from_integer(16.into()) * hi5 - Rational::from_integer(4.into()) * lo239;

    let grid = bits + GUARD_BITS;
    RationalInterval::new(round_down(&lo, grid), round_up(&hi, grid))
        .expect("Machin bracket is ordered")
}

/// Lower and upper bounds of atan(1/m) from the partial sums with `terms` and
/// `terms + 1` terms.
fn atan_recip_bracket(m: u64, terms: u32) -> (Rational, Rational) {
    let shorter = atan_recip_partial(m, terms);
    let longer = atan_recip_partial(m, terms + 1);
    // A partial sum ending on a positive term overshoots.
    if terms % 2 == 1 {
        (longer, shorter)
    } else {
        (shorter, longer)
    }
}

/// Σ_{j<terms} (-1)^j / ((2j+1) m^(2j+1)) as an exact rational, built over the
/// common denominator lcm(1, 3, .., 2·terms−1) · m^(2·terms−1).
fn atan_recip_partial(m: u64, terms: u32) -> Rational {
    if terms == 0 {
        return Rational::zero();
    }
    let odd_lcm = (0..terms as u64).fold(BigInt::one(), |acc, j| acc.lcm(&BigInt::from(2 * j + 1)));
    let m_sq = BigInt::from(m * m);
    let mut numer = BigInt::zero();
    let mut power = BigInt::one(); // m^(2(terms-1-j)), walking j downward
    for j in (0..terms as u64).rev() {
        let term = (&odd_lcm / (2 * j + 1)) * &power;
        if j % 2 == 0 {
            numer += term;
        } else {
            numer -= term;
        }
        power *= &m_sq;
    }
    let denom = odd_lcm * num_traits::pow(BigInt::from(m), 2 * terms as usize - 1);
    Rational::new(numer, denom)
}

fn round_down(q: &Rational, bits: u32) -> Rational {
    let scaled = (q.numer() << bits).div_floor(q.denom());
    Rational::new(scaled, BigInt::one() << bits)
}

fn round_up(q: &Rational, bits: u32) -> Rational {
    let scaled = (q.numer() << bits).div_ceil(q.denom());
    Rational::new(scaled, BigInt::one() << bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{fmt_rational, int, ratio};

    // First 60 decimals of π; the enclosure must bracket the truncation and
    // the truncation plus one unit in the last place.
    const PI_DIGITS: &str = "3141592653589793238462643383279502884197169399375105820974944";

    fn pi_decimal_bracket() -> (Rational, Rational) {
        let digits: BigInt = PI_DIGITS.parse().unwrap();
        let scale = num_traits::pow(BigInt::from(10), PI_DIGITS.len() - 1);
        (
            Rational::new(digits.clone(), scale.clone()),
            Rational::new(digits + 1, scale),
        )
    }

    #[test]
    fn rejects_tiny_precision() {
        assert!(pi_enclosure(7).is_err());
    }

    #[test]
    fn eight_bits_contains_pi_with_width_below_one_256th() {
        let pi = pi_enclosure(8).unwrap();
        let (lo, hi) = pi_decimal_bracket();
        assert!(pi.lo() < &lo && &hi < pi.hi(), "{pi}");
        assert!(pi.width() < ratio(1, 256));
        assert!(pi.lo() < pi.hi());
    }

    #[test]
    fn brackets_sixty_decimal_digits() {
        let (lo, hi) = pi_decimal_bracket();
        for bits in [8, 16, 32, 64, 128, 190, 256] {
            let pi = pi_enclosure(bits).unwrap();
            // both contain π, so they must overlap
            assert!(pi.lo() < &hi, "bits={bits} lo={}", fmt_rational(pi.lo()));
            assert!(pi.hi() > &lo, "bits={bits} hi={}", fmt_rational(pi.hi()));
            assert!(pi.width() < Rational::new(BigInt::one(), BigInt::one() << bits));
        }
    }

    #[test]
    fn widths_shrink_and_enclosures_nest() {
        let all: Vec<_> = (8..=300).map(|b| pi_enclosure(b).unwrap()).collect();
        for (i, a) in all.iter().enumerate() {
            let bits = 8 + i as u32;
            assert!(a.width() < Rational::new(BigInt::one(), BigInt::one() << bits));
            for b in &all[i..] {
                assert!(
                    a.contains_interval(b),
                    "bits {bits} does not contain a later one"
                );
                assert!(a.intersects(b));
            }
        }
        for bits in [8u32, 20, 64, 512, 1024] {
            assert!(pi_enclosure(bits)
                .unwrap()
                .contains_interval(&pi_enclosure(2 * bits).unwrap()));
        }
    }

    #[test]
    fn alternating_partials_bracket_simple_arctan() {
        // atan(1/1) = π/4: partial sums of Leibniz's series alternate around it.
        let quarter = pi_enclosure(64).unwrap().scale(&ratio(1, 4));
        let (lo, hi) = atan_recip_bracket(1, 11);
        assert!(lo < *quarter.lo() && *quarter.hi() < hi);
        assert_eq!(atan_recip_partial(5, 1), ratio(1, 5));
        assert_eq!(atan_recip_partial(5, 2), ratio(1, 5) - ratio(1, 375));
        assert_eq!(atan_recip_partial(3, 0), int(0));
    }
}
