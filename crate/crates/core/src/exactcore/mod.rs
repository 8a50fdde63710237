//! Exact arithmetic substrate: big integers and rationals, combinatorial
//! primitives, rational interval enclosures (including a certified π), and
//! truncated formal power series.

mod integer;
mod interval;
mod pi;
mod powerseries;

pub use integer::{
    binomial, catalan, central_binomial, factorial, falling_factorial, stirling2, stirling2_row,
};
pub use interval::RationalInterval;
pub use num_bigint::BigInt;
pub use pi::pi_enclosure;
pub use powerseries::CoeffSeries;

use num_traits::{One, Zero};

/// Normalized exact fraction; the denominator is always positive and coprime
/// to the numerator.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` in lowest terms. Panics on a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// `base^exp` for a rational base; `0^0 = 1`.
pub fn rpow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn fmt_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// `(-1)^k` as a rational.
pub(crate) fn sign_pow(k: u64) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}
