use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Rational};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with rational endpoints, used as a certified
/// enclosure of a real number. Every operation returns an interval that
/// contains all exact results obtainable from points of its operands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Usage(format!(
                "interval endpoints out of order: {} > {}",
                fmt_rational(&lo),
                fmt_rational(&hi)
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(q: Rational) -> Self {
        Self {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    /// True when `other` lies inside `self`.
    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Strictly positive everywhere.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Enclosure of `1/x` for `x` in the interval. Fails when zero is inside.
    pub fn recip(&self) -> Result<Self> {
        if self.contains(&Rational::zero()) {
            return Err(Error::Usage(format!(
                "reciprocal of an interval containing zero: {self}"
            )));
        }
        Ok(Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    /// Enclosure of `sqrt(x)` with endpoints rounded outward to multiples of
    /// `2^-bits`. Requires a nonnegative interval.
    pub fn sqrt(&self, bits: u32) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::Usage(format!(
                "square root of an interval reaching below zero: {self}"
            )));
        }
        let (lo, _) = sqrt_bracket(&self.lo, bits);
        let (_, hi) = sqrt_bracket(&self.hi, bits);
        Ok(Self { lo, hi })
    }
}

/// Dyadic `(a/2^bits, (a+1)/2^bits)` with `a = floor(sqrt(q) * 2^bits)`.
/// Exact squares collapse to a point.
fn sqrt_bracket(q: &Rational, bits: u32) -> (Rational, Rational) {
    let scale = BigInt::one() << bits;
    let scaled = (q.numer() << (2 * bits)) / q.denom();
    let a = scaled.sqrt();
    let lo = Rational::new(a.clone(), scale.clone());
    if &lo * &lo == *q {
        return (lo.clone(), lo);
    }
    (lo, Rational::new(a + 1, scale))
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            fmt_rational(&self.lo),
            fmt_rational(&self.hi)
        )
    }
}

impl Add for &RationalInterval {
    type Output = RationalInterval;

    fn add(self, rhs: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &RationalInterval {
    type Output = RationalInterval;

    fn sub(self, rhs: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Neg for &RationalInterval {
    type Output = RationalInterval;

    fn neg(self) -> RationalInterval {
        RationalInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Mul for &RationalInterval {
    type Output = RationalInterval;

    fn mul(self, rhs: &RationalInterval) -> RationalInterval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().cloned().unwrap();
        let hi = products.into_iter().max().unwrap();
        RationalInterval { lo, hi }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{int, ratio};
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(p, q)| ratio(p, q))
    }

    fn interval() -> impl Strategy<Value = (RationalInterval, Rational)> {
        (small_rational(), small_rational(), 0u32..=8).prop_map(|(a, b, t)| {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            // a point inside: lo + t/8 (hi - lo)
            let inside = &lo + (&hi - &lo) * ratio(t, 8);
            (RationalInterval::new(lo, hi).unwrap(), inside)
        })
    }

    #[test]
    fn rejects_reversed_endpoints() {
        assert!(RationalInterval::new(int(2), int(1)).is_err());
    }

    #[test]
    fn point_contains_itself() {
        let q = ratio(-7, 3);
        assert!(RationalInterval::point(q.clone()).contains(&q));
        assert_eq!(RationalInterval::point(q).width(), int(0));
    }

    #[test]
    fn recip_requires_nonzero() {
        let iv = RationalInterval::new(int(-1), int(1)).unwrap();
        assert!(iv.recip().is_err());
        let iv = RationalInterval::new(int(2), int(4)).unwrap();
        assert_eq!(
            iv.recip().unwrap(),
            RationalInterval::new(ratio(1, 4), ratio(1, 2)).unwrap()
        );
    }

    #[test]
    fn sqrt_encloses_and_is_narrow() {
        let two = RationalInterval::point(int(2));
        let root = two.sqrt(40).unwrap();
        assert!(root.lo() * root.lo() < int(2));
        assert!(root.hi() * root.hi() > int(2));
        assert!(root.width() <= ratio(1, 1u64 << 40));
        let nine = RationalInterval::point(ratio(9, 4));
        assert_eq!(nine.sqrt(10).unwrap(), RationalInterval::point(ratio(3, 2)));
        assert!(RationalInterval::new(int(-1), int(1))
            .unwrap()
            .sqrt(8)
            .is_err());
    }

    proptest! {
        #[test]
        fn arithmetic_is_sound((x, p) in interval(), (y, q) in interval()) {
            prop_assert!((&x + &y).contains(&(&p + &q)));
            prop_assert!((&x - &y).contains(&(&p - &q)));
            prop_assert!((&x * &y).contains(&(&p * &q)));
            prop_assert!((-&x).contains(&-p.clone()));
            prop_assert!(x.scale(&q).contains(&(&p * &q)));
            if !y.contains(&int(0)) {
                prop_assert!(y.recip().unwrap().contains(&q.recip()));
            }
        }

        #[test]
        fn sqrt_is_sound(num in 0u64..10_000, den in 1u64..500, bits in 1u32..64) {
            let q = ratio(num, den);
            let root = RationalInterval::point(q.clone()).sqrt(bits).unwrap();
            prop_assert!(root.lo() * root.lo() <= q);
            prop_assert!(root.hi() * root.hi() >= q);
        }
    }
}
