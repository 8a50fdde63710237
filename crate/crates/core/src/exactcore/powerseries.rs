use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Formal power series truncated after degree `N`, with exact integer
/// coefficients. Products silently drop every term above `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffSeries {
    coeffs: Vec<BigInt>,
}

impl CoeffSeries {
    /// The constant series `1` truncated at `degree`.
    pub fn one(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    /// Pads with zeros or truncates `coeffs` to exactly `degree + 1` terms.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, degree: usize) -> Self {
        coeffs.resize(degree + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Truncated Cauchy product. Both operands must share a truncation degree.
    pub fn mul(&self, other: &CoeffSeries) -> Result<CoeffSeries> {
        if self.degree() != other.degree() {
            return Err(Error::Usage(format!(
                "truncation degrees differ: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        let n = self.degree();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(CoeffSeries { coeffs: out })
    }

    /// Multiplies by the geometric factor `1 / (1 - c·x^k) = Σ_j c^j x^(jk)`.
    pub fn mul_geometric(&self, c: &BigInt, k: usize) -> Result<CoeffSeries> {
        if k == 0 {
            return Err(Error::out_of_range("k", k, "k >= 1"));
        }
        let mut out = self.coeffs.clone();
        if c.is_zero() {
            return Ok(CoeffSeries { coeffs: out });
        }
        // out = s / (1 - c x^k)  <=>  out[d] = s[d] + c * out[d - k]
        for d in k..out.len() {
            let carried = c * &out[d - k];
            out[d] += carried;
        }
        Ok(CoeffSeries { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Independent expansion: multiply by the explicit truncated polynomial
    /// Σ_{jk <= N} c^j x^(jk).
    fn geometric_poly(c: i64, k: usize, degree: usize) -> CoeffSeries {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        let mut power = BigInt::one();
        let mut d = 0;
        while d <= degree {
            coeffs[d] = power.clone();
            power *= c;
            d += k;
        }
        CoeffSeries::from_coeffs(coeffs, degree)
    }

    #[test]
    fn geometric_examples() {
        let s = CoeffSeries::one(3);
        assert_eq!(
            s.mul_geometric(&BigInt::one(), 1).unwrap().coeffs(),
            ints(&[1, 1, 1, 1])
        );
        let s = CoeffSeries::one(6);
        assert_eq!(
            s.mul_geometric(&BigInt::from(2), 3).unwrap().coeffs(),
            ints(&[1, 0, 0, 2, 0, 0, 4])
        );
        let s = CoeffSeries::from_coeffs(ints(&[3, -1, 4]), 2);
        assert_eq!(s.mul_geometric(&BigInt::zero(), 2).unwrap(), s);
        assert!(s.mul_geometric(&BigInt::one(), 0).is_err());
    }

    #[test]
    fn truncation_shapes() {
        let s = CoeffSeries::from_coeffs(ints(&[1, 2, 3, 4]), 1);
        assert_eq!(s.coeffs(), ints(&[1, 2]));
        assert_eq!(CoeffSeries::one(0).coeffs(), ints(&[1]));
        assert!(s.mul(&CoeffSeries::one(3)).is_err());
    }

    proptest! {
        #[test]
        fn geometric_matches_explicit_product(
            coeffs in proptest::collection::vec(-9i64..9, 1..12),
            c in -4i64..5,
            k in 1usize..5,
        ) {
            let degree = coeffs.len() - 1;
            let s = CoeffSeries::from_coeffs(ints(&coeffs), degree);
            let fast = s.mul_geometric(&BigInt::from(c), k).unwrap();
            let slow = s.mul(&geometric_poly(c, k, degree)).unwrap();
            prop_assert_eq!(fast, slow);
        }
    }
}
