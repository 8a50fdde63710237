//! The tables p1(n,k) (partitions of n with largest part k) and p2(n,k)
//! (the same partitions weighted by ∏ B(part − 1)), each built by more than
//! one route so the routes can be compared.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::partitions;
use crate::error::{Error, Result};
use crate::exactcore::CoeffSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    P1,
    P2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Division-algorithm decomposition over ⌊n/k⌋ copies of the largest part.
    PaperRecursion,
    /// p1(n,k) = p1(n−1,k−1) + p1(n−k,k).
    StandardRecursion,
    /// Explicit sum over enumerated partitions.
    DirectSum,
}

/// Exact table `values[n][k]` for `0 <= k <= n <= n_max`. Entry `(0, 0)` is the
/// empty partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTriangle {
    kind: TriangleKind,
    method: Method,
    values: Vec<Vec<BigInt>>,
}

impl CountTriangle {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// Entry `(n, k)`; zero for `k > n`. Panics past `n_max`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.values[n].get(k).cloned().unwrap_or_default()
    }

    fn at(&self, n: usize, k: usize) -> &BigInt {
        &self.values[n][k]
    }

    /// Σ_{j=1}^{k_max} values[n][j], with `k_max` clipped to `n`.
    fn prefix(values: &[Vec<BigInt>], n: usize, k_max: usize) -> BigInt {
        values[n].iter().take(k_max.min(n) + 1).skip(1).sum()
    }

    /// Σ_k values[n][k]; 1 for `n = 0`.
    pub fn row_sum(&self, n: usize) -> BigInt {
        self.values[n].iter().sum()
    }

    pub fn p1_standard(n_max: usize) -> Self {
        let mut values: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let mut row = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                let shrink = values[n - 1].get(k - 1).cloned().unwrap_or_default();
                let remove = values[n - k].get(k).cloned().unwrap_or_default();
                row[k] = shrink + remove;
            }
            values.push(row);
        }
        Self {
            kind: TriangleKind::P1,
            method: Method::StandardRecursion,
            values,
        }
    }

    /// With `n = k·q + r`: Σ_{i=1}^{q−1} Σ_{j<k} p1(n−ik, j) + p(r), and
    /// p1(n, 1) = 1. p(r) is read off the table's own row sums.
    pub fn p1_paper(n_max: usize) -> Self {
        let mut values: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let mut row = vec![BigInt::zero(); n + 1];
            row[1] = BigInt::one();
            for (k, slot) in row.iter_mut().enumerate().skip(2) {
                let (q, r) = (n / k, n % k);
                let mut acc: BigInt = (1..q)
                    .map(|i| Self::prefix(&values, n - i * k, k - 1))
                    .sum();
                acc += values[r].iter().sum::<BigInt>();
                *slot = acc;
            }
            values.push(row);
        }
        Self {
            kind: TriangleKind::P1,
            method: Method::PaperRecursion,
            values,
        }
    }

    /// With `n = k·q + r`:
    /// Σ_{i=1}^{q−1} B(k−1)^i · Σ_{j<k} p2(n−ik, j) + B(k−1)^q · B(r),
    /// and p2(n, 1) = 1. B(m) is the table's own row sum, B(0) = 1.
    pub fn p2_paper(n_max: usize) -> Self {
        let mut values: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        let mut b: Vec<BigInt> = vec![BigInt::one()];
        for n in 1..=n_max {
            let mut row = vec![BigInt::zero(); n + 1];
            row[1] = BigInt::one();
            for k in 2..=n {
                let (q, r) = (n / k, n % k);
                let weight = &b[k - 1];
                let mut power = BigInt::one();
                let mut acc = BigInt::zero();
                for i in 1..q {
                    power *= weight;
                    acc += &power * Self::prefix(&values, n - i * k, k - 1);
                }
                power *= weight;
                acc += power * &b[r];
                row[k] = acc;
            }
            b.push(row.iter().sum());
            values.push(row);
        }
        Self {
            kind: TriangleKind::P2,
            method: Method::PaperRecursion,
            values,
        }
    }

    /// Σ over partitions of n with largest part k of ∏ b[part − 1]. Needs
    /// `b[0..n_max]`.
    pub fn p2_direct(n_max: usize, b: &[BigInt]) -> Result<Self> {
        if n_max > 0 && b.len() < n_max {
            return Err(Error::Usage(format!(
                "p2 direct sum to n = {n_max} needs B(0..{}), got {} values",
                n_max - 1,
                b.len()
            )));
        }
        let mut values: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let mut row = vec![BigInt::zero(); n + 1];
            for p in partitions(n as u32) {
                let weight: BigInt = p
                    .parts()
                    .iter()
                    .map(|&part| &b[part as usize - 1])
                    .product();
                row[p.largest() as usize] += weight;
            }
            values.push(row);
        }
        Ok(Self {
            kind: TriangleKind::P2,
            method: Method::DirectSum,
            values,
        })
    }

    /// Count of partitions of n with largest part k, by enumeration.
    pub fn p1_direct(n_max: usize) -> Self {
        let mut values: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let mut row = vec![BigInt::zero(); n + 1];
            for p in partitions(n as u32) {
                row[p.largest() as usize] += 1;
            }
            values.push(row);
        }
        Self {
            kind: TriangleKind::P1,
            method: Method::DirectSum,
            values,
        }
    }

    /// Sub-diagonal sanity: p(n, 1) = 1 for every n ≥ 1.
    pub fn first_column_is_one(&self) -> bool {
        (1..=self.n_max()).all(|n| self.at(n, 1).is_one())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BMethod {
    PartitionSum,
    P2Sum,
    EulerProduct,
}

/// B(0..=N) as computed by one route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSequence {
    method: BMethod,
    values: Vec<BigInt>,
}

impl BSequence {
    pub fn method(&self) -> BMethod {
        self.method
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// B(n) = Σ over all partitions of n of ∏ B(part − 1), with B(0) = 1.
    pub fn partition_sum(n_max: usize) -> Self {
        let mut values = vec![BigInt::one()];
        for n in 1..=n_max {
            let total: BigInt = partitions(n as u32)
                .map(|p| {
                    p.parts()
                        .iter()
                        .map(|&part| &values[part as usize - 1])
                        .product::<BigInt>()
                })
                .sum();
            values.push(total);
        }
        Self {
            method: BMethod::PartitionSum,
            values,
        }
    }

    /// B(n) = Σ_k p2(n, k) from the recursion-built p2 table.
    pub fn p2_sum(n_max: usize) -> Self {
        let table = CountTriangle::p2_paper(n_max);
        Self {
            method: BMethod::P2Sum,
            values: (0..=n_max).map(|n| table.row_sum(n)).collect(),
        }
    }

    /// Coefficients of ∏_{k=1}^{N} 1/(1 − B(k−1) x^k).
    pub fn euler_product(n_max: usize) -> Self {
        Self {
            method: BMethod::EulerProduct,
            values: b_euler_product(n_max).into_coeffs(),
        }
    }
}

/// The truncated product ∏_{k=1}^{N} 1/(1 − B(k−1) x^k). Factor k only
/// touches degrees ≥ k, so B(k−1) is already final when factor k is applied.
pub fn b_euler_product(n_max: usize) -> CoeffSeries {
    let mut series = CoeffSeries::one(n_max);
    for k in 1..=n_max {
        let weight = series.coeff(k - 1).clone();
        series = series
            .mul_geometric(&weight, k)
            .expect("k >= 1 and degrees match");
    }
    series
}

pub fn b_partition_sum(n: usize) -> BigInt {
    BSequence::partition_sum(n).values.swap_remove(n)
}

pub fn b_via_p2_sum(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::out_of_range("n", n, "n >= 1"));
    }
    Ok(CountTriangle::p2_paper(n).row_sum(n))
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::out_of_range("n", n, "n >= 1"));
    }
    if k == 0 {
        return Err(Error::out_of_range("k", k, "k >= 1"));
    }
    Ok(())
}

pub fn p1_standard(n: usize, k: usize) -> Result<BigInt> {
    check_nk(n, k)?;
    Ok(CountTriangle::p1_standard(n).get(n, k))
}

pub fn p1_paper(n: usize, k: usize) -> Result<BigInt> {
    check_nk(n, k)?;
    Ok(CountTriangle::p1_paper(n).get(n, k))
}

pub fn p2_paper(n: usize, k: usize) -> Result<BigInt> {
    check_nk(n, k)?;
    Ok(CountTriangle::p2_paper(n).get(n, k))
}

pub fn p2_direct(n: usize, k: usize) -> Result<BigInt> {
    check_nk(n, k)?;
    let b = BSequence::partition_sum(n);
    Ok(CountTriangle::p2_direct(n, b.values())?.get(n, k))
}
