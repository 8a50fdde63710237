use num_bigint::BigInt;
use num_traits::One;

use super::forest::{forest_counts, MAX_ORACLE_NODES};
use super::triangle::BSequence;
use crate::error::{Error, Result};
use crate::exactcore::{catalan, int, pi_enclosure, Rational, RationalInterval};
use crate::wallis::{CertifyConfig, Verdict};

/// Two-sided bounds on B(n) at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: u64,
    pub b: BigInt,
    pub power_lower: BigInt,
    pub catalan: BigInt,
    /// 2^(n−1) ≤ B(n)
    pub lower_holds: bool,
    /// B(n) ≤ Catalan(n)
    pub catalan_holds: bool,
    pub catalan_strict: bool,
    /// B(n) < 2^(2n) / ((n+1)·√(nπ))
    pub sandwich: Verdict,
    pub bits_used: u32,
    /// Enclosure of 2^(2n) / ((n+1)·√(nπ)).
    pub sandwich_bound: RationalInterval,
}

impl BoundsReport {
    /// Everything the bounds claim, with Catalan strictness required only
    /// from n = 3 on.
    pub fn all_hold(&self) -> bool {
        self.lower_holds
            && self.catalan_holds
            && (self.n < 3 || self.catalan_strict)
            && self.sandwich == Verdict::Holds
    }
}

pub fn bounds_report(n: u64, bits: u32) -> Result<BoundsReport> {
    let b = BSequence::partition_sum(n as usize).get(n as usize).clone();
    bounds_with(
        n,
        &b,
        CertifyConfig {
            start_bits: bits,
            ..CertifyConfig::default()
        },
    )
}

/// Bounds for a given value `b = B(n)`.
pub fn bounds_with(n: u64, b: &BigInt, config: CertifyConfig) -> Result<BoundsReport> {
    if n == 0 {
        return Err(Error::out_of_range("n", n, "n >= 1"));
    }
    if config.start_bits > config.cap_bits {
        return Err(Error::Usage(format!(
            "start precision {} exceeds cap {}",
            config.start_bits, config.cap_bits
        )));
    }
    let power_lower = BigInt::one() << (n - 1);
    let cat = catalan(n);

    // B < 2^(2n)/((n+1)√(nπ))  <=>  B²·(n+1)²·n·π < 2^(4n)
    let scaled = b * b * BigInt::from((n + 1) * (n + 1) * n);
    let target = BigInt::one() << (4 * n);
    let mut bits = config.start_bits;
    let (sandwich, pi) = loop {
        let pi = pi_enclosure(bits)?;
        let verdict = if &scaled * pi.hi().numer() < &target * pi.hi().denom() {
            Verdict::Holds
        } else if &scaled * pi.lo().numer() >= &target * pi.lo().denom() {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        };
        if verdict != Verdict::Inconclusive || bits >= config.cap_bits {
            break (verdict, pi);
        }
        bits = bits.saturating_mul(2).min(config.cap_bits);
    };

    let sqrt_n_pi = pi.scale(&int(n)).sqrt(bits)?;
    let coefficient = Rational::new(BigInt::one() << (2 * n), BigInt::from(n + 1));
    let sandwich_bound = sqrt_n_pi.recip()?.scale(&coefficient);

    Ok(BoundsReport {
        n,
        b: b.clone(),
        lower_holds: power_lower <= *b,
        catalan_holds: *b <= cat,
        catalan_strict: *b < cat,
        power_lower,
        catalan: cat,
        sandwich,
        bits_used: bits,
        sandwich_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyRow {
    pub n: u64,
    /// Partition-product count.
    pub paper: BigInt,
    /// Exhaustive forest count.
    pub oracle: BigInt,
}

impl DiscrepancyRow {
    pub fn equal(&self) -> bool {
        self.paper == self.oracle
    }
}

/// Partition-product B(n) against the forest oracle for `n ≤ n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub rows: Vec<DiscrepancyRow>,
}

impl DiscrepancyReport {
    pub fn first_divergence(&self) -> Option<&DiscrepancyRow> {
        self.rows.iter().find(|r| !r.equal())
    }

    /// The product rule never undercounts: its count is at least the oracle on every row.
    pub fn paper_dominates(&self) -> bool {
        self.rows.iter().all(|r| r.paper >= r.oracle)
    }

    pub fn summary(&self) -> String {
        match self.first_divergence() {
            None => format!(
                "partition-product count equals the forest oracle for all n <= {}",
                self.rows.len() - 1
            ),
            Some(row) => format!(
                "first divergence at n={}: paper={} oracle={}; the product rule counts ordered \
                 choices of distinct contents for equal-size parts",
                row.n, row.paper, row.oracle
            ),
        }
    }
}

pub fn discrepancy_report(n_max: usize) -> Result<DiscrepancyReport> {
    if n_max > MAX_ORACLE_NODES {
        return Err(Error::out_of_range("n_max", n_max, "n_max <= 16"));
    }
    let paper = BSequence::partition_sum(n_max);
    let oracle = forest_counts(n_max)?;
    let rows = oracle
        .into_iter()
        .enumerate()
        .map(|(n, count)| DiscrepancyRow {
            n: n as u64,
            paper: paper.get(n).clone(),
            oracle: BigInt::from(count),
        })
        .collect();
    Ok(DiscrepancyReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::ratio;

    #[test]
    fn n5_sits_between_16_and_42() {
        let r = bounds_report(5, 64).unwrap();
        assert_eq!(r.b, BigInt::from(20));
        assert_eq!(r.power_lower, BigInt::from(16));
        assert_eq!(r.catalan, BigInt::from(42));
        assert!(r.all_hold());
    }

    #[test]
    fn n2_meets_catalan_with_equality() {
        let r = bounds_report(2, 64).unwrap();
        assert_eq!(r.b, BigInt::from(2));
        assert_eq!(r.catalan, BigInt::from(2));
        assert!(r.catalan_holds && !r.catalan_strict);
        assert!(r.all_hold());
    }

    #[test]
    fn n1_sandwich_bound_is_about_1_128() {
        let r = bounds_report(1, 64).unwrap();
        assert_eq!(r.sandwich, Verdict::Holds);
        // 2^2/(2√π) = 1.12837...
        assert!(r.sandwich_bound.lo() > &ratio(1128, 1000));
        assert!(r.sandwich_bound.hi() < &ratio(1129, 1000));
        assert!(r.sandwich_bound.lo() > &int(1));
    }

    #[test]
    fn sandwich_can_fail_and_be_inconclusive() {
        let cfg = CertifyConfig::default();
        // 2^(2n)/((n+1)√(nπ)) at n = 3 is about 5.2; B = 6 exceeds it
        let r = bounds_with(3, &BigInt::from(6), cfg).unwrap();
        assert_eq!(r.sandwich, Verdict::Fails);
        assert!(bounds_with(0, &BigInt::from(1), cfg).is_err());
    }

    #[test]
    fn bounds_hold_to_40() {
        let b = BSequence::partition_sum(40);
        for n in 1..=40u64 {
            let r = bounds_with(n, b.get(n as usize), CertifyConfig::default()).unwrap();
            assert!(r.lower_holds && r.catalan_holds, "n={n}");
            assert_eq!(r.catalan_strict, n >= 3, "n={n}");
        }
        for n in 1..=20u64 {
            let r = bounds_with(n, b.get(n as usize), CertifyConfig::default()).unwrap();
            assert_eq!(r.sandwich, Verdict::Holds, "n={n}");
        }
    }

    #[test]
    fn discrepancy_examples() {
        let five = discrepancy_report(5).unwrap();
        assert!(five.first_divergence().is_none());
        assert_eq!(five.rows.len(), 6);
        let six = discrepancy_report(6).unwrap();
        let first = six.first_divergence().unwrap();
        assert_eq!(
            (first.n, first.paper.clone(), first.oracle.clone()),
            (6, BigInt::from(49), BigInt::from(48))
        );
        assert!(six.summary().contains("paper=49 oracle=48"));
        let zero = discrepancy_report(0).unwrap();
        assert_eq!(zero.rows.len(), 1);
        assert!(zero.rows[0].equal());
        assert!(discrepancy_report(17).is_err());
    }

    #[test]
    fn product_count_dominates_oracle() {
        let report = discrepancy_report(10).unwrap();
        assert!(report.paper_dominates());
    }
}
