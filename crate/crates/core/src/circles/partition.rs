use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Nonincreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts the parts only if they are positive and nonincreasing.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        let valid = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        valid.then_some(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Every partition of `n` exactly once, in reverse-lexicographic order
/// (`[n]` first, all ones last).
pub fn partitions(n: u32) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

/// Next partition in reverse-lex order: lower the rightmost part above 1 by
/// one, then refill the freed amount greedily with parts no larger than it.
fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let value = parts[pivot] - 1;
    let mut rest: u32 = parts[pivot + 1..].iter().sum::<u32>() + 1;
    let mut out = parts[..pivot].to_vec();
    out.push(value);
    while rest > 0 {
        let take = rest.min(value);
        out.push(take);
        rest -= take;
    }
    Some(out)
}

/// p(0..=n_max) from Euler's pentagonal-number recurrence.
pub fn partition_counts(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n_max + 1];
    p[0] = BigInt::one();
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    p
}

/// p(n) via the pentagonal recurrence.
pub fn partition_count_oracle(n: usize) -> BigInt {
    partition_counts(n).swap_remove(n)
}
