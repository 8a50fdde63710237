//! The normalized central binomial coefficient
//! `f(n) = ∏_{i=1}^{n} (1 - 1/(2i)) = C(2n, n) / 4^n`, its exact partial-sum
//! identities, and certified two-sided bounds in terms of π.
//!
//! Two envelopes squeeze `2/π`: `l_n = 2n·f(n)²` increases and
//! `u_n = (2n+1)·f(n)²` decreases. Comparing π against `2/u_n` and `2/l_n`
//! decides `1/√(nπ + π/2) < f(n) < 1/√(nπ)` without any square roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactcore::{central_binomial, int, pi_enclosure, ratio, Rational, RationalInterval};

pub const DEFAULT_START_BITS: u32 = 256;
pub const DEFAULT_CAP_BITS: u32 = 4096;

/// Exact accumulators at index `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallisState {
    n: u64,
    f: Rational,
    sum_sq: Rational,
    sum_lin: Rational,
    sum_tel: Rational,
    // (2n)!! and (2n+1)!!, for the corollary summand check
    even_df: BigInt,
    odd_df: BigInt,
}

impl WallisState {
    /// State at `n = 1`.
    pub fn first() -> Self {
        Self {
            n: 1,
            f: ratio(1, 2),
            sum_sq: ratio(1, 4),
            sum_lin: ratio(1, 2),
            sum_tel: ratio(1, 3),
            even_df: BigInt::from(2),
            odd_df: BigInt::from(3),
        }
    }

    pub fn at(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::out_of_range("n", n, "n >= 1"));
        }
        let mut state = Self::first();
        while state.n < n {
            state = state.advance();
        }
        Ok(state)
    }

    /// Successive states `n = 1, 2, 3, ...`.
    pub fn iter() -> impl Iterator<Item = WallisState> {
        std::iter::successors(Some(Self::first()), |s| Some(s.advance()))
    }

    /// Moves to `n + 1` using `f(n+1) = f(n)·(2n+1)/(2n+2)`.
    pub fn advance(&self) -> Self {
        let n = self.n;
        let k = n + 1;
        let f = &self.f * ratio(2 * n + 1, 2 * n + 2);
        let odd = int(2 * k - 1);
        Self {
            n: k,
            sum_sq: &self.sum_sq + &f * &f / &odd,
            sum_lin: &self.sum_lin + &f / &odd,
            sum_tel: &self.sum_tel + ratio(1, 4 * k * k - 1),
            even_df: &self.even_df * (2 * k),
            odd_df: &self.odd_df * (2 * k + 1),
            f,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn f(&self) -> &Rational {
        &self.f
    }

    /// Σ_{k≤n} f(k)² / (2k − 1)
    pub fn sum_sq(&self) -> &Rational {
        &self.sum_sq
    }

    /// Σ_{k≤n} f(k) / (2k − 1)
    pub fn sum_lin(&self) -> &Rational {
        &self.sum_lin
    }

    /// Σ_{k≤n} 1 / (4k² − 1)
    pub fn sum_tel(&self) -> &Rational {
        &self.sum_tel
    }

    /// `(l_n, u_n) = (2n·f², (2n+1)·f²)`.
    pub fn envelopes(&self) -> (Rational, Rational) {
        let sq = &self.f * &self.f;
        (&sq * int(2 * self.n), sq * int(2 * self.n + 1))
    }

    /// `1 − Σ f(k)²/(2k−1) = (2n+1)·f(n)²`
    pub fn identity_holds(&self) -> bool {
        Rational::one() - &self.sum_sq == self.envelopes().1
    }

    /// `Σ f(k)/(2k−1) = 1 − f(n)`
    pub fn linear_sum_holds(&self) -> bool {
        self.sum_lin == Rational::one() - &self.f
    }

    /// `Σ 1/(4k²−1) = n/(2n+1)`
    pub fn quarter_sum_holds(&self) -> bool {
        self.sum_tel == ratio(self.n, 2 * self.n + 1)
    }

    /// `f(n)·(2n)!! / ((2n−1)·(2n+1)!!) = 1/(4n²−1)`, cross-multiplied.
    pub fn quarter_summand_holds(&self) -> bool {
        let n = self.n;
        let lhs = self.f.numer() * &self.even_df * BigInt::from(4 * n * n - 1);
        let rhs = self.f.denom() * BigInt::from(2 * n - 1) * &self.odd_df;
        lhs == rhs
    }
}

/// f(n) computed directly as `C(2n, n) / 4^n`.
pub fn f_via_binomial(n: u64) -> Rational {
    Rational::new(central_binomial(n), BigInt::one() << (2 * n))
}

/// `(l_n, u_n)` at `n ≥ 1`.
pub fn envelopes(n: u64) -> Result<(Rational, Rational)> {
    if n == 0 {
        return Err(Error::out_of_range("n", n, "n >= 1"));
    }
    let f = f_via_binomial(n);
    let sq = &f * &f;
    Ok((&sq * int(2 * n), sq * int(2 * n + 1)))
}

pub fn identity_check(n: u64) -> Result<bool> {
    Ok(WallisState::at(n)?.identity_holds())
}

pub fn linear_sum_check(n: u64) -> Result<bool> {
    Ok(WallisState::at(n)?.linear_sum_holds())
}

/// Checks the telescoped closed form of Σ 1/(4k²−1) and its summand identity
/// for every `k ≤ n`.
pub fn telescope_quarter_check(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::out_of_range("n", n, "n >= 1"));
    }
    let mut ok = true;
    for state in WallisState::iter().take(n as usize) {
        ok &= state.quarter_summand_holds();
        if state.n() == n {
            ok &= state.quarter_sum_holds();
        }
    }
    Ok(ok)
}

/// Gap between the limit 1/2 and the partial sum Σ_{k≤n} 1/(4k²−1).
pub fn quarter_sum_gap(n: u64) -> Rational {
    ratio(1, 2 * (2 * n + 1))
}

/// Certified enclosure of 2/π.
pub fn two_over_pi(bits: u32) -> Result<RationalInterval> {
    Ok(pi_enclosure(bits)?.recip()?.scale(&int(2)))
}

/// True when the certified 2/π enclosure lies strictly inside `(l_n, u_n)`.
pub fn envelope_encloses_limit(n: u64, bits: u32) -> Result<bool> {
    let (l, u) = envelopes(n)?;
    let limit = two_over_pi(bits)?;
    Ok(&l < limit.lo() && limit.hi() < &u)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyConfig {
    pub start_bits: u32,
    pub cap_bits: u32,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        Self {
            start_bits: DEFAULT_START_BITS,
            cap_bits: DEFAULT_CAP_BITS,
        }
    }
}

/// Verdict on `1/√(nπ+π/2) < f(n) < 1/√(nπ)` at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertResult {
    pub n: u64,
    /// `π > 2/u_n`
    pub lower: Verdict,
    /// `π < 2/l_n`
    pub upper: Verdict,
    pub bits_used: u32,
    /// Dyadic lower bound on `min(π − 2/u_n, 2/l_n − π)`, taken against the
    /// final enclosure. Positive exactly when both sides are proved.
    pub margin: Rational,
}

impl CertResult {
    pub fn lower_holds(&self) -> bool {
        self.lower == Verdict::Holds
    }

    pub fn upper_holds(&self) -> bool {
        self.upper == Verdict::Holds
    }

    pub fn is_proof(&self) -> bool {
        self.lower_holds() && self.upper_holds()
    }

    pub fn is_inconclusive(&self) -> bool {
        self.lower == Verdict::Inconclusive || self.upper == Verdict::Inconclusive
    }
}

pub fn certify_inequality(n: u64, bits: u32) -> Result<CertResult> {
    certify_with(
        n,
        CertifyConfig {
            start_bits: bits,
            ..CertifyConfig::default()
        },
    )
}

pub fn certify_with(n: u64, config: CertifyConfig) -> Result<CertResult> {
    if n == 0 {
        return Err(Error::out_of_range("n", n, "n >= 1"));
    }
    certify_from_central(n, &central_binomial(n), config)
}

/// Certifies every `1 ≤ n ≤ n_max`, carrying C(2n, n) forward incrementally.
pub fn certify_sweep(n_max: u64, config: CertifyConfig) -> Result<Vec<CertResult>> {
    let mut central = BigInt::one();
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        // C(2n, n) = C(2n−2, n−1) · 2(2n−1) / n
        central = central * (2 * (2 * n - 1)) / n;
        out.push(certify_from_central(n, &central, config)?);
    }
    Ok(out)
}

/// `f(n)² = c² / 2^(4n)` with `c = C(2n, n)`. Everything reduces to integer
/// comparisons against the π enclosure.
fn certify_from_central(n: u64, central: &BigInt, config: CertifyConfig) -> Result<CertResult> {
    if config.start_bits > config.cap_bits {
        return Err(Error::Usage(format!(
            "start precision {} exceeds cap {}",
            config.start_bits, config.cap_bits
        )));
    }
    let c_sq = central * central;
    // lower: π > 2^(4n+1) / ((2n+1) c²)
    let lower_den = &c_sq * (2 * n + 1);
    let lower_num = BigInt::one() << (4 * n + 1);
    // upper: π < 2^(4n) / (n c²)
    let upper_den = &c_sq * n;
    let upper_num = BigInt::one() << (4 * n);

    let mut bits = config.start_bits;
    loop {
        let pi = pi_enclosure(bits)?;
        let lower = decide_above(&pi, &lower_num, &lower_den);
        let upper = decide_below(&pi, &upper_num, &upper_den);
        let undecided = lower == Verdict::Inconclusive || upper == Verdict::Inconclusive;
        if !undecided || bits >= config.cap_bits {
            let lower_gap = gap_floor(
                &(pi.lo().numer() * &lower_den - &lower_num * pi.lo().denom()),
                &(pi.lo().denom() * &lower_den),
                bits,
            );
            let upper_gap = gap_floor(
                &(&upper_num * pi.hi().denom() - pi.hi().numer() * &upper_den),
                &(pi.hi().denom() * &upper_den),
                bits,
            );
            return Ok(CertResult {
                n,
                lower,
                upper,
                bits_used: bits,
                margin: lower_gap.min(upper_gap),
            });
        }
        bits = bits.saturating_mul(2).min(config.cap_bits);
    }
}

/// Is π > num/den?
fn decide_above(pi: &RationalInterval, num: &BigInt, den: &BigInt) -> Verdict {
    if pi.lo().numer() * den > num * pi.lo().denom() {
        Verdict::Holds
    } else if pi.hi().numer() * den <= num * pi.hi().denom() {
        Verdict::Fails
    } else {
        Verdict::Inconclusive
    }
}

/// Is π < num/den?
fn decide_below(pi: &RationalInterval, num: &BigInt, den: &BigInt) -> Verdict {
    if pi.hi().numer() * den < num * pi.hi().denom() {
        Verdict::Holds
    } else if pi.lo().numer() * den >= num * pi.lo().denom() {
        Verdict::Fails
    } else {
        Verdict::Inconclusive
    }
}

/// `floor(num/den · 2^g) / 2^g` with `g = bits + 8`.
fn gap_floor(num: &BigInt, den: &BigInt, bits: u32) -> Rational {
    let g = bits + 8;
    let scaled = (num << g).div_floor(den);
    if scaled.is_zero() {
        return Rational::zero();
    }
    Rational::new(scaled, BigInt::one() << g)
}
