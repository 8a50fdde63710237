use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::report::{Report, Row, Status};
use crate::circles::{
    bounds_with, discrepancy_report, partition_count_oracle, partition_counts, partitions,
    BSequence, CountTriangle,
};
use crate::error::Result;
use crate::exactcore::{
    binomial, catalan, central_binomial, factorial, falling_factorial, fmt_rational, int,
    pi_enclosure, ratio, stirling2, stirling2_row, CoeffSeries, Rational, RationalInterval,
};
use crate::finitediff::{
    a_closed, a_diagonal_is_factorial, a_recursion, power_diff_constant, surjections,
    surjections_via_stirling, MAX_POWER,
};
use crate::series::{
    alternating_sum_closed, m_by_reflection, m_closed, m_direct, plain_power_sum, plain_sum_closed,
    power_sum_both_sides, putnam_value, s_closed, s_direct, stirling_power_sum,
    telescope_closed_form, telescope_limit, telescope_product_series, telescope_summand_holds,
    PowerSumParams, SeriesParams,
};
use crate::wallis::{certify_sweep, two_over_pi, CertifyConfig, Verdict, WallisState};

/// Values built from f(n) have about 4n bits; rows echo them only up to here.
pub const EXACT_ECHO_MAX_N: u64 = 64;

pub const SERIES_N_MAX: u64 = 10;
pub const SERIES_R_MAX: u32 = 6;
pub const RECIPROCAL_SUM_N_MAX: u64 = 20;
pub const TELESCOPE_MN_MAX: u64 = 8;
pub const TELESCOPE_UPPER: u32 = 50;
pub const POWER_SUM_MAX: u64 = 8;
pub const SURJECTION_MAX: u64 = 10;
pub const A_TABLE_MAX: u64 = 10;
pub const P1_ENUMERATION_MAX: usize = 20;

const QUARTER_SUM_NOTE: &str = "the sum of 1/(4k^2-1) over k >= 1 is sometimes given as pi/2; \
     the exact partial sums are n/(2n+1), so the series converges to 1/2";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n_max: u64,
    pub certify: CertifyConfig,
    pub forest_max: u64,
}

fn verdict_status(v: Verdict) -> Status {
    match v {
        Verdict::Holds => Status::Pass,
        Verdict::Fails => Status::Fail,
        Verdict::Inconclusive => Status::Inconclusive,
    }
}

pub fn bounds(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    let certs = certify_sweep(cfg.n_max, cfg.certify)?;
    let limit = two_over_pi(cfg.certify.start_bits)?;
    let states = WallisState::iter().take(cfg.n_max as usize);
    for (state, cert) in states.zip(&certs) {
        let n = state.n();
        let echo = n <= EXACT_ECHO_MAX_N;
        let status = if cert.is_proof() {
            Status::Pass
        } else if cert.is_inconclusive() {
            Status::Inconclusive
        } else {
            Status::Fail
        };
        report.push(
            Row::new("inequality", status)
                .input("n", n)
                .output("lower", cert.lower.as_str())
                .output("upper", cert.upper.as_str())
                .output("bits", cert.bits_used)
                .output("margin", fmt_rational(&cert.margin)),
        );

        let mut row = Row::new("identity", Status::from_bool(state.identity_holds())).input("n", n);
        if echo {
            row = row.output("rhs", fmt_rational(&state.envelopes().1));
        }
        report.push(row);

        let mut row =
            Row::new("linear-sum", Status::from_bool(state.linear_sum_holds())).input("n", n);
        if echo {
            row = row.output("sum", fmt_rational(state.sum_lin()));
        }
        report.push(row);

        let quarter_ok = state.quarter_sum_holds() && state.quarter_summand_holds();
        report.push(
            Row::new("quarter-sum", Status::from_bool(quarter_ok))
                .input("n", n)
                .output("sum", fmt_rational(state.sum_tel()))
                .output(
                    "gap-to-half",
                    fmt_rational(&(ratio(1, 2) - state.sum_tel())),
                ),
        );

        let (l, u) = state.envelopes();
        let mut row = Row::new(
            "envelope",
            Status::from_bool(&l < limit.lo() && limit.hi() < &u),
        )
        .input("n", n)
        .input("bits", cfg.certify.start_bits);
        if echo {
            row = row
                .output("lower", fmt_rational(&l))
                .output("upper", fmt_rational(&u))
                .output("width", fmt_rational(&(state.f() * state.f())));
        }
        report.push(row);
    }
    report.notes.push(QUARTER_SUM_NOTE.into());
    Ok(())
}

pub fn circles(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    let n_max = cfg.n_max as usize;
    let by_partitions = BSequence::partition_sum(n_max);
    let by_p2 = BSequence::p2_sum(n_max);
    let by_euler = BSequence::euler_product(n_max);
    for n in 0..=n_max {
        let (a, b, c) = (by_partitions.get(n), by_p2.get(n), by_euler.get(n));
        report.push(
            Row::new("b-routes", Status::from_bool(a == b && b == c))
                .input("n", n)
                .output("partition-sum", a)
                .output("p2-sum", b)
                .output("euler-product", c),
        );
    }
    for (n, expected) in [1u32, 1, 2, 4, 9, 20]
        .into_iter()
        .enumerate()
        .take(n_max + 1)
    {
        let got = by_partitions.get(n);
        report.push(
            Row::new(
                "b-small-values",
                Status::from_bool(*got == BigInt::from(expected)),
            )
            .input("n", n)
            .output("b", got)
            .output("expected", expected),
        );
    }

    let p1_paper = CountTriangle::p1_paper(n_max);
    let p1_standard = CountTriangle::p1_standard(n_max);
    let p1_direct = CountTriangle::p1_direct(n_max.min(P1_ENUMERATION_MAX));
    for n in 1..=n_max {
        for k in 1..=n {
            let (paper, standard) = (p1_paper.get(n, k), p1_standard.get(n, k));
            let mut row = Row::new("p1", Status::Pass)
                .input("n", n)
                .input("k", k)
                .output("paper", &paper)
                .output("standard", &standard);
            let mut ok = paper == standard;
            if n <= P1_ENUMERATION_MAX {
                let direct = p1_direct.get(n, k);
                ok &= direct == standard;
                row = row.output("enumerated", direct);
            }
            row.status = Status::from_bool(ok);
            report.push(row);
        }
    }
    let pentagonal = partition_counts(n_max);
    for (n, p) in pentagonal.iter().enumerate() {
        let row_sum = p1_standard.row_sum(n);
        let mut ok = row_sum == *p;
        let mut row = Row::new("partition-count", Status::Pass)
            .input("n", n)
            .output("pentagonal", p)
            .output("p1-row-sum", &row_sum);
        if n <= P1_ENUMERATION_MAX {
            let enumerated = partitions(n as u32).count();
            let oracle = partition_count_oracle(n);
            ok &= BigInt::from(enumerated) == *p && oracle == *p;
            row = row
                .output("enumerated", enumerated)
                .output("oracle", oracle);
        }
        row.status = Status::from_bool(ok);
        report.push(row);
    }

    let p2_paper = CountTriangle::p2_paper(n_max);
    let p2_direct = CountTriangle::p2_direct(n_max, by_partitions.values())?;
    for n in 1..=n_max {
        for k in 1..=n {
            let (paper, direct) = (p2_paper.get(n, k), p2_direct.get(n, k));
            let mut ok = paper == direct;
            let mut row = Row::new("p2", Status::Pass)
                .input("n", n)
                .input("k", k)
                .output("paper", &paper)
                .output("direct", &direct);
            if 2 * k >= n {
                let product = by_partitions.get(n - k) * by_partitions.get(k - 1);
                ok &= product == direct;
                row = row.output("collapsed", product);
            }
            row.status = Status::from_bool(ok);
            report.push(row);
        }
    }
    for n in 2..=n_max {
        let half = BigInt::from(n / 2);
        let (a, b) = (p2_paper.get(n, 2), p1_standard.get(n, 2));
        report.push(
            Row::new("column-two", Status::from_bool(a == half && b == half))
                .input("n", n)
                .output("p2", a)
                .output("p1", b),
        );
        let (a, b) = (p2_paper.get(n, n - 1), p2_paper.get(n - 1, n - 1));
        report.push(
            Row::new("p2-shift", Status::from_bool(a == b))
                .input("n", n)
                .output("p2(n,n-1)", a)
                .output("p2(n-1,n-1)", b),
        );
    }

    for n in 1..=cfg.n_max {
        let r = bounds_with(n, by_partitions.get(n as usize), cfg.certify)?;
        let catalan_ok = r.catalan_holds && (n < 3 || r.catalan_strict);
        let status = if !(r.lower_holds && catalan_ok) {
            Status::Fail
        } else {
            verdict_status(r.sandwich)
        };
        report.push(
            Row::new("b-bounds", status)
                .input("n", n)
                .output("b", &r.b)
                .output("power-lower", &r.power_lower)
                .output("catalan", &r.catalan)
                .output("catalan-strict", r.catalan_strict)
                .output("sandwich", r.sandwich.as_str())
                .output("sandwich-bound", &r.sandwich_bound)
                .output("bits", r.bits_used),
        );
    }

    let forest_n = n_max.min(cfg.forest_max as usize);
    let disc = discrepancy_report(forest_n)?;
    for row in &disc.rows {
        let ok = if row.n <= 5 {
            row.equal()
        } else {
            row.paper >= row.oracle
        };
        let mut out = Row::new("forest-oracle", Status::from_bool(ok))
            .input("n", row.n)
            .output("paper", &row.paper)
            .output("oracle", &row.oracle);
        if !row.equal() {
            out = out.note(format!("paper={} oracle={}", row.paper, row.oracle));
        }
        report.push(out);
    }
    report.notes.push(disc.summary());
    Ok(())
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

pub fn series(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for n in 1..=cfg.n_max.min(SERIES_N_MAX) as u32 {
        for r in 1..=SERIES_R_MAX {
            for x in x_grid() {
                let p = SeriesParams::new(n, r, x)?;
                let s = s_direct(&p);
                let m = m_direct(&p);
                let ok = s == s_closed(&p) && m == m_closed(&p) && m == m_by_reflection(&p);
                report.push(
                    Row::new("binomial-series", Status::from_bool(ok))
                        .input("n", n)
                        .input("r", r)
                        .input("x", fmt_rational(p.x()))
                        .output("s", fmt_rational(&s))
                        .output("m", fmt_rational(&m)),
                );
            }
        }
    }
    for n in 1..=cfg.n_max.min(RECIPROCAL_SUM_N_MAX) as u32 {
        let plain = m_direct(&SeriesParams::new(n, 1, int(1))?);
        let alternating = s_direct(&SeriesParams::new(n, 1, int(1))?);
        let ok = plain == plain_sum_closed(n) && alternating == alternating_sum_closed(n);
        report.push(
            Row::new("reciprocal-sums", Status::from_bool(ok))
                .input("n", n)
                .output("plain", fmt_rational(&plain))
                .output("alternating", fmt_rational(&alternating)),
        );
    }
    let mn_max = cfg.n_max.min(TELESCOPE_MN_MAX) as u32;
    for m in 1..=mn_max {
        for n in 1..=mn_max {
            let limit = telescope_limit(m, n)?;
            let mut ok = telescope_summand_holds(n, m);
            let mut last = Rational::zero();
            for upper in m..=TELESCOPE_UPPER {
                let partial = telescope_product_series(m, n, upper)?;
                ok &= partial == telescope_closed_form(m, n, upper)? && partial < limit;
                last = partial;
            }
            report.push(
                Row::new("telescope", Status::from_bool(ok))
                    .input("m", m)
                    .input("n", n)
                    .input("upper", TELESCOPE_UPPER)
                    .output("partial", fmt_rational(&last))
                    .output("limit", fmt_rational(&limit)),
            );
        }
    }
    let values = [int(0), int(1), int(-1), ratio(1, 2), ratio(-3, 2), int(2)];
    let ms = [int(1), ratio(1, 3), int(2)];
    let nk_max = cfg.n_max.min(POWER_SUM_MAX) as u32;
    for n in 1..=nk_max {
        for k in 1..=nk_max {
            let mut ok = true;
            let mut points = 0usize;
            for a in &values {
                for b in &values {
                    for m in &ms {
                        let p = PowerSumParams::new(a.clone(), b.clone(), m.clone(), n, k)?;
                        let (lhs, rhs) = power_sum_both_sides(&p);
                        ok &= lhs == rhs;
                        points += 1;
                    }
                }
            }
            let plain = plain_power_sum(n, k);
            ok &= stirling_power_sum(n, k) == plain;
            report.push(
                Row::new("power-sum", Status::from_bool(ok))
                    .input("n", n)
                    .input("k", k)
                    .output("grid-points", points)
                    .output("sum", plain),
            );
        }
    }
    for n in 1..=cfg.n_max.min(RECIPROCAL_SUM_N_MAX) as u32 {
        let value = putnam_value(n);
        let ok = Rational::from_integer(plain_power_sum(n, 2)) == value;
        report.push(
            Row::new("putnam", Status::from_bool(ok))
                .input("n", n)
                .output("value", fmt_rational(&value)),
        );
    }
    Ok(())
}

pub fn diff(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for n in 1..=cfg.n_max.min(MAX_POWER as u64) as u32 {
        let c = power_diff_constant(n)?;
        let ok = c == factorial(n as u64) && a_diagonal_is_factorial(n)?;
        report.push(
            Row::new("power-difference", Status::from_bool(ok))
                .input("n", n)
                .output("constant", c),
        );
    }
    let sm = cfg.n_max.min(SURJECTION_MAX) as u32;
    for n in 0..=sm {
        for m in 0..=sm {
            let count = surjections(n, m);
            report.push(
                Row::new(
                    "surjections",
                    Status::from_bool(count == surjections_via_stirling(n, m)),
                )
                .input("n", n)
                .input("m", m)
                .output("count", count),
            );
        }
    }
    for n in 1..=cfg.n_max.min(A_TABLE_MAX) as u32 {
        for j in 1..=n {
            let a = a_recursion(n, j)?;
            report.push(
                Row::new("a-table", Status::from_bool(a == a_closed(n, j)))
                    .input("n", n)
                    .input("j", j)
                    .output("a", a),
            );
        }
    }
    Ok(())
}

/// Checks on the arithmetic layer itself, run by `verify-all`.
pub fn core(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    let mut prev = None;
    let mut bits = 8u32;
    while bits <= cfg.certify.start_bits.max(8) {
        let pi = pi_enclosure(bits)?;
        let narrow = pi.width() < Rational::new(BigInt::one(), BigInt::one() << bits);
        let nested = prev
            .as_ref()
            .is_none_or(|p: &RationalInterval| p.contains_interval(&pi));
        report.push(
            Row::new(
                "pi-enclosure",
                Status::from_bool(narrow && nested && pi.is_positive()),
            )
            .input("bits", bits)
            .output("enclosure", &pi),
        );
        prev = Some(pi);
        bits *= 2;
    }
    for n in 0..=cfg.n_max {
        let mut ok = (0..=n as i64).all(|k| {
            n == 0 || k == 0 || binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
        });
        ok &= binomial(n, -1).is_zero() && binomial(n, n as i64 + 1).is_zero();
        let central = central_binomial(n);
        let cat = catalan(n);
        ok &= central == binomial(2 * n, n as i64);
        ok &= central.div_rem(&BigInt::from(n + 1)) == (cat.clone(), BigInt::zero());
        ok &= falling_factorial(n, n) == factorial(n);
        report.push(
            Row::new("binomial", Status::from_bool(ok))
                .input("n", n)
                .output("central", central)
                .output("catalan", cat),
        );
    }
    for n in 0..=cfg.n_max {
        let row = stirling2_row(n);
        let mut ok = row
            .iter()
            .enumerate()
            .all(|(k, s)| *s == stirling2(n, k as u64));
        if n >= 1 {
            let prev = stirling2_row(n - 1);
            ok &= (1..=n as usize).all(|k| {
                let stay = prev.get(k).cloned().unwrap_or_default() * BigInt::from(k);
                row[k] == stay + &prev[k - 1]
            });
        }
        let bell: BigInt = row.iter().sum();
        report.push(
            Row::new("stirling2", Status::from_bool(ok))
                .input("n", n)
                .output("bell", bell),
        );
    }
    let degree = cfg.n_max as usize;
    let geometric = CoeffSeries::one(degree).mul_geometric(&BigInt::one(), 1)?;
    let mut one_minus_x = vec![BigInt::one()];
    if degree >= 1 {
        one_minus_x.push(-BigInt::one());
    }
    let product = geometric.mul(&CoeffSeries::from_coeffs(one_minus_x, degree))?;
    report.push(
        Row::new(
            "power-series",
            Status::from_bool(product == CoeffSeries::one(degree)),
        )
        .input("degree", degree)
        .output("geometric-times-one-minus-x", "1"),
    );
    Ok(())
}
