//! Leading-order asymptotic laws and trend checks against exact finite-size values.
//!
//! Periodic fluctuations are left out of every evaluator; the trend check
//! only asks that the relative deviation keeps shrinking along a ladder.

use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gfpaths::{
    amplitude_horiz_total, amplitude_total_series, kemp_peak_series, kemp_valley_series, motzkin_height_total,
    skew_red_derivative,
};
use crate::gftrees::{
    horton_average, marked_height_average, marked_leaf_average, retakh_height_average, retakh_leaf_average,
    unary_binary_count,
};
use crate::numkernel::{rat, to_f64, ExactRational};
use crate::series::{AlgebraicSubstitution, QSeries, Var};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawKind {
    HortonAvg,
    NodeCountGrowth,
    MarkedLeaves,
    MarkedHeight,
    RedEdges,
    RetakhHeight,
    RetakhLeaves,
    MotzkinHeight,
    AmplitudeAvg,
    AmplitudeSplit,
    KempValley,
    KempGap,
}

impl LawKind {
    pub const ALL: [LawKind; 12] = [
        LawKind::HortonAvg,
        LawKind::NodeCountGrowth,
        LawKind::MarkedLeaves,
        LawKind::MarkedHeight,
        LawKind::RedEdges,
        LawKind::RetakhHeight,
        LawKind::RetakhLeaves,
        LawKind::MotzkinHeight,
        LawKind::AmplitudeAvg,
        LawKind::AmplitudeSplit,
        LawKind::KempValley,
        LawKind::KempGap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawKind::HortonAvg => "horton_avg",
            LawKind::NodeCountGrowth => "node_count_growth",
            LawKind::MarkedLeaves => "marked_leaves",
            LawKind::MarkedHeight => "marked_height",
            LawKind::RedEdges => "red_edges",
            LawKind::RetakhHeight => "retakh_height",
            LawKind::RetakhLeaves => "retakh_leaves",
            LawKind::MotzkinHeight => "motzkin_height",
            LawKind::AmplitudeAvg => "amplitude_avg",
            LawKind::AmplitudeSplit => "amplitude_split",
            LawKind::KempValley => "kemp_valley",
            LawKind::KempGap => "kemp_gap",
        }
    }
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        LawKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::Usage(format!("unknown asymptotic law '{s}'")))
    }
}

/// A law together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticLaw {
    pub kind: LawKind,
    /// Unary weight for the tree laws (`A = 4 + a`).
    pub a: i64,
}

impl AsymptoticLaw {
    pub fn new(kind: LawKind) -> Self {
        Self { kind, a: 0 }
    }

    pub fn with_a(kind: LawKind, a: i64) -> Self {
        Self { kind, a }
    }

    pub fn eval(&self, n: f64) -> Result<f64> {
        eval_law(self.kind, self.a, n)
    }
}

/// Value of the leading-order expression at size `n` (or turn index `m` for the Kemp laws).
pub fn eval_law(kind: LawKind, a: i64, n: f64) -> Result<f64> {
    if !(n >= 1.0) {
        return Err(Error::Domain(format!("{kind} needs n >= 1, got {n}")));
    }
    let big_a = (4 + a) as f64;
    let v = match kind {
        LawKind::HortonAvg => {
            n.ln() / (4f64).ln() - EULER_GAMMA / (2.0 * LN_2) - 1.0 / LN_2 + 1.5 + PI.ln() / LN_2
                - big_a.ln() / (2.0 * LN_2)
        }
        LawKind::NodeCountGrowth => big_a.powf(n + 0.5) / (2.0 * PI.sqrt() * n.powf(1.5)),
        LawKind::MarkedLeaves => n / 10.0,
        LawKind::MarkedHeight => 2.0 / 5f64.sqrt() * (PI * n).sqrt(),
        LawKind::RedEdges => n / 5.0,
        LawKind::RetakhHeight | LawKind::AmplitudeAvg => 2.0 * (PI * n / 3.0).sqrt(),
        LawKind::RetakhLeaves => 4.0 * n / 9.0,
        LawKind::MotzkinHeight => (PI * n / 3.0).sqrt(),
        LawKind::AmplitudeSplit => 0.5,
        LawKind::KempValley => {
            4.0 * 2f64.sqrt() * (n / PI).sqrt() - 2.0 + 5.0 * 2f64.sqrt() / (8.0 * (PI * n).sqrt())
        }
        LawKind::KempGap => 2.0 - 2f64.sqrt() / (PI * n).sqrt(),
    };
    Ok(v)
}

/// Exact finite-size values the law describes, one per entry of `ladder`.
///
/// Horton averages are over weighted unary-binary trees, Motzkin and amplitude
/// statistics over paths of length `n`, red edges over skew paths of length `2n`,
/// tree statistics over trees with `n` nodes, Kemp laws at turn index `m = n`.
pub fn exact_values(law: &AsymptoticLaw, ladder: &[usize]) -> Result<Vec<(usize, ExactRational)>> {
    let top = ladder.iter().copied().max().unwrap_or(0);
    if ladder.iter().any(|&n| n == 0) {
        return Err(Error::Domain("ladder sizes must be positive".into()));
    }
    let ratio_at = |num: &QSeries, den: &QSeries| -> Vec<(usize, ExactRational)> {
        ladder.iter().map(|&n| (n, num.coeff(n) / den.coeff(n))).collect()
    };
    let out = match law.kind {
        LawKind::HortonAvg => ladder.iter().map(|&n| (n, horton_average(n, law.a))).collect(),
        LawKind::NodeCountGrowth => ladder.iter().map(|&n| (n, rat(unary_binary_count(n, law.a)))).collect(),
        LawKind::MarkedLeaves => ladder.iter().map(|&n| (n, marked_leaf_average(n))).collect(),
        LawKind::MarkedHeight => ladder.iter().map(|&n| (n, marked_height_average(n))).collect(),
        LawKind::RedEdges => {
            let count = AlgebraicSubstitution::skew()
                .eval_in_v(&QSeries::from_ints(Var::V, top, &[1, 1]), top)?;
            ratio_at(&skew_red_derivative(top), &count)
        }
        LawKind::RetakhHeight => ladder.iter().map(|&n| (n, retakh_height_average(n))).collect(),
        LawKind::RetakhLeaves => ladder.iter().map(|&n| (n, retakh_leaf_average(n))).collect(),
        LawKind::MotzkinHeight => ratio_at(&motzkin_height_total(top), &motzkin_count(top)?),
        LawKind::AmplitudeAvg => ratio_at(&amplitude_total_series(top), &motzkin_count(top)?),
        LawKind::AmplitudeSplit => ratio_at(&amplitude_horiz_total(top), &motzkin_count(top)?),
        LawKind::KempValley => {
            let s = kemp_valley_series(top);
            ladder.iter().map(|&m| (m, s.coeff(m).clone())).collect()
        }
        LawKind::KempGap => {
            let s = &kemp_peak_series(top) - &kemp_valley_series(top);
            ladder.iter().map(|&m| (m, s.coeff(m).clone())).collect()
        }
    };
    Ok(out)
}

fn motzkin_count(order: usize) -> Result<QSeries> {
    AlgebraicSubstitution::motzkin().eval_in_v(&QSeries::from_ints(Var::V, order, &[1, 1, 1]), order)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrendRow {
    pub n: usize,
    pub exact: f64,
    pub asymptotic: f64,
    pub rel_dev: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrendReport {
    pub law: LawKind,
    pub rows: Vec<TrendRow>,
    /// Each deviation after the first is at most `(1 + slack)` times its predecessor.
    pub decreasing: bool,
}

impl TrendReport {
    /// CSV with header `n,exact,asymptotic,rel_dev`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,exact,asymptotic,rel_dev\n");
        for r in &self.rows {
            out.push_str(&format!("{},{:.10},{:.10},{:.6e}\n", r.n, r.exact, r.asymptotic, r.rel_dev));
        }
        out
    }

    pub fn last_deviation(&self) -> Option<f64> {
        self.rows.last().map(|r| r.rel_dev)
    }
}

/// Compares exact values against the law; `slack` is the allowed growth of the deviation per step.
pub fn trend_check(law: &AsymptoticLaw, exact: &[(usize, ExactRational)], slack: f64) -> Result<TrendReport> {
    let mut rows = Vec::with_capacity(exact.len());
    for (n, e) in exact {
        let ex = to_f64(e);
        let asym = law.eval(*n as f64)?;
        rows.push(TrendRow { n: *n, exact: ex, asymptotic: asym, rel_dev: (ex / asym - 1.0).abs() });
    }
    let decreasing = rows.windows(2).all(|w| w[1].rel_dev <= w[0].rel_dev * (1.0 + slack));
    Ok(TrendReport { law: law.kind, rows, decreasing })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn evaluator_examples() {
        assert!(close(eval_law(LawKind::MarkedLeaves, 0, 1000.0).unwrap(), 100.0, 1e-12));
        assert_eq!(eval_law(LawKind::AmplitudeSplit, 0, 17.0).unwrap(), 0.5);
        let gap = eval_law(LawKind::KempGap, 0, 8.0).unwrap();
        assert!(close(gap, 2.0 - 2f64.sqrt() / (8.0 * PI).sqrt(), 1e-12));
        assert!(close(gap, 1.7179, 1e-4));
        assert!(eval_law(LawKind::RedEdges, 0, 0.0).is_err());
        assert!("no_such_law".parse::<LawKind>().is_err());
        for k in LawKind::ALL {
            assert_eq!(k.name().parse::<LawKind>().unwrap(), k);
        }
    }

    #[test]
    fn node_count_growth_ratio() {
        // exact/asymptotic -> 1 like 1 + O(1/n)
        let law = AsymptoticLaw::with_a(LawKind::NodeCountGrowth, 1);
        let ex = exact_values(&law, &[50, 100, 200]).unwrap();
        let rep = trend_check(&law, &ex, 0.0).unwrap();
        assert!(rep.decreasing);
        assert!(rep.last_deviation().unwrap() < 0.02);
    }

    #[test]
    fn red_edges_trend() {
        let law = AsymptoticLaw::new(LawKind::RedEdges);
        let ex = exact_values(&law, &[50, 100, 200]).unwrap();
        let rep = trend_check(&law, &ex, 0.2).unwrap();
        assert!(rep.decreasing, "{}", rep.to_csv());
        assert!(rep.to_csv().starts_with("n,exact,asymptotic,rel_dev\n50,"));
    }

    #[test]
    fn amplitude_trend() {
        let law = AsymptoticLaw::new(LawKind::AmplitudeAvg);
        let ex = exact_values(&law, &[40, 80, 160]).unwrap();
        let rep = trend_check(&law, &ex, 0.2).unwrap();
        assert!(rep.decreasing, "{}", rep.to_csv());
    }

    #[test]
    fn small_ladders_for_every_law() {
        for kind in LawKind::ALL {
            let law = AsymptoticLaw::with_a(kind, 1);
            let ex = exact_values(&law, &[8, 16, 32]).unwrap();
            let rep = trend_check(&law, &ex, 0.2).unwrap();
            assert_eq!(rep.rows.len(), 3);
            assert!(rep.rows.iter().all(|r| r.exact.is_finite() && r.asymptotic.is_finite()), "{kind}");
        }
    }
}
