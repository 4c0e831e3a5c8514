use num_bigint::BigInt;
use num_traits::Zero;

use crate::numkernel::{as_integer, binomial, binomial_q, frac, rat, ExactRational};
use crate::series::{QSeries, Var};

/// `[z^l] ū = C(1 + l(k+1), l) / (1 + l(k+1))`.
pub fn ubar_coeff(k: u32, l: usize) -> ExactRational {
    let top = 1 + l as i64 * (k as i64 + 1);
    binomial_q(top, l as i64) / rat(top)
}

/// Fuss–Catalan series ū with `ū = 1 + z ū^{k+1}`.
pub fn ubar(k: u32, order: usize) -> QSeries {
    assert!(k >= 1, "ubar needs k >= 1");
    let coeffs = (0..=order).map(|l| ubar_coeff(k, l)).collect();
    QSeries::new(Var::Z, coeffs, order)
}

/// `ū^d` from `[z^l] ū^d = C(d-1+(k+1)l, l) · d/(kl+d)`.
pub fn ubar_power(d: u32, k: u32, order: usize) -> QSeries {
    assert!(d >= 1, "ubar_power needs d >= 1");
    let (d, k) = (d as i64, k as i64);
    let coeffs = (0..=order as i64)
        .map(|l| binomial_q(d - 1 + (k + 1) * l, l) * frac(d, k * l + d))
        .collect();
    QSeries::new(Var::Z, coeffs, order)
}

/// `S_j = [u^j] 1/(1 - u + z u^{k+1}) = Σ_m (-1)^m C(j-km, m) z^m`.
pub fn denom_sj(j: usize, k: u32) -> QSeries {
    let (j, k) = (j as i64, k as i64);
    let mut coeffs = Vec::new();
    let mut m = 0;
    while j - k * m >= m {
        let c = binomial(j - k * m, m);
        coeffs.push(rat(if m % 2 == 0 { c } else { -c }));
        m += 1;
    }
    let order = coeffs.len() - 1;
    QSeries::new(Var::Z, coeffs, order)
}

fn ubar_int(k: u32, l: i64) -> BigInt {
    as_integer(&ubar_coeff(k, l as usize)).expect("Fuss-Catalan numbers are integers")
}

/// k-Dyck paths with `n_up` up-steps, never below 0, last step an up-step,
/// ending on level `j`.
pub fn deng_mansour_count(n_up: usize, j: i64, k: u32) -> BigInt {
    let ki = k as i64;
    if n_up == 0 || j < ki {
        return BigInt::zero();
    }
    let n = n_up as i64 - 1;
    let jj = j - ki;
    let mut acc = BigInt::zero();
    let mut m = 0;
    while m <= n && ki * m <= jj {
        let term = binomial(jj - ki * m, m) * ubar_int(k, n - m);
        if m % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        m += 1;
    }
    if ki * n <= jj - 1 {
        let tail = binomial(jj - 1 - ki * n, n);
        if n % 2 == 0 {
            acc -= tail;
        } else {
            acc += tail;
        }
    }
    acc
}

/// Total length of the final down-run over all k-Dyck paths with `m` up-steps.
pub fn last_downrun_total(m: usize, k: u32) -> BigInt {
    ubar_int(k, m as i64 + 1) - ubar_int(k, m as i64)
}

/// `k/(m+1) · C((k+1)m, m)`: summed length of the down-run right after the first up-step.
pub fn hoppy_early_total(m: usize, k: u32) -> BigInt {
    let (m, k) = (m as i64, k as i64);
    let v = binomial_q((k + 1) * m, m) * frac(k, m + 1);
    as_integer(&v).expect("integral total")
}

/// `ū²/z - 2ū² - 1/z`, the boundary-at-minus-one statistic.
pub fn hoppy_negative_series(k: u32, order: usize) -> QSeries {
    let sq = ubar_power(2, k, order + 1);
    let coeffs = (0..=order)
        .map(|l| sq.coeff(l + 1) - sq.coeff(l) * rat(2))
        .collect();
    QSeries::new(Var::Z, coeffs, order)
}
