//! Closed forms and generating functions for the path families.
//!
//! Each family exposes a series route (closed form expanded as a truncated
//! power series) and, where one exists, an explicit coefficient formula.

mod deutsch;
mod kdyck;
mod kemp;
mod motzkin;
mod skew;

pub use deutsch::{deutsch_band_solve, deutsch_determinant, deutsch_phi, deutsch_walk, Bound};
pub use kdyck::{
    deng_mansour_count, denom_sj, hoppy_early_total, hoppy_negative_series, last_downrun_total, ubar, ubar_coeff,
    ubar_power,
};
pub use kemp::{kemp_finite_oracle, kemp_peak_series, kemp_valley_series, Turn};
pub use motzkin::{
    amplitude_coeff, amplitude_horiz_total, amplitude_series, amplitude_total_series, motzkin_bounded, motzkin_bounded_v, motzkin_d,
    motzkin_dstar, motzkin_height_total, AmplitudeKind, BoundedVariant,
};
pub use skew::{
    dual_kernel_roots, dual_open_ended, dual_skew_coeff, dual_skew_gj_series, dual_skew_v_series, skew_kernel_roots,
    skew_open_ended, skew_radicand, skew_red_coeff, skew_red_derivative, skew_red_fixed_power, skew_red_series,
    skew_red_series_v, skew_sj_coeff, skew_sj_series,
};

use crate::numkernel::rat;
use crate::series::{QSeries, Var};

/// `1 - var^k` as a series of the given order.
pub(crate) fn one_minus_pow(var: Var, k: usize, order: usize) -> QSeries {
    let mut s = QSeries::one(var, order);
    if k <= order {
        s = &s - &QSeries::monomial(var, order, k, rat(1));
    }
    s
}

/// `p^e` for a series with invertible constant term; negative `e` inverts.
pub(crate) fn signed_pow(p: &QSeries, e: i64) -> QSeries {
    let q = p.pow(e.unsigned_abs() as u32);
    if e >= 0 {
        q
    } else {
        q.inverse().expect("constant term invertible")
    }
}
