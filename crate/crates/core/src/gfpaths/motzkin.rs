use num_bigint::BigInt;
use num_traits::Zero;

use crate::gfpaths::one_minus_pow;
use crate::numkernel::{divisor_count, rat, trinomial_row};
use crate::series::{AlgebraicSubstitution, QSeries, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedVariant {
    All,
    /// No horizontal step on the top level `h`.
    NoTopHorizontal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmplitudeKind {
    /// Height `h` with a horizontal step on level `h` (amplitude `2h + 1`).
    Horiz,
    /// Height `h` without one (amplitude `2h`).
    NoHoriz,
}

fn d_pair(n: usize, order: usize) -> (QSeries, QSeries) {
    // (D_{n-1}, D_n) with D_{-1} = 0
    let mut prev = QSeries::zero(Var::Z, order);
    let mut cur = QSeries::one(Var::Z, order);
    let step = QSeries::from_ints(Var::Z, order, &[1, -1]);
    for _ in 0..n {
        let next = &(&step * &cur) - &prev.shift_up(2);
        prev = std::mem::replace(&mut cur, next);
    }
    (prev, cur)
}

/// `D_n = (1-z)D_{n-1} - z²D_{n-2}`, `D_0 = 1`, `D_1 = 1 - z`.
pub fn motzkin_d(n: usize, order: usize) -> QSeries {
    d_pair(n, order).1
}

/// `D*_n = D_{n-1} - z²D_{n-2}` (last diagonal entry without the horizontal step), `D*_0 = 1`.
pub fn motzkin_dstar(n: usize, order: usize) -> QSeries {
    match n {
        0 => QSeries::one(Var::Z, order),
        _ => {
            let (dm2, dm1) = d_pair(n - 1, order);
            if n == 1 {
                dm1
            } else {
                &dm1 - &dm2.shift_up(2)
            }
        }
    }
}

/// Motzkin paths of height at most `h`.
pub fn motzkin_bounded(h: usize, variant: BoundedVariant, order: usize) -> QSeries {
    let (num, den) = match variant {
        BoundedVariant::All => (motzkin_d(h, order), motzkin_d(h + 1, order)),
        BoundedVariant::NoTopHorizontal => (motzkin_dstar(h, order), motzkin_dstar(h + 1, order)),
    };
    num.checked_div(&den).expect("D(0) = 1")
}

/// `(1+v+v²)(1 - v^{L-2})/(1 - v^L)`, `L = 2h+4` (all) or `2h+3` (no top horizontal).
pub fn motzkin_bounded_v(h: usize, variant: BoundedVariant, order: usize) -> QSeries {
    let l = match variant {
        BoundedVariant::All => 2 * h + 4,
        BoundedVariant::NoTopHorizontal => 2 * h + 3,
    };
    let phi = QSeries::from_ints(Var::V, order, &[1, 1, 1]);
    let expr = (&phi * &one_minus_pow(Var::V, l - 2, order))
        .checked_div(&one_minus_pow(Var::V, l, order))
        .unwrap();
    AlgebraicSubstitution::motzkin().eval_in_v(&expr, order).unwrap()
}

/// Motzkin paths of height exactly `h`, split by a horizontal step on the top level.
pub fn amplitude_series(h: usize, kind: AmplitudeKind, order: usize) -> QSeries {
    let all = |h: usize| motzkin_bounded(h, BoundedVariant::All, order);
    let no_top = motzkin_bounded(h, BoundedVariant::NoTopHorizontal, order);
    match kind {
        AmplitudeKind::Horiz => &all(h) - &no_top,
        AmplitudeKind::NoHoriz if h == 0 => no_top,
        AmplitudeKind::NoHoriz => &no_top - &all(h - 1),
    }
}

/// `[z^n]` of the `L`-dependent part of a bounded Motzkin series.
fn bounded_excess(row: &[BigInt], n: i64, l: i64) -> BigInt {
    let t = |k: i64| if k < 0 || k as usize >= row.len() { BigInt::zero() } else { row[k as usize].clone() };
    let mut acc = BigInt::zero();
    let mut k = 1;
    while n + 2 - k * l >= 0 {
        let c = k * l;
        acc -= t(n + 2 - c) - BigInt::from(2) * t(n - c) + t(n - 2 - c);
        k += 1;
    }
    acc
}

/// Trinomial-sum route for [`amplitude_series`].
pub fn amplitude_coeff(n: usize, h: usize, kind: AmplitudeKind) -> BigInt {
    let row = trinomial_row(n, 1);
    let (n, h) = (n as i64, h as i64);
    let e = |l: i64| bounded_excess(&row, n, l);
    match kind {
        AmplitudeKind::Horiz => e(2 * h + 4) - e(2 * h + 3),
        AmplitudeKind::NoHoriz => e(2 * h + 3) - e(2 * h + 2),
    }
}

/// Summed amplitude over all Motzkin paths of each length:
/// `(1+v+v²) Σ_k c(k)(v^{k-2} - v^k)` with `c(k)` the number of divisors of `k` that are at least 3.
pub fn amplitude_total_series(order: usize) -> QSeries {
    let big = |k: usize| -> i64 {
        let d = divisor_count(k as i64).unwrap() as i64;
        d - 1 - i64::from(k % 2 == 0)
    };
    let mut coeffs = vec![rat(0); order + 1];
    for k in 3..=order + 2 {
        coeffs[k - 2] += rat(big(k));
        if k <= order {
            coeffs[k] -= rat(big(k));
        }
    }
    let inner = QSeries::new(Var::V, coeffs, order);
    let expr = &QSeries::from_ints(Var::V, order, &[1, 1, 1]) * &inner;
    AlgebraicSubstitution::motzkin().eval_in_v(&expr, order).unwrap()
}

/// Summed height over Motzkin paths of each length: `Σ_h (1+v+v²) v^{2h+2}(1-v²)/(1 - v^{2h+4})`.
pub fn motzkin_height_total(order: usize) -> QSeries {
    let phi = QSeries::from_ints(Var::V, order, &[1, 1, 1]);
    let base = &phi * &QSeries::from_ints(Var::V, order, &[1, 0, -1]);
    let mut acc = QSeries::zero(Var::V, order);
    let mut h = 0;
    while 2 * h + 2 <= order {
        let term = base.shift_up(2 * h + 2).checked_div(&one_minus_pow(Var::V, 2 * h + 4, order)).unwrap();
        acc = &acc + &term;
        h += 1;
    }
    AlgebraicSubstitution::motzkin().eval_in_v(&acc, order).unwrap()
}

/// Motzkin paths with a horizontal step on their top level, by length: `Σ_h Horiz_h`.
pub fn amplitude_horiz_total(order: usize) -> QSeries {
    let phi = QSeries::from_ints(Var::V, order, &[1, 1, 1]);
    let ratio = |l: usize| one_minus_pow(Var::V, l - 2, order).checked_div(&one_minus_pow(Var::V, l, order)).unwrap();
    let mut acc = QSeries::zero(Var::V, order);
    let mut h = 0;
    // Horiz_h starts at v^{2h+1}
    while 2 * h + 1 <= order {
        acc = &acc + &(&ratio(2 * h + 4) - &ratio(2 * h + 3));
        h += 1;
    }
    AlgebraicSubstitution::motzkin().eval_in_v(&(&phi * &acc), order).unwrap()
}
