use num_bigint::BigInt;
use num_traits::Zero;

use crate::gfpaths::one_minus_pow;
use crate::numkernel::{trinomial_row, ExactRational};
use crate::series::{AlgebraicSubstitution, QSeries, Var};

fn two_pow(p: u32) -> Option<usize> {
    1usize.checked_shl(p).filter(|&x| x < usize::MAX / 4)
}

fn eval(a: i64, expr: &QSeries, order: usize) -> QSeries {
    AlgebraicSubstitution::unary_binary(a, Var::Z).eval_in_v(expr, order).unwrap()
}

/// Weighted unary-binary trees with Horton–Strahler number exactly `p`:
/// `(1-v²) v^{2^p-1} / (1 - v^{2^{p+1}})` with `z = v/(1+(a+2)v+v²)`.
pub fn horton_rp(p: u32, a: i64, order: usize) -> QSeries {
    if p == 0 {
        return QSeries::one(Var::Z, order);
    }
    let Some(e) = two_pow(p).filter(|&e| e - 1 <= order) else {
        return QSeries::zero(Var::Z, order);
    };
    let num = one_minus_pow(Var::V, 2, order).shift_up(e - 1);
    let expr = num.checked_div(&one_minus_pow(Var::V, 2 * e, order)).unwrap();
    eval(a, &expr, order)
}

/// Horton–Strahler number at least `p`: `(1-v²) v^{2^p-1} / (1 - v^{2^p})`.
pub fn horton_sp(p: u32, a: i64, order: usize) -> QSeries {
    let Some(e) = two_pow(p).filter(|&e| e - 1 <= order) else {
        return QSeries::zero(Var::Z, order);
    };
    let num = one_minus_pow(Var::V, 2, order).shift_up(e - 1);
    let expr = num.checked_div(&one_minus_pow(Var::V, e, order)).unwrap();
    eval(a, &expr, order)
}

/// `[z^n] S_p = Σ_{k>=1} Q(n+1-k·2^p)` with `Q(i) = T(i) - 2T(i-2) + T(i-4)`, `T` the row `(1+(a+2)v+v²)^{n-1}`.
pub fn horton_sp_coeff(n: usize, p: u32, a: i64) -> BigInt {
    if n == 0 {
        return BigInt::from(u8::from(p == 0));
    }
    let row = trinomial_row(n - 1, a + 2);
    let t = |i: i64| if i < 0 || i as usize >= row.len() { BigInt::zero() } else { row[i as usize].clone() };
    let q = |i: i64| t(i) - BigInt::from(2) * t(i - 2) + t(i - 4);
    let Some(step) = two_pow(p) else { return BigInt::zero() };
    let mut acc = BigInt::zero();
    let mut k = 1;
    while n as i64 + 1 - (k * step) as i64 >= 0 {
        acc += q(n as i64 + 1 - (k * step) as i64);
        k += 1;
    }
    acc
}

/// Unary-binary trees with `n` internal nodes and `a` unary colours.
pub fn unary_binary_count(n: usize, a: i64) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    let row = trinomial_row(n - 1, a + 2);
    let t = |i: i64| if i < 0 || i as usize >= row.len() { BigInt::zero() } else { row[i as usize].clone() };
    let n = n as i64;
    t(n) + t(n - 1) - t(n - 2) - t(n - 3)
}

/// Exact mean Horton–Strahler number over trees of size `n`.
pub fn horton_average(n: usize, a: i64) -> ExactRational {
    let mut total = BigInt::zero();
    let mut p = 1;
    loop {
        let c = horton_sp_coeff(n, p, a);
        if c.is_zero() {
            break;
        }
        total += c;
        p += 1;
    }
    ExactRational::new(total, unary_binary_count(n, a))
}

/// Mean Horton–Strahler number as a float, for sizes where exact rationals get heavy.
pub fn horton_average_f64(n: usize, a: i64) -> f64 {
    crate::numkernel::to_f64(&horton_average(n, a))
}
