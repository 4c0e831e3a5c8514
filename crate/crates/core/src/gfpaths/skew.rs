use num_bigint::BigInt;
use num_traits::Zero;

use crate::numkernel::{as_integer, binomial, frac, rat, trinomial, trinomial_int, ExactRational};
use crate::series::{AlgebraicSubstitution, MSeries, Marker, MarkerPoly, QSeries, Var};

/// `W = sqrt(1 - 6x + 5x²)` in `x = z²`.
pub fn skew_radicand(order: usize) -> QSeries {
    QSeries::from_ints(Var::X, order, &[1, -6, 5]).sqrt().expect("constant term 1")
}

fn half() -> ExactRational {
    frac(1, 2)
}

/// Re-expands a series in `x = z²` as `z^shift · f(z²)` up to `z^order`.
fn to_z(f: &QSeries, shift: usize, order: usize) -> QSeries {
    f.expand_power(2, Var::Z).pad_to(order).shift_up(shift).truncate(order)
}

fn x_order(order_z: usize) -> usize {
    order_z / 2 + 1
}

/// `s_j = z^j (3 - 3z² - W)/(2 P^{j+1})` with `P = (1 + z² + W)/2`.
pub fn skew_sj_series(j: usize, order_z: usize) -> QSeries {
    let nx = x_order(order_z);
    let w = skew_radicand(nx);
    let p = (&QSeries::from_ints(Var::X, nx, &[1, 1]) + &w).scale(&half());
    let num = (&QSeries::from_ints(Var::X, nx, &[3, -3]) - &w).scale(&half());
    let f = num.checked_div(&p.pow(j as u32 + 1)).expect("P(0) = 1");
    to_z(&f, j, order_z)
}

/// `[v^k] (1+v)²(1-v)/(1+2v)^j`.
fn lambda(j: i64, k: i64) -> ExactRational {
    let c = BigInt::from(3) * binomial(-j, k) + BigInt::from(5) * binomial(1 - j, k) + binomial(2 - j, k)
        - binomial(3 - j, k);
    rat(c * BigInt::from(2).pow(k as u32)) * frac(1, 8)
}

/// Number of decorated skew paths with `n` steps ending on level `j`, by trinomial extraction.
pub fn skew_sj_coeff(n: usize, j: usize) -> BigInt {
    if n < j || (n - j) % 2 == 1 {
        return BigInt::zero();
    }
    let m = ((n - j) / 2) as i64;
    let j = j as i64;
    if m == 0 && j == 0 {
        return BigInt::from(1);
    }
    let mut acc = ExactRational::zero();
    for k in 0..=m {
        acc += lambda(j, k) * rat(trinomial_int(m - 1 + j, 3, m - k));
    }
    as_integer(&acc).expect("integral count")
}

fn z_radicand(order: usize) -> QSeries {
    skew_radicand(x_order(order)).expand_power(2, Var::Z).truncate(order)
}

/// `S(1)`: skew paths with free end level.
pub fn skew_open_ended(order: usize) -> QSeries {
    let n = order + 1;
    let w = z_radicand(n);
    let a = QSeries::from_ints(Var::Z, n, &[1, 1]);
    let b = QSeries::from_ints(Var::Z, n, &[-2, 3, 1]);
    let c = QSeries::from_ints(Var::Z, n, &[2, 1]);
    let num = -&(&(&a * &b) + &(&c * &w));
    let den = QSeries::from_ints(Var::Z, n, &[0, -2, 4, 2]);
    num.quotient(&den).expect("z divides the numerator")
}

/// `(z r₁, z r₂) = ((1 + z² ± W)/2)`, the kernel roots scaled by `z`.
pub fn skew_kernel_roots(order: usize) -> (QSeries, QSeries) {
    let w = z_radicand(order);
    let base = QSeries::from_ints(Var::Z, order, &[1, 0, 1]);
    ((&base + &w).scale(&half()), (&base - &w).scale(&half()))
}

/// `(z s₁, s₂)` for the dual kernel, both power series.
pub fn dual_kernel_roots(order: usize) -> (QSeries, QSeries) {
    let n = order + 1;
    let w = z_radicand(n);
    let base = QSeries::from_ints(Var::Z, n, &[1, 0, 1]);
    let two_minus = QSeries::from_ints(Var::Z, n, &[2, 0, -1]);
    let zs1 = (&base + &w).checked_div(&two_minus.scale(&rat(2))).unwrap();
    let s2 = (&base - &w).quotient(&two_minus.shift_up(1).scale(&rat(2))).unwrap();
    (zs1.truncate(order), s2)
}

fn red_radicand(order: usize) -> MSeries {
    let w = MarkerPoly::var(Marker::W);
    let c1 = -&(&MarkerPoly::int(4) + &w.scale(&rat(2)));
    let c2 = &w.scale(&rat(4)) + &w.pow(2);
    MSeries::new(Var::X, vec![MarkerPoly::one(), c1, c2], order)
}

/// `S(0) = (1 - wx - sqrt(1 - (4+2w)x + (4w+w²)x²))/(2x)`, `w` marking red steps.
pub fn skew_red_series(order_x: usize) -> MSeries {
    let n = order_x + 1;
    let root = red_radicand(n).sqrt().expect("constant term 1");
    let lead = MSeries::new(Var::X, vec![MarkerPoly::one(), -&MarkerPoly::var(Marker::W)], n);
    (&lead - &root).shift_down(1).expect("x divides").scale(&half())
}

/// `S(0) = 1 + v` pushed through `x = v/(1 + (2+w)v + v²)`.
pub fn skew_red_series_v(order_x: usize) -> MSeries {
    let sub = AlgebraicSubstitution::skew_marked();
    let expr = MSeries::new(Var::V, vec![MarkerPoly::one(), MarkerPoly::one()], order_x);
    sub.eval_in_v(&expr, order_x).expect("v-series")
}

/// `[x^n] S(0)` as a polynomial in `w`, from four modified trinomial coefficients.
pub fn skew_red_coeff(n: usize) -> MarkerPoly {
    if n == 0 {
        return MarkerPoly::one();
    }
    let a = &MarkerPoly::int(2) + &MarkerPoly::var(Marker::W);
    let n = n as i64;
    let t = |k: i64| trinomial(n - 1, &a, k);
    &(&t(n) + &t(n - 1)) - &(&t(n - 2) + &t(n - 3))
}

/// `(1 - 4x)^{-e/2}`.
fn catalan_root_power(e: i64, order: usize) -> QSeries {
    let s = QSeries::from_ints(Var::X, order, &[1, -4]).sqrt().unwrap();
    crate::gfpaths::signed_pow(&s, -e)
}

/// Skew paths from 0 to 0 with exactly `kred` red steps, series in `x = z²`.
pub fn skew_red_fixed_power(kred: usize, order_x: usize) -> QSeries {
    let n = order_x + 1;
    let x = |cs: &[i64]| QSeries::from_ints(Var::X, n, cs);
    let s = match kred {
        0 => (&x(&[1]) - &catalan_root_power(-1, n)).shift_down(1).unwrap().scale(&half()),
        1 => (&x(&[1, -2]) - &catalan_root_power(-1, n))
            .checked_div(&catalan_root_power(-1, n))
            .unwrap()
            .scale(&half()),
        2 => catalan_root_power(3, n).shift_up(3),
        3 => (&x(&[1, -2]) * &catalan_root_power(5, n)).shift_up(4),
        4 => (&x(&[1, -4, 5]) * &catalan_root_power(7, n)).shift_up(5),
        _ => {
            return skew_red_series(order_x)
                .marker_coeff(Marker::W, kred as u32)
                .to_scalar()
                .expect("marker-free")
        }
    };
    s.truncate(order_x)
}

/// `d/dw S(0)` at `w = 1`: `(-1 + 6x - 5x² + (1-3x)W)/(2(1-x)(1-5x))`.
pub fn skew_red_derivative(order_x: usize) -> QSeries {
    let w = skew_radicand(order_x);
    let x = |cs: &[i64]| QSeries::from_ints(Var::X, order_x, cs);
    let num = &x(&[-1, 6, -5]) + &(&x(&[1, -3]) * &w);
    num.checked_div(&x(&[2, -12, 10])).unwrap()
}

/// `[u^j] G = (3z² - 3 + W)/(2(z² - 2)) · z^j S^{j+1}` with `S = (1 + z² - W)/(2z²)`.
pub fn dual_skew_gj_series(j: usize, order_z: usize) -> QSeries {
    let nx = x_order(order_z);
    let w = skew_radicand(nx + 1);
    let x = |cs: &[i64]| QSeries::from_ints(Var::X, nx + 1, cs);
    let a = (&x(&[-3, 3]) + &w).checked_div(&x(&[-4, 2])).unwrap();
    let s = (&x(&[1, 1]) - &w).shift_down(1).unwrap().scale(&half());
    let f = &a.truncate(nx) * &s.pow(j as u32 + 1);
    to_z(&f, j, order_z)
}

/// `[x^N] (1+v)(v+2)^j` under `x = v/(1+3v+v²)`; the `z^{j+2N}` coefficients of `G_j`.
pub fn dual_skew_v_series(j: usize, order_x: usize) -> QSeries {
    let expr = &QSeries::from_ints(Var::V, order_x, &[1, 1]) * &QSeries::from_ints(Var::V, order_x, &[2, 1]).pow(j as u32);
    AlgebraicSubstitution::skew().eval_in_v(&expr, order_x).unwrap()
}

fn mu(j: i64, k: i64) -> BigInt {
    let p = |e: i64| binomial(e, k) * BigInt::from(2).pow((e - k).max(0) as u32);
    BigInt::from(3) * p(j) - BigInt::from(7) * p(j + 1) + BigInt::from(5) * p(j + 2) - p(j + 3)
}

/// `[z^{j+2N} u^j] G` by the μ-trinomial sum.
pub fn dual_skew_coeff(n_half: usize, j: usize) -> BigInt {
    let (n, j) = (n_half as i64, j as i64);
    if n == 0 {
        return BigInt::from(2).pow(j as u32);
    }
    (0..=n).map(|k| mu(j, k) * trinomial_int(n - 1, 3, n - k)).sum()
}

/// `G(1) = ((1+z)(1-3z) - W)/(2z(z² + 2z - 1))`: dual skew paths with free end level.
pub fn dual_open_ended(order: usize) -> QSeries {
    let n = order + 1;
    let w = z_radicand(n);
    let num = &QSeries::from_ints(Var::Z, n, &[1, -2, -3]) - &w;
    let den = QSeries::from_ints(Var::Z, n, &[0, -2, 4, 2]);
    num.quotient(&den).expect("z divides the numerator")
}
