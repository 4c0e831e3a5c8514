use num_bigint::BigInt;
use num_traits::Zero;

use crate::numkernel::{frac, rat, ExactRational};
use crate::series::{AlgebraicSubstitution, MSeries, Marker, MarkerPoly, QSeries, Var};

fn subst() -> AlgebraicSubstitution<ExactRational> {
    AlgebraicSubstitution::quadratic(3, Var::Z)
}

fn vpoly(cs: &[i64], order: usize) -> QSeries {
    QSeries::from_ints(Var::V, order, cs)
}

/// Marked ordered trees by nodes: `z(1+v)` with `z = v/(1+3v+v²)`.
pub fn marked_count_series(order: usize) -> QSeries {
    let expr = &vpoly(&[1, 1], order) * &vpoly(&[0, 1], order);
    let expr = expr.checked_div(&vpoly(&[1, 3, 1], order)).unwrap();
    subst().eval_in_v(&expr, order).unwrap()
}

/// Marked ordered trees by nodes (`z`) and leaves (`u`):
/// `-z + zu/2 + 1/2 - sqrt(1 - (4+2u)z + (4+u²)z²)/2`.
pub fn marked_leaf_series(order: usize) -> MSeries {
    let u = MarkerPoly::var(Marker::U);
    let c1 = -&(&MarkerPoly::int(4) + &u.scale(&rat(2)));
    let c2 = &MarkerPoly::int(4) + &u.pow(2);
    let rad = MSeries::new(Var::Z, vec![MarkerPoly::one(), c1, c2], order);
    let root = rad.sqrt().expect("constant term 1");
    let lin = &MarkerPoly::int(-1) + &u.scale(&frac(1, 2));
    let poly = MSeries::new(Var::Z, vec![MarkerPoly::constant(frac(1, 2)), lin], order);
    &poly - &root.scale(&frac(1, 2))
}

/// Total leaves over marked ordered trees of each size: `z/(1-v)`.
pub fn marked_leaf_total(order: usize) -> QSeries {
    let expr = vpoly(&[0, 1], order).checked_div(&(&vpoly(&[1, 3, 1], order) * &vpoly(&[1, -1], order))).unwrap();
    subst().eval_in_v(&expr, order).unwrap()
}

/// Exact mean number of leaves of a marked ordered tree with `n >= 1` nodes.
pub fn marked_leaf_average(n: usize) -> ExactRational {
    marked_leaf_total(n).coeff(n) / marked_count_series(n).coeff(n)
}

/// Trees of height at most `h` (counted in nodes):
/// `z(1+v)((1+2v)^{h-1} - v^h(v+2)^{h-1}) / ((1+2v)^{h-1} - v^{h+1}(v+2)^{h-1})`.
pub fn marked_height_ph(h: usize, order: usize) -> QSeries {
    if h == 0 {
        return QSeries::zero(Var::Z, order);
    }
    let a = vpoly(&[1, 2], order).pow(h as u32 - 1);
    let b = vpoly(&[2, 1], order).pow(h as u32 - 1);
    let num = &a - &b.shift_up(h);
    let den = &a - &b.shift_up(h + 1);
    let pref = (&vpoly(&[0, 1, 1], order)).checked_div(&vpoly(&[1, 3, 1], order)).unwrap();
    let expr = &pref * &num.checked_div(&den).unwrap();
    subst().eval_in_v(&expr, order).unwrap()
}

/// `p_h` from `p_{h+1} = -z + (2z - z²)/(1 - p_h)`, `p_1 = z`.
pub fn marked_height_ph_rec(h: usize, order: usize) -> QSeries {
    if h == 0 {
        return QSeries::zero(Var::Z, order);
    }
    let z = QSeries::identity(Var::Z, order);
    let top = QSeries::from_ints(Var::Z, order, &[0, 2, -1]);
    let mut p = z.clone();
    for _ in 1..h {
        let q = top.checked_div(&(&QSeries::one(Var::Z, order) - &p)).unwrap();
        p = &q - &z;
    }
    p
}

/// `a·b` truncated to degree `n`.
fn int_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a/b` truncated to degree `n`, for `b(0) = 1`.
fn int_div(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut q: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = a.get(k).cloned().unwrap_or_default();
        for i in 1..=k.min(b.len() - 1) {
            acc -= &b[i] * &q[k - i];
        }
        q.push(acc);
    }
    q
}

/// `(c0 + c1 v)·p`, truncated to degree `n`.
fn int_lin(c0: i64, c1: i64, p: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|i| {
            let mut x = p.get(i).map_or_else(BigInt::zero, |c| c * c0);
            if i >= 1 {
                if let Some(c) = p.get(i - 1) {
                    x += c * c1;
                }
            }
            x
        })
        .collect()
}

/// Summed height (in nodes) over marked ordered trees of each size, from `Σ_h (A - p_h)`.
///
/// All terms have integer coefficients in `v`, so the sum is formed over the integers.
pub fn marked_height_total(order: usize) -> QSeries {
    let ints = |cs: &[i64]| cs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
    let z_v = int_div(&ints(&[0, 1]), &ints(&[1, 3, 1]), order);
    let tail = int_mul(&z_v, &ints(&[1, 0, -1]), order);
    // h = 0 contributes A itself
    let mut acc = int_mul(&z_v, &ints(&[1, 1]), order);
    let (mut a, mut b) = (ints(&[1]), ints(&[1]));
    for h in 1..=order {
        if h > 1 {
            a = int_lin(1, 2, &a, order);
            b = int_lin(2, 1, &b, order);
        }
        // the h-th term is v^h times a series needed only to degree order - h
        let m = order - h;
        let mut den: Vec<BigInt> = (0..=m).map(|i| a.get(i).cloned().unwrap_or_default()).collect();
        for (i, c) in b.iter().enumerate().take((m + 1).saturating_sub(h + 1)) {
            den[i + h + 1] -= c;
        }
        let term = int_div(&int_mul(&tail, &b, m), &den, m);
        for (i, c) in term.into_iter().enumerate() {
            acc[i + h] += c;
        }
    }
    let expr = QSeries::new(Var::V, acc.into_iter().map(rat).collect(), order);
    subst().eval_in_v(&expr, order).unwrap()
}

/// Exact mean height (in nodes) of a marked ordered tree with `n >= 1` nodes.
pub fn marked_height_average(n: usize) -> ExactRational {
    marked_height_total(n).coeff(n) / marked_count_series(n).coeff(n)
}
