use crate::error::{Error, Result};
use crate::gfpaths::{one_minus_pow, signed_pow};
use crate::series::{AlgebraicSubstitution, QSeries, Var};

/// Upper boundary of a Deutsch strip `[0, m-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Finite(usize),
    Infinite,
}

fn vpoly(cs: &[i64], order: usize) -> QSeries {
    QSeries::from_ints(Var::V, order, cs)
}

/// Deutsch walks from 0 to `i` between `-lower` and `upper` (`None` = no wall).
///
/// With `z = v/(1+v+v²)`:
/// `i < 0`: `(1+v)^{-i-2}(1-v^{i+t+1}) v (1-v^{h+1}) Φ / ((1-v)(1-v^{h+t+3}))`,
/// `i >= 0`: `v^i (1-v^{t+2})(1-v^{2-i+h}) Φ / ((1-v)(1+v)^{i+2}(1-v^{h+t+3}))`,
/// dropping the factors of an absent wall.
pub fn deutsch_walk(i: i64, lower: Option<usize>, upper: Option<usize>, order: usize) -> Result<QSeries> {
    if lower.is_some_and(|t| i < -(t as i64)) || upper.is_some_and(|h| i > h as i64) {
        return Err(Error::Domain(format!("end level {i} outside the strip")));
    }
    let wall = |k: i64| one_minus_pow(Var::V, k as usize, order);
    let one = QSeries::one(Var::V, order);
    let (t, h) = (lower.map(|t| t as i64), upper.map(|h| h as i64));
    let phi = vpoly(&[1, 1, 1], order);
    let onev = vpoly(&[1, 1], order);
    let mut num = phi;
    let mut den = vpoly(&[1, -1], order);
    if i < 0 {
        num = &(&num * &signed_pow(&onev, -i - 2)) * &vpoly(&[0, 1], order);
        num = &num * &t.map_or(one.clone(), |t| wall(i + t + 1));
        num = &num * &h.map_or(one.clone(), |h| wall(h + 1));
    } else {
        num = num.shift_up(i as usize);
        num = &num * &t.map_or(one.clone(), |t| wall(t + 2));
        num = &num * &h.map_or(one.clone(), |h| wall(2 - i + h));
        den = &den * &onev.pow(i as u32 + 2);
    }
    if let (Some(t), Some(h)) = (t, h) {
        den = &den * &wall(h + t + 3);
    }
    let expr = num.checked_div(&den)?;
    AlgebraicSubstitution::motzkin().eval_in_v(&expr, order)
}

/// Deutsch paths in the strip `[0, m-1]` (or `[0, ∞)`) from level `t` to level `j`.
pub fn deutsch_phi(t: usize, j: usize, bound: Bound, order: usize) -> Result<QSeries> {
    let upper = match bound {
        Bound::Finite(m) if m <= t.max(j) => {
            return Err(Error::Domain(format!("strip height {m} must exceed start {t} and end {j}")))
        }
        Bound::Finite(m) => Some(m - 1 - t),
        Bound::Infinite => None,
    };
    deutsch_walk(j as i64 - t as i64, Some(t), upper, order)
}

/// `D_m = (1+v)^{m-1}(1 - v^{m+2}) / ((1+v+v²)^m (1-v))`.
pub fn deutsch_determinant(m: usize, order: usize) -> QSeries {
    let num = &signed_pow(&vpoly(&[1, 1], order), m as i64 - 1) * &one_minus_pow(Var::V, m + 2, order);
    let den = &vpoly(&[1, 1, 1], order).pow(m as u32) * &vpoly(&[1, -1], order);
    let expr = num.checked_div(&den).unwrap();
    AlgebraicSubstitution::motzkin().eval_in_v(&expr, order).unwrap()
}

/// Solves `φ_i - zφ_{i-1} - zΣ_{k>i} φ_k = [i = t]` for `0 <= i < m` by elimination over series.
///
/// Returns the solution and the determinant (product of pivots).
pub fn deutsch_band_solve(t: usize, m: usize, order: usize) -> Result<(Vec<QSeries>, QSeries)> {
    if t >= m {
        return Err(Error::Domain(format!("start level {t} outside strip of height {m}")));
    }
    let z = QSeries::identity(Var::Z, order);
    let mz = -&z;
    let mut a: Vec<Vec<QSeries>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|k| match k {
                    _ if k == i => QSeries::one(Var::Z, order),
                    _ if k + 1 == i || k > i => mz.clone(),
                    _ => QSeries::zero(Var::Z, order),
                })
                .collect()
        })
        .collect();
    let mut b: Vec<QSeries> = (0..m)
        .map(|i| if i == t { QSeries::one(Var::Z, order) } else { QSeries::zero(Var::Z, order) })
        .collect();
    let mut det = QSeries::one(Var::Z, order);
    for p in 0..m {
        det = &det * &a[p][p];
        for r in p + 1..m {
            if a[r][p].is_zero() {
                continue;
            }
            let f = a[r][p].checked_div(&a[p][p])?;
            for c in p..m {
                let d = &f * &a[p][c];
                a[r][c] = &a[r][c] - &d;
            }
            let d = &f * &b[p];
            b[r] = &b[r] - &d;
        }
    }
    let mut x = vec![QSeries::zero(Var::Z, order); m];
    for r in (0..m).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..m {
            acc = &acc - &(&a[r][c] * &x[c]);
        }
        x[r] = acc.checked_div(&a[r][r])?;
    }
    Ok((x, det))
}
