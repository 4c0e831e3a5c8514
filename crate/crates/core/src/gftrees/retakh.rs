use crate::gfpaths::one_minus_pow;
use crate::numkernel::{rat, ExactRational};
use crate::series::{AlgebraicSubstitution, QSeries, Var};

fn vpoly(cs: &[i64], order: usize) -> QSeries {
    QSeries::from_ints(Var::V, order, cs)
}

fn eval(expr: &QSeries, order: usize) -> QSeries {
    AlgebraicSubstitution::motzkin().eval_in_v(expr, order).unwrap()
}

/// `G_k = (v/(1+v)) (1 - v^{2k})/(1 - v^{2k+1})` with `z = v/(1+v+v²)`.
pub fn retakh_gk(k: usize, order: usize) -> QSeries {
    assert!(k >= 1, "G_k starts at k = 1");
    let num = &vpoly(&[0, 1], order) * &one_minus_pow(Var::V, 2 * k, order);
    let den = &vpoly(&[1, 1], order) * &one_minus_pow(Var::V, 2 * k + 1, order);
    eval(&num.checked_div(&den).unwrap(), order)
}

/// `G_{k+1} = z/(1 - zG_k/(1 - G_k))`, `G_1 = z`.
pub fn retakh_gk_rec(k: usize, order: usize) -> QSeries {
    assert!(k >= 1, "G_k starts at k = 1");
    let z = QSeries::identity(Var::Z, order);
    let one = QSeries::one(Var::Z, order);
    let mut g = z.clone();
    for _ in 1..k {
        let f = (&z * &g).checked_div(&(&one - &g)).unwrap();
        g = z.checked_div(&(&one - &f)).unwrap();
    }
    g
}

/// All Retakh trees by nodes: `zM(z) = v`.
pub fn retakh_full(order: usize) -> QSeries {
    AlgebraicSubstitution::motzkin().invert(order)
}

/// Retakh trees of height at most `2h` (edges), `h >= 1`: `v(1 - v^{2h+2})/(1 - v^{2h+4})`.
pub fn retakh_bounded(h: usize, order: usize) -> QSeries {
    assert!(h >= 1, "height bound 2h needs h >= 1");
    let num = &vpoly(&[0, 1], order) * &one_minus_pow(Var::V, 2 * h + 2, order);
    eval(&num.checked_div(&one_minus_pow(Var::V, 2 * h + 4, order)).unwrap(), order)
}

/// Summed height (edges) over Retakh trees of each size.
///
/// Heights are 0, 1 or even; `Σ_j (v - B_j)` with `B_0 = z`, `B_1 = v/(1+v²)` and
/// `B_{2h} = B_{2h+1}` the height-`2h` series.
pub fn retakh_height_total(order: usize) -> QSeries {
    let v = vpoly(&[0, 1], order);
    let z = v.checked_div(&vpoly(&[1, 1, 1], order)).unwrap();
    let b1 = v.checked_div(&vpoly(&[1, 0, 1], order)).unwrap();
    let mut acc = &(&v - &z) + &(&v - &b1);
    let tail = &vpoly(&[1, 0, -1], order) * &v;
    let mut h = 1;
    while 2 * h + 3 <= order {
        let term = tail.shift_up(2 * h + 2).checked_div(&one_minus_pow(Var::V, 2 * h + 4, order)).unwrap();
        acc = &acc + &term.scale(&rat(2));
        h += 1;
    }
    eval(&acc, order)
}

/// Summed leaves over Retakh trees of each size:
/// `v(1+v)(1 - v + 2v² - v³) / ((1-v)(1+v+v²))`.
pub fn retakh_leaf_series(order: usize) -> QSeries {
    let num = &vpoly(&[0, 1, 1], order) * &vpoly(&[1, -1, 2, -1], order);
    let den = &vpoly(&[1, -1], order) * &vpoly(&[1, 1, 1], order);
    eval(&num.checked_div(&den).unwrap(), order)
}

/// Exact mean number of leaves of a Retakh tree with `n >= 1` nodes.
pub fn retakh_leaf_average(n: usize) -> ExactRational {
    retakh_leaf_series(n).coeff(n) / retakh_full(n).coeff(n)
}

/// Exact mean height of a Retakh tree with `n >= 1` nodes.
pub fn retakh_height_average(n: usize) -> ExactRational {
    retakh_height_total(n).coeff(n) / retakh_full(n).coeff(n)
}
