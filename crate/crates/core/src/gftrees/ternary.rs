use num_bigint::BigInt;
use num_traits::Zero;

use crate::numkernel::{binomial, frac, rat};
use crate::series::{AlgebraicSubstitution, MSeries, Marker, MarkerPoly, Var};

/// Ternary trees with `n` nodes and `k` middle edges: `(1/n) C(n,k) C(2n, n-1-k)`.
pub fn ternary_t(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return BigInt::from(u8::from(k == 0));
    }
    if k >= n {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    binomial(n, k) * binomial(2 * n, n - 1 - k) / BigInt::from(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TernaryRoot {
    R1,
    R2,
    R3,
}

fn mpoly(var: Var, order: usize, cs: Vec<MarkerPoly>) -> MSeries {
    MSeries::new(var, cs, order)
}

fn u() -> MarkerPoly {
    MarkerPoly::var(Marker::U)
}

/// `1 + U`, the marker `u` written in the shifted variable.
fn u_shift() -> MarkerPoly {
    &MarkerPoly::one() + &MarkerPoly::var(Marker::CapU)
}

/// `t(x)` from `x = t(1-t)²/(1-t+ut)`, i.e. `t = xΦ(t)` with `Φ = (1-t+ut)/(1-t)²`.
pub fn ternary_t_of_x(order: usize) -> MSeries {
    let num = mpoly(Var::V, order, vec![MarkerPoly::one(), &u() - &MarkerPoly::one()]);
    let den = MSeries::from_ints(Var::V, order, &[1, -2, 1]);
    let phi = num.checked_div(&den).expect("constant term 1");
    AlgebraicSubstitution::from_series(phi, Var::X).unwrap().invert(order)
}

/// `r₁` in `x` (marker `u` on middle edges); `r₂`, `r₃` as `1/r₂`, `1/r₃` in `s = √τ`, `τ = t/(1+U)`.
///
/// `1/r_{2,3} = t/2 ∓ √(ux)·Ξ` with `√(ux) = u s (1-t)/sqrt(1-t+ut)`.
pub fn ternary_root_series(which: TernaryRoot, order: usize) -> MSeries {
    match which {
        TernaryRoot::R1 => {
            let t = ternary_t_of_x(order);
            let one_minus = &MSeries::one(Var::X, order) - &t;
            one_minus.inverse().expect("constant term 1")
        }
        TernaryRoot::R2 | TernaryRoot::R3 => {
            let uu = u_shift();
            let xi = ternary_xi(order / 2 + 1).expand_power(2, Var::S).truncate(order);
            let t = MSeries::monomial(Var::S, order, 2, uu.clone());
            let one = MSeries::one(Var::S, order);
            let rad = &(&one - &t) + &(&t * &MSeries::constant(Var::S, order, uu.clone()));
            let sqrt_ux = (&(&one - &t).mul_coeff(&uu).shift_up(1))
                .checked_div(&rad.sqrt().expect("constant term 1"))
                .unwrap();
            let second = &sqrt_ux * &xi;
            let half_t = t.scale(&frac(1, 2));
            if which == TernaryRoot::R2 {
                &half_t - &second
            } else {
                &half_t + &second
            }
        }
    }
}

/// `Ξ = (2-uτ)/(2(1-uτ)) · sqrt(1 + τ(1-uτ)/(2-uτ)²)` in `τ`, with `u = 1+U`.
pub fn ternary_xi(order: usize) -> MSeries {
    let uu = u_shift();
    let ut = mpoly(Var::Tau, order, vec![MarkerPoly::zero(), uu]);
    let one = MSeries::one(Var::Tau, order);
    let two_minus = &MSeries::constant(Var::Tau, order, MarkerPoly::int(2)) - &ut;
    let one_minus = &one - &ut;
    let inner = (&MSeries::identity(Var::Tau, order) * &one_minus)
        .checked_div(&two_minus.pow(2))
        .expect("constant term 4");
    let root = (&one + &inner).sqrt().expect("constant term 1");
    let pref = two_minus.checked_div(&one_minus.scale(&rat(2))).expect("constant term 2");
    &pref * &root
}

/// Checks `r₁·u·x·r₂·r₃ = -1` to the given order in `t`.
///
/// `r₁` comes from the `x`-inversion pushed back along `x(τ)`, the product `(1/r₂)(1/r₃)`
/// from the two `s`-series; both sides are compared in `τ`.
pub fn ternary_factorization_check(order: usize) -> bool {
    let uu = u_shift();
    let one = MSeries::one(Var::Tau, order);
    let t = mpoly(Var::Tau, order, vec![MarkerPoly::zero(), uu.clone()]);
    let one_minus = &one - &t;
    let x_num = &t * &one_minus.pow(2);
    let x_den = &one_minus + &t.mul_coeff(&uu);
    let x = x_num.checked_div(&x_den).unwrap();
    // r₁(x(τ)) must be 1/(1-t)
    let r1_x = ternary_root_series(TernaryRoot::R1, order).subst_marker(Marker::U, &uu);
    let r1 = r1_x.with_var(Var::Tau).compose(&x).unwrap();
    if r1 != one_minus.inverse().unwrap() {
        return false;
    }
    let s_order = 2 * order + 1;
    let prod = &ternary_root_series(TernaryRoot::R2, s_order) * &ternary_root_series(TernaryRoot::R3, s_order);
    if !prod.extract_progression(2, 1, Var::Tau).is_zero() {
        return false;
    }
    let inv_prod = prod.extract_progression(2, 0, Var::Tau).truncate(order);
    // r₁·u·x·r₂·r₃ = -1  ⇔  u·x·r₁ + (1/r₂)(1/r₃) = 0
    let lhs = (&x * &r1).mul_coeff(&uu);
    (&lhs + &inv_prod).is_zero()
}
