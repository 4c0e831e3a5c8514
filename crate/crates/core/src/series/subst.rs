use super::coeff::Coeff;
use super::marker::{Marker, MarkerPoly};
use super::power::{PowerSeries, Var};
use crate::error::{Error, Result};
use crate::numkernel::ExactRational;

/// The relation `size = v · Φ(v)`, inverted to give `v` as a series in the size variable.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicSubstitution<C: Coeff = MarkerPoly> {
    phi: PowerSeries<C>,
    /// `Φ` is a polynomial, so coefficients past its order are genuinely zero.
    polynomial: bool,
    size_var: Var,
}

impl<C: Coeff> AlgebraicSubstitution<C> {
    /// `Φ` given as a truncated series in `v`.
    pub fn from_series(phi: PowerSeries<C>, size_var: Var) -> Result<Self> {
        Self::build(phi, false, size_var)
    }

    /// `Φ` given as an exact polynomial in `v`.
    pub fn polynomial(coeffs: Vec<C>, size_var: Var) -> Result<Self> {
        let order = coeffs.len().saturating_sub(1);
        Self::build(PowerSeries::new(Var::V, coeffs, order), true, size_var)
    }

    fn build(phi: PowerSeries<C>, polynomial: bool, size_var: Var) -> Result<Self> {
        if phi.var() != Var::V {
            return Err(Error::Usage("substitution kernel must be a series in v".into()));
        }
        match phi.coeff(0).as_scalar() {
            Some(c) if !num_traits::Zero::is_zero(&c) => {}
            _ => return Err(Error::Domain("substitution needs an invertible constant term".into())),
        }
        Ok(Self { phi, polynomial, size_var })
    }

    pub fn phi(&self) -> &PowerSeries<C> {
        &self.phi
    }

    pub fn size_var(&self) -> Var {
        self.size_var
    }

    fn phi_coeff(&self, i: usize) -> Option<&C> {
        if i <= self.phi.order() {
            Some(self.phi.coeff(i))
        } else {
            None
        }
    }

    /// `v(size)` to the requested order, one new coefficient per pass of `v <- size·Φ(v)`.
    ///
    /// For a truncated (non-polynomial) `Φ` the order is capped at `Φ`'s order + 1.
    pub fn invert(&self, order: usize) -> PowerSeries<C> {
        let order = if self.polynomial { order } else { order.min(self.phi.order() + 1) };
        let deg = if self.polynomial { self.phi.order() } else { order };
        let mut v = vec![C::zero(); order + 1];
        // pw[i][m] = [size^m] v^i for 1 <= i <= deg
        let mut pw: Vec<Vec<C>> = vec![vec![C::zero(); order + 1]; deg + 1];
        for n in 0..order {
            // complete column n of the power table, then v_{n+1} = [size^n] Φ(v)
            if n >= 1 {
                pw[1][n] = v[n].clone();
                for i in 2..=deg.min(n) {
                    let mut acc = C::zero();
                    for j in 1..=(n + 1 - i) {
                        acc.add_product(&v[j], &pw[i - 1][n - j]);
                    }
                    pw[i][n] = acc;
                }
            }
            let mut next = if n == 0 { self.phi.coeff(0).clone() } else { C::zero() };
            for i in 1..=deg.min(n) {
                if let Some(p) = self.phi_coeff(i) {
                    next.add_product(p, &pw[i][n]);
                }
            }
            v[n + 1] = next;
        }
        PowerSeries::new(self.size_var, v, order)
    }

    /// Pushes an expression in `v` through `v(size)`.
    pub fn eval_in_v(&self, expr: &PowerSeries<C>, order: usize) -> Result<PowerSeries<C>> {
        if expr.var() != Var::V {
            return Err(Error::Usage("expression must be a series in v".into()));
        }
        if self.polynomial {
            return Ok(self.lagrange(expr, order));
        }
        let v = self.invert(order);
        expr.compose(&v)
    }

    /// `[size^n] F(v) = [v^n] F(v) Φ(v)^{n-1} (Φ(v) - vΦ'(v))` for `n >= 1`.
    fn lagrange(&self, expr: &PowerSeries<C>, order: usize) -> PowerSeries<C> {
        let n_max = order.min(expr.order());
        let deg = self.phi.order();
        let phi = self.phi.coeffs();
        // K = Φ - vΦ' has coefficients (1 - i) φ_i
        let k: Vec<C> = phi
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&ExactRational::from_integer((1 - i as i64).into())))
            .collect();
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(expr.coeff(0).clone());
        // row = Φ^{n-1} truncated to degree n_max
        let mut row = vec![C::one()];
        for n in 1..=n_max {
            if n >= 2 {
                let mut next = vec![C::zero(); (row.len() + deg).min(n_max + 1)];
                for (i, r) in row.iter().enumerate() {
                    for (j, p) in phi.iter().enumerate() {
                        if i + j < next.len() {
                            next[i + j].add_product(r, p);
                        }
                    }
                }
                row = next;
            }
            // [v^m](row·K)
            let rk = |m: usize| {
                let mut acc = C::zero();
                for (j, kj) in k.iter().enumerate().take(m + 1) {
                    if let Some(r) = row.get(m - j) {
                        acc.add_product(kj, r);
                    }
                }
                acc
            };
            let mut acc = C::zero();
            for i in 0..=n {
                let f = expr.coeff(i);
                if !f.is_zero() {
                    acc.add_product(f, &rk(n - i));
                }
            }
            out.push(acc);
        }
        PowerSeries::new(self.size_var, out, n_max)
    }
}

impl AlgebraicSubstitution<ExactRational> {
    /// `Φ = 1 + (a+2)v + v²`; `a = 0` is the binary world `z = v/(1+v)²`.
    pub fn unary_binary(a: i64, size_var: Var) -> Self {
        Self::quadratic(a + 2, size_var)
    }

    /// `Φ = 1 + c v + v²`.
    pub fn quadratic(c: i64, size_var: Var) -> Self {
        let coeffs = [1, c, 1].iter().map(|&x| ExactRational::from_integer(x.into())).collect();
        Self::polynomial(coeffs, size_var).expect("constant term 1")
    }

    /// `z = v/(1+v+v²)`.
    pub fn motzkin() -> Self {
        Self::quadratic(1, Var::Z)
    }

    /// `x = v/(1+3v+v²)`.
    pub fn skew() -> Self {
        Self::quadratic(3, Var::X)
    }
}

impl AlgebraicSubstitution<MarkerPoly> {
    /// `x = v/(1+(2+w)v+v²)`, the red-edge world.
    pub fn skew_marked() -> Self {
        let mid = &MarkerPoly::int(2) + &MarkerPoly::var(Marker::W);
        Self::polynomial(vec![MarkerPoly::one(), mid, MarkerPoly::one()], Var::X).expect("constant term 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::QSeries;

    #[test]
    fn catalan_shift() {
        let s = AlgebraicSubstitution::unary_binary(0, Var::Z);
        let v = s.invert(6);
        assert_eq!(v, QSeries::from_ints(Var::Z, 6, &[0, 1, 2, 5, 14, 42, 132]));
    }

    #[test]
    fn skew_inverse() {
        let v = AlgebraicSubstitution::skew().invert(4);
        assert_eq!(v, QSeries::from_ints(Var::X, 4, &[0, 1, 3, 10, 36]));
    }

    #[test]
    fn motzkin_inverse_and_eval() {
        let s = AlgebraicSubstitution::motzkin();
        assert_eq!(s.invert(5), QSeries::from_ints(Var::Z, 5, &[0, 1, 1, 2, 4, 9]));
        let m = s.eval_in_v(&QSeries::from_ints(Var::V, 8, &[1, 1, 1]), 8).unwrap();
        assert_eq!(m, QSeries::from_ints(Var::Z, 8, &[1, 1, 2, 4, 9, 21, 51, 127, 323]));
        let one = s.eval_in_v(&QSeries::one(Var::V, 8), 8).unwrap();
        assert_eq!(one, QSeries::one(Var::Z, 8));
    }

    #[test]
    fn inversion_residual_vanishes() {
        let s = AlgebraicSubstitution::unary_binary(1, Var::Z);
        let v = s.invert(20);
        let phi_v = s.phi().pad_to(20).compose(&v).unwrap();
        let z = QSeries::identity(Var::Z, 20);
        assert!((&v - &(&z * &phi_v)).is_zero());
    }

    #[test]
    fn rejects_bad_kernel() {
        let phi = QSeries::from_ints(Var::V, 3, &[0, 1]);
        assert!(AlgebraicSubstitution::from_series(phi, Var::Z).is_err());
    }
}
