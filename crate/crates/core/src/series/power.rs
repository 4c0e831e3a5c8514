use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::coeff::Coeff;
use super::marker::{Marker, MarkerPoly};
use crate::error::{Error, Result};
use crate::numkernel::{rat, ExactRational};

/// Name of the size variable a series is expanded in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Z,
    X,
    V,
    T,
    W,
    Tau,
    /// `s² = τ`, for expansions in half-integer powers of `τ`.
    S,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::Z => "z",
            Var::X => "x",
            Var::V => "v",
            Var::T => "t",
            Var::W => "w",
            Var::Tau => "tau",
            Var::S => "s",
        };
        f.write_str(s)
    }
}

/// Truncated power series `c_0 + c_1 var + ... + c_N var^N`.
///
/// Everything past `N` is unknown, so mixed-order arithmetic keeps the
/// smaller order.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<C: Coeff = MarkerPoly> {
    var: Var,
    coeffs: Vec<C>,
}

/// Series with plain rational coefficients.
pub type QSeries = PowerSeries<ExactRational>;
/// Series whose coefficients are marker polynomials.
pub type MSeries = PowerSeries<MarkerPoly>;

impl<C: Coeff> PowerSeries<C> {
    pub fn new(var: Var, mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { var, coeffs }
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::new(var, Vec::new(), order)
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::constant(var, order, C::one())
    }

    pub fn constant(var: Var, order: usize, c: C) -> Self {
        Self::new(var, vec![c], order)
    }

    /// `c * var^k`.
    pub fn monomial(var: Var, order: usize, k: usize, c: C) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series variable itself.
    pub fn identity(var: Var, order: usize) -> Self {
        Self::monomial(var, order, 1, C::one())
    }

    /// Polynomial with integer coefficients.
    pub fn from_ints(var: Var, order: usize, cs: &[i64]) -> Self {
        let coeffs = cs.iter().take(order + 1).map(|&c| C::from_rat(rat(c))).collect();
        Self::new(var, coeffs, order)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `var^n`; panics when `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &C {
        assert!(n <= self.order(), "coefficient {n} beyond truncation order {}", self.order());
        &self.coeffs[n]
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self { var: self.var, coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Raises the order by appending zeros; only valid for exact polynomials.
    pub fn pad_to(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order.max(self.order()) + 1, C::zero());
        Self { var: self.var, coeffs }
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_var(&self, o: &Self) -> Result<()> {
        if self.var != o.var {
            return Err(Error::Usage(format!("series variables differ: {} vs {}", self.var, o.var)));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_var(o)?;
        let n = self.order().min(o.order());
        let coeffs = (0..=n).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect();
        Ok(Self { var: self.var, coeffs })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.check_var(o)?;
        let n = self.order().min(o.order());
        let coeffs = (0..=n).map(|i| self.coeffs[i].sub(&o.coeffs[i])).collect();
        Ok(Self { var: self.var, coeffs })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_var(o)?;
        let n = self.order().min(o.order());
        Ok(Self { var: self.var, coeffs: mul_trunc(&self.coeffs, &o.coeffs, n) })
    }

    pub fn scale(&self, r: &ExactRational) -> Self {
        Self { var: self.var, coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        Self { var: self.var, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.var, self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.var, self.order()).checked_div(self)
    }

    /// `self / g` where `g(0)` is a nonzero marker-free constant.
    pub fn checked_div(&self, g: &Self) -> Result<Self> {
        self.check_var(g)?;
        let g0 = g.coeffs[0]
            .as_scalar()
            .filter(|c| !Zero::is_zero(c))
            .ok_or_else(|| Error::SingularDivision(format!("constant term {:?} is not invertible", g.coeffs[0])))?;
        let inv = ExactRational::from_integer(1.into()) / g0;
        let n = self.order().min(g.order());
        let mut q: Vec<C> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            let mut sub = C::zero();
            for i in 1..=k {
                sub.add_product(&g.coeffs[i], &q[k - i]);
            }
            acc = acc.sub(&sub);
            q.push(acc.scale(&inv));
        }
        Ok(Self { var: self.var, coeffs: q })
    }

    /// Division after cancelling a common power of the variable.
    ///
    /// The result loses as many orders as were cancelled.
    pub fn quotient(&self, g: &Self) -> Result<Self> {
        let vg = g
            .valuation()
            .ok_or_else(|| Error::SingularDivision("division by the zero series".into()))?;
        let num = self.shift_down(vg)?;
        let den = g.shift_down(vg)?;
        num.checked_div(&den)
    }

    /// Square root with constant term `+1`; the radicand must start with 1.
    pub fn sqrt(&self) -> Result<Self> {
        match self.coeffs[0].as_scalar() {
            Some(c) if c == ExactRational::from_integer(1.into()) => {}
            _ => {
                return Err(Error::UnsupportedBranch(format!(
                    "sqrt needs constant term 1, got {:?}",
                    self.coeffs[0]
                )))
            }
        }
        let half = ExactRational::new(1.into(), 2.into());
        let n = self.order();
        let mut y: Vec<C> = Vec::with_capacity(n + 1);
        y.push(C::one());
        for k in 1..=n {
            let mut cross = C::zero();
            for i in 1..k {
                cross.add_product(&y[i], &y[k - i]);
            }
            y.push(self.coeffs[k].sub(&cross).scale(&half));
        }
        Ok(Self { var: self.var, coeffs: y })
    }

    /// `self(g)`; requires `g(0) = 0`. The result order is the smaller of the two.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::Composition("inner series must vanish at 0".into()));
        }
        let n = self.order().min(g.order());
        // Horner from the top; the partial result at step i is later multiplied
        // by g^i, so only its first n - i + 1 coefficients matter.
        let mut acc: Vec<C> = vec![self.coeffs[n].clone()];
        for i in (0..n).rev() {
            let keep = n - i;
            let mut next = mul_trunc(&g.coeffs, &acc, keep);
            next.resize(keep + 1, C::zero());
            next[0] = next[0].add(&self.coeffs[i]);
            acc = next;
        }
        acc.resize(n + 1, C::zero());
        Ok(Self { var: g.var, coeffs: acc })
    }

    /// Multiplies by `var^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![C::zero(); k.min(n + 1)];
        coeffs.extend(self.coeffs.iter().take((n + 1).saturating_sub(k)).cloned());
        Self { var: self.var, coeffs }
    }

    /// Divides by `var^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::Domain(format!("cannot divide order-{} series by {}^{k}", self.order(), self.var)));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::SingularDivision(format!("series not divisible by {}^{k}", self.var)));
        }
        Ok(Self { var: self.var, coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut coeffs: Vec<C> = (1..=n).map(|i| self.coeffs[i].scale(&rat(i as i64))).collect();
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        let order = n.saturating_sub(1);
        Self::new(self.var, coeffs, order)
    }

    /// `f(x) -> f(y^k)` in a new variable; order becomes `k(N+1) - 1`.
    pub fn expand_power(&self, k: usize, var: Var) -> Self {
        let order = k * (self.order() + 1) - 1;
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self { var, coeffs }
    }

    /// Keeps the coefficients at `var^{k·i + r}` and re-indexes them by `i`.
    pub fn extract_progression(&self, k: usize, r: usize, var: Var) -> Self {
        let coeffs: Vec<C> = self.coeffs.iter().skip(r).step_by(k).cloned().collect();
        let order = coeffs.len().saturating_sub(1);
        Self::new(var, coeffs, order)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries { var: self.var, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// One line per coefficient: `n<TAB>value`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{n}\t{}\n", c.render()));
        }
        out
    }
}

impl QSeries {
    pub fn to_marker(&self) -> MSeries {
        self.map(|c| MarkerPoly::constant(c.clone()))
    }

    /// Coefficients as integers, `None` if any is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<num_bigint::BigInt>> {
        self.coeffs.iter().map(crate::numkernel::as_integer).collect()
    }
}

impl MSeries {
    /// Marker-free view, `None` if some coefficient carries a marker.
    pub fn to_scalar(&self) -> Option<QSeries> {
        let coeffs: Option<Vec<_>> = self.coeffs.iter().map(|c| c.as_scalar()).collect();
        coeffs.map(|c| PowerSeries { var: self.var, coeffs: c })
    }

    pub fn eval_marker(&self, m: Marker, val: &ExactRational) -> Self {
        self.map(|c| c.eval_marker(m, val))
    }

    pub fn marker_coeff(&self, m: Marker, e: u32) -> Self {
        self.map(|c| c.marker_coeff(m, e))
    }

    pub fn marker_derivative(&self, m: Marker) -> Self {
        self.map(|c| c.derivative(m))
    }

    pub fn subst_marker(&self, m: Marker, val: &MarkerPoly) -> Self {
        self.map(|c| c.subst_marker(m, val))
    }
}

/// Cauchy product of two coefficient slices up to index `n`.
pub(crate) fn mul_trunc<C: Coeff>(a: &[C], b: &[C], n: usize) -> Vec<C> {
    let mut out = vec![C::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j].add_product(ai, bj);
        }
    }
    out
}

impl<C: Coeff> Add for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn add(self, o: &PowerSeries<C>) -> PowerSeries<C> {
        self.checked_add(o).expect("series addition")
    }
}

impl<C: Coeff> Sub for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn sub(self, o: &PowerSeries<C>) -> PowerSeries<C> {
        self.checked_sub(o).expect("series subtraction")
    }
}

impl<C: Coeff> Mul for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn mul(self, o: &PowerSeries<C>) -> PowerSeries<C> {
        self.checked_mul(o).expect("series multiplication")
    }
}

impl<C: Coeff> Neg for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn neg(self) -> PowerSeries<C> {
        self.map(|c| c.neg())
    }
}

impl<C: Coeff> PowerSeries<C> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<C: Coeff> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({})", c.render())?,
                1 => write!(f, "({}){}", c.render(), self.var)?,
                _ => write!(f, "({}){}^{}", c.render(), self.var, n)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}
