use std::fmt::Debug;

use num_traits::{One, Zero};

use super::marker::MarkerPoly;
use crate::numkernel::{fmt_rational, ExactRational};

/// Coefficient ring of a truncated series.
///
/// Implemented for plain rationals (fast univariate work) and for
/// [`MarkerPoly`] (bivariate generating functions).
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: ExactRational) -> Self;
    /// `Some` exactly when the value carries no marker.
    fn as_scalar(&self) -> Option<ExactRational>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, r: &ExactRational) -> Self;
    fn add_assign(&mut self, o: &Self);
    fn add_product(&mut self, a: &Self, b: &Self);
    fn render(&self) -> String;
}

impl Coeff for ExactRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rat(r: ExactRational) -> Self {
        r
    }
    fn as_scalar(&self) -> Option<ExactRational> {
        Some(self.clone())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &ExactRational) -> Self {
        self * r
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            *self += a * b;
        }
    }
    fn render(&self) -> String {
        fmt_rational(self)
    }
}

impl Coeff for MarkerPoly {
    fn zero() -> Self {
        MarkerPoly::zero()
    }
    fn one() -> Self {
        MarkerPoly::one()
    }
    fn is_zero(&self) -> bool {
        MarkerPoly::is_zero(self)
    }
    fn from_rat(r: ExactRational) -> Self {
        MarkerPoly::constant(r)
    }
    fn as_scalar(&self) -> Option<ExactRational> {
        MarkerPoly::as_scalar(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &ExactRational) -> Self {
        MarkerPoly::scale(self, r)
    }
    fn add_assign(&mut self, o: &Self) {
        self.add_assign_ref(o);
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        MarkerPoly::add_product(self, a, b);
    }
    fn render(&self) -> String {
        self.to_string()
    }
}
