//! Truncated formal power series over exact coefficients, marker
//! polynomials, and the algebraic substitutions `size = v·Φ(v)`.

mod coeff;
mod marker;
mod power;
mod subst;

pub use coeff::Coeff;
pub use marker::{Marker, MarkerPoly, Mono};
pub use power::{MSeries, PowerSeries, QSeries, Var};
pub use subst::AlgebraicSubstitution;

/// Reads a series written as `n<TAB>value` lines back into rationals.
///
/// Only marker-free dumps are accepted.
pub fn parse_dump(var: Var, text: &str) -> Option<QSeries> {
    let mut coeffs = Vec::new();
    for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
        let (n, val) = line.split_once('\t')?;
        if n.trim().parse::<usize>().ok()? != i {
            return None;
        }
        coeffs.push(val.trim().parse::<crate::numkernel::ExactRational>().ok()?);
    }
    let order = coeffs.len().checked_sub(1)?;
    Some(PowerSeries::new(var, coeffs, order))
}
