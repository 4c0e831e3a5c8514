//! Exact integer and rational primitives: binomials, generalized trinomial
//! coefficients and divisor counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::MarkerPoly;

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type ExactRational = BigRational;

/// Lifts an integer into the rationals.
pub fn rat(n: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(n.into())
}

/// Builds `p/q` in lowest terms. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> ExactRational {
    ExactRational::new(BigInt::from(p), BigInt::from(q))
}

/// Returns the numerator when `r` is integral.
pub fn as_integer(r: &ExactRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// Renders `r` as `p` or `p/q`.
pub fn fmt_rational(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion used only by the asymptotic layer.
pub fn to_f64(r: &ExactRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Binomial coefficient with `C(n,k) = 0` for `k < 0` and the
/// negative-upper-index rule `C(n,k) = (-1)^k C(k-n-1,k)` for `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binomial(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Multinomial `n!/(i! j! (n-i-j)!)`, zero when any part is negative.
fn trinomial_weight(n: i64, i: i64, j: i64) -> BigInt {
    if i < 0 || j < 0 || i + j > n {
        return BigInt::zero();
    }
    binomial(n, i) * binomial(n - i, j)
}

/// `[t^k](1 + a t + t^2)^n` with a polynomial middle coefficient.
pub fn trinomial(n: i64, a: &MarkerPoly, k: i64) -> MarkerPoly {
    assert!(n >= 0, "trinomial needs n >= 0");
    let mut out = MarkerPoly::zero();
    if k < 0 || k > 2 * n {
        return out;
    }
    // `i` factors contribute t^2, `k - 2i` factors contribute a*t
    let mut i = 0;
    while 2 * i <= k {
        let m = k - 2 * i;
        let w = trinomial_weight(n, i, m);
        if !w.is_zero() {
            out = &out + &a.pow(m as u32).scale(&rat(w));
        }
        i += 1;
    }
    out
}

/// `[t^k](1 + a t + t^2)^n` for an integer middle coefficient.
pub fn trinomial_int(n: i64, a: i64, k: i64) -> BigInt {
    assert!(n >= 0, "trinomial needs n >= 0");
    if k < 0 || k > 2 * n {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    let mut i = 0;
    while 2 * i <= k {
        let m = k - 2 * i;
        let w = trinomial_weight(n, i, m);
        if !w.is_zero() {
            acc += w * BigInt::from(a).pow(m as u32);
        }
        i += 1;
    }
    acc
}

/// Full coefficient row of `(1 + a t + t^2)^n`, length `2n + 1`.
///
/// Uses the linear recurrence `k c_k = (n+1-k) a c_{k-1} + (2n+2-k) c_{k-2}`
/// obtained from `P (P^n)' = n P' P^n`.
pub fn trinomial_row(n: usize, a: i64) -> Vec<BigInt> {
    let len = 2 * n + 1;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    let a = BigInt::from(a);
    let np1 = n as i64 + 1;
    for k in 1..len {
        let ki = k as i64;
        let mut acc = &c[k - 1] * &a * (np1 - ki);
        if k >= 2 {
            acc += &c[k - 2] * (2 * np1 - ki);
        }
        c[k] = acc / ki;
    }
    c
}

/// Number of positive divisors of `h`.
pub fn divisor_count(h: i64) -> Result<u64> {
    if h < 1 {
        return Err(Error::Domain(format!("divisor_count needs h >= 1, got {h}")));
    }
    let mut count = 0u64;
    let mut d = 1i64;
    while d * d <= h {
        if h % d == 0 {
            count += if d * d == h { 1 } else { 2 };
        }
        d += 1;
    }
    Ok(count)
}

/// `C(n,k)` as a rational, convenient inside series code.
pub fn binomial_q(n: i64, k: i64) -> ExactRational {
    rat(binomial(n, k))
}
