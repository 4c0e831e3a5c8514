use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::numkernel::{fmt_rational, rat, ExactRational};

/// Marker variables that ride along as polynomial coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Marker {
    /// end level, middle edges, leaves
    U,
    /// red/blue edges, valley index
    W,
    /// the shifted marker `u - 1`
    CapU,
}

impl Marker {
    pub const ALL: [Marker; 3] = [Marker::U, Marker::W, Marker::CapU];

    fn slot(self) -> usize {
        match self {
            Marker::U => 0,
            Marker::W => 1,
            Marker::CapU => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Marker::U => "u",
            Marker::W => "w",
            Marker::CapU => "U",
        }
    }
}

/// Exponent vector over `(u, w, U)`, ordered degree-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u32; 3]);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn of(m: Marker, e: u32) -> Mono {
        let mut v = [0; 3];
        v[m.slot()] = e;
        Mono(v)
    }

    pub fn exp(&self, m: Marker) -> u32 {
        self.0[m.slot()]
    }

    fn times(&self, o: &Mono) -> Mono {
        Mono([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sparse polynomial in the markers with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct MarkerPoly {
    terms: BTreeMap<Mono, ExactRational>,
}

impl MarkerPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::monomial(Mono::default(), c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn var(m: Marker) -> Self {
        Self::monomial(Mono::of(m, 1), ExactRational::one())
    }

    pub fn monomial(mono: Mono, c: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &ExactRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Mono) -> ExactRational {
        self.terms.get(mono).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn constant_term(&self) -> ExactRational {
        self.coeff(&Mono::default())
    }

    /// The value when no marker occurs.
    pub fn as_scalar(&self) -> Option<ExactRational> {
        match self.terms.len() {
            0 => Some(ExactRational::zero()),
            1 => self.terms.get(&Mono::default()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn add_term(&mut self, mono: Mono, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(ExactRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add_assign_ref(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(*m, -c);
        }
    }

    /// Adds `a * b` in place.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.times(mb), ca * cb);
            }
        }
    }

    /// Collects the coefficient of `m^e`, leaving the other markers in place.
    pub fn marker_coeff(&self, m: Marker, e: u32) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            if mono.exp(m) == e {
                let mut v = mono.0;
                v[m.slot()] = 0;
                out.add_term(Mono(v), c.clone());
            }
        }
        out
    }

    /// Substitutes a rational value for one marker.
    pub fn eval_marker(&self, m: Marker, val: &ExactRational) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let mut v = mono.0;
            let e = v[m.slot()];
            v[m.slot()] = 0;
            out.add_term(Mono(v), c * num_traits::pow(val.clone(), e as usize));
        }
        out
    }

    /// Substitutes a polynomial for one marker.
    pub fn subst_marker(&self, m: Marker, val: &MarkerPoly) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let mut v = mono.0;
            let e = v[m.slot()];
            v[m.slot()] = 0;
            let rest = Self::monomial(Mono(v), c.clone());
            out.add_product(&rest, &val.pow(e));
        }
        out
    }

    pub fn derivative(&self, m: Marker) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let e = mono.exp(m);
            if e > 0 {
                let mut v = mono.0;
                v[m.slot()] = e - 1;
                out.add_term(Mono(v), c * rat(e));
            }
        }
        out
    }

    pub fn degree_in(&self, m: Marker) -> u32 {
        self.terms.keys().map(|mono| mono.exp(m)).max().unwrap_or(0)
    }

    /// Coefficients of the univariate polynomial in `m` (other markers must be absent).
    pub fn univariate(&self, m: Marker) -> Option<Vec<ExactRational>> {
        let mut out = vec![ExactRational::zero(); self.degree_in(m) as usize + 1];
        for (mono, c) in &self.terms {
            if mono.degree() != mono.exp(m) {
                return None;
            }
            out[mono.exp(m) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(m: Marker, coeffs: &[ExactRational]) -> Self {
        let mut out = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out.add_term(Mono::of(m, e as u32), c.clone());
        }
        out
    }
}

fn fmt_mono(mono: &Mono) -> String {
    let mut parts = Vec::new();
    for m in Marker::ALL {
        match mono.exp(m) {
            0 => {}
            1 => parts.push(m.name().to_string()),
            e => parts.push(format!("{}^{}", m.name(), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MarkerPoly {
    /// Descending degree-lexicographic order, e.g. `w^2 + 4*w + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let body = fmt_mono(mono);
            if body.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), body)?;
            }
        }
        Ok(())
    }
}

impl Add for &MarkerPoly {
    type Output = MarkerPoly;
    fn add(self, o: &MarkerPoly) -> MarkerPoly {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl Sub for &MarkerPoly {
    type Output = MarkerPoly;
    fn sub(self, o: &MarkerPoly) -> MarkerPoly {
        let mut out = self.clone();
        out.sub_assign_ref(o);
        out
    }
}

impl Mul for &MarkerPoly {
    type Output = MarkerPoly;
    fn mul(self, o: &MarkerPoly) -> MarkerPoly {
        let mut out = MarkerPoly::zero();
        out.add_product(self, o);
        out
    }
}

impl Neg for &MarkerPoly {
    type Output = MarkerPoly;
    fn neg(self) -> MarkerPoly {
        MarkerPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl From<i64> for MarkerPoly {
    fn from(c: i64) -> Self {
        MarkerPoly::int(c)
    }
}

impl From<ExactRational> for MarkerPoly {
    fn from(c: ExactRational) -> Self {
        MarkerPoly::constant(c)
    }
}
