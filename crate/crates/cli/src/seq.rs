use pathgarden::gfpaths::{
    amplitude_series, amplitude_total_series, deutsch_phi, dual_skew_gj_series, hoppy_negative_series, kemp_peak_series,
    kemp_valley_series, skew_red_fixed_power, skew_red_series, skew_sj_series, ubar, AmplitudeKind, Bound,
};
use pathgarden::gftrees::{
    horton_rp, marked_count_series, marked_height_ph, retakh_full, retakh_gk, ternary_t, unary_binary_count,
};
use pathgarden::numkernel::fmt_rational;
use pathgarden::series::QSeries;

use crate::{output, Failure, Outcome, Params};

pub const FAMILIES: [&str; 15] = [
    "a002212",
    "skew-sj",
    "dual-gj",
    "hoppy-neg",
    "ternary-T",
    "deutsch-phi",
    "amplitude",
    "kemp-valley",
    "kemp-peak",
    "horton-Rp",
    "marked-ph",
    "retakh",
    "skew-red",
    "ubar",
    "retakh-Gk",
];

pub fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("family '{family}' needs --{flag}")))
}

fn all(s: &QSeries) -> Vec<(usize, String)> {
    s.coeffs().iter().enumerate().map(|(n, c)| (n, fmt_rational(c))).collect()
}

/// Coefficients at `z^{j}, z^{j+2}, ...`; the others vanish by parity.
fn parity(s: &QSeries, j: usize) -> Vec<(usize, String)> {
    all(s).into_iter().filter(|(n, _)| *n >= j && (n - j) % 2 == 0).collect()
}

pub fn run(p: &Params) -> Outcome {
    let f = p.family.as_str();
    let n = need(p.n, "n", f)?;
    let rows = match f {
        "a002212" => (0..=n).map(|i| (i, unary_binary_count(i, 1).to_string())).collect(),
        "skew-sj" => {
            let j = need(p.j, "j", f)?;
            parity(&skew_sj_series(j, n), j)
        }
        "dual-gj" => {
            let j = need(p.j, "j", f)?;
            parity(&dual_skew_gj_series(j, n), j)
        }
        "hoppy-neg" => all(&hoppy_negative_series(kary(p, f)?, n)),
        "ubar" => all(&ubar(kary(p, f)?, n)),
        "ternary-T" => (0..=n)
            .map(|i| {
                let v = match p.k {
                    Some(k) => ternary_t(i, k).to_string(),
                    None => (0..i.max(1)).map(|k| ternary_t(i, k).to_string()).collect::<Vec<_>>().join(" "),
                };
                (i, v)
            })
            .collect(),
        "deutsch-phi" => {
            let t = need(p.t, "t", f)?;
            let j = need(p.j, "j", f)?;
            let bound = p.m.map_or(Bound::Infinite, Bound::Finite);
            all(&deutsch_phi(t, j, bound, n)?)
        }
        "amplitude" => match p.k {
            None => all(&amplitude_total_series(n)),
            Some(amp) => {
                let kind = if amp % 2 == 1 { AmplitudeKind::Horiz } else { AmplitudeKind::NoHoriz };
                all(&amplitude_series(amp / 2, kind, n))
            }
        },
        "kemp-valley" => all(&kemp_valley_series(n)),
        "kemp-peak" => all(&kemp_peak_series(n)),
        "horton-Rp" => {
            let pp = need(p.k, "k", f)?;
            let a = p.a.unwrap_or(0);
            if a < 0 {
                return Err(Failure::Usage("--a must be non-negative".into()));
            }
            all(&horton_rp(pp as u32, a, n))
        }
        "marked-ph" => match p.k {
            Some(h) => all(&marked_height_ph(h, n)),
            None => all(&marked_count_series(n)),
        },
        "retakh" => all(&retakh_full(n)),
        "retakh-Gk" => {
            let k = need(p.k, "k", f)?;
            if k == 0 {
                return Err(Failure::Usage("--k must be at least 1".into()));
            }
            all(&retakh_gk(k, n))
        }
        "skew-red" => match p.w_power {
            Some(kred) => all(&skew_red_fixed_power(kred, n)),
            None => skew_red_series(n).coeffs().iter().enumerate().map(|(i, c)| (i, c.to_string())).collect(),
        },
        _ => return Err(Failure::Usage(format!("unknown family '{f}'; known: {}", FAMILIES.join(", ")))),
    };
    Ok(output::rows(p.format, &rows))
}

fn kary(p: &Params, family: &str) -> Result<u32, Failure> {
    let k = need(p.k, "k", family)?;
    if k == 0 {
        return Err(Failure::Usage("--k must be at least 1".into()));
    }
    Ok(k as u32)
}
