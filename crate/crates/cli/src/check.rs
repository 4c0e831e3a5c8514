use std::collections::BTreeSet;

use num_bigint::BigInt;
use pathgarden::biject::{
    marked_to_skew, motzkin3_to_multiedge, multiedge_to_3motzkin, rotation_multiedge_to_unarybinary,
    rotation_unarybinary_to_multiedge, skew_to_marked,
};
use pathgarden::gfpaths::{
    amplitude_coeff, amplitude_series, deng_mansour_count, deutsch_band_solve, deutsch_phi, dual_skew_coeff,
    dual_skew_gj_series, skew_sj_coeff, skew_sj_series, AmplitudeKind, Bound,
};
use pathgarden::gftrees::{
    horton_rp, horton_sp, horton_sp_coeff, marked_count_series, marked_height_ph, marked_height_ph_rec, retakh_bounded,
    retakh_full, ternary_root_series, ternary_t, unary_binary_count, TernaryRoot,
};
use pathgarden::numkernel::as_integer;
use pathgarden::pathgen::{
    gen_deutsch, gen_dual_skew, gen_kdyck, gen_motzkin, gen_retakh, gen_skew, path_stats, Step,
};
use pathgarden::series::{Marker, QSeries};
use pathgarden::treegen::{gen_hex, gen_marked, gen_multiedge, gen_ternary, gen_unary_binary, reg, tree_stats, TreeNode};

use crate::seq::need;
use crate::{output, Failure, Outcome, Params};

pub const FAMILIES: [&str; 11] = [
    "a002212",
    "skew",
    "dual-skew",
    "kdyck",
    "deutsch-strip",
    "amplitude",
    "ternary",
    "horton",
    "marked",
    "retakh",
    "bijections",
];

/// Collects one verdict per case.
#[derive(Default)]
struct Report {
    rows: Vec<(String, String)>,
    failed: bool,
}

impl Report {
    fn case(&mut self, label: String, values: &[BigInt]) {
        let ok = values.windows(2).all(|w| w[0] == w[1]);
        let shown = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" = ");
        self.rows.push((label, if ok { format!("ok {shown}") } else { format!("FAIL {shown}") }));
        self.failed |= !ok;
    }

    fn flag(&mut self, label: String, ok: bool) {
        self.rows.push((label, if ok { "ok".into() } else { "FAIL".into() }));
        self.failed |= !ok;
    }
}

fn int(s: &QSeries, n: usize) -> BigInt {
    as_integer(s.coeff(n)).unwrap_or_else(|| BigInt::from(-1))
}

fn len<T>(v: Vec<T>) -> BigInt {
    BigInt::from(v.len())
}

pub fn run(p: &Params) -> Outcome {
    let f = p.family.as_str();
    let max = need(p.max, "max", f)?;
    let mut r = Report::default();
    match f {
        "a002212" => {
            let marked = marked_count_series(max + 1);
            for n in 0..=max {
                r.case(
                    format!("n={n}"),
                    &[
                        unary_binary_count(n, 1),
                        int(&marked, n + 1),
                        len(gen_hex(n)),
                        len(gen_multiedge(n)),
                        len(gen_marked(n + 1)),
                        len(gen_skew(2 * n, 0)),
                    ],
                );
            }
        }
        "skew" => {
            for j in 0..=max {
                let s = skew_sj_series(j, max);
                for n in (j..=max).step_by(2) {
                    r.case(format!("j={j} n={n}"), &[skew_sj_coeff(n, j), int(&s, n), len(gen_skew(n, j as i64))]);
                }
            }
        }
        "dual-skew" => {
            for j in 0..=max {
                let g = dual_skew_gj_series(j, max);
                for n in (j..=max).step_by(2) {
                    let formula = dual_skew_coeff((n - j) / 2, j);
                    r.case(format!("j={j} n={n}"), &[formula, int(&g, n), len(gen_dual_skew(n, j as i64))]);
                }
            }
        }
        "kdyck" => {
            let k = need(p.k, "k", f)?.max(1) as u32;
            for n in 1..=max {
                for j in 0..=(k as i64 * n as i64) {
                    r.case(format!("k={k} n={n} j={j}"), &[deng_mansour_count(n, j, k), len(gen_kdyck(k, n, j, 0, true))]);
                }
            }
        }
        "deutsch-strip" => {
            let m = need(p.m, "m", f)?;
            if m == 0 {
                return Err(Failure::Usage("--m must be at least 1".into()));
            }
            for t in 0..m {
                let (band, _) = deutsch_band_solve(t, m, max)?;
                for (j, b) in band.iter().enumerate() {
                    let phi = deutsch_phi(t, j, Bound::Finite(m), max)?;
                    for n in 0..=max {
                        let brute = len(gen_deutsch(n, t as i64, 0, Some(m as i64 - 1), j as i64));
                        r.case(format!("m={m} t={t} j={j} n={n}"), &[int(&phi, n), int(b, n), brute]);
                    }
                }
            }
        }
        "amplitude" => {
            let paths: Vec<Vec<i64>> = (0..=max)
                .map(|n| gen_motzkin(n, 1, None).iter().map(|q| path_stats(q).amplitude).collect())
                .collect();
            for h in 0..=max / 2 {
                for (kind, amp) in [(AmplitudeKind::Horiz, 2 * h + 1), (AmplitudeKind::NoHoriz, 2 * h)] {
                    let s = amplitude_series(h, kind, max);
                    for (n, amps) in paths.iter().enumerate() {
                        let brute = BigInt::from(amps.iter().filter(|&&a| a == amp as i64).count());
                        r.case(format!("amp={amp} n={n}"), &[amplitude_coeff(n, h, kind), int(&s, n), brute]);
                    }
                }
            }
        }
        "ternary" => {
            let r1 = ternary_root_series(TernaryRoot::R1, max);
            for n in 0..=max {
                let mut hist = vec![0usize; n + 1];
                for t in gen_ternary(n) {
                    hist[tree_stats(&t).middle_edges] += 1;
                }
                for (k, &c) in hist.iter().enumerate() {
                    let series = r1.coeff(n).marker_coeff(Marker::U, k as u32).constant_term();
                    let series = as_integer(&series).unwrap_or_else(|| BigInt::from(-1));
                    r.case(format!("n={n} k={k}"), &[ternary_t(n, k), series, BigInt::from(c)]);
                }
            }
        }
        "horton" => {
            let a = p.a.unwrap_or(1);
            if a < 0 {
                return Err(Failure::Usage("--a must be non-negative".into()));
            }
            let trees: Vec<Vec<u32>> = (0..=max)
                .map(|n| gen_unary_binary(n, a as u32).iter().map(|t| reg(t).unwrap_or(u32::MAX)).collect())
                .collect();
            for pp in 0..=4u32 {
                let rp = horton_rp(pp, a, max);
                let sp = horton_sp(pp, a, max);
                for (n, regs) in trees.iter().enumerate() {
                    let exact = BigInt::from(regs.iter().filter(|&&g| g == pp).count());
                    let at_least = BigInt::from(regs.iter().filter(|&&g| g >= pp && g != u32::MAX).count());
                    r.case(format!("a={a} p={pp} n={n} reg=p"), &[int(&rp, n), exact]);
                    r.case(format!("a={a} p={pp} n={n} reg>=p"), &[horton_sp_coeff(n, pp, a), int(&sp, n), at_least]);
                }
            }
        }
        "marked" => {
            let trees: Vec<Vec<usize>> =
                (0..=max).map(|n| gen_marked(n).iter().map(|t| tree_stats(t).height_nodes).collect()).collect();
            for h in 1..=max {
                let closed = marked_height_ph(h, max);
                let rec = marked_height_ph_rec(h, max);
                for (n, hs) in trees.iter().enumerate().skip(1) {
                    let brute = BigInt::from(hs.iter().filter(|&&x| x <= h).count());
                    r.case(format!("h={h} n={n}"), &[int(&closed, n), int(&rec, n), brute]);
                }
            }
        }
        "retakh" => {
            let full = retakh_full(max + 1);
            for pairs in 0..=max {
                let paths = gen_retakh(pairs);
                r.case(format!("nodes={}", pairs + 1), &[int(&full, pairs + 1), len(paths.clone())]);
                for h in 1..=(pairs / 2 + 1) {
                    let bounded = retakh_bounded(h, max + 1);
                    let brute = paths.iter().filter(|q| path_stats(q).height <= 2 * h as i64).count();
                    r.case(format!("nodes={} height<={}", pairs + 1, 2 * h), &[int(&bounded, pairs + 1), BigInt::from(brute)]);
                }
            }
        }
        "bijections" => bijections(max, &mut r),
        _ => return Err(Failure::Usage(format!("unknown check family '{f}'; known: {}", FAMILIES.join(", ")))),
    }
    let verdict = if r.failed { "FAIL" } else { "PASS" };
    r.rows.push((f.to_string(), verdict.to_string()));
    let text = output::pairs(p.format, ("case", "result"), &r.rows);
    if r.failed {
        Err(Failure::Check(text))
    } else {
        Ok(text)
    }
}

fn multiplicity_excess(t: &TreeNode) -> usize {
    match t {
        TreeNode::MultiEdge { children } => children.iter().map(|(m, c)| *m as usize - 1 + multiplicity_excess(c)).sum(),
        _ => 0,
    }
}

fn bijections(max: usize, r: &mut Report) {
    for w in 1..=max {
        let trees = gen_multiedge(w);
        let mut images = BTreeSet::new();
        let mut ok = true;
        for t in &trees {
            let Ok(path) = multiedge_to_3motzkin(t) else {
                ok = false;
                continue;
            };
            let blue = path.steps.iter().filter(|s| **s == Step::Horizontal(2)).count();
            ok &= blue == multiplicity_excess(t);
            ok &= motzkin3_to_multiedge(&path).ok().as_ref() == Some(t);
            images.insert(path.to_string());
            let rotated = rotation_multiedge_to_unarybinary(t);
            ok &= rotated.is_ok_and(|b| rotation_unarybinary_to_multiedge(&b).ok().as_ref() == Some(t));
        }
        let codomain: BTreeSet<String> = gen_motzkin(w - 1, 3, None).iter().map(|q| q.to_string()).collect();
        r.flag(format!("multiedge->3motzkin weight={w} round-trip"), ok);
        r.flag(format!("multiedge->3motzkin weight={w} image"), images == codomain && images.len() == trees.len());
        let unary: BTreeSet<TreeNode> = gen_unary_binary(w, 1).into_iter().collect();
        let rotated: BTreeSet<TreeNode> = trees.iter().filter_map(|t| rotation_multiedge_to_unarybinary(t).ok()).collect();
        r.flag(format!("rotation weight={w} image"), rotated == unary);
    }
    for n in 1..=max + 1 {
        let trees = gen_marked(n);
        let mut images = BTreeSet::new();
        let mut ok = true;
        for t in &trees {
            let Ok(path) = marked_to_skew(t) else {
                ok = false;
                continue;
            };
            ok &= tree_stats(t).mark_count == path_stats(&path).red_count;
            ok &= skew_to_marked(&path).ok().as_ref() == Some(t);
            images.insert(path.to_string());
        }
        let codomain: BTreeSet<String> = gen_skew(2 * n - 2, 0).iter().map(|q| q.to_string()).collect();
        r.flag(format!("marked->skew nodes={n} round-trip"), ok);
        r.flag(format!("marked->skew nodes={n} image"), images == codomain && images.len() == trees.len());
    }
}
