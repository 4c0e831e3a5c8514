//! Acceptance runner: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pathgarden::asymptotics::{eval_law, exact_values, trend_check, AsymptoticLaw, LawKind};
use pathgarden::biject::{
    marked_to_skew, motzkin3_to_multiedge, multiedge_to_3motzkin, rotation_multiedge_to_unarybinary,
    rotation_unarybinary_to_multiedge, skew_to_marked,
};
use pathgarden::gfpaths::{
    amplitude_coeff, amplitude_series, deutsch_band_solve, deutsch_determinant, deutsch_phi, dual_skew_coeff,
    dual_skew_gj_series, hoppy_negative_series, kemp_finite_oracle, kemp_peak_series, kemp_valley_series,
    motzkin_bounded, motzkin_bounded_v, skew_red_derivative, skew_red_series, skew_sj_coeff, skew_sj_series,
    AmplitudeKind, Bound, BoundedVariant, Turn,
};
use pathgarden::gftrees::{
    horton_average_f64, horton_rp, ternary_factorization_check, ternary_t, ternary_xi, unary_binary_count,
};
use pathgarden::numkernel::{as_integer, binomial, frac, rat, to_f64, ExactRational};
use pathgarden::pathgen::{gen_deutsch, gen_dual_skew, gen_motzkin, gen_skew, path_stats, Step};
use pathgarden::series::{Marker, MarkerPoly, QSeries, Var};
use pathgarden::treegen::{gen_hex, gen_marked, gen_multiedge, gen_unary_binary, reg, tree_stats, TreeNode};

/// Outcome of one criterion: verdict plus a short note.
struct Verdict {
    ok: bool,
    note: String,
}

impl Verdict {
    fn new(ok: bool, note: impl Into<String>) -> Self {
        Self { ok, note: note.into() }
    }
}

/// First failing check, if any.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    count: usize,
}

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: impl FnOnce() -> String, got: T, want: T) {
        self.count += 1;
        if got != want {
            self.failures.push(format!("{}: got {got:?}, want {want:?}", label()));
        }
    }

    fn that(&mut self, label: impl FnOnce() -> String, ok: bool) {
        self.count += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    fn verdict(self, extra: &str) -> Verdict {
        match self.failures.first() {
            None => Verdict::new(true, format!("{} checks{extra}", self.count)),
            Some(f) => Verdict::new(false, format!("{} of {} checks failed, first: {f}{extra}", self.failures.len(), self.count)),
        }
    }
}

fn int(s: &QSeries, n: usize) -> BigInt {
    as_integer(s.coeff(n)).unwrap_or_else(|| BigInt::from(-1))
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn within(elapsed: Duration, budget: u64) -> (bool, String) {
    (elapsed.as_secs_f64() < budget as f64, format!(", {:.1}s of {budget}s", elapsed.as_secs_f64()))
}

fn c1_a002212() -> Verdict {
    let start = Instant::now();
    let want = [1u64, 1, 3, 10, 36, 137, 543, 2219, 9285, 39587];
    let mut c = Checks::default();
    for (n, &w) in want.iter().enumerate() {
        let w = BigInt::from(w);
        c.eq(|| format!("hex n={n}"), big(gen_hex(n).len()), w.clone());
        c.eq(|| format!("multi-edge n={n}"), big(gen_multiedge(n).len()), w.clone());
        c.eq(|| format!("marked n={n}"), big(gen_marked(n + 1).len()), w.clone());
        c.eq(|| format!("skew s0 n={n}"), big(gen_skew(2 * n, 0).len()), w.clone());
        c.eq(|| format!("unary-binary a=1 n={n}"), unary_binary_count(n, 1), w);
    }
    let (fast, t) = within(start.elapsed(), 10);
    c.that(|| "runtime".into(), fast);
    c.verdict(&t)
}

fn printed(terms: &[(usize, u64)]) -> Vec<(usize, BigInt)> {
    terms.iter().map(|&(e, v)| (e, BigInt::from(v))).collect()
}

fn c2_skew() -> Verdict {
    let start = Instant::now();
    let tables = [
        printed(&[(0, 1), (2, 1), (4, 3), (6, 10), (8, 36), (10, 137), (12, 543)]),
        printed(&[(1, 1), (3, 2), (5, 6), (7, 21), (9, 79), (11, 311), (13, 1265)]),
        printed(&[(2, 1), (4, 3), (6, 10), (8, 37), (10, 145), (12, 589), (14, 2455)]),
        printed(&[(3, 1), (5, 4), (7, 15), (9, 59), (11, 241), (13, 1010), (15, 4314)]),
    ];
    let mut c = Checks::default();
    for (j, table) in tables.iter().enumerate() {
        let s = skew_sj_series(j, 15);
        for (e, v) in table {
            c.eq(|| format!("s{j} series z^{e}"), int(&s, *e), v.clone());
            c.eq(|| format!("s{j} lambda z^{e}"), skew_sj_coeff(*e, j), v.clone());
        }
        for n in 0..=15 {
            c.eq(|| format!("s{j} lambda vs series z^{n}"), skew_sj_coeff(n, j), int(&s, n));
            if n <= 14 {
                c.eq(|| format!("s{j} brute n={n}"), big(gen_skew(n, j as i64).len()), int(&s, n));
            }
        }
    }
    let (fast, t) = within(start.elapsed(), 30);
    c.that(|| "runtime".into(), fast);
    c.verdict(&t)
}

fn c3_dual_skew() -> Verdict {
    let start = Instant::now();
    let tables = [
        printed(&[(0, 1), (2, 1), (4, 3), (6, 10), (8, 36), (10, 137), (12, 543), (14, 2219)]),
        printed(&[(1, 2), (3, 3), (5, 10), (7, 36), (9, 137), (11, 543), (13, 2219), (15, 9285)]),
        printed(&[(2, 4), (4, 8), (6, 29), (8, 111), (10, 442), (12, 1813), (14, 7609), (16, 32521)]),
        printed(&[(3, 8), (5, 20), (7, 78), (9, 315), (11, 1306), (13, 5527), (15, 23779), (17, 103699)]),
    ];
    let mut c = Checks::default();
    for (j, table) in tables.iter().enumerate() {
        let g = dual_skew_gj_series(j, 17);
        for (e, v) in table {
            c.eq(|| format!("G{j} series z^{e}"), int(&g, *e), v.clone());
            c.eq(|| format!("G{j} mu z^{e}"), dual_skew_coeff((e - j) / 2, j), v.clone());
        }
        for n in (j..=17).step_by(2) {
            c.eq(|| format!("G{j} mu vs series z^{n}"), dual_skew_coeff((n - j) / 2, j), int(&g, n));
            if n <= 14 {
                c.eq(|| format!("G{j} brute n={n}"), big(gen_dual_skew(n, j as i64).len()), int(&g, n));
            }
        }
    }
    let (fast, t) = within(start.elapsed(), 30);
    c.that(|| "runtime".into(), fast);
    c.verdict(&t)
}

fn wpoly(cs: &[i64]) -> MarkerPoly {
    cs.iter().enumerate().fold(MarkerPoly::zero(), |acc, (e, &k)| {
        &acc + &MarkerPoly::var(Marker::W).pow(e as u32).scale(&rat(k))
    })
}

fn c4_red_edges() -> Verdict {
    let mut c = Checks::default();
    let s = skew_red_series(4);
    let want = [wpoly(&[1]), wpoly(&[1]), wpoly(&[2, 1]), wpoly(&[5, 4, 1]), wpoly(&[14, 15, 6, 1])];
    for (n, w) in want.iter().enumerate() {
        c.eq(|| format!("S(0) x^{n}"), s.coeff(n).clone(), w.clone());
    }
    let paths = gen_skew(6, 0);
    let red: usize = paths.iter().map(|p| path_stats(p).red_count).sum();
    c.eq(|| "length-6 paths".into(), paths.len(), 10);
    c.eq(|| "red steps over length-6 paths".into(), red, 6);
    let avg = skew_red_derivative(3).coeff(3) / rat(paths.len() as i64);
    c.eq(|| "exact average".into(), avg, frac(6, 10));
    c.verdict("")
}

fn c5_hoppy() -> Verdict {
    let mut c = Checks::default();
    let printed: [(u32, [u64; 5]); 3] =
        [(2, [3, 16, 83, 442, 2420]), (3, [5, 34, 236, 1714, 12922]), (4, [7, 58, 505, 4650, 44677])];
    for (k, want) in printed {
        let s = hoppy_negative_series(k, 5);
        for (i, w) in want.iter().enumerate() {
            c.eq(|| format!("k={k} z^{}", i + 1), int(&s, i + 1), BigInt::from(*w));
        }
    }
    c.verdict("")
}

fn upoly(cs: &[(i64, i64)]) -> MarkerPoly {
    cs.iter().enumerate().fold(MarkerPoly::zero(), |acc, (e, &(p, q))| {
        &acc + &MarkerPoly::var(Marker::CapU).pow(e as u32).scale(&frac(p, q))
    })
}

fn c6_ternary() -> Verdict {
    let mut c = Checks::default();
    let rows: [&[u64]; 7] = [
        &[1],
        &[1],
        &[2, 1],
        &[5, 6, 1],
        &[14, 28, 12, 1],
        &[42, 120, 90, 20, 1],
        &[132, 495, 550, 220, 30, 1],
    ];
    for (n, row) in rows.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            c.eq(|| format!("T({n},{k})"), ternary_t(n, k), BigInt::from(v));
        }
    }
    for n in 1..=12usize {
        let sum: BigInt = (0..n).map(|k| ternary_t(n, k)).sum();
        c.eq(|| format!("row sum n={n}"), sum, binomial(3 * n as i64, n as i64 - 1) / BigInt::from(n));
    }
    c.that(|| "r1·u·x·r2·r3 = -1 to order 12".into(), ternary_factorization_check(12));
    let xi = ternary_xi(3);
    c.eq(|| "Xi tau^0".into(), xi.coeff(0).clone(), MarkerPoly::one());
    c.eq(|| "Xi tau^1".into(), xi.coeff(1).clone(), upoly(&[(5, 8), (4, 8)]));
    c.eq(|| "Xi tau^2".into(), xi.coeff(2).clone(), upoly(&[(71, 128), (136, 128), (64, 128)]));
    c.eq(|| "Xi tau^3".into(), xi.coeff(3).clone(), upoly(&[(541, 1024), (1596, 1024), (1568, 1024), (512, 1024)]));
    c.verdict("")
}

fn c7_amplitude() -> Verdict {
    let mut c = Checks::default();
    let mut table: Vec<(bool, i64, i64)> = gen_motzkin(4, 1, None)
        .iter()
        .map(|p| {
            let st = path_stats(p);
            (st.amplitude % 2 == 1, st.height, st.amplitude)
        })
        .collect();
    let mut want = vec![
        (true, 0, 1),
        (false, 1, 2),
        (false, 1, 2),
        (true, 1, 3),
        (true, 1, 3),
        (true, 1, 3),
        (false, 1, 2),
        (false, 1, 2),
        (false, 2, 4),
    ];
    table.sort();
    want.sort();
    c.eq(|| "length-4 table".into(), table, want);
    let order = 20;
    for h in 0..=6 {
        let split = &amplitude_series(h, AmplitudeKind::Horiz, order) + &amplitude_series(h, AmplitudeKind::NoHoriz, order);
        let mut exact_h = motzkin_bounded_v(h, BoundedVariant::All, order);
        if h > 0 {
            exact_h = &exact_h - &motzkin_bounded_v(h - 1, BoundedVariant::All, order);
        }
        c.eq(|| format!("Horiz+NoHoriz = M^(={h})"), split, exact_h);
    }
    let amps: Vec<Vec<i64>> =
        (0..=12).map(|n| gen_motzkin(n, 1, None).iter().map(|p| path_stats(p).amplitude).collect()).collect();
    for h in 0..=6 {
        for (kind, amp) in [(AmplitudeKind::Horiz, 2 * h as i64 + 1), (AmplitudeKind::NoHoriz, 2 * h as i64)] {
            for (n, a) in amps.iter().enumerate() {
                let brute = big(a.iter().filter(|&&x| x == amp).count());
                c.eq(|| format!("trinomial amp={amp} n={n}"), amplitude_coeff(n, h, kind), brute);
            }
        }
    }
    c.verdict("")
}

fn c8_deutsch() -> Verdict {
    let mut c = Checks::default();
    for m in 1..=8usize {
        for t in 0..m {
            let (band, det) = match deutsch_band_solve(t, m, 16) {
                Ok(x) => x,
                Err(e) => {
                    c.that(|| format!("band solve m={m} t={t}: {e}"), false);
                    continue;
                }
            };
            if t == 0 {
                c.eq(|| format!("D_{m} closed form = band determinant"), deutsch_determinant(m, 16), det);
            }
            for (j, b) in band.iter().enumerate() {
                let phi = deutsch_phi(t, j, Bound::Finite(m), 16).unwrap();
                c.eq(|| format!("m={m} t={t} j={j} closed = band"), &phi, b);
                for n in 0..=12 {
                    let brute = gen_deutsch(n, t as i64, 0, Some(m as i64 - 1), j as i64).len();
                    c.eq(|| format!("m={m} t={t} j={j} n={n} brute"), int(&phi, n), big(brute));
                }
            }
        }
    }
    c.eq(|| "D_0".into(), deutsch_determinant(0, 16), QSeries::one(Var::Z, 16));
    for h in 0..=6 {
        for variant in [BoundedVariant::All, BoundedVariant::NoTopHorizontal] {
            c.eq(
                || format!("D-recursion vs v-form h={h} {variant:?}"),
                motzkin_bounded(h, variant, 16),
                motzkin_bounded_v(h, variant, 16),
            );
        }
    }
    c.verdict("")
}

fn c9_kemp() -> Verdict {
    let mut c = Checks::default();
    let valley = kemp_valley_series(40);
    let peak = kemp_peak_series(40);
    c.eq(|| "Valley w^1..w^2".into(), (valley.coeff(1).clone(), valley.coeff(2).clone()), (frac(5, 3), frac(77, 27)));
    c.eq(|| "Peak w^1..w^2".into(), (peak.coeff(1).clone(), peak.coeff(2).clone()), (rat(3), frac(13, 3)));
    let mut worst: f64 = 0.0;
    for m in 1..=5 {
        for (turn, series) in [(Turn::Valley, &valley), (Turn::Peak, &peak)] {
            let limit = to_f64(series.coeff(m));
            let devs: Vec<f64> = [200, 400, 800]
                .iter()
                .map(|&n| kemp_finite_oracle(m, n, turn).map_or(f64::INFINITY, |a| (to_f64(&a) / limit - 1.0).abs()))
                .collect();
            c.that(|| format!("{turn:?} m={m} approaches monotonically {devs:?}"), devs.windows(2).all(|w| w[1] < w[0]));
            c.that(|| format!("{turn:?} m={m} within 2% at n=800 ({:.4})", devs[2]), devs[2] <= 0.02);
            worst = worst.max(devs[2]);
        }
    }
    let mut gap_worst: f64 = 0.0;
    for m in 10..=40 {
        let gap = to_f64(&(peak.coeff(m) - valley.coeff(m)));
        let law = eval_law(LawKind::KempGap, 0, m as f64).unwrap();
        let dev = (gap / law - 1.0).abs();
        gap_worst = gap_worst.max(dev);
        c.that(|| format!("gap m={m} within 5% ({dev:.4})"), dev <= 0.05);
    }
    c.verdict(&format!(", worst DP deviation {worst:.4}, worst gap deviation {gap_worst:.4}"))
}

fn c10_horton() -> Verdict {
    let mut c = Checks::default();
    let n = 24;
    let z = QSeries::identity(Var::Z, n);
    for a in 0..=2i64 {
        let rs: Vec<QSeries> = (0..=4).map(|p| horton_rp(p, a, n)).collect();
        for p in 1..=4usize {
            let below = rs[..p].iter().fold(QSeries::zero(Var::Z, n), |acc, r| &acc + r);
            let rhs = &(&(&z * &rs[p - 1].pow(2)) + &(&(&z * &rs[p]) * &below).scale(&rat(2)))
                + &(&z * &rs[p]).scale(&rat(a));
            c.that(|| format!("recursion a={a} p={p}"), (&rs[p] - &rhs).is_zero());
        }
        let n_max = 9;
        let rs: Vec<QSeries> = (0..=4).map(|p| horton_rp(p, a, n_max)).collect();
        for size in 0..=n_max {
            let regs: Vec<u32> = gen_unary_binary(size, a as u32).iter().map(|t| reg(t).unwrap()).collect();
            for (p, r) in rs.iter().enumerate() {
                let brute = regs.iter().filter(|&&x| x == p as u32).count();
                c.eq(|| format!("brute a={a} p={p} n={size}"), int(r, size), big(brute));
            }
        }
    }
    let mut diffs = Vec::new();
    for e in 8..=12 {
        let size = 1usize << e;
        let exact = horton_average_f64(size, 1);
        let law = eval_law(LawKind::HortonAvg, 1, size as f64).unwrap();
        diffs.push(exact - law);
        c.that(|| format!("average reg at n=2^{e}: exact {exact:.4} vs evaluator {law:.4}"), (exact - law).abs() <= 0.02);
    }
    let shown: Vec<String> = diffs.iter().map(|d| format!("{d:+.4}")).collect();
    c.verdict(&format!(", exact minus evaluator at 2^8..2^12: {}", shown.join(" ")))
}

fn excess(t: &TreeNode) -> usize {
    match t {
        TreeNode::MultiEdge { children } => children.iter().map(|(m, c)| *m as usize - 1 + excess(c)).sum(),
        _ => 0,
    }
}

fn c11_bijections() -> Verdict {
    let start = Instant::now();
    let mut c = Checks::default();
    for w in 1..=6 {
        let trees = gen_multiedge(w);
        let mut images = BTreeSet::new();
        let mut rotated = BTreeSet::new();
        for t in &trees {
            let p = multiedge_to_3motzkin(t).unwrap();
            c.eq(|| format!("round trip {t}"), motzkin3_to_multiedge(&p).ok().as_ref(), Some(t));
            let blue = p.steps.iter().filter(|s| **s == Step::Horizontal(2)).count();
            c.eq(|| format!("excess vs blue {t}"), blue, excess(t));
            images.insert(p.to_string());
            let b = rotation_multiedge_to_unarybinary(t).unwrap();
            c.eq(|| format!("rotation round trip {t}"), rotation_unarybinary_to_multiedge(&b).ok().as_ref(), Some(t));
            rotated.insert(b);
        }
        let paths: BTreeSet<String> = gen_motzkin(w - 1, 3, None).iter().map(|p| p.to_string()).collect();
        c.that(|| format!("3-Motzkin image set weight {w}"), images == paths && images.len() == trees.len());
        let ub: BTreeSet<TreeNode> = gen_unary_binary(w, 1).into_iter().collect();
        c.that(|| format!("rotation image set weight {w}"), rotated == ub && rotated.len() == trees.len());
    }
    for n in 1..=7 {
        let trees = gen_marked(n);
        let mut images = BTreeSet::new();
        for t in &trees {
            let p = marked_to_skew(t).unwrap();
            c.eq(|| format!("round trip {t}"), skew_to_marked(&p).ok().as_ref(), Some(t));
            c.eq(|| format!("marks vs red {t}"), tree_stats(t).mark_count, path_stats(&p).red_count);
            images.insert(p.to_string());
        }
        let paths: BTreeSet<String> = gen_skew(2 * n - 2, 0).iter().map(|p| p.to_string()).collect();
        c.that(|| format!("skew image set n={n}"), images == paths && images.len() == trees.len());
    }
    let (fast, t) = within(start.elapsed(), 60);
    c.that(|| "runtime".into(), fast);
    c.verdict(&t)
}

/// Ladder for the average-value trends.
const LADDER: [usize; 4] = [25, 50, 100, 200];
/// Per-step growth allowed in the relative deviation.
const SLACK: f64 = 0.2;
/// The deviation at the top of the ladder must be below this to count as converging.
const CONVERGED: f64 = 0.1;

fn c12_averages() -> Verdict {
    let mut c = Checks::default();
    let mut notes = Vec::new();
    for kind in [LawKind::MarkedLeaves, LawKind::RetakhLeaves, LawKind::RedEdges, LawKind::AmplitudeAvg] {
        let law = AsymptoticLaw::new(kind);
        let exact: Vec<(usize, ExactRational)> = exact_values(&law, &LADDER).unwrap();
        let rep = trend_check(&law, &exact, SLACK).unwrap();
        let last = rep.last_deviation().unwrap();
        let devs: Vec<String> = rep.rows.iter().map(|r| format!("{:.4}", r.rel_dev)).collect();
        let name = kind.name();
        notes.push(format!("{name} [{}]", devs.join(" ")));
        c.that(|| format!("{name} deviation decreasing"), rep.decreasing);
        c.that(|| format!("{name} converges (deviation {last:.4} at n=200)"), last < CONVERGED);
    }
    c.verdict(&format!("; {}", notes.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 12] = [
        ("A002212 five routes", c1_a002212),
        ("skew Dyck s0..s3", c2_skew),
        ("dual skew G0..G3", c3_dual_skew),
        ("red-edge statistics", c4_red_edges),
        ("negative-territory series", c5_hoppy),
        ("ternary table and factorization", c6_ternary),
        ("amplitude", c7_amplitude),
        ("Deutsch strips", c8_deutsch),
        ("Kemp peaks and valleys", c9_kemp),
        ("Horton-Strahler", c10_horton),
        ("bijections", c11_bijections),
        ("exact averages trend", c12_averages),
    ];
    let mut all_ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        all_ok &= v.ok;
        let tag = if v.ok { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name} ({:.1}s): {}", i + 1, start.elapsed().as_secs_f64(), v.note);
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
