use num_bigint::BigInt;
use num_traits::Zero;

use crate::numkernel::{frac, rat, ExactRational};
use crate::series::{QSeries, Var};

/// Which turn of a Dyck path is tracked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Turn {
    /// Down-step followed by an up-step.
    Valley,
    /// Up-step followed by a down-step.
    Peak,
}

/// `sqrt((1-w)(9-w)) = 3·sqrt(1 - 10w/9 + w²/9)`.
fn kemp_root(order: usize) -> QSeries {
    let rad = QSeries::new(Var::W, vec![rat(1), frac(-10, 9), frac(1, 9)], order);
    rad.sqrt().expect("constant term 1").scale(&rat(3))
}

fn one_minus_w_sq(order: usize) -> QSeries {
    QSeries::from_ints(Var::W, order, &[1, -2, 1])
}

/// `Valley(w) = (w² + 2w - 3 + (1+w)sqrt((1-w)(9-w)))/(2(1-w)²)`.
pub fn kemp_valley_series(order: usize) -> QSeries {
    let num = &QSeries::from_ints(Var::W, order, &[-3, 2, 1]) + &(&QSeries::from_ints(Var::W, order, &[1, 1]) * &kemp_root(order));
    num.checked_div(&one_minus_w_sq(order).scale(&rat(2))).unwrap()
}

/// `Peak(w) = w·sqrt((1-w)(9-w))/(1-w)²`.
pub fn kemp_peak_series(order: usize) -> QSeries {
    kemp_root(order).shift_up(1).checked_div(&one_minus_w_sq(order)).unwrap()
}

/// Exact mean height of the `m`-th turn over Dyck paths of length `2n` that have at least `m` such turns.
///
/// `None` when no path has `m` turns.
pub fn kemp_finite_oracle(m: usize, n: usize, turn: Turn) -> Option<ExactRational> {
    assert!(m >= 1, "turn index starts at 1");
    let len = 2 * n;
    if len == 0 {
        return None;
    }
    let width = n + 2;
    let zeros = || vec![BigInt::zero(); width];
    // open[seen][last_up][level]: prefixes with fewer than m turns so far
    let mut open = vec![vec![zeros(); 2]; m];
    // prefixes past the m-th turn, counted and weighted by that turn's height
    let (mut done, mut weighted) = (zeros(), zeros());
    open[0][1][1] = BigInt::from(1);
    for pos in 1..len {
        let rem = len - pos - 1;
        let mut next = vec![vec![zeros(); 2]; m];
        let (mut next_done, mut next_weighted) = (zeros(), zeros());
        let moves = |h: usize| {
            [(true, h + 1), (false, h.wrapping_sub(1))].into_iter().filter(move |&(_, nh)| nh < width && nh <= rem)
        };
        for h in 0..width {
            if !done[h].is_zero() {
                for (_, nh) in moves(h) {
                    next_done[nh] += &done[h];
                    next_weighted[nh] += &weighted[h];
                }
            }
        }
        for seen in 0..m {
            for last_up in 0..2 {
                for h in 0..width {
                    let c = &open[seen][last_up][h];
                    if c.is_zero() {
                        continue;
                    }
                    for (up, nh) in moves(h) {
                        let is_turn = match turn {
                            Turn::Valley => last_up == 0 && up,
                            Turn::Peak => last_up == 1 && !up,
                        };
                        if is_turn && seen + 1 == m {
                            next_done[nh] += c;
                            next_weighted[nh] += c * BigInt::from(h);
                        } else {
                            next[seen + usize::from(is_turn)][usize::from(up)][nh] += c;
                        }
                    }
                }
            }
        }
        open = next;
        done = next_done;
        weighted = next_weighted;
    }
    let total = std::mem::take(&mut done[0]);
    (!total.is_zero()).then(|| ExactRational::new(std::mem::take(&mut weighted[0]), total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathgen::{path_stats, Family, LatticePath};

    #[test]
    fn exact_coefficients() {
        let v = kemp_valley_series(5);
        let want_v = [rat(0), frac(5, 3), frac(77, 27), frac(925, 243), frac(10117, 2187), frac(105397, 19683)];
        assert_eq!(v.coeffs(), &want_v);
        let p = kemp_peak_series(5);
        let want_p = [rat(0), rat(3), frac(13, 3), frac(145, 27), frac(1517, 243), frac(15329, 2187)];
        assert_eq!(p.coeffs(), &want_p);
    }

    /// Brute-force mean over all Dyck paths of length 2n.
    fn brute(m: usize, n: usize, turn: Turn) -> Option<ExactRational> {
        let mut total = 0i64;
        let mut count = 0i64;
        for steps in all_dyck(n) {
            let st = path_stats(&LatticePath::new(Family::KDyck(1), 0, steps));
            let hs = match turn {
                Turn::Valley => st.valley_heights,
                Turn::Peak => st.peak_heights,
            };
            if let Some(h) = hs.get(m - 1) {
                total += h;
                count += 1;
            }
        }
        (count > 0).then(|| frac(total, count))
    }

    fn all_dyck(n: usize) -> Vec<Vec<crate::pathgen::Step>> {
        use crate::pathgen::Step;
        fn go(up: usize, down: usize, n: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
            if up == n && down == n {
                out.push(cur.clone());
                return;
            }
            if up < n {
                cur.push(Step::U);
                go(up + 1, down, n, cur, out);
                cur.pop();
            }
            if down < up {
                cur.push(Step::D);
                go(up, down + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, 0, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn oracle_matches_enumeration() {
        assert_eq!(kemp_finite_oracle(1, 2, Turn::Valley), Some(rat(0)));
        assert_eq!(kemp_finite_oracle(1, 1, Turn::Peak), Some(rat(1)));
        assert_eq!(kemp_finite_oracle(1, 1, Turn::Valley), None);
        for n in 1..=8 {
            for m in 1..=4 {
                for turn in [Turn::Valley, Turn::Peak] {
                    assert_eq!(kemp_finite_oracle(m, n, turn), brute(m, n, turn), "m={m} n={n} {turn:?}");
                }
            }
        }
    }
}
