use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Layered DP over (level, class-of-last-step); `next` lists successor
/// states together with multiplicities.
fn run_dp<S: Copy + Eq + std::hash::Hash>(
    start: S,
    steps: usize,
    next: impl Fn(S) -> Vec<S>,
) -> HashMap<S, BigInt> {
    let mut cur: HashMap<S, BigInt> = HashMap::new();
    cur.insert(start, BigInt::one());
    for _ in 0..steps {
        let mut nxt: HashMap<S, BigInt> = HashMap::new();
        for (s, c) in &cur {
            for t in next(*s) {
                *nxt.entry(t).or_insert_with(BigInt::zero) += c;
            }
        }
        cur = nxt;
    }
    cur
}

/// Number of k-Dyck paths counted by [`super::gen_kdyck`].
pub fn count_kdyck(k: u32, n_up: usize, end_level: i64, floor: i64, require_last_up: bool) -> BigInt {
    let n_down = k as i64 * n_up as i64 - end_level;
    if n_down < 0 || end_level < floor || (require_last_up && n_up == 0) {
        return BigInt::zero();
    }
    let len = n_up + n_down as usize;
    // state: (level, ups used, last step was up)
    let table = run_dp((0i64, 0usize, false), len, |(h, u, _)| {
        let mut out = vec![];
        if u < n_up {
            out.push((h + k as i64, u + 1, true));
        }
        if h - 1 >= floor {
            out.push((h - 1, u, false));
        }
        out
    });
    table
        .iter()
        .filter(|((h, u, last), _)| *h == end_level && *u == n_up && (!require_last_up || *last))
        .map(|(_, c)| c)
        .sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Last {
    Start,
    Up,
    Down,
    Special,
}

/// Number of decorated skew paths of `n` steps from 0 to `end_level`.
pub fn count_skew(n: usize, end_level: i64) -> BigInt {
    let table = run_dp((0i64, Last::Start), n, |(h, last)| {
        let mut out = vec![];
        if last != Last::Special {
            out.push((h + 1, Last::Up));
        }
        if h >= 1 {
            out.push((h - 1, Last::Down));
            if last != Last::Up {
                out.push((h - 1, Last::Special));
            }
        }
        out
    });
    table.iter().filter(|((h, _), _)| *h == end_level).map(|(_, c)| c).sum()
}

/// Number of decorated dual skew paths of `n` steps from 0 to `end_level`.
pub fn count_dual_skew(n: usize, end_level: i64) -> BigInt {
    let table = run_dp((0i64, Last::Start), n, |(h, last)| {
        let mut out = vec![(h + 1, Last::Up)];
        if last != Last::Down {
            out.push((h + 1, Last::Special));
        }
        if h >= 1 && last != Last::Special {
            out.push((h - 1, Last::Down));
        }
        out
    });
    table.iter().filter(|((h, _), _)| *h == end_level).map(|(_, c)| c).sum()
}

/// Number of Motzkin paths of length `n` with `colors` horizontal colours and height at most `max_height`.
pub fn count_motzkin(n: usize, colors: u8, max_height: Option<i64>) -> BigInt {
    let cap = max_height.unwrap_or(i64::MAX);
    let table = run_dp(0i64, n, |h| {
        let mut out = vec![h; colors as usize];
        if h < cap {
            out.push(h + 1);
        }
        if h >= 1 {
            out.push(h - 1);
        }
        out
    });
    table.get(&0).cloned().unwrap_or_default()
}

/// Number of Deutsch paths counted by [`super::gen_deutsch`].
pub fn count_deutsch(n: usize, start: i64, floor: i64, ceiling: Option<i64>, end: i64) -> BigInt {
    let cap = ceiling.unwrap_or(i64::MAX);
    if start < floor || start > cap {
        return BigInt::zero();
    }
    let table = run_dp(start, n, |h| {
        let mut out: Vec<i64> = (floor..h).collect();
        if h < cap {
            out.push(h + 1);
        }
        out
    });
    table.get(&end).cloned().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    #[test]
    fn counts_match_generators() {
        for n in 0..=10usize {
            for j in 0..=4i64 {
                assert_eq!(count_skew(n, j), BigInt::from(gen_skew(n, j).len()), "skew n={n} j={j}");
                assert_eq!(count_dual_skew(n, j), BigInt::from(gen_dual_skew(n, j).len()));
                assert_eq!(count_deutsch(n, 1, 0, Some(4), j), BigInt::from(gen_deutsch(n, 1, 0, Some(4), j).len()));
            }
            assert_eq!(count_motzkin(n, 2, Some(2)), BigInt::from(gen_motzkin(n, 2, Some(2)).len()));
        }
        for k in 1..=3u32 {
            for m in 0..=5usize {
                for j in -1..=8i64 {
                    for last in [false, true] {
                        assert_eq!(
                            count_kdyck(k, m, j, -1, last),
                            BigInt::from(gen_kdyck(k, m, j, -1, last).len())
                        );
                    }
                }
            }
        }
    }
}
