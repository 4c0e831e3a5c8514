use super::{Family, LatticePath, Step};

/// Depth-first enumeration; `moves` lists legal next steps for a prefix,
/// `accept` decides whether a complete prefix of the target length is kept.
fn enumerate(
    family: Family,
    start: i64,
    len: usize,
    moves: &dyn Fn(&[Step], i64, usize) -> Vec<Step>,
    accept: &dyn Fn(&[Step], i64) -> bool,
) -> Vec<LatticePath> {
    fn go(
        prefix: &mut Vec<Step>,
        level: i64,
        len: usize,
        moves: &dyn Fn(&[Step], i64, usize) -> Vec<Step>,
        accept: &dyn Fn(&[Step], i64) -> bool,
        out: &mut Vec<Vec<Step>>,
    ) {
        if prefix.len() == len {
            if accept(prefix, level) {
                out.push(prefix.clone());
            }
            return;
        }
        let remaining = len - prefix.len();
        for s in moves(prefix, level, remaining) {
            prefix.push(s);
            go(prefix, level + s.delta(), len, moves, accept, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(&mut Vec::with_capacity(len), start, len, moves, accept, &mut raw);
    raw.into_iter().map(|steps| LatticePath::new(family, start, steps)).collect()
}

/// Levels reachable with `rem` unit steps from `level` must include `end`.
fn unit_reachable(level: i64, rem: usize, end: i64) -> bool {
    let rem = rem as i64;
    (level - end).abs() <= rem && (level - end - rem) % 2 == 0
}

/// k-Dyck paths from 0 with up-steps `+k`, down-steps `-1`, exactly `n_up` up-steps.
pub fn gen_kdyck(k: u32, n_up: usize, end_level: i64, floor: i64, require_last_up: bool) -> Vec<LatticePath> {
    let ki = k as i64;
    let n_down = ki * n_up as i64 - end_level;
    if n_down < 0 || end_level < floor || (require_last_up && n_up == 0) {
        return Vec::new();
    }
    let n_down = n_down as usize;
    let len = n_up + n_down;
    let up = Step::up(k);
    let moves = move |prefix: &[Step], level: i64, rem: usize| {
        let ups_used = prefix.iter().filter(|s| s.is_up()).count();
        let ups_left = n_up - ups_used;
        let downs_left = rem - ups_left;
        let mut out = Vec::new();
        if ups_left > 0 {
            out.push(up);
        }
        if downs_left > 0 && level - 1 >= floor && !(require_last_up && ups_left == 0) {
            out.push(Step::D);
        }
        out
    };
    let accept = move |prefix: &[Step], level: i64| {
        level == end_level && (!require_last_up || prefix.last().is_some_and(Step::is_up))
    };
    enumerate(Family::KDyck(k), 0, len, &moves, &accept)
}

/// Decorated skew paths: a red down-step is never adjacent to an up-step.
pub fn gen_skew(n_steps: usize, end_level: i64) -> Vec<LatticePath> {
    let moves = move |prefix: &[Step], level: i64, rem: usize| {
        let last = prefix.last().copied();
        let mut out = Vec::new();
        if unit_reachable(level + 1, rem - 1, end_level) && last != Some(Step::RED_DOWN) {
            out.push(Step::U);
        }
        if level >= 1 && unit_reachable(level - 1, rem - 1, end_level) {
            out.push(Step::D);
            if !last.is_some_and(|s| s.is_up()) {
                out.push(Step::RED_DOWN);
            }
        }
        out
    };
    let accept = move |_: &[Step], level: i64| level == end_level;
    if !unit_reachable(0, n_steps, end_level) {
        return Vec::new();
    }
    enumerate(Family::SkewDecorated, 0, n_steps, &moves, &accept)
}

/// Decorated dual skew paths: no down-step right after a blue up-step and
/// no blue up-step right after a down-step.
pub fn gen_dual_skew(n_steps: usize, end_level: i64) -> Vec<LatticePath> {
    let moves = move |prefix: &[Step], level: i64, rem: usize| {
        let last = prefix.last().copied();
        let mut out = Vec::new();
        if unit_reachable(level + 1, rem - 1, end_level) {
            out.push(Step::U);
            if !last.is_some_and(|s| s.is_down()) {
                out.push(Step::BLUE_UP);
            }
        }
        if level >= 1 && unit_reachable(level - 1, rem - 1, end_level) && last != Some(Step::BLUE_UP) {
            out.push(Step::D);
        }
        out
    };
    let accept = move |_: &[Step], level: i64| level == end_level;
    if !unit_reachable(0, n_steps, end_level) {
        return Vec::new();
    }
    enumerate(Family::DualSkewDecorated, 0, n_steps, &moves, &accept)
}

/// Motzkin paths of length `n` from 0 to 0 with `colors` horizontal colours,
/// inside `[0, max_height]`.
pub fn gen_motzkin(n: usize, colors: u8, max_height: Option<i64>) -> Vec<LatticePath> {
    let cap = max_height.unwrap_or(i64::MAX);
    let moves = move |_: &[Step], level: i64, rem: usize| {
        let mut out = Vec::new();
        if level + 1 <= cap && level + 1 <= rem as i64 - 1 {
            out.push(Step::U);
        }
        if level <= rem as i64 - 1 {
            out.extend((0..colors).map(Step::Horizontal));
        }
        if level >= 1 {
            out.push(Step::D);
        }
        out
    };
    let accept = |_: &[Step], level: i64| level == 0;
    enumerate(Family::Motzkin(colors), 0, n, &moves, &accept)
}

/// Deutsch paths: up-steps `+1`, down-steps of any size, inside `[floor, ceiling]`.
pub fn gen_deutsch(n: usize, start: i64, floor: i64, ceiling: Option<i64>, end: i64) -> Vec<LatticePath> {
    let cap = ceiling.unwrap_or(i64::MAX);
    if start < floor || start > cap || end < floor || end > cap {
        return Vec::new();
    }
    let moves = move |_: &[Step], level: i64, rem: usize| {
        let rem_after = rem as i64 - 1;
        let mut out = Vec::new();
        let fits = |l: i64| if rem_after == 0 { l == end } else { end <= l + rem_after };
        if level < cap && fits(level + 1) {
            out.push(Step::U);
        }
        for d in 1..=(level - floor) {
            if fits(level - d) {
                out.push(Step::down(d as u32));
            }
        }
        out
    };
    let accept = move |_: &[Step], level: i64| level == end;
    enumerate(Family::Deutsch, start, n, &moves, &accept)
}

/// Dyck paths with `n_pairs` up-steps whose peaks sit on level 1 or on an even level.
pub fn gen_retakh(n_pairs: usize) -> Vec<LatticePath> {
    let len = 2 * n_pairs;
    let moves = |prefix: &[Step], level: i64, rem: usize| {
        let mut out = Vec::new();
        if level + 1 <= rem as i64 - 1 {
            out.push(Step::U);
        }
        let peak_ok = !prefix.last().is_some_and(Step::is_up) || level == 1 || level % 2 == 0;
        if level >= 1 && peak_ok {
            out.push(Step::D);
        }
        out
    };
    let accept = |_: &[Step], level: i64| level == 0;
    enumerate(Family::RetakhDyck, 0, len, &moves, &accept)
}
