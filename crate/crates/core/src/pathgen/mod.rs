//! Lattice paths: step types, exhaustive generators, DP counters and
//! per-path statistics. This layer is the brute-force oracle.

mod count;
mod gen;

pub use count::{count_deutsch, count_dual_skew, count_kdyck, count_motzkin, count_skew};
pub use gen::{gen_deutsch, gen_dual_skew, gen_kdyck, gen_motzkin, gen_retakh, gen_skew};

use std::fmt;

use crate::error::{Error, Result};

/// Decoration of an up- or down-step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ink {
    Black,
    Red,
    Blue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up { rise: u32, ink: Ink },
    Down { drop: u32, ink: Ink },
    /// Colour index: 0 red, 1 green, 2 blue.
    Horizontal(u8),
}

impl Step {
    pub const U: Step = Step::Up { rise: 1, ink: Ink::Black };
    pub const D: Step = Step::Down { drop: 1, ink: Ink::Black };
    pub const RED_DOWN: Step = Step::Down { drop: 1, ink: Ink::Red };
    pub const BLUE_UP: Step = Step::Up { rise: 1, ink: Ink::Blue };

    pub fn up(rise: u32) -> Step {
        Step::Up { rise, ink: Ink::Black }
    }

    pub fn down(drop: u32) -> Step {
        Step::Down { drop, ink: Ink::Black }
    }

    pub fn delta(&self) -> i64 {
        match *self {
            Step::Up { rise, .. } => rise as i64,
            Step::Down { drop, .. } => -(drop as i64),
            Step::Horizontal(_) => 0,
        }
    }

    pub fn is_up(&self) -> bool {
        matches!(self, Step::Up { .. })
    }

    pub fn is_down(&self) -> bool {
        matches!(self, Step::Down { .. })
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::Up { rise: 1, ink: Ink::Black } => write!(f, "U"),
            Step::Up { rise: 1, ink: Ink::Blue } => write!(f, "b"),
            Step::Up { rise, ink: Ink::Black } => write!(f, "U{rise}"),
            Step::Up { rise, ink } => write!(f, "U{rise}{}", ink_tag(ink)),
            Step::Down { drop: 1, ink: Ink::Black } => write!(f, "d"),
            Step::Down { drop: 1, ink: Ink::Red } => write!(f, "r"),
            Step::Down { drop, ink: Ink::Black } => write!(f, "D{drop}"),
            Step::Down { drop, ink } => write!(f, "D{drop}{}", ink_tag(ink)),
            Step::Horizontal(c) => write!(f, "H{c}"),
        }
    }
}

fn ink_tag(ink: Ink) -> &'static str {
    match ink {
        Ink::Black => "",
        Ink::Red => "r",
        Ink::Blue => "b",
    }
}

/// Family tag deciding which steps and adjacencies are legal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    KDyck(u32),
    SkewDecorated,
    DualSkewDecorated,
    Motzkin(u8),
    Deutsch,
    RetakhDyck,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub family: Family,
    pub start: i64,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(family: Family, start: i64, steps: Vec<Step>) -> Self {
        Self { family, start, steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Levels of all vertices, starting point included.
    pub fn levels(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = self.start;
        out.push(h);
        for s in &self.steps {
            h += s.delta();
            out.push(h);
        }
        out
    }

    pub fn end_level(&self) -> i64 {
        self.start + self.steps.iter().map(Step::delta).sum::<i64>()
    }

    pub fn min_level(&self) -> i64 {
        *self.levels().iter().min().unwrap()
    }

    /// Step alphabet and adjacency rules of the family (bounds are checked separately).
    pub fn follows_rules(&self) -> bool {
        let alphabet_ok = self.steps.iter().all(|s| match (self.family, *s) {
            (Family::KDyck(k), Step::Up { rise, ink: Ink::Black }) => rise == k,
            (Family::KDyck(_), Step::Down { drop: 1, ink: Ink::Black }) => true,
            (Family::SkewDecorated, st) => st == Step::U || st == Step::D || st == Step::RED_DOWN,
            (Family::DualSkewDecorated, st) => st == Step::U || st == Step::D || st == Step::BLUE_UP,
            (Family::Motzkin(c), st) => st == Step::U || st == Step::D || matches!(st, Step::Horizontal(h) if h < c),
            (Family::Deutsch, st) => st == Step::U || matches!(st, Step::Down { ink: Ink::Black, .. }),
            (Family::RetakhDyck, st) => st == Step::U || st == Step::D,
            _ => false,
        });
        if !alphabet_ok {
            return false;
        }
        let pairs_ok = self.steps.windows(2).all(|w| match self.family {
            Family::SkewDecorated => {
                !(w[0].is_up() && w[1] == Step::RED_DOWN) && !(w[0] == Step::RED_DOWN && w[1].is_up())
            }
            Family::DualSkewDecorated => {
                !(w[0] == Step::BLUE_UP && w[1].is_down()) && !(w[0].is_down() && w[1] == Step::BLUE_UP)
            }
            _ => true,
        });
        if !pairs_ok {
            return false;
        }
        if self.family == Family::RetakhDyck {
            return path_stats(self).peak_heights.iter().all(|&h| h == 1 || (h >= 2 && h % 2 == 0));
        }
        true
    }

    pub fn parse(family: Family, start: i64, text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut steps = Vec::new();
        let mut i = 0;
        let number = |i: &mut usize| -> Option<u32> {
            let begin = *i;
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[begin..*i].iter().collect::<String>().parse().ok()
        };
        while i < chars.len() {
            let c = chars[i];
            i += 1;
            let step = match c {
                'U' => Step::up(number(&mut i).unwrap_or(1)),
                'd' => Step::D,
                'r' => Step::RED_DOWN,
                'b' => Step::BLUE_UP,
                'D' => Step::down(number(&mut i).ok_or_else(|| bad_step(text))?),
                'H' => Step::Horizontal(number(&mut i).ok_or_else(|| bad_step(text))? as u8),
                _ => return Err(bad_step(text)),
            };
            steps.push(step);
        }
        Ok(Self::new(family, start, steps))
    }
}

fn bad_step(text: &str) -> Error {
    Error::Usage(format!("cannot parse step string {text:?}"))
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "-");
        }
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStats {
    pub height: i64,
    pub amplitude: i64,
    pub red_count: usize,
    pub blue_count: usize,
    pub last_downrun_len: usize,
    pub peak_heights: Vec<i64>,
    pub valley_heights: Vec<i64>,
}

pub fn path_stats(p: &LatticePath) -> PathStats {
    let levels = p.levels();
    let height = *levels.iter().max().unwrap();
    let horizontal_on_top = p
        .steps
        .iter()
        .zip(&levels)
        .any(|(s, &h)| matches!(s, Step::Horizontal(_)) && h == height);
    let amplitude = 2 * height + i64::from(horizontal_on_top);
    let red_count = p.steps.iter().filter(|s| matches!(s, Step::Down { ink: Ink::Red, .. })).count();
    let blue_count = p.steps.iter().filter(|s| matches!(s, Step::Up { ink: Ink::Blue, .. })).count();
    let last_downrun_len = p.steps.iter().rev().take_while(|s| s.is_down()).count();
    let mut peak_heights = Vec::new();
    let mut valley_heights = Vec::new();
    for (i, w) in p.steps.windows(2).enumerate() {
        if w[0].is_up() && w[1].is_down() {
            peak_heights.push(levels[i + 1]);
        } else if w[0].is_down() && w[1].is_up() {
            valley_heights.push(levels[i + 1]);
        }
    }
    PathStats { height, amplitude, red_count, blue_count, last_downrun_len, peak_heights, valley_heights }
}
