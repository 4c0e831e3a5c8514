use pathgarden::asymptotics::{exact_values, trend_check, AsymptoticLaw, LawKind};

use crate::{Failure, Outcome, Params};

/// Per-step slack on the relative deviation.
const SLACK: f64 = 0.2;

/// Doubling ladder from `--n` (default 25) up to `--max` (default 200).
fn ladder(p: &Params) -> Result<Vec<usize>, Failure> {
    let start = p.n.unwrap_or(25);
    let stop = p.max.unwrap_or(200);
    if start == 0 || stop < start {
        return Err(Failure::Usage("ladder needs 1 <= --n <= --max".into()));
    }
    let mut out = Vec::new();
    let mut n = start;
    while n <= stop {
        out.push(n);
        n *= 2;
    }
    Ok(out)
}

pub fn run(p: &Params) -> Outcome {
    let kind: LawKind = p.family.parse()?;
    let law = AsymptoticLaw::with_a(kind, p.a.unwrap_or(0));
    let exact = exact_values(&law, &ladder(p)?)?;
    let report = trend_check(&law, &exact, SLACK)?;
    Ok(report.to_csv())
}
