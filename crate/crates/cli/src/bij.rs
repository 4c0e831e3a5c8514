use pathgarden::biject::{marked_to_skew, multiedge_to_3motzkin, rotation_multiedge_to_unarybinary};
use pathgarden::treegen::{gen_marked, gen_multiedge};

use crate::seq::need;
use crate::{output, Failure, Outcome, Params};

pub const KINDS: [&str; 3] = ["multiedge-motzkin", "marked-skew", "rotation"];

pub fn run(p: &Params) -> Outcome {
    let f = p.family.as_str();
    let n = need(p.n, "n", f)?;
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let mut rows = Vec::new();
    match f {
        "multiedge-motzkin" => {
            for t in gen_multiedge(n) {
                rows.push((t.to_string(), empty_dash(multiedge_to_3motzkin(&t)?.to_string())));
            }
        }
        "marked-skew" => {
            for t in gen_marked(n) {
                rows.push((t.to_string(), empty_dash(marked_to_skew(&t)?.to_string())));
            }
        }
        "rotation" => {
            for t in gen_multiedge(n) {
                rows.push((t.to_string(), rotation_multiedge_to_unarybinary(&t)?.to_string()));
            }
        }
        _ => return Err(Failure::Usage(format!("unknown bijection '{f}'; known: {}", KINDS.join(", ")))),
    }
    Ok(output::pairs(p.format, ("preimage", "image"), &rows))
}

/// The empty path is shown as `-`.
fn empty_dash(s: String) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s
    }
}
