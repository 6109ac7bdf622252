use surgroup::surgery::SurgerySlope;

use crate::CliError;

/// Comma-separated items, each an integer or an inclusive range `a..b`.
pub fn parse_p_values(text: &str) -> Result<Vec<i64>, CliError> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((a, b)) = item.split_once("..") {
            let a = parse_int(a)?;
            let b = parse_int(b)?;
            if a > b {
                return Err(CliError::Input(format!("empty range `{item}`")));
            }
            out.extend(a..=b);
        } else {
            out.push(parse_int(item)?);
        }
    }
    if out.is_empty() {
        return Err(CliError::Input("no p values given".into()));
    }
    Ok(out)
}

fn parse_int(s: &str) -> Result<i64, CliError> {
    s.trim().parse().map_err(|_| CliError::Input(format!("bad integer `{s}`")))
}

/// Slopes for `q` and each coprime `p`, logging one line per rejected `p`.
pub fn coprime_slopes(q: i64, p_values: &[i64]) -> Result<Vec<SurgerySlope>, CliError> {
    if q < 1 {
        return Err(CliError::Input(format!("q must be at least 1, got {q}")));
    }
    let mut slopes = Vec::new();
    for &p in p_values {
        match SurgerySlope::new(p, q) {
            Ok(s) => slopes.push(s),
            Err(_) => eprintln!("skip p={p}: gcd(p, q) != 1 for q={q}"),
        }
    }
    if slopes.is_empty() {
        return Err(CliError::Input(format!("empty family after gcd filter (q={q})")));
    }
    Ok(slopes)
}
