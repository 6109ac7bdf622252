//! Braid words and their closures.

use std::fmt;

use crate::error::{Error, Result};

/// A braid on `strands` strands; letter `k` is `σ_|k|` raised to `sign(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    /// Validates letter ranges and that the closure is a knot.
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Syntax("braid needs at least one strand".into()));
        }
        for &k in &letters {
            if k == 0 || k.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange { letter: k, strands });
            }
        }
        let b = BraidWord { strands, letters };
        let components = b.closure_components();
        if components != 1 {
            return Err(Error::NotAKnot { components });
        }
        Ok(b)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// Signed letter count (writhe of the closed braid diagram).
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|k| k.signum()).sum()
    }

    /// Underlying permutation of strand positions (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        pos
    }

    fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        count
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(i64::to_string).collect();
        write!(f, "n={}; {}", self.strands, letters.join(" "))
    }
}

/// Parses `[n=<int>;] <letters>` where letters are whitespace-separated
/// signed integers or `s<k>` / `S<k>` (inverse). Without a header the strand
/// count is `max|k| + 1`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let text = text.trim();
    let (header, body) = match text.split_once(';') {
        Some((h, b)) => (Some(h.trim()), b),
        None => (None, text),
    };
    let strands = match header {
        Some(h) => {
            let n = h
                .strip_prefix("n=")
                .or_else(|| h.strip_prefix("n ="))
                .ok_or_else(|| Error::Syntax(format!("bad header `{h}`")))?;
            Some(
                n.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Syntax(format!("bad strand count `{n}`")))?,
            )
        }
        None => None,
    };
    let mut letters = Vec::new();
    for tok in body.split_whitespace() {
        let k = if let Some(rest) = tok.strip_prefix('s') {
            parse_index(rest, tok)?
        } else if let Some(rest) = tok.strip_prefix('S') {
            -parse_index(rest, tok)?
        } else {
            tok.parse::<i64>().map_err(|_| Error::Syntax(format!("bad token `{tok}`")))?
        };
        if k == 0 {
            return Err(Error::Syntax("braid letter 0".into()));
        }
        letters.push(k);
    }
    let strands =
        strands.unwrap_or_else(|| letters.iter().map(|k| k.unsigned_abs() as usize).max().unwrap_or(0) + 1);
    BraidWord::new(strands, letters)
}

fn parse_index(rest: &str, tok: &str) -> Result<i64> {
    match rest.parse::<i64>() {
        Ok(k) if k > 0 => Ok(k),
        _ => Err(Error::Syntax(format!("bad token `{tok}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let t = parse_braid("1 1 1").unwrap();
        assert_eq!((t.strands(), t.letters()), (2, &[1, 1, 1][..]));
        let f = parse_braid("1 -2 1 -2").unwrap();
        assert_eq!(f.strands(), 3);
        assert_eq!(parse_braid("s1 S2 s1 S2").unwrap(), f);
        assert_eq!(parse_braid("n=3; 1 -2 1 -2").unwrap(), f);
        assert_eq!(parse_braid("n=1;").unwrap().strands(), 1);
        assert_eq!(parse_braid("").unwrap().strands(), 1);
    }

    #[test]
    fn two_component_closure() {
        assert_eq!(parse_braid("1 1").unwrap_err(), Error::NotAKnot { components: 2 });
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_braid("1 x"), Err(Error::Syntax(_))));
        assert!(matches!(parse_braid("n=two; 1"), Err(Error::Syntax(_))));
        assert!(matches!(parse_braid("n=2; 1 2"), Err(Error::IndexOutOfRange { letter: 2, strands: 2 })));
        assert!(matches!(parse_braid("0"), Err(Error::Syntax(_))));
    }

    #[test]
    fn writhe() {
        assert_eq!(parse_braid("1 1 1").unwrap().writhe(), 3);
        assert_eq!(parse_braid("1 -2 1 -2").unwrap().writhe(), 0);
    }
}
