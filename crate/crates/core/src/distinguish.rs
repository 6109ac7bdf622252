//! Pairwise comparison of hom-spectra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homcount::HomSpectrum;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairVerdict {
    /// The spectra differ; `target` is the first target where they do.
    Distinguished { target: String, left: u128, right: u128 },
    /// Equal spectra. Says nothing about isomorphism.
    Unresolved,
}

impl PairVerdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(self, PairVerdict::Distinguished { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairResult {
    pub left: String,
    pub right: String,
    pub verdict: PairVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishReport {
    pub labels: Vec<String>,
    pub targets: Vec<String>,
    /// Every unordered pair `i < j`, in lexicographic order.
    pub pairs: Vec<PairResult>,
    pub distinguished: usize,
    pub unresolved: usize,
}

impl DistinguishReport {
    pub fn all_distinguished(&self) -> bool {
        self.unresolved == 0
    }

    /// Verdict for labels `i` and `j` (order-insensitive); `Unresolved` on
    /// the diagonal.
    pub fn verdict(&self, i: usize, j: usize) -> PairVerdict {
        if i == j {
            return PairVerdict::Unresolved;
        }
        let (a, b) = (i.min(j), i.max(j));
        let n = self.labels.len();
        // position of (a, b) in the row-major upper triangle
        let idx = a * (2 * n - a - 1) / 2 + (b - a - 1);
        self.pairs[idx].verdict.clone()
    }
}

pub fn compare(left: &HomSpectrum, right: &HomSpectrum) -> Result<PairVerdict> {
    if left.target_names() != right.target_names() {
        return Err(Error::MismatchedTargets);
    }
    Ok(left
        .counts
        .iter()
        .zip(&right.counts)
        .find(|((_, a), (_, b))| a != b)
        .map_or(PairVerdict::Unresolved, |((name, a), (_, b))| PairVerdict::Distinguished {
            target: name.clone(),
            left: *a,
            right: *b,
        }))
}

pub fn distinguish_report(items: &[(String, HomSpectrum)]) -> Result<DistinguishReport> {
    let targets: Vec<String> = items
        .first()
        .map(|(_, s)| s.target_names().iter().map(|n| n.to_string()).collect())
        .unwrap_or_default();
    let mut pairs = Vec::new();
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            pairs.push(PairResult {
                left: items[i].0.clone(),
                right: items[j].0.clone(),
                verdict: compare(&items[i].1, &items[j].1)?,
            });
        }
    }
    let distinguished = pairs.iter().filter(|p| p.verdict.is_distinguished()).count();
    Ok(DistinguishReport {
        labels: items.iter().map(|(l, _)| l.clone()).collect(),
        targets,
        unresolved: pairs.len() - distinguished,
        distinguished,
        pairs,
    })
}

impl fmt::Display for DistinguishReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "targets: {}", self.targets.join(", "))?;
        for p in &self.pairs {
            match &p.verdict {
                PairVerdict::Distinguished { target, left, right } => writeln!(
                    f,
                    "{} vs {}: DISTINGUISHED at {target} ({left} != {right})",
                    p.left, p.right
                )?,
                PairVerdict::Unresolved => writeln!(f, "{} vs {}: UNRESOLVED", p.left, p.right)?,
            }
        }
        writeln!(f, "summary: {} distinguished, {} unresolved", self.distinguished, self.unresolved)?;
        if self.unresolved > 0 {
            writeln!(
                f,
                "note: UNRESOLVED means equal counts over these targets only; \
                 it is not evidence that the groups are isomorphic"
            )?;
        }
        Ok(())
    }
}
