//! Smith normal form over the integers and abelian invariants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Data("ragged matrix rows".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Ok(IntegerMatrix { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] -= k * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(src, c) * k;
            self.entries[dst * self.cols + c] -= v;
        }
    }

    /// col[dst] -= k * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, src) * k;
            self.entries[r * self.cols + dst] -= v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

/// Diagonal of the Smith form (nonzero entries only, so `factors.len()` is
/// the rank) and the column transform: `row_ops * M * col_transform` is the
/// diagonal matrix.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub col_transform: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of `m`, all positive.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    smith_normal_form_with_transform(m).factors
}

/// Pivot: smallest nonzero absolute value in the remaining block, ties by
/// row-major position.
pub fn smith_normal_form_with_transform(m: &IntegerMatrix) -> SmithForm {
    let mut a = m.clone();
    let mut v = IntegerMatrix::identity(m.cols);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < a.rows.min(a.cols) {
        let Some((pr, pc)) = pivot(&a, t) else { break };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for r in t + 1..a.rows {
                if !a.get(r, t).is_zero() {
                    let q = a.get(r, t).div_floor(&p);
                    a.row_axpy(r, t, &q);
                    dirty |= !a.get(r, t).is_zero();
                }
            }
            for c in t + 1..a.cols {
                if !a.get(t, c).is_zero() {
                    let q = a.get(t, c).div_floor(&p);
                    a.col_axpy(c, t, &q);
                    v.col_axpy(c, t, &q);
                    dirty |= !a.get(t, c).is_zero();
                }
            }
            if dirty {
                // a remainder smaller than the pivot survived; re-pivot
                let (pr, pc) = pivot_cross(&a, t);
                a.swap_rows(t, pr);
                a.swap_cols(t, pc);
                v.swap_cols(t, pc);
                continue;
            }
            // divisibility: pivot must divide the rest of the block
            let bad = (t + 1..a.rows)
                .flat_map(|r| (t + 1..a.cols).map(move |c| (r, c)))
                .find(|&(r, c)| !a.get(r, c).is_multiple_of(&p));
            match bad {
                Some((r, _)) => {
                    // row[t] += row[r], then the column loop reduces again
                    a.row_axpy(t, r, &BigInt::from(-1));
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
        }
        factors.push(a.get(t, t).clone());
        t += 1;
    }
    SmithForm { factors, col_transform: v }
}

fn pivot(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for r in t..a.rows {
        for c in t..a.cols {
            let x = a.get(r, c);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(b, _, _)| ax < *b) {
                best = Some((ax, r, c));
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Smallest nonzero entry in row `t` or column `t` of the block.
fn pivot_cross(a: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (a.get(t, t).abs(), t, t);
    for r in t + 1..a.rows {
        let x = a.get(r, t).abs();
        if !x.is_zero() && x < best.0 {
            best = (x, r, t);
        }
    }
    for c in t + 1..a.cols {
        let x = a.get(t, c).abs();
        if !x.is_zero() && x < best.0 {
            best = (x, t, c);
        }
    }
    (best.1, best.2)
}

/// Abelian group `Z^free_rank + Z/d_1 + ... + Z/d_k` with `d_i | d_{i+1}`
/// and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// True for `Z` exactly.
    pub fn is_infinite_cyclic(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }

    /// True for `Z/q` (the trivial group when `q == 1`).
    pub fn is_cyclic_of_order(&self, q: u64) -> bool {
        self.free_rank == 0
            && match q {
                1 => self.torsion.is_empty(),
                _ => self.torsion == [BigInt::from(q)],
            }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntegerMatrix {
    let n = p.num_generators();
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(n)).collect();
    let mut m = IntegerMatrix::zeros(rows.len(), n);
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            m.set(i, j, BigInt::from(x));
        }
    }
    m
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let factors = smith_normal_form(&relation_matrix(p));
    let rank = factors.len();
    AbelianInvariants {
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
        free_rank: p.num_generators() - rank,
    }
}

/// For a presentation with abelianization exactly `Z`, the map from
/// generators to `Z` as an integer vector (determined up to sign).
pub fn infinite_cyclic_map(p: &Presentation) -> Result<Vec<i64>> {
    let ab = abelianization(p);
    if !ab.is_infinite_cyclic() {
        return Err(Error::NotAKnotGroup(ab.to_string()));
    }
    let smith = smith_normal_form_with_transform(&relation_matrix(p));
    // M V = U^-1 D and D has rank n-1, so the last column of V spans the
    // integer kernel of M: the primitive functional killing every relator
    let n = p.num_generators();
    (0..n)
        .map(|r| {
            i64::try_from(smith.col_transform.get(r, n - 1))
                .map_err(|_| Error::Data("abelianization map overflow".into()))
        })
        .collect()
}
