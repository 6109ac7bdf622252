#![allow(dead_code)]

use surgroup::perm::Perm;
use surgroup::presentation::Presentation;
use surgroup::target::FiniteTarget;
use surgroup::word::Word;

pub fn eval(w: &Word, images: &[&Perm], degree: usize) -> Perm {
    w.letters().iter().fold(Perm::identity(degree), |acc, l| {
        let x = if l.inverse { images[l.gen].inverse() } else { images[l.gen].clone() };
        acc.compose(&x)
    })
}

/// Every tuple of images, checked relator by relator with plain
/// permutation arithmetic.
pub fn naive_count(p: &Presentation, t: &FiniteTarget) -> u128 {
    let n = p.num_generators();
    let elems = t.elements();
    let deg = t.degree();
    let mut idx = vec![0usize; n];
    let mut count = 0u128;
    loop {
        let images: Vec<&Perm> = idx.iter().map(|&i| &elems[i]).collect();
        if p.relators().iter().all(|r| eval(r, &images, deg).is_identity()) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `det(V - t V^T)` for a 2x2 Seifert matrix, as coefficients of `1, t, t^2`.
pub fn seifert_alexander(v: [[i64; 2]; 2]) -> Vec<i64> {
    // entries a + b t of V - tV^T
    let e = |i: usize, j: usize| (v[i][j], -v[j][i]);
    let mul = |x: (i64, i64), y: (i64, i64)| [x.0 * y.0, x.0 * y.1 + x.1 * y.0, x.1 * y.1];
    let d1 = mul(e(0, 0), e(1, 1));
    let d2 = mul(e(0, 1), e(1, 0));
    let mut c: Vec<i64> = (0..3).map(|i| d1[i] - d2[i]).collect();
    while c.first() == Some(&0) {
        c.remove(0);
    }
    while c.last() == Some(&0) {
        c.pop();
    }
    if c.last().is_some_and(|&x| x < 0) {
        c.iter_mut().for_each(|x| *x = -*x);
    }
    c
}

/// Cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * cofactor_det(&minor)
        })
        .sum()
}
