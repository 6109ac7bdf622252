//! Fox free differential calculus and Alexander polynomials.

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::presentation::Presentation;
use crate::snf::infinite_cyclic_map;
use crate::tietze::{tietze_simplify, DEFAULT_BUDGET};
use crate::word::Word;

/// `∂w/∂x_gen` pushed through the abelianization `x_j ↦ t^{phi[j]}`.
pub fn fox_derivative(w: &Word, gen: usize, phi: &[i64]) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero();
    let mut prefix = 0i64;
    for l in w.letters() {
        if l.inverse {
            prefix -= phi[l.gen];
            if l.gen == gen {
                out = &out - &LaurentPolynomial::monomial(1, prefix);
            }
        } else {
            if l.gen == gen {
                out = &out + &LaurentPolynomial::monomial(1, prefix);
            }
            prefix += phi[l.gen];
        }
    }
    out
}

/// Alexander matrix: rows are relators, columns generators.
pub fn alexander_matrix(p: &Presentation, phi: &[i64]) -> Vec<Vec<LaurentPolynomial>> {
    p.relators()
        .iter()
        .map(|r| (0..p.num_generators()).map(|g| fox_derivative(r, g, phi)).collect())
        .collect()
}

/// Fraction-free (Bareiss) determinant over `Z[t, t^-1]`.
pub fn determinant(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut a: Vec<Vec<LaurentPolynomial>> = m.to_vec();
    let mut prev = LaurentPolynomial::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return LaurentPolynomial::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `(t^k - 1) / (t - 1)` as a Laurent polynomial, for `k != 0`.
fn cyclotomic_ratio(k: i64) -> LaurentPolynomial {
    let num = &LaurentPolynomial::monomial(1, k) - &LaurentPolynomial::one();
    let den = LaurentPolynomial::from_coeffs(&[-1, 1]);
    num.div_exact(&den).expect("t - 1 divides t^k - 1")
}

fn drop_column(rows: &[Vec<LaurentPolynomial>], col: usize) -> Vec<Vec<LaurentPolynomial>> {
    rows.iter()
        .map(|r| r.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, x)| x.clone()).collect())
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Alexander polynomial of a group whose abelianization is `Z`, normalized
/// to lowest exponent 0 and positive leading coefficient.
///
/// The presentation is Tietze-simplified first. With one relator fewer than
/// generators a single column is deleted; otherwise the result is the gcd of
/// all maximal minors. Deleting column `j` yields the polynomial times
/// `(t^{phi_j} - 1)/(t - 1)`, which is divided out.
pub fn alexander_polynomial(p: &Presentation) -> Result<LaurentPolynomial> {
    let p = tietze_simplify(p, DEFAULT_BUDGET);
    let phi = infinite_cyclic_map(&p)?;
    let n = p.num_generators();
    let m = alexander_matrix(&p, &phi);
    let r = m.len();
    if r + 1 < n {
        return Ok(LaurentPolynomial::zero());
    }
    let mut cols: Vec<usize> = (0..n).filter(|&j| phi[j] != 0).collect();
    cols.sort_by_key(|&j| (phi[j].abs(), j));
    let normalized_minor = |rows: &[Vec<LaurentPolynomial>], col: usize| {
        let minor = determinant(&drop_column(rows, col));
        minor
            .div_exact(&cyclotomic_ratio(phi[col]))
            .ok_or_else(|| Error::Data("Alexander minor not divisible by column factor".into()))
    };
    let result = if r + 1 == n {
        normalized_minor(&m, cols[0])?
    } else {
        let mut g = LaurentPolynomial::zero();
        for rows in combinations(r, n - 1) {
            let sub: Vec<Vec<LaurentPolynomial>> = rows.iter().map(|&i| m[i].clone()).collect();
            g = g.gcd(&normalized_minor(&sub, cols[0])?);
        }
        g
    };
    Ok(result.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_rules() {
        let phi = [1, 1];
        // d(x y x^-1)/dx = 1 - x y x^-1  ->  1 - t
        let w = Word::from_pairs([(0, 1), (1, 1), (0, -1)]);
        assert_eq!(fox_derivative(&w, 0, &phi), LaurentPolynomial::from_coeffs(&[1, -1]));
        // d/dy = x -> t
        assert_eq!(fox_derivative(&w, 1, &phi), LaurentPolynomial::monomial(1, 1));
    }

    #[test]
    fn unknot() {
        let p = Presentation::free(vec!["x"]).unwrap();
        assert_eq!(alexander_polynomial(&p).unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn trefoil_from_braid_relation() {
        let r = Word::from_pairs([(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        let p = Presentation::new(vec!["x", "y"], vec![r]).unwrap();
        assert_eq!(alexander_polynomial(&p).unwrap().to_string(), "t^2 - t + 1");
    }

    #[test]
    fn torus_knot_two_five_with_non_unit_columns() {
        // a^2 = b^5, a -> t^5, b -> t^2
        let r = Word::from_pairs([(0, 2), (1, -5)]);
        let p = Presentation::new(vec!["a", "b"], vec![r]).unwrap();
        assert_eq!(alexander_polynomial(&p).unwrap().to_string(), "t^4 - t^3 + t^2 - t + 1");
    }

    #[test]
    fn rejects_non_knot_group() {
        let p = Presentation::free(vec!["a", "b"]).unwrap();
        assert!(matches!(alexander_polynomial(&p), Err(Error::NotAKnotGroup(_))));
    }

    #[test]
    fn determinant_small() {
        let one = LaurentPolynomial::one();
        let t = LaurentPolynomial::monomial(1, 1);
        let m = vec![vec![LaurentPolynomial::zero(), one.clone()], vec![t.clone(), one.clone()]];
        assert_eq!(determinant(&m), -t);
    }
}
