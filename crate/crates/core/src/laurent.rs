//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse exponent -> coefficient map; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * t^e`
    pub fn monomial<C: Into<BigInt>>(c: C, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// From coefficients of `t^0, t^1, ...`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(cs: &[C]) -> Self {
        let mut p = Self::zero();
        for (i, c) in cs.iter().enumerate() {
            p.add_term(i as i64, c.clone().into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn leading(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval(&self, t: i64) -> BigInt {
        assert!(
            t.abs() == 1 || self.min_degree().is_none_or(|d| d >= 0),
            "negative powers only evaluate at t = ±1"
        );
        let t = BigInt::from(t);
        self.coeffs
            .iter()
            .map(|(&e, c)| {
                if e >= 0 {
                    c * num_traits::pow(t.clone(), e as usize)
                } else {
                    // only reached for t = ±1
                    c * num_traits::pow(t.clone(), (-e) as usize)
                }
            })
            .sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Shifted so the lowest exponent is 0, sign chosen so the leading
    /// coefficient is positive. Zero stays zero.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_degree() else {
            return Self::zero();
        };
        let p = self.shift(-lo);
        if p.leading().is_some_and(|c| c.is_negative()) {
            -p
        } else {
            p
        }
    }

    /// Exact quotient `self / d` when `d` divides `self` in `Z[t, t^-1]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut q = Self::zero();
        let dlead_e = d.max_degree().unwrap();
        let dlead = d.leading().unwrap().clone();
        let dlow = d.min_degree().unwrap();
        while !rem.is_zero() {
            let re = rem.max_degree().unwrap();
            // remaining span must still fit a multiple of d
            if re - rem.min_degree().unwrap() < dlead_e - dlow {
                return None;
            }
            let (c, r) = rem.leading().unwrap().div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            let term = Self::monomial(c, re - dlead_e);
            rem = &rem - &(&term * d);
            q = &q + &term;
        }
        Some(q)
    }

    /// Gcd in `Z[t]` of the polynomial parts (after shifting to nonnegative
    /// exponents), normalized. Units `±t^k` are ignored.
    pub fn gcd(&self, other: &Self) -> Self {
        let a = to_dense(&self.normalized());
        let b = to_dense(&other.normalized());
        from_dense(&poly_gcd(a, b)).normalized()
    }
}

fn to_dense(p: &LaurentPolynomial) -> Vec<BigInt> {
    let Some(hi) = p.max_degree() else { return Vec::new() };
    (0..=hi).map(|e| p.coeff(e)).collect()
}

fn from_dense(v: &[BigInt]) -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs(v)
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (both dense, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    trim(&mut r);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bi;
        }
        trim(&mut r);
    }
    r
}

/// Primitive-remainder-sequence gcd over `Z[t]`.
fn poly_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = (a, b);
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let c = content(&a).gcd(&content(&b));
    let mut a = primitive(&a);
    let mut b = primitive(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    a.iter().map(|x| x * &c).collect()
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff = if abs.is_one() && e != 0 { String::new() } else { abs.to_string() };
            match e {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(cs)
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(&[1, -3, 1]).to_string(), "t^2 - 3t + 1");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(LaurentPolynomial::monomial(-2, -1).to_string(), "-2t^-1");
    }

    #[test]
    fn normalize() {
        let q = LaurentPolynomial::monomial(-1, -1);
        let tref = (&p(&[1, -1, 1]) * &q).normalized();
        assert_eq!(tref, p(&[1, -1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]); // t^2 - 1
        let b = p(&[-1, 1]); // t - 1
        assert_eq!(a.div_exact(&b), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), None);
        assert_eq!(p(&[2]).div_exact(&p(&[3])), None);
    }

    #[test]
    fn gcd() {
        let a = &p(&[1, -1, 1]) * &p(&[2, 1]);
        let b = &p(&[1, -1, 1]) * &p(&[-1, 1]);
        assert_eq!(a.gcd(&b), p(&[1, -1, 1]));
        assert_eq!(p(&[4]).gcd(&p(&[6])), p(&[2]));
        assert_eq!(LaurentPolynomial::zero().gcd(&p(&[1, 1])), p(&[1, 1]));
    }

    #[test]
    fn evaluation() {
        let a = p(&[1, -3, 1]);
        assert_eq!(a.eval(1), BigInt::from(-1));
        assert_eq!(a.eval(-1), BigInt::from(5));
    }
}
