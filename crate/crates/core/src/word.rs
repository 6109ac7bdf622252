//! Freely reduced words over an indexed generator alphabet.

use std::fmt;

use crate::error::{Error, Result};

/// A generator raised to `+1` or `-1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, exp: i32) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { gen, inverse: exp < 0 }
    }

    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn exp(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn generator(gen: usize) -> Self {
        Word { letters: vec![Letter::pos(gen)] }
    }

    /// `gen^exp`, for any integer exponent.
    pub fn power_of(gen: usize, exp: i64) -> Self {
        let letter = if exp < 0 { Letter::neg(gen) } else { Letter::pos(gen) };
        Word { letters: vec![letter; exp.unsigned_abs() as usize] }
    }

    /// Builds a word from arbitrary letters, freely reducing them.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    /// Builds a word from `(generator, exponent)` pairs; exponents may be any
    /// nonzero integer.
    pub fn from_pairs<I: IntoIterator<Item = (usize, i32)>>(pairs: I) -> Self {
        Word::from_letters(pairs.into_iter().flat_map(|(g, e)| {
            let l = if e < 0 { Letter::neg(g) } else { Letter::pos(g) };
            std::iter::repeat_n(l, e.unsigned_abs() as usize)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `self * other * self^-1 * other^-1`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.multiply(other).multiply(&self.inverse()).multiply(&other.inverse())
    }

    /// Strips matching first/last letter pairs.
    pub fn cyclic_reduce(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i].cancels(l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word { letters: l[i..j].to_vec() }
    }

    /// Conjugate by moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::identity();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word::from_letters(letters)
    }

    /// Lexicographically least rotation of the cyclic reduction of `self` or
    /// of its inverse. Two relators define the same normal closure member
    /// up to rotation and inversion iff their canonical forms agree.
    pub fn canonical_cyclic(&self) -> Word {
        let c = self.cyclic_reduce();
        let inv = c.inverse();
        let n = c.len();
        let mut best = c.clone();
        for base in [&c, &inv] {
            for k in 0..n.max(1) {
                let r = base.rotate(k);
                if r < best {
                    best = r;
                }
            }
        }
        best
    }

    /// True if the cyclic reductions of `self` and `other` are rotations of
    /// each other.
    pub fn is_cyclic_rotation_of(&self, other: &Word) -> bool {
        let a = self.cyclic_reduce();
        let b = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_identity() {
            return true;
        }
        (0..a.len()).any(|k| a.rotate(k) == b)
    }

    /// Replaces every occurrence of `gen^{±1}` by `replacement^{±1}`.
    pub fn substitute(&self, gen: usize, replacement: &Word) -> Word {
        let inv = replacement.inverse();
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if l.gen == gen {
                let r = if l.inverse { &inv } else { replacement };
                for &x in &r.letters {
                    push_reduced(&mut out, x);
                }
            } else {
                push_reduced(&mut out, l);
            }
        }
        Word { letters: out }
    }

    /// Substitution used for eliminating `gen`; refuses replacements that
    /// mention `gen` themselves.
    pub fn eliminate(&self, gen: usize, replacement: &Word, name: &str) -> Result<Word> {
        if replacement.contains(gen) {
            return Err(Error::SubstitutionCycle(name.to_string()));
        }
        Ok(self.substitute(gen, replacement))
    }

    /// Simultaneously replaces every generator `g` by `images[g]`.
    pub fn map_generators(&self, images: &[Word]) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for &l in &self.letters {
            let img = &images[l.gen];
            if l.inverse {
                for &x in img.letters.iter().rev() {
                    push_reduced(&mut out, x.inv());
                }
            } else {
                for &x in &img.letters {
                    push_reduced(&mut out, x);
                }
            }
        }
        Word { letters: out }
    }

    pub fn contains(&self, gen: usize) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.exp() as i64).sum()
    }

    /// Exponent-sum vector over `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for l in &self.letters {
            v[l.gen] += l.exp() as i64;
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Sorted list of generators appearing in the word.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.letters.iter().map(|l| l.gen).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Renders with the given generator names, e.g. `a*b^-1*a^2`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }

    /// Maximal runs of a single letter, as `(generator, signed exponent)`.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((g, e)) if *g == l.gen && (*e < 0) == l.inverse => *e += l.exp() as i64,
                _ => out.push((l.gen, l.exp() as i64)),
            }
        }
        out
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if let Some(&last) = out.last() {
        if last.cancels(l) {
            out.pop();
            return;
        }
    }
    out.push(l);
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.word.syllables().into_iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            let name = self.names.get(g).map(String::as_str).unwrap_or("?");
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}
