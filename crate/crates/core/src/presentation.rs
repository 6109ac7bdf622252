//! Finite presentations and the combinators the surgery constructions are
//! assembled from.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// A named generator. Its index is its position in the owning presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSymbol {
    pub name: String,
    pub index: usize,
}

/// Generators plus cyclically reduced relators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Validates names and relator indices; relators are cyclically reduced
    /// and trivial ones dropped.
    pub fn new<S: Into<String>>(names: Vec<S>, relators: Vec<Word>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        let count = names.len();
        let mut rels = Vec::with_capacity(relators.len());
        for r in relators {
            if let Some(g) = r.max_generator() {
                if g >= count {
                    return Err(Error::GeneratorOutOfRange { index: g, count });
                }
            }
            let r = r.cyclic_reduce();
            if !r.is_identity() {
                rels.push(r);
            }
        }
        Ok(Presentation { names, relators: rels })
    }

    /// Free group on the given names.
    pub fn free<S: Into<String>>(names: Vec<S>) -> Result<Self> {
        Presentation::new(names, Vec::new())
    }

    pub fn trivial() -> Self {
        Presentation { names: Vec::new(), relators: Vec::new() }
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorSymbol> + '_ {
        self.names
            .iter()
            .enumerate()
            .map(|(index, name)| GeneratorSymbol { name: name.clone(), index })
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn symbol(&self, name: &str) -> Result<GeneratorSymbol> {
        let index = self.generator_index(name)?;
        Ok(GeneratorSymbol { name: name.to_string(), index })
    }

    /// Checks that `w` only mentions generators of this presentation.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(g) if g >= self.names.len() => Err(Error::GeneratorOutOfRange {
                index: g,
                count: self.names.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> crate::word::WordDisplay<'a> {
        w.display_with(&self.names)
    }

    /// Parses a product such as `x1*x2^-1*x1^3` against this presentation's
    /// generator names. `1` is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::identity());
        }
        let mut pairs = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: i32 = e
                        .trim()
                        .parse()
                        .map_err(|_| Error::Syntax(format!("bad exponent in `{factor}`")))?;
                    (n.trim(), e)
                }
                None => (factor, 1),
            };
            pairs.push((self.generator_index(name)?, exp));
        }
        Ok(Word::from_pairs(pairs))
    }

    /// Appends relators, cyclically reduced, skipping trivial words and
    /// duplicates up to rotation and inversion.
    pub fn quotient_by_relators(&self, extra: &[Word]) -> Result<Presentation> {
        let mut out = self.clone();
        let mut seen: HashSet<Word> = out.relators.iter().map(Word::canonical_cyclic).collect();
        for w in extra {
            self.check_word(w)
                .map_err(|_| Error::UnknownGenerator(format!("index {}", w.max_generator().unwrap_or(0))))?;
            let r = w.cyclic_reduce();
            if r.is_identity() {
                continue;
            }
            if seen.insert(r.canonical_cyclic()) {
                out.relators.push(r);
            }
        }
        Ok(out)
    }

    /// Free product; the second factor's generators are appended after the
    /// first's. Returns the new index of each generator of `other`.
    pub fn free_product(&self, other: &Presentation) -> Result<(Presentation, Vec<usize>)> {
        let shift = self.names.len();
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let translation: Vec<usize> = (0..other.names.len()).map(|i| i + shift).collect();
        let images: Vec<Word> = translation.iter().map(|&i| Word::generator(i)).collect();
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().map(|r| r.map_generators(&images)));
        Ok((Presentation::new(names, relators)?, translation))
    }

    /// Adds a generator `name` commuting with each generator in `commuting`.
    /// Returns the new presentation and the index of the added generator.
    pub fn adjoin_commuting_generator(
        &self,
        name: &str,
        commuting: &[usize],
    ) -> Result<(Presentation, usize)> {
        let x = self.names.len();
        let mut names = self.names.clone();
        names.push(name.to_string());
        let mut relators = self.relators.clone();
        for &s in commuting {
            if s >= x {
                return Err(Error::GeneratorOutOfRange { index: s, count: x });
            }
            relators.push(Word::generator(x).commutator(&Word::generator(s)));
        }
        Ok((Presentation::new(names, relators)?, x))
    }

    /// Drops generator `gen` by substituting `replacement` for it everywhere.
    /// Remaining generators keep their relative order; returns the index
    /// translation (old index -> new index, `None` for the removed one).
    pub fn eliminate_generator(
        &self,
        gen: usize,
        replacement: &Word,
    ) -> Result<(Presentation, Vec<Option<usize>>)> {
        let name = &self.names[gen];
        let mut relators = Vec::with_capacity(self.relators.len());
        for r in &self.relators {
            relators.push(r.eliminate(gen, replacement, name)?);
        }
        let translation: Vec<Option<usize>> = (0..self.names.len())
            .map(|i| match i.cmp(&gen) {
                std::cmp::Ordering::Less => Some(i),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(i - 1),
            })
            .collect();
        let reindex: Vec<Word> = translation
            .iter()
            .map(|t| t.map(Word::generator).unwrap_or_default())
            .collect();
        let names: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != gen)
            .map(|(_, n)| n.clone())
            .collect();
        let relators = relators.iter().map(|r| r.map_generators(&reindex)).collect();
        Ok((Presentation::new(names, relators)?, translation))
    }

    pub(crate) fn with_relators(&self, relators: Vec<Word>) -> Presentation {
        Presentation { names: self.names.clone(), relators }
    }

    /// Same group with relators in a different order.
    pub fn permute_relators(&self, order: &[usize]) -> Presentation {
        self.with_relators(order.iter().map(|&i| self.relators[i].clone()).collect())
    }

    /// Same group with generators renumbered: old generator `i` gets index
    /// `order.iter().position(i)`.
    pub fn permute_generators(&self, order: &[usize]) -> Presentation {
        let mut images = vec![Word::identity(); self.names.len()];
        for (new, &old) in order.iter().enumerate() {
            images[old] = Word::generator(new);
        }
        Presentation {
            names: order.iter().map(|&i| self.names[i].clone()).collect(),
            relators: self.relators.iter().map(|r| r.map_generators(&images)).collect(),
        }
    }

    /// Text in the syntax accepted by common computational-algebra systems:
    /// `F := FreeGroup("a","b"); rels := [ a^5, a*b*a^-1*b^-1 ];`
    pub fn to_gap(&self) -> String {
        let gens: Vec<String> = self.names.iter().map(|n| format!("\"{n}\"")).collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.display_with(&self.names).to_string())
            .collect();
        let body = if rels.is_empty() {
            " ".to_string()
        } else {
            format!(" {} ", rels.join(", "))
        };
        format!("F := FreeGroup({}); rels := [{}];", gens.join(","), body)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self.names.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| {
                    r.letters()
                        .iter()
                        .map(|l| (self.names[l.gen].clone(), l.exp()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PresentationJson) -> Result<Presentation> {
        let skeleton = Presentation::free(json.generators.clone())?;
        let mut relators = Vec::with_capacity(json.relators.len());
        for r in &json.relators {
            relators.push(word_from_json(&skeleton, r)?);
        }
        Presentation::new(json.generators.clone(), relators)
    }
}

/// Serialized word: `[[name, exponent], ...]`.
pub type WordJson = Vec<(String, i32)>;

pub fn word_from_json(p: &Presentation, letters: &WordJson) -> Result<Word> {
    let mut pairs = Vec::with_capacity(letters.len());
    for (name, exp) in letters {
        if *exp == 0 {
            return Err(Error::Data(format!("zero exponent on `{name}`")));
        }
        pairs.push((p.generator_index(name)?, *exp));
    }
    Ok(Word::from_pairs(pairs))
}

pub fn word_to_json(p: &Presentation, w: &Word) -> WordJson {
    w.letters().iter().map(|l: &Letter| (p.names[l.gen].clone(), l.exp())).collect()
}

/// Wire form of a [`Presentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<WordJson>,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PresentationJson::deserialize(d)?;
        Presentation::from_json(&json).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.names.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.display_with(&self.names))?;
        }
        write!(f, " >")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_product_shifts_indices() {
        let a = Presentation::free(vec!["a"]).unwrap();
        let b = Presentation::new(vec!["b"], vec![Word::power_of(0, 2)]).unwrap();
        let (p, tr) = a.free_product(&b).unwrap();
        assert_eq!(tr, vec![1]);
        assert_eq!(p.names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(p.relators(), &[Word::power_of(1, 2)]);

        let (q, _) = Presentation::trivial().free_product(&b).unwrap();
        assert_eq!(q, b);
    }

    #[test]
    fn free_product_rejects_name_clash() {
        let a = Presentation::free(vec!["a"]).unwrap();
        assert_eq!(a.free_product(&a).unwrap_err(), Error::DuplicateGenerator("a".into()));
    }

    #[test]
    fn quotient_drops_trivial_and_duplicates() {
        let a = Presentation::free(vec!["a"]).unwrap();
        let p = a.quotient_by_relators(&[Word::power_of(0, 5)]).unwrap();
        assert_eq!(p.relators(), &[Word::power_of(0, 5)]);
        assert_eq!(p.quotient_by_relators(&[Word::identity()]).unwrap(), p);
        assert_eq!(p.quotient_by_relators(&[Word::power_of(0, -5)]).unwrap(), p);
        assert!(p.quotient_by_relators(&[Word::generator(3)]).is_err());
    }

    #[test]
    fn new_rejects_out_of_range() {
        let err = Presentation::new(vec!["a"], vec![Word::generator(1)]).unwrap_err();
        assert_eq!(err, Error::GeneratorOutOfRange { index: 1, count: 1 });
    }

    #[test]
    fn adjoin_commuting() {
        let a = Presentation::free(vec!["a"]).unwrap();
        let (p, x) = a.adjoin_commuting_generator("x", &[0]).unwrap();
        assert_eq!(x, 1);
        assert_eq!(p.to_string(), "< a, x | x*a*x^-1*a^-1 >");
        let (q, _) = a.adjoin_commuting_generator("x", &[]).unwrap();
        assert!(q.relators().is_empty());
    }

    #[test]
    fn gap_export() {
        let p = Presentation::new(vec!["a"], vec![Word::power_of(0, 5)]).unwrap();
        assert_eq!(p.to_gap(), "F := FreeGroup(\"a\"); rels := [ a^5 ];");
        let f = Presentation::free(vec!["g1", "g2"]).unwrap();
        assert_eq!(f.to_gap(), "F := FreeGroup(\"g1\",\"g2\"); rels := [ ];");
    }

    #[test]
    fn json_shape() {
        let p = Presentation::new(vec!["a", "b"], vec![Word::from_pairs([(0, 1), (1, -1)])]).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"generators":["a","b"],"relators":[[["a",1],["b",-1]]]}"#);
        let back: Presentation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn parse_word() {
        let p = Presentation::free(vec!["x1", "x2"]).unwrap();
        let w = p.parse_word("x1*x2^-1*x1^2").unwrap();
        assert_eq!(p.display_word(&w).to_string(), "x1*x2^-1*x1^2");
        assert!(p.parse_word("y").is_err());
        assert!(p.parse_word("1").unwrap().is_identity());
    }
}
