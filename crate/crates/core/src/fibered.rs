//! Fibered knots given by the monodromy of their fiber surface, and the
//! mapping-torus presentation of the knot group.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::KnotPresentation;
use crate::presentation::{word_from_json, word_to_json, Presentation, WordJson};
use crate::word::Word;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Monodromy of a genus-`g` fiber on the free group with generators
/// `a1, b1, ..., ag, bg` (indices `2i`, `2i+1`), with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberedKnotData {
    genus: usize,
    forward: Vec<Word>,
    backward: Vec<Word>,
}

/// Fiber generator names in index order.
pub fn fiber_names(genus: usize) -> Vec<String> {
    (1..=genus).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect()
}

/// `[a1,b1][a2,b2]...[ag,bg]`
pub fn boundary_word(genus: usize) -> Word {
    (0..genus).fold(Word::identity(), |acc, i| {
        acc.multiply(&Word::generator(2 * i).commutator(&Word::generator(2 * i + 1)))
    })
}

impl FiberedKnotData {
    /// Checks both compositions return every generator and that the
    /// boundary word maps to a cyclic rotation of itself.
    pub fn new(genus: usize, forward: Vec<Word>, backward: Vec<Word>) -> Result<Self> {
        let n = 2 * genus;
        if genus == 0 {
            return Err(Error::InvalidMonodromy("genus must be at least 1".into()));
        }
        if forward.len() != n || backward.len() != n {
            return Err(Error::InvalidMonodromy(format!("need {n} images in each direction")));
        }
        for w in forward.iter().chain(&backward) {
            if w.max_generator().is_some_and(|g| g >= n) {
                return Err(Error::InvalidMonodromy("image uses a non-fiber generator".into()));
            }
        }
        let names = fiber_names(genus);
        for g in 0..n {
            let there_and_back = forward[g].map_generators(&backward);
            let back_and_forth = backward[g].map_generators(&forward);
            if there_and_back != Word::generator(g) || back_and_forth != Word::generator(g) {
                return Err(Error::InvalidMonodromy(format!(
                    "backward is not inverse to forward on {}",
                    names[g]
                )));
            }
        }
        let boundary = boundary_word(genus);
        if !boundary.map_generators(&forward).is_cyclic_rotation_of(&boundary) {
            return Err(Error::InvalidMonodromy("boundary word is not preserved up to conjugacy".into()));
        }
        Ok(FiberedKnotData { genus, forward, backward })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn forward(&self) -> &[Word] {
        &self.forward
    }

    pub fn backward(&self) -> &[Word] {
        &self.backward
    }

    pub fn inverse(&self) -> FiberedKnotData {
        FiberedKnotData { genus: self.genus, forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// Simultaneous substitution of each fiber generator by its image.
    pub fn apply_automorphism(&self, w: &Word, direction: Direction) -> Result<Word> {
        if let Some(g) = w.max_generator().filter(|&g| g >= 2 * self.genus) {
            return Err(Error::UnknownGenerator(format!("fiber generator index {g}")));
        }
        let images = match direction {
            Direction::Forward => &self.forward,
            Direction::Backward => &self.backward,
        };
        Ok(w.map_generators(images))
    }

    fn fiber_skeleton(&self) -> Presentation {
        Presentation::free(fiber_names(self.genus)).expect("fiber names are distinct")
    }

    pub fn to_json(&self) -> FiberedJson {
        let fiber = self.fiber_skeleton();
        let map = |images: &[Word]| {
            fiber
                .names()
                .iter()
                .zip(images)
                .map(|(n, w)| (n.clone(), word_to_json(&fiber, w)))
                .collect()
        };
        FiberedJson { genus: self.genus, forward: map(&self.forward), backward: map(&self.backward) }
    }

    pub fn from_json(json: &FiberedJson) -> Result<Self> {
        let genus = json.genus;
        let fiber = Presentation::free(fiber_names(genus))?;
        let read = |m: &BTreeMap<String, WordJson>| -> Result<Vec<Word>> {
            if let Some(extra) = m.keys().find(|k| fiber.generator_index(k).is_err()) {
                return Err(Error::UnknownGenerator(extra.clone()));
            }
            fiber
                .names()
                .iter()
                .map(|n| {
                    let w = m
                        .get(n)
                        .ok_or_else(|| Error::InvalidMonodromy(format!("no image for {n}")))?;
                    word_from_json(&fiber, w)
                })
                .collect()
        };
        FiberedKnotData::new(genus, read(&json.forward)?, read(&json.backward)?)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: FiberedJson =
            serde_json::from_str(text).map_err(|e| Error::Data(format!("monodromy file: {e}")))?;
        Self::from_json(&json)
    }
}

/// Wire form: `{genus, forward: {gen: word}, backward: {gen: word}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberedJson {
    pub genus: usize,
    pub forward: BTreeMap<String, WordJson>,
    pub backward: BTreeMap<String, WordJson>,
}

/// `< a1, b1, ..., ag, bg, m | f(a_i) = m^-1 a_i m, f(b_i) = m^-1 b_i m >`
/// with meridian `m` and longitude `[a1,b1]...[ag,bg]`.
pub fn mapping_torus_presentation(f: &FiberedKnotData) -> Result<KnotPresentation> {
    let n = 2 * f.genus;
    let mut names = fiber_names(f.genus);
    names.push("m".into());
    let m = Word::generator(n);
    let relators: Vec<Word> = (0..n)
        .map(|g| {
            let conj = m.inverse().multiply(&Word::generator(g)).multiply(&m);
            f.forward[g].multiply(&conj.inverse())
        })
        .collect();
    let group = Presentation::new(names, relators)?;
    let mut kp = KnotPresentation::new(group, m, boundary_word(f.genus))?;
    kp.genus_hint = Some(f.genus as u32);
    Ok(kp)
}

/// Bundled monodromies, certified against the braid route in the test suite.
pub fn builtin_monodromy(name: &str) -> Option<FiberedKnotData> {
    let text = match name {
        "trefoil" => TREFOIL_JSON,
        "fig8" => FIG8_JSON,
        _ => return None,
    };
    Some(FiberedKnotData::from_json_str(text).expect("bundled monodromy is valid"))
}

const TREFOIL_JSON: &str = include_str!("../data/trefoil_monodromy.json");
const FIG8_JSON: &str = include_str!("../data/fig8_monodromy.json");

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snf::abelianization;

    fn identity(genus: usize) -> FiberedKnotData {
        let ids: Vec<Word> = (0..2 * genus).map(Word::generator).collect();
        FiberedKnotData::new(genus, ids.clone(), ids).unwrap()
    }

    #[test]
    fn identity_monodromy_torus() {
        let kp = mapping_torus_presentation(&identity(1)).unwrap();
        assert_eq!(abelianization(&kp.group).free_rank, 3);
        assert_eq!(kp.group.num_generators(), 3);
    }

    #[test]
    fn apply_round_trip_and_errors() {
        let f = builtin_monodromy("trefoil").unwrap();
        assert_eq!(f.apply_automorphism(&Word::identity(), Direction::Forward).unwrap(), Word::identity());
        let a = Word::generator(0);
        let there = f.apply_automorphism(&a, Direction::Forward).unwrap();
        assert_eq!(f.apply_automorphism(&there, Direction::Backward).unwrap(), a);
        assert!(f.apply_automorphism(&Word::generator(2), Direction::Forward).is_err());
        let b = boundary_word(1);
        assert!(f.apply_automorphism(&b, Direction::Forward).unwrap().is_cyclic_rotation_of(&b));
    }

    #[test]
    fn rejects_non_automorphism() {
        // a -> a^2 is not invertible
        let fwd = vec![Word::power_of(0, 2), Word::generator(1)];
        let bwd = vec![Word::generator(0), Word::generator(1)];
        assert!(matches!(FiberedKnotData::new(1, fwd, bwd), Err(Error::InvalidMonodromy(_))));
    }

    #[test]
    fn json_round_trip() {
        let f = builtin_monodromy("fig8").unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(FiberedKnotData::from_json_str(&text).unwrap(), f);
    }
}
