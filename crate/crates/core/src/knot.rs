//! Knot groups with peripheral systems.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord};
use crate::error::{Error, Result};
use crate::homcount::for_each_homomorphism;
use crate::presentation::{word_from_json, word_to_json, Presentation, PresentationJson, WordJson};
use crate::snf::{abelianization, infinite_cyclic_map};
use crate::target::FiniteTarget;
use crate::word::Word;

/// A knot group together with its meridian and 0-framed longitude.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotPresentation {
    pub group: Presentation,
    pub meridian: Word,
    pub longitude: Word,
    /// Advisory only.
    pub genus_hint: Option<u32>,
}

impl KnotPresentation {
    pub fn new(group: Presentation, meridian: Word, longitude: Word) -> Result<Self> {
        group.check_word(&meridian)?;
        group.check_word(&longitude)?;
        Ok(KnotPresentation { group, meridian, longitude, genus_hint: None })
    }

    pub fn to_json(&self) -> KnotJson {
        KnotJson {
            group: self.group.to_json(),
            meridian: word_to_json(&self.group, &self.meridian),
            longitude: word_to_json(&self.group, &self.longitude),
            genus_hint: self.genus_hint,
        }
    }

    pub fn from_json(json: &KnotJson) -> Result<Self> {
        let group = Presentation::from_json(&json.group)?;
        let meridian = word_from_json(&group, &json.meridian)?;
        let longitude = word_from_json(&group, &json.longitude)?;
        Ok(KnotPresentation { group, meridian, longitude, genus_hint: json.genus_hint })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotJson {
    pub group: PresentationJson,
    pub meridian: WordJson,
    pub longitude: WordJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus_hint: Option<u32>,
}

/// Artin action of `σ_i^{±1}` (0-based `i`) on generator `j`.
fn artin_letter(i: usize, positive: bool, j: usize) -> Word {
    let x = |g| Word::generator(g);
    match (positive, j) {
        // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        (true, j) if j == i => x(i).multiply(&x(i + 1)).multiply(&x(i).inverse()),
        (true, j) if j == i + 1 => x(i),
        // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        (false, j) if j == i => x(i + 1),
        (false, j) if j == i + 1 => x(i + 1).inverse().multiply(&x(i)).multiply(&x(i + 1)),
        _ => x(j),
    }
}

/// Images of the free generators under the braid's Artin automorphism,
/// letters applied as `φ_{k_1} ∘ φ_{k_2} ∘ ...`.
pub fn artin_action(b: &BraidWord) -> Vec<Word> {
    let n = b.strands();
    let mut images: Vec<Word> = (0..n).map(Word::generator).collect();
    for &k in b.letters() {
        let i = k.unsigned_abs() as usize - 1;
        images = (0..n)
            .map(|j| artin_letter(i, k > 0, j).map_generators(&images))
            .collect();
    }
    images
}

/// Splits a reduced word of the form `A x_j A^-1` into `(A, j)`.
fn split_conjugate(w: &Word) -> Option<(Word, usize)> {
    let l = w.letters();
    if l.len().is_multiple_of(2) {
        return None;
    }
    let mid = l.len() / 2;
    if l[mid].inverse {
        return None;
    }
    let a = Word::from_letters(l[..mid].iter().copied());
    let back = Word::from_letters(l[mid + 1..].iter().copied());
    (a.inverse() == back).then_some((a, l[mid].gen))
}

/// Wirtinger-style presentation of the braid closure: generators
/// `x1..xn`, relators `x_i^-1 β(x_i)` for `i < n` (the last is redundant).
///
/// Each `β(x_i)` has the form `A_i x_{π(i)} A_i^-1`; the product of the
/// `A_i` along the cycle of strands starting at strand 1 commutes with
/// `x1`; multiplying by `x1^{-s}`, `s` its exponent sum, makes it
/// null-homologous.
pub fn wirtinger_from_braid(b: &BraidWord) -> Result<KnotPresentation> {
    let n = b.strands();
    let images = artin_action(b);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let relators: Vec<Word> = (0..n.saturating_sub(1))
        .map(|i| Word::generator(i).inverse().multiply(&images[i]))
        .collect();
    let group = Presentation::new(names, relators)?;

    let mut parts = Vec::with_capacity(n);
    let mut strand = 0;
    for _ in 0..n {
        let (a, next) = split_conjugate(&images[strand])
            .ok_or_else(|| Error::Data("Artin image is not a conjugate of a generator".into()))?;
        parts.push(a);
        strand = next;
    }
    if strand != 0 {
        return Err(Error::NotAKnot { components: 0 });
    }
    let mut longitude = Word::identity();
    for a in &parts {
        longitude = longitude.multiply(a);
    }
    // conjugators are only defined up to meridian powers, so the traced
    // word carries its own framing; remove all of it
    let framing: i64 = longitude.exponent_sums(n).iter().sum();
    let longitude = longitude.multiply(&Word::power_of(0, -framing));
    KnotPresentation::new(group, Word::generator(0), longitude)
}

/// Named knots available without input files.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BuiltinKnot {
    Unknot,
    Trefoil,
    FigureEight,
}

impl BuiltinKnot {
    pub const ALL: [BuiltinKnot; 3] = [BuiltinKnot::Unknot, BuiltinKnot::Trefoil, BuiltinKnot::FigureEight];

    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "unknot" | "0_1" => Ok(BuiltinKnot::Unknot),
            "trefoil" | "3_1" => Ok(BuiltinKnot::Trefoil),
            "fig8" | "figure-eight" | "figure8" | "4_1" => Ok(BuiltinKnot::FigureEight),
            _ => Err(Error::Syntax(format!("unknown builtin knot `{name}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BuiltinKnot::Unknot => "unknot",
            BuiltinKnot::Trefoil => "trefoil",
            BuiltinKnot::FigureEight => "fig8",
        }
    }

    pub fn braid_text(self) -> &'static str {
        match self {
            BuiltinKnot::Unknot => "n=1;",
            BuiltinKnot::Trefoil => "1 1 1",
            BuiltinKnot::FigureEight => "1 -2 1 -2",
        }
    }

    pub fn braid(self) -> BraidWord {
        parse_braid(self.braid_text()).expect("builtin braid is valid")
    }

    pub fn knot(self) -> KnotPresentation {
        let mut kp = wirtinger_from_braid(&self.braid()).expect("builtin braid closes to a knot");
        kp.genus_hint = Some(match self {
            BuiltinKnot::Unknot => 0,
            _ => 1,
        });
        kp
    }
}

impl fmt::Display for BuiltinKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One named check of [`validate_peripheral`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeripheralReport {
    pub checks: Vec<Check>,
}

impl PeripheralReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for PeripheralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

pub const CHECK_ABELIAN: &str = "meridian-generates-abelianization";
pub const CHECK_LONGITUDE: &str = "longitude-null-homologous";
pub const CHECK_COMMUTE: &str = "peripheral-commutation";

/// Checks the three peripheral-system invariants: abelianization `Z`
/// generated by the meridian, longitude with zero image there, and
/// meridian/longitude images commuting under every homomorphism into each
/// target.
pub fn validate_peripheral(kp: &KnotPresentation, targets: &[FiniteTarget]) -> PeripheralReport {
    let mut checks = Vec::new();
    let n = kp.group.num_generators();
    let phi = infinite_cyclic_map(&kp.group);
    let image = |w: &Word, phi: &[i64]| -> i64 {
        w.exponent_sums(n).iter().zip(phi).map(|(e, p)| e * p).sum()
    };

    match &phi {
        Ok(phi) => {
            let m = image(&kp.meridian, phi);
            checks.push(Check {
                name: CHECK_ABELIAN.into(),
                passed: m.abs() == 1,
                detail: format!("abelianization Z, meridian maps to {m}"),
            });
            let l = image(&kp.longitude, phi);
            checks.push(Check {
                name: CHECK_LONGITUDE.into(),
                passed: l == 0,
                detail: format!("longitude maps to {l}"),
            });
        }
        Err(_) => {
            let ab = abelianization(&kp.group);
            checks.push(Check {
                name: CHECK_ABELIAN.into(),
                passed: false,
                detail: format!("abelianization is {ab}, not Z"),
            });
            checks.push(Check {
                name: CHECK_LONGITUDE.into(),
                passed: false,
                detail: "no map to Z to evaluate against".into(),
            });
        }
    }

    let mut failure = None;
    let mut total: u128 = 0;
    for t in targets {
        let table = t.table();
        let eval = |w: &Word, imgs: &[u16]| {
            w.letters().iter().fold(0u16, |x, l| {
                let y = if l.inverse { table.inv(imgs[l.gen]) } else { imgs[l.gen] };
                table.mul(x, y)
            })
        };
        let flow = for_each_homomorphism(&kp.group, t, |imgs| {
            total += 1;
            let m = eval(&kp.meridian, imgs);
            let l = eval(&kp.longitude, imgs);
            if table.mul(m, l) != table.mul(l, m) {
                failure = Some(format!(
                    "{}: meridian -> {}, longitude -> {} do not commute",
                    t.name(),
                    t.element(m),
                    t.element(l)
                ));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if flow.is_break() {
            break;
        }
    }
    let names: Vec<&str> = targets.iter().map(FiniteTarget::name).collect();
    checks.push(Check {
        name: CHECK_COMMUTE.into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| {
            format!("{total} homomorphisms into [{}] checked", names.join(", "))
        }),
    });
    PeripheralReport { checks }
}
