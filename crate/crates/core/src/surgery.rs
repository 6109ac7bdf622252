//! Dehn surgery, cable-link and surface-complement group builders.
//!
//! Slopes follow the convention `q/p`: the filling relator is
//! `meridian^q * longitude^p`. Literature writing `p/q` for the same curve
//! has the roles of `p` and `q` swapped.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::KnotPresentation;
use crate::presentation::{word_to_json, Presentation, PresentationJson, WordJson};
use crate::word::Word;

/// Cable / surgery coefficients with `q >= 1` and `gcd(p, q) = 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurgerySlope {
    p: i64,
    q: i64,
}

impl SurgerySlope {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 1 || p.gcd(&q) != 1 {
            return Err(Error::InvalidSlope { p, q });
        }
        Ok(SurgerySlope { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }
}

impl fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={},q={}", self.p, self.q)
    }
}

/// Peripheral roles tracked through the cable-link construction.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// Meridian of the companion knot.
    Meridian,
    /// Longitude of the companion knot.
    Longitude,
    /// Meridian of the solid torus containing the cable.
    CableMeridian,
    /// Longitude of the solid torus containing the cable.
    CableLongitude,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPresentation {
    pub presentation: Presentation,
    pub labels: BTreeMap<Role, Word>,
}

impl LabeledPresentation {
    pub fn new(presentation: Presentation, labels: BTreeMap<Role, Word>) -> Result<Self> {
        for w in labels.values() {
            presentation.check_word(w)?;
        }
        Ok(LabeledPresentation { presentation, labels })
    }

    pub fn label(&self, role: Role) -> Option<&Word> {
        self.labels.get(&role)
    }

    pub fn labels_json(&self) -> BTreeMap<Role, WordJson> {
        self.labels
            .iter()
            .map(|(r, w)| (*r, word_to_json(&self.presentation, w)))
            .collect()
    }
}

pub const CABLE_MERIDIAN_NAME: &str = "mu";
pub const CABLE_LONGITUDE_NAME: &str = "lam";

fn filling_word(meridian: &Word, longitude: &Word, s: SurgerySlope) -> Word {
    meridian.pow(s.q).multiply(&longitude.pow(s.p))
}

/// Knot group modulo `meridian^q * longitude^p`.
pub fn dehn_surgery_group(kp: &KnotPresentation, s: SurgerySlope) -> Result<Presentation> {
    kp.group.quotient_by_relators(&[filling_word(&kp.meridian, &kp.longitude, s)])
}

/// Group of the knot together with its `(p, q)`-cable: the knot group free
/// product `Z[mu] + Z[lam]`, amalgamated by
/// `m^q l^p = mu^q lam^p`, with `m, l` expanded to the knot's peripheral
/// words.
pub fn cable_link_group(kp: &KnotPresentation, s: SurgerySlope) -> Result<LabeledPresentation> {
    let torus = Presentation::new(
        vec![CABLE_MERIDIAN_NAME, CABLE_LONGITUDE_NAME],
        vec![Word::generator(0).commutator(&Word::generator(1))],
    )?;
    let (joined, tr) = kp.group.free_product(&torus)?;
    let mu = Word::generator(tr[0]);
    let lam = Word::generator(tr[1]);
    let relator = filling_word(&kp.meridian, &kp.longitude, s)
        .multiply(&filling_word(&mu, &lam, s).inverse());
    let presentation = joined.quotient_by_relators(&[relator])?;
    let labels = BTreeMap::from([
        (Role::Meridian, kp.meridian.clone()),
        (Role::Longitude, kp.longitude.clone()),
        (Role::CableMeridian, mu),
        (Role::CableLongitude, lam),
    ]);
    LabeledPresentation::new(presentation, labels)
}

/// [`cable_link_group`] with the cable torus meridian and longitude killed.
pub fn half_complement_group(kp: &KnotPresentation, s: SurgerySlope) -> Result<Presentation> {
    let cable = cable_link_group(kp, s)?;
    let mu = cable.label(Role::CableMeridian).cloned().expect("cable meridian label");
    let lam = cable.label(Role::CableLongitude).cloned().expect("cable longitude label");
    cable.presentation.quotient_by_relators(&[mu, lam])
}

/// Complement of the doubled surface. The amalgam of two copies of the half
/// identifies every generator with its twin, so the group is that of one
/// half; this returns [`half_complement_group`].
pub fn double_complement_group(kp: &KnotPresentation, s: SurgerySlope) -> Result<Presentation> {
    half_complement_group(kp, s)
}

/// One family member per `p` coprime to `q`, in input order.
#[derive(Clone, Debug)]
pub struct Family {
    pub members: Vec<(SurgerySlope, Presentation)>,
    /// `p` values dropped because `gcd(p, q) != 1`.
    pub skipped: Vec<i64>,
}

pub fn build_family(kp: &KnotPresentation, q: i64, p_values: &[i64]) -> Result<Family> {
    if q < 1 {
        return Err(Error::InvalidSlope { p: p_values.first().copied().unwrap_or(0), q });
    }
    let mut members = Vec::new();
    let mut skipped = Vec::new();
    for &p in p_values {
        match SurgerySlope::new(p, q) {
            Ok(s) => members.push((s, double_complement_group(kp, s)?)),
            Err(_) => skipped.push(p),
        }
    }
    Ok(Family { members, skipped })
}

/// One record of a family manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub p: i64,
    pub q: i64,
    pub presentation: PresentationJson,
    pub labels: BTreeMap<Role, WordJson>,
}

impl FamilyRecord {
    /// The record for slope `s`: the family group plus the knot's peripheral
    /// labels carried into it (the cable roles are trivial there).
    pub fn new(kp: &KnotPresentation, s: SurgerySlope, group: &Presentation) -> Self {
        let labels = BTreeMap::from([
            (Role::Meridian, word_to_json(group, &kp.meridian)),
            (Role::Longitude, word_to_json(group, &kp.longitude)),
        ]);
        FamilyRecord { p: s.p, q: s.q, presentation: group.to_json(), labels }
    }
}
