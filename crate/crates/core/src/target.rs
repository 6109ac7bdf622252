//! Finite permutation groups used as homomorphism codomains.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default bound on closure size; also bounds the Cayley table to
/// `cap^2` 16-bit entries.
pub const DEFAULT_CAP: usize = 10_000;

/// Multiplication and inversion tables indexed by element position.
#[derive(Debug)]
pub struct CayleyTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl CayleyTable {
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// A finite group given by generating permutations together with its full
/// element list. Element 0 is the identity.
#[derive(Debug)]
pub struct FiniteTarget {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u16>,
    // right multiplication by each generator: parent[j] * generators[via[j]] = j
    parent: Vec<(u16, usize)>,
    table: OnceLock<CayleyTable>,
}

impl Clone for FiniteTarget {
    fn clone(&self) -> Self {
        FiniteTarget {
            name: self.name.clone(),
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            parent: self.parent.clone(),
            table: OnceLock::new(),
        }
    }
}

/// Enumerates the group generated by `generators` by breadth-first
/// saturation, failing once more than `cap` elements appear.
pub fn close_target(name: &str, generators: Vec<Perm>, cap: usize) -> Result<FiniteTarget> {
    let degree = generators.first().map(Perm::degree).unwrap_or(1);
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation(format!(
            "generator {g} has degree {} but expected {degree}",
            g.degree()
        )));
    }
    let cap = cap.min(u16::MAX as usize);
    let id = Perm::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0u16)]);
    let mut parent = vec![(0u16, usize::MAX)];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        for (k, g) in generators.iter().enumerate() {
            let y = x.compose(g);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(y.clone(), elements.len() as u16);
                elements.push(y);
                parent.push((head as u16, k));
            }
        }
        head += 1;
    }
    Ok(FiniteTarget {
        name: name.to_string(),
        degree,
        generators,
        elements,
        index,
        parent,
        table: OnceLock::new(),
    })
}

impl FiniteTarget {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: u16) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u16> {
        self.index.get(p).copied()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Cayley table, built on first use.
    pub fn table(&self) -> &CayleyTable {
        self.table.get_or_init(|| self.build_table())
    }

    fn build_table(&self) -> CayleyTable {
        let n = self.elements.len();
        let ngen = self.generators.len();
        // right[x * ngen + k] = x * generators[k]
        let mut right = vec![0u16; n * ngen];
        for (x, e) in self.elements.iter().enumerate() {
            for (k, g) in self.generators.iter().enumerate() {
                right[x * ngen + k] = self.index[&e.compose(g)];
            }
        }
        // elements are in BFS order, so parent[j] < j and row i is filled
        // left to right: i * j = (i * parent[j]) * g
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            mul[i * n] = i as u16;
            for j in 1..n {
                let (p, k) = self.parent[j];
                let ip = mul[i * n + p as usize] as usize;
                mul[i * n + j] = right[ip * ngen + k];
            }
        }
        let mut inv = vec![0u16; n];
        for i in 0..n {
            inv[i] = (0..n).find(|&j| mul[i * n + j] == 0).expect("group has inverses") as u16;
        }
        CayleyTable { order: n, mul, inv }
    }
}

/// Wire form of one target in a suite file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
}

impl TargetSpec {
    pub fn new(name: &str, degree: usize, generators: &[&str]) -> Self {
        TargetSpec {
            name: name.to_string(),
            degree,
            generators: generators.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteTarget> {
        let gens = self
            .generators
            .iter()
            .map(|g| Perm::parse_cycles(g, self.degree))
            .collect::<Result<Vec<_>>>()?;
        close_target(&self.name, gens, cap)
    }
}

/// Cyclic groups C2..C6, S3, S4, S5, A4, A5, D4, D5 (all of order at most 120).
pub fn standard_suite_specs() -> Vec<TargetSpec> {
    let mut specs = Vec::new();
    for n in 2..=6 {
        let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        specs.push(TargetSpec {
            name: format!("C{n}"),
            degree: n,
            generators: vec![format!("({})", cycle.join(" "))],
        });
    }
    specs.extend([
        TargetSpec::new("S3", 3, &["(1 2)", "(1 2 3)"]),
        TargetSpec::new("S4", 4, &["(1 2)", "(1 2 3 4)"]),
        TargetSpec::new("S5", 5, &["(1 2)", "(1 2 3 4 5)"]),
        TargetSpec::new("A4", 4, &["(1 2 3)", "(1 2)(3 4)"]),
        TargetSpec::new("A5", 5, &["(1 2 3 4 5)", "(1 2 3)"]),
        TargetSpec::new("D4", 4, &["(1 2 3 4)", "(1 3)"]),
        TargetSpec::new("D5", 5, &["(1 2 3 4 5)", "(2 5)(3 4)"]),
    ]);
    specs
}

/// Larger perfect groups bundled for separating pairs the standard suite
/// leaves unresolved.
pub fn escalation_suite_specs() -> Vec<TargetSpec> {
    serde_json::from_str(ESCALATION_JSON).expect("bundled escalation suite parses")
}

const ESCALATION_JSON: &str = include_str!("../data/escalation_suite.json");

pub fn build_suite(specs: &[TargetSpec], cap: usize) -> Result<Vec<FiniteTarget>> {
    specs.iter().map(|s| s.build(cap)).collect()
}

pub fn standard_suite() -> Vec<FiniteTarget> {
    build_suite(&standard_suite_specs(), DEFAULT_CAP).expect("standard suite is valid")
}

/// Standard suite followed by the escalation targets.
pub fn extended_suite() -> Vec<FiniteTarget> {
    let mut specs = standard_suite_specs();
    specs.extend(escalation_suite_specs());
    build_suite(&specs, DEFAULT_CAP).expect("extended suite is valid")
}

pub fn parse_suite(json: &str) -> Result<Vec<TargetSpec>> {
    serde_json::from_str(json).map_err(|e| Error::Data(format!("target suite: {e}")))
}
