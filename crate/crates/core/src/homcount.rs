//! Exact homomorphism counting into finite permutation groups.
//!
//! Generators are assigned images depth-first. The assignment order is
//! chosen greedily so that relators become fully assigned as early as
//! possible; each relator is checked at the depth where its last generator
//! receives an image, and the branch is cut on the first failure.
//! Generators that occur in no relator contribute a factor `|H|` each.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::target::{CayleyTable, FiniteTarget};

struct Plan {
    /// Generators in assignment order (only those occurring in relators).
    order: Vec<usize>,
    /// Relators compiled to `(depth, inverse)` letters, grouped by the depth
    /// at which they become checkable.
    checks: Vec<Vec<Vec<(usize, bool)>>>,
    /// Generators absent from every relator.
    free: usize,
}

impl Plan {
    fn new(p: &Presentation) -> Plan {
        let n = p.num_generators();
        let rels = p.relators();
        let supports: Vec<Vec<usize>> = rels.iter().map(|r| r.support()).collect();
        let mut placed = vec![false; n];
        let mut order = Vec::new();
        let mut done = vec![false; rels.len()];
        loop {
            let next = (0..rels.len())
                .filter(|&i| !done[i])
                .min_by_key(|&i| {
                    let missing = supports[i].iter().filter(|&&g| !placed[g]).count();
                    (missing, rels[i].len(), i)
                });
            let Some(i) = next else { break };
            done[i] = true;
            for &g in &supports[i] {
                if !placed[g] {
                    placed[g] = true;
                    order.push(g);
                }
            }
        }
        let free = placed.iter().filter(|&&b| !b).count();
        let mut depth_of = vec![usize::MAX; n];
        for (d, &g) in order.iter().enumerate() {
            depth_of[g] = d;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for r in rels {
            let compiled: Vec<(usize, bool)> =
                r.letters().iter().map(|l| (depth_of[l.gen], l.inverse)).collect();
            let last = compiled.iter().map(|&(d, _)| d).max().expect("relators are nonempty");
            checks[last].push(compiled);
        }
        Plan { order, checks, free }
    }
}

#[inline]
fn eval(table: &CayleyTable, images: &[u16], inverses: &[u16], rel: &[(usize, bool)]) -> u16 {
    let mut x = 0u16;
    for &(d, inv) in rel {
        let y = if inv { inverses[d] } else { images[d] };
        x = table.mul(x, y);
    }
    x
}

struct Search<'a> {
    plan: &'a Plan,
    table: &'a CayleyTable,
    n: u16,
    images: Vec<u16>,
    inverses: Vec<u16>,
}

impl<'a> Search<'a> {
    fn new(plan: &'a Plan, target: &'a FiniteTarget) -> Self {
        let len = plan.order.len();
        Search {
            plan,
            table: target.table(),
            n: target.order() as u16,
            images: vec![0; len],
            inverses: vec![0; len],
        }
    }

    fn assign(&mut self, depth: usize, x: u16) -> bool {
        self.images[depth] = x;
        self.inverses[depth] = self.table.inv(x);
        self.plan.checks[depth]
            .iter()
            .all(|r| eval(self.table, &self.images, &self.inverses, r) == 0)
    }

    fn count(&mut self, depth: usize) -> u128 {
        if depth == self.plan.order.len() {
            return 1;
        }
        let mut total = 0;
        for x in 0..self.n {
            if self.assign(depth, x) {
                total += self.count(depth + 1);
            }
        }
        total
    }

    fn visit<F: FnMut(&[u16]) -> ControlFlow<()>>(&mut self, depth: usize, f: &mut F) -> ControlFlow<()> {
        if depth == self.plan.order.len() {
            return f(&self.images);
        }
        for x in 0..self.n {
            if self.assign(depth, x) {
                self.visit(depth + 1, f)?;
            }
        }
        ControlFlow::Continue(())
    }
}

fn free_factor(plan: &Plan, target: &FiniteTarget) -> u128 {
    (target.order() as u128).pow(plan.free as u32)
}

/// Number of homomorphisms from the group presented by `p` into `target`.
pub fn count_homomorphisms(p: &Presentation, target: &FiniteTarget) -> u128 {
    let plan = Plan::new(p);
    let mut search = Search::new(&plan, target);
    search.count(0) * free_factor(&plan, target)
}

/// Same count, with the branches for each image of the first assigned
/// generator evaluated in parallel on the current rayon pool.
pub fn count_homomorphisms_parallel(p: &Presentation, target: &FiniteTarget) -> u128 {
    let plan = Plan::new(p);
    let factor = free_factor(&plan, target);
    if plan.order.is_empty() {
        return factor;
    }
    target.table();
    let total: u128 = (0..target.order() as u16)
        .into_par_iter()
        .map(|x| {
            let mut search = Search::new(&plan, target);
            if search.assign(0, x) {
                search.count(1)
            } else {
                0
            }
        })
        .sum();
    total * factor
}

/// Calls `f` with the image (as an element index of `target`) of every
/// generator of `p`, once per homomorphism, until `f` breaks.
///
/// Generators absent from every relator range over all of `target`, so the
/// number of calls equals [`count_homomorphisms`].
pub fn for_each_homomorphism<F>(p: &Presentation, target: &FiniteTarget, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[u16]) -> ControlFlow<()>,
{
    let plan = Plan::new(p);
    let n = p.num_generators();
    let free: Vec<usize> = {
        let mut placed = vec![false; n];
        for &g in &plan.order {
            placed[g] = true;
        }
        (0..n).filter(|&g| !placed[g]).collect()
    };
    let order = target.order() as u16;
    let mut full = vec![0u16; n];
    let mut search = Search::new(&plan, target);
    search.visit(0, &mut |imgs: &[u16]| {
        for (d, &g) in plan.order.iter().enumerate() {
            full[g] = imgs[d];
        }
        // odometer over the free generators
        let mut counter = vec![0u16; free.len()];
        loop {
            for (k, &g) in free.iter().enumerate() {
                full[g] = counter[k];
            }
            f(&full)?;
            let mut k = 0;
            loop {
                if k == counter.len() {
                    return ControlFlow::Continue(());
                }
                counter[k] += 1;
                if counter[k] < order {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
        }
    })
}

/// Hom counts over an ordered list of targets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSpectrum {
    pub counts: Vec<(String, u128)>,
}

impl HomSpectrum {
    pub fn target_names(&self) -> Vec<&str> {
        self.counts.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn values(&self) -> Vec<u128> {
        self.counts.iter().map(|&(_, c)| c).collect()
    }

    pub fn get(&self, target: &str) -> Option<u128> {
        self.counts.iter().find(|(n, _)| n == target).map(|&(_, c)| c)
    }
}

pub fn hom_spectrum(p: &Presentation, targets: &[FiniteTarget]) -> HomSpectrum {
    HomSpectrum {
        counts: targets
            .iter()
            .map(|t| (t.name().to_string(), count_homomorphisms(p, t)))
            .collect(),
    }
}

/// [`hom_spectrum`] with each count split across the rayon pool.
pub fn hom_spectrum_parallel(p: &Presentation, targets: &[FiniteTarget]) -> HomSpectrum {
    HomSpectrum {
        counts: targets
            .iter()
            .map(|t| (t.name().to_string(), count_homomorphisms_parallel(p, t)))
            .collect(),
    }
}

/// CSV with header `label,<target names>` and one row per spectrum.
pub fn spectra_csv(rows: &[(String, HomSpectrum)]) -> Result<String> {
    let Some((_, first)) = rows.first() else {
        return Ok("label\n".to_string());
    };
    let names = first.target_names();
    let mut out = format!("label,{}\n", names.join(","));
    for (label, s) in rows {
        if s.target_names() != names {
            return Err(Error::MismatchedTargets);
        }
        let vals: Vec<String> = s.values().iter().map(u128::to_string).collect();
        out.push_str(&format!("{label},{}\n", vals.join(",")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::target::{close_target, TargetSpec};
    use crate::word::Word;

    fn s3() -> FiniteTarget {
        TargetSpec::new("S3", 3, &["(1 2)", "(1 2 3)"]).build(100).unwrap()
    }

    #[test]
    fn involutions_in_s3() {
        let p = Presentation::new(vec!["a"], vec![Word::power_of(0, 2)]).unwrap();
        assert_eq!(count_homomorphisms(&p, &s3()), 4);
    }

    #[test]
    fn free_group_counts_powers() {
        let p = Presentation::free(vec!["a", "b"]).unwrap();
        assert_eq!(count_homomorphisms(&p, &s3()), 36);
        assert_eq!(count_homomorphisms_parallel(&p, &s3()), 36);
        let mut calls = 0;
        let _ = for_each_homomorphism(&p, &s3(), |_| {
            calls += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(calls, 36);
    }

    #[test]
    fn braid_relation_trefoil() {
        // x y x = y x y
        let r = Word::from_pairs([(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        let p = Presentation::new(vec!["x", "y"], vec![r]).unwrap();
        assert_eq!(count_homomorphisms(&p, &s3()), 12);
        assert_eq!(count_homomorphisms_parallel(&p, &s3()), 12);
    }

    #[test]
    fn trivial_group() {
        let p = Presentation::trivial();
        let t = close_target("C1", vec![], 10).unwrap();
        assert_eq!(count_homomorphisms(&p, &t), 1);
        assert_eq!(count_homomorphisms(&p, &s3()), 1);
    }

    #[test]
    fn csv_layout() {
        let s = HomSpectrum { counts: vec![("C2".into(), 2), ("S3".into(), 6)] };
        let csv = spectra_csv(&[("p=1".into(), s)]).unwrap();
        assert_eq!(csv, "label,C2,S3\np=1,2,6\n");
    }
}
