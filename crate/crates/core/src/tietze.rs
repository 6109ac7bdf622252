//! Deterministic Tietze simplification.

use std::collections::HashSet;

use crate::presentation::Presentation;
use crate::word::Word;

pub const DEFAULT_BUDGET: usize = 10_000;

/// Result of [`tietze_simplify_tracked`]: the simplified presentation and,
/// for every generator of the input, its image as a word in the output.
#[derive(Clone, Debug)]
pub struct Simplified {
    pub presentation: Presentation,
    pub images: Vec<Word>,
}

impl Simplified {
    /// Rewrites a word of the original presentation in the simplified one.
    pub fn map_word(&self, w: &Word) -> Word {
        w.map_generators(&self.images)
    }
}

pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    tietze_simplify_tracked(p, budget).presentation
}

/// Removes trivial and duplicate relators, then repeatedly eliminates a
/// generator occurring exactly once in some relator. Candidates are tried
/// shortest relator first, then lowest generator index; an elimination is
/// skipped if it would push the longest relator past twice its current
/// length. Each elimination costs one unit of `budget`.
pub fn tietze_simplify_tracked(p: &Presentation, budget: usize) -> Simplified {
    let mut current = dedupe(p);
    let mut images: Vec<Word> = (0..p.num_generators()).map(Word::generator).collect();
    let mut steps = 0;

    while steps < budget {
        let Some((gen, replacement, next)) = find_elimination(&current) else {
            break;
        };
        let translation: Vec<Word> = (0..current.num_generators())
            .map(|i| match i.cmp(&gen) {
                std::cmp::Ordering::Less => Word::generator(i),
                std::cmp::Ordering::Equal => Word::identity(),
                std::cmp::Ordering::Greater => Word::generator(i - 1),
            })
            .collect();
        let replacement = replacement.map_generators(&translation);
        let mut full = translation;
        full[gen] = replacement;
        images = images.iter().map(|w| w.map_generators(&full)).collect();
        current = dedupe(&next);
        steps += 1;
    }

    Simplified { presentation: current, images }
}

fn dedupe(p: &Presentation) -> Presentation {
    let mut seen = HashSet::new();
    let rels: Vec<Word> = p
        .relators()
        .iter()
        .map(Word::cyclic_reduce)
        .filter(|r| !r.is_identity())
        .filter(|r| seen.insert(r.canonical_cyclic()))
        .collect();
    p.with_relators(rels)
}

fn max_len(rels: &[Word]) -> usize {
    rels.iter().map(Word::len).max().unwrap_or(0)
}

/// Finds the first admissible elimination; returns the generator, its
/// replacement word (old indices) and the presentation after elimination.
fn find_elimination(p: &Presentation) -> Option<(usize, Word, Presentation)> {
    let rels = p.relators();
    let limit = 2 * max_len(rels).max(1);
    let mut order: Vec<usize> = (0..rels.len()).collect();
    order.sort_by_key(|&i| (rels[i].len(), i));

    for ri in order {
        let r = &rels[ri];
        for gen in r.support() {
            if r.occurrences(gen) != 1 {
                continue;
            }
            let replacement = solve_for(r, gen);
            let remaining: Vec<Word> = rels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != ri)
                .map(|(_, w)| w.clone())
                .collect();
            let Ok((next, _)) = p.with_relators(remaining).eliminate_generator(gen, &replacement) else {
                continue;
            };
            if max_len(next.relators()) <= limit {
                return Some((gen, replacement, next));
            }
        }
    }
    None
}

/// For `r = u g^e v` with `g` absent from `u` and `v`, returns the word equal
/// to `g` modulo `r`.
fn solve_for(r: &Word, gen: usize) -> Word {
    let letters = r.letters();
    let pos = letters.iter().position(|l| l.gen == gen).expect("generator in relator");
    let u = Word::from_letters(letters[..pos].iter().copied());
    let v = Word::from_letters(letters[pos + 1..].iter().copied());
    // u g^e v = 1  =>  g^e = u^-1 v^-1
    let ge = u.inverse().multiply(&v.inverse());
    if letters[pos].inverse {
        ge.inverse()
    } else {
        ge
    }
}
