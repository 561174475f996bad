//! Isomorph-free generation of realizable sum patterns.
//!
//! Breadth-first search from the all-distinct pattern. A step merges two
//! classes whose union is still a matching, then keeps merging the classes
//! that the lattice forces together. Unsolvable results are dropped. Every
//! realizable pattern is reachable: merging within the classes of a target
//! pattern only ever forces equalities the target already has.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::cograph::{canonical_form, CanonicalKey, Cograph};
use crate::exec::Exec;
use crate::sum::{analyze_sum, classify_sum, SumOutcome, SumVerdict};

pub const SUM_CATALOGUE_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SumCatalogueError {
    #[error("sum catalogue needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("sum catalogue at n={0} is refused without force (limit {SUM_CATALOGUE_LIMIT})")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct SumCatalogueEntry {
    #[serde(skip)]
    pub pattern: Cograph,
    pub verdict: SumVerdict,
}

fn is_matching(pairs: &[(usize, usize)]) -> bool {
    let mut seen = BTreeSet::new();
    pairs.iter().all(|&(i, j)| seen.insert(i) && seen.insert(j))
}

/// Merges classes until the lattice forces no further edge equality.
/// Returns `None` when some point equality is forced.
pub fn close_under_forced_edges(pattern: &Cograph) -> Option<Cograph> {
    let mut cur = pattern.clone();
    loop {
        let analysis = analyze_sum(&cur);
        match analysis.outcome {
            SumOutcome::Unsolvable => return None,
            SumOutcome::ForcesExtraEdges => {
                for (a, b) in analysis.forced_edge_equalities {
                    let (ca, cb) = (cur.class_of(a.0, a.1), cur.class_of(b.0, b.1));
                    if ca != cb {
                        cur = cur.merge_classes(ca.min(cb), ca.max(cb));
                    }
                }
            }
            SumOutcome::TorsionFree | SumOutcome::RequiresTorsion => return Some(cur),
        }
    }
}

fn successors(c: &Cograph) -> Vec<Cograph> {
    let classes = c.classes();
    let mut out = Vec::new();
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            let mut union = classes[a].clone();
            union.extend_from_slice(&classes[b]);
            if is_matching(&union) {
                if let Some(closed) = close_under_forced_edges(&c.merge_classes(a, b)) {
                    out.push(closed);
                }
            }
        }
    }
    out
}

/// Every realizable sum pattern on `n` points up to isomorphism, each with
/// its verdict and witness, sorted by canonical key.
pub fn enumerate_sum_cographs(n: usize, force: bool, exec: Exec) -> Result<Vec<SumCatalogueEntry>, SumCatalogueError> {
    if n < 2 {
        return Err(SumCatalogueError::TooFewPoints(n));
    }
    if n > SUM_CATALOGUE_LIMIT && !force {
        return Err(SumCatalogueError::TooLarge(n));
    }
    let start = Cograph::all_distinct(n).expect("n >= 2");
    let mut found: BTreeMap<CanonicalKey, Cograph> = BTreeMap::new();
    found.insert(canonical_form(&start), start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let next = exec.flat_map(frontier, |c| {
            successors(&c).into_iter().map(|s| (canonical_form(&s), s)).collect::<Vec<_>>()
        });
        let mut fresh = Vec::new();
        for (key, c) in next {
            if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(key) {
                fresh.push(slot.key().to_cograph());
                slot.insert(c);
            }
        }
        frontier = fresh;
    }
    let reps: Vec<Cograph> = found.keys().map(CanonicalKey::to_cograph).collect();
    Ok(exec.map(reps, |pattern| {
        let verdict = classify_sum(&pattern);
        SumCatalogueEntry { pattern, verdict }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalogues() {
        let three = enumerate_sum_cographs(3, false, Exec::Sequential).unwrap();
        assert_eq!(three.len(), 1);
        assert!(enumerate_sum_cographs(7, false, Exec::Sequential).is_err());
        let four = enumerate_sum_cographs(4, false, Exec::Sequential).unwrap();
        for e in &four {
            assert!(e.verdict.witness.as_ref().unwrap().realizes(&e.pattern));
        }
    }
}
