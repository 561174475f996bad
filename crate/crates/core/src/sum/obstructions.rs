//! Local configurations that rule out a sum realization or force torsion.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::cograph::Cograph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SumFinding {
    /// Two pairs of one class share `point`; their other ends must coincide.
    VAtPoint { point: usize, ends: (usize, usize) },
    /// Around the 5-cycle the alternating class sum starting at `cycle[0]`
    /// reduces to the class of `(cycle[0], partner)`, forcing
    /// `cycle[0] = partner`.
    AlternatingPentagon { cycle: Vec<usize>, partner: usize },
    /// Hexagon `h0..h5` with `class(h0h1) = class(h3h4)` and
    /// `class(h2h3) = class(h5h0)`: the quadrilateral rule forces
    /// `class(h1h2) = class(h4h5)`, which the pattern does not have.
    ForcedHexagon { hexagon: Vec<usize> },
    /// An even cycle with alternating classes: `order · (x_{cycle[2]} − x_{cycle[0]}) = 0`.
    AlternatingCycle { cycle: Vec<usize>, order: usize },
    /// Two odd cycles with the same class sequence and different start
    /// points: `2 · (x_{first[0]} − x_{second[0]}) = 0`.
    IdenticalOddCycles { first: Vec<usize>, second: Vec<usize> },
}

impl SumFinding {
    /// Whether the finding rules out every realization.
    pub fn is_fatal(&self) -> bool {
        matches!(self, SumFinding::VAtPoint { .. } | SumFinding::AlternatingPentagon { .. } | SumFinding::ForcedHexagon { .. })
    }

    /// Torsion order the finding forces, if any.
    pub fn torsion(&self) -> Option<usize> {
        match self {
            SumFinding::AlternatingCycle { order, .. } => Some(*order),
            SumFinding::IdenticalOddCycles { .. } => Some(2),
            _ => None,
        }
    }
}

/// Every simple cycle of `len` distinct points, as ordered point lists
/// (all rotations and both directions).
fn ordered_cycles(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, len: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for p in 0..n {
            if !used[p] {
                used[p] = true;
                cur.push(p);
                go(n, len, cur, used, out);
                cur.pop();
                used[p] = false;
            }
        }
    }
    let mut out = Vec::new();
    if len <= n {
        go(n, len, &mut Vec::new(), &mut vec![false; n], &mut out);
    }
    out
}

fn cycle_classes(c: &Cograph, cycle: &[usize]) -> Vec<usize> {
    (0..cycle.len()).map(|i| c.class_of(cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

pub fn detect_obstructions(c: &Cograph) -> Vec<SumFinding> {
    let n = c.n();
    let mut out = Vec::new();

    for p in 0..n {
        for q in 0..n {
            for r in q + 1..n {
                if p != q && p != r && c.class_of(p, q) == c.class_of(p, r) {
                    out.push(SumFinding::VAtPoint { point: p, ends: (q, r) });
                }
            }
        }
    }

    let mut seen_forced = BTreeSet::new();
    for cycle in ordered_cycles(n, 5) {
        let classes = cycle_classes(c, &cycle);
        let mut net: BTreeMap<usize, i32> = BTreeMap::new();
        for (k, &cls) in classes.iter().enumerate() {
            *net.entry(cls).or_insert(0) += if k % 2 == 0 { 1 } else { -1 };
        }
        net.retain(|_, v| *v != 0);
        if net.len() != 1 {
            continue;
        }
        let (&cls, &coef) = net.iter().next().expect("one entry");
        if coef != 1 {
            continue;
        }
        let v0 = cycle[0];
        if let Some(partner) = (0..n).find(|&q| q != v0 && c.class_of(v0, q) == cls) {
            if seen_forced.insert((v0.min(partner), v0.max(partner))) {
                out.push(SumFinding::AlternatingPentagon { cycle: cycle.clone(), partner });
            }
        }
    }

    let mut seen_hex = BTreeSet::new();
    for h in ordered_cycles(n, 6) {
        let cls = |i: usize, j: usize| c.class_of(h[i], h[j]);
        if cls(0, 1) == cls(3, 4) && cls(2, 3) == cls(5, 0) && cls(1, 2) != cls(4, 5) {
            let a = (h[1].min(h[2]), h[1].max(h[2]));
            let b = (h[4].min(h[5]), h[4].max(h[5]));
            if seen_hex.insert((a.min(b), a.max(b))) {
                out.push(SumFinding::ForcedHexagon { hexagon: h.clone() });
            }
        }
    }

    let mut seen_alt = BTreeSet::new();
    for len in (4..=n).step_by(2) {
        for cycle in ordered_cycles(n, len) {
            let classes = cycle_classes(c, &cycle);
            let alternating = classes[0] != classes[1] && classes.iter().enumerate().all(|(k, &x)| x == classes[k % 2]);
            if !alternating {
                continue;
            }
            let key = (len, cycle[0].min(cycle[2]), cycle[0].max(cycle[2]), {
                let mut s = cycle.clone();
                s.sort_unstable();
                s
            });
            if seen_alt.insert(key) {
                out.push(SumFinding::AlternatingCycle { cycle, order: len / 2 });
            }
        }
    }

    let mut seen_pairs = BTreeSet::new();
    for len in [3, 5] {
        let mut by_sequence: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
        for cycle in ordered_cycles(n, len) {
            by_sequence.entry(cycle_classes(c, &cycle)).or_default().push(cycle);
        }
        let mut groups: Vec<_> = by_sequence.into_values().filter(|g| g.len() > 1).collect();
        groups.sort();
        for group in groups {
            for (i, a) in group.iter().enumerate() {
                for b in &group[i + 1..] {
                    if a[0] != b[0] && seen_pairs.insert((a[0].min(b[0]), a[0].max(b[0]))) {
                        out.push(SumFinding::IdenticalOddCycles { first: a.clone(), second: b.clone() });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Membership;
    use crate::sum::{analyze_sum, classify_sum, close_under_forced_edges, SumOutcome};

    #[test]
    fn v_is_fatal() {
        let c = Cograph::from_fn(3, |i, j| if i == 0 { 0 } else { 1 + i + j }).unwrap();
        let f = detect_obstructions(&c);
        assert!(f.iter().any(|x| matches!(x, SumFinding::VAtPoint { point: 0, .. })));
        assert_eq!(classify_sum(&c).outcome, SumOutcome::Unsolvable);
    }

    #[test]
    fn alternating_hexagon_needs_three_torsion() {
        // 6-cycle 0-1-2-3-4-5 with classes a,b,a,b,a,b; all chords distinct.
        let c = Cograph::from_fn(6, |i, j| {
            if j == i + 1 {
                (i % 2, 0)
            } else if (i, j) == (0, 5) {
                (1, 0)
            } else {
                (10 + i, j)
            }
        })
        .unwrap();
        let f = detect_obstructions(&c);
        assert!(f.iter().any(|x| x.torsion() == Some(3)));
        // The long diagonals are forced into one class; after that merge the
        // pattern is realizable and 3(x2 − x0) = 0 is its torsion.
        assert_eq!(analyze_sum(&c).outcome, SumOutcome::ForcesExtraEdges);
        let closed = close_under_forced_edges(&c).unwrap();
        let a = analyze_sum(&closed);
        assert_eq!(a.lattice.membership(&[-1, 0, 1, 0, 0, 0]).unwrap(), Membership::Torsion(3));
        assert_eq!(a.outcome, SumOutcome::RequiresTorsion);
    }

    #[test]
    fn pentagon_is_fatal() {
        // Cycle 0-1-2-3-4 with classes a,b,c,a,b and the pair 0-5 in class c.
        let c = Cograph::from_fn(6, |i, j| match (i, j) {
            (0, 1) | (3, 4) => 0,
            (1, 2) | (0, 4) => 1,
            (2, 3) | (0, 5) => 2,
            _ => 10 + i * 6 + j,
        })
        .unwrap();
        let f = detect_obstructions(&c);
        assert!(f.iter().any(|x| matches!(x, SumFinding::AlternatingPentagon { .. })), "{f:?}");
        assert_eq!(classify_sum(&c).outcome, SumOutcome::Unsolvable);
    }

    #[test]
    fn all_distinct_has_no_findings() {
        let c = Cograph::all_distinct(6).unwrap();
        assert!(detect_obstructions(&c).is_empty());
    }
}
