//! Intersection cographs: points are sets and each edge is the intersection
//! of its endpoints.
//!
//! Atoms are `i64`. Point label atoms are negative (`−1 − point`) and never
//! occur in edge sets.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::cograph::{lex_pairs, num_pairs, pair_at, pair_index, Cograph};
use crate::enumeration::{enumerate_cographs_with, EnumerationError};
use crate::exec::Exec;

pub type Atom = i64;
pub type AtomSet = BTreeSet<Atom>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsectError {
    #[error("expected {expected} edge sets, got {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error("pairs {0:?} and {1:?} are in the same class but carry different sets")]
    SplitClass((usize, usize), (usize, usize)),
    #[error("pairs {0:?} and {1:?} are in different classes but carry the same set")]
    MergedClasses((usize, usize), (usize, usize)),
    #[error("edge sets violate the triangle or quadrilateral rule")]
    RulesViolated(RuleReport),
    #[error("edge set of pair {0:?} contains a negative (label) atom")]
    LabelAtomInEdge((usize, usize)),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

pub fn label_atom(point: usize) -> Atom {
    -1 - point as Atom
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RuleReport {
    /// Triangles `(p, q, r)` whose three pairwise edge meets differ.
    pub triangles: Vec<[usize; 3]>,
    /// Cyclic quadrilaterals `p-q-r-s` with `pq ∩ rs ≠ qr ∩ sp`.
    pub quadrilaterals: Vec<[usize; 4]>,
}

impl RuleReport {
    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty() && self.quadrilaterals.is_empty()
    }
}

fn meet(a: &AtomSet, b: &AtomSet) -> AtomSet {
    a.intersection(b).copied().collect()
}

/// The three cyclic orders of four points `a < b < c < d`.
fn cyclic_orders(a: usize, b: usize, c: usize, d: usize) -> [[usize; 4]; 3] {
    [[a, b, c, d], [a, b, d, c], [a, c, b, d]]
}

fn check_consistency(c: &Cograph, edges: &[AtomSet]) -> Result<(), IsectError> {
    let n = c.n();
    if edges.len() != num_pairs(n) {
        return Err(IsectError::EdgeCount { expected: num_pairs(n), got: edges.len() });
    }
    let mut by_class: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut by_set: BTreeMap<&AtomSet, (usize, usize)> = BTreeMap::new();
    for (i, j) in lex_pairs(n) {
        let set = &edges[pair_index(i, j)];
        if set.iter().any(|&a| a < 0) {
            return Err(IsectError::LabelAtomInEdge((i, j)));
        }
        let cls = c.class_of(i, j);
        if let Some(&other) = by_class.get(&cls) {
            if edges[pair_index(other.0, other.1)] != *set {
                return Err(IsectError::SplitClass(other, (i, j)));
            }
        } else {
            by_class.insert(cls, (i, j));
        }
        if let Some(&other) = by_set.get(set) {
            if c.class_of(other.0, other.1) != cls {
                return Err(IsectError::MergedClasses(other, (i, j)));
            }
        } else {
            by_set.insert(set, (i, j));
        }
    }
    Ok(())
}

/// Checks every triangle and quadrilateral of an edge-set labeling.
pub fn check_rules(c: &Cograph, edges: &[AtomSet]) -> Result<RuleReport, IsectError> {
    check_consistency(c, edges)?;
    let n = c.n();
    let e = |i: usize, j: usize| &edges[pair_index(i.min(j), i.max(j))];
    let mut report = RuleReport::default();
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let (x, y, z) = (e(a, b), e(b, d), e(a, d));
                let m = meet(x, y);
                if m != meet(y, z) || m != meet(x, z) {
                    report.triangles.push([a, b, d]);
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for f in d + 1..n {
                    for [p, q, r, s] in cyclic_orders(a, b, d, f) {
                        if meet(e(p, q), e(r, s)) != meet(e(q, r), e(s, p)) {
                            report.quadrilaterals.push([p, q, r, s]);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Union of incident edges plus a label atom for each point.
pub fn uie_construct(c: &Cograph, edges: &[AtomSet]) -> Result<Vec<AtomSet>, IsectError> {
    let report = check_rules(c, edges)?;
    if !report.is_empty() {
        return Err(IsectError::RulesViolated(report));
    }
    let n = c.n();
    let points: Vec<AtomSet> = (0..n)
        .map(|p| {
            let mut set: AtomSet = (0..n)
                .filter(|&q| q != p)
                .flat_map(|q| edges[pair_index(p.min(q), p.max(q))].iter().copied())
                .collect();
            set.insert(label_atom(p));
            set
        })
        .collect();
    for (i, j) in lex_pairs(n) {
        assert_eq!(meet(&points[i], &points[j]), edges[pair_index(i, j)], "UIE postcondition at ({i},{j})");
    }
    Ok(points)
}

/// Pairs in storage order, matching [`pair_index`].
fn indexed_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..num_pairs(n)).map(pair_at)
}

/// Edges of the intersection cograph on the given point sets.
pub fn intersection_edges(points: &[AtomSet]) -> Vec<AtomSet> {
    indexed_pairs(points.len()).map(|(i, j)| meet(&points[i], &points[j])).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FatRepresentation {
    pub points: Vec<AtomSet>,
    /// Closed under intersection; contains `∅` and the union of all points.
    pub family: Vec<AtomSet>,
}

impl FatRepresentation {
    /// Smallest member of the family containing `P ∩ Q`.
    pub fn fat_edge(&self, i: usize, j: usize) -> &AtomSet {
        let m = meet(&self.points[i], &self.points[j]);
        self.family
            .iter()
            .filter(|s| m.is_subset(s))
            .min_by_key(|s| s.len())
            .expect("the family contains the union of all points")
    }

    /// The cograph whose classes are the distinct fat edges.
    pub fn cograph(&self) -> Cograph {
        Cograph::from_fn(self.points.len(), |i, j| self.fat_edge(i, j).clone()).expect("at least two points")
    }
}

/// Fat intersection representation of any cograph: one atom per pair, and
/// one family member per class gathering the atoms of its pairs.
pub fn fat_intersection_represent(c: &Cograph) -> FatRepresentation {
    let n = c.n();
    let mut points: Vec<AtomSet> = (0..n).map(|p| AtomSet::from([label_atom(p)])).collect();
    for (i, j) in lex_pairs(n) {
        let atom = pair_index(i, j) as Atom;
        points[i].insert(atom);
        points[j].insert(atom);
    }
    let union: AtomSet = points.iter().flatten().copied().collect();
    let mut family = vec![AtomSet::new(), union];
    for class in c.classes() {
        family.push(class.iter().map(|&(i, j)| pair_index(i, j) as Atom).collect());
    }
    let rep = FatRepresentation { points, family };
    assert_eq!(rep.cograph(), *c, "fat representation must reproduce the cograph");
    rep
}

// ---------------------------------------------------------------------------
// Forbidden configurations
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IsectFinding {
    /// Classes `c_0 ⊋ c_1 ⊋ … ⊋ c_0` forced directly by repeated edges in
    /// triangles and quadrilaterals.
    InclusionCycle { classes: Vec<usize> },
    /// Distinct classes forced equal only after chaining meet equations,
    /// as in `b = a ∩ b = a ∩ c = c`.
    MeetCollapse { first: usize, second: usize },
}

/// Equations between meets of classes: triangles give three equal meets,
/// quadrilaterals two.
fn meet_equations(c: &Cograph) -> Vec<Vec<(usize, usize)>> {
    let n = c.n();
    let k = |i: usize, j: usize| c.class_of(i, j);
    let norm = |x: usize, y: usize| (x.min(y), x.max(y));
    let mut eqs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let (x, y, z) = (k(a, b), k(b, d), k(a, d));
                eqs.push(vec![norm(x, y), norm(y, z), norm(x, z)]);
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for f in d + 1..n {
                    for [p, q, r, s] in cyclic_orders(a, b, d, f) {
                        eqs.push(vec![norm(k(p, q), k(r, s)), norm(k(q, r), k(s, p))]);
                    }
                }
            }
        }
    }
    eqs
}

/// Adds inclusions implied by the equations once; `sub[x][y]` means `x ⊆ y`.
fn propagate(eqs: &[Vec<(usize, usize)>], sub: &mut [Vec<bool>]) -> bool {
    let resolve = |sub: &[Vec<bool>], (x, y): (usize, usize)| {
        if sub[x][y] {
            Some(x)
        } else if sub[y][x] {
            Some(y)
        } else {
            None
        }
    };
    let mut changed = false;
    for eq in eqs {
        for &known in eq {
            let Some(v) = resolve(sub, known) else { continue };
            for &(r, s) in eq {
                for t in [r, s] {
                    if !sub[v][t] {
                        sub[v][t] = true;
                        changed = true;
                    }
                }
                if let Some(w) = resolve(sub, (r, s)) {
                    if !sub[w][v] {
                        sub[w][v] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    let k = sub.len();
    for m in 0..k {
        for x in 0..k {
            if sub[x][m] {
                for y in 0..k {
                    if sub[m][y] && !sub[x][y] {
                        sub[x][y] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    changed
}

fn find_cycle(sub: &[Vec<bool>]) -> Vec<Vec<usize>> {
    // Shortest cycle through each class in the strict direct-inclusion graph.
    let k = sub.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in 0..k {
        let mut prev = vec![usize::MAX; k];
        let mut queue = std::collections::VecDeque::from([start]);
        let mut found = None;
        while let Some(u) = queue.pop_front() {
            for v in 0..k {
                if v == u || !sub[v][u] {
                    continue;
                }
                if v == start {
                    found = Some(u);
                    break;
                }
                if prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
            if found.is_some() {
                break;
            }
        }
        if let Some(mut u) = found {
            let mut cycle = vec![u];
            while u != start {
                u = prev[u];
                cycle.push(u);
            }
            cycle.reverse();
            let mut key = cycle.clone();
            key.sort_unstable();
            if seen.insert(key) {
                out.push(cycle);
            }
        }
    }
    out
}

/// Inclusion cycles forced by repeated edges, then any further collapse of
/// distinct classes found by chaining the triangle and quadrilateral rules.
pub fn find_forbidden(c: &Cograph) -> Vec<IsectFinding> {
    let k = c.num_classes();
    let eqs = meet_equations(c);
    let mut direct = vec![vec![false; k]; k];
    for (x, row) in direct.iter_mut().enumerate() {
        row[x] = true;
    }
    // One round from reflexive meets only: the V and Q shapes.
    for eq in &eqs {
        for &(x, y) in eq {
            if x == y {
                for &(r, s) in eq {
                    direct[x][r] = true;
                    direct[x][s] = true;
                }
            }
        }
    }
    let mut out: Vec<IsectFinding> = find_cycle(&direct).into_iter().map(|classes| IsectFinding::InclusionCycle { classes }).collect();
    let mut full = direct.clone();
    while propagate(&eqs, &mut full) {}
    let cycle_classes: BTreeSet<usize> = out
        .iter()
        .flat_map(|f| match f {
            IsectFinding::InclusionCycle { classes } => classes.clone(),
            IsectFinding::MeetCollapse { .. } => Vec::new(),
        })
        .collect();
    for x in 0..k {
        for y in x + 1..k {
            if full[x][y] && full[y][x] && !(cycle_classes.contains(&x) && cycle_classes.contains(&y)) {
                out.push(IsectFinding::MeetCollapse { first: x, second: y });
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Representability
// ---------------------------------------------------------------------------

/// Subsets of classes (as bitmasks) that one atom may belong to without
/// breaking any meet equation.
fn admissible_atom_types(c: &Cograph) -> Vec<u32> {
    let k = c.num_classes();
    assert!(k <= 20, "too many classes for atom-type search");
    let eqs = meet_equations(c);
    (1u32..1 << k)
        .filter(|&t| {
            let has = |(x, y): (usize, usize)| t >> x & 1 == 1 && t >> y & 1 == 1;
            eqs.iter().all(|eq| eq.iter().all(|&p| has(p) == has(eq[0])))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionRepresentation {
    /// Edge set of each pair, in pair order.
    pub edges: Vec<AtomSet>,
    pub points: Vec<AtomSet>,
}

/// Decides representability exactly. An atom is characterised by the set
/// of classes containing it, and the rules hold per atom, so the pattern is
/// representable iff the admissible atom types separate all classes.
pub fn represent_intersection(c: &Cograph) -> Option<IntersectionRepresentation> {
    let k = c.num_classes();
    let types = admissible_atom_types(c);
    let separated = (0..k).all(|x| (x + 1..k).all(|y| types.iter().any(|&t| (t >> x & 1) != (t >> y & 1))));
    if !separated {
        return None;
    }
    let class_sets: Vec<AtomSet> =
        (0..k).map(|x| types.iter().enumerate().filter(|(_, &t)| t >> x & 1 == 1).map(|(a, _)| a as Atom).collect()).collect();
    let edges: Vec<AtomSet> = indexed_pairs(c.n()).map(|(i, j)| class_sets[c.class_of(i, j)].clone()).collect();
    let points = uie_construct(c, &edges).expect("admissible atoms satisfy every rule");
    Some(IntersectionRepresentation { edges, points })
}

#[derive(Debug, Clone, Serialize)]
pub struct IsectCatalogueEntry {
    #[serde(skip)]
    pub pattern: Cograph,
    pub representation: IntersectionRepresentation,
}

/// Representable patterns among all cographs on `n` points.
pub fn enumerate_intersection_cographs(n: usize, force: bool, exec: Exec) -> Result<Vec<IsectCatalogueEntry>, IsectError> {
    let all = enumerate_cographs_with(n, force, exec)?;
    let reps = exec.map(all, |key| {
        let pattern = key.to_cograph(); represent_intersection(&pattern).map(|representation| IsectCatalogueEntry { pattern, representation })
    });
    Ok(reps.into_iter().flatten().collect())
}
