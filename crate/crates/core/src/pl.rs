//! Point-line cographs: every class is a complete block, so the blocks are
//! the lines of a linear space.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cograph::{canonical_form, lex_pairs, CanonicalKey, Cograph};
use crate::exec::Exec;

pub const PL_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PlViolation {
    /// `C(p,q) = C(q,r)` but `C(p,r)` differs.
    Rule1 { p: usize, q: usize, r: usize },
    /// `C(p,q) = C(r,s)` but a cross pair differs.
    Rule2 { p: usize, q: usize, r: usize, s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("not a point-line cograph: {0:?}")]
    NotPl(PlViolation),
    #[error("a coordinatization needs at least two classes")]
    SingleClass,
    #[error("anchors must be distinct points below {0}")]
    BadAnchor(usize),
    #[error("origin {0} does not see the anchors along two new distinct classes")]
    BadOrigin(usize),
    #[error("join needs each operand to have one class or only single-copy classes")]
    JoinPrecondition,
    #[error("line {0:?} has fewer than two points")]
    ShortLine(Vec<usize>),
    #[error("points {0} and {1} lie on no common line")]
    Uncovered(usize, usize),
    #[error("points {0} and {1} lie on two lines")]
    CoveredTwice(usize, usize),
    #[error("line {line:?} mentions a point outside 0..{points}")]
    PointRange { line: Vec<usize>, points: usize },
    #[error("PL catalogue supports 2..={PL_LIMIT} points without force, got {0}")]
    TooLarge(usize),
}

/// First violation of the two defining rules, if any.
pub fn pl_violation(c: &Cograph) -> Option<PlViolation> {
    let n = c.n();
    for q in 0..n {
        for p in 0..n {
            for r in p + 1..n {
                if p != q && r != q && c.class_of(p, q) == c.class_of(q, r) && c.class_of(p, r) != c.class_of(p, q) {
                    return Some(PlViolation::Rule1 { p, q, r });
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> = lex_pairs(n).collect();
    for (k, &(p, q)) in pairs.iter().enumerate() {
        for &(r, s) in &pairs[k + 1..] {
            if p == r || p == s || q == r || q == s || c.class_of(p, q) != c.class_of(r, s) {
                continue;
            }
            let e = c.class_of(p, q);
            if [(p, r), (p, s), (q, r), (q, s)].iter().any(|&(a, b)| c.class_of(a, b) != e) {
                return Some(PlViolation::Rule2 { p, q, r, s });
            }
        }
    }
    None
}

pub fn is_pl(c: &Cograph) -> bool {
    pl_violation(c).is_none()
}

/// Point sets of the class blocks, indexed by class.
pub fn blocks(c: &Cograph) -> Vec<Vec<usize>> {
    (0..c.num_classes()).map(|k| c.color_block(k).expect("class in range").points).collect()
}

/// Every 3- and 4-point sub-block (two pairs of one class) spans a complete graph.
pub fn small_blocks_complete(c: &Cograph) -> bool {
    let classes = c.classes();
    classes.iter().enumerate().all(|(k, pairs)| {
        pairs.iter().enumerate().all(|(i, &(a, b))| {
            pairs[i + 1..].iter().all(|&(x, y)| {
                let mut pts = vec![a, b, x, y];
                pts.sort_unstable();
                pts.dedup();
                pts.iter().enumerate().all(|(u, &p)| pts[u + 1..].iter().all(|&q| c.class_of(p, q) == k))
            })
        })
    })
}

/// Every block spans a complete graph in its own class.
pub fn blocks_complete(c: &Cograph) -> bool {
    (0..c.num_classes()).all(|k| c.color_block(k).expect("class in range").is_complete())
}

/// Distinct blocks share at most one point.
pub fn pairwise_intersection_check(c: &Cograph) -> bool {
    let b: Vec<BTreeSet<usize>> = blocks(c).into_iter().map(|v| v.into_iter().collect()).collect();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| b[i].intersection(&b[j]).count() <= 1))
}

// ---------------------------------------------------------------------------
// Linear spaces
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinearSpace {
    pub points: usize,
    /// Every line, two-point lines included, each sorted; lines sorted.
    pub lines: Vec<Vec<usize>>,
}

impl LinearSpace {
    /// Builds a space from its lines of three or more points; every pair
    /// not covered becomes a two-point line.
    pub fn from_long_lines(points: usize, long: &[Vec<usize>]) -> Result<Self, PlError> {
        let mut covered = BTreeSet::new();
        let mut lines = Vec::new();
        for line in long {
            let mut l = line.clone();
            l.sort_unstable();
            l.dedup();
            if l.iter().any(|&p| p >= points) {
                return Err(PlError::PointRange { line: l, points });
            }
            for (i, &a) in l.iter().enumerate() {
                for &b in &l[i + 1..] {
                    if !covered.insert((a, b)) {
                        return Err(PlError::CoveredTwice(a, b));
                    }
                }
            }
            lines.push(l);
        }
        for (a, b) in lex_pairs(points) {
            if !covered.contains(&(a, b)) {
                lines.push(vec![a, b]);
            }
        }
        let s = LinearSpace { points, lines };
        s.validate()?;
        Ok(s.normalized())
    }

    fn normalized(mut self) -> Self {
        for l in &mut self.lines {
            l.sort_unstable();
        }
        self.lines.sort();
        self
    }

    /// Checks both axioms.
    pub fn validate(&self) -> Result<(), PlError> {
        let mut cover: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for line in &self.lines {
            if line.len() < 2 {
                return Err(PlError::ShortLine(line.clone()));
            }
            if line.iter().any(|&p| p >= self.points) {
                return Err(PlError::PointRange { line: line.clone(), points: self.points });
            }
            let mut l = line.clone();
            l.sort_unstable();
            for (i, &a) in l.iter().enumerate() {
                for &b in &l[i + 1..] {
                    *cover.entry((a, b)).or_insert(0) += 1;
                }
            }
        }
        for (a, b) in lex_pairs(self.points) {
            match cover.get(&(a, b)) {
                None => return Err(PlError::Uncovered(a, b)),
                Some(&k) if k > 1 => return Err(PlError::CoveredTwice(a, b)),
                _ => {}
            }
        }
        Ok(())
    }

    pub fn long_lines(&self) -> Vec<&Vec<usize>> {
        self.lines.iter().filter(|l| l.len() >= 3).collect()
    }
}

impl fmt::Display for LinearSpace {
    /// `points=n;lines=[{0,1,2},...]`, listing only lines of three or more points.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .long_lines()
            .iter()
            .map(|l| format!("{{{}}}", l.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "points={};lines=[{}]", self.points, lines.join(","))
    }
}

pub fn to_linear_space(c: &Cograph) -> Result<LinearSpace, PlError> {
    if let Some(v) = pl_violation(c) {
        return Err(PlError::NotPl(v));
    }
    let s = LinearSpace { points: c.n(), lines: blocks(c) }.normalized();
    s.validate()?;
    Ok(s)
}

pub fn from_linear_space(s: &LinearSpace) -> Result<Cograph, PlError> {
    s.validate()?;
    let mut line_of = BTreeMap::new();
    for (k, line) in s.lines.iter().enumerate() {
        for (i, &a) in line.iter().enumerate() {
            for &b in &line[i + 1..] {
                line_of.insert((a.min(b), a.max(b)), k);
            }
        }
    }
    Ok(Cograph::from_fn(s.points, |i, j| line_of[&(i, j)]).expect("a linear space has at least two points"))
}

// ---------------------------------------------------------------------------
// Coordinatization
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CoordLabel {
    /// `(C(P,X), C(P,Y))` when these differ.
    Pair(usize, usize),
    /// `C(P,O)` when `C(P,X) = C(P,Y)`.
    Single(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coordinatization {
    pub x: usize,
    pub y: usize,
    pub origin: usize,
    /// `None` for the anchors `x` and `y`.
    pub labels: Vec<Option<CoordLabel>>,
}

fn valid_origin(c: &Cograph, x: usize, y: usize, o: usize) -> bool {
    if o == x || o == y {
        return false;
    }
    let (e, f, g) = (c.class_of(x, y), c.class_of(o, x), c.class_of(o, y));
    e != f && e != g && f != g
}

/// Labels every point other than `x` and `y` by the classes joining it to
/// the anchors, or to the origin when those coincide. The origin defaults
/// to the first point seeing `x` and `y` along two new distinct classes.
pub fn coordinatize(c: &Cograph, x: usize, y: usize, origin: Option<usize>) -> Result<Coordinatization, PlError> {
    if let Some(v) = pl_violation(c) {
        return Err(PlError::NotPl(v));
    }
    if c.num_classes() < 2 {
        return Err(PlError::SingleClass);
    }
    let n = c.n();
    if x == y || x >= n || y >= n {
        return Err(PlError::BadAnchor(n));
    }
    let origin = match origin {
        Some(o) if o < n && valid_origin(c, x, y, o) => o,
        Some(o) => return Err(PlError::BadOrigin(o)),
        None => (0..n).find(|&o| valid_origin(c, x, y, o)).expect("a second class guarantees an origin"),
    };
    let labels: Vec<Option<CoordLabel>> = (0..n)
        .map(|p| {
            if p == x || p == y {
                None
            } else if c.class_of(p, x) != c.class_of(p, y) {
                Some(CoordLabel::Pair(c.class_of(p, x), c.class_of(p, y)))
            } else {
                Some(CoordLabel::Single(c.class_of(p, origin)))
            }
        })
        .collect();
    let distinct: BTreeSet<_> = labels.iter().flatten().collect();
    assert_eq!(distinct.len(), n - 2, "coordinates must identify points");
    Ok(Coordinatization { x, y, origin, labels })
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

/// Disjoint union joined by single-copy pairs.
pub fn pl_sum(c: &Cograph, d: &Cograph) -> Cograph {
    let n = c.n();
    Cograph::from_fn(n + d.n(), |i, j| {
        if j < n {
            (0, c.class_of(i, j))
        } else if i >= n {
            (1, d.class_of(i - n, j - n))
        } else {
            (2, i * 1000 + j)
        }
    })
    .expect("sum has at least four points")
}

fn all_points_equivalent(c: &Cograph) -> bool {
    c.num_classes() == 1 || c.class_sizes().iter().all(|&s| s == 1)
}

/// Glues the last point of `c` to the first point of `d`; pairs across the
/// two sides become single-copy.
pub fn pl_wedge(c: &Cograph, d: &Cograph) -> Result<Cograph, PlError> {
    if !all_points_equivalent(c) || !all_points_equivalent(d) {
        return Err(PlError::JoinPrecondition);
    }
    let n = c.n();
    let side = |p: usize| if p < n { Some(p) } else { None };
    let in_d = |p: usize| if p + 1 >= n { Some(p + 1 - n) } else { None };
    Ok(Cograph::from_fn(n + d.n() - 1, |i, j| match ((side(i), side(j)), (in_d(i), in_d(j))) {
        ((Some(a), Some(b)), _) => (0, c.class_of(a, b)),
        (_, (Some(a), Some(b))) => (1, d.class_of(a, b)),
        _ => (2, i * 1000 + j),
    })
    .expect("join has at least three points"))
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct PlEntry {
    #[serde(skip)]
    pub pattern: Cograph,
    pub space: LinearSpace,
}

/// Masks of at least three and at most `max_len` points, excluding `root`.
fn candidate_lines(n: usize, max_len: u32, root: u32) -> Vec<u32> {
    (0u32..1 << n).filter(|&m| (3..=max_len).contains(&m.count_ones()) && m != root).collect()
}

/// Families of long lines meeting pairwise in at most one point, extending
/// `chosen` with candidates from index `from` on.
fn extend_families(cands: &[u32], from: usize, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    out.push(chosen.clone());
    for k in from..cands.len() {
        let l = cands[k];
        if chosen.iter().all(|&m| (m & l).count_ones() <= 1) {
            chosen.push(l);
            extend_families(cands, k + 1, chosen, out);
            chosen.pop();
        }
    }
}

fn space_from_masks(n: usize, masks: &[u32]) -> LinearSpace {
    let long: Vec<Vec<usize>> = masks.iter().map(|&m| (0..n).filter(|&p| m >> p & 1 == 1).collect()).collect();
    LinearSpace::from_long_lines(n, &long).expect("pairwise meets of at most one point give a linear space")
}

/// All PL-cographs on `n` points up to isomorphism, sorted by canonical key.
/// Up to relabelling a longest line is `{0, …, k−1}`, so the search fixes it
/// and adds only lines of at most `k` points.
pub fn enumerate_pl(n: usize, force: bool, exec: Exec) -> Result<Vec<PlEntry>, PlError> {
    if n < 2 || (n > PL_LIMIT && !force) || n > 12 {
        return Err(PlError::TooLarge(n));
    }
    let mut tasks: Vec<(u32, Option<u32>)> = vec![(0, None)];
    for k in 3..=n as u32 {
        let root = (1u32 << k) - 1;
        tasks.push((root, None));
        tasks.extend(candidate_lines(n, k, root).into_iter().filter(|&m| (m & root).count_ones() <= 1).map(|m| (root, Some(m))));
    }
    let found = exec.flat_map(tasks, |(root, second)| {
        let mut fams = Vec::new();
        match (root, second) {
            (0, _) => fams.push(Vec::new()),
            (_, None) => fams.push(vec![root]),
            (_, Some(m)) => {
                let cands = candidate_lines(n, root.count_ones(), root);
                let from = cands.iter().position(|&c| c == m).expect("second line is a candidate") + 1;
                extend_families(&cands, from, &mut vec![root, m], &mut fams);
            }
        }
        let mut local: BTreeMap<CanonicalKey, Vec<u32>> = BTreeMap::new();
        for f in fams {
            let space = space_from_masks(n, &f);
            let key = canonical_form(&from_linear_space(&space).expect("valid space"));
            local.entry(key).or_insert(f);
        }
        local.into_iter().collect::<Vec<_>>()
    });
    let mut best: BTreeMap<CanonicalKey, ()> = BTreeMap::new();
    for (key, _) in found {
        best.insert(key, ());
    }
    Ok(best
        .into_keys()
        .map(|key| {
            let pattern = key.to_cograph();
            let space = to_linear_space(&pattern).expect("generated patterns are PL");
            PlEntry { pattern, space }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Minimality {
    /// Every point lies on a line of three or more points.
    EveryPointOnLongLine,
    /// In addition, no point can be deleted while keeping every long line
    /// long: each point lies on a line of exactly three points.
    NotAnExpansion,
}

pub fn is_minimal(s: &LinearSpace, reading: Minimality) -> bool {
    let long = s.long_lines();
    let on_long = (0..s.points).all(|p| long.iter().any(|l| l.contains(&p)));
    match reading {
        Minimality::EveryPointOnLongLine => on_long,
        Minimality::NotAnExpansion => on_long && (0..s.points).all(|p| long.iter().any(|l| l.len() == 3 && l.contains(&p))),
    }
}

pub fn minimal_spaces(n: usize, reading: Minimality, force: bool, exec: Exec) -> Result<Vec<PlEntry>, PlError> {
    if n < 2 {
        return Ok(Vec::new());
    }
    Ok(enumerate_pl(n, force, exec)?.into_iter().filter(|e| is_minimal(&e.space, reading)).collect())
}
