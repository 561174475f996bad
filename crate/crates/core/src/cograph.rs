//! The abstract cograph: a partition of the unordered point pairs of `K_n`
//! into color classes, together with canonical forms and the catalogue line
//! format shared by every other module.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest point count accepted by [`Cograph`].
pub const MAX_POINTS: usize = 64;

/// Largest point count the catalogue line format can express (one hex digit
/// per point).
pub const MAX_SERIALIZED_POINTS: usize = 16;

const UNMAPPED: u16 = u16::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CographError {
    #[error("a cograph needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("a cograph supports at most {MAX_POINTS} points, got {0}")]
    TooManyPoints(usize),
    #[error("expected {expected} pair labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("pair ({0},{1}) is not a pair of distinct points below n")]
    BadPair(usize, usize),
    #[error("pair ({0},{1}) appears in more than one class")]
    DuplicatePair(usize, usize),
    #[error("pair ({0},{1}) is not covered by any class")]
    MissingPair(usize, usize),
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("cographs have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("class index {index} out of range (cograph has {classes} classes)")]
    ClassIndex { index: usize, classes: usize },
    #[error("permutation is not a bijection on {0} points")]
    BadPermutation(usize),
}

/// Index of the unordered pair `{i, j}` in colex order:
/// `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`.
///
/// Colex order means the pairs among the first `k` points form a prefix, which
/// the canonical form search relies on.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

/// Inverse of [`pair_index`]; returns `(i, j)` with `i < j`.
pub fn pair_at(index: usize) -> (usize, usize) {
    let mut b = 1;
    while (b + 1) * b / 2 <= index {
        b += 1;
    }
    (index - b * (b - 1) / 2, b)
}

#[inline]
pub fn num_pairs(n: usize) -> usize {
    n * (n - 1) / 2
}

/// All pairs `(i, j)`, `i < j < n`, in lexicographic order.
pub fn lex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// A complete graph on `n` points whose lines are partitioned into classes.
///
/// Classes carry no names: the label of each class is its rank by first
/// occurrence in colex pair order, so two values compare equal exactly when
/// they describe the same partition of the same labelled pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cograph {
    n: usize,
    labels: Vec<u16>,
}

impl Cograph {
    fn check_n(n: usize) -> Result<(), CographError> {
        if n < 2 {
            return Err(CographError::TooFewPoints(n));
        }
        if n > MAX_POINTS {
            return Err(CographError::TooManyPoints(n));
        }
        Ok(())
    }

    /// Builds a cograph from one label per pair in colex order. Labels are
    /// arbitrary; equal labels mean the same class.
    pub fn from_labels<K: Eq + Hash + Clone>(n: usize, labels: &[K]) -> Result<Self, CographError> {
        Self::check_n(n)?;
        if labels.len() != num_pairs(n) {
            return Err(CographError::LabelCount { expected: num_pairs(n), got: labels.len() });
        }
        let mut ids: HashMap<K, u16> = HashMap::new();
        let normalized = labels
            .iter()
            .map(|k| {
                let next = ids.len() as u16;
                *ids.entry(k.clone()).or_insert(next)
            })
            .collect();
        Ok(Cograph { n, labels: normalized })
    }

    /// Builds a cograph whose class of `{i, j}` is keyed by `key(i, j)`.
    pub fn from_fn<K, F>(n: usize, mut key: F) -> Result<Self, CographError>
    where
        K: Eq + Hash + Clone,
        F: FnMut(usize, usize) -> K,
    {
        Self::check_n(n)?;
        let labels: Vec<K> = (0..num_pairs(n))
            .map(|idx| {
                let (i, j) = pair_at(idx);
                key(i, j)
            })
            .collect();
        Self::from_labels(n, &labels)
    }

    /// Builds a cograph from explicit classes of pairs. Every pair must appear
    /// exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<(usize, usize)>]) -> Result<Self, CographError> {
        Self::check_n(n)?;
        let mut labels = vec![usize::MAX; num_pairs(n)];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(CographError::EmptyClass(c));
            }
            for &(i, j) in class {
                if i == j || i >= n || j >= n {
                    return Err(CographError::BadPair(i, j));
                }
                let idx = pair_index(i, j);
                if labels[idx] != usize::MAX {
                    return Err(CographError::DuplicatePair(i.min(j), i.max(j)));
                }
                labels[idx] = c;
            }
        }
        if let Some(idx) = labels.iter().position(|&l| l == usize::MAX) {
            let (i, j) = pair_at(idx);
            return Err(CographError::MissingPair(i, j));
        }
        Self::from_labels(n, &labels)
    }

    /// The cograph with a single class (`K_n` as a one-colored graph).
    pub fn monochrome(n: usize) -> Result<Self, CographError> {
        Self::from_fn(n, |_, _| 0u8)
    }

    /// The cograph whose classes are all singletons.
    pub fn all_distinct(n: usize) -> Result<Self, CographError> {
        Self::from_fn(n, |i, j| (i, j))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_pairs(&self) -> usize {
        self.labels.len()
    }

    pub fn num_classes(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Class labels per pair, colex order.
    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    #[inline]
    pub fn class_of(&self, i: usize, j: usize) -> usize {
        debug_assert!(i != j && i < self.n && j < self.n);
        self.labels[pair_index(i, j)] as usize
    }

    #[inline]
    pub fn same_class(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        self.class_of(a.0, a.1) == self.class_of(b.0, b.1)
    }

    /// Pairs of each class, every pair as `(i, j)` with `i < j`, sorted
    /// lexicographically. Outer index is the class label.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (i, j) in lex_pairs(self.n) {
            out[self.class_of(i, j)].push((i, j));
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_classes()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// Classes with at least two pairs ("repeated edges").
    pub fn repeated_classes(&self) -> Vec<Vec<(usize, usize)>> {
        self.classes().into_iter().filter(|c| c.len() >= 2).collect()
    }

    /// Relabels points: point `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, CographError> {
        if perm.len() != self.n {
            return Err(CographError::BadPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(CographError::BadPermutation(self.n));
            }
            seen[p] = true;
        }
        let mut labels = vec![0u16; self.labels.len()];
        for idx in 0..self.labels.len() {
            let (i, j) = pair_at(idx);
            labels[pair_index(perm[i], perm[j])] = self.labels[idx];
        }
        Self::from_labels(self.n, &labels)
    }

    /// The sub-cograph on the given points, renumbered `0..points.len()` in
    /// the given order.
    pub fn induced(&self, points: &[usize]) -> Result<Self, CographError> {
        Self::from_fn(points.len(), |a, b| self.class_of(points[a], points[b]))
    }

    /// Returns the cograph with classes `a` and `b` merged.
    pub fn merge_classes(&self, a: usize, b: usize) -> Self {
        let (a, b) = (a as u16, b as u16);
        let labels: Vec<u16> = self.labels.iter().map(|&l| if l == b { a } else { l }).collect();
        Self::from_labels(self.n, &labels).expect("merging preserves validity")
    }

    /// The simple graph formed by the pairs of one class.
    pub fn color_block(&self, class: usize) -> Result<Block, CographError> {
        let classes = self.num_classes();
        if class >= classes {
            return Err(CographError::ClassIndex { index: class, classes });
        }
        let edges: Vec<(usize, usize)> =
            lex_pairs(self.n).filter(|&(i, j)| self.class_of(i, j) == class).collect();
        let mut points: Vec<usize> = edges.iter().flat_map(|&(i, j)| [i, j]).collect();
        points.sort_unstable();
        points.dedup();
        Ok(Block { points, edges })
    }

    pub fn type_signature(&self) -> TypeSignature {
        let mut sizes = self.class_sizes();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        TypeSignature(sizes)
    }
}

impl fmt::Debug for Cograph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= MAX_SERIALIZED_POINTS {
            write!(f, "Cograph({})", serialize(self))
        } else {
            write!(f, "Cograph(n={}, labels={:?})", self.n, self.labels)
        }
    }
}

/// Vertex set and edge list of one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub points: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_complete(&self) -> bool {
        let k = self.points.len();
        self.edges.len() == k * (k - 1) / 2
    }
}

/// Multiset of class sizes, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeSignature(pub Vec<usize>);

pub fn type_signature(c: &Cograph) -> TypeSignature {
    c.type_signature()
}

/// Serialization of a cograph that is constant on isomorphism classes:
/// the point count followed by the lexicographically least relabelled label
/// string over all point permutations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u16>);

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    /// The canonical representative this key encodes.
    pub fn to_cograph(&self) -> Cograph {
        Cograph { n: self.n(), labels: self.0[1..].to_vec() }
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({:?})", self.to_cograph())
    }
}

struct CanonSearch<'a> {
    c: &'a Cograph,
    best: Vec<u16>,
    best_order: Vec<usize>,
    have_best: bool,
    version: u64,
    cur: Vec<u16>,
    order: Vec<usize>,
    used: Vec<bool>,
    map: Vec<u16>,
    next: u16,
}

impl CanonSearch<'_> {
    fn run(&mut self, pos: usize, state: Ordering) {
        let n = self.c.n;
        if pos == n {
            if !self.have_best || state == Ordering::Less {
                self.best.clone_from(&self.cur);
                self.best_order.clone_from(&self.order);
                self.have_best = true;
                self.version += 1;
            }
            return;
        }
        let entry_version = self.version;
        for p in 0..n {
            if self.used[p] {
                continue;
            }
            // A best found below this node shares the current prefix.
            let mut st = if self.version != entry_version { Ordering::Equal } else { state };
            let mark = self.cur.len();
            let mut assigned: Vec<usize> = Vec::new();
            let mut pruned = false;
            for i in 0..pos {
                let cls = self.c.class_of(self.order[i], p);
                if self.map[cls] == UNMAPPED {
                    self.map[cls] = self.next;
                    self.next += 1;
                    assigned.push(cls);
                }
                let id = self.map[cls];
                self.cur.push(id);
                if self.have_best && st == Ordering::Equal {
                    match id.cmp(&self.best[self.cur.len() - 1]) {
                        Ordering::Less => st = Ordering::Less,
                        Ordering::Greater => {
                            pruned = true;
                            break;
                        }
                        Ordering::Equal => {}
                    }
                }
            }
            if !pruned {
                self.used[p] = true;
                self.order.push(p);
                self.run(pos + 1, st);
                self.order.pop();
                self.used[p] = false;
            }
            self.cur.truncate(mark);
            for cls in assigned {
                self.map[cls] = UNMAPPED;
                self.next -= 1;
            }
        }
    }
}

/// Canonical key plus a permutation (`perm[old] = new`) taking `c` onto the
/// canonical representative.
pub fn canonical_labeling(c: &Cograph) -> (CanonicalKey, Vec<usize>) {
    let mut search = CanonSearch {
        c,
        best: Vec::with_capacity(c.labels.len()),
        best_order: Vec::with_capacity(c.n),
        have_best: false,
        version: 0,
        cur: Vec::with_capacity(c.labels.len()),
        order: Vec::with_capacity(c.n),
        used: vec![false; c.n],
        map: vec![UNMAPPED; c.num_classes()],
        next: 0,
    };
    search.run(0, Ordering::Equal);
    let mut key = Vec::with_capacity(c.labels.len() + 1);
    key.push(c.n as u16);
    key.extend_from_slice(&search.best);
    let mut perm = vec![0; c.n];
    for (new, &old) in search.best_order.iter().enumerate() {
        perm[old] = new;
    }
    (CanonicalKey(key), perm)
}

pub fn canonical_form(c: &Cograph) -> CanonicalKey {
    canonical_labeling(c).0
}

/// The canonical representative of the isomorphism class of `c`.
pub fn canonicalize(c: &Cograph) -> Cograph {
    canonical_form(c).to_cograph()
}

pub fn is_isomorphic(a: &Cograph, b: &Cograph) -> Result<bool, CographError> {
    if a.n != b.n {
        return Err(CographError::SizeMismatch(a.n, b.n));
    }
    if a.type_signature() != b.type_signature() {
        return Ok(false);
    }
    Ok(canonical_form(a) == canonical_form(b))
}

/// A permutation `perm[a_point] = b_point` carrying `a` onto `b`, if any.
pub fn find_isomorphism(a: &Cograph, b: &Cograph) -> Option<Vec<usize>> {
    if a.n != b.n {
        return None;
    }
    let (ka, pa) = canonical_labeling(a);
    let (kb, pb) = canonical_labeling(b);
    if ka != kb {
        return None;
    }
    let mut inv_b = vec![0; b.n];
    for (old, &new) in pb.iter().enumerate() {
        inv_b[new] = old;
    }
    Some(pa.iter().map(|&mid| inv_b[mid]).collect())
}

// ---------------------------------------------------------------------------
// Catalogue line format
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn point_char(p: usize) -> char {
    std::char::from_digit(p as u32, 16).expect("point below 16")
}

/// Classes sorted by size descending, then by least pair.
pub fn ordered_classes(c: &Cograph) -> Vec<Vec<(usize, usize)>> {
    let mut classes = c.classes();
    classes.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
    classes
}

/// Writes one catalogue line, e.g. `n=3;{01,02},{12}`.
///
/// Panics if `c` has more than [`MAX_SERIALIZED_POINTS`] points.
pub fn serialize(c: &Cograph) -> String {
    assert!(c.n <= MAX_SERIALIZED_POINTS, "catalogue format supports at most 16 points");
    let mut out = format!("n={};", c.n);
    for (k, class) in ordered_classes(c).iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push('{');
        for (t, &(i, j)) in class.iter().enumerate() {
            if t > 0 {
                out.push(',');
            }
            out.push(point_char(i));
            out.push(point_char(j));
        }
        out.push('}');
    }
    out
}

/// Parses a single catalogue line (without trailing fields).
pub fn parse(text: &str) -> Result<Cograph, ParseError> {
    parse_at(text.trim_end(), 1)
}

/// A parsed catalogue line: the cograph and its `key=value` fields.
pub type CatalogueLine = (Cograph, Vec<(String, String)>);

/// Parses a catalogue line that may carry whitespace-separated `key=value`
/// fields after the cograph, returning the fields in order.
pub fn parse_catalogue_line(line: &str, line_no: usize) -> Result<CatalogueLine, ParseError> {
    let mut parts = line.split_whitespace();
    let head = parts.next().ok_or(ParseError { line: line_no, column: 1, message: "empty line".into() })?;
    let c = parse_at(head, line_no)?;
    let mut fields = Vec::new();
    for part in parts {
        match part.split_once('=') {
            Some((k, v)) => fields.push((k.to_string(), v.to_string())),
            None => {
                let column = line.find(part).map_or(1, |p| p + 1);
                return Err(ParseError { line: line_no, column, message: format!("field `{part}` is not key=value") });
            }
        }
    }
    Ok((c, fields))
}

/// Parses every non-empty, non-`#` line of a catalogue file.
pub fn parse_catalogue(text: &str) -> Result<Vec<CatalogueLine>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(k, l)| parse_catalogue_line(l, k + 1))
        .collect()
}

fn parse_at(text: &str, line: usize) -> Result<Cograph, ParseError> {
    let err = |column: usize, message: String| ParseError { line, column, message };
    let bytes = text.as_bytes();
    let rest = text.strip_prefix("n=").ok_or_else(|| err(1, "expected `n=`".into()))?;
    let semi = rest.find(';').ok_or_else(|| err(3, "expected `;` after the point count".into()))?;
    let n: usize = rest[..semi].parse().map_err(|_| err(3, format!("bad point count `{}`", &rest[..semi])))?;
    if !(2..=MAX_SERIALIZED_POINTS).contains(&n) {
        return Err(err(3, format!("point count {n} outside 2..=16")));
    }
    let mut pos = 2 + semi + 1;
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    let digit = |pos: usize| -> Result<usize, ParseError> {
        let ch = *bytes.get(pos).ok_or_else(|| err(pos + 1, "unexpected end of line".into()))? as char;
        let d = ch.to_digit(16).ok_or_else(|| err(pos + 1, format!("expected a point digit, found `{ch}`")))? as usize;
        if d >= n {
            return Err(err(pos + 1, format!("point {d} out of range for n={n}")));
        }
        Ok(d)
    };
    loop {
        if bytes.get(pos) != Some(&b'{') {
            return Err(err(pos + 1, "expected `{`".into()));
        }
        pos += 1;
        let mut class = Vec::new();
        loop {
            let i = digit(pos)?;
            let j = digit(pos + 1)?;
            if i == j {
                return Err(err(pos + 1, format!("pair {i}{j} repeats a point")));
            }
            class.push((i.min(j), i.max(j)));
            pos += 2;
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b'}') => {
                    pos += 1;
                    break;
                }
                _ => return Err(err(pos + 1, "expected `,` or `}`".into())),
            }
        }
        classes.push(class);
        match bytes.get(pos) {
            None => break,
            Some(b',') => pos += 1,
            Some(_) => return Err(err(pos + 1, "expected `,` between classes".into())),
        }
    }
    Cograph::from_classes(n, &classes).map_err(|e| match e {
        CographError::MissingPair(i, j) => {
            err(text.len() + 1, format!("pair {}{} missing", point_char(i), point_char(j)))
        }
        other => err(1, other.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_roundtrip() {
        for idx in 0..num_pairs(12) {
            let (i, j) = pair_at(idx);
            assert!(i < j);
            assert_eq!(pair_index(i, j), idx);
            assert_eq!(pair_index(j, i), idx);
        }
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(1, 2), 2);
        assert_eq!(pair_index(0, 3), 3);
    }

    #[test]
    fn three_point_cographs_have_three_keys() {
        let mono = Cograph::monochrome(3).unwrap();
        let doubled = Cograph::from_classes(3, &[vec![(0, 1), (0, 2)], vec![(1, 2)]]).unwrap();
        let distinct = Cograph::all_distinct(3).unwrap();
        let keys: std::collections::BTreeSet<_> = [&mono, &doubled, &distinct].iter().map(|c| canonical_form(c)).collect();
        assert_eq!(keys.len(), 3);
        assert_eq!(mono.type_signature().0, vec![3]);
        assert_eq!(distinct.type_signature().0, vec![1, 1, 1]);
        assert_eq!(Cograph::monochrome(4).unwrap().type_signature().0, vec![6]);
    }

    #[test]
    fn monochrome_key_independent_of_input_order() {
        let a = Cograph::monochrome(3).unwrap();
        let b = a.permute(&[2, 0, 1]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(serialize(&Cograph::monochrome(3).unwrap()), "n=3;{01,02,12}");
        let doubled = Cograph::from_classes(3, &[vec![(1, 2)], vec![(0, 2), (0, 1)]]).unwrap();
        assert_eq!(serialize(&canonicalize(&doubled)), "n=3;{01,02},{12}");
        assert_eq!(serialize(&doubled), "n=3;{01,02},{12}");
        let moved = Cograph::from_classes(3, &[vec![(0, 1)], vec![(0, 2), (1, 2)]]).unwrap();
        assert_eq!(serialize(&moved), "n=3;{02,12},{01}");
        assert_eq!(serialize(&canonicalize(&moved)), "n=3;{01,02},{12}");
    }

    #[test]
    fn parse_reports_missing_pair() {
        let e = parse("n=3;{01}").unwrap_err();
        assert!(e.message.contains("02"), "{e}");
        assert_eq!(e.line, 1);
        assert!(parse("n=3;{01,02},{12").is_err());
        assert!(parse("n=3;{01,0x},{12}").is_err());
        assert!(parse("x=3;{01}").is_err());
        assert!(parse("n=3;{01,01},{02,12}").is_err());
        let e = parse_catalogue("n=2;{01}\nn=3;{01}\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn hex_points_roundtrip() {
        let c = Cograph::from_fn(12, |i, j| (i + j) % 5).unwrap();
        let text = serialize(&c);
        assert!(text.contains('b'));
        assert_eq!(parse(&text).unwrap(), c);
    }

    #[test]
    fn isomorphism_and_signature() {
        let k4 = Cograph::monochrome(4).unwrap();
        let doubled = Cograph::from_fn(4, |i, j| if (i, j) == (0, 1) || (i, j) == (2, 3) { 0 } else { 1 + pair_index(i, j) }).unwrap();
        assert!(!is_isomorphic(&k4, &doubled).unwrap());
        assert!(is_isomorphic(&k4, &k4).unwrap());
        assert!(is_isomorphic(&k4, &Cograph::monochrome(5).unwrap()).is_err());
    }

    #[test]
    fn find_isomorphism_maps_onto_target() {
        let a = Cograph::from_fn(5, |i, j| (i * j + i + j) % 3).unwrap();
        let b = a.permute(&[3, 1, 4, 0, 2]).unwrap();
        let perm = find_isomorphism(&a, &b).unwrap();
        assert_eq!(a.permute(&perm).unwrap(), b);
    }

    #[test]
    fn color_block_reads_class() {
        let k3 = Cograph::monochrome(3).unwrap();
        let block = k3.color_block(0).unwrap();
        assert_eq!(block.points, vec![0, 1, 2]);
        assert!(block.is_complete());
        let doubled = Cograph::from_fn(4, |i, j| if (i, j) == (0, 1) || (i, j) == (2, 3) { 0 } else { 1 + pair_index(i, j) }).unwrap();
        let block = doubled.color_block(0).unwrap();
        assert_eq!(block.edges.len(), 2);
        assert!(block.points.len() <= 4);
        assert!(k3.color_block(1).is_err());
    }

    #[test]
    fn from_classes_validation() {
        assert!(matches!(Cograph::from_classes(3, &[vec![(0, 1)]]), Err(CographError::MissingPair(0, 2))));
        assert!(Cograph::from_classes(3, &[vec![(0, 1), (1, 0)], vec![(0, 2), (1, 2)]]).is_err());
        assert!(Cograph::from_classes(1, &[]).is_err());
        assert!(Cograph::from_classes(3, &[vec![(0, 1), (0, 2), (1, 2)], vec![]]).is_err());
    }
}
