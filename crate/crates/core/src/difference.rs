//! Difference cographs: points in ℤ or ℤ_m, each edge the distance between
//! its endpoints (`|p − q|`, or the shorter way round the circle).

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::cograph::{canonical_labeling, lex_pairs, CanonicalKey, Cograph};
use crate::exec::Exec;

/// Default integer span searched for ℤ witnesses.
pub const DEFAULT_INTEGER_BOUND: i128 = 64;
/// Default largest modulus searched for ℤ_m witnesses.
pub const DEFAULT_MAX_MODULUS: i128 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffError {
    #[error("points {0} and {1} coincide")]
    DegeneratePoint(i128, i128),
    #[error("value {value} is not a residue modulo {modulus}")]
    NotResidue { value: i128, modulus: i128 },
    #[error("a labeling needs at least 2 points")]
    TooFewPoints,
    #[error("difference catalogue supports 2..=5 points, got {0}")]
    CatalogueSize(usize),
}

/// `|p − q|` for `m = 0`, otherwise the circular distance in ℤ_m.
pub fn diff_edge(p: i128, q: i128, m: i128) -> Result<i128, DiffError> {
    if m == 0 {
        if p == q {
            return Err(DiffError::DegeneratePoint(p, q));
        }
        return Ok((p - q).abs());
    }
    let d = (p - q).rem_euclid(m);
    if d == 0 {
        return Err(DiffError::DegeneratePoint(p, q));
    }
    Ok(d.min(m - d))
}

#[inline]
fn edge_unchecked(p: i128, q: i128, m: i128) -> i128 {
    if m == 0 {
        (p - q).abs()
    } else {
        let d = (p - q).rem_euclid(m);
        d.min(m - d)
    }
}

/// Distinct point values in ℤ (`modulus = 0`) or ℤ_m.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DiffLabeling {
    pub modulus: i128,
    pub values: Vec<i128>,
}

impl DiffLabeling {
    pub fn new(modulus: i128, values: Vec<i128>) -> Result<Self, DiffError> {
        if values.len() < 2 {
            return Err(DiffError::TooFewPoints);
        }
        if modulus > 0 {
            if let Some(&v) = values.iter().find(|&&v| !(0..modulus).contains(&v)) {
                return Err(DiffError::NotResidue { value: v, modulus });
            }
        }
        for (i, j) in lex_pairs(values.len()) {
            if values[i] == values[j] {
                return Err(DiffError::DegeneratePoint(values[i], values[j]));
            }
        }
        Ok(DiffLabeling { modulus, values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn edge(&self, i: usize, j: usize) -> i128 {
        edge_unchecked(self.values[i], self.values[j], self.modulus)
    }

    /// Adds `shift` to every value (mod m).
    pub fn translate(&self, shift: i128) -> DiffLabeling {
        let values = self
            .values
            .iter()
            .map(|&v| if self.modulus == 0 { v + shift } else { (v + shift).rem_euclid(self.modulus) })
            .collect();
        DiffLabeling { modulus: self.modulus, values }
    }

    /// Text form `(0,1,3;0)`, the last entry being the modulus.
    pub fn display(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(i128::to_string).collect();
        format!("({};{})", vals.join(","), self.modulus)
    }
}

pub fn pattern_of(l: &DiffLabeling) -> Cograph {
    Cograph::from_fn(l.n(), |i, j| l.edge(i, j)).expect("labelings have at least two points")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DiffVerdict {
    TorsionFree(DiffLabeling),
    Torsion(DiffLabeling),
    NotRealizable,
}

impl DiffVerdict {
    pub fn witness(&self) -> Option<&DiffLabeling> {
        match self {
            DiffVerdict::TorsionFree(w) | DiffVerdict::Torsion(w) => Some(w),
            DiffVerdict::NotRealizable => None,
        }
    }
}

/// Searches ℤ with values in `0..=span` for increasing span up to
/// [`DEFAULT_INTEGER_BOUND`], then ℤ_m for `m = n..=max_modulus`.
pub fn realize_difference(pattern: &Cograph, max_modulus: i128) -> DiffVerdict {
    realize_difference_bounded(pattern, DEFAULT_INTEGER_BOUND, max_modulus)
}

pub fn realize_difference_bounded(pattern: &Cograph, integer_bound: i128, max_modulus: i128) -> DiffVerdict {
    let n = pattern.n() as i128;
    for span in n - 1..=integer_bound {
        if let Some(w) = search_labeling(pattern, 0, span) {
            return DiffVerdict::TorsionFree(w);
        }
    }
    for m in n..=max_modulus {
        if let Some(w) = search_labeling(pattern, m, m - 1) {
            return DiffVerdict::Torsion(w);
        }
    }
    DiffVerdict::NotRealizable
}

/// Lexicographically least labeling realizing `pattern` with values in
/// `0..=span` (and, for `m > 0`, residues mod m with point 0 at zero).
pub fn search_labeling(pattern: &Cograph, modulus: i128, span: i128) -> Option<DiffLabeling> {
    let mut st = DiffSearch {
        pattern,
        modulus,
        span,
        values: Vec::new(),
        class_value: vec![None; pattern.num_classes()],
        value_owner: HashMap::new(),
    };
    st.extend().then_some(DiffLabeling { modulus, values: st.values })
}

struct DiffSearch<'a> {
    pattern: &'a Cograph,
    modulus: i128,
    span: i128,
    values: Vec<i128>,
    class_value: Vec<Option<i128>>,
    value_owner: HashMap<i128, usize>,
}

impl DiffSearch<'_> {
    fn extend(&mut self) -> bool {
        let k = self.values.len();
        if k == self.pattern.n() {
            // In ℤ the span must actually be used so that spans are tried in order.
            return self.modulus > 0 || self.values.iter().max() == Some(&self.span) && self.values.contains(&0);
        }
        let forced = (0..k).find_map(|i| self.class_value[self.pattern.class_of(i, k)].map(|d| (self.values[i], d)));
        let candidates: Vec<i128> = match forced {
            Some((base, d)) => {
                let mut c: Vec<i128> = [base - d, base + d]
                    .into_iter()
                    .map(|v| if self.modulus > 0 { v.rem_euclid(self.modulus) } else { v })
                    .filter(|v| (0..=self.span).contains(v))
                    .collect();
                c.sort_unstable();
                c.dedup();
                c
            }
            None if k == 0 && self.modulus > 0 => vec![0],
            None => (0..=self.span).collect(),
        };
        for cand in candidates {
            if self.values.contains(&cand) {
                continue;
            }
            let mut assigned = Vec::new();
            let mut ok = true;
            for i in 0..k {
                let cls = self.pattern.class_of(i, k);
                let e = edge_unchecked(self.values[i], cand, self.modulus);
                match self.class_value[cls] {
                    Some(v) if v != e => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        if self.value_owner.contains_key(&e) {
                            ok = false;
                            break;
                        }
                        self.value_owner.insert(e, cls);
                        self.class_value[cls] = Some(e);
                        assigned.push(cls);
                    }
                }
            }
            if ok {
                self.values.push(cand);
                if self.extend() {
                    return true;
                }
                self.values.pop();
            }
            for cls in assigned {
                let e = self.class_value[cls].take().expect("assigned above");
                self.value_owner.remove(&e);
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Motifs
// ---------------------------------------------------------------------------

/// Shape of the four points spanned by a Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QType {
    /// `0, a, b, a+b`: two disjoint equal pairs twice over.
    Parallelogram = 1,
    /// Parallelogram whose diagonals are also equal.
    Filled = 2,
    /// `0, a, 2a, 3a` with `3a` a new edge.
    Chain = 3,
    /// `0, a, 2a, 3a` closing into a 4-cycle (`3a ≡ a`).
    Cycle = 4,
    /// `0, a, 2a, 3a` with `3a ≡ 2a`.
    FoldedChain = 5,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QInstance {
    pub pairs: ((usize, usize), (usize, usize)),
    /// `None` only if the four points match none of the five shapes.
    pub kind: Option<QType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MotifCensus {
    pub v: usize,
    pub q: usize,
    pub t: usize,
    pub qs: Vec<QInstance>,
}

fn is_matching(pairs: &[(usize, usize)]) -> bool {
    let mut seen = BTreeSet::new();
    pairs.iter().all(|&(a, b)| seen.insert(a) && seen.insert(b))
}

fn is_path(pairs: &[(usize, usize)]) -> bool {
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in pairs {
        *degree.entry(a).or_insert(0) += 1;
        *degree.entry(b).or_insert(0) += 1;
    }
    let ends = degree.values().filter(|&&d| d == 1).count();
    degree.len() == pairs.len() + 1 && ends == 2 && degree.values().all(|&d| d <= 2)
}

/// Decides the shape of the four-point pattern containing a Q.
pub fn classify_q(four: &Cograph) -> Option<QType> {
    let classes = four.classes();
    let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let of_size = |k: usize| classes.iter().filter(|c| c.len() == k).cloned().collect::<Vec<_>>();
    match sizes.as_slice() {
        [2, 2, 1, 1] => of_size(2).iter().all(|c| is_matching(c)).then_some(QType::Parallelogram),
        [2, 2, 2] => of_size(2).iter().all(|c| is_matching(c)).then_some(QType::Filled),
        [3, 2, 1] => (is_path(&of_size(3)[0]) && is_matching(&of_size(2)[0])).then_some(QType::Chain),
        [4, 2] => (is_matching(&of_size(2)[0]) && four.class_sizes().len() == 2).then_some(QType::Cycle),
        [3, 3] => of_size(3).iter().all(|c| is_path(c)).then_some(QType::FoldedChain),
        _ => None,
    }
}

/// V, Q and T counts of a pattern, with the shape of every Q.
pub fn motif_census_of(c: &Cograph) -> MotifCensus {
    let n = c.n();
    let mut v = 0;
    for p in 0..n {
        for q in 0..n {
            for r in q + 1..n {
                if p != q && p != r && c.class_of(p, q) == c.class_of(p, r) {
                    v += 1;
                }
            }
        }
    }
    let mut qs = Vec::new();
    let pairs: Vec<(usize, usize)> = lex_pairs(n).collect();
    for (k, &a) in pairs.iter().enumerate() {
        for &b in &pairs[k + 1..] {
            let disjoint = a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1;
            if disjoint && c.same_class(a, b) {
                let points = [a.0, a.1, b.0, b.1];
                let four = c.induced(&points).expect("four points");
                qs.push(QInstance { pairs: (a, b), kind: classify_q(&four) });
            }
        }
    }
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if c.class_of(i, j) == c.class_of(j, k) && c.class_of(i, j) == c.class_of(i, k) {
                    t += 1;
                }
            }
        }
    }
    MotifCensus { v, q: qs.len(), t, qs }
}

pub fn motif_census(l: &DiffLabeling) -> MotifCensus {
    motif_census_of(&pattern_of(l))
}

// ---------------------------------------------------------------------------
// Torsion forcers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DiffFinding {
    /// A cycle of pairs all in one class.
    MonochromeCycle { points: Vec<usize> },
    /// Four points whose three pairings are each a repeated class.
    FilledQuadrangle { points: [usize; 4] },
    /// Doubling and tripling relations between classes disagree: `class`
    /// is reached from `root` as both `first` and `second` times its length.
    MultiplierCycle { root: usize, class: usize, first: i64, second: i64 },
}

fn class_cycle(pairs: &[(usize, usize)], n: usize) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] || adj[start].is_empty() {
            continue;
        }
        let mut stack = vec![(start, usize::MAX)];
        while let Some((u, from)) = stack.pop() {
            if seen[u] {
                continue;
            }
            seen[u] = true;
            parent[u] = from;
            for &w in &adj[u] {
                if w == from {
                    continue;
                }
                if seen[w] {
                    // Close the cycle u .. w through the tree.
                    let mut path_u = vec![u];
                    let mut x = u;
                    while parent[x] != usize::MAX {
                        x = parent[x];
                        path_u.push(x);
                    }
                    if let Some(pos) = path_u.iter().position(|&y| y == w) {
                        return Some(path_u[..=pos].to_vec());
                    }
                    let mut path_w = vec![w];
                    let mut y = w;
                    while parent[y] != usize::MAX && !path_u.contains(&y) {
                        y = parent[y];
                        path_w.push(y);
                    }
                    let meet = *path_w.last().expect("nonempty");
                    let pos = path_u.iter().position(|&z| z == meet)?;
                    let mut cycle = path_u[..=pos].to_vec();
                    path_w.pop();
                    cycle.extend(path_w.into_iter().rev());
                    return Some(cycle);
                }
                stack.push((w, u));
            }
        }
    }
    None
}

/// Multiplier relations `class(target) = factor · class(source)` implied in
/// ℤ by V's (closing pair is twice the arm) and monochrome 3-edge paths
/// (ends at three times the step).
fn multiplier_relations(c: &Cograph) -> Vec<(usize, usize, i64)> {
    let n = c.n();
    let mut rel = Vec::new();
    for p in 0..n {
        for q in 0..n {
            for r in q + 1..n {
                if p != q && p != r && c.class_of(p, q) == c.class_of(p, r) {
                    rel.push((c.class_of(p, q), c.class_of(q, r), 2));
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                for e in a + 1..n {
                    let pts = [a, b, d, e];
                    let distinct = pts.iter().collect::<BTreeSet<_>>().len() == 4;
                    if distinct && c.class_of(a, b) == c.class_of(b, d) && c.class_of(b, d) == c.class_of(d, e) {
                        rel.push((c.class_of(a, b), c.class_of(a, e), 3));
                    }
                }
            }
        }
    }
    rel
}

/// Configurations that force torsion: monochrome cycles, filled
/// quadrangles and inconsistent multiplier relations between classes.
pub fn detect_diff_torsion_forcers(c: &Cograph) -> Vec<DiffFinding> {
    let n = c.n();
    let mut out = Vec::new();
    for class in c.classes() {
        if let Some(points) = class_cycle(&class, n) {
            out.push(DiffFinding::MonochromeCycle { points });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for e in d + 1..n {
                    let (ab, de) = (c.class_of(a, b), c.class_of(d, e));
                    let (ad, be) = (c.class_of(a, d), c.class_of(b, e));
                    let (ae, bd) = (c.class_of(a, e), c.class_of(b, d));
                    if ab == de && ad == be && ae == bd {
                        out.push(DiffFinding::FilledQuadrangle { points: [a, b, d, e] });
                    }
                }
            }
        }
    }
    // Propagate multipliers from each root; a class reached with two
    // different factors closes a cycle of relations.
    let rel = multiplier_relations(c);
    let mut graph: BTreeMap<usize, Vec<(usize, i64, bool)>> = BTreeMap::new();
    for &(s, t, k) in &rel {
        graph.entry(s).or_default().push((t, k, true));
        graph.entry(t).or_default().push((s, k, false));
    }
    let mut reported = HashSet::new();
    for &root in graph.keys() {
        // Factors as reduced fractions num/den.
        let mut factor: BTreeMap<usize, (i64, i64)> = BTreeMap::new();
        factor.insert(root, (1, 1));
        let mut queue = vec![root];
        while let Some(u) = queue.pop() {
            let (un, ud) = factor[&u];
            for &(w, k, forward) in &graph[&u] {
                let (mut wn, mut wd) = if forward { (un * k, ud) } else { (un, ud * k) };
                let g = num_integer::gcd(wn, wd);
                wn /= g;
                wd /= g;
                match factor.get(&w) {
                    None => {
                        factor.insert(w, (wn, wd));
                        queue.push(w);
                    }
                    Some(&(fn_, fd)) if fn_ * wd != wn * fd => {
                        let key = (root.min(w), root.max(w));
                        if reported.insert(key) {
                            out.push(DiffFinding::MultiplierCycle { root, class: w, first: fn_ * wd, second: wn * fd });
                        }
                    }
                    Some(_) => {}
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Catalogue
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct DiffCatalogueEntry {
    #[serde(skip)]
    pub pattern: Cograph,
    pub torsion_free: bool,
    /// First witness in search order, relabelled to the canonical point order.
    pub witness: DiffLabeling,
    pub census: MotifCensus,
}

fn k_subsets_with_zero(upper: i128, k: usize, out: &mut Vec<Vec<i128>>) {
    fn go(start: i128, upper: i128, k: usize, cur: &mut Vec<i128>, out: &mut Vec<Vec<i128>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..upper {
            cur.push(v);
            go(v + 1, upper, k, cur, out);
            cur.pop();
        }
    }
    go(1, upper, k, &mut vec![0], out);
}

/// Labelings to scan in canonical order: ℤ sets `0 < v_1 < … ≤ bound` by
/// largest value, then subsets of ℤ_m containing 0 by increasing m.
fn candidate_labelings(n: usize, integer_bound: i128, max_modulus: i128) -> Vec<DiffLabeling> {
    let mut out = Vec::new();
    for top in (n as i128 - 1)..=integer_bound {
        let mut sets = Vec::new();
        k_subsets_with_zero(top, n - 1, &mut sets);
        for mut s in sets {
            s.push(top);
            out.push(DiffLabeling { modulus: 0, values: s });
        }
    }
    for m in n as i128..=max_modulus {
        let mut sets = Vec::new();
        k_subsets_with_zero(m, n, &mut sets);
        out.extend(sets.into_iter().map(|values| DiffLabeling { modulus: m, values }));
    }
    out
}

/// Every difference pattern on `n` points (2..=5) reachable with ℤ values up
/// to `integer_bound` or moduli up to `max_modulus`, sorted by canonical key.
pub fn enumerate_difference_cographs(
    n: usize,
    integer_bound: i128,
    max_modulus: i128,
    exec: Exec,
) -> Result<Vec<DiffCatalogueEntry>, DiffError> {
    if !(2..=5).contains(&n) {
        return Err(DiffError::CatalogueSize(n));
    }
    let candidates = candidate_labelings(n, integer_bound, max_modulus);
    // Distinct raw patterns first, keeping the first labeling of each.
    let mut first_raw: HashMap<Vec<u16>, usize> = HashMap::new();
    let patterns: Vec<Cograph> = exec.map(candidates.clone(), |l| pattern_of(&l));
    for (idx, p) in patterns.iter().enumerate() {
        first_raw.entry(p.labels().to_vec()).or_insert(idx);
    }
    let mut raw: Vec<usize> = first_raw.into_values().collect();
    raw.sort_unstable();
    let keyed = exec.map(raw, |idx| {
        let (key, perm) = canonical_labeling(&patterns[idx]);
        (key, idx, perm)
    });
    let mut best: BTreeMap<CanonicalKey, (usize, Vec<usize>)> = BTreeMap::new();
    for (key, idx, perm) in keyed {
        match best.get(&key) {
            Some((old, _)) if *old <= idx => {}
            _ => {
                best.insert(key, (idx, perm));
            }
        }
    }
    Ok(best
        .into_iter()
        .map(|(key, (idx, perm))| {
            let l = &candidates[idx];
            let mut values = vec![0; n];
            for (old, &new) in perm.iter().enumerate() {
                values[new] = l.values[old];
            }
            let witness = DiffLabeling { modulus: l.modulus, values };
            let pattern = key.to_cograph();
            let census = motif_census_of(&pattern);
            DiffCatalogueEntry { pattern, torsion_free: l.modulus == 0, witness, census }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges() {
        assert_eq!(diff_edge(3, 10, 0).unwrap(), 7);
        assert_eq!(diff_edge(1, 11, 12).unwrap(), 2);
        assert_eq!(diff_edge(0, 6, 12).unwrap(), 6);
        assert_eq!(diff_edge(6, 0, 12).unwrap(), 6);
        assert!(diff_edge(4, 4, 0).is_err());
        assert!(diff_edge(1, 13, 12).is_err());
    }

    #[test]
    fn patterns() {
        let p = pattern_of(&DiffLabeling::new(0, vec![0, 1, 3]).unwrap());
        assert_eq!(p.num_classes(), 3);
        let p = pattern_of(&DiffLabeling::new(0, vec![0, 1, 2]).unwrap());
        assert_eq!(crate::serialize(&crate::canonicalize(&p)), "n=3;{01,02},{12}");
        let p = pattern_of(&DiffLabeling::new(0, vec![0, 1, 2, 3]).unwrap());
        assert_eq!(p.type_signature().0, vec![3, 2, 1]);
    }

    #[test]
    fn realize_examples() {
        let chain = pattern_of(&DiffLabeling::new(0, vec![0, 1, 2, 3]).unwrap());
        match realize_difference(&chain, DEFAULT_MAX_MODULUS) {
            DiffVerdict::TorsionFree(w) => assert_eq!(pattern_of(&w), chain),
            other => panic!("{other:?}"),
        }
        let tri = Cograph::monochrome(3).unwrap();
        assert_eq!(realize_difference(&tri, 10), DiffVerdict::Torsion(DiffLabeling::new(3, vec![0, 1, 2]).unwrap()));
    }

    #[test]
    fn census_examples() {
        let c = motif_census(&DiffLabeling::new(0, vec![0, 1, 2]).unwrap());
        assert_eq!((c.v, c.q, c.t), (1, 0, 0));
        let c = motif_census(&DiffLabeling::new(0, vec![0, 1, 2, 3]).unwrap());
        assert!(c.qs.iter().any(|q| q.kind == Some(QType::Chain)));
        // Butterfly around 0 with x = 3, y = 7.
        let c = motif_census(&DiffLabeling::new(0, vec![0, 3, -3, 7, -7]).unwrap());
        assert!(c.v >= 2 && c.q >= 1);
    }

    #[test]
    fn forcers() {
        let chain = pattern_of(&DiffLabeling::new(0, vec![0, 1, 2, 3]).unwrap());
        assert!(detect_diff_torsion_forcers(&chain).is_empty());
        let square = pattern_of(&DiffLabeling::new(4, vec![0, 1, 2, 3]).unwrap());
        assert!(detect_diff_torsion_forcers(&square).iter().any(|f| matches!(f, DiffFinding::MonochromeCycle { .. })));
        let filled = pattern_of(&DiffLabeling::new(0, vec![0, 1, 3, 4]).unwrap());
        assert_eq!(classify_q(&filled), Some(QType::Parallelogram));
    }

    #[test]
    fn small_catalogues() {
        let two = enumerate_difference_cographs(2, 8, 8, Exec::Sequential).unwrap();
        assert_eq!(two.len(), 1);
        let three = enumerate_difference_cographs(3, 16, 16, Exec::Sequential).unwrap();
        assert_eq!(three.len(), 3);
        for e in three {
            assert_eq!(pattern_of(&e.witness), e.pattern);
        }
    }
}
