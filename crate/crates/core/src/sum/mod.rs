//! Sum cographs: points in an abelian group, each edge the sum of its
//! endpoints.
//!
//! A pattern (a [`Cograph`]) is turned into the integer system "pairs in one
//! class have equal sums". Its row lattice decides everything: which point
//! or edge coincidences every solution must have, and which torsion any
//! solution needs. Witnesses are found by search in ℤ or ℤ_m, with the
//! universal group `ℤ^n / L` as a fallback that always succeeds when the
//! pattern is realizable at all.

mod catalogue;
mod obstructions;
mod wheel;

pub use catalogue::{close_under_forced_edges, enumerate_sum_cographs, SumCatalogueEntry, SumCatalogueError, SUM_CATALOGUE_LIMIT};
pub use obstructions::{detect_obstructions, SumFinding};
pub use wheel::{
    fibonacci, lucas, table_formulas, wheel_build, wheel_parameters, wheel_snf_torsion, WheelError, WheelGroup, WheelParameters,
    WheelReport,
};

use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use crate::cograph::{lex_pairs, Cograph};
use crate::lattice::{Membership, RowLattice};

/// A finite direct sum of cyclic groups; modulus 0 stands for ℤ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub moduli: Vec<i128>,
}

impl AbelianGroup {
    pub fn integers() -> Self {
        AbelianGroup { moduli: vec![0] }
    }

    pub fn cyclic(m: i128) -> Self {
        AbelianGroup { moduli: vec![m] }
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.moduli.iter().all(|&m| m == 0)
    }

    pub fn reduce(&self, v: &mut [i128]) {
        for (x, &m) in v.iter_mut().zip(&self.moduli) {
            if m > 0 {
                *x = x.rem_euclid(m);
            }
        }
    }

    pub fn add(&self, a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut s: Vec<i128> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&mut s);
        s
    }

    pub fn sub(&self, a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut s: Vec<i128> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.reduce(&mut s);
        s
    }

    /// Readable name such as `Z`, `Z15` or `Z2+Z2`.
    pub fn name(&self) -> String {
        self.moduli.iter().map(|&m| if m == 0 { "Z".to_string() } else { format!("Z{m}") }).collect::<Vec<_>>().join("+")
    }
}

/// Point values in an abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumWitness {
    pub group: AbelianGroup,
    pub values: Vec<Vec<i128>>,
}

impl SumWitness {
    pub fn integers(values: &[i128]) -> Self {
        SumWitness { group: AbelianGroup::integers(), values: values.iter().map(|&v| vec![v]).collect() }
    }

    pub fn cyclic(m: i128, values: &[i128]) -> Self {
        let group = AbelianGroup::cyclic(m);
        let values = values
            .iter()
            .map(|&v| {
                let mut x = vec![v];
                group.reduce(&mut x);
                x
            })
            .collect();
        SumWitness { group, values }
    }

    /// Values as plain integers when the group is ℤ or cyclic.
    pub fn scalars(&self) -> Option<Vec<i128>> {
        (self.group.rank() == 1).then(|| self.values.iter().map(|v| v[0]).collect())
    }

    /// The modulus when the group is cyclic; 0 for ℤ.
    pub fn modulus(&self) -> Option<i128> {
        (self.group.rank() == 1).then(|| self.group.moduli[0])
    }

    pub fn points_distinct(&self) -> bool {
        let mut seen = self.values.clone();
        seen.sort();
        seen.dedup();
        seen.len() == self.values.len()
    }

    /// The sum pattern these values produce.
    pub fn pattern(&self) -> Cograph {
        let n = self.values.len();
        Cograph::from_fn(n, |i, j| self.group.add(&self.values[i], &self.values[j])).expect("at least two points")
    }

    /// True when the values are distinct and reproduce `pattern` exactly.
    pub fn realizes(&self, pattern: &Cograph) -> bool {
        self.values.len() == pattern.n() && self.points_distinct() && &self.pattern() == pattern
    }

    /// Compact text form: `(0,1,3;Z15)`.
    pub fn display(&self) -> String {
        let vals: Vec<String> = self
            .values
            .iter()
            .map(|v| if v.len() == 1 { v[0].to_string() } else { format!("[{}]", join(v)) })
            .collect();
        format!("({};{})", vals.join(","), self.group.name())
    }
}

fn join(v: &[i128]) -> String {
    v.iter().map(i128::to_string).collect::<Vec<_>>().join(",")
}

/// Shifts every point by `value − x_point`, so `point` takes `value`.
/// Edge values shift by twice that amount and the pattern is unchanged.
pub fn renormalize(w: &SumWitness, point: usize, value: &[i128]) -> SumWitness {
    let shift = w.group.sub(value, &w.values[point]);
    SumWitness { group: w.group.clone(), values: w.values.iter().map(|x| w.group.add(x, &shift)).collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SumOutcome {
    TorsionFree,
    RequiresTorsion,
    Unsolvable,
    ForcesExtraEdges,
}

/// `order · Σ coefficients_i x_i = 0` in every realizing group, while the
/// combination itself must be nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionRelation {
    pub order: i128,
    pub coefficients: Vec<i128>,
}

pub type PairOfPairs = ((usize, usize), (usize, usize));

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumVerdict {
    pub outcome: SumOutcome,
    pub forced_point_equalities: Vec<(usize, usize)>,
    pub forced_edge_equalities: Vec<PairOfPairs>,
    pub torsion_relations: Vec<TorsionRelation>,
    pub witness: Option<SumWitness>,
}

/// Lattice data of a sum pattern, without a witness.
#[derive(Debug, Clone)]
pub struct SumAnalysis {
    pub lattice: RowLattice,
    pub outcome: SumOutcome,
    pub forced_point_equalities: Vec<(usize, usize)>,
    pub forced_edge_equalities: Vec<PairOfPairs>,
    pub torsion_relations: Vec<TorsionRelation>,
}

/// Rows `e_P + e_Q − e_R − e_S`, one per non-representative pair of each
/// class, where `PQ` is the class's least pair.
pub fn sum_system(pattern: &Cograph) -> Vec<Vec<i128>> {
    let n = pattern.n();
    let mut rows = Vec::new();
    for class in pattern.classes() {
        let (a, b) = class[0];
        for &(r, s) in &class[1..] {
            let mut row = vec![0i128; n];
            row[a] += 1;
            row[b] += 1;
            row[r] -= 1;
            row[s] -= 1;
            rows.push(row);
        }
    }
    rows
}

fn point_difference(n: usize, i: usize, j: usize) -> Vec<i128> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = -1;
    v
}

fn edge_difference(n: usize, (p, q): (usize, usize), (r, s): (usize, usize)) -> Vec<i128> {
    let mut v = vec![0; n];
    v[p] += 1;
    v[q] += 1;
    v[r] -= 1;
    v[s] -= 1;
    v
}

fn positive_leading(mut v: Vec<i128>) -> Vec<i128> {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
    v
}

/// Classifies a pattern from its row lattice alone.
pub fn analyze_sum(pattern: &Cograph) -> SumAnalysis {
    let n = pattern.n();
    let lattice = RowLattice::new(sum_system(pattern), n).expect("sum systems have unit coefficients");
    let mut forced_point_equalities = Vec::new();
    let mut forced_edge_equalities = Vec::new();
    let mut torsion_relations = Vec::new();
    let membership = |v: &[i128]| lattice.membership(v).expect("sum systems have unit coefficients");

    for (i, j) in lex_pairs(n) {
        let v = point_difference(n, i, j);
        match membership(&v) {
            Membership::Lattice => forced_point_equalities.push((i, j)),
            Membership::Torsion(order) => {
                torsion_relations.push(TorsionRelation { order, coefficients: positive_leading(v) })
            }
            Membership::Outside => {}
        }
    }
    let pairs: Vec<(usize, usize)> = lex_pairs(n).collect();
    for (k, &a) in pairs.iter().enumerate() {
        for &b in &pairs[k + 1..] {
            if pattern.same_class(a, b) {
                continue;
            }
            let v = edge_difference(n, a, b);
            match membership(&v) {
                Membership::Lattice => forced_edge_equalities.push((a, b)),
                Membership::Torsion(order) => {
                    torsion_relations.push(TorsionRelation { order, coefficients: positive_leading(v) })
                }
                Membership::Outside => {}
            }
        }
    }
    let outcome = if !forced_point_equalities.is_empty() {
        SumOutcome::Unsolvable
    } else if !forced_edge_equalities.is_empty() {
        SumOutcome::ForcesExtraEdges
    } else if !torsion_relations.is_empty() {
        SumOutcome::RequiresTorsion
    } else {
        SumOutcome::TorsionFree
    };
    SumAnalysis { lattice, outcome, forced_point_equalities, forced_edge_equalities, torsion_relations }
}

/// Full classification, including a witness for the two realizable
/// outcomes.
pub fn classify_sum(pattern: &Cograph) -> SumVerdict {
    let analysis = analyze_sum(pattern);
    let witness = match analysis.outcome {
        SumOutcome::TorsionFree => Some(integer_witness(pattern).unwrap_or_else(|| universal_witness(pattern, &analysis))),
        SumOutcome::RequiresTorsion => {
            let base = analysis.torsion_relations.iter().fold(1i128, |acc, r| acc.lcm(&r.order));
            Some(
                (1..=10)
                    .find_map(|j| search_witness(pattern, &AbelianGroup::cyclic(j * base), 0))
                    .unwrap_or_else(|| universal_witness(pattern, &analysis)),
            )
        }
        SumOutcome::Unsolvable | SumOutcome::ForcesExtraEdges => None,
    };
    if let Some(w) = &witness {
        assert!(w.realizes(pattern), "sum witness {} fails to realize its pattern", w.display());
    }
    SumVerdict {
        outcome: analysis.outcome,
        forced_point_equalities: analysis.forced_point_equalities,
        forced_edge_equalities: analysis.forced_edge_equalities,
        torsion_relations: analysis.torsion_relations,
        witness,
    }
}

/// Integer bounds tried in order when looking for a ℤ witness.
const INTEGER_BOUNDS: [i128; 4] = [7, 15, 31, 63];

/// Lexicographically least nonnegative integer witness under the first
/// bound in [`INTEGER_BOUNDS`] that admits one.
pub fn integer_witness(pattern: &Cograph) -> Option<SumWitness> {
    INTEGER_BOUNDS.iter().find_map(|&b| search_witness(pattern, &AbelianGroup::integers(), b))
}

/// Depth-first search for the lexicographically least witness in `group`,
/// with ℤ components restricted to `0..=bound`.
pub fn search_witness(pattern: &Cograph, group: &AbelianGroup, bound: i128) -> Option<SumWitness> {
    let ranges: Vec<i128> = group.moduli.iter().map(|&m| if m == 0 { bound + 1 } else { m }).collect();
    let size: i128 = ranges.iter().product();
    if size < pattern.n() as i128 {
        return None;
    }
    let elements: Vec<Vec<i128>> = (0..size)
        .map(|mut code| {
            let mut e = vec![0; ranges.len()];
            for k in (0..ranges.len()).rev() {
                e[k] = code % ranges[k];
                code /= ranges[k];
            }
            e
        })
        .collect();
    let mut state = SearchState {
        pattern,
        group,
        ranges: &ranges,
        elements: &elements,
        // Every coset of a finite group contains a translate with point 0 at zero.
        pin_first: group.moduli.iter().all(|&m| m > 0),
        values: Vec::new(),
        class_sum: vec![None; pattern.num_classes()],
        sum_owner: HashMap::new(),
    };
    state.extend().then(|| SumWitness { group: group.clone(), values: state.values })
}

struct SearchState<'a> {
    pattern: &'a Cograph,
    group: &'a AbelianGroup,
    ranges: &'a [i128],
    elements: &'a [Vec<i128>],
    pin_first: bool,
    values: Vec<Vec<i128>>,
    class_sum: Vec<Option<Vec<i128>>>,
    sum_owner: HashMap<Vec<i128>, usize>,
}

impl SearchState<'_> {
    fn in_range(&self, v: &[i128]) -> bool {
        v.iter().zip(self.ranges).all(|(&x, &r)| (0..r).contains(&x))
    }

    fn extend(&mut self) -> bool {
        let k = self.values.len();
        if k == self.pattern.n() {
            return true;
        }
        let forced = (0..k).find_map(|i| {
            self.class_sum[self.pattern.class_of(i, k)].as_ref().map(|s| self.group.sub(s, &self.values[i]))
        });
        let candidates: Vec<Vec<i128>> = match forced {
            Some(v) if self.in_range(&v) => vec![v],
            Some(_) => return false,
            None if k == 0 && self.pin_first => vec![self.elements[0].clone()],
            None => self.elements.to_vec(),
        };
        for cand in candidates {
            if self.values.contains(&cand) {
                continue;
            }
            let mut assigned: Vec<usize> = Vec::new();
            let mut ok = true;
            for i in 0..k {
                let cls = self.pattern.class_of(i, k);
                let s = self.group.add(&self.values[i], &cand);
                match &self.class_sum[cls] {
                    Some(known) => {
                        if *known != s {
                            ok = false;
                            break;
                        }
                    }
                    None => {
                        if self.sum_owner.contains_key(&s) {
                            ok = false;
                            break;
                        }
                        self.sum_owner.insert(s.clone(), cls);
                        self.class_sum[cls] = Some(s);
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
                let s = self.class_sum[cls].take().expect("assigned above");
                self.sum_owner.remove(&s);
            }
        }
        false
    }
}

/// A witness in the universal group `ℤ^n / L ≅ ⊕ ℤ_{d_i} ⊕ ℤ^f`, with the
/// free part folded into one ℤ coordinate. Only valid when the analysis
/// found no forced point or edge equality.
pub fn universal_witness(pattern: &Cograph, analysis: &SumAnalysis) -> SumWitness {
    let n = pattern.n();
    let images: Vec<Vec<(i128, i128)>> = (0..n).map(|j| analysis.lattice.quotient_image(j)).collect();
    let torsion: Vec<i128> = images[0].iter().filter(|(d, _)| *d > 0).map(|(d, _)| *d).collect();
    let has_free = images[0].iter().any(|(d, _)| *d == 0);
    let mut base: i128 = 1000;
    loop {
        let values: Vec<Vec<i128>> = images
            .iter()
            .map(|img| {
                let mut v: Vec<i128> = img.iter().filter(|(d, _)| *d > 0).map(|(_, x)| *x).collect();
                if has_free {
                    let folded = img
                        .iter()
                        .filter(|(d, _)| *d == 0)
                        .fold((0i128, 1i128), |(acc, w), (_, x)| (acc + x * w, w * base))
                        .0;
                    v.push(folded);
                }
                v
            })
            .collect();
        let mut moduli = torsion.clone();
        if has_free {
            moduli.push(0);
        }
        if moduli.is_empty() {
            // Trivial quotient: only possible when n points collapse, which
            // the analysis has already excluded.
            unreachable!("realizable pattern with trivial universal group");
        }
        let group = AbelianGroup { moduli };
        let mut values = values;
        if has_free {
            let last = group.rank() - 1;
            let min = values.iter().map(|v| v[last]).min().unwrap_or(0);
            for v in values.iter_mut() {
                v[last] -= min;
            }
        }
        let w = SumWitness { group, values };
        if w.realizes(pattern) {
            return w;
        }
        base = base.checked_mul(1000).expect("folding base overflow");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Equation = ((usize, usize), (usize, usize));

    /// Points P..U are 0..5; each equation names two pairs with equal sums.
    pub(crate) fn from_equations(n: usize, eqs: &[Equation]) -> Cograph {
        let mut label: Vec<usize> = (0..crate::cograph::num_pairs(n)).collect();
        for &(a, b) in eqs {
            let la = label[crate::cograph::pair_index(a.0, a.1)];
            let lb = label[crate::cograph::pair_index(b.0, b.1)];
            for l in label.iter_mut() {
                if *l == lb {
                    *l = la;
                }
            }
        }
        Cograph::from_labels(n, &label).unwrap()
    }

    const P: usize = 0;
    const Q: usize = 1;
    const R: usize = 2;
    const S: usize = 3;
    const T: usize = 4;
    const U: usize = 5;

    #[test]
    fn candidate_one_is_torsion_free() {
        let c = from_equations(6, &[((Q, U), (R, T)), ((P, U), (R, S)), ((P, S), (Q, R)), ((P, T), (Q, S))]);
        let v = classify_sum(&c);
        assert_eq!(v.outcome, SumOutcome::TorsionFree);
        assert_eq!(v.witness.unwrap().scalars().unwrap(), vec![0, 1, 3, 4, 5, 7]);
    }

    #[test]
    fn candidate_two_needs_fifteen() {
        let c = from_equations(6, &[((P, Q), (T, U)), ((P, T), (R, S)), ((P, S), (Q, R)), ((Q, U), (R, T))]);
        let v = classify_sum(&c);
        assert_eq!(v.outcome, SumOutcome::RequiresTorsion);
        assert!(v.torsion_relations.contains(&TorsionRelation { order: 5, coefficients: point_difference(6, P, R) }));
        let w = v.witness.unwrap();
        assert_eq!(w.modulus(), Some(15));
        assert_eq!(w.scalars().unwrap(), vec![0, 1, 3, 4, 7, 9]);
    }

    #[test]
    fn candidate_three_collapses_points() {
        let c = from_equations(6, &[((P, Q), (R, S)), ((P, R), (Q, U)), ((P, T), (S, U)), ((Q, R), (S, T))]);
        let v = classify_sum(&c);
        assert_eq!(v.outcome, SumOutcome::Unsolvable);
        assert!(v.forced_point_equalities.contains(&(P, T)));
        assert!(v.witness.is_none());
    }

    #[test]
    fn candidate_four_forces_three_pairs() {
        let c = from_equations(6, &[((P, Q), (R, S)), ((P, R), (Q, S)), ((Q, R), (T, U)), ((Q, T), (R, U))]);
        let v = classify_sum(&c);
        assert_eq!(v.outcome, SumOutcome::ForcesExtraEdges);
        let mut got = v.forced_edge_equalities.clone();
        got.sort();
        let mut want = vec![((P, T), (S, U)), ((P, U), (S, T)), ((Q, U), (R, T))];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn renormalize_shifts() {
        let w = SumWitness::integers(&[0, 1, 3, 4, 5, 7]);
        let moved = renormalize(&w, 0, &[10]);
        assert_eq!(moved.scalars().unwrap(), vec![10, 11, 13, 14, 15, 17]);
        assert_eq!(moved.pattern(), w.pattern());
        assert_eq!(renormalize(&w, 2, &[3]), w);
        let m = SumWitness::cyclic(15, &[0, 1, 3, 4, 7, 9]);
        let moved = renormalize(&m, 3, &[11]);
        assert!(moved.realizes(&m.pattern()));
    }

    #[test]
    fn universal_witness_realizes_torsion_pattern() {
        let c = from_equations(6, &[((P, Q), (T, U)), ((P, T), (R, S)), ((P, S), (Q, R)), ((Q, U), (R, T))]);
        let a = analyze_sum(&c);
        assert!(universal_witness(&c, &a).realizes(&c));
    }
}
