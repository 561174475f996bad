//! Group cographs: the edge between `P` and `Q` is the unordered pair
//! `{PQ, QP}`. Ladders and chains of repeated edges, and chain groups.

mod coset;

pub use coset::{
    chain_group_order, default_coset_cap, format_word, parse_word, todd_coxeter, DEFAULT_COSET_CAP, GENERATORS, verify_chain_group_structure, ChainGroupError, ChainOrder,
    ChainStructureReport, CosetError, CosetTable, Presentation, Strategy,
};

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::cograph::Cograph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("no element named {0:?}")]
    UnknownElement(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("element {0} does not commute with QP")]
    NotCentralizing(usize),
    #[error("group has {0} elements; group cographs support 2..=64")]
    Size(usize),
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from elements and a product closure. Associativity is
    /// checked on every triple (all groups here have at most 64 elements).
    pub fn from_fn<T: Clone + Ord>(name: &str, elems: Vec<T>, label: impl Fn(&T) -> String, mul: impl Fn(&T, &T) -> T) -> Self {
        let index: BTreeMap<T, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let table: Vec<Vec<usize>> = elems.iter().map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect()).collect();
        let k = elems.len();
        let identity = (0..k).find(|&e| (0..k).all(|x| table[e][x] == x && table[x][e] == x)).expect("group has an identity");
        let inverse = (0..k).map(|x| (0..k).find(|&y| table[x][y] == identity).expect("every element has an inverse")).collect();
        let g = FiniteGroup { name: name.to_string(), names: elems.iter().map(label).collect(), table, identity, inverse };
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "associativity in {name}");
                }
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.commute(a, b)))
    }

    pub fn element(&self, name: &str) -> Result<usize, GroupError> {
        self.names.iter().position(|n| n == name).ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    /// Unordered pair `{PQ, QP}`.
    pub fn edge(&self, p: usize, q: usize) -> (usize, usize) {
        let (a, b) = (self.mul(p, q), self.mul(q, p));
        (a.min(b), a.max(b))
    }

    pub fn cyclic(n: usize) -> Self {
        FiniteGroup::from_fn(&format!("Z{n}"), (0..n).collect(), |k| k.to_string(), |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`: `r^k` and `r^k s` with `s r = r^{−1} s`.
    pub fn dihedral(n: usize) -> Self {
        let elems: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..n).map(move |k| (e, k))).collect();
        FiniteGroup::from_fn(
            &format!("D{n}"),
            elems,
            |&(e, k)| if e == 0 { format!("r{k}") } else { format!("r{k}s") },
            |&(e1, k1), &(e2, k2)| if e1 == 0 { (e2, (k1 + k2) % n) } else { (e1 ^ e2, (k1 + n - k2) % n) },
        )
    }

    /// Dicyclic group of order `4m`: `a^{2m} = 1`, `b² = a^m`, `b a = a^{−1} b`.
    pub fn dicyclic(m: usize) -> Self {
        let t = 2 * m;
        let elems: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..t).map(move |k| (e, k))).collect();
        FiniteGroup::from_fn(
            &format!("Q{}", 4 * m),
            elems,
            |&(e, k)| if e == 0 { format!("a{k}") } else { format!("a{k}b") },
            |&(e1, k1), &(e2, k2)| match (e1, e2) {
                (0, _) => (e2, (k1 + k2) % t),
                (_, 0) => (1, (k1 + t - k2) % t),
                _ => (0, (k1 + t - k2 + m) % t),
            },
        )
    }

    /// Quaternion units `±1, ±i, ±j, ±k`.
    pub fn quaternion() -> Self {
        // Unit products: (sign, unit) for units 1, i, j, k.
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let elems: Vec<(bool, usize)> = (0..4).flat_map(|u| [(false, u), (true, u)]).collect();
        FiniteGroup::from_fn(
            "Q8",
            elems,
            |&(neg, u)| format!("{}{}", if neg { "-" } else { "" }, ["1", "i", "j", "k"][u]),
            |&(s1, u1), &(s2, u2)| {
                let (s, u) = UNIT[u1][u2];
                (s1 ^ s2 ^ s, u)
            },
        )
    }

    /// Symmetric group on three letters, as permutations.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        FiniteGroup::from_fn("S3", perms, |p| format!("{}{}{}", p[0], p[1], p[2]), |a, b| [b[a[0]], b[a[1]], b[a[2]]])
    }

    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let elems: Vec<(usize, usize)> = (0..g.order()).flat_map(|a| (0..h.order()).map(move |b| (a, b))).collect();
        FiniteGroup::from_fn(
            &format!("{}x{}", g.name, h.name),
            elems,
            |&(a, b)| format!("({},{})", g.names[a], h.names[b]),
            |&(a1, b1), &(a2, b2)| (g.mul(a1, a2), h.mul(b1, b2)),
        )
    }

    /// Parses `Zn`, `Dn`, `Q8`, `Q16`, `S3` and products such as `Z2xD4`.
    pub fn by_name(name: &str) -> Result<Self, GroupError> {
        let parts: Vec<&str> = name.split('x').collect();
        let mut groups = parts.iter().map(|p| Self::single(p)).collect::<Result<Vec<_>, _>>()?;
        let first = groups.remove(0);
        Ok(groups.iter().fold(first, |acc, g| FiniteGroup::product(&acc, g)))
    }

    fn single(name: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::UnknownGroup(name.to_string());
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        match name {
            "Q8" => Ok(Self::quaternion()),
            "S3" => Ok(Self::symmetric3()),
            _ if name.starts_with('Q') => {
                let k = num(&name[1..])?;
                if k >= 8 && k % 4 == 0 && k <= 64 {
                    Ok(Self::dicyclic(k / 4))
                } else {
                    Err(bad())
                }
            }
            _ if name.starts_with('Z') => Ok(Self::cyclic(num(&name[1..]).and_then(|k| if (1..=64).contains(&k) { Ok(k) } else { Err(bad()) })?)),
            _ if name.starts_with('D') => Ok(Self::dihedral(num(&name[1..]).and_then(|k| if (2..=32).contains(&k) { Ok(k) } else { Err(bad()) })?)),
            _ => Err(bad()),
        }
    }

    /// Built-in groups used for chain scans.
    pub fn catalogue() -> Vec<FiniteGroup> {
        let mut out: Vec<FiniteGroup> = (2..=8).map(FiniteGroup::dihedral).collect();
        out.push(FiniteGroup::quaternion());
        out.push(FiniteGroup::dicyclic(3));
        out.push(FiniteGroup::dicyclic(4));
        out.push(FiniteGroup::symmetric3());
        out.push(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::dihedral(4)));
        out.push(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::quaternion()));
        out.push(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::dihedral(3)));
        out.push(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4)));
        out
    }
}

pub fn group_cograph(g: &FiniteGroup) -> Result<Cograph, GroupError> {
    if !(2..=64).contains(&g.order()) {
        return Err(GroupError::Size(g.order()));
    }
    Ok(Cograph::from_fn(g.order(), |p, q| g.edge(p, q)).expect("size checked"))
}

/// Rungs `(P X^k, X^{−k} Q)` for `k` in `range`, after checking that `X`
/// centralizes `QP`. Every rung and every diagonal `(P_k, Q_m)` is checked.
pub fn ladder(g: &FiniteGroup, p: usize, q: usize, x: usize, range: std::ops::RangeInclusive<i64>) -> Result<Vec<(usize, usize)>, GroupError> {
    if !g.commute(x, g.mul(q, p)) {
        return Err(GroupError::NotCentralizing(x));
    }
    let rung = |k: i64| (g.mul(p, g.pow(x, k)), g.mul(g.pow(x, -k), q));
    let rungs: Vec<(usize, usize)> = range.clone().map(rung).collect();
    for k in range.clone() {
        let (pk, qk) = rung(k);
        assert_eq!(g.edge(pk, qk), g.edge(p, q), "ladder rung {k}");
        for m in range.clone() {
            let (_, qm) = rung(m);
            let (_, qd) = rung(m - k);
            assert_eq!(g.edge(pk, qm), g.edge(p, qd), "diagonal ladder ({k},{m})");
        }
    }
    Ok(rungs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
pub enum ChainError {
    #[error("P and Q commute")]
    Commute,
    #[error("P does not commute with Q²")]
    PWithQSquared,
    #[error("Q does not commute with P²")]
    QWithPSquared,
}

pub fn chain_conditions(g: &FiniteGroup, p: usize, q: usize) -> Result<(), ChainError> {
    if g.commute(p, q) {
        return Err(ChainError::Commute);
    }
    if !g.commute(p, g.mul(q, q)) {
        return Err(ChainError::PWithQSquared);
    }
    if !g.commute(q, g.mul(p, p)) {
        return Err(ChainError::QWithPSquared);
    }
    Ok(())
}

/// `P_0 … P_k` by conjugation with `A = PQ`. Checks that consecutive terms
/// repeat the first edge, that squares alternate between `P²` and `Q²`, and
/// that each next term is the only one extending the chain.
pub fn chain_extend(g: &FiniteGroup, p: usize, q: usize, k: usize) -> Result<Vec<usize>, ChainError> {
    chain_conditions(g, p, q)?;
    let a = g.mul(p, q);
    let term = |i: usize| {
        let h = (i / 2) as i64;
        let base = if i.is_multiple_of(2) { p } else { q };
        g.mul(g.mul(g.pow(a, -h), base), g.pow(a, h))
    };
    let terms: Vec<usize> = (0..=k).map(term).collect();
    let e = g.edge(p, q);
    for i in 0..k {
        assert_eq!(g.edge(terms[i], terms[i + 1]), e, "chain edge {i}");
        assert_ne!(terms[i], terms[i + 1]);
        if i + 2 <= k {
            assert_ne!(terms[i], terms[i + 2]);
        }
        let square = if i % 2 == 0 { g.mul(p, p) } else { g.mul(q, q) };
        assert_eq!(g.mul(terms[i], terms[i]), square, "alternating squares at {i}");
    }
    for i in 1..k {
        let (prev, cur) = (terms[i - 1], terms[i]);
        let next: Vec<usize> = (0..g.order()).filter(|&r| r != prev && g.edge(cur, r) == g.edge(prev, cur)).collect();
        assert_eq!(next, vec![terms[i + 1]], "chains do not branch");
    }
    Ok(terms)
}

/// Least `k ≥ 3` with `PQP… = QPQ…` (`k` factors each), up to `max_k`.
pub fn chain_cycle_length(g: &FiniteGroup, p: usize, q: usize, max_k: usize) -> Option<usize> {
    let (mut left, mut right) = (p, q);
    for k in 2..=max_k {
        let (lf, rf) = if k % 2 == 0 { (q, p) } else { (p, q) };
        left = g.mul(left, lf);
        right = g.mul(right, rf);
        if k >= 3 && left == right {
            return Some(k);
        }
    }
    None
}

/// Period of a chain: least `m` with `(P_m, P_{m+1}) = (P, Q)`, found by
/// following the recurrence `P_{i+1} = A^{−1} P_{i−1} A`.
pub fn chain_period(g: &FiniteGroup, p: usize, q: usize) -> Option<usize> {
    chain_conditions(g, p, q).ok()?;
    let (a, ai) = (g.mul(p, q), g.inv(g.mul(p, q)));
    let (mut prev, mut cur) = (p, q);
    for m in 1..=2 * g.order() + 2 {
        let next = g.mul(g.mul(ai, prev), a);
        (prev, cur) = (cur, next);
        if (prev, cur) == (p, q) {
            return Some(m);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainPair {
    pub p: usize,
    pub q: usize,
    pub cycle_length: Option<usize>,
}

/// Ordered pairs satisfying the chain conditions.
pub fn chain_pairs(g: &FiniteGroup) -> Vec<ChainPair> {
    let k = g.order();
    (0..k)
        .flat_map(|p| (0..k).map(move |q| (p, q)))
        .filter(|&(p, q)| chain_conditions(g, p, q).is_ok())
        .map(|(p, q)| ChainPair { p, q, cycle_length: chain_cycle_length(g, p, q, 2 * k + 2) })
        .collect()
}
