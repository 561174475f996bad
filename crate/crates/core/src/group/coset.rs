//! Todd-Coxeter coset enumeration on two generators, and the chain groups
//! `⟨P, Q | P^p, Q^q, (PQ)^n, P²QP⁻²Q⁻¹, PQ²P⁻¹Q⁻²⟩`.

use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

/// Generator columns: `P`, `P⁻¹`, `Q`, `Q⁻¹`. The inverse of column `x` is `x ^ 1`.
pub const GENERATORS: usize = 4;
const NONE: usize = usize::MAX;
const P: usize = 0;
const Q: usize = 2;

fn inverse(x: usize) -> usize {
    x ^ 1
}

pub const DEFAULT_COSET_CAP: usize = 100_000;

/// The coset cap, overridable through `COGRAPH_COSET_CAP`.
pub fn default_coset_cap() -> usize {
    std::env::var("COGRAPH_COSET_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_COSET_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("coset enumeration exceeded {0} live cosets; result inconclusive")]
    CapExceeded(usize),
    #[error("bad relator letter {0:?}; use P, Q and p, q for inverses")]
    BadLetter(char),
    #[error("chain group needs p, q >= 1 and n >= 2 (got {p}, {q}, {n})")]
    Parameters { p: u64, q: u64, n: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Scan every relator from every coset, defining cosets to fill gaps.
    RelatorScan,
    /// Define one coset at a time and chase its consequences immediately.
    Felsch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    /// Chain-group parameters, when the presentation is one.
    pub params: Option<(u64, u64, u64)>,
    pub relators: Vec<Vec<usize>>,
}

impl Presentation {
    pub fn chain_group(p: u64, q: u64, n: u64) -> Result<Self, CosetError> {
        if p == 0 || q == 0 || n < 2 {
            return Err(CosetError::Parameters { p, q, n });
        }
        let rep = |x: usize, k: u64| vec![x; k as usize];
        let pq: Vec<usize> = [P, Q].repeat(n as usize);
        let relators = vec![
            rep(P, p),
            rep(Q, q),
            pq,
            vec![P, P, Q, P ^ 1, P ^ 1, Q ^ 1],
            vec![P, Q, Q, P ^ 1, Q ^ 1, Q ^ 1],
        ];
        Ok(Presentation { params: Some((p, q, n)), relators })
    }

    /// Relators written over `P`, `Q` with lowercase for inverses.
    pub fn from_words(words: &[&str]) -> Result<Self, CosetError> {
        let relators = words.iter().map(|w| parse_word(w)).collect::<Result<_, _>>()?;
        Ok(Presentation { params: None, relators })
    }

    pub fn words(&self) -> Vec<String> {
        self.relators.iter().map(|r| format_word(r)).collect()
    }
}

pub fn parse_word(w: &str) -> Result<Vec<usize>, CosetError> {
    w.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'P' => Ok(P),
            'p' => Ok(P ^ 1),
            'Q' => Ok(Q),
            'q' => Ok(Q ^ 1),
            _ => Err(CosetError::BadLetter(c)),
        })
        .collect()
}

pub fn format_word(w: &[usize]) -> String {
    w.iter().map(|&x| ['P', 'p', 'Q', 'q'][x]).collect()
}

/// A closed coset table; coset 0 is the subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    pub table: Vec<[usize; GENERATORS]>,
    pub subgroup: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.table.len()
    }

    pub fn act(&self, coset: usize, word: &[usize]) -> usize {
        word.iter().fold(coset, |c, &x| self.table[c][x])
    }

    pub fn relators_hold(&self, pres: &Presentation) -> bool {
        (0..self.index()).all(|c| pres.relators.iter().all(|r| self.act(c, r) == c))
            && self.subgroup.iter().all(|w| self.act(0, w) == 0)
    }

    /// Rows `coset: P P⁻¹ Q Q⁻¹`, numbered from 1.
    pub fn render(&self) -> String {
        let mut out = String::from("coset P P^-1 Q Q^-1\n");
        for (c, row) in self.table.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|&d| (d + 1).to_string()).collect();
            out.push_str(&format!("{} {}\n", c + 1, cells.join(" ")));
        }
        out
    }

    /// Shortest word reaching each coset from coset 0, breadth first.
    pub fn transversal(&self) -> Vec<Vec<usize>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.index()];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for x in 0..GENERATORS {
                let d = self.table[c][x];
                if words[d].is_none() {
                    let mut w = words[c].clone().expect("visited");
                    w.push(x);
                    words[d] = Some(w);
                    queue.push_back(d);
                }
            }
        }
        words.into_iter().map(|w| w.expect("table is connected")).collect()
    }
}

struct Enumerator<'a> {
    table: Vec<[usize; GENERATORS]>,
    parent: Vec<usize>,
    live: usize,
    cap: usize,
    felsch: bool,
    deductions: Vec<(usize, usize)>,
    /// For each generator, the cyclic conjugates of relators and their inverses starting with it.
    rotations: Vec<Vec<Vec<usize>>>,
    relators: &'a [Vec<usize>],
}

impl<'a> Enumerator<'a> {
    fn new(relators: &'a [Vec<usize>], cap: usize, felsch: bool) -> Self {
        let mut rotations = vec![Vec::new(); GENERATORS];
        let mut seen = BTreeSet::new();
        for r in relators {
            let inv: Vec<usize> = r.iter().rev().map(|&x| inverse(x)).collect();
            for w in [r, &inv] {
                for k in 0..w.len() {
                    let rot: Vec<usize> = w[k..].iter().chain(&w[..k]).copied().collect();
                    if seen.insert(rot.clone()) {
                        rotations[rot[0]].push(rot);
                    }
                }
            }
        }
        Enumerator { table: vec![[NONE; GENERATORS]], parent: vec![0], live: 1, cap, felsch, deductions: Vec::new(), rotations, relators }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), CosetError> {
        if self.live >= self.cap {
            return Err(CosetError::CapExceeded(self.cap));
        }
        let d = self.table.len();
        self.table.push([NONE; GENERATORS]);
        self.parent.push(d);
        self.live += 1;
        self.table[c][x] = d;
        self.table[d][inverse(x)] = c;
        if self.felsch {
            self.deductions.push((c, x));
        }
        Ok(())
    }

    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c][x] = d;
        self.table[d][inverse(x)] = c;
        if self.felsch {
            self.deductions.push((c, x));
        }
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.live -= 1;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..GENERATORS {
                let f = self.table[e][x];
                if f == NONE {
                    continue;
                }
                self.table[f][inverse(x)] = NONE;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.table[e1][x] != NONE {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][inverse(x)] != NONE {
                    let t = self.table[f1][inverse(x)];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.set(e1, x, f1);
                }
            }
        }
    }

    /// Traces `w` from `c` forwards and backwards. Closes a single-letter gap
    /// by deduction; with `fill`, opens new cosets for longer gaps.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> Result<(), CosetError> {
        let (mut f, mut i) = (c, 0);
        let (mut b, mut j) = (c, w.len());
        loop {
            while i < j && self.table[f][w[i]] != NONE {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.table[b][inverse(w[j - 1])] != NONE {
                b = self.table[b][inverse(w[j - 1])];
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.alive(c) {
                continue;
            }
            for k in 0..self.rotations[x].len() {
                if !self.alive(c) {
                    break;
                }
                let w = self.rotations[x][k].clone();
                self.scan(c, &w, false).expect("scans without fill define nothing");
            }
            let d = self.table[c][x];
            if d == NONE || !self.alive(d) {
                continue;
            }
            let xi = inverse(x);
            for k in 0..self.rotations[xi].len() {
                if !self.alive(d) {
                    break;
                }
                let w = self.rotations[xi][k].clone();
                self.scan(d, &w, false).expect("scans without fill define nothing");
            }
        }
    }

    fn run(&mut self, subgroup: &[Vec<usize>]) -> Result<(), CosetError> {
        for w in subgroup {
            self.scan(0, w, true)?;
            self.process_deductions();
        }
        let mut c = 0;
        while c < self.table.len() {
            if self.felsch {
                for x in 0..GENERATORS {
                    if self.alive(c) && self.table[c][x] == NONE {
                        self.define(c, x)?;
                        self.process_deductions();
                    }
                }
            } else {
                for r in self.relators {
                    if !self.alive(c) {
                        break;
                    }
                    self.scan(c, r, true)?;
                }
                for x in 0..GENERATORS {
                    if self.alive(c) && self.table[c][x] == NONE {
                        self.define(c, x)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn closed(&self) -> bool {
        (0..self.table.len()).filter(|&c| self.alive(c)).all(|c| {
            self.relators.iter().all(|r| {
                let mut f = c;
                for &x in r {
                    f = self.table[f][x];
                    if f == NONE {
                        return false;
                    }
                }
                f == c
            })
        })
    }

    fn compact(mut self, subgroup: &[Vec<usize>]) -> CosetTable {
        let live: Vec<usize> = (0..self.table.len()).filter(|&c| self.alive(c)).collect();
        let mut index = vec![NONE; self.table.len()];
        for (k, &c) in live.iter().enumerate() {
            index[c] = k;
        }
        let table = live
            .iter()
            .map(|&c| {
                let mut row = [NONE; GENERATORS];
                for (x, cell) in row.iter_mut().enumerate() {
                    let d = self.table[c][x];
                    *cell = index[self.rep(d)];
                }
                row
            })
            .collect();
        CosetTable { table, subgroup: subgroup.to_vec() }
    }
}

/// Enumerates cosets of the subgroup generated by `subgroup`. Cosets are
/// defined in scan order, so the result is deterministic.
pub fn todd_coxeter(pres: &Presentation, subgroup: &[Vec<usize>], strategy: Strategy, cap: usize) -> Result<CosetTable, CosetError> {
    let mut e = Enumerator::new(&pres.relators, cap, strategy == Strategy::Felsch);
    e.run(subgroup)?;
    if !e.closed() {
        // A Felsch pass can leave a consequence unchased after a collapse; finish with relator scans.
        e.felsch = false;
        e.run(subgroup)?;
    }
    let table = e.compact(subgroup);
    assert!(table.relators_hold(pres), "closed coset table");
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainOrder {
    pub p_reduced: u64,
    pub q_reduced: u64,
    pub order: u64,
    pub s_order: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
pub enum ChainGroupError {
    #[error("p and q must be even (got {p}, {q})")]
    Odd { p: u64, q: u64 },
    #[error("n must be at least 2")]
    SmallN,
    #[error("excluded case p' = q' = {p_reduced} (2 mod 4) with n = 2")]
    Excluded { p_reduced: u64 },
}

pub fn chain_group_order(p: u64, q: u64, n: u64) -> Result<ChainOrder, ChainGroupError> {
    if p % 2 == 1 || q % 2 == 1 || p == 0 || q == 0 {
        return Err(ChainGroupError::Odd { p, q });
    }
    if n < 2 {
        return Err(ChainGroupError::SmallN);
    }
    let p_reduced = p.gcd(&q.lcm(&(2 * n)));
    let q_reduced = q.gcd(&p.lcm(&(2 * n)));
    if p_reduced == q_reduced && p_reduced % 4 == 2 && n == 2 {
        return Err(ChainGroupError::Excluded { p_reduced });
    }
    let s_order = p_reduced * q_reduced.gcd(&(2 * n)) / 4;
    Ok(ChainOrder { p_reduced, q_reduced, order: s_order * 2 * n, s_order })
}

/// The group enumerated over the trivial subgroup, acting on itself.
struct Regular {
    table: CosetTable,
    words: Vec<Vec<usize>>,
}

impl Regular {
    fn element(&self, word: &[usize]) -> usize {
        self.table.act(0, word)
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.table.act(x, &self.words[y])
    }

    fn pow(&self, x: usize, k: u64) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    fn order_of(&self, x: usize) -> u64 {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStructureReport {
    pub p: u64,
    pub q: u64,
    pub n: u64,
    /// Cosets of `⟨P⟩`.
    pub index: usize,
    pub order: u64,
    pub p_order: u64,
    pub s_order: u64,
    pub s_central: bool,
    pub quotient_order: u64,
    /// Order of `PQ` modulo `S`.
    pub pq_order_mod_s: u64,
    pub p_squared_on_cosets_trivial: bool,
    pub p2n_q2n_trivial: bool,
    pub p2_q2_trivial: bool,
    pub commute: bool,
    pub formula: Option<ChainOrder>,
    pub excluded: bool,
}

impl ChainStructureReport {
    /// Whether the enumeration agrees with the order formula and the central
    /// extension structure; in the excluded case, whether the group collapses.
    pub fn consistent(&self) -> bool {
        if self.excluded {
            return self.commute && self.p2_q2_trivial;
        }
        let Some(f) = self.formula else { return false };
        f.order == self.order
            && f.s_order == self.s_order
            && self.index as u64 * self.p_order == self.order
            && self.p_order == f.p_reduced
            && self.s_central
            && self.quotient_order == 2 * self.n
            && self.pq_order_mod_s == self.n
            && self.p_squared_on_cosets_trivial
            && self.p2n_q2n_trivial
            && !self.commute
    }
}

pub fn verify_chain_group_structure(p: u64, q: u64, n: u64, strategy: Strategy, cap: usize) -> Result<ChainStructureReport, CosetError> {
    let pres = Presentation::chain_group(p, q, n)?;
    let over_p = todd_coxeter(&pres, &[vec![P]], strategy, cap)?;
    let full = todd_coxeter(&pres, &[], strategy, cap)?;
    let order = full.index() as u64;
    let words = full.transversal();
    let g = Regular { table: full, words };
    let (pe, qe) = (g.element(&[P]), g.element(&[Q]));
    let p_order = g.order_of(pe);
    assert_eq!(order % p_order, 0);
    assert_eq!(over_p.index() as u64, order / p_order, "index times subgroup order");
    let (p2, q2) = (g.mul(pe, pe), g.mul(qe, qe));
    let s = g.closure(&[p2, q2]);
    let s_central = s.iter().all(|&x| g.mul(x, pe) == g.mul(pe, x) && g.mul(x, qe) == g.mul(qe, x));
    let pq = g.mul(pe, qe);
    let mut pq_order_mod_s = 1;
    let mut y = pq;
    while !s.contains(&y) {
        y = g.mul(y, pq);
        pq_order_mod_s += 1;
    }
    let p_squared_on_cosets_trivial = (0..over_p.index()).all(|c| over_p.act(c, &[P, P]) == c);
    let formula = chain_group_order(p, q, n);
    Ok(ChainStructureReport {
        p,
        q,
        n,
        index: over_p.index(),
        order,
        p_order,
        s_order: s.len() as u64,
        s_central,
        quotient_order: order / s.len() as u64,
        pq_order_mod_s,
        p_squared_on_cosets_trivial,
        p2n_q2n_trivial: g.mul(g.pow(pe, 2 * n), g.pow(qe, 2 * n)) == 0,
        p2_q2_trivial: g.mul(p2, q2) == 0,
        commute: pq == g.mul(qe, pe),
        formula: formula.ok(),
        excluded: matches!(formula, Err(ChainGroupError::Excluded { .. })),
    })
}
