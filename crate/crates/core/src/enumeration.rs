//! Counting cographs up to isomorphism.
//!
//! Two independent routes: a Burnside count over `S_n × S_N` (point
//! permutations acting on pairs, color permutations acting on `N = C(n,2)`
//! colors), and exhaustive generation of all set partitions of the pairs
//! followed by canonical deduplication.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cograph::{canonical_form, num_pairs, CanonicalKey, Cograph};
use crate::exec::Exec;

/// Largest `n` for which [`enumerate_cographs`] runs without `force`.
pub const ENUMERATION_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("point count must be at least 2, got {0}")]
    TooFewPoints(usize),
    #[error("exhaustive enumeration at n={0} is refused without force (limit {ENUMERATION_LIMIT})")]
    TooLarge(usize),
}

/// A partition of `n` (descending parts) with the number of permutations of
/// that cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    pub parts: Vec<usize>,
    pub weight: BigUint,
}

/// All partitions of `n`, each in descending order, in reverse lexicographic
/// order starting from `[n]`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn multiplicities(parts: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// Size of the centralizer of a permutation with the given cycle type:
/// `Π ℓ^{m_ℓ} · m_ℓ!`.
pub fn centralizer_order(parts: &[usize]) -> BigUint {
    multiplicities(parts)
        .into_iter()
        .fold(BigUint::one(), |acc, (len, m)| acc * BigUint::from(len).pow(m as u32) * factorial(m))
}

pub fn cycle_types(n: usize) -> Vec<CycleType> {
    let total = factorial(n);
    partitions(n)
        .into_iter()
        .map(|parts| {
            let weight = &total / centralizer_order(&parts);
            CycleType { parts, weight }
        })
        .collect()
}

/// Cycle type of the induced permutation on unordered pairs, as
/// `length -> count`.
pub fn pair_cycle_type(point_parts: &[usize]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    let mut add = |len: usize, count: usize| {
        if count > 0 {
            *out.entry(len).or_insert(0) += count;
        }
    };
    for (i, &a) in point_parts.iter().enumerate() {
        if a % 2 == 1 {
            add(a, (a - 1) / 2);
        } else {
            add(a, (a - 2) / 2);
            add(a / 2, 1);
        }
        for &b in &point_parts[i + 1..] {
            add(a.lcm(&b), a.gcd(&b));
        }
    }
    out
}

/// Number of cographs on `n` points up to isomorphism, by exact Burnside
/// counting.
pub fn count_cographs(n: usize) -> Result<BigUint, EnumerationError> {
    count_cographs_with(n, Exec::default())
}

pub fn count_cographs_with(n: usize, exec: Exec) -> Result<BigUint, EnumerationError> {
    if n < 2 {
        return Err(EnumerationError::TooFewPoints(n));
    }
    let pairs = num_pairs(n);
    let point_types: Vec<(BTreeMap<usize, usize>, BigUint)> =
        cycle_types(n).into_iter().map(|t| (pair_cycle_type(&t.parts), t.weight)).collect();
    let color_types = cycle_types(pairs);

    let partial: Vec<BigUint> = exec.map(color_types, |color| {
        let mult = multiplicities(&color.parts);
        // Number of colors fixed by the ℓ-th power of the color permutation.
        let fixed = |len: usize| -> usize { mult.iter().filter(|(&d, _)| len.is_multiple_of(d)).map(|(&d, &m)| d * m).sum() };
        let mut acc = BigUint::zero();
        for (pair_cycles, weight) in &point_types {
            let mut term = weight.clone();
            for (&len, &count) in pair_cycles {
                let f = fixed(len);
                if f == 0 {
                    term = BigUint::zero();
                    break;
                }
                term *= BigUint::from(f).pow(count as u32);
            }
            acc += term;
        }
        acc * color.weight
    });
    let total: BigUint = partial.into_iter().sum();
    let group_order = factorial(n) * factorial(pairs);
    let (count, rem) = total.div_rem(&group_order);
    assert!(rem.is_zero(), "Burnside total not divisible by the group order");
    Ok(count)
}

/// All restricted growth strings of length `len`: `s[0] = 0`,
/// `s[i] <= 1 + max(s[..i])`. These are the set partitions of `len` items.
pub fn restricted_growth_strings(len: usize) -> Vec<Vec<u16>> {
    fn go(cur: &mut Vec<u16>, max: u16, len: usize, out: &mut Vec<Vec<u16>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max + 1 {
            cur.push(v);
            go(cur, max.max(v), len, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut cur = vec![0u16];
    go(&mut cur, 0, len, &mut out);
    out
}

/// Every cograph on `n` points up to isomorphism, as sorted canonical keys.
pub fn enumerate_cographs(n: usize, force: bool) -> Result<Vec<CanonicalKey>, EnumerationError> {
    enumerate_cographs_with(n, force, Exec::default())
}

pub fn enumerate_cographs_with(n: usize, force: bool, exec: Exec) -> Result<Vec<CanonicalKey>, EnumerationError> {
    if n < 2 {
        return Err(EnumerationError::TooFewPoints(n));
    }
    if n > ENUMERATION_LIMIT && !force {
        return Err(EnumerationError::TooLarge(n));
    }
    let strings = restricted_growth_strings(num_pairs(n));
    let mut keys = exec.map(strings, |s| canonical_form(&Cograph::from_labels(n, &s).expect("valid labels")));
    keys.sort_unstable();
    keys.dedup();
    Ok(keys)
}

/// Canonical representatives of every cograph on `n` points.
pub fn cograph_representatives(n: usize, force: bool) -> Result<Vec<Cograph>, EnumerationError> {
    Ok(enumerate_cographs(n, force)?.iter().map(CanonicalKey::to_cograph).collect())
}

/// Rounds to `digits` significant digits, returning `(mantissa, exponent)`
/// so that the value is approximately `mantissa × 10^(exponent − digits + 1)`;
/// for example 1 966 … 7 rounds to `(197, 6)` meaning 1.97×10⁶.
pub fn significant_digits(x: &BigUint, digits: usize) -> (u64, usize) {
    let s = x.to_string();
    let exponent = s.len() - 1;
    if s.len() <= digits {
        let mut m: u64 = s.parse().expect("decimal digits");
        m *= 10u64.pow((digits - s.len()) as u32);
        return (m, exponent);
    }
    let mut m: u64 = s[..digits].parse().expect("decimal digits");
    if s.as_bytes()[digits] >= b'5' {
        m += 1;
    }
    if m == 10u64.pow(digits as u32) {
        return (m / 10, exponent + 1);
    }
    (m, exponent)
}
