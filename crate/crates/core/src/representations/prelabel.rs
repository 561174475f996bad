use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cograph::{lex_pairs, num_pairs, pair_index};
use crate::sum::{AbelianGroup, SumWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SumPrelabelError {
    #[error("expected {expected} edge values, got {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error("condition (a): point {point} meets the same edge value towards {ends:?}")]
    RepeatedIncident { point: usize, ends: (usize, usize) },
    #[error("condition (b): triangle {0:?} has a + b − c not divisible by 2")]
    OddTriangle([usize; 3]),
    #[error("condition (c): quadrilateral {0:?} has a + c ≠ b + d")]
    Quadrilateral([usize; 4]),
    #[error("no choice of halves reproduces the edges")]
    NoConsistentHalf,
}

fn edge(edges: &[Vec<i128>], i: usize, j: usize) -> &[i128] {
    &edges[pair_index(i.min(j), i.max(j))]
}

/// Every `y` with `2y = x`, coordinatewise; empty if none exists.
fn halves(group: &AbelianGroup, x: &[i128]) -> Vec<Vec<i128>> {
    let mut out = vec![Vec::new()];
    for (&v, &m) in x.iter().zip(&group.moduli) {
        let options: Vec<i128> = if m == 0 {
            if v % 2 == 0 {
                vec![v / 2]
            } else {
                vec![]
            }
        } else if m % 2 == 1 {
            vec![(v * (m + 1) / 2).rem_euclid(m)]
        } else if v.rem_euclid(2) == 0 {
            let h = v.rem_euclid(m) / 2;
            vec![h, h + m / 2]
        } else {
            vec![]
        };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i128>| {
                options.iter().map(move |&o| {
                    let mut p = prefix.clone();
                    p.push(o);
                    p
                })
            })
            .collect();
    }
    out
}

/// Recovers point values from edge values (in pair order) so that every
/// edge is the sum of its endpoints.
pub fn sum_prelabel_points(group: &AbelianGroup, edges: &[Vec<i128>], n: usize) -> Result<SumWitness, SumPrelabelError> {
    if edges.len() != num_pairs(n) {
        return Err(SumPrelabelError::EdgeCount { expected: num_pairs(n), got: edges.len() });
    }
    let norm = |v: &[i128]| {
        let mut v = v.to_vec();
        group.reduce(&mut v);
        v
    };
    let edges: Vec<Vec<i128>> = edges.iter().map(|e| norm(e)).collect();
    for p in 0..n {
        for q in 0..n {
            for r in q + 1..n {
                if p != q && p != r && edge(&edges, p, q) == edge(&edges, p, r) {
                    return Err(SumPrelabelError::RepeatedIncident { point: p, ends: (q, r) });
                }
            }
        }
    }
    for (a, b) in lex_pairs(n) {
        for d in b + 1..n {
            let s = group.sub(&group.add(edge(&edges, a, b), edge(&edges, a, d)), edge(&edges, b, d));
            if halves(group, &s).is_empty() {
                return Err(SumPrelabelError::OddTriangle([a, b, d]));
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for f in d + 1..n {
                    for [p, q, r, s] in [[a, b, d, f], [a, b, f, d], [a, d, b, f]] {
                        let lhs = group.add(edge(&edges, p, q), edge(&edges, r, s));
                        let rhs = group.add(edge(&edges, q, r), edge(&edges, s, p));
                        if lhs != rhs {
                            return Err(SumPrelabelError::Quadrilateral([p, q, r, s]));
                        }
                    }
                }
            }
        }
    }
    let candidates = if n == 2 {
        vec![vec![0; group.rank()]]
    } else {
        halves(group, &group.sub(&group.add(edge(&edges, 0, 1), edge(&edges, 0, 2)), edge(&edges, 1, 2)))
    };
    for first in candidates {
        let mut values = vec![first.clone()];
        values.extend((1..n).map(|x| group.sub(edge(&edges, 0, x), &first)));
        let ok = lex_pairs(n).all(|(i, j)| group.add(&values[i], &values[j]) == edges[pair_index(i, j)]);
        if ok {
            return Ok(SumWitness { group: group.clone(), values });
        }
    }
    Err(SumPrelabelError::NoConsistentHalf)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceObstruction {
    #[error("expected {expected} edge values, got {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error("edge of pair {0:?} is not positive")]
    NotPositive((usize, usize)),
    #[error("triangle {0:?}: no edge is the sum of the other two")]
    Triangle([usize; 3]),
    #[error("not realizable on the line: pair {0:?} disagrees with the reconstruction")]
    NotRealizable((usize, usize)),
}

/// Recovers points on the line: the first pair with the largest edge gives
/// the origin, and every other point sits at its distance from it.
pub fn distance_prelabel_points(edges: &[BigRational], n: usize) -> Result<Vec<BigRational>, DistanceObstruction> {
    if edges.len() != num_pairs(n) {
        return Err(DistanceObstruction::EdgeCount { expected: num_pairs(n), got: edges.len() });
    }
    let e = |i: usize, j: usize| &edges[pair_index(i.min(j), i.max(j))];
    if let Some(p) = lex_pairs(n).find(|&(i, j)| !e(i, j).is_positive()) {
        return Err(DistanceObstruction::NotPositive(p));
    }
    for (a, b) in lex_pairs(n) {
        for d in b + 1..n {
            let (x, y, z) = (e(a, b), e(b, d), e(a, d));
            if *x != y + z && *y != x + z && *z != x + y {
                return Err(DistanceObstruction::Triangle([a, b, d]));
            }
        }
    }
    let (origin, _) = lex_pairs(n).fold((0, BigRational::zero()), |best, (i, j)| if *e(i, j) > best.1 { (i, e(i, j).clone()) } else { best });
    let values: Vec<BigRational> = (0..n).map(|x| if x == origin { BigRational::zero() } else { e(origin, x).clone() }).collect();
    for (i, j) in lex_pairs(n) {
        if (&values[i] - &values[j]).abs() != *e(i, j) {
            return Err(DistanceObstruction::NotRealizable((i, j)));
        }
    }
    Ok(values)
}
