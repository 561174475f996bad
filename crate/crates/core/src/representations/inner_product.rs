use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{check_injective, ValueError};
use crate::cograph::{lex_pairs, Cograph};

/// Halving rounds tried before adding a coordinate.
const MAX_HALVING_ROUNDS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorRealization {
    pub dimension: usize,
    /// Coordinates as exact fractions `p/q`.
    #[serde(serialize_with = "ser_points")]
    pub points: Vec<Vec<BigRational>>,
    #[serde(serialize_with = "ser_values")]
    pub class_values: Vec<BigRational>,
}

fn ser_points<S: serde::Serializer>(p: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = p.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect();
    serde::Serialize::serialize(&text, s)
}

fn ser_values<S: serde::Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    let text: Vec<String> = v.iter().map(ToString::to_string).collect();
    serde::Serialize::serialize(&text, s)
}

impl VectorRealization {
    pub fn dot(&self, i: usize, j: usize) -> BigRational {
        self.points[i].iter().zip(&self.points[j]).fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// All dot products match their class values and the points are distinct.
    pub fn verify(&self, c: &Cograph) -> bool {
        let dots = lex_pairs(c.n()).all(|(i, j)| self.dot(i, j) == self.class_values[c.class_of(i, j)]);
        let distinct = lex_pairs(c.n()).all(|(i, j)| self.points[i] != self.points[j]);
        dots && distinct
    }
}

/// Lower-triangular fill: point `k < n−1` has diagonal entry `diag[k]` and
/// zeros after it, and each entry below the diagonal is chosen so that the
/// dot product with the earlier point matches.
fn triangular(c: &Cograph, values: &[BigRational], diag: &[BigRational]) -> Vec<Vec<BigRational>> {
    let n = c.n();
    let dim = n - 1;
    let mut p = vec![vec![BigRational::zero(); dim]; n];
    for k in 0..n {
        for i in 0..k.min(dim) {
            let mut acc = values[c.class_of(i, k)].clone();
            for j in 0..i {
                acc -= &p[i][j] * &p[k][j];
            }
            p[k][i] = acc / &diag[i];
        }
        if k < dim {
            p[k][k] = diag[k].clone();
        }
    }
    p
}

/// Points in dimension `n−1` whose dot products are the given class values.
/// If the last point collides with an earlier one, that point's diagonal is
/// doubled and the fill repeated; after [`MAX_HALVING_ROUNDS`] an extra
/// coordinate separates the last point instead.
pub fn inner_product_represent(c: &Cograph, class_values: &[BigRational]) -> Result<VectorRealization, ValueError> {
    check_injective(class_values, c.num_classes())?;
    let n = c.n();
    let mut diag = vec![BigRational::one(); n - 1];
    for _ in 0..=MAX_HALVING_ROUNDS {
        let points = triangular(c, class_values, &diag);
        match (0..n - 1).find(|&i| points[i] == points[n - 1]) {
            None => {
                let r = VectorRealization { dimension: n - 1, points, class_values: class_values.to_vec() };
                assert!(r.verify(c), "inner product construction must reproduce the cograph");
                return Ok(r);
            }
            Some(i) => diag[i] *= BigRational::from_integer(BigInt::from(2)),
        }
    }
    let mut points = triangular(c, class_values, &vec![BigRational::one(); n - 1]);
    for (k, p) in points.iter_mut().enumerate() {
        p.push(if k == n - 1 { BigRational::one() } else { BigRational::zero() });
    }
    let r = VectorRealization { dimension: n, points, class_values: class_values.to_vec() };
    assert!(r.verify(c), "inner product construction must reproduce the cograph");
    Ok(r)
}
