//! Concrete representations of abstract cographs, and point recovery from
//! prelabeled edges.

mod inner_product;
mod polynomial;
mod prelabel;

pub use inner_product::{inner_product_represent, VectorRealization};
pub use polynomial::{polynomial_represent, PolynomialRealization, SymmetricPolynomial};
pub use prelabel::{distance_prelabel_points, sum_prelabel_points, DistanceObstruction, SumPrelabelError};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("expected {expected} class values, got {got}")]
    Count { expected: usize, got: usize },
    #[error("classes {0} and {1} were given the same value")]
    Repeated(usize, usize),
    #[error("class {0} needs a positive value")]
    NotPositive(usize),
}

fn check_injective<T: PartialEq>(values: &[T], classes: usize) -> Result<(), ValueError> {
    if values.len() != classes {
        return Err(ValueError::Count { expected: classes, got: values.len() });
    }
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                return Err(ValueError::Repeated(i, j));
            }
        }
    }
    Ok(())
}
