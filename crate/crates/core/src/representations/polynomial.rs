use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{check_injective, ValueError};
use crate::cograph::{lex_pairs, Cograph};

/// Integer polynomial in `x, y`; `coeffs[a][b]` multiplies `x^a y^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    coeffs: Vec<Vec<BigInt>>,
}

impl SymmetricPolynomial {
    fn constant(c: BigInt) -> Self {
        SymmetricPolynomial { coeffs: vec![vec![c]] }
    }

    pub fn degree(&self) -> usize {
        let mut d = 0;
        for (a, row) in self.coeffs.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    d = d.max(a + b);
                }
            }
        }
        d
    }

    pub fn coefficient(&self, a: usize, b: usize) -> BigInt {
        self.coeffs.get(a).and_then(|r| r.get(b)).cloned().unwrap_or_default()
    }

    fn size(&self) -> usize {
        self.coeffs.len()
    }

    fn mul(&self, other: &SymmetricPolynomial) -> SymmetricPolynomial {
        let size = self.size() + other.size() - 1;
        let mut out = vec![vec![BigInt::zero(); size]; size];
        for (a, row) in self.coeffs.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (a2, row2) in other.coeffs.iter().enumerate() {
                    for (b2, c2) in row2.iter().enumerate() {
                        if !c2.is_zero() {
                            out[a + a2][b + b2] += c * c2;
                        }
                    }
                }
            }
        }
        SymmetricPolynomial { coeffs: out }
    }

    fn add_scaled(&mut self, other: &SymmetricPolynomial, k: &BigInt) {
        let size = self.size().max(other.size());
        for row in &mut self.coeffs {
            row.resize(size, BigInt::zero());
        }
        self.coeffs.resize(size, vec![BigInt::zero(); size]);
        for (a, row) in other.coeffs.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                self.coeffs[a][b] += c * k;
            }
        }
    }

    /// `(x − s)² + (y − t)²`.
    fn disc(s: i64, t: i64) -> SymmetricPolynomial {
        let (s, t) = (BigInt::from(s), BigInt::from(t));
        let mut c = vec![vec![BigInt::zero(); 3]; 3];
        c[0][0] = &s * &s + &t * &t;
        c[1][0] = BigInt::from(-2) * &s;
        c[0][1] = BigInt::from(-2) * &t;
        c[2][0] = BigInt::one();
        c[0][2] = BigInt::one();
        SymmetricPolynomial { coeffs: c }
    }

    pub fn eval(&self, x: i64, y: i64) -> BigInt {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        let mut total = BigInt::zero();
        let mut xp = BigInt::one();
        for row in &self.coeffs {
            let mut term = BigInt::zero();
            let mut yp = BigInt::one();
            for c in row {
                term += c * &yp;
                yp *= &y;
            }
            total += term * &xp;
            xp *= &x;
        }
        total
    }

    /// `f(x, y) − f(y, x)` vanishes coefficientwise.
    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.coefficient(a, b) == self.coefficient(b, a)))
    }

    /// Nonzero terms `(a, b, coefficient)` of `x^a y^b`, by degree in `x`.
    pub fn terms(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (a, row) in self.coeffs.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((a, b, c.clone()));
                }
            }
        }
        out
    }
}

impl Serialize for SymmetricPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<(usize, usize, String)> = self.terms().into_iter().map(|(a, b, c)| (a, b, c.to_string())).collect();
        terms.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialRealization {
    pub polynomial: SymmetricPolynomial,
    /// Common multiplier that cleared the denominators.
    #[serde(serialize_with = "ser_big")]
    pub scale: BigInt,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Product over every other pair `{s,t}` of the two discs centred at
/// `(s,t)` and `(t,s)`: nonzero at `(i,j)` and `(j,i)`, zero at every other
/// pair of point labels.
fn bump(n: usize, i: usize, j: usize) -> SymmetricPolynomial {
    let mut f = SymmetricPolynomial::constant(BigInt::one());
    for (s, t) in lex_pairs(n) {
        if (s, t) != (i, j) {
            let (s, t) = (s as i64 + 1, t as i64 + 1);
            f = f.mul(&SymmetricPolynomial::disc(s, t)).mul(&SymmetricPolynomial::disc(t, s));
        }
    }
    f
}

/// A symmetric `f` with `f(i, j) = scale · value(class of {i,j})` for the
/// point labels `1..=n`.
pub fn polynomial_represent(c: &Cograph, class_values: &[BigInt]) -> Result<PolynomialRealization, ValueError> {
    check_injective(class_values, c.num_classes())?;
    if let Some(k) = class_values.iter().position(|v| !v.is_positive()) {
        return Err(ValueError::NotPositive(k));
    }
    let n = c.n();
    let parts: Vec<(SymmetricPolynomial, BigRational)> = lex_pairs(n)
        .map(|(i, j)| {
            let f = bump(n, i, j);
            let at = f.eval(i as i64 + 1, j as i64 + 1);
            let coeff = BigRational::new(class_values[c.class_of(i, j)].clone(), at);
            (f, coeff)
        })
        .collect();
    let scale = parts.iter().fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
    let mut polynomial = SymmetricPolynomial::constant(BigInt::zero());
    for (f, q) in &parts {
        let k = q.numer() * (&scale / q.denom());
        polynomial.add_scaled(f, &k);
    }
    let r = PolynomialRealization { polynomial, scale };
    for (i, j) in lex_pairs(n) {
        let want = &r.scale * &class_values[c.class_of(i, j)];
        let (x, y) = (i as i64 + 1, j as i64 + 1);
        assert_eq!(r.polynomial.eval(x, y), want, "polynomial must interpolate every pair");
        assert_eq!(r.polynomial.eval(y, x), want, "polynomial must be symmetric on every pair");
    }
    assert!(r.polynomial.is_symmetric());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_points_constant() {
        let c = Cograph::all_distinct(2).unwrap();
        let r = polynomial_represent(&c, &ints(&[5])).unwrap();
        assert_eq!(r.polynomial.degree(), 0);
        assert_eq!(r.polynomial.eval(1, 2) / &r.scale, BigInt::from(5));
    }

    #[test]
    fn three_points() {
        let c = Cograph::all_distinct(3).unwrap();
        let r = polynomial_represent(&c, &ints(&[1, 2, 3])).unwrap();
        let k = r.scale.clone();
        assert_eq!(r.polynomial.eval(1, 2), &k * 1);
        assert_eq!(r.polynomial.eval(1, 3), &k * 2);
        assert_eq!(r.polynomial.eval(2, 3), &k * 3);
        assert!(r.polynomial.degree() <= 8);
        assert!(r.polynomial.is_symmetric());
    }

    #[test]
    fn rejects_nonpositive() {
        let c = Cograph::all_distinct(2).unwrap();
        assert_eq!(polynomial_represent(&c, &ints(&[0])), Err(ValueError::NotPositive(0)));
    }
}
