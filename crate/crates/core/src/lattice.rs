//! Integer row lattices via Smith normal form.
//!
//! For an integer matrix `A` (rows = relations, columns = unknowns) the
//! decomposition `U·A·V = D` with unimodular `U`, `V` answers three questions
//! about a target row vector `v`:
//! whether `v` is an integer combination of the rows, whether it is a rational
//! combination, and the least `d > 0` with `d·v` an integer combination.
//! The quotient `ℤ^k / rowspace(A)` is `⊕ ℤ/d_i ⊕ ℤ^(k − rank)`.

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("integer overflow during Smith normal form reduction")]
    Overflow,
    #[error("row has {got} entries, expected {expected}")]
    Width { expected: usize, got: usize },
}

type Mat = Vec<Vec<i128>>;

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

fn add_row(m: &mut Mat, dst: usize, src: usize, q: i128) -> Result<(), LatticeError> {
    if q == 0 {
        return Ok(());
    }
    for c in 0..m[dst].len() {
        let delta = m[src][c].checked_mul(q).ok_or(LatticeError::Overflow)?;
        m[dst][c] = m[dst][c].checked_add(delta).ok_or(LatticeError::Overflow)?;
    }
    Ok(())
}

fn add_col(m: &mut Mat, dst: usize, src: usize, q: i128) -> Result<(), LatticeError> {
    if q == 0 {
        return Ok(());
    }
    for row in m.iter_mut() {
        let delta = row[src].checked_mul(q).ok_or(LatticeError::Overflow)?;
        row[dst] = row[dst].checked_add(delta).ok_or(LatticeError::Overflow)?;
    }
    Ok(())
}

fn swap_cols(m: &mut Mat, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

pub fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Result<Mat, LatticeError> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).try_fold(0i128, |acc, k| {
                        row[k].checked_mul(b[k][j]).and_then(|p| acc.checked_add(p)).ok_or(LatticeError::Overflow)
                    })
                })
                .collect()
        })
        .collect()
}

/// `U·A·V = D` with `D` diagonal, nonnegative and `d_1 | d_2 | ...`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    /// Nonzero diagonal entries in order; `diagonal.len()` is the rank.
    pub diagonal: Vec<i128>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The full `rows × cols` diagonal matrix.
    pub fn d_matrix(&self) -> Mat {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (i, &x) in self.diagonal.iter().enumerate() {
            d[i][i] = x;
        }
        d
    }
}

/// Computes the Smith normal form of a `rows × cols` integer matrix.
pub fn smith_normal_form(a: &[Vec<i128>], cols: usize) -> Result<SmithForm, LatticeError> {
    let rows = a.len();
    for r in a {
        if r.len() != cols {
            return Err(LatticeError::Width { expected: cols, got: r.len() });
        }
    }
    let mut m: Mat = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].unsigned_abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut m, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            let p = m[t][t];
            for i in t + 1..rows {
                let q = m[i][t] / p;
                add_row(&mut m, i, t, -q)?;
                add_row(&mut u, i, t, -q)?;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                add_col(&mut m, j, t, -q)?;
                add_col(&mut v, j, t, -q)?;
            }
            let col_rest = (t + 1..rows).filter(|&i| m[i][t] != 0).min_by_key(|&i| m[i][t].unsigned_abs());
            let row_rest = (t + 1..cols).filter(|&j| m[t][j] != 0).min_by_key(|&j| m[t][j].unsigned_abs());
            if let Some(i) = col_rest {
                m.swap(t, i);
                u.swap(t, i);
                continue;
            }
            if let Some(j) = row_rest {
                swap_cols(&mut m, t, j);
                swap_cols(&mut v, t, j);
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    add_row(&mut m, t, i, 1)?;
                    add_row(&mut u, t, i, 1)?;
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for x in m[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        diagonal.push(m[t][t]);
    }
    Ok(SmithForm { rows, cols, u, v, diagonal })
}

/// Where a target vector sits relative to a row lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// An integer combination of the rows.
    Lattice,
    /// `d·v` is an integer combination for this least `d > 1`.
    Torsion(i128),
    /// Not even a rational combination of the rows.
    Outside,
}

/// The lattice spanned over ℤ by the rows of an integer matrix.
#[derive(Debug, Clone)]
pub struct RowLattice {
    rows: Vec<Vec<i128>>,
    snf: SmithForm,
}

impl RowLattice {
    pub fn new(rows: Vec<Vec<i128>>, cols: usize) -> Result<Self, LatticeError> {
        let snf = smith_normal_form(&rows, cols)?;
        Ok(RowLattice { rows, snf })
    }

    pub fn rows(&self) -> &[Vec<i128>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.snf.cols
    }

    pub fn smith(&self) -> &SmithForm {
        &self.snf
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    /// Invariant factors greater than 1: the torsion of the quotient.
    pub fn torsion_factors(&self) -> Vec<i128> {
        self.snf.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }

    /// `v·V`, the target in Smith coordinates.
    fn transformed(&self, v: &[i128]) -> Result<Vec<i128>, LatticeError> {
        if v.len() != self.snf.cols {
            return Err(LatticeError::Width { expected: self.snf.cols, got: v.len() });
        }
        Ok(mat_mul(&[v.to_vec()], &self.snf.v)?.remove(0))
    }

    pub fn membership(&self, v: &[i128]) -> Result<Membership, LatticeError> {
        let w = self.transformed(v)?;
        let rank = self.rank();
        if w[rank..].iter().any(|&x| x != 0) {
            return Ok(Membership::Outside);
        }
        let mut d: i128 = 1;
        for (i, &di) in self.snf.diagonal.iter().enumerate() {
            d = d.lcm(&(di / di.gcd(&w[i])));
        }
        Ok(if d == 1 { Membership::Lattice } else { Membership::Torsion(d) })
    }

    pub fn contains(&self, v: &[i128]) -> Result<bool, LatticeError> {
        Ok(self.membership(v)? == Membership::Lattice)
    }

    /// Integer coefficients `y` with `Σ y_i·row_i = v`, when they exist.
    pub fn coefficients(&self, v: &[i128]) -> Result<Option<Vec<i128>>, LatticeError> {
        let w = self.transformed(v)?;
        let rank = self.rank();
        if w[rank..].iter().any(|&x| x != 0) {
            return Ok(None);
        }
        let mut z = vec![0i128; self.snf.rows];
        for (i, &di) in self.snf.diagonal.iter().enumerate() {
            if w[i] % di != 0 {
                return Ok(None);
            }
            z[i] = w[i] / di;
        }
        if self.snf.rows == 0 {
            return Ok(Some(Vec::new()));
        }
        Ok(Some(mat_mul(&[z], &self.snf.u)?.remove(0)))
    }

    /// Image of the unit vector `e_j` in the quotient `ℤ^k / L`, written as
    /// residues modulo each invariant factor followed by free coordinates.
    /// Units (`d_i = 1`) are dropped.
    pub fn quotient_image(&self, j: usize) -> Vec<(i128, i128)> {
        let row = &self.snf.v[j];
        let mut out = Vec::new();
        for (i, &x) in row.iter().enumerate() {
            match self.snf.diagonal.get(i) {
                Some(&1) => {}
                Some(&d) => out.push((d, x.rem_euclid(d))),
                None => out.push((0, x)),
            }
        }
        out
    }
}
