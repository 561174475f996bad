//! Fibonacci wheels: a hub at 0 and rim points `P_0 = a`, `P_1 = b`,
//! `P_{i+2} = P_i + P_{i+1}` that close up after `n` steps.
//!
//! Closing up means `(F_{n−1} − 1)a + F_n b = 0` and
//! `(F_{n−2} + 1)a + (F_{n−1} − 1)b = 0`. With `d` the gcd of the second
//! row, both `a` and `b` have torsion `t = (L_n − 1 − (−1)^n) / d`, and
//! `d·b = h·a`.

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::smith_normal_form;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WheelError {
    #[error("a wheel needs at least 3 spokes, got {0}")]
    TooFewSpokes(usize),
    #[error("wheel with {0} spokes is too large for exact 128-bit arithmetic")]
    TooLarge(usize),
    #[error("no wheel with {0} distinct terms found")]
    ConstructionFailed(usize),
}

/// `F_k` for `k >= -1` (`F_{−1} = 1`).
pub fn fibonacci(k: i64) -> i128 {
    assert!(k >= -1, "Fibonacci index below -1");
    if k == -1 {
        return 1;
    }
    let (mut a, mut b) = (0i128, 1i128);
    for _ in 0..k {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// `L_k = F_{k−1} + F_{k+1}`, so `L_0 = 2`, `L_1 = 1`, `L_2 = 3`.
pub fn lucas(k: i64) -> i128 {
    fibonacci(k - 1) + fibonacci(k + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WheelParameters {
    pub n: usize,
    pub d: i128,
    pub t: i128,
    /// `h` as an exact fraction `(numerator, denominator)` from the closed
    /// formulas; the denominator is 1 or 2.
    pub h: (i128, i128),
    /// `h` reduced into `0..t`.
    pub h_mod_t: i128,
    /// A Bézout pair `r·μ + s·(μ + ν) = 1`.
    pub bezout: (i128, i128),
    /// `−(s·μ + r·ν)·d` from the Bézout pair.
    pub h_bezout: i128,
    /// Which of the four closed-formula cases applies.
    pub case: &'static str,
}

/// Closed-form `(d, t, h)` by residue class of `n`.
pub fn table_formulas(n: usize) -> (i128, i128, (i128, i128), &'static str) {
    let ni = n as i64;
    if n.is_multiple_of(4) {
        let f = fibonacci(ni / 2);
        (f, 5 * f, (-2 * f, 1), "4k")
    } else if n % 4 == 2 {
        let l = lucas(ni / 2);
        (l, l, (-l, 1), "4k+2")
    } else if n % 12 == 3 || n % 12 == 9 {
        (2, lucas(ni) / 2, (1 - lucas(ni - 2), 1), "12k+3,9")
    } else {
        let r = Ratio::new(1 - lucas(ni - 2), 2);
        (1, lucas(ni), (*r.numer(), *r.denom()), "12k+1,5,7,11")
    }
}

fn check_n(n: usize) -> Result<(), WheelError> {
    if n < 3 {
        return Err(WheelError::TooFewSpokes(n));
    }
    if n > 80 {
        return Err(WheelError::TooLarge(n));
    }
    Ok(())
}

pub fn wheel_parameters(n: usize) -> Result<WheelParameters, WheelError> {
    check_n(n)?;
    let ni = n as i64;
    let d = (fibonacci(ni - 2) + 1).gcd(&(fibonacci(ni - 1) - 1));
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let t = (lucas(ni) - 1 - sign) / d;
    let (_, _, h, case) = table_formulas(n);
    let mu = (fibonacci(ni - 1) - 1) / d;
    let nu = (fibonacci(ni - 2) + 1) / d;
    let eg = mu.extended_gcd(&(mu + nu));
    assert_eq!(eg.gcd, 1, "μ and μ+ν must be coprime");
    let (r, s) = (eg.x, eg.y);
    let h_bezout = -(s * mu + r * nu) * d;
    let inv_den = if h.1 == 1 { 1 } else { modular_inverse(h.1, t).expect("t is odd when h is a half-integer") };
    let h_mod_t = (h.0 * inv_den).rem_euclid(t);
    Ok(WheelParameters { n, d, t, h, h_mod_t, bezout: (r, s), h_bezout, case })
}

fn modular_inverse(x: i128, m: i128) -> Option<i128> {
    let eg = x.rem_euclid(m).extended_gcd(&m);
    (eg.gcd == 1).then(|| eg.x.rem_euclid(m))
}

/// Largest invariant factor of the 2×2 closing system, computed by Smith
/// normal form independently of the closed formulas.
pub fn wheel_snf_torsion(n: usize) -> Result<i128, WheelError> {
    check_n(n)?;
    let ni = n as i64;
    let m = vec![
        vec![fibonacci(ni - 1) - 1, fibonacci(ni)],
        vec![fibonacci(ni - 2) + 1, fibonacci(ni - 1) - 1],
    ];
    let snf = smith_normal_form(&m, 2).map_err(|_| WheelError::TooLarge(n))?;
    Ok(*snf.diagonal.last().expect("closing system has full rank"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum WheelGroup {
    Cyclic(i128),
    /// `ℤ_k ⊕ ℤ_k`.
    Square(i128),
}

impl WheelGroup {
    fn moduli(&self) -> Vec<i128> {
        match *self {
            WheelGroup::Cyclic(t) => vec![t],
            WheelGroup::Square(k) => vec![k, k],
        }
    }

    pub fn name(&self) -> String {
        match self {
            WheelGroup::Cyclic(t) => format!("Z{t}"),
            WheelGroup::Square(k) => format!("Z{k}+Z{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WheelReport {
    pub params: WheelParameters,
    pub group: WheelGroup,
    pub a: Vec<i128>,
    pub b: Vec<i128>,
    pub terms: Vec<Vec<i128>>,
}

/// Groups `ℤ_k ⊕ ℤ_k` used where a two-generator group gives a full wheel.
fn square_modulus(n: usize) -> Option<i128> {
    match n {
        3 => Some(2),
        6 => Some(4),
        8 => Some(3),
        16 => Some(7),
        _ => None,
    }
}

fn reduce(v: &mut [i128], moduli: &[i128]) {
    for (x, &m) in v.iter_mut().zip(moduli) {
        *x = x.rem_euclid(m);
    }
}

fn wheel_terms(a: &[i128], b: &[i128], moduli: &[i128], count: usize) -> Vec<Vec<i128>> {
    let mut terms = vec![a.to_vec(), b.to_vec()];
    while terms.len() < count {
        let k = terms.len();
        let mut next: Vec<i128> = terms[k - 2].iter().zip(&terms[k - 1]).map(|(x, y)| x + y).collect();
        reduce(&mut next, moduli);
        terms.push(next);
    }
    terms.truncate(count);
    terms
}

/// Checks closure, the Fibonacci rule, torsion, `d·b = h·a`, and that the
/// `n` rim terms are distinct and differ from the hub.
fn valid_wheel(p: &WheelParameters, moduli: &[i128], a: &[i128], b: &[i128]) -> Option<Vec<Vec<i128>>> {
    let n = p.n;
    let all = wheel_terms(a, b, moduli, n + 2);
    if all[n] != all[0] || all[n + 1] != all[1] {
        return None;
    }
    let terms = all[..n].to_vec();
    let mut sorted = terms.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != n || terms.iter().any(|x| x.iter().all(|&c| c == 0)) {
        return None;
    }
    let scale = |k: i128, v: &[i128]| -> Vec<i128> {
        let mut out: Vec<i128> = v.iter().map(|x| x * k).collect();
        reduce(&mut out, moduli);
        out
    };
    let zero = vec![0; moduli.len()];
    if scale(p.t, a) != zero || scale(p.t, b) != zero || scale(p.d, b) != scale(p.h_mod_t, a) {
        return None;
    }
    Some(terms)
}

/// Builds a wheel with `n` distinct terms: `a = (1,0)`, `b = (0,1)` in
/// `ℤ_k ⊕ ℤ_k` for the four square cases, otherwise in `ℤ_t` with
/// `a = −1, −2, …` and the least positive `b` that works.
pub fn wheel_build(n: usize) -> Result<WheelReport, WheelError> {
    let params = wheel_parameters(n)?;
    if let Some(k) = square_modulus(n) {
        let moduli = [k, k];
        let (a, b) = (vec![1, 0], vec![0, 1]);
        let terms = valid_wheel(&params, &moduli, &a, &b).ok_or(WheelError::ConstructionFailed(n))?;
        return Ok(WheelReport { params, group: WheelGroup::Square(k), a, b, terms });
    }
    let t = params.t;
    let moduli = WheelGroup::Cyclic(t).moduli();
    for neg_a in 1..t {
        let a = vec![-neg_a];
        for b in 1..t {
            let b = vec![b];
            if let Some(terms) = valid_wheel(&params, &moduli, &[(-neg_a).rem_euclid(t)], &b) {
                return Ok(WheelReport { params, group: WheelGroup::Cyclic(t), a, b, terms: signed(terms, t) });
            }
        }
    }
    Err(WheelError::ConstructionFailed(n))
}

/// Writes residues above `t/2` as negatives only for the first term, which
/// is the chosen negative starting value.
fn signed(mut terms: Vec<Vec<i128>>, t: i128) -> Vec<Vec<i128>> {
    if let Some(first) = terms.first_mut() {
        if first[0] > t / 2 {
            first[0] -= t;
        }
    }
    terms
}
