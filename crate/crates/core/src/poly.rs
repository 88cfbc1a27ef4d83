//! Exact integer polynomials and characteristic polynomials.
//!
//! Characteristic polynomials are computed with Berkowitz's division-free
//! algorithm, so every coefficient is an exact integer regardless of size.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Polynomial with integer coefficients, stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Poly::monomial(1, BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::from_ascending(vec![c])
    }

    pub fn monomial(degree: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_ascending(coeffs)
    }

    pub fn from_ascending(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(ascending: &[i64]) -> Self {
        Poly::from_ascending(ascending.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn ascending(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(), |acc, _| &acc * self)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_ascending((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_ascending((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_ascending(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_ascending(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Characteristic polynomial `det(xI - M) = x^k + c_1 x^{k-1} + ... + c_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    /// `c_0 = 1, c_1, ..., c_k`.
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Builds from `c_0..c_k` (highest degree first).
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a characteristic polynomial has at least c_0"
        );
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_i`, the coefficient of `x^{k-i}`; zero for `i > k`.
    pub fn c(&self, i: usize) -> &BigInt {
        static ZERO: BigInt = BigInt::ZERO;
        self.coeffs.get(i).unwrap_or(&ZERO)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_ascending(self.coeffs.iter().rev().cloned().collect())
    }

    /// `(-1)^k c_k`.
    pub fn determinant(&self) -> BigInt {
        let k = self.degree();
        let ck = self.coeffs[k].clone();
        if k.is_multiple_of(2) {
            ck
        } else {
            -ck
        }
    }

    /// Multiplicity of zero as a root: the number of trailing zero
    /// coefficients.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Counts of positive and negative roots, exact for a real-rooted
    /// polynomial (Descartes' rule of signs is tight when every root is
    /// real, as for a symmetric matrix).
    pub fn sign_counts(&self) -> (usize, usize) {
        let z = self.zero_multiplicity();
        let trimmed = &self.coeffs[..self.coeffs.len() - z];
        let pos = sign_changes(trimmed.iter().cloned());
        // p(-x) flips the sign of c_i when the power k - i is odd.
        let k = trimmed.len() - 1;
        let neg = sign_changes(trimmed.iter().enumerate().map(|(i, c)| {
            if (k - i) % 2 == 1 {
                -c
            } else {
                c.clone()
            }
        }));
        (pos, neg)
    }

    /// Decimal coefficients, highest degree first, comma separated.
    pub fn to_coefficient_list(&self) -> String {
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn sign_changes(seq: impl Iterator<Item = BigInt>) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for c in seq {
        if c.is_zero() {
            continue;
        }
        let s = c.is_positive();
        if last.is_some_and(|l| l != s) {
            changes += 1;
        }
        last = Some(s);
    }
    changes
}

impl From<Poly> for CharPoly {
    fn from(p: Poly) -> Self {
        let k = p.degree().unwrap_or(0);
        CharPoly {
            coeffs: (0..=k).map(|i| p.coeff(k - i)).collect(),
        }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_poly(), f)
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

/// Exact characteristic polynomial of a square integer matrix (Berkowitz).
///
/// ```
/// use unispec::{poly::char_poly, IntMatrix};
///
/// let c3 = IntMatrix::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
/// assert_eq!(char_poly(&c3).unwrap().to_string(), "x^3 - 3x - 2");
/// ```
pub fn char_poly(m: &IntMatrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let a = m.to_bigint_rows();
    // v holds det(xI - A_r) for the leading r x r block, highest degree first.
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // Column of the lower-triangular Toeplitz matrix for step r:
        // t_0 = 1, t_1 = -a_rr, t_j = -R A_r^{j-2} C for j >= 2.
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-&a[r][r]);
        let mut col: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let dot: BigInt = (0..r).map(|j| &a[r][j] * &col[j]).sum();
            t.push(-dot);
            col = (0..r)
                .map(|i| (0..r).map(|j| &a[i][j] * &col[j]).sum())
                .collect();
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &v[j]).sum())
            .collect();
        v = next;
    }
    Ok(CharPoly { coeffs: v })
}

/// Exact determinant, read off the characteristic polynomial.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    Ok(char_poly(m)?.determinant())
}
