//! Laurent polynomials in q with integer coefficients, stored densely from
//! the lowest nonzero degree. Degrees at desk scale are tiny, so a small
//! vector beats a sparse map.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer-coefficient Laurent polynomial. The zero polynomial has an empty
/// coefficient vector; otherwise the first and last entries are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    min_deg: i64,
    coeffs: Vec<i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { min_deg: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPolynomial { min_deg: 0, coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// q^k (k may be negative).
    pub fn q_pow(k: i64) -> Self {
        LaurentPolynomial { min_deg: k, coeffs: vec![1] }
    }

    /// Builds from a dense coefficient slice starting at `min_deg`.
    pub fn from_coeffs(min_deg: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPolynomial { min_deg, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.min_deg += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg)
        }
    }

    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, deg: i64) -> i64 {
        if deg < self.min_deg {
            return 0;
        }
        let idx = (deg - self.min_deg) as usize;
        self.coeffs.get(idx).copied().unwrap_or(0)
    }

    /// (degree, coefficient) pairs of the nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.min_deg + i as i64, c))
    }

    /// Fast path for q = 1: the sum of the coefficients.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// The bar involution q ↦ q⁻¹.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let max_deg = self.degree().unwrap();
        let coeffs = self.coeffs.iter().rev().copied().collect();
        Self::from_coeffs(-max_deg, coeffs)
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self::from_coeffs(self.min_deg, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplication by q^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { min_deg: self.min_deg + k, coeffs: self.coeffs.clone() }
    }

    /// Keeps only the terms of degree ≤ `deg`.
    pub fn truncate_above(&self, deg: i64) -> Self {
        let kept: Vec<i64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if self.min_deg + i as i64 <= deg { c } else { 0 })
            .collect();
        Self::from_coeffs(self.min_deg, kept)
    }

    /// Coefficients from degree zero upward, constant term first. Only
    /// meaningful for ordinary polynomials (min degree ≥ 0); used by the
    /// cache file format and the CLI.
    pub fn nonneg_coeff_vec(&self) -> Vec<i64> {
        match self.degree() {
            None => vec![0],
            Some(d) => (0..=d.max(0)).map(|k| self.coeff(k)).collect(),
        }
    }

    pub fn from_nonneg_coeff_vec(coeffs: &[i64]) -> Self {
        Self::from_coeffs(0, coeffs.to_vec())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(rhs.min_deg);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let coeffs = (lo..=hi).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        LaurentPolynomial::from_coeffs(lo, coeffs)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &rhs.neg()
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::from_coeffs(self.min_deg + rhs.min_deg, coeffs)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.terms() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match deg {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "q")?,
                1 => write!(f, "{a}q")?,
                d if a == 1 => write!(f, "q^{d}")?,
                d => write!(f, "{a}q^{d}")?,
            }
        }
        Ok(())
    }
}
