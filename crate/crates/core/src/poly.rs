//! Univariate polynomials with ascending coefficient lists.
//!
//! The zero polynomial is the empty coefficient list; otherwise the leading
//! coefficient is nonzero. Division is only used against monic divisors, so
//! everything stays exact over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == T::one()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate on a square matrix by Horner's scheme.
    pub fn eval_matrix(&self, m: &Matrix<T>) -> Matrix<T> {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// Quotient and remainder against a monic divisor.
    pub fn divmod_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.degree() - dd + 1];
        for k in (dd..rem.len()).rev() {
            let f = rem[k].clone();
            if f.is_zero() {
                continue;
            }
            quot[k - dd] = f.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = rem[idx].clone() - f.clone() * dc.clone();
            }
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact division by a monic divisor; panics on nonzero remainder.
    pub fn exact_div_monic(&self, d: &Self) -> Self {
        let (q, r) = self.divmod_monic(d);
        assert!(r.is_zero(), "division left a remainder");
        q
    }

    /// Coefficient-reversal test: `t^deg * p(1/t) == ±p(t)`.
    /// Returns the sign when the identity holds.
    pub fn reciprocal_sign(&self) -> Option<i8> {
        if self.is_zero() {
            return None;
        }
        let rev: Vec<T> = self.coeffs.iter().rev().cloned().collect();
        if rev == self.coeffs {
            Some(1)
        } else if rev.iter().zip(&self.coeffs).all(|(a, b)| (T::zero() - a.clone()) == *b) {
            Some(-1)
        } else {
            None
        }
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| T::zero() - c.clone()).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "poly 0: 0");
        }
        write!(f, "poly {}:", self.degree())?;
        for c in &self.coeffs {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn poly(cs: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let p = poly(&[1, 2]); // 1 + 2t
        let r = poly(&[-1, 1]); // t - 1
        assert_eq!(&p * &r, poly(&[-1, -1, 2]));
        assert_eq!(&p + &r, poly(&[0, 3]));
        assert_eq!(p.eval(&q(3)), q(7));
    }

    #[test]
    fn division_round_trips() {
        let a = poly(&[2, 0, -3, 1]);
        let d = poly(&[-1, 1]);
        let (qt, rem) = a.divmod_monic(&d);
        assert_eq!(&(&qt * &d) + &rem, a);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Polynomial::new(vec![q(1), q(0), q(0)]);
        assert_eq!(p.degree(), 0);
        assert!(!p.is_zero());
    }

    #[test]
    fn reciprocal_detection() {
        assert_eq!(poly(&[1, -1, 1]).reciprocal_sign(), Some(1));
        assert_eq!(poly(&[-1, 1]).reciprocal_sign(), Some(-1));
        assert_eq!(poly(&[2, 1]).reciprocal_sign(), None);
    }

    #[test]
    fn matrix_evaluation() {
        use crate::matrix::Matrix;
        let m = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(-1), q(0)]]);
        // t^2 - t + 1 annihilates m (Cayley-Hamilton)
        let p = poly(&[1, -1, 1]);
        let z = p.eval_matrix(&m);
        assert!((0..2).all(|r| (0..2).all(|c| z[(r, c)].is_zero())));
    }
}
