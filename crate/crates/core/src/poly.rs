//! Dense integer polynomials in λ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer coefficients in ascending degree, without trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `λ`.
    pub fn lambda() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    /// `c λ^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `Π (λ - r)` over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, &r| acc * Self::from_coeffs(vec![-r, 1]))
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * x as i128 + c as i128)
    }

    pub fn eval_big(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, &c| acc * x + BigRational::from_integer(c.into()))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&x| x * c).collect())
    }

    /// `λ^k · p`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_coeffs(coeffs)
    }

    /// `p(λ + b)`.
    pub fn translate(&self, b: i64) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, &c| {
                acc * Self::from_coeffs(vec![b, 1]) + Self::constant(c)
            })
    }

    /// `scale · p(aλ + b)`, which must have integer coefficients.
    pub fn affine_scaled(&self, scale: &BigRational, a: &BigRational, b: &BigRational) -> Result<Self> {
        let mut acc: Vec<BigRational> = Vec::new();
        for &c in self.coeffs.iter().rev() {
            // acc = acc * (aλ + b) + c
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (k, x) in acc.iter().enumerate() {
                next[k] += x * b;
                next[k + 1] += x * a;
            }
            next[0] += BigRational::from_integer(c.into());
            acc = next;
        }
        let coeffs = acc
            .into_iter()
            .map(|x| {
                let y = x * scale;
                if !y.is_integer() {
                    return Err(Error::IdentityFailed(format!("non-integer coefficient {y}")));
                }
                y.to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::IdentityFailed("coefficient overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// Coefficients as big integers, for callers that need them.
    pub fn big_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }
}

/// `p / q` as a big rational.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |a, b| a * b)
    }
}

/// Descending degree with explicit signs: `λ^3 - 9λ^2 + 23λ - 15`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            if mag != 1 || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Free-function form of the `Display` impl.
pub fn polynomial_format(p: &IntPolynomial) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn formatting() {
        let p = IntPolynomial::from_roots(&[1, 3, 5]);
        assert_eq!(p.to_string(), "λ^3 - 9λ^2 + 23λ - 15");
        assert_eq!(IntPolynomial::monomial(1, 4).to_string(), "λ^4");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_coeffs(vec![0, -2, 1]).to_string(), "λ^2 - 2λ");
        assert_eq!(IntPolynomial::from_coeffs(vec![1, -1]).to_string(), "-λ + 1");
        assert_eq!(IntPolynomial::constant(-3).to_string(), "-3");
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::from_roots(&[1]);
        let b = IntPolynomial::from_roots(&[2]);
        assert_eq!(&a * &b, IntPolynomial::from_coeffs(vec![2, -3, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!((&a + &b).coeffs(), &[-3, 2]);
        assert_eq!(a.eval(5), 4);
        assert_eq!(IntPolynomial::lambda().shift_up(2), IntPolynomial::monomial(1, 3));
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn substitutions() {
        // λ(λ-1)(λ-2) at λ-1 is (λ-1)(λ-2)(λ-3).
        let p = IntPolynomial::from_roots(&[0, 1, 2]);
        assert_eq!(p.translate(-1), IntPolynomial::from_roots(&[1, 2, 3]));
        let one = BigRational::one();
        assert_eq!(
            p.affine_scaled(&one, &one, &ratio(-1, 1)).unwrap(),
            IntPolynomial::from_roots(&[1, 2, 3])
        );
        // 2^2 · q((λ-1)/2) for q = λ(λ-1) is (λ-1)(λ-3).
        let q = IntPolynomial::from_roots(&[0, 1]);
        assert_eq!(
            q.affine_scaled(&ratio(4, 1), &ratio(1, 2), &ratio(-1, 2)).unwrap(),
            IntPolynomial::from_roots(&[1, 3])
        );
        assert!(q.affine_scaled(&one, &ratio(1, 2), &ratio(0, 1)).is_err());
    }
}
