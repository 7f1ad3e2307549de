use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::det::bareiss_determinant;
use crate::error::{Error, Result};

/// Dense integer polynomial, constant term first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients (constant term first), trimming leading zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(&[1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, e: u32) -> IntPolynomial {
        (0..e).fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            match (k, show_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{mag}x")?,
                (1, false) => write!(f, "x")?,
                (_, true) => write!(f, "{mag}x^{k}")?,
                (_, false) => write!(f, "x^{k}")?,
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

/// The cyclotomic polynomials that can occur as characteristic factors of torsion
/// elements with non-vanishing centralizer Euler characteristic.
pub fn cyclotomic_polynomial(n: u32) -> Result<IntPolynomial> {
    let coeffs: &[i64] = match n {
        1 => &[-1, 1],
        2 => &[1, 1],
        3 => &[1, 1, 1],
        4 => &[1, 0, 1],
        6 => &[1, -1, 1],
        _ => return Err(Error::UnsupportedCyclotomic(n)),
    };
    Ok(IntPolynomial::from_i64(coeffs))
}

/// Sylvester matrix of `f` (degree n) and `g` (degree m): m shifted rows of `f`
/// followed by n shifted rows of `g`, leading coefficients first.
pub fn sylvester_matrix(f: &IntPolynomial, g: &IntPolynomial) -> Vec<Vec<BigInt>> {
    let n = f.degree();
    let m = g.degree();
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    let push_rows = |rows: &mut Vec<Vec<BigInt>>, p: &IntPolynomial, count: usize| {
        for shift in 0..count {
            let mut row = vec![BigInt::zero(); size];
            for (k, c) in p.coeffs().iter().rev().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
    };
    push_rows(&mut rows, f, m);
    push_rows(&mut rows, g, n);
    rows
}

/// `∏_{i,j} (α_i − β_j)` over the roots α of `f` and β of `g`, i.e. `∏_i g(α_i)`.
///
/// Both polynomials must be monic and nonconstant; the product is then the
/// Sylvester determinant exactly.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    for p in [f, g] {
        if !p.is_monic() || p.degree() == 0 {
            return Err(Error::NotMonic);
        }
    }
    Ok(bareiss_determinant(&sylvester_matrix(f, g)))
}
