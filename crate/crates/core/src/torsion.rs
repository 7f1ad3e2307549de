//! Torsion conjugacy classes of `GL_m(ℤ)` with non-vanishing centralizer Euler
//! characteristic, encoded by the multiplicities of `Φ₁, Φ₂, Φ₃, Φ₄, Φ₆` in the
//! characteristic polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{cyclotomic_polynomial, resultant, ExactRational, IntPolynomial};

/// Largest rank with any admissible class: `2 + 2 + 2 + 2 + 2`.
pub const MAX_RANK: usize = 10;

/// Diagonal block kinds, in canonical factor order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorsionBlock {
    B1,
    Bneg1,
    BT3,
    BT4,
    BT6,
}

impl TorsionBlock {
    pub const ALL: [TorsionBlock; 5] =
        [TorsionBlock::B1, TorsionBlock::Bneg1, TorsionBlock::BT3, TorsionBlock::BT4, TorsionBlock::BT6];

    pub fn index(self) -> usize {
        self as usize
    }

    /// n such that the block's characteristic polynomial is Φ_n.
    pub fn cyclotomic_index(self) -> u32 {
        match self {
            TorsionBlock::B1 => 1,
            TorsionBlock::Bneg1 => 2,
            TorsionBlock::BT3 => 3,
            TorsionBlock::BT4 => 4,
            TorsionBlock::BT6 => 6,
        }
    }

    pub fn degree(self) -> usize {
        self.root_exponents().len()
    }

    /// Eigenvalues as exponents k of ζ₁₂^k.
    pub fn root_exponents(self) -> &'static [i64] {
        match self {
            TorsionBlock::B1 => &[0],
            TorsionBlock::Bneg1 => &[6],
            TorsionBlock::BT3 => &[4, 8],
            TorsionBlock::BT4 => &[3, 9],
            TorsionBlock::BT6 => &[2, 10],
        }
    }

    pub fn det(self) -> i32 {
        match self {
            TorsionBlock::Bneg1 => -1,
            _ => 1,
        }
    }

    pub fn max_multiplicity(self) -> u8 {
        match self {
            TorsionBlock::B1 | TorsionBlock::Bneg1 => 2,
            _ => 1,
        }
    }

    pub fn char_poly(self) -> IntPolynomial {
        cyclotomic_polynomial(self.cyclotomic_index()).expect("block indices are admissible")
    }

    fn label(self, mult: u8) -> &'static str {
        match (self, mult) {
            (TorsionBlock::B1, 1) => "1",
            (TorsionBlock::B1, _) => "I2",
            (TorsionBlock::Bneg1, 1) => "-1",
            (TorsionBlock::Bneg1, _) => "-I2",
            (TorsionBlock::BT3, _) => "T3",
            (TorsionBlock::BT4, _) => "T4",
            (TorsionBlock::BT6, _) => "T6",
        }
    }
}

/// A torsion class, as the multiplicity vector `(a, b, c, d, e)` of
/// `Φ₁, Φ₂, Φ₃, Φ₄, Φ₆` in its characteristic polynomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionClass {
    mult: [u8; 5],
}

impl TorsionClass {
    pub fn new(mult: [u8; 5]) -> Result<Self> {
        for (block, &k) in TorsionBlock::ALL.iter().zip(&mult) {
            if k > block.max_multiplicity() {
                return Err(Error::OutOfRange(format!(
                    "multiplicity {k} of {block:?} exceeds {}",
                    block.max_multiplicity()
                )));
            }
        }
        if mult.iter().all(|&k| k == 0) {
            return Err(Error::OutOfRange("empty torsion class".into()));
        }
        Ok(TorsionClass { mult })
    }

    pub fn multiplicities(&self) -> [u8; 5] {
        self.mult
    }

    pub fn multiplicity(&self, block: TorsionBlock) -> u8 {
        self.mult[block.index()]
    }

    /// Blocks present, with their multiplicities, in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (TorsionBlock, u8)> + '_ {
        TorsionBlock::ALL.into_iter().zip(self.mult).filter(|&(_, k)| k > 0)
    }

    pub fn degree(&self) -> usize {
        self.factors().map(|(b, k)| b.degree() * k as usize).sum()
    }

    /// Eigenvalue exponent multiset (powers of ζ₁₂), in canonical block order.
    pub fn root_exponents(&self) -> Vec<i64> {
        self.factors()
            .flat_map(|(b, k)| std::iter::repeat_n(b.root_exponents(), k as usize).flatten().copied())
            .collect()
    }

    pub fn char_poly(&self) -> IntPolynomial {
        self.factors().fold(IntPolynomial::one(), |acc, (b, k)| acc.mul(&b.char_poly().pow(k as u32)))
    }

    /// `R(A) = ∏_{i<j} R(f_i, f_j)` over the distinct factor powers, with the
    /// earlier factor's roots taken first.
    pub fn resultant(&self) -> BigInt {
        let present: Vec<_> = self.factors().collect();
        let mut r = BigInt::one();
        for (i, &(bi, ki)) in present.iter().enumerate() {
            for &(bj, kj) in &present[i + 1..] {
                let pair = resultant(&bi.char_poly(), &bj.char_poly()).expect("cyclotomic factors are monic");
                r *= pair.pow(ki as u32 * kj as u32);
            }
        }
        r
    }

    pub fn centralizer(&self) -> CentralizerShape {
        let factors = self
            .factors()
            .map(|(b, k)| match (b, k) {
                (TorsionBlock::B1 | TorsionBlock::Bneg1, 1) => CentralizerFactor::GL1Z,
                (TorsionBlock::B1 | TorsionBlock::Bneg1, _) => CentralizerFactor::GL2Z,
                (TorsionBlock::BT3 | TorsionBlock::BT6, _) => CentralizerFactor::UnitsEisenstein,
                (TorsionBlock::BT4, _) => CentralizerFactor::UnitsGaussian,
            })
            .collect();
        CentralizerShape { factors }
    }

    pub fn centralizer_chi(&self) -> ExactRational {
        self.centralizer().chi()
    }

    pub fn det(&self) -> i32 {
        if self.multiplicity(TorsionBlock::Bneg1) % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// Multiplicity of the eigenvalue +1.
    pub fn unit_multiplicity(&self) -> u8 {
        self.multiplicity(TorsionBlock::B1)
    }

    /// The class of `−A`: swaps `Φ₁ ↔ Φ₂` and `Φ₃ ↔ Φ₆`.
    pub fn negated(&self) -> TorsionClass {
        let [a, b, c, d, e] = self.mult;
        TorsionClass { mult: [b, a, e, d, c] }
    }

    pub fn label(&self) -> String {
        let parts: Vec<&str> = self.factors().map(|(b, k)| b.label(k)).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorsionClass{}{:?}", self.label(), self.mult)
    }
}

/// All admissible classes of degree exactly `m`, lexicographic in `(a, b, c, d, e)`.
pub fn enumerate_classes(m: usize) -> Vec<TorsionClass> {
    let mut out = Vec::new();
    for a in 0..=2u8 {
        for b in 0..=2u8 {
            for c in 0..=1u8 {
                for d in 0..=1u8 {
                    for e in 0..=1u8 {
                        let degree = (a + b) as usize + 2 * (c + d + e) as usize;
                        if degree == m && m > 0 {
                            out.push(TorsionClass { mult: [a, b, c, d, e] });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Arithmetic groups occurring as direct factors of a class centralizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralizerFactor {
    GL1Z,
    GL2Z,
    /// ℤ[ω]^× ≅ C₆
    UnitsEisenstein,
    /// ℤ[i]^× ≅ C₄
    UnitsGaussian,
}

impl CentralizerFactor {
    pub fn chi(self) -> ExactRational {
        match self {
            CentralizerFactor::GL1Z => ExactRational::new(1, 2),
            CentralizerFactor::GL2Z => ExactRational::new(-1, 24),
            CentralizerFactor::UnitsEisenstein => ExactRational::new(1, 6),
            CentralizerFactor::UnitsGaussian => ExactRational::new(1, 4),
        }
    }

    /// Whether the factor contains elements of determinant −1. Units of an
    /// imaginary quadratic order act with determinant equal to their norm, i.e. 1.
    pub fn has_orientation_reversal(self) -> bool {
        matches!(self, CentralizerFactor::GL1Z | CentralizerFactor::GL2Z)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerShape {
    pub factors: Vec<CentralizerFactor>,
}

impl CentralizerShape {
    pub fn chi(&self) -> ExactRational {
        self.factors.iter().fold(ExactRational::one(), |acc, f| acc * f.chi())
    }

    /// Orbifold χ of the centralizer intersected with `SL_m(ℤ)`.
    pub fn chi_determinant_one(&self) -> ExactRational {
        if self.factors.iter().any(|f| f.has_orientation_reversal()) {
            self.chi() * ExactRational::from(2)
        } else {
            self.chi()
        }
    }
}
