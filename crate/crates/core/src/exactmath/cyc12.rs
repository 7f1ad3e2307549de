use std::ops::{Add, Mul, Neg, Sub};

use super::rational::ExactRational;
use crate::error::{Error, Result};

/// Element of ℚ(ζ) for ζ a primitive 12th root of unity, in the power basis
/// `{1, ζ, ζ², ζ³}` with `ζ⁴ = ζ² − 1`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Cyc12 {
    coords: [ExactRational; 4],
}

impl Cyc12 {
    pub fn new(coords: [ExactRational; 4]) -> Self {
        Cyc12 { coords }
    }

    pub fn zero() -> Self {
        Cyc12::default()
    }

    pub fn one() -> Self {
        Cyc12::from_rational(ExactRational::one())
    }

    pub fn from_rational(r: ExactRational) -> Self {
        Cyc12 { coords: [r, ExactRational::zero(), ExactRational::zero(), ExactRational::zero()] }
    }

    /// `ζ^k`, for any integer k (taken mod 12).
    pub fn root(k: i64) -> Self {
        let k = k.rem_euclid(12) as usize;
        let mut wide = [0i64; 12];
        wide[k] = 1;
        Cyc12::reduce(wide.map(ExactRational::from).to_vec())
    }

    pub fn coords(&self) -> &[ExactRational; 4] {
        &self.coords
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(ExactRational::is_zero)
    }

    pub fn to_rational(&self) -> Option<ExactRational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    // ζ^k = ζ^{k−2} − ζ^{k−4}, applied from the top degree down.
    fn reduce(mut wide: Vec<ExactRational>) -> Self {
        for k in (4..wide.len()).rev() {
            let c = std::mem::take(&mut wide[k]);
            if c.is_zero() {
                continue;
            }
            wide[k - 2] = &wide[k - 2] + &c;
            wide[k - 4] = &wide[k - 4] - &c;
        }
        wide.resize(4, ExactRational::zero());
        let mut it = wide.into_iter();
        Cyc12 { coords: std::array::from_fn(|_| it.next().unwrap()) }
    }
}

impl Add for &Cyc12 {
    type Output = Cyc12;
    fn add(self, rhs: &Cyc12) -> Cyc12 {
        Cyc12 { coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]) }
    }
}

impl Sub for &Cyc12 {
    type Output = Cyc12;
    fn sub(self, rhs: &Cyc12) -> Cyc12 {
        Cyc12 { coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]) }
    }
}

impl Mul for &Cyc12 {
    type Output = Cyc12;
    fn mul(self, rhs: &Cyc12) -> Cyc12 {
        let mut wide = vec![ExactRational::zero(); 7];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                wide[i + j] += a * b;
            }
        }
        Cyc12::reduce(wide)
    }
}

impl Neg for Cyc12 {
    type Output = Cyc12;
    fn neg(self) -> Cyc12 {
        Cyc12 { coords: self.coords.map(|c| -c) }
    }
}

/// `∏ (ζ^a − ζ^b)` over all pairs `a ∈ f_exponents`, `b ∈ g_exponents`, computed in ℚ(ζ₁₂).
///
/// Galois-stable inputs always give a rational product; anything else is reported
/// as an internal consistency failure.
pub fn resultant_oracle(f_exponents: &[i64], g_exponents: &[i64]) -> Result<ExactRational> {
    if f_exponents.is_empty() || g_exponents.is_empty() {
        return Err(Error::OutOfRange("resultant oracle needs nonempty root multisets".into()));
    }
    let mut acc = Cyc12::one();
    for &a in f_exponents {
        for &b in g_exponents {
            acc = &acc * &(&Cyc12::root(a) - &Cyc12::root(b));
        }
    }
    acc.to_rational().ok_or_else(|| {
        Error::Consistency(format!("root product over {f_exponents:?} x {g_exponents:?} is not rational: {acc:?}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_relations() {
        assert_eq!(&Cyc12::root(6) + &Cyc12::one(), Cyc12::zero());
        assert_eq!(Cyc12::root(12), Cyc12::one());
        assert_eq!(Cyc12::root(-1), Cyc12::root(11));
        let z = Cyc12::root(1);
        let mut p = Cyc12::one();
        for k in 0..24 {
            assert_eq!(p, Cyc12::root(k));
            p = &p * &z;
        }
        // ζ³ = i, ζ⁴ a primitive cube root of unity
        assert_eq!(&Cyc12::root(3) * &Cyc12::root(3), -Cyc12::one());
        let w = Cyc12::root(4);
        assert_eq!(&(&(&w * &w) + &w) + &Cyc12::one(), Cyc12::zero());
    }

    #[test]
    fn rationality_detection() {
        assert!(Cyc12::root(6).is_rational());
        assert!(!Cyc12::root(4).is_rational());
        // ζ² + ζ¹⁰ = 2cos(π/3) = 1
        assert_eq!((&Cyc12::root(2) + &Cyc12::root(10)).to_rational(), Some(ExactRational::one()));
    }

    #[test]
    fn multiplication_is_commutative_and_associative() {
        let a = &Cyc12::root(1) + &Cyc12::from_rational(ExactRational::new(3, 2));
        let b = &Cyc12::root(5) - &Cyc12::root(2);
        let c = &Cyc12::root(7) + &Cyc12::root(9);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn worked_oracle_values() {
        assert_eq!(resultant_oracle(&[0], &[6]).unwrap(), ExactRational::from(2));
        assert_eq!(resultant_oracle(&[4, 8], &[2, 10]).unwrap(), ExactRational::from(4));
        assert_eq!(resultant_oracle(&[0, 0], &[6, 6]).unwrap(), ExactRational::from(16));
    }

    #[test]
    fn non_galois_stable_input_is_flagged() {
        assert!(matches!(resultant_oracle(&[0], &[4]), Err(Error::Consistency(_))));
        assert!(matches!(resultant_oracle(&[], &[4]), Err(Error::OutOfRange(_))));
    }
}
