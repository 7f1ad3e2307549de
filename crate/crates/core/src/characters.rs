//! Characters of irreducible `GL_m` representations at torsion classes.
//!
//! The main route factors `λ = μ + k·(1,…,1)` with `μ` a partition, evaluates the
//! complete homogeneous symmetric functions of the eigenvalues through the
//! linear recurrence given by the characteristic polynomial, and takes the
//! Jacobi–Trudi determinant `det(h_{μ_i − i + j})`. An independent oracle sums
//! eigenvalue monomials over semistandard tableaux in ℚ(ζ₁₂).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{bareiss_determinant, Cyc12, ExactRational, IntPolynomial};
use crate::torsion::TorsionClass;

/// Dominant weight `λ₁ ≥ … ≥ λ_m` in ε-coordinates; negative parts are allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight {
    parts: Vec<i64>,
}

impl HighestWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::RankTooSmall { min: 1, got: 0 });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(parts));
        }
        Ok(HighestWeight { parts })
    }

    pub fn trivial(rank: usize) -> Self {
        HighestWeight { parts: vec![0; rank] }
    }

    /// The determinant character `(1, …, 1)`.
    pub fn determinant(rank: usize) -> Self {
        HighestWeight { parts: vec![1; rank] }
    }

    /// `Sym^n` of the standard representation, `(n, 0, …, 0)`.
    pub fn symmetric_power(rank: usize, n: i64) -> Result<Self> {
        let mut parts = vec![0; rank];
        if let Some(first) = parts.first_mut() {
            *first = n;
        }
        HighestWeight::new(parts)
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// `λ + k·(1, …, 1)`, i.e. `V_λ ⊗ det^k`.
    pub fn det_twist(&self, k: i64) -> HighestWeight {
        HighestWeight { parts: self.parts.iter().map(|x| x + k).collect() }
    }

    /// `(μ, k)` with `λ = μ + k·(1,…,1)`, `k = λ_m` and `μ` a partition.
    pub fn normalize(&self) -> (Vec<usize>, i64) {
        let k = *self.parts.last().expect("weights are nonempty");
        let mu = self.parts.iter().map(|x| (x - k) as usize).collect();
        (mu, k)
    }

    /// `|μ|` of the partition part.
    pub fn partition_size(&self) -> usize {
        self.normalize().0.iter().sum()
    }

    /// Whether `−I` acts trivially, i.e. `Σλ_i` is even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().sum::<i64>().rem_euclid(2) == 0
    }

    /// Comma-separated parts, the CLI input form.
    pub fn to_list_string(&self) -> String {
        self.parts.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_list_string())
    }
}

impl fmt::Debug for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HighestWeight{self}")
    }
}

impl FromStr for HighestWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::OutOfRange(format!("malformed weight {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        HighestWeight::new(parts)
    }
}

/// `h_0, h_1, …, h_N` for a fixed multiset of eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSequence {
    values: Vec<BigInt>,
}

impl HSequence {
    /// `h_n`, with `h_n = 0` for negative n. Panics past the computed range.
    pub fn get(&self, n: i64) -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            self.values[n as usize].clone()
        }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Complete homogeneous symmetric functions of the roots of a monic polynomial,
/// from `Σ h_n tⁿ = 1 / (tᵐ f(1/t))`.
pub fn h_sequence_from_poly(poly: &IntPolynomial, n: usize) -> HSequence {
    assert!(poly.is_monic(), "characteristic polynomials are monic");
    let m = poly.degree();
    let c = poly.coeffs();
    let mut values: Vec<BigInt> = Vec::with_capacity(n + 1);
    values.push(BigInt::one());
    for i in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1..=m.min(i) {
            acc -= &c[m - k] * &values[i - k];
        }
        values.push(acc);
    }
    HSequence { values }
}

pub fn h_sequence(cls: &TorsionClass, n: usize) -> HSequence {
    h_sequence_from_poly(&cls.char_poly(), n)
}

/// Character value of `V_λ` at an element with characteristic polynomial
/// `poly` and determinant `det`, by the Jacobi–Trudi determinant.
pub fn trace_from_char_poly(poly: &IntPolynomial, det: i32, weight: &HighestWeight) -> Result<BigInt> {
    let m = poly.degree();
    if weight.rank() != m {
        return Err(Error::RankMismatch { expected: m, got: weight.rank() });
    }
    let (mu, k) = weight.normalize();
    let h = h_sequence_from_poly(poly, mu[0] + m);
    let matrix: Vec<Vec<BigInt>> =
        (0..m).map(|i| (0..m).map(|j| h.get(mu[i] as i64 - i as i64 + j as i64)).collect()).collect();
    let schur = bareiss_determinant(&matrix);
    Ok(if det < 0 && k.rem_euclid(2) == 1 { -schur } else { schur })
}

/// `Tr(A | V_λ)` for a torsion class A.
pub fn trace_highest_weight(cls: &TorsionClass, weight: &HighestWeight) -> Result<BigInt> {
    if weight.rank() != cls.degree() {
        return Err(Error::RankMismatch { expected: cls.degree(), got: weight.rank() });
    }
    trace_from_char_poly(&cls.char_poly(), cls.det(), weight)
}

/// `dim V_λ`: the character at the identity of `GL_m`.
pub fn dim_rep(m: usize, weight: &HighestWeight) -> Result<BigInt> {
    let identity = IntPolynomial::from_i64(&[-1, 1]).pow(m as u32);
    trace_from_char_poly(&identity, 1, weight)
}

pub fn det_twist(weight: &HighestWeight, k: i64) -> HighestWeight {
    weight.det_twist(k)
}

/// `∏ (x − ζ^e)` with the product of roots, for a Galois-stable exponent multiset.
pub fn char_poly_from_exponents(exponents: &[i64]) -> Result<(IntPolynomial, i32)> {
    let mut coeffs = vec![Cyc12::one()];
    for &e in exponents {
        let root = Cyc12::root(e);
        let mut next = vec![Cyc12::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * &root);
        }
        coeffs = next;
    }
    let ints = coeffs
        .iter()
        .map(|c| c.to_rational().and_then(|r| r.to_integer()))
        .collect::<Option<Vec<BigInt>>>()
        .ok_or_else(|| Error::Consistency(format!("exponents {exponents:?} are not Galois stable")))?;
    let product = exponents.iter().map(|&e| Cyc12::root(e)).fold(Cyc12::one(), |acc, r| &acc * &r);
    let det = match product.to_rational() {
        Some(r) if r == ExactRational::one() => 1,
        Some(r) if r == ExactRational::from(-1) => -1,
        _ => return Err(Error::Consistency(format!("determinant of {exponents:?} is not ±1"))),
    };
    Ok((IntPolynomial::new(ints), det))
}

/// Character of `V_λ` at an element given only by its eigenvalue exponents.
pub fn trace_on_exponents(exponents: &[i64], weight: &HighestWeight) -> Result<BigInt> {
    let (poly, det) = char_poly_from_exponents(exponents)?;
    trace_from_char_poly(&poly, det, weight)
}

/// Rank bound of the tableau oracle.
pub const ORACLE_MAX_RANK: usize = 4;
/// Bound on `|μ|` for the tableau oracle.
pub const ORACLE_MAX_SIZE: usize = 12;

/// Schur character by direct summation over semistandard Young tableaux of shape μ
/// with entries in `1..=m`, each tableau contributing the product of its
/// eigenvalues `ζ^{e_i}`; the det-twist factor is the product of all eigenvalues.
pub fn trace_oracle_exponents(exponents: &[i64], weight: &HighestWeight) -> Result<ExactRational> {
    let m = exponents.len();
    if weight.rank() != m {
        return Err(Error::RankMismatch { expected: m, got: weight.rank() });
    }
    let (mu, k) = weight.normalize();
    let size: usize = mu.iter().sum();
    if m > ORACLE_MAX_RANK || size > ORACLE_MAX_SIZE {
        return Err(Error::ResourceLimit(format!(
            "tableau oracle limited to rank <= {ORACLE_MAX_RANK} and |mu| <= {ORACLE_MAX_SIZE}"
        )));
    }

    let shape: Vec<usize> = mu.iter().copied().filter(|&r| r > 0).collect();
    let mut counts = [0u64; 12];
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();
    fill_tableaux(&shape, m, 0, 0, &mut filling, exponents, &mut counts);

    let mut schur = Cyc12::zero();
    for (e, &count) in counts.iter().enumerate() {
        if count > 0 {
            schur = &schur + &(&Cyc12::from_rational(ExactRational::from(count as i64)) * &Cyc12::root(e as i64));
        }
    }

    let det = exponents.iter().map(|&e| Cyc12::root(e)).fold(Cyc12::one(), |acc, r| &acc * &r);
    // det = ±1 for torsion classes, so det^k = det^{|k|}
    let twist = (0..k.unsigned_abs()).fold(Cyc12::one(), |acc, _| &acc * &det);
    let value = &schur * &twist;
    let r =
        value.to_rational().ok_or_else(|| Error::Consistency(format!("tableau sum for {weight} is not rational")))?;
    if !r.is_integer() {
        return Err(Error::Consistency(format!("tableau sum for {weight} is not an integer: {r}")));
    }
    Ok(r)
}

pub fn trace_oracle(cls: &TorsionClass, weight: &HighestWeight) -> Result<ExactRational> {
    trace_oracle_exponents(&cls.root_exponents(), weight)
}

fn fill_tableaux(
    shape: &[usize],
    m: usize,
    row: usize,
    col: usize,
    filling: &mut Vec<Vec<usize>>,
    exponents: &[i64],
    counts: &mut [u64; 12],
) {
    if row == shape.len() {
        let e: i64 = filling.iter().flatten().map(|&v| exponents[v - 1]).sum();
        counts[e.rem_euclid(12) as usize] += 1;
        return;
    }
    let (next_row, next_col) = if col + 1 == shape[row] { (row + 1, 0) } else { (row, col + 1) };
    let left = if col > 0 { filling[row][col - 1] } else { 1 };
    let above = if row > 0 { filling[row - 1][col] + 1 } else { 1 };
    for v in left.max(above)..=m {
        filling[row][col] = v;
        fill_tableaux(shape, m, next_row, next_col, filling, exponents, counts);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torsion::enumerate_classes;

    fn cls(m: [u8; 5]) -> TorsionClass {
        TorsionClass::new(m).unwrap()
    }

    fn w(p: &[i64]) -> HighestWeight {
        HighestWeight::new(p.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn h_patterns_of_rank_two_blocks() {
        let h = h_sequence(&cls([2, 0, 0, 0, 0]), 5);
        assert_eq!(h.values(), ints(&[1, 2, 3, 4, 5, 6]).as_slice());
        let h = h_sequence(&cls([0, 0, 0, 1, 0]), 7);
        assert_eq!(h.values(), ints(&[1, 0, -1, 0, 1, 0, -1, 0]).as_slice());
        assert_eq!(h.get(-1), BigInt::zero());
    }

    #[test]
    fn h_of_minus_one_and_identity_block() {
        // eigenvalues {−1, 1, 1}: h_n = Σ_{j≤n} (−1)^j (n − j + 1) = ⌊n/2⌋ + 1
        let h = h_sequence(&cls([2, 1, 0, 0, 0]), 20);
        for n in 0..=20i64 {
            let direct: i64 = (0..=n).map(|j| if j % 2 == 0 { n - j + 1 } else { -(n - j + 1) }).sum();
            assert_eq!(h.get(n), BigInt::from(direct));
            assert_eq!(h.get(n), BigInt::from(n / 2 + 1));
        }
    }

    #[test]
    fn worked_traces() {
        for n in 0..12 {
            let t = trace_highest_weight(&cls([1, 1, 0, 0, 0]), &w(&[n, 0])).unwrap();
            assert_eq!(t, BigInt::from((1 + (-1i64).pow(n as u32)) / 2));
        }
        let c = cls([2, 1, 0, 0, 0]);
        assert_eq!(trace_highest_weight(&c, &w(&[0, 0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(trace_highest_weight(&c, &w(&[2, 0, 0])).unwrap(), BigInt::from(2));
        assert_eq!(trace_highest_weight(&c, &w(&[1, 0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(trace_highest_weight(&c, &w(&[1, 1, 0])).unwrap(), BigInt::from(-1));
        assert_eq!(trace_highest_weight(&c, &w(&[1, 1, 1])).unwrap(), BigInt::from(-1));
        // dual of the standard representation: eigenvalues are self-inverse
        assert_eq!(trace_highest_weight(&c, &w(&[0, 0, -1])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn worked_oracle_values() {
        assert_eq!(trace_oracle(&cls([2, 0, 0, 0, 0]), &w(&[1, 1])).unwrap(), ExactRational::from(1));
        assert_eq!(trace_oracle(&cls([0, 0, 1, 0, 0]), &w(&[1, 0])).unwrap(), ExactRational::from(-1));
        assert_eq!(trace_oracle(&cls([2, 1, 0, 0, 0]), &w(&[1, 1, 0])).unwrap(), ExactRational::from(-1));
    }

    #[test]
    fn oracle_guard() {
        assert!(matches!(trace_oracle(&cls([2, 0, 0, 0, 0]), &w(&[0, 0, 0])), Err(Error::RankMismatch { .. })));
        let big = cls([2, 0, 0, 0, 0]);
        assert!(matches!(trace_oracle(&big, &w(&[13, 0])), Err(Error::ResourceLimit(_))));
        let five = cls([1, 2, 1, 0, 0]);
        assert!(matches!(trace_oracle(&five, &w(&[0; 5])), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn dimensions() {
        for n in 0..30 {
            assert_eq!(dim_rep(2, &w(&[n, 0])).unwrap(), BigInt::from(n + 1));
        }
        assert_eq!(dim_rep(3, &w(&[1, 0, 0])).unwrap(), BigInt::from(3));
        // adjoint of GL3 plus trivial: (1,0,-1) has dimension 8
        assert_eq!(dim_rep(3, &w(&[1, 0, -1])).unwrap(), BigInt::from(8));
        assert_eq!(dim_rep(4, &w(&[1, 1, 0, 0])).unwrap(), BigInt::from(6));
    }

    #[test]
    fn twist_and_parse() {
        assert_eq!(det_twist(&w(&[5, 0]), 1), w(&[6, 1]));
        assert_eq!("2,1,0".parse::<HighestWeight>().unwrap(), w(&[2, 1, 0]));
        assert!(matches!("0,1".parse::<HighestWeight>(), Err(Error::NotDominant(_))));
        assert!("a,b".parse::<HighestWeight>().is_err());
        assert_eq!(w(&[3, 1, -2]).normalize(), (vec![5, 3, 0], -2));
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        assert!(matches!(
            trace_highest_weight(&cls([2, 0, 0, 0, 0]), &w(&[0, 0, 0])),
            Err(Error::RankMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn exponent_route_matches_class_route() {
        for m in 1..=5 {
            for c in enumerate_classes(m) {
                let (poly, det) = char_poly_from_exponents(&c.root_exponents()).unwrap();
                assert_eq!(poly, c.char_poly());
                assert_eq!(det, c.det());
            }
        }
    }

    #[test]
    fn twelve_step_difference_is_periodic() {
        // eigenvalues are 12th roots of unity of multiplicity ≤ 2, so h_{n+12} − h_n has period 12
        for m in 1..=6 {
            for c in enumerate_classes(m) {
                let h = h_sequence(&c, 80);
                for n in 0..=56 {
                    let d = h.get(n + 12) - h.get(n);
                    let d_next = h.get(n + 24) - h.get(n + 12);
                    assert_eq!(d, d_next, "{c} at {n}");
                }
            }
        }
    }
}
