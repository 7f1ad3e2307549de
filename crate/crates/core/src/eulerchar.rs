//! Class-sum engines for `χ_h` of `GL_m(ℤ)`, `SL_m(ℤ)` and `Γ₁(m,p)`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::characters::{trace_highest_weight, HighestWeight};
use crate::error::{Error, Result};
use crate::exactmath::ExactRational;
use crate::torsion::{enumerate_classes, TorsionClass, MAX_RANK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    GL,
    SL,
    Gamma1,
    Gamma1SL,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::GL => "gl",
            Group::SL => "sl",
            Group::Gamma1 => "gamma1",
            Group::Gamma1SL => "gamma1-sl",
        }
    }

    pub fn needs_prime(self) -> bool {
        matches!(self, Group::Gamma1 | Group::Gamma1SL)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Group::GL),
            "sl" => Ok(Group::SL),
            "gamma1" => Ok(Group::Gamma1),
            "gamma1-sl" => Ok(Group::Gamma1SL),
            _ => Err(Error::OutOfRange(format!("unknown group {s:?}"))),
        }
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// One summand `R(A)·χ(C(A))·Tr(A|V)`, optionally scaled by a `Γ₁` weight factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassContribution {
    pub label: String,
    #[serde(rename = "R", serialize_with = "ser_bigint")]
    pub r: BigInt,
    #[serde(rename = "chiC")]
    pub chi_c: ExactRational,
    #[serde(serialize_with = "ser_bigint")]
    pub trace: BigInt,
    pub contribution: ExactRational,
    #[serde(rename = "weightFactor", skip_serializing_if = "Option::is_none")]
    pub weight_factor: Option<ExactRational>,
}

impl ClassContribution {
    fn new(cls: &TorsionClass, trace: BigInt, weight_factor: Option<ExactRational>) -> Self {
        let r = cls.resultant();
        let chi_c = cls.centralizer_chi();
        let mut contribution = &(&ExactRational::from(r.clone()) * &chi_c) * &ExactRational::from(trace.clone());
        if let Some(w) = &weight_factor {
            contribution = &contribution * w;
        }
        ClassContribution { label: cls.label(), r, chi_c, trace, contribution, weight_factor }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiResult {
    pub group: Group,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(serialize_with = "ser_weight")]
    pub weight: HighestWeight,
    pub chi: ExactRational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma1: Option<ExactRational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma2: Option<ExactRational>,
    pub breakdown: Vec<ClassContribution>,
}

fn ser_weight<S: Serializer>(w: &HighestWeight, s: S) -> std::result::Result<S::Ok, S::Error> {
    w.parts().serialize(s)
}

fn check_weight(m: usize, weight: &HighestWeight) -> Result<()> {
    if m == 0 {
        return Err(Error::RankTooSmall { min: 1, got: 0 });
    }
    if weight.rank() != m {
        return Err(Error::RankMismatch { expected: m, got: weight.rank() });
    }
    Ok(())
}

/// Accepts exactly the primes `p ≥ 5`.
pub fn check_prime(p: u64) -> Result<()> {
    let prime = p >= 5 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if prime {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

fn classes(m: usize) -> Vec<TorsionClass> {
    if m > MAX_RANK {
        Vec::new()
    } else {
        enumerate_classes(m)
    }
}

// Tr(A|V) + Tr(A|V⊗det) when `induced`, else Tr(A|V).
fn class_trace(cls: &TorsionClass, weight: &HighestWeight, induced: bool) -> Result<BigInt> {
    let t = trace_highest_weight(cls, weight)?;
    if induced {
        Ok(t + trace_highest_weight(cls, &weight.det_twist(1))?)
    } else {
        Ok(t)
    }
}

fn sum(breakdown: &[ClassContribution]) -> ExactRational {
    breakdown.iter().map(|c| &c.contribution).sum()
}

fn class_sum(m: usize, weight: &HighestWeight, group: Group) -> Result<ChiResult> {
    check_weight(m, weight)?;
    let induced = group == Group::SL;
    let breakdown = classes(m)
        .iter()
        .map(|cls| Ok(ClassContribution::new(cls, class_trace(cls, weight, induced)?, None)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChiResult {
        group,
        m,
        p: None,
        weight: weight.clone(),
        chi: sum(&breakdown),
        sigma1: None,
        sigma2: None,
        breakdown,
    })
}

/// `χ_h(GL_m(ℤ), V_λ) = Σ_A R(A) χ(C(A)) Tr(A|V_λ)`.
pub fn chi_gl_result(m: usize, weight: &HighestWeight) -> Result<ChiResult> {
    class_sum(m, weight, Group::GL)
}

pub fn chi_gl(m: usize, weight: &HighestWeight) -> Result<ExactRational> {
    Ok(chi_gl_result(m, weight)?.chi)
}

/// `χ_h(SL_m(ℤ), V) = χ_h(GL_m(ℤ), V) + χ_h(GL_m(ℤ), V⊗det)`; the breakdown
/// carries the summed trace per class.
pub fn chi_sl_result(m: usize, weight: &HighestWeight) -> Result<ChiResult> {
    class_sum(m, weight, Group::SL)
}

pub fn chi_sl(m: usize, weight: &HighestWeight) -> Result<ExactRational> {
    Ok(chi_sl_result(m, weight)?.chi)
}

/// `Σ⁽ᵏ⁾`: the class sum restricted to classes whose eigenvalue 1 has multiplicity k.
pub fn sigma(m: usize, weight: &HighestWeight, k: u8) -> Result<ExactRational> {
    if !(1..=2).contains(&k) {
        return Err(Error::OutOfRange(format!("sigma index {k} is not 1 or 2")));
    }
    let all = chi_gl_result(m, weight)?;
    Ok(classes(m)
        .iter()
        .zip(&all.breakdown)
        .filter(|(cls, _)| cls.unit_multiplicity() == k)
        .map(|(_, c)| &c.contribution)
        .sum())
}

fn gamma1(m: usize, p: u64, weight: &HighestWeight, group: Group) -> Result<ChiResult> {
    check_prime(p)?;
    if m < 2 {
        return Err(Error::RankTooSmall { min: 2, got: m });
    }
    check_weight(m, weight)?;
    let induced = group == Group::Gamma1SL;
    let p_big = ExactRational::from(p as i64);
    let phi1 = &p_big - &ExactRational::one();
    let phi2 = &(&p_big * &p_big) - &ExactRational::one();
    let mut breakdown = Vec::new();
    let mut sigmas = [ExactRational::zero(), ExactRational::zero()];
    for cls in classes(m) {
        let factor = match cls.unit_multiplicity() {
            1 => &phi1,
            2 => &phi2,
            _ => continue,
        };
        let plain = ClassContribution::new(&cls, class_trace(&cls, weight, induced)?, None);
        sigmas[cls.unit_multiplicity() as usize - 1] += &plain.contribution;
        breakdown.push(ClassContribution::new(&cls, plain.trace, Some(factor.clone())));
    }
    let chi = sum(&breakdown);
    let [sigma1, sigma2] = sigmas;
    debug_assert_eq!(chi, &(&phi1 * &sigma1) + &(&phi2 * &sigma2));
    Ok(ChiResult {
        group,
        m,
        p: Some(p),
        weight: weight.clone(),
        chi,
        sigma1: Some(sigma1),
        sigma2: Some(sigma2),
        breakdown,
    })
}

/// `χ_h(Γ₁(m,p), V) = (p−1)·Σ⁽¹⁾ + (p²−1)·Σ⁽²⁾`.
pub fn chi_gamma1_result(m: usize, p: u64, weight: &HighestWeight) -> Result<ChiResult> {
    gamma1(m, p, weight, Group::Gamma1)
}

pub fn chi_gamma1(m: usize, p: u64, weight: &HighestWeight) -> Result<ExactRational> {
    Ok(chi_gamma1_result(m, p, weight)?.chi)
}

/// `Γ₁(m,p) ∩ SL_m(ℤ)`, by summing the `V` and `V⊗det` values.
pub fn chi_gamma1_sl_result(m: usize, p: u64, weight: &HighestWeight) -> Result<ChiResult> {
    gamma1(m, p, weight, Group::Gamma1SL)
}

pub fn chi_gamma1_sl(m: usize, p: u64, weight: &HighestWeight) -> Result<ExactRational> {
    Ok(chi_gamma1_sl_result(m, p, weight)?.chi)
}

/// Dispatches on the group; `p` is required exactly for the `Γ₁` groups.
pub fn compute(group: Group, m: usize, p: Option<u64>, weight: &HighestWeight) -> Result<ChiResult> {
    match (group, p) {
        (Group::GL, None) => chi_gl_result(m, weight),
        (Group::SL, None) => chi_sl_result(m, weight),
        (Group::Gamma1, Some(p)) => chi_gamma1_result(m, p, weight),
        (Group::Gamma1SL, Some(p)) => chi_gamma1_sl_result(m, p, weight),
        (g, Some(_)) => Err(Error::OutOfRange(format!("group {g} takes no prime"))),
        (g, None) => Err(Error::OutOfRange(format!("group {g} requires a prime"))),
    }
}
