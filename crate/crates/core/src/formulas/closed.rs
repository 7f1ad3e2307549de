use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::characters::{dim_rep, trace_highest_weight, HighestWeight};
use crate::error::{Error, Result};
use crate::eulerchar::{check_prime, chi_gamma1, chi_gamma1_sl, chi_gl, chi_sl};
use crate::exactmath::ExactRational;
use crate::torsion::TorsionClass;

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

fn int(n: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(n)
}

/// `(p − 1, p² − 1)` as exact rationals.
pub fn phi_weights(p: u64) -> (ExactRational, ExactRational) {
    let p = BigInt::from(p);
    (int(&p - 1), int(&p * &p - 1))
}

fn half(x: &ExactRational) -> ExactRational {
    x * &q(1, 2)
}

fn w(parts: Vec<i64>) -> HighestWeight {
    HighestWeight::new(parts).expect("closed-form weights are dominant")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficient {
    Trivial,
    Det,
}

impl Coefficient {
    pub const ALL: [Coefficient; 2] = [Coefficient::Trivial, Coefficient::Det];

    pub fn weight(self, rank: usize) -> HighestWeight {
        match self {
            Coefficient::Trivial => HighestWeight::trivial(rank),
            Coefficient::Det => HighestWeight::determinant(rank),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Coefficient::Trivial => "trivial",
            Coefficient::Det => "det",
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    PaperStated,
    Recomputed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FormValue {
    Rational(ExactRational),
    Dims(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormValue {
    pub id: String,
    pub variant: Variant,
    pub inputs: Vec<(String, i64)>,
    pub value: FormValue,
}

impl ClosedFormValue {
    fn stated(id: &str, inputs: &[(&str, i64)], value: ExactRational) -> Self {
        ClosedFormValue {
            id: id.to_string(),
            variant: Variant::PaperStated,
            inputs: inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            value: FormValue::Rational(value),
        }
    }

    pub fn rational(&self) -> Option<&ExactRational> {
        match &self.value {
            FormValue::Rational(r) => Some(r),
            FormValue::Dims(_) => None,
        }
    }
}

// ---------------------------------------------------------------- rank two tables

/// Closed forms of the `GL₂`/`SL₂` table at `m = 12ℓ + k`:
/// `[χ_h(GL₂, V_m), χ_h(GL₂, V_m ⊗ det), χ_h(SL₂, V_m)]`.
pub fn sl2_gl2_table_row(m: u64) -> [ExactRational; 3] {
    let l = (m / 12) as i64;
    let (gl, twisted, sl) = match m % 12 {
        0 => (-l + 1, -l, -2 * l + 1),
        10 => (-l - 1, -l - 2, -2 * l - 3),
        k if k % 2 == 1 => (0, 0, 0),
        _ => (-l, -l - 1, -2 * l - 1),
    };
    [int(gl), int(twisted), int(sl)]
}

/// `dim S_k(SL₂(ℤ))` through the engine: `−χ_h(GL₂(ℤ), Sym^{k−2})` for even
/// `k ≥ 4`, zero otherwise.
pub fn dim_cusp_full_level(k: i64) -> Result<BigInt> {
    if k < 4 || k % 2 == 1 {
        return Ok(BigInt::from(0));
    }
    let chi = chi_gl(2, &w(vec![k - 2, 0]))?;
    let d = (-chi).to_integer().ok_or_else(|| Error::Consistency("non-integral GL2 value".into()))?;
    Ok(d.max(BigInt::from(0)))
}

fn s_full(k: i64) -> Result<ExactRational> {
    Ok(int(dim_cusp_full_level(k)?))
}

/// `dim S_k(Γ₁(p))`: `1 + (p²−1)/24 − (p−1)/2` at `k = 2`, and
/// `(k−1)(p²−1)/24 − (p−1)/2` for `k ≥ 3`.
pub fn dim_cusp_gamma1p(k: i64, p: u64) -> Result<BigInt> {
    check_prime(p)?;
    if k < 2 {
        return Err(Error::OutOfRange(format!("cusp weight {k} < 2")));
    }
    let (phi1, phi2) = phi_weights(p);
    let base = &(&q(k - 1, 24) * &phi2) - &half(&phi1);
    let value = if k == 2 { &base + &ExactRational::one() } else { base };
    match value.to_integer() {
        Some(d) if !value.is_negative() => Ok(d),
        _ => Err(Error::OutOfRange(format!("dim S_{k}(Γ1({p})) evaluates to {value}"))),
    }
}

/// Riemann–Roch for `X₁(p)`, `p ≥ 5`: genus `1 + μ/12 − c/2` with index
/// `μ = (p²−1)/2` and `c = p − 1` cusps, all regular, no elliptic points.
pub fn dim_cusp_gamma1p_classical(k: i64, p: u64) -> Result<BigInt> {
    check_prime(p)?;
    let p = BigInt::from(p);
    let mu = (&p * &p - 1) / 2;
    let cusps = &p - 1;
    let genus_twice = BigInt::from(2) + &mu / 6 - &cusps;
    if k == 2 {
        return Ok(genus_twice / 2);
    }
    if k < 2 {
        return Err(Error::OutOfRange(format!("cusp weight {k} < 2")));
    }
    // (k−1)(g−1) + (k−2)c/2
    let twice = BigInt::from(k - 1) * (&genus_twice - 2) + BigInt::from(k - 2) * &cusps;
    Ok(twice / 2)
}

// ---------------------------------------------------------------- Γ₁(2,p)

fn phi_and_half(p: u64) -> Result<(u64, u64)> {
    check_prime(p)?;
    Ok((p - 1, (p - 1) / 2))
}

/// Boundary cohomology `(dim H⁰_∂, dim H¹_∂)` of `Γ₁(2,p)` with `S^n` or `S^n ⊗ det`.
pub fn gamma1_2p_boundary(n: u64, twisted: bool, p: u64) -> Result<(u64, u64)> {
    let (phi, half_phi) = phi_and_half(p)?;
    Ok(match (n.is_multiple_of(2), twisted) {
        (true, false) => (phi, 0),
        (true, true) => (0, phi),
        (false, _) => (half_phi, half_phi),
    })
}

/// Eisenstein cohomology `(dim H⁰_Eis, dim H¹_Eis)` of `Γ₁(2,p)`.
pub fn gamma1_2p_eisenstein(n: u64, twisted: bool, p: u64) -> Result<(u64, u64)> {
    let (phi, half_phi) = phi_and_half(p)?;
    Ok(match (n, n.is_multiple_of(2), twisted) {
        (0, _, false) => (1, 0),
        (0, _, true) => (0, phi - 1),
        (_, true, false) => (0, 0),
        (_, true, true) => (0, phi),
        (_, false, _) => (0, half_phi),
    })
}

/// Cuspidal `H¹` of `Γ₁(2,p)`, equal to `dim S_{n+2}(Γ₁(p))` for both twists.
pub fn gamma1_2p_cusp(n: u64, _twisted: bool, p: u64) -> Result<BigInt> {
    dim_cusp_gamma1p(n as i64 + 2, p)
}

/// The cuspidal dimension as `dim H⁰ − χ_h − dim H¹_Eis`, with `χ_h` from the engine.
pub fn gamma1_2p_cusp_recomputed(n: u64, twisted: bool, p: u64) -> Result<ExactRational> {
    let (e0, e1) = gamma1_2p_eisenstein(n, twisted, p)?;
    let chi = chi_gamma1(2, p, &sym_weight(n, twisted))?;
    Ok(&(&int(e0) - &chi) - &int(e1))
}

/// `S^n`, or `S^n ⊗ det = (n+1, 1)`.
pub fn sym_weight(n: u64, twisted: bool) -> HighestWeight {
    let base = w(vec![n as i64, 0]);
    if twisted {
        base.det_twist(1)
    } else {
        base
    }
}

/// `χ_h(Γ₁(2,p), S^n) = ¼(1+(−1)ⁿ)φ(p) − (n+1)/24·φ₂(p)`, and the same with the
/// first sign reversed for `S^n ⊗ det`.
pub fn gamma1_2p_chi_stated(n: u64, twisted: bool, p: u64) -> Result<ExactRational> {
    check_prime(p)?;
    let (phi1, phi2) = phi_weights(p);
    let even = if n.is_multiple_of(2) { 2 } else { 0 };
    let first = &q(even, 4) * &phi1;
    let second = &q(n as i64 + 1, 24) * &phi2;
    Ok(if twisted { &(-first) - &second } else { &first - &second })
}

/// The two-term formula with a plus sign in front of the dimension term, evaluated on
/// engine traces.
pub fn gamma1_2p_chi_alt(p: u64, weight: &HighestWeight) -> Result<ExactRational> {
    check_prime(p)?;
    let (phi1, phi2) = phi_weights(p);
    let tr = int(trace_highest_weight(&TorsionClass::new([1, 1, 0, 0, 0])?, weight)?);
    let dim = int(dim_rep(2, weight)?);
    Ok(&(&half(&phi1) * &tr) + &(&(&phi2 * &q(1, 24)) * &dim))
}

/// Tabulated traces at rank two: `Tr([1,−1] | S^n)`, `Tr([1,−1] | S^n ⊗ det)`
/// `= −½(1 − (−1)ⁿ)`, and `n + 1` at `I₂` for both.
pub fn gl2_trace_stated(identity: bool, twisted: bool, n: u64) -> BigInt {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    match (identity, twisted) {
        (true, _) => BigInt::from(n + 1),
        (false, false) => BigInt::from((1 + sign) / 2),
        (false, true) => BigInt::from(-(1 - sign) / 2),
    }
}

// ---------------------------------------------------------------- rank three

/// Parity cases of weights `(λ₁, λ₂, λ₃)` with `λ₃ ∈ {0, 1}`, labeled (a)–(h).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityCase {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl ParityCase {
    pub const ALL: [ParityCase; 8] = [
        ParityCase::A,
        ParityCase::B,
        ParityCase::C,
        ParityCase::D,
        ParityCase::E,
        ParityCase::F,
        ParityCase::G,
        ParityCase::H,
    ];

    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }

    /// The weight indexed by `(a, b)`, if dominant.
    pub fn weight(self, a: i64, b: i64) -> Option<HighestWeight> {
        let parts = match self {
            ParityCase::A => [2 * a, 2 * b, 0],
            ParityCase::B => [2 * a + 1, 2 * b + 1, 1],
            ParityCase::C => [2 * a + 1, 2 * b, 0],
            ParityCase::D => [2 * a + 2, 2 * b + 1, 1],
            ParityCase::E => [2 * a + 1, 2 * b + 1, 0],
            ParityCase::F => [2 * a + 2, 2 * b + 2, 1],
            ParityCase::G => [2 * a, 2 * b + 1, 0],
            ParityCase::H => [2 * a + 1, 2 * b + 2, 1],
        };
        if a < 0 || b < 0 {
            return None;
        }
        HighestWeight::new(parts.to_vec()).ok()
    }

    /// Inverse of [`ParityCase::weight`].
    pub fn classify(weight: &HighestWeight) -> Option<(ParityCase, i64, i64)> {
        let &[x, y, z] = weight.parts() else {
            return None;
        };
        if x < y || y < z {
            return None;
        }
        let (case, a2, b2) = match (z, x % 2 == 0, y % 2 == 0) {
            (0, true, true) => (ParityCase::A, x, y),
            (0, false, true) => (ParityCase::C, x - 1, y),
            (0, false, false) => (ParityCase::E, x - 1, y - 1),
            (0, true, false) => (ParityCase::G, x, y - 1),
            (1, false, false) => (ParityCase::B, x - 1, y - 1),
            (1, true, false) => (ParityCase::D, x - 2, y - 1),
            (1, true, true) => (ParityCase::F, x - 2, y - 2),
            (1, false, true) => (ParityCase::H, x - 1, y - 2),
            _ => return None,
        };
        Some((case, a2 / 2, b2 / 2))
    }
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.letter())
    }
}

/// The four rank-three parity classes for `SL₃(ℤ)`, keyed on `(λ₁, λ₂)` parities with `λ₃ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl3Case {
    EvenEven,
    OddOdd,
    EvenOdd,
    OddEven,
}

impl Sl3Case {
    pub const ALL: [Sl3Case; 4] = [Sl3Case::EvenEven, Sl3Case::OddOdd, Sl3Case::EvenOdd, Sl3Case::OddEven];

    pub fn label(self) -> &'static str {
        match self {
            Sl3Case::EvenEven => "[2a,2b]",
            Sl3Case::OddOdd => "[2a+1,2b+1]",
            Sl3Case::EvenOdd => "[2a,2b+1]",
            Sl3Case::OddEven => "[2a+1,2b]",
        }
    }

    pub fn weight(self, a: i64, b: i64) -> Option<HighestWeight> {
        let case = match self {
            Sl3Case::EvenEven => ParityCase::A,
            Sl3Case::OddOdd => ParityCase::E,
            Sl3Case::EvenOdd => ParityCase::G,
            Sl3Case::OddEven => ParityCase::C,
        };
        case.weight(a, b)
    }
}

/// `χ_h(SL₃(ℤ), V)` per parity class, in full-level cusp dimensions.
pub fn sl3_closed_chi(a: i64, b: i64, case: Sl3Case) -> Result<ClosedFormValue> {
    if b < 0 || a < b {
        return Err(Error::OutOfRange(format!("need a >= b >= 0, got a={a}, b={b}")));
    }
    let value = match case {
        Sl3Case::EvenEven => -(&(&ExactRational::one() + &s_full(2 * a - 2 * b + 2)?) + &s_full(2 * b + 2)?),
        Sl3Case::OddOdd | Sl3Case::OddEven => &s_full(2 * a + 4)? - &s_full(2 * b + 2)?,
        Sl3Case::EvenOdd => ExactRational::zero(),
    };
    Ok(ClosedFormValue::stated("sl3_closed_chi", &[("a", a), ("b", b)], value))
}

/// Tabulated `Tr([−1, I₂] | V)` on the eight parity cases.
pub fn trace_neg1_i2_paper(case: ParityCase, a: i64, b: i64) -> BigInt {
    BigInt::from(match case {
        ParityCase::A => a + 1,
        ParityCase::B => -(a + 1),
        ParityCase::C => -a + b - 1,
        ParityCase::D => a - b + 1,
        ParityCase::E => -(b + 1),
        ParityCase::F => b + 1,
        ParityCase::G | ParityCase::H => 0,
    })
}

/// `χ_h(Γ₁(3,p), V_λ)` by the eight-case closed form.
pub fn gamma1_3p_closed_chi(weight: &HighestWeight, p: u64) -> Result<ClosedFormValue> {
    check_prime(p)?;
    let (case, a, b) = ParityCase::classify(weight)
        .ok_or_else(|| Error::OutOfRange(format!("weight {weight} lies outside the eight parity cases")))?;
    let (phi1, phi2) = phi_weights(p);
    let h1 = half(&phi1);
    let t12 = &phi2 * &q(1, 12);
    let first_ab = &(&ExactRational::one() + &s_full(2 * a - 2 * b + 2)?) + &s_full(2 * b + 2)?;
    let value = match case {
        ParityCase::A => &(-(&h1 * &first_ab)) - &(&t12 * &int(a + 1)),
        ParityCase::B => &(-(&h1 * &first_ab)) + &(&t12 * &int(a + 1)),
        ParityCase::C => &(&h1 * &(&s_full(2 * a + 4)? - &s_full(2 * b + 2)?)) - &(&t12 * &int(a - b + 1)),
        ParityCase::D => &(&h1 * &(&s_full(2 * a + 4)? - &s_full(2 * b + 2)?)) + &(&t12 * &int(a - b + 1)),
        ParityCase::E => &(&h1 * &(&s_full(2 * a + 4)? - &s_full(2 * a - 2 * b + 2)?)) + &(&t12 * &int(b + 1)),
        ParityCase::F => &(&h1 * &(&s_full(2 * a + 4)? - &s_full(2 * a - 2 * b + 2)?)) - &(&t12 * &int(b + 1)),
        ParityCase::G | ParityCase::H => ExactRational::zero(),
    };
    Ok(ClosedFormValue::stated("gamma1_3p_closed_chi", &[("p", p as i64), ("a", a), ("b", b)], value))
}

/// `χ_h(Γ₁(3,p), V) = (p−1)/2·χ_h(GL₃(ℤ), V) − (p²−1)/12·Tr([−1,1,1] | V)`,
/// evaluated on engine ingredients.
pub fn gamma1_3p_chi_reduction(p: u64, weight: &HighestWeight) -> Result<ExactRational> {
    check_prime(p)?;
    let (phi1, phi2) = phi_weights(p);
    let gl = chi_gl(3, weight)?;
    let tr = int(trace_highest_weight(&TorsionClass::new([2, 1, 0, 0, 0])?, weight)?);
    Ok(&(&half(&phi1) * &gl) - &(&(&phi2 * &q(1, 12)) * &tr))
}

/// `χ_h(Γ₁(3,p), ℂ) = −(p²−1)/12 − (p−1)/2` and `χ_h(Γ₁(3,p), det) = (p²−1)/12 − (p−1)/2`.
pub fn gamma1_3p_coefficient_chi(coeff: Coefficient, p: u64) -> Result<ExactRational> {
    check_prime(p)?;
    let (phi1, phi2) = phi_weights(p);
    let t12 = &phi2 * &q(1, 12);
    Ok(match coeff {
        Coefficient::Trivial => &(-t12) - &half(&phi1),
        Coefficient::Det => &t12 - &half(&phi1),
    })
}

// ---------------------------------------------------------------- profiles

/// Cohomology dimensions `(dim H⁰, dim H¹, …)` with the engine check attached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyProfile {
    pub group: String,
    pub coefficient: String,
    pub dims: Vec<i64>,
    #[serde(rename = "engineChi")]
    pub engine_chi: ExactRational,
    #[serde(rename = "engineConsistent")]
    pub engine_consistent: bool,
}

impl CohomologyProfile {
    fn new(group: String, coefficient: &str, dims: Vec<i64>, engine_chi: ExactRational) -> Self {
        let engine_consistent = alternating_sum(&dims) == engine_chi;
        CohomologyProfile { group, coefficient: coefficient.to_string(), dims, engine_chi, engine_consistent }
    }

    pub fn alternating_sum(&self) -> ExactRational {
        alternating_sum(&self.dims)
    }
}

fn alternating_sum(dims: &[i64]) -> ExactRational {
    int(dims.iter().enumerate().map(|(i, d)| if i % 2 == 0 { *d } else { -d }).sum::<i64>())
}

fn exact_int(x: &ExactRational) -> Result<i64> {
    x.to_integer()
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| Error::OutOfRange(format!("dimension {x} is not a machine integer")))
}

fn dim(x: impl Into<BigInt>) -> Result<i64> {
    exact_int(&int(x))
}

fn twelfth_and_half(p: u64) -> Result<(i64, i64)> {
    let (phi1, phi2) = phi_weights(p);
    Ok((exact_int(&(&phi2 * &q(1, 12)))?, exact_int(&half(&phi1))?))
}

/// Cohomology of `Γ₁(3,p)`: `(1, 0, 0, (p²−1)/12 + (p−1)/2 + 1)` for ℂ and
/// `(0, 0, (p²−1)/12 − (p−1)/2, 0)` for det.
pub fn gamma1_3p_cohomology(coeff: Coefficient, p: u64) -> Result<CohomologyProfile> {
    check_prime(p)?;
    let (t, h) = twelfth_and_half(p)?;
    let dims = match coeff {
        Coefficient::Trivial => vec![1, 0, 0, t + h + 1],
        Coefficient::Det => vec![0, 0, t - h, 0],
    };
    let chi = chi_gamma1(3, p, &coeff.weight(3))?;
    Ok(CohomologyProfile::new(format!("Gamma1(3,{p})"), coeff.name(), dims, chi))
}

/// The same spaces as modules: `H³(ℂ) = 2S₂(Γ₁(p)) + (−1 + (p−1)/2)ℂ` and
/// `H²(det) = φ(p)ℂ + S₃(Γ₁(p))`, with the cusp dimensions substituted.
pub fn gamma1_3p_cohomology_modules(coeff: Coefficient, p: u64) -> Result<CohomologyProfile> {
    check_prime(p)?;
    let (_, h) = twelfth_and_half(p)?;
    let dims = match coeff {
        Coefficient::Trivial => vec![1, 0, 0, 2 * dim(dim_cusp_gamma1p(2, p)?)? - 1 + h],
        Coefficient::Det => vec![0, 0, p as i64 - 1 + dim(dim_cusp_gamma1p(3, p)?)?, 0],
    };
    let chi = chi_gamma1(3, p, &coeff.weight(3))?;
    Ok(CohomologyProfile::new(format!("Gamma1(3,{p})"), coeff.name(), dims, chi))
}

/// Cohomology of `Γ₁(3,p) ∩ SL₃(ℤ)` as `(1, 0, (p²−1)/12 − (p−1)/2, (p²−1)/12 + (p−1)/2 + 1)`.
pub fn gamma1_3p_plus_cohomology(p: u64) -> Result<CohomologyProfile> {
    check_prime(p)?;
    let (t, h) = twelfth_and_half(p)?;
    let chi = chi_gamma1_sl(3, p, &HighestWeight::trivial(3))?;
    Ok(CohomologyProfile::new(format!("Gamma1+(3,{p})"), "trivial", vec![1, 0, t - h, t + h + 1], chi))
}

/// `(1, 0, dim S₃ + (p−1), 2·dim S₂ + (p−1)/2 − 1)` for `Γ₁(3,p) ∩ SL₃(ℤ)`, with
/// cusp dimensions of `Γ₁(p)`.
pub fn lee_schwermer_profile(p: u64) -> Result<CohomologyProfile> {
    check_prime(p)?;
    let s2 = dim(dim_cusp_gamma1p(2, p)?)?;
    let s3 = dim(dim_cusp_gamma1p(3, p)?)?;
    let h = (p as i64 - 1) / 2;
    let dims = vec![1, 0, s3 + p as i64 - 1, 2 * s2 + h - 1];
    let chi = chi_gamma1_sl(3, p, &HighestWeight::trivial(3))?;
    Ok(CohomologyProfile::new(format!("Gamma1+(3,{p})"), "trivial", dims, chi))
}

/// `ℂ` in degree 0 for trivial coefficients, `ℂ` in degree 3 for det.
pub fn gl4_cohomology(coeff: Coefficient) -> Result<CohomologyProfile> {
    let dims = match coeff {
        Coefficient::Trivial => vec![1, 0, 0, 0],
        Coefficient::Det => vec![0, 0, 0, 1],
    };
    let chi = chi_gl(4, &coeff.weight(4))?;
    Ok(CohomologyProfile::new("GL4(Z)".into(), coeff.name(), dims, chi))
}

/// `SL_m(ℤ)` with trivial coefficients for `m ∈ {4, 5}`: `ℂ` in degrees `0` and `m − 1` resp. `0` and `5`.
pub fn sl_cohomology(m: usize) -> Result<CohomologyProfile> {
    let top = match m {
        4 => 3,
        5 => 5,
        _ => return Err(Error::OutOfRange(format!("no stated profile for SL{m}(Z)"))),
    };
    let mut dims = vec![0; top + 1];
    dims[0] = 1;
    dims[top] = 1;
    let chi = chi_sl(m, &HighestWeight::trivial(m))?;
    Ok(CohomologyProfile::new(format!("SL{m}(Z)"), "trivial", dims, chi))
}

// ---------------------------------------------------------------- ranks four and five

/// `Σ⁽ᵏ⁾` at rank four: `Σ⁽¹⁾(ℂ) = 1`, `Σ⁽¹⁾(det) = −1`, `Σ⁽²⁾ = −1/12` for both.
pub fn sigma_m4_stated(coeff: Coefficient, k: u8) -> Result<ExactRational> {
    Ok(match (k, coeff) {
        (1, Coefficient::Trivial) => q(1, 1),
        (1, Coefficient::Det) => q(-1, 1),
        (2, _) => q(-1, 12),
        _ => return Err(Error::OutOfRange(format!("sigma index {k} is not 1 or 2"))),
    })
}

/// `χ_h(Γ₁(4,p), ℂ) = (p−1) − (p²−1)/12` and `χ_h(Γ₁(4,p), det) = −(p−1) − (p²−1)/12`.
pub fn gamma1_4p_chi(coeff: Coefficient, p: u64) -> Result<ExactRational> {
    check_prime(p)?;
    let (phi1, phi2) = phi_weights(p);
    let t = &phi2 * &q(1, 12);
    Ok(match coeff {
        Coefficient::Trivial => &phi1 - &t,
        Coefficient::Det => &(-phi1) - &t,
    })
}

/// Which of the two printed statements of the rank-five values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gamma15Statement {
    /// `−(p²−1)/3` for ℂ and `+(p²−1)/3` for det.
    Summary,
    /// `−(p²−1)/3` for both.
    Final,
}

impl Gamma15Statement {
    pub fn name(self) -> &'static str {
        match self {
            Gamma15Statement::Summary => "summary",
            Gamma15Statement::Final => "final",
        }
    }
}

pub fn gamma1_5p_chi(coeff: Coefficient, p: u64, statement: Gamma15Statement) -> Result<ExactRational> {
    check_prime(p)?;
    let third = &phi_weights(p).1 * &q(1, 3);
    Ok(match (coeff, statement) {
        (Coefficient::Det, Gamma15Statement::Summary) => third,
        _ => -third,
    })
}

/// Stated three-class partial sums at rank five. The `[1,T_i,T_j]` sum
/// `12/72 + 6/48 + 2/48 = 1/3` is given for ℂ only; the `[−1,T_i,T_j]` sum is
/// given as `1/3` for ℂ and `−1/3` for det.
pub fn sigma_m5_partial_stated(unit: i8, coeff: Coefficient) -> Option<ExactRational> {
    match (unit > 0, coeff) {
        (_, Coefficient::Trivial) => Some(q(1, 3)),
        (false, Coefficient::Det) => Some(q(-1, 3)),
        (true, Coefficient::Det) => None,
    }
}

/// Engine value of the partial sum over the three classes with one block `unit`
/// (`1` or `−1`) and two distinct blocks among `T₃, T₄, T₆`.
pub fn sigma_m5_partial(unit: i8, coeff: Coefficient) -> Result<ExactRational> {
    let weight = coeff.weight(5);
    let (a, b) = if unit > 0 { (1, 0) } else { (0, 1) };
    let mut total = ExactRational::zero();
    for (c, d, e) in [(1, 1, 0), (1, 0, 1), (0, 1, 1)] {
        let cls = TorsionClass::new([a, b, c, d, e])?;
        let term = &(&int(cls.resultant()) * &cls.centralizer_chi()) * &int(trace_highest_weight(&cls, &weight)?);
        total += term;
    }
    Ok(total)
}
