use std::fmt;

use num_bigint::BigInt;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::closed::*;
use crate::characters::{trace_highest_weight, HighestWeight};
use crate::error::{Error, Result};
use crate::eulerchar::{check_prime, chi_gamma1, chi_gl, chi_sl, sigma};
use crate::exactmath::ExactRational;
use crate::torsion::TorsionClass;

pub const MAX_AUDIT_BOUND: u64 = 12;

/// Named integer parameters of one grid point, in a fixed order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Inputs(pub Vec<(&'static str, i64)>);

impl Inputs {
    fn with(mut self, key: &'static str, value: i64) -> Self {
        self.0.push((key, value));
        self
    }
}

impl fmt::Display for Inputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for Inputs {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRecord {
    pub family: &'static str,
    pub formula: String,
    pub inputs: Inputs,
    #[serde(rename = "paperStated")]
    pub paper_stated: ExactRational,
    pub recomputed: ExactRational,
    pub equal: bool,
}

struct Audit {
    records: Vec<AuditRecord>,
}

impl Audit {
    fn push(
        &mut self,
        family: &'static str,
        formula: impl Into<String>,
        inputs: Inputs,
        stated: ExactRational,
        recomputed: ExactRational,
    ) {
        let equal = stated == recomputed;
        self.records.push(AuditRecord {
            family,
            formula: formula.into(),
            inputs,
            paper_stated: stated,
            recomputed,
            equal,
        });
    }

    fn profile(&mut self, family: &'static str, formula: &str, inputs: Inputs, profile: CohomologyProfile) {
        let dims: Vec<String> = profile.dims.iter().map(i64::to_string).collect();
        let formula = format!("{formula} ({})", dims.join(","));
        self.push(family, formula, inputs, profile.alternating_sum(), profile.engine_chi);
    }
}

fn int(n: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(n)
}

fn p_in(p: u64) -> Inputs {
    Inputs::default().with("p", p as i64)
}

fn twist_name(twisted: bool) -> &'static str {
    if twisted {
        "S^n(x)det"
    } else {
        "S^n"
    }
}

// Rank-three grid points (case, a, b) whose partition part has first row ≤ bound.
fn rank3_grid(bound: u64) -> Vec<(ParityCase, i64, i64, HighestWeight)> {
    let mut out = Vec::new();
    for case in ParityCase::ALL {
        for a in 0..=bound as i64 {
            for b in 0..=a {
                if let Some(wt) = case.weight(a, b) {
                    if wt.normalize().0[0] as u64 <= bound {
                        out.push((case, a, b, wt));
                    }
                }
            }
        }
    }
    out
}

fn sl3_grid(bound: u64) -> Vec<(Sl3Case, i64, i64, HighestWeight)> {
    let mut out = Vec::new();
    for case in Sl3Case::ALL {
        for a in 0..=bound as i64 {
            for b in 0..=a {
                if let Some(wt) = case.weight(a, b) {
                    if wt.parts()[0] as u64 <= bound {
                        out.push((case, a, b, wt));
                    }
                }
            }
        }
    }
    out
}

/// Every closed form over primes `ps` and the weight grid `μ₁ ≤ bound`, in a
/// fixed order: family by family, then prime, then weight.
pub fn audit(ps: &[u64], bound: u64) -> Result<Vec<AuditRecord>> {
    if bound > MAX_AUDIT_BOUND {
        return Err(Error::OutOfRange(format!("audit bound {bound} exceeds {MAX_AUDIT_BOUND}")));
    }
    if ps.is_empty() {
        return Err(Error::OutOfRange("audit needs at least one prime".into()));
    }
    for &p in ps {
        check_prime(p)?;
    }
    let mut au = Audit { records: Vec::new() };

    for m in 0..=bound {
        let row = sl2_gl2_table_row(m);
        let wt = sym_weight(m, false);
        let recomputed = [chi_gl(2, &wt)?, chi_gl(2, &sym_weight(m, true))?, chi_sl(2, &wt)?];
        for ((name, stated), got) in ["gl", "gl_det", "sl"].iter().zip(row).zip(recomputed) {
            au.push("sl2_gl2_table", *name, Inputs::default().with("m", m as i64), stated, got);
        }
    }

    let t_f = TorsionClass::new([1, 1, 0, 0, 0])?;
    let t_i = TorsionClass::new([2, 0, 0, 0, 0])?;
    for n in 0..=bound {
        for (identity, cls, name) in [(false, &t_f, "[1,-1]"), (true, &t_i, "I2")] {
            for twisted in [false, true] {
                let got = trace_highest_weight(cls, &sym_weight(n, twisted))?;
                let formula = format!("{name}|{}", twist_name(twisted));
                au.push(
                    "gl2_trace",
                    formula,
                    Inputs::default().with("n", n as i64),
                    int(gl2_trace_stated(identity, twisted, n)),
                    int(got),
                );
            }
        }
    }

    for &p in ps {
        for n in 0..=bound {
            for twisted in [false, true] {
                let got = chi_gamma1(2, p, &sym_weight(n, twisted))?;
                au.push(
                    "gamma1_2p",
                    twist_name(twisted),
                    p_in(p).with("n", n as i64),
                    gamma1_2p_chi_stated(n, twisted, p)?,
                    got,
                );
            }
        }
    }

    for &p in ps {
        for n in 0..=bound {
            for twisted in [false, true] {
                let wt = sym_weight(n, twisted);
                au.push(
                    "gamma1_2p_alt",
                    twist_name(twisted),
                    p_in(p).with("n", n as i64),
                    gamma1_2p_chi_alt(p, &wt)?,
                    chi_gamma1(2, p, &wt)?,
                );
            }
        }
    }

    for &p in ps {
        for n in 0..=bound {
            let mut boundary = 0u64;
            let mut eis = 0u64;
            for twisted in [false, true] {
                let (h0, h1) = gamma1_2p_boundary(n, twisted, p)?;
                let (e0, e1) = gamma1_2p_eisenstein(n, twisted, p)?;
                boundary += h0 + h1;
                eis += e0 + e1;
            }
            au.push("gamma1_2p_boundary", "h0+h1 = 2(e0+e1)", p_in(p).with("n", n as i64), int(boundary), int(2 * eis));
        }
    }

    for &p in ps {
        for n in 0..=bound {
            for twisted in [false, true] {
                let stated = int(gamma1_2p_cusp(n, twisted, p)?);
                au.push(
                    "gamma1_2p_cusp",
                    twist_name(twisted),
                    p_in(p).with("n", n as i64),
                    stated,
                    gamma1_2p_cusp_recomputed(n, twisted, p)?,
                );
            }
        }
    }

    for &p in ps {
        for k in 2..=bound as i64 + 2 {
            let stated = int(dim_cusp_gamma1p(k, p)?);
            au.push("dim_cusp_gamma1p", "S_k", p_in(p).with("k", k), stated, int(dim_cusp_gamma1p_classical(k, p)?));
        }
    }

    for (case, a, b, wt) in sl3_grid(bound) {
        let stated = sl3_closed_chi(a, b, case)?.rational().cloned().expect("rational closed form");
        au.push("sl3_closed_chi", case.label(), Inputs::default().with("a", a).with("b", b), stated, chi_sl(3, &wt)?);
    }

    let neg1_i2 = TorsionClass::new([2, 1, 0, 0, 0])?;
    for (case, a, b, wt) in rank3_grid(bound) {
        let got = trace_highest_weight(&neg1_i2, &wt)?;
        au.push(
            "trace_neg1_I2",
            case.to_string(),
            Inputs::default().with("a", a).with("b", b),
            int(trace_neg1_i2_paper(case, a, b)),
            int(got),
        );
    }

    for &p in ps {
        for (case, a, b, wt) in rank3_grid(bound) {
            let stated = gamma1_3p_closed_chi(&wt, p)?.rational().cloned().expect("rational closed form");
            au.push(
                "gamma1_3p_closed_chi",
                case.to_string(),
                p_in(p).with("a", a).with("b", b),
                stated,
                chi_gamma1(3, p, &wt)?,
            );
        }
    }

    for &p in ps {
        for (case, a, b, wt) in rank3_grid(bound) {
            au.push(
                "gamma1_3p_reduction",
                case.to_string(),
                p_in(p).with("a", a).with("b", b),
                gamma1_3p_chi_reduction(p, &wt)?,
                chi_gamma1(3, p, &wt)?,
            );
        }
    }

    for &p in ps {
        for c in Coefficient::ALL {
            au.push(
                "gamma1_3p_coefficients",
                c.name(),
                p_in(p),
                gamma1_3p_coefficient_chi(c, p)?,
                chi_gamma1(3, p, &c.weight(3))?,
            );
        }
    }

    for &p in ps {
        for c in Coefficient::ALL {
            au.profile("gamma1_3p_cohomology", &format!("{c} stated dims"), p_in(p), gamma1_3p_cohomology(c, p)?);
            au.profile(
                "gamma1_3p_cohomology",
                &format!("{c} module form"),
                p_in(p),
                gamma1_3p_cohomology_modules(c, p)?,
            );
        }
    }

    for &p in ps {
        au.profile("gamma1_3p_plus_cohomology", "closed form", p_in(p), gamma1_3p_plus_cohomology(p)?);
        au.profile("gamma1_3p_plus_cohomology", "lee_schwermer", p_in(p), lee_schwermer_profile(p)?);
    }

    for c in Coefficient::ALL {
        au.profile("gl4_cohomology", c.name(), Inputs::default(), gl4_cohomology(c)?);
    }
    for m in [4usize, 5] {
        au.profile("sl_cohomology", &format!("SL{m}"), Inputs::default(), sl_cohomology(m)?);
    }

    for c in Coefficient::ALL {
        for k in [1u8, 2] {
            let got = sigma(4, &c.weight(4), k)?;
            au.push("sigma_m4", format!("Sigma{k} {c}"), Inputs::default(), sigma_m4_stated(c, k)?, got);
        }
    }

    for &p in ps {
        for c in Coefficient::ALL {
            au.push("gamma1_4p_chi", c.name(), p_in(p), gamma1_4p_chi(c, p)?, chi_gamma1(4, p, &c.weight(4))?);
        }
    }

    for (unit, label) in [(1i8, "[1,Ti,Tj]"), (-1, "[-1,Ti,Tj]")] {
        for c in Coefficient::ALL {
            if let Some(stated) = sigma_m5_partial_stated(unit, c) {
                au.push(
                    "sigma_m5_partial",
                    format!("{label} {c}"),
                    Inputs::default(),
                    stated,
                    sigma_m5_partial(unit, c)?,
                );
            }
        }
    }

    for &p in ps {
        for statement in [Gamma15Statement::Summary, Gamma15Statement::Final] {
            for c in Coefficient::ALL {
                let got = chi_gamma1(5, p, &c.weight(5))?;
                au.push(
                    "gamma1_5p_chi",
                    format!("{} {c}", statement.name()),
                    p_in(p),
                    gamma1_5p_chi(c, p, statement)?,
                    got,
                );
            }
        }
    }

    Ok(au.records)
}
