//! Command-line front end. Every command is a pure function from parsed
//! arguments to the rendered document; `main` only prints and maps exit codes.

mod render;

use clap::{Parser, Subcommand};
use serde::Serialize;

pub use render::{to_json, Format, Table};

use crate::characters::{trace_highest_weight, trace_oracle, HighestWeight, ORACLE_MAX_RANK, ORACLE_MAX_SIZE};
use crate::error::{Error, Result};
use crate::eulerchar::{check_prime, chi_gamma1, compute, ChiResult, Group};
use crate::eulerchar::{chi_gl, chi_sl};
use crate::exactmath::{resultant_oracle, ExactRational};
use crate::formulas::{
    audit, dim_cusp_gamma1p, dim_cusp_gamma1p_classical, gamma1_3p_closed_chi, sl2_gl2_table_row, sym_weight,
    AuditRecord, ParityCase,
};
use crate::torsion::{enumerate_classes, TorsionClass, MAX_RANK};

pub const MAX_TABLE_WEIGHT: u64 = 200;
pub const MAX_PRIMES: usize = 50;

#[derive(Debug, Parser)]
#[command(
    name = "congruence-euler",
    version,
    about = "Exact homological Euler characteristics of GL_m(Z), SL_m(Z) and Gamma_1(m,p)"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "md")]
    pub format: Format,

    /// Cross-check resultants and traces against the root-of-unity oracles.
    #[arg(long, global = true)]
    pub self_check: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One Euler characteristic.
    Chi {
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: Option<u64>,
        /// Highest weight in ε-coordinates, e.g. `2,1,0`.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        breakdown: bool,
    },
    /// The torsion classes of GL_m(Z).
    Classes {
        #[arg(long)]
        m: usize,
    },
    /// Table sweeps.
    Table {
        #[command(subcommand)]
        which: TableKind,
    },
    /// Compare every closed form with the engine.
    Audit {
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u64>,
        #[arg(long)]
        bound: u64,
        /// Also list the records that agree.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum TableKind {
    /// GL_2(Z) and SL_2(Z) with Sym^m coefficients, m = 0..=max.
    Sl2gl2 {
        #[arg(long)]
        max: u64,
    },
    /// dim S_k(Γ_1(p)).
    Cuspdims {
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        k: Vec<i64>,
    },
    /// Γ_1(3,p) parity cases against the engine.
    #[command(name = "gamma1-3p")]
    Gamma13p {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        bound: u64,
    },
}

pub fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Chi { group, m, p, weight, breakdown } => {
            let group: Group = group.parse()?;
            let weight: HighestWeight = weight.parse()?;
            let result = compute(group, *m, *p, &weight)?;
            if cli.self_check {
                self_check(*m, &weight)?;
            }
            chi_document(&result, cli.format, *breakdown)
        }
        Command::Classes { m } => {
            if cli.self_check {
                self_check(*m, &HighestWeight::trivial((*m).max(1)))?;
            }
            classes_document(*m, cli.format)
        }
        Command::Table { which } => match which {
            TableKind::Sl2gl2 { max } => sl2gl2_document(*max, cli.format),
            TableKind::Cuspdims { p, k } => cuspdims_document(p, k, cli.format),
            TableKind::Gamma13p { p, bound } => gamma1_3p_document(*p, *bound, cli.format),
        },
        Command::Audit { p, bound, all } => {
            if p.len() > MAX_PRIMES {
                return Err(Error::OutOfRange(format!("at most {MAX_PRIMES} primes")));
            }
            audit_document(p, *bound, *all, cli.format)
        }
    }
}

/// Recomputes every `R(A)` at rank `m` as a product of root differences and every
/// trace within the tableau guard; any disagreement is a consistency error.
pub fn self_check(m: usize, weight: &HighestWeight) -> Result<()> {
    if m > MAX_RANK {
        return Ok(());
    }
    for cls in enumerate_classes(m) {
        let present: Vec<_> = cls.factors().collect();
        let mut roots = ExactRational::one();
        for (i, &(bi, ki)) in present.iter().enumerate() {
            for &(bj, kj) in &present[i + 1..] {
                let f: Vec<i64> = std::iter::repeat_n(bi.root_exponents(), ki as usize).flatten().copied().collect();
                let g: Vec<i64> = std::iter::repeat_n(bj.root_exponents(), kj as usize).flatten().copied().collect();
                roots = &roots * &resultant_oracle(&f, &g)?;
            }
        }
        if roots != ExactRational::from(cls.resultant()) {
            return Err(Error::Consistency(format!("R{cls}: {} by determinant, {roots} by roots", cls.resultant())));
        }
        if weight.rank() == m && m <= ORACLE_MAX_RANK && weight.partition_size() <= ORACLE_MAX_SIZE {
            for wt in [weight.clone(), weight.det_twist(1)] {
                let jt = ExactRational::from(trace_highest_weight(&cls, &wt)?);
                let ssyt = trace_oracle(&cls, &wt)?;
                if jt != ssyt {
                    return Err(Error::Consistency(format!(
                        "Tr({cls} | {wt}): {jt} by Jacobi-Trudi, {ssyt} by tableaux"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn opt(r: &Option<ExactRational>) -> String {
    r.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn chi_document(result: &ChiResult, format: Format, breakdown: bool) -> Result<String> {
    let p = result.p.map(|p| p.to_string()).unwrap_or_default();
    let mut summary = Table::new(&["group", "m", "p", "weight", "chi", "sigma1", "sigma2"]);
    summary.push(vec![
        result.group.to_string(),
        result.m.to_string(),
        p.clone(),
        result.weight.to_string(),
        result.chi.to_string(),
        opt(&result.sigma1),
        opt(&result.sigma2),
    ]);
    let mut rows = Table::new(&["label", "R", "chiC", "trace", "weightFactor", "contribution"]);
    for c in &result.breakdown {
        rows.push(vec![
            c.label.clone(),
            c.r.to_string(),
            c.chi_c.to_string(),
            c.trace.to_string(),
            opt(&c.weight_factor),
            c.contribution.to_string(),
        ]);
    }
    match format {
        Format::Json => render::to_json(result),
        Format::Md if breakdown => Ok(format!("{}\n{}", summary.to_markdown(), rows.to_markdown())),
        Format::Md => Ok(summary.to_markdown()),
        Format::Csv if breakdown => {
            rows.push(vec![
                "total".into(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                result.chi.to_string(),
            ]);
            rows.to_csv()
        }
        Format::Csv => summary.to_csv(),
    }
}

#[derive(Serialize)]
struct ClassRow {
    label: String,
    #[serde(rename = "charPoly")]
    char_poly: String,
    #[serde(rename = "R")]
    r: String,
    #[serde(rename = "chiC")]
    chi_c: ExactRational,
    det: i32,
    #[serde(rename = "unitMult")]
    unit_mult: u8,
}

pub fn classes_document(m: usize, format: Format) -> Result<String> {
    if m == 0 {
        return Err(Error::RankTooSmall { min: 1, got: 0 });
    }
    let classes: Vec<TorsionClass> = if m > MAX_RANK { Vec::new() } else { enumerate_classes(m) };
    let rows: Vec<ClassRow> = classes
        .iter()
        .map(|c| ClassRow {
            label: c.label(),
            char_poly: c.char_poly().to_string(),
            r: c.resultant().to_string(),
            chi_c: c.centralizer_chi(),
            det: c.det(),
            unit_mult: c.unit_multiplicity(),
        })
        .collect();
    let mut table = Table::new(&["label", "charPoly", "R", "chiC", "det", "unitMult"]);
    for r in &rows {
        table.push(vec![
            r.label.clone(),
            r.char_poly.clone(),
            r.r.clone(),
            r.chi_c.to_string(),
            r.det.to_string(),
            r.unit_mult.to_string(),
        ]);
    }
    render::render(format, &rows, &table)
}

fn check_table_weight(n: u64) -> Result<()> {
    if n > MAX_TABLE_WEIGHT {
        return Err(Error::OutOfRange(format!("table weights are limited to {MAX_TABLE_WEIGHT}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct Sl2Gl2Row {
    m: u64,
    gl: ExactRational,
    #[serde(rename = "glDet")]
    gl_det: ExactRational,
    sl: ExactRational,
    #[serde(rename = "closedForm")]
    closed_form: bool,
}

pub fn sl2gl2_document(max: u64, format: Format) -> Result<String> {
    check_table_weight(max)?;
    let mut rows = Vec::new();
    for m in 0..=max {
        let gl = chi_gl(2, &sym_weight(m, false))?;
        let gl_det = chi_gl(2, &sym_weight(m, true))?;
        let sl = chi_sl(2, &sym_weight(m, false))?;
        let closed_form = sl2_gl2_table_row(m) == [gl.clone(), gl_det.clone(), sl.clone()];
        rows.push(Sl2Gl2Row { m, gl, gl_det, sl, closed_form });
    }
    let mut table = Table::new(&["m", "l", "k", "GL2 V_m", "GL2 V_m(x)det", "SL2 V_m", "closed form"]);
    for r in &rows {
        table.push(vec![
            r.m.to_string(),
            (r.m / 12).to_string(),
            (r.m % 12).to_string(),
            r.gl.to_string(),
            r.gl_det.to_string(),
            r.sl.to_string(),
            yes_no(r.closed_form),
        ]);
    }
    render::render(format, &rows, &table)
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn check_primes(ps: &[u64]) -> Result<()> {
    if ps.is_empty() || ps.len() > MAX_PRIMES {
        return Err(Error::OutOfRange(format!("between 1 and {MAX_PRIMES} primes")));
    }
    ps.iter().try_for_each(|&p| check_prime(p))
}

#[derive(Serialize)]
struct CuspRow {
    p: u64,
    k: i64,
    dim: String,
    #[serde(rename = "riemannRoch")]
    riemann_roch: String,
}

pub fn cuspdims_document(ps: &[u64], ks: &[i64], format: Format) -> Result<String> {
    check_primes(ps)?;
    if ks.is_empty() || ks.iter().any(|&k| k < 2 || k as u64 > MAX_TABLE_WEIGHT) {
        return Err(Error::OutOfRange(format!("cusp weights must lie in 2..={MAX_TABLE_WEIGHT}")));
    }
    let mut rows = Vec::new();
    for &p in ps {
        for &k in ks {
            rows.push(CuspRow {
                p,
                k,
                dim: dim_cusp_gamma1p(k, p)?.to_string(),
                riemann_roch: dim_cusp_gamma1p_classical(k, p)?.to_string(),
            });
        }
    }
    let mut table = Table::new(&["p", "k", "dim S_k(Gamma1(p))", "Riemann-Roch"]);
    for r in &rows {
        table.push(vec![r.p.to_string(), r.k.to_string(), r.dim.clone(), r.riemann_roch.clone()]);
    }
    render::render(format, &rows, &table)
}

#[derive(Serialize)]
struct Gamma13pRow {
    case: String,
    a: i64,
    b: i64,
    weight: Vec<i64>,
    paper: ExactRational,
    engine: ExactRational,
    equal: bool,
}

pub fn gamma1_3p_document(p: u64, bound: u64, format: Format) -> Result<String> {
    check_prime(p)?;
    check_table_weight(bound)?;
    let mut rows = Vec::new();
    for case in ParityCase::ALL {
        for a in 0..=bound as i64 {
            for b in 0..=a {
                let Some(wt) = case.weight(a, b) else { continue };
                if wt.normalize().0[0] as u64 > bound {
                    continue;
                }
                let paper = gamma1_3p_closed_chi(&wt, p)?.rational().cloned().expect("rational closed form");
                let engine = chi_gamma1(3, p, &wt)?;
                let equal = paper == engine;
                rows.push(Gamma13pRow {
                    case: case.to_string(),
                    a,
                    b,
                    weight: wt.parts().to_vec(),
                    paper,
                    engine,
                    equal,
                });
            }
        }
    }
    let mut table = Table::new(&["case", "a", "b", "weight", "paper", "engine", "match"]);
    for r in &rows {
        let wt = HighestWeight::new(r.weight.clone())?;
        let mark = if r.equal { String::new() } else { "MISMATCH".to_string() };
        table.push(vec![
            r.case.clone(),
            r.a.to_string(),
            r.b.to_string(),
            wt.to_string(),
            r.paper.to_string(),
            r.engine.to_string(),
            mark,
        ]);
    }
    render::render(format, &rows, &table)
}

#[derive(Serialize)]
struct FamilySummary {
    family: &'static str,
    records: usize,
    discrepancies: usize,
}

#[derive(Serialize)]
struct AuditReport<'a> {
    primes: &'a [u64],
    bound: u64,
    summary: Vec<FamilySummary>,
    records: Vec<&'a AuditRecord>,
}

fn summarize(records: &[AuditRecord]) -> Vec<FamilySummary> {
    let mut out: Vec<FamilySummary> = Vec::new();
    for r in records {
        match out.last_mut() {
            Some(s) if s.family == r.family => {
                s.records += 1;
                s.discrepancies += usize::from(!r.equal);
            }
            _ => out.push(FamilySummary { family: r.family, records: 1, discrepancies: usize::from(!r.equal) }),
        }
    }
    out
}

/// Discrepancies only, or every record with `all`; exit status stays 0 either way.
pub fn audit_document(ps: &[u64], bound: u64, all: bool, format: Format) -> Result<String> {
    let records = audit(ps, bound)?;
    let shown: Vec<&AuditRecord> = records.iter().filter(|r| all || !r.equal).collect();
    let report = AuditReport { primes: ps, bound, summary: summarize(&records), records: shown };

    let mut rows = Table::new(&["family", "formula", "inputs", "paper", "recomputed", "equal"]);
    for r in &report.records {
        rows.push(vec![
            r.family.to_string(),
            r.formula.clone(),
            r.inputs.to_string(),
            r.paper_stated.to_string(),
            r.recomputed.to_string(),
            r.equal.to_string(),
        ]);
    }
    match format {
        Format::Json => render::to_json(&report),
        Format::Csv => rows.to_csv(),
        Format::Md => {
            let primes: Vec<String> = ps.iter().map(u64::to_string).collect();
            let mut summary = Table::new(&["family", "records", "discrepancies"]);
            for s in &report.summary {
                summary.push(vec![s.family.to_string(), s.records.to_string(), s.discrepancies.to_string()]);
            }
            let title = if all { "Records" } else { "Discrepancies" };
            Ok(format!(
                "# Audit\n\nprimes: {}, weight bound: {bound}\n\n## Summary\n\n{}\n## {title}\n\n{}",
                primes.join(","),
                summary.to_markdown(),
                rows.to_markdown()
            ))
        }
    }
}
