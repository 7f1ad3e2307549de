use std::process::ExitCode;

use congruence_euler::characters::{h_sequence, trace_highest_weight, trace_on_exponents, trace_oracle, HighestWeight};
use congruence_euler::cli::{audit_document, Format};
use congruence_euler::eulerchar::{chi_gamma1, chi_gamma1_sl, chi_gl, chi_sl, sigma};
use congruence_euler::exactmath::{resultant, resultant_oracle};
use congruence_euler::formulas::{audit, dim_cusp_gamma1p, lee_schwermer_profile, sigma_m5_partial, Coefficient};
use congruence_euler::torsion::{enumerate_classes, TorsionBlock, TorsionClass};
use congruence_euler::ExactRational;
use num_bigint::BigInt;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

const PRIMES: [u64; 4] = [5, 7, 11, 13];
const AUDIT_GOLDEN: &str = include_str!("golden/audit_p5_7_bound4.md");

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d)
}

fn z(n: i64) -> ExactRational {
    ExactRational::from(n)
}

fn w(parts: &[i64]) -> HighestWeight {
    HighestWeight::new(parts.to_vec()).unwrap()
}

fn cls(m: [u8; 5]) -> TorsionClass {
    TorsionClass::new(m).unwrap()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: impl std::fmt::Display, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn partitions(len: usize, max_size: usize) -> Vec<Vec<i64>> {
    fn go(len: usize, cap: i64, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in (0..=cap.min(left)).rev() {
            cur.push(x);
            go(len, x, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_size as i64, max_size as i64, &mut Vec::new(), &mut out);
    out
}

// Closed forms by residue k = m mod 12, as (GL, GL⊗det, SL) with m = 12ℓ + k.
fn table2(m: i64) -> [ExactRational; 3] {
    let (l, k) = (m / 12, m % 12);
    let row = match k {
        0 => [-l + 1, -l, -2 * l + 1],
        10 => [-l - 1, -l - 2, -2 * l - 3],
        k if k % 2 == 1 => [0, 0, 0],
        _ => [-l, -l - 1, -2 * l - 1],
    };
    row.map(z)
}

fn criterion_1() -> Check {
    for m in 0..120 {
        let got =
            [chi_gl(2, &w(&[m, 0])).unwrap(), chi_gl(2, &w(&[m + 1, 1])).unwrap(), chi_sl(2, &w(&[m, 0])).unwrap()];
        expect(format!("m={m}"), got, table2(m))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let periodic: [([u8; 5], &[i64]); 4] = [
        ([0, 0, 1, 0, 0], &[1, -1, 0]),
        ([0, 0, 0, 1, 0], &[1, 0, -1, 0]),
        ([0, 0, 0, 0, 1], &[1, 1, 0, -1, -1, 0]),
        ([1, 1, 0, 0, 0], &[1, 0]),
    ];
    for (mult, pattern) in periodic {
        let c = cls(mult);
        let h = h_sequence(&c, 48);
        for n in 0..=48 {
            expect(format!("H_{n}({c})"), h.get(n), BigInt::from(pattern[n as usize % pattern.len()]))?;
        }
    }
    let h = h_sequence(&cls([2, 0, 0, 0, 0]), 48);
    let hneg = h_sequence(&cls([0, 2, 0, 0, 0]), 48);
    for n in 0..=48i64 {
        expect(format!("H_{n}(I2)"), h.get(n), BigInt::from(n + 1))?;
        expect(format!("H_{n}(-I2)"), hneg.get(n), BigInt::from(if n % 2 == 0 { n + 1 } else { -(n + 1) }))?;
    }
    // ±I₂ centralizers taken in SL₂(ℤ); the rest coincide with their GL₂(ℤ) values.
    expect("chi C(I2)", cls([2, 0, 0, 0, 0]).centralizer().chi_determinant_one(), q(-1, 12))?;
    expect("chi C(-I2)", cls([0, 2, 0, 0, 0]).centralizer().chi_determinant_one(), q(-1, 12))?;
    for (mult, want) in
        [([0, 0, 1, 0, 0], q(1, 6)), ([0, 0, 0, 1, 0], q(1, 4)), ([0, 0, 0, 0, 1], q(1, 6)), ([1, 1, 0, 0, 0], q(1, 4))]
    {
        let c = cls(mult);
        expect(format!("chi C({c})"), c.centralizer_chi(), want)?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    let worked: [([u8; 5], i64); 10] = [
        ([1, 1, 1, 0, 0], 6),
        ([1, 1, 0, 1, 0], 8),
        ([2, 0, 1, 0, 0], 9),
        ([2, 0, 0, 0, 1], 1),
        ([2, 0, 0, 1, 0], 4),
        ([2, 2, 0, 0, 0], 16),
        ([1, 0, 1, 0, 0], 3),
        ([1, 0, 0, 0, 1], 1),
        ([0, 0, 1, 0, 1], 4),
        ([1, 0, 0, 1, 0], 2),
    ];
    for (mult, want) in worked {
        let c = cls(mult);
        expect(format!("R{c}"), c.resultant(), BigInt::from(want))?;
    }
    let triv4 = HighestWeight::trivial(4);
    expect("Sigma1(C), m=4", sigma(4, &triv4, 1).unwrap(), z(1))?;
    expect("Sigma2(C), m=4", sigma(4, &triv4, 2).unwrap(), q(-1, 12))?;
    let stated = &(&q(12, 72) + &q(6, 48)) + &q(2, 48);
    expect("12/72+6/48+2/48", stated.clone(), q(1, 3))?;
    let mut partial = ExactRational::zero();
    let triv5 = HighestWeight::trivial(5);
    for mult in [[1, 0, 1, 1, 0], [1, 0, 1, 0, 1], [1, 0, 0, 1, 1]] {
        let c = cls(mult);
        let r = ExactRational::from(c.resultant());
        let tr = ExactRational::from(trace_highest_weight(&c, &triv5).unwrap());
        partial += &(&r * &c.centralizer_chi()) * &tr;
    }
    expect("[1,Ti,Tj] partial sum", partial, stated.clone())?;
    expect("sigma_m5_partial", sigma_m5_partial(1, Coefficient::Trivial).unwrap(), stated)
}

fn criterion_4() -> Check {
    for p in PRIMES {
        let p = p as i64;
        for n in 0..=24i64 {
            for j in -2..=2i64 {
                let lambda = w(&[n + j, j]);
                // [1,−1] acts on Sym^n by Σ(−1)^b and on det^j by (−1)^j.
                let tr = if n % 2 == 0 {
                    if j.rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    }
                } else {
                    0
                };
                let want = &q((p - 1) * tr, 2) - &q((p * p - 1) * (n + 1), 24);
                expect(format!("p={p} {lambda}"), chi_gamma1(2, p as u64, &lambda).unwrap(), want)?;
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    for (p, want) in PRIMES.into_iter().zip([0, 0, 1, 2]) {
        expect(format!("dim S_2(Gamma1({p}))"), dim_cusp_gamma1p(2, p).unwrap(), BigInt::from(want))?;
    }
    expect("dim S_3(Gamma1(7))", dim_cusp_gamma1p(3, 7).unwrap(), BigInt::from(1))?;
    expect("dim S_4(Gamma1(5))", dim_cusp_gamma1p(4, 5).unwrap(), BigInt::from(1))
}

fn criterion_6() -> Check {
    for p in PRIMES {
        let pi = p as i64;
        let phi2_12 = q(pi * pi - 1, 12);
        expect(
            format!("Gamma1(4,{p}) trivial"),
            chi_gamma1(4, p, &HighestWeight::trivial(4)).unwrap(),
            &z(pi - 1) - &phi2_12,
        )?;
        expect(
            format!("Gamma1(4,{p}) det"),
            chi_gamma1(4, p, &HighestWeight::determinant(4)).unwrap(),
            &z(1 - pi) - &phi2_12,
        )?;
        expect(
            format!("Gamma1(5,{p}) trivial"),
            chi_gamma1(5, p, &HighestWeight::trivial(5)).unwrap(),
            q(-(pi * pi - 1), 3),
        )?;
    }
    expect("SL4 trivial", chi_sl(4, &HighestWeight::trivial(4)).unwrap(), z(0))?;
    expect("SL5 trivial", chi_sl(5, &HighestWeight::trivial(5)).unwrap(), z(0))?;
    expect("GL4 trivial", chi_gl(4, &HighestWeight::trivial(4)).unwrap(), z(1))?;
    expect("GL4 det", chi_gl(4, &HighestWeight::determinant(4)).unwrap(), z(-1))
}

fn criterion_7() -> Check {
    for p in PRIMES {
        let engine = chi_gamma1_sl(3, p, &HighestWeight::trivial(3)).unwrap();
        let profile = lee_schwermer_profile(p).unwrap().alternating_sum();
        expect(format!("p={p} engine"), engine.clone(), z(p as i64 - 1))?;
        expect(format!("p={p} profile"), profile, engine)?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut cases = 0;
    for m in 1..=3 {
        for c in enumerate_classes(m) {
            for mu in partitions(m, 8) {
                let mu = w(&mu);
                let jt = ExactRational::from(trace_highest_weight(&c, &mu).unwrap());
                expect(format!("Tr({c} | {mu})"), jt, trace_oracle(&c, &mu).unwrap())?;
                cases += 1;
            }
        }
    }
    if cases < 200 {
        return Err(format!("only {cases} trace cases"));
    }
    let blocks = TorsionBlock::ALL;
    for (i, &bi) in blocks.iter().enumerate() {
        for &bj in &blocks[i + 1..] {
            for ki in 1..=bi.max_multiplicity() {
                for kj in 1..=bj.max_multiplicity() {
                    if ki as usize * bi.degree() + kj as usize * bj.degree() > 10 {
                        continue;
                    }
                    let f = bi.char_poly().pow(ki as u32);
                    let g = bj.char_poly().pow(kj as u32);
                    let fe: Vec<i64> =
                        std::iter::repeat_n(bi.root_exponents(), ki as usize).flatten().copied().collect();
                    let ge: Vec<i64> =
                        std::iter::repeat_n(bj.root_exponents(), kj as usize).flatten().copied().collect();
                    let sylvester = ExactRational::from(resultant(&f, &g).unwrap());
                    expect(format!("R({bi:?}^{ki}, {bj:?}^{kj})"), sylvester, resultant_oracle(&fe, &ge).unwrap())?;
                }
            }
        }
    }
    for m in 1..=10 {
        for c in enumerate_classes(m) {
            let present: Vec<_> = c.factors().collect();
            let mut roots = ExactRational::one();
            for (i, &(bi, ki)) in present.iter().enumerate() {
                for &(bj, kj) in &present[i + 1..] {
                    let fe: Vec<i64> =
                        std::iter::repeat_n(bi.root_exponents(), ki as usize).flatten().copied().collect();
                    let ge: Vec<i64> =
                        std::iter::repeat_n(bj.root_exponents(), kj as usize).flatten().copied().collect();
                    roots = &roots * &resultant_oracle(&fe, &ge).unwrap();
                }
            }
            expect(format!("R{c}"), ExactRational::from(c.resultant()), roots)?;
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    expect("classes at m=11", enumerate_classes(11).len(), 0)?;
    expect("Gamma1(11,5)", chi_gamma1(11, 5, &HighestWeight::trivial(11)).unwrap(), z(0))?;
    for m in [11, 12] {
        for top in 0..=3 {
            for twist in -1..=1 {
                let mut parts = vec![twist; m];
                parts[0] += top;
                let lambda = w(&parts);
                expect(format!("GL{m} {lambda}"), chi_gl(m, &lambda).unwrap(), z(0))?;
            }
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    for m in 1..=5 {
        for c in enumerate_classes(m) {
            let inverse: Vec<i64> = c.root_exponents().iter().map(|e| -e).collect();
            for mu in partitions(m, 6) {
                for twist in [-1, 0, 1] {
                    let lambda = w(&mu).det_twist(twist);
                    let direct = trace_highest_weight(&c, &lambda).unwrap();
                    expect(format!("Tr({c}^-1 | {lambda})"), trace_on_exponents(&inverse, &lambda).unwrap(), direct)?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_11() -> Check {
    for p in [5, 7] {
        for a in 0..=4 {
            for b in 0..a {
                let lambda = w(&[2 * a, 2 * b + 1, 0]);
                expect(format!("p={p} {lambda}"), chi_gamma1(3, p, &lambda).unwrap(), z(0))?;
            }
        }
    }
    Ok(())
}

fn criterion_12() -> Check {
    let report = audit_document(&[5, 7], 4, false, Format::Md).map_err(|e| e.to_string())?;
    expect("report equals golden file", report.as_str(), AUDIT_GOLDEN)?;

    let records = audit(&[5, 7], 4).map_err(|e| e.to_string())?;
    for family in ["gamma1_2p", "gamma1_2p_boundary", "gamma1_2p_cusp", "dim_cusp_gamma1p", "gamma1_4p_chi"] {
        let bad = records.iter().filter(|r| r.family == family && !r.equal).count();
        expect(format!("{family} discrepancies"), bad, 0)?;
        if !records.iter().any(|r| r.family == family) {
            return Err(format!("{family} missing from the report"));
        }
    }
    let g5_trivial: Vec<_> =
        records.iter().filter(|r| r.family == "gamma1_5p_chi" && r.formula.ends_with("trivial")).collect();
    if g5_trivial.is_empty() || g5_trivial.iter().any(|r| !r.equal) {
        return Err("Gamma1(5,p) trivial values are not all in agreement".into());
    }
    let sl3 = records
        .iter()
        .find(|r| r.family == "sl3_closed_chi" && r.formula == "[2a,2b]" && r.inputs.to_string() == "a=0 b=0")
        .ok_or("sl3 trivial-weight record missing")?;
    expect(
        "sl3 trivial (paper, engine)",
        (sl3.paper_stated.to_string(), sl3.recomputed.to_string(), sl3.equal),
        ("-1".into(), "1".into(), false),
    )?;
    let neg: Vec<_> = records.iter().filter(|r| r.family == "trace_neg1_I2" && !r.equal).collect();
    if neg.is_empty() || neg.iter().any(|r| r.formula != "(c)" && r.formula != "(d)") {
        return Err("trace_neg1_I2 discrepancies are not exactly cases (c)/(d)".into());
    }
    let grid: Vec<_> =
        records.iter().filter(|r| r.family == "trace_neg1_I2" && (r.formula == "(c)" || r.formula == "(d)")).collect();
    expect("every (c)/(d) record flagged", grid.len(), neg.len())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("GL2/SL2 Euler characteristics, m = 0..119", criterion_1),
        ("GL2 torsion traces and centralizer values", criterion_2),
        ("worked resultants and class sums", criterion_3),
        ("Gamma1(2,p) structural identity", criterion_4),
        ("cusp-form dimensions", criterion_5),
        ("higher-rank engine values", criterion_6),
        ("Lee-Schwermer consistency", criterion_7),
        ("oracle equivalence", criterion_8),
        ("vanishing beyond rank ten", criterion_9),
        ("self-inversion of traces", criterion_10),
        ("odd-weight vanishing for Gamma1(3,p)", criterion_11),
        ("audit report", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
