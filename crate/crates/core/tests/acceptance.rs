//! End-to-end acceptance checks, one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use kline::adamsmodules::{module, presentation, ModuleSpec};
use kline::identities::{run_all, IdentityGrid};
use kline::intlinalg::{cokernel, qz_kernel, two_primary, IntMatrix, TwoGroup};
use kline::vone::{
    comb_relations, cross_check, esp_oracle, four_way, reference_row, spin9_exponent, table, v_spin_oracle,
};
use kline::{nu, Valuation, Variant};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn table_against_reference(n: u32, m_from: u32, m_to: u32) -> Outcome {
    let rows = table(n, m_from, m_to).map_err(|e| e.to_string())?;
    let mut mismatches = Vec::new();
    for row in &rows {
        let expect = reference_row(n, row.m).ok_or(format!("no reference for m={}", row.m))?;
        if *row != expect {
            let fmt = |r: &kline::vone::TableRow| format!("({},{},{})", r.esp.unwrap_or(0), r.e1, r.e2);
            mismatches.push(format!("m={} computed {} expected {}", row.m, fmt(row), fmt(&expect)));
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{} odd m in [{m_from}, {m_to}]", rows.len()))
    } else {
        Err(format!("{} of {} rows differ: {}", mismatches.len(), rows.len(), mismatches.join("; ")))
    }
}

fn criterion_3() -> Outcome {
    let ms: Vec<u32> = (17..=528).filter(|m| m % 2 == 1).collect();
    for &m in &ms {
        let expect = TwoGroup::new(vec![3, spin9_exponent(m)]);
        let got = four_way(m, 4).map_err(|e| format!("m={m}: {e}"))?;
        if let Some(g) = got.iter().find(|g| **g != expect) {
            return Err(format!("m={m}: got {g}, expected {expect}"));
        }
    }
    Ok(format!("{} odd m, four methods each", ms.len()))
}

fn criterion_4() -> Outcome {
    let r = cross_check(&[3, 5, 6, 7, 8, 9, 10], 128);
    match r.first_mismatch {
        None => Ok(format!("{} cells", r.cases)),
        Some(e) => Err(e),
    }
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for n in 3..=10u32 {
        for m in (n * n + 1..=n * n + 64).filter(|m| m % 2 == 0) {
            let g = v_spin_oracle(m, n, Variant::V).map_err(|e| e.to_string())?;
            if g != TwoGroup::new(vec![1, 1]) {
                return Err(format!("n={n} m={m}: {g}"));
            }
            let e = esp_oracle(m, n).map_err(|e| e.to_string())?;
            if e != Valuation::Finite(1) {
                return Err(format!("n={n} m={m}: eSp {e}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cells"))
}

fn criterion_6() -> Outcome {
    let mut cases = 0;
    for n in 3..=8u32 {
        for m in (n * n + 1..=n * n + 64).filter(|m| m % 2 == 1) {
            let v = v_spin_oracle(m, n, Variant::V).map_err(|e| e.to_string())?;
            let vt = v_spin_oracle(m, n, Variant::VTilde).map_err(|e| e.to_string())?;
            if v != vt {
                return Err(format!("n={n} m={m}: v={v} vtilde={vt}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cells"))
}

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for n in (3..=12u32).filter(|&n| n != 4) {
        for m in (1..=n * n + 200).filter(|m| m % 2 == 1) {
            let r = comb_relations(m, n).map_err(|e| e.to_string())?;
            let need = Valuation::Finite(n.into());
            if nu(&r.r1.xi1_coef) < need || nu(&r.r2.xi1_coef) < need {
                return Err(format!("n={n} m={m}: r1={} r2={}", r.r1, r.r2));
            }
            cases += 1;
        }
    }
    let witness = (17..=16 + 200)
        .filter(|m| m % 2 == 1)
        .find(|&m| comb_relations(m, 4).map(|r| nu(&r.r2.xi1_coef) == Valuation::Finite(3)).unwrap_or(false))
        .ok_or("no n=4 witness with valuation 3")?;
    Ok(format!("{cases} cells; n=4 witness m={witness}"))
}

fn criterion_8() -> Outcome {
    let reports = run_all(&IdentityGrid::default());
    let total: usize = reports.iter().map(|r| r.cases).sum();
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(format!("{} suites, {total} cases", reports.len())),
        Some(r) => Err(r.to_string()),
    }
}

/// `#{v in (Z/N)^c : M v = 0 mod N}` by enumeration.
fn kernel_count_mod(m: &[Vec<i64>], cols: usize, modulus: i64) -> u64 {
    let total = (modulus as u64).pow(cols as u32);
    let mut count = 0;
    let mut v = vec![0i64; cols];
    for mut code in 0..total {
        for slot in v.iter_mut() {
            *slot = (code % modulus as u64) as i64;
            code /= modulus as u64;
        }
        if m.iter().all(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>().rem_euclid(modulus) == 0) {
            count += 1;
        }
    }
    count
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_917);
    for case in 0..500 {
        let (rows, cols) = (rng.gen_range(1..=6usize), rng.gen_range(1..=6usize));
        let entries: Vec<Vec<i64>> =
            (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-20..=20)).collect()).collect();
        let m = IntMatrix::from_rows_with_cols(
            entries.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
            cols,
        )
        .map_err(|e| e.to_string())?;
        let (coker, dual) = (cokernel(&m), qz_kernel(&m));
        if coker.invariant_factors() != dual.invariant_factors() || coker.free_rank() != dual.free_rank() {
            return Err(format!("case {case}: cokernel {coker} vs Q/Z kernel {dual}"));
        }
        for modulus in 2..=5i64 {
            let brute = kernel_count_mod(&entries, cols, modulus);
            let mut expect: u64 = (modulus as u64).pow(dual.free_rank() as u32);
            for d in dual.invariant_factors() {
                expect *= d.gcd(&BigInt::from(modulus)).to_u64().unwrap_or(0);
            }
            if brute != expect {
                return Err(format!("case {case} N={modulus}: {brute} kernel vectors, expected {expect}"));
            }
        }
    }
    Ok("500 matrices, kernels counted mod 2..5".into())
}

fn criterion_10() -> Outcome {
    for n in 2..=12u32 {
        let m = module(ModuleSpec::spin(n).map_err(|e| e.to_string())?);
        for t in [2, 3, 5, 7] {
            m.psi_matrix(t).map_err(|e| format!("n={n} t={t}: {e}"))?;
        }
    }
    let ts = [-1i64, 2, 3, 5];
    for n in 2..=8u32 {
        for spec in [ModuleSpec::sp(n), ModuleSpec::spin(n)] {
            let m = module(spec.map_err(|e| e.to_string())?);
            for a in ts {
                for b in ts {
                    let lhs = m.psi_matrix(a).and_then(|pa| pa.mul(&m.psi_matrix(b)?));
                    let rhs = m.psi_matrix(a * b);
                    if lhs.as_ref().ok() != rhs.as_ref().ok() || lhs.is_err() {
                        return Err(format!("{} a={a} b={b}", m.spec()));
                    }
                }
            }
        }
    }
    let mut cells = 0;
    for n in 2..=6u32 {
        for spec in [ModuleSpec::sp(n), ModuleSpec::spin(n)] {
            let spec = spec.map_err(|e| e.to_string())?;
            for mm in (n * n + 1..=n * n + 32).filter(|m| m % 2 == 1) {
                let base = presentation(mm, spec, Variant::V).map_err(|e| e.to_string())?;
                let five = module(spec).relation_block(5, mm).map_err(|e| e.to_string())?;
                let extended = IntMatrix::vstack(&[&base, &five]).map_err(|e| e.to_string())?;
                let g0 = two_primary(&cokernel(&base)).map_err(|e| e.to_string())?;
                let g1 = two_primary(&cokernel(&extended)).map_err(|e| e.to_string())?;
                if g0 != g1 {
                    return Err(format!("{spec} m={mm}: {g0} vs {g1} with ψ^5 rows"));
                }
                cells += 1;
            }
        }
    }
    Ok(format!("integrality n<=12, multiplicativity n<=8, ψ^5 stability on {cells} cells"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("table n=5", Box::new(|| table_against_reference(5, 26, 537))),
        ("table n=6", Box::new(|| table_against_reference(6, 37, 548))),
        ("Spin(9) by four methods", Box::new(criterion_3)),
        ("four-method agreement", Box::new(criterion_4)),
        ("even m gives Z/2+Z/2", Box::new(criterion_5)),
        ("vtilde equals v", Box::new(criterion_6)),
        ("relation divisibility", Box::new(criterion_7)),
        ("identity suites", Box::new(criterion_8)),
        ("Q/Z duality", Box::new(criterion_9)),
        ("Adams module integrality", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
