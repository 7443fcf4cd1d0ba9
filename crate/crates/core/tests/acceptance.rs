//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

#[path = "common.rs"]
mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use brousseau::cli::CoeffsDoc;
use brousseau::extensions::{derive_summand, general_cubic_check, pell_cubic_check};
use brousseau::identities::{
    cross_formula_check, egf_check, erbacher_fuchs_check, shannon_ollerton_check, theorem1_check,
    theorem2_check, theorem3_check, zeitlin_firstkind_report, AltMethod, IdentityReport, Which,
};
use brousseau::{brousseau_closed, summand_coeffs, CoeffTable, IntPoly, RecurrenceSpec};
use num_bigint::BigInt;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_report(r: &IdentityReport) -> Outcome {
    ensure(r.verified(), || r.to_string())
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn coefficient_ground_truth() -> Outcome {
    let t = CoeffTable::recursion(5);
    ensure(t.a() == ints(&[1, 1, 5, 31, 257, 2671]), || format!("A = {:?}", t.a()))?;
    ensure(t.b() == ints(&[1, 2, 8, 50, 416, 4322]), || format!("B = {:?}", t.b()))?;
    let a_oeis = common::fixture("A000556.txt");
    let b_oeis = common::fixture("A000557.txt");
    ensure(a_oeis.len() >= 20 && b_oeis.len() >= 20, || "fixtures too short".into())?;
    let t = CoeffTable::recursion(19);
    ensure(t.a() == &a_oeis[..20], || "A differs from A000556 prefix".into())?;
    ensure(t.b() == &b_oeis[..20], || "B differs from A000557 prefix".into())
}

fn theorem1_sweep() -> Outcome {
    ensure_report(&theorem1_check(8, 60))
}

fn theorem2_theorem3_oracles() -> Outcome {
    let t = CoeffTable::recursion(10);
    ensure_report(&theorem2_check(10, 200, &t).map_err(|e| e.to_string())?)?;
    ensure_report(&theorem3_check(10, 200, &t).map_err(|e| e.to_string())?)
}

fn cubic_regression() -> Outcome {
    let t = CoeffTable::recursion(3);
    let rendered = brousseau_closed(3, &t).map_err(|e| e.to_string())?.render(true);
    let expected = "(n^3-3n^2+15n-31)F_n + (n^3-6n^2+24n-50)F_{n+1} + 50";
    let squash = |s: &str| s.split_whitespace().collect::<String>();
    ensure(squash(&rendered) == squash(expected), || format!("rendered {rendered}"))?;
    ensure_report(&erbacher_fuchs_check(100))
}

fn cross_formula_matrix() -> Outcome {
    let t = CoeffTable::recursion(60);
    let pairs = [
        (AltMethod::Ledin, Which::A),
        (AltMethod::Ledin, Which::B),
        (AltMethod::DresdenInverse, Which::A),
        (AltMethod::Hoggatt, Which::A),
        (AltMethod::Hoggatt, Which::B),
        (AltMethod::ZeitlinStirling2, Which::A),
        (AltMethod::ZeitlinStirling2, Which::B),
        (AltMethod::KmtEulerian, Which::A),
        (AltMethod::KmtEulerian, Which::B),
        (AltMethod::Adegoke, Which::B),
    ];
    for (m, w) in pairs {
        ensure_report(&cross_formula_check(m, w, 60, &t).map_err(|e| e.to_string())?)?;
    }
    for w in [Which::A, Which::B] {
        ensure_report(&egf_check(w, 40, &t).map_err(|e| e.to_string())?)?;
    }
    ensure_report(&zeitlin_firstkind_report(30, &t).map_err(|e| e.to_string())?)
}

fn bernoulli_relation() -> Outcome {
    let t = CoeffTable::recursion(300);
    ensure_report(&shannon_ollerton_check(300, &t).map_err(|e| e.to_string())?)
}

fn recurrence_extensions() -> Outcome {
    ensure_report(&pell_cubic_check(100))?;
    for a in 1..=5 {
        for b in 1..=5 {
            ensure_report(&general_cubic_check(&RecurrenceSpec::new(a, b), 40))?;
        }
    }
    for p in 1..=8 {
        let d = derive_summand(&RecurrenceSpec::fibonacci(), p, 100).map_err(|e| e.to_string())?;
        let expected = summand_coeffs(p).map_err(|e| e.to_string())?;
        ensure(d.as_int_poly().as_ref() == Some(&expected), || format!("p = {p}: {:?}", d.coeffs))?;
    }
    let pell = derive_summand(&RecurrenceSpec::pell(), 3, 100).map_err(|e| e.to_string())?;
    let expected = &IntPoly::from_i64s(&[2]) * &IntPoly::from_i64s(&[-1, 0, -3, 1]);
    ensure(pell.as_int_poly() == Some(expected), || format!("pell: {:?}", pell.coeffs))
}

fn cli(args: &[&str], cache: Option<&Path>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_brousseau"));
    cmd.args(args).env_remove("BROUSSEAU_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.arg("--cache-dir").arg(dir);
    }
    let out = cmd.output().expect("spawn cli");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn cli_contract() -> Outcome {
    let (code, out, _) = cli(&["verify", "--suite", "all", "--max-k", "40", "--max-n", "100"], None);
    ensure(code == 0, || format!("verify all exited {code}:\n{out}"))?;

    for bad in [
        &["coeffs"][..],
        &["formula", "--kind", "sum"],
        &["coeffs", "--max-k", "-3"],
        &["verify", "--suite", "nonsense"],
        &["conjecture", "--max-k", "1"],
        &["frobnicate"],
    ] {
        let (code, _, _) = cli(bad, None);
        ensure(code == 2, || format!("{bad:?} exited {code}, expected 2"))?;
    }

    // A cache whose entries past the trusted prefix are wrong makes the
    // cross-formula checks fail.
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (code, _, _) = cli(&["coeffs", "--max-k", "20"], Some(dir.path()));
    ensure(code == 0, || "cache seeding failed".into())?;
    let path = dir.path().join("coeffs.json");
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let tampered = text.replacen("\"8054177\"", "\"8054178\"", 1);
    ensure(tampered != text, || "tamper target not found".into())?;
    std::fs::write(&path, tampered).map_err(|e| e.to_string())?;
    let (code, out, _) = cli(&["verify", "--suite", "ledin", "--max-k", "20"], Some(dir.path()));
    ensure(code == 1, || format!("tampered verify exited {code}:\n{out}"))?;
    ensure(out.contains("k=8"), || format!("first failure not at k=8:\n{out}"))?;

    let (code, json, _) = cli(&["coeffs", "--max-k", "30", "--format", "json"], None);
    ensure(code == 0, || "coeffs json failed".into())?;
    let doc: CoeffsDoc = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    ensure(doc.to_json() == json, || "JSON round trip changed bytes".into())?;
    let (_, again, _) = cli(&["coeffs", "--max-k", "30", "--format", "json"], None);
    ensure(again == json, || "repeat run changed bytes".into())
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 coefficient ground truth and OEIS prefixes", Duration::from_secs(1), coefficient_ground_truth),
        ("AC2 difference identity sweep p<=8, n<=60", Duration::from_secs(5), theorem1_sweep),
        ("AC3 convolution/sum closed forms vs brute force p<=10, n<=200", Duration::from_secs(30), theorem2_theorem3_oracles),
        ("AC4 cubic sum rendering and classical form n<=100", Duration::from_secs(1), cubic_regression),
        ("AC5 cross-formula matrix k<=60, EGF k<=40, first-kind n<=30", Duration::from_secs(60), cross_formula_matrix),
        ("AC6 Bernoulli relation 2<=k<=300", Duration::from_secs(300), bernoulli_relation),
        ("AC7 Pell/general cubic identities and derived summands", Duration::from_secs(10), recurrence_extensions),
        ("AC8 CLI exit codes, full verify, JSON stability", Duration::from_secs(60), cli_contract),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= budget, || format!("took {elapsed:.2?}, budget {budget:?}"))
        });
        match result {
            Ok(()) => println!("PASS  {name}  ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}  ({elapsed:.2?}): {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
