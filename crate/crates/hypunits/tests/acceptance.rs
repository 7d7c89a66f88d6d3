//! Acceptance gate: six criteria, one pass/fail line each. The single test
//! fails if any criterion fails, after printing the full scoreboard.

use hypunits::cayley::catalog::{catalog, catalog_names};
use hypunits::cayley::CayleyTable;
use hypunits::classify::{
    classify_semigroup, crosscheck, parse_rat, Agreement, Branch, ClassVerdict, TType,
};
use hypunits::enumerate::{census, enumerate_tables, naive_count, Dedup};
use hypunits::exactalg::{analyze_table, ComponentKind};
use hypunits::raloop::{classify_raloop, loop_predicates, nontrivial_normalized_units, subloop_normality};
use hypunits::verdict::{
    refute_search, try_algebra_verdict, AlgebraShape, Hyperbolicity,
};
use hypunits::{rat, Rat};
use std::process::Command;

fn tbl(name: &str) -> CayleyTable {
    catalog(name).unwrap().table
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// Criterion 1: both engines produce the expected verdict on every catalog
/// semigroup, with the advertised certificates.
fn catalog_expectations() -> Result<(), String> {
    let yes_no_exception: &[&str] = &["C1", "C2", "C3", "C4", "C6", "C2xC2"];
    for name in yes_no_exception {
        let r = classify_semigroup(&tbl(name));
        ensure(r.verdict == ClassVerdict::Hyperbolic, &format!("{name}: classifier not Yes"))?;
        ensure(r.branch == Branch::NilpotentFree, &format!("{name}: wrong branch"))?;
        ensure(r.k_certificate.is_none(), &format!("{name}: unexpected exception"))?;
    }
    for name in ["C5", "C8", "C12"] {
        let r = classify_semigroup(&tbl(name));
        ensure(r.verdict == ClassVerdict::Hyperbolic, &format!("{name}: classifier not Yes"))?;
        let k = r.k_certificate.ok_or(format!("{name}: missing unique-K certificate"))?;
        ensure(k.name == name, &format!("{name}: wrong K {}", k.name))?;
    }
    for name in ["C7", "C9", "C10", "C11", "C13", "C14", "C15", "C16"] {
        let r = classify_semigroup(&tbl(name));
        ensure(r.verdict == ClassVerdict::NotHyperbolic, &format!("{name}: classifier not No"))?;
    }
    for name in ["Q8", "Q8xC2"] {
        let r = classify_semigroup(&tbl(name));
        ensure(r.verdict == ClassVerdict::Hyperbolic, &format!("{name}: classifier not Yes"))?;
    }
    for name in ["S3", "D4", "Q12", "C4:C4"] {
        let r = classify_semigroup(&tbl(name));
        ensure(r.verdict == ClassVerdict::Hyperbolic, &format!("{name}: classifier not Yes"))?;
        ensure(r.branch == Branch::SemisimpleKernel, &format!("{name}: wrong branch"))?;
        ensure(r.k_certificate.is_some(), &format!("{name}: missing exceptional certificate"))?;
    }
    for name in ["M", "M12"] {
        let r = classify_semigroup(&tbl(name));
        ensure(r.verdict == ClassVerdict::Hyperbolic, &format!("{name}: classifier not Yes"))?;
        let k = r.k_certificate.ok_or(format!("{name}: missing kernel certificate"))?;
        ensure(k.list == "M/M12", &format!("{name}: wrong list"))?;
    }
    {
        let r = classify_semigroup(&tbl("Null2"));
        ensure(r.verdict == ClassVerdict::Hyperbolic, "Null2: classifier not Yes")?;
        ensure(r.branch == Branch::RadicalNilpotent, "Null2: wrong branch")?;
    }
    for (name, t) in [("T2", TType::T2), ("T2p", TType::T2Prime), ("T2hat", TType::T2Hat)] {
        let r = classify_semigroup(&tbl(name));
        ensure(r.verdict == ClassVerdict::Hyperbolic, &format!("{name}: classifier not Yes"))?;
        ensure(r.t_type == Some(t), &format!("{name}: wrong t_type {:?}", r.t_type))?;
        let lm = r.lambda_mu.ok_or(format!("{name}: missing lambda/mu"))?;
        let sum: Rat = parse_rat(&lm.sum).ok_or(format!("{name}: unparsable sum"))?;
        ensure(sum == rat(0) || sum == rat(1), &format!("{name}: sum {} not in {{0,1}}", lm.sum))?;
    }
    {
        let r = classify_semigroup(&tbl("ChainC5C8"));
        ensure(r.verdict == ClassVerdict::NotHyperbolic, "ChainC5C8: classifier not No")?;
    }
    // the oracle must agree everywhere a classifier verdict exists
    let mut names: Vec<&str> = vec![
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13",
        "C14", "C15", "C16", "C2xC2", "Q8", "Q8xC2", "S3", "D4", "Q12", "C4:C4", "M", "M12",
        "Null2", "T2", "T2p", "T2hat", "ChainC5C8",
    ];
    names.dedup();
    for name in names {
        let rec = crosscheck(name, &tbl(name));
        ensure(
            rec.agreement == Agreement::Agree,
            &format!("{name}: engines disagree ({:?} vs {:?})", rec.table_verdict, rec.oracle_verdict),
        )?;
    }
    Ok(())
}

/// Criterion 2: exact structural identities of the algebra decomposition on
/// every (associative) catalog input.
fn oracle_structural_identities() -> Result<(), String> {
    for name in catalog_names() {
        let t = catalog(&name).unwrap().table;
        let report = match analyze_table(&t) {
            Ok(r) => r,
            Err(_) => continue, // nonassociative loop entries
        };
        let comp_dims: usize = report.decomposition.components.iter().map(|c| c.algebra.dim).sum();
        ensure(
            report.algebra.dim == report.split.radical_dim + comp_dims,
            &format!("{name}: dimension bookkeeping broken"),
        )?;
        let mut sum = vec![hypunits::rat(0); report.split.semisimple_quotient.dim];
        for e in &report.decomposition.idempotents {
            for (s, x) in sum.iter_mut().zip(e) {
                *s += x.clone();
            }
        }
        ensure(
            sum == report.split.semisimple_quotient.unity,
            &format!("{name}: idempotents do not sum to unity"),
        )?;
        for d in &report.descriptors {
            let (r1, r2) = d.signature;
            ensure(
                r1 + 2 * r2 == d.center_minpoly.degree(),
                &format!("{name}: signature violates r1 + 2 r2 = degree"),
            )?;
        }
    }
    let q8 = analyze_table(&tbl("Q8")).map_err(|e| e.to_string())?;
    ensure(
        q8.descriptors
            .iter()
            .any(|d| d.kind == ComponentKind::QuaternionDefinite && d.dim_over_center == 4),
        "Q8: no definite quaternion component",
    )?;
    for name in ["S3", "M"] {
        let r = analyze_table(&tbl(name)).map_err(|e| e.to_string())?;
        ensure(
            r.descriptors.iter().any(|d| d.kind == ComponentKind::MatrixTwoOverQ),
            &format!("{name}: no 2x2 rational matrix component"),
        )?;
    }
    for name in ["T2", "T2hat"] {
        let v = try_algebra_verdict(&tbl(name)).map_err(|e| e.to_string())?;
        ensure(
            v.shape == AlgebraShape::NoncentralRadicalLine,
            &format!("{name}: shape {:?}", v.shape),
        )?;
    }
    Ok(())
}

/// Criterion 3: enumeration counts cross-validated naively at tiny orders;
/// zero Disagree records through order 4.
fn enumeration_agreement() -> Result<(), String> {
    for (n, expected) in [(1usize, 1usize), (2, 4), (3, 18)] {
        let fast = enumerate_tables(n, Dedup::Equivalence, false).map_err(|e| e.to_string())?;
        ensure(fast.len() == expected, &format!("order {n}: count {}", fast.len()))?;
        ensure(
            naive_count(n, Dedup::Equivalence) == expected,
            &format!("order {n}: naive generator disagrees"),
        )?;
    }
    for n in 1..=4 {
        let out = census(n).map_err(|e| e.to_string())?;
        let disagreements =
            out.ledger.iter().filter(|r| r.agreement == Agreement::Disagree).count();
        ensure(disagreements == 0, &format!("order {n}: {disagreements} Disagree record(s)"))?;
        let total: usize = out.row.histogram.iter().flatten().sum();
        ensure(total == out.row.count_structures, &format!("order {n}: histogram total off"))?;
    }
    Ok(())
}

/// Criterion 4: the refuter finds a witness on every oracle-No input of
/// order <= 3 and stays silent on every oracle-Yes input.
fn refuter_soundness() -> Result<(), String> {
    for n in 1..=3 {
        for (i, t) in
            enumerate_tables(n, Dedup::Equivalence, false).map_err(|e| e.to_string())?.iter().enumerate()
        {
            let verdict = match try_algebra_verdict(t) {
                Ok(v) => v.hyperbolic,
                Err(_) => continue,
            };
            match verdict {
                Hyperbolicity::Yes => {
                    let w = refute_search(t, 2, 4).map_err(|e| e.to_string())?;
                    ensure(w.is_none(), &format!("order {n} #{i}: witness on a Yes input"))?;
                }
                Hyperbolicity::No => {
                    let w = refute_search(t, 3, 6).map_err(|e| e.to_string())?;
                    ensure(w.is_some(), &format!("order {n} #{i}: no witness on a No input"))?;
                }
                Hyperbolicity::Indeterminate => {}
            }
        }
    }
    // the named rank-two field case
    let w = refute_search(&tbl("C7"), 3, 6).map_err(|e| e.to_string())?;
    ensure(w.is_some(), "C7: no witness")?;
    Ok(())
}

/// Criterion 5: loop-side expectations on the catalog RA-loops.
fn raloop_suite() -> Result<(), String> {
    let mq8 = tbl("M(Q8,2)");
    ensure(loop_predicates(&mq8).ra_loop, "M(Q8,2): not an RA-loop")?;
    ensure(
        classify_raloop(&mq8).verdict == ClassVerdict::Hyperbolic,
        "M(Q8,2): not positive",
    )?;
    let (_, flags) = subloop_normality(&mq8).map_err(|e| e.to_string())?;
    ensure(flags.iter().all(|&f| f), "M(Q8,2): non-normal subloop")?;

    let md4 = tbl("M(D4,2)");
    let r = classify_raloop(&md4);
    ensure(r.verdict == ClassVerdict::NotHyperbolic, "M(D4,2): not negative")?;
    ensure(
        r.notes.iter().any(|n| n.contains("non-normal subloop")),
        "M(D4,2): no witness note",
    )?;

    let big = mq8.direct_product(&tbl("C3"));
    let r = classify_raloop(&big);
    ensure(r.verdict == ClassVerdict::NotHyperbolic, "M(Q8,2) x C3: not negative")?;
    ensure(r.notes.iter().any(|n| n.contains("not a 2-loop")), "M(Q8,2) x C3: wrong reason")?;

    ensure(
        nontrivial_normalized_units(&mq8, 2) == 0,
        "M(Q8,2): nontrivial normalized unit found",
    )?;
    Ok(())
}

/// Criterion 6: two deterministic census runs emit byte-identical structured
/// output.
fn determinism() -> Result<(), String> {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_hypunits"))
            .args([
                "--format",
                "structured",
                "--deterministic",
                "enumerate",
                "--order",
                "3",
                "--classify",
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), "census run failed")?;
        // strip the runtime field, which legitimately varies
        let text = String::from_utf8_lossy(&out.stdout);
        let stable: String = text
            .lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).expect("structured line");
                if let Some(obj) = v.as_object_mut() {
                    obj.remove("millis");
                }
                v.to_string()
            })
            .collect::<Vec<_>>()
            .join("\n");
        Ok(stable.into_bytes())
    };
    let a = run()?;
    let b = run()?;
    ensure(a == b, "census output differs between runs")?;
    ensure(!a.is_empty(), "census output empty")?;
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Result<(), String>)> = vec![
        ("1 catalog expectations", catalog_expectations),
        ("2 oracle structural identities", oracle_structural_identities),
        ("3 enumeration agreement", enumeration_agreement),
        ("4 refuter soundness", refuter_soundness),
        ("5 RA-loop suite", raloop_suite),
        ("6 determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        match f() {
            Ok(()) => println!("criterion {name}: PASS"),
            Err(e) => {
                println!("criterion {name}: FAIL ({e})");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
