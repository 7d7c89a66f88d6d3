//! Table-side classification: decide the hyperbolic property of the rational
//! algebra directly from the combinatorial structure of the semigroup —
//! principal series, factor recognition, and a small list of admissible
//! building blocks — and cross-check the outcome against the exact algebra
//! oracle.
//!
//! Three branches cover the decidable inputs:
//!
//! * a radical-nilpotent branch, for semigroups with a zero and a unique
//!   nilpotent spanning an ideal (the T-type family);
//! * a nilpotent-free branch, for inverse semigroups whose algebra has only
//!   division components (factors must be admissible groups, with at most one
//!   rank-one exception from {C5, C8, C12});
//! * a semisimple-kernel branch, for semigroups whose algebra is semisimple
//!   with a matrix piece (factors must be admissible groups plus exactly one
//!   exceptional factor: a group from {S3, D4, Q12, C4:C4} or a Rees kernel
//!   isomorphic to M or M12).
//!
//! Inputs outside all three premises receive the first-class verdict
//! `OutOfScope` rather than a forced answer; the oracle alone speaks there.

use crate::cayley::catalog::catalog;
use crate::cayley::{isomorphism_test, CayleyTable};
use crate::exactalg::analyze_table;
use crate::green::{
    principal_series_with_extension, rees_quotient, structure_scan, Recognition,
};
use crate::groupid::{group_predicates, identify_named, NamedList};
use crate::linalg::unit_vec;
use crate::verdict::{algebra_verdict, radical_coefficient, AlgebraShape, Hyperbolicity};
use crate::{rat, Rat};
use num::Zero;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassVerdict {
    Hyperbolic,
    NotHyperbolic,
    OutOfScope,
}

/// Which branch of the decision tree produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    RadicalNilpotent,
    NilpotentFree,
    SemisimpleKernel,
    None,
}

/// The three non-isomorphic shapes of the radical-nilpotent case, named after
/// the catalog semigroups realizing them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TType {
    T2,
    T2Prime,
    T2Hat,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorCertificate {
    pub index: usize,
    pub kind: String,
    pub description: String,
    pub allowed: bool,
    pub exceptional: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct KCertificate {
    /// Canonical name of the unique exceptional factor.
    pub name: String,
    /// Which admissible list it was found in.
    pub list: String,
}

/// Exact coefficients of the nilpotent in the lifted-idempotent expressions
/// of e1 and eN, recorded (not re-decided) together with the expected
/// constraint lambda + mu in {0, 1}.
#[derive(Debug, Clone, Serialize)]
pub struct LambdaMu {
    pub lambda: String,
    pub mu: String,
    pub sum: String,
    pub sum_in_range: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub verdict: ClassVerdict,
    pub branch: Branch,
    pub factor_certificates: Vec<FactorCertificate>,
    pub k_certificate: Option<KCertificate>,
    pub t_type: Option<TType>,
    pub lambda_mu: Option<LambdaMu>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    fn out_of_scope(notes: Vec<String>) -> Self {
        ClassificationReport {
            verdict: ClassVerdict::OutOfScope,
            branch: Branch::None,
            factor_certificates: Vec::new(),
            k_certificate: None,
            t_type: None,
            lambda_mu: None,
            notes,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Agreement {
    Agree,
    Disagree,
    OracleOnly,
}

/// One line of the discrepancy ledger: both engines' verdicts on one input.
#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckRecord {
    pub input: String,
    pub table_verdict: ClassVerdict,
    pub oracle_verdict: Hyperbolicity,
    pub oracle_shape: AlgebraShape,
    pub agreement: Agreement,
    pub note: String,
}

pub fn classify_semigroup(s: &CayleyTable) -> ClassificationReport {
    classify_with_extension(s, false)
}

/// Same classification, but with the opposite tie-break when ordering the
/// J-classes; the verdict must not depend on the chain chosen.
pub fn classify_with_extension(s: &CayleyTable, reverse_ties: bool) -> ClassificationReport {
    // branch 1: zero, a unique nilpotent, and {zero, j0} an ideal
    let scan = structure_scan(s);
    if let Some(theta) = scan.zero {
        if scan.nilpotents.len() == 1 {
            let j0 = scan.nilpotents[0];
            let is_ideal = (0..s.order).all(|x| {
                (s.table[x][j0] == theta || s.table[x][j0] == j0)
                    && (s.table[j0][x] == theta || s.table[j0][x] == j0)
            });
            if is_ideal {
                return radical_nilpotent_branch(s, theta, j0, reverse_ties);
            }
        }
    }
    // remaining branches are gated on the exact algebra decomposition
    let report = match analyze_table(s) {
        Ok(r) => r,
        Err(e) => {
            return ClassificationReport::out_of_scope(vec![format!(
                "algebra decomposition unavailable: {e}"
            )])
        }
    };
    if report.split.radical_dim == 0 {
        let division_only = report
            .descriptors
            .iter()
            .all(|d| crate::verdict::is_division_kind(d.kind));
        if division_only {
            nilpotent_free_branch(s, &scan, reverse_ties)
        } else {
            semisimple_kernel_branch(s, reverse_ties)
        }
    } else if scan.zero.is_some() && !scan.nilpotents.is_empty() {
        // radical present and a nilpotent exists, yet the unique-nilpotent
        // ideal premise failed above
        ClassificationReport {
            verdict: ClassVerdict::NotHyperbolic,
            branch: Branch::RadicalNilpotent,
            factor_certificates: Vec::new(),
            k_certificate: None,
            t_type: None,
            lambda_mu: None,
            notes: vec![format!(
                "radical dimension {} with {} nilpotent(s): no single nilpotent spans an ideal",
                report.split.radical_dim,
                scan.nilpotents.len()
            )],
        }
    } else {
        ClassificationReport::out_of_scope(vec![format!(
            "radical dimension {} but no zero/nilpotent structure in the table; \
             only the algebra oracle applies",
            report.split.radical_dim
        )])
    }
}

/// Describe one principal factor for the certificate list.
fn describe_factor(idx: usize, rec: &Recognition) -> FactorCertificate {
    let description = match rec {
        Recognition::Group(g) => format!("group of order {}", g.order),
        Recognition::GroupWithZero(g) => format!("group of order {} with zero", g.order),
        Recognition::Null(k) => format!("null factor with {} nonzero element(s)", k),
        Recognition::ReesMatrix(p) => format!(
            "Rees matrix factor {}x{} over group of order {}",
            p.rows, p.cols, p.structural_group.order
        ),
        Recognition::Other => "unrecognized factor".into(),
    };
    FactorCertificate {
        index: idx,
        kind: rec.kind_name().into(),
        description,
        allowed: false,
        exceptional: false,
    }
}

fn not_hyperbolic(branch: Branch, certs: Vec<FactorCertificate>, note: String) -> ClassificationReport {
    ClassificationReport {
        verdict: ClassVerdict::NotHyperbolic,
        branch,
        factor_certificates: certs,
        k_certificate: None,
        t_type: None,
        lambda_mu: None,
        notes: vec![note],
    }
}

/// Branch for a zero plus a unique ideal-spanning nilpotent: the quotient by
/// {zero, j0} must decompose into admissible groups, and the idempotents
/// acting on j0 from the left/right determine the T-type.
fn radical_nilpotent_branch(
    s: &CayleyTable,
    theta: usize,
    j0: usize,
    reverse_ties: bool,
) -> ClassificationReport {
    let branch = Branch::RadicalNilpotent;
    let all: Vec<usize> = (0..s.order).collect();
    let quotient = rees_quotient(s, &all, &[theta, j0]);
    let series = principal_series_with_extension(&quotient, reverse_ties);
    let mut certs = Vec::new();
    for (i, f) in series.factors.iter().enumerate() {
        let mut cert = describe_factor(i, &f.recognition);
        let Some(g) = f.recognition.group_table() else {
            return not_hyperbolic(
                branch,
                certs,
                format!("quotient factor {} is not a group ({})", i, cert.kind),
            );
        };
        let Ok(profile) = group_predicates(g) else {
            return not_hyperbolic(branch, certs, format!("quotient factor {} is defective", i));
        };
        if !profile.allowed() {
            return not_hyperbolic(
                branch,
                certs,
                format!(
                    "quotient factor {} (order {}, exponent {}) is not an admissible group",
                    i, profile.order, profile.exponent
                ),
            );
        }
        cert.allowed = true;
        cert.description.push_str(" [admissible]");
        certs.push(cert);
    }
    let idem = s.idempotents();
    let e1 = idem.iter().copied().find(|&e| s.table[e][j0] == j0);
    let en = idem.iter().copied().find(|&e| s.table[j0][e] == j0);
    let mut notes = Vec::new();
    let (t_type, e1, en) = match (e1, en) {
        (Some(e1), Some(en)) => {
            let p = s.table[e1][en];
            let q = s.table[en][e1];
            let t = if p == theta && q == theta {
                TType::T2
            } else if p == q && p != theta && s.table[p][p] == p {
                notes.push(format!(
                    "shared idempotent e3 = e1*eN = eN*e1 at position {} (the middle element \
                     of the five-element model)",
                    p
                ));
                TType::T2Prime
            } else if q == theta && p == j0 {
                TType::T2Hat
            } else {
                return not_hyperbolic(
                    branch,
                    certs,
                    format!(
                        "products e1*eN = {} and eN*e1 = {} match no admissible pattern",
                        p, q
                    ),
                );
            };
            (Some(t), Some(e1), Some(en))
        }
        (None, None) => {
            notes.push(
                "no idempotent acts on the nilpotent from either side: the radical line is \
                 central"
                    .into(),
            );
            (None, None, None)
        }
        _ => {
            notes.push(
                "idempotents act on the nilpotent from one side only; the complementary \
                 idempotent lives in the unity adjunction, so the radical line is noncentral \
                 but carries no T-type"
                    .into(),
            );
            (None, None, None)
        }
    };
    let lambda_mu = match (e1, en) {
        (Some(e1), Some(en)) => lambda_mu_certificate(s, e1, en, j0, &mut notes),
        _ => None,
    };
    ClassificationReport {
        verdict: ClassVerdict::Hyperbolic,
        branch,
        factor_certificates: certs,
        k_certificate: None,
        t_type,
        lambda_mu,
        notes,
    }
}

/// Express e1 and eN over the lifted idempotents and read off the nilpotent
/// coefficients; the constraint lambda + mu in {0, 1} is recorded as a
/// certificate.
fn lambda_mu_certificate(
    s: &CayleyTable,
    e1: usize,
    en: usize,
    j0: usize,
    notes: &mut Vec<String>,
) -> Option<LambdaMu> {
    let report = match analyze_table(s) {
        Ok(r) => r,
        Err(e) => {
            notes.push(format!("lambda/mu unavailable: {e}"));
            return None;
        }
    };
    if report.split.radical_dim != 1 {
        notes.push(format!(
            "lambda/mu unavailable: radical dimension is {}",
            report.split.radical_dim
        ));
        return None;
    }
    let dim = report.algebra.dim;
    let lambda = radical_coefficient(&report, &unit_vec(dim, e1), j0)?;
    let mu = radical_coefficient(&report, &unit_vec(dim, en), j0)?;
    let sum = lambda.clone() + mu.clone();
    Some(LambdaMu {
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        sum: sum.to_string(),
        sum_in_range: sum.is_zero() || sum == rat(1),
    })
}

/// Branch for algebras with only division components: the semigroup must be
/// inverse and every principal factor an admissible group, with at most one
/// exceptional cyclic factor from {C5, C8, C12}.
fn nilpotent_free_branch(
    s: &CayleyTable,
    scan: &crate::green::StructureScan,
    reverse_ties: bool,
) -> ClassificationReport {
    let branch = Branch::NilpotentFree;
    if !scan.is_inverse {
        return not_hyperbolic(branch, Vec::new(), "not an inverse semigroup".into());
    }
    let series = principal_series_with_extension(s, reverse_ties);
    let mut certs = Vec::new();
    let mut k_cert: Option<KCertificate> = None;
    for (i, f) in series.factors.iter().enumerate() {
        let mut cert = describe_factor(i, &f.recognition);
        let Some(g) = f.recognition.group_table() else {
            return not_hyperbolic(
                branch,
                certs,
                format!("factor {} is not a group ({})", i, cert.kind),
            );
        };
        let Ok(profile) = group_predicates(g) else {
            return not_hyperbolic(branch, certs, format!("factor {} is defective", i));
        };
        if profile.allowed() {
            cert.allowed = true;
            cert.description.push_str(" [admissible]");
        } else if let Ok(Some(name)) = identify_named(g, NamedList::KCyclic) {
            cert.exceptional = true;
            cert.description.push_str(&format!(" [exceptional {}]", name));
            if k_cert.is_some() {
                certs.push(cert);
                return not_hyperbolic(
                    branch,
                    certs,
                    "more than one exceptional cyclic factor".into(),
                );
            }
            k_cert = Some(KCertificate { name, list: "C5/C8/C12".into() });
        } else {
            return not_hyperbolic(
                branch,
                certs,
                format!(
                    "factor {} (order {}, exponent {}) is neither admissible nor an \
                     exceptional cyclic group",
                    i, profile.order, profile.exponent
                ),
            );
        }
        certs.push(cert);
    }
    ClassificationReport {
        verdict: ClassVerdict::Hyperbolic,
        branch,
        factor_certificates: certs,
        k_certificate: k_cert,
        t_type: None,
        lambda_mu: None,
        notes: Vec::new(),
    }
}

/// Branch for semisimple algebras with a matrix piece: admissible group
/// factors plus exactly one exceptional factor, either a group from
/// {S3, D4, Q12, C4:C4} or a Rees kernel isomorphic to M or M12; the maximal
/// subgroups outside the exceptional factor together with it must partition
/// the semigroup.
fn semisimple_kernel_branch(s: &CayleyTable, reverse_ties: bool) -> ClassificationReport {
    let branch = Branch::SemisimpleKernel;
    let series = principal_series_with_extension(s, reverse_ties);
    let mut certs = Vec::new();
    let mut k_cert: Option<KCertificate> = None;
    let mut k_factor: Option<usize> = None;
    for (i, f) in series.factors.iter().enumerate() {
        let mut cert = describe_factor(i, &f.recognition);
        match &f.recognition {
            Recognition::Group(g) | Recognition::GroupWithZero(g) => {
                let Ok(profile) = group_predicates(g) else {
                    return not_hyperbolic(branch, certs, format!("factor {} is defective", i));
                };
                if profile.allowed() {
                    cert.allowed = true;
                    cert.description.push_str(" [admissible]");
                } else if let Ok(Some(name)) = identify_named(g, NamedList::KGroups) {
                    cert.exceptional = true;
                    cert.description.push_str(&format!(" [exceptional {}]", name));
                    if k_cert.is_some() {
                        certs.push(cert);
                        return not_hyperbolic(branch, certs, "two exceptional factors".into());
                    }
                    k_cert = Some(KCertificate { name, list: "S3/D4/Q12/C4:C4".into() });
                    k_factor = Some(i);
                } else {
                    return not_hyperbolic(
                        branch,
                        certs,
                        format!(
                            "factor {} (order {}, exponent {}) is neither admissible nor a \
                             listed exceptional group",
                            i, profile.order, profile.exponent
                        ),
                    );
                }
            }
            Recognition::ReesMatrix(_) => {
                let named = ["M", "M12"].iter().find(|name| {
                    let target = catalog(name).unwrap().table;
                    isomorphism_test(&f.quotient_table, &target, false).is_some()
                });
                let Some(name) = named else {
                    return not_hyperbolic(
                        branch,
                        certs,
                        format!("Rees factor {} is not isomorphic to M or M12", i),
                    );
                };
                // the Rees factor must be the kernel: nothing below it except
                // possibly the zero
                let below = &series.chain.get(i + 1).cloned().unwrap_or_default();
                let is_kernel =
                    below.is_empty() || (below.len() == 1 && Some(below[0]) == s.zero);
                if !is_kernel {
                    return not_hyperbolic(
                        branch,
                        certs,
                        format!("Rees factor {} ({}) is not the kernel ideal", i, name),
                    );
                }
                cert.exceptional = true;
                cert.description.push_str(&format!(" [exceptional {} as kernel]", name));
                if k_cert.is_some() {
                    certs.push(cert);
                    return not_hyperbolic(branch, certs, "two exceptional factors".into());
                }
                k_cert = Some(KCertificate { name: name.to_string(), list: "M/M12".into() });
                k_factor = Some(i);
            }
            _ => {
                return not_hyperbolic(
                    branch,
                    certs,
                    format!("factor {} is not a group or Rees factor ({})", i, cert.kind),
                );
            }
        }
        certs.push(cert);
    }
    let Some(kf) = k_factor else {
        return not_hyperbolic(
            branch,
            certs,
            "matrix piece present but no exceptional factor found".into(),
        );
    };
    // literal disjoint-union check: the exceptional factor's elements (with
    // the ideal below it) plus the maximal subgroups outside it cover S
    // exactly once
    let mut covered = vec![0usize; s.order];
    let mut k_full: Vec<usize> = series.factors[kf].class_elements.clone();
    k_full.extend(series.chain.get(kf + 1).cloned().unwrap_or_default());
    for &x in &k_full {
        covered[x] += 1;
    }
    let gd = crate::green::greens_data(s);
    for (e, elements) in &gd.maximal_subgroups {
        if k_full.contains(e) {
            continue;
        }
        for &x in elements {
            covered[x] += 1;
        }
    }
    if covered.iter().any(|&c| c != 1) {
        return not_hyperbolic(
            branch,
            certs,
            "maximal subgroups and the exceptional factor do not partition the semigroup".into(),
        );
    }
    ClassificationReport {
        verdict: ClassVerdict::Hyperbolic,
        branch,
        factor_certificates: certs,
        k_certificate: k_cert,
        t_type: None,
        lambda_mu: None,
        notes: vec!["maximal subgroups and the exceptional factor partition the semigroup".into()],
    }
}

/// Run both engines and record whether they agree. `OutOfScope` (and an
/// indeterminate oracle) yields `OracleOnly`: the oracle verdict stands
/// alone.
pub fn crosscheck(id: &str, s: &CayleyTable) -> CrosscheckRecord {
    let table_side = classify_semigroup(s);
    let oracle = algebra_verdict(s);
    let (agreement, note) = match (table_side.verdict, oracle.hyperbolic) {
        (ClassVerdict::OutOfScope, _) => (
            Agreement::OracleOnly,
            format!("table-side out of scope: {}", table_side.notes.join("; ")),
        ),
        (_, Hyperbolicity::Indeterminate) => {
            (Agreement::OracleOnly, "oracle indeterminate".into())
        }
        (ClassVerdict::Hyperbolic, Hyperbolicity::Yes)
        | (ClassVerdict::NotHyperbolic, Hyperbolicity::No) => (Agreement::Agree, String::new()),
        _ => (
            Agreement::Disagree,
            format!(
                "table-side {:?} vs oracle {:?}; table notes: {}",
                table_side.verdict,
                oracle.hyperbolic,
                table_side.notes.join("; ")
            ),
        ),
    };
    CrosscheckRecord {
        input: id.to_string(),
        table_verdict: table_side.verdict,
        oracle_verdict: oracle.hyperbolic,
        oracle_shape: oracle.shape,
        agreement,
        note,
    }
}

/// Exact rational parsed back from a report string (test helper for the
/// lambda/mu certificates).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let mut parts = s.splitn(2, '/');
    let n: num::BigInt = parts.next()?.parse().ok()?;
    match parts.next() {
        None => Some(Rat::from_integer(n)),
        Some(d) => Some(Rat::new(n, d.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::catalog::catalog;

    fn tbl(name: &str) -> CayleyTable {
        catalog(name).unwrap().table
    }

    fn classify(name: &str) -> ClassificationReport {
        classify_semigroup(&tbl(name))
    }

    #[test]
    fn small_cyclic_groups_without_exception() {
        for name in ["C1", "C2", "C3", "C4", "C6"] {
            let r = classify(name);
            assert_eq!(r.verdict, ClassVerdict::Hyperbolic, "{}", name);
            assert_eq!(r.branch, Branch::NilpotentFree, "{}", name);
            assert!(r.k_certificate.is_none(), "{}", name);
        }
    }

    #[test]
    fn exceptional_cyclic_groups_carry_certificates() {
        for name in ["C5", "C8", "C12"] {
            let r = classify(name);
            assert_eq!(r.verdict, ClassVerdict::Hyperbolic, "{}", name);
            assert_eq!(r.branch, Branch::NilpotentFree, "{}", name);
            let k = r.k_certificate.expect("unique exceptional factor");
            assert_eq!(k.name, name);
        }
    }

    #[test]
    fn rejected_cyclic_groups() {
        for name in ["C7", "C9", "C10", "C11", "C13", "C14", "C15", "C16"] {
            let r = classify(name);
            assert_eq!(r.verdict, ClassVerdict::NotHyperbolic, "{}", name);
        }
    }

    #[test]
    fn hamiltonian_two_groups_pass() {
        for name in ["Q8", "Q8xC2"] {
            let r = classify(name);
            assert_eq!(r.verdict, ClassVerdict::Hyperbolic, "{}", name);
            assert!(r.k_certificate.is_none(), "{}", name);
        }
    }

    #[test]
    fn exceptional_groups_use_kernel_branch() {
        for name in ["S3", "D4", "Q12", "C4:C4"] {
            let r = classify(name);
            assert_eq!(r.verdict, ClassVerdict::Hyperbolic, "{}", name);
            assert_eq!(r.branch, Branch::SemisimpleKernel, "{}", name);
            let k = r.k_certificate.expect("exceptional factor expected");
            assert_eq!(catalog(&k.name).unwrap().name, catalog(name).unwrap().name);
        }
    }

    #[test]
    fn rees_kernels_pass() {
        for name in ["M", "M12"] {
            let r = classify(name);
            assert_eq!(r.verdict, ClassVerdict::Hyperbolic, "{}", name);
            assert_eq!(r.branch, Branch::SemisimpleKernel, "{}", name);
            let k = r.k_certificate.expect("kernel certificate");
            assert_eq!(k.name, name);
            assert_eq!(k.list, "M/M12");
        }
    }

    #[test]
    fn null_semigroup_is_central_radical_case() {
        let r = classify("Null2");
        assert_eq!(r.verdict, ClassVerdict::Hyperbolic);
        assert_eq!(r.branch, Branch::RadicalNilpotent);
        assert!(r.t_type.is_none());
        assert!(r.notes.iter().any(|n| n.contains("central")));
    }

    #[test]
    fn t_types_detected_with_lambda_mu() {
        for (name, t) in [("T2", TType::T2), ("T2p", TType::T2Prime), ("T2hat", TType::T2Hat)]
        {
            let r = classify(name);
            assert_eq!(r.verdict, ClassVerdict::Hyperbolic, "{}", name);
            assert_eq!(r.branch, Branch::RadicalNilpotent, "{}", name);
            assert_eq!(r.t_type, Some(t), "{}", name);
            let lm = r.lambda_mu.unwrap_or_else(|| panic!("{} lambda/mu missing", name));
            assert!(lm.sum_in_range, "{}: sum was {}", name, lm.sum);
        }
    }

    #[test]
    fn t2_has_zero_coefficient_sum() {
        let r = classify("T2");
        let lm = r.lambda_mu.unwrap();
        assert_eq!(parse_rat(&lm.sum).unwrap(), crate::rat(0));
    }

    #[test]
    fn chain_of_two_exceptional_factors_fails() {
        let r = classify("ChainC5C8");
        assert_eq!(r.verdict, ClassVerdict::NotHyperbolic);
        assert_eq!(r.branch, Branch::NilpotentFree);
        assert!(r.notes.iter().any(|n| n.contains("more than one")));
    }

    #[test]
    fn left_zero_band_is_out_of_scope() {
        let r = classify("LZ2");
        assert_eq!(r.verdict, ClassVerdict::OutOfScope);
        assert_eq!(r.branch, Branch::None);
    }

    #[test]
    fn crosscheck_agreement_samples() {
        let rec = crosscheck("C5", &tbl("C5"));
        assert_eq!(rec.agreement, Agreement::Agree);
        assert_eq!(rec.oracle_verdict, Hyperbolicity::Yes);

        let rec = crosscheck("C7", &tbl("C7"));
        assert_eq!(rec.agreement, Agreement::Agree);
        assert_eq!(rec.oracle_verdict, Hyperbolicity::No);

        let rec = crosscheck("LZ2", &tbl("LZ2"));
        assert_eq!(rec.agreement, Agreement::OracleOnly);
        assert_eq!(rec.oracle_verdict, Hyperbolicity::Yes);
        assert_eq!(rec.oracle_shape, AlgebraShape::NoncentralRadicalLine);
    }

    #[test]
    fn verdict_independent_of_chain_and_labels() {
        for name in ["C12", "S3", "M12", "T2hat", "ChainC5C8", "Null2"] {
            let t = tbl(name);
            let a = classify_with_extension(&t, false);
            let b = classify_with_extension(&t, true);
            assert_eq!(a.verdict, b.verdict, "{}", name);
            assert_eq!(a.branch, b.branch, "{}", name);
            assert_eq!(a.t_type, b.t_type, "{}", name);

            // rotate the element labels
            let n = t.order;
            let perm: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let mut rows = vec![vec![0; n]; n];
            for x in 0..n {
                for y in 0..n {
                    rows[perm[x]][perm[y]] = perm[t.table[x][y]];
                }
            }
            let relabeled = CayleyTable::from_rows(t.kind, rows).unwrap();
            let c = classify_semigroup(&relabeled);
            assert_eq!(a.verdict, c.verdict, "{} relabeled", name);
            assert_eq!(a.branch, c.branch, "{} relabeled", name);
            assert_eq!(a.t_type, c.t_type, "{} relabeled", name);
        }
    }
}
