//! The algebra-side oracle: turn the exact decomposition of a table algebra
//! into a verdict on the hyperbolic property (does some Z-order's unit group
//! contain a rank-two free abelian subgroup?), classify the algebra's overall
//! shape, and optionally search for explicit Z^2 witnesses.

pub mod refute;

use crate::cayley::CayleyTable;
use crate::exactalg::{
    analyze_table, lift_idempotents, AlgebraError, AlgebraReport, ComponentKind, UnitClass,
    UnitClassTag,
};
use crate::linalg::{vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec, Matrix, RowSpace};
use num::Zero;
use serde::Serialize;

pub use refute::{refute_search, Z2Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Hyperbolicity {
    Yes,
    No,
    Indeterminate,
}

/// Coarse shape of the algebra, matching the four admissible decompositions:
/// all-division semisimple, semisimple with a single 2x2 rational matrix
/// piece, a one-dimensional central radical, or a one-dimensional non-central
/// radical glued by an upper-triangular 2x2 summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlgebraShape {
    SemisimpleDivision,
    SemisimpleWithMatrixPiece,
    CentralRadicalLine,
    NoncentralRadicalLine,
    OutsideKnownShapes,
}

#[derive(Debug, Clone, Serialize)]
pub struct InfiniteSource {
    /// Which component (or the radical) the infinite unit supply comes from.
    pub origin: String,
    pub class: UnitClass,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraVerdict {
    pub hyperbolic: Hyperbolicity,
    pub infinite_sources: Vec<InfiniteSource>,
    pub shape: AlgebraShape,
    pub certificates: Vec<String>,
}

pub(crate) fn is_division_kind(k: ComponentKind) -> bool {
    matches!(
        k,
        ComponentKind::Field
            | ComponentKind::QuaternionDefinite
            | ComponentKind::QuaternionIndefiniteDivision
            | ComponentKind::OctonionDefinite
    )
}

/// The oracle: exact decomposition, one unit class per component, the radical
/// source rule (dim 1 contributes one VirtuallyZ source from the unipotents
/// 1 + J; dim >= 2 forces No), and the shape check.
pub fn algebra_verdict(t: &CayleyTable) -> AlgebraVerdict {
    let report = match analyze_table(t) {
        Ok(r) => r,
        Err(e) => {
            return AlgebraVerdict {
                hyperbolic: Hyperbolicity::Indeterminate,
                infinite_sources: vec![],
                shape: AlgebraShape::OutsideKnownShapes,
                certificates: vec![format!("analysis failed: {}", e)],
            }
        }
    };
    verdict_from_report(&report)
}

pub fn verdict_from_report(report: &AlgebraReport) -> AlgebraVerdict {
    let mut certificates = Vec::new();
    let mut sources: Vec<InfiniteSource> = Vec::new();
    let mut indeterminate = false;
    for (i, d) in report.descriptors.iter().enumerate() {
        let origin = format!(
            "component {} (center {}, {:?})",
            i + 1,
            d.center_minpoly_text,
            d.kind
        );
        match d.unit_class.tag {
            UnitClassTag::Finite => {}
            UnitClassTag::Indeterminate => {
                indeterminate = true;
                certificates.push(format!("{}: unit class indeterminate", origin));
            }
            _ => sources.push(InfiniteSource { origin, class: d.unit_class.clone() }),
        }
    }
    let rdim = report.split.radical_dim;
    if rdim == 1 {
        sources.push(InfiniteSource {
            origin: "radical (unipotent units 1 + J)".into(),
            class: UnitClass {
                tag: UnitClassTag::VirtuallyZ,
                justification: "one-dimensional radical gives a rank-one unipotent group".into(),
            },
        });
    } else if rdim >= 2 {
        sources.push(InfiniteSource {
            origin: format!("radical of dimension {}", rdim),
            class: UnitClass {
                tag: UnitClassTag::ContainsZ2,
                justification:
                    "1 + J is torsion-free nilpotent of Hirsch length >= 2, so it contains Z^2"
                        .into(),
            },
        });
    }
    let z2 = sources.iter().any(|s| s.class.tag == UnitClassTag::ContainsZ2);
    let infinite_count = sources.len();
    let hyperbolic = if z2 || infinite_count >= 2 {
        if infinite_count >= 2 && !z2 {
            certificates.push(format!(
                "{} independent infinite unit sources; their product contains Z^2",
                infinite_count
            ));
        }
        Hyperbolicity::No
    } else if indeterminate {
        Hyperbolicity::Indeterminate
    } else {
        Hyperbolicity::Yes
    };
    if sources
        .iter()
        .any(|s| s.class.tag == UnitClassTag::FuchsianLike)
    {
        certificates.push(
            "indefinite division quaternion source: admissible as the single infinite source, \
             though no table in the classification produces it"
                .into(),
        );
    }
    let shape = shape_of(report, &mut certificates);
    AlgebraVerdict { hyperbolic, infinite_sources: sources, shape, certificates }
}

fn shape_of(report: &AlgebraReport, certificates: &mut Vec<String>) -> AlgebraShape {
    let rdim = report.split.radical_dim;
    let all_division = report.descriptors.iter().all(|d| is_division_kind(d.kind));
    if rdim == 0 {
        if all_division {
            return AlgebraShape::SemisimpleDivision;
        }
        let m2_count = report
            .descriptors
            .iter()
            .filter(|d| d.kind == ComponentKind::MatrixTwoOverQ)
            .count();
        let rest_division = report
            .descriptors
            .iter()
            .filter(|d| d.kind != ComponentKind::MatrixTwoOverQ)
            .all(|d| is_division_kind(d.kind));
        if m2_count == 1 && rest_division {
            return AlgebraShape::SemisimpleWithMatrixPiece;
        }
        return AlgebraShape::OutsideKnownShapes;
    }
    if rdim == 1 {
        if report.split.radical_central {
            return AlgebraShape::CentralRadicalLine;
        }
        if triangular_summand_check(report, certificates) {
            return AlgebraShape::NoncentralRadicalLine;
        }
        certificates.push(
            "radical is one-dimensional and non-central but no triangular 2x2 summand was found"
                .into(),
        );
        return AlgebraShape::OutsideKnownShapes;
    }
    AlgebraShape::OutsideKnownShapes
}

/// Verify the non-central-radical shape: lifted orthogonal idempotents e, f
/// with e·j = j = j·f and j·e = f·j = 0, so that span{e, f, j} is the
/// upper-triangular 2x2 rational matrices, and its two-sided annihilator is a
/// complement.
fn triangular_summand_check(report: &AlgebraReport, certificates: &mut Vec<String>) -> bool {
    let a = &report.algebra;
    let j = &report.split.radical_basis[0];
    let lifted = lift_idempotents(a, &report.split, &report.decomposition.idempotents);
    for (ei, e) in lifted.iter().enumerate() {
        for (fi, f) in lifted.iter().enumerate() {
            if ei == fi {
                continue;
            }
            let ej = a.mul(e, j);
            let jf = a.mul(j, f);
            let je = a.mul(j, e);
            let fj = a.mul(f, j);
            if &ej == j && &jf == j && vec_is_zero(&je) && vec_is_zero(&fj) {
                // two-sided annihilator of {e, f, j} must complement the span
                let mut rows = Vec::new();
                for s in [e, f, j] {
                    let l = a.left_regular(s);
                    let r = a.right_regular(s);
                    rows.extend(l.data.iter().cloned());
                    rows.extend(r.data.iter().cloned());
                }
                let ann = Matrix::from_rows(rows).kernel();
                let mut all = vec![e.clone(), f.clone(), j.clone()];
                all.extend(ann.iter().cloned());
                let full = RowSpace::new(&all, a.dim);
                if ann.len() == a.dim - 3 && full.dim() == a.dim {
                    certificates.push(format!(
                        "triangular 2x2 summand: lifted idempotents {} and {} frame the radical line",
                        ei + 1,
                        fi + 1
                    ));
                    return true;
                }
            }
        }
    }
    false
}

/// Read λ and μ off the expression of a table idempotent in the lifted basis:
/// x = Σ (lifted idempotents in the support of its image) + λ·j, and the
/// coefficient is reported with the radical basis vector normalized so that
/// the distinguished coordinate equals one.
pub fn radical_coefficient(
    report: &AlgebraReport,
    x: &[crate::Rat],
    normal_coord: usize,
) -> Option<crate::Rat> {
    let a = &report.algebra;
    let j_raw = &report.split.radical_basis[0];
    if j_raw[normal_coord].is_zero() {
        return None;
    }
    let j = vec_scale(j_raw, &(crate::rat(1) / j_raw[normal_coord].clone()));
    let lifted = lift_idempotents(a, &report.split, &report.decomposition.idempotents);
    let image = report.split.project(x);
    // sum the lifted idempotents whose quotient image appears in x's image
    let mut acc = zero_vec(a.dim);
    for (qe, le) in report.decomposition.idempotents.iter().zip(&lifted) {
        // coefficient of this central idempotent inside image: image * qe != 0
        let q = &report.split.semisimple_quotient;
        let p = q.mul(&image, qe);
        if !vec_is_zero(&p) {
            acc = vec_add(&acc, le);
        }
    }
    let diff = vec_sub(&x.to_vec(), &acc);
    // diff must be a scalar multiple of j
    let lambda = diff[normal_coord].clone();
    if diff == vec_scale(&j, &lambda) {
        Some(lambda)
    } else {
        None
    }
}

/// Convenience: oracle verdict, or the error that prevented analysis.
pub fn try_algebra_verdict(t: &CayleyTable) -> Result<AlgebraVerdict, AlgebraError> {
    let report = analyze_table(t)?;
    Ok(verdict_from_report(&report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::catalog::catalog;

    fn tbl(name: &str) -> CayleyTable {
        catalog(name).unwrap().table
    }

    fn verdict(name: &str) -> AlgebraVerdict {
        algebra_verdict(&tbl(name))
    }

    #[test]
    fn c5_yes_single_source() {
        let v = verdict("C5");
        assert_eq!(v.hyperbolic, Hyperbolicity::Yes);
        assert_eq!(v.infinite_sources.len(), 1);
        assert_eq!(v.infinite_sources[0].class.tag, UnitClassTag::VirtuallyZ);
        assert_eq!(v.shape, AlgebraShape::SemisimpleDivision);
    }

    #[test]
    fn s3_yes_matrix_piece() {
        let v = verdict("S3");
        assert_eq!(v.hyperbolic, Hyperbolicity::Yes);
        assert_eq!(v.infinite_sources.len(), 1);
        assert_eq!(v.infinite_sources[0].class.tag, UnitClassTag::VirtuallyFree);
        assert_eq!(v.shape, AlgebraShape::SemisimpleWithMatrixPiece);
    }

    #[test]
    fn chain_of_two_rank_one_fields_is_no() {
        let v = verdict("ChainC5C8");
        assert_eq!(v.hyperbolic, Hyperbolicity::No);
        let vz = v
            .infinite_sources
            .iter()
            .filter(|s| s.class.tag == UnitClassTag::VirtuallyZ)
            .count();
        assert_eq!(vz, 2);
    }

    #[test]
    fn c7_no_by_rank_two_field() {
        let v = verdict("C7");
        assert_eq!(v.hyperbolic, Hyperbolicity::No);
        assert!(v
            .infinite_sources
            .iter()
            .any(|s| s.class.tag == UnitClassTag::ContainsZ2));
    }

    #[test]
    fn finite_unit_groups_are_yes() {
        for name in ["C1", "C2", "C3", "C4", "C6", "Q8", "C2xC2", "Q8xC2"] {
            let v = verdict(name);
            assert_eq!(v.hyperbolic, Hyperbolicity::Yes, "verdict for {}", name);
            assert!(v.infinite_sources.is_empty(), "sources for {}", name);
            assert_eq!(v.shape, AlgebraShape::SemisimpleDivision);
        }
    }

    #[test]
    fn null2_central_radical_line() {
        let v = verdict("Null2");
        assert_eq!(v.shape, AlgebraShape::CentralRadicalLine);
        // a single VirtuallyZ source from the unipotents: still hyperbolic
        assert_eq!(v.hyperbolic, Hyperbolicity::Yes);
        assert_eq!(v.infinite_sources.len(), 1);
    }

    #[test]
    fn left_zero_noncentral_radical_line() {
        let v = verdict("LZ2");
        assert_eq!(v.shape, AlgebraShape::NoncentralRadicalLine);
        assert_eq!(v.hyperbolic, Hyperbolicity::Yes);
    }

    #[test]
    fn triangular_semigroups_shapes() {
        for name in ["T2", "T2hat", "T2p"] {
            let v = verdict(name);
            assert_eq!(v.shape, AlgebraShape::NoncentralRadicalLine, "shape of {}", name);
            assert_eq!(v.hyperbolic, Hyperbolicity::Yes, "verdict of {}", name);
        }
    }

    #[test]
    fn d4_and_c4c4_group_algebras() {
        // D4 allowed (abelian-by... hamiltonian? no: D4 group algebra is
        // Q^4 + M2(Q): one VirtuallyFree source -> Yes
        let v = verdict("D4");
        assert_eq!(v.hyperbolic, Hyperbolicity::Yes);
        assert_eq!(v.shape, AlgebraShape::SemisimpleWithMatrixPiece);
        let v12 = verdict("C12");
        assert_eq!(v12.hyperbolic, Hyperbolicity::Yes);
    }

    #[test]
    fn invariance_under_table_transformations() {
        for name in ["C5", "S3", "Null2", "T2", "C7", "M12"] {
            let base = verdict(name);
            let t = tbl(name);
            let opp = algebra_verdict(&t.opposite());
            assert_eq!(base.hyperbolic, opp.hyperbolic, "opposite of {}", name);
            let with_id = algebra_verdict(&t.adjoin_identity());
            assert_eq!(base.hyperbolic, with_id.hyperbolic, "identity-adjoined {}", name);
            let with_zero = algebra_verdict(&t.adjoin_zero());
            assert_eq!(base.hyperbolic, with_zero.hyperbolic, "zero-adjoined {}", name);
        }
    }

    #[test]
    fn c16_no() {
        // exponent 16: the cyclotomic field of order 16 has unit rank >= 2
        assert_eq!(verdict("C16").hyperbolic, Hyperbolicity::No);
    }
}
