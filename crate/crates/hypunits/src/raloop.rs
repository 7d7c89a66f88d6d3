//! Loop-side analysis: Moufang detection, alternative-but-not-associative
//! loop algebras, subloop normality, and recognition of hamiltonian Moufang
//! 2-loops — the loops whose integral loop rings have only trivial normalized
//! units, hence hyperbolic unit groups.

use crate::cayley::CayleyTable;
use crate::classify::{Branch, ClassVerdict, ClassificationReport};
use crate::exactalg::{alternative_check, build_algebra};
use crate::groupid::{group_predicates, GroupProfile};
use crate::linalg::det_i128;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

/// Subloop enumeration is all-pairs closure; larger inputs are refused.
pub const LOOP_ORDER_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LoopError {
    #[error("loop order {0} exceeds the subloop-enumeration cap {LOOP_ORDER_CAP}")]
    OrderCapExceeded(usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct LoopAnalysis {
    pub moufang: bool,
    /// The rational loop algebra is alternative but not associative.
    pub ra_loop: bool,
    /// Element orders (well-defined for Moufang loops by power associativity).
    pub power_associative_orders: Vec<usize>,
    /// Finite input: every element is torsion.
    pub torsion_is_all: bool,
    pub subloops: Vec<Vec<usize>>,
    pub normal_flags: Vec<bool>,
    pub hamiltonian_moufang_2loop: bool,
    /// Present when the loop is associative, i.e. a group.
    pub group_case: Option<GroupProfile>,
}

/// Moufang identity (x(yz))x = (xy)(zx), checked on all triples.
pub fn is_moufang(l: &CayleyTable) -> bool {
    let t = &l.table;
    let n = l.order;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t[t[x][t[y][z]]][x] != t[t[x][y]][t[z][x]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Order of an element by iterated left multiplication (sound for power
/// associative loops; arbitrary loops get the smallest k with x^(k) = e under
/// this bracketing).
fn element_order(l: &CayleyTable, x: usize) -> usize {
    let e = l.identity.expect("loops have an identity");
    let mut cur = x;
    for k in 1..=l.order {
        if cur == e {
            return k;
        }
        cur = l.table[x][cur];
    }
    l.order + 1
}

/// Moufang/alternativity predicates and element orders (subloop fields are
/// left empty; see [`subloop_normality`] and [`analyze_loop`]).
pub fn loop_predicates(l: &CayleyTable) -> LoopAnalysis {
    let a = build_algebra(l);
    let alt = alternative_check(&a);
    let mut orders: Vec<usize> = (0..l.order).map(|x| element_order(l, x)).collect();
    orders.sort_unstable();
    let group_case = if alt.associative { group_predicates(l).ok() } else { None };
    LoopAnalysis {
        moufang: is_moufang(l),
        ra_loop: alt.alternative && !alt.associative,
        power_associative_orders: orders,
        torsion_is_all: true,
        subloops: Vec::new(),
        normal_flags: Vec::new(),
        hamiltonian_moufang_2loop: false,
        group_case,
    }
}

/// Multiplicative closure of a generating set. In a finite loop a subset
/// closed under multiplication is a subloop (left/right translations restrict
/// to bijections).
fn closure(l: &CayleyTable, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(l.identity.expect("loops have an identity"));
    loop {
        let mut added = false;
        let snapshot: Vec<usize> = set.iter().copied().collect();
        for &x in &snapshot {
            for &y in &snapshot {
                if set.insert(l.table[x][y]) {
                    added = true;
                }
            }
        }
        if !added {
            return set.into_iter().collect();
        }
    }
}

/// All subloops generated by at most two elements, with a normality flag for
/// each: N is normal iff xN = Nx, (Nx)y = N(xy) and y(xN) = (yx)N for all
/// x, y.
pub fn subloop_normality(
    l: &CayleyTable,
) -> Result<(Vec<Vec<usize>>, Vec<bool>), LoopError> {
    if l.order > LOOP_ORDER_CAP {
        return Err(LoopError::OrderCapExceeded(l.order));
    }
    let mut subloops: Vec<Vec<usize>> = Vec::new();
    for x in 0..l.order {
        for y in x..l.order {
            let h = closure(l, &[x, y]);
            if !subloops.contains(&h) {
                subloops.push(h);
            }
        }
    }
    subloops.sort();
    let flags = subloops.iter().map(|h| is_normal(l, h)).collect();
    Ok((subloops, flags))
}

fn is_normal(l: &CayleyTable, h: &[usize]) -> bool {
    let t = &l.table;
    let n = l.order;
    let set = |it: &mut dyn Iterator<Item = usize>| -> BTreeSet<usize> { it.collect() };
    for x in 0..n {
        let xn = set(&mut h.iter().map(|&a| t[x][a]));
        let nx = set(&mut h.iter().map(|&a| t[a][x]));
        if xn != nx {
            return false;
        }
        for y in 0..n {
            let nxy_left = set(&mut h.iter().map(|&a| t[t[a][x]][y]));
            let nxy_right = set(&mut h.iter().map(|&a| t[a][t[x][y]]));
            if nxy_left != nxy_right {
                return false;
            }
            let yxn_left = set(&mut h.iter().map(|&a| t[y][t[x][a]]));
            let yxn_right = set(&mut h.iter().map(|&a| t[t[y][x]][a]));
            if yxn_left != yxn_right {
                return false;
            }
        }
    }
    true
}

/// Full analysis: predicates, subloops and the hamiltonian Moufang 2-loop
/// flag (nonassociative Moufang, order and all element orders powers of two,
/// all subloops normal).
pub fn analyze_loop(l: &CayleyTable) -> Result<LoopAnalysis, LoopError> {
    let mut out = loop_predicates(l);
    let (subloops, flags) = subloop_normality(l)?;
    let all_normal = flags.iter().all(|&f| f);
    let two_loop = l.order.is_power_of_two()
        && out.power_associative_orders.iter().all(|&o| o.is_power_of_two());
    out.hamiltonian_moufang_2loop =
        out.ra_loop && out.moufang && two_loop && all_normal;
    out.subloops = subloops;
    out.normal_flags = flags;
    Ok(out)
}

/// Loop-side verdict: hamiltonian Moufang 2-loops are exactly the finite
/// RA-loops whose integral loop rings have trivial normalized units, hence
/// the hyperbolic property; associative or non-alternative inputs are out of
/// scope for this branch.
pub fn classify_raloop(l: &CayleyTable) -> ClassificationReport {
    let analysis = match analyze_loop(l) {
        Ok(a) => a,
        Err(e) => {
            return ClassificationReport {
                verdict: ClassVerdict::OutOfScope,
                branch: Branch::None,
                factor_certificates: Vec::new(),
                k_certificate: None,
                t_type: None,
                lambda_mu: None,
                notes: vec![format!("loop analysis unavailable: {e}")],
            }
        }
    };
    let mut notes = Vec::new();
    let verdict = if !analysis.ra_loop {
        notes.push(if analysis.group_case.is_some() {
            "associative input: the loop is a group, outside the loop-side branch".into()
        } else {
            "loop algebra is not alternative: not an RA-loop".into()
        });
        ClassVerdict::OutOfScope
    } else if analysis.hamiltonian_moufang_2loop {
        notes.push(
            "hamiltonian Moufang 2-loop: expected that all normalized units of the integral \
             loop ring are trivial"
                .into(),
        );
        ClassVerdict::Hyperbolic
    } else {
        if let Some(idx) = analysis.normal_flags.iter().position(|&f| !f) {
            notes.push(format!(
                "non-normal subloop witness: {:?}",
                analysis.subloops[idx]
            ));
        }
        if !l.order.is_power_of_two()
            || analysis.power_associative_orders.iter().any(|&o| !o.is_power_of_two())
        {
            notes.push("not a 2-loop: some element order is not a power of two".into());
        }
        ClassVerdict::NotHyperbolic
    };
    ClassificationReport {
        verdict,
        branch: Branch::None,
        factor_certificates: Vec::new(),
        k_certificate: None,
        t_type: None,
        lambda_mu: None,
        notes,
    }
}

/// Count nontrivial normalized units of the integral loop ring with small
/// support and height: integer combinations with coefficient sum one, at most
/// three nonzero coordinates, that are two-sided units but not loop elements.
/// For a hamiltonian Moufang 2-loop the expected count is zero.
pub fn nontrivial_normalized_units(l: &CayleyTable, height: i64) -> usize {
    let a = build_algebra(l);
    assert_eq!(a.dim, l.order, "loops have an identity; no adjoined unity");
    let n = l.order;
    let consts: Vec<Vec<usize>> = l.table.clone();
    let mul = |x: &[i128], y: &[i128]| -> Vec<i128> {
        let mut out = vec![0i128; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] != 0 {
                    out[consts[i][j]] += x[i] * y[j];
                }
            }
        }
        out
    };
    let e = l.identity.expect("loops have an identity");
    let unity: Vec<i128> = (0..n).map(|i| i128::from(i == e)).collect();
    let mut supports: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            supports.push(vec![i, j]);
            for k in j + 1..n {
                supports.push(vec![i, j, k]);
            }
        }
    }
    let mut count = 0usize;
    for sup in supports {
        let s = sup.len();
        let mut c = vec![-height; s];
        loop {
            if c.iter().all(|&v| v != 0) && c.iter().sum::<i64>() == 1 {
                let mut x = vec![0i128; n];
                for (pos, &idx) in sup.iter().enumerate() {
                    x[idx] = c[pos] as i128;
                }
                // left multiplication matrix, integrally
                let mut lm = vec![vec![0i128; n]; n];
                for i in 0..n {
                    if x[i] != 0 {
                        for j in 0..n {
                            lm[consts[i][j]][j] += x[i];
                        }
                    }
                }
                let mut det_m = lm.clone();
                if det_i128(&mut det_m).abs() == 1 {
                    // candidate: verify a two-sided integral inverse
                    if let Some(y) = integral_solve(&lm, &unity) {
                        if mul(&x, &y) == unity && mul(&y, &x) == unity {
                            count += 1;
                        }
                    }
                }
            }
            let mut k = s;
            let mut done = true;
            while k > 0 {
                k -= 1;
                if c[k] < height {
                    c[k] += 1;
                    for v in c.iter_mut().skip(k + 1) {
                        *v = -height;
                    }
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    count
}

/// Solve M y = b over the integers (via exact rational elimination).
fn integral_solve(m: &[Vec<i128>], b: &[i128]) -> Option<Vec<i128>> {
    use crate::linalg::Matrix;
    use num::{BigInt, ToPrimitive};
    let to_rat = |v: i128| crate::Rat::from_integer(BigInt::from(v));
    let mat = Matrix::from_rows(m.iter().map(|r| r.iter().map(|&x| to_rat(x)).collect()).collect());
    let rhs: Vec<crate::Rat> = b.iter().map(|&x| to_rat(x)).collect();
    let sol = mat.solve(&rhs)?;
    let mut out = Vec::with_capacity(sol.len());
    for c in sol {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer().to_i128()?);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::catalog::catalog;
    use crate::cayley::TableKind;

    fn tbl(name: &str) -> CayleyTable {
        catalog(name).unwrap().table
    }

    #[test]
    fn chein_double_of_q8_is_ra_loop() {
        let a = loop_predicates(&tbl("M(Q8,2)"));
        assert!(a.moufang);
        assert!(a.ra_loop);
        assert!(a.group_case.is_none());
    }

    #[test]
    fn q8_is_moufang_but_associative() {
        let a = loop_predicates(&tbl("Q8"));
        assert!(a.moufang);
        assert!(!a.ra_loop);
        assert!(a.group_case.is_some());
    }

    #[test]
    fn order_five_latin_square_is_not_moufang() {
        // a quasigroup table with identity that fails the Moufang identity
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let l = CayleyTable::from_rows(TableKind::LoopCandidate, rows).unwrap();
        assert!(!is_moufang(&l));
    }

    #[test]
    fn subloops_of_chein_q8_all_normal() {
        let (subs, flags) = subloop_normality(&tbl("M(Q8,2)")).unwrap();
        assert!(!subs.is_empty());
        assert!(flags.iter().all(|&f| f));
    }

    #[test]
    fn chein_d4_has_non_normal_subloop() {
        let (_, flags) = subloop_normality(&tbl("M(D4,2)")).unwrap();
        assert!(flags.iter().any(|&f| !f));
    }

    #[test]
    fn c4_subgroups_normal() {
        let (_, flags) = subloop_normality(&tbl("C4")).unwrap();
        assert!(flags.iter().all(|&f| f));
    }

    #[test]
    fn chein_q8_positive_verdict() {
        let r = classify_raloop(&tbl("M(Q8,2)"));
        assert_eq!(r.verdict, ClassVerdict::Hyperbolic);
    }

    #[test]
    fn chein_d4_negative_with_witness() {
        let r = classify_raloop(&tbl("M(D4,2)"));
        assert_eq!(r.verdict, ClassVerdict::NotHyperbolic);
        assert!(r.notes.iter().any(|n| n.contains("non-normal subloop")));
    }

    #[test]
    fn chein_q8_times_c3_is_not_a_two_loop() {
        let l = tbl("M(Q8,2)").direct_product(&tbl("C3"));
        let r = classify_raloop(&l);
        assert_eq!(r.verdict, ClassVerdict::NotHyperbolic);
        assert!(r.notes.iter().any(|n| n.contains("not a 2-loop")));
    }

    #[test]
    fn ra_loop_invariant_under_opposite() {
        for name in ["M(Q8,2)", "M(D4,2)", "Q8"] {
            let l = tbl(name);
            assert_eq!(
                loop_predicates(&l).ra_loop,
                loop_predicates(&l.opposite()).ra_loop,
                "{}",
                name
            );
        }
    }

    #[test]
    fn no_nontrivial_normalized_units_for_chein_q8() {
        assert_eq!(nontrivial_normalized_units(&tbl("M(Q8,2)"), 2), 0);
    }
}
