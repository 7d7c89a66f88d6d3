//! Green's relations, ideals, principal series and principal factors of a
//! finite semigroup, with recognition of each factor as a group, a group with
//! zero, a null semigroup, or a Rees matrix semigroup.

use crate::cayley::{catalog::rees_table, CayleyTable, TableKind};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GreenError {
    #[error("factor is neither 0-simple, simple, nor null")]
    NotAFactor,
}

/// A partition of the element set, classes sorted by least element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl Partition {
    fn from_keys<K: Ord>(keys: Vec<K>) -> Partition {
        let n = keys.len();
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; n];
        for &i in &sorted {
            if let Some(last) = classes.last_mut() {
                if keys[last[0]] == keys[i] {
                    last.push(i);
                    continue;
                }
            }
            classes.push(vec![i]);
        }
        classes.sort_by_key(|c| c[0]);
        for (ci, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = ci;
            }
        }
        Partition { classes, class_of }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GreenData {
    pub r: Partition,
    pub l: Partition,
    pub j: Partition,
    pub h: Partition,
    /// `j_leq[a][b]`: the principal ideal of class a is contained in that of b.
    pub j_leq: Vec<Vec<bool>>,
    pub idempotents: Vec<usize>,
    /// (idempotent, element set of its maximal subgroup).
    pub maximal_subgroups: Vec<(usize, Vec<usize>)>,
    /// Per J-class: contains an idempotent.
    pub regular_flags: Vec<bool>,
}

fn right_ideal(s: &CayleyTable, x: usize) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = (0..s.order).map(|y| s.table[x][y]).collect();
    set.insert(x); // S^1
    set
}

fn left_ideal(s: &CayleyTable, x: usize) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = (0..s.order).map(|y| s.table[y][x]).collect();
    set.insert(x);
    set
}

fn two_sided_ideal(s: &CayleyTable, x: usize) -> BTreeSet<usize> {
    let mut set = BTreeSet::new();
    set.insert(x);
    for y in 0..s.order {
        set.insert(s.table[x][y]);
        set.insert(s.table[y][x]);
        for z in 0..s.order {
            set.insert(s.table[y][s.table[x][z]]);
        }
    }
    set
}

/// Green's relations of a validated semigroup, computed from principal ideals
/// in S^1.
pub fn greens_data(s: &CayleyTable) -> GreenData {
    let n = s.order;
    let rights: Vec<_> = (0..n).map(|x| right_ideal(s, x)).collect();
    let lefts: Vec<_> = (0..n).map(|x| left_ideal(s, x)).collect();
    let twos: Vec<_> = (0..n).map(|x| two_sided_ideal(s, x)).collect();
    let r = Partition::from_keys(rights.clone());
    let l = Partition::from_keys(lefts.clone());
    let j = Partition::from_keys(twos.clone());
    let h = Partition::from_keys(
        (0..n).map(|x| (rights[x].clone(), lefts[x].clone())).collect::<Vec<_>>(),
    );
    let m = j.classes.len();
    let mut j_leq = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            j_leq[a][b] = twos[j.classes[a][0]].is_subset(&twos[j.classes[b][0]]);
        }
    }
    let idempotents = s.idempotents();
    let mut maximal_subgroups = Vec::new();
    for &e in &idempotents {
        let hc = h.classes[h.class_of[e]].clone();
        maximal_subgroups.push((e, hc));
    }
    let regular_flags = (0..m)
        .map(|ci| j.classes[ci].iter().any(|&x| s.table[x][x] == x))
        .collect();
    GreenData { r, l, j, h, j_leq, idempotents, maximal_subgroups, regular_flags }
}

/// Summary facts of the table used by the theorem branches.
#[derive(Debug, Clone, Serialize)]
pub struct StructureScan {
    pub is_inverse: bool,
    pub nilpotents: Vec<usize>,
    pub zero: Option<usize>,
    pub is_union_of_groups: bool,
}

pub fn structure_scan(s: &CayleyTable) -> StructureScan {
    let n = s.order;
    let regular = (0..n).all(|x| (0..n).any(|y| s.table[s.table[x][y]][x] == x));
    let idem = s.idempotents();
    let idem_commute = idem
        .iter()
        .all(|&e| idem.iter().all(|&f| s.table[e][f] == s.table[f][e]));
    let nilpotents = match s.zero {
        Some(z) => (0..n)
            .filter(|&x| {
                if x == z {
                    return false;
                }
                let mut cur = x;
                for _ in 0..n {
                    cur = s.table[cur][x];
                    if cur == z {
                        return true;
                    }
                }
                false
            })
            .collect(),
        None => Vec::new(),
    };
    let gd = greens_data(s);
    let in_group: BTreeSet<usize> =
        gd.maximal_subgroups.iter().flat_map(|(_, hc)| hc.iter().copied()).collect();
    StructureScan {
        is_inverse: regular && idem_commute,
        nilpotents,
        zero: s.zero,
        is_union_of_groups: in_group.len() == n,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReesParameters {
    pub structural_group: CayleyTable,
    pub rows: usize,
    pub cols: usize,
    /// sandwich[col][row], entries indices into the structural group or None.
    pub sandwich: Vec<Vec<Option<usize>>>,
    pub has_zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub enum Recognition {
    Group(CayleyTable),
    GroupWithZero(CayleyTable),
    /// Null factor with k nonzero elements (every product is zero).
    Null(usize),
    ReesMatrix(ReesParameters),
    Other,
}

impl Recognition {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Recognition::Group(_) => "Group",
            Recognition::GroupWithZero(_) => "GroupWithZero",
            Recognition::Null(_) => "Null",
            Recognition::ReesMatrix(_) => "ReesMatrix",
            Recognition::Other => "Other",
        }
    }

    /// The underlying group table for Group/GroupWithZero factors.
    pub fn group_table(&self) -> Option<&CayleyTable> {
        match self {
            Recognition::Group(g) | Recognition::GroupWithZero(g) => Some(g),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrincipalFactor {
    pub quotient_table: CayleyTable,
    /// Elements of the parent that make up the J-class of this factor.
    pub class_elements: Vec<usize>,
    pub recognition: Recognition,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrincipalSeries {
    /// Descending ideals, each given by its element set; first entry is S.
    pub chain: Vec<Vec<usize>>,
    pub factors: Vec<PrincipalFactor>,
}

/// Orders the J-classes top-down: each class is maximal among the classes not
/// yet chosen. `reverse_ties` picks the other lexicographic tie-break, to let
/// tests confirm the verdict does not depend on the extension chosen.
pub fn linear_extension(gd: &GreenData, reverse_ties: bool) -> Vec<usize> {
    let m = gd.j.classes.len();
    let mut remaining: BTreeSet<usize> = (0..m).collect();
    let mut order = Vec::with_capacity(m);
    while !remaining.is_empty() {
        // a is maximal if no other remaining b has a < b
        let maximal: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&a| {
                remaining.iter().all(|&b| b == a || !(gd.j_leq[a][b] && !gd.j_leq[b][a]))
            })
            .collect();
        let pick = if reverse_ties {
            *maximal.last().expect("poset always has a maximal element")
        } else {
            *maximal.first().expect("poset always has a maximal element")
        };
        order.push(pick);
        remaining.remove(&pick);
    }
    order
}

/// Rees quotient of the subsemigroup on `carrier` by the ideal `ideal`
/// (both element sets of the parent). Products landing in the ideal collapse
/// to an adjoined zero; when `ideal` is empty the subtable itself is returned.
pub fn rees_quotient(s: &CayleyTable, carrier: &[usize], ideal: &[usize]) -> CayleyTable {
    let ideal_set: BTreeSet<usize> = ideal.iter().copied().collect();
    let live: Vec<usize> = carrier.iter().copied().filter(|x| !ideal_set.contains(x)).collect();
    if ideal.is_empty() {
        return s.restrict_to_subset(&live).expect("carrier must be closed");
    }
    let k = live.len();
    let zero = k;
    let pos = |x: usize| live.iter().position(|&y| y == x);
    let mut table = vec![vec![zero; k + 1]; k + 1];
    for (a, &x) in live.iter().enumerate() {
        for (b, &y) in live.iter().enumerate() {
            let p = s.table[x][y];
            table[a][b] = pos(p).unwrap_or(zero);
        }
    }
    let mut names: Vec<String> = live.iter().map(|&x| s.names[x].clone()).collect();
    names.push("0".into());
    let mut t = CayleyTable::from_rows(TableKind::SemigroupCandidate, table)
        .expect("quotient table construction cannot fail");
    t = t.with_names(crate::green::fresh_names(names)).unwrap();
    t.detect_special_pub();
    t
}

fn fresh_names(names: Vec<String>) -> Vec<String> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(names.len());
    for n in names {
        let mut cand = n.clone();
        let mut k = 1;
        while !seen.insert(cand.clone()) {
            cand = format!("{}_{}", n, k);
            k += 1;
        }
        out.push(cand);
    }
    out
}

impl CayleyTable {
    fn detect_special_pub(&mut self) {
        let n = self.order;
        self.zero =
            (0..n).find(|&z| (0..n).all(|x| self.table[z][x] == z && self.table[x][z] == z));
        self.identity =
            (0..n).find(|&e| (0..n).all(|x| self.table[e][x] == x && self.table[x][e] == x));
    }
}

/// Principal series along the default (lexicographic) linear extension.
pub fn principal_series(s: &CayleyTable) -> PrincipalSeries {
    principal_series_with_extension(s, false)
}

pub fn principal_series_with_extension(s: &CayleyTable, reverse_ties: bool) -> PrincipalSeries {
    let gd = greens_data(s);
    let order = linear_extension(&gd, reverse_ties);
    let m = order.len();
    let mut chain = Vec::with_capacity(m);
    let mut factors = Vec::with_capacity(m);
    for k in 0..m {
        let members: Vec<usize> = order[k..]
            .iter()
            .flat_map(|&ci| gd.j.classes[ci].iter().copied())
            .collect();
        let mut sorted = members.clone();
        sorted.sort_unstable();
        chain.push(sorted.clone());
        let below: Vec<usize> = order[k + 1..]
            .iter()
            .flat_map(|&ci| gd.j.classes[ci].iter().copied())
            .collect();
        let quotient = rees_quotient(s, &sorted, &below);
        let recognition = recognize_factor(&quotient).unwrap_or(Recognition::Other);
        factors.push(PrincipalFactor {
            quotient_table: quotient,
            class_elements: {
                let mut c = gd.j.classes[order[k]].clone();
                c.sort_unstable();
                c
            },
            recognition,
        });
    }
    PrincipalSeries { chain, factors }
}

/// Recognize a principal factor: Group, GroupWithZero, Null, or ReesMatrix.
pub fn recognize_factor(f: &CayleyTable) -> Result<Recognition, GreenError> {
    match f.zero {
        None => {
            // simple factor (the kernel)
            if f.is_group() {
                return Ok(Recognition::Group(f.clone()));
            }
            rees_coordinatize(f, None).map(Recognition::ReesMatrix)
        }
        Some(z) if f.order == 1 => {
            let _ = z;
            Ok(Recognition::Group(f.clone()))
        }
        Some(z) => {
            let nonzero: Vec<usize> = (0..f.order).filter(|&x| x != z).collect();
            let all_null = nonzero
                .iter()
                .all(|&x| nonzero.iter().all(|&y| f.table[x][y] == z));
            if all_null {
                return Ok(Recognition::Null(nonzero.len()));
            }
            let closed = nonzero
                .iter()
                .all(|&x| nonzero.iter().all(|&y| f.table[x][y] != z));
            if closed {
                let sub = f.restrict_to_subset(&nonzero).expect("closed by construction");
                if sub.is_group() {
                    return Ok(Recognition::GroupWithZero(sub));
                }
            }
            // 0-simple check: every nonzero principal ideal is everything
            for &x in &nonzero {
                if two_sided_ideal(f, x).len() != f.order {
                    return Err(GreenError::NotAFactor);
                }
            }
            rees_coordinatize(f, Some(z)).map(Recognition::ReesMatrix)
        }
    }
}

/// Idempotent-anchored Rees coordinatization of a (0-)simple factor, anchored
/// at the lexicographically least idempotent. The result is verified by
/// rebuilding the Rees table and checking the explicit bijection.
fn rees_coordinatize(f: &CayleyTable, zero: Option<usize>) -> Result<ReesParameters, GreenError> {
    let gd = greens_data(f);
    let nonzero: Vec<usize> = (0..f.order).filter(|&x| Some(x) != zero).collect();
    let idems: Vec<usize> = f.idempotents().into_iter().filter(|&e| Some(e) != zero).collect();
    let Some(&anchor) = idems.first() else {
        return Err(GreenError::NotAFactor);
    };
    // R- and L-classes restricted to the nonzero part, anchor classes first
    let mut rclasses: Vec<Vec<usize>> = gd
        .r
        .classes
        .iter()
        .filter(|c| c.iter().any(|&x| Some(x) != zero))
        .map(|c| c.iter().copied().filter(|&x| Some(x) != zero).collect())
        .filter(|c: &Vec<usize>| !c.is_empty())
        .collect();
    let mut lclasses: Vec<Vec<usize>> = gd
        .l
        .classes
        .iter()
        .filter(|c| c.iter().any(|&x| Some(x) != zero))
        .map(|c| c.iter().copied().filter(|&x| Some(x) != zero).collect())
        .filter(|c: &Vec<usize>| !c.is_empty())
        .collect();
    let ra = rclasses.iter().position(|c| c.contains(&anchor)).unwrap();
    rclasses.swap(0, ra);
    let la = lclasses.iter().position(|c| c.contains(&anchor)).unwrap();
    lclasses.swap(0, la);
    let m = rclasses.len();
    let n = lclasses.len();
    // the maximal subgroup at the anchor
    let h11: Vec<usize> = nonzero
        .iter()
        .copied()
        .filter(|&x| rclasses[0].contains(&x) && lclasses[0].contains(&x))
        .collect();
    let group = f.restrict_to_subset(&h11).map_err(|_| GreenError::NotAFactor)?;
    if !group.is_group() {
        return Err(GreenError::NotAFactor);
    }
    let g_index = |x: usize| h11.iter().position(|&y| y == x);
    // representatives r_i in H_{i1}, q_j in H_{1j}; anchor in both corners
    let mut reps_r = Vec::with_capacity(m);
    for rc in &rclasses {
        let cand = rc
            .iter()
            .copied()
            .filter(|&x| lclasses[0].contains(&x))
            .min()
            .ok_or(GreenError::NotAFactor)?;
        reps_r.push(cand);
    }
    let mut reps_q = Vec::with_capacity(n);
    for lc in &lclasses {
        let cand = lc
            .iter()
            .copied()
            .filter(|&x| rclasses[0].contains(&x))
            .min()
            .ok_or(GreenError::NotAFactor)?;
        reps_q.push(cand);
    }
    reps_r[0] = anchor;
    reps_q[0] = anchor;
    let mut sandwich = vec![vec![None; m]; n];
    for (j, &q) in reps_q.iter().enumerate() {
        for (i, &r) in reps_r.iter().enumerate() {
            let p = f.table[q][r];
            if Some(p) != zero {
                sandwich[j][i] = Some(g_index(p).ok_or(GreenError::NotAFactor)?);
            }
        }
    }
    // regularity of the sandwich
    let row_ok = (0..n).all(|j| (0..m).any(|i| sandwich[j][i].is_some()));
    let col_ok = (0..m).all(|i| (0..n).any(|j| sandwich[j][i].is_some()));
    if !(row_ok && col_ok) {
        return Err(GreenError::NotAFactor);
    }
    let params = ReesParameters {
        structural_group: group.clone(),
        rows: m,
        cols: n,
        sandwich,
        has_zero: zero.is_some(),
    };
    // faithfulness: rebuilding must reproduce the factor up to isomorphism
    let rebuilt = rebuild_rees(&params);
    if crate::cayley::isomorphism_test(&rebuilt, f, false).is_none() {
        return Err(GreenError::NotAFactor);
    }
    Ok(params)
}

/// Rebuild a Cayley table from recognized Rees parameters.
pub fn rebuild_rees(p: &ReesParameters) -> CayleyTable {
    let with_zero = rees_table(&p.structural_group, p.rows, p.cols, &p.sandwich);
    if p.has_zero {
        with_zero
    } else {
        // all sandwich entries nonzero: drop the adjoined zero
        let keep: Vec<usize> = (0..with_zero.order - 1).collect();
        with_zero.restrict_to_subset(&keep).expect("simple Rees table is closed without zero")
    }
}

/// Rebuild a factor from its recognition; used by round-trip checks.
pub fn rebuild_recognition(f: &PrincipalFactor) -> Option<CayleyTable> {
    match &f.recognition {
        Recognition::Group(g) => Some(g.clone()),
        Recognition::GroupWithZero(g) => Some(g.adjoin_zero()),
        Recognition::Null(k) => Some(crate::cayley::catalog::null_semigroup(*k)),
        Recognition::ReesMatrix(p) => Some(rebuild_rees(p)),
        Recognition::Other => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{catalog::catalog, isomorphism_test};

    fn tbl(name: &str) -> CayleyTable {
        catalog(name).unwrap().table
    }

    #[test]
    fn group_is_single_class() {
        let c5 = tbl("C5");
        let gd = greens_data(&c5);
        assert_eq!(gd.j.classes.len(), 1);
        assert_eq!(gd.maximal_subgroups.len(), 1);
        assert_eq!(gd.maximal_subgroups[0].1.len(), 5);
    }

    #[test]
    fn rees_m_classes() {
        let m = tbl("M");
        let gd = greens_data(&m);
        // J-classes: {theta} and the 4 nonzero elements
        assert_eq!(gd.j.classes.len(), 2);
        let sizes: Vec<usize> = gd.j.classes.iter().map(|c| c.len()).collect();
        assert!(sizes.contains(&1) && sizes.contains(&4));
        assert_eq!(gd.idempotents.len(), 3); // two in the top class plus theta
        for (e, hc) in &gd.maximal_subgroups {
            if Some(*e) != m.zero {
                assert_eq!(hc.len(), 1);
            }
        }
    }

    #[test]
    fn null_semigroup_classes() {
        let n2 = tbl("Null2");
        let gd = greens_data(&n2);
        assert_eq!(gd.j.classes.len(), 2);
        assert_eq!(gd.idempotents, vec![1]); // only theta
        let scan = structure_scan(&n2);
        assert_eq!(scan.nilpotents, vec![0]);
        assert_eq!(scan.zero, Some(1));
    }

    #[test]
    fn adjoined_zero_series() {
        let s = tbl("C5").adjoin_zero();
        let ps = principal_series(&s);
        assert_eq!(ps.chain.len(), 2);
        assert_eq!(ps.factors.len(), 2);
        match &ps.factors[0].recognition {
            Recognition::GroupWithZero(g) => {
                assert!(isomorphism_test(g, &tbl("C5"), false).is_some())
            }
            other => panic!("expected GroupWithZero(C5), got {}", other.kind_name()),
        }
        match &ps.factors[1].recognition {
            Recognition::Group(g) => assert_eq!(g.order, 1),
            other => panic!("expected trivial kernel, got {}", other.kind_name()),
        }
    }

    #[test]
    fn group_series_is_single_factor() {
        let ps = principal_series(&tbl("Q8"));
        assert_eq!(ps.factors.len(), 1);
        assert!(matches!(ps.factors[0].recognition, Recognition::Group(_)));
    }

    #[test]
    fn t2_series_has_null_factor() {
        let ps = principal_series(&tbl("T2"));
        assert!(ps
            .factors
            .iter()
            .any(|f| matches!(f.recognition, Recognition::Null(1))));
    }

    #[test]
    fn rees_recognition_roundtrip() {
        for name in ["M", "M12"] {
            let t = tbl(name);
            let ps = principal_series(&t);
            let rees = ps
                .factors
                .iter()
                .find_map(|f| match &f.recognition {
                    Recognition::ReesMatrix(p) => Some(p.clone()),
                    _ => None,
                })
                .unwrap_or_else(|| panic!("{} series lacks a Rees factor", name));
            assert_eq!(rees.rows, 2);
            assert_eq!(rees.cols, 2);
            assert_eq!(rees.structural_group.order, 1);
            let nonzero_entries: usize =
                rees.sandwich.iter().flatten().filter(|e| e.is_some()).count();
            match name {
                "M" => assert_eq!(nonzero_entries, 2),
                _ => assert_eq!(nonzero_entries, 3),
            }
        }
    }

    #[test]
    fn m12_is_not_inverse() {
        let scan = structure_scan(&tbl("M12"));
        assert!(!scan.is_inverse);
    }

    #[test]
    fn q8_scan() {
        let scan = structure_scan(&tbl("Q8"));
        assert!(scan.is_inverse);
        assert!(scan.nilpotents.is_empty());
        assert!(scan.is_union_of_groups);
    }

    #[test]
    fn chain_c5c8_factors() {
        let s = tbl("ChainC5C8");
        let ps = principal_series(&s);
        assert_eq!(ps.factors.len(), 2);
        let g0 = ps.factors[0].recognition.group_table().expect("top factor is a group");
        let g1 = ps.factors[1].recognition.group_table().expect("kernel is a group");
        assert!(isomorphism_test(g0, &tbl("C8"), false).is_some());
        assert!(isomorphism_test(g1, &tbl("C5"), false).is_some());
    }

    #[test]
    fn relabeling_invariance() {
        let t = tbl("M12");
        let perm = [3usize, 1, 4, 0, 2];
        let mut table = vec![vec![0; 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                table[perm[i]][perm[j]] = perm[t.table[i][j]];
            }
        }
        let shuffled = CayleyTable::from_rows(TableKind::SemigroupCandidate, table).unwrap();
        let a = greens_data(&t);
        let b = greens_data(&shuffled);
        // transport each class through the permutation and compare
        let transported: BTreeSet<Vec<usize>> = a
            .j
            .classes
            .iter()
            .map(|c| {
                let mut v: Vec<usize> = c.iter().map(|&x| perm[x]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let direct: BTreeSet<Vec<usize>> = b.j.classes.iter().cloned().collect();
        assert_eq!(transported, direct);
    }

    #[test]
    fn opposite_swaps_r_and_l() {
        let t = tbl("M12");
        let a = greens_data(&t);
        let b = greens_data(&t.opposite());
        assert_eq!(a.r.classes, b.l.classes);
        assert_eq!(a.l.classes, b.r.classes);
        assert_eq!(a.j.classes, b.j.classes);
    }

    #[test]
    fn factor_count_equals_j_class_count_both_extensions() {
        for name in ["M", "M12", "T2", "T2p", "T2hat", "ChainC5C8"] {
            let t = tbl(name);
            let gd = greens_data(&t);
            for rev in [false, true] {
                let ps = principal_series_with_extension(&t, rev);
                assert_eq!(ps.factors.len(), gd.j.classes.len(), "mismatch for {}", name);
            }
        }
    }
}
