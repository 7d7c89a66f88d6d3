//! Group-side predicates: profiles of finite groups (exponent, element-order
//! multiset, normality of all subgroups) and identification against the short
//! named lists that drive the classification branches.

use crate::cayley::{catalog::catalog, isomorphism_test, CayleyError, CayleyTable};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    /// Sorted multiset of element orders.
    pub order_multiset: Vec<usize>,
    pub all_subgroups_normal: bool,
    pub two_group: bool,
}

impl GroupProfile {
    pub fn hamiltonian_two_group(&self) -> bool {
        self.two_group && !self.abelian && self.all_subgroups_normal
    }

    /// Abelian of exponent dividing 4 or 6, or a hamiltonian 2-group.
    /// These are exactly the groups whose rational group algebra keeps the
    /// unit groups of its orders free of rank-two free abelian subgroups.
    pub fn allowed(&self) -> bool {
        (self.abelian && (4 % self.exponent == 0 || 6 % self.exponent == 0))
            || self.hamiltonian_two_group()
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn cyclic_subgroup(g: &CayleyTable, x: usize) -> Vec<usize> {
    let mut elems = vec![x];
    let mut cur = x;
    loop {
        cur = g.table[cur][x];
        if cur == x {
            break;
        }
        elems.push(cur);
    }
    elems.sort_unstable();
    elems
}

/// Exact profile of a validated group table. Normality of all subgroups is
/// decided by checking every cyclic subgroup: a group in which all cyclic
/// subgroups are normal has all subgroups normal.
pub fn group_predicates(g: &CayleyTable) -> Result<GroupProfile, CayleyError> {
    if !g.is_group() {
        return Err(CayleyError::NotAGroup("table is not a group".into()));
    }
    let n = g.order;
    let abelian = (0..n).all(|a| (a..n).all(|b| g.table[a][b] == g.table[b][a]));
    let mut order_multiset: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    order_multiset.sort_unstable();
    let exponent = order_multiset.iter().fold(1, |acc, &o| lcm(acc, o));
    let two_group = n.is_power_of_two();
    let all_subgroups_normal = (0..n).all(|x| {
        let sub: BTreeSet<usize> = cyclic_subgroup(g, x).into_iter().collect();
        (0..n).all(|c| {
            let ci = g.inverse_of(c).expect("group elements are invertible");
            sub.iter().all(|&h| sub.contains(&g.table[g.table[c][h]][ci]))
        })
    });
    Ok(GroupProfile { order: n, abelian, exponent, order_multiset, all_subgroups_normal, two_group })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NamedList {
    /// Cyclic obstructions appearing as element orders: C5, C8, C12.
    KCyclic,
    /// Nonabelian (or mixed) obstructions: S3, D4, Q12, C4:C4.
    KGroups,
}

impl NamedList {
    pub fn members(self) -> &'static [&'static str] {
        match self {
            NamedList::KCyclic => &["C5", "C8", "C12"],
            NamedList::KGroups => &["S3", "D4", "Q12", "C4:C4"],
        }
    }
}

/// Match `g` against one of the named lists, up to isomorphism. Profile
/// pruning (order, element-order multiset) runs before the backtracking
/// isomorphism test.
pub fn identify_named(g: &CayleyTable, list: NamedList) -> Result<Option<String>, CayleyError> {
    let profile = group_predicates(g)?;
    for name in list.members() {
        let entry = catalog(name).expect("list members are in the catalog");
        if entry.table.order != profile.order {
            continue;
        }
        let target = group_predicates(&entry.table).expect("catalog groups are groups");
        if target.order_multiset != profile.order_multiset || target.abelian != profile.abelian {
            continue;
        }
        if isomorphism_test(g, &entry.table, false).is_some() {
            return Ok(Some((*name).to_string()));
        }
    }
    Ok(None)
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
    fn c6_profile_allowed() {
        let c6 = tbl("C6");
        let p = group_predicates(&c6).unwrap();
        assert!(p.abelian);
        assert_eq!(p.exponent, 6);
        assert!(p.allowed());
    }

    #[test]
    fn q8_is_hamiltonian_two_group() {
        let p = group_predicates(&tbl("Q8")).unwrap();
        assert!(!p.abelian);
        assert!(p.all_subgroups_normal);
        assert!(p.two_group);
        assert!(p.hamiltonian_two_group());
        assert!(p.allowed());
    }

    #[test]
    fn c16_not_allowed() {
        let p = group_predicates(&tbl("C16")).unwrap();
        assert!(p.abelian);
        assert_eq!(p.exponent, 16);
        assert!(!p.allowed());
    }

    #[test]
    fn trivial_group_allowed() {
        let p = group_predicates(&tbl("C1")).unwrap();
        assert_eq!(p.exponent, 1);
        assert!(p.allowed());
    }

    #[test]
    fn d4_not_allowed() {
        let p = group_predicates(&tbl("D4")).unwrap();
        assert!(!p.abelian);
        assert!(!p.all_subgroups_normal); // the reflection subgroups are not normal
        assert!(!p.allowed());
    }

    #[test]
    fn named_list_matches() {
        assert_eq!(identify_named(&tbl("C8"), NamedList::KCyclic).unwrap().as_deref(), Some("C8"));
        assert_eq!(identify_named(&tbl("D4"), NamedList::KGroups).unwrap().as_deref(), Some("D4"));
        assert_eq!(identify_named(&tbl("Q8"), NamedList::KGroups).unwrap(), None);
        assert_eq!(identify_named(&tbl("C10"), NamedList::KCyclic).unwrap(), None);
        assert_eq!(identify_named(&tbl("C10"), NamedList::KGroups).unwrap(), None);
        assert_eq!(
            identify_named(&tbl("C4:C4"), NamedList::KGroups).unwrap().as_deref(),
            Some("C4:C4")
        );
        assert_eq!(
            identify_named(&tbl("Q12"), NamedList::KGroups).unwrap().as_deref(),
            Some("Q12")
        );
    }

    #[test]
    fn identify_is_relabeling_invariant() {
        let t = tbl("D4");
        let perm = [5usize, 2, 7, 0, 4, 6, 1, 3];
        let mut table = vec![vec![0; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                table[perm[i]][perm[j]] = perm[t.table[i][j]];
            }
        }
        let shuffled = CayleyTable::from_rows(TableKind::SemigroupCandidate, table).unwrap();
        assert_eq!(
            identify_named(&shuffled, NamedList::KGroups).unwrap().as_deref(),
            Some("D4")
        );
    }

    #[test]
    fn hamiltonian_two_groups_of_small_order() {
        // among the stored groups, exactly Q8 and Q8xC2 are hamiltonian 2-groups
        for name in ["C1", "C2", "C4", "C8", "C16", "C2xC2", "D4", "Q8", "Q8xC2", "C4:C4", "S3"] {
            let p = group_predicates(&tbl(name)).unwrap();
            let expect = matches!(name, "Q8" | "Q8xC2");
            assert_eq!(p.hamiltonian_two_group(), expect, "mismatch for {}", name);
        }
    }

    #[test]
    fn not_a_group_is_rejected() {
        assert!(group_predicates(&tbl("M")).is_err());
        assert!(identify_named(&tbl("Null2"), NamedList::KCyclic).is_err());
    }
}
