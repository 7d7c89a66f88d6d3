//! Exhaustive generation of small semigroups up to isomorphism (or
//! isomorphism plus anti-isomorphism), and a census that runs both engines on
//! every structure of a given order and tallies the agreement.

use crate::cayley::{CayleyTable, TableKind};
use crate::classify::{crosscheck, Agreement, ClassVerdict, CrosscheckRecord};
use crate::verdict::Hyperbolicity;
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::Instant;
use thiserror::Error;

/// Orders above this need the explicit override; nothing above the hard cap
/// is ever enumerated.
pub const SOFT_CAP: usize = 5;
pub const HARD_CAP: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {0} exceeds the enumeration cap {1}")]
    CapExceeded(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Dedup {
    /// One representative per isomorphism class.
    Iso,
    /// One representative per isomorphism-or-anti-isomorphism class.
    Equivalence,
}

/// All multiplication tables of order n that are associative, one per class
/// under the chosen equivalence, sorted by canonical form.
pub fn enumerate_tables(
    n: usize,
    dedup: Dedup,
    monoid_only: bool,
) -> Result<Vec<CayleyTable>, EnumError> {
    enumerate_tables_with_cap(n, dedup, monoid_only, false)
}

/// Same, but `allow_six` unlocks the hard cap order.
pub fn enumerate_tables_with_cap(
    n: usize,
    dedup: Dedup,
    monoid_only: bool,
    allow_six: bool,
) -> Result<Vec<CayleyTable>, EnumError> {
    let cap = if allow_six { HARD_CAP } else { SOFT_CAP };
    if n == 0 || n > cap {
        return Err(EnumError::CapExceeded(n, cap));
    }
    let perms = permutations(n);
    let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut table = vec![vec![usize::MAX; n]; n];
    backtrack(&mut table, 0, n, &mut |t| {
        if monoid_only && !has_identity(t) {
            return;
        }
        canon.insert(canonical_form(t, &perms, dedup));
    });
    Ok(canon
        .into_iter()
        .map(|flat| {
            let rows: Vec<Vec<usize>> =
                flat.chunks(n).map(|chunk| chunk.to_vec()).collect();
            CayleyTable::from_rows(TableKind::SemigroupCandidate, rows)
                .expect("enumerated tables are associative by construction")
        })
        .collect())
}

fn has_identity(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).any(|e| (0..n).all(|x| t[e][x] == x && t[x][e] == x))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(&mut cur, n, &mut out);
    out
}

fn heap_permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(cur, k - 1, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// Lexicographically minimal flattened table over all relabelings (and the
/// transpose, for equivalence dedup).
fn canonical_form(t: &[Vec<usize>], perms: &[Vec<usize>], dedup: Dedup) -> Vec<usize> {
    let n = t.len();
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |table: &[Vec<usize>]| {
        for p in perms {
            let mut rel = vec![vec![0usize; n]; n];
            for x in 0..n {
                for y in 0..n {
                    rel[p[x]][p[y]] = p[table[x][y]];
                }
            }
            let mut flat = Vec::with_capacity(n * n);
            for row in &rel {
                flat.extend_from_slice(row);
            }
            if best.as_ref().map(|b| flat < *b).unwrap_or(true) {
                best = Some(flat);
            }
        }
    };
    consider(t);
    if dedup == Dedup::Equivalence {
        let mut tr = vec![vec![0usize; n]; n];
        for x in 0..n {
            for y in 0..n {
                tr[x][y] = t[y][x];
            }
        }
        consider(&tr);
    }
    best.expect("at least one permutation")
}

/// Fill cells row-major; after each assignment, reject whenever some fully
/// determined triple breaks associativity.
fn backtrack(t: &mut Vec<Vec<usize>>, cell: usize, n: usize, emit: &mut dyn FnMut(&[Vec<usize>])) {
    if cell == n * n {
        emit(t);
        return;
    }
    let (i, j) = (cell / n, cell % n);
    for v in 0..n {
        t[i][j] = v;
        if partial_associative(t, n) {
            backtrack(t, cell + 1, n, emit);
        }
    }
    t[i][j] = usize::MAX;
}

fn partial_associative(t: &[Vec<usize>], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a][b];
            for c in 0..n {
                let bc = t[b][c];
                if ab != usize::MAX && bc != usize::MAX {
                    let left = t[ab][c];
                    let right = t[a][bc];
                    if left != usize::MAX && right != usize::MAX && left != right {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Independent oracle for the small counts: generate every binary operation,
/// filter associativity, dedup by canonical form.
pub fn naive_count(n: usize, dedup: Dedup) -> usize {
    assert!(n <= 3, "naive generation is for cross-validation at tiny orders");
    let perms = permutations(n);
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
    for code in 0..total {
        let mut t = vec![vec![0usize; n]; n];
        let mut c = code;
        for idx in 0..cells {
            t[idx / n][idx % n] = c % n;
            c /= n;
        }
        if partial_associative(&t, n) {
            canon.insert(canonical_form(&t, &perms, dedup));
        }
    }
    canon.len()
}

/// Agreement tally for one order: classifier verdict (rows: Hyperbolic,
/// NotHyperbolic, OutOfScope) against oracle verdict (columns: Yes, No,
/// Indeterminate).
#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub order: usize,
    pub count_structures: usize,
    pub histogram: [[usize; 3]; 3],
    pub millis: u128,
}

/// Census plus the records that need attention (everything not `Agree`).
#[derive(Debug, Clone, Serialize)]
pub struct CensusOutcome {
    pub row: CensusRow,
    pub ledger: Vec<CrosscheckRecord>,
}

pub fn census(n: usize) -> Result<CensusOutcome, EnumError> {
    let start = Instant::now();
    let tables = enumerate_tables(n, Dedup::Equivalence, false)?;
    let mut histogram = [[0usize; 3]; 3];
    let mut ledger = Vec::new();
    for (i, t) in tables.iter().enumerate() {
        let rec = crosscheck(&format!("order{}#{}", n, i), t);
        let row = match rec.table_verdict {
            ClassVerdict::Hyperbolic => 0,
            ClassVerdict::NotHyperbolic => 1,
            ClassVerdict::OutOfScope => 2,
        };
        let col = match rec.oracle_verdict {
            Hyperbolicity::Yes => 0,
            Hyperbolicity::No => 1,
            Hyperbolicity::Indeterminate => 2,
        };
        histogram[row][col] += 1;
        if rec.agreement != Agreement::Agree {
            ledger.push(rec);
        }
    }
    Ok(CensusOutcome {
        row: CensusRow {
            order: n,
            count_structures: tables.len(),
            histogram,
            millis: start.elapsed().as_millis(),
        },
        ledger,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::isomorphism_test;

    #[test]
    fn counts_match_naive_generator() {
        for n in 1..=3 {
            let fast = enumerate_tables(n, Dedup::Equivalence, false).unwrap().len();
            assert_eq!(fast, naive_count(n, Dedup::Equivalence), "order {}", n);
            let fast_iso = enumerate_tables(n, Dedup::Iso, false).unwrap().len();
            assert_eq!(fast_iso, naive_count(n, Dedup::Iso), "order {} iso", n);
        }
    }

    #[test]
    fn known_small_counts() {
        assert_eq!(enumerate_tables(1, Dedup::Equivalence, false).unwrap().len(), 1);
        assert_eq!(enumerate_tables(2, Dedup::Equivalence, false).unwrap().len(), 4);
        assert_eq!(enumerate_tables(3, Dedup::Equivalence, false).unwrap().len(), 18);
    }

    #[test]
    fn dedup_leaves_no_isomorphic_pair() {
        let tables = enumerate_tables(3, Dedup::Iso, false).unwrap();
        for i in 0..tables.len() {
            for j in i + 1..tables.len() {
                assert!(
                    isomorphism_test(&tables[i], &tables[j], false).is_none(),
                    "tables {} and {} are isomorphic",
                    i,
                    j
                );
            }
        }
    }

    #[test]
    fn iso_enumeration_closed_under_opposite() {
        let tables = enumerate_tables(3, Dedup::Iso, false).unwrap();
        for t in &tables {
            let opp = t.opposite();
            assert!(
                tables.iter().any(|u| isomorphism_test(u, &opp, false).is_some()),
                "opposite missing from iso enumeration"
            );
        }
    }

    #[test]
    fn monoid_filter() {
        // monoids of order 2: the group C2 and the meet-semilattice
        let tables = enumerate_tables(2, Dedup::Equivalence, true).unwrap();
        assert_eq!(tables.len(), 2);
        for t in &tables {
            assert!(t.identity.is_some());
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_tables(6, Dedup::Iso, false),
            Err(EnumError::CapExceeded(6, 5))
        ));
        assert!(matches!(
            enumerate_tables(0, Dedup::Iso, false),
            Err(EnumError::CapExceeded(0, 5))
        ));
    }

    #[test]
    fn census_of_trivial_order() {
        let out = census(1).unwrap();
        assert_eq!(out.row.count_structures, 1);
        assert_eq!(out.row.histogram[0][0], 1);
        assert!(out.ledger.is_empty());
    }

    #[test]
    fn census_order_two_no_disagreement() {
        let out = census(2).unwrap();
        assert_eq!(out.row.count_structures, 4);
        let total: usize = out.row.histogram.iter().flatten().sum();
        assert_eq!(total, 4);
        assert!(out.ledger.iter().all(|r| r.agreement != Agreement::Disagree));
    }

    #[test]
    fn census_order_three_no_disagreement() {
        let out = census(3).unwrap();
        assert_eq!(out.row.count_structures, 18);
        assert!(out.ledger.iter().all(|r| r.agreement != Agreement::Disagree));
        // the left-zero band shows up as an oracle-only record
        assert!(out.ledger.iter().any(|r| r.agreement == Agreement::OracleOnly));
    }
}
