//! Named structures used throughout: cyclic and small nonabelian groups,
//! the Rees semigroups M and M12, the null semigroup, the three T-type
//! semigroups, and the order-16 Chein doubles M(Q8,2) and M(D4,2).
//!
//! Every catalog table passes `validate` for its kind; this is asserted by
//! tests over the whole catalog.

use super::{CayleyError, CayleyTable, TableKind};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureFamily {
    Group,
    Semigroup,
    Loop,
}

#[derive(Debug, Clone)]
pub struct NamedCatalogEntry {
    pub name: String,
    pub table: CayleyTable,
    pub family: StructureFamily,
}

/// Build a group table from an element list and a product rule.
fn table_from<T: Clone + PartialEq>(
    kind: TableKind,
    elems: Vec<T>,
    name_of: impl Fn(&T) -> String,
    mul: impl Fn(&T, &T) -> T,
) -> CayleyTable {
    let n = elems.len();
    let index = |x: &T| elems.iter().position(|y| y == x).expect("product left the element set");
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = index(&mul(&elems[i], &elems[j]));
        }
    }
    CayleyTable::from_rows(kind, table)
        .and_then(|t| t.with_names(elems.iter().map(&name_of).collect()))
        .expect("catalog construction produced an invalid table")
}

pub fn cyclic(n: usize) -> CayleyTable {
    table_from(
        TableKind::SemigroupCandidate,
        (0..n).collect(),
        |&i| if i == 0 { "e".into() } else { format!("g{}", i) },
        |&a, &b| (a + b) % n,
    )
}

fn s3() -> CayleyTable {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [0, 2, 1],
        [2, 1, 0],
        [1, 0, 2],
    ];
    table_from(
        TableKind::SemigroupCandidate,
        perms,
        |p| format!("p{}{}{}", p[0] + 1, p[1] + 1, p[2] + 1),
        |a, b| [a[b[0]], a[b[1]], a[b[2]]],
    )
}

/// Dihedral group of order 2n: rotations r^i and reflections r^i f,
/// with f r = r^{-1} f.
fn dihedral(n: usize) -> CayleyTable {
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..n).map(move |i| (i, j))).collect();
    table_from(
        TableKind::SemigroupCandidate,
        elems,
        |&(i, j)| format!("r{}f{}", i, j),
        |&(i, j), &(k, l)| {
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            (rot, (j + l) % 2)
        },
    )
}

/// Dicyclic group of order 4n: a^(2n) = 1, b^2 = a^n, b a = a^{-1} b.
/// Dic_2 is Q8; Dic_3 is Q12.
fn dicyclic(n: usize) -> CayleyTable {
    let m = 2 * n;
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
    table_from(
        TableKind::SemigroupCandidate,
        elems,
        |&(i, j)| format!("a{}b{}", i, j),
        |&(i, j), &(k, l)| {
            // (a^i b^j)(a^k b^l) with b a^k = a^{-k} b and b^2 = a^n
            let i2 = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            if j == 1 && l == 1 {
                ((i2 + n) % m, 0)
            } else {
                (i2, (j + l) % 2)
            }
        },
    )
}

/// C4 semidirect C4 with the action inverting the generator:
/// a^4 = b^4 = 1, b^{-1} a b = a^{-1}.
fn c4_rtimes_c4() -> CayleyTable {
    let elems: Vec<(usize, usize)> = (0..4).flat_map(|j| (0..4).map(move |i| (i, j))).collect();
    table_from(
        TableKind::SemigroupCandidate,
        elems,
        |&(i, j)| format!("a{}b{}", i, j),
        |&(i, j), &(k, l)| {
            let sign = if j % 2 == 0 { k } else { (4 - k) % 4 };
            ((i + sign) % 4, (j + l) % 4)
        },
    )
}

/// Rees matrix semigroup M(G; m, n; P) over a group table, with a zero.
/// `sandwich[l][i]` is `Some(g)` or `None` (zero entry); rows of the sandwich
/// are indexed by the column coordinate (1..n), columns by the row
/// coordinate (1..m).
pub fn rees_table(
    group: &CayleyTable,
    m: usize,
    n: usize,
    sandwich: &[Vec<Option<usize>>],
) -> CayleyTable {
    assert!(group.is_group());
    assert_eq!(sandwich.len(), n);
    assert!(sandwich.iter().all(|r| r.len() == m));
    let g_ord = group.order;
    let total = m * g_ord * n + 1;
    let theta = total - 1;
    let idx = |i: usize, g: usize, l: usize| (i * g_ord + g) * n + l;
    let mut table = vec![vec![theta; total]; total];
    for i in 0..m {
        for g in 0..g_ord {
            for l in 0..n {
                for k in 0..m {
                    for h in 0..g_ord {
                        for mu in 0..n {
                            if let Some(p) = sandwich[l][k] {
                                let prod = group.table[group.table[g][p]][h];
                                table[idx(i, g, l)][idx(k, h, mu)] = idx(i, prod, mu);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut names: Vec<String> = Vec::with_capacity(total);
    for i in 0..m {
        for g in 0..g_ord {
            for l in 0..n {
                names.push(format!("({},{},{})", i + 1, group.names[g], l + 1));
            }
        }
    }
    names.push("0".into());
    CayleyTable::from_rows(TableKind::SemigroupCandidate, table)
        .and_then(|t| t.with_names(names))
        .expect("Rees construction produced an invalid table")
}

fn rees_m() -> CayleyTable {
    let trivial = cyclic(1);
    // identity sandwich
    let p = vec![vec![Some(0), None], vec![None, Some(0)]];
    rees_table(&trivial, 2, 2, &p)
}

fn rees_m12() -> CayleyTable {
    let trivial = cyclic(1);
    // sandwich (1 1 / 0 1)
    let p = vec![vec![Some(0), Some(0)], vec![None, Some(0)]];
    rees_table(&trivial, 2, 2, &p)
}

fn null2() -> CayleyTable {
    // elements j0, theta; every product is theta
    CayleyTable::from_rows(TableKind::SemigroupCandidate, vec![vec![1, 1], vec![1, 1]])
        .and_then(|t| t.with_names(vec!["j0".into(), "0".into()]))
        .unwrap()
}

/// Null semigroup on k nonzero generators plus a zero (all products zero).
pub fn null_semigroup(k: usize) -> CayleyTable {
    let n = k + 1;
    let table = vec![vec![n - 1; n]; n];
    let mut names: Vec<String> = (1..=k).map(|i| format!("n{}", i)).collect();
    names.push("0".into());
    CayleyTable::from_rows(TableKind::SemigroupCandidate, table)
        .and_then(|t| t.with_names(names))
        .unwrap()
}

/// Left-zero band on k elements: x * y = x.
pub fn left_zero(k: usize) -> CayleyTable {
    let table = (0..k).map(|i| vec![i; k]).collect();
    CayleyTable::from_rows(TableKind::SemigroupCandidate, table).unwrap()
}

/// The T-type semigroups of the non-semisimple case. Element order:
/// e1, eN, j0, theta (and e3 between eN and j0 for T2').
fn t2() -> CayleyTable {
    // matrix-unit model: e1 = E11, eN = E22, j0 = E12, theta = 0
    let rows = vec![
        vec![0, 3, 2, 3], // e1 * (e1, eN, j0, theta)
        vec![3, 1, 3, 3],
        vec![3, 2, 3, 3], // j0 * eN = j0
        vec![3, 3, 3, 3],
    ];
    CayleyTable::from_rows(TableKind::SemigroupCandidate, rows)
        .and_then(|t| t.with_names(vec!["e1".into(), "eN".into(), "j0".into(), "0".into()]))
        .unwrap()
}

fn t2_hat() -> CayleyTable {
    // model: e1 = E11, eN = E22 + E12, j0 = E12; e1 eN = j0, eN e1 = 0
    let rows = vec![
        vec![0, 2, 2, 3],
        vec![3, 1, 3, 3],
        vec![3, 2, 3, 3],
        vec![3, 3, 3, 3],
    ];
    CayleyTable::from_rows(TableKind::SemigroupCandidate, rows)
        .and_then(|t| t.with_names(vec!["e1".into(), "eN".into(), "j0".into(), "0".into()]))
        .unwrap()
}

fn t2_prime() -> CayleyTable {
    // elements e1, eN, e3, j0, theta; e1 eN = eN e1 = e3
    let rows = vec![
        vec![0, 2, 2, 3, 4],
        vec![2, 1, 2, 4, 4],
        vec![2, 2, 2, 4, 4],
        vec![4, 3, 4, 4, 4],
        vec![4, 4, 4, 4, 4],
    ];
    CayleyTable::from_rows(TableKind::SemigroupCandidate, rows)
        .and_then(|t| {
            t.with_names(vec!["e1".into(), "eN".into(), "e3".into(), "j0".into(), "0".into()])
        })
        .unwrap()
}

/// Chein double M(G, 2): the loop G u Gu with
///   g * h = gh, g * (hu) = (hg)u, (gu) * h = (g h~)u, (gu)*(hu) = s h~ g,
/// where s is the unique nonidentity commutator of G (identity for abelian
/// G), and ~ is the involution fixing central elements and sending a
/// noncentral g to sg. For Q8 the involution is inversion and the double is
/// the Cayley loop, with u^2 = s. Moufang; the loop algebra is alternative
/// but not associative exactly when G is a suitable nonabelian group (Q8,
/// D4).
pub fn chein_double(g: &CayleyTable) -> CayleyTable {
    assert!(g.is_group());
    let n = g.order;
    let e = g.identity.expect("groups have an identity");
    let inv: Vec<usize> = (0..n).map(|x| g.inverse_of(x).unwrap()).collect();
    let mut commutators: Vec<usize> = (0..n)
        .flat_map(|x| {
            (0..n).map(move |y| (x, y)).map(|(x, y)| {
                // x y x^-1 y^-1
                let xy = g.table[x][y];
                g.table[g.table[xy][inv[x]]][inv[y]]
            })
        })
        .filter(|&c| c != e)
        .collect();
    commutators.sort_unstable();
    commutators.dedup();
    let s = match commutators.as_slice() {
        [s] => *s,
        [] => e,
        _ => panic!("Chein double requires at most one nonidentity commutator"),
    };
    let central = |x: usize| (0..n).all(|y| g.table[x][y] == g.table[y][x]);
    let star: Vec<usize> =
        (0..n).map(|x| if central(x) { x } else { g.table[s][x] }).collect();
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = g.table[a][b];
            table[a][n + b] = n + g.table[b][a];
            table[n + a][b] = n + g.table[a][star[b]];
            table[n + a][n + b] = g.table[s][g.table[star[b]][a]];
        }
    }
    let mut names: Vec<String> = g.names.clone();
    names.extend(g.names.iter().map(|s| format!("{}u", s)));
    CayleyTable::from_rows(TableKind::LoopCandidate, table)
        .and_then(|t| t.with_names(names))
        .expect("Chein double construction failed")
}

/// Strong-semilattice chain of two groups with the trivial linking map:
/// `top` sits above `bottom`, and every mixed product collapses onto the
/// bottom factor's argument.
pub fn semilattice_chain(top: &CayleyTable, bottom: &CayleyTable) -> CayleyTable {
    assert!(top.is_group() && bottom.is_group());
    let n = top.order;
    let m = bottom.order;
    let mut table = vec![vec![0; n + m]; n + m];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = top.table[a][b];
        }
    }
    for a in 0..m {
        for b in 0..m {
            table[n + a][n + b] = n + bottom.table[a][b];
        }
    }
    for a in 0..n {
        for b in 0..m {
            table[a][n + b] = n + b; // phi(top) = identity of bottom
            table[n + b][a] = n + b;
        }
    }
    let mut names: Vec<String> = top.names.iter().map(|s| format!("t_{}", s)).collect();
    names.extend(bottom.names.iter().map(|s| format!("b_{}", s)));
    CayleyTable::from_rows(TableKind::SemigroupCandidate, table)
        .and_then(|t| t.with_names(names))
        .expect("semilattice chain construction failed")
}

fn entries() -> Vec<NamedCatalogEntry> {
    let mut out = Vec::new();
    let mut push = |name: &str, family: StructureFamily, table: CayleyTable| {
        out.push(NamedCatalogEntry { name: name.to_string(), table, family });
    };
    for n in 1..=16 {
        push(&format!("C{}", n), StructureFamily::Group, cyclic(n));
    }
    push("C2xC2", StructureFamily::Group, cyclic(2).direct_product(&cyclic(2)));
    push("S3", StructureFamily::Group, s3());
    push("D4", StructureFamily::Group, dihedral(4));
    push("Q8", StructureFamily::Group, dicyclic(2));
    push("Q12", StructureFamily::Group, dicyclic(3));
    push("C4:C4", StructureFamily::Group, c4_rtimes_c4());
    push("Q8xC2", StructureFamily::Group, dicyclic(2).direct_product(&cyclic(2)));
    push("M", StructureFamily::Semigroup, rees_m());
    push("M12", StructureFamily::Semigroup, rees_m12());
    push("Null2", StructureFamily::Semigroup, null2());
    push("T2", StructureFamily::Semigroup, t2());
    push("T2p", StructureFamily::Semigroup, t2_prime());
    push("T2hat", StructureFamily::Semigroup, t2_hat());
    push("LZ2", StructureFamily::Semigroup, left_zero(2));
    push("ChainC5C8", StructureFamily::Semigroup, semilattice_chain(&cyclic(8), &cyclic(5)));
    push("M(Q8,2)", StructureFamily::Loop, chein_double(&dicyclic(2)));
    push("M(D4,2)", StructureFamily::Loop, chein_double(&dihedral(4)));
    out
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .collect::<String>()
        .to_ascii_lowercase()
}

/// Canonical catalog names, in a stable order.
pub fn catalog_names() -> Vec<String> {
    entries().into_iter().map(|e| e.name).collect()
}

/// Look up a catalog entry by name. Lookup is forgiving about punctuation, so
/// `"M(Q8,2)"`, `"MQ82"` and `"C4:C4"`, `"C4sdC4"` resolve the same way.
pub fn catalog(name: &str) -> Result<NamedCatalogEntry, CayleyError> {
    let want = normalize(name);
    // a couple of spelled-out aliases
    let want = match want.as_str() {
        "t2prime" => "t2p".to_string(),
        "c4sdc4" | "c4rtimesc4" | "c4semidirectc4" => "c4c4".to_string(),
        other => other.to_string(),
    };
    entries()
        .into_iter()
        .find(|e| normalize(&e.name) == want)
        .ok_or_else(|| CayleyError::UnknownName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::isomorphism_test;

    #[test]
    fn every_entry_validates() {
        for e in entries() {
            e.table.validate().unwrap_or_else(|err| {
                panic!("catalog entry {} failed validation: {}", e.name, err)
            });
            if e.family == StructureFamily::Group {
                assert!(e.table.is_group(), "{} is not a group", e.name);
            }
        }
    }

    #[test]
    fn q12_has_exactly_one_involution() {
        let q12 = catalog("Q12").unwrap().table;
        let involutions = (0..12).filter(|&x| q12.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn d4_has_five_involutions_q8_one() {
        let d4 = catalog("D4").unwrap().table;
        let q8 = catalog("Q8").unwrap().table;
        assert_eq!((0..8).filter(|&x| d4.element_order(x) == 2).count(), 5);
        assert_eq!((0..8).filter(|&x| q8.element_order(x) == 2).count(), 1);
        assert!(isomorphism_test(&d4, &q8, false).is_none());
    }

    #[test]
    fn m12_shape() {
        let m12 = catalog("M12").unwrap().table;
        assert_eq!(m12.order, 5);
        assert_eq!(m12.zero, Some(4));
        // exactly one nilpotent among the nonzero elements
        let nilpotent: Vec<usize> =
            (0..4).filter(|&x| m12.table[x][x] == 4).collect();
        assert_eq!(nilpotent.len(), 1);
    }

    #[test]
    fn chein_double_of_q8_is_nonassociative_moufang_loop() {
        let l = catalog("M(Q8,2)").unwrap().table;
        assert_eq!(l.order, 16);
        l.validate().unwrap();
        assert!(l.associativity_witness().is_some());
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(catalog("nope"), Err(CayleyError::UnknownName(_))));
    }

    #[test]
    fn t2_tables_are_semigroups_with_zero() {
        for name in ["T2", "T2p", "T2hat"] {
            let t = catalog(name).unwrap().table;
            t.validate().unwrap();
            assert!(t.zero.is_some(), "{} lacks a zero", name);
        }
    }
}
