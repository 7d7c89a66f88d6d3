//! Randomized invariants: relabeling invariance of the classifier, the
//! product formula for the quaternion ramification symbol, factorization
//! round-trips, and parser round-trips.

use hypunits::cayley::{parse_json, parse_text, CayleyTable};
use hypunits::classify::classify_semigroup;
use hypunits::exactalg::hilbert::{hilbert_symbol, relevant_places};
use hypunits::poly::QPoly;
use proptest::prelude::*;

fn relabel(t: &CayleyTable, p: &[usize]) -> CayleyTable {
    let n = t.order;
    let mut rows = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            rows[p[x]][p[y]] = p[t.mul(x, y)];
        }
    }
    CayleyTable::from_rows(t.kind, rows).expect("relabeling preserves the laws")
}

fn small_catalog_table(index: usize) -> CayleyTable {
    let names = ["C4", "C6", "Null2", "T2", "T2p", "T2hat", "S3", "M"];
    hypunits::cayley::catalog::catalog(names[index % names.len()])
        .unwrap()
        .table
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The table-side verdict and branch cannot depend on how the elements
    /// are numbered.
    #[test]
    fn classifier_is_relabeling_invariant(
        index in 0usize..8,
        perm in Just(()).prop_perturb(|_, mut rng| {
            let mut p: Vec<usize> = (0..8).collect();
            for i in (1..8).rev() {
                let j = (rng.next_u64() as usize) % (i + 1);
                p.swap(i, j);
            }
            p
        }),
    ) {
        let t = small_catalog_table(index);
        let p: Vec<usize> = perm.iter().filter(|&&x| x < t.order).copied().collect();
        let relabeled = relabel(&t, &p);
        let a = classify_semigroup(&t);
        let b = classify_semigroup(&relabeled);
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.branch, b.branch);
        prop_assert_eq!(a.t_type, b.t_type);
        prop_assert_eq!(
            a.k_certificate.map(|k| k.name),
            b.k_certificate.map(|k| k.name)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// The symbol is multiplicatively balanced over all places: the number of
    /// ramified places of (a,b/Q) is even.
    #[test]
    fn hilbert_symbol_product_formula(a in -60i64..60, b in -60i64..60) {
        prop_assume!(a != 0 && b != 0);
        let product: i64 = relevant_places(a, b)
            .into_iter()
            .map(|v| hilbert_symbol(a, b, v))
            .product();
        prop_assert_eq!(product, 1);
    }

    /// The symbol is symmetric in its arguments at every place.
    #[test]
    fn hilbert_symbol_is_symmetric(a in -60i64..60, b in -60i64..60, p in prop::sample::select(vec![None, Some(2i64), Some(3), Some(5), Some(7), Some(11)])) {
        prop_assume!(a != 0 && b != 0);
        prop_assert_eq!(hilbert_symbol(a, b, p), hilbert_symbol(b, a, p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Factoring and multiplying back recovers the monic form of the input.
    #[test]
    fn factorization_round_trip(coeffs in prop::collection::vec(-9i64..=9, 1..7)) {
        prop_assume!(coeffs.iter().any(|&c| c != 0));
        let f = QPoly::from_ints(&coeffs);
        let factors = f.factor().expect("degree is far below the cap");
        let mut product = QPoly::one();
        for (g, mult) in &factors {
            prop_assert!(g.is_irreducible().unwrap(), "reducible factor emitted");
            for _ in 0..*mult {
                product = product.mul(g);
            }
        }
        prop_assert_eq!(product, f.monic());
    }

    /// Text and JSON serializations parse back to the identical table.
    #[test]
    fn parser_round_trips(index in 0usize..8) {
        let t = small_catalog_table(index);
        let from_text = parse_text(&t.to_text()).unwrap();
        prop_assert_eq!(&from_text.table, &t.table);
        prop_assert_eq!(from_text.kind, t.kind);
        let from_json = parse_json(&t.to_json()).unwrap();
        prop_assert_eq!(&from_json.table, &t.table);
        prop_assert_eq!(from_json.kind, t.kind);
    }
}
