//! Green's relations, the structure scan and the principal series of a small
//! semigroup, using the named triangular-matrix semigroup from the catalog.
//!
//! Run with: cargo run --example greens_relations

use hypunits::cayley::catalog::catalog;
use hypunits::green::{greens_data, principal_series, structure_scan};

fn main() {
    let t = catalog("T2").unwrap().table;

    let scan = structure_scan(&t);
    println!(
        "inverse semigroup: {}   zero: {:?}   nilpotents: {:?}",
        scan.is_inverse, scan.zero, scan.nilpotents
    );

    let green = greens_data(&t);
    println!("idempotents: {:?}", green.idempotents);
    println!("J-classes: {:?}", green.j);
    for (e, g) in &green.maximal_subgroups {
        println!("maximal subgroup at idempotent {e}: {:?}", g);
    }

    let series = principal_series(&t);
    println!("principal series ideals: {:?}", series.chain);
    for (i, factor) in series.factors.iter().enumerate() {
        println!("factor {i}: {}", factor.recognition.kind_name());
    }
}
