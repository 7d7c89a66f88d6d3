//! Constructive refutation: exhibit two explicit commuting units generating a
//! rank-two free abelian group, with an exact certificate of independence.
//!
//! Run with: cargo run --example refute_z2

use hypunits::cayley::catalog::catalog;
use hypunits::verdict::refute_search;

fn main() {
    // C7: the cyclotomic field Q(zeta_7) has unit rank 2.
    let t = catalog("C7").unwrap().table;
    let witness = refute_search(&t, 3, 6).expect("search completes").expect("witness exists");
    println!("arena: {}", witness.arena);
    println!("u = {:?}", witness.u);
    println!("v = {:?}", witness.v);
    println!("certificate: {}", witness.certificate);

    // ChainC5C8: each half alone has unit rank 1; the rank two only appears
    // across the two components of the product.
    let t = catalog("ChainC5C8").unwrap().table;
    let witness = refute_search(&t, 3, 6).expect("search completes").expect("witness exists");
    println!("\narena: {}", witness.arena);
    println!("certificate: {}", witness.certificate);

    // On a finite unit group the search comes back empty.
    let t = catalog("Q8").unwrap().table;
    assert!(refute_search(&t, 2, 4).unwrap().is_none());
    println!("\nQ8: no witness at height 2, as expected");
}
