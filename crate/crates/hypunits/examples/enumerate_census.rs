//! Enumerate all semigroups of a small order up to isomorphism and
//! anti-isomorphism, then run both verdict engines over every structure.
//!
//! Run with: cargo run --example enumerate_census

use hypunits::enumerate::{census, enumerate_tables, Dedup};

fn main() {
    for n in 1..=3 {
        let tables = enumerate_tables(n, Dedup::Equivalence, false).unwrap();
        println!("order {n}: {} structures", tables.len());
    }

    let out = census(3).unwrap();
    println!("\ncensus at order 3 ({} ms):", out.row.millis);
    println!("rows: table verdict (Yes / No / out of scope)");
    println!("cols: oracle verdict (Yes / No / indeterminate)");
    for row in &out.row.histogram {
        println!("  {:?}", row);
    }
    for rec in &out.ledger {
        println!("{:?} {}: {}", rec.agreement, rec.input, rec.note);
    }
}
