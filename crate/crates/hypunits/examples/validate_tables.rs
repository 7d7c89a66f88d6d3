//! Parse multiplication tables from the two on-disk formats and validate the
//! laws of the declared kind.
//!
//! Run with: cargo run --example validate_tables

use hypunits::cayley::{parse_json, parse_text};

fn main() {
    // Plain text: a kind line, then one row per element (1-based entries).
    let text = "semigroup 3\n1 1 1\n1 1 1\n1 1 3\n";
    let t = parse_text(text).expect("well-formed table");
    t.validate().expect("associative");
    println!(
        "text input accepted: kind={:?} order={} zero={:?} identity={:?}",
        t.kind, t.order, t.zero, t.identity
    );

    // JSON: the same table round-tripped through the structured format.
    let from_json = parse_json(&t.to_json()).expect("round-trip");
    assert_eq!(from_json.table, t.table);
    println!("json round-trip matches");

    // A non-associative operation is rejected at validation time.
    let bad = parse_text("semigroup 2\n2 2\n1 2\n").expect("shape is fine");
    match bad.validate() {
        Err(e) => println!("bad table rejected: {e}"),
        Ok(()) => unreachable!("this operation is not associative"),
    }

    // Trailing garbage after the table is an error, not silently ignored.
    match parse_text("semigroup 2\n1 2\n2 1\nleftover\n") {
        Err(e) => println!("trailing garbage rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
