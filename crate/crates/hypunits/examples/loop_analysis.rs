//! Loop-side analysis: Moufang and alternative laws, subloop normality, the
//! positive and negative doubled-group cases, and a normalized-unit scan.
//!
//! Run with: cargo run --example loop_analysis

use hypunits::cayley::catalog::catalog;
use hypunits::raloop::{analyze_loop, classify_raloop, nontrivial_normalized_units};

fn main() {
    for name in ["M(Q8,2)", "M(D4,2)"] {
        let l = catalog(name).unwrap().table;
        let a = analyze_loop(&l).expect("within the loop order cap");
        println!(
            "{name}: moufang={} alternative-not-associative={} all-subloops-normal={}",
            a.moufang,
            a.ra_loop,
            a.normal_flags.iter().all(|&f| f)
        );
        let r = classify_raloop(&l);
        println!("  verdict: {:?}", r.verdict);
        for note in &r.notes {
            println!("  note: {note}");
        }
    }

    // The doubled quaternion group admits no nontrivial normalized units of
    // small height in its integral loop ring.
    let l = catalog("M(Q8,2)").unwrap().table;
    let count = nontrivial_normalized_units(&l, 2);
    println!("M(Q8,2): nontrivial normalized units at height 2: {count}");
}
