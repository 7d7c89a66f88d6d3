//! The table-side classification with its certificates, and the agreement
//! check against the independent algebra-side oracle.
//!
//! Run with: cargo run --example classify_and_crosscheck

use hypunits::cayley::catalog::catalog;
use hypunits::classify::{classify_semigroup, crosscheck};

fn main() {
    for name in ["C8", "Q8", "D4", "M", "T2p", "C7", "ChainC5C8"] {
        let t = catalog(name).unwrap().table;
        let r = classify_semigroup(&t);
        println!("{name}: {:?} via {:?}", r.verdict, r.branch);
        if let Some(k) = &r.k_certificate {
            println!("  exceptional factor: {} (from the {} list)", k.name, k.list);
        }
        if let Some(tt) = r.t_type {
            println!("  radical pattern: {:?}", tt);
        }
        if let Some(lm) = &r.lambda_mu {
            println!("  lambda={} mu={} sum={}", lm.lambda, lm.mu, lm.sum);
        }
        let rec = crosscheck(name, &t);
        println!("  oracle: {:?} -> {:?}", rec.oracle_verdict, rec.agreement);
    }
}
