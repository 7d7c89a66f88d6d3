//! The algebra-side oracle: does the unit group of some Z-order in the
//! rational table algebra contain a rank-two free abelian group?
//!
//! Run with: cargo run --example oracle_verdict

use hypunits::cayley::catalog::catalog;
use hypunits::verdict::try_algebra_verdict;

fn main() {
    for name in ["C4", "C5", "C7", "Q8", "S3", "T2hat", "ChainC5C8"] {
        let t = catalog(name).unwrap().table;
        let v = try_algebra_verdict(&t).expect("associative input");
        println!("{name}: {:?} (shape {:?})", v.hyperbolic, v.shape);
        for c in &v.certificates {
            println!("  {c}");
        }
    }
}
