//! Exact decomposition of the rational table algebra: radical dimension,
//! simple components, centers, signatures and component kinds.
//!
//! Run with: cargo run --example algebra_decomposition

use hypunits::cayley::catalog::catalog;
use hypunits::exactalg::analyze_table;

fn main() {
    for name in ["Q8", "S3", "C5", "T2"] {
        let t = catalog(name).unwrap().table;
        let report = analyze_table(&t).expect("associative input");
        println!(
            "{name}: dim {} = radical {} + semisimple {}",
            report.algebra.dim,
            report.split.radical_dim,
            report.split.semisimple_quotient.dim
        );
        for d in &report.descriptors {
            println!(
                "  component: kind={:?} dim/center={} center minpoly={} signature={:?}",
                d.kind, d.dim_over_center, d.center_minpoly_text, d.signature
            );
        }
    }
}
