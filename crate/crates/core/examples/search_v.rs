//! Search all sets of simples for the smallest bound.
//!
//!     cargo run --release --example search_v [fixture]

use derdim::bounds::{best_v_search, Analysis, AnalysisOptions, DEFAULT_SUBSET_LIMIT};
use derdim::fixtures;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "ex321_n5".into());
    let alg = fixtures::load(&name);
    let an = Analysis::new(&alg, AnalysisOptions::default());
    let (mode, rows) = best_v_search(&an, DEFAULT_SUBSET_LIMIT, true).expect("search within limits");

    println!("{name}: {mode:?} search over {} sets", rows.len());
    for row in rows.iter().take(10) {
        let bound = row.min_bound.map_or("-".to_string(), |b| b.to_string());
        println!("  {:<28} bound {bound:<3} layer length {} pd V {}", row.v.to_string(), row.layer_length, row.pd_v);
    }
}
