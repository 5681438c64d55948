//! Every upper bound on the derived dimension for a chosen set of simples,
//! with applicability and the resulting minimum.
//!
//!     cargo run --example bounds_report [fixture] [labels]
//!     cargo run --example bounds_report ex321_n6 2,3,4,5,6

use derdim::bounds::{full_report, Analysis, AnalysisOptions};
use derdim::cli::parse_simples;
use derdim::fixtures;

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "ex321_n5".into());
    let labels = args.next().unwrap_or_else(|| "2,3,4,5".into());

    let alg = fixtures::load(&name);
    let v = parse_simples(&labels, alg.vertex_count()).expect("valid simple labels");
    let an = Analysis::new(&alg, AnalysisOptions::default());
    let r = full_report(&an, &v);

    println!("{name}: dim {}, LL {}, gldim {}", r.dim, r.loewy_length, r.gldim);
    println!("V = {}: pd V = {}, id V = {}, layer length {}", r.v, r.pd_v, r.id_v, r.layer_length);
    println!("syzygy type: {}", r.syzygy);
    for e in &r.entries {
        match e.value {
            Some(x) => println!("  {:<18} {:<22} {x}", e.name, e.formula),
            None => println!("  {:<18} {:<22} n/a ({})", e.name, e.formula, e.applicable.reason().unwrap_or("")),
        }
    }
    match r.min_bound {
        Some(m) => println!("derived dimension <= {m}"),
        None => println!("no applicable bound"),
    }
}
