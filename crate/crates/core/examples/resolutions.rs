//! Minimal projective resolutions, projective dimensions of simples and the
//! global dimension, including an algebra of infinite global dimension.
//!
//!     cargo run --example resolutions

use derdim::fixtures;
use derdim::modules::{global_dimension, minimal_resolution, proj_dimension, syzygy, PdOptions, Rep};

fn main() {
    let alg = fixtures::load("ex321_n5");
    let opts = PdOptions::default();

    println!("minimal resolution of S1 over ex321_n5 (multiplicities of P(1..11)):");
    let s1 = Rep::simple(&alg, 0);
    for (i, step) in minimal_resolution(&s1, 8).iter().enumerate() {
        println!("  P_{i}: {:?}", step.multiplicities(alg.vertex_count()));
    }

    let (gldim, per_simple) = global_dimension(&alg, &opts);
    for (i, pd) in per_simple.iter().enumerate() {
        println!("pd S{} = {pd}", i + 1);
    }
    println!("gldim = {gldim}");

    // Over k[x]/(x²) the simple is its own syzygy.
    let dual = fixtures::load("dualnumbers");
    let s = Rep::simple(&dual, 0);
    println!("dual numbers: dim Ω(S) = {}, pd S = {}", syzygy(&s).total_dim(), proj_dimension(&s, &opts));
}
