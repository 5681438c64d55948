//! The torsion radical `t_V`, the torsion-free quotient `q_t` and the layer
//! sequence `M, F(M), F²(M), ...` of the regular module.
//!
//!     cargo run --example torsion_layers

use derdim::fixtures;
use derdim::modules::Rep;
use derdim::torsion::{in_f_of_v, layer_profile, q_t, torsion_part, SimpleSet};

fn main() {
    let alg = fixtures::load("ex321_n5");
    let n = alg.vertex_count();
    let regular = Rep::regular(&alg);

    for v in [
        SimpleSet::empty(n),
        SimpleSet::from_labels(n, &[2, 3, 4, 5]).unwrap(),
        SimpleSet::from_labels(n, &[6, 7, 8, 9]).unwrap(),
        SimpleSet::all(n),
    ] {
        let profile = layer_profile(&regular, &v);
        println!("V = {v}: layer length {}", profile.length);
        for (i, m) in profile.sequence.iter().enumerate() {
            println!("  F^{i}: {:?}", m.dims());
        }
        let t = torsion_part(&regular, &v);
        let f = q_t(&regular, &v);
        println!("  t_V(Λ) has dim {}, q_t(Λ) has dim {} and lies in F(V): {}", t.total_dim(), f.total_dim(), in_f_of_v(&f, &v));
    }
}
