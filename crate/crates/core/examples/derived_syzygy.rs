//! Bounded complexes: homology, projective resolutions and derived syzygies.
//! For a module the derived syzygy agrees with the classical one.
//!
//!     cargo run --example derived_syzygy

use derdim::complexes::{derived_syzygy, mapping_cone, proj_resolution, Complex};
use derdim::fixtures;
use derdim::modules::{hom_basis, is_isomorphic, syzygy_chain, Rep, RepMap, DEFAULT_ISO_TRIALS};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let alg = fixtures::load("a3");
    let mut rng = ChaCha8Rng::seed_from_u64(0);

    // Chain convention, d_i: X_i -> X_{i-1}. X = (P(2) -> P(1)) in degrees 1, 0
    // has homology S1 in degree 0 only.
    let (p1, p2) = (Rep::projective(&alg, 0), Rep::projective(&alg, 1));
    let incl = hom_basis(&p2, &p1).remove(0);
    let x = Complex::new(&alg, 0, vec![p1, p2], vec![incl]).unwrap();
    println!("X: terms {:?}", x.total_dims());
    println!("   homology {:?}", x.homology_profile());

    let res = proj_resolution(&x, 3);
    println!("projective resolution: {:?}, minimal: {}", res.term_dims(), res.is_minimal());

    for n in 0..=2 {
        let omega = derived_syzygy(&x, n);
        println!("Ω^{n}(X): terms {:?}, homology {:?}", omega.total_dims(), omega.homology_profile());
    }

    let alg = fixtures::load("ex321_n5");
    let s1 = Rep::simple(&alg, 0);
    let classical = syzygy_chain(&s1, 2);
    let derived = derived_syzygy(&Complex::from_module(&s1), 2);
    let h0 = derived.homology(0);
    println!(
        "Ω²(S1): classical dims {:?}, derived H^0 dims {:?}, isomorphic: {}",
        classical[2].dims(),
        h0.dims(),
        is_isomorphic(&classical[2], &h0, DEFAULT_ISO_TRIALS, &mut rng).is_yes()
    );

    // The cone of the identity is acyclic.
    let cone = mapping_cone(&x, &x, |i| RepMap::identity(&x.term(i)));
    println!("cone(id_X) is zero in the derived category: {}", cone.is_zero_in_derived());
}
