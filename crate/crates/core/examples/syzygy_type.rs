//! Certificates that an algebra is syzygy-finite, and the isomorphism test
//! behind them.
//!
//!     cargo run --example syzygy_type

use derdim::bounds::{syzygy_type, SyzygyTypeCertificate, DEFAULT_SYZYGY_DEPTH};
use derdim::fixtures;
use derdim::modules::{is_isomorphic, syzygy, IsoResult, PdOptions, Rep, DEFAULT_ISO_TRIALS};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let opts = PdOptions::default();
    for name in ["a3", "ex321_n5", "dualnumbers"] {
        let alg = fixtures::load(name);
        let cert = syzygy_type(&alg, DEFAULT_SYZYGY_DEPTH, &opts);
        println!("{name}: {cert}");
        if let SyzygyTypeCertificate::Periodic { witness, .. } = &cert {
            println!("  witness is an isomorphism: {}", witness.is_isomorphism());
        }
    }

    let alg = fixtures::load("ex321_n5");
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    // Ω(S6) ≅ S7 but Ω(S6) is not isomorphic to S8.
    let omega = syzygy(&Rep::simple(&alg, 5));
    for target in [6, 7] {
        let verdict = match is_isomorphic(&omega, &Rep::simple(&alg, target), DEFAULT_ISO_TRIALS, &mut rng) {
            IsoResult::Yes(_) => "yes".to_string(),
            IsoResult::No(why) => format!("no ({why})"),
            IsoResult::Unknown => "unknown".to_string(),
        };
        println!("Ω(S6) ≅ S{}: {verdict}", target + 1);
    }
}
