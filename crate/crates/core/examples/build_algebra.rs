//! Parse an algebra presentation, list its path basis and reduce a few paths
//! to normal form.
//!
//!     cargo run --example build_algebra

use derdim::algebra::format::AlgebraFile;
use derdim::algebra::{Path, DEFAULT_MAX_DEGREE};

const TEXT: &str = "
# a commutative square 1 -> 2 -> 4, 1 -> 3 -> 4
field 7
vertices 4
arrow a: 1 -> 2
arrow b: 2 -> 4
arrow c: 1 -> 3
arrow d: 3 -> 4
rel a*b - 3*c*d
";

fn main() {
    let file = AlgebraFile::parse(TEXT).expect("valid presentation");
    let alg = file.build(DEFAULT_MAX_DEGREE).expect("admissible");
    let q = alg.quiver();

    println!("GF({}) with {} vertices, {} arrows", alg.modulus(), alg.vertex_count(), q.arrows().len());
    println!("dim = {}, Loewy length = {}", alg.dim(), alg.loewy_length());
    for (i, b) in alg.basis().iter().enumerate() {
        println!("  b{i:<2} {}", b.display(q));
    }

    // c*d is not a basis path; it reduces to a multiple of a*b.
    let (a, b) = (q.arrow_id("a").unwrap(), q.arrow_id("b").unwrap());
    let (c, d) = (q.arrow_id("c").unwrap(), q.arrow_id("d").unwrap());
    for (name, arrows) in [("a*b", vec![a, b]), ("c*d", vec![c, d])] {
        let path = Path { source: 0, arrows };
        let nf: Vec<String> = alg
            .normal_form(&path)
            .iter()
            .map(|&(i, c)| format!("{c}·{}", alg.basis()[i].display(q)))
            .collect();
        println!("{name} = {}", nf.join(" + "));
    }

    let op = alg.opposite();
    println!("opposite algebra: dim {}, Loewy length {}", op.dim(), op.loewy_length());
    print!("round trip:\n{}", AlgebraFile::from_algebra(&alg));
}
