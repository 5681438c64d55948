//! Hand-computed values on the bundled fixtures.

use std::sync::Arc;

use derdim::algebra::Algebra;
use derdim::complexes::{derived_syzygy, proj_resolution, Complex};
use derdim::fixtures;
use derdim::linalg::Mat;
use derdim::modules::{
    global_dimension, hom_basis, injective_dimension, is_isomorphic, proj_dimension, projective_cover, syzygy,
    PdOptions, PdResult, Rep,
};
use derdim::torsion::{f_step, in_f_of_v, layer_length, q_t, torsion_radical, SimpleSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ex5() -> Arc<Algebra> {
    fixtures::load("ex321_n5")
}

fn v_top_row(n: usize) -> SimpleSet {
    SimpleSet::from_labels(2 * n + 1, &(2..=n).collect::<Vec<_>>()).unwrap()
}

fn fin(v: i64) -> PdResult {
    PdResult::Finite { value: v }
}

#[test]
fn projectives_of_the_11_vertex_algebra() {
    let a = ex5();
    assert_eq!(Rep::projective(&a, 0).total_dim(), 8);
    assert_eq!(Rep::projective(&a, 5).total_dim(), 2);
    assert_eq!(Rep::projective(&a, 5).dims()[6], 1);
    assert_eq!(Rep::projective(&a, 0).loewy_length(), 5);
    assert!(Rep::simple(&a, 8).is_projective());
    assert_eq!(Rep::regular(&a).total_dim(), a.dim());
}

#[test]
fn syzygies_of_simples() {
    let a = ex5();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let s1 = Rep::simple(&a, 0);
    let cover = projective_cover(&s1);
    assert_eq!(cover.generators, vec![0]);
    let om = syzygy(&s1);
    assert_eq!(om.total_dim(), 7);
    let expected = Rep::direct_sum_all(
        &a,
        &[Rep::projective(&a, 1), Rep::simple(&a, 5), Rep::simple(&a, 9), Rep::simple(&a, 10)],
    );
    assert!(is_isomorphic(&om, &expected, 64, &mut rng).is_yes());
    let om6 = syzygy(&Rep::simple(&a, 5));
    assert!(is_isomorphic(&om6, &Rep::simple(&a, 6), 64, &mut rng).is_yes());
}

#[test]
fn p2_is_the_submodule_through_the_first_arrow() {
    let a = ex5();
    let p1 = Rep::projective(&a, 0);
    let p2 = Rep::projective(&a, 1);
    // generated by the vertex-2 coordinate of P(1), i.e. the path a1
    let seeds: Vec<Mat> = p1
        .dims()
        .iter()
        .enumerate()
        .map(|(v, &d)| if v == 1 { Mat::identity(d, 101) } else { Mat::zeros(0, d, 101) })
        .collect();
    let sub = p1.generated(seeds);
    let (m, _) = p1.sub_as_rep(&sub);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    assert!(is_isomorphic(&m, &p2, 64, &mut rng).is_yes());
}

#[test]
fn projective_dimensions() {
    let a = ex5();
    let o = PdOptions::default();
    let (gl, per) = global_dimension(&a, &o);
    assert_eq!(gl, fin(4));
    assert_eq!(per[0], fin(4));
    for (i, pd) in per.iter().enumerate().take(4).skip(1) {
        assert_eq!(*pd, fin(1), "pd S{}", i + 1);
    }
    assert_eq!(per[4], fin(0));
    // the branch 6 -> 7 -> 8 -> 9 with zero relations: Ω(S6) = S7, Ω(S7) = S8, Ω(S8) = S9
    assert_eq!(&per[5..8], &[fin(3), fin(2), fin(1)]);
    for i in [8, 9, 10] {
        assert_eq!(per[i], fin(0));
    }
    let n6 = fixtures::load("ex321_n6");
    assert_eq!(global_dimension(&n6, &o).0, fin(5));
}

#[test]
fn global_dimensions_of_other_fixtures() {
    let o = PdOptions::default();
    for (name, expected) in [("semisimple3", fin(0)), ("a2", fin(1)), ("a3", fin(1)), ("beilinson_n2", fin(2)), ("beilinson_n3", fin(3))] {
        assert_eq!(global_dimension(&fixtures::load(name), &o).0, expected, "{name}");
    }
    let d = fixtures::load("dualnumbers");
    assert_eq!(global_dimension(&d, &o).0, PdResult::InfiniteCertified { a: 0, b: 1 });
}

#[test]
fn injective_dimensions_on_a2() {
    let a = fixtures::load("a2");
    let o = PdOptions::default();
    assert_eq!(injective_dimension(&Rep::simple(&a, 0), &o), fin(0));
    assert_eq!(injective_dimension(&Rep::simple(&a, 1), &o), fin(1));
    let ss = fixtures::load("semisimple3");
    assert_eq!(injective_dimension(&Rep::simple(&ss, 2), &o), fin(0));
}

#[test]
fn hom_from_projectives_counts_dimensions() {
    let a = ex5();
    let m = Rep::regular(&a);
    for i in 0..a.vertex_count() {
        assert_eq!(hom_basis(&Rep::projective(&a, i), &m).len(), m.dims()[i]);
    }
}

#[test]
fn torsion_radical_on_the_top_row() {
    let a = ex5();
    let v = v_top_row(5);
    let p1 = Rep::projective(&a, 0);
    let p2 = Rep::projective(&a, 1);
    assert!(in_f_of_v(&p2, &v));
    assert!(torsion_radical(&p2, &v).is_zero());
    assert_eq!(torsion_radical(&p1, &v).total_dim(), p1.total_dim());
    assert!(q_t(&p1, &v).is_zero());
}

#[test]
fn layer_length_of_the_regular_module() {
    let a = ex5();
    let lam = Rep::regular(&a);
    let v = v_top_row(5);
    assert_eq!(layer_length(&lam, &v), 2);
    let f = f_step(&lam, &v);
    assert_eq!(f.dims(), &[0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
    assert!(f_step(&f, &v).is_zero());
    assert_eq!(layer_length(&lam, &SimpleSet::empty(11)), 5);
    assert_eq!(layer_length(&lam, &SimpleSet::all(11)), 0);

    let a6 = fixtures::load("ex321_n6");
    assert_eq!(layer_length(&Rep::regular(&a6), &v_top_row(6)), 2);
}

#[test]
fn resolution_of_s1_has_five_terms() {
    let a = ex5();
    let res = proj_resolution(&Complex::from_module(&Rep::simple(&a, 0)), 6);
    let nonzero: Vec<i64> = res.term_dims().into_iter().filter(|(_, d)| d.iter().any(|&x| x > 0)).map(|(i, _)| i).collect();
    assert_eq!(nonzero, vec![0, 1, 2, 3, 4]);
    assert!(res.is_minimal());
}

#[test]
fn derived_and_classical_syzygy_agree_on_s1() {
    let a = ex5();
    let s1 = Rep::simple(&a, 0);
    let d = derived_syzygy(&Complex::from_module(&s1), 1);
    assert_eq!(d.support(), Some((0, 0)));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    assert!(is_isomorphic(&d.term(0), &syzygy(&s1), 64, &mut rng).is_yes());
    assert_eq!(proj_dimension(&s1, &PdOptions::default()), fin(4));
}
