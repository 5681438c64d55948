use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use derdim::algebra::Algebra;
use derdim::complexes::{
    mapping_cone, proj_resolution, radical_sequence_is_exact, torsion_sequence_is_exact, Complex,
};
use derdim::fixtures;
use derdim::linalg::{solve, Mat, Subspace};
use derdim::modules::{
    hom_basis, is_isomorphic, proj_dimension, projective_cover, syzygy, PdOptions, PdResult, Rep, RepMap,
    DEFAULT_ISO_TRIALS,
};
use derdim::random::{random_complex, random_module};
use derdim::torsion::{layer_length, q_t, torsion_part, torsion_radical, SimpleSet};

const P: u32 = 101;

fn mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(0..P, rows * cols).prop_map(move |d| Mat::from_vec(rows, cols, P, d))
}

fn small_mat() -> impl Strategy<Value = Mat> {
    (0usize..6, 0usize..6).prop_flat_map(|(r, c)| mat(r, c))
}

/// Low-rank matrices are more interesting than uniformly random ones.
fn low_rank_mat() -> impl Strategy<Value = Mat> {
    (1usize..6, 1usize..6, 1usize..4).prop_flat_map(|(r, c, k)| (mat(r, k), mat(k, c)).prop_map(|(a, b)| a.mul(&b)))
}

fn algebra(name: &str) -> Arc<Algebra> {
    fixtures::load(name)
}

fn module(alg: &Arc<Algebra>, max_dim: usize, seed: u64) -> Rep {
    random_module(alg, max_dim, &mut ChaCha8Rng::seed_from_u64(seed))
}

const MODULE_FIXTURES: &[&str] = &["a3", "ex321_n5", "beilinson_n2", "dualnumbers"];

fn fixture_and_seed() -> impl Strategy<Value = (&'static str, u64)> {
    (proptest::sample::select(MODULE_FIXTURES), any::<u64>())
}

fn iso(m: &Rep, n: &Rep) -> bool {
    is_isomorphic(m, n, DEFAULT_ISO_TRIALS, &mut ChaCha8Rng::seed_from_u64(7)).is_yes()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(a in small_mat()) {
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.rows(), a.cols());
        prop_assert!(a.mul(&k.transpose()).is_zero());
    }

    #[test]
    fn transpose_reverses_products((a, b) in (1usize..5, 1usize..5, 1usize..5).prop_flat_map(|(r, k, c)| (mat(r, k), mat(k, c)))) {
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn solve_finds_a_solution_of_consistent_systems((a, x) in (1usize..6, 1usize..6, 1usize..3).prop_flat_map(|(r, c, k)| (mat(r, c), mat(c, k)))) {
        let b = a.mul(&x);
        let y = solve(&a, &b).unwrap().expect("consistent");
        prop_assert_eq!(a.mul(&y), b);
    }

    #[test]
    fn inverse_is_two_sided(a in (1usize..5).prop_flat_map(|n| mat(n, n))) {
        if let Some(inv) = a.inverse() {
            let id = Mat::identity(a.rows(), P);
            prop_assert_eq!(a.mul(&inv), id.clone());
            prop_assert_eq!(inv.mul(&a), id);
        } else {
            prop_assert!(a.rank() < a.rows());
        }
    }

    #[test]
    fn subspace_dimension_formula(u in low_rank_mat(), w in low_rank_mat()) {
        let n = u.cols().min(w.cols());
        let (u, w) = (Subspace::span(&u.col_range(0, n)), Subspace::span(&w.col_range(0, n)));
        let sum = u.sum(&w).unwrap();
        let meet = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_space(&u).unwrap() && u.contains_space(&meet).unwrap());
    }

    #[test]
    fn syzygy_dimension((name, seed) in fixture_and_seed()) {
        let alg = algebra(name);
        let m = module(&alg, 12, seed);
        let cover = projective_cover(&m);
        prop_assert!(cover.map.is_surjective());
        prop_assert_eq!(cover.multiplicities(alg.vertex_count()), m.top_dims());
        prop_assert_eq!(syzygy(&m).total_dim() + m.total_dim(), cover.module.total_dim());
    }

    #[test]
    fn hom_from_projective_is_evaluation((name, seed) in fixture_and_seed()) {
        let alg = algebra(name);
        let m = module(&alg, 12, seed);
        for i in 0..alg.vertex_count() {
            prop_assert_eq!(hom_basis(&Rep::projective(&alg, i), &m).len(), m.dim_at(i));
        }
    }

    #[test]
    fn syzygy_commutes_with_sums((name, seed) in fixture_and_seed()) {
        let alg = algebra(name);
        let (m, n) = (module(&alg, 8, seed), module(&alg, 8, seed ^ 1));
        prop_assert!(iso(&syzygy(&m.direct_sum(&n)), &syzygy(&m).direct_sum(&syzygy(&n))));
    }

    #[test]
    fn pd_of_sum_is_max(seed in any::<u64>()) {
        let alg = algebra("ex321_n5");
        let opts = PdOptions::default();
        let (m, n) = (module(&alg, 8, seed), module(&alg, 8, seed ^ 1));
        let sum = proj_dimension(&m.direct_sum(&n), &opts);
        prop_assert_eq!(sum, PdResult::sup([proj_dimension(&m, &opts), proj_dimension(&n, &opts)]));
    }

    #[test]
    fn hereditary_modules_have_pd_at_most_one(seed in any::<u64>()) {
        let alg = algebra("a3");
        let pd = proj_dimension(&module(&alg, 12, seed), &PdOptions::default());
        prop_assert!(pd.finite().is_some_and(|d| d <= 1));
    }

    #[test]
    fn torsion_pair_contract((name, seed) in fixture_and_seed(), mask in any::<u64>()) {
        let alg = algebra(name);
        let m = module(&alg, 12, seed);
        let v = SimpleSet::from_mask(alg.vertex_count(), mask);
        let t = torsion_part(&m, &v);
        let f = q_t(&m, &v);
        prop_assert_eq!(t.total_dim() + f.total_dim(), m.total_dim());
        // t_V is idempotent and kills the torsion-free part.
        prop_assert_eq!(torsion_radical(&t, &v).total_dim(), t.total_dim());
        prop_assert!(torsion_radical(&f, &v).is_zero());
        prop_assert_eq!(q_t(&f, &v).dims().to_vec(), f.dims().to_vec());
    }

    #[test]
    fn layer_length_bounded_by_loewy_length((name, seed) in fixture_and_seed(), mask in any::<u64>()) {
        let alg = algebra(name);
        let m = module(&alg, 12, seed);
        let n = alg.vertex_count();
        prop_assert!(layer_length(&m, &SimpleSet::from_mask(n, mask)) <= m.loewy_length());
        prop_assert_eq!(layer_length(&m, &SimpleSet::empty(n)), m.loewy_length());
        prop_assert_eq!(layer_length(&m, &SimpleSet::all(n)), 0);
    }

    #[test]
    fn layer_length_decreases_as_v_grows(mask in any::<u64>(), extra in 0usize..11) {
        let alg = algebra("ex321_n5");
        let regular = Rep::regular(&alg);
        let v = SimpleSet::from_mask(alg.vertex_count(), mask);
        prop_assert!(layer_length(&regular, &v.with(extra)) <= layer_length(&regular, &v));
    }

    #[test]
    fn torsion_preserves_epimorphisms(seed in any::<u64>(), mask in any::<u64>()) {
        // q_t and t_V applied to M -> M/N: dimensions can only drop.
        let alg = algebra("ex321_n5");
        let m = module(&alg, 12, seed);
        let v = SimpleSet::from_mask(alg.vertex_count(), mask);
        let quotient = m.quotient(&m.radical()).0;
        prop_assert!(q_t(&quotient, &v).total_dim() <= q_t(&m, &v).total_dim());
        prop_assert!(torsion_part(&quotient, &v).total_dim() <= torsion_part(&m, &v).total_dim());
    }
}

fn complex(alg: &Arc<Algebra>, seed: u64, lo: i64, len: usize) -> Complex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_complex(alg, lo, len, &mut rng, |r| random_module(alg, 6, r))
}

fn homology_dim(x: &Complex, i: i64) -> usize {
    x.homology_dims(i).iter().sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn homology_of_sum_is_sum_of_homology((name, seed) in fixture_and_seed(), lo in -3i64..3) {
        let alg = algebra(name);
        let (x, y) = (complex(&alg, seed, lo, 3), complex(&alg, seed ^ 1, lo - 1, 3));
        let s = x.direct_sum(&y);
        for i in lo - 2..lo + 4 {
            prop_assert_eq!(homology_dim(&s, i), homology_dim(&x, i) + homology_dim(&y, i));
        }
    }

    #[test]
    fn shift_moves_homology((name, seed) in fixture_and_seed(), k in -3i64..4) {
        let alg = algebra(name);
        let x = complex(&alg, seed, 0, 3);
        let shifted = x.shift(k);
        for i in -1..4 {
            prop_assert_eq!(shifted.homology_dims(i + k), x.homology_dims(i));
        }
    }

    #[test]
    fn cone_of_identity_is_acyclic((name, seed) in fixture_and_seed()) {
        let alg = algebra(name);
        let x = complex(&alg, seed, -1, 3);
        let cone = mapping_cone(&x, &x, |i| RepMap::identity(&x.term(i)));
        prop_assert!(cone.is_zero_in_derived());
    }

    #[test]
    fn resolutions_are_minimal_and_keep_homology((name, seed) in fixture_and_seed()) {
        let alg = algebra(name);
        let x = complex(&alg, seed, 0, 3);
        let res = proj_resolution(&x, 3);
        prop_assert!(res.is_minimal());
        for i in 0..res.top {
            prop_assert_eq!(res.complex.homology_dims(i), x.homology_dims(i));
            prop_assert!(res.complex.term(i).is_projective());
        }
    }

    #[test]
    fn degreewise_sequences_are_exact((name, seed) in fixture_and_seed(), mask in any::<u64>()) {
        let alg = algebra(name);
        let x = complex(&alg, seed, -2, 3);
        let v = SimpleSet::from_mask(alg.vertex_count(), mask);
        prop_assert!(torsion_sequence_is_exact(&x, &v));
        prop_assert!(radical_sequence_is_exact(&x, &v));
    }
}
