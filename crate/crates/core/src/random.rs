//! Seeded generators of small modules, complexes and algebras for property tests.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Algebra, Arrow, Quiver, Relation, DEFAULT_MAX_DEGREE};
use crate::complexes::Complex;
use crate::linalg::Mat;
use crate::modules::{hom_basis, Rep, RepMap};
use crate::torsion::{q_t, SimpleSet};

/// Random elements of the subspaces `within[v]`, each at a random vertex where
/// `within` is nonzero.
fn random_elements<R: Rng + ?Sized>(m: &Rep, within: &[Mat], count: usize, rng: &mut R) -> Vec<Mat> {
    let p = m.modulus();
    let mut seeds: Vec<Mat> = m.dims().iter().map(|&d| Mat::zeros(0, d, p)).collect();
    let support: Vec<usize> = (0..within.len()).filter(|&v| within[v].rows() > 0).collect();
    for _ in 0..count {
        let Some(&v) = support.choose(rng) else {
            break;
        };
        let coeffs: Vec<u32> = (0..within[v].rows()).map(|_| rng.gen_range(0..p)).collect();
        let row = within[v].vec_mul(&coeffs);
        seeds[v] = seeds[v].vstack(&Mat::from_row_vecs(&[row], m.dim_at(v), p));
    }
    seeds
}

fn free_module<R: Rng + ?Sized>(alg: &Arc<Algebra>, max_parts: usize, rng: &mut R) -> Rep {
    let n = alg.vertex_count();
    let k = rng.gen_range(1..=max_parts);
    let parts: Vec<Rep> = (0..k).map(|_| Rep::projective(alg, rng.gen_range(0..n))).collect();
    Rep::direct_sum_all(alg, &parts)
}

fn random_module_once<R: Rng + ?Sized>(alg: &Arc<Algebra>, rng: &mut R) -> Rep {
    let free = free_module(alg, 3, rng);
    match rng.gen_range(0..3) {
        // quotient by a few radical elements: keeps the top, shortens the layers
        0 => {
            let rad = free.radical();
            let r = rng.gen_range(0..=2);
            let seeds = random_elements(&free, rad.bases(), r, rng);
            free.quotient(&free.generated(seeds)).0
        }
        // submodule generated by one or two arbitrary elements
        1 => {
            let full: Vec<Mat> = free.dims().iter().map(|&d| Mat::identity(d, free.modulus())).collect();
            let r = rng.gen_range(1..=2);
            let seeds = random_elements(&free, &full, r, rng);
            free.sub_as_rep(&free.generated(seeds)).0
        }
        // quotient by arbitrary elements
        _ => {
            let full: Vec<Mat> = free.dims().iter().map(|&d| Mat::identity(d, free.modulus())).collect();
            let seeds = random_elements(&free, &full, 1, rng);
            free.quotient(&free.generated(seeds)).0
        }
    }
}

/// A random nonzero module of total dimension at most `max_dim`, built as a
/// quotient or submodule of a sum of up to three indecomposable projectives.
/// Falls back to a simple module when nothing small enough turns up.
pub fn random_module<R: Rng + ?Sized>(alg: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> Rep {
    for _ in 0..64 {
        let m = random_module_once(alg, rng);
        if !m.is_zero() && m.total_dim() <= max_dim {
            return m;
        }
    }
    Rep::simple(alg, rng.gen_range(0..alg.vertex_count()))
}

/// A random module in `F(V)` (possibly zero when `V` is empty).
pub fn random_module_in<R: Rng + ?Sized>(alg: &Arc<Algebra>, v: &SimpleSet, max_dim: usize, rng: &mut R) -> Rep {
    let vs = v.vertices();
    if vs.is_empty() {
        return Rep::zero(alg);
    }
    for _ in 0..64 {
        let m = q_t(&random_module(alg, max_dim, rng), v);
        if !m.is_zero() {
            return m;
        }
    }
    Rep::simple(alg, *vs.choose(rng).unwrap())
}

/// A random element of `Hom(m, n)`.
pub fn random_hom<R: Rng + ?Sized>(m: &Rep, n: &Rep, rng: &mut R) -> RepMap {
    let p = m.modulus();
    hom_basis(m, n)
        .iter()
        .fold(RepMap::zero(m, n), |acc, h| acc.add(&h.scale(rng.gen_range(0..p))))
}

/// A random complex in degrees `lo..lo+len` with terms from `term`. Each
/// `d_{i+1}` is a random map into `ker d_i`, so `d ∘ d = 0` by construction.
pub fn random_complex<R: Rng + ?Sized>(
    alg: &Arc<Algebra>,
    lo: i64,
    len: usize,
    rng: &mut R,
    mut term: impl FnMut(&mut R) -> Rep,
) -> Complex {
    let mut terms: Vec<Rep> = Vec::with_capacity(len);
    let mut diffs: Vec<RepMap> = Vec::new();
    for k in 0..len {
        let x = term(rng);
        if k > 0 {
            let prev = &terms[k - 1];
            let kernel = if k == 1 { crate::modules::SubRep::full(prev) } else { diffs[k - 2].kernel() };
            let (krep, incl) = prev.sub_as_rep(&kernel);
            diffs.push(random_hom(&x, &krep, rng).then(&incl));
        }
        terms.push(x);
    }
    Complex::new(alg, lo, terms, diffs).expect("random complex satisfies d∘d = 0")
}

/// A random small admissible algebra over `GF(p)`: an acyclic quiver on at
/// most `max_vertices` vertices, occasionally with a loop `x` and `x² = 0`,
/// with random zero and commutativity relations of length two.
pub fn random_algebra<R: Rng + ?Sized>(max_vertices: usize, p: u32, rng: &mut R) -> Arc<Algebra> {
    loop {
        let n = rng.gen_range(1..=max_vertices.max(1));
        let mut arrows = Vec::new();
        let arrow_count = rng.gen_range(0..=n + 1);
        for k in 0..arrow_count {
            if n < 2 {
                break;
            }
            let s = rng.gen_range(0..n - 1);
            let t = rng.gen_range(s + 1..n);
            arrows.push(Arrow {
                name: format!("a{k}"),
                source: s,
                target: t,
            });
        }
        let mut loops = Vec::new();
        if rng.gen_bool(0.15) {
            let v = rng.gen_range(0..n);
            loops.push(arrows.len());
            arrows.push(Arrow {
                name: "x".into(),
                source: v,
                target: v,
            });
        }
        let Ok(q) = Quiver::new(n, arrows) else { continue };
        let mut rels: Vec<Relation> = Vec::new();
        for &l in &loops {
            rels.push(Relation::new(vec![(1, vec![l, l])], &q, p).unwrap());
        }
        let arrows = q.arrows();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (i, a) in arrows.iter().enumerate() {
            for (j, b) in arrows.iter().enumerate() {
                if a.target == b.source && !(loops.contains(&i) && i == j) {
                    pairs.push((i, j));
                }
            }
        }
        for &(i, j) in &pairs {
            if rng.gen_bool(0.3) {
                rels.push(Relation::new(vec![(1, vec![i, j])], &q, p).unwrap());
            }
        }
        if pairs.len() >= 2 && rng.gen_bool(0.3) {
            let (x, y) = (pairs[0], pairs[1]);
            let parallel = arrows[x.0].source == arrows[y.0].source && arrows[x.1].target == arrows[y.1].target;
            if parallel {
                let c = rng.gen_range(1..p) as i64;
                rels.push(Relation::new(vec![(1, vec![x.0, x.1]), (-c, vec![y.0, y.1])], &q, p).unwrap());
            }
        }
        if let Ok(a) = Algebra::build(q, rels, p, DEFAULT_MAX_DEGREE) {
            return Arc::new(a);
        }
    }
}
