use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{is_isomorphic, Rep, RepMap, SubRep};
use crate::algebra::Algebra;
use crate::linalg::{Mat, Subspace};

pub const DEFAULT_PD_CUTOFF: usize = 64;

/// A map onto a target from a direct sum of indecomposable projectives,
/// one summand `P(j)` per generator.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub module: Rep,
    /// Vertex of each summand, in summand order.
    pub generators: Vec<usize>,
    pub map: RepMap,
}

impl FreeCover {
    /// The map `⊕ P(j_k) -> target` sending `e_{j_k}` to the given element of `target_{j_k}`.
    pub fn generated_by(target: &Rep, gens: &[(usize, Vec<u32>)]) -> FreeCover {
        let alg = target.algebra();
        let p = alg.modulus();
        let nv = alg.vertex_count();
        let summands: Vec<Rep> = gens.iter().map(|&(j, _)| Rep::projective(alg, j)).collect();
        let module = Rep::direct_sum_all(alg, &summands);
        let mut blocks: Vec<Mat> = (0..nv).map(|v| Mat::zeros(0, target.dim_at(v), p)).collect();
        for (j, g) in gens {
            assert_eq!(g.len(), target.dim_at(*j), "generator has the wrong length");
            let from_j = alg.paths_from(*j);
            // images along basis paths; prefixes precede extensions in basis order
            let mut img: std::collections::HashMap<usize, Vec<u32>> = std::collections::HashMap::new();
            for &b in &from_j {
                let v = match alg.parent(b) {
                    None => g.clone(),
                    Some((pre, arrow)) => target.map(arrow).vec_mul(&img[&pre]),
                };
                img.insert(b, v);
            }
            for (v, block) in blocks.iter_mut().enumerate() {
                let rows: Vec<Vec<u32>> = alg.paths_between(*j, v).iter().map(|b| img[b].clone()).collect();
                *block = block.vstack(&Mat::from_row_vecs(&rows, target.dim_at(v), p));
            }
        }
        FreeCover {
            module,
            generators: gens.iter().map(|&(j, _)| j).collect(),
            map: RepMap::new(blocks),
        }
    }

    /// Generator multiplicity per vertex.
    pub fn multiplicities(&self, vertex_count: usize) -> Vec<usize> {
        let mut m = vec![0; vertex_count];
        for &j in &self.generators {
            m[j] += 1;
        }
        m
    }
}

/// Projective cover. Generators are the first standard basis vectors that
/// complete `rad M` at each vertex.
pub fn projective_cover(m: &Rep) -> FreeCover {
    let rad = m.radical();
    let mut gens = Vec::new();
    for v in 0..m.dims().len() {
        let comp = Subspace::span(&rad.bases()[v]).complement_basis();
        for r in 0..comp.rows() {
            gens.push((v, comp.row(r).to_vec()));
        }
    }
    FreeCover::generated_by(m, &gens)
}

/// `Ω(M)` together with its inclusion into the projective cover.
pub fn syzygy_with_cover(m: &Rep) -> (Rep, RepMap, FreeCover) {
    let cover = projective_cover(m);
    let kernel: SubRep = cover.map.kernel();
    let (omega, incl) = cover.module.sub_as_rep(&kernel);
    (omega, incl, cover)
}

/// The first syzygy `Ω(M)`, the kernel of the projective cover.
pub fn syzygy(m: &Rep) -> Rep {
    syzygy_with_cover(m).0
}

/// `[Ω^0 M, Ω^1 M, ..., Ω^n M]`.
pub fn syzygy_chain(m: &Rep, n: usize) -> Vec<Rep> {
    let mut out = vec![m.clone()];
    for _ in 0..n {
        let next = syzygy(out.last().unwrap());
        out.push(next);
    }
    out
}

/// Projective covers of `Ω^0 M, ..., Ω^depth M`, stopping after the first zero syzygy.
pub fn minimal_resolution(m: &Rep, depth: usize) -> Vec<FreeCover> {
    let mut out = Vec::new();
    let mut cur = m.clone();
    for _ in 0..=depth {
        if cur.is_zero() {
            break;
        }
        let (next, _, cover) = syzygy_with_cover(&cur);
        out.push(cover);
        cur = next;
    }
    out
}

/// Projective (or injective) dimension with certificates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PdResult {
    /// `-1` for the zero module.
    Finite { value: i64 },
    /// `Ω^a ≅ Ω^b ≠ 0` with `a < b`: the syzygies never vanish.
    InfiniteCertified { a: usize, b: usize },
    /// No projective syzygy and no certified repetition below the cutoff.
    AtLeast { bound: usize },
}

impl PdResult {
    pub fn finite(self) -> Option<i64> {
        match self {
            PdResult::Finite { value } => Some(value),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, PdResult::Finite { .. })
    }

    /// Supremum over a family; `-1` for the empty family.
    pub fn sup<I: IntoIterator<Item = PdResult>>(items: I) -> PdResult {
        let mut best = PdResult::Finite { value: -1 };
        for r in items {
            best = match (best, r) {
                (b @ PdResult::InfiniteCertified { .. }, _) => b,
                (_, r @ PdResult::InfiniteCertified { .. }) => r,
                (PdResult::AtLeast { bound: x }, PdResult::AtLeast { bound: y }) => PdResult::AtLeast { bound: x.max(y) },
                (b @ PdResult::AtLeast { .. }, _) => b,
                (_, r @ PdResult::AtLeast { .. }) => r,
                (PdResult::Finite { value: x }, PdResult::Finite { value: y }) => PdResult::Finite { value: x.max(y) },
            };
        }
        best
    }
}

impl std::fmt::Display for PdResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PdResult::Finite { value } => write!(f, "{value}"),
            PdResult::InfiniteCertified { a, b } => write!(f, "infinite (Ω^{a} ≅ Ω^{b})"),
            PdResult::AtLeast { bound } => write!(f, ">= {bound}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PdOptions {
    pub cutoff: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for PdOptions {
    fn default() -> Self {
        PdOptions {
            cutoff: DEFAULT_PD_CUTOFF,
            trials: super::DEFAULT_ISO_TRIALS,
            seed: 0,
        }
    }
}

impl PdOptions {
    /// Independent seed for the `i`-th of several computations.
    pub fn for_index(self, i: usize) -> PdOptions {
        PdOptions {
            seed: self.seed ^ (i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15),
            ..self
        }
    }
}

/// `pd M`: `Finite(d)` when `Ω^d M` is projective, `InfiniteCertified` when two
/// nonzero syzygies are certified isomorphic, `AtLeast(cutoff)` otherwise.
pub fn proj_dimension(m: &Rep, opts: &PdOptions) -> PdResult {
    if m.is_zero() {
        return PdResult::Finite { value: -1 };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let alg = m.algebra();
    let proj_dims: Vec<Vec<usize>> = (0..alg.vertex_count()).map(|i| Rep::projective(alg, i).dims().to_vec()).collect();
    let mut seen: Vec<Rep> = Vec::new();
    let mut cur = m.clone();
    for k in 0..opts.cutoff {
        if is_projective_with(&cur, &proj_dims) {
            return PdResult::Finite { value: k as i64 };
        }
        for (j, prev) in seen.iter().enumerate() {
            if prev.dims() == cur.dims() && is_isomorphic(prev, &cur, opts.trials, &mut rng).is_yes() {
                return PdResult::InfiniteCertified { a: j, b: k };
            }
        }
        let next = syzygy(&cur);
        seen.push(cur);
        cur = next;
    }
    PdResult::AtLeast { bound: opts.cutoff }
}

fn is_projective_with(m: &Rep, proj_dims: &[Vec<usize>]) -> bool {
    let top = m.top_dims();
    let cover_total: usize = top
        .iter()
        .zip(proj_dims)
        .map(|(&t, d)| t * d.iter().sum::<usize>())
        .sum();
    cover_total == m.total_dim()
}

impl Rep {
    /// A module is projective iff its projective cover has the same dimension.
    pub fn is_projective(&self) -> bool {
        let alg = self.algebra();
        let proj_dims: Vec<Vec<usize>> =
            (0..alg.vertex_count()).map(|i| Rep::projective(alg, i).dims().to_vec()).collect();
        is_projective_with(self, &proj_dims)
    }
}

/// `gldim Λ` as the supremum of `pd S(i)`, with per-simple results.
pub fn global_dimension(alg: &Arc<Algebra>, opts: &PdOptions) -> (PdResult, Vec<PdResult>) {
    let per: Vec<PdResult> = (0..alg.vertex_count())
        .map(|i| proj_dimension(&Rep::simple(alg, i), &opts.for_index(i)))
        .collect();
    (PdResult::sup(per.iter().copied()), per)
}

/// `id M`, computed as the projective dimension of `D M` over the opposite algebra.
pub fn injective_dimension(m: &Rep, opts: &PdOptions) -> PdResult {
    proj_dimension(&m.dual(), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quiver, Relation, DEFAULT_MAX_DEGREE};

    fn linear(n: usize) -> Arc<Algebra> {
        let names: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
        let arrows: Vec<(&str, usize, usize)> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i + 1, i + 2)).collect();
        let q = Quiver::from_labels(n, &arrows).unwrap();
        Arc::new(Algebra::build(q, vec![], 101, DEFAULT_MAX_DEGREE).unwrap())
    }

    fn dual_numbers() -> Arc<Algebra> {
        let q = Quiver::from_labels(1, &[("x", 1, 1)]).unwrap();
        let r = Relation::new(vec![(1, vec![0, 0])], &q, 101).unwrap();
        Arc::new(Algebra::build(q, vec![r], 101, DEFAULT_MAX_DEGREE).unwrap())
    }

    #[test]
    fn cover_of_projective_is_iso() {
        let a = linear(3);
        let p = Rep::projective(&a, 0);
        let c = projective_cover(&p);
        assert_eq!(c.module.dims(), p.dims());
        assert!(c.map.is_isomorphism());
        assert!(c.map.is_module_map(&c.module, &p));
        assert!(syzygy(&p).is_zero());
    }

    #[test]
    fn cover_of_zero() {
        let a = linear(2);
        let c = projective_cover(&Rep::zero(&a));
        assert!(c.module.is_zero());
        assert!(c.generators.is_empty());
    }

    #[test]
    fn pd_on_linear_quiver() {
        let a = linear(3);
        let o = PdOptions::default();
        assert_eq!(proj_dimension(&Rep::simple(&a, 0), &o), PdResult::Finite { value: 1 });
        assert_eq!(proj_dimension(&Rep::simple(&a, 2), &o), PdResult::Finite { value: 0 });
        assert_eq!(proj_dimension(&Rep::zero(&a), &o), PdResult::Finite { value: -1 });
        assert_eq!(global_dimension(&a, &o).0, PdResult::Finite { value: 1 });
    }

    #[test]
    fn injective_dims_on_a2() {
        let a = linear(2);
        let o = PdOptions::default();
        assert_eq!(injective_dimension(&Rep::simple(&a, 0), &o), PdResult::Finite { value: 0 });
        assert_eq!(injective_dimension(&Rep::simple(&a, 1), &o), PdResult::Finite { value: 1 });
    }

    #[test]
    fn dual_numbers_are_periodic() {
        let a = dual_numbers();
        let s = Rep::simple(&a, 0);
        assert_eq!(syzygy(&s).dims(), &[1]);
        let r = proj_dimension(&s, &PdOptions::default());
        assert_eq!(r, PdResult::InfiniteCertified { a: 0, b: 1 });
    }

    #[test]
    fn cutoff_reports_lower_bound() {
        let a = linear(4);
        let o = PdOptions {
            cutoff: 1,
            ..PdOptions::default()
        };
        assert_eq!(proj_dimension(&Rep::simple(&a, 0), &o), PdResult::AtLeast { bound: 1 });
    }

    #[test]
    fn sup_conventions() {
        assert_eq!(PdResult::sup([]), PdResult::Finite { value: -1 });
        let f = |v| PdResult::Finite { value: v };
        assert_eq!(PdResult::sup([f(1), f(3)]), f(3));
        assert_eq!(PdResult::sup([f(1), PdResult::AtLeast { bound: 5 }]), PdResult::AtLeast { bound: 5 });
        let inf = PdResult::InfiniteCertified { a: 0, b: 1 };
        assert_eq!(PdResult::sup([PdResult::AtLeast { bound: 5 }, inf]), inf);
    }
}
