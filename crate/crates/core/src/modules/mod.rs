//! Right modules over a bound quiver algebra, presented as representations.
//!
//! Elements are row vectors per vertex. An arrow `a: u -> v` acts by right
//! multiplication with a `dims[u] x dims[v]` matrix, so composing along a
//! path multiplies matrices left to right.

mod hom;
mod iso;
mod map;
mod resolve;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::{express_in_rows, Mat, Subspace};

pub use hom::hom_basis;
pub use iso::{is_isomorphic, IsoResult, DEFAULT_ISO_TRIALS};
pub use map::RepMap;
pub use resolve::{
    global_dimension, injective_dimension, minimal_resolution, proj_dimension, projective_cover, syzygy,
    syzygy_chain, syzygy_with_cover, FreeCover, PdOptions, PdResult, DEFAULT_PD_CUTOFF,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("wrong shape: {0}")]
    Shape(String),
    #[error("relation {index} does not vanish on the representation")]
    RelationViolated { index: usize },
    #[error("subspace is not closed under the arrow maps")]
    NotInvariant,
    #[error("representations belong to different algebras")]
    AlgebraMismatch,
    #[error("not a module homomorphism")]
    NotModuleMap,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

/// A finite-dimensional right module given as a quiver representation.
#[derive(Clone)]
pub struct Rep {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

/// A subrepresentation: one row-span basis per vertex, in parent coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubRep {
    bases: Vec<Mat>,
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rep").field("dims", &self.dims).finish()
    }
}

impl Rep {
    /// Validates matrix shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Rep, ModuleError> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(ModuleError::Shape(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(ModuleError::Shape(format!("{} maps for {} arrows", maps.len(), q.arrows().len())));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] || m.modulus() != algebra.modulus() {
                return Err(ModuleError::Shape(format!(
                    "arrow `{}` needs a {}x{} matrix over GF({})",
                    a.name,
                    dims[a.source],
                    dims[a.target],
                    algebra.modulus()
                )));
            }
        }
        let rep = Rep { algebra, dims, maps };
        if let Some(index) = rep.violated_relation() {
            return Err(ModuleError::RelationViolated { index });
        }
        Ok(rep)
    }

    /// Internal constructor; relation check only in debug builds.
    pub(crate) fn from_parts(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Rep {
        let rep = Rep { algebra, dims, maps };
        debug_assert!(rep.violated_relation().is_none(), "constructed rep violates a relation");
        rep
    }

    fn violated_relation(&self) -> Option<usize> {
        let p = self.algebra.modulus();
        let q = self.algebra.quiver();
        self.algebra.relations().iter().position(|r| {
            let (s, t) = (r.source(q), r.target(q));
            let mut acc = Mat::zeros(self.dims[s], self.dims[t], p);
            for (c, arrows) in &r.terms {
                acc = acc.add(&self.path_matrix(s, arrows).scale(*c));
            }
            !acc.is_zero()
        })
    }

    /// Matrix of the path `arrows` starting at `source`.
    pub fn path_matrix(&self, source: usize, arrows: &[usize]) -> Mat {
        let mut m = Mat::identity(self.dims[source], self.algebra.modulus());
        for &a in arrows {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Rep {
        let p = algebra.modulus();
        let n = algebra.vertex_count();
        let maps = algebra.quiver().arrows().iter().map(|_| Mat::zeros(0, 0, p)).collect();
        Rep::from_parts(algebra.clone(), vec![0; n], maps)
    }

    /// The simple module `S(i)` (0-based vertex).
    pub fn simple(algebra: &Arc<Algebra>, i: usize) -> Rep {
        assert!(i < algebra.vertex_count(), "vertex out of range");
        let p = algebra.modulus();
        let mut dims = vec![0; algebra.vertex_count()];
        dims[i] = 1;
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Mat::zeros(dims[a.source], dims[a.target], p))
            .collect();
        Rep::from_parts(algebra.clone(), dims, maps)
    }

    /// The indecomposable projective `P(i) = e_i Λ` (0-based vertex).
    ///
    /// Its basis at vertex `v` is the basis paths from `i` to `v`, in basis order.
    pub fn projective(algebra: &Arc<Algebra>, i: usize) -> Rep {
        assert!(i < algebra.vertex_count(), "vertex out of range");
        let p = algebra.modulus();
        let n = algebra.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| algebra.paths_between(i, v).len()).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let rows = algebra.paths_between(i, a.source);
                let cols = algebra.paths_between(i, a.target);
                let mut m = Mat::zeros(rows.len(), cols.len(), p);
                for (r, &b) in rows.iter().enumerate() {
                    for &(k, c) in algebra.act_arrow(b, id) {
                        let col = cols.binary_search(&k).expect("normal form stays in the block");
                        m.set(r, col, c);
                    }
                }
                m
            })
            .collect();
        Rep::from_parts(algebra.clone(), dims, maps)
    }

    /// The regular module `Λ_Λ = P(1) ⊕ ... ⊕ P(n)`.
    pub fn regular(algebra: &Arc<Algebra>) -> Rep {
        let parts: Vec<Rep> = (0..algebra.vertex_count()).map(|i| Rep::projective(algebra, i)).collect();
        Rep::direct_sum_all(algebra, &parts)
    }

    /// `Λ/rad Λ = S(1) ⊕ ... ⊕ S(n)`.
    pub fn semisimple_top(algebra: &Arc<Algebra>) -> Rep {
        let parts: Vec<Rep> = (0..algebra.vertex_count()).map(|i| Rep::simple(algebra, i)).collect();
        Rep::direct_sum_all(algebra, &parts)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn modulus(&self) -> u32 {
        self.algebra.modulus()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn same_algebra(&self, other: &Rep) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
    }

    /// Vertices with nonzero dimension.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        assert!(self.same_algebra(other), "direct sum across algebras");
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect();
        Rep::from_parts(self.algebra.clone(), dims, maps)
    }

    pub fn direct_sum_all(algebra: &Arc<Algebra>, parts: &[Rep]) -> Rep {
        parts.iter().fold(Rep::zero(algebra), |acc, r| acc.direct_sum(r))
    }

    /// `rad M`: at each vertex, the span of all incoming arrow images.
    pub fn radical(&self) -> SubRep {
        let p = self.modulus();
        let q = self.algebra.quiver();
        let bases = (0..self.dims.len())
            .map(|v| {
                let mut stacked = Mat::zeros(0, self.dims[v], p);
                for (id, a) in q.arrows().iter().enumerate() {
                    if a.target == v {
                        stacked = stacked.vstack(&self.maps[id]);
                    }
                }
                stacked.row_space()
            })
            .collect();
        SubRep { bases }
    }

    /// Smallest subrepresentation containing the given per-vertex rows.
    pub fn generated(&self, seeds: Vec<Mat>) -> SubRep {
        assert_eq!(seeds.len(), self.dims.len());
        let q = self.algebra.quiver();
        let mut bases: Vec<Mat> = seeds.iter().map(Mat::row_space).collect();
        let mut dirty: Vec<bool> = bases.iter().map(|b| b.rows() > 0).collect();
        while let Some(u) = dirty.iter().position(|&d| d) {
            dirty[u] = false;
            for (id, a) in q.arrows().iter().enumerate() {
                if a.source != u || bases[u].rows() == 0 {
                    continue;
                }
                let img = bases[u].mul(&self.maps[id]);
                let merged = bases[a.target].vstack(&img).row_space();
                if merged.rows() > bases[a.target].rows() {
                    bases[a.target] = merged;
                    dirty[a.target] = true;
                }
            }
        }
        SubRep { bases }
    }

    /// Validates a family of per-vertex row spans as a subrepresentation.
    pub fn subrep(&self, bases: Vec<Mat>) -> Result<SubRep, ModuleError> {
        if bases.len() != self.dims.len() {
            return Err(ModuleError::Shape("one basis per vertex required".into()));
        }
        for (v, b) in bases.iter().enumerate() {
            if b.cols() != self.dims[v] {
                return Err(ModuleError::Shape(format!("basis at vertex {} has wrong width", v + 1)));
            }
        }
        let sub = SubRep {
            bases: bases.iter().map(Mat::row_space).collect(),
        };
        if !self.is_invariant(&sub) {
            return Err(ModuleError::NotInvariant);
        }
        Ok(sub)
    }

    pub fn is_invariant(&self, sub: &SubRep) -> bool {
        self.algebra.quiver().arrows().iter().enumerate().all(|(id, a)| {
            let img = sub.bases[a.source].mul(&self.maps[id]);
            let target = &sub.bases[a.target];
            target.vstack(&img).rank() == target.rows()
        })
    }

    /// The subrepresentation as a module in its own right, with its inclusion.
    pub fn sub_as_rep(&self, sub: &SubRep) -> (Rep, RepMap) {
        let p = self.modulus();
        let q = self.algebra.quiver();
        let dims: Vec<usize> = sub.bases.iter().map(Mat::rows).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let img = sub.bases[a.source].mul(&self.maps[id]);
                if dims[a.source] == 0 || dims[a.target] == 0 {
                    return Mat::zeros(dims[a.source], dims[a.target], p);
                }
                express_in_rows(&sub.bases[a.target], &img).expect("subrepresentation is invariant")
            })
            .collect();
        let rep = Rep::from_parts(self.algebra.clone(), dims, maps);
        let inclusion = RepMap::new(sub.bases.clone());
        (rep, inclusion)
    }

    /// `M / N` with the canonical projection. Quotient coordinates use the
    /// standard basis vectors completing a basis of `N` (first ones first).
    pub fn quotient(&self, sub: &SubRep) -> (Rep, RepMap) {
        let (q, proj, _) = self.quotient_with_section(sub);
        (q, proj)
    }

    /// Like [`Rep::quotient`], also returning the linear (not module) section
    /// `M/N -> M` onto the chosen complement.
    pub fn quotient_with_section(&self, sub: &SubRep) -> (Rep, RepMap, Vec<Mat>) {
        let p = self.modulus();
        let q = self.algebra.quiver();
        let n = self.dims.len();
        let mut complements = Vec::with_capacity(n);
        let mut projections = Vec::with_capacity(n);
        for v in 0..n {
            let s = Subspace::span(&sub.bases[v]);
            let c = s.complement_basis();
            // [S; C] is invertible; the projection keeps the C-coordinates.
            let full = sub.bases[v].vstack(&c);
            let inv = full.inverse().expect("basis plus complement is invertible");
            projections.push(inv.col_range(sub.bases[v].rows(), self.dims[v]));
            complements.push(c);
        }
        let dims: Vec<usize> = complements.iter().map(Mat::rows).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                if dims[a.source] == 0 || dims[a.target] == 0 {
                    return Mat::zeros(dims[a.source], dims[a.target], p);
                }
                complements[a.source].mul(&self.maps[id]).mul(&projections[a.target])
            })
            .collect();
        (Rep::from_parts(self.algebra.clone(), dims, maps), RepMap::new(projections), complements)
    }

    /// `top M = M / rad M`.
    pub fn top(&self) -> Rep {
        self.quotient(&self.radical()).0
    }

    /// Per-vertex dimensions of `top M`.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical();
        self.dims.iter().zip(&rad.bases).map(|(d, b)| d - b.rows()).collect()
    }

    /// `soc M`: at each vertex, the common kernel of all outgoing arrows.
    pub fn socle_dims(&self) -> Vec<usize> {
        let p = self.modulus();
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|v| {
                let mut out = Mat::zeros(self.dims[v], 0, p);
                for (id, a) in q.arrows().iter().enumerate() {
                    if a.source == v {
                        out = out.hstack(&self.maps[id]);
                    }
                }
                self.dims[v] - out.rank()
            })
            .collect()
    }

    /// Dimension vectors of `M ⊇ rad M ⊇ rad² M ⊇ ... ⊇ 0` (the final zero omitted).
    pub fn radical_series_dims(&self) -> Vec<Vec<usize>> {
        let q = self.algebra.quiver();
        let mut layer: Vec<Mat> = self.dims.iter().map(|&d| Mat::identity(d, self.modulus())).collect();
        let mut out = Vec::new();
        while layer.iter().any(|b| b.rows() > 0) {
            out.push(layer.iter().map(Mat::rows).collect());
            let mut next: Vec<Mat> = self.dims.iter().map(|&d| Mat::zeros(0, d, self.modulus())).collect();
            for (id, a) in q.arrows().iter().enumerate() {
                next[a.target] = next[a.target].vstack(&layer[a.source].mul(&self.maps[id]));
            }
            layer = next.iter().map(Mat::row_space).collect();
        }
        out
    }

    /// Least `i` with `rad^i M = 0`.
    pub fn loewy_length(&self) -> usize {
        self.radical_series_dims().len()
    }

    /// `D M = Hom_k(M, k)` as a right module over the opposite algebra.
    pub fn dual(&self) -> Rep {
        let op = self.algebra.opposite();
        let maps = self.maps.iter().map(Mat::transpose).collect();
        Rep::from_parts(op, self.dims.clone(), maps)
    }

}

impl SubRep {
    pub fn zero(parent: &Rep) -> SubRep {
        SubRep {
            bases: parent.dims.iter().map(|&d| Mat::zeros(0, d, parent.modulus())).collect(),
        }
    }

    pub fn full(parent: &Rep) -> SubRep {
        SubRep {
            bases: parent.dims.iter().map(|&d| Mat::identity(d, parent.modulus())).collect(),
        }
    }

    pub fn bases(&self) -> &[Mat] {
        &self.bases
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Mat::rows).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.bases.iter().map(Mat::rows).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn contains(&self, other: &SubRep) -> bool {
        self.bases
            .iter()
            .zip(&other.bases)
            .all(|(a, b)| a.vstack(b).rank() == a.rows())
    }
}
