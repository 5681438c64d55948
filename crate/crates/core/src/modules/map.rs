use super::{Rep, SubRep};
use crate::linalg::{express_in_rows, Mat};

/// A module homomorphism, one block per vertex (`dims_src[v] x dims_tgt[v]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMap {
    blocks: Vec<Mat>,
}

impl RepMap {
    pub fn new(blocks: Vec<Mat>) -> Self {
        RepMap { blocks }
    }

    pub fn zero(src: &Rep, tgt: &Rep) -> Self {
        let p = src.modulus();
        RepMap {
            blocks: src.dims().iter().zip(tgt.dims()).map(|(&a, &b)| Mat::zeros(a, b, p)).collect(),
        }
    }

    pub fn identity(m: &Rep) -> Self {
        RepMap {
            blocks: m.dims().iter().map(|&d| Mat::identity(d, m.modulus())).collect(),
        }
    }

    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Mat {
        &self.blocks[v]
    }

    /// `self` then `next`.
    pub fn then(&self, next: &RepMap) -> RepMap {
        RepMap {
            blocks: self.blocks.iter().zip(&next.blocks).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> RepMap {
        RepMap {
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> RepMap {
        RepMap {
            blocks: self.blocks.iter().map(Mat::neg).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Mat::rank).sum()
    }

    /// Checks shapes and `src.arrow * f_target = f_source * tgt.arrow` for every arrow.
    pub fn is_module_map(&self, src: &Rep, tgt: &Rep) -> bool {
        if self.blocks.len() != src.dims().len() {
            return false;
        }
        let shapes_ok = self
            .blocks
            .iter()
            .enumerate()
            .all(|(v, b)| b.rows() == src.dim_at(v) && b.cols() == tgt.dim_at(v));
        shapes_ok
            && src.algebra().quiver().arrows().iter().enumerate().all(|(id, a)| {
                src.map(id).mul(&self.blocks[a.target]) == self.blocks[a.source].mul(tgt.map(id))
            })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(Mat::is_invertible)
    }

    /// Kernel as a subrepresentation of the source.
    pub fn kernel(&self) -> SubRep {
        SubRep {
            bases: self.blocks.iter().map(|b| b.left_kernel().row_space()).collect(),
        }
    }

    /// Image as a subrepresentation of the target.
    pub fn image(&self) -> SubRep {
        SubRep {
            bases: self.blocks.iter().map(Mat::row_space).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    /// `(f, g): A ⊕ B -> C` from `f: A -> C` and `g: B -> C`.
    pub fn stack_sources(&self, other: &RepMap) -> RepMap {
        RepMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.vstack(b)).collect(),
        }
    }

    /// `(f, g): A -> B ⊕ C` from `f: A -> B` and `g: A -> C`.
    pub fn stack_targets(&self, other: &RepMap) -> RepMap {
        RepMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.hstack(b)).collect(),
        }
    }

    /// `f ⊕ g: A ⊕ B -> C ⊕ D`.
    pub fn direct_sum(&self, other: &RepMap) -> RepMap {
        RepMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.block_diag(b)).collect(),
        }
    }

    /// The restriction `N -> N'` of `self: M -> M'` to subrepresentations, in
    /// the coordinates of their bases; `None` if `f(N)` is not inside `N'`.
    pub fn restrict(&self, src: &SubRep, tgt: &SubRep) -> Option<RepMap> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for ((f, s), t) in self.blocks.iter().zip(src.bases()).zip(tgt.bases()) {
            let img = s.mul(f);
            if img.is_zero() {
                blocks.push(Mat::zeros(s.rows(), t.rows(), f.modulus()));
            } else {
                blocks.push(express_in_rows(t, &img)?);
            }
        }
        Some(RepMap { blocks })
    }

    /// The map `M/N -> M'/N'` induced through a section of `M -> M/N` and the
    /// projection `M' -> M'/N'`. Well defined only when `f(N) ⊆ N'`.
    pub fn induced_on_quotients(&self, section: &[Mat], projection: &RepMap) -> RepMap {
        RepMap {
            blocks: self
                .blocks
                .iter()
                .zip(section)
                .zip(&projection.blocks)
                .map(|((f, s), pr)| s.mul(f).mul(pr))
                .collect(),
        }
    }
}
