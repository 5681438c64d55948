use super::mat::{express_in_rows, Mat};
use super::LinalgError;

/// A row-span subspace of `GF(p)^ambient`, stored by an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize, p: u32) -> Self {
        Subspace {
            basis: Mat::zeros(0, ambient, p),
        }
    }

    pub fn full(ambient: usize, p: u32) -> Self {
        Subspace {
            basis: Mat::identity(ambient, p),
        }
    }

    /// Span of the rows of `m`.
    pub fn span(m: &Mat) -> Self {
        Subspace {
            basis: m.row_space(),
        }
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn into_basis(self) -> Mat {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient() != other.ambient() {
            return Err(LinalgError::AmbientMismatch(self.ambient(), other.ambient()));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(Subspace::span(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        // (a, b) with a*U = b*W, i.e. the left kernel of [U; -W].
        let stacked = self.basis.vstack(&other.basis.neg());
        let k = stacked.left_kernel();
        let a = k.col_range(0, self.dim());
        Ok(Subspace::span(&a.mul(&self.basis)))
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient() {
            return Err(LinalgError::AmbientMismatch(self.ambient(), v.len()));
        }
        let row = Mat::from_vec(1, v.len(), self.basis.modulus(), v.to_vec());
        Ok(self.basis.vstack(&row).rank() == self.dim())
    }

    pub fn contains_space(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(self.basis.vstack(&other.basis).rank() == self.dim())
    }

    /// Vectors from the standard basis completing this subspace to the ambient space.
    pub fn complement_basis(&self) -> Mat {
        self.extend_within(&Mat::identity(self.ambient(), self.basis.modulus()))
    }

    /// Rows of `candidates` (taken greedily in order) that extend the span of
    /// this subspace to the span of `self + candidates`.
    pub fn extend_within(&self, candidates: &Mat) -> Mat {
        let p = self.basis.modulus();
        let mut acc = self.basis.clone();
        let mut picked = Vec::new();
        let mut rank = acc.rows();
        for r in 0..candidates.rows() {
            let trial = acc.vstack(&candidates.select_rows(&[r]));
            let tr = trial.rank();
            if tr > rank {
                rank = tr;
                acc = trial.row_space();
                picked.push(candidates.row(r).to_vec());
            }
        }
        Mat::from_row_vecs(&picked, candidates.cols(), p)
    }

    /// Coordinates of `rows` with respect to the stored basis.
    pub fn coordinates(&self, rows: &Mat) -> Option<Mat> {
        express_in_rows(&self.basis, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_spaces() {
        let u = Subspace::span(&Mat::from_rows(&[vec![1, 2, 0], vec![0, 1, 1]], 3));
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersection(&u).unwrap(), u);
    }

    #[test]
    fn coordinate_axes() {
        let u = Subspace::span(&Mat::from_rows(&[vec![1, 0]], 3));
        let w = Subspace::span(&Mat::from_rows(&[vec![0, 1]], 3));
        assert_eq!(u.sum(&w).unwrap().dim(), 2);
        assert_eq!(u.intersection(&w).unwrap().dim(), 0);
        assert!(u.contains(&[2, 0]).unwrap());
        assert!(!u.contains(&[1, 1]).unwrap());
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let u = Subspace::zero(2, 3);
        let w = Subspace::zero(3, 3);
        assert!(u.sum(&w).is_err());
        assert!(u.intersection(&w).is_err());
        assert!(u.contains(&[0, 0, 0]).is_err());
    }

    #[test]
    fn complement_completes_basis() {
        let u = Subspace::span(&Mat::from_rows(&[vec![1, 1, 0, 0], vec![0, 0, 1, 1]], 7));
        let c = u.complement_basis();
        assert_eq!(c.rows(), 2);
        assert_eq!(u.basis().vstack(&c).rank(), 4);
    }
}
