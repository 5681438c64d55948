use std::fmt;

use super::fp::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod, Fp};
use super::LinalgError;

/// Dense row-major matrix over GF(p).
///
/// `0 x n` and `n x 0` shapes are legal and act as zero maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>,
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Mat,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        Mat {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Mat::zeros(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds from signed rows, reducing every entry mod `p`.
    pub fn from_rows(rows: &[Vec<i64>], p: u32) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Mat::zeros(r, c, p);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = super::fp::reduce_i64(x, p);
            }
        }
        m
    }

    /// Builds from already reduced entries.
    pub fn from_vec(rows: usize, cols: usize, p: u32, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < p));
        Mat { rows, cols, p, data }
    }

    /// Stacks row vectors of a common length `cols`.
    pub fn from_row_vecs(row_vecs: &[Vec<u32>], cols: usize, p: u32) -> Self {
        let mut data = Vec::with_capacity(row_vecs.len() * cols);
        for r in row_vecs {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Mat {
            rows: row_vecs.len(),
            cols,
            p,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn entry(&self, r: usize, c: usize) -> Fp {
        Fp::new(self.get(r, c) as i64, self.p)
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.p);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn try_mul(&self, rhs: &Mat) -> Result<Mat, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let p = self.p;
        let n = rhs.cols;
        let mut out = vec![0u64; self.rows * n];
        // Accumulate in u64 and reduce lazily; p < 2^31 so each product < 2^62.
        for i in 0..self.rows {
            let acc = &mut out[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &rhs.data[k * n..(k + 1) * n];
                for (o, &b) in acc.iter_mut().zip(brow) {
                    *o = (*o + a as u64 * b as u64) % p as u64;
                }
            }
        }
        Ok(Mat {
            rows: self.rows,
            cols: n,
            p,
            data: out.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Panics on shape mismatch; use [`Mat::try_mul`] for checked input.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let p = self.p;
        Mat {
            rows: self.rows,
            cols: self.cols,
            p,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| add_mod(a, b, p))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let p = self.p;
        Mat {
            rows: self.rows,
            cols: self.cols,
            p,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| sub_mod(a, b, p))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let p = self.p;
        Mat {
            rows: self.rows,
            cols: self.cols,
            p,
            data: self.data.iter().map(|&a| mul_mod(a, c, p)).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        let p = self.p;
        Mat {
            rows: self.rows,
            cols: self.cols,
            p,
            data: self.data.iter().map(|&a| neg_mod(a, p)).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let p = self.p as u64;
        let mut out = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(k)) {
                *o = (*o + a as u64 * b as u64) % p;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.rows, rhs.rows);
        let cols = self.cols + rhs.cols;
        let mut m = Mat::zeros(self.rows, cols, self.p);
        for r in 0..self.rows {
            m.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            m.row_mut(r)[self.cols..].copy_from_slice(rhs.row(r));
        }
        m
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Mat {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    /// Block diagonal `diag(self, rhs)`.
    pub fn block_diag(&self, rhs: &Mat) -> Mat {
        let mut m = Mat::zeros(self.rows + rhs.rows, self.cols + rhs.cols, self.p);
        for r in 0..self.rows {
            m.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
        }
        for r in 0..rhs.rows {
            m.row_mut(self.rows + r)[self.cols..].copy_from_slice(rhs.row(r));
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat {
            rows: idx.len(),
            cols: self.cols,
            p: self.p,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.rows, idx.len(), self.p);
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    /// Columns `start..end`.
    pub fn col_range(&self, start: usize, end: usize) -> Mat {
        let idx: Vec<usize> = (start..end).collect();
        self.select_cols(&idx)
    }

    /// Reduced row-echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(found) = (pr..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if found != pr {
                for j in 0..cols {
                    self.data.swap(found * cols + j, pr * cols + j);
                }
            }
            let inv = inv_mod(self.data[pr * cols + c], p);
            if inv != 1 {
                for j in c..cols {
                    let x = &mut self.data[pr * cols + j];
                    *x = mul_mod(*x, inv, p);
                }
            }
            let (before, rest) = self.data.split_at_mut(pr * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let f = row[c];
                if f != 0 {
                    let nf = neg_mod(f, p) as u64;
                    for j in c..cols {
                        row[j] = ((row[j] as u64 + nf * prow[j] as u64) % p as u64) as u32;
                    }
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : self * v^T = 0}`, one vector per row.
    pub fn kernel_basis(&self) -> Mat {
        let Rref { matrix, pivots, rank } = self.rref();
        let n = self.cols;
        let p = self.p;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut k = Mat::zeros(free.len(), n, p);
        for (i, &f) in free.iter().enumerate() {
            k.data[i * n + f] = 1 % p;
            for (r, &pc) in pivots.iter().enumerate().take(rank) {
                k.data[i * n + pc] = neg_mod(matrix.get(r, f), p);
            }
        }
        k
    }

    /// Basis of `{x : x * self = 0}`, one vector per row.
    pub fn left_kernel(&self) -> Mat {
        self.transpose().kernel_basis()
    }

    /// Row-space basis (the nonzero rows of the RREF).
    pub fn row_space(&self) -> Mat {
        let r = self.rref();
        let idx: Vec<usize> = (0..r.rank).collect();
        r.matrix.select_rows(&idx)
    }

    /// Square matrix inverse; `None` if singular or not square.
    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n, self.p)).rref();
        // [A | I] always has rank n; A is invertible iff every pivot lands in A.
        if n > 0 && aug.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.matrix.col_range(n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over GF({})", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Solves `a * x = b`. Any solution is returned when the system is consistent.
pub fn solve(a: &Mat, b: &Mat) -> Result<Option<Mat>, LinalgError> {
    if a.rows != b.rows {
        return Err(LinalgError::DimensionMismatch {
            op: "solve",
            left: (a.rows, a.cols),
            right: (b.rows, b.cols),
        });
    }
    let n = a.cols;
    let aug = a.hstack(b).rref();
    if aug.pivots.iter().any(|&c| c >= n) {
        return Ok(None);
    }
    let mut x = Mat::zeros(n, b.cols, a.p);
    for (r, &pc) in aug.pivots.iter().enumerate() {
        x.row_mut(pc).copy_from_slice(&aug.matrix.row(r)[n..]);
    }
    Ok(Some(x))
}

/// Coordinates `c` with `c * basis = rows`, for `basis` with independent rows.
pub fn express_in_rows(basis: &Mat, rows: &Mat) -> Option<Mat> {
    if basis.rows == 0 {
        return rows.is_zero().then(|| Mat::zeros(rows.rows, 0, rows.p));
    }
    solve(&basis.transpose(), &rows.transpose())
        .ok()
        .flatten()
        .map(|x| x.transpose())
}
