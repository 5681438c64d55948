//! Finite-dimensional bound quiver algebras `kQ/I` over GF(p).
//!
//! The ideal is closed degree by degree inside the space of paths of length
//! at most `L`, for increasing `L`, until every path of length `L` is
//! certified to lie in the ideal. The basis is the set of non-leading paths
//! under length-then-lexicographic order, which is closed under taking
//! prefixes and subpaths.

pub mod format;
mod quiver;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::linalg::{add_mod, is_valid_modulus, mul_mod, neg_mod, Mat};

pub use quiver::{Arrow, Path, PathDisplay, Quiver, Relation};

/// Default truncation degree for the ideal closure.
pub const DEFAULT_MAX_DEGREE: usize = 30;

/// Hard ceiling on the number of paths enumerated while certifying admissibility.
const PATH_LIMIT: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("{0} is not a prime in [2, 2^31)")]
    InvalidModulus(u64),
    #[error("max_degree must be at least 1")]
    InvalidMaxDegree,
    #[error("admissibility not certified up to path length {max_degree}: {detail}")]
    AdmissibilityNotCertified { max_degree: usize, detail: String },
}

/// Sparse vector over the algebra basis: `(basis index, coefficient)`.
pub type Sparse = Vec<(usize, u32)>;

/// A bound quiver algebra with an explicit path basis.
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    p: u32,
    max_degree: usize,
    rad_degree: usize,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Normal forms of every path of length at most `rad_degree`.
    normal_forms: HashMap<Path, Sparse>,
    /// For a non-trivial basis path: its prefix (also a basis path) and last arrow.
    parent: Vec<Option<(usize, usize)>>,
    /// `arrow_action[b][a]`: normal form of `b * a` (empty when not composable or zero).
    arrow_action: Vec<Vec<Sparse>>,
    by_source_target: Vec<Vec<Vec<usize>>>,
    opposite: OnceLock<Arc<Algebra>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.p)
            .field("vertices", &self.quiver.vertex_count())
            .field("arrows", &self.quiver.arrows().len())
            .field("dim", &self.dim())
            .field("rad_degree", &self.rad_degree)
            .finish()
    }
}

fn sparse_push(v: &mut Sparse, idx: usize, c: u32, p: u32) {
    if c == 0 {
        return;
    }
    if let Some(slot) = v.iter_mut().find(|(i, _)| *i == idx) {
        slot.1 = add_mod(slot.1, c, p);
    } else {
        v.push((idx, c));
    }
}

impl Algebra {
    /// Builds `kQ/I` where `I` is generated by `relations`.
    ///
    /// Fails with [`AlgebraError::AdmissibilityNotCertified`] when no `L <= max_degree`
    /// has every path of length `L` inside the ideal.
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation>,
        p: u32,
        max_degree: usize,
    ) -> Result<Algebra, AlgebraError> {
        if !is_valid_modulus(p as u64) {
            return Err(AlgebraError::InvalidModulus(p as u64));
        }
        if max_degree == 0 {
            return Err(AlgebraError::InvalidMaxDegree);
        }
        for r in &relations {
            // Re-validate in case the caller assembled terms by hand.
            Relation::new(
                r.terms.iter().map(|(c, a)| (*c as i64, a.clone())).collect(),
                &quiver,
                p,
            )?;
        }

        let n = quiver.vertex_count();
        let mut by_len: Vec<Vec<Path>> = vec![(0..n).map(Path::trivial).collect()];
        let mut total = n;
        for len in 1..=max_degree {
            let next: Vec<Path> = by_len[len - 1]
                .iter()
                .flat_map(|path| {
                    let t = path.target(&quiver);
                    let q = &quiver;
                    q.arrows()
                        .iter()
                        .enumerate()
                        .filter(move |(_, a)| a.source == t)
                        .map(move |(id, _)| {
                            let mut arrows = path.arrows.clone();
                            arrows.push(id);
                            Path {
                                source: path.source,
                                arrows,
                            }
                        })
                })
                .collect();
            total += next.len();
            if total > PATH_LIMIT {
                return Err(AlgebraError::AdmissibilityNotCertified {
                    max_degree,
                    detail: format!("more than {PATH_LIMIT} paths of length <= {len}"),
                });
            }
            by_len.push(next);
            if let Some(reduced) = Reduction::attempt(&quiver, &relations, p, &by_len, len) {
                return Ok(Algebra::assemble(quiver, relations, p, max_degree, len, reduced));
            }
        }
        Err(AlgebraError::AdmissibilityNotCertified {
            max_degree,
            detail: "some path of every length up to max_degree survives the relations".into(),
        })
    }

    fn assemble(
        quiver: Quiver,
        relations: Vec<Relation>,
        p: u32,
        max_degree: usize,
        rad_degree: usize,
        red: Reduction,
    ) -> Algebra {
        let mut basis: Vec<Path> = red
            .columns
            .iter()
            .enumerate()
            .filter(|(c, path)| !red.is_pivot[*c] && path.len() < rad_degree)
            .map(|(_, path)| path.clone())
            .collect();
        basis.sort();
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();

        let mut normal_forms = HashMap::with_capacity(red.columns.len());
        for (c, path) in red.columns.iter().enumerate() {
            let nf: Sparse = if let Some(&i) = index.get(path) {
                vec![(i, 1)]
            } else if let Some(row) = red.pivot_row[c] {
                // path = -(non-pivot tail of its RREF row) modulo the ideal
                red.matrix
                    .row(row)
                    .iter()
                    .enumerate()
                    .filter(|&(cc, &x)| x != 0 && cc != c)
                    .filter_map(|(cc, &x)| index.get(&red.columns[cc]).map(|&i| (i, neg_mod(x, p))))
                    .collect()
            } else {
                // non-pivot path of length rad_degree cannot occur after certification
                Vec::new()
            };
            normal_forms.insert(path.clone(), nf);
        }

        let parent = basis
            .iter()
            .map(|b| {
                if b.is_trivial() {
                    None
                } else {
                    let prefix = Path {
                        source: b.source,
                        arrows: b.arrows[..b.len() - 1].to_vec(),
                    };
                    let pi = *index.get(&prefix).expect("basis is prefix-closed");
                    Some((pi, *b.arrows.last().unwrap()))
                }
            })
            .collect();

        let arrow_action = basis
            .iter()
            .map(|b| {
                let t = b.target(&quiver);
                quiver
                    .arrows()
                    .iter()
                    .enumerate()
                    .map(|(id, a)| {
                        if a.source != t {
                            return Vec::new();
                        }
                        let mut arrows = b.arrows.clone();
                        arrows.push(id);
                        let ext = Path {
                            source: b.source,
                            arrows,
                        };
                        normal_forms.get(&ext).cloned().unwrap_or_default()
                    })
                    .collect()
            })
            .collect();

        let n = quiver.vertex_count();
        let mut by_source_target = vec![vec![Vec::new(); n]; n];
        for (i, b) in basis.iter().enumerate() {
            by_source_target[b.source][b.target(&quiver)].push(i);
        }

        Algebra {
            quiver,
            relations,
            p,
            max_degree,
            rad_degree,
            basis,
            index,
            normal_forms,
            parent,
            arrow_action,
            by_source_target,
            opposite: OnceLock::new(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, path: &Path) -> Option<usize> {
        self.index.get(path).copied()
    }

    /// Least `L` with `rad^L = 0`.
    pub fn rad_degree(&self) -> usize {
        self.rad_degree
    }

    /// Loewy length of the regular module, equal to [`Algebra::rad_degree`].
    pub fn loewy_length(&self) -> usize {
        self.rad_degree
    }

    /// Basis indices of paths from `source` to `target`.
    pub fn paths_between(&self, source: usize, target: usize) -> &[usize] {
        &self.by_source_target[source][target]
    }

    /// Basis indices of paths starting at `source`, in basis order.
    pub fn paths_from(&self, source: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].source == source).collect()
    }

    pub fn basis_target(&self, i: usize) -> usize {
        self.basis[i].target(&self.quiver)
    }

    pub(crate) fn parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }

    /// Normal form of `basis[b] * arrow`.
    pub fn act_arrow(&self, b: usize, arrow: usize) -> &Sparse {
        &self.arrow_action[b][arrow]
    }

    /// Normal form of an arbitrary path; zero beyond the radical degree.
    pub fn normal_form(&self, path: &Path) -> Sparse {
        if path.len() >= self.rad_degree {
            return Vec::new();
        }
        self.normal_forms.get(path).cloned().unwrap_or_default()
    }

    /// Product of two basis elements.
    pub fn basis_product(&self, i: usize, j: usize) -> Sparse {
        match self.basis[i].concat(&self.basis[j], &self.quiver) {
            Some(path) => self.normal_form(&path),
            None => Vec::new(),
        }
    }

    /// Product of two dense element vectors.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = mul_mod(a, b, p);
                for (k, c) in self.basis_product(i, j) {
                    out[k] = add_mod(out[k], mul_mod(ab, c, p), p);
                }
            }
        }
        out
    }

    /// `e_1 + ... + e_n` as a dense vector.
    pub fn identity_element(&self) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        for i in 0..self.vertex_count() {
            v[self.index[&Path::trivial(i)]] = 1;
        }
        v
    }

    /// Basis vector of a basis element as a dense vector.
    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// The opposite algebra (arrows and relation paths reversed), cached.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let rels = self.relations.iter().map(Relation::reversed).collect();
                let op = Algebra::build(self.quiver.opposite(), rels, self.p, self.max_degree)
                    .expect("the opposite of a certified algebra is certified at the same degree");
                Arc::new(op)
            })
            .clone()
    }
}

/// Row-reduced ideal inside the span of all paths of length `<= len`.
struct Reduction {
    /// Paths in descending order, so leading terms are the largest paths.
    columns: Vec<Path>,
    matrix: Mat,
    is_pivot: Vec<bool>,
    pivot_row: Vec<Option<usize>>,
}

impl Reduction {
    /// Closes the relations inside paths of length `<= len` and returns the
    /// reduction if every path of length exactly `len` lies in the ideal.
    fn attempt(quiver: &Quiver, relations: &[Relation], p: u32, by_len: &[Vec<Path>], len: usize) -> Option<Self> {
        let mut columns: Vec<Path> = by_len[..=len].iter().flatten().cloned().collect();
        columns.sort_by(|a, b| b.cmp(a));
        let col_of: HashMap<&Path, usize> = columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let n = quiver.vertex_count();

        let mut ending_at: Vec<Vec<&Path>> = vec![Vec::new(); n];
        let mut starting_at: Vec<Vec<&Path>> = vec![Vec::new(); n];
        for path in by_len[..=len].iter().flatten() {
            ending_at[path.target(quiver)].push(path);
            starting_at[path.source].push(path);
        }

        let mut rows: Vec<Sparse> = Vec::new();
        for r in relations {
            let m = r.min_len();
            if m > len {
                continue;
            }
            let (s, t) = (r.source(quiver), r.target(quiver));
            for u in &ending_at[s] {
                if u.len() + m > len {
                    continue;
                }
                for w in &starting_at[t] {
                    if u.len() + w.len() + m > len {
                        continue;
                    }
                    let mut row = Sparse::new();
                    for (c, arrows) in &r.terms {
                        let l = u.len() + arrows.len() + w.len();
                        if l > len {
                            continue;
                        }
                        let mut full = u.arrows.clone();
                        full.extend_from_slice(arrows);
                        full.extend_from_slice(&w.arrows);
                        let path = Path {
                            source: u.source,
                            arrows: full,
                        };
                        sparse_push(&mut row, col_of[&path], *c, p);
                    }
                    row.retain(|(_, c)| *c != 0);
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        rows.sort();
        rows.dedup();

        let mut matrix = Mat::zeros(rows.len(), columns.len(), p);
        for (i, row) in rows.iter().enumerate() {
            for &(c, x) in row {
                matrix.set(i, c, x);
            }
        }
        let pivots = matrix.rref_in_place();
        let mut is_pivot = vec![false; columns.len()];
        let mut pivot_row = vec![None; columns.len()];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = true;
            pivot_row[c] = Some(r);
        }
        // Top-degree columns come first; each must be a pivot whose row is a unit vector.
        for (c, path) in columns.iter().enumerate() {
            if path.len() < len {
                break;
            }
            let r = pivot_row[c]?;
            if matrix.row(r).iter().enumerate().any(|(cc, &x)| cc != c && x != 0) {
                return None;
            }
        }
        Some(Reduction {
            columns,
            matrix,
            is_pivot,
            pivot_row,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Algebra {
        let q = Quiver::from_labels(3, &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        Algebra::build(q, vec![], 101, DEFAULT_MAX_DEGREE).unwrap()
    }

    #[test]
    fn single_vertex() {
        let q = Quiver::from_labels(1, &[]).unwrap();
        let a = Algebra::build(q, vec![], 101, DEFAULT_MAX_DEGREE).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.rad_degree(), 1);
        assert_eq!(a.loewy_length(), 1);
    }

    #[test]
    fn linear_a3() {
        let a = a3();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.rad_degree(), 3);
        let op = a.opposite();
        assert_eq!(op.dim(), 6);
        assert_eq!(op.rad_degree(), 3);
        assert_eq!(op.quiver().arrow(0).source, 1);
    }

    #[test]
    fn dual_numbers() {
        let q = Quiver::from_labels(1, &[("x", 1, 1)]).unwrap();
        let r = Relation::new(vec![(1, vec![0, 0])], &q, 101).unwrap();
        let a = Algebra::build(q, vec![r], 101, DEFAULT_MAX_DEGREE).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.rad_degree(), 2);
    }

    #[test]
    fn free_loop_is_not_certified() {
        let q = Quiver::from_labels(1, &[("x", 1, 1)]).unwrap();
        let err = Algebra::build(q, vec![], 101, 8).unwrap_err();
        assert!(matches!(err, AlgebraError::AdmissibilityNotCertified { max_degree: 8, .. }));
    }

    #[test]
    fn commutative_square() {
        // 1 -a-> 2 -b-> 4, 1 -c-> 3 -d-> 4 with ab = cd
        let q = Quiver::from_labels(4, &[("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)]).unwrap();
        let r = Relation::new(vec![(1, vec![0, 1]), (-1, vec![2, 3])], &q, 7).unwrap();
        let a = Algebra::build(q, vec![r], 7, DEFAULT_MAX_DEGREE).unwrap();
        assert_eq!(a.dim(), 4 + 4 + 1);
        // the larger path c*d reduces to a*b
        let cd = Path { source: 0, arrows: vec![2, 3] };
        let ab = Path { source: 0, arrows: vec![0, 1] };
        assert_eq!(a.normal_form(&cd), vec![(a.basis_index(&ab).unwrap(), 1)]);
    }

    #[test]
    fn relation_validation() {
        let q = Quiver::from_labels(3, &[("a", 1, 2), ("b", 2, 3), ("c", 1, 3)]).unwrap();
        assert!(Relation::new(vec![(1, vec![1, 0])], &q, 5).is_err());
        assert!(Relation::new(vec![(1, vec![2])], &q, 5).is_err());
        assert!(Relation::new(vec![(5, vec![0, 1])], &q, 5).is_err());
        assert!(Quiver::from_labels(2, &[("a", 1, 2), ("a", 2, 1)]).is_err());
        assert!(Quiver::from_labels(2, &[("a", 1, 3)]).is_err());
    }

    #[test]
    fn identity_and_associativity() {
        let a = a3();
        let one = a.identity_element();
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            assert_eq!(a.mul(&one, &e), e);
            assert_eq!(a.mul(&e, &one), e);
        }
    }
}
