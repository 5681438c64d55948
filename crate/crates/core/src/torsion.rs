//! The torsion pair `(T_V, F(V))` cut out by a set `V` of simples, and the
//! `t_V`-radical layer length.

use std::fmt;

use thiserror::Error;

use crate::linalg::Mat;
use crate::modules::{Rep, SubRep};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimpleSetError {
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice")]
    Duplicate(usize),
}

/// A set of simple modules, identified with their vertices (0-based internally).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSet {
    member: Vec<bool>,
}

impl SimpleSet {
    pub fn empty(n: usize) -> Self {
        SimpleSet { member: vec![false; n] }
    }

    pub fn all(n: usize) -> Self {
        SimpleSet { member: vec![true; n] }
    }

    /// From 0-based vertices.
    pub fn new(n: usize, vertices: &[usize]) -> Result<Self, SimpleSetError> {
        let mut member = vec![false; n];
        for &v in vertices {
            if v >= n {
                return Err(SimpleSetError::OutOfRange { vertex: v + 1, n });
            }
            if member[v] {
                return Err(SimpleSetError::Duplicate(v + 1));
            }
            member[v] = true;
        }
        Ok(SimpleSet { member })
    }

    /// From 1-based vertex labels, as written in algebra files.
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self, SimpleSetError> {
        let mut zero_based = Vec::with_capacity(labels.len());
        for &l in labels {
            if l == 0 || l > n {
                return Err(SimpleSetError::OutOfRange { vertex: l, n });
            }
            zero_based.push(l - 1);
        }
        SimpleSet::new(n, &zero_based)
    }

    /// Bit `i` of `mask` selects vertex `i`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        SimpleSet {
            member: (0..n).map(|i| i < 64 && mask >> i & 1 == 1).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.member.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.member[v]
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_all(&self) -> bool {
        self.member.iter().all(|&b| b)
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.member.len()).filter(|&v| self.member[v]).collect()
    }

    /// 1-based labels.
    pub fn labels(&self) -> Vec<usize> {
        self.vertices().into_iter().map(|v| v + 1).collect()
    }

    pub fn complement(&self) -> SimpleSet {
        SimpleSet {
            member: self.member.iter().map(|b| !b).collect(),
        }
    }

    pub fn with(&self, v: usize) -> SimpleSet {
        let mut s = self.clone();
        s.member[v] = true;
        s
    }

    pub fn without(&self, v: usize) -> SimpleSet {
        let mut s = self.clone();
        s.member[v] = false;
        s
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

impl fmt::Debug for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleSet{self}")
    }
}

/// `M ∈ F(V)`: every composition factor lies in `V`. Over a basic algebra this
/// is a support condition.
pub fn in_f_of_v(m: &Rep, v: &SimpleSet) -> bool {
    m.dims().iter().enumerate().all(|(j, &d)| d == 0 || v.contains(j))
}

/// `t_V(M)`: the submodule generated by `M_j` for all `j ∉ V`.
pub fn torsion_radical(m: &Rep, v: &SimpleSet) -> SubRep {
    let p = m.modulus();
    let seeds = m
        .dims()
        .iter()
        .enumerate()
        .map(|(j, &d)| if v.contains(j) { Mat::zeros(0, d, p) } else { Mat::identity(d, p) })
        .collect();
    m.generated(seeds)
}

/// `t_V(M)` as a module.
pub fn torsion_part(m: &Rep, v: &SimpleSet) -> Rep {
    m.sub_as_rep(&torsion_radical(m, v)).0
}

/// `q_{t_V}(M) = M / t_V(M)`, always in `F(V)`.
pub fn q_t(m: &Rep, v: &SimpleSet) -> Rep {
    m.quotient(&torsion_radical(m, v)).0
}

/// `F_{t_V}(M) = rad t_V(M)`.
pub fn f_step(m: &Rep, v: &SimpleSet) -> Rep {
    let t = torsion_part(m, v);
    t.sub_as_rep(&t.radical()).0
}

/// The orbit `M, F(M), F²(M), ...` up to the first term with `t_V = 0`.
#[derive(Clone, Debug)]
pub struct LayerProfile {
    pub v: SimpleSet,
    pub sequence: Vec<Rep>,
    /// `ℓℓ^{t_V}(M)`, which is `sequence.len() - 1`.
    pub length: usize,
}

pub fn layer_profile(m: &Rep, v: &SimpleSet) -> LayerProfile {
    let mut sequence = vec![m.clone()];
    loop {
        let cur = sequence.last().unwrap();
        let t = torsion_radical(cur, v);
        if t.is_zero() {
            break;
        }
        let tm = cur.sub_as_rep(&t).0;
        let next = tm.sub_as_rep(&tm.radical()).0;
        debug_assert!(next.total_dim() < cur.total_dim());
        sequence.push(next);
    }
    let length = sequence.len() - 1;
    LayerProfile {
        v: v.clone(),
        sequence,
        length,
    }
}

/// `ℓℓ^{t_V}(M) = min { i ≥ 0 : t_V F^i(M) = 0 }`.
pub fn layer_length(m: &Rep, v: &SimpleSet) -> usize {
    layer_profile(m, v).length
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Quiver, DEFAULT_MAX_DEGREE};
    use std::sync::Arc;

    fn a3() -> Arc<Algebra> {
        let q = Quiver::from_labels(3, &[("a", 1, 2), ("b", 2, 3)]).unwrap();
        Arc::new(Algebra::build(q, vec![], 101, DEFAULT_MAX_DEGREE).unwrap())
    }

    #[test]
    fn simple_set_parsing() {
        let s = SimpleSet::from_labels(5, &[2, 3]).unwrap();
        assert_eq!(s.vertices(), vec![1, 2]);
        assert_eq!(s.to_string(), "{2,3}");
        assert_eq!(s.complement().labels(), vec![1, 4, 5]);
        assert!(matches!(SimpleSet::from_labels(3, &[4]), Err(SimpleSetError::OutOfRange { .. })));
        assert!(matches!(SimpleSet::from_labels(3, &[0]), Err(SimpleSetError::OutOfRange { .. })));
        assert_eq!(SimpleSet::from_labels(3, &[1, 1]), Err(SimpleSetError::Duplicate(1)));
        assert_eq!(SimpleSet::from_mask(3, 0b101).labels(), vec![1, 3]);
    }

    #[test]
    fn extreme_sets() {
        let a = a3();
        let m = Rep::regular(&a);
        let none = SimpleSet::empty(3);
        let all = SimpleSet::all(3);
        assert_eq!(torsion_radical(&m, &none).dims(), m.dims().to_vec());
        assert!(torsion_radical(&m, &all).is_zero());
        assert!(q_t(&m, &none).is_zero());
        assert_eq!(q_t(&m, &all).dims(), m.dims());
        assert_eq!(layer_length(&m, &all), 0);
        assert_eq!(layer_length(&m, &none), m.loewy_length());
        assert_eq!(f_step(&m, &none).dims(), m.radical().dims());
    }

    #[test]
    fn torsion_pair_contract_on_a3() {
        let a = a3();
        let p1 = Rep::projective(&a, 0);
        // V = {2}: t_V(P1) is generated at vertices 1 and 3, i.e. all of P1.
        let v = SimpleSet::from_labels(3, &[2]).unwrap();
        assert_eq!(torsion_radical(&p1, &v).dims(), vec![1, 1, 1]);
        // V = {1}: t_V(P1) = rad P1.
        let v = SimpleSet::from_labels(3, &[1]).unwrap();
        let t = torsion_radical(&p1, &v);
        assert_eq!(t.dims(), vec![0, 1, 1]);
        assert!(in_f_of_v(&q_t(&p1, &v), &v));
        assert_eq!(layer_length(&p1, &v), 2);
    }
}
