//! Bounded chain complexes of representations, with homological indexing:
//! `d_i: X_i -> X_{i-1}`.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::Mat;
use crate::modules::{FreeCover, Rep, RepMap, SubRep};
use crate::torsion::{torsion_radical, SimpleSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("expected {expected} differentials, got {got}")]
    DifferentialCount { expected: usize, got: usize },
    #[error("d_{0} is not a module map between the adjacent terms")]
    NotModuleMap(i64),
    #[error("d_{prev} d_{degree} != 0", prev = .0 - 1, degree = .0)]
    NotAComplex(i64),
    #[error("terms live over different algebras")]
    AlgebraMismatch,
}

/// `X_lo <- X_{lo+1} <- ... <- X_hi`, zero elsewhere.
#[derive(Clone, Debug)]
pub struct Complex {
    algebra: Arc<Algebra>,
    lo: i64,
    terms: Vec<Rep>,
    /// `diffs[k] = d_{lo+k+1}: X_{lo+k+1} -> X_{lo+k}`.
    diffs: Vec<RepMap>,
}

impl Complex {
    /// `terms[k]` sits in degree `lo + k`; `diffs[k]` is `d_{lo+k+1}`.
    pub fn new(algebra: &Arc<Algebra>, lo: i64, terms: Vec<Rep>, diffs: Vec<RepMap>) -> Result<Complex, ComplexError> {
        let expected = terms.len().saturating_sub(1);
        if diffs.len() != expected {
            return Err(ComplexError::DifferentialCount { expected, got: diffs.len() });
        }
        if terms.iter().any(|t| !Arc::ptr_eq(t.algebra(), algebra)) {
            return Err(ComplexError::AlgebraMismatch);
        }
        for (k, d) in diffs.iter().enumerate() {
            if !d.is_module_map(&terms[k + 1], &terms[k]) {
                return Err(ComplexError::NotModuleMap(lo + k as i64 + 1));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].then(&diffs[k - 1]).is_zero() {
                return Err(ComplexError::NotAComplex(lo + k as i64 + 1));
            }
        }
        Ok(Complex {
            algebra: algebra.clone(),
            lo,
            terms,
            diffs,
        })
    }

    fn from_parts(algebra: &Arc<Algebra>, lo: i64, terms: Vec<Rep>, diffs: Vec<RepMap>) -> Complex {
        let c = Complex {
            algebra: algebra.clone(),
            lo,
            terms,
            diffs,
        };
        debug_assert!(Complex::new(algebra, c.lo, c.terms.clone(), c.diffs.clone()).is_ok());
        c
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Complex {
        Complex::from_parts(algebra, 0, Vec::new(), Vec::new())
    }

    /// A module as a complex concentrated in degree 0.
    pub fn from_module(m: &Rep) -> Complex {
        Complex::concentrated(m, 0)
    }

    pub fn concentrated(m: &Rep, degree: i64) -> Complex {
        Complex::from_parts(m.algebra(), degree, vec![m.clone()], Vec::new())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Least and greatest degree with a nonzero term.
    pub fn support(&self) -> Option<(i64, i64)> {
        let first = self.terms.iter().position(|t| !t.is_zero())?;
        let last = self.terms.iter().rposition(|t| !t.is_zero())?;
        Some((self.lo + first as i64, self.lo + last as i64))
    }

    pub fn is_zero(&self) -> bool {
        self.support().is_none()
    }

    fn slot(&self, i: i64) -> Option<usize> {
        let k = i - self.lo;
        (k >= 0 && (k as usize) < self.terms.len()).then_some(k as usize)
    }

    pub fn term(&self, i: i64) -> Rep {
        match self.slot(i) {
            Some(k) => self.terms[k].clone(),
            None => Rep::zero(&self.algebra),
        }
    }

    /// `d_i: X_i -> X_{i-1}`.
    pub fn d(&self, i: i64) -> RepMap {
        match (self.slot(i), self.slot(i - 1)) {
            (Some(k), Some(_)) => self.diffs[k - 1].clone(),
            _ => RepMap::zero(&self.term(i), &self.term(i - 1)),
        }
    }

    /// `H_i = ker d_i / im d_{i+1}`.
    pub fn homology(&self, i: i64) -> Rep {
        let x = self.term(i);
        let z = self.d(i).kernel();
        let (zrep, _) = x.sub_as_rep(&z);
        let into_z = self
            .d(i + 1)
            .restrict(&SubRep::full(&self.term(i + 1)), &z)
            .expect("d_i d_{i+1} = 0");
        zrep.quotient(&into_z.image()).0
    }

    pub fn homology_dims(&self, i: i64) -> Vec<usize> {
        let x = self.term(i);
        let ker = self.d(i).kernel().dims();
        let im = self.d(i + 1).image().dims();
        (0..x.dims().len()).map(|v| ker[v] - im[v]).collect()
    }

    /// Degrees with nonzero homology, with their dimension vectors.
    pub fn homology_profile(&self) -> Vec<(i64, Vec<usize>)> {
        let Some((lo, hi)) = self.support() else {
            return Vec::new();
        };
        (lo..=hi)
            .map(|i| (i, self.homology_dims(i)))
            .filter(|(_, d)| d.iter().any(|&x| x > 0))
            .collect()
    }

    /// Zero in the derived category: all homology vanishes.
    pub fn is_zero_in_derived(&self) -> bool {
        self.homology_profile().is_empty()
    }

    /// `X[k]_i = X_{i-k}` with differentials scaled by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Complex {
        let diffs = if k % 2 == 0 {
            self.diffs.clone()
        } else {
            self.diffs.iter().map(RepMap::neg).collect()
        };
        Complex::from_parts(&self.algebra, self.lo + k, self.terms.clone(), diffs)
    }

    pub fn direct_sum(&self, other: &Complex) -> Complex {
        let range = match (self.support(), other.support()) {
            (None, None) => return Complex::zero(&self.algebra),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => (a.0.min(b.0), a.1.max(b.1)),
        };
        self.rebuild(range, |i| (self.term(i).direct_sum(&other.term(i)), self.d(i).direct_sum(&other.d(i))))
    }

    /// `σ_{≥ from}`: terms below `from` replaced by 0.
    pub fn brutal_truncate(&self, from: i64) -> Complex {
        match self.support() {
            Some((lo, hi)) if hi >= from => self.rebuild((lo.max(from), hi), |i| (self.term(i), self.d(i))),
            _ => Complex::zero(&self.algebra),
        }
    }

    /// Assembles degrees `lo..=hi` from per-degree `(X_i, d_i)`; `d_lo` is dropped.
    fn rebuild(&self, (lo, hi): (i64, i64), mut f: impl FnMut(i64) -> (Rep, RepMap)) -> Complex {
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for i in lo..=hi {
            let (t, d) = f(i);
            terms.push(t);
            if i > lo {
                diffs.push(d);
            }
        }
        Complex::from_parts(&self.algebra, lo, terms, diffs)
    }

    pub fn total_dims(&self) -> Vec<(i64, Vec<usize>)> {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, t)| (self.lo + k as i64, t.dims().to_vec()))
            .collect()
    }
}

/// Checks that `f_i: X_i -> Y_i` commute with the differentials.
pub fn is_chain_map(x: &Complex, y: &Complex, f: impl Fn(i64) -> RepMap) -> bool {
    let range = match (x.support(), y.support()) {
        (Some(a), Some(b)) => (a.0.min(b.0), a.1.max(b.1)),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => return true,
    };
    (range.0..=range.1 + 1).all(|i| {
        f(i).is_module_map(&x.term(i), &y.term(i)) && x.d(i).then(&f(i - 1)) == f(i).then(&y.d(i))
    })
}

/// The mapping cone of a chain map `f: X -> Y`: `C_i = X_{i-1} ⊕ Y_i` with
/// `d(x, y) = (-d x, f x + d y)`. Acyclic iff `f` is a quasi-isomorphism.
pub fn mapping_cone(x: &Complex, y: &Complex, f: impl Fn(i64) -> RepMap) -> Complex {
    let range = match (x.support(), y.support()) {
        (None, None) => return Complex::zero(x.algebra()),
        (Some(a), None) => (a.0 + 1, a.1 + 1),
        (None, Some(b)) => b,
        (Some(a), Some(b)) => ((a.0 + 1).min(b.0), (a.1 + 1).max(b.1)),
    };
    let p = x.algebra().modulus();
    let nv = x.algebra().vertex_count();
    x.rebuild(range, |i| {
        let term = x.term(i - 1).direct_sum(&y.term(i));
        let (dx, fx, dy) = (x.d(i - 1), f(i - 1), y.d(i));
        let (xt, yt) = (x.term(i - 2), y.term(i - 1));
        let d = RepMap::new(
            (0..nv)
                .map(|v| {
                    let top = dx.block(v).neg().hstack(fx.block(v));
                    let bottom = Mat::zeros(y.term(i).dim_at(v), xt.dim_at(v), p).hstack(dy.block(v));
                    debug_assert_eq!(top.cols(), xt.dim_at(v) + yt.dim_at(v));
                    top.vstack(&bottom)
                })
                .collect(),
        );
        (term, d)
    })
}

/// A minimal projective resolution `P -> X`, computed through degree `top`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// Terms `P_lo, ..., P_top`.
    pub complex: Complex,
    comparison: Vec<RepMap>,
    lo: i64,
    pub top: i64,
}

impl Resolution {
    /// `φ_i: P_i -> X_i`.
    pub fn comparison(&self, i: i64) -> Option<&RepMap> {
        let k = i - self.lo;
        (k >= 0).then(|| self.comparison.get(k as usize)).flatten()
    }

    /// Dimension vectors of `P_lo, ..., P_top`.
    pub fn term_dims(&self) -> Vec<(i64, Vec<usize>)> {
        self.complex.total_dims()
    }

    /// `im d_i ⊆ rad P_{i-1}` in every computed degree.
    pub fn is_minimal(&self) -> bool {
        (self.lo + 1..=self.top).all(|i| {
            let rad = self.complex.term(i - 1).radical();
            rad.contains(&self.complex.d(i).image())
        })
    }
}

/// Minimal projective resolution of `x` through degree `hi + depth`.
///
/// Built upward: at degree `i` the new projective `P_i` covers the cycles of
/// the mapping cone of `P_{<i} -> X` in degree `i` modulo the boundaries
/// coming from `X_{i+1}`. Choosing a projective cover of that quotient makes
/// every differential radical.
pub fn proj_resolution(x: &Complex, depth: usize) -> Resolution {
    let alg = x.algebra().clone();
    let Some((lo, hi)) = x.support() else {
        return Resolution {
            complex: Complex::zero(&alg),
            comparison: Vec::new(),
            lo: 0,
            top: -1,
        };
    };
    let top = hi + depth as i64;
    let zero = Rep::zero(&alg);
    let mut terms: Vec<Rep> = Vec::new();
    let mut diffs: Vec<RepMap> = Vec::new();
    let mut comparison: Vec<RepMap> = Vec::new();
    let mut i = lo;
    while i <= top {
        let k = (i - lo) as usize;
        let p_prev = if k >= 1 { terms[k - 1].clone() } else { zero.clone() };
        let p_prev2 = if k >= 2 { terms[k - 2].clone() } else { zero.clone() };
        let dp_prev = if k >= 2 { diffs[k - 2].clone() } else { RepMap::zero(&p_prev, &p_prev2) };
        let phi_prev = if k >= 1 { comparison[k - 1].clone() } else { RepMap::zero(&p_prev, &x.term(i - 1)) };
        let xi = x.term(i);
        let dx = x.d(i);
        let dx_next = x.d(i + 1);
        let w = p_prev.direct_sum(&xi);
        let cone_d = RepMap::new(
            (0..alg.vertex_count())
                .map(|v| {
                    let top_rows = dp_prev.block(v).hstack(phi_prev.block(v));
                    let bottom = Mat::zeros(xi.dim_at(v), p_prev2.dim_at(v), alg.modulus()).hstack(&dx.block(v).neg());
                    top_rows.vstack(&bottom)
                })
                .collect(),
        );
        let z = cone_d.kernel();
        let (zrep, incl) = w.sub_as_rep(&z);
        let xnext = x.term(i + 1);
        let boundary = RepMap::new(
            (0..alg.vertex_count())
                .map(|v| Mat::zeros(xnext.dim_at(v), p_prev.dim_at(v), alg.modulus()).hstack(dx_next.block(v)))
                .collect(),
        )
        .restrict(&SubRep::full(&xnext), &z)
        .expect("boundaries are cone cycles")
        .image();
        let rad = zrep.radical();
        let mut gens = Vec::new();
        for v in 0..alg.vertex_count() {
            let covered = boundary.bases()[v].vstack(&rad.bases()[v]);
            let comp = crate::linalg::Subspace::span(&covered).complement_basis();
            for r in 0..comp.rows() {
                gens.push((v, comp.row(r).to_vec()));
            }
        }
        let cover = FreeCover::generated_by(&zrep, &gens);
        let psi = cover.map.then(&incl);
        let split = p_prev.dims().to_vec();
        let d_new = RepMap::new(
            psi.blocks()
                .iter()
                .enumerate()
                .map(|(v, b)| b.col_range(0, split[v]))
                .collect(),
        );
        let phi_new = RepMap::new(
            psi.blocks()
                .iter()
                .enumerate()
                .map(|(v, b)| b.col_range(split[v], b.cols()))
                .collect(),
        );
        let done = cover.module.is_zero() && i >= hi;
        if k >= 1 {
            diffs.push(d_new);
        }
        terms.push(cover.module);
        comparison.push(phi_new);
        if done {
            break;
        }
        i += 1;
    }
    let computed = lo + terms.len() as i64 - 1;
    Resolution {
        complex: Complex::from_parts(&alg, lo, terms, diffs),
        comparison,
        lo,
        top: computed.max(top),
    }
}

/// `Ω_D^n(X) = σ_{≥n}(P)[-n]` for the minimal resolution `P` of `X`, as a
/// bounded complex.
///
/// From degree `N = max(n, hi + 1)` on, the resolution is exact except at `N`,
/// so its tail is replaced by the module `im d_N ⊆ P_{N-1}` in degree `N`.
/// For a module and `n ≥ 1` this is `Ω^n(M)` in degree 0.
pub fn derived_syzygy(x: &Complex, n: i64) -> Complex {
    let Some((_, hi)) = x.support() else {
        return Complex::zero(x.algebra());
    };
    let big_n = n.max(hi + 1);
    let res = proj_resolution(x, (big_n - hi) as usize);
    derived_syzygy_from(&res, n, big_n)
}

fn derived_syzygy_from(res: &Resolution, n: i64, big_n: i64) -> Complex {
    let p = &res.complex;
    let alg = p.algebra().clone();
    let (tail, incl) = p.term(big_n - 1).sub_as_rep(&p.d(big_n).image());
    let start = n.max(p.lo);
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for i in start..big_n {
        terms.push(p.term(i));
        if i > start {
            diffs.push(p.d(i));
        }
    }
    if !terms.is_empty() {
        diffs.push(incl);
    }
    terms.push(tail);
    Complex::from_parts(&alg, start, terms, diffs).shift(-n)
}

/// A subfunctor or quotient functor applied term by term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degreewise {
    Rad,
    Top,
    /// `t_V`
    Torsion(SimpleSet),
    /// `q_{t_V}`
    TorsionFree(SimpleSet),
    /// `F_{t_V} = rad ∘ t_V`
    FStep(SimpleSet),
}

fn sub_for(kind: &Degreewise, m: &Rep) -> SubRep {
    match kind {
        Degreewise::Rad | Degreewise::Top => m.radical(),
        Degreewise::Torsion(v) | Degreewise::TorsionFree(v) => torsion_radical(m, v),
        Degreewise::FStep(v) => {
            let t = torsion_radical(m, v);
            let (trep, incl) = m.sub_as_rep(&t);
            let r = trep.radical();
            let bases = r.bases().iter().zip(incl.blocks()).map(|(b, i)| b.mul(i)).collect();
            m.subrep(bases).expect("rad t_V(M) is a submodule")
        }
    }
}

pub fn apply_degreewise(x: &Complex, kind: &Degreewise) -> Complex {
    let Some(range) = x.support() else {
        return x.clone();
    };
    let subs: Vec<SubRep> = (range.0 - 1..=range.1).map(|i| sub_for(kind, &x.term(i))).collect();
    let sub = |i: i64| &subs[(i - range.0 + 1) as usize];
    match kind {
        Degreewise::Top | Degreewise::TorsionFree(_) => {
            let quots: Vec<(Rep, RepMap, Vec<Mat>)> =
                (range.0 - 1..=range.1).map(|i| x.term(i).quotient_with_section(sub(i))).collect();
            let q = |i: i64| &quots[(i - range.0 + 1) as usize];
            x.rebuild(range, |i| (q(i).0.clone(), x.d(i).induced_on_quotients(&q(i).2, &q(i - 1).1)))
        }
        _ => x.rebuild(range, |i| {
            let t = x.term(i).sub_as_rep(sub(i)).0;
            let d = x.d(i).restrict(sub(i), sub(i - 1)).expect("functorial submodule");
            (t, d)
        }),
    }
}

/// Checks that `0 -> S(X) -> X -> X/S(X) -> 0` is a degreewise split-free
/// short exact sequence of complexes for the subfunctor `S` of `kind`.
fn sequence_is_exact(x: &Complex, kind: &Degreewise) -> bool {
    let Some((lo, hi)) = x.support() else {
        return true;
    };
    let sub_c = apply_degreewise(x, &subfunctor(kind));
    let quot_c = apply_degreewise(x, &quotient_functor(kind));
    let maps: Vec<(RepMap, RepMap)> = (lo - 1..=hi)
        .map(|i| {
            let m = x.term(i);
            let s = sub_for(kind, &m);
            let (_, incl) = m.sub_as_rep(&s);
            let (_, proj) = m.quotient(&s);
            (incl, proj)
        })
        .collect();
    let at = |i: i64| &maps[(i - lo + 1) as usize];
    let degreewise = (lo..=hi).all(|i| {
        let (incl, proj) = at(i);
        incl.is_injective()
            && proj.is_surjective()
            && incl.then(proj).is_zero()
            && sub_c.term(i).total_dim() + quot_c.term(i).total_dim() == x.term(i).total_dim()
    });
    let chain = |i: i64| {
        if i < lo || i > hi {
            return true;
        }
        let (incl, proj) = at(i);
        let (incl_prev, proj_prev) = at(i - 1);
        sub_c.d(i).then(incl_prev) == incl.then(&x.d(i)) && x.d(i).then(proj_prev) == proj.then(&quot_c.d(i))
    };
    degreewise && (lo + 1..=hi).all(chain)
}

fn subfunctor(kind: &Degreewise) -> Degreewise {
    match kind {
        Degreewise::Top => Degreewise::Rad,
        Degreewise::TorsionFree(v) => Degreewise::Torsion(v.clone()),
        k => k.clone(),
    }
}

fn quotient_functor(kind: &Degreewise) -> Degreewise {
    match kind {
        Degreewise::Rad => Degreewise::Top,
        Degreewise::Torsion(v) => Degreewise::TorsionFree(v.clone()),
        k => k.clone(),
    }
}

/// `0 -> t_V(X) -> X -> q_{t_V}(X) -> 0` is exact and made of chain maps.
pub fn torsion_sequence_is_exact(x: &Complex, v: &SimpleSet) -> bool {
    sequence_is_exact(x, &Degreewise::Torsion(v.clone()))
}

/// `0 -> F_{t_V}(X) -> t_V(X) -> top t_V(X) -> 0` is exact and made of chain maps.
pub fn radical_sequence_is_exact(x: &Complex, v: &SimpleSet) -> bool {
    let t = apply_degreewise(x, &Degreewise::Torsion(v.clone()));
    sequence_is_exact(&t, &Degreewise::Rad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quiver, DEFAULT_MAX_DEGREE};
    use crate::modules::{syzygy, Rep};

    fn a2() -> Arc<Algebra> {
        let q = Quiver::from_labels(2, &[("a", 1, 2)]).unwrap();
        Arc::new(Algebra::build(q, vec![], 101, DEFAULT_MAX_DEGREE).unwrap())
    }

    /// `0 -> P(2) -> P(1) -> 0` with the inclusion of the radical.
    fn rad_inclusion(a: &Arc<Algebra>) -> Complex {
        let p1 = Rep::projective(a, 0);
        let p2 = Rep::projective(a, 1);
        let d = crate::modules::hom_basis(&p2, &p1).remove(0);
        Complex::new(a, 0, vec![p1, p2], vec![d]).unwrap()
    }

    #[test]
    fn module_homology() {
        let a = a2();
        let c = Complex::from_module(&Rep::projective(&a, 0));
        assert_eq!(c.homology(0).dims(), &[1, 1]);
        assert!(c.homology(1).is_zero());
        assert!(!c.is_zero_in_derived());
        assert!(Complex::zero(&a).is_zero_in_derived());
    }

    #[test]
    fn short_exact_homology() {
        let a = a2();
        let c = rad_inclusion(&a);
        assert_eq!(c.homology(0).dims(), &[1, 0]);
        assert!(c.homology(1).is_zero());
    }

    #[test]
    fn identity_is_acyclic() {
        let a = a2();
        let p = Rep::projective(&a, 0);
        let c = Complex::new(&a, 0, vec![p.clone(), p.clone()], vec![RepMap::identity(&p)]).unwrap();
        assert!(c.is_zero_in_derived());
        let res = proj_resolution(&c, 3);
        assert!(res.complex.is_zero());
    }

    #[test]
    fn rejects_non_complexes() {
        let a = a2();
        let p = Rep::projective(&a, 0);
        let id = RepMap::identity(&p);
        let err = Complex::new(&a, 0, vec![p.clone(), p.clone(), p.clone()], vec![id.clone(), id]).unwrap_err();
        assert_eq!(err, ComplexError::NotAComplex(2));
        let err = Complex::new(&a, 0, vec![p.clone()], vec![RepMap::identity(&p)]).unwrap_err();
        assert!(matches!(err, ComplexError::DifferentialCount { .. }));
    }

    #[test]
    fn resolution_of_simple_on_a2() {
        let a = a2();
        let s1 = Complex::from_module(&Rep::simple(&a, 0));
        let res = proj_resolution(&s1, 4);
        assert_eq!(res.term_dims(), vec![(0, vec![1, 1]), (1, vec![0, 1]), (2, vec![0, 0])]);
        assert!(res.is_minimal());
        let t = res.complex.brutal_truncate(1);
        assert_eq!(t.support(), Some((1, 1)));
        assert_eq!(t.term(1).dims(), &[0, 1]);
    }

    #[test]
    fn resolving_a_minimal_complex_of_projectives() {
        let a = a2();
        let c = rad_inclusion(&a);
        let res = proj_resolution(&c, 2);
        assert_eq!(res.complex.support(), Some((0, 1)));
        assert_eq!(res.complex.term(0).dims(), c.term(0).dims());
        assert_eq!(res.complex.term(1).dims(), c.term(1).dims());
    }

    #[test]
    fn derived_syzygy_of_module_is_classical() {
        let a = a2();
        let s = Rep::simple(&a, 0);
        let om = derived_syzygy(&Complex::from_module(&s), 1);
        assert_eq!(om.support(), Some((0, 0)));
        assert_eq!(om.term(0).dims(), syzygy(&s).dims());
        let om0 = derived_syzygy(&Complex::from_module(&s), 0);
        assert_eq!(om0.homology_profile(), vec![(0, vec![1, 0])]);
        assert!(derived_syzygy(&Complex::from_module(&s), 2).is_zero_in_derived());
    }

    #[test]
    fn shift_and_sum() {
        let a = a2();
        let c = rad_inclusion(&a);
        let s = c.shift(3);
        assert_eq!(s.support(), Some((3, 4)));
        assert_eq!(s.d(4), c.d(1).neg());
        let sum = c.direct_sum(&s);
        assert_eq!(sum.support(), Some((0, 4)));
        assert_eq!(sum.homology_dims(3), vec![1, 0]);
        assert_eq!(sum.homology_dims(0), vec![1, 0]);
    }

    #[test]
    fn degreewise_functors() {
        let a = a2();
        let c = rad_inclusion(&a);
        let all = SimpleSet::all(2);
        assert!(apply_degreewise(&c, &Degreewise::Torsion(all.clone())).is_zero());
        let r = apply_degreewise(&c, &Degreewise::Rad);
        assert_eq!(r.term(0).dims(), &[0, 1]);
        let t = apply_degreewise(&c, &Degreewise::Top);
        assert_eq!(t.term(0).dims(), &[1, 0]);
        let v = SimpleSet::from_labels(2, &[2]).unwrap();
        assert!(torsion_sequence_is_exact(&c, &v));
        assert!(radical_sequence_is_exact(&c, &v));
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let a = a2();
        let c = rad_inclusion(&a);
        let cone = mapping_cone(&c, &c, |i| RepMap::identity(&c.term(i)));
        assert_eq!(cone.support(), Some((0, 2)));
        assert!(cone.is_zero_in_derived());
        assert!(is_chain_map(&c, &c, |i| RepMap::identity(&c.term(i))));
        let zero = mapping_cone(&c, &c, |i| RepMap::zero(&c.term(i), &c.term(i)));
        assert!(!zero.is_zero_in_derived());
    }
}
