use rand::Rng;

use super::{hom_basis, Rep, RepMap};

pub const DEFAULT_ISO_TRIALS: usize = 64;

/// Outcome of a randomized isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult {
    /// An invertible intertwiner `m -> n`.
    Yes(RepMap),
    /// A certified obstruction.
    No(String),
    /// Every random trial produced a singular map.
    Unknown,
}

impl IsoResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoResult::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoResult::No(_))
    }
}

/// Tests `m ≅ n`.
///
/// Cheap invariants are compared first (dimension vectors, radical series,
/// socle, hom dimensions). Otherwise random elements of `Hom(m, n)` are
/// sampled; when an isomorphism exists a single trial fails with probability
/// at most `total_dim / p`.
pub fn is_isomorphic<R: Rng + ?Sized>(m: &Rep, n: &Rep, trials: usize, rng: &mut R) -> IsoResult {
    assert!(m.same_algebra(n), "isomorphism test across algebras");
    if m.dims() != n.dims() {
        return IsoResult::No("dimension vectors differ".into());
    }
    if m.is_zero() {
        return IsoResult::Yes(RepMap::identity(m));
    }
    if m.maps() == n.maps() {
        return IsoResult::Yes(RepMap::identity(m));
    }
    if m.radical_series_dims() != n.radical_series_dims() {
        return IsoResult::No("radical layers differ".into());
    }
    if m.socle_dims() != n.socle_dims() {
        return IsoResult::No("socles differ".into());
    }
    let forward = hom_basis(m, n);
    if forward.is_empty() {
        return IsoResult::No("no nonzero homomorphism".into());
    }
    if hom_basis(n, m).len() != forward.len() {
        return IsoResult::No("dim Hom(m, n) != dim Hom(n, m)".into());
    }
    if hom_basis(m, m).len() != forward.len() {
        return IsoResult::No("dim Hom(m, n) != dim End(m)".into());
    }
    let p = m.modulus();
    for _ in 0..trials {
        let mut f = forward[0].scale(rng.gen_range(0..p));
        for h in &forward[1..] {
            f = f.add(&h.scale(rng.gen_range(0..p)));
        }
        if f.is_isomorphism() {
            return IsoResult::Yes(f);
        }
    }
    IsoResult::Unknown
}
