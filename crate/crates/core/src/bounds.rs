//! Upper bounds for the dimension of the bounded derived category, with their
//! side conditions certified, and a search over sets of simples.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::modules::{is_isomorphic, proj_dimension, syzygy, PdOptions, PdResult, Rep, RepMap};
use crate::torsion::{layer_length, SimpleSet};

pub const DEFAULT_SYZYGY_DEPTH: usize = 24;
pub const DEFAULT_SUBSET_LIMIT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("exhaustive search over {vertices} vertices exceeds the subset limit {limit}; raise the limit or search greedily")]
    ResourceLimit { vertices: usize, limit: usize },
}

/// Evidence that `Λ/rad Λ` has finite syzygy type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SyzygyTypeCertificate {
    GldimFinite(i64),
    /// `Ω^a(Λ/rad Λ) ≅ Ω^b(Λ/rad Λ) ≠ 0`, so `{Ω^0, ..., Ω^b}` is a finite syzygy set.
    Periodic { a: usize, b: usize, witness: RepMap },
    Unknown { depth: usize },
}

impl SyzygyTypeCertificate {
    pub fn is_certified(&self) -> bool {
        !matches!(self, SyzygyTypeCertificate::Unknown { .. })
    }
}

impl fmt::Display for SyzygyTypeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyzygyTypeCertificate::GldimFinite(d) => write!(f, "finite global dimension {d}"),
            SyzygyTypeCertificate::Periodic { a, b, .. } => write!(f, "periodic: Ω^{a} ≅ Ω^{b} of the top"),
            SyzygyTypeCertificate::Unknown { depth } => write!(f, "unknown (searched to depth {depth})"),
        }
    }
}

/// Options shared by every computation of an [`Analysis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub cutoff: usize,
    pub depth: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        let pd = PdOptions::default();
        AnalysisOptions {
            cutoff: pd.cutoff,
            depth: DEFAULT_SYZYGY_DEPTH,
            trials: pd.trials,
            seed: pd.seed,
        }
    }
}

impl AnalysisOptions {
    pub fn pd(&self) -> PdOptions {
        PdOptions {
            cutoff: self.cutoff,
            trials: self.trials,
            seed: self.seed,
        }
    }
}

/// Certifies finite syzygy type of `Λ/rad Λ`, given the global dimension.
pub fn syzygy_type_with(alg: &Arc<Algebra>, gldim: PdResult, depth: usize, opts: &PdOptions) -> SyzygyTypeCertificate {
    if let PdResult::Finite { value } = gldim {
        return SyzygyTypeCertificate::GldimFinite(value);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut chain: Vec<Rep> = vec![Rep::semisimple_top(alg)];
    for b in 1..=depth {
        let next = syzygy(chain.last().unwrap());
        if next.is_zero() {
            // only reachable when the cutoff hid a finite global dimension
            return SyzygyTypeCertificate::GldimFinite(b as i64 - 1);
        }
        for (a, prev) in chain.iter().enumerate() {
            if prev.dims() == next.dims() {
                if let crate::modules::IsoResult::Yes(witness) = is_isomorphic(prev, &next, opts.trials, &mut rng) {
                    return SyzygyTypeCertificate::Periodic { a, b, witness };
                }
            }
        }
        chain.push(next);
    }
    SyzygyTypeCertificate::Unknown { depth }
}

/// [`syzygy_type_with`], computing the global dimension first.
pub fn syzygy_type(alg: &Arc<Algebra>, depth: usize, opts: &PdOptions) -> SyzygyTypeCertificate {
    let gl = simple_dimensions(alg, opts);
    syzygy_type_with(alg, PdResult::sup(gl), depth, opts)
}

fn simple_dimensions(alg: &Arc<Algebra>, opts: &PdOptions) -> Vec<PdResult> {
    (0..alg.vertex_count())
        .into_par_iter()
        .map(|i| proj_dimension(&Rep::simple(alg, i), &opts.for_index(i)))
        .collect()
}

/// Per-algebra data shared by all bound evaluations: projective and
/// injective dimensions of simples, certificates, the regular module.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub algebra: Arc<Algebra>,
    pub options: AnalysisOptions,
    pub pd_simple: Vec<PdResult>,
    pub id_simple: Vec<PdResult>,
    pub gldim: PdResult,
    pub syzygy: SyzygyTypeCertificate,
    pub cosyzygy: SyzygyTypeCertificate,
    pub regular: Rep,
}

impl Analysis {
    pub fn new(alg: &Arc<Algebra>, options: AnalysisOptions) -> Analysis {
        let pd = options.pd();
        let op = alg.opposite();
        let pd_simple = simple_dimensions(alg, &pd);
        let id_simple = simple_dimensions(&op, &pd);
        let gldim = PdResult::sup(pd_simple.iter().copied());
        let syzygy = syzygy_type_with(alg, gldim, options.depth, &pd);
        let cosyzygy = syzygy_type_with(&op, PdResult::sup(id_simple.iter().copied()), options.depth, &pd);
        Analysis {
            algebra: alg.clone(),
            options,
            pd_simple,
            id_simple,
            gldim,
            syzygy,
            cosyzygy,
            regular: Rep::regular(alg),
        }
    }

    pub fn loewy_length(&self) -> usize {
        self.algebra.loewy_length()
    }

    /// `pd V = sup { pd S : S ∈ V }`, `-1` for `V = ∅`.
    pub fn pd_of(&self, v: &SimpleSet) -> PdResult {
        PdResult::sup(v.vertices().into_iter().map(|i| self.pd_simple[i]))
    }

    pub fn id_of(&self, v: &SimpleSet) -> PdResult {
        PdResult::sup(v.vertices().into_iter().map(|i| self.id_simple[i]))
    }

    /// `ℓℓ^{t_V}(Λ_Λ)`.
    pub fn layer_length(&self, v: &SimpleSet) -> usize {
        layer_length(&self.regular, v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Applicability {
    Yes,
    No(String),
    Unknown(String),
}

impl Applicability {
    pub fn tag(&self) -> &'static str {
        match self {
            Applicability::Yes => "yes",
            Applicability::No(_) => "no",
            Applicability::Unknown(_) => "unknown",
        }
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Applicability::Yes => None,
            Applicability::No(r) | Applicability::Unknown(r) => Some(r),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub formula: &'static str,
    pub applicable: Applicability,
    /// Present exactly when `applicable` is `Yes`.
    pub value: Option<i64>,
}

impl BoundEntry {
    fn new(name: &'static str, formula: &'static str, applicable: Applicability, value: impl FnOnce() -> i64) -> Self {
        let value = (applicable == Applicability::Yes).then(value);
        BoundEntry {
            name,
            formula,
            applicable,
            value,
        }
    }
}

fn finite_or(pd: PdResult, what: &str, cutoff: usize) -> Result<i64, Applicability> {
    match pd {
        PdResult::Finite { value } => Ok(value),
        PdResult::InfiniteCertified { a, b } => Err(Applicability::No(format!("{what} is infinite (Ω^{a} ≅ Ω^{b})"))),
        PdResult::AtLeast { .. } => Err(Applicability::Unknown(format!("{what} not determined below cutoff {cutoff}"))),
    }
}

/// `LL(Λ) - 1`.
pub fn bound_loewy(alg: &Algebra) -> BoundEntry {
    BoundEntry::new("loewy_length", "LL - 1", Applicability::Yes, || alg.loewy_length() as i64 - 1)
}

/// `gldim Λ`, when certified finite.
pub fn bound_gldim(an: &Analysis) -> BoundEntry {
    match finite_or(an.gldim, "gldim", an.options.cutoff) {
        Ok(d) => BoundEntry::new("global_dimension", "gldim", Applicability::Yes, || d),
        Err(app) => BoundEntry::new("global_dimension", "gldim", app, || 0),
    }
}

/// The layer-length bounds for `V`, ending with `ℓ + pd V`.
pub fn bound_family(an: &Analysis, v: &SimpleSet) -> Vec<BoundEntry> {
    let l = an.layer_length(v) as i64;
    let pd = finite_or(an.pd_of(v), "pd V", an.options.cutoff);
    let when = |extra: Option<Applicability>| match (&pd, extra) {
        (Err(app), _) => app.clone(),
        (Ok(_), Some(app)) => app,
        (Ok(_), None) => Applicability::Yes,
    };
    let d = *pd.as_ref().unwrap_or(&0);
    let at_most_2 = (l > 2).then(|| Applicability::No(format!("layer length {l} > 2")));
    let at_least_2 = (l < 2).then(|| Applicability::No(format!("layer length {l} < 2")));
    let main_extra = if an.syzygy.is_certified() || l <= 2 {
        None
    } else {
        Some(Applicability::Unknown(format!(
            "syzygy type of the top not certified ({}) and layer length {l} > 2",
            an.syzygy
        )))
    };
    vec![
        BoundEntry::new("layer_product", "(pd V + 2)(ll + 1) - 2", when(None), || (d + 2) * (l + 1) - 2),
        BoundEntry::new("layer_linear", "2(pd V + ll) + 1", when(None), || 2 * (d + l) + 1),
        BoundEntry::new("layer_at_most_2", "pd V + 3", when(at_most_2), || d + 3),
        BoundEntry::new("layer_at_least_2", "2 ll + pd V - 1", when(at_least_2), || 2 * l + d - 1),
        BoundEntry::new("layer_plus_pd", "ll + pd V", when(main_extra), || l + d),
    ]
}

/// `ℓ + id V` under finite cosyzygy type.
pub fn dual_bound_family(an: &Analysis, v: &SimpleSet) -> Vec<BoundEntry> {
    let l = an.layer_length(v) as i64;
    let app = match finite_or(an.id_of(v), "id V", an.options.cutoff) {
        Err(app) => app,
        Ok(_) if !an.cosyzygy.is_certified() => Applicability::Unknown(format!(
            "cosyzygy type of the top not certified ({})",
            an.cosyzygy
        )),
        Ok(_) => Applicability::Yes,
    };
    let id = an.id_of(v).finite().unwrap_or(0);
    vec![BoundEntry::new("layer_plus_id", "ll + id V", app, || l + id)]
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub v: SimpleSet,
    pub dim: usize,
    pub loewy_length: usize,
    pub gldim: PdResult,
    pub pd_v: PdResult,
    pub id_v: PdResult,
    pub layer_length: usize,
    pub syzygy: SyzygyTypeCertificate,
    pub cosyzygy: SyzygyTypeCertificate,
    pub cutoff: usize,
    pub depth: usize,
    pub entries: Vec<BoundEntry>,
    pub min_bound: Option<i64>,
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn value(&self, name: &str) -> Option<i64> {
        self.entry(name).and_then(|e| e.value)
    }

    /// Values appear exactly on applicable entries and the minimum is theirs.
    pub fn is_well_formed(&self) -> bool {
        let values_ok = self
            .entries
            .iter()
            .all(|e| e.value.is_some() == (e.applicable == Applicability::Yes));
        values_ok && self.min_bound == self.entries.iter().filter_map(|e| e.value).min()
    }
}

pub fn full_report(an: &Analysis, v: &SimpleSet) -> BoundReport {
    let mut entries = vec![bound_loewy(&an.algebra), bound_gldim(an)];
    entries.extend(bound_family(an, v));
    entries.extend(dual_bound_family(an, v));
    let min_bound = entries.iter().filter_map(|e| e.value).min();
    BoundReport {
        v: v.clone(),
        dim: an.algebra.dim(),
        loewy_length: an.loewy_length(),
        gldim: an.gldim,
        pd_v: an.pd_of(v),
        id_v: an.id_of(v),
        layer_length: an.layer_length(v),
        syzygy: an.syzygy.clone(),
        cosyzygy: an.cosyzygy.clone(),
        cutoff: an.options.cutoff,
        depth: an.options.depth,
        entries,
        min_bound,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchRow {
    pub v: SimpleSet,
    pub min_bound: Option<i64>,
    pub layer_length: usize,
    pub pd_v: PdResult,
}

impl SearchRow {
    fn of(an: &Analysis, v: SimpleSet) -> SearchRow {
        let r = full_report(an, &v);
        SearchRow {
            min_bound: r.min_bound,
            layer_length: r.layer_length,
            pd_v: r.pd_v,
            v,
        }
    }

    fn key(&self) -> (i64, usize, Vec<usize>) {
        (self.min_bound.unwrap_or(i64::MAX), self.v.len(), self.v.labels())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Greedy,
}

/// Ranks sets of simples by their best bound (then by size, then by labels).
///
/// Enumerates all `2^n` subsets when `n ≤ subset_limit`. Otherwise, with
/// `greedy`, hill-climbs by single-vertex toggles from the better of `∅` and
/// all simples; the result then lists only visited subsets and need not
/// contain the optimum.
pub fn best_v_search(an: &Analysis, subset_limit: usize, greedy: bool) -> Result<(SearchMode, Vec<SearchRow>), BoundsError> {
    let n = an.algebra.vertex_count();
    if n <= subset_limit && n < 64 {
        let mut rows: Vec<SearchRow> = (0..1u64 << n)
            .into_par_iter()
            .map(|mask| SearchRow::of(an, SimpleSet::from_mask(n, mask)))
            .collect();
        rows.sort_by_key(SearchRow::key);
        return Ok((SearchMode::Exhaustive, rows));
    }
    if !greedy {
        return Err(BoundsError::ResourceLimit {
            vertices: n,
            limit: subset_limit,
        });
    }
    let mut seen = std::collections::BTreeMap::new();
    let visit = |v: SimpleSet, seen: &mut std::collections::BTreeMap<SimpleSet, SearchRow>| {
        seen.entry(v.clone()).or_insert_with(|| SearchRow::of(an, v)).clone()
    };
    let a = visit(SimpleSet::empty(n), &mut seen);
    let b = visit(SimpleSet::all(n), &mut seen);
    let mut best = if b.key() < a.key() { b } else { a };
    loop {
        let neighbours: Vec<SimpleSet> = (0..n)
            .map(|i| if best.v.contains(i) { best.v.without(i) } else { best.v.with(i) })
            .collect();
        let fresh: Vec<SearchRow> = neighbours
            .par_iter()
            .filter(|s| !seen.contains_key(*s))
            .map(|s| SearchRow::of(an, s.clone()))
            .collect();
        for r in fresh {
            seen.insert(r.v.clone(), r);
        }
        let next = neighbours.iter().map(|s| seen[s].clone()).min_by_key(SearchRow::key).unwrap();
        if next.key() < best.key() {
            best = next;
        } else {
            break;
        }
    }
    let mut rows: Vec<SearchRow> = seen.into_values().collect();
    rows.sort_by_key(SearchRow::key);
    Ok((SearchMode::Greedy, rows))
}
