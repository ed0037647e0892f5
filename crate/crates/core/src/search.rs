//! Randomized search for generator pairs with non-abelian linear holonomy.
//!
//! Candidates are built directly in adapted coordinates
//! `U_0 ⊕ W_0 ⊕ U_0*`, where an element has nilpotent part
//!
//! ```text
//!     [ 0  −BᵀĨ  C ]
//!     [ 0   0    B ]
//!     [ 0   0    0 ]
//! ```
//!
//! with `C` skew and the columns of `B` isotropic and mutually orthogonal.
//! Raw matrices almost never satisfy the element-wise conditions, so the
//! sampler draws `B` and `C` instead and lets the filters decide.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::affine::{all_words_pass, wolf_passes, AffineIso, GroupSpec, DEFAULT_WORD_CAP};
use crate::centralizer::{centralizer_algebra, orbit_dimension};
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::holonomy::first_nonzero_product;
use crate::io::{GroupSpecFile, SCHEMA_VERSION};
use crate::linalg::{add_vectors, int, kernel, scale_vector, zero_vector, Matrix, Scalar, Vector};

pub const DEFAULT_ENTRY_BOUND: i64 = 2;

/// Word length checked for every candidate in the search loop.
pub const SEARCH_WORD_LENGTH: usize = 3;

/// Entry bound for the random base point of the orbit test.
const POINT_BOUND: i64 = 3;

/// Gram matrix `[[0,0,I_k],[0,Ĩ,0],[I_k,0,0]]` with `Ĩ = diag(+1 × (p−k), −1 × (s−k))`.
pub fn witt_standard_gram(p: usize, s: usize, k: usize) -> Matrix {
    assert!(k <= p.min(s), "k exceeds the Witt index");
    let m = p + s - 2 * k;
    let n = p + s;
    let mut g = Matrix::zeros(n, n);
    for i in 0..k {
        g.set(i, k + m + i, int(1));
        g.set(k + m + i, i, int(1));
    }
    for a in 0..m {
        g.set(k + a, k + a, int(if a < p - k { 1 } else { -1 }));
    }
    g
}

/// Isotropic integer vectors of `diag(+1 × pos, −1 × neg)` with entries in
/// `[−bound, bound]`, zero included.
pub fn isotropic_pool(pos: usize, neg: usize, bound: i64) -> Vec<Vec<i64>> {
    let m = pos + neg;
    let mut out = Vec::new();
    let mut cur = vec![-bound; m];
    if m == 0 {
        return vec![Vec::new()];
    }
    loop {
        let q: i64 = cur
            .iter()
            .enumerate()
            .map(|(i, x)| if i < pos { x * x } else { -x * x })
            .sum();
        if q == 0 {
            out.push(cur.clone());
        }
        let mut i = 0;
        while i < m && cur[i] == bound {
            cur[i] = -bound;
            i += 1;
        }
        if i == m {
            break;
        }
        cur[i] += 1;
    }
    out
}

fn diag_pair(pos: usize, x: &[i64], y: &[i64]) -> i64 {
    x.iter()
        .zip(y)
        .enumerate()
        .map(|(i, (a, b))| if i < pos { a * b } else { -a * b })
        .sum()
}

/// Knobs for [`Sampler::sample`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleParams {
    /// `dim U_0`; drawn uniformly from `0..=min(p, s)` when `None`.
    pub k: Option<usize>,
    pub generators: usize,
    pub entry_bound: i64,
    /// Insist on a nonzero `B` block in every generator.
    pub require_nonzero_b: bool,
}

impl Default for SampleParams {
    fn default() -> Self {
        SampleParams {
            k: None,
            generators: 2,
            entry_bound: DEFAULT_ENTRY_BOUND,
            require_nonzero_b: false,
        }
    }
}

/// Block-form candidate generator for one signature. Isotropic vector
/// pools are computed once per `k`.
pub struct Sampler {
    p: usize,
    s: usize,
    bound: i64,
    pools: BTreeMap<usize, Vec<Vec<i64>>>,
    forms: Vec<Arc<BilinearForm>>,
}

impl Sampler {
    pub fn new(p: usize, s: usize, entry_bound: i64) -> Result<Self> {
        if p + s == 0 {
            return Err(Error::Infeasible("empty signature".into()));
        }
        if entry_bound < 1 {
            return Err(Error::Infeasible(format!("entry bound {entry_bound} < 1")));
        }
        let pools = (1..=p.min(s))
            .map(|k| (k, isotropic_pool(p - k, s - k, entry_bound)))
            .collect();
        let forms = (0..=p.min(s))
            .map(|k| BilinearForm::with_signature(witt_standard_gram(p, s, k), p, s).map(Arc::new))
            .collect::<Result<_>>()?;
        Ok(Sampler {
            p,
            s,
            bound: entry_bound,
            pools,
            forms,
        })
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.p, self.s)
    }

    /// Draws one candidate group. Deterministic given the RNG state.
    pub fn sample<R: Rng>(
        &self,
        params: &SampleParams,
        name: &str,
        rng: &mut R,
    ) -> Result<GroupSpec> {
        let (p, s) = (self.p, self.s);
        if params.entry_bound != self.bound {
            return Err(Error::Infeasible(
                "sampler built for a different entry bound".into(),
            ));
        }
        let max_k = p.min(s);
        let k = match params.k {
            Some(k) if k > max_k => {
                return Err(Error::Infeasible(format!(
                    "k = {k} exceeds min(p, s) = {max_k}"
                )))
            }
            Some(k) => k,
            None => rng.gen_range(0..=max_k),
        };
        let m = p + s - 2 * k;
        let pos = p - k;
        let pool: &[Vec<i64>] = if k == 0 { &[] } else { &self.pools[&k] };
        let nonzero: Vec<&Vec<i64>> = pool.iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
        if params.require_nonzero_b && nonzero.is_empty() {
            return Err(Error::Infeasible(format!(
                "no nonzero isotropic vectors in W_0 of signature ({}, {})",
                pos,
                m - pos
            )));
        }

        let form = &self.forms[k];
        let i_tilde = form.gram().block(k, k, m, m);
        let n = p + s;
        let mut generators = Vec::with_capacity(params.generators);
        for _ in 0..params.generators {
            let mut columns: Vec<Vec<i64>> = Vec::with_capacity(k);
            for c in 0..k {
                let fits = |v: &Vec<i64>| columns.iter().all(|prev| diag_pair(pos, prev, v) == 0);
                let candidates: Vec<&Vec<i64>> = if c == 0 && params.require_nonzero_b {
                    nonzero.clone()
                } else {
                    pool.iter().filter(|v| fits(v)).collect()
                };
                columns.push((*candidates.choose(rng).expect("zero vector always fits")).clone());
            }
            let mut b = Matrix::zeros(m, k);
            for (j, col) in columns.iter().enumerate() {
                for (i, &x) in col.iter().enumerate() {
                    b.set(i, j, int(x));
                }
            }
            let mut c = Matrix::zeros(k, k);
            for i in 0..k {
                for j in i + 1..k {
                    let x = rng.gen_range(-self.bound..=self.bound);
                    c.set(i, j, int(x));
                    c.set(j, i, int(-x));
                }
            }
            let mut a = Matrix::zeros(n, n);
            let top = -&(&b.transpose() * &i_tilde);
            for i in 0..k {
                for j in 0..m {
                    a.set(i, k + j, top.get(i, j).clone());
                }
                for j in 0..k {
                    a.set(i, k + m + j, c.get(i, j).clone());
                }
            }
            for i in 0..m {
                for j in 0..k {
                    a.set(k + i, k + m + j, b.get(i, j).clone());
                }
            }

            // ker A ∩ (im A)^⊥ = ker [A; AᵀG]
            let constraints = a
                .row_vectors()
                .into_iter()
                .chain((&a.transpose() * form.gram()).row_vectors());
            let allowed = kernel(&Matrix::from_rows(constraints.collect(), n)?);
            let only_u0 = rng.gen_bool(0.5);
            let mut v = zero_vector(n);
            for basis_vec in allowed.basis() {
                let in_u0 = basis_vec[k..].iter().all(num_traits::Zero::is_zero);
                let coeff = rng.gen_range(-self.bound..=self.bound);
                if only_u0 && !in_u0 {
                    continue;
                }
                v = add_vectors(&v, &scale_vector(&int(coeff), basis_vec));
            }
            let linear = &Matrix::identity(n) + &a;
            generators.push(AffineIso::new(Arc::clone(form), linear, v)?);
        }
        GroupSpec::new(name, Arc::clone(form), generators)
    }
}

/// Seeded single draw with default parameters.
pub fn sample_generators(
    signature: (usize, usize),
    entry_bound: i64,
    seed: u64,
) -> Result<GroupSpec> {
    let params = SampleParams {
        entry_bound,
        ..SampleParams::default()
    };
    sample_generators_with(signature, &params, seed)
}

pub fn sample_generators_with(
    signature: (usize, usize),
    params: &SampleParams,
    seed: u64,
) -> Result<GroupSpec> {
    let sampler = Sampler::new(signature.0, signature.1, params.entry_bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sampler.sample(
        params,
        &format!("sample_{}_{}_{seed}", signature.0, signature.1),
        &mut rng,
    )
}

/// RNG for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Why a candidate was dropped, or that it survived.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Abelian,
    GeneratorWolfFailed,
    WordWolfFailed,
    OrbitNotOpen,
    Survivor,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub abelian: usize,
    pub generator_wolf_failed: usize,
    pub word_wolf_failed: usize,
    pub orbit_not_open: usize,
    pub survivors: usize,
}

impl SearchStats {
    fn record(&mut self, o: Outcome) {
        match o {
            Outcome::Abelian => self.abelian += 1,
            Outcome::GeneratorWolfFailed => self.generator_wolf_failed += 1,
            Outcome::WordWolfFailed => self.word_wolf_failed += 1,
            Outcome::OrbitNotOpen => self.orbit_not_open += 1,
            Outcome::Survivor => self.survivors += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.abelian
            + self.generator_wolf_failed
            + self.word_wolf_failed
            + self.orbit_not_open
            + self.survivors
    }
}

/// Open-orbit test at the origin, then at a random integer point.
pub fn orbit_is_open<R: Rng>(spec: &GroupSpec, rng: &mut R) -> bool {
    let n = spec.dim();
    let algebra = centralizer_algebra(spec);
    if orbit_dimension(&algebra, &zero_vector(n)) == n {
        return true;
    }
    let point: Vector = (0..n)
        .map(|_| int(rng.gen_range(-POINT_BOUND..=POINT_BOUND)))
        .collect();
    orbit_dimension(&algebra, &point) == n
}

/// Runs the filter chain on one candidate.
pub fn classify<R: Rng>(spec: &GroupSpec, word_length: usize, rng: &mut R) -> Result<Outcome> {
    if first_nonzero_product(spec).is_none() {
        return Ok(Outcome::Abelian);
    }
    if !spec.generators().iter().all(wolf_passes) {
        return Ok(Outcome::GeneratorWolfFailed);
    }
    if !all_words_pass(spec, word_length, DEFAULT_WORD_CAP)? {
        return Ok(Outcome::WordWolfFailed);
    }
    if !orbit_is_open(spec, rng) {
        return Ok(Outcome::OrbitNotOpen);
    }
    Ok(Outcome::Survivor)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub signature: (usize, usize),
    pub budget: usize,
    pub seed: u64,
    pub found: Vec<GroupSpec>,
    pub found_trials: Vec<usize>,
    pub stats: SearchStats,
}

/// Samples `budget` generator pairs and keeps those with `A_i A_j ≠ 0` that
/// pass every filter. Trials run in parallel; trial `t` uses
/// [`trial_rng`]`(seed, t)`, so results do not depend on scheduling.
pub fn search_nonabelian(
    signature: (usize, usize),
    budget: usize,
    seed: u64,
) -> Result<SearchReport> {
    let (p, s) = signature;
    let sampler = Sampler::new(p, s, DEFAULT_ENTRY_BOUND)?;
    let params = SampleParams::default();
    let outcomes: Vec<(Outcome, Option<GroupSpec>)> = (0..budget)
        .into_par_iter()
        .map(|t| -> Result<_> {
            let mut rng = trial_rng(seed, t as u64);
            let spec = sampler.sample(
                &params,
                &format!("survivor_{p}_{s}_seed{seed}_trial{t}"),
                &mut rng,
            )?;
            let outcome = classify(&spec, SEARCH_WORD_LENGTH, &mut rng)?;
            Ok((outcome, (outcome == Outcome::Survivor).then_some(spec)))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    let mut found_trials = Vec::new();
    for (t, (outcome, spec)) in outcomes.into_iter().enumerate() {
        stats.record(outcome);
        if let Some(spec) = spec {
            found.push(spec);
            found_trials.push(t);
        }
    }
    Ok(SearchReport {
        signature,
        budget,
        seed,
        found,
        found_trials,
        stats,
    })
}

#[derive(Serialize)]
struct SearchReportJson {
    schema: u32,
    signature: [usize; 2],
    budget: usize,
    seed: u64,
    stats: SearchStats,
    found_trials: Vec<usize>,
    found: Vec<GroupSpecFile>,
}

impl SearchReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SearchReportJson {
            schema: SCHEMA_VERSION,
            signature: [self.signature.0, self.signature.1],
            budget: self.budget,
            seed: self.seed,
            stats: self.stats,
            found_trials: self.found_trials.clone(),
            found: self
                .found
                .iter()
                .map(GroupSpecFile::from_group_spec)
                .collect(),
        })
        .expect("search report serializes")
    }
}

/// Per-signature search results over `s ≤ s_max`, `p ≤ p_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanSummary {
    pub reports: Vec<SearchReport>,
    /// Survivors found at `s ≤ 3`; each one indicates a filter defect.
    pub violations: Vec<GroupSpec>,
}

impl ScanSummary {
    pub fn total_survivors(&self) -> usize {
        self.reports.iter().map(|r| r.found.len()).sum()
    }
}

/// Runs [`search_nonabelian`] over every signature with `s ≤ s_max` and
/// `p ≤ p_max` (skipping the empty one).
pub fn theorem_scan(s_max: usize, p_max: usize, budget: usize, seed: u64) -> Result<ScanSummary> {
    let mut reports = Vec::new();
    let mut violations = Vec::new();
    for s in 0..=s_max {
        for p in 0..=p_max {
            if p + s == 0 {
                continue;
            }
            let report = search_nonabelian((p, s), budget, seed)?;
            if s <= 3 {
                violations.extend(report.found.iter().cloned());
            }
            reports.push(report);
        }
    }
    Ok(ScanSummary {
        reports,
        violations,
    })
}

/// Rational entries of a sampled matrix are integers; handy for callers
/// that want to inspect candidates without fractions.
pub fn is_integral(m: &Matrix) -> bool {
    m.entries().iter().all(Scalar::is_integer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::wolf_check;
    use crate::holonomy::abelian_report;

    #[test]
    fn pools_contain_only_isotropic_vectors() {
        let pool = isotropic_pool(2, 2, 2);
        assert!(pool.iter().all(|v| diag_pair(2, v, v) == 0));
        assert!(pool.contains(&vec![1, 0, 1, 0]));
        assert!(pool.contains(&vec![0, 0, 0, 0]));
        assert_eq!(isotropic_pool(3, 0, 2), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn witt_standard_gram_has_requested_signature() {
        for (p, s, k) in [(2, 2, 2), (4, 4, 2), (3, 1, 1), (2, 0, 0)] {
            let g = witt_standard_gram(p, s, k);
            assert_eq!(crate::form::signature_of(&g).unwrap(), (p, s));
        }
    }

    #[test]
    fn definite_signature_gives_pure_translations() {
        for seed in 0..20 {
            let spec = sample_generators((2, 0), 2, seed).unwrap();
            assert!(spec
                .generators()
                .iter()
                .all(|g| g.nilpotent_part().is_zero()));
        }
        let params = SampleParams {
            k: Some(0),
            require_nonzero_b: true,
            ..SampleParams::default()
        };
        assert!(matches!(
            sample_generators_with((2, 0), &params, 1),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn split_signature_yields_skew_c_candidates() {
        let params = SampleParams {
            k: Some(2),
            generators: 1,
            ..SampleParams::default()
        };
        for seed in 0..10 {
            let spec = sample_generators_with((2, 2), &params, seed).unwrap();
            let g = &spec.generators()[0];
            assert!(wolf_check(g).passed());
            let a = g.nilpotent_part();
            assert!(a.block(0, 2, 2, 2).is_skew_symmetric());
            assert!(abelian_report(&spec).unwrap().abelian);
        }
    }

    #[test]
    fn nonzero_b_in_signature_44() {
        let params = SampleParams {
            k: Some(2),
            require_nonzero_b: true,
            ..SampleParams::default()
        };
        for seed in 0..10 {
            let spec = sample_generators_with((4, 4), &params, seed).unwrap();
            for g in spec.generators() {
                assert!(wolf_check(g).passed());
                assert!(!g.nilpotent_part().block(2, 6, 4, 2).is_zero());
                assert!(is_integral(g.linear()));
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_generators((3, 2), 2, 42).unwrap();
        let b = sample_generators((3, 2), 2, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn small_scan_has_no_survivors() {
        let summary = theorem_scan(1, 2, 200, 3).unwrap();
        assert!(summary.violations.is_empty());
        assert_eq!(summary.total_survivors(), 0);
        assert!(summary.reports.iter().all(|r| r.stats.total() == 200));
    }

    #[test]
    fn definite_scan_is_all_abelian() {
        let summary = theorem_scan(0, 3, 50, 1).unwrap();
        assert!(summary.reports.iter().all(|r| r.stats.abelian == 50));
    }
}
