//! Holonomy invariants `U_Γ`, `U_Γ^⊥`, `U_0`, the abelianness decision,
//! block extraction in a Witt-adapted basis and the isotropic witness for
//! non-abelian holonomy.

use std::collections::HashSet;

use serde::Serialize;

use crate::affine::{for_each_word, wolf_passes, AffineIso, GroupSpec, DEFAULT_WORD_CAP};
use crate::error::{Error, Result};
use crate::form::WittBasis;
use crate::io::{matrix_to_q, subspace_to_q, Q, SCHEMA_VERSION};
use crate::linalg::{
    image, intersect_spaces, rref_basis, sum_spaces, zero_vector, Matrix, Subspace, Vector,
};

/// Word length used when none is given.
pub const DEFAULT_WORD_LENGTH: usize = 4;

/// `Σ im A_i` over the generators.
pub fn u_gamma(spec: &GroupSpec) -> Subspace {
    let n = spec.dim();
    let columns: Vec<Vector> = spec
        .nilpotent_parts()
        .iter()
        .flat_map(|a| a.column_vectors())
        .collect();
    rref_basis(&columns, n).expect("columns have ambient length")
}

/// `Σ im A` over every word of length `≤ max_len`.
pub fn u_gamma_from_words(spec: &GroupSpec, max_len: usize) -> Result<Subspace> {
    let n = spec.dim();
    let mut acc = Subspace::zero(n);
    for_each_word(spec, max_len, DEFAULT_WORD_CAP, |w| {
        acc = sum_spaces(&acc, &image(&w.element.nilpotent_part())).expect("same ambient space");
        true
    })?;
    Ok(acc)
}

pub fn u_gamma_perp(spec: &GroupSpec) -> Subspace {
    spec.form()
        .orth_complement(&u_gamma(spec))
        .expect("U_Γ lives in the ambient space")
}

/// `U_Γ ∩ U_Γ^⊥`.
pub fn u_zero(spec: &GroupSpec) -> Subspace {
    let ug = u_gamma(spec);
    let perp = spec
        .form()
        .orth_complement(&ug)
        .expect("U_Γ lives in the ambient space");
    let u0 = intersect_spaces(&ug, &perp).expect("same ambient space");
    debug_assert!(spec.form().is_totally_isotropic(&u0));
    u0
}

/// The four equivalent abelianness criteria, each evaluated on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianCriteria {
    /// Linear parts of all words up to the checked length commute pairwise.
    pub commuting_linear_parts: bool,
    /// `A_i A_j = 0` for every ordered pair of generators.
    pub products_vanish: bool,
    /// `U_Γ` is totally isotropic.
    pub u_gamma_isotropic: bool,
    /// `U_0 = U_Γ`.
    pub u_zero_is_u_gamma: bool,
}

impl AbelianCriteria {
    pub const NAMES: [&'static str; 4] = [
        "commuting_linear_parts",
        "products_vanish",
        "u_gamma_isotropic",
        "u_zero_is_u_gamma",
    ];

    pub fn values(&self) -> [bool; 4] {
        [
            self.commuting_linear_parts,
            self.products_vanish,
            self.u_gamma_isotropic,
            self.u_zero_is_u_gamma,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let v = self.values();
        v.iter().all(|&b| b == v[0])
    }

    /// First pair of criteria that disagree, if any.
    pub fn disagreement(&self) -> Option<(usize, usize)> {
        let v = self.values();
        (1..4).find(|&i| v[i] != v[0]).map(|i| (0, i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyReport {
    pub u_gamma: Subspace,
    pub u_gamma_perp: Subspace,
    pub u_zero: Subspace,
    pub criteria: AbelianCriteria,
    pub abelian: bool,
    pub word_length: usize,
    /// Lowest ordered generator pair `(i, j)` with `A_i A_j ≠ 0`.
    pub product_witness: Option<(usize, usize)>,
    /// Labels of two words whose linear parts do not commute.
    pub commutator_witness: Option<(String, String)>,
}

/// [`abelian_report_with`] at [`DEFAULT_WORD_LENGTH`].
pub fn abelian_report(spec: &GroupSpec) -> Result<HolonomyReport> {
    abelian_report_with(spec, DEFAULT_WORD_LENGTH)
}

/// Evaluates all four criteria and fails hard if they disagree.
pub fn abelian_report_with(spec: &GroupSpec, word_length: usize) -> Result<HolonomyReport> {
    let form = spec.form();
    let ug = u_gamma(spec);
    let ug_perp = form.orth_complement(&ug)?;
    let u0 = intersect_spaces(&ug, &ug_perp)?;

    let commutator_witness = non_commuting_words(spec, word_length)?;
    let product_witness = first_nonzero_product(spec);
    let criteria = AbelianCriteria {
        commuting_linear_parts: commutator_witness.is_none(),
        products_vanish: product_witness.is_none(),
        u_gamma_isotropic: form.is_totally_isotropic(&ug),
        u_zero_is_u_gamma: u0 == ug,
    };
    if let Some((i, j)) = criteria.disagreement() {
        let v = criteria.values();
        return Err(Error::CriteriaDisagree {
            first: AbelianCriteria::NAMES[i],
            first_value: v[i],
            second: AbelianCriteria::NAMES[j],
            second_value: v[j],
        });
    }
    Ok(HolonomyReport {
        abelian: criteria.products_vanish,
        u_gamma: ug,
        u_gamma_perp: ug_perp,
        u_zero: u0,
        criteria,
        word_length,
        product_witness,
        commutator_witness,
    })
}

/// Lowest ordered pair `(i, j)` (row-major) with `A_i A_j ≠ 0`.
pub fn first_nonzero_product(spec: &GroupSpec) -> Option<(usize, usize)> {
    let parts = spec.nilpotent_parts();
    let k = parts.len();
    (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .find(|&(i, j)| !(&parts[i] * &parts[j]).is_zero())
}

fn non_commuting_words(spec: &GroupSpec, max_len: usize) -> Result<Option<(String, String)>> {
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut distinct: Vec<(String, Matrix)> = Vec::new();
    let mut witness = None;
    for_each_word(spec, max_len, DEFAULT_WORD_CAP, |w| {
        let l = w.element.linear();
        if !seen.insert(l.clone()) {
            return true;
        }
        for (label, m) in &distinct {
            if l * m != m * l {
                witness = Some((label.clone(), w.label()));
                return false;
            }
        }
        distinct.push((w.label(), l.clone()));
        true
    })?;
    Ok(witness)
}

/// A generator's nilpotent part in a Witt-adapted basis, split into the
/// `B` (`W_0 ← U_0*`) and `C` (`U_0 ← U_0*`) blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    pub witt: WittBasis,
    pub conjugated: Matrix,
    pub b_block: Matrix,
    pub c_block: Matrix,
    /// Every block outside the `U_0 ← W_0`, `U_0 ← U_0*`, `W_0 ← U_0*` positions is zero.
    pub zero_pattern_ok: bool,
    /// The `U_0 ← W_0` block equals `−Bᵀ·Ĩ`.
    pub coupling_ok: bool,
    pub c_skew_ok: bool,
    /// `Bᵀ·Ĩ·B = 0`: the columns of `B` are isotropic and mutually orthogonal.
    pub b_columns_ok: bool,
}

impl BlockForm {
    pub fn all_ok(&self) -> bool {
        self.zero_pattern_ok && self.coupling_ok && self.c_skew_ok && self.b_columns_ok
    }

    /// Rank of the `B` block.
    pub fn b_rank(&self) -> usize {
        self.b_block.rank()
    }
}

/// Splits `g`'s nilpotent part in the given adapted basis. No precondition check.
pub fn block_form_in(witt: &WittBasis, g: &AffineIso) -> BlockForm {
    let (k, m) = (witt.k(), witt.w_dim());
    let n = 2 * k + m;
    let conj = witt.conjugate(&g.nilpotent_part());
    let b_block = conj.block(k, k + m, m, k);
    let c_block = conj.block(0, k + m, k, k);
    let top = conj.block(0, k, k, m);
    let zero_pattern_ok = conj.block(0, 0, n, k).is_zero()
        && conj.block(k, k, m, m).is_zero()
        && conj.block(k + m, 0, k, n).is_zero();
    let expected_top = -&(&b_block.transpose() * witt.i_tilde());
    let coupling_ok = top == expected_top;
    let c_skew_ok = c_block.is_skew_symmetric();
    let b_columns_ok = (&(&b_block.transpose() * witt.i_tilde()) * &b_block).is_zero();
    BlockForm {
        witt: witt.clone(),
        conjugated: conj,
        b_block,
        c_block,
        zero_pattern_ok,
        coupling_ok,
        c_skew_ok,
        b_columns_ok,
    }
}

/// Block form of `g` in the adapted basis built from `U_0` of `spec`.
/// Requires `g` to pass the Wolf conditions.
pub fn block_form(spec: &GroupSpec, g: &AffineIso) -> Result<BlockForm> {
    if !wolf_passes(g) {
        return Err(Error::Precondition(
            "element fails the Wolf conditions".into(),
        ));
    }
    let witt = spec.form().witt_extend(&u_zero(spec))?;
    Ok(block_form_in(&witt, g))
}

/// Totally isotropic `W′ ⊕ U_0` of dimension at least four, built from two
/// independent columns of a nonzero `B` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicWitness {
    /// Generator pair `(i, j)` with `A_i A_j ≠ 0`.
    pub pair: (usize, usize),
    /// Column indices of `B_i` spanning `W′`.
    pub columns: (usize, usize),
    /// The chosen columns in ambient coordinates.
    pub vectors: Vec<Vector>,
    pub subspace: Subspace,
    pub dim: usize,
    pub b_rank: usize,
}

/// `None` for abelian holonomy; otherwise the witness or the step that failed.
pub fn index_witness(
    spec: &GroupSpec,
    report: &HolonomyReport,
) -> Result<Option<IsotropicWitness>> {
    if report.abelian {
        return Ok(None);
    }
    let form = spec.form();
    let (i, j) = report
        .product_witness
        .ok_or_else(|| Error::Witness("locate pair with A_i A_j != 0".into()))?;
    let witt = form.witt_extend(&report.u_zero)?;
    let gens = spec.generators();
    let bi = block_form_in(&witt, &gens[i]);
    let bj = block_form_in(&witt, &gens[j]);
    if !bi.all_ok() || !bj.all_ok() {
        return Err(Error::Witness("block form of the pair".into()));
    }
    let b_rank = bi.b_rank();
    if b_rank < 2 {
        return Err(Error::Witness("rank B_i >= 2".into()));
    }

    let b_cols = bi.b_block.column_vectors();
    let mut chosen: Vec<usize> = Vec::new();
    for (c, col) in b_cols.iter().enumerate() {
        let mut trial: Vec<Vector> = chosen.iter().map(|&x| b_cols[x].clone()).collect();
        trial.push(col.clone());
        if rref_basis(&trial, witt.w_dim())?.dim() == trial.len() {
            chosen.push(c);
            if chosen.len() == 2 {
                break;
            }
        }
    }
    let (k, m) = (witt.k(), witt.w_dim());
    let vectors: Vec<Vector> = chosen
        .iter()
        .map(|&c| {
            let mut coords = zero_vector(2 * k + m);
            for (a, x) in b_cols[c].iter().enumerate() {
                coords[k + a] = x.clone();
            }
            witt.to_ambient(&coords)
        })
        .collect();
    let w_prime = rref_basis(&vectors, form.dim())?;
    let subspace = sum_spaces(&w_prime, &report.u_zero)?;
    if !form.is_totally_isotropic(&subspace) {
        return Err(Error::Witness("W' + U_0 totally isotropic".into()));
    }
    let dim = subspace.dim();
    if dim < 4 {
        return Err(Error::Witness("dim(W' + U_0) >= 4".into()));
    }
    if form.max_isotropic_bound() < dim {
        return Err(Error::Witness(
            "isotropic dimension within min(p, s)".into(),
        ));
    }
    Ok(Some(IsotropicWitness {
        pair: (i, j),
        columns: (chosen[0], chosen[1]),
        vectors,
        subspace,
        dim,
        b_rank,
    }))
}

#[derive(Serialize)]
struct CriteriaJson {
    commuting_linear_parts: bool,
    products_vanish: bool,
    u_gamma_isotropic: bool,
    u_zero_is_u_gamma: bool,
}

#[derive(Serialize)]
struct HolonomyReportJson<'a> {
    schema: u32,
    name: &'a str,
    signature: [usize; 2],
    word_length: usize,
    u_gamma: Vec<Vec<Q>>,
    u_gamma_perp: Vec<Vec<Q>>,
    u_zero: Vec<Vec<Q>>,
    criteria: CriteriaJson,
    abelian: bool,
    product_witness: Option<[usize; 2]>,
    commutator_witness: Option<[String; 2]>,
}

impl HolonomyReport {
    pub fn to_json(&self, spec: &GroupSpec) -> serde_json::Value {
        let (p, s) = spec.form().signature();
        let c = self.criteria;
        serde_json::to_value(HolonomyReportJson {
            schema: SCHEMA_VERSION,
            name: spec.name(),
            signature: [p, s],
            word_length: self.word_length,
            u_gamma: subspace_to_q(&self.u_gamma),
            u_gamma_perp: subspace_to_q(&self.u_gamma_perp),
            u_zero: subspace_to_q(&self.u_zero),
            criteria: CriteriaJson {
                commuting_linear_parts: c.commuting_linear_parts,
                products_vanish: c.products_vanish,
                u_gamma_isotropic: c.u_gamma_isotropic,
                u_zero_is_u_gamma: c.u_zero_is_u_gamma,
            },
            abelian: self.abelian,
            product_witness: self.product_witness.map(|(i, j)| [i, j]),
            commutator_witness: self.commutator_witness.clone().map(|(a, b)| [a, b]),
        })
        .expect("report serializes")
    }
}

#[derive(Serialize)]
struct BlockFormJson {
    k: usize,
    w_dim: usize,
    change_of_basis: Vec<Vec<Q>>,
    i_tilde: Vec<Vec<Q>>,
    conjugated: Vec<Vec<Q>>,
    b_block: Vec<Vec<Q>>,
    c_block: Vec<Vec<Q>>,
    zero_pattern_ok: bool,
    coupling_ok: bool,
    c_skew_ok: bool,
    b_columns_ok: bool,
}

impl BlockForm {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BlockFormJson {
            k: self.witt.k(),
            w_dim: self.witt.w_dim(),
            change_of_basis: matrix_to_q(self.witt.change_of_basis()),
            i_tilde: matrix_to_q(self.witt.i_tilde()),
            conjugated: matrix_to_q(&self.conjugated),
            b_block: matrix_to_q(&self.b_block),
            c_block: matrix_to_q(&self.c_block),
            zero_pattern_ok: self.zero_pattern_ok,
            coupling_ok: self.coupling_ok,
            c_skew_ok: self.c_skew_ok,
            b_columns_ok: self.b_columns_ok,
        })
        .expect("block form serializes")
    }
}

#[derive(Serialize)]
struct WitnessJson {
    pair: [usize; 2],
    columns: [usize; 2],
    vectors: Vec<Vec<Q>>,
    subspace: Vec<Vec<Q>>,
    dim: usize,
    b_rank: usize,
}

impl IsotropicWitness {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WitnessJson {
            pair: [self.pair.0, self.pair.1],
            columns: [self.columns.0, self.columns.1],
            vectors: self
                .vectors
                .iter()
                .map(|v| crate::io::vector_to_q(v))
                .collect(),
            subspace: subspace_to_q(&self.subspace),
            dim: self.dim,
            b_rank: self.b_rank,
        })
        .expect("witness serializes")
    }
}
