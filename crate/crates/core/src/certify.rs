//! Certificates that the development image is translationally isotropic,
//! and an independent re-checker.
//!
//! `T` (translations preserving the domain) has no finite representation.
//! The certificate instead proves that `U_0^⊥` consists of translations in
//! the centralizer, which preserve every centralizer orbit. For abelian
//! holonomy that gives `T^⊥ ⊆ U_0 ⊆ U_0^⊥ ⊆ T`.
//!
//! The verifier only uses matrix products, pairings and its own rank
//! routine; it never calls the subspace constructors used to build the
//! certificate.

use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::affine::{wolf_passes, GroupSpec};
use crate::centralizer::{centralizer_translations, u0perp_centralizes};
use crate::error::{Error, Result};
use crate::holonomy::{abelian_report_with, index_witness, HolonomyReport, DEFAULT_WORD_LENGTH};
use crate::io::{q_to_vector, subspace_to_q, vector_to_q, GroupSpecFile, Q, SCHEMA_VERSION};
use crate::linalg::{dot, Matrix, Scalar, Vector};

pub const STATUS_ISOTROPIC: &str = "translationally isotropic";
pub const STATUS_UNDETERMINED: &str = "undetermined by this method";

/// Step identifiers, in chain order.
pub const CHAIN_IDS: [&str; 5] = ["a", "b", "c", "d", "e"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriteriaRecord {
    pub commuting_linear_parts: bool,
    pub products_vanish: bool,
    pub u_gamma_isotropic: bool,
    pub u_zero_is_u_gamma: bool,
}

impl CriteriaRecord {
    fn values(&self) -> [bool; 4] {
        [
            self.commuting_linear_parts,
            self.products_vanish,
            self.u_gamma_isotropic,
            self.u_zero_is_u_gamma,
        ]
    }
}

/// Holonomy data as embedded in a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HolonomyEvidence {
    pub u_gamma: Vec<Vec<Q>>,
    pub u_gamma_perp: Vec<Vec<Q>>,
    pub u_zero: Vec<Vec<Q>>,
    pub criteria: CriteriaRecord,
    pub abelian: bool,
    pub product_witness: Option<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainStep {
    pub id: String,
    pub claim: String,
    pub reference: String,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    pub pair: [usize; 2],
    pub vectors: Vec<Vec<Q>>,
    pub subspace: Vec<Vec<Q>>,
    pub dim: usize,
}

/// Self-contained, machine-checkable evidence object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsotropyCertificate {
    pub schema: u32,
    pub spec: GroupSpecFile,
    pub abelian_evidence: HolonomyEvidence,
    /// Basis of translations shown to lie in `T`: the centralizing translations `U_Γ^⊥`.
    pub t_lower: Vec<Vec<Q>>,
    pub chain: Vec<ChainStep>,
    pub verdict: bool,
    pub status: String,
    pub failing_criterion: Option<String>,
    pub witness: Option<WitnessRecord>,
}

impl IsotropyCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        IsotropyCertificate::from_json(&std::fs::read_to_string(path)?)
    }
}

fn step(id: &str, claim: &str, reference: &str, verified: bool) -> ChainStep {
    ChainStep {
        id: id.into(),
        claim: claim.into(),
        reference: reference.into(),
        verified,
    }
}

/// [`translational_isotropy_certificate_with`] at the default word length.
pub fn translational_isotropy_certificate(spec: &GroupSpec) -> Result<IsotropyCertificate> {
    translational_isotropy_certificate_with(spec, DEFAULT_WORD_LENGTH)
}

/// Builds the certificate. Generators must pass the Wolf conditions.
pub fn translational_isotropy_certificate_with(
    spec: &GroupSpec,
    word_length: usize,
) -> Result<IsotropyCertificate> {
    if let Some(i) = spec.generators().iter().position(|g| !wolf_passes(g)) {
        return Err(Error::Precondition(format!(
            "generator {} fails the Wolf conditions",
            i + 1
        )));
    }
    let report = abelian_report_with(spec, word_length)?;
    let form = spec.form();
    let n = spec.dim();
    let u0_perp = form.orth_complement(&report.u_zero)?;
    let t_lower = centralizer_translations(spec);

    let a = report.u_zero == report.u_gamma;
    let b = u0_perp == report.u_gamma_perp && t_lower == report.u_gamma_perp;
    let c = u0perp_centralizes(spec, &report.u_zero).holds;
    let d = c && u0_perp.is_subspace_of(&t_lower);
    let e = report.u_zero.is_subspace_of(&t_lower)
        && form.is_totally_isotropic(&report.u_zero)
        && report.u_zero.dim() + t_lower.dim() == n;
    let chain = vec![
        step(
            "a",
            "U_0 = U_Gamma",
            "holonomy criterion: U_0 equals U_Gamma",
            a,
        ),
        step(
            "b",
            "U_0^perp = U_Gamma^perp = intersection of ker A_i",
            "orthogonal complement of (a)",
            b,
        ),
        step(
            "c",
            "every translation in U_0^perp commutes with every generator",
            "(I+A,v)(I,u) = (I+A,u+Au+v) equals (I,u)(I+A,v) iff Au = 0",
            c,
        ),
        step(
            "d",
            "U_0^perp is contained in T",
            "translations in the centralizer preserve every centralizer orbit",
            d,
        ),
        step(
            "e",
            "T^perp within U_0 within U_0^perp within T",
            "orthocomplement of (d) plus total isotropy of U_0",
            e,
        ),
    ];
    let verdict = report.abelian && chain.iter().all(|s| s.verified);

    let (failing_criterion, witness) = if report.abelian {
        (None, None)
    } else {
        let crit = report
            .product_witness
            .map(|(i, j)| format!("products_vanish: A_{} A_{} != 0", i + 1, j + 1))
            .unwrap_or_else(|| "products_vanish".to_string());
        let witness = index_witness(spec, &report)
            .ok()
            .flatten()
            .map(|w| WitnessRecord {
                pair: [w.pair.0, w.pair.1],
                vectors: w.vectors.iter().map(|v| vector_to_q(v)).collect(),
                subspace: subspace_to_q(&w.subspace),
                dim: w.dim,
            });
        (Some(crit), witness)
    };

    Ok(IsotropyCertificate {
        schema: SCHEMA_VERSION,
        spec: GroupSpecFile::from_group_spec(spec),
        abelian_evidence: evidence(&report),
        t_lower: subspace_to_q(&t_lower),
        chain,
        verdict,
        status: if verdict {
            STATUS_ISOTROPIC
        } else {
            STATUS_UNDETERMINED
        }
        .to_string(),
        failing_criterion,
        witness,
    })
}

fn evidence(report: &HolonomyReport) -> HolonomyEvidence {
    let c = report.criteria;
    HolonomyEvidence {
        u_gamma: subspace_to_q(&report.u_gamma),
        u_gamma_perp: subspace_to_q(&report.u_gamma_perp),
        u_zero: subspace_to_q(&report.u_zero),
        criteria: CriteriaRecord {
            commuting_linear_parts: c.commuting_linear_parts,
            products_vanish: c.products_vanish,
            u_gamma_isotropic: c.u_gamma_isotropic,
            u_zero_is_u_gamma: c.u_zero_is_u_gamma,
        },
        abelian: report.abelian,
        product_witness: report.product_witness.map(|(i, j)| [i, j]),
    }
}

/// Rank by plain Gaussian elimination, kept separate from `linalg`.
fn rank_of(vectors: &[Vector]) -> usize {
    let mut rows: Vec<Vector> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = &rows[r][c] / &rows[rank][c];
            let pivot = rows[rank].clone();
            for (x, y) in rows[r].iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

fn in_span(basis: &[Vector], v: &Vector) -> bool {
    let mut with = basis.to_vec();
    with.push(v.clone());
    rank_of(&with) == rank_of(basis)
}

fn pairing(gram: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    dot(x, &gram.mul_vec(y))
}

/// Reduced row echelon form: leading entries 1, strictly moving right, and
/// the only nonzero entry in their column. Such a basis is unique for its span.
fn is_reduced_echelon(rows: &[Vector]) -> bool {
    let mut last: Option<usize> = None;
    for (i, row) in rows.iter().enumerate() {
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if last.is_some_and(|l| lead <= l) || !row[lead].is_one() {
            return false;
        }
        if rows
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && !other[lead].is_zero())
        {
            return false;
        }
        last = Some(lead);
    }
    true
}

fn records(rows: &[Vec<Q>], n: usize, what: &str) -> Result<Vec<Vector>> {
    rows.iter()
        .map(|r| {
            if r.len() != n {
                Err(Error::MalformedCertificate(format!(
                    "{what} vector of length {} in dimension {n}",
                    r.len()
                )))
            } else {
                Ok(q_to_vector(r))
            }
        })
        .collect()
}

/// Re-checks every claim from the raw data. `Ok(false)` means a claim is
/// wrong; `Err` means the certificate cannot be read.
pub fn verify_certificate(cert: &IsotropyCertificate) -> Result<bool> {
    if cert.schema != SCHEMA_VERSION {
        return Err(Error::MalformedCertificate(format!(
            "unsupported schema {}",
            cert.schema
        )));
    }
    let spec = cert
        .spec
        .to_group_spec()
        .map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    if cert.chain.len() != CHAIN_IDS.len()
        || cert.chain.iter().zip(CHAIN_IDS).any(|(s, id)| s.id != id)
    {
        return Err(Error::MalformedCertificate(
            "chain must list steps a through e".into(),
        ));
    }
    let n = spec.dim();
    let gram = spec.form().gram().clone();
    let ev = &cert.abelian_evidence;
    let u_gamma = records(&ev.u_gamma, n, "u_gamma")?;
    let u_gamma_perp = records(&ev.u_gamma_perp, n, "u_gamma_perp")?;
    let u_zero = records(&ev.u_zero, n, "u_zero")?;
    let t_lower = records(&cert.t_lower, n, "t_lower")?;
    if ![&u_gamma, &u_gamma_perp, &u_zero, &t_lower]
        .into_iter()
        .all(|b| is_reduced_echelon(b))
    {
        return Ok(false);
    }

    // internal consistency of the recorded verdicts
    let recorded = ev.criteria.values();
    if recorded.iter().any(|&b| b != ev.abelian) {
        return Ok(false);
    }
    if cert.verdict && !ev.abelian {
        return Ok(false);
    }

    let identity = Matrix::identity(n);
    let parts: Vec<(Matrix, Matrix, Vector)> = spec
        .generators()
        .iter()
        .map(|g| {
            (
                g.linear().clone(),
                g.linear() - &identity,
                g.translation().clone(),
            )
        })
        .collect();

    // U_Γ = Σ im A_i, with the recorded vectors as a basis
    let image_columns: Vec<Vector> = parts
        .iter()
        .flat_map(|(_, a, _)| a.column_vectors())
        .collect();
    let dim_ug = rank_of(&u_gamma);
    let ug_ok = dim_ug == u_gamma.len()
        && image_columns.iter().all(|c| in_span(&u_gamma, c))
        && u_gamma.iter().all(|u| in_span(&image_columns, u));
    if !ug_ok {
        return Ok(false);
    }

    // U_Γ^⊥ by pairings and dimension count
    let perp_of = |vs: &[Vector], basis: &[Vector], dim: usize| {
        rank_of(vs) == vs.len()
            && vs.len() + dim == n
            && vs
                .iter()
                .all(|x| basis.iter().all(|u| pairing(&gram, x, u).is_zero()))
    };
    if !perp_of(&u_gamma_perp, &u_gamma, dim_ug) {
        return Ok(false);
    }

    // U_0 = U_Γ ∩ U_Γ^⊥, sized by the radical of the Gram matrix on U_Γ
    let restricted: Vec<Vector> = u_gamma
        .iter()
        .map(|x| u_gamma.iter().map(|y| pairing(&gram, x, y)).collect())
        .collect();
    let radical_dim = dim_ug - rank_of(&restricted);
    let u0_ok = rank_of(&u_zero) == u_zero.len()
        && u_zero.len() == radical_dim
        && u_zero.iter().all(|z| {
            in_span(&u_gamma, z) && u_gamma.iter().all(|u| pairing(&gram, z, u).is_zero())
        });
    if !u0_ok {
        return Ok(false);
    }

    // criteria recomputed: generators commute, products vanish, U_Γ isotropic, U_0 = U_Γ
    let mut products_vanish = true;
    let mut first_pair = None;
    let mut commuting = true;
    for (i, (li, ai, _)) in parts.iter().enumerate() {
        for (j, (lj, aj, _)) in parts.iter().enumerate() {
            if !(ai * aj).is_zero() {
                products_vanish = false;
                first_pair.get_or_insert([i, j]);
            }
            if li * lj != lj * li {
                commuting = false;
            }
        }
    }
    let isotropic = restricted.iter().all(|r| r.iter().all(Zero::is_zero));
    let equal = u_zero.len() == dim_ug;
    if [commuting, products_vanish, isotropic, equal] != recorded
        || first_pair != ev.product_witness
    {
        return Ok(false);
    }

    // t_lower: explicit commutation (I+A,v)(I,t) = (I,t)(I+A,v), i.e. Lt + v = t + v
    let commutes = |t: &Vector| {
        parts.iter().all(|(l, _, v)| {
            let left: Vector = l.mul_vec(t).iter().zip(v).map(|(x, y)| x + y).collect();
            let right: Vector = t.iter().zip(v).map(|(x, y)| x + y).collect();
            left == right
        })
    };
    let t_ok = perp_of(&t_lower, &u_gamma, dim_ug) && t_lower.iter().all(commutes);
    if !t_ok {
        return Ok(false);
    }

    // chain steps
    let a = equal && u_zero.iter().all(|z| in_span(&u_gamma, z));
    let b = rank_of(&t_lower) + u_zero.len() == n
        && t_lower
            .iter()
            .all(|t| u_zero.iter().all(|z| pairing(&gram, t, z).is_zero()));
    let c = b && t_lower.iter().all(commutes);
    let d = c;
    let e = u_zero.iter().all(|z| in_span(&t_lower, z))
        && u_zero
            .iter()
            .all(|x| u_zero.iter().all(|y| pairing(&gram, x, y).is_zero()))
        && u_zero.len() + t_lower.len() == n;
    let computed = [a, b, c, d, e];
    if cert
        .chain
        .iter()
        .zip(computed)
        .any(|(s, ok)| s.verified != ok)
    {
        return Ok(false);
    }
    let verdict = ev.abelian && computed.iter().all(|&x| x);
    if cert.verdict != verdict {
        return Ok(false);
    }
    let status = if verdict {
        STATUS_ISOTROPIC
    } else {
        STATUS_UNDETERMINED
    };
    if cert.status != status {
        return Ok(false);
    }

    if let Some(w) = &cert.witness {
        let vectors = records(&w.subspace, n, "witness")?;
        let extra = records(&w.vectors, n, "witness")?;
        let (p, s) = spec.form().signature();
        let iso = vectors
            .iter()
            .all(|x| vectors.iter().all(|y| pairing(&gram, x, y).is_zero()));
        let sized =
            rank_of(&vectors) == w.dim && w.dim == vectors.len() && w.dim >= 4 && w.dim <= p.min(s);
        let pair_ok = first_pair == Some(w.pair);
        // U_0 ⊆ witness ⊆ U_Γ, spanned by U_0 and the recorded extra vectors
        let mut spanning = u_zero.clone();
        spanning.extend(extra.iter().cloned());
        let placed = is_reduced_echelon(&vectors)
            && vectors
                .iter()
                .all(|x| in_span(&u_gamma, x) && in_span(&spanning, x))
            && spanning.iter().all(|x| in_span(&vectors, x));
        if !(iso && sized && pair_ok && placed) {
            return Ok(false);
        }
    }
    Ok(true)
}
