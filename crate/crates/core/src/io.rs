//! Group-spec files and the JSON encoding shared by all reports.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`). On input, JSON
//! integers are also accepted; floating-point numbers are rejected.

use std::fmt;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::affine::GroupSpec;
use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::linalg::{format_scalar, int, parse_scalar, Matrix, Scalar, Subspace, Vector};

/// Version tag carried by every JSON document the crate writes.
pub const SCHEMA_VERSION: u32 = 1;

/// A rational entry in a JSON document.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Q(pub Scalar);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct QVisitor;

        impl Visitor<'_> for QVisitor {
            type Value = Q;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a \"num/den\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
                Ok(Q(int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
                Ok(Q(Scalar::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Q, E> {
                Err(E::custom(format!(
                    "floating-point entry {v} rejected; use \"num/den\""
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
                parse_scalar(v).map(Q).map_err(|e| E::custom(e.to_string()))
            }
        }

        deserializer.deserialize_any(QVisitor)
    }
}

pub fn vector_to_q(v: &[Scalar]) -> Vec<Q> {
    v.iter().cloned().map(Q).collect()
}

pub fn q_to_vector(v: &[Q]) -> Vector {
    v.iter().map(|q| q.0.clone()).collect()
}

pub fn matrix_to_q(m: &Matrix) -> Vec<Vec<Q>> {
    m.row_vectors().iter().map(|r| vector_to_q(r)).collect()
}

/// Rows of rationals to a matrix with `cols` columns.
pub fn q_to_matrix(rows: &[Vec<Q>], cols: usize) -> Result<Matrix> {
    Matrix::from_rows(rows.iter().map(|r| q_to_vector(r)).collect(), cols)
}

pub fn subspace_to_q(s: &Subspace) -> Vec<Vec<Q>> {
    s.basis().iter().map(|b| vector_to_q(b)).collect()
}

/// One generator as stored on disk: full linear part and translation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFile {
    pub linear: Vec<Vec<Q>>,
    pub translation: Vec<Q>,
}

/// On-disk group specification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub name: String,
    pub dim: usize,
    pub signature: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<Q>>>,
    pub generators: Vec<GeneratorFile>,
}

impl GroupSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        GroupSpecFile::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group spec serializes") + "\n"
    }

    /// Validates shapes, the form, and the isometry invariant of every generator.
    pub fn to_group_spec(&self) -> Result<GroupSpec> {
        let n = self.dim;
        let [p, s] = self.signature;
        if p + s != n {
            return Err(Error::Parse(format!(
                "signature ({p}, {s}) does not add up to dim {n}"
            )));
        }
        if n == 0 {
            return Err(Error::Parse("dimension must be positive".into()));
        }
        let form = match &self.gram {
            None => BilinearForm::standard(p, s),
            Some(rows) => {
                check_rows(rows, n, "gram")?;
                BilinearForm::with_signature(q_to_matrix(rows, n)?, p, s)?
            }
        };
        let parts = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                check_rows(&g.linear, n, &format!("generator {} linear part", i + 1))?;
                if g.translation.len() != n {
                    return Err(Error::Parse(format!(
                        "generator {} translation has length {}, expected {n}",
                        i + 1,
                        g.translation.len()
                    )));
                }
                Ok((q_to_matrix(&g.linear, n)?, q_to_vector(&g.translation)))
            })
            .collect::<Result<Vec<_>>>()?;
        GroupSpec::from_parts(self.name.clone(), form, parts)
    }

    /// Self-contained encoding; the Gram matrix is always written out.
    pub fn from_group_spec(spec: &GroupSpec) -> Self {
        let (p, s) = spec.form().signature();
        GroupSpecFile {
            name: spec.name().to_string(),
            dim: spec.dim(),
            signature: [p, s],
            gram: Some(matrix_to_q(spec.form().gram())),
            generators: spec
                .generators()
                .iter()
                .map(|g| GeneratorFile {
                    linear: matrix_to_q(g.linear()),
                    translation: vector_to_q(g.translation()),
                })
                .collect(),
        }
    }
}

fn check_rows(rows: &[Vec<Q>], n: usize, what: &str) -> Result<()> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("{what} must be {n}x{n}")));
    }
    Ok(())
}

/// Loads and validates a group-spec file.
pub fn load_group_spec(path: &Path) -> Result<GroupSpec> {
    GroupSpecFile::load(path)?.to_group_spec()
}
