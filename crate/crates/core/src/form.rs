//! Nondegenerate symmetric bilinear forms of signature `(p, s)` and
//! Witt-adapted bases `U_0 ⊕ W_0 ⊕ U_0*`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    add_vectors, dot, kernel, rref_basis, scale_vector, sub_vectors, unit_vector, Matrix, Scalar,
    Subspace, Vector,
};

/// Symmetric nondegenerate Gram matrix together with its signature.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: Matrix,
    positive: usize,
    negative: usize,
}

impl BilinearForm {
    /// Validates `gram` and computes its signature.
    pub fn new(gram: Matrix) -> Result<Self> {
        let (positive, negative) = signature_of(&gram)?;
        Ok(BilinearForm {
            gram,
            positive,
            negative,
        })
    }

    /// Like [`BilinearForm::new`], but also checks a declared signature.
    pub fn with_signature(gram: Matrix, p: usize, s: usize) -> Result<Self> {
        let form = BilinearForm::new(gram)?;
        if form.signature() != (p, s) {
            return Err(Error::SignatureMismatch(p, s, form.positive, form.negative));
        }
        Ok(form)
    }

    /// `diag(+1 × p, −1 × s)`. Panics when `p + s == 0`.
    pub fn standard(p: usize, s: usize) -> Self {
        assert!(p + s >= 1, "a form needs at least one dimension");
        let diag: Vec<Scalar> = (0..p)
            .map(|_| Scalar::one())
            .chain((0..s).map(|_| -Scalar::one()))
            .collect();
        BilinearForm {
            gram: Matrix::diagonal(&diag),
            positive: p,
            negative: s,
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.positive, self.negative)
    }

    /// `xᵀ · gram · y`.
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let n = self.dim();
        for len in [x.len(), y.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        Ok(self.pair(x, y))
    }

    /// Unchecked pairing; panics on length mismatch.
    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.gram.mul_vec(y))
    }

    /// `{y : ⟨x, y⟩ = 0 for all x in S}`.
    pub fn orth_complement(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        let rows: Vec<Vector> = s.basis().iter().map(|b| self.gram.mul_vec(b)).collect();
        Ok(kernel(&Matrix::from_rows(rows, self.dim())?))
    }

    /// Pairwise test on the basis, self-pairings included.
    pub fn is_totally_isotropic(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| (i..b.len()).all(|j| self.pair(&b[i], &b[j]).is_zero()))
    }

    /// Same predicate computed as `S ⊆ S^⊥`.
    pub fn is_totally_isotropic_by_containment(&self, s: &Subspace) -> bool {
        match self.orth_complement(s) {
            Ok(perp) => s.is_subspace_of(&perp),
            Err(_) => false,
        }
    }

    /// Maximal dimension of a totally isotropic subspace, `min(p, s)`.
    pub fn max_isotropic_bound(&self) -> usize {
        self.positive.min(self.negative)
    }

    /// Extends a totally isotropic `u0` to an adapted basis
    /// `U_0 ⊕ W_0 ⊕ U_0*` with Gram `[[0,0,I],[0,Ĩ,0],[I,0,0]]`.
    ///
    /// The dual block is found by solving `⟨u_i, d_j⟩ = δ_ij` with the
    /// canonical solution, then corrected by `d_i ← d_i − ½ Σ_j ⟨d_i, d_j⟩ u_j`,
    /// which makes the dual block totally isotropic without touching the
    /// pairings with `U_0`.
    pub fn witt_extend(&self, u0: &Subspace) -> Result<WittBasis> {
        let n = self.dim();
        if u0.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: u0.ambient_dim(),
            });
        }
        if !self.is_totally_isotropic(u0) {
            return Err(Error::NotTotallyIsotropic);
        }
        let us = u0.basis();
        let k = us.len();
        let pairing_rows = Matrix::from_rows(us.iter().map(|u| self.gram.mul_vec(u)).collect(), n)?;
        let mut duals: Vec<Vector> = (0..k)
            .map(|i| {
                crate::linalg::solve_linear(&pairing_rows, &unit_vector(k, i))
                    .expect("independent isotropic rows always admit a dual")
            })
            .collect();
        let half = Scalar::new(1.into(), 2.into());
        let gram_of_duals: Vec<Vec<Scalar>> = duals
            .iter()
            .map(|d| duals.iter().map(|e| self.pair(d, e)).collect())
            .collect();
        for (i, d) in duals.iter_mut().enumerate() {
            for (j, u) in us.iter().enumerate() {
                let c = &gram_of_duals[i][j] * &half;
                if !c.is_zero() {
                    *d = sub_vectors(d, &scale_vector(&c, u));
                }
            }
        }

        let mut hyperbolic = us.to_vec();
        hyperbolic.extend(duals.iter().cloned());
        let w0 = self.orth_complement(&rref_basis(&hyperbolic, n)?)?;
        let ws = w0.basis().to_vec();
        let w_dim = ws.len();
        let mut i_tilde = Matrix::zeros(w_dim, w_dim);
        for a in 0..w_dim {
            for b in 0..w_dim {
                i_tilde.set(a, b, self.pair(&ws[a], &ws[b]));
            }
        }

        let mut columns = us.to_vec();
        columns.extend(ws);
        columns.extend(duals);
        let change_of_basis = Matrix::from_columns(&columns, n)?;
        let inverse = change_of_basis.inverse().expect("adapted basis is a basis");
        Ok(WittBasis {
            form: self.clone(),
            k,
            w_dim,
            change_of_basis,
            inverse,
            i_tilde,
        })
    }
}

/// Exact signature `(p, s)` by symmetric Gaussian congruence.
pub fn signature_of(gram: &Matrix) -> Result<(usize, usize)> {
    if !gram.is_square() {
        return Err(Error::DimensionMismatch {
            expected: gram.rows(),
            found: gram.cols(),
        });
    }
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = gram.rows();
    let mut a = gram.row_vectors();
    let (mut pos, mut neg) = (0, 0);
    for step in 0..n {
        let pivot = match (step..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (step..n)
                    .flat_map(|i| (step..n).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero())
                else {
                    return Err(Error::Degenerate);
                };
                // row/column i += row/column j puts 2·a_ij on the diagonal
                let row_j = a[j].clone();
                a[i] = add_vectors(&a[i], &row_j);
                for row in a.iter_mut() {
                    let t = row[j].clone();
                    row[i] += t;
                }
                i
            }
        };
        if pivot != step {
            a.swap(pivot, step);
            for row in a.iter_mut() {
                row.swap(pivot, step);
            }
        }
        let d = a[step][step].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in step + 1..n {
            if a[r][step].is_zero() {
                continue;
            }
            let f = &a[r][step] / &d;
            for c in step + 1..n {
                let delta = &f * &a[step][c];
                a[r][c] -= delta;
            }
        }
        for r in step + 1..n {
            a[r][step] = Scalar::zero();
            a[step][r] = Scalar::zero();
        }
    }
    Ok((pos, neg))
}

/// Adapted basis for `R^n = U_0 ⊕ W_0 ⊕ U_0*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittBasis {
    form: BilinearForm,
    k: usize,
    w_dim: usize,
    change_of_basis: Matrix,
    inverse: Matrix,
    i_tilde: Matrix,
}

impl WittBasis {
    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    /// `dim U_0`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn w_dim(&self) -> usize {
        self.w_dim
    }

    /// Columns are the adapted basis vectors in the order `U_0`, `W_0`, `U_0*`.
    pub fn change_of_basis(&self) -> &Matrix {
        &self.change_of_basis
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    /// Gram matrix of the form restricted to `W_0`.
    pub fn i_tilde(&self) -> &Matrix {
        &self.i_tilde
    }

    pub fn u0_vectors(&self) -> Vec<Vector> {
        (0..self.k)
            .map(|j| self.change_of_basis.column(j))
            .collect()
    }

    pub fn w0_vectors(&self) -> Vec<Vector> {
        (self.k..self.k + self.w_dim)
            .map(|j| self.change_of_basis.column(j))
            .collect()
    }

    pub fn dual_vectors(&self) -> Vec<Vector> {
        let start = self.k + self.w_dim;
        (start..start + self.k)
            .map(|j| self.change_of_basis.column(j))
            .collect()
    }

    /// `Pᵀ · gram · P`.
    pub fn adapted_gram(&self) -> Matrix {
        &(&self.change_of_basis.transpose() * self.form.gram()) * &self.change_of_basis
    }

    /// Expected Gram in adapted coordinates: `[[0,0,I],[0,Ĩ,0],[I,0,0]]`.
    pub fn block_gram(&self) -> Matrix {
        let (k, m) = (self.k, self.w_dim);
        let mut g = Matrix::zeros(2 * k + m, 2 * k + m);
        for i in 0..k {
            g.set(i, k + m + i, Scalar::one());
            g.set(k + m + i, i, Scalar::one());
        }
        for a in 0..m {
            for b in 0..m {
                g.set(k + a, k + b, self.i_tilde.get(a, b).clone());
            }
        }
        g
    }

    pub fn has_block_shape(&self) -> bool {
        self.adapted_gram() == self.block_gram()
    }

    /// Expresses a linear map in adapted coordinates, `P⁻¹ · M · P`.
    pub fn conjugate(&self, m: &Matrix) -> Matrix {
        &(&self.inverse * m) * &self.change_of_basis
    }

    /// Maps adapted coordinates back to ambient coordinates.
    pub fn to_ambient(&self, coords: &[Scalar]) -> Vector {
        self.change_of_basis.mul_vec(coords)
    }
}
