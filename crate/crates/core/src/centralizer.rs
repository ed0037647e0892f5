//! Lie algebra of the centralizer of a group in the isometry group, the
//! centralizing translations, and the open-orbit test.
//!
//! An infinitesimal isometry `x ↦ Xx + w` commutes with `(I + A, v)` iff
//! `XA = AX` and `Xv = Aw`; it is an isometry iff `XᵀG + GX = 0`.

use num_traits::Zero;

use crate::affine::{AffineIso, GroupSpec};
use crate::linalg::{add_vectors, kernel, rref_basis, Matrix, Scalar, Subspace, Vector};

/// Translations commuting with every generator: `∩ ker A_i`.
pub fn centralizer_translations(spec: &GroupSpec) -> Subspace {
    let n = spec.dim();
    let rows: Vec<Vector> = spec
        .nilpotent_parts()
        .iter()
        .flat_map(|a| a.row_vectors())
        .collect();
    kernel(&Matrix::from_rows(rows, n).expect("rows have ambient length"))
}

/// Basis `(X, w)` of the centralizer algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerAlgebra {
    pub basis: Vec<(Matrix, Vector)>,
}

impl CentralizerAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Checks the three defining conditions for one pair.
    pub fn satisfies(spec: &GroupSpec, x: &Matrix, w: &[Scalar]) -> bool {
        let g = spec.form().gram();
        let skew = (&(&x.transpose() * g) + &(g * x)).is_zero();
        skew && spec.generators().iter().all(|gen| {
            let a = gen.nilpotent_part();
            x * &a == &a * x && x.mul_vec(gen.translation()) == a.mul_vec(w)
        })
    }
}

/// Solves the homogeneous system in the unknowns `(vec X, w)`, with `X`
/// flattened row-major, and returns the canonical basis.
pub fn centralizer_algebra(spec: &GroupSpec) -> CentralizerAlgebra {
    let n = spec.dim();
    let unknowns = n * n + n;
    let x_var = |i: usize, j: usize| i * n + j;
    let w_var = |i: usize| n * n + i;
    let g = spec.form().gram();
    let mut rows: Vec<Vector> = Vec::new();
    let new_row = || vec![Scalar::zero(); unknowns];

    for gen in spec.generators() {
        let a = gen.nilpotent_part();
        let v = gen.translation();
        // (XA − AX)_{ij} = Σ_c X_ic A_cj − A_ic X_cj
        for i in 0..n {
            for j in 0..n {
                let mut row = new_row();
                for c in 0..n {
                    row[x_var(i, c)] += a.get(c, j);
                    row[x_var(c, j)] -= a.get(i, c);
                }
                rows.push(row);
            }
        }
        // (Xv − Aw)_i = Σ_c X_ic v_c − A_ic w_c
        for i in 0..n {
            let mut row = new_row();
            for c in 0..n {
                row[x_var(i, c)] += &v[c];
                row[w_var(c)] -= a.get(i, c);
            }
            rows.push(row);
        }
    }
    // (XᵀG + GX)_{ij} = Σ_c X_ci G_cj + G_ic X_cj, symmetric so i ≤ j suffices
    for i in 0..n {
        for j in i..n {
            let mut row = new_row();
            for c in 0..n {
                row[x_var(c, i)] += g.get(c, j);
                row[x_var(c, j)] += g.get(i, c);
            }
            rows.push(row);
        }
    }

    let solutions = if rows.is_empty() {
        Subspace::full(unknowns)
    } else {
        kernel(&Matrix::from_rows(rows, unknowns).expect("equation rows have unknown count"))
    };
    let basis = solutions
        .basis()
        .iter()
        .map(|z| {
            let x = Matrix::from_rows((0..n).map(|i| z[i * n..(i + 1) * n].to_vec()).collect(), n)
                .expect("square block");
            (x, z[n * n..].to_vec())
        })
        .collect();
    CentralizerAlgebra { basis }
}

/// Dimension of `span{Xp + w}`; equal to `n` iff the identity component of
/// the centralizer has an open orbit through `p`.
pub fn orbit_dimension(algebra: &CentralizerAlgebra, p: &[Scalar]) -> usize {
    let n = p.len();
    let tangents: Vec<Vector> = algebra
        .basis
        .iter()
        .map(|(x, w)| add_vectors(&x.mul_vec(p), w))
        .collect();
    rref_basis(&tangents, n)
        .expect("tangent vectors have ambient length")
        .dim()
}

/// Outcome of testing whether the translations in `U_0^⊥` centralize the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizingTranslations {
    pub holds: bool,
    /// `(u, generator index, A·u)` for the first failure.
    pub witness: Option<(Vector, usize, Vector)>,
}

/// Checks `(I + A, v)(I, u) = (I, u)(I + A, v)` for each basis vector `u`
/// of `U_0^⊥` and each generator, by composing the affine maps.
pub fn u0perp_centralizes(spec: &GroupSpec, u_zero: &Subspace) -> CentralizingTranslations {
    let form = spec.form();
    let perp = form
        .orth_complement(u_zero)
        .expect("U_0 lives in the ambient space");
    for u in perp.basis() {
        let t = AffineIso::translation_by(form.clone(), u.clone());
        for (i, g) in spec.generators().iter().enumerate() {
            let left = g.compose_unchecked(&t);
            let right = t.compose_unchecked(g);
            if left != right {
                let au = g.nilpotent_part().mul_vec(u);
                return CentralizingTranslations {
                    holds: false,
                    witness: Some((u.clone(), i, au)),
                };
            }
        }
    }
    CentralizingTranslations {
        holds: true,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::holonomy::{abelian_report, u_gamma, u_zero};
    use crate::linalg::{vector_from_ints as v, zero_vector};

    #[test]
    fn translations_examples() {
        assert_eq!(
            centralizer_translations(&fixtures::trivial(2, 2)),
            Subspace::full(4)
        );
        let lagrangian = rref_basis(&[v(&[1, 0, 0, 0]), v(&[0, 1, 1, 0])], 4).unwrap();
        assert_eq!(centralizer_translations(&fixtures::quad22()), lagrangian);
        let expected = rref_basis(
            &[
                v(&[1, 0, 0, 0, 0, 0]),
                v(&[0, 1, 0, 0, 0, 0]),
                v(&[0, 0, 1, 0, 0, 0]),
                v(&[0, 0, 0, 1, 0, 0]),
            ],
            6,
        )
        .unwrap();
        assert_eq!(centralizer_translations(&fixtures::wolf42()), expected);
    }

    #[test]
    fn translations_equal_u_gamma_perp() {
        for spec in fixtures::all() {
            let perp = spec.form().orth_complement(&u_gamma(&spec)).unwrap();
            assert_eq!(centralizer_translations(&spec), perp, "{}", spec.name());
        }
    }

    #[test]
    fn trivial_algebra_is_full_isometry_algebra() {
        for (p, s) in [(1, 0), (2, 1), (2, 2), (3, 2)] {
            let spec = fixtures::trivial(p, s);
            let n = p + s;
            let alg = centralizer_algebra(&spec);
            assert_eq!(alg.dim(), n * (n - 1) / 2 + n);
            assert_eq!(orbit_dimension(&alg, &zero_vector(n)), n);
        }
    }

    #[test]
    fn quad22_algebra_contains_nilpotent_part() {
        let spec = fixtures::quad22();
        let a = spec.generators()[0].nilpotent_part();
        for w in centralizer_translations(&spec).basis() {
            assert!(CentralizerAlgebra::satisfies(&spec, &a, w));
        }
        let alg = centralizer_algebra(&spec);
        assert!(alg
            .basis
            .iter()
            .all(|(x, w)| CentralizerAlgebra::satisfies(&spec, x, w)));
        assert_eq!(orbit_dimension(&alg, &zero_vector(4)), 4);
    }

    #[test]
    fn wolf42_orbit_is_open_at_origin() {
        let spec = fixtures::wolf42();
        let alg = centralizer_algebra(&spec);
        assert!(alg
            .basis
            .iter()
            .all(|(x, w)| CentralizerAlgebra::satisfies(&spec, x, w)));
        assert_eq!(orbit_dimension(&alg, &zero_vector(6)), 6);
    }

    #[test]
    fn u0perp_matches_abelian_verdict() {
        for spec in fixtures::all() {
            let r = abelian_report(&spec).unwrap();
            let c = u0perp_centralizes(&spec, &u_zero(&spec));
            assert_eq!(c.holds, r.abelian, "{}", spec.name());
            if let Some((u, i, au)) = c.witness {
                assert_eq!(spec.generators()[i].nilpotent_part().mul_vec(&u), au);
                assert!(au.iter().any(|x| !x.is_zero()));
            }
        }
    }
}
