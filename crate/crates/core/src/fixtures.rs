//! Hand-built groups used throughout the tests, examples and CLI fixtures.

use crate::affine::GroupSpec;
use crate::form::BilinearForm;
use crate::io::GroupSpecFile;
use crate::linalg::{int, vector_from_ints, Matrix};

/// Gram matrix on the basis `(u, w1, w2, u*)` with `⟨u, u*⟩ = 1`,
/// `⟨w1, w1⟩ = 1`, `⟨w2, w2⟩ = −1`.
pub fn quad22_gram() -> Matrix {
    Matrix::from_ints(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, -1, 0], &[1, 0, 0, 0]])
}

/// Nilpotent part: `u ↦ 0`, `w1 ↦ −u`, `w2 ↦ u`, `u* ↦ w1 + w2`.
pub fn quad22_nilpotent() -> Matrix {
    Matrix::from_ints(&[&[0, -1, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 1], &[0, 0, 0, 0]])
}

/// Single generator `(I + A4, u)` in signature (2, 2). Not a free action
/// (it fixes `w1`); useful as an algebra fixture only.
pub fn quad22() -> GroupSpec {
    let form =
        BilinearForm::with_signature(quad22_gram(), 2, 2).expect("quad22 gram is nondegenerate");
    let linear = &Matrix::identity(4) + &quad22_nilpotent();
    GroupSpec::from_parts(
        "quad22",
        form,
        vec![(linear, vector_from_ints(&[1, 0, 0, 0]))],
    )
    .expect("quad22 generator is an isometry")
}

/// Split Gram on `(u1, u2, w1, w2, u1*, u2*)`: `⟨u_i, u_j*⟩ = δ_ij`, `W_0` Gram `I₂`.
pub fn wolf42_gram() -> Matrix {
    let mut g = Matrix::zeros(6, 6);
    for i in 0..2 {
        g.set(i, 4 + i, int(1));
        g.set(4 + i, i, int(1));
        g.set(2 + i, 2 + i, int(1));
    }
    g
}

/// Nilpotent part with `C = [[0, 1], [−1, 0]]` mapping `U_0*` to `U_0`.
pub fn wolf42_nilpotent() -> Matrix {
    let mut a = Matrix::zeros(6, 6);
    a.set(0, 5, int(1));
    a.set(1, 4, int(-1));
    a
}

/// Single generator `(I + A6, w1)` in signature (4, 2).
pub fn wolf42() -> GroupSpec {
    let form =
        BilinearForm::with_signature(wolf42_gram(), 4, 2).expect("wolf42 gram is nondegenerate");
    let linear = &Matrix::identity(6) + &wolf42_nilpotent();
    GroupSpec::from_parts(
        "wolf42",
        form,
        vec![(linear, vector_from_ints(&[0, 0, 1, 0, 0, 0]))],
    )
    .expect("wolf42 generator is an isometry")
}

/// The trivial group in the standard form of signature `(p, s)`.
pub fn trivial(p: usize, s: usize) -> GroupSpec {
    GroupSpec::trivial(format!("trivial{p}{s}"), BilinearForm::standard(p, s))
}

const NONABELIAN44_JSON: &str = include_str!("../fixtures/nonabelian44.json");
const SURVIVOR44_JSON: &str = include_str!("../fixtures/survivor44.json");

fn stored(json: &str) -> GroupSpec {
    GroupSpecFile::from_json(json)
        .and_then(|f| f.to_group_spec())
        .expect("stored fixture parses")
}

/// Hand-built non-abelian pair in signature (4, 4): `k = 2`, `C = 0`,
/// `v = 0`, with `B_1 = [e1 e2]` and `B_2 = [f2 −f1]` for the hyperbolic
/// vectors `e_i = a_i + b_i`, `f_i = a_i − b_i` of `W_0`, so that
/// `B_1ᵀĨB_2` is skew and nonzero.
pub fn nonabelian44() -> GroupSpec {
    stored(NONABELIAN44_JSON)
}

/// First survivor of the (4, 4) search at seed 0 (trial 3542), stored verbatim.
pub fn survivor44() -> GroupSpec {
    stored(SURVIVOR44_JSON)
}

/// Every stored fixture.
pub fn all() -> Vec<GroupSpec> {
    vec![
        quad22(),
        wolf42(),
        trivial(2, 0),
        trivial(1, 1),
        trivial(2, 2),
        trivial(4, 2),
        nonabelian44(),
        survivor44(),
    ]
}

/// The fixtures whose holonomy is abelian.
pub fn abelian() -> Vec<GroupSpec> {
    vec![
        quad22(),
        wolf42(),
        trivial(2, 0),
        trivial(1, 1),
        trivial(2, 2),
        trivial(4, 2),
    ]
}
