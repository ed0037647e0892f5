//! Affine isometries `(I + A, v)`, finite group specifications, word
//! enumeration, the element-wise Wolf conditions and fixed points.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::form::BilinearForm;
use crate::linalg::{
    add_vectors, format_scalar, image, is_zero_vector, kernel, neg_vector, scale_vector,
    solve_linear, unit_vector, zero_vector, Matrix, Scalar, Subspace, Vector,
};

/// Default cap on the number of distinct words enumerated.
pub const DEFAULT_WORD_CAP: usize = 200_000;

/// An affine isometry `x ↦ Lx + v` of a fixed bilinear form.
#[derive(Clone, Debug)]
pub struct AffineIso {
    form: Arc<BilinearForm>,
    linear: Matrix,
    translation: Vector,
}

impl AffineIso {
    /// Checks shapes and `Lᵀ·G·L = G`.
    pub fn new(form: Arc<BilinearForm>, linear: Matrix, translation: Vector) -> Result<Self> {
        let n = form.dim();
        if linear.rows() != n || linear.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: linear.rows().max(linear.cols()),
            });
        }
        if translation.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: translation.len(),
            });
        }
        let g = AffineIso {
            form,
            linear,
            translation,
        };
        if !g.is_isometry() {
            return Err(Error::NotIsometry("affine map".into()));
        }
        Ok(g)
    }

    /// Builds `(I + a, v)` from the nilpotent part.
    pub fn from_nilpotent(
        form: Arc<BilinearForm>,
        a: &Matrix,
        translation: Vector,
    ) -> Result<Self> {
        let linear = &Matrix::identity(form.dim()) + a;
        AffineIso::new(form, linear, translation)
    }

    pub fn identity(form: Arc<BilinearForm>) -> Self {
        let n = form.dim();
        AffineIso {
            form,
            linear: Matrix::identity(n),
            translation: zero_vector(n),
        }
    }

    /// Pure translation `(I, u)`. Panics if `u` has the wrong length.
    pub fn translation_by(form: Arc<BilinearForm>, u: Vector) -> Self {
        assert_eq!(u.len(), form.dim());
        let n = form.dim();
        AffineIso {
            form,
            linear: Matrix::identity(n),
            translation: u,
        }
    }

    pub fn form(&self) -> &Arc<BilinearForm> {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    /// Full linear part `I + A`.
    pub fn linear(&self) -> &Matrix {
        &self.linear
    }

    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    /// `A = L − I`.
    pub fn nilpotent_part(&self) -> Matrix {
        &self.linear - &Matrix::identity(self.dim())
    }

    pub fn is_isometry(&self) -> bool {
        let g = self.form.gram();
        &(&self.linear.transpose() * g) * &self.linear == *g
    }

    pub fn is_identity(&self) -> bool {
        is_zero_vector(&self.translation) && self.linear == Matrix::identity(self.dim())
    }

    fn same_form(&self, other: &AffineIso) -> bool {
        Arc::ptr_eq(&self.form, &other.form) || *self.form == *other.form
    }

    /// `self ∘ other`: `(L_g·L_h, L_g·v_h + v_g)`.
    pub fn compose(&self, other: &AffineIso) -> Result<AffineIso> {
        if !self.same_form(other) {
            return Err(Error::FormMismatch);
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &AffineIso) -> AffineIso {
        AffineIso {
            form: Arc::clone(&self.form),
            linear: &self.linear * &other.linear,
            translation: add_vectors(&self.linear.mul_vec(&other.translation), &self.translation),
        }
    }

    /// `(L⁻¹, −L⁻¹v)`.
    pub fn inverse(&self) -> AffineIso {
        let a = self.nilpotent_part();
        let inv = if (&a * &a).is_zero() {
            &Matrix::identity(self.dim()) - &a
        } else {
            self.linear.inverse().expect("isometries are invertible")
        };
        let translation = neg_vector(&inv.mul_vec(&self.translation));
        AffineIso {
            form: Arc::clone(&self.form),
            linear: inv,
            translation,
        }
    }

    /// `Lx + v`.
    pub fn act(&self, x: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        Ok(add_vectors(&self.linear.mul_vec(x), &self.translation))
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> AffineIso {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = AffineIso::identity(Arc::clone(&self.form));
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose_unchecked(&base);
        }
        acc
    }
}

impl PartialEq for AffineIso {
    fn eq(&self, other: &Self) -> bool {
        self.same_form(other)
            && self.linear == other.linear
            && self.translation == other.translation
    }
}

impl Eq for AffineIso {}

impl Hash for AffineIso {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.linear.hash(state);
        self.translation.hash(state);
    }
}

/// A named finite generating set for a group of affine isometries.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupSpec {
    name: String,
    form: Arc<BilinearForm>,
    generators: Vec<AffineIso>,
}

impl GroupSpec {
    pub fn new(
        name: impl Into<String>,
        form: Arc<BilinearForm>,
        generators: Vec<AffineIso>,
    ) -> Result<Self> {
        if generators
            .iter()
            .any(|g| !(Arc::ptr_eq(g.form(), &form) || **g.form() == *form))
        {
            return Err(Error::FormMismatch);
        }
        Ok(GroupSpec {
            name: name.into(),
            form,
            generators,
        })
    }

    /// Builds generators from `(full linear part, translation)` pairs.
    pub fn from_parts(
        name: impl Into<String>,
        form: BilinearForm,
        parts: Vec<(Matrix, Vector)>,
    ) -> Result<Self> {
        let name = name.into();
        let form = Arc::new(form);
        let generators = parts
            .into_iter()
            .enumerate()
            .map(|(i, (l, v))| {
                AffineIso::new(Arc::clone(&form), l, v).map_err(|e| match e {
                    Error::NotIsometry(_) => Error::NotIsometry(format!("generator {}", i + 1)),
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupSpec {
            name,
            form,
            generators,
        })
    }

    pub fn trivial(name: impl Into<String>, form: BilinearForm) -> Self {
        GroupSpec {
            name: name.into(),
            form: Arc::new(form),
            generators: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn form(&self) -> &Arc<BilinearForm> {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn generators(&self) -> &[AffineIso] {
        &self.generators
    }

    /// Nilpotent parts `A_i` of the generators.
    pub fn nilpotent_parts(&self) -> Vec<Matrix> {
        self.generators
            .iter()
            .map(AffineIso::nilpotent_part)
            .collect()
    }
}

/// One letter of a word: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A group element together with one shortest spelling found for it.
#[derive(Clone, Debug)]
pub struct Word {
    pub letters: Vec<Letter>,
    pub element: AffineIso,
}

impl Word {
    pub fn label(&self) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("g{}^-1", l.generator + 1)
                } else {
                    format!("g{}", l.generator + 1)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Visits distinct words of length `≤ max_len`, breadth first. The identity
/// comes first. Stops early when `visit` returns `false`; returns how many
/// words were visited.
pub fn for_each_word(
    spec: &GroupSpec,
    max_len: usize,
    cap: usize,
    mut visit: impl FnMut(&Word) -> bool,
) -> Result<usize> {
    let letters: Vec<(Letter, AffineIso)> = spec
        .generators
        .iter()
        .enumerate()
        .flat_map(|(i, g)| {
            [
                (
                    Letter {
                        generator: i,
                        inverse: false,
                    },
                    g.clone(),
                ),
                (
                    Letter {
                        generator: i,
                        inverse: true,
                    },
                    g.inverse(),
                ),
            ]
        })
        .collect();
    let identity = Word {
        letters: Vec::new(),
        element: AffineIso::identity(Arc::clone(&spec.form)),
    };
    let mut seen: HashSet<AffineIso> = HashSet::new();
    seen.insert(identity.element.clone());
    let mut visited = 1;
    if !visit(&identity) {
        return Ok(visited);
    }
    let mut frontier = vec![identity];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &frontier {
            for (letter, g) in &letters {
                let element = word.element.compose_unchecked(g);
                if seen.contains(&element) {
                    continue;
                }
                if seen.len() >= cap {
                    return Err(Error::WordBudgetExceeded(cap));
                }
                seen.insert(element.clone());
                let mut spelled = word.letters.clone();
                spelled.push(*letter);
                let w = Word {
                    letters: spelled,
                    element,
                };
                visited += 1;
                if !visit(&w) {
                    return Ok(visited);
                }
                next.push(w);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(visited)
}

/// All distinct words of length `≤ max_len` with their spellings.
pub fn enumerate_words(spec: &GroupSpec, max_len: usize, cap: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for_each_word(spec, max_len, cap, |w| {
        out.push(w.clone());
        true
    })?;
    Ok(out)
}

/// All distinct products of at most `max_len` generators or inverses,
/// identity included.
pub fn words_up_to(spec: &GroupSpec, max_len: usize) -> Result<Vec<AffineIso>> {
    Ok(enumerate_words(spec, max_len, DEFAULT_WORD_CAP)?
        .into_iter()
        .map(|w| w.element)
        .collect())
}

/// The six element-wise conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WolfCondition {
    SquareZero,
    TranslationInKernel,
    ImageTotallyIsotropic,
    TranslationOrthogonalToImage,
    ImageIsKernelPerp,
    KernelIsImagePerp,
}

impl WolfCondition {
    pub const ALL: [WolfCondition; 6] = [
        WolfCondition::SquareZero,
        WolfCondition::TranslationInKernel,
        WolfCondition::ImageTotallyIsotropic,
        WolfCondition::TranslationOrthogonalToImage,
        WolfCondition::ImageIsKernelPerp,
        WolfCondition::KernelIsImagePerp,
    ];

    pub fn label(self) -> &'static str {
        match self {
            WolfCondition::SquareZero => "A^2 = 0",
            WolfCondition::TranslationInKernel => "Av = 0",
            WolfCondition::ImageTotallyIsotropic => "im A totally isotropic",
            WolfCondition::TranslationOrthogonalToImage => "v perp im A",
            WolfCondition::ImageIsKernelPerp => "im A = (ker A)^perp",
            WolfCondition::KernelIsImagePerp => "ker A = (im A)^perp",
        }
    }
}

impl fmt::Display for WolfCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Evidence attached to a failed condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A vector that should have been zero.
    NonzeroVector(Vector),
    /// Two vectors whose pairing should have vanished.
    Pairing { x: Vector, y: Vector, value: Scalar },
    /// A basis vector of one side missing from the other side.
    NotContained(Vector),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Vector| {
            format!(
                "({})",
                v.iter().map(format_scalar).collect::<Vec<_>>().join(",")
            )
        };
        match self {
            Witness::NonzeroVector(v) => write!(f, "nonzero vector {}", show(v)),
            Witness::Pairing { x, y, value } => {
                write!(f, "<{}, {}> = {}", show(x), show(y), format_scalar(value))
            }
            Witness::NotContained(v) => write!(f, "{} not contained", show(v)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub condition: WolfCondition,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Results of the six element-wise conditions on one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WolfReport {
    pub outcomes: Vec<ConditionOutcome>,
}

impl WolfReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, condition: WolfCondition) -> &ConditionOutcome {
        self.outcomes
            .iter()
            .find(|o| o.condition == condition)
            .expect("all six conditions are reported")
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

fn first_missing(a: &Subspace, b: &Subspace) -> Option<Vector> {
    a.basis().iter().find(|x| !b.contains(x)).cloned()
}

fn equality_witness(a: &Subspace, b: &Subspace) -> Option<Witness> {
    if a == b {
        None
    } else {
        Some(Witness::NotContained(
            first_missing(a, b)
                .or_else(|| first_missing(b, a))
                .expect("unequal spaces differ"),
        ))
    }
}

/// Evaluates the six conditions on `A = L − I` and `v` independently.
pub fn wolf_check(g: &AffineIso) -> WolfReport {
    let form = g.form();
    let n = g.dim();
    let a = g.nilpotent_part();
    let v = g.translation();
    let mut outcomes = Vec::with_capacity(6);
    let mut push = |condition, witness: Option<Witness>| {
        outcomes.push(ConditionOutcome {
            condition,
            passed: witness.is_none(),
            witness,
        });
    };

    let a2 = &a * &a;
    push(
        WolfCondition::SquareZero,
        (0..n)
            .map(|j| a2.column(j))
            .find(|c| !is_zero_vector(c))
            .map(Witness::NonzeroVector),
    );

    let av = a.mul_vec(v);
    push(
        WolfCondition::TranslationInKernel,
        (!is_zero_vector(&av)).then_some(Witness::NonzeroVector(av)),
    );

    let im = image(&a);
    let ker = kernel(&a);
    let b = im.basis();
    let bad_pair = (0..b.len())
        .flat_map(|i| (i..b.len()).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, form.pair(&b[i], &b[j])))
        .find(|(_, _, val)| !val.is_zero())
        .map(|(i, j, value)| Witness::Pairing {
            x: b[i].clone(),
            y: b[j].clone(),
            value,
        });
    push(WolfCondition::ImageTotallyIsotropic, bad_pair);

    let v_pair = b
        .iter()
        .map(|x| (x, form.pair(v, x)))
        .find(|(_, val)| !val.is_zero())
        .map(|(x, value)| Witness::Pairing {
            x: v.clone(),
            y: x.clone(),
            value,
        });
    push(WolfCondition::TranslationOrthogonalToImage, v_pair);

    let ker_perp = form
        .orth_complement(&ker)
        .expect("kernel lives in the ambient space");
    push(
        WolfCondition::ImageIsKernelPerp,
        equality_witness(&im, &ker_perp),
    );
    let im_perp = form
        .orth_complement(&im)
        .expect("image lives in the ambient space");
    push(
        WolfCondition::KernelIsImagePerp,
        equality_witness(&ker, &im_perp),
    );

    WolfReport { outcomes }
}

/// `A² = 0` and `Av = 0`.
fn nilpotent_conditions_pass(g: &AffineIso) -> bool {
    let a = g.nilpotent_part();
    (&a * &a).is_zero() && is_zero_vector(&a.mul_vec(g.translation()))
}

/// `AᵀGA = 0` and `AᵀGv = 0`. For an isometry these also give the two
/// duality conditions: `(I + A)ᵀG(I + A) = G` then makes `GA` skew, so
/// `(ker A)^⊥ = im G⁻¹Aᵀ = im A` and `(im A)^⊥ = ker GA = ker A`.
fn isotropy_conditions_pass(g: &AffineIso) -> bool {
    let a = g.nilpotent_part();
    let atg = &a.transpose() * g.form().gram();
    (&atg * &a).is_zero() && is_zero_vector(&atg.mul_vec(g.translation()))
}

/// Short-circuiting variant of [`wolf_check`] for hot loops. Uses only
/// matrix products; agrees with the subspace computations of
/// [`wolf_check`] on every isometry.
pub fn wolf_passes(g: &AffineIso) -> bool {
    nilpotent_conditions_pass(g) && isotropy_conditions_pass(g)
}

/// Wolf reports for every distinct word of length `≤ max_len`.
pub fn check_words(spec: &GroupSpec, max_len: usize) -> Result<Vec<(String, WolfReport)>> {
    Ok(enumerate_words(spec, max_len, DEFAULT_WORD_CAP)?
        .into_iter()
        .map(|w| (w.label(), wolf_check(&w.element)))
        .collect())
}

/// `true` iff every word of length `≤ max_len` passes. `A² = 0` and
/// `Av = 0` are screened during enumeration, the isotropy conditions after.
pub fn all_words_pass(spec: &GroupSpec, max_len: usize, cap: usize) -> Result<bool> {
    let mut ok = true;
    let mut elements = Vec::new();
    for_each_word(spec, max_len, cap, |w| {
        ok = nilpotent_conditions_pass(&w.element);
        elements.push(w.element.clone());
        ok
    })?;
    Ok(ok && elements.iter().all(isotropy_conditions_pass))
}

/// A point `x` with `g·x = x`, i.e. a solution of `Ax = −v`, if one exists.
pub fn fixed_point_check(g: &AffineIso) -> Option<Vector> {
    solve_linear(&g.nilpotent_part(), &neg_vector(g.translation()))
}

/// `(I + kA, kv)`, the closed form of `g^k` when `A² = 0` and `Av = 0`.
pub fn power_closed_form(g: &AffineIso, k: i64) -> (Matrix, Vector) {
    let k = crate::linalg::int(k);
    let a = g.nilpotent_part();
    (
        &Matrix::identity(g.dim()) + &a.scaled(&k),
        scale_vector(&k, g.translation()),
    )
}

/// Standard basis vector helper used by reports.
pub fn basis_vector(n: usize, i: usize) -> Vector {
    unit_vector(n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{int, vector_from_ints as v};

    #[test]
    fn compose_translations() {
        let form = Arc::new(BilinearForm::standard(1, 1));
        let t1 = AffineIso::translation_by(Arc::clone(&form), v(&[1, 2]));
        let t2 = AffineIso::translation_by(Arc::clone(&form), v(&[3, -1]));
        let sum = t1.compose(&t2).unwrap();
        assert_eq!(sum, AffineIso::translation_by(form, v(&[4, 1])));
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let spec = fixtures::quad22();
        let g = &spec.generators()[0];
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert!(g.inverse().compose(g).unwrap().is_identity());
    }

    #[test]
    fn quad22_square() {
        let spec = fixtures::quad22();
        let g = &spec.generators()[0];
        let sq = g.compose(g).unwrap();
        let a = g.nilpotent_part();
        assert_eq!(sq.linear(), &(&Matrix::identity(4) + &a.scaled(&int(2))));
        assert_eq!(sq.translation(), &v(&[2, 0, 0, 0]));
    }

    #[test]
    fn compose_rejects_foreign_forms() {
        let a = AffineIso::identity(Arc::new(BilinearForm::standard(2, 0)));
        let b = AffineIso::identity(Arc::new(BilinearForm::standard(1, 1)));
        assert!(matches!(a.compose(&b), Err(Error::FormMismatch)));
    }

    #[test]
    fn non_isometry_rejected() {
        let form = Arc::new(BilinearForm::standard(2, 0));
        let shear = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert!(matches!(
            AffineIso::new(form, shear, v(&[0, 0])),
            Err(Error::NotIsometry(_))
        ));
    }

    #[test]
    fn wolf_identity_passes() {
        let form = Arc::new(BilinearForm::standard(2, 2));
        assert!(wolf_check(&AffineIso::identity(form)).passed());
    }

    #[test]
    fn wolf_quad22_passes() {
        let spec = fixtures::quad22();
        let report = wolf_check(&spec.generators()[0]);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.outcomes.len(), 6);
    }

    #[test]
    fn wolf_flags_translation_outside_kernel() {
        let spec = fixtures::quad22();
        let g = &spec.generators()[0];
        let bad =
            AffineIso::new(Arc::clone(g.form()), g.linear().clone(), v(&[0, 1, 0, 0])).unwrap();
        let report = wolf_check(&bad);
        let outcome = report.outcome(WolfCondition::TranslationInKernel);
        assert!(!outcome.passed);
        assert_eq!(
            outcome.witness,
            Some(Witness::NonzeroVector(v(&[-1, 0, 0, 0])))
        );
        assert!(!wolf_passes(&bad));
        // v = w1 also pairs with w1 + w2 in the image
        assert!(
            !report
                .outcome(WolfCondition::TranslationOrthogonalToImage)
                .passed
        );
        assert!(report.outcome(WolfCondition::SquareZero).passed);
    }

    #[test]
    fn wolf_flags_boost() {
        // a Lorentz boost is an isometry but A^2 != 0
        let form = Arc::new(BilinearForm::standard(1, 1));
        let boost = Matrix::from_rows(
            vec![
                vec![crate::linalg::frac(5, 4), crate::linalg::frac(3, 4)],
                vec![crate::linalg::frac(3, 4), crate::linalg::frac(5, 4)],
            ],
            2,
        )
        .unwrap();
        let g = AffineIso::new(form, boost, v(&[0, 0])).unwrap();
        let report = wolf_check(&g);
        assert!(!report.passed());
        assert!(!report.outcome(WolfCondition::SquareZero).passed);
        assert!(!report.outcome(WolfCondition::ImageTotallyIsotropic).passed);
    }

    #[test]
    fn words_of_trivial_group() {
        let spec = GroupSpec::trivial("trivial", BilinearForm::standard(2, 1));
        let words = words_up_to(&spec, 3).unwrap();
        assert_eq!(words.len(), 1);
        assert!(words[0].is_identity());
    }

    #[test]
    fn words_of_single_generator() {
        let form = Arc::new(BilinearForm::standard(2, 0));
        let g = AffineIso::translation_by(Arc::clone(&form), v(&[1, 0]));
        let spec = GroupSpec::new("z", form, vec![g.clone()]).unwrap();
        let words = words_up_to(&spec, 2).unwrap();
        let expected: HashSet<AffineIso> = [0, 1, -1, 2, -2].iter().map(|&k| g.pow(k)).collect();
        assert_eq!(words.len(), 5);
        assert_eq!(words.into_iter().collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn words_of_quad22_are_powers() {
        let spec = fixtures::quad22();
        let g = &spec.generators()[0];
        let words: HashSet<AffineIso> = words_up_to(&spec, 2).unwrap().into_iter().collect();
        let expected: HashSet<AffineIso> = (-2..=2)
            .map(|k| {
                let (l, t) = power_closed_form(g, k);
                AffineIso::new(Arc::clone(g.form()), l, t).unwrap()
            })
            .collect();
        assert_eq!(words, expected);
    }

    #[test]
    fn word_budget_is_enforced() {
        let spec = fixtures::wolf42();
        assert!(matches!(
            enumerate_words(&spec, 10, 5),
            Err(Error::WordBudgetExceeded(5))
        ));
    }

    #[test]
    fn fixed_points() {
        let form = Arc::new(BilinearForm::standard(2, 2));
        let t = AffineIso::translation_by(Arc::clone(&form), v(&[1, 0, 0, 0]));
        assert_eq!(fixed_point_check(&t), None);
        assert_eq!(
            fixed_point_check(&AffineIso::identity(form)),
            Some(v(&[0, 0, 0, 0]))
        );
        let spec = fixtures::quad22();
        let g = &spec.generators()[0];
        let x = fixed_point_check(g).unwrap();
        assert_eq!(x, v(&[0, 1, 0, 0]));
        assert_eq!(g.act(&x).unwrap(), x);
        let minus_w2 = v(&[0, 0, -1, 0]);
        assert_eq!(g.act(&minus_w2).unwrap(), minus_w2);
    }

    #[test]
    fn act_respects_composition() {
        let spec = fixtures::wolf42();
        let g = &spec.generators()[0];
        let h = g.inverse().compose(&g.inverse()).unwrap();
        let x = v(&[1, -2, 3, 0, 5, 7]);
        let lhs = g.compose(&h).unwrap().act(&x).unwrap();
        let rhs = g.act(&h.act(&x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(g.act(&v(&[1])).is_err());
    }
}
