mod common;

use std::sync::Arc;

use flat_holonomy::affine::{
    all_words_pass, power_closed_form, wolf_check, wolf_passes, words_up_to, AffineIso,
};
use flat_holonomy::form::BilinearForm;
use flat_holonomy::holonomy::{abelian_report_with, u_gamma, u_gamma_from_words, u_zero};
use flat_holonomy::linalg::{
    frac, image, int, intersect_spaces, kernel, rref_basis, scale_vector, sum_spaces, Matrix,
    Subspace, Vector,
};
use flat_holonomy::search::{sample_generators, sample_generators_with, SampleParams};
use proptest::prelude::*;

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |e| {
            let rows: Vec<Vector> = e
                .chunks(c)
                .map(|ch| ch.iter().map(|&x| int(x)).collect())
                .collect();
            Matrix::from_rows(rows, c).unwrap()
        })
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=max).prop_map(|vs| {
        vs.into_iter()
            .map(|v| v.into_iter().map(int).collect())
            .collect()
    })
}

fn span(vs: &[Vector], n: usize) -> Subspace {
    rref_basis(vs, n).unwrap()
}

fn signature_strategy() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=6).prop_flat_map(|n| (0..=n.min(4)).prop_map(move |s| (n - s, s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in small_matrix(5, 6)) {
        prop_assert_eq!(m.rank() + kernel(&m).dim(), m.cols());
        prop_assert_eq!(image(&m).dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn subspace_modularity(a in vectors(5, 4), b in vectors(5, 4)) {
        let (a, b) = (span(&a, 5), span(&b, 5));
        let sum = sum_spaces(&a, &b).unwrap();
        let meet = intersect_spaces(&a, &b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(meet.is_subspace_of(&a) && meet.is_subspace_of(&b));
        prop_assert!(a.is_subspace_of(&sum) && b.is_subspace_of(&sum));
    }

    #[test]
    fn canonical_basis_ignores_spanning_set(vs in vectors(4, 4), c in 1i64..=3) {
        let s = span(&vs, 4);
        let mut scaled: Vec<Vector> = vs.iter().rev().map(|v| scale_vector(&int(c), v)).collect();
        if let [first, second, ..] = scaled.as_mut_slice() {
            *first = first.iter().zip(second.iter()).map(|(x, y)| x + y).collect();
        }
        scaled.extend(vs.iter().cloned());
        prop_assert_eq!(span(&scaled, 4), s.clone());
        prop_assert_eq!(span(s.basis(), 4), s);
    }

    #[test]
    fn perp_is_an_involution(sig in signature_strategy(), vs in vectors(6, 3)) {
        let (p, s) = sig;
        let n = p + s;
        let form = BilinearForm::standard(p, s);
        let vs: Vec<Vector> = vs.into_iter().map(|v| v[..n].to_vec()).collect();
        let sub = span(&vs, n);
        let perp = form.orth_complement(&sub).unwrap();
        prop_assert_eq!(sub.dim() + perp.dim(), n);
        prop_assert_eq!(form.orth_complement(&perp).unwrap(), sub);
    }

    #[test]
    fn isotropy_routes_agree(sig in signature_strategy(), vs in vectors(6, 3)) {
        let (p, s) = sig;
        let n = p + s;
        let form = BilinearForm::standard(p, s);
        let vs: Vec<Vector> = vs.into_iter().map(|v| v[..n].to_vec()).collect();
        let sub = span(&vs, n);
        let iso = form.is_totally_isotropic(&sub);
        prop_assert_eq!(iso, form.is_totally_isotropic_by_containment(&sub));
        if iso {
            prop_assert!(sub.dim() <= form.max_isotropic_bound());
        }
    }

    #[test]
    fn sampled_generators_satisfy_closed_forms(sig in signature_strategy(), seed in any::<u64>(), k in -10i64..=10) {
        let spec = sample_generators(sig, 2, seed).unwrap();
        for g in spec.generators() {
            prop_assert!(wolf_check(g).passed());
            let (linear, translation) = power_closed_form(g, k);
            let power = g.pow(k);
            prop_assert_eq!(power.linear(), &linear);
            prop_assert_eq!(power.translation(), &translation);
            prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn action_respects_composition(sig in signature_strategy(), seed in any::<u64>(), x in prop::collection::vec(-3i64..=3, 6)) {
        let spec = sample_generators(sig, 2, seed).unwrap();
        let x: Vector = x[..spec.dim()].iter().map(|&v| int(v)).collect();
        let [g, h] = [&spec.generators()[0], &spec.generators()[1]];
        let gh = g.compose(h).unwrap();
        prop_assert_eq!(gh.act(&x).unwrap(), g.act(&h.act(&x).unwrap()).unwrap());
    }

    #[test]
    fn fast_wolf_check_matches_subspace_check(sig in signature_strategy(), seed in any::<u64>()) {
        // words of unfiltered candidates include plenty of failures
        let spec = sample_generators(sig, 2, seed).unwrap();
        for w in words_up_to(&spec, 2).unwrap() {
            prop_assert_eq!(wolf_passes(&w), wolf_check(&w).passed());
        }
    }

    #[test]
    fn four_criteria_agree_on_valid_samples(sig in signature_strategy(), seed in any::<u64>()) {
        let spec = sample_generators(sig, 2, seed).unwrap();
        prop_assume!(all_words_pass(&spec, 3, 10_000).unwrap());
        let report = abelian_report_with(&spec, 3).unwrap();
        prop_assert!(report.criteria.all_agree());
        prop_assert!(spec.form().is_totally_isotropic(&u_zero(&spec)));
        prop_assert_eq!(u_gamma_from_words(&spec, 3).unwrap(), u_gamma(&spec));
    }
}

#[test]
fn fast_wolf_check_matches_on_boosts_and_rotations() {
    let form = Arc::new(BilinearForm::standard(1, 1));
    let boost = Matrix::from_rows(
        vec![vec![frac(5, 4), frac(3, 4)], vec![frac(3, 4), frac(5, 4)]],
        2,
    )
    .unwrap();
    let g = AffineIso::new(form, boost, vec![int(1), int(0)]).unwrap();
    assert!(!wolf_passes(&g));
    assert!(!wolf_check(&g).passed());

    let euclid = Arc::new(BilinearForm::standard(2, 0));
    let rotation = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
    let r = AffineIso::new(euclid, rotation, vec![int(0), int(0)]).unwrap();
    assert_eq!(wolf_passes(&r), wolf_check(&r).passed());
}

#[test]
fn non_abelian_samples_keep_criteria_in_agreement() {
    let params = SampleParams {
        k: Some(2),
        require_nonzero_b: true,
        ..SampleParams::default()
    };
    let mut checked = 0;
    for seed in 0..400 {
        let spec = sample_generators_with((4, 4), &params, seed).unwrap();
        if all_words_pass(&spec, 3, 10_000).unwrap() {
            let report = abelian_report_with(&spec, 2).unwrap();
            assert!(report.criteria.all_agree(), "seed {seed}");
            checked += 1;
        }
    }
    assert!(checked > 0);
}
