//! The six element-wise conditions on affine isometries, and a failing boost.

use std::sync::Arc;

use flat_holonomy::affine::{check_words, fixed_point_check, wolf_check, AffineIso};
use flat_holonomy::fixtures;
use flat_holonomy::form::BilinearForm;
use flat_holonomy::linalg::{format_scalar, frac, vector_from_ints as v, Matrix};

fn main() -> flat_holonomy::Result<()> {
    for spec in [fixtures::quad22(), fixtures::wolf42()] {
        let report = wolf_check(&spec.generators()[0]);
        println!("{}: generator passes = {}", spec.name(), report.passed());
        let words = check_words(&spec, 3)?;
        println!(
            "  {} words up to length 3, all pass = {}",
            words.len(),
            words.iter().all(|(_, r)| r.passed())
        );
        match fixed_point_check(&spec.generators()[0]) {
            Some(x) => println!(
                "  generator fixes ({})",
                x.iter().map(format_scalar).collect::<Vec<_>>().join(",")
            ),
            None => println!("  generator has no fixed point"),
        }
    }

    // cosh t = 5/4, sinh t = 3/4
    let form = Arc::new(BilinearForm::standard(1, 1));
    let boost = Matrix::from_rows(
        vec![vec![frac(5, 4), frac(3, 4)], vec![frac(3, 4), frac(5, 4)]],
        2,
    )?;
    let g = AffineIso::new(form, boost, v(&[0, 0]))?;
    for failure in wolf_check(&g).failures() {
        let witness = failure
            .witness
            .as_ref()
            .map_or(String::new(), ToString::to_string);
        println!("boost fails {}: {witness}", failure.condition.label());
    }
    Ok(())
}
