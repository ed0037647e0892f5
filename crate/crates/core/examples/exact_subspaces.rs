//! Canonical subspaces, kernels and orthogonal complements over the rationals.

use flat_holonomy::form::BilinearForm;
use flat_holonomy::linalg::{
    frac, intersect_spaces, kernel, rref_basis, sum_spaces, vector_from_ints as v, Matrix,
};

fn main() -> flat_holonomy::Result<()> {
    let a = rref_basis(&[v(&[1, 1, 0, 0]), v(&[2, 2, 0, 0]), v(&[0, 0, 1, 1])], 4)?;
    let b = rref_basis(&[v(&[1, 1, 1, 1]), v(&[1, 0, 0, 0])], 4)?;
    println!("A = {a}");
    println!("B = {b}");
    println!("A + B = {}", sum_spaces(&a, &b)?);
    println!("A ∩ B = {}", intersect_spaces(&a, &b)?);

    let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
    println!("ker of\n{m}= {}", kernel(&m));

    let split = BilinearForm::standard(2, 2);
    let null = rref_basis(&[v(&[1, 0, 1, 0]), v(&[0, 1, 0, 1])], 4)?;
    println!("signature {:?}, null plane {null}", split.signature());
    println!("  totally isotropic: {}", split.is_totally_isotropic(&null));
    println!("  orthogonal complement: {}", split.orth_complement(&null)?);

    let scaled = Matrix::diagonal(&[frac(1, 2), frac(-3, 4)]);
    println!(
        "diag(1/2, -3/4) has signature {:?}",
        BilinearForm::new(scaled)?.signature()
    );
    Ok(())
}
