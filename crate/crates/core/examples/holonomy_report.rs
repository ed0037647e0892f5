//! Holonomy subspaces and the four abelianness criteria for each fixture.

use flat_holonomy::fixtures;
use flat_holonomy::holonomy::{abelian_report, index_witness};

fn main() -> flat_holonomy::Result<()> {
    for spec in fixtures::all() {
        let r = abelian_report(&spec)?;
        println!("{} {:?}", spec.name(), spec.form().signature());
        println!("  U_Gamma = {}", r.u_gamma);
        println!("  U_0     = {}", r.u_zero);
        println!(
            "  criteria {:?} -> abelian = {}",
            r.criteria.values(),
            r.abelian
        );
        if let Some(w) = index_witness(&spec, &r)? {
            println!(
                "  totally isotropic subspace of dim {} forces s >= 4",
                w.dim
            );
        }
    }
    Ok(())
}
