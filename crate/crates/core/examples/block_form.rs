//! Witt-adapted basis and the block decomposition of each generator.

use flat_holonomy::fixtures;
use flat_holonomy::holonomy::{block_form, u_zero};

fn main() -> flat_holonomy::Result<()> {
    for spec in [
        fixtures::quad22(),
        fixtures::wolf42(),
        fixtures::nonabelian44(),
    ] {
        let witt = spec.form().witt_extend(&u_zero(&spec))?;
        println!(
            "{}: k = {}, dim W_0 = {}",
            spec.name(),
            witt.k(),
            witt.w_dim()
        );
        println!(
            "adapted basis (columns U_0 | W_0 | U_0*):\n{}",
            witt.change_of_basis()
        );
        for (i, g) in spec.generators().iter().enumerate() {
            let b = block_form(&spec, g)?;
            println!(
                "g{}: C =\n{}   B =\n{}   all block checks pass: {}",
                i + 1,
                b.c_block,
                b.b_block,
                b.all_ok()
            );
        }
    }
    Ok(())
}
