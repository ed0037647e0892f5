//! Centralizer algebra, centralizing translations and orbit dimensions.

use flat_holonomy::centralizer::{
    centralizer_algebra, centralizer_translations, orbit_dimension, u0perp_centralizes,
};
use flat_holonomy::fixtures;
use flat_holonomy::holonomy::u_zero;
use flat_holonomy::linalg::{vector_from_ints, zero_vector};

fn main() {
    for spec in fixtures::all() {
        let n = spec.dim();
        let algebra = centralizer_algebra(&spec);
        let at_origin = orbit_dimension(&algebra, &zero_vector(n));
        let generic = vector_from_ints(&(1..=n as i64).map(|i| i * i - 3).collect::<Vec<_>>());
        println!(
            "{}: algebra dim {}, orbit dim {at_origin} at 0 and {} at {:?} (n = {n})",
            spec.name(),
            algebra.dim(),
            orbit_dimension(&algebra, &generic),
            generic.iter().map(ToString::to_string).collect::<Vec<_>>(),
        );
        println!(
            "  centralizing translations {}",
            centralizer_translations(&spec)
        );
        println!(
            "  U_0^perp centralizes: {}",
            u0perp_centralizes(&spec, &u_zero(&spec)).holds
        );
    }
}
