//! Random search for generator pairs whose linear holonomy does not commute.
//!
//! cargo run --release --example nonabelian_search -- [P S BUDGET SEED]

use flat_holonomy::holonomy::{abelian_report, index_witness};
use flat_holonomy::search::search_nonabelian;

fn main() -> flat_holonomy::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (p, s, budget, seed) = match args.as_slice() {
        [p, s, b, k] => (*p, *s, *b, *k as u64),
        [] => (4, 4, 20_000, 0),
        _ => panic!("expected P S BUDGET SEED"),
    };
    let report = search_nonabelian((p, s), budget, seed)?;
    println!("signature ({p}, {s}), {budget} trials, seed {seed}");
    println!("{:?}", report.stats);
    for (spec, trial) in report.found.iter().zip(&report.found_trials).take(3) {
        let holonomy = abelian_report(spec)?;
        let witness =
            index_witness(spec, &holonomy)?.expect("non-abelian survivors carry a witness");
        println!(
            "trial {trial}: product pair {:?}, isotropic subspace of dim {}",
            witness.pair, witness.dim
        );
    }
    Ok(())
}
