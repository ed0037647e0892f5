//! Searches every signature with s <= 3 for non-abelian holonomy; none should survive.
//!
//! cargo run --release --example signature_scan -- [BUDGET SEED]

use flat_holonomy::search::theorem_scan;

fn main() -> flat_holonomy::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (budget, seed) = match args.as_slice() {
        [b, k] => (*b as usize, *k),
        [] => (2_000, 0),
        _ => panic!("expected BUDGET SEED"),
    };
    let summary = theorem_scan(3, 5, budget, seed)?;
    for r in &summary.reports {
        let st = r.stats;
        println!(
            "({}, {}): abelian {:>6}  word failures {:>6}  survivors {}",
            r.signature.0, r.signature.1, st.abelian, st.word_wolf_failed, st.survivors
        );
    }
    println!("violations: {}", summary.violations.len());
    Ok(())
}
