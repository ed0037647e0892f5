//! Issue isotropy certificates, re-verify them, and reject a tampered copy.

use flat_holonomy::certify::{
    translational_isotropy_certificate, verify_certificate, IsotropyCertificate,
};
use flat_holonomy::fixtures;
use flat_holonomy::io::Q;
use flat_holonomy::linalg::int;

fn main() -> flat_holonomy::Result<()> {
    for spec in [
        fixtures::quad22(),
        fixtures::wolf42(),
        fixtures::trivial(2, 1),
        fixtures::nonabelian44(),
    ] {
        let cert = translational_isotropy_certificate(&spec)?;
        let reloaded = IsotropyCertificate::from_json(&cert.to_json())?;
        println!(
            "{}: {} (valid = {})",
            spec.name(),
            cert.status,
            verify_certificate(&reloaded)?
        );
        for step in &cert.chain {
            println!("  ({}) {}: {}", step.id, step.claim, step.verified);
        }
    }

    let mut forged = translational_isotropy_certificate(&fixtures::quad22())?;
    forged.t_lower[0][2] = Q(int(5));
    println!(
        "forged translation basis accepted: {}",
        verify_certificate(&forged)?
    );
    Ok(())
}
