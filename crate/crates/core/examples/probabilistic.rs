//! Certified and modular ranks side by side, with timings.

use std::time::Instant;

use curvelab::{profile, Poly, RankMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Poly::parse("x^9+z*(x*z^3+y^4)^2")?;
    for mode in [RankMode::Certified, RankMode::Probabilistic { seed: 7 }, RankMode::Probabilistic { seed: 8 }] {
        let start = Instant::now();
        let p = profile(&f, mode)?;
        println!(
            "{mode:?} primes {:?}: tau {} mdr {} nu {} in {:.3} s",
            mode.primes(),
            p.tau,
            p.mdr,
            p.nu,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
