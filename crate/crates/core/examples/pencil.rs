//! Deforming the unicuspidal sextic along monomials of its saturation.

use curvelab::classify::analyze_pencil;
use curvelab::{Poly, RankMode, Rat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Poly::parse("y^6+x^5*z")?;
    let ts: Vec<Rat> = ["0", "1", "-3", "2/7"].iter().map(|s| s.parse().unwrap()).collect();
    for h in ["x^4*y^2", "x^3*y^3", "x^2*y^4", "x*y^5"] {
        println!("f + t*{h}");
        for row in analyze_pencil(&f, &Poly::parse(h)?, &ts, RankMode::Certified)? {
            match row.result {
                Ok((p, class)) => println!("  t = {:<5} {class:<16} mdr {} tau {}", row.t.to_string(), p.mdr, p.tau),
                Err(e) => println!("  t = {:<5} {e}", row.t.to_string()),
            }
        }
    }
    Ok(())
}
