//! Hilbert function of the Milnor algebra, saturation and syzygy dimensions.

use curvelab::jacobian::{ar_basis, is_syzygy, profile, saturation_slice};
use curvelab::{Poly, RankMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "x^9+z*(x*z^3+y^4)^2".to_string());
    let f = Poly::parse(&text)?;
    let p = profile(&f, RankMode::Certified)?;
    p.verify()?;
    println!("f = {f}\nd = {}, tau = {}, mdr = {}, sigma = {:?}, nu = {}", p.d, p.tau, p.mdr, p.sigma, p.nu);
    println!("{:>3} {:>6} {:>6} {:>6}", "k", "hilb", "n", "ar");
    for k in 0..=p.t {
        println!("{k:>3} {:>6} {:>6} {:>6}", p.hilb_at(k), p.n_at(k), p.ar_at(k));
    }

    let syz = ar_basis(&f, p.mdr)?;
    println!("\nsyzygies of degree mdr = {}:", p.mdr);
    for [a, b, c] in &syz {
        println!("  ({a}) f_x + ({b}) f_y + ({c}) f_z = 0");
        assert!(is_syzygy(&f, &[a.clone(), b.clone(), c.clone()]));
    }

    if let Some(sigma) = p.sigma {
        let slice = saturation_slice(&f, sigma, RankMode::Certified)?;
        println!("\nsaturation in degree sigma = {sigma} has dimension {}", slice.dim);
        if let Some(basis) = &slice.basis {
            for g in basis.iter().take(4) {
                println!("  {g}");
            }
        }
    }
    Ok(())
}
