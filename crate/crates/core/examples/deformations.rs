//! Equianalytic and equisingular deformation data for the unicuspidal quintic and sextic.

use curvelab::classify::{classify, deformation_report, rigidity_case_check};
use curvelab::local::parse_local_list;
use curvelab::{profile, Poly, RankMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (text, germ) in [("y^5+x^4*z", "T(4,5)"), ("y^6+x^5*z", "T(5,6)"), ("x^9+x^8*z+z*(x*z^3+y^4)^2", "A_31")] {
        let f = Poly::parse(text)?;
        let p = profile(&f, RankMode::Certified)?;
        let class = classify(&p)?;
        let locals = parse_local_list(germ)?;
        let r = deformation_report(&p, Some(&locals))?;
        println!("{text}: {class}, tau {}", p.tau);
        println!(
            "  ea tangent {}  orbit {}  expected {}  h1 {}  unobstructed {}  ea-rigid {}",
            r.ea_tangent_dim, r.orbit_dim, r.expected_dim, r.h1, r.unobstructed, r.ea_rigid
        );
        if let (Some(lo), Some(hi)) = (r.es_lower, r.es_upper) {
            println!("  es tangent dimension in [{lo}, {hi}]");
        }
        if class.is_nearly_free() {
            let v = rigidity_case_check(&p)?;
            println!("  rigidity criterion: rigid {} case {:?} consistent {}", v.rigid, v.case, v.consistent);
        }
    }
    Ok(())
}
