//! Implicit equations of parametrized curves, checked by substitution.

use curvelab::families::{fz2_param, Parametrization};
use curvelab::implicit::{implicitize, implicitize_search, verify_on_curve};
use curvelab::BinaryForm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Parametrization::new(BinaryForm::parse("s^3")?, BinaryForm::parse("s*t^2")?, BinaryForm::parse("t^3")?)?;
    let r = implicitize_search(&p)?;
    println!("{p}\n  -> {} (verified {})", r.f, verify_on_curve(&r.f, &p));

    let p = fz2_param(4)?;
    let r = implicitize(&p, p.degree())?;
    println!("{p}\n  -> {} (verified {})", r.f, verify_on_curve(&r.f, &p));
    Ok(())
}
