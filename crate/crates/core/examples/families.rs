//! The three infinite families of tricuspidal rational curves and the classical quartic and quintics.

use curvelab::families::{classic, fe_q, fz1_curve, fz2_q, ClassicName, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("FZ1, d = 6, a = 3:\n  {}", fz1_curve(6, 3)?);
    for k in 4..=7 {
        println!("q_{k}  = {}", fz2_q(k)?);
    }
    for k in 5..=7 {
        println!("q~_{k} = {}", fe_q(k)?);
    }
    for fam in [Family::FZ2 { k: 4 }, Family::FE { k: 5 }] {
        let spec = fam.spec()?;
        println!("{fam}: degree {}, predicted {}", fam.degree(), spec.expected.class);
        if let Some(p) = fam.parametrization()? {
            println!("  {p}");
        }
    }
    for name in ClassicName::ALL {
        let c = classic(name);
        println!("{name}: {}", c.param);
    }
    Ok(())
}
