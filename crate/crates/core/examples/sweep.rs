//! Predicted versus observed mdr and tau over family ranges in probabilistic mode.

use curvelab::sweep::{family_range, render, sweep};
use curvelab::RankMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut members = family_range("fz1", 5, 9)?;
    members.extend(family_range("fz2", 4, 6)?);
    members.extend(family_range("fe", 5, 6)?);
    let rows = sweep(&members, RankMode::Probabilistic { seed: 2024 }, false);
    print!("{}", render(&rows));
    Ok(())
}
