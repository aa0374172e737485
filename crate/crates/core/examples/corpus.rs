//! Run the shipped regression corpus: `cargo run --release --example corpus -- [filter]`.

use curvelab::corpus::{default_dir, filter, load_dir, render, run, Summary};
use curvelab::RankMode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pattern = std::env::args().nth(1);
    let entries = load_dir(&default_dir())?;
    let selected = filter(&entries, pattern.as_deref());
    let results = run(&selected, RankMode::Certified);
    print!("{}", render(&results));
    if !Summary::of(&results).ok() {
        std::process::exit(1);
    }
    Ok(())
}
