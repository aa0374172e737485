//! Full report for one curve: `cargo run --example analyze_curve -- "y^5+x^4*z" "T(4,5)"`.

use curvelab::local::parse_local_list;
use curvelab::report::{analyze, AnalyzeOptions, InputEcho};
use curvelab::Poly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "x^9+z*(x*z^3+y^4)^2".to_string());
    let local_types = args.next().map(|s| parse_local_list(&s)).transpose()?;
    let f = Poly::parse(&text)?;
    let opts = AnalyzeOptions { local_types, ..Default::default() };
    let report = analyze(InputEcho::Poly { text }, &f, &opts)?;
    println!("{}", report.render());
    println!("{}", report.to_json());
    Ok(())
}
