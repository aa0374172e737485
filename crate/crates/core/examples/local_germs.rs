//! Invariants of the germs u^p + v^q.

use curvelab::local::{parse_local_list, tpq_invariants};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>3} {:>5} {:>7} {:>5}", "p", "q", "mu", "tau_es", "m_es");
    for p in 2..=7 {
        for q in p..=8 {
            let t = tpq_invariants(p, q)?;
            println!("{p:>3} {q:>3} {:>5} {:>7} {:>5}", t.mu, t.tau_es, t.m_es);
        }
    }
    let list = parse_local_list("D4,D4,D4,A_1x7")?;
    println!("\nD4,D4,D4,A_1x7 has total Tjurina number {}", list.iter().map(|t| t.tau()).sum::<usize>());
    Ok(())
}
