//! Compares closed-form automorphism groups with the backtracking search.

use std::time::Instant;

use skewbrace::automorphism::brace_automorphisms_capped;
use skewbrace::families::{closed_form_aut, f2f3_brace, heisenberg_brace, Family};

fn main() -> skewbrace::Result<()> {
    let closed = closed_form_aut(Family::F2F3, 0)?;
    let searched = brace_automorphisms_capped(&f2f3_brace(), 12)?;
    println!(
        "F2^2 x F3: closed {} search {} equal {}",
        closed.len(),
        searched.len(),
        closed == searched
    );
    for p in [3u64, 5] {
        let t = Instant::now();
        let closed = closed_form_aut(Family::Heisenberg, p)?;
        let searched = brace_automorphisms_capped(&heisenberg_brace(p)?, 125)?;
        println!(
            "Heisenberg p={p}: closed {} search {} equal {} ({:.2?})",
            closed.len(),
            searched.len(),
            closed == searched,
            t.elapsed()
        );
    }
    Ok(())
}
