//! Builds a small brace from Cayley tables and inspects its structure.

use skewbrace::{groups, SkewBrace};

fn main() -> skewbrace::Result<()> {
    // Z/4 with circ given by a∘b = a + b + 2ab.
    let dot = groups::cyclic(4).rows();
    let circ: Vec<Vec<usize>> = (0..4)
        .map(|a| (0..4).map(|b| (a + b + 2 * a * b) % 4).collect())
        .collect();
    let a = SkewBrace::from_tables(&dot, &circ)?;
    a.verify_exhaustive()?;
    println!("order: {}", a.order());
    println!("trivial: {}", a.is_trivial());
    println!("predicates: {:?}", a.predicates());
    println!("ker lambda: {:?}", a.kernel_lambda());
    println!("ker rho: {:?}", a.kernel_rho());
    for x in 0..4 {
        println!("lambda_{x} = {}", a.lambda(x));
    }
    println!("invariants clean: {}", a.invariant_report().is_clean());

    // Swapping two entries of circ breaks the Latin property.
    let mut bad = circ.clone();
    bad[1].swap(0, 1);
    match SkewBrace::from_tables(&dot, &bad) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
