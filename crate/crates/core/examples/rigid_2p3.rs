//! Rigid braces of order 2p^3 for a prime given on the command line.

use std::time::Instant;

use skewbrace::automorphism::structured_aut_of_product_capped;
use skewbrace::construction::product_brace_capped;
use skewbrace::families::{order_two_set, rigid_2p3_construction_capped, FamilyParams};

fn main() -> skewbrace::Result<()> {
    let p: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let params = FamilyParams::default_for(p)?;
    let cap = 2 * (p as usize).pow(3);
    let t = Instant::now();
    let data = rigid_2p3_construction_capped(&params, cap)?;
    let a = product_brace_capped(&data, cap)?;
    println!("p={p} order {} built in {:.2?}", a.order(), t.elapsed());
    println!("order-two candidates: {}", order_two_set(&params).len());
    let s = structured_aut_of_product_capped(&data, &a, cap)?;
    println!(
        "|Aut| = {} via {:?} in {:.2?}",
        s.automorphisms.len(),
        s.characteristic,
        t.elapsed()
    );
    Ok(())
}
