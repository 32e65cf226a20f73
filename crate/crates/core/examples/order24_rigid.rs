//! The rigid brace of order 24 built as a Z/2 extension of F2^2 x F3.

use skewbrace::automorphism::{brace_automorphisms, structured_aut_of_product};
use skewbrace::construction::check_product_structure;
use skewbrace::families::{order24_construction, order24_rigid_brace};
use skewbrace::groups;

fn main() -> skewbrace::Result<()> {
    let data = order24_construction();
    let a = order24_rigid_brace();
    println!("order: {}", a.order());
    println!("product structure: {}", check_product_structure(&data, &a).all_pass());
    println!("circ ~ S4: {}", a.circ().isomorphic(&groups::symmetric(4))?.is_some());
    println!("predicates: {:?}", a.predicates());
    let s = structured_aut_of_product(&data, &a)?;
    println!("structured: |Aut| = {} ({:?})", s.automorphisms.len(), s.characteristic);
    println!("generic: |Aut| = {}", brace_automorphisms(&a)?.len());
    Ok(())
}
