//! Finds a verified non-trivial automorphism for every brace of order 8.

use skewbrace::automorphism::nontrivial_witness;
use skewbrace::groups;
use skewbrace::oracle::enumerate_braces_on;

fn main() -> skewbrace::Result<()> {
    for (name, g) in groups::small_groups(8) {
        for (i, a) in enumerate_braces_on(&g)?.braces.iter().enumerate() {
            let w = nontrivial_witness(a)?;
            let map = w.map.as_ref().map(ToString::to_string).unwrap_or_default();
            println!("{name}#{i}: {} element={:?} map={map}", w.kind, w.element);
        }
    }
    Ok(())
}
