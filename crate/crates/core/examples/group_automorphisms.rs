//! Automorphism groups and isomorphism tests for small groups.

use skewbrace::groups;

fn main() -> skewbrace::Result<()> {
    for (name, g) in groups::small_groups(8) {
        let auts = g.automorphisms()?;
        println!(
            "{name}: abelian={} nilpotent={} |Z|={} |G'|={} |Aut|={}",
            g.is_abelian(),
            g.is_nilpotent(),
            g.center().len(),
            g.derived_subgroup().len(),
            auts.len()
        );
    }
    let s3 = groups::symmetric(3);
    let d3 = groups::dihedral(3);
    match s3.isomorphic(&d3)? {
        Some(f) => println!("S3 ~ D3 via {f}"),
        None => println!("S3 and D3 differ"),
    }
    println!(
        "A4 ~ S4? {}",
        groups::alternating(4).isomorphic(&groups::symmetric(4))?.is_some()
    );
    Ok(())
}
