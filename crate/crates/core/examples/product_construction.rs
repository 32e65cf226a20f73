//! Extends a brace by Z/2 and shows the compatibility checks at work.

use skewbrace::construction::{check_product_structure, product_brace, ConstructionData};
use skewbrace::{groups, Permutation, SkewBrace};

fn main() -> skewbrace::Result<()> {
    let b = SkewBrace::trivial(&groups::cyclic(3));
    let c = groups::cyclic(2);
    let id = Permutation::identity(3);
    let neg = Permutation::from_images(vec![0, 2, 1])?;

    // φ = γ = ψ = inversion gives the dihedral group of order 6 in both operations.
    let data = ConstructionData::new(
        b.clone(),
        c.clone(),
        vec![id.clone(), neg.clone()],
        vec![id.clone(), neg.clone()],
        vec![id.clone(), neg.clone()],
    );
    match data {
        Ok(d) => {
            let a = product_brace(&d)?;
            println!(
                "accepted: order {}, structure {}",
                a.order(),
                check_product_structure(&d, &a).all_pass()
            );
            println!(
                "dot abelian: {}, circ abelian: {}",
                a.dot().is_abelian(),
                a.circ().is_abelian()
            );
        }
        Err(e) => println!("rejected: {e}"),
    }

    // Inversion in ψ alone fails the cocycle condition.
    match ConstructionData::new(
        b,
        c,
        vec![id.clone(), id.clone()],
        vec![id.clone(), id.clone()],
        vec![id, neg],
    ) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
