//! Enumerates braces up to isomorphism on every group of order at most 8.

use skewbrace::groups;
use skewbrace::oracle::{enumerate_braces_on, ORACLE_MAX_ORDER};

fn main() -> skewbrace::Result<()> {
    for n in 1..=ORACLE_MAX_ORDER {
        let mut total = 0;
        for (name, g) in groups::small_groups(n) {
            let corpus = enumerate_braces_on(&g)?;
            let auts: Vec<usize> = corpus.labels.iter().map(|l| l.aut_order).collect();
            println!(
                "  {name}: {} braces ({} labelled), |Aut| = {auts:?}",
                corpus.len(),
                corpus.labelled_count
            );
            total += corpus.len();
        }
        println!("order {n}: {total}");
    }
    Ok(())
}
