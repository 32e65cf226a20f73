//! Writes a brace and a construction to text and reads them back.

use skewbrace::families::{order24_construction, order24_rigid_brace};
use skewbrace::io::{construction_to_text, parse_construction, BraceFile};

fn main() -> skewbrace::Result<()> {
    let file = BraceFile::new(order24_rigid_brace()).with_comment("example");
    let text = file.to_text();
    let back = BraceFile::parse(&text)?;
    println!(
        "brace: {} bytes, round trip exact: {}",
        text.len(),
        back.to_text() == text
    );
    println!("{}", text.lines().take(4).collect::<Vec<_>>().join("\n"));

    let data = order24_construction();
    let text = construction_to_text(&data);
    let back = parse_construction(&text)?;
    println!(
        "construction: {} bytes, round trip exact: {}",
        text.len(),
        construction_to_text(&back) == text
    );

    match BraceFile::parse("skewbrace v1\nn=2\ndot:\n0 1\n") {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("truncated file: {e}"),
    }
    Ok(())
}
