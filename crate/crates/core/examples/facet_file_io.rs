//! Reading and writing the facet text and JSON formats.

use flagtop::io::{parse_any, parse_facets, to_json, write_facets};

fn main() -> flagtop::Result<()> {
    let text = "# a square\n4 1\n0 1\n1 2\n2 3\n0 3\n";
    let square = parse_facets(text)?;
    println!("parsed f = {}", square.f_vector());
    println!("text:\n{}", write_facets(&square, Some("normalized")));
    let json = to_json(&square);
    println!("json: {json}");
    println!("round trip equal: {}", parse_any(&json)? == square);

    match parse_facets("3 1\n0 1\n2 1\n") {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("malformed input rejected: {e}"),
    }
    Ok(())
}
