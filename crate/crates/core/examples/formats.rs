//! Reading and writing `.rgf` graphs and `.rmd` descriptors.

use roundfold::format::{parse_bordered_rmd, parse_rgf, parse_rmd, print_bordered_rmd, print_rgf};
use roundfold::*;

const THETA: &str = "\
# two pants pieces glued along three tori
vertex p pants
vertex q pants
edge e1 p q
edge e2 p q
edge e3 p q
";

fn main() -> Result<()> {
    let g = parse_rgf(THETA)?;
    print!("{}", print_rgf(&g));
    println!("valid: {}", validate(&g).valid());

    match parse_rgf("vertex p pants\nedge e1 p x\n") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
    match parse_rmd("circle 3 index 0 birth a\ncircle 1 index 0 birth b\n") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }

    let text = print_bordered_rmd(&s_map_descriptor(0, 0, 4, 0, 0)?);
    print!("{text}");
    let back = parse_bordered_rmd(&text)?;
    println!("borders read back: {}", back.border_count());
    Ok(())
}
