//! Region counts and Euler characteristics of S-maps supporting an annulus.

use roundfold::roundmap::smap_clause_counts;
use roundfold::*;

fn main() -> Result<()> {
    println!("type            counts                 euler  borders");
    for i1 in [0, 2] {
        for i2 in [0, 2] {
            let first = u32::from(i1) + u32::from(i2) + 3;
            for l in first..first + 3 {
                let e1 = if i1 == 2 { 1 } else { 0 };
                let e2 = if i2 == 2 { -1 } else { 0 };
                let b = s_map_descriptor(i1, i2, l, e1, e2)?;
                let counts = b.base.region_counts()?;
                assert_eq!(counts, smap_clause_counts(i1, i2, l));
                let closed = from_fiber_graph(&fiber_graph(&b.base)?)?;
                println!(
                    "({i1},{i2},{l},{e1:+},{e2:+})  {:<22} {:>5}  {}",
                    format!("{counts:?}"),
                    euler_characteristic(&closed),
                    b.border_count()
                );
            }
        }
    }
    Ok(())
}
