//! Colored designs held by the words of fixed composition.
use jacobi_designs::catalog;
use jacobi_designs::codes::Composition;
use jacobi_designs::designs::{colored_design_check, generalized_colored_design_check, packing_covering_params};
use jacobi_designs::enumerators::SplitSpec;

fn main() -> jacobi_designs::Result<()> {
    let g = catalog::get("g12")?;
    for comp in ["6,3,3", "6,6,0", "3,6,3"] {
        let r = colored_design_check(&g, &Composition::parse(comp, 3)?, 3)?;
        println!("({comp}) t=3: design {} with {} blocks", r.is_design, r.block_count);
    }
    let h = catalog::get("h6")?;
    let r = colored_design_check(&h, &Composition::parse("2,2,2,0", 4)?, 3)?;
    println!("{}", packing_covering_params(&r, 6).statement);
    let c = catalog::get("c4")?;
    let spec = SplitSpec::parse(4, "1,2/3,4", None)?;
    let s = [Composition::parse("1,1,0", 3)?, Composition::parse("0,2,0", 3)?];
    let r = generalized_colored_design_check(&c, &spec, &s, &[1, 1])?;
    println!("split (1,1,0)|(0,2,0) t=(1,1): design {} with {} blocks", r.is_design, r.block_count);
    Ok(())
}
