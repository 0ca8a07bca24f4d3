//! Complete, split and Jacobi enumerators of a catalog code.
use jacobi_designs::catalog;
use jacobi_designs::enumerators::{complete_jacobi, cwe, jacobi, scwe, split_complete_jacobi, SplitSpec};

fn main() -> jacobi_designs::Result<()> {
    let c = catalog::get("c4")?;
    println!("cwe  = {}", cwe(&c));
    println!("scwe = {}", scwe(&c, &SplitSpec::parse(4, "1,2/3,4", None)?)?);
    println!("J_13 = {}", jacobi(&c, &[1, 3])?);
    println!("CJ_13 = {}", complete_jacobi(&c, &[1, 3])?);
    println!("SCJ = {}", split_complete_jacobi(&c, &SplitSpec::parse(4, "1,2/3,4", Some("1/3"))?)?);
    Ok(())
}
