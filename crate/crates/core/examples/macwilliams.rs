//! The transform of an enumerator equals the enumerator of the dual code.
use jacobi_designs::catalog;
use jacobi_designs::enumerators::{cwe, macwilliams_scwe, scwe, SplitSpec};

fn main() -> jacobi_designs::Result<()> {
    let c = catalog::get("h6")?;
    let spec = SplitSpec::parse(6, "1,2,3/4,5,6", None)?;
    let w = scwe(&c, &spec)?;
    let t = macwilliams_scwe(&w, c.size(), true)?;
    let dual = c.dual(true)?;
    println!("transform equals the Hermitian dual's enumerator: {}", t == scwe(&dual, &spec)?);
    let e = cwe(&c);
    println!("cwe fixed by the Hermitian transform: {}", macwilliams_scwe(&e, c.size(), true)? == e);
    Ok(())
}
