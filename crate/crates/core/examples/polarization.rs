//! Jacobi polynomials recovered from the weight enumerator by polarization,
//! and the one-coordinate decomposition of split Jacobi polynomials.
use jacobi_designs::catalog;
use jacobi_designs::enumerators::{verify_decomposition, verify_polarization, SplitSpec};

fn main() -> jacobi_designs::Result<()> {
    let g = catalog::get("g12")?;
    let whole = SplitSpec::whole(12);
    for t in 1..=3 {
        let r = verify_polarization(&g, &whole, &[t])?;
        println!(
            "|T| = {t}: {} sets, independent of T {}, equal to polarization {}",
            r.tuples_checked, r.independent, r.matches_polarization
        );
    }
    let c = catalog::get("c4")?;
    let spec = SplitSpec::parse(4, "1,2/3,4", None)?;
    for i in 1..=4 {
        let k = spec.block_of(i).expect("covered");
        println!("decomposition at coordinate {i}: {}", verify_decomposition(&c, &spec, k, i)?.holds());
    }
    Ok(())
}
