//! λ tables of a code as text and CSV.
use jacobi_designs::catalog;
use jacobi_designs::codes::Composition;
use jacobi_designs::designs::lambda_table;

fn main() -> jacobi_designs::Result<()> {
    let c = catalog::get("c4iv")?;
    let table = lambda_table(&c, &[Composition::parse("2,2,0,0", 4)?], 2)?;
    print!("{}", table.to_text());
    print!("{}", table.to_csv());
    Ok(())
}
