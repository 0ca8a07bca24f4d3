//! The acceptance checks, one line each.
use jacobi_designs::verify;

fn main() -> jacobi_designs::Result<()> {
    let ids: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let criteria = if ids.is_empty() {
        verify::run_all()?
    } else {
        ids.into_iter().map(verify::run).collect::<Result<Vec<_>, _>>()?
    };
    print!("{}", verify::report(&criteria));
    Ok(())
}
