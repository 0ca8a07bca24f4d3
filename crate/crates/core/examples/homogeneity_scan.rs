//! Strengths up to which every composition carries a design.
use jacobi_designs::catalog;
use jacobi_designs::designs::homogeneity_scan;

fn main() -> jacobi_designs::Result<()> {
    for name in ["c4iv", "h6", "c8iv", "g12"] {
        let r = homogeneity_scan(&catalog::get(name)?, 4)?;
        println!("{name}: delta_c = {}, s_c = {}{}", r.delta_c, r.s_c, if r.capped { " (capped)" } else { "" });
    }
    Ok(())
}
