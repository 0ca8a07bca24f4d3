//! Bivariate Molien series of the two invariant groups.
use jacobi_designs::invariants::{g_iii, g_iv, molien_bivariate};

fn main() -> jacobi_designs::Result<()> {
    for (p, d) in [(g_iv(), 8), (g_iii(), 12)] {
        let g = p.close()?;
        let m = molien_bivariate(&g, d)?;
        println!("{} (order {}): f[{d}] = {}", p.name, g.order(), m.render(d));
    }
    Ok(())
}
