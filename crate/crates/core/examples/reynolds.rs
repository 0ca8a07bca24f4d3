//! Reynolds images of seed monomials, their rank, and rank under the
//! merge of nonzero colors.
use jacobi_designs::invariants::{
    g_iv, invariant_basis, nonzero_merge, rank, reynolds_family, specialization_rank_check, SEEDS_G4_3_3,
};

fn main() -> jacobi_designs::Result<()> {
    let p = g_iv();
    let g = p.close()?;
    let family = reynolds_family(&p, &g, &SEEDS_G4_3_3)?;
    println!("rank of the images at (3,3): {}", rank(&family));
    for l in 1..=2 {
        let basis = invariant_basis(&g, &p.field, l, 6 - l)?;
        let r = specialization_rank_check(&basis, &nonzero_merge(&p.field))?;
        println!("({l},{}): rank {} before merging, {} after", 6 - l, r.rank_before, r.rank_after);
    }
    Ok(())
}
