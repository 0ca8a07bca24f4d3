//! Building a code from a generator matrix, its duals and derived codes.
use jacobi_designs::algebra::FiniteField;
use jacobi_designs::codes::LinearCode;

fn main() -> jacobi_designs::Result<()> {
    let f = FiniteField::prime(3)?;
    let c = LinearCode::from_labels(&f, &[vec!["1", "0", "1", "1"], vec!["0", "1", "1", "2"]])?;
    println!("[{}, {}] code with {} words", c.length(), c.dimension(), c.size());
    println!("weights {:?}", c.weight_distribution());
    println!("self-dual: {}", c.classify().self_dual);
    let p = c.puncture(4)?;
    let s = c.shorten(4)?;
    println!("punctured at 4: {} words; shortened at 4: {} words", p.size(), s.size());
    println!("compositions: {}", c.compositions().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    Ok(())
}
