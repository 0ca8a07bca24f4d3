//! Arithmetic in GF(4) and the additive characters used by the transforms.
use jacobi_designs::algebra::FiniteField;
use jacobi_designs::enumerators::coefficient_order;

fn main() -> jacobi_designs::Result<()> {
    let f = FiniteField::gf4();
    let order = coefficient_order(&f);
    for a in f.elements() {
        let row: Vec<_> = f.elements().map(|b| f.label(f.mul(a, b)).to_string()).collect();
        println!("{:>2} * _ = {}", f.label(a), row.join(" "));
    }
    for b in f.elements() {
        let chi: Vec<_> = f.elements().map(|a| f.character(b, a, order).map(|c| c.to_string())).collect::<Result<_, _>>()?;
        println!("chi_{}: {}", f.label(b), chi.join(" "));
    }
    let f9 = FiniteField::with_order(9)?;
    println!("GF(9) has characteristic {} and modulus {:?}", f9.characteristic(), f9.modulus());
    Ok(())
}
