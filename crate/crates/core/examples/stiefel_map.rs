//! Tropical minors of a matrix and the valuated matroid they form.

use tropical_stiefel::TropMatrix;

fn main() -> tropical_stiefel::Result<()> {
    let a = TropMatrix::parse(&["0,0,0,0,0", "1,1,1,0,0", "inf,0,0,inf,inf"])?;
    let v = a.stiefel()?;
    println!("rank {} on {} elements", v.rank(), v.n());
    for (b, value) in v.dense() {
        println!("  V{:?} = {value}", b.to_one_based());
    }
    println!("dual: {:?}", v.dual());

    // A matrix with a 2x2 block of infinities has no finite maximal minor.
    let bad = TropMatrix::parse(&["inf,inf,0", "inf,inf,1"])?;
    println!("out of domain: {}", bad.stiefel().unwrap_err());
    Ok(())
}
