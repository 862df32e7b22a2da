//! A valuated strict gammoid from a weighted digraph, and the digraph
//! recovered from a presentation of the dual.

use tropical_stiefel::gammoid::{digraph_from_presentation, gammoid_valuation, WeightedDigraph};
use tropical_stiefel::trop::q;
use tropical_stiefel::{Subset, TropMatrix};

fn main() -> tropical_stiefel::Result<()> {
    let e = |i: usize, j: usize, w: i64| (i - 1, j - 1, q(w));
    let sinks = Subset::from_elements([3, 5]);
    let g = WeightedDigraph::new(
        6,
        sinks,
        [e(1, 3, 0), e(1, 5, 0), e(5, 4, 1), e(5, 6, 0), e(3, 4, 0), e(3, 5, 1), e(2, 1, 0), e(2, 3, 1)],
    )?;
    let v = gammoid_valuation(&g)?;
    for (b, value) in v.dense() {
        println!("  V{:?} = {value}", b.to_one_based());
    }

    let a = TropMatrix::parse(&["0,inf,0,inf,0,inf", "inf,inf,inf,1,0,0", "inf,inf,0,0,1,inf", "0,0,1,inf,inf,inf"])?;
    let h = digraph_from_presentation(&a.row_points()?, None, None)?;
    println!("recovered digraph with sinks {:?}:", h.sinks().to_one_based());
    for (i, j, w) in h.edges() {
        println!("  {} -> {} weight {w}", i + 1, j + 1);
    }
    println!("same valuation: {}", gammoid_valuation(&h)? == v);
    Ok(())
}
