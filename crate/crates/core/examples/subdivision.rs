//! Cells of the matroid subdivision and the vertices of the tropical linear
//! space.

use tropical_stiefel::{TropMatrix, TropPoint};

fn main() -> tropical_stiefel::Result<()> {
    let v = TropMatrix::parse(&["0,0,0,0", "0,0,1,1"])?.stiefel()?;
    let cx = v.cell_complex()?;
    for cell in &cx.cells {
        let bases: Vec<_> = cell.matroid.bases().iter().map(|b| b.to_one_based()).collect();
        let tag = if cell.is_maximal { "maximal" } else { "face" };
        println!("{tag:>7} {bases:?} at {}", cell.witness);
    }
    for (m, x) in cx.connected() {
        println!("vertex {x} of a cell with {} bases", m.bases().len());
    }
    let x = TropPoint::parse("0,0,5,5")?;
    println!("initial matroid at {x}: {:?}", v.initial_matroid(&x)?);
    Ok(())
}
