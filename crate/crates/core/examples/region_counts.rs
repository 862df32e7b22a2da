//! Per-vertex region counts for a presentation and for a near miss.

use tropical_stiefel::presentations::verify_presentation;
use tropical_stiefel::{TropMatrix, TropPoint};

fn main() -> tropical_stiefel::Result<()> {
    let a = TropMatrix::parse(&["0,inf,0,inf,0,inf", "inf,inf,inf,1,0,0", "inf,inf,0,0,1,inf", "0,0,1,inf,inf,inf"])?;
    let v = a.stiefel()?;
    let report = verify_presentation(&v, &a.row_points()?)?;
    println!("rows of the matrix: ok = {}", report.ok());

    // Replace the second row by a point of the linear space that belongs to
    // no presentation together with the others.
    let mut rows = a.row_points()?;
    rows[1] = TropPoint::parse("0,0,0,0,0,0")?;
    match verify_presentation(&v, &rows) {
        Ok(report) => {
            for w in &report.violations {
                println!(
                    "{} at flat {:?}: {} points, bound {}",
                    w.kind.as_str(),
                    w.flat.to_one_based(),
                    w.count,
                    w.bound
                );
            }
        }
        Err(e) => println!("rejected before counting: {e}"),
    }
    Ok(())
}
