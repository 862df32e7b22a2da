//! Stable intersections of tropical hyperplanes and stable sums of points.

use tropical_stiefel::{TropMatrix, ValuatedMatroid};

fn main() -> tropical_stiefel::Result<()> {
    let a = TropMatrix::parse(&["0,inf,0,inf,0,inf", "inf,inf,inf,1,0,0", "inf,inf,0,0,1,inf", "0,0,1,inf,inf,inf"])?;
    let rows = a.row_points()?;
    let mut acc = ValuatedMatroid::hyperplane(&rows[0]);
    for r in &rows[1..] {
        acc = acc.stable_intersection(&ValuatedMatroid::hyperplane(r))?;
        println!("rank {} after intersecting with H({r})", acc.rank());
    }
    println!("equals the dual of the Stiefel image: {}", acc == a.stiefel()?.dual());

    // Points are rank-one valuations; their stable sum is the Stiefel image.
    let points: Vec<ValuatedMatroid> = rows
        .iter()
        .map(|r| TropMatrix::from_points(std::slice::from_ref(r)).and_then(|m| m.stiefel()))
        .collect::<Result<_, _>>()?;
    let mut sum = points[0].clone();
    for p in &points[1..] {
        sum = sum.stable_sum(p)?;
    }
    println!("stable sum equals the Stiefel image: {}", sum == a.stiefel()?);
    Ok(())
}
