//! Distinguished apices, random presentations and both presentation checks.

use tropical_stiefel::presentations::{
    distinguished, presentation_space_member, sample_presentation, verify_presentation,
};
use tropical_stiefel::{TropMatrix, TropPoint};

fn main() -> tropical_stiefel::Result<()> {
    let v = TropMatrix::parse(&["0,0,0,0,0", "1,1,1,0,0", "inf,0,0,inf,inf"])?.stiefel()?;
    let data = distinguished(&v)?;
    for m in &data.members {
        println!(
            "apex {} x{} (cyclic flat {:?})",
            m.apex,
            m.multiplicity,
            m.flat.to_one_based()
        );
    }

    for seed in 1..=3 {
        let p = sample_presentation(&v, seed)?;
        let shown: Vec<String> = p.iter().map(TropPoint::to_string).collect();
        let same = TropMatrix::from_points(&p)?.stiefel()? == v;
        println!("seed {seed}: {shown:?} maps back: {same}");
    }

    // Every point lies on the linear space, but the repeated row cannot
    // produce the infinite minor.
    let wrong: Vec<TropPoint> = ["0,0,0,0,0", "1,1,1,0,0", "0,0,0,0,0"]
        .iter()
        .map(|s| TropPoint::parse(s))
        .collect::<Result<_, _>>()?;
    println!("presentation space: {}", presentation_space_member(&v, &wrong)?);
    match verify_presentation(&v, &wrong) {
        Ok(r) => println!("region counts: {} violations", r.violations.len()),
        Err(e) => println!("region counts: {e}"),
    }
    Ok(())
}
