//! Deciding transversality of matroids, with presentations or certificates.

use tropical_stiefel::subset::{k_subsets, Subset};
use tropical_stiefel::transversal::{is_transversal, TransversalVerdict};
use tropical_stiefel::Matroid;

fn main() -> tropical_stiefel::Result<()> {
    let pairs = |e: &[[usize; 2]]| -> Vec<Subset> {
        e.iter().map(|p| Subset::from_elements(p.iter().map(|i| i - 1))).collect()
    };
    let bad = pairs(&[[1, 2], [3, 4], [5, 6]]);
    let snowflake = Matroid::new(6, k_subsets(6, 2).into_iter().filter(|b| !bad.contains(b)))?;
    let line = Matroid::new(4, k_subsets(4, 2).into_iter().filter(|b| *b != bad[1]))?;

    for (name, m) in [("parallel pair", line), ("three parallel pairs", snowflake)] {
        match is_transversal(&m) {
            TransversalVerdict::Yes(p) => {
                let sets: Vec<_> = p.sets().iter().map(|s| s.to_one_based()).collect();
                println!("{name}: transversal, maximal presentation {sets:?}");
            }
            TransversalVerdict::No { tau, family } => {
                let fam: Vec<_> = family.family.iter().map(|s| s.to_one_based()).collect();
                println!("{name}: not transversal, family {fam:?} ({} > {})", family.lhs, family.rhs);
                println!("  tau witness: {tau:?}");
            }
        }
    }
    Ok(())
}
