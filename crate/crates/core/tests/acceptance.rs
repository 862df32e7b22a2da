//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
//! only. Exits nonzero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tropical_stiefel::gammoid::{
    digraph_from_presentation, gammoid_valuation, linking_value, stable_intersect_hyperplanes,
    WeightedDigraph,
};
use tropical_stiefel::matroid::Matroid;
use tropical_stiefel::oracle::{
    all_set_presentations, linking_bruteforce, presentations_by_flats, subdivision_sample,
    trop_minor_bruteforce,
};
use tropical_stiefel::presentations::{
    contract_presentation, distinguished, presentation_space_member, verify_presentation, zoom,
};
use tropical_stiefel::subset::{k_subsets, Subset};
use tropical_stiefel::transversal::{
    is_transversal, mason_ingleton_test, tau_test, verify_set_presentation, SetSystem,
    TransversalVerdict,
};
use tropical_stiefel::trop::{q, relsupp, relsupp0, Trop, TropMatrix, TropPoint};
use tropical_stiefel::{Error, ValuatedMatroid};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn s(e: &[usize]) -> Subset {
    Subset::from_elements(e.iter().map(|i| i - 1))
}

fn pt(x: &str) -> TropPoint {
    TropPoint::parse(x).unwrap()
}

fn matrix(rows: &[&str]) -> TropMatrix {
    TropMatrix::parse(rows).unwrap()
}

fn valuation(n: usize, d: usize, special: &[(&[usize], Trop)]) -> ValuatedMatroid {
    ValuatedMatroid::from_values(
        n,
        d,
        k_subsets(n, d).into_iter().map(|b| {
            let v = special
                .iter()
                .find(|(e, _)| s(e) == b)
                .map_or(Trop::zero(), |(_, t)| t.clone());
            (b, v)
        }),
    )
    .unwrap()
}

fn snowflake() -> ValuatedMatroid {
    let one = Trop::int(1);
    valuation(6, 2, &[(&[1, 2], one.clone()), (&[3, 4], one.clone()), (&[5, 6], one)])
}

fn snowflake_matroid() -> Matroid {
    let bad = [s(&[1, 2]), s(&[3, 4]), s(&[5, 6])];
    Matroid::new(6, k_subsets(6, 2).into_iter().filter(|b| !bad.contains(b))).unwrap()
}

fn zoom_matrix() -> TropMatrix {
    matrix(&["0,0,0,0,0", "1,1,1,0,0", "inf,0,0,inf,inf"])
}

fn dual_snowflake_matrix() -> TropMatrix {
    matrix(&[
        "0,inf,0,inf,0,inf",
        "inf,inf,inf,1,0,0",
        "inf,inf,0,0,1,inf",
        "0,0,1,inf,inf,inf",
    ])
}

fn sorted(mut v: Vec<TropPoint>) -> Vec<TropPoint> {
    v.sort();
    v
}

fn criterion_1() -> Outcome {
    let v = matrix(&["0,0,0,0", "0,0,1,1"]).stiefel().map_err(|e| e.to_string())?;
    let want = valuation(4, 2, &[(&[3, 4], Trop::int(1))]);
    ensure!(v == want, "got {v:?}");
    Ok("V_34 = 1, other minors 0".into())
}

fn criterion_2() -> Outcome {
    let a = zoom_matrix();
    let v = a.stiefel().map_err(|e| e.to_string())?;
    let want = valuation(5, 3, &[(&[1, 2, 3], Trop::int(1)), (&[1, 4, 5], Trop::Inf)]);
    ensure!(v == want, "stiefel gave {v:?}");
    let rows = points(&a);
    let x = rows[1].clone();
    let zoomed: Vec<TropPoint> = rows.iter().map(|y| zoom(&x, y).unwrap()).collect();
    let want_zoom = vec![pt("0,0,0,inf,inf"), pt("0,0,0,0,0"), pt("inf,0,0,inf,inf")];
    ensure!(zoomed == want_zoom, "zoom gave {zoomed:?}");
    let flats: Vec<Subset> = rows.iter().map(|y| relsupp(&x, y).unwrap()).collect();
    ensure!(flats == vec![s(&[4, 5]), Subset::EMPTY, s(&[1, 4, 5])], "relsupp gave {flats:?}");
    ensure!(
        zoomed.iter().map(relsupp0).collect::<Vec<_>>() == flats,
        "zoom supports differ from relsupp"
    );
    let cell = v.initial_matroid(&x).unwrap();
    let system = SetSystem::from_complements(5, &flats);
    ensure!(verify_set_presentation(&cell, &system), "{system:?} rejected for {cell:?}");
    let zv = TropMatrix::from_points(&zoomed).unwrap().stiefel().unwrap();
    ensure!(zv == ValuatedMatroid::from_matroid(&cell), "zoomed rows do not present V^x");
    Ok("zoom rows and complements {45, {}, 145} present V^x".into())
}

fn criterion_3() -> Outcome {
    let m = snowflake_matroid();
    let want = vec![s(&[1, 2]), s(&[3, 4]), s(&[5, 6])];
    match is_transversal(&m) {
        TransversalVerdict::No { family, .. } => {
            ensure!(family.family == want, "certificate {:?}", family.family);
            ensure!(family.lhs > family.rhs, "certificate is not violated");
        }
        TransversalVerdict::Yes(p) => return Err(format!("accepted with {p:?}")),
    }
    ensure!(tau_test(&m).is_err(), "tau test accepts");
    let ingleton = mason_ingleton_test(&m).err().ok_or("Mason–Ingleton accepts")?;
    ensure!(ingleton.family == want, "Mason–Ingleton family {:?}", ingleton.family);
    Ok("rejected with family {12, 34, 56} by both tests".into())
}

fn criterion_4() -> Outcome {
    let v = zoom_matrix().stiefel().unwrap();
    let data = distinguished(&v).map_err(|e| e.to_string())?;
    let want = sorted(vec![pt("0,0,0,0,0"), pt("1,1,1,0,0"), pt("inf,0,0,inf,inf")]);
    ensure!(sorted(data.apices()) == want, "apices {:?}", data.apices());
    ensure!(data.total_multiplicity() == 3, "multiplicity {}", data.total_multiplicity());
    Ok("apices 00000, 11100, inf00infinf with multiplicity 3".into())
}

fn criterion_5() -> Outcome {
    let v = snowflake();
    let vd = v.dual();
    let data = distinguished(&vd).map_err(|e| e.to_string())?;
    let want = sorted(vec![
        pt("0,0,0,0,0,0"),
        pt("1,1,1,1,0,0"),
        pt("1,1,0,0,1,1"),
        pt("0,0,1,1,1,1"),
    ]);
    ensure!(sorted(data.apices()) == want, "apices {:?}", data.apices());
    let a = dual_snowflake_matrix();
    let rows = points(&a);
    ensure!(a.stiefel().unwrap() == vd, "matrix does not map to the dual");
    ensure!(presentation_space_member(&vd, &rows).unwrap(), "presentation space rejects");
    let report = verify_presentation(&vd, &rows).map_err(|e| e.to_string())?;
    ensure!(report.ok(), "region counts reject: {report:?}");
    ensure!(
        stable_intersect_hyperplanes(&rows, &v).unwrap(),
        "stable intersection of hyperplanes is not the snowflake"
    );
    let g = digraph_from_presentation(&rows, Some(s(&[1, 2, 3, 5])), Some(&[0, 4, 2, 1]))
        .map_err(|e| e.to_string())?;
    ensure!(g.sinks() == s(&[4, 6]), "sinks {:?}", g.sinks());
    ensure!(gammoid_valuation(&g).unwrap() == v, "digraph does not give the snowflake");
    Ok("apices, presentation, hyperplanes and digraph all match".into())
}

struct Case {
    v: ValuatedMatroid,
    rows: Vec<TropPoint>,
    /// Perturbed rows and whether they still map to `v`.
    perturbed: Vec<TropPoint>,
    still_presents: bool,
    perturbed_image: Option<ValuatedMatroid>,
}

fn minors_changed(a: &TropMatrix, b: &TropMatrix) -> bool {
    k_subsets(a.cols(), a.rows())
        .into_iter()
        .any(|s| a.trop_minor(s) != b.trop_minor(s))
}

fn suite(count: usize) -> Vec<Case> {
    let mut rng = rng(2024);
    let mut out = Vec::new();
    while out.len() < count {
        let (a, v) = random_presented(&mut rng);
        let b = loop {
            let b = perturb(&mut rng, &a);
            if minors_changed(&a, &b) {
                break b;
            }
        };
        out.push(Case {
            rows: points(&a),
            perturbed: points(&b),
            still_presents: presents(&b, &v),
            perturbed_image: b.stiefel().ok(),
            v,
        });
    }
    out
}

const SUITE_SIZE: usize = 250;

fn suite_check(decide: impl Fn(&ValuatedMatroid, &[TropPoint]) -> Result<bool, Error> + Sync) -> Outcome {
    let cases = suite(SUITE_SIZE);
    let failures: Vec<String> = cases
        .par_iter()
        .enumerate()
        .filter_map(|(i, c)| {
            match decide(&c.v, &c.rows) {
                Ok(true) => {}
                r => return Some(format!("case {i}: rows judged {r:?}")),
            }
            match decide(&c.v, &c.perturbed) {
                Ok(b) if b == c.still_presents => None,
                r => Some(format!("case {i}: perturbation judged {r:?}, expected {}", c.still_presents)),
            }
        })
        .collect();
    ensure!(failures.is_empty(), "{} failures, first: {}", failures.len(), failures[0]);
    let same = cases.iter().filter(|c| c.still_presents).count();
    Ok(format!(
        "{SUITE_SIZE} presented matrices, {SUITE_SIZE} perturbations ({same} still present V)"
    ))
}

fn criterion_6() -> Outcome {
    suite_check(presentation_space_member)
}

fn criterion_7() -> Outcome {
    suite_check(|v, p| match verify_presentation(v, p) {
        Ok(r) => Ok(r.ok()),
        Err(Error::PointOutsideL { .. }) => Ok(false),
        Err(e) => Err(e),
    })
}

fn criterion_8() -> Outcome {
    let cases = suite(SUITE_SIZE);
    let mut all: Vec<&ValuatedMatroid> = cases.iter().map(|c| &c.v).collect();
    all.extend(
        cases
            .iter()
            .filter_map(|c| c.perturbed_image.as_ref())
            .filter(|w| w.underlying().coloops().is_empty()),
    );
    let failures: Vec<String> = all
        .par_iter()
        .filter_map(|v| match distinguished(v) {
            Ok(d) if d.total_multiplicity() == v.rank() => None,
            r => Some(format!("{v:?}: {r:?}")),
        })
        .collect();
    ensure!(failures.is_empty(), "{} failures, first: {}", failures.len(), failures[0]);
    Ok(format!("{} transversal valuations", all.len()))
}

fn random_digraph(rng: &mut ChaCha8Rng) -> WeightedDigraph {
    loop {
        let n = rng.gen_range(2..=6);
        let d = rng.gen_range(1..n);
        let sinks = Subset::from_elements(rand::seq::index::sample(rng, n, d));
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && rng.gen_bool(0.4) {
                    edges.push((i, j, q(rng.gen_range(-1..=3))));
                }
            }
        }
        if let Ok(g) = WeightedDigraph::new(n, sinks, edges) {
            return g;
        }
    }
}

const SAMPLES: usize = 10_000;

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    for _ in 0..500 {
        let n = r.gen_range(1..=6);
        let d = r.gen_range(1..=n.min(4));
        let a = random_matrix(&mut r, d, n, 0.3);
        for b in k_subsets(n, d) {
            ensure!(a.trop_minor(b) == trop_minor_bruteforce(&a, b), "minor {b} of {a:?}");
        }
    }

    let mut vs = vec![
        matrix(&["0,0,0,0", "0,0,1,1"]).stiefel().unwrap(),
        zoom_matrix().stiefel().unwrap(),
        snowflake(),
        snowflake().dual(),
    ];
    while vs.len() < 12 {
        vs.push(random_presented(&mut r).1);
    }
    let mismatches: Vec<String> = vs
        .par_iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let want: BTreeSet<Matroid> = v.maximal_cells().into_iter().map(|c| c.matroid).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(900 + i as u64);
            let got = subdivision_sample(v, SAMPLES, &mut rng);
            (got != want).then(|| format!("{v:?}: {} cells, {} sampled", want.len(), got.len()))
        })
        .collect();
    ensure!(mismatches.is_empty(), "cell sampling: {}", mismatches[0]);

    for _ in 0..50 {
        let g = random_digraph(&mut r);
        for b in k_subsets(g.n(), g.rank()) {
            ensure!(
                linking_value(&g, b).unwrap() == linking_bruteforce(&g, b),
                "linking {b} of {g:?}"
            );
        }
    }

    let jobs: Vec<(usize, usize)> = (1..=5).flat_map(|n| (1..=n).map(move |d| (n, d))).collect();
    let counts: Vec<Result<usize, String>> = jobs
        .par_iter()
        .map(|&(n, d)| {
            let all = all_set_presentations(n, d);
            for (m, systems) in &all {
                if presentations_by_flats(m) != *systems {
                    return Err(format!("presentations of {m:?}"));
                }
            }
            Ok(all.len())
        })
        .collect();
    let mut matroids = 0;
    for c in counts {
        matroids += c?;
    }
    Ok(format!(
        "500 minors, {} subdivisions x {SAMPLES} samples, 50 digraphs, {matroids} transversal matroids",
        vs.len()
    ))
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let mut contractions = 0;
    let mut cone_points = 0;
    let mut valuations = 0;
    while contractions < 100 {
        let (a, v) = random_presented(&mut r);
        valuations += 1;
        ensure!(v.dual().dual() == v, "dual is not an involution on {v:?}");
        let rows = points(&a);
        for p in &rows {
            ensure!(v.contains(p), "row {p:?} outside Be(V) for {a:?}");
        }
        let mut k = 0;
        while k < 100 {
            let coeffs: Vec<Trop> = (0..a.rows()).map(|_| random_entry(&mut r, 0.3)).collect();
            if let Ok(p) = a.trop_cone_sample(&coeffs) {
                ensure!(v.contains(&p), "cone point {p:?} outside Be(V) for {a:?}");
                k += 1;
            }
        }
        cone_points += k;
        let m = v.underlying();
        let flats: Vec<Subset> = m
            .cyclic_flats()
            .flats()
            .iter()
            .copied()
            .filter(|f| *f != m.ground())
            .collect();
        if flats.is_empty() {
            continue;
        }
        let f = flats[r.gen_range(0..flats.len())];
        let p = contract_presentation(&v, &rows, f).map_err(|e| e.to_string())?;
        let back = TropMatrix::from_points(&p).unwrap().stiefel().map_err(|e| e.to_string())?;
        ensure!(back == v.contract(f).unwrap(), "contraction by {f} of {a:?}");
        contractions += 1;
    }
    Ok(format!(
        "{valuations} valuations, {cone_points} cone points, {contractions} contractions"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("first example", criterion_1),
        ("zoom example", criterion_2),
        ("snowflake matroid is not transversal", criterion_3),
        ("distinguished apices", criterion_4),
        ("dual snowflake", criterion_5),
        ("presentation space membership", criterion_6),
        ("region-count verifier", criterion_7),
        ("distinguished multiplicity equals rank", criterion_8),
        ("oracle equivalences", criterion_9),
        ("involutions and containments", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
