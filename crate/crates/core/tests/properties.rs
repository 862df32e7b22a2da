mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use tropical_stiefel::gammoid::{digraph_from_presentation, gammoid_valuation, stable_intersect_hyperplanes};
use tropical_stiefel::presentations::{
    contract_presentation, distinguished, has_transversal_facets, r0_member, rinf_member,
    sample_presentation, zoom,
};
use tropical_stiefel::subset::Subset;
use tropical_stiefel::transversal::{is_transversal, transversal_matroid, SetSystem};
use tropical_stiefel::trop::{relsupp, Trop, TropMatrix, TropPoint};
use tropical_stiefel::ValuatedMatroid;

fn cone_samples(rng: &mut rand_chacha::ChaCha8Rng, a: &TropMatrix, k: usize) -> Vec<TropPoint> {
    (0..k)
        .filter_map(|_| {
            let coeffs: Vec<Trop> = (0..a.rows()).map(|_| random_entry(rng, 0.3)).collect();
            a.trop_cone_sample(&coeffs).ok()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(seed in any::<u64>()) {
        let (_, v) = random_presented(&mut rng(seed));
        prop_assert_eq!(v.dual().dual(), v.clone());
        prop_assert!(v.dual().check_pluecker().is_ok());
    }

    #[test]
    fn stiefel_images_satisfy_pluecker(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=6);
        let d = r.gen_range(1..=n);
        let a = random_matrix(&mut r, d, n, 0.4);
        if let Ok(v) = a.stiefel() {
            prop_assert!(v.check_pluecker().is_ok());
            prop_assert!(v.underlying().bases().iter().all(|b| a.trop_minor(*b).is_finite()));
        }
    }

    #[test]
    fn rows_and_cone_points_lie_on_the_linear_space(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, v) = random_presented(&mut r);
        for p in points(&a) {
            prop_assert!(v.contains(&p));
        }
        for p in cone_samples(&mut r, &a, 20) {
            prop_assert!(v.contains(&p), "{:?} {:?}", a, p);
        }
    }

    #[test]
    fn contraction_by_cyclic_flats(seed in any::<u64>()) {
        let (a, v) = random_presented(&mut rng(seed));
        let m = v.underlying();
        for &f in m.cyclic_flats().flats() {
            if f == m.ground() {
                continue;
            }
            let p = contract_presentation(&v, &points(&a), f).unwrap();
            let back = TropMatrix::from_points(&p).unwrap().stiefel().unwrap();
            prop_assert_eq!(back, v.contract(f).unwrap());
        }
    }

    #[test]
    fn zoomed_rows_present_the_cell(seed in any::<u64>()) {
        let (a, v) = random_loopless(&mut rng(seed));
        for cell in v.cell_complex().unwrap().cells {
            if !cell.matroid.coloops().is_empty() {
                continue;
            }
            let sets: Vec<Subset> = points(&a)
                .iter()
                .map(|p| zoom(&cell.witness, p).unwrap().infinite_set().complement(v.n()))
                .collect();
            let t = transversal_matroid(&SetSystem::new(v.n(), sets)).unwrap();
            prop_assert_eq!(t, cell.matroid);
        }
    }

    #[test]
    fn regions_localize_through_the_zoom(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, v) = random_loopless(&mut r);
        let samples = cone_samples(&mut r, &a, 6);
        let cx = v.cell_complex().unwrap();
        for (m, x) in cx.connected() {
            let fan = ValuatedMatroid::from_matroid(m);
            let cyclic = m.cyclic_flats();
            for (f, _) in m.flats().iter() {
                for z in &samples {
                    let zx = zoom(x, z).unwrap();
                    prop_assert_eq!(zx.infinite_set().is_superset(f), r0_member(x, f, z).unwrap());
                    if cyclic.index_of(f).is_some() {
                        prop_assert_eq!(
                            rinf_member(&fan, m, f, &zx).unwrap(),
                            zx.infinite_set().is_superset(f)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn r0_regions_grow_towards_the_vertex(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, v) = random_loopless(&mut r);
        let mut samples = cone_samples(&mut r, &a, 6);
        samples.extend(points(&a));
        let cx = v.cell_complex().unwrap();
        for (m, x) in cx.connected() {
            for &f in m.cyclic_flats().flats() {
                let face = m.face_unchecked(f);
                let y = &cx.cells.iter().find(|c| c.matroid == face).expect("face is a cell").witness;
                for z in &samples {
                    if r0_member(y, f, z).unwrap() {
                        prop_assert!(r0_member(x, f, z).unwrap());
                    }
                    prop_assert!(relsupp(y, z).is_ok());
                }
            }
        }
    }

    #[test]
    fn distinguished_apices_present(seed in any::<u64>()) {
        let (_, v) = random_presented(&mut rng(seed));
        let d = distinguished(&v).unwrap();
        prop_assert_eq!(d.total_multiplicity(), v.rank());
        let back = TropMatrix::from_points(&d.apices()).unwrap().stiefel().unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn gammoid_characterizations_agree(seed in any::<u64>(), dualize in any::<bool>()) {
        let (_, w) = random_presented(&mut rng(seed));
        if !w.underlying().loops().is_empty() {
            return Ok(());
        }
        let v = if dualize { w.dual() } else { w };
        let vd = v.dual();
        let cells_are_gammoids = v
            .cell_complex()
            .map(|cx| cx.cells.iter().filter(|c| c.matroid.is_connected()).all(|c| is_transversal(&c.matroid.dual()).is_yes()))
            .unwrap_or(false);
        let presentable = vd.underlying().coloops().is_empty() && has_transversal_facets(&vd);
        if presentable {
            let p = sample_presentation(&vd, seed % 7).unwrap();
            let g = digraph_from_presentation(&p, None, None).unwrap();
            prop_assert_eq!(gammoid_valuation(&g).unwrap(), v.clone());
            prop_assert!(stable_intersect_hyperplanes(&p, &v).unwrap());
        }
        prop_assert_eq!(presentable, cells_are_gammoids);
    }
}
