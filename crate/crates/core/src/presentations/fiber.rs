//! The fibers of the Stiefel map: presentation fans, the presentation space,
//! sampling, and contraction of presentations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::distinguished::{distinguished, DistinguishedData, DistinguishedMember};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::transversal::{verify_set_presentation, SetSystem};
use crate::trop::{relsupp0, Q, Trop, TropMatrix, TropPoint};
use crate::valuated::ValuatedMatroid;

/// Whether `points` lie in the presentation fan of `M`: each is on the
/// Bergman fan with an independent flat as relative support at the origin,
/// and these flats together with the remaining distinguished flats present
/// `M`.
///
/// Shrinking a flat to its coclosure only raises the coranks in the Hall
/// conditions, so the remaining distinguished flats are the completion to
/// try.
pub fn presentation_fan_member(m: &Matroid, points: &[TropPoint]) -> Result<bool> {
    let cf = m.cyclic_flats();
    let t = cf.tau_bottom().max(0) as usize;
    if points.len() != t {
        return Err(Error::WrongArity {
            expected: t,
            got: points.len(),
        });
    }
    let fan = ValuatedMatroid::from_matroid(m);
    let mut flats = Vec::with_capacity(m.rank());
    for p in points {
        if p.n() != m.n() || !fan.contains(p) {
            return Ok(false);
        }
        let g = relsupp0(p);
        if !m.is_independent(g) || !m.is_flat(g) {
            return Ok(false);
        }
        flats.push(g);
    }
    let bottom = m.closure(Subset::EMPTY);
    let mut rest = cf.distinguished_flats();
    for _ in 0..t {
        match rest.iter().position(|f| *f == bottom) {
            Some(k) => {
                rest.remove(k);
            }
            None => return Ok(false),
        }
    }
    flats.extend(rest);
    Ok(verify_set_presentation(
        m,
        &SetSystem::from_complements(m.n(), &flats),
    ))
}

/// `p` translated into the fan coordinates of `member`, if its `∞` pattern
/// is compatible and it lies in the member's local cone.
fn local_point(member: &DistinguishedMember, p: &TropPoint) -> Option<TropPoint> {
    if !p.infinite_set().is_superset(member.flat) {
        return None;
    }
    let apex = member
        .apex
        .project(member.support)
        .ok()?
        .finite_coords()
        .ok()?;
    let q = p.project(member.support).ok()?.minus(&apex).ok()?;
    let g = relsupp0(&q);
    if !member.matroid.is_independent(g) || !member.matroid.is_flat(g) {
        return None;
    }
    ValuatedMatroid::from_matroid(&member.matroid)
        .contains(&q)
        .then_some(q)
}

/// An assignment of the points to the distinguished matroids witnessing
/// membership in the presentation space: entry `i` is the member receiving
/// point `i`.
pub fn presentation_assignment(
    v: &ValuatedMatroid,
    points: &[TropPoint],
) -> Result<Option<Vec<usize>>> {
    if points.len() != v.rank() {
        return Err(Error::WrongArity {
            expected: v.rank(),
            got: points.len(),
        });
    }
    let data = distinguished(v)?;
    if points.iter().any(|p| p.n() != v.n()) {
        return Ok(None);
    }
    let local: Vec<Vec<Option<TropPoint>>> = points
        .iter()
        .map(|p| data.members.iter().map(|m| local_point(m, p)).collect())
        .collect();
    let mut search = Search {
        data: &data,
        local: &local,
        assigned: vec![Vec::new(); data.members.len()],
        choice: Vec::with_capacity(points.len()),
    };
    Ok(search.run(0)?.then_some(search.choice))
}

/// Whether the points form a presentation of `V`, decided by membership
/// in the presentation space.
pub fn presentation_space_member(v: &ValuatedMatroid, points: &[TropPoint]) -> Result<bool> {
    Ok(presentation_assignment(v, points)?.is_some())
}

struct Search<'a> {
    data: &'a DistinguishedData,
    local: &'a [Vec<Option<TropPoint>>],
    assigned: Vec<Vec<usize>>,
    choice: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, i: usize) -> Result<bool> {
        if i == self.local.len() {
            return Ok(true);
        }
        for (k, member) in self.data.members.iter().enumerate() {
            if self.assigned[k].len() == member.multiplicity || self.local[i][k].is_none() {
                continue;
            }
            self.assigned[k].push(i);
            let full = self.assigned[k].len() == member.multiplicity;
            let feasible = !full || {
                let pts: Vec<TropPoint> = self.assigned[k]
                    .iter()
                    .map(|&p| self.local[p][k].clone().expect("compatible"))
                    .collect();
                presentation_fan_member(&member.matroid, &pts)?
            };
            if feasible {
                self.choice.push(k);
                if self.run(i + 1)? {
                    return Ok(true);
                }
                self.choice.pop();
            }
            self.assigned[k].pop();
        }
        Ok(false)
    }
}

/// A presentation of `V`. Seed `0` returns the distinguished apices; other
/// seeds move points along random rays of the presentation fans.
pub fn sample_presentation(v: &ValuatedMatroid, seed: u64) -> Result<Vec<TropPoint>> {
    let data = distinguished(v)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(v.rank());
    for member in &data.members {
        let local = if seed == 0 {
            vec![TropPoint::zero(member.support.len()); member.multiplicity]
        } else {
            sample_fan(&member.matroid, member.multiplicity, &mut rng)
        };
        let apex = member.apex.project(member.support)?.finite_coords()?;
        for q in local {
            out.push(q.plus(&apex).extend_by_infinity(member.support, v.n()));
        }
    }
    if seed != 0 {
        out.shuffle(&mut rng);
    }
    let back = TropMatrix::from_points(&out)?.stiefel()?;
    assert_eq!(&back, v, "sampled points do not present V");
    Ok(out)
}

/// `t` points of the presentation fan of `M`, built greedily: each point
/// gets a random independent flat as support, kept only if the family with
/// the origin in the remaining slots still presents `M`.
fn sample_fan(m: &Matroid, t: usize, rng: &mut ChaCha8Rng) -> Vec<TropPoint> {
    let n = m.n();
    let lattice = m.flats();
    let independent: Vec<Subset> = lattice
        .flats()
        .iter()
        .copied()
        .filter(|f| !f.is_empty() && m.is_independent(*f))
        .collect();
    let mut points = vec![TropPoint::zero(n); t];
    for i in 0..t {
        let Some(&g) = independent.choose(rng) else {
            break;
        };
        let candidate = random_fan_point(m, lattice.flats(), g, rng);
        let previous = std::mem::replace(&mut points[i], candidate);
        if !presentation_fan_member(m, &points).expect("arity matches") {
            points[i] = previous;
        }
    }
    points
}

/// A point with `relsupp_0 = g`: positive multiples of `e_g` and possibly of
/// a smaller flat, sometimes pushed to `∞` on `g`.
fn random_fan_point(m: &Matroid, flats: &[Subset], g: Subset, rng: &mut ChaCha8Rng) -> TropPoint {
    let n = m.n();
    let steps = [Q::new(1.into(), 2.into()), Q::from_integer(1.into()), Q::from_integer(2.into()), Q::from_integer(3.into())];
    let mut coords = vec![Trop::zero(); n];
    if g.len() < n && rng.gen_bool(0.25) {
        for i in g.iter() {
            coords[i] = Trop::Inf;
        }
        return TropPoint::new(coords).expect("finite outside g");
    }
    let lambda = steps.choose(rng).expect("nonempty").clone();
    for i in g.iter() {
        coords[i] = Trop::Fin(lambda.clone());
    }
    let inner: Vec<Subset> = flats
        .iter()
        .copied()
        .filter(|f| !f.is_empty() && *f != g && f.is_subset(g))
        .collect();
    if let (true, Some(&h)) = (rng.gen_bool(0.5), inner.choose(rng)) {
        let mu = steps.choose(rng).expect("nonempty");
        for i in h.iter() {
            if let Trop::Fin(c) = &mut coords[i] {
                *c += mu;
            }
        }
    }
    TropPoint::new(coords).expect("finite outside g")
}

/// The points of a presentation that are `∞` on a cyclic flat `F`, projected
/// to `[n] ∖ F`; they present `V/F`.
pub fn contract_presentation(
    v: &ValuatedMatroid,
    points: &[TropPoint],
    f: Subset,
) -> Result<Vec<TropPoint>> {
    let m = v.underlying();
    if !m.is_cyclic_flat(f) {
        return Err(Error::NotCyclicFlat(f));
    }
    let expected = v.rank() - m.rank_of(f);
    let rest = f.complement(v.n());
    let kept: Vec<&TropPoint> = points
        .iter()
        .filter(|p| p.infinite_set().is_superset(f))
        .collect();
    if kept.len() != expected {
        return Err(Error::CountMismatch {
            flat: f,
            expected,
            found: kept.len(),
        });
    }
    kept.into_iter().map(|p| p.project(rest)).collect()
}
