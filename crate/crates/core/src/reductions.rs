//! Reductions, joint reductions, complete reductions and multiplicities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bigraded::{Bigraded, DEFAULT_GRID};
use crate::error::{Error, Result};
use crate::ideal::{is_regular_sequence, Ideal};
use crate::poly::Polynomial;

pub const DEFAULT_N_MAX: u32 = 10;
pub const DEFAULT_RETRIES: usize = 20;
/// Fit window for multiplicities of m-primary ideals.
pub const FIT_WINDOW: (u32, u32) = (2, 12);
/// Structured candidates tried before random ones when the seed is 0.
const STRUCTURED_CAP: usize = 64;

/// `(x1, x2; y1, y2)` with `x_i ∈ I`, `y_i ∈ J`, and `(z1, z2)` a reduction
/// of `IJ`, where `z_i = x_i y_i`.
#[derive(Clone, Debug)]
pub struct CompleteReduction {
    pub x1: Polynomial,
    pub x2: Polynomial,
    pub y1: Polynomial,
    pub y2: Polynomial,
    pub z1: Polynomial,
    pub z2: Polynomial,
    pub verified_n: u32,
    pub seed: u64,
    /// Candidates examined, including the successful one.
    pub attempts: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplicityRoute {
    CmLength,
    Fit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityResult {
    pub value: u64,
    pub route: MultiplicityRoute,
    /// First and last power used by the fit route.
    pub window: Option<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedMultiplicity {
    /// `e(x1, y2)` for the joint reduction `(x1, y2)`.
    pub via_joint: u64,
    /// `e(x2, y1)`, the other joint reduction of the same complete reduction.
    pub via_joint_swapped: u64,
    pub via_fit: i64,
    pub via_product: i64,
}

/// Random combination of the generators of `a`, all coefficients nonzero.
pub fn random_element(a: &Ideal, seed: u64) -> Result<Polynomial> {
    random_element_with(a, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn random_element_with(a: &Ideal, rng: &mut ChaCha8Rng) -> Result<Polynomial> {
    if a.is_zero() {
        return Err(Error::Validation("random element of the zero ideal".into()));
    }
    let ring = a.ring();
    let p = ring.field().characteristic();
    let mut acc = ring.zero();
    for g in a.generators() {
        let c = rng.gen_range(1..p);
        acc = ring.add(&acc, &ring.scale(g, c));
    }
    Ok(acc)
}

/// `A^n = B` in `R`. Compared after localizing when `B` is m-primary, since
/// random elements may add zeros away from the origin.
fn agree_locally(a: &Ideal, b: &Ideal) -> Result<bool> {
    if b.is_m_primary() {
        a.locally_equal(b)
    } else {
        a.equals(b)
    }
}

/// Smallest `n ≤ n_max` with `Jred A^n = A^{n+1}`, or `None`.
pub fn is_reduction(jred: &Ideal, a: &Ideal, n_max: u32) -> Result<Option<u32>> {
    if !a.contains_ideal(jred)? {
        return Err(Error::NotContained(format!(
            "{jred} is not contained in {a}"
        )));
    }
    let mut pow = Ideal::unit(a.context());
    for n in 0..=n_max {
        let lhs = jred.product(&pow)?;
        let next = pow.product(a)?;
        if agree_locally(&lhs, &next)? {
            return Ok(Some(n));
        }
        pow = next;
    }
    Ok(None)
}

/// Smallest `n ≤ n_max` with `(aJ + bI)(IJ)^n = (IJ)^{n+1}`, or `None`.
pub fn is_joint_reduction(
    a: &Polynomial,
    b: &Polynomial,
    i: &Ideal,
    j: &Ideal,
    n_max: u32,
) -> Result<Option<u32>> {
    let ring = i.ring();
    if !i.contains(a) {
        return Err(Error::NotContained(format!(
            "{} is not in {i}",
            ring.display(a)
        )));
    }
    if !j.contains(b) {
        return Err(Error::NotContained(format!(
            "{} is not in {j}",
            ring.display(b)
        )));
    }
    let k = j
        .times_elements(std::slice::from_ref(a))
        .sum(&i.times_elements(std::slice::from_ref(b)))?;
    is_reduction(&k, &i.product(j)?, n_max)
}

/// Searches for a complete reduction of `(I, J)`.
///
/// Seed 0 first tries pairs of generators `(g_i, g_j; h_k, h_l)` in a fixed
/// order. Random attempts draw from a ChaCha stream per attempt, so the
/// result depends only on the inputs and the seed.
pub fn find_complete_reduction(
    i: &Ideal,
    j: &Ideal,
    seed: u64,
    retries: usize,
    n_max: u32,
) -> Result<CompleteReduction> {
    for (name, a) in [("I", i), ("J", j)] {
        if !a.is_m_primary() {
            return Err(Error::NotMPrimary(format!("{name} = {a}")));
        }
    }
    let ij = i.product(j)?;
    let ring = i.ring();
    let mut attempts = 0;
    let mut last = String::from("no candidate tried");
    let mut candidates: Vec<[Polynomial; 4]> = Vec::new();
    if seed == 0 {
        candidates = structured_candidates(i, j);
    }
    let structured = candidates.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..retries {
        rng.set_stream(attempt as u64);
        candidates.push([
            random_element_with(i, &mut rng)?,
            random_element_with(i, &mut rng)?,
            random_element_with(j, &mut rng)?,
            random_element_with(j, &mut rng)?,
        ]);
    }
    for (idx, [x1, x2, y1, y2]) in candidates.into_iter().enumerate() {
        attempts += 1;
        let z1 = ring.mul(&x1, &y1);
        let z2 = ring.mul(&x2, &y2);
        let zi = Ideal::new(i.context(), vec![z1.clone(), z2.clone()]);
        last = format!(
            "({}, {}; {}, {})",
            ring.display(&x1),
            ring.display(&x2),
            ring.display(&y1),
            ring.display(&y2)
        );
        // a reduction of an m-primary ideal is m-primary
        if zi.generators().len() < 2 || (zi.is_homogeneous() && !zi.is_m_primary()) {
            continue;
        }
        // structured candidates that fail are skipped quickly
        let bound = if idx < structured {
            n_max.min(3)
        } else {
            n_max
        };
        if let Some(n) = is_reduction(&zi, &ij, bound)? {
            return Ok(CompleteReduction {
                x1,
                x2,
                y1,
                y2,
                z1,
                z2,
                verified_n: n,
                seed,
                attempts,
            });
        }
    }
    Err(Error::ReductionSearchFailed { attempts, last })
}

fn structured_candidates(i: &Ideal, j: &Ideal) -> Vec<[Polynomial; 4]> {
    let (gi, gj) = (i.generators(), j.generators());
    let mut out: Vec<(usize, [Polynomial; 4])> = Vec::new();
    for a in 0..gi.len() {
        for b in a + 1..gi.len() {
            for c in 0..gj.len() {
                for d in 0..gj.len() {
                    if c == d {
                        continue;
                    }
                    let cost = a.abs_diff(c) + b.abs_diff(d);
                    out.push((
                        cost,
                        [gi[a].clone(), gi[b].clone(), gj[c].clone(), gj[d].clone()],
                    ));
                }
            }
        }
    }
    out.sort_by_key(|(cost, _)| *cost);
    out.into_iter()
        .take(STRUCTURED_CAP)
        .map(|(_, c)| c)
        .collect()
}

/// Multiplicity `e(A)` of an m-primary ideal.
pub fn multiplicity(a: &Ideal) -> Result<MultiplicityResult> {
    let ctx = a.context();
    let base = a.local_colength()?;
    if base == 0 {
        return Err(Error::NotMPrimary(a.to_string()));
    }
    if ctx.cm_declared() && a.generators().len() == 2 {
        let g = a.generators();
        if is_regular_sequence(ctx, &g[0], &g[1])? {
            return Ok(MultiplicityResult {
                value: base,
                route: MultiplicityRoute::CmLength,
                window: None,
            });
        }
    }
    multiplicity_by_fit(a)
}

/// Fits `λ(R/A^n)` by a quadratic once three consecutive second differences
/// agree, and returns its leading coefficient.
pub fn multiplicity_by_fit(a: &Ideal) -> Result<MultiplicityResult> {
    let (lo, hi) = FIT_WINDOW;
    let mut values: Vec<i64> = Vec::new();
    let mut pow = a.power(lo);
    for n in lo..=hi {
        if n > lo {
            pow = pow.product(a)?;
        }
        values.push(pow.local_colength()? as i64);
        let k = values.len();
        if k >= 5 {
            let d2: Vec<i64> = (k - 5..k - 2)
                .map(|t| values[t + 2] - 2 * values[t + 1] + values[t])
                .collect();
            if d2.iter().all(|&d| d == d2[0]) {
                if d2[0] <= 0 {
                    return Err(Error::Inconsistency(format!(
                        "non-positive multiplicity {} for {a}",
                        d2[0]
                    )));
                }
                return Ok(MultiplicityResult {
                    value: d2[0] as u64,
                    route: MultiplicityRoute::Fit,
                    window: Some((n - 4, n)),
                });
            }
        }
    }
    Err(Error::StabilizationExceeded {
        what: format!("second differences of λ(R/A^n) for A = {a}"),
        bound: hi as usize,
    })
}

/// `e11(I|J)` by three routes.
pub fn mixed_multiplicity_e11(
    i: &Ideal,
    j: &Ideal,
    seed: u64,
    retries: usize,
    n_max: u32,
) -> Result<MixedMultiplicity> {
    let cr = find_complete_reduction(i, j, seed, retries, n_max)?;
    let ctx = i.context();
    let via_joint = multiplicity(&Ideal::new(ctx, vec![cr.x1.clone(), cr.y2.clone()]))?.value;
    let via_joint_swapped =
        multiplicity(&Ideal::new(ctx, vec![cr.x2.clone(), cr.y1.clone()]))?.value;
    let via_product = e11_via_product(i, j)?;
    let bg = Bigraded::new(i, j)?;
    let via_fit = bg.fit(DEFAULT_GRID)?.e11;
    Ok(MixedMultiplicity {
        via_joint,
        via_joint_swapped,
        via_fit,
        via_product,
    })
}

/// `(e(IJ) - e(I) - e(J)) / 2`.
pub fn e11_via_product(i: &Ideal, j: &Ideal) -> Result<i64> {
    let eij = multiplicity(&i.product(j)?)?.value as i64;
    let ei = multiplicity(i)?.value as i64;
    let ej = multiplicity(j)?.value as i64;
    let twice = eij - ei - ej;
    if twice % 2 != 0 {
        return Err(Error::NonIntegral(format!(
            "e(IJ) - e(I) - e(J) = {twice} is odd"
        )));
    }
    Ok(twice / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::RingContext;
    use std::sync::Arc;

    fn plane() -> Arc<RingContext> {
        RingContext::polynomial_ring(32003, &["x", "y"], true).unwrap()
    }

    fn id(ctx: &Arc<RingContext>, g: &[&str]) -> Ideal {
        Ideal::from_strings(ctx, g).unwrap()
    }

    #[test]
    fn random_elements() {
        let k = plane();
        let m = id(&k, &["x", "y"]);
        let f = random_element(&m, 7).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.terms().iter().all(|t| t.coeff != 0));
        assert_eq!(f, random_element(&m, 7).unwrap());
        let g = random_element(&id(&k, &["x"]), 3).unwrap();
        assert!(g.is_monomial());
        assert!(random_element(&Ideal::zero(&k), 0).is_err());
    }

    #[test]
    fn reduction_examples() {
        let k = plane();
        let m = id(&k, &["x", "y"]);
        let m2 = m.power(2);
        assert_eq!(
            is_reduction(&id(&k, &["x^2", "y^2"]), &m2, 10).unwrap(),
            Some(1)
        );
        assert_eq!(is_reduction(&m, &m, 10).unwrap(), Some(0));
        assert_eq!(is_reduction(&id(&k, &["x^3"]), &m, 5).unwrap(), None);
        assert!(is_reduction(&id(&k, &["x"]), &m2, 3).is_err());
    }

    #[test]
    fn joint_reduction_examples() {
        let k = plane();
        let m = id(&k, &["x", "y"]);
        let (x, y) = (k.parse("x").unwrap(), k.parse("y").unwrap());
        assert_eq!(is_joint_reduction(&x, &y, &m, &m, 10).unwrap(), Some(0));
        assert_eq!(is_joint_reduction(&x, &x, &m, &m, 4).unwrap(), None);
        let j = id(&k, &["x", "y^2"]);
        let a = random_element(&m, 1).unwrap();
        let b = random_element(&j, 2).unwrap();
        assert_eq!(is_joint_reduction(&a, &b, &m, &j, 10).unwrap(), Some(0));
        assert!(is_joint_reduction(&y, &y, &m, &j, 2).is_err());
    }

    #[test]
    fn complete_reduction_of_maximal_ideal() {
        let k = plane();
        let m = id(&k, &["x", "y"]);
        let cr = find_complete_reduction(&m, &m, 0, 5, 10).unwrap();
        assert_eq!(k.display(&cr.z1), "x^2");
        assert_eq!(k.display(&cr.z2), "y^2");
        assert_eq!(cr.verified_n, 1);
        for seed in 1..4 {
            let cr = find_complete_reduction(&m, &m, seed, 5, 10).unwrap();
            assert!(m.contains(&cr.x1) && m.contains(&cr.y2));
            assert!(is_joint_reduction(&cr.x1, &cr.y2, &m, &m, 10)
                .unwrap()
                .is_some());
            assert!(is_joint_reduction(&cr.x2, &cr.y1, &m, &m, 10)
                .unwrap()
                .is_some());
        }
    }

    #[test]
    fn complete_reduction_in_non_cm_example() {
        let r =
            RingContext::from_strings(32003, &["x", "y", "z"], &["x^2", "x*y"], false, 2).unwrap();
        let m = r.maximal_ideal();
        let cr = find_complete_reduction(&m, &m, 0, 5, 10).unwrap();
        assert_eq!(
            (r.display(&cr.z1), r.display(&cr.z2)),
            ("y^2".into(), "z^2".into())
        );
        let cr = find_complete_reduction(&m, &m, 11, 5, 10).unwrap();
        assert!(is_joint_reduction(&cr.x1, &cr.y2, &m, &m, 10)
            .unwrap()
            .is_some());
    }

    #[test]
    fn tiny_field_search_fails() {
        let k = RingContext::polynomial_ring(2, &["x", "y"], true).unwrap();
        let m = id(&k, &["x", "y"]);
        // over F_2 every random generator combination is x + y
        let err = find_complete_reduction(&m, &m, 5, 4, 3).unwrap_err();
        assert!(matches!(
            err,
            Error::ReductionSearchFailed { attempts: 4, .. }
        ));
        assert_eq!(err.exit_code(), 5);
    }

    #[test]
    fn multiplicities() {
        let k = plane();
        let m = id(&k, &["x", "y"]);
        assert_eq!(multiplicity(&m).unwrap().value, 1);
        let r = multiplicity(&id(&k, &["x^2", "y^2"])).unwrap();
        assert_eq!((r.value, r.route), (4, MultiplicityRoute::CmLength));
        assert_eq!(
            multiplicity_by_fit(&id(&k, &["x^2", "y^2"])).unwrap().value,
            4
        );
        let f = multiplicity(&id(&k, &["x^2", "x*y", "y^3"])).unwrap();
        assert_eq!((f.value, f.route), (5, MultiplicityRoute::Fit));
        assert!(multiplicity(&id(&k, &["x"])).is_err());
    }

    #[test]
    fn multiplicity_in_non_cm_example() {
        let r =
            RingContext::from_strings(32003, &["x", "y", "z"], &["x^2", "x*y"], false, 2).unwrap();
        let m = r.maximal_ideal();
        let e = multiplicity(&m).unwrap();
        assert_eq!((e.value, e.route), (1, MultiplicityRoute::Fit));
        let yz = id(&r, &["y", "z"]);
        assert_eq!(yz.local_colength().unwrap(), 2);
        assert_eq!(multiplicity(&yz).unwrap().value, 1);
    }

    #[test]
    fn e11_three_ways() {
        let k = plane();
        let m = id(&k, &["x", "y"]);
        let j = id(&k, &["x", "y^2"]);
        let mm = mixed_multiplicity_e11(&m, &m, 0, 10, 10).unwrap();
        assert_eq!(
            mm,
            MixedMultiplicity {
                via_joint: 1,
                via_joint_swapped: 1,
                via_fit: 1,
                via_product: 1
            }
        );
        let mj = mixed_multiplicity_e11(&m, &j, 3, 10, 10).unwrap();
        assert_eq!(
            mj,
            MixedMultiplicity {
                via_joint: 1,
                via_joint_swapped: 1,
                via_fit: 1,
                via_product: 1
            }
        );
        assert_eq!(multiplicity(&m.product(&j).unwrap()).unwrap().value, 5);
    }
}
