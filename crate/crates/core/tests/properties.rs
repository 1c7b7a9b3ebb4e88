use std::sync::Arc;

use bigrees::bigraded::{bhattacharya_table, fit_bhattacharya, fit_by_differences, Bigraded};
use bigrees::context::RingContext;
use bigrees::hilbert::{monomial_numerator, HilbertData};
use bigrees::ideal::Ideal;
use bigrees::monomial::Monomial;
use bigrees::reductions::{
    e11_via_product, find_complete_reduction, is_joint_reduction, is_reduction,
    mixed_multiplicity_e11, multiplicity,
};
use proptest::prelude::*;

fn plane() -> Arc<RingContext> {
    RingContext::polynomial_ring(32003, &["x", "y"], true).unwrap()
}

fn id(ctx: &Arc<RingContext>, g: &[&str]) -> Ideal {
    Ideal::from_strings(ctx, g).unwrap()
}

fn cm_fixtures(k: &Arc<RingContext>) -> Vec<(Ideal, Ideal)> {
    let m = id(k, &["x", "y"]);
    let rr = id(k, &["x^4", "x^3*y", "x*y^3", "y^4"]);
    vec![
        (m.clone(), m.clone()),
        (m, id(k, &["x", "y^2"])),
        (rr.clone(), rr),
    ]
}

/// Exponent pairs of an m-primary monomial ideal of degree at most `d`.
fn monomial_ideal(d: u16) -> impl Strategy<Value = Vec<(u16, u16)>> {
    (1..=d, 1..=d, prop::collection::vec((0..=d, 0..=d), 0..4)).prop_map(move |(a, b, extra)| {
        let mut g = vec![(a, 0), (0, b)];
        g.extend(extra.into_iter().filter(|&(u, v)| u + v > 0 && u + v <= d));
        g
    })
}

fn to_ideal(k: &Arc<RingContext>, gens: &[(u16, u16)]) -> Ideal {
    let ring = k.ring();
    Ideal::new(
        k,
        gens.iter()
            .map(|&(a, b)| ring.monomial(Monomial::from_exponents(&[a, b]).unwrap(), 1))
            .collect(),
    )
}

fn lattice_count(gens: &[(u16, u16)]) -> u64 {
    let bound = gens.iter().map(|g| g.0.max(g.1)).max().unwrap() + 1;
    (0..bound)
        .flat_map(|a| (0..bound).map(move |b| (a, b)))
        .filter(|&(a, b)| !gens.iter().any(|&(u, v)| u <= a && v <= b))
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn colength_is_a_lattice_count(gens in monomial_ideal(6)) {
        let k = plane();
        let ideal = to_ideal(&k, &gens);
        prop_assert_eq!(ideal.colength(), Some(lattice_count(&gens)));
        prop_assert_eq!(ideal.local_colength().unwrap(), lattice_count(&gens));
        let lms: Vec<Monomial> = gens.iter().map(|&(a, b)| Monomial::from_exponents(&[a, b]).unwrap()).collect();
        let h = HilbertData::from_numerator(monomial_numerator(&lms), 2);
        prop_assert_eq!(h.dimension, 0);
        prop_assert_eq!(h.e as u64, lattice_count(&gens));
    }

    #[test]
    fn colon_routes_agree_on_monomial_ideals(a in monomial_ideal(4), b in monomial_ideal(3)) {
        let k = plane();
        let (ia, ib) = (to_ideal(&k, &a), to_ideal(&k, &b));
        let fast = ia.colon(&ib).unwrap();
        prop_assert!(fast.equals(&ia.colon_by_linear_algebra(&ib).unwrap()).unwrap());
        prop_assert!(fast.equals(&ia.colon_by_elimination(&ib).unwrap()).unwrap());
        prop_assert!(Ideal::product(&fast, &ib).unwrap().generators().iter().all(|g| ia.contains(g)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn fit_matches_finite_differences(a in monomial_ideal(3), b in monomial_ideal(3)) {
        let k = plane();
        let (i, j) = (to_ideal(&k, &a), to_ideal(&k, &b));
        let t = bhattacharya_table(&i, &j, 7).unwrap();
        prop_assert_eq!(t.get(0, 0), 0);
        for r in 0..7 {
            for s in 0..7 {
                prop_assert!(t.get(r + 1, s) >= t.get(r, s) && t.get(r, s + 1) >= t.get(r, s));
            }
        }
        let p = fit_bhattacharya(&t).unwrap();
        let q = fit_by_differences(&t).unwrap();
        prop_assert_eq!(p.coefficients(), q.coefficients());
        prop_assert_eq!(p.e20 as u64, multiplicity(&i).unwrap().value);
        prop_assert_eq!(p.e02 as u64, multiplicity(&j).unwrap().value);
        prop_assert_eq!(p.e11, e11_via_product(&i, &j).unwrap());
    }
}

#[test]
fn joint_reductions_of_every_complete_reduction() {
    let k = plane();
    for (i, j) in cm_fixtures(&k) {
        let ij = i.product(&j).unwrap();
        let e11 = e11_via_product(&i, &j).unwrap();
        for seed in [0, 1, 2, 3, 4, 5] {
            let cr = find_complete_reduction(&i, &j, seed, 20, 10).unwrap();
            assert!(
                i.contains(&cr.x1)
                    && i.contains(&cr.x2)
                    && j.contains(&cr.y1)
                    && j.contains(&cr.y2)
            );
            let z = Ideal::new(&k, vec![cr.z1.clone(), cr.z2.clone()]);
            assert_eq!(is_reduction(&z, &ij, 10).unwrap(), Some(cr.verified_n));
            assert!(is_joint_reduction(&cr.x1, &cr.y2, &i, &j, 10)
                .unwrap()
                .is_some());
            assert!(is_joint_reduction(&cr.x2, &cr.y1, &i, &j, 10)
                .unwrap()
                .is_some());
            let e_xw = multiplicity(&Ideal::new(&k, vec![cr.x1.clone(), cr.y2.clone()]))
                .unwrap()
                .value as i64;
            let e_yz = multiplicity(&Ideal::new(&k, vec![cr.x2.clone(), cr.y1.clone()]))
                .unwrap()
                .value as i64;
            assert_eq!((e_xw, e_yz), (e11, e11), "{i} {j} seed {seed}");
        }
    }
}

#[test]
fn multiplicativity_on_cm_fixtures() {
    let k = plane();
    for (i, j) in cm_fixtures(&k) {
        let e = mixed_multiplicity_e11(&i, &j, 0, 20, 10).unwrap();
        let eij = multiplicity(&i.product(&j).unwrap()).unwrap().value as i64;
        let ei = multiplicity(&i).unwrap().value as i64;
        let ej = multiplicity(&j).unwrap().value as i64;
        assert_eq!(eij, ei + 2 * e.via_fit + ej);
        assert_eq!(e.via_fit, e.via_product);
        assert_eq!(e.via_joint as i64, e.via_fit);
    }
}

#[test]
fn closures_of_high_powers_are_trivial() {
    let k = plane();
    for (i, j) in cm_fixtures(&k) {
        let bg = Bigraded::new(&i, &j).unwrap();
        let cr = find_complete_reduction(&i, &j, 0, 20, 10).unwrap();
        let found = (1..=8).any(|n| bg.rr_closure(n, 0, &cr, 16).unwrap().is_closed);
        assert!(found, "{i}");
        // the closure is closed
        let c = bg.rr_closure(1, 0, &cr, 16).unwrap();
        let cc = Bigraded::new(&c.ideal, &c.ideal).unwrap();
        let ccr = find_complete_reduction(&c.ideal, &c.ideal, 0, 20, 10).unwrap();
        assert!(cc.rr_closure(1, 0, &ccr, 16).unwrap().is_closed);
    }
}

#[test]
fn closure_routes_agree() {
    let k = plane();
    for (i, j) in cm_fixtures(&k) {
        let bg = Bigraded::new(&i, &j).unwrap();
        let cr = find_complete_reduction(&i, &j, 0, 20, 10).unwrap();
        for a in 0..=3 {
            for b in 0..=3 {
                if a + b == 0 {
                    continue;
                }
                let z = bg.rr_closure(a, b, &cr, 16).unwrap();
                let p = bg.rr_closure_by_products(a, b, 16).unwrap();
                assert!(z.ideal.equals(&p.ideal).unwrap(), "{i} {j} ({a},{b})");
                assert!(z.ideal.contains_ideal(&bg.power(a, b)).unwrap());
            }
        }
    }
}

/// `λ(R/z^{[k]} I^{k+r} J^{k+s}) - λ(R/z^{[k]}) = 2 B(k+r, k+s) - λ(R/closure)`.
#[test]
fn length_identity_at_stable_k() {
    let k = plane();
    let ring = k.ring();
    for (i, j) in cm_fixtures(&k) {
        let bg = Bigraded::new(&i, &j).unwrap();
        let cr = find_complete_reduction(&i, &j, 0, 20, 10).unwrap();
        for r in 0..=2 {
            for s in 0..=2 {
                let limit = bg.h2_direct_limit(r, s, &cr, 16).unwrap();
                let kk = limit.k_stab + 2;
                let zk = vec![ring.pow(&cr.z1, kk), ring.pow(&cr.z2, kk)];
                let d = bg.power(kk + r, kk + s).times_elements(&zk);
                let lhs = d.local_colength().unwrap() as i64
                    - Ideal::new(&k, zk).local_colength().unwrap() as i64;
                let closure = bg.rr_closure(r, s, &cr, 16).unwrap();
                let b = bg.power(kk + r, kk + s).colength().unwrap() as i64;
                assert_eq!(lhs, 2 * b - closure.colength as i64, "{i} {j} ({r},{s})");
            }
        }
    }
}
