//! Buchberger's algorithm with the Gebauer–Möller pair update.
//!
//! Pairs are processed in the normal strategy: smallest lcm degree first,
//! ties broken by the positions of the two basis elements. Together with the
//! deterministic final interreduction this makes the reduced basis a pure
//! function of the input list and the order.

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial, Term};

/// A reduced, monic Gröbner basis, sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].leading_monomial() == Some(Monomial::ONE)
    }

    pub fn normal_form(&self, ring: &PolyRing, f: &Polynomial) -> Polynomial {
        debug_assert_eq!(ring.order(), self.order);
        let lms = self.leading_monomials();
        let refs: Vec<(Monomial, &Polynomial)> = lms.into_iter().zip(&self.generators).collect();
        reduce_full(ring, f, &refs)
    }

    pub fn is_member(&self, ring: &PolyRing, f: &Polynomial) -> bool {
        self.normal_form(ring, f).is_zero()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> GroebnerBasis {
    let mut b = Builder::new(ring);
    for g in gens {
        b.push_generator(g);
    }
    b.finish()
}

/// Remainder of `f` on division by `gb`.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(ring, f)
}

pub fn is_member(ring: &PolyRing, f: &Polynomial, gb: &GroebnerBasis) -> bool {
    gb.is_member(ring, f)
}

/// Generators of `(gens) ∩ F_p[x_{k+1}, ..., x_n]`. `ring` must carry the
/// elimination order for its first `k` variables (or any order when `k = 0`).
/// The returned polynomials still live in `ring` but involve none of the
/// eliminated variables.
pub fn eliminate(ring: &PolyRing, gens: &[Polynomial], k: usize) -> Vec<Polynomial> {
    if k > 0 {
        assert_eq!(
            ring.order(),
            MonomialOrder::Elimination(k),
            "elimination needs a block order for the dropped variables"
        );
    }
    let gb = buchberger(ring, gens);
    gb.generators
        .into_iter()
        .filter(|g| {
            let lm = g.leading_monomial().unwrap();
            (0..k).all(|i| lm.exponent(i) == 0)
        })
        .collect()
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Pair {
    fn key(&self) -> (u32, usize, usize) {
        (self.lcm.degree(), self.i.min(self.j), self.i.max(self.j))
    }
}

/// Incremental Buchberger state.
pub(crate) struct Builder<'r> {
    ring: &'r PolyRing,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    pending: Vec<Polynomial>,
    unit: bool,
}

impl<'r> Builder<'r> {
    pub(crate) fn new(ring: &'r PolyRing) -> Self {
        Builder {
            ring,
            polys: Vec::new(),
            lms: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            pending: Vec::new(),
            unit: false,
        }
    }

    /// Queues an input generator; it is reduced and inserted by `finish`.
    pub(crate) fn push_generator(&mut self, f: &Polynomial) {
        if !f.is_zero() {
            self.pending.push(f.clone());
        }
    }

    pub(crate) fn finish(mut self) -> GroebnerBasis {
        let order = self.ring.order();
        let mut pending = std::mem::take(&mut self.pending);
        if pending
            .iter()
            .any(|f| f.leading_monomial() == Some(Monomial::ONE))
        {
            return GroebnerBasis {
                order,
                generators: vec![self.ring.one()],
            };
        }
        if pending.iter().all(Polynomial::is_monomial) {
            return monomial_basis(self.ring, &pending);
        }
        // low degree first: earlier elements make later reductions cheaper
        pending.sort_by(|a, b| {
            let (da, db) = (a.total_degree(), b.total_degree());
            da.cmp(&db).then_with(|| {
                self.ring.cmp(
                    &a.leading_monomial().unwrap(),
                    &b.leading_monomial().unwrap(),
                )
            })
        });
        for f in pending {
            self.insert_reduced(f);
            if self.unit {
                break;
            }
        }
        while !self.unit {
            let Some(pos) = self
                .pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, p)| p.key())
                .map(|(k, _)| k)
            else {
                break;
            };
            let pair = self.pairs.swap_remove(pos);
            let s = self.s_polynomial(&pair);
            self.insert_reduced(s);
        }
        if self.unit {
            return GroebnerBasis {
                order,
                generators: vec![self.ring.one()],
            };
        }
        self.interreduce()
    }

    fn active_refs(&self) -> Vec<(Monomial, &Polynomial)> {
        self.active
            .iter()
            .map(|&k| (self.lms[k], &self.polys[k]))
            .collect()
    }

    fn insert_reduced(&mut self, f: Polynomial) {
        let r = {
            let refs = self.active_refs();
            reduce_full(self.ring, &f, &refs)
        };
        if r.is_zero() {
            return;
        }
        let r = self.ring.make_monic(&r);
        let lm = r.leading_monomial().unwrap();
        if lm.is_one() {
            self.unit = true;
            return;
        }
        let idx = self.polys.len();
        self.polys.push(r);
        self.lms.push(lm);
        self.update(idx);
    }

    /// Gebauer–Möller update for a new element.
    fn update(&mut self, h: usize) {
        let lh = self.lms[h];
        let cands: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: h,
                lcm: lh.lcm(&self.lms[g]),
            })
            .collect();

        // chain criterion among the new pairs; coprime pairs are kept here
        // only to be discarded below, so that they can veto others
        let mut kept: Vec<Pair> = Vec::with_capacity(cands.len());
        for (a, p) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(&self.lms[p.i]);
            let dominated = cands[a + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(*p);
            }
        }
        let lms = &self.lms;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let l1 = lms[p.i].lcm(&lh);
            let l2 = lms[p.j].lcm(&lh);
            l1 == p.lcm || l2 == p.lcm
        });
        let polys = &self.polys;
        self.pairs.extend(kept.into_iter().filter(|p| {
            !lh.is_coprime(&lms[p.i]) && !(polys[p.i].is_monomial() && polys[p.j].is_monomial())
        }));
        self.active.retain(|&g| !lh.divides(&lms[g]));
        self.active.push(h);
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = self.lms[p.i].quotient_of(&p.lcm);
        let mg = self.lms[p.j].quotient_of(&p.lcm);
        // both monic: leading terms cancel
        self.ring.sub(
            &self.ring.mul_term(f, &mf, 1),
            &self.ring.mul_term(g, &mg, 1),
        )
    }

    fn interreduce(self) -> GroebnerBasis {
        let mut idx = self.active.clone();
        idx.sort_by(|&a, &b| self.ring.cmp(&self.lms[a], &self.lms[b]));
        let mut generators = Vec::with_capacity(idx.len());
        for (pos, &k) in idx.iter().enumerate() {
            let others: Vec<(Monomial, &Polynomial)> = idx
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != pos)
                .map(|(_, &o)| (self.lms[o], &self.polys[o]))
                .collect();
            let f = &self.polys[k];
            let lead = Polynomial::from_sorted_unchecked(vec![*f.leading().unwrap()]);
            let tail = Polynomial::from_sorted_unchecked(f.terms()[1..].to_vec());
            let tail = reduce_full(self.ring, &tail, &others);
            generators.push(self.ring.add(&lead, &tail));
        }
        GroebnerBasis {
            order: self.ring.order(),
            generators,
        }
    }
}

/// Reduced basis of a monomial ideal: the minimal generators.
fn monomial_basis(ring: &PolyRing, gens: &[Polynomial]) -> GroebnerBasis {
    let mut ms: Vec<Monomial> = gens.iter().map(|g| g.leading_monomial().unwrap()).collect();
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ring.cmp(a, b)));
    ms.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in ms {
        if !minimal.iter().any(|k| k.divides(&m)) {
            minimal.push(m);
        }
    }
    minimal.sort_by(|a, b| ring.cmp(a, b));
    GroebnerBasis {
        order: ring.order(),
        generators: minimal.into_iter().map(|m| ring.monomial(m, 1)).collect(),
    }
}

/// Full reduction of `f` by monic divisors. Terms are processed from the
/// top; the working polynomial is kept in ascending order so that the
/// current leading term sits at the end of the vector.
pub(crate) fn reduce_full(
    ring: &PolyRing,
    f: &Polynomial,
    divisors: &[(Monomial, &Polynomial)],
) -> Polynomial {
    if divisors.is_empty() || f.is_zero() {
        return f.clone();
    }
    let fp = ring.field();
    let mut work: Vec<Term> = f.terms().iter().rev().copied().collect();
    let mut scratch: Vec<Term> = Vec::new();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(&lead) = work.last() {
        let div = divisors.iter().find(|(lm, _)| lm.divides(&lead.mono));
        let Some(&(lm, g)) = div else {
            rem.push(lead);
            work.pop();
            continue;
        };
        let q = lm.quotient_of(&lead.mono);
        let c = fp.neg(lead.coeff);
        // work := work + c * q * g, merged in ascending order
        scratch.clear();
        scratch.reserve(work.len() + g.len());
        let gt = g.terms();
        let (mut a, mut b) = (0usize, gt.len());
        while a < work.len() && b > 0 {
            let wt = work[a];
            let t = gt[b - 1];
            let gm = t.mono.mul(&q);
            match ring.cmp(&wt.mono, &gm) {
                std::cmp::Ordering::Less => {
                    scratch.push(wt);
                    a += 1;
                }
                std::cmp::Ordering::Greater => {
                    scratch.push(Term {
                        mono: gm,
                        coeff: fp.mul(t.coeff, c),
                    });
                    b -= 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = fp.add(wt.coeff, fp.mul(t.coeff, c));
                    if v != 0 {
                        scratch.push(Term { mono: gm, coeff: v });
                    }
                    a += 1;
                    b -= 1;
                }
            }
        }
        scratch.extend_from_slice(&work[a..]);
        while b > 0 {
            let t = gt[b - 1];
            scratch.push(Term {
                mono: t.mono.mul(&q),
                coeff: fp.mul(t.coeff, c),
            });
            b -= 1;
        }
        std::mem::swap(&mut work, &mut scratch);
    }
    Polynomial::from_sorted_unchecked(rem)
}
