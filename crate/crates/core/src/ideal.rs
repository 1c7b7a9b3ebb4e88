//! Ideals of `R = S/L` localized at the origin, represented by lifts to `S`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate, GroebnerBasis};
use crate::linalg::kernel_mod_p;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial, Term};
use crate::staircase::{count_standard, standard_monomials};

/// Upper bound on stabilization steps in [`Ideal::local_colength`].
pub const LOCAL_COLENGTH_CAP: usize = 64;

/// Handle to an ideal of `R`. Cheap to clone; the Gröbner basis of
/// `gens + L` and the colength are computed once, on first use.
#[derive(Clone)]
pub struct Ideal {
    inner: Arc<Inner>,
}

struct Inner {
    ctx: Arc<RingContext>,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    colength: OnceLock<Option<u64>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring();
        let parts: Vec<String> = self.inner.gens.iter().map(|g| ring.display(g)).collect();
        if parts.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", parts.join(", "))
        }
    }
}

impl Ideal {
    /// Ideal generated by `gens`, trimmed.
    pub fn new(ctx: &Arc<RingContext>, gens: Vec<Polynomial>) -> Ideal {
        Ideal::untrimmed(ctx, trim(ctx, gens))
    }

    fn untrimmed(ctx: &Arc<RingContext>, gens: Vec<Polynomial>) -> Ideal {
        Ideal {
            inner: Arc::new(Inner {
                ctx: Arc::clone(ctx),
                gens,
                gb: OnceLock::new(),
                colength: OnceLock::new(),
            }),
        }
    }

    fn with_groebner(ctx: &Arc<RingContext>, gens: Vec<Polynomial>, gb: GroebnerBasis) -> Ideal {
        let ideal = Ideal::new(ctx, gens);
        let _ = ideal.inner.gb.set(gb);
        ideal
    }

    pub fn from_strings(ctx: &Arc<RingContext>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|g| ctx.parse(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ctx, polys))
    }

    pub fn unit(ctx: &Arc<RingContext>) -> Ideal {
        Ideal::new(ctx, vec![ctx.ring().one()])
    }

    pub fn zero(ctx: &Arc<RingContext>) -> Ideal {
        Ideal::new(ctx, Vec::new())
    }

    /// `m = (x_1, ..., x_n)`.
    pub fn maximal(ctx: &Arc<RingContext>) -> Ideal {
        Ideal::maximal_power(ctx, 1)
    }

    /// `m^n`, generated by all monomials of degree `n`.
    pub fn maximal_power(ctx: &Arc<RingContext>, n: u32) -> Ideal {
        let ring = ctx.ring();
        let gens = monomials_of_degree(ring.nvars(), n)
            .into_iter()
            .map(|m| ring.monomial(m, 1))
            .collect();
        Ideal::new(ctx, gens)
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.inner.ctx
    }

    pub fn ring(&self) -> &PolyRing {
        self.inner.ctx.ring()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.inner.gens
    }

    /// Reduced Gröbner basis of `gens + L`.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.inner.gb.get_or_init(|| {
            let ctx = &self.inner.ctx;
            let mut all: Vec<Polynomial> = ctx.relations_groebner().generators().to_vec();
            all.extend(self.inner.gens.iter().cloned());
            buchberger(ctx.ring(), &all)
        })
    }

    fn same_context(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.inner.ctx, &other.inner.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner().is_member(self.ring(), f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_context(other)?;
        Ok(other.generators().iter().all(|g| self.contains(g)))
    }

    /// True for the zero ideal of `R` (every generator lies in `L`).
    pub fn is_zero(&self) -> bool {
        self.inner.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    /// Generators and relations are all homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.inner.gens.iter().all(Polynomial::is_homogeneous)
            && self.inner.ctx.relations_homogeneous()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_context(other)?;
        let mut gens = self.inner.gens.clone();
        gens.extend(other.inner.gens.iter().cloned());
        Ok(Ideal::new(&self.inner.ctx, gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_context(other)?;
        let ring = self.ring();
        let mut gens = Vec::with_capacity(self.inner.gens.len() * other.inner.gens.len());
        for f in &self.inner.gens {
            for g in &other.inner.gens {
                gens.push(ring.mul(f, g));
            }
        }
        Ok(Ideal::new(&self.inner.ctx, gens))
    }

    /// Ideal generated by products `f*g` with `f` here and `g` in `elements`.
    pub fn times_elements(&self, elements: &[Polynomial]) -> Ideal {
        let ring = self.ring();
        let gens = elements
            .iter()
            .flat_map(|e| self.inner.gens.iter().map(move |f| ring.mul(e, f)))
            .collect();
        Ideal::new(&self.inner.ctx, gens)
    }

    /// `A^n`; `A^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.inner.ctx);
        for _ in 0..n {
            acc = acc.product(self).expect("same context");
        }
        acc
    }

    /// `A : B = {f : f B ⊆ A}`. Uses linear algebra on `S/(A + L)` when that
    /// quotient is finite dimensional and elimination otherwise.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_context(other)?;
        if let Some(c) = self.monomial_colon(other) {
            return Ok(c);
        }
        if self.colength().is_some() {
            self.colon_by_linear_algebra(other)
        } else {
            self.colon_by_elimination(other)
        }
    }

    /// `A : B` when `A + L` and `B` are both monomial ideals.
    fn monomial_colon(&self, other: &Ideal) -> Option<Ideal> {
        let gb = self.groebner();
        if other.is_zero()
            || !gb.generators().iter().all(Polynomial::is_monomial)
            || !other.generators().iter().all(Polynomial::is_monomial)
        {
            return None;
        }
        let lms = gb.leading_monomials();
        let mut acc: Option<Vec<Monomial>> = None;
        for b in other.generators() {
            let b = b.leading_monomial().unwrap();
            let q = minimal_monomials(lms.iter().map(|g| b.quotient_of(&b.lcm(g))).collect());
            acc = Some(match acc {
                None => q,
                Some(prev) => minimal_monomials(
                    prev.iter()
                        .flat_map(|u| q.iter().map(move |v| u.lcm(v)))
                        .collect(),
                ),
            });
        }
        let ring = self.ring();
        let gens = acc
            .unwrap_or_default()
            .into_iter()
            .map(|m| ring.monomial(m, 1))
            .collect();
        Some(Ideal::new(&self.inner.ctx, gens))
    }

    /// Colon via `(A ∩ (b)) / b` for each generator `b`, intersected.
    /// Intersections are computed by eliminating a tag variable from
    /// `t A + (1 - t) B`.
    pub fn colon_by_elimination(&self, other: &Ideal) -> Result<Ideal> {
        self.same_context(other)?;
        if other.is_zero() {
            return Err(Error::Validation("colon by the zero ideal".into()));
        }
        let ctx = &self.inner.ctx;
        let ring = ctx.ring();
        let lhs: Vec<Polynomial> = ctx
            .relations()
            .iter()
            .chain(self.inner.gens.iter())
            .cloned()
            .collect();
        let mut acc: Option<Vec<Polynomial>> = None;
        for b in other.generators() {
            let inter = intersect(ctx, &lhs, std::slice::from_ref(b));
            let mut quotients = Vec::with_capacity(inter.len());
            for h in &inter {
                let q = ring.divide_exact(h, b).ok_or_else(|| {
                    Error::Inconsistency(format!(
                        "intersection element {} not divisible by {}",
                        ring.display(h),
                        ring.display(b)
                    ))
                })?;
                quotients.push(q);
            }
            quotients.extend(ctx.relations().iter().cloned());
            acc = Some(match acc {
                None => quotients,
                Some(prev) => intersect(ctx, &prev, &quotients),
            });
        }
        Ok(Ideal::new(ctx, acc.unwrap_or_default()))
    }

    /// Colon for `A` with `dim_k S/(A+L) < ∞`: the kernel of multiplication
    /// by the generators of `B` on the standard-monomial basis.
    pub fn colon_by_linear_algebra(&self, other: &Ideal) -> Result<Ideal> {
        self.same_context(other)?;
        if other.is_zero() {
            return Err(Error::Validation("colon by the zero ideal".into()));
        }
        let ctx = &self.inner.ctx;
        let ring = ctx.ring();
        let field = *ring.field();
        let gb = self.groebner();
        let mut std =
            standard_monomials(&gb.leading_monomials(), ring.nvars()).ok_or_else(|| {
                Error::Validation("linear-algebra colon needs a finite-colength numerator".into())
            })?;
        if std.is_empty() {
            return Ok(Ideal::unit(ctx));
        }
        std.sort_by(|a, b| ring.cmp(b, a));
        let index: HashMap<Monomial, usize> =
            std.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let c = std.len();
        let coords = |f: &Polynomial| -> Vec<u32> {
            let mut v = vec![0u32; c];
            for t in f.terms() {
                v[index[&t.mono]] = t.coeff;
            }
            v
        };
        let to_poly = |v: &[u32]| -> Polynomial {
            Polynomial::from_sorted_unchecked(
                v.iter()
                    .enumerate()
                    .filter(|&(_, &x)| x != 0)
                    .map(|(i, &x)| Term {
                        mono: std[i],
                        coeff: x,
                    })
                    .collect(),
            )
        };
        // current kernel basis, as coordinate vectors
        let mut basis: Vec<Vec<u32>> = (0..c)
            .map(|i| {
                let mut v = vec![0; c];
                v[i] = 1;
                v
            })
            .collect();
        for g in other.generators() {
            let g = gb.normal_form(ring, g);
            if g.is_zero() {
                continue;
            }
            let images: Vec<Vec<u32>> = basis
                .iter()
                .map(|v| coords(&gb.normal_form(ring, &ring.mul(&to_poly(v), &g))))
                .collect();
            let d = basis.len();
            let mat: Vec<Vec<u32>> = (0..c)
                .map(|i| images.iter().map(|im| im[i]).collect())
                .collect();
            let w = kernel_mod_p(&field, mat, d);
            basis = w
                .iter()
                .map(|wv| {
                    let mut out = vec![0u32; c];
                    for (k, &coef) in wv.iter().enumerate() {
                        if coef == 0 {
                            continue;
                        }
                        for (o, &b) in out.iter_mut().zip(&basis[k]) {
                            *o = field.add(*o, field.mul(coef, b));
                        }
                    }
                    out
                })
                .collect();
            if basis.is_empty() {
                break;
            }
        }
        // echelonize so that kernel elements have distinct leading monomials
        let echelon = row_echelon(&field, basis, c);
        let kernel: Vec<Polynomial> = echelon.iter().map(|v| to_poly(v)).collect();
        let mut seed: Vec<Polynomial> = gb.generators().to_vec();
        seed.extend(kernel.iter().cloned());
        let new_gb = buchberger(ring, &seed);
        let mut gens = self.inner.gens.clone();
        gens.extend(kernel);
        Ok(Ideal::with_groebner(ctx, gens, new_gb))
    }

    /// Equality as ideals of `S/L` (not localized).
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_context(other)?;
        Ok(self.groebner() == other.groebner())
    }

    /// `dim_k S/(A + L)`, `None` when infinite.
    pub fn colength(&self) -> Option<u64> {
        *self.inner.colength.get_or_init(|| {
            count_standard(&self.groebner().leading_monomials(), self.ring().nvars())
        })
    }

    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        standard_monomials(&self.groebner().leading_monomials(), self.ring().nvars())
    }

    /// `A + m` is the unit ideal, i.e. the origin is not in `V(A)`.
    fn avoids_origin(&self) -> bool {
        // L ⊆ m, so A + m = (1) iff some generator has a unit constant term
        self.inner.gens.iter().any(|g| g.constant_coeff() != 0)
    }

    /// Smallest `N` with `m^N ⊆ A + L`, when one exists.
    pub fn nilpotency_degree(&self) -> Option<u32> {
        let c = self.colength()?;
        if c == 0 {
            return Some(0);
        }
        let std = self.standard_monomials()?;
        let top = std.iter().map(Monomial::degree).max().unwrap_or(0);
        let nvars = self.ring().nvars();
        let ring = self.ring();
        let limit = (c as u32).max(top + 1);
        (top + 1..=limit).find(|&n| {
            monomials_of_degree(nvars, n)
                .into_iter()
                .all(|m| self.contains(&ring.monomial(m, 1)))
        })
    }

    /// Finite colength and no zeros away from the origin.
    fn supported_at_origin(&self) -> bool {
        match self.colength() {
            None => false,
            Some(0) => true,
            Some(_) => self.is_homogeneous() || self.nilpotency_degree().is_some(),
        }
    }

    /// Colength of the localization at the origin: the stable value of
    /// `colength(A + m^N)` as `N` grows.
    pub fn local_colength(&self) -> Result<u64> {
        if self.avoids_origin() {
            return Ok(0);
        }
        if let Some(c) = self.colength() {
            if self.supported_at_origin() {
                return Ok(c);
            }
        }
        let estimate = self.colength().unwrap_or(16) as usize;
        self.local_colength_from(1, (4 * estimate).clamp(3, LOCAL_COLENGTH_CAP))
    }

    /// Stabilization loop starting at `m^start`; three consecutive equal
    /// values end it.
    pub fn local_colength_from(&self, start: u32, max_steps: usize) -> Result<u64> {
        if self.avoids_origin() {
            return Ok(0);
        }
        let ctx = &self.inner.ctx;
        let mut history: Vec<u64> = Vec::new();
        for step in 0..max_steps {
            let n = start + step as u32;
            let trunc = self.sum(&Ideal::maximal_power(ctx, n))?;
            let v = trunc.colength().expect("m^N has finite colength");
            history.push(v);
            if history.len() >= 3 && history[history.len() - 3..].iter().all(|&h| h == v) {
                return Ok(v);
            }
        }
        Err(Error::StabilizationExceeded {
            what: format!("local colength of {self}"),
            bound: max_steps,
        })
    }

    /// Proper, of finite colength, and supported only at the origin.
    pub fn is_m_primary(&self) -> bool {
        matches!(self.colength(), Some(c) if c > 0) && self.supported_at_origin()
    }

    /// For `self ⊆ larger` with `larger` m-primary: whether the two agree
    /// after localizing at the origin.
    pub fn locally_equal(&self, larger: &Ideal) -> Result<bool> {
        self.same_context(larger)?;
        let n0 = larger
            .nilpotency_degree()
            .ok_or_else(|| Error::NotMPrimary(larger.to_string()))?;
        let cl = larger.colength().expect("finite by nilpotency");
        let probe = self.sum(&Ideal::maximal_power(&self.inner.ctx, n0 + 1))?;
        Ok(probe.colength() == Some(cl))
    }
}

/// Generators of `(F) ∩ (G)` in `S` via `t F + (1 - t) G` with `t` eliminated.
fn intersect(ctx: &RingContext, f: &[Polynomial], g: &[Polynomial]) -> Vec<Polynomial> {
    let ring = ctx.ring();
    let tagged = ctx.tagged_ring();
    let t = tagged.var(0);
    let one_minus_t = tagged.sub(&tagged.one(), &t);
    let mut gens = Vec::with_capacity(f.len() + g.len());
    for p in f {
        gens.push(tagged.mul(&t, &ring.embed_into(tagged, p, 1)));
    }
    for p in g {
        gens.push(tagged.mul(&one_minus_t, &ring.embed_into(tagged, p, 1)));
    }
    eliminate(tagged, &gens, 1)
        .iter()
        .map(|h| tagged.project_into(ring, h, 1))
        .collect()
}

/// Reduced row echelon form with pivots at the first nonzero column; zero
/// rows are dropped.
fn row_echelon(
    field: &crate::field::PrimeField,
    mut rows: Vec<Vec<u32>>,
    cols: usize,
) -> Vec<Vec<u32>> {
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][col]);
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pr = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let f = row[col];
                for (v, &pv) in row.iter_mut().zip(&pr) {
                    *v = field.sub(*v, field.mul(f, pv));
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

fn minimal_monomials(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by_key(Monomial::degree);
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// All monomials of total degree `n` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, n: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, var: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if var + 1 == nvars {
            cur.push(left as u16);
            out.push(Monomial::from_exponents(cur).expect("fits"));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u16);
            rec(nvars, var + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, 0, n, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// Reduces modulo `L`, drops zeros and redundant generators.
///
/// A generator is dropped when it is zero modulo `L`, a scalar multiple of
/// a kept one, or a monomial multiple of a kept one. Each test is a
/// sufficient condition for membership in the ideal of the others.
fn trim(ctx: &RingContext, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let ring = ctx.ring();
    let mut reduced: Vec<Polynomial> = gens
        .iter()
        .map(|g| ring.make_monic(&ctx.reduce(g)))
        .filter(|g| !g.is_zero())
        .collect();
    if reduced
        .iter()
        .any(|g| g.leading_monomial() == Some(Monomial::ONE))
    {
        return vec![ring.one()];
    }
    reduced.sort_by(|a, b| by_degree_then_lm(ring, a, b));
    // echelonize leading terms so that no generator is a linear
    // combination of earlier ones with the same leading monomial
    let mut pivots: HashMap<Monomial, Polynomial> = HashMap::new();
    let mut echelon: Vec<Polynomial> = Vec::with_capacity(reduced.len());
    for mut g in reduced {
        while let Some(t) = g.leading() {
            match pivots.get(&t.mono) {
                Some(h) => g = ring.sub(&g, &ring.scale(h, t.coeff)),
                None => break,
            }
        }
        if let Some(lm) = g.leading_monomial() {
            let g = ring.make_monic(&g);
            pivots.insert(lm, g.clone());
            echelon.push(g);
        }
    }
    echelon.sort_by(|a, b| by_degree_then_lm(ring, a, b));
    let reduced = echelon;
    let mut kept: Vec<Polynomial> = Vec::with_capacity(reduced.len());
    for g in reduced {
        let lm = g.leading_monomial().unwrap();
        let redundant = kept.iter().any(|h| {
            let hl = h.leading_monomial().unwrap();
            hl.divides(&lm)
                && h.len() == g.len()
                && (h.is_monomial() || ring.mul_term(h, &hl.quotient_of(&lm), 1) == g)
        });
        if !redundant {
            kept.push(g);
        }
    }
    kept
}

fn by_degree_then_lm(ring: &PolyRing, a: &Polynomial, b: &Polynomial) -> std::cmp::Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| {
            ring.cmp(
                &b.leading_monomial().unwrap(),
                &a.leading_monomial().unwrap(),
            )
        })
        .then_with(|| a.len().cmp(&b.len()))
}

/// `a` is a nonzerodivisor on `R` and `b` is a nonzerodivisor on `R/(a)`.
pub fn is_regular_sequence(ctx: &Arc<RingContext>, a: &Polynomial, b: &Polynomial) -> Result<bool> {
    let zero = Ideal::zero(ctx);
    let ia = Ideal::new(ctx, vec![a.clone()]);
    let ib = Ideal::new(ctx, vec![b.clone()]);
    if ia.is_zero() || ib.is_zero() {
        return Ok(false);
    }
    if !zero.colon(&ia)?.equals(&zero)? {
        return Ok(false);
    }
    ia.colon(&ib)?.equals(&ia)
}
