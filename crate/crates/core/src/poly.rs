//! Sparse multivariate polynomials over `F_p`.
//!
//! A [`Polynomial`] is only meaningful relative to the [`PolyRing`] that
//! produced it: terms are kept sorted in *descending* order with respect to
//! that ring's monomial order, and coefficients are residues modulo the
//! ring's characteristic. All arithmetic goes through the ring.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u32,
}

/// Canonical sparse polynomial: no zero coefficients, no repeated monomials,
/// terms strictly descending in the owning ring's order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self
                .terms
                .iter()
                .all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_coeff(&self) -> u32 {
        match self.terms.last() {
            Some(t) if t.mono.is_one() => t.coeff,
            _ => 0,
        }
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }
}

/// A polynomial ring `F_p[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::Validation(format!(
                "expected between 1 and {MAX_VARS} variables, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Validation(format!(
                    "`{v}` is not a valid variable name"
                )));
            }
            if vars[..i].contains(v) {
                return Err(Error::Validation(format!("variable `{v}` declared twice")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > vars.len() {
                return Err(Error::Validation(format!(
                    "elimination block of {k} variables in a ring of {}",
                    vars.len()
                )));
            }
        }
        Ok(PolyRing { field, vars, order })
    }

    /// Convenience constructor with degrevlex order.
    pub fn with_vars(p: u32, vars: &[&str]) -> Result<Self> {
        PolyRing::new(
            PrimeField::new(p)?,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        PolyRing::new(self.field, self.vars.clone(), order)
    }

    /// Ring with `k` fresh tag variables prepended, ordered by an
    /// elimination order for the tags.
    pub fn with_tags(&self, k: usize) -> Result<Self> {
        let mut vars: Vec<String> = (0..k).map(|i| format!("_t{i}")).collect();
        vars.extend(self.vars.iter().cloned());
        PolyRing::new(self.field, vars, MonomialOrder::Elimination(k))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> Polynomial {
        self.monomial(Monomial::ONE, c)
    }

    pub fn monomial(&self, mono: Monomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![Term { mono, coeff: c }],
            }
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars());
        self.monomial(Monomial::var_power(i, 1), 1)
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or
    /// zero) terms.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Polynomial {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let c = c % self.field.characteristic();
            let e = acc.entry(m).or_insert(0);
            *e = self.field.add(*e, c);
        }
        self.collect(acc)
    }

    fn collect(&self, acc: HashMap<Monomial, u32>) -> Polynomial {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        terms.sort_unstable_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial { terms }
    }

    /// Re-sorts a polynomial whose terms are canonical in some other order.
    pub fn resort(&self, f: &Polynomial) -> Polynomial {
        let mut terms = f.terms.clone();
        terms.sort_unstable_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial { terms }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.combine(f, g, false)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.combine(f, g, true)
    }

    fn combine(&self, f: &Polynomial, g: &Polynomial, negate_g: bool) -> Polynomial {
        let fp = &self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let gc = |c: u32| if negate_g { fp.neg(c) } else { c };
        while i < f.terms.len() && j < g.terms.len() {
            let (a, b) = (&f.terms[i], &g.terms[j]);
            match self.cmp(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(*a);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        mono: b.mono,
                        coeff: gc(b.coeff),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = fp.add(a.coeff, gc(b.coeff));
                    if c != 0 {
                        out.push(Term {
                            mono: a.mono,
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        out.extend(g.terms[j..].iter().map(|t| Term {
            mono: t.mono,
            coeff: gc(t.coeff),
        }));
        Polynomial { terms: out }
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono,
                    coeff: self.field.neg(t.coeff),
                })
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono,
                    coeff: self.field.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    /// `c * m * f`; order is preserved since monomial orders are multiplicative.
    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coeff: self.field.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        if f.is_monomial() {
            let t = f.terms[0];
            return self.mul_term(g, &t.mono, t.coeff);
        }
        if g.is_monomial() {
            let t = g.terms[0];
            return self.mul_term(f, &t.mono, t.coeff);
        }
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(f.len() * g.len());
        for a in &f.terms {
            for b in &g.terms {
                let e = acc.entry(a.mono.mul(&b.mono)).or_insert(0);
                *e = self.field.add(*e, self.field.mul(a.coeff, b.coeff));
            }
        }
        self.collect(acc)
    }

    pub fn pow(&self, f: &Polynomial, n: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Scales so that the leading coefficient is 1.
    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading() {
            None => Polynomial::zero(),
            Some(t) if t.coeff == 1 => f.clone(),
            Some(t) => self.scale(f, self.field.inv(t.coeff)),
        }
    }

    /// Exact division `f / g`; `None` when `g` does not divide `f`.
    pub fn divide_exact(&self, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
        let lt = *g.leading()?;
        let inv = self.field.inv(lt.coeff);
        let mut rem = f.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.leading().copied() {
            if !lt.mono.divides(&t.mono) {
                return None;
            }
            let m = lt.mono.quotient_of(&t.mono);
            let c = self.field.mul(t.coeff, inv);
            quot.push(Term { mono: m, coeff: c });
            rem = self.sub(&rem, &self.mul_term(g, &m, c));
        }
        Some(Polynomial { terms: quot })
    }

    /// Maps a polynomial of `self` into `target`, which must share the field
    /// and have `shift` extra leading variables.
    pub fn embed_into(&self, target: &PolyRing, f: &Polynomial, shift: usize) -> Polynomial {
        debug_assert_eq!(target.nvars(), self.nvars() + shift);
        target.resort(&Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.shifted(shift),
                    coeff: t.coeff,
                })
                .collect(),
        })
    }

    /// Inverse of [`embed_into`](Self::embed_into) for polynomials free of the
    /// first `shift` variables of `self`.
    pub fn project_into(&self, target: &PolyRing, f: &Polynomial, shift: usize) -> Polynomial {
        target.resort(&Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.unshifted(shift),
                    coeff: t.coeff,
                })
                .collect(),
        })
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(text, self)
    }

    /// Canonical text form; [`parse`](Self::parse) inverts it.
    pub fn display(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in f.terms.iter().enumerate() {
            let c = self.field.symmetric(t.coeff);
            let neg = c < 0;
            let abs = c.unsigned_abs();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut first = true;
            if abs != 1 || t.mono.is_one() {
                let _ = write!(out, "{abs}");
                first = false;
            }
            for (v, &e) in t.mono.exponents(self.nvars()).iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    out.push('*');
                }
                first = false;
                out.push_str(&self.vars[v]);
                if e > 1 {
                    let _ = write!(out, "^{e}");
                }
            }
        }
        out
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        PolyRing::with_vars(32003, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let f = r.parse("x+y").unwrap();
        let g = r.parse("x-y").unwrap();
        assert_eq!(r.mul(&f, &g), r.parse("x^2 - y^2").unwrap());
        assert_eq!(r.add(&f, &r.zero()), f);
    }

    #[test]
    fn binomial_square() {
        let r = ring();
        let f = r.parse("x+y").unwrap();
        let sq = r.mul(&f, &f);
        assert_eq!(r.display(&sq), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn display_signs() {
        let r = ring();
        let f = r.parse("-x^2*y + 3 - z").unwrap();
        assert_eq!(r.display(&f), "-x^2*y - z + 3");
        assert_eq!(r.display(&r.zero()), "0");
        assert_eq!(r.display(&r.constant(32002)), "-1");
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let f = r.parse("x^3 - y^3").unwrap();
        let g = r.parse("x - y").unwrap();
        let q = r.divide_exact(&f, &g).unwrap();
        assert_eq!(q, r.parse("x^2 + x*y + y^2").unwrap());
        assert!(r.divide_exact(&r.parse("x^2 + y").unwrap(), &g).is_none());
    }

    #[test]
    fn tag_embedding_roundtrip() {
        let r = ring();
        let t = r.with_tags(1).unwrap();
        let f = r.parse("x^2 + 5*y*z - 1").unwrap();
        let g = r.embed_into(&t, &f, 1);
        assert_eq!(t.project_into(&r, &g, 1), f);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u16..3, 0u16..3, 0u16..3), 0u32..32003), 0..6).prop_map(|ts| {
            let r = ring();
            r.from_terms(
                ts.into_iter()
                    .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]).unwrap(), k)),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 1000, .. ProptestConfig::default() })]
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            let r = ring();
            prop_assert_eq!(r.add(&r.add(&f, &g), &h), r.add(&f, &r.add(&g, &h)));
            prop_assert_eq!(r.add(&f, &g), r.add(&g, &f));
            prop_assert_eq!(r.mul(&r.mul(&f, &g), &h), r.mul(&f, &r.mul(&g, &h)));
            prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
            prop_assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
            prop_assert!(r.add(&f, &r.neg(&f)).is_zero());
            prop_assert_eq!(r.sub(&f, &g), r.add(&f, &r.neg(&g)));
        }

        #[test]
        fn print_parse_fixed_point(f in arb_poly()) {
            let r = ring();
            let s = r.display(&f);
            let back = r.parse(&s).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(r.display(&back), s);
        }
    }
}
