//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Maximum number of ring variables (including elimination tags).
pub const MAX_VARS: usize = 8;

/// An exponent vector. Entries beyond the ring's variable count are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        degree: 0,
    };

    pub fn from_exponents(exps: &[u16]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Validation(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        Ok(m)
    }

    /// The monomial `x_i^e`.
    pub fn var_power(i: usize, e: u16) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = e;
        m.degree = e as u32;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i] + other.exps[i];
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut exps = [0u16; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = other.exps[i] - self.exps[i];
        }
        Monomial {
            exps,
            degree: other.degree - self.degree,
        }
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        let mut degree = 0;
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].max(other.exps[i]);
            degree += *e as u32;
        }
        Monomial { exps, degree }
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Moves exponents `shift` slots to the right (used to prepend tag variables).
    pub(crate) fn shifted(&self, shift: usize) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        exps[shift..].copy_from_slice(&self.exps[..MAX_VARS - shift]);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Drops the first `shift` exponents, which must be zero.
    pub(crate) fn unshifted(&self, shift: usize) -> Monomial {
        debug_assert!(self.exps[..shift].iter().all(|&e| e == 0));
        let mut exps = [0u16; MAX_VARS];
        exps[..MAX_VARS - shift].copy_from_slice(&self.exps[shift..]);
        Monomial {
            exps,
            degree: self.degree,
        }
    }
}

/// A multiplicative well-order on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Degrevlex on the first `k` variables, ties broken by degrevlex on the rest.
    /// Any monomial involving the first block is larger than every monomial
    /// free of it.
    Elimination(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex(&a.exps, &b.exps)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination(k) => {
                let da: u32 = a.exps[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = b.exps[..k].iter().map(|&e| e as u32).sum();
                da.cmp(&db)
                    .then_with(|| revlex(&a.exps[..k], &b.exps[..k]))
                    .then_with(|| (a.degree - da).cmp(&(b.degree - db)))
                    .then_with(|| revlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    /// Checked comparison of raw exponent vectors.
    pub fn compare_exponents(&self, a: &[u16], b: &[u16]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        Ok(self.compare(&Monomial::from_exponents(a)?, &Monomial::from_exponents(b)?))
    }
}

/// Reverse lexicographic tie-break: the monomial with the smaller exponent in
/// the last differing variable is the larger one.
#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
        // x*z^... : xy^2 vs x^2 z in three variables (revlex: z smaller)
        assert_eq!(o.compare(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn elimination_puts_tag_first() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn compare_exponents_checks_length() {
        let o = MonomialOrder::DegRevLex;
        assert!(o.compare_exponents(&[1, 0], &[1, 0, 0]).is_err());
        assert_eq!(
            o.compare_exponents(&[0, 1], &[0, 1]).unwrap(),
            Ordering::Equal
        );
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::DegRevLex),
            Just(MonomialOrder::Lex),
            (1usize..3).prop_map(MonomialOrder::Elimination),
        ]
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..6, 3).prop_map(|v| m(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 1000, .. ProptestConfig::default() })]
        #[test]
        fn order_axioms(o in arb_order(), a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            // multiplicative
            prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
            // 1 is minimal
            prop_assert_ne!(o.compare(&a, &Monomial::ONE), Ordering::Less);
            // transitivity
            if ab != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
            }
        }
    }
}
