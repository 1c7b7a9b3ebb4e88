//! The local ring `R = (S/L)` localized at the ideal of the variables.

use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::hilbert::{monomial_numerator, HilbertData};
use crate::ideal::{is_regular_sequence, Ideal};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Seed used for the random parameter systems of the CM sanity check.
const CM_CHECK_SEED: u64 = 0x5eed_c0de;
const CM_CHECK_ATTEMPTS: usize = 3;

/// An ambient polynomial ring `S` (degrevlex), relations `L ⊆ (x_1..x_n)`,
/// and the declared properties of `R = S/L` at the origin.
///
/// Ideals of `R` are represented by generators in `S`; every Gröbner basis,
/// membership and colength computation implicitly adjoins `L`.
#[derive(Debug)]
pub struct RingContext {
    ring: PolyRing,
    relations: Vec<Polynomial>,
    relations_gb: GroebnerBasis,
    cm_declared: bool,
    dimension: usize,
    tagged: OnceLock<PolyRing>,
}

impl RingContext {
    /// Validates and builds a context.
    ///
    /// Relations must have no constant term. When they are homogeneous the
    /// declared dimension is cross-checked against the Hilbert series, and a
    /// Cohen-Macaulay declaration in dimension 2 is checked on random
    /// systems of parameters.
    pub fn new(
        ring: PolyRing,
        relations: Vec<Polynomial>,
        cm_declared: bool,
        dimension: usize,
    ) -> Result<Arc<Self>> {
        let relations: Vec<Polynomial> = relations.into_iter().filter(|f| !f.is_zero()).collect();
        if let Some(bad) = relations.iter().find(|f| f.constant_coeff() != 0) {
            return Err(Error::Validation(format!(
                "relation `{}` has a constant term; the origin must lie on S/L",
                ring.display(bad)
            )));
        }
        if dimension > ring.nvars() {
            return Err(Error::Validation(format!(
                "declared dimension {dimension} exceeds the number of variables {}",
                ring.nvars()
            )));
        }
        let relations_gb = buchberger(&ring, &relations);
        let ctx = Arc::new(RingContext {
            ring,
            relations,
            relations_gb,
            cm_declared,
            dimension,
            tagged: OnceLock::new(),
        });
        if ctx.relations_homogeneous() {
            let h = ctx.hilbert_series()?;
            if h.dimension != dimension {
                return Err(Error::Validation(format!(
                    "declared dimension {dimension} but the Hilbert series of S/L has dimension {}",
                    h.dimension
                )));
            }
        }
        if cm_declared && dimension == 2 && !ctx.passes_cm_check()? {
            return Err(Error::Validation(
                "ring declared Cohen-Macaulay but no random system of parameters is a regular sequence"
                    .into(),
            ));
        }
        Ok(ctx)
    }

    /// Polynomial ring `F_p[vars]` with no relations.
    pub fn polynomial_ring(p: u32, vars: &[&str], cm_declared: bool) -> Result<Arc<Self>> {
        let ring = PolyRing::with_vars(p, vars)?;
        let dim = vars.len();
        RingContext::new(ring, Vec::new(), cm_declared, dim)
    }

    /// Parses the relations from text.
    pub fn from_strings(
        p: u32,
        vars: &[&str],
        relations: &[&str],
        cm_declared: bool,
        dimension: usize,
    ) -> Result<Arc<Self>> {
        let ring = PolyRing::with_vars(p, vars)?;
        let rels = relations
            .iter()
            .map(|r| ring.parse(r))
            .collect::<Result<Vec<_>>>()?;
        RingContext::new(ring, rels, cm_declared, dimension)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.field().characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn relations_groebner(&self) -> &GroebnerBasis {
        &self.relations_gb
    }

    pub fn cm_declared(&self) -> bool {
        self.cm_declared
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn relations_homogeneous(&self) -> bool {
        self.relations.iter().all(Polynomial::is_homogeneous)
    }

    /// Ring with one elimination tag prepended.
    pub(crate) fn tagged_ring(&self) -> &PolyRing {
        self.tagged
            .get_or_init(|| self.ring.with_tags(1).expect("tag variable fits"))
    }

    /// Normal form modulo `L`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.relations_gb.normal_form(&self.ring, f)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        self.ring.parse(text)
    }

    pub fn display(&self, f: &Polynomial) -> String {
        self.ring.display(f)
    }

    /// Hilbert series of `S/L` graded by total degree.
    pub fn hilbert_series(&self) -> Result<HilbertData> {
        if !self.relations_homogeneous() {
            return Err(Error::Validation(
                "Hilbert series requires homogeneous relations".into(),
            ));
        }
        let lms: Vec<Monomial> = self.relations_gb.leading_monomials();
        Ok(HilbertData::from_numerator(
            monomial_numerator(&lms),
            self.nvars(),
        ))
    }

    fn passes_cm_check(self: &Arc<Self>) -> Result<bool> {
        let n = self.nvars();
        // pairs of variables first, then random linear forms
        let mut candidates: Vec<(Polynomial, Polynomial)> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                candidates.push((self.ring.var(i), self.ring.var(j)));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(CM_CHECK_SEED);
        let p = self.characteristic();
        for _ in 0..CM_CHECK_ATTEMPTS {
            let mut form = || {
                self.ring.from_terms(
                    (0..n).map(|i| (Monomial::var_power(i, 1), rng.gen_range(1..p.max(2)))),
                )
            };
            let a = form();
            let b = form();
            candidates.push((a, b));
        }
        for (a, b) in candidates {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            if is_regular_sequence(self, &a, &b)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal_ideal(self: &Arc<Self>) -> Ideal {
        Ideal::maximal(self)
    }
}
