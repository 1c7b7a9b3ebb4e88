//! Bhattacharya functions, Ratliff-Rush closures of `I^r J^s`, and the
//! lengths `h^1`, `h^2` of bigraded local cohomology of the Rees algebra.

use std::collections::HashMap;
use std::sync::Mutex;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::binomial;
use crate::ideal::Ideal;
use crate::linalg::solve_rational;
use crate::poly::Polynomial;
use crate::reductions::CompleteReduction;

pub const DEFAULT_GRID: u32 = 6;
pub const DEFAULT_K_MAX: u32 = 16;
/// Consecutive equal values that end every stabilization loop.
const STABLE_RUN: usize = 3;

/// `B[r][s] = λ(R/I^r J^s)` for `0 ≤ r, s ≤ grid`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BhattTable {
    pub grid: u32,
    pub values: Vec<Vec<u64>>,
}

impl BhattTable {
    pub fn get(&self, r: u32, s: u32) -> u64 {
        self.values[r as usize][s as usize]
    }
}

/// `P(r,s) = Σ e_ij C(r,i) C(s,j)` over `i + j ≤ 2`, agreeing with the
/// table on `[region_offset, grid]^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BhattPolynomial {
    pub e00: i64,
    pub e10: i64,
    pub e01: i64,
    pub e20: i64,
    pub e11: i64,
    pub e02: i64,
    pub region_offset: u32,
}

impl BhattPolynomial {
    pub fn eval(&self, r: u32, s: u32) -> i64 {
        let (r, s) = (r as i64, s as i64);
        self.e00
            + self.e10 * r
            + self.e01 * s
            + self.e20 * binomial(r, 2)
            + self.e11 * r * s
            + self.e02 * binomial(s, 2)
    }

    /// `(e20, e11, e02, e10, e01, e00)`.
    pub fn coefficients(&self) -> [i64; 6] {
        [self.e20, self.e11, self.e02, self.e10, self.e01, self.e00]
    }
}

/// The stable member of the chain `I^{a+k} J^{b+k} : z^{[k]}`.
#[derive(Clone, Debug)]
pub struct RRClosure {
    pub a: u32,
    pub b: u32,
    pub ideal: Ideal,
    pub colength: u64,
    pub k_stab: u32,
    pub is_closed: bool,
}

/// A value computed from a formula proven only for Cohen-Macaulay rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Marked {
    pub value: i64,
    pub formula_unproven: bool,
}

/// Stable value of the direct system together with the sequence seen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectLimit {
    pub value: i64,
    pub k_stab: u32,
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyCell {
    pub r: u32,
    pub s: u32,
    pub b: u64,
    pub p: i64,
    pub rr_colength: u64,
    pub h1: i64,
    pub h2_formula: i64,
    pub h2_limit: i64,
    pub h2_k_stab: u32,
    /// `(P - B) - (h2 - h1)` with `h2` from the direct limit.
    pub euler_residual: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub grid: u32,
    pub formulas_unproven: bool,
    pub cells: Vec<CohomologyCell>,
}

impl CohomologyReport {
    pub fn cell(&self, r: u32, s: u32) -> Option<&CohomologyCell> {
        self.cells.iter().find(|c| c.r == r && c.s == s)
    }

    pub fn max_abs_residual(&self) -> i64 {
        self.cells
            .iter()
            .map(|c| c.euler_residual.abs())
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyCoefficients {
    pub e00: i64,
    pub e10: i64,
    pub e01: i64,
    pub e20: i64,
    pub e02: i64,
}

type ClosureKey = (u32, u32, Polynomial, Polynomial);

/// A pair `(I, J)` with memoized products `I^r J^s` and closures.
pub struct Bigraded {
    i: Ideal,
    j: Ideal,
    powers: Mutex<HashMap<(u32, u32), Ideal>>,
    closures: Mutex<HashMap<ClosureKey, RRClosure>>,
}

impl Bigraded {
    pub fn new(i: &Ideal, j: &Ideal) -> Result<Self> {
        if !std::sync::Arc::ptr_eq(i.context(), j.context()) {
            return Err(Error::ContextMismatch);
        }
        Ok(Bigraded {
            i: i.clone(),
            j: j.clone(),
            powers: Mutex::new(HashMap::new()),
            closures: Mutex::new(HashMap::new()),
        })
    }

    pub fn i(&self) -> &Ideal {
        &self.i
    }

    pub fn j(&self) -> &Ideal {
        &self.j
    }

    fn require_m_primary(&self) -> Result<()> {
        for (name, a) in [("I", &self.i), ("J", &self.j)] {
            if !a.is_m_primary() {
                return Err(Error::NotMPrimary(format!("{name} = {a}")));
            }
        }
        Ok(())
    }

    /// `I^r J^s`.
    pub fn power(&self, r: u32, s: u32) -> Ideal {
        if let Some(p) = self.powers.lock().unwrap().get(&(r, s)) {
            return p.clone();
        }
        let p = if r == 0 && s == 0 {
            Ideal::unit(self.i.context())
        } else if r >= s {
            self.power(r - 1, s).product(&self.i).expect("same context")
        } else {
            self.power(r, s - 1).product(&self.j).expect("same context")
        };
        self.powers
            .lock()
            .unwrap()
            .entry((r, s))
            .or_insert(p)
            .clone()
    }

    fn colength_of(&self, r: u32, s: u32) -> u64 {
        self.power(r, s)
            .colength()
            .expect("powers of m-primary ideals have finite colength")
    }

    pub fn table(&self, grid: u32) -> Result<BhattTable> {
        self.require_m_primary()?;
        // fill diagonals first so that the memo is shared between cells
        let cells: Vec<(u32, u32)> = (0..=grid)
            .flat_map(|r| (0..=grid).map(move |s| (r, s)))
            .collect();
        for d in 0..=2 * grid {
            cells
                .par_iter()
                .filter(|(r, s)| r + s == d)
                .for_each(|&(r, s)| {
                    self.colength_of(r, s);
                });
        }
        let values = (0..=grid)
            .map(|r| (0..=grid).map(|s| self.colength_of(r, s)).collect())
            .collect();
        Ok(BhattTable { grid, values })
    }

    pub fn fit(&self, grid: u32) -> Result<BhattPolynomial> {
        fit_bhattacharya(&self.table(grid)?)
    }

    /// Closure of `I^a J^b` via the colons `I^{a+k} J^{b+k} : (z1^k, z2^k)`.
    pub fn rr_closure(
        &self,
        a: u32,
        b: u32,
        cr: &CompleteReduction,
        k_max: u32,
    ) -> Result<RRClosure> {
        let key = (a, b, cr.z1.clone(), cr.z2.clone());
        if let Some(c) = self.closures.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let ring = self.i.ring();
        let c = self.stable_colon(a, b, k_max, |k| {
            let z = Ideal::new(
                self.i.context(),
                vec![ring.pow(&cr.z1, k), ring.pow(&cr.z2, k)],
            );
            self.power(a + k, b + k).colon(&z)
        })?;
        self.closures.lock().unwrap().insert(key, c.clone());
        Ok(c)
    }

    /// Closure of `I^a J^b` via the colons `I^{a+k} J^{b+k} : I^k J^k`.
    pub fn rr_closure_by_products(&self, a: u32, b: u32, k_max: u32) -> Result<RRClosure> {
        self.stable_colon(a, b, k_max, |k| {
            self.power(a + k, b + k).colon(&self.power(k, k))
        })
    }

    fn stable_colon(
        &self,
        a: u32,
        b: u32,
        k_max: u32,
        step: impl Fn(u32) -> Result<Ideal>,
    ) -> Result<RRClosure> {
        self.require_m_primary()?;
        let base = self.power(a, b);
        let base_len = base.colength().expect("finite");
        if a == 0 && b == 0 {
            return Ok(RRClosure {
                a,
                b,
                ideal: base,
                colength: 0,
                k_stab: 0,
                is_closed: true,
            });
        }
        let mut prev = base.clone();
        let mut run = 0;
        for k in 1..=k_max {
            let cur = step(k)?;
            if !cur.contains_ideal(&prev)? {
                return Err(Error::Inconsistency(format!(
                    "colon chain for ({a},{b}) is not ascending at k = {k}"
                )));
            }
            if k > 1 && cur.colength() == prev.colength() {
                run += 1;
            } else {
                run = 1;
            }
            prev = cur;
            if run == STABLE_RUN {
                let colength = prev.colength().expect("finite");
                let k_stab = k + 1 - STABLE_RUN as u32;
                return Ok(RRClosure {
                    a,
                    b,
                    is_closed: colength == base_len,
                    ideal: prev,
                    colength,
                    k_stab,
                });
            }
        }
        Err(Error::StabilizationExceeded {
            what: format!("Ratliff-Rush colon chain for I^{a}J^{b}"),
            bound: k_max as usize,
        })
    }

    fn cm_gate(&self, force: bool, what: &str) -> Result<bool> {
        let unproven = !self.i.context().cm_declared();
        if unproven && !force {
            return Err(Error::RequiresCohenMacaulay(format!(
                "{what} is proven only for Cohen-Macaulay rings; pass force to evaluate anyway"
            )));
        }
        Ok(unproven)
    }

    fn h1_raw(&self, r: u32, s: u32, cr: &CompleteReduction, k_max: u32) -> Result<i64> {
        let closure = self.rr_closure(r, s, cr, k_max)?;
        Ok(self.colength_of(r, s) as i64 - closure.colength as i64)
    }

    /// `λ(closure / I^r J^s)`.
    pub fn h1(
        &self,
        r: u32,
        s: u32,
        cr: &CompleteReduction,
        k_max: u32,
        force: bool,
    ) -> Result<Marked> {
        let unproven = self.cm_gate(force, "h1 as a closure length")?;
        Ok(Marked {
            value: self.h1_raw(r, s, cr, k_max)?,
            formula_unproven: unproven,
        })
    }

    fn h2_formula_raw(
        &self,
        r: u32,
        s: u32,
        poly: &BhattPolynomial,
        cr: &CompleteReduction,
        k_max: u32,
    ) -> Result<i64> {
        let closure = self.rr_closure(r, s, cr, k_max)?;
        Ok(poly.eval(r, s) - closure.colength as i64)
    }

    /// `P(r,s) - λ(R / closure of I^r J^s)`.
    pub fn h2_formula(
        &self,
        r: u32,
        s: u32,
        poly: &BhattPolynomial,
        cr: &CompleteReduction,
        k_max: u32,
        force: bool,
    ) -> Result<Marked> {
        let unproven = self.cm_gate(force, "the closed formula for h2")?;
        let value = self.h2_formula_raw(r, s, poly, cr, k_max)?;
        if !unproven && value < 0 {
            return Err(Error::Inconsistency(format!(
                "h2({r},{s}) = {value} is negative"
            )));
        }
        Ok(Marked {
            value,
            formula_unproven: unproven,
        })
    }

    /// `λ(I^{2k+r} J^{2k+s} / (z1^k, z2^k) I^{k+r} J^{k+s})` for large `k`.
    pub fn h2_direct_limit(
        &self,
        r: u32,
        s: u32,
        cr: &CompleteReduction,
        k_max: u32,
    ) -> Result<DirectLimit> {
        self.require_m_primary()?;
        let ring = self.i.ring();
        let mut values: Vec<i64> = Vec::new();
        for k in 1..=k_max {
            let top = self.power(2 * k + r, 2 * k + s);
            let d = self
                .power(k + r, k + s)
                .times_elements(&[ring.pow(&cr.z1, k), ring.pow(&cr.z2, k)]);
            if !top.contains_ideal(&d)? {
                return Err(Error::Inconsistency(format!(
                    "D_{k} is not inside I^(2k+r)J^(2k+s)"
                )));
            }
            let top_len = top.colength().expect("finite") as i64;
            values.push(local_colength_below(&d, &top)? as i64 - top_len);
            let n = values.len();
            if n >= STABLE_RUN && values[n - STABLE_RUN..].iter().all(|&v| v == values[n - 1]) {
                return Ok(DirectLimit {
                    value: values[n - 1],
                    k_stab: k + 1 - STABLE_RUN as u32,
                    values,
                });
            }
        }
        Err(Error::StabilizationExceeded {
            what: format!("direct limit for h2({r},{s})"),
            bound: k_max as usize,
        })
    }

    /// Every quantity of the Euler identity on `[0, grid]^2`.
    pub fn euler_check(
        &self,
        grid: u32,
        poly: &BhattPolynomial,
        cr: &CompleteReduction,
        k_max: u32,
    ) -> Result<CohomologyReport> {
        self.require_m_primary()?;
        let cells: Vec<(u32, u32)> = (0..=grid)
            .flat_map(|r| (0..=grid).map(move |s| (r, s)))
            .collect();
        let cells = cells
            .par_iter()
            .map(|&(r, s)| {
                let b = self.colength_of(r, s);
                let p = poly.eval(r, s);
                let closure = self.rr_closure(r, s, cr, k_max)?;
                let h1 = b as i64 - closure.colength as i64;
                let h2_formula = p - closure.colength as i64;
                let limit = self.h2_direct_limit(r, s, cr, k_max)?;
                Ok(CohomologyCell {
                    r,
                    s,
                    b,
                    p,
                    rr_colength: closure.colength,
                    h1,
                    h2_formula,
                    h2_limit: limit.value,
                    h2_k_stab: limit.k_stab,
                    euler_residual: (p - b as i64) - (limit.value - h1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CohomologyReport {
            grid,
            formulas_unproven: !self.i.context().cm_declared(),
            cells,
        })
    }
}

/// Local colength of `d ⊆ top`, with `top` m-primary.
fn local_colength_below(d: &Ideal, top: &Ideal) -> Result<u64> {
    if d.is_m_primary() {
        return Ok(d.colength().expect("finite"));
    }
    // d agrees with top near the origin up to m^N for N past top's nilpotency
    let start = top.nilpotency_degree().expect("m-primary") + 1;
    d.local_colength_from(start, 4 * start as usize + 16)
}

pub fn bhattacharya_table(i: &Ideal, j: &Ideal, grid: u32) -> Result<BhattTable> {
    Bigraded::new(i, j)?.table(grid)
}

/// Exact fit: for each offset `c` solve on six cells near `(c,c)` and keep
/// the first solution that matches the whole square `[c, grid]^2`.
pub fn fit_bhattacharya(table: &BhattTable) -> Result<BhattPolynomial> {
    let g = table.grid;
    if g < 3 {
        return Err(Error::Validation(format!(
            "grid {g} is too small to fit a quadratic"
        )));
    }
    for c in 0..=g - 3 {
        let cells = [
            (c, c),
            (c + 1, c),
            (c, c + 1),
            (c + 2, c),
            (c + 1, c + 1),
            (c, c + 2),
        ];
        let rows: Vec<Vec<i128>> = cells.iter().map(|&(r, s)| basis_row(r, s)).collect();
        let rhs: Vec<i128> = cells
            .iter()
            .map(|&(r, s)| table.get(r, s) as i128)
            .collect();
        let Some(sol) = solve_rational(&rows, &rhs) else {
            continue;
        };
        if !sol.iter().all(Ratio::is_integer) {
            continue;
        }
        let e: Vec<i64> = sol.iter().map(|x| x.to_integer() as i64).collect();
        let poly = BhattPolynomial {
            e00: e[0],
            e10: e[1],
            e01: e[2],
            e20: e[3],
            e11: e[4],
            e02: e[5],
            region_offset: c,
        };
        let agrees = (c..=g).all(|r| (c..=g).all(|s| poly.eval(r, s) == table.get(r, s) as i64));
        if agrees {
            return Ok(poly);
        }
    }
    Err(Error::StabilizationExceeded {
        what: format!("no offset c ≤ {} where the table is polynomial", g - 3),
        bound: g as usize,
    })
}

fn basis_row(r: u32, s: u32) -> Vec<i128> {
    let (r, s) = (r as i64, s as i64);
    [1, r, s, binomial(r, 2), r * s, binomial(s, 2)]
        .iter()
        .map(|&v| v as i128)
        .collect()
}

/// Independent fit from finite differences at `(c, c)` with `c = grid - 2`.
pub fn fit_by_differences(table: &BhattTable) -> Option<BhattPolynomial> {
    let g = table.grid;
    if g < 2 {
        return None;
    }
    let c = g - 2;
    let b = |r: u32, s: u32| table.get(r, s) as i64;
    let e20 = b(c + 2, c) - 2 * b(c + 1, c) + b(c, c);
    let e02 = b(c, c + 2) - 2 * b(c, c + 1) + b(c, c);
    let e11 = b(c + 1, c + 1) - b(c + 1, c) - b(c, c + 1) + b(c, c);
    let ci = c as i64;
    let e10 = b(c + 1, c) - b(c, c) - e20 * ci - e11 * ci;
    let e01 = b(c, c + 1) - b(c, c) - e02 * ci - e11 * ci;
    let e00 = b(c, c)
        - e10 * ci
        - e01 * ci
        - e20 * binomial(ci, 2)
        - e11 * ci * ci
        - e02 * binomial(ci, 2);
    Some(BhattPolynomial {
        e00,
        e10,
        e01,
        e20,
        e11,
        e02,
        region_offset: c,
    })
}

/// The coefficient formulas read off `h^2` and the closure colengths along
/// the axes. Needs the cells `(0,0), (1,0), (0,1), (2,0), (0,2)`.
pub fn coefficients_via_cohomology(report: &CohomologyReport) -> Result<CohomologyCoefficients> {
    let cell = |r, s| {
        report.cell(r, s).ok_or_else(|| {
            Error::Validation(format!(
                "report lacks cell ({r},{s}); grid must be at least 2"
            ))
        })
    };
    let h2 = |r, s| cell(r, s).map(|c| c.h2_limit);
    let rr = |r, s| cell(r, s).map(|c| c.rr_colength as i64);
    let e00 = h2(0, 0)?;
    let e10 = h2(1, 0)? - h2(0, 0)? + rr(1, 0)?;
    let e01 = h2(0, 1)? - h2(0, 0)? + rr(0, 1)?;
    let e20 = h2(2, 0)? - 2 * h2(1, 0)? + h2(0, 0)? - 2 * rr(1, 0)? + rr(2, 0)?;
    let e02 = h2(0, 2)? - 2 * h2(0, 1)? + h2(0, 0)? - 2 * rr(0, 1)? + rr(0, 2)?;
    Ok(CohomologyCoefficients {
        e00,
        e10,
        e01,
        e20,
        e02,
    })
}
