//! Hilbert series of standard graded quotients `S/L`.

use serde::Serialize;

use crate::monomial::Monomial;

/// Hilbert series `N(t) / (1 - t)^dim` in lowest terms. `e_i` is the i-th
/// derivative of `N` at 1 divided by `i!`; in dimension 2 the Samuel
/// polynomial is `P(n) = e*C(n+1, 2) - e1*n + e2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub numerator: Vec<i64>,
    pub dimension: usize,
    pub e: i64,
    pub e1: i64,
    pub e2: i64,
}

impl HilbertData {
    /// Builds the reduced form from the unreduced numerator over `(1-t)^nvars`.
    pub fn from_numerator(mut numerator: Vec<i64>, nvars: usize) -> Self {
        let mut dimension = nvars;
        trim_zeros(&mut numerator);
        while dimension > 0 && !numerator.is_empty() && numerator.iter().sum::<i64>() == 0 {
            numerator = divide_by_one_minus_t(&numerator);
            dimension -= 1;
        }
        let deriv = |k: u32| -> i64 {
            // k-th derivative at 1 divided by k!
            numerator
                .iter()
                .enumerate()
                .map(|(i, &c)| c * binomial(i as i64, k as i64))
                .sum()
        };
        HilbertData {
            e: deriv(0),
            e1: deriv(1),
            e2: deriv(2),
            numerator,
            dimension,
        }
    }

    /// `dim_k [S/L]_n`, from the series expansion.
    pub fn hilbert_function(&self, n: usize) -> i64 {
        // coefficient of t^n in N(t)/(1-t)^d is sum_i N_i * C(n - i + d - 1, d - 1)
        let d = self.dimension as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(i, _)| i <= n)
            .map(|(i, &c)| {
                if d == 0 {
                    if i == n {
                        c
                    } else {
                        0
                    }
                } else {
                    c * binomial(n as i64 - i as i64 + d - 1, d - 1)
                }
            })
            .sum()
    }

    /// `λ(S/(L + m^n)) = sum_{i<n} H(i)`.
    pub fn samuel_function(&self, n: usize) -> i64 {
        (0..n).map(|i| self.hilbert_function(i)).sum()
    }
}

fn trim_zeros(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn divide_by_one_minus_t(n: &[i64]) -> Vec<i64> {
    // n(t) = (1 - t) q(t)  =>  q_i = sum_{j<=i} n_j
    let mut q = Vec::with_capacity(n.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &n[..n.len() - 1] {
        acc += c;
        q.push(acc);
    }
    debug_assert_eq!(acc + n[n.len() - 1], 0);
    trim_zeros(&mut q);
    q
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Unreduced Hilbert series numerator of `S / (gens)` for a monomial ideal,
/// i.e. `K(t)` with `H(S/M, t) = K(t) / (1-t)^n`.
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut minimal = minimalize(gens.to_vec());
    minimal.sort_by_key(|m| std::cmp::Reverse(m.degree()));
    numerator_rec(&minimal)
}

fn minimalize(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by_key(|m| m.degree());
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator_rec(gens: &[Monomial]) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens
        .iter()
        .all(|m| gens.iter().all(|o| std::ptr::eq(m, o) || m.is_coprime(o)))
    {
        // pairwise coprime: product of (1 - t^{deg})
        let mut acc = vec![1i64];
        for g in gens {
            acc = poly_mul_one_minus_tk(&acc, g.degree() as usize);
        }
        return acc;
    }
    // K(M) = K(M') - t^{deg m} K(M' : m)
    let (m, rest) = gens.split_last().unwrap();
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| {
            let l = g.lcm(m);
            m.quotient_of(&l)
        })
        .collect();
    let a = numerator_rec(rest);
    let mut b = numerator_rec(&minimalize(colon));
    let shift = m.degree() as usize;
    let mut out = a;
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (i, c) in b.drain(..).enumerate() {
        out[i + shift] -= c;
    }
    trim_zeros(&mut out);
    out
}

fn poly_mul_one_minus_tk(p: &[i64], k: usize) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + k];
    for (i, &c) in p.iter().enumerate() {
        out[i] += c;
        out[i + k] -= c;
    }
    trim_zeros(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn polynomial_ring() {
        let h = HilbertData::from_numerator(monomial_numerator(&[]), 2);
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.dimension, 2);
        assert_eq!((h.e, h.e1, h.e2), (1, 0, 0));
    }

    #[test]
    fn non_cohen_macaulay_example() {
        // S/(x^2, xy) in k[x,y,z]
        let h = HilbertData::from_numerator(monomial_numerator(&[m(&[2, 0, 0]), m(&[1, 1, 0])]), 3);
        assert_eq!(h.numerator, vec![1, 1, -1]);
        assert_eq!(h.dimension, 2);
        assert_eq!((h.e, h.e1, h.e2), (1, -1, -1));
        // λ(R/m^n) = C(n+1,2) + n - 1 for n >= 1
        for n in 1..8i64 {
            assert_eq!(h.samuel_function(n as usize), binomial(n + 1, 2) + n - 1);
        }
    }

    #[test]
    fn artinian() {
        // k[x,y]/(x^2, y^3): 1 + 2t + 2t^2 + t^3
        let h = HilbertData::from_numerator(monomial_numerator(&[m(&[2, 0]), m(&[0, 3])]), 2);
        assert_eq!(h.dimension, 0);
        assert_eq!(h.numerator, vec![1, 2, 2, 1]);
        assert_eq!(h.e, 6);
        assert_eq!(h.hilbert_function(2), 2);
        assert_eq!(h.hilbert_function(5), 0);
    }
}
