//! Standard monomials of a monomial ideal.

use crate::monomial::Monomial;

/// Number of monomials in `nvars` variables divisible by none of `gens`,
/// or `None` when that set is infinite.
pub fn count_standard(gens: &[Monomial], nvars: usize) -> Option<u64> {
    let bounds = pure_power_bounds(gens, nvars)?;
    let mut count = 0u64;
    let mut cur = Monomial::ONE;
    walk(gens, nvars, &bounds, &mut cur, 0, &mut |_| count += 1);
    Some(count)
}

/// All standard monomials (finite case only), in no particular order.
pub fn standard_monomials(gens: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    let bounds = pure_power_bounds(gens, nvars)?;
    let mut out = Vec::new();
    let mut cur = Monomial::ONE;
    walk(gens, nvars, &bounds, &mut cur, 0, &mut |m| out.push(m));
    Some(out)
}

/// For each variable, the smallest `a` with `x_i^a` among the generators.
fn pure_power_bounds(gens: &[Monomial], nvars: usize) -> Option<Vec<u16>> {
    if gens.iter().any(Monomial::is_one) {
        return Some(vec![0; nvars]);
    }
    (0..nvars)
        .map(|i| {
            gens.iter()
                .filter(|g| g.degree() == g.exponent(i) as u32)
                .map(|g| g.exponent(i))
                .min()
        })
        .collect()
}

fn walk(
    gens: &[Monomial],
    nvars: usize,
    bounds: &[u16],
    cur: &mut Monomial,
    var: usize,
    visit: &mut impl FnMut(Monomial),
) {
    if bounds.contains(&0) {
        return;
    }
    if var == nvars {
        visit(*cur);
        return;
    }
    let base = *cur;
    for e in 0..bounds[var] {
        let m = base.mul(&Monomial::var_power(var, e));
        // divisibility is upward closed in each exponent
        if gens.iter().any(|g| g.divides(&m)) {
            break;
        }
        *cur = m;
        walk(gens, nvars, bounds, cur, var + 1, visit);
    }
    *cur = base;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn square_of_maximal_ideal() {
        let g = [m(&[2, 0]), m(&[1, 1]), m(&[0, 2])];
        assert_eq!(count_standard(&g, 2), Some(3));
    }

    #[test]
    fn infinite_and_unit() {
        assert_eq!(count_standard(&[m(&[1, 0])], 2), None);
        assert_eq!(count_standard(&[Monomial::ONE], 2), Some(0));
        assert_eq!(count_standard(&[], 1), None);
    }

    #[test]
    fn three_variables() {
        // (x^2, xy, y^2, z) -> 1, x, y
        let g = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 1])];
        assert_eq!(count_standard(&g, 3), Some(3));
        let mut s = standard_monomials(&g, 3).unwrap();
        s.sort_by_key(|x| (x.degree(), x.exponent(0)));
        assert_eq!(s, vec![m(&[0, 0, 0]), m(&[0, 1, 0]), m(&[1, 0, 0])]);
    }
}
