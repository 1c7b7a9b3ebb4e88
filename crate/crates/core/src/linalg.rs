//! Dense linear algebra: kernels over `F_p` and exact rational solves.

use num_rational::Ratio;

use crate::field::PrimeField;

/// Basis of the right kernel `{v : M v = 0}` of a `rows x cols` matrix over
/// `F_p`, given row-major. Each basis vector has a 1 in one free column and
/// zeros in the other free columns.
pub fn kernel_mod_p(field: &PrimeField, mut m: Vec<Vec<u32>>, cols: usize) -> Vec<Vec<u32>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        let inv = field.inv(m[row][col]);
        for v in m[row].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col] == 0 {
                continue;
            }
            let f = other[col];
            for (c, v) in other.iter_mut().enumerate().skip(col) {
                *v = field.sub(*v, field.mul(f, pivot_row[c]));
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(m[r][free]);
            }
            v
        })
        .collect()
}

/// Solves the square system `A x = b` exactly; `None` when singular.
pub fn solve_rational(a: &[Vec<i128>], b: &[i128]) -> Option<Vec<Ratio<i128>>> {
    let n = b.len();
    let mut m: Vec<Vec<Ratio<i128>>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r: Vec<Ratio<i128>> = row.iter().map(|&v| Ratio::from_integer(v)).collect();
            r.push(Ratio::from_integer(rhs));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| m[r][col] != Ratio::from_integer(0))?;
        m.swap(col, p);
        let piv = m[col][col];
        for v in m[col].iter_mut() {
            *v /= piv;
        }
        let prow = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col {
                continue;
            }
            let f = row[col];
            if f == Ratio::from_integer(0) {
                continue;
            }
            for (c, v) in row.iter_mut().enumerate() {
                *v -= f * prow[c];
            }
        }
    }
    Some(m.into_iter().map(|r| r[n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let f = PrimeField::new(7).unwrap();
        // [1 2 3] -> kernel of dim 2
        let k = kernel_mod_p(&f, vec![vec![1, 2, 3]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = (v[0] as u64 + 2 * v[1] as u64 + 3 * v[2] as u64) % 7;
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn kernel_full_rank_and_empty_rows() {
        let f = PrimeField::new(32003).unwrap();
        assert!(kernel_mod_p(&f, vec![vec![1, 0], vec![0, 5]], 2).is_empty());
        assert_eq!(kernel_mod_p(&f, vec![], 3).len(), 3);
    }

    #[test]
    fn rational_solve() {
        let a = vec![vec![2, 1], vec![1, 3]];
        let x = solve_rational(&a, &[3, 5]).unwrap();
        assert_eq!(x, vec![Ratio::new(4, 5), Ratio::new(7, 5)]);
        assert!(solve_rational(&[vec![1, 2], vec![2, 4]], &[1, 2]).is_none());
    }
}
