//! Exact Gaussian elimination over ℚ(t).

use crate::scalars::Scalar;

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// A solution; `free` lists unknowns that were unconstrained and set to 0.
    Solved {
        x: Vec<Scalar>,
        free: Vec<usize>,
    },
    Inconsistent,
}

/// Row-reduces the augmented matrix `[A | b]` and back-substitutes.
#[allow(clippy::needless_range_loop)]
pub fn solve(mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> LinearSolution {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // prefer the sparsest nonzero pivot to limit expression swell
        let Some(p) = (r..rows).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].size()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                if !a[r][j].is_zero() {
                    a[i][j] = &a[i][j] - &(&f * &a[r][j]);
                }
            }
            b[i] = &b[i] - &(&f * &b[r]);
        }
        pivot_cols.push(c);
        r += 1;
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = b[i].clone();
    }
    let free = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    LinearSolution::Solved { x, free }
}

/// Determinant by elimination with row swaps.
#[allow(clippy::needless_range_loop)]
pub fn determinant(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].inv().expect("pivot is nonzero");
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                if !m[c][j].is_zero() {
                    m[i][j] = &m[i][j] - &(&f * &m[c][j]);
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn solves_two_by_two_over_function_field() {
        // x + y = 1, -x - q^-2 y = 0
        let q2 = Scalar::t_pow(-2);
        let a = vec![vec![s(1), s(1)], vec![s(-1), -q2]];
        let LinearSolution::Solved { x, free } = solve(a, vec![s(1), s(0)]) else {
            panic!("expected a solution");
        };
        assert!(free.is_empty());
        let expected_x = (Scalar::one() - Scalar::t_pow(2)).inv().unwrap();
        assert_eq!(x[0], expected_x);
        assert_eq!(x[1], -Scalar::t_pow(2) * expected_x);
    }

    #[test]
    fn detects_inconsistency_and_free_unknowns() {
        let a = vec![vec![s(1), s(1)], vec![s(2), s(2)]];
        assert_eq!(solve(a.clone(), vec![s(1), s(3)]), LinearSolution::Inconsistent);
        let LinearSolution::Solved { x, free } = solve(a, vec![s(1), s(2)]) else {
            panic!("expected a solution");
        };
        assert_eq!(free, vec![1]);
        assert_eq!(x, vec![s(1), s(0)]);
    }

    #[test]
    fn determinant_with_row_swap() {
        let m = vec![vec![s(0), s(1)], vec![s(1), s(0)]];
        assert_eq!(determinant(m), s(-1));
    }
}
