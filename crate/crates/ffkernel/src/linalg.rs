//! Dense exact linear algebra by Gaussian elimination.

use crate::field::Field;

pub type Mat<F> = Vec<Vec<F>>;

pub fn zeros<F: Field>(r: usize, c: usize) -> Mat<F> {
    vec![vec![F::zero(); c]; r]
}

pub fn identity<F: Field>(n: usize) -> Mat<F> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn mat_mul<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = zeros::<F>(n, m);
    for i in 0..n {
        for (l, bl) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !bl[j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][l].mul(&bl[j]));
                }
            }
        }
    }
    out
}

pub fn transpose<F: Field>(a: &Mat<F>) -> Mat<F> {
    if a.is_empty() {
        return vec![];
    }
    let (r, c) = (a.len(), a[0].len());
    (0..c).map(|j| (0..r).map(|i| a[i][j].clone()).collect()).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(m: &mut Mat<F>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero() {
                        let t = f.mul(&m[r][j]);
                        m[i][j] = m[i][j].sub(&t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Mat<F>) -> usize {
    let mut c = m.clone();
    rref(&mut c).len()
}

pub fn inverse<F: Field>(a: &Mat<F>) -> Option<Mat<F>> {
    let n = a.len();
    let mut aug: Mat<F> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    /// A particular solution plus the dimension of the solution space.
    Family(Vec<F>, usize),
    Inconsistent,
}

pub fn solve<F: Field>(a: &Mat<F>, b: &[F]) -> Solution<F> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Mat<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.last() == Some(&cols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    if piv.len() == cols {
        Solution::Unique(x)
    } else {
        Solution::Family(x, cols - piv.len())
    }
}

/// Basis of the right kernel.
pub fn nullspace<F: Field>(a: &Mat<F>) -> Vec<Vec<F>> {
    if a.is_empty() {
        return vec![];
    }
    let cols = a[0].len();
    let mut m = a.clone();
    let piv = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &c) in piv.iter().enumerate() {
                v[c] = m[r][f].neg();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Q;

    fn q(n: i64) -> Q {
        Q::int(n)
    }

    #[test]
    fn inverse_and_solve() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity::<Q>(2));
        assert_eq!(solve(&a, &[q(3), q(4)]), Solution::Unique(vec![q(1), q(1)]));
        let s = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(solve(&s, &[q(1), q(3)]), Solution::Inconsistent);
        assert!(matches!(solve(&s, &[q(1), q(2)]), Solution::Family(_, 1)));
        assert_eq!(nullspace(&s), vec![vec![q(-1), q(1)]]);
        assert!(inverse(&s).is_none());
    }
}
