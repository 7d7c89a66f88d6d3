//! Dense exact rational linear algebra: reduced row echelon form, kernels,
//! linear solves and determinants. Sized for structure-constant algebras of
//! dimension at most a few dozen; everything is `BigRational`, nothing is
//! approximated.

use crate::{rat, Rat};
use num::{One, Signed, Zero};

pub type Vector = Vec<Rat>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vector>,
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rat::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rat::one();
    v
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], c: &Rat) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_is_zero(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![zero_vec(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i][i] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        debug_assert!(rows.iter().all(|row| row.len() == c));
        Matrix { rows: r, cols: c, data: rows }
    }

    /// Columns of the matrix as vectors.
    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_rows(self.columns())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.data[k][j].is_zero() {
                        continue;
                    }
                    let t = &self.data[i][k] * &other.data[k][j];
                    out.data[i][j] += t;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rat]) -> Vector {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                let mut s = Rat::zero();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let mut s = Rat::zero();
        for i in 0..self.rows {
            s += &self.data[i][i];
        }
        s
    }

    /// In-place Gauss-Jordan. Returns the pivot column of each pivot row.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // partial pivot: first nonzero entry in column c at or below r
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].clone();
            for x in self.data[r].iter_mut() {
                *x = &*x / &inv;
            }
            for i in 0..self.rows {
                if i != r && !self.data[i][c].is_zero() {
                    let f = self.data[i][c].clone();
                    for j in 0..self.cols {
                        let t = &self.data[r][j] * &f;
                        self.data[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel { v : M v = 0 }.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = zero_vec(self.cols);
            v[f] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.data[row][f].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve M x = b; None when inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vector> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            aug.data[i][..self.cols].clone_from_slice(&self.data[i]);
            aug.data[i][self.cols] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in augmented column
        }
        let mut x = zero_vec(self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.data[row][self.cols].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix; None when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            aug.data[i][..n].clone_from_slice(&self.data[i]);
            aug.data[i][n + i] = Rat::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            inv.data[i].clone_from_slice(&aug.data[i][n..]);
        }
        Some(inv)
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = rat(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.data[i][c].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.data.swap(c, p);
                det = -det;
            }
            det *= &m.data[c][c];
            let inv = m.data[c][c].clone();
            for i in c + 1..n {
                if m.data[i][c].is_zero() {
                    continue;
                }
                let f = &m.data[i][c] / &inv;
                for j in c..n {
                    let t = &m.data[c][j] * &f;
                    m.data[i][j] -= t;
                }
            }
        }
        det
    }
}

/// Span-membership helper: a matrix whose rows are the spanning vectors, kept
/// in echelon form so repeated membership queries are cheap.
pub struct RowSpace {
    rref: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(vectors: &[Vector], ambient: usize) -> Self {
        let mut m = if vectors.is_empty() {
            Matrix::zero(0, ambient)
        } else {
            Matrix::from_rows(vectors.to_vec())
        };
        let pivots = m.rref();
        let rank = pivots.len();
        m.data.truncate(rank);
        m.rows = rank;
        RowSpace { rref: m, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates of v in the echelonized spanning set; None if v is outside.
    pub fn reduce(&self, v: &[Rat]) -> (Vector, Vector) {
        // returns (coords wrt rref rows, remainder)
        let mut rem = v.to_vec();
        let mut coords = zero_vec(self.rref.rows);
        for (row, &pc) in self.pivots.iter().enumerate() {
            if !rem[pc].is_zero() {
                let f = rem[pc].clone();
                for j in 0..rem.len() {
                    let t = &self.rref.data[row][j] * &f;
                    rem[j] -= t;
                }
                coords[row] = f;
            }
        }
        (coords, rem)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        vec_is_zero(&self.reduce(v).1)
    }
}

/// Fraction-free integer determinant (Bareiss), for fast unit scans.
/// Entries must be small enough that intermediate values fit in i128.
pub fn det_i128(m: &mut [Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Make an integer vector primitive (divide by the gcd, fix sign of the first
/// nonzero entry to be positive). Zero vectors are returned unchanged.
pub fn primitive_ivec(v: &[num::BigInt]) -> Vec<num::BigInt> {
    use num::Integer;
    let mut g = num::BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let mut out: Vec<num::BigInt> = v.iter().map(|x| x / &g).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in out.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        assert!(vec_is_zero(&a.apply(&ker[0])));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[rat(3), rat(2)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn det_matches_bareiss() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let mut b = vec![vec![2i128, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        assert_eq!(a.det(), rat(det_i128(&mut b) as i64));
    }

    #[test]
    fn rowspace_membership() {
        let rs = RowSpace::new(&[vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(1)]], 3);
        assert_eq!(rs.dim(), 2);
        assert!(rs.contains(&[rat(1), rat(2), rat(1)]));
        assert!(!rs.contains(&[rat(0), rat(0), rat(1)]));
    }
}
