//! Dense matrices over an exact scalar type (ℚ, ℤ or a cyclotomic field).

use super::cyc::Cyc;
use super::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

macro_rules! ring_matrix_impls {
    ($t:ty, $zero:expr, $one:expr) => {
        impl Mat<$t> {
            pub fn zero(rows: usize, cols: usize) -> Self {
                Mat { rows, cols, data: vec![$zero; rows * cols] }
            }

            pub fn identity(n: usize) -> Self {
                Mat::from_fn(n, n, |i, j| if i == j { $one } else { $zero })
            }

            pub fn matmul(&self, other: &Mat<$t>) -> Mat<$t> {
                assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
                let mut out = Mat::zero(self.rows, other.cols);
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let a = self.at(i, k).clone();
                        if a.is_zero() {
                            continue;
                        }
                        for j in 0..other.cols {
                            let t = &a * other.at(k, j);
                            let cur = out.at_mut(i, j);
                            *cur = &*cur + &t;
                        }
                    }
                }
                out
            }

            pub fn matvec(&self, v: &[$t]) -> Vec<$t> {
                assert_eq!(self.cols, v.len());
                (0..self.rows)
                    .map(|i| {
                        let mut acc = $zero;
                        for j in 0..self.cols {
                            acc = &acc + &(self.at(i, j) * &v[j]);
                        }
                        acc
                    })
                    .collect()
            }
        }
    };
}

ring_matrix_impls!(Rat, Rat::zero(), Rat::one());
ring_matrix_impls!(BigInt, BigInt::zero(), BigInt::one());

impl Mat<Cyc> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Cyc::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { Cyc::one() } else { Cyc::zero() })
    }

    pub fn matmul(&self, other: &Mat<Cyc>) -> Mat<Cyc> {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Mat::<Cyc>::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.at(k, j).is_zero() {
                        continue;
                    }
                    let t = a.mul(other.at(k, j));
                    let cur = out.at_mut(i, j);
                    *cur = cur.add(&t);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }
}

impl Mat<Rat> {
    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| Rat::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    /// Exact inverse; panics on singular input.
    pub fn inverse(&self) -> Mat<Rat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::<Rat>::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.at(r, col).is_zero()).expect("singular matrix");
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let p = a.at(col, col).clone();
            for j in 0..n {
                *a.at_mut(col, j) = &*a.at(col, j) / &p;
                *inv.at_mut(col, j) = &*inv.at(col, j) / &p;
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for j in 0..n {
                    let t1 = &f * a.at(col, j);
                    *a.at_mut(r, j) = &*a.at(r, j) - &t1;
                    let t2 = &f * inv.at(col, j);
                    *inv.at_mut(r, j) = &*inv.at(r, j) - &t2;
                }
            }
        }
        inv
    }

    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let piv = match (col..n).find(|&r| !a.at(r, col).is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if piv != col {
                a.swap_rows(col, piv);
                det = -det;
            }
            let p = a.at(col, col).clone();
            det *= &p;
            for r in (col + 1)..n {
                if a.at(r, col).is_zero() {
                    continue;
                }
                let f = &*a.at(r, col) / &p;
                for j in col..n {
                    let t = &f * a.at(col, j);
                    *a.at_mut(r, j) = &*a.at(r, j) - &t;
                }
            }
        }
        det
    }

    /// Signature (n₊ − n₋) of a symmetric nonsingular matrix, by symmetric
    /// Gaussian reduction.  When every remaining diagonal entry vanishes,
    /// a hyperbolic pair e_i ± e_j is substituted first (it has diagonal
    /// entries ±2·a_ij), then the diagonal loop continues.
    pub fn symmetric_signature(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut sig: i64 = 0;
        let mut cols: Vec<usize> = (0..n).collect();
        while !cols.is_empty() {
            if let Some(pos) = cols.iter().position(|&i| !a.at(i, i).is_zero()) {
                let i = cols.remove(pos);
                let p = a.at(i, i).clone();
                sig += if p.is_positive() { 1 } else { -1 };
                for &r in &cols {
                    if a.at(r, i).is_zero() {
                        continue;
                    }
                    let f = &*a.at(r, i) / &p;
                    for &c in &cols {
                        let t = &f * a.at(i, c);
                        *a.at_mut(r, c) = &*a.at(r, c) - &t;
                    }
                }
                continue;
            }
            // zero diagonal everywhere: pick a_ij ≠ 0 and change basis to
            // e_i + e_j, e_i - e_j
            let mut found = None;
            'outer: for (pi, &i) in cols.iter().enumerate() {
                for &j in cols.iter().skip(pi + 1) {
                    if !a.at(i, j).is_zero() {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let (i, j) = found.expect("degenerate symmetric matrix");
            // rows/cols i, j ← i+j, i-j (symmetric congruence)
            for c in 0..n {
                let ri = a.at(i, c).clone();
                let rj = a.at(j, c).clone();
                *a.at_mut(i, c) = &ri + &rj;
                *a.at_mut(j, c) = &ri - &rj;
            }
            for r in 0..n {
                let ci = a.at(r, i).clone();
                let cj = a.at(r, j).clone();
                *a.at_mut(r, i) = &ci + &cj;
                *a.at_mut(r, j) = &ci - &cj;
            }
        }
        sig
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat::rat_int;

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_i64(vec![vec![2, 1], vec![7, 4]]);
        let inv = m.inverse();
        assert_eq!(m.matmul(&inv), Mat::<Rat>::identity(2));
    }

    #[test]
    fn determinant_values() {
        let m = Mat::from_i64(vec![vec![2, 1], vec![7, 4]]);
        assert_eq!(m.determinant(), rat_int(1));
        let a4 = Mat::from_i64(vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ]);
        assert_eq!(a4.determinant(), rat_int(5));
    }

    #[test]
    fn signatures() {
        let m = Mat::from_i64(vec![vec![2, 0], vec![0, -3]]);
        assert_eq!(m.symmetric_signature(), 0);
        let h = Mat::from_i64(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(h.symmetric_signature(), 0);
        let e = Mat::from_i64(vec![vec![2, 1], vec![1, 2]]);
        assert_eq!(e.symmetric_signature(), 2);
        let mixed = Mat::from_i64(vec![vec![0, 2, 0], vec![2, 0, 0], vec![0, 0, -2]]);
        assert_eq!(mixed.symmetric_signature(), -1);
    }
}
