//! Small dense rational matrices.

use crate::rat::{self, Q};
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Q>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            a: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.a[i * n + i] = Q::one();
        }
        m
    }

    pub fn scalar(n: usize, x: &Q) -> Mat {
        Mat::identity(n).scale(x)
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            a: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat::q(x)).collect())
                .collect(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.a[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn scale(&self, k: &Q) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|x| x * k).collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn commutator(&self, o: &Mat) -> Mat {
        &(self * o) - &(o * self)
    }

    pub fn anticommutator(&self, o: &Mat) -> Mat {
        &(self * o) + &(o * self)
    }

    pub fn pow(&self, k: u32) -> Mat {
        let mut r = Mat::identity(self.rows);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Largest absolute entry (0 for the empty matrix).
    pub fn max_abs(&self) -> Q {
        self.a.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    /// Sub-block with rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        let mut m = Mat::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        m
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.a.swap(piv * n + j, col * n + j);
                    inv.a.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                let x = a.get(col, j) / &p;
                a.set(col, j, x);
                let y = inv.get(col, j) / &p;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| rat::to_f64(self.get(i, j)))
                    .collect()
            })
            .collect()
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        let mut m = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let y = o.get(k, j);
                    if !y.is_zero() {
                        m.a[i * o.cols + j] += x * y;
                    }
                }
            }
        }
        m
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.scale(&-Q::one())
    }
}

impl Add for Mat {
    type Output = Mat;
    fn add(self, o: Mat) -> Mat {
        &self + &o
    }
}

impl Sub for Mat {
    type Output = Mat;
    fn sub(self, o: Mat) -> Mat {
        &self - &o
    }
}

impl Mul for Mat {
    type Output = Mat;
    fn mul(self, o: Mat) -> Mat {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_commutator() {
        let a = Mat::from_ints(&[&[0, 1], &[0, 0]]);
        let b = Mat::from_ints(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.commutator(&b), Mat::from_ints(&[&[1, 0], &[0, -1]]));
        assert_eq!(a.anticommutator(&b), Mat::identity(2));
        assert_eq!(a.pow(2), Mat::zeros(2, 2));
    }

    #[test]
    fn inverse() {
        let m = Mat::from_ints(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        let i = m.inverse().unwrap();
        assert_eq!(&m * &i, Mat::identity(3));
        assert!(Mat::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
