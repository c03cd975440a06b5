//! Integer matrices with exact rank.
//!
//! Computations run in `i128` with checked arithmetic and are repeated over
//! `BigInt` whenever an intermediate value overflows, so every answer is exact.

use num_bigint::BigInt;
use num_traits::Zero;

pub(crate) trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// Division known to be exact.
    fn div_exact(&self, o: &Self) -> Option<Self>;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert!(self % o == 0);
        self.checked_div(*o)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
}

/// Dense row-major matrix over a [`Ring`].
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Mat<R> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<R>,
}

pub(crate) type IMat = Mat<i128>;
pub(crate) type BMat = Mat<BigInt>;

impl<R: Ring> Mat<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Option<Self> {
        assert_eq!(self.cols, o.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b)?)?;
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank_in(&self) -> Option<usize> {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut prev = R::from_i64(1);
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..n {
                    a.data.swap(p * n + j, r * n + j);
                }
            }
            let piv = a.get(r, c).clone();
            for i in r + 1..m {
                let f = a.get(i, c).clone();
                for j in c + 1..n {
                    let v = piv.mul(a.get(i, j))?.sub(&f.mul(a.get(r, j))?)?.div_exact(&prev)?;
                    a.set(i, j, v);
                }
                a.set(i, c, R::zero());
            }
            prev = piv;
            r += 1;
        }
        Some(r)
    }
}

impl IMat {
    #[cfg(test)]
    pub fn from_i64(rows: usize, cols: usize, v: &[i64]) -> Self {
        Mat {
            rows,
            cols,
            data: v.iter().map(|&x| x as i128).collect(),
        }
    }

    pub fn to_big(&self) -> BMat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_in()
            .unwrap_or_else(|| self.to_big().rank_in().expect("big integer arithmetic is total"))
    }
}

/// `dims[j][s] = dim (Ker X^j restricted to the span of coordinate subset s)`
/// for `j = 0, 1, ...` until `X^j` vanishes; `None` if `X` is not nilpotent.
pub(crate) fn kernel_profile(x: &IMat, subsets: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    match kernel_profile_in(x, subsets) {
        Some(p) => p,
        None => kernel_profile_in(&x.to_big(), subsets).expect("big integer arithmetic is total"),
    }
}

fn kernel_profile_in<R: Ring>(x: &Mat<R>, subsets: &[Vec<usize>]) -> Option<Option<Vec<Vec<usize>>>> {
    let n = x.rows;
    let mut out = vec![vec![0; subsets.len()]];
    let mut power = x.clone();
    for _ in 0..=n {
        if power.is_zero() {
            out.push(subsets.iter().map(Vec::len).collect());
            return Some(Some(out));
        }
        let mut row = Vec::with_capacity(subsets.len());
        for s in subsets {
            row.push(s.len() - power.select_columns(s).rank_in()?);
        }
        out.push(row);
        power = power.mul(x)?;
    }
    Some(None)
}

/// Kernel dimensions of all powers of a square integer matrix.
pub(crate) fn kernel_dims(x: &IMat) -> Option<Vec<usize>> {
    let all: Vec<usize> = (0..x.cols).collect();
    kernel_profile(x, &[all]).map(|p| p.into_iter().map(|r| r[0]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let m = IMat::from_i64(3, 3, &[1, 2, 3, 2, 4, 6, 1, 0, 1]);
        assert_eq!(m.rank(), 2);
        assert_eq!(IMat::zeros(2, 3).rank(), 0);
    }

    #[test]
    fn rank_survives_overflow() {
        let big = 1i128 << 100;
        let m = Mat {
            rows: 3,
            cols: 3,
            data: vec![big, big - 1, 3, big - 7, big, 5, 1, 2, big],
        };
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank_in(), None);
    }

    #[test]
    fn jordan_block_profile() {
        let mut j = IMat::zeros(3, 3);
        j.set(1, 0, 1);
        j.set(2, 1, 1);
        assert_eq!(kernel_dims(&j).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(kernel_dims(&IMat::from_i64(1, 1, &[1])), None);
    }
}
