//! Dense matrices over the prime field with p elements.
//!
//! Everything is exact: entries are residues in `[0, p)` stored as `u64`,
//! pivoting is deterministic (first nonzero), and reduced echelon forms are
//! canonical, so subspace equality is structural.

use std::fmt;
use std::ops::{Index, IndexMut};

/// Modular inverse by Fermat's little theorem; `p` must be prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "division by zero mod {}", p);
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>, // row-major
}

/// Result of reduced row echelon form.
pub struct Rref {
    pub mat: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(p: u64, rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.into_iter().map(|x| x % p));
        }
        FpMatrix { p, rows: r, cols: c, data }
    }

    pub fn from_fn(p: u64, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j) % p;
            }
        }
        m
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.p, self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let p = self.p;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| (a + b) % p).collect();
        FpMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let p = self.p;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| (a + p - b) % p).collect();
        FpMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        let data = self.data.iter().map(|&a| (p - a) % p).collect();
        FpMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        let c = c % p;
        let data = self.data.iter().map(|&a| a * c % p).collect();
        FpMatrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                let orow = o.row(k);
                let out_row = &mut out.data[i * o.cols..(i + 1) * o.cols];
                for (x, &b) in out_row.iter_mut().zip(orow) {
                    *x = (*x + a * b) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let p = self.p;
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.row(i).iter().zip(v) {
                acc = (acc + a * b) % p;
            }
            out[i] = acc;
        }
        out
    }

    /// Horizontal concatenation `[self | o]`.
    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        let mut m = Self::zeros(self.p, self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            m.data[i * m.cols..i * m.cols + self.cols].copy_from_slice(self.row(i));
            m.data[i * m.cols + self.cols..(i + 1) * m.cols].copy_from_slice(o.row(i));
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&o.data);
        FpMatrix { p: self.p, rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Writes `block` into `self` with upper-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FpMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)];
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FpMatrix {
        Self::from_fn(self.p, rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    /// Reduced row echelon form with deterministic first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let mut pr = None;
            for i in r..m.rows {
                if m[(i, c)] != 0 {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            m.data.swap_range(pr, r, m.cols);
            let inv = inv_mod(m[(r, c)], p);
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)] * inv % p;
            }
            for i in 0..m.rows {
                if i != r && m[(i, c)] != 0 {
                    let f = m[(i, c)];
                    for j in c..m.cols {
                        let s = m[(r, j)] * f % p;
                        m[(i, j)] = (m[(i, j)] + p - s) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the kernel, returned as the columns of a matrix.
    ///
    /// The basis is canonical: each free column contributes one vector with a
    /// 1 in its own position.
    pub fn kernel(&self) -> FpMatrix {
        let p = self.p;
        let Rref { mat, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FpMatrix::zeros(p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = 1;
            for r in 0..rank {
                let v = mat[(r, f)];
                if v != 0 {
                    out[(pivots[r], k)] = (p - v) % p;
                }
            }
        }
        out
    }

    /// Any solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(self.rows, b.len());
        let bm = FpMatrix::from_fn(self.p, self.rows, 1, |i, _| b[i]);
        self.solve_matrix(&bm).map(|x| x.col(0))
    }

    /// Any solution of `self * X = B` column by column, or `None`.
    pub fn solve_matrix(&self, b: &FpMatrix) -> Option<FpMatrix> {
        assert_eq!(self.rows, b.rows);
        let aug = self.hstack(b);
        let Rref { mat, rank, pivots } = aug.rref();
        // A pivot beyond self.cols means some column of B is outside the image.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = FpMatrix::zeros(self.p, self.cols, b.cols);
        for r in 0..rank {
            for j in 0..b.cols {
                x[(pivots[r], j)] = mat[(r, self.cols + j)];
            }
        }
        Some(x)
    }
}

trait SwapRange {
    fn swap_range(&mut self, a: usize, b: usize, width: usize);
}
impl SwapRange for Vec<u64> {
    fn swap_range(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for j in 0..width {
            self.swap(a * width + j, b * width + j);
        }
    }
}

impl Index<(usize, usize)> for FpMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for FpMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn rref_identity_and_zero() {
        let id = FpMatrix::identity(5, 4);
        let r = id.rref();
        assert_eq!(r.mat, id);
        assert_eq!(r.rank, 4);
        let z = FpMatrix::zeros(5, 3, 3);
        let r = z.rref();
        assert_eq!(r.mat, z);
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rank_nullity_random_f5() {
        // rank(M) = 20 - dim ker(M) on random 20x20 matrices over F_5
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..5 {
            let m = FpMatrix::from_fn(5, 20, 20, |_, _| rng.gen_range(0..5));
            let k = m.kernel();
            assert_eq!(m.rank(), 20 - k.cols());
            // defining property: every kernel column is annihilated
            assert!(m.mul(&k).is_zero());
        }
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let id = FpMatrix::identity(3, 5);
        assert_eq!(id.kernel().cols(), 0);
    }

    #[test]
    fn solve_roundtrip() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..10 {
            let a = FpMatrix::from_fn(7, 6, 4, |_, _| rng.gen_range(0..7));
            let x: Vec<u64> = (0..4).map(|_| rng.gen_range(0..7)).collect();
            let b = a.mul_vec(&x);
            let sol = a.solve(&b).expect("consistent by construction");
            assert_eq!(a.mul_vec(&sol), b);
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = FpMatrix::from_rows(3, vec![vec![1, 0], vec![1, 0]]);
        assert!(a.solve(&[1, 2]).is_none());
        assert!(a.solve(&[1, 1]).is_some());
    }

    #[test]
    fn mul_associative_small() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let a = FpMatrix::from_fn(5, 3, 4, |_, _| rng.gen_range(0..5));
        let b = FpMatrix::from_fn(5, 4, 2, |_, _| rng.gen_range(0..5));
        let c = FpMatrix::from_fn(5, 2, 5, |_, _| rng.gen_range(0..5));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}
