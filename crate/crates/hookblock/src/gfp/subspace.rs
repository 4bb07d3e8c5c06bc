//! Subspaces of F_p^n with canonical reduced-echelon bases.

use super::matrix::{FpMatrix, Rref};
use crate::error::{Error, Result};

/// A subspace, stored as the rows of a reduced echelon matrix.
///
/// The stored basis is canonical, so `==` is semantic equality of subspaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    mat: FpMatrix, // full row rank, RREF
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rows(rows: &FpMatrix) -> Self {
        let Rref { mat, rank, pivots } = rows.rref();
        let reduced = mat.block(0, 0, rank, rows.cols());
        Subspace { ambient: rows.cols(), mat: reduced, pivots }
    }

    /// Span of the columns of `m`.
    pub fn from_cols(m: &FpMatrix) -> Self {
        Self::from_rows(&m.transpose())
    }

    pub fn zero(p: u64, ambient: usize) -> Self {
        Subspace { ambient, mat: FpMatrix::zeros(p, 0, ambient), pivots: vec![] }
    }

    pub fn full(p: u64, ambient: usize) -> Self {
        Self::from_rows(&FpMatrix::identity(p, ambient))
    }

    pub fn p(&self) -> u64 {
        self.mat.p()
    }
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn basis_rows(&self) -> &FpMatrix {
        &self.mat
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction by the basis; zero iff `v` lies here.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p();
        let mut w = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let f = w[c] % p;
            if f != 0 {
                for j in 0..self.ambient {
                    let s = self.mat[(r, j)] * f % p;
                    w[j] = (w[j] + p - s) % p;
                }
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains_vec(other.mat.row(i)))
    }

    /// Coordinates of `v` in the canonical basis, when `v` lies here.
    pub fn coords_of(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_rows(&self.mat.vstack(&other.mat))
    }

    /// Intersection by the Zassenhaus block trick.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let p = self.p();
        let n = self.ambient;
        let du = self.dim();
        let dv = other.dim();
        let mut block = FpMatrix::zeros(p, du + dv, 2 * n);
        for i in 0..du {
            for j in 0..n {
                block[(i, j)] = self.mat[(i, j)];
                block[(i, n + j)] = self.mat[(i, j)];
            }
        }
        for i in 0..dv {
            for j in 0..n {
                block[(du + i, j)] = other.mat[(i, j)];
            }
        }
        let Rref { mat, rank, .. } = block.rref();
        let mut rows = Vec::new();
        for r in 0..rank {
            if (0..n).all(|j| mat[(r, j)] == 0) {
                rows.push((0..n).map(|j| mat[(r, n + j)]).collect::<Vec<_>>());
            }
        }
        Subspace::from_rows(&FpMatrix::from_rows(p, if rows.is_empty() { vec![vec![0; n]] } else { rows }))
    }

    /// For `self = U` contained in `w = W`, the projection matrix
    /// `q x ambient` sending `w` in `W` to its coordinates in `W/U`.
    pub fn quotient_map(&self, w: &Subspace) -> Result<FpMatrix> {
        if !w.contains(self) {
            return Err(Error::Incompatible("quotient_map requires U to be contained in W".into()));
        }
        let p = self.p();
        let k = w.dim();
        // U written in W-coordinates.
        let mut urows = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            urows.push(w.coords_of(self.mat.row(i)).expect("contained"));
        }
        let u_in_w = Subspace::from_rows(&FpMatrix::from_rows(p, if urows.is_empty() {
            vec![vec![0; k]]
        } else {
            urows
        }));
        let free: Vec<usize> = (0..k).filter(|c| !u_in_w.pivots.contains(c)).collect();
        // Extractor X: ambient -> W-coordinates (read off pivot entries).
        let mut x = FpMatrix::zeros(p, k, self.ambient);
        for (r, &c) in w.pivots.iter().enumerate() {
            x[(r, c)] = 1;
        }
        // Reduction by U followed by reading the free coordinates.
        let mut q = FpMatrix::zeros(p, free.len(), self.ambient);
        for col in 0..self.ambient {
            let wc: Vec<u64> = (0..k).map(|r| x[(r, col)]).collect();
            let red = u_in_w.reduce(&wc);
            for (qi, &f) in free.iter().enumerate() {
                q[(qi, col)] = red[f];
            }
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_subspace(rng: &mut impl Rng, p: u64, ambient: usize, gens: usize) -> Subspace {
        let m = FpMatrix::from_fn(p, gens, ambient, |_, _| rng.gen_range(0..p));
        Subspace::from_rows(&m)
    }

    #[test]
    fn self_intersection_and_zero_sum() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        let u = random_subspace(&mut rng, 3, 8, 4);
        assert_eq!(u.intersect(&u), u);
        let z = Subspace::zero(3, 8);
        assert_eq!(u.sum(&z), u);
    }

    #[test]
    fn dimension_identity_f3_ambient12() {
        // dim U + dim V = dim(U cap V) + dim(U + V), both sides computed directly
        let mut rng = rand::rngs::StdRng::seed_from_u64(42);
        for _ in 0..20 {
            let gu = rng.gen_range(1..10);
            let gv = rng.gen_range(1..10);
            let u = random_subspace(&mut rng, 3, 12, gu);
            let v = random_subspace(&mut rng, 3, 12, gv);
            let i = u.intersect(&v);
            let s = u.sum(&v);
            assert_eq!(u.dim() + v.dim(), i.dim() + s.dim());
            assert!(u.contains(&i) && v.contains(&i));
            assert!(s.contains(&u) && s.contains(&v));
        }
    }

    #[test]
    fn quotient_map_kills_exactly_u() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        let w = random_subspace(&mut rng, 5, 10, 7);
        // U = span of a couple of W rows combined
        let u = {
            let r0 = w.basis_rows().row(0).to_vec();
            let r1 = w.basis_rows().row(1).to_vec();
            Subspace::from_rows(&FpMatrix::from_rows(5, vec![r0, r1]))
        };
        let q = u.quotient_map(&w).unwrap();
        assert_eq!(q.rows(), w.dim() - u.dim());
        for i in 0..u.dim() {
            assert!(q.mul_vec(u.basis_rows().row(i)).iter().all(|&x| x == 0));
        }
        // q restricted to W is surjective: its rank on W's basis is full
        let mut img = FpMatrix::zeros(5, w.dim(), q.rows());
        for i in 0..w.dim() {
            let v = q.mul_vec(w.basis_rows().row(i));
            for j in 0..q.rows() {
                img[(i, j)] = v[j];
            }
        }
        assert_eq!(img.rank(), q.rows());
    }
}
