//! Basis of all natural transformations between two evaluated functors,
//! solved as one exact linear system.
//!
//! Commuting with the weight idempotents confines a natural map to the
//! content-diagonal blocks, so the unknowns are indexed by pairs of basis
//! elements of equal content; the remaining constraints (one per generator)
//! are imposed by intersecting kernels sequentially, which keeps the dense
//! eliminations at the size of the first constraint only.

use super::module::PfModule;
use crate::gfp::FpMatrix;
use std::collections::HashMap;

/// All equivariant maps `m -> n` as matrices (`n.dim x m.dim`), canonical
/// echelon basis.
pub fn hom_basis(m: &PfModule, n: &PfModule) -> Vec<FpMatrix> {
    assert_eq!(m.p, n.p, "different primes");
    assert_eq!(m.n, n.n, "different evaluation dimensions");
    if m.degree != n.degree {
        // different homogeneous degrees never admit nonzero natural maps
        return vec![];
    }
    let p = m.p;
    if m.dim() == 0 || n.dim() == 0 {
        return vec![];
    }

    // unknown slots: content-matched pairs (row in n, col in m)
    let mut by_content_m: HashMap<&[u8], Vec<usize>> = HashMap::new();
    for (i, c) in m.contents.iter().enumerate() {
        by_content_m.entry(c.as_slice()).or_default().push(i);
    }
    let mut slots: Vec<(usize, usize)> = Vec::new();
    for (i_n, c) in n.contents.iter().enumerate() {
        if let Some(cols) = by_content_m.get(c.as_slice()) {
            for &i_m in cols {
                slots.push((i_n, i_m));
            }
        }
    }
    if slots.is_empty() {
        return vec![];
    }
    let u = slots.len();

    // current solution space: columns of `basis`
    let mut basis = FpMatrix::identity(p, u);

    for g in m.gens() {
        if basis.cols() == 0 {
            break;
        }
        let shift = g.shift(m.n);
        // out slots: content(n row) = content(m col) + shift
        let mut out_id: HashMap<(usize, usize), usize> = HashMap::new();
        let mut out_count = 0usize;
        {
            let shifted = |c: &[u8]| -> Option<Vec<u8>> {
                let mut s = Vec::with_capacity(c.len());
                for (t, &x) in c.iter().enumerate() {
                    let v = x as i32 + shift[t];
                    if v < 0 {
                        return None;
                    }
                    s.push(v as u8);
                }
                Some(s)
            };
            let mut by_content_n: HashMap<&[u8], Vec<usize>> = HashMap::new();
            for (i, c) in n.contents.iter().enumerate() {
                by_content_n.entry(c.as_slice()).or_default().push(i);
            }
            for (i_m, c) in m.contents.iter().enumerate() {
                if let Some(s) = shifted(c) {
                    if let Some(rows) = by_content_n.get(s.as_slice()) {
                        for &i_n in rows {
                            out_id.insert((i_n, i_m), out_count);
                            out_count += 1;
                        }
                    }
                }
            }
        }
        if out_count == 0 {
            continue;
        }
        let rho_m = m.action(g);
        let rho_n = n.action(g);
        // constraint applied to each current basis column
        let mut c_of_k = FpMatrix::zeros(p, out_count, basis.cols());
        for col in 0..basis.cols() {
            for (s, &(i_n, i_m)) in slots.iter().enumerate() {
                let val = basis[(s, col)];
                if val == 0 {
                    continue;
                }
                // (rho_n X)[i_n', i_m] += rho_n[i_n', i_n] * val
                for i_np in 0..n.dim() {
                    let a = rho_n[(i_np, i_n)];
                    if a != 0 {
                        let o = out_id[&(i_np, i_m)];
                        c_of_k[(o, col)] = (c_of_k[(o, col)] + a * val) % p;
                    }
                }
                // -(X rho_m)[i_n, i_m''] -= val * rho_m[i_m, i_m'']
                for i_mpp in 0..m.dim() {
                    let a = rho_m[(i_m, i_mpp)];
                    if a != 0 {
                        let o = out_id[&(i_n, i_mpp)];
                        c_of_k[(o, col)] = (c_of_k[(o, col)] + (p - a) * val) % p;
                    }
                }
            }
        }
        let ker = c_of_k.kernel();
        basis = basis.mul(&ker);
    }

    // canonicalize over slot coordinates
    let rows = basis.transpose();
    let rref = rows.rref();
    let mut out = Vec::with_capacity(rref.rank);
    for r in 0..rref.rank {
        let mut mat = FpMatrix::zeros(p, n.dim(), m.dim());
        for (s, &(i_n, i_m)) in slots.iter().enumerate() {
            mat[(i_n, i_m)] = rref.mat[(r, s)];
        }
        out.push(mat);
    }
    out
}

/// Expresses an equivariant map in a hom basis; `None` if outside the span.
pub fn express_in_basis(mat: &FpMatrix, basis: &[FpMatrix]) -> Option<Vec<u64>> {
    if basis.is_empty() {
        return if mat.is_zero() { Some(vec![]) } else { None };
    }
    let p = mat.p();
    let rows = mat.rows() * mat.cols();
    let mut stacked = FpMatrix::zeros(p, rows, basis.len());
    for (k, b) in basis.iter().enumerate() {
        assert_eq!((b.rows(), b.cols()), (mat.rows(), mat.cols()));
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                stacked[(i * mat.cols() + j, k)] = b[(i, j)];
            }
        }
    }
    let mut target = vec![0u64; rows];
    for i in 0..mat.rows() {
        for j in 0..mat.cols() {
            target[i * mat.cols() + j] = mat[(i, j)];
        }
    }
    stacked.solve(&target)
}
