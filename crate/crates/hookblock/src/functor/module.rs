//! Evaluated polynomial functors as explicit modules: a labeled basis over
//! the prime field together with the action matrices of the divided-power
//! generator family
//! `{E_{j,j+1}^{(r)}, F_{j,j+1}^{(r)} : r in {1, p}}` plus weight idempotents
//! (carried implicitly as the content vector of each basis element).
//!
//! Over F_p the group elements of GL_n(F_p) do not span the Schur algebra,
//! while divided powers of the Chevalley generators do (for degree < p^2 the
//! orders 1 and p suffice), so commuting with this family is exactly
//! naturality of a linear map.

use super::word::WordSpace;
use crate::gfp::{FpMatrix, Subspace};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A divided-power Chevalley generator: `E_{j,j+1}^{(r)}` or (for
/// `lower = true`) `F_{j,j+1}^{(r)} = E_{j+1,j}^{(r)}`, with `0 <= j < n-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Gen {
    pub lower: bool,
    pub j: usize,
    pub r: usize,
}

impl Gen {
    /// (u, v) with the generator acting as `E_{uv}^{(r)}`, 0-based.
    pub fn uv(self) -> (usize, usize) {
        if self.lower {
            (self.j + 1, self.j)
        } else {
            (self.j, self.j + 1)
        }
    }

    /// The content shift of the generator: `r(e_u - e_v)`.
    pub fn shift(self, n: usize) -> Vec<i32> {
        let (u, v) = self.uv();
        let mut s = vec![0i32; n];
        s[u] += self.r as i32;
        s[v] -= self.r as i32;
        s
    }

    /// The transpose generator (Kuhn duality swaps E and F).
    pub fn transpose(self) -> Gen {
        Gen { lower: !self.lower, ..self }
    }
}

/// The generator family for degree-`degree` functors on k^n over F_p.
pub fn gens_for(n: usize, degree: usize, p: u64) -> Vec<Gen> {
    let mut rs = vec![1usize];
    if (p as usize) <= degree {
        rs.push(p as usize);
    }
    let mut out = Vec::new();
    for j in 0..n.saturating_sub(1) {
        for &r in &rs {
            out.push(Gen { lower: false, j, r });
            out.push(Gen { lower: true, j, r });
        }
    }
    out
}

/// An evaluated polynomial functor: ordered basis, content vector per basis
/// element, dense action matrix per generator.
pub struct PfModule {
    pub p: u64,
    pub n: usize,
    pub degree: usize,
    pub label: String,
    pub contents: Vec<Vec<u8>>,
    actions: Vec<(Gen, FpMatrix)>,
    pub basis_names: Vec<String>,
}

impl PfModule {
    pub fn dim(&self) -> usize {
        self.contents.len()
    }

    pub fn action(&self, g: Gen) -> &FpMatrix {
        &self.actions.iter().find(|(h, _)| *h == g).expect("generator of this degree").1
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        self.actions.iter().map(|(g, _)| *g)
    }

    pub fn zero(p: u64, n: usize, degree: usize) -> Arc<PfModule> {
        let actions =
            gens_for(n, degree, p).into_iter().map(|g| (g, FpMatrix::zeros(p, 0, 0))).collect();
        Arc::new(PfModule {
            p,
            n,
            degree,
            label: "0".into(),
            contents: vec![],
            actions,
            basis_names: vec![],
        })
    }

    /// Materializes a word space as a module with dense generator actions.
    pub fn from_word(ws: &WordSpace, label: impl Into<String>) -> Arc<PfModule> {
        let dim = ws.dim();
        let degree = ws.degree();
        let contents: Vec<Vec<u8>> = (0..dim).map(|k| ws.content(k)).collect();
        let mut actions = Vec::new();
        for g in gens_for(ws.n, degree, ws.p) {
            let (u, v) = g.uv();
            let mut m = FpMatrix::zeros(ws.p, dim, dim);
            for k in 0..dim {
                for (idx, c) in ws.apply_gen(u, v, g.r, k) {
                    m[(idx, k)] = c;
                }
            }
            actions.push((g, m));
        }
        let basis_names = (0..dim).map(|k| ws.label_string(k)).collect();
        let module = PfModule {
            p: ws.p,
            n: ws.n,
            degree,
            label: label.into(),
            contents,
            actions,
            basis_names,
        };
        module.assert_weight_compatible();
        Arc::new(module)
    }

    /// Every generator must shift contents by its root.
    fn assert_weight_compatible(&self) {
        for (g, m) in &self.actions {
            let shift = g.shift(self.n);
            for col in 0..self.dim() {
                for row in 0..self.dim() {
                    if m[(row, col)] != 0 {
                        for t in 0..self.n {
                            let expect = self.contents[col][t] as i32 + shift[t];
                            assert_eq!(
                                self.contents[row][t] as i32,
                                expect,
                                "{}: generator {:?} breaks weights",
                                self.label,
                                g
                            );
                        }
                    }
                }
            }
        }
    }

    /// The submodule spanned by an invariant subspace, with its inclusion.
    pub fn submodule(
        parent: &Arc<PfModule>,
        space: &Subspace,
        label: impl Into<String>,
    ) -> (Arc<PfModule>, LinMap) {
        assert_eq!(space.ambient(), parent.dim());
        let k = space.dim();
        let incl = space.basis_rows().transpose(); // dim x k, columns = basis
        let mut actions = Vec::new();
        for g in parent.gens() {
            let big = parent.action(g).mul(&incl);
            // express each column back in the canonical row basis
            let mut small = FpMatrix::zeros(parent.p, k, k);
            for col in 0..k {
                let v = big.col(col);
                let coords = space
                    .coords_of(&v)
                    .unwrap_or_else(|| panic!("{}: subspace not invariant under {:?}", parent.label, g));
                for row in 0..k {
                    small[(row, col)] = coords[row];
                }
            }
            actions.push((g, small));
        }
        let contents: Vec<Vec<u8>> = (0..k)
            .map(|i| {
                let row = space.basis_rows().row(i);
                let j = row.iter().position(|&x| x != 0).expect("nonzero basis vector");
                let c = parent.contents[j].clone();
                debug_assert!(row
                    .iter()
                    .enumerate()
                    .all(|(t, &x)| x == 0 || parent.contents[t] == c));
                c
            })
            .collect();
        let label = label.into();
        let module = Arc::new(PfModule {
            p: parent.p,
            n: parent.n,
            degree: parent.degree,
            label: label.clone(),
            contents,
            actions,
            basis_names: (0..k).map(|i| format!("{}[{}]", label, i)).collect(),
        });
        let map = LinMap::new(Arc::clone(&module), Arc::clone(parent), incl);
        (module, map)
    }

    /// The quotient by an invariant subspace, with its projection.
    pub fn quotient(
        parent: &Arc<PfModule>,
        space: &Subspace,
        label: impl Into<String>,
    ) -> (Arc<PfModule>, LinMap) {
        assert_eq!(space.ambient(), parent.dim());
        let p = parent.p;
        let d = parent.dim();
        let free: Vec<usize> = (0..d).filter(|c| !space.pivots().contains(c)).collect();
        let q = free.len();
        // projection: reduce a vector by the subspace, read free coordinates
        let mut proj = FpMatrix::zeros(p, q, d);
        for j in 0..d {
            let mut e = vec![0u64; d];
            e[j] = 1;
            let red = space.reduce(&e);
            for (qi, &f) in free.iter().enumerate() {
                proj[(qi, j)] = red[f];
            }
        }
        // section: class i -> e_{free_i}
        let mut sect = FpMatrix::zeros(p, d, q);
        for (qi, &f) in free.iter().enumerate() {
            sect[(f, qi)] = 1;
        }
        let mut actions = Vec::new();
        for g in parent.gens() {
            let a = proj.mul(&parent.action(g).mul(&sect));
            actions.push((g, a));
        }
        let contents: Vec<Vec<u8>> = free.iter().map(|&f| parent.contents[f].clone()).collect();
        let label = label.into();
        let module = Arc::new(PfModule {
            p,
            n: parent.n,
            degree: parent.degree,
            label: label.clone(),
            contents,
            actions,
            basis_names: (0..q).map(|i| format!("{}[{}]", label, i)).collect(),
        });
        let map = LinMap::new(Arc::clone(parent), Arc::clone(&module), proj);
        (module, map)
    }

    /// Kuhn dual: same contents, transposed contragredient actions.
    pub fn dual(parent: &Arc<PfModule>) -> Arc<PfModule> {
        let actions = parent
            .actions
            .iter()
            .map(|(g, _)| (*g, parent.action(g.transpose()).transpose()))
            .collect();
        let label = if let Some(stripped) = parent.label.strip_suffix('#') {
            stripped.to_string()
        } else {
            format!("{}#", parent.label)
        };
        Arc::new(PfModule {
            p: parent.p,
            n: parent.n,
            degree: parent.degree,
            label: label.clone(),
            contents: parent.contents.clone(),
            actions,
            basis_names: (0..parent.dim()).map(|i| format!("{}[{}]", label, i)).collect(),
        })
    }

    /// Direct sum; returns the sum module and the part offsets.
    pub fn direct_sum(parts: &[Arc<PfModule>], label: impl Into<String>) -> (Arc<PfModule>, Vec<usize>) {
        assert!(!parts.is_empty());
        let p = parts[0].p;
        let n = parts[0].n;
        let degree = parts[0].degree;
        let dim: usize = parts.iter().map(|m| m.dim()).sum();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut off = 0;
        for m in parts {
            assert!(m.p == p && m.n == n && m.degree == degree);
            offsets.push(off);
            off += m.dim();
        }
        let mut contents = Vec::with_capacity(dim);
        let mut basis_names = Vec::with_capacity(dim);
        for m in parts {
            contents.extend(m.contents.iter().cloned());
            basis_names.extend(m.basis_names.iter().cloned());
        }
        let mut actions = Vec::new();
        for g in gens_for(n, degree, p) {
            let mut a = FpMatrix::zeros(p, dim, dim);
            for (m, &o) in parts.iter().zip(&offsets) {
                a.set_block(o, o, m.action(g));
            }
            actions.push((g, a));
        }
        let module =
            Arc::new(PfModule { p, n, degree, label: label.into(), contents, actions, basis_names });
        (module, offsets)
    }
}

/// A natural transformation between evaluated functors: a matrix commuting
/// with every generator action and preserving contents.
#[derive(Clone)]
pub struct LinMap {
    pub src: Arc<PfModule>,
    pub dst: Arc<PfModule>,
    pub mat: FpMatrix,
}

impl LinMap {
    /// Constructs and checks equivariance (content preservation and
    /// commutation with every generator).
    pub fn new(src: Arc<PfModule>, dst: Arc<PfModule>, mat: FpMatrix) -> LinMap {
        let map = LinMap::new_unchecked(src, dst, mat);
        map.assert_equivariant();
        map
    }

    pub fn new_unchecked(src: Arc<PfModule>, dst: Arc<PfModule>, mat: FpMatrix) -> LinMap {
        assert_eq!(mat.rows(), dst.dim(), "map to {}", dst.label);
        assert_eq!(mat.cols(), src.dim(), "map from {}", src.label);
        LinMap { src, dst, mat }
    }

    pub fn zero(src: Arc<PfModule>, dst: Arc<PfModule>) -> LinMap {
        let m = FpMatrix::zeros(src.p, dst.dim(), src.dim());
        LinMap::new_unchecked(src, dst, m)
    }

    pub fn identity(m: &Arc<PfModule>) -> LinMap {
        LinMap::new_unchecked(Arc::clone(m), Arc::clone(m), FpMatrix::identity(m.p, m.dim()))
    }

    pub fn assert_equivariant(&self) {
        for i in 0..self.dst.dim() {
            for j in 0..self.src.dim() {
                if self.mat[(i, j)] != 0 {
                    assert_eq!(
                        self.dst.contents[i], self.src.contents[j],
                        "{} -> {}: content broken at ({}, {})",
                        self.src.label, self.dst.label, i, j
                    );
                }
            }
        }
        for g in self.src.gens() {
            let lhs = self.dst.action(g).mul(&self.mat);
            let rhs = self.mat.mul(self.src.action(g));
            assert_eq!(
                lhs, rhs,
                "{} -> {}: not equivariant for {:?}",
                self.src.label, self.dst.label, g
            );
        }
    }

    pub fn is_equivariant(&self) -> bool {
        self.src.gens().all(|g| {
            self.dst.action(g).mul(&self.mat) == self.mat.mul(self.src.action(g))
        })
    }

    /// self after other (`self` must start where `other` ends).
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.src.label, other.dst.label, "composition mismatch");
        LinMap::new_unchecked(Arc::clone(&other.src), Arc::clone(&self.dst), self.mat.mul(&other.mat))
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        LinMap::new_unchecked(Arc::clone(&self.src), Arc::clone(&self.dst), self.mat.add(&other.mat))
    }

    pub fn scale(&self, c: u64) -> LinMap {
        LinMap::new_unchecked(Arc::clone(&self.src), Arc::clone(&self.dst), self.mat.scale(c))
    }

    /// Kuhn dual map (transpose, contravariant).
    pub fn dual(&self) -> LinMap {
        LinMap::new_unchecked(
            PfModule::dual(&self.dst),
            PfModule::dual(&self.src),
            self.mat.transpose(),
        )
    }

    pub fn kernel_module(&self, label: impl Into<String>) -> (Arc<PfModule>, LinMap) {
        let space = Subspace::from_cols(&self.mat.kernel());
        PfModule::submodule(&self.src, &space, label)
    }

    pub fn image_module(&self, label: impl Into<String>) -> (Arc<PfModule>, LinMap) {
        let space = Subspace::from_cols(&self.mat);
        PfModule::submodule(&self.dst, &space, label)
    }

    pub fn cokernel_module(&self, label: impl Into<String>) -> (Arc<PfModule>, LinMap) {
        let space = Subspace::from_cols(&self.mat);
        PfModule::quotient(&self.dst, &space, label)
    }

    /// Corestriction to a submodule of the target containing the image.
    pub fn corestrict(&self, incl: &LinMap) -> LinMap {
        // incl: sub -> dst; solve incl * X = mat
        let x = incl
            .mat
            .solve_matrix(&self.mat)
            .expect("image not contained in the submodule");
        LinMap::new_unchecked(Arc::clone(&self.src), Arc::clone(&incl.src), x)
    }
}

/// Debug dump of a module: basis labels plus generator matrices, for
/// golden-file tests and external inspection.
#[derive(serde::Serialize)]
pub struct ModuleDump {
    pub label: String,
    pub p: u64,
    pub n: usize,
    pub degree: usize,
    pub dim: usize,
    pub basis: Vec<String>,
    pub generators: Vec<(String, Vec<Vec<u64>>)>,
}

impl PfModule {
    pub fn dump(&self) -> ModuleDump {
        let generators = self
            .actions
            .iter()
            .map(|(g, m)| {
                let name = format!(
                    "{}{}^({})",
                    if g.lower { "F" } else { "E" },
                    g.j + 1,
                    g.r
                );
                let rows = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
                (name, rows)
            })
            .collect();
        ModuleDump {
            label: self.label.clone(),
            p: self.p,
            n: self.n,
            degree: self.degree,
            dim: self.dim(),
            basis: self.basis_names.clone(),
            generators,
        }
    }
}

/// Debug dump of a map between dumped modules.
#[derive(serde::Serialize)]
pub struct MapDump {
    pub src: String,
    pub dst: String,
    pub matrix: Vec<Vec<u64>>,
}

impl LinMap {
    pub fn dump(&self) -> MapDump {
        MapDump {
            src: self.src.label.clone(),
            dst: self.dst.label.clone(),
            matrix: (0..self.mat.rows()).map(|i| self.mat.row(i).to_vec()).collect(),
        }
    }
}

/// The coordinates of `v` (sparse) against an echelonized sparse row basis.
pub struct SparseSpan {
    pub rows: Vec<BTreeMap<usize, u64>>,
    pub pivots: Vec<usize>,
    pub p: u64,
}

impl SparseSpan {
    /// Echelonize (full reduction, unit pivots) a spanning set.
    pub fn new(p: u64, vectors: Vec<BTreeMap<usize, u64>>) -> SparseSpan {
        let mut span = SparseSpan { rows: vec![], pivots: vec![], p };
        for v in vectors {
            span.insert(v);
        }
        span
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: BTreeMap<usize, u64>) {
        let p = self.p;
        loop {
            v.retain(|_, c| *c % p != 0);
            let Some((&piv, &c)) = v.iter().next() else { return };
            match self.pivots.binary_search(&piv) {
                Ok(k) => {
                    // eliminate
                    let row = self.rows[k].clone();
                    for (j, rv) in row {
                        let cur = v.entry(j).or_insert(0);
                        *cur = (*cur + (p - c % p) * rv) % p;
                    }
                }
                Err(k) => {
                    // normalize and back-reduce existing rows
                    let inv = crate::gfp::inv_mod(c, p);
                    let v: BTreeMap<usize, u64> =
                        v.into_iter().map(|(j, x)| (j, x * inv % p)).collect();
                    for i in 0..self.rows.len() {
                        if let Some(&f) = self.rows[i].get(&piv) {
                            if f != 0 {
                                let mut row = std::mem::take(&mut self.rows[i]);
                                for (&j, &x) in &v {
                                    let cur = row.entry(j).or_insert(0);
                                    *cur = (*cur + (p - f) * x) % p;
                                }
                                row.retain(|_, c| *c % p != 0);
                                self.rows[i] = row;
                            }
                        }
                    }
                    self.rows.insert(k, v);
                    self.pivots.insert(k, piv);
                    return;
                }
            }
        }
    }

    /// Coordinates of `v` in the row basis; `None` if not in the span.
    pub fn coords_of(&self, v: &BTreeMap<usize, u64>) -> Option<Vec<u64>> {
        let p = self.p;
        let mut coords = vec![0u64; self.rows.len()];
        let mut w = v.clone();
        loop {
            w.retain(|_, c| *c % p != 0);
            let Some((&piv, &c)) = w.iter().next() else { return Some(coords) };
            let k = self.pivots.binary_search(&piv).ok()?;
            coords[k] = c % p;
            for (&j, &x) in &self.rows[k] {
                let cur = w.entry(j).or_insert(0);
                *cur = (*cur + (p - c % p) * x) % p;
            }
        }
    }
}

/// Builds a module from a spanning set of sparse vectors in a word space,
/// computing the induced generator actions symbolically.
pub fn module_from_span(
    ws: &WordSpace,
    vectors: Vec<BTreeMap<usize, u64>>,
    label: impl Into<String>,
) -> (Arc<PfModule>, SparseSpan) {
    let p = ws.p;
    let span = SparseSpan::new(p, vectors);
    let k = span.dim();
    let label = label.into();
    let mut actions = Vec::new();
    for g in gens_for(ws.n, ws.degree(), p) {
        let (u, v) = g.uv();
        let mut small = FpMatrix::zeros(p, k, k);
        for (col, row) in span.rows.iter().enumerate() {
            let mut image: BTreeMap<usize, u64> = BTreeMap::new();
            for (&idx, &c) in row {
                for (tidx, tc) in ws.apply_gen(u, v, g.r, idx) {
                    let cur = image.entry(tidx).or_insert(0);
                    *cur = (*cur + c * tc) % p;
                }
            }
            let coords = span
                .coords_of(&image)
                .unwrap_or_else(|| panic!("{}: span not invariant under {:?}", label, g));
            for (r, &c) in coords.iter().enumerate() {
                small[(r, col)] = c;
            }
        }
        actions.push((g, small));
    }
    let contents: Vec<Vec<u8>> = span
        .rows
        .iter()
        .map(|row| {
            let (&idx, _) = row.iter().next().expect("nonzero row");
            let c = ws.content(idx);
            debug_assert!(row.keys().all(|&j| ws.content(j) == c));
            c
        })
        .collect();
    let module = Arc::new(PfModule {
        p,
        n: ws.n,
        degree: ws.degree(),
        label: label.clone(),
        contents,
        actions,
        basis_names: (0..k).map(|i| format!("{}[{}]", label, i)).collect(),
    });
    (module, span)
}
