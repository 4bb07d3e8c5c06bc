//! Cochain complexes of evaluated functors, with direct-sum terms whose
//! parts stay addressable (needed to build chain maps block by block), and
//! double complexes with their totalizations.

use crate::functor::{LinMap, PfModule};
use crate::gfp::{FpMatrix, Subspace};
use std::collections::BTreeMap;
use std::sync::Arc;

/// One summand of a term.
#[derive(Clone)]
pub struct Part {
    pub id: String,
    pub module: Arc<PfModule>,
    pub offset: usize,
}

/// A term of a complex: a direct sum with addressable parts.
#[derive(Clone)]
pub struct SumTerm {
    pub module: Arc<PfModule>,
    pub parts: Vec<Part>,
}

impl SumTerm {
    pub fn single(id: impl Into<String>, module: Arc<PfModule>) -> SumTerm {
        let id = id.into();
        SumTerm { module: Arc::clone(&module), parts: vec![Part { id, module, offset: 0 }] }
    }

    pub fn sum(parts: Vec<(String, Arc<PfModule>)>, label: impl Into<String>) -> SumTerm {
        assert!(!parts.is_empty());
        if parts.len() == 1 {
            let (id, module) = parts.into_iter().next().unwrap();
            return SumTerm::single(id, module);
        }
        let modules: Vec<Arc<PfModule>> = parts.iter().map(|(_, m)| Arc::clone(m)).collect();
        let (module, offsets) = PfModule::direct_sum(&modules, label);
        let parts = parts
            .into_iter()
            .zip(offsets)
            .map(|((id, module), offset)| Part { id, module, offset })
            .collect();
        SumTerm { module, parts }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn part(&self, id: &str) -> Option<&Part> {
        self.parts.iter().find(|p| p.id == id)
    }
}

/// A differential together with its block decomposition; `blocks` lists
/// `(src part index, dst part index, block id)` of the nonzero blocks, and
/// the block id names the canonical map placed there (for memoization).
#[derive(Clone)]
pub struct Diff {
    pub mat: FpMatrix,
    pub blocks: Vec<(usize, usize, String)>,
}

impl Diff {
    pub fn from_blocks(
        p: u64,
        src: &SumTerm,
        dst: &SumTerm,
        blocks: Vec<(usize, usize, String, &FpMatrix)>,
    ) -> Diff {
        let mut mat = FpMatrix::zeros(p, dst.dim(), src.dim());
        let mut info = Vec::new();
        for (si, di, id, block) in blocks {
            assert_eq!(block.cols(), src.parts[si].module.dim());
            assert_eq!(block.rows(), dst.parts[di].module.dim());
            mat.set_block(dst.parts[di].offset, src.parts[si].offset, block);
            info.push((si, di, id));
        }
        Diff { mat, blocks: info }
    }

    pub fn block_of(&self, src: &SumTerm, dst: &SumTerm, si: usize, di: usize) -> FpMatrix {
        self.mat.block(
            dst.parts[di].offset,
            src.parts[si].offset,
            dst.parts[di].module.dim(),
            src.parts[si].module.dim(),
        )
    }
}

/// A cochain complex with finitely many nonzero terms.
pub struct Complex {
    pub p: u64,
    pub terms: BTreeMap<i64, SumTerm>,
    pub diffs: BTreeMap<i64, Diff>, // diffs[q] : terms[q] -> terms[q+1]
}

impl Complex {
    /// Validates shapes and d∘d = 0.
    pub fn new(p: u64, terms: BTreeMap<i64, SumTerm>, diffs: BTreeMap<i64, Diff>) -> Complex {
        let c = Complex { p, terms, diffs };
        c.validate();
        c
    }

    pub fn validate(&self) {
        for (&q, d) in &self.diffs {
            let src = self.terms.get(&q).expect("differential without source");
            assert_eq!(d.mat.cols(), src.dim());
            let dst_dim = self.dim(q + 1);
            assert_eq!(d.mat.rows(), dst_dim);
            if let Some(d2) = self.diffs.get(&(q + 1)) {
                assert!(d2.mat.mul(&d.mat).is_zero(), "d∘d != 0 at degree {}", q);
            }
        }
    }

    pub fn min_deg(&self) -> i64 {
        self.terms.keys().next().copied().unwrap_or(0)
    }

    pub fn max_deg(&self) -> i64 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn term(&self, q: i64) -> Option<&SumTerm> {
        self.terms.get(&q)
    }

    pub fn dim(&self, q: i64) -> usize {
        self.terms.get(&q).map_or(0, |t| t.dim())
    }

    /// The differential leaving degree q, as a matrix (zero when absent).
    pub fn diff_mat(&self, q: i64) -> FpMatrix {
        match self.diffs.get(&q) {
            Some(d) => d.mat.clone(),
            None => FpMatrix::zeros(self.p, self.dim(q + 1), self.dim(q)),
        }
    }

    /// dim ker(d_q) / im(d_{q-1}), computed exactly.
    pub fn homology_dim(&self, q: i64) -> usize {
        if self.dim(q) == 0 {
            return 0;
        }
        let ker = self.dim(q) - self.diff_mat(q).rank();
        let im = self.diff_mat(q - 1).rank();
        ker - im
    }

    /// All homology dimensions over the support range (plus one beyond).
    pub fn homology_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        if self.terms.is_empty() {
            return out;
        }
        for q in self.min_deg()..=self.max_deg() {
            out.insert(q, self.homology_dim(q));
        }
        out
    }

    /// ker(d_min) as a submodule of the lowest term (the `H^0` of a
    /// resolution complex, where nothing maps in).
    pub fn kernel_at_bottom(&self, label: impl Into<String>) -> (Arc<PfModule>, LinMap) {
        let q = self.min_deg();
        let term = self.term(q).expect("nonempty complex");
        let space = Subspace::from_cols(&self.diff_mat(q).kernel());
        PfModule::submodule(&term.module, &space, label)
    }

    /// Kuhn-dual complex: degree q becomes -q, differentials transpose.
    /// `label` keeps the sum-term module labels unique across the session.
    pub fn dual(&self, label: &str) -> Complex {
        let mut terms = BTreeMap::new();
        for (&q, t) in &self.terms {
            let parts: Vec<(String, Arc<PfModule>)> = t
                .parts
                .iter()
                .map(|part| (format!("{}#", part.id), PfModule::dual(&part.module)))
                .collect();
            // rebuild so offsets stay consistent (same order, same dims)
            terms.insert(-q, SumTerm::sum(parts, format!("{}^{}", label, -q)));
        }
        let mut diffs = BTreeMap::new();
        for (&q, d) in &self.diffs {
            let src = &self.terms[&q];
            let dst = &self.terms[&(q + 1)];
            let new_src = &terms[&(-q - 1)];
            let new_dst = &terms[&(-q)];
            let blocks: Vec<(usize, usize, String, FpMatrix)> = d
                .blocks
                .iter()
                .map(|&(si, di, ref id)| {
                    (di, si, format!("{}#", id), d.block_of(src, dst, si, di).transpose())
                })
                .collect();
            let block_refs: Vec<(usize, usize, String, &FpMatrix)> =
                blocks.iter().map(|&(a, b, ref id, ref m)| (a, b, id.clone(), m)).collect();
            diffs.insert(-q - 1, Diff::from_blocks(self.p, new_src, new_dst, block_refs));
        }
        Complex::new(self.p, terms, diffs)
    }
}

/// A plain complex of vector spaces (used for Hom complexes).
pub struct VComplex {
    pub p: u64,
    pub dims: BTreeMap<i64, usize>,
    pub diffs: BTreeMap<i64, FpMatrix>,
}

impl VComplex {
    pub fn dim(&self, q: i64) -> usize {
        self.dims.get(&q).copied().unwrap_or(0)
    }

    pub fn diff_mat(&self, q: i64) -> FpMatrix {
        match self.diffs.get(&q) {
            Some(d) => d.clone(),
            None => FpMatrix::zeros(self.p, self.dim(q + 1), self.dim(q)),
        }
    }

    pub fn validate(&self) {
        for (&q, d) in &self.diffs {
            assert_eq!(d.cols(), self.dim(q));
            assert_eq!(d.rows(), self.dim(q + 1));
            if let Some(d2) = self.diffs.get(&(q + 1)) {
                assert!(d2.mul(d).is_zero(), "hom-complex d∘d != 0 at {}", q);
            }
        }
    }

    pub fn homology_dim(&self, q: i64) -> usize {
        if self.dim(q) == 0 {
            return 0;
        }
        (self.dim(q) - self.diff_mat(q).rank()) - self.diff_mat(q - 1).rank()
    }
}

/// A bigraded array with horizontal and vertical differentials. The squares
/// of both differentials vanish and the two directions anticommute, so the
/// totalization needs no sign twist.
pub struct DoubleComplex {
    pub p: u64,
    pub cells: BTreeMap<(i64, i64), Arc<PfModule>>, // (r, s)
    pub horiz: BTreeMap<(i64, i64), FpMatrix>,      // (r,s) -> (r+1,s)
    pub vert: BTreeMap<(i64, i64), FpMatrix>,       // (r,s) -> (r,s+1)
    pub horiz_id: BTreeMap<(i64, i64), String>,
    pub vert_id: BTreeMap<(i64, i64), String>,
}

impl DoubleComplex {
    pub fn validate(&self) {
        let zero_or = |m: Option<&FpMatrix>, rows: usize, cols: usize| match m {
            Some(m) => m.clone(),
            None => FpMatrix::zeros(self.p, rows, cols),
        };
        for (&(r, s), module) in &self.cells {
            let dim = module.dim();
            let dim_right = self.cells.get(&(r + 1, s)).map_or(0, |m| m.dim());
            let dim_up = self.cells.get(&(r, s + 1)).map_or(0, |m| m.dim());
            let dim_diag = self.cells.get(&(r + 1, s + 1)).map_or(0, |m| m.dim());
            let h = zero_or(self.horiz.get(&(r, s)), dim_right, dim);
            let v = zero_or(self.vert.get(&(r, s)), dim_up, dim);
            let h_up = zero_or(self.horiz.get(&(r, s + 1)), dim_diag, dim_up);
            let v_right = zero_or(self.vert.get(&(r + 1, s)), dim_diag, dim_right);
            // anticommuting square
            assert!(
                h_up.mul(&v).add(&v_right.mul(&h)).is_zero(),
                "square at ({}, {}) does not anticommute",
                r,
                s
            );
            if let Some(h2) = self.horiz.get(&(r + 1, s)) {
                assert!(h2.mul(&h).is_zero());
            }
            if let Some(v2) = self.vert.get(&(r, s + 1)) {
                assert!(v2.mul(&v).is_zero());
            }
        }
    }

    /// Total complex with `Tot^m = (+)_{r+s=m}`, differential `d_h + d_v`
    /// (the squares anticommute already, so no sign twist is applied).
    pub fn totalize(&self, label: impl Into<String>) -> Complex {
        let label = label.into();
        let mut by_degree: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for &(r, s) in self.cells.keys() {
            by_degree.entry(r + s).or_default().push((r, s));
        }
        for cells in by_degree.values_mut() {
            cells.sort();
        }
        let mut terms: BTreeMap<i64, SumTerm> = BTreeMap::new();
        for (&m, cells) in &by_degree {
            let parts: Vec<(String, Arc<PfModule>)> = cells
                .iter()
                .map(|&(r, s)| (format!("r{}s{}", r, s), Arc::clone(&self.cells[&(r, s)])))
                .collect();
            terms.insert(m, SumTerm::sum(parts, format!("{}^{}", label, m)));
        }
        let mut diffs = BTreeMap::new();
        for (&m, cells) in &by_degree {
            if !by_degree.contains_key(&(m + 1)) {
                continue;
            }
            let src = &terms[&m];
            let dst = &terms[&(m + 1)];
            let mut blocks: Vec<(usize, usize, String, &FpMatrix)> = Vec::new();
            for (si, &(r, s)) in cells.iter().enumerate() {
                if let Some(h) = self.horiz.get(&(r, s)) {
                    let di = dst.parts.iter().position(|p| p.id == format!("r{}s{}", r + 1, s));
                    if let Some(di) = di {
                        blocks.push((si, di, self.horiz_id[&(r, s)].clone(), h));
                    }
                }
                if let Some(v) = self.vert.get(&(r, s)) {
                    let di = dst.parts.iter().position(|p| p.id == format!("r{}s{}", r, s + 1));
                    if let Some(di) = di {
                        blocks.push((si, di, self.vert_id[&(r, s)].clone(), v));
                    }
                }
            }
            diffs.insert(m, Diff::from_blocks(self.p, src, dst, blocks));
        }
        Complex::new(self.p, terms, diffs)
    }
}
