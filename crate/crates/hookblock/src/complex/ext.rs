//! The brute-force Ext oracle: cohomology of Hom complexes over the
//! explicit resolutions, with every Hom space solved exactly.

use super::resolutions::{proj_res_schur, proj_res_simple, proj_res_weyl, r_tot, t_complex};
use super::types::{Complex, VComplex};
use crate::error::{Error, Result};
use crate::functor::{express_in_basis, Lab, PfModule};
use crate::gfp::FpMatrix;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A hook-labelled object of the principal block.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum ObjectKind {
    Simple(usize),
    Schur(usize),
    Weyl(usize),
}

impl ObjectKind {
    pub fn index(self) -> usize {
        match self {
            ObjectKind::Simple(m) | ObjectKind::Schur(m) | ObjectKind::Weyl(m) => m,
        }
    }

    pub fn letter(self) -> char {
        match self {
            ObjectKind::Simple(_) => 'F',
            ObjectKind::Schur(_) => 'S',
            ObjectKind::Weyl(_) => 'W',
        }
    }

    /// Kuhn dual swaps Schur and Weyl and fixes simples.
    pub fn dual(self) -> ObjectKind {
        match self {
            ObjectKind::Simple(m) => ObjectKind::Simple(m),
            ObjectKind::Schur(m) => ObjectKind::Weyl(m),
            ObjectKind::Weyl(m) => ObjectKind::Schur(m),
        }
    }

    pub fn parse(s: &str) -> Result<ObjectKind> {
        let (k, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("object {:?}", s)))?;
        let m: usize =
            rest.trim().parse().map_err(|e| Error::Parse(format!("object index {:?}: {}", rest, e)))?;
        match k.trim() {
            "F" => Ok(ObjectKind::Simple(m)),
            "S" => Ok(ObjectKind::Schur(m)),
            "W" => Ok(ObjectKind::Weyl(m)),
            _ => Err(Error::Parse(format!("object kind {:?}", k))),
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.index())
    }
}

/// Dimensions of Ext groups, nonzero entries only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub from: String,
    pub to: String,
    pub p: u64,
    pub dims: BTreeMap<i64, u64>,
}

impl ExtTable {
    pub fn new(from: impl Into<String>, to: impl Into<String>, p: u64) -> ExtTable {
        ExtTable { from: from.into(), to: to.into(), p, dims: BTreeMap::new() }
    }

    pub fn set(&mut self, q: i64, d: u64) {
        if d > 0 {
            self.dims.insert(q, d);
        }
    }

    pub fn dim(&self, q: i64) -> u64 {
        self.dims.get(&q).copied().unwrap_or(0)
    }

    pub fn same_dims(&self, other: &ExtTable) -> bool {
        self.dims == other.dims
    }
}

/// The concrete module for an object label (simple / Schur / Weyl of a hook).
pub fn object_module(lab: &Lab, x: ObjectKind) -> Arc<PfModule> {
    match x {
        ObjectKind::Simple(m) => lab.simple(m as i64),
        ObjectKind::Schur(m) => lab.schur(m as i64),
        ObjectKind::Weyl(m) => lab.weyl(m as i64),
    }
}

/// Covariant Hom complex `Hom(X, C)`; degrees follow `C`.
fn hom_complex_covariant(lab: &Lab, x: &Arc<PfModule>, c: &Complex) -> VComplex {
    let p = c.p;
    // bases per degree: (part index, k within the part's hom basis)
    let mut basis: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for (&q, term) in &c.terms {
        let mut b = Vec::new();
        for (pi, part) in term.parts.iter().enumerate() {
            let hb = lab.hom(x, &part.module);
            for k in 0..hb.len() {
                b.push((pi, k));
            }
        }
        basis.insert(q, b);
    }
    let mut dims = BTreeMap::new();
    for (&q, b) in &basis {
        dims.insert(q, b.len());
    }
    let mut diffs = BTreeMap::new();
    for (&q, d) in &c.diffs {
        let src_term = &c.terms[&q];
        let dst_term = &c.terms[&(q + 1)];
        let bsrc = &basis[&q];
        let bdst = &basis[&(q + 1)];
        let mut m = FpMatrix::zeros(p, bdst.len(), bsrc.len());
        for (col, &(ai, k)) in bsrc.iter().enumerate() {
            let phi = &lab.hom(x, &src_term.parts[ai].module)[k];
            for &(si, di, _) in &d.blocks {
                if si != ai {
                    continue;
                }
                let block = d.block_of(src_term, dst_term, si, di);
                let composed = block.mul(phi);
                let target_basis = lab.hom(x, &dst_term.parts[di].module);
                let coords = express_in_basis(&composed, &target_basis)
                    .expect("equivariant composite expressible");
                for (row, &(bi2, k2)) in bdst.iter().enumerate() {
                    if bi2 == di {
                        m[(row, col)] = (m[(row, col)] + coords[k2]) % p;
                    }
                }
            }
        }
        diffs.insert(q, m);
    }
    let v = VComplex { p, dims, diffs };
    v.validate();
    v
}

/// Contravariant Hom complex `Hom(P, Y)` for a projective resolution stored
/// in degrees `-N..=0`; the result lives in degrees `0..=N`
/// (`C^q = Hom(P at degree -q, Y)`).
fn hom_complex_contravariant(lab: &Lab, c: &Complex, y: &Arc<PfModule>) -> VComplex {
    let p = c.p;
    let mut basis: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for (&q, term) in &c.terms {
        let mut b = Vec::new();
        for (pi, part) in term.parts.iter().enumerate() {
            let hb = lab.hom(&part.module, y);
            for k in 0..hb.len() {
                b.push((pi, k));
            }
        }
        basis.insert(-q, b);
    }
    let mut dims = BTreeMap::new();
    for (&q, b) in &basis {
        dims.insert(q, b.len());
    }
    let mut diffs = BTreeMap::new();
    // hom differential q -> q+1 precomposes with the complex differential
    // at degree -(q+1)
    for (&cq, d) in &c.diffs {
        // cq: term(cq) -> term(cq+1); this induces Hom(term(cq+1), Y) -> Hom(term(cq), Y),
        // i.e. hom degree (-(cq+1)) -> (-cq)
        let q = -(cq + 1);
        let src_term = &c.terms[&(cq + 1)];
        let dst_term = &c.terms[&cq];
        let bsrc = &basis[&q];
        let bdst = &basis[&(q + 1)];
        let mut m = FpMatrix::zeros(p, bdst.len(), bsrc.len());
        for (col, &(ai, k)) in bsrc.iter().enumerate() {
            let psi = &lab.hom(&src_term.parts[ai].module, y)[k];
            for &(si, di, _) in &d.blocks {
                if di != ai {
                    continue;
                }
                let block = d.block_of(dst_term, src_term, si, di);
                let composed = psi.mul(&block);
                let target_basis = lab.hom(&dst_term.parts[si].module, y);
                let coords = express_in_basis(&composed, &target_basis)
                    .expect("equivariant composite expressible");
                for (row, &(bi2, k2)) in bdst.iter().enumerate() {
                    if bi2 == si {
                        m[(row, col)] = (m[(row, col)] + coords[k2]) % p;
                    }
                }
            }
        }
        diffs.insert(q, m);
    }
    let v = VComplex { p, dims, diffs };
    v.validate();
    v
}

/// Ext dimensions between hook-labelled objects, computed from the explicit
/// resolutions: injective resolutions of Schur and simple targets, projective
/// resolutions of the source for Weyl targets.
pub fn ext_oracle(lab: &Lab, x: ObjectKind, y: ObjectKind, qmax: i64) -> ExtTable {
    let mut table = ExtTable::new(x.to_string(), y.to_string(), lab.p());
    let hom = match y {
        ObjectKind::Schur(n) => {
            let c = t_complex(lab, n as i64);
            hom_complex_covariant(lab, &object_module(lab, x), &c)
        }
        ObjectKind::Simple(n) => {
            let c = r_tot(lab, n as i64);
            hom_complex_covariant(lab, &object_module(lab, x), &c)
        }
        ObjectKind::Weyl(n) => {
            let res = match x {
                ObjectKind::Schur(m) => proj_res_schur(lab, m as i64),
                ObjectKind::Weyl(m) => proj_res_weyl(lab, m as i64),
                ObjectKind::Simple(m) => proj_res_simple(lab, m as i64),
            };
            hom_complex_contravariant(lab, &res.complex, &lab.weyl(n as i64))
        }
    };
    for q in 0..=qmax {
        table.set(q, hom.homology_dim(q) as u64);
    }
    table
}
