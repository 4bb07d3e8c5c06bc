//! The standard resolutions in the principal block: the truncated Koszul
//! complex as a minimal injective resolution of each Schur functor, the glued
//! complex (dual Koszul, a splice map, then truncated Koszul) as its minimal
//! projective resolution, and the Koszul-by-de-Rham double complex whose
//! totalization resolves each simple functor.

use super::types::{Complex, Diff, DoubleComplex, SumTerm, VComplex};
use crate::functor::{Lab, LinMap, PfModule};
use crate::gfp::FpMatrix;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A resolution: the complex, the augmentation, and the resolved module.
/// Injective: `0 -> X -> C^0 -> C^1 -> ...` (complex in degrees `0..`).
/// Projective: `... -> C^{-1} -> C^0 -> X -> 0` (complex in degrees `..0`).
pub struct Resolution {
    pub complex: Complex,
    pub aug: LinMap,
    pub injective: bool,
}

impl Resolution {
    pub fn resolved(&self) -> &Arc<PfModule> {
        if self.injective {
            &self.aug.src
        } else {
            &self.aug.dst
        }
    }

    /// The augmented complex as plain vector spaces; exactness of the
    /// resolution is the vanishing of all its homology.
    pub fn augmented(&self) -> VComplex {
        let p = self.complex.p;
        let mut dims = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        for (&q, t) in &self.complex.terms {
            dims.insert(q, t.dim());
        }
        for (&q, d) in &self.complex.diffs {
            diffs.insert(q, d.mat.clone());
        }
        if self.injective {
            dims.insert(-1, self.resolved().dim());
            diffs.insert(-1, self.aug.mat.clone());
        } else {
            dims.insert(1, self.resolved().dim());
            diffs.insert(0, self.aug.mat.clone());
        }
        let v = VComplex { p, dims, diffs };
        v.validate();
        v
    }

    pub fn is_exact(&self) -> bool {
        let aug = self.augmented();
        let lo = *aug.dims.keys().next().unwrap();
        let hi = *aug.dims.keys().next_back().unwrap();
        (lo..=hi).all(|q| aug.homology_dim(q) == 0)
    }
}

/// The truncated Koszul complex `Ω^i -> Ω^{i-1} -> ... -> Ω^0` in degrees
/// `0..=i`.
pub fn t_complex(lab: &Lab, i: i64) -> Complex {
    let p = lab.p();
    let mut terms = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for q in 0..=i {
        let x = i - q;
        terms.insert(q, SumTerm::single(format!("O{}", x), lab.omega(x)));
    }
    for q in 0..i {
        let x = i - q;
        let src = &terms[&q];
        let dst = &terms[&(q + 1)];
        let kap = lab.koszul(x);
        diffs.insert(q, Diff::from_blocks(p, src, dst, vec![(0, 0, format!("k{}", x), &kap.mat)]));
    }
    Complex::new(p, terms, diffs)
}

/// The injective resolution of the Schur functor `S_i`.
pub fn t_resolution(lab: &Lab, i: i64) -> Resolution {
    let complex = t_complex(lab, i);
    let aug = lab.schur_incl(i).as_ref().clone();
    Resolution { complex, aug, injective: true }
}

/// The double complex with rows truncated Koszul and columns de Rham:
/// cell `(r, s)` is `Ω^{i+s-r}` for `0 <= r <= p-1`, `0 <= s <= p-i-1`,
/// `r - s <= i`.
pub fn r_double(lab: &Lab, i: i64) -> DoubleComplex {
    let p = lab.p() as i64;
    let mut cells = BTreeMap::new();
    let mut horiz = BTreeMap::new();
    let mut vert = BTreeMap::new();
    let mut horiz_id = BTreeMap::new();
    let mut vert_id = BTreeMap::new();
    let in_grid = |r: i64, s: i64| r >= 0 && r < p && s >= 0 && s < p - i && r - s <= i;
    for r in 0..=p - 1 {
        for s in 0..=p - i - 1 {
            if !in_grid(r, s) {
                continue;
            }
            let x = i + s - r;
            cells.insert((r, s), lab.omega(x));
            if in_grid(r + 1, s) {
                horiz.insert((r, s), lab.koszul(x).mat.clone());
                horiz_id.insert((r, s), format!("k{}", x));
            }
            if in_grid(r, s + 1) {
                vert.insert((r, s), lab.derham(x).mat.clone());
                vert_id.insert((r, s), format!("d{}", x));
            }
        }
    }
    let dc = DoubleComplex { p: lab.p(), cells, horiz, vert, horiz_id, vert_id };
    dc.validate();
    dc
}

/// Totalization of the double complex, an injective resolution of `F_i`.
pub fn r_tot(lab: &Lab, i: i64) -> Complex {
    r_double(lab, i).totalize(format!("R{}", i))
}

pub fn r_resolution(lab: &Lab, i: i64) -> Resolution {
    let complex = r_tot(lab, i);
    let f = lab.simple(i);
    let into_s = lab.simple_incl(i);
    let into_omega = lab.schur_incl(i).compose(&into_s);
    // degree-0 term of the totalization is the single cell (0,0) = Ω^i
    let term0 = complex.term(0).expect("degree 0 cell");
    assert_eq!(term0.parts.len(), 1);
    let aug = LinMap::new(f, Arc::clone(&term0.module), into_omega.mat);
    Resolution { complex, aug, injective: true }
}

/// The glued projective resolution of `S_i`, in degrees `-(2p-2-i)..=0`:
/// dual Koszul terms, the splice `(Ω^{p-1})^# -> Ω^{p-1}` through `Λ^p`, then
/// the truncated Koszul complex down to `Ω^{i+1}`.
pub fn proj_res_schur(lab: &Lab, i: i64) -> Resolution {
    let p = lab.p() as i64;
    let pf = lab.p();
    let len = 2 * p - 2 - i; // top term index
    let mut terms = BTreeMap::new();
    let term_module = |k: i64| -> (String, Arc<PfModule>, bool) {
        if k <= p - 2 - i {
            let x = i + 1 + k;
            (format!("O{}", x), lab.omega(x), false)
        } else {
            let x = 2 * p - 2 - i - k;
            (format!("O{}#", x), lab.omega_dual(x), true)
        }
    };
    for k in 0..=len {
        let (id, m, _) = term_module(k);
        terms.insert(-k, SumTerm::single(id, m));
    }
    let mut diffs = BTreeMap::new();
    for k in 1..=len {
        // differential P_k -> P_{k-1}, i.e. degree -k -> -k+1
        let src = &terms[&-k];
        let dst = &terms[&(-k + 1)];
        let (mat, id) = if k <= p - 2 - i {
            let x = i + 1 + k;
            (lab.koszul(x).mat.clone(), format!("k{}", x))
        } else if k == p - 1 - i {
            // splice: κ_p ∘ (Λ^p ≅ (Λ^p)^#) ∘ κ_p^#
            let kp = lab.koszul(p).mat.clone();
            (kp.mul(&kp.transpose()), "glue".to_string())
        } else {
            let x = 2 * p - 1 - i - k;
            (lab.koszul(x).mat.transpose(), format!("k{}#", x))
        };
        diffs.insert(-k, Diff::from_blocks(pf, src, dst, vec![(0, 0, id, &mat)]));
    }
    let complex = Complex::new(pf, terms, diffs);
    let aug = if i <= p - 2 {
        // κ_{i+1} corestricted to S_i = ker κ_i
        lab.koszul(i + 1).corestrict(&lab.schur_incl(i))
    } else {
        // i = p-1: (Ω^{p-1})^# -> W_{p-1} composed with the iso W_{p-1} ≅ S_{p-1}
        let onto_w = lab.schur_incl(i).dual();
        let w = onto_w.dst.clone();
        let s = lab.schur(i);
        let iso = lab.hom(&w, &s);
        assert_eq!(iso.len(), 1, "W_{{p-1}} and S_{{p-1}} are the same simple");
        assert_eq!(iso[0].rank(), s.dim());
        LinMap::new(w, s, iso[0].clone()).compose(&onto_w)
    };
    Resolution { complex, aug, injective: false }
}

/// Projective resolution of `W_m`: the Kuhn dual of the injective resolution
/// of `S_m`.
pub fn proj_res_weyl(lab: &Lab, m: i64) -> Resolution {
    let complex = t_complex(lab, m).dual(&format!("Wres{}", m));
    let aug = lab.schur_incl(m).dual();
    Resolution { complex, aug, injective: false }
}

/// Projective resolution of `F_m` (realized on the Kuhn dual `F_m^#`, which
/// is the same simple functor): the dual of the totalized double complex.
pub fn proj_res_simple(lab: &Lab, m: i64) -> Resolution {
    let complex = r_tot(lab, m).dual(&format!("Fres{}", m));
    let into_omega = lab.schur_incl(m).compose(&lab.simple_incl(m));
    let aug_mat = into_omega.mat.transpose();
    let src = complex.term(0).expect("degree 0").module.clone();
    let dst = PfModule::dual(&into_omega.src);
    let aug = LinMap::new_unchecked(src, dst, aug_mat);
    Resolution { complex, aug, injective: false }
}

/// Kernels of the Koszul differential with the de Rham differential: the
/// complex `K^0 -> K^1 -> ... -> K^{p-1}` (these kernels are the Schur
/// functors of hooks).
pub fn koszul_kernel_complex(lab: &Lab) -> Complex {
    let p = lab.p() as i64;
    let pf = lab.p();
    let mut terms = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for i in 0..p {
        terms.insert(i, SumTerm::single(format!("S{}", i), lab.schur(i)));
    }
    for i in 0..p - 1 {
        let src = &terms[&i];
        let dst = &terms[&(i + 1)];
        let d = lab.schur_derham(i);
        diffs.insert(i, Diff::from_blocks(pf, src, dst, vec![(0, 0, format!("Sd{}", i), &d.mat)]));
    }
    Complex::new(pf, terms, diffs)
}

/// Checks the Cartier-type description of the Koszul kernel complex:
/// `H^0` has dimension n (the Frobenius twist) and higher cohomology
/// vanishes; moreover `F_i = ker(S_i -> S_{i+1})` degreewise.
pub fn cartier_kernel_check(lab: &Lab) -> crate::report::Report {
    let mut report = crate::report::Report::new(format!("cartier-kernel p={} n={}", lab.p(), lab.n));
    let c = koszul_kernel_complex(lab);
    let h0 = c.homology_dim(0);
    report.expect(
        format!("cartier.h0.p{}", lab.p()),
        h0 == lab.n,
        format!("dim H^0(K) = {} (expected n = {})", h0, lab.n),
    );
    for q in 1..lab.p() as i64 {
        let hq = c.homology_dim(q);
        report.expect(
            format!("cartier.h{}.p{}", q, lab.p()),
            hq == 0,
            format!("dim H^{}(K) = {}", q, hq),
        );
    }
    for i in 0..lab.p() as i64 {
        let ker = lab.schur(i).dim() - lab.schur_derham(i).mat.rank();
        let f = lab.simple(i).dim();
        report.expect(
            format!("cartier.fker{}.p{}", i, lab.p()),
            ker == f,
            format!("dim ker(S_{} -> S_{}) = {} = dim F_{} = {}", i, i + 1, ker, i, f),
        );
    }
    report
}

/// `coker κ_j = S_{j-2}`: dimension plus hook-multiplicity profile.
pub fn cokernel_identification(lab: &Lab) -> crate::report::Report {
    let mut report = crate::report::Report::new(format!("cokernels p={}", lab.p()));
    let p = lab.p() as i64;
    for j in 1..=p - 1 {
        let (coker, _) = lab.koszul(j).cokernel_module(format!("cokerK{}", j));
        let expect_dim = if j >= 2 { lab.schur(j - 2).dim() } else { 0 };
        report.expect(
            format!("coker.dim.k{}.p{}", j, lab.p()),
            coker.dim() == expect_dim,
            format!("dim coker κ_{} = {} (dim S_{} = {})", j, coker.dim(), j - 2, expect_dim),
        );
        if j >= 2 && coker.dim() > 0 {
            // Hom test: standard multiplicities pick out exactly the hook j-2
            for m in 0..p {
                let hook = crate::partition::hook_partition(
                    crate::partition::HookIdx::new(lab.prime, m as u32).unwrap(),
                );
                let mult = lab.multiplicity(&coker, &hook).unwrap();
                let expect = if m == j - 2 { 1 } else { 0 };
                report.expect(
                    format!("coker.mult.k{}.hook{}.p{}", j, m, lab.p()),
                    mult == expect,
                    format!("(coker κ_{} : S_hook({})) = {}", j, m, mult),
                );
            }
        }
    }
    report
}

/// Exhibits `Ω^i` as a direct summand of `S^{p-i} (x) I^(x)i` through the
/// antisymmetrizer idempotent, and spot-checks exactness of `Hom(-, Ω^i)` on
/// the short exact sequences of simples.
pub fn injectivity_audit(lab: &Lab) -> crate::report::Report {
    use crate::functor::{Factor, WordSpace};
    let mut report = crate::report::Report::new(format!("injectivity p={}", lab.p()));
    let p = lab.p();
    let pi = p as i64;
    for i in 1..pi {
        // antisymmetrizer on S^{p-i} (x) I^{(x)i}
        let ws = WordSpace::new(p, lab.n, vec![Factor::Sym((pi - i) as usize), Factor::Tens(i as usize)])
            .expect("ambient fits");
        let amb = PfModule::from_word(&ws, format!("StI{}", i));
        let dim = amb.dim();
        let n = lab.n;
        // c ∘ (1/i!) q : wedge then re-expand, acting on the tensor factor
        let mut mat = FpMatrix::zeros(p, dim, dim);
        let fact: u64 = (1..=i as u64).product::<u64>() % p;
        let inv_fact = crate::gfp::inv_mod(fact, p);
        for k in 0..dim {
            let mon = ws.mon(k);
            let sym = &mon[..n];
            let tens = &mon[n..];
            // wedge: zero on repeats; sign of sorting
            let mut vals: Vec<u8> = tens.to_vec();
            let mut odd = false;
            let mut ok = true;
            for a in 0..vals.len() {
                for b in a + 1..vals.len() {
                    match vals[a].cmp(&vals[b]) {
                        std::cmp::Ordering::Equal => ok = false,
                        std::cmp::Ordering::Greater => odd = !odd,
                        _ => {}
                    }
                }
            }
            if !ok {
                continue;
            }
            vals.sort_unstable();
            // re-expand the wedge with signs
            for (perm, podd) in perms_with_sign(&vals) {
                let mut label = sym.to_vec();
                label.extend_from_slice(&perm);
                let row = ws.index_of(&label).unwrap();
                let sign_odd = odd ^ podd;
                let coeff = if sign_odd { (p - inv_fact) % p } else { inv_fact };
                mat[(row, k)] = (mat[(row, k)] + coeff) % p;
            }
        }
        let idem = LinMap::new(Arc::clone(&amb), Arc::clone(&amb), mat.clone());
        let sq = mat.mul(&mat);
        report.expect(
            format!("inj.idem.i{}.p{}", i, p),
            sq == mat,
            format!("antisymmetrizer on S^{{p-{i}}} (x) I^(x){i} squares to itself"),
        );
        report.expect(
            format!("inj.rank.i{}.p{}", i, p),
            mat.rank() == lab.omega(i).dim(),
            format!("summand rank {} = dim Ω^{} = {}", mat.rank(), i, lab.omega(i).dim()),
        );
        let _ = idem;
    }
    // exactness of Hom(-, Ω^i) on 0 -> F_{j+1} -> W_j -> F_j -> 0 via dims:
    // dim Hom(W_j, Ω^i) = dim Hom(F_j, Ω^i) + dim Hom(F_{j+1}, Ω^i)
    for i in 0..pi {
        let o = lab.omega(i);
        for j in 0..pi {
            let w = lab.weyl(j);
            let fj = lab.simple(j);
            let fj1 = if j + 1 < pi {
                lab.simple(j + 1)
            } else {
                PfModule::zero(p, lab.n, p as usize)
            };
            let a = lab.hom(&w, &o).len();
            let b = lab.hom(&fj, &o).len();
            let c = lab.hom(&fj1, &o).len();
            report.expect(
                format!("inj.homexact.i{}.j{}.p{}", i, j, p),
                a == b + c,
                format!("dim Hom(W_{j}, Ω^{i}) = {} vs {} + {}", a, b, c),
            );
        }
    }
    report
}

pub(crate) fn perms_with_sign(items: &[u8]) -> Vec<(Vec<u8>, bool)> {
    let mut out = Vec::new();
    let mut arr: Vec<u8> = items.to_vec();
    fn rec(arr: &mut Vec<u8>, k: usize, odd: bool, out: &mut Vec<(Vec<u8>, bool)>) {
        if k == arr.len() {
            out.push((arr.clone(), odd));
            return;
        }
        for i in k..arr.len() {
            arr.swap(k, i);
            rec(arr, k + 1, odd ^ (i != k), out);
            arr.swap(k, i);
        }
    }
    rec(&mut arr, 0, false, &mut out);
    out
}
