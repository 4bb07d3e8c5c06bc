//! The canonical maps between evaluated functors: Koszul and de Rham
//! differentials on `S^{e-i} (x) Lambda^i`, and the Schur / Weyl / simple
//! constructions through antisymmetrization and multiplication.

use super::module::{module_from_span, PfModule, SparseSpan};
use super::word::{Factor, WordSpace};
use crate::gfp::FpMatrix;
use crate::partition::Partition;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Matrix of the Koszul differential
/// `S^{e-i}(V) (x) Λ^i(V) -> S^{e-i+1}(V) (x) Λ^{i-1}(V)`:
/// comultiply the exterior factor, multiply into the symmetric one.
pub fn koszul_matrix(src: &WordSpace, dst: &WordSpace) -> FpMatrix {
    let p = src.p;
    let n = src.n;
    let mut m = FpMatrix::zeros(p, dst.dim(), src.dim());
    for k in 0..src.dim() {
        let mon = src.mon(k);
        let c = &mon[..n];
        let t = &mon[n..];
        for (pos, &idx) in t.iter().enumerate() {
            let mut label = Vec::with_capacity(mon.len() - 1);
            label.extend_from_slice(c);
            label[idx as usize] += 1;
            label.extend(t.iter().enumerate().filter(|&(q, _)| q != pos).map(|(_, &x)| x));
            let sign = if pos % 2 == 0 { 1 } else { p - 1 };
            let row = dst.index_of(&label).expect("koszul image leaves the basis");
            m[(row, k)] = (m[(row, k)] + sign) % p;
        }
    }
    m
}

/// Matrix of the de Rham differential
/// `S^{e-i}(V) (x) Λ^i(V) -> S^{e-i-1}(V) (x) Λ^{i+1}(V)`:
/// comultiply the symmetric factor, multiply into the exterior one.
pub fn derham_matrix(src: &WordSpace, dst: &WordSpace) -> FpMatrix {
    let p = src.p;
    let n = src.n;
    let mut m = FpMatrix::zeros(p, dst.dim(), src.dim());
    if dst.dim() == 0 {
        return m;
    }
    for k in 0..src.dim() {
        let mon = src.mon(k);
        let c = &mon[..n];
        let t = &mon[n..];
        for j in 0..n {
            if c[j] == 0 || t.contains(&(j as u8)) {
                continue;
            }
            let coeff = c[j] as u64 % p;
            if coeff == 0 {
                continue;
            }
            let crossings = t.iter().filter(|&&x| (x as usize) < j).count();
            let sign = if crossings % 2 == 0 { coeff } else { (p - coeff) % p };
            let mut label = Vec::with_capacity(mon.len() + 1);
            label.extend_from_slice(c);
            label[j] -= 1;
            let mut tt: Vec<u8> = t.to_vec();
            tt.push(j as u8);
            tt.sort_unstable();
            label.extend_from_slice(&tt);
            let row = dst.index_of(&label).expect("de Rham image leaves the basis");
            m[(row, k)] = (m[(row, k)] + sign) % p;
        }
    }
    m
}

fn permutations_with_sign(items: &[u8]) -> Vec<(Vec<u8>, bool)> {
    // (permutation, parity is odd)
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

/// Column heights of `lam` (its conjugate parts).
fn column_heights(lam: &Partition) -> Vec<usize> {
    lam.conjugate().parts().iter().map(|&x| x as usize).collect()
}

/// Expands one basis element of `Λ^λ` (a set of row indices per row) through
/// antisymmetrization followed by column-wise multiplication into the word
/// `S^{λ'_1} (x) ... (x) S^{λ'_k}`. Keys are codomain labels.
fn expand_row_sets(
    lam: &Partition,
    n: usize,
    p: u64,
    row_sets: &[Vec<u8>],
) -> BTreeMap<Vec<u8>, u64> {
    let mut heights = column_heights(lam);
    if heights.is_empty() {
        heights.push(0);
    }
    let per_row: Vec<Vec<(Vec<u8>, bool)>> =
        row_sets.iter().map(|t| permutations_with_sign(t)).collect();
    let mut acc: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
    let mut choice = vec![0usize; per_row.len()];
    loop {
        // assemble the assignment: cell (r, j) = per_row[r][choice[r]].0[j]
        let mut odd = false;
        for (r, &ch) in choice.iter().enumerate() {
            odd ^= per_row[r][ch].1;
        }
        let mut label = Vec::new();
        for (j, &h) in heights.iter().enumerate() {
            let mut exps = vec![0u8; n];
            for r in 0..h {
                let val = per_row[r][choice[r]].0[j];
                exps[val as usize] += 1;
            }
            label.extend_from_slice(&exps);
        }
        let coeff = if odd { p - 1 } else { 1 };
        let cur = acc.entry(label).or_insert(0);
        *cur = (*cur + coeff) % p;
        // odometer
        let mut r = 0;
        loop {
            if r == choice.len() {
                acc.retain(|_, c| *c % p != 0);
                return acc;
            }
            choice[r] += 1;
            if choice[r] < per_row[r].len() {
                break;
            }
            choice[r] = 0;
            r += 1;
        }
    }
}

/// Word space `S^{λ'_1} (x) ... (x) S^{λ'_k}` that receives the Schur functor.
pub fn schur_ambient(p: u64, n: usize, lam: &Partition) -> crate::error::Result<WordSpace> {
    let heights = column_heights(lam);
    let factors: Vec<Factor> = heights.iter().map(|&h| Factor::Sym(h)).collect();
    let factors = if factors.is_empty() { vec![Factor::Sym(0)] } else { factors };
    WordSpace::new(p, n, factors)
}

fn lambda_word(p: u64, n: usize, lam: &Partition) -> crate::error::Result<WordSpace> {
    let factors: Vec<Factor> = lam.parts().iter().map(|&a| Factor::Ext(a as usize)).collect();
    let factors = if factors.is_empty() { vec![Factor::Ext(0)] } else { factors };
    WordSpace::new(p, n, factors)
}

fn row_sets_of(ws: &WordSpace, lam: &Partition, k: usize) -> Vec<Vec<u8>> {
    let mon = ws.mon(k);
    let mut out = Vec::new();
    let mut off = 0;
    for &a in lam.parts() {
        out.push(mon[off..off + a as usize].to_vec());
        off += a as usize;
    }
    if lam.is_empty() {
        out.push(vec![]);
    }
    out
}

/// The Schur functor of `lam` at k^n, realized as the image of
/// antisymmetrize-then-multiply, inside `schur_ambient`.
pub fn schur_module_def(
    p: u64,
    n: usize,
    lam: &Partition,
    label: impl Into<String>,
) -> crate::error::Result<(Arc<PfModule>, SparseSpan, WordSpace)> {
    let dom = lambda_word(p, n, lam)?;
    let cod = schur_ambient(p, n, lam)?;
    let mut vectors = Vec::with_capacity(dom.dim());
    for k in 0..dom.dim() {
        let sets = row_sets_of(&dom, lam, k);
        let expanded = expand_row_sets(lam, n, p, &sets);
        let sparse: BTreeMap<usize, u64> = expanded
            .into_iter()
            .map(|(l, c)| (cod.index_of(&l).expect("schur image label"), c))
            .collect();
        if !sparse.is_empty() {
            vectors.push(sparse);
        }
    }
    let (module, span) = module_from_span(&cod, vectors, label);
    Ok((module, span, cod))
}

/// Rank of the Schur construction only (no module), sparse all the way: the
/// domain `Λ^λ` is iterated lazily so large tensor ambients never
/// materialize. Used for dimension cross-checks up to weight 8.
pub fn schur_dim(p: u64, n: usize, lam: &Partition) -> crate::error::Result<u64> {
    fn all_subsets(n: usize, a: usize) -> Vec<Vec<u8>> {
        fn rec(n: usize, a: usize, start: usize, pre: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if pre.len() == a {
                out.push(pre.clone());
                return;
            }
            for x in start..n {
                pre.push(x as u8);
                rec(n, a, x + 1, pre, out);
                pre.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, a, 0, &mut Vec::new(), &mut out);
        out
    }
    let per_row: Vec<Vec<Vec<u8>>> = if lam.is_empty() {
        vec![vec![vec![]]]
    } else {
        lam.parts().iter().map(|&a| all_subsets(n, a as usize)).collect()
    };
    if per_row.iter().any(|r| r.is_empty()) {
        return Ok(0);
    }
    let mut span: Vec<BTreeMap<Vec<u8>, u64>> = Vec::new();
    let mut pivots: Vec<Vec<u8>> = Vec::new();
    let mut choice = vec![0usize; per_row.len()];
    loop {
        let sets: Vec<Vec<u8>> = choice.iter().zip(&per_row).map(|(&c, r)| r[c].clone()).collect();
        let mut v = expand_row_sets(lam, n, p, &sets);
        loop {
            v.retain(|_, c| *c % p != 0);
            let Some((piv, &c)) = v.iter().next().map(|(k2, c)| (k2.clone(), c)) else { break };
            match pivots.binary_search(&piv) {
                Ok(idx) => {
                    let row = span[idx].clone();
                    for (j, rv) in row {
                        let cur = v.entry(j).or_insert(0);
                        *cur = (*cur + (p - c % p) * rv) % p;
                    }
                }
                Err(idx) => {
                    let inv = crate::gfp::inv_mod(c, p);
                    let v2: BTreeMap<Vec<u8>, u64> =
                        v.into_iter().map(|(j, x)| (j, x * inv % p)).collect();
                    span.insert(idx, v2);
                    pivots.insert(idx, piv);
                    break;
                }
            }
        }
        let mut r = 0;
        loop {
            if r == choice.len() {
                return Ok(span.len() as u64);
            }
            choice[r] += 1;
            if choice[r] < per_row[r].len() {
                break;
            }
            choice[r] = 0;
            r += 1;
        }
    }
}

/// All words (ordered arrangements) with the given content.
fn words_of_content(content: &[u8], len: usize) -> Vec<Vec<u8>> {
    fn rec(left: &mut Vec<u8>, len: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for j in 0..left.len() {
            if left[j] == 0 {
                continue;
            }
            left[j] -= 1;
            prefix.push(j as u8);
            rec(left, len, prefix, out);
            prefix.pop();
            left[j] += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut content.to_vec(), len, &mut Vec::new(), &mut out);
    out
}

/// The Weyl functor of `lam` at k^n: image of comultiply-then-wedge,
/// inside `Λ^{λ_1} (x) ... (x) Λ^{λ_r}`.
pub fn weyl_module_def(
    p: u64,
    n: usize,
    lam: &Partition,
    label: impl Into<String>,
) -> crate::error::Result<(Arc<PfModule>, SparseSpan, WordSpace)> {
    let heights = column_heights(lam);
    let dom_factors: Vec<Factor> = if heights.is_empty() {
        vec![Factor::Div(0)]
    } else {
        heights.iter().map(|&h| Factor::Div(h)).collect()
    };
    let dom = WordSpace::new(p, n, dom_factors)?;
    let cod = lambda_word(p, n, lam)?;
    let rows = lam.len().max(1);
    let mut vectors = Vec::new();
    for k in 0..dom.dim() {
        let mon = dom.mon(k);
        // arrangements per column
        let mut per_col: Vec<Vec<Vec<u8>>> = Vec::new();
        let mut off = 0;
        for &h in &heights {
            per_col.push(words_of_content(&mon[off..off + n], h));
            off += n;
        }
        if heights.is_empty() {
            per_col.push(vec![vec![]]);
        }
        let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
        let mut choice = vec![0usize; per_col.len()];
        'outer: loop {
            // row-wise wedge
            let mut coeff = 1u64;
            let mut label_out: Vec<u8> = Vec::new();
            let mut ok = true;
            for r in 0..rows {
                let width = lam.part(r) as usize;
                let mut vals: Vec<u8> = Vec::with_capacity(width);
                for j in 0..width {
                    vals.push(per_col[j][choice[j]][r]);
                }
                // wedge: zero on repeats, sign of sorting
                let mut odd = false;
                for a in 0..vals.len() {
                    for b in a + 1..vals.len() {
                        match vals[a].cmp(&vals[b]) {
                            std::cmp::Ordering::Equal => {
                                ok = false;
                            }
                            std::cmp::Ordering::Greater => {
                                odd = !odd;
                            }
                            _ => {}
                        }
                    }
                }
                if !ok {
                    break;
                }
                if odd {
                    coeff = (p - coeff) % p;
                }
                vals.sort_unstable();
                label_out.extend_from_slice(&vals);
            }
            if ok {
                let idx = cod.index_of(&label_out).expect("weyl image label");
                let cur = acc.entry(idx).or_insert(0);
                *cur = (*cur + coeff) % p;
            }
            let mut c = 0;
            loop {
                if c == choice.len() {
                    break 'outer;
                }
                choice[c] += 1;
                if choice[c] < per_col[c].len() {
                    break;
                }
                choice[c] = 0;
                c += 1;
            }
        }
        acc.retain(|_, c| *c % p != 0);
        if !acc.is_empty() {
            vectors.push(acc);
        }
    }
    let (module, span) = module_from_span(&cod, vectors, label);
    Ok((module, span, cod))
}

/// The simple functor of `lam`: the image of the Weyl functor inside the
/// Schur functor under antisymmetrize-then-multiply, carried as a submodule
/// of the Schur module with its designated embedding.
pub fn simple_module_def(
    p: u64,
    n: usize,
    lam: &Partition,
    schur: &Arc<PfModule>,
    schur_span: &SparseSpan,
    cod: &WordSpace,
    label: impl Into<String>,
) -> crate::error::Result<(Arc<PfModule>, super::module::LinMap)> {
    let (_, wspan, wcod) = weyl_module_def(p, n, lam, "Wtmp")?;
    // push each Weyl basis vector through the Schur expansion
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for wrow in &wspan.rows {
        let mut image: BTreeMap<usize, u64> = BTreeMap::new();
        for (&lidx, &c) in wrow {
            let sets = row_sets_of(&wcod, lam, lidx);
            for (l, c2) in expand_row_sets(lam, n, p, &sets) {
                let idx = cod.index_of(&l).expect("schur image label");
                let cur = image.entry(idx).or_insert(0);
                *cur = (*cur + c * c2) % p;
            }
        }
        image.retain(|_, c| *c % p != 0);
        let coords = schur_span.coords_of(&image).expect("image of Weyl lies in Schur");
        rows.push(coords);
    }
    let space = crate::gfp::Subspace::from_rows(&FpMatrix::from_rows(
        p,
        if rows.is_empty() { vec![vec![0; schur.dim()]] } else { rows },
    ));
    Ok(PfModule::submodule(schur, &space, label))
}
