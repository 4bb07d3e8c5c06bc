//! Semistandard skew tableaux, Yamanouchi word filtering,
//! Littlewood-Richardson coefficients, and the object-level action of the
//! translation functor.
//!
//! The counting primitive follows the tableau conventions used for
//! tensor products of Schur functors of polynomial functors: fillings of a
//! skew shape that are strictly increasing along rows and weakly increasing
//! down columns, whose column-reading word (each column bottom up, columns
//! left to right) is a word of Yamanouchi. Counting those fillings with
//! content `tau` yields the classical coefficient `c^mu_{lambda, tau'}`;
//! `lr_coefficient` conjugates the content so that it returns the classical
//! `c^mu_{lambda, nu}`.

use crate::abacus::p_core_and_weight;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition, Prime};
use std::collections::BTreeMap;

/// True iff every prefix contains at least as many j's as (j+1)'s, for all j.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; max + 2];
    for &x in word {
        if x == 0 {
            return false;
        }
        counts[x as usize] += 1;
        if x >= 2 && counts[x as usize] > counts[x as usize - 1] {
            return false;
        }
    }
    true
}

/// Cells of `outer/inner` in column-reading order: columns left to right,
/// each column bottom up. Rows and columns are 0-indexed.
fn column_order_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    let width = outer.part(0) as usize;
    for j in 0..width {
        // rows holding column j: inner.part(r) <= j < outer.part(r)
        let rows: Vec<usize> = (0..outer.len())
            .filter(|&r| (inner.part(r) as usize) <= j && j < outer.part(r) as usize)
            .collect();
        for &r in rows.iter().rev() {
            cells.push((r, j));
        }
    }
    cells
}

/// Number of row-strict, column-weak fillings of `outer/inner` with the given
/// content whose column-reading word is Yamanouchi.
pub fn column_word_count(outer: &Partition, inner: &Partition, content: &[u32]) -> Result<u64> {
    if !outer.contains(inner) {
        return Err(Error::ShapeNotContained);
    }
    let skew = outer.weight() - inner.weight();
    let total: u64 = content.iter().map(|&x| x as u64).sum();
    if skew != total {
        return Err(Error::WeightMismatch(skew, total));
    }
    let cells = column_order_cells(outer, inner);
    if cells.is_empty() {
        return Ok(1);
    }
    let m = content.len();
    let mut filling: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut used = vec![0u32; m + 1]; // used[v] = how many v's placed so far
    let mut count = 0u64;

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        content: &[u32],
        used: &mut Vec<u32>,
        filling: &mut BTreeMap<(usize, usize), u32>,
        count: &mut u64,
    ) {
        if k == cells.len() {
            *count += 1;
            return;
        }
        let (r, c) = cells[k];
        let m = content.len();
        for v in 1..=m as u32 {
            if used[v as usize] >= content[v as usize - 1] {
                continue;
            }
            // Yamanouchi prefix: after placing v, #v's must not exceed #(v-1)'s
            if v >= 2 && used[v as usize] + 1 > used[v as usize - 1] {
                continue;
            }
            // row-strict: strictly bigger than the left neighbour
            if c > 0 {
                if let Some(&left) = filling.get(&(r, c - 1)) {
                    if v <= left {
                        continue;
                    }
                }
            }
            // column-weak: at most the value below (placed earlier, bottom-up)
            if let Some(&below) = filling.get(&(r + 1, c)) {
                if v > below {
                    continue;
                }
            }
            filling.insert((r, c), v);
            used[v as usize] += 1;
            rec(k + 1, cells, content, used, filling, count);
            used[v as usize] -= 1;
            filling.remove(&(r, c));
        }
    }
    rec(0, &cells, content, &mut used, &mut filling, &mut count);
    Ok(count)
}

/// The classical Littlewood-Richardson coefficient `c^mu_{lambda,nu}`:
/// the multiplicity of the Schur functor of `mu` in the tensor product of
/// the Schur functors of `lambda` and `nu`.
pub fn lr_coefficient(lam: &Partition, nu: &Partition, mu: &Partition) -> Result<u64> {
    if lam.weight() + nu.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lam.weight() + nu.weight(), mu.weight()));
    }
    if !mu.contains(lam) {
        return Ok(0);
    }
    let content: Vec<u32> = nu.conjugate().parts().to_vec();
    column_word_count(mu, lam, &content)
}

/// The translation coefficient `c(i, lam; mu)`: fillings of `mu/lam` with
/// content `(p-i, 1^i)`. Over a p-core `lam` and within its p-weight-1 block
/// this is the indicator of `mu = mu_index(lam, p, i)`.
pub fn hook_translation_coefficient(i: u32, lam: &Partition, mu: &Partition, p: Prime) -> Result<u64> {
    if i as u64 >= p.get() {
        return Err(Error::IndexRange(i as i64, p.get() as i64 - 1));
    }
    if lam.weight() + p.get() != mu.weight() {
        return Err(Error::WeightMismatch(lam.weight() + p.get(), mu.weight()));
    }
    if !mu.contains(lam) {
        return Ok(0);
    }
    let mut content = vec![p.get() as u32 - i];
    content.extend(std::iter::repeat_n(1, i as usize));
    column_word_count(mu, lam, &content)
}

/// Multiplicities of Schur-functor factors of the block projection of
/// `S_lam (x) S_nu`: the LR coefficients `c^mu_{lam,nu}` restricted to `mu`
/// with p-core `lam`. Requires `lam` to be a p-core.
pub fn theta_multiplicities(
    lam: &Partition,
    nu: &Partition,
    p: Prime,
) -> Result<BTreeMap<Partition, u64>> {
    let (core, w) = p_core_and_weight(lam, p);
    if w != 0 || &core != lam {
        return Err(Error::NotACore(lam.to_string(), p.get()));
    }
    let e = lam.weight() + nu.weight();
    let mut out = BTreeMap::new();
    for mu in enumerate_partitions(e)? {
        let (c, _) = p_core_and_weight(&mu, p);
        if &c != lam {
            continue;
        }
        let m = lr_coefficient(lam, nu, &mu)?;
        if m > 0 {
            out.insert(mu, m);
        }
    }
    Ok(out)
}
