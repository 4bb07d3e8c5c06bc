//! Monomial bases for tensor words in symmetric, exterior, divided and
//! tensor powers, with the symbolic action of divided powers of the
//! elementary matrices.
//!
//! The generator `E_{uv}^{(r)}` acts on a tensor word through the
//! comultiplication: it distributes over the factors as all ways of writing
//! `r` as an ordered sum. On the individual factors the action on monomials
//! is:
//!
//! * symmetric power: `x^c -> C(c_v, r) x^(c + r e_u - r e_v)`;
//! * divided power: `x^(c) -> C(c_u + r, r) x^(c + r e_u - r e_v)`;
//! * exterior power: zero for `r >= 2`; for `r = 1`, replace one index `v`
//!   by `u` with the straightening sign;
//! * tensor power: all ways of replacing `r` of the `v` entries by `u`.

use crate::error::{Error, Result};
use std::collections::HashMap;

/// Hard cap on materialized bases.
pub const DIM_BOUND: u128 = 3_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Factor {
    Sym(usize),
    Ext(usize),
    Div(usize),
    Tens(usize),
}

impl Factor {
    pub fn degree(self) -> usize {
        match self {
            Factor::Sym(a) | Factor::Ext(a) | Factor::Div(a) | Factor::Tens(a) => a,
        }
    }

    pub fn dim(self, n: usize) -> u128 {
        fn binom(a: u128, b: u128) -> u128 {
            if b > a {
                return 0;
            }
            let mut r = 1u128;
            for i in 0..b {
                r = r * (a - i) / (i + 1);
            }
            r
        }
        match self {
            Factor::Sym(a) | Factor::Div(a) => binom((n + a - 1) as u128, a as u128),
            Factor::Ext(a) => binom(n as u128, a as u128),
            Factor::Tens(a) => (n as u128).pow(a as u32),
        }
    }

    fn seg_len(self, n: usize) -> usize {
        match self {
            Factor::Sym(_) | Factor::Div(_) => n,
            Factor::Ext(a) | Factor::Tens(a) => a,
        }
    }

    fn enumerate(self, n: usize) -> Vec<Vec<u8>> {
        match self {
            Factor::Sym(a) | Factor::Div(a) => exponent_vectors(n, a),
            Factor::Ext(a) => subsets(n, a),
            Factor::Tens(a) => tuples(n, a),
        }
    }
}

/// Exponent vectors of total degree `a` in `n` slots, first slot largest
/// first.
fn exponent_vectors(n: usize, a: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, a: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if n == 1 {
            let mut v = prefix.clone();
            v.push(a as u8);
            out.push(v);
            return;
        }
        for first in (0..=a).rev() {
            prefix.push(first as u8);
            rec(n - 1, a - first, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if a == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, a, &mut Vec::new(), &mut out);
    out
}

/// Strictly increasing index tuples (0-based) of length `a` from `n` letters.
fn subsets(n: usize, a: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, a: usize, start: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == a {
            out.push(prefix.clone());
            return;
        }
        for x in start..n {
            prefix.push(x as u8);
            rec(n, a, x + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, a, 0, &mut Vec::new(), &mut out);
    out
}

fn tuples(n: usize, a: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..a {
        let mut next = Vec::with_capacity(out.len() * n);
        for t in &out {
            for x in 0..n {
                let mut t2 = t.clone();
                t2.push(x as u8);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// Pascal triangle mod p.
#[derive(Clone)]
pub struct Binomials {
    p: u64,
    table: Vec<Vec<u64>>,
}

impl Binomials {
    pub fn new(p: u64, max: usize) -> Binomials {
        let mut table = vec![vec![0u64; max + 1]; max + 1];
        for i in 0..=max {
            table[i][0] = 1;
            for j in 1..=i {
                table[i][j] = (table[i - 1][j - 1] + if j < i { table[i - 1][j] } else { 0 }) % p;
            }
        }
        Binomials { p, table }
    }

    pub fn get(&self, a: usize, b: usize) -> u64 {
        if b > a {
            0
        } else {
            self.table[a][b]
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

/// A materialized monomial basis for a tensor word evaluated at k^n.
pub struct WordSpace {
    pub p: u64,
    pub n: usize,
    pub factors: Vec<Factor>,
    seg_bounds: Vec<(usize, usize)>, // (offset, len) per factor in the label
    mons: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    binom: Binomials,
}

impl WordSpace {
    pub fn new(p: u64, n: usize, factors: Vec<Factor>) -> Result<WordSpace> {
        let dim: u128 = factors.iter().map(|f| f.dim(n)).product();
        if dim > DIM_BOUND {
            return Err(Error::DegreeBound(dim, DIM_BOUND));
        }
        let mut seg_bounds = Vec::new();
        let mut off = 0;
        for f in &factors {
            let l = f.seg_len(n);
            seg_bounds.push((off, l));
            off += l;
        }
        let mut mons = vec![vec![]];
        for f in &factors {
            let locals = f.enumerate(n);
            let mut next = Vec::with_capacity(mons.len() * locals.len().max(1));
            for m in &mons {
                for loc in &locals {
                    let mut m2 = m.clone();
                    m2.extend_from_slice(loc);
                    next.push(m2);
                }
            }
            mons = next;
        }
        let index = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let degree: usize = factors.iter().map(|f| f.degree()).sum();
        let binom = Binomials::new(p, degree + 2);
        Ok(WordSpace { p, n, factors, seg_bounds, mons, index, binom })
    }

    pub fn dim(&self) -> usize {
        self.mons.len()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.degree()).sum()
    }

    pub fn mon(&self, k: usize) -> &[u8] {
        &self.mons[k]
    }

    pub fn index_of(&self, label: &[u8]) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label_string(&self, k: usize) -> String {
        let mon = &self.mons[k];
        let mut parts = Vec::new();
        for (f, &(off, len)) in self.factors.iter().zip(&self.seg_bounds) {
            let seg = &mon[off..off + len];
            let body: Vec<String> = seg.iter().map(|x| x.to_string()).collect();
            let head = match f {
                Factor::Sym(a) => format!("S{}", a),
                Factor::Ext(a) => format!("L{}", a),
                Factor::Div(a) => format!("G{}", a),
                Factor::Tens(a) => format!("T{}", a),
            };
            parts.push(format!("{}[{}]", head, body.join(",")));
        }
        parts.join("*")
    }

    /// The content (weight) vector of a basis monomial.
    pub fn content(&self, k: usize) -> Vec<u8> {
        let mon = &self.mons[k];
        let mut c = vec![0u8; self.n];
        for (f, &(off, len)) in self.factors.iter().zip(&self.seg_bounds) {
            let seg = &mon[off..off + len];
            match f {
                Factor::Sym(_) | Factor::Div(_) => {
                    for j in 0..self.n {
                        c[j] += seg[j];
                    }
                }
                Factor::Ext(_) | Factor::Tens(_) => {
                    for &x in seg {
                        c[x as usize] += 1;
                    }
                }
            }
        }
        c
    }

    /// `E_{uv}^{(r)}` applied to basis monomial `k` (0-based `u != v`),
    /// as a sparse vector.
    pub fn apply_gen(&self, u: usize, v: usize, r: usize, k: usize) -> Vec<(usize, u64)> {
        let mut acc: HashMap<Vec<u8>, u64> = HashMap::new();
        let mon = self.mons[k].clone();
        self.distribute(&mon, 0, r, 1, &mut Vec::new(), u, v, &mut acc);
        acc.into_iter()
            .filter(|&(_, c)| c % self.p != 0)
            .map(|(label, c)| (self.index[&label], c % self.p))
            .collect()
    }

    fn distribute(
        &self,
        mon: &[u8],
        fidx: usize,
        r_left: usize,
        coeff: u64,
        prefix: &mut Vec<u8>,
        u: usize,
        v: usize,
        acc: &mut HashMap<Vec<u8>, u64>,
    ) {
        if coeff.is_multiple_of(self.p) {
            return;
        }
        if fidx == self.factors.len() {
            if r_left == 0 {
                *acc.entry(prefix.clone()).or_insert(0) += coeff;
            }
            return;
        }
        let (off, len) = self.seg_bounds[fidx];
        let seg = &mon[off..off + len];
        for r_here in 0..=r_left {
            for (local, c) in self.factor_apply(self.factors[fidx], seg, u, v, r_here) {
                let keep = prefix.len();
                prefix.extend_from_slice(&local);
                self.distribute(mon, fidx + 1, r_left - r_here, coeff * c % self.p, prefix, u, v, acc);
                prefix.truncate(keep);
            }
        }
    }

    fn factor_apply(&self, f: Factor, seg: &[u8], u: usize, v: usize, r: usize) -> Vec<(Vec<u8>, u64)> {
        if r == 0 {
            return vec![(seg.to_vec(), 1)];
        }
        match f {
            Factor::Sym(_) => {
                let cv = seg[v] as usize;
                if cv < r {
                    return vec![];
                }
                let coeff = self.binom.get(cv, r);
                if coeff == 0 {
                    return vec![];
                }
                let mut s = seg.to_vec();
                s[v] -= r as u8;
                s[u] += r as u8;
                vec![(s, coeff)]
            }
            Factor::Div(_) => {
                let cv = seg[v] as usize;
                if cv < r {
                    return vec![];
                }
                let coeff = self.binom.get(seg[u] as usize + r, r);
                if coeff == 0 {
                    return vec![];
                }
                let mut s = seg.to_vec();
                s[v] -= r as u8;
                s[u] += r as u8;
                vec![(s, coeff)]
            }
            Factor::Ext(_) => {
                if r >= 2 {
                    return vec![];
                }
                let vu = v as u8;
                let uu = u as u8;
                if !seg.contains(&vu) || seg.contains(&uu) {
                    return vec![];
                }
                let lo = vu.min(uu);
                let hi = vu.max(uu);
                let crossings = seg.iter().filter(|&&t| t != vu && t > lo && t < hi).count();
                let sign = if crossings % 2 == 0 { 1 } else { self.p - 1 };
                let mut s: Vec<u8> = seg.iter().copied().filter(|&t| t != vu).collect();
                s.push(uu);
                s.sort_unstable();
                vec![(s, sign)]
            }
            Factor::Tens(_) => {
                let positions: Vec<usize> =
                    seg.iter().enumerate().filter(|&(_, &x)| x == v as u8).map(|(i, _)| i).collect();
                if positions.len() < r {
                    return vec![];
                }
                let mut out = Vec::new();
                let mut choose = vec![0usize; r];
                fn rec(
                    positions: &[usize],
                    r: usize,
                    start: usize,
                    choose: &mut Vec<usize>,
                    depth: usize,
                    seg: &[u8],
                    u: usize,
                    out: &mut Vec<(Vec<u8>, u64)>,
                ) {
                    if depth == r {
                        let mut s = seg.to_vec();
                        for d in 0..r {
                            s[positions[choose[d]]] = u as u8;
                        }
                        out.push((s, 1));
                        return;
                    }
                    for i in start..positions.len() {
                        choose[depth] = i;
                        rec(positions, r, i + 1, choose, depth + 1, seg, u, out);
                    }
                }
                rec(&positions, r, 0, &mut choose, 0, seg, u, &mut out);
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let ws = WordSpace::new(3, 3, vec![Factor::Sym(3)]).unwrap();
        assert_eq!(ws.dim(), 10); // C(5,3)
        let ws = WordSpace::new(3, 3, vec![Factor::Sym(2), Factor::Ext(1)]).unwrap();
        assert_eq!(ws.dim(), 18); // 6*3
        let ws = WordSpace::new(5, 5, vec![Factor::Ext(5)]).unwrap();
        assert_eq!(ws.dim(), 1); // C(p,p)
        let ws = WordSpace::new(3, 3, vec![Factor::Div(3)]).unwrap();
        assert_eq!(ws.dim(), 10);
        let ws = WordSpace::new(3, 3, vec![Factor::Tens(2)]).unwrap();
        assert_eq!(ws.dim(), 9);
    }

    #[test]
    fn weight_space_dims_match_combinatorial_counts() {
        // for n <= 6, degree <= 7: weight multiplicities of the basic words
        // match the multiset / subset / word counts
        fn count_words(content: &[u8]) -> u64 {
            // multinomial (sum)! / prod c_j!
            let s: u64 = content.iter().map(|&x| x as u64).sum();
            let mut num = 1u64;
            let mut k = 0u64;
            for &c in content {
                for i in 1..=c as u64 {
                    k += 1;
                    num = num * k / i; // binomial running product stays integral
                }
            }
            let _ = s;
            num
        }
        for (n, a) in [(3usize, 4usize), (4, 3), (6, 2), (2, 7)] {
            let ws = WordSpace::new(7, n, vec![Factor::Tens(a)]).unwrap();
            let mut hist: HashMap<Vec<u8>, u64> = HashMap::new();
            for k in 0..ws.dim() {
                *hist.entry(ws.content(k)).or_insert(0) += 1;
            }
            for (content, count) in hist {
                assert_eq!(count, count_words(&content));
            }
            // Sym and Div have one monomial per content, Ext one per 0/1 content
            let ws = WordSpace::new(7, n, vec![Factor::Sym(a)]).unwrap();
            for k in 0..ws.dim() {
                let _ = ws.content(k);
            }
            assert_eq!(ws.dim() as u128, Factor::Sym(a).dim(n));
        }
    }

    #[test]
    fn sym_action_examples() {
        // E_{12}^(1) on x2^2 in S^2(k^2) gives 2 x1 x2
        let ws = WordSpace::new(5, 2, vec![Factor::Sym(2)]).unwrap();
        let k = ws.index_of(&[0, 2]).unwrap();
        let out = ws.apply_gen(0, 1, 1, k);
        assert_eq!(out.len(), 1);
        let (idx, c) = out[0];
        assert_eq!(ws.mon(idx), &[1, 1]);
        assert_eq!(c, 2);
        // E^{(1)} kills p-th powers in S^p, E^{(p)} maps them across
        let ws = WordSpace::new(5, 2, vec![Factor::Sym(5)]).unwrap();
        let k = ws.index_of(&[0, 5]).unwrap();
        assert!(ws.apply_gen(0, 1, 1, k).is_empty());
        let out = ws.apply_gen(0, 1, 5, k);
        assert_eq!(out.len(), 1);
        assert_eq!(ws.mon(out[0].0), &[5, 0]);
        assert_eq!(out[0].1, 1);
    }

    #[test]
    fn ext_action_sign() {
        // E_{13}^(1) on e_3 ^ e_2 basis {1,2} (0-based {0,1,2}): replace 2 by 0
        // in {1,2}: one crossing with 1, sign -1
        let ws = WordSpace::new(5, 3, vec![Factor::Ext(2)]).unwrap();
        let k = ws.index_of(&[1, 2]).unwrap();
        let out = ws.apply_gen(0, 2, 1, k);
        assert_eq!(out.len(), 1);
        assert_eq!(ws.mon(out[0].0), &[0, 1]);
        assert_eq!(out[0].1, 4); // -1 mod 5
    }

    #[test]
    fn tensor_word_comultiplication() {
        // E^{(2)} across S^1 (x) S^1 picks one from each factor
        let ws = WordSpace::new(3, 2, vec![Factor::Sym(1), Factor::Sym(1)]).unwrap();
        let k = ws.index_of(&[0, 1, 0, 1]).unwrap(); // x2 (x) x2
        let out = ws.apply_gen(0, 1, 2, k);
        assert_eq!(out.len(), 1);
        assert_eq!(ws.mon(out[0].0), &[1, 0, 1, 0]);
        assert_eq!(out[0].1, 1);
    }
}
