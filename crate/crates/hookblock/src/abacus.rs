//! Beta-sequences and bead configurations: p-cores, p-weights, rim p-hook
//! removal and addition, and the bijection from hooks to the p-weight-1
//! diagrams over a fixed core.
//!
//! Conventions: a partition `mu` with `b` beads has beta-sequence
//! `beta_l = mu_l - l` (1-indexed); bead positions are `beta_l + b`, which are
//! distinct non-negative integers. Runner `r` of the abacus holds the
//! positions congruent to `r` mod p, and sliding a bead one space up
//! (position - p) removes a rim p-hook.

use crate::error::{Error, Result};
use crate::partition::{Partition, Prime};

/// A strictly decreasing integer sequence of fixed length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaSeq {
    betas: Vec<i64>,
}

impl BetaSeq {
    pub fn new(betas: Vec<i64>) -> Result<BetaSeq> {
        if !betas.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::NotABetaSequence);
        }
        Ok(BetaSeq { betas })
    }

    pub fn betas(&self) -> &[i64] {
        &self.betas
    }

    pub fn beads(&self) -> usize {
        self.betas.len()
    }
}

/// The beta-sequence of `lam` on `b` beads, padding with `beta_l = -l`.
pub fn beta_sequence(lam: &Partition, b: usize) -> Result<BetaSeq> {
    if b < lam.len() {
        return Err(Error::BeadCountTooSmall(b, lam.len()));
    }
    let betas = (1..=b as i64).map(|l| lam.part(l as usize - 1) as i64 - l).collect();
    Ok(BetaSeq { betas })
}

/// Inverse of `beta_sequence` (up to the choice of bead count).
pub fn partition_of(beta: &BetaSeq) -> Result<Partition> {
    let parts: Vec<i64> = beta.betas.iter().enumerate().map(|(k, &b)| b + k as i64 + 1).collect();
    if parts.iter().any(|&x| x < 0) {
        return Err(Error::NotABetaSequence);
    }
    Partition::new(parts.into_iter().map(|x| x as u32).collect())
        .map_err(|_| Error::NotABetaSequence)
}

/// Bead count used for p-runner computations: a multiple of p that is at
/// least `len(lam) + p`, which makes runner decomposition independent of b.
fn bead_count(lam: &Partition, p: u64) -> usize {
    let min = lam.len() + p as usize;
    min.div_ceil(p as usize) * p as usize
}

/// Sorted-descending bead positions of `lam` on `b` beads.
fn bead_positions(lam: &Partition, b: usize) -> Vec<i64> {
    beta_sequence(lam, b).expect("b >= len").betas().iter().map(|&x| x + b as i64).collect()
}

fn partition_from_positions(mut pos: Vec<i64>) -> Partition {
    pos.sort_unstable_by(|a, b| b.cmp(a));
    let b = pos.len() as i64;
    let parts: Vec<u32> = pos
        .iter()
        .enumerate()
        .map(|(k, &q)| {
            let part = q + k as i64 + 1 - b;
            debug_assert!(part >= 0, "positions do not encode a partition");
            part as u32
        })
        .collect();
    Partition::new(parts).expect("positions encode a partition")
}

/// The p-core (push all beads fully up on each runner) and the p-weight
/// (total number of unit slides).
pub fn p_core_and_weight(lam: &Partition, p: Prime) -> (Partition, u64) {
    let pv = p.get();
    let b = bead_count(lam, pv);
    let pos = bead_positions(lam, b);
    let mut runner_counts = vec![0usize; pv as usize];
    let mut weight = 0u64;
    for &q in &pos {
        runner_counts[(q % pv as i64) as usize] += 1;
        weight += (q / pv as i64) as u64;
    }
    let mut core_pos = Vec::with_capacity(b);
    for (r, &k) in runner_counts.iter().enumerate() {
        for t in 0..k {
            core_pos.push(r as i64 + (t as i64) * pv as i64);
            weight -= t as u64;
        }
    }
    (partition_from_positions(core_pos), weight)
}

/// A rim p-hook inside a diagram, identified by the row of its hand (the
/// north-east-most cell, 1-indexed) and its arm `i`, so the hook shape is
/// `(i+1, 1^{p-i-1})`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RimHook {
    pub hand_row: usize,
    pub arm: u32,
}

/// All removable rim p-hooks of `lam`, ordered by hand row.
pub fn removable_rim_hooks(lam: &Partition, p: Prime) -> Vec<RimHook> {
    let pv = p.get() as i64;
    let b = bead_count(lam, p.get());
    let pos = bead_positions(lam, b); // descending
    let occupied: std::collections::HashSet<i64> = pos.iter().copied().collect();
    let mut out = Vec::new();
    for (idx, &q) in pos.iter().enumerate() {
        if q - pv >= 0 && !occupied.contains(&(q - pv)) {
            let between = ((q - pv + 1)..q).filter(|x| occupied.contains(x)).count() as u32;
            out.push(RimHook { hand_row: idx + 1, arm: p.get() as u32 - 1 - between });
        }
    }
    out
}

/// Removes the described rim p-hook: the beta-sequence entry at the hand row
/// is lowered by p and the sequence re-sorted.
pub fn remove_rim_hook(lam: &Partition, p: Prime, hook: &RimHook) -> Result<Partition> {
    if !removable_rim_hooks(lam, p).contains(hook) {
        return Err(Error::InvalidRimHook(hook.hand_row, hook.arm));
    }
    let b = bead_count(lam, p.get());
    let mut pos = bead_positions(lam, b);
    pos[hook.hand_row - 1] -= p.get() as i64;
    Ok(partition_from_positions(pos))
}

fn assert_core(core: &Partition, p: Prime) -> Result<()> {
    let (c, w) = p_core_and_weight(core, p);
    if w != 0 || &c != core {
        return Err(Error::NotACore(core.to_string(), p.get()));
    }
    Ok(())
}

/// The unique p-weight-1 partition over `core` whose rim p-hook has arm `i`.
///
/// Constructed on the abacus: among the p beads that can slide one space
/// down (the deepest bead of each runner), the (i+1)-th in increasing
/// position order is slid down.
pub fn mu_index(core: &Partition, p: Prime, i: u32) -> Result<Partition> {
    assert_core(core, p)?;
    if i as u64 >= p.get() {
        return Err(Error::IndexRange(i as i64, p.get() as i64 - 1));
    }
    let pv = p.get() as i64;
    let b = bead_count(core, p.get());
    let pos = bead_positions(core, b);
    let occupied: std::collections::HashSet<i64> = pos.iter().copied().collect();
    let mut slidable: Vec<i64> = pos.iter().copied().filter(|&q| !occupied.contains(&(q + pv))).collect();
    slidable.sort_unstable();
    debug_assert_eq!(slidable.len(), p.get() as usize, "one slidable bead per runner");
    let chosen = slidable[i as usize];
    let mut new_pos = pos.clone();
    let k = new_pos.iter().position(|&q| q == chosen).unwrap();
    new_pos[k] += pv;
    let mu = partition_from_positions(new_pos);
    // cross-check: the added hook has arm i and removal recovers the core
    debug_assert!({
        let hooks = removable_rim_hooks(&mu, p);
        hooks.len() == 1
            && hooks[0].arm == i
            && remove_rim_hook(&mu, p, &hooks[0]).unwrap() == *core
    });
    Ok(mu)
}

/// All partitions of `|core| + p` with p-core equal to `core`, found by
/// exhaustive enumeration. Independent oracle for `mu_index`.
pub fn weight1_diagrams(core: &Partition, p: Prime) -> Result<Vec<Partition>> {
    assert_core(core, p)?;
    let e = core.weight() + p.get();
    let all = crate::partition::enumerate_partitions(e)?;
    Ok(all
        .into_iter()
        .filter(|lam| {
            let (c, w) = p_core_and_weight(lam, p);
            w == 1 && &c == core
        })
        .collect())
}

/// Text rendering of the bead configuration as runner diagrams, one line per
/// level, columns = runners, `o` bead / `.` gap.
pub fn runner_diagram(lam: &Partition, p: Prime) -> String {
    let pv = p.get() as usize;
    let b = bead_count(lam, p.get());
    let pos: std::collections::HashSet<i64> = bead_positions(lam, b).into_iter().collect();
    let max_level = pos.iter().map(|&q| q as usize / pv).max().unwrap_or(0);
    let mut lines = Vec::new();
    for level in 0..=max_level {
        let line: String = (0..pv)
            .map(|r| if pos.contains(&((level * pv + r) as i64)) { 'o' } else { '.' })
            .collect();
        lines.push(line);
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, hook_partition, partitions_iter, HookIdx};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }
    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn beta_sequence_examples() {
        let b = beta_sequence(&pt(&[2, 2]), 4).unwrap();
        assert_eq!(b.betas(), &[1, 0, -3, -4]);
        let b = beta_sequence(&Partition::empty(), 3).unwrap();
        assert_eq!(b.betas(), &[-1, -2, -3]);
        assert!(beta_sequence(&pt(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn beta_roundtrip_up_to_weight_12() {
        for e in 0..=12u64 {
            for lam in partitions_iter(e) {
                for b in [lam.len(), lam.len() + 3] {
                    let beta = beta_sequence(&lam, b).unwrap();
                    assert_eq!(partition_of(&beta).unwrap(), lam);
                }
            }
        }
    }

    /// Independent oracle: all ways to remove a connected border strip of
    /// size p leaving a partition, found by brute force over sub-shapes.
    fn rim_hooks_bruteforce(lam: &Partition, p: u64) -> Vec<(Partition, u32)> {
        let mut out = Vec::new();
        if lam.weight() < p {
            return out;
        }
        for rho in partitions_iter(lam.weight() - p) {
            if !lam.contains(&rho) {
                continue;
            }
            // cells of lam/rho
            let mut cells = Vec::new();
            for r in 0..lam.len() {
                for c in rho.part(r)..lam.part(r) {
                    cells.push((r as i64, c as i64));
                }
            }
            // border strip: connected, no 2x2 block
            let connected = {
                let set: std::collections::HashSet<_> = cells.iter().copied().collect();
                let mut seen = std::collections::HashSet::new();
                let mut stack = vec![cells[0]];
                seen.insert(cells[0]);
                while let Some((r, c)) = stack.pop() {
                    for d in [(0, 1), (0, -1), (1, 0), (-1, 0)] {
                        let nb = (r + d.0, c + d.1);
                        if set.contains(&nb) && seen.insert(nb) {
                            stack.push(nb);
                        }
                    }
                }
                seen.len() == cells.len()
            };
            let no_square = {
                let set: std::collections::HashSet<_> = cells.iter().copied().collect();
                !cells.iter().any(|&(r, c)| {
                    set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1))
                })
            };
            if connected && no_square {
                let cols: std::collections::HashSet<_> = cells.iter().map(|&(_, c)| c).collect();
                out.push((rho, cols.len() as u32 - 1));
            }
        }
        out
    }

    #[test]
    fn removable_rim_hooks_match_bruteforce() {
        for p in [2u64, 3, 5] {
            for e in 0..=9u64 {
                for lam in partitions_iter(e) {
                    let abacus: Vec<(Partition, u32)> = removable_rim_hooks(&lam, prime(p))
                        .iter()
                        .map(|h| (remove_rim_hook(&lam, prime(p), h).unwrap(), h.arm))
                        .collect();
                    let mut brute = rim_hooks_bruteforce(&lam, p);
                    let mut ab = abacus.clone();
                    brute.sort();
                    ab.sort();
                    assert_eq!(ab, brute, "lam={:?} p={}", lam, p);
                }
            }
        }
    }

    #[test]
    fn rim_hook_examples() {
        let p2 = prime(2);
        let hooks = removable_rim_hooks(&pt(&[3]), p2);
        assert_eq!(hooks.len(), 1);
        assert_eq!(remove_rim_hook(&pt(&[3]), p2, &hooks[0]).unwrap(), pt(&[1]));
        assert!(removable_rim_hooks(&pt(&[2, 1]), p2).is_empty());
        // the displayed rim 7-hook: (4,3,3,1) minus the hook leaves (2,2)
        let p7 = prime(7);
        let hooks = removable_rim_hooks(&pt(&[4, 3, 3, 1]), p7);
        assert_eq!(hooks.len(), 1);
        assert_eq!(remove_rim_hook(&pt(&[4, 3, 3, 1]), p7, &hooks[0]).unwrap(), pt(&[2, 2]));
        assert_eq!(hooks[0].arm, 3);
    }

    #[test]
    fn p_core_examples() {
        assert_eq!(p_core_and_weight(&pt(&[2, 1]), prime(2)), (pt(&[2, 1]), 0));
        assert_eq!(p_core_and_weight(&pt(&[3]), prime(2)), (pt(&[1]), 1));
        // all hooks of weight p have empty core and weight 1
        for p in [2u64, 3, 5, 7] {
            for i in 0..p as u32 {
                let h = hook_partition(HookIdx::new(prime(p), i).unwrap());
                assert_eq!(p_core_and_weight(&h, prime(p)), (Partition::empty(), 1));
            }
        }
    }

    #[test]
    fn p_core_matches_repeated_removal() {
        // core from the abacus equals the result of stripping rim hooks one
        // at a time, in whatever order the removal list offers
        for p in [2u64, 3] {
            for e in 0..=9u64 {
                for lam in partitions_iter(e) {
                    let (core, weight) = p_core_and_weight(&lam, prime(p));
                    let mut cur = lam.clone();
                    let mut steps = 0;
                    loop {
                        let hooks = removable_rim_hooks(&cur, prime(p));
                        match hooks.first() {
                            None => break,
                            Some(h) => {
                                cur = remove_rim_hook(&cur, prime(p), h).unwrap();
                                steps += 1;
                            }
                        }
                    }
                    assert_eq!((cur, steps), (core, weight), "lam={:?} p={}", lam, p);
                }
            }
        }
    }

    #[test]
    fn removing_a_rim_hook_drops_weight_by_one() {
        for p in [2u64, 3, 5] {
            for e in 0..=9u64 {
                for lam in partitions_iter(e) {
                    let (_, w) = p_core_and_weight(&lam, prime(p));
                    for h in removable_rim_hooks(&lam, prime(p)) {
                        let smaller = remove_rim_hook(&lam, prime(p), &h).unwrap();
                        let (_, w2) = p_core_and_weight(&smaller, prime(p));
                        assert_eq!(w2 + 1, w);
                    }
                }
            }
        }
    }

    #[test]
    fn mu_index_examples() {
        assert_eq!(mu_index(&Partition::empty(), prime(5), 2).unwrap(), pt(&[3, 1, 1]));
        assert_eq!(mu_index(&pt(&[1]), prime(2), 0).unwrap(), pt(&[1, 1, 1]));
        assert_eq!(mu_index(&pt(&[1]), prime(2), 1).unwrap(), pt(&[3]));
        assert!(mu_index(&pt(&[3]), prime(2), 0).is_err()); // (3) is not a 2-core
    }

    #[test]
    fn weight1_diagram_examples() {
        assert_eq!(
            weight1_diagrams(&Partition::empty(), prime(3)).unwrap(),
            vec![pt(&[3]), pt(&[2, 1]), pt(&[1, 1, 1])]
        );
        assert_eq!(weight1_diagrams(&pt(&[1]), prime(2)).unwrap(), vec![pt(&[3]), pt(&[1, 1, 1])]);
    }

    #[test]
    fn mu_index_bijects_onto_weight1_diagrams_small() {
        for p in [2u64, 3, 5] {
            for e in 0..=6u64 {
                for core in partitions_iter(e) {
                    if p_core_and_weight(&core, prime(p)) != (core.clone(), 0) {
                        continue;
                    }
                    let mut img: Vec<Partition> =
                        (0..p as u32).map(|i| mu_index(&core, prime(p), i).unwrap()).collect();
                    for mu in &img {
                        assert_eq!(p_core_and_weight(mu, prime(p)), (core.clone(), 1));
                    }
                    let mut listed = weight1_diagrams(&core, prime(p)).unwrap();
                    assert_eq!(listed.len(), p as usize);
                    img.sort();
                    listed.sort();
                    assert_eq!(img, listed);
                }
            }
        }
    }

    #[test]
    fn enumeration_bound_respected() {
        let core = enumerate_partitions(6)
            .unwrap()
            .into_iter()
            .find(|c| p_core_and_weight(c, prime(7)) == (c.clone(), 0));
        // |core| + p beyond the bound errors out
        let big = pt(&[56]);
        if p_core_and_weight(&big, prime(7)).1 == 0 {
            assert!(weight1_diagrams(&big, prime(7)).is_err());
        }
        let _ = core;
    }
}
