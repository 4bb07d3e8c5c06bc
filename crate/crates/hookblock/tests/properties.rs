//! Property tests over randomly generated partitions and matrices.

use hookblock::abacus::{beta_sequence, p_core_and_weight, partition_of, removable_rim_hooks};
use hookblock::gfp::FpMatrix;
use hookblock::partition::{dominates_reversed, Partition, Prime};
use proptest::prelude::*;

fn arb_partition(max_weight: u64) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=6, 0..6).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0u64;
        parts.retain(|p: &u32| {
            total += *p as u64;
            total <= max_weight
        });
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in arb_partition(24)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn conjugation_preserves_weight(lam in arb_partition(24)) {
        prop_assert_eq!(lam.conjugate().weight(), lam.weight());
    }

    #[test]
    fn beta_roundtrip(lam in arb_partition(24), extra in 0usize..5) {
        let b = lam.len() + extra;
        let beta = beta_sequence(&lam, b).unwrap();
        prop_assert_eq!(partition_of(&beta).unwrap(), lam);
    }

    #[test]
    fn core_weight_arithmetic(lam in arb_partition(24), pi in 0usize..3) {
        let p = Prime::new([2u64, 3, 5][pi]).unwrap();
        let (core, w) = p_core_and_weight(&lam, p);
        prop_assert_eq!(core.weight() + p.get() * w, lam.weight());
        // the core really is a core
        let (cc, cw) = p_core_and_weight(&core, p);
        prop_assert_eq!((cc, cw), (core.clone(), 0));
        prop_assert!(removable_rim_hooks(&core, p).is_empty());
    }

    #[test]
    fn reversed_dominance_antisymmetry(a in arb_partition(10), b in arb_partition(10)) {
        if a.weight() == b.weight() {
            let ab = dominates_reversed(&a, &b).unwrap();
            let ba = dominates_reversed(&b, &a).unwrap();
            if ab && ba {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn rref_is_idempotent_and_rank_nullity(
        entries in proptest::collection::vec(0u64..5, 30),
    ) {
        let m = FpMatrix::from_fn(5, 5, 6, |i, j| entries[i * 6 + j]);
        let r = m.rref();
        let r2 = r.mat.rref();
        prop_assert_eq!(&r.mat, &r2.mat);
        prop_assert_eq!(r.rank, r2.rank);
        let k = m.kernel();
        prop_assert_eq!(r.rank + k.cols(), 6);
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn parse_display_roundtrip(lam in arb_partition(24)) {
        let s = lam.to_string();
        prop_assert_eq!(s.parse::<Partition>().unwrap(), lam);
    }
}
