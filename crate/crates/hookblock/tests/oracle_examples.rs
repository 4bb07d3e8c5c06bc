//! Named Ext values recomputed by the oracle, plus the tensor-dimension
//! cross-check of the Littlewood-Richardson coefficients against explicit
//! Schur-functor dimensions.

use hookblock::complex::{ext_oracle, ObjectKind};
use hookblock::functor::{schur_dim, Lab};
use hookblock::partition::{partitions_iter, Partition, Prime};
use hookblock::tableaux::lr_coefficient;
use std::collections::BTreeMap;

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

#[test]
fn ext_simple_simple_p3() {
    // Ext^q(F_0, F_0) at p=3 is one-dimensional in degrees 0, 2, 4
    let lab = Lab::new(prime(3), 3);
    let t = ext_oracle(&lab, ObjectKind::Simple(0), ObjectKind::Simple(0), 6);
    assert_eq!(t.dims, BTreeMap::from([(0, 1), (2, 1), (4, 1)]));
}

#[test]
fn ext_schur_schur_staircase_p3() {
    // Ext^q(S_m, S_n): q = 0 on the diagonal, degrees n-m-1 and n-m above it
    let lab = Lab::new(prime(3), 3);
    for m in 0..3usize {
        for n in 0..3usize {
            let t = ext_oracle(&lab, ObjectKind::Schur(m), ObjectKind::Schur(n), 6);
            let mut expect = BTreeMap::new();
            if m == n {
                expect.insert(0, 1);
            } else if n > m {
                if n - m >= 2 {
                    expect.insert((n - m - 1) as i64, 1);
                }
                if n == m + 1 {
                    expect.insert(0, 1);
                }
                expect.insert((n - m) as i64, 1);
            }
            assert_eq!(t.dims, expect, "S_{} -> S_{}", m, n);
        }
    }
}

#[test]
fn ext_weyl_schur_is_hom_only() {
    // Ext^q(W_m, S_n) is nonzero only at q = 0 with m = n
    for p in [2u64, 3] {
        let lab = Lab::new(prime(p), p as usize);
        for m in 0..p as usize {
            for n in 0..p as usize {
                let t = ext_oracle(&lab, ObjectKind::Weyl(m), ObjectKind::Schur(n), 2 * p as i64);
                let expect: BTreeMap<i64, u64> =
                    if m == n { BTreeMap::from([(0, 1)]) } else { BTreeMap::new() };
                assert_eq!(t.dims, expect, "p={} W_{} -> S_{}", p, m, n);
            }
        }
    }
}

#[test]
fn golden_koszul_matrix_p2() {
    // frozen dump of the Koszul differential on S^1 (x) Λ^1 at p = n = 2
    let lab = Lab::new(prime(2), 2);
    let dump = lab.koszul(1).dump();
    let json = serde_json::to_string(&dump).unwrap();
    assert_eq!(
        json,
        r#"{"src":"O1","dst":"O0","matrix":[[1,0,0,0],[0,1,1,0],[0,0,0,1]]}"#
    );
}

#[test]
fn lr_tensor_dimension_identity() {
    // sum_mu c^mu_{lam,nu} dim S_mu(k^n) = dim S_lam(k^n) dim S_nu(k^n),
    // with the dimensions computed from the explicit image construction
    let p = 7u64; // characteristic does not matter for these dimensions
    let cases: Vec<(Partition, Partition)> = vec![
        (Partition::new(vec![1]).unwrap(), Partition::new(vec![2, 1]).unwrap()),
        (Partition::new(vec![2]).unwrap(), Partition::new(vec![2, 2]).unwrap()),
        (Partition::new(vec![2, 1]).unwrap(), Partition::new(vec![2, 1]).unwrap()),
        (Partition::new(vec![3, 2]).unwrap(), Partition::new(vec![2]).unwrap()),
        (Partition::new(vec![4, 2]).unwrap(), Partition::new(vec![2]).unwrap()),
    ];
    for (lam, nu) in cases {
        let e = lam.weight() + nu.weight();
        let n = e as usize;
        let lhs: u64 = partitions_iter(e)
            .map(|mu| {
                let c = lr_coefficient(&lam, &nu, &mu).unwrap();
                if c == 0 {
                    0
                } else {
                    c * schur_dim(p, n, &mu).unwrap()
                }
            })
            .sum();
        let rhs = schur_dim(p, n, &lam).unwrap() * schur_dim(p, n, &nu).unwrap();
        assert_eq!(lhs, rhs, "lam={:?} nu={:?}", lam, nu);
    }
}

#[test]
fn lr_tensor_dimension_identity_small_exhaustive() {
    // all (lam, nu) with |lam| + |nu| <= 6, n = 6
    let p = 5u64;
    for e in 1..=6u64 {
        for el in 0..=e {
            for lam in partitions_iter(el) {
                for nu in partitions_iter(e - el) {
                    let lhs: u64 = partitions_iter(e)
                        .map(|mu| {
                            let c = lr_coefficient(&lam, &nu, &mu).unwrap();
                            if c == 0 {
                                0
                            } else {
                                c * schur_dim(p, 6, &mu).unwrap()
                            }
                        })
                        .sum();
                    let rhs = schur_dim(p, 6, &lam).unwrap() * schur_dim(p, 6, &nu).unwrap();
                    assert_eq!(lhs, rhs, "lam={:?} nu={:?}", lam, nu);
                }
            }
        }
    }
}
