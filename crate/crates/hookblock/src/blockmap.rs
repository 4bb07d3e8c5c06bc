//! Block classification by p-cores and the transport of the principal-block
//! answers to every block of p-weight one: relabel the hook-indexed tables
//! through the bijection sending the hook with arm `i` to the weight-one
//! diagram `mu_i` over the chosen core.

use crate::abacus::{mu_index, p_core_and_weight};
use crate::closed::{decomposition_matrix, ext_table, model_schur_yoneda, model_simple_yoneda,
    GradedAlgebraModel};
use crate::complex::{ExtTable, ObjectKind};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition, Prime};
use crate::report::Report;
use crate::tableaux::theta_multiplicities;
use serde::Serialize;
use std::collections::BTreeMap;

/// A block of the degree-e category: its p-core and p-weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockLabel {
    pub e: u64,
    pub p: u64,
    pub core: Partition,
    pub weight: u64,
}

/// Partition of all weights of degree e into blocks, keyed by p-core.
pub fn blocks(e: u64, p: Prime) -> Result<Vec<(BlockLabel, Vec<Partition>)>> {
    let mut by_core: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lam in enumerate_partitions(e)? {
        let (core, _) = p_core_and_weight(&lam, p);
        by_core.entry(core).or_default().push(lam);
    }
    Ok(by_core
        .into_iter()
        .map(|(core, members)| {
            let weight = (e - core.weight()) / p.get();
            (BlockLabel { e, p: p.get(), core, weight }, members)
        })
        .collect())
}

/// Everything known about a p-weight-1 block, re-indexed from the principal
/// block through `i -> mu_i`.
#[derive(Clone, Debug, Serialize)]
pub struct Weight1Bundle {
    pub core: Partition,
    pub p: u64,
    pub e: u64,
    /// `labels[i] = mu_i`, ordered compatibly with the hooks.
    pub labels: Vec<Partition>,
    pub decomposition: Vec<Vec<u64>>,
    /// Ext tables keyed by `"X:mu->Y:nu"` with partition labels.
    pub ext: BTreeMap<String, ExtTable>,
    pub yoneda_schur: GradedAlgebraModel,
    pub yoneda_simple: GradedAlgebraModel,
}

/// The answer bundle of the block of p-core `core` in degree `|core| + p`.
pub fn weight1_block_tables(core: &Partition, p: Prime) -> Result<Weight1Bundle> {
    let (c, w) = p_core_and_weight(core, p);
    if w != 0 || &c != core {
        return Err(Error::NotACore(core.to_string(), p.get()));
    }
    let pv = p.get() as usize;
    let labels: Vec<Partition> =
        (0..pv).map(|i| mu_index(core, p, i as u32)).collect::<Result<_>>()?;
    let mut ext = BTreeMap::new();
    let kinds: Vec<fn(usize) -> ObjectKind> =
        vec![ObjectKind::Simple, ObjectKind::Schur, ObjectKind::Weyl];
    for kx in &kinds {
        for ky in &kinds {
            for m in 0..pv {
                for n in 0..pv {
                    let t = ext_table(kx(m), ky(n), p);
                    let from = format!("{}:{}", kx(m).letter(), labels[m]);
                    let to = format!("{}:{}", ky(n).letter(), labels[n]);
                    let relabeled = ExtTable {
                        from: from.clone(),
                        to: to.clone(),
                        p: p.get(),
                        dims: t.dims,
                    };
                    ext.insert(format!("{}->{}", from, to), relabeled);
                }
            }
        }
    }
    Ok(Weight1Bundle {
        core: core.clone(),
        p: p.get(),
        e: core.weight() + p.get(),
        labels,
        decomposition: decomposition_matrix(p),
        ext,
        yoneda_schur: model_schur_yoneda(p),
        yoneda_simple: model_simple_yoneda(p),
    })
}

/// Every diagram of weight `p < e < 2p` has p-weight at most one.
pub fn weight_bound_check(e: u64, p: Prime) -> Result<Report> {
    if !(p.get() < e && e < 2 * p.get()) {
        return Err(Error::IndexRange(e as i64, 2 * p.get() as i64 - 1));
    }
    let mut rep = Report::new(format!("weight-bound e={} p={}", e, p));
    let mut all_ok = true;
    let mut count = 0usize;
    for lam in enumerate_partitions(e)? {
        let (_, w) = p_core_and_weight(&lam, p);
        if w > 1 {
            all_ok = false;
        }
        count += 1;
    }
    rep.expect(
        format!("weightbound.e{}.p{}", e, p),
        all_ok,
        format!("all {} partitions of {} have {}-weight <= 1", count, e, p),
    );
    Ok(rep)
}

/// The failure of the translation construction at p-weight 2: over the
/// 2-core (1), the product of Schur functors labelled (1) and (2,2) splits
/// into two block factors, so the image is not a single Schur functor.
pub fn theta_counterexample() -> Report {
    let p = Prime::new(2).unwrap();
    let mut rep = Report::new("theta-counterexample p=2".to_string());
    let core = Partition::new(vec![1]).unwrap();
    let nu = Partition::new(vec![2, 2]).unwrap();
    let result = theta_multiplicities(&core, &nu, p).expect("core is a 2-core");
    let expect: BTreeMap<Partition, u64> = BTreeMap::from([
        (Partition::new(vec![3, 2]).unwrap(), 1),
        (Partition::new(vec![2, 2, 1]).unwrap(), 1),
    ]);
    rep.expect(
        "theta.factors",
        result == expect,
        format!("multiplicities {:?}", result),
    );
    rep.expect("theta.count", result.len() == 2, "two distinct factors, not one Schur functor");
    for mu in result.keys() {
        let (c, _) = p_core_and_weight(mu, p);
        rep.expect(
            format!("theta.core.{}", mu),
            c == core,
            "factor stays in the block of 2-core (1)",
        );
    }
    rep
}
