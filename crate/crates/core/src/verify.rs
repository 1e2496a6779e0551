//! The property suite behind `outerplanar verify`, plus the product identities it uses.
//!
//! Every check runs over all degree tuples with positive entries and `|d| ≤ max_sum`.
//! Randomness (which graph to split, and how) comes from a ChaCha stream seeded per tuple,
//! so the report depends only on `max_sum` and the seed.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::charring::{multiplicity, multiplicity_by_recursion};
use crate::decomp::{decompose, intertwines};
use crate::opgraph::{
    count_graphs, enumerate_graphs, graph_from_leading, leading_basis_exponents, OuterplanarGraph,
};
use crate::oracle::{invariant_subspace_bruteforce, isotypic_dims_by_weights, span_equals};
use crate::sl2act::{act_group, act_lie, GroupElement, LieGenerator};
use crate::tensorspace::{build_t_g, build_t_g_family, SparseTensor, TensorSpace};
use crate::{Degrees, Result};

/// All tuples of positive integers with sum at most `max_sum`, by increasing sum and then
/// lexicographically.
pub fn compositions(max_sum: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_sum {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Assigns each edge copy of `g` to one of `parts` subgraphs uniformly at random; returns
/// the per-part arc multiplicities.
pub fn random_partition(g: &OuterplanarGraph, parts: usize, rng: &mut impl Rng) -> Vec<Vec<u32>> {
    let mut split = vec![vec![0u32; g.arcs().len()]; parts];
    for (c, a) in g.arcs().iter().enumerate() {
        for _ in 0..a.multiplicity {
            split[rng.gen_range(0..parts)][c] += 1;
        }
    }
    split
}

/// `t_G = t_{G_1} ⋯ t_{G_k}` for an unrooted graph split along its edges.
pub fn check_edge_product(g: &OuterplanarGraph, split: &[Vec<u32>]) -> Result<bool> {
    let mut product: Option<SparseTensor> = None;
    for part in split {
        let t = build_t_g(&g.subgraph(part)?)?;
        product = Some(match product {
            None => t,
            Some(p) => p.componentwise_product(&t)?,
        });
    }
    let whole = build_t_g(g)?;
    Ok(product.is_none_or(|p| p == whole))
}

/// `t_{G,i} = Σ_{i_1 + … + i_k = i} t_{G_1,i_1} ⋯ t_{G_k,i_k}` for a rooted graph.
pub fn check_rooted_edge_product(g: &OuterplanarGraph, split: &[Vec<u32>]) -> Result<bool> {
    let whole = build_t_g_family(g)?;
    let d0 = whole.len() - 1;
    // sums[i] accumulates the right-hand side for root in-degree i
    let mut sums: Vec<Option<SparseTensor>> = vec![None; 1];
    for part in split {
        let family = build_t_g_family(&g.subgraph(part)?)?;
        let mut next: Vec<Option<SparseTensor>> = vec![None; sums.len() + family.len() - 1];
        for (i, acc) in sums.iter().enumerate() {
            for (j, t) in family.iter().enumerate() {
                let term = match acc {
                    None => t.clone(),
                    Some(a) => a.componentwise_product(t)?,
                };
                next[i + j] = Some(match next[i + j].take() {
                    None => term,
                    Some(s) => s.checked_add(&term)?,
                });
            }
        }
        sums = next;
    }
    if split.is_empty() {
        return Ok(true);
    }
    Ok(sums.len() == d0 + 1
        && sums
            .into_iter()
            .zip(&whole)
            .all(|(s, w)| s.as_ref() == Some(w)))
}

/// `t_{G,i} = t_{G*,i} · t_{G_0}` with `G*` the root star and `G_0` the rest.
pub fn check_star_factorization(g: &OuterplanarGraph) -> Result<bool> {
    let whole = build_t_g_family(g)?;
    let star = build_t_g_family(&g.root_star()?)?;
    let rest = build_t_g(&g.without_root()?)?;
    for (w, s) in whole.iter().zip(&star) {
        if &s.componentwise_product(&rest)? != w {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(case());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub max_sum: u32,
    pub seed: u64,
    pub tuples: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "verify: {} tuples with |d| <= {}, seed {}",
            self.tuples, self.max_sum, self.seed
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{status}  {:<width$}  {:>6} cases  {} failures",
                c.name,
                c.cases,
                c.failures.len()
            );
            for f in c.failures.iter().take(5) {
                let _ = writeln!(s, "      {f}");
            }
        }
        s
    }
}

/// Runs every check over all tuples with positive degrees and `|d| ≤ max_sum`.
pub fn run_suite(max_sum: u32, seed: u64) -> Result<SuiteReport> {
    let tuples = compositions(max_sum);
    let mut multiplicities = CheckResult::new("multiplicity routes agree");
    let mut residue = CheckResult::new("multiplicity = rooted graph count");
    let mut oracle = CheckResult::new("t_G spans the brute-force invariants");
    let mut invariance = CheckResult::new("t_G killed by E, F and unipotents");
    let mut round_trip = CheckResult::new("bracket word round trip");
    let mut rank = CheckResult::new("full basis has full rank");
    let mut intertwining = CheckResult::new("s_G intertwines E, F, H");
    let mut weights = CheckResult::new("H t_{G,i} = (2i - d0) t_{G,i}");
    let mut products = CheckResult::new("edge-partition product identities");

    let unipotents = [
        GroupElement::from_integers(1, 1, 0, 1)?,
        GroupElement::from_integers(1, 0, 1, 1)?,
    ];

    for d in &tuples {
        let degrees = Degrees::new(d.clone())?;
        let label = || format!("d = ({degrees})");
        let total = degrees.total();
        let weight_counts = isotypic_dims_by_weights(&degrees);

        for k in 0..=total {
            let a = multiplicity(&degrees, k);
            let b = multiplicity_by_recursion(&degrees, k);
            let c = weight_counts.get(k);
            multiplicities.record(a == b && b == c, || format!("{}, k = {k}", label()));

            let rooted = degrees.with_root(k as u32);
            let count = count_graphs(&rooted, true);
            let listed = BigUint::from(enumerate_graphs(&rooted, true).len());
            let as_invariants = multiplicity(&Degrees::new(rooted)?, 0);
            residue.record(a == count && count == listed && a == as_invariants, || {
                format!("{}, d0 = {k}", label())
            });
        }

        let graphs = enumerate_graphs(d, false);
        let tensors = graphs.iter().map(build_t_g).collect::<Result<Vec<_>>>()?;
        let kernel = invariant_subspace_bruteforce(&degrees)?;
        oracle.record(
            kernel.len() == graphs.len()
                && BigUint::from(graphs.len()) == multiplicity(&degrees, 0)
                && span_equals(&tensors, &kernel)?,
            label,
        );
        for (g, t) in graphs.iter().zip(&tensors) {
            let ok = act_lie(LieGenerator::E, t).is_zero()
                && act_lie(LieGenerator::F, t).is_zero()
                && unipotents.iter().all(|u| &act_group(u, t) == t);
            invariance.record(ok, || format!("{}, G = {g}", label()));
        }

        let report = decompose(&degrees)?;
        rank.record(report.verification.is_some_and(|v| v.rank), label);
        let space = TensorSpace::new(d.clone());
        for comp in &report.components {
            for gb in &comp.graphs {
                let g = &gb.graph;
                intertwining.record(intertwines(comp.d0, &gb.tensors), || {
                    format!("{}, G = {g}", label())
                });
                let ok = gb.tensors.iter().enumerate().all(|(i, t)| {
                    let w = 2 * i as i64 - i64::from(comp.d0);
                    t.iter().all(|(e, _)| space.weight(e) == w)
                        && act_lie(LieGenerator::H, t)
                            == t.scale(&num_rational::BigRational::from_integer(w.into()))
                });
                weights.record(ok, || format!("{}, G = {g}", label()));
                let back = graph_from_leading(&leading_basis_exponents(g), true)?;
                round_trip.record(&back == g, || format!("{}, G = {g}", label()));
            }
        }

        // one random rooted graph and one random invariant graph per tuple
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ hash_tuple(d));
        let rooted: Vec<&OuterplanarGraph> = report
            .components
            .iter()
            .flat_map(|c| c.graphs.iter().map(|g| &g.graph))
            .collect();
        let g = rooted[rng.gen_range(0..rooted.len())];
        let parts = rng.gen_range(1..=3);
        let split = random_partition(g, parts, &mut rng);
        let ok = check_rooted_edge_product(g, &split)? && check_star_factorization(g)?;
        products.record(ok, || format!("{}, G = {g}, split {split:?}", label()));
        if !graphs.is_empty() {
            let g = &graphs[rng.gen_range(0..graphs.len())];
            let split = random_partition(g, parts, &mut rng);
            products.record(check_edge_product(g, &split)?, || {
                format!("{}, G = {g}, split {split:?}", label())
            });
        }
    }

    Ok(SuiteReport {
        max_sum,
        seed,
        tuples: tuples.len(),
        checks: vec![
            multiplicities,
            residue,
            oracle,
            invariance,
            round_trip,
            rank,
            intertwining,
            weights,
            products,
        ],
    })
}

/// FNV-1a over the degrees; keeps per-tuple streams independent of iteration order.
fn hash_tuple(d: &[u32]) -> u64 {
    d.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &x| {
        x.to_le_bytes()
            .iter()
            .fold(h, |h, &b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
    })
}
