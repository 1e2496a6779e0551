//! The decomposition `S^{d_1}V ⊗ … ⊗ S^{d_m}V = ⊕_G T_G` with explicit bases.
//!
//! For every root degree `d_0 ≡ |d| (mod 2)` the rooted graphs with degrees
//! `(d_0, d_1, …, d_m)` are enumerated, and each contributes the `d_0 + 1` tensors
//! `t_{G,0}, …, t_{G,d_0}`. Stacked together they form a square matrix over the monomial
//! basis; [`verify_report`] checks exactly that it is invertible and that each block spans
//! a copy of `ρ_{d_0}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Matrix, SparseRow};
use crate::opgraph::{enumerate_graphs, OuterplanarGraph};
use crate::sl2act::{act_lie, LieGenerator};
use crate::tensorspace::{build_t_g_family, SparseTensor, TensorJson, TensorSpace};
use crate::{Degrees, Error, Result};

/// Largest space the tensors are constructed for.
pub const CONSTRUCTION_LIMIT: u128 = 1_000_000;
/// Largest space for which dense rank checks are run.
pub const DENSE_LIMIT: u128 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphBasis {
    pub graph: OuterplanarGraph,
    /// `t_{G,0}, …, t_{G,d_0}`.
    pub tensors: Vec<SparseTensor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub d0: u32,
    pub graphs: Vec<GraphBasis>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Verification {
    pub rank: bool,
    pub invariance: bool,
    pub intertwining: bool,
}

impl Verification {
    pub fn all(&self) -> bool {
        self.rank && self.invariance && self.intertwining
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub degrees: Degrees,
    /// Ordered by descending `d_0`.
    pub components: Vec<Component>,
    /// `Π (d_i + 1)`.
    pub dimension: u128,
    /// `None` until [`verify_report`] has run.
    pub verification: Option<Verification>,
}

/// Position of one basis tensor `t_{G,i}` inside a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisLabel {
    pub component: usize,
    pub graph: usize,
    pub i: u32,
}

impl DecompositionReport {
    pub fn space(&self) -> TensorSpace {
        TensorSpace::new(self.degrees.as_slice().to_vec())
    }

    /// Total number of tensors `t_{G,i}`.
    pub fn basis_count(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.graphs.len() * (c.d0 as usize + 1))
            .sum()
    }

    /// Labels of the basis tensors in row order.
    pub fn labels(&self) -> Vec<BasisLabel> {
        let mut out = Vec::new();
        for (ci, comp) in self.components.iter().enumerate() {
            for gi in 0..comp.graphs.len() {
                for i in 0..=comp.d0 {
                    out.push(BasisLabel {
                        component: ci,
                        graph: gi,
                        i,
                    });
                }
            }
        }
        out
    }

    /// All basis tensors in row order.
    pub fn tensors(&self) -> impl Iterator<Item = &SparseTensor> + '_ {
        self.components
            .iter()
            .flat_map(|c| c.graphs.iter().flat_map(|g| g.tensors.iter()))
    }

    pub fn tensor(&self, label: BasisLabel) -> &SparseTensor {
        &self.components[label.component].graphs[label.graph].tensors[label.i as usize]
    }

    /// For instance `ρ3 ⊕ 2·ρ1, dim 8 = 8`.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for (n, c) in self.components.iter().enumerate() {
            if n > 0 {
                s.push_str(" ⊕ ");
            }
            if c.graphs.len() > 1 {
                let _ = write!(s, "{}·", c.graphs.len());
            }
            let _ = write!(s, "ρ{}", c.d0);
        }
        if self.components.is_empty() {
            s.push('0');
        }
        let _ = write!(s, ", dim {} = {}", self.basis_count(), self.dimension);
        s
    }

    pub fn to_json_value(&self) -> ReportJson {
        ReportJson {
            degrees: self.degrees.as_slice().to_vec(),
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    d0: c.d0,
                    graphs: c
                        .graphs
                        .iter()
                        .map(|g| GraphJson {
                            arcs: g.graph.labeled_arcs(),
                            tensors: g.tensors.iter().map(SparseTensor::to_json_value).collect(),
                        })
                        .collect(),
                })
                .collect(),
            dimension: self.dimension,
            verified: self.verification.unwrap_or_default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("report serializes")
    }

    pub fn from_json_value(json: &ReportJson) -> Result<Self> {
        let degrees = Degrees::new(json.degrees.clone())?;
        let m = degrees.len();
        let components = json
            .components
            .iter()
            .map(|c| {
                let graphs = c
                    .graphs
                    .iter()
                    .map(|g| {
                        let graph = OuterplanarGraph::from_labels(
                            true,
                            m + 1,
                            g.arcs.iter().map(|&[i, j, a]| (i, j, a as u32)),
                        )?;
                        let tensors = g
                            .tensors
                            .iter()
                            .map(SparseTensor::from_json_value)
                            .collect::<Result<Vec<_>>>()?;
                        Ok(GraphBasis { graph, tensors })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Component { d0: c.d0, graphs })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DecompositionReport {
            degrees,
            components,
            dimension: json.dimension,
            verification: Some(json.verified),
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_json_value(&serde_json::from_str(s)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub degrees: Vec<u32>,
    pub components: Vec<ComponentJson>,
    pub dimension: u128,
    pub verified: Verification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub d0: u32,
    pub graphs: Vec<GraphJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub arcs: Vec<[usize; 3]>,
    pub tensors: Vec<TensorJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub construction_limit: u128,
    pub dense_limit: u128,
    pub verify: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            construction_limit: CONSTRUCTION_LIMIT,
            dense_limit: DENSE_LIMIT,
            verify: true,
        }
    }
}

/// Builds and verifies the decomposition with the default limits.
pub fn decompose(degrees: &Degrees) -> Result<DecompositionReport> {
    decompose_with(degrees, &Options::default())
}

pub fn decompose_with(degrees: &Degrees, options: &Options) -> Result<DecompositionReport> {
    let dim = degrees.dimension();
    if dim > options.construction_limit {
        return Err(Error::SizeGuard {
            dim,
            limit: options.construction_limit,
        });
    }
    if options.verify && dim > options.dense_limit {
        return Err(Error::SizeGuard {
            dim,
            limit: options.dense_limit,
        });
    }
    let total = degrees.total();
    let mut components = Vec::new();
    for d0 in (0..=total).rev().filter(|k| (total - k).is_multiple_of(2)) {
        let d0 = u32::try_from(d0).map_err(|_| Error::SizeGuard {
            dim,
            limit: options.construction_limit,
        })?;
        let graphs = enumerate_graphs(&degrees.with_root(d0), true)
            .into_iter()
            .map(|graph| {
                let tensors = build_t_g_family(&graph)?;
                Ok(GraphBasis { graph, tensors })
            })
            .collect::<Result<Vec<_>>>()?;
        if !graphs.is_empty() {
            components.push(Component { d0, graphs });
        }
    }
    let mut report = DecompositionReport {
        degrees: degrees.clone(),
        components,
        dimension: dim,
        verification: None,
    };
    if options.verify {
        report.verification = Some(verify_report(&report));
    }
    Ok(report)
}

fn sparse_row(space: &TensorSpace, t: &SparseTensor) -> SparseRow {
    t.iter()
        .map(|(e, c)| (space.position(e).expect("valid index"), c.clone()))
        .collect()
}

/// Rows `t_{G,i}` in report order, columns the monomial basis in increasing order.
pub fn full_basis_matrix(report: &DecompositionReport) -> Result<Matrix> {
    if report.dimension > DENSE_LIMIT {
        return Err(Error::SizeGuard {
            dim: report.dimension,
            limit: DENSE_LIMIT,
        });
    }
    let space = report.space();
    let cols = report.dimension as usize;
    let mut m = Matrix::zeros(report.basis_count(), cols);
    for (r, t) in report.tensors().enumerate() {
        for (c, v) in sparse_row(&space, t) {
            m.set(r, c, v);
        }
    }
    Ok(m)
}

/// Runs the rank, invariance and intertwining checks.
pub fn verify_report(report: &DecompositionReport) -> Verification {
    Verification {
        rank: check_rank(report),
        invariance: check_invariance(report),
        intertwining: check_intertwining(report),
    }
}

fn check_rank(report: &DecompositionReport) -> bool {
    if report.basis_count() as u128 != report.dimension {
        return false;
    }
    let space = report.space();
    linalg::rank(report.tensors().map(|t| sparse_row(&space, t))) as u128 == report.dimension
}

/// Invariants are killed by `E` and `F`; in every block the extreme vectors `t_{G,0}` and
/// `t_{G,d_0}` are killed by `F` and `E` respectively.
fn check_invariance(report: &DecompositionReport) -> bool {
    report.components.iter().all(|c| {
        c.graphs.iter().all(|g| {
            let lowest = &g.tensors[0];
            let highest = &g.tensors[c.d0 as usize];
            act_lie(LieGenerator::F, lowest).is_zero()
                && act_lie(LieGenerator::E, highest).is_zero()
        })
    })
}

fn check_intertwining(report: &DecompositionReport) -> bool {
    report
        .components
        .iter()
        .all(|c| c.graphs.iter().all(|g| intertwines(c.d0, &g.tensors)))
}

/// Checks `X · s_G(x^i y^{d_0-i}) = s_G(X · x^i y^{d_0-i})` for `X ∈ {E, F, H}` and all `i`,
/// where `s_G(x^i y^{d_0-i}) = (-1)^i / binom(d_0, i) · t_{G,i}`.
///
/// Clearing the scalars, this reads `E t_i = -(i+1) t_{i+1}`, `F t_i = -(d_0-i+1) t_{i-1}`
/// and `H t_i = (2i - d_0) t_i`; the last holds iff every monomial of `t_i` has that weight.
pub fn intertwines(d0: u32, family: &[SparseTensor]) -> bool {
    if family.len() != d0 as usize + 1 {
        return false;
    }
    let space = family[0].space().clone();
    let d0 = i64::from(d0);
    if let Some(small) = family
        .iter()
        .map(|t| small_integer_form(&space, t))
        .collect::<Option<Vec<_>>>()
    {
        return intertwines_small(d0, &space, family, &small);
    }
    family.iter().enumerate().all(|(i, t)| {
        let i = i as i64;
        let weight_ok = t.iter().all(|(e, _)| space.weight(e) == 2 * i - d0);
        let e_ok = {
            let lhs = act_lie(LieGenerator::E, t);
            match family.get(i as usize + 1) {
                Some(next) => lhs == next.scale_int(-(i + 1)),
                None => lhs.is_zero(),
            }
        };
        let f_ok = {
            let lhs = act_lie(LieGenerator::F, t);
            if i > 0 {
                lhs == family[i as usize - 1].scale_int(-(d0 - i + 1))
            } else {
                lhs.is_zero()
            }
        };
        weight_ok && e_ok && f_ok
    })
}

type SmallTensor = BTreeMap<usize, i128>;

/// `t` keyed by basis position, if every coefficient is an integer that fits in 64 bits.
fn small_integer_form(space: &TensorSpace, t: &SparseTensor) -> Option<SmallTensor> {
    t.iter()
        .map(|(e, c)| {
            let v = if c.is_integer() {
                c.numer().to_i64()?
            } else {
                return None;
            };
            Some((space.position(e)?, i128::from(v)))
        })
        .collect()
}

fn lie_small(
    x: LieGenerator,
    space: &TensorSpace,
    strides: &[isize],
    t: &SparseTensor,
    ts: &SmallTensor,
) -> SmallTensor {
    let mut out = SmallTensor::new();
    for ((e, _), (&pos, &c)) in t.iter().zip(ts) {
        for (k, (&d, &ek)) in space.degrees().iter().zip(e.exponents()).enumerate() {
            if let Some((e2, m)) = x.on_monomial(d, ek) {
                let p = pos as isize + (e2 as isize - ek as isize) * strides[k];
                *out.entry(p as usize).or_insert(0) += c * i128::from(m);
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// [`intertwines`] on 64-bit integer families, with positions for keys.
fn intertwines_small(
    d0: i64,
    space: &TensorSpace,
    family: &[SparseTensor],
    small: &[SmallTensor],
) -> bool {
    let degrees = space.degrees();
    let mut strides = vec![1isize; degrees.len()];
    for k in (0..degrees.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * (degrees[k + 1] as isize + 1);
    }
    let scaled = |t: &SmallTensor, c: i64| -> SmallTensor {
        t.iter().map(|(&p, &v)| (p, v * i128::from(c))).collect()
    };
    family.iter().zip(small).enumerate().all(|(i, (t, ts))| {
        let i = i as i64;
        t.iter().all(|(e, _)| space.weight(e) == 2 * i - d0)
            && lie_small(LieGenerator::E, space, &strides, t, ts)
                == small
                    .get(i as usize + 1)
                    .map_or_else(SmallTensor::new, |n| scaled(n, -(i + 1)))
            && lie_small(LieGenerator::F, space, &strides, t, ts)
                == if i > 0 {
                    scaled(&small[i as usize - 1], -(d0 - i + 1))
                } else {
                    SmallTensor::new()
                }
    })
}

/// Coordinates of `t` in the basis `{t_{G,i}}`, in [`DecompositionReport::labels`] order.
pub fn project(report: &DecompositionReport, t: &SparseTensor) -> Result<Vec<BigRational>> {
    let space = report.space();
    if t.space() != &space {
        return Err(Error::SpaceMismatch(
            space.degrees().to_vec(),
            t.space().degrees().to_vec(),
        ));
    }
    let dim = usize::try_from(report.dimension).map_err(|_| Error::SizeGuard {
        dim: report.dimension,
        limit: DENSE_LIMIT,
    })?;
    let vars = report.basis_count();
    // one equation per monomial: Σ_r c_r t_r[e] = t[e]
    let mut equations = vec![SparseRow::new(); dim];
    for (r, tr) in report.tensors().enumerate() {
        for (pos, v) in sparse_row(&space, tr) {
            equations[pos].insert(r, v);
        }
    }
    let rhs = t.to_dense();
    let coords = linalg::solve(equations, &rhs, vars).ok_or(Error::NotInSpan)?;
    Ok(coords)
}

/// `Σ c_r t_r` over the report's basis.
pub fn combine(report: &DecompositionReport, coords: &[BigRational]) -> Result<SparseTensor> {
    SparseTensor::linear_combination(report.space(), coords.iter().zip(report.tensors()))
}

/// Lists the nonzero coordinates with their labels.
pub fn nonzero_coordinates(
    report: &DecompositionReport,
    coords: &[BigRational],
) -> Vec<(BasisLabel, BigRational)> {
    report
        .labels()
        .into_iter()
        .zip(coords)
        .filter(|(_, c)| !c.is_zero())
        .map(|(l, c)| (l, c.clone()))
        .collect()
}
