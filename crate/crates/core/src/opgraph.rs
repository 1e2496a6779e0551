//! Noncrossing loopless multigraphs with vertices on a line.
//!
//! Vertices sit at fixed positions `0, 1, …, n-1` on the real line and arcs are drawn in
//! the upper half-plane. An *unrooted* graph labels its vertices `1..=n`; a *rooted* graph
//! labels them `0..=m` and vertex `0` is the root whose degree selects the irreducible type.
//!
//! Every graph is encoded by its in-degree vector `r` under the orientation with all arcs
//! pointing right. Writing `)` `r_v` times followed by `(` `d_v - r_v` times for each vertex
//! gives a balanced bracket word; matching brackets nearest-first recovers the arcs. The
//! enumeration walks over all admissible `r` and is therefore duplicate-free and ordered.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A class of parallel edges between positions `from < to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OuterplanarGraph {
    rooted: bool,
    degrees: Vec<u32>,
    arcs: Vec<Arc>,
}

impl OuterplanarGraph {
    /// Builds a graph on `vertex_count` positions from `(from, to, multiplicity)` triples
    /// given in positions (0-based regardless of rooting). Parallel triples are merged.
    pub fn from_positions<I>(rooted: bool, vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut classes: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (from, to, mult) in arcs {
            if from == to {
                return Err(Error::InvalidGraph(format!("loop at position {from}")));
            }
            if from > to {
                return Err(Error::InvalidGraph(format!(
                    "arc ({from}, {to}) must be given left to right"
                )));
            }
            if to >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "arc ({from}, {to}) leaves the {vertex_count} vertices"
                )));
            }
            if mult > 0 {
                *classes.entry((from, to)).or_insert(0) += mult;
            }
        }
        let arcs: Vec<Arc> = classes
            .into_iter()
            .map(|((from, to), multiplicity)| Arc {
                from,
                to,
                multiplicity,
            })
            .collect();
        for (x, a) in arcs.iter().enumerate() {
            for b in &arcs[x + 1..] {
                if crosses(a, b) {
                    return Err(Error::InvalidGraph(format!(
                        "arcs ({}, {}) and ({}, {}) cross",
                        a.from, a.to, b.from, b.to
                    )));
                }
            }
        }
        let mut degrees = vec![0u32; vertex_count];
        for a in &arcs {
            degrees[a.from] += a.multiplicity;
            degrees[a.to] += a.multiplicity;
        }
        Ok(OuterplanarGraph {
            rooted,
            degrees,
            arcs,
        })
    }

    /// Like [`from_positions`](Self::from_positions) but with vertex labels: `0..=m` for
    /// rooted graphs and `1..=m` for unrooted ones.
    pub fn from_labels<I>(rooted: bool, vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let base = usize::from(!rooted);
        let arcs = arcs
            .into_iter()
            .map(|(i, j, a)| {
                if i < base || j < base {
                    Err(Error::InvalidGraph(format!(
                        "label below {base} in arc ({i}, {j})"
                    )))
                } else {
                    Ok((i - base, j - base, a))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_positions(rooted, vertex_count, arcs)
    }

    pub fn is_rooted(&self) -> bool {
        self.rooted
    }

    /// Label of the leftmost vertex: 0 for rooted graphs, 1 otherwise.
    pub fn vertex_base(&self) -> usize {
        usize::from(!self.rooted)
    }

    pub fn label(&self, position: usize) -> usize {
        position + self.vertex_base()
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    /// Number of non-root vertices.
    pub fn m(&self) -> usize {
        self.degrees.len() - usize::from(self.rooted)
    }

    /// Degrees of all vertices, root first when rooted.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Degrees of the non-root vertices, i.e. the tensor factors.
    pub fn factor_degrees(&self) -> &[u32] {
        &self.degrees[usize::from(self.rooted)..]
    }

    pub fn root_degree(&self) -> Option<u32> {
        self.rooted
            .then(|| self.degrees.first().copied().unwrap_or(0))
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Arcs as `[i, j, multiplicity]` with vertex labels.
    pub fn labeled_arcs(&self) -> Vec<[usize; 3]> {
        self.arcs
            .iter()
            .map(|a| {
                [
                    self.label(a.from),
                    self.label(a.to),
                    a.multiplicity as usize,
                ]
            })
            .collect()
    }

    pub fn edge_count(&self) -> u64 {
        self.arcs.iter().map(|a| u64::from(a.multiplicity)).sum()
    }

    /// In-degree of each vertex when every arc points right.
    pub fn in_degrees(&self) -> Vec<u32> {
        let mut r = vec![0u32; self.degrees.len()];
        for a in &self.arcs {
            r[a.to] += a.multiplicity;
        }
        r
    }

    /// The graph on the same vertices keeping `multiplicities[c]` copies of arc class `c`.
    pub fn subgraph(&self, multiplicities: &[u32]) -> Result<Self> {
        if multiplicities.len() != self.arcs.len() {
            return Err(Error::InvalidGraph(format!(
                "expected {} arc multiplicities, got {}",
                self.arcs.len(),
                multiplicities.len()
            )));
        }
        for (a, &k) in self.arcs.iter().zip(multiplicities) {
            if k > a.multiplicity {
                return Err(Error::InvalidGraph(format!(
                    "arc ({}, {}) has only {} copies",
                    a.from, a.to, a.multiplicity
                )));
            }
        }
        Self::from_positions(
            self.rooted,
            self.vertex_count(),
            self.arcs
                .iter()
                .zip(multiplicities)
                .map(|(a, &k)| (a.from, a.to, k)),
        )
    }

    /// For a rooted graph: the star formed by the arcs at the root.
    pub fn root_star(&self) -> Result<Self> {
        self.expect_rooted()?;
        let keep: Vec<u32> = self
            .arcs
            .iter()
            .map(|a| if a.from == 0 { a.multiplicity } else { 0 })
            .collect();
        self.subgraph(&keep)
    }

    /// For a rooted graph: the unrooted graph on `1..=m` left after deleting the root.
    pub fn without_root(&self) -> Result<Self> {
        self.expect_rooted()?;
        Self::from_positions(
            false,
            self.m(),
            self.arcs
                .iter()
                .filter(|a| a.from != 0)
                .map(|a| (a.from - 1, a.to - 1, a.multiplicity)),
        )
    }

    /// The same arcs viewed as an unrooted graph, the root becoming vertex 1.
    pub fn shifted_unrooted(&self) -> Self {
        OuterplanarGraph {
            rooted: false,
            ..self.clone()
        }
    }

    fn expect_rooted(&self) -> Result<()> {
        if self.rooted {
            Ok(())
        } else {
            Err(Error::RootedMismatch { expected: "rooted" })
        }
    }

    pub fn is_noncrossing(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .all(|(x, a)| self.arcs[x + 1..].iter().all(|b| !crosses(a, b)))
    }

    pub fn is_loopless(&self) -> bool {
        self.arcs.iter().all(|a| a.from < a.to)
    }
}

impl fmt::Display for OuterplanarGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (x, [i, j, a]) in self.labeled_arcs().into_iter().enumerate() {
            if x > 0 {
                f.write_str(", ")?;
            }
            if a == 1 {
                write!(f, "{i}-{j}")?;
            } else {
                write!(f, "{i}-{j}x{a}")?;
            }
        }
        f.write_str("}")
    }
}

fn crosses(a: &Arc, b: &Arc) -> bool {
    (a.from < b.from && b.from < a.to && a.to < b.to)
        || (b.from < a.from && a.from < b.to && b.to < a.to)
}

/// Every noncrossing loopless multigraph with exactly the given degrees, ordered by
/// in-degree vector. With `rooted`, the first degree belongs to the root vertex 0.
pub fn enumerate_graphs(degrees: &[u32], rooted: bool) -> Vec<OuterplanarGraph> {
    let total: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
    if total % 2 == 1 {
        return Vec::new();
    }
    let mut suffix = vec![0u64; degrees.len() + 1];
    for v in (0..degrees.len()).rev() {
        suffix[v] = suffix[v + 1] + u64::from(degrees[v]);
    }
    let mut out = Vec::new();
    let mut r = Vec::with_capacity(degrees.len());
    search(degrees, &suffix, 0, &mut r, &mut |r| {
        let pairs: Vec<(u32, u32)> = degrees
            .iter()
            .zip(r)
            .map(|(&d, &ri)| (d - ri, ri))
            .collect();
        out.push(graph_from_leading(&pairs, rooted).expect("admissible words are balanced"));
    });
    out
}

fn search(
    degrees: &[u32],
    suffix: &[u64],
    open: u64,
    r: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    let v = r.len();
    if v == degrees.len() {
        if open == 0 {
            emit(r);
        }
        return;
    }
    let d = degrees[v];
    let max_close = u64::from(d).min(open) as u32;
    for close in 0..=max_close {
        let next_open = open - u64::from(close) + u64::from(d - close);
        if next_open > suffix[v + 1] {
            continue;
        }
        r.push(close);
        search(degrees, suffix, next_open, r, emit);
        r.pop();
    }
}

/// Number of graphs with the given degrees, by contracting the last vertex into its
/// neighbour: `c_d = Σ_j c_{(d_1, …, d_{m-2}, j)}` over `j = |d_{m-1} - d_m|, …, d_{m-1} + d_m`
/// in steps of two, with `c_{(d)} = δ_{d,0}`.
pub fn count_graphs(degrees: &[u32], _rooted: bool) -> BigUint {
    if degrees.is_empty() {
        return BigUint::one();
    }
    let mut memo = HashMap::new();
    count_rec(degrees, &mut memo)
}

fn count_rec(d: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    if let [only] = d {
        return if *only == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let total: u64 = d.iter().map(|&x| u64::from(x)).sum();
    if total % 2 == 1 {
        return BigUint::zero();
    }
    if let Some(v) = memo.get(d) {
        return v.clone();
    }
    let (a, b) = (d[d.len() - 2], d[d.len() - 1]);
    let mut next = d[..d.len() - 1].to_vec();
    let mut sum = BigUint::zero();
    for j in (a.abs_diff(b)..=a + b).step_by(2) {
        *next.last_mut().unwrap() = j;
        sum += count_rec(&next, memo);
    }
    memo.insert(d.to_vec(), sum.clone());
    sum
}

/// Per-vertex `(out, in)` degrees of the inversion-free orientation: the exponents of `x`
/// and `y` in the leading monomial `b_G`.
pub fn leading_basis_exponents(g: &OuterplanarGraph) -> Vec<(u32, u32)> {
    g.degrees
        .iter()
        .zip(g.in_degrees())
        .map(|(&d, r)| (d - r, r))
        .collect()
}

/// Rebuilds a graph from per-vertex `(out, in)` pairs by matching the bracket word
/// `)^{in} (^{out}` vertex by vertex.
pub fn graph_from_leading(exponents: &[(u32, u32)], rooted: bool) -> Result<OuterplanarGraph> {
    let mut stack: Vec<(usize, u32)> = Vec::new();
    let mut arcs: Vec<(usize, usize, u32)> = Vec::new();
    for (v, &(out, inn)) in exponents.iter().enumerate() {
        let mut need = inn;
        while need > 0 {
            let Some(top) = stack.last_mut() else {
                return Err(Error::UnbalancedBrackets(v));
            };
            let take = need.min(top.1);
            arcs.push((top.0, v, take));
            top.1 -= take;
            need -= take;
            if top.1 == 0 {
                stack.pop();
            }
        }
        if out > 0 {
            stack.push((v, out));
        }
    }
    if let Some(&(v, _)) = stack.last() {
        return Err(Error::UnbalancedBrackets(v));
    }
    OuterplanarGraph::from_positions(rooted, exponents.len(), arcs)
}

/// An orientation of every edge copy, recorded per arc class as the number of copies
/// pointing right-to-left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation<'g> {
    graph: &'g OuterplanarGraph,
    flips: Vec<u32>,
}

impl<'g> Orientation<'g> {
    pub fn new(graph: &'g OuterplanarGraph, flips: Vec<u32>) -> Result<Self> {
        if flips.len() != graph.arcs.len()
            || flips
                .iter()
                .zip(&graph.arcs)
                .any(|(&u, a)| u > a.multiplicity)
        {
            return Err(Error::InvalidGraph(format!(
                "flip vector {flips:?} does not fit the arcs of {graph}"
            )));
        }
        Ok(Orientation { graph, flips })
    }

    pub fn graph(&self) -> &'g OuterplanarGraph {
        self.graph
    }

    pub fn flips(&self) -> &[u32] {
        &self.flips
    }

    /// Number of arrows pointing right-to-left.
    pub fn inv(&self) -> u64 {
        self.flips.iter().map(|&u| u64::from(u)).sum()
    }

    /// Per-vertex `(out, in)` degrees.
    pub fn vertex_exponents(&self) -> Vec<(u32, u32)> {
        let mut ex = vec![(0u32, 0u32); self.graph.vertex_count()];
        for (a, &u) in self.graph.arcs.iter().zip(&self.flips) {
            let forward = a.multiplicity - u;
            ex[a.from].0 += forward;
            ex[a.to].1 += forward;
            ex[a.from].1 += u;
            ex[a.to].0 += u;
        }
        ex
    }

    /// In-degree of the root; zero for unrooted graphs.
    pub fn root_in_degree(&self) -> u32 {
        if !self.graph.rooted {
            return 0;
        }
        self.graph
            .arcs
            .iter()
            .zip(&self.flips)
            .filter(|(a, _)| a.from == 0)
            .map(|(_, &u)| u)
            .sum()
    }
}

/// The orientation with every arc pointing left to right.
pub fn canonical_orientation(g: &OuterplanarGraph) -> Orientation<'_> {
    Orientation {
        graph: g,
        flips: vec![0; g.arcs.len()],
    }
}

/// One flip vector together with everything needed to add its monomial into `t_G`.
#[derive(Debug, Clone)]
pub struct OrientationTerm<'g> {
    pub orientation: Orientation<'g>,
    /// True when `inv` is odd.
    pub negative: bool,
    /// `Π_c binom(a_c, u_c)`: the number of edge-copy orientations with this flip vector.
    pub multiplicity: BigUint,
    /// Per-vertex `(out, in)` degrees.
    pub exponents: Vec<(u32, u32)>,
}

impl OrientationTerm<'_> {
    /// `(-1)^{inv} · multiplicity`.
    pub fn signed_weight(&self) -> BigInt {
        let w = BigInt::from(self.multiplicity.clone());
        if self.negative {
            -w
        } else {
            w
        }
    }
}

/// Iterator over all flip vectors of a graph, optionally restricted to a root in-degree.
pub struct Orientations<'g> {
    graph: &'g OuterplanarGraph,
    root_in_degree: Option<u32>,
    current: Option<Vec<u32>>,
}

/// Enumerates the orientations of `g` collapsed by flip vector, in mixed-radix order
/// with the first arc class varying slowest.
///
/// With `root_in_degree = Some(i)` only flip vectors whose root arcs carry exactly `i`
/// flipped copies are produced; the iterator is empty when `g` is unrooted or `i > d_0`.
pub fn orientations(g: &OuterplanarGraph, root_in_degree: Option<u32>) -> Orientations<'_> {
    let valid = match root_in_degree {
        None => true,
        Some(i) => g.root_degree().is_some_and(|d0| i <= d0),
    };
    Orientations {
        graph: g,
        root_in_degree,
        current: valid.then(|| vec![0; g.arcs.len()]),
    }
}

impl<'g> Orientations<'g> {
    fn advance(&mut self) {
        let Some(flips) = self.current.as_mut() else {
            return;
        };
        for c in (0..flips.len()).rev() {
            if flips[c] < self.graph.arcs[c].multiplicity {
                flips[c] += 1;
                return;
            }
            flips[c] = 0;
        }
        self.current = None;
    }
}

impl<'g> Iterator for Orientations<'g> {
    type Item = OrientationTerm<'g>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let flips = self.current.clone()?;
            self.advance();
            let orientation = Orientation {
                graph: self.graph,
                flips,
            };
            if let Some(i) = self.root_in_degree {
                if orientation.root_in_degree() != i {
                    continue;
                }
            }
            let multiplicity = self
                .graph
                .arcs
                .iter()
                .zip(&orientation.flips)
                .map(|(a, &u)| binomial(BigUint::from(a.multiplicity), BigUint::from(u)))
                .product();
            return Some(OrientationTerm {
                negative: orientation.inv() % 2 == 1,
                multiplicity,
                exponents: orientation.vertex_exponents(),
                orientation,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(rooted: bool, n: usize, arcs: &[(usize, usize, u32)]) -> OuterplanarGraph {
        OuterplanarGraph::from_labels(rooted, n, arcs.iter().copied()).unwrap()
    }

    fn triangle() -> OuterplanarGraph {
        graph(false, 3, &[(1, 2, 1), (1, 3, 1), (2, 3, 1)])
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            OuterplanarGraph::from_labels(false, 2, [(1, 1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            OuterplanarGraph::from_labels(false, 4, [(1, 3, 1), (2, 4, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            OuterplanarGraph::from_labels(false, 2, [(1, 3, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            OuterplanarGraph::from_labels(false, 2, [(2, 1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            OuterplanarGraph::from_labels(false, 2, [(0, 1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        // nested and sharing endpoints is fine; duplicates merge
        let g = graph(false, 4, &[(1, 4, 1), (2, 3, 2), (1, 2, 1), (1, 4, 1)]);
        assert_eq!(g.degrees(), &[3, 3, 2, 2]);
        assert_eq!(g.labeled_arcs(), vec![[1, 2, 1], [1, 4, 2], [2, 3, 2]]);
        assert_eq!(g.to_string(), "{1-2, 1-4x2, 2-3x2}");
    }

    #[test]
    fn perfect_matchings_on_six_points() {
        let graphs = enumerate_graphs(&[1; 6], false);
        assert_eq!(graphs.len(), 5);
        let pictured = [
            graph(false, 6, &[(1, 2, 1), (3, 4, 1), (5, 6, 1)]),
            graph(false, 6, &[(1, 2, 1), (4, 5, 1), (3, 6, 1)]),
        ];
        for p in &pictured {
            assert!(graphs.contains(p), "{p} missing");
        }
    }

    #[test]
    fn two_vertex_graphs() {
        for a in 0..6 {
            let graphs = enumerate_graphs(&[a, a], false);
            assert_eq!(graphs.len(), 1);
            if a > 0 {
                assert_eq!(graphs[0].labeled_arcs(), vec![[1, 2, a as usize]]);
            } else {
                assert!(graphs[0].arcs().is_empty());
            }
        }
        assert!(enumerate_graphs(&[1, 2], false).is_empty());
        assert!(enumerate_graphs(&[1, 3], false).is_empty());
    }

    #[test]
    fn triangle_is_unique() {
        assert_eq!(enumerate_graphs(&[2, 2, 2], false), vec![triangle()]);
    }

    #[test]
    fn counts() {
        assert_eq!(count_graphs(&[1; 6], false), BigUint::from(5u32));
        assert_eq!(count_graphs(&[0], false), BigUint::one());
        assert_eq!(count_graphs(&[3], false), BigUint::zero());
        assert_eq!(count_graphs(&[2, 2, 2, 2], false), BigUint::from(3u32));
        assert_eq!(count_graphs(&[], false), BigUint::one());
    }

    #[test]
    fn enumeration_is_sorted_by_in_degrees() {
        let graphs = enumerate_graphs(&[2, 3, 1, 2, 2], false);
        let rs: Vec<Vec<u32>> = graphs.iter().map(|g| g.in_degrees()).collect();
        let mut sorted = rs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(rs, sorted);
    }

    #[test]
    fn canonical_orientations() {
        let t = triangle();
        let g0 = canonical_orientation(&t);
        assert_eq!(g0.inv(), 0);
        assert_eq!(g0.flips(), &[0, 0, 0]);
        let arc = graph(false, 2, &[(1, 2, 3)]);
        assert_eq!(canonical_orientation(&arc).flips(), &[0]);
    }

    #[test]
    fn orientations_of_single_arc() {
        let arc = graph(false, 2, &[(1, 2, 1)]);
        let terms: Vec<_> = orientations(&arc, None).collect();
        assert_eq!(terms.len(), 2);
        assert!(!terms[0].negative);
        assert_eq!(terms[0].exponents, vec![(1, 0), (0, 1)]);
        assert!(terms[1].negative);
        assert_eq!(terms[1].exponents, vec![(0, 1), (1, 0)]);

        let a = 5u32;
        let arc = graph(false, 2, &[(1, 2, a)]);
        let weights: Vec<BigInt> = orientations(&arc, None)
            .map(|t| t.signed_weight())
            .collect();
        let expected: Vec<BigInt> = [1, -5, 10, -10, 5, -1]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(weights, expected);
    }

    #[test]
    fn orientations_of_triangle() {
        let t = triangle();
        let terms: Vec<_> = orientations(&t, None).collect();
        assert_eq!(terms.len(), 8);
        assert!(terms.iter().all(|t| t.multiplicity.is_one()));
        let negatives = terms.iter().filter(|t| t.negative).count();
        assert_eq!(negatives, 4);
    }

    #[test]
    fn root_restricted_orientations() {
        let star = graph(true, 3, &[(0, 1, 1), (0, 2, 1)]);
        assert_eq!(orientations(&star, Some(0)).count(), 1);
        assert_eq!(orientations(&star, Some(1)).count(), 2);
        assert_eq!(orientations(&star, Some(2)).count(), 1);
        assert_eq!(orientations(&star, Some(3)).count(), 0);
        assert_eq!(orientations(&triangle(), Some(0)).count(), 0);
    }

    #[test]
    fn leading_exponents() {
        let matching = graph(false, 4, &[(1, 2, 1), (3, 4, 1)]);
        assert_eq!(
            leading_basis_exponents(&matching),
            vec![(1, 0), (0, 1), (1, 0), (0, 1)]
        );
        let arc = graph(false, 2, &[(1, 2, 4)]);
        assert_eq!(leading_basis_exponents(&arc), vec![(4, 0), (0, 4)]);
        assert_eq!(
            leading_basis_exponents(&triangle()),
            vec![(2, 0), (1, 1), (0, 2)]
        );
    }

    #[test]
    fn graphs_from_leading_exponents() {
        assert_eq!(
            graph_from_leading(&[(1, 0), (0, 1)], false).unwrap(),
            graph(false, 2, &[(1, 2, 1)])
        );
        assert_eq!(
            graph_from_leading(&[(2, 0), (1, 1), (0, 2)], false).unwrap(),
            triangle()
        );
        assert_eq!(
            graph_from_leading(&[(3, 0), (0, 3)], false).unwrap(),
            graph(false, 2, &[(1, 2, 3)])
        );
        assert_eq!(
            graph_from_leading(&[(0, 1), (1, 0)], false),
            Err(Error::UnbalancedBrackets(0))
        );
        assert_eq!(
            graph_from_leading(&[(2, 0), (0, 1)], false),
            Err(Error::UnbalancedBrackets(0))
        );
    }

    #[test]
    fn root_split() {
        let g = graph(true, 4, &[(0, 1, 1), (0, 3, 2), (1, 2, 1), (2, 3, 1)]);
        assert_eq!(g.root_degree(), Some(3));
        assert_eq!(g.factor_degrees(), &[2, 2, 3]);
        let star = g.root_star().unwrap();
        assert_eq!(star.labeled_arcs(), vec![[0, 1, 1], [0, 3, 2]]);
        assert_eq!(star.vertex_count(), 4);
        let rest = g.without_root().unwrap();
        assert!(!rest.is_rooted());
        assert_eq!(rest.labeled_arcs(), vec![[1, 2, 1], [2, 3, 1]]);
        assert!(triangle().root_star().is_err());
    }
}
