//! Sparse exact tensors in `S^{d_1}V ⊗ … ⊗ S^{d_m}V` and the graph tensors `t_G`, `t_{G,i}`.
//!
//! A basis vector is a tuple of `y`-exponents: factor `k` carries `x^{d_k - e_k} y^{e_k}`.
//! Basis vectors are compared lexicographically with the first factor most significant and
//! smaller exponents first, so `x`-heavy monomials come first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::opgraph::{orientations, OuterplanarGraph};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    degrees: Vec<u32>,
}

impl TensorSpace {
    pub fn new(degrees: Vec<u32>) -> Self {
        TensorSpace { degrees }
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn factors(&self) -> usize {
        self.degrees.len()
    }

    /// `Π (d_i + 1)`, saturating.
    pub fn dimension(&self) -> u128 {
        self.degrees
            .iter()
            .fold(1u128, |acc, &d| acc.saturating_mul(u128::from(d) + 1))
    }

    pub fn contains(&self, e: &BasisIndex) -> bool {
        e.0.len() == self.degrees.len() && e.0.iter().zip(&self.degrees).all(|(x, d)| x <= d)
    }

    /// All basis vectors in increasing order.
    pub fn basis(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        let mut next = Some(vec![0u32; self.degrees.len()]);
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            let mut k = succ.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if succ[k] < self.degrees[k] {
                    succ[k] += 1;
                    next = Some(succ);
                    break;
                }
                succ[k] = 0;
            }
            Some(BasisIndex(current))
        })
    }

    /// Position of `e` in [`basis`](Self::basis) order.
    pub fn position(&self, e: &BasisIndex) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        Some(
            e.0.iter()
                .zip(&self.degrees)
                .fold(0usize, |acc, (&x, &d)| acc * (d as usize + 1) + x as usize),
        )
    }

    pub fn index_at(&self, mut position: usize) -> BasisIndex {
        let mut e = vec![0u32; self.degrees.len()];
        for k in (0..self.degrees.len()).rev() {
            let radix = self.degrees[k] as usize + 1;
            e[k] = (position % radix) as u32;
            position /= radix;
        }
        BasisIndex(e)
    }

    /// Weight of a basis vector: `Σ (d_k - 2 e_k)`.
    pub fn weight(&self, e: &BasisIndex) -> i64 {
        self.degrees
            .iter()
            .zip(&e.0)
            .map(|(&d, &x)| i64::from(d) - 2 * i64::from(x))
            .sum()
    }
}

/// The `y`-exponents `(e_1, …, e_m)` of one monomial tensor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisIndex(pub Vec<u32>);

impl BasisIndex {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for BasisIndex {
    fn from(v: Vec<u32>) -> Self {
        BasisIndex(v)
    }
}

/// Total order on basis vectors of one space.
pub fn lex_compare(a: &BasisIndex, b: &BasisIndex) -> Result<Ordering> {
    if a.0.len() != b.0.len() {
        return Err(Error::InvalidIndex(a.0.clone(), b.0.clone()));
    }
    Ok(a.cmp(b))
}

/// A finite linear combination of basis vectors with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTensor {
    space: TensorSpace,
    entries: BTreeMap<BasisIndex, BigRational>,
}

impl SparseTensor {
    pub fn zero(space: TensorSpace) -> Self {
        SparseTensor {
            space,
            entries: BTreeMap::new(),
        }
    }

    /// Sums the given terms; invalid indices are rejected.
    pub fn from_terms<I>(space: TensorSpace, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisIndex, BigRational)>,
    {
        let mut t = SparseTensor::zero(space);
        for (e, c) in terms {
            t.add_term(e, c)?;
        }
        Ok(t)
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms<I>(degrees: &[u32], terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        Self::from_terms(
            TensorSpace::new(degrees.to_vec()),
            terms
                .into_iter()
                .map(|(e, c)| (BasisIndex(e), BigRational::from_integer(c.into()))),
        )
    }

    pub fn add_term(&mut self, e: BasisIndex, c: BigRational) -> Result<()> {
        if !self.space.contains(&e) {
            return Err(Error::InvalidIndex(e.0, self.space.degrees.clone()));
        }
        self.add_unchecked(e, c);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, e: BasisIndex, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn get(&self, e: &BasisIndex) -> BigRational {
        self.entries
            .get(e)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero entries in increasing basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &BigRational)> + '_ {
        self.entries.iter()
    }

    /// Number of nonzero entries.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn scale_int(&self, c: i64) -> SparseTensor {
        if c == 0 {
            return SparseTensor::zero(self.space.clone());
        }
        SparseTensor {
            space: self.space.clone(),
            entries: self
                .entries
                .iter()
                .map(|(e, v)| (e.clone(), mul_int(v, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SparseTensor {
        if c.is_zero() {
            return SparseTensor::zero(self.space.clone());
        }
        SparseTensor {
            space: self.space.clone(),
            entries: self
                .entries
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &SparseTensor) -> Result<SparseTensor> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (e, c) in &other.entries {
            out.add_unchecked(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SparseTensor) -> Result<SparseTensor> {
        self.checked_add(&other.scale(&-BigRational::one()))
    }

    /// `Σ c_k t_k` over tensors of `space`.
    pub fn linear_combination<'a, I>(space: TensorSpace, terms: I) -> Result<SparseTensor>
    where
        I: IntoIterator<Item = (&'a BigRational, &'a SparseTensor)>,
    {
        let mut out = SparseTensor::zero(space);
        for (c, t) in terms {
            out.same_space(t)?;
            if c.is_zero() {
                continue;
            }
            for (e, v) in &t.entries {
                out.add_unchecked(e.clone(), v * c);
            }
        }
        Ok(out)
    }

    pub(crate) fn same_space(&self, other: &SparseTensor) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(
                self.space.degrees.clone(),
                other.space.degrees.clone(),
            ));
        }
        Ok(())
    }

    /// The smallest basis vector with a nonzero coefficient.
    pub fn leading_entry(&self) -> Result<(&BasisIndex, &BigRational)> {
        self.entries.iter().next().ok_or(Error::ZeroTensor)
    }

    /// Factorwise product in `(SV)^{⊗m}`: monomials multiply in each factor, so the
    /// degrees and the exponents add.
    pub fn componentwise_product(&self, other: &SparseTensor) -> Result<SparseTensor> {
        if self.space.factors() != other.space.factors() {
            return Err(Error::SpaceMismatch(
                self.space.degrees.clone(),
                other.space.degrees.clone(),
            ));
        }
        let space = TensorSpace::new(
            self.space
                .degrees
                .iter()
                .zip(&other.space.degrees)
                .map(|(a, b)| a + b)
                .collect(),
        );
        let mut out = SparseTensor::zero(space);
        for (ea, ca) in &self.entries {
            for (eb, cb) in &other.entries {
                let e = ea.0.iter().zip(&eb.0).map(|(x, y)| x + y).collect();
                out.add_unchecked(BasisIndex(e), ca * cb);
            }
        }
        Ok(out)
    }

    /// Coefficients in basis order.
    pub fn to_dense(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.space.dimension() as usize];
        for (e, c) in &self.entries {
            v[self.space.position(e).expect("valid index")] = c.clone();
        }
        v
    }

    pub fn from_dense(space: TensorSpace, values: &[BigRational]) -> SparseTensor {
        let mut t = SparseTensor::zero(space);
        for (p, c) in values.iter().enumerate() {
            if !c.is_zero() {
                let e = t.space.index_at(p);
                t.entries.insert(e, c.clone());
            }
        }
        t
    }

    pub fn to_json_value(&self) -> TensorJson {
        TensorJson {
            degrees: self.space.degrees.clone(),
            entries: self
                .entries
                .iter()
                .map(|(e, c)| EntryJson {
                    e: e.0.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json_value(json: &TensorJson) -> Result<SparseTensor> {
        let mut t = SparseTensor::zero(TensorSpace::new(json.degrees.clone()));
        for entry in &json.entries {
            let num: BigInt = entry
                .num
                .parse()
                .map_err(|_| Error::Json(format!("bad numerator {:?}", entry.num)))?;
            let den: BigInt = entry
                .den
                .parse()
                .map_err(|_| Error::Json(format!("bad denominator {:?}", entry.den)))?;
            if !den.is_positive() {
                return Err(Error::Json(format!("denominator {den} is not positive")));
            }
            t.add_term(BasisIndex(entry.e.clone()), BigRational::new(num, den))?;
        }
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("tensor serializes")
    }

    pub fn from_json(s: &str) -> Result<SparseTensor> {
        Self::from_json_value(&serde_json::from_str(s)?)
    }
}

impl fmt::Display for SparseTensor {
    /// Renders as `+x^2⊗xy - 2 y⊗x …`; the zero tensor renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.entries.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n > 0 {
                f.write_str(" ")?;
            }
            f.write_str(sign)?;
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            let factors: Vec<String> =
                e.0.iter()
                    .zip(&self.space.degrees)
                    .map(|(&y, &d)| monomial(d - y, y))
                    .collect();
            f.write_str(&factors.join("⊗"))?;
        }
        Ok(())
    }
}

fn monomial(px: u32, py: u32) -> String {
    let pow = |v: &str, p: u32| match p {
        0 => String::new(),
        1 => v.to_string(),
        p => format!("{v}^{p}"),
    };
    let s = format!("{}{}", pow("x", px), pow("y", py));
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

/// Wire form of a tensor; coefficients are decimal strings of arbitrary size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub degrees: Vec<u32>,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub e: Vec<u32>,
    pub num: String,
    pub den: String,
}

/// `v · c`, skipping the gcd when `v` is an integer.
pub(crate) fn mul_int(v: &BigRational, c: i64) -> BigRational {
    if v.denom().is_one() {
        return BigRational::from_integer(v.numer() * c);
    }
    v * BigRational::from_integer(c.into())
}

/// `t_G = Σ_g (-1)^{inv g} b_g` for an unrooted graph.
pub fn build_t_g(g: &OuterplanarGraph) -> Result<SparseTensor> {
    if g.is_rooted() {
        return Err(Error::RootedMismatch {
            expected: "unrooted",
        });
    }
    let mut t = SparseTensor::zero(TensorSpace::new(g.degrees().to_vec()));
    for term in orientations(g, None) {
        let e = term.exponents.iter().map(|&(_, inn)| inn).collect();
        t.add_unchecked(
            BasisIndex(e),
            BigRational::from_integer(term.signed_weight()),
        );
    }
    Ok(t)
}

/// Like [`build_t_g`], checking that the graph's degrees are those of `space`.
pub fn build_t_g_in(space: &TensorSpace, g: &OuterplanarGraph) -> Result<SparseTensor> {
    if g.degrees() != space.degrees() {
        return Err(Error::DegreeMismatch {
            graph: g.degrees().to_vec(),
            space: space.degrees.clone(),
        });
    }
    build_t_g(g)
}

/// `t_{G,i}`: the signed sum over orientations whose root has in-degree `i`. The root
/// contributes no tensor factor.
pub fn build_t_g_i(g: &OuterplanarGraph, i: u32) -> Result<SparseTensor> {
    let d0 = g
        .root_degree()
        .ok_or(Error::RootedMismatch { expected: "rooted" })?;
    if i > d0 {
        return Err(Error::OutOfRange { index: i, max: d0 });
    }
    let mut t = SparseTensor::zero(TensorSpace::new(g.factor_degrees().to_vec()));
    for term in orientations(g, Some(i)) {
        let e = term.exponents[1..].iter().map(|&(_, inn)| inn).collect();
        t.add_unchecked(
            BasisIndex(e),
            BigRational::from_integer(term.signed_weight()),
        );
    }
    Ok(t)
}

/// `[t_{G,0}, …, t_{G,d_0}]` in a single pass over the orientations.
pub fn build_t_g_family(g: &OuterplanarGraph) -> Result<Vec<SparseTensor>> {
    let d0 = g
        .root_degree()
        .ok_or(Error::RootedMismatch { expected: "rooted" })?;
    let space = TensorSpace::new(g.factor_degrees().to_vec());
    let mut family = vec![SparseTensor::zero(space); d0 as usize + 1];
    for term in orientations(g, None) {
        let i = term.exponents[0].1 as usize;
        let e = term.exponents[1..].iter().map(|&(_, inn)| inn).collect();
        family[i].add_unchecked(
            BasisIndex(e),
            BigRational::from_integer(term.signed_weight()),
        );
    }
    Ok(family)
}

/// `(-1)^i / binom(d_0, i)`, the factor relating `t_{G,i}` to the image of `x^i y^{d_0-i}`.
pub fn s_g_factor(d0: u32, i: u32) -> BigRational {
    let b = binomial(BigUint::from(d0), BigUint::from(i));
    let r = BigRational::new(BigInt::one(), BigInt::from(b));
    if i % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Image of the monomial `x^i y^{d_0-i}` under the intertwiner `s_G : S^{d_0}V → T_G`.
pub fn s_g_image(g: &OuterplanarGraph, i: u32) -> Result<SparseTensor> {
    let t = build_t_g_i(g, i)?;
    let d0 = g.root_degree().unwrap_or(0);
    Ok(t.scale(&s_g_factor(d0, i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(v: &[u32]) -> BasisIndex {
        BasisIndex(v.to_vec())
    }

    fn tensor(degrees: &[u32], terms: &[(&[u32], i64)]) -> SparseTensor {
        SparseTensor::from_int_terms(degrees, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
    }

    fn graph(rooted: bool, n: usize, arcs: &[(usize, usize, u32)]) -> OuterplanarGraph {
        OuterplanarGraph::from_labels(rooted, n, arcs.iter().copied()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn lex_order() {
        assert_eq!(
            lex_compare(&idx(&[0, 0]), &idx(&[0, 1])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            lex_compare(&idx(&[0, 1]), &idx(&[0, 2])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            lex_compare(&idx(&[1, 0]), &idx(&[0, 2])).unwrap(),
            Ordering::Greater
        );
        assert!(lex_compare(&idx(&[1]), &idx(&[0, 2])).is_err());
    }

    #[test]
    fn basis_enumeration_matches_positions() {
        let space = TensorSpace::new(vec![2, 0, 3]);
        let basis: Vec<_> = space.basis().collect();
        assert_eq!(basis.len(), 12);
        for (p, e) in basis.iter().enumerate() {
            assert_eq!(space.position(e), Some(p));
            assert_eq!(&space.index_at(p), e);
        }
        assert!(basis.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(TensorSpace::new(vec![]).basis().count(), 1);
    }

    #[test]
    fn t_g_single_arc() {
        let t = build_t_g(&graph(false, 2, &[(1, 2, 1)])).unwrap();
        assert_eq!(t, tensor(&[1, 1], &[(&[0, 1], 1), (&[1, 0], -1)]));
        let t = build_t_g(&graph(false, 2, &[(1, 2, 2)])).unwrap();
        assert_eq!(
            t,
            tensor(&[2, 2], &[(&[0, 2], 1), (&[1, 1], -2), (&[2, 0], 1)])
        );
    }

    #[test]
    fn t_g_triangle_cancels_cycles() {
        let t = build_t_g(&graph(false, 3, &[(1, 2, 1), (1, 3, 1), (2, 3, 1)])).unwrap();
        // x²⊗xy⊗y² has e = (0,1,2), etc.
        let expected = tensor(
            &[2, 2, 2],
            &[
                (&[0, 1, 2], 1),
                (&[0, 2, 1], -1),
                (&[1, 2, 0], 1),
                (&[1, 0, 2], -1),
                (&[2, 0, 1], 1),
                (&[2, 1, 0], -1),
            ],
        );
        assert_eq!(t, expected);
        assert_eq!(t.leading_entry().unwrap(), (&idx(&[0, 1, 2]), &rat(1, 1)));
        assert_eq!(
            t.to_string(),
            "+x^2⊗xy⊗y^2 -x^2⊗y^2⊗xy -xy⊗x^2⊗y^2 +xy⊗y^2⊗x^2 +y^2⊗x^2⊗xy -y^2⊗xy⊗x^2"
        );
    }

    #[test]
    fn t_g_rejects_rooted_and_mismatch() {
        let star = graph(true, 3, &[(0, 1, 1), (0, 2, 1)]);
        assert!(build_t_g(&star).is_err());
        let arc = graph(false, 2, &[(1, 2, 1)]);
        assert!(matches!(
            build_t_g_in(&TensorSpace::new(vec![2, 2]), &arc),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn t_g_i_of_star() {
        let star = graph(true, 3, &[(0, 1, 1), (0, 2, 1)]);
        assert_eq!(
            build_t_g_i(&star, 0).unwrap(),
            tensor(&[1, 1], &[(&[1, 1], 1)])
        );
        assert_eq!(
            build_t_g_i(&star, 1).unwrap(),
            tensor(&[1, 1], &[(&[0, 1], -1), (&[1, 0], -1)])
        );
        assert_eq!(
            build_t_g_i(&star, 2).unwrap(),
            tensor(&[1, 1], &[(&[0, 0], 1)])
        );
        assert_eq!(
            build_t_g_i(&star, 3),
            Err(Error::OutOfRange { index: 3, max: 2 })
        );
        let family = build_t_g_family(&star).unwrap();
        for i in 0..=2 {
            assert_eq!(family[i as usize], build_t_g_i(&star, i).unwrap());
        }
    }

    #[test]
    fn t_g_i_with_isolated_root() {
        let g = graph(true, 4, &[(1, 2, 1), (2, 3, 1), (1, 3, 1)]);
        let unrooted = g.without_root().unwrap();
        assert_eq!(build_t_g_i(&g, 0).unwrap(), build_t_g(&unrooted).unwrap());
    }

    #[test]
    fn s_g_images() {
        let star = graph(true, 3, &[(0, 1, 1), (0, 2, 1)]);
        let s1 = s_g_image(&star, 1).unwrap();
        let mut expected = SparseTensor::zero(TensorSpace::new(vec![1, 1]));
        expected.add_term(idx(&[0, 1]), rat(1, 2)).unwrap();
        expected.add_term(idx(&[1, 0]), rat(1, 2)).unwrap();
        assert_eq!(s1, expected);
        assert_eq!(s_g_image(&star, 0).unwrap(), build_t_g_i(&star, 0).unwrap());
        let lone = graph(true, 3, &[(1, 2, 1)]);
        assert_eq!(
            s_g_image(&lone, 0).unwrap(),
            build_t_g(&lone.without_root().unwrap()).unwrap()
        );
        assert!(s_g_image(&lone, 1).is_err());
    }

    #[test]
    fn componentwise_products() {
        let xy = tensor(&[1, 1], &[(&[0, 1], 1)]);
        let yx = tensor(&[1, 1], &[(&[1, 0], 1)]);
        assert_eq!(
            xy.componentwise_product(&yx).unwrap(),
            tensor(&[2, 2], &[(&[1, 1], 1)])
        );
        let wedge = build_t_g(&graph(false, 2, &[(1, 2, 1)])).unwrap();
        assert_eq!(
            wedge.componentwise_product(&wedge).unwrap(),
            build_t_g(&graph(false, 2, &[(1, 2, 2)])).unwrap()
        );
        // ((x∧y)⊗1)·(1⊗(x∧y)) on three factors
        let left = tensor(&[1, 1, 0], &[(&[0, 1, 0], 1), (&[1, 0, 0], -1)]);
        let right = tensor(&[0, 1, 1], &[(&[0, 0, 1], 1), (&[0, 1, 0], -1)]);
        let expected = tensor(
            &[1, 2, 1],
            &[
                (&[0, 1, 1], 1),
                (&[0, 2, 0], -1),
                (&[1, 0, 1], -1),
                (&[1, 1, 0], 1),
            ],
        );
        assert_eq!(left.componentwise_product(&right).unwrap(), expected);
        assert!(xy
            .componentwise_product(&tensor(&[1], &[(&[0], 1)]))
            .is_err());
    }

    #[test]
    fn leading_entries() {
        let zero = SparseTensor::zero(TensorSpace::new(vec![1]));
        assert_eq!(zero.leading_entry(), Err(Error::ZeroTensor));
        let t = build_t_g(&graph(false, 2, &[(1, 2, 1)])).unwrap();
        assert_eq!(t.leading_entry().unwrap(), (&idx(&[0, 1]), &rat(1, 1)));
    }

    #[test]
    fn invalid_terms_rejected() {
        let mut t = SparseTensor::zero(TensorSpace::new(vec![1, 1]));
        assert!(t.add_term(idx(&[2, 0]), rat(1, 1)).is_err());
        assert!(t.add_term(idx(&[0]), rat(1, 1)).is_err());
        t.add_term(idx(&[1, 1]), rat(1, 3)).unwrap();
        t.add_term(idx(&[1, 1]), rat(-1, 3)).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn json_form() {
        let mut t = tensor(&[1, 1], &[(&[0, 1], 1), (&[1, 0], -1)]);
        t.add_term(idx(&[0, 0]), rat(-3, 4)).unwrap();
        let s = t.to_json();
        assert_eq!(
            s,
            r#"{"degrees":[1,1],"entries":[{"e":[0,0],"num":"-3","den":"4"},{"e":[0,1],"num":"1","den":"1"},{"e":[1,0],"num":"-1","den":"1"}]}"#
        );
        assert_eq!(SparseTensor::from_json(&s).unwrap(), t);
        let bad = r#"{"degrees":[1],"entries":[{"e":[0],"num":"1","den":"0"}]}"#;
        assert!(SparseTensor::from_json(bad).is_err());
        let bad = r#"{"degrees":[1],"entries":[{"e":[2],"num":"1","den":"1"}]}"#;
        assert!(SparseTensor::from_json(bad).is_err());
    }

    #[test]
    fn dense_round_trip() {
        let t = build_t_g(&graph(false, 3, &[(1, 2, 1), (1, 3, 1), (2, 3, 1)])).unwrap();
        let dense = t.to_dense();
        assert_eq!(dense.len(), 27);
        assert_eq!(SparseTensor::from_dense(t.space().clone(), &dense), t);
    }
}
