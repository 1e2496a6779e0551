//! The SL(2) action on tensors and its infinitesimal form.
//!
//! A matrix `[[a, b], [c, d]]` sends `x ↦ ax + cy` and `y ↦ bx + dy`, so a factor monomial
//! `x^p y^r` goes to `(ax + cy)^p (bx + dy)^r`. Differentiating along the three
//! one-parameter subgroups gives the generators
//!
//! ```text
//! E: x^p y^r ↦ r · x^{p+1} y^{r-1}
//! F: x^p y^r ↦ p · x^{p-1} y^{r+1}
//! H: x^p y^r ↦ (p - r) · x^p y^r
//! ```
//!
//! which act on tensor products by the Leibniz rule. Over the rationals, a tensor killed by
//! `E` and `F` is invariant under the whole group.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::tensorspace::{mul_int, BasisIndex, SparseTensor, TensorSpace};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

impl GroupElement {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(GroupElement { a, b, c, d })
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        Self::new(r(a), r(b), r(c), r(d))
    }

    pub fn identity() -> Self {
        Self::from_integers(1, 0, 0, 1).unwrap()
    }

    /// `diag(q, 1/q)`.
    pub fn diagonal(q: BigRational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::NotUnimodular("0".into()));
        }
        let inv = q.recip();
        Self::new(q, BigRational::zero(), BigRational::zero(), inv)
    }

    /// Entries `(a, b, c, d)`.
    pub fn entries(&self) -> (&BigRational, &BigRational, &BigRational, &BigRational) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    /// Coefficients of `(ax+cy)^{deg-e} (bx+dy)^e` indexed by `y`-exponent.
    fn factor_image(&self, deg: u32, e: u32) -> Vec<BigRational> {
        let first = binomial_expansion(&self.a, &self.c, deg - e);
        let second = binomial_expansion(&self.b, &self.d, e);
        let mut out = vec![BigRational::zero(); deg as usize + 1];
        for (i, u) in first.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (j, v) in second.iter().enumerate() {
                out[i + j] += u * v;
            }
        }
        out
    }
}

/// `(u x + v y)^n` as coefficients by `y`-exponent.
fn binomial_expansion(u: &BigRational, v: &BigRational, n: u32) -> Vec<BigRational> {
    (0..=n)
        .map(|k| {
            let b = binomial(BigUint::from(n), BigUint::from(k));
            BigRational::from_integer(BigInt::from(b)) * pow(u, n - k) * pow(v, k)
        })
        .collect()
}

fn pow(base: &BigRational, exp: u32) -> BigRational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Applies a group element factor by factor and extends linearly.
pub fn act_group(g: &GroupElement, t: &SparseTensor) -> SparseTensor {
    let space = t.space().clone();
    let degrees = space.degrees().to_vec();
    let mut cache: HashMap<(u32, u32), Vec<BigRational>> = HashMap::new();
    let mut out = SparseTensor::zero(space);
    for (idx, coeff) in t.iter() {
        let images: Vec<Vec<(u32, BigRational)>> = degrees
            .iter()
            .zip(idx.exponents())
            .map(|(&d, &e)| {
                cache
                    .entry((d, e))
                    .or_insert_with(|| g.factor_image(d, e))
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(y, c)| (y as u32, c.clone()))
                    .collect()
            })
            .collect();
        let mut exps = Vec::with_capacity(degrees.len());
        expand(&images, &mut exps, coeff.clone(), &mut out);
    }
    out
}

fn expand(
    images: &[Vec<(u32, BigRational)>],
    exps: &mut Vec<u32>,
    coeff: BigRational,
    out: &mut SparseTensor,
) {
    let k = exps.len();
    if k == images.len() {
        out.add_unchecked(BasisIndex(exps.clone()), coeff);
        return;
    }
    for (y, c) in &images[k] {
        exps.push(*y);
        expand(images, exps, &coeff * c, out);
        exps.pop();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieGenerator {
    E,
    F,
    H,
}

impl LieGenerator {
    pub const ALL: [LieGenerator; 3] = [LieGenerator::E, LieGenerator::F, LieGenerator::H];

    /// The generator on a single monomial `x^{deg-e} y^e`: new `y`-exponent and coefficient,
    /// or `None` when the image is zero.
    pub fn on_monomial(self, deg: u32, e: u32) -> Option<(u32, i64)> {
        let p = i64::from(deg - e);
        let r = i64::from(e);
        match self {
            LieGenerator::E if e > 0 => Some((e - 1, r)),
            LieGenerator::F if e < deg => Some((e + 1, p)),
            LieGenerator::H if p != r => Some((e, p - r)),
            _ => None,
        }
    }
}

/// Applies `E`, `F` or `H` by the Leibniz rule over the factors.
pub fn act_lie(x: LieGenerator, t: &SparseTensor) -> SparseTensor {
    let degrees = t.space().degrees().to_vec();
    let mut out = SparseTensor::zero(t.space().clone());
    for (idx, coeff) in t.iter() {
        if x == LieGenerator::H {
            let w = weight_in(&degrees, idx);
            if w != 0 {
                out.add_unchecked(idx.clone(), mul_int(coeff, w));
            }
            continue;
        }
        for (k, (&d, &e)) in degrees.iter().zip(idx.exponents()).enumerate() {
            if let Some((e2, c)) = x.on_monomial(d, e) {
                let mut next = idx.exponents().to_vec();
                next[k] = e2;
                out.add_unchecked(
                    BasisIndex(next),
                    coeff * BigRational::from_integer(c.into()),
                );
            }
        }
    }
    out
}

/// `Σ_k (d_k - 2 e_k)`, the `H`-eigenvalue of a basis vector.
pub fn weight(space: &TensorSpace, e: &BasisIndex) -> i64 {
    space.weight(e)
}

fn weight_in(degrees: &[u32], e: &BasisIndex) -> i64 {
    degrees
        .iter()
        .zip(e.exponents())
        .map(|(&d, &x)| i64::from(d) - 2 * i64::from(x))
        .sum()
}
