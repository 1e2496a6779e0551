//! The character ring `K = Z[q + q⁻¹]`.
//!
//! Characters of polynomial SL(2) representations are symmetric Laurent polynomials in `q`.
//! Multiplicities of irreducibles are read off a character by differencing coefficients,
//! and are independently recomputed with the Clebsch-Gordan recursion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::{Degrees, Error, Result};

/// A Laurent polynomial `Σ C_k q^k` with integer coefficients, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymLaurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl SymLaurent {
    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            *coeffs.entry(k).or_insert_with(BigInt::zero) += c;
        }
        coeffs.retain(|_, c: &mut BigInt| !c.is_zero());
        SymLaurent { coeffs }
    }

    pub fn one() -> Self {
        Self::from_terms([(0, BigInt::one())])
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&k, c)| self.coeffs.get(&-k) == Some(c))
    }

    /// True when all exponents with nonzero coefficient share one parity.
    pub fn is_parity_pure(&self) -> bool {
        let mut parities = self.coeffs.keys().map(|k| k.rem_euclid(2));
        match parities.next() {
            None => true,
            Some(p) => parities.all(|q| q == p),
        }
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }
}

impl Mul for &SymLaurent {
    type Output = SymLaurent;

    fn mul(self, rhs: &SymLaurent) -> SymLaurent {
        SymLaurent::from_terms(
            self.coeffs
                .iter()
                .flat_map(|(&a, ca)| rhs.coeffs.iter().map(move |(&b, cb)| (a + b, ca * cb))),
        )
    }
}

impl fmt::Display for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match (*k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (k, true) => write!(f, "q^{k}")?,
                (k, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Multiplicities `c^{(k)}` of the irreducibles `ρ_k` in a representation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityMap {
    entries: BTreeMap<u64, BigUint>,
}

impl MultiplicityMap {
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigUint)>,
    {
        let mut map = BTreeMap::new();
        for (k, c) in entries {
            *map.entry(k).or_insert_with(BigUint::zero) += c;
        }
        map.retain(|_, c: &mut BigUint| !c.is_zero());
        MultiplicityMap { entries: map }
    }

    pub fn get(&self, k: u64) -> BigUint {
        self.entries.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero entries in ascending `k`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, &BigUint)> + '_ {
        self.entries.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ c^{(k)} (k + 1)`.
    pub fn dimension(&self) -> BigUint {
        self.entries
            .iter()
            .map(|(&k, c)| c * BigUint::from(k + 1))
            .sum()
    }

    /// `Σ c^{(k)} ch ρ_k`.
    pub fn to_char(&self) -> SymLaurent {
        SymLaurent::from_terms(self.entries.iter().flat_map(|(&k, c)| {
            let c = BigInt::from(c.clone());
            irr_char(k)
                .coeffs
                .into_keys()
                .map(move |e| (e, c.clone()))
        }))
    }
}

/// `ch ρ_k = q^k + q^{k-2} + … + q^{-k}`.
pub fn irr_char(k: u64) -> SymLaurent {
    let k = k as i64;
    SymLaurent::from_terms((0..=k).map(|j| (k - 2 * j, BigInt::one())))
}

/// The character of a tensor product is the product of the characters.
pub fn char_product(chars: &[SymLaurent]) -> Result<SymLaurent> {
    let (first, rest) = chars.split_first().ok_or(Error::EmptyProduct)?;
    Ok(rest.iter().fold(first.clone(), |acc, c| &acc * c))
}

/// `ch ρ_{d_1} ⋯ ch ρ_{d_m}`.
pub fn tensor_char(d: &Degrees) -> SymLaurent {
    d.as_slice().iter().fold(SymLaurent::one(), |acc, &di| {
        &acc * &irr_char(u64::from(di))
    })
}

/// Writes a character in the basis of irreducible characters: `c^{(k)} = C_k - C_{k+2}`.
pub fn decompose_char(c: &SymLaurent) -> Result<MultiplicityMap> {
    if !c.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !c.is_parity_pure() {
        return Err(Error::MixedParity);
    }
    let Some(top) = c.max_exponent() else {
        return Ok(MultiplicityMap::default());
    };
    let mut entries = BTreeMap::new();
    let mut k = top;
    while k >= 0 {
        let diff = c.coeff(k) - c.coeff(k + 2);
        match diff.sign() {
            Sign::Minus => {
                return Err(Error::NotACharacter {
                    k: k as u64,
                    value: diff.to_string(),
                })
            }
            Sign::Plus => {
                entries.insert(k as u64, diff.magnitude().clone());
            }
            Sign::NoSign => {}
        }
        k -= 2;
    }
    Ok(MultiplicityMap { entries })
}

/// All multiplicities of `ρ_{d_1} ⊗ … ⊗ ρ_{d_m}`, read off its character.
pub fn multiplicities(d: &Degrees) -> MultiplicityMap {
    decompose_char(&tensor_char(d)).expect("products of characters decompose")
}

/// `c_d^{(k)} = C_d^{(k)} - C_d^{(k+2)}`, the multiplicity of `ρ_k` in `⊗ ρ_{d_i}`.
pub fn multiplicity(d: &Degrees, k: u64) -> BigUint {
    if k > d.total() || (d.total() - k) % 2 == 1 {
        return BigUint::zero();
    }
    let c = tensor_char(d);
    let diff = c.coeff(k as i64) - c.coeff(k as i64 + 2);
    diff.to_biguint().expect("multiplicities are nonnegative")
}

/// The same number as [`multiplicity`], computed by repeatedly collapsing the last two
/// factors with the Clebsch-Gordan rule `ρ_a ⊗ ρ_b = ρ_{a+b} ⊕ ρ_{a+b-2} ⊕ … ⊕ ρ_{|a-b|}`.
pub fn multiplicity_by_recursion(d: &Degrees, k: u64) -> BigUint {
    let mut memo = HashMap::new();
    recurse(d.as_slice(), k, &mut memo)
}

fn recurse(d: &[u32], k: u64, memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    let total: u64 = d.iter().map(|&x| u64::from(x)).sum();
    if k > total || (total - k) % 2 == 1 {
        return BigUint::zero();
    }
    if let [only] = d {
        return if u64::from(*only) == k {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if let Some(v) = memo.get(d) {
        return v.clone();
    }
    let (a, b) = (d[d.len() - 2], d[d.len() - 1]);
    let mut next = d[..d.len() - 1].to_vec();
    let mut sum = BigUint::zero();
    for j in (a.abs_diff(b)..=a + b).step_by(2) {
        *next.last_mut().unwrap() = j;
        sum += recurse(&next, k, memo);
    }
    memo.insert(d.to_vec(), sum.clone());
    sum
}

/// `c_n = binom(2n, n) - binom(2n, n-1)`.
pub fn catalan(n: u64) -> BigUint {
    let two_n = BigUint::from(2 * n);
    let central = binomial(two_n.clone(), BigUint::from(n));
    if n == 0 {
        return central;
    }
    central - binomial(two_n, BigUint::from(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laurent(terms: &[(i64, i64)]) -> SymLaurent {
        SymLaurent::from_terms(terms.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    fn mults(terms: &[(u64, u64)]) -> MultiplicityMap {
        MultiplicityMap::from_entries(terms.iter().map(|&(k, c)| (k, BigUint::from(c))))
    }

    fn deg(v: &[u32]) -> Degrees {
        Degrees::new(v.to_vec()).unwrap()
    }

    #[test]
    fn irreducible_characters() {
        assert_eq!(irr_char(0), laurent(&[(0, 1)]));
        assert_eq!(irr_char(1), laurent(&[(1, 1), (-1, 1)]));
        assert_eq!(irr_char(2), laurent(&[(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn products() {
        assert_eq!(char_product(&[irr_char(1)]).unwrap(), irr_char(1));
        assert_eq!(
            char_product(&[irr_char(1), irr_char(1)]).unwrap(),
            laurent(&[(2, 1), (0, 2), (-2, 1)])
        );
        assert_eq!(
            char_product(&[irr_char(2), irr_char(3)]).unwrap(),
            laurent(&[(5, 1), (3, 2), (1, 3), (-1, 3), (-3, 2), (-5, 1)])
        );
        assert_eq!(char_product(&[]), Err(Error::EmptyProduct));
    }

    #[test]
    fn decomposition() {
        assert_eq!(decompose_char(&irr_char(1)).unwrap(), mults(&[(1, 1)]));
        let c2 = char_product(&[irr_char(1), irr_char(1)]).unwrap();
        assert_eq!(decompose_char(&c2).unwrap(), mults(&[(2, 1), (0, 1)]));
        let c3 = char_product(&[irr_char(1), irr_char(1), irr_char(1)]).unwrap();
        let m3 = decompose_char(&c3).unwrap();
        assert_eq!(m3, mults(&[(3, 1), (1, 2)]));
        assert_eq!(m3.to_char(), c3);
        assert_eq!(m3.dimension(), BigUint::from(8u32));
    }

    #[test]
    fn decomposition_errors() {
        assert_eq!(
            decompose_char(&laurent(&[(1, 1)])),
            Err(Error::NotSymmetric)
        );
        assert_eq!(
            decompose_char(&laurent(&[(1, 1), (-1, 1), (0, 1)])),
            Err(Error::MixedParity)
        );
        // 2q^0 - (q^2 + q^-2) is symmetric but has c^{(2)} = -1
        assert!(matches!(
            decompose_char(&laurent(&[(2, -1), (0, 2), (-2, -1)])),
            Err(Error::NotACharacter { k: 2, .. })
        ));
        assert!(decompose_char(&SymLaurent::default()).unwrap().is_empty());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&deg(&[1; 6]), 0), BigUint::from(5u32));
        for a in 0..8 {
            assert_eq!(multiplicity(&deg(&[a]), u64::from(a)), BigUint::one());
            assert_eq!(
                multiplicity_by_recursion(&deg(&[a]), u64::from(a)),
                BigUint::one()
            );
        }
        assert_eq!(multiplicity(&deg(&[2, 3]), 0), BigUint::zero());
        assert_eq!(multiplicity(&deg(&[1, 1]), 7), BigUint::zero());
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(multiplicity_by_recursion(&deg(&[1, 1]), 0), BigUint::one());
        assert_eq!(
            multiplicity_by_recursion(&deg(&[2, 2, 2]), 0),
            BigUint::one()
        );
        assert_eq!(
            multiplicity_by_recursion(&deg(&[1, 1, 1]), 1),
            BigUint::from(2u32)
        );
        assert_eq!(multiplicity_by_recursion(&deg(&[2, 3]), 0), BigUint::zero());
    }

    #[test]
    fn catalan_numbers() {
        let expected = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u64), BigUint::from(c));
        }
        // (2n)! / (n! (n+1)!) at n = 30
        assert_eq!(catalan(30).to_string(), "3814986502092304");
    }

    #[test]
    fn display() {
        assert_eq!(irr_char(2).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(laurent(&[(1, -2), (-1, 3)]).to_string(), "-2q^1 + 3q^-1");
    }
}
