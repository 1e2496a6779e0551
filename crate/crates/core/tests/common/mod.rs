//! Small reference implementations shared by the integration tests.
//!
//! Nothing here calls into the library, so agreement with it is evidence rather than
//! a tautology.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for j in 0..k {
        r = r * (n - j) / (j + 1);
    }
    r
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan_closed(n: u64) -> BigInt {
    binom(2 * n, n) / (n + 1)
}

/// All exponent vectors `0 ≤ e_k ≤ d_k`.
pub fn monomials(d: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &dk in d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=dk).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn weight(d: &[u32], e: &[u32]) -> i64 {
    d.iter()
        .zip(e)
        .map(|(&d, &e)| d as i64 - 2 * e as i64)
        .sum()
}

/// Multiplicity of `ρ_k` from weight-space dimensions.
pub fn multiplicity_by_counting(d: &[u32], k: u64) -> u64 {
    let ms = monomials(d);
    let at = |w: i64| ms.iter().filter(|e| weight(d, e) == w).count() as u64;
    at(k as i64) - at(k as i64 + 2)
}

/// Sparse tensor with integer or rational coefficients keyed by exponent vectors.
pub type Tensor = BTreeMap<Vec<u32>, BigRational>;

pub fn insert(t: &mut Tensor, e: Vec<u32>, c: BigRational) {
    let v = t.entry(e.clone()).or_insert_with(BigRational::zero);
    *v += c;
    if v.is_zero() {
        t.remove(&e);
    }
}

pub fn from_library(t: &outerplanar::tensorspace::SparseTensor) -> Tensor {
    t.iter().map(|(e, c)| (e.0.clone(), c.clone())).collect()
}

/// `E x^{d-e} y^e = e x^{d-e+1} y^{e-1}`, extended as a derivation.
pub fn apply_e(d: &[u32], t: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for (e, c) in t {
        for k in 0..d.len() {
            if e[k] > 0 {
                let mut f = e.clone();
                f[k] -= 1;
                insert(&mut out, f, c * BigRational::from_integer(e[k].into()));
            }
        }
    }
    out
}

/// `F x^{d-e} y^e = (d-e) x^{d-e-1} y^{e+1}`.
pub fn apply_f(d: &[u32], t: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for (e, c) in t {
        for k in 0..d.len() {
            if e[k] < d[k] {
                let mut f = e.clone();
                f[k] += 1;
                insert(
                    &mut out,
                    f,
                    c * BigRational::from_integer((d[k] - e[k]).into()),
                );
            }
        }
    }
    out
}

pub fn componentwise_product(a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            insert(&mut out, e, ca * cb);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

const P: u128 = (1 << 61) - 1;

fn to_mod(c: &BigRational) -> u128 {
    let m = BigInt::from(P as u64);
    let num = ((c.numer() % &m + &m) % &m).to_u128().unwrap();
    let den = ((c.denom() % &m + &m) % &m).to_u128().unwrap();
    num * pow_mod(den, P - 2) % P
}

fn pow_mod(mut b: u128, mut e: u128) -> u128 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank modulo a large prime; a lower bound for the rational rank.
pub fn rank_mod_p(rows: &[Tensor]) -> usize {
    let mut cols: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for r in rows {
        for e in r.keys() {
            let n = cols.len();
            cols.entry(e.clone()).or_insert(n);
        }
    }
    let mut m: Vec<Vec<u128>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0u128; cols.len()];
            for (e, c) in r {
                v[cols[e]] = to_mod(c);
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][col], P - 2);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col] * inv % P;
                for c in col..cols.len() {
                    let sub = f * m[rank][c] % P;
                    m[r][c] = (m[r][c] + P - sub) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Counts loopless multigraphs on positions `0..n` with the given degrees whose arcs
/// pairwise do not cross, by trying every multiplicity for every pair.
pub fn count_noncrossing_bruteforce(degrees: &[u32]) -> u64 {
    let n = degrees.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
        (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
    }
    fn rec(
        k: usize,
        pairs: &[(usize, usize)],
        rest: &mut Vec<u32>,
        used: &mut Vec<(usize, usize)>,
    ) -> u64 {
        if k == pairs.len() {
            return u64::from(rest.iter().all(|&r| r == 0));
        }
        let (i, j) = pairs[k];
        let mut total = rec(k + 1, pairs, rest, used);
        if used.iter().any(|&u| crosses(u, (i, j))) {
            return total;
        }
        used.push((i, j));
        for mult in 1..=rest[i].min(rest[j]) {
            rest[i] -= mult;
            rest[j] -= mult;
            total += rec(k + 1, pairs, rest, used);
            rest[i] += mult;
            rest[j] += mult;
        }
        used.pop();
        total
    }
    rec(0, &pairs, &mut degrees.to_vec(), &mut Vec::new())
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
