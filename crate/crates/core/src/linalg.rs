//! Exact linear algebra over the rationals.
//!
//! Rank uses fraction-free elimination on integer rows (each row is cleared of
//! denominators and kept primitive). Kernels and solutions use reduced row echelon form over
//! `BigRational`. Rows are sparse throughout; the matrices met here are mostly zeros.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type SparseRow = BTreeMap<usize, BigRational>;
type IntRow = BTreeMap<usize, BigInt>;

/// A dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn sparse_rows(&self) -> Vec<SparseRow> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank(self.sparse_rows())
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Clears denominators and divides out the content, leaving a positive leading entry.
fn to_primitive(row: impl IntoIterator<Item = (usize, BigRational)>) -> IntRow {
    let row: Vec<(usize, BigRational)> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: IntRow = row
        .into_iter()
        .map(|(c, v)| (c, (v * BigRational::from_integer(lcm.clone())).to_integer()))
        .collect();
    normalize(ints)
}

fn normalize(mut row: IntRow) -> IntRow {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return row;
    }
    let negative = row.values().next().is_some_and(|v| v.is_negative());
    let g = if negative { -g } else { g };
    if !g.is_one() {
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// Row echelon form built incrementally with fraction-free elimination.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        while let Some((&lead, lv)) = row.iter().next() {
            let Some(pivot) = self.pivots.get(&lead) else {
                break;
            };
            let pv = &pivot[&lead];
            let g = pv.gcd(lv);
            let row_scale = pv / &g;
            let pivot_scale = lv / &g;
            let mut next = IntRow::new();
            for (c, v) in &row {
                next.insert(*c, v * &row_scale);
            }
            for (c, v) in pivot {
                let entry = next.entry(*c).or_insert_with(BigInt::zero);
                *entry -= v * &pivot_scale;
            }
            next.retain(|_, v| !v.is_zero());
            row = normalize(next);
        }
        row
    }

    /// Adds a row; returns true when it was independent of the rows so far.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, BigRational)>) -> bool {
        let row = self.reduce(to_primitive(row));
        match row.keys().next() {
            Some(&lead) => {
                self.pivots.insert(lead, row);
                true
            }
            None => false,
        }
    }

    /// True when the row lies in the span of the inserted rows.
    pub fn contains(&self, row: impl IntoIterator<Item = (usize, BigRational)>) -> bool {
        self.reduce(to_primitive(row)).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }
}

/// Rank of a list of sparse rows.
///
/// Rows are first grouped into blocks that share no columns with each other, and each
/// block is eliminated on its own.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let rows: Vec<SparseRow> = rows.into_iter().collect();
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<usize, usize>, c: usize) -> usize {
        let p = *parent.entry(c).or_insert(c);
        if p == c {
            return c;
        }
        let root = find(parent, p);
        parent.insert(c, root);
        root
    }
    for row in &rows {
        let mut cols = row.iter().filter(|(_, v)| !v.is_zero()).map(|(&c, _)| c);
        if let Some(first) = cols.next() {
            let a = find(&mut parent, first);
            for c in cols {
                let b = find(&mut parent, c);
                if a != b {
                    parent.insert(b, a);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<SparseRow>> = BTreeMap::new();
    for row in rows {
        let Some((&c, _)) = row.iter().find(|(_, v)| !v.is_zero()) else {
            continue;
        };
        let root = find(&mut parent, c);
        blocks.entry(root).or_default().push(row);
    }
    blocks.into_values().map(block_rank).sum()
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(PRIME)) as u64
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

fn reduce_mod(v: &BigRational) -> Option<u64> {
    let (num, den) = match (v.numer().to_i64(), v.denom().to_u64()) {
        (Some(n), Some(d)) => (
            i128::from(n).rem_euclid(i128::from(PRIME)) as u64,
            d % PRIME,
        ),
        _ => {
            let p = BigInt::from(PRIME);
            let num = u64::try_from(v.numer().mod_floor(&p)).ok()?;
            let den = u64::try_from(v.denom().mod_floor(&p)).ok()?;
            (num, den)
        }
    };
    match den {
        0 => None,
        1 => Some(num),
        d => Some(mul_mod(num, inv_mod(d))),
    }
}

/// Rank over the integers modulo a fixed prime; `None` if a denominator vanishes there.
fn rank_mod_prime(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    for row in rows {
        let mut r = BTreeMap::new();
        for (&c, v) in row {
            let x = reduce_mod(v)?;
            if x != 0 {
                r.insert(c, x);
            }
        }
        while let Some((&lead, &lv)) = r.iter().next() {
            let Some(pivot) = pivots.get(&lead) else {
                break;
            };
            // pivot rows are normalized to a leading 1
            for (&c, &pv) in pivot {
                let entry = r.entry(c).or_insert(0);
                *entry = (*entry + PRIME - mul_mod(lv, pv)) % PRIME;
                if *entry == 0 {
                    r.remove(&c);
                }
            }
        }
        if let Some((&lead, &lv)) = r.iter().next() {
            let inv = inv_mod(lv);
            for v in r.values_mut() {
                *v = mul_mod(*v, inv);
            }
            pivots.insert(lead, r);
        }
    }
    Some(pivots.len())
}

/// Full rank modulo a prime certifies full rank over the rationals; otherwise eliminate
/// exactly.
fn block_rank(rows: Vec<SparseRow>) -> usize {
    if rank_mod_prime(&rows) == Some(rows.len()) {
        return rows.len();
    }
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Reduced row echelon form: each pivot row has a 1 at its pivot column and every other
/// pivot row is zero there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Pivot column to its row.
    pub rows: BTreeMap<usize, SparseRow>,
}

impl Rref {
    pub fn new(rows: impl IntoIterator<Item = SparseRow>) -> Self {
        let mut out: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for mut row in rows {
            row.retain(|_, v| !v.is_zero());
            for (pc, prow) in &out {
                if let Some(f) = row.get(pc).cloned() {
                    axpy(&mut row, &-f, prow);
                }
            }
            let Some((&lead, lv)) = row.iter().next() else {
                continue;
            };
            let inv = lv.recip();
            for v in row.values_mut() {
                *v *= &inv;
            }
            for prow in out.values_mut() {
                if let Some(f) = prow.get(&lead).cloned() {
                    axpy(prow, &-f, &row);
                }
            }
            out.insert(lead, row);
        }
        Rref { rows: out }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// `row += f * other`, dropping zeros.
fn axpy(row: &mut SparseRow, f: &BigRational, other: &SparseRow) {
    for (c, v) in other {
        let entry = row.entry(*c).or_insert_with(BigRational::zero);
        *entry += f * v;
        if entry.is_zero() {
            row.remove(c);
        }
    }
}

/// Basis of `{v : A v = 0}` for `A` given by sparse rows over `cols` columns, one vector per
/// free column, in reduced form.
pub fn kernel(rows: impl IntoIterator<Item = SparseRow>, cols: usize) -> Vec<SparseRow> {
    let rref = Rref::new(rows);
    let free = (0..cols).filter(|c| !rref.rows.contains_key(c));
    free.map(|f| {
        let mut v = SparseRow::new();
        v.insert(f, BigRational::one());
        for (&p, row) in &rref.rows {
            if let Some(x) = row.get(&f) {
                v.insert(p, -x.clone());
            }
        }
        v
    })
    .collect()
}

/// Solves `A c = b` for `A` with `vars` unknowns given as sparse rows. Returns `None` when
/// the system is inconsistent and the lexicographically simplest solution (free variables
/// set to zero) otherwise.
pub fn solve(
    rows: impl IntoIterator<Item = SparseRow>,
    rhs: &[BigRational],
    vars: usize,
) -> Option<Vec<BigRational>> {
    let augmented = rows.into_iter().zip(rhs).map(|(mut r, b)| {
        if !b.is_zero() {
            r.insert(vars, b.clone());
        }
        r
    });
    let rref = Rref::new(augmented);
    if rref.rows.contains_key(&vars) {
        return None;
    }
    let mut solution = vec![BigRational::zero(); vars];
    for (&p, row) in &rref.rows {
        if let Some(b) = row.get(&vars) {
            solution[p] = b.clone();
        }
    }
    Some(solution)
}
