//! Brute-force certificates that never look at graphs.
//!
//! These only use the monomial basis and the Lie action: the invariant subspace is the
//! common kernel of `E` and `F`, and multiplicities come from weight-space dimensions.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::charring::MultiplicityMap;
use crate::decomp::DENSE_LIMIT;
use crate::linalg::{kernel, Echelon, SparseRow};
use crate::sl2act::{act_lie, LieGenerator};
use crate::tensorspace::{SparseTensor, TensorSpace};
use crate::{Degrees, Error, Result};

/// A basis (reduced echelon form) of `{t : E t = 0, F t = 0}`.
pub fn invariant_subspace_bruteforce(degrees: &Degrees) -> Result<Vec<SparseTensor>> {
    let space = TensorSpace::new(degrees.as_slice().to_vec());
    let dim = space.dimension();
    if dim > DENSE_LIMIT {
        return Err(Error::SizeGuard {
            dim,
            limit: DENSE_LIMIT,
        });
    }
    let n = dim as usize;
    // rows: (generator, output monomial); columns: input monomial
    let mut rows = vec![SparseRow::new(); 2 * n];
    for (col, e) in space.basis().enumerate() {
        let mono = SparseTensor::from_terms(space.clone(), [(e, BigRational::one())])?;
        for (g, x) in [LieGenerator::E, LieGenerator::F].into_iter().enumerate() {
            for (out, c) in act_lie(x, &mono).iter() {
                let r = g * n + space.position(out).expect("valid index");
                rows[r].insert(col, c.clone());
            }
        }
    }
    Ok(kernel(rows, n)
        .into_iter()
        .map(|v| {
            let dense: Vec<BigRational> = (0..n)
                .map(|c| v.get(&c).cloned().unwrap_or_default())
                .collect();
            SparseTensor::from_dense(space.clone(), &dense)
        })
        .collect())
}

/// Multiplicity of `ρ_k` as `dim W_k - dim W_{k+2}`, where `W_w` is spanned by the basis
/// vectors of weight `w`.
pub fn isotypic_dims_by_weights(degrees: &Degrees) -> MultiplicityMap {
    let space = TensorSpace::new(degrees.as_slice().to_vec());
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for e in space.basis() {
        *counts.entry(space.weight(&e)).or_insert(0) += 1;
    }
    let dim_at = |w: i64| counts.get(&w).copied().unwrap_or(0);
    MultiplicityMap::from_entries(counts.keys().filter(|&&w| w >= 0).map(|&w| {
        (
            w as u64,
            BigUint::from(dim_at(w).saturating_sub(dim_at(w + 2))),
        )
    }))
}

/// True iff the rational spans of `a` and `b` coincide.
pub fn span_equals(a: &[SparseTensor], b: &[SparseTensor]) -> Result<bool> {
    let Some(space) = a.first().or(b.first()).map(|t| t.space().clone()) else {
        return Ok(true);
    };
    for t in a.iter().chain(b) {
        if t.space() != &space {
            return Err(Error::SpaceMismatch(
                space.degrees().to_vec(),
                t.space().degrees().to_vec(),
            ));
        }
    }
    let row = |t: &SparseTensor| -> SparseRow {
        t.iter()
            .map(|(e, c)| (space.position(e).expect("valid index"), c.clone()))
            .collect()
    };
    let mut ea = Echelon::new();
    for t in a {
        ea.insert(row(t));
    }
    let mut eb = Echelon::new();
    for t in b {
        eb.insert(row(t));
    }
    Ok(ea.rank() == eb.rank() && b.iter().all(|t| ea.contains(row(t))))
}
