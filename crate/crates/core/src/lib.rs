//! Exact decomposition of tensor products of irreducible SL(2) representations.
//!
//! The space `S^{d_1}V ⊗ … ⊗ S^{d_m}V` splits into irreducible subspaces `T_G`, one for
//! every outerplanar graph `G` on the vertices `0, 1, …, m` whose degrees are
//! `(d_0, d_1, …, d_m)`; the root degree `d_0` gives the irreducible type `ρ_{d_0}`.
//! Each `T_G` comes with an explicit basis `t_{G,0}, …, t_{G,d_0}` of integer tensors.
//!
//! The crate is organised bottom-up:
//!
//! * [`charring`]: characters (symmetric Laurent polynomials) and multiplicities.
//! * [`opgraph`]: canonical noncrossing multigraphs, enumeration via bracket words,
//!   counting, orientations.
//! * [`tensorspace`]: the monomial basis and sparse exact tensors `t_G`, `t_{G,i}`.
//! * [`sl2act`]: the group and Lie algebra actions.
//! * [`decomp`]: the full decomposition with verification and projection.
//! * [`oracle`]: brute-force certificates independent of the graph constructions.
//! * [`verify`]: the property suite; [`render`] and [`cli`] back the `outerplanar` binary.
//!
//! ```
//! use outerplanar::{decomp, Degrees};
//!
//! let report = decomp::decompose(&Degrees::new(vec![1, 1]).unwrap()).unwrap();
//! assert_eq!(report.summary(), "ρ2 ⊕ ρ0, dim 4 = 4");
//! ```

pub mod charring;
pub mod cli;
pub mod decomp;
mod degrees;
mod error;
pub mod linalg;
pub mod opgraph;
pub mod oracle;
pub mod render;
pub mod sl2act;
pub mod tensorspace;
pub mod verify;

pub use degrees::Degrees;
pub use error::{Error, Result};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
