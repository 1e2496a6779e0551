use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A non-empty tuple `(d_1, …, d_m)` of irreducible degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degrees(Vec<u32>);

impl Degrees {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyDegrees);
        }
        Ok(Degrees(degrees))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|d| = d_1 + … + d_m`.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }

    /// `Π (d_i + 1)`, saturating at `u128::MAX`.
    pub fn dimension(&self) -> u128 {
        self.0
            .iter()
            .fold(1u128, |acc, &d| acc.saturating_mul(u128::from(d) + 1))
    }

    /// `(d_0, d_1, …, d_m)`.
    pub fn with_root(&self, d0: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(d0);
        v.extend_from_slice(&self.0);
        v
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl TryFrom<Vec<u32>> for Degrees {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Degrees::new(v)
    }
}

impl TryFrom<&[u32]> for Degrees {
    type Error = Error;

    fn try_from(v: &[u32]) -> Result<Self> {
        Degrees::new(v.to_vec())
    }
}

impl FromStr for Degrees {
    type Err = Error;

    /// Parses a comma-separated list such as `1,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyDegrees);
        }
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::ParseDegrees(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .and_then(Degrees::new)
    }
}

impl fmt::Display for Degrees {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
