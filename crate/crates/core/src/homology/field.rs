use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A prime modulus, checked by trial division at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    /// Moduli are kept below 2^32 so that every product fits comfortably in `u64`.
    pub const MAX: u64 = u32::MAX as u64;

    pub fn new(p: u64) -> Result<Self> {
        if !(2..=Self::MAX).contains(&p) {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Self(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Coefficient field for homology: the rationals or a prime field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(Prime),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        Prime::new(p).map(FieldSpec::PrimeField)
    }

    /// Field characteristic (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p.get(),
        }
    }
}

/// Prints `Q` or `Fp:<p>`, the form used in JSON reports.
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{}", p.get()),
        }
    }
}

/// Accepts `Q`, `F<p>`, `Fp<p>` and `Fp:<p>`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" || t == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("Fp"))
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::BadField(s.to_string()))?;
        let p: u64 = digits.parse().map_err(|_| Error::BadField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}
