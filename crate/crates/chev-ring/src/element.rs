use std::fmt;

use crate::error::{Result, RingError};
use crate::ring::{Ring, Value, Q};

/// A value bundled with its ring; binary operations check that both operands
/// live in the same ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    value: Value,
}

impl RingElement {
    pub fn new(ring: &Ring, value: Value) -> Self {
        RingElement { ring: ring.clone(), value }
    }

    pub fn from_i64(ring: &Ring, v: i64) -> Self {
        Self::new(ring, ring.from_i64(v))
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Self> {
        Ok(Self::new(ring, ring.parse_elem(s)?))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    fn same(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::MixedRings(self.ring.to_string(), other.ring.to_string()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::new(&self.ring, self.ring.add(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::new(&self.ring, self.ring.sub(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::new(&self.ring, self.ring.mul(&self.value, &other.value)))
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.ring, self.ring.neg(&self.value))
    }

    /// `None` signals that the element lies in the maximal ideal.
    pub fn try_invert(&self) -> Option<Self> {
        self.ring.try_inv(&self.value).map(|v| Self::new(&self.ring, v))
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(&self.value)
    }

    /// Image in the residue field.
    pub fn residue(&self) -> RingElement {
        RingElement::new(&self.ring.residue_ring(), self.ring.residue(&self.value))
    }

    pub fn jet_linear_coeffs(&self) -> Result<(Q, Vec<Q>)> {
        self.ring.jet_linear_coeffs(&self.value)
    }

    pub fn sum_of_two_units(&self) -> (Self, Self) {
        let (a, b) = self.ring.sum_of_two_units(&self.value);
        (Self::new(&self.ring, a), Self::new(&self.ring, b))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.value))
    }
}
