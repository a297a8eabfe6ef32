//! Weights as exact-rational coordinate vectors in the ambient ε-basis.
//!
//! The ambient dimension depends on the type: rank for B/C/D/F4, rank+1 for
//! type A, 8 for E6/E7/E8, and 3 for G2. Types A, G2, E6, E7 impose linear
//! constraints on the coordinates (sum zero, orthogonality to fixed vectors);
//! those are checked by the owning root system, not here.

use crate::rat::{parse_rat, Rat};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<Rat>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rat::zero(); dim])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| crate::rat::rint(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Euclidean dot product of ε-coordinates.
    pub fn dot(&self, other: &Weight) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Rat::zero();
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            acc += a * b;
        }
        acc
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    pub fn coord_sum(&self) -> Rat {
        let mut acc = Rat::zero();
        for a in &self.0 {
            acc += a;
        }
        acc
    }

    pub fn scaled(&self, s: &Rat) -> Weight {
        Weight(self.0.iter().map(|c| c * s).collect())
    }

    /// Concatenate coordinate blocks (used for stacked subalgebra weights).
    pub fn concat(parts: &[&Weight]) -> Weight {
        let mut v = Vec::new();
        for p in parts {
            v.extend(p.0.iter().cloned());
        }
        Weight(v)
    }

    pub fn slice(&self, start: usize, len: usize) -> Weight {
        Weight(self.0[start..start + len].to_vec())
    }

    /// Parse "a,b,c" with rational entries.
    pub fn parse(s: &str) -> Option<Weight> {
        let coords: Option<Vec<Rat>> = s.split(',').map(parse_rat).collect();
        coords.map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: &Weight) -> Weight {
        let s = crate::rat::rint(self);
        w.scaled(&s)
    }
}
