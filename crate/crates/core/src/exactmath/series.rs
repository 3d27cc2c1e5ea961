use serde::{Deserialize, Serialize};

use super::field::Field;
use crate::error::{Error, Result};

/// Which point a series is expanded around.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expansion {
    /// Powers of `u^{-1}`; coefficient `i` multiplies `u^{-i}`.
    AtInfinity,
    /// Powers of `u`; coefficient `i` multiplies `u^i`.
    AtZero,
}

/// A power series cut off after `order`, tagged with its expansion point.
///
/// Series with different tags never combine: arithmetic between them is an
/// error rather than a silent reinterpretation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncatedSeries<F: Field> {
    direction: Expansion,
    coeffs: Vec<F>,
}

impl<F: Field> TruncatedSeries<F> {
    /// `coeffs` must be non-empty; its length fixes the order.
    pub fn new(direction: Expansion, coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least one coefficient");
        TruncatedSeries { direction, coeffs }
    }

    pub fn direction(&self) -> Expansion {
        self.direction
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    fn check(&self, other: &Self) -> Result<usize> {
        if self.direction != other.direction {
            return Err(Error::MixedExpansion);
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        let c = (0..=n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::new(self.direction, c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.check(other)?;
        let mut c = vec![F::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let b = other.coeff(j);
                if !b.is_zero() {
                    c[i + j] = c[i + j].clone() + a.clone() * b;
                }
            }
        }
        Ok(Self::new(self.direction, c))
    }

    /// Sum of the retained terms at a point, with `x` standing for `u^{-1}`
    /// or `u` according to the direction.
    pub fn partial_sum(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{int, Rational};

    #[test]
    fn mixing_directions_is_rejected() {
        let a = TruncatedSeries::new(Expansion::AtZero, vec![int(1)]);
        let b = TruncatedSeries::new(Expansion::AtInfinity, vec![int(1)]);
        assert!(matches!(a.add(&b), Err(Error::MixedExpansion)));
    }

    #[test]
    fn product_truncates_to_shorter_order() {
        let a: TruncatedSeries<Rational> =
            TruncatedSeries::new(Expansion::AtZero, vec![int(1), int(1), int(1)]);
        let b = TruncatedSeries::new(Expansion::AtZero, vec![int(1), int(-1)]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coefficients(), &[int(1), int(0)]);
    }
}
