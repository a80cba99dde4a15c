//! Laurent polynomials in `q` with exponents in (1/2)ℤ.
//!
//! Exponents are stored as integer counts of half-units (the exponent e is
//! stored as 2e), so all arithmetic stays in `i64`. Rendering divides by two.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Laurent polynomial in q; keys are exponents in half-units, values are
/// nonzero integer coefficients, kept in ascending exponent order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    terms: BTreeMap<i64, i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial_half(0, 1)
    }

    /// `c * q^(half/2)`.
    pub fn monomial_half(half: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(half, coeff);
        }
        QPoly { terms }
    }

    /// `c * q^e` for an integer exponent e.
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        QPoly::monomial_half(2 * exp, coeff)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::monomial_half(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    /// Coefficient of q^(half/2).
    pub fn coeff_half(&self, half: i64) -> i64 {
        *self.terms.get(&half).unwrap_or(&0)
    }

    /// Terms in ascending exponent order as (half-units, coefficient).
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&h, &c)| (h, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_half(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_half(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_term(&mut self, half: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(half).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&half);
        }
    }

    /// Multiply by `q^(half/2)` (shift composes additively).
    pub fn shift_half(&self, half: i64) -> Self {
        let terms = self.terms.iter().map(|(&h, &c)| (h + half, c)).collect();
        QPoly { terms }
    }

    /// Multiply by `q^e`, integer e.
    pub fn shift(&self, exp: i64) -> Self {
        self.shift_half(2 * exp)
    }

    /// Bar involution q ↦ q⁻¹.
    pub fn bar(&self) -> Self {
        let terms = self.terms.iter().map(|(&h, &c)| (-h, c)).collect();
        QPoly { terms }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return QPoly::zero();
        }
        let terms = self.terms.iter().map(|(&h, &k)| (h, k * c)).collect();
        QPoly { terms }
    }

    /// Evaluate at q = 1 (sum of coefficients).
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Drop terms with exponent above `half/2`.
    pub fn truncate_half(&self, half: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(&h, _)| h <= half)
            .map(|(&h, &c)| (h, c))
            .collect();
        QPoly { terms }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&h, &c) in &rhs.terms {
            out.insert_term(h, c);
        }
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (&h, &c) in &rhs.terms {
            self.insert_term(h, c);
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&h, &c) in &rhs.terms {
            out.insert_term(h, -c);
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(-1)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&h1, &c1) in &self.terms {
            for (&h2, &c2) in &rhs.terms {
                out.insert_term(h1 + h2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

fn fmt_monomial(half: i64) -> String {
    if half == 0 {
        String::new()
    } else if half == 2 {
        "q".to_string()
    } else if half % 2 == 0 {
        format!("q^{}", half / 2)
    } else {
        format!("q^{{{}/2}}", half)
    }
}

impl fmt::Display for QPoly {
    /// Canonical rendering: terms ascending by exponent, half-integer
    /// exponents as `q^{k/2}`. Used verbatim in CLI and JSON output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&h, &c) in &self.terms {
            let mono = fmt_monomial(h);
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_involution_examples() {
        // bar(q + q^2) = q^-1 + q^-2
        let p = QPoly::monomial(1, 1) + QPoly::monomial(2, 1);
        let expected = QPoly::monomial(-1, 1) + QPoly::monomial(-2, 1);
        assert_eq!(p.bar(), expected);

        // bar is an involution on 2q^{-1/2} + 3q
        let p = QPoly::monomial_half(-1, 2) + QPoly::monomial(1, 3);
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn shift_by_half_integer() {
        // q^{3/2} * (1 + q^{1/2}) = q^{3/2} + q^2
        let p = QPoly::one() + QPoly::monomial_half(1, 1);
        let shifted = p.shift_half(3);
        let expected = QPoly::monomial_half(3, 1) + QPoly::monomial(2, 1);
        assert_eq!(shifted, expected);
        // shift composes additively
        assert_eq!(p.shift_half(1).shift_half(2), shifted);
    }

    #[test]
    fn rendering_is_canonical() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::one().to_string(), "1");
        let p = QPoly::monomial(1, 1) + QPoly::monomial(2, 1);
        assert_eq!(p.to_string(), "q + q^2");
        let p = QPoly::monomial(-1, 1) + QPoly::monomial_half(3, 2);
        assert_eq!(p.to_string(), "q^-1 + 2*q^{3/2}");
        let p = QPoly::constant(-1) + QPoly::monomial(2, 1);
        assert_eq!(p.to_string(), "-1 + q^2");
    }

    #[test]
    fn ring_arithmetic_is_exact() {
        let p = QPoly::monomial(1, 2) + QPoly::constant(-1);
        let q = QPoly::monomial(1, 1) + QPoly::constant(1);
        let prod = &p * &q;
        // (2q - 1)(q + 1) = 2q^2 + q - 1
        let expected =
            QPoly::monomial(2, 2) + QPoly::monomial(1, 1) + QPoly::constant(-1);
        assert_eq!(prod, expected);
        assert_eq!(prod.eval_one(), p.eval_one() * q.eval_one());
    }
}
