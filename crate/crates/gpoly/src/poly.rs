//! Dense polynomials over arbitrary-precision non-negative integers.
//!
//! Coefficient `i` counts objects of size `i`, so everything here stays in
//! exact integer arithmetic; there is no floating point anywhere.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

/// Exact binomial coefficient with the convention C(n, k) = 0 for k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Product of the odd numbers 1·3·5···(2j−1); the number of perfect
/// matchings on 2j points.
pub fn double_factorial_odd(j: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    let mut odd = 1u64;
    for _ in 0..j {
        acc *= odd;
        odd += 2;
    }
    acc
}

/// A polynomial with non-negative integer coefficients, stored densely with
/// trailing zeros trimmed. The zero polynomial has no coefficients and a
/// degree of `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigUint>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigUint::from(1u32)],
        }
    }

    /// Builds a polynomial from coefficients indexed by exponent.
    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_u64_coeffs(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .is_some_and(|c| *c == BigUint::from(0u32))
        {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// (1 + x)^n with exact coefficients.
    pub fn binomial_power(n: usize) -> Self {
        let mut row = Vec::with_capacity(n + 1);
        let mut c = BigUint::from(1u32);
        for i in 0..=n as u64 {
            row.push(c.clone());
            if i < n as u64 {
                c *= n as u64 - i;
                c /= i + 1;
            }
        }
        Polynomial { coeffs: row }
    }

    /// Checks that the coefficient sequence is non-decreasing and then
    /// non-increasing. On failure returns the indices `(i, i+1)` of the first
    /// strict rise that follows a strict fall.
    pub fn unimodal_witness(&self) -> Option<(usize, usize)> {
        let mut fell = false;
        for i in 0..self.coeffs.len().saturating_sub(1) {
            if self.coeffs[i + 1] < self.coeffs[i] {
                fell = true;
            } else if self.coeffs[i + 1] > self.coeffs[i] && fell {
                return Some((i, i + 1));
            }
        }
        None
    }

    pub fn is_unimodal(&self) -> bool {
        self.unimodal_witness().is_none()
    }

    /// True iff a_i² ≥ a_{i−1}·a_{i+1} for every internal index and the
    /// support has no internal zeros.
    pub fn is_log_concave(&self) -> bool {
        let first = match self.coeffs.iter().position(|c| *c != BigUint::from(0u32)) {
            Some(i) => i,
            None => return true,
        };
        if self.coeffs[first..].iter().any(|c| *c == BigUint::from(0u32)) {
            return false;
        }
        for i in 1..self.coeffs.len().saturating_sub(1) {
            if &self.coeffs[i] * &self.coeffs[i] < &self.coeffs[i - 1] * &self.coeffs[i + 1] {
                return false;
            }
        }
        true
    }

    /// Coefficients as decimal strings, index = exponent.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coeff_strings<S: AsRef<str>>(strings: &[S]) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            let c = BigUint::from_str(s.as_ref().trim())
                .map_err(|_| Error::PolynomialParse(format!("bad coefficient '{}'", s.as_ref())))?;
            coeffs.push(c);
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Canonical text form: `a_0 + a_1 x + a_2 x^2 + ...` with decimal
/// coefficients, every exponent up to the degree listed.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} x")?,
                _ => write!(f, "{c} x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::PolynomialParse("empty input".into()));
        }
        let mut coeffs: Vec<BigUint> = Vec::new();
        let mut seen = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::PolynomialParse("empty term".into()));
            }
            let (coeff_part, exp) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let rest = term[pos + 1..].trim();
                    let exp = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::PolynomialParse(format!("bad exponent in '{term}'")))?
                    } else {
                        return Err(Error::PolynomialParse(format!("bad term '{term}'")));
                    };
                    (term[..pos].trim().trim_end_matches('*').trim(), exp)
                }
            };
            let coeff = if coeff_part.is_empty() {
                BigUint::from(1u32)
            } else {
                BigUint::from_str(coeff_part)
                    .map_err(|_| Error::PolynomialParse(format!("bad coefficient in '{term}'")))?
            };
            if seen.contains(&exp) {
                return Err(Error::PolynomialParse(format!("exponent {exp} appears twice")));
            }
            seen.push(exp);
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigUint::from(0u32));
            }
            coeffs[exp] = coeff;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        let mut coeffs = vec![BigUint::from(0u32); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigUint::from(0u32); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[u64]) -> Polynomial {
        Polynomial::from_u64_coeffs(cs)
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::from(0u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(
            binomial(64, 32).to_string(),
            "1832624140942590534", // exact central coefficient of (1+x)^64
        );
    }

    #[test]
    fn binomial_power_small() {
        assert_eq!(Polynomial::binomial_power(0), p(&[1]));
        assert_eq!(Polynomial::binomial_power(4), p(&[1, 4, 6, 4, 1]));
        assert_eq!(
            Polynomial::binomial_power(64).coeff(32),
            binomial(64, 32)
        );
    }

    #[test]
    fn multiply_examples() {
        let one_plus_x = p(&[1, 1]);
        assert_eq!(&one_plus_x * &one_plus_x, p(&[1, 2, 1]));
        let p2 = p(&[1, 2, 1]);
        let p3 = p(&[1, 3, 3]);
        assert_eq!(&p2 * &p3, p(&[1, 5, 10, 9, 3]));
        assert_eq!(&p2 * &Polynomial::one(), p2);
        assert_eq!(&p2 * &Polynomial::zero(), Polynomial::zero());
    }

    #[test]
    fn unimodal_witnesses() {
        let k84 = p(&[1, 12, 66, 60, 71, 56, 28, 8, 1]);
        assert_eq!(k84.unimodal_witness(), Some((3, 4)));
        let b17_6 = p(&[1, 24, 276, 275, 355, 261, 103, 17]);
        assert_eq!(b17_6.unimodal_witness(), Some((3, 4)));
        assert!(Polynomial::binomial_power(9).is_unimodal());
        assert!(p(&[]).is_unimodal());
        assert!(p(&[7]).is_unimodal());
        assert!(p(&[1, 1, 2, 1]).is_unimodal());
        // a zero between positive coefficients breaks unimodality
        assert_eq!(p(&[1, 0, 1]).unimodal_witness(), Some((1, 2)));
    }

    #[test]
    fn log_concavity() {
        assert!(Polynomial::binomial_power(12).is_log_concave());
        assert!(!p(&[1, 1, 3]).is_log_concave());
        let petersen = p(&[1, 10, 45, 90, 80, 30, 5]);
        assert!(petersen.is_log_concave());
        assert!(!p(&[1, 0, 1]).is_log_concave());
    }

    #[test]
    fn display_and_parse() {
        let q = p(&[1, 24, 276, 275]);
        assert_eq!(q.to_string(), "1 + 24 x + 276 x^2 + 275 x^3");
        assert_eq!("1 + 24 x + 276 x^2 + 275 x^3".parse::<Polynomial>().unwrap(), q);
        assert_eq!("0".parse::<Polynomial>().unwrap(), Polynomial::zero());
        assert_eq!("x^2 + 3x".parse::<Polynomial>().unwrap(), p(&[0, 3, 1]));
        assert!("1 + y".parse::<Polynomial>().is_err());
        assert!("2 + 3 + x".parse::<Polynomial>().is_err());
    }

    #[test]
    fn coeff_strings_roundtrip() {
        let q = Polynomial::from_coeff_strings(&["1", "10", "45"]).unwrap();
        assert_eq!(q, p(&[1, 10, 45]));
        assert_eq!(q.coeff_strings(), vec!["1", "10", "45"]);
        let big = Polynomial::from_coeff_strings(&["9999999999999999999999999999999999999999"])
            .unwrap();
        assert_eq!(
            big.coeff_strings()[0],
            "9999999999999999999999999999999999999999"
        );
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }
}
