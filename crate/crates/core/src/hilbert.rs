//! Univariate numerical polynomials in `t`, used for Hilbert polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, Rational};

/// Polynomial in `t` with rational coefficients, stored lowest degree first
/// without trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct HilbertPoly {
    coeffs: Vec<Rational>,
}

impl HilbertPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_ints(&[c])
    }

    pub fn zero() -> Self {
        HilbertPoly { coeffs: Vec::new() }
    }

    /// `t - a`.
    pub fn shifted_t(a: i64) -> Self {
        Self::from_ints(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `-1`.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn eval(&self, t: i64) -> Rational {
        let t = Rational::from_integer(t.into());
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &t + c;
        }
        acc
    }

    /// Value at `t` as an integer; `None` when it is not integral.
    pub fn eval_int(&self, t: i64) -> Option<i64> {
        let v = self.eval(t);
        v.is_integer().then(|| v.numer().to_i64()).flatten()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `p(t + a)`.
    pub fn shift(&self, a: i64) -> Self {
        let mut acc = Self::zero();
        let x = Self::from_ints(&[a, 1]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x).add(&Self::new(vec![c.clone()]));
        }
        acc
    }

    /// First difference `p(t) - p(t - 1)`.
    pub fn delta(&self) -> Self {
        self.sub(&self.shift(-1))
    }

    /// The binomial polynomial `C(t + a, k)` in `t`.
    pub fn binomial(a: i64, k: u32) -> Self {
        let mut acc = Self::constant(1);
        for i in 0..k as i64 {
            acc = acc.mul(&Self::from_ints(&[a - i, 1]));
        }
        let mut fact = BigInt::one();
        for i in 1..=k {
            fact *= i;
        }
        acc.scale(&Rational::new(BigInt::one(), fact))
    }

    /// True when the polynomial takes integer values on the integers.
    pub fn is_numerical(&self) -> bool {
        // integer valued on Z iff integer valued on deg+1 consecutive integers
        (0..=self.degree().max(0)).all(|t| self.eval(t).is_integer())
    }

    /// Solves `q(t) - q(t-1) = self` with `q(0) = c`.
    pub fn antidifference(&self, c: i64) -> Self {
        // write self in the basis C(t, k); then q = sum a_k C(t+1, k+1) + const
        let d = self.degree();
        if d < 0 {
            return Self::constant(c);
        }
        let mut rest = self.clone();
        let mut q = Self::zero();
        for k in (0..=d as u32).rev() {
            let basis = Self::binomial(0, k);
            let lead = rest.coeffs.get(k as usize).cloned().unwrap_or_default();
            let blead = basis.coeffs[k as usize].clone();
            let a = lead / blead;
            rest = rest.sub(&basis.scale(&a));
            q = q.add(&Self::binomial(1, k + 1).scale(&a));
        }
        let c0 = q.eval(0);
        q.add(&Self::new(vec![Rational::from_integer(c.into()) - c0]))
    }
}

impl fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let body = format_rational(&abs);
            match k {
                0 => write!(f, "{}", body)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", body)?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<HilbertPoly> for String {
    fn from(p: HilbertPoly) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for HilbertPoly {
    type Error = crate::error::Error;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        crate::parse::parse_hilbert_poly(&s)
    }
}

/// Binomial coefficient as an integer, zero when `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_eval() {
        let p = HilbertPoly::from_ints(&[1, 4, 1]);
        assert_eq!(p.to_string(), "t^2 + 4*t + 1");
        assert_eq!(p.eval_int(2), Some(13));
        assert_eq!(HilbertPoly::from_ints(&[-3, -2]).to_string(), "-2*t - 3");
    }

    #[test]
    fn delta_and_antidifference_are_inverse() {
        let py = HilbertPoly::from_ints(&[3, 2]);
        let p = py.antidifference(0);
        assert_eq!(p, HilbertPoly::from_ints(&[0, 4, 1]));
        assert_eq!(p.delta(), py);
        assert_eq!(HilbertPoly::zero().antidifference(5), HilbertPoly::constant(5));
        assert_eq!(
            HilbertPoly::constant(2).antidifference(1),
            HilbertPoly::from_ints(&[1, 2])
        );
    }

    #[test]
    fn binomial_polynomials() {
        let b = HilbertPoly::binomial(2, 2);
        for t in 0..6 {
            assert_eq!(b.eval_int(t), Some(binom(t + 2, 2) as i64));
        }
        assert!(b.is_numerical());
        assert!(!HilbertPoly::new(vec![crate::algebra::ratio(1, 2)]).is_numerical());
    }
}
