//! Exact arithmetic in the ring of integer Laurent polynomials Z[q, q^-1].

use crate::{Error, Result};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An integer Laurent polynomial in one variable `q`.
///
/// Coefficients are stored densely starting at the lowest exponent `lo`.
/// The zero polynomial is the empty coefficient vector; otherwise the first
/// and last stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    lo: i32,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::term(1, 0)
    }

    /// The monomial `c * q^e`.
    pub fn term(c: i64, e: i32) -> Self {
        if c == 0 {
            return Laurent::zero();
        }
        Laurent { lo: e, coeffs: vec![c] }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Laurent::term(1, e)
    }

    fn from_raw(lo: i32, coeffs: Vec<i64>) -> Self {
        let mut p = Laurent { lo, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1] && self.lo == 0
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i32) -> i64 {
        let idx = e - self.lo;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[idx as usize]
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i32 - 1)
    }

    /// Iterates `(exponent, coefficient)` pairs with ascending exponents,
    /// skipping zero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.lo + i as i32, c))
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Laurent::zero();
        }
        let hi = self.max_exp().unwrap();
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent::from_raw(-hi, coeffs)
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// True when supported on strictly negative exponents only.
    pub fn is_strictly_lower(&self) -> bool {
        self.max_exp().is_none_or(|hi| hi < 0)
    }

    /// Exact division; fails when `self` is not a multiple of `den`.
    pub fn exact_div(&self, den: &Laurent) -> Result<Laurent> {
        if den.is_zero() {
            return Err(Error::Division("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        let n = self.coeffs.len();
        let m = den.coeffs.len();
        if n < m {
            return Err(Error::Division(format!("{self} not divisible by {den}")));
        }
        let mut work = self.coeffs.clone();
        let mut quot = vec![0i64; n - m + 1];
        for k in 0..=n - m {
            let c = work[k];
            if c % den.coeffs[0] != 0 {
                return Err(Error::Division(format!("{self} not divisible by {den}")));
            }
            let qk = c / den.coeffs[0];
            quot[k] = qk;
            if qk != 0 {
                for (j, &dj) in den.coeffs.iter().enumerate() {
                    work[k + j] -= qk * dj;
                }
            }
        }
        if work.iter().any(|&c| c != 0) {
            return Err(Error::Division(format!("{self} not divisible by {den}")));
        }
        Ok(Laurent::from_raw(self.lo - den.lo, quot))
    }

    fn add_scaled(&mut self, other: &Laurent, scale: i64) {
        if other.is_zero() || scale == 0 {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            for c in &mut self.coeffs {
                *c *= scale;
            }
            self.trim();
            return;
        }
        let lo = self.lo.min(other.lo);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - lo) as usize] += scale * c;
        }
        *self = Laurent::from_raw(lo, coeffs);
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        self.add_scaled(rhs, 1);
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        self.add_scaled(rhs, -1);
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -*c;
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_raw(self.lo + rhs.lo, coeffs)
    }
}

fn fmt_q_pow(f: &mut fmt::Formatter<'_>, e: i32) -> fmt::Result {
    if e == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{e}")
    }
}

impl fmt::Display for Laurent {
    /// Renders terms with ascending exponents, e.g. `q^-1+q`, `2-q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first && c > 0 {
                write!(f, "+")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{c}")?;
            } else if c == 1 {
                fmt_q_pow(f, e)?;
            } else if c == -1 {
                write!(f, "-")?;
                fmt_q_pow(f, e)?;
            } else {
                write!(f, "{c}*")?;
                fmt_q_pow(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let p = &Laurent::term(1, 1) + &Laurent::term(1, -1);
        let sq = &p * &p;
        assert_eq!(sq, {
            let mut s = Laurent::term(1, 2);
            s += &Laurent::term(2, 0);
            s += &Laurent::term(1, -2);
            s
        });
        assert_eq!(&sq - &sq, Laurent::zero());
        assert!((&p - &p.bar()).is_zero());
    }

    #[test]
    fn bar_reverses_support() {
        let p = &Laurent::term(3, 2) + &Laurent::term(-1, -5);
        let b = p.bar();
        assert_eq!(b.coeff(-2), 3);
        assert_eq!(b.coeff(5), -1);
        assert_eq!(b.bar(), p);
    }

    #[test]
    fn display_ascending() {
        let p = &Laurent::term(1, 1) + &Laurent::term(1, -1);
        assert_eq!(p.to_string(), "q^-1+q");
        let m = &Laurent::term(-2, 0) + &Laurent::term(1, 3);
        assert_eq!(m.to_string(), "-2+q^3");
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(Laurent::term(-1, -1).to_string(), "-q^-1");
    }

    #[test]
    fn exact_division() {
        let pi = &Laurent::term(1, 1) + &Laurent::term(1, -1);
        let h = &pi * &(&Laurent::term(2, 0) + &Laurent::term(1, -3));
        let g = h.exact_div(&pi).unwrap();
        assert_eq!(&g * &pi, h);
        let bad = &h + &Laurent::one();
        assert!(bad.exact_div(&pi).is_err());
        assert!(Laurent::one().exact_div(&Laurent::zero()).is_err());
        assert_eq!(Laurent::zero().exact_div(&pi).unwrap(), Laurent::zero());
    }

    #[test]
    fn lower_half_predicate() {
        assert!(Laurent::term(1, -1).is_strictly_lower());
        assert!(!Laurent::one().is_strictly_lower());
        assert!(Laurent::zero().is_strictly_lower());
    }
}
