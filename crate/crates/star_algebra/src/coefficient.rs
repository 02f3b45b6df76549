//! Complex coefficients carrying exact powers of the formal parameters ħ and μ.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;

/// Complex parts closer than this are equal.
pub const COEFF_TOL: f64 = 1e-12;

/// `value · ħ^hbar_power · μ^(mu_twice/2)`.
///
/// The μ exponent is stored in half units because the torus cocycle takes
/// values μ^{±1/2} on generators; every relation coefficient has an even
/// `mu_twice`. The formal ħ is imaginary under conjugation (ħ* = −ħ), which
/// makes i·ħ real and keeps the twisted relations closed under *.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Coefficient {
    pub value: Complex64,
    pub hbar_power: u32,
    pub mu_twice: i32,
}

impl Coefficient {
    pub const fn new(value: Complex64, hbar_power: u32, mu_twice: i32) -> Self {
        Coefficient { value, hbar_power, mu_twice }
    }

    pub const fn scalar(value: Complex64) -> Self {
        Coefficient { value, hbar_power: 0, mu_twice: 0 }
    }

    pub const fn real(x: f64) -> Self {
        Self::scalar(Complex64::new(x, 0.0))
    }

    pub const fn one() -> Self {
        Self::real(1.0)
    }

    pub const fn zero() -> Self {
        Self::real(0.0)
    }

    /// Integer μ power, when the exponent is whole.
    pub fn mu_power(&self) -> Option<i32> {
        (self.mu_twice % 2 == 0).then_some(self.mu_twice / 2)
    }

    pub fn is_zero(&self) -> bool {
        self.value.norm() <= COEFF_TOL
    }

    pub fn approx_eq(&self, other: &Coefficient) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        self.hbar_power == other.hbar_power
            && self.mu_twice == other.mu_twice
            && (self.value - other.value).norm() <= COEFF_TOL
    }

    pub fn conj(self) -> Self {
        let sign = if self.hbar_power % 2 == 1 { -1.0 } else { 1.0 };
        Coefficient {
            value: self.value.conj() * sign,
            hbar_power: self.hbar_power,
            mu_twice: -self.mu_twice,
        }
    }

    /// Multiplicative inverse; `None` for zero or when an ħ power would go negative.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() || self.hbar_power != 0 {
            return None;
        }
        Some(Coefficient { value: self.value.inv(), hbar_power: 0, mu_twice: -self.mu_twice })
    }

    pub fn scale(self, c: Complex64) -> Self {
        Coefficient { value: self.value * c, ..self }
    }

    /// Numeric value once ħ and μ^{1/2} are given.
    pub fn evaluate(&self, hbar: Complex64, half_mu: Complex64) -> Complex64 {
        self.value * hbar.powu(self.hbar_power) * half_mu.powi(self.mu_twice)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        Coefficient {
            value: self.value * rhs.value,
            hbar_power: self.hbar_power + rhs.hbar_power,
            mu_twice: self.mu_twice + rhs.mu_twice,
        }
    }
}

impl From<Complex64> for Coefficient {
    fn from(c: Complex64) -> Self {
        Coefficient::scalar(c)
    }
}

impl From<f64> for Coefficient {
    fn from(x: f64) -> Self {
        Coefficient::real(x)
    }
}

pub(crate) fn fmt_complex(c: Complex64) -> String {
    let re = if c.re.abs() < 5e-13 { 0.0 } else { c.re };
    let im = if c.im.abs() < 5e-13 { 0.0 } else { c.im };
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else if im < 0.0 {
        format!("({re}-{}i)", -im)
    } else {
        format!("({re}+{im}i)")
    }
}

pub(crate) fn fmt_params(hbar: u32, mu_twice: i32) -> String {
    let mut s = String::new();
    match hbar {
        0 => {}
        1 => s.push_str("*hbar"),
        n => s.push_str(&format!("*hbar^{n}")),
    }
    if mu_twice != 0 {
        if mu_twice % 2 == 0 {
            let p = mu_twice / 2;
            if p == 1 {
                s.push_str("*mu");
            } else {
                s.push_str(&format!("*mu^{p}"));
            }
        } else {
            s.push_str(&format!("*mu^({mu_twice}/2)"));
        }
    }
    s
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", fmt_complex(self.value), fmt_params(self.hbar_power, self.mu_twice))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_negates_mu() {
        let c = Coefficient::new(Complex64::new(2.0, 1.0), 0, 2);
        let d = c.conj();
        assert_eq!(d.value, Complex64::new(2.0, -1.0));
        assert_eq!(d.mu_power(), Some(-1));
    }

    #[test]
    fn i_hbar_is_real_under_conjugation() {
        let c = Coefficient::new(Complex64::i(), 1, 0);
        assert!(c.conj().approx_eq(&c));
    }

    #[test]
    fn mu_times_mubar_is_one() {
        let mu = Coefficient::new(Complex64::new(1.0, 0.0), 0, 2);
        assert!((mu * mu.conj()).approx_eq(&Coefficient::one()));
    }

    #[test]
    fn equality_respects_exponents_and_tolerance() {
        let a = Coefficient::new(Complex64::new(1.0, 0.0), 1, 0);
        let b = Coefficient::new(Complex64::new(1.0 + 5e-13, 0.0), 1, 0);
        let c = Coefficient::new(Complex64::new(1.0, 0.0), 0, 0);
        assert!(a.approx_eq(&b));
        assert!(!a.approx_eq(&c));
    }
}
