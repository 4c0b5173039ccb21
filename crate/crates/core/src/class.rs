//! Integer polynomials in the torus class `T = L - 1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Grothendieck class written as `sum c_i T^i`. Trailing zero
/// coefficients are always trimmed, so the zero class has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassPoly {
    coeffs: Vec<BigInt>,
}

impl ClassPoly {
    pub fn zero() -> Self {
        ClassPoly::default()
    }

    pub fn one() -> Self {
        ClassPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        ClassPoly::from_coeffs(alloc::vec![c.into()])
    }

    /// The torus class `T`.
    pub fn t() -> Self {
        ClassPoly::t_power(1)
    }

    /// The Lefschetz class `L = T + 1`.
    pub fn l() -> Self {
        ClassPoly::from_i64s(&[1, 1])
    }

    pub fn t_power(k: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        ClassPoly { coeffs }
    }

    /// `L^k = (T + 1)^k`.
    pub fn l_power(k: usize) -> Self {
        ClassPoly::l().pow(k as u32)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut c = ClassPoly { coeffs };
        c.trim();
        c
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        ClassPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Coefficients, lowest power of `T` first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `T`; `None` for the zero class.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplication by `T^k`.
    pub fn scale_t_power(&self, k: usize) -> ClassPoly {
        if self.is_zero() {
            return ClassPoly::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ClassPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> ClassPoly {
        ClassPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> ClassPoly {
        let mut out = ClassPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Quotient and remainder by `d`. Every step must divide the leading
    /// coefficient exactly, which always holds for monic `d`.
    pub fn div_rem(&self, d: &ClassPoly) -> Result<(ClassPoly, ClassPoly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::ExactDivisionFailure("division by the zero class".into()))?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((ClassPoly::zero(), self.clone()));
        }
        let mut quot = alloc::vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::ExactDivisionFailure(alloc::format!(
                    "{self} is not divisible by {d} over the integers"
                )));
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Ok((ClassPoly::from_coeffs(quot), ClassPoly::from_coeffs(rem)))
    }

    /// Exact quotient by `d`; a nonzero remainder is an error.
    pub fn div_exact(&self, d: &ClassPoly) -> Result<ClassPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::ExactDivisionFailure(alloc::format!(
                "{self} divided by {d} leaves remainder {r}"
            )));
        }
        Ok(q)
    }

    /// `c(T + a)`, by repeated synthetic division.
    pub fn taylor_shift(&self, a: &BigInt) -> ClassPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let next = c[j + 1].clone();
                c[j] += a * next;
            }
        }
        ClassPoly::from_coeffs(c)
    }

    /// Coefficients of the same class written in powers of `L`.
    pub fn to_l_basis(&self) -> Vec<BigInt> {
        self.taylor_shift(&BigInt::from(-1)).coeffs
    }

    /// The class whose expansion in powers of `L` has these coefficients.
    pub fn from_l_basis(coeffs: Vec<BigInt>) -> ClassPoly {
        ClassPoly::from_coeffs(coeffs).taylor_shift(&BigInt::one())
    }

    /// Renders in the named variable, highest power first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            first = false;
            let _ = match (i, mag.is_one()) {
                (0, _) => write!(out, "{mag}"),
                (1, true) => write!(out, "{var}"),
                (1, false) => write!(out, "{mag}*{var}"),
                (_, true) => write!(out, "{var}^{i}"),
                (_, false) => write!(out, "{mag}*{var}^{i}"),
            };
        }
        out
    }
}

impl fmt::Display for ClassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}

impl<'a> Add<&'a ClassPoly> for &'a ClassPoly {
    type Output = ClassPoly;
    fn add(self, rhs: &ClassPoly) -> ClassPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ClassPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a ClassPoly> for &'a ClassPoly {
    type Output = ClassPoly;
    fn sub(self, rhs: &ClassPoly) -> ClassPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ClassPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a ClassPoly> for &'a ClassPoly {
    type Output = ClassPoly;
    fn mul(self, rhs: &ClassPoly) -> ClassPoly {
        if self.is_zero() || rhs.is_zero() {
            return ClassPoly::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ClassPoly::from_coeffs(out)
    }
}

impl Neg for &ClassPoly {
    type Output = ClassPoly;
    fn neg(self) -> ClassPoly {
        ClassPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<ClassPoly> for ClassPoly {
            type Output = ClassPoly;
            fn $f(self, rhs: ClassPoly) -> ClassPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a ClassPoly> for ClassPoly {
            type Output = ClassPoly;
            fn $f(self, rhs: &'a ClassPoly) -> ClassPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<ClassPoly> for &'a ClassPoly {
            type Output = ClassPoly;
            fn $f(self, rhs: ClassPoly) -> ClassPoly {
                self.$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for ClassPoly {
    type Output = ClassPoly;
    fn neg(self) -> ClassPoly {
        -&self
    }
}
