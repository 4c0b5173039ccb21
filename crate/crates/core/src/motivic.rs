//! Evaluations of classes through ring homomorphisms out of `Z[T]`, the
//! compactly supported Euler characteristic of the real chain loci, and the
//! decision-complexity bound derived from it.
//!
//! Every map here is an evaluation of the class; it says something about the
//! variety only because the classes are polynomial in `T`.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::class::ClassPoly;
use crate::graph::FamilySpec;

/// `chi(X(C))`, the class at `T = 0`.
pub fn chi_complex(c: &ClassPoly) -> BigInt {
    c.eval_i64(0)
}

/// `chi_c(X(R))`, the class at `T = -2`.
pub fn chi_c_real(c: &ClassPoly) -> BigInt {
    c.eval_i64(-2)
}

/// Virtual Poincare polynomial in `u`, from `T -> u - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualPoincare(pub ClassPoly);

impl VirtualPoincare {
    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn eval(&self, u: &BigInt) -> BigInt {
        self.0.eval(u)
    }
}

impl fmt::Display for VirtualPoincare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render("u"))
    }
}

pub fn virtual_poincare(c: &ClassPoly) -> VirtualPoincare {
    VirtualPoincare(c.taylor_shift(&BigInt::from(-1)))
}

/// E-polynomial from `T -> xy - 1`. Only powers of `xy` occur, so it is
/// stored as a polynomial in `s = xy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPolynomial(pub ClassPoly);

impl EPolynomial {
    /// Coefficient of `(xy)^i` at index `i`.
    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.0.eval(&(x * y))
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.render("s");
        let mut out = alloc::string::String::new();
        let mut chars = s.chars().peekable();
        while let Some(ch) = chars.next() {
            if ch != 's' {
                out.push(ch);
                continue;
            }
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut exp = alloc::string::String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    exp.push(*d);
                    chars.next();
                }
                out.push_str(&alloc::format!("x^{exp}*y^{exp}"));
            } else {
                out.push_str("x*y");
            }
        }
        f.write_str(&out)
    }
}

pub fn e_polynomial(c: &ClassPoly) -> EPolynomial {
    EPolynomial(c.taylor_shift(&BigInt::from(-1)))
}

fn minus_one_pow(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `chi_c` of the real fixed-`q` locus: `(-1)^#E - chi_c_real({Z_{G,q}})`.
pub fn chi_c_real_locus(c: &ClassPoly, edge_count: usize) -> BigInt {
    minus_one_pow(edge_count) - chi_c_real(c)
}

/// `(-1)^{mN+kN-k}((-1)^N - 2^{k(N-1)} (X/2)^N)` with
/// `X = 3^{m+1} + 1 - 2^{m+3}`, which is always even.
pub fn chi_c_chain_polygons(spec: FamilySpec) -> BigInt {
    let FamilySpec { m, k, n } = spec;
    let x = BigInt::from(3).pow(m as u32 + 1) + 1 - BigInt::from(2).pow(m as u32 + 3);
    let half: BigInt = x / 2;
    let inner = minus_one_pow(n) - BigInt::from(2).pow((k * (n - 1)) as u32) * half.pow(n as u32);
    minus_one_pow(m * n + k * n - k) * inner
}

/// `(-1)^{mN+kN+N-k}(1 - 2^{k(N-1)} (2^m + 1)^N)`.
pub fn chi_c_chain_bananas(spec: FamilySpec) -> BigInt {
    let FamilySpec { m, k, n } = spec;
    let base: BigInt = BigInt::from(2).pow(m as u32) + 1;
    let inner = BigInt::one() - BigInt::from(2).pow((k * (n - 1)) as u32) * base.pow(n as u32);
    minus_one_pow(m * n + k * n + n - k) * inner
}

/// Value of `(1/3)(log_3 chi_c - n - 4)`.
#[derive(Clone, Debug, PartialEq)]
pub enum DecisionBound {
    /// `chi_c` is a power of 3.
    Exact(BigRational),
    Approx(f64),
    /// `chi_c <= 0`, outside the domain of the logarithm.
    Undefined,
}

impl DecisionBound {
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            DecisionBound::Exact(r) => r.to_f64(),
            DecisionBound::Approx(x) => Some(*x),
            DecisionBound::Undefined => None,
        }
    }
}

impl fmt::Display for DecisionBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecisionBound::Exact(r) => write!(f, "{r}"),
            DecisionBound::Approx(x) => write!(f, "{x}"),
            DecisionBound::Undefined => f.write_str("undefined"),
        }
    }
}

fn log3_exact(x: &BigInt) -> Option<u64> {
    let three = BigInt::from(3);
    let mut x = x.clone();
    let mut j = 0;
    while x > BigInt::one() {
        let (q, r) = x.div_rem(&three);
        if !r.is_zero() {
            return None;
        }
        x = q;
        j += 1;
    }
    Some(j)
}

fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    libm::log(top.to_f64().unwrap_or(f64::INFINITY)) + shift as f64 * core::f64::consts::LN_2
}

pub fn decision_bound(chi_c: &BigInt, n: i64) -> DecisionBound {
    if !chi_c.is_positive() {
        return DecisionBound::Undefined;
    }
    let offset = BigInt::from(n) + 4;
    match log3_exact(chi_c) {
        Some(j) => DecisionBound::Exact(BigRational::new(BigInt::from(j) - offset, BigInt::from(3))),
        None => {
            let log3 = ln_big(chi_c) / libm::log(3.0);
            DecisionBound::Approx((log3 - n as f64 - 4.0) / 3.0)
        }
    }
}
