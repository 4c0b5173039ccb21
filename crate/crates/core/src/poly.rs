//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients in `q` and the edge variables `t_e`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::EdgeId;

/// A polynomial variable. `Q` sorts before every edge variable, and edge
/// variables sort by identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Q,
    T(EdgeId),
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Q => f.write_str("q"),
            VarId::T(id) => write!(f, "t{id}"),
        }
    }
}

/// Exponent vector, stored sparsely as `(variable, exponent > 0)` sorted by
/// variable. Ordered graded-lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn from_powers<I: IntoIterator<Item = (VarId, u32)>>(powers: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in powers {
            m = m.mul(&Monomial(alloc::vec![(v, e)]));
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn powers(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) => match a.cmp(&b) {
                    Ordering::Less => {
                        out.push((a, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push((b, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        out.push((a, ea + eb));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// Removes `v`, returning its exponent and the remaining monomial.
    fn split_off(&self, v: VarId) -> (u32, Monomial) {
        let e = self.exponent(v);
        let rest = self.0.iter().copied().filter(|&(w, _)| w != v).collect();
        (e, Monomial(rest))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(other.0.iter()) {
                if a.0 != b.0 {
                    // the monomial carrying the earlier variable is larger
                    return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical sparse polynomial: no zero coefficients, one entry per
/// monomial. The zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        MPoly::monomial(c, Monomial::one())
    }

    pub fn monomial<C: Into<BigInt>>(c: C, m: Monomial) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn var(v: VarId) -> Self {
        MPoly::monomial(1, Monomial::var(v))
    }

    pub fn q() -> Self {
        MPoly::var(VarId::Q)
    }

    pub fn t(id: EdgeId) -> Self {
        MPoly::var(VarId::T(id))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Replaces every occurrence of `v` by `r`.
    pub fn substitute(&self, v: VarId, r: &MPoly) -> MPoly {
        let mut powers: Vec<MPoly> = alloc::vec![MPoly::one()];
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e == 0 {
                out.add_term(rest, c.clone());
                continue;
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * r;
                powers.push(next);
            }
            for (n, d) in &powers[e as usize].terms {
                out.add_term(rest.mul(n), c * d);
            }
        }
        out
    }

    /// Value at a point of the prime field with `prime` elements.
    pub fn eval_mod<F>(&self, assignment: F, prime: u64) -> Result<u64>
    where
        F: Fn(VarId) -> Option<u64>,
    {
        let p = BigInt::from(prime);
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let mut term = reduce_mod(c, &p) as u128;
            for &(v, e) in &m.0 {
                let x = assignment(v).ok_or_else(|| {
                    Error::InvalidArgument(alloc::format!("no value assigned to {v}"))
                })?;
                term = term * pow_mod(x % prime, e as u64, prime) as u128 % prime as u128;
            }
            acc = (acc + term) % prime as u128;
        }
        Ok(acc as u64)
    }

    /// Sum of the terms of minimal total degree.
    pub fn lowest_homogeneous_part(&self) -> Result<MPoly> {
        let low = self.terms.keys().map(Monomial::degree).min().ok_or_else(|| {
            Error::InvalidArgument("lowest homogeneous part of the zero polynomial".into())
        })?;
        Ok(MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == low)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Exact quotient by `q^k`.
    pub fn divide_exact_by_q_power(&self, k: u32) -> Result<MPoly> {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(VarId::Q);
            if e < k {
                return Err(Error::ExactDivisionFailure(alloc::format!(
                    "q^{k} does not divide a term of degree {e} in q"
                )));
            }
            let rest = if e > k { rest.mul(&Monomial(alloc::vec![(VarId::Q, e - k)])) } else { rest };
            out.add_term(rest, c.clone());
        }
        Ok(out)
    }

    /// `prod_{v in vars} v * p(1/v)`: flips each listed exponent `e` to
    /// `1 - e`. Every listed variable must occur with exponent at most 1.
    pub fn reciprocal_squarefree(&self, vars: &[VarId]) -> Result<MPoly> {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if let Some(&(v, _)) = m.0.iter().find(|(v, _)| !vars.contains(v)) {
                return Err(Error::InvalidArgument(alloc::format!("{v} is not being reversed")));
            }
            let mut powers = Vec::new();
            for &v in vars {
                match m.exponent(v) {
                    0 => powers.push((v, 1)),
                    1 => {}
                    _ => {
                        return Err(Error::InvalidArgument(alloc::format!(
                            "{v} occurs with exponent above 1"
                        )))
                    }
                }
            }
            out.add_term(Monomial::from_powers(powers), c.clone());
        }
        Ok(out)
    }
}

/// Least non-negative residue of `c` modulo `p`.
pub(crate) fn reduce_mod(c: &BigInt, p: &BigInt) -> u64 {
    let r = c.mod_floor(p);
    r.to_u64().expect("residue fits in u64")
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, prime: u64) -> u64 {
    let m = prime as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &'a MPoly) -> MPoly {
                (&self).$f(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char('*')?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Renders terms from the largest monomial down, e.g.
/// `q^3 + q^2*t1 - 2*q*t1*t2`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.0.is_empty() {
                write!(out, "{mag}")?;
            } else if mag.is_one() {
                write!(out, "{m}")?;
            } else {
                write!(out, "{mag}*{m}")?;
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::string::ToString;

    fn t(i: u32) -> MPoly {
        MPoly::t(EdgeId(i))
    }

    #[test]
    fn ring_examples() {
        let q = MPoly::q();
        assert_eq!((&q + &t(1)).to_string(), "q + t1");
        let prod = (&q + &t(1)) * (&q + &t(2));
        assert_eq!(prod.to_string(), "q^2 + q*t1 + q*t2 + t1*t2");
        assert!((&prod - &prod).is_zero());
        assert_eq!((&prod - &prod).to_string(), "0");
    }

    #[test]
    fn rendering_order() {
        let q = MPoly::q();
        let p = q.pow(3) + q.pow(2) * t(1) + q.pow(2) * t(2) + &q * &t(1) * t(2);
        assert_eq!(p.to_string(), "q^3 + q^2*t1 + q^2*t2 + q*t1*t2");
        let r = MPoly::constant(-2) * t(3) - MPoly::one() - q.clone();
        assert_eq!(r.to_string(), "-q - 2*t3 - 1");
    }

    #[test]
    fn substitution() {
        let (q, t1) = (MPoly::q(), t(1));
        let p = &q * &t1 + q.clone();
        assert_eq!(p.substitute(VarId::T(EdgeId(1)), &MPoly::zero()), q);

        let p = &q + &t1;
        assert!(p.substitute(VarId::T(EdgeId(1)), &-&q).is_zero());

        let u1 = MPoly::var(VarId::T(EdgeId(101)));
        let p = &t1 * &t(2);
        let s = p.substitute(VarId::T(EdgeId(1)), &(MPoly::one() + u1.clone()));
        assert_eq!(s, t(2) + u1 * t(2));
    }

    #[test]
    fn evaluation_mod_p() {
        let (q, t1) = (MPoly::q(), t(1));
        let p = q.clone() + &q * &t1;
        let at = |qv: u64, tv: u64| move |v: VarId| Some(if v == VarId::Q { qv } else { tv });
        assert_eq!(p.eval_mod(at(1, 1), 2).unwrap(), 0);
        assert_eq!(p.eval_mod(at(1, 0), 2).unwrap(), 1);

        let tri = q.pow(3)
            + q.pow(2) * (t(1) + t(2) + t(3))
            + &q * &(t(1) * t(2) + t(1) * t(3) + t(2) * t(3) + t(1) * t(2) * t(3));
        assert_eq!(tri.eval_mod(at(2, 0), 3).unwrap(), 2);
        assert!(matches!(p.eval_mod(|_| None, 5), Err(Error::InvalidArgument(_))));
        assert_eq!(MPoly::constant(-1).eval_mod(|_| None, 7).unwrap(), 6);
    }

    #[test]
    fn lowest_part() {
        let (q, t1) = (MPoly::q(), t(1));
        let p = q.pow(2) + &q * &t1 + q.clone();
        assert_eq!(p.lowest_homogeneous_part().unwrap(), q);
        let h = q.pow(2) + &q * &t1;
        assert_eq!(h.lowest_homogeneous_part().unwrap(), h);
        assert!(MPoly::zero().lowest_homogeneous_part().is_err());
    }

    #[test]
    fn q_power_division() {
        let (q, t1) = (MPoly::q(), t(1));
        let p = &q * &t1 + q.pow(2);
        assert_eq!(p.divide_exact_by_q_power(1).unwrap(), t1.clone() + q.clone());
        let p = q.pow(3) + q.pow(2) * t1.clone();
        assert_eq!(p.divide_exact_by_q_power(2).unwrap(), q.clone() + t1.clone());
        let p = q + t1;
        assert!(matches!(p.divide_exact_by_q_power(1), Err(Error::ExactDivisionFailure(_))));
    }

    #[test]
    fn reciprocal() {
        let vars = [VarId::T(EdgeId(1)), VarId::T(EdgeId(2)), VarId::T(EdgeId(3))];
        let phi = t(1) * t(2) + t(1) * t(3) + t(2) * t(3);
        assert_eq!(phi.reciprocal_squarefree(&vars).unwrap(), t(3) + t(2) + t(1));
        assert!(t(1).pow(2).reciprocal_squarefree(&vars).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        let term = (-5i64..=5, 0u32..3, 0u32..3, 0u32..2);
        proptest::collection::vec(term, 0..5).prop_map(|terms| {
            let mut p = MPoly::zero();
            for (c, eq, e1, e2) in terms {
                let m = Monomial::from_powers([
                    (VarId::Q, eq),
                    (VarId::T(EdgeId(1)), e1),
                    (VarId::T(EdgeId(2)), e2),
                ]
                .into_iter()
                .filter(|&(_, e)| e > 0));
                p = p + MPoly::monomial(c, m);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(!a.terms().any(|(_, c)| c.is_zero()));
        }

        #[test]
        fn shift_and_unshift(a in arb_poly()) {
            let v = VarId::T(EdgeId(1));
            let up = a.substitute(v, &(MPoly::var(v) + MPoly::one()));
            prop_assert_eq!(up.substitute(v, &(MPoly::var(v) - MPoly::one())), a);
        }

        #[test]
        fn eval_is_a_homomorphism(
            a in arb_poly(), b in arb_poly(),
            point in (0u64..17, 0u64..17, 0u64..17),
            pi in 0usize..7,
        ) {
            let prime = [2u64, 3, 5, 7, 11, 13, 17][pi];
            let at = |v: VarId| Some(match v {
                VarId::Q => point.0,
                VarId::T(EdgeId(1)) => point.1,
                _ => point.2,
            });
            let ea = a.eval_mod(at, prime).unwrap();
            let eb = b.eval_mod(at, prime).unwrap();
            prop_assert_eq!((&a + &b).eval_mod(at, prime).unwrap(), (ea + eb) % prime);
            prop_assert_eq!((&a * &b).eval_mod(at, prime).unwrap(), ea * eb % prime);
        }
    }
}
