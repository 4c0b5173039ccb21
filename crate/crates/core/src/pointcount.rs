//! Brute-force point counting over prime fields and exact interpolation of
//! the counts as a class polynomial.
//!
//! Polynomials are compiled once per prime. Variables are fixed outermost
//! first (`q`, then the edge variables by identifier); at each level the
//! partially specialized polynomial is a coefficient vector indexed by the
//! exponent patterns of the variables not yet fixed, and the map from one
//! level's patterns to the next is precomputed. Counting a point is then a
//! short vector update instead of a full evaluation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::class::ClassPoly;
use crate::error::{Error, Result};
use crate::poly::{pow_mod, reduce_mod, MPoly, VarId};

/// Default cap on `prime^ambient_dim`.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// The `q` value used for fixed-`q` counts. Primes must exceed it.
pub const FIXED_Q: u64 = 2;

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Primes `>= min`, increasing.
pub fn primes_from(min: u64) -> impl Iterator<Item = u64> {
    (min.max(2)..).filter(|&n| is_prime(n))
}

/// The `ambient_dim + 1` smallest primes `>= min` as samples, and the next
/// one as check prime.
pub fn ladder(ambient_dim: usize, min: u64) -> (Vec<u64>, u64) {
    let mut primes: Vec<u64> = primes_from(min).take(ambient_dim + 2).collect();
    let check = primes.pop().expect("infinitely many primes");
    (primes, check)
}

struct Level {
    /// For each pattern at this level, its index at the next level.
    parent: Vec<u32>,
    /// For each pattern, the exponent of this level's variable.
    exp: Vec<u32>,
    max_exp: u32,
    /// Index of the all-zero pattern, if present.
    constant: Option<usize>,
    /// Number of patterns at the next level.
    next_len: usize,
}

struct CompiledPoly {
    top: Vec<u64>,
    levels: Vec<Level>,
}

/// A system of polynomials specialized to one prime and one variable order.
pub struct CompiledSystem {
    prime: u64,
    vars: Vec<VarId>,
    polys: Vec<CompiledPoly>,
}

impl CompiledSystem {
    pub fn new(polys: &[MPoly], prime: u64) -> Self {
        let vars: Vec<VarId> = polys
            .iter()
            .flat_map(MPoly::variables)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let p = BigInt::from(prime);
        let compiled = polys
            .iter()
            .map(|poly| {
                let mut top = Vec::new();
                let mut patterns: Vec<Vec<u32>> = Vec::new();
                for (m, c) in poly.terms() {
                    let c = reduce_mod(c, &p);
                    if c != 0 {
                        top.push(c);
                        patterns.push(vars.iter().map(|&v| m.exponent(v)).collect());
                    }
                }
                let mut levels = Vec::with_capacity(vars.len());
                for _ in 0..vars.len() {
                    let mut index: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
                    let mut next = Vec::new();
                    let mut parent = Vec::with_capacity(patterns.len());
                    let mut exp = Vec::with_capacity(patterns.len());
                    for pat in &patterns {
                        let suffix = pat[1..].to_vec();
                        let id = *index.entry(suffix.clone()).or_insert_with(|| {
                            next.push(suffix);
                            next.len() as u32 - 1
                        });
                        parent.push(id);
                        exp.push(pat[0]);
                    }
                    let constant = patterns.iter().position(|pat| pat.iter().all(|&e| e == 0));
                    levels.push(Level {
                        max_exp: exp.iter().copied().max().unwrap_or(0),
                        parent,
                        exp,
                        constant,
                        next_len: next.len(),
                    });
                    patterns = next;
                }
                CompiledPoly { top, levels }
            })
            .collect();
        CompiledSystem { prime, vars, polys: compiled }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Number of variables actually occurring.
    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    fn scratch(&self) -> Vec<Vec<Vec<u64>>> {
        let mut bufs = Vec::with_capacity(self.dim() + 1);
        for level in 0..=self.dim() {
            bufs.push(
                self.polys
                    .iter()
                    .map(|poly| match level {
                        0 => poly.top.clone(),
                        _ => alloc::vec![0; poly.levels[level - 1].next_len],
                    })
                    .collect(),
            );
        }
        bufs
    }

    /// Common zeros in `F_p^dim`.
    pub fn zeros(&self) -> u64 {
        let mut bufs = self.scratch();
        self.zeros_from(0, &mut bufs)
    }

    /// Common zeros with the outermost variable fixed to `x`. Summing over
    /// `x in 0..prime` gives [`CompiledSystem::zeros`]; requires `dim > 0`.
    pub fn zeros_with_outer(&self, x: u64) -> u64 {
        let mut bufs = self.scratch();
        let (cur, rest) = bufs.split_first_mut().expect("nonempty scratch");
        self.specialize(0, cur, &mut rest[0], x);
        self.zeros_from(1, rest)
    }

    fn specialize(&self, level: usize, cur: &[Vec<u64>], out: &mut [Vec<u64>], x: u64) {
        let p = self.prime;
        for ((poly, c), o) in self.polys.iter().zip(cur).zip(out.iter_mut()) {
            let lv = &poly.levels[level];
            o.iter_mut().for_each(|v| *v = 0);
            let mut pows = [1u64; 8];
            let small = lv.max_exp < 8;
            if small {
                for e in 1..=lv.max_exp as usize {
                    pows[e] = pows[e - 1] * x % p;
                }
            }
            for (j, &cj) in c.iter().enumerate() {
                if cj == 0 {
                    continue;
                }
                let e = lv.exp[j];
                let xe = if small { pows[e as usize] } else { pow_mod(x, e as u64, p) };
                let slot = &mut o[lv.parent[j] as usize];
                *slot = (*slot + cj * xe % p) % p;
            }
        }
    }

    /// `Some(value)` when the polynomial at this level is constant.
    fn constant_value(&self, poly: usize, level: usize, c: &[u64]) -> Option<u64> {
        if level == self.dim() {
            return Some(c.first().copied().unwrap_or(0));
        }
        let k = self.polys[poly].levels[level].constant;
        let nonconstant = c.iter().enumerate().any(|(j, &v)| v != 0 && Some(j) != k);
        (!nonconstant).then(|| k.map_or(0, |j| c[j]))
    }

    fn zeros_from(&self, level: usize, bufs: &mut [Vec<Vec<u64>>]) -> u64 {
        let p = self.prime;
        let remaining = (self.dim() - level) as u32;
        let (cur, rest) = bufs.split_first_mut().expect("scratch per level");
        let mut active = 0;
        let mut last = 0;
        for (i, c) in cur.iter().enumerate() {
            match self.constant_value(i, level, c) {
                Some(0) => {}
                Some(_) => return 0,
                None => {
                    active += 1;
                    last = i;
                }
            }
        }
        if active == 0 {
            return p.pow(remaining);
        }
        if remaining == 1 && active == 1
            && self.polys[last].levels[level].max_exp <= 1 {
                // a x + b with a != 0 has exactly one root
                return 1;
            }
        let mut total = 0;
        for x in 0..p {
            self.specialize(level, cur, &mut rest[0], x);
            total += self.zeros_from(level + 1, rest);
        }
        total
    }
}

/// Counts points over prime fields. Implementations differ only in how they
/// spread the enumeration of a compiled system.
pub trait PointCounter {
    /// Upper bound on `prime^ambient_dim` for a single count.
    fn budget(&self) -> u64;

    /// Common zeros of a compiled system in the space of its own variables.
    fn zeros(&self, system: &CompiledSystem) -> u64;

    /// Common zeros of `polys` in affine `ambient_dim`-space.
    fn count_zero_locus(&self, polys: &[MPoly], ambient_dim: usize, prime: u64) -> Result<u64> {
        check_prime(prime)?;
        let needed = (prime as u128).saturating_pow(ambient_dim as u32);
        if needed > self.budget() as u128 {
            return Err(Error::ResourceLimit { needed, budget: self.budget() as u128 });
        }
        let system = CompiledSystem::new(polys, prime);
        if system.dim() > ambient_dim {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} variables do not fit in ambient dimension {ambient_dim}",
                system.dim()
            )));
        }
        let free = (ambient_dim - system.dim()) as u32;
        Ok(self.zeros(&system) * prime.pow(free))
    }

    /// Points of affine `ambient_dim`-space where `p` does not vanish.
    fn count_complement(&self, p: &MPoly, ambient_dim: usize, prime: u64) -> Result<u64> {
        let zeros = self.count_zero_locus(core::slice::from_ref(p), ambient_dim, prime)?;
        Ok(prime.pow(ambient_dim as u32) - zeros)
    }

    /// Points `t` of affine `ambient_dim`-space with `p(q0, t) != 0`.
    fn count_fixed_q(&self, p: &MPoly, q0: u64, ambient_dim: usize, prime: u64) -> Result<u64> {
        check_prime(prime)?;
        let slice = p.substitute(VarId::Q, &MPoly::constant(q0 % prime));
        self.count_complement(&slice, ambient_dim, prime)
    }
}

fn check_prime(prime: u64) -> Result<()> {
    if !is_prime(prime) {
        return Err(Error::InvalidArgument(alloc::format!("{prime} is not prime")));
    }
    Ok(())
}

/// Single-threaded counter.
#[derive(Clone, Copy, Debug)]
pub struct SerialCounter {
    pub budget: u64,
}

impl Default for SerialCounter {
    fn default() -> Self {
        SerialCounter { budget: DEFAULT_BUDGET }
    }
}

impl PointCounter for SerialCounter {
    fn budget(&self) -> u64 {
        self.budget
    }

    fn zeros(&self, system: &CompiledSystem) -> u64 {
        system.zeros()
    }
}

/// Counts at a ladder of primes, the class interpolated from them, and the
/// outcome at the reserved check prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub ambient_dim: usize,
    pub samples: Vec<(u64, u64)>,
    pub interpolated: ClassPoly,
    pub check: CheckPrime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckPrime {
    pub prime: u64,
    pub predicted: BigInt,
    pub observed: u64,
}

/// Coefficients in powers of `L` of the polynomial through `samples`.
fn interpolate_l(samples: &[(u64, u64)]) -> Result<Vec<BigInt>> {
    let xs: Vec<BigRational> = samples.iter().map(|&(p, _)| BigRational::from_integer(p.into())).collect();
    // Newton divided differences, in place
    let mut dd: Vec<BigRational> = samples.iter().map(|&(_, n)| BigRational::from_integer(n.into())).collect();
    for j in 1..dd.len() {
        for i in (j..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut poly: Vec<BigRational> = Vec::new();
    for i in (0..dd.len()).rev() {
        // poly = poly * (L - x_i) + dd[i]
        let mut next = alloc::vec![BigRational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly.into_iter()
        .enumerate()
        .map(|(k, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NotPolynomialCount(alloc::format!(
                    "coefficient of L^{k} interpolates to {c}, samples {samples:?}"
                )))
            }
        })
        .collect()
}

/// Interpolates a class of degree at most `ambient_dim` in `L` from counts
/// at `primes`, then confirms it at `check_prime`.
pub fn interpolate_class<F>(mut count: F, ambient_dim: usize, primes: &[u64], check_prime: u64) -> Result<CountReport>
where
    F: FnMut(u64) -> Result<u64>,
{
    let distinct: BTreeSet<u64> = primes.iter().copied().collect();
    if distinct.len() < ambient_dim + 1 || distinct.len() != primes.len() {
        return Err(Error::InvalidArgument(alloc::format!(
            "need {} distinct sample primes, got {primes:?}",
            ambient_dim + 1
        )));
    }
    if distinct.contains(&check_prime) {
        return Err(Error::InvalidArgument(alloc::format!("check prime {check_prime} is also a sample")));
    }
    let samples = primes.iter().map(|&p| Ok((p, count(p)?))).collect::<Result<Vec<_>>>()?;
    let interpolated = ClassPoly::from_l_basis(interpolate_l(&samples)?);
    if interpolated.degree().unwrap_or(0) > ambient_dim {
        return Err(Error::NotPolynomialCount(alloc::format!("degree exceeds {ambient_dim}")));
    }
    let observed = count(check_prime)?;
    let predicted = interpolated.eval(&BigInt::from(check_prime - 1));
    if predicted != BigInt::from(observed) {
        return Err(Error::NotPolynomialCount(alloc::format!(
            "check prime {check_prime}: predicted {predicted}, observed {observed}"
        )));
    }
    Ok(CountReport {
        ambient_dim,
        samples,
        interpolated,
        check: CheckPrime { prime: check_prime, predicted, observed },
    })
}

/// `{p}`: class of the complement of `p = 0` in affine `ambient_dim`-space.
pub fn complement_class<C: PointCounter + ?Sized>(c: &C, p: &MPoly, ambient_dim: usize) -> Result<CountReport> {
    let (primes, check) = ladder(ambient_dim, 2);
    interpolate_class(|pr| c.count_complement(p, ambient_dim, pr), ambient_dim, &primes, check)
}

/// Class of the complement of the common zero locus of `polys`.
pub fn zero_locus_complement_class<C: PointCounter + ?Sized>(
    c: &C,
    polys: &[MPoly],
    ambient_dim: usize,
) -> Result<CountReport> {
    let (primes, check) = ladder(ambient_dim, 2);
    let count = |pr: u64| Ok(pr.pow(ambient_dim as u32) - c.count_zero_locus(polys, ambient_dim, pr)?);
    interpolate_class(count, ambient_dim, &primes, check)
}

/// Class of the common zero locus of `polys` itself.
pub fn zero_locus_class<C: PointCounter + ?Sized>(c: &C, polys: &[MPoly], ambient_dim: usize) -> Result<CountReport> {
    let (primes, check) = ladder(ambient_dim, 2);
    interpolate_class(|pr| c.count_zero_locus(polys, ambient_dim, pr), ambient_dim, &primes, check)
}

/// Fixed-`q` complement class, sampled at `q = 2` over primes from 3.
pub fn fixed_q_class<C: PointCounter + ?Sized>(c: &C, p: &MPoly, ambient_dim: usize) -> Result<CountReport> {
    let (primes, check) = ladder(ambient_dim, FIXED_Q + 1);
    interpolate_class(|pr| c.count_fixed_q(p, FIXED_Q, ambient_dim, pr), ambient_dim, &primes, check)
}
