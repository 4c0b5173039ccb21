//! Class identities in the Grothendieck ring: deletion-contraction, edge
//! splitting and doubling with their recursions and closed forms, the
//! polygon and banana families, and the fibration condition.
//!
//! All classes are complement classes `{X} = L^d - [X]` for an ambient
//! dimension `d` that is always passed explicitly.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::class::ClassPoly;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, FamilySpec, MultiGraph};
use crate::pointcount::{self, PointCounter};
use crate::tutte;

fn c(v: &[i64]) -> ClassPoly {
    ClassPoly::from_i64s(v)
}

fn t_plus(a: i64) -> ClassPoly {
    c(&[a, 1])
}

/// `x^m` for the constant `-1`, as a class.
fn minus_one_pow(m: usize) -> ClassPoly {
    ClassPoly::constant(if m.is_multiple_of(2) { 1 } else { -1 })
}

/// Classes of `Gamma_0 G`, `Gamma_1 G`, `Gamma_2 G` for one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSeeds {
    pub s0: ClassPoly,
    pub s1: ClassPoly,
    pub s2: ClassPoly,
}

/// Classes of `G^(0)` and `G^(1)` for one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSeeds {
    pub d0: ClassPoly,
    pub d1: ClassPoly,
}

impl SplitSeeds {
    pub fn new(s0: ClassPoly, s1: ClassPoly, s2: ClassPoly) -> Self {
        SplitSeeds { s0, s1, s2 }
    }

    /// Loop, 2-banana, triangle.
    pub fn polygon() -> Self {
        SplitSeeds::new(polygon_class(0), polygon_class(1), polygon_class(2))
    }

    /// Fixed-`q` classes of the loop, 2-banana and triangle.
    pub fn polygon_fixed_q() -> Self {
        SplitSeeds::new(polygon_class_fixed_q(0), polygon_class_fixed_q(1), polygon_class_fixed_q(2))
    }
}

impl DoubleSeeds {
    pub fn new(d0: ClassPoly, d1: ClassPoly) -> Self {
        DoubleSeeds { d0, d1 }
    }

    /// Single edge and 2-banana.
    pub fn banana() -> Self {
        DoubleSeeds::new(banana_class(0), banana_class(1))
    }

    pub fn banana_fixed_q() -> Self {
        DoubleSeeds::new(banana_class_fixed_q(0), banana_class_fixed_q(1))
    }
}

/// `{Z_{Gamma_2 G}}` from the classes of `G`, `G/e`, `G\e` and `A^e_G`.
pub fn split_step(z_g: &ClassPoly, z_contract: &ClassPoly, z_delete: &ClassPoly, a_class: &ClassPoly) -> ClassPoly {
    t_plus(-2) * z_g + t_plus(-1) * z_contract + t_plus(1) * (z_delete + a_class)
}

/// Iterates `x_{m+3} = (2T-2) x_{m+2} - (T^2-3T+1) x_{m+1} - T(T-1) x_m`.
pub fn split_recursion(seeds: &SplitSeeds, m: usize) -> ClassPoly {
    let (c2, c1, c0) = (c(&[-2, 2]), c(&[1, -3, 1]), c(&[0, -1, 1]));
    linear_recurrence(seeds, m, |x0, x1, x2| &c2 * x2 - &c1 * x1 - &c0 * x0)
}

/// Iterates `y_{m+3} = (2T-1) y_{m+2} - T(T-2) y_{m+1} - T^2 y_m`, the
/// recursion obeyed by the `Y` classes of the tangent cone.
pub fn split_recursion_y(seeds: &SplitSeeds, m: usize) -> ClassPoly {
    let (c2, c1, c0) = (c(&[-1, 2]), c(&[0, -2, 1]), ClassPoly::t_power(2));
    linear_recurrence(seeds, m, |x0, x1, x2| &c2 * x2 - &c1 * x1 - &c0 * x0)
}

fn linear_recurrence<F>(seeds: &SplitSeeds, m: usize, step: F) -> ClassPoly
where
    F: Fn(&ClassPoly, &ClassPoly, &ClassPoly) -> ClassPoly,
{
    let mut w = [seeds.s0.clone(), seeds.s1.clone(), seeds.s2.clone()];
    if m < 3 {
        return w[m].clone();
    }
    for _ in 2..m {
        let next = step(&w[0], &w[1], &w[2]);
        w.rotate_left(1);
        w[2] = next;
    }
    w[2].clone()
}

/// Which exponential basis a closed form is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// `A (-1)^m + B T^m + C (T-1)^m`
    Split,
    /// `A (-1)^m + B m T^(m-1) + C T^m`
    Repeated,
}

/// Closed form of a three-term recursion. The coefficients are
/// `a / denom`, `b / denom`, `c / denom`; the denominator divides every
/// term exactly even when it does not divide the coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub basis: Basis,
    pub a: ClassPoly,
    pub b: ClassPoly,
    pub c: ClassPoly,
    pub denom: ClassPoly,
}

impl ClosedForm {
    fn reduced(mut self) -> Self {
        for f in [ClassPoly::t(), t_plus(1)] {
            loop {
                let parts: Result<Vec<ClassPoly>> =
                    [&self.a, &self.b, &self.c, &self.denom].iter().map(|x| x.div_exact(&f)).collect();
                match parts {
                    Ok(p) => {
                        let [a, b, c, d]: [ClassPoly; 4] = p.try_into().expect("four parts");
                        self = ClosedForm { a, b, c, denom: d, ..self };
                    }
                    Err(_) => break,
                }
            }
        }
        self
    }

    /// `(A, B, C)` when all three are polynomials in `T`.
    pub fn coefficients(&self) -> Result<(ClassPoly, ClassPoly, ClassPoly)> {
        Ok((self.a.div_exact(&self.denom)?, self.b.div_exact(&self.denom)?, self.c.div_exact(&self.denom)?))
    }

    pub fn term(&self, m: usize) -> Result<ClassPoly> {
        let sign = minus_one_pow(m);
        let num = match self.basis {
            Basis::Split => &self.a * &sign + self.b.scale_t_power(m) + &self.c * t_plus(-1).pow(m as u32),
            Basis::Repeated => {
                let middle = match m {
                    0 => ClassPoly::zero(),
                    _ => self.b.scale_t_power(m - 1).scale(&BigInt::from(m)),
                };
                &self.a * &sign + middle + self.c.scale_t_power(m)
            }
        };
        num.div_exact(&self.denom)
    }
}

/// Closed form `A (-1)^m + B T^m + C (T-1)^m` of [`split_recursion`],
/// solved from the seeds over the common denominator `T (T+1)`.
pub fn split_closed_form(seeds: &SplitSeeds) -> Result<ClosedForm> {
    let SplitSeeds { s0, s1, s2 } = seeds;
    let t = ClassPoly::t();
    let tp1 = t_plus(1);
    let denom = &t * &tp1;
    let wide = s2 + s1.scale(&3.into()) + s0.scale(&2.into());
    let narrow = s2 + s1;
    let a = s0 * &denom + &narrow * &tp1 - &wide * &t;
    let b = -(s1 + s0) * &denom + &wide * &t;
    let cc = (s1 + s0) * &denom - &narrow * &tp1;
    let form = ClosedForm { basis: Basis::Split, a, b, c: cc, denom }.reduced();
    for m in 0..3 {
        let seed = [s0, s1, s2][m];
        if &form.term(m)? != seed {
            return Err(Error::ExactDivisionFailure("closed form does not reproduce the seeds".into()));
        }
    }
    Ok(form)
}

/// Closed form `A (-1)^m + B m T^(m-1) + C T^m` of [`split_recursion_y`],
/// over the common denominator `(T+1)^2`.
pub fn split_closed_form_y(seeds: &SplitSeeds) -> Result<ClosedForm> {
    let SplitSeeds { s0, s1, s2 } = seeds;
    let tp1 = t_plus(1);
    let denom = tp1.pow(2);
    let wide = s2 + s1.scale(&2.into()) + s0;
    let low = (s1 + s0).scale(&2.into()) * &tp1;
    let a = s0 * &denom - &low + &wide;
    let b = -(s1 + s0) * &denom + &wide * &tp1;
    let cc = &low - &wide;
    let form = ClosedForm { basis: Basis::Repeated, a, b, c: cc, denom }.reduced();
    for m in 0..3 {
        if &form.term(m)? != [s0, s1, s2][m] {
            return Err(Error::ExactDivisionFailure("closed form does not reproduce the seeds".into()));
        }
    }
    Ok(form)
}

/// `{A^e_G}` recovered from three splitting classes and `{Z_{G\e}}`.
pub fn a_class_from_splittings(seeds: &SplitSeeds, z_delete: &ClassPoly) -> Result<ClassPoly> {
    let rest = &seeds.s2 - t_plus(-2) * &seeds.s1 - t_plus(-1) * &seeds.s0;
    Ok(rest.div_exact(&t_plus(1))? - z_delete)
}

/// `{Z_{G'}}` for `G'` obtained by doubling `e`, from `{Z_G}` and `{B^e_G}`.
pub fn double_step(z_g: &ClassPoly, b_class: &ClassPoly) -> ClassPoly {
    ClassPoly::t() * z_g + t_plus(1) * b_class
}

/// Iterates `x_{m+2} = (2T+1) x_{m+1} - T(T+1) x_m`.
pub fn double_recursion(seeds: &DoubleSeeds, m: usize) -> ClassPoly {
    let (c1, c0) = (c(&[1, 2]), c(&[0, 1, 1]));
    let (mut x0, mut x1) = (seeds.d0.clone(), seeds.d1.clone());
    if m == 0 {
        return x0;
    }
    for _ in 1..m {
        let next = &c1 * &x1 - &c0 * &x0;
        x0 = x1;
        x1 = next;
    }
    x1
}

/// `((T+1) d0 - d1) T^m + (d1 - T d0) (T+1)^m`.
pub fn double_closed_form(seeds: &DoubleSeeds, m: usize) -> ClassPoly {
    let DoubleSeeds { d0, d1 } = seeds;
    let first = t_plus(1) * d0 - d1;
    let second = d1 - d0.scale_t_power(1);
    first.scale_t_power(m) + second * ClassPoly::l_power(m)
}

/// Class of the `(m+1)`-gon:
/// `T^(m+2) + T(T-1)(T^m - (T-1)^m) + (T-1)((T-1)^m - (-1)^m)/T`.
pub fn polygon_class(m: usize) -> ClassPoly {
    let tm1 = t_plus(-1);
    let tm1_m = tm1.pow(m as u32);
    let diff = ClassPoly::t_power(m) - &tm1_m;
    let tail = (&tm1 * (&tm1_m - minus_one_pow(m))).div_exact(&ClassPoly::t()).expect("vanishes at T = 0");
    ClassPoly::t_power(m + 2) + (diff * &tm1).scale_t_power(1) + tail
}

/// Fixed-`q` class of the `(m+1)`-gon:
/// `T^(m+1) + T(T^m - (T-1)^m) + ((T-1)^m - (-1)^m)/T`.
pub fn polygon_class_fixed_q(m: usize) -> ClassPoly {
    let tm1_m = t_plus(-1).pow(m as u32);
    let diff = ClassPoly::t_power(m) - &tm1_m;
    let tail = (&tm1_m - minus_one_pow(m)).div_exact(&ClassPoly::t()).expect("vanishes at T = 0");
    ClassPoly::t_power(m + 1) + diff.scale_t_power(1) + tail
}

/// Class of the `(m+1)`-banana: `T^m + (T-1)(T+1)^(m+1)`.
pub fn banana_class(m: usize) -> ClassPoly {
    ClassPoly::t_power(m) + t_plus(-1) * ClassPoly::l_power(m + 1)
}

/// Fixed-`q` class of the `(m+1)`-banana: `(T+1)^(m+1) - T^m`.
pub fn banana_class_fixed_q(m: usize) -> ClassPoly {
    ClassPoly::l_power(m + 1) - ClassPoly::t_power(m)
}

/// `polygon_class_fixed_q(m)^N * T^(k(N-1))`.
pub fn chain_polygon_class_fixed_q(spec: FamilySpec) -> Result<ClassPoly> {
    spec.validate()?;
    Ok(polygon_class_fixed_q(spec.m).pow(spec.n as u32).scale_t_power(spec.k * (spec.n - 1)))
}

/// `((T+1)^(m+1) - T^m)^N * T^(k(N-1))`.
pub fn chain_banana_class_fixed_q(spec: FamilySpec) -> Result<ClassPoly> {
    spec.validate()?;
    Ok(banana_class_fixed_q(spec.m).pow(spec.n as u32).scale_t_power(spec.k * (spec.n - 1)))
}

/// Variable-`q` chain class obtained from the fixed-`q` class through the
/// fibration condition.
pub fn chain_polygon_class(spec: FamilySpec) -> Result<ClassPoly> {
    Ok(fibration_lift(&chain_polygon_class_fixed_q(spec)?, spec.edge_count()))
}

pub fn chain_banana_class(spec: FamilySpec) -> Result<ClassPoly> {
    Ok(fibration_lift(&chain_banana_class_fixed_q(spec)?, spec.edge_count()))
}

/// `({Z_G} - T^#E) / (T-1)`, the fixed-`q` class when `{Z_G}` satisfies the
/// fibration condition. A remainder means it does not.
pub fn fibration_reduce(z_g: &ClassPoly, edge_count: usize) -> Result<ClassPoly> {
    (z_g - ClassPoly::t_power(edge_count)).div_exact(&t_plus(-1))
}

/// `(T-1) z_q + T^#E`, inverse of [`fibration_reduce`].
pub fn fibration_lift(z_q: &ClassPoly, edge_count: usize) -> ClassPoly {
    t_plus(-1) * z_q + ClassPoly::t_power(edge_count)
}

/// Class of a disjoint union of two graphs satisfying the fibration
/// condition: `(z1 z2 - T^e1 z2 - T^e2 z1 + T^(e1+e2+1)) / (T-1)`.
pub fn disjoint_union_class(z1: &ClassPoly, e1: usize, z2: &ClassPoly, e2: usize) -> Result<ClassPoly> {
    fibration_reduce(z1, e1)?;
    fibration_reduce(z2, e2)?;
    let num = z1 * z2 - z2.scale_t_power(e1) - z1.scale_t_power(e2) + ClassPoly::t_power(e1 + e2 + 1);
    num.div_exact(&t_plus(-1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinKind {
    /// Identifying a vertex of each of two disjoint graphs.
    VertexJoin,
    /// Connecting two graphs by a new bridge.
    BridgeJoin,
    /// Appending one edge, looping or not, at a vertex.
    AppendEdge,
}

/// Effect of a join on a class. A vertex join leaves the class of the
/// disjoint union unchanged; a bridge or an appended edge multiplies it by
/// `T`. The rules are the same for variable and fixed `q`.
pub fn join_transform(z: &ClassPoly, kind: JoinKind) -> ClassPoly {
    match kind {
        JoinKind::VertexJoin => z.clone(),
        JoinKind::BridgeJoin | JoinKind::AppendEdge => z.scale_t_power(1),
    }
}

/// Fixed-`q` class of two graphs joined at a vertex, or disjoint.
pub fn fixed_q_product(z1: &ClassPoly, z2: &ClassPoly) -> ClassPoly {
    z1 * z2
}

/// `{Z_G}` in dimension `#E + 1`, from the oracle.
pub fn oracle_class<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph) -> Result<ClassPoly> {
    Ok(pointcount::complement_class(c, &tutte::z_delcon(g), g.edge_count() + 1)?.interpolated)
}

/// `{Z_{G,q}}` in dimension `#E`, from the oracle.
pub fn oracle_class_fixed_q<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph) -> Result<ClassPoly> {
    Ok(pointcount::fixed_q_class(c, &tutte::z_delcon(g), g.edge_count())?.interpolated)
}

/// Both sides of `{Z_G} = L {Z_{G/e} cap Z_{G\e}} - {Z_{G/e}}`, where the
/// intersection class is `L^#E - [Z_{G/e} cap Z_{G\e}]`.
pub fn delcon_identity_sides<C: PointCounter + ?Sized>(
    c: &C,
    g: &MultiGraph,
    e: EdgeId,
) -> Result<(ClassPoly, ClassPoly)> {
    let d = g.edge_count();
    let del = tutte::z_delcon(&g.delete_edge(e)?);
    let con = tutte::z_delcon(&g.contract_edge(e)?);
    let lhs = oracle_class(c, g)?;
    let meet = pointcount::zero_locus_complement_class(c, &[con.clone(), del], d)?.interpolated;
    let contracted = pointcount::complement_class(c, &con, d)?.interpolated;
    Ok((lhs, ClassPoly::l() * meet - contracted))
}

pub fn delcon_identity_check<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph, e: EdgeId) -> Result<bool> {
    let (lhs, rhs) = delcon_identity_sides(c, g, e)?;
    Ok(lhs == rhs)
}

/// Oracle classes entering the splitting identity for a non-loop edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub seeds: SplitSeeds,
    pub z_delete: ClassPoly,
    pub a_class: ClassPoly,
}

impl SplitWitness {
    /// Whether `split_step` reproduces `{Z_{Gamma_2 G}}`.
    pub fn balances(&self) -> bool {
        split_step(&self.seeds.s1, &self.seeds.s0, &self.z_delete, &self.a_class) == self.seeds.s2
    }
}

pub fn split_witness<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph, e: EdgeId) -> Result<SplitWitness> {
    let d = g.edge_count();
    let seeds = SplitSeeds::new(
        oracle_class(c, &g.contract_edge(e)?)?,
        oracle_class(c, g)?,
        oracle_class(c, &g.split_edge(e, 2)?)?,
    );
    let z_delete = oracle_class(c, &g.delete_edge(e)?)?;
    let a_class = pointcount::complement_class(c, &tutte::a_locus_poly(g, e)?, d)?.interpolated;
    Ok(SplitWitness { seeds, z_delete, a_class })
}

/// Oracle classes entering the doubling identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleWitness {
    pub z_g: ClassPoly,
    pub z_doubled: ClassPoly,
    pub b_class: ClassPoly,
}

impl DoubleWitness {
    pub fn balances(&self) -> bool {
        double_step(&self.z_g, &self.b_class) == self.z_doubled
    }
}

pub fn double_witness<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph, e: EdgeId) -> Result<DoubleWitness> {
    let d = g.edge_count();
    let b_poly = tutte::b_locus_poly(g, e)?;
    Ok(DoubleWitness {
        z_g: oracle_class(c, g)?,
        z_doubled: oracle_class(c, &g.double_edge(e, 1)?)?,
        b_class: pointcount::complement_class(c, &b_poly, d)?.interpolated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::pointcount::SerialCounter;

    fn oracle() -> SerialCounter {
        SerialCounter::default()
    }

    #[test]
    fn seeds_and_small_members() {
        assert_eq!(polygon_class(0), ClassPoly::t_power(2));
        assert_eq!(polygon_class(1), c(&[-1, 0, 1, 1]));
        assert_eq!(polygon_class(2), c(&[2, -2, -2, 2, 1]));
        assert_eq!(polygon_class_fixed_q(1), c(&[1, 1, 1]));
        assert_eq!(polygon_class_fixed_q(2), c(&[-2, 0, 2, 1]));
        assert_eq!(banana_class(0), ClassPoly::t_power(2));
        assert_eq!(banana_class(1), polygon_class(1));
        assert_eq!(banana_class_fixed_q(1), c(&[1, 1, 1]));
    }

    #[test]
    fn split_step_examples() {
        let z = ClassPoly::zero();
        assert!(split_step(&z, &z, &z, &z).is_zero());
        // 2-banana, contracted to a loop, deleted to an edge
        let a = c(&[0, -1, 1]);
        let out = split_step(&polygon_class(1), &polygon_class(0), &ClassPoly::t_power(2), &a);
        assert_eq!(out, polygon_class(2));
        // single edge: the A locus is everything, so its class is 0
        let out = split_step(&ClassPoly::t_power(2), &ClassPoly::t(), &ClassPoly::t(), &ClassPoly::zero());
        assert_eq!(out, ClassPoly::t_power(3));
    }

    #[test]
    fn split_recursion_reproduces_polygons() {
        let seeds = SplitSeeds::polygon();
        for m in 0..=8 {
            assert_eq!(split_recursion(&seeds, m), polygon_class(m), "m = {m}");
        }
        let fixed = SplitSeeds::polygon_fixed_q();
        for m in 0..=8 {
            assert_eq!(split_recursion(&fixed, m), polygon_class_fixed_q(m), "m = {m}");
        }
    }

    #[test]
    fn split_closed_forms() {
        let zero = SplitSeeds::new(ClassPoly::zero(), ClassPoly::zero(), ClassPoly::zero());
        let f = split_closed_form(&zero).unwrap();
        assert!(f.a.is_zero() && f.b.is_zero() && f.c.is_zero());

        let seeds = SplitSeeds::polygon();
        let f = split_closed_form(&seeds).unwrap();
        assert_eq!(f.denom, ClassPoly::t());
        for m in 0..=12 {
            assert_eq!(f.term(m).unwrap(), split_recursion(&seeds, m), "m = {m}");
            assert_eq!(f.term(m).unwrap(), polygon_class(m), "m = {m}");
        }

        let cone = SplitSeeds::new(c(&[0, 1, 1]), c(&[0, 0, 1, 1]), c(&[0, 1, 1]) * c(&[-1, 1, 1]));
        let f = split_closed_form(&cone).unwrap();
        let (a, b, cc) = f.coefficients().unwrap();
        assert_eq!(a, c(&[-1, 1]));
        assert_eq!(b, c(&[0, 0, 2]));
        assert_eq!(cc, c(&[1, 0, -1]));
        for m in 0..=12 {
            assert_eq!(f.term(m).unwrap(), split_recursion(&cone, m));
        }
    }

    #[test]
    fn y_closed_form_tracks_recursion() {
        let seeds = SplitSeeds::new(c(&[1, 1]), c(&[0, 1, 1]), c(&[1, 2, 3, 1]));
        let f = split_closed_form_y(&seeds).unwrap();
        for m in 0..=12 {
            assert_eq!(f.term(m).unwrap(), split_recursion_y(&seeds, m), "m = {m}");
        }
    }

    #[test]
    fn doubling() {
        let seeds = DoubleSeeds::banana();
        for m in 0..=8 {
            let closed = double_closed_form(&seeds, m);
            assert_eq!(closed, banana_class(m));
            assert_eq!(closed, double_recursion(&seeds, m));
        }
        for m in 0..=6 {
            let lhs = double_closed_form(&seeds, m + 2);
            let rhs = c(&[1, 2]) * double_closed_form(&seeds, m + 1) - c(&[0, 1, 1]) * double_closed_form(&seeds, m);
            assert_eq!(lhs, rhs);
        }
        let fixed = DoubleSeeds::banana_fixed_q();
        assert_eq!(fixed.d0, ClassPoly::t());
        for m in 0..=8 {
            assert_eq!(double_closed_form(&fixed, m), banana_class_fixed_q(m));
        }
        assert_eq!(double_step(&ClassPoly::t_power(2), &ClassPoly::zero()), ClassPoly::t_power(3));
        assert!(double_step(&ClassPoly::zero(), &ClassPoly::zero()).is_zero());
    }

    #[test]
    fn fibration() {
        for m in 0..=8 {
            assert_eq!(fibration_reduce(&polygon_class(m), m + 1).unwrap(), polygon_class_fixed_q(m));
            assert_eq!(fibration_reduce(&banana_class(m), m + 1).unwrap(), banana_class_fixed_q(m));
            assert_eq!(fibration_lift(&polygon_class_fixed_q(m), m + 1), polygon_class(m));
        }
        assert!(fibration_reduce(&ClassPoly::t_power(3), 3).unwrap().is_zero());
        assert!(fibration_reduce(&c(&[1, 0, 0, 1]), 3).is_err());
    }

    #[test]
    fn disjoint_unions() {
        let edge = ClassPoly::t_power(2);
        assert_eq!(disjoint_union_class(&edge, 1, &edge, 1).unwrap(), ClassPoly::t_power(3));
        let tri = polygon_class(2);
        assert_eq!(disjoint_union_class(&tri, 3, &ClassPoly::t_power(2), 2).unwrap(), ClassPoly::t_power(5));
        let g = MultiGraph::polygon(3).unwrap().disjoint_union(&MultiGraph::banana(1).unwrap());
        assert_eq!(disjoint_union_class(&tri, 3, &edge, 1).unwrap(), oracle_class(&oracle(), &g).unwrap());
        assert!(disjoint_union_class(&c(&[1, 0, 0, 1]), 3, &edge, 1).is_err());
    }

    #[test]
    fn joins() {
        assert_eq!(join_transform(&ClassPoly::t_power(2), JoinKind::AppendEdge), ClassPoly::t_power(3));
        assert!(join_transform(&ClassPoly::zero(), JoinKind::AppendEdge).is_zero());
        let b = banana_class_fixed_q(1);
        assert_eq!(fixed_q_product(&b, &b), c(&[1, 1, 1]).pow(2));
    }

    #[test]
    fn chain_classes() {
        let spec = |m, k, n| FamilySpec::new(m, k, n).unwrap();
        assert_eq!(chain_polygon_class_fixed_q(spec(2, 0, 1)).unwrap(), c(&[-2, 0, 2, 1]));
        assert_eq!(chain_polygon_class_fixed_q(spec(1, 1, 2)).unwrap(), c(&[1, 1, 1]).pow(2).scale_t_power(1));
        assert_eq!(chain_banana_class_fixed_q(spec(1, 0, 2)).unwrap(), c(&[1, 1, 1]).pow(2));
    }

    #[test]
    fn oracle_confirms_chain_classes() {
        let o = oracle();
        for (m, k, n) in [(1, 1, 2), (1, 0, 2), (0, 1, 2), (0, 0, 2)] {
            let s = FamilySpec::new(m, k, n).unwrap();
            let g = MultiGraph::chain_polygons(s).unwrap();
            assert_eq!(oracle_class_fixed_q(&o, &g).unwrap(), chain_polygon_class_fixed_q(s).unwrap());
            let g = MultiGraph::chain_bananas(s).unwrap();
            assert_eq!(oracle_class_fixed_q(&o, &g).unwrap(), chain_banana_class_fixed_q(s).unwrap());
        }
        for (m, k, n) in [(1, 0, 2), (0, 1, 2)] {
            let s = FamilySpec::new(m, k, n).unwrap();
            let g = MultiGraph::chain_polygons(s).unwrap();
            assert_eq!(oracle_class(&o, &g).unwrap(), chain_polygon_class(s).unwrap());
        }
        let lp = MultiGraph::polygon(1).unwrap();
        assert_eq!(oracle_class(&o, &lp.join_at_vertex(0, &lp, 0).unwrap()).unwrap(), ClassPoly::t_power(3));
        assert_eq!(oracle_class(&o, &lp.disjoint_union(&lp)).unwrap(), ClassPoly::t_power(3));
    }

    #[test]
    fn delcon_identity_on_small_corpus() {
        let o = oracle();
        for (name, g) in corpus::graphs_up_to_dim(5) {
            for e in g.edge_ids() {
                let (lhs, rhs) = delcon_identity_sides(&o, &g, e).unwrap();
                assert_eq!(lhs, rhs, "{name} edge {e}");
            }
        }
    }

    #[test]
    fn splitting_and_doubling_balance() {
        let o = oracle();
        let banana = MultiGraph::banana(2).unwrap();
        let w = split_witness(&o, &banana, EdgeId(2)).unwrap();
        assert_eq!(w.seeds, SplitSeeds::polygon());
        assert_eq!(w.a_class, c(&[0, -1, 1]));
        assert!(w.balances());
        assert_eq!(a_class_from_splittings(&w.seeds, &w.z_delete).unwrap(), w.a_class);

        let edge = MultiGraph::banana(1).unwrap();
        let w = split_witness(&o, &edge, EdgeId(1)).unwrap();
        assert!(w.a_class.is_zero());
        assert!(w.balances());
        assert_eq!(w.seeds.s2, ClassPoly::t_power(3));

        let d = double_witness(&o, &edge, EdgeId(1)).unwrap();
        assert_eq!(d.z_doubled, banana_class(1));
        assert!(d.balances());
        let tri = MultiGraph::polygon(3).unwrap();
        assert!(double_witness(&o, &tri, EdgeId(1)).unwrap().balances());
        assert!(split_witness(&o, &tri, EdgeId(1)).unwrap().balances());
    }
}
