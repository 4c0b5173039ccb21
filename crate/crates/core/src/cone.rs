//! Classes of the tangent cone `V_G = {P_G = 0}` at the origin, its
//! component `W_G = {Q_G = 0}` and the slice `Y_G = {Q_G(0, t) = 0}`.
//!
//! `{V_G}` and `{W_G}` are complements in dimension `#E + 1`, `{Y_G}` in
//! dimension `#E`.

use crate::class::ClassPoly;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeKind, MultiGraph};
use crate::grothendieck::{self, ClosedForm, SplitSeeds};
use crate::pointcount::{self, PointCounter};
use crate::poly::{MPoly, VarId};
use crate::tutte;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePolys {
    /// Lowest-degree part of `Z_G`.
    pub p: MPoly,
    /// `P_G / q^{k(G)}`.
    pub q: MPoly,
    /// `Q_G(0, t)`, equal to `Phi_G`.
    pub y: MPoly,
}

pub fn cone_polys(g: &MultiGraph) -> Result<ConePolys> {
    let p = tutte::p_leading(g)?;
    let q = p.divide_exact_by_q_power(g.components() as u32)?;
    let y = q.substitute(VarId::Q, &MPoly::zero());
    Ok(ConePolys { p, q, y })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeClasses {
    pub v: ClassPoly,
    pub w: ClassPoly,
    pub y: ClassPoly,
}

impl ConeClasses {
    /// Whether `{V} = {W} - {Y}`.
    pub fn consistent(&self) -> bool {
        self.v == &self.w - &self.y
    }
}

/// `{V_G}`, `{W_G}`, `{Y_G}`, each from its own count.
pub fn cone_classes<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph) -> Result<ConeClasses> {
    let polys = cone_polys(g)?;
    let d = g.edge_count();
    Ok(ConeClasses {
        v: pointcount::complement_class(c, &polys.p, d + 1)?.interpolated,
        w: pointcount::complement_class(c, &polys.q, d + 1)?.interpolated,
        y: pointcount::complement_class(c, &polys.y, d)?.interpolated,
    })
}

/// `{V_G}`, counted directly and confirmed against `{W_G} - {Y_G}`.
pub fn v_class<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph) -> Result<ClassPoly> {
    let classes = cone_classes(c, g)?;
    if !classes.consistent() {
        return Err(Error::NotPolynomialCount(alloc::format!(
            "cone class {} differs from {} - ({})",
            classes.v,
            classes.w,
            classes.y
        )));
    }
    Ok(classes.v)
}

/// Loop: `{V_G} = (T+1) {V_{G\e}}`. Bridge: `{V_G} = T {V_{G/e}}`.
pub fn cone_bridge_loop_rules(z: &ClassPoly, kind: EdgeKind) -> Result<ClassPoly> {
    match kind {
        EdgeKind::Loop => Ok(ClassPoly::l() * z),
        EdgeKind::Bridge => Ok(z.scale_t_power(1)),
        EdgeKind::Regular => Err(Error::InvalidArgument("regular edges need the splitting formula".into())),
    }
}

/// Adding an edge parallel to an existing one multiplies `{V}` by `T + 1`.
pub fn cone_parallel_edge(z: &ClassPoly) -> ClassPoly {
    ClassPoly::l() * z
}

/// `{V_{Gamma_{m+1} G}} = T^m {V_G}` for a bridge or loop `e`.
pub fn cone_split_bridge_loop(z: &ClassPoly, m: usize) -> ClassPoly {
    z.scale_t_power(m)
}

/// Oracle classes in the splitting formula for the tangent cone at a
/// regular edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSplitWitness {
    pub v_split: ClassPoly,
    pub v_g: ClassPoly,
    pub v_contract: ClassPoly,
    pub v_delete: ClassPoly,
    /// Complement class of `Q_{G\e} - q Q_{G/e}` in dimension `#E`.
    pub v_aux: ClassPoly,
    /// `{Y_{G\e}}` in dimension `#E - 1`.
    pub y_delete: ClassPoly,
}

impl ConeSplitWitness {
    /// `(T-2){V_G} + (T-1){V_{G/e}} + (T+1)({V_{G\e}} + {aux} - {Y_{G\e}})`.
    ///
    /// Inclusion-exclusion over the three pieces of `W_{Gamma_2 G} cap W_G`
    /// leaves the `{Y_{G\e}}` term; the shorter form without it already
    /// fails for a triangle edge.
    pub fn predicted(&self) -> ClassPoly {
        self.predicted_without_y_term() - ClassPoly::l() * &self.y_delete
    }

    pub fn predicted_without_y_term(&self) -> ClassPoly {
        grothendieck::split_step(&self.v_g, &self.v_contract, &self.v_delete, &self.v_aux)
    }

    pub fn balances(&self) -> bool {
        self.predicted() == self.v_split
    }
}

fn regular(g: &MultiGraph, e: EdgeId) -> Result<()> {
    match g.classify_edge(e)? {
        EdgeKind::Regular => Ok(()),
        kind => Err(Error::InvalidArgument(alloc::format!("edge {e} is a {kind:?}, not regular"))),
    }
}

pub fn cone_split_witness<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph, e: EdgeId) -> Result<ConeSplitWitness> {
    regular(g, e)?;
    let del = g.delete_edge(e)?;
    let con = g.contract_edge(e)?;
    let aux = &tutte::q_reduced(&del)? - &(&MPoly::q() * &tutte::q_reduced(&con)?);
    Ok(ConeSplitWitness {
        v_split: v_class(c, &g.split_edge(e, 2)?)?,
        v_g: v_class(c, g)?,
        v_contract: v_class(c, &con)?,
        v_delete: v_class(c, &del)?,
        v_aux: pointcount::complement_class(c, &aux, g.edge_count())?.interpolated,
        y_delete: cone_classes(c, &del)?.y,
    })
}

pub fn cone_split_check<C: PointCounter + ?Sized>(c: &C, g: &MultiGraph, e: EdgeId) -> Result<bool> {
    Ok(cone_split_witness(c, g, e)?.balances())
}

/// Both sides of the deletion-contraction identities for `{W}` and `{Y}`
/// at a regular edge, as `[(w_lhs, w_rhs), (y_lhs, y_rhs)]`.
pub fn cone_delcon_sides<C: PointCounter + ?Sized>(
    c: &C,
    g: &MultiGraph,
    e: EdgeId,
) -> Result<[(ClassPoly, ClassPoly); 2]> {
    regular(g, e)?;
    let d = g.edge_count();
    let whole = cone_polys(g)?;
    let del = cone_polys(&g.delete_edge(e)?)?;
    let con = cone_polys(&g.contract_edge(e)?)?;
    let side = |lhs: (&MPoly, usize), del: &MPoly, con: &MPoly, dim: usize| -> Result<(ClassPoly, ClassPoly)> {
        let left = pointcount::complement_class(c, lhs.0, lhs.1)?.interpolated;
        let meet = pointcount::zero_locus_complement_class(c, &[del.clone(), con.clone()], dim)?.interpolated;
        let contracted = pointcount::complement_class(c, con, dim)?.interpolated;
        Ok((left, ClassPoly::l() * meet - contracted))
    };
    Ok([side((&whole.q, d + 1), &del.q, &con.q, d)?, side((&whole.y, d), &del.y, &con.y, d - 1)?])
}

/// `V` classes of the loop, 2-banana and triangle.
pub fn polygon_cone_seeds() -> SplitSeeds {
    SplitSeeds::new(polygon_cone_class(0), polygon_cone_class(1), polygon_cone_class(2))
}

/// `{V}` of the `(m+1)`-gon: `(T-1)(-1)^m + 2T^(m+2) - (T+1)(T-1)^(m+1)`.
pub fn polygon_cone_class(m: usize) -> ClassPoly {
    let tm1 = ClassPoly::from_i64s(&[-1, 1]);
    let sign = ClassPoly::constant(if m.is_multiple_of(2) { 1 } else { -1 });
    &tm1 * &sign + ClassPoly::t_power(m + 2).scale(&2.into()) - ClassPoly::l() * tm1.pow(m as u32 + 1)
}

/// The `V` classes obey the same recursion as `{Z}` under splitting.
pub fn cone_split_recursion_v(seeds: &SplitSeeds, m: usize) -> ClassPoly {
    grothendieck::split_recursion(seeds, m)
}

pub fn cone_split_recursion_y(seeds: &SplitSeeds, m: usize) -> ClassPoly {
    grothendieck::split_recursion_y(seeds, m)
}

pub fn cone_closed_form_v(seeds: &SplitSeeds) -> Result<ClosedForm> {
    grothendieck::split_closed_form(seeds)
}

pub fn cone_closed_form_y(seeds: &SplitSeeds) -> Result<ClosedForm> {
    grothendieck::split_closed_form_y(seeds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::EdgeId;
    use crate::pointcount::SerialCounter;

    fn oracle() -> SerialCounter {
        SerialCounter::default()
    }

    fn c(v: &[i64]) -> ClassPoly {
        ClassPoly::from_i64s(v)
    }

    fn t(i: u32) -> MPoly {
        MPoly::t(EdgeId(i))
    }

    #[test]
    fn polynomials() {
        let q = MPoly::q();
        let e1 = t(1) + t(2) + t(3);
        let e2 = t(1) * t(2) + t(1) * t(3) + t(2) * t(3);
        let tri = cone_polys(&MultiGraph::polygon(3).unwrap()).unwrap();
        assert_eq!(tri.p, q.pow(3) + q.pow(2) * e1.clone() + &q * &e2);
        assert_eq!(tri.q, q.pow(2) + &q * &e1 + e2.clone());
        assert_eq!(tri.y, e2);

        let lp = cone_polys(&MultiGraph::polygon(1).unwrap()).unwrap();
        assert_eq!((lp.p, lp.q, lp.y), (q.clone(), MPoly::one(), MPoly::one()));

        let ban = cone_polys(&MultiGraph::banana(2).unwrap()).unwrap();
        assert_eq!(ban.p, q.pow(2) + &q * &(t(1) + t(2)));
        assert_eq!(ban.q, q + t(1) + t(2));
        assert_eq!(ban.y, t(1) + t(2));
    }

    #[test]
    fn seed_classes_from_oracle() {
        let o = oracle();
        let v = |sides| v_class(&o, &MultiGraph::polygon(sides).unwrap()).unwrap();
        assert_eq!(v(1), c(&[0, 1, 1]));
        assert_eq!(v(2), c(&[0, 0, 1, 1]));
        assert_eq!(v(3), c(&[0, 1, 1]) * c(&[-1, 1, 1]));
        assert_eq!(polygon_cone_seeds(), SplitSeeds::new(v(1), v(2), v(3)));
    }

    #[test]
    fn v_is_w_minus_y_on_corpus() {
        let o = oracle();
        for (name, g) in corpus::graphs_up_to_dim(5) {
            assert!(cone_classes(&o, &g).unwrap().consistent(), "{name}");
        }
    }

    #[test]
    fn leading_part_obeys_delcon() {
        for (name, g) in corpus::graphs() {
            let p = tutte::p_leading(&g).unwrap();
            for e in g.edge_ids() {
                if g.classify_edge(e).unwrap() != EdgeKind::Regular {
                    continue;
                }
                let del = tutte::p_leading(&g.delete_edge(e).unwrap()).unwrap();
                let con = tutte::p_leading(&g.contract_edge(e).unwrap()).unwrap();
                assert_eq!(p, &del + &(&MPoly::t(e) * &con), "{name} edge {e}");
            }
        }
    }

    #[test]
    fn w_and_y_delcon() {
        let o = oracle();
        for g in [MultiGraph::polygon(3).unwrap(), MultiGraph::polygon(4).unwrap(), MultiGraph::banana(2).unwrap()] {
            for e in g.edge_ids() {
                for (lhs, rhs) in cone_delcon_sides(&o, &g, e).unwrap() {
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn bridge_loop_and_parallel_rules() {
        let o = oracle();
        let lp = c(&[0, 1, 1]);
        assert_eq!(cone_bridge_loop_rules(&lp, EdgeKind::Loop).unwrap(), c(&[1, 1]) * &lp);
        assert_eq!(cone_bridge_loop_rules(&lp, EdgeKind::Bridge).unwrap(), lp.scale_t_power(1));
        assert!(cone_bridge_loop_rules(&lp, EdgeKind::Regular).is_err());

        let tri = MultiGraph::polygon(3).unwrap();
        let doubled = tri.double_edge(EdgeId(1), 1).unwrap();
        assert_eq!(v_class(&o, &doubled).unwrap(), cone_parallel_edge(&v_class(&o, &tri).unwrap()));

        let with_loop = tri.add_edge(0, Some(0)).unwrap();
        let v_tri = v_class(&o, &tri).unwrap();
        assert_eq!(v_class(&o, &with_loop).unwrap(), cone_bridge_loop_rules(&v_tri, EdgeKind::Loop).unwrap());
        let pendant = tri.add_edge(0, None).unwrap();
        assert_eq!(v_class(&o, &pendant).unwrap(), cone_bridge_loop_rules(&v_tri, EdgeKind::Bridge).unwrap());
    }

    #[test]
    fn split_bridges_and_loops() {
        let o = oracle();
        assert_eq!(cone_split_bridge_loop(&c(&[0, 1, 1]), 1), c(&[0, 0, 1, 1]));
        assert_eq!(cone_split_bridge_loop(&c(&[0, 1, 1]), 0), c(&[0, 1, 1]));
        let edge = v_class(&o, &MultiGraph::banana(1).unwrap()).unwrap();
        assert_eq!(edge, ClassPoly::t_power(2));
        let path = v_class(&o, &MultiGraph::path(2)).unwrap();
        assert_eq!(path, cone_split_bridge_loop(&edge, 1));
    }

    #[test]
    fn splitting_regular_edges() {
        let o = oracle();
        assert!(cone_split_check(&o, &MultiGraph::polygon(1).unwrap(), EdgeId(1)).is_err());
        for g in [MultiGraph::polygon(3).unwrap(), MultiGraph::banana(2).unwrap(), MultiGraph::polygon(4).unwrap()] {
            let w = cone_split_witness(&o, &g, EdgeId(1)).unwrap();
            assert!(w.balances(), "{w:?}");
        }
        let w = cone_split_witness(&o, &MultiGraph::polygon(3).unwrap(), EdgeId(3)).unwrap();
        assert_eq!(w.v_split, polygon_cone_class(3));
        assert_eq!(&w.v_split - &w.predicted_without_y_term(), -(c(&[0, 0, 1, 1])));
    }

    #[test]
    fn polygon_recursion() {
        let seeds = polygon_cone_seeds();
        assert_eq!(seeds.s0, c(&[0, 1, 1]));
        assert_eq!(seeds.s1, c(&[0, 0, 1, 1]));
        let f = cone_closed_form_v(&seeds).unwrap();
        assert_eq!(f.coefficients().unwrap(), (c(&[-1, 1]), c(&[0, 0, 2]), c(&[1, 0, -1])));
        for m in 0..=8 {
            assert_eq!(cone_split_recursion_v(&seeds, m), polygon_cone_class(m));
            assert_eq!(f.term(m).unwrap(), polygon_cone_class(m));
        }
    }

    #[test]
    fn y_recursion_against_oracle() {
        let o = oracle();
        let y = |sides| cone_classes(&o, &MultiGraph::polygon(sides).unwrap()).unwrap().y;
        let seeds = SplitSeeds::new(y(1), y(2), y(3));
        assert_eq!(seeds.s0, c(&[1, 1]));
        assert_eq!(seeds.s1, c(&[0, 1, 1]));
        let f = cone_closed_form_y(&seeds).unwrap();
        for m in 0..=3 {
            assert_eq!(cone_split_recursion_y(&seeds, m), y(m + 1), "m = {m}");
            assert_eq!(f.term(m).unwrap(), y(m + 1));
        }
    }
}
