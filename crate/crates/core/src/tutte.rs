//! The multivariate Tutte polynomial `Z_G(q, t)` and the polynomials derived
//! from it: the normalized `Z~`, the Kirchhoff polynomials, the tangent-cone
//! polynomials and the auxiliary loci used by the splitting and doubling
//! formulas.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{DisjointSets, Edge, EdgeId, EdgeKind, MultiGraph};
use crate::poly::{MPoly, Monomial, VarId};

/// Largest edge count for which subsets are enumerated directly.
pub const SUBSET_EDGE_BUDGET: usize = 20;

fn check_budget(edges: usize) -> Result<()> {
    if edges > SUBSET_EDGE_BUDGET {
        return Err(Error::ResourceLimit {
            needed: 1u128 << edges.min(127),
            budget: 1u128 << SUBSET_EDGE_BUDGET,
        });
    }
    Ok(())
}

fn monomial(q_power: usize, edges: &[&Edge]) -> Monomial {
    let mut powers = Vec::with_capacity(edges.len() + 1);
    if q_power > 0 {
        powers.push((VarId::Q, q_power as u32));
    }
    powers.extend(edges.iter().map(|e| (VarId::T(e.id), 1)));
    Monomial::from_powers(powers)
}

/// Calls `f(subset, components)` for every subset of `edges`, with
/// components counted on all of `V(G)`.
fn for_each_subset<F>(g: &MultiGraph, edges: &[&Edge], mut f: F)
where
    F: FnMut(&[&Edge], usize),
{
    let mut chosen = Vec::with_capacity(edges.len());
    for mask in 0u64..(1u64 << edges.len()) {
        chosen.clear();
        let mut sets = DisjointSets::new(g.vertex_count());
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sets.union(e.a, e.b);
                chosen.push(*e);
            }
        }
        f(&chosen, sets.count());
    }
}

/// `Z_G` by summing `q^{k(A)} prod_{e in A} t_e` over all edge subsets.
pub fn z_subset(g: &MultiGraph) -> Result<MPoly> {
    check_budget(g.edge_count())?;
    let edges: Vec<&Edge> = g.edges().iter().collect();
    let mut z = MPoly::zero();
    for_each_subset(g, &edges, |a, k| z = &z + &MPoly::monomial(1, monomial(k, a)));
    Ok(z)
}

/// `Z_G` by deletion and contraction. Regular edges are split first; loops
/// and bridges only ever contribute a linear factor.
pub fn z_delcon(g: &MultiGraph) -> MPoly {
    let mut factor = MPoly::one();
    let mut g = g.clone();
    loop {
        let Some(first) = g.edges().first().copied() else {
            return &factor * &MPoly::q().pow(g.vertex_count() as u32);
        };
        let mut regular = None;
        let mut peel = None;
        for e in g.edges() {
            match g.classify_edge(e.id).expect("edge of g") {
                EdgeKind::Regular => {
                    regular = Some(e.id);
                    break;
                }
                kind => {
                    if peel.is_none() {
                        peel = Some((e.id, kind));
                    }
                }
            }
        }
        if let Some(id) = regular {
            let del = z_delcon(&g.delete_edge(id).expect("edge of g"));
            let con = z_delcon(&g.contract_edge(id).expect("edge of g"));
            return &factor * &(&del + &(&MPoly::t(id) * &con));
        }
        let (id, kind) = peel.unwrap_or((first.id, EdgeKind::Regular));
        let t = MPoly::t(id);
        if kind == EdgeKind::Loop {
            // Z_G = (1 + t_e) Z_{G\e}
            factor = &factor * &(&MPoly::one() + &t);
            g = g.delete_edge(id).expect("edge of g");
        } else {
            // a bridge: Z_{G\e} = q Z_{G/e}
            factor = &factor * &(&MPoly::q() + &t);
            g = g.contract_edge(id).expect("edge of g");
        }
    }
}

/// `Z~_G = Z_G / q^{k(G)}`.
pub fn z_tilde(g: &MultiGraph) -> Result<MPoly> {
    z_delcon(g).divide_exact_by_q_power(g.components() as u32)
}

fn non_loops(g: &MultiGraph) -> Vec<&Edge> {
    g.edges().iter().filter(|e| !e.is_loop()).collect()
}

/// Calls `f` on every maximal spanning forest, given as its edge list.
fn for_each_spanning_forest<F>(g: &MultiGraph, mut f: F) -> Result<()>
where
    F: FnMut(&[&Edge]),
{
    let edges = non_loops(g);
    check_budget(edges.len())?;
    let k = g.components();
    let size = g.vertex_count() - k;
    for_each_subset(g, &edges, |a, comps| {
        if a.len() == size && comps == k {
            f(a);
        }
    });
    Ok(())
}

/// `Phi_G`: sum over maximal spanning forests of the product of their edge
/// variables.
pub fn phi(g: &MultiGraph) -> Result<MPoly> {
    let mut out = MPoly::zero();
    for_each_spanning_forest(g, |f| out = &out + &MPoly::monomial(1, monomial(0, f)))?;
    Ok(out)
}

/// `Phi_G` recovered from `Z~_G`: set `q = 0` and keep the lowest-degree part.
pub fn phi_from_tutte(g: &MultiGraph) -> Result<MPoly> {
    z_tilde(g)?.substitute(VarId::Q, &MPoly::zero()).lowest_homogeneous_part()
}

/// `Psi_G`: sum over maximal spanning forests of the product of the edge
/// variables outside the forest.
pub fn psi(g: &MultiGraph) -> Result<MPoly> {
    let mut out = MPoly::zero();
    for_each_spanning_forest(g, |f| {
        let outside: Vec<&Edge> =
            g.edges().iter().filter(|e| !f.iter().any(|x| x.id == e.id)).collect();
        out = &out + &MPoly::monomial(1, monomial(0, &outside));
    })?;
    Ok(out)
}

/// `Psi_G = prod t_e * Phi_G(1/t)`, with denominators cleared.
pub fn psi_from_phi(g: &MultiGraph) -> Result<MPoly> {
    let vars: Vec<VarId> = g.edge_ids().map(VarId::T).collect();
    phi(g)?.reciprocal_squarefree(&vars)
}

/// `P_G`, the lowest-degree part of `Z_G`.
pub fn p_leading(g: &MultiGraph) -> Result<MPoly> {
    z_delcon(g).lowest_homogeneous_part()
}

/// `P_G` as a sum over spanning forests of any size.
pub fn p_leading_forests(g: &MultiGraph) -> Result<MPoly> {
    let edges = non_loops(g);
    check_budget(edges.len())?;
    let n = g.vertex_count();
    let mut out = MPoly::zero();
    for_each_subset(g, &edges, |a, k| {
        if a.len() + k == n {
            out = &out + &MPoly::monomial(1, monomial(k, a));
        }
    });
    Ok(out)
}

/// `Q_G = P_G / q^{k(G)}`.
pub fn q_reduced(g: &MultiGraph) -> Result<MPoly> {
    p_leading(g)?.divide_exact_by_q_power(g.components() as u32)
}

fn non_loop_edge(g: &MultiGraph, id: EdgeId) -> Result<Edge> {
    let e = *g.edge(id)?;
    if e.is_loop() {
        return Err(Error::InvalidArgument(alloc::format!("edge {id} is a loop")));
    }
    Ok(e)
}

/// `(Z', Z'')`: the subsets of `E \ {e}` that do, and do not, connect the
/// endpoints of `e`.
pub fn z_prime_split(g: &MultiGraph, id: EdgeId) -> Result<(MPoly, MPoly)> {
    let e = non_loop_edge(g, id)?;
    let rest: Vec<&Edge> = g.edges().iter().filter(|x| x.id != id).collect();
    check_budget(rest.len())?;
    let (mut zp, mut zpp) = (MPoly::zero(), MPoly::zero());
    let mut chosen = Vec::with_capacity(rest.len());
    for mask in 0u64..(1u64 << rest.len()) {
        chosen.clear();
        let mut sets = DisjointSets::new(g.vertex_count());
        for (i, x) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sets.union(x.a, x.b);
                chosen.push(*x);
            }
        }
        let term = MPoly::monomial(1, monomial(sets.count(), &chosen));
        if sets.find(e.a) == sets.find(e.b) {
            zp = &zp + &term;
        } else {
            zpp = &zpp + &term;
        }
    }
    Ok((zp, zpp))
}

/// `(1 - q) Z'`, the defining polynomial of `A^e_G` on the slice `t_e = -q`.
pub fn a_locus_poly(g: &MultiGraph, id: EdgeId) -> Result<MPoly> {
    let (zp, _) = z_prime_split(g, id)?;
    Ok(&(&MPoly::one() - &MPoly::q()) * &zp)
}

/// `Z_{G\e} - Z_{G/e}`, the defining polynomial of `B^e_G`. Zero for a loop.
pub fn b_locus_poly(g: &MultiGraph, id: EdgeId) -> Result<MPoly> {
    if g.edge(id)?.is_loop() {
        return Ok(MPoly::zero());
    }
    let del = z_delcon(&g.delete_edge(id)?);
    let con = z_delcon(&g.contract_edge(id)?);
    Ok(&del - &con)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use std::string::ToString;

    fn t(i: u32) -> MPoly {
        MPoly::t(EdgeId(i))
    }

    fn e(i: u32) -> EdgeId {
        EdgeId(i)
    }

    fn triangle() -> MultiGraph {
        MultiGraph::polygon(3).unwrap()
    }

    fn single_edge() -> MultiGraph {
        MultiGraph::banana(1).unwrap()
    }

    fn loop_graph() -> MultiGraph {
        MultiGraph::polygon(1).unwrap()
    }

    fn banana2() -> MultiGraph {
        MultiGraph::banana(2).unwrap()
    }

    fn e1() -> MPoly {
        t(1) + t(2) + t(3)
    }

    fn e2() -> MPoly {
        t(1) * t(2) + t(1) * t(3) + t(2) * t(3)
    }

    #[test]
    fn base_cases() {
        let q = MPoly::q();
        assert_eq!(z_subset(&MultiGraph::empty(1)).unwrap(), q);
        assert_eq!(z_subset(&single_edge()).unwrap(), &q * &t(1) + q.pow(2));
        assert_eq!(z_subset(&loop_graph()).unwrap(), &q * &t(1) + q.clone());
        assert_eq!(z_delcon(&MultiGraph::empty(3)), q.pow(3));
    }

    #[test]
    fn known_polynomials() {
        let q = MPoly::q();
        let tri = q.pow(3) + q.pow(2) * e1() + &q * &(e2() + t(1) * t(2) * t(3));
        assert_eq!(z_delcon(&triangle()), tri);
        let ban = q.pow(2) + &q * &(t(1) + t(2) + t(1) * t(2));
        assert_eq!(z_delcon(&banana2()), ban);
        assert_eq!(z_delcon(&banana2()).to_string(), "q*t1*t2 + q^2 + q*t1 + q*t2");

        let two = single_edge().disjoint_union(&single_edge());
        assert_eq!(z_delcon(&two), q.pow(2) * (t(1) + q.clone()) * (t(2) + q.clone()));
    }

    #[test]
    fn delcon_matches_subsets_on_corpus() {
        for (name, g) in corpus::graphs() {
            assert_eq!(z_delcon(&g), z_subset(&g).unwrap(), "{name}");
        }
    }

    #[test]
    fn delcon_relation_on_every_edge() {
        for (name, g) in corpus::graphs() {
            let z = z_delcon(&g);
            for id in g.edge_ids() {
                let del = z_delcon(&g.delete_edge(id).unwrap());
                let con = z_delcon(&g.contract_edge(id).unwrap());
                assert_eq!(z, &del + &(&MPoly::t(id) * &con), "{name} edge {id}");
            }
        }
    }

    #[test]
    fn torus_at_q_one() {
        for (name, g) in corpus::graphs() {
            let at_one = z_delcon(&g).substitute(VarId::Q, &MPoly::one());
            let torus = g.edge_ids().fold(MPoly::one(), |acc, id| acc * (MPoly::one() + MPoly::t(id)));
            assert_eq!(at_one, torus, "{name}");
        }
    }

    #[test]
    fn normalized() {
        let q = MPoly::q();
        assert_eq!(z_tilde(&single_edge()).unwrap(), t(1) + q);
        assert_eq!(z_tilde(&loop_graph()).unwrap(), t(1) + MPoly::one());
        assert_eq!(z_tilde(&MultiGraph::empty(2)).unwrap(), MPoly::one());
    }

    #[test]
    fn kirchhoff() {
        assert_eq!(phi(&triangle()).unwrap(), e2());
        assert_eq!(phi(&single_edge()).unwrap(), t(1));
        assert_eq!(phi(&loop_graph()).unwrap(), MPoly::one());
        assert_eq!(psi(&triangle()).unwrap(), e1());
        assert_eq!(psi(&single_edge()).unwrap(), MPoly::one());
        assert_eq!(psi(&banana2()).unwrap(), t(1) + t(2));
        assert_eq!(psi(&loop_graph()).unwrap(), t(1));
        for (name, g) in corpus::graphs() {
            assert_eq!(phi(&g).unwrap(), phi_from_tutte(&g).unwrap(), "{name}");
            assert_eq!(psi(&g).unwrap(), psi_from_phi(&g).unwrap(), "{name}");
        }
    }

    #[test]
    fn tangent_cone_polynomials() {
        let q = MPoly::q();
        let tri = q.pow(3) + q.pow(2) * e1() + &q * &e2();
        assert_eq!(p_leading(&triangle()).unwrap(), tri);
        assert_eq!(p_leading(&loop_graph()).unwrap(), q);
        assert_eq!(p_leading(&banana2()).unwrap(), q.pow(2) + &q * &(t(1) + t(2)));

        let qt = q_reduced(&triangle()).unwrap();
        assert_eq!(qt, q.pow(2) + &q * &e1() + e2());
        assert_eq!(qt.substitute(VarId::Q, &MPoly::zero()), phi(&triangle()).unwrap());
        assert_eq!(q_reduced(&single_edge()).unwrap(), q + t(1));

        for (name, g) in corpus::graphs() {
            let p = p_leading(&g).unwrap();
            assert_eq!(p, p_leading_forests(&g).unwrap(), "{name}");
            assert!(p.is_homogeneous(), "{name}");
            assert_eq!(p.total_degree(), Some(g.vertex_count() as u32), "{name}");
            let qr = q_reduced(&g).unwrap();
            assert!(qr.divide_exact_by_q_power(1).is_err(), "{name}");
            assert_eq!(qr.substitute(VarId::Q, &MPoly::zero()), phi(&g).unwrap(), "{name}");
        }
    }

    #[test]
    fn prime_split() {
        let q = MPoly::q();
        let (zp, zpp) = z_prime_split(&triangle(), e(3)).unwrap();
        assert_eq!(zp, &q * &t(1) * t(2));
        assert_eq!(zpp, q.pow(3) + q.pow(2) * t(1) + q.pow(2) * t(2));

        let (zp, zpp) = z_prime_split(&single_edge(), e(1)).unwrap();
        assert!(zp.is_zero());
        assert_eq!(zpp, q.pow(2));

        let (zp, zpp) = z_prime_split(&banana2(), e(2)).unwrap();
        assert_eq!(zp, &q * &t(1));
        assert_eq!(zpp, q.pow(2));

        assert!(matches!(z_prime_split(&loop_graph(), e(1)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn prime_split_identities() {
        let q = MPoly::q();
        for (name, g) in corpus::graphs() {
            for id in g.edge_ids() {
                if g.edge(id).unwrap().is_loop() {
                    continue;
                }
                let (zp, zpp) = z_prime_split(&g, id).unwrap();
                let del = z_delcon(&g.delete_edge(id).unwrap());
                let con = z_delcon(&g.contract_edge(id).unwrap());
                assert_eq!(del, &zp + &zpp, "{name} edge {id}");
                assert_eq!(&q * &con, &(&q * &zp) + &zpp, "{name} edge {id}");
                let a = a_locus_poly(&g, id).unwrap();
                assert_eq!(a, &del - &(&q * &con), "{name} edge {id}");
                assert!(!a.variables().contains(&VarId::T(id)));
                let b = b_locus_poly(&g, id).unwrap();
                let zbar = zpp.divide_exact_by_q_power(1).unwrap();
                assert_eq!(b, &(&q - &MPoly::one()) * &zbar, "{name} edge {id}");
            }
        }
    }

    #[test]
    fn auxiliary_loci() {
        let q = MPoly::q();
        let one_minus_q = &MPoly::one() - &q;
        assert_eq!(a_locus_poly(&triangle(), e(3)).unwrap(), &one_minus_q * &(&q * &t(1) * t(2)));
        assert!(a_locus_poly(&single_edge(), e(1)).unwrap().is_zero());
        assert_eq!(a_locus_poly(&banana2(), e(2)).unwrap(), &one_minus_q * &(&q * &t(1)));

        let q_minus_one = &q - &MPoly::one();
        let tri_b = &q_minus_one * &(q.pow(2) + &q * &t(1) + &q * &t(2)).divide_exact_by_q_power(1).unwrap();
        assert_eq!(b_locus_poly(&triangle(), e(3)).unwrap(), &tri_b * &q);
        assert!(b_locus_poly(&loop_graph(), e(1)).unwrap().is_zero());
        assert_eq!(b_locus_poly(&single_edge(), e(1)).unwrap(), &q_minus_one * &q);
    }

    #[test]
    fn budget() {
        let big = MultiGraph::banana(SUBSET_EDGE_BUDGET + 1).unwrap();
        assert!(matches!(z_subset(&big), Err(Error::ResourceLimit { .. })));
        // deletion-contraction has no such limit
        assert_eq!(z_delcon(&big).degree_in(VarId::Q), 2);
    }
}
