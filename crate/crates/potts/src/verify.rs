//! The invariant suites behind `potts verify`.

use std::fmt::Display;

use num_bigint::BigInt;
use potts_core::grothendieck::{self, DoubleSeeds, SplitSeeds};
use potts_core::{
    cone, corpus, motivic, pointcount, tutte, ClassPoly, EdgeId, EdgeKind, FamilySpec, MPoly, MultiGraph,
    PointCounter, SerialCounter, VarId,
};

use crate::counter::ParallelCounter;
use crate::edgelist;
use crate::report::Check;

pub const SUITES: [&str; 7] = ["graph", "poly", "tutte", "oracle", "grothendieck", "cone", "motivic"];

struct Suite {
    name: &'static str,
    checks: Vec<Check>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, checks: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        let detail = if passed { String::new() } else { detail.into() };
        self.checks.push(Check { suite: self.name.into(), name: name.into(), passed, detail });
    }

    /// Records a check whose computation may itself fail.
    fn check_result<E: Display>(&mut self, name: impl Into<String>, r: Result<(bool, String), E>) {
        match r {
            Ok((ok, detail)) => self.check(name, ok, detail),
            Err(e) => self.check(name, false, e.to_string()),
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let detail = format!("got {got:?}, expected {want:?}");
        self.check(name, got == want, detail);
    }
}

fn oracle_corpus(max_dim: usize) -> Vec<(&'static str, MultiGraph)> {
    corpus::graphs_up_to_dim(max_dim)
}

fn graph_suite() -> Vec<Check> {
    let mut s = Suite::new("graph");
    for (name, g) in corpus::graphs() {
        let k = g.components();
        let mut ok = true;
        for id in g.edge_ids() {
            let kind = g.classify_edge(id).unwrap();
            let del = g.delete_edge(id).unwrap();
            let con = g.contract_edge(id).unwrap();
            ok &= del.edge_count() + 1 == g.edge_count() && con.edge_count() + 1 == g.edge_count();
            ok &= (del.components() == k + 1) == (kind == EdgeKind::Bridge);
            ok &= kind == EdgeKind::Loop || con.components() == k;
            ok &= kind != EdgeKind::Loop || con == del;
            let split = g.split_edge(id, 3).unwrap();
            ok &= split.edge_count() == g.edge_count() + 2 && split.components() == k;
            ok &= g.double_edge(id, 2).unwrap().edge_count() == g.edge_count() + 2;
        }
        s.check(format!("edge operations on {name}"), ok, "component or edge count mismatch");
        let text = edgelist::write(&g);
        let back = edgelist::parse(&text);
        s.check(format!("edge list round trip of {name}"), back.as_ref() == Ok(&g), format!("{back:?}"));
    }
    s.checks
}

fn point(v: VarId) -> Option<u64> {
    Some(match v {
        VarId::Q => 3,
        VarId::T(e) => 2 * e.0 as u64 + 1,
    })
}

fn poly_suite() -> Vec<Check> {
    let mut s = Suite::new("poly");
    let polys: Vec<(&str, MPoly)> = corpus::graphs().into_iter().map(|(n, g)| (n, tutte::z_delcon(&g))).collect();
    let p = 10_007;
    for w in polys.windows(2) {
        let (a, b) = (&w[0].1, &w[1].1);
        let (ea, eb) = (a.eval_mod(point, p).unwrap(), b.eval_mod(point, p).unwrap());
        let sum = (a + b).eval_mod(point, p).unwrap();
        let prod = (a * b).eval_mod(point, p).unwrap();
        s.eq(format!("evaluation is additive on {} and {}", w[0].0, w[1].0), sum, (ea + eb) % p);
        s.eq(format!("evaluation is multiplicative on {} and {}", w[0].0, w[1].0), prod, ea * eb % p);
        s.eq(format!("subtraction undoes addition on {}", w[0].0), &(a + b) - b, a.clone());
        s.eq(format!("square of {} by pow", w[0].0), a.pow(2), a * a);
    }
    s.checks
}

fn tutte_suite() -> Vec<Check> {
    let mut s = Suite::new("tutte");
    for (name, g) in corpus::graphs() {
        let z = tutte::z_delcon(&g);
        s.check_result(format!("subset expansion equals deletion-contraction on {name}"), {
            tutte::z_subset(&g).map(|sub| (sub == z, format!("{sub} vs {z}")))
        });
        let at_one = z.substitute(VarId::Q, &MPoly::one());
        let torus = g.edge_ids().fold(MPoly::one(), |acc, e| acc * (MPoly::one() + MPoly::t(e)));
        s.eq(format!("Z at q = 1 is the product of (1 + t_e) on {name}"), at_one, torus);
        s.check_result(format!("Phi from Z and from spanning forests agree on {name}"), {
            tutte::phi(&g).and_then(|a| Ok((a == tutte::phi_from_tutte(&g)?, String::new())))
        });
        s.check_result(format!("Psi is the reciprocal of Phi on {name}"), {
            tutte::psi(&g).and_then(|a| Ok((a == tutte::psi_from_phi(&g)?, String::new())))
        });
        s.check_result(format!("leading part of Z is the forest sum on {name}"), {
            tutte::p_leading(&g).and_then(|a| Ok((a == tutte::p_leading_forests(&g)?, String::new())))
        });
        for e in g.edge_ids() {
            let del = tutte::z_delcon(&g.delete_edge(e).unwrap());
            let con = tutte::z_delcon(&g.contract_edge(e).unwrap());
            let t = MPoly::t(e);
            let expected = match g.classify_edge(e).unwrap() {
                EdgeKind::Loop => (MPoly::one() + t) * del,
                EdgeKind::Bridge => (MPoly::q() + t) * con,
                EdgeKind::Regular => del + t * con,
            };
            s.eq(format!("deletion-contraction at edge {e} of {name}"), &z, &expected);
        }
    }
    s.checks
}

fn oracle_suite(max_dim: usize) -> Vec<Check> {
    let mut s = Suite::new("oracle");
    let par = ParallelCounter::default();
    let ser = SerialCounter::default();
    for (name, g) in oracle_corpus(max_dim) {
        let z = tutte::z_delcon(&g);
        let d = g.edge_count() + 1;
        s.check_result(format!("F_2 complement count is 1 for {name}"), {
            par.count_complement(&z, d, 2).map(|n| (n == 1, format!("count {n}")))
        });
        s.check_result(format!("parallel and serial counts agree for {name}"), {
            par.count_complement(&z, d, 3)
                .and_then(|a| Ok((a == ser.count_complement(&z, d, 3)?, String::new())))
        });
        match grothendieck::oracle_class(&par, &g) {
            Ok(c) => {
                s.eq(format!("class of {name} is 1 at T = 1"), c.eval_i64(1), BigInt::from(1));
                s.check_result(format!("fixed-q class of {name} is the fibration quotient"), {
                    grothendieck::oracle_class_fixed_q(&par, &g).and_then(|fq| {
                        let red = grothendieck::fibration_reduce(&c, g.edge_count())?;
                        Ok((red == fq, format!("{red} vs {fq}")))
                    })
                });
            }
            Err(e) => s.check(format!("class of {name}"), false, e.to_string()),
        }
    }
    let seeds = [
        ("loop", MultiGraph::polygon(1).unwrap(), ClassPoly::t_power(2)),
        ("banana-2", MultiGraph::banana(2).unwrap(), ClassPoly::from_i64s(&[-1, 0, 1, 1])),
        ("triangle", MultiGraph::polygon(3).unwrap(), ClassPoly::from_i64s(&[2, -2, -2, 2, 1])),
    ];
    for (name, g, want) in seeds {
        let d = g.edge_count() + 1;
        if d > max_dim {
            continue;
        }
        let z = tutte::z_delcon(&g);
        s.check_result(format!("{name} class from primes 2..11 with check 13"), {
            pointcount::interpolate_class(|p| par.count_complement(&z, d, p), d, &[2, 3, 5, 7, 11], 13)
                .map(|r| (r.interpolated == want, format!("{} vs {want}", r.interpolated)))
        });
    }
    for m in 0..=4 {
        for (fam, g, formula) in [
            ("polygon", MultiGraph::polygon(m + 1).unwrap(), grothendieck::polygon_class(m)),
            ("banana", MultiGraph::banana(m + 1).unwrap(), grothendieck::banana_class(m)),
        ] {
            if g.edge_count() + 1 > max_dim {
                continue;
            }
            s.check_result(format!("{fam} m={m} closed form matches the oracle"), {
                grothendieck::oracle_class(&par, &g).map(|c| (c == formula, format!("{c} vs {formula}")))
            });
        }
    }
    s.checks
}

fn grothendieck_suite(max_dim: usize) -> Vec<Check> {
    let mut s = Suite::new("grothendieck");
    let par = ParallelCounter::default();
    for (label, seeds) in [("polygon", SplitSeeds::polygon()), ("fixed-q polygon", SplitSeeds::polygon_fixed_q())] {
        s.check_result(format!("{label} closed form matches the recursion"), {
            grothendieck::split_closed_form(&seeds).and_then(|f| {
                for m in 0..=10 {
                    if f.term(m)? != grothendieck::split_recursion(&seeds, m) {
                        return Ok((false, format!("m = {m}")));
                    }
                }
                Ok((true, String::new()))
            })
        });
    }
    for m in 0..=10 {
        s.eq(
            format!("polygon m={m} from the recursion"),
            grothendieck::split_recursion(&SplitSeeds::polygon(), m),
            grothendieck::polygon_class(m),
        );
        s.eq(
            format!("banana m={m} from the doubling recursion"),
            grothendieck::double_recursion(&DoubleSeeds::banana(), m),
            grothendieck::banana_class(m),
        );
        s.eq(
            format!("doubling closed form m={m}"),
            grothendieck::double_closed_form(&DoubleSeeds::banana_fixed_q(), m),
            grothendieck::double_recursion(&DoubleSeeds::banana_fixed_q(), m),
        );
    }
    for m in 0..=8 {
        s.eq(
            format!("polygon m={m} fibration quotient"),
            grothendieck::fibration_reduce(&grothendieck::polygon_class(m), m + 1).ok(),
            Some(grothendieck::polygon_class_fixed_q(m)),
        );
        s.eq(
            format!("banana m={m} fibration quotient"),
            grothendieck::fibration_reduce(&grothendieck::banana_class(m), m + 1).ok(),
            Some(grothendieck::banana_class_fixed_q(m)),
        );
    }
    for (name, g) in oracle_corpus(max_dim) {
        for e in g.edge_ids() {
            s.check_result(format!("deletion-contraction classes at edge {e} of {name}"), {
                grothendieck::delcon_identity_sides(&par, &g, e).map(|(l, r)| (l == r, format!("{l} vs {r}")))
            });
        }
    }
    let banana = MultiGraph::banana(2).unwrap();
    if banana.edge_count() + 2 <= max_dim {
        s.check_result("splitting identity from the 2-banana", {
            grothendieck::split_witness(&par, &banana, EdgeId(2)).map(|w| (w.balances(), format!("{w:?}")))
        });
    }
    let edge = MultiGraph::banana(1).unwrap();
    s.check_result("doubling identity from a single edge", {
        grothendieck::double_witness(&par, &edge, EdgeId(1)).map(|w| (w.balances(), format!("{w:?}")))
    });
    for (name, g, spec_class) in [
        ("chain-polygons m=1 k=0 N=2", FamilySpec::new(1, 0, 2), true),
        ("chain-bananas m=1 k=1 N=2", FamilySpec::new(1, 1, 2), false),
    ] {
        let spec = g.unwrap();
        let (graph, formula) = if spec_class {
            (MultiGraph::chain_polygons(spec).unwrap(), grothendieck::chain_polygon_class_fixed_q(spec).unwrap())
        } else {
            (MultiGraph::chain_bananas(spec).unwrap(), grothendieck::chain_banana_class_fixed_q(spec).unwrap())
        };
        if graph.edge_count() + 1 > max_dim {
            continue;
        }
        s.check_result(format!("{name} fixed-q class matches the oracle"), {
            grothendieck::oracle_class_fixed_q(&par, &graph).map(|c| (c == formula, format!("{c} vs {formula}")))
        });
    }
    s.checks
}

fn cone_suite(max_dim: usize) -> Vec<Check> {
    let mut s = Suite::new("cone");
    let par = ParallelCounter::default();
    for (name, g) in oracle_corpus(max_dim) {
        s.check_result(format!("V = W - Y for {name}"), {
            cone::cone_classes(&par, &g).map(|c| (c.consistent(), format!("{c:?}")))
        });
    }
    for m in 0..=4 {
        let g = MultiGraph::polygon(m + 1).unwrap();
        if g.edge_count() + 1 > max_dim {
            continue;
        }
        let want = cone::polygon_cone_class(m);
        s.check_result(format!("polygon m={m} cone class matches the oracle"), {
            cone::v_class(&par, &g).map(|v| (v == want, format!("{v} vs {want}")))
        });
    }
    let seeds = cone::polygon_cone_seeds();
    s.check_result("polygon cone closed form matches the recursion", {
        cone::cone_closed_form_v(&seeds).map(|f| {
            let bad = (0..=10).find(|&m| f.term(m).ok() != Some(cone::cone_split_recursion_v(&seeds, m)));
            (bad.is_none(), format!("m = {bad:?}"))
        })
    });
    for m in 0..=10 {
        s.eq(
            format!("polygon m={m} cone class from the recursion"),
            cone::cone_split_recursion_v(&seeds, m),
            cone::polygon_cone_class(m),
        );
    }
    let tri = MultiGraph::polygon(3).unwrap();
    if tri.edge_count() + 2 <= max_dim {
        for e in tri.edge_ids() {
            s.check_result(format!("cone splitting identity at triangle edge {e}"), {
                cone::cone_split_witness(&par, &tri, e).map(|w| (w.balances(), format!("{w:?}")))
            });
        }
    }
    s.checks
}

fn motivic_suite() -> Vec<Check> {
    let mut s = Suite::new("motivic");
    for m in 0..=4 {
        for k in 0..=3 {
            for n in 1..=4 {
                let spec = FamilySpec::new(m, k, n).unwrap();
                let e = spec.edge_count();
                let p = grothendieck::chain_polygon_class_fixed_q(spec).unwrap();
                s.eq(
                    format!("chain polygons m={m} k={k} N={n}"),
                    motivic::chi_c_chain_polygons(spec),
                    motivic::chi_c_real_locus(&p, e),
                );
                let b = grothendieck::chain_banana_class_fixed_q(spec).unwrap();
                s.eq(
                    format!("chain bananas m={m} k={k} N={n}"),
                    motivic::chi_c_chain_bananas(spec),
                    motivic::chi_c_real_locus(&b, e),
                );
            }
        }
    }
    let classes: Vec<ClassPoly> = (0..6).map(grothendieck::polygon_class).chain((0..6).map(grothendieck::banana_class)).collect();
    for (i, w) in classes.windows(2).enumerate() {
        let prod = &w[0] * &w[1];
        s.eq(
            format!("chi_c is multiplicative on class pair {i}"),
            motivic::chi_c_real(&prod),
            motivic::chi_c_real(&w[0]) * motivic::chi_c_real(&w[1]),
        );
        s.eq(
            format!("virtual Poincare at -1 is chi_c on class pair {i}"),
            motivic::virtual_poincare(&prod).eval(&BigInt::from(-1)),
            motivic::chi_c_real(&prod),
        );
        s.eq(
            format!("E-polynomial at (1, 1) is chi on class pair {i}"),
            motivic::e_polynomial(&prod).eval(&BigInt::from(1), &BigInt::from(1)),
            motivic::chi_complex(&prod),
        );
    }
    s.eq("decision bound at 9, n = 2", motivic::decision_bound(&9.into(), 2).to_string(), "-4/3".to_string());
    s.eq("decision bound at 0", motivic::decision_bound(&0.into(), 2), motivic::DecisionBound::Undefined);
    s.checks
}

/// Runs `suite` (one of [`SUITES`] or `all`). `max_dim` caps the ambient
/// dimension of every oracle count.
pub fn run(suite: &str, max_dim: usize) -> Result<Vec<Check>, String> {
    let one = |name: &str| -> Vec<Check> {
        match name {
            "graph" => graph_suite(),
            "poly" => poly_suite(),
            "tutte" => tutte_suite(),
            "oracle" => oracle_suite(max_dim),
            "grothendieck" => grothendieck_suite(max_dim),
            "cone" => cone_suite(max_dim),
            _ => motivic_suite(),
        }
    };
    match suite {
        "all" => Ok(SUITES.iter().flat_map(|s| one(s)).collect()),
        s if SUITES.contains(&s) => Ok(one(s)),
        s => Err(format!("unknown suite {s:?}; expected all or one of {}", SUITES.join(", "))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for suite in ["graph", "poly", "tutte", "motivic"] {
            let checks = run(suite, 4).unwrap();
            assert!(!checks.is_empty());
            let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "{failed:?}");
        }
        assert!(run("nope", 4).is_err());
    }
}
