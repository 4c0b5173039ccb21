//! End-to-end use of the public API: graph, polynomial, counted class,
//! closed form and evaluations.

use potts_core::grothendieck::{self, SplitSeeds};
use potts_core::{cone, motivic, tutte, ClassPoly, EdgeId, FamilySpec, MultiGraph, SerialCounter};

#[test]
fn triangle_from_graph_to_euler_characteristic() {
    let o = SerialCounter::default();
    let tri = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let class = grothendieck::oracle_class(&o, &tri).unwrap();
    assert_eq!(class, grothendieck::polygon_class(2));
    assert_eq!(class, ClassPoly::from_i64s(&[2, -2, -2, 2, 1]));
    let fixed = grothendieck::oracle_class_fixed_q(&o, &tri).unwrap();
    assert_eq!(grothendieck::fibration_reduce(&class, 3).unwrap(), fixed);
    assert_eq!(motivic::chi_c_real_locus(&fixed, 3), 1.into());
    assert_eq!(motivic::chi_complex(&class), 2.into());
}

#[test]
fn splitting_an_edge_follows_the_recursion() {
    let o = SerialCounter::default();
    let banana = MultiGraph::banana(2).unwrap();
    let w = grothendieck::split_witness(&o, &banana, EdgeId(1)).unwrap();
    assert_eq!(w.seeds, SplitSeeds::polygon());
    assert!(w.balances());
    let square = banana.split_edge(EdgeId(1), 3).unwrap();
    assert_eq!(grothendieck::oracle_class(&o, &square).unwrap(), grothendieck::split_recursion(&w.seeds, 3));
}

#[test]
fn tangent_cone_of_a_square() {
    let o = SerialCounter::default();
    let square = MultiGraph::polygon(4).unwrap();
    let classes = cone::cone_classes(&o, &square).unwrap();
    assert!(classes.consistent());
    assert_eq!(classes.v, cone::polygon_cone_class(3));
    let tri = MultiGraph::polygon(3).unwrap();
    for e in tri.edge_ids() {
        assert!(cone::cone_split_check(&o, &tri, e).unwrap());
    }
}

#[test]
fn chained_bananas_small_member() {
    let o = SerialCounter::default();
    let spec = FamilySpec::new(1, 1, 2).unwrap();
    let g = MultiGraph::chain_bananas(spec).unwrap();
    assert_eq!(g.edge_count(), spec.edge_count());
    let fixed = grothendieck::oracle_class_fixed_q(&o, &g).unwrap();
    assert_eq!(fixed, grothendieck::chain_banana_class_fixed_q(spec).unwrap());
    assert_eq!(motivic::chi_c_real_locus(&fixed, 5), motivic::chi_c_chain_bananas(spec));
    assert_eq!(tutte::z_subset(&g).unwrap(), tutte::z_delcon(&g));
}
