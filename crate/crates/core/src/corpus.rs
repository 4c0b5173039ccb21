//! Small named graphs used by the invariant checks. Every entry has at most
//! eight edges.

use alloc::vec::Vec;

use crate::graph::{FamilySpec, MultiGraph};

fn family(m: usize, k: usize, n: usize) -> FamilySpec {
    FamilySpec::new(m, k, n).expect("valid family")
}

/// The corpus, in a fixed order.
pub fn graphs() -> Vec<(&'static str, MultiGraph)> {
    let edge = MultiGraph::banana(1).unwrap();
    let lp = MultiGraph::polygon(1).unwrap();
    let tri = MultiGraph::polygon(3).unwrap();
    alloc::vec![
        ("vertex", MultiGraph::empty(1)),
        ("two-vertices", MultiGraph::empty(2)),
        ("edge", edge.clone()),
        ("loop", lp.clone()),
        ("banana-2", MultiGraph::banana(2).unwrap()),
        ("banana-3", MultiGraph::banana(3).unwrap()),
        ("banana-4", MultiGraph::banana(4).unwrap()),
        ("triangle", tri.clone()),
        ("square", MultiGraph::polygon(4).unwrap()),
        ("pentagon", MultiGraph::polygon(5).unwrap()),
        ("hexagon", MultiGraph::polygon(6).unwrap()),
        ("path-2", MultiGraph::path(2)),
        ("path-3", MultiGraph::path(3)),
        ("two-edges", edge.disjoint_union(&edge)),
        ("two-loops", lp.disjoint_union(&lp)),
        ("loops-at-vertex", lp.join_at_vertex(0, &lp, 0).unwrap()),
        ("edge-with-loop", edge.add_edge(1, Some(1)).unwrap()),
        ("triangle-pendant", tri.add_edge(0, None).unwrap()),
        ("triangle-doubled", tri.double_edge(crate::graph::EdgeId(1), 1).unwrap()),
        ("k4", MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()),
        ("chain-polygons-1-0-2", MultiGraph::chain_polygons(family(1, 0, 2)).unwrap()),
        ("chain-polygons-2-1-2", MultiGraph::chain_polygons(family(2, 1, 2)).unwrap()),
        ("chain-bananas-0-2-2", MultiGraph::chain_bananas(family(0, 2, 2)).unwrap()),
        ("chain-bananas-1-1-2", MultiGraph::chain_bananas(family(1, 1, 2)).unwrap()),
        ("chain-bananas-2-1-2", MultiGraph::chain_bananas(family(2, 1, 2)).unwrap()),
    ]
}

/// Corpus graphs whose `Z_G` lives in at most `max_dim` dimensions.
pub fn graphs_up_to_dim(max_dim: usize) -> Vec<(&'static str, MultiGraph)> {
    graphs().into_iter().filter(|(_, g)| g.edge_count() < max_dim).collect()
}
