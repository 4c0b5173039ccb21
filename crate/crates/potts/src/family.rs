//! Named graph families and the closed-form classes that go with them.

use std::fmt;
use std::str::FromStr;

use potts_core::{cone, grothendieck, ClassPoly, FamilySpec, MultiGraph, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// The `(m+1)`-gon.
    Polygon,
    /// `m + 1` parallel edges.
    Banana,
    ChainPolygon,
    ChainBanana,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] =
        [FamilyKind::Polygon, FamilyKind::Banana, FamilyKind::ChainPolygon, FamilyKind::ChainBanana];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Polygon => "polygon",
            FamilyKind::Banana => "banana",
            FamilyKind::ChainPolygon => "chain-polygon",
            FamilyKind::ChainBanana => "chain-banana",
        }
    }

    pub fn is_chain(self) -> bool {
        matches!(self, FamilyKind::ChainPolygon | FamilyKind::ChainBanana)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}; expected polygon, banana, chain-polygon or chain-banana"))
    }
}

/// A family member. `k` and `n` only matter for chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family {
    pub kind: FamilyKind,
    pub m: usize,
    pub k: usize,
    pub n: usize,
}

impl Family {
    pub fn new(kind: FamilyKind, m: usize, k: usize, n: usize) -> Self {
        Family { kind, m, k, n }
    }

    pub fn spec(&self) -> Result<FamilySpec> {
        FamilySpec::new(self.m, self.k, self.n)
    }

    pub fn graph(&self) -> Result<MultiGraph> {
        match self.kind {
            FamilyKind::Polygon => MultiGraph::polygon(self.m + 1),
            FamilyKind::Banana => MultiGraph::banana(self.m + 1),
            FamilyKind::ChainPolygon => MultiGraph::chain_polygons(self.spec()?),
            FamilyKind::ChainBanana => MultiGraph::chain_bananas(self.spec()?),
        }
    }

    pub fn edge_count(&self) -> Result<usize> {
        Ok(match self.kind {
            FamilyKind::Polygon | FamilyKind::Banana => self.m + 1,
            _ => self.spec()?.edge_count(),
        })
    }

    /// `{Z_G}` from the closed forms.
    pub fn class(&self) -> Result<ClassPoly> {
        match self.kind {
            FamilyKind::Polygon => Ok(grothendieck::polygon_class(self.m)),
            FamilyKind::Banana => Ok(grothendieck::banana_class(self.m)),
            FamilyKind::ChainPolygon => grothendieck::chain_polygon_class(self.spec()?),
            FamilyKind::ChainBanana => grothendieck::chain_banana_class(self.spec()?),
        }
    }

    /// `{Z_{G,q}}` from the closed forms.
    pub fn class_fixed_q(&self) -> Result<ClassPoly> {
        match self.kind {
            FamilyKind::Polygon => Ok(grothendieck::polygon_class_fixed_q(self.m)),
            FamilyKind::Banana => Ok(grothendieck::banana_class_fixed_q(self.m)),
            FamilyKind::ChainPolygon => grothendieck::chain_polygon_class_fixed_q(self.spec()?),
            FamilyKind::ChainBanana => grothendieck::chain_banana_class_fixed_q(self.spec()?),
        }
    }

    /// Closed-form tangent-cone class, known for polygons only.
    pub fn cone_class(&self) -> Option<ClassPoly> {
        (self.kind == FamilyKind::Polygon).then(|| cone::polygon_cone_class(self.m))
    }

    pub fn label(&self) -> String {
        if self.kind.is_chain() {
            format!("{} m={} k={} N={}", self.kind, self.m, self.k, self.n)
        } else {
            format!("{} m={}", self.kind, self.m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_match_edge_counts() {
        for kind in FamilyKind::ALL {
            for m in 0..4 {
                let f = Family::new(kind, m, 1, 2);
                assert_eq!(f.graph().unwrap().edge_count(), f.edge_count().unwrap(), "{}", f.label());
                assert_eq!(kind.name().parse::<FamilyKind>().unwrap(), kind);
            }
        }
        assert!("hexagon".parse::<FamilyKind>().is_err());
        assert!(Family::new(FamilyKind::ChainBanana, 1, 1, 0).graph().is_err());
    }
}
