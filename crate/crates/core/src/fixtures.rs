//! Bundled example inputs, each with the counts it is expected to produce.

use serde::{Deserialize, Serialize};

use crate::brauer::BrauerPermutation;
use crate::error::{Error, Result};
use crate::groups::GroupElement;
use crate::quiver::BoundQuiver;
use crate::weights::GWeight;

const SOURCES: [(&str, &str); 7] = [
    ("FIX1", include_str!("../fixtures/FIX1.json")),
    ("FIX-MULT", include_str!("../fixtures/FIX-MULT.json")),
    ("FIX-LOOP", include_str!("../fixtures/FIX-LOOP.json")),
    ("FIX-DOUBLE", include_str!("../fixtures/FIX-DOUBLE.json")),
    ("FIX-S3", include_str!("../fixtures/FIX-S3.json")),
    ("FIX-CYCLE", include_str!("../fixtures/FIX-CYCLE.json")),
    ("FIX-BR1", include_str!("../fixtures/FIX-BR1.json")),
];

/// Shape of a covering.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedCover {
    pub half_edges: Option<usize>,
    pub vertices: Option<usize>,
    pub edges: Option<usize>,
    pub orbit_lengths: Option<Vec<usize>>,
    pub multiplicity_trivial: Option<bool>,
    pub loops: Option<usize>,
    /// Number of groups of parallel edges.
    pub multiple_edges: Option<usize>,
    pub arrows: Option<usize>,
    pub boundary_arrows: Option<usize>,
    pub relations: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub vertices: Option<usize>,
    pub edges: Option<usize>,
    pub loops: Option<usize>,
    pub multiple_edges: Option<usize>,
    pub arrows: Option<usize>,
    pub relations: Option<usize>,
    /// Window depth to use with an infinite group.
    pub depth: Option<usize>,
    /// Layers to build for a quiver over an infinite group.
    pub window: Option<Vec<String>>,
    pub cover: Option<ExpectedCover>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub id: String,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brauer: Option<BrauerPermutation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<BoundQuiver>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<GWeight>,
    pub expected: Expected,
}

impl Fixture {
    /// The quiver to smash: the supplied one, or the bound quiver of `brauer`.
    pub fn bound_quiver(&self) -> Option<BoundQuiver> {
        self.quiver.clone().or_else(|| self.brauer.as_ref().map(BrauerPermutation::bound_quiver))
    }

    /// Parsed `expected.window` in the weight's group.
    pub fn window(&self) -> Result<Option<Vec<GroupElement>>> {
        let (Some(words), Some(w)) = (&self.expected.window, &self.weight) else {
            return Ok(None);
        };
        words.iter().map(|s| w.group().parse_word(s)).collect::<Result<Vec<_>>>().map(Some)
    }
}

/// Ids of the bundled fixtures.
pub fn ids() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|(id, _)| *id)
}

/// Raw JSON of a bundled fixture.
pub fn source(id: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(k, _)| *k == id).map(|(_, s)| *s)
}

pub fn get(id: &str) -> Result<Fixture> {
    let text = source(id).ok_or_else(|| Error::Malformed(format!("unknown fixture `{id}`")))?;
    Ok(serde_json::from_str(text)?)
}

pub fn all() -> Vec<Fixture> {
    ids().map(|id| get(id).expect("bundled fixture parses")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads_with_its_id() {
        let fs = all();
        assert_eq!(fs.len(), 7);
        for f in &fs {
            assert!(f.brauer.is_some() || f.quiver.is_some(), "{}", f.id);
            assert_eq!(source(&f.id).map(|s| s.contains(&f.id)), Some(true));
        }
        assert!(get("NOPE").is_err());
    }

    #[test]
    fn base_counts_match() {
        for f in all() {
            let Some(b) = &f.brauer else { continue };
            let g = b.brauer_graph();
            let c = g.classify();
            let e = &f.expected;
            assert_eq!(e.vertices.map(|n| n == g.vertices.len()), e.vertices.map(|_| true), "{}", f.id);
            assert_eq!(e.edges.map(|n| n == g.edges.len()), e.edges.map(|_| true), "{}", f.id);
            assert_eq!(e.loops.map(|n| n == c.loops.len()), e.loops.map(|_| true), "{}", f.id);
            if let Some(n) = e.multiple_edges {
                assert_eq!(n, c.multiple_edges.len(), "{}", f.id);
            }
        }
    }
}
