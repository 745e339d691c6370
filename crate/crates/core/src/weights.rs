//! G-weights on Brauer permutations (keyed by half edge) and on bound
//! quivers (keyed by arrow name).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::brauer::{BrauerPermutation, HalfEdge};
use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupSpec};
use crate::quiver::{arrow_name, BoundQuiver, Path};

/// A map from half edges or arrows to a group. Keys that are not listed
/// carry the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GWeight {
    group: GroupSpec,
    values: BTreeMap<String, GroupElement>,
}

impl GWeight {
    pub fn new(group: GroupSpec, values: BTreeMap<String, GroupElement>) -> Result<Self> {
        for (key, x) in &values {
            if !group.contains(x) {
                return Err(Error::ElementMismatch(format!("value of `{key}`")));
            }
        }
        let mut w = GWeight { group, values };
        w.drop_identities();
        Ok(w)
    }

    /// The weight sending everything to `1`.
    pub fn identity(group: GroupSpec) -> Self {
        GWeight { group, values: BTreeMap::new() }
    }

    /// Builds from `(key, word)` pairs.
    pub fn from_words(group: GroupSpec, words: &[(&str, &str)]) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (key, word) in words {
            values.insert((*key).to_owned(), group.parse_word(word)?);
        }
        Self::new(group, values)
    }

    fn drop_identities(&mut self) {
        let one = self.group.identity();
        self.values.retain(|_, x| *x != one);
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// `W(key)`.
    pub fn get(&self, key: &str) -> GroupElement {
        self.values.get(key).cloned().unwrap_or_else(|| self.group.identity())
    }

    /// The non-identity values.
    pub fn values(&self) -> &BTreeMap<String, GroupElement> {
        &self.values
    }

    pub fn set(&mut self, key: &str, x: GroupElement) -> Result<()> {
        if !self.group.contains(&x) {
            return Err(Error::ElementMismatch(format!("value of `{key}`")));
        }
        self.values.insert(key.to_owned(), x);
        self.drop_identities();
        Ok(())
    }

    /// Values indexed by half edge; errors on keys that are not half edges.
    pub fn on_brauer(&self, b: &BrauerPermutation) -> Result<Vec<GroupElement>> {
        for key in self.values.keys() {
            b.half_edge(key)?;
        }
        Ok(b.names().iter().map(|n| self.get(n)).collect())
    }

    /// Values indexed by arrow; errors on keys that are not arrows.
    pub fn on_quiver(&self, q: &BoundQuiver) -> Result<Vec<GroupElement>> {
        for key in self.values.keys() {
            q.arrow_index(key)?;
        }
        Ok(q.arrows.iter().map(|a| self.get(&a.name)).collect())
    }

    /// The same weight read on the bound Brauer quiver: `W(α_e) := W(e)`.
    pub fn to_arrow_weight(&self) -> GWeight {
        GWeight {
            group: self.group.clone(),
            values: self.values.iter().map(|(k, x)| (arrow_name(k), x.clone())).collect(),
        }
    }

    /// `W(μ) = W(α_n)⋯W(α_1)` for a path of `q`.
    pub fn path_weight(&self, q: &BoundQuiver, path: &Path) -> Result<GroupElement> {
        q.path_ends(path)?;
        let values = self.on_quiver(q)?;
        Ok(product(&self.group, path.arrows().iter().map(|&i| &values[i])))
    }

    /// Weight of a path given by arrow names, without a quiver to check
    /// composability against.
    pub fn word_weight<'a>(&self, arrows: impl IntoIterator<Item = &'a str>) -> GroupElement {
        let values: Vec<GroupElement> = arrows.into_iter().map(|a| self.get(a)).collect();
        product(&self.group, values.iter())
    }

    pub fn to_data(&self) -> Result<WeightData> {
        Ok(WeightData {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .map(|(k, x)| Ok((k.clone(), self.group.format_word(x)?)))
                .collect::<Result<_>>()?,
        })
    }

    pub fn from_data(data: &WeightData) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (k, word) in &data.values {
            values.insert(k.clone(), data.group.parse_word(word)?);
        }
        Self::new(data.group.clone(), values)
    }
}

/// `xs` multiplied with later factors on the left.
pub(crate) fn product<'a>(
    group: &GroupSpec,
    xs: impl IntoIterator<Item = &'a GroupElement>,
) -> GroupElement {
    xs.into_iter().fold(group.identity(), |acc, x| group.mul_unchecked(x, &acc))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightData {
    pub group: GroupSpec,
    #[serde(default)]
    pub values: BTreeMap<String, String>,
}

impl Serialize for GWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_data().map_err(serde::ser::Error::custom)?.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GWeight::from_data(&WeightData::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Outcome of a weight condition: the least violating half edge or
/// relation, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub witness: Option<String>,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// `W(μ_e)` for every half edge, `μ_e` the special cycle starting at `e`.
pub(crate) fn special_cycle_weights(b: &BrauerPermutation, w: &[GroupElement], group: &GroupSpec) -> Vec<GroupElement> {
    b.half_edges()
        .map(|e| {
            let mut acc = group.identity();
            let mut f = e;
            for _ in 0..b.orbit_len(e) {
                acc = group.mul_unchecked(&w[f.0], &acc);
                f = b.sigma(f);
            }
            acc
        })
        .collect()
}

fn half_edges_by_name(b: &BrauerPermutation) -> Vec<HalfEdge> {
    let mut order: Vec<HalfEdge> = b.half_edges().collect();
    order.sort_by(|&x, &y| b.name(x).cmp(b.name(y)));
    order
}

/// `W(μ_e)^{m(⟨σ⟩e)} = 1` for every `e`.
pub fn is_admissible(b: &BrauerPermutation, w: &GWeight) -> Result<Check> {
    let g = w.group();
    let mu = special_cycle_weights(b, &w.on_brauer(b)?, g);
    let witness = half_edges_by_name(b)
        .into_iter()
        .find(|&e| !g.is_identity(&g.pow_unchecked(&mu[e.0], b.multiplicity(e) as i64)))
        .map(|e| b.name(e).to_owned());
    Ok(Check { witness })
}

/// `W(μ_e^{m(⟨σ⟩e)}) = W(μ_{τe}^{m(⟨σ⟩τe)})` for every `e`.
pub fn is_homogeneous_brauer(b: &BrauerPermutation, w: &GWeight) -> Result<Check> {
    let g = w.group();
    let mu = special_cycle_weights(b, &w.on_brauer(b)?, g);
    let power = |e: HalfEdge| g.pow_unchecked(&mu[e.0], b.multiplicity(e) as i64);
    let witness = half_edges_by_name(b)
        .into_iter()
        .find(|&e| power(e) != power(b.tau(e)))
        .map(|e| b.name(e).to_owned());
    Ok(Check { witness })
}

/// Every relation generator has all its paths of the same weight. The
/// witness is the first offending generator, written out.
pub fn is_homogeneous_quiver(q: &BoundQuiver, w: &GWeight) -> Result<Check> {
    let values = w.on_quiver(q)?;
    let g = w.group();
    let weight = |p: &Path| product(g, p.arrows().iter().map(|&i| &values[i]));
    let witness = q
        .relations
        .iter()
        .find(|rel| {
            let first = weight(&rel.terms[0].1);
            rel.terms[1..].iter().any(|(_, p)| weight(p) != first)
        })
        .map(|rel| q.display_relation(rel));
    Ok(Check { witness })
}
