//! Bound quivers `(Q, I)` with explicitly supplied relation generators.
//!
//! Paths are stored in application order (`[α_1, …, α_n]`) and displayed
//! right to left as `α_n⋯α_1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::brauer::{sigma_orbits, unique_edge_labels, BrauerPermutation, HalfEdge};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Arrow indices in application order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.0
    }
}

/// A relation generator `Σ k_i μ_i` over parallel paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    pub terms: Vec<(i64, Path)>,
}

impl Relation {
    pub fn monomial(path: Path) -> Self {
        Relation { terms: vec![(1, path)] }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms sorted, overall sign fixed so the first coefficient is positive.
    /// Two generators that differ only by order or sign normalize equally.
    pub fn normalized(&self) -> Relation {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        if terms.first().is_some_and(|t| t.0 < 0) {
            for t in &mut terms {
                t.0 = -t.0;
            }
        }
        Relation { terms }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundQuiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl BoundQuiver {
    /// Validates endpoints, composability and parallelism of relation terms.
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>, relations: Vec<Relation>) -> Result<Self> {
        let q = BoundQuiver { vertices, arrows, relations };
        q.check()?;
        Ok(q)
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidQuiver(msg));
        let mut names = BTreeSet::new();
        for v in &self.vertices {
            if !names.insert(v) {
                return bad(format!("duplicate vertex `{v}`"));
            }
        }
        let mut names = BTreeSet::new();
        for a in &self.arrows {
            if !names.insert(&a.name) {
                return bad(format!("duplicate arrow `{}`", a.name));
            }
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return bad(format!("arrow `{}` has an undeclared endpoint", a.name));
            }
        }
        for (k, rel) in self.relations.iter().enumerate() {
            if rel.terms.is_empty() {
                return bad(format!("relation {k} is empty"));
            }
            let mut ends = None;
            for (coef, path) in &rel.terms {
                if *coef == 0 {
                    return bad(format!("relation {k} has a zero coefficient"));
                }
                let se = self.path_ends(path)?;
                if *ends.get_or_insert(se) != se {
                    return bad(format!("relation {k} has non-parallel paths"));
                }
            }
        }
        Ok(())
    }

    /// `(source, target)` of a path; errors on empty or non-composable paths.
    pub fn path_ends(&self, path: &Path) -> Result<(usize, usize)> {
        let arrow = |i: usize| {
            self.arrows.get(i).ok_or_else(|| Error::UnknownArrow(format!("#{i}")))
        };
        let first = arrow(*path.0.first().ok_or_else(|| Error::InvalidQuiver("empty path".into()))?)?;
        let mut at = first.target;
        for &i in &path.0[1..] {
            let a = arrow(i)?;
            if a.source != at {
                return Err(Error::InvalidQuiver(format!(
                    "path is not composable at `{}`",
                    a.name
                )));
            }
            at = a.target;
        }
        Ok((first.source, at))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.into()))
    }

    /// Arrows leaving `v` (`v⁺`).
    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].source == v).collect()
    }

    /// Arrows entering `v` (`v⁻`).
    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].target == v).collect()
    }

    /// Vertices visited by a path, source first.
    pub fn path_vertices(&self, path: &Path) -> Vec<usize> {
        let mut out = Vec::with_capacity(path.len() + 1);
        if let Some(&first) = path.0.first() {
            out.push(self.arrows[first].source);
        }
        out.extend(path.0.iter().map(|&i| self.arrows[i].target));
        out
    }

    /// `α_n⋯α_1`, runs of one arrow collapsed: `(alpha_2-)^2`.
    pub fn display_path(&self, path: &Path) -> String {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &i in path.0.iter().rev() {
            match runs.last_mut() {
                Some((a, k)) if *a == i => *k += 1,
                _ => runs.push((i, 1)),
            }
        }
        runs.iter()
            .map(|&(i, k)| {
                let name = &self.arrows[i].name;
                if k == 1 { name.clone() } else { format!("({name})^{k}") }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn display_relation(&self, rel: &Relation) -> String {
        let mut out = String::new();
        for (k, (coef, path)) in rel.terms.iter().enumerate() {
            let sign = if *coef < 0 { "-" } else if k > 0 { "+" } else { "" };
            if k > 0 {
                out.push(' ');
            }
            out.push_str(sign);
            if k > 0 {
                out.push(' ');
            }
            if coef.abs() != 1 {
                let _ = write!(out, "{} ", coef.abs());
            }
            out.push_str(&self.display_path(path));
        }
        out
    }

    /// Plain-text listing of the relation generators, one per line.
    pub fn relations_text(&self) -> String {
        self.relations.iter().map(|r| self.display_relation(r) + "\n").collect()
    }

    /// Full subquiver on `keep`: arrows with both ends kept, relations all
    /// of whose paths stay inside. Vertex and arrow indices are renumbered.
    pub fn restricted_to(&self, keep: &BTreeSet<usize>) -> BoundQuiver {
        let vmap: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut amap = HashMap::new();
        let mut arrows = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if let (Some(&s), Some(&t)) = (vmap.get(&a.source), vmap.get(&a.target)) {
                amap.insert(i, arrows.len());
                arrows.push(Arrow { name: a.name.clone(), source: s, target: t });
            }
        }
        let relations = self
            .relations
            .iter()
            .filter_map(|r| {
                let terms = r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        p.0.iter()
                            .map(|i| amap.get(i).copied())
                            .collect::<Option<Vec<_>>>()
                            .map(|v| (*c, Path(v)))
                    })
                    .collect::<Option<Vec<_>>>()?;
                Some(Relation { terms })
            })
            .collect();
        BoundQuiver {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows,
            relations,
        }
    }

    pub fn to_data(&self) -> QuiverData {
        QuiverData {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowData {
                    name: a.name.clone(),
                    source: self.vertices[a.source].clone(),
                    target: self.vertices[a.target].clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, p)| {
                            (*c, p.0.iter().map(|&i| self.arrows[i].name.clone()).collect())
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_data(data: &QuiverData) -> Result<Self> {
        let vpos = |name: &str| {
            data.vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex `{name}`")))
        };
        let arrows = data
            .arrows
            .iter()
            .map(|a| Ok(Arrow { name: a.name.clone(), source: vpos(&a.source)?, target: vpos(&a.target)? }))
            .collect::<Result<Vec<_>>>()?;
        let apos = |name: &str| {
            arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.into()))
        };
        let relations = data
            .relations
            .iter()
            .map(|terms| {
                Ok(Relation {
                    terms: terms
                        .iter()
                        .map(|(c, p)| {
                            Ok((*c, Path(p.iter().map(|n| apos(n)).collect::<Result<Vec<_>>>()?)))
                        })
                        .collect::<Result<Vec<_>>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        BoundQuiver::new(data.vertices.clone(), arrows, relations)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowData {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// Serialized quiver. Each relation is a list of `[coefficient, path]`
/// terms, paths listing arrow names in application order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverData {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowData>,
    #[serde(default)]
    pub relations: Vec<Vec<(i64, Vec<String>)>>,
}

impl Serialize for BoundQuiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_data().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundQuiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BoundQuiver::from_data(&QuiverData::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Arrow name of `α_e`.
pub fn arrow_name(half_edge: &str) -> String {
    format!("alpha_{half_edge}")
}

/// Parts of the bound Brauer quiver of a (possibly partial) ribbon
/// structure. Only complete τ-orbits become vertices; arrows and relations
/// are kept when everything they touch exists. Arrow `k` of the result corresponds to
/// half edge `arrow_half_edges[k]`.
pub(crate) struct BrauerQuiverParts {
    pub quiver: BoundQuiver,
    /// `[lesser, greater]` half edge of each vertex.
    pub vertex_half_edges: Vec<(usize, usize)>,
    pub arrow_half_edges: Vec<usize>,
}

pub(crate) fn brauer_quiver_parts(
    names: &[String],
    sigma: &[usize],
    tau: impl Fn(usize) -> Option<usize>,
    multiplicity: impl Fn(usize) -> u64,
) -> BrauerQuiverParts {
    let n = names.len();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter_map(|i| tau(i).filter(|&j| names[i] < names[j]).map(|j| (i, j)))
        .collect();
    pairs.sort_by(|a, b| names[a.0].cmp(&names[b.0]));
    let mut vertex_of = vec![None; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        vertex_of[i] = Some(k);
        vertex_of[j] = Some(k);
    }
    let vertices =
        unique_edge_labels(pairs.iter().map(|&(i, j)| (names[i].as_str(), names[j].as_str())));
    let mut arrow_of = vec![None; n];
    let mut arrows = Vec::new();
    let mut arrow_half_edges = Vec::new();
    for e in 0..n {
        if let (Some(s), Some(t)) = (vertex_of[e], vertex_of[sigma[e]]) {
            arrow_of[e] = Some(arrows.len());
            arrows.push(Arrow { name: arrow_name(&names[e]), source: s, target: t });
            arrow_half_edges.push(e);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| names[a].cmp(&names[b]));
    let mut relations = Vec::new();
    for &e in &order {
        let Some(first) = arrow_of[e] else { continue };
        if let Some(second) = tau(sigma[e]).and_then(|f| arrow_of[f]) {
            relations.push(Relation::monomial(Path(vec![first, second])));
        }
    }
    let orbit_len: HashMap<usize, usize> = sigma_orbits(names, sigma)
        .into_iter()
        .flat_map(|o| {
            let len = o.len();
            o.into_iter().map(move |i| (i, len))
        })
        .collect();
    let power = |e: usize| -> Option<Path> {
        let reps = multiplicity(e) as usize * orbit_len[&e];
        let mut path = Vec::with_capacity(reps);
        let mut f = e;
        for _ in 0..reps {
            path.push(arrow_of[f]?);
            f = sigma[f];
        }
        Some(Path(path))
    };
    for &(e, f) in &pairs {
        if let (Some(pe), Some(pf)) = (power(e), power(f)) {
            relations.push(Relation { terms: vec![(1, pe), (-1, pf)] });
        }
    }
    BrauerQuiverParts {
        quiver: BoundQuiver { vertices, arrows, relations },
        vertex_half_edges: pairs,
        arrow_half_edges,
    }
}

impl BrauerPermutation {
    /// The bound Brauer quiver `(Q(B), I(B))`. Vertex `k` is the `k`-th
    /// τ-orbit of [`BrauerPermutation::tau_orbits`]; arrow `i` is `α_e` for
    /// half edge `i`.
    pub fn bound_quiver(&self) -> BoundQuiver {
        let parts = brauer_quiver_parts(
            self.names(),
            self.sigma_slice(),
            |i| Some(self.tau_slice()[i]),
            |i| self.multiplicity(HalfEdge(i)),
        );
        debug_assert!(parts.quiver.check().is_ok());
        parts.quiver
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fix1() -> BrauerPermutation {
        BrauerPermutation::from_cycles(
            &[&["1+", "1-", "2+"], &["2-"]],
            &[("1+", "1-"), ("2+", "2-")],
            &[("2-", 2)],
        )
        .unwrap()
    }

    #[test]
    fn fix1_quiver_matches_hand_listing() {
        let q = fix1().bound_quiver();
        assert_eq!(q.vertices, ["1", "2"]);
        assert_eq!(q.arrows.len(), 4);
        let shown: Vec<String> = q.relations.iter().map(|r| q.display_relation(r)).collect();
        assert_eq!(
            shown,
            [
                "(alpha_1+)^2",
                "alpha_2- alpha_1-",
                "alpha_1- alpha_2+",
                "alpha_2+ alpha_2-",
                "alpha_2+ alpha_1- alpha_1+ - alpha_1+ alpha_2+ alpha_1-",
                "alpha_1- alpha_1+ alpha_2+ - (alpha_2-)^2",
            ]
        );
    }

    /// One edge `{e, f}`, `σ = id`, `m ≡ 1`. By hand: vertex `e|f`, arrows
    /// `α_e, α_f` both loops at it; zero relations `α_{τσe}α_e = α_f α_e`
    /// and `α_e α_f`; commutativity `α_e - α_f`.
    #[test]
    fn single_edge_quiver_by_hand() {
        let b = BrauerPermutation::from_cycles(&[&["e"], &["f"]], &[("e", "f")], &[]).unwrap();
        let q = b.bound_quiver();
        assert_eq!(q.vertices, ["e|f"]);
        assert_eq!(
            q.arrows,
            [
                Arrow { name: "alpha_e".into(), source: 0, target: 0 },
                Arrow { name: "alpha_f".into(), source: 0, target: 0 },
            ]
        );
        assert_eq!(
            q.relations,
            [
                Relation::monomial(Path(vec![0, 1])),
                Relation::monomial(Path(vec![1, 0])),
                Relation { terms: vec![(1, Path(vec![0])), (-1, Path(vec![1]))] },
            ]
        );
    }

    #[test]
    fn deterministic() {
        assert_eq!(fix1().bound_quiver(), fix1().bound_quiver());
    }

    #[test]
    fn rejects_bad_quivers() {
        let arrows = vec![Arrow { name: "a".into(), source: 0, target: 1 }];
        assert!(BoundQuiver::new(vec!["x".into()], arrows.clone(), vec![]).is_err());
        let two = vec!["x".into(), "y".into()];
        let rel = Relation::monomial(Path(vec![0, 0]));
        assert!(BoundQuiver::new(two.clone(), arrows.clone(), vec![rel]).is_err());
        let mut arrows2 = arrows.clone();
        arrows2.push(Arrow { name: "b".into(), source: 0, target: 0 });
        let rel = Relation { terms: vec![(1, Path(vec![0])), (-1, Path(vec![1]))] };
        assert!(BoundQuiver::new(two, arrows2, vec![rel]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let q = fix1().bound_quiver();
        let back: BoundQuiver = serde_json::from_str(&serde_json::to_string(&q).unwrap()).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn normalized_relations_ignore_sign_and_order() {
        let r = Relation { terms: vec![(1, Path(vec![2])), (-1, Path(vec![1]))] };
        let s = Relation { terms: vec![(1, Path(vec![1])), (-1, Path(vec![2]))] };
        assert_eq!(r.normalized(), s.normalized());
    }
}
