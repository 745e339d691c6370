//! Brauer permutations `(E, σ, τ, m)`.
//!
//! Half edges are stored in input order and addressed by [`HalfEdge`]
//! indices. Wherever a representative of an orbit is needed, the member with
//! the lexicographically least name is used, so derived structures do not
//! depend on input order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a half edge inside one [`BrauerPermutation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfEdge(pub usize);

impl HalfEdge {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A violated Brauer-permutation invariant, naming the offending half edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoHalfEdges,
    OddHalfEdgeCount(usize),
    EmptyName,
    DuplicateHalfEdge(String),
    UnknownHalfEdge { map: &'static str, name: String },
    MissingImage { map: &'static str, name: String },
    NotBijective { map: &'static str, name: String },
    TauNotInvolution(String),
    TauNotFree(String),
    MissingMultiplicity(String),
    DuplicateMultiplicity(String, String),
    ZeroMultiplicity(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoHalfEdges => f.write_str("no half edges"),
            Violation::OddHalfEdgeCount(n) => write!(f, "odd number of half edges ({n})"),
            Violation::EmptyName => f.write_str("empty half-edge name"),
            Violation::DuplicateHalfEdge(n) => write!(f, "duplicate half edge `{n}`"),
            Violation::UnknownHalfEdge { map, name } => {
                write!(f, "{map} mentions unknown half edge `{name}`")
            }
            Violation::MissingImage { map, name } => write!(f, "{map} has no image for `{name}`"),
            Violation::NotBijective { map, name } => {
                write!(f, "{map} is not a bijection: `{name}` has several preimages")
            }
            Violation::TauNotInvolution(n) => write!(f, "tau not an involution at `{n}`"),
            Violation::TauNotFree(n) => write!(f, "tau not free: fixes `{n}`"),
            Violation::MissingMultiplicity(n) => {
                write!(f, "multiplicity missing for the sigma-orbit of `{n}`")
            }
            Violation::DuplicateMultiplicity(a, b) => {
                write!(f, "multiplicity given twice for one sigma-orbit (`{a}`, `{b}`)")
            }
            Violation::ZeroMultiplicity(n) => write!(f, "multiplicity of `{n}` is not positive"),
        }
    }
}

/// Serialized form of a Brauer permutation.
///
/// `multiplicity` carries exactly one entry per σ-orbit, keyed by any member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BrauerData {
    pub half_edges: Vec<String>,
    pub sigma: BTreeMap<String, String>,
    pub tau: BTreeMap<String, String>,
    pub multiplicity: BTreeMap<String, u64>,
}

/// A validated Brauer permutation.
#[derive(Debug, Clone)]
pub struct BrauerPermutation {
    names: Vec<String>,
    index: HashMap<String, usize>,
    sigma: Vec<usize>,
    tau: Vec<usize>,
    orbit_of: Vec<usize>,
    /// σ-orbits, each starting at its least member; sorted by that member.
    orbits: Vec<Vec<usize>>,
    /// Per orbit.
    multiplicity: Vec<u64>,
}

impl PartialEq for BrauerPermutation {
    fn eq(&self, other: &Self) -> bool {
        self.to_data() == other.to_data()
    }
}

impl Eq for BrauerPermutation {}

/// Checks every Brauer-permutation invariant of `data`.
pub fn validate(data: &BrauerData) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = data.half_edges.len();
    if n == 0 {
        out.push(Violation::NoHalfEdges);
        return out;
    }
    let mut index = HashMap::new();
    for (i, name) in data.half_edges.iter().enumerate() {
        if name.is_empty() {
            out.push(Violation::EmptyName);
        } else if index.insert(name.as_str(), i).is_some() {
            out.push(Violation::DuplicateHalfEdge(name.clone()));
        }
    }
    if n % 2 == 1 {
        out.push(Violation::OddHalfEdgeCount(n));
    }
    let sigma = resolve_map("sigma", &data.sigma, &data.half_edges, &index, &mut out);
    let tau = resolve_map("tau", &data.tau, &data.half_edges, &index, &mut out);
    if let Some(tau) = &tau {
        for (i, &j) in tau.iter().enumerate() {
            if i == j {
                out.push(Violation::TauNotFree(data.half_edges[i].clone()));
            } else if tau[j] != i {
                out.push(Violation::TauNotInvolution(data.half_edges[i].clone()));
            }
        }
    }
    for (name, &m) in &data.multiplicity {
        if !index.contains_key(name.as_str()) {
            out.push(Violation::UnknownHalfEdge { map: "multiplicity", name: name.clone() });
        } else if m == 0 {
            out.push(Violation::ZeroMultiplicity(name.clone()));
        }
    }
    if let Some(sigma) = &sigma {
        for orbit in sigma_orbits(&data.half_edges, sigma) {
            let keyed: Vec<&String> = orbit
                .iter()
                .map(|&i| &data.half_edges[i])
                .filter(|name| data.multiplicity.contains_key(*name))
                .collect();
            match keyed.as_slice() {
                [] => out.push(Violation::MissingMultiplicity(data.half_edges[orbit[0]].clone())),
                [_] => {}
                [a, b, ..] => out.push(Violation::DuplicateMultiplicity((*a).clone(), (*b).clone())),
            }
        }
    }
    out
}

fn resolve_map(
    map: &'static str,
    data: &BTreeMap<String, String>,
    names: &[String],
    index: &HashMap<&str, usize>,
    out: &mut Vec<Violation>,
) -> Option<Vec<usize>> {
    let before = out.len();
    let mut image = vec![usize::MAX; names.len()];
    for (src, dst) in data {
        match (index.get(src.as_str()), index.get(dst.as_str())) {
            (Some(&i), Some(&j)) => image[i] = j,
            (None, _) => out.push(Violation::UnknownHalfEdge { map, name: src.clone() }),
            (_, None) => out.push(Violation::UnknownHalfEdge { map, name: dst.clone() }),
        }
    }
    let mut hit = vec![false; names.len()];
    for (i, &j) in image.iter().enumerate() {
        if j == usize::MAX {
            out.push(Violation::MissingImage { map, name: names[i].clone() });
        } else if std::mem::replace(&mut hit[j], true) {
            out.push(Violation::NotBijective { map, name: names[j].clone() });
        }
    }
    (out.len() == before).then_some(image)
}

/// σ-orbits as index cycles, each starting at its least-named member, sorted
/// by that member's name.
pub(crate) fn sigma_orbits(names: &[String], sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut orbits = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = sigma[i];
        }
        let lead = (0..cycle.len()).min_by_key(|&k| &names[cycle[k]]).unwrap();
        cycle.rotate_left(lead);
        orbits.push(cycle);
    }
    orbits.sort_by(|a, b| names[a[0]].cmp(&names[b[0]]));
    orbits
}

impl BrauerPermutation {
    pub fn from_data(data: &BrauerData) -> Result<Self> {
        let violations = validate(data);
        if !violations.is_empty() {
            return Err(Error::InvalidBrauer(violations));
        }
        let index: HashMap<String, usize> =
            data.half_edges.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let image = |map: &BTreeMap<String, String>| -> Vec<usize> {
            data.half_edges.iter().map(|n| index[&map[n]]).collect()
        };
        let sigma = image(&data.sigma);
        let tau = image(&data.tau);
        let mut mult = vec![0; data.half_edges.len()];
        let orbits = sigma_orbits(&data.half_edges, &sigma);
        for orbit in &orbits {
            let m = orbit
                .iter()
                .find_map(|&i| data.multiplicity.get(&data.half_edges[i]))
                .copied()
                .unwrap_or(1);
            for &i in orbit {
                mult[i] = m;
            }
        }
        Self::from_indices(data.half_edges.clone(), sigma, tau, mult)
    }

    /// Builds from index maps; `multiplicity` is given per half edge and
    /// must be constant on σ-orbits.
    pub fn from_indices(
        names: Vec<String>,
        sigma: Vec<usize>,
        tau: Vec<usize>,
        multiplicity: Vec<u64>,
    ) -> Result<Self> {
        let n = names.len();
        let mut violations = Vec::new();
        if sigma.len() != n || tau.len() != n || multiplicity.len() != n {
            return Err(Error::Malformed("index maps have the wrong length".into()));
        }
        if n == 0 {
            violations.push(Violation::NoHalfEdges);
        }
        if n % 2 == 1 {
            violations.push(Violation::OddHalfEdgeCount(n));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                violations.push(Violation::EmptyName);
            } else if index.insert(name.clone(), i).is_some() {
                violations.push(Violation::DuplicateHalfEdge(name.clone()));
            }
        }
        for (map, perm) in [("sigma", &sigma), ("tau", &tau)] {
            let mut hit = vec![false; n];
            for (i, &j) in perm.iter().enumerate() {
                if j >= n {
                    violations.push(Violation::MissingImage { map, name: names[i].clone() });
                } else if std::mem::replace(&mut hit[j], true) {
                    violations.push(Violation::NotBijective { map, name: names[j].clone() });
                }
            }
        }
        if violations.is_empty() {
            for (i, &j) in tau.iter().enumerate() {
                if i == j {
                    violations.push(Violation::TauNotFree(names[i].clone()));
                } else if tau[j] != i {
                    violations.push(Violation::TauNotInvolution(names[i].clone()));
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::InvalidBrauer(violations));
        }
        let orbits = sigma_orbits(&names, &sigma);
        let mut orbit_of = vec![0; n];
        let mut orbit_mult = Vec::with_capacity(orbits.len());
        for (k, orbit) in orbits.iter().enumerate() {
            let m = multiplicity[orbit[0]];
            for &i in orbit {
                orbit_of[i] = k;
                if multiplicity[i] != m {
                    violations.push(Violation::DuplicateMultiplicity(
                        names[orbit[0]].clone(),
                        names[i].clone(),
                    ));
                }
            }
            if m == 0 {
                violations.push(Violation::ZeroMultiplicity(names[orbit[0]].clone()));
            }
            orbit_mult.push(m);
        }
        if !violations.is_empty() {
            return Err(Error::InvalidBrauer(violations));
        }
        Ok(BrauerPermutation {
            names,
            index,
            sigma,
            tau,
            orbit_of,
            orbits,
            multiplicity: orbit_mult,
        })
    }

    /// Builds from cycle notation: `sigma` lists every σ-cycle (fixed points
    /// as singletons), `tau` the edge pairs, `multiplicity` any non-default
    /// values (others are 1).
    pub fn from_cycles(
        sigma: &[&[&str]],
        tau: &[(&str, &str)],
        multiplicity: &[(&str, u64)],
    ) -> Result<Self> {
        let mut data = BrauerData {
            half_edges: Vec::new(),
            sigma: BTreeMap::new(),
            tau: BTreeMap::new(),
            multiplicity: BTreeMap::new(),
        };
        for cycle in sigma {
            for (k, e) in cycle.iter().enumerate() {
                data.half_edges.push((*e).to_owned());
                data.sigma.insert((*e).into(), cycle[(k + 1) % cycle.len()].into());
            }
        }
        for (a, b) in tau {
            data.tau.insert((*a).into(), (*b).into());
            data.tau.insert((*b).into(), (*a).into());
        }
        for cycle in sigma {
            let lead = cycle.iter().min().copied().unwrap_or_default();
            let m = multiplicity
                .iter()
                .find(|(e, _)| cycle.contains(e))
                .map(|&(_, m)| m)
                .unwrap_or(1);
            data.multiplicity.insert(lead.into(), m);
        }
        Self::from_data(&data)
    }

    /// Serialized form, multiplicity keyed by each orbit's least member.
    pub fn to_data(&self) -> BrauerData {
        let name = |i: usize| self.names[i].clone();
        BrauerData {
            half_edges: self.names.clone(),
            sigma: (0..self.len()).map(|i| (name(i), name(self.sigma[i]))).collect(),
            tau: (0..self.len()).map(|i| (name(i), name(self.tau[i]))).collect(),
            multiplicity: self
                .orbits
                .iter()
                .zip(&self.multiplicity)
                .map(|(o, &m)| (name(o[0]), m))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn half_edges(&self) -> impl ExactSizeIterator<Item = HalfEdge> {
        (0..self.len()).map(HalfEdge)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: HalfEdge) -> &str {
        &self.names[e.0]
    }

    pub fn half_edge(&self, name: &str) -> Result<HalfEdge> {
        self.index.get(name).map(|&i| HalfEdge(i)).ok_or_else(|| Error::UnknownHalfEdge(name.into()))
    }

    pub fn sigma(&self, e: HalfEdge) -> HalfEdge {
        HalfEdge(self.sigma[e.0])
    }

    pub fn tau(&self, e: HalfEdge) -> HalfEdge {
        HalfEdge(self.tau[e.0])
    }

    pub(crate) fn sigma_slice(&self) -> &[usize] {
        &self.sigma
    }

    pub(crate) fn tau_slice(&self) -> &[usize] {
        &self.tau
    }

    /// `[e, σe, σ²e, …]`, of length `n(e)`.
    pub fn sigma_orbit(&self, e: HalfEdge) -> Vec<HalfEdge> {
        let mut out = vec![e];
        let mut f = self.sigma(e);
        while f != e {
            out.push(f);
            f = self.sigma(f);
        }
        out
    }

    /// `n(e) = |⟨σ⟩e|`.
    pub fn orbit_len(&self, e: HalfEdge) -> usize {
        self.orbits[self.orbit_of[e.0]].len()
    }

    /// Index of the σ-orbit (vertex) containing `e`.
    pub fn orbit_id(&self, e: HalfEdge) -> usize {
        self.orbit_of[e.0]
    }

    /// σ-orbits, each as a cycle starting at its least member.
    pub fn orbits(&self) -> impl ExactSizeIterator<Item = Vec<HalfEdge>> + '_ {
        self.orbits.iter().map(|o| o.iter().map(|&i| HalfEdge(i)).collect())
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Least member of the σ-orbit of `e`.
    pub fn orbit_representative(&self, e: HalfEdge) -> HalfEdge {
        HalfEdge(self.orbits[self.orbit_of[e.0]][0])
    }

    /// `m(⟨σ⟩e)`.
    pub fn multiplicity(&self, e: HalfEdge) -> u64 {
        self.multiplicity[self.orbit_of[e.0]]
    }

    pub fn is_multiplicity_trivial(&self) -> bool {
        self.multiplicity.iter().all(|&m| m == 1)
    }

    /// τ-orbits `{e, τe}` as `[lesser, greater]` by name, sorted.
    pub fn tau_orbits(&self) -> Vec<[HalfEdge; 2]> {
        let mut out: Vec<[HalfEdge; 2]> = self
            .half_edges()
            .filter_map(|e| {
                let f = self.tau(e);
                (self.name(e) < self.name(f)).then_some([e, f])
            })
            .collect();
        out.sort_by(|a, b| self.name(a[0]).cmp(self.name(b[0])));
        out
    }

    /// Whether `⟨τ⟩e` is a loop of the Brauer graph.
    pub fn is_loop(&self, e: HalfEdge) -> bool {
        self.orbit_of[e.0] == self.orbit_of[self.tau[e.0]]
    }

    /// Same permutation with half edges renamed through `rename`.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<Self> {
        let names = self.names.iter().map(|n| rename(n)).collect();
        let mult = (0..self.len()).map(|i| self.multiplicity(HalfEdge(i))).collect();
        Self::from_indices(names, self.sigma.clone(), self.tau.clone(), mult)
    }
}

/// Display name of the edge `{a, b}`: the common stem when the names are
/// `s+`/`s-` (optionally followed by the same `@…` suffix), else `a|b`.
pub fn edge_label(a: &str, b: &str) -> String {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let split = |s: &str| match s.find('@') {
        Some(k) => (s[..k].to_owned(), s[k..].to_owned()),
        None => (s.to_owned(), String::new()),
    };
    let (base_a, suffix_a) = split(a);
    let (base_b, suffix_b) = split(b);
    if suffix_a == suffix_b {
        if let (Some(stem_a), Some(stem_b)) = (base_a.strip_suffix('+'), base_b.strip_suffix('-')) {
            if stem_a == stem_b && !stem_a.is_empty() {
                return format!("{stem_a}{suffix_a}");
            }
        }
    }
    format!("{a}|{b}")
}

/// Labels for a list of edges, made unique by a `#k` suffix if needed.
pub(crate) fn unique_edge_labels<'a>(pairs: impl Iterator<Item = (&'a str, &'a str)>) -> Vec<String> {
    let mut labels: Vec<String> = pairs.map(|(a, b)| edge_label(a, b)).collect();
    let mut counts: HashMap<String, usize> = HashMap::new();
    for l in &labels {
        *counts.entry(l.clone()).or_default() += 1;
    }
    let mut used: HashMap<String, usize> = HashMap::new();
    for l in labels.iter_mut() {
        if counts[l] > 1 {
            let k = used.entry(l.clone()).or_default();
            *k += 1;
            *l = format!("{l}#{k}");
        }
    }
    labels
}

impl Serialize for BrauerPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_data().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let data = BrauerData::deserialize(d)?;
        BrauerPermutation::from_data(&data).map_err(|e| match e {
            Error::InvalidBrauer(v) => serde::de::Error::custom(
                v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "),
            ),
            other => serde::de::Error::custom(other),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fix1() -> BrauerPermutation {
        BrauerPermutation::from_cycles(
            &[&["1+", "1-", "2+"], &["2-"]],
            &[("1+", "1-"), ("2+", "2-")],
            &[("2-", 2)],
        )
        .unwrap()
    }

    #[test]
    fn fix1_is_valid() {
        let b = fix1();
        assert!(validate(&b.to_data()).is_empty());
        assert_eq!(b.orbit_count(), 2);
        assert_eq!(b.multiplicity(b.half_edge("1+").unwrap()), 1);
        assert_eq!(b.multiplicity(b.half_edge("2-").unwrap()), 2);
    }

    #[test]
    fn sigma_orbits_follow_application_order() {
        let b = fix1();
        let orbit: Vec<_> =
            b.sigma_orbit(b.half_edge("1+").unwrap()).into_iter().map(|e| b.name(e)).collect();
        assert_eq!(orbit, ["1+", "1-", "2+"]);
        assert_eq!(b.sigma_orbit(b.half_edge("2-").unwrap()).len(), 1);
        let id = BrauerPermutation::from_cycles(&[&["e"], &["f"]], &[("e", "f")], &[]).unwrap();
        assert_eq!(id.sigma_orbit(HalfEdge(0)), vec![HalfEdge(0)]);
    }

    #[test]
    fn tau_fixed_point_is_reported() {
        let mut data = fix1().to_data();
        data.tau.insert("2+".into(), "2+".into());
        data.tau.insert("2-".into(), "2-".into());
        let v = validate(&data);
        assert!(v.contains(&Violation::TauNotFree("2+".into())), "{v:?}");
        assert!(v.iter().any(|v| v.to_string().contains("tau not free")));
    }

    #[test]
    fn missing_multiplicity_is_reported() {
        let mut data = fix1().to_data();
        data.multiplicity.remove("2-");
        assert_eq!(validate(&data), vec![Violation::MissingMultiplicity("2-".into())]);
    }

    #[test]
    fn other_violations() {
        let mut data = fix1().to_data();
        data.multiplicity.insert("1-".into(), 1);
        assert!(matches!(validate(&data)[..], [Violation::DuplicateMultiplicity(..)]));

        let mut data = fix1().to_data();
        data.sigma.insert("1+".into(), "2-".into());
        assert!(validate(&data).iter().any(|v| matches!(v, Violation::NotBijective { .. })));

        let mut data = fix1().to_data();
        data.tau.insert("1+".into(), "2+".into());
        assert!(validate(&data).iter().any(|v| matches!(v, Violation::NotBijective { .. })));

        let mut data = fix1().to_data();
        data.sigma.remove("2-");
        assert!(validate(&data).contains(&Violation::MissingImage { map: "sigma", name: "2-".into() }));

        let mut data = fix1().to_data();
        data.tau.insert("zz".into(), "1+".into());
        assert!(validate(&data)
            .contains(&Violation::UnknownHalfEdge { map: "tau", name: "zz".into() }));

        let data = BrauerData {
            half_edges: vec![],
            sigma: BTreeMap::new(),
            tau: BTreeMap::new(),
            multiplicity: BTreeMap::new(),
        };
        assert_eq!(validate(&data), vec![Violation::NoHalfEdges]);
    }

    #[test]
    fn tau_orbits_and_loops() {
        let b = fix1();
        let pairs: Vec<_> =
            b.tau_orbits().into_iter().map(|[e, f]| (b.name(e), b.name(f))).collect();
        assert_eq!(pairs, [("1+", "1-"), ("2+", "2-")]);
        assert!(b.is_loop(b.half_edge("1+").unwrap()));
        assert!(!b.is_loop(b.half_edge("2+").unwrap()));
    }

    #[test]
    fn edge_labels() {
        assert_eq!(edge_label("1-", "1+"), "1");
        assert_eq!(edge_label("1+@a^2", "1-@a^2"), "1@a^2");
        assert_eq!(edge_label("1+@a", "1-@b"), "1+@a|1-@b");
        assert_eq!(edge_label("e", "f"), "e|f");
    }

    #[test]
    fn json_round_trip() {
        let b = fix1();
        let text = serde_json::to_string(&b).unwrap();
        let back: BrauerPermutation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<BrauerPermutation>(
            r#"{"half_edges":["e"],"sigma":{"e":"e"},"tau":{"e":"e"},"multiplicity":{"e":1}}"#
        )
        .is_err());
    }
}
