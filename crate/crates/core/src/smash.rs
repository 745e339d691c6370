//! The covering Brauer permutation `B_W` on `E × G`.
//!
//! `σ_W(e_g) = σ(e)_{W(e)g}`, `τ_W(e_g) = τ(e)_g` and
//! `m_W(⟨σ_W⟩e_g) = m(⟨σ⟩e)·|⟨σ⟩e| / |⟨σ_W⟩e_g|`.
//!
//! For infinite groups only a window is built: start from `E × {1}`, close
//! under `σ_W`, then repeatedly add missing `τ_W`-partners and close again.
//! σ_W-orbits are always complete; half edges whose partner was never added
//! form the frontier.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::brauer::{sigma_orbits, BrauerPermutation, HalfEdge};
use crate::error::{Error, Result};
use crate::graph::BrauerGraph;
use crate::groups::{GroupElement, GroupSpec};
use crate::quiver::{brauer_quiver_parts, BoundQuiver};
use crate::weights::{is_admissible, GWeight};

/// `e_g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoveredHalfEdge {
    pub base: HalfEdge,
    pub g: GroupElement,
}

/// A finite, σ_W-closed piece of `B_W`. When the frontier is empty this is
/// all of `B_W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowedBrauerPermutation {
    pub group: GroupSpec,
    pub covered: Vec<CoveredHalfEdge>,
    /// `e@g` with `g` written as a canonical word.
    pub names: Vec<String>,
    pub sigma: Vec<usize>,
    pub tau: Vec<Option<usize>>,
    /// `m_W` per half edge.
    pub multiplicity: Vec<u64>,
    /// Half edges without a τ_W-partner, sorted by name.
    pub frontier: Vec<usize>,
}

/// Name of the covered half edge `e_g`.
pub fn covered_name(base: &str, word: &str) -> String {
    format!("{base}@{word}")
}

impl WindowedBrauerPermutation {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.frontier.is_empty()
    }

    pub fn index_of(&self, base: HalfEdge, g: &GroupElement) -> Option<usize> {
        self.covered.iter().position(|c| c.base == base && c.g == *g)
    }

    /// Elements `g` with every `e_g` present, in order of first appearance.
    pub fn full_layers(&self, b: &BrauerPermutation) -> Vec<GroupElement> {
        let mut layers: Vec<GroupElement> = Vec::new();
        for c in &self.covered {
            if !layers.contains(&c.g) {
                layers.push(c.g.clone());
            }
        }
        layers.retain(|g| b.half_edges().all(|e| self.index_of(e, g).is_some()));
        layers
    }

    /// The Brauer permutation itself; fails while the frontier is non-empty.
    pub fn to_brauer(&self) -> Result<BrauerPermutation> {
        if let Some(&i) = self.frontier.first() {
            return Err(Error::InvalidBrauer(vec![crate::brauer::Violation::MissingImage {
                map: "tau",
                name: self.names[i].clone(),
            }]));
        }
        BrauerPermutation::from_indices(
            self.names.clone(),
            self.sigma.clone(),
            self.tau.iter().map(|t| t.expect("complete window")).collect(),
            self.multiplicity.clone(),
        )
    }

    /// `Γ(B_W)` restricted to the window; frontier half edges dangle.
    pub fn graph(&self) -> BrauerGraph {
        BrauerGraph::build(&self.names, &self.sigma, |i| self.tau[i], |i| self.multiplicity[i])
    }

    /// Bound Brauer quiver of the window: one vertex per complete edge,
    /// arrows and relations wherever all their vertices are present.
    pub fn bound_quiver(&self) -> BoundQuiver {
        brauer_quiver_parts(&self.names, &self.sigma, |i| self.tau[i], |i| self.multiplicity[i]).quiver
    }

    pub fn to_data(&self) -> WindowedData {
        let name = |i: usize| self.names[i].clone();
        WindowedData {
            half_edges: self.names.clone(),
            sigma: (0..self.len()).map(|i| (name(i), name(self.sigma[i]))).collect(),
            tau: (0..self.len()).filter_map(|i| self.tau[i].map(|j| (name(i), name(j)))).collect(),
            multiplicity: sigma_orbits(&self.names, &self.sigma)
                .into_iter()
                .map(|o| (name(o[0]), self.multiplicity[o[0]]))
                .collect(),
            frontier: self.frontier.iter().map(|&i| name(i)).collect(),
        }
    }
}

/// Serialized window: the Brauer permutation schema plus the frontier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowedData {
    pub half_edges: Vec<String>,
    pub sigma: BTreeMap<String, String>,
    pub tau: BTreeMap<String, String>,
    pub multiplicity: BTreeMap<String, u64>,
    pub frontier: Vec<String>,
}

impl Serialize for WindowedBrauerPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_data().serialize(s)
    }
}

struct Builder<'a> {
    b: &'a BrauerPermutation,
    group: &'a GroupSpec,
    w: Vec<GroupElement>,
    covered: Vec<CoveredHalfEdge>,
    index: HashMap<CoveredHalfEdge, usize>,
    sigma: Vec<usize>,
}

impl<'a> Builder<'a> {
    fn add(&mut self, c: CoveredHalfEdge) -> (usize, bool) {
        if let Some(&i) = self.index.get(&c) {
            return (i, false);
        }
        let i = self.covered.len();
        self.index.insert(c.clone(), i);
        self.covered.push(c);
        self.sigma.push(usize::MAX);
        (i, true)
    }

    fn sigma_w(&self, c: &CoveredHalfEdge) -> CoveredHalfEdge {
        CoveredHalfEdge {
            base: self.b.sigma(c.base),
            g: self.group.mul_unchecked(&self.w[c.base.0], &c.g),
        }
    }

    /// Adds `c` and its whole σ_W-orbit. The orbit has at most `m·n`
    /// elements for an admissible weight.
    fn add_closed(&mut self, c: CoveredHalfEdge) -> Result<()> {
        let (start, new) = self.add(c.clone());
        if !new {
            return Ok(());
        }
        let budget = self.b.multiplicity(c.base) as usize * self.b.orbit_len(c.base);
        let (mut at, mut cur) = (start, c);
        for _ in 0..budget {
            let next = self.sigma_w(&cur);
            let (j, _) = self.add(next.clone());
            self.sigma[at] = j;
            if j == start {
                return Ok(());
            }
            at = j;
            cur = next;
        }
        Err(Error::NotAdmissible { witness: self.b.name(self.covered[start].base).to_owned() })
    }

    fn tau_w(&self, i: usize) -> Option<usize> {
        let c = &self.covered[i];
        self.index.get(&CoveredHalfEdge { base: self.b.tau(c.base), g: c.g.clone() }).copied()
    }

    fn finish(self) -> Result<WindowedBrauerPermutation> {
        let mut words: HashMap<GroupElement, String> = HashMap::new();
        let mut names = Vec::with_capacity(self.covered.len());
        for c in &self.covered {
            if !words.contains_key(&c.g) {
                words.insert(c.g.clone(), self.group.format_word(&c.g)?);
            }
            names.push(covered_name(self.b.name(c.base), &words[&c.g]));
        }
        let tau: Vec<Option<usize>> = (0..self.covered.len()).map(|i| self.tau_w(i)).collect();
        let mut multiplicity = vec![0; names.len()];
        for orbit in sigma_orbits(&names, &self.sigma) {
            let e = self.covered[orbit[0]].base;
            let total = self.b.multiplicity(e) as usize * self.b.orbit_len(e);
            if total % orbit.len() != 0 {
                return Err(Error::NotAdmissible { witness: self.b.name(e).to_owned() });
            }
            for &i in &orbit {
                multiplicity[i] = (total / orbit.len()) as u64;
            }
        }
        let mut frontier: Vec<usize> = (0..names.len()).filter(|&i| tau[i].is_none()).collect();
        frontier.sort_by(|&a, &b| names[a].cmp(&names[b]));
        Ok(WindowedBrauerPermutation {
            group: self.group.clone(),
            covered: self.covered,
            names,
            sigma: self.sigma,
            tau,
            multiplicity,
            frontier,
        })
    }
}

/// `B_W`. For a finite group `depth` is ignored and the result is complete;
/// an infinite group needs `depth`, the number of τ_W-expansion rounds.
pub fn smash_brauer(
    b: &BrauerPermutation,
    w: &GWeight,
    depth: Option<usize>,
) -> Result<WindowedBrauerPermutation> {
    if let Some(witness) = is_admissible(b, w)?.witness {
        return Err(Error::NotAdmissible { witness });
    }
    let group = w.group();
    let mut builder = Builder {
        b,
        group,
        w: w.on_brauer(b)?,
        covered: Vec::new(),
        index: HashMap::new(),
        sigma: Vec::new(),
    };
    if group.is_finite() {
        for g in group.enumerate()? {
            for e in b.half_edges() {
                builder.add_closed(CoveredHalfEdge { base: e, g: g.clone() })?;
            }
        }
    } else {
        let depth = depth.ok_or(Error::WindowRequired)?;
        for e in b.half_edges() {
            builder.add_closed(CoveredHalfEdge { base: e, g: group.identity() })?;
        }
        for _ in 0..depth {
            let missing: Vec<CoveredHalfEdge> = (0..builder.covered.len())
                .filter(|&i| builder.tau_w(i).is_none())
                .map(|i| {
                    let c = &builder.covered[i];
                    CoveredHalfEdge { base: b.tau(c.base), g: c.g.clone() }
                })
                .collect();
            if missing.is_empty() {
                break;
            }
            for c in missing {
                builder.add_closed(c)?;
            }
        }
    }
    builder.finish()
}

/// The complete `B_W` for a finite group.
pub fn smash_brauer_finite(b: &BrauerPermutation, w: &GWeight) -> Result<BrauerPermutation> {
    if !w.group().is_finite() {
        return Err(Error::InfiniteGroup);
    }
    smash_brauer(b, w, None)?.to_brauer()
}

/// Admissibility read off the covering: every `⟨σ_W⟩e_1` closes up within
/// `m(⟨σ⟩e)·|⟨σ⟩e|` steps and its length divides that number.
pub fn admissibility_via_orbits(b: &BrauerPermutation, w: &GWeight) -> Result<bool> {
    let group = w.group();
    let values = w.on_brauer(b)?;
    for e in b.half_edges() {
        let budget = b.multiplicity(e) as usize * b.orbit_len(e);
        let start = (e, group.identity());
        let mut cur = start.clone();
        let mut len = None;
        for step in 1..=budget {
            cur = (b.sigma(cur.0), group.mul_unchecked(&values[cur.0 .0], &cur.1));
            if cur == start {
                len = Some(step);
                break;
            }
        }
        match len {
            Some(l) if budget % l == 0 => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}
