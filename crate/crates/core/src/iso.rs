//! Isomorphism up to relabelling: ribbon isomorphism of Brauer permutations
//! and plain isomorphism of small multigraphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::brauer::{BrauerPermutation, HalfEdge};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Largest vertex count accepted by [`graph_iso`].
pub const GRAPH_ISO_MAX_VERTICES: usize = 14;

/// A bijection `φ: E₁ → E₂` with `φσ₁ = σ₂φ`, `φτ₁ = τ₂φ` and matching
/// multiplicities. `map[i]` is the image of half edge `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RibbonIsomorphism {
    pub map: Vec<HalfEdge>,
}

impl RibbonIsomorphism {
    pub fn apply(&self, e: HalfEdge) -> HalfEdge {
        self.map[e.0]
    }

    pub fn inverse(&self) -> RibbonIsomorphism {
        let mut map = vec![HalfEdge(0); self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            map[j.0] = HalfEdge(i);
        }
        RibbonIsomorphism { map }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RibbonIsomorphism) -> RibbonIsomorphism {
        RibbonIsomorphism { map: self.map.iter().map(|&e| other.apply(e)).collect() }
    }

    /// Whether this is an isomorphism `b1 → b2`.
    pub fn is_valid(&self, b1: &BrauerPermutation, b2: &BrauerPermutation) -> bool {
        if self.map.len() != b1.len() || b1.len() != b2.len() {
            return false;
        }
        let mut hit = vec![false; b2.len()];
        for &j in &self.map {
            if j.0 >= b2.len() || std::mem::replace(&mut hit[j.0], true) {
                return false;
            }
        }
        b1.half_edges().all(|e| {
            let f = self.apply(e);
            self.apply(b1.sigma(e)) == b2.sigma(f)
                && self.apply(b1.tau(e)) == b2.tau(f)
                && b1.multiplicity(e) == b2.multiplicity(f)
        })
    }

    /// `(name in b1, name in b2)` pairs in half-edge order of `b1`.
    pub fn named_pairs(&self, b1: &BrauerPermutation, b2: &BrauerPermutation) -> Vec<(String, String)> {
        b1.half_edges().map(|e| (b1.name(e).to_owned(), b2.name(self.apply(e)).to_owned())).collect()
    }
}

/// Connected components of `⟨σ, τ⟩`, each listed from its least index.
fn components(b: &BrauerPermutation) -> Vec<Vec<HalfEdge>> {
    let mut seen = vec![false; b.len()];
    let mut out = Vec::new();
    for start in b.half_edges() {
        if seen[start.0] {
            continue;
        }
        seen[start.0] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            for f in [b.sigma(e), b.tau(e)] {
                if !seen[f.0] {
                    seen[f.0] = true;
                    comp.push(f);
                    queue.push_back(f);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Extends `e ↦ f` along σ and τ. Returns the images of the component of
/// `e`, or `None` on a clash with `map`/`used` or a multiplicity mismatch.
fn propagate(
    b1: &BrauerPermutation,
    b2: &BrauerPermutation,
    e: HalfEdge,
    f: HalfEdge,
    map: &mut [Option<HalfEdge>],
    used: &mut [bool],
) -> Option<Vec<HalfEdge>> {
    let mut assigned = Vec::new();
    let mut queue = VecDeque::from([(e, f)]);
    let mut ok = true;
    while let Some((x, y)) = queue.pop_front() {
        match map[x.0] {
            Some(z) if z == y => continue,
            Some(_) => {
                ok = false;
                break;
            }
            None => {}
        }
        if used[y.0] || b1.multiplicity(x) != b2.multiplicity(y) {
            ok = false;
            break;
        }
        map[x.0] = Some(y);
        used[y.0] = true;
        assigned.push(x);
        queue.push_back((b1.sigma(x), b2.sigma(y)));
        queue.push_back((b1.tau(x), b2.tau(y)));
    }
    if ok {
        return Some(assigned);
    }
    for x in assigned {
        used[map[x.0].unwrap().0] = false;
        map[x.0] = None;
    }
    None
}

/// A ribbon isomorphism `b1 → b2`, if one exists. Components are matched
/// greedily, which is complete because component isomorphism is an
/// equivalence relation.
pub fn ribbon_iso(b1: &BrauerPermutation, b2: &BrauerPermutation) -> Option<RibbonIsomorphism> {
    if b1.len() != b2.len() {
        return None;
    }
    let mut map = vec![None; b1.len()];
    let mut used = vec![false; b2.len()];
    for comp in components(b1) {
        let mut found = false;
        for f in b2.half_edges() {
            if !used[f.0] && propagate(b1, b2, comp[0], f, &mut map, &mut used).is_some() {
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    let iso = RibbonIsomorphism { map: map.into_iter().map(|x| x.unwrap()).collect() };
    debug_assert!(iso.is_valid(b1, b2));
    Some(iso)
}

/// Edge counts between every pair of vertices (loops on the diagonal).
fn adjacency(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut a = vec![vec![0; n]; n];
    for &(x, y) in &g.edges {
        a[x][y] += 1;
        if x != y {
            a[y][x] += 1;
        }
    }
    a
}

/// A vertex bijection `g1 → g2` preserving labels and edge counts between
/// every pair of vertices, if one exists. Backtracking; refuses graphs with
/// more than [`GRAPH_ISO_MAX_VERTICES`] vertices.
pub fn graph_iso(g1: &Multigraph, g2: &Multigraph) -> Result<Option<Vec<usize>>> {
    let n = g1.vertex_count();
    for g in [g1, g2] {
        if g.vertex_count() > GRAPH_ISO_MAX_VERTICES {
            return Err(Error::TooLarge(g.vertex_count()));
        }
    }
    if n != g2.vertex_count() || g1.edges.len() != g2.edges.len() {
        return Ok(None);
    }
    let (a1, a2) = (adjacency(g1), adjacency(g2));
    let signature = |g: &Multigraph, a: &Vec<Vec<usize>>, v: usize| {
        let mut row = a[v].clone();
        row.sort_unstable();
        (g.labels[v], g.degree(v), a[v][v], row)
    };
    let sig1: Vec<_> = (0..n).map(|v| signature(g1, &a1, v)).collect();
    let sig2: Vec<_> = (0..n).map(|v| signature(g2, &a2, v)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(sig1[v].1), v));

    fn extend(
        k: usize,
        order: &[usize],
        a1: &[Vec<usize>],
        a2: &[Vec<usize>],
        compatible: &dyn Fn(usize, usize) -> bool,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&v) = order.get(k) else { return true };
        for w in 0..a2.len() {
            if used[w] || !compatible(v, w) {
                continue;
            }
            let consistent = order[..k].iter().all(|&u| a1[v][u] == a2[w][map[u].unwrap()]);
            if !consistent {
                continue;
            }
            map[v] = Some(w);
            used[w] = true;
            if extend(k + 1, order, a1, a2, compatible, map, used) {
                return true;
            }
            map[v] = None;
            used[w] = false;
        }
        false
    }

    let compatible = |v: usize, w: usize| sig1[v] == sig2[w];
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if extend(0, &order, &a1, &a2, &compatible, &mut map, &mut used) {
        Ok(Some(map.into_iter().map(Option::unwrap).collect()))
    } else {
        Ok(None)
    }
}
