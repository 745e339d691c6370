//! Groups and admissible weights whose coverings remove a feature of the
//! Brauer graph: multiplicities, loops, multiple edges or cycles.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::brauer::{BrauerPermutation, HalfEdge};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::groups::{CyclicFactor, GroupElement, GroupSpec, Order};
use crate::smash::smash_brauer;
use crate::weights::{is_admissible, GWeight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeletionKind {
    Multiplicity,
    Loops,
    Multiedges,
    MultiedgesTree,
    Cycles,
}

impl DeletionKind {
    pub const ALL: [DeletionKind; 5] = [
        DeletionKind::Multiplicity,
        DeletionKind::Loops,
        DeletionKind::Multiedges,
        DeletionKind::MultiedgesTree,
        DeletionKind::Cycles,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DeletionKind::Multiplicity => "multiplicity",
            DeletionKind::Loops => "loops",
            DeletionKind::Multiedges => "multiedges",
            DeletionKind::MultiedgesTree => "multiedges-tree",
            DeletionKind::Cycles => "cycles",
        }
    }

    pub fn plan(self, b: &BrauerPermutation) -> Result<DeletionPlan> {
        match self {
            DeletionKind::Multiplicity => delete_multiplicity(b),
            DeletionKind::Loops => delete_loops(b),
            DeletionKind::Multiedges => delete_multiple_edges(b),
            DeletionKind::MultiedgesTree => delete_multiple_edges_tree(b),
            DeletionKind::Cycles => delete_cycles(b),
        }
    }
}

impl fmt::Display for DeletionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DeletionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DeletionKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown deletion `{s}`")))
    }
}

/// A chosen half edge and why it was chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub half_edge: String,
    pub role: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionPlan {
    pub kind: DeletionKind,
    pub group: GroupSpec,
    pub weight: GWeight,
    pub representatives: Vec<Representative>,
    #[serde(serialize_with = "join_lines")]
    pub notes: Vec<String>,
}

fn join_lines<S: serde::Serializer>(lines: &[String], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&lines.join("\n"))
}

impl DeletionPlan {
    fn new(
        kind: DeletionKind,
        b: &BrauerPermutation,
        group: GroupSpec,
        values: BTreeMap<String, GroupElement>,
        representatives: Vec<Representative>,
        mut notes: Vec<String>,
    ) -> Result<Self> {
        let weight = GWeight::new(group.clone(), values)?;
        let check = is_admissible(b, &weight)?;
        assert!(check.holds(), "{kind} weight not admissible at {:?}", check.witness);
        notes.push(format!("G = {}", group.describe()));
        Ok(DeletionPlan { kind, group, weight, representatives, notes })
    }

    /// Checks the plan's promise on `B_W`. Infinite groups are checked on
    /// the window of the given depth (3 if unset).
    pub fn verify(&self, b: &BrauerPermutation, depth: Option<usize>) -> Result<Verification> {
        let win = smash_brauer(b, &self.weight, Some(depth.unwrap_or(3)))?;
        let graph = win.graph();
        let c = graph.classify();
        let mut problems = Vec::new();
        let mut expect = |ok: bool, what: &str| {
            if !ok {
                problems.push(what.to_owned());
            }
        };
        match self.kind {
            DeletionKind::Multiplicity => expect(c.multiplicity_trivial, "B_W has a multiplicity > 1"),
            DeletionKind::Loops => {
                expect(!c.has_loops, "Γ(B_W) has a loop");
                if b.is_multiplicity_trivial() {
                    expect(c.multiplicity_trivial, "B_W lost trivial multiplicity");
                }
            }
            DeletionKind::Multiedges | DeletionKind::MultiedgesTree => {
                expect(!c.has_loops, "Γ(B_W) has a loop");
                expect(!c.has_multiple_edges, "Γ(B_W) has multiple edges");
            }
            DeletionKind::Cycles => {
                expect(graph.to_multigraph().is_forest(), "window of Γ(B_W) has a cycle");
                let same = win
                    .covered
                    .iter()
                    .zip(&win.multiplicity)
                    .all(|(c, &m)| m == b.multiplicity(c.base));
                expect(same, "m_W differs from the base multiplicity");
            }
        }
        Ok(Verification {
            half_edges: win.len(),
            vertices: graph.vertices.len(),
            edges: graph.edges.len(),
            complete: win.is_complete(),
            problems,
        })
    }
}

/// Result of [`DeletionPlan::verify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub half_edges: usize,
    pub vertices: usize,
    pub edges: usize,
    pub complete: bool,
    pub problems: Vec<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Generator names: `a` for one factor, `a1, …, at` for several.
fn factor_names(t: usize) -> Vec<String> {
    if t == 1 {
        vec!["a".into()]
    } else {
        (1..=t).map(|i| format!("a{i}")).collect()
    }
}

fn power_text(gen: &str, k: impl fmt::Display + PartialEq<u64>) -> String {
    if k == 1 { gen.to_owned() } else { format!("{gen}^{k}") }
}

fn unit(len: usize, i: usize, k: i64) -> GroupElement {
    let mut v = vec![0; len];
    v[i] = k;
    GroupElement::Abelian(v)
}

fn cycle_text(b: &BrauerPermutation, orbit: usize) -> String {
    let members: Vec<&str> = b.orbits().nth(orbit).unwrap().iter().map(|&e| b.name(e)).collect();
    format!("({})", members.join(" "))
}

fn trivial_plan(kind: DeletionKind, b: &BrauerPermutation, why: &str) -> Result<DeletionPlan> {
    DeletionPlan::new(kind, b, GroupSpec::trivial(), BTreeMap::new(), Vec::new(), vec![why.to_owned()])
}

/// `G = C_m` with `m = lcm(m_i)`, `W(e_i) = a^{m/m_i}` on the least half
/// edge `e_i` of each vertex with `m_i > 1`.
pub fn delete_multiplicity(b: &BrauerPermutation) -> Result<DeletionPlan> {
    let kind = DeletionKind::Multiplicity;
    let reps: Vec<(HalfEdge, u64)> = b
        .orbits()
        .map(|o| (o[0], b.multiplicity(o[0])))
        .filter(|&(_, m)| m > 1)
        .collect();
    if reps.is_empty() {
        return trivial_plan(kind, b, "multiplicity is already trivial");
    }
    let m = reps.iter().fold(1u64, |acc, &(_, mi)| acc.lcm(&mi));
    let group = GroupSpec::cyclic("a", m)?;
    let mut notes = Vec::new();
    let mut values = BTreeMap::new();
    let mut representatives = Vec::new();
    for &(e, mi) in &reps {
        let k = m / mi;
        notes.push(format!(
            "{}: m = {mi}, W({}) = {}",
            cycle_text(b, b.orbit_id(e)),
            b.name(e),
            power_text("a", k)
        ));
        values.insert(b.name(e).to_owned(), unit(1, 0, k as i64));
        representatives.push(Representative { half_edge: b.name(e).into(), role: format!("m = {mi}") });
    }
    notes.push(format!("lcm = {m}"));
    DeletionPlan::new(kind, b, group, values, representatives, notes)
}

/// Solves `M v = 1` over F2 for a symmetric `M` with unit diagonal. A
/// solution always exists: `yᵀMy = Σ y_i` for every `y`, so `1` is
/// orthogonal to `ker M`.
fn solve_f2_all_ones(m: &[Vec<bool>]) -> Vec<bool> {
    let n = m.len();
    let mut rows: Vec<Vec<bool>> = m.iter().map(|r| r.iter().copied().chain([true]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| rows[i][c]) else { continue };
        rows.swap(r, p);
        for i in 0..n {
            if i != r && rows[i][c] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    debug_assert!(rows[r..].iter().all(|row| !row[n]), "M v = 1 is solvable");
    let mut v = vec![false; n];
    for (k, &c) in pivots.iter().enumerate() {
        v[c] = rows[k][n];
    }
    v
}

/// `G = C_2` and `W = a` on both half edges of a set `S` of loops. The
/// product of `W` from `e` up to `τe` is `a` to the number of loops of `S`
/// that are `⟨τ⟩e` or cross it, so `S` solves `(A + I)v = 1` over F2 at
/// each vertex, `A` the crossing matrix. `S` is every loop when each loop
/// crosses an even number of others.
pub fn delete_loops(b: &BrauerPermutation) -> Result<DeletionPlan> {
    let kind = DeletionKind::Loops;
    let group = GroupSpec::cyclic("a", 2)?;
    let mut values = BTreeMap::new();
    let mut representatives = Vec::new();
    let mut notes = Vec::new();
    for (v, orbit) in b.orbits().enumerate() {
        let pos: BTreeMap<HalfEdge, usize> = orbit.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        // Loops as position intervals `[i, j)` with `i < j`.
        let loops: Vec<(usize, usize)> = orbit
            .iter()
            .enumerate()
            .filter(|&(i, &e)| b.is_loop(e) && pos[&b.tau(e)] > i)
            .map(|(i, &e)| (i, pos[&b.tau(e)]))
            .collect();
        if loops.is_empty() {
            continue;
        }
        let crosses = |(p, q): (usize, usize), (r, s): (usize, usize)| (p < r && r < q) != (p < s && s < q);
        let m: Vec<Vec<bool>> =
            loops.iter().map(|&x| loops.iter().map(|&y| x == y || crosses(x, y)).collect()).collect();
        let all_even = m.iter().all(|row| row.iter().filter(|&&c| c).count() % 2 == 1);
        let chosen = if all_even { vec![true; loops.len()] } else { solve_f2_all_ones(&m) };
        if !all_even {
            notes.push(format!("{}: crossing loops, a on a solution of (A + I)v = 1", cycle_text(b, v)));
        }
        for (&(i, j), pick) in loops.iter().zip(chosen) {
            let (e, f) = (orbit[i], orbit[j]);
            let (lo, hi) = if b.name(e) < b.name(f) { (e, f) } else { (f, e) };
            representatives.push(Representative {
                half_edge: b.name(lo).into(),
                role: format!("loop at {}", cycle_text(b, v)),
            });
            if pick {
                for x in [e, f] {
                    values.insert(b.name(x).to_owned(), unit(1, 0, 1));
                }
                notes.push(format!("W({}) = W({}) = a", b.name(lo), b.name(hi)));
            }
        }
    }
    if representatives.is_empty() {
        notes.push("no loops; the weight is trivial".into());
    }
    DeletionPlan::new(kind, b, group, values, representatives, notes)
}

/// Vertices (σ-orbit indices) carrying a multiple edge, and the pairs of
/// vertices joined by one. Errors if the graph has a loop.
fn multiple_edge_vertices(b: &BrauerPermutation) -> Result<(BTreeSet<usize>, BTreeSet<(usize, usize)>)> {
    let graph = b.brauer_graph();
    let c = graph.classify();
    if let Some(&l) = c.loops.first() {
        return Err(Error::HasLoops { witness: graph.edges[l].name.clone() });
    }
    let mut vertices = BTreeSet::new();
    let mut pairs = BTreeSet::new();
    for group in &c.multiple_edges {
        let [x, y] = graph.edges[group[0]].ends;
        vertices.insert(x);
        vertices.insert(y);
        pairs.insert((x.min(y), x.max(y)));
    }
    Ok((vertices, pairs))
}

/// `G = ∏ C_{n_i}` over the vertices with a multiple edge, `W = a_i` on
/// the whole i-th such vertex.
pub fn delete_multiple_edges(b: &BrauerPermutation) -> Result<DeletionPlan> {
    let kind = DeletionKind::Multiedges;
    let (vertices, _) = multiple_edge_vertices(b)?;
    if vertices.is_empty() {
        return trivial_plan(kind, b, "no multiple edges");
    }
    let orbits: Vec<Vec<HalfEdge>> = b.orbits().collect();
    let names = factor_names(vertices.len());
    let t = names.len();
    let mut factors = Vec::new();
    let mut values = BTreeMap::new();
    let mut representatives = Vec::new();
    let mut notes = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        let n = orbits[v].len() as u64;
        factors.push(CyclicFactor { name: names[i].clone(), order: Order::Finite(n) });
        for &e in &orbits[v] {
            values.insert(b.name(e).to_owned(), unit(t, i, 1));
        }
        representatives.push(Representative {
            half_edge: b.name(orbits[v][0]).into(),
            role: format!("{} = generator of C{n}", names[i]),
        });
        notes.push(format!("{}: n = {n}, W = {} on the whole vertex", cycle_text(b, v), names[i]));
    }
    DeletionPlan::new(kind, b, GroupSpec::abelian(factors)?, values, representatives, notes)
}

/// Single cyclic group version, valid when the graph `Δ` of multiple-edge
/// vertices is a forest: 2-colour each component of `Δ`, take `V′` to be
/// the class missing the component's least vertex, `n = lcm(n_i)` over
/// `V′` and `W = a^{n/n_i}` on each vertex of `V′`.
pub fn delete_multiple_edges_tree(b: &BrauerPermutation) -> Result<DeletionPlan> {
    let kind = DeletionKind::MultiedgesTree;
    let (vertices, pairs) = multiple_edge_vertices(b)?;
    if vertices.is_empty() {
        return trivial_plan(kind, b, "no multiple edges");
    }
    let orbits: Vec<Vec<HalfEdge>> = b.orbits().collect();
    let vlist: Vec<usize> = vertices.iter().copied().collect();
    let pos = |v: usize| vlist.binary_search(&v).unwrap();
    let delta = Multigraph::unlabelled(vlist.len(), &pairs.iter().map(|&(x, y)| (pos(x), pos(y))).collect::<Vec<_>>());
    if let Some(cycle) = find_cycle(&delta) {
        return Err(Error::DeltaNotForest { cycle: cycle.into_iter().map(|k| cycle_text(b, vlist[k])).collect() });
    }
    let mut adj = vec![Vec::new(); vlist.len()];
    for &(x, y) in &delta.edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut colour: Vec<Option<bool>> = vec![None; vlist.len()];
    let mut components = 0;
    for start in 0..vlist.len() {
        if colour[start].is_some() {
            continue;
        }
        components += 1;
        colour[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if colour[y].is_none() {
                    colour[y] = Some(!colour[x].unwrap());
                    queue.push_back(y);
                }
            }
        }
    }
    let chosen: Vec<usize> = (0..vlist.len()).filter(|&k| colour[k] == Some(true)).map(|k| vlist[k]).collect();
    let n = chosen.iter().fold(1u64, |acc, &v| acc.lcm(&(orbits[v].len() as u64)));
    let mut notes = vec![format!(
        "Δ has {} vertices and {} edges; V' = colour class without each component's least vertex",
        vlist.len(),
        delta.edges.len()
    )];
    if components > 1 {
        notes.push(format!("warning: Δ is a forest with {components} components, handled componentwise"));
    }
    let mut values = BTreeMap::new();
    let mut representatives = Vec::new();
    for &v in &chosen {
        let ni = orbits[v].len() as u64;
        let k = n / ni;
        for &e in &orbits[v] {
            values.insert(b.name(e).to_owned(), unit(1, 0, k as i64));
        }
        representatives.push(Representative { half_edge: b.name(orbits[v][0]).into(), role: format!("V', n = {ni}") });
        notes.push(format!("{}: n = {ni}, W = {} on the whole vertex", cycle_text(b, v), power_text("a", k)));
    }
    notes.push(format!("lcm = {n}"));
    DeletionPlan::new(kind, b, GroupSpec::cyclic("a", n)?, values, representatives, notes)
}

/// Some cycle of a multigraph as a vertex sequence, if there is one.
fn find_cycle(g: &Multigraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (id, &(x, y)) in g.edges.iter().enumerate() {
        adj[x].push((y, id));
        adj[y].push((x, id));
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &(y, id) in &adj[x] {
                if parent[x].is_some_and(|(_, pid)| pid == id) {
                    continue;
                }
                if seen[y] {
                    // Walk both ends up to their common ancestor.
                    let ancestors = |mut v: usize| {
                        let mut path = vec![v];
                        while let Some((p, _)) = parent[v] {
                            path.push(p);
                            v = p;
                        }
                        path
                    };
                    let (px, py) = (ancestors(x), ancestors(y));
                    let meet = *px.iter().find(|v| py.contains(v))?;
                    let mut cycle: Vec<usize> = px.iter().copied().take_while(|&v| v != meet).collect();
                    cycle.push(meet);
                    let back: Vec<usize> = py.iter().copied().take_while(|&v| v != meet).collect();
                    cycle.extend(back.into_iter().rev());
                    return Some(cycle);
                }
                seen[y] = true;
                parent[y] = Some((x, id));
                stack.push(y);
            }
        }
    }
    None
}

/// `G = ∏ ⟨a_i⟩` (infinite cyclic) over the vertices on a cycle with
/// `n_i ≥ 2`; along such a vertex `W = a_i` on `σ^j(e_i)` for
/// `j ≤ n_i - 2` and `a_i^{1-n_i}` on `σ^{n_i-1}(e_i)`.
pub fn delete_cycles(b: &BrauerPermutation) -> Result<DeletionPlan> {
    let kind = DeletionKind::Cycles;
    let c = b.brauer_graph().classify();
    if c.cycle_vertices.is_empty() {
        return trivial_plan(kind, b, "Γ(B) has no cycles");
    }
    let orbits: Vec<Vec<HalfEdge>> = b.orbits().collect();
    let mut notes = Vec::new();
    let used: Vec<usize> = c
        .cycle_vertices
        .iter()
        .copied()
        .filter(|&v| {
            let keep = orbits[v].len() >= 2;
            if !keep {
                notes.push(format!("{}: n = 1, unit factor dropped", cycle_text(b, v)));
            }
            keep
        })
        .collect();
    let names = factor_names(used.len());
    let t = names.len();
    let mut factors = Vec::new();
    let mut values = BTreeMap::new();
    let mut representatives = Vec::new();
    for (i, &v) in used.iter().enumerate() {
        let cycle = &orbits[v];
        let n = cycle.len() as i64;
        factors.push(CyclicFactor { name: names[i].clone(), order: Order::Infinite });
        for (j, &e) in cycle.iter().enumerate() {
            let k = if (j as i64) < n - 1 { 1 } else { 1 - n };
            values.insert(b.name(e).to_owned(), unit(t, i, k));
        }
        representatives.push(Representative {
            half_edge: b.name(cycle[0]).into(),
            role: format!("cycle vertex, n = {n}"),
        });
        notes.push(format!(
            "{}: W = {} along the vertex, {}^{} on {}",
            cycle_text(b, v),
            names[i],
            names[i],
            1 - n,
            b.name(cycle[cycle.len() - 1])
        ));
    }
    DeletionPlan::new(kind, b, GroupSpec::abelian(factors)?, values, representatives, notes)
}
