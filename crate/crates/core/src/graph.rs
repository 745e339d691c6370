//! The Brauer graph `Γ(B)`: vertices are σ-orbits, edges are τ-orbits.
//!
//! Windowed coverings produce graphs with dangling half edges (τ-partner not
//! built yet); those are kept apart from the edges, and every structural
//! query below looks at complete edges only.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::brauer::{sigma_orbits, unique_edge_labels, BrauerPermutation, HalfEdge};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphVertex {
    /// Cycle notation of the σ-orbit, e.g. `(1+ 1- 2+)`.
    pub name: String,
    pub cycle: Vec<HalfEdge>,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub name: String,
    /// `[lesser, greater]` by half-edge name.
    pub halves: [HalfEdge; 2],
    /// Vertex indices of `halves[0]` and `halves[1]`.
    pub ends: [usize; 2],
}

impl GraphEdge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

/// A half edge whose τ-partner lies outside a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DanglingHalfEdge {
    pub half_edge: HalfEdge,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrauerGraph {
    pub half_edge_names: Vec<String>,
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<GraphEdge>,
    pub dangling: Vec<DanglingHalfEdge>,
}

impl BrauerGraph {
    /// Builds the graph of a (possibly partial) ribbon structure. `tau`
    /// returns `None` for half edges whose partner is missing.
    pub(crate) fn build(
        names: &[String],
        sigma: &[usize],
        tau: impl Fn(usize) -> Option<usize>,
        multiplicity: impl Fn(usize) -> u64,
    ) -> Self {
        let orbits = sigma_orbits(names, sigma);
        let mut vertex_of = vec![0; names.len()];
        let vertices = orbits
            .iter()
            .enumerate()
            .map(|(k, cycle)| {
                for &i in cycle {
                    vertex_of[i] = k;
                }
                let listed: Vec<&str> = cycle.iter().map(|&i| names[i].as_str()).collect();
                GraphVertex {
                    name: format!("({})", listed.join(" ")),
                    cycle: cycle.iter().map(|&i| HalfEdge(i)).collect(),
                    multiplicity: multiplicity(cycle[0]),
                }
            })
            .collect();
        let mut pairs = Vec::new();
        let mut dangling = Vec::new();
        for i in 0..names.len() {
            match tau(i) {
                Some(j) if names[i] < names[j] => pairs.push((i, j)),
                Some(_) => {}
                None => dangling.push(DanglingHalfEdge { half_edge: HalfEdge(i), vertex: vertex_of[i] }),
            }
        }
        pairs.sort_by(|a, b| names[a.0].cmp(&names[b.0]));
        dangling.sort_by(|a, b| names[a.half_edge.0].cmp(&names[b.half_edge.0]));
        let labels =
            unique_edge_labels(pairs.iter().map(|&(i, j)| (names[i].as_str(), names[j].as_str())));
        let edges = pairs
            .into_iter()
            .zip(labels)
            .map(|((i, j), name)| GraphEdge {
                name,
                halves: [HalfEdge(i), HalfEdge(j)],
                ends: [vertex_of[i], vertex_of[j]],
            })
            .collect();
        BrauerGraph { half_edge_names: names.to_vec(), vertices, edges, dangling }
    }

    /// Plain multigraph on the complete edges, labelled by multiplicity.
    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph {
            labels: self.vertices.iter().map(|v| v.multiplicity).collect(),
            edges: self.edges.iter().map(|e| (e.ends[0], e.ends[1])).collect(),
        }
    }

    pub fn classify(&self) -> Classification {
        let mut c = self.to_multigraph().classify();
        c.multiplicity_trivial = self.vertices.iter().all(|v| v.multiplicity == 1);
        c
    }

    pub fn vertex_of(&self, e: HalfEdge) -> Option<usize> {
        self.vertices.iter().position(|v| v.cycle.contains(&e))
    }
}

impl BrauerPermutation {
    /// `Γ(B)`.
    pub fn brauer_graph(&self) -> BrauerGraph {
        BrauerGraph::build(
            self.names(),
            self.sigma_slice(),
            |i| Some(self.tau_slice()[i]),
            |i| self.multiplicity(HalfEdge(i)),
        )
    }
}

/// An undirected multigraph with labelled vertices. Loops are edges `(v, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Multigraph {
    pub labels: Vec<u64>,
    pub edges: Vec<(usize, usize)>,
}

/// Structural summary of a Brauer graph.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Classification {
    pub has_loops: bool,
    pub has_multiple_edges: bool,
    pub multiplicity_trivial: bool,
    pub is_tree: bool,
    pub is_connected: bool,
    /// Edge indices of loops.
    pub loops: Vec<usize>,
    /// Groups (size ≥ 2) of non-loop edges sharing both endpoints.
    pub multiple_edges: Vec<Vec<usize>>,
    /// Vertices lying on some cycle (loops and parallel pairs included).
    pub cycle_vertices: Vec<usize>,
}

impl Multigraph {
    pub fn new(labels: Vec<u64>, edges: Vec<(usize, usize)>) -> Self {
        Multigraph { labels, edges }
    }

    /// Unlabelled (all multiplicities 1) graph on `n` vertices.
    pub fn unlabelled(n: usize, edges: &[(usize, usize)]) -> Self {
        Multigraph { labels: vec![1; n], edges: edges.to_vec() }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.vertex_count();
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.component_count() == self.vertex_count()
    }

    /// Blocks (biconnected components) of the loop-free part, as edge-index
    /// lists. Parallel edges share a block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if a != b {
                adj[a].push((b, id));
                adj[b].push((a, id));
            }
        }
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks = Vec::new();
        // (vertex, edge used to reach it, next adjacency position)
        let mut frames: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            frames.push((root, UNSEEN, 0));
            while let Some(frame) = frames.last_mut() {
                let (v, via, pos) = *frame;
                if pos < adj[v].len() {
                    frame.2 += 1;
                    let (w, id) = adj[v][pos];
                    if id == via {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        edge_stack.push(id);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        frames.push((w, id, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(id);
                        low[v] = low[v].min(disc[w]);
                    }
                    continue;
                }
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(id) = edge_stack.pop() {
                            block.push(id);
                            if id == via {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        blocks
    }

    pub fn classify(&self) -> Classification {
        let loops: Vec<usize> =
            self.edges.iter().enumerate().filter(|(_, (a, b))| a == b).map(|(i, _)| i).collect();
        let mut by_ends: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a != b {
                by_ends.entry((a.min(b), a.max(b))).or_default().push(i);
            }
        }
        let multiple_edges: Vec<Vec<usize>> =
            by_ends.into_values().filter(|group| group.len() > 1).collect();
        let mut on_cycle = BTreeSet::new();
        for &l in &loops {
            on_cycle.insert(self.edges[l].0);
        }
        for block in self.blocks() {
            if block.len() >= 2 {
                for id in block {
                    on_cycle.insert(self.edges[id].0);
                    on_cycle.insert(self.edges[id].1);
                }
            }
        }
        let is_connected = self.is_connected();
        Classification {
            has_loops: !loops.is_empty(),
            has_multiple_edges: !multiple_edges.is_empty(),
            multiplicity_trivial: self.labels.iter().all(|&m| m == 1),
            is_tree: is_connected
                && loops.is_empty()
                && self.edges.len() + 1 == self.vertex_count(),
            is_connected,
            loops,
            multiple_edges,
            cycle_vertices: on_cycle.into_iter().collect(),
        }
    }

    /// Whether the graph is a simple path; returns the edge order from one
    /// end to the other.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let c = self.classify();
        if !c.is_tree || c.has_multiple_edges || (0..n).any(|v| self.degree(v) > 2) {
            return None;
        }
        if self.edges.is_empty() {
            return Some(Vec::new());
        }
        let start = (0..n).find(|&v| self.degree(v) == 1)?;
        let mut order = Vec::new();
        let mut used = vec![false; self.edges.len()];
        let mut v = start;
        while let Some(id) =
            (0..self.edges.len()).find(|&i| !used[i] && (self.edges[i].0 == v || self.edges[i].1 == v))
        {
            used[id] = true;
            order.push(id);
            let (a, b) = self.edges[id];
            v = if a == v { b } else { a };
        }
        Some(order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: a vertex is on a cycle iff some edge subset forming a
    /// single cycle (connected, all degrees 2) passes through it.
    fn brute_force_cycle_vertices(g: &Multigraph) -> Vec<usize> {
        let m = g.edges.len();
        assert!(m <= 12);
        let mut out = BTreeSet::new();
        for mask in 1u32..(1 << m) {
            let chosen: Vec<(usize, usize)> =
                (0..m).filter(|i| mask >> i & 1 == 1).map(|i| g.edges[i]).collect();
            let sub = Multigraph::unlabelled(g.vertex_count(), &chosen);
            let touched: BTreeSet<usize> = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
            if touched.iter().all(|&v| sub.degree(v) == 2)
                && sub.component_count() == g.vertex_count() - touched.len() + 1
            {
                out.extend(touched);
            }
        }
        out.into_iter().collect()
    }

    #[test]
    fn fix1_graph() {
        let b = BrauerPermutation::from_cycles(
            &[&["1+", "1-", "2+"], &["2-"]],
            &[("1+", "1-"), ("2+", "2-")],
            &[("2-", 2)],
        )
        .unwrap();
        let g = b.brauer_graph();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.vertices[0].name, "(1+ 1- 2+)");
        assert_eq!(g.vertices[1].multiplicity, 2);
        assert_eq!(g.edges.len(), 2);
        assert_eq!(g.edges[0].name, "1");
        assert!(g.edges[0].is_loop());
        assert_eq!(g.edges[1].ends, [0, 1]);
        let c = g.classify();
        assert!(c.has_loops);
        assert_eq!(c.cycle_vertices, vec![0]);
        assert!(!c.multiplicity_trivial);
    }

    #[test]
    fn single_edge() {
        let b = BrauerPermutation::from_cycles(&[&["e"], &["f"]], &[("e", "f")], &[]).unwrap();
        let g = b.brauer_graph();
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 1));
        let c = g.classify();
        assert!(c.is_tree && !c.has_loops && !c.has_multiple_edges);
        assert!(c.cycle_vertices.is_empty());
    }

    #[test]
    fn triangle_and_path() {
        let tri = Multigraph::unlabelled(3, &[(0, 1), (1, 2), (2, 0)]);
        let c = tri.classify();
        assert!(!c.is_tree);
        assert_eq!(c.cycle_vertices, vec![0, 1, 2]);
        let path = Multigraph::unlabelled(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(path.classify().is_tree);
        assert_eq!(path.path_order(), Some(vec![0, 1, 2]));
        assert_eq!(tri.path_order(), None);
    }

    #[test]
    fn parallel_pair_is_a_cycle() {
        let g = Multigraph::unlabelled(3, &[(0, 1), (0, 1), (1, 2)]);
        let c = g.classify();
        assert!(c.has_multiple_edges);
        assert_eq!(c.multiple_edges, vec![vec![0, 1]]);
        assert_eq!(c.cycle_vertices, vec![0, 1]);
    }

    #[test]
    fn blocks_match_brute_force_on_fixed_graphs() {
        let graphs = [
            Multigraph::unlabelled(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]),
            Multigraph::unlabelled(4, &[(0, 0), (0, 1), (1, 2), (2, 3), (3, 1)]),
            Multigraph::unlabelled(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 3), (2, 2)]),
            Multigraph::unlabelled(4, &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]),
        ];
        for g in graphs {
            assert_eq!(g.classify().cycle_vertices, brute_force_cycle_vertices(&g), "{g:?}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn multigraph() -> impl Strategy<Value = Multigraph> {
            (1usize..7).prop_flat_map(|n| {
                prop::collection::vec((0..n, 0..n), 0..=8)
                    .prop_map(move |edges| Multigraph::unlabelled(n, &edges))
            })
        }

        proptest! {
            #[test]
            fn cycle_vertices_agree_with_enumeration(g in multigraph()) {
                prop_assert_eq!(g.classify().cycle_vertices, brute_force_cycle_vertices(&g));
            }
        }
    }
}
