//! Simple undirected graphs, digraphs and orientations.
//!
//! Vertices are the dense integers `0..n`. Edges and arcs keep their
//! insertion order, which defines the stable edge/arc index used by the
//! enumeration routines and by certificates.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

fn check_endpoints(n: usize, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    Ok(())
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(raw: GraphJson) -> Result<Self> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    /// Each edge is stored as given; `(u, v)` and `(v, u)` are the same edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_endpoints(n, u, v)?;
            if !seen.insert(key(u, v)) {
                return Err(Error::Duplicate(u, v));
            }
            stored.push((u, v));
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph {
            n,
            edges: stored,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs >= 3 vertices, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(&v)
    }

    /// Orients every edge as stored, `(u, v)` becoming the arc `u -> v`.
    pub fn as_stored_orientation(&self) -> Orientation {
        Orientation {
            digraph: Digraph {
                n: self.n,
                arcs: self.edges.clone(),
            },
            graph: self.clone(),
        }
    }

    /// Same vertex range, keeping only the edges with both ends in `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut keep = vec![false; self.n];
        for &v in vertices {
            if v < self.n {
                keep[v] = true;
            }
        }
        let edges = self.edges.iter().copied().filter(|&(u, v)| keep[u] && keep[v]);
        Graph::new(self.n, edges).expect("subset of a simple graph")
    }

    /// Same edge set, ignoring edge order and orientation of the stored pairs.
    pub fn same_edge_set(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mine: HashSet<_> = self.edges.iter().map(|&(u, v)| key(u, v)).collect();
        other.edges.iter().all(|&(u, v)| mine.contains(&key(u, v)))
    }
}

/// A loopless digraph on `0..n` without duplicate arcs. Antiparallel pairs are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DigraphJson", into = "DigraphJson")]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl TryFrom<DigraphJson> for Digraph {
    type Error = Error;
    fn try_from(raw: DigraphJson) -> Result<Self> {
        Digraph::new(raw.n, raw.arcs.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Digraph> for DigraphJson {
    fn from(d: Digraph) -> Self {
        DigraphJson {
            n: d.n,
            arcs: d.arcs.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        for (u, v) in arcs {
            check_endpoints(n, u, v)?;
            if !seen.insert((u, v)) {
                return Err(Error::Duplicate(u, v));
            }
            stored.push((u, v));
        }
        Ok(Digraph { n, arcs: stored })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in index order, as `(tail, head)`.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.arcs.iter().filter(|&&(t, _)| t == v).count())
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(t, _) in &self.arcs {
            deg[t] += 1;
        }
        deg
    }

    /// Maximum outdegree; 0 for an arcless digraph.
    pub fn max_out_degree(&self) -> usize {
        self.out_degrees().into_iter().max().unwrap_or(0)
    }

    /// Out-neighbour lists paired with arc indices.
    pub fn out_arcs(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.n];
        for (i, &(t, h)) in self.arcs.iter().enumerate() {
            out[t].push((h, i));
        }
        out
    }

    /// Same vertex range, keeping only arcs with both ends in `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut keep = vec![false; self.n];
        for &v in vertices {
            if v < self.n {
                keep[v] = true;
            }
        }
        Digraph {
            n: self.n,
            arcs: self
                .arcs
                .iter()
                .copied()
                .filter(|&(u, v)| keep[u] && keep[v])
                .collect(),
        }
    }

    /// Every arc reversed, indices preserved.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            n: self.n,
            arcs: self.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// Forgets directions. Fails if some pair of vertices carries arcs both ways.
    pub fn underlying_graph(&self) -> Result<Graph> {
        let set: HashSet<_> = self.arcs.iter().copied().collect();
        if let Some(&(u, v)) = self.arcs.iter().find(|&&(u, v)| set.contains(&(v, u))) {
            return Err(Error::Antiparallel(u, v));
        }
        Graph::new(self.n, self.arcs.iter().copied())
    }

    /// True iff the arcs are in bijection with the edges of `g`, one direction each.
    pub fn is_orientation_of(&self, g: &Graph) -> bool {
        if self.n != g.vertex_count() || self.arcs.len() != g.edge_count() {
            return false;
        }
        let mut pending: HashMap<(usize, usize), bool> =
            g.edges().iter().map(|&(u, v)| (key(u, v), false)).collect();
        for &(u, v) in &self.arcs {
            match pending.get_mut(&key(u, v)) {
                Some(used @ false) => *used = true,
                _ => return false,
            }
        }
        true
    }
}

/// A digraph together with the graph it orients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    digraph: Digraph,
    graph: Graph,
}

impl Orientation {
    pub fn new(graph: Graph, digraph: Digraph) -> Result<Self> {
        if !digraph.is_orientation_of(&graph) {
            return Err(Error::NotAnOrientation(
                "arcs are not in bijection with the edges".into(),
            ));
        }
        Ok(Orientation { digraph, graph })
    }

    /// Uses the digraph's own underlying graph.
    pub fn from_digraph(digraph: Digraph) -> Result<Self> {
        let graph = digraph.underlying_graph()?;
        Ok(Orientation { digraph, graph })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        self.digraph.arcs()
    }

    pub fn max_out_degree(&self) -> usize {
        self.digraph.max_out_degree()
    }

    pub fn reversed(&self) -> Orientation {
        Orientation {
            digraph: self.digraph.reversed(),
            graph: self.graph.clone(),
        }
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn out_degree_examples() {
        assert_eq!(three_cycle().out_degree(0).unwrap(), 1);
        let empty = Digraph::new(4, []).unwrap();
        assert_eq!(empty.out_degree(3).unwrap(), 0);
        assert_eq!(empty.max_out_degree(), 0);
        assert!(matches!(
            empty.out_degree(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn k4_ordering_orientation_has_max_outdegree_three() {
        // each edge points to its earlier endpoint in 0,1,2,3
        let arcs: Vec<_> = Graph::complete(4)
            .edges()
            .iter()
            .map(|&(u, v)| (u.max(v), u.min(v)))
            .collect();
        let d = Digraph::new(4, arcs).unwrap();
        assert_eq!(d.out_degree(3).unwrap(), 3);
        assert_eq!(d.max_out_degree(), 3);
    }

    #[test]
    fn orientation_checks() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert!(Digraph::new(2, [(0, 1)]).unwrap().is_orientation_of(&g));
        assert!(!Digraph::new(2, [(0, 1), (1, 0)]).unwrap().is_orientation_of(&g));
        let tri = Graph::cycle(3).unwrap();
        assert!(three_cycle().is_orientation_of(&tri));
        assert!(!Digraph::new(3, [(0, 1), (1, 2)]).unwrap().is_orientation_of(&tri));
    }

    #[test]
    fn underlying_graph_examples() {
        let p = Digraph::new(3, [(0, 1), (1, 2)]).unwrap().underlying_graph().unwrap();
        assert!(p.same_edge_set(&Graph::path(3)));
        let e = Digraph::new(5, []).unwrap().underlying_graph().unwrap();
        assert_eq!(e, Graph::empty(5));
        assert_eq!(
            Digraph::new(2, [(0, 1), (1, 0)]).unwrap().underlying_graph(),
            Err(Error::Antiparallel(0, 1))
        );
    }

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::Duplicate(1, 0)));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Digraph::new(3, [(0, 1), (0, 1)]), Err(Error::Duplicate(0, 1)));
    }

    #[test]
    fn json_round_trip_keeps_edge_order() {
        let g = Graph::new(4, [(2, 3), (0, 1), (3, 0)]).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":4,"edges":[[2,3],[0,1],[3,0]]}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        let bad: std::result::Result<Digraph, _> = serde_json::from_str(r#"{"n":2,"arcs":[[0,0]]}"#);
        assert!(bad.is_err());
    }
}
