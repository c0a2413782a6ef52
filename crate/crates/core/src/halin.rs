//! Halin graphs: a plane tree without degree-2 vertices plus the cycle
//! through its leaves in embedding order.
//!
//! Every [`HalinGraph`] is stored in canonical labelling: the outer (leaf)
//! vertices are `0..n` in cycle order and the inner vertices follow in
//! depth-first preorder. "Clockwise" means ascending outer index.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{check_cap, Error, Limits, Result};

/// A rooted tree whose ordered child lists encode a planar embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PlaneTreeJson", into = "PlaneTreeJson")]
pub struct PlaneTree {
    root: usize,
    children: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PlaneTreeJson {
    root: usize,
    children: BTreeMap<usize, Vec<usize>>,
}

impl TryFrom<PlaneTreeJson> for PlaneTree {
    type Error = Error;
    fn try_from(raw: PlaneTreeJson) -> Result<Self> {
        let n = 1 + raw.children.values().map(Vec::len).sum::<usize>();
        let mut children = vec![Vec::new(); n];
        for (v, list) in raw.children {
            if v >= n {
                return Err(Error::InvalidTree(format!("vertex {v} out of range 0..{n}")));
            }
            children[v] = list;
        }
        PlaneTree::new(raw.root, children)
    }
}

impl From<PlaneTree> for PlaneTreeJson {
    fn from(t: PlaneTree) -> Self {
        PlaneTreeJson {
            root: t.root,
            children: t
                .children
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_empty())
                .collect(),
        }
    }
}

impl PlaneTree {
    /// Validates that `children` describes a tree on `0..children.len()` rooted
    /// at `root`, with no vertex of degree 2 and some vertex of degree at least 3.
    pub fn new(root: usize, children: Vec<Vec<usize>>) -> Result<Self> {
        let n = children.len();
        if root >= n {
            return Err(Error::InvalidTree(format!("root {root} out of range")));
        }
        let mut parent = vec![None; n];
        for (p, list) in children.iter().enumerate() {
            for &c in list {
                if c >= n {
                    return Err(Error::InvalidTree(format!("child {c} out of range")));
                }
                if c == root || parent[c].is_some() {
                    return Err(Error::InvalidTree(format!("vertex {c} has two parents")));
                }
                parent[c] = Some(p);
            }
        }
        let tree = PlaneTree { root, children };
        if tree.preorder().len() != n {
            return Err(Error::InvalidTree("not connected".into()));
        }
        let mut max_degree = 0;
        for v in 0..n {
            let d = tree.degree(v);
            if d == 2 {
                return Err(Error::InvalidTree(format!("vertex {v} has degree 2")));
            }
            max_degree = max_degree.max(d);
        }
        if max_degree < 3 {
            return Err(Error::InvalidTree("no vertex of degree >= 3".into()));
        }
        Ok(tree)
    }

    /// A star with `leaves` leaves; vertex 0 is the centre.
    pub fn star(leaves: usize) -> Result<Self> {
        let mut children = vec![Vec::new(); leaves + 1];
        children[0] = (1..=leaves).collect();
        PlaneTree::new(0, children)
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(v != self.root)
    }

    /// Depth-first preorder visiting children left to right.
    pub fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.children.len());
        let mut seen = vec![false; self.children.len()];
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            order.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        order
    }

    /// Leaves in embedding order.
    pub fn leaves(&self) -> Vec<usize> {
        self.preorder()
            .into_iter()
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }
}

/// A Halin graph `T ∪ C` in canonical labelling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HalinJson", into = "HalinJson")]
pub struct HalinGraph {
    tree: PlaneTree,
    graph: Graph,
    outer_len: usize,
    /// Tree neighbours per vertex.
    tree_adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct HalinJson {
    tree: PlaneTree,
    outer: Vec<usize>,
}

impl TryFrom<HalinJson> for HalinGraph {
    type Error = Error;
    fn try_from(raw: HalinJson) -> Result<Self> {
        let leaves = raw.tree.leaves();
        if raw.outer != leaves {
            return Err(Error::InvalidHalin(format!(
                "outer cycle {:?} is not the leaf sequence {:?}",
                raw.outer, leaves
            )));
        }
        build_halin(&raw.tree)
    }
}

impl From<HalinGraph> for HalinJson {
    fn from(h: HalinGraph) -> Self {
        HalinJson {
            outer: (0..h.outer_len).collect(),
            tree: h.tree,
        }
    }
}

/// Adds the cycle through the leaves of `tree` and relabels canonically.
///
/// Edge order of the resulting graph: the outer cycle edges `(i, i+1 mod n)`
/// first, then the tree edges `(parent, child)` in preorder.
pub fn build_halin(tree: &PlaneTree) -> Result<HalinGraph> {
    // revalidate: a tree may have come from untrusted fields
    let tree = PlaneTree::new(tree.root, tree.children.clone())?;
    let order = tree.preorder();
    let leaves: Vec<usize> = order.iter().copied().filter(|&v| tree.degree(v) == 1).collect();
    let n = leaves.len();
    if n < 3 {
        return Err(Error::InvalidHalin(format!("{n} leaves; need at least 3")));
    }
    let total = tree.vertex_count();
    let mut label = vec![usize::MAX; total];
    for (i, &v) in leaves.iter().enumerate() {
        label[v] = i;
    }
    let mut next = n;
    for &v in &order {
        if label[v] == usize::MAX {
            label[v] = next;
            next += 1;
        }
    }
    let mut children = vec![Vec::new(); total];
    for v in 0..total {
        children[label[v]] = tree.children[v].iter().map(|&c| label[c]).collect();
    }
    let canonical = PlaneTree {
        root: label[tree.root],
        children,
    };

    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut tree_adj = vec![Vec::new(); total];
    for p in canonical.preorder() {
        for &c in &canonical.children[p] {
            edges.push((p, c));
            tree_adj[p].push(c);
            tree_adj[c].push(p);
        }
    }
    let graph = Graph::new(total, edges)?;
    Ok(HalinGraph {
        tree: canonical,
        graph,
        outer_len: n,
        tree_adj,
    })
}

/// Wheel with `n_outer` rim vertices `0..n_outer` and hub `n_outer`.
pub fn wheel(n_outer: usize) -> Result<HalinGraph> {
    if n_outer < 3 {
        return Err(Error::Precondition(format!(
            "wheel needs at least 3 outer vertices, got {n_outer}"
        )));
    }
    build_halin(&PlaneTree::star(n_outer)?)
}

impl HalinGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    /// Total number of vertices.
    pub fn order(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Length of the outer cycle.
    pub fn outer_len(&self) -> usize {
        self.outer_len
    }

    /// Outer vertices in cycle order.
    pub fn outer(&self) -> Vec<usize> {
        (0..self.outer_len).collect()
    }

    pub fn inner(&self) -> Vec<usize> {
        (self.outer_len..self.order()).collect()
    }

    pub fn is_inner(&self, v: usize) -> bool {
        v >= self.outer_len && v < self.order()
    }

    pub fn is_wheel(&self) -> bool {
        self.order() - self.outer_len == 1
    }

    /// Neighbours of `v` in the tree.
    pub fn tree_neighbors(&self, v: usize) -> &[usize] {
        &self.tree_adj[v]
    }

    /// Inner neighbours of `v`.
    pub fn inner_neighbors(&self, v: usize) -> Vec<usize> {
        self.tree_adj[v].iter().copied().filter(|&w| self.is_inner(w)).collect()
    }

    /// The outer cycle read clockwise from `start`.
    pub fn outer_from(&self, start: usize) -> Vec<usize> {
        let n = self.outer_len;
        (0..n).map(|i| (start + i) % n).collect()
    }
}

/// Inner vertices with exactly one inner neighbour. Undefined for wheels.
pub fn special_inner_vertices(h: &HalinGraph) -> Result<Vec<usize>> {
    if h.is_wheel() {
        return Err(Error::Precondition(
            "special inner vertices are not defined for a wheel".into(),
        ));
    }
    Ok(h
        .inner()
        .into_iter()
        .filter(|&v| h.inner_neighbors(v).len() == 1)
        .collect())
}

/// A hub joined to every vertex of a rim path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    hub: usize,
    rim: Vec<usize>,
}

impl Fan {
    pub fn new(hub: usize, rim: Vec<usize>) -> Result<Self> {
        if rim.is_empty() {
            return Err(Error::Precondition("fan rim is empty".into()));
        }
        let distinct: BTreeSet<_> = rim.iter().copied().collect();
        if distinct.len() != rim.len() || distinct.contains(&hub) {
            return Err(Error::Precondition("fan vertices must be distinct".into()));
        }
        Ok(Fan { hub, rim })
    }

    /// Hub `0` and rim `1..=k`.
    pub fn standard(k: usize) -> Result<Self> {
        Fan::new(0, (1..=k).collect())
    }

    pub fn hub(&self) -> usize {
        self.hub
    }

    pub fn rim(&self) -> &[usize] {
        &self.rim
    }

    pub fn k(&self) -> usize {
        self.rim.len()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs = vec![self.hub];
        vs.extend(&self.rim);
        vs
    }

    /// The fan on the vertex range `0..=max label`: rim path edges, then spokes.
    pub fn graph(&self) -> Graph {
        let n = self.rim.iter().copied().max().unwrap_or(0).max(self.hub) + 1;
        let path = self.rim.windows(2).map(|w| (w[0], w[1]));
        let spokes = self.rim.iter().map(|&r| (r, self.hub));
        Graph::new(n, path.chain(spokes)).expect("fan vertices are distinct")
    }
}

/// The fan induced by a special inner vertex `u` and its outer neighbours,
/// rim listed clockwise.
pub fn fan_of(h: &HalinGraph, u: usize) -> Result<Fan> {
    if !special_inner_vertices(h)?.contains(&u) {
        return Err(Error::Precondition(format!("vertex {u} is not a special inner vertex")));
    }
    let n = h.outer_len();
    let leaves: BTreeSet<usize> = h
        .tree_neighbors(u)
        .iter()
        .copied()
        .filter(|&w| !h.is_inner(w))
        .collect();
    let start = *leaves
        .iter()
        .find(|&&v| !leaves.contains(&((v + n - 1) % n)))
        .ok_or_else(|| Error::InvalidHalin("fan rim covers the whole outer cycle".into()))?;
    let rim: Vec<usize> = (0..leaves.len()).map(|i| (start + i) % n).collect();
    if rim.iter().any(|v| !leaves.contains(v)) {
        return Err(Error::InvalidHalin(format!(
            "outer neighbours of {u} are not consecutive"
        )));
    }
    Fan::new(u, rim)
}

/// A vertex subset with its induced subgraph (on the full vertex range).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Result of cutting a Halin graph along a fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanSplit {
    /// The fan `{u, v_1, ..., v_k}`.
    pub fan: Subgraph,
    /// Everything else.
    pub rest: Subgraph,
    /// The outer cycle read clockwise from `v_1`, i.e. `v_1, ..., v_n`.
    pub frame: Vec<usize>,
    /// `u`'s unique inner neighbour.
    pub anchor: usize,
    /// `(u, v)`, `(v_1, v_n)`, `(v_k, v_{k+1})`, first endpoint on the fan side.
    pub crossing: [(usize, usize); 3],
}

pub fn split_at_fan(h: &HalinGraph, f: &Fan) -> Result<FanSplit> {
    let derived = fan_of(h, f.hub())?;
    if &derived != f {
        return Err(Error::Precondition(
            "fan is not the fan of its hub in this Halin graph".into(),
        ));
    }
    let u = f.hub();
    let anchor = h.inner_neighbors(u)[0];
    let frame = h.outer_from(f.rim()[0]);
    let (n, k) = (frame.len(), f.k());
    let fan_vertices = f.vertices();
    let mut on_fan = vec![false; h.order()];
    for &v in &fan_vertices {
        on_fan[v] = true;
    }
    let rest_vertices: Vec<usize> = (0..h.order()).filter(|&v| !on_fan[v]).collect();
    let crossing = [(u, anchor), (frame[0], frame[n - 1]), (frame[k - 1], frame[k])];
    let cut = h
        .graph()
        .edges()
        .iter()
        .filter(|&&(a, b)| on_fan[a] != on_fan[b])
        .count();
    if cut != crossing.len() || crossing.iter().any(|&(a, b)| !h.graph().has_edge(a, b)) {
        return Err(Error::InvalidHalin(format!(
            "fan at {u} is joined to the rest by {cut} edges, expected 3"
        )));
    }
    Ok(FanSplit {
        fan: Subgraph {
            graph: h.graph().induced(&fan_vertices),
            vertices: fan_vertices,
        },
        rest: Subgraph {
            graph: h.graph().induced(&rest_vertices),
            vertices: rest_vertices,
        },
        frame,
        anchor,
        crossing,
    })
}

/// Every Halin graph on at most `max_vertices` vertices, default cap.
pub fn enumerate_halin(max_vertices: usize) -> Result<impl Iterator<Item = HalinGraph>> {
    enumerate_halin_with(max_vertices, &Limits::default())
}

/// One Halin graph per plane tree shape with at most `max_vertices` vertices.
///
/// Trees are rooted at an inner vertex; shapes that differ only by a cyclic
/// rotation of the root's children describe the same embedding and are
/// yielded once. Output is ordered by vertex count, then by shape code.
pub fn enumerate_halin_with(
    max_vertices: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = HalinGraph>> {
    check_cap("enumeration vertex", limits.enumerate_vertices, max_vertices)?;
    let mut codes: Vec<Vec<usize>> = Vec::new();
    let mut planted: Vec<Vec<Shape>> = vec![Vec::new(); max_vertices + 1];
    for size in 1..max_vertices {
        planted[size] = planted_shapes(size, &planted);
    }
    for total in 4..=max_vertices {
        let mut seen = BTreeSet::new();
        for kids in sequences(total - 1, 3, &planted) {
            seen.insert(rotation_canonical_code(&kids));
        }
        codes.extend(seen);
    }
    Ok(codes.into_iter().map(|code| {
        let tree = tree_from_code(&code);
        build_halin(&tree).expect("enumerated shapes are valid plane trees")
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Shape(Vec<Shape>);

impl Shape {
    /// Preorder sequence of child counts; determines the ordered tree.
    fn encode(&self, out: &mut Vec<usize>) {
        out.push(self.0.len());
        for c in &self.0 {
            c.encode(out);
        }
    }
}

/// Non-root subtrees of exactly `size` vertices: a leaf, or a vertex with at
/// least two children.
fn planted_shapes(size: usize, planted: &[Vec<Shape>]) -> Vec<Shape> {
    if size == 1 {
        return vec![Shape(Vec::new())];
    }
    sequences(size - 1, 2, planted).into_iter().map(Shape).collect()
}

/// Ordered sequences of at least `min_len` planted subtrees with `total` vertices.
fn sequences(total: usize, min_len: usize, planted: &[Vec<Shape>]) -> Vec<Vec<Shape>> {
    fn go(
        left: usize,
        min_len: usize,
        planted: &[Vec<Shape>],
        prefix: &mut Vec<Shape>,
        out: &mut Vec<Vec<Shape>>,
    ) {
        if left == 0 {
            if prefix.len() >= min_len {
                out.push(prefix.clone());
            }
            return;
        }
        for size in 1..=left {
            for s in &planted[size] {
                prefix.push(s.clone());
                go(left - size, min_len, planted, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(total, min_len, planted, &mut Vec::new(), &mut out);
    out
}

fn rotation_canonical_code(kids: &[Shape]) -> Vec<usize> {
    (0..kids.len())
        .map(|r| {
            let mut code = vec![kids.len()];
            for s in kids[r..].iter().chain(&kids[..r]) {
                s.encode(&mut code);
            }
            code
        })
        .min()
        .expect("root has children")
}

/// Rebuilds a tree from its preorder child-count code, labelling in preorder.
pub(crate) fn tree_from_code(code: &[usize]) -> PlaneTree {
    let mut children = vec![Vec::new(); code.len()];
    // (vertex, children still to attach)
    let mut open: Vec<(usize, usize)> = Vec::new();
    for (v, &count) in code.iter().enumerate() {
        if let Some((p, left)) = open.last_mut() {
            children[*p].push(v);
            *left -= 1;
            if *left == 0 {
                open.pop();
            }
        }
        if count > 0 {
            open.push((v, count));
        }
    }
    PlaneTree { root: 0, children }
}

/// A pseudo-random Halin graph with exactly `leaves` outer vertices,
/// deterministic in `(leaves, seed)`.
///
/// Starts from a star and repeatedly expands a random leaf into an inner
/// vertex with at least two children, so no tree vertex ever has degree 2.
pub fn random_halin(leaves: usize, seed: u64) -> Result<HalinGraph> {
    if leaves < 3 {
        return Err(Error::Precondition(format!(
            "a Halin graph needs at least 3 leaves, got {leaves}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let root_kids = rng.gen_range(3..=leaves.min(5));
    let mut children: Vec<Vec<usize>> = vec![(1..=root_kids).collect()];
    children.extend((0..root_kids).map(|_| Vec::new()));
    let mut current: Vec<usize> = (1..=root_kids).collect();
    let mut missing = leaves - root_kids;
    while missing > 0 {
        let pick = rng.gen_range(0..current.len());
        let leaf = current.swap_remove(pick);
        let kids = rng.gen_range(2..=(missing + 1).min(4));
        for _ in 0..kids {
            let v = children.len();
            children.push(Vec::new());
            children[leaf].push(v);
            current.push(v);
        }
        missing -= kids - 1;
    }
    build_halin(&PlaneTree::new(0, children)?)
}
