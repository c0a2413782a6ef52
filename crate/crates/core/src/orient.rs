//! Orientations with small maximum outdegree, and certificates that they are
//! Alon-Tarsi.
//!
//! Besides the generic degeneracy orientation, this module implements the
//! constructive orientations for Halin graphs:
//!
//! * even-rim wheel: rim clockwise, spokes into the hub;
//! * layered stripping: outer cycle (or path) clockwise, outer-to-inner arcs,
//!   then the inner tree is peeled leaf layer by leaf layer;
//! * fan splits for odd outer cycles: cut off the fan of a special inner vertex,
//!   orient the fan and the remainder separately and join them with three
//!   crossing arcs that all point the same way.
//!
//! Every certificate is re-tallied before it is returned.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eulerian::{tally_eulerian_with, EulerianTally};
use crate::graph::{Digraph, Graph, Orientation};
use crate::halin::{fan_of, special_inner_vertices, split_at_fan, Fan, HalinGraph};
use crate::{Error, Limits, Result};

/// A vertex ordering witnessing `d`-degeneracy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrder {
    /// Each vertex has at most `degeneracy` neighbours earlier in this order.
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

/// Peels a minimum-degree vertex (lowest index on ties) until the graph is
/// empty; the peeled vertex goes to the back of the ordering, so the final
/// order is the reverse of the peeling sequence.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrder {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut peeled = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        degeneracy = degeneracy.max(degree[v]);
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
        peeled.push(v);
    }
    peeled.reverse();
    DegeneracyOrder {
        order: peeled,
        degeneracy,
    }
}

/// Orients every edge toward its endpoint that comes earlier in `order`.
pub fn acyclic_from_ordering(g: &Graph, order: &[usize]) -> Result<Orientation> {
    let n = g.vertex_count();
    let mut pos = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        pos[v] = i;
    }
    let arcs = g
        .edges()
        .iter()
        .map(|&(u, v)| if pos[u] > pos[v] { (u, v) } else { (v, u) });
    Orientation::new(g.clone(), Digraph::new(n, arcs)?)
}

/// Which construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Acyclic orientation from a degeneracy ordering.
    Degeneracy,
    /// Wheel with an even rim: rim clockwise, every spoke into the hub.
    EvenRimWheel,
    /// Outer cycle clockwise plus leaf-layer stripping of the inner tree.
    LayeredStripping { leftover_edge: bool },
    /// Stand-alone odd fan.
    OddFan,
    /// Odd outer cycle cut at a fan with an odd rim; fan side points to the rest.
    OddFanSplit { leftover_edge: bool },
    /// Odd outer cycle cut at a fan with an even rim; rest points to the fan side.
    EvenFanSplit,
    /// Found by exhaustive orientation search.
    Search,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Construction::Degeneracy => "degeneracy",
            Construction::EvenRimWheel => "even-rim-wheel",
            Construction::LayeredStripping { leftover_edge: false } => "layered-stripping",
            Construction::LayeredStripping { leftover_edge: true } => {
                "layered-stripping/leftover-edge"
            }
            Construction::OddFan => "odd-fan",
            Construction::OddFanSplit { leftover_edge: false } => "odd-fan-split",
            Construction::OddFanSplit { leftover_edge: true } => "odd-fan-split/leftover-edge",
            Construction::EvenFanSplit => "even-fan-split",
            Construction::Search => "exhaustive-search",
        };
        f.write_str(tag)
    }
}

impl FromStr for Construction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "degeneracy" => Construction::Degeneracy,
            "even-rim-wheel" => Construction::EvenRimWheel,
            "layered-stripping" => Construction::LayeredStripping { leftover_edge: false },
            "layered-stripping/leftover-edge" => {
                Construction::LayeredStripping { leftover_edge: true }
            }
            "odd-fan" => Construction::OddFan,
            "odd-fan-split" => Construction::OddFanSplit { leftover_edge: false },
            "odd-fan-split/leftover-edge" => Construction::OddFanSplit { leftover_edge: true },
            "even-fan-split" => Construction::EvenFanSplit,
            "exhaustive-search" => Construction::Search,
            other => return Err(Error::Parse(format!("unknown construction tag {other:?}"))),
        })
    }
}

/// An orientation claimed to be Alon-Tarsi, with its claimed maximum
/// outdegree and tally. Proves `AT(G) <= max_outdeg + 1` once verified.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "CertificateJson", into = "CertificateJson")]
pub struct AtCertificate {
    orientation: Orientation,
    max_outdeg: usize,
    tally: EulerianTally,
    construction: Construction,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    construction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    arcs: Vec<[usize; 2]>,
    max_outdeg: usize,
    even: u64,
    odd: u64,
}

impl TryFrom<CertificateJson> for AtCertificate {
    type Error = Error;
    fn try_from(raw: CertificateJson) -> Result<Self> {
        let inferred = raw.arcs.iter().flatten().max().map_or(0, |&v| v + 1);
        let n = raw.n.unwrap_or(inferred);
        let digraph = Digraph::new(n, raw.arcs.iter().map(|&[u, v]| (u, v)))?;
        Ok(AtCertificate {
            orientation: Orientation::from_digraph(digraph)?,
            max_outdeg: raw.max_outdeg,
            tally: EulerianTally::new(raw.even, raw.odd),
            construction: raw.construction.parse()?,
        })
    }
}

impl From<AtCertificate> for CertificateJson {
    fn from(c: AtCertificate) -> Self {
        CertificateJson {
            construction: c.construction.to_string(),
            n: Some(c.orientation.digraph().vertex_count()),
            arcs: c.orientation.arcs().iter().map(|&(u, v)| [u, v]).collect(),
            max_outdeg: c.max_outdeg,
            even: c.tally.even(),
            odd: c.tally.odd(),
        }
    }
}

/// Equal when the arcs (in order) and all claims agree.
impl PartialEq for AtCertificate {
    fn eq(&self, other: &Self) -> bool {
        self.orientation.digraph() == other.orientation.digraph()
            && self.max_outdeg == other.max_outdeg
            && self.tally == other.tally
            && self.construction == other.construction
    }
}

impl Eq for AtCertificate {}

impl AtCertificate {
    /// Tallies `orientation` and packages it; fails if it is not Alon-Tarsi.
    pub fn certify(
        orientation: Orientation,
        construction: Construction,
        limits: &Limits,
    ) -> Result<Self> {
        let tally = tally_eulerian_with(orientation.digraph(), limits.tally_arcs)?;
        if !tally.is_alon_tarsi() {
            return Err(Error::VerificationFailed(format!(
                "{construction} orientation has diff 0 ({} even, {} odd)",
                tally.even(),
                tally.odd()
            )));
        }
        Ok(AtCertificate {
            max_outdeg: orientation.max_out_degree(),
            orientation,
            tally,
            construction,
        })
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn max_outdeg(&self) -> usize {
        self.max_outdeg
    }

    pub fn tally(&self) -> EulerianTally {
        self.tally
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    /// The Alon-Tarsi upper bound this certificate proves.
    pub fn at_bound(&self) -> usize {
        self.max_outdeg + 1
    }

    /// Recomputes outdegrees and the tally and compares them with the claims.
    pub fn verify(&self, limits: &Limits) -> Result<()> {
        let actual = self.orientation.max_out_degree();
        if actual != self.max_outdeg {
            return Err(Error::VerificationFailed(format!(
                "claimed max outdegree {} but orientation has {actual}",
                self.max_outdeg
            )));
        }
        let tally = tally_eulerian_with(self.orientation.digraph(), limits.tally_arcs)?;
        if tally != self.tally {
            return Err(Error::VerificationFailed(format!(
                "claimed tally ({}, {}) but recount gives ({}, {})",
                self.tally.even(),
                self.tally.odd(),
                tally.even(),
                tally.odd()
            )));
        }
        if !tally.is_alon_tarsi() {
            return Err(Error::VerificationFailed("diff is 0".into()));
        }
        Ok(())
    }

    /// `verify`, plus a check that the orientation covers exactly the edges of `g`.
    pub fn verify_for(&self, g: &Graph, limits: &Limits) -> Result<()> {
        let d = self.orientation.digraph();
        let padded = Digraph::new(g.vertex_count().max(d.vertex_count()), d.arcs().iter().copied())?;
        if d.vertex_count() > g.vertex_count() || !padded.is_orientation_of(g) {
            return Err(Error::VerificationFailed(
                "certificate does not orient the given graph".into(),
            ));
        }
        self.verify(limits)
    }
}

/// Rim clockwise `v_i -> v_{i+1}`, spokes `v_i -> hub`.
pub fn orient_wheel_even_rim(h: &HalinGraph) -> Result<AtCertificate> {
    orient_wheel_even_rim_with(h, &Limits::default())
}

pub fn orient_wheel_even_rim_with(h: &HalinGraph, limits: &Limits) -> Result<AtCertificate> {
    let n = h.outer_len();
    if !h.is_wheel() || n % 2 == 1 {
        return Err(Error::Precondition(
            "expected a wheel with an even number of rim vertices".into(),
        ));
    }
    let hub = n;
    let mut dirs = Directions::default();
    for i in 0..n {
        dirs.set(i, (i + 1) % n);
        dirs.set(i, hub);
    }
    let orientation = dirs.apply(h.graph())?;
    AtCertificate::certify(orientation, Construction::EvenRimWheel, limits)
}

/// Output of [`orient_layered_stripping`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stripped {
    pub orientation: Orientation,
    /// The peeling ended on a single unoriented edge, oriented toward its
    /// smaller endpoint.
    pub leftover_edge: bool,
}

/// Layered stripping orientation.
///
/// `outer` is either a cycle (when `g` also has the edge `last-first`) or a
/// path. Boundary edges go clockwise, each outer vertex points into its unique
/// non-boundary neighbour, and the remaining forest on the inner vertices is
/// peeled repeatedly: every current leaf points to its neighbour and is removed.
/// A final lone edge points to its smaller endpoint. Vertices that are isolated
/// in `g` play no role.
pub fn orient_layered_stripping(g: &Graph, outer: &[usize]) -> Result<Stripped> {
    let n = g.vertex_count();
    let shape = |msg: String| Error::Precondition(format!("layered stripping: {msg}"));
    if outer.len() < 2 {
        return Err(shape("outer sequence needs at least 2 vertices".into()));
    }
    let mut on_outer = vec![false; n];
    for &v in outer {
        if v >= n || std::mem::replace(&mut on_outer[v], true) {
            return Err(shape(format!("bad or repeated outer vertex {v}")));
        }
    }
    let closed = outer.len() >= 3 && g.has_edge(outer[outer.len() - 1], outer[0]);
    let mut dirs = Directions::default();
    for w in outer.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(shape(format!("missing boundary edge {}-{}", w[0], w[1])));
        }
        dirs.set(w[0], w[1]);
    }
    if closed {
        dirs.set(outer[outer.len() - 1], outer[0]);
    }

    let mut forest: Vec<(usize, usize)> = Vec::new();
    let mut spokes = vec![0usize; n];
    for &(a, b) in g.edges() {
        if dirs.contains(a, b) {
            continue;
        }
        match (on_outer[a], on_outer[b]) {
            (true, true) => return Err(shape(format!("chord {a}-{b} between outer vertices"))),
            (true, false) => {
                dirs.set(a, b);
                spokes[a] += 1;
            }
            (false, true) => {
                dirs.set(b, a);
                spokes[b] += 1;
            }
            (false, false) => forest.push((a, b)),
        }
    }
    if let Some(&v) = outer.iter().find(|&&v| spokes[v] != 1) {
        return Err(shape(format!("outer vertex {v} has {} inner neighbours", spokes[v])));
    }
    if !is_forest(n, &forest) {
        return Err(shape("inner edges contain a cycle".into()));
    }

    let mut leftover_edge = false;
    let mut pending = forest;
    while !pending.is_empty() {
        let mut degree = vec![0usize; n];
        for &(a, b) in &pending {
            degree[a] += 1;
            degree[b] += 1;
        }
        let mut next = Vec::with_capacity(pending.len());
        for (a, b) in pending {
            match (degree[a] == 1, degree[b] == 1) {
                (true, true) => {
                    leftover_edge = true;
                    dirs.set(a.max(b), a.min(b));
                }
                (true, false) => dirs.set(a, b),
                (false, true) => dirs.set(b, a),
                (false, false) => next.push((a, b)),
            }
        }
        pending = next;
    }
    Ok(Stripped {
        orientation: dirs.apply(g)?,
        leftover_edge,
    })
}

/// Odd fan: `v_i -> v_{i+1}`, `u -> v_1`, `v_j -> u` for `j >= 2`.
/// Every directed cycle uses `u -> v_1`, so the tally is `((k+1)/2, (k-1)/2)`.
pub fn orient_fan_odd(f: &Fan) -> Result<AtCertificate> {
    orient_fan_odd_with(f, &Limits::default())
}

pub fn orient_fan_odd_with(f: &Fan, limits: &Limits) -> Result<AtCertificate> {
    if f.k() % 2 == 0 {
        return Err(Error::Precondition(format!("fan rim has even length {}", f.k())));
    }
    AtCertificate::certify(odd_fan_orientation(f)?, Construction::OddFan, limits)
}

fn odd_fan_orientation(f: &Fan) -> Result<Orientation> {
    let (u, rim) = (f.hub(), f.rim());
    let mut dirs = Directions::default();
    for w in rim.windows(2) {
        dirs.set(w[0], w[1]);
    }
    dirs.set(u, rim[0]);
    for &v in &rim[1..] {
        dirs.set(v, u);
    }
    dirs.apply(&f.graph())
}

/// Acyclic fan: `v_i -> v_{i-1}` along the rim, every spoke into the hub.
pub fn orient_fan_acyclic(f: &Fan) -> Orientation {
    let mut dirs = Directions::default();
    for w in f.rim().windows(2) {
        dirs.set(w[1], w[0]);
    }
    for &v in f.rim() {
        dirs.set(v, f.hub());
    }
    dirs.apply(&f.graph()).expect("every fan edge is oriented")
}

/// Remainder orientation for an even fan split.
///
/// `segment` is `v_{k+1}, ..., v_n`; its path edges go `v_i -> v_{i-1}`. The
/// other non-isolated edges of `g2` must form a tree containing `v_n`, and are
/// oriented along the unique path toward `v_n`.
pub fn orient_remainder_paths(g2: &Graph, segment: &[usize]) -> Result<Orientation> {
    let n = g2.vertex_count();
    let shape = |msg: String| Error::Precondition(format!("remainder paths: {msg}"));
    let &root = segment.last().ok_or_else(|| shape("empty outer segment".into()))?;
    let mut dirs = Directions::default();
    for w in segment.windows(2) {
        if !g2.has_edge(w[0], w[1]) {
            return Err(shape(format!("missing segment edge {}-{}", w[0], w[1])));
        }
        dirs.set(w[1], w[0]);
    }
    let mut tree_adj = vec![Vec::new(); n];
    let mut tree_edges = 0;
    for &(a, b) in g2.edges() {
        if !dirs.contains(a, b) {
            tree_adj[a].push(b);
            tree_adj[b].push(a);
            tree_edges += 1;
        }
    }
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &tree_adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                dirs.set(w, v);
                queue.push_back(w);
            }
        }
    }
    let stranded = (0..n).any(|v| !seen[v] && !tree_adj[v].is_empty())
        || segment.iter().any(|&v| !seen[v]);
    if stranded || tree_edges != reached - 1 {
        return Err(shape("tree part is disconnected or not a tree".into()));
    }
    dirs.apply(g2)
}

/// One side of a composition: its vertex set and orientation.
#[derive(Debug, Clone)]
pub struct Part {
    pub vertices: Vec<usize>,
    pub orientation: Orientation,
}

/// Union of two oriented parts plus crossing arcs from `first` to `second`.
///
/// With every crossing arc pointing the same way no directed cycle meets both
/// parts, so the union is Alon-Tarsi exactly when both parts are.
pub fn combine(first: &Part, second: &Part, crossing: &[(usize, usize)]) -> Result<Orientation> {
    let n = [
        first.orientation.digraph().vertex_count(),
        second.orientation.digraph().vertex_count(),
        crossing.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0),
        first.vertices.iter().chain(&second.vertices).map(|&v| v + 1).max().unwrap_or(0),
    ]
    .into_iter()
    .max()
    .unwrap_or(0);
    let mut side = vec![0u8; n];
    for (tag, part) in [(1u8, first), (2u8, second)] {
        for &v in &part.vertices {
            if side[v] != 0 {
                return Err(Error::Precondition(format!("vertex {v} is in both parts")));
            }
            side[v] = tag;
        }
        for &(a, b) in part.orientation.arcs() {
            if side[a] != tag || side[b] != tag {
                return Err(Error::Precondition(format!(
                    "arc ({a}, {b}) leaves its part's vertex set"
                )));
            }
        }
    }
    for &(a, b) in crossing {
        match (side[a], side[b]) {
            (1, 2) => {}
            (2, 1) => {
                return Err(Error::Precondition(format!(
                    "crossing arc ({a}, {b}) points from the second part to the first"
                )))
            }
            _ => {
                return Err(Error::Precondition(format!(
                    "crossing arc ({a}, {b}) does not join the two parts"
                )))
            }
        }
    }
    let arcs = first
        .orientation
        .arcs()
        .iter()
        .chain(second.orientation.arcs())
        .chain(crossing)
        .copied();
    Orientation::from_digraph(Digraph::new(n, arcs)?)
}

/// Alon-Tarsi certificate for any Halin graph: maximum outdegree 3 for
/// even-order wheels, 2 otherwise.
pub fn construct_at_orientation(h: &HalinGraph) -> Result<AtCertificate> {
    construct_at_orientation_with(h, &Limits::default())
}

pub fn construct_at_orientation_with(h: &HalinGraph, limits: &Limits) -> Result<AtCertificate> {
    let n = h.outer_len();
    let (cert, bound) = if h.is_wheel() && h.order() % 2 == 0 {
        let order = degeneracy_ordering(h.graph());
        let orientation = acyclic_from_ordering(h.graph(), &order.order)?;
        (AtCertificate::certify(orientation, Construction::Degeneracy, limits)?, 3)
    } else if n % 2 == 0 {
        let cert = if h.is_wheel() {
            orient_wheel_even_rim_with(h, limits)?
        } else {
            let s = orient_layered_stripping(h.graph(), &h.outer())?;
            let tag = Construction::LayeredStripping {
                leftover_edge: s.leftover_edge,
            };
            AtCertificate::certify(s.orientation, tag, limits)?
        };
        (cert, 2)
    } else {
        let mut fans = special_inner_vertices(h)?
            .into_iter()
            .map(|u| fan_of(h, u))
            .collect::<Result<Vec<_>>>()?;
        fans.sort_by_key(|f| f.rim()[0]);
        let (orientation, tag) = match fans.iter().find(|f| f.k() % 2 == 1) {
            Some(odd) => split_odd_fan(h, odd)?,
            None => split_even_fan(h, &fans[0])?,
        };
        let orientation = in_edge_order(h.graph(), orientation.digraph())?;
        (AtCertificate::certify(orientation, tag, limits)?, 2)
    };
    if cert.max_outdeg() > bound {
        return Err(Error::VerificationFailed(format!(
            "{} certificate has max outdegree {} > {bound}",
            cert.construction(),
            cert.max_outdeg()
        )));
    }
    if !cert.orientation().digraph().is_orientation_of(h.graph()) {
        return Err(Error::VerificationFailed(format!(
            "{} certificate does not orient the Halin graph",
            cert.construction()
        )));
    }
    Ok(cert)
}

/// Fan side `{u, v_1..v_k}` (odd `k`) oriented as an odd fan, remainder by
/// layered stripping along `v_{k+1} .. v_n`, crossing arcs from the fan side.
fn split_odd_fan(h: &HalinGraph, fan: &Fan) -> Result<(Orientation, Construction)> {
    let split = split_at_fan(h, fan)?;
    let fan_side = Part {
        vertices: split.fan.vertices.clone(),
        orientation: odd_fan_orientation(fan)?,
    };
    let rest = orient_layered_stripping(&split.rest.graph, &split.frame[fan.k()..])?;
    let rest_side = Part {
        vertices: split.rest.vertices.clone(),
        orientation: rest.orientation,
    };
    let combined = combine(&fan_side, &rest_side, &split.crossing)?;
    Ok((
        combined,
        Construction::OddFanSplit {
            leftover_edge: rest.leftover_edge,
        },
    ))
}

/// Fan side (even `k`) oriented acyclically, remainder along tree paths into
/// `v_n`, crossing arcs from the remainder into the fan side.
fn split_even_fan(h: &HalinGraph, fan: &Fan) -> Result<(Orientation, Construction)> {
    let split = split_at_fan(h, fan)?;
    let fan_side = Part {
        vertices: split.fan.vertices.clone(),
        orientation: orient_fan_acyclic(fan),
    };
    let rest_side = Part {
        vertices: split.rest.vertices.clone(),
        orientation: orient_remainder_paths(&split.rest.graph, &split.frame[fan.k()..])?,
    };
    let reversed: Vec<_> = split.crossing.iter().map(|&(a, b)| (b, a)).collect();
    let combined = combine(&rest_side, &fan_side, &reversed)?;
    Ok((combined, Construction::EvenFanSplit))
}

/// Re-indexes the arcs of `d` to follow the edge order of `g`.
fn in_edge_order(g: &Graph, d: &Digraph) -> Result<Orientation> {
    let mut dirs = Directions::default();
    for &(a, b) in d.arcs() {
        dirs.set(a, b);
    }
    if dirs.len() != g.edge_count() {
        return Err(Error::NotAnOrientation(format!(
            "{} arcs for {} edges",
            dirs.len(),
            g.edge_count()
        )));
    }
    dirs.apply(g)
}

/// Chosen direction per undirected edge.
#[derive(Debug, Default)]
struct Directions(HashMap<(usize, usize), (usize, usize)>);

impl Directions {
    fn set(&mut self, tail: usize, head: usize) {
        self.0.insert((tail.min(head), tail.max(head)), (tail, head));
    }

    fn contains(&self, a: usize, b: usize) -> bool {
        self.0.contains_key(&(a.min(b), a.max(b)))
    }

    fn len(&self) -> usize {
        self.0.len()
    }

    /// Orientation of `g` with arcs in `g`'s edge order.
    fn apply(&self, g: &Graph) -> Result<Orientation> {
        let arcs = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                self.0.get(&(a.min(b), a.max(b))).copied().ok_or_else(|| {
                    Error::NotAnOrientation(format!("edge {a}-{b} left unoriented"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Orientation::new(g.clone(), Digraph::new(g.vertex_count(), arcs)?)
    }
}

fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    edges.iter().all(|&(a, b)| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
        ra != rb
    })
}
