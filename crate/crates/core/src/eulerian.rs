//! Spanning Eulerian subdigraphs: even/odd tallies, directed cycles and the
//! graph-polynomial coefficient oracle.
//!
//! A spanning subdigraph `(V, S)` is Eulerian when every vertex has equal in-
//! and outdegree in `S`. It is even or odd by the parity of `|S|`; the empty
//! arc set always counts as even.

use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::graph::{Digraph, Orientation};
use crate::{check_cap, Error, Limits, Result};

/// Tallies are kept in 64-bit integers; beyond this many arcs they could overflow.
pub const MAX_TALLY_ARCS: usize = 62;

/// Even and odd counts of the spanning Eulerian subdigraphs of a digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TallyJson")]
pub struct EulerianTally {
    even: u64,
    odd: u64,
    diff: i64,
}

#[derive(Deserialize)]
struct TallyJson {
    even: u64,
    odd: u64,
    diff: i64,
}

impl TryFrom<TallyJson> for EulerianTally {
    type Error = Error;
    fn try_from(raw: TallyJson) -> Result<Self> {
        let tally = EulerianTally::new(raw.even, raw.odd);
        if tally.diff != raw.diff {
            return Err(Error::Parse(format!(
                "diff {} does not equal even - odd = {}",
                raw.diff, tally.diff
            )));
        }
        Ok(tally)
    }
}

impl EulerianTally {
    pub fn new(even: u64, odd: u64) -> Self {
        EulerianTally {
            even,
            odd,
            diff: even as i64 - odd as i64,
        }
    }

    pub fn even(&self) -> u64 {
        self.even
    }

    pub fn odd(&self) -> u64 {
        self.odd
    }

    pub fn diff(&self) -> i64 {
        self.diff
    }

    pub fn total(&self) -> u64 {
        self.even + self.odd
    }

    pub fn is_alon_tarsi(&self) -> bool {
        self.diff != 0
    }
}

/// Exact tally with the default arc cap.
pub fn tally_eulerian(d: &Digraph) -> Result<EulerianTally> {
    tally_eulerian_with(d, Limits::default().tally_arcs)
}

/// Exact tally of the spanning Eulerian subdigraphs of `d`.
///
/// Arcs are processed in an order grouped by vertex so that vertices retire
/// early. The search keeps, per partial arc selection, the vector of
/// `outdegree - indegree` imbalances on vertices that still have unprocessed
/// arcs; selections with identical imbalance vectors are merged, and a branch
/// is dropped as soon as some imbalance exceeds the number of arcs still able
/// to repair it. A retired vertex must be balanced.
pub fn tally_eulerian_with(d: &Digraph, arc_cap: usize) -> Result<EulerianTally> {
    check_cap("tally arc", arc_cap.min(MAX_TALLY_ARCS), d.arc_count())?;
    let arcs = d.arcs();
    let (local, width) = compress_vertices(d);
    let mut remaining = vec![0u32; width];
    for &(t, h) in arcs {
        remaining[local[t]] += 1;
        remaining[local[h]] += 1;
    }

    let mut layer: HashMap<Vec<i8>, [u64; 2]> = HashMap::new();
    layer.insert(vec![0; width], [1, 0]);
    for a in vertex_grouped_arc_order(d) {
        let (t, h) = (local[arcs[a].0], local[arcs[a].1]);
        remaining[t] -= 1;
        remaining[h] -= 1;
        let fits = |s: &[i8]| {
            s[t].unsigned_abs() as u32 <= remaining[t] && s[h].unsigned_abs() as u32 <= remaining[h]
        };
        let mut next: HashMap<Vec<i8>, [u64; 2]> = HashMap::with_capacity(layer.len() * 2);
        for (state, [even, odd]) in layer {
            let mut with = state.clone();
            with[t] += 1;
            with[h] -= 1;
            if fits(&with) {
                let slot = next.entry(with).or_insert([0, 0]);
                slot[0] += odd;
                slot[1] += even;
            }
            if fits(&state) {
                let slot = next.entry(state).or_insert([0, 0]);
                slot[0] += even;
                slot[1] += odd;
            }
        }
        layer = next;
    }
    let [even, odd] = layer.get(&vec![0; width]).copied().unwrap_or([0, 0]);
    Ok(EulerianTally::new(even, odd))
}

/// Reference tally visiting every arc subset in Gray-code order.
///
/// One arc changes per step and per-vertex imbalance counters are updated
/// incrementally. Runs in `2^m` steps; intended as a cross-check for small digraphs.
pub fn tally_eulerian_exhaustive(d: &Digraph, arc_cap: usize) -> Result<EulerianTally> {
    check_cap("exhaustive tally arc", arc_cap.min(MAX_TALLY_ARCS), d.arc_count())?;
    let arcs = d.arcs();
    let m = arcs.len();
    let mut imbalance = vec![0i32; d.vertex_count()];
    let mut unbalanced = 0usize;
    let mut member = vec![false; m];
    let mut size = 0usize;
    let (mut even, mut odd) = (1u64, 0u64);
    let bump = |v: usize, delta: i32, imbalance: &mut [i32], unbalanced: &mut usize| {
        let before = imbalance[v];
        imbalance[v] += delta;
        match (before == 0, imbalance[v] == 0) {
            (true, false) => *unbalanced += 1,
            (false, true) => *unbalanced -= 1,
            _ => {}
        }
    };
    for step in 1u64..(1u64 << m) {
        let a = step.trailing_zeros() as usize;
        let (t, h) = arcs[a];
        let delta = if member[a] { -1 } else { 1 };
        member[a] = !member[a];
        if member[a] {
            size += 1;
        } else {
            size -= 1;
        }
        bump(t, delta, &mut imbalance, &mut unbalanced);
        bump(h, -delta, &mut imbalance, &mut unbalanced);
        if unbalanced == 0 {
            if size % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    Ok(EulerianTally::new(even, odd))
}

/// `diff(D) != 0`.
pub fn is_alon_tarsi(d: &Digraph) -> Result<bool> {
    Ok(tally_eulerian(d)?.is_alon_tarsi())
}

pub fn is_alon_tarsi_with(d: &Digraph, limits: &Limits) -> Result<bool> {
    Ok(tally_eulerian_with(d, limits.tally_arcs)?.is_alon_tarsi())
}

/// True iff `d` has no directed cycle (Kahn's algorithm).
pub fn is_acyclic(d: &Digraph) -> bool {
    let n = d.vertex_count();
    let mut indeg = vec![0usize; n];
    for &(_, h) in d.arcs() {
        indeg[h] += 1;
    }
    let out = d.out_arcs();
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = ready.pop() {
        removed += 1;
        for &(w, _) in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    removed == n
}

/// A simple directed cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedCycle {
    /// Vertices in traversal order, starting from the smallest.
    pub vertices: Vec<usize>,
    /// Arc indices in traversal order (`arcs[i]` leaves `vertices[i]`).
    pub arcs: Vec<usize>,
}

impl DirectedCycle {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.arcs.len() % 2 == 1
    }

    pub fn contains_arc(&self, arc: usize) -> bool {
        self.arcs.contains(&arc)
    }

    /// Arc indices as a sorted set.
    pub fn arc_set(&self) -> Vec<usize> {
        let mut s = self.arcs.clone();
        s.sort_unstable();
        s
    }
}

/// All simple directed cycles of `d`, with the default cycle cap.
pub fn directed_cycles(d: &Digraph) -> Result<Vec<DirectedCycle>> {
    directed_cycles_with(d, Limits::default().cycles)
}

pub fn directed_cycles_with(d: &Digraph, cap: usize) -> Result<Vec<DirectedCycle>> {
    let mut found = Vec::new();
    visit_cycles(d, cap, |vertices, arcs| {
        found.push(DirectedCycle {
            vertices: vertices.to_vec(),
            arcs: arcs.to_vec(),
        });
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// Whether some simple directed cycle has odd length, by cycle enumeration.
pub fn has_odd_directed_cycle(d: &Digraph) -> Result<bool> {
    has_odd_directed_cycle_with(d, Limits::default().cycles)
}

pub fn has_odd_directed_cycle_with(d: &Digraph, cap: usize) -> Result<bool> {
    let mut odd = false;
    visit_cycles(d, cap, |_, arcs| {
        if arcs.len() % 2 == 1 {
            odd = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(odd)
}

/// Johnson's elementary circuit enumeration. Each cycle is reported once,
/// rooted at its smallest vertex. Errors once more than `cap` cycles are seen.
fn visit_cycles<F>(d: &Digraph, cap: usize, visit: F) -> Result<()>
where
    F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
{
    let out = d.out_arcs();
    let n = d.vertex_count();
    let mut search = Johnson {
        out: &out,
        start: 0,
        blocked: vec![false; n],
        blocked_by: vec![Vec::new(); n],
        vertices: Vec::new(),
        arcs: Vec::new(),
        seen: 0,
        cap,
        halt: None,
        visit,
    };
    for start in 0..n {
        search.start = start;
        for v in start..n {
            search.blocked[v] = false;
            search.blocked_by[v].clear();
        }
        search.circuit(start);
        match search.halt {
            Some(Halt::Cap) => {
                return Err(Error::CapExceeded {
                    what: "directed cycle",
                    limit: cap,
                    actual: search.seen,
                })
            }
            Some(Halt::Done) => return Ok(()),
            None => {}
        }
    }
    Ok(())
}

enum Halt {
    Cap,
    Done,
}

struct Johnson<'a, F> {
    out: &'a [Vec<(usize, usize)>],
    start: usize,
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<usize>>,
    vertices: Vec<usize>,
    arcs: Vec<usize>,
    seen: usize,
    cap: usize,
    halt: Option<Halt>,
    visit: F,
}

impl<F> Johnson<'_, F>
where
    F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
{
    fn unblock(&mut self, v: usize) {
        let mut pending = vec![v];
        while let Some(x) = pending.pop() {
            if !self.blocked[x] {
                continue;
            }
            self.blocked[x] = false;
            pending.append(&mut self.blocked_by[x]);
        }
    }

    fn circuit(&mut self, v: usize) -> bool {
        let out = self.out;
        let mut closed = false;
        self.vertices.push(v);
        self.blocked[v] = true;
        for &(w, a) in &out[v] {
            if self.halt.is_some() {
                break;
            }
            if w < self.start {
                continue;
            }
            if w == self.start {
                self.arcs.push(a);
                self.seen += 1;
                if self.seen > self.cap {
                    self.halt = Some(Halt::Cap);
                } else if (self.visit)(&self.vertices, &self.arcs).is_break() {
                    self.halt = Some(Halt::Done);
                }
                self.arcs.pop();
                closed = true;
            } else if !self.blocked[w] {
                self.arcs.push(a);
                if self.circuit(w) {
                    closed = true;
                }
                self.arcs.pop();
            }
        }
        if closed {
            self.unblock(v);
        } else {
            for &(w, _) in &out[v] {
                if w >= self.start && !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.vertices.pop();
        closed
    }
}

/// Coefficient of `prod_v x_v^{outdeg(v)}` in `prod_{(u,v)} (x_u - x_v)`,
/// with the default oracle cap.
pub fn poly_coefficient_oracle(d: &Orientation) -> Result<i64> {
    poly_coefficient_oracle_with(d, Limits::default().oracle_arcs)
}

/// Expands the product one linear factor at a time, keeping a sparse map from
/// exponent vectors to coefficients. Monomials whose exponent in some variable
/// already exceeds the target exponent can never reach the target and are
/// discarded.
pub fn poly_coefficient_oracle_with(d: &Orientation, arc_cap: usize) -> Result<i64> {
    let arcs = d.arcs();
    check_cap("oracle arc", arc_cap, arcs.len())?;
    let target: Vec<u8> = d
        .digraph()
        .out_degrees()
        .into_iter()
        .map(|k| k as u8)
        .collect();
    let mut poly: HashMap<Vec<u8>, i64> = HashMap::new();
    poly.insert(vec![0; target.len()], 1);
    for &(u, v) in arcs {
        let mut next: HashMap<Vec<u8>, i64> = HashMap::with_capacity(poly.len() * 2);
        for (mono, coeff) in poly {
            if mono[u] < target[u] {
                let mut m = mono.clone();
                m[u] += 1;
                *next.entry(m).or_insert(0) += coeff;
            }
            if mono[v] < target[v] {
                let mut m = mono;
                m[v] += 1;
                *next.entry(m).or_insert(0) -= coeff;
            }
        }
        next.retain(|_, c| *c != 0);
        poly = next;
    }
    Ok(poly.get(&target).copied().unwrap_or(0))
}

/// Maps the vertices that carry arcs to `0..width`, in first-seen order.
fn compress_vertices(d: &Digraph) -> (Vec<usize>, usize) {
    let mut local = vec![usize::MAX; d.vertex_count()];
    let mut width = 0;
    for &(t, h) in d.arcs() {
        for v in [t, h] {
            if local[v] == usize::MAX {
                local[v] = width;
                width += 1;
            }
        }
    }
    (local, width)
}

/// Arc indices sorted so that each vertex's arcs are processed close together:
/// vertices are ranked by a breadth-first traversal of the underlying graph and
/// arcs ordered by the later-ranked endpoint, then the earlier.
fn vertex_grouped_arc_order(d: &Digraph) -> Vec<usize> {
    let n = d.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &(t, h) in d.arcs() {
        adj[t].push(h);
        adj[h].push(t);
    }
    let mut rank = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if rank[s] != usize::MAX || adj[s].is_empty() {
            continue;
        }
        rank[s] = next;
        next += 1;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if rank[w] == usize::MAX {
                    rank[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..d.arc_count()).collect();
    order.sort_by_key(|&a| {
        let (t, h) = d.arcs()[a];
        (rank[t].max(rank[h]), rank[t].min(rank[h]), a)
    });
    order
}
