//! Exact Alon-Tarsi numbers by exhaustive orientation search, chromatic
//! numbers, and the closed form for Halin graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eulerian::tally_eulerian_with;
use crate::graph::{Digraph, Graph, Orientation};
use crate::halin::HalinGraph;
use crate::orient::{acyclic_from_ordering, degeneracy_ordering, AtCertificate, Construction};
use crate::{check_cap, Error, Limits, Result};

/// Why no smaller value is possible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBoundReason {
    /// A clique of size `value` forces `chi >= value`, and `AT >= chi`.
    Chromatic,
    /// Exhaustive search found no Alon-Tarsi orientation with outdegree `value - 2`.
    ExhaustiveNoOrientation,
}

impl fmt::Display for LowerBoundReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerBoundReason::Chromatic => "chromatic",
            LowerBoundReason::ExhaustiveNoOrientation => "exhaustive-no-orientation",
        })
    }
}

/// `AT(G)` with a witness for the upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtResult {
    pub value: usize,
    pub lower_bound_reason: LowerBoundReason,
    pub witness: AtCertificate,
}

pub fn at_number_exact(g: &Graph) -> Result<AtResult> {
    at_number_exact_with(g, &Limits::default())
}

/// Smallest `k` such that some orientation with maximum outdegree `k - 1` is
/// Alon-Tarsi.
///
/// Starts at the larger of 2 and a greedy clique bound. For each budget the
/// degeneracy orientation is tried first (it is acyclic, hence Alon-Tarsi);
/// otherwise orientations within the budget are searched exhaustively and the
/// first Alon-Tarsi one found is returned.
pub fn at_number_exact_with(g: &Graph, limits: &Limits) -> Result<AtResult> {
    check_cap("search edge", limits.search_edges, g.edge_count())?;
    if g.edge_count() == 0 {
        let witness = AtCertificate::certify(
            g.as_stored_orientation(),
            Construction::Degeneracy,
            limits,
        )?;
        return Ok(AtResult {
            value: 1,
            lower_bound_reason: LowerBoundReason::Chromatic,
            witness,
        });
    }
    let start = greedy_clique(g).len().max(2);
    let degeneracy = degeneracy_ordering(g);
    for value in start.. {
        let budget = value - 1;
        let found = if budget >= degeneracy.degeneracy {
            let o = acyclic_from_ordering(g, &degeneracy.order)?;
            Some((o, Construction::Degeneracy))
        } else {
            find_at_orientation(g, budget, limits)?.map(|o| (o, Construction::Search))
        };
        if let Some((orientation, construction)) = found {
            let witness = AtCertificate::certify(orientation, construction, limits)?;
            let lower_bound_reason = if value == start {
                LowerBoundReason::Chromatic
            } else {
                LowerBoundReason::ExhaustiveNoOrientation
            };
            return Ok(AtResult {
                value,
                lower_bound_reason,
                witness,
            });
        }
    }
    unreachable!("the degeneracy budget always succeeds")
}

pub fn verify_no_at_orientation(g: &Graph, max_outdeg: usize) -> Result<bool> {
    verify_no_at_orientation_with(g, max_outdeg, &Limits::default())
}

/// True iff no orientation of `g` with maximum outdegree at most `max_outdeg`
/// is Alon-Tarsi, i.e. `AT(G) >= max_outdeg + 2`.
pub fn verify_no_at_orientation_with(g: &Graph, max_outdeg: usize, limits: &Limits) -> Result<bool> {
    check_cap("search edge", limits.search_edges, g.edge_count())?;
    if degeneracy_ordering(g).degeneracy <= max_outdeg {
        return Ok(false);
    }
    Ok(find_at_orientation(g, max_outdeg, limits)?.is_none())
}

/// First Alon-Tarsi orientation with maximum outdegree at most `budget`, in a
/// fixed search order, or `None` after exhausting all of them.
///
/// Edges are assigned one at a time, grouped by vertex; a direction is only
/// tried while its tail still has outdegree budget left.
pub fn find_at_orientation(g: &Graph, budget: usize, limits: &Limits) -> Result<Option<Orientation>> {
    check_cap("search edge", limits.search_edges, g.edge_count())?;
    let n = g.vertex_count();
    if g.edge_count() > n * budget {
        return Ok(None);
    }
    let rank = bfs_rank(g);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| if rank[a] > rank[b] { (a, b) } else { (b, a) })
        .collect();
    edges.sort_by_key(|&(late, early)| (rank[late], rank[early]));

    let mut search = OrientationSearch {
        n,
        edges: &edges,
        budget,
        out: vec![0; n],
        arcs: Vec::with_capacity(edges.len()),
        tally_arcs: limits.tally_arcs,
    };
    match search.run(0)? {
        Some(arcs) => {
            let d = Digraph::new(n, arcs)?;
            let arcs_in_edge_order = g.edges().iter().map(|&(a, b)| {
                if d.arcs().contains(&(a, b)) {
                    (a, b)
                } else {
                    (b, a)
                }
            });
            Ok(Some(Orientation::new(g.clone(), Digraph::new(n, arcs_in_edge_order)?)?))
        }
        None => Ok(None),
    }
}

struct OrientationSearch<'a> {
    n: usize,
    /// `(later, earlier)` in breadth-first rank.
    edges: &'a [(usize, usize)],
    budget: usize,
    out: Vec<usize>,
    arcs: Vec<(usize, usize)>,
    tally_arcs: usize,
}

impl OrientationSearch<'_> {
    fn run(&mut self, i: usize) -> Result<Option<Vec<(usize, usize)>>> {
        if i == self.edges.len() {
            let d = Digraph::new(self.n, self.arcs.iter().copied())?;
            let tally = tally_eulerian_with(&d, self.tally_arcs)?;
            return Ok(tally.is_alon_tarsi().then(|| self.arcs.clone()));
        }
        let (late, early) = self.edges[i];
        for (tail, head) in [(late, early), (early, late)] {
            if self.out[tail] < self.budget {
                self.out[tail] += 1;
                self.arcs.push((tail, head));
                let found = self.run(i + 1)?;
                self.arcs.pop();
                self.out[tail] -= 1;
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }
}

fn bfs_rank(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut rank = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if rank[s] != usize::MAX {
            continue;
        }
        rank[s] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if rank[w] == usize::MAX {
                    rank[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    rank
}

/// Largest clique found by greedy extension from every vertex.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = Vec::new();
    for seed in 0..n {
        let mut clique = vec![seed];
        for &v in &by_degree {
            if v != seed && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, &Limits::default())
}

/// Exact chromatic number: greedy clique lower bound, then backtracking
/// k-colourability for increasing k.
pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    let n = g.vertex_count();
    check_cap("chromatic vertex", limits.chromatic_vertices, n)?;
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = greedy_clique(g).len();
    (lower..=n)
        .find(|&k| colorable(g, &order, k))
        .ok_or_else(|| Error::VerificationFailed("no colouring with n colours".into()))
}

fn colorable(g: &Graph, order: &[usize], k: usize) -> bool {
    fn go(g: &Graph, order: &[usize], k: usize, i: usize, used: usize, colour: &mut [usize]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        // a fresh colour is interchangeable with any other fresh colour
        for c in 0..(used + 1).min(k) {
            if g.neighbors(v).iter().all(|&w| colour[w] != c) {
                colour[v] = c;
                if go(g, order, k, i + 1, used.max(c + 1), colour) {
                    return true;
                }
            }
        }
        colour[v] = usize::MAX;
        false
    }
    let mut colour = vec![usize::MAX; g.vertex_count()];
    go(g, order, k, 0, 0, &mut colour)
}

/// Degeneracy + 1, from the acyclic degeneracy orientation.
pub fn at_upper_bound_degeneracy(g: &Graph) -> usize {
    degeneracy_ordering(g).degeneracy + 1
}

/// 4 for wheels of even order, 3 for every other Halin graph.
pub fn halin_at_number(h: &HalinGraph) -> usize {
    if h.is_wheel() && h.order() % 2 == 0 {
        4
    } else {
        3
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halin::wheel;

    #[test]
    fn small_exact_values() {
        assert_eq!(at_number_exact(&Graph::complete(4)).unwrap().value, 4);
        assert_eq!(at_number_exact(wheel(4).unwrap().graph()).unwrap().value, 3);
        let edge = at_number_exact(&Graph::path(2)).unwrap();
        assert_eq!(edge.value, 2);
        assert_eq!(edge.witness.max_outdeg(), 1);
        assert_eq!(at_number_exact(&Graph::cycle(4).unwrap()).unwrap().value, 2);
        assert_eq!(at_number_exact(&Graph::cycle(3).unwrap()).unwrap().value, 3);
        assert_eq!(at_number_exact(&Graph::empty(3)).unwrap().value, 1);
    }

    #[test]
    fn even_cycle_needs_search() {
        // C4: degeneracy 2, but the cyclic orientation has diff 2
        let r = at_number_exact(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(r.witness.construction(), Construction::Search);
        assert_eq!(r.lower_bound_reason, LowerBoundReason::Chromatic);
        let odd = at_number_exact(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(odd.value, 3);
        assert_eq!(odd.lower_bound_reason, LowerBoundReason::ExhaustiveNoOrientation);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(wheel(5).unwrap().graph()).unwrap(), 4);
        assert_eq!(chromatic_number(wheel(6).unwrap().graph()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(4)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::cycle(7).unwrap()).unwrap(), 3);
        assert!(chromatic_number(&Graph::empty(17)).is_err());
    }

    #[test]
    fn lower_bound_checks() {
        assert!(verify_no_at_orientation(&Graph::complete(4), 2).unwrap());
        assert!(verify_no_at_orientation(wheel(5).unwrap().graph(), 2).unwrap());
        assert!(!verify_no_at_orientation(&Graph::path(2), 1).unwrap());
        assert!(!verify_no_at_orientation(wheel(6).unwrap().graph(), 2).unwrap());
    }

    #[test]
    fn degeneracy_bounds() {
        assert_eq!(at_upper_bound_degeneracy(wheel(7).unwrap().graph()), 4);
        assert_eq!(at_upper_bound_degeneracy(&Graph::path(5)), 2);
        assert_eq!(at_upper_bound_degeneracy(&Graph::cycle(6).unwrap()), 3);
    }

    #[test]
    fn closed_form() {
        assert_eq!(halin_at_number(&wheel(5).unwrap()), 4);
        assert_eq!(halin_at_number(&wheel(8).unwrap()), 3);
        assert_eq!(halin_at_number(&wheel(3).unwrap()), 4);
    }

    #[test]
    fn search_cap() {
        assert!(matches!(
            at_number_exact(&Graph::complete(7)),
            Err(Error::CapExceeded { what: "search edge", .. })
        ));
    }
}
