//! Finite state graphs of orbit closures and the path-cardinality
//! classifier. Infinite paths from the start state are in bijection with
//! the expansions of the start point, so counting paths classifies
//! card Sigma_q(x).

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebraic::field::{ElementSet, FieldElement};
use crate::error::{Error, Result};
use crate::expansions::{in_range, region, t_map, Base, Digit, Region};

/// How many expansions a point has. `Uncountable` always means the
/// continuum: the classifier never produces an intermediate uncountable
/// cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cardinality {
    Finite(BigUint),
    CountablyInfinite,
    Uncountable,
    Unknown(String),
}

impl Cardinality {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Cardinality::CountablyInfinite | Cardinality::Uncountable)
    }

    pub fn is_definite(&self) -> bool {
        !matches!(self, Cardinality::Unknown(_))
    }

    /// Short tag used in CLI/JSON output.
    pub fn tag(&self) -> &'static str {
        match self {
            Cardinality::Finite(_) => "Finite",
            Cardinality::CountablyInfinite => "CountablyInfinite",
            Cardinality::Uncountable => "Uncountable",
            Cardinality::Unknown(_) => "Unknown",
        }
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(k) => write!(f, "Finite({k})"),
            Cardinality::CountablyInfinite => write!(f, "CountablyInfinite"),
            Cardinality::Uncountable => write!(f, "Uncountable"),
            Cardinality::Unknown(reason) => write!(f, "Unknown({reason})"),
        }
    }
}

/// The closure of a point under the admissible digit maps, deduplicated by
/// exact value. Out-degree is 1 outside the switch region and 2 inside it.
#[derive(Debug)]
pub struct StateGraph {
    states: ElementSet,
    edges: Vec<Vec<(Digit, usize)>>,
    start: usize,
    complete: bool,
    frontier: Vec<usize>,
}

impl StateGraph {
    pub fn state_count(&self) -> usize {
        self.edges.len()
    }

    /// State values in discovery order; empty for synthetic graphs.
    pub fn states(&self) -> &[FieldElement] {
        self.states.elements()
    }

    pub fn edges(&self) -> &[Vec<(Digit, usize)>] {
        &self.edges
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn frontier(&self) -> &[usize] {
        &self.frontier
    }

    pub fn index_of(&self, x: &FieldElement) -> Option<usize> {
        self.states.index_of(x)
    }

    /// Number of explored states with two outgoing edges.
    pub fn branching_state_count(&self) -> usize {
        self.edges.iter().filter(|e| e.len() == 2).count()
    }

    /// A bare labeled digraph, for classifier tests on synthetic inputs.
    /// Edge labels on a vertex must be distinct; targets must be in range.
    pub fn synthetic(edges: Vec<Vec<(Digit, usize)>>, start: usize) -> StateGraph {
        let n = edges.len();
        assert!(start < n, "start out of range");
        for out in &edges {
            assert!(!out.is_empty() && out.len() <= 2, "out-degree must be 1 or 2");
            assert!(out.iter().all(|&(_, t)| t < n), "edge target out of range");
            if out.len() == 2 {
                assert_ne!(out[0].0, out[1].0, "duplicate digit label");
            }
        }
        StateGraph {
            states: ElementSet::new(),
            edges,
            start,
            complete: true,
            frontier: Vec::new(),
        }
    }
}

/// Breadth-first closure of x under the maps that keep the orbit in I_q.
pub fn build_state_graph(base: &Base, x: &FieldElement, max_states: usize) -> Result<StateGraph> {
    assert!(max_states >= 1);
    if !in_range(base, x) {
        return Err(Error::OutOfRange);
    }
    let mut states = ElementSet::new();
    let mut edges: Vec<Vec<(Digit, usize)>> = Vec::new();
    let (start, _) = states.insert(x.clone());
    edges.push(Vec::new());
    let mut queue = std::collections::VecDeque::from([start]);
    let mut complete = true;
    while let Some(idx) = queue.pop_front() {
        if states.len() > max_states {
            complete = false;
            let mut frontier: Vec<usize> = queue.into_iter().collect();
            frontier.push(idx);
            frontier.sort_unstable();
            return Ok(StateGraph {
                states,
                edges,
                start,
                complete,
                frontier,
            });
        }
        let point = states.get(idx).clone();
        debug_assert_eq!(
            region(base, &point) == Region::Switch,
            both_maps_stay(base, &point),
        );
        for d in [Digit::Zero, Digit::One] {
            let y = t_map(base, d, &point);
            if !in_range(base, &y) {
                continue;
            }
            let (j, new) = states.insert(y);
            if new {
                edges.push(Vec::new());
                queue.push_back(j);
            }
            edges[idx].push((d, j));
        }
        debug_assert!(!edges[idx].is_empty(), "every state in I_q has a successor");
    }
    Ok(StateGraph {
        states,
        edges,
        start,
        complete,
        frontier: Vec::new(),
    })
}

fn both_maps_stay(base: &Base, x: &FieldElement) -> bool {
    [Digit::Zero, Digit::One]
        .into_iter()
        .all(|d| in_range(base, &t_map(base, d, x)))
}

/// Strongly connected components, iterative Tarjan. Components are emitted
/// with successors first (reverse topological order of the condensation).
fn tarjan_scc(edges: &[Vec<(Digit, usize)>]) -> (Vec<usize>, usize) {
    let n = edges.len();
    let mut scc_of = vec![usize::MAX; n];
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut scc_count = 0usize;

    // explicit DFS frames: (vertex, next edge position)
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei < edges[v].len() {
                let (_, w) = edges[v][*ei];
                *ei += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&mut (parent, _)) = call.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        scc_of[w] = scc_count;
                        if w == v {
                            break;
                        }
                    }
                    scc_count += 1;
                }
            }
        }
    }
    (scc_of, scc_count)
}

struct Analysis {
    scc_of: Vec<usize>,
    /// SCC contains a cycle (size >= 2 or a self-loop).
    cyclic: Vec<bool>,
    /// Vertices of each SCC, component index ascending.
    by_scc: Vec<Vec<usize>>,
    /// Some SCC reachable from here (including itself) is not a simple cycle.
    sees_uncountable: Vec<bool>,
    /// Some cycle vertex reachable from here has full out-degree 2.
    sees_branch_cycle: Vec<bool>,
}

fn analyze(edges: &[Vec<(Digit, usize)>]) -> Analysis {
    let n = edges.len();
    let (scc_of, scc_count) = tarjan_scc(edges);
    let mut size = vec![0usize; scc_count];
    for v in 0..n {
        size[scc_of[v]] += 1;
    }
    let mut cyclic = vec![false; scc_count];
    let mut non_simple = vec![false; scc_count];
    let mut branch_on_cycle = vec![false; scc_count];
    for v in 0..n {
        let c = scc_of[v];
        let internal = edges[v].iter().filter(|&&(_, w)| scc_of[w] == c).count();
        if internal >= 1 && (size[c] >= 2 || edges[v].iter().any(|&(_, w)| w == v)) {
            cyclic[c] = true;
        }
        if internal >= 2 {
            non_simple[c] = true;
        }
    }
    for v in 0..n {
        let c = scc_of[v];
        if cyclic[c] && edges[v].len() == 2 {
            branch_on_cycle[c] = true;
        }
    }
    // propagate along the condensation in successors-first component order
    let mut by_scc: Vec<Vec<usize>> = vec![Vec::new(); scc_count];
    for v in 0..n {
        by_scc[scc_of[v]].push(v);
    }
    let mut sees_uncountable = non_simple;
    let mut sees_branch_cycle = branch_on_cycle;
    for c in 0..scc_count {
        for &v in &by_scc[c] {
            for &(_, w) in &edges[v] {
                let cw = scc_of[w];
                if cw != c {
                    debug_assert!(cw < c, "tarjan emits successors first");
                    if sees_uncountable[cw] {
                        sees_uncountable[c] = true;
                    }
                    if sees_branch_cycle[cw] {
                        sees_branch_cycle[c] = true;
                    }
                }
            }
        }
    }
    Analysis {
        scc_of,
        cyclic,
        by_scc,
        sees_uncountable,
        sees_branch_cycle,
    }
}

/// Exact cardinality of the set of infinite paths from every vertex.
/// Requires a complete graph.
pub fn vertex_cardinalities(g: &StateGraph) -> Result<Vec<Cardinality>> {
    if !g.complete {
        return Err(Error::IncompleteGraph(format!(
            "{} states explored, {} unexpanded",
            g.state_count(),
            g.frontier.len()
        )));
    }
    let edges = &g.edges;
    let n = edges.len();
    let a = analyze(edges);
    // finite path counts, vertices grouped by SCC in successors-first order
    let mut count: Vec<Option<BigUint>> = vec![None; n];
    for (c, members) in a.by_scc.iter().enumerate() {
        if a.sees_uncountable[c] || a.sees_branch_cycle[c] {
            continue;
        }
        for &v in members {
            let k = if a.cyclic[c] {
                // locked on a simple cycle with no exits: one path
                BigUint::one()
            } else {
                let mut sum = BigUint::zero();
                for &(_, w) in &edges[v] {
                    sum += count[w]
                        .as_ref()
                        .expect("successor counted first")
                        .clone();
                }
                sum
            };
            count[v] = Some(k);
        }
    }
    Ok((0..n)
        .map(|v| {
            let c = a.scc_of[v];
            if a.sees_uncountable[c] {
                Cardinality::Uncountable
            } else if a.sees_branch_cycle[c] {
                Cardinality::CountablyInfinite
            } else {
                Cardinality::Finite(count[v].clone().expect("finite vertex counted"))
            }
        })
        .collect())
}

/// Classification of the infinite-path set from the start state:
/// uncountable iff some reachable component is not a simple cycle,
/// else countably infinite iff some cycle vertex can also exit,
/// else the exact finite path count.
pub fn classify_paths(g: &StateGraph) -> Cardinality {
    if !g.complete {
        return Cardinality::Unknown(format!(
            "incomplete graph: {} states explored, {} branching states found",
            g.state_count(),
            g.branching_state_count()
        ));
    }
    vertex_cardinalities(g)
        .map(|cards| cards[g.start].clone())
        .expect("complete graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synth(edges: Vec<Vec<(u8, usize)>>, start: usize) -> StateGraph {
        let conv = edges
            .into_iter()
            .map(|out| {
                out.into_iter()
                    .map(|(d, t)| {
                        (
                            if d == 0 { Digit::Zero } else { Digit::One },
                            t,
                        )
                    })
                    .collect()
            })
            .collect();
        StateGraph::synthetic(conv, start)
    }

    fn finite(k: u64) -> Cardinality {
        Cardinality::Finite(BigUint::from(k))
    }

    #[test]
    fn single_self_loop_is_one_path() {
        let g = synth(vec![vec![(0, 0)]], 0);
        assert_eq!(classify_paths(&g), finite(1));
    }

    #[test]
    fn double_self_loop_is_the_full_shift() {
        let g = synth(vec![vec![(0, 0), (1, 0)]], 0);
        assert_eq!(classify_paths(&g), Cardinality::Uncountable);
    }

    #[test]
    fn branch_into_two_cycles_counts_two() {
        // 0 -> {1, 2}; 1 and 2 are disjoint self-loops
        let g = synth(vec![vec![(0, 1), (1, 2)], vec![(0, 1)], vec![(1, 2)]], 0);
        assert_eq!(classify_paths(&g), finite(2));
    }

    #[test]
    fn exit_from_cycle_is_countable() {
        // 0 on a self-loop with an exit to a terminal loop
        let g = synth(vec![vec![(0, 0), (1, 1)], vec![(0, 1)]], 0);
        assert_eq!(classify_paths(&g), Cardinality::CountablyInfinite);
    }

    #[test]
    fn two_cycles_through_one_vertex_is_uncountable() {
        // 0 -> 1 -> 0 and 0 -> 0: two distinct cycles at vertex 0
        let g = synth(vec![vec![(0, 0), (1, 1)], vec![(0, 0)]], 0);
        assert_eq!(classify_paths(&g), Cardinality::Uncountable);
    }

    #[test]
    fn transient_chain_multiplies_entries() {
        // 0 branches to 1 and 2; both feed the same terminal cycle {3,4}:
        // two distinct transient routes, then locked
        let g = synth(
            vec![
                vec![(0, 1), (1, 2)],
                vec![(0, 3)],
                vec![(0, 3)],
                vec![(0, 4)],
                vec![(1, 3)],
            ],
            0,
        );
        assert_eq!(classify_paths(&g), finite(2));
    }

    #[test]
    fn uncountable_dominates_countable() {
        // start sees a countable structure that later reaches a double loop
        let g = synth(
            vec![
                vec![(0, 0), (1, 1)], // cycle with exit: countable so far
                vec![(0, 2)],
                vec![(0, 2), (1, 2)], // full shift
            ],
            0,
        );
        assert_eq!(classify_paths(&g), Cardinality::Uncountable);
    }

    #[test]
    fn per_vertex_cardinalities() {
        let g = synth(
            vec![
                vec![(0, 0), (1, 1)], // countable: loop with exit to finite
                vec![(0, 1)],         // finite: terminal loop
            ],
            0,
        );
        let cards = vertex_cardinalities(&g).unwrap();
        assert_eq!(cards[0], Cardinality::CountablyInfinite);
        assert_eq!(cards[1], finite(1));
    }

    #[test]
    fn incomplete_graph_is_unknown() {
        let g = StateGraph {
            states: ElementSet::new(),
            edges: vec![vec![(Digit::Zero, 0)]],
            start: 0,
            complete: false,
            frontier: vec![0],
        };
        assert!(matches!(classify_paths(&g), Cardinality::Unknown(_)));
        assert!(vertex_cardinalities(&g).is_err());
    }
}
