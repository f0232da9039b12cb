//! Unrolls the orbit graph into the bifurcation tree of a point: nodes are
//! branching points (switch-region states), edges carry the digit words
//! between consecutive bifurcations. Pruned variants keep only children
//! whose subtree is infinite or uncountable.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::algebraic::field::FieldElement;
use crate::error::{Error, Result};
use crate::expansions::{follow_forced, in_range, t_map, Base, Digit, ForcedOutcome, Word};

use super::graph::{build_state_graph, vertex_cardinalities, Cardinality};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeMode {
    /// Bifurcate at every branching point.
    Full,
    /// Keep a child only if its subtree has infinitely many expansions.
    Infinite,
    /// Keep a child only if its subtree has uncountably many expansions.
    Continuum,
}

impl TreeMode {
    fn keeps(self, card: &Cardinality) -> bool {
        match self {
            TreeMode::Full => true,
            TreeMode::Infinite => card.is_infinite(),
            TreeMode::Continuum => *card == Cardinality::Uncountable,
        }
    }
}

/// Continuation of a kept branch: either the next branching point, or a
/// forced orbit that settles on a cycle and never branches again.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeLink {
    Node { word: Word, target: usize },
    Line { word: Word, cycle_length: usize },
}

#[derive(Debug, Clone)]
pub struct TreeNode {
    /// The branching point itself (a switch-region state).
    pub point: FieldElement,
    /// Cardinality of the expansion set of the point.
    pub cardinality: Cardinality,
    /// Bifurcation level below the root.
    pub depth: usize,
    /// Kept children, digit 0 first.
    pub children: Vec<(Digit, TreeLink)>,
    /// False when the node sits at the depth limit and was not expanded.
    pub expanded: bool,
}

#[derive(Debug, Clone)]
pub struct TreeExport {
    pub mode: TreeMode,
    pub depth_limit: usize,
    /// Forced digits from x to the root branching point (or the transient
    /// digits of the whole orbit when x never branches).
    pub prefix: Word,
    /// Index of the root node; None when the tree is a single infinite line.
    pub root: Option<usize>,
    /// Cycle length of the forced orbit when the tree is a line.
    pub root_cycle: Option<usize>,
    pub nodes: Vec<TreeNode>,
}

impl TreeExport {
    /// Nodes sitting at the depth limit (the unexpanded frontier).
    pub fn leaves_at_limit(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.depth == self.depth_limit && !n.expanded)
            .count()
    }
}

/// Unrolls the branching tree of x to `depth` bifurcation levels.
///
/// Pruning modes need exact subtree classifications, so they require the
/// orbit closure to complete within `max_states`.
pub fn export_tree(
    base: &Base,
    x: &FieldElement,
    mode: TreeMode,
    depth: usize,
    max_states: usize,
) -> Result<TreeExport> {
    if !in_range(base, x) {
        return Err(Error::OutOfRange);
    }
    let g = build_state_graph(base, x, max_states)?;
    let cards = if g.is_complete() {
        Some(vertex_cardinalities(&g).expect("complete graph"))
    } else if mode == TreeMode::Full {
        None
    } else {
        return Err(Error::IncompleteGraph(format!(
            "pruning needs classifications, but the closure exceeded {max_states} states"
        )));
    };
    let card_of = |point: &FieldElement| -> Cardinality {
        match (&cards, g.index_of(point)) {
            (Some(cards), Some(i)) => cards[i].clone(),
            _ => Cardinality::Unknown("incomplete graph".into()),
        }
    };
    let budget = max_states + 2;
    let walk = |point: &FieldElement| follow_forced(base, point, budget);

    let mut export = TreeExport {
        mode,
        depth_limit: depth,
        prefix: Word::empty(),
        root: None,
        root_cycle: None,
        nodes: Vec::new(),
    };
    match walk(x)? {
        ForcedOutcome::Cycle {
            prefix,
            cycle_length,
        } => {
            export.prefix = prefix;
            export.root_cycle = Some(cycle_length);
            return Ok(export);
        }
        ForcedOutcome::Truncated { .. } => {
            return Err(Error::IncompleteGraph(
                "forced walk exhausted its budget".into(),
            ));
        }
        ForcedOutcome::HitSwitch { prefix, point } => {
            export.prefix = prefix;
            let card = card_of(&point);
            export.nodes.push(TreeNode {
                point,
                cardinality: card,
                depth: 0,
                children: Vec::new(),
                expanded: false,
            });
            export.root = Some(0);
        }
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(id) = queue.pop_front() {
        if export.nodes[id].depth >= depth {
            continue;
        }
        export.nodes[id].expanded = true;
        let node_point = export.nodes[id].point.clone();
        let node_depth = export.nodes[id].depth;
        for d in [Digit::Zero, Digit::One] {
            let child_start = t_map(base, d, &node_point);
            debug_assert!(in_range(base, &child_start));
            if !mode.keeps(&card_of(&child_start)) {
                continue;
            }
            let link = match walk(&child_start)? {
                ForcedOutcome::HitSwitch { prefix, point } => {
                    let mut word = Word(vec![d]);
                    word = word.concat(&prefix);
                    let card = card_of(&point);
                    let target = export.nodes.len();
                    export.nodes.push(TreeNode {
                        point,
                        cardinality: card,
                        depth: node_depth + 1,
                        children: Vec::new(),
                        expanded: false,
                    });
                    queue.push_back(target);
                    TreeLink::Node { word, target }
                }
                ForcedOutcome::Cycle {
                    prefix,
                    cycle_length,
                } => {
                    let mut word = Word(vec![d]);
                    word = word.concat(&prefix);
                    TreeLink::Line { word, cycle_length }
                }
                ForcedOutcome::Truncated { .. } => {
                    return Err(Error::IncompleteGraph(
                        "forced walk exhausted its budget".into(),
                    ));
                }
            };
            export.nodes[id].children.push((d, link));
        }
    }
    Ok(export)
}

/// DOT rendering: node label = 6-digit decimal approximation plus the exact
/// representative; edge label = the digit word of the transition. The digit
/// 0 branch is listed first.
pub fn tree_to_dot(export: &TreeExport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph branching_tree {{");
    let _ = writeln!(s, "  rankdir=LR;");
    let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
    let _ = writeln!(s, "  x [shape=plaintext, label=\"x\"];");
    match export.root {
        None => {
            let cycle = export.root_cycle.unwrap_or(0);
            let _ = writeln!(
                s,
                "  line0 [shape=plaintext, label=\"unique continuation (cycle {cycle})\"];"
            );
            let _ = writeln!(s, "  x -> line0 [label=\"{}\"];", export.prefix);
        }
        Some(root) => {
            let mut lines = 0usize;
            for (id, node) in export.nodes.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  n{id} [label=\"{}\\n{}\\n{}\"{}];",
                    node.point.to_decimal(6),
                    escape(&node.point.to_string()),
                    node.cardinality,
                    if node.expanded || node.depth < export.depth_limit {
                        ""
                    } else {
                        ", style=dashed"
                    }
                );
            }
            let _ = writeln!(s, "  x -> n{root} [label=\"{}\"];", export.prefix);
            for (id, node) in export.nodes.iter().enumerate() {
                for (_, link) in &node.children {
                    match link {
                        TreeLink::Node { word, target } => {
                            let _ = writeln!(s, "  n{id} -> n{target} [label=\"{word}\"];");
                        }
                        TreeLink::Line { word, cycle_length } => {
                            lines += 1;
                            let _ = writeln!(
                                s,
                                "  line{lines} [shape=plaintext, label=\"unique continuation (cycle {cycle_length})\"];"
                            );
                            let _ = writeln!(s, "  n{id} -> line{lines} [label=\"{word}\"];");
                        }
                    }
                }
            }
        }
    }
    let _ = writeln!(s, "}}");
    s
}

fn escape(label: &str) -> String {
    label.replace('"', "\\\"")
}
