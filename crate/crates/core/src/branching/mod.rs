//! Branching analysis: orbit state graphs, expansion-cardinality
//! classification, null-infinite detection, the P_q set of unique-expansion
//! preimages inside J_q, and the membership criterion built on it.

pub mod graph;
pub mod tree;

use std::cmp::Ordering;

use serde_json::json;

use crate::algebraic::field::FieldElement;
use crate::constants;
use crate::error::{Error, Result};
use crate::expansions::{
    eval_word, in_range, j_interval, region, t_map, Base, Digit, EventuallyPeriodicWord, Region,
    Word,
};

pub use graph::{build_state_graph, classify_paths, vertex_cardinalities, Cardinality, StateGraph};
pub use tree::{export_tree, tree_to_dot, TreeExport, TreeLink, TreeMode, TreeNode};

/// Three-valued answer for questions that need a complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl std::fmt::Display for Answer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Answer::Yes => "Yes",
            Answer::No => "No",
            Answer::Unknown => "Unknown",
        };
        write!(f, "{s}")
    }
}

/// card Sigma_q(x): builds the orbit closure and classifies its paths.
/// An incomplete closure yields Unknown with the branching-state count seen
/// so far as a lower-bound diagnostic.
pub fn classify_expansions(
    base: &Base,
    x: &FieldElement,
    max_states: usize,
) -> Result<Cardinality> {
    let g = build_state_graph(base, x, max_states)?;
    Ok(classify_paths(&g))
}

/// Whether x is a q null infinite point: countably many expansions, and at
/// every branching state at least one of the two continuations has only
/// finitely many.
pub fn is_null_infinite(base: &Base, x: &FieldElement, max_states: usize) -> Result<Answer> {
    let g = build_state_graph(base, x, max_states)?;
    Ok(null_infinite_on_graph(&g))
}

/// Null-infinite test on an already-built complete graph.
pub fn null_infinite_on_graph(g: &StateGraph) -> Answer {
    if !g.is_complete() {
        return Answer::Unknown;
    }
    let cards = vertex_cardinalities(g).expect("complete graph");
    if cards[g.start()] != Cardinality::CountablyInfinite {
        return Answer::No;
    }
    for (v, out) in g.edges().iter().enumerate() {
        let _ = v;
        if out.len() == 2 && out.iter().all(|&(_, w)| cards[w].is_infinite()) {
            return Answer::No;
        }
    }
    Answer::Yes
}

/// P_q: the points of J_q whose image under T_0 or T_1 has a unique
/// expansion, found by enumerating preimages (u+d)/q of the unique-expansion
/// family. The family scan stops once both preimages certifiably leave J_q
/// (the family values are monotone); `family_hint` only sizes the defensive
/// cap on that scan.
pub fn p_q_set(base: &Base, family_hint: usize) -> Result<Vec<FieldElement>> {
    let generator = base.generator();
    if !base.in_unique_window()
        || generator.compare(&constants::q_f()) != Ordering::Less
    {
        return Err(Error::BaseOutOfRange(
            "P_q needs q strictly inside (golden, q_f)".into(),
        ));
    }
    let (jl, jr) = j_interval(base);
    let inv_q = base.q().inv().expect("q > 1");
    let mut out: Vec<FieldElement> = Vec::new();
    let push_preimages = |u: &FieldElement, out: &mut Vec<FieldElement>| {
        for d in [Digit::Zero, Digit::One] {
            let y = u
                .add_rational(&crate::algebraic::poly::Rational::from(
                    num_bigint::BigInt::from(d.value()),
                ))
                .mul(&inv_q);
            if y.compare(&jl) != Ordering::Less
                && y.compare(&jr) != Ordering::Greater
                && !out.iter().any(|z| z.compare(&y) == Ordering::Equal)
            {
                out.push(y);
            }
        }
    };
    // endpoints of I_q
    push_preimages(&base.zero(), &mut out);
    push_preimages(&base.i_right().clone(), &mut out);
    let cap = (4 * family_hint + 16).max(64);
    let ten = Word::parse("10").unwrap();
    // 0^k(10)^inf decreases to 0: both preimages eventually fall below J_q
    let mut k = 0usize;
    loop {
        let w = EventuallyPeriodicWord::new(Word(vec![Digit::Zero; k]), ten.clone()).unwrap();
        let u = eval_word(base, &w);
        push_preimages(&u, &mut out);
        let upper = u.add(&base.one()).mul(&inv_q);
        if upper.compare(&jl) == Ordering::Less {
            break;
        }
        k += 1;
        if k > cap {
            return Err(Error::BudgetExhausted(
                "family index cap hit while scanning P_q (raise the hint)".into(),
            ));
        }
    }
    // 1^k(10)^inf increases to 1/(q-1): preimages eventually exceed J_q
    let mut k = 0usize;
    loop {
        let w = EventuallyPeriodicWord::new(Word(vec![Digit::One; k]), ten.clone()).unwrap();
        let u = eval_word(base, &w);
        push_preimages(&u, &mut out);
        let lower = u.mul(&inv_q);
        if lower.compare(&jr) == Ordering::Greater {
            break;
        }
        k += 1;
        if k > cap {
            return Err(Error::BudgetExhausted(
                "family index cap hit while scanning P_q (raise the hint)".into(),
            ));
        }
    }
    out.sort_by(|a, b| a.compare(b));
    Ok(out)
}

/// Membership verdict for the countably-infinite base set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    In(FieldElement),
    NotIn,
    Unknown,
}

/// Decides whether some point has exactly countably many q-expansions, via
/// the criterion: q qualifies iff P_q contains a q null infinite point.
/// Valid (and enforced) only for q in [q_aleph0, q_f) with q != q_2.
pub fn b_aleph0_membership(base: &Base, max_states: usize) -> Result<Membership> {
    let g = base.generator();
    if g.compare(&constants::q_aleph0()) == Ordering::Less
        || g.compare(&constants::q_f()) != Ordering::Less
    {
        return Err(Error::BaseOutOfRange(
            "membership criterion holds for q in [q_aleph0, q_f)".into(),
        ));
    }
    if g.compare(&constants::q_2()) == Ordering::Equal {
        return Err(Error::BaseOutOfRange(
            "q_2 is excluded from the membership criterion".into(),
        ));
    }
    let points = p_q_set(base, 16)?;
    let mut saw_unknown = false;
    for p in points {
        match is_null_infinite(base, &p, max_states)? {
            Answer::Yes => return Ok(Membership::In(p)),
            Answer::No => {}
            Answer::Unknown => saw_unknown = true,
        }
    }
    Ok(if saw_unknown {
        Membership::Unknown
    } else {
        Membership::NotIn
    })
}

/// All length-n digit words along which the orbit of x stays in I_q,
/// lexicographically sorted.
pub fn enumerate_prefixes(base: &Base, x: &FieldElement, n: usize) -> Result<Vec<Word>> {
    if !in_range(base, x) {
        return Err(Error::OutOfRange);
    }
    fn rec(base: &Base, point: &FieldElement, left: usize, word: &mut Word, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(word.clone());
            return;
        }
        for d in [Digit::Zero, Digit::One] {
            let y = t_map(base, d, point);
            if in_range(base, &y) {
                word.push(d);
                rec(base, &y, left - 1, word, out);
                word.0.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(base, x, n, &mut Word::empty(), &mut out);
    Ok(out)
}

/// JSON form of a state graph:
/// `{states:[{rep, region}], edges:[[from,digit,to]], start, complete,
/// classification}`, with states listed in increasing value order.
pub fn graph_json(base: &Base, g: &StateGraph) -> serde_json::Value {
    let n = g.state_count();
    assert_eq!(g.states().len(), n, "graph JSON needs state values");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| g.states()[i].compare(&g.states()[j]));
    let mut pos = vec![0usize; n];
    for (new_idx, &old_idx) in order.iter().enumerate() {
        pos[old_idx] = new_idx;
    }
    let states: Vec<serde_json::Value> = order
        .iter()
        .map(|&i| {
            let x = &g.states()[i];
            json!({
                "rep": x.to_string(),
                "region": region_name(region(base, x)),
            })
        })
        .collect();
    let mut edges: Vec<[usize; 3]> = Vec::new();
    for (from, out) in g.edges().iter().enumerate() {
        for &(d, to) in out {
            edges.push([pos[from], d.value() as usize, pos[to]]);
        }
    }
    edges.sort_unstable();
    json!({
        "states": states,
        "edges": edges,
        "start": pos[g.start()],
        "complete": g.is_complete(),
        "classification": classify_paths(g).to_string(),
    })
}

fn region_name(r: Region) -> &'static str {
    match r {
        Region::BelowSwitch => "BelowSwitch",
        Region::Switch => "Switch",
        Region::AboveSwitch => "AboveSwitch",
        Region::OutOfRange => "OutOfRange",
    }
}
