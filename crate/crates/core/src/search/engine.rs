use std::collections::HashMap;

use super::classes::{ClassIndex, NodeKey};
use super::{SearchBudget, SearchError, SearchOutcome};
use crate::braid::BraidWord;
use crate::moves::destab::candidates_from_roots;
use crate::moves::{
    apply_move, conjugation_moves, invert_moves, replay, Mode, Move,
    MoveCertificate,
};

struct Node {
    /// The literal word reached by replaying the edges from the root.
    word: BraidWord,
    /// `c` with `key = c⁻¹ · word · c`.
    conj: BraidWord,
    key: NodeKey,
    parent: Option<usize>,
    /// Moves from the parent's word to this word.
    edge: Vec<Move>,
}

struct Side {
    nodes: Vec<Node>,
    index: HashMap<NodeKey, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(root: &BraidWord, classes: &mut ClassIndex) -> Self {
        let (key, conj) = classes.key(root);
        let node = Node { word: root.clone(), conj, key: key.clone(), parent: None, edge: Vec::new() };
        Side {
            nodes: vec![node],
            index: HashMap::from([(key, 0)]),
            frontier: vec![0],
            depth: 0,
        }
    }

    /// Moves from the root word to the word of node `k`.
    fn path(&self, mut k: usize) -> Vec<Move> {
        let mut edges = Vec::new();
        while let Some(p) = self.nodes[k].parent {
            edges.push(&self.nodes[k].edge);
            k = p;
        }
        edges.into_iter().rev().flatten().cloned().collect()
    }
}

/// One Markov move away from the node, each with the moves leading there.
fn successors(node: &Node, classes: &ClassIndex, budget: &SearchBudget, mode: Mode) -> Vec<Vec<Move>> {
    let (word, conj) = (&node.word, &node.conj);
    let n = word.strands();
    let mut out = Vec::new();
    if n < budget.max_strands {
        let mut stabs = vec![Vec::new()];
        if !conj.is_empty() {
            stabs.push(conjugation_moves(conj).collect());
        }
        for prefix in stabs {
            let mut m = prefix.clone();
            m.push(Move::StabPos);
            out.push(m);
            if mode == Mode::Topological {
                let mut m = prefix;
                m.push(Move::StabNeg(n));
                out.push(m);
            }
        }
    }
    // summit elements as conjugates of the node word
    let roots = || {
        classes
            .members(&node.key)
            .iter()
            .map(|(e, g)| {
                let mut c = conj.letters().to_vec();
                c.extend_from_slice(g);
                (e.clone(), c)
            })
            .collect::<Vec<_>>()
    };
    let start = crate::garside::normal_form(word);
    let signs: &[i32] = if mode == Mode::Topological { &[1, -1] } else { &[1] };
    for &sign in signs {
        let found = candidates_from_roots(start.clone(), roots(), sign, budget.max_class_sweep);
        out.extend(found.iter().map(|c| c.moves()));
    }
    out
}

fn compact(word: BraidWord, moves: &mut Vec<Move>) -> BraidWord {
    let short = crate::garside::normal_form(&word).to_word();
    let reduced = word.free_reduce();
    let best = if short.len() < reduced.len() { short } else { reduced };
    if best != word {
        moves.push(Move::Rewrite(best.clone()));
    }
    best
}

fn certificate(
    a: &BraidWord,
    b: &BraidWord,
    forward: &Side,
    f: usize,
    backward: &Side,
    k: usize,
    mode: Mode,
) -> Result<MoveCertificate, SearchError> {
    let unverified = |e: String| SearchError::Unverified(e);
    let mut steps = forward.path(f);
    let fnode = &forward.nodes[f];
    let bnode = &backward.nodes[k];
    // word_b = d⁻¹ · word_f · d with d = c_f · c_b⁻¹
    let d = fnode
        .conj
        .compose(&bnode.conj.invert())
        .expect("same strand count")
        .free_reduce();
    steps.extend(conjugation_moves(&d));
    let back = backward.path(k);
    let at_meet = replay(a, &steps).map_err(|(i, e)| unverified(format!("step {i}: {e}")))?;
    if at_meet.last() != Some(&bnode.word) {
        steps.push(Move::Rewrite(bnode.word.clone()));
    }
    steps.extend(invert_moves(b, &back).map_err(|(i, e)| unverified(format!("step {i}: {e}")))?);
    let cert = MoveCertificate { mode, start: a.clone(), steps, end: b.clone() };
    cert.verify().map_err(|e| unverified(e.to_string()))?;
    Ok(cert)
}

pub(super) fn run(
    a: &BraidWord,
    b: &BraidWord,
    budget: &SearchBudget,
    mode: Mode,
) -> Result<SearchOutcome, SearchError> {
    if a == b {
        let cert = MoveCertificate { mode, start: a.clone(), steps: Vec::new(), end: b.clone() };
        return Ok(SearchOutcome::Found(cert));
    }
    let mut classes = ClassIndex::new(budget.max_class_sweep);
    let mut sides = [Side::new(a, &mut classes), Side::new(b, &mut classes)];
    let (ka, kb) = (sides[0].index.keys().next().cloned(), sides[1].index.keys().next().cloned());
    if ka == kb {
        return certificate(a, b, &sides[0], 0, &sides[1], 0, mode).map(SearchOutcome::Found);
    }

    let mut total = 2;
    loop {
        if sides[0].depth + sides[1].depth >= budget.max_moves {
            return Ok(SearchOutcome::NotFoundWithinBudget { nodes: total });
        }
        if sides.iter().any(|s| s.frontier.is_empty()) {
            return Ok(SearchOutcome::NotFoundWithinBudget { nodes: total });
        }
        let s = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        let (lo, hi) = sides.split_at_mut(1);
        let (this, other) = if s == 0 { (&mut lo[0], &hi[0]) } else { (&mut hi[0], &lo[0]) };

        let frontier = std::mem::take(&mut this.frontier);
        let mut next = Vec::new();
        for u in frontier {
            let word = this.nodes[u].word.clone();
            let succ = successors(&this.nodes[u], &classes, budget, mode);
            for mut edge in succ {
                let mut cur = word.clone();
                for m in &edge {
                    cur = apply_move(&cur, m).expect("generated moves are legal");
                }
                let cur = compact(cur, &mut edge);
                let (key, c) = classes.key(&cur);
                if this.index.contains_key(&key) {
                    continue;
                }
                this.nodes.push(Node { word: cur, conj: c, key: key.clone(), parent: Some(u), edge });
                let id = this.nodes.len() - 1;
                this.index.insert(key.clone(), id);
                total += 1;
                if let Some(&k) = other.index.get(&key) {
                    let cert = if s == 0 {
                        certificate(a, b, this, id, other, k, mode)
                    } else {
                        certificate(a, b, other, k, this, id, mode)
                    };
                    return cert.map(SearchOutcome::Found);
                }
                if total >= budget.max_nodes {
                    return Ok(SearchOutcome::NotFoundWithinBudget { nodes: total });
                }
                next.push(id);
            }
        }
        this.frontier = next;
        this.depth += 1;
    }
}

