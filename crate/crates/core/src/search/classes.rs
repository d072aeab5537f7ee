use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::garside::{to_super_summit, GarsideError, NormalForm, SuperSummitSet};

/// Identity of a search node. `Summit` keys are canonical; `Raw` keys are
/// used when the super summit set is over budget and only identify
/// classes reached through the same summit element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NodeKey {
    Summit(NormalForm),
    Raw(NormalForm),
}

/// Memoized conjugacy keys. Every element of every super summit set
/// computed so far points at its key, so a new word usually costs one
/// cycling/decycling pass.
#[derive(Debug, Default)]
pub struct ClassIndex {
    limit: usize,
    // summit element -> (key, d) with key = d⁻¹ · element · d
    known: HashMap<NormalForm, (NodeKey, Vec<i32>)>,
    // key -> [(e, g)] with e = g⁻¹ · key · g
    members: HashMap<NodeKey, Vec<(NormalForm, Vec<i32>)>>,
    overflows: usize,
}

fn reduce(letters: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &g in letters.iter() {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    *letters = out;
}

impl ClassIndex {
    pub fn new(limit: usize) -> Self {
        ClassIndex { limit, known: HashMap::new(), members: HashMap::new(), overflows: 0 }
    }

    /// Number of super summit sets that exceeded the sweep limit.
    pub fn overflows(&self) -> usize {
        self.overflows
    }

    /// The summit elements recorded for a key, each with `g` such that
    /// `element = g⁻¹ · key · g`.
    pub fn members(&self, key: &NodeKey) -> &[(NormalForm, Vec<i32>)] {
        self.members.get(key).map_or(&[], |m| m.as_slice())
    }

    /// The key of `word`'s class and `c` with `key = c⁻¹ · word · c`.
    pub fn key(&mut self, word: &BraidWord) -> (NodeKey, BraidWord) {
        let n = word.strands();
        let (summit, mut c) = to_super_summit(&NormalForm::of_word(word));
        if let Some((key, d)) = self.known.get(&summit) {
            c.extend_from_slice(d);
            reduce(&mut c);
            return (key.clone(), BraidWord::new(n, c).expect("generators of B_n"));
        }
        match SuperSummitSet::compute(word, self.limit) {
            Ok(set) => {
                let best = set.key();
                let key = NodeKey::Summit(best.normal_form().clone());
                let ck = best.conjugator().letters();
                let mut members = Vec::with_capacity(set.len());
                for e in set.elements() {
                    let mut d: Vec<i32> = e.conjugator.letters().iter().rev().map(|g| -g).collect();
                    d.extend_from_slice(ck);
                    reduce(&mut d);
                    members.push((e.element.clone(), d.iter().rev().map(|g| -g).collect()));
                    self.known.insert(e.element.clone(), (key.clone(), d));
                }
                self.members.insert(key.clone(), members);
                (key, best.conjugator().clone())
            }
            Err(GarsideError::SweepBudgetExceeded { .. }) => {
                self.overflows += 1;
                let key = NodeKey::Raw(summit.clone());
                self.known.insert(summit.clone(), (key.clone(), Vec::new()));
                self.members.insert(key, vec![(summit.clone(), Vec::new())]);
                reduce(&mut c);
                (NodeKey::Raw(summit), BraidWord::new(n, c).expect("generators of B_n"))
            }
            Err(GarsideError::Braid(e)) => unreachable!("valid word: {e}"),
        }
    }
}
