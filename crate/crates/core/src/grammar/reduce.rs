//! Planar reduction search over a sequence of word types.
//!
//! Every simple factor of every word is a *wire*. A reduction pairs wires
//! `(i, j)` with `i < j` whenever the factors cancel (`x^l · x` or
//! `x · x^r`, and their iterates) after everything strictly between them has
//! already cancelled. Such pairings never cross, and the unpaired wires, read
//! left to right, form the result type.
//!
//! Among all reductions the search returns the one whose pairings have the
//! smallest total span (sum of `right - left`), found by dynamic programming
//! over wire intervals. Short spans mean every modifier attaches to the
//! nearest possible head. Ties go to keeping a wire open, then to the
//! nearest partner.

use alloc::vec::Vec;

use super::lexicon::Category;
use super::types::{BasicType, PregroupType, SimpleType};
use super::GrammarError;

/// One simple factor of one word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wire {
    /// Index of the owning word.
    pub token: usize,
    /// Position of the factor inside the word's type.
    pub slot: usize,
    /// The simple type on the wire.
    pub simple: SimpleType,
}

/// A cancellation between two wires (a cup under the sentence).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pairing {
    /// Left wire index.
    pub left: usize,
    /// Right wire index.
    pub right: usize,
}

/// A Frobenius copy point placed on the noun wires of a relative pronoun.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyNode {
    /// Index of the relative pronoun.
    pub token: usize,
    /// Noun wires joined by the copy.
    pub wires: Vec<usize>,
}

/// A unit discarding the sentence wire of an embedded clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitNode {
    /// Index of the relative pronoun.
    pub token: usize,
    /// The sentence-typed wire being discarded.
    pub wire: usize,
}

/// The outcome of a successful reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    wires: Vec<Wire>,
    pairings: Vec<Pairing>,
    copy_nodes: Vec<CopyNode>,
    unit_nodes: Vec<UnitNode>,
    open: Vec<usize>,
    result_type: PregroupType,
}

impl ReductionPlan {
    /// All wires in sentence order.
    pub fn wires(&self) -> &[Wire] {
        &self.wires
    }

    /// Cancellations, ordered by right wire (the order they were applied).
    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    /// Copy points introduced by relative pronouns.
    pub fn copy_nodes(&self) -> &[CopyNode] {
        &self.copy_nodes
    }

    /// Unit insertions introduced by relative pronouns.
    pub fn unit_nodes(&self) -> &[UnitNode] {
        &self.unit_nodes
    }

    /// Wires left uncancelled.
    pub fn open_wires(&self) -> &[usize] {
        &self.open
    }

    /// Type of the uncancelled wires.
    pub fn result_type(&self) -> &PregroupType {
        &self.result_type
    }

    /// The wire cancelled against `wire`, if any.
    pub fn partner(&self, wire: usize) -> Option<usize> {
        self.pairings.iter().find_map(|p| {
            if p.left == wire {
                Some(p.right)
            } else if p.right == wire {
                Some(p.left)
            } else {
                None
            }
        })
    }

    /// Index of the wire at `slot` of word `token`.
    pub fn wire_index(&self, token: usize, slot: usize) -> Option<usize> {
        self.wires.iter().position(|w| w.token == token && w.slot == slot)
    }

    /// Replays the pairings as literal cancellations on the concatenated
    /// type and returns what is left.
    ///
    /// Fails if a pairing does not cancel or if a pairing is applied while
    /// something between its wires is still present.
    pub fn replay(&self) -> Result<PregroupType, GrammarError> {
        let mut alive: Vec<bool> = alloc::vec![true; self.wires.len()];
        for p in &self.pairings {
            let (l, r) = (p.left, p.right);
            let ok = l < r
                && r < self.wires.len()
                && alive[l]
                && alive[r]
                && alive[l + 1..r].iter().all(|a| !a)
                && self.wires[l].simple.contracts_with(self.wires[r].simple);
            if !ok {
                return Err(GrammarError::InvalidPlan);
            }
            alive[l] = false;
            alive[r] = false;
        }
        Ok(PregroupType::new(
            self.wires
                .iter()
                .zip(&alive)
                .filter(|(_, a)| **a)
                .map(|(w, _)| w.simple)
                .collect(),
        ))
    }

    /// Whether no two pairings cross.
    pub fn is_planar(&self) -> bool {
        self.pairings.iter().all(|a| {
            self.pairings
                .iter()
                .all(|b| !(a.left < b.left && b.left < a.right && a.right < b.right))
        })
    }

    /// Records copy and unit nodes for every relative pronoun.
    pub fn annotate_relative_pronouns(&mut self, categories: &[Category]) {
        self.copy_nodes.clear();
        self.unit_nodes.clear();
        for (token, category) in categories.iter().enumerate() {
            if !category.is_relative_pronoun() {
                continue;
            }
            let wires: Vec<usize> = self
                .wires
                .iter()
                .enumerate()
                .filter(|(_, w)| w.token == token && w.simple.base() == BasicType::Noun)
                .map(|(i, _)| i)
                .collect();
            self.copy_nodes.push(CopyNode { token, wires });
            if let Some(i) = self
                .wires
                .iter()
                .position(|w| w.token == token && w.simple.base() == BasicType::Sentence)
            {
                self.unit_nodes.push(UnitNode { token, wire: i });
            }
        }
    }
}

/// Reduces the concatenation of `types` to the sentence type `s`.
pub fn reduce(types: &[PregroupType]) -> Result<ReductionPlan, GrammarError> {
    reduce_to(types, &PregroupType::sentence())
}

/// Reduces the concatenation of `types` to `target` (use the empty type for
/// a full cancellation).
pub fn reduce_to(types: &[PregroupType], target: &PregroupType) -> Result<ReductionPlan, GrammarError> {
    if types.is_empty() {
        return Err(GrammarError::EmptyInput);
    }
    let wires: Vec<Wire> = types
        .iter()
        .enumerate()
        .flat_map(|(token, t)| {
            t.simples()
                .iter()
                .enumerate()
                .map(move |(slot, &simple)| Wire { token, slot, simple })
        })
        .collect();
    let mut search = Search::new(&wires);
    match search.reduce_to(target.simples()) {
        Some(mut pairings) => {
            pairings.sort_by_key(|p| p.right);
            let mut paired = alloc::vec![false; wires.len()];
            for p in &pairings {
                paired[p.left] = true;
                paired[p.right] = true;
            }
            let open: Vec<usize> = (0..wires.len()).filter(|&i| !paired[i]).collect();
            let result_type = PregroupType::new(open.iter().map(|&i| wires[i].simple).collect());
            Ok(ReductionPlan {
                wires,
                pairings,
                copy_nodes: Vec::new(),
                unit_nodes: Vec::new(),
                open,
                result_type,
            })
        }
        None => Err(GrammarError::NotASentence {
            residual: search.shortest_residual(),
        }),
    }
}

/// Memo entry for an interval: `None` when it cannot be fully cancelled,
/// else `(total span, partner of the first wire)`.
type ClosedMemo = Option<Option<(usize, usize)>>;

/// Interval dynamic programme over wires.
struct Search<'a> {
    wires: &'a [Wire],
    /// `closed[i][j]`: cheapest full cancellation of wires `i..j`, with the
    /// partner chosen for wire `i`.
    closed: Vec<Vec<ClosedMemo>>,
}

impl<'a> Search<'a> {
    fn new(wires: &'a [Wire]) -> Self {
        let n = wires.len();
        Search {
            wires,
            closed: alloc::vec![alloc::vec![None; n + 1]; n + 1],
        }
    }

    fn cancels(&self, i: usize, k: usize) -> bool {
        self.wires[i].simple.contracts_with(self.wires[k].simple)
    }

    /// Cost of cancelling every wire in `i..j`, or `None` if impossible.
    fn close(&mut self, i: usize, j: usize) -> Option<usize> {
        if i >= j {
            return Some(0);
        }
        if let Some(memo) = self.closed[i][j] {
            return memo.map(|(cost, _)| cost);
        }
        let mut best: Option<(usize, usize)> = None;
        for k in (i + 1..j).step_by(2) {
            if !self.cancels(i, k) {
                continue;
            }
            if let (Some(inner), Some(rest)) = (self.close(i + 1, k), self.close(k + 1, j)) {
                let cost = (k - i) + inner + rest;
                if best.is_none_or(|(c, _)| cost < c) {
                    best = Some((cost, k));
                }
            }
        }
        self.closed[i][j] = Some(best);
        best.map(|(cost, _)| cost)
    }

    fn emit_closed(&mut self, i: usize, j: usize, out: &mut Vec<Pairing>) {
        if i >= j {
            return;
        }
        self.close(i, j);
        if let Some(Some((_, k))) = self.closed[i][j] {
            out.push(Pairing { left: i, right: k });
            self.emit_closed(i + 1, k, out);
            self.emit_closed(k + 1, j, out);
        }
    }

    /// Cheapest reduction of all wires to `target`.
    fn reduce_to(&mut self, target: &[SimpleType]) -> Option<Vec<Pairing>> {
        let n = self.wires.len();
        // best[pos][t]: cheapest reduction of wires pos.. to target[t..].
        let mut best: Vec<Vec<Option<(usize, Step)>>> = alloc::vec![alloc::vec![None; target.len() + 1]; n + 1];
        best[n][target.len()] = Some((0, Step::Done));
        for pos in (0..n).rev() {
            for t in (0..=target.len()).rev() {
                let mut cell: Option<(usize, Step)> = None;
                if t < target.len() && self.wires[pos].simple == target[t] {
                    if let Some((c, _)) = best[pos + 1][t + 1] {
                        cell = Some((c, Step::Open));
                    }
                }
                for k in (pos + 1..n).step_by(2) {
                    if !self.cancels(pos, k) {
                        continue;
                    }
                    let (Some(inner), Some((rest, _))) = (self.close(pos + 1, k), best[k + 1][t]) else {
                        continue;
                    };
                    let cost = (k - pos) + inner + rest;
                    if cell.is_none_or(|(c, _)| cost < c) {
                        cell = Some((cost, Step::Pair(k)));
                    }
                }
                best[pos][t] = cell;
            }
        }
        best[0][0]?;
        let mut pairings = Vec::new();
        let (mut pos, mut t) = (0, 0);
        while pos < n {
            match best[pos][t].expect("reconstruction follows feasible cells").1 {
                Step::Open => {
                    pos += 1;
                    t += 1;
                }
                Step::Pair(k) => {
                    pairings.push(Pairing { left: pos, right: k });
                    self.emit_closed(pos + 1, k, &mut pairings);
                    pos = k + 1;
                }
                Step::Done => break,
            }
        }
        Some(pairings)
    }

    /// The shortest sequence of wires left open by any planar reduction.
    fn shortest_residual(&mut self) -> PregroupType {
        let n = self.wires.len();
        // open[pos]: (fewest open wires in pos.., next step)
        let mut open: Vec<(usize, Option<usize>)> = alloc::vec![(0, None); n + 1];
        for pos in (0..n).rev() {
            let mut cell = (open[pos + 1].0 + 1, None);
            for k in (pos + 1..n).step_by(2) {
                if self.cancels(pos, k) && self.close(pos + 1, k).is_some() && open[k + 1].0 < cell.0 {
                    cell = (open[k + 1].0, Some(k));
                }
            }
            open[pos] = cell;
        }
        let mut residual = Vec::new();
        let mut pos = 0;
        while pos < n {
            match open[pos].1 {
                Some(k) => pos = k + 1,
                None => {
                    residual.push(self.wires[pos].simple);
                    pos += 1;
                }
            }
        }
        PregroupType::new(residual)
    }
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Open,
    Pair(usize),
    Done,
}
