//! Searching for linear subquivers `A_m` and their closures `X_m`, and
//! relabeling a quiver so that a found subquiver sits on `1..=m`.
//!
//! The search is a plain backtracking enumeration of simple paths. It is
//! exponential in general, so every search carries a step budget.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Quiver, Vertex};

pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// An embedding of `A_m` (and optionally `X_m`) into a quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    /// Image of `1..=m`, in path order.
    pub vertices: Vec<Vertex>,
    /// `arrows[j]` goes `vertices[j] -> vertices[j + 1]`.
    pub arrows: Vec<ArrowId>,
    /// The closing arrow of `X_m`: it goes from the last vertex to
    /// `vertices[pos]` for the stored 0-based `pos`.
    pub cycle: Option<CycleArrow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleArrow {
    pub arrow: ArrowId,
    pub return_position: usize,
}

impl Embedding {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("non-empty embedding")
    }

    /// Checks the structural invariants against `q`.
    pub fn is_valid_in(&self, q: &Quiver) -> bool {
        let m = self.vertices.len();
        if m == 0 || self.arrows.len() != m - 1 {
            return false;
        }
        let mut seen = vec![false; q.vertex_count() + 1];
        for &v in &self.vertices {
            if v == 0 || v > q.vertex_count() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let chain_ok = self.arrows.iter().enumerate().all(|(j, &a)| {
            a.index() < q.arrow_count() && q.source(a) == self.vertices[j] && q.target(a) == self.vertices[j + 1]
        });
        let cycle_ok = match self.cycle {
            None => true,
            Some(c) => {
                c.return_position + 1 < m
                    && c.arrow.index() < q.arrow_count()
                    && q.source(c.arrow) == self.last()
                    && q.target(c.arrow) == self.vertices[c.return_position]
            }
        };
        chain_ok && cycle_ok
    }
}

/// Iterator over all `A_m` embeddings, ordered by vertex sequence and then
/// by the tuple of chosen arrows.
#[derive(Debug)]
pub struct AEmbeddings<'q> {
    quiver: &'q Quiver,
    m: usize,
    budget: u64,
    steps: u64,
    seq: Vec<Vertex>,
    cursor: Vec<Vertex>,
    used: Vec<bool>,
    pending: VecDeque<Embedding>,
    done: bool,
}

impl<'q> AEmbeddings<'q> {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn next_sequence(&mut self) -> Result<Option<Vec<Vertex>>> {
        let n = self.quiver.vertex_count();
        if self.seq.len() == self.m {
            let v = self.seq.pop().expect("full sequence");
            self.used[v] = false;
        }
        loop {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(Error::SearchBudgetExceeded { budget: self.budget });
            }
            let d = self.seq.len();
            let c = self.cursor[d];
            if c > n {
                self.cursor.pop();
                match self.seq.pop() {
                    Some(v) => self.used[v] = false,
                    None => return Ok(None),
                }
                continue;
            }
            self.cursor[d] += 1;
            let reachable = d == 0 || self.quiver.r(self.seq[d - 1], c) > 0;
            if self.used[c] || !reachable {
                continue;
            }
            self.seq.push(c);
            self.used[c] = true;
            if self.seq.len() == self.m {
                return Ok(Some(self.seq.clone()));
            }
            self.cursor.push(1);
        }
    }

    fn expand(&mut self, seq: Vec<Vertex>) {
        let choices: Vec<Vec<ArrowId>> = seq.windows(2).map(|w| self.quiver.arrows_between(w[0], w[1])).collect();
        let mut idx = vec![0usize; choices.len()];
        loop {
            self.pending.push_back(Embedding {
                vertices: seq.clone(),
                arrows: idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect(),
                cycle: None,
            });
            // odometer, last position fastest
            let mut k = choices.len();
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

impl Iterator for AEmbeddings<'_> {
    type Item = Result<Embedding>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(e) = self.pending.pop_front() {
                return Some(Ok(e));
            }
            if self.done {
                return None;
            }
            match self.next_sequence() {
                Ok(Some(seq)) => self.expand(seq),
                Ok(None) => self.done = true,
                Err(e) => {
                    self.done = true;
                    return Some(Err(e));
                }
            }
        }
    }
}

/// All embeddings of the linear quiver `A_m` (`m >= 1`).
pub fn find_a_embeddings(q: &Quiver, m: usize) -> AEmbeddings<'_> {
    AEmbeddings {
        quiver: q,
        m,
        budget: DEFAULT_SEARCH_BUDGET,
        steps: 0,
        seq: Vec::new(),
        cursor: vec![1],
        used: vec![false; q.vertex_count() + 1],
        pending: VecDeque::new(),
        done: m == 0 || m > q.vertex_count(),
    }
}

/// First (by arrow order) non-loop arrow from the last embedded vertex back
/// into the embedded vertex set.
pub fn is_extendable(q: &Quiver, emb: &Embedding) -> Option<ArrowId> {
    let last = emb.last();
    q.outgoing(last)
        .iter()
        .copied()
        .find(|&a| q.target(a) != last && emb.vertices.contains(&q.target(a)))
}

fn best_cycle_arrow(q: &Quiver, emb: &Embedding) -> Option<CycleArrow> {
    let last = emb.last();
    let m = emb.vertices.len();
    let mut best: Option<CycleArrow> = None;
    for &a in q.outgoing(last) {
        let Some(pos) = emb.vertices[..m - 1].iter().position(|&v| v == q.target(a)) else {
            continue;
        };
        if best.is_none_or(|b| pos > b.return_position) {
            best = Some(CycleArrow {
                arrow: a,
                return_position: pos,
            });
        }
    }
    best
}

/// First extendable `A_m` embedding, closed to `X_m` by the return arrow
/// reaching the latest possible position.
pub fn find_x_embedding(q: &Quiver, m: usize) -> Result<Option<Embedding>> {
    find_x_embedding_with_budget(q, m, DEFAULT_SEARCH_BUDGET)
}

pub fn find_x_embedding_with_budget(q: &Quiver, m: usize, budget: u64) -> Result<Option<Embedding>> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("X_m needs m >= 2, got {m}")));
    }
    for emb in find_a_embeddings(q, m).with_budget(budget) {
        let mut emb = emb?;
        if let Some(c) = best_cycle_arrow(q, &emb) {
            emb.cycle = Some(c);
            return Ok(Some(emb));
        }
    }
    Ok(None)
}

/// A permutation of the vertices, old label to new label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relabeling {
    new_of_old: Vec<Vertex>,
}

impl Relabeling {
    pub fn new(new_of_old: Vec<Vertex>) -> Result<Self> {
        let n = new_of_old.len();
        let mut hit = vec![false; n + 1];
        for &v in &new_of_old {
            if v == 0 || v > n || hit[v] {
                return Err(Error::InvalidParameter(format!(
                    "{new_of_old:?} is not a permutation of 1..={n}"
                )));
            }
            hit[v] = true;
        }
        Ok(Relabeling { new_of_old })
    }

    pub fn identity(n: usize) -> Self {
        Relabeling {
            new_of_old: (1..=n).collect(),
        }
    }

    /// Puts `front` on `1..=front.len()` in the given order and the remaining
    /// vertices after them in ascending order.
    pub fn with_front(n: usize, front: &[Vertex]) -> Result<Self> {
        let mut new_of_old = vec![0; n];
        for (k, &v) in front.iter().enumerate() {
            if v == 0 || v > n || new_of_old[v - 1] != 0 {
                return Err(Error::InvalidParameter(format!("bad front sequence {front:?}")));
            }
            new_of_old[v - 1] = k + 1;
        }
        let mut next = front.len();
        for slot in new_of_old.iter_mut().filter(|s| **s == 0) {
            next += 1;
            *slot = next;
        }
        Ok(Relabeling { new_of_old })
    }

    /// Sends `top` to `n` and the other vertices to `1..n` in ascending order.
    pub fn with_top(n: usize, top: Vertex) -> Result<Self> {
        let front: Vec<Vertex> = (1..=n).filter(|&v| v != top).collect();
        if front.len() + 1 != n {
            return Err(Error::UnknownVertex(top));
        }
        Relabeling::with_front(n, &front)
    }

    pub fn apply(&self, old: Vertex) -> Vertex {
        self.new_of_old[old - 1]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.new_of_old
    }

    pub fn is_identity(&self) -> bool {
        self.new_of_old.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.new_of_old.len()];
        for (i, &v) in self.new_of_old.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Relabeling { new_of_old: inv }
    }
}

/// Embedded vertices become `1..=m` in path order, the rest follow in
/// ascending original order.
pub fn relabeling_from_embedding(q: &Quiver, emb: &Embedding) -> Result<Relabeling> {
    Relabeling::with_front(q.vertex_count(), &emb.vertices)
}

/// Applies `sigma` to the vertices. Arrow names, ids and order are kept, so
/// relation words stay valid across the relabeling.
pub fn relabel(q: &Quiver, sigma: &Relabeling) -> Result<Quiver> {
    if sigma.as_slice().len() != q.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "relabeling of {} vertices applied to a quiver with {}",
            sigma.as_slice().len(),
            q.vertex_count()
        )));
    }
    Quiver::new(
        q.vertex_count(),
        q.arrows()
            .map(|(_, a)| (a.name.clone(), sigma.apply(a.source), sigma.apply(a.target))),
    )
}
