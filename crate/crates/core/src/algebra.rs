//! Monomial quotients `kQ/I` of path algebras.
//!
//! `I` is generated by finitely many paths (zero relations). A path is zero in
//! `kQ/I` exactly when it contains a generator as a contiguous subword, so the
//! nonzero paths form a basis and every dimension below is independent of the
//! ground field.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::module::{CompositionVector, ModuleSpec};
use crate::quiver::{ArrowId, Path, Quiver, Vertex};

pub const DEFAULT_BASIS_CAP: usize = 1_000_000;

/// A reduced generating set of zero relations: no generator is a
/// subword of another, and every generator has length at least two.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RelationSet {
    generators: Vec<Path>,
}

impl RelationSet {
    pub fn empty() -> Self {
        RelationSet::default()
    }

    /// Validates `raw` against `q` and drops every path that contains
    /// another one as a subword.
    pub fn reduce(q: &Quiver, raw: impl IntoIterator<Item = Path>) -> Result<Self> {
        let mut paths = Vec::new();
        for p in raw {
            let p = q.path_from_ids(p.source(), p.word())?;
            if p.len() < 2 {
                return Err(Error::ShortRelation {
                    word: q.word_string(&p),
                    len: p.len(),
                });
            }
            paths.push(p);
        }
        paths.sort();
        paths.dedup();
        // sorted by length, so a subword of `p` can only appear before it
        let mut kept: Vec<Path> = Vec::with_capacity(paths.len());
        for p in paths {
            if !kept.iter().any(|g| p.contains_infix(g)) {
                kept.push(p);
            }
        }
        Ok(RelationSet { generators: kept })
    }

    /// Relation set from traversal-order arrow-name lists.
    pub fn from_names<S: AsRef<str>>(q: &Quiver, words: &[&[S]]) -> Result<Self> {
        let paths = words.iter().map(|w| q.path(w)).collect::<Result<Vec<_>>>()?;
        Self::reduce(q, paths)
    }

    pub fn generators(&self) -> &[Path] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.generators.iter().map(Path::len).max().unwrap_or(0)
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.generators.binary_search(p).is_ok()
    }

    /// Union, reduced again.
    pub fn union(&self, q: &Quiver, other: &RelationSet) -> Result<Self> {
        Self::reduce(q, self.generators.iter().chain(&other.generators).cloned())
    }
}

/// Outcome of the admissibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    /// Every path of length `nilpotency` is zero; the longest nonzero path
    /// has length `nilpotency - 1`.
    Admissible { nilpotency: usize },
    /// A closed walk all of whose powers are nonzero.
    InfiniteCycle { witness: Path },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible { .. })
    }
}

/// Automaton whose accepted walks are exactly the nonzero paths.
///
/// A state remembers the vertex reached and the last `L - 1` arrows walked,
/// where `L` is the longest relation. An arrow is rejected when some
/// generator becomes a suffix of the walk.
#[derive(Debug, Clone)]
pub struct SubwordAutomaton {
    states: Vec<(Vertex, Vec<ArrowId>)>,
    transitions: Vec<Vec<(ArrowId, usize)>>,
    starts: Vec<usize>,
}

impl SubwordAutomaton {
    fn build(q: &Quiver, gens: &HashSet<Vec<ArrowId>>, max_len: usize) -> Self {
        let window = max_len.saturating_sub(1);
        let mut index: HashMap<(Vertex, Vec<ArrowId>), usize> = HashMap::new();
        let mut states = Vec::new();
        let mut transitions: Vec<Vec<(ArrowId, usize)>> = Vec::new();
        let mut starts = Vec::new();
        let mut queue = Vec::new();
        for v in q.vertices() {
            let key = (v, Vec::new());
            index.insert(key.clone(), states.len());
            starts.push(states.len());
            queue.push(states.len());
            states.push(key);
            transitions.push(Vec::new());
        }
        while let Some(s) = queue.pop() {
            let (v, w) = states[s].clone();
            for &a in q.outgoing(v) {
                let mut cand = w.clone();
                cand.push(a);
                if has_generator_suffix(&cand, gens, max_len) {
                    continue;
                }
                if cand.len() > window {
                    cand.drain(..cand.len() - window);
                }
                let key = (q.target(a), cand);
                let t = *index.entry(key.clone()).or_insert_with(|| {
                    states.push(key);
                    transitions.push(Vec::new());
                    queue.push(states.len() - 1);
                    states.len() - 1
                });
                transitions[s].push((a, t));
            }
        }
        SubwordAutomaton {
            states,
            transitions,
            starts,
        }
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Longest accepted walk, or a cycle of transitions if walks are unbounded.
    fn longest_walk(&self) -> std::result::Result<usize, Vec<(usize, ArrowId)>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        let n = self.states.len();
        let mut mark = vec![Mark::New; n];
        let mut longest = vec![0usize; n];
        // (state, next transition index)
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for &root in &self.starts {
            if mark[root] != Mark::New {
                continue;
            }
            mark[root] = Mark::Open;
            stack.push((root, 0));
            while let Some(&mut (s, ref mut k)) = stack.last_mut() {
                if let Some(&(_, t)) = self.transitions[s].get(*k) {
                    *k += 1;
                    match mark[t] {
                        Mark::New => {
                            mark[t] = Mark::Open;
                            stack.push((t, 0));
                        }
                        Mark::Open => {
                            let from = stack.iter().position(|&(x, _)| x == t).expect("open state on stack");
                            let cycle = stack[from..]
                                .iter()
                                .map(|&(x, k)| (x, self.transitions[x][k - 1].0))
                                .collect();
                            return Err(cycle);
                        }
                        Mark::Done => {}
                    }
                } else {
                    longest[s] = self.transitions[s]
                        .iter()
                        .map(|&(_, t)| longest[t] + 1)
                        .max()
                        .unwrap_or(0);
                    mark[s] = Mark::Done;
                    stack.pop();
                }
            }
        }
        Ok(self.starts.iter().map(|&s| longest[s]).max().unwrap_or(0))
    }
}

fn has_generator_suffix(word: &[ArrowId], gens: &HashSet<Vec<ArrowId>>, max_len: usize) -> bool {
    (2..=max_len.min(word.len())).any(|l| gens.contains(&word[word.len() - l..]))
}

/// All nonzero paths, in canonical order (length, then arrow word).
#[derive(Debug, Clone)]
pub struct BasisIndex {
    paths: Vec<Path>,
    by_source: Vec<Vec<usize>>,
    position: HashMap<Path, usize>,
}

impl BasisIndex {
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    /// Basis of `P(i)` in canonical order.
    pub fn from_source(&self, i: Vertex) -> impl Iterator<Item = &Path> + '_ {
        self.by_source[i - 1].iter().map(|&k| &self.paths[k])
    }

    pub fn dim_projective(&self, i: Vertex) -> usize {
        self.by_source[i - 1].len()
    }

    pub fn position(&self, p: &Path) -> Option<usize> {
        self.position.get(p).copied()
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.position.contains_key(p)
    }

    pub fn longest(&self) -> usize {
        self.paths.last().map_or(0, Path::len)
    }
}

/// `kQ/I` for a monomial ideal `I`, with a cached automaton and path basis.
#[derive(Debug)]
pub struct Algebra {
    quiver: Quiver,
    relations: RelationSet,
    gens: HashSet<Vec<ArrowId>>,
    max_len: usize,
    automaton: SubwordAutomaton,
    basis_cap: usize,
    basis: OnceLock<Result<BasisIndex>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
            gens: self.gens.clone(),
            max_len: self.max_len,
            automaton: self.automaton.clone(),
            basis_cap: self.basis_cap,
            basis: OnceLock::new(),
        }
    }
}

impl Algebra {
    pub fn new(quiver: Quiver, relations: RelationSet) -> Result<Self> {
        // re-validate: the relation set may come from another quiver
        let relations = RelationSet::reduce(&quiver, relations.generators)?;
        let gens = relations.generators.iter().map(|p| p.word().to_vec()).collect();
        let max_len = relations.max_len();
        let automaton = SubwordAutomaton::build(&quiver, &gens, max_len);
        Ok(Algebra {
            quiver,
            relations,
            gens,
            max_len,
            automaton,
            basis_cap: DEFAULT_BASIS_CAP,
            basis: OnceLock::new(),
        })
    }

    /// The path algebra itself (no relations).
    pub fn free(quiver: Quiver) -> Self {
        Algebra::new(quiver, RelationSet::empty()).expect("empty relation set is valid")
    }

    pub fn with_basis_cap(mut self, cap: usize) -> Self {
        self.basis_cap = cap;
        self.basis = OnceLock::new();
        self
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn max_relation_len(&self) -> usize {
        self.max_len
    }

    pub fn automaton(&self) -> &SubwordAutomaton {
        &self.automaton
    }

    /// Whether the arrow word contains a generator.
    pub fn is_zero_word(&self, word: &[ArrowId]) -> bool {
        if word.len() < 2 {
            return false;
        }
        (2..=self.max_len.min(word.len())).any(|l| word.windows(l).any(|w| self.gens.contains(w)))
    }

    /// Whether `p` vanishes in the quotient.
    pub fn is_zero_path(&self, p: &Path) -> Result<bool> {
        self.quiver.path_from_ids(p.source(), p.word())?;
        Ok(self.is_zero_word(p.word()))
    }

    pub(crate) fn generators(&self) -> &[Path] {
        self.relations.generators()
    }

    /// Some generator begins with arrow `a`.
    pub fn generator_starts_with(&self, a: ArrowId) -> bool {
        self.relations.generators().iter().any(|g| g.first_arrow() == Some(a))
    }

    pub fn check_admissible(&self) -> Admissibility {
        match self.automaton.longest_walk() {
            Ok(longest) => Admissibility::Admissible {
                nilpotency: longest + 1,
            },
            Err(cycle) => {
                let (first_state, _) = cycle[0];
                let base = self.automaton.states[first_state].0;
                let word: Vec<ArrowId> = cycle.iter().map(|&(_, a)| a).collect();
                let witness = self
                    .quiver
                    .path_from_ids(base, &word)
                    .expect("automaton cycle is a closed walk");
                Admissibility::InfiniteCycle { witness }
            }
        }
    }

    /// Like [`check_admissible`](Self::check_admissible), as a `Result`.
    pub fn require_admissible(&self) -> Result<usize> {
        match self.check_admissible() {
            Admissibility::Admissible { nilpotency } => Ok(nilpotency),
            Admissibility::InfiniteCycle { witness } => Err(Error::NotAdmissible(format!(
                "the closed walk `{}` and all its powers are nonzero",
                self.quiver.word_string(&witness)
            ))),
        }
    }

    /// The path basis, computed once.
    pub fn basis(&self) -> Result<&BasisIndex> {
        self.basis
            .get_or_init(|| enumerate_basis(self, self.basis_cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn dim(&self) -> Result<usize> {
        Ok(self.basis()?.dim())
    }

    pub fn dim_projective(&self, i: Vertex) -> Result<usize> {
        self.quiver.check_vertex(i)?;
        Ok(self.basis()?.dim_projective(i))
    }

    /// Basis of `M(i, S)`: the paths of `P(i)` whose first arrow is not killed.
    pub fn module_basis<'a>(&'a self, spec: &'a ModuleSpec) -> Result<impl Iterator<Item = &'a Path> + 'a> {
        self.quiver.check_vertex(spec.vertex())?;
        Ok(self
            .basis()?
            .from_source(spec.vertex())
            .filter(move |p| spec.keeps_first_arrow(p.first_arrow())))
    }

    /// Composition factors of `M(i, S)`, counted by path targets.
    pub fn composition_vector(&self, spec: &ModuleSpec) -> Result<CompositionVector> {
        let mut cv = CompositionVector::zero(self.vertex_count());
        for p in self.module_basis(spec)? {
            cv.bump(p.target());
        }
        Ok(cv)
    }

    pub fn projective_cv(&self, i: Vertex) -> Result<CompositionVector> {
        self.composition_vector(&ModuleSpec::projective(&self.quiver, i)?)
    }

    /// Composition factors of the submodule of `P(i)` generated by `arrows`
    /// (each leaving `i`).
    pub fn generated_cv(&self, i: Vertex, arrows: &[ArrowId]) -> Result<CompositionVector> {
        self.quiver.check_vertex(i)?;
        let mut cv = CompositionVector::zero(self.vertex_count());
        for p in self.basis()?.from_source(i) {
            if p.first_arrow().is_some_and(|a| arrows.contains(&a)) {
                cv.bump(p.target());
            }
        }
        Ok(cv)
    }
}

/// Breadth-first enumeration of nonzero paths; extending a nonzero path by
/// one arrow only needs a suffix test.
pub fn enumerate_basis(alg: &Algebra, cap: usize) -> Result<BasisIndex> {
    let q = &alg.quiver;
    let mut paths: Vec<Path> = q.vertices().map(Path::trivial).collect();
    let mut level: Vec<Path> = paths.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for p in &level {
            for &a in q.outgoing(p.target()) {
                let ext = p.extended(a, q.target(a));
                if has_generator_suffix(ext.word(), &alg.gens, alg.max_len) {
                    continue;
                }
                next.push(ext);
                if paths.len() + next.len() > cap {
                    return Err(Error::BasisCapExceeded { cap });
                }
            }
        }
        next.sort();
        paths.extend(next.iter().cloned());
        level = next;
    }
    let mut by_source = vec![Vec::new(); q.vertex_count()];
    let mut position = HashMap::with_capacity(paths.len());
    for (k, p) in paths.iter().enumerate() {
        by_source[p.source() - 1].push(k);
        position.insert(p.clone(), k);
    }
    Ok(BasisIndex {
        paths,
        by_source,
        position,
    })
}

/// Every contiguous subpath of every basis path is a basis path.
pub fn is_subpath_closed(q: &Quiver, basis: &BasisIndex) -> bool {
    basis.paths().iter().all(|p| {
        let w = p.word();
        (0..=w.len()).all(|i| {
            (i..=w.len()).all(|j| {
                let base = if i < w.len() { q.source(w[i]) } else { p.target() };
                let sub = Path::from_parts(base, if j > i { q.target(w[j - 1]) } else { base }, w[i..j].to_vec());
                basis.contains(&sub)
            })
        })
    })
}
