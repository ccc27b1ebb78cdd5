//! Finite quivers and their paths.
//!
//! Paths are stored in **traversal order**: the first arrow walked is the
//! first entry of the word. The customary algebraic notation writes paths in
//! composition order, so the path walking `a: 1 -> 2` and then `b: 2 -> 3` is
//! written `ba` there and `[a, b]` here. Every file format and every relation
//! word in this crate uses traversal order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Vertices are the integers `1..=n`.
pub type Vertex = usize;

/// Index of an arrow inside its quiver. Arrow order is declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub(crate) usize);

impl ArrowId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite quiver with vertices `1..=n` and named arrows.
#[derive(Debug, Clone)]
pub struct Quiver {
    n: usize,
    arrows: Vec<Arrow>,
    by_name: HashMap<String, ArrowId>,
    outgoing: Vec<Vec<ArrowId>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Quiver {
    /// Builds a quiver from `(name, source, target)` triples.
    pub fn new<S, I>(n: usize, arrows: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = (S, Vertex, Vertex)>,
    {
        let mut q = Quiver {
            n,
            arrows: Vec::new(),
            by_name: HashMap::new(),
            outgoing: vec![Vec::new(); n],
        };
        for (name, source, target) in arrows {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(Error::InvalidQuiver(format!("`{name}` is not an identifier")));
            }
            for v in [source, target] {
                if v == 0 || v > n {
                    return Err(Error::InvalidQuiver(format!(
                        "arrow `{name}` uses vertex {v} outside 1..={n}"
                    )));
                }
            }
            let id = ArrowId(q.arrows.len());
            if q.by_name.insert(name.clone(), id).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{name}`")));
            }
            q.outgoing[source - 1].push(id);
            q.arrows.push(Arrow { name, source, target });
        }
        Ok(q)
    }

    /// Linear quiver `1 -> 2 -> ... -> n` with arrows `a1, ..., a{n-1}`.
    pub fn linear(n: usize) -> Self {
        Quiver::new(n, (1..n).map(|i| (format!("a{i}"), i, i + 1))).expect("valid linear quiver")
    }

    /// Complete quiver without loops, `mult` parallel arrows between every
    /// ordered pair of distinct vertices.
    ///
    /// Arrows are named `a{i}_{j}` (or `a{i}_{j}_{t}` when `mult > 1`).
    pub fn complete(n: usize, mult: usize) -> Self {
        let mut arrows = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                for t in 1..=mult {
                    let name = if mult == 1 {
                        format!("a{i}_{j}")
                    } else {
                        format!("a{i}_{j}_{t}")
                    };
                    arrows.push((name, i, j));
                }
            }
        }
        Quiver::new(n, arrows).expect("valid complete quiver")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id.0]
    }

    pub fn arrows(&self) -> impl Iterator<Item = (ArrowId, &Arrow)> + '_ {
        self.arrows.iter().enumerate().map(|(i, a)| (ArrowId(i), a))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn source(&self, id: ArrowId) -> Vertex {
        self.arrows[id.0].source
    }

    pub fn target(&self, id: ArrowId) -> Vertex {
        self.arrows[id.0].target
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::UnknownVertex(v))
        } else {
            Ok(())
        }
    }

    /// Arrows leaving `v`, in declaration order.
    pub fn outgoing(&self, v: Vertex) -> &[ArrowId] {
        &self.outgoing[v - 1]
    }

    /// Arrows `i -> j` in declaration order.
    pub fn arrows_between(&self, i: Vertex, j: Vertex) -> Vec<ArrowId> {
        self.outgoing(i)
            .iter()
            .copied()
            .filter(|&a| self.target(a) == j)
            .collect()
    }

    /// Number of arrows `i -> j`.
    pub fn r(&self, i: Vertex, j: Vertex) -> usize {
        self.outgoing(i).iter().filter(|&&a| self.target(a) == j).count()
    }

    pub fn has_loop(&self) -> bool {
        self.arrows.iter().any(Arrow::is_loop)
    }

    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm: a cycle remains iff some vertex is never freed.
        let mut indegree = vec![0usize; self.n];
        for a in &self.arrows {
            indegree[a.target - 1] += 1;
        }
        let mut stack: Vec<Vertex> = self.vertices().filter(|v| indegree[v - 1] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &a in self.outgoing(v) {
                let t = self.target(a);
                indegree[t - 1] -= 1;
                if indegree[t - 1] == 0 {
                    stack.push(t);
                }
            }
        }
        seen < self.n
    }

    /// Whether some pair of arrows composes, i.e. `(kQ⁺)² ≠ 0`.
    pub fn has_length2_path(&self) -> bool {
        self.arrows.iter().any(|a| !self.outgoing(a.target).is_empty())
    }

    pub fn structure_predicates(&self) -> StructurePredicates {
        StructurePredicates {
            has_loop: self.has_loop(),
            has_oriented_cycle: self.has_oriented_cycle(),
            has_length2_path: self.has_length2_path(),
        }
    }

    /// Builds a path starting at `base` from a traversal-order arrow list.
    pub fn path_from_ids(&self, base: Vertex, word: &[ArrowId]) -> Result<Path> {
        self.check_vertex(base)?;
        let mut at = base;
        for &a in word {
            if a.0 >= self.arrows.len() {
                return Err(Error::UnknownArrow(format!("#{}", a.0)));
            }
            if self.source(a) != at {
                return Err(Error::NotAPath(format!(
                    "arrow `{}` starts at {} but the path is at {at}",
                    self.arrow(a).name,
                    self.source(a)
                )));
            }
            at = self.target(a);
        }
        Ok(Path {
            source: base,
            target: at,
            word: word.to_vec(),
        })
    }

    /// Builds a non-trivial path from arrow names in traversal order.
    pub fn path<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|s| self.arrow_id(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let Some(&first) = ids.first() else {
            return Err(Error::NotAPath("empty arrow list".into()));
        };
        self.path_from_ids(self.source(first), &ids)
    }

    /// Path of length one.
    pub fn arrow_path(&self, id: ArrowId) -> Path {
        Path {
            source: self.source(id),
            target: self.target(id),
            word: vec![id],
        }
    }

    /// Arrow names in traversal order, space separated; `e{v}` for trivial paths.
    pub fn word_string(&self, p: &Path) -> String {
        if p.word.is_empty() {
            return format!("e{}", p.source);
        }
        p.word
            .iter()
            .map(|&a| self.arrow(a).name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The path in composition order: `[a, b]` becomes `ba`. Multi-letter
    /// arrow names are joined with `*`.
    pub fn composition_string(&self, p: &Path) -> String {
        if p.word.is_empty() {
            return format!("e{}", p.source);
        }
        let names: Vec<&str> = p.word.iter().rev().map(|&a| self.arrow(a).name.as_str()).collect();
        if names.iter().all(|s| s.len() == 1) {
            names.concat()
        } else {
            names.join("*")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructurePredicates {
    pub has_loop: bool,
    pub has_oriented_cycle: bool,
    pub has_length2_path: bool,
}

/// A path in traversal order. The empty word is the trivial path `e_source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: Vertex,
    target: Vertex,
    word: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: Vertex) -> Self {
        Path {
            source: v,
            target: v,
            word: Vec::new(),
        }
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn word(&self) -> &[ArrowId] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn first_arrow(&self) -> Option<ArrowId> {
        self.word.first().copied()
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Path) -> Result<Path> {
        if self.target != other.source {
            return Err(Error::Compose {
                left_target: self.target,
                right_source: other.source,
            });
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(Path {
            source: self.source,
            target: other.target,
            word,
        })
    }

    /// Appends one arrow. The caller guarantees composability.
    pub(crate) fn extended(&self, a: ArrowId, target: Vertex) -> Path {
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.extend_from_slice(&self.word);
        word.push(a);
        Path {
            source: self.source,
            target,
            word,
        }
    }

    pub(crate) fn from_parts(source: Vertex, target: Vertex, word: Vec<ArrowId>) -> Path {
        Path { source, target, word }
    }

    /// Whether `other`'s word occurs contiguously inside this path's word.
    pub fn contains_infix(&self, other: &Path) -> bool {
        contains_infix(&self.word, &other.word)
    }
}

pub(crate) fn contains_infix(hay: &[ArrowId], needle: &[ArrowId]) -> bool {
    needle.is_empty() || hay.windows(needle.len()).any(|w| w == needle)
}

/// Canonical order: length, then word (by arrow index), then source.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e{}", self.source);
        }
        write!(f, "{}:", self.source)?;
        for a in &self.word {
            write!(f, " #{}", a.0)?;
        }
        Ok(())
    }
}
