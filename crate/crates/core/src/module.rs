//! Truncated projective modules `M(i, S) = P(i) / Σ_{a ∈ S} aA`.
//!
//! Killing a set `S` of arrows leaving `i` removes every basis path of
//! `P(i)` whose first arrow lies in `S`. The four families used throughout
//! the crate are special cases:
//!
//! | module | killed arrows |
//! |--------|---------------|
//! | `P(i)` | none |
//! | `S(i)` | every arrow leaving `i` |
//! | `Δ(i)` | arrows `i -> j` with `j < i` |
//! | `Γ(i)` | arrows `i -> j` with `j < i`, and arrows `i -> i + 1` |

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Quiver, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleSpec {
    vertex: Vertex,
    killed: BTreeSet<ArrowId>,
}

impl ModuleSpec {
    pub fn new(q: &Quiver, vertex: Vertex, killed: impl IntoIterator<Item = ArrowId>) -> Result<Self> {
        q.check_vertex(vertex)?;
        let killed: BTreeSet<ArrowId> = killed.into_iter().collect();
        for &a in &killed {
            if a.index() >= q.arrow_count() || q.source(a) != vertex {
                return Err(Error::InvalidModule(format!(
                    "killed arrow #{} does not leave vertex {vertex}",
                    a.index()
                )));
            }
        }
        Ok(ModuleSpec { vertex, killed })
    }

    fn filtered(q: &Quiver, vertex: Vertex, keep: impl Fn(Vertex) -> bool) -> Result<Self> {
        q.check_vertex(vertex)?;
        let killed = q
            .outgoing(vertex)
            .iter()
            .copied()
            .filter(|&a| keep(q.target(a)))
            .collect();
        Ok(ModuleSpec { vertex, killed })
    }

    pub fn projective(q: &Quiver, vertex: Vertex) -> Result<Self> {
        Self::filtered(q, vertex, |_| false)
    }

    pub fn simple(q: &Quiver, vertex: Vertex) -> Result<Self> {
        Self::filtered(q, vertex, |_| true)
    }

    /// `Δ(i)`: kills the arrows to smaller vertices.
    pub fn standard(q: &Quiver, vertex: Vertex) -> Result<Self> {
        Self::filtered(q, vertex, |t| t < vertex)
    }

    /// `Γ(i)`: kills the arrows to smaller vertices and to `i + 1`.
    pub fn gamma(q: &Quiver, vertex: Vertex) -> Result<Self> {
        if vertex >= q.vertex_count() {
            return Err(Error::InvalidModule(format!(
                "Γ({vertex}) needs a vertex {} to exist",
                vertex + 1
            )));
        }
        Self::filtered(q, vertex, |t| t < vertex || t == vertex + 1)
    }

    /// `R(i)`-generating arrows: the arrows `i -> j` with `j < i`.
    pub fn down_arrows(q: &Quiver, vertex: Vertex) -> Vec<ArrowId> {
        q.outgoing(vertex)
            .iter()
            .copied()
            .filter(|&a| q.target(a) < vertex)
            .collect()
    }

    pub fn vertex(&self) -> Vertex {
        self.vertex
    }

    pub fn killed(&self) -> &BTreeSet<ArrowId> {
        &self.killed
    }

    pub fn is_projective(&self) -> bool {
        self.killed.is_empty()
    }

    /// Whether the basis path with this first arrow survives in the quotient.
    pub fn keeps_first_arrow(&self, first: Option<ArrowId>) -> bool {
        first.is_none_or(|a| !self.killed.contains(&a))
    }
}

/// Multiplicity of each simple module as a composition factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CompositionVector(Vec<usize>);

impl CompositionVector {
    pub fn zero(n: usize) -> Self {
        CompositionVector(vec![0; n])
    }

    pub fn unit(n: usize, v: Vertex) -> Self {
        let mut c = Self::zero(n);
        c.0[v - 1] = 1;
        c
    }

    /// From `(vertex, count)` pairs; repeated vertices accumulate.
    pub fn from_pairs(n: usize, pairs: &[(Vertex, usize)]) -> Self {
        let mut c = Self::zero(n);
        for &(v, k) in pairs {
            c.0[v - 1] += k;
        }
        c
    }

    pub(crate) fn bump(&mut self, v: Vertex) {
        self.0[v - 1] += 1;
    }

    pub fn get(&self, v: Vertex) -> usize {
        self.0.get(v.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Non-zero entries in vertex order.
    pub fn entries(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| (i + 1, k))
    }
}

impl AddAssign<&CompositionVector> for CompositionVector {
    fn add_assign(&mut self, rhs: &CompositionVector) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), 0);
        }
        for (x, y) in self.0.iter_mut().zip(&rhs.0) {
            *x += y;
        }
    }
}

impl Add<&CompositionVector> for CompositionVector {
    type Output = CompositionVector;

    fn add(mut self, rhs: &CompositionVector) -> CompositionVector {
        self += rhs;
        self
    }
}

impl Mul<usize> for &CompositionVector {
    type Output = CompositionVector;

    fn mul(self, k: usize) -> CompositionVector {
        CompositionVector(self.0.iter().map(|x| x * k).collect())
    }
}

impl fmt::Display for CompositionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (v, c)) in self.entries().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}:{c}")?;
        }
        write!(f, "}}")
    }
}
