//! Minimal resolutions by explicit linear algebra over `F_p`.
//!
//! This engine shares nothing with [`crate::homology`] beyond the path basis:
//! modules are concrete representations, projective covers are built from the
//! top, and syzygies are kernels found by Gaussian elimination. Agreement of
//! the two engines is the main correctness check of the crate.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homology::Resolution;
use crate::linalg::{Field, Matrix, Subspace};
use crate::module::ModuleSpec;
use crate::quiver::{Path, Quiver, Vertex};

/// A representation: a vector space per vertex and a matrix per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    /// `dims[v - 1]` is the dimension at vertex `v`.
    pub dims: Vec<usize>,
    /// Indexed by arrow; rows follow the target space, columns the source.
    pub action: Vec<Matrix>,
}

impl Rep {
    pub fn zero(q: &Quiver) -> Self {
        Rep {
            dims: vec![0; q.vertex_count()],
            action: q.arrows().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn dim_at(&self, v: Vertex) -> usize {
        self.dims[v - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of a path, applied in traversal order.
    pub fn path_matrix(&self, f: Field, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dim_at(p.source()));
        for &a in p.word() {
            m = self.action[a.index()].mul(f, &m);
        }
        m
    }

    /// Every relation acts as zero.
    pub fn satisfies_relations(&self, f: Field, alg: &Algebra) -> bool {
        alg.relations()
            .generators()
            .iter()
            .all(|g| self.path_matrix(f, g).is_zero())
    }
}

/// The path-basis representation of `M(i, S)`: arrows act by appending.
pub fn rep_of(alg: &Algebra, spec: &ModuleSpec) -> Result<Rep> {
    let q = alg.quiver();
    let basis = alg.basis()?;
    let mut local: BTreeMap<usize, usize> = BTreeMap::new();
    let mut dims = vec![0usize; q.vertex_count()];
    let mut members: Vec<&Path> = Vec::new();
    for p in alg.module_basis(spec)? {
        let k = basis.position(p).expect("basis path");
        local.insert(k, dims[p.target() - 1]);
        dims[p.target() - 1] += 1;
        members.push(p);
    }
    let mut action: Vec<Matrix> = q
        .arrows()
        .map(|(_, a)| Matrix::zeros(dims[a.target - 1], dims[a.source - 1]))
        .collect();
    for p in members {
        for &a in q.outgoing(p.target()) {
            let ext = p.extended(a, q.target(a));
            if !spec.keeps_first_arrow(ext.first_arrow()) {
                continue;
            }
            if let Some(k) = basis.position(&ext) {
                let row = local[&k];
                let col = local[&basis.position(p).expect("basis path")];
                action[a.index()].set(row, col, 1);
            }
        }
    }
    Ok(Rep { dims, action })
}

fn radical_spaces(f: Field, q: &Quiver, rep: &Rep) -> Vec<Subspace> {
    q.vertices()
        .map(|v| {
            let mut columns = Vec::new();
            for (a, arrow) in q.arrows() {
                if arrow.target == v {
                    let m = &rep.action[a.index()];
                    columns.extend((0..m.cols()).map(|c| m.column(c)));
                }
            }
            Subspace::span(f, rep.dim_at(v), &columns)
        })
        .collect()
}

/// Restricts `rep` to a subrepresentation given by one subspace per vertex.
fn restrict(f: Field, q: &Quiver, rep: &Rep, sub: &[Subspace]) -> Rep {
    let dims: Vec<usize> = sub.iter().map(Subspace::rank).collect();
    let action = q
        .arrows()
        .map(|(a, arrow)| {
            let (s, t) = (&sub[arrow.source - 1], &sub[arrow.target - 1]);
            let mut m = Matrix::zeros(t.rank(), s.rank());
            for (k, b) in s.basis.iter().enumerate() {
                let image = rep.action[a.index()].apply(f, b);
                for (r, c) in t.coefficients(&image).into_iter().enumerate() {
                    m.set(r, k, c);
                }
            }
            m
        })
        .collect();
    Rep { dims, action }
}

/// The radical `Σ_a a·M` as a subrepresentation, and the top dimensions.
pub fn radical_and_top(f: Field, q: &Quiver, rep: &Rep) -> (Rep, Vec<usize>) {
    let rad = radical_spaces(f, q, rep);
    let top = rad.iter().zip(&rep.dims).map(|(s, &d)| d - s.rank()).collect();
    (restrict(f, q, rep, &rad), top)
}

/// Kernel of the projective cover `⊕ P(v)^{top_v} -> M`.
pub fn syzygy(f: Field, alg: &Algebra, rep: &Rep) -> Result<Rep> {
    let q = alg.quiver();
    let basis = alg.basis()?;
    let rad = radical_spaces(f, q, rep);

    // top generators: standard vectors completing the radical
    let mut gens: Vec<(Vertex, Vec<u64>)> = Vec::new();
    for v in q.vertices() {
        for c in rad[v - 1].complement_coordinates() {
            let mut e = vec![0; rep.dim_at(v)];
            e[c] = 1;
            gens.push((v, e));
        }
    }

    // cover basis at each vertex: (generator, path) pairs
    let mut cover_dims = vec![0usize; q.vertex_count()];
    // per generator: basis position of path -> local index in the cover
    let mut slot: Vec<BTreeMap<usize, usize>> = Vec::with_capacity(gens.len());
    let mut columns: Vec<Vec<Vec<u64>>> = vec![Vec::new(); q.vertex_count()];
    for (v, m) in &gens {
        let mut slots = BTreeMap::new();
        let mut values: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        for p in basis.from_source(*v) {
            let k = basis.position(p).expect("basis path");
            let value = match p.word().split_last() {
                None => m.clone(),
                Some((&last, prefix)) => {
                    let prev = Path::from_parts(p.source(), q.source(last), prefix.to_vec());
                    let pk = basis.position(&prev).expect("basis is subpath closed");
                    rep.action[last.index()].apply(f, &values[&pk])
                }
            };
            let w = p.target();
            slots.insert(k, cover_dims[w - 1]);
            cover_dims[w - 1] += 1;
            columns[w - 1].push(value.clone());
            values.insert(k, value);
        }
        slot.push(slots);
    }

    let kernels: Vec<Subspace> = q
        .vertices()
        .map(|w| {
            let mut phi = Matrix::zeros(rep.dim_at(w), cover_dims[w - 1]);
            for (c, col) in columns[w - 1].iter().enumerate() {
                for (r, &x) in col.iter().enumerate() {
                    phi.set(r, c, x);
                }
            }
            Subspace::kernel(f, &phi)
        })
        .collect();

    // arrows act on the cover by appending
    let mut cover_action: Vec<Matrix> = q
        .arrows()
        .map(|(_, a)| Matrix::zeros(cover_dims[a.target - 1], cover_dims[a.source - 1]))
        .collect();
    for ((v, _), slots) in gens.iter().zip(&slot) {
        for p in basis.from_source(*v) {
            let col = slots[&basis.position(p).expect("basis path")];
            for &a in q.outgoing(p.target()) {
                if let Some(k) = basis.position(&p.extended(a, q.target(a))) {
                    cover_action[a.index()].set(slots[&k], col, 1);
                }
            }
        }
    }
    let cover = Rep {
        dims: cover_dims,
        action: cover_action,
    };
    Ok(restrict(f, q, &cover, &kernels))
}

/// Betti data of the minimal resolution of `M(i, S)` through `max_deg`.
pub fn minimal_resolution(f: Field, alg: &Algebra, spec: &ModuleSpec, max_deg: usize) -> Result<Resolution> {
    let q = alg.quiver();
    let mut current = rep_of(alg, spec)?;
    let mut betti = Vec::new();
    for _ in 0..=max_deg {
        if current.is_zero() {
            return Ok(Resolution { betti, complete: true });
        }
        let (_, top) = radical_and_top(f, q, &current);
        betti.push(
            top.iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| (i + 1, k))
                .collect(),
        );
        current = syzygy(f, alg, &current)?;
    }
    Ok(Resolution {
        betti,
        complete: current.is_zero(),
    })
}

/// `dim Hom(P(j), M) = dim e_j M`.
pub fn hom_dim(q: &Quiver, j: Vertex, rep: &Rep) -> Result<usize> {
    if j == 0 || j > rep.dims.len() || j > q.vertex_count() {
        return Err(Error::UnknownVertex(j));
    }
    Ok(rep.dim_at(j))
}
