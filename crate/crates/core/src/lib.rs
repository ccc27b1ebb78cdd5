//! Finite-dimensional algebras `kQ/I` given by a quiver and zero relations.
//!
//! The crate computes path bases, minimal projective resolutions of
//! truncated projective modules, projective and global dimensions, and
//! builds monomial ideals realizing a prescribed global dimension on a given
//! quiver. A second, independent resolution engine works with explicit
//! matrices over `F_p` and is used to cross-check the combinatorial one.
//!
//! Paths are stored in traversal order: the word `[a, b]` walks `a` first.
//!
//! ```
//! use monoquiver::{gldim, Algebra, ExtNat, Quiver, RelationSet};
//!
//! let q = Quiver::linear(3);
//! let rels = RelationSet::from_names(&q, &[&["a1", "a2"]]).unwrap();
//! let alg = Algebra::new(q, rels).unwrap();
//! assert_eq!(gldim(&alg).unwrap(), ExtNat::Finite(2));
//! ```

pub mod algebra;
pub mod construct;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod module;
pub mod oracle;
pub mod quiver;
pub mod qv1;
pub mod render;
pub mod sqh;
pub mod subquiver;

pub use algebra::{Admissibility, Algebra, BasisIndex, RelationSet};
pub use construct::{
    achieve_gldim, build_i, build_idoubleprime, build_iprime, decide_gldim2_exists, Certificate, ConstructionKind, Plan,
};
pub use error::{Error, Result};
pub use homology::{gldim, pdim, resolve, simple_pdims, ChainGraph, ExtNat, Resolution};
pub use linalg::Field;
pub use module::{CompositionVector, ModuleSpec};
pub use quiver::{Arrow, ArrowId, Path, Quiver, Vertex};
pub use render::render_module_quiver;
pub use sqh::{check_strongly_qh, ringel_bound_check, verify_sequence_identities};
pub use subquiver::{find_a_embeddings, find_x_embedding, relabel, Embedding, Relabeling};
