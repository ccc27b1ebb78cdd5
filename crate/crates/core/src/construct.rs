//! Ideals realizing prescribed global dimensions, and a planner that picks one
//! for a given quiver and certifies it by computing the global dimension.
//!
//! All constructions assume a loopless quiver whose vertices have already been
//! relabeled into the required position:
//!
//! * [`build_i`]: every length-two path `x -> v -> y` whose middle vertex is
//!   larger than both ends. Global dimension at most two.
//! * [`build_iprime`]: additionally the consecutive paths `i -> i+1 -> i+2`
//!   for `i <= m - 2`. Global dimension `m - 1` when the linear subquiver on
//!   `1..=m` has no arrow from `m` back into it, and `m` when it has.
//! * [`build_idoubleprime`]: consecutive paths only for `i <= m - 4`, plus the
//!   length-three paths `m-3 -> m-2 -> m-1 -> m`. Global dimension `m - 1`
//!   when `m` has an arrow back into `1..=m`.

use crate::algebra::{Algebra, RelationSet};
use crate::error::{Error, Result};
use crate::homology::{simple_pdims, ExtNat};
use crate::quiver::{Path, Quiver, Vertex};
use crate::subquiver::{
    find_a_embeddings, find_x_embedding, is_extendable, relabel, relabeling_from_embedding, Embedding, Relabeling,
};

fn require_loopless(q: &Quiver) -> Result<()> {
    match q.arrows().find(|(_, a)| a.is_loop()) {
        Some((_, a)) => Err(Error::LoopPresent(a.name.clone())),
        None => Ok(()),
    }
}

fn require_chain(q: &Quiver, m: usize) -> Result<()> {
    if m > q.vertex_count() {
        return Err(Error::InvalidParameter(format!(
            "m = {m} exceeds the vertex count {}",
            q.vertex_count()
        )));
    }
    for i in 1..m {
        if q.r(i, i + 1) == 0 {
            return Err(Error::MissingArrow { from: i, to: i + 1 });
        }
    }
    Ok(())
}

/// All paths `v_0 -> v_1 -> ... -> v_k` through the given vertices, over
/// every choice of parallel arrows.
fn paths_through(q: &Quiver, vertices: &[Vertex]) -> Vec<Path> {
    let mut out = vec![Path::trivial(vertices[0])];
    for w in vertices.windows(2) {
        let arrows = q.arrows_between(w[0], w[1]);
        out = out
            .iter()
            .flat_map(|p| {
                arrows
                    .iter()
                    .map(move |&a| p.compose(&q.arrow_path(a)).expect("consecutive"))
            })
            .collect();
    }
    out
}

/// The local-maximum ideal: `x -> v -> y` with `v > x` and `v > y`.
pub fn build_i(q: &Quiver) -> Result<RelationSet> {
    require_loopless(q)?;
    let mut gens = Vec::new();
    for (x, arrow) in q.arrows() {
        let v = arrow.target;
        if arrow.source >= v {
            continue;
        }
        for &y in q.outgoing(v) {
            if q.target(y) < v {
                gens.push(q.arrow_path(x).compose(&q.arrow_path(y))?);
            }
        }
    }
    RelationSet::reduce(q, gens)
}

fn consecutive_pairs(q: &Quiver, upto: usize) -> Vec<Path> {
    (1..=upto).flat_map(|i| paths_through(q, &[i, i + 1, i + 2])).collect()
}

/// [`build_i`] plus the consecutive paths `i -> i+1 -> i+2`, `1 <= i <= m-2`.
pub fn build_iprime(q: &Quiver, m: usize) -> Result<RelationSet> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("I' needs m >= 2, got {m}")));
    }
    require_chain(q, m)?;
    let base = build_i(q)?;
    let extra = RelationSet::reduce(q, consecutive_pairs(q, m - 2))?;
    base.union(q, &extra)
}

/// [`build_i`] plus consecutive paths for `i <= m-4` and every length-three
/// path `m-3 -> m-2 -> m-1 -> m`.
pub fn build_idoubleprime(q: &Quiver, m: usize) -> Result<RelationSet> {
    if m < 4 {
        return Err(Error::InvalidParameter(format!("I'' needs m >= 4, got {m}")));
    }
    require_chain(q, m)?;
    let base = build_i(q)?;
    let pairs = consecutive_pairs(q, m - 4);
    let triples = paths_through(q, &[m - 3, m - 2, m - 1, m]);
    for t in &triples {
        assert!(
            !base.generators().iter().chain(&pairs).any(|g| t.contains_infix(g)),
            "length-three relation contains a shorter one"
        );
    }
    let extra = RelationSet::reduce(q, pairs.into_iter().chain(triples))?;
    base.union(q, &extra)
}

/// Moves a relation set from the relabeled quiver back along `to_original`.
fn transport(original: &Quiver, rels: &RelationSet, to_original: &Relabeling) -> Result<RelationSet> {
    let paths = rels
        .generators()
        .iter()
        .map(|p| original.path_from_ids(to_original.apply(p.source()), p.word()))
        .collect::<Result<Vec<_>>>()?;
    RelationSet::reduce(original, paths)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gldim2Decision {
    pub exists: bool,
    /// First length-two path, and the relabeling sending its middle vertex to `n`.
    pub witness: Option<(Path, Relabeling)>,
}

/// Whether some admissible ideal gives global dimension exactly two: the
/// quiver must be loopless and contain a composable pair of arrows.
pub fn decide_gldim2_exists(q: &Quiver) -> Gldim2Decision {
    if q.has_loop() {
        return Gldim2Decision {
            exists: false,
            witness: None,
        };
    }
    for (x, arrow) in q.arrows() {
        if let Some(&y) = q.outgoing(arrow.target).first() {
            let path = q.arrow_path(x).compose(&q.arrow_path(y)).expect("composable");
            let sigma = Relabeling::with_top(q.vertex_count(), arrow.target).expect("vertex exists");
            return Gldim2Decision {
                exists: true,
                witness: Some((path, sigma)),
            };
        }
    }
    Gldim2Decision {
        exists: false,
        witness: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    /// No arrows, no relations: global dimension 0.
    Semisimple,
    /// No oriented cycles, no relations: global dimension 1.
    Hereditary,
    /// Local-maximum ideal after moving a middle vertex to the top.
    GldimLE2,
    /// `I'` on a non-extendable linear subquiver `A_m`: `m - 1`.
    PropA,
    /// `I'` on an `X_m`: `m`.
    PropX1,
    /// `I''` on an `X_m`: `m - 1`.
    PropX2,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::Semisimple => "Semisimple",
            ConstructionKind::Hereditary => "Hereditary",
            ConstructionKind::GldimLE2 => "GldimLE2",
            ConstructionKind::PropA => "PropA",
            ConstructionKind::PropX1 => "PropX1",
            ConstructionKind::PropX2 => "PropX2",
        }
    }
}

/// A constructed ideal together with its computed global dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: ConstructionKind,
    pub target: usize,
    pub m: Option<usize>,
    pub embedding: Option<Embedding>,
    pub relabeling: Relabeling,
    /// Generators in the labels of the input quiver.
    pub ideal: RelationSet,
    pub claimed_gldim: ExtNat,
    pub verified_gldim: ExtNat,
    /// `pdim S(v)` for the input labels.
    pub pdims: Vec<ExtNat>,
}

impl Certificate {
    /// Rebuilds the ideal from kind, parameter and relabeling alone.
    pub fn replay(&self, q: &Quiver) -> Result<RelationSet> {
        let relabeled = relabel(q, &self.relabeling)?;
        let m = || {
            self.m
                .ok_or_else(|| Error::InvalidParameter("certificate lacks m".into()))
        };
        let rels = match self.kind {
            ConstructionKind::Semisimple | ConstructionKind::Hereditary => RelationSet::empty(),
            ConstructionKind::GldimLE2 => build_i(&relabeled)?,
            ConstructionKind::PropA | ConstructionKind::PropX1 => build_iprime(&relabeled, m()?)?,
            ConstructionKind::PropX2 => build_idoubleprime(&relabeled, m()?)?,
        };
        transport(q, &rels, &self.relabeling.inverse())
    }

    /// The algebra on the relabeled quiver, where the construction's vertex
    /// order holds (relevant for the strongly quasi-hereditary check).
    pub fn relabeled_algebra(&self, q: &Quiver) -> Result<Algebra> {
        let relabeled = relabel(q, &self.relabeling)?;
        let rels = transport(&relabeled, &self.ideal, &self.relabeling)?;
        Algebra::new(relabeled, rels)
    }

    pub fn max_relation_len(&self) -> usize {
        self.ideal.max_len()
    }
}

/// Result of [`achieve_gldim`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Plan {
    Certified(Box<Certificate>),
    /// None of the constructions applies; the reasons list what was missing.
    /// This is not a proof that the dimension is impossible.
    NotAchievable(Vec<String>),
}

impl Plan {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Plan::Certified(c) => Some(c),
            Plan::NotAchievable(_) => None,
        }
    }
}

struct Route {
    kind: ConstructionKind,
    m: Option<usize>,
    embedding: Option<Embedding>,
    relabeling: Relabeling,
    claimed: usize,
}

fn certify(q: &Quiver, target: usize, route: Route) -> Result<Plan> {
    let relabeled = relabel(q, &route.relabeling)?;
    let rels = match route.kind {
        ConstructionKind::Semisimple | ConstructionKind::Hereditary => RelationSet::empty(),
        ConstructionKind::GldimLE2 => build_i(&relabeled)?,
        ConstructionKind::PropA | ConstructionKind::PropX1 => build_iprime(&relabeled, route.m.expect("m"))?,
        ConstructionKind::PropX2 => build_idoubleprime(&relabeled, route.m.expect("m"))?,
    };
    let ideal = transport(q, &rels, &route.relabeling.inverse())?;
    let alg = Algebra::new(q.clone(), ideal.clone())?;
    let pdims = simple_pdims(&alg)?;
    let verified = pdims.iter().copied().max().unwrap_or(ExtNat::Finite(0));
    let claimed = ExtNat::Finite(route.claimed);
    if verified != claimed {
        return Err(Error::VerificationMismatch {
            construction: route.kind.name().to_string(),
            claimed: claimed.to_string(),
            verified: verified.to_string(),
        });
    }
    Ok(Plan::Certified(Box::new(Certificate {
        kind: route.kind,
        target,
        m: route.m,
        embedding: route.embedding,
        relabeling: route.relabeling,
        ideal,
        claimed_gldim: claimed,
        verified_gldim: verified,
        pdims,
    })))
}

/// Finds an admissible monomial ideal with global dimension exactly `target`
/// using the constructions above, verifying the result before returning it.
///
/// For `target >= 3` the routes are tried in order: a non-extendable
/// `A_{target+1}` with `I'`, an `X_target` with `I'`, an `X_{target+1}` with
/// `I''`.
pub fn achieve_gldim(q: &Quiver, target: usize) -> Result<Plan> {
    let n = q.vertex_count();
    if let Some((_, a)) = q.arrows().find(|(_, a)| a.is_loop()) {
        return Ok(Plan::NotAchievable(vec![format!(
            "arrow `{}` is a loop: every admissible ideal has infinite global dimension",
            a.name
        )]));
    }
    let identity = Relabeling::identity(n);
    match target {
        0 => {
            if q.arrow_count() > 0 {
                return Ok(Plan::NotAchievable(vec![
                    "the quiver has arrows, so some simple module is not projective".into(),
                ]));
            }
            certify(
                q,
                0,
                Route {
                    kind: ConstructionKind::Semisimple,
                    m: None,
                    embedding: None,
                    relabeling: identity,
                    claimed: 0,
                },
            )
        }
        1 => {
            if q.arrow_count() == 0 {
                return Ok(Plan::NotAchievable(vec!["the quiver has no arrows".into()]));
            }
            if q.has_oriented_cycle() {
                return Ok(Plan::NotAchievable(vec![
                    "the quiver has an oriented cycle, which no admissible ideal with global dimension 1 allows".into(),
                ]));
            }
            certify(
                q,
                1,
                Route {
                    kind: ConstructionKind::Hereditary,
                    m: None,
                    embedding: None,
                    relabeling: identity,
                    claimed: 1,
                },
            )
        }
        2 => {
            let decision = decide_gldim2_exists(q);
            let Some((_, sigma)) = decision.witness else {
                return Ok(Plan::NotAchievable(vec!["no two arrows compose".into()]));
            };
            certify(
                q,
                2,
                Route {
                    kind: ConstructionKind::GldimLE2,
                    m: None,
                    embedding: None,
                    relabeling: sigma,
                    claimed: 2,
                },
            )
        }
        k => {
            let mut reasons = Vec::new();

            let m = k + 1;
            let mut non_extendable = None;
            for emb in find_a_embeddings(q, m) {
                let emb = emb?;
                if is_extendable(q, &emb).is_none() {
                    non_extendable = Some(emb);
                    break;
                }
            }
            if let Some(emb) = non_extendable {
                let sigma = relabeling_from_embedding(q, &emb)?;
                return certify(
                    q,
                    k,
                    Route {
                        kind: ConstructionKind::PropA,
                        m: Some(m),
                        embedding: Some(emb),
                        relabeling: sigma,
                        claimed: m - 1,
                    },
                );
            }
            reasons.push(format!("no non-extendable A_{m} subquiver"));

            if let Some(emb) = find_x_embedding(q, k)? {
                let sigma = relabeling_from_embedding(q, &emb)?;
                return certify(
                    q,
                    k,
                    Route {
                        kind: ConstructionKind::PropX1,
                        m: Some(k),
                        embedding: Some(emb),
                        relabeling: sigma,
                        claimed: k,
                    },
                );
            }
            reasons.push(format!("no X_{k} subquiver"));

            if let Some(emb) = find_x_embedding(q, m)? {
                let sigma = relabeling_from_embedding(q, &emb)?;
                return certify(
                    q,
                    k,
                    Route {
                        kind: ConstructionKind::PropX2,
                        m: Some(m),
                        embedding: Some(emb),
                        relabeling: sigma,
                        claimed: m - 1,
                    },
                );
            }
            reasons.push(format!("no X_{m} subquiver"));
            reasons.push(format!("global dimension {k} is not achievable by these constructions"));
            Ok(Plan::NotAchievable(reasons))
        }
    }
}
