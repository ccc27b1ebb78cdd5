//! The JSON report written by `--json`.

use std::collections::BTreeMap;

use monoquiver::construct::Certificate;
use monoquiver::sqh::{IdentityCheck, SqhReport};
use monoquiver::{ExtNat, Quiver, Resolution};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// A dimension: an integer or the string `"inf"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Dim {
    Finite(usize),
    Infinite(&'static str),
}

impl From<ExtNat> for Dim {
    fn from(d: ExtNat) -> Self {
        match d {
            ExtNat::Finite(k) => Dim::Finite(k),
            ExtNat::Infinite => Dim::Infinite("inf"),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub input_hash: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gldim: Option<Dim>,
    pub pdims: BTreeMap<usize, Dim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sqh: Option<SqhJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckJson>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dot: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, input: &[u8]) -> Self {
        Report {
            command,
            input_hash: hex::encode(Sha256::digest(input)),
            ..Report::default()
        }
    }

    pub fn set_dims(&mut self, pdims: &[ExtNat]) {
        self.gldim = Some(pdims.iter().copied().max().unwrap_or(ExtNat::Finite(0)).into());
        self.pdims = pdims.iter().enumerate().map(|(k, &d)| (k + 1, d.into())).collect();
    }
}

#[derive(Debug, Serialize)]
pub struct ModuleJson {
    pub name: String,
    pub vertex: usize,
    pub killed: Vec<String>,
    pub pdim: Dim,
    /// `betti[d]` maps vertex to multiplicity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<BTreeMap<usize, usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
}

impl ModuleJson {
    pub fn with_resolution(mut self, res: &Resolution) -> Self {
        self.betti = Some(res.betti.clone());
        self.complete = Some(res.complete);
        self
    }
}

#[derive(Debug, Serialize)]
pub struct EmbeddingJson {
    pub vertices: Vec<usize>,
    pub arrows: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_arrow: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub return_position: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct CertificateJson {
    pub kind: &'static str,
    pub target: usize,
    pub m: Option<usize>,
    pub embedding: Option<EmbeddingJson>,
    /// New label of each vertex `1..=n`, in order.
    pub relabeling: Vec<usize>,
    /// Arrow names in traversal order.
    pub generators: Vec<Vec<String>>,
    pub claimed_gldim: Dim,
    pub verified_gldim: Dim,
}

impl CertificateJson {
    pub fn new(q: &Quiver, cert: &Certificate) -> Self {
        let name = |a: monoquiver::ArrowId| q.arrow(a).name.clone();
        CertificateJson {
            kind: cert.kind.name(),
            target: cert.target,
            m: cert.m,
            embedding: cert.embedding.as_ref().map(|e| EmbeddingJson {
                vertices: e.vertices.clone(),
                arrows: e.arrows.iter().map(|&a| name(a)).collect(),
                cycle_arrow: e.cycle.map(|c| name(c.arrow)),
                return_position: e.cycle.map(|c| c.return_position),
            }),
            relabeling: cert.relabeling.as_slice().to_vec(),
            generators: cert
                .ideal
                .generators()
                .iter()
                .map(|g| g.word().iter().map(|&a| name(a)).collect())
                .collect(),
            claimed_gldim: cert.claimed_gldim.into(),
            verified_gldim: cert.verified_gldim.into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SqhVertexJson {
    pub vertex: usize,
    pub r_projective: bool,
    pub delta_factors: bool,
    pub hom_delta: bool,
}

#[derive(Debug, Serialize)]
pub struct SqhJson {
    pub verdict: bool,
    pub hom_criterion: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gldim_at_most_n: Option<bool>,
    pub vertices: Vec<SqhVertexJson>,
}

impl SqhJson {
    pub fn new(report: &SqhReport, bound: Option<bool>) -> Self {
        SqhJson {
            verdict: report.verdict,
            hom_criterion: report.hom_criterion(),
            gldim_at_most_n: bound,
            vertices: report
                .vertices
                .iter()
                .map(|v| SqhVertexJson {
                    vertex: v.vertex,
                    r_projective: v.r_projective_ok,
                    delta_factors: v.delta_factors_ok,
                    hom_delta: v.hom_delta_ok,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl From<&IdentityCheck> for CheckJson {
    fn from(c: &IdentityCheck) -> Self {
        CheckJson {
            name: c.name.clone(),
            ok: c.ok,
            detail: c.detail.clone(),
        }
    }
}
