use std::fmt::Write as _;

use anyhow::{bail, Result};
use monoquiver::homology::{self, euler_characteristic_holds, resolve_with, verify_prop1_formula};
use monoquiver::oracle::minimal_resolution;
use monoquiver::qv1::QuiverFile;
use monoquiver::sqh::IdentityCheck;
use monoquiver::{
    achieve_gldim, build_i, check_strongly_qh, decide_gldim2_exists, ringel_bound_check, simple_pdims,
    verify_sequence_identities, Algebra, Certificate, ChainGraph, ExtNat, Field, ModuleSpec, Plan, Quiver, Resolution,
};

use crate::modarg::{describe, parse_module};
use crate::report::{CertificateJson, CheckJson, ModuleJson, Report, SqhJson};

/// What a command produced: text for humans, the JSON report, and whether
/// the answer was positive (exit 0) or negative (exit 1).
pub struct Outcome {
    pub text: String,
    pub report: Report,
    pub positive: bool,
}

pub struct Input {
    pub file: QuiverFile,
    pub bytes: Vec<u8>,
}

impl Input {
    fn algebra(&self) -> Result<Algebra> {
        let alg = self.file.algebra()?;
        alg.require_admissible()?;
        Ok(alg)
    }

    fn report(&self, command: &'static str) -> Report {
        Report::new(command, &self.bytes)
    }
}

fn dims_text(out: &mut String, pdims: &[ExtNat]) {
    let g = pdims.iter().copied().max().unwrap_or(ExtNat::Finite(0));
    let _ = writeln!(out, "gldim = {g}");
    for (k, d) in pdims.iter().enumerate() {
        let _ = writeln!(out, "pdim S({}) = {d}", k + 1);
    }
}

fn betti_text(out: &mut String, res: &Resolution) {
    for (d, b) in res.betti.iter().enumerate() {
        let terms: Vec<String> = b
            .iter()
            .map(|(v, &k)| {
                if k == 1 {
                    format!("P({v})")
                } else {
                    format!("P({v})^{k}")
                }
            })
            .collect();
        let _ = writeln!(out, "degree {d}: {}", terms.join(" + "));
    }
}

fn module_json(q: &Quiver, name: &str, spec: &ModuleSpec, pdim: ExtNat) -> ModuleJson {
    ModuleJson {
        name: name.to_string(),
        vertex: spec.vertex(),
        killed: spec.killed().iter().map(|&a| q.arrow(a).name.clone()).collect(),
        pdim: pdim.into(),
        betti: None,
        complete: None,
    }
}

pub fn gldim(input: &Input) -> Result<Outcome> {
    let alg = input.algebra()?;
    let pdims = simple_pdims(&alg)?;
    let mut report = input.report("gldim");
    report.set_dims(&pdims);
    let mut text = String::new();
    dims_text(&mut text, &pdims);
    Ok(Outcome {
        text,
        report,
        positive: true,
    })
}

/// Degrees printed for an infinite resolution when `--max-deg` is absent.
pub const DEFAULT_TRUNCATION: usize = 8;

pub fn resolve(input: &Input, module: &str, max_deg: Option<usize>) -> Result<Outcome> {
    let alg = input.algebra()?;
    let q = alg.quiver();
    let spec = parse_module(q, module)?;
    let graph = ChainGraph::build(&alg);
    let pdim = graph.pdim(&alg, &spec);
    let limit = max_deg.or(match pdim {
        ExtNat::Finite(_) => None,
        ExtNat::Infinite => Some(DEFAULT_TRUNCATION),
    });
    let res = resolve_with(&alg, &graph, &spec, limit)?;

    let mut text = String::new();
    let _ = writeln!(text, "module {module} = {}", describe(q, &spec));
    betti_text(&mut text, &res);
    if !res.complete {
        let _ = writeln!(text, "(truncated after degree {})", res.betti.len() - 1);
    }
    let _ = writeln!(text, "pdim = {pdim}");

    let mut report = input.report("resolve");
    report.set_dims(&simple_pdims(&alg)?);
    report.module = Some(module_json(q, module, &spec, pdim).with_resolution(&res));
    Ok(Outcome {
        text,
        report,
        positive: true,
    })
}

fn certificate_text(out: &mut String, q: &Quiver, cert: &Certificate) {
    let _ = writeln!(out, "route {}", cert.kind.name());
    if let Some(m) = cert.m {
        let _ = writeln!(out, "m = {m}");
    }
    if let Some(e) = &cert.embedding {
        let mut chain = e.vertices[0].to_string();
        for (k, &a) in e.arrows.iter().enumerate() {
            let _ = write!(chain, " -{}-> {}", q.arrow(a).name, e.vertices[k + 1]);
        }
        let _ = writeln!(out, "embedding: {chain}");
        if let Some(c) = e.cycle {
            let _ = writeln!(
                out,
                "closing arrow: {} back to vertex {}",
                q.arrow(c.arrow).name,
                e.vertices[c.return_position]
            );
        }
    }
    if !cert.relabeling.is_identity() {
        let moves: Vec<String> = cert
            .relabeling
            .as_slice()
            .iter()
            .enumerate()
            .map(|(k, v)| format!("{}->{v}", k + 1))
            .collect();
        let _ = writeln!(out, "relabeling: {}", moves.join(" "));
    }
    let _ = writeln!(out, "relations ({}):", cert.ideal.len());
    for g in cert.ideal.generators() {
        let _ = writeln!(out, "rel {}  # {}", q.word_string(g), q.composition_string(g));
    }
    let _ = writeln!(out, "claimed gldim = {}", cert.claimed_gldim);
    let _ = writeln!(out, "verified gldim = {}", cert.verified_gldim);
}

fn plan_outcome(input: &Input, command: &'static str, plan: &Plan, text: &mut String) -> (Report, bool) {
    let q = &input.file.quiver;
    let mut report = input.report(command);
    match plan {
        Plan::Certified(cert) => {
            certificate_text(text, q, cert);
            dims_text(text, &cert.pdims);
            report.set_dims(&cert.pdims);
            report.certificate = Some(CertificateJson::new(q, cert));
            (report, true)
        }
        Plan::NotAchievable(reasons) => {
            let _ = writeln!(text, "not achievable by the available constructions");
            for r in reasons {
                let _ = writeln!(text, "  {r}");
            }
            report.reasons = reasons.clone();
            (report, false)
        }
    }
}

pub fn construct(input: &Input, target: usize) -> Result<Outcome> {
    let plan = achieve_gldim(&input.file.quiver, target)?;
    let mut text = String::new();
    if !input.file.relations.is_empty() {
        let _ = writeln!(text, "note: relations in the input are ignored");
    }
    let (report, positive) = plan_outcome(input, "construct", &plan, &mut text);
    Ok(Outcome { text, report, positive })
}

pub fn corollary(input: &Input) -> Result<Outcome> {
    let q = &input.file.quiver;
    let decision = decide_gldim2_exists(q);
    let mut text = String::new();
    if !decision.exists {
        let why = if q.has_loop() {
            "the quiver has a loop"
        } else {
            "no two arrows compose"
        };
        let _ = writeln!(text, "no");
        let _ = writeln!(text, "{why}");
        let mut report = input.report("corollary");
        report.decision = Some(false);
        report.reasons = vec![why.to_string()];
        return Ok(Outcome {
            text,
            report,
            positive: false,
        });
    }
    let _ = writeln!(text, "yes");
    if let Some((path, _)) = &decision.witness {
        let _ = writeln!(
            text,
            "witness path: {}  # {}",
            q.word_string(path),
            q.composition_string(path)
        );
    }
    let plan = achieve_gldim(q, 2)?;
    let (mut report, positive) = plan_outcome(input, "corollary", &plan, &mut text);
    if !positive {
        bail!("gldim 2 construction failed although a witness exists");
    }
    report.decision = Some(true);
    Ok(Outcome {
        text,
        report,
        positive: true,
    })
}

pub fn check_sqh(input: &Input) -> Result<Outcome> {
    let alg = input.algebra()?;
    let sqh = check_strongly_qh(&alg)?;
    let bound = if sqh.verdict {
        Some(ringel_bound_check(&alg)?)
    } else {
        None
    };
    let pdims = simple_pdims(&alg)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "strongly quasi-hereditary: {}",
        if sqh.verdict { "yes" } else { "no" }
    );
    let yn = |b: bool| if b { "ok" } else { "fails" };
    for v in &sqh.vertices {
        let _ = writeln!(
            text,
            "vertex {}: R projective {}, Delta factors {}, Hom(P(j), Delta) {}",
            v.vertex,
            yn(v.r_projective_ok),
            yn(v.delta_factors_ok),
            yn(v.hom_delta_ok)
        );
    }
    if let Some(b) = bound {
        let _ = writeln!(text, "gldim <= n: {}", if b { "yes" } else { "no" });
    }
    dims_text(&mut text, &pdims);

    let mut report = input.report("check-sqh");
    report.set_dims(&pdims);
    report.sqh = Some(SqhJson::new(&sqh, bound));
    let positive = sqh.verdict && bound != Some(false);
    Ok(Outcome { text, report, positive })
}

/// Modules every checking command runs over.
fn standard_modules(q: &Quiver) -> Result<Vec<(String, ModuleSpec)>> {
    let mut out = Vec::new();
    for i in q.vertices() {
        out.push((format!("S({i})"), ModuleSpec::simple(q, i)?));
        out.push((format!("Delta({i})"), ModuleSpec::standard(q, i)?));
        if i < q.vertex_count() {
            out.push((format!("Gamma({i})"), ModuleSpec::gamma(q, i)?));
        }
    }
    Ok(out)
}

fn checks_outcome(input: &Input, command: &'static str, alg: &Algebra, checks: Vec<IdentityCheck>) -> Result<Outcome> {
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{c}");
    }
    let failed = checks.iter().filter(|c| !c.ok).count();
    let _ = writeln!(text, "{} checks, {failed} failed", checks.len());
    let mut report = input.report(command);
    report.set_dims(&simple_pdims(alg)?);
    report.checks = Some(checks.iter().map(CheckJson::from).collect());
    Ok(Outcome {
        text,
        report,
        positive: failed == 0,
    })
}

pub fn verify(input: &Input, m: Option<usize>) -> Result<Outcome> {
    let alg = input.algebra()?;
    let q = alg.quiver();
    let graph = ChainGraph::build(&alg);
    let mut checks = Vec::new();
    for (name, spec) in standard_modules(q)? {
        if graph.pdim(&alg, &spec).is_finite() {
            let res = resolve_with(&alg, &graph, &spec, None)?;
            checks.push(IdentityCheck {
                name: format!("Euler identity for {name}"),
                ok: euler_characteristic_holds(&alg, &spec, &res)?,
                detail: format!("pdim {}", res.betti.len() - 1),
            });
        }
    }
    if !q.has_loop() && alg.relations() == &build_i(q)? {
        let mismatches = verify_prop1_formula(&alg)?;
        checks.push(IdentityCheck {
            name: "closed-form resolutions of the simples".into(),
            ok: mismatches.is_empty(),
            detail: match mismatches.first() {
                None => format!("{} simples", q.vertex_count()),
                Some(first) => first.to_string(),
            },
        });
    }
    if let Some(m) = m {
        checks.extend(verify_sequence_identities(&alg, m)?.checks);
    }
    checks_outcome(input, "verify", &alg, checks)
}

pub fn oracle_check(input: &Input, field: u64, max_deg: usize) -> Result<Outcome> {
    let alg = input.algebra()?;
    let f = Field::new(field)?;
    let mut checks = Vec::new();
    for (name, spec) in standard_modules(alg.quiver())? {
        let chain = homology::resolve(&alg, &spec, Some(max_deg))?;
        let oracle = minimal_resolution(f, &alg, &spec, max_deg)?;
        let ranks = |r: &Resolution| {
            (0..r.betti.len())
                .map(|d| r.rank(d).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        checks.push(IdentityCheck {
            name: format!("{name} over F_{field}"),
            ok: chain == oracle,
            detail: if chain == oracle {
                format!("ranks {}", ranks(&chain))
            } else {
                format!("chain ranks {} vs oracle ranks {}", ranks(&chain), ranks(&oracle))
            },
        });
    }
    checks_outcome(input, "oracle-check", &alg, checks)
}

pub fn render(input: &Input, module: &str) -> Result<Outcome> {
    let alg = input.algebra()?;
    let spec = parse_module(alg.quiver(), module)?;
    let dot = monoquiver::render_module_quiver(&alg, &spec)?;
    let mut report = input.report("render");
    report.set_dims(&simple_pdims(&alg)?);
    report.dot = Some(dot.clone());
    Ok(Outcome {
        text: dot,
        report,
        positive: true,
    })
}
