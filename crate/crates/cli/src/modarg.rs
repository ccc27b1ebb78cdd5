//! `--module` values: `S:i`, `P:i`, `Delta:i`, `Gamma:i[:m]`, `M:i:a,b`.

use anyhow::{bail, Context, Result};
use monoquiver::{ModuleSpec, Quiver};

pub fn parse_module(q: &Quiver, text: &str) -> Result<ModuleSpec> {
    let parts: Vec<&str> = text.split(':').collect();
    let vertex = |s: &str| -> Result<usize> { s.parse().with_context(|| format!("`{s}` is not a vertex in `{text}`")) };
    let spec = match parts.as_slice() {
        ["S", i] => ModuleSpec::simple(q, vertex(i)?)?,
        ["P", i] => ModuleSpec::projective(q, vertex(i)?)?,
        ["Delta", i] => ModuleSpec::standard(q, vertex(i)?)?,
        ["Gamma", i] => ModuleSpec::gamma(q, vertex(i)?)?,
        ["Gamma", i, m] => {
            let (i, m) = (vertex(i)?, vertex(m)?);
            if m > q.vertex_count() || i >= m {
                bail!("Gamma:{i}:{m} needs {i} < {m} <= {}", q.vertex_count());
            }
            ModuleSpec::gamma(q, i)?
        }
        ["M", i, arrows] => {
            let ids = arrows
                .split(',')
                .filter(|a| !a.is_empty())
                .map(|a| q.arrow_id(a))
                .collect::<monoquiver::Result<Vec<_>>>()?;
            ModuleSpec::new(q, vertex(i)?, ids)?
        }
        _ => bail!("unrecognized module `{text}`; expected S:i, P:i, Delta:i, Gamma:i[:m] or M:i:a,b"),
    };
    Ok(spec)
}

/// `M(i, {a, b})` with arrow names.
pub fn describe(q: &Quiver, spec: &ModuleSpec) -> String {
    let names: Vec<&str> = spec.killed().iter().map(|&a| q.arrow(a).name.as_str()).collect();
    format!("M({}, {{{}}})", spec.vertex(), names.join(", "))
}
