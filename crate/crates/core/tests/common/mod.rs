#![allow(dead_code)]

use std::collections::BTreeMap;

use monoquiver::oracle::minimal_resolution;
use monoquiver::{
    build_i, build_idoubleprime, build_iprime, homology, Algebra, Field, ModuleSpec, Quiver, RelationSet, Resolution,
    Vertex,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6d6f6e6f;

/// a:1→2, b:2→3, c:3→1, d:2→1, e:3→2, f:1→3
pub fn example_quiver() -> Quiver {
    Quiver::new(
        3,
        [
            ("a", 1, 2),
            ("b", 2, 3),
            ("c", 3, 1),
            ("d", 2, 1),
            ("e", 3, 2),
            ("f", 1, 3),
        ],
    )
    .unwrap()
}

/// The five local-maximum relations of the example, traversal order.
pub const EXAMPLE_I: [[&str; 2]; 5] = [["a", "d"], ["f", "c"], ["f", "e"], ["b", "c"], ["b", "e"]];

pub fn example_i() -> Algebra {
    let q = example_quiver();
    let words: Vec<&[&str]> = EXAMPLE_I.iter().map(|w| &w[..]).collect();
    let rels = RelationSet::from_names(&q, &words).unwrap();
    Algebra::new(q, rels).unwrap()
}

pub fn example_iprime() -> Algebra {
    let q = example_quiver();
    let mut words: Vec<&[&str]> = EXAMPLE_I.iter().map(|w| &w[..]).collect();
    words.push(&["a", "b"]);
    let rels = RelationSet::from_names(&q, &words).unwrap();
    Algebra::new(q, rels).unwrap()
}

pub fn local_max(q: &Quiver) -> Algebra {
    Algebra::new(q.clone(), build_i(q).unwrap()).unwrap()
}

pub fn iprime(q: &Quiver, m: usize) -> Algebra {
    Algebra::new(q.clone(), build_iprime(q, m).unwrap()).unwrap()
}

pub fn idoubleprime(q: &Quiver, m: usize) -> Algebra {
    Algebra::new(q.clone(), build_idoubleprime(q, m).unwrap()).unwrap()
}

/// `1 → 2 → ... → n` with every consecutive pair of arrows composing to zero.
pub fn linear_consecutive(n: usize) -> Algebra {
    let q = Quiver::linear(n);
    let names: Vec<[String; 2]> = (1..n.saturating_sub(1))
        .map(|i| [format!("a{i}"), format!("a{}", i + 1)])
        .collect();
    let words: Vec<&[String]> = names.iter().map(|w| &w[..]).collect();
    let rels = RelationSet::from_names(&q, &words).unwrap();
    Algebra::new(q, rels).unwrap()
}

/// One loop `a` at a single vertex with `a³ = 0`.
pub fn one_loop() -> Algebra {
    let q = Quiver::new(1, [("a", 1, 1)]).unwrap();
    let rels = RelationSet::from_names(&q, &[&["a", "a", "a"]]).unwrap();
    Algebra::new(q, rels).unwrap()
}

/// The complete loopless 5-vertex quiver without the arrows `4 → 1, 2, 3`.
pub fn a4_non_extendable() -> Quiver {
    let mut arrows = Vec::new();
    for i in 1..=5usize {
        for j in 1..=5usize {
            if i != j && !(i == 4 && j < 4) {
                arrows.push((format!("a{i}_{j}"), i, j));
            }
        }
    }
    Quiver::new(5, arrows).unwrap()
}

/// A loopless quiver on at most `n_max` vertices; each ordered pair gets
/// between 0 and `r_max` arrows.
pub fn random_loopless(rng: &mut impl Rng, n_max: usize, r_max: usize) -> Quiver {
    let n = rng.gen_range(1..=n_max);
    let density: f64 = rng.gen_range(0.15..0.6);
    let mut arrows = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j || !rng.gen_bool(density) {
                continue;
            }
            for t in 0..rng.gen_range(1..=r_max) {
                arrows.push((format!("x{i}_{j}_{t}"), i, j));
            }
        }
    }
    Quiver::new(n, arrows).unwrap()
}

pub fn random_suite() -> Vec<Quiver> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..50).map(|_| random_loopless(&mut rng, 6, 2)).collect()
}

/// Adjacency counts `r[i][j]`, straight from the arrow list.
pub fn adjacency(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let mut r = vec![vec![0; n + 1]; n + 1];
    for (_, a) in q.arrows() {
        r[a.source][a.target] += 1;
    }
    r
}

/// Betti data of `S(i)` for the local-maximum ideal, counted directly from
/// the arrows: `P(i)`, then `P(j)` per arrow `i→j`, then `P(k)` per pair
/// `i→j→k` with `j` above both `i` and `k`.
#[allow(clippy::needless_range_loop)]
pub fn local_max_betti(q: &Quiver, i: Vertex) -> Vec<BTreeMap<Vertex, usize>> {
    let r = adjacency(q);
    let n = q.vertex_count();
    let mut out = vec![BTreeMap::from([(i, 1)])];
    let mut d1 = BTreeMap::new();
    let mut d2 = BTreeMap::new();
    for j in 1..=n {
        if r[i][j] > 0 {
            d1.insert(j, r[i][j]);
        }
        for k in 1..=n {
            if j > i && j > k && r[i][j] * r[j][k] > 0 {
                *d2.entry(k).or_insert(0) += r[i][j] * r[j][k];
            }
        }
    }
    for d in [d1, d2] {
        if d.is_empty() {
            break;
        }
        out.push(d);
    }
    out
}

/// Nonzero walks found by plain depth-first search over arrow words,
/// rejecting a word as soon as it contains a relation word. Returns the
/// number of walks (trivial ones included) and the longest length, or
/// `None` when more than `cap` walks exist.
pub fn brute_force_walks(alg: &Algebra, cap: usize) -> Option<(usize, usize)> {
    let q = alg.quiver();
    let rels: Vec<Vec<usize>> = alg
        .relations()
        .generators()
        .iter()
        .map(|g| g.word().iter().map(|a| a.index()).collect())
        .collect();
    let arrows: Vec<(usize, Vertex, Vertex)> = q.arrows().map(|(id, a)| (id.index(), a.source, a.target)).collect();
    let mut count = 0;
    let mut longest = 0;
    let mut stack: Vec<(Vertex, Vec<usize>)> = q.vertices().map(|v| (v, Vec::new())).collect();
    while let Some((end, word)) = stack.pop() {
        count += 1;
        if count > cap {
            return None;
        }
        longest = longest.max(word.len());
        for &(a, s, t) in &arrows {
            if s != end {
                continue;
            }
            let mut w = word.clone();
            w.push(a);
            if rels
                .iter()
                .any(|r| w.len() >= r.len() && w.windows(r.len()).any(|x| x == r.as_slice()))
            {
                continue;
            }
            stack.push((t, w));
        }
    }
    Some((count, longest))
}

/// Every truncated module the suites compare: `S(i)`, `Δ(i)` and, below the
/// top vertex, `Γ(i)`.
pub fn test_modules(q: &Quiver) -> Vec<(String, ModuleSpec)> {
    let mut out = Vec::new();
    for i in q.vertices() {
        out.push((format!("S({i})"), ModuleSpec::simple(q, i).unwrap()));
        out.push((format!("Delta({i})"), ModuleSpec::standard(q, i).unwrap()));
        if i < q.vertex_count() {
            out.push((format!("Gamma({i})"), ModuleSpec::gamma(q, i).unwrap()));
        }
    }
    out
}

/// Resolves with the chain engine and, when the result is complete, checks
/// the Euler identity on it.
pub fn resolve_checked(alg: &Algebra, spec: &ModuleSpec, max_deg: Option<usize>) -> Resolution {
    let res = homology::resolve(alg, spec, max_deg).unwrap();
    if res.complete {
        assert!(
            homology::euler_characteristic_holds(alg, spec, &res).unwrap(),
            "Euler identity fails for {spec:?}"
        );
    }
    res
}

/// Chain engine against the matrix oracle, degrees `0..=max_deg`.
pub fn engines_agree(alg: &Algebra, f: Field, max_deg: usize) -> Result<usize, String> {
    let mut compared = 0;
    for (name, spec) in test_modules(alg.quiver()) {
        let chain = resolve_checked(alg, &spec, Some(max_deg));
        let oracle = minimal_resolution(f, alg, &spec, max_deg).map_err(|e| e.to_string())?;
        if chain != oracle {
            return Err(format!(
                "{name} over F_{}: chain {:?} vs oracle {:?}",
                f.modulus(),
                chain,
                oracle
            ));
        }
        compared += 1;
    }
    Ok(compared)
}
