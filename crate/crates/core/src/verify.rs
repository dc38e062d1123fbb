//! Executable verification suites declared in TOML manifests.
//!
//! Each `[[check]]` entry names one claim, the operation that tests it, and the
//! parameter range. Running a suite yields one [`CheckOutcome`] per entry.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bounds::{check_join_criterion, eulerian3_fvector, f1_j, f1_jstar, facet_sums_sweep};
use crate::complex::{Face, SimplicialComplex};
use crate::constructions::{
    balanced_join, cross_polytope_boundary, gj, gj_enumerate_specs, remark_complex, suspended_join,
};
use crate::corpus;
use crate::enumerate::{are_isomorphic, enumerate_class, maximizers, ComplexClass};
use crate::error::{Error, Result};
use crate::validators;

pub const VERIFY_SCHEMA: &str = "flagtop.verify.v1";

const BUILTIN: &[(&str, &str)] = &[("paper-core", include_str!("../suites/paper-core.toml"))];

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct VerifySuite {
    pub id: String,
    pub description: String,
    #[serde(rename = "check")]
    pub checks: Vec<CheckEntry>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub claim: String,
    #[serde(flatten)]
    pub check: Check,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    /// `f₁` of balanced and suspended joins against the closed forms.
    FormulaConstruction { m: Vec<usize>, n_max: usize },
    /// `(f₂, f₃) = (2f₁ − 2f₀, f₁ − f₀)` on constructed and enumerated Eulerian complexes.
    EulerianFvectorLaw { n_max: usize, enumerate_max: usize },
    /// Every union-of-joins spec yields a flag Eulerian complex with the f-vector of `J₂(n)`.
    GjMaximizers { n_min: usize, n_max: usize },
    /// Facet link sums on every flag weak 3-pseudomanifold of the corpus.
    FacetSums { enumerate_max: usize },
    /// Exactly one flag normal 3-pseudomanifold on `n` vertices, isomorphic to `J₂(n)`.
    FewVertices { n: Vec<usize> },
    /// Maximum edge count among flag 3-manifolds on `n` vertices and its unique maximizer.
    ThreeManifold { n: usize },
    /// Flag Eulerian maximizers coincide with the union-of-joins family.
    EulerianEquality { n: Vec<usize> },
    /// The weak-but-not-normal example and its strict join containment.
    WeakNotNormal { lengths: [usize; 4] },
    /// Randomized identities over small complexes.
    Properties { instances: usize, seed: u64 },
    /// `f₁(J₃(n))` against the closed form, and flag 5-complexes of the corpus under it.
    FiveDimConsistency { n_min: usize, n_max: usize },
}

impl VerifySuite {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::InvalidParameters(format!("suite manifest: {e}")))
    }

    pub fn builtin(id: &str) -> Result<Self> {
        let (_, text) = BUILTIN
            .iter()
            .find(|(name, _)| *name == id)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown suite {id:?}")))?;
        Self::parse(text)
    }

    pub fn builtin_ids() -> impl Iterator<Item = &'static str> {
        BUILTIN.iter().map(|(id, _)| *id)
    }

    pub fn run(&self) -> SuiteReport {
        let checks: Vec<CheckOutcome> = self.checks.iter().map(CheckEntry::run).collect();
        SuiteReport { schema: VERIFY_SCHEMA, suite: self.id.clone(), passed: checks.iter().all(|c| c.passed), checks }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub claim: String,
    pub passed: bool,
    /// Facts established along the way, and the first failure when there is one.
    pub details: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckEntry {
    pub fn run(&self) -> CheckOutcome {
        let start = Instant::now();
        let mut log = Log::default();
        if let Err(e) = self.check.run(&mut log) {
            log.fail(format!("error: {e}"));
        }
        CheckOutcome {
            id: self.id.clone(),
            claim: self.claim.clone(),
            passed: log.ok,
            details: log.lines,
            wall_time: start.elapsed(),
        }
    }
}

struct Log {
    ok: bool,
    lines: Vec<String>,
}

impl Default for Log {
    fn default() -> Self {
        Log { ok: true, lines: Vec::new() }
    }
}

impl Log {
    fn note(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn fail(&mut self, s: impl Into<String>) {
        self.ok = false;
        self.lines.push(format!("FAIL {}", s.into()));
    }

    fn expect(&mut self, cond: bool, s: impl FnOnce() -> String) {
        if !cond {
            self.fail(s());
        }
    }
}

fn eulerian_law(k: &SimplicialComplex) -> Result<bool> {
    let f = k.f_vector();
    Ok(eulerian3_fvector(f.get(0), f.get(1))? == f)
}

impl Check {
    fn run(&self, log: &mut Log) -> Result<()> {
        match self {
            Check::FormulaConstruction { m, n_max } => {
                let mut cases = 0;
                for &m in m {
                    for n in 4 * m..=*n_max {
                        let got = balanced_join(m, n)?.one_skeleton().edge_count() as i64;
                        log.expect(got == f1_j(m, n)?, || format!("f1(J{m}({n})) = {got}"));
                        cases += 1;
                    }
                    for n in 4 * m + 2..=*n_max {
                        let got = suspended_join(m, n)?.one_skeleton().edge_count() as i64;
                        log.expect(got == f1_jstar(m, n)?, || format!("f1(J{m}*({n})) = {got}"));
                        cases += 1;
                    }
                }
                log.note(format!("{cases} joins compared"));
            }
            Check::EulerianFvectorLaw { n_max, enumerate_max } => {
                let mut complexes: Vec<(String, SimplicialComplex)> = Vec::new();
                for n in 8..=*n_max {
                    complexes.push((format!("J2({n})"), balanced_join(2, n)?));
                    for spec in gj_enumerate_specs(n) {
                        complexes.push((format!("GJ({n};{:?},{:?})", spec.a, spec.b), gj(&spec)?));
                    }
                }
                for n in 8..=*enumerate_max {
                    let r = enumerate_class(n, ComplexClass::FlagEulerian3, None)?;
                    for (i, rep) in r.representatives.into_iter().enumerate() {
                        complexes.push((format!("enumerated n={n} #{i}"), rep.complex));
                    }
                }
                for (name, k) in &complexes {
                    log.expect(validators::is_eulerian(k).holds, || format!("{name} is not Eulerian"));
                    log.expect(eulerian_law(k)?, || format!("{name} has f-vector {}", k.f_vector()));
                }
                log.note(format!("{} Eulerian complexes checked", complexes.len()));
            }
            Check::GjMaximizers { n_min, n_max } => {
                let mut specs = 0;
                for n in *n_min..=*n_max {
                    let target = balanced_join(2, n)?.f_vector();
                    for spec in gj_enumerate_specs(n) {
                        let k = gj(&spec)?;
                        let ok = validators::is_flag(&k).holds
                            && validators::is_eulerian(&k).holds
                            && k.f_vector() == target;
                        log.expect(ok, || format!("GJ({n};{:?},{:?}) has f-vector {}", spec.a, spec.b, k.f_vector()));
                        specs += 1;
                    }
                }
                log.note(format!("{specs} specs checked"));
            }
            Check::FacetSums { enumerate_max } => facet_sums(*enumerate_max, log)?,
            Check::FewVertices { n } => {
                for &n in n {
                    let r = enumerate_class(n, ComplexClass::FlagNormal3pm, None)?;
                    let expected = if n == 8 { cross_polytope_boundary(4)? } else { balanced_join(2, n)? };
                    log.expect(r.count == 1, || format!("n={n}: {} classes", r.count));
                    log.expect(r.contains_isomorph_of(&expected), || format!("n={n}: expected class missing"));
                    log.note(format!("n={n}: {} class(es) from {} complement graphs", r.count, r.candidates));
                }
            }
            Check::ThreeManifold { n } => {
                let r = enumerate_class(*n, ComplexClass::Flag3Manifold, None)?;
                let bound = f1_j(2, *n)? as u64;
                let max = r.max_f1().unwrap_or(0);
                let at_max: Vec<_> = r.representatives.iter().filter(|x| x.f_vector.get(1) == max).collect();
                log.note(format!("n={n}: {} classes, max f1 = {max}, bound = {bound}", r.count));
                log.expect(max == bound, || format!("max f1 {max} differs from {bound}"));
                log.expect(at_max.len() == 1, || format!("{} classes attain the maximum", at_max.len()));
                let j = balanced_join(2, *n)?;
                log.expect(at_max.iter().all(|x| are_isomorphic(&x.complex, &j).unwrap_or(false)), || {
                    "maximizer is not J2(n)".into()
                });
            }
            Check::EulerianEquality { n } => {
                for &n in n {
                    let m = maximizers(n, ComplexClass::FlagEulerian3)?;
                    log.note(format!(
                        "n={n}: {} maximizer class(es), {} expected spec(s)",
                        m.result.count,
                        m.expected.len()
                    ));
                    log.expect(m.matches_expected, || {
                        format!("n={n}: maximizers differ from the union-of-joins family")
                    });
                }
            }
            Check::WeakNotNormal { lengths: [a, b, c, d] } => {
                let k = remark_complex(*a, *b, *c, *d)?;
                log.expect(validators::is_flag(&k).holds, || "not flag".into());
                log.expect(validators::is_weak_pseudomanifold(&k).holds, || "not a weak pseudomanifold".into());
                log.expect(!validators::is_normal_pseudomanifold(&k).holds, || "unexpectedly normal".into());
                let mut strict = None;
                'search: for &facet in k.facets() {
                    for tau1 in facet.subsets_of_size(2) {
                        let r = check_join_criterion(&k, tau1, facet.difference(tau1))?;
                        if r.union_covers && r.strict_containment() {
                            strict = Some((tau1, facet.difference(tau1)));
                            break 'search;
                        }
                    }
                }
                match strict {
                    Some((t1, t2)) => log.note(format!("K ⊊ lk{t1} * lk{t2}")),
                    None => log.fail("no facet split shows strict containment"),
                }
            }
            Check::Properties { instances, seed } => {
                for p in property_sweep(*seed, *instances) {
                    log.expect(p.failures == 0, || {
                        format!(
                            "{}: {} failures, first: {}",
                            p.name,
                            p.failures,
                            p.first_failure.clone().unwrap_or_default()
                        )
                    });
                    log.note(format!("{}: {} instances", p.name, p.instances));
                }
            }
            Check::FiveDimConsistency { n_min, n_max } => {
                for n in *n_min..=*n_max {
                    let got = balanced_join(3, n)?.one_skeleton().edge_count() as i64;
                    log.expect(got == f1_j(3, n)?, || format!("f1(J3({n})) = {got}"));
                }
                let mut checked = 0;
                for e in corpus::standard()? {
                    let k = &e.complex;
                    if k.dim() != 5 || !validators::is_flag(k).holds {
                        continue;
                    }
                    let (f1, bound) = (k.edge_count() as i64, f1_j(3, k.vertex_count())?);
                    log.expect(f1 <= bound, || format!("{}: f1 = {f1} > {bound}", e.name));
                    checked += 1;
                }
                log.note(format!("{checked} flag 5-complexes at or below the bound (consistency check, not a proof)"));
            }
        }
        Ok(())
    }
}

fn facet_sums(enumerate_max: usize, log: &mut Log) -> Result<()> {
    let mut complexes: Vec<(String, SimplicialComplex)> =
        corpus::standard()?.into_iter().map(|e| (e.name, e.complex)).collect();
    for n in 8..=enumerate_max {
        for (i, rep) in enumerate_class(n, ComplexClass::FlagEulerian3, None)?.representatives.into_iter().enumerate() {
            complexes.push((format!("enumerated n={n} #{i}"), rep.complex));
        }
    }
    let (mut swept, mut facets, mut tight_non_maximizers) = (0, 0, Vec::new());
    for (name, k) in &complexes {
        if k.dim() != 3 || !validators::is_flag(k).holds || !validators::is_weak_pseudomanifold(k).holds {
            continue;
        }
        swept += 1;
        let sums = facet_sums_sweep(k)?;
        facets += sums.len();
        for (e, v) in &sums {
            for r in [e, v] {
                log.expect(r.holds, || format!("{name}: {} = {} > {} at {:?}", r.bound, r.lhs, r.rhs, r.witness));
                log.expect(r.equality_condition != Some(false), || {
                    format!("{name}: tight {} without covering at {:?}", r.bound, r.witness)
                });
            }
        }
        let maximizer = validators::is_eulerian(k).holds && k.edge_count() as i64 == f1_j(2, k.vertex_count())?;
        let all_tight = sums.iter().all(|(e, v)| e.tight && v.tight);
        if maximizer {
            log.expect(all_tight, || format!("{name}: maximizer with a slack facet"));
        } else if sums.iter().any(|(e, v)| e.tight || v.tight) {
            tight_non_maximizers.push(name.clone());
        }
    }
    log.note(format!("{swept} flag weak 3-pseudomanifolds, {facets} facets"));
    if !tight_non_maximizers.is_empty() {
        log.note(format!("tight facets also occur on non-maximizers: {}", tight_non_maximizers.join(", ")));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

/// Faces of `k` collected naively as the union of all subsets of all facets.
pub fn naive_faces(k: &SimplicialComplex) -> Vec<Face> {
    let set: BTreeSet<Face> = k.facets().iter().flat_map(|f| f.subsets()).collect();
    set.into_iter().collect()
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

type PropertyTest = Box<dyn FnMut(&mut rand_chacha::ChaCha8Rng) -> Option<String>>;

/// Randomized identities: join convolution, `χ̃` multiplicativity, degree sum,
/// the flag link-restriction identity, and face enumeration against a naive oracle.
pub fn property_sweep(seed: u64, instances: usize) -> Vec<PropertyOutcome> {
    use rand::Rng;
    let mut rng = corpus::seeded(seed);
    let mut record = |name: &'static str, mut test: PropertyTest| {
        let mut out = PropertyOutcome { name, instances, failures: 0, first_failure: None };
        for _ in 0..instances {
            if let Some(msg) = test(&mut rng) {
                out.failures += 1;
                out.first_failure.get_or_insert(msg);
            }
        }
        out
    };
    fn small(rng: &mut rand_chacha::ChaCha8Rng) -> SimplicialComplex {
        let n = rng.random_range(1..=7);
        let facets = rng.random_range(1..=6);
        corpus::random_complex(rng, n, facets, 4)
    }
    fn flag(rng: &mut rand_chacha::ChaCha8Rng) -> SimplicialComplex {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.2..0.8);
        corpus::random_flag_complex(rng, n, p)
    }
    vec![
        record(
            "join_convolution",
            Box::new(|rng| {
                let (k, l) = (small(rng), small(rng));
                let j = k.join(&l).ok()?;
                let expected = convolve(k.f_vector().counts(), l.f_vector().counts());
                (j.f_vector().counts() != expected.as_slice())
                    .then(|| format!("{:?} * {:?}", k.facet_lists(), l.facet_lists()))
            }),
        ),
        record(
            "euler_char_multiplicative",
            Box::new(|rng| {
                let (k, l) = (small(rng), small(rng));
                let j = k.join(&l).ok()?;
                (j.reduced_euler_char() != -k.reduced_euler_char() * l.reduced_euler_char())
                    .then(|| format!("{:?} * {:?}", k.facet_lists(), l.facet_lists()))
            }),
        ),
        record(
            "degree_sum",
            Box::new(|rng| {
                let k = if rng.random_bool(0.5) { small(rng) } else { flag(rng) };
                let g = k.one_skeleton();
                let sum: usize = (0..k.vertex_count()).map(|v| g.degree(v)).sum();
                (sum as u64 != 2 * k.f_vector().get(1)).then(|| format!("{:?}", k.facet_lists()))
            }),
        ),
        record(
            "flag_link_is_restriction",
            Box::new(|rng| {
                let k = flag(rng);
                let faces: Vec<Face> = k.all_faces().collect();
                let sigma = faces[rng.random_range(0..faces.len())];
                let link = k.link(sigma).ok()?;
                let restricted = k.restriction(k.link_vertices(sigma)).ok()?;
                let lift = |s: &crate::complex::Subcomplex| -> Vec<Face> {
                    let mut v: Vec<Face> = s.complex.facets().iter().map(|&f| s.to_parent(f)).collect();
                    v.sort();
                    v
                };
                (lift(&link) != lift(&restricted)).then(|| format!("{:?} at {sigma}", k.facet_lists()))
            }),
        ),
        record(
            "face_enumeration_oracle",
            Box::new(|rng| {
                let k = if rng.random_bool(0.5) { small(rng) } else { flag(rng) };
                let mut fast: Vec<Face> = k.all_faces().collect();
                fast.sort();
                (fast != naive_faces(&k)).then(|| format!("{:?}", k.facet_lists()))
            }),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_manifest_parses() {
        let suite = VerifySuite::builtin("paper-core").unwrap();
        assert_eq!(suite.checks.len(), 10);
        let ids: BTreeSet<&str> = suite.checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), 10);
        assert!(VerifySuite::builtin("nope").is_err());
    }

    #[test]
    fn property_sweep_is_clean() {
        for p in property_sweep(11, 50) {
            assert_eq!(p.failures, 0, "{p:?}");
        }
    }

    #[test]
    fn cheap_checks_pass() {
        let suite = VerifySuite::parse(
            r#"
            id = "mini"
            description = "small"
            [[check]]
            id = "a"
            claim = "formulas"
            kind = "formula_construction"
            m = [1, 2]
            n_max = 14
            [[check]]
            id = "b"
            claim = "weak not normal"
            kind = "weak_not_normal"
            lengths = [4, 4, 4, 4]
            "#,
        )
        .unwrap();
        let report = suite.run();
        assert!(report.passed, "{report:?}");
    }
}
