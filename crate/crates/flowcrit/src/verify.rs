//! Checking theorems and conjectures about censuses on corpora.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::critical::{is_flow_critical_graph, CanvasAnalysis};
use crate::enumerate::{simple_graphs_up_to_iso, z3_boundaries};
use crate::error::{Error, Result};
use crate::generate::CorpusEntry;
use crate::graph::{BorderedMultigraph, CanonCode, Canvas, Census};
use crate::reduce::{to_tame, Strictness};
use crate::z3::Z3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Claim {
    #[serde(rename = "thm-deg")]
    ThmDeg,
    #[serde(rename = "cor-censmax")]
    CorCensmax,
    #[serde(rename = "cor-degbetter")]
    CorDegbetter,
    #[serde(rename = "thm-degbetter")]
    ThmDegbetter,
    #[serde(rename = "obs-sumdeg")]
    ObsSumdeg,
    #[serde(rename = "lemma-degbetter")]
    LemmaDegbetter,
    #[serde(rename = "cor-db3")]
    CorDb3,
    #[serde(rename = "density")]
    Density,
    #[serde(rename = "conj-fewlarge")]
    ConjFewlarge,
    #[serde(rename = "conj-censusplus")]
    ConjCensusplus,
    #[serde(rename = "conj-db3")]
    ConjDb3,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::ThmDeg,
        Claim::CorCensmax,
        Claim::CorDegbetter,
        Claim::ThmDegbetter,
        Claim::ObsSumdeg,
        Claim::LemmaDegbetter,
        Claim::CorDb3,
        Claim::Density,
        Claim::ConjFewlarge,
        Claim::ConjCensusplus,
        Claim::ConjDb3,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::ThmDeg => "thm-deg",
            Claim::CorCensmax => "cor-censmax",
            Claim::CorDegbetter => "cor-degbetter",
            Claim::ThmDegbetter => "thm-degbetter",
            Claim::ObsSumdeg => "obs-sumdeg",
            Claim::LemmaDegbetter => "lemma-degbetter",
            Claim::CorDb3 => "cor-db3",
            Claim::Density => "density",
            Claim::ConjFewlarge => "conj-fewlarge",
            Claim::ConjCensusplus => "conj-censusplus",
            Claim::ConjDb3 => "conj-db3",
        }
    }

    /// Conjecture sweeps report findings but never fail.
    pub fn is_conjecture(self) -> bool {
        matches!(self, Claim::ConjFewlarge | Claim::ConjCensusplus | Claim::ConjDb3)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub claim: Claim,
    pub conjecture: bool,
    pub checked: usize,
    pub violations: Vec<CanonCode>,
    pub stats: BTreeMap<String, Value>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("claim results serialise")
    }
}

/// Outcome for one entry: not applicable, holds, or fails.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Skip,
    Holds,
    Fails,
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

fn max_degree_off_tip(c: &Canvas) -> usize {
    c.non_tip_vertices().into_iter().map(|v| c.degree(v)).max().unwrap_or(0)
}

fn census_is(c: &Canvas, want: &[usize]) -> bool {
    c.census().values() == want
}

/// The census pairs allowed for 𝒢ₖ,₀.
pub fn c_prime_k0(k: usize) -> Vec<(usize, Vec<usize>)> {
    let mut v = vec![(k, vec![k - 2]), (k + 1, vec![k - 1]), (k + 1, vec![5, k - 2]), (k + 1, vec![5, 5, 5, k - 2])];
    for (_, c) in &mut v {
        c.sort_unstable();
    }
    v
}

/// `Σ_{n∈C}(n − 6) ≤ deg z − 8`, literally over the census.
fn fewlarge_census(c: &Canvas) -> bool {
    let s: i64 = c.census().values().iter().map(|&d| d as i64 - 6).sum();
    s <= c.tip_degree() as i64 - 8
}

/// The same sum over every non-tip vertex, degree-4 vertices included.
fn fewlarge_all_vertices(c: &Canvas) -> bool {
    let s: i64 = c.non_tip_vertices().into_iter().map(|v| c.degree(v) as i64 - 6).sum();
    s <= c.tip_degree() as i64 - 8
}

/// Some non-extending preflow is not one-directional on the tip edges
/// avoiding `x`.
fn has_mixed_off_x_nonextending(c: &Canvas, x: usize) -> bool {
    let a = CanvasAnalysis::new(c);
    let found = a.non_extending().any(|i| a.preflows()[i].is_mixed_off(x));
    found
}

fn check_entry(claim: Claim, e: &CorpusEntry) -> Verdict {
    let c = &e.canvas;
    let dz = c.tip_degree();
    let census = c.census();
    match claim {
        Claim::ThmDeg => verdict(max_degree_off_tip(c) + 2 <= dz),
        Claim::CorCensmax => {
            verdict(Census::max(&census).is_none_or(|m| m + 2 <= dz) && (dz != 6 || census.is_empty()))
        }
        Claim::CorDegbetter => {
            if dz != 7 {
                return Verdict::Skip;
            }
            verdict(census_is(c, &[5]))
        }
        Claim::ThmDegbetter => {
            if dz < 7 || !c.non_tip_vertices().into_iter().any(|v| c.degree(v) + 2 == dz) {
                return Verdict::Skip;
            }
            verdict(census_is(c, &[dz - 2]))
        }
        Claim::ObsSumdeg => {
            if c.non_tip_vertices().into_iter().any(|v| c.degree(v) < 5) {
                return Verdict::Skip;
            }
            let m = census.len();
            let lhs = census.sum();
            let rhs = dz + m * m.saturating_sub(1);
            verdict(lhs < rhs || (lhs == rhs && off_tip_complete(c)))
        }
        Claim::LemmaDegbetter => {
            if e.r != Some(0) || e.k < 7 {
                return Verdict::Skip;
            }
            let pair = (dz, census.values().to_vec());
            verdict(c_prime_k0(e.k).contains(&pair))
        }
        Claim::CorDb3 | Claim::ConjDb3 => {
            if dz < 8 {
                return Verdict::Skip;
            }
            let xs: Vec<usize> = c.non_tip_vertices().into_iter().filter(|&v| c.degree(v) + 3 == dz).collect();
            let applies = if claim == Claim::CorDb3 {
                xs.iter().any(|&x| has_mixed_off_x_nonextending(c, x))
            } else {
                !xs.is_empty()
            };
            if !applies {
                return Verdict::Skip;
            }
            verdict(census_is(c, &[5, dz - 3]) || census_is(c, &[5, 5, 5, dz - 3]))
        }
        Claim::ConjFewlarge => verdict(fewlarge_census(c)),
        Claim::ConjCensusplus => Verdict::Holds,
        Claim::Density => Verdict::Skip,
    }
}

fn off_tip_complete(c: &Canvas) -> bool {
    let vs = c.non_tip_vertices();
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| c.multiplicity(u, v) > 0))
}

/// Runs a corpus claim; `density` ignores the corpus (see [`verify_density`]).
pub fn verify(claim: Claim, corpus: &[CorpusEntry]) -> Result<ClaimResult> {
    if claim == Claim::Density {
        return Err(Error::Precondition("density is checked on enumerated graphs, not on a corpus".into()));
    }
    let verdicts: Vec<Verdict> = corpus.par_iter().map(|e| check_entry(claim, e)).collect();
    let mut violations: Vec<CanonCode> =
        corpus.iter().zip(&verdicts).filter(|(_, v)| **v == Verdict::Fails).map(|(e, _)| e.code.clone()).collect();
    violations.sort();
    violations.dedup();
    let checked = verdicts.iter().filter(|v| **v != Verdict::Skip).count();
    let mut stats = BTreeMap::new();
    stats.insert("corpus_size".to_string(), json!(corpus.len()));
    match claim {
        Claim::ConjFewlarge | Claim::ConjCensusplus => {
            stats.insert("per_deg_z".into(), maxima_table(corpus));
            if claim == Claim::ConjFewlarge {
                let all: Vec<String> =
                    corpus.iter().filter(|e| !fewlarge_all_vertices(&e.canvas)).map(|e| e.code.to_hex()).collect();
                stats.insert("all_vertex_sum_counterexamples".into(), json!(all));
            }
        }
        Claim::ObsSumdeg => {
            let eq = corpus
                .iter()
                .zip(&verdicts)
                .filter(|(e, v)| {
                    **v == Verdict::Holds && {
                        let c = e.census();
                        c.sum() == e.tip_degree() + c.len() * c.len().saturating_sub(1)
                    }
                })
                .count();
            stats.insert("equality_cases".into(), json!(eq));
        }
        _ => {}
    }
    Ok(ClaimResult { claim, conjecture: claim.is_conjecture(), checked, violations, stats })
}

/// Per tip degree: entry count, max `Σ_{n∈C} n`, max `Σ_{n∈C}(n − 6)`.
fn maxima_table(corpus: &[CorpusEntry]) -> Value {
    let mut rows: BTreeMap<usize, (usize, usize, i64)> = BTreeMap::new();
    for e in corpus {
        let c = e.census();
        let s = c.sum();
        let t: i64 = c.values().iter().map(|&d| d as i64 - 6).sum();
        let row = rows.entry(e.tip_degree()).or_insert((0, 0, i64::MIN));
        row.0 += 1;
        row.1 = row.1.max(s);
        row.2 = row.2.max(t);
    }
    Value::Array(
        rows.into_iter()
            .map(|(d, (n, s, t))| json!({"deg_z": d, "entries": n, "max_census_sum": s, "max_excess": t, "excess_bound": d as i64 - 8}))
            .collect(),
    )
}

/// Density check over enumerated flow-critical graphs: with at most one
/// vertex of degree ≥ 7, `|E| ≤ 3|V| − 5`; the tame reduction of each
/// graph with ≥ 3 vertices must satisfy its edge formula.
pub fn verify_density(n_max: usize, zero_boundary_only: bool) -> Result<ClaimResult> {
    if n_max > 7 {
        return Err(Error::AboveCap { n: n_max, cap: 7 });
    }
    let mut cases: Vec<BorderedMultigraph> = Vec::new();
    for n in 1..=n_max {
        for g in simple_graphs_up_to_iso(n) {
            if zero_boundary_only {
                cases.push(BorderedMultigraph::new(g, vec![Z3::ZERO; n])?);
            } else {
                for b in z3_boundaries(&g) {
                    cases.push(BorderedMultigraph::new(g.clone(), b)?);
                }
            }
        }
    }
    let results: Vec<Option<(CanonCode, bool, bool, i64)>> = cases
        .par_iter()
        .map(|g| {
            if !is_flow_critical_graph(g).verdict {
                return None;
            }
            let heavy = g.degrees().iter().filter(|&&d| d >= 7).count();
            let excess = g.edge_count() as i64 - 3 * g.vertex_count() as i64;
            let bound_ok = heavy > 1 || excess <= -5;
            let formula_ok = g.vertex_count() < 3 || to_tame(g, Strictness::Strict).map(|r| r.holds()).unwrap_or(false);
            Some((g.canonical_code().expect("small graph"), bound_ok, formula_ok, excess))
        })
        .collect();
    let found: Vec<_> = results.into_iter().flatten().collect();
    let mut violations: Vec<CanonCode> =
        found.iter().filter(|(_, b, f, _)| !b || !f).map(|(c, _, _, _)| c.clone()).collect();
    violations.sort();
    let mut stats = BTreeMap::new();
    stats.insert("max_vertices".into(), json!(n_max));
    stats.insert("zero_boundary_only".into(), json!(zero_boundary_only));
    stats.insert("flow_critical_graphs".into(), json!(found.len()));
    stats.insert("max_edges_minus_3v".into(), json!(found.iter().map(|f| f.3).max()));
    Ok(ClaimResult { claim: Claim::Density, conjecture: false, checked: found.len(), violations, stats })
}
