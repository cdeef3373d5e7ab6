//! Exhaustive enumeration used as a completeness oracle for the closures.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::corpus::{CorpusEntry, Provenance};
use crate::critical::{gkr_witness, in_gk};
use crate::enumerate::simple_graphs_up_to_iso;
use crate::error::{Error, Result};
use crate::graph::{BorderedMultigraph, CanonCode, Canvas, Multigraph};
use crate::z3::Z3;

pub const DEFAULT_BRUTE_CAP: usize = 7;

/// Boundaries that keep a non-tip vertex of degree `d` tame.
fn tame_boundaries(d: usize) -> &'static [Z3] {
    match d {
        0..=3 => &[],
        4 => &[Z3::ZERO],
        5 => &[Z3::ONE, Z3::TWO],
        _ => &Z3::ALL,
    }
}

/// Tip multiplicity vectors with total at most `max_total` that lift every
/// degree in `base` to at least 4.
fn tip_vectors(base: &[usize], max_total: usize) -> Vec<Vec<usize>> {
    fn rec(base: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == base.len() {
            out.push(cur.clone());
            return;
        }
        let need: usize = base[i + 1..].iter().map(|&d| 4usize.saturating_sub(d)).sum();
        let lo = 4usize.saturating_sub(base[i]);
        for t in lo..=left {
            if left - t < need {
                break;
            }
            cur.push(t);
            rec(base, i + 1, left - t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(base, 0, max_total, &mut Vec::new(), &mut out);
    out
}

/// Every tame canvas with exactly `n` vertices that is simple off the tip
/// and has tip degree at most `max_tip_degree`, one per isomorphism class.
pub fn tame_canvases(n: usize, max_tip_degree: usize) -> Vec<(CanonCode, Canvas)> {
    if n < 2 {
        return Vec::new();
    }
    let m = n - 1;
    let found: Vec<Vec<(CanonCode, Canvas)>> = simple_graphs_up_to_iso(m)
        .par_iter()
        .map(|h| {
            let mut local = BTreeMap::new();
            let base = h.degrees();
            for t in tip_vectors(&base, max_tip_degree) {
                let mut edges: Vec<(usize, usize)> = h.edges().iter().map(|&[a, b]| (a, b)).collect();
                for (v, &tv) in t.iter().enumerate() {
                    edges.extend(std::iter::repeat_n((v, m), tv));
                }
                let g = Multigraph::new(n, edges).expect("valid edges");
                let choices: Vec<&[Z3]> = (0..m).map(|v| tame_boundaries(base[v] + t[v])).collect();
                let mut idx = vec![0usize; m];
                if choices.iter().any(|c| c.is_empty()) {
                    continue;
                }
                loop {
                    let mut b: Vec<Z3> = (0..m).map(|v| choices[v][idx[v]]).collect();
                    b.push(-b.iter().copied().sum::<Z3>());
                    if let Ok(bg) = BorderedMultigraph::new(g.clone(), b) {
                        let c = Canvas::new(bg, m).expect("tip in range");
                        let code = c.canonical_code().expect("small canvas");
                        local.entry(code).or_insert(c);
                    }
                    let mut i = m;
                    loop {
                        if i == 0 {
                            break;
                        }
                        i -= 1;
                        idx[i] += 1;
                        if idx[i] < choices[i].len() {
                            break;
                        }
                        idx[i] = 0;
                    }
                    if idx.iter().all(|&i| i == 0) {
                        break;
                    }
                }
            }
            local.into_iter().collect()
        })
        .collect();
    let mut all = BTreeMap::new();
    for part in found {
        for (code, c) in part {
            all.entry(code).or_insert(c);
        }
    }
    all.into_iter().collect()
}

fn check_cap(n_max: usize, cap: usize) -> Result<()> {
    if n_max > cap {
        return Err(Error::AboveCap { n: n_max, cap });
    }
    Ok(())
}

/// All members of 𝒢ₖ with at most `n_max` vertices, by exhaustive search.
pub fn brute_force_enumerate(k: usize, n_max: usize) -> Result<Vec<CorpusEntry>> {
    brute_force_enumerate_capped(k, n_max, DEFAULT_BRUTE_CAP)
}

pub fn brute_force_enumerate_capped(k: usize, n_max: usize, cap: usize) -> Result<Vec<CorpusEntry>> {
    check_cap(n_max, cap)?;
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(members_with(n, k, None, |c| in_gk(c, k).map(|w| vec![(None, w)])));
    }
    out.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(out)
}

/// All members of 𝒢ₖ,ᵣ with at most `n_max` vertices, by exhaustive search.
pub fn brute_force_easels(k: usize, r: i64, n_max: usize) -> Result<Vec<CorpusEntry>> {
    check_cap(n_max, DEFAULT_BRUTE_CAP)?;
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(members_with(n, k, Some(r), |c| {
            let found: Vec<_> = c
                .non_tip_vertices()
                .into_iter()
                .filter_map(|x| gkr_witness(c, x, k, r).map(|w| (Some(x), w)))
                .collect();
            (!found.is_empty()).then_some(found)
        }));
    }
    let mut by_code = BTreeMap::new();
    for e in out {
        by_code.entry(e.code.clone()).or_insert(e);
    }
    Ok(by_code.into_values().collect())
}

fn members_with<F>(n: usize, k: usize, r: Option<i64>, test: F) -> Vec<CorpusEntry>
where
    F: Fn(&Canvas) -> Option<Vec<(Option<usize>, crate::flow::NetVector)>> + Sync,
{
    let cands = tame_canvases(n, k + 1);
    let mut out: Vec<CorpusEntry> = cands
        .par_iter()
        .filter_map(|(_, c)| test(c).map(|ws| (c, ws)))
        .flat_map_iter(|(c, ws)| {
            ws.into_iter().map(move |(x, w)| {
                CorpusEntry::new(c, x, k, r, &w, Provenance::BruteForce).expect("member canonicalises")
            })
        })
        .collect();
    out.sort_by(|a, b| a.code.cmp(&b.code));
    out
}
