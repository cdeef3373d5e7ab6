//! Corpus entries, their provenance and the JSON-lines format.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::expand::{apply_substitutions, Substitution};
use super::ops::{one_alteration, tip_alteration, tip_reduction, two_alteration, x_alteration, AltItem};
use crate::error::{Error, Result};
use crate::flow::{NetEntry, NetVector};
use crate::graph::{
    canonical_form, BorderedMultigraph, CanonCode, Canvas, Census, Multigraph, Vertex, DEFAULT_CANON_CAP,
};
use crate::z3::Z3;

/// Clause of a generation theorem that produced an entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Tag {
    Small,
    Exp,
    Expa,
    Expx,
    Expb,
    Add,
    Rem,
}

/// Operation applied to the parent before any substitution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PreOp {
    None,
    TwoAlteration { items: Vec<AltItem> },
    OneAlteration { u: Vertex, v: Vertex },
    XAlteration { y: AltItem },
    TipAlteration { w: Vertex, raise_tip: bool },
    TipReduction { v: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenOp {
    pub tag: Tag,
    pub pre: PreOp,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub substitutions: Vec<Substitution>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Seed,
    BruteForce,
    Derived { parent: CanonCode, op: GenOp },
}

/// A member of 𝒢ₖ or 𝒢ₖ,ᵣ in canonical labelling: tip 0 and, for easels,
/// the marked vertex 1.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub code: CanonCode,
    pub canvas: Canvas,
    pub x: Option<Vertex>,
    pub k: usize,
    pub r: Option<i64>,
    pub psi: NetVector,
    pub provenance: Provenance,
}

impl CorpusEntry {
    /// Canonicalises `canvas` (with `x` marked when given) and records it.
    pub fn new(
        canvas: &Canvas,
        x: Option<Vertex>,
        k: usize,
        r: Option<i64>,
        psi: &NetVector,
        provenance: Provenance,
    ) -> Result<CorpusEntry> {
        let marks: Vec<Vertex> = std::iter::once(canvas.tip()).chain(x).collect();
        let form = canonical_form(canvas.graph(), &marks, DEFAULT_CANON_CAP)?;
        let relabelled = form.code.to_canvas()?;
        let entries = psi.entries().iter().map(|e| NetEntry { vertex: form.perm[e.vertex], ..*e }).collect();
        let psi = NetVector::new(&relabelled, entries)?;
        Ok(CorpusEntry { code: form.code, canvas: relabelled, x: x.map(|v| form.perm[v]), k, r, psi, provenance })
    }

    pub fn vertex_count(&self) -> usize {
        self.canvas.vertex_count()
    }

    pub fn tip_degree(&self) -> usize {
        self.canvas.tip_degree()
    }

    pub fn census(&self) -> Census {
        self.canvas.census()
    }

    pub fn is_easel(&self) -> bool {
        self.x.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&Record::from(self)).expect("corpus entries serialise")
    }

    pub fn from_json(line: &str) -> Result<CorpusEntry> {
        let rec: Record = serde_json::from_str(line).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
        rec.into_entry()
    }
}

/// Serialised form; field order is part of the format.
#[derive(Serialize, Deserialize)]
struct Record {
    code: CanonCode,
    n: usize,
    tip: Option<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<Vertex>,
    boundary: Vec<Z3>,
    edges: Vec<[usize; 3]>,
    k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<i64>,
    deg_z: usize,
    census: Census,
    psi_netvector: NetVector,
    provenance: Provenance,
}

impl From<&CorpusEntry> for Record {
    fn from(e: &CorpusEntry) -> Record {
        Record {
            code: e.code.clone(),
            n: e.vertex_count(),
            tip: Some(e.canvas.tip()),
            x: e.x,
            boundary: e.canvas.boundary().to_vec(),
            edges: e.canvas.bundles().into_iter().map(|(u, v, m)| [u, v, m]).collect(),
            k: e.k,
            r: e.r,
            deg_z: e.tip_degree(),
            census: e.census(),
            psi_netvector: e.psi.clone(),
            provenance: e.provenance.clone(),
        }
    }
}

impl Record {
    fn into_entry(self) -> Result<CorpusEntry> {
        let tip = self.tip.ok_or_else(|| Error::Precondition("corpus entries need a tip".into()))?;
        let bundles: Vec<(Vertex, Vertex, usize)> = self.edges.iter().map(|&[u, v, m]| (u, v, m)).collect();
        let g = Multigraph::from_bundles(self.n, &bundles)?;
        let canvas = Canvas::new(BorderedMultigraph::new(g, self.boundary)?, tip)?;
        let psi = NetVector::new(&canvas, self.psi_netvector.entries().to_vec())?;
        let entry =
            CorpusEntry { code: self.code, canvas, x: self.x, k: self.k, r: self.r, psi, provenance: self.provenance };
        let decoded = entry.code.to_canvas()?;
        if tip != 0
            || entry.x.is_some_and(|x| x != 1)
            || entry.recompute_code()? != entry.code
            || decoded.edges() != entry.canvas.edges()
            || decoded.boundary() != entry.canvas.boundary()
        {
            return Err(Error::Precondition(format!("entry {} is not in canonical labelling", entry.code)));
        }
        if entry.tip_degree() != self.deg_z {
            return Err(Error::Precondition("stored deg_z does not match the graph".into()));
        }
        Ok(entry)
    }
}

impl CorpusEntry {
    fn recompute_code(&self) -> Result<CanonCode> {
        let marks: Vec<Vertex> = std::iter::once(self.canvas.tip()).chain(self.x).collect();
        Ok(canonical_form(self.canvas.graph(), &marks, DEFAULT_CANON_CAP)?.code)
    }

    /// Re-derives the entry from its parent; returns the reproduced code,
    /// or `None` for seeds and brute-force entries.
    pub fn replay(&self) -> Result<Option<CanonCode>> {
        let Provenance::Derived { parent, op } = &self.provenance else {
            return Ok(None);
        };
        let (code, _) = replay_op(parent, op, self.x.is_some())?;
        Ok(Some(code))
    }
}

/// Applies `op` to the decoded parent; returns the canonical code of the
/// result and the result itself.
pub fn replay_op(parent: &CanonCode, op: &GenOp, easel: bool) -> Result<(CanonCode, Canvas)> {
    let base = parent.to_canvas()?;
    let x = easel.then_some(1);
    let altered = match &op.pre {
        PreOp::None => base,
        PreOp::TwoAlteration { items } => two_alteration(&base, items)?,
        PreOp::OneAlteration { u, v } => one_alteration(&base, *u, *v)?,
        PreOp::XAlteration { y } => {
            x_alteration(&base, x.ok_or_else(|| Error::Precondition("x-alteration needs an easel".into()))?, *y)?
        }
        PreOp::TipAlteration { w, raise_tip } => tip_alteration(&base, *w, *raise_tip)?,
        PreOp::TipReduction { v } => tip_reduction(&base, *v)?,
    };
    let (c, x) = apply_substitutions(&altered, x, &op.substitutions)?;
    let marks: Vec<Vertex> = std::iter::once(c.tip()).chain(x).collect();
    Ok((canonical_form(c.graph(), &marks, DEFAULT_CANON_CAP)?.code, c))
}

pub fn write_jsonl<W: Write>(mut w: W, entries: &[CorpusEntry]) -> Result<()> {
    for e in entries {
        writeln!(w, "{}", e.to_json())?;
    }
    Ok(())
}

/// Reads a corpus, reporting the offending line on failure.
pub fn read_jsonl<R: BufRead>(r: R) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry = CorpusEntry::from_json(&line).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
            other => Error::Parse { line: i + 1, msg: other.to_string() },
        })?;
        out.push(entry);
    }
    Ok(out)
}
