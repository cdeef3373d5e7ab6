//! Bottom-up closures realising the two generation theorems.
//!
//! Every clause builds a member from a predecessor with at most as many
//! vertices: expansions only grow the vertex set, alterations of type 1,
//! tip-alterations and tip-reductions keep it, and a 2-alteration adds one
//! vertex before expanding. So the closure runs level by level in `|V|`:
//! candidates reaching level `n` from lower levels first, then a fixpoint of
//! the vertex-preserving clauses among the members of level `n`.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::brute::tame_canvases;
use super::corpus::{CorpusEntry, GenOp, PreOp, Provenance, Tag};
use super::expand::{expansions, ExpansionSpec, Library, Piece};
use super::ops::{one_alteration, tip_alteration, tip_reduction, two_alteration, x_alteration, AltItem};
use crate::critical::{gkr_witness, in_gk};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonCode, Canvas, Vertex, DEFAULT_CANON_CAP};

/// Which clauses the closure applies, and how deep the (REM) recursion
/// into 𝒢ₖ₊₁,ᵣ goes for easels.
#[derive(Clone, Debug)]
pub struct GenOptions {
    pub clauses: BTreeSet<Tag>,
    pub rem_depth: usize,
    /// Rerun easel generation one nesting level deeper and compare.
    pub check_depth: bool,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions {
            clauses: [Tag::Small, Tag::Exp, Tag::Expa, Tag::Expx, Tag::Expb, Tag::Add, Tag::Rem].into(),
            rem_depth: 1,
            check_depth: false,
        }
    }
}

impl GenOptions {
    fn allows(&self, t: Tag) -> bool {
        self.clauses.contains(&t)
    }
}

/// Output of the easel closure.
#[derive(Clone, Debug)]
pub struct EaselCorpus {
    pub entries: Vec<CorpusEntry>,
    /// With `check_depth`: whether one more nesting level left the result
    /// unchanged.
    pub depth_stable: Option<bool>,
}

struct Cand {
    code: CanonCode,
    canvas: Canvas,
    x: Option<Vertex>,
    parent: CanonCode,
    op: GenOp,
}

struct Ctx<'a> {
    k: usize,
    r: Option<i64>,
    n_max: usize,
    pieces: &'a Library,
    easel_pieces: Option<&'a Library>,
    opts: &'a GenOptions,
}

impl Ctx<'_> {
    fn passes_prefilter(&self, c: &Canvas, x: Option<Vertex>, n: usize) -> bool {
        c.vertex_count() == n
            && n <= self.n_max
            && c.tip_degree() <= self.k + 1
            && c.is_off_tip_simple()
            && c.is_tame()
            && match (x, self.r) {
                (Some(x), Some(r)) => c.degree(x) as i64 >= self.k as i64 - 2 - r,
                _ => true,
            }
    }

    fn push(&self, out: &mut Vec<Cand>, c: Canvas, x: Option<Vertex>, n: usize, parent: &CanonCode, op: GenOp) {
        if !self.passes_prefilter(&c, x, n) {
            return;
        }
        let marks: Vec<Vertex> = std::iter::once(c.tip()).chain(x).collect();
        let code = canonical_form(c.graph(), &marks, DEFAULT_CANON_CAP).expect("small canvas").code;
        out.push(Cand { code, canvas: c, x, parent: parent.clone(), op });
    }

    /// Expansions of `base` to exactly `n` vertices; `check` sees the
    /// result's marked vertex and may reject it.
    #[allow(clippy::too_many_arguments)]
    fn expand(
        &self,
        out: &mut Vec<Cand>,
        base: &Canvas,
        x: Option<Vertex>,
        forced: Vec<Vertex>,
        n: usize,
        parent: &CanonCode,
        tag: Tag,
        pre: PreOp,
        check: impl Fn(&Canvas, Option<Vertex>) -> bool,
    ) {
        let spec = ExpansionSpec {
            library: self.pieces,
            marked: x.map(|x| (x, self.easel_pieces.expect("easel pieces"))),
            forced,
            target_n: n,
        };
        for e in expansions(base, &spec) {
            if !check(&e.canvas, e.x) {
                continue;
            }
            let op = GenOp { tag, pre: pre.clone(), substitutions: e.subs };
            self.push(out, e.canvas, e.x, n, parent, op);
        }
    }

    /// Candidates at level `n` from a member with fewer vertices.
    fn cross(&self, p: &CorpusEntry, n: usize) -> Vec<Cand> {
        let mut out = Vec::new();
        let base = &p.canvas;
        let x = p.x;
        let easel = x.is_some();
        let plain_tag = if easel { Tag::Exp } else { Tag::Expa };
        if self.opts.allows(plain_tag) {
            self.expand(&mut out, base, x, vec![], n, &p.code, plain_tag, PreOp::None, |_, _| true);
        }
        if self.opts.allows(Tag::Expa) {
            for items in two_alteration_items(base) {
                let altered = two_alteration(base, &items).expect("valid items");
                let forced = if easel { vertex_items(&items) } else { vec![] };
                let pre = PreOp::TwoAlteration { items };
                self.expand(&mut out, &altered, x, forced, n, &p.code, Tag::Expa, pre, |_, _| true);
            }
        }
        if let (Some(xp), Some(r), true) = (x, self.r, self.opts.allows(Tag::Expx)) {
            if base.tip_degree() == self.k + 1 {
                let want = self.k as i64 - 2 - r;
                for y in x_alteration_items(base, xp) {
                    let altered = x_alteration(base, xp, y).expect("valid item");
                    let dxp = altered.degree(xp) as i64;
                    let mut forced = vertex_items(&[y]);
                    forced.push(xp);
                    let check = |c: &Canvas, nx: Option<Vertex>| {
                        let d = c.degree(nx.expect("marked")) as i64;
                        d == want && dxp >= d
                    };
                    self.expand(&mut out, &altered, x, forced, n, &p.code, Tag::Expx, PreOp::XAlteration { y }, check);
                }
            }
        }
        if self.opts.allows(Tag::Expb) {
            for (u, v) in ordered_pairs(base) {
                let altered = one_alteration(base, u, v).expect("valid pair");
                let pre = PreOp::OneAlteration { u, v };
                self.expand(&mut out, &altered, x, vec![], n, &p.code, Tag::Expb, pre, |_, _| true);
            }
        }
        out
    }

    /// Vertex-preserving candidates from a member of the current level.
    fn intra(&self, p: &CorpusEntry) -> Vec<Cand> {
        let mut out = Vec::new();
        let base = &p.canvas;
        let n = base.vertex_count();
        let x = p.x;
        if self.opts.allows(Tag::Expb) {
            for (u, v) in ordered_pairs(base) {
                let c = one_alteration(base, u, v).expect("valid pair");
                let op = GenOp { tag: Tag::Expb, pre: PreOp::OneAlteration { u, v }, substitutions: vec![] };
                self.push(&mut out, c, x, n, &p.code, op);
            }
        }
        for w in base.non_tip_vertices() {
            if Some(w) == x {
                continue;
            }
            if self.opts.allows(Tag::Add) {
                for raise_tip in [false, true] {
                    let c = tip_alteration(base, w, raise_tip).expect("valid vertex");
                    let op = GenOp { tag: Tag::Add, pre: PreOp::TipAlteration { w, raise_tip }, substitutions: vec![] };
                    self.push(&mut out, c, x, n, &p.code, op);
                }
            }
            if self.opts.allows(Tag::Rem) {
                out.extend(self.reduction(p, w));
            }
        }
        out
    }

    fn reduction(&self, p: &CorpusEntry, v: Vertex) -> Option<Cand> {
        let c = tip_reduction(&p.canvas, v).ok()?;
        let op = GenOp { tag: Tag::Rem, pre: PreOp::TipReduction { v }, substitutions: vec![] };
        let mut out = Vec::new();
        self.push(&mut out, c, p.x, p.vertex_count(), &p.code, op);
        out.pop()
    }

    fn member(&self, c: &Cand) -> Option<CorpusEntry> {
        let w = match (c.x, self.r) {
            (Some(x), Some(r)) => gkr_witness(&c.canvas, x, self.k, r)?,
            _ => in_gk(&c.canvas, self.k)?,
        };
        let prov = Provenance::Derived { parent: c.parent.clone(), op: c.op.clone() };
        Some(CorpusEntry::new(&c.canvas, c.x, self.k, self.r, &w, prov).expect("member canonicalises"))
    }

    /// Dedups against `seen` in candidate order, then tests membership in parallel.
    fn admit(&self, batches: Vec<Vec<Cand>>, seen: &mut HashSet<CanonCode>) -> Vec<CorpusEntry> {
        let fresh: Vec<Cand> = batches.into_iter().flatten().filter(|c| seen.insert(c.code.clone())).collect();
        fresh.par_iter().filter_map(|c| self.member(c)).collect()
    }
}

fn vertex_items(items: &[AltItem]) -> Vec<Vertex> {
    items
        .iter()
        .filter_map(|i| match *i {
            AltItem::Vertex(v) => Some(v),
            AltItem::Edge(_) => None,
        })
        .collect()
}

/// First edge id of every bundle, and the second one where it exists.
fn bundle_reps(c: &Canvas) -> Vec<(usize, Option<usize>)> {
    let mut reps: Vec<(usize, Option<usize>)> = Vec::new();
    let mut last: Option<[Vertex; 2]> = None;
    let mut order: Vec<usize> = (0..c.edge_count()).collect();
    order.sort_by_key(|&e| (c.edges()[e], e));
    for e in order {
        let key = c.edges()[e];
        if last == Some(key) {
            let r = reps.last_mut().unwrap();
            if r.1.is_none() {
                r.1 = Some(e);
            }
        } else {
            reps.push((e, None));
            last = Some(key);
        }
    }
    reps
}

/// Item sets for 2-alterations, one per isomorphism type of choice within
/// parallel classes.
fn two_alteration_items(c: &Canvas) -> Vec<Vec<AltItem>> {
    let reps = bundle_reps(c);
    let mut singles: Vec<AltItem> = c.non_tip_vertices().into_iter().map(AltItem::Vertex).collect();
    singles.extend(reps.iter().map(|r| AltItem::Edge(r.0)));
    let mut out: Vec<Vec<AltItem>> = singles.iter().map(|&s| vec![s]).collect();
    for i in 0..singles.len() {
        for j in i + 1..singles.len() {
            out.push(vec![singles[i], singles[j]]);
        }
    }
    for r in &reps {
        if let Some(second) = r.1 {
            out.push(vec![AltItem::Edge(r.0), AltItem::Edge(second)]);
        }
    }
    out
}

fn x_alteration_items(c: &Canvas, x: Vertex) -> Vec<AltItem> {
    let z = c.tip();
    let mut out: Vec<AltItem> = c.non_tip_vertices().into_iter().filter(|&v| v != x).map(AltItem::Vertex).collect();
    for (e, _) in bundle_reps(c) {
        if !c.edges()[e].iter().any(|&w| w == x || w == z) {
            out.push(AltItem::Edge(e));
        }
    }
    out
}

fn ordered_pairs(c: &Canvas) -> Vec<(Vertex, Vertex)> {
    let vs = c.non_tip_vertices();
    let mut out = Vec::new();
    for &u in &vs {
        for &v in &vs {
            if u != v {
                out.push((u, v));
            }
        }
    }
    out
}

fn library_of(entries: &[CorpusEntry]) -> Library {
    let mut lib = Library::new();
    for e in entries {
        lib.insert(Piece { code: e.code.clone(), canvas: e.canvas.clone(), x: e.x });
    }
    lib
}

/// Seeds: all members with three vertices.
fn seeds(k: usize, r: Option<i64>) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for (_, c) in tame_canvases(3, k + 1) {
        match r {
            None => {
                if let Some(w) = in_gk(&c, k) {
                    out.push(CorpusEntry::new(&c, None, k, None, &w, Provenance::Seed).expect("seed"));
                }
            }
            Some(r) => {
                for x in c.non_tip_vertices() {
                    if let Some(w) = gkr_witness(&c, x, k, r) {
                        out.push(CorpusEntry::new(&c, Some(x), k, Some(r), &w, Provenance::Seed).expect("seed"));
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.code.cmp(&b.code));
    out.dedup_by(|a, b| a.code == b.code);
    out
}

/// Level-by-level closure shared by both theorems. `pieces_for(n)` gives the
/// canvas library for expansions reaching level `n`; `extra(n)` supplies
/// outside candidates at level `n`.
fn close(
    k: usize,
    r: Option<i64>,
    n_max: usize,
    opts: &GenOptions,
    pieces_for: &dyn Fn(usize, &[CorpusEntry]) -> Library,
    extra: &dyn Fn(&Ctx<'_>, usize) -> Vec<Cand>,
) -> Vec<CorpusEntry> {
    let mut members: Vec<CorpusEntry> = Vec::new();
    for n in 3..=n_max {
        let pieces = pieces_for(n, &members);
        let easel_pieces = r.map(|_| library_of(&members));
        let ctx = Ctx { k, r, n_max, pieces: &pieces, easel_pieces: easel_pieces.as_ref(), opts };
        let mut seen: HashSet<CanonCode> = HashSet::new();
        let mut level: Vec<CorpusEntry> = Vec::new();
        if n == 3 && opts.allows(Tag::Small) {
            for s in seeds(k, r) {
                seen.insert(s.code.clone());
                level.push(s);
            }
        }
        let mut batches: Vec<Vec<Cand>> = members.par_iter().map(|p| ctx.cross(p, n)).collect();
        batches.push(extra(&ctx, n));
        let mut frontier = ctx.admit(batches, &mut seen);
        frontier.extend(level.iter().cloned());
        frontier.sort_by(|a, b| a.code.cmp(&b.code));
        level = frontier.clone();
        while !frontier.is_empty() {
            let batches: Vec<Vec<Cand>> = frontier.par_iter().map(|p| ctx.intra(p)).collect();
            frontier = ctx.admit(batches, &mut seen);
            frontier.sort_by(|a, b| a.code.cmp(&b.code));
            level.extend(frontier.iter().cloned());
        }
        level.sort_by(|a, b| a.code.cmp(&b.code));
        members.extend(level);
    }
    members.sort_by(|a, b| a.code.cmp(&b.code));
    members
}

/// 𝒢ₖ up to `n_max` vertices.
pub fn generate_gk(k: usize, n_max: usize) -> Result<Vec<CorpusEntry>> {
    generate_gk_with(k, n_max, &GenOptions::default())
}

pub fn generate_gk_with(k: usize, n_max: usize, opts: &GenOptions) -> Result<Vec<CorpusEntry>> {
    if k < 5 {
        return Err(Error::Precondition(format!("k = {k}: the class is empty below 5")));
    }
    if n_max < 3 {
        return Err(Error::Precondition("n_max must be at least 3".into()));
    }
    let pieces = |_: usize, members: &[CorpusEntry]| library_of(members);
    Ok(close(k, None, n_max, opts, &pieces, &|_, _| Vec::new()))
}

/// 𝒢ₖ,ᵣ up to `n_max` vertices.
pub fn generate_gkr(k: usize, r: i64, n_max: usize) -> Result<EaselCorpus> {
    generate_gkr_with(k, r, n_max, &GenOptions::default())
}

pub fn generate_gkr_with(k: usize, r: i64, n_max: usize, opts: &GenOptions) -> Result<EaselCorpus> {
    if r < 0 {
        return Err(Error::Precondition(format!("r = {r}: negative r is not supported")));
    }
    if n_max < 3 {
        return Err(Error::Precondition("n_max must be at least 3".into()));
    }
    let entries = easels(k, r, n_max, opts, opts.rem_depth)?;
    let depth_stable = if opts.check_depth {
        let deeper = easels(k, r, n_max, opts, opts.rem_depth + 1)?;
        Some(deeper.iter().map(|e| &e.code).eq(entries.iter().map(|e| &e.code)))
    } else {
        None
    };
    Ok(EaselCorpus { entries, depth_stable })
}

fn easels(k: usize, r: i64, n_max: usize, opts: &GenOptions, depth: usize) -> Result<Vec<CorpusEntry>> {
    // (REM) may start from 𝒢ₖ₊₁,ᵣ; that class comes from a nested closure.
    let outer = if depth > 0 && opts.allows(Tag::Rem) { easels(k + 1, r, n_max, opts, depth - 1)? } else { Vec::new() };
    let canvases = if k >= 5 && n_max > 3 { generate_gk(k, n_max - 1)? } else { Vec::new() };
    let pieces = |n: usize, _: &[CorpusEntry]| {
        let below: Vec<CorpusEntry> = canvases.iter().filter(|e| e.vertex_count() < n).cloned().collect();
        library_of(&below)
    };
    let extra = |ctx: &Ctx<'_>, n: usize| {
        let mut out = Vec::new();
        for p in outer.iter().filter(|e| e.vertex_count() == n) {
            for v in p.canvas.non_tip_vertices() {
                if Some(v) != p.x {
                    out.extend(ctx.reduction(p, v));
                }
            }
        }
        out
    };
    Ok(close(k, Some(r), n_max, opts, &pieces, &extra))
}

/// Codes reachable in one step of the given clauses from `corpus` (members
/// of one class), restricted to at most `n_max` vertices.
pub fn one_step_codes(
    corpus: &[CorpusEntry],
    k: usize,
    r: Option<i64>,
    n_max: usize,
    tags: &[Tag],
) -> BTreeSet<CanonCode> {
    let opts = GenOptions { clauses: tags.iter().copied().collect(), rem_depth: 0, check_depth: false };
    let pieces = library_of(&corpus.iter().filter(|e| e.x.is_none()).cloned().collect::<Vec<_>>());
    let easel_pieces = library_of(&corpus.iter().filter(|e| e.x.is_some()).cloned().collect::<Vec<_>>());
    let ctx = Ctx { k, r, n_max, pieces: &pieces, easel_pieces: Some(&easel_pieces), opts: &opts };
    let mut out = BTreeSet::new();
    for n in 3..=n_max {
        let batches: Vec<Vec<Cand>> = corpus
            .par_iter()
            .map(|p| {
                let mut v = Vec::new();
                if p.vertex_count() < n {
                    v.extend(ctx.cross(p, n));
                } else if p.vertex_count() == n {
                    v.extend(ctx.intra(p));
                }
                v
            })
            .collect();
        out.extend(batches.into_iter().flatten().map(|c| c.code));
    }
    out
}
