//! Small exhaustive enumerations: set partitions and graphs up to isomorphism.

use std::collections::BTreeMap;

use crate::graph::{BorderedMultigraph, CanonCode, Multigraph};
use crate::z3::Z3;

/// All set partitions of `0..n` as restricted growth strings, in
/// lexicographic order (`a[0] = 0`, `a[i] ≤ 1 + max(a[..i])`).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut a = vec![0usize; n];
    let mut max = vec![0usize; n];
    loop {
        out.push(a.clone());
        // rightmost position that can grow
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            if a[i] <= max[i - 1] {
                break;
            }
            i -= 1;
        }
        a[i] += 1;
        max[i] = max[i - 1].max(a[i]);
        for j in i + 1..n {
            a[j] = 0;
            max[j] = max[i];
        }
    }
}

/// Number of parts of a restricted growth string.
pub fn part_count(rgs: &[usize]) -> usize {
    rgs.iter().max().map_or(0, |m| m + 1)
}

/// Every boundary on `n` vertices whose total is zero, lexicographic with
/// the last entry forced. Suitable for connected graphs.
pub fn zero_sum_boundaries(n: usize) -> Vec<Vec<Z3>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32 - 1);
    for code in 0..total {
        let mut b: Vec<Z3> =
            (0..n - 1).map(|i| Z3::from(((code / 3usize.pow((n - 2 - i) as u32)) % 3) as u8)).collect();
        b.push(-b.iter().sum::<Z3>());
        out.push(b);
    }
    out
}

/// Every Z3-boundary of `g` (per-component sums zero), lexicographic.
pub fn z3_boundaries(g: &Multigraph) -> Vec<Vec<Z3>> {
    let n = g.vertex_count();
    let labels = g.component_labels();
    let mut last = BTreeMap::new();
    for (v, &l) in labels.iter().enumerate() {
        last.insert(l, v);
    }
    let forced: Vec<bool> = (0..n).map(|v| last[&labels[v]] == v).collect();
    let free: Vec<usize> = (0..n).filter(|&v| !forced[v]).collect();
    let mut out = Vec::new();
    for code in 0..3usize.pow(free.len() as u32) {
        let mut b = vec![Z3::ZERO; n];
        let mut c = code;
        for &v in free.iter().rev() {
            b[v] = Z3::from((c % 3) as u8);
            c /= 3;
        }
        for v in 0..n {
            if forced[v] {
                b[v] = -(0..n).filter(|&w| labels[w] == labels[v] && w != v).map(|w| b[w]).sum::<Z3>();
            }
        }
        out.push(b);
    }
    out
}

/// Multigraphs on `n` vertices with every pair multiplicity at most
/// `max_mult` and at most `max_edges` instances, one per isomorphism class.
pub fn multigraphs_up_to_iso(n: usize, max_mult: usize, max_edges: usize, connected_only: bool) -> Vec<Multigraph> {
    fn rec(
        pairs: &[(usize, usize)],
        i: usize,
        left: usize,
        max_mult: usize,
        bundles: &mut Vec<(usize, usize, usize)>,
        visit: &mut dyn FnMut(&[(usize, usize, usize)]),
    ) {
        if i == pairs.len() {
            visit(bundles);
            return;
        }
        rec(pairs, i + 1, left, max_mult, bundles, visit);
        for m in 1..=max_mult.min(left) {
            bundles.push((pairs[i].0, pairs[i].1, m));
            rec(pairs, i + 1, left - m, max_mult, bundles, visit);
            bundles.pop();
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen: BTreeMap<CanonCode, Multigraph> = BTreeMap::new();
    let mut visit = |bundles: &[(usize, usize, usize)]| {
        let mut sorted = bundles.to_vec();
        sorted.sort_unstable();
        let g = Multigraph::from_bundles(n, &sorted).expect("valid pairs");
        if !connected_only || g.is_connected() {
            let code = BorderedMultigraph::with_zero_boundary(g.clone()).canonical_code().expect("small graph");
            seen.entry(code).or_insert(g);
        }
    };
    rec(&pairs, 0, max_edges, max_mult, &mut Vec::new(), &mut visit);
    seen.into_values().collect()
}

/// Simple graphs on `n` vertices up to isomorphism, grown one vertex at a
/// time from the classes on `n − 1` vertices.
pub fn simple_graphs_up_to_iso(n: usize) -> Vec<Multigraph> {
    let mut level: Vec<Multigraph> = vec![Multigraph::empty(0)];
    for k in 0..n {
        let mut next: BTreeMap<CanonCode, Multigraph> = BTreeMap::new();
        for g in &level {
            for mask in 0u32..(1 << k) {
                let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&[u, v]| (u, v)).collect();
                edges.extend((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k)));
                let h = Multigraph::new(k + 1, edges).expect("valid");
                let code = BorderedMultigraph::with_zero_boundary(h.clone()).canonical_code().expect("small graph");
                next.entry(code).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    level
}
