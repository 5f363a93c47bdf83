//! Arc-constrained searches: all Coxeter diagrams whose Lanner subdiagrams
//! are exactly the windows of an arc of Gale vertices.
//!
//! Every window must have total order at least four; then no dotted or
//! multiple-of-multiplicity->=4 edge can occur and the space is finite. The
//! search seeds a window with the Lanner catalog and attaches the remaining
//! nodes one at a time under the subset filters.

use std::collections::HashSet;

use crate::diagram::catalog::lanner_catalog;
use crate::diagram::CoxeterDiagram;

use super::filter;
use super::SearchError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSpec {
    pub labels: Vec<u32>,
    /// Window length in Gale vertices: (k-1)/2 of the ambient polygon.
    pub window: usize,
}

impl ArcSpec {
    pub fn new(labels: Vec<u32>, window: usize) -> Self {
        ArcSpec { labels, window }
    }

    pub fn parse(s: &str) -> Result<ArcSpec, String> {
        // "x1,...,xl:w"
        let (ls, ws) = s.split_once(':').ok_or("expected 'labels:window'")?;
        let labels: Result<Vec<u32>, _> = ls.split(',').map(|x| x.trim().parse()).collect();
        let labels = labels.map_err(|_| "bad label".to_string())?;
        let window: usize = ws.trim().parse().map_err(|_| "bad window".to_string())?;
        if labels.is_empty() || window == 0 || window > labels.len() {
            return Err("labels and window sizes are inconsistent".into());
        }
        Ok(ArcSpec { labels, window })
    }

    pub fn node_count(&self) -> usize {
        self.labels.iter().map(|&x| x as usize).sum()
    }

    /// Node ranges of each Gale vertex along the arc.
    pub fn groups(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut acc = 0usize;
        for &l in &self.labels {
            out.push(acc..acc + l as usize);
            acc += l as usize;
        }
        out
    }

    /// The windows: node sets of `window` consecutive groups.
    pub fn windows(&self) -> Vec<Vec<usize>> {
        let groups = self.groups();
        (0..=self.labels.len() - self.window)
            .map(|s| {
                let mut w: Vec<usize> = Vec::new();
                for g in s..s + self.window {
                    w.extend(groups[g].clone());
                }
                w
            })
            .collect()
    }

    pub fn is_palindrome(&self) -> bool {
        let mut rev = self.labels.clone();
        rev.reverse();
        rev == self.labels
    }
}

/// All diagrams realizing the arc, up to isomorphism fixing the window
/// structure.
pub fn search_arc(spec: &ArcSpec) -> Result<Vec<CoxeterDiagram>, SearchError> {
    let windows = spec.windows();
    for w in &windows {
        if w.len() <= 3 {
            return Err(SearchError::InfiniteFamily(format!(
                "window of order {} admits unbounded labels",
                w.len()
            )));
        }
        if w.len() > 5 {
            return Ok(vec![]); // no Lanner diagram of order > 5 exists
        }
    }
    let n = spec.node_count();
    let face_refs: Vec<&[usize]> = windows.iter().map(|w| w.as_slice()).collect();
    let mut results: Vec<CoxeterDiagram> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();

    // seed window 0 with every labeled copy of a catalog Lanner diagram
    let w0 = &windows[0];
    let q = w0.len();
    for proto in lanner_catalog(q) {
        let mut perm: Vec<usize> = (0..q).collect();
        permute_all(&mut perm, 0, &mut |p| {
            let mut d = CoxeterDiagram::new(n);
            for a in 0..q {
                for b in a + 1..q {
                    d.set_edge(w0[a], w0[b], proto.edge(p[a], p[b]).clone());
                }
            }
            extend_nodes(spec, &mut d, q, &face_refs, &mut |cand| {
                finish_candidate(spec, cand, &face_refs, &mut results, &mut seen);
            });
        });
    }
    results.sort_by_key(|d| colored_canonical_code(spec, d));
    Ok(results)
}

fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Attach nodes `next..n` one at a time, enumerating labels 2..5 on each
/// new pair under the incremental filters.
fn extend_nodes(
    spec: &ArcSpec,
    d: &mut CoxeterDiagram,
    next: usize,
    faces: &[&[usize]],
    emit: &mut impl FnMut(&CoxeterDiagram),
) {
    let n = spec.node_count();
    if next == n {
        emit(d);
        return;
    }
    assign_pairs(spec, d, next, 0, faces, emit);
}

fn assign_pairs(
    spec: &ArcSpec,
    d: &mut CoxeterDiagram,
    v: usize,
    x: usize,
    faces: &[&[usize]],
    emit: &mut impl FnMut(&CoxeterDiagram),
) {
    if x == v {
        // node complete: full incremental subset check
        let nodes: Vec<usize> = (0..=v).collect();
        if filter::subsets_ok(d, &nodes, v, faces) {
            extend_nodes(spec, d, v + 1, faces, emit);
        }
        return;
    }
    let assigned: Vec<usize> = (0..x).collect();
    for m in [2u32, 3, 4, 5] {
        d.set_angle(x, v, m);
        if filter::pair_triples_ok(d, &assigned, v, x, faces)
            && filter::pair_quads_ok(d, &assigned, v, x, faces)
        {
            assign_pairs(spec, d, v, x + 1, faces, emit);
        }
    }
    d.set_angle(x, v, 2);
}

fn finish_candidate(
    spec: &ArcSpec,
    d: &CoxeterDiagram,
    faces: &[&[usize]],
    results: &mut Vec<CoxeterDiagram>,
    seen: &mut HashSet<Vec<u32>>,
) {
    if !d.is_connected() {
        return;
    }
    if !filter::final_combinatorics_ok(d, faces) {
        return;
    }
    let code = colored_canonical_code(spec, d);
    if seen.insert(code) {
        results.push(d.clone());
    }
}

/// Canonical code over isomorphisms preserving the arc's group structure,
/// allowing the arc reversal when the label sequence is a palindrome.
pub fn colored_canonical_code(spec: &ArcSpec, d: &CoxeterDiagram) -> Vec<u32> {
    let groups = spec.groups();
    let mut maps: Vec<Vec<usize>> = vec![(0..groups.len()).collect()];
    if spec.is_palindrome() {
        maps.push((0..groups.len()).rev().collect());
    }
    let mut best: Option<Vec<u32>> = None;
    for gm in maps {
        // node order: groups in mapped order; within each group, minimize
        // over permutations by exhaustive search (group sizes <= 5)
        let group_nodes: Vec<Vec<usize>> =
            gm.iter().map(|&g| groups[g].clone().collect()).collect();
        let mut order: Vec<usize> = Vec::with_capacity(d.order());
        best_group_order(d, &group_nodes, 0, &mut order, &mut best);
    }
    best.unwrap()
}

fn best_group_order(
    d: &CoxeterDiagram,
    group_nodes: &[Vec<usize>],
    g: usize,
    order: &mut Vec<usize>,
    best: &mut Option<Vec<u32>>,
) {
    if g == group_nodes.len() {
        let code = code_under_order(d, order);
        if best.as_ref().map_or(true, |b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let mut perm = group_nodes[g].clone();
    let len = perm.len();
    permute_prefix(&mut perm, 0, len, &mut |p| {
        let save = order.len();
        order.extend_from_slice(p);
        best_group_order(d, group_nodes, g + 1, order, best);
        order.truncate(save);
    });
}

fn permute_prefix(
    perm: &mut Vec<usize>,
    k: usize,
    len: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if k == len {
        f(perm);
        return;
    }
    for i in k..len {
        perm.swap(k, i);
        permute_prefix(perm, k + 1, len, f);
        perm.swap(k, i);
    }
}

fn code_under_order(d: &CoxeterDiagram, order: &[usize]) -> Vec<u32> {
    let mut out = Vec::with_capacity(order.len() * (order.len() - 1) / 2);
    for i in 0..order.len() {
        for j in 0..i {
            out.push(d.edge(order[j], order[i]).code());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_spec() {
        let s = ArcSpec::parse("2,3,2:2").unwrap();
        assert_eq!(s.labels, vec![2, 3, 2]);
        assert_eq!(s.window, 2);
        assert_eq!(s.node_count(), 7);
        assert_eq!(s.windows(), vec![vec![0, 1, 2, 3, 4], vec![2, 3, 4, 5, 6]]);
        assert!(ArcSpec::parse("2,3").is_err());
    }

    #[test]
    fn infinite_windows_rejected() {
        let s = ArcSpec::new(vec![1, 2], 2); // window order 3
        assert!(matches!(
            search_arc(&s),
            Err(SearchError::InfiniteFamily(_))
        ));
        let s = ArcSpec::new(vec![4, 3], 1); // single-vertex windows, order 3
        assert!(matches!(
            search_arc(&s),
            Err(SearchError::InfiniteFamily(_))
        ));
    }

    #[test]
    fn oversized_window_is_empty() {
        let s = ArcSpec::new(vec![3, 3], 2); // window order 6: no Lanner
        assert_eq!(search_arc(&s).unwrap().len(), 0);
    }
}
