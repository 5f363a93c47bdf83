//! Canonical labeling and isomorphism for small Coxeter diagrams.
//!
//! Canonical forms are computed on the structural codes (dotted weights
//! erased), by branch-and-bound over node orderings seeded with a partition
//! by local invariants. Diagram orders never exceed eleven here, so the
//! exhaustive approach with lexicographic pruning is plenty.

use super::{CoxeterDiagram, EdgeLabel};

/// Canonical encoding: `[order, codes of the upper triangle row by row]`
/// minimized over all node orderings.
pub fn canonical_code(d: &CoxeterDiagram) -> Vec<u32> {
    let n = d.order();
    if n == 0 {
        return vec![0];
    }
    let keys = node_keys(d);
    let mut best: Option<Vec<u32>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut current: Vec<u32> = Vec::new();
    search(d, &keys, &mut perm, &mut used, &mut current, &mut best);
    let mut out = vec![n as u32];
    out.extend(best.unwrap());
    out
}

/// A permutation realizing the canonical code: node `i` of the canonical
/// diagram is node `perm[i]` of the input.
pub fn canonical_perm(d: &CoxeterDiagram) -> Vec<usize> {
    let n = d.order();
    if n == 0 {
        return vec![];
    }
    let keys = node_keys(d);
    let mut best: Option<Vec<u32>> = None;
    let mut best_perm: Vec<usize> = (0..n).collect();
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut current: Vec<u32> = Vec::new();
    search_with_perm(
        d,
        &keys,
        &mut perm,
        &mut used,
        &mut current,
        &mut best,
        &mut best_perm,
    );
    best_perm
}

fn node_keys(d: &CoxeterDiagram) -> Vec<Vec<u32>> {
    (0..d.order())
        .map(|i| {
            let mut k: Vec<u32> = (0..d.order())
                .filter(|&j| j != i)
                .map(|j| d.edge(i, j).code())
                .collect();
            k.sort_unstable();
            k
        })
        .collect()
}

fn row_codes(d: &CoxeterDiagram, perm: &[usize], new: usize) -> Vec<u32> {
    perm.iter().map(|&p| d.edge(p, new).code()).collect()
}

fn search(
    d: &CoxeterDiagram,
    keys: &[Vec<u32>],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    current: &mut Vec<u32>,
    best: &mut Option<Vec<u32>>,
) {
    let n = d.order();
    if perm.len() == n {
        if best.as_ref().map_or(true, |b| current[..] < b[..]) {
            *best = Some(current.clone());
        }
        return;
    }
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        let row = row_codes(d, perm, cand);
        let len_before = current.len();
        current.extend(&row);
        // prune against the best prefix
        let keep = match best {
            None => true,
            Some(b) => current[..] <= b[..current.len()],
        };
        if keep {
            used[cand] = true;
            perm.push(cand);
            search(d, keys, perm, used, current, best);
            perm.pop();
            used[cand] = false;
        }
        current.truncate(len_before);
    }
    let _ = keys;
}

#[allow(clippy::too_many_arguments)]
fn search_with_perm(
    d: &CoxeterDiagram,
    keys: &[Vec<u32>],
    perm: &mut Vec<usize>,
    used: &mut [bool],
    current: &mut Vec<u32>,
    best: &mut Option<Vec<u32>>,
    best_perm: &mut Vec<usize>,
) {
    let n = d.order();
    if perm.len() == n {
        if best.as_ref().map_or(true, |b| current[..] < b[..]) {
            *best = Some(current.clone());
            *best_perm = perm.clone();
        }
        return;
    }
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        let row = row_codes(d, perm, cand);
        let len_before = current.len();
        current.extend(&row);
        let keep = match best {
            None => true,
            Some(b) => current[..] <= b[..current.len()],
        };
        if keep {
            used[cand] = true;
            perm.push(cand);
            search_with_perm(d, keys, perm, used, current, best, best_perm);
            perm.pop();
            used[cand] = false;
        }
        current.truncate(len_before);
    }
    let _ = keys;
}

/// Structure-preserving isomorphism (dotted weights erased).
pub fn is_isomorphic(a: &CoxeterDiagram, b: &CoxeterDiagram) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    if canonical_code(a) != canonical_code(b) {
        return None;
    }
    let pa = canonical_perm(a);
    let pb = canonical_perm(b);
    // canonical node i is pa[i] in a and pb[i] in b; map a -> b
    let n = a.order();
    let mut map = vec![0usize; n];
    for i in 0..n {
        map[pa[i]] = pb[i];
    }
    Some(map)
}

/// Isomorphism that also matches dotted weights exactly.
pub fn is_isomorphic_exact(a: &CoxeterDiagram, b: &CoxeterDiagram) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn compatible(
        a: &CoxeterDiagram,
        b: &CoxeterDiagram,
        map: &[Option<usize>],
        i: usize,
        bi: usize,
    ) -> bool {
        for (j, mj) in map.iter().enumerate() {
            if let Some(bj) = mj {
                let ea = a.edge(i, j);
                let eb = b.edge(bi, *bj);
                if ea.code() != eb.code() {
                    return false;
                }
                if let (EdgeLabel::Dotted(Some(wa)), EdgeLabel::Dotted(Some(wb))) = (ea, eb) {
                    if !wa.equals(wb) {
                        return false;
                    }
                }
                if matches!(
                    (ea, eb),
                    (EdgeLabel::Dotted(Some(_)), EdgeLabel::Dotted(None))
                        | (EdgeLabel::Dotted(None), EdgeLabel::Dotted(Some(_)))
                ) {
                    return false;
                }
            }
        }
        true
    }
    fn rec(
        a: &CoxeterDiagram,
        b: &CoxeterDiagram,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        if i == a.order() {
            return true;
        }
        for bi in 0..b.order() {
            if !used[bi] && compatible(a, b, map, i, bi) {
                map[i] = Some(bi);
                used[bi] = true;
                if rec(a, b, map, used, i + 1) {
                    return true;
                }
                map[i] = None;
                used[bi] = false;
            }
        }
        false
    }
    if rec(a, b, &mut map, &mut used, 0) {
        Some(map.into_iter().map(|m| m.unwrap()).collect())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{Rat, RatExt};
    use crate::algebra::tower::Tw;

    fn path(labels: &[u32]) -> CoxeterDiagram {
        let mut d = CoxeterDiagram::new(labels.len() + 1);
        for (i, &m) in labels.iter().enumerate() {
            d.set_angle(i, i + 1, m);
        }
        d
    }

    #[test]
    fn canonical_is_permutation_invariant() {
        let d = path(&[5, 3, 4]);
        let c0 = canonical_code(&d);
        let p = d.permuted(&[2, 0, 3, 1]);
        assert_eq!(canonical_code(&p), c0);
        let rev = d.permuted(&[3, 2, 1, 0]);
        assert_eq!(canonical_code(&rev), c0);
    }

    #[test]
    fn different_diagrams_differ() {
        assert_ne!(canonical_code(&path(&[3, 3])), canonical_code(&path(&[3, 4])));
        // A3 path vs triangle
        let mut tri = CoxeterDiagram::new(3);
        tri.set_angle(0, 1, 3);
        tri.set_angle(1, 2, 3);
        tri.set_angle(0, 2, 3);
        assert_ne!(canonical_code(&path(&[3, 3])), canonical_code(&tri));
        assert!(is_isomorphic(&path(&[3, 3]), &tri).is_none());
    }

    #[test]
    fn isomorphism_produces_valid_map() {
        let d = path(&[5, 3, 3]);
        let p = d.permuted(&[1, 3, 0, 2]);
        let map = is_isomorphic(&d, &p).unwrap();
        for i in 0..4 {
            for j in i + 1..4 {
                assert_eq!(d.edge(i, j).code(), p.edge(map[i], map[j]).code());
            }
        }
    }

    #[test]
    fn exact_isomorphism_checks_weights() {
        let w1 = Tw::from_rat(Rat::from_int(2));
        let w2 = Tw::from_rat(Rat::from_int(3));
        let mut a = CoxeterDiagram::new(2);
        a.set_edge(0, 1, EdgeLabel::Dotted(Some(w1.clone())));
        let mut b = CoxeterDiagram::new(2);
        b.set_edge(0, 1, EdgeLabel::Dotted(Some(w2)));
        assert!(is_isomorphic(&a, &b).is_some());
        assert!(is_isomorphic_exact(&a, &b).is_none());
        let mut c = CoxeterDiagram::new(2);
        c.set_edge(0, 1, EdgeLabel::Dotted(Some(w1)));
        assert!(is_isomorphic_exact(&a, &c).is_some());
    }
}
