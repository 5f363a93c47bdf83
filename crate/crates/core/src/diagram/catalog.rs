//! The reference families: connected elliptic diagrams (A, B, D, E, F, H,
//! dihedral), connected parabolic diagrams (the affine list), and Lanner
//! diagrams of orders 2 to 5.
//!
//! Ellipticity and parabolicity are decided by shape recognition, which the
//! test suite cross-validates against the exact signature on every connected
//! diagram of small order. The order-4 and order-5 Lanner lists are not
//! transcribed: they are generated once by exhaustive search with the exact
//! classifier and then cached.

use std::collections::HashSet;
use std::sync::OnceLock;

use super::canon::canonical_code;
use super::{CoxeterDiagram, EdgeLabel};
use crate::algebra::rational::{Rat, RatExt};
use crate::algebra::scalar::symmetric_signature;

/// Is the diagram elliptic (positive definite Gram matrix)?
/// Works for any diagram, connected or not; dotted and bold edges are
/// never elliptic.
pub fn is_elliptic(d: &CoxeterDiagram) -> bool {
    d.components()
        .iter()
        .all(|c| is_elliptic_connected(&d.subdiagram(c)))
}

fn edge_list(d: &CoxeterDiagram) -> Option<Vec<(usize, usize, u32)>> {
    let mut out = Vec::new();
    for i in 0..d.order() {
        for j in i + 1..d.order() {
            match d.edge(i, j) {
                EdgeLabel::Orthogonal => {}
                EdgeLabel::Angle(m) => out.push((i, j, *m)),
                EdgeLabel::Bold | EdgeLabel::Dotted(_) => return None,
            }
        }
    }
    Some(out)
}

/// Elliptic test for a connected diagram.
fn is_elliptic_connected(d: &CoxeterDiagram) -> bool {
    let n = d.order();
    if n == 0 {
        return true;
    }
    let edges = match edge_list(d) {
        Some(e) => e,
        None => return false, // bold or dotted content
    };
    if n == 1 {
        return true;
    }
    if n == 2 {
        return true; // any finite dihedral angle
    }
    // order >= 3: must be a tree
    if edges.len() != n - 1 {
        return false;
    }
    let mut deg = vec![0usize; n];
    for &(i, j, _) in &edges {
        deg[i] += 1;
        deg[j] += 1;
    }
    let max_label = edges.iter().map(|&(_, _, m)| m).max().unwrap();
    let branch_nodes: Vec<usize> = (0..n).filter(|&i| deg[i] >= 3).collect();
    let is_path = branch_nodes.is_empty();
    match max_label {
        0..=3 => {
            if is_path {
                return true; // A_n
            }
            if branch_nodes.len() != 1 || deg[branch_nodes[0]] != 3 {
                return false;
            }
            let mut arms = arm_lengths(d, branch_nodes[0]);
            arms.sort_unstable();
            matches!(
                arms.as_slice(),
                [1, 1, _] | [1, 2, 2] | [1, 2, 3] | [1, 2, 4]
            ) // D_n, E6, E7, E8
        }
        4 => {
            if !is_path {
                return false;
            }
            let fours: Vec<&(usize, usize, u32)> =
                edges.iter().filter(|&&(_, _, m)| m == 4).collect();
            if fours.len() != 1 {
                return false;
            }
            let &(i, j, _) = fours[0];
            let at_end = deg[i] == 1 || deg[j] == 1;
            if at_end {
                true // B_n
            } else {
                n == 4 // F4
            }
        }
        5 => {
            if !is_path || n > 4 {
                return false;
            }
            let fives: Vec<&(usize, usize, u32)> =
                edges.iter().filter(|&&(_, _, m)| m == 5).collect();
            if fives.len() != 1 || edges.iter().any(|&(_, _, m)| m == 4) {
                return false;
            }
            let &(i, j, _) = fives[0];
            deg[i] == 1 || deg[j] == 1 // H3, H4 need the 5 at an end
        }
        _ => false,
    }
}

/// Arm lengths (edge counts) of the tree hanging off each neighbor of a
/// branch node.
fn arm_lengths(d: &CoxeterDiagram, center: usize) -> Vec<usize> {
    d.neighbors(center)
        .into_iter()
        .map(|start| {
            let mut len = 1;
            let mut prev = center;
            let mut cur = start;
            loop {
                let next: Vec<usize> = d
                    .neighbors(cur)
                    .into_iter()
                    .filter(|&x| x != prev)
                    .collect();
                match next.as_slice() {
                    [] => return len,
                    [x] => {
                        prev = cur;
                        cur = *x;
                        len += 1;
                    }
                    _ => return usize::MAX, // nested branch; caller rejects
                }
            }
        })
        .collect()
}

/// Is the diagram a connected parabolic (affine) diagram?
pub fn is_connected_parabolic(d: &CoxeterDiagram) -> bool {
    let n = d.order();
    if n == 2 {
        return matches!(d.edge(0, 1), EdgeLabel::Bold);
    }
    if n < 3 {
        return false;
    }
    let edges = match edge_list(d) {
        Some(e) => e,
        None => return false,
    };
    if !d.is_connected() {
        return false;
    }
    let mut deg = vec![0usize; n];
    for &(i, j, _) in &edges {
        deg[i] += 1;
        deg[j] += 1;
    }
    let max_label = edges.iter().map(|&(_, _, m)| m).max().unwrap();
    let is_cycle = edges.len() == n && deg.iter().all(|&x| x == 2);
    if is_cycle {
        // affine A_{n-1}
        return max_label == 3;
    }
    if edges.len() != n - 1 {
        return false;
    }
    let branch_nodes: Vec<usize> = (0..n).filter(|&i| deg[i] >= 3).collect();
    let is_path = branch_nodes.is_empty();
    match max_label {
        6 => {
            // affine G2: path (6, 3)
            n == 3 && is_path && {
                let mut ms: Vec<u32> = edges.iter().map(|&(_, _, m)| m).collect();
                ms.sort_unstable();
                ms == vec![3, 6]
            }
        }
        4 => {
            let fours: Vec<&(usize, usize, u32)> =
                edges.iter().filter(|&&(_, _, m)| m == 4).collect();
            if is_path {
                let end_fours = fours
                    .iter()
                    .filter(|&&&(i, j, _)| deg[i] == 1 || deg[j] == 1)
                    .count();
                match fours.len() {
                    2 => end_fours == 2, // affine C_n, both ends
                    1 => {
                        // affine F4: 5-node path, the 4 one step off an end
                        if n != 5 || end_fours != 0 {
                            return false;
                        }
                        let &&(i, j, _) = &fours[0];
                        // one endpoint of the 4-edge is adjacent to a leaf
                        let next_to_leaf = |x: usize| {
                            d.neighbors(x)
                                .iter()
                                .any(|&y| deg[y] == 1)
                        };
                        next_to_leaf(i) || next_to_leaf(j)
                    }
                    _ => false,
                }
            } else {
                // affine B_n: one fork end, one 4-edge at the far end
                if fours.len() != 1 || branch_nodes.len() != 1 || deg[branch_nodes[0]] != 3 {
                    return false;
                }
                let mut arms = arm_lengths(d, branch_nodes[0]);
                arms.sort_unstable();
                if !(arms.len() == 3 && arms[0] == 1 && arms[1] == 1) {
                    return false;
                }
                let &(i, j, _) = fours[0];
                deg[i] == 1 || deg[j] == 1
            }
        }
        0..=3 => {
            if is_path {
                return false;
            }
            if branch_nodes.len() == 1 {
                let c = branch_nodes[0];
                if deg[c] == 4 {
                    // affine D4: star with four leaves
                    let arms = arm_lengths(d, c);
                    return arms.len() == 4 && arms.iter().all(|&a| a == 1);
                }
                if deg[c] != 3 {
                    return false;
                }
                let mut arms = arm_lengths(d, c);
                arms.sort_unstable();
                // affine E6, E7, E8
                return matches!(arms.as_slice(), [2, 2, 2] | [1, 3, 3] | [1, 2, 5]);
            }
            if branch_nodes.len() == 2 {
                // affine D_n: two fork ends joined by a path
                branch_nodes.iter().all(|&c| {
                    deg[c] == 3 && {
                        let leaves = d
                            .neighbors(c)
                            .iter()
                            .filter(|&&x| deg[x] == 1)
                            .count();
                        leaves >= 2
                    }
                })
            } else {
                false
            }
        }
        _ => false,
    }
}

/// Lanner test on a standalone diagram.
///
/// Order 2 is the dotted-edge family (consistent with diverging facets);
/// order 3 is the triangle inequality `1/p + 1/q + 1/r < 1`; orders 4 and 5
/// are catalog lookups against the generated lists.
pub fn is_lanner(d: &CoxeterDiagram) -> bool {
    match d.order() {
        2 => match d.edge(0, 1) {
            EdgeLabel::Dotted(_) => true,
            _ => false,
        },
        3 => {
            let ms = [
                d.edge(0, 1).angle(),
                d.edge(0, 2).angle(),
                d.edge(1, 2).angle(),
            ];
            let mut sum = Rat::from_int(0);
            for m in ms {
                match m {
                    None => return false, // bold or dotted inside a triple
                    Some(v) => sum += Rat::from_pair(1, v as i64),
                }
            }
            sum < Rat::from_int(1) && d.is_connected()
        }
        4 => lanner_codes(4).contains(&canonical_code(d)),
        5 => lanner_codes(5).contains(&canonical_code(d)),
        _ => false,
    }
}

pub fn lanner_catalog(order: usize) -> &'static [CoxeterDiagram] {
    match order {
        4 => lanner_list_4(),
        5 => lanner_list_5(),
        _ => panic!("lanner_catalog holds concrete diagrams for orders 4 and 5 only"),
    }
}

fn lanner_codes(order: usize) -> &'static HashSet<Vec<u32>> {
    static C4: OnceLock<HashSet<Vec<u32>>> = OnceLock::new();
    static C5: OnceLock<HashSet<Vec<u32>>> = OnceLock::new();
    match order {
        4 => C4.get_or_init(|| lanner_list_4().iter().map(canonical_code).collect()),
        5 => C5.get_or_init(|| lanner_list_5().iter().map(canonical_code).collect()),
        _ => unreachable!(),
    }
}

fn lanner_list_4() -> &'static [CoxeterDiagram] {
    static L: OnceLock<Vec<CoxeterDiagram>> = OnceLock::new();
    L.get_or_init(|| generate_lanner(4))
}

fn lanner_list_5() -> &'static [CoxeterDiagram] {
    static L: OnceLock<Vec<CoxeterDiagram>> = OnceLock::new();
    L.get_or_init(|| generate_lanner(5))
}

/// Exhaustively classify all connected diagrams of the given order with
/// angle labels up to 5 (larger labels cannot appear: a multiple edge of
/// multiplicity >= 4 next to any third node spoils an elliptic triple).
fn generate_lanner(order: usize) -> Vec<CoxeterDiagram> {
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|i| ((i + 1)..order).map(move |j| (i, j)))
        .collect();
    let mut out: Vec<CoxeterDiagram> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let labels = [2u32, 3, 4, 5];
    let mut assign = vec![0usize; pairs.len()];
    'outer: loop {
        let mut d = CoxeterDiagram::new(order);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            d.set_angle(i, j, labels[assign[k]]);
        }
        if d.is_connected() && all_proper_elliptic(&d) && !is_elliptic(&d) {
            // distinguish Lanner (negative index 1) from parabolic
            let m = d.gram_cyc().expect("angle-only diagram");
            let (_, nm, nz) = symmetric_signature(&m);
            if nm == 1 && nz == 0 {
                let code = canonical_code(&d);
                if seen.insert(code) {
                    out.push(d);
                }
            }
        }
        // odometer
        for k in 0..assign.len() {
            assign[k] += 1;
            if assign[k] < labels.len() {
                continue 'outer;
            }
            assign[k] = 0;
        }
        break;
    }
    out.sort_by_key(canonical_code);
    out
}

fn all_proper_elliptic(d: &CoxeterDiagram) -> bool {
    (0..d.order()).all(|drop| {
        let nodes: Vec<usize> = (0..d.order()).filter(|&i| i != drop).collect();
        is_elliptic(&d.subdiagram(&nodes))
    })
}

/// Is `(p, q, r)` a Lanner triangle?
pub fn is_lanner_triple(p: u32, q: u32, r: u32) -> bool {
    if p < 2 || q < 2 || r < 2 {
        return false;
    }
    Rat::from_pair(1, p as i64) + Rat::from_pair(1, q as i64) + Rat::from_pair(1, r as i64)
        < Rat::from_int(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[u32]) -> CoxeterDiagram {
        let mut d = CoxeterDiagram::new(labels.len() + 1);
        for (i, &m) in labels.iter().enumerate() {
            d.set_angle(i, i + 1, m);
        }
        d
    }

    fn cycle(labels: &[u32]) -> CoxeterDiagram {
        let n = labels.len();
        let mut d = CoxeterDiagram::new(n);
        for (i, &m) in labels.iter().enumerate() {
            d.set_angle(i, (i + 1) % n, m);
        }
        d
    }

    #[test]
    fn elliptic_shapes() {
        assert!(is_elliptic(&path(&[3, 3, 3]))); // A4
        assert!(is_elliptic(&path(&[4, 3, 3]))); // B4
        assert!(is_elliptic(&path(&[3, 4, 3]))); // F4
        assert!(is_elliptic(&path(&[5, 3, 3]))); // H4
        assert!(is_elliptic(&path(&[5, 3]))); // H3
        assert!(!is_elliptic(&path(&[5, 3, 3, 3]))); // no H5
        assert!(!is_elliptic(&path(&[3, 5, 3])));
        assert!(!is_elliptic(&path(&[4, 3, 4]))); // affine C3
        assert!(is_elliptic(&path(&[7]))); // dihedral
        // D4: star
        let mut d = CoxeterDiagram::new(4);
        d.set_angle(0, 1, 3);
        d.set_angle(0, 2, 3);
        d.set_angle(0, 3, 3);
        assert!(is_elliptic(&d));
        // disconnected union of elliptics
        let mut u = CoxeterDiagram::new(4);
        u.set_angle(0, 1, 5);
        u.set_angle(2, 3, 7);
        assert!(is_elliptic(&u));
        // triangle of 3s is not elliptic
        assert!(!is_elliptic(&cycle(&[3, 3, 3])));
    }

    #[test]
    fn parabolic_shapes() {
        assert!(is_connected_parabolic(&cycle(&[3, 3, 3]))); // affine A2
        assert!(is_connected_parabolic(&cycle(&[3, 3, 3, 3, 3])));
        assert!(is_connected_parabolic(&path(&[4, 4]))); // affine C2
        assert!(is_connected_parabolic(&path(&[4, 3, 4])));
        assert!(is_connected_parabolic(&path(&[6, 3]))); // affine G2
        assert!(is_connected_parabolic(&path(&[3, 4, 3, 3]))); // affine F4
        assert!(!is_connected_parabolic(&path(&[4, 3, 3, 4, 3])));
        // affine B3: fork + 4-end
        let mut d = CoxeterDiagram::new(4);
        d.set_angle(0, 1, 3);
        d.set_angle(0, 2, 3);
        d.set_angle(0, 3, 4);
        assert!(is_connected_parabolic(&d));
        // affine D4: star of four
        let mut d = CoxeterDiagram::new(5);
        for leaf in 1..5 {
            d.set_angle(0, leaf, 3);
        }
        assert!(is_connected_parabolic(&d));
        // bold pair
        let mut d = CoxeterDiagram::new(2);
        d.set_edge(0, 1, EdgeLabel::Bold);
        assert!(is_connected_parabolic(&d));
        // not parabolic: plain path
        assert!(!is_connected_parabolic(&path(&[3, 3])));
    }

    #[test]
    fn lanner_counts() {
        assert_eq!(lanner_catalog(4).len(), 9);
        assert_eq!(lanner_catalog(5).len(), 5);
    }

    #[test]
    fn lanner_triangles() {
        assert!(is_lanner_triple(2, 3, 7));
        assert!(is_lanner_triple(4, 4, 4));
        assert!(!is_lanner_triple(2, 3, 6)); // parabolic
        assert!(!is_lanner_triple(2, 3, 5)); // elliptic
        let d = super::super::lanner_triangle(2, 3, 7);
        assert!(is_lanner(&d));
        let e = super::super::lanner_triangle(2, 3, 6);
        assert!(!is_lanner(&e));
    }

    #[test]
    fn lanner_dotted_pair() {
        let mut d = CoxeterDiagram::new(2);
        d.set_edge(0, 1, EdgeLabel::Dotted(None));
        assert!(is_lanner(&d));
        let mut b = CoxeterDiagram::new(2);
        b.set_edge(0, 1, EdgeLabel::Bold);
        assert!(!is_lanner(&b));
        assert!(!is_lanner(&path(&[7])));
    }

    #[test]
    fn lanner_catalog_members_check_out() {
        for order in [4usize, 5] {
            for d in lanner_catalog(order) {
                assert!(is_lanner(d));
                assert!(all_proper_elliptic(d));
                assert!(!is_elliptic(d));
            }
        }
    }
}
