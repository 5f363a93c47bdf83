//! The pruning rules shared by every search, in allocation-light form:
//! the Lanner subdiagrams of a candidate must be exactly the missing faces,
//! nothing may be parabolic, and any non-elliptic subdiagram must contain a
//! face. These are the compactness constraints in combinatorial shape.

use crate::diagram::{catalog, CoxeterDiagram, EdgeLabel};

/// Edge code for the fast classifiers: 2 = orthogonal, m >= 3 = angle,
/// 1 = bold, 0 = dotted.
#[inline]
fn ecode(d: &CoxeterDiagram, i: usize, j: usize) -> u32 {
    match d.edge(i, j) {
        EdgeLabel::Orthogonal => 2,
        EdgeLabel::Angle(m) => *m,
        EdgeLabel::Bold => 1,
        EdgeLabel::Dotted(_) => 0,
    }
}

/// Elliptic test for up to five nodes, reading edges off the parent
/// diagram. Bold and dotted edges are never elliptic.
pub fn elliptic_small(d: &CoxeterDiagram, nodes: &[usize]) -> bool {
    let n = nodes.len();
    debug_assert!(n <= 5);
    let mut m = [[2u32; 5]; 5];
    for a in 0..n {
        for b in a + 1..n {
            let c = ecode(d, nodes[a], nodes[b]);
            if c < 2 {
                return false;
            }
            m[a][b] = c;
            m[b][a] = c;
        }
    }
    // split into components by bitmask
    let mut seen = [false; 5];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = [0usize; 5];
        let mut len = 0;
        let mut stack = [0usize; 5];
        let mut sp = 0;
        stack[sp] = s;
        sp += 1;
        seen[s] = true;
        while sp > 0 {
            sp -= 1;
            let x = stack[sp];
            comp[len] = x;
            len += 1;
            for y in 0..n {
                if !seen[y] && m[x][y] >= 3 {
                    seen[y] = true;
                    stack[sp] = y;
                    sp += 1;
                }
            }
        }
        if !elliptic_component(&m, &comp[..len]) {
            return false;
        }
    }
    true
}

/// Elliptic test for one connected component given the label matrix.
fn elliptic_component(m: &[[u32; 5]; 5], comp: &[usize]) -> bool {
    let n = comp.len();
    if n <= 2 {
        return true; // a point, or a single finite dihedral edge
    }
    let mut edges: [(usize, usize, u32); 10] = [(0, 0, 0); 10];
    let mut ne = 0;
    let mut deg = [0usize; 5];
    let mut max_label = 3;
    for a in 0..n {
        for b in a + 1..n {
            let c = m[comp[a]][comp[b]];
            if c >= 3 {
                edges[ne] = (a, b, c);
                ne += 1;
                deg[a] += 1;
                deg[b] += 1;
                max_label = max_label.max(c);
            }
        }
    }
    if ne != n - 1 {
        return false; // cycles are never elliptic
    }
    let branch: Option<usize> = (0..n).find(|&a| deg[a] >= 3);
    let is_path = branch.is_none();
    match max_label {
        3 => {
            if is_path {
                return true; // A_n
            }
            let c = branch.unwrap();
            if deg[c] != 3 || (0..n).filter(|&a| deg[a] >= 3).count() != 1 {
                return false;
            }
            let mut arms = arm_lengths_small(&edges[..ne], n, c);
            arms.sort_unstable();
            matches!(arms.as_slice(), [1, 1, _] | [1, 2, 2] | [1, 2, 3] | [1, 2, 4])
        }
        4 => {
            if !is_path {
                return false;
            }
            let mut fours = 0;
            let mut four_at_end = false;
            for &(a, b, c) in &edges[..ne] {
                if c == 4 {
                    fours += 1;
                    if deg[a] == 1 || deg[b] == 1 {
                        four_at_end = true;
                    }
                } else if c != 3 {
                    return false;
                }
            }
            if fours != 1 {
                return false;
            }
            four_at_end || n == 4 // B_n or F4
        }
        5 => {
            if !is_path || n > 4 {
                return false;
            }
            let mut fives = 0;
            let mut five_at_end = false;
            for &(a, b, c) in &edges[..ne] {
                if c == 5 {
                    fives += 1;
                    if deg[a] == 1 || deg[b] == 1 {
                        five_at_end = true;
                    }
                } else if c != 3 {
                    return false;
                }
            }
            fives == 1 && five_at_end // H3, H4
        }
        _ => false,
    }
}

fn arm_lengths_small(edges: &[(usize, usize, u32)], n: usize, center: usize) -> Vec<usize> {
    let mut adj = [[false; 5]; 5];
    for &(a, b, _) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut arms = Vec::new();
    for start in 0..n {
        if !adj[center][start] {
            continue;
        }
        let mut len = 1;
        let mut prev = center;
        let mut cur = start;
        loop {
            let mut next = None;
            let mut cnt = 0;
            for y in 0..n {
                if y != prev && adj[cur][y] {
                    next = Some(y);
                    cnt += 1;
                }
            }
            match (cnt, next) {
                (0, _) => break,
                (1, Some(y)) => {
                    prev = cur;
                    cur = y;
                    len += 1;
                }
                _ => return vec![usize::MAX], // nested branch
            }
        }
        arms.push(len);
    }
    arms
}

/// Connected-parabolic (affine) test for up to five nodes.
pub fn parabolic_small(d: &CoxeterDiagram, nodes: &[usize]) -> bool {
    let n = nodes.len();
    if n == 2 {
        return matches!(d.edge(nodes[0], nodes[1]), EdgeLabel::Bold);
    }
    if n < 3 || n > 5 {
        return false;
    }
    let mut m = [[2u32; 5]; 5];
    for a in 0..n {
        for b in a + 1..n {
            let c = ecode(d, nodes[a], nodes[b]);
            if c < 2 {
                return false;
            }
            m[a][b] = c;
            m[b][a] = c;
        }
    }
    // delegate the shape work to the catalog module via a scratch diagram
    let mut sub = CoxeterDiagram::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if m[a][b] >= 3 {
                sub.set_angle(a, b, m[a][b]);
            }
        }
    }
    catalog::is_connected_parabolic(&sub)
}

/// Lanner test by definition: connected, every proper subdiagram elliptic,
/// itself neither elliptic nor parabolic. Orders 2 through 5.
pub fn lanner_small(d: &CoxeterDiagram, nodes: &[usize]) -> bool {
    let n = nodes.len();
    match n {
        2 => matches!(d.edge(nodes[0], nodes[1]), EdgeLabel::Dotted(_)),
        3 => {
            let p = ecode(d, nodes[0], nodes[1]);
            let q = ecode(d, nodes[0], nodes[2]);
            let r = ecode(d, nodes[1], nodes[2]);
            if p < 2 || q < 2 || r < 2 {
                return false;
            }
            // connected and 1/p + 1/q + 1/r < 1
            let conn = (p >= 3) as u8 + (q >= 3) as u8 + (r >= 3) as u8 >= 2;
            conn && {
                let (p, q, r) = (p as u64, q as u64, r as u64);
                q * r + p * r + p * q < p * q * r
            }
        }
        4 | 5 => {
            let mut buf = [0usize; 5];
            for drop in 0..n {
                let mut k = 0;
                for (i, &x) in nodes.iter().enumerate() {
                    if i != drop {
                        buf[k] = x;
                        k += 1;
                    }
                }
                if !elliptic_small(d, &buf[..k]) {
                    return false;
                }
            }
            !elliptic_small(d, nodes) && !parabolic_small(d, nodes)
        }
        _ => false,
    }
}

/// Check every subset of `nodes` containing `focus` (all of whose edges
/// are assigned in `d`) against the compactness rules:
/// order 2..5 non-elliptic subsets must contain a face; completed faces
/// must be Lanner; orders 6..9 must not be connected-parabolic.
pub fn subsets_ok(d: &CoxeterDiagram, nodes: &[usize], focus: usize, faces: &[&[usize]]) -> bool {
    let others: Vec<usize> = nodes.iter().copied().filter(|&x| x != focus).collect();
    let mut subset = vec![focus];
    rec_subsets(d, &others, 0, &mut subset, faces)
}

fn rec_subsets(
    d: &CoxeterDiagram,
    others: &[usize],
    start: usize,
    subset: &mut Vec<usize>,
    faces: &[&[usize]],
) -> bool {
    if subset.len() >= 2 && !check_one(d, subset, faces) {
        return false;
    }
    if subset.len() >= 9 {
        return true;
    }
    for i in start..others.len() {
        subset.push(others[i]);
        let ok = rec_subsets(d, others, i + 1, subset, faces);
        subset.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn check_one(d: &CoxeterDiagram, subset: &[usize], faces: &[&[usize]]) -> bool {
    let mut sorted = [0usize; 9];
    let n = subset.len();
    sorted[..n].copy_from_slice(subset);
    sorted[..n].sort_unstable();
    let sorted = &sorted[..n];
    if n <= 5 {
        if elliptic_small(d, sorted) {
            return true;
        }
        if !contains_face(sorted, faces) {
            return false;
        }
        if faces.iter().any(|f| f[..] == sorted[..]) {
            return lanner_small(d, sorted);
        }
        true
    } else {
        !parabolic_6_to_9(d, sorted)
    }
}

fn parabolic_6_to_9(d: &CoxeterDiagram, sorted: &[usize]) -> bool {
    // cheap necessary screens before building the subdiagram: a connected
    // affine diagram here has labels <= 4 and node degrees <= 3
    for (i, &a) in sorted.iter().enumerate() {
        for &b in sorted.iter().skip(i + 1) {
            let c = ecode(d, a, b);
            if c < 2 {
                return false; // bold or dotted: not parabolic at this order
            }
            if c > 4 {
                return false;
            }
        }
    }
    catalog::is_connected_parabolic(&d.subdiagram(sorted))
}

fn contains_face(sorted: &[usize], faces: &[&[usize]]) -> bool {
    faces
        .iter()
        .any(|f| f.iter().all(|x| sorted.binary_search(x).is_ok()))
}

/// Triples containing a newly assigned pair `(v, x)`: non-elliptic triples
/// must lie inside a face.
pub fn pair_triples_ok(
    d: &CoxeterDiagram,
    assigned: &[usize],
    v: usize,
    x: usize,
    faces: &[&[usize]],
) -> bool {
    for &w in assigned {
        if w == v || w == x {
            continue;
        }
        let mut t = [w, x, v];
        t.sort_unstable();
        if elliptic_small(d, &t) {
            continue;
        }
        let inside = faces.iter().any(|f| t.iter().all(|y| f.contains(y)));
        if !inside {
            return false;
        }
    }
    true
}

/// Quadruples containing the pair: same rule. Stronger and a little more
/// expensive, used where branching is wide.
pub fn pair_quads_ok(
    d: &CoxeterDiagram,
    assigned: &[usize],
    v: usize,
    x: usize,
    faces: &[&[usize]],
) -> bool {
    let pool: Vec<usize> = assigned
        .iter()
        .copied()
        .filter(|&w| w != v && w != x)
        .collect();
    for (i, &w1) in pool.iter().enumerate() {
        for &w2 in pool.iter().skip(i + 1) {
            let mut t = [v, x, w1, w2];
            t.sort_unstable();
            if elliptic_small(d, &t) {
                continue;
            }
            let has_face = faces
                .iter()
                .any(|f| f.iter().all(|y| t.contains(y)));
            if has_face {
                continue;
            }
            // non-elliptic, no full face inside: a sub-triple must already
            // have failed unless the obstruction needs all four nodes
            return false;
        }
    }
    true
}

/// Completed disjoint faces must be joined by an edge, else the subdiagram
/// spanned by both is superhyperbolic.
pub fn disjoint_faces_joined(d: &CoxeterDiagram, attached: &[usize], faces: &[&[usize]]) -> bool {
    let complete: Vec<&[usize]> = faces
        .iter()
        .copied()
        .filter(|f| f.iter().all(|x| attached.contains(x)))
        .collect();
    for (i, f) in complete.iter().enumerate() {
        for g in complete.iter().skip(i + 1) {
            if f.iter().any(|x| g.contains(x)) {
                continue;
            }
            let joined = f
                .iter()
                .any(|&a| g.iter().any(|&b| d.edge(a, b).is_edge()));
            if !joined {
                return false;
            }
        }
    }
    true
}

/// Full validation of a completed candidate: exact Lanner set equal to the
/// faces, and no parabolic subdiagram anywhere.
pub fn final_combinatorics_ok(d: &CoxeterDiagram, faces: &[&[usize]]) -> bool {
    let lan = d.lanner_subdiagrams();
    let mut want: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
    want.sort();
    if lan != want {
        return false;
    }
    !d.has_parabolic_subdiagram()
}

/// Can the pair `(i, j)` carry a label >= 6 given the current assignments?
pub fn high_label_possible(
    d: &CoxeterDiagram,
    attached: &[usize],
    i: usize,
    j: usize,
    faces: &[&[usize]],
) -> bool {
    let in_order3 = faces
        .iter()
        .any(|f| f.len() == 3 && f.contains(&i) && f.contains(&j));
    if !in_order3 {
        return false;
    }
    for &w in attached {
        if w == i || w == j {
            continue;
        }
        let adj = d.edge(i, w).angle().map_or(false, |m| m >= 3)
            || d.edge(j, w).angle().map_or(false, |m| m >= 3);
        if adj {
            let mut t = [i, j, w];
            t.sort_unstable();
            if !faces.iter().any(|f| t.iter().all(|x| f.contains(x))) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::catalog::lanner_catalog;

    #[test]
    fn small_classifiers_agree_with_catalog() {
        // exhaustive cross-check on connected order-4 diagrams, labels <= 5
        let pairs = [(0usize, 1usize), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let labels = [2u32, 3, 4, 5];
        let mut assign = [0usize; 6];
        let nodes = [0usize, 1, 2, 3];
        loop {
            let mut d = CoxeterDiagram::new(4);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                d.set_angle(i, j, labels[assign[k]]);
            }
            assert_eq!(
                elliptic_small(&d, &nodes),
                catalog::is_elliptic(&d),
                "{:?}",
                d
            );
            if d.is_connected() {
                assert_eq!(
                    parabolic_small(&d, &nodes),
                    catalog::is_connected_parabolic(&d),
                    "{:?}",
                    d
                );
                assert_eq!(lanner_small(&d, &nodes), catalog::is_lanner(&d), "{:?}", d);
            }
            let mut k = 0;
            loop {
                if k == 6 {
                    return;
                }
                assign[k] += 1;
                if assign[k] < 4 {
                    break;
                }
                assign[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn lanner_small_matches_catalog_lists() {
        for order in [4usize, 5] {
            for d in lanner_catalog(order) {
                let nodes: Vec<usize> = (0..order).collect();
                assert!(lanner_small(d, &nodes));
            }
        }
    }

    #[test]
    fn rejects_stray_lanner_triple() {
        let mut d = CoxeterDiagram::new(4);
        d.set_angle(0, 1, 3);
        d.set_angle(1, 2, 7);
        d.set_angle(2, 3, 7);
        d.set_angle(1, 3, 3);
        let f0: &[usize] = &[0, 1, 2];
        let faces = vec![f0];
        assert!(!subsets_ok(&d, &[0, 1, 2, 3], 3, &faces));
    }

    #[test]
    fn rejects_parabolic() {
        let mut d = CoxeterDiagram::new(3);
        d.set_angle(0, 1, 4);
        d.set_angle(1, 2, 4);
        let faces: Vec<&[usize]> = vec![];
        assert!(!subsets_ok(&d, &[0, 1, 2], 2, &faces));
    }

    #[test]
    fn accepts_face_lanner() {
        let mut d = CoxeterDiagram::new(3);
        d.set_angle(0, 1, 3);
        d.set_angle(1, 2, 7);
        let f0: &[usize] = &[0, 1, 2];
        let faces = vec![f0];
        assert!(subsets_ok(&d, &[0, 1, 2], 2, &faces));
    }

    #[test]
    fn joined_faces() {
        let mut d = CoxeterDiagram::new(4);
        d.set_edge(0, 1, EdgeLabel::Dotted(None));
        d.set_edge(2, 3, EdgeLabel::Dotted(None));
        let f0: &[usize] = &[0, 1];
        let f1: &[usize] = &[2, 3];
        let faces = vec![f0, f1];
        assert!(!disjoint_faces_joined(&d, &[0, 1, 2, 3], &faces));
        d.set_angle(1, 2, 3);
        assert!(disjoint_faces_joined(&d, &[0, 1, 2, 3], &faces));
    }

    #[test]
    fn high_labels_only_inside_order3_faces() {
        let mut d = CoxeterDiagram::new(4);
        d.set_angle(2, 3, 3);
        let f0: &[usize] = &[0, 1, 2];
        let faces = vec![f0];
        assert!(high_label_possible(&d, &[0, 1, 2, 3], 0, 1, &faces));
        d.set_angle(0, 3, 3);
        assert!(!high_label_possible(&d, &[0, 1, 2, 3], 0, 1, &faces));
        assert!(!high_label_possible(&d, &[0, 1, 2, 3], 2, 3, &faces));
    }
}
