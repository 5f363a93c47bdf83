//! Standard two-dimensional Gale diagrams of simple n-polytopes with n+3
//! facets: a regular k-gon (k odd) with positive integer labels summing to
//! n+3, such that the labels in any open half-plane through the origin sum
//! to at least two. For a regular odd k-gon that half-plane condition is
//! the combinatorial statement that every run of (k-1)/2 consecutive labels
//! sums to at least two.

use std::fmt;

use crate::algebra::poly::gcd_u64;

/// Standard Gale diagram: vertices of a regular k-gon with labels, cyclic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardGaleDiagram {
    labels: Vec<u32>,
}

impl fmt::Debug for StandardGaleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gale{:?}", self.labels)
    }
}

impl fmt::Display for StandardGaleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// A missing face: a minimal facet set with empty intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingFace {
    /// Facet indices, sorted.
    pub facets: Vec<usize>,
    /// The arc of Gale vertices generating it (start index, length (k-1)/2).
    pub arc_start: usize,
}

#[derive(Clone, Debug)]
pub struct Violation(pub String);

impl StandardGaleDiagram {
    pub fn new(labels: Vec<u32>) -> Self {
        assert!(labels.len() % 2 == 1, "k must be odd");
        assert!(!labels.is_empty());
        StandardGaleDiagram { labels }
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Number of facets = sum of labels; the polytope dimension is this - 3.
    pub fn facet_count(&self) -> usize {
        self.labels.iter().map(|&x| x as usize).sum()
    }

    pub fn dim(&self) -> usize {
        self.facet_count() - 3
    }

    fn window(&self) -> usize {
        (self.k() - 1) / 2
    }

    /// Sum of `len` consecutive labels starting at `start` (cyclic).
    pub fn arc_sum(&self, start: usize, len: usize) -> u32 {
        (0..len)
            .map(|t| self.labels[(start + t) % self.k()])
            .sum()
    }

    /// Validity for dimension `n`: labels positive, sum `n + 3`, every
    /// (k-1)/2-run sums to at least two. Violations are reported.
    pub fn validate(&self, n: usize) -> Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        if self.labels.iter().any(|&x| x == 0) {
            v.push(Violation("labels must be positive".into()));
        }
        if self.facet_count() != n + 3 {
            v.push(Violation(format!(
                "labels sum to {}, expected n + 3 = {}",
                self.facet_count(),
                n + 3
            )));
        }
        let w = self.window();
        for s in 0..self.k() {
            if self.arc_sum(s, w) < 2 {
                v.push(Violation(format!(
                    "open half-plane at arc {} holds label sum {} < 2",
                    s,
                    self.arc_sum(s, w)
                )));
            }
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        self.validate(n).is_ok()
    }

    /// Facet index range of Gale vertex `i`: vertex `i` with label `mu_i`
    /// expands to the consecutive facets `offset .. offset + mu_i`.
    pub fn facets_of_vertex(&self, i: usize) -> std::ops::Range<usize> {
        let offset: usize = self.labels[..i].iter().map(|&x| x as usize).sum();
        offset..offset + self.labels[i] as usize
    }

    /// Gale vertex owning facet `f`.
    pub fn vertex_of_facet(&self, f: usize) -> usize {
        let mut acc = 0usize;
        for (i, &l) in self.labels.iter().enumerate() {
            acc += l as usize;
            if f < acc {
                return i;
            }
        }
        panic!("facet index out of range");
    }

    /// The k missing faces, one per arc of (k-1)/2 consecutive vertices.
    pub fn missing_faces(&self) -> Vec<MissingFace> {
        let w = self.window();
        (0..self.k())
            .map(|s| {
                let mut facets = Vec::new();
                for t in 0..w {
                    facets.extend(self.facets_of_vertex((s + t) % self.k()));
                }
                facets.sort_unstable();
                MissingFace {
                    facets,
                    arc_start: s,
                }
            })
            .collect()
    }

    /// Face test: the facets indexed by `J` intersect in a face iff the
    /// origin lies in the interior of the hull of the Gale vertices that
    /// keep at least one facet outside `J`.
    pub fn face_test(&self, j: &[usize]) -> bool {
        let k = self.k();
        let mut remaining = vec![0u32; k];
        for (i, &l) in self.labels.iter().enumerate() {
            remaining[i] = l;
        }
        for &f in j {
            let v = self.vertex_of_facet(f);
            assert!(remaining[v] > 0, "facet listed twice");
            remaining[v] -= 1;
        }
        let present: Vec<usize> = (0..k).filter(|&i| remaining[i] > 0).collect();
        origin_interior_to_hull(k, &present)
    }

    /// Congruence: equal label sequences up to rotation and reflection.
    pub fn congruent(&self, other: &StandardGaleDiagram) -> bool {
        if self.k() != other.k() {
            return false;
        }
        let k = self.k();
        for r in 0..k {
            if (0..k).all(|i| self.labels[i] == other.labels[(i + r) % k]) {
                return true;
            }
            if (0..k).all(|i| self.labels[i] == other.labels[(k + r - i) % k]) {
                return true;
            }
        }
        false
    }

    /// Canonical label sequence under rotation and reflection.
    pub fn canonical_labels(&self) -> Vec<u32> {
        let k = self.k();
        let mut best: Option<Vec<u32>> = None;
        for r in 0..k {
            let a: Vec<u32> = (0..k).map(|i| self.labels[(i + r) % k]).collect();
            let b: Vec<u32> = (0..k).map(|i| self.labels[(k + r - i) % k]).collect();
            for c in [a, b] {
                if best.as_ref().map_or(true, |x| c < *x) {
                    best = Some(c);
                }
            }
        }
        best.unwrap()
    }
}

/// Is the origin interior to the convex hull of the given vertices of a
/// regular k-gon? Combinatorial: every open half-plane through the origin
/// must contain one of them, i.e. every cyclic gap between consecutive
/// present vertices spans less than half the circle. For odd k, "less than
/// half" is the strict count `(k-1)/2` of missing steps.
fn origin_interior_to_hull(k: usize, present: &[usize]) -> bool {
    if present.is_empty() {
        return false;
    }
    if present.len() == 1 {
        return false;
    }
    // gaps between consecutive present vertices (cyclic), in steps
    let mut max_gap = 0usize;
    for (idx, &v) in present.iter().enumerate() {
        let next = present[(idx + 1) % present.len()];
        let gap = (next + k - v) % k;
        max_gap = max_gap.max(if idx + 1 == present.len() { gap } else { gap });
    }
    // A gap of g steps leaves an open half-plane empty iff g > k/2; for odd
    // k that is g >= (k+1)/2.
    max_gap < (k + 1) / 2
}

/// All admissible Gale diagrams for dimension `n`, up to congruence:
/// valid diagrams whose arcs sum to at most five (Lanner order cap), that
/// moreover are a triangle with a 2-label or a pentagon with two adjacent
/// 1-labels (existence of a missing face of order two).
pub fn enumerate_admissible(n: usize) -> Vec<StandardGaleDiagram> {
    assert!(n >= 4, "admissible Gale diagrams start at dimension 4");
    let mut out: Vec<StandardGaleDiagram> = Vec::new();
    let mut push = |g: StandardGaleDiagram| {
        if !out.iter().any(|h| h.congruent(&g)) {
            out.push(g);
        }
    };
    let total = (n + 3) as u32;
    // k = 3: each label is an arc of length 1: labels in [2, 5], one equal 2
    for a in 2..=5u32 {
        for b in a..=5u32 {
            if a + b >= total {
                continue;
            }
            let c = total - a - b;
            if c < b || c > 5 {
                continue;
            }
            if a != 2 {
                continue;
            }
            let g = StandardGaleDiagram::new(vec![a, b, c]);
            if g.is_valid(n) {
                push(g);
            }
        }
    }
    // k = 5: positive labels, adjacent pairs sum <= 5, two adjacent 1s
    let mut labels = vec![0u32; 5];
    fn rec(
        labels: &mut Vec<u32>,
        pos: usize,
        left: u32,
        n: usize,
        push: &mut dyn FnMut(StandardGaleDiagram),
    ) {
        if pos == 5 {
            if left != 0 {
                return;
            }
            let g = StandardGaleDiagram::new(labels.clone());
            // adjacent pair sums within [2, 5]
            if (0..5).any(|s| g.arc_sum(s, 2) > 5) {
                return;
            }
            // a missing face of order two: two adjacent 1-labels
            if !(0..5).any(|s| g.arc_sum(s, 2) == 2) {
                return;
            }
            if g.is_valid(n) {
                push(g);
            }
            return;
        }
        for v in 1..=left.saturating_sub((4 - pos) as u32) {
            labels[pos] = v;
            rec(labels, pos + 1, left - v, n, push);
        }
    }
    rec(&mut labels, 0, total, n, &mut push);
    // larger odd k cannot satisfy both the order-2 face and the arc cap
    out.sort_by_key(|g| (g.k(), g.canonical_labels()));
    out
}

/// Published identifiers G1..G20 for the admissible diagrams of dimensions
/// 4 to 7, pinned by the arcs each diagram is dissected along. Returns the
/// 1-based id.
pub fn gale_id(g: &StandardGaleDiagram) -> Option<usize> {
    for (id, labels) in GALE_ID_TABLE.iter().enumerate() {
        let other = StandardGaleDiagram::new(labels.to_vec());
        if g.congruent(&other) {
            return Some(id + 1);
        }
    }
    None
}

pub fn gale_by_id(id: usize) -> Option<StandardGaleDiagram> {
    GALE_ID_TABLE
        .get(id - 1)
        .map(|l| StandardGaleDiagram::new(l.to_vec()))
}

/// Label sequences for G1..G20. Triangles precede pentagons inside each
/// dimension; the per-diagram identification is fixed by the arcs used to
/// dissect each of them (e.g. the 7-polytope pentagon holding the arc
/// (3,2,3) is G20, the 6-polytope pentagon holding (2,3,2) is G14).
const GALE_ID_TABLE: [&[u32]; 20] = [
    // n = 4
    &[2, 2, 3],          // G1: triangle, faces 2,2,3
    &[1, 1, 1, 1, 3],    // G2: twice truncated 4-simplex, arc (1,3,1)
    &[1, 1, 1, 2, 2],    // G3
    &[1, 1, 2, 1, 2],    // G4
    // n = 5
    &[2, 2, 4],          // G5: triangle, order-4 face
    &[2, 3, 3],          // G6: triangle, two order-3 faces
    &[1, 1, 2, 1, 3],    // G7: pentagon with arc (1,3,1)
    &[1, 1, 1, 2, 3],    // G8: pentagon with arc (2,3,1)
    &[1, 1, 1, 1, 4],    // G9: twice truncated 5-simplex, arc (1,4,1)
    &[1, 1, 2, 2, 2],    // G10: pentagon with arc (2,2,2)
    // n = 6
    &[2, 2, 5],          // G11: triangle with an order-5 face
    &[2, 3, 4],          // G12: triangle, killed by the (3,4) arc
    &[1, 1, 2, 1, 4],    // G13: pentagon with arc (1,4,1)
    &[1, 1, 2, 3, 2],    // G14: pentagon with arc (2,3,2)
    &[1, 1, 2, 2, 3],    // G15: pentagon with arc (3,2,2)
    &[1, 1, 3, 1, 3],    // G16: pentagon with arc (3,1,3)
    // n = 7
    &[2, 4, 4],          // G17: triangle, killed by the (4,4) arc
    &[2, 3, 5],          // G18: triangle, killed by the (5,3) arc
    &[1, 1, 3, 1, 4],    // G19: pentagon with arc (3,1,4,1)
    &[1, 1, 3, 2, 3],    // G20: pentagon with arc (3,2,3)
];

/// Parse `gale <name> k=<k> labels=<l1,...,lk> dim=<n>`.
pub fn parse_gale(line: &str) -> Result<(String, StandardGaleDiagram, usize), String> {
    let mut name = None;
    let mut k = None;
    let mut labels: Option<Vec<u32>> = None;
    let mut dim = None;
    let mut words = line.split_whitespace();
    match words.next() {
        Some("gale") => {}
        _ => return Err("expected 'gale'".into()),
    }
    for w in words {
        if let Some(v) = w.strip_prefix("k=") {
            k = Some(v.parse::<usize>().map_err(|_| "bad k")?);
        } else if let Some(v) = w.strip_prefix("labels=") {
            let l: Result<Vec<u32>, _> = v.split(',').map(|x| x.parse::<u32>()).collect();
            labels = Some(l.map_err(|_| "bad labels")?);
        } else if let Some(v) = w.strip_prefix("dim=") {
            dim = Some(v.parse::<usize>().map_err(|_| "bad dim")?);
        } else if name.is_none() {
            name = Some(w.to_string());
        } else {
            return Err(format!("unexpected token '{}'", w));
        }
    }
    let labels = labels.ok_or("missing labels=")?;
    if let Some(kk) = k {
        if kk != labels.len() {
            return Err("k does not match label count".into());
        }
    }
    let g = StandardGaleDiagram::new(labels);
    let dim = dim.unwrap_or_else(|| g.dim());
    Ok((name.unwrap_or_default(), g, dim))
}

pub fn write_gale(name: &str, g: &StandardGaleDiagram) -> String {
    let labels: Vec<String> = g.labels().iter().map(|x| x.to_string()).collect();
    format!(
        "gale {} k={} labels={} dim={}",
        name,
        g.k(),
        labels.join(","),
        g.dim()
    )
}

#[allow(dead_code)]
fn unused_gcd_guard() {
    let _ = gcd_u64(1, 1);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(labels: &[u32]) -> StandardGaleDiagram {
        StandardGaleDiagram::new(labels.to_vec())
    }

    #[test]
    fn validation() {
        assert!(g(&[1, 1, 2, 1, 2]).is_valid(4));
        assert!(!g(&[1, 1, 5]).is_valid(4)); // single vertex labeled 1 separable
        assert!(g(&[3, 2, 2]).is_valid(4));
        assert!(!g(&[3, 2, 2]).is_valid(5)); // wrong sum
    }

    #[test]
    fn missing_faces_of_example_pentagon() {
        // (1,1,2,1,2): five faces of sizes (2,3,3,3,3)
        let gd = g(&[1, 1, 2, 1, 2]);
        let mf = gd.missing_faces();
        assert_eq!(mf.len(), 5);
        let mut sizes: Vec<usize> = mf.iter().map(|f| f.facets.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3, 3, 3, 3]);
        // faces are exactly the arc expansions
        assert!(mf.iter().any(|f| f.facets == vec![0, 1]));
        assert!(mf.iter().any(|f| f.facets == vec![1, 2, 3]));
    }

    #[test]
    fn missing_faces_of_triangle() {
        let gd = g(&[3, 2, 2]);
        let mf = gd.missing_faces();
        assert_eq!(mf.len(), 3);
        let sizes: Vec<usize> = mf.iter().map(|f| f.facets.len()).collect();
        assert_eq!(sizes, vec![3, 2, 2]);
        assert_eq!(mf[0].facets, vec![0, 1, 2]);
    }

    #[test]
    fn missing_faces_of_1311() {
        // (1,3,1,1,1): sizes 4,4,2,2,2
        let gd = g(&[1, 3, 1, 1, 1]);
        let mut sizes: Vec<usize> = gd
            .missing_faces()
            .iter()
            .map(|f| f.facets.len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 4, 4]);
    }

    #[test]
    fn face_test_basics() {
        let gd = g(&[1, 1, 2, 1, 2]);
        assert!(gd.face_test(&[])); // the polytope itself
        for mf in gd.missing_faces() {
            assert!(!gd.face_test(&mf.facets), "missing face {:?}", mf.facets);
            // any proper subset intersects
            for drop in &mf.facets {
                let sub: Vec<usize> = mf
                    .facets
                    .iter()
                    .copied()
                    .filter(|f| f != drop)
                    .collect();
                assert!(gd.face_test(&sub), "proper subset {:?}", sub);
            }
        }
    }

    #[test]
    fn missing_faces_are_exactly_minimal_face_test_failures() {
        // brute force over all facet subsets for a pentagon and a triangle
        for gd in [g(&[1, 1, 2, 1, 2]), g(&[3, 2, 2]), g(&[1, 1, 2, 2, 2])] {
            let nf = gd.facet_count();
            let faces = gd.missing_faces();
            for mask in 1u32..(1 << nf) {
                let j: Vec<usize> = (0..nf).filter(|&f| mask & (1 << f) != 0).collect();
                let fails = !gd.face_test(&j);
                let minimal_fail = fails
                    && j.iter().all(|drop| {
                        let sub: Vec<usize> =
                            j.iter().copied().filter(|f| f != drop).collect();
                        gd.face_test(&sub)
                    });
                let is_missing = faces.iter().any(|mf| mf.facets == j);
                assert_eq!(minimal_fail, is_missing, "J = {:?}", j);
            }
        }
    }

    #[test]
    fn congruence() {
        assert!(g(&[1, 1, 2, 1, 2]).congruent(&g(&[2, 1, 2, 1, 1])));
        assert!(g(&[3, 2, 2]).congruent(&g(&[2, 2, 3])));
        assert!(!g(&[1, 1, 2, 1, 2]).congruent(&g(&[1, 1, 1, 2, 2])));
        // explicit dihedral check for the spec's third example
        assert_eq!(
            g(&[1, 1, 2, 1, 2]).congruent(&g(&[1, 2, 1, 2, 1])),
            (0..5).any(|r| {
                let a = [1, 1, 2, 1, 2];
                let b = [1u32, 2, 1, 2, 1];
                (0..5).all(|i| a[i] == b[(i + r) % 5])
                    || (0..5).all(|i| a[i] == b[(5 + r - i) % 5])
            })
        );
    }

    #[test]
    fn admissible_counts() {
        assert_eq!(enumerate_admissible(4).len(), 4);
        assert_eq!(enumerate_admissible(5).len(), 6);
        assert_eq!(enumerate_admissible(6).len(), 6);
        assert_eq!(enumerate_admissible(7).len(), 4);
    }

    #[test]
    fn admissible_are_valid_and_distinct() {
        for n in 4..=7 {
            let gs = enumerate_admissible(n);
            for (i, a) in gs.iter().enumerate() {
                assert!(a.is_valid(n));
                for b in gs.iter().skip(i + 1) {
                    assert!(!a.congruent(b));
                }
            }
        }
    }

    #[test]
    fn ids_cover_the_admissible_sets() {
        let mut expect_id = 1;
        for n in 4..=7 {
            let gs = enumerate_admissible(n);
            let mut ids: Vec<usize> = gs.iter().map(|g| gale_id(g).unwrap()).collect();
            ids.sort_unstable();
            let lo = expect_id;
            let hi = expect_id + gs.len() - 1;
            assert_eq!(ids, (lo..=hi).collect::<Vec<_>>(), "dimension {}", n);
            expect_id = hi + 1;
        }
        assert_eq!(expect_id, 21);
        // arc anchors that pin specific ids
        assert_eq!(gale_id(&g(&[1, 1, 2, 3, 2])), Some(14));
        assert_eq!(gale_id(&g(&[1, 1, 3, 2, 3])), Some(20));
        assert_eq!(gale_id(&g(&[1, 1, 1, 1, 4])), Some(9));
        assert_eq!(gale_id(&g(&[2, 2, 2, 1, 1])), Some(10));
    }

    #[test]
    fn parse_and_write() {
        let (name, gd, dim) = parse_gale("gale g14 k=5 labels=1,1,2,3,2 dim=6").unwrap();
        assert_eq!(name, "g14");
        assert_eq!(gd.labels(), &[1, 1, 2, 3, 2]);
        assert_eq!(dim, 6);
        let s = write_gale("g14", &gd);
        let (n2, g2, d2) = parse_gale(&s).unwrap();
        assert_eq!(n2, "g14");
        assert!(g2.congruent(&gd));
        assert_eq!(d2, 6);
        assert!(parse_gale("gale x k=3 labels=1,1").is_err());
    }
}
