//! Coxeter diagrams: weighted graphs encoding Gram matrices of facet
//! normals. Diagonal entries are 1; an edge of multiplicity `m - 2`
//! contributes `-cos(pi/m)`, a bold edge `-1`, a dotted edge `-w` with
//! `w > 1` (the weight may be left unknown while searching).

pub mod canon;
pub mod catalog;
pub mod parse;

use std::fmt;

use crate::algebra::cyclotomic::{CycReal, FracCyc};
use crate::algebra::rational::Rat;
use crate::algebra::real::AlgebraicReal;
use crate::algebra::scalar::{det_subset_expansion, symmetric_signature};
use crate::algebra::tower::Tw;

#[derive(Clone, Debug)]
pub enum EdgeLabel {
    /// `m = 2`: no edge drawn, weight 0.
    Orthogonal,
    /// `m >= 3`: weight `cos(pi/m)`.
    Angle(u32),
    /// Parallel facets, weight 1.
    Bold,
    /// Diverging facets, weight > 1 (possibly not yet determined).
    Dotted(Option<Tw>),
}

impl EdgeLabel {
    pub fn is_orthogonal(&self) -> bool {
        matches!(self, EdgeLabel::Orthogonal)
    }

    pub fn is_dotted(&self) -> bool {
        matches!(self, EdgeLabel::Dotted(_))
    }

    /// Edges that join nodes (everything except Orthogonal).
    pub fn is_edge(&self) -> bool {
        !self.is_orthogonal()
    }

    pub fn angle(&self) -> Option<u32> {
        match self {
            EdgeLabel::Orthogonal => Some(2),
            EdgeLabel::Angle(m) => Some(*m),
            _ => None,
        }
    }

    /// Structural code for canonical forms: dotted weights are erased
    /// (they are compared separately).
    pub fn code(&self) -> u32 {
        match self {
            EdgeLabel::Orthogonal => 0,
            EdgeLabel::Bold => 1,
            EdgeLabel::Dotted(_) => 2,
            EdgeLabel::Angle(m) => *m,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_plus, self.n_minus, self.n_zero)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagramClass {
    Elliptic,
    Parabolic,
    Lanner,
    Hyperbolic,
    Superhyperbolic,
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagramClass::Elliptic => "elliptic",
            DiagramClass::Parabolic => "parabolic",
            DiagramClass::Lanner => "Lanner",
            DiagramClass::Hyperbolic => "hyperbolic",
            DiagramClass::Superhyperbolic => "superhyperbolic",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    /// An operation needing exact weights met an unknown dotted weight.
    SymbolicDiagram,
    /// `det(Sigma \ T) = 0` in a local determinant.
    SingularComplement,
    BadArgument(String),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::SymbolicDiagram => {
                write!(f, "diagram has a dotted edge with unknown weight")
            }
            DiagramError::SingularComplement => {
                write!(f, "local determinant undefined: det(Sigma \\ T) = 0")
            }
            DiagramError::BadArgument(s) => write!(f, "{}", s),
        }
    }
}

impl std::error::Error for DiagramError {}

/// Coxeter diagram on nodes `0..order`, edges stored upper-triangular.
#[derive(Clone)]
pub struct CoxeterDiagram {
    order: usize,
    names: Vec<Option<String>>,
    edges: Vec<EdgeLabel>,
}

impl fmt::Debug for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterDiagram(order {}", self.order)?;
        for i in 0..self.order {
            for j in i + 1..self.order {
                match self.edge(i, j) {
                    EdgeLabel::Orthogonal => {}
                    EdgeLabel::Angle(m) => write!(f, ", {}-{}:{}", i, j, m)?,
                    EdgeLabel::Bold => write!(f, ", {}-{}:bold", i, j)?,
                    EdgeLabel::Dotted(_) => write!(f, ", {}-{}:dotted", i, j)?,
                }
            }
        }
        write!(f, ")")
    }
}

fn tri_index(order: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < order);
    // index into the flattened strict upper triangle
    i * order - i * (i + 1) / 2 + (j - i - 1)
}

impl CoxeterDiagram {
    pub fn new(order: usize) -> Self {
        CoxeterDiagram {
            order,
            names: vec![None; order],
            edges: vec![EdgeLabel::Orthogonal; order * order.saturating_sub(1) / 2],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self, i: usize) -> Option<&str> {
        self.names[i].as_deref()
    }

    pub fn set_name(&mut self, i: usize, name: impl Into<String>) {
        self.names[i] = Some(name.into());
    }

    pub fn edge(&self, i: usize, j: usize) -> &EdgeLabel {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        &self.edges[tri_index(self.order, i, j)]
    }

    pub fn set_edge(&mut self, i: usize, j: usize, label: EdgeLabel) {
        assert!(i != j, "no self-loops");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.edges[tri_index(self.order, i, j)] = label;
    }

    /// Convenience: set an angle edge `[i, j] = m` (m = 2 clears the edge).
    pub fn set_angle(&mut self, i: usize, j: usize, m: u32) {
        assert!(m >= 2);
        if m == 2 {
            self.set_edge(i, j, EdgeLabel::Orthogonal);
        } else {
            self.set_edge(i, j, EdgeLabel::Angle(m));
        }
    }

    /// Every dotted edge carries a weight.
    pub fn is_concrete(&self) -> bool {
        !self
            .edges
            .iter()
            .any(|e| matches!(e, EdgeLabel::Dotted(None)))
    }

    pub fn has_dotted(&self) -> bool {
        self.edges.iter().any(|e| e.is_dotted())
    }

    /// Induced subdiagram on the given nodes, in the given order.
    pub fn subdiagram(&self, nodes: &[usize]) -> CoxeterDiagram {
        let mut d = CoxeterDiagram::new(nodes.len());
        for (a, &i) in nodes.iter().enumerate() {
            if let Some(n) = &self.names[i] {
                d.names[a] = Some(n.clone());
            }
            for (b, &j) in nodes.iter().enumerate().skip(a + 1) {
                d.set_edge(a, b, self.edge(i, j).clone());
            }
        }
        d
    }

    pub fn permuted(&self, perm: &[usize]) -> CoxeterDiagram {
        // node i of the result is node perm[i] of self
        self.subdiagram(perm)
    }

    /// Add one node, returning its index.
    pub fn extended(&self) -> (CoxeterDiagram, usize) {
        let mut d = CoxeterDiagram::new(self.order + 1);
        for i in 0..self.order {
            d.names[i] = self.names[i].clone();
            for j in i + 1..self.order {
                d.set_edge(i, j, self.edge(i, j).clone());
            }
        }
        (d, self.order)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&j| j != i && self.edge(i, j).is_edge())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in 0..self.order {
                if j != i && !seen[j] && self.edge(i, j).is_edge() {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == self.order
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for j in 0..self.order {
                    if !seen[j] && j != i && self.edge(i, j).is_edge() {
                        seen[j] = true;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    // -- exact matrix operations ---------------------------------------------

    /// Gram matrix entry `(i, j)` as a tower value.
    fn gram_entry_tw(&self, i: usize, j: usize) -> Result<Tw, DiagramError> {
        if i == j {
            return Ok(Tw::one());
        }
        Ok(match self.edge(i, j) {
            EdgeLabel::Orthogonal => Tw::zero(),
            EdgeLabel::Angle(m) => Tw::from_cyc(CycReal::cos_pi_over(*m as u64)).neg(),
            EdgeLabel::Bold => Tw::from_rat(Rat::from_integer((-1).into())),
            EdgeLabel::Dotted(Some(w)) => w.neg(),
            EdgeLabel::Dotted(None) => return Err(DiagramError::SymbolicDiagram),
        })
    }

    pub fn gram_tw(&self) -> Result<Vec<Vec<Tw>>, DiagramError> {
        let n = self.order;
        let mut m = vec![vec![Tw::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = self.gram_entry_tw(i, j)?;
            }
        }
        Ok(m)
    }

    /// Gram matrix over cyclotomic fractions; only for diagrams whose
    /// edges are all angles or bold (no dotted weights).
    pub fn gram_cyc(&self) -> Option<Vec<Vec<FracCyc>>> {
        let n = self.order;
        let mut m = vec![vec![FracCyc::zero(); n]; n];
        for i in 0..n {
            m[i][i] = FracCyc::one();
            for j in i + 1..n {
                let v = match self.edge(i, j) {
                    EdgeLabel::Orthogonal => FracCyc::zero(),
                    EdgeLabel::Angle(k) => {
                        FracCyc::from_cyc(CycReal::cos_pi_over(*k as u64).neg())
                    }
                    EdgeLabel::Bold => FracCyc::from_rat(Rat::from_integer((-1).into())),
                    EdgeLabel::Dotted(_) => return None,
                };
                m[i][j] = v.clone();
                m[j][i] = v;
            }
        }
        Some(m)
    }

    /// Gram matrix over exact algebraic reals.
    pub fn gram_matrix(&self) -> Result<Vec<Vec<AlgebraicReal>>, DiagramError> {
        let tw = self.gram_tw()?;
        Ok(tw
            .iter()
            .map(|row| row.iter().map(|e| e.to_algebraic()).collect())
            .collect())
    }

    pub fn determinant_tw(&self) -> Result<Tw, DiagramError> {
        if let Some(m) = self.gram_cyc() {
            return Ok(Tw::from_frac(det_subset_expansion(&m)));
        }
        Ok(det_subset_expansion(&self.gram_tw()?))
    }

    pub fn determinant(&self) -> Result<AlgebraicReal, DiagramError> {
        Ok(self.determinant_tw()?.to_algebraic())
    }

    pub fn signature(&self) -> Result<Signature, DiagramError> {
        let (np, nm, nz) = if let Some(m) = self.gram_cyc() {
            symmetric_signature(&m)
        } else {
            symmetric_signature(&self.gram_tw()?)
        };
        Ok(Signature {
            n_plus: np,
            n_minus: nm,
            n_zero: nz,
        })
    }

    // -- classification -------------------------------------------------------

    /// Classify a concrete diagram. For diagrams made of angles only this is
    /// combinatorial; dotted or bold content short-circuits ellipticity.
    pub fn classify(&self) -> Result<DiagramClass, DiagramError> {
        if catalog::is_elliptic(self) {
            return Ok(DiagramClass::Elliptic);
        }
        let all_proper_elliptic = self.all_proper_subdiagrams_elliptic();
        if all_proper_elliptic {
            // distinguish parabolic from Lanner
            if self.order == 2 {
                return Ok(match self.edge(0, 1) {
                    EdgeLabel::Bold => DiagramClass::Parabolic,
                    EdgeLabel::Dotted(_) => DiagramClass::Lanner,
                    _ => unreachable!("non-elliptic order-2 diagram"),
                });
            }
            let sig = self.signature()?;
            if sig.n_minus == 0 {
                return Ok(DiagramClass::Parabolic);
            }
            return Ok(DiagramClass::Lanner);
        }
        let sig = self.signature()?;
        if sig.n_minus >= 2 {
            return Ok(DiagramClass::Superhyperbolic);
        }
        if sig.n_minus == 0 {
            // degenerate positive semidefinite but some proper subdiagram
            // non-elliptic: matrix-parabolic territory
            return Ok(DiagramClass::Parabolic);
        }
        Ok(DiagramClass::Hyperbolic)
    }

    fn all_proper_subdiagrams_elliptic(&self) -> bool {
        // enough to remove one node at a time
        (0..self.order).all(|drop| {
            let nodes: Vec<usize> = (0..self.order).filter(|&i| i != drop).collect();
            catalog::is_elliptic(&self.subdiagram(&nodes))
        })
    }

    /// Is the induced subdiagram on `nodes` a Lanner diagram?
    /// Dotted edges are admitted symbolically (a dotted pair is the order-2
    /// Lanner diagram).
    pub fn is_lanner_subset(&self, nodes: &[usize]) -> bool {
        catalog::is_lanner(&self.subdiagram(nodes))
    }

    /// All Lanner subdiagrams (node sets, sorted), orders 2 to 5.
    pub fn lanner_subdiagrams(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let n = self.order;
        let mut subset = Vec::new();
        fn rec(
            d: &CoxeterDiagram,
            start: usize,
            subset: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if subset.len() >= 2 && d.is_lanner_subset(subset) {
                out.push(subset.clone());
                // supersets of a Lanner diagram are never Lanner, but they
                // must still be enumerated for other branches, so no pruning
            }
            if subset.len() == 5 {
                return;
            }
            for i in start..d.order() {
                subset.push(i);
                rec(d, i + 1, subset, out);
                subset.pop();
            }
        }
        rec(self, 0, &mut subset, &mut out);
        let _ = n;
        out.sort();
        out
    }

    /// Does any subdiagram contain a (connected) parabolic diagram?
    /// Compactness forbids these.
    pub fn has_parabolic_subdiagram(&self) -> bool {
        self.any_subset_matches(&mut |sub| catalog::is_connected_parabolic(sub))
    }

    fn any_subset_matches(&self, pred: &mut dyn FnMut(&CoxeterDiagram) -> bool) -> bool {
        let n = self.order;
        let mut subset = Vec::new();
        fn rec(
            d: &CoxeterDiagram,
            start: usize,
            subset: &mut Vec<usize>,
            pred: &mut dyn FnMut(&CoxeterDiagram) -> bool,
        ) -> bool {
            if subset.len() >= 2 && pred(&d.subdiagram(subset)) {
                return true;
            }
            if subset.len() >= d.order() {
                return false;
            }
            for i in start..d.order() {
                subset.push(i);
                if rec(d, i + 1, subset, pred) {
                    return true;
                }
                subset.pop();
            }
            false
        }
        let r = rec(self, 0, &mut subset, pred);
        let _ = n;
        r
    }

    /// Matrix-sense parabolic: every indecomposable component is positive
    /// semidefinite and degenerate, i.e. every component is an affine diagram.
    pub fn is_matrix_parabolic(&self) -> bool {
        let comps = self.components();
        !comps.is_empty()
            && comps
                .iter()
                .all(|c| catalog::is_connected_parabolic(&self.subdiagram(c)))
    }

    // -- local determinants ---------------------------------------------------

    pub fn local_det_tw(&self, t_nodes: &[usize]) -> Result<Tw, DiagramError> {
        let rest: Vec<usize> = (0..self.order).filter(|i| !t_nodes.contains(i)).collect();
        let denom = self.subdiagram(&rest).determinant_tw()?;
        if denom.is_zero() {
            return Err(DiagramError::SingularComplement);
        }
        let num = self.determinant_tw()?;
        Ok(num.div(&denom))
    }

    pub fn local_det(&self, t_nodes: &[usize]) -> Result<AlgebraicReal, DiagramError> {
        Ok(self.local_det_tw(t_nodes)?.to_algebraic())
    }
}

/// The order-3 Lanner triangle `L_{p,q,r}`: nodes 0, 1, 2 with
/// `[0,1] = p`, `[0,2] = q`, `[1,2] = r` (node 0 is the vertex `v`
/// outside the `r`-edge).
pub fn lanner_triangle(p: u32, q: u32, r: u32) -> CoxeterDiagram {
    let mut d = CoxeterDiagram::new(3);
    d.set_angle(0, 1, p);
    d.set_angle(0, 2, q);
    d.set_angle(1, 2, r);
    d
}

/// `D(p, q, r) = 1 - (cos^2(pi/p) + cos^2(pi/q) + 2 cos(pi/p) cos(pi/q)
/// cos(pi/r)) / sin^2(pi/r)` as an exact fraction. Requires `r >= 3`.
pub fn d_pqr_frac(p: u32, q: u32, r: u32) -> Result<FracCyc, DiagramError> {
    if r < 3 {
        return Err(DiagramError::BadArgument(
            "D(p, q, r) needs r >= 3".into(),
        ));
    }
    if p < 2 || q < 2 {
        return Err(DiagramError::BadArgument(
            "D(p, q, r) needs p, q >= 2".into(),
        ));
    }
    let cp = CycReal::cos_pi_over(p as u64);
    let cq = CycReal::cos_pi_over(q as u64);
    let cr = CycReal::cos_pi_over(r as u64);
    let num = cp
        .square()
        .add(&cq.square())
        .add(&cp.mul(&cq).mul(&cr).mul_rat(&Rat::from_integer(2.into())));
    let sin2 = CycReal::one().sub(&cr.square());
    let frac = FracCyc { num, den: sin2 };
    Ok(FracCyc::one().sub(&frac))
}

pub fn d_pqr(p: u32, q: u32, r: u32) -> Result<AlgebraicReal, DiagramError> {
    let f = d_pqr_frac(p, q, r)?;
    Ok(Tw::from_frac(f).to_algebraic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::RatExt;

    fn path(labels: &[u32]) -> CoxeterDiagram {
        let mut d = CoxeterDiagram::new(labels.len() + 1);
        for (i, &m) in labels.iter().enumerate() {
            d.set_angle(i, i + 1, m);
        }
        d
    }

    #[test]
    fn gram_and_det_basics() {
        // single node
        let d = CoxeterDiagram::new(1);
        assert!(d.determinant().unwrap().equals(&AlgebraicReal::one()));
        assert_eq!(
            d.signature().unwrap(),
            Signature { n_plus: 1, n_minus: 0, n_zero: 0 }
        );
        // two nodes, Angle(m): [[1, -c], [-c, 1]]
        let d = path(&[5]);
        let g = d.gram_matrix().unwrap();
        assert!(g[0][1].equals(&AlgebraicReal::cos_pi_over(5).unwrap().neg()));
        // bold edge: det 0, signature (1,0,1)
        let mut d = CoxeterDiagram::new(2);
        d.set_edge(0, 1, EdgeLabel::Bold);
        assert_eq!(d.determinant().unwrap().sign(), 0);
        assert_eq!(
            d.signature().unwrap(),
            Signature { n_plus: 1, n_minus: 0, n_zero: 1 }
        );
        // dotted weight 2: [[1, -2], [-2, 1]]
        let mut d = CoxeterDiagram::new(2);
        d.set_edge(
            0,
            1,
            EdgeLabel::Dotted(Some(Tw::from_rat(Rat::from_int(2)))),
        );
        let g = d.gram_matrix().unwrap();
        assert!(g[0][1].equals(&AlgebraicReal::from_int(-2)));
        // det = 1 - 4 = -3
        assert!(d
            .determinant()
            .unwrap()
            .equals(&AlgebraicReal::from_int(-3)));
        // symbolic dotted: gram fails
        let mut d = CoxeterDiagram::new(2);
        d.set_edge(0, 1, EdgeLabel::Dotted(None));
        assert!(matches!(
            d.determinant(),
            Err(DiagramError::SymbolicDiagram)
        ));
    }

    #[test]
    fn det_237_triangle() {
        // triangle (2,3,7): det = 3/4 - cos^2(pi/7) < 0
        let d = lanner_triangle(2, 3, 7);
        let det = d.determinant().unwrap();
        let expect = AlgebraicReal::from_rational(Rat::from_pair(3, 4))
            .sub(&AlgebraicReal::cos_pi_over(7).unwrap().square());
        assert!(det.equals(&expect));
        assert_eq!(det.sign(), -1);
    }

    #[test]
    fn signature_h4() {
        // H4: path (5,3,3) is elliptic
        let d = path(&[5, 3, 3]);
        assert_eq!(
            d.signature().unwrap(),
            Signature { n_plus: 4, n_minus: 0, n_zero: 0 }
        );
    }

    #[test]
    fn d_pqr_values() {
        // D(2,4,5) = -1/sqrt(5)
        let v = d_pqr(2, 4, 5).unwrap();
        let s5 = AlgebraicReal::from_int(5).sqrt_nonneg().unwrap();
        let expect = AlgebraicReal::one().neg().div(&s5).unwrap();
        assert!(v.equals(&expect));
        // D(2,4,6) = -1
        assert!(d_pqr(2, 4, 6)
            .unwrap()
            .equals(&AlgebraicReal::from_int(-1)));
        // D(3,4,3) = -sqrt(2)/3
        let v = d_pqr(3, 4, 3).unwrap();
        let s2 = AlgebraicReal::from_int(2).sqrt_nonneg().unwrap();
        let expect = s2.neg().mul_rational(&Rat::from_pair(1, 3));
        assert!(v.equals(&expect));
        // r < 3 rejected
        assert!(d_pqr(2, 4, 2).is_err());
    }

    #[test]
    fn d_pqr_matches_local_det() {
        for (p, q, r) in [(2u32, 3, 7), (2, 4, 5), (3, 4, 3), (2, 4, 6), (5, 5, 5)] {
            let tri = lanner_triangle(p, q, r);
            let ld = tri.local_det(&[0]).unwrap();
            let dv = d_pqr(p, q, r).unwrap();
            assert!(ld.equals(&dv), "mismatch at ({}, {}, {})", p, q, r);
        }
    }

    #[test]
    fn local_det_requires_nonsingular_rest() {
        // removing node 0 from a bold pair leaves a single node (det 1), fine;
        // but local det on \ T with zero det must fail
        let mut d = CoxeterDiagram::new(3);
        d.set_edge(1, 2, EdgeLabel::Bold);
        assert!(matches!(
            d.local_det(&[0]),
            Err(DiagramError::SingularComplement)
        ));
    }
}
