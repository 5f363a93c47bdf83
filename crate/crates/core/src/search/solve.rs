//! Solving `det = 0` for one unknown edge weight.
//!
//! On any subdiagram of order at least n+2 the Gram determinant must vanish
//! (the normals live in an (n+1)-dimensional space). The determinant is a
//! polynomial of degree at most two in any single edge weight, so it is
//! reconstructed exactly by interpolation at w = 0, 1, -1 and the quadratic
//! shape is verified at a fourth point.

use crate::algebra::cyclotomic::CycReal;
use crate::algebra::rational::{Rat, RatExt};
use crate::algebra::scalar::det_subset_expansion;
use crate::algebra::tower::Tw;
use crate::diagram::{CoxeterDiagram, EdgeLabel};

use super::SearchError;

/// Exact roots of `det(sub(nodes))(w) = 0` in the weight `w` of edge
/// `(i, j)`, everything else concrete. Roots ascending (at most two).
pub fn solve_edge_weight(
    d: &CoxeterDiagram,
    nodes: &[usize],
    i: usize,
    j: usize,
) -> Result<SolveOutcome, SearchError> {
    debug_assert!(nodes.contains(&i) && nodes.contains(&j));
    let at = |w: i64| -> Result<Tw, SearchError> {
        let mut dd = d.clone();
        dd.set_edge(
            i,
            j,
            EdgeLabel::Dotted(Some(Tw::from_rat(Rat::from_int(w)))),
        );
        // the Dotted carrier is only a container for the trial weight here
        det_of(&dd, nodes)
    };
    let d0 = at(0)?;
    let d1 = at(1)?;
    let dm1 = at(-1)?;
    // det(w) = A w^2 + B w + C
    let c = d0.clone();
    let half = Tw::from_rat(Rat::from_pair(1, 2));
    let a = d1.add(&dm1).sub(&d0).sub(&d0).mul(&half);
    let b = d1.sub(&dm1).mul(&half);
    // quadratic assertion at w = 2
    let d2 = at(2)?;
    let two = Tw::from_rat(Rat::from_int(2));
    let four = Tw::from_rat(Rat::from_int(4));
    let predicted = a.mul(&four).add(&b.mul(&two)).add(&c);
    if !predicted.equals(&d2) {
        return Err(SearchError::NonQuadraticDeterminant(format!(
            "edge ({}, {}) on {:?}",
            i, j, nodes
        )));
    }
    if a.is_zero() && b.is_zero() {
        return Ok(if c.is_zero() {
            SolveOutcome::IdenticallyZero
        } else {
            SolveOutcome::Roots(vec![])
        });
    }
    if a.is_zero() {
        return Ok(SolveOutcome::Roots(vec![c.neg().div(&b)]));
    }
    let disc = b.mul(&b).sub(&a.mul(&c).mul(&four));
    match disc.sign() {
        -1 => Ok(SolveOutcome::Roots(vec![])),
        0 => {
            let r = b.neg().div(&a.mul(&two));
            Ok(SolveOutcome::Roots(vec![r.clone(), r]))
        }
        _ => {
            let s = disc.sqrt_new_level();
            let two_a = a.mul(&two);
            let r1 = b.neg().sub(&s).div(&two_a);
            let r2 = b.neg().add(&s).div(&two_a);
            let mut roots = vec![r1, r2];
            if roots[0].sub(&roots[1]).sign() > 0 {
                roots.swap(0, 1);
            }
            Ok(SolveOutcome::Roots(roots))
        }
    }
}

#[derive(Debug)]
pub enum SolveOutcome {
    Roots(Vec<Tw>),
    IdenticallyZero,
}

/// Exact determinant of the induced subdiagram.
pub fn det_of(d: &CoxeterDiagram, nodes: &[usize]) -> Result<Tw, SearchError> {
    let sub = d.subdiagram(nodes);
    sub.determinant_tw()
        .map_err(|e| SearchError::Internal(format!("determinant: {}", e)))
}

/// Is the determinant of the (fully concrete) subdiagram zero?
/// Uses a certified interval rejection before the exact test.
pub fn det_is_zero(d: &CoxeterDiagram, nodes: &[usize]) -> Result<bool, SearchError> {
    let sub = d.subdiagram(nodes);
    if let Some(m) = sub.gram_cyc() {
        // interval screen
        let iv = {
            let n = m.len();
            let mut rows = Vec::with_capacity(n);
            for r in &m {
                let mut row = Vec::with_capacity(n);
                for e in r {
                    match e.eval_iv(64) {
                        Some(iv) => row.push(iv),
                        None => {
                            row.clear();
                            break;
                        }
                    }
                }
                if row.len() != n {
                    rows.clear();
                    break;
                }
                rows.push(row);
            }
            if rows.len() == n {
                Some(crate::algebra::interval::det_interval(&rows))
            } else {
                None
            }
        };
        if let Some(iv) = iv {
            if let Some(s) = iv.sign() {
                if s != 0 {
                    return Ok(false);
                }
            }
        }
        let det = det_subset_expansion(&m);
        return Ok(det.is_zero());
    }
    Ok(det_of(d, nodes)?.is_zero())
}

/// The result of recognizing a solved angle weight: the edge label `m`
/// with weight `cos(pi/m)`, or rejection.
pub fn recognize_angle_weight(w: &Tw) -> Option<u32> {
    // need 0 <= w < 1 with w = cos(pi/m); m = 2 means orthogonal
    let one = Tw::one();
    if w.sub(&one).sign() >= 0 {
        return None;
    }
    if w.sign() < 0 {
        return None;
    }
    if w.is_zero() {
        return Some(2);
    }
    // binary search the monotone family cos(pi/m)
    let cosm = |m: u32| Tw::from_cyc(CycReal::cos_pi_over(m as u64));
    let mut hi: u32 = 4;
    loop {
        let c = cosm(hi);
        match c.sub(w).sign() {
            1 => break,
            0 => return Some(hi),
            _ => {
                hi = hi.checked_mul(2)?;
                if hi > 1 << 20 {
                    return None;
                }
            }
        }
    }
    let mut lo: u32 = 2;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        match cosm(mid).sub(w).sign() {
            0 => return Some(mid),
            -1 => lo = mid,
            _ => hi = mid,
        }
    }
    if cosm(lo).equals(w) {
        Some(lo)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::lanner_triangle;

    #[test]
    fn two_node_dotted_solve() {
        // det = 1 - w^2: roots -1, 1; both rejected as dotted weights
        let mut d = CoxeterDiagram::new(2);
        d.set_edge(0, 1, EdgeLabel::Dotted(None));
        match solve_edge_weight(&d, &[0, 1], 0, 1).unwrap() {
            SolveOutcome::Roots(rs) => {
                assert_eq!(rs.len(), 2);
                assert!(rs[0].equals(&Tw::from_rat(Rat::from_int(-1))));
                assert!(rs[1].equals(&Tw::one()));
            }
            _ => panic!("expected roots"),
        }
    }

    #[test]
    fn recognize_weights() {
        assert_eq!(recognize_angle_weight(&Tw::zero()), Some(2));
        assert_eq!(
            recognize_angle_weight(&Tw::from_rat(Rat::from_pair(1, 2))),
            Some(3)
        );
        let c7 = Tw::from_cyc(CycReal::cos_pi_over(7));
        assert_eq!(recognize_angle_weight(&c7), Some(7));
        let c101 = Tw::from_cyc(CycReal::cos_pi_over(101));
        assert_eq!(recognize_angle_weight(&c101), Some(101));
        assert_eq!(
            recognize_angle_weight(&Tw::from_rat(Rat::from_pair(3, 5))),
            None
        );
        assert_eq!(recognize_angle_weight(&Tw::one()), None);
        assert_eq!(
            recognize_angle_weight(&Tw::from_rat(Rat::from_int(-1))),
            None
        );
    }

    #[test]
    fn det_zero_checks() {
        let d = lanner_triangle(2, 3, 6); // parabolic: det 0
        assert!(det_is_zero(&d, &[0, 1, 2]).unwrap());
        let d = lanner_triangle(2, 3, 7);
        assert!(!det_is_zero(&d, &[0, 1, 2]).unwrap());
    }
}
