//! Common interface for the exact scalar types used by matrix elimination.

use super::cyclotomic::FracCyc;
use super::rational::Rat;

pub trait ExactScalar: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: Rat) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Exact division; panics on division by zero.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Certified sign in {-1, 0, 1}.
    fn sign(&self) -> i32;

    fn is_zero(&self) -> bool {
        self.sign() == 0
    }
}

impl ExactScalar for FracCyc {
    fn zero() -> Self {
        FracCyc::zero()
    }
    fn one() -> Self {
        FracCyc::one()
    }
    fn from_rat(r: Rat) -> Self {
        FracCyc::from_rat(r)
    }
    fn add(&self, o: &Self) -> Self {
        FracCyc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        FracCyc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        FracCyc::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        FracCyc::div(self, o)
    }
    fn neg(&self) -> Self {
        FracCyc::neg(self)
    }
    fn sign(&self) -> i32 {
        FracCyc::sign(self)
    }
    fn is_zero(&self) -> bool {
        FracCyc::is_zero(self)
    }
}

impl ExactScalar for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> i32 {
        use super::rational::RatExt;
        self.sign_i32()
    }
}

/// Determinant by Laplace expansion over subsets: `O(2^n n)` ring
/// multiplications and no divisions, which keeps cyclotomic operands sparse.
pub fn det_subset_expansion<S: ExactScalar>(a: &[Vec<S>]) -> S {
    let n = a.len();
    if n == 0 {
        return S::one();
    }
    debug_assert!(a.iter().all(|row| row.len() == n));
    // f[mask] = det of rows 0..popcount(mask), columns in mask
    let full = 1usize << n;
    let mut f: Vec<Option<S>> = vec![None; full];
    f[0] = Some(S::one());
    for mask in 1..full {
        let r = (mask as u32).count_ones() as usize - 1;
        let mut acc = S::zero();
        let mut sign_pos = (mask as u32).count_ones() as usize % 2 == 1;
        // iterate columns in mask from highest to lowest; the sign of the
        // cofactor alternates with the column's position within the mask
        let mut cols: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        cols.reverse();
        for (idx, j) in cols.iter().enumerate() {
            let sub = f[mask & !(1 << j)].as_ref().unwrap();
            let term = a[r][*j].mul(sub);
            let pos = (cols.len() - 1 - idx) + r; // column position + row
            if pos % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
            sign_pos = !sign_pos;
        }
        f[mask] = Some(acc);
    }
    f[full - 1].take().unwrap()
}

/// Inertia of a symmetric matrix by symmetric elimination with certified
/// pivot signs. Zero-diagonal trailing blocks use the hyperbolic-pair rule:
/// a symmetric 2x2 block with zero diagonal and nonzero off-diagonal entry
/// contributes one positive and one negative index.
pub fn symmetric_signature<S: ExactScalar>(a: &[Vec<S>]) -> (usize, usize, usize) {
    let n = a.len();
    let mut m: Vec<Vec<S>> = a.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut np, mut nm, mut nz) = (0usize, 0usize, 0usize);
    while !active.is_empty() {
        // find a nonzero diagonal pivot
        let mut pivot = None;
        for (pos, &i) in active.iter().enumerate() {
            let s = m[i][i].sign();
            if s != 0 {
                pivot = Some((pos, i, s));
                break;
            }
        }
        if let Some((pos, i, s)) = pivot {
            if s > 0 {
                np += 1;
            } else {
                nm += 1;
            }
            active.remove(pos);
            let piv = m[i][i].clone();
            for &r in &active {
                if m[r][i].is_zero() {
                    continue;
                }
                let factor = m[r][i].div(&piv);
                for &c in &active {
                    let t = factor.mul(&m[i][c]);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
            for &r in &active {
                m[r][i] = S::zero();
                m[i][r] = S::zero();
            }
            continue;
        }
        // all active diagonal entries are zero: look for an off-diagonal
        let mut pair = None;
        'outer: for (pi, &i) in active.iter().enumerate() {
            for (pj, &j) in active.iter().enumerate().skip(pi + 1) {
                if !m[i][j].is_zero() {
                    pair = Some((pi, pj, i, j));
                    break 'outer;
                }
            }
        }
        match pair {
            None => {
                nz += active.len();
                break;
            }
            Some((pi, pj, i, j)) => {
                np += 1;
                nm += 1;
                active.remove(pj);
                active.remove(pi);
                // eliminate rows against the 2x2 block [[0, b], [b, 0]]
                let b = m[i][j].clone();
                for &r in &active {
                    // v = (m[r][i], m[r][j]); subtract v * B^-1 * (rows i, j)
                    // B^-1 = [[0, 1/b], [1/b, 0]]
                    let ci = m[r][i].div(&b);
                    let cj = m[r][j].div(&b);
                    for &c in &active {
                        let t = cj.mul(&m[i][c]).add(&ci.mul(&m[j][c]));
                        m[r][c] = m[r][c].sub(&t);
                    }
                }
                for &r in &active {
                    m[r][i] = S::zero();
                    m[i][r] = S::zero();
                    m[r][j] = S::zero();
                    m[j][r] = S::zero();
                }
            }
        }
    }
    (np, nm, nz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::RatExt;

    fn rmat(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
            .collect()
    }

    #[test]
    fn subset_det_matches_known() {
        let m = rmat(&[&[1, 2], &[3, 4]]);
        assert_eq!(det_subset_expansion(&m), Rat::from_int(-2));
        let m = rmat(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]);
        assert_eq!(det_subset_expansion(&m), Rat::from_int(24));
        let m = rmat(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(det_subset_expansion(&m), Rat::from_int(-1));
        let m = rmat(&[
            &[1, 2, 3, 4],
            &[2, 1, 0, 1],
            &[3, 0, 2, 1],
            &[4, 1, 1, 1],
        ]);
        // row reduction gives 7
        assert_eq!(det_subset_expansion(&m), Rat::from_int(7));
    }

    fn det_cofactor(a: &[Vec<Rat>]) -> Rat {
        let n = a.len();
        if n == 0 {
            return Rat::from_int(1);
        }
        let mut acc = Rat::from_int(0);
        for j in 0..n {
            let minor: Vec<Vec<Rat>> = a[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let t = &a[0][j] * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        acc
    }

    #[test]
    fn subset_det_matches_cofactor_on_randoms() {
        let mut seed = 0x9E3779B9u64;
        let mut next = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 9) as i64 - 4
        };
        for n in 1..=5usize {
            for _ in 0..8 {
                let m: Vec<Vec<Rat>> = (0..n)
                    .map(|_| (0..n).map(|_| Rat::from_int(next())).collect())
                    .collect();
                assert_eq!(det_subset_expansion(&m), det_cofactor(&m));
            }
        }
    }

    #[test]
    fn signatures() {
        let m = rmat(&[&[1, 0], &[0, -1]]);
        assert_eq!(symmetric_signature(&m), (1, 1, 0));
        let m = rmat(&[&[0, 1], &[1, 0]]);
        assert_eq!(symmetric_signature(&m), (1, 1, 0));
        let m = rmat(&[&[0, 0], &[0, 0]]);
        assert_eq!(symmetric_signature(&m), (0, 0, 2));
        let m = rmat(&[&[1, 1], &[1, 1]]);
        assert_eq!(symmetric_signature(&m), (1, 0, 1));
        // 3x3 with a hyperbolic pair after one positive pivot
        let m = rmat(&[&[1, 0, 0], &[0, 0, 2], &[0, 2, 0]]);
        assert_eq!(symmetric_signature(&m), (2, 1, 0));
    }
}
