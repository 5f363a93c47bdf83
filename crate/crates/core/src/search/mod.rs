//! The enumeration engine: arc-constrained diagram searches, staged node
//! attachment with exact determinant conditions, unknown-weight solving,
//! and the per-Gale-diagram classification drivers.

pub mod arcs;
pub mod attach;
pub mod brute;
pub mod drivers;
pub mod filter;
pub mod par;
pub mod solve;
pub mod strategy;
pub mod verify;

use std::fmt;

use crate::diagram::canon::canonical_code;
use crate::diagram::{CoxeterDiagram, Signature};
use crate::gale::{MissingFace, StandardGaleDiagram};

/// Search-wide tunables. `guard_cap` is a safety net on multiple-edge scans
/// whose real bounds come from local-determinant inequalities; raising it
/// must not change any result.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub guard_cap: u32,
    pub jobs: usize,
    pub trace: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            guard_cap: 101,
            jobs: 1,
            trace: false,
        }
    }
}

/// Immutable per-Gale search context.
#[derive(Clone)]
pub struct Ctx {
    pub gale: StandardGaleDiagram,
    pub gale_id: usize,
    pub n: usize,
    pub d: usize,
    pub faces: Vec<MissingFace>,
    pub cfg: SearchConfig,
}

impl Ctx {
    pub fn new(gale: StandardGaleDiagram, cfg: SearchConfig) -> Self {
        let n = gale.dim();
        let d = gale.facet_count();
        let faces = gale.missing_faces();
        let gale_id = crate::gale::gale_id(&gale).unwrap_or(0);
        Ctx {
            gale,
            gale_id,
            n,
            d,
            faces,
            cfg,
        }
    }

    /// Sorted facet sets of the missing faces.
    pub fn face_sets(&self) -> Vec<&[usize]> {
        self.faces.iter().map(|f| f.facets.as_slice()).collect()
    }

    /// Faces of order two (the dotted pairs).
    pub fn dotted_pairs(&self) -> Vec<(usize, usize)> {
        self.faces
            .iter()
            .filter(|f| f.facets.len() == 2)
            .map(|f| (f.facets[0], f.facets[1]))
            .collect()
    }

    pub fn is_dotted_pair(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.dotted_pairs().iter().any(|&(x, y)| (x, y) == (a, b))
    }
}

/// A verified polytope record.
#[derive(Clone)]
pub struct CatalogEntry {
    pub dim: usize,
    pub gale_id: usize,
    pub gale: StandardGaleDiagram,
    pub diagram: CoxeterDiagram,
    pub signature: Signature,
    /// Lanner subdiagram (facet set) assigned to each missing face, in
    /// face order.
    pub assignment: Vec<Vec<usize>>,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CatalogEntry(G{}, dim {}, {:?})",
            self.gale_id, self.dim, self.diagram
        )
    }
}

impl CatalogEntry {
    /// Deterministic sort key: weights erased; entries from the same
    /// combinatorial diagram are further ordered by weight approximations.
    pub fn sort_key(&self) -> (usize, usize, Vec<u32>, Vec<u64>) {
        let code = canonical_code(&self.diagram);
        let weights: Vec<u64> = weight_key(&self.diagram);
        (self.dim, self.gale_id, code, weights)
    }
}

fn weight_key(d: &CoxeterDiagram) -> Vec<u64> {
    let mut ws = Vec::new();
    for i in 0..d.order() {
        for j in i + 1..d.order() {
            if let crate::diagram::EdgeLabel::Dotted(Some(w)) = d.edge(i, j) {
                let approx = w.to_f64_approx();
                ws.push((approx * 1e12) as u64);
            }
        }
    }
    ws.sort_unstable();
    ws
}

#[derive(Clone, Debug)]
pub enum SearchError {
    /// An arc window of total order <= 3 admits unbounded labels.
    InfiniteFamily(String),
    /// The determinant failed the quadratic-in-the-weight assertion.
    NonQuadraticDeterminant(String),
    /// Internal consistency failure.
    Internal(String),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::InfiniteFamily(s) => write!(f, "infinite family: {}", s),
            SearchError::NonQuadraticDeterminant(s) => {
                write!(f, "determinant not quadratic in the weight: {}", s)
            }
            SearchError::Internal(s) => write!(f, "internal error: {}", s),
        }
    }
}

impl std::error::Error for SearchError {}

/// Classify every admissible Gale diagram for dimensions in the range,
/// deterministically ordered by (dimension, Gale id, canonical form).
pub fn run_classification(
    n_min: usize,
    n_max: usize,
    cfg: &SearchConfig,
) -> Result<Vec<CatalogEntry>, SearchError> {
    assert!((4..=7).contains(&n_min) && n_min <= n_max && n_max <= 7);
    let mut out = Vec::new();
    for n in n_min..=n_max {
        for gale in crate::gale::enumerate_admissible(n) {
            let ctx = Ctx::new(gale, cfg.clone());
            out.extend(drivers::enumerate_polytopes(&ctx)?);
        }
    }
    out.sort_by_key(|e| e.sort_key());
    Ok(out)
}
