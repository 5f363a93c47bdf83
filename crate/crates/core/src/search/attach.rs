//! Staged node attachment: enumerate the labels joining one new facet node
//! to the partial diagram under the compactness filters, then resolve the
//! declared unknown weights from `det = 0` conditions.

use crate::algebra::rational::{Rat, RatExt};
use crate::algebra::tower::Tw;
use crate::diagram::{CoxeterDiagram, EdgeLabel};

use super::filter;
use super::solve::{recognize_angle_weight, solve_edge_weight, SolveOutcome};
use super::{Ctx, SearchError};

/// A partially built Coxeter diagram: nodes are facet indices of the Gale
/// diagram; only edges among `attached` are meaningful.
#[derive(Clone, Debug)]
pub struct Partial {
    pub d: CoxeterDiagram,
    pub attached: Vec<usize>,
    /// Angle edges deliberately left unknown (to be solved later).
    pub pending: Vec<(usize, usize)>,
}

impl Partial {
    pub fn seed(ctx: &Ctx, d: CoxeterDiagram, attached: Vec<usize>) -> Partial {
        debug_assert_eq!(d.order(), ctx.d);
        Partial {
            d,
            attached,
            pending: vec![],
        }
    }

    /// Subset check that skips subsets touching an unknown pair.
    pub fn subsets_ok_skipping_unknown(&self, ctx: &Ctx, focus: usize) -> bool {
        let faces = ctx.face_sets();
        let unknown: Vec<(usize, usize)> = self.unknown_pairs();
        subsets_ok_excluding(&self.d, &self.attached, focus, &faces, &unknown)
    }

    pub fn unknown_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = self.pending.clone();
        for (ai, &i) in self.attached.iter().enumerate() {
            for &j in self.attached.iter().skip(ai + 1) {
                if matches!(self.d.edge(i, j), EdgeLabel::Dotted(None)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub(crate) fn subsets_ok_excluding_pub(
    d: &CoxeterDiagram,
    nodes: &[usize],
    focus: usize,
    faces: &[&[usize]],
    unknown: &[(usize, usize)],
) -> bool {
    subsets_ok_excluding(d, nodes, focus, faces, unknown)
}

fn subsets_ok_excluding(
    d: &CoxeterDiagram,
    nodes: &[usize],
    focus: usize,
    faces: &[&[usize]],
    unknown: &[(usize, usize)],
) -> bool {
    if unknown.is_empty() {
        return filter::subsets_ok(d, nodes, focus, faces);
    }
    let others: Vec<usize> = nodes.iter().copied().filter(|&x| x != focus).collect();
    let mut subset = vec![focus];
    rec_excluding(d, &others, 0, &mut subset, faces, unknown)
}

fn rec_excluding(
    d: &CoxeterDiagram,
    others: &[usize],
    start: usize,
    subset: &mut Vec<usize>,
    faces: &[&[usize]],
    unknown: &[(usize, usize)],
) -> bool {
    if subset.len() >= 2
        && !touches_unknown(subset, unknown)
        && !check_one_subset(d, subset, faces)
    {
        return false;
    }
    if subset.len() >= 9 {
        return true;
    }
    for i in start..others.len() {
        subset.push(others[i]);
        let ok = rec_excluding(d, others, i + 1, subset, faces, unknown);
        subset.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn touches_unknown(subset: &[usize], unknown: &[(usize, usize)]) -> bool {
    unknown
        .iter()
        .any(|&(a, b)| subset.contains(&a) && subset.contains(&b))
}

fn check_one_subset(d: &CoxeterDiagram, subset: &[usize], faces: &[&[usize]]) -> bool {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    if sorted.len() <= 5 {
        if filter::elliptic_small(d, &sorted) {
            return true;
        }
        let has_face = faces
            .iter()
            .any(|f| f.iter().all(|x| sorted.binary_search(x).is_ok()));
        if !has_face {
            return false;
        }
        if faces.iter().any(|f| f[..] == sorted[..]) {
            return filter::lanner_small(d, &sorted);
        }
        true
    } else {
        !crate::diagram::catalog::is_connected_parabolic(&d.subdiagram(&sorted))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveKind {
    /// The solved weight must be `cos(pi/m)`; the edge becomes an angle.
    Angle,
    /// The solved weight must exceed one; the edge becomes concrete dotted.
    DottedWeight,
}

#[derive(Clone, Debug)]
pub struct SolveSpec {
    pub edge: (usize, usize),
    pub kind: SolveKind,
    pub det_nodes: Vec<usize>,
}

/// Options for attaching one node.
#[derive(Clone, Debug, Default)]
pub struct AttachOpts {
    /// Partners forced orthogonal (detachment conditions).
    pub forced_orthogonal: Vec<usize>,
    /// Partners whose label is restricted to the given choices.
    pub restricted: Vec<(usize, Vec<u32>)>,
    /// Partners joined to the new node by a dotted edge of unknown weight.
    pub dotted: Vec<usize>,
    /// Partners whose edge is left unassigned for a later solve step.
    pub defer: Vec<usize>,
    /// Solve steps executed in order after enumeration.
    pub solve_chain: Vec<SolveSpec>,
    /// Fully concrete subsets that must have zero determinant.
    pub det_zero_filters: Vec<Vec<usize>>,
    /// Require at least one non-orthogonal edge to one of these nodes.
    pub must_connect_to: Vec<usize>,
}

/// Attach `node` to every partial, returning the surviving extensions.
pub fn attach_node(
    ctx: &Ctx,
    partials: &[Partial],
    node: usize,
    opts: &AttachOpts,
) -> Result<Vec<Partial>, SearchError> {
    let mut out = Vec::new();
    for p in partials {
        attach_one(ctx, p, node, opts, &mut out)?;
    }
    Ok(out)
}

fn attach_one(
    ctx: &Ctx,
    p: &Partial,
    node: usize,
    opts: &AttachOpts,
    out: &mut Vec<Partial>,
) -> Result<(), SearchError> {
    let faces = ctx.face_sets();
    let mut q = p.clone();
    debug_assert!(!q.attached.contains(&node));
    for &x in &opts.dotted {
        debug_assert!(ctx.is_dotted_pair(node, x));
        q.d.set_edge(node, x, EdgeLabel::Dotted(None));
    }
    for &x in &opts.defer {
        q.pending.push((node, x));
    }
    q.attached.push(node);
    let enumerable: Vec<usize> = p
        .attached
        .iter()
        .copied()
        .filter(|&x| {
            !opts.dotted.contains(&x)
                && !opts.defer.contains(&x)
                && !opts
                    .solve_chain
                    .iter()
                    .any(|s| s.edge == (node, x) || s.edge == (x, node))
        })
        .collect();
    let choices: Vec<(usize, Vec<u32>)> = enumerable
        .iter()
        .map(|&x| {
            if opts.forced_orthogonal.contains(&x) {
                (x, vec![2u32])
            } else if let Some((_, r)) = opts.restricted.iter().find(|(y, _)| *y == x) {
                (x, r.clone())
            } else {
                (x, vec![2, 3, 4, 5])
            }
        })
        .collect();
    enumerate_labels(ctx, &mut q, node, &choices, 0, &faces, opts, out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_labels(
    ctx: &Ctx,
    q: &mut Partial,
    node: usize,
    choices: &[(usize, Vec<u32>)],
    k: usize,
    faces: &[&[usize]],
    opts: &AttachOpts,
    out: &mut Vec<Partial>,
) -> Result<(), SearchError> {
    if k == choices.len() {
        return complete_node(ctx, q, node, faces, opts, out);
    }
    let (x, ref labels) = choices[k];
    let assigned: Vec<usize> = choices[..k].iter().map(|&(y, _)| y).collect();
    for &m in labels {
        q.d.set_angle(node, x, m);
        if m >= 3
            && !(filter::pair_triples_ok(&q.d, &assigned, node, x, faces)
                && filter::pair_quads_ok(&q.d, &assigned, node, x, faces))
        {
            continue;
        }
        enumerate_labels(ctx, q, node, choices, k + 1, faces, opts, out)?;
    }
    q.d.set_angle(node, x, 2);
    Ok(())
}

fn complete_node(
    ctx: &Ctx,
    q: &Partial,
    node: usize,
    faces: &[&[usize]],
    opts: &AttachOpts,
    out: &mut Vec<Partial>,
) -> Result<(), SearchError> {
    if !opts.must_connect_to.is_empty() {
        let connected = opts
            .must_connect_to
            .iter()
            .any(|&x| q.d.edge(node, x).is_edge());
        if !connected {
            return Ok(());
        }
    }
    if !q.subsets_ok_skipping_unknown(ctx, node) {
        return Ok(());
    }
    let mut states = vec![q.clone()];
    for spec in &opts.solve_chain {
        let mut next = Vec::new();
        for st in &states {
            solve_step(ctx, st, spec, &mut next)?;
        }
        states = next;
        if states.is_empty() {
            return Ok(());
        }
    }
    'state: for st in states {
        let unknown = st.unknown_pairs();
        if !subsets_ok_excluding(&st.d, &st.attached, node, faces, &unknown) {
            continue;
        }
        if !filter::disjoint_faces_joined(&st.d, &st.attached, faces) {
            continue;
        }
        for det_nodes in &opts.det_zero_filters {
            debug_assert!(det_nodes.len() >= ctx.n + 2);
            for &(a, b) in &unknown {
                assert!(
                    !(det_nodes.contains(&a) && det_nodes.contains(&b)),
                    "det filter touches an unknown edge"
                );
            }
            if !super::solve::det_is_zero(&st.d, det_nodes)? {
                continue 'state;
            }
        }
        out.push(st);
    }
    Ok(())
}

pub fn solve_step(
    ctx: &Ctx,
    st: &Partial,
    spec: &SolveSpec,
    out: &mut Vec<Partial>,
) -> Result<(), SearchError> {
    let (i, j) = spec.edge;
    debug_assert!(spec.det_nodes.contains(&i) && spec.det_nodes.contains(&j));
    debug_assert!(spec.det_nodes.len() >= ctx.n + 2);
    for &(a, b) in &st.unknown_pairs() {
        if (a, b) != (i, j)
            && (a, b) != (j, i)
            && spec.det_nodes.contains(&a)
            && spec.det_nodes.contains(&b)
        {
            return Err(SearchError::Internal(format!(
                "solve subset for ({}, {}) contains another unknown ({}, {})",
                i, j, a, b
            )));
        }
    }
    let outcome = solve_edge_weight(&st.d, &spec.det_nodes, i, j)?;
    let roots = match outcome {
        SolveOutcome::IdenticallyZero => {
            return Err(SearchError::Internal(format!(
                "determinant identically zero while solving ({}, {})",
                i, j
            )));
        }
        SolveOutcome::Roots(r) => r,
    };
    let mut seen_labels: Vec<u32> = Vec::new();
    let mut seen_weight: Option<Tw> = None;
    for w in roots {
        match spec.kind {
            SolveKind::Angle => {
                if let Some(m) = recognize_angle_weight(&w) {
                    if seen_labels.contains(&m) {
                        continue;
                    }
                    seen_labels.push(m);
                    let mut next = st.clone();
                    next.d.set_angle(i, j, m);
                    next.pending
                        .retain(|&(a, b)| (a, b) != (i, j) && (b, a) != (i, j));
                    out.push(next);
                }
            }
            SolveKind::DottedWeight => {
                if w.sub(&Tw::from_rat(Rat::from_int(1))).sign() > 0 {
                    if let Some(prev) = &seen_weight {
                        if prev.equals(&w) {
                            continue;
                        }
                    }
                    seen_weight = Some(w.clone());
                    let mut next = st.clone();
                    next.d.set_edge(i, j, EdgeLabel::Dotted(Some(w)));
                    next.pending
                        .retain(|&(a, b)| (a, b) != (i, j) && (b, a) != (i, j));
                    out.push(next);
                }
            }
        }
    }
    Ok(())
}
