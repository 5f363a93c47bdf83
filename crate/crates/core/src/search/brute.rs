//! Brute-force oracle for attachment steps: enumerate every label vector
//! outright, apply only the final checks, and compare against the staged
//! search. Used by the acceptance suite on small instances.

use crate::diagram::canon::canonical_code;
use crate::diagram::CoxeterDiagram;

use super::attach::{AttachOpts, Partial};
use super::solve::det_is_zero;
use super::{Ctx, SearchError};

/// All extensions of `p` by `node` with every enumerable pair assigned a
/// label in 2..=cap, filtered only at the end (no incremental pruning),
/// with the same dotted/solve treatment as the staged attach.
pub fn brute_attach(
    ctx: &Ctx,
    p: &Partial,
    node: usize,
    opts: &AttachOpts,
    cap: u32,
) -> Result<Vec<Partial>, SearchError> {
    let faces = ctx.face_sets();
    let mut q = p.clone();
    for &x in &opts.dotted {
        q.d.set_edge(node, x, crate::diagram::EdgeLabel::Dotted(None));
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
    let mut labels = vec![2u32; enumerable.len()];
    let mut out = Vec::new();
    loop {
        // build the assignment
        let mut cand = q.clone();
        for (k, &x) in enumerable.iter().enumerate() {
            let allowed = if opts.forced_orthogonal.contains(&x) {
                labels[k] == 2
            } else if let Some((_, r)) = opts.restricted.iter().find(|(y, _)| *y == x) {
                r.contains(&labels[k])
            } else {
                true
            };
            if allowed {
                cand.d.set_angle(node, x, labels[k]);
            } else {
                cand.attached.clear(); // mark invalid
                break;
            }
        }
        if !cand.attached.is_empty() {
            finish(ctx, &cand, node, &faces, opts, &mut out)?;
        }
        // odometer
        let mut k = 0;
        loop {
            if k == labels.len() {
                out.sort_by_key(|s| canonical_code(&s.d));
                return Ok(out);
            }
            labels[k] += 1;
            if labels[k] <= cap {
                break;
            }
            labels[k] = 2;
            k += 1;
        }
        if labels.is_empty() {
            out.sort_by_key(|s| canonical_code(&s.d));
            return Ok(out);
        }
    }
}

fn finish(
    ctx: &Ctx,
    cand: &Partial,
    node: usize,
    faces: &[&[usize]],
    opts: &AttachOpts,
    out: &mut Vec<Partial>,
) -> Result<(), SearchError> {
    if !opts.must_connect_to.is_empty()
        && !opts
            .must_connect_to
            .iter()
            .any(|&x| cand.d.edge(node, x).is_edge())
    {
        return Ok(());
    }
    let mut states = vec![cand.clone()];
    for spec in &opts.solve_chain {
        let mut next = Vec::new();
        for st in &states {
            super::attach::solve_step(ctx, st, spec, &mut next)?;
        }
        states = next;
    }
    'state: for st in states {
        let unknown = st.unknown_pairs();
        // full subset check over all attached nodes
        for &focus in &st.attached {
            if !subsets_ok_skipping(&st.d, &st.attached, focus, faces, &unknown) {
                continue 'state;
            }
        }
        if !super::filter::disjoint_faces_joined(&st.d, &st.attached, faces) {
            continue;
        }
        for det_nodes in &opts.det_zero_filters {
            if !det_is_zero(&st.d, det_nodes)? {
                continue 'state;
            }
        }
        out.push(st);
    }
    Ok(())
}

fn subsets_ok_skipping(
    d: &CoxeterDiagram,
    nodes: &[usize],
    focus: usize,
    faces: &[&[usize]],
    unknown: &[(usize, usize)],
) -> bool {
    // mirror Partial::subsets_ok_skipping_unknown without a Ctx
    let p = Partial {
        d: d.clone(),
        attached: nodes.to_vec(),
        pending: unknown.to_vec(),
    };
    let _ = &p;
    super::attach::subsets_ok_excluding_pub(d, nodes, focus, faces, unknown)
}

/// Canonical multiset of the diagrams for set comparison.
pub fn canonical_multiset(partials: &[Partial]) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = partials.iter().map(|p| canonical_code(&p.d)).collect();
    v.sort();
    v
}
