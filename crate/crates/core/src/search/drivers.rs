//! Per-Gale-diagram classification strategies.
//!
//! Each admissible Gale diagram carries a declarative plan: a seed (an arc
//! search or a Lanner catalog face), an attachment order with the solve
//! steps for unknown weights, and scan branches for the faces of order
//! three that can carry a multiple edge of multiplicity four or more (the
//! endpoints of such an edge detach from everything but the third node of
//! their face, which is what keeps every branch finite or boundable).
//!
//! The drivers share one engine; the plans are rendered to text by
//! `strategy_docs` so they can be audited side by side with the searches.

use std::collections::HashSet;

use crate::diagram::canon::{canonical_code, is_isomorphic_exact};
use crate::diagram::{CoxeterDiagram, EdgeLabel};

use super::arcs::{search_arc, ArcSpec};
use super::attach::{attach_node, AttachOpts, Partial, SolveKind, SolveSpec};
use super::filter;
use super::strategy::StrategyDoc;
use super::verify::verify_polytope;
use super::{CatalogEntry, Ctx, SearchError};

pub fn enumerate_polytopes(ctx: &Ctx) -> Result<Vec<CatalogEntry>, SearchError> {
    let partials = match ctx.gale_id {
        1 => g1(ctx)?,
        2 => g2(ctx)?,
        3 => g3(ctx)?,
        4 => g4(ctx)?,
        5 => g5(ctx)?,
        6 => g6(ctx)?,
        7 => g7(ctx)?,
        8 => g8(ctx)?,
        9 => g9(ctx)?,
        10 => g10(ctx)?,
        11 => g11(ctx)?,
        12 | 17 | 18 => vec![], // no realization of the two-vertex arc (x>=4, y>=3)
        13 => g13(ctx)?,
        14 => g14(ctx)?,
        15 => eliminated_by_arc(ctx, &[2, 2, 3], &[2, 3, 4, 5, 6])?,
        16 => eliminated_by_arc(ctx, &[3, 1, 3], &[2, 3, 4, 5, 6, 7])?,
        19 => eliminated_by_arc(ctx, &[3, 1, 4, 1], &[2, 3, 4, 5, 6, 7, 8, 9])?,
        20 => g20(ctx)?,
        other => {
            return Err(SearchError::Internal(format!(
                "no strategy for Gale diagram id {}",
                other
            )))
        }
    };
    finalize(ctx, partials)
}

// ---------------------------------------------------------------------------
// shared pieces
// ---------------------------------------------------------------------------

/// Seed partial diagrams from an arc search, mapping arc nodes onto the
/// given facet list. Both orientations are used: the arc reflection need
/// not extend to a symmetry of the whole Gale diagram.
fn seed_from_arc(
    ctx: &Ctx,
    labels: &[u32],
    facets: &[usize],
) -> Result<Vec<Partial>, SearchError> {
    let spec = ArcSpec::new(labels.to_vec(), 2);
    debug_assert_eq!(spec.node_count(), facets.len());
    let sigmas = search_arc(&spec)?;
    let mut out = Vec::new();
    let mut orientations: Vec<Vec<usize>> = vec![(0..facets.len()).collect()];
    {
        let mut rev = labels.to_vec();
        rev.reverse();
        if rev == labels {
            orientations.push((0..facets.len()).rev().collect());
        }
    }
    for sj in &sigmas {
        for orient in &orientations {
            let mut d = CoxeterDiagram::new(ctx.d);
            for a in 0..facets.len() {
                for b in a + 1..facets.len() {
                    d.set_edge(
                        facets[orient[a]],
                        facets[orient[b]],
                        sj.edge(a, b).clone(),
                    );
                }
            }
            out.push(Partial::seed(ctx, d, facets.to_vec()));
        }
    }
    Ok(out)
}

/// Seed with every Lanner diagram of the given order placed on the facet
/// set (one Gale vertex per contiguous block). Assignments equivalent under
/// permutations within a Gale vertex are represented once.
fn seed_lanner_face(ctx: &Ctx, facets: &[usize]) -> Vec<Partial> {
    let order = facets.len();
    let protos = crate::diagram::catalog::lanner_catalog(order);
    let colors: Vec<usize> = facets.iter().map(|&f| ctx.gale.vertex_of_facet(f)).collect();
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for proto in protos {
        let mut perm: Vec<usize> = (0..order).collect();
        permute(&mut perm, 0, &mut |p| {
            // key: edge codes + color pattern under this assignment
            let mut key = Vec::with_capacity(order * order);
            for a in 0..order {
                key.push(colors[a] as u32);
                for b in a + 1..order {
                    key.push(proto.edge(p[a], p[b]).code());
                }
            }
            if !seen.insert(key) {
                return;
            }
            let mut d = CoxeterDiagram::new(ctx.d);
            for a in 0..order {
                for b in a + 1..order {
                    d.set_edge(facets[a], facets[b], proto.edge(p[a], p[b]).clone());
                }
            }
            out.push(Partial::seed(ctx, d, facets.to_vec()));
        });
    }
    out
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Seed with every Lanner triangle (labels up to 5 handled here; the scan
/// branches add the multiple-edge cases) on a single Gale vertex.
fn seed_lanner_triangle(ctx: &Ctx, facets: &[usize; 3]) -> Vec<Partial> {
    let mut out = Vec::new();
    for p in 2..=5u32 {
        for q in p..=5u32 {
            for r in q..=5u32 {
                if !crate::diagram::catalog::is_lanner_triple(p, q, r) {
                    continue;
                }
                let mut d = CoxeterDiagram::new(ctx.d);
                d.set_angle(facets[0], facets[1], p);
                d.set_angle(facets[0], facets[2], q);
                d.set_angle(facets[1], facets[2], r);
                out.push(Partial::seed(ctx, d, facets.to_vec()));
            }
        }
    }
    out
}

/// Run one final dotted solve on every state.
fn solve_final(
    ctx: &Ctx,
    states: Vec<Partial>,
    spec: SolveSpec,
) -> Result<Vec<Partial>, SearchError> {
    let mut out = Vec::new();
    for st in &states {
        super::attach::solve_step(ctx, st, &spec, &mut out)?;
    }
    Ok(out)
}

fn all_facets(ctx: &Ctx) -> Vec<usize> {
    (0..ctx.d).collect()
}

fn without(all: &[usize], drop: usize) -> Vec<usize> {
    all.iter().copied().filter(|&x| x != drop).collect()
}

/// Verify, deduplicate and package the finished candidates.
fn finalize(ctx: &Ctx, partials: Vec<Partial>) -> Result<Vec<CatalogEntry>, SearchError> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for p in partials {
        if p.attached.len() != ctx.d || !p.pending.is_empty() || !p.d.is_concrete() {
            return Err(SearchError::Internal(
                "finalize received an incomplete candidate".into(),
            ));
        }
        let faces = ctx.face_sets();
        if !filter::final_combinatorics_ok(&p.d, &faces) {
            continue;
        }
        let Some(_psi) = verify_polytope(&p.d, &ctx.gale) else {
            continue;
        };
        let signature = p
            .d
            .signature()
            .map_err(|e| SearchError::Internal(e.to_string()))?;
        let assignment: Vec<Vec<usize>> = ctx.faces.iter().map(|f| f.facets.clone()).collect();
        let dup = entries
            .iter()
            .any(|e| is_isomorphic_exact(&e.diagram, &p.d).is_some());
        if dup {
            continue;
        }
        entries.push(CatalogEntry {
            dim: ctx.n,
            gale_id: ctx.gale_id,
            gale: ctx.gale.clone(),
            diagram: p.d,
            signature,
            assignment,
        });
    }
    entries.sort_by_key(|e| e.sort_key());
    Ok(entries)
}

fn eliminated_by_arc(
    ctx: &Ctx,
    labels: &[u32],
    facets: &[usize],
) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, labels, facets)?;
    if !seeds.is_empty() {
        return Err(SearchError::Internal(format!(
            "arc {:?} unexpectedly has realizations",
            labels
        )));
    }
    Ok(vec![])
}

// ---------------------------------------------------------------------------
// dimension 7
// ---------------------------------------------------------------------------

/// G20 = (1,1,3,2,3). Faces: {0,1} dotted, {1,2,3,4}, {2..6}, {5..9},
/// {7,8,9,0}. Seed the (3,2,3) arc on facets 2..9, attach facet 1 under
/// det = 0, then facet 0 and the dotted weight.
fn g20(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, &[3, 2, 3], &[2, 3, 4, 5, 6, 7, 8, 9])?;
    let step1 = attach_node(
        ctx,
        &seeds,
        1,
        &AttachOpts {
            det_zero_filters: vec![vec![1, 2, 3, 4, 5, 6, 7, 8, 9]],
            ..Default::default()
        },
    )?;
    let step2 = attach_node(
        ctx,
        &step1,
        0,
        &AttachOpts {
            dotted: vec![1],
            det_zero_filters: vec![vec![0, 2, 3, 4, 5, 6, 7, 8, 9]],
            ..Default::default()
        },
    )?;
    solve_final(
        ctx,
        step2,
        SolveSpec {
            edge: (0, 1),
            kind: SolveKind::DottedWeight,
            det_nodes: all_facets(ctx),
        },
    )
}

// ---------------------------------------------------------------------------
// dimension 6
// ---------------------------------------------------------------------------

/// G14 = (1,1,2,3,2). Faces: {0,1} dotted, {1,2,3}, {2..6}, {4..8},
/// {7,8,0}. Seed the (2,3,2) arc on facets 2..8.
fn g14(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, &[2, 3, 2], &[2, 3, 4, 5, 6, 7, 8])?;
    // attach facet 1, solving the face edge that may be multiple
    let mut step1 = Vec::new();
    for target in [2usize, 3] {
        let nodes = {
            let mut v = vec![1usize];
            v.extend(2..=8usize);
            v
        };
        step1.extend(attach_node(
            ctx,
            &seeds,
            1,
            &AttachOpts {
                solve_chain: vec![SolveSpec {
                    edge: (1, target),
                    kind: SolveKind::Angle,
                    det_nodes: nodes.clone(),
                }],
                ..Default::default()
            },
        )?);
    }
    // attach facet 0 (face {7,8,0}), solving its possibly-multiple edge
    let mut step2 = Vec::new();
    for target in [7usize, 8] {
        let det: Vec<usize> = without(&all_facets(ctx), 1);
        step2.extend(attach_node(
            ctx,
            &step1,
            0,
            &AttachOpts {
                dotted: vec![1],
                solve_chain: vec![SolveSpec {
                    edge: (0, target),
                    kind: SolveKind::Angle,
                    det_nodes: det,
                }],
                ..Default::default()
            },
        )?);
    }
    solve_final(
        ctx,
        step2,
        SolveSpec {
            edge: (0, 1),
            kind: SolveKind::DottedWeight,
            det_nodes: all_facets(ctx),
        },
    )
}

/// G13 = (1,1,2,1,4). Faces: {0,1} dotted, {1,2,3}, {2,3,4}, {4..8},
/// {5..8,0}. Seed the (1,4,1) arc on facets 4,5,6,7,8,0.
fn g13(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, &[1, 4, 1], &[4, 5, 6, 7, 8, 0])?;
    // facet 2 is the member of {2,3} attached to facet 4 (they share the
    // Gale vertex, so this is just a naming choice)
    let step1 = attach_node(
        ctx,
        &seeds,
        2,
        &AttachOpts {
            restricted: vec![(4, vec![3, 4, 5])],
            ..Default::default()
        },
    )?;
    // facet 3 completes the face {2,3,4}; the edge (3,2) may be multiple
    let step2 = attach_node(
        ctx,
        &step1,
        3,
        &AttachOpts {
            solve_chain: vec![SolveSpec {
                edge: (3, 2),
                kind: SolveKind::Angle,
                det_nodes: vec![0, 2, 3, 4, 5, 6, 7, 8],
            }],
            ..Default::default()
        },
    )?;
    // facet 1 completes {1,2,3}; (1,3) may be multiple when 3 hangs off 2
    let step3 = attach_node(
        ctx,
        &step2,
        1,
        &AttachOpts {
            dotted: vec![0],
            solve_chain: vec![SolveSpec {
                edge: (1, 3),
                kind: SolveKind::Angle,
                det_nodes: vec![1, 2, 3, 4, 5, 6, 7, 8],
            }],
            ..Default::default()
        },
    )?;
    solve_final(
        ctx,
        step3,
        SolveSpec {
            edge: (0, 1),
            kind: SolveKind::DottedWeight,
            det_nodes: all_facets(ctx),
        },
    )
}

/// G11 = triangle (2,2,5). Faces: {0,1} and {2,3} dotted, {4..8} Lanner.
fn g11(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_lanner_face(ctx, &[4, 5, 6, 7, 8]);
    let l1: Vec<usize> = (4..=8).collect();
    let step1 = attach_node(
        ctx,
        &seeds,
        0,
        &AttachOpts {
            must_connect_to: l1.clone(),
            ..Default::default()
        },
    )?;
    let step2 = attach_node(
        ctx,
        &step1,
        2,
        &AttachOpts {
            must_connect_to: l1,
            ..Default::default()
        },
    )?;
    // facet 1: the dotted weight on (0,1) is fixed by det = 0 on order 8
    let step3 = attach_node(
        ctx,
        &step2,
        1,
        &AttachOpts {
            dotted: vec![0],
            solve_chain: vec![SolveSpec {
                edge: (0, 1),
                kind: SolveKind::DottedWeight,
                det_nodes: vec![0, 1, 2, 4, 5, 6, 7, 8],
            }],
            ..Default::default()
        },
    )?;
    // facet 3: solve the dotted (2,3), then the angle (3,1) from the full
    // determinant
    let step4 = attach_node(
        ctx,
        &step3,
        3,
        &AttachOpts {
            dotted: vec![2],
            solve_chain: vec![
                SolveSpec {
                    edge: (2, 3),
                    kind: SolveKind::DottedWeight,
                    det_nodes: vec![0, 2, 3, 4, 5, 6, 7, 8],
                },
                SolveSpec {
                    edge: (3, 1),
                    kind: SolveKind::Angle,
                    det_nodes: all_facets(ctx),
                },
            ],
            defer: vec![1],
            ..Default::default()
        },
    )?;
    Ok(step4)
}

// ---------------------------------------------------------------------------
// dimension 5
// ---------------------------------------------------------------------------

/// G10 = (1,1,2,2,2). Faces: {0,1} dotted, {1,2,3}, {2..5}, {4..7},
/// {6,7,0}. Seed the (2,2,2) arc on facets 2..7.
fn g10(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, &[2, 2, 2], &[2, 3, 4, 5, 6, 7])?;
    let mut step1 = Vec::new();
    for target in [2usize, 3] {
        step1.extend(attach_node(
            ctx,
            &seeds,
            1,
            &AttachOpts {
                solve_chain: vec![SolveSpec {
                    edge: (1, target),
                    kind: SolveKind::Angle,
                    det_nodes: vec![1, 2, 3, 4, 5, 6, 7],
                }],
                ..Default::default()
            },
        )?);
    }
    let mut step2 = Vec::new();
    for target in [6usize, 7] {
        step2.extend(attach_node(
            ctx,
            &step1,
            0,
            &AttachOpts {
                dotted: vec![1],
                solve_chain: vec![SolveSpec {
                    edge: (0, target),
                    kind: SolveKind::Angle,
                    det_nodes: vec![0, 2, 3, 4, 5, 6, 7],
                }],
                ..Default::default()
            },
        )?);
    }
    solve_final(
        ctx,
        step2,
        SolveSpec {
            edge: (0, 1),
            kind: SolveKind::DottedWeight,
            det_nodes: all_facets(ctx),
        },
    )
}

/// G9 = (1,1,1,1,4). Faces: {0,1}, {1,2}, {2,3} dotted, {3..7}, {4..7,0}.
/// Seed the (1,4,1) arc on facets 3,4,5,6,7,0.
fn g9(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, &[1, 4, 1], &[3, 4, 5, 6, 7, 0])?;
    let step1 = attach_node(
        ctx,
        &seeds,
        1,
        &AttachOpts {
            dotted: vec![0],
            solve_chain: vec![SolveSpec {
                edge: (1, 0),
                kind: SolveKind::DottedWeight,
                det_nodes: vec![0, 1, 3, 4, 5, 6, 7],
            }],
            ..Default::default()
        },
    )?;
    let step2 = attach_node(
        ctx,
        &step1,
        2,
        &AttachOpts {
            dotted: vec![1, 3],
            solve_chain: vec![
                SolveSpec {
                    edge: (2, 3),
                    kind: SolveKind::DottedWeight,
                    det_nodes: vec![0, 2, 3, 4, 5, 6, 7],
                },
                SolveSpec {
                    edge: (2, 1),
                    kind: SolveKind::DottedWeight,
                    det_nodes: all_facets(ctx),
                },
            ],
            ..Default::default()
        },
    )?;
    Ok(step2)
}

/// G8 = (1,1,1,2,3). Faces: {0,1}, {1,2} dotted, {2,3,4}, {3..7},
/// {5,6,7,0}. Seed the (2,3,1) arc on facets 3,4,5,6,7,0.
fn g8(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, &[2, 3, 1], &[3, 4, 5, 6, 7, 0])?;
    let mut step1 = Vec::new();
    for target in [3usize, 4] {
        step1.extend(attach_node(
            ctx,
            &seeds,
            2,
            &AttachOpts {
                solve_chain: vec![SolveSpec {
                    edge: (2, target),
                    kind: SolveKind::Angle,
                    det_nodes: vec![0, 2, 3, 4, 5, 6, 7],
                }],
                ..Default::default()
            },
        )?);
    }
    let step2 = attach_node(
        ctx,
        &step1,
        1,
        &AttachOpts {
            dotted: vec![0, 2],
            solve_chain: vec![
                SolveSpec {
                    edge: (1, 2),
                    kind: SolveKind::DottedWeight,
                    det_nodes: vec![1, 2, 3, 4, 5, 6, 7],
                },
                SolveSpec {
                    edge: (1, 0),
                    kind: SolveKind::DottedWeight,
                    det_nodes: all_facets(ctx),
                },
            ],
            ..Default::default()
        },
    )?;
    Ok(step2)
}

/// G7 = (1,1,2,1,3). Faces: {0,1} dotted, {1,2,3}, {2,3,4}, {4..7},
/// {5,6,7,0}. Seed the (1,3,1) arc on facets 4,5,6,7,0.
fn g7(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, &[1, 3, 1], &[4, 5, 6, 7, 0])?;
    let step1 = attach_node(
        ctx,
        &seeds,
        2,
        &AttachOpts {
            restricted: vec![(4, vec![3, 4, 5])],
            ..Default::default()
        },
    )?;
    let step2 = attach_node(
        ctx,
        &step1,
        3,
        &AttachOpts {
            solve_chain: vec![SolveSpec {
                edge: (3, 2),
                kind: SolveKind::Angle,
                det_nodes: vec![0, 2, 3, 4, 5, 6, 7],
            }],
            ..Default::default()
        },
    )?;
    let step3 = attach_node(
        ctx,
        &step2,
        1,
        &AttachOpts {
            dotted: vec![0],
            solve_chain: vec![
                SolveSpec {
                    edge: (1, 3),
                    kind: SolveKind::Angle,
                    det_nodes: vec![1, 2, 3, 4, 5, 6, 7],
                },
                SolveSpec {
                    edge: (1, 0),
                    kind: SolveKind::DottedWeight,
                    det_nodes: all_facets(ctx),
                },
            ],
            ..Default::default()
        },
    )?;
    Ok(step3)
}

/// G6 = triangle (2,3,3). Faces: {0,1} dotted, {2,3,4}, {5,6,7}.
fn g6(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let mut out = Vec::new();
    // Branch N: no multiple edges anywhere.
    {
        let seeds = seed_lanner_triangle(ctx, &[2, 3, 4]);
        let s = attach_many(ctx, seeds, &[5, 6, 7], &AttachOpts::default())?;
        out.extend(g6_tail(ctx, s, &[])?);
    }
    // Branch M1: one multiple edge inside face {2,3,4}. The face {5,6,7}
    // case is its mirror image under the Gale symmetry and would only
    // reproduce isomorphic diagrams.
    for (pair, third) in [((3, 4), 2), ((2, 4), 3), ((2, 3), 4)] {
        out.extend(g6_multi_branch(ctx, pair, third, None)?);
    }
    // Branch M12: multiple edges in both faces.
    for (pair1, third1) in [((3, 4), 2), ((2, 4), 3), ((2, 3), 4)] {
        for (pair2, third2) in [((6, 7), 5), ((5, 7), 6), ((5, 6), 7)] {
            out.extend(g6_multi_branch(ctx, pair1, third1, Some((pair2, third2)))?);
        }
    }
    Ok(out)
}

/// Shared tail for G6: attach facets 0 and 1 with the determinant
/// conditions, then the dotted weight.
fn g6_tail(
    ctx: &Ctx,
    states: Vec<Partial>,
    forced_orth_0_and_1: &[usize],
) -> Result<Vec<Partial>, SearchError> {
    let step0 = attach_node(
        ctx,
        &states,
        0,
        &AttachOpts {
            forced_orthogonal: forced_orth_0_and_1.to_vec(),
            det_zero_filters: vec![vec![0, 2, 3, 4, 5, 6, 7]],
            ..Default::default()
        },
    )?;
    let step1 = attach_node(
        ctx,
        &step0,
        1,
        &AttachOpts {
            forced_orthogonal: forced_orth_0_and_1.to_vec(),
            dotted: vec![0],
            det_zero_filters: vec![vec![1, 2, 3, 4, 5, 6, 7]],
            ..Default::default()
        },
    )?;
    solve_final(
        ctx,
        step1,
        SolveSpec {
            edge: (0, 1),
            kind: SolveKind::DottedWeight,
            det_nodes: all_facets(ctx),
        },
    )
}

/// One or two faces of G6 carry a multiple edge: the free pair detaches
/// from everything except the third node of its face, and the free labels
/// are scanned up to the guard cap with exact determinant filters; the
/// paper-facing bound comes from the local determinant inequality (see
/// `locdet_cap_single_bridge`).
fn g6_multi_branch(
    ctx: &Ctx,
    (p1, q1): (usize, usize),
    t1: usize,
    second: Option<((usize, usize), usize)>,
) -> Result<Vec<Partial>, SearchError> {
    let cap = ctx.cfg.guard_cap;
    let mut out = Vec::new();
    let f2_nodes = [5usize, 6, 7];
    for m_free1 in 6..=cap {
        for ma in 2..=5u32 {
            for mb in 2..=5u32 {
                if !crate::diagram::catalog::is_lanner_triple(ma, mb, m_free1) {
                    continue;
                }
                let mut d0 = CoxeterDiagram::new(ctx.d);
                d0.set_angle(t1, p1, ma);
                d0.set_angle(t1, q1, mb);
                d0.set_angle(p1, q1, m_free1);
                match second {
                    None => {
                        // face {5,6,7} has labels <= 5; enumerate via attach
                        let base = Partial::seed(ctx, d0, vec![2, 3, 4]);
                        let forced: Vec<usize> = vec![p1, q1];
                        let s = attach_many_forced(ctx, vec![base], &f2_nodes, &forced)?;
                        out.extend(g6_tail(ctx, s, &[p1, q1])?);
                    }
                    Some(((p2, q2), t2)) => {
                        for m_free2 in 6..=cap {
                            for mc in 2..=5u32 {
                                for md in 2..=5u32 {
                                    if !crate::diagram::catalog::is_lanner_triple(
                                        mc, md, m_free2,
                                    ) {
                                        continue;
                                    }
                                    let mut d = d0.clone();
                                    d.set_angle(t2, p2, mc);
                                    d.set_angle(t2, q2, md);
                                    d.set_angle(p2, q2, m_free2);
                                    // single bridge between the third nodes
                                    for bridge in 3..=5u32 {
                                        let mut dd = d.clone();
                                        dd.set_angle(t1, t2, bridge);
                                        let st = Partial::seed(
                                            ctx,
                                            dd,
                                            vec![2, 3, 4, 5, 6, 7],
                                        );
                                        let faces = ctx.face_sets();
                                        if !st.subsets_ok_skipping_unknown(ctx, t2) {
                                            continue;
                                        }
                                        let _ = &faces;
                                        out.extend(g6_tail(
                                            ctx,
                                            vec![st],
                                            &[p1, q1, p2, q2],
                                        )?);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Attach several nodes in order with the same options.
fn attach_many(
    ctx: &Ctx,
    mut states: Vec<Partial>,
    nodes: &[usize],
    opts: &AttachOpts,
) -> Result<Vec<Partial>, SearchError> {
    for &v in nodes {
        states = attach_node(ctx, &states, v, opts)?;
    }
    Ok(states)
}

fn attach_many_forced(
    ctx: &Ctx,
    mut states: Vec<Partial>,
    nodes: &[usize],
    forced_orth: &[usize],
) -> Result<Vec<Partial>, SearchError> {
    for &v in nodes {
        states = attach_node(
            ctx,
            &states,
            v,
            &AttachOpts {
                forced_orthogonal: forced_orth.to_vec(),
                ..Default::default()
            },
        )?;
    }
    Ok(states)
}

/// G5 = triangle (2,2,4). Faces: {0,1} and {2,3} dotted, {4..7} Lanner.
fn g5(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_lanner_face(ctx, &[4, 5, 6, 7]);
    let l1: Vec<usize> = (4..=7).collect();
    let step1 = attach_node(
        ctx,
        &seeds,
        0,
        &AttachOpts {
            must_connect_to: l1.clone(),
            ..Default::default()
        },
    )?;
    let step2 = attach_node(
        ctx,
        &step1,
        2,
        &AttachOpts {
            must_connect_to: l1,
            ..Default::default()
        },
    )?;
    let step3 = attach_node(
        ctx,
        &step2,
        1,
        &AttachOpts {
            dotted: vec![0],
            solve_chain: vec![SolveSpec {
                edge: (0, 1),
                kind: SolveKind::DottedWeight,
                det_nodes: vec![0, 1, 2, 4, 5, 6, 7],
            }],
            ..Default::default()
        },
    )?;
    let step4 = attach_node(
        ctx,
        &step3,
        3,
        &AttachOpts {
            dotted: vec![2],
            defer: vec![1],
            solve_chain: vec![
                SolveSpec {
                    edge: (2, 3),
                    kind: SolveKind::DottedWeight,
                    det_nodes: vec![0, 2, 3, 4, 5, 6, 7],
                },
                SolveSpec {
                    edge: (3, 1),
                    kind: SolveKind::Angle,
                    det_nodes: all_facets(ctx),
                },
            ],
            ..Default::default()
        },
    )?;
    Ok(step4)
}

// ---------------------------------------------------------------------------
// dimension 4
// ---------------------------------------------------------------------------

/// G3 = (1,1,1,2,2). Faces: {0,1}, {1,2} dotted, {2,3,4}, {3..6},
/// {5,6,0}. Seed the order-4 face {3,4,5,6}.
fn g3(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let mut out = Vec::new();
    // Branch N: all labels <= 5.
    {
        let seeds = seed_lanner_face(ctx, &[3, 4, 5, 6]);
        let s = attach_node(ctx, &seeds, 2, &AttachOpts::default())?;
        let s = attach_node(
            ctx,
            &s,
            0,
            &AttachOpts {
                det_zero_filters: vec![vec![0, 2, 3, 4, 5, 6]],
                ..Default::default()
            },
        )?;
        out.extend(g3_tail(ctx, s)?);
    }
    // Branch M: a multiple edge inside the face {2,3,4} ((3,4) sits inside
    // the order-4 face and cannot be multiple). The face {5,6,0} branch is
    // the mirror image under the Gale symmetry through vertex 1.
    for free_partner in [3usize, 4] {
        let seeds = seed_lanner_face(ctx, &[3, 4, 5, 6]);
        let s = attach_node(
            ctx,
            &seeds,
            2,
            &AttachOpts {
                defer: vec![free_partner],
                ..Default::default()
            },
        )?;
        // detachment: the free pair (2, free_partner) only tolerates
        // angle-neighbors inside {2,3,4}
        let s: Vec<Partial> = s
            .into_iter()
            .filter(|p| g3_detached_ok(p, 2, free_partner))
            .collect();
        let s = attach_node(
            ctx,
            &s,
            0,
            &AttachOpts {
                forced_orthogonal: vec![2, free_partner],
                solve_chain: vec![SolveSpec {
                    edge: (2, free_partner),
                    kind: SolveKind::Angle,
                    det_nodes: vec![0, 2, 3, 4, 5, 6],
                }],
                ..Default::default()
            },
        )?;
        // keep only genuinely multiple solutions; small labels were already
        // found by branch N
        let s: Vec<Partial> = s
            .into_iter()
            .filter(|p| {
                p.d.edge(2, free_partner)
                    .angle()
                    .map_or(false, |m| m >= 6)
            })
            .collect();
        out.extend(g3_tail(ctx, s)?);
    }
    // Branch M2: multiple edges in both order-3 faces, scanned jointly.
    for free_partner in [3usize, 4] {
        for free_partner2 in [5usize, 6] {
            out.extend(g3_double(ctx, free_partner, free_partner2)?);
        }
    }
    Ok(out)
}

fn g3_detached_ok(p: &Partial, a: usize, b: usize) -> bool {
    // nodes a and b must have angle edges only within {2,3,4}
    for &w in &p.attached {
        if w == a || w == b || (2..=4).contains(&w) {
            continue;
        }
        if p.d.edge(a, w).angle().map_or(false, |m| m >= 3)
            || p.d.edge(b, w).angle().map_or(false, |m| m >= 3)
        {
            return false;
        }
    }
    true
}

fn g3_tail(ctx: &Ctx, states: Vec<Partial>) -> Result<Vec<Partial>, SearchError> {
    let step1 = attach_node(
        ctx,
        &states,
        1,
        &AttachOpts {
            dotted: vec![0, 2],
            solve_chain: vec![
                SolveSpec {
                    edge: (1, 2),
                    kind: SolveKind::DottedWeight,
                    det_nodes: vec![1, 2, 3, 4, 5, 6],
                },
                SolveSpec {
                    edge: (1, 0),
                    kind: SolveKind::DottedWeight,
                    det_nodes: all_facets(ctx),
                },
            ],
            ..Default::default()
        },
    )?;
    Ok(step1)
}

/// Both order-3 faces of G3 carry a multiple edge: (2,f1) in {2,3,4} and
/// (0,f2) in {5,6,0}. Both labels are scanned under the guard cap with the
/// exact determinant filters.
fn g3_double(ctx: &Ctx, f1: usize, f2: usize) -> Result<Vec<Partial>, SearchError> {
    let cap = ctx.cfg.guard_cap;
    let t1 = if f1 == 3 { 4 } else { 3 }; // third node of {2,3,4}
    let t2 = if f2 == 5 { 6 } else { 5 }; // third node of {5,6,0}
    let mut out = Vec::new();
    let seeds = seed_lanner_face(ctx, &[3, 4, 5, 6]);
    for base in seeds {
        // the free pairs force near-total detachment; enumerate the few
        // remaining small labels directly
        for m1 in 6..=cap {
            for m2 in 6..=cap {
                for a1 in 2..=5u32 {
                    for a2 in 2..=5u32 {
                        // face {2,3,4}: edges (2,t1)=a1, (2,f1)=m1, (t1,f1) from seed
                        // face {5,6,0}: edges (0,t2)=a2, (0,f2)=m2, (t2,f2) from seed
                        let mut d = base.d.clone();
                        d.set_angle(2, t1, a1);
                        d.set_angle(2, f1, m1);
                        d.set_angle(0, t2, a2);
                        d.set_angle(0, f2, m2);
                        let p = Partial::seed(ctx, d, vec![3, 4, 5, 6, 2, 0]);
                        if !filter::lanner_small(&p.d, &[2, t1.min(f1), t1.max(f1)]) {
                            continue;
                        }
                        if !filter::lanner_small(&p.d, &[0, t2.min(f2), t2.max(f2)]) {
                            continue;
                        }
                        if !p.subsets_ok_skipping_unknown(ctx, 2) {
                            continue;
                        }
                        if !super::solve::det_is_zero(&p.d, &[0, 2, 3, 4, 5, 6])? {
                            continue;
                        }
                        out.extend(g3_tail(ctx, vec![p])?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// G2 = (1,1,1,1,3). Faces: {0,1}, {1,2}, {2,3} dotted, {3,4,5,6},
/// {4,5,6,0}. Seed the (1,3,1) arc on facets 3,4,5,6,0.
fn g2(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let seeds = seed_from_arc(ctx, &[1, 3, 1], &[3, 4, 5, 6, 0])?;
    let step1 = attach_node(
        ctx,
        &seeds,
        1,
        &AttachOpts {
            dotted: vec![0],
            solve_chain: vec![SolveSpec {
                edge: (1, 0),
                kind: SolveKind::DottedWeight,
                det_nodes: vec![0, 1, 3, 4, 5, 6],
            }],
            ..Default::default()
        },
    )?;
    let step2 = attach_node(
        ctx,
        &step1,
        2,
        &AttachOpts {
            dotted: vec![1, 3],
            solve_chain: vec![
                SolveSpec {
                    edge: (2, 3),
                    kind: SolveKind::DottedWeight,
                    det_nodes: vec![0, 2, 3, 4, 5, 6],
                },
                SolveSpec {
                    edge: (2, 1),
                    kind: SolveKind::DottedWeight,
                    det_nodes: all_facets(ctx),
                },
            ],
            ..Default::default()
        },
    )?;
    Ok(step2)
}

/// G1 = triangle (2,2,3). Faces: {0,1} and {2,3} dotted, {4,5,6} Lanner.
fn g1(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let mut out = Vec::new();
    // Branch N: face labels <= 5
    {
        let seeds = seed_lanner_triangle(ctx, &[4, 5, 6]);
        out.extend(g1_tail(ctx, seeds, &[])?);
    }
    // Branch M: one multiple edge in {4,5,6}
    for (pair, third) in [((5usize, 6usize), 4usize), ((4, 6), 5), ((4, 5), 6)] {
        let cap = ctx.cfg.guard_cap;
        for m_free in 6..=cap {
            for ma in 2..=5u32 {
                for mb in 2..=5u32 {
                    if !crate::diagram::catalog::is_lanner_triple(ma, mb, m_free) {
                        continue;
                    }
                    let mut d = CoxeterDiagram::new(ctx.d);
                    d.set_angle(third, pair.0, ma);
                    d.set_angle(third, pair.1, mb);
                    d.set_angle(pair.0, pair.1, m_free);
                    let st = Partial::seed(ctx, d, vec![4, 5, 6]);
                    out.extend(g1_tail(ctx, vec![st], &[pair.0, pair.1])?);
                }
            }
        }
    }
    Ok(out)
}

fn g1_tail(
    ctx: &Ctx,
    seeds: Vec<Partial>,
    forced_orth: &[usize],
) -> Result<Vec<Partial>, SearchError> {
    let l1: Vec<usize> = (4..=6).collect();
    let connect_targets: Vec<usize> = l1
        .iter()
        .copied()
        .filter(|x| !forced_orth.contains(x))
        .collect();
    let step1 = attach_node(
        ctx,
        &seeds,
        0,
        &AttachOpts {
            forced_orthogonal: forced_orth.to_vec(),
            must_connect_to: connect_targets.clone(),
            ..Default::default()
        },
    )?;
    let step2 = attach_node(
        ctx,
        &step1,
        2,
        &AttachOpts {
            forced_orthogonal: forced_orth.to_vec(),
            must_connect_to: connect_targets,
            ..Default::default()
        },
    )?;
    let step3 = attach_node(
        ctx,
        &step2,
        1,
        &AttachOpts {
            forced_orthogonal: forced_orth.to_vec(),
            dotted: vec![0],
            solve_chain: vec![SolveSpec {
                edge: (0, 1),
                kind: SolveKind::DottedWeight,
                det_nodes: vec![0, 1, 2, 4, 5, 6],
            }],
            ..Default::default()
        },
    )?;
    let step4 = attach_node(
        ctx,
        &step3,
        3,
        &AttachOpts {
            forced_orthogonal: forced_orth.to_vec(),
            dotted: vec![2],
            defer: vec![1],
            solve_chain: vec![
                SolveSpec {
                    edge: (2, 3),
                    kind: SolveKind::DottedWeight,
                    det_nodes: vec![0, 2, 3, 4, 5, 6],
                },
                SolveSpec {
                    edge: (3, 1),
                    kind: SolveKind::Angle,
                    det_nodes: all_facets(ctx),
                },
            ],
            ..Default::default()
        },
    )?;
    Ok(step4)
}

/// G4 = (1,1,2,1,2). Faces: {0,1} dotted, {1,2,3}, {2,3,4}, {4,5,6},
/// {5,6,0}. The pairs (2,3) and (5,6) sit in two faces each and are the
/// ones that can be multiple while staying attached through nodes 1 and 4
/// (resp. 4 and 0).
fn g4(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let mut out = Vec::new();
    out.extend(g4_main(ctx)?);
    out.extend(g4_exotic(ctx)?);
    Ok(out)
}

/// The main branch: every label at most 5, staged attachment. The faces
/// force det = 0 on both 6-node subsets before the dotted weight exists.
fn g4_main(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    // seed the shared face {2,3,4} as a triangle, then grow 1, 5, 6, 0
    let seeds = seed_lanner_triangle(ctx, &[2, 3, 4]);
    let s = attach_node(ctx, &seeds, 1, &AttachOpts::default())?;
    let s = attach_node(ctx, &s, 5, &AttachOpts::default())?;
    let s = attach_node(
        ctx,
        &s,
        6,
        &AttachOpts {
            det_zero_filters: vec![vec![1, 2, 3, 4, 5, 6]],
            ..Default::default()
        },
    )?;
    let s = attach_node(
        ctx,
        &s,
        0,
        &AttachOpts {
            dotted: vec![1],
            det_zero_filters: vec![vec![0, 2, 3, 4, 5, 6]],
            ..Default::default()
        },
    )?;
    solve_final(
        ctx,
        s,
        SolveSpec {
            edge: (0, 1),
            kind: SolveKind::DottedWeight,
            det_nodes: all_facets(ctx),
        },
    )
}

/// Multiple-edge branches of G4. Free pairs are joint subsets of
/// {(2,3), (5,6), (1,2), (0,5)} (partners 3/6 are mirror images under the
/// within-vertex swaps, and the Gale reflection swaps the two sides), with
/// detachment forced and the free labels scanned to the guard cap under
/// exact determinant conditions.
fn g4_exotic(ctx: &Ctx) -> Result<Vec<Partial>, SearchError> {
    let mut out = Vec::new();
    let combos: &[&[(usize, usize)]] = &[
        &[(2, 3)],
        &[(5, 6)],
        &[(2, 3), (5, 6)],
        &[(1, 2)],
        &[(0, 5)],
        &[(1, 2), (5, 6)],
        &[(0, 5), (2, 3)],
        &[(1, 2), (0, 5)],
        &[(1, 2), (2, 3)],
        &[(0, 5), (5, 6)],
        &[(1, 2), (2, 3), (5, 6)],
        &[(0, 5), (5, 6), (2, 3)],
        &[(1, 2), (0, 5), (2, 3)],
        &[(1, 2), (0, 5), (5, 6)],
    ];
    for frees in combos {
        out.extend(g4_scan(ctx, frees)?);
    }
    Ok(out)
}

/// Scan one free-edge combination of G4: free labels in [6, cap], all
/// other labels at most 5 with the detachment closure applied, and every
/// 6-node determinant condition checked exactly.
fn g4_scan(ctx: &Ctx, frees: &[(usize, usize)]) -> Result<Vec<Partial>, SearchError> {
    let cap = ctx.cfg.guard_cap;
    let faces = ctx.face_sets();
    // nodes allowed as angle-neighbors of a free endpoint: those making a
    // face triple with the free pair
    let allowed_neighbor = |i: usize, j: usize, w: usize| -> bool {
        let mut t = [i, j, w];
        t.sort_unstable();
        faces
            .iter()
            .any(|f| t.iter().all(|x| f.contains(x)))
    };
    // collect the forced-orthogonal pair set
    let mut forced: HashSet<(usize, usize)> = HashSet::new();
    for &(a, b) in frees {
        for w in 0..ctx.d {
            if w == a || w == b {
                continue;
            }
            if !allowed_neighbor(a, b, w) {
                for &e in &[(a, w), (b, w)] {
                    let key = (e.0.min(e.1), e.0.max(e.1));
                    if !ctx.is_dotted_pair(key.0, key.1) {
                        forced.insert(key);
                    }
                }
            }
        }
    }
    for &(a, b) in frees {
        let key = (a.min(b), a.max(b));
        forced.remove(&key);
    }
    // enumerable pairs: everything except (0,1)-dotted, frees, forced
    let mut enumerable: Vec<(usize, usize)> = Vec::new();
    for i in 0..ctx.d {
        for j in i + 1..ctx.d {
            let key = (i, j);
            if ctx.is_dotted_pair(i, j)
                || frees.iter().any(|&(a, b)| (a.min(b), a.max(b)) == key)
                || forced.contains(&key)
            {
                continue;
            }
            enumerable.push(key);
        }
    }
    let mut out = Vec::new();
    let free_vec: Vec<(usize, usize)> = frees.to_vec();
    let mut free_labels = vec![6u32; free_vec.len()];
    loop {
        // enumerate the small labels recursively under interval filters
        let mut d = CoxeterDiagram::new(ctx.d);
        for (k, &(a, b)) in free_vec.iter().enumerate() {
            d.set_angle(a, b, free_labels[k]);
        }
        g4_scan_rec(ctx, &mut d, &enumerable, 0, &faces, &mut out)?;
        // odometer over the free labels
        let mut k = 0;
        loop {
            if k == free_labels.len() {
                return Ok(out);
            }
            free_labels[k] += 1;
            if free_labels[k] <= cap {
                break;
            }
            free_labels[k] = 6;
            k += 1;
        }
    }
}

fn g4_scan_rec(
    ctx: &Ctx,
    d: &mut CoxeterDiagram,
    pairs: &[(usize, usize)],
    k: usize,
    faces: &[&[usize]],
    out: &mut Vec<Partial>,
) -> Result<(), SearchError> {
    if k == pairs.len() {
        // full assignment: check the two 6-node determinant conditions
        let p = Partial::seed(ctx, d.clone(), vec![2, 3, 4, 1, 5, 6, 0]);
        for focus in [0usize, 1] {
            if !p.subsets_ok_skipping_unknown(ctx, focus) {
                return Ok(());
            }
        }
        if !super::solve::det_is_zero(&p.d, &[1, 2, 3, 4, 5, 6])? {
            return Ok(());
        }
        if !super::solve::det_is_zero(&p.d, &[0, 2, 3, 4, 5, 6])? {
            return Ok(());
        }
        let solved = solve_final(
            ctx,
            vec![p],
            SolveSpec {
                edge: (0, 1),
                kind: SolveKind::DottedWeight,
                det_nodes: all_facets(ctx),
            },
        )?;
        out.extend(solved);
        return Ok(());
    }
    let (i, j) = pairs[k];
    for m in [2u32, 3, 4, 5] {
        d.set_angle(i, j, m);
        if m >= 3 {
            // triple screen against the already assigned region
            let assigned: Vec<usize> = (0..ctx.d).collect();
            if !filter::pair_triples_ok(d, &assigned, i, j, faces) {
                continue;
            }
        }
        g4_scan_rec(ctx, d, pairs, k + 1, faces, out)?;
    }
    d.set_angle(i, j, 2);
    Ok(())
}

// ---------------------------------------------------------------------------
// strategy documentation
// ---------------------------------------------------------------------------

pub fn strategy_docs() -> Vec<StrategyDoc> {
    let mk = |id: usize, outcome: &'static str, steps: Vec<&str>| {
        let gale = crate::gale::gale_by_id(id).unwrap();
        StrategyDoc {
            gale_id: id,
            labels: gale.labels().to_vec(),
            dim: gale.dim(),
            outcome,
            steps: steps.into_iter().map(|s| s.to_string()).collect(),
        }
    };
    vec![
        mk(1, "3 polytopes", vec![
            "faces: dotted {0,1}, dotted {2,3}, Lanner triangle {4,5,6}",
            "branch N: seed each Lanner triangle with labels <= 5 on {4,5,6}",
            "branch M: one multiple edge in {4,5,6}; its endpoints detach, label scanned 6..cap (bounded by the local determinant inequality det(face, third) = 1 - det(rest, third) on the vanishing 6-node determinant)",
            "attach 0 joined to the triangle; attach 2 joined to the triangle (one node per dotted pair meets the triangle, else the span of the triangle and a dotted pair is superhyperbolic)",
            "attach 1: dotted (0,1) solved from det{0,1,2,4,5,6} = 0, weight > 1",
            "attach 3: dotted (2,3) solved from det{0,2,3,4,5,6} = 0; then the angle (3,1) from the full determinant, weight recognized as cos(pi/m)",
            "verify signature (4,1,2) and the Lanner-to-face matching",
        ]),
        mk(2, "29 polytopes", vec![
            "faces: dotted {0,1}, {1,2}, {2,3}; order-4 faces {3,4,5,6}, {4,5,6,0}",
            "seed the arc (1,3,1) on facets 3,4,5,6,0 (five realizations)",
            "attach 1: angles to the seed <= 5, dotted (1,0) solved from det{0,1,3,4,5,6} = 0",
            "attach 2: dotted (2,3) solved from det{0,2,3,4,5,6} = 0, then dotted (2,1) from the full determinant",
            "verify signature (4,1,2)",
        ]),
        mk(3, "no polytopes", vec![
            "faces: dotted {0,1}, {1,2}; order-3 faces {2,3,4}, {5,6,0}; order-4 face {3,4,5,6}",
            "branch N: seed the order-4 face from the Lanner catalog, attach 2 then 0 with det{0,2,3,4,5,6} = 0",
            "branch M: multiple edge (2,3) or (2,4): endpoints detach, label solved from det{0,2,3,4,5,6} = 0 (multiple solutions only); the face {5,6,0} branch is the mirror image",
            "branch M2: multiple edges in both order-3 faces, scanned jointly to the guard cap under the exact determinant conditions",
            "tail: attach 1 with dotted (1,2) solved from det{1,..,6} = 0 and dotted (1,0) from the full determinant",
            "verify signature (4,1,2)",
        ]),
        mk(4, "8 polytopes", vec![
            "faces: dotted {0,1}; order-3 faces {1,2,3}, {2,3,4}, {4,5,6}, {5,6,0}",
            "main branch: labels <= 5; seed the shared triangle {2,3,4}, attach 1, 5, 6 with det{1,...,6} = 0, attach 0 with det{0,2,...,6} = 0",
            "multiple-edge branches: free subsets of {(2,3),(5,6),(1,2),(0,5)} (partner choice and side are symmetric), endpoints detached by the face rule, free labels scanned 6..cap under both 6-node determinant conditions (the caps are guards: the local determinant bound |det(face,third)| <= 1 + 16/|det L(2,3,7)| keeps multiple labels near 101)",
            "dotted (0,1) from the full determinant; verify signature (4,1,2)",
        ]),
        mk(5, "no polytopes", vec![
            "faces: dotted {0,1}, {2,3}; order-4 Lanner face {4,5,6,7}",
            "seed the order-4 face; attach 0 and 2 joined to it",
            "attach 1: dotted (0,1) solved from det{0,1,2,4,...,7} = 0",
            "attach 3: dotted (2,3) solved from det{0,2,3,4,...,7} = 0, then angle (3,1) from the full determinant",
            "verify signature (5,1,2)",
        ]),
        mk(6, "no polytopes", vec![
            "faces: dotted {0,1}; order-3 faces {2,3,4}, {5,6,7}",
            "branch N: both triangles with labels <= 5 and bridges <= 5",
            "branch M1: one triangle carries a multiple edge (endpoints detach, scan 6..cap); the other-face branch is the mirror image",
            "branch M12: both triangles carry multiple edges; single bridge between the third nodes; joint scan under the local-determinant product bound",
            "tail: attach 0 with det{0,2,...,7} = 0, attach 1 with det{1,2,...,7} = 0, dotted (0,1) from the full determinant",
            "verify signature (5,1,2)",
        ]),
        mk(7, "no polytopes", vec![
            "faces: dotted {0,1}; order-3 faces {1,2,3}, {2,3,4}; order-4 faces {4,...,7}, {5,6,7,0}",
            "seed the arc (1,3,1) on facets 4,5,6,7,0",
            "attach 2 with (2,4) >= 3 (naming choice within the Gale vertex)",
            "attach 3: angle (3,2) solved from det{0,2,...,7} = 0",
            "attach 1: angle (1,3) solved from det{1,...,7} = 0, dotted (1,0) from the full determinant",
            "verify signature (5,1,2)",
        ]),
        mk(8, "no polytopes", vec![
            "faces: dotted {0,1}, {1,2}; order-3 face {2,3,4}; {3,...,7}, {5,6,7,0}",
            "seed the arc (2,3,1) on facets 3,4,5,6,7,0 (nine realizations)",
            "attach 2: angle (2,3) or (2,4) solved from det{0,2,...,7} = 0",
            "attach 1: dotted (1,2) solved from det{1,...,7} = 0, dotted (1,0) from the full determinant",
            "verify signature (5,1,2)",
        ]),
        mk(9, "15 polytopes", vec![
            "faces: dotted {0,1}, {1,2}, {2,3}; order-5 faces {3,...,7}, {4,...,7,0}",
            "seed the arc (1,4,1) on facets 3,4,5,6,7,0 (three realizations)",
            "attach 1: dotted (1,0) solved from det{0,1,3,...,7} = 0",
            "attach 2: dotted (2,3) solved from det{0,2,3,...,7} = 0, then dotted (2,1) from the full determinant",
            "verify signature (5,1,2)",
        ]),
        mk(10, "1 polytope", vec![
            "faces: dotted {0,1}; order-3 faces {1,2,3}, {6,7,0}; order-4 faces {2,...,5}, {4,...,7}",
            "seed the arc (2,2,2) on facets 2..7 (unique realization)",
            "attach 1: angle (1,2) or (1,3) solved from det{1,...,7} = 0",
            "attach 0: angle (0,6) or (0,7) solved from det{0,2,...,7} = 0",
            "dotted (0,1) from the full determinant; verify signature (5,1,2)",
        ]),
        mk(11, "no polytopes", vec![
            "faces: dotted {0,1}, {2,3}; order-5 Lanner face {4,...,8}",
            "seed the order-5 face from the Lanner catalog",
            "attach 0 and 2 joined to it",
            "attach 1: dotted (0,1) solved from det{0,1,2,4,...,8} = 0",
            "attach 3: dotted (2,3) solved from det{1,2,3,4,...,8}\\{1} = det{0,2,3,4,...,8} = 0, then angle (3,1) from the full determinant",
            "verify signature (6,1,2)",
        ]),
        mk(12, "no polytopes", vec![
            "faces: sizes (2,3,4) on a triangle; the arc of two adjacent vertices labeled (3,4) has no realization (trusted input; see the corroboration mode)",
        ]),
        mk(13, "2 polytopes", vec![
            "faces: dotted {0,1}; order-3 faces {1,2,3}, {2,3,4}; order-5 faces {4,...,8}, {5,...,8,0}",
            "seed the arc (1,4,1) on facets 4,5,6,7,8,0 (three realizations)",
            "attach 2 with (2,4) >= 3 (naming choice within the Gale vertex)",
            "attach 3: angle (3,2) solved from det{0,2,3,...,8} = 0",
            "attach 1: angle (1,3) solved from det{1,...,8} = 0, dotted (0,1) from the full determinant",
            "verify signature (6,1,2)",
        ]),
        mk(14, "1 polytope", vec![
            "faces: dotted {0,1}; order-3 faces {1,2,3}, {7,8,0}; order-5 faces {2,...,6}, {4,...,8}",
            "seed the arc (2,3,2) on facets 2..8 (unique realization)",
            "attach 1: angle (1,2) or (1,3) solved from det{1,...,8} = 0",
            "attach 0: angle (0,7) or (0,8) solved from det{0,2,...,8} = 0",
            "dotted (0,1) from the full determinant; verify signature (6,1,2)",
        ]),
        mk(15, "no polytopes", vec![
            "the arc (2,2,3) on facets 2..6 has no realization (re-derived by search)",
        ]),
        mk(16, "no polytopes", vec![
            "the arc (3,1,3) on facets 2..7 has no realization (re-derived by search)",
        ]),
        mk(17, "no polytopes", vec![
            "faces: sizes (2,4,4) on a triangle; the arc (4,4) has no realization (trusted input)",
        ]),
        mk(18, "no polytopes", vec![
            "faces: sizes (2,3,5) on a triangle; the arc (5,3) has no realization (trusted input)",
        ]),
        mk(19, "no polytopes", vec![
            "the arc (3,1,4,1) on facets 2..9 has no realization (re-derived by search)",
        ]),
        mk(20, "no polytopes", vec![
            "faces: dotted {0,1}; {1,...,4}, {2,...,6}, {5,...,9}, {7,8,9,0}",
            "seed the arc (3,2,3) on facets 2..9 (unique realization)",
            "attach 1 under det{1,...,9} = 0",
            "attach 0 under det{0,2,...,9} = 0, dotted (0,1) from the full determinant",
            "verify signature (7,1,2)",
        ]),
    ]
}
