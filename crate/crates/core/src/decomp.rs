//! Structural decomposition: finding good cut-partitions, building blocks,
//! and iterating to an extreme decomposition whose A-block is basic.
//!
//! A good cut-partition (A,B,C) splits the vertex set so that A and B are
//! nonempty and strongly anti-complete, and C is either a strong clique of
//! size at most three (type clique) or a stable pair admitting a narrow
//! path between its vertices on both sides (type stable).

use crate::error::{internal, invalid_argument, Result};
use crate::trigraph::{Adjacency, Trigraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutKind {
    Clique,
    Stable,
}

impl std::fmt::Display for CutKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CutKind::Clique => write!(f, "clique"),
            CutKind::Stable => write!(f, "stable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPartition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub kind: CutKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// One block of a decomposition: the induced subtrigraph on X ∪ C (with the
/// cutset pair made semi-adjacent for type stable), plus the relabeling back
/// to the host. Cutset vertices are matched between blocks through
/// `to_parent`.
#[derive(Debug, Clone)]
pub struct Block {
    pub trigraph: Trigraph,
    pub side: Side,
    pub to_parent: Vec<usize>,
}

/// Checks every invariant of a good cut-partition against `g`.
pub fn validate_cut_partition(g: &Trigraph, p: &CutPartition) -> Result<()> {
    let n = g.n();
    let total = p.a.len() + p.b.len() + p.c.len();
    let union = p.a.union(&p.b).union(&p.c);
    if total != n || union.len() != n || union.iter().any(|v| v >= n) {
        return invalid_argument("cut-partition does not partition the vertex set");
    }
    if p.a.is_empty() || p.b.is_empty() {
        return invalid_argument("cut-partition sides must be nonempty");
    }
    for u in p.a.iter() {
        for v in p.b.iter() {
            if g.theta(u, v) != Adjacency::StrongAnti {
                return invalid_argument(format!(
                    "cut-partition sides not strongly anti-complete: pair {u} {v}"
                ));
            }
        }
    }
    match p.kind {
        CutKind::Clique => {
            if p.c.len() > 3 {
                return invalid_argument("clique cutset larger than three");
            }
            if !g.is_strong_clique(&p.c)? {
                return invalid_argument("cutset is not a strong clique");
            }
        }
        CutKind::Stable => {
            if p.c.len() != 2 {
                return invalid_argument("stable cutset must have exactly two vertices");
            }
            if !g.is_stable_set(&p.c)? {
                return invalid_argument("cutset is not a stable set");
            }
            let c1 = p.c.as_slice()[0];
            let c2 = p.c.as_slice()[1];
            for side in [&p.a, &p.b] {
                let ind = g.induced(&side.union(&p.c))?;
                let l1 = ind.child_of(c1).unwrap();
                let l2 = ind.child_of(c2).unwrap();
                if ind.trigraph.narrow_path(l1, l2)?.is_none() {
                    return invalid_argument(
                        "no narrow path between the stable cutset vertices on one side",
                    );
                }
            }
        }
    }
    Ok(())
}

/// The X-block of `g` with respect to `part`. Validates the partition.
pub fn make_block(g: &Trigraph, part: &CutPartition, side: Side) -> Result<Block> {
    validate_cut_partition(g, part)?;
    make_block_unchecked(g, part, side)
}

/// Block construction without re-validating the partition; used on
/// partitions this module itself produced.
pub(crate) fn make_block_unchecked(g: &Trigraph, part: &CutPartition, side: Side) -> Result<Block> {
    let x = match side {
        Side::A => &part.a,
        Side::B => &part.b,
    };
    let ind = g.induced(&x.union(&part.c))?;
    let mut trigraph = ind.trigraph;
    if part.kind == CutKind::Stable {
        let c1 = ind.to_parent.binary_search(&part.c.as_slice()[0]).unwrap();
        let c2 = ind.to_parent.binary_search(&part.c.as_slice()[1]).unwrap();
        trigraph.set(c1, c2, Adjacency::Semi)?;
    }
    Ok(Block {
        trigraph,
        side,
        to_parent: ind.to_parent,
    })
}

/// Groups the components of `g \ c` into (first component, rest), where the
/// first component is the one holding the smallest vertex label.
fn split_components(g: &Trigraph, c: &VertexSet, kind: CutKind) -> CutPartition {
    let adj = g.full_adjacency();
    let n = g.n();
    let mut blocked = vec![false; n];
    for v in c.iter() {
        blocked[v] = true;
    }
    let mut seen = vec![false; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if blocked[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !blocked[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comps.push(comp);
    }
    debug_assert!(comps.len() >= 2);
    let a = VertexSet::from_iter(comps[0].iter().copied());
    let b = VertexSet::from_iter(comps[1..].iter().flatten().copied());
    CutPartition {
        a,
        b,
        c: c.clone(),
        kind,
    }
}

/// Articulation points of the graph on `adj`, skipping `skip` entirely.
/// Works per component; returns the points in ascending order.
fn articulation_points(adj: &[Vec<usize>], skip: usize) -> Vec<usize> {
    let n = adj.len();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut artic = vec![false; n];
    let mut time = 0usize;

    // Iterative DFS; each frame tracks the neighbor cursor.
    for root in 0..n {
        if root == skip || disc[root] != 0 {
            continue;
        }
        let mut root_children = 0usize;
        let mut stack: Vec<(usize, usize, usize)> = Vec::new(); // (v, parent, cursor)
        time += 1;
        disc[root] = time;
        low[root] = time;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut cursor)) = stack.last_mut() {
            if *cursor < adj[v].len() {
                let w = adj[v][*cursor];
                *cursor += 1;
                if w == skip || w == parent {
                    continue;
                }
                if disc[w] == 0 {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if p == root {
                        root_children += 1;
                    } else if low[v] >= disc[p] {
                        artic[p] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            artic[root] = true;
        }
    }
    (0..n).filter(|&v| artic[v]).collect()
}

/// True when removing the vertices of `c` disconnects the graph on `adj`.
fn is_cutset(adj: &[Vec<usize>], c: &[usize]) -> bool {
    let n = adj.len();
    let mut blocked = vec![false; n];
    for &v in c {
        blocked[v] = true;
    }
    let start = match (0..n).find(|&v| !blocked[v]) {
        Some(s) => s,
        None => return false,
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut reached = 1usize;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !blocked[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached < n - c.len()
}

/// Finds a good cut-partition, or `None` when no good cut-partition exists.
///
/// Candidate cutsets are scanned in a fixed order: the empty clique, then
/// single vertices, strongly adjacent pairs and strong triangles (each group
/// in lexicographic label order), then stable pairs lexicographically. A
/// type-stable partition is therefore only returned when no clique cutset of
/// size at most three exists, which makes the narrow-path side conditions
/// hold automatically.
pub fn find_good_cut_partition(g: &Trigraph) -> Option<CutPartition> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    // Empty cutset: the trigraph itself is disconnected.
    if !g.is_connected() {
        return Some(split_components(g, &VertexSet::new(), CutKind::Clique));
    }
    let adj = g.full_adjacency();

    // Cut vertices.
    let artic = articulation_points(&adj, usize::MAX);
    if let Some(&v) = artic.first() {
        return Some(split_components(g, &VertexSet::singleton(v), CutKind::Clique));
    }

    // All cutset pairs {u,v}: with no cut vertex present, {u,v} disconnects
    // g exactly when v is an articulation point of g \ u. One sweep collects
    // every pair; it is reused for the stable stage below.
    let mut pair_cuts: Vec<Vec<usize>> = Vec::with_capacity(n);
    for u in 0..n {
        pair_cuts.push(articulation_points(&adj, u));
    }
    for (u, cuts) in pair_cuts.iter().enumerate() {
        for &v in cuts {
            if v > u && g.theta(u, v) == Adjacency::StrongAdj {
                return Some(split_components(
                    g,
                    &VertexSet::from_iter([u, v]),
                    CutKind::Clique,
                ));
            }
        }
    }

    // Strong triangles, lexicographic.
    for u in 0..n {
        for v in (u + 1)..n {
            if g.theta(u, v) != Adjacency::StrongAdj {
                continue;
            }
            for w in (v + 1)..n {
                if g.theta(u, w) == Adjacency::StrongAdj
                    && g.theta(v, w) == Adjacency::StrongAdj
                    && is_cutset(&adj, &[u, v, w])
                {
                    return Some(split_components(
                        g,
                        &VertexSet::from_iter([u, v, w]),
                        CutKind::Clique,
                    ));
                }
            }
        }
    }

    // Stable pairs, lexicographic. Reaching this point certifies there is no
    // clique cutset, so g is connected with no cut vertex and the side
    // conditions of a type-stable partition hold.
    for (u, cuts) in pair_cuts.iter().enumerate() {
        for &v in cuts {
            if v > u && g.theta(u, v).is_anti_adjacent() {
                return Some(split_components(
                    g,
                    &VertexSet::from_iter([u, v]),
                    CutKind::Stable,
                ));
            }
        }
    }
    None
}

/// Result of one refinement round.
#[derive(Debug, Clone)]
pub enum Refinement {
    /// The A-block admits no good cut-partition (so it is basic on valid input).
    NoneInABlock,
    /// A good cut-partition of the host whose A ∪ C side strictly shrank.
    Refined(CutPartition),
}

/// Lifts a good cut-partition of the A-block back to the host, strictly
/// shrinking A ∪ C, or certifies that the A-block has none.
pub fn refine_cut_partition(g: &Trigraph, part: &CutPartition) -> Result<Refinement> {
    validate_cut_partition(g, part)?;
    refine_unchecked(g, part)
}

fn refine_unchecked(g: &Trigraph, part: &CutPartition) -> Result<Refinement> {
    let a_block = make_block_unchecked(g, part, Side::A)?;
    let inner = match find_good_cut_partition(&a_block.trigraph) {
        None => return Ok(Refinement::NoneInABlock),
        Some(p) => p,
    };
    let lift = |s: &VertexSet| VertexSet::from_iter(s.iter().map(|v| a_block.to_parent[v]));
    let mut a1 = lift(&inner.a);
    let mut b1 = lift(&inner.b);
    let c1 = lift(&inner.c);

    // C is a clique of the A-block, so it cannot straddle the two sides of
    // the inner partition; orient so that C lands in B1 ∪ C1.
    let b1c1 = b1.union(&c1);
    if !part.c.is_subset_of(&b1c1) {
        std::mem::swap(&mut a1, &mut b1);
        if !part.c.is_subset_of(&b1.union(&c1)) {
            return internal("cutset straddles both sides of the refined partition");
        }
    }
    let refined = CutPartition {
        a: a1,
        b: part.b.union(&b1),
        c: c1,
        kind: inner.kind,
    };
    if refined.a.len() + refined.c.len() >= part.a.len() + part.c.len() {
        return internal("refinement did not shrink the A-side");
    }
    Ok(Refinement::Refined(refined))
}

/// Outcome of the extreme decomposition search.
#[derive(Debug, Clone)]
pub enum ExtremeCut {
    /// No good cut-partition at all; the trigraph itself is basic on valid input.
    Basic,
    /// A good cut-partition whose A-block admits no good cut-partition.
    Partition(CutPartition),
}

/// Repeatedly refines an initial good cut-partition until the A-block
/// admits none. On a valid input trigraph the A-block of the returned
/// partition is a basic trigraph.
pub fn find_extreme_cut_partition(g: &Trigraph) -> Result<ExtremeCut> {
    let mut part = match find_good_cut_partition(g) {
        None => return Ok(ExtremeCut::Basic),
        Some(p) => p,
    };
    // Each round strictly shrinks A ∪ C.
    for _ in 0..=g.n() {
        match refine_unchecked(g, &part)? {
            Refinement::NoneInABlock => return Ok(ExtremeCut::Partition(part)),
            Refinement::Refined(p) => part = p,
        }
    }
    internal("refinement failed to terminate")
}
