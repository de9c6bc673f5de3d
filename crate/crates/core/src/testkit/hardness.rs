//! Reduction constructions with verifiable stability identities:
//! double subdivision (wheel-free hardness), 2-extensions (extended
//! bipartite hardness), and the all-semi bipartite trigraph whose stability
//! number encodes the stability number of an arbitrary source graph.

use crate::error::{invalid_argument, Result};
use crate::trigraph::{Adjacency, Trigraph, VertexSet};
use crate::weight::{WeightFunction, WeightedTrigraph};

/// Subdivides every edge twice. The result is wheel-free, and its stability
/// number is the source's plus the edge count.
pub fn poljak_double_subdivision(h: &Trigraph) -> Result<Trigraph> {
    if !h.is_graph() {
        return invalid_argument("double subdivision expects a graph");
    }
    let n = h.n();
    let edges = h.strong_pairs();
    let mut g = Trigraph::new(n + 2 * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let a = n + 2 * i;
        let b = n + 2 * i + 1;
        g.set(u, a, Adjacency::StrongAdj)?;
        g.set(a, b, Adjacency::StrongAdj)?;
        g.set(b, v, Adjacency::StrongAdj)?;
    }
    Ok(g)
}

/// A 2-extension applied at a degree-two vertex `v` with non-adjacent
/// neighbors: `v` is removed and replaced by a path a-x1-x2-x3-x4-b plus an
/// apex adjacent to x1..x4. Vertices above `v` shift down by one; the five
/// new vertices take the highest labels (x1, x2, x3, x4, apex in order).
pub fn two_extension(g: &Trigraph, v: usize) -> Result<Trigraph> {
    if !g.is_graph() {
        return invalid_argument("two_extension expects a graph");
    }
    if v >= g.n() {
        return invalid_argument(format!("vertex {v} out of range"));
    }
    let neighbors: Vec<usize> = (0..g.n())
        .filter(|&u| u != v && g.theta(u, v) == Adjacency::StrongAdj)
        .collect();
    let (a, b) = match neighbors.as_slice() {
        &[a, b] => (a, b),
        _ => return invalid_argument(format!("vertex {v} does not have degree two")),
    };
    if g.theta(a, b) == Adjacency::StrongAdj {
        return invalid_argument(format!("neighbors of {v} are adjacent"));
    }
    let shift = |u: usize| if u > v { u - 1 } else { u };
    let base = g.n() - 1;
    let x1 = base;
    let x4 = base + 3;
    let apex = base + 4;
    let mut out = Trigraph::new(g.n() + 4);
    for p in 0..g.n() {
        for q in (p + 1)..g.n() {
            if p != v && q != v && g.theta(p, q) == Adjacency::StrongAdj {
                out.set(shift(p), shift(q), Adjacency::StrongAdj)?;
            }
        }
    }
    out.set(shift(a), x1, Adjacency::StrongAdj)?;
    for x in x1..x4 {
        out.set(x, x + 1, Adjacency::StrongAdj)?;
    }
    out.set(x4, shift(b), Adjacency::StrongAdj)?;
    for x in x1..=x4 {
        out.set(apex, x, Adjacency::StrongAdj)?;
    }
    Ok(out)
}

/// Subdivides every edge of `g` once and then applies a 2-extension to each
/// subdivision vertex. The result satisfies alpha = alpha(g) + 2|E(g)|.
pub fn extended_bipartite_of(g: &Trigraph) -> Result<Trigraph> {
    if !g.is_graph() {
        return invalid_argument("extended bipartite construction expects a graph");
    }
    let n = g.n();
    let edges = g.strong_pairs();
    let mut h = Trigraph::new(n + edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        h.set(u, n + i, Adjacency::StrongAdj)?;
        h.set(n + i, v, Adjacency::StrongAdj)?;
    }
    // Extend each subdivision vertex; labels above the extended vertex slip
    // down by one, so pending targets are adjusted as we go.
    let mut pending: Vec<usize> = (n..n + edges.len()).collect();
    while let Some(v) = pending.pop() {
        h = two_extension(&h, v)?;
        for p in pending.iter_mut() {
            if *p > v {
                *p -= 1;
            }
        }
    }
    Ok(h)
}

/// The all-semi bipartite trigraph encoding a source graph: each edge,
/// oriented low-to-high, becomes a narrow path through a fresh subdivision
/// vertex, every adjacency is semi, and the weights are the asymmetric
/// 0/1 pattern that makes alpha equal alpha(source) + 2|E(source)|.
#[derive(Debug, Clone)]
pub struct HardnessInstance {
    pub wt: WeightedTrigraph,
    pub source: Trigraph,
    /// Arcs of the lexicographic orientation, index-aligned with
    /// `subdivision_vertex`.
    pub arcs: Vec<(usize, usize)>,
    pub subdivision_vertex: Vec<usize>,
}

pub fn bipartite_trigraph_hardness(h: &Trigraph) -> Result<HardnessInstance> {
    if !h.is_graph() {
        return invalid_argument("hardness construction expects a graph");
    }
    let n = h.n();
    let arcs = h.strong_pairs();
    let mut g = Trigraph::new(n + arcs.len());
    let mut w = WeightFunction::new();
    for v in 0..g.n() {
        w.set_vertex(v, 1);
    }
    let mut subdivision_vertex = Vec::with_capacity(arcs.len());
    for (i, &(u, v)) in arcs.iter().enumerate() {
        let x = n + i;
        subdivision_vertex.push(x);
        g.set(u, x, Adjacency::Semi)?;
        g.set(x, v, Adjacency::Semi)?;
        w.set_pair(u, x, 1);
        w.set_pair(x, v, 1);
        w.set_directed(x, v, 1);
        w.set_directed(v, x, 1);
    }
    let wt = WeightedTrigraph::new(g, w)?;
    Ok(HardnessInstance {
        wt,
        source: h.clone(),
        arcs,
        subdivision_vertex,
    })
}

/// The contribution of one arc to the weight of `s`: the weight of
/// `s ∩ {u, x, v}` within the induced three-vertex trigraph, minus the
/// vertex weights of u and v counted globally. Always 1 or 2 here.
pub fn arc_contribution(inst: &HardnessInstance, arc: usize, s: &VertexSet) -> Result<u64> {
    if arc >= inst.arcs.len() {
        return invalid_argument(format!("arc index {arc} out of range"));
    }
    let (u, v) = inst.arcs[arc];
    let x = inst.subdivision_vertex[arc];
    let triple = VertexSet::from_iter([u, x, v]);
    let (sub, to_parent) = inst.wt.induced(&triple)?;
    let local: Vec<usize> = s
        .iter()
        .filter(|&p| triple.contains(p))
        .map(|p| to_parent.binary_search(&p).unwrap())
        .collect();
    let inner = sub.set_weight(&VertexSet::from_iter(local))?;
    let endpoint_weight: u64 = [u, v]
        .iter()
        .filter(|&&y| s.contains(y))
        .map(|&y| inst.wt.weights.vertex(y))
        .sum();
    Ok(inner - endpoint_weight)
}
