//! Stability numbers of basic trigraphs: series-parallel, complete
//! bipartite, and line. Semi-adjacent pairs are eliminated first by gem
//! replacement, which converts the three weights of a semi pair into three
//! ordinary vertex weights without changing the stability number.

use crate::error::{invalid_argument, Error, Result};
use crate::lineroot::line_graph_root;
use crate::matching::{max_weight_matching, EdgeWeightedGraph};
use crate::treedec::{
    augment_decomposition_for_gems, mwss_on_tree_decomposition, tree_decomposition_width2,
    GemVertices,
};
use crate::trigraph::{Adjacency, Trigraph, VertexSet};
use crate::weight::{WeightedTrigraph, WeightFunction};

/// The three basic classes, in classification order. A trigraph that is
/// neither series-parallel nor complete bipartite is reported as `Line` on
/// faith; a wrong report surfaces later as a root-reconstruction failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasicClass {
    SeriesParallel,
    CompleteBipartite,
    Line,
}

impl std::fmt::Display for BasicClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasicClass::SeriesParallel => write!(f, "series-parallel"),
            BasicClass::CompleteBipartite => write!(f, "complete-bipartite"),
            BasicClass::Line => write!(f, "line"),
        }
    }
}

/// Classifies a (presumed basic) trigraph: series-parallel first, then
/// complete bipartite, else line.
pub fn classify_basic(g: &Trigraph) -> BasicClass {
    if is_series_parallel(g) {
        BasicClass::SeriesParallel
    } else if g.is_graph() && complete_bipartition(g).is_some() {
        BasicClass::CompleteBipartite
    } else {
        BasicClass::Line
    }
}

/// A trigraph is series-parallel when its full realization has no
/// K4-subdivision subgraph, i.e. degree-<=2 elimination with fill succeeds.
pub fn is_series_parallel(g: &Trigraph) -> bool {
    tree_decomposition_width2(&g.full_realization()).is_ok()
}

/// The bipartition of a complete bipartite graph: the neighborhood of the
/// lowest vertex versus the rest. `None` when the graph is not complete
/// bipartite (or not a graph at all).
fn complete_bipartition(g: &Trigraph) -> Option<(VertexSet, VertexSet)> {
    if !g.is_graph() {
        return None;
    }
    let n = g.n();
    if n == 0 {
        return Some((VertexSet::new(), VertexSet::new()));
    }
    let side_a: Vec<usize> = (1..n)
        .filter(|&v| g.theta(0, v) == Adjacency::StrongAdj)
        .collect();
    let side_b: Vec<usize> = (0..n)
        .filter(|&v| v == 0 || g.theta(0, v) != Adjacency::StrongAdj)
        .collect();
    for &u in &side_a {
        for &v in &side_a {
            if u < v && g.theta(u, v) == Adjacency::StrongAdj {
                return None;
            }
        }
    }
    for &u in &side_b {
        for &v in &side_b {
            if u < v && g.theta(u, v) == Adjacency::StrongAdj {
                return None;
            }
        }
    }
    for &u in &side_a {
        for &v in &side_b {
            if g.theta(u, v) != Adjacency::StrongAdj {
                return None;
            }
        }
    }
    Some((VertexSet::from_iter(side_a), VertexSet::from_iter(side_b)))
}

/// Result of replacing semi pairs with gems: the expanded weighted trigraph
/// plus the bookkeeping of the new vertices per replaced pair.
#[derive(Debug, Clone)]
pub struct GemExpansion {
    pub result: WeightedTrigraph,
    pub gems: Vec<GemVertices>,
}

impl GemExpansion {
    /// The source semi pair a new vertex stands for, if it is a new vertex.
    pub fn origin_of(&self, vertex: usize) -> Option<(usize, usize)> {
        self.gems
            .iter()
            .find(|gem| vertex == gem.hub || vertex == gem.near_u || vertex == gem.near_v)
            .map(|gem| (gem.u, gem.v))
    }
}

/// Replaces the semi pair `uv` with a gem: three new vertices (a hub
/// adjacent to everything in the gem, and one path neighbor for each of u
/// and v) form, with u and v, a five-vertex gem in which u-v is now strongly
/// anti-adjacent. The pair's three weights move onto the new vertices:
/// the hub takes w(uv), u's path neighbor takes w(v,u), v's path neighbor
/// takes w(u,v). The stability number is unchanged.
pub fn replace_gem(wt: &WeightedTrigraph, u: usize, v: usize) -> Result<GemExpansion> {
    if wt.trigraph.adjacency(u, v)? != Adjacency::Semi {
        return invalid_argument(format!("pair {u} {v} is not semi-adjacent"));
    }
    let n = wt.trigraph.n();
    let hub = n;
    let near_u = n + 1;
    let near_v = n + 2;

    let mut g = Trigraph::new(n + 3);
    for x in 0..n {
        for y in (x + 1)..n {
            g.set(x, y, wt.trigraph.theta(x, y))?;
        }
    }
    g.set(u, v, Adjacency::StrongAnti)?;
    for (x, y) in [
        (u, near_u),
        (near_u, near_v),
        (near_v, v),
        (hub, u),
        (hub, near_u),
        (hub, near_v),
        (hub, v),
    ] {
        g.set(x, y, Adjacency::StrongAdj)?;
    }

    let mut w = WeightFunction::new();
    for (x, val) in wt.weights.vertex_entries() {
        w.set_vertex(x, val);
    }
    for ((x, y), val) in wt.weights.directed_entries() {
        if (x.min(y), x.max(y)) != (u.min(v), u.max(v)) {
            w.set_directed(x, y, val);
        }
    }
    for ((x, y), val) in wt.weights.pair_entries() {
        if (x, y) != (u.min(v), u.max(v)) {
            w.set_pair(x, y, val);
        }
    }
    w.set_vertex(hub, wt.weights.pair(u, v));
    w.set_vertex(near_u, wt.weights.directed(v, u));
    w.set_vertex(near_v, wt.weights.directed(u, v));

    let result = WeightedTrigraph::new(g, w)
        .map_err(|e| Error::Internal(format!("gem replacement broke weight validity: {e}")))?;
    Ok(GemExpansion {
        result,
        gems: vec![GemVertices {
            u,
            v,
            hub,
            near_u,
            near_v,
        }],
    })
}

/// Replaces every semi pair with a gem, in lexicographic order of the
/// original labels. The result is a weighted graph with 3m new vertices.
pub fn replace_all_gems(wt: &WeightedTrigraph) -> GemExpansion {
    let mut current = wt.clone();
    let mut gems = Vec::new();
    for (u, v) in wt.trigraph.semi_pairs() {
        let step = replace_gem(&current, u, v).expect("listed semi pair must expand");
        current = step.result;
        gems.extend(step.gems);
    }
    debug_assert!(current.trigraph.is_graph());
    GemExpansion {
        result: current,
        gems,
    }
}

/// Stability number of a series-parallel weighted trigraph: gem-expand,
/// decompose the source realization at width <= 2, widen the decomposition
/// over the gems (width <= 3), and run the independent-set dynamic program.
pub fn alpha_series_parallel(wt: &WeightedTrigraph) -> Result<u64> {
    let expansion = replace_all_gems(wt);
    let td_source = tree_decomposition_width2(&wt.trigraph.full_realization())?;
    let td = augment_decomposition_for_gems(&td_source, &expansion.gems)?;
    debug_assert!(td.width().unwrap_or(0) <= 3);
    let weights = expansion.result.weights.clone();
    mwss_on_tree_decomposition(&expansion.result.trigraph, &|v| weights.vertex(v), &td)
}

/// Stability number of a complete bipartite weighted trigraph: the larger
/// of the two side sums. Complete bipartite trigraphs carry no semi pairs,
/// so all weight sits on vertices.
pub fn alpha_complete_bipartite(wt: &WeightedTrigraph) -> Result<u64> {
    let (side_a, side_b) = match complete_bipartition(&wt.trigraph) {
        Some(p) => p,
        None => return invalid_argument("not a complete bipartite graph"),
    };
    let sum = |side: &VertexSet| side.iter().map(|v| wt.weights.vertex(v)).sum::<u64>();
    Ok(sum(&side_a).max(sum(&side_b)))
}

/// Stability number of a line weighted trigraph: gem-expand (a line
/// trigraph stays a line graph under expansion), reconstruct the root, and
/// solve maximum weight matching with the expanded vertex weights as edge
/// weights. Root reconstruction failure is the detector for misclassified
/// or out-of-class inputs.
pub fn alpha_line(wt: &WeightedTrigraph) -> Result<u64> {
    let expansion = replace_all_gems(wt);
    let graph = &expansion.result.trigraph;
    let root = line_graph_root(graph)?;
    let edges: Vec<(usize, usize, u64)> = root
        .edge_of
        .iter()
        .enumerate()
        .map(|(v, &(a, b))| (a, b, expansion.result.weights.vertex(v)))
        .collect();
    let host = EdgeWeightedGraph::new(root.root.n(), &edges)?;
    Ok(max_weight_matching(&host).total_weight)
}

/// Stability number of a basic trigraph, dispatching on its class.
pub fn alpha_basic(wt: &WeightedTrigraph) -> Result<(u64, BasicClass)> {
    let class = classify_basic(&wt.trigraph);
    let alpha = match class {
        BasicClass::SeriesParallel => alpha_series_parallel(wt)?,
        BasicClass::CompleteBipartite => alpha_complete_bipartite(wt)?,
        BasicClass::Line => alpha_line(wt)?,
    };
    Ok((alpha, class))
}
