//! Root graph reconstruction for line graphs.
//!
//! A graph G is a line graph exactly when its edges partition into cliques
//! with every vertex in at most two of them (a Krausz partition); the
//! cliques become the vertices of a root graph H with L(H) isomorphic to G.
//! Reconstruction anchors on one edge: in L(H) the clique covering an edge
//! {u0,v0} is the star of the shared endpoint, which misses at most one
//! vertex of the common neighborhood (the edge closing a triangle of H), so
//! only |T|+1 anchor candidates exist. Fixing a candidate forces everything
//! else: once a vertex has one clique and uncovered edges, its remaining
//! neighborhood must form its second clique. Ambiguity in the result is
//! harmless (a triangle has two valid roots); any valid partition yields a
//! correct root.

use crate::error::{invalid_argument, Error, Result};
use crate::trigraph::{Adjacency, Trigraph};

/// A root graph together with the vertex-to-edge correspondence:
/// input vertex `v` is the edge `edge_of[v]` of `root`.
#[derive(Debug, Clone)]
pub struct LineGraphRoot {
    pub root: Trigraph,
    pub edge_of: Vec<(usize, usize)>,
}

impl LineGraphRoot {
    /// Re-derives the line graph of `root` through the correspondence and
    /// compares it with `g`; the acceptance check for a reconstruction.
    pub fn verify_against(&self, g: &Trigraph) -> bool {
        if self.edge_of.len() != g.n() {
            return false;
        }
        for (u, &(a, b)) in self.edge_of.iter().enumerate() {
            if a == b || a >= self.root.n() || b >= self.root.n() {
                return false;
            }
            if self.root.theta(a, b) != Adjacency::StrongAdj {
                return false;
            }
            for (v, &(c, d)) in self.edge_of.iter().enumerate().skip(u + 1) {
                if (a, b) == (c, d) || (a, b) == (d, c) {
                    return false;
                }
                let share = a == c || a == d || b == c || b == d;
                let adjacent = g.theta(u, v) == Adjacency::StrongAdj;
                if share != adjacent {
                    return false;
                }
            }
        }
        true
    }
}

fn not_line<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(format!("not a line graph: {}", msg.into())))
}

/// Computes a graph H with L(H) isomorphic to the input, plus the
/// edge-vertex correspondence, or fails when the input is not a line graph.
pub fn line_graph_root(g: &Trigraph) -> Result<LineGraphRoot> {
    if !g.is_graph() {
        return invalid_argument("line_graph_root expects a graph (no semi pairs)");
    }
    let n = g.n();
    let adj = g.full_adjacency();

    let mut root_edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_of: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); n];
    let mut node_count = 0usize;

    for comp in g.components() {
        let comp_vertices: Vec<usize> = comp.iter().collect();
        let cliques = match component_krausz(g, &adj, &comp_vertices) {
            Some(c) => c,
            None => return not_line(format!("component containing vertex {}", comp_vertices[0])),
        };
        // One root node per clique, plus a private node for each vertex
        // covered once (its other endpoint in H has degree one).
        let clique_node: Vec<usize> = (0..cliques.len()).map(|i| node_count + i).collect();
        node_count += cliques.len();
        let mut at: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
        for (qi, q) in cliques.iter().enumerate() {
            for &v in q {
                at.entry(v).or_default().push(clique_node[qi]);
            }
        }
        for &v in &comp_vertices {
            let nodes = at.entry(v).or_default();
            debug_assert!(nodes.len() <= 2);
            while nodes.len() < 2 {
                nodes.push(node_count);
                node_count += 1;
            }
            edge_of[v] = (nodes[0].min(nodes[1]), nodes[0].max(nodes[1]));
            root_edges.push(edge_of[v]);
        }
    }

    let mut root = Trigraph::new(node_count);
    for &(a, b) in &root_edges {
        if root.theta(a, b) == Adjacency::StrongAdj {
            return not_line("reconstruction produced parallel root edges");
        }
        root.set(a, b, Adjacency::StrongAdj)?;
    }
    let result = LineGraphRoot { root, edge_of };
    if !result.verify_against(g) {
        return not_line("reconstruction failed verification");
    }
    Ok(result)
}

/// Krausz partition of one connected component, as cliques of input
/// vertices, or `None` when no partition exists.
fn component_krausz(g: &Trigraph, adj: &[Vec<usize>], comp: &[usize]) -> Option<Vec<Vec<usize>>> {
    if comp.len() == 1 {
        return Some(Vec::new());
    }
    let u0 = comp[0];
    let v0 = *adj[u0].iter().min().unwrap();
    let common: Vec<usize> = adj[u0]
        .iter()
        .copied()
        .filter(|&w| w != v0 && g.theta(w, v0) == Adjacency::StrongAdj)
        .collect();

    // Anchor candidates: the full common neighborhood, then each variant
    // missing a single vertex, in ascending label order.
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let full: Vec<usize> = {
        let mut q = vec![u0, v0];
        q.extend(common.iter().copied());
        q.sort_unstable();
        q
    };
    candidates.push(full);
    for &skip in &common {
        let mut q = vec![u0, v0];
        q.extend(common.iter().copied().filter(|&w| w != skip));
        q.sort_unstable();
        candidates.push(q);
    }

    'candidates: for anchor in candidates {
        if !is_clique(g, &anchor) {
            continue;
        }
        let mut state = Propagation::new(g, adj, comp);
        if state.fix_clique(&anchor).is_err() {
            continue;
        }
        loop {
            match state.next_forced() {
                Some(x) => {
                    let mut q: Vec<usize> = state.uncovered_neighbors(x);
                    q.push(x);
                    q.sort_unstable();
                    if !is_clique(g, &q) || state.fix_clique(&q).is_err() {
                        continue 'candidates;
                    }
                }
                None => {
                    if state.all_covered() {
                        return Some(state.cliques);
                    }
                    continue 'candidates;
                }
            }
        }
    }
    None
}

fn is_clique(g: &Trigraph, q: &[usize]) -> bool {
    for i in 0..q.len() {
        for j in (i + 1)..q.len() {
            if g.theta(q[i], q[j]) != Adjacency::StrongAdj {
                return false;
            }
        }
    }
    true
}

struct Propagation<'a> {
    adj: &'a [Vec<usize>],
    comp: &'a [usize],
    cliques: Vec<Vec<usize>>,
    cliques_at: std::collections::BTreeMap<usize, usize>,
    covered: std::collections::BTreeSet<(usize, usize)>,
    uncovered_deg: std::collections::BTreeMap<usize, usize>,
}

impl<'a> Propagation<'a> {
    fn new(_g: &Trigraph, adj: &'a [Vec<usize>], comp: &'a [usize]) -> Self {
        let mut uncovered_deg = std::collections::BTreeMap::new();
        for &v in comp {
            uncovered_deg.insert(v, adj[v].len());
        }
        Propagation {
            adj,
            comp,
            cliques: Vec::new(),
            cliques_at: comp.iter().map(|&v| (v, 0)).collect(),
            covered: std::collections::BTreeSet::new(),
            uncovered_deg,
        }
    }

    fn fix_clique(&mut self, q: &[usize]) -> std::result::Result<(), ()> {
        for i in 0..q.len() {
            for j in (i + 1)..q.len() {
                let key = (q[i].min(q[j]), q[i].max(q[j]));
                if !self.covered.insert(key) {
                    return Err(()); // an edge covered twice
                }
                *self.uncovered_deg.get_mut(&q[i]).unwrap() -= 1;
                *self.uncovered_deg.get_mut(&q[j]).unwrap() -= 1;
            }
        }
        for &v in q {
            let c = self.cliques_at.get_mut(&v).unwrap();
            *c += 1;
            if *c > 2 {
                return Err(());
            }
        }
        self.cliques.push(q.to_vec());
        Ok(())
    }

    /// Lowest vertex sitting in exactly one clique with uncovered edges left;
    /// its second clique is forced.
    fn next_forced(&self) -> Option<usize> {
        self.comp.iter().find(|&&v| self.cliques_at[&v] == 1 && self.uncovered_deg[&v] > 0).copied()
    }

    fn uncovered_neighbors(&self, x: usize) -> Vec<usize> {
        self.adj[x]
            .iter()
            .copied()
            .filter(|&w| !self.covered.contains(&(x.min(w), x.max(w))))
            .collect()
    }

    fn all_covered(&self) -> bool {
        self.comp.iter().all(|&v| self.uncovered_deg[&v] == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Trigraph {
        Trigraph::from_pairs(n, edges, &[]).unwrap()
    }

    fn line_graph(h: &Trigraph) -> (Trigraph, Vec<(usize, usize)>) {
        let edges = h.strong_pairs();
        let mut l = Trigraph::new(edges.len());
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    l.set(i, j, Adjacency::StrongAdj).unwrap();
                }
            }
        }
        (l, edges)
    }

    #[test]
    fn triangle_roundtrips_either_root() {
        let k3 = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        let r = line_graph_root(&k3).unwrap();
        assert!(r.verify_against(&k3));
    }

    #[test]
    fn path_roots_to_longer_path() {
        // P3 (two edges meeting at a vertex) is the line graph of P4.
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let r = line_graph_root(&p3).unwrap();
        assert!(r.verify_against(&p3));
        assert_eq!(r.root.n(), 4);
        let degrees: Vec<usize> = r.root.full_adjacency().iter().map(|a| a.len()).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 2);
    }

    #[test]
    fn claw_is_rejected() {
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(matches!(
            line_graph_root(&claw),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn known_non_line_graphs_are_rejected() {
        // K5 minus a perfect-matching-plus-one (the wheel W5) is not a line
        // graph; neither is K_{2,3}.
        let w5 = graph(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)],
        );
        assert!(line_graph_root(&w5).is_err());
        let k23 = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(line_graph_root(&k23).is_err());
    }

    #[test]
    fn complete_graphs_root_to_stars() {
        for n in [4usize, 5, 6] {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            let kn = graph(n, &edges);
            let r = line_graph_root(&kn).unwrap();
            assert!(r.verify_against(&kn));
        }
    }

    #[test]
    fn single_edge_and_isolated_vertices() {
        // One vertex: the line graph of a single edge.
        let one = graph(1, &[]);
        let r = line_graph_root(&one).unwrap();
        assert!(r.verify_against(&one));
        assert_eq!(r.root.n(), 2);
        // Disconnected input.
        let two = graph(2, &[]);
        let r = line_graph_root(&two).unwrap();
        assert!(r.verify_against(&two));
    }

    #[test]
    fn roundtrip_on_random_roots() {
        use rand::prelude::*;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for _ in 0..300 {
            let hn = rng.random_range(2..9usize);
            let mut h = Trigraph::new(hn);
            for u in 0..hn {
                for v in (u + 1)..hn {
                    if rng.random_bool(0.4) {
                        h.set(u, v, Adjacency::StrongAdj).unwrap();
                    }
                }
            }
            let (l, _) = line_graph(&h);
            let r = line_graph_root(&l).expect("line graph of a random root");
            assert!(r.verify_against(&l));
        }
    }

    #[test]
    fn agrees_with_enumeration_on_all_tiny_graphs() {
        // Every labeled graph on up to 4 vertices: reconstruction succeeds
        // exactly when exhaustive search over small roots finds one.
        for n in 0..=4usize {
            let pair_count = n * n.saturating_sub(1) / 2;
            for mask in 0u32..1 << pair_count {
                let mut g = Trigraph::new(n);
                let mut idx = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if mask >> idx & 1 == 1 {
                            g.set(u, v, Adjacency::StrongAdj).unwrap();
                        }
                        idx += 1;
                    }
                }
                let ours = line_graph_root(&g);
                let brute = brute_root_exists(&g);
                assert_eq!(
                    ours.is_ok(),
                    brute,
                    "disagreement on n={n} mask={mask:#b}"
                );
                if let Ok(r) = ours {
                    assert!(r.verify_against(&g));
                }
            }
        }
    }

    /// Exhaustive root search: does any graph H with |E(H)| = n have a line
    /// graph isomorphic to g?
    fn brute_root_exists(g: &Trigraph) -> bool {
        let n = g.n();
        if n == 0 {
            return true;
        }
        let hn = 2 * n;
        let pairs: Vec<(usize, usize)> = (0..hn)
            .flat_map(|u| ((u + 1)..hn).map(move |v| (u, v)))
            .collect();
        // Choose n of the pairs as edges of H.
        let mut chosen = vec![0usize; n];
        fn rec(
            pairs: &[(usize, usize)],
            chosen: &mut Vec<usize>,
            depth: usize,
            start: usize,
            g: &Trigraph,
        ) -> bool {
            if depth == chosen.len() {
                let edges: Vec<(usize, usize)> = chosen.iter().map(|&i| pairs[i]).collect();
                return line_graph_iso(&edges, g);
            }
            for i in start..pairs.len() {
                chosen[depth] = i;
                if rec(pairs, chosen, depth + 1, i + 1, g) {
                    return true;
                }
            }
            false
        }
        rec(&pairs, &mut chosen, 0, 0, g)
    }

    fn line_graph_iso(h_edges: &[(usize, usize)], g: &Trigraph) -> bool {
        let n = h_edges.len();
        let mut l = vec![vec![false; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = h_edges[i];
                let (c, d) = h_edges[j];
                if a == c || a == d || b == c || b == d {
                    l[i][j] = true;
                    l[j][i] = true;
                }
            }
        }
        // Try all bijections (n <= 4).
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let ok = (0..n).all(|u| {
                ((u + 1)..n).all(|v| {
                    (g.theta(u, v) == Adjacency::StrongAdj) == l[perm[u]][perm[v]]
                })
            });
            if ok {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        if p.len() < 2 {
            return false;
        }
        let mut i = p.len() - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = p.len() - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }
}
