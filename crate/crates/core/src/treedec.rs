//! Tree decompositions of bounded width and the independent-set dynamic
//! program over them.
//!
//! The width-2 construction eliminates degree-<=2 vertices with fill, which
//! succeeds exactly on graphs with no K4-subdivision subgraph. Gem
//! augmentation grows such a decomposition to cover an expanded graph at
//! width at most 3.

use crate::error::{internal, invalid_argument, Result};
use crate::trigraph::{Trigraph, VertexSet};
use std::collections::BTreeSet;

/// Bags plus a forest on bag indices. Width is max bag size minus one.
#[derive(Debug, Clone)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    /// Adjacency lists over bag indices; acyclic.
    pub tree: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    pub fn empty() -> Self {
        TreeDecomposition {
            bags: Vec::new(),
            tree: Vec::new(),
        }
    }

    pub fn width(&self) -> Option<usize> {
        self.bags.iter().map(|b| b.len()).max().map(|m| m.saturating_sub(1))
    }

    fn add_bag(&mut self, bag: VertexSet, attach_to: Option<usize>) -> usize {
        let idx = self.bags.len();
        self.bags.push(bag);
        self.tree.push(Vec::new());
        if let Some(p) = attach_to {
            self.tree[p].push(idx);
            self.tree[idx].push(p);
        }
        idx
    }

    /// Verifies the three decomposition invariants against `graph` (which
    /// must have no semi pairs), plus acyclicity of the bag forest.
    pub fn check(&self, graph: &Trigraph) -> Result<()> {
        let n = graph.n();
        let mut covered = vec![false; n];
        for bag in &self.bags {
            for v in bag.iter() {
                if v >= n {
                    return invalid_argument(format!("bag vertex {v} out of range"));
                }
                covered[v] = true;
            }
        }
        if covered.iter().any(|&c| !c) {
            return invalid_argument("some vertex appears in no bag");
        }
        for (u, v) in graph.strong_pairs() {
            if !self
                .bags
                .iter()
                .any(|b| b.contains(u) && b.contains(v))
            {
                return invalid_argument(format!("edge {u} {v} covered by no bag"));
            }
        }
        // Per-vertex bag sets must induce connected subtrees.
        for v in 0..n {
            let holding: Vec<usize> = (0..self.bags.len())
                .filter(|&i| self.bags[i].contains(v))
                .collect();
            if holding.is_empty() {
                continue;
            }
            let mut seen = BTreeSet::new();
            let mut stack = vec![holding[0]];
            seen.insert(holding[0]);
            while let Some(i) = stack.pop() {
                for &j in &self.tree[i] {
                    if self.bags[j].contains(v) && seen.insert(j) {
                        stack.push(j);
                    }
                }
            }
            if seen.len() != holding.len() {
                return invalid_argument(format!("bags containing vertex {v} are not connected"));
            }
        }
        // Acyclicity: a forest has fewer edges than nodes per component.
        let edge_count: usize = self.tree.iter().map(|a| a.len()).sum::<usize>() / 2;
        let mut seen = vec![false; self.bags.len()];
        let mut comps = 0;
        for start in 0..self.bags.len() {
            if seen[start] {
                continue;
            }
            comps += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for &j in &self.tree[i] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        if edge_count + comps != self.bags.len() {
            return invalid_argument("bag graph contains a cycle");
        }
        Ok(())
    }
}

/// Width-<=2 tree decomposition by repeatedly eliminating a lowest-labeled
/// vertex of degree at most two (connecting its neighbors). Fails exactly
/// when the input has a K4-subdivision subgraph.
pub fn tree_decomposition_width2(graph: &Trigraph) -> Result<TreeDecomposition> {
    if !graph.is_graph() {
        return invalid_argument("tree_decomposition_width2 expects a graph (no semi pairs)");
    }
    let n = graph.n();
    let mut adj: Vec<BTreeSet<usize>> = graph
        .full_adjacency()
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect();
    // Candidates keyed by (degree, label): taking leaves before degree-2
    // vertices keeps trees at width one and the order deterministic.
    let mut candidates: BTreeSet<(usize, usize)> = (0..n)
        .filter(|&v| adj[v].len() <= 2)
        .map(|v| (adj[v].len(), v))
        .collect();
    let mut eliminated = vec![false; n];
    let mut elim_pos = vec![usize::MAX; n];
    let mut elim_neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);

    while let Some(&(deg, v)) = candidates.iter().next() {
        candidates.remove(&(deg, v));
        if eliminated[v] || adj[v].len() != deg {
            continue;
        }
        let neighbors: Vec<usize> = adj[v].iter().copied().collect();
        elim_pos[v] = order.len();
        elim_neighbors[v] = neighbors.clone();
        order.push(v);
        eliminated[v] = true;
        for &u in &neighbors {
            candidates.remove(&(adj[u].len(), u));
            adj[u].remove(&v);
        }
        if let [a, b] = neighbors[..] {
            if adj[a].insert(b) {
                adj[b].insert(a);
            }
        }
        for &u in &neighbors {
            if adj[u].len() <= 2 {
                candidates.insert((adj[u].len(), u));
            }
        }
    }
    if order.len() != n {
        return Err(crate::error::Error::InvalidInput(
            "degree-2 elimination stalled: not series-parallel".into(),
        ));
    }

    // Rebuild bags in reverse elimination order. The bag of v attaches to the
    // bag of its earliest-eliminated neighbor, which is guaranteed to contain
    // all of v's elimination-time neighbors.
    let mut td = TreeDecomposition::empty();
    let mut bag_of = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let mut bag: Vec<usize> = elim_neighbors[v].clone();
        bag.push(v);
        let attach = elim_neighbors[v]
            .iter()
            .copied()
            .min_by_key(|&u| elim_pos[u])
            .map(|u| bag_of[u]);
        bag_of[v] = td.add_bag(VertexSet::from_iter(bag), attach);
    }
    Ok(td)
}

/// One gem's bookkeeping: the replaced pair and the three new vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GemVertices {
    pub u: usize,
    pub v: usize,
    /// Carries the pair weight; adjacent to all four others.
    pub hub: usize,
    /// Carries w(v,u); the path neighbor of u.
    pub near_u: usize,
    /// Carries w(u,v); the path neighbor of v.
    pub near_v: usize,
}

/// Extends a tree decomposition of the source graph to one of the
/// gem-expanded graph. For each replaced pair a two-bag chain
/// `{u, v, hub, near_v}` - `{u, near_u, hub, near_v}` hangs off a bag
/// containing both u and v. Width grows to at most max(width, 3).
pub fn augment_decomposition_for_gems(
    td: &TreeDecomposition,
    gems: &[GemVertices],
) -> Result<TreeDecomposition> {
    let mut out = td.clone();
    for gem in gems {
        let host = (0..out.bags.len())
            .find(|&i| out.bags[i].contains(gem.u) && out.bags[i].contains(gem.v));
        let host = match host {
            Some(h) => h,
            None => {
                return invalid_argument(format!(
                    "no bag contains both endpoints {} {} of a replaced pair",
                    gem.u, gem.v
                ))
            }
        };
        let first = out.add_bag(
            VertexSet::from_iter([gem.u, gem.v, gem.hub, gem.near_v]),
            Some(host),
        );
        out.add_bag(
            VertexSet::from_iter([gem.u, gem.near_u, gem.hub, gem.near_v]),
            Some(first),
        );
    }
    Ok(out)
}

/// Exact maximum weight independent set over a graph with a valid tree
/// decomposition, by subset dynamic programming per bag. Runs in
/// O(bags * 4^bagsize) and handles forests.
pub fn mwss_on_tree_decomposition(
    graph: &Trigraph,
    vertex_weight: &dyn Fn(usize) -> u64,
    td: &TreeDecomposition,
) -> Result<u64> {
    if !graph.is_graph() {
        return invalid_argument("mwss_on_tree_decomposition expects a graph");
    }
    td.check(graph)?;
    if td.bags.is_empty() {
        return if graph.n() == 0 {
            Ok(0)
        } else {
            invalid_argument("empty decomposition for a nonempty graph")
        };
    }

    let bag_count = td.bags.len();
    let mut visited = vec![false; bag_count];
    let mut total = 0u64;
    for root in 0..bag_count {
        if visited[root] {
            continue;
        }
        // Post-order over this tree component.
        let mut order = Vec::new();
        let mut parent = vec![usize::MAX; bag_count];
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(i) = stack.pop() {
            order.push(i);
            for &j in &td.tree[i] {
                if !visited[j] {
                    visited[j] = true;
                    parent[j] = i;
                    stack.push(j);
                }
            }
        }
        order.reverse();

        let mut tables: Vec<Option<Vec<Option<u64>>>> = vec![None; bag_count];
        for &i in &order {
            let bag: Vec<usize> = td.bags[i].iter().collect();
            let k = bag.len();
            // conflict[x] = mask of bag positions adjacent to bag[x].
            let mut conflict = vec![0u32; k];
            for x in 0..k {
                for y in (x + 1)..k {
                    if graph.theta(bag[x], bag[y]).is_adjacent() {
                        conflict[x] |= 1 << y;
                        conflict[y] |= 1 << x;
                    }
                }
            }
            let mut table: Vec<Option<u64>> = vec![None; 1 << k];
            'subsets: for mask in 0u32..1 << k {
                for (x, &cf) in conflict.iter().enumerate() {
                    if mask >> x & 1 == 1 && mask & cf != 0 {
                        continue 'subsets;
                    }
                }
                let mut value: u64 = (0..k)
                    .filter(|&x| mask >> x & 1 == 1)
                    .map(|x| vertex_weight(bag[x]))
                    .sum();
                for &j in &td.tree[i] {
                    if parent[j] != i {
                        continue;
                    }
                    let child_bag: Vec<usize> = td.bags[j].iter().collect();
                    let child_table = tables[j].as_ref().unwrap();
                    // Shared vertices must agree; their weight is already
                    // counted in the child, so subtract it there.
                    let mut best: Option<u64> = None;
                    for (cmask, entry) in child_table.iter().enumerate() {
                        let candidate = match entry {
                            Some(v) => *v,
                            None => continue,
                        };
                        let mut ok = true;
                        let mut shared_weight = 0u64;
                        for (cx, &cv) in child_bag.iter().enumerate() {
                            if let Some(x) = bag.iter().position(|&b| b == cv) {
                                let in_child = cmask >> cx & 1 == 1;
                                let in_parent = mask >> x & 1 == 1;
                                if in_child != in_parent {
                                    ok = false;
                                    break;
                                }
                                if in_child {
                                    shared_weight += vertex_weight(cv);
                                }
                            }
                        }
                        if ok {
                            let adjusted = candidate - shared_weight;
                            best = Some(best.map_or(adjusted, |b: u64| b.max(adjusted)));
                        }
                    }
                    match best {
                        Some(b) => value += b,
                        None => {
                            return internal("tree decomposition DP found no compatible child row")
                        }
                    }
                }
                table[mask as usize] = Some(value);
            }
            tables[i] = Some(table);
        }
        let root_table = tables[root].as_ref().unwrap();
        total += root_table.iter().flatten().copied().max().unwrap_or(0);
    }
    Ok(total)
}
