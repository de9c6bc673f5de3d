//! The trigraph data model: three-valued adjacency, realizations, induced
//! substructures, connectivity, narrow paths, and stable/clique predicates.
//!
//! Every unordered pair of distinct vertices is strongly adjacent (an edge
//! in every realization), semi-adjacent (an optional edge), or strongly
//! anti-adjacent (a non-edge in every realization). A graph is simply a
//! trigraph with no semi-adjacent pairs.

use crate::error::{invalid_argument, Result};

/// The three possible values of the adjacency function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Adjacency {
    StrongAnti,
    Semi,
    StrongAdj,
}

impl Adjacency {
    /// Numeric value: -1, 0 or +1.
    pub fn value(self) -> i8 {
        match self {
            Adjacency::StrongAnti => -1,
            Adjacency::Semi => 0,
            Adjacency::StrongAdj => 1,
        }
    }

    /// Adjacent means strongly adjacent or semi-adjacent.
    pub fn is_adjacent(self) -> bool {
        self != Adjacency::StrongAnti
    }

    /// Anti-adjacent means strongly anti-adjacent or semi-adjacent.
    /// A semi-adjacent pair is simultaneously adjacent and anti-adjacent.
    pub fn is_anti_adjacent(self) -> bool {
        self != Adjacency::StrongAdj
    }
}

/// A set of vertices of some host trigraph, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    items: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { items: Vec::new() }
    }

    /// All vertices 0..n-1.
    pub fn full(n: usize) -> Self {
        VertexSet {
            items: (0..n).collect(),
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet { items: vec![v] }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.items.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.items.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.items
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.items.binary_search(&v) {
            self.items.insert(pos, v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_iter(self.iter().chain(other.iter()))
    }

    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            items: self.iter().filter(|&v| !other.contains(v)).collect(),
        }
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            items: self.iter().filter(|&v| other.contains(v)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn min(&self) -> Option<usize> {
        self.items.first().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut items: Vec<usize> = iter.into_iter().collect();
        items.sort_unstable();
        items.dedup();
        VertexSet { items }
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A trigraph on vertices `0..n`, with a total three-valued adjacency
/// function on unordered pairs of distinct vertices. Stored as a dense
/// triangular matrix; all algorithms here are adjacency-query heavy and
/// instance sizes are small to moderate.
#[derive(Clone, PartialEq, Eq)]
pub struct Trigraph {
    n: usize,
    theta: Vec<Adjacency>,
}

impl std::fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Trigraph(n={}", self.n)?;
        for v in 0..self.n {
            for u in 0..v {
                match self.theta(u, v) {
                    Adjacency::StrongAdj => write!(f, " e{u},{v}")?,
                    Adjacency::Semi => write!(f, " s{u},{v}")?,
                    Adjacency::StrongAnti => {}
                }
            }
        }
        write!(f, ")")
    }
}

fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u != v);
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    hi * (hi - 1) / 2 + lo
}

impl Trigraph {
    /// A trigraph with all pairs strongly anti-adjacent.
    pub fn new(n: usize) -> Self {
        Trigraph {
            n,
            theta: vec![Adjacency::StrongAnti; n * n.saturating_sub(1) / 2],
        }
    }

    /// The null trigraph (empty vertex set).
    pub fn null() -> Self {
        Trigraph::new(0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return invalid_argument(format!("vertex out of range: {u},{v} with n={}", self.n));
        }
        if u == v {
            return invalid_argument(format!("pair requires distinct vertices, got {u},{u}"));
        }
        Ok(())
    }

    /// Unchecked adjacency query. Panics on out-of-range or equal vertices;
    /// internal hot paths use this after validating once at the boundary.
    pub fn theta(&self, u: usize, v: usize) -> Adjacency {
        self.theta[pair_index(u, v)]
    }

    /// Checked adjacency query.
    pub fn adjacency(&self, u: usize, v: usize) -> Result<Adjacency> {
        self.check_pair(u, v)?;
        Ok(self.theta(u, v))
    }

    pub fn set(&mut self, u: usize, v: usize, a: Adjacency) -> Result<()> {
        self.check_pair(u, v)?;
        self.theta[pair_index(u, v)] = a;
        Ok(())
    }

    /// Builds a trigraph from explicit strong and semi pair lists; all
    /// remaining pairs are strongly anti-adjacent.
    pub fn from_pairs(
        n: usize,
        strong: &[(usize, usize)],
        semi: &[(usize, usize)],
    ) -> Result<Self> {
        let mut g = Trigraph::new(n);
        for &(u, v) in strong {
            g.set(u, v, Adjacency::StrongAdj)?;
        }
        for &(u, v) in semi {
            g.set(u, v, Adjacency::Semi)?;
        }
        Ok(g)
    }

    /// All semi-adjacent pairs, lexicographic.
    pub fn semi_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs_with(Adjacency::Semi)
    }

    /// All strongly adjacent pairs, lexicographic.
    pub fn strong_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs_with(Adjacency::StrongAdj)
    }

    fn pairs_with(&self, a: Adjacency) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.theta(u, v) == a {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True when there are no semi-adjacent pairs, i.e. the trigraph is a graph.
    pub fn is_graph(&self) -> bool {
        self.theta.iter().all(|&a| a != Adjacency::Semi)
    }

    /// Turns every semi-adjacent pair into a strongly adjacent one.
    pub fn full_realization(&self) -> Trigraph {
        let mut g = self.clone();
        for a in g.theta.iter_mut() {
            if *a == Adjacency::Semi {
                *a = Adjacency::StrongAdj;
            }
        }
        g
    }

    /// Turns every semi-adjacent pair into a strongly anti-adjacent one.
    pub fn null_realization(&self) -> Trigraph {
        let mut g = self.clone();
        for a in g.theta.iter_mut() {
            if *a == Adjacency::Semi {
                *a = Adjacency::StrongAnti;
            }
        }
        g
    }

    /// Enumerates all `2^m` realizations, where `m` is the number of
    /// semi-adjacent pairs. Exponential; intended for small `m` (tests and
    /// oracles). The caller bounds `m`.
    pub fn realizations(&self) -> Realizations<'_> {
        Realizations {
            source: self,
            semi: self.semi_pairs(),
            next_mask: 0,
        }
    }

    /// Adjacency lists of the full realization.
    pub fn full_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.theta(u, v).is_adjacent() {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        adj
    }

    /// The subtrigraph induced by `x`, together with the vertex relabeling.
    pub fn induced(&self, x: &VertexSet) -> Result<InducedSubtrigraph> {
        for v in x.iter() {
            if v >= self.n {
                return invalid_argument(format!("induced: vertex {v} out of range"));
            }
        }
        let to_parent: Vec<usize> = x.iter().collect();
        let mut g = Trigraph::new(to_parent.len());
        for i in 0..to_parent.len() {
            for j in (i + 1)..to_parent.len() {
                g.theta[pair_index(i, j)] = self.theta(to_parent[i], to_parent[j]);
            }
        }
        Ok(InducedSubtrigraph {
            trigraph: g,
            to_parent,
        })
    }

    /// Connected components as vertex sets, ordered by smallest member;
    /// connectivity is taken on the full realization. The null trigraph has
    /// no components and counts as disconnected.
    pub fn components(&self) -> Vec<VertexSet> {
        let adj = self.full_adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::from_iter(comp));
        }
        out
    }

    /// A trigraph is connected when its full realization is a connected
    /// graph; the null trigraph is not connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.components().len() == 1
    }

    /// A vertex set inducing a narrow path between `a` and `b` (a
    /// subtrigraph whose full realization is a path with those endpoints),
    /// or `None` when `a` and `b` lie in different components. A shortest
    /// path in the full realization is automatically induced there, hence a
    /// narrow path.
    pub fn narrow_path(&self, a: usize, b: usize) -> Result<Option<VertexSet>> {
        self.check_pair(a, b)?;
        let adj = self.full_adjacency();
        let mut prev = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        prev[a] = a;
        queue.push_back(a);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for &w in &adj[v] {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if prev[b] == usize::MAX {
            return Ok(None);
        }
        let mut path = vec![b];
        let mut v = b;
        while v != a {
            v = prev[v];
            path.push(v);
        }
        Ok(Some(VertexSet::from_iter(path)))
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        for v in s.iter() {
            if v >= self.n {
                return invalid_argument(format!("vertex {v} out of range (n={})", self.n));
            }
        }
        Ok(())
    }

    /// Pairwise anti-adjacent vertices; semi-adjacent pairs are allowed inside.
    pub fn is_stable_set(&self, s: &VertexSet) -> Result<bool> {
        self.check_subset(s)?;
        let vs = s.as_slice();
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                if !self.theta(vs[i], vs[j]).is_anti_adjacent() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Pairwise strongly adjacent vertices.
    pub fn is_strong_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_subset(s)?;
        let vs = s.as_slice();
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                if self.theta(vs[i], vs[j]) != Adjacency::StrongAdj {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Result of [`Trigraph::induced`]: the subtrigraph plus the relabeling map.
/// Vertex `i` of the subtrigraph is `to_parent[i]` in the host.
#[derive(Debug, Clone)]
pub struct InducedSubtrigraph {
    pub trigraph: Trigraph,
    pub to_parent: Vec<usize>,
}

impl InducedSubtrigraph {
    /// Host label of a subtrigraph vertex.
    pub fn parent_of(&self, v: usize) -> usize {
        self.to_parent[v]
    }

    /// Subtrigraph label of a host vertex, if present.
    pub fn child_of(&self, parent: usize) -> Option<usize> {
        self.to_parent.binary_search(&parent).ok()
    }
}

/// Iterator over all realizations of a trigraph, in mask order over the
/// lexicographically sorted semi pairs.
pub struct Realizations<'a> {
    source: &'a Trigraph,
    semi: Vec<(usize, usize)>,
    next_mask: u64,
}

impl Iterator for Realizations<'_> {
    type Item = Trigraph;

    fn next(&mut self) -> Option<Trigraph> {
        let m = self.semi.len();
        assert!(m < 64, "too many semi pairs to enumerate realizations");
        if self.next_mask >= (1u64 << m) {
            return None;
        }
        let mask = self.next_mask;
        self.next_mask += 1;
        let mut g = self.source.clone();
        for (bit, &(u, v)) in self.semi.iter().enumerate() {
            let a = if mask >> bit & 1 == 1 {
                Adjacency::StrongAdj
            } else {
                Adjacency::StrongAnti
            };
            g.theta[pair_index(u, v)] = a;
        }
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn adjacency_reads_theta() {
        let g = Trigraph::from_pairs(2, &[], &[(0, 1)]).unwrap();
        assert_eq!(g.adjacency(0, 1).unwrap(), Adjacency::Semi);
        assert_eq!(g.adjacency(1, 0).unwrap(), Adjacency::Semi);
    }

    #[test]
    fn adjacency_rejects_bad_pairs() {
        let g = Trigraph::new(2);
        assert!(matches!(g.adjacency(0, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(g.adjacency(0, 5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn realizations_have_no_semi_pairs() {
        let g = Trigraph::from_pairs(4, &[(0, 1)], &[(1, 2), (2, 3)]).unwrap();
        let all: Vec<_> = g.realizations().collect();
        assert_eq!(all.len(), 4);
        for r in &all {
            assert!(r.is_graph());
            // Strong pairs of g stay edges, strong anti pairs stay non-edges.
            assert_eq!(r.theta(0, 1), Adjacency::StrongAdj);
            assert_eq!(r.theta(0, 3), Adjacency::StrongAnti);
        }
    }

    #[test]
    fn realization_count_is_one_without_semi_pairs() {
        let g = Trigraph::from_pairs(3, &[(0, 1)], &[]).unwrap();
        assert_eq!(g.realizations().count(), 1);
        assert_eq!(g.full_realization(), g);
        assert_eq!(g.null_realization(), g);
    }

    #[test]
    fn full_realization_promotes_semi() {
        let g = Trigraph::from_pairs(2, &[], &[(0, 1)]).unwrap();
        assert_eq!(g.full_realization().theta(0, 1), Adjacency::StrongAdj);
        assert_eq!(g.null_realization().theta(0, 1), Adjacency::StrongAnti);
        let f = g.full_realization();
        assert_eq!(f.null_realization(), f);
    }

    #[test]
    fn full_realization_adds_one_strong_pair_per_semi() {
        let g = Trigraph::from_pairs(4, &[(0, 1)], &[(1, 2), (2, 3)]).unwrap();
        let f = g.full_realization();
        assert_eq!(f.strong_pairs().len(), g.strong_pairs().len() + 2);
    }

    #[test]
    fn induced_identity_and_empty() {
        let g = Trigraph::from_pairs(3, &[(0, 1), (1, 2)], &[]).unwrap();
        let full = g.induced(&VertexSet::full(3)).unwrap();
        assert_eq!(full.trigraph, g);
        assert_eq!(full.to_parent, vec![0, 1, 2]);
        let empty = g.induced(&VertexSet::new()).unwrap();
        assert_eq!(empty.trigraph.n(), 0);
    }

    #[test]
    fn induced_path_endpoints_become_anti_adjacent() {
        // Path a-b-c, all strong: the subtrigraph on {a,c} has no edges.
        let g = Trigraph::from_pairs(3, &[(0, 1), (1, 2)], &[]).unwrap();
        let sub = g.induced(&VertexSet::from_iter([0, 2])).unwrap();
        assert_eq!(sub.trigraph.theta(0, 1), Adjacency::StrongAnti);
    }

    #[test]
    fn connectivity_counts_semi_as_edges() {
        let g = Trigraph::from_pairs(2, &[], &[(0, 1)]).unwrap();
        assert!(g.is_connected());
        let h = Trigraph::new(2);
        assert!(!h.is_connected());
        assert_eq!(h.components().len(), 2);
    }

    #[test]
    fn null_trigraph_is_disconnected_with_no_components() {
        let g = Trigraph::null();
        assert!(!g.is_connected());
        assert!(g.components().is_empty());
    }

    #[test]
    fn components_match_full_realization() {
        let g = Trigraph::from_pairs(5, &[(0, 1)], &[(3, 4)]).unwrap();
        let comps = g.components();
        let full_comps = g.full_realization().components();
        assert_eq!(comps, full_comps);
        assert_eq!(comps.len(), 3);
    }

    #[test]
    fn narrow_path_direct_edge() {
        let g = Trigraph::from_pairs(2, &[(0, 1)], &[]).unwrap();
        let p = g.narrow_path(0, 1).unwrap().unwrap();
        assert_eq!(p, VertexSet::from_iter([0, 1]));
    }

    #[test]
    fn narrow_path_absent_across_components() {
        let g = Trigraph::new(2);
        assert!(g.narrow_path(0, 1).unwrap().is_none());
        assert!(g.narrow_path(0, 0).is_err());
    }

    #[test]
    fn narrow_path_on_hole_takes_either_side() {
        // C4 hole 0-1-2-3-0, all strong.
        let g = Trigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[]).unwrap();
        let p = g.narrow_path(0, 2).unwrap().unwrap();
        let side_a = VertexSet::from_iter([0, 1, 2]);
        let side_b = VertexSet::from_iter([0, 2, 3]);
        assert!(p == side_a || p == side_b);
        // Either answer induces a path in the full realization.
        let sub = g.induced(&p).unwrap();
        let degrees: Vec<usize> = sub
            .trigraph
            .full_adjacency()
            .iter()
            .map(|a| a.len())
            .collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 1);
    }

    #[test]
    fn stable_set_allows_semi_pairs_inside() {
        let g = Trigraph::from_pairs(3, &[(0, 2)], &[(0, 1)]).unwrap();
        assert!(g.is_stable_set(&VertexSet::from_iter([0, 1])).unwrap());
        assert!(!g.is_stable_set(&VertexSet::from_iter([0, 2])).unwrap());
        // Size <= 1 is both a strong clique and a stable set.
        assert!(g.is_stable_set(&VertexSet::singleton(1)).unwrap());
        assert!(g.is_strong_clique(&VertexSet::singleton(1)).unwrap());
        assert!(g.is_stable_set(&VertexSet::new()).unwrap());
        assert!(g.is_strong_clique(&VertexSet::new()).unwrap());
        // A semi pair is not a strong clique.
        assert!(!g.is_strong_clique(&VertexSet::from_iter([0, 1])).unwrap());
        assert!(g.is_strong_clique(&VertexSet::from_iter([0, 2])).unwrap());
    }

    #[test]
    fn strong_pairs_persist_across_realizations() {
        let g = Trigraph::from_pairs(4, &[(0, 1), (2, 3)], &[(1, 2), (0, 3)]).unwrap();
        for r in g.realizations() {
            for (u, v) in g.strong_pairs() {
                assert_eq!(r.theta(u, v), Adjacency::StrongAdj);
            }
            for u in 0..4 {
                for v in (u + 1)..4 {
                    if g.theta(u, v) == Adjacency::StrongAnti {
                        assert_eq!(r.theta(u, v), Adjacency::StrongAnti);
                    }
                }
            }
        }
    }
}
