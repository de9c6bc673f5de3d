//! Seeded instance generators for the solver's graph class. Identical
//! configuration yields an identical instance stream; the generator is
//! ChaCha-based, so streams are reproducible across platforms.
//!
//! Basic instances are safe by construction: series-parallel trigraphs come
//! from partial 2-trees, complete bipartite graphs are always in class, and
//! line trigraphs use subcubic cactus roots (no root cycle carries a chord,
//! which is exactly what keeps the line graph wheel-free). Glued instances
//! chain basic pieces by identifying a vertex or by substituting a narrow
//! path for a semi pair; both operations preserve the class. Small emitted
//! instances are re-checked with the brute-force validator; candidates that
//! fail (possible for the riskier small-cutset gluings) are regenerated.

use super::detect::is_isk4_wheel_free;
use crate::trigraph::{Adjacency, Trigraph};
use crate::weight::{WeightFunction, WeightedTrigraph};
use rand::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// Instance classes the generator can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum InstanceClass {
    SeriesParallel,
    CompleteBipartite,
    Line,
    GluedClique,
    GluedStable,
}

impl std::fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InstanceClass::SeriesParallel => write!(f, "series-parallel"),
            InstanceClass::CompleteBipartite => write!(f, "complete-bipartite"),
            InstanceClass::Line => write!(f, "line"),
            InstanceClass::GluedClique => write!(f, "glued-clique"),
            InstanceClass::GluedStable => write!(f, "glued-stable"),
        }
    }
}

impl std::str::FromStr for InstanceClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "series-parallel" | "sp" => Ok(InstanceClass::SeriesParallel),
            "complete-bipartite" | "cb" => Ok(InstanceClass::CompleteBipartite),
            "line" => Ok(InstanceClass::Line),
            "glued-clique" => Ok(InstanceClass::GluedClique),
            "glued-stable" => Ok(InstanceClass::GluedStable),
            other => Err(format!("unknown instance class `{other}`")),
        }
    }
}

/// Reproducible generator configuration.
#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub weight_max: u64,
    /// Relative class frequencies; zero-weight classes are never drawn.
    pub class_mix: Vec<(InstanceClass, u32)>,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            n_min: 4,
            n_max: 12,
            weight_max: 20,
            class_mix: vec![
                (InstanceClass::SeriesParallel, 2),
                (InstanceClass::CompleteBipartite, 1),
                (InstanceClass::Line, 2),
                (InstanceClass::GluedClique, 2),
                (InstanceClass::GluedStable, 2),
            ],
        }
    }
}

/// The instance stream for a configuration.
pub struct Generator {
    rng: ChaCha12Rng,
    config: GeneratorConfig,
}

impl Generator {
    pub fn new(config: GeneratorConfig) -> Self {
        Generator {
            rng: ChaCha12Rng::seed_from_u64(config.seed),
            config,
        }
    }

    fn pick_class(&mut self) -> InstanceClass {
        let total: u32 = self.config.class_mix.iter().map(|&(_, w)| w).sum();
        let mut roll = self.rng.random_range(0..total.max(1));
        for &(class, w) in &self.config.class_mix {
            if roll < w {
                return class;
            }
            roll -= w;
        }
        InstanceClass::SeriesParallel
    }

    /// Builds one validated instance. Sizes beyond the validator bound are
    /// emitted on the strength of the construction alone.
    pub fn next_instance(&mut self) -> (InstanceClass, WeightedTrigraph) {
        loop {
            let class = self.pick_class();
            let n = self
                .rng
                .random_range(self.config.n_min..=self.config.n_max);
            let wmax = self.config.weight_max;
            let candidate = match class {
                InstanceClass::SeriesParallel => sp_trigraph(&mut self.rng, n, wmax),
                InstanceClass::CompleteBipartite => complete_bipartite(&mut self.rng, n, wmax),
                InstanceClass::Line => line_trigraph(&mut self.rng, n, wmax),
                InstanceClass::GluedClique => glued(&mut self.rng, n, wmax, false),
                InstanceClass::GluedStable => glued(&mut self.rng, n, wmax, true),
            };
            match is_isk4_wheel_free(&candidate.trigraph) {
                Ok(true) => return (class, candidate),
                Ok(false) => continue,
                Err(_) => return (class, candidate), // beyond the validator bound
            }
        }
    }
}

impl Iterator for Generator {
    type Item = (InstanceClass, WeightedTrigraph);
    fn next(&mut self) -> Option<Self::Item> {
        Some(self.next_instance())
    }
}

fn random_weights(rng: &mut ChaCha12Rng, g: &Trigraph, wmax: u64) -> WeightedTrigraph {
    let mut w = WeightFunction::new();
    for v in 0..g.n() {
        w.set_vertex(v, rng.random_range(0..=wmax));
    }
    for (u, v) in g.semi_pairs() {
        let cap = rng.random_range(0..=wmax);
        w.set_pair(u, v, cap);
        w.set_directed(u, v, rng.random_range(0..=cap));
        w.set_directed(v, u, rng.random_range(0..=cap));
    }
    WeightedTrigraph::new(g.clone(), w).expect("generated weights are valid by construction")
}

/// Random series-parallel trigraph: a partial 2-tree with a sprinkling of
/// semi-marked edges.
pub fn sp_trigraph(rng: &mut ChaCha12Rng, n: usize, wmax: u64) -> WeightedTrigraph {
    let mut g = Trigraph::new(n);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        // Attach to one earlier vertex, or across an existing edge.
        if !edges.is_empty() && rng.random_bool(0.5) {
            let &(a, b) = edges.choose(rng).unwrap();
            for u in [a, b] {
                if g.theta(u, v) == Adjacency::StrongAnti {
                    g.set(u, v, Adjacency::StrongAdj).unwrap();
                    edges.push((u, v));
                }
            }
        } else {
            let u = rng.random_range(0..v);
            g.set(u, v, Adjacency::StrongAdj).unwrap();
            edges.push((u, v));
        }
    }
    // Random deletions keep the graph a partial 2-tree.
    let keep: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|_| rng.random_bool(0.9))
        .collect();
    let mut g2 = Trigraph::new(n);
    for &(u, v) in &keep {
        g2.set(u, v, Adjacency::StrongAdj).unwrap();
    }
    let mut semi_budget = 3usize.min(keep.len());
    for &(u, v) in keep.iter() {
        if semi_budget > 0 && rng.random_bool(0.25) {
            g2.set(u, v, Adjacency::Semi).unwrap();
            semi_budget -= 1;
        }
    }
    random_weights(rng, &g2, wmax)
}

/// Complete bipartite graph on n vertices with a random split.
pub fn complete_bipartite(rng: &mut ChaCha12Rng, n: usize, wmax: u64) -> WeightedTrigraph {
    let a = if n <= 1 { n } else { rng.random_range(1..n) };
    let mut g = Trigraph::new(n);
    for i in 0..a {
        for j in a..n {
            g.set(i, j, Adjacency::StrongAdj).unwrap();
        }
    }
    random_weights(rng, &g, wmax)
}

/// Random subcubic cactus: every block is an edge or a chordless cycle.
fn subcubic_cactus(rng: &mut ChaCha12Rng, target_edges: usize) -> Trigraph {
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut degree = vec![1usize, 1usize];
    while edges.len() < target_edges {
        let hooks: Vec<usize> = (0..degree.len()).filter(|&v| degree[v] <= 1).collect();
        let hook = match hooks.as_slice() {
            [] => break,
            hs => *hs.choose(rng).unwrap(),
        };
        if rng.random_bool(0.5) && edges.len() < target_edges {
            // Pendant edge.
            let v = degree.len();
            degree.push(1);
            degree[hook] += 1;
            edges.push((hook, v));
        } else {
            // Hang a cycle of length 3..6 at the hook.
            let len = rng.random_range(3..=6usize).min(target_edges - edges.len());
            if len < 3 {
                let v = degree.len();
                degree.push(1);
                degree[hook] += 1;
                edges.push((hook, v));
                continue;
            }
            let mut prev = hook;
            for _ in 0..len - 1 {
                let v = degree.len();
                degree.push(2);
                edges.push((prev.min(v), prev.max(v)));
                prev = v;
            }
            degree[hook] += 2;
            *degree.last_mut().unwrap() = 2;
            edges.push((hook.min(prev), hook.max(prev)));
        }
    }
    let n = degree.len();
    let mut h = Trigraph::new(n);
    for &(u, v) in &edges {
        h.set(u, v, Adjacency::StrongAdj).unwrap();
    }
    h
}

/// Line trigraph of a random subcubic cactus, with semi marks only on edges
/// lying in no triangle (so all triangles stay strong).
pub fn line_trigraph(rng: &mut ChaCha12Rng, n: usize, wmax: u64) -> WeightedTrigraph {
    let h = subcubic_cactus(rng, n.max(1));
    let h_edges = h.strong_pairs();
    let ln = h_edges.len();
    let mut l = Trigraph::new(ln);
    for i in 0..ln {
        for j in (i + 1)..ln {
            let (a, b) = h_edges[i];
            let (c, d) = h_edges[j];
            if a == c || a == d || b == c || b == d {
                l.set(i, j, Adjacency::StrongAdj).unwrap();
            }
        }
    }
    // Candidate semi pairs: edges in no triangle of the line graph.
    let mut semi_budget = 3usize;
    for (i, j) in l.strong_pairs() {
        if semi_budget == 0 {
            break;
        }
        let in_triangle = (0..ln).any(|k| {
            k != i
                && k != j
                && l.theta(i.min(k), i.max(k)) == Adjacency::StrongAdj
                && l.theta(j.min(k), j.max(k)) == Adjacency::StrongAdj
        });
        if !in_triangle && rng.random_bool(0.3) {
            l.set(i, j, Adjacency::Semi).unwrap();
            semi_budget -= 1;
        }
    }
    random_weights(rng, &l, wmax)
}

/// Disjoint union of two trigraphs identifying one vertex of each;
/// class-preserving because wheels and K4-subdivisions are 2-connected.
pub fn glue_at_vertex(
    a: &WeightedTrigraph,
    va: usize,
    b: &WeightedTrigraph,
    vb: usize,
) -> WeightedTrigraph {
    glue_identifying(a, &[va], b, &[vb])
}

/// Disjoint union identifying `vas[i]` with `vbs[i]`. The identified
/// vertices must carry identical pairwise adjacency in both hosts (a shared
/// strong clique in the intended use). Unlike single-vertex gluing this can
/// leave the class, so callers re-validate small results.
pub fn glue_identifying(
    a: &WeightedTrigraph,
    vas: &[usize],
    b: &WeightedTrigraph,
    vbs: &[usize],
) -> WeightedTrigraph {
    assert_eq!(vas.len(), vbs.len());
    for (i, (&xa, &xb)) in vas.iter().zip(vbs).enumerate() {
        for (&ya, &yb) in vas.iter().zip(vbs).skip(i + 1) {
            assert_eq!(
                a.trigraph.theta(xa, ya),
                b.trigraph.theta(xb, yb),
                "identified vertices disagree on adjacency"
            );
        }
    }
    let na = a.trigraph.n();
    let nb = b.trigraph.n();
    // b vertices map onto their identified partner or append after a's.
    let mut map_b = vec![usize::MAX; nb];
    for (&xa, &xb) in vas.iter().zip(vbs) {
        map_b[xb] = xa;
    }
    let mut next = na;
    for slot in map_b.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut g = Trigraph::new(next);
    for u in 0..na {
        for v in (u + 1)..na {
            g.set(u, v, a.trigraph.theta(u, v)).unwrap();
        }
    }
    for u in 0..nb {
        for v in (u + 1)..nb {
            g.set(map_b[u], map_b[v], b.trigraph.theta(u, v)).unwrap();
        }
    }
    let mut w = WeightFunction::new();
    for (v, val) in a.weights.vertex_entries() {
        w.set_vertex(v, val);
    }
    for (v, val) in b.weights.vertex_entries() {
        if !vbs.contains(&v) {
            w.set_vertex(map_b[v], val);
        }
        // Identified vertices keep a's weights.
    }
    for ((u, v), val) in a.weights.directed_entries() {
        w.set_directed(u, v, val);
    }
    for ((u, v), val) in a.weights.pair_entries() {
        w.set_pair(u, v, val);
    }
    for ((u, v), val) in b.weights.directed_entries() {
        w.set_directed(map_b[u], map_b[v], val);
    }
    for ((u, v), val) in b.weights.pair_entries() {
        w.set_pair(map_b[u], map_b[v], val);
    }
    WeightedTrigraph::new(g, w).expect("clique gluing preserves weight validity")
}

/// Lowest strong clique of the requested size, if any.
fn find_strong_clique(g: &Trigraph, size: usize) -> Option<Vec<usize>> {
    let n = g.n();
    match size {
        1 => (n > 0).then(|| vec![0]),
        2 => g.strong_pairs().first().map(|&(u, v)| vec![u, v]),
        3 => {
            for u in 0..n {
                for v in (u + 1)..n {
                    if g.theta(u, v) != Adjacency::StrongAdj {
                        continue;
                    }
                    for x in (v + 1)..n {
                        if g.theta(u, x) == Adjacency::StrongAdj
                            && g.theta(v, x) == Adjacency::StrongAdj
                        {
                            return Some(vec![u, v, x]);
                        }
                    }
                }
            }
            None
        }
        _ => None,
    }
}

/// Replaces the semi pair (c1, c2) with a fresh narrow path of `len >= 2`
/// edges: the inverse of taking a B-block across a stable cutset.
pub fn substitute_narrow_path(
    wt: &WeightedTrigraph,
    c1: usize,
    c2: usize,
    len: usize,
    rng: &mut ChaCha12Rng,
    wmax: u64,
) -> WeightedTrigraph {
    assert!(wt.trigraph.theta(c1, c2) == Adjacency::Semi);
    assert!(len >= 2);
    let n = wt.trigraph.n();
    let inner = len - 1;
    let mut g = Trigraph::new(n + inner);
    for u in 0..n {
        for v in (u + 1)..n {
            g.set(u, v, wt.trigraph.theta(u, v)).unwrap();
        }
    }
    g.set(c1, c2, Adjacency::StrongAnti).unwrap();
    let mut prev = c1;
    for i in 0..inner {
        let v = n + i;
        let kind = if rng.random_bool(0.2) {
            Adjacency::Semi
        } else {
            Adjacency::StrongAdj
        };
        g.set(prev, v, kind).unwrap();
        prev = v;
    }
    g.set(prev, c2, Adjacency::StrongAdj).unwrap();

    let mut w = WeightFunction::new();
    for (v, val) in wt.weights.vertex_entries() {
        w.set_vertex(v, val);
    }
    for ((u, v), val) in wt.weights.directed_entries() {
        if (u.min(v), u.max(v)) != (c1.min(c2), c1.max(c2)) {
            w.set_directed(u, v, val);
        }
    }
    for ((u, v), val) in wt.weights.pair_entries() {
        if (u, v) != (c1.min(c2), c1.max(c2)) {
            w.set_pair(u, v, val);
        }
    }
    for i in 0..inner {
        w.set_vertex(n + i, rng.random_range(0..=wmax));
    }
    for (u, v) in g.semi_pairs() {
        if u >= n || v >= n || (u.min(v), u.max(v)) == (c1.min(c2), c1.max(c2)) {
            let cap = rng.random_range(0..=wmax);
            w.set_pair(u, v, cap);
            w.set_directed(u, v, rng.random_range(0..=cap));
            w.set_directed(v, u, rng.random_range(0..=cap));
        }
    }
    WeightedTrigraph::new(g, w).expect("path substitution preserves weight validity")
}

/// Chains basic pieces by vertex identification and, when `stable` is set,
/// narrow-path substitution at semi pairs. Never exceeds `target_n`.
fn glued(rng: &mut ChaCha12Rng, target_n: usize, wmax: u64, stable: bool) -> WeightedTrigraph {
    let first = rng.random_range(3..=6usize.min(target_n.max(3)));
    let mut acc = basic_piece(rng, first, wmax);
    let mut guard = 0;
    while acc.trigraph.n() < target_n && guard < 64 {
        guard += 1;
        let room = target_n - acc.trigraph.n();
        if stable {
            if let Some(&(c1, c2)) = acc.trigraph.semi_pairs().first() {
                let len = rng.random_range(2..=4usize).min(room + 1);
                if len >= 2 {
                    acc = substitute_narrow_path(&acc, c1, c2, len, rng, wmax);
                    continue;
                }
            }
        }
        // Gluing on k shared vertices adds piece size minus k. Cut-vertex
        // gluing is always safe; pair or triangle gluing can leave the
        // class, which the caller's validation pass rejects — only worth
        // attempting at validatable sizes.
        let max_piece = (room + 1).min(6);
        if max_piece < 3 {
            break;
        }
        let piece_size = rng.random_range(3..=max_piece);
        let piece = basic_piece(rng, piece_size, wmax);
        let arity = if target_n <= 14 {
            rng.random_range(1..=3usize)
        } else {
            1
        };
        let glued = (1..=arity).rev().find_map(|k| {
            let ca = find_strong_clique(&acc.trigraph, k)?;
            let cb = find_strong_clique(&piece.trigraph, k)?;
            Some(glue_identifying(&acc, &ca, &piece, &cb))
        });
        acc = match glued {
            Some(g) => g,
            None => {
                let va = rng.random_range(0..acc.trigraph.n());
                let vb = rng.random_range(0..piece.trigraph.n());
                glue_at_vertex(&acc, va, &piece, vb)
            }
        };
    }
    acc
}

fn basic_piece(rng: &mut ChaCha12Rng, n: usize, wmax: u64) -> WeightedTrigraph {
    match rng.random_range(0..3u32) {
        0 => sp_trigraph(rng, n, wmax),
        1 => complete_bipartite(rng, n.min(6), wmax),
        _ => line_trigraph(rng, n, wmax),
    }
}

/// Large glued chains for scaling runs: basic pieces joined at cut vertices
/// and through narrow-path substitutions, safe by construction at any size.
pub fn scaling_instance(seed: u64, target_n: usize, wmax: u64) -> WeightedTrigraph {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut acc = sp_trigraph(&mut rng, 6.min(target_n.max(1)), wmax);
    while acc.trigraph.n() < target_n {
        let room = target_n - acc.trigraph.n();
        if rng.random_bool(0.3) && room >= 1 {
            if let Some(&(c1, c2)) = acc.trigraph.semi_pairs().first() {
                let len = rng.random_range(2..=4usize).min(room + 1);
                acc = substitute_narrow_path(&acc, c1, c2, len, &mut rng, wmax);
                continue;
            }
        }
        let max_piece = (room + 1).min(8);
        if max_piece < 4 {
            // Pad with single pendant vertices to land exactly on target.
            let pendant = sp_trigraph(&mut rng, 2, wmax);
            let va = acc.trigraph.n() - 1;
            acc = glue_at_vertex(&acc, va, &pendant, 0);
            continue;
        }
        let piece_size = rng.random_range(4..=max_piece);
        let piece = basic_piece(&mut rng, piece_size, wmax);
        let va = acc.trigraph.n() - 1;
        let vb = 0;
        acc = glue_at_vertex(&acc, va, &piece, vb);
    }
    acc
}
