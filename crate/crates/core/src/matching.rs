//! Exact maximum weight matching on general graphs.
//!
//! Primal-dual blossom method with O(V^3) behavior, after Edmonds; the
//! structure follows Galil's survey and the well-known Python reference by
//! Joris van Rantwijk. Dual variables are pre-multiplied by two so that all
//! arithmetic stays on integers. Weights are non-negative; the matching
//! returned maximizes total weight, not cardinality.

use crate::error::{invalid_argument, Result};

const SENTINEL: usize = usize::MAX;

/// An undirected graph with non-negative integer edge weights. Self-loops
/// are rejected; parallel edges are merged keeping the maximum weight, since
/// a maximum weight matching never benefits from the lighter copy.
#[derive(Debug, Clone)]
pub struct EdgeWeightedGraph {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl EdgeWeightedGraph {
    pub fn new(n: usize, raw_edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut merged: std::collections::BTreeMap<(usize, usize), u64> =
            std::collections::BTreeMap::new();
        for &(u, v, w) in raw_edges {
            if u == v {
                return invalid_argument(format!("self-loop at vertex {u}"));
            }
            if u >= n || v >= n {
                return invalid_argument(format!("edge {u}-{v} out of range (n={n})"));
            }
            let key = (u.min(v), u.max(v));
            let entry = merged.entry(key).or_insert(0);
            *entry = (*entry).max(w);
        }
        Ok(EdgeWeightedGraph {
            n,
            edges: merged.into_iter().map(|((u, v), w)| (u, v, w)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }
}

/// A matching as a set of edge indices into [`EdgeWeightedGraph::edges`],
/// with its total weight.
#[derive(Debug, Clone)]
pub struct Matching {
    pub edges: Vec<usize>,
    pub total_weight: u64,
}

impl Matching {
    /// Endpoint-disjointness check against the host graph.
    pub fn is_valid(&self, g: &EdgeWeightedGraph) -> bool {
        let mut used = vec![false; g.n()];
        for &k in &self.edges {
            let (u, v, _) = g.edges()[k];
            if used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }
}

/// Computes a maximum weight matching. Exact for any non-negative integer
/// weights.
pub fn max_weight_matching(g: &EdgeWeightedGraph) -> Matching {
    if g.edges.is_empty() {
        return Matching {
            edges: Vec::new(),
            total_weight: 0,
        };
    }
    let mut solver = Solver::new(g);
    solver.run();
    let mut edges = Vec::new();
    let mut total = 0u64;
    for (k, &(u, _v, w)) in g.edges.iter().enumerate() {
        if solver.mate[u] != SENTINEL && solver.mate[u] / 2 == k {
            edges.push(k);
            total += w;
        }
    }
    Matching {
        edges,
        total_weight: total,
    }
}

/// Exhaustive maximum weight matching by branching on the lowest unmatched
/// vertex. Exponential; oracle use on small graphs only.
pub fn brute_max_weight_matching(g: &EdgeWeightedGraph) -> u64 {
    let n = g.n();
    let mut adj: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for &(u, v, w) in g.edges() {
        adj[u].push((v, w));
        adj[v].push((u, w));
    }
    fn rec(v: usize, used: &mut [bool], adj: &[Vec<(usize, u64)>]) -> u64 {
        if v == used.len() {
            return 0;
        }
        if used[v] {
            return rec(v + 1, used, adj);
        }
        // Leave v unmatched.
        let mut best = rec(v + 1, used, adj);
        used[v] = true;
        for &(u, w) in &adj[v] {
            if u > v && !used[u] {
                used[u] = true;
                best = best.max(w + rec(v + 1, used, adj));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    let mut used = vec![false; n];
    rec(0, &mut used, &adj)
}

/// All the stage state of the primal-dual search. Vertices are 0..n, and
/// non-trivial blossoms take numbers n..2n. Edge endpoints are numbered
/// 2k and 2k+1 for edge k.
struct Solver {
    nvertex: usize,
    nedge: usize,
    edges: Vec<(usize, usize, i64)>,
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,
    label: Vec<u8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<i64>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

fn at(list: &[usize], j: i64) -> usize {
    if j >= 0 {
        list[j as usize]
    } else {
        list[(list.len() as i64 + j) as usize]
    }
}

impl Solver {
    fn new(g: &EdgeWeightedGraph) -> Solver {
        let nvertex = g.n();
        let edges: Vec<(usize, usize, i64)> = g
            .edges
            .iter()
            .map(|&(u, v, w)| {
                assert!(w <= i64::MAX as u64 / 4, "edge weight too large");
                (u, v, w as i64)
            })
            .collect();
        let nedge = edges.len();
        let maxweight = edges.iter().map(|e| e.2).max().unwrap_or(0).max(0);
        let endpoint: Vec<usize> = (0..2 * nedge)
            .map(|p| if p % 2 == 0 { edges[p / 2].0 } else { edges[p / 2].1 })
            .collect();
        let mut neighbend: Vec<Vec<usize>> = vec![Vec::new(); nvertex];
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        Solver {
            nvertex,
            nedge,
            edges,
            endpoint,
            neighbend,
            mate: vec![SENTINEL; nvertex],
            label: vec![0; 2 * nvertex],
            labelend: vec![SENTINEL; 2 * nvertex],
            inblossom: (0..nvertex).collect(),
            blossomparent: vec![SENTINEL; 2 * nvertex],
            blossomchilds: vec![Vec::new(); 2 * nvertex],
            blossombase: (0..nvertex).chain(std::iter::repeat_n(SENTINEL, nvertex)).collect(),
            blossomendps: vec![Vec::new(); 2 * nvertex],
            bestedge: vec![SENTINEL; 2 * nvertex],
            blossombestedges: vec![Vec::new(); 2 * nvertex],
            unusedblossoms: (nvertex..2 * nvertex).collect(),
            dualvar: std::iter::repeat_n(maxweight, nvertex)
                .chain(std::iter::repeat_n(0, nvertex))
                .collect(),
            allowedge: vec![false; nedge],
            queue: Vec::new(),
        }
    }

    fn slack(&self, k: usize) -> i64 {
        let (i, j, wt) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2 * wt
    }

    fn blossom_leaves(&self, b: usize) -> Vec<usize> {
        let mut leaves = Vec::new();
        if b < self.nvertex {
            leaves.push(b);
        } else {
            for &t in &self.blossomchilds[b] {
                if t < self.nvertex {
                    leaves.push(t);
                } else {
                    leaves.extend(self.blossom_leaves(t));
                }
            }
        }
        leaves
    }

    /// Label the top-level blossom of w with t, reached through remote
    /// endpoint p. S-blossoms feed the scan queue; T-blossoms immediately
    /// label their mate S.
    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = SENTINEL;
        self.bestedge[b] = SENTINEL;
        if t == 1 {
            self.queue.extend(self.blossom_leaves(b));
        } else if t == 2 {
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != SENTINEL);
            let mbase = self.mate[base];
            let ep = self.endpoint[mbase];
            self.assign_label(ep, 1, mbase ^ 1);
        }
    }

    /// Trace back from v and w to find either a common ancestor (the base of
    /// a new blossom) or an augmenting path (returns SENTINEL).
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = SENTINEL;
        let mut v = v;
        let mut w = w;
        while v != SENTINEL || w != SENTINEL {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            debug_assert!(self.label[b] == 1);
            path.push(b);
            self.label[b] = 5;
            debug_assert!(self.labelend[b] == self.mate[self.blossombase[b]]);
            if self.labelend[b] == SENTINEL {
                v = SENTINEL;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert!(self.label[b] == 2);
                debug_assert!(self.labelend[b] != SENTINEL);
                v = self.endpoint[self.labelend[b]];
            }
            if w != SENTINEL {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    /// Wrap the odd cycle through edge k and base into a new S-blossom,
    /// relabeling swallowed T-vertices and merging least-slack edge lists.
    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];

        let b = self.unusedblossoms.pop().unwrap();
        self.blossombase[b] = base;
        self.blossomparent[b] = SENTINEL;
        self.blossomparent[bb] = b;

        let mut childs: Vec<usize> = Vec::new();
        let mut endps: Vec<usize> = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            childs.push(bv);
            endps.push(self.labelend[bv]);
            debug_assert!(self.labelend[bv] != SENTINEL);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        childs.push(bb);
        childs.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            childs.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            debug_assert!(self.labelend[bw] != SENTINEL);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        self.blossomchilds[b] = childs;
        self.blossomendps[b] = endps;

        debug_assert!(self.label[bb] == 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;

        for v in self.blossom_leaves(b) {
            if self.label[self.inblossom[v]] == 2 {
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }

        // Merge least-slack edges toward other S-blossoms.
        let mut bestedgeto = vec![SENTINEL; 2 * self.nvertex];
        for bv in self.blossomchilds[b].clone() {
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                self.blossom_leaves(bv)
                    .into_iter()
                    .map(|v| self.neighbend[v].iter().map(|p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for k in nblist {
                    let (mut i, mut j, _) = self.edges[k];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let _ = i;
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == SENTINEL || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.blossombestedges[bv] = Vec::new();
            self.bestedge[bv] = SENTINEL;
        }
        self.blossombestedges[b] = bestedgeto.into_iter().filter(|&k| k != SENTINEL).collect();
        self.bestedge[b] = SENTINEL;
        for k in self.blossombestedges[b].clone() {
            if self.bestedge[b] == SENTINEL || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
    }

    /// Dissolve a top-level blossom, relabeling its children. During a stage
    /// (endstage = false) the T-side alternating structure is rebuilt.
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for s in self.blossomchilds[b].clone() {
            self.blossomparent[s] = SENTINEL;
            if s < self.nvertex {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.blossom_leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }

        if !endstage && self.label[b] == 2 {
            debug_assert!(self.labelend[b] != SENTINEL);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let mut j = self.blossomchilds[b]
                .iter()
                .position(|&r| r == entrychild)
                .unwrap() as i64;
            let jstep: i64;
            let endptrick: usize;
            if j & 1 != 0 {
                j -= self.blossomchilds[b].len() as i64;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            let mut p = self.labelend[b];
            while j != 0 {
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = at(&self.blossomendps[b], j - endptrick as i64) ^ endptrick ^ 1;
                self.label[self.endpoint[q]] = 0;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, 2, p);
                self.allowedge[at(&self.blossomendps[b], j - endptrick as i64) / 2] = true;
                j += jstep;
                p = at(&self.blossomendps[b], j - endptrick as i64) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            // The base child keeps label T without relabeling its mate.
            let bv = at(&self.blossomchilds[b], j);
            self.label[self.endpoint[p ^ 1]] = 2;
            self.label[bv] = 2;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = SENTINEL;
            j += jstep;
            while at(&self.blossomchilds[b], j) != entrychild {
                let bv = at(&self.blossomchilds[b], j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut reached = SENTINEL;
                for v in self.blossom_leaves(bv) {
                    if self.label[v] != 0 {
                        reached = v;
                        break;
                    }
                }
                if reached != SENTINEL {
                    debug_assert!(self.label[reached] == 2);
                    debug_assert!(self.inblossom[reached] == bv);
                    self.label[reached] = 0;
                    self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = 0;
                    let lblend = self.labelend[reached];
                    self.assign_label(reached, 2, lblend);
                }
                j += jstep;
            }
        }

        self.label[b] = 0;
        self.labelend[b] = SENTINEL;
        self.blossombase[b] = SENTINEL;
        self.bestedge[b] = SENTINEL;
        self.blossomchilds[b] = Vec::new();
        self.blossomendps[b] = Vec::new();
        self.blossombestedges[b] = Vec::new();
        self.unusedblossoms.push(b);
    }

    /// Swap matched and unmatched edges along the path from v to the base of
    /// blossom b, rotating the child list so v becomes the new base.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.nvertex {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b].iter().position(|&r| r == t).unwrap();
        let mut j = i as i64;
        let jstep: i64;
        let endptrick: usize;
        if i & 1 != 0 {
            j -= self.blossomchilds[b].len() as i64;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while j != 0 {
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            let p = at(&self.blossomendps[b], j - endptrick as i64) ^ endptrick;
            if t >= self.nvertex {
                let ep = self.endpoint[p];
                self.augment_blossom(t, ep);
            }
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            if t >= self.nvertex {
                let ep = self.endpoint[p ^ 1];
                self.augment_blossom(t, ep);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert!(self.blossombase[b] == v);
    }

    /// Swap matched and unmatched edges along the augmenting path through
    /// edge k, which joins two S-vertices in different trees.
    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (s0, p0) in [(v, 2 * k + 1), (w, 2 * k)] {
            let mut s = s0;
            let mut p = p0;
            loop {
                let bs = self.inblossom[s];
                debug_assert!(self.label[bs] == 1);
                debug_assert!(self.labelend[bs] == self.mate[self.blossombase[bs]]);
                if bs >= self.nvertex {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == SENTINEL {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert!(self.label[bt] == 2);
                debug_assert!(self.labelend[bt] != SENTINEL);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert!(self.blossombase[bt] == t);
                if bt >= self.nvertex {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    fn run(&mut self) {
        for _stage in 0..self.nvertex {
            self.label = vec![0; 2 * self.nvertex];
            self.bestedge = vec![SENTINEL; 2 * self.nvertex];
            for b in self.nvertex..2 * self.nvertex {
                self.blossombestedges[b] = Vec::new();
            }
            self.allowedge = vec![false; self.nedge];
            self.queue = Vec::new();
            for v in 0..self.nvertex {
                if self.mate[v] == SENTINEL && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, SENTINEL);
                }
            }

            let mut augmented = false;
            loop {
                // Substage: grow alternating trees; on failure pump slack out
                // of the duals.
                while let Some(v) = self.queue.pop() {
                    debug_assert!(self.label[self.inblossom[v]] == 1);
                    let mut found_augment = false;
                    for p in self.neighbend[v].clone() {
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0;
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == 0 {
                                self.assign_label(w, 2, p ^ 1);
                            } else if self.label[self.inblossom[w]] == 1 {
                                let base = self.scan_blossom(v, w);
                                if base != SENTINEL {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    found_augment = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                debug_assert!(self.label[self.inblossom[w]] == 2);
                                self.label[w] = 2;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == 1 {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == SENTINEL
                                || kslack < self.slack(self.bestedge[b])
                            {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.bestedge[w] == SENTINEL
                                || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                    if found_augment {
                        augmented = true;
                        break;
                    }
                }
                if augmented {
                    break;
                }

                // Dual adjustment. Weights are integral so every delta is an
                // integer (slacks carry the factor of two already).
                let mut deltatype = 1i32;
                let mut delta = *self.dualvar[..self.nvertex].iter().min().unwrap();
                let mut deltaedge = SENTINEL;
                let mut deltablossom = SENTINEL;

                for v in 0..self.nvertex {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != SENTINEL {
                        let d = self.slack(self.bestedge[v]);
                        if d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                for b in 0..2 * self.nvertex {
                    if self.blossomparent[b] == SENTINEL
                        && self.label[b] == 1
                        && self.bestedge[b] != SENTINEL
                    {
                        let d = self.slack(self.bestedge[b]) / 2;
                        if d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != SENTINEL
                        && self.blossomparent[b] == SENTINEL
                        && self.label[b] == 2
                        && self.dualvar[b] < delta
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for v in 0..self.nvertex {
                    match self.label[self.inblossom[v]] {
                        0 => {}
                        1 => self.dualvar[v] -= delta,
                        2 => self.dualvar[v] += delta,
                        _ => unreachable!(),
                    }
                }
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != SENTINEL && self.blossomparent[b] == SENTINEL {
                        match self.label[b] {
                            0 => {}
                            1 => self.dualvar[b] += delta,
                            2 => self.dualvar[b] -= delta,
                            _ => unreachable!(),
                        }
                    }
                }

                match deltatype {
                    1 => break, // optimum reached
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, j, _) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == 0 {
                            i = j;
                        }
                        debug_assert!(self.label[self.inblossom[i]] == 1);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _, _) = self.edges[deltaedge];
                        debug_assert!(self.label[self.inblossom[i]] == 1);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(deltablossom, false),
                    _ => unreachable!(),
                }
            }

            if !augmented {
                break;
            }

            // End of stage: expand S-blossoms whose dual hit zero.
            for b in self.nvertex..2 * self.nvertex {
                if self.blossomparent[b] == SENTINEL
                    && self.blossombase[b] != SENTINEL
                    && self.label[b] == 1
                    && self.dualvar[b] == 0
                {
                    self.expand_blossom(b, true);
                }
            }
        }

        if cfg!(debug_assertions) {
            self.verify_optimum();
        }

        // Convert mate from remote endpoints to vertices... kept as endpoints;
        // callers read matched edges via mate[v] / 2.
    }

    /// Complementary slackness spot-checks; debug builds only.
    fn verify_optimum(&self) {
        for k in 0..self.nedge {
            let (i, j, _) = self.edges[k];
            let mut s = self.slack(k);
            let mut iblossoms = vec![i];
            let mut jblossoms = vec![j];
            while self.blossomparent[*iblossoms.last().unwrap()] != SENTINEL {
                iblossoms.push(self.blossomparent[*iblossoms.last().unwrap()]);
            }
            while self.blossomparent[*jblossoms.last().unwrap()] != SENTINEL {
                jblossoms.push(self.blossomparent[*jblossoms.last().unwrap()]);
            }
            iblossoms.reverse();
            jblossoms.reverse();
            for (&bi, &bj) in iblossoms.iter().zip(jblossoms.iter()) {
                if bi != bj {
                    break;
                }
                s += 2 * self.dualvar[bi];
            }
            assert!(s >= 0, "negative slack on edge {k}");
            let mi = self.mate[i];
            let mj = self.mate[j];
            if (mi != SENTINEL && mi / 2 == k) || (mj != SENTINEL && mj / 2 == k) {
                assert!(mi != SENTINEL && mi / 2 == k && mj != SENTINEL && mj / 2 == k);
                assert!(s == 0, "matched edge {k} has nonzero slack");
            }
        }
        for v in 0..self.nvertex {
            assert!(
                self.mate[v] != SENTINEL || self.dualvar[v] == 0,
                "single vertex {v} has nonzero dual"
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(n: usize, edges: &[(usize, usize, u64)]) -> u64 {
        let g = EdgeWeightedGraph::new(n, edges).unwrap();
        let m = max_weight_matching(&g);
        assert!(m.is_valid(&g));
        m.total_weight
    }

    #[test]
    fn empty_and_single_edge() {
        assert_eq!(solve(0, &[]), 0);
        assert_eq!(solve(3, &[]), 0);
        assert_eq!(solve(2, &[(0, 1, 9)]), 9);
    }

    #[test]
    fn triangle_takes_one_edge() {
        assert_eq!(solve(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]), 1);
    }

    #[test]
    fn path_prefers_heavy_middle() {
        // P4 with edge weights 1,5,1: the middle edge alone beats the outer two.
        assert_eq!(solve(4, &[(0, 1, 1), (1, 2, 5), (2, 3, 1)]), 5);
        // And with 3,5,3 the outer pair wins.
        assert_eq!(solve(4, &[(0, 1, 3), (1, 2, 5), (2, 3, 3)]), 6);
    }

    #[test]
    fn k4_unit_weights_has_perfect_matching() {
        let edges: Vec<(usize, usize, u64)> =
            vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)];
        assert_eq!(solve(4, &edges), 2);
        assert_eq!(
            brute_max_weight_matching(&EdgeWeightedGraph::new(4, &edges).unwrap()),
            2
        );
    }

    #[test]
    fn known_tricky_blossom_cases() {
        // Cases where greedy augmentation must expand blossoms (from the
        // classic test suite for this algorithm).
        assert_eq!(
            solve(6, &[(1, 2, 9), (1, 3, 8), (2, 3, 10), (1, 4, 5), (4, 5, 4), (1, 5, 3)]),
            15
        );
        assert_eq!(
            solve(
                7,
                &[(1, 2, 9), (1, 3, 9), (2, 3, 10), (2, 4, 8), (3, 5, 8), (4, 5, 10), (5, 6, 6)]
            ),
            23
        );
        // Nested S-blossom case; optimum pairs (1,2),(3,5),(4,6),(7,8).
        assert_eq!(
            solve(
                9,
                &[
                    (1, 2, 8),
                    (1, 3, 8),
                    (2, 3, 10),
                    (2, 4, 12),
                    (3, 5, 12),
                    (4, 5, 14),
                    (4, 6, 12),
                    (5, 7, 12),
                    (6, 7, 14),
                    (7, 8, 12)
                ]
            ),
            44
        );
    }

    #[test]
    fn parallel_edges_merge_to_max() {
        let g = EdgeWeightedGraph::new(2, &[(0, 1, 3), (1, 0, 7)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1, 7)]);
        assert!(EdgeWeightedGraph::new(2, &[(1, 1, 3)]).is_err());
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::prelude::*;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(99);
        for _ in 0..400 {
            let n = rng.random_range(1..9usize);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.5) {
                        edges.push((u, v, rng.random_range(0..50u64)));
                    }
                }
            }
            let g = EdgeWeightedGraph::new(n, &edges).unwrap();
            let m = max_weight_matching(&g);
            assert!(m.is_valid(&g));
            assert_eq!(m.total_weight, brute_max_weight_matching(&g), "on {edges:?}");
        }
    }

    #[test]
    fn zero_weight_edges_change_nothing() {
        let with = solve(5, &[(0, 1, 7), (1, 2, 0), (2, 3, 7), (3, 4, 0)]);
        let without = solve(5, &[(0, 1, 7), (2, 3, 7)]);
        assert_eq!(with, without);
    }

    #[test]
    fn scaling_weights_scales_the_optimum() {
        let base: Vec<(usize, usize, u64)> =
            vec![(0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 0, 5), (0, 2, 6)];
        let w1 = solve(4, &base);
        let scaled: Vec<(usize, usize, u64)> =
            base.iter().map(|&(u, v, w)| (u, v, w * 13)).collect();
        assert_eq!(solve(4, &scaled), w1 * 13);
    }
}
