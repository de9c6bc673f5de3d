//! Weight functions on trigraphs and the calculus built on them: set
//! weights, the stability number, reductions with exterior weight, and the
//! cutset weight-transfer constructions used by the decomposition solver.
//!
//! A weight function assigns a non-negative integer to every vertex, every
//! ordered pair, and every unordered pair, subject to two rules: non-semi
//! pairs carry only zeros, and `max{w(u,v), w(v,u)} <= w(uv)` everywhere.
//! The weight of a set S counts vertex weights inside S, directed weights
//! from S outward, and pair weights wholly outside S; it is not monotone
//! in S, which is why the whole calculus exists.

use crate::decomp::{make_block_unchecked, CutKind, CutPartition, Side};
use crate::error::{internal, invalid_argument, Error, Result};
use crate::trigraph::{Adjacency, Trigraph, VertexSet};
use std::collections::BTreeMap;

/// Sparse weight storage; missing entries read as zero. Directed keys are
/// ordered pairs, pair keys are normalized to `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightFunction {
    vertex: BTreeMap<usize, u64>,
    directed: BTreeMap<(usize, usize), u64>,
    pair: BTreeMap<(usize, usize), u64>,
}

impl WeightFunction {
    pub fn new() -> Self {
        WeightFunction::default()
    }

    pub fn vertex(&self, u: usize) -> u64 {
        self.vertex.get(&u).copied().unwrap_or(0)
    }

    pub fn directed(&self, u: usize, v: usize) -> u64 {
        self.directed.get(&(u, v)).copied().unwrap_or(0)
    }

    pub fn pair(&self, u: usize, v: usize) -> u64 {
        self.pair.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    pub fn set_vertex(&mut self, u: usize, w: u64) {
        if w == 0 {
            self.vertex.remove(&u);
        } else {
            self.vertex.insert(u, w);
        }
    }

    pub fn set_directed(&mut self, u: usize, v: usize, w: u64) {
        if w == 0 {
            self.directed.remove(&(u, v));
        } else {
            self.directed.insert((u, v), w);
        }
    }

    pub fn set_pair(&mut self, u: usize, v: usize, w: u64) {
        let key = (u.min(v), u.max(v));
        if w == 0 {
            self.pair.remove(&key);
        } else {
            self.pair.insert(key, w);
        }
    }

    pub fn vertex_entries(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.vertex.iter().map(|(&u, &w)| (u, w))
    }

    pub fn directed_entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.directed.iter().map(|(&k, &w)| (k, w))
    }

    pub fn pair_entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.pair.iter().map(|(&k, &w)| (k, w))
    }

    /// Restriction to a subtrigraph given its `to_parent` relabeling: keeps
    /// entries whose vertices all survive, re-keyed to child labels.
    pub fn restricted(&self, to_parent: &[usize]) -> WeightFunction {
        let child_of = |p: usize| to_parent.binary_search(&p).ok();
        let mut w = WeightFunction::new();
        for (i, &p) in to_parent.iter().enumerate() {
            w.set_vertex(i, self.vertex(p));
        }
        for ((pu, pv), val) in self.directed_entries() {
            if let (Some(u), Some(v)) = (child_of(pu), child_of(pv)) {
                w.set_directed(u, v, val);
            }
        }
        for ((pu, pv), val) in self.pair_entries() {
            if let (Some(u), Some(v)) = (child_of(pu), child_of(pv)) {
                w.set_pair(u, v, val);
            }
        }
        w
    }
}

/// A named violation of the weight-function rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightViolation {
    NonzeroOnNonSemiPair { u: usize, v: usize },
    DirectedAbovePair { u: usize, v: usize, directed: u64, pair: u64 },
    OutOfRange { v: usize },
}

impl std::fmt::Display for WeightViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WeightViolation::NonzeroOnNonSemiPair { u, v } => {
                write!(f, "nonzero weight on non-semi pair {u} {v}")
            }
            WeightViolation::DirectedAbovePair {
                u,
                v,
                directed,
                pair,
            } => write!(
                f,
                "directed weight w({u},{v})={directed} exceeds pair weight w({u}{v})={pair}"
            ),
            WeightViolation::OutOfRange { v } => write!(f, "weight on out-of-range vertex {v}"),
        }
    }
}

/// Checks the two weight-function rules of `w` against `g`; returns the
/// first violation in deterministic key order.
pub fn check_weights(g: &Trigraph, w: &WeightFunction) -> std::result::Result<(), WeightViolation> {
    let n = g.n();
    for (u, _) in w.vertex_entries() {
        if u >= n {
            return Err(WeightViolation::OutOfRange { v: u });
        }
    }
    let mut keys: Vec<(usize, usize)> = w
        .directed_entries()
        .map(|((u, v), _)| (u.min(v), u.max(v)))
        .chain(w.pair_entries().map(|(k, _)| k))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    for (u, v) in keys {
        if v >= n {
            return Err(WeightViolation::OutOfRange { v });
        }
        if g.theta(u, v) != Adjacency::Semi {
            return Err(WeightViolation::NonzeroOnNonSemiPair { u, v });
        }
        let cap = w.pair(u, v);
        for (a, b) in [(u, v), (v, u)] {
            let d = w.directed(a, b);
            if d > cap {
                return Err(WeightViolation::DirectedAbovePair {
                    u: a,
                    v: b,
                    directed: d,
                    pair: cap,
                });
            }
        }
    }
    Ok(())
}

/// A trigraph together with a valid weight function for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTrigraph {
    pub trigraph: Trigraph,
    pub weights: WeightFunction,
}

impl WeightedTrigraph {
    pub fn new(trigraph: Trigraph, weights: WeightFunction) -> Result<Self> {
        if let Err(v) = check_weights(&trigraph, &weights) {
            return invalid_argument(format!("invalid weight function: {v}"));
        }
        Ok(WeightedTrigraph { trigraph, weights })
    }

    /// Zero weights everywhere.
    pub fn unweighted(trigraph: Trigraph) -> Self {
        WeightedTrigraph {
            trigraph,
            weights: WeightFunction::new(),
        }
    }

    /// Re-checks the weight-function rules.
    pub fn validate(&self) -> std::result::Result<(), WeightViolation> {
        check_weights(&self.trigraph, &self.weights)
    }

    /// The induced weighted subtrigraph on `x`, with its relabeling.
    pub fn induced(&self, x: &VertexSet) -> Result<(WeightedTrigraph, Vec<usize>)> {
        let ind = self.trigraph.induced(x)?;
        let w = self.weights.restricted(&ind.to_parent);
        Ok((
            WeightedTrigraph {
                trigraph: ind.trigraph,
                weights: w,
            },
            ind.to_parent,
        ))
    }

    /// The weight of a vertex set: vertex weights inside `s`, directed
    /// weights from `s` outward, pair weights wholly outside `s`.
    pub fn set_weight(&self, s: &VertexSet) -> Result<u64> {
        let n = self.trigraph.n();
        for v in s.iter() {
            if v >= n {
                return invalid_argument(format!("set_weight: vertex {v} out of range"));
            }
        }
        let mut inside = vec![false; n];
        for v in s.iter() {
            inside[v] = true;
        }
        let mut total: u128 = 0;
        for (u, w) in self.weights.vertex_entries() {
            if inside[u] {
                total += w as u128;
            }
        }
        for ((u, v), w) in self.weights.directed_entries() {
            if inside[u] && !inside[v] {
                total += w as u128;
            }
        }
        for ((u, v), w) in self.weights.pair_entries() {
            if !inside[u] && !inside[v] {
                total += w as u128;
            }
        }
        u64::try_from(total).map_err(|_| Error::Internal("set weight overflow".into()))
    }
}

/// Exact stability number by enumerating stable sets. Exponential in the
/// vertex count; test and oracle use only. Also serves as the block oracle
/// injected into the transfer operations by tests.
pub fn alpha_by_enumeration(wt: &WeightedTrigraph) -> u64 {
    let n = wt.trigraph.n();
    assert!(n < 64, "alpha_by_enumeration is exponential; n={n} is far too large");
    // compat[v] = mask of u < v that are anti-adjacent to v.
    let mut compat = vec![0u64; n];
    for (v, slot) in compat.iter_mut().enumerate() {
        for u in 0..v {
            if wt.trigraph.theta(u, v).is_anti_adjacent() {
                *slot |= 1 << u;
            }
        }
    }
    let vertex: Vec<(usize, u64)> = wt.weights.vertex_entries().collect();
    let directed: Vec<((usize, usize), u64)> = wt.weights.directed_entries().collect();
    let pair: Vec<((usize, usize), u64)> = wt.weights.pair_entries().collect();
    let eval = |chosen: u64| -> u64 {
        let inside = |v: usize| chosen >> v & 1 == 1;
        let mut t = 0u64;
        for &(u, w) in &vertex {
            if inside(u) {
                t += w;
            }
        }
        for &((u, v), w) in &directed {
            if inside(u) && !inside(v) {
                t += w;
            }
        }
        for &((u, v), w) in &pair {
            if !inside(u) && !inside(v) {
                t += w;
            }
        }
        t
    };

    let mut best = 0u64;
    // Depth-first over vertices; a vertex may join only when anti-adjacent
    // to everything already chosen.
    let mut stack = vec![(0usize, 0u64)];
    while let Some((v, chosen)) = stack.pop() {
        if v == n {
            best = best.max(eval(chosen));
            continue;
        }
        stack.push((v + 1, chosen));
        if chosen & !compat[v] == 0 {
            stack.push((v + 1, chosen | 1 << v));
        }
    }
    best
}

/// Reduction of a weighted trigraph to a vertex subset: the subtrigraph on
/// `r` whose vertex weights are debited by the slack of pairs leaving `r`
/// (floored at zero), plus the exterior weight absorbed by the reduction.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub reduced: WeightedTrigraph,
    pub to_parent: Vec<usize>,
    pub exterior: u64,
}

/// Computes `Red` and `Ext` for the subset `r` in O(n + entries) time.
pub fn reduce(wt: &WeightedTrigraph, r: &VertexSet) -> Result<Reduction> {
    let n = wt.trigraph.n();
    for v in r.iter() {
        if v >= n {
            return invalid_argument(format!("reduce: vertex {v} out of range"));
        }
    }
    let mut inside = vec![false; n];
    for v in r.iter() {
        inside[v] = true;
    }

    let mut debit = vec![0u128; n];
    let mut exterior: u128 = 0;
    for ((u, v), wp) in wt.weights.pair_entries() {
        match (inside[u], inside[v]) {
            (true, true) => {}
            (true, false) => {
                debit[u] += (wp - wt.weights.directed(u, v)) as u128;
                exterior += wp as u128;
            }
            (false, true) => {
                debit[v] += (wp - wt.weights.directed(v, u)) as u128;
                exterior += wp as u128;
            }
            (false, false) => exterior += wp as u128,
        }
    }

    let ind = wt.trigraph.induced(r)?;
    let mut w = wt.weights.restricted(&ind.to_parent);
    for (child, &parent) in ind.to_parent.iter().enumerate() {
        let base = wt.weights.vertex(parent) as u128;
        let reduced = base.saturating_sub(debit[parent]);
        w.set_vertex(child, reduced as u64);
    }
    let exterior =
        u64::try_from(exterior).map_err(|_| Error::Internal("exterior weight overflow".into()))?;
    Ok(Reduction {
        reduced: WeightedTrigraph {
            trigraph: ind.trigraph,
            weights: w,
        },
        to_parent: ind.to_parent,
        exterior,
    })
}

/// The per-subset stability values `alpha_{A ∪ C'}` computed over a cutset,
/// keyed by the subset `C'` in host labels. Monotone under inclusion.
#[derive(Debug, Clone)]
pub struct CutsetAlphaTable {
    entries: BTreeMap<VertexSet, u64>,
}

impl CutsetAlphaTable {
    pub fn get(&self, subset: &VertexSet) -> Option<u64> {
        self.entries.get(subset).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&VertexSet, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    fn check_monotone(&self) -> Result<()> {
        for (k1, v1) in self.entries() {
            for (k2, v2) in self.entries() {
                if k1.is_subset_of(k2) && v1 > v2 {
                    return internal(format!(
                        "cutset alpha table not monotone: alpha[{k1}]={v1} > alpha[{k2}]={v2}"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Oracle solving weighted stability exactly on a block reduction.
pub type AlphaOracle<'a> = dyn FnMut(&WeightedTrigraph) -> Result<u64> + 'a;

/// Builds the table of `alpha_{A ∪ C'}` over all subsets of the cutset,
/// evaluating `Red`/`Ext` on the weighted A-block and delegating the
/// stability number to the oracle.
fn cutset_alpha_table(
    wt: &WeightedTrigraph,
    part: &CutPartition,
    alpha: &mut AlphaOracle,
) -> Result<(CutsetAlphaTable, Vec<usize>)> {
    let a_block = make_block_unchecked(&wt.trigraph, part, Side::A)?;
    let block_w = wt.weights.restricted(&a_block.to_parent);
    let block_wt = WeightedTrigraph {
        trigraph: a_block.trigraph.clone(),
        weights: block_w,
    };
    let c: Vec<usize> = part.c.iter().collect();
    let a_local: Vec<usize> = part
        .a
        .iter()
        .map(|p| a_block.to_parent.binary_search(&p).unwrap())
        .collect();
    let mut entries = BTreeMap::new();
    for mask in 0u32..1 << c.len() {
        let subset: Vec<usize> = (0..c.len()).filter(|&i| mask >> i & 1 == 1).map(|i| c[i]).collect();
        let mut r: Vec<usize> = a_local.clone();
        for &p in &subset {
            r.push(a_block.to_parent.binary_search(&p).unwrap());
        }
        let red = reduce(&block_wt, &VertexSet::from_iter(r))?;
        let a_val = alpha(&red.reduced)?;
        let total = a_val
            .checked_add(red.exterior)
            .ok_or_else(|| Error::Internal("alpha table overflow".into()))?;
        entries.insert(VertexSet::from_iter(subset), total);
    }
    let table = CutsetAlphaTable { entries };
    table.check_monotone()?;
    Ok((table, a_block.to_parent))
}

/// Outcome of the clique-cutset weight transfer: a weighted B-block whose
/// stability number is `alpha(G,w) - base`.
#[derive(Debug, Clone)]
pub struct CliqueTransfer {
    pub b_block: WeightedTrigraph,
    pub to_parent: Vec<usize>,
    /// The constant `alpha_A`; the caller adds it back after recursing.
    pub base: u64,
    pub table: CutsetAlphaTable,
}

/// Weight transfer across a good cut-partition of type clique. Each cutset
/// vertex `c` gets weight `alpha_{A ∪ {c}} - alpha_A` in the B-block; all
/// other weights are inherited. Guarantees
/// `alpha(G,w) = base + alpha(G_B, w_B)` when the oracle is exact.
pub fn clique_cut_transfer(
    wt: &WeightedTrigraph,
    part: &CutPartition,
    alpha: &mut AlphaOracle,
) -> Result<CliqueTransfer> {
    if part.kind != CutKind::Clique {
        return invalid_argument("clique_cut_transfer requires a type-clique partition");
    }
    crate::decomp::validate_cut_partition(&wt.trigraph, part)?;
    let (table, _) = cutset_alpha_table(wt, part, alpha)?;
    let base = table.get(&VertexSet::new()).unwrap();

    let b_block = make_block_unchecked(&wt.trigraph, part, Side::B)?;
    let mut w = wt.weights.restricted(&b_block.to_parent);
    for cv in part.c.iter() {
        let av = table.get(&VertexSet::singleton(cv)).unwrap();
        let transferred = av.checked_sub(base).ok_or_else(|| {
            Error::Internal(format!("negative transferred weight at cutset vertex {cv}"))
        })?;
        let local = b_block.to_parent.binary_search(&cv).unwrap();
        w.set_vertex(local, transferred);
    }
    let weighted = WeightedTrigraph::new(b_block.trigraph, w)
        .map_err(|e| Error::Internal(format!("clique transfer produced invalid weights: {e}")))?;
    Ok(CliqueTransfer {
        b_block: weighted,
        to_parent: b_block.to_parent,
        base,
        table,
    })
}

/// Outcome of the stable-cutset weight transfer: a weighted B-block with
/// `alpha(G_B, w_B) = alpha(G, w)`.
#[derive(Debug, Clone)]
pub struct StableTransfer {
    pub b_block: WeightedTrigraph,
    pub to_parent: Vec<usize>,
    pub table: CutsetAlphaTable,
}

/// Weight transfer across a good cut-partition of type stable, with cutset
/// `{c1, c2}` (c1 the smaller label). The B-block carries the semi pair
/// `c1c2`, whose five weight entries encode the four A-side stability
/// values. The construction provably yields a valid weight function; a
/// violation here means corrupted input or a bug, hence internal-error.
pub fn stable_cut_transfer(
    wt: &WeightedTrigraph,
    part: &CutPartition,
    alpha: &mut AlphaOracle,
) -> Result<StableTransfer> {
    if part.kind != CutKind::Stable || part.c.len() != 2 {
        return invalid_argument("stable_cut_transfer requires a type-stable partition");
    }
    crate::decomp::validate_cut_partition(&wt.trigraph, part)?;
    let c1 = part.c.as_slice()[0];
    let c2 = part.c.as_slice()[1];
    let (table, _) = cutset_alpha_table(wt, part, alpha)?;
    let alpha_a = table.get(&VertexSet::new()).unwrap();
    let alpha_c1 = table.get(&VertexSet::singleton(c1)).unwrap();
    let alpha_c2 = table.get(&VertexSet::singleton(c2)).unwrap();
    let alpha_c12 = table.get(&part.c).unwrap();
    let w_c2 = wt.weights.vertex(c2);

    let sub = |x: u64, y: u64, what: &str| -> Result<u64> {
        x.checked_sub(y)
            .ok_or_else(|| Error::Internal(format!("stable transfer underflow computing {what}")))
    };
    let new_c1 = sub(alpha_c12, w_c2, "w_B(c1)")?;
    let new_dir_12 = sub(alpha_c1 + w_c2, alpha_c12, "w_B(c1,c2)")?;
    let new_dir_21 = sub(alpha_c2, w_c2, "w_B(c2,c1)")?;
    let new_pair = alpha_a;

    let b_block = make_block_unchecked(&wt.trigraph, part, Side::B)?;
    let mut w = wt.weights.restricted(&b_block.to_parent);
    let l1 = b_block.to_parent.binary_search(&c1).unwrap();
    let l2 = b_block.to_parent.binary_search(&c2).unwrap();
    w.set_vertex(l1, new_c1);
    w.set_vertex(l2, w_c2);
    w.set_directed(l1, l2, new_dir_12);
    w.set_directed(l2, l1, new_dir_21);
    w.set_pair(l1, l2, new_pair);

    let weighted = WeightedTrigraph::new(b_block.trigraph, w)
        .map_err(|e| Error::Internal(format!("stable transfer produced invalid weights: {e}")))?;
    Ok(StableTransfer {
        b_block: weighted,
        to_parent: b_block.to_parent,
        table,
    })
}
