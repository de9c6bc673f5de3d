//! The top-level solver: extreme decomposition, weight transfer onto the
//! shrinking B-side, basic-class dispatch at the bottom, and the
//! self-reducibility wrapper that extracts a witnessing stable set on
//! graphs.

use crate::basic::{alpha_basic, classify_basic, BasicClass};
use crate::decomp::{find_extreme_cut_partition, make_block, CutKind, ExtremeCut, Side};
use crate::error::{internal, invalid_argument, Error, Result};
use crate::trigraph::{Adjacency, VertexSet};
use crate::weight::{clique_cut_transfer, stable_cut_transfer, WeightedTrigraph};

/// What one decomposition step transferred onto the B-block.
#[derive(Debug, Clone)]
pub enum TransferSummary {
    Clique {
        base: u64,
        cutset_weights: Vec<(usize, u64)>,
    },
    Stable {
        c1: usize,
        c2: usize,
        w_c1: u64,
        w_c2: u64,
        w_dir_12: u64,
        w_dir_21: u64,
        w_pair: u64,
    },
}

/// One recursion step: the cut-partition used (original input labels), the
/// solved A-block, the per-subset alpha table, and the size of the B-side
/// left to solve. The alpha table and transfer are absent when the trace
/// comes from a decomposition-only run.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub kind: CutKind,
    pub cutset: Vec<usize>,
    pub a_vertices: Vec<usize>,
    pub a_class: BasicClass,
    pub alpha_table: Vec<(Vec<usize>, u64)>,
    pub transfer: Option<TransferSummary>,
    pub b_size: usize,
}

/// Audit record of the whole recursion; the B-side shrinks strictly along
/// the steps.
#[derive(Debug, Clone)]
pub struct DecompositionTrace {
    pub input_n: usize,
    pub steps: Vec<TraceStep>,
    pub terminal_n: usize,
    pub terminal_class: BasicClass,
    /// Absent for decomposition-only runs.
    pub alpha: Option<u64>,
}

impl DecompositionTrace {
    /// Line-oriented text rendering with stable key order.
    pub fn to_text(&self) -> String {
        let fmt_set = |s: &[usize]| {
            let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", items.join(","))
        };
        let mut out = String::new();
        out.push_str("decomposition-trace v1\n");
        out.push_str(&format!("input n={}\n", self.input_n));
        for (i, step) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "step {} kind={} c={} a_size={} a_class={} b_size={}\n",
                i + 1,
                step.kind,
                fmt_set(&step.cutset),
                step.a_vertices.len(),
                step.a_class,
                step.b_size
            ));
            for (subset, value) in &step.alpha_table {
                out.push_str(&format!("  alpha[{}]={}\n", fmt_set(subset), value));
            }
            match &step.transfer {
                Some(TransferSummary::Clique {
                    base,
                    cutset_weights,
                }) => {
                    out.push_str(&format!("  transfer clique base={base}\n"));
                    for (v, w) in cutset_weights {
                        out.push_str(&format!("  w_b[{v}]={w}\n"));
                    }
                }
                Some(TransferSummary::Stable {
                    c1,
                    c2,
                    w_c1,
                    w_c2,
                    w_dir_12,
                    w_dir_21,
                    w_pair,
                }) => {
                    out.push_str(&format!(
                        "  transfer stable c1={c1} c2={c2} w_c1={w_c1} w_c2={w_c2} w_c1c2_dir={w_dir_12} w_c2c1_dir={w_dir_21} w_pair={w_pair}\n"
                    ));
                }
                None => {}
            }
        }
        match self.alpha {
            Some(alpha) => out.push_str(&format!(
                "terminal n={} class={} alpha={}\n",
                self.terminal_n, self.terminal_class, alpha
            )),
            None => out.push_str(&format!(
                "terminal n={} class={}\n",
                self.terminal_n, self.terminal_class
            )),
        }
        out
    }

    /// DOT export of the block tree: one node per solved A-block, one for
    /// the terminal basic block.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph blocks {\n");
        for (i, step) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "  step{} [label=\"A-block {} ({} vertices, cut {})\"];\n",
                i,
                step.a_class,
                step.a_vertices.len(),
                step.kind
            ));
            if i > 0 {
                out.push_str(&format!("  step{} -> step{};\n", i - 1, i));
            }
        }
        out.push_str(&format!(
            "  terminal [label=\"terminal {} ({} vertices)\"];\n",
            self.terminal_class, self.terminal_n
        ));
        if !self.steps.is_empty() {
            out.push_str(&format!("  step{} -> terminal;\n", self.steps.len() - 1));
        }
        out.push_str("}\n");
        out
    }
}

/// Stability number plus the audit trace.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub alpha: u64,
    pub trace: DecompositionTrace,
}

/// Computes the stability number of a weighted {ISK4,wheel}-free trigraph.
///
/// Out-of-class inputs either still solve correctly or surface as
/// invalid-input (failed root reconstruction) or internal-error (violated
/// transfer guarantees).
pub fn alpha(wt: &WeightedTrigraph) -> Result<SolveResult> {
    solve(wt, true)
}

/// The no-trace fast path.
pub fn alpha_value(wt: &WeightedTrigraph) -> Result<u64> {
    Ok(solve(wt, false)?.alpha)
}

fn solve(wt: &WeightedTrigraph, want_trace: bool) -> Result<SolveResult> {
    let input_n = wt.trigraph.n();
    let mut current = wt.clone();
    let mut labels: Vec<usize> = (0..input_n).collect();
    let mut steps: Vec<TraceStep> = Vec::new();
    let mut acc: u64 = 0;

    // At most n - 1 decomposition steps: the B-side strictly shrinks.
    for _round in 0..=input_n {
        let part = match find_extreme_cut_partition(&current.trigraph)? {
            ExtremeCut::Basic => {
                let (a, class) = alpha_basic(&current)?;
                let alpha = acc
                    .checked_add(a)
                    .ok_or_else(|| Error::Internal("alpha overflow".into()))?;
                return Ok(SolveResult {
                    alpha,
                    trace: DecompositionTrace {
                        input_n,
                        steps,
                        terminal_n: current.trigraph.n(),
                        terminal_class: class,
                        alpha: Some(alpha),
                    },
                });
            }
            ExtremeCut::Partition(p) => p,
        };

        // The extreme partition's A-block is basic, and basic classes are
        // hereditary, so every reduction solves through the basic dispatch.
        // Each reduction is re-classified: gem counts and bipartitions
        // change under reduction.
        let mut oracle = |red: &WeightedTrigraph| alpha_basic(red).map(|(a, _)| a);

        let (b_block, to_parent, transfer, table) = match part.kind {
            CutKind::Clique => {
                let t = clique_cut_transfer(&current, &part, &mut oracle)?;
                acc = acc
                    .checked_add(t.base)
                    .ok_or_else(|| Error::Internal("alpha overflow".into()))?;
                let cutset_weights: Vec<(usize, u64)> = part
                    .c
                    .iter()
                    .map(|c| {
                        let local = t.to_parent.binary_search(&c).unwrap();
                        (labels[c], t.b_block.weights.vertex(local))
                    })
                    .collect();
                let summary = Some(TransferSummary::Clique {
                    base: t.base,
                    cutset_weights,
                });
                (t.b_block, t.to_parent, summary, t.table)
            }
            CutKind::Stable => {
                let t = stable_cut_transfer(&current, &part, &mut oracle)?;
                let c1 = part.c.as_slice()[0];
                let c2 = part.c.as_slice()[1];
                let l1 = t.to_parent.binary_search(&c1).unwrap();
                let l2 = t.to_parent.binary_search(&c2).unwrap();
                let summary = Some(TransferSummary::Stable {
                    c1: labels[c1],
                    c2: labels[c2],
                    w_c1: t.b_block.weights.vertex(l1),
                    w_c2: t.b_block.weights.vertex(l2),
                    w_dir_12: t.b_block.weights.directed(l1, l2),
                    w_dir_21: t.b_block.weights.directed(l2, l1),
                    w_pair: t.b_block.weights.pair(l1, l2),
                });
                (t.b_block, t.to_parent, summary, t.table)
            }
        };

        if want_trace {
            let a_block = make_block(&current.trigraph, &part, Side::A)?;
            let a_class = classify_basic(&a_block.trigraph);
            let alpha_table: Vec<(Vec<usize>, u64)> = table
                .entries()
                .map(|(subset, value)| {
                    (subset.iter().map(|v| labels[v]).collect(), value)
                })
                .collect();
            steps.push(TraceStep {
                kind: part.kind,
                cutset: part.c.iter().map(|v| labels[v]).collect(),
                a_vertices: part.a.iter().map(|v| labels[v]).collect(),
                a_class,
                alpha_table,
                transfer,
                b_size: b_block.trigraph.n(),
            });
        }

        labels = to_parent.iter().map(|&p| labels[p]).collect();
        current = b_block;
    }
    internal("decomposition recursion failed to terminate")
}

/// Runs the extreme decomposition loop without solving anything: each step
/// records the cut-partition and its basic A-block, then continues on the
/// bare B-block. Works on any trigraph whose decomposition terminates.
pub fn decompose_trace(g: &crate::trigraph::Trigraph) -> Result<DecompositionTrace> {
    let input_n = g.n();
    let mut current = g.clone();
    let mut labels: Vec<usize> = (0..input_n).collect();
    let mut steps: Vec<TraceStep> = Vec::new();
    for _round in 0..=input_n {
        let part = match find_extreme_cut_partition(&current)? {
            ExtremeCut::Basic => {
                return Ok(DecompositionTrace {
                    input_n,
                    steps,
                    terminal_n: current.n(),
                    terminal_class: classify_basic(&current),
                    alpha: None,
                });
            }
            ExtremeCut::Partition(p) => p,
        };
        let a_block = make_block(&current, &part, Side::A)?;
        let b_block = make_block(&current, &part, Side::B)?;
        steps.push(TraceStep {
            kind: part.kind,
            cutset: part.c.iter().map(|v| labels[v]).collect(),
            a_vertices: part.a.iter().map(|v| labels[v]).collect(),
            a_class: classify_basic(&a_block.trigraph),
            alpha_table: Vec::new(),
            transfer: None,
            b_size: b_block.trigraph.n(),
        });
        labels = b_block.to_parent.iter().map(|&p| labels[p]).collect();
        current = b_block.trigraph;
    }
    internal("decomposition recursion failed to terminate")
}

/// A maximum weight stable set of a graph, with its weight.
#[derive(Debug, Clone)]
pub struct ExtractionResult {
    pub stable_set: VertexSet,
    pub weight: u64,
}

/// Self-reducibility loop for graphs: for the lowest-labeled vertex v,
/// keep v exactly when w(v) + alpha(G \ N[v]) matches alpha(G), recursing
/// on the matching side. The input must be an {ISK4,wheel}-free graph.
pub fn max_stable_set_graph(wt: &WeightedTrigraph) -> Result<ExtractionResult> {
    if !wt.trigraph.is_graph() {
        return invalid_argument("stable set extraction requires a graph (no semi pairs)");
    }
    let target = alpha_value(wt)?;
    let mut chosen: Vec<usize> = Vec::new();
    let mut current = wt.clone();
    let mut labels: Vec<usize> = (0..wt.trigraph.n()).collect();
    let mut alpha_cur = target;

    while current.trigraph.n() > 0 {
        let v = 0usize;
        let n = current.trigraph.n();
        let closed: Vec<usize> = std::iter::once(v)
            .chain((0..n).filter(|&u| u != v && current.trigraph.theta(v, u) == Adjacency::StrongAdj))
            .collect();
        let closed_set = VertexSet::from_iter(closed);
        let rest = VertexSet::full(n).minus(&closed_set);
        let (without_closed, map_closed) = current.induced(&rest)?;
        let a2 = alpha_value(&without_closed)?;
        let wv = current.weights.vertex(v);
        if wv + a2 == alpha_cur {
            chosen.push(labels[v]);
            labels = map_closed.iter().map(|&p| labels[p]).collect();
            current = without_closed;
            alpha_cur = a2;
        } else {
            // v lies in no maximum weight stable set, so the stability
            // number is unchanged after deleting it.
            let rest = VertexSet::full(n).minus(&VertexSet::singleton(v));
            let (without_v, map_v) = current.induced(&rest)?;
            labels = map_v.iter().map(|&p| labels[p]).collect();
            current = without_v;
        }
    }

    let stable_set = VertexSet::from_iter(chosen);
    if !wt.trigraph.is_stable_set(&stable_set)? {
        return internal("extraction produced a non-stable set");
    }
    let weight: u64 = stable_set.iter().map(|v| wt.weights.vertex(v)).sum();
    if weight != target {
        return internal(format!(
            "extracted weight {weight} does not match alpha {target}"
        ));
    }
    Ok(ExtractionResult {
        stable_set,
        weight,
    })
}
