//! Brute-force oracles, class validators, seeded instance generators, and
//! reduction constructions used to verify the solver.

mod detect;
mod generate;
mod hardness;

pub use detect::{
    find_class_violation, graph_contains_isk4, graph_contains_wheel, is_isk4_wheel_free,
    ClassViolation,
};
pub use generate::{
    complete_bipartite, glue_at_vertex, line_trigraph, scaling_instance, sp_trigraph,
    substitute_narrow_path, Generator, GeneratorConfig, InstanceClass,
};
pub use hardness::{
    arc_contribution, bipartite_trigraph_hardness, extended_bipartite_of,
    poljak_double_subdivision, two_extension, HardnessInstance,
};

use crate::error::{Error, Result};
use crate::trigraph::Trigraph;
use crate::weight::{alpha_by_enumeration, WeightedTrigraph};

/// Default size bound for [`brute_alpha`].
pub const BRUTE_ALPHA_BOUND: usize = 16;

/// Exact stability number by stable-set enumeration, refusing instances
/// beyond the default bound of 16 vertices.
pub fn brute_alpha(wt: &WeightedTrigraph) -> Result<u64> {
    brute_alpha_bounded(wt, BRUTE_ALPHA_BOUND)
}

/// Bounded variant of [`brute_alpha`].
pub fn brute_alpha_bounded(wt: &WeightedTrigraph, bound: usize) -> Result<u64> {
    let n = wt.trigraph.n();
    if n > bound {
        return Err(Error::Refused(format!(
            "brute-force alpha is exponential; n={n} exceeds the bound {bound}"
        )));
    }
    Ok(alpha_by_enumeration(wt))
}

/// Exact maximum weight independent set of a graph by branch and bound with
/// component splitting. Still an exhaustive search, but the splitting keeps
/// path- and cycle-like graphs polynomial, which the subdivision-heavy
/// reduction instances need.
pub fn brute_mwss_graph(g: &Trigraph, weights: &[u64]) -> u64 {
    assert!(g.is_graph(), "brute_mwss_graph expects a graph");
    let n = g.n();
    assert!(n <= 64, "bitmask-based search supports at most 64 vertices");
    assert_eq!(weights.len(), n);
    let mut adj = vec![0u64; n];
    for (u, v) in g.strong_pairs() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    fn bits64(mask: u64) -> impl Iterator<Item = usize> {
        std::iter::successors(if mask == 0 { None } else { Some(mask) }, |&m| {
            let next = m & (m - 1);
            if next == 0 {
                None
            } else {
                Some(next)
            }
        })
        .map(|m| m.trailing_zeros() as usize)
    }
    fn solve(adj: &[u64], weights: &[u64], mask: u64) -> u64 {
        if mask == 0 {
            return 0;
        }
        // Split off the component of the lowest remaining vertex.
        let first = mask.trailing_zeros() as usize;
        let mut comp = 1u64 << first;
        let mut stack = vec![first];
        while let Some(v) = stack.pop() {
            let fresh = adj[v] & mask & !comp;
            comp |= fresh;
            stack.extend(bits64(fresh));
        }
        if comp != mask {
            return solve(adj, weights, comp) + solve(adj, weights, mask & !comp);
        }
        // Branch on a maximum-degree vertex of this component.
        let v = bits64(mask)
            .max_by_key(|&v| ((adj[v] & mask).count_ones(), usize::MAX - v))
            .unwrap();
        if adj[v] & mask == 0 {
            // Isolated vertices: take them all.
            return bits64(mask).map(|v| weights[v]).sum();
        }
        let without = solve(adj, weights, mask & !(1 << v));
        let with = weights[v] + solve(adj, weights, mask & !(1 << v) & !adj[v]);
        without.max(with)
    }
    solve(&adj, weights, if n == 64 { !0 } else { (1u64 << n) - 1 })
}
