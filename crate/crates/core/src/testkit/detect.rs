//! Brute-force class validators: does every realization avoid induced
//! K4-subdivisions and wheels? Exponential in both the vertex count and the
//! number of semi pairs; sized for test instances.

use crate::error::{Error, Result};
use crate::trigraph::Trigraph;

const MAX_VERTICES: usize = 16;
const MAX_SEMI_PAIRS: usize = 10;

/// How an instance leaves the solver's graph class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassViolation {
    Wheel,
    Isk4,
}

impl std::fmt::Display for ClassViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassViolation::Wheel => write!(f, "not wheel-free"),
            ClassViolation::Isk4 => write!(f, "contains an induced K4 subdivision"),
        }
    }
}

/// Checks every realization for induced wheels and induced K4-subdivisions.
/// Refuses oversized instances.
pub fn is_isk4_wheel_free(g: &Trigraph) -> Result<bool> {
    Ok(find_class_violation(g)?.is_none())
}

/// Like [`is_isk4_wheel_free`], but reports what was found. Wheels are
/// checked first.
pub fn find_class_violation(g: &Trigraph) -> Result<Option<ClassViolation>> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::Refused(format!(
            "class validation is exponential; n={n} exceeds the bound {MAX_VERTICES}"
        )));
    }
    let m = g.semi_pairs().len();
    if m > MAX_SEMI_PAIRS {
        return Err(Error::Refused(format!(
            "class validation enumerates 2^m realizations; m={m} exceeds the bound {MAX_SEMI_PAIRS}"
        )));
    }
    for r in g.realizations() {
        let adj = bit_adjacency(&r);
        if graph_contains_wheel(&adj) {
            return Ok(Some(ClassViolation::Wheel));
        }
        if graph_contains_isk4(&adj) {
            return Ok(Some(ClassViolation::Isk4));
        }
    }
    Ok(None)
}

fn bit_adjacency(g: &Trigraph) -> Vec<u32> {
    let n = g.n();
    let mut adj = vec![0u32; n];
    for (u, v) in g.strong_pairs() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// An induced wheel: a chordless cycle of length at least four plus a
/// center with at least three neighbors on it.
pub fn graph_contains_wheel(adj: &[u32]) -> bool {
    let n = adj.len();
    let mut found = false;
    for start in 0..n {
        if found {
            break;
        }
        // Chordless cycles with `start` as their smallest vertex, counted
        // once by requiring second vertex < closing vertex.
        let mut stack: Vec<(Vec<usize>, u32)> = Vec::new();
        let higher: u32 = !0u32 << start << 1; // vertices > start
        for v in bits(adj[start] & higher) {
            stack.push((vec![start, v], (1 << start) | (1 << v)));
        }
        while let Some((path, mask)) = stack.pop() {
            let last = *path.last().unwrap();
            for w in bits(adj[last] & higher & !mask) {
                // Induced: w may touch only the path's last vertex, except
                // for the closing edge back to start.
                let middle = mask & !(1 << start) & !(1 << last);
                if adj[w] & middle != 0 {
                    continue;
                }
                if adj[w] >> start & 1 == 1 {
                    if path.len() >= 3 && path[1] < w {
                        let cycle = mask | (1 << w);
                        for (x, &ax) in adj.iter().enumerate() {
                            if cycle >> x & 1 == 0 && (ax & cycle).count_ones() >= 3 {
                                return true;
                            }
                        }
                    }
                    // Extending past w would leave the chord w-start.
                } else {
                    let mut next = path.clone();
                    next.push(w);
                    stack.push((next, mask | (1 << w)));
                }
            }
        }
        let _ = &mut found;
    }
    false
}

/// An induced subdivision of K4: some vertex subset induces a connected
/// graph with exactly four degree-3 vertices, the rest degree 2, whose
/// chain contraction is a simple K4.
pub fn graph_contains_isk4(adj: &[u32]) -> bool {
    let n = adj.len();
    for mask in 0u32..1 << n {
        if (mask.count_ones() as usize) < 4 {
            continue;
        }
        if induces_k4_subdivision(adj, mask) {
            return true;
        }
    }
    false
}

fn induces_k4_subdivision(adj: &[u32], mask: u32) -> bool {
    let mut branch = [0usize; 4];
    let mut branch_count = 0;
    for v in bits(mask) {
        match (adj[v] & mask).count_ones() {
            2 => {}
            3 => {
                if branch_count == 4 {
                    return false;
                }
                branch[branch_count] = v;
                branch_count += 1;
            }
            _ => return false,
        }
    }
    if branch_count != 4 {
        return false;
    }
    // Connectivity within the subset.
    let first = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << first;
    let mut stack = vec![first];
    while let Some(v) = stack.pop() {
        for w in bits(adj[v] & mask & !seen) {
            seen |= 1 << w;
            stack.push(w);
        }
    }
    if seen != mask {
        return false;
    }
    // Contract degree-2 chains; each unordered branch pair must be joined by
    // exactly one chain (seen twice, once from each end).
    let mut pair_count = std::collections::BTreeMap::new();
    for &b in &branch[..branch_count] {
        for x0 in bits(adj[b] & mask) {
            let mut prev = b;
            let mut x = x0;
            while (adj[x] & mask).count_ones() == 2 {
                let next = bits(adj[x] & mask).find(|&w| w != prev).unwrap();
                prev = x;
                x = next;
            }
            if x == b {
                return false; // a chain looping back to its own branch vertex
            }
            *pair_count.entry((b.min(x), b.max(x))).or_insert(0usize) += 1;
        }
    }
    if pair_count.len() != 6 {
        return false;
    }
    pair_count.values().all(|&c| c == 2)
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
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
