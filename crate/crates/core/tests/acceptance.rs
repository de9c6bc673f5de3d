//! Acceptance suite: one test per criterion, each printing a pass line with
//! the case counts it covered. Every comparison is exact integer equality;
//! the scaling test pins wall-clock budgets.

use mwss::basic::{
    alpha_complete_bipartite, alpha_line, alpha_series_parallel, replace_all_gems, replace_gem,
};
use mwss::decomp::{find_good_cut_partition, CutKind};
use mwss::lineroot::line_graph_root;
use mwss::matching::{brute_max_weight_matching, max_weight_matching, EdgeWeightedGraph};
use mwss::solver::{alpha_value, max_stable_set_graph};
use mwss::testkit::{
    arc_contribution, bipartite_trigraph_hardness, brute_alpha, brute_alpha_bounded,
    brute_mwss_graph, complete_bipartite, extended_bipartite_of, is_isk4_wheel_free,
    line_trigraph, poljak_double_subdivision, scaling_instance, sp_trigraph, Generator,
    GeneratorConfig,
};
use mwss::weight::{alpha_by_enumeration, clique_cut_transfer, reduce, stable_cut_transfer};
use mwss::{Adjacency, Trigraph, VertexSet, WeightFunction, WeightedTrigraph};
use rand::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn random_trigraph(rng: &mut ChaCha12Rng, n: usize, semi_chance: f64) -> Trigraph {
    let mut g = Trigraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let roll: f64 = rng.random();
            let a = if roll < 0.45 {
                Adjacency::StrongAnti
            } else if roll < 0.45 + semi_chance {
                Adjacency::Semi
            } else {
                Adjacency::StrongAdj
            };
            g.set(u, v, a).unwrap();
        }
    }
    g
}

fn random_valid_weights(rng: &mut ChaCha12Rng, g: &Trigraph, wmax: u64) -> WeightedTrigraph {
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
    WeightedTrigraph::new(g.clone(), w).unwrap()
}

fn random_subset(rng: &mut ChaCha12Rng, n: usize, p: f64) -> VertexSet {
    VertexSet::from_iter((0..n).filter(|_| rng.random_bool(p)))
}

/// Criterion 1: solver alpha equals brute-force alpha on at least 1000
/// generated, validator-passed weighted trigraphs with n <= 14, weights <= 20.
#[test]
fn acceptance_01_oracle_equivalence() {
    let config = GeneratorConfig {
        seed: 0x5eed_0001,
        n_min: 4,
        n_max: 14,
        weight_max: 20,
        ..Default::default()
    };
    let mut generator = Generator::new(config);
    let total = 1000;
    for i in 0..total {
        let (class, wt) = generator.next_instance();
        assert!(is_isk4_wheel_free(&wt.trigraph).unwrap());
        let got = alpha_value(&wt)
            .unwrap_or_else(|e| panic!("solver failed on instance {i} ({class}): {e}"));
        let want = brute_alpha(&wt).unwrap();
        assert_eq!(got, want, "alpha mismatch on instance {i} ({class})");
    }
    println!("acceptance 1 oracle equivalence: pass ({total} instances, tolerance 0)");
}

/// Criterion 2: gem replacement preserves alpha on at least 500 random
/// weighted trigraphs (not necessarily in class), n <= 8, m <= 4, for both a
/// single replacement and the full expansion.
#[test]
fn acceptance_02_gem_preservation() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_0002);
    let mut done = 0;
    while done < 500 {
        let n = rng.random_range(2..=8usize);
        let g = random_trigraph(&mut rng, n, 0.25);
        if g.semi_pairs().len() > 4 {
            continue;
        }
        let wt = random_valid_weights(&mut rng, &g, 15);
        let before = alpha_by_enumeration(&wt);
        if let Some(&(u, v)) = wt.trigraph.semi_pairs().first() {
            let single = replace_gem(&wt, u, v).unwrap();
            assert_eq!(alpha_by_enumeration(&single.result), before);
        }
        let full = replace_all_gems(&wt);
        assert!(full.result.trigraph.is_graph());
        assert_eq!(alpha_by_enumeration(&full.result), before);
        done += 1;
    }
    println!("acceptance 2 gem preservation: pass (500 instances, single and full expansion)");
}

/// Criterion 3: the weight-calculus propositions hold on at least 10000
/// randomized (instance, subset) cases each, n <= 12.
#[test]
fn acceptance_03_weight_calculus() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_0003);
    let cases = 10_000;

    // Delete-vertices bound and its zero-vertex corollary.
    for _ in 0..cases {
        let n = rng.random_range(1..=12usize);
        let g = random_trigraph(&mut rng, n, 0.2);
        let wt = random_valid_weights(&mut rng, &g, 20);
        let s = random_subset(&mut rng, n, 0.5);
        let z = random_subset(&mut rng, n, 0.3);
        let lhs = wt.set_weight(&s).unwrap();
        let rhs = wt.set_weight(&s.minus(&z)).unwrap()
            + z.iter().map(|u| wt.weights.vertex(u)).sum::<u64>();
        assert!(lhs <= rhs, "delete-vertices bound failed");
    }

    // Some optimum avoids all zero-weight vertices.
    for _ in 0..cases {
        let n = rng.random_range(1..=10usize);
        let g = random_trigraph(&mut rng, n, 0.2);
        let wt = random_valid_weights(&mut rng, &g, 6);
        let alpha = alpha_by_enumeration(&wt);
        let zero_free_best = best_zero_free(&wt);
        assert_eq!(alpha, zero_free_best, "no zero-free optimum");
    }

    // Cut-partition weight identity.
    for _ in 0..cases {
        let n = rng.random_range(2..=12usize);
        let mut g = random_trigraph(&mut rng, n, 0.2);
        let c = random_subset(&mut rng, n, 0.3);
        let rest: Vec<usize> = (0..n).filter(|&v| !c.contains(v)).collect();
        if rest.len() < 2 {
            continue;
        }
        let split = rng.random_range(1..rest.len());
        let a = VertexSet::from_iter(rest[..split].iter().copied());
        let b = VertexSet::from_iter(rest[split..].iter().copied());
        for u in a.iter() {
            for v in b.iter() {
                g.set(u, v, Adjacency::StrongAnti).unwrap();
            }
        }
        let wt = random_valid_weights(&mut rng, &g, 20);
        let s = random_subset(&mut rng, n, 0.5);
        let ac = a.union(&c);
        let bc = b.union(&c);
        let side = |set: &VertexSet, inter: &VertexSet| -> u64 {
            let (sub, map) = wt.induced(set).unwrap();
            let local = VertexSet::from_iter(
                inter
                    .iter()
                    .filter(|&v| set.contains(v))
                    .map(|v| map.binary_search(&v).unwrap()),
            );
            sub.set_weight(&local).unwrap()
        };
        let lhs = side(&ac, &s) + side(&bc, &s);
        let rhs = wt.set_weight(&s).unwrap() + side(&c, &s);
        assert_eq!(lhs, rhs, "cut-partition weight identity failed");
    }

    // Differences localized to C leave the corrected weight unchanged.
    for _ in 0..cases {
        let n = rng.random_range(1..=12usize);
        let g = random_trigraph(&mut rng, n, 0.2);
        let wt = random_valid_weights(&mut rng, &g, 20);
        let c = random_subset(&mut rng, n, 0.4);
        // Mutate adjacency and weights inside C only.
        let mut g2 = g.clone();
        let mut w2 = wt.weights.clone();
        let cs: Vec<usize> = c.iter().collect();
        for (i, &x) in cs.iter().enumerate() {
            w2.set_vertex(x, rng.random_range(0..20u64));
            for &y in &cs[i + 1..] {
                let a = match rng.random_range(0..3u32) {
                    0 => Adjacency::StrongAnti,
                    1 => Adjacency::Semi,
                    _ => Adjacency::StrongAdj,
                };
                g2.set(x, y, a).unwrap();
                if a == Adjacency::Semi {
                    let cap = rng.random_range(0..20u64);
                    w2.set_pair(x, y, cap);
                    w2.set_directed(x, y, rng.random_range(0..=cap));
                    w2.set_directed(y, x, rng.random_range(0..=cap));
                } else {
                    w2.set_pair(x, y, 0);
                    w2.set_directed(x, y, 0);
                    w2.set_directed(y, x, 0);
                }
            }
        }
        let wt2 = WeightedTrigraph::new(g2, w2).unwrap();
        let s = random_subset(&mut rng, n, 0.5);
        let corrected = |wt: &WeightedTrigraph| -> i128 {
            let (sub, map) = wt.induced(&c).unwrap();
            let local = VertexSet::from_iter(
                s.iter()
                    .filter(|&v| c.contains(v))
                    .map(|v| map.binary_search(&v).unwrap()),
            );
            wt.set_weight(&s).unwrap() as i128 - sub.set_weight(&local).unwrap() as i128
        };
        assert_eq!(corrected(&wt), corrected(&wt2), "difference identity failed");
    }

    // Reduction bound, with equality when S avoids reduced zero-vertices.
    for _ in 0..cases {
        let n = rng.random_range(1..=12usize);
        let g = random_trigraph(&mut rng, n, 0.25);
        let wt = random_valid_weights(&mut rng, &g, 20);
        let r = random_subset(&mut rng, n, 0.6);
        let red = reduce(&wt, &r).unwrap();
        let s_full = random_subset(&mut rng, n, 0.5).intersect(&r);
        let local = |s: &VertexSet| {
            VertexSet::from_iter(s.iter().map(|v| red.to_parent.binary_search(&v).unwrap()))
        };
        let lhs = wt.set_weight(&s_full).unwrap();
        let rhs = red.reduced.set_weight(&local(&s_full)).unwrap() + red.exterior;
        assert!(lhs <= rhs, "reduction bound failed");
        // Drop zero-vertices of the reduction: equality must hold.
        let s_nz = VertexSet::from_iter(s_full.iter().filter(|&v| {
            red.reduced
                .weights
                .vertex(red.to_parent.binary_search(&v).unwrap())
                > 0
        }));
        let lhs = wt.set_weight(&s_nz).unwrap();
        let rhs = red.reduced.set_weight(&local(&s_nz)).unwrap() + red.exterior;
        assert_eq!(lhs, rhs, "reduction equality branch failed");
    }

    // Stable-set vertex weight is bounded by alpha(Red) + Ext.
    for _ in 0..cases {
        let n = rng.random_range(1..=10usize);
        let g = random_trigraph(&mut rng, n, 0.25);
        let wt = random_valid_weights(&mut rng, &g, 12);
        let r = random_subset(&mut rng, n, 0.6);
        let mut s = VertexSet::new();
        for v in r.iter() {
            let mut trial = s.clone();
            trial.insert(v);
            if rng.random_bool(0.6) && wt.trigraph.is_stable_set(&trial).unwrap() {
                s = trial;
            }
        }
        let red = reduce(&wt, &r).unwrap();
        let lhs: u64 = s.iter().map(|u| wt.weights.vertex(u)).sum();
        let rhs = alpha_by_enumeration(&red.reduced) + red.exterior;
        assert!(lhs <= rhs, "stable-set reduction bound failed");
    }

    // Nested alphas: alpha_R1 <= alpha_R1uR2 <= alpha_R1 + w(R2).
    for _ in 0..cases {
        let n = rng.random_range(1..=10usize);
        let g = random_trigraph(&mut rng, n, 0.25);
        let wt = random_valid_weights(&mut rng, &g, 12);
        let r1 = random_subset(&mut rng, n, 0.4);
        let r2 = random_subset(&mut rng, n, 0.4).minus(&r1);
        let alpha_of = |r: &VertexSet| {
            let red = reduce(&wt, r).unwrap();
            alpha_by_enumeration(&red.reduced) + red.exterior
        };
        let a1 = alpha_of(&r1);
        let a12 = alpha_of(&r1.union(&r2));
        assert!(a1 <= a12, "nested alpha lower bound failed");
        assert!(
            a12 <= a1 + r2.iter().map(|u| wt.weights.vertex(u)).sum::<u64>(),
            "nested alpha upper bound failed"
        );
    }

    println!("acceptance 3 weight calculus: pass (7 propositions x {cases} cases)");
}

fn best_zero_free(wt: &WeightedTrigraph) -> u64 {
    // Maximum set weight over stable sets avoiding zero-weight vertices.
    let n = wt.trigraph.n();
    let mut best = 0u64;
    for mask in 0u32..1 << n {
        let s = VertexSet::from_iter((0..n).filter(|&v| mask >> v & 1 == 1));
        if s.iter().any(|v| wt.weights.vertex(v) == 0) {
            continue;
        }
        if !wt.trigraph.is_stable_set(&s).unwrap() {
            continue;
        }
        best = best.max(wt.set_weight(&s).unwrap());
    }
    best
}

/// Criterion 4: on every corpus instance admitting the relevant cutset, the
/// clique transfer satisfies alpha = k + alpha(B) and the stable transfer
/// satisfies alpha(B) = alpha, both sides brute force, n <= 12.
#[test]
fn acceptance_04_cutset_transfers() {
    use mwss::decomp::{validate_cut_partition, CutPartition};
    let config = GeneratorConfig {
        seed: 0x5eed_0004,
        n_min: 5,
        n_max: 12,
        weight_max: 12,
        ..Default::default()
    };
    let mut generator = Generator::new(config);
    let mut oracle = |wt: &WeightedTrigraph| Ok(alpha_by_enumeration(wt));
    let mut clique_count = 0;
    let mut stable_count = 0;

    // Builds the components-based partition for a cutset candidate.
    let partition_for = |g: &Trigraph, c: &VertexSet, kind: CutKind| -> Option<CutPartition> {
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let adj = g.full_adjacency();
        let mut seen: Vec<bool> = (0..g.n()).map(|v| c.contains(v)).collect();
        for start in 0..g.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        if comps.len() < 2 {
            return None;
        }
        let a = VertexSet::from_iter(comps[0].iter().copied());
        let b = VertexSet::from_iter(comps[1..].iter().flatten().copied());
        let p = CutPartition {
            a,
            b,
            c: c.clone(),
            kind,
        };
        validate_cut_partition(g, &p).ok().map(|_| p)
    };

    for _ in 0..800 {
        let (_, wt) = generator.next_instance();
        let g = &wt.trigraph;
        let n = g.n();
        let want = brute_alpha(&wt).unwrap();

        // The partition the production search would use.
        if let Some(part) = find_good_cut_partition(g) {
            match part.kind {
                CutKind::Clique => {
                    let t = clique_cut_transfer(&wt, &part, &mut oracle).unwrap();
                    assert_eq!(t.base + brute_alpha(&t.b_block).unwrap(), want);
                    clique_count += 1;
                }
                CutKind::Stable => {
                    let t = stable_cut_transfer(&wt, &part, &mut oracle).unwrap();
                    assert_eq!(brute_alpha(&t.b_block).unwrap(), want);
                    stable_count += 1;
                }
            }
        }

        // Additionally, the first stable pair cutset admitting a good
        // partition, for instances where the search preferred a clique.
        'stable_scan: for u in 0..n {
            for v in (u + 1)..n {
                if !g.theta(u, v).is_anti_adjacent() {
                    continue;
                }
                let c = VertexSet::from_iter([u, v]);
                if let Some(part) = partition_for(g, &c, CutKind::Stable) {
                    let t = stable_cut_transfer(&wt, &part, &mut oracle).unwrap();
                    assert_eq!(brute_alpha(&t.b_block).unwrap(), want);
                    stable_count += 1;
                    break 'stable_scan;
                }
            }
        }
    }
    assert!(clique_count >= 100, "too few clique-cut cases: {clique_count}");
    assert!(stable_count >= 50, "too few stable-cut cases: {stable_count}");
    println!(
        "acceptance 4 cutset transfers: pass ({clique_count} clique, {stable_count} stable)"
    );
}

/// Criterion 5: each basic solver matches brute force on at least 300 class
/// instances, n <= 12; the complete bipartite solver also matches the
/// closed max-side-sum formula.
#[test]
fn acceptance_05_basic_solvers() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..300 {
        let n = rng.random_range(1..=12usize);
        let wt = sp_trigraph(&mut rng, n, 15);
        assert_eq!(
            alpha_series_parallel(&wt).unwrap(),
            brute_alpha(&wt).unwrap(),
            "series-parallel solver mismatch"
        );
    }
    for _ in 0..300 {
        let n = rng.random_range(1..=12usize);
        let wt = complete_bipartite(&mut rng, n, 15);
        let got = alpha_complete_bipartite(&wt).unwrap();
        assert_eq!(got, brute_alpha(&wt).unwrap(), "complete bipartite mismatch");
        // Closed formula: max side sum over the bipartition around vertex 0.
        let g = &wt.trigraph;
        if g.n() > 0 {
            let side_a: Vec<usize> = (0..g.n())
                .filter(|&v| v != 0 && g.theta(0, v) == Adjacency::StrongAdj)
                .collect();
            let sum_a: u64 = side_a.iter().map(|&v| wt.weights.vertex(v)).sum();
            let sum_b: u64 = (0..g.n())
                .filter(|&v| v == 0 || g.theta(0, v) != Adjacency::StrongAdj)
                .map(|v| wt.weights.vertex(v))
                .sum();
            assert_eq!(got, sum_a.max(sum_b), "closed formula mismatch");
        }
    }
    for _ in 0..300 {
        let n = rng.random_range(1..=12usize);
        let wt = line_trigraph(&mut rng, n, 15);
        assert_eq!(
            alpha_line(&wt).unwrap(),
            brute_alpha(&wt).unwrap(),
            "line solver mismatch"
        );
    }
    println!("acceptance 5 basic solvers: pass (300 instances per class)");
}

/// Criterion 6: the matching engine equals brute enumeration on at least
/// 2000 random graphs with |V| <= 10 and weights <= 100.
#[test]
fn acceptance_06_matching_engine() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_0006);
    let total = 2000;
    for _ in 0..total {
        let n = rng.random_range(1..=10usize);
        let p: f64 = rng.random_range(0.1..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    edges.push((u, v, rng.random_range(0..=100u64)));
                }
            }
        }
        let g = EdgeWeightedGraph::new(n, &edges).unwrap();
        let m = max_weight_matching(&g);
        assert!(m.is_valid(&g), "invalid matching");
        assert_eq!(m.total_weight, brute_max_weight_matching(&g));
    }
    println!("acceptance 6 matching engine: pass ({total} graphs)");
}

/// Criterion 7: root reconstruction round-trips at least 300 generated line
/// graphs through the returned correspondence; non-line graphs are rejected.
#[test]
fn acceptance_07_line_root_round_trip() {
    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_0007);
    for _ in 0..300 {
        let hn = rng.random_range(2..=9usize);
        let mut h = Trigraph::new(hn);
        for u in 0..hn {
            for v in (u + 1)..hn {
                if rng.random_bool(0.4) {
                    h.set(u, v, Adjacency::StrongAdj).unwrap();
                }
            }
        }
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
        let root = line_graph_root(&l).expect("line graph must reconstruct");
        assert!(root.verify_against(&l), "correspondence check failed");
    }
    // The claw and friends are rejected.
    let claw = Trigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)], &[]).unwrap();
    assert!(line_graph_root(&claw).is_err());
    let k23 = Trigraph::from_pairs(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], &[])
        .unwrap();
    assert!(line_graph_root(&k23).is_err());
    let mut w5_edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    for v in 0..5 {
        w5_edges.push((v, 5));
    }
    let w5 = Trigraph::from_pairs(6, &w5_edges, &[]).unwrap();
    assert!(line_graph_root(&w5).is_err());
    println!("acceptance 7 line root round trip: pass (300 roots + rejection witnesses)");
}

fn all_graphs_up_to(n_max: usize) -> Vec<Trigraph> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..1 << pairs.len() {
            let mut g = Trigraph::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.set(u, v, Adjacency::StrongAdj).unwrap();
                }
            }
            out.push(g);
        }
    }
    out
}

/// Criterion 8: the reduction identities. The all-semi bipartite instance
/// satisfies alpha(G,w) = alpha(H) + 2m exhaustively for |V(H)| <= 5 and on
/// random six-vertex graphs; double subdivision adds |E| to alpha; the
/// extended bipartite construction adds 2|E|, both exhaustively for
/// |V| <= 5.
#[test]
fn acceptance_08_reduction_identities() {
    let mut checked_bip = 0usize;
    let mut checked_poljak = 0usize;
    let mut checked_ext = 0usize;
    for h in all_graphs_up_to(5) {
        let unit = vec![1u64; h.n()];
        let alpha_h = brute_mwss_graph(&h, &unit);
        let m = h.strong_pairs().len() as u64;

        let inst = bipartite_trigraph_hardness(&h).unwrap();
        assert_eq!(
            brute_alpha(&inst.wt).unwrap(),
            alpha_h + 2 * m,
            "bipartite identity failed on {h:?}"
        );
        checked_bip += 1;

        let poljak = poljak_double_subdivision(&h).unwrap();
        let unit2 = vec![1u64; poljak.n()];
        assert_eq!(
            brute_mwss_graph(&poljak, &unit2),
            alpha_h + m,
            "double subdivision identity failed on {h:?}"
        );
        checked_poljak += 1;

        let ext = extended_bipartite_of(&h).unwrap();
        let unit3 = vec![1u64; ext.n()];
        assert_eq!(
            brute_mwss_graph(&ext, &unit3),
            alpha_h + 2 * m,
            "extended bipartite identity failed on {h:?}"
        );
        checked_ext += 1;
    }
    // Random six-vertex sources for the bipartite identity, kept sparse
    // enough for enumeration over the n+m all-semi vertices.
    let mut rng = ChaCha12Rng::seed_from_u64(0x5eed_0008);
    let mut sampled = 0;
    while sampled < 30 {
        let mut h = Trigraph::new(6);
        for u in 0..6 {
            for v in (u + 1)..6 {
                if rng.random_bool(0.35) {
                    h.set(u, v, Adjacency::StrongAdj).unwrap();
                }
            }
        }
        let m = h.strong_pairs().len();
        if m > 9 {
            continue;
        }
        let unit = vec![1u64; 6];
        let inst = bipartite_trigraph_hardness(&h).unwrap();
        assert_eq!(
            brute_alpha_bounded(&inst.wt, 16).unwrap(),
            brute_mwss_graph(&h, &unit) + 2 * m as u64
        );
        // The contribution decomposition holds for random subsets.
        for _ in 0..50 {
            let s = random_subset(&mut rng, inst.wt.trigraph.n(), 0.5);
            let total = inst.wt.set_weight(&s).unwrap();
            let on_source = s.iter().filter(|&v| v < 6).count() as u64;
            let conts: u64 = (0..inst.arcs.len())
                .map(|a| arc_contribution(&inst, a, &s).unwrap())
                .sum();
            assert_eq!(total, on_source + conts);
        }
        sampled += 1;
    }
    println!(
        "acceptance 8 reduction identities: pass (bipartite {checked_bip}+{sampled}, poljak {checked_poljak}, extended {checked_ext})"
    );
}

/// Criterion 9: extraction returns a stable set whose weight equals the
/// computed alpha on at least 300 in-class graphs.
#[test]
fn acceptance_09_extraction() {
    let config = GeneratorConfig {
        seed: 0x5eed_0009,
        n_min: 4,
        n_max: 13,
        weight_max: 20,
        ..Default::default()
    };
    let mut generator = Generator::new(config);
    let total = 300;
    for _ in 0..total {
        let (_, wt) = generator.next_instance();
        // Graph instance: the null realization of an in-class trigraph is in
        // class; only vertex weights survive.
        let g = wt.trigraph.null_realization();
        let mut w = WeightFunction::new();
        for (v, val) in wt.weights.vertex_entries() {
            w.set_vertex(v, val);
        }
        let graph_wt = WeightedTrigraph::new(g, w).unwrap();
        let alpha = alpha_value(&graph_wt).unwrap();
        let extraction = max_stable_set_graph(&graph_wt).unwrap();
        assert!(graph_wt
            .trigraph
            .is_stable_set(&extraction.stable_set)
            .unwrap());
        let weight: u64 = extraction
            .stable_set
            .iter()
            .map(|v| graph_wt.weights.vertex(v))
            .sum();
        assert_eq!(weight, alpha);
        assert_eq!(extraction.weight, alpha);
    }
    println!("acceptance 9 extraction: pass ({total} graphs)");
}

/// Criterion 10: scaling. Glued instances with n = 200 solve in under 10
/// seconds and n = 1000 in under 10 minutes; the log-log runtime slope over
/// n in {100, 200, 400, 800} stays at most 8.
#[test]
fn acceptance_10_scaling() {
    use std::time::Instant;
    let sizes = [100usize, 200, 400, 800];
    let mut medians = Vec::new();
    for (i, &n) in sizes.iter().enumerate() {
        let mut times = Vec::new();
        for rep in 0..3u64 {
            let wt = scaling_instance(1000 + 10 * i as u64 + rep, n, 20);
            assert_eq!(wt.trigraph.n(), n);
            let start = Instant::now();
            let _ = alpha_value(&wt).unwrap();
            times.push(start.elapsed().as_secs_f64());
        }
        times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        medians.push(times[1]);
    }
    // n = 200 under 10 seconds.
    assert!(
        medians[1] < 10.0,
        "n=200 took {:.3}s, budget 10s",
        medians[1]
    );
    // Least-squares slope of log(time) against log(n).
    let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = medians.iter().map(|&t| t.max(1e-9).ln()).collect();
    let xm = xs.iter().sum::<f64>() / xs.len() as f64;
    let ym = ys.iter().sum::<f64>() / ys.len() as f64;
    let slope = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - xm) * (y - ym))
        .sum::<f64>()
        / xs.iter().map(|x| (x - xm) * (x - xm)).sum::<f64>();
    assert!(slope <= 8.0, "log-log slope {slope:.2} exceeds 8");

    // n = 1000 under 10 minutes.
    let wt = scaling_instance(2000, 1000, 20);
    assert_eq!(wt.trigraph.n(), 1000);
    let start = Instant::now();
    let _ = alpha_value(&wt).unwrap();
    let big = start.elapsed().as_secs_f64();
    assert!(big < 600.0, "n=1000 took {big:.1}s, budget 600s");

    println!(
        "acceptance 10 scaling: pass (medians {:?}s over n={:?}, slope {:.2}, n=1000 in {:.2}s)",
        medians
            .iter()
            .map(|t| (t * 1000.0).round() / 1000.0)
            .collect::<Vec<_>>(),
        sizes,
        slope,
        big
    );
}
