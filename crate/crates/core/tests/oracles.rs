//! Brute-force oracles checked against the library, plus the worked
//! examples for each instance family. Oracles here work on plain edge
//! lists and subset enumeration and share no code with the solvers.

use greedy_mis::chordal::{
    clique_tree, is_chordal, is_perfect_elimination_ordering, leafage_small, lex_bfs, maximal_cliques,
    simplicial_vertices, validate_tree_decomposition, EliminationOrdering, TreeDecomposition,
};
use greedy_mis::families::{
    chordal_tight, chordal_tight_pair, interval_tight, permutation_family, random_chordal, random_interval,
    two_track_family, Representation, CHORDAL_TIGHT_HUB,
};
use greedy_mis::greedy::{adversarial_value, benevolent_value, greedy_run, TieBreakPolicy};
use greedy_mis::ledger::{check_charging_bound, classify, max_j_observed};
use greedy_mis::mis::{mis_bruteforce, mis_chordal};
use greedy_mis::{Graph, VertexSet};

/// Adjacency matrix of the present subgraph, relabeled densely.
fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let labels = g.present().to_vec();
    labels.iter().map(|&u| labels.iter().map(|&v| g.adjacent(u, v)).collect()).collect()
}

fn brute_alpha(g: &Graph) -> usize {
    let a = matrix(g);
    let n = a.len();
    (0u32..1 << n)
        .filter(|mask| (0..n).all(|i| mask >> i & 1 == 0 || (i + 1..n).all(|j| mask >> j & 1 == 0 || !a[i][j])))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Chordal iff no vertex subset of size >= 4 induces a cycle.
fn brute_chordal(g: &Graph) -> bool {
    let a = matrix(g);
    let n = a.len();
    for mask in 0u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if members.len() < 4 {
            continue;
        }
        let two_regular = members.iter().all(|&i| members.iter().filter(|&&j| a[i][j]).count() == 2);
        if !two_regular {
            continue;
        }
        // A connected 2-regular graph is a cycle.
        let mut seen = vec![members[0]];
        let mut frontier = vec![members[0]];
        while let Some(i) = frontier.pop() {
            for &j in &members {
                if a[i][j] && !seen.contains(&j) {
                    seen.push(j);
                    frontier.push(j);
                }
            }
        }
        if seen.len() == members.len() {
            return false;
        }
    }
    true
}

/// Simpliciality checked directly at every elimination step.
fn brute_peo(g: &Graph, order: &[usize]) -> bool {
    let mut alive: Vec<usize> = g.present().to_vec();
    for &v in order {
        let nbrs: Vec<usize> = alive.iter().copied().filter(|&u| u != v && g.adjacent(u, v)).collect();
        for (x, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[x + 1..] {
                if !g.adjacent(a, b) {
                    return false;
                }
            }
        }
        alive.retain(|&u| u != v);
    }
    true
}

/// Every greedy execution's solution size, by plain recursion.
fn all_greedy_sizes(g: &Graph, out: &mut Vec<usize>, depth: usize) {
    if g.is_empty() {
        out.push(depth);
        return;
    }
    for v in &g.min_degree_vertices().unwrap() {
        all_greedy_sizes(&g.delete_closed_neighborhood(v).unwrap(), out, depth + 1);
    }
}

/// Minimum leaf count over all spanning trees of the bags that satisfy the
/// tree-decomposition conditions, from all (q-1)-subsets of bag pairs.
fn brute_leafage(g: &Graph) -> usize {
    let bags = maximal_cliques(g).unwrap();
    let q = bags.len();
    if q == 1 {
        return 1;
    }
    let pairs: Vec<(usize, usize)> = (0..q).flat_map(|i| (i + 1..q).map(move |j| (i, j))).collect();
    let mut best = usize::MAX;
    for mask in 0u64..1 << pairs.len() {
        if mask.count_ones() as usize != q - 1 {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&e| mask >> e & 1 == 1).map(|e| pairs[e]).collect();
        let td = TreeDecomposition { bags: bags.clone(), edges };
        if validate_tree_decomposition(&td, g) {
            best = best.min(td.leaf_count());
        }
    }
    best
}

fn random_graph(n: usize, density_percent: u64, seed: u64) -> Graph {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state % 100
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if next() < density_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn set(labels: &[usize]) -> VertexSet {
    labels.iter().copied().collect()
}

#[test]
fn chordality_agrees_with_induced_cycle_search() {
    let mut chordal = 0;
    for seed in 0..400 {
        let n = 3 + (seed as usize % 6);
        let g = random_graph(n, 20 + seed % 60, seed);
        let expected = brute_chordal(&g);
        assert_eq!(is_chordal(&g), expected, "seed {seed}: {g:?}");
        chordal += expected as usize;
    }
    assert!(chordal > 50 && chordal < 350, "mix of classes: {chordal}");
}

#[test]
fn peo_check_agrees_with_stepwise_simpliciality() {
    for seed in 0..200 {
        let g = random_chordal(9, seed).unwrap().graph;
        let lex = lex_bfs(&g);
        assert!(brute_peo(&g, &lex.reversed().order));
        assert!(is_perfect_elimination_ordering(&g, &lex.reversed()).unwrap());
        for order in [lex.order.clone(), (0..9).collect(), (0..9).rev().collect()] {
            let o = EliminationOrdering::new(order.clone());
            assert_eq!(is_perfect_elimination_ordering(&g, &o).unwrap(), brute_peo(&g, &order));
        }
    }
}

#[test]
fn hub_first_ordering_is_not_perfect() {
    // All w_i, then all v_i, then u, then the rest of each clique. Removing
    // v_1 while u and the rest of G_1 remain exposes the non-edge between
    // u and the rest of G_1.
    let k = 3;
    let g = chordal_tight(k).unwrap().graph;
    let pairs: Vec<(usize, usize)> = (0..k).map(|i| chordal_tight_pair(k, i)).collect();
    let mut order: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    order.extend(pairs.iter().map(|p| p.0));
    order.push(CHORDAL_TIGHT_HUB);
    let taken: VertexSet = order.iter().copied().collect();
    order.extend((0..g.n_labels()).filter(|v| !taken.contains(*v)));
    assert!(!brute_peo(&g, &order));
    assert!(!is_perfect_elimination_ordering(&g, &EliminationOrdering::new(order)).unwrap());
    assert!(is_chordal(&g));
}

#[test]
fn exact_solvers_agree_with_subset_enumeration() {
    for seed in 0..150 {
        let g = random_chordal(12, seed).unwrap().graph;
        let alpha = brute_alpha(&g);
        assert_eq!(mis_chordal(&g).unwrap().size, alpha);
        assert_eq!(mis_bruteforce(&g, 30).unwrap().size, alpha);
    }
    for seed in 0..150 {
        let g = random_graph(12, 15 + seed % 50, seed);
        assert_eq!(mis_bruteforce(&g, 30).unwrap().size, brute_alpha(&g), "seed {seed}");
    }
}

#[test]
fn exhaustive_search_agrees_with_plain_recursion() {
    for seed in 0..120 {
        let g = if seed % 2 == 0 { random_chordal(9, seed).unwrap().graph } else { random_graph(8, 30, seed) };
        let mut sizes = Vec::new();
        all_greedy_sizes(&g, &mut sizes, 0);
        let (worst, t) = adversarial_value(&g, 26).unwrap();
        let (best, u) = benevolent_value(&g, 26).unwrap();
        assert_eq!(worst, *sizes.iter().min().unwrap());
        assert_eq!(best, *sizes.iter().max().unwrap());
        assert_eq!(t.len(), worst);
        assert_eq!(u.len(), best);
    }
}

#[test]
fn leafage_agrees_with_spanning_tree_enumeration() {
    let mut seen_three = false;
    for seed in 0..200 {
        let g = random_chordal(8, seed).unwrap().graph;
        if maximal_cliques(&g).unwrap().len() > 7 {
            continue;
        }
        let expected = brute_leafage(&g);
        assert_eq!(leafage_small(&g, 12).unwrap(), expected, "seed {seed}");
        seen_three |= expected >= 3;
    }
    assert!(seen_three);
}

#[test]
fn tight_interval_single_block() {
    let inst = interval_tight(1).unwrap();
    let g = &inst.graph;
    assert_eq!(g.n_labels(), 9);
    assert_eq!(g.max_degree().unwrap(), 3);
    assert!(is_chordal(g));
    let grey = 4;
    assert_eq!(g.degree(grey).unwrap(), 2);
    let split = g.delete_closed_neighborhood(grey).unwrap();
    let comps = split.connected_components();
    assert_eq!(comps, vec![set(&[0, 1, 2]), set(&[6, 7, 8])]);
    assert!(comps.iter().all(|c| g.is_clique(c).unwrap()));
    // Triangle vertices away from the path.
    let simplicial = simplicial_vertices(g);
    assert!(set(&[0, 1, 7, 8]).is_subset(&simplicial));
    assert!(!simplicial.contains(2) && !simplicial.contains(6));
    // Two triangles plus four edges.
    let cliques = maximal_cliques(g).unwrap();
    assert_eq!(cliques.len(), 6);
    assert_eq!(cliques.iter().filter(|c| c.len() == 3).count(), 2);
    let Some(Representation::Interval(rep)) = &inst.representation else { panic!() };
    let path = rep.clique_path();
    assert_eq!(path.bags.len(), 6);
    let sizes: Vec<usize> = path.bags.iter().map(VertexSet::len).collect();
    assert_eq!(sizes, vec![3, 2, 2, 2, 2, 3]);
    assert!(validate_tree_decomposition(&path, g));
    assert!(leafage_small(g, 12).unwrap() <= 2);
}

#[test]
fn tight_interval_adversarial_ledger() {
    let inst = interval_tight(1).unwrap();
    let g = &inst.graph;
    let opt = inst.optimum_certificate.clone().unwrap();
    assert_eq!(opt.len(), 4);
    let (value, t) = adversarial_value(g, 26).unwrap();
    assert_eq!(value, 3);
    let l = classify(g, &t, &opt).unwrap();
    assert_eq!(l.m(2), 1);
    assert_eq!(l.m(1), 2);
    assert_eq!(l.m(0), 0);

    let inst = interval_tight(3).unwrap();
    let t = greedy_run(&inst.graph, &TieBreakPolicy::Scripted(inst.adversarial_script.clone().unwrap())).unwrap();
    let l = classify(&inst.graph, &t, inst.optimum_certificate.as_ref().unwrap()).unwrap();
    assert_eq!(l.m(2), 3);
    assert_eq!(l.m01(), 4);
    assert!(check_charging_bound(&inst.graph, &l).unwrap());
    assert_eq!(l.m01(), 1 + l.m(2));
}

#[test]
fn tight_interval_larger_k() {
    let inst = interval_tight(2).unwrap();
    assert_eq!(inst.graph.n_labels(), 15);
    assert_eq!(adversarial_value(&inst.graph, 26).unwrap().0, 5);
    assert_eq!(benevolent_value(&inst.graph, 26).unwrap().0, 7);

    let inst = interval_tight(5).unwrap();
    let t = greedy_run(&inst.graph, &TieBreakPolicy::Scripted(inst.adversarial_script.clone().unwrap())).unwrap();
    assert_eq!(t.len(), 11);
    assert_eq!(mis_chordal(&inst.graph).unwrap().size, 16);
}

#[test]
fn tight_chordal_examples() {
    let inst = chordal_tight(2).unwrap();
    let g = &inst.graph;
    assert_eq!(g.n_labels(), 9);
    let (v1, w1) = chordal_tight_pair(2, 0);
    let (v2, w2) = chordal_tight_pair(2, 1);
    assert_eq!(g.min_degree_vertices().unwrap(), set(&[CHORDAL_TIGHT_HUB, w1, w2]));
    let opt = inst.optimum_certificate.clone().unwrap();
    assert_eq!(opt, set(&[v1, w1, v2, w2]));
    assert!(g.is_independent_set(&opt).unwrap());
    let after = g.delete_closed_neighborhood(CHORDAL_TIGHT_HUB).unwrap();
    assert_eq!(after.component_count(), 2);
    let t = greedy_run(g, &TieBreakPolicy::Scripted(inst.adversarial_script.clone().unwrap())).unwrap();
    assert_eq!(t.picks[0].vertex, CHORDAL_TIGHT_HUB);
    assert_eq!((t.picks[0].components_before, t.picks[0].components_after), (1, 2));
    assert_eq!(t.len(), 3);

    let inst = chordal_tight(3).unwrap();
    let t = greedy_run(&inst.graph, &TieBreakPolicy::Scripted(inst.adversarial_script.clone().unwrap())).unwrap();
    let l = classify(&inst.graph, &t, inst.optimum_certificate.as_ref().unwrap()).unwrap();
    assert_eq!(l.records[0].j, 3);
    assert_eq!(max_j_observed(&l), 3);

    let inst = chordal_tight(4).unwrap();
    let t = greedy_run(&inst.graph, &TieBreakPolicy::Scripted(inst.adversarial_script.clone().unwrap())).unwrap();
    assert_eq!(t.len(), 5);
    assert_eq!(mis_chordal(&inst.graph).unwrap().size, 8);
    assert!(is_chordal(&inst.graph));
}

#[test]
fn permutation_and_two_track_examples() {
    let perm = permutation_family(3).unwrap();
    assert_eq!(perm.graph.max_degree().unwrap(), 4);
    assert_eq!(adversarial_value(&perm.graph, 26).unwrap().0, 2);
    assert_eq!(mis_bruteforce(&perm.graph, 30).unwrap().size, 3);
    assert!(!is_chordal(&perm.graph));
    let perm6 = permutation_family(6).unwrap();
    assert_eq!(adversarial_value(&perm6.graph, 26).unwrap().0, 2);
    for k in 3..8 {
        let g = permutation_family(k).unwrap().graph;
        assert_eq!(g.degree(0).unwrap(), k);
        for v in k..2 * k {
            assert_eq!(g.degree(v).unwrap(), k);
        }
        for v in 1..k {
            assert_eq!(g.degree(v).unwrap(), 2 * k - 2);
        }
    }

    let two = two_track_family(3).unwrap();
    assert_eq!(adversarial_value(&two.graph, 26).unwrap().0, 2);
    assert_eq!(mis_bruteforce(&two.graph, 30).unwrap().size, 3);
    for k in 3..8 {
        let inst = two_track_family(k).unwrap();
        let g = &inst.graph;
        assert_eq!(g.degree(0).unwrap(), k);
        for v in 1..=k {
            assert_eq!(g.degree(v).unwrap(), k);
        }
        for v in k + 1..2 * k {
            assert_eq!(g.degree(v).unwrap(), 2 * k - 2);
        }
        let Some(Representation::TwoTrack { first, second }) = &inst.representation else { panic!() };
        // Track 1: star from u_1 to I.
        let star = Graph::from_edges(2 * k, (1..=k).map(|v| (0, v))).unwrap();
        assert!(first.validate_representation(&star));
        // Track 2: X a clique, complete to I.
        let mut edges = Vec::new();
        for x in k + 1..2 * k {
            for y in x + 1..2 * k {
                edges.push((x, y));
            }
            for v in 1..=k {
                edges.push((v, x));
            }
        }
        let track2 = Graph::from_edges(2 * k, edges).unwrap();
        assert!(second.validate_representation(&track2));
    }
}

#[test]
fn clique_trees_validate_on_random_chordal_graphs() {
    for seed in 0..100 {
        let g = random_chordal(12, seed).unwrap().graph;
        let td = clique_tree(&g).unwrap();
        assert!(validate_tree_decomposition(&td, &g));
    }
}

#[test]
fn random_interval_reps_validate() {
    for seed in 0..100 {
        let inst = random_interval(15, seed).unwrap();
        let rep = inst.interval_representation().unwrap();
        assert!(rep.validate_representation(&inst.graph));
        assert!(is_chordal(&inst.graph));
    }
}
