//! Brute-force reference implementations. They use only adjacency queries
//! on `Graph`, never the library's algorithms.
#![allow(dead_code)]

use std::path::PathBuf;

use matchext::enumerate::graphs_by_order;
use matchext::{parse_graph6, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/connected_le8.g6")
}

/// Connected graphs on at most 8 vertices.
pub fn connected_corpus() -> Vec<Graph> {
    std::fs::read_to_string(fixture_path())
        .unwrap()
        .lines()
        .map(|l| parse_graph6(l).unwrap())
        .collect()
}

/// Every graph on `1..=max` vertices up to isomorphism.
pub fn all_graphs(max: usize) -> Vec<Graph> {
    graphs_by_order(max, |_| true).into_iter().skip(1).flatten().collect()
}

fn lowest(mask: u64) -> usize {
    mask.trailing_zeros() as usize
}

fn nbr_mask(g: &Graph, v: usize) -> u64 {
    (0..g.order()).filter(|&u| g.has_edge(u, v)).fold(0, |m, u| m | 1 << u)
}

pub fn full(g: &Graph) -> u64 {
    if g.order() == 64 {
        u64::MAX
    } else {
        (1u64 << g.order()) - 1
    }
}

/// Perfect matching on the vertices of `mask`.
pub fn pm(g: &Graph, mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    if mask.count_ones() % 2 == 1 {
        return false;
    }
    let v = lowest(mask);
    let rest = mask & !(1 << v);
    let mut cand = nbr_mask(g, v) & rest;
    while cand != 0 {
        let u = lowest(cand);
        cand &= cand - 1;
        if pm(g, rest & !(1 << u)) {
            return true;
        }
    }
    false
}

pub fn matching_number(g: &Graph, mask: u64) -> usize {
    if mask.count_ones() < 2 {
        return 0;
    }
    let v = lowest(mask);
    let rest = mask & !(1 << v);
    let mut best = matching_number(g, rest);
    let mut cand = nbr_mask(g, v) & rest;
    while cand != 0 {
        let u = lowest(cand);
        cand &= cand - 1;
        best = best.max(1 + matching_number(g, rest & !(1 << u)));
    }
    best
}

/// Matching-polynomial coefficients by deletion and contraction of edges.
pub fn matching_counts(edges: &[(usize, usize)], used: u64, out: &mut Vec<u64>, size: usize) {
    if out.len() <= size {
        out.resize(size + 1, 0);
    }
    let Some((i, &(u, v))) = edges.iter().enumerate().find(|(_, &(u, v))| used >> u & 1 == 0 && used >> v & 1 == 0)
    else {
        out[size] += 1;
        return;
    };
    let rest = &edges[i + 1..];
    matching_counts(rest, used, out, size);
    matching_counts(rest, used | 1 << u | 1 << v, out, size + 1);
}

pub fn independence(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || nbr_mask(g, v) & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn connected_within(g: &Graph, mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = 1u64 << lowest(mask);
    let mut frontier = seen;
    while frontier != 0 {
        let v = lowest(frontier);
        frontier &= frontier - 1;
        let new = nbr_mask(g, v) & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == mask
}

/// Smallest vertex cut, or `ν - 1` for complete graphs.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let all = full(g);
    (0u64..1 << n)
        .filter(|&s| (n - s.count_ones() as usize) >= 2 && !connected_within(g, all & !s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n - 1)
}

pub fn subsets(n: usize, size: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|s| s.count_ones() as usize == size).collect()
}

pub fn n_factor_critical(g: &Graph, n: usize) -> bool {
    subsets(g.order(), n).into_iter().all(|s| pm(g, full(g) & !s))
}

/// Vertex sets covered by the k-matchings inside `mask`, with repetition.
pub fn k_matching_covers(g: &Graph, mask: u64, k: usize) -> Vec<u64> {
    fn go(g: &Graph, edges: &[(usize, usize)], used: u64, k: usize, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(used);
            return;
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                go(g, &edges[i + 1..], used | 1 << u | 1 << v, k - 1, out);
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..g.order())
        .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v) && mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .collect();
    let mut out = Vec::new();
    go(g, &edges, 0, k, &mut out);
    out
}

pub fn k_extendable(g: &Graph, k: usize) -> bool {
    let all = full(g);
    let covers = k_matching_covers(g, all, k);
    connected_within(g, all) && g.order() % 2 == 0 && !covers.is_empty() && covers.iter().all(|&c| pm(g, all & !c))
}

pub fn k_half_extendable(g: &Graph, k: usize) -> bool {
    let all = full(g);
    g.order() % 2 == 1
        && (0..g.order()).all(|v| {
            let rest = all & !(1 << v);
            let covers = k_matching_covers(g, rest, k);
            !covers.is_empty() && covers.iter().all(|&c| pm(g, rest & !c))
        })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Complement of a random graph with maximum degree at most `max_codegree`,
/// so the result has minimum degree at least `n - 1 - max_codegree`.
pub fn random_dense(rng: &mut ChaCha8Rng, n: usize, max_codegree: usize) -> Graph {
    let mut deg = vec![0; n];
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let target = rng.gen_range(0..=n * max_codegree / 2);
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if edges.len() >= target {
            break;
        }
        if deg[u] < max_codegree && deg[v] < max_codegree {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap().complement()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
