//! Canonical labelling and isomorph-free enumeration of small graphs.
//!
//! Canonical forms come from individualisation-refinement: refine an
//! ordered partition to an equitable one, branch on the vertices of the
//! first non-singleton cell, and keep the lexicographically largest
//! adjacency string over all discrete leaves. Vertices of a cell that are
//! twins of an already tried vertex are skipped, since swapping twins is
//! an automorphism fixing the partition.
//!
//! Enumeration extends every graph on `n - 1` vertices by one vertex in
//! all possible ways and deduplicates by certificate. Restricting the
//! parents to a hereditary class (closed under induced subgraphs) is
//! complete for that class, which lets the dense high-minimum-degree
//! sweeps run on complements with bounded maximum degree.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::graph::{Graph, VertexSet};

/// Largest order with a certificate representation.
pub const CANON_MAX_ORDER: usize = 16;

/// Adjacency string of the canonical form, upper triangle row by row,
/// most significant bit first. Two graphs of the same order are
/// isomorphic iff their certificates are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate {
    pub order: u8,
    pub bits: u128,
}

impl Certificate {
    pub fn to_graph(self) -> Graph {
        let n = self.order as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        let mut rows = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(rows)
    }
}

struct Canon<'g> {
    adj: &'g [u64],
    n: usize,
    best: Option<(u128, Vec<usize>)>,
}

impl Canon<'_> {
    /// Splits cells by neighbour counts into the current cells until stable.
    fn refine(&self, cells: &mut Vec<u64>) {
        let mut scratch: Vec<(u64, usize)> = Vec::with_capacity(self.n);
        loop {
            let mut next = Vec::with_capacity(self.n);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                scratch.clear();
                for v in VertexSet::from_bits(cell).iter() {
                    // 4 bits per cell, first cell most significant
                    let sig = cells.iter().fold(0u64, |acc, &c| {
                        acc << 4 | u64::from((self.adj[v] & c).count_ones())
                    });
                    scratch.push((sig, v));
                }
                scratch.sort_unstable();
                let mut group = 0u64;
                let mut last = scratch[0].0;
                for &(sig, v) in &scratch {
                    if sig != last {
                        next.push(group);
                        group = 0;
                        last = sig;
                    }
                    group |= 1 << v;
                }
                next.push(group);
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn certificate(&self, order: &[usize]) -> u128 {
        let mut bits = 0u128;
        for i in 0..self.n {
            let row = self.adj[order[i]];
            for &w in &order[i + 1..] {
                bits = bits << 1 | u128::from(row >> w & 1);
            }
        }
        bits
    }

    fn search(&mut self, mut cells: Vec<u64>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let cert = self.certificate(&order);
            if self.best.as_ref().map_or(true, |(b, _)| cert > *b) {
                self.best = Some((cert, order));
            }
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in VertexSet::from_bits(cell).iter() {
            let twin = tried.iter().any(|&u| {
                self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)
            });
            if twin {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            self.search(child);
        }
    }
}

/// Canonical certificate and the labelling achieving it (`labelling[i]` is
/// the original vertex placed at canonical position `i`).
pub fn canonical_labelling(g: &Graph) -> (Certificate, Vec<usize>) {
    let n = g.order();
    assert!(n <= CANON_MAX_ORDER, "canonical forms support order <= {CANON_MAX_ORDER}");
    let mut canon = Canon {
        adj: g.rows(),
        n,
        best: None,
    };
    if n == 0 {
        return (Certificate { order: 0, bits: 0 }, Vec::new());
    }
    canon.search(vec![g.vertices().bits()]);
    let (bits, order) = canon.best.expect("at least one leaf");
    (
        Certificate {
            order: n as u8,
            bits,
        },
        order,
    )
}

pub fn certificate(g: &Graph) -> Certificate {
    canonical_labelling(g).0
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    certificate(g).to_graph()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && certificate(a) == certificate(b)
}

/// One isomorphism-class representative of every graph of each order
/// `0..=max_order` satisfying `keep`, which must be hereditary and
/// isomorphism-invariant. Representatives are canonical forms, sorted by
/// certificate within each order.
pub fn graphs_by_order<F>(max_order: usize, keep: F) -> Vec<Vec<Graph>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    assert!(max_order <= CANON_MAX_ORDER);
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(max_order + 1);
    let empty = Graph::empty(0);
    levels.push(if keep(&empty) { vec![empty] } else { Vec::new() });
    for n in 1..=max_order {
        let parents = &levels[n - 1];
        let certs: BTreeSet<Certificate> = parents
            .par_iter()
            .fold(BTreeSet::new, |mut acc, p| {
                let mut rows: Vec<u64> = p.rows().to_vec();
                rows.push(0);
                for mask in 0u64..1 << (n - 1) {
                    for (v, row) in rows.iter_mut().enumerate().take(n - 1) {
                        *row = p.rows()[v] | (mask >> v & 1) << (n - 1);
                    }
                    rows[n - 1] = mask;
                    let child = Graph::from_rows(rows.clone());
                    if keep(&child) {
                        acc.insert(certificate(&child));
                    }
                }
                acc
            })
            .reduce(BTreeSet::new, |mut a, mut b| {
                if a.len() < b.len() {
                    std::mem::swap(&mut a, &mut b);
                }
                a.extend(b);
                a
            });
        levels.push(certs.into_iter().map(Certificate::to_graph).collect());
    }
    levels
}

/// Every connected graph on `1..=max_order` vertices, up to isomorphism,
/// ordered by order then certificate.
pub fn connected_graphs(max_order: usize) -> Vec<Graph> {
    graphs_by_order(max_order, |_| true)
        .into_iter()
        .flatten()
        .filter(|g| g.order() >= 1 && g.is_connected())
        .collect()
}
