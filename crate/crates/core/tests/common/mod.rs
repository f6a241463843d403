//! Independent reference implementations. Only `Graph` is used from the
//! crate, as an adjacency container.
#![allow(dead_code)]

use extremal_count::Graph;
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every injective map `V(pattern) -> V(host)` preserving edges, by brute
/// force over ordered vertex tuples.
pub fn naive_embeddings(pattern: &Graph, host: &Graph) -> u64 {
    let m = pattern.n();
    if m > host.n() {
        return 0;
    }
    let edges = pattern.edges();
    (0..host.n())
        .permutations(m)
        .filter(|phi| edges.iter().all(|&(a, b)| host.has_edge(phi[a], phi[b])))
        .count() as u64
}

/// Embeddings whose image contains every vertex of `required`.
pub fn naive_embeddings_containing(pattern: &Graph, host: &Graph, required: &[usize]) -> u64 {
    let m = pattern.n();
    if m > host.n() {
        return 0;
    }
    let edges = pattern.edges();
    (0..host.n())
        .permutations(m)
        .filter(|phi| edges.iter().all(|&(a, b)| host.has_edge(phi[a], phi[b])))
        .filter(|phi| required.iter().all(|r| phi.contains(r)))
        .count() as u64
}

/// `sum over all maps phi: V(h) -> V(p) that preserve edges of prod w(phi(v))`,
/// iterating all `|P|^|H|` maps.
pub fn all_maps_hom_sum(h: &Graph, p: &Graph, w: &[BigRational]) -> BigRational {
    let (m, k) = (h.n(), p.n());
    let edges = h.edges();
    let mut total = BigRational::from_integer(BigInt::from(0));
    let mut phi = vec![0usize; m];
    loop {
        if edges.iter().all(|&(a, b)| p.has_edge(phi[a], phi[b])) {
            total += phi.iter().map(|&i| w[i].clone()).product::<BigRational>();
        }
        let mut i = 0;
        while i < m {
            phi[i] += 1;
            if phi[i] < k {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
        if i == m {
            return total;
        }
    }
}

fn has_triangle(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> bool {
    (0..n)
        .array_combinations()
        .any(|[a, b, c]| adj(a, b) && adj(b, c) && adj(a, c))
}

pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).array_combinations().map(|[a, b]| (a, b)).collect()
}

/// Edge mask under the relabelling `perm`, as a sorted edge bit vector.
fn relabel(mask: u32, pairs: &[(usize, usize)], index: &[Vec<usize>], perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << index[perm[a]][perm[b]];
        }
    }
    out
}

fn pair_index(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut index = vec![vec![0; n]; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    index
}

fn triangle_free_masks(n: usize) -> Vec<u32> {
    let pairs = pair_list(n);
    let index = pair_index(n, &pairs);
    (0..1u32 << pairs.len())
        .filter(|&mask| !has_triangle(n, &|a, b| a != b && mask >> index[a][b] & 1 == 1))
        .collect()
}

/// Triangle-free graphs on `n <= 6` vertices up to isomorphism: the minimum
/// relabelled mask over all `n!` permutations names each class.
pub fn brute_triangle_free_classes(n: usize) -> usize {
    let pairs = pair_list(n);
    let index = pair_index(n, &pairs);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut classes: Vec<u32> = triangle_free_masks(n)
        .into_iter()
        .map(|mask| {
            perms
                .iter()
                .map(|p| relabel(mask, &pairs, &index, p))
                .min()
                .unwrap_or(0)
        })
        .collect();
    classes.sort_unstable();
    classes.dedup();
    classes.len()
}

/// Labelled triangle-free graphs on `n` vertices.
pub fn labelled_triangle_free(n: usize) -> u64 {
    triangle_free_masks(n).len() as u64
}

/// Automorphisms by trying every permutation.
pub fn brute_automorphisms(g: &Graph) -> u64 {
    let n = g.n();
    let edges = g.edges();
    (0..n)
        .permutations(n)
        .filter(|p| edges.iter().all(|&(a, b)| g.has_edge(p[a], p[b])))
        .count() as u64
}

/// Maximum matching size by trying edge subsets from the largest size down.
pub fn brute_matching_size(g: &Graph) -> usize {
    let edges = g.edges();
    for k in (1..=g.n() / 2).rev() {
        let disjoint = |set: &Vec<&(usize, usize)>| {
            let mut seen = vec![false; g.n()];
            set.iter().all(|&&(a, b)| {
                !std::mem::replace(&mut seen[a], true) && !std::mem::replace(&mut seen[b], true)
            })
        };
        if edges.iter().combinations(k).any(|s| disjoint(&s)) {
            return k;
        }
    }
    0
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mask = bits
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i));
            graph_from_mask(n, mask)
        })
    })
}

/// Triangle-free graph grown by inserting edges in random order whenever no
/// triangle appears.
pub fn random_triangle_free(n: usize, density: f64, rng: &mut impl Rng) -> Graph {
    let mut pairs = pair_list(n);
    pairs.shuffle(rng);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for (a, b) in pairs {
        if rng.gen::<f64>() < density && !(0..n).any(|c| adj[a][c] && adj[b][c]) {
            adj[a][b] = true;
            adj[b][a] = true;
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_triangle_free(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0.2f64..1.0, any::<u64>()).prop_map(|(n, density, seed)| {
        random_triangle_free(n, density, &mut ChaCha8Rng::seed_from_u64(seed))
    })
}

/// Random bipartite graph with `1..=components` non-empty connected
/// components and at most `max_m` vertices in total.
pub fn random_bipartite(max_m: usize, components: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(0);
    let mut left = max_m;
    for i in 0..components {
        let remaining_parts = components - i;
        let size = rng.gen_range(1..=left - (remaining_parts - 1));
        g = g.disjoint_union(&random_connected_bipartite(size, rng));
        left -= size;
    }
    g
}

/// Random spanning tree on `size` vertices plus extra edges across its
/// 2-colouring.
pub fn random_connected_bipartite(size: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    let mut colour = vec![0u8; size];
    for v in 1..size {
        let parent = rng.gen_range(0..v);
        colour[v] = 1 - colour[parent];
        edges.push((parent, v));
    }
    for (a, b) in pair_list(size) {
        if colour[a] != colour[b] && !edges.contains(&(a, b)) && rng.gen_bool(0.3) {
            edges.push((a, b));
        }
    }
    Graph::from_edges(size, &edges).unwrap()
}
