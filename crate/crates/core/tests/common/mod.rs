//! Test-only reference implementations. They share no code with the crate
//! beyond the `Graph` type used to hand graphs across.

#![allow(dead_code)]

use p3iso::Graph;

/// Adjacency bitmasks.
pub fn masks(g: &Graph) -> Vec<u64> {
    let mut m = vec![0u64; g.order()];
    for (u, v) in g.edges() {
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }
    m
}

/// `G - N[D]` has maximum degree at most 1.
pub fn isolates_p3(adj: &[u64], d: u64) -> bool {
    let n = adj.len();
    let mut covered = d;
    for (v, a) in adj.iter().enumerate() {
        if d >> v & 1 == 1 {
            covered |= a;
        }
    }
    let alive = !covered & ((1u64 << n) - 1);
    (0..n).all(|v| alive >> v & 1 == 0 || (adj[v] & alive).count_ones() <= 1)
}

/// Smallest P3-isolating set size by trying every subset, smallest first.
pub fn brute_iota(g: &Graph) -> usize {
    let adj = masks(g);
    let n = adj.len();
    assert!(n <= 24);
    for k in 0..=n {
        if subsets_of_size(n, k).any(|d| isolates_p3(&adj, d)) {
            return k;
        }
    }
    unreachable!("the whole vertex set isolates")
}

pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    // Gosper's hack over n-bit words.
    let limit = 1u64 << n;
    let mut cur = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if k == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

/// graph6 encoding written directly from the format description: an order
/// header, then the upper triangle column by column, six bits per byte.
pub fn graph6_oracle(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for b in 0..6 {
            x = x << 1 | chunk.get(b).copied().unwrap_or(false) as u8;
        }
        out.push(x + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Labeled-edge form of an `n`-vertex graph given by an edge bitmask over
/// the upper triangle.
fn graph_from_bits(n: usize, bits: u64, pairs: &[(usize, usize)]) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if bits >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn connected(adj: &[u64]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen = 1u64;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        let mut f = adj[u] & !seen;
        seen |= adj[u];
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            stack.push(v);
        }
    }
    seen.count_ones() as usize == n
}

/// Number of isomorphism classes of `n`-vertex graphs with the given
/// maximum degree, by scanning every labeled graph and keeping those that
/// are the smallest among all their relabelings.
pub fn naive_class_count(n: usize, max_degree: usize, connected_only: bool) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let index = |u: usize, v: usize| {
        pairs
            .iter()
            .position(|&p| p == (u.min(v), u.max(v)))
            .unwrap()
    };
    let perms = permutations(n);
    let relabel: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut count = 0;
    'graphs: for bits in 0..1u64 << pairs.len() {
        let adj = graph_from_bits(n, bits, &pairs);
        if adj.iter().any(|a| a.count_ones() as usize > max_degree) {
            continue;
        }
        if connected_only && !connected(&adj) {
            continue;
        }
        for map in &relabel {
            let mut image = 0u64;
            for (i, &j) in map.iter().enumerate() {
                image |= (bits >> i & 1) << j;
            }
            if image < bits {
                continue 'graphs;
            }
        }
        count += 1;
    }
    count
}

/// Induced k-cycle by scanning every k-subset for a 2-regular connected
/// induced subgraph.
pub fn has_induced_cycle_oracle(g: &Graph, k: usize) -> bool {
    let adj = masks(g);
    subsets_of_size(adj.len(), k).any(|s| {
        let sub: Vec<u64> = (0..adj.len())
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| adj[v] & s)
            .collect();
        sub.iter().all(|a| a.count_ones() == 2) && {
            let first = s.trailing_zeros() as usize;
            let mut seen = 1u64 << first;
            let mut stack = vec![first];
            while let Some(u) = stack.pop() {
                let mut f = adj[u] & s & !seen;
                seen |= f;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    stack.push(v);
                }
            }
            seen == s
        }
    })
}
