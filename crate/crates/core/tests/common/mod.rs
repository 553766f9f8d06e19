//! Independent reference implementations shared by the integration tests.
//! None of these call into the library beyond `Graph` construction.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use bei::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Upper-triangle edge bits of `g` relabelled by `perm`, as a sorted list.
fn relabelled_edges(g: &Graph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g
        .edges()
        .map(|(a, b)| {
            let (x, y) = (perm[a], perm[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    e.sort_unstable();
    e
}

/// Lexicographically least relabelled edge list over all permutations.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| relabelled_edges(g, p))
        .min()
        .unwrap_or_default()
}

/// Every labelled graph on `n` vertices, by edge-bit pattern.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Number of vertices reachable from `start` avoiding `removed`, by a
/// plain stack search over adjacency queries.
fn component_of(g: &Graph, start: usize, removed: &HashSet<usize>, seen: &mut HashSet<usize>) {
    let mut stack = vec![start];
    seen.insert(start);
    while let Some(u) = stack.pop() {
        for w in 0..g.n() {
            if g.has_edge(u, w) && !removed.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
}

pub fn count_components(g: &Graph, removed: &HashSet<usize>) -> usize {
    let mut seen = HashSet::new();
    let mut c = 0;
    for v in 0..g.n() {
        if !removed.contains(&v) && !seen.contains(&v) {
            component_of(g, v, removed, &mut seen);
            c += 1;
        }
    }
    c
}

pub fn is_connected(g: &Graph) -> bool {
    count_components(g, &HashSet::new()) == 1
}

/// `c(T \ {v}) < c(T)` for every `v ∈ T`.
pub fn definitional_cutset(g: &Graph, t: &HashSet<usize>) -> bool {
    let c = count_components(g, t);
    t.iter().all(|&v| {
        let mut smaller = t.clone();
        smaller.remove(&v);
        count_components(g, &smaller) < c
    })
}

/// Unlabelled graphs on `n` vertices by Burnside's lemma: the average over
/// `S_n` of `2^(orbits on pairs)`, summed over cycle types.
pub fn unlabelled_graphs(n: usize) -> u128 {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut total: u128 = 0;
    let mut parts = Vec::new();
    fn walk(left: usize, max: usize, parts: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if left == 0 {
            f(parts);
            return;
        }
        for k in (1..=left.min(max)).rev() {
            parts.push(k);
            walk(left - k, k, parts, f);
            parts.pop();
        }
    }
    walk(n, n, &mut parts, &mut |lambda: &[usize]| {
        // orbits of a permutation of cycle type lambda on unordered pairs
        let mut orbits = 0;
        for (i, &a) in lambda.iter().enumerate() {
            orbits += a / 2;
            for &b in &lambda[i + 1..] {
                orbits += gcd(a, b);
            }
        }
        // class size n! / prod(k^{m_k} m_k!)
        let mut z: u128 = 1;
        let mut k = 0;
        while k < lambda.len() {
            let m = lambda[k..].iter().take_while(|&&x| x == lambda[k]).count();
            z *= (lambda[k] as u128).pow(m as u32) * fact(m);
            k += m;
        }
        total += (fact(n) / z) << orbits;
    });
    total / fact(n)
}

/// Connected unlabelled graphs on `1..=n` vertices from the totals by the
/// inverse Euler transform.
pub fn connected_unlabelled(n: usize) -> Vec<i128> {
    let a: Vec<i128> = (0..=n).map(|k| unlabelled_graphs(k) as i128).collect();
    // a(k) = Euler transform of c; invert via b(k) = k a(k) - sum_{j<k} b(j) a(k-j)
    let mut b = vec![0i128; n + 1];
    for k in 1..=n {
        let mut s = k as i128 * a[k];
        for j in 1..k {
            s -= b[j] * a[k - j];
        }
        b[k] = s;
    }
    let mut c = vec![0i128; n + 1];
    for k in 1..=n {
        let mut s = 0i128;
        for d in (1..=k).filter(|&d| k.is_multiple_of(d)) {
            s += mobius(k / d) * b[d];
        }
        c[k] = s / k as i128;
    }
    c[1..].to_vec()
}

fn mobius(mut k: usize) -> i128 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// `h_k = Σ_{i ≤ k} (-1)^{k-i} C(d-i, k-i) f_{i-1}`, with `f[0] = f_{-1}`.
pub fn straight_h(f: &[u64], d: usize) -> Vec<i64> {
    let binom = |n: usize, k: usize| -> i64 {
        if k > n {
            return 0;
        }
        let mut r: i64 = 1;
        for i in 0..k {
            r = r * (n - i) as i64 / (i as i64 + 1);
        }
        r
    };
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom(d - i, k - i) * f.get(i).copied().unwrap_or(0) as i64
                })
                .sum()
        })
        .collect()
}

/// Face counts of the complex generated by `facets` (bit masks), by listing
/// every subset of every facet once.
pub fn face_counts(facets: &[u128]) -> Vec<u64> {
    let mut faces: BTreeSet<u128> = BTreeSet::new();
    for &f in facets {
        let bits: Vec<u32> = (0..128).filter(|&b| f >> b & 1 == 1).collect();
        for sub in 0u64..1 << bits.len() {
            let mut m = 0u128;
            for (i, &b) in bits.iter().enumerate() {
                if sub >> i & 1 == 1 {
                    m |= 1 << b;
                }
            }
            faces.insert(m);
        }
    }
    let top = faces
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut f = vec![0u64; top + 1];
    for m in faces {
        f[m.count_ones() as usize] += 1;
    }
    f
}

/// A connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]);
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
