//! Brute-force oracles and graph enumerations shared by the integration
//! tests. Nothing here calls the library's algorithms; only `Graph` values
//! are shared.

#![allow(dead_code)]

use boxlab::Graph;

/// Every labeled graph on `n` vertices (2^(n choose 2) of them).
pub fn all_labeled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..g.n() {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn edge_code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(perm[u], perm[v]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices (n ≤ 7), found by minimizing the edge code over all relabelings.
pub fn connected_up_to_iso(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let mut seen = std::collections::BTreeMap::new();
    for g in all_labeled(n).into_iter().filter(is_connected) {
        let canon = perms.iter().map(|p| edge_code(&g, p)).min().unwrap();
        seen.entry(canon).or_insert(g);
    }
    seen.into_values().collect()
}

/// Chordless cycle of length ≥ 4 exists iff some induced subgraph has no
/// simplicial vertex.
pub fn naive_chordal(g: &Graph) -> bool {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    // a chordal graph stays chordal after removing a simplicial vertex,
    // and every chordal graph has one
    while !alive.is_empty() {
        let simplicial = alive.iter().position(|&v| {
            let nb: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&u| g.has_edge(u, v))
                .collect();
            nb.iter()
                .all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
        });
        match simplicial {
            Some(i) => {
                alive.remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Path between `a` and `b` avoiding `N[z]`.
pub fn path_avoiding(g: &Graph, a: usize, b: usize, z: usize) -> bool {
    let blocked = |v: usize| v == z || g.has_edge(v, z);
    if blocked(a) || blocked(b) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(u) = stack.pop() {
        if u == b {
            return true;
        }
        for v in 0..g.n() {
            if g.has_edge(u, v) && !seen[v] && !blocked(v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

pub fn is_asteroidal_triple(g: &Graph, t: [usize; 3]) -> bool {
    let [x, y, z] = t;
    x != y
        && y != z
        && x != z
        && !g.has_edge(x, y)
        && !g.has_edge(y, z)
        && !g.has_edge(x, z)
        && path_avoiding(g, x, y, z)
        && path_avoiding(g, y, z, x)
        && path_avoiding(g, x, z, y)
}

pub fn naive_at_free(g: &Graph) -> bool {
    let n = g.n();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if is_asteroidal_triple(g, [x, y, z]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Lekkerkerker–Boland: interval iff chordal and AT-free.
pub fn naive_interval(g: &Graph) -> bool {
    naive_chordal(g) && naive_at_free(g)
}

/// ω by subset enumeration (n ≤ 24).
pub fn naive_clique_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 24);
    let nb: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| g.has_edge(u, v))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect();
    let mut best = 0;
    for s in 0u32..1 << n {
        let c = s.count_ones() as usize;
        if c <= best {
            continue;
        }
        let clique = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .all(|v| s & !(1 << v) & !nb[v] == 0);
        if clique {
            best = c;
        }
    }
    best
}

/// χ by trying k = 1, 2, … with plain backtracking.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    fn color(g: &Graph, v: usize, k: usize, c: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for x in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || c[u] != x) {
                c[v] = x;
                if color(g, v + 1, k, c) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n())
        .find(|&k| color(g, 0, k, &mut vec![0; g.n()]))
        .unwrap()
}

/// Zero-divisor graph by direct scan, as (labels, adjacency predicate).
pub fn naive_zdg(n: u64) -> (Vec<u64>, Graph) {
    let labels: Vec<u64> = (1..n).filter(|&x| (1..n).any(|y| x * y % n == 0)).collect();
    let g = Graph::from_fn(labels.len(), |i, j| labels[i] * labels[j] % n == 0);
    (labels, g)
}

pub fn naive_is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(p, e)` if `n = p^e` with `p` prime and `e ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}
