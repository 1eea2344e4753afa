//! Test-only oracles, written independently of the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use ladder_graphs::{Coefficient, DiagGraph, NormalMonomial, NormalPolynomial};

/// Stirling numbers of the second kind from the triangle recurrence
/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; n + 1]; n + 1];
    t[0][0] = 1;
    for i in 1..=n {
        for k in 1..=i {
            t[i][k] = k as u64 * t[i - 1][k] + t[i - 1][k - 1];
        }
    }
    t
}

/// Number of partial injective maps from `grays` items into `whites` items,
/// by literally walking every choice.
pub fn brute_matching_count(grays: usize, whites: usize) -> usize {
    fn walk(g: usize, used: &mut Vec<bool>) -> usize {
        if g == 0 {
            return 1;
        }
        let mut total = walk(g - 1, used);
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                total += walk(g - 1, used);
                used[j] = false;
            }
        }
        total
    }
    walk(grays, &mut vec![false; whites])
}

/// Same count, split by the number of joined pairs.
pub fn brute_matching_histogram(grays: usize, whites: usize) -> Vec<usize> {
    fn walk(g: usize, joined: usize, used: &mut Vec<bool>, hist: &mut Vec<usize>) {
        if g == 0 {
            hist[joined] += 1;
            return;
        }
        walk(g - 1, joined, used, hist);
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                walk(g - 1, joined + 1, used, hist);
                used[j] = false;
            }
        }
    }
    let mut hist = vec![0; grays.min(whites) + 1];
    walk(grays, 0, &mut vec![false; whites], &mut hist);
    hist
}

/// String rewriting of `A` (annihilator) / `C` (creator) words: replace any
/// `AC` by `CA` plus the word without the pair until nothing changes.
pub fn naive_normal_order(word: &str) -> BTreeMap<(u32, u32), i64> {
    let mut pending: HashMap<String, i64> = HashMap::new();
    pending.insert(word.to_string(), 1);
    let mut done = BTreeMap::new();
    while !pending.is_empty() {
        let mut next: HashMap<String, i64> = HashMap::new();
        for (w, c) in pending {
            match w.find("AC") {
                None => {
                    let r = w.chars().filter(|&x| x == 'C').count() as u32;
                    let s = w.len() as u32 - r;
                    *done.entry((r, s)).or_insert(0) += c;
                }
                Some(j) => {
                    let swapped = format!("{}CA{}", &w[..j], &w[j + 2..]);
                    let dropped = format!("{}{}", &w[..j], &w[j + 2..]);
                    *next.entry(swapped).or_insert(0) += c;
                    *next.entry(dropped).or_insert(0) += c;
                }
            }
        }
        pending = next;
    }
    done.retain(|_, c| *c != 0);
    done
}

pub fn to_poly(terms: &BTreeMap<(u32, u32), i64>) -> NormalPolynomial {
    NormalPolynomial::from_terms(
        terms
            .iter()
            .map(|(&(r, s), &c)| (Coefficient::from_integer(c), NormalMonomial::new(r, s))),
    )
}

pub fn poly(terms: &[(i64, u32, u32)]) -> NormalPolynomial {
    NormalPolynomial::from_terms(
        terms
            .iter()
            .map(|&(c, r, s)| (Coefficient::from_integer(c), NormalMonomial::new(r, s))),
    )
}

/// Depth-first search for a closed path through the vertices, following
/// lines from the out-port's vertex to the in-port's vertex.
pub fn has_cycle(g: &DiagGraph) -> bool {
    let mut owner = HashMap::new();
    for (i, v) in g.vertices().iter().enumerate() {
        for p in v.in_ports.iter().chain(&v.out_ports) {
            owner.insert(*p, i);
        }
    }
    let n = g.vertices().len();
    let mut succ = vec![Vec::new(); n];
    for e in g.edges() {
        succ[owner[&e.out_port]].push(owner[&e.in_port]);
    }
    // 0 = unvisited, 1 = on stack, 2 = finished
    fn visit(v: usize, succ: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &succ[v] {
            if state[w] == 1 || (state[w] == 0 && visit(w, succ, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; n];
    (0..n).any(|v| state[v] == 0 && visit(v, &succ, &mut state))
}

/// Connected components of the underlying undirected vertex graph.
pub fn component_count(g: &DiagGraph) -> usize {
    let n = g.vertices().len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let root = find(p, p[x]);
            p[x] = root;
        }
        p[x]
    }
    for (a, b) in g.vertex_arcs() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}
