//! Brute-force oracles that share no code with the library's embedding search.
#![allow(dead_code)]

use kocay::{ColoredGraph, Graph};

/// 0 = uncolored / non-edge, 1 = red / edge, 2 = blue.
#[derive(Clone, Debug)]
pub struct Mat {
    pub n: usize,
    pub c: Vec<Vec<u8>>,
}

impl Mat {
    pub fn plain(g: &Graph) -> Mat {
        let n = g.order();
        let mut c = vec![vec![0; n]; n];
        for e in g.edges() {
            c[e.lo()][e.hi()] = 1;
            c[e.hi()][e.lo()] = 1;
        }
        Mat { n, c }
    }

    pub fn colored(g: &ColoredGraph) -> Mat {
        let n = g.order();
        let mut c = vec![vec![0; n]; n];
        for e in g.red_pairs() {
            c[e.lo()][e.hi()] = 1;
            c[e.hi()][e.lo()] = 1;
        }
        for e in g.blue_pairs() {
            c[e.lo()][e.hi()] = 2;
            c[e.hi()][e.lo()] = 2;
        }
        Mat { n, c }
    }
}

/// Calls `f` with every injective map `0..k -> 0..n`.
pub fn injections(k: usize, n: usize, f: &mut impl FnMut(&[usize])) {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(k, n, cur, used, f);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(k, n, &mut Vec::new(), &mut vec![false; n], f);
}

fn preserving_maps(p: &Mat, h: &Mat) -> u64 {
    if p.n > h.n {
        return 0;
    }
    let mut count = 0;
    injections(p.n, h.n, &mut |m| {
        for i in 0..p.n {
            for j in i + 1..p.n {
                if p.c[i][j] != 0 && p.c[i][j] != h.c[m[i]][m[j]] {
                    return;
                }
            }
        }
        count += 1;
    });
    count
}

/// Copies of `p` in `h`: colored pairs of `p` land on pairs of the same color,
/// uncolored pairs are free.
pub fn copies(p: &Mat, h: &Mat) -> u64 {
    preserving_maps(p, h) / preserving_maps(p, p)
}

pub fn count(g: &Graph, h: &Graph) -> u64 {
    copies(&Mat::plain(h), &Mat::plain(g))
}

pub fn count_colored(g: &ColoredGraph, h: &ColoredGraph) -> u64 {
    copies(&Mat::colored(h), &Mat::colored(g))
}

/// Size of the orbit of pair `(u, v)` under maps of `p` onto itself.
pub fn pair_orbit(p: &Mat, u: usize, v: usize) -> usize {
    let mut images = std::collections::BTreeSet::new();
    injections(p.n, p.n, &mut |m| {
        for i in 0..p.n {
            for j in 0..p.n {
                if p.c[i][j] != p.c[m[i]][m[j]] {
                    return;
                }
            }
        }
        let (a, b) = (m[u].min(m[v]), m[u].max(m[v]));
        images.insert((a, b));
    });
    images.len()
}

/// A labeled copy: vertex mask and sorted colored pairs `(u, v, color)`.
pub type Placed = (u32, Vec<(usize, usize, u8)>);

pub fn labeled_copies(p: &Mat, h: &Mat) -> Vec<Placed> {
    let mut out = std::collections::BTreeSet::new();
    injections(p.n, h.n, &mut |m| {
        let mut pairs = Vec::new();
        for i in 0..p.n {
            for j in i + 1..p.n {
                if p.c[i][j] != 0 {
                    if p.c[i][j] != h.c[m[i]][m[j]] {
                        return;
                    }
                    pairs.push((m[i].min(m[j]), m[i].max(m[j]), p.c[i][j]));
                }
            }
        }
        pairs.sort();
        let mask = m.iter().fold(0u32, |acc, &v| acc | 1 << v);
        out.insert((mask, pairs));
    });
    out.into_iter().collect()
}

/// Hamiltonian paths by permutations.
pub fn hamiltonian_paths(g: &Graph) -> u64 {
    let n = g.order();
    let mut ordered = 0;
    injections(n, n, &mut |m| {
        if m.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            ordered += 1;
        }
    });
    if n == 1 {
        ordered
    } else {
        ordered / 2
    }
}

/// Reference graph6 encoder from the format description.
pub fn graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        s.push((v + 63) as char);
    }
    s
}

fn tuples(lists: &[Vec<Placed>], f: &mut impl FnMut(u32, &[(usize, usize, u8)])) {
    fn go(lists: &[Vec<Placed>], mask: u32, pairs: &mut Vec<(usize, usize, u8)>, f: &mut impl FnMut(u32, &[(usize, usize, u8)])) {
        let Some((first, rest)) = lists.split_first() else {
            let mut p = pairs.clone();
            p.sort();
            p.dedup();
            f(mask, &p);
            return;
        };
        for (m, ps) in first {
            let len = pairs.len();
            pairs.extend_from_slice(ps);
            go(rest, mask | m, pairs, f);
            pairs.truncate(len);
        }
    }
    go(lists, 0, &mut Vec::new(), f);
}

/// Sequences of copies of `fs[i]` in `x` whose union is all of `x`.
pub fn cover(fs: &[Mat], x: &Mat) -> u64 {
    let lists: Vec<Vec<Placed>> = fs.iter().map(|f| labeled_copies(f, x)).collect();
    let full = (1u32 << x.n) - 1;
    let mut all = Vec::new();
    for i in 0..x.n {
        for j in i + 1..x.n {
            if x.c[i][j] != 0 {
                all.push((i, j, x.c[i][j]));
            }
        }
    }
    let mut count = 0;
    tuples(&lists, &mut |mask, pairs| {
        if mask == full && pairs == all.as_slice() {
            count += 1;
        }
    });
    count
}

/// Tuples of copies of `fs[i]` in `g` whose union spans every vertex of `g`:
/// `(all spanning unions, disconnected spanning unions)`.
pub fn spanning_tuples(fs: &[Mat], g: &Mat) -> (u64, u64) {
    let lists: Vec<Vec<Placed>> = fs.iter().map(|f| labeled_copies(f, g)).collect();
    let full = (1u32 << g.n) - 1;
    let (mut total, mut disconnected) = (0, 0);
    tuples(&lists, &mut |mask, pairs| {
        if mask != full {
            return;
        }
        total += 1;
        let mut root: Vec<usize> = (0..g.n).collect();
        fn find(r: &mut [usize], v: usize) -> usize {
            if r[v] == v {
                v
            } else {
                let t = find(r, r[v]);
                r[v] = t;
                t
            }
        }
        let mut parts = g.n;
        for &(u, v, _) in pairs {
            let (a, b) = (find(&mut root, u), find(&mut root, v));
            if a != b {
                root[a] = b;
                parts -= 1;
            }
        }
        if parts > 1 {
            disconnected += 1;
        }
    });
    (total, disconnected)
}
