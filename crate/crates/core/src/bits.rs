//! Bitset kernel shared by plain and 2-edge-refined graphs.
//!
//! A plain graph is a [`Layers`] value whose blue layer is empty; a colored
//! graph uses both layers. Pairs absent from both layers are uncolored. All
//! search routines (canonical labeling, automorphisms, embeddings, subobject
//! census) are written once here.

use std::collections::HashMap;

use crate::covering::LabeledCopy;

pub const MAX_N: usize = 10;
pub const MAX_PAIRS: usize = MAX_N * (MAX_N - 1) / 2;

/// Column-wise index of the unordered pair `{i, j}`: (0,1), (0,2), (1,2), (0,3), ...
///
/// This is also the bit order used by graph6.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi * (hi - 1) / 2 + lo
}

const fn build_pairs() -> [(u8, u8); MAX_PAIRS] {
    let mut out = [(0u8, 0u8); MAX_PAIRS];
    let mut j = 1;
    let mut k = 0;
    while j < MAX_N {
        let mut i = 0;
        while i < j {
            out[k] = (i as u8, j as u8);
            k += 1;
            i += 1;
        }
        j += 1;
    }
    out
}

pub const PAIRS: [(u8, u8); MAX_PAIRS] = build_pairs();

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
pub fn full_mask(n: usize) -> u16 {
    ((1u32 << n) - 1) as u16
}

#[inline]
fn bits(mut m: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

#[inline]
fn bits64(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Key of an isomorphism class: order plus the minimal (red, blue) code.
pub type CodeKey = (usize, u64, u64);

/// Result of a canonical labeling search.
#[derive(Clone, Copy, Debug)]
pub struct Canon {
    pub red: u64,
    pub blue: u64,
    /// `order[new] = old`.
    pub order: [u8; MAX_N],
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Layers {
    pub n: usize,
    pub red: [u16; MAX_N],
    pub blue: [u16; MAX_N],
}

impl Layers {
    pub fn new(n: usize) -> Self {
        debug_assert!(n <= MAX_N);
        Layers {
            n,
            red: [0; MAX_N],
            blue: [0; MAX_N],
        }
    }

    #[inline]
    pub fn is_red(&self, i: usize, j: usize) -> bool {
        self.red[i] >> j & 1 == 1
    }

    #[inline]
    pub fn is_blue(&self, i: usize, j: usize) -> bool {
        self.blue[i] >> j & 1 == 1
    }

    #[inline]
    pub fn set_red(&mut self, i: usize, j: usize) {
        self.red[i] |= 1 << j;
        self.red[j] |= 1 << i;
    }

    #[inline]
    pub fn set_blue(&mut self, i: usize, j: usize) {
        self.blue[i] |= 1 << j;
        self.blue[j] |= 1 << i;
    }

    #[inline]
    pub fn clear(&mut self, i: usize, j: usize) {
        self.red[i] &= !(1 << j);
        self.red[j] &= !(1 << i);
        self.blue[i] &= !(1 << j);
        self.blue[j] &= !(1 << i);
    }

    pub fn red_count(&self) -> usize {
        self.red[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn blue_count(&self) -> usize {
        self.blue[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn swapped(&self) -> Layers {
        Layers {
            n: self.n,
            red: self.blue,
            blue: self.red,
        }
    }

    /// Pair masks indexed by [`pair_index`].
    pub fn pair_masks(&self) -> (u64, u64) {
        let mut r = 0u64;
        let mut b = 0u64;
        for (k, &(i, j)) in PAIRS[..pair_count(self.n)].iter().enumerate() {
            if self.is_red(i as usize, j as usize) {
                r |= 1 << k;
            }
            if self.is_blue(i as usize, j as usize) {
                b |= 1 << k;
            }
        }
        (r, b)
    }

    pub fn from_pair_masks(n: usize, red: u64, blue: u64) -> Layers {
        let mut g = Layers::new(n);
        for k in bits64(red) {
            let (i, j) = PAIRS[k];
            g.set_red(i as usize, j as usize);
        }
        for k in bits64(blue) {
            let (i, j) = PAIRS[k];
            g.set_blue(i as usize, j as usize);
        }
        g
    }

    /// The whole graph as a labeled subobject of itself.
    pub fn whole(&self) -> LabeledCopy {
        let (red, blue) = self.pair_masks();
        LabeledCopy {
            vertices: full_mask(self.n),
            red,
            blue,
        }
    }

    /// Relabel with `perm[old] = new`.
    pub fn relabel(&self, perm: &[u8]) -> Layers {
        let mut out = Layers::new(self.n);
        for i in 0..self.n {
            for j in bits(self.red[i]) {
                out.red[perm[i] as usize] |= 1 << perm[j];
            }
            for j in bits(self.blue[i]) {
                out.blue[perm[i] as usize] |= 1 << perm[j];
            }
        }
        out
    }

    /// Induced structure on `mask`, compacted to `0..popcount` in increasing vertex order.
    pub fn restrict(&self, mask: u16) -> Layers {
        let verts: Vec<usize> = bits(mask).collect();
        let mut out = Layers::new(verts.len());
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.is_red(u, v) {
                    out.set_red(a, b);
                } else if self.is_blue(u, v) {
                    out.set_blue(a, b);
                }
            }
        }
        out
    }

    /// Compacted structure of a labeled subobject of `self`.
    pub fn extract(copy: &LabeledCopy) -> Layers {
        let mut index = [0u8; MAX_N];
        let mut n = 0;
        for v in bits(copy.vertices) {
            index[v] = n as u8;
            n += 1;
        }
        let mut out = Layers::new(n);
        for k in bits64(copy.red) {
            let (i, j) = PAIRS[k];
            out.set_red(index[i as usize] as usize, index[j as usize] as usize);
        }
        for k in bits64(copy.blue) {
            let (i, j) = PAIRS[k];
            out.set_blue(index[i as usize] as usize, index[j as usize] as usize);
        }
        out
    }

    /// Code bits of this labeling: pairs in column order, first pair most significant.
    pub fn code(&self) -> (u64, u64) {
        let mut r = 0u64;
        let mut b = 0u64;
        for &(i, j) in &PAIRS[..pair_count(self.n)] {
            r = r << 1 | self.is_red(i as usize, j as usize) as u64;
            b = b << 1 | self.is_blue(i as usize, j as usize) as u64;
        }
        (r, b)
    }

    pub fn from_code(n: usize, red: u64, blue: u64) -> Layers {
        let len = pair_count(n);
        let mut g = Layers::new(n);
        for (p, &(i, j)) in PAIRS[..len].iter().enumerate() {
            let shift = len - 1 - p;
            if red >> shift & 1 == 1 {
                g.set_red(i as usize, j as usize);
            }
            if blue >> shift & 1 == 1 {
                g.set_blue(i as usize, j as usize);
            }
        }
        g
    }

    /// Lexicographically smallest (red, blue) code over all relabelings.
    pub fn canonical(&self) -> Canon {
        let mut search = CanonSearch {
            g: self,
            total: pair_count(self.n),
            best: None,
            order: [0; MAX_N],
        };
        let mut order = [0u8; MAX_N];
        search.dfs(0, 0, 0, 0, &mut order);
        let (red, blue) = search.best.expect("at least one labeling");
        Canon {
            red,
            blue,
            order: search.order,
        }
    }

    pub fn canonical_key(&self) -> CodeKey {
        let c = self.canonical();
        (self.n, c.red, c.blue)
    }

    /// All color-preserving permutations, as `perm[old] = new`.
    pub fn automorphisms(&self) -> Vec<[u8; MAX_N]> {
        let mut out = Vec::new();
        let mut image = [0u8; MAX_N];
        self.auto_dfs(0, 0, &mut image, &mut out);
        out
    }

    fn auto_dfs(&self, i: usize, used: u16, image: &mut [u8; MAX_N], out: &mut Vec<[u8; MAX_N]>) {
        if i == self.n {
            out.push(*image);
            return;
        }
        let rdeg = self.red[i].count_ones();
        let bdeg = self.blue[i].count_ones();
        'cand: for t in bits(full_mask(self.n) & !used) {
            if self.red[t].count_ones() != rdeg || self.blue[t].count_ones() != bdeg {
                continue;
            }
            for j in 0..i {
                let tj = image[j] as usize;
                if self.is_red(i, j) != self.is_red(t, tj) || self.is_blue(i, j) != self.is_blue(t, tj) {
                    continue 'cand;
                }
            }
            image[i] = t as u8;
            self.auto_dfs(i + 1, used | 1 << t, image, out);
        }
    }

    pub fn automorphism_count(&self) -> u64 {
        self.automorphisms().len() as u64
    }

    /// Calls `visit` with every injective map `pattern -> host` sending red pairs
    /// to red pairs and blue pairs to blue pairs. Uncolored pairs of the pattern
    /// are unconstrained. The slice is indexed by pattern vertex.
    pub fn for_each_embedding<F: FnMut(&[u8])>(pattern: &Layers, host: &Layers, mut visit: F) {
        if pattern.n > host.n {
            return;
        }
        let plan = EmbedPlan::new(pattern);
        let mut image = [0u8; MAX_N];
        let mut by_vertex = [0u8; MAX_N];
        plan.dfs(host, 0, 0, &mut image, &mut |img: &[u8; MAX_N]| {
            for (k, &v) in plan.order[..plan.n].iter().enumerate() {
                by_vertex[v as usize] = img[k];
            }
            visit(&by_vertex[..pattern.n]);
        });
    }

    pub fn count_embeddings(pattern: &Layers, host: &Layers) -> u64 {
        if pattern.n > host.n {
            return 0;
        }
        let plan = EmbedPlan::new(pattern);
        let mut image = [0u8; MAX_N];
        plan.count(host, 0, 0, &mut image)
    }

    /// Distinct labeled copies of `pattern` inside `host`, sorted.
    pub fn copies(pattern: &Layers, host: &Layers) -> Vec<LabeledCopy> {
        let mut seen = std::collections::HashSet::new();
        let pairs: Vec<(usize, usize, bool)> = PAIRS[..pair_count(pattern.n)]
            .iter()
            .filter_map(|&(i, j)| {
                let (i, j) = (i as usize, j as usize);
                if pattern.is_red(i, j) {
                    Some((i, j, true))
                } else if pattern.is_blue(i, j) {
                    Some((i, j, false))
                } else {
                    None
                }
            })
            .collect();
        Layers::for_each_embedding(pattern, host, |map| {
            let mut c = LabeledCopy::default();
            for &v in map {
                c.vertices |= 1 << v;
            }
            for &(i, j, red) in &pairs {
                let bit = 1u64 << pair_index(map[i] as usize, map[j] as usize);
                if red {
                    c.red |= bit;
                } else {
                    c.blue |= bit;
                }
            }
            seen.insert(c);
        });
        let mut out: Vec<LabeledCopy> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// Connected components with respect to colored (red or blue) pairs, as vertex masks
    /// ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u16> {
        let mut seen = 0u16;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u16 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u16;
                for v in bits(frontier) {
                    next |= self.red[v] | self.blue[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Census of labeled subobjects grouped by isomorphism class.
    ///
    /// A subobject is a vertex subset together with a subset of the red and blue
    /// pairs inside it. Only subobjects with at most `max_vertices` vertices and
    /// at most `max_pairs` colored pairs are visited; `spanning` restricts to the
    /// full vertex set.
    pub fn census(
        &self,
        exec: crate::par::Execution,
        max_vertices: usize,
        max_pairs: usize,
        spanning: bool,
    ) -> Vec<(CodeKey, u64)> {
        let full = full_mask(self.n);
        let subsets: Vec<u16> = if spanning {
            vec![full]
        } else {
            (1..=full as u32)
                .map(|m| m as u16)
                .filter(|m| m.count_ones() as usize <= max_vertices)
                .collect()
        };
        let (red_all, blue_all) = self.pair_masks();
        let parts = crate::par::map(exec, &subsets, |&mask| {
            let inside = pairs_within(mask, self.n);
            let avail: Vec<(u64, bool)> = bits64((red_all | blue_all) & inside)
                .map(|k| (1u64 << k, red_all >> k & 1 == 1))
                .collect();
            let mut memo: HashMap<Layers, CodeKey> = HashMap::new();
            let mut counts: HashMap<CodeKey, u64> = HashMap::new();
            let m = avail.len();
            let mut visit = |sel: u64| {
                let mut c = LabeledCopy {
                    vertices: mask,
                    red: 0,
                    blue: 0,
                };
                for k in bits64(sel) {
                    let (bit, red) = avail[k];
                    if red {
                        c.red |= bit;
                    } else {
                        c.blue |= bit;
                    }
                }
                let g = Layers::extract(&c);
                let key = *memo.entry(g).or_insert_with(|| g.canonical_key());
                *counts.entry(key).or_insert(0) += 1;
            };
            for_each_subset_upto(m, max_pairs, &mut visit);
            counts
        });
        let mut merged: HashMap<CodeKey, u64> = HashMap::new();
        for part in parts {
            for (k, c) in part {
                *merged.entry(k).or_insert(0) += c;
            }
        }
        let mut out: Vec<(CodeKey, u64)> = merged.into_iter().collect();
        out.sort();
        out
    }

    /// All labeled structures obtained by overlaying `pattern` onto `self` through an
    /// injective placement into `self`'s vertices plus fresh ones, keeping at most
    /// `max_order` vertices. Placements that would give a pair both colors are skipped.
    pub fn overlays(&self, pattern: &Layers, max_order: usize) -> Vec<Layers> {
        let pool = (self.n + pattern.n).min(max_order).min(MAX_N);
        let mut out = Vec::new();
        let mut map = [0u8; MAX_N];
        self.overlay_dfs(pattern, pool, 0, 0, &mut map, &mut out);
        out
    }

    fn overlay_dfs(
        &self,
        pattern: &Layers,
        pool: usize,
        k: usize,
        used: u16,
        map: &mut [u8; MAX_N],
        out: &mut Vec<Layers>,
    ) {
        if k == pattern.n {
            // Fresh vertices must be used contiguously from self.n upward.
            let fresh = used & !full_mask(self.n);
            let n_new = fresh.count_ones() as usize;
            if fresh != (full_mask(self.n + n_new) & !full_mask(self.n)) {
                return;
            }
            let mut g = *self;
            g.n = self.n + n_new;
            for i in 0..pattern.n {
                for j in i + 1..pattern.n {
                    let (a, b) = (map[i] as usize, map[j] as usize);
                    if pattern.is_red(i, j) {
                        if g.is_blue(a, b) {
                            return;
                        }
                        g.set_red(a, b);
                    } else if pattern.is_blue(i, j) {
                        if g.is_red(a, b) {
                            return;
                        }
                        g.set_blue(a, b);
                    }
                }
            }
            out.push(g);
            return;
        }
        // Fresh vertices are interchangeable: only the lowest unused fresh vertex is tried.
        let next_fresh = (self.n..pool).find(|&v| used >> v & 1 == 0);
        for t in 0..self.n {
            if used >> t & 1 == 0 {
                map[k] = t as u8;
                self.overlay_dfs(pattern, pool, k + 1, used | 1 << t, map, out);
            }
        }
        if let Some(t) = next_fresh {
            map[k] = t as u8;
            self.overlay_dfs(pattern, pool, k + 1, used | 1 << t, map, out);
        }
    }
}

/// Pair mask of all pairs with both endpoints in `mask`.
pub fn pairs_within(mask: u16, n: usize) -> u64 {
    let mut m = 0u64;
    for (k, &(i, j)) in PAIRS[..pair_count(n)].iter().enumerate() {
        if mask >> i & 1 == 1 && mask >> j & 1 == 1 {
            m |= 1 << k;
        }
    }
    m
}

/// Visits every subset of `{0..m}` with at most `limit` elements, as a bitmask.
fn for_each_subset_upto<F: FnMut(u64)>(m: usize, limit: usize, visit: &mut F) {
    fn rec<F: FnMut(u64)>(start: usize, m: usize, left: usize, cur: u64, visit: &mut F) {
        visit(cur);
        if left == 0 {
            return;
        }
        for k in start..m {
            rec(k + 1, m, left - 1, cur | 1 << k, visit);
        }
    }
    rec(0, m, limit, 0, visit);
}

struct CanonSearch<'a> {
    g: &'a Layers,
    total: usize,
    best: Option<(u64, u64)>,
    order: [u8; MAX_N],
}

impl CanonSearch<'_> {
    fn dfs(&mut self, depth: usize, used: u16, pr: u64, pb: u64, order: &mut [u8; MAX_N]) {
        let n = self.g.n;
        if depth == n {
            if self.best.is_none_or(|b| (pr, pb) < b) {
                self.best = Some((pr, pb));
                self.order = *order;
            }
            return;
        }
        let prefix_len = (depth + 1) * depth / 2;
        for v in bits(full_mask(n) & !used) {
            let mut cr = 0u64;
            let mut cb = 0u64;
            for &w in &order[..depth] {
                cr = cr << 1 | self.g.is_red(w as usize, v) as u64;
                cb = cb << 1 | self.g.is_blue(w as usize, v) as u64;
            }
            let nr = (pr << depth) | cr;
            let nb = (pb << depth) | cb;
            if let Some((br, _)) = self.best {
                if nr > br >> (self.total - prefix_len) {
                    continue;
                }
            }
            order[depth] = v as u8;
            self.dfs(depth + 1, used | 1 << v, nr, nb, order);
        }
    }
}

/// Pattern vertex order and per-position adjacency constraints for embedding search.
struct EmbedPlan {
    n: usize,
    order: [u8; MAX_N],
    red_prev: [u16; MAX_N],
    blue_prev: [u16; MAX_N],
}

impl EmbedPlan {
    fn new(p: &Layers) -> Self {
        let n = p.n;
        let mut order = [0u8; MAX_N];
        let mut placed = 0u16;
        for k in 0..n {
            let v = bits(full_mask(n) & !placed)
                .max_by_key(|&v| {
                    let nb = p.red[v] | p.blue[v];
                    ((nb & placed).count_ones(), nb.count_ones(), std::cmp::Reverse(v))
                })
                .unwrap();
            order[k] = v as u8;
            placed |= 1 << v;
        }
        let mut red_prev = [0u16; MAX_N];
        let mut blue_prev = [0u16; MAX_N];
        for k in 0..n {
            for j in 0..k {
                let (a, b) = (order[k] as usize, order[j] as usize);
                if p.is_red(a, b) {
                    red_prev[k] |= 1 << j;
                }
                if p.is_blue(a, b) {
                    blue_prev[k] |= 1 << j;
                }
            }
        }
        EmbedPlan {
            n,
            order,
            red_prev,
            blue_prev,
        }
    }

    #[inline]
    fn candidates(&self, host: &Layers, k: usize, used: u16, image: &[u8; MAX_N]) -> u16 {
        let mut cand = full_mask(host.n) & !used;
        for j in bits(self.red_prev[k]) {
            cand &= host.red[image[j] as usize];
        }
        for j in bits(self.blue_prev[k]) {
            cand &= host.blue[image[j] as usize];
        }
        cand
    }

    fn dfs<F: FnMut(&[u8; MAX_N])>(
        &self,
        host: &Layers,
        k: usize,
        used: u16,
        image: &mut [u8; MAX_N],
        visit: &mut F,
    ) {
        if k == self.n {
            visit(image);
            return;
        }
        for t in bits(self.candidates(host, k, used, image)) {
            image[k] = t as u8;
            self.dfs(host, k + 1, used | 1 << t, image, visit);
        }
    }

    fn count(&self, host: &Layers, k: usize, used: u16, image: &mut [u8; MAX_N]) -> u64 {
        if k == self.n {
            return 1;
        }
        let cand = self.candidates(host, k, used, image);
        if k + 1 == self.n {
            return cand.count_ones() as u64;
        }
        let mut total = 0;
        for t in bits(cand) {
            image[k] = t as u8;
            total += self.count(host, k + 1, used | 1 << t, image);
        }
        total
    }
}
