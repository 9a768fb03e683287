//! Small simple graphs: canonical forms, isomorphism, automorphisms, pair orbits
//! and exhaustive enumeration by isomorphism class.
//!
//! Canonical forms are computed by an exact branch-and-bound search over all
//! relabelings, so they are only practical up to [`MAX_N`] vertices.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{self, Layers, MAX_N};
use crate::error::{invalid, Result};
use crate::par::{self, Execution};

/// Unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair(usize, usize);

impl Pair {
    /// Panics if `u == v`.
    pub fn new(u: usize, v: usize) -> Self {
        assert_ne!(u, v, "a pair needs two distinct vertices");
        if u < v {
            Pair(u, v)
        } else {
            Pair(v, u)
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub(crate) fn check(self, n: usize) -> Result<()> {
        if self.1 >= n {
            return Err(invalid(format!("pair {}-{} out of range for {} vertices", self.0, self.1, n)));
        }
        Ok(())
    }
}

impl From<(usize, usize)> for Pair {
    fn from((u, v): (usize, usize)) -> Self {
        Pair::new(u, v)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A bijection on `{0, …, n-1}`; `apply(v)` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &m in &mapping {
            if m >= n || seen[m] {
                return Err(invalid(format!("{mapping:?} is not a permutation")));
            }
            seen[m] = true;
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &m) in self.0.iter().enumerate() {
            inv[m] = i;
        }
        Permutation(inv)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub(crate) fn to_bytes(&self) -> [u8; MAX_N] {
        let mut out = [0u8; MAX_N];
        for (i, &m) in self.0.iter().enumerate() {
            out[i] = m as u8;
        }
        out
    }

    pub(crate) fn from_bytes(n: usize, b: &[u8; MAX_N]) -> Self {
        Permutation(b[..n].iter().map(|&x| x as usize).collect())
    }
}

/// Isomorphism-class key: the lexicographically smallest upper-triangle adjacency
/// string over all relabelings (pairs in column order, first pair most significant).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub(crate) fn from_parts(n: usize, code: u64) -> Self {
        CanonicalForm { n: n as u8, code }
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        Graph {
            layers: Layers::from_code(self.order(), self.code, 0),
        }
    }
}

/// Simple undirected graph on `1..=MAX_N` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    pub(crate) layers: Layers,
}

/// One connected component: its vertices in the host and the compacted subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(invalid(format!("vertex count {n} outside 1..={MAX_N}")));
        }
        Ok(Graph {
            layers: Layers::new(n),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_layers(layers: Layers) -> Self {
        debug_assert!(layers.blue[..layers.n].iter().all(|&b| b == 0));
        Graph { layers }
    }

    /// Panics unless `1 <= n <= MAX_N`.
    pub fn empty(n: usize) -> Self {
        Graph::new(n).expect("vertex count in range")
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Path on `n` vertices `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// Star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges).expect("valid star")
    }

    /// Perfect matching `kK_2` on `2k` vertices.
    pub fn matching(k: usize) -> Self {
        let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edges(2 * k, &edges).expect("valid matching")
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u == v {
            return Err(invalid(format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(invalid(format!("edge {u}-{v} out of range for {n} vertices")));
        }
        self.layers.set_red(u, v);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.layers.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.layers.red_count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.order() && v < self.order() && self.layers.is_red(u, v)
    }

    pub fn edges(&self) -> Vec<Pair> {
        let n = self.order();
        let mut out = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if self.layers.is_red(u, v) {
                    out.push(Pair(u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&u| self.layers.is_red(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.layers.red[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut layers = Layers::new(n);
        let full = bits::full_mask(n);
        for v in 0..n {
            layers.red[v] = !self.layers.red[v] & full & !(1 << v);
        }
        Graph { layers }
    }

    /// Relabels vertex `v` as `perm.apply(v)`.
    pub fn permuted(&self, perm: &Permutation) -> Graph {
        assert_eq!(perm.len(), self.order());
        Graph {
            layers: self.layers.relabel(&perm.to_bytes()),
        }
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let c = self.layers.canonical();
        CanonicalForm {
            n: self.order() as u8,
            code: c.red,
        }
    }

    /// Canonical form together with the relabeling that produces it
    /// (`perm.apply(v)` is the canonical label of `v`).
    pub fn canonical_labeling(&self) -> (CanonicalForm, Permutation) {
        let n = self.order();
        let c = self.layers.canonical();
        let mut perm = vec![0; n];
        for (new, &old) in c.order[..n].iter().enumerate() {
            perm[old as usize] = new;
        }
        (
            CanonicalForm {
                n: n as u8,
                code: c.red,
            },
            Permutation(perm),
        )
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && self.size() == other.size()
            && self.canonical_form() == other.canonical_form()
    }

    pub fn automorphisms(&self) -> Vec<Permutation> {
        let n = self.order();
        self.layers
            .automorphisms()
            .iter()
            .map(|p| Permutation::from_bytes(n, p))
            .collect()
    }

    /// Size of the orbit of an unordered pair (edge or non-edge) under the automorphism group.
    pub fn pair_orbit_size(&self, pair: Pair) -> Result<usize> {
        pair.check(self.order())?;
        Ok(pair_orbit(&self.layers, pair))
    }

    pub fn connected_components(&self) -> Vec<Component> {
        self.layers
            .component_masks()
            .into_iter()
            .map(|m| Component {
                vertices: (0..self.order()).filter(|&v| m >> v & 1 == 1).collect(),
                graph: Graph {
                    layers: self.layers.restrict(m),
                },
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.layers.component_masks().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    /// Subgraph induced on `vertices`, relabeled `0..k` in increasing vertex order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0u16;
        for &v in vertices {
            if v >= self.order() {
                return Err(invalid(format!("vertex {v} out of range")));
            }
            mask |= 1 << v;
        }
        if mask == 0 {
            return Err(invalid("empty vertex set"));
        }
        Ok(Graph {
            layers: self.layers.restrict(mask),
        })
    }

    /// Graph with vertex `v` deleted.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if self.order() < 2 {
            return Err(invalid("cannot delete the only vertex"));
        }
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order() + other.order();
        let mut g = Graph::new(n)?;
        g.layers.red[..self.order()].copy_from_slice(&self.layers.red[..self.order()]);
        for e in other.edges() {
            g.add_edge(e.lo() + self.order(), e.hi() + self.order())?;
        }
        Ok(g)
    }
}

pub(crate) fn pair_orbit(layers: &Layers, pair: Pair) -> usize {
    let mut images = BTreeSet::new();
    for p in layers.automorphisms() {
        images.insert(Pair::new(p[pair.0] as usize, p[pair.1] as usize));
    }
    images.len()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|e| e.to_string()).collect();
        write!(f, "Graph(n={}, [{}])", self.order(), edges.join(","))
    }
}

/// One representative per isomorphism class on `n` vertices, sorted by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_with(n, Execution::default())
}

pub fn enumerate_graphs_with(n: usize, exec: Execution) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_N {
        return Err(invalid(format!("vertex count {n} outside 1..={MAX_N}")));
    }
    let mut level: Vec<Layers> = vec![Layers::new(1)];
    for m in 2..=n {
        let parts = par::map(exec, &level, |parent| {
            let mut codes = Vec::with_capacity(1 << (m - 1));
            for nb in 0..(1u16 << (m - 1)) {
                let mut g = *parent;
                g.n = m;
                for u in 0..m - 1 {
                    if nb >> u & 1 == 1 {
                        g.set_red(u, m - 1);
                    }
                }
                codes.push(g.canonical().red);
            }
            codes
        });
        let codes: BTreeSet<u64> = parts.into_iter().flatten().collect();
        level = codes.into_iter().map(|c| Layers::from_code(m, c, 0)).collect();
    }
    Ok(level.into_iter().map(Graph::from_layers).collect())
}

/// Tree shapes on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n)?.into_iter().filter(Graph::is_tree).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs = bits::pair_count(n);
        (0..1u64 << pairs)
            .map(|mask| Graph::from_layers(Layers::from_pair_masks(n, mask, 0)))
            .collect()
    }

    /// Brute-force isomorphism over all n! bijections.
    fn brute_iso(a: &Graph, b: &Graph) -> bool {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        a.order() == b.order()
            && perms(a.order())
                .into_iter()
                .any(|p| a.permuted(&Permutation(p)) == *b)
    }

    #[test]
    fn relabeled_triangle_same_code() {
        let k3 = Graph::complete(3);
        let c = Graph::cycle(3);
        assert_eq!(k3.canonical_form(), c.canonical_form());
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(k3.permuted(&p).canonical_form(), k3.canonical_form());
    }

    #[test]
    fn path_equals_star_on_three() {
        let p3 = Graph::path(3);
        let star = Graph::star(2);
        assert_eq!(p3.canonical_form(), star.canonical_form());
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        // oracle: brute-force pairwise isomorphism over all 64 labeled graphs
        let labeled = all_labeled(4);
        let mut reps: Vec<Graph> = Vec::new();
        for g in &labeled {
            if !reps.iter().any(|r| brute_iso(r, g)) {
                reps.push(*g);
            }
        }
        assert_eq!(reps.len(), 11);
        let codes: BTreeSet<_> = reps.iter().map(|g| g.canonical_form()).collect();
        assert_eq!(codes.len(), 11);
        let all_codes: BTreeSet<_> = labeled.iter().map(|g| g.canonical_form()).collect();
        assert_eq!(all_codes.len(), 11);
    }

    #[test]
    fn iso_examples() {
        assert!(Graph::complete(3).is_isomorphic(&Graph::cycle(3)));
        assert!(!Graph::path(4).is_isomorphic(&Graph::star(3)));
    }

    #[test]
    fn iso_agrees_with_brute_force_small() {
        for n in 1..=4 {
            let labeled = all_labeled(n);
            for a in labeled.iter().step_by(3) {
                for b in &labeled {
                    assert_eq!(a.is_isomorphic(b), brute_iso(a, b), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(Graph::complete(4).automorphisms().len(), 24);
        let p3 = Graph::path(3);
        let auts = p3.automorphisms();
        assert_eq!(auts.len(), 2);
        assert!(auts.contains(&Permutation::new(vec![2, 1, 0]).unwrap()));
        assert_eq!(Graph::cycle(5).automorphisms().len(), 10);
    }

    #[test]
    fn pair_orbits() {
        assert_eq!(Graph::complete(3).pair_orbit_size(Pair::new(0, 2)).unwrap(), 3);
        assert_eq!(Graph::path(3).pair_orbit_size(Pair::new(0, 2)).unwrap(), 1);
        assert_eq!(Graph::matching(2).pair_orbit_size(Pair::new(0, 1)).unwrap(), 2);
        assert!(Graph::path(3).pair_orbit_size(Pair::new(0, 3)).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let p4 = Graph::path(4);
        assert_eq!(p4.complement().complement(), p4);
        assert!(Graph::cycle(5).complement().is_isomorphic(&Graph::cycle(5)));
    }

    #[test]
    fn components() {
        let m = Graph::matching(2).connected_components();
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|c| c.graph == Graph::complete(2)));
        assert_eq!(Graph::path(5).connected_components().len(), 1);
        let g = Graph::complete(2).disjoint_union(&Graph::empty(1)).unwrap();
        let sizes: Vec<usize> = g.connected_components().iter().map(|c| c.vertices.len()).collect();
        assert_eq!(sizes, vec![2, 1]);
    }

    #[test]
    fn max_degrees() {
        assert_eq!(Graph::star(3).max_degree(), 3);
        assert_eq!(Graph::path(6).max_degree(), 2);
        assert_eq!(Graph::empty(4).max_degree(), 0);
    }

    #[test]
    fn class_counts() {
        let expected = [1, 2, 4, 11, 34, 156, 1044];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_graphs(i + 1).unwrap().len(), e);
        }
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(MAX_N + 1).is_err());
    }

    #[test]
    fn enumeration_matches_labeled_filter() {
        for n in 1..=4 {
            let codes: BTreeSet<_> = all_labeled(n).iter().map(|g| g.canonical_form()).collect();
            let enumerated: Vec<_> = enumerate_graphs(n).unwrap().iter().map(|g| g.canonical_form()).collect();
            assert_eq!(codes.into_iter().collect::<Vec<_>>(), enumerated);
        }
    }

    #[test]
    fn tree_counts() {
        assert_eq!(enumerate_trees(5).unwrap().len(), 3);
        assert_eq!(enumerate_trees(6).unwrap().len(), 6);
    }

    #[test]
    fn construction_errors() {
        assert!(Graph::new(0).is_err());
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Permutation::new(vec![0, 0]).is_err());
    }
}
