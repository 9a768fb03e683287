//! 2-edge-refined graphs: every pair is red, blue, or uncolored.
//!
//! Isomorphism ("congruence") is a bijection preserving red pairs, blue pairs and
//! uncolored pairs. A plain graph maps to the complete colored graph whose red
//! pairs are its edges and blue pairs its non-edges ([`two_form`]).

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{self, Layers, MAX_N};
use crate::error::{invalid, Result};
use crate::graph::{pair_orbit, Graph, Pair, Permutation};
use crate::par::{self, Execution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// Canonical key of a colored isomorphism class: the smallest `(red, blue)` code
/// pair over all relabelings, red compared first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredCanonicalForm {
    n: u8,
    red: u64,
    blue: u64,
}

impl ColoredCanonicalForm {
    pub(crate) fn from_parts(n: usize, red: u64, blue: u64) -> Self {
        ColoredCanonicalForm { n: n as u8, red, blue }
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn codes(&self) -> (u64, u64) {
        (self.red, self.blue)
    }

    pub fn to_graph(&self) -> ColoredGraph {
        ColoredGraph {
            layers: Layers::from_code(self.order(), self.red, self.blue),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredGraph {
    pub(crate) layers: Layers,
}

impl ColoredGraph {
    /// `n` vertices, every pair uncolored.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(invalid(format!("vertex count {n} outside 1..={MAX_N}")));
        }
        Ok(ColoredGraph {
            layers: Layers::new(n),
        })
    }

    pub fn from_pairs(n: usize, red: &[(usize, usize)], blue: &[(usize, usize)]) -> Result<Self> {
        let mut g = ColoredGraph::new(n)?;
        for &(u, v) in red {
            g.add(u, v, Color::Red)?;
        }
        for &(u, v) in blue {
            g.add(u, v, Color::Blue)?;
        }
        Ok(g)
    }

    /// Every edge of `g` in `color`, all other pairs uncolored.
    pub fn monochrome(g: &Graph, color: Color) -> Self {
        let layers = match color {
            Color::Red => g.layers,
            Color::Blue => g.layers.swapped(),
        };
        ColoredGraph { layers }
    }

    pub(crate) fn from_layers(layers: Layers) -> Self {
        ColoredGraph { layers }
    }

    /// Colors an uncolored pair (idempotent for the same color).
    pub fn add(&mut self, u: usize, v: usize, color: Color) -> Result<()> {
        let n = self.order();
        if u == v {
            return Err(invalid(format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(invalid(format!("pair {u}-{v} out of range for {n} vertices")));
        }
        match (self.color(Pair::new(u, v)), color) {
            (Some(c), want) if c != want => {
                Err(invalid(format!("pair {u}-{v} is already {c}; red and blue must be disjoint")))
            }
            (_, Color::Red) => {
                self.layers.set_red(u, v);
                Ok(())
            }
            (_, Color::Blue) => {
                self.layers.set_blue(u, v);
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        self.layers.n
    }

    pub fn color(&self, pair: Pair) -> Option<Color> {
        let (u, v) = (pair.lo(), pair.hi());
        if v >= self.order() {
            None
        } else if self.layers.is_red(u, v) {
            Some(Color::Red)
        } else if self.layers.is_blue(u, v) {
            Some(Color::Blue)
        } else {
            None
        }
    }

    fn pairs_of(&self, color: Color) -> Vec<Pair> {
        let n = self.order();
        let mut out = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if self.color(Pair::new(u, v)) == Some(color) {
                    out.push(Pair::new(u, v));
                }
            }
        }
        out
    }

    pub fn red_pairs(&self) -> Vec<Pair> {
        self.pairs_of(Color::Red)
    }

    pub fn blue_pairs(&self) -> Vec<Pair> {
        self.pairs_of(Color::Blue)
    }

    /// All colored pairs, red and blue, in column order.
    pub fn colored_pairs(&self) -> Vec<(Pair, Color)> {
        let n = self.order();
        let mut out = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if let Some(c) = self.color(Pair::new(u, v)) {
                    out.push((Pair::new(u, v), c));
                }
            }
        }
        out
    }

    pub fn red_count(&self) -> usize {
        self.layers.red_count()
    }

    pub fn blue_count(&self) -> usize {
        self.layers.blue_count()
    }

    /// True when no pair is uncolored.
    pub fn is_complete(&self) -> bool {
        self.red_count() + self.blue_count() == bits::pair_count(self.order())
    }

    /// The graph formed by the red pairs.
    pub fn red_graph(&self) -> Graph {
        let mut l = self.layers;
        l.blue = [0; MAX_N];
        Graph::from_layers(l)
    }

    pub fn canonical_form(&self) -> ColoredCanonicalForm {
        let c = self.layers.canonical();
        ColoredCanonicalForm {
            n: self.order() as u8,
            red: c.red,
            blue: c.blue,
        }
    }

    pub fn is_isomorphic(&self, other: &ColoredGraph) -> bool {
        self.order() == other.order()
            && self.red_count() == other.red_count()
            && self.blue_count() == other.blue_count()
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

    pub fn pair_orbit_size(&self, pair: Pair) -> Result<usize> {
        pair.check(self.order())?;
        Ok(pair_orbit(&self.layers, pair))
    }

    pub fn permuted(&self, perm: &Permutation) -> ColoredGraph {
        assert_eq!(perm.len(), self.order());
        ColoredGraph {
            layers: self.layers.relabel(&perm.to_bytes()),
        }
    }

    pub fn swap_colors(&self) -> ColoredGraph {
        ColoredGraph {
            layers: self.layers.swapped(),
        }
    }

    /// Uncolors a colored pair. Errors if the pair is already uncolored.
    pub fn delete_pair(&self, pair: Pair) -> Result<ColoredGraph> {
        pair.check(self.order())?;
        if self.color(pair).is_none() {
            return Err(invalid(format!("pair {pair} is uncolored")));
        }
        let mut out = *self;
        out.layers.clear(pair.lo(), pair.hi());
        Ok(out)
    }

    /// Colors an uncolored pair. Errors if the pair already carries a color.
    pub fn recolor(&self, pair: Pair, color: Color) -> Result<ColoredGraph> {
        pair.check(self.order())?;
        if let Some(c) = self.color(pair) {
            return Err(invalid(format!("pair {pair} is already {c}")));
        }
        let mut out = *self;
        out.add(pair.lo(), pair.hi(), color)?;
        Ok(out)
    }

    /// Components under red-or-blue adjacency, each compacted.
    pub fn connected_components(&self) -> Vec<ColoredGraph> {
        self.layers
            .component_masks()
            .into_iter()
            .map(|m| ColoredGraph {
                layers: self.layers.restrict(m),
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.layers.component_masks().len() == 1
    }

    pub fn delete_vertex(&self, v: usize) -> Result<ColoredGraph> {
        let n = self.order();
        if n < 2 || v >= n {
            return Err(invalid(format!("cannot delete vertex {v} from {n} vertices")));
        }
        Ok(ColoredGraph {
            layers: self.layers.restrict(bits::full_mask(n) & !(1 << v)),
        })
    }
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ps: Vec<Pair>| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "ColoredGraph(n={}, R=[{}], B=[{}])",
            self.order(),
            join(self.red_pairs()),
            join(self.blue_pairs())
        )
    }
}

/// Complete colored graph: edges of `g` red, non-edges blue.
pub fn two_form(g: &Graph) -> ColoredGraph {
    let mut layers = g.layers;
    let c = g.complement();
    layers.blue = c.layers.red;
    ColoredGraph { layers }
}

/// One representative per colored isomorphism class on `n` vertices (pairs may be
/// uncolored), sorted by canonical form.
pub fn enumerate_colored_graphs(n: usize) -> Result<Vec<ColoredGraph>> {
    enumerate_colored_graphs_with(n, Execution::default())
}

pub fn enumerate_colored_graphs_with(n: usize, exec: Execution) -> Result<Vec<ColoredGraph>> {
    if n == 0 || n > MAX_N {
        return Err(invalid(format!("vertex count {n} outside 1..={MAX_N}")));
    }
    let mut level = vec![Layers::new(1)];
    for m in 2..=n {
        let parts = par::map(exec, &level, |parent| {
            let choices = 3usize.pow((m - 1) as u32);
            let mut keys = Vec::with_capacity(choices);
            for mut code in 0..choices {
                let mut g = *parent;
                g.n = m;
                for u in 0..m - 1 {
                    match code % 3 {
                        1 => g.set_red(u, m - 1),
                        2 => g.set_blue(u, m - 1),
                        _ => {}
                    }
                    code /= 3;
                }
                let c = g.canonical();
                keys.push((c.red, c.blue));
            }
            keys
        });
        let keys: BTreeSet<(u64, u64)> = parts.into_iter().flatten().collect();
        level = keys.into_iter().map(|(r, b)| Layers::from_code(m, r, b)).collect();
    }
    Ok(level.into_iter().map(ColoredGraph::from_layers).collect())
}
