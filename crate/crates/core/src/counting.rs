//! Subgraph counts, decks, and Kelly-style recovery of counts from a deck.
//!
//! A copy of `H` on `k` vertices inside `G` (order `n`) survives in exactly
//! `n - k` of the vertex-deleted cards, so
//! `(n - k) · count(G, H) = Σ_cards count(card, H)` for both induced and
//! non-induced counts, plain or colored.

use std::collections::BTreeMap;

use crate::bits;
use crate::colored::ColoredGraph;
use crate::covering::CoveringSystem;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Induced,
    Subgraph,
}

/// Number of vertex subsets of `g` inducing a copy of `h`.
pub fn count_induced(g: &Graph, h: &Graph) -> u64 {
    induced_count(g, h)
}

/// Number of subgraphs (vertex subset plus edge subset) of `g` isomorphic to `h`.
pub fn count_subgraph(g: &Graph, h: &Graph) -> u64 {
    g.count_in(h)
}

/// Colored copies of `hp` in `gp`: red to red, blue to blue, uncolored pairs of
/// `hp` unconstrained.
pub fn count_colored_subgraph(gp: &ColoredGraph, hp: &ColoredGraph) -> u64 {
    gp.count_in(hp)
}

/// Vertex subsets of `gp` whose induced colored structure is congruent to `hp`.
pub fn count_colored_induced(gp: &ColoredGraph, hp: &ColoredGraph) -> u64 {
    induced_count(gp, hp)
}

fn induced_count<S: CoveringSystem>(g: &S, h: &S) -> u64 {
    let (n, k) = (g.order(), h.order());
    if k > n {
        return 0;
    }
    let target = h.class();
    (1..=bits::full_mask(n))
        .filter(|m| m.count_ones() as usize == k)
        .filter(|&m| g.induced_on(m).class() == target)
        .count() as u64
}

pub fn count<S: CoveringSystem>(g: &S, h: &S, mode: Mode) -> u64 {
    match mode {
        Mode::Induced => induced_count(g, h),
        Mode::Subgraph => g.count_in(h),
    }
}

/// Multiset of canonical one-vertex-deleted cards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Deck<S: CoveringSystem> {
    order: usize,
    cards: BTreeMap<S::Class, usize>,
}

pub type ColoredDeck = Deck<ColoredGraph>;

impl<S: CoveringSystem> Deck<S> {
    /// Deck of `g`; needs at least two vertices.
    pub fn of(g: &S) -> Result<Self> {
        let n = g.order();
        if n < 2 {
            return Err(Error::InvalidInput(format!("a deck needs at least 2 vertices, got {n}")));
        }
        let mut cards = BTreeMap::new();
        for v in 0..n {
            *cards.entry(g.card(v).class()).or_insert(0) += 1;
        }
        Ok(Deck { order: n, cards })
    }

    /// Builds a deck from explicit cards; all cards must share one order `m >= 1`
    /// and there must be exactly `m + 1` of them.
    pub fn from_cards(cards: &[S]) -> Result<Self> {
        let n = cards.len();
        if n < 2 {
            return Err(Error::InvalidInput(format!("a deck needs at least 2 cards, got {n}")));
        }
        let mut map = BTreeMap::new();
        for (i, c) in cards.iter().enumerate() {
            if c.order() + 1 != n {
                return Err(Error::InvalidInput(format!(
                    "card {i} has {} vertices; a deck of {n} cards needs cards on {} vertices",
                    c.order(),
                    n - 1
                )));
            }
            *map.entry(c.class()).or_insert(0) += 1;
        }
        Ok(Deck { order: n, cards: map })
    }

    /// Order of the graph the deck belongs to (= number of cards).
    pub fn order(&self) -> usize {
        self.order
    }

    /// Distinct cards with multiplicities, sorted by class.
    pub fn cards(&self) -> impl Iterator<Item = (&S::Class, usize)> {
        self.cards.iter().map(|(c, &m)| (c, m))
    }

    /// Every card, repeated by multiplicity, as a representative.
    pub fn card_list(&self) -> Vec<S> {
        self.cards
            .iter()
            .flat_map(|(c, &m)| std::iter::repeat_n(S::representative(c), m))
            .collect()
    }

    /// Applies `f` to every card.
    pub fn map_cards(&self, f: impl Fn(&S) -> S) -> Deck<S> {
        let mut cards = BTreeMap::new();
        for (c, &m) in &self.cards {
            *cards.entry(f(&S::representative(c)).class()).or_insert(0) += m;
        }
        Deck {
            order: self.order,
            cards,
        }
    }

    /// Kelly's lemma: the count of `h` in any graph with this deck, for
    /// `|V(h)| < n`.
    pub fn kelly(&self, h: &S, mode: Mode) -> Result<u64> {
        let k = h.order();
        if k >= self.order {
            return Err(Error::Precondition(format!(
                "pattern has {k} vertices; Kelly counting needs fewer than {}",
                self.order
            )));
        }
        let mut total: u64 = 0;
        for (c, &m) in &self.cards {
            total += m as u64 * count(&S::representative(c), h, mode);
        }
        let div = (self.order - k) as u64;
        if !total.is_multiple_of(div) {
            return Err(Error::Inconsistent(format!(
                "card sum {total} for a {k}-vertex pattern not divisible by {div}"
            )));
        }
        Ok(total / div)
    }

    /// Non-induced Kelly count.
    pub fn kelly_count(&self, h: &S) -> Result<u64> {
        self.kelly(h, Mode::Subgraph)
    }
}

pub fn deck(g: &Graph) -> Result<Deck<Graph>> {
    Deck::of(g)
}

pub fn colored_deck(gp: &ColoredGraph) -> Result<ColoredDeck> {
    Deck::of(gp)
}

pub fn kelly_count_from_deck(d: &Deck<Graph>, h: &Graph, mode: Mode) -> Result<u64> {
    d.kelly(h, mode)
}

pub fn colored_kelly_count_from_deck(d: &ColoredDeck, hp: &ColoredGraph) -> Result<u64> {
    d.kelly(hp, Mode::Subgraph)
}

/// Deck of the complement, obtained card by card.
pub fn deck_of_complement(d: &Deck<Graph>) -> Deck<Graph> {
    d.map_cards(Graph::complement)
}

/// Colored deck with red and blue exchanged on every card; for the colored deck of
/// a two-form this is the colored deck of the complement's two-form.
pub fn swapped_colored_deck(d: &ColoredDeck) -> ColoredDeck {
    d.map_cards(ColoredGraph::swap_colors)
}

/// Colored deck of `two_form(G)` from the plain deck of `G`.
pub fn two_form_deck(d: &Deck<Graph>) -> ColoredDeck {
    let mut cards = BTreeMap::new();
    for (c, m) in d.cards() {
        *cards.entry(crate::colored::two_form(&c.to_graph()).class()).or_insert(0) += m;
    }
    Deck {
        order: d.order(),
        cards,
    }
}
