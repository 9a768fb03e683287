//! Covering counts `c(F, X)` and the Kocay identity over an abstract covering
//! system, instantiated for plain graphs and for 2-edge-refined graphs.
//!
//! A cover of `X` by a sequence `F = (F_1, …, F_k)` is a sequence of labeled
//! copies `G_i ≅ F_i` inside `X` whose union (vertices and, per color, pairs)
//! is exactly `X`. Summing the number of covers over all labeled unions of a
//! cartesian product of copy lists recovers the product of the copy counts;
//! grouping unions by isomorphism class gives the Kocay identity
//!
//! ```text
//! ∏ count(G, F_i) = Σ_X c(F, X) · count(G, X)
//! ```
//!
//! The deck-only sums (order-`n` sums, spanning counts of disconnected
//! patterns) are exposed as plans: the deck-independent part (which union
//! classes occur, their cover counts) is computed once, and the plan is then
//! evaluated against any number of decks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::bits::{CodeKey, Layers};
use crate::colored::{ColoredCanonicalForm, ColoredGraph};
use crate::counting::Deck;
use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};
use crate::par::{self, Execution};

/// A labeled subobject of a host: vertex set plus red and blue pair sets, as
/// bitmasks over the host's vertices and pair indices. Plain graphs only use
/// the red layer. May contain isolated vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledCopy {
    pub vertices: u16,
    pub red: u64,
    pub blue: u64,
}

impl LabeledCopy {
    #[inline]
    pub fn union(&self, other: &LabeledCopy) -> LabeledCopy {
        LabeledCopy {
            vertices: self.vertices | other.vertices,
            red: self.red | other.red,
            blue: self.blue | other.blue,
        }
    }

    pub fn is_subset_of(&self, other: &LabeledCopy) -> bool {
        self.union(other) == *other
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn pair_count(&self) -> usize {
        (self.red.count_ones() + self.blue.count_ones()) as usize
    }
}

pub(crate) mod sealed {
    use crate::bits::Layers;

    pub trait Layered {
        fn layers(&self) -> &Layers;
        fn wrap(layers: Layers) -> Self;
    }
}

/// The covering-system contract: objects with an identity component (their
/// isomorphism class), labeled copies inside a host, and a union operation on
/// copies within a common host.
///
/// Congruent objects must have equal cover counts for every sequence; both
/// implementations satisfy this because copies are enumerated through
/// isomorphism-invariant embedding search.
pub trait CoveringSystem:
    sealed::Layered
    + Copy
    + Eq
    + Hash
    + fmt::Debug
    + Send
    + Sync
{
    type Class: Copy + Ord + Hash + fmt::Debug + Send + Sync;

    /// `"plain"` or `"colored"`.
    const KIND: &'static str;

    #[doc(hidden)]
    fn class_from_key(key: CodeKey) -> Self::Class;

    #[doc(hidden)]
    fn key_of_class(class: &Self::Class) -> CodeKey;

    fn order(&self) -> usize {
        self.layers().n
    }

    /// Number of edges (plain) or colored pairs (colored).
    fn pair_total(&self) -> usize {
        self.layers().red_count() + self.layers().blue_count()
    }

    fn class(&self) -> Self::Class {
        Self::class_from_key(self.layers().canonical_key())
    }

    fn representative(class: &Self::Class) -> Self {
        let (n, r, b) = Self::key_of_class(class);
        Self::wrap(Layers::from_code(n, r, b))
    }

    /// Number of distinct copies of `pattern` in `self`: embeddings divided by
    /// the automorphism count of the pattern.
    fn count_in(&self, pattern: &Self) -> u64 {
        let emb = Layers::count_embeddings(pattern.layers(), self.layers());
        if emb == 0 {
            return 0;
        }
        emb / pattern.layers().automorphism_count()
    }

    /// All distinct labeled copies of `pattern` inside `self`, sorted.
    fn copies_in(&self, pattern: &Self) -> Vec<LabeledCopy> {
        Layers::copies(pattern.layers(), self.layers())
    }

    fn whole(&self) -> LabeledCopy {
        self.layers().whole()
    }

    /// Compacted object of a labeled subobject of `self`.
    fn extract(&self, copy: &LabeledCopy) -> Self {
        Self::wrap(Layers::extract(copy))
    }

    fn card(&self, v: usize) -> Self {
        let n = self.order();
        Self::wrap(self.layers().restrict(crate::bits::full_mask(n) & !(1 << v)))
    }

    fn induced_on(&self, mask: u16) -> Self {
        Self::wrap(self.layers().restrict(mask))
    }

    /// Components under colored adjacency, ordered by smallest vertex.
    fn components(&self) -> Vec<Self> {
        self.layers()
            .component_masks()
            .into_iter()
            .map(|m| Self::wrap(self.layers().restrict(m)))
            .collect()
    }

    fn connected(&self) -> bool {
        self.layers().component_masks().len() == 1
    }

    /// Labeled subobjects of `self` grouped by class, with multiplicities.
    fn census(&self, exec: Execution, max_vertices: usize, max_pairs: usize, spanning: bool) -> Vec<(Self::Class, u64)> {
        self.layers()
            .census(exec, max_vertices, max_pairs, spanning)
            .into_iter()
            .map(|(k, c)| (Self::class_from_key(k), c))
            .collect()
    }

    /// Every structure obtained by placing `pattern` over `self` (sharing any
    /// subset of vertices), with at most `max_order` vertices.
    fn overlays(&self, pattern: &Self, max_order: usize) -> Vec<Self> {
        self.layers()
            .overlays(pattern.layers(), max_order)
            .into_iter()
            .filter(|l| l.n <= max_order)
            .map(Self::wrap)
            .collect()
    }
}

impl sealed::Layered for Graph {
    fn layers(&self) -> &Layers {
        &self.layers
    }

    fn wrap(layers: Layers) -> Self {
        Graph::from_layers(layers)
    }
}

impl CoveringSystem for Graph {
    type Class = CanonicalForm;
    const KIND: &'static str = "plain";

    fn class_from_key((n, r, _): CodeKey) -> CanonicalForm {
        CanonicalForm::from_parts(n, r)
    }

    fn key_of_class(class: &CanonicalForm) -> CodeKey {
        (class.order(), class.code(), 0)
    }
}

impl sealed::Layered for ColoredGraph {
    fn layers(&self) -> &Layers {
        &self.layers
    }

    fn wrap(layers: Layers) -> Self {
        ColoredGraph::from_layers(layers)
    }
}

impl CoveringSystem for ColoredGraph {
    type Class = ColoredCanonicalForm;
    const KIND: &'static str = "colored";

    fn class_from_key((n, r, b): CodeKey) -> ColoredCanonicalForm {
        ColoredCanonicalForm::from_parts(n, r, b)
    }

    fn key_of_class(class: &ColoredCanonicalForm) -> CodeKey {
        let (r, b) = class.codes();
        (class.order(), r, b)
    }
}

/// A non-empty sequence `F = (F_1, …, F_k)`, each entry stored as its canonical
/// representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverSequence<S: CoveringSystem> {
    items: Vec<S>,
}

impl<S: CoveringSystem> CoverSequence<S> {
    pub fn new(items: Vec<S>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::InvalidInput("cover sequence must be non-empty".into()));
        }
        Ok(CoverSequence {
            items: items.iter().map(|s| S::representative(&s.class())).collect(),
        })
    }

    pub fn items(&self) -> &[S] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn total_order(&self) -> usize {
        self.items.iter().map(S::order).sum()
    }

    pub fn total_pairs(&self) -> usize {
        self.items.iter().map(S::pair_total).sum()
    }
}

/// All labeled copies of `f` inside `host`.
pub fn enumerate_copies<S: CoveringSystem>(host: &S, f: &S) -> Vec<LabeledCopy> {
    host.copies_in(f)
}

trait Accumulator: Clone + Zero + One + for<'a> std::ops::AddAssign<&'a Self> {
    fn into_big(self) -> BigUint;
}

impl Accumulator for u128 {
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Accumulator for BigUint {
    fn into_big(self) -> BigUint {
        self
    }
}

/// Number of sequences of copies `(G_1, …, G_k)`, `G_i ≅ F_i` inside `x`, whose
/// union is exactly `x`.
///
/// The cartesian product of copy lists is folded coordinate by coordinate,
/// grouping partial tuples by their running union; partial unions that can no
/// longer reach `x` are dropped.
pub fn cover_count<S: CoveringSystem>(seq: &CoverSequence<S>, x: &S) -> BigUint {
    let lists: Vec<Vec<LabeledCopy>> = seq.items().iter().map(|f| x.copies_in(f)).collect();
    cover_count_from_lists(&lists, x.whole())
}

pub(crate) fn cover_count_from_lists(lists: &[Vec<LabeledCopy>], target: LabeledCopy) -> BigUint {
    if lists.iter().any(Vec::is_empty) {
        return BigUint::zero();
    }
    let k = lists.len();
    let mut reach = vec![LabeledCopy::default(); k + 1];
    for i in (0..k).rev() {
        let all = lists[i].iter().fold(LabeledCopy::default(), |a, c| a.union(c));
        reach[i] = reach[i + 1].union(&all);
    }
    if reach[0] != target {
        return BigUint::zero();
    }
    let bound: BigUint = lists.iter().map(|l| BigUint::from(l.len())).product();
    if bound.to_u128().is_some() {
        fold_covers::<u128>(lists, target, &reach).into_big()
    } else {
        fold_covers::<BigUint>(lists, target, &reach)
    }
}

fn fold_covers<T: Accumulator>(lists: &[Vec<LabeledCopy>], target: LabeledCopy, reach: &[LabeledCopy]) -> T {
    let mut states: HashMap<LabeledCopy, T> = HashMap::new();
    states.insert(LabeledCopy::default(), T::one());
    for (i, list) in lists.iter().enumerate() {
        let mut next: HashMap<LabeledCopy, T> = HashMap::with_capacity(states.len() * 2);
        for (u, cnt) in &states {
            for c in list {
                let w = u.union(c);
                if w.union(&reach[i + 1]) != target {
                    continue;
                }
                *next.entry(w).or_insert_with(T::zero) += cnt;
            }
        }
        states = next;
    }
    states.remove(&target).unwrap_or_else(T::zero)
}

/// One class on the right-hand side of a Kocay identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KocayTerm<C> {
    pub class: C,
    pub cover_count: BigUint,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KocayReport<C> {
    /// `∏ count(g, F_i)`.
    pub lhs: BigUint,
    /// `Σ_X c(F, X) · count(g, X)` over classes of subobjects of `g`.
    pub rhs: BigUint,
    /// Classes with non-zero cover count, sorted by class.
    pub terms: Vec<KocayTerm<C>>,
}

impl<C> KocayReport<C> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of the Kocay identity on `g`.
///
/// The right side runs over labeled subobjects of `g` grouped by class. A union
/// of copies has at most `Σ|V(F_i)|` vertices and `Σ|E(F_i)|` pairs, so only
/// subobjects within those bounds are visited; all others have cover count 0.
pub fn kocay_check<S: CoveringSystem>(g: &S, seq: &CoverSequence<S>) -> KocayReport<S::Class> {
    kocay_check_with(g, seq, Execution::default())
}

pub fn kocay_check_with<S: CoveringSystem>(g: &S, seq: &CoverSequence<S>, exec: Execution) -> KocayReport<S::Class> {
    let lhs: BigUint = seq.items().iter().map(|f| BigUint::from(g.count_in(f))).product();
    let census = g.census(
        exec,
        seq.total_order().min(g.order()),
        seq.total_pairs(),
        false,
    );
    let covers = par::map(exec, &census, |(class, _)| cover_count(seq, &S::representative(class)));
    let mut rhs = BigUint::zero();
    let mut terms = Vec::new();
    for ((class, count), c) in census.into_iter().zip(covers) {
        if c.is_zero() {
            continue;
        }
        rhs += &c * count;
        terms.push(KocayTerm {
            class,
            cover_count: c,
            count,
        });
    }
    KocayReport { lhs, rhs, terms }
}

/// Isomorphism classes of all unions of copies of `F_1, …, F_k` with at most
/// `max_order` vertices, sorted by class. Exactly the classes `X` with
/// `c(F, X) > 0` and `|V(X)| <= max_order`.
pub fn union_classes<S: CoveringSystem>(seq: &CoverSequence<S>, max_order: usize) -> Vec<S> {
    union_classes_with(seq, max_order, Execution::default())
}

pub fn union_classes_with<S: CoveringSystem>(seq: &CoverSequence<S>, max_order: usize, exec: Execution) -> Vec<S> {
    let items = seq.items();
    if items[0].order() > max_order {
        return Vec::new();
    }
    let mut states: Vec<S> = vec![items[0]];
    for f in &items[1..] {
        let parts = par::map(exec, &states, |u| {
            u.overlays(f, max_order).iter().map(|x| x.class()).collect::<Vec<_>>()
        });
        let classes: std::collections::BTreeSet<S::Class> = parts.into_iter().flatten().collect();
        states = classes.iter().map(S::representative).collect();
    }
    let mut out: Vec<(S::Class, S)> = states.into_iter().map(|s| (s.class(), s)).collect();
    out.sort_by_key(|a| a.0);
    out.dedup_by(|a, b| a.0 == b.0);
    out.into_iter().map(|(_, s)| s).collect()
}

/// A union class together with its cover count.
#[derive(Clone, Debug)]
pub struct CoveredClass<S> {
    pub class: S,
    pub cover_count: BigUint,
}

/// Deck-independent data for the order-`n` covering sum
/// `Σ_{|V(X)| = n} c(F, X) · count(G, X)`.
#[derive(Clone, Debug)]
pub struct OrderNPlan<S: CoveringSystem> {
    n: usize,
    seq: CoverSequence<S>,
    /// Covered classes on fewer than `n` vertices.
    lower: Vec<CoveredClass<S>>,
    /// Covered classes on exactly `n` vertices.
    spanning: Vec<CoveredClass<S>>,
}

impl<S: CoveringSystem> OrderNPlan<S> {
    /// Requires every `F_i` to have fewer than `n` vertices.
    pub fn new(seq: &CoverSequence<S>, n: usize) -> Result<Self> {
        if let Some(f) = seq.items().iter().find(|f| f.order() >= n) {
            return Err(Error::Precondition(format!(
                "sequence member on {} vertices is not smaller than the deck order {n}",
                f.order()
            )));
        }
        let classes = union_classes(seq, n);
        let covered: Vec<CoveredClass<S>> = par::map(Execution::default(), &classes, |x| CoveredClass {
            class: *x,
            cover_count: cover_count(seq, x),
        });
        let (spanning, lower): (Vec<_>, Vec<_>) = covered.into_iter().partition(|c| c.class.order() == n);
        Ok(OrderNPlan {
            n,
            seq: seq.clone(),
            lower,
            spanning,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn sequence(&self) -> &CoverSequence<S> {
        &self.seq
    }

    pub fn lower_classes(&self) -> &[CoveredClass<S>] {
        &self.lower
    }

    pub fn spanning_classes(&self) -> &[CoveredClass<S>] {
        &self.spanning
    }

    /// `∏ kelly(F_i) - Σ_{|V(X)| < n} c(F, X) · kelly(X)`, using only the deck.
    pub fn evaluate(&self, deck: &Deck<S>) -> Result<BigUint> {
        self.check_deck(deck)?;
        let mut product = BigUint::one();
        for f in self.seq.items() {
            product *= deck.kelly_count(f)?;
        }
        let mut lower = BigUint::zero();
        for c in &self.lower {
            lower += &c.cover_count * deck.kelly_count(&c.class)?;
        }
        if lower > product {
            return Err(Error::Inconsistent(format!(
                "lower-order covering sum {lower} exceeds the product {product}"
            )));
        }
        Ok(product - lower)
    }

    /// The same quantity evaluated directly on a host graph, for cross-checking.
    pub fn evaluate_direct(&self, host: &S) -> BigUint {
        direct_order_n_sum(host, &self.seq)
    }

    fn check_deck(&self, deck: &Deck<S>) -> Result<()> {
        if deck.order() != self.n {
            return Err(Error::Precondition(format!(
                "plan built for order {} applied to a deck of order {}",
                self.n,
                deck.order()
            )));
        }
        Ok(())
    }
}

/// `Σ_{|V(X)| = n} c(F, X) · count(G, X)` computed deck-only.
pub fn order_n_sum<S: CoveringSystem>(deck: &Deck<S>, seq: &CoverSequence<S>) -> Result<BigUint> {
    OrderNPlan::new(seq, deck.order())?.evaluate(deck)
}

/// Oracle: the order-`n` covering sum over spanning subobjects of `host`.
pub fn direct_order_n_sum<S: CoveringSystem>(host: &S, seq: &CoverSequence<S>) -> BigUint {
    let census = host.census(Execution::default(), host.order(), seq.total_pairs(), true);
    census
        .iter()
        .map(|(class, count)| cover_count(seq, &S::representative(class)) * *count)
        .sum()
}

/// Deck-only count of a disconnected order-`n` pattern: the order-`n` sum for the
/// sequence of its components, divided by the number of covers of the pattern
/// by those components.
#[derive(Clone, Debug)]
pub struct SpanningPlan<S: CoveringSystem> {
    target: S,
    inner: OrderNPlan<S>,
    divisor: BigUint,
}

impl<S: CoveringSystem> SpanningPlan<S> {
    pub fn new(target: &S) -> Result<Self> {
        let comps = target.components();
        if comps.len() < 2 {
            return Err(Error::Precondition(format!("{target:?} is connected")));
        }
        let seq = CoverSequence::new(comps)?;
        let inner = OrderNPlan::new(&seq, target.order())?;
        // Components of total order n can only cover an order-n union disjointly,
        // so the target is the only spanning class.
        if inner.spanning.len() != 1 || inner.spanning[0].class.class() != target.class() {
            return Err(Error::Inconsistent(format!(
                "components of {target:?} produce unexpected spanning unions"
            )));
        }
        let divisor = inner.spanning[0].cover_count.clone();
        Ok(SpanningPlan {
            target: *target,
            inner,
            divisor,
        })
    }

    pub fn target(&self) -> &S {
        &self.target
    }

    pub fn divisor(&self) -> &BigUint {
        &self.divisor
    }

    pub fn evaluate(&self, deck: &Deck<S>) -> Result<BigUint> {
        let total = self.inner.evaluate(deck)?;
        if !(&total % &self.divisor).is_zero() {
            return Err(Error::Inconsistent(format!(
                "order-n sum {total} not divisible by cover count {}",
                self.divisor
            )));
        }
        Ok(total / &self.divisor)
    }
}

/// `count(G, d')` for a disconnected pattern `d'` on `n` vertices, deck-only.
pub fn spanning_subgraph_count<S: CoveringSystem>(deck: &Deck<S>, dprime: &S) -> Result<BigUint> {
    if dprime.order() != deck.order() {
        return Err(Error::Precondition(format!(
            "pattern has {} vertices, deck order is {}",
            dprime.order(),
            deck.order()
        )));
    }
    SpanningPlan::new(dprime)?.evaluate(deck)
}

/// Deck-independent data for `Σ_{X disconnected, |V(X)| = n} c(F, X) · count(G, X)`.
#[derive(Clone, Debug)]
pub struct DisconnectedSumPlan<S: CoveringSystem> {
    n: usize,
    terms: Vec<(BigUint, SpanningPlan<S>)>,
}

impl<S: CoveringSystem> DisconnectedSumPlan<S> {
    pub fn new(seq: &CoverSequence<S>, n: usize) -> Result<Self> {
        let base = OrderNPlan::new(seq, n)?;
        Self::from_order_n(&base)
    }

    pub(crate) fn from_order_n(base: &OrderNPlan<S>) -> Result<Self> {
        let mut terms = Vec::new();
        for c in base.spanning_classes() {
            if !c.class.connected() {
                terms.push((c.cover_count.clone(), SpanningPlan::new(&c.class)?));
            }
        }
        Ok(DisconnectedSumPlan { n: base.n, terms })
    }

    pub fn terms(&self) -> &[(BigUint, SpanningPlan<S>)] {
        &self.terms
    }

    pub fn evaluate(&self, deck: &Deck<S>) -> Result<BigUint> {
        if deck.order() != self.n {
            return Err(Error::Precondition(format!(
                "plan built for order {} applied to a deck of order {}",
                self.n,
                deck.order()
            )));
        }
        let mut sum = BigUint::zero();
        for (c, plan) in &self.terms {
            sum += c * plan.evaluate(deck)?;
        }
        Ok(sum)
    }
}

/// `Σ_{X disconnected, spanning} c(F, X) · count(G, X)`, deck-only.
pub fn spanning_disconnected_sum<S: CoveringSystem>(deck: &Deck<S>, seq: &CoverSequence<S>) -> Result<BigUint> {
    DisconnectedSumPlan::new(seq, deck.order())?.evaluate(deck)
}

/// Oracle: the disconnected spanning covering sum evaluated on `host`.
pub fn direct_disconnected_sum<S: CoveringSystem>(host: &S, seq: &CoverSequence<S>) -> BigUint {
    let census = host.census(Execution::default(), host.order(), seq.total_pairs(), true);
    census
        .iter()
        .map(|(class, count)| {
            let x = S::representative(class);
            if x.connected() {
                BigUint::zero()
            } else {
                cover_count(seq, &x) * *count
            }
        })
        .sum()
}

/// Classes of labeled subobjects of `host` with multiplicities, as a map.
pub fn subobject_counts<S: CoveringSystem>(host: &S) -> BTreeMap<S::Class, u64> {
    host.census(Execution::default(), host.order(), usize::MAX, false)
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::{two_form, Color};
    use crate::counting::{colored_deck, deck};

    fn seq(items: &[Graph]) -> CoverSequence<Graph> {
        CoverSequence::new(items.to_vec()).unwrap()
    }

    fn k2() -> Graph {
        Graph::complete(2)
    }

    fn red(g: &Graph) -> ColoredGraph {
        ColoredGraph::monochrome(g, Color::Red)
    }

    fn blue(g: &Graph) -> ColoredGraph {
        ColoredGraph::monochrome(g, Color::Blue)
    }

    /// Oracle: enumerate the full cartesian product and test each union.
    fn brute_cover_count<S: CoveringSystem>(seq: &CoverSequence<S>, x: &S) -> u64 {
        let lists: Vec<Vec<LabeledCopy>> = seq.items().iter().map(|f| x.copies_in(f)).collect();
        let target = x.whole();
        let mut count = 0;
        let mut idx = vec![0usize; lists.len()];
        if lists.iter().any(Vec::is_empty) {
            return 0;
        }
        loop {
            let u = idx
                .iter()
                .enumerate()
                .fold(LabeledCopy::default(), |a, (i, &j)| a.union(&lists[i][j]));
            if u == target {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == idx.len() {
                    return count;
                }
                idx[i] += 1;
                if idx[i] < lists[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn copy_examples() {
        assert_eq!(enumerate_copies(&Graph::complete(3), &k2()).len(), 3);
        assert_eq!(enumerate_copies(&Graph::path(3), &Graph::empty(2)).len(), 3);
        let bk2 = blue(&k2());
        assert_eq!(enumerate_copies(&two_form(&Graph::path(3)), &bk2).len(), 1);
    }

    #[test]
    fn cover_examples() {
        let s = seq(&[k2(), k2()]);
        assert_eq!(cover_count(&s, &k2()), BigUint::from(1u32));
        assert_eq!(cover_count(&s, &Graph::path(3)), BigUint::from(2u32));
        let m = Graph::matching(2);
        assert_eq!(cover_count(&seq(&[m, m]), &Graph::path(5)), BigUint::from(2u32));
    }

    #[test]
    fn cover_count_matches_cartesian_product() {
        let shapes = [k2(), Graph::path(3), Graph::empty(2), Graph::matching(2), Graph::complete(3)];
        for x in crate::graph::enumerate_graphs(5).unwrap() {
            for a in &shapes {
                for b in &shapes {
                    let s = seq(&[*a, *b]);
                    assert_eq!(cover_count(&s, &x), BigUint::from(brute_cover_count(&s, &x)));
                }
            }
        }
    }

    #[test]
    fn kocay_triangle() {
        let r = kocay_check(&Graph::complete(3), &seq(&[k2(), k2()]));
        assert_eq!(r.lhs, BigUint::from(9u32));
        assert!(r.holds());
        // K_2 with c = 1 (3 copies) and P_3 with c = 2 (3 copies)
        let cs: Vec<(u64, u64)> = r
            .terms
            .iter()
            .map(|t| (t.cover_count.to_u64().unwrap(), t.count))
            .collect();
        assert_eq!(cs, vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn kocay_single_vertex() {
        for g in crate::graph::enumerate_graphs(4).unwrap() {
            let r = kocay_check(&g, &seq(&[Graph::empty(1)]));
            assert_eq!(r.lhs, BigUint::from(4u32));
            assert!(r.holds());
        }
    }

    #[test]
    fn kocay_colored_path() {
        let g = two_form(&Graph::path(3));
        let s = CoverSequence::new(vec![red(&k2()), blue(&k2())]).unwrap();
        let r = kocay_check(&g, &s);
        assert_eq!(r.lhs, BigUint::from(2u32));
        assert!(r.holds());
    }

    #[test]
    fn kocay_oversized_member() {
        let r = kocay_check(&Graph::path(3), &seq(&[Graph::path(5), k2()]));
        assert!(r.lhs.is_zero() && r.holds());
    }

    #[test]
    fn order_n_examples() {
        let d = deck(&Graph::path(3)).unwrap();
        assert_eq!(order_n_sum(&d, &seq(&[k2(), k2()])).unwrap(), BigUint::from(2u32));
        let d5 = deck(&Graph::cycle(5)).unwrap();
        assert!(order_n_sum(&d5, &seq(&[Graph::empty(1)])).unwrap().is_zero());
        assert!(matches!(
            order_n_sum(&d, &seq(&[Graph::path(3)])),
            Err(Error::Precondition(_))
        ));
        let gp = two_form(&Graph::path(4));
        let rk2 = red(&k2());
        let s = CoverSequence::new(vec![rk2, rk2, rk2]).unwrap();
        let cd = colored_deck(&gp).unwrap();
        assert_eq!(order_n_sum(&cd, &s).unwrap(), direct_order_n_sum(&gp, &s));
    }

    #[test]
    fn spanning_examples() {
        let m = Graph::matching(2);
        let c4 = deck(&Graph::cycle(4)).unwrap();
        assert_eq!(spanning_subgraph_count(&c4, &m).unwrap(), BigUint::from(2u32));
        let p4 = deck(&Graph::path(4)).unwrap();
        assert_eq!(spanning_subgraph_count(&p4, &m).unwrap(), BigUint::from(1u32));
        let k3k1 = deck(&Graph::complete(3).disjoint_union(&Graph::empty(1)).unwrap()).unwrap();
        let target = k2().disjoint_union(&Graph::empty(2)).unwrap();
        assert_eq!(spanning_subgraph_count(&k3k1, &target).unwrap(), BigUint::from(3u32));
        assert!(matches!(
            spanning_subgraph_count(&c4, &Graph::path(4)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn disconnected_sum_examples() {
        let s = seq(&[k2(), k2()]);
        let c4 = deck(&Graph::cycle(4)).unwrap();
        assert_eq!(spanning_disconnected_sum(&c4, &s).unwrap(), BigUint::from(4u32));
        let p4 = deck(&Graph::path(4)).unwrap();
        assert_eq!(spanning_disconnected_sum(&p4, &s).unwrap(), BigUint::from(2u32));
        let d5 = deck(&Graph::cycle(5)).unwrap();
        assert!(spanning_disconnected_sum(&d5, &s).unwrap().is_zero());
    }

    #[test]
    fn union_classes_of_two_edges() {
        let classes = union_classes(&seq(&[k2(), k2()]), 10);
        let names: Vec<_> = classes.iter().map(|g| (g.order(), g.size())).collect();
        assert_eq!(names.len(), 3);
        assert!(names.contains(&(2, 1)) && names.contains(&(3, 2)) && names.contains(&(4, 2)));
    }

    #[test]
    fn colored_unions_skip_conflicts() {
        let s = CoverSequence::new(vec![red(&k2()), blue(&k2())]).unwrap();
        // red and blue K_2 cannot share their pair
        for x in union_classes(&s, 10) {
            assert_eq!((x.red_count(), x.blue_count()), (1, 1));
        }
    }
}
