//! Deck-only reconstruction pipelines: the path count `(G, P_n)` from two
//! matchings, the single-edge recoloring identity, and the blue-edge descent
//! for tree counts with the complement trick.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::colored::{Color, ColoredGraph};
use crate::counting::{swapped_colored_deck, ColoredDeck, Deck};
use crate::covering::{cover_count, union_classes, CoverSequence, CoveringSystem, SpanningPlan};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Pair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    /// Single integer values were recovered.
    Exact,
    /// Only `(G,T) + (G̅,T)` is determined.
    SumCombo,
    /// Only `(G,T) - (G̅,T)` is determined.
    DifferenceCombo,
    /// Only `a(G,T) + b(G̅,T)` is determined (complement rerun disabled).
    ComboOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::SumCombo => "sum_combo",
            Status::DifferenceCombo => "difference_combo",
            Status::ComboOnly => "combo_only",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub target: String,
    /// Named reconstructed quantities, e.g. `("(G,T)", 5)`.
    pub values: Vec<(String, BigRational)>,
    /// `(a, b)` of the relation `a(G,T) + b(G̅,T) = K`, when a descent ran.
    pub coefficients: Option<(BigRational, BigRational)>,
    /// Right-hand sides `K` (and `K'` from the swapped deck).
    pub constants: Vec<(String, BigRational)>,
    pub status: Status,
    /// Intermediate sums and divisors, in evaluation order.
    pub ledger: Vec<(String, String)>,
    /// Edge ordering used by a descent; empty otherwise.
    pub ordering: Vec<Pair>,
}

impl ReconstructionReport {
    pub fn value(&self, name: &str) -> Option<&BigRational> {
        self.values.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn rat_u(n: &BigUint) -> BigRational {
    rat(BigInt::from(n.clone()))
}

/// Both sides of the single-pair identity
/// `(G, H-e)·|orb_{H-e}(e)| = (G, H_be)·(H_be, H-e) + (G, H_re)·(H_re, H-e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIdentityReport {
    pub pair: Pair,
    pub count_minus: u64,
    pub orbit: usize,
    pub count_blue: u64,
    pub factor_blue: u64,
    pub count_red: u64,
    pub factor_red: u64,
}

impl EdgeIdentityReport {
    pub fn lhs(&self) -> u128 {
        self.count_minus as u128 * self.orbit as u128
    }

    pub fn rhs(&self) -> u128 {
        self.count_blue as u128 * self.factor_blue as u128 + self.count_red as u128 * self.factor_red as u128
    }

    pub fn holds(&self) -> bool {
        self.lhs() == self.rhs()
    }
}

/// Evaluates every count of the identity directly on `gp`. `e` must be colored in `h`.
pub fn edge_identity_check(gp: &ColoredGraph, h: &ColoredGraph, e: Pair) -> Result<EdgeIdentityReport> {
    let minus = h.delete_pair(e)?;
    let blue = minus.recolor(e, Color::Blue)?;
    let red = minus.recolor(e, Color::Red)?;
    Ok(EdgeIdentityReport {
        pair: e,
        count_minus: gp.count_in(&minus),
        orbit: minus.pair_orbit_size(e)?,
        count_blue: gp.count_in(&blue),
        factor_blue: blue.count_in(&minus),
        count_red: gp.count_in(&red),
        factor_red: red.count_in(&minus),
    })
}

enum CountRoute<S: CoveringSystem> {
    Kelly(S),
    Spanning(SpanningPlan<S>),
}

impl<S: CoveringSystem> CountRoute<S> {
    fn new(pattern: &S, n: usize) -> Result<Self> {
        if pattern.order() < n {
            Ok(CountRoute::Kelly(*pattern))
        } else {
            Ok(CountRoute::Spanning(SpanningPlan::new(pattern)?))
        }
    }

    fn label(&self) -> &'static str {
        match self {
            CountRoute::Kelly(_) => "kelly",
            CountRoute::Spanning(_) => "spanning",
        }
    }

    fn evaluate(&self, deck: &Deck<S>) -> Result<BigUint> {
        match self {
            CountRoute::Kelly(p) => Ok(BigUint::from(deck.kelly_count(p)?)),
            CountRoute::Spanning(plan) => plan.evaluate(deck),
        }
    }
}

/// Deck-independent part of the path-count reconstruction on `n > 4` vertices.
pub struct PathCountPlan {
    n: usize,
    factors: Vec<(usize, CountRoute<Graph>)>,
    lower: Vec<(BigUint, Graph)>,
    disconnected: Vec<(BigUint, SpanningPlan<Graph>)>,
    path_covers: BigUint,
}

impl PathCountPlan {
    pub fn new(n: usize) -> Result<Self> {
        if n <= 4 {
            return Err(Error::Precondition(format!("path reconstruction needs n > 4, got {n}")));
        }
        if n > crate::MAX_N {
            return Err(invalid(format!("n = {n} exceeds {}", crate::MAX_N)));
        }
        let a = n / 2;
        let b = (n - 1) / 2;
        let seq = CoverSequence::new(vec![Graph::matching(a), Graph::matching(b)])?;
        let factors = [a, b]
            .iter()
            .map(|&k| Ok((k, CountRoute::new(&Graph::matching(k), n)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut lower = Vec::new();
        let mut disconnected = Vec::new();
        let mut path_covers = None;
        let path = Graph::path(n).canonical_form();
        for x in union_classes(&seq, n) {
            let c = cover_count(&seq, &x);
            if x.order() < n {
                lower.push((c, x));
            } else if !x.is_connected() {
                disconnected.push((c, SpanningPlan::new(&x)?));
            } else if x.canonical_form() == path {
                path_covers = Some(c);
            } else {
                return Err(Error::Inconsistent(format!("unexpected connected union {x:?}")));
            }
        }
        let path_covers =
            path_covers.ok_or_else(|| Error::Inconsistent("the matchings never cover a path".into()))?;
        Ok(PathCountPlan {
            n,
            factors,
            lower,
            disconnected,
            path_covers,
        })
    }

    pub fn evaluate(&self, deck: &Deck<Graph>) -> Result<ReconstructionReport> {
        let n = self.n;
        if deck.order() != n {
            return Err(Error::Precondition(format!("plan for n = {n}, deck has {} cards", deck.order())));
        }
        let mut ledger = Vec::new();
        let mut product = BigUint::one();
        for (k, route) in &self.factors {
            let v = route.evaluate(deck)?;
            ledger.push((format!("({k}K2) via {}", route.label()), v.to_string()));
            product *= v;
        }
        ledger.push(("product".into(), product.to_string()));
        let mut lower = BigUint::zero();
        for (c, x) in &self.lower {
            lower += c * deck.kelly_count(x)?;
        }
        ledger.push((format!("lower-order sum over {} classes", self.lower.len()), lower.to_string()));
        let mut disc = BigUint::zero();
        for (c, plan) in &self.disconnected {
            disc += c * plan.evaluate(deck)?;
        }
        ledger.push((
            format!("disconnected spanning sum over {} classes", self.disconnected.len()),
            disc.to_string(),
        ));
        let taken = lower + disc;
        if taken > product {
            return Err(Error::Inconsistent(format!("subtracted sum {taken} exceeds product {product}")));
        }
        let rest = product - taken;
        ledger.push(("remainder".into(), rest.to_string()));
        ledger.push(("c(F,P_n)".into(), self.path_covers.to_string()));
        if !(&rest % &self.path_covers).is_zero() {
            return Err(Error::Inconsistent(format!(
                "remainder {rest} not divisible by {}",
                self.path_covers
            )));
        }
        let value = rest / &self.path_covers;
        Ok(ReconstructionReport {
            target: format!("(G,P_{n})"),
            values: vec![(format!("(G,P_{n})"), rat_u(&value))],
            coefficients: None,
            constants: Vec::new(),
            status: Status::Exact,
            ledger,
            ordering: Vec::new(),
        })
    }
}

/// `(G, P_n)` from the deck alone.
pub fn reconstruct_path_count(d: &Deck<Graph>, n: usize) -> Result<ReconstructionReport> {
    if d.order() != n {
        return Err(invalid(format!("n = {n} but the deck has {} cards", d.order())));
    }
    PathCountPlan::new(n)?.evaluate(d)
}

/// Stages of recoloring a red tree blue one edge at a time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlueDescentSequence {
    pub tree: Graph,
    pub ordering: Vec<Pair>,
    /// `stages[i]` has `ordering[..i]` blue and the remaining tree edges red.
    pub stages: Vec<ColoredGraph>,
}

pub fn blue_descent_sequence(t: &Graph, ordering: Option<&[Pair]>) -> Result<BlueDescentSequence> {
    if !t.is_tree() {
        return Err(invalid(format!("{t:?} is not a tree")));
    }
    let ordering = match ordering {
        Some(o) => {
            let mut given: Vec<Pair> = o.to_vec();
            given.sort();
            let mut edges = t.edges();
            edges.sort();
            if given != edges {
                return Err(invalid("ordering must list every tree edge exactly once"));
            }
            o.to_vec()
        }
        None => default_ordering(t),
    };
    let mut stage = ColoredGraph::monochrome(t, Color::Red);
    let mut stages = vec![stage];
    for &e in &ordering {
        stage = stage.delete_pair(e)?.recolor(e, Color::Blue)?;
        stages.push(stage);
    }
    Ok(BlueDescentSequence {
        tree: *t,
        ordering,
        stages,
    })
}

/// Preorder from the vertex with canonical label 0; children visited by the
/// canonical form of their subtree, then by canonical label.
fn default_ordering(t: &Graph) -> Vec<Pair> {
    let n = t.order();
    let (_, labels) = t.canonical_labeling();
    let root = (0..n).find(|&v| labels.apply(v) == 0).unwrap_or(0);
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut seen = 1u16 << root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for u in t.neighbors(v) {
            if seen >> u & 1 == 0 {
                seen |= 1 << u;
                parent[u] = v;
                order.push(u);
            }
        }
        i += 1;
    }
    let subtree = |c: usize| -> Vec<usize> {
        let mut out = vec![c];
        let mut j = 0;
        while j < out.len() {
            let v = out[j];
            out.extend((0..n).filter(|&u| parent[u] == v));
            j += 1;
        }
        out
    };
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        let mut children: Vec<usize> = (0..n).filter(|&u| parent[u] == v).collect();
        children.sort_by_key(|&c| {
            let sub = t.induced_subgraph(&subtree(c)).expect("non-empty subtree");
            (sub.canonical_form(), labels.apply(c))
        });
        // Pushed in reverse so the smallest child is expanded first.
        for &c in children.iter().rev() {
            stack.push(c);
        }
        if v != root {
            edges.push(Pair::new(parent[v], v));
        }
    }
    edges
}

#[derive(Clone, Debug, Default)]
pub struct TreeDescentOptions {
    pub ordering: Option<Vec<Pair>>,
    /// Skip the swapped-deck rerun and report only `a(G,T) + b(G̅,T) = K`.
    pub no_complement: bool,
}

struct Step {
    removed: Pair,
    orbit: usize,
    m: u64,
    m_next: u64,
    route: CountRoute<ColoredGraph>,
}

/// Deck-independent part of the descent for a tree on all `n` vertices, or the
/// direct Kelly route for a smaller tree.
pub struct TreeDescentPlan {
    n: usize,
    sequence: BlueDescentSequence,
    steps: Vec<Step>,
    no_complement: bool,
}

impl TreeDescentPlan {
    pub fn new(t: &Graph, n: usize, options: &TreeDescentOptions) -> Result<Self> {
        let sequence = blue_descent_sequence(t, options.ordering.as_deref())?;
        if t.order() > n {
            return Err(Error::Precondition(format!(
                "tree on {} vertices exceeds the deck order {n}",
                t.order()
            )));
        }
        let mut steps = Vec::new();
        if t.order() == n {
            for (i, &e) in sequence.ordering.iter().enumerate() {
                let current = &sequence.stages[i];
                let forest = current.delete_pair(e)?;
                steps.push(Step {
                    removed: e,
                    orbit: forest.pair_orbit_size(e)?,
                    m: current.count_in(&forest),
                    m_next: sequence.stages[i + 1].count_in(&forest),
                    route: CountRoute::new(&forest, n)?,
                });
            }
        }
        Ok(TreeDescentPlan {
            n,
            sequence,
            steps,
            no_complement: options.no_complement,
        })
    }

    pub fn sequence(&self) -> &BlueDescentSequence {
        &self.sequence
    }

    /// `(a, b)` with `b = 1`; `None` for trees smaller than the deck.
    pub fn coefficients(&self) -> Option<(BigRational, BigRational)> {
        if self.steps.is_empty() {
            return None;
        }
        let (_, beta) = self.chain(&vec![BigUint::zero(); self.steps.len()]);
        Some((-beta, BigRational::one()))
    }

    /// Runs the elimination with known sums `k_i`, returning `(α, β)` with
    /// `x_{n-1} = α + β x_0`.
    fn chain(&self, k: &[BigUint]) -> (BigRational, BigRational) {
        let mut alpha = BigRational::zero();
        let mut beta = BigRational::one();
        for (step, k) in self.steps.iter().zip(k) {
            let m = rat(step.m);
            let m_next = rat(step.m_next);
            alpha = (rat_u(k) - &m * &alpha) / &m_next;
            beta = -(&m * &beta) / &m_next;
        }
        (alpha, beta)
    }

    fn known_sums(&self, deck: &ColoredDeck, ledger: &mut Vec<(String, String)>, tag: &str) -> Result<Vec<BigUint>> {
        let mut out = Vec::with_capacity(self.steps.len());
        for (i, step) in self.steps.iter().enumerate() {
            let count = step.route.evaluate(deck)?;
            let k = &count * BigUint::from(step.orbit);
            ledger.push((
                format!("{tag}step {} e={} via {}", i + 1, step.removed, step.route.label()),
                format!("count={count} orbit={} k={k} m={} m'={}", step.orbit, step.m, step.m_next),
            ));
            out.push(k);
        }
        Ok(out)
    }

    /// `K` computed from direct counts in `gp`, bypassing the deck.
    pub fn direct_constant(&self, gp: &ColoredGraph) -> Option<BigRational> {
        if self.steps.is_empty() {
            return None;
        }
        let k: Vec<BigUint> = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let forest = self.sequence.stages[i].delete_pair(s.removed).expect("tree edge");
                BigUint::from(gp.count_in(&forest)) * BigUint::from(s.orbit)
            })
            .collect();
        Some(self.chain(&k).0)
    }

    pub fn evaluate(&self, deck: &ColoredDeck) -> Result<ReconstructionReport> {
        let n = self.n;
        if deck.order() != n {
            return Err(Error::Precondition(format!("plan for n = {n}, deck has {} cards", deck.order())));
        }
        if let Some((c, _)) = deck.cards().find(|(c, _)| !c.to_graph().is_complete()) {
            return Err(invalid(format!("card {:?} is not a complete coloring", c.to_graph())));
        }
        let t = &self.sequence.tree;
        let target = format!("(G,T) for T={t:?}");
        let ordering = self.sequence.ordering.clone();
        let mut ledger = Vec::new();
        if self.steps.is_empty() {
            let red = deck.kelly_count(&ColoredGraph::monochrome(t, Color::Red))?;
            let blue = deck.kelly_count(&ColoredGraph::monochrome(t, Color::Blue))?;
            ledger.push(("red tree via kelly".into(), red.to_string()));
            ledger.push(("blue tree via kelly".into(), blue.to_string()));
            return Ok(ReconstructionReport {
                target,
                values: vec![("(G,T)".into(), rat(red)), ("(Gc,T)".into(), rat(blue))],
                coefficients: None,
                constants: Vec::new(),
                status: Status::Exact,
                ledger,
                ordering,
            });
        }
        let k = self.known_sums(deck, &mut ledger, "")?;
        let (alpha, beta) = self.chain(&k);
        let a = -beta;
        let b = BigRational::one();
        ledger.push(("a".into(), a.to_string()));
        ledger.push(("b".into(), b.to_string()));
        ledger.push(("K".into(), alpha.to_string()));
        let mut report = ReconstructionReport {
            target,
            values: Vec::new(),
            coefficients: Some((a.clone(), b.clone())),
            constants: vec![("K".into(), alpha.clone())],
            status: Status::ComboOnly,
            ledger,
            ordering,
        };
        if self.no_complement {
            report.values.push(("a(G,T)+b(Gc,T)".into(), alpha));
            return Ok(report);
        }
        let swapped = swapped_colored_deck(deck);
        let k2 = self.known_sums(&swapped, &mut report.ledger, "complement ")?;
        let (alpha2, _) = self.chain(&k2);
        report.ledger.push(("K'".into(), alpha2.to_string()));
        report.constants.push(("K'".into(), alpha2.clone()));
        let integral = |v: BigRational, what: &str| -> Result<BigRational> {
            if v.is_integer() {
                Ok(v)
            } else {
                Err(Error::Inconsistent(format!("{what} = {v} is not an integer")))
            }
        };
        if a.is_zero() {
            return Err(Error::Inconsistent("elimination produced a zero coefficient".into()));
        }
        if a.abs() != b {
            // a x + b y = K, b x + a y = K'
            let det = &a * &a - &b * &b;
            let x = integral((&a * &alpha - &b * &alpha2) / &det, "(G,T)")?;
            let y = integral((&a * &alpha2 - &b * &alpha) / &det, "(Gc,T)")?;
            if x.is_negative() || y.is_negative() {
                return Err(Error::Inconsistent("negative reconstructed count".into()));
            }
            report.values = vec![("(G,T)".into(), x), ("(Gc,T)".into(), y)];
            report.status = Status::Exact;
        } else if a == b {
            if alpha != alpha2 {
                return Err(Error::Inconsistent(format!("K = {alpha} and K' = {alpha2} disagree")));
            }
            report.values = vec![("(G,T)+(Gc,T)".into(), integral(&alpha / &a, "(G,T)+(Gc,T)")?)];
            report.status = Status::SumCombo;
        } else {
            if alpha != -alpha2.clone() {
                return Err(Error::Inconsistent(format!("K = {alpha} and K' = {alpha2} are not opposite")));
            }
            report.values = vec![("(G,T)-(Gc,T)".into(), integral(&alpha / &a, "(G,T)-(Gc,T)")?)];
            report.status = Status::DifferenceCombo;
        }
        Ok(report)
    }
}

/// Descent with the default ordering and the complement rerun.
pub fn tree_descent(d: &ColoredDeck, t: &Graph) -> Result<ReconstructionReport> {
    tree_descent_with(d, t, &TreeDescentOptions::default())
}

pub fn tree_descent_with(d: &ColoredDeck, t: &Graph, options: &TreeDescentOptions) -> Result<ReconstructionReport> {
    TreeDescentPlan::new(t, d.order(), options)?.evaluate(d)
}

/// `((g,t), (g̅,t))` by direct counting.
pub fn tree_combo_oracle(g: &Graph, t: &Graph) -> Result<(u64, u64)> {
    if !t.is_tree() {
        return Err(invalid(format!("{t:?} is not a tree")));
    }
    Ok((g.count_in(t), g.complement().count_in(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::two_form;
    use crate::counting::{colored_deck, deck};
    use crate::graph::{enumerate_graphs, enumerate_trees};

    fn r(v: i64) -> BigRational {
        rat(v)
    }

    #[test]
    fn edge_identity_examples() {
        let red_k2 = ColoredGraph::monochrome(&Graph::complete(2), Color::Red);
        let e = Pair::new(0, 1);
        let rep = edge_identity_check(&two_form(&Graph::complete(3)), &red_k2, e).unwrap();
        assert_eq!((rep.lhs(), rep.rhs()), (3, 3));
        assert_eq!((rep.count_blue, rep.count_red), (0, 3));
        let rep = edge_identity_check(&two_form(&Graph::path(3)), &red_k2, e).unwrap();
        assert_eq!((rep.count_minus, rep.orbit, rep.count_red, rep.count_blue), (3, 1, 2, 1));
        assert!(rep.holds());
        let blue_p3 = ColoredGraph::monochrome(&Graph::path(3), Color::Blue);
        let rep = edge_identity_check(&two_form(&Graph::complete(4)), &blue_p3, Pair::new(0, 1)).unwrap();
        assert_eq!(rep.count_blue, 0);
        assert!(rep.holds());
        let uncolored = ColoredGraph::new(2).unwrap();
        assert!(edge_identity_check(&two_form(&Graph::complete(3)), &uncolored, e).is_err());
    }

    #[test]
    fn path_spot_values() {
        let v = |g: &Graph| {
            let rep = reconstruct_path_count(&deck(g).unwrap(), g.order()).unwrap();
            rep.value(&format!("(G,P_{})", g.order())).unwrap().clone()
        };
        assert_eq!(v(&Graph::path(5)), r(1));
        assert_eq!(v(&Graph::cycle(5)), r(5));
        assert_eq!(v(&Graph::complete(5)), r(60));
        assert_eq!(v(&Graph::complete(6)), r(360));
        assert!(matches!(
            reconstruct_path_count(&deck(&Graph::path(4)).unwrap(), 4),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn path_cover_divisor() {
        assert_eq!(PathCountPlan::new(5).unwrap().path_covers, BigUint::from(2u8));
        assert_eq!(PathCountPlan::new(6).unwrap().path_covers, BigUint::from(1u8));
    }

    #[test]
    fn path_matches_direct_count_n5() {
        let plan = PathCountPlan::new(5).unwrap();
        for g in enumerate_graphs(5).unwrap() {
            let rep = plan.evaluate(&deck(&g).unwrap()).unwrap();
            assert_eq!(rep.values[0].1, r(g.count_in(&Graph::path(5)) as i64), "{g:?}");
        }
    }

    #[test]
    fn descent_stages() {
        let s = blue_descent_sequence(&Graph::complete(2), None).unwrap();
        assert_eq!(s.stages.len(), 2);
        assert_eq!((s.stages[0].red_count(), s.stages[1].blue_count()), (1, 1));
        let s = blue_descent_sequence(&Graph::path(3), None).unwrap();
        assert_eq!(s.stages.len(), 3);
        assert_eq!((s.stages[1].red_count(), s.stages[1].blue_count()), (1, 1));
        for n in 2..=6 {
            for t in enumerate_trees(n).unwrap() {
                let s = blue_descent_sequence(&t, None).unwrap();
                let last = s.stages.last().unwrap();
                assert_eq!(*last, ColoredGraph::monochrome(&t, Color::Blue));
                // parent edges precede descendants: every prefix is connected
                for k in 1..=s.ordering.len() {
                    let pre: Vec<(usize, usize)> = s.ordering[..k].iter().map(|p| (p.lo(), p.hi())).collect();
                    let verts: u16 = pre.iter().fold(0, |m, &(u, v)| m | 1 << u | 1 << v);
                    assert_eq!(verts.count_ones() as usize, k + 1);
                }
                for g in enumerate_graphs(n).unwrap() {
                    assert_eq!(two_form(&g).count_in(last), g.complement().count_in(&t));
                }
            }
        }
        assert!(blue_descent_sequence(&Graph::cycle(4), None).is_err());
        let bad = [Pair::new(0, 1), Pair::new(0, 1)];
        assert!(blue_descent_sequence(&Graph::path(3), Some(&bad)).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(tree_combo_oracle(&Graph::cycle(5), &Graph::path(5)).unwrap(), (5, 5));
        assert_eq!(tree_combo_oracle(&Graph::complete(4), &Graph::path(4)).unwrap(), (12, 0));
        assert_eq!(tree_combo_oracle(&Graph::empty(4), &Graph::star(3)).unwrap(), (0, 4));
        assert!(tree_combo_oracle(&Graph::empty(4), &Graph::cycle(3)).is_err());
    }

    #[test]
    fn small_tree_uses_kelly() {
        let g = Graph::cycle(5);
        let rep = tree_descent(&colored_deck(&two_form(&g)).unwrap(), &Graph::complete(2)).unwrap();
        assert_eq!(rep.status, Status::Exact);
        assert_eq!(rep.value("(G,T)"), Some(&r(5)));
        assert_eq!(rep.value("(Gc,T)"), Some(&r(5)));
    }

    #[test]
    fn c5_p5_relation() {
        let rep = tree_descent(&colored_deck(&two_form(&Graph::cycle(5))).unwrap(), &Graph::path(5)).unwrap();
        let (a, b) = rep.coefficients.clone().unwrap();
        assert_eq!(&a * r(5) + &b * r(5), rep.constants[0].1);
    }

    #[test]
    fn descent_matches_oracle_n5() {
        for t in enumerate_trees(5).unwrap() {
            let plan = TreeDescentPlan::new(&t, 5, &TreeDescentOptions::default()).unwrap();
            let coeffs = plan.coefficients().unwrap();
            for g in enumerate_graphs(5).unwrap() {
                let gp = two_form(&g);
                let rep = plan.evaluate(&colored_deck(&gp).unwrap()).unwrap();
                assert_eq!(rep.coefficients.as_ref(), Some(&coeffs));
                let (x, y) = tree_combo_oracle(&g, &t).unwrap();
                let (x, y) = (r(x as i64), r(y as i64));
                let (a, b) = &coeffs;
                assert_eq!(rep.constants[0].1, a * &x + b * &y);
                assert_eq!(plan.direct_constant(&gp), Some(rep.constants[0].1.clone()));
                assert_eq!(rep.constants[1].1, plan.direct_constant(&two_form(&g.complement())).unwrap());
                match rep.status {
                    Status::Exact => assert_eq!(rep.values[0].1, x),
                    Status::SumCombo => assert_eq!(rep.values[0].1, x + y),
                    Status::DifferenceCombo => assert_eq!(rep.values[0].1, x - y),
                    Status::ComboOnly => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn combo_only_without_complement() {
        let opts = TreeDescentOptions {
            ordering: None,
            no_complement: true,
        };
        let d = colored_deck(&two_form(&Graph::path(4))).unwrap();
        let rep = tree_descent_with(&d, &Graph::star(3), &opts).unwrap();
        assert_eq!(rep.status, Status::ComboOnly);
        assert!(tree_descent(&deck_as_colored_check(), &Graph::path(3)).is_err());
    }

    fn deck_as_colored_check() -> ColoredDeck {
        let open = ColoredGraph::new(2).unwrap();
        ColoredDeck::from_cards(&[open, open, open]).unwrap()
    }
}
