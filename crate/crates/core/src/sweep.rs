//! Exhaustive verification suites over all graphs of one order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::colored::{enumerate_colored_graphs, two_form, ColoredGraph};
use crate::counting::{colored_deck, deck, Mode};
use crate::covering::{kocay_check_with, CoverSequence, CoveringSystem};
use crate::error::{invalid, Error, Result};
use crate::format::{serialize_colored, serialize_graph6};
use crate::graph::{enumerate_graphs_with, enumerate_trees, Graph};
use crate::par::{self, Execution};
use crate::reconstruct::{edge_identity_check, tree_combo_oracle, PathCountPlan, Status, TreeDescentOptions, TreeDescentPlan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Kelly,
    Kocay,
    Path,
    Tree,
    Recoloring,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Kelly, Suite::Kocay, Suite::Path, Suite::Tree, Suite::Recoloring];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Kelly => "kelly",
            Suite::Kocay => "kocay",
            Suite::Path => "path",
            Suite::Tree => "tree",
            Suite::Recoloring => "lemma5",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub suite: Suite,
    pub n: usize,
    pub cases: u64,
    pub failed: u64,
    /// Arguments reproducing the first failure, in enumeration order.
    pub first_counterexample: Option<String>,
    /// Descent statuses (tree suite only).
    pub statuses: BTreeMap<String, u64>,
}

impl SweepReport {
    pub fn passed(&self) -> u64 {
        self.cases - self.failed
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failed: u64,
    first: Option<String>,
    statuses: BTreeMap<String, u64>,
}

impl Tally {
    fn check(&mut self, ok: bool, replay: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(replay());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failed += other.failed;
        if self.first.is_none() {
            self.first = other.first;
        }
        for (k, v) in other.statuses {
            *self.statuses.entry(k).or_insert(0) += v;
        }
    }
}

fn deck_replay(g: &Graph) -> String {
    format!("<(kocay deck --graph '{}' --lines)", serialize_graph6(g))
}

pub fn run(suite: Suite, n: usize, exec: Execution) -> Result<SweepReport> {
    let graphs = enumerate_graphs_with(n, exec)?;
    let tallies: Vec<Tally> = match suite {
        Suite::Kelly => {
            if n < 2 {
                return Err(Error::Precondition("the kelly suite needs n >= 2".into()));
            }
            let patterns: Vec<Graph> = (1..n)
                .map(|k| enumerate_graphs_with(k, exec))
                .collect::<Result<Vec<_>>>()?
                .concat();
            par::map(exec, &graphs, |g| {
                let mut t = Tally::default();
                let d = deck(g).expect("n >= 2");
                for h in &patterns {
                    for mode in [Mode::Subgraph, Mode::Induced] {
                        let got = d.kelly(h, mode).ok();
                        let want = crate::counting::count(g, h, mode);
                        t.check(got == Some(want), || {
                            let flag = if mode == Mode::Induced { " --induced" } else { "" };
                            format!(
                                "count --host '{}' --pattern '{}'{flag}",
                                serialize_graph6(g),
                                serialize_graph6(h)
                            )
                        });
                    }
                }
                t
            })
        }
        Suite::Kocay => {
            let small: Vec<Graph> = (1..=3.min(n))
                .map(|k| enumerate_graphs_with(k, exec))
                .collect::<Result<Vec<_>>>()?
                .concat();
            par::map(exec, &graphs, |g| {
                let mut t = Tally::default();
                for f1 in &small {
                    for f2 in &small {
                        let seq = CoverSequence::new(vec![*f1, *f2]).expect("non-empty");
                        let rep = kocay_check_with(g, &seq, Execution::Sequential);
                        t.check(rep.holds(), || {
                            format!(
                                "kocay --graph '{}' --seq '{},{}'",
                                serialize_graph6(g),
                                serialize_graph6(f1),
                                serialize_graph6(f2)
                            )
                        });
                    }
                }
                t
            })
        }
        Suite::Path => {
            let plan = PathCountPlan::new(n)?;
            let path = Graph::path(n);
            par::map(exec, &graphs, |g| {
                let mut t = Tally::default();
                let got = deck(g).and_then(|d| plan.evaluate(&d)).ok().map(|r| r.values[0].1.clone());
                let want = num_rational::BigRational::from_integer(g.count_in(&path).into());
                t.check(got == Some(want), || format!("path --deck {}", deck_replay(g)));
                t
            })
        }
        Suite::Tree => {
            let mut out = Vec::new();
            for tree in enumerate_trees(n)? {
                let plan = TreeDescentPlan::new(&tree, n, &TreeDescentOptions::default())?;
                let coeffs = plan.coefficients();
                out.extend(par::map(exec, &graphs, |g| {
                    let mut t = Tally::default();
                    let replay = || format!("tree --deck {} --tree '{}'", deck_replay(g), serialize_graph6(&tree));
                    let report = colored_deck(&two_form(g)).and_then(|d| plan.evaluate(&d));
                    let Ok(rep) = report else {
                        t.check(false, replay);
                        return t;
                    };
                    let (x, y) = tree_combo_oracle(g, &tree).expect("tree");
                    let (x, y) = (x as i64, y as i64);
                    let want = match rep.status {
                        Status::Exact => x,
                        Status::SumCombo => x + y,
                        Status::DifferenceCombo => x - y,
                        Status::ComboOnly => i64::MIN,
                    };
                    let mut ok = rep.values[0].1 == num_rational::BigRational::from_integer(want.into());
                    if rep.status == Status::Exact && rep.values.len() == 2 {
                        ok &= rep.values[1].1 == num_rational::BigRational::from_integer(y.into());
                    }
                    ok &= rep.coefficients == coeffs;
                    *t.statuses.entry(rep.status.to_string()).or_insert(0) += 1;
                    t.check(ok, replay);
                    t
                }));
            }
            out
        }
        Suite::Recoloring => {
            let patterns: Vec<ColoredGraph> = (1..=4.min(n))
                .map(enumerate_colored_graphs)
                .collect::<Result<Vec<_>>>()?
                .concat();
            par::map(exec, &graphs, |g| {
                let mut t = Tally::default();
                let gp = two_form(g);
                for h in &patterns {
                    for (e, _) in h.colored_pairs() {
                        let rep = edge_identity_check(&gp, h, e).expect("colored pair");
                        t.check(rep.holds(), || {
                            format!(
                                "identity --graph '{}' --pattern '{}' --pair {e}",
                                serialize_graph6(g),
                                serialize_colored(h)
                            )
                        });
                    }
                }
                t
            })
        }
    };
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t);
    }
    Ok(SweepReport {
        suite,
        n,
        cases: total.cases,
        failed: total.failed,
        first_counterexample: total.first,
        statuses: total.statuses,
    })
}
