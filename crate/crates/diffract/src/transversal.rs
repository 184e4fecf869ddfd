use std::fmt;
use std::sync::Arc;

use crate::coset::{CosetDecomposition, Subgroup};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::laws::{Counterexample, LawResult};
use crate::rng::Lcg;

/// How to pick one representative per left coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransversalStrategy {
    /// Smallest element index of each coset. Always yields a transversal.
    MinIndex,
    /// Seeded pick per coset (ascending coset id, one draw each). Unless
    /// non-transversal systems are explicitly allowed, the representative
    /// of the subgroup's own coset is forced back to the identity.
    Random(u64),
    /// Verbatim list of elements, one per coset, in any order.
    Explicit(Vec<usize>),
}

impl TransversalStrategy {
    /// Parses the command-line syntax: `min`, `random:SEED` or
    /// `list:i1,i2,...`.
    pub fn parse(s: &str) -> Result<Self> {
        if s == "min" {
            return Ok(TransversalStrategy::MinIndex);
        }
        if let Some(seed) = s.strip_prefix("random:") {
            let seed = seed
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad strategy seed `{seed}`")))?;
            return Ok(TransversalStrategy::Random(seed));
        }
        if let Some(list) = s.strip_prefix("list:") {
            let elems = list
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad list element `{p}`")))
                })
                .collect::<Result<Vec<usize>>>()?;
            return Ok(TransversalStrategy::Explicit(elems));
        }
        Err(Error::Parse(format!(
            "unknown strategy `{s}` (expected min, random:SEED or list:i1,i2,...)"
        )))
    }
}

impl fmt::Display for TransversalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransversalStrategy::MinIndex => f.write_str("min"),
            TransversalStrategy::Random(seed) => write!(f, "random:{seed}"),
            TransversalStrategy::Explicit(elems) => {
                f.write_str("list:")?;
                for (i, e) in elems.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
        }
    }
}

/// A representative system for G/H: one element per left coset, indexed by
/// coset id, with the representative map `bar` tabulated over all of G.
/// `is_transversal` records whether the identity is among the
/// representatives; several constructions downstream require that.
#[derive(Debug, Clone)]
pub struct Transversal {
    decomposition: Arc<CosetDecomposition>,
    reps: Vec<usize>,
    bar_of: Vec<usize>,
    is_transversal: bool,
    strategy: String,
}

impl Transversal {
    pub fn choose(
        decomposition: Arc<CosetDecomposition>,
        strategy: &TransversalStrategy,
        allow_non_transversal: bool,
    ) -> Result<Self> {
        let group = decomposition.group().clone();
        let k = decomposition.coset_count();
        let reps: Vec<usize> = match strategy {
            TransversalStrategy::MinIndex => {
                // Members are sorted, so the head of each coset is minimal.
                (0..k).map(|c| decomposition.coset(c)[0]).collect()
            }
            TransversalStrategy::Random(seed) => {
                let mut rng = Lcg::new(*seed);
                let mut reps: Vec<usize> = (0..k)
                    .map(|c| {
                        let coset = decomposition.coset(c);
                        coset[rng.pick(coset.len())]
                    })
                    .collect();
                if !allow_non_transversal {
                    let e = group.identity();
                    reps[decomposition.coset_of(e)] = e;
                }
                reps
            }
            TransversalStrategy::Explicit(elems) => {
                if elems.len() != k {
                    return Err(Error::NotARepresentativeSystem(format!(
                        "{} elements for {k} cosets",
                        elems.len()
                    )));
                }
                let mut reps = vec![usize::MAX; k];
                for &e in elems {
                    if e >= group.order() {
                        return Err(Error::IndexOutOfRange {
                            index: e,
                            order: group.order(),
                        });
                    }
                    let c = decomposition.coset_of(e);
                    if reps[c] != usize::MAX {
                        return Err(Error::NotARepresentativeSystem(format!(
                            "elements {} and {e} both represent coset {c}",
                            reps[c]
                        )));
                    }
                    reps[c] = e;
                }
                reps
            }
        };

        let bar_of: Vec<usize> = (0..group.order())
            .map(|g| reps[decomposition.coset_of(g)])
            .collect();
        let is_transversal = reps[decomposition.coset_of(group.identity())] == group.identity();
        if !is_transversal && !allow_non_transversal {
            // Only an explicit list can reach here; min and random both
            // place the identity.
            return Err(Error::RequiresTransversal);
        }
        Ok(Transversal {
            decomposition,
            reps,
            bar_of,
            is_transversal,
            strategy: strategy.to_string(),
        })
    }

    pub fn decomposition(&self) -> &Arc<CosetDecomposition> {
        &self.decomposition
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        self.decomposition.subgroup()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.decomposition.group()
    }

    /// Representatives indexed by coset id.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// The representative map: `bar(g)` is the chosen representative of gH.
    #[inline]
    pub fn bar(&self, g: usize) -> usize {
        self.bar_of[g]
    }

    pub fn is_transversal(&self) -> bool {
        self.is_transversal
    }

    /// Canonical description of the strategy that produced this system.
    pub fn strategy(&self) -> &str {
        &self.strategy
    }

    /// Position of `t` among the representatives (its coset id), if chosen.
    pub fn rep_position(&self, t: usize) -> Option<usize> {
        if t >= self.bar_of.len() {
            return None;
        }
        let c = self.decomposition.coset_of(t);
        (self.reps[c] == t).then_some(c)
    }

    /// Verifies the two defining identities of the representative map:
    /// bar(g) lies in gH for every g, and bar(g1·bar(g2)) = bar(g1·g2) for
    /// every pair. Runs `n + n²` checks.
    pub fn check_representative_calculus(&self) -> LawResult {
        let group = self.group();
        let n = group.order();
        let mut checks = 0u64;
        for g in 0..n {
            checks += 1;
            if self.decomposition.coset_of(self.bar(g)) != self.decomposition.coset_of(g) {
                return LawResult::fail(
                    "representative-calculus",
                    checks,
                    Counterexample::new(
                        format!("bar({g}) = {} leaves the coset of {g}", self.bar(g)),
                        vec![g, self.bar(g)],
                        group,
                    ),
                );
            }
        }
        for g1 in 0..n {
            for g2 in 0..n {
                checks += 1;
                let lhs = self.bar(group.mul(g1, self.bar(g2)));
                let rhs = self.bar(group.mul(g1, g2));
                if lhs != rhs {
                    return LawResult::fail(
                        "representative-calculus",
                        checks,
                        Counterexample::new(
                            format!(
                                "bar({g1}·bar({g2})) = {lhs} but bar({g1}·{g2}) = {rhs}"
                            ),
                            vec![g1, g2, lhs, rhs],
                            group,
                        ),
                    );
                }
            }
        }
        LawResult::pass("representative-calculus", checks)
    }

    /// Fault injection for the law suite: returns a copy whose tabulated
    /// representative for `g` is overwritten, skipping all validation.
    pub fn with_mutated_bar(&self, g: usize, value: usize) -> Transversal {
        let mut t = self.clone();
        t.bar_of[g] = value;
        t
    }
}
