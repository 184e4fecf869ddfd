use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibration::{Fibration, Spectrum};
use crate::group::{validate_group_table, FiniteGroup};
use crate::laws::{Counterexample, LawResult};

/// The product the parent group bequeaths to factored pairs:
///
/// ```text
/// ⟨t1, h1⟩ · ⟨t2, h2⟩ = ⟨ bar(t1·h1·t2), delta(t1·h1, t2) · h2 ⟩
/// ```
///
/// The first coordinate is evaluated through the tabulated gamma
/// (gamma(t1) after gamma(h1), applied to t2's position), the second through
/// the tabulated delta. Requires a transversal.
pub fn bequeath_product(f: &Fibration, p1: &Spectrum, p2: &Spectrum) -> Result<Spectrum> {
    if !f.transversal().is_transversal() {
        return Err(Error::RequiresTransversal);
    }
    f.spectrum_index(p1)?;
    let i2 = f.spectrum_index(p2)?;
    let (t2_pos, _) = f.pair_at(i2);

    let group = f.group();
    let rep_pos = f.gamma_apply(p1.t, f.gamma_apply(p1.h, t2_pos));
    let g1 = group.mul(p1.t, p1.h);
    let fiber = group.mul(f.delta_by_pos(g1, t2_pos), p2.h);
    Ok(Spectrum {
        t: f.transversal().reps()[rep_pos],
        h: fiber,
    })
}

/// One rewriting step: both inputs factored through the transversal, the
/// product reassembled as representative · fiber · tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteTrace {
    pub g1: usize,
    pub g2: usize,
    pub t1: usize,
    pub h1: usize,
    pub t2: usize,
    pub h2: usize,
    pub rep_part: usize,
    pub fib_part: usize,
    pub h_tail: usize,
    pub result: usize,
}

/// Rewrites `g1·g2` as `bar(t1·h1·t2) · delta(t1·h1, t2) · h2`, returning
/// every intermediate. The three parts multiply back to the table product.
pub fn rewrite_product(f: &Fibration, g1: usize, g2: usize) -> Result<RewriteTrace> {
    let group = f.group().clone();
    let n = group.order();
    for g in [g1, g2] {
        if g >= n {
            return Err(Error::IndexOutOfRange { index: g, order: n });
        }
    }
    let s1 = f.nabla(g1)?;
    let s2 = f.nabla(g2)?;
    let product = bequeath_product(f, &s1, &s2)?;
    let fib_part = f.delta(group.mul(s1.t, s1.h), s2.t)?;
    Ok(RewriteTrace {
        g1,
        g2,
        t1: s1.t,
        h1: s1.h,
        t2: s2.t,
        h2: s2.h,
        rep_part: product.t,
        fib_part,
        h_tail: s2.h,
        result: group.mul(g1, g2),
    })
}

/// JSON emission schema for a diffracted group. Field order is the wire
/// order.
#[derive(Debug, Clone, Serialize)]
pub struct DiffractedEmission {
    pub order: usize,
    pub t_size: usize,
    pub h_size: usize,
    pub pairs: Vec<[usize; 2]>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

/// The group of factored pairs T▽H under the bequeath product, materialized
/// as a full table over pair indices (t-major) and re-validated with the
/// same checker as any raw table. Inverses are cross-checked against
/// `nabla(g⁻¹)`.
#[derive(Debug, Clone)]
pub struct DiffractedGroup {
    fibration: Arc<Fibration>,
    pairs: Vec<Spectrum>,
    group: FiniteGroup,
}

impl DiffractedGroup {
    pub fn build(fibration: Arc<Fibration>) -> Result<Self> {
        if !fibration.transversal().is_transversal() {
            return Err(Error::RequiresTransversal);
        }
        let parent = fibration.group().clone();
        let n = parent.order();
        let pair_count = fibration.t_size() * fibration.h_size();
        let pairs: Vec<Spectrum> = (0..pair_count).map(|i| fibration.spectrum_at(i)).collect();

        let mut table = vec![0usize; pair_count * pair_count];
        for (i, p1) in pairs.iter().enumerate() {
            for (j, p2) in pairs.iter().enumerate() {
                let prod = bequeath_product(&fibration, p1, p2)?;
                table[i * pair_count + j] = fibration.spectrum_index(&prod)?;
            }
        }

        let (inverses, _) = validate_group_table(pair_count, &table).map_err(Error::from)?;

        // The identity pair ⟨e, e⟩ must be index 0 for the table to be a
        // valid group in this crate's conventions; for a transversal both
        // positions are 0, so this is structural, but verify anyway.
        let e = parent.identity();
        let identity_index = fibration.spectrum_index(&Spectrum { t: e, h: e })?;
        if identity_index != 0 {
            return Err(Error::Invariant(format!(
                "identity pair sits at index {identity_index}"
            )));
        }

        // Cross-check inverses against factoring the parent's inverses.
        for g in 0..n {
            let idx = fibration.nabla_index(g)?;
            let inv_idx = fibration.nabla_index(parent.inv(g))?;
            if inverses[idx] != inv_idx {
                return Err(Error::Invariant(format!(
                    "inverse of pair {idx} disagrees with nabla({g}⁻¹)"
                )));
            }
        }

        let labels: Vec<String> = pairs
            .iter()
            .map(|s| format!("<{},{}>", parent.label(s.t), parent.label(s.h)))
            .collect();
        let group = FiniteGroup::from_raw_parts(
            format!("diffracted({})", parent.name()),
            pair_count,
            table,
            inverses,
            Some(labels),
        );
        Ok(DiffractedGroup {
            fibration,
            pairs,
            group,
        })
    }

    pub fn fibration(&self) -> &Arc<Fibration> {
        &self.fibration
    }

    /// The factored pairs in index order (t-major).
    pub fn pairs(&self) -> &[Spectrum] {
        &self.pairs
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// The materialized table as a validated group over pair indices.
    pub fn as_group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.group.mul(i, j)
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.group.inv(i)
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn emission(&self) -> DiffractedEmission {
        let n = self.order();
        DiffractedEmission {
            order: n,
            t_size: self.fibration.t_size(),
            h_size: self.fibration.h_size(),
            pairs: self.pairs.iter().map(|s| [s.t, s.h]).collect(),
            table: (0..n).map(|i| self.group.table_row(i).to_vec()).collect(),
            identity: self.identity(),
        }
    }

    /// Verifies that `nabla` is an isomorphism onto this group: it turns the
    /// parent table into the pair table, hits every pair exactly once, and
    /// sends subgroup members h to ⟨e, h⟩ (the two embeddings of H agree).
    pub fn iso_check(&self) -> LawResult {
        const LAW: &str = "diffraction-isomorphism";
        let f = &self.fibration;
        let parent = f.group().clone();
        let n = parent.order();
        let mut checks = 0u64;

        let nabla_idx: Vec<usize> = match (0..n)
            .map(|g| f.nabla_index(g))
            .collect::<Result<Vec<usize>>>()
        {
            Ok(v) => v,
            Err(e) => {
                return LawResult::fail(
                    LAW,
                    0,
                    Counterexample::new(format!("nabla failed: {e}"), vec![], &parent),
                )
            }
        };

        for g1 in 0..n {
            for g2 in 0..n {
                checks += 1;
                let lhs = self.group.mul(nabla_idx[g1], nabla_idx[g2]);
                let rhs = nabla_idx[parent.mul(g1, g2)];
                if lhs != rhs {
                    return LawResult::fail(
                        LAW,
                        checks,
                        Counterexample::new(
                            format!(
                                "nabla({g1})·nabla({g2}) = pair {lhs} but nabla({g1}·{g2}) = pair {rhs}"
                            ),
                            vec![g1, g2],
                            &parent,
                        ),
                    );
                }
            }
        }

        let mut hit = vec![false; self.order()];
        for g in 0..n {
            checks += 1;
            if hit[nabla_idx[g]] {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        format!("pair {} is hit twice", nabla_idx[g]),
                        vec![g],
                        &parent,
                    ),
                );
            }
            hit[nabla_idx[g]] = true;
        }

        let e = parent.identity();
        for &h in f.subgroup().members() {
            checks += 1;
            let expected = f
                .spectrum_index(&Spectrum { t: e, h })
                .expect("subgroup member pair");
            if nabla_idx[h] != expected {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        format!("nabla({h}) is pair {}, expected ⟨e,{h}⟩", nabla_idx[h]),
                        vec![h],
                        &parent,
                    ),
                );
            }
        }

        LawResult::pass(LAW, checks)
    }

    /// Fault injection for the law suite: overwrites one table entry,
    /// skipping re-validation. Stored inverses may go stale; the laws
    /// recompute everything they check.
    pub fn with_mutated_entry(&self, i: usize, j: usize, value: usize) -> DiffractedGroup {
        let n = self.order();
        let mut table = self.group.raw_table().to_vec();
        table[i * n + j] = value;
        let group = FiniteGroup::from_raw_parts(
            self.group.name().to_string(),
            n,
            table,
            (0..n).map(|x| self.group.inv(x)).collect(),
            self.group.labels().map(|ls| ls.to_vec()),
        );
        DiffractedGroup {
            fibration: self.fibration.clone(),
            pairs: self.pairs.clone(),
            group,
        }
    }
}
