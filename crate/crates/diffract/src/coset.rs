use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A subgroup H ≤ G, stored as the sorted list of its member indices plus a
/// positional index for O(1) membership tests. Positions into the sorted
/// member list are how fibrations refer to H-elements.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    position_of: Vec<Option<usize>>,
}

impl Subgroup {
    /// Closes a generating set inside the parent group. The empty set
    /// generates the trivial subgroup.
    pub fn generate(parent: Arc<FiniteGroup>, gens: &[usize]) -> Result<Self> {
        let n = parent.order();
        for &g in gens {
            if g >= n {
                return Err(Error::IndexOutOfRange { index: g, order: n });
            }
        }
        let mut in_set = vec![false; n];
        in_set[parent.identity()] = true;
        let mut stack: Vec<usize> = vec![parent.identity()];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                stack.push(g);
            }
        }
        let mut members: Vec<usize> = stack.clone();
        while let Some(x) = stack.pop() {
            let ix = parent.inv(x);
            if !in_set[ix] {
                in_set[ix] = true;
                members.push(ix);
                stack.push(ix);
            }
            // Closing under products against everything found so far.
            let mut found: Vec<usize> = Vec::new();
            for &y in &members {
                let p = parent.mul(x, y);
                if !in_set[p] {
                    in_set[p] = true;
                    found.push(p);
                }
                let q = parent.mul(y, x);
                if !in_set[q] {
                    in_set[q] = true;
                    found.push(q);
                }
            }
            for p in found {
                members.push(p);
                stack.push(p);
            }
        }
        members.sort_unstable();
        Self::from_members(parent, members)
    }

    /// Validates an explicit member list: identity present, closed under
    /// the product and inverses, and order dividing |G|.
    pub fn from_members(parent: Arc<FiniteGroup>, mut members: Vec<usize>) -> Result<Self> {
        let n = parent.order();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            if m >= n {
                return Err(Error::IndexOutOfRange { index: m, order: n });
            }
        }
        let mut position_of = vec![None; n];
        for (pos, &m) in members.iter().enumerate() {
            position_of[m] = Some(pos);
        }
        if position_of[parent.identity()].is_none() {
            return Err(Error::NotASubgroup("identity is missing".to_string()));
        }
        for &a in &members {
            if position_of[parent.inv(a)].is_none() {
                return Err(Error::NotASubgroup(format!(
                    "inverse of {a} is outside the set"
                )));
            }
            for &b in &members {
                let p = parent.mul(a, b);
                if position_of[p].is_none() {
                    return Err(Error::NotASubgroup(format!(
                        "{a}*{b} = {p} falls outside the set"
                    )));
                }
            }
        }
        if !n.is_multiple_of(members.len()) {
            return Err(Error::NotASubgroup(format!(
                "order {} does not divide group order {n}",
                members.len()
            )));
        }
        Ok(Subgroup {
            parent,
            members,
            position_of,
        })
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        Self::generate(parent, &[]).expect("trivial subgroup")
    }

    pub fn whole_group(parent: Arc<FiniteGroup>) -> Self {
        let all: Vec<usize> = (0..parent.order()).collect();
        Self::from_members(parent, all).expect("whole group")
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Number of left cosets, |G| / |H|.
    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, g: usize) -> bool {
        self.position_of.get(g).is_some_and(|p| p.is_some())
    }

    /// Position of `g` in the sorted member list, if it belongs to H.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.position_of.get(g).copied().flatten()
    }

    pub fn member_at(&self, pos: usize) -> usize {
        self.members[pos]
    }
}

/// The partition of G into left cosets gH. Coset ids are assigned in
/// ascending order of each coset's smallest element, so the subgroup itself
/// (the coset of the identity) is always coset 0. Members within a coset are
/// sorted ascending.
#[derive(Debug, Clone)]
pub struct CosetDecomposition {
    subgroup: Arc<Subgroup>,
    coset_of: Vec<usize>,
    cosets: Vec<Vec<usize>>,
}

impl CosetDecomposition {
    pub fn left_cosets(subgroup: Arc<Subgroup>) -> Self {
        let group = subgroup.parent().clone();
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = cosets.len();
            let mut members: Vec<usize> = subgroup
                .members()
                .iter()
                .map(|&h| group.mul(g, h))
                .collect();
            members.sort_unstable();
            for &m in &members {
                coset_of[m] = id;
            }
            cosets.push(members);
        }
        CosetDecomposition {
            subgroup,
            coset_of,
            cosets,
        }
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        &self.subgroup
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.parent()
    }

    pub fn coset_count(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub fn coset(&self, id: usize) -> &[usize] {
        &self.cosets[id]
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Re-derives the partition invariants from scratch: every element in
    /// exactly one coset, all cosets of size |H|, and membership matching
    /// the inv(g1)·g2 ∈ H criterion.
    pub fn validate(&self) -> Result<()> {
        let group = self.group().clone();
        let n = group.order();
        let h = &self.subgroup;
        let mut seen = vec![false; n];
        for (id, coset) in self.cosets.iter().enumerate() {
            if coset.len() != h.order() {
                return Err(Error::Invariant(format!(
                    "coset {id} has {} members, expected {}",
                    coset.len(),
                    h.order()
                )));
            }
            for &m in coset {
                if seen[m] || self.coset_of[m] != id {
                    return Err(Error::Invariant(format!(
                        "element {m} misassigned in coset {id}"
                    )));
                }
                seen[m] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Invariant("partition misses an element".to_string()));
        }
        for g1 in 0..n {
            for g2 in 0..n {
                let same = self.coset_of[g1] == self.coset_of[g2];
                let criterion = h.contains(group.mul(group.inv(g1), g2));
                if same != criterion {
                    return Err(Error::Invariant(format!(
                        "membership criterion fails at ({g1}, {g2})"
                    )));
                }
            }
        }
        Ok(())
    }
}
