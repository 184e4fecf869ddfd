use std::sync::Arc;

use crate::coset::Subgroup;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::transversal::Transversal;

/// A factored element: `t` is a chosen representative and `h` a subgroup
/// member, both as plain element indices of the parent group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Spectrum {
    pub t: usize,
    pub h: usize,
}

/// The two translation tables attached to a representative system:
///
/// * `gamma(g)` permutes representative positions, sending t to bar(g·t);
/// * `delta(g, t) = bar(g·t)⁻¹ · (g·t)`, which always lands in H.
///
/// Both are fully tabulated at construction (|G|·|T| entries each) and every
/// downstream product and law check reads these tables; the containment law
/// re-derives them from the defining formulas to cross-check.
#[derive(Debug, Clone)]
pub struct Fibration {
    transversal: Arc<Transversal>,
    /// H-positions, row-major by (g, t-position).
    delta_pos: Vec<usize>,
    /// T-positions, row-major by (g, t-position).
    gamma_pos: Vec<usize>,
}

impl Fibration {
    /// Tabulates gamma and delta for every `(g, t)`. Accepts any
    /// representative system; containment of delta values in H is verified
    /// while filling the tables.
    pub fn tabulate(transversal: Arc<Transversal>) -> Result<Self> {
        let group = transversal.group().clone();
        let subgroup = transversal.subgroup().clone();
        let n = group.order();
        let reps = transversal.reps().to_vec();
        let k = reps.len();
        let mut delta_pos = vec![0usize; n * k];
        let mut gamma_pos = vec![0usize; n * k];
        for g in 0..n {
            for (i, &t) in reps.iter().enumerate() {
                let gt = group.mul(g, t);
                let rep = transversal.bar(gt);
                let fiber = group.mul(group.inv(rep), gt);
                let rep_pos = transversal.rep_position(rep).ok_or_else(|| {
                    Error::Invariant(format!("bar({gt}) = {rep} is not a representative"))
                })?;
                let fiber_pos = subgroup.position(fiber).ok_or_else(|| {
                    Error::Invariant(format!(
                        "delta({g}, {t}) = {fiber} falls outside the subgroup"
                    ))
                })?;
                gamma_pos[g * k + i] = rep_pos;
                delta_pos[g * k + i] = fiber_pos;
            }
        }
        Ok(Fibration {
            transversal,
            delta_pos,
            gamma_pos,
        })
    }

    pub fn transversal(&self) -> &Arc<Transversal> {
        &self.transversal
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        self.transversal.subgroup()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.transversal.group()
    }

    /// Number of representatives |T|.
    pub fn t_size(&self) -> usize {
        self.transversal.reps().len()
    }

    /// Subgroup order |H|.
    pub fn h_size(&self) -> usize {
        self.subgroup().order()
    }

    /// The permutation of representative positions induced by `g`.
    pub fn gamma(&self, g: usize) -> Permutation {
        let k = self.t_size();
        Permutation::from_images(self.gamma_pos[g * k..(g + 1) * k].to_vec())
            .expect("gamma row is a permutation")
    }

    /// Table read: position of bar(g·t) where t is the rep at `t_pos`.
    #[inline]
    pub fn gamma_apply(&self, g: usize, t_pos: usize) -> usize {
        self.gamma_pos[g * self.t_size() + t_pos]
    }

    /// `delta(g, t)` for a representative element `t`, as an element of H.
    pub fn delta(&self, g: usize, t: usize) -> Result<usize> {
        let t_pos = self
            .transversal
            .rep_position(t)
            .ok_or(Error::NotARepresentative(t))?;
        Ok(self.delta_by_pos(g, t_pos))
    }

    /// Table read by representative position, returning a group element.
    #[inline]
    pub fn delta_by_pos(&self, g: usize, t_pos: usize) -> usize {
        self.subgroup()
            .member_at(self.delta_pos[g * self.t_size() + t_pos])
    }

    /// Raw table read: the H-position of delta(g, t).
    #[inline]
    pub fn delta_pos_raw(&self, g: usize, t_pos: usize) -> usize {
        self.delta_pos[g * self.t_size() + t_pos]
    }

    /// Position of the identity among the representatives. For a transversal
    /// this is always position 0: the subgroup's coset has id 0 and the
    /// identity represents it.
    pub fn identity_rep_position(&self) -> Option<usize> {
        self.transversal.rep_position(self.group().identity())
    }

    /// `delta(g, 1)`, defined only when the identity is a representative.
    pub fn delta_zero(&self, g: usize) -> Result<usize> {
        let pos = self
            .identity_rep_position()
            .ok_or(Error::RequiresTransversal)?;
        Ok(self.delta_by_pos(g, pos))
    }

    /// Factors `g` as `bar(g) · delta_zero(g)`.
    pub fn nabla(&self, g: usize) -> Result<Spectrum> {
        Ok(Spectrum {
            t: self.transversal.bar(g),
            h: self.delta_zero(g)?,
        })
    }

    /// Reassembles a factored element: `nabla_inv(⟨t, h⟩) = t·h`.
    pub fn nabla_inv(&self, s: Spectrum) -> Result<usize> {
        self.validate_spectrum(&s)?;
        Ok(self.group().mul(s.t, s.h))
    }

    fn validate_spectrum(&self, s: &Spectrum) -> Result<()> {
        if self.transversal.rep_position(s.t).is_none() {
            return Err(Error::InvalidSpectrum(format!(
                "{} is not a representative",
                s.t
            )));
        }
        if !self.subgroup().contains(s.h) {
            return Err(Error::InvalidSpectrum(format!(
                "{} is not a subgroup member",
                s.h
            )));
        }
        Ok(())
    }

    /// Pairs are enumerated t-major: `index = t_pos · |H| + h_pos`.
    #[inline]
    pub fn pair_index(&self, t_pos: usize, h_pos: usize) -> usize {
        t_pos * self.h_size() + h_pos
    }

    #[inline]
    pub fn pair_at(&self, index: usize) -> (usize, usize) {
        (index / self.h_size(), index % self.h_size())
    }

    pub fn spectrum_at(&self, index: usize) -> Spectrum {
        let (t_pos, h_pos) = self.pair_at(index);
        Spectrum {
            t: self.transversal.reps()[t_pos],
            h: self.subgroup().member_at(h_pos),
        }
    }

    pub fn spectrum_index(&self, s: &Spectrum) -> Result<usize> {
        self.validate_spectrum(s)?;
        let t_pos = self.transversal.rep_position(s.t).expect("validated");
        let h_pos = self.subgroup().position(s.h).expect("validated");
        Ok(self.pair_index(t_pos, h_pos))
    }

    /// Pair index of `nabla(g)`.
    pub fn nabla_index(&self, g: usize) -> Result<usize> {
        let s = self.nabla(g)?;
        self.spectrum_index(&s)
    }

    /// The map `t ↦ delta(g, t)` as a fiber map over this fibration.
    pub fn dual_delta(self: &Arc<Self>, g: usize) -> FiberMap {
        let k = self.t_size();
        FiberMap {
            fibration: self.clone(),
            values: self.delta_pos[g * k..(g + 1) * k].to_vec(),
        }
    }

    /// The constant-identity fiber map.
    pub fn constant_identity(self: &Arc<Self>) -> FiberMap {
        let e_pos = self
            .subgroup()
            .position(self.group().identity())
            .expect("identity is a subgroup member");
        FiberMap {
            fibration: self.clone(),
            values: vec![e_pos; self.t_size()],
        }
    }

    /// Builds a fiber map from raw H-positions (one per representative).
    pub fn fiber_map(self: &Arc<Self>, values: Vec<usize>) -> Result<FiberMap> {
        if values.len() != self.t_size() {
            return Err(Error::InvalidSpectrum(format!(
                "{} values for {} representatives",
                values.len(),
                self.t_size()
            )));
        }
        let h = self.h_size();
        for &v in &values {
            if v >= h {
                return Err(Error::IndexOutOfRange { index: v, order: h });
            }
        }
        Ok(FiberMap {
            fibration: self.clone(),
            values,
        })
    }

    /// The permutation of pairs `⟨t, h⟩ ↦ ⟨gamma(g)(t), delta(g, t)·h⟩`.
    pub fn alpha(&self, g: usize) -> Permutation {
        let group = self.group();
        let subgroup = self.subgroup();
        let (k, m) = (self.t_size(), self.h_size());
        let mut images = vec![0usize; k * m];
        for t_pos in 0..k {
            let image_t = self.gamma_apply(g, t_pos);
            let d = self.delta_by_pos(g, t_pos);
            for h_pos in 0..m {
                let h = subgroup.member_at(h_pos);
                let image_h = subgroup
                    .position(group.mul(d, h))
                    .expect("H is closed under products");
                images[self.pair_index(t_pos, h_pos)] = self.pair_index(image_t, image_h);
            }
        }
        Permutation::from_images(images).expect("alpha permutes the pairs")
    }

    /// Fault injection for the law suite: overwrites one delta entry with an
    /// arbitrary H-position, skipping validation.
    pub fn with_mutated_entry(&self, g: usize, t_pos: usize, h_pos: usize) -> Fibration {
        let mut f = self.clone();
        f.delta_pos[g * self.t_size() + t_pos] = h_pos;
        f
    }
}

/// An element of the pointwise-product group H^T: one subgroup member per
/// representative position, stored as H-positions.
#[derive(Debug, Clone)]
pub struct FiberMap {
    fibration: Arc<Fibration>,
    values: Vec<usize>,
}

impl FiberMap {
    pub fn fibration(&self) -> &Arc<Fibration> {
        &self.fibration
    }

    /// Raw H-positions, indexed by representative position.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The value at a representative position, as a group element.
    pub fn value(&self, t_pos: usize) -> usize {
        self.fibration.subgroup().member_at(self.values[t_pos])
    }

    /// Pointwise product in H^T. Both operands must live over the same
    /// fibration.
    pub fn mul(&self, other: &FiberMap) -> Result<FiberMap> {
        if !Arc::ptr_eq(&self.fibration, &other.fibration) {
            return Err(Error::FibrationMismatch);
        }
        let group = self.fibration.group();
        let subgroup = self.fibration.subgroup();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| {
                let prod = group.mul(subgroup.member_at(a), subgroup.member_at(b));
                subgroup.position(prod).expect("H is closed under products")
            })
            .collect();
        Ok(FiberMap {
            fibration: self.fibration.clone(),
            values,
        })
    }

    /// Pointwise inverse.
    pub fn inverse(&self) -> FiberMap {
        let group = self.fibration.group();
        let subgroup = self.fibration.subgroup();
        let values = self
            .values
            .iter()
            .map(|&a| {
                subgroup
                    .position(group.inv(subgroup.member_at(a)))
                    .expect("H is closed under inverses")
            })
            .collect();
        FiberMap {
            fibration: self.fibration.clone(),
            values,
        }
    }

    pub fn is_constant_identity(&self) -> bool {
        let e = self.fibration.group().identity();
        let e_pos = self.fibration.subgroup().position(e).expect("identity");
        self.values.iter().all(|&v| v == e_pos)
    }

    /// The pair permutation `⟨t, h⟩ ↦ ⟨t, f(t)·h⟩`: fiber maps act on the
    /// second coordinate only.
    pub fn beta(&self) -> Permutation {
        let f = &self.fibration;
        let group = f.group();
        let subgroup = f.subgroup();
        let (k, m) = (f.t_size(), f.h_size());
        let mut images = vec![0usize; k * m];
        for t_pos in 0..k {
            let v = self.value(t_pos);
            for h_pos in 0..m {
                let h = subgroup.member_at(h_pos);
                let image_h = subgroup
                    .position(group.mul(v, h))
                    .expect("H is closed under products");
                images[f.pair_index(t_pos, h_pos)] = f.pair_index(t_pos, image_h);
            }
        }
        Permutation::from_images(images).expect("beta permutes the pairs")
    }
}

impl PartialEq for FiberMap {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.fibration, &other.fibration) && self.values == other.values
    }
}

impl Eq for FiberMap {}
