//! Finite group products, rewritten through a subgroup.
//!
//! Pick a subgroup `H` of a finite group `G` and one representative per
//! left coset. Every element then factors uniquely as `representative ·
//! subgroup part`, and the group's multiplication table can be rebuilt
//! entirely from two small tables: how `G` permutes the representatives
//! and which subgroup element each product spills into. This crate
//! materializes that pipeline end to end:
//!
//! 1. [`FiniteGroup`]: a dense multiplication table, validated eagerly.
//! 2. [`Subgroup`] and [`CosetDecomposition`]: left cosets of `H` in `G`.
//! 3. [`Transversal`]: one representative per coset, chosen by strategy.
//! 4. [`Fibration`]: the tabulated position action and fiber map.
//! 5. [`DiffractedGroup`]: the group law rebuilt on representative/fiber
//!    pairs, together with an isomorphism check back to `G`.
//! 6. [`laws`]: an exhaustive verification suite over the whole pipeline.
//!
//! ```
//! use std::sync::Arc;
//! use diffract::{
//!     CosetDecomposition, DiffractedGroup, Fibration, FiniteGroup, Subgroup,
//!     Transversal, TransversalStrategy,
//! };
//!
//! let g = Arc::new(FiniteGroup::builtin("symmetric:3")?);
//! let h = Arc::new(Subgroup::generate(g.clone(), &[1])?);
//! let cosets = Arc::new(CosetDecomposition::left_cosets(h));
//! let t = Arc::new(Transversal::choose(
//!     cosets,
//!     &TransversalStrategy::MinIndex,
//!     false,
//! )?);
//! let fib = Arc::new(Fibration::tabulate(t)?);
//! let d = DiffractedGroup::build(fib)?;
//! assert_eq!(d.order(), g.order());
//! # Ok::<(), diffract::Error>(())
//! ```

pub mod book;
pub mod coset;
pub mod diffracted;
pub mod error;
pub mod fibration;
pub mod group;
pub mod io;
pub mod laws;
pub mod perm;
pub mod rng;
pub mod transversal;

pub use coset::{CosetDecomposition, Subgroup};
pub use diffracted::{
    bequeath_product, rewrite_product, DiffractedEmission, DiffractedGroup, RewriteTrace,
};
pub use error::{Error, GroupDefect, Result};
pub use fibration::{FiberMap, Fibration, Spectrum};
pub use group::{FiniteGroup, DEFAULT_CLOSURE_CAP};
pub use laws::{
    run_laws, Counterexample, InstanceDescriptor, LawInstance, LawReport, LawResult, LawSelection,
    LawStatus, LAW_IDS, LAW_ORDER_CAP,
};
pub use perm::Permutation;
pub use rng::Lcg;
pub use transversal::{Transversal, TransversalStrategy};
