//! Finite set families, the atoms of the Boolean subalgebras they generate,
//! Boolean independence and the Sauer–Shelah machinery.
//!
//! Ground sets are index ranges `0..N`; members are characteristic vectors.

mod atoms;
mod family;
mod independence;
mod trace;

pub use atoms::{
    atoms, in_generated_algebra, irredundancy_violation, is_irredundant, realized_trace, Atom,
    AtomPartition,
};
pub use family::{SetFamily, Signature};
pub use independence::{
    find_independent_subset, independence_number, is_independent, vc_dimension,
    IndependenceNumber,
};
pub use trace::{binomial_bound, sauer_shelah_find, TraceSet};
