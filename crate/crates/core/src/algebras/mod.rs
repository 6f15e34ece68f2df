//! Structured generator families: chains and the Heindorf condition,
//! pseudotrees and initial chain algebras, free products, and the classes
//! `I(d)` with their atom-growth bounds.

mod chain;
mod classd;
mod product;
mod pseudotree;

pub use chain::{chain_initial_segments, heindorf_check, heindorf_violation, ChainCuts};
pub use classd::{
    certify_class_d, doubling_schedule, growth_bound_report, growth_samples, sample_subsets,
    ClassDCertificate, GrowthReport, GrowthRow,
};
pub use product::{free_product, ProductFamily, MAX_PRODUCT_GROUND};
pub(crate) use product::{decode, product_size};
pub use pseudotree::{ica_bound_report, initial_chains, wellmet_closure, IcaReport, Pseudotree};
