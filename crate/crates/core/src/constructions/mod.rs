//! Constructions on Lie algebras with geometric structures.

pub mod extension;
pub mod modification;
pub mod vaisman;

pub use extension::{
    delta_sum, flat_kahler, kahler_direct_sum, kahler_pair, kahler_quotient, quantize,
    trivial_extension, CentralExtensionData,
};
pub use modification::{
    admissible_forms, compatible_derivations, modified_algebra, modify, modify_pair,
    validate_modification, ModificationMap, ModifiedPair,
};
pub use vaisman::{
    canonical_vaisman, centralize, classify_vaisman, permute_hermitian, Centralized,
    ClassificationVerdict, VaismanType,
};
