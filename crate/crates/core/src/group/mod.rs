//! Finite groups over dense element indices, their subgroups, involutive
//! automorphisms and conjugacy classes.

pub mod automorphism;
pub mod catalog;
pub mod classes;
pub mod finite;
pub mod subgroup;

pub use automorphism::{automorphism_from_spec, Automorphism, ThetaSpec};
pub use catalog::{
    catalog_families, catalog_group, catalog_group_with_guard, CatalogEntry, CatalogParam,
    CatalogSpec,
};
pub use classes::{conjugacy_classes, ClassData};
pub use finite::{
    group_from_cayley, group_from_permutations, FiniteGroup, GroupId, DEFAULT_MAX_ORDER,
};
pub use subgroup::Subgroup;
