//! Minor testing, elastic / `N`-elastic / `N`-revealing elements, and the
//! Θ-separator "reveals" predicate.

pub mod elastic;
pub mod minors;
pub mod witness;

pub use elastic::{
    analyze, co_delete, elastic_elements, is_elastic, n_elastic_elements, n_revealing_elements, reveals,
    si_contract, ElasticityReport, ElementDetail, RemovalProfile,
};
pub use minors::{has_minor, ClassId, MinorOracle};
pub use witness::{minor_witnesses, MinorWitness, WitnessIndex};
