//! Inputs shared by the benchmarks.

use mutclass_core::verify::dynkin_seed;
use mutclass_core::{enumerate_class, Diagram, Limits, TypeKind};

pub fn seed(kind: TypeKind, rank: usize) -> Diagram {
    dynkin_seed(kind, rank).expect("benchmark seeds use valid ranks")
}

/// Every member of the class of a seed.
pub fn members(kind: TypeKind, rank: usize) -> Vec<Diagram> {
    let class = enumerate_class(&seed(kind, rank), Limits::default()).expect("seed classes are finite");
    class.members.into_values().collect()
}
