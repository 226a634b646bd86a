//! Mutation classes of skew-symmetrizable diagrams of Dynkin type A, B, D and
//! affine type B, C, D: mutation, canonical forms, class enumeration, family
//! recognition and the transition rules between families.

pub mod arith;
pub mod canon;
pub mod diagram;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod hosts;
pub mod io;
pub mod recognize;
pub mod verify;

pub use canon::{canonical_key, CanonicalKey};
pub use diagram::{Diagram, Edge, VertexId, VertexNames, Violation};
pub use enumerate::{are_mutation_equivalent, enumerate_class, ClassSet, Equivalence, Limits};
pub use error::{CanonError, EnumError, HostError, IoError, MutationError, VerifyError};
pub use family::{DCore, FamilyId, MutationType, TypeKind};
pub use recognize::{classify, Classification, FamilyMatch};
