//! Family identifiers and mutation types.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Core shape of a type D family: an oriented n-cycle, a square, a square with
/// one diagonal, or a fork.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DCore {
    Cycle(u32),
    Square,
    BoxSlash,
    Bot,
}

impl DCore {
    /// Every core usable on a diagram with at most `max_vertices` vertices.
    pub fn all_up_to(max_vertices: usize) -> Vec<DCore> {
        let mut out: Vec<DCore> = (3..=max_vertices.max(3) as u32).map(DCore::Cycle).collect();
        out.extend([DCore::Square, DCore::BoxSlash, DCore::Bot]);
        out
    }

    pub fn is_cycle(self) -> bool {
        matches!(self, DCore::Cycle(_))
    }
}

impl fmt::Display for DCore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DCore::Cycle(n) => write!(f, "(o,{n})"),
            DCore::Square => f.write_str("square"),
            DCore::BoxSlash => f.write_str("boxslash"),
            DCore::Bot => f.write_str("bot"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    A,
    B,
    D(DCore),
    /// A type D diagram glued to a B diagram.
    BComma(DCore),
    BSquareWedgeB,
    BSlashWedgeB,
    BSlashWedgeSquare,
    BCycleWedgeB(u32),
    BCycleWedgeFlipB(u32),
    /// Two B diagrams glued together.
    CComma,
    CWedge,
    /// Two type D diagrams glued together; the pair is stored sorted.
    DComma(DCore, DCore),
    /// Two type D cores sharing a vertex; the pair is stored sorted.
    DVee(DCore, DCore),
    DCycleWedgeSquare(u32),
    DCycleWedgeSlash(u32),
    DCycleWedgeFlipSlash(u32),
    DSquareWedgeSquare,
    DSlashWedgeSlash,
    DBoxTimes,
}

impl FamilyId {
    pub fn d_comma(a: DCore, b: DCore) -> FamilyId {
        FamilyId::DComma(a.min(b), a.max(b))
    }

    pub fn d_vee(a: DCore, b: DCore) -> FamilyId {
        FamilyId::DVee(a.min(b), a.max(b))
    }

    /// Families assembled by gluing two diagrams at a vertex; they have no host.
    pub fn is_comma(self) -> bool {
        matches!(self, FamilyId::BComma(_) | FamilyId::CComma | FamilyId::DComma(..))
    }

    pub fn kind(self) -> TypeKind {
        use FamilyId::*;
        match self {
            A => TypeKind::A,
            B => TypeKind::B,
            D(_) => TypeKind::D,
            BComma(_) | BSquareWedgeB | BSlashWedgeB | BSlashWedgeSquare | BCycleWedgeB(_) | BCycleWedgeFlipB(_) => {
                TypeKind::B1
            }
            CComma | CWedge => TypeKind::C1,
            DComma(..)
            | DVee(..)
            | DCycleWedgeSquare(_)
            | DCycleWedgeSlash(_)
            | DCycleWedgeFlipSlash(_)
            | DSquareWedgeSquare
            | DSlashWedgeSlash
            | DBoxTimes => TypeKind::D1,
        }
    }

    /// Cycle lengths carried by the family.
    pub fn params(self) -> Vec<u32> {
        use FamilyId::*;
        let core = |c: DCore| match c {
            DCore::Cycle(n) => Some(n),
            _ => None,
        };
        match self {
            D(c) | BComma(c) => core(c).into_iter().collect(),
            DComma(a, b) | DVee(a, b) => core(a).into_iter().chain(core(b)).collect(),
            BCycleWedgeB(n)
            | BCycleWedgeFlipB(n)
            | DCycleWedgeSquare(n)
            | DCycleWedgeSlash(n)
            | DCycleWedgeFlipSlash(n) => vec![n],
            _ => Vec::new(),
        }
    }

    /// Same family with parameters erased, for census tables.
    pub fn shape_name(self) -> String {
        use FamilyId::*;
        let c = |c: DCore| match c {
            DCore::Cycle(_) => "(o,n)".to_string(),
            other => other.to_string(),
        };
        match self {
            D(x) => format!("D_{}", c(x)),
            BComma(x) => format!("B_{},B", c(x)),
            DComma(a, b) => format!("D_{},{}", c(a), c(b)),
            DVee(a, b) => format!("D_{}v{}", c(a), c(b)),
            BCycleWedgeB(_) => "B_(o,n)^B".into(),
            BCycleWedgeFlipB(_) => "B_(o,n)^<>B".into(),
            DCycleWedgeSquare(_) => "D_(o,n)^square".into(),
            DCycleWedgeSlash(_) => "D_(o,n)^boxslash".into(),
            DCycleWedgeFlipSlash(_) => "D_(o,n)^<>boxslash".into(),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyId::*;
        match self {
            A => f.write_str("A"),
            B => f.write_str("B"),
            D(c) => write!(f, "D_{c}"),
            BComma(c) => write!(f, "B_{c},B"),
            BSquareWedgeB => f.write_str("B_square^B"),
            BSlashWedgeB => f.write_str("B_boxslash^B"),
            BSlashWedgeSquare => f.write_str("B_boxslash^square"),
            BCycleWedgeB(n) => write!(f, "B_(o,{n})^B"),
            BCycleWedgeFlipB(n) => write!(f, "B_(o,{n})^<>B"),
            CComma => f.write_str("C_B,B"),
            CWedge => f.write_str("C_B^B"),
            DComma(a, b) => write!(f, "D_{a},{b}"),
            DVee(a, b) => write!(f, "D_{a}v{b}"),
            DCycleWedgeSquare(n) => write!(f, "D_(o,{n})^square"),
            DCycleWedgeSlash(n) => write!(f, "D_(o,{n})^boxslash"),
            DCycleWedgeFlipSlash(n) => write!(f, "D_(o,{n})^<>boxslash"),
            DSquareWedgeSquare => f.write_str("D_square^square"),
            DSlashWedgeSlash => f.write_str("D_boxslash^boxslash"),
            DBoxTimes => f.write_str("D_boxtimes"),
        }
    }
}

/// The six (affine) Dynkin types handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeKind {
    A,
    B,
    D,
    B1,
    C1,
    D1,
}

impl TypeKind {
    pub const ALL: [TypeKind; 6] = [
        TypeKind::A,
        TypeKind::B,
        TypeKind::D,
        TypeKind::B1,
        TypeKind::C1,
        TypeKind::D1,
    ];

    pub fn is_affine(self) -> bool {
        matches!(self, TypeKind::B1 | TypeKind::C1 | TypeKind::D1)
    }

    /// Rank of the type for a diagram on `vertices` vertices.
    pub fn rank_for(self, vertices: usize) -> usize {
        if self.is_affine() {
            vertices.saturating_sub(1)
        } else {
            vertices
        }
    }

    pub fn vertices_for(self, rank: usize) -> usize {
        if self.is_affine() {
            rank + 1
        } else {
            rank
        }
    }

    /// Smallest rank for which the type is defined here.
    pub fn min_rank(self) -> usize {
        match self {
            TypeKind::A => 1,
            TypeKind::B | TypeKind::C1 => 2,
            TypeKind::B1 => 3,
            TypeKind::D | TypeKind::D1 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TypeKind::A => "A",
            TypeKind::B => "B",
            TypeKind::D => "D",
            TypeKind::B1 => "B1",
            TypeKind::C1 => "C1",
            TypeKind::D1 => "D1",
        }
    }
}

impl fmt::Display for TypeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TypeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_uppercase().replace(['(', ')', '^', '_'], "");
        match t.as_str() {
            "A" => Ok(TypeKind::A),
            "B" => Ok(TypeKind::B),
            "D" => Ok(TypeKind::D),
            "B1" => Ok(TypeKind::B1),
            "C1" => Ok(TypeKind::C1),
            "D1" => Ok(TypeKind::D1),
            _ => Err(format!("unknown type `{s}` (expected A, B, D, B1, C1 or D1)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MutationType {
    Known { kind: TypeKind, rank: usize },
    Unknown,
}

impl MutationType {
    pub fn new(kind: TypeKind, rank: usize) -> Self {
        MutationType::Known { kind, rank }
    }

    pub fn kind(self) -> Option<TypeKind> {
        match self {
            MutationType::Known { kind, .. } => Some(kind),
            MutationType::Unknown => None,
        }
    }

    pub fn rank(self) -> Option<usize> {
        match self {
            MutationType::Known { rank, .. } => Some(rank),
            MutationType::Unknown => None,
        }
    }
}

impl fmt::Display for MutationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MutationType::Known { kind, rank } => write!(f, "{kind}({rank})"),
            MutationType::Unknown => f.write_str("Unknown"),
        }
    }
}
