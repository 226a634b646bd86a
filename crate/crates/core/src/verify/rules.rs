//! Mutation transition tables as data.
//!
//! Each rule names a source family shape, the position of the mutated vertex
//! `k`, a conjunction of guards and the families `mu_k` may land in. Rules for
//! one source are tried in order and the first applicable rule decides.
//! Glued and vee families are evaluated in both orientations of their two
//! constituents; the unprimed constituent (`*`, parameter `n`) comes first and
//! the primed one (`*'`, parameter `m`) second.

use serde::Serialize;

use crate::hosts::Role;

/// Constituent shape pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shape {
    Cycle,
    Square,
    BoxSlash,
    Bot,
    NotCycle,
    Any,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    A,
    B,
    D(Shape),
    /// D side first.
    BComma(Shape),
    BCycleWedgeB,
    BCycleWedgeFlipB,
    BSquareWedgeB,
    BSlashWedgeB,
    BSlashWedgeSquare,
    CComma,
    CWedge,
    DComma(Shape, Shape),
    DVee(Shape, Shape),
    DCycleWedgeSquare,
    DCycleWedgeSlash,
    DCycleWedgeFlipSlash,
    DSquareWedgeSquare,
    DSlashWedgeSlash,
    DBoxTimes,
}

/// Where the mutated vertex sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum At {
    Any,
    /// Outside the family core.
    NotCore,
    /// Some unprimed `x_i`.
    X,
    XIs(u8),
    /// `x_i` with `i` not listed.
    XNot(&'static [u8]),
    /// Some unprimed `a_i`.
    A,
    AIs(u8),
    /// `a_i` with `i` not listed.
    ANot(&'static [u8]),
    /// `a_i` that is not also a bullet.
    APlain,
    APrime,
    APrimeIs(u8),
    Bullet,
    NotBullet,
    /// An end, on the first constituent, of a shortest path between the
    /// x-vertices of the two constituents.
    OmegaEnd,
    NotOmegaEnd,
    /// An inner vertex of such a shortest path.
    OmegaInner,
    OneOf(&'static [Role]),
}

/// Vertex names usable in guards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Name {
    K,
    Role(Role),
    /// The x-vertex of the second constituent closest to `k`.
    OmegaFar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cmp {
    Eq,
    Gt,
    Lt,
}

impl Cmp {
    pub fn holds<T: Ord>(self, a: T, b: T) -> bool {
        match self {
            Cmp::Eq => a == b,
            Cmp::Gt => a > b,
            Cmp::Lt => a < b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Cond {
    /// First cycle parameter.
    N(Cmp, u32),
    /// Second cycle parameter.
    M(Cmp, u32),
    Vertices(Cmp, usize),
    Width(Cmp, usize),
    Present(Role),
    Absent(Role),
    /// The `x_j` (j in 1..=3) not adjacent to `k` in the host is present.
    OppositeX(bool),
    /// The three named vertices induce a path whose middle vertex has one
    /// incoming and one outgoing edge (`true`), or a path where it does not
    /// (`false`).
    Linear([Name; 3], bool),
    /// Some neighbour `y` of `k` (outside the core if asked) makes every
    /// triple `{y, k, p}` with `p` in `with` linear or non-linear as given.
    Neighbour {
        outside_core: bool,
        with: &'static [Name],
        linear: bool,
    },
    Degree(Name, Cmp, usize),
    /// In- or out-degree equals the value.
    DegreePm(Name, usize),
    /// `k` lies in the part that carries the first constituent once the
    /// second constituent's core (shared vertices excepted) is removed.
    InFirst(bool),
}

/// Parameter expression: `n + d`, `m + d` or a constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum P {
    N(i8),
    M(i8),
    Fix(u32),
}

/// Core of a target family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Core {
    Cycle(P),
    Square,
    BoxSlash,
    Bot,
    /// Core of the first constituent.
    This,
    /// Core of the second constituent.
    Other,
    /// Core of the first constituent's part after mutating it on its own.
    Mutated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Target {
    Same,
    A,
    B,
    D(Core),
    BComma(Core),
    BCycleWedgeB(P),
    BCycleWedgeFlipB(P),
    BSquareWedgeB,
    BSlashWedgeB,
    BSlashWedgeSquare,
    CComma,
    CWedge,
    DComma(Core, Core),
    DVee(Core, Core),
    DCycleWedgeSquare(P),
    DCycleWedgeSlash(P),
    DCycleWedgeFlipSlash(P),
    DSquareWedgeSquare,
    DSlashWedgeSlash,
    DBoxTimes,
}

/// Constraint on the width of a glued successor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WidthBound {
    Any,
    Zero,
    /// `|w' - w| <= 1`.
    Near,
    /// `w <= w' <= w + 1`.
    UpByOne,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TransitionRule {
    pub id: &'static str,
    pub source: Source,
    pub at: At,
    pub guard: &'static [Cond],
    pub targets: &'static [Target],
    pub width: WidthBound,
    /// How an unclear table entry was read; empty when the entry is plain.
    pub note: &'static str,
}

const fn rule(
    id: &'static str,
    source: Source,
    at: At,
    guard: &'static [Cond],
    targets: &'static [Target],
) -> TransitionRule {
    TransitionRule {
        id,
        source,
        at,
        guard,
        targets,
        width: WidthBound::Any,
        note: "",
    }
}

impl TransitionRule {
    const fn width(mut self, width: WidthBound) -> Self {
        self.width = width;
        self
    }

    const fn note(mut self, note: &'static str) -> Self {
        self.note = note;
        self
    }
}

use Cmp::*;
use Cond::*;
use Name::{OmegaFar, K as KV};
use Role::{Bullet as Bu, A as Ar, AP as Apr, X as Xr, XP as Xpr};
use Shape::{Any as SAny, Bot as SBot, BoxSlash as SSlash, Cycle as SCyc, NotCycle as SNc, Square as SSq};
use Source as S;
use Target as T;
use WidthBound::{Near, UpByOne, Zero};

const A1: Name = Name::Role(Ar(1));
const A2: Name = Name::Role(Ar(2));
const X1: Name = Name::Role(Xr(1));
const X2: Name = Name::Role(Xr(2));
const XP2: Name = Name::Role(Xpr(2));
const AP1: Name = Name::Role(Apr(1));
const AP2: Name = Name::Role(Apr(2));
const DOT: Name = Name::Role(Bu(0));

const C3: Core = Core::Cycle(P::Fix(3));
const N_UP: Core = Core::Cycle(P::N(1));
const N_DOWN: Core = Core::Cycle(P::N(-1));
const M_UP: Core = Core::Cycle(P::M(1));
const M_DOWN: Core = Core::Cycle(P::M(-1));
const M_SAME: Core = Core::Cycle(P::M(0));

pub static RULES: &[TransitionRule] = &[
    // Finite types A and B.
    rule("a/any", S::A, At::Any, &[], &[T::A]),
    rule("b/any", S::B, At::Any, &[], &[T::B]),
    // D, cycle core.
    rule(
        "d-cycle/a/n3/opposite-x",
        S::D(SCyc),
        At::A,
        &[N(Eq, 3), OppositeX(true)],
        &[T::D(Core::Square)],
    ),
    rule(
        "d-cycle/a/n3/no-opposite-x",
        S::D(SCyc),
        At::A,
        &[N(Eq, 3), OppositeX(false)],
        &[T::D(Core::Bot)],
    ),
    rule("d-cycle/a/shrink", S::D(SCyc), At::A, &[N(Gt, 3)], &[T::D(N_DOWN)]),
    rule("d-cycle/x/grow", S::D(SCyc), At::X, &[], &[T::D(N_UP)]),
    rule("d-cycle/outside", S::D(SCyc), At::NotCore, &[], &[T::Same]),
    // D, square core.
    rule("d-square/x/large", S::D(SSq), At::X, &[Vertices(Gt, 4)], &[T::D(C3)]),
    rule("d-square/a", S::D(SSq), At::A, &[], &[T::D(Core::BoxSlash)]),
    rule(
        "d-square/x/four",
        S::D(SSq),
        At::X,
        &[Vertices(Eq, 4)],
        &[T::D(Core::BoxSlash)],
    ),
    rule("d-square/outside", S::D(SSq), At::NotCore, &[], &[T::Same]),
    // D, square with diagonal.
    rule("d-boxslash/a", S::D(SSlash), At::A, &[], &[T::D(Core::Square)]),
    rule(
        "d-boxslash/x/nonlinear-child",
        S::D(SSlash),
        At::X,
        &[Neighbour {
            outside_core: true,
            with: &[X1, X2],
            linear: false,
        }],
        &[T::D(Core::BoxSlash)],
    )
    .note("the triple {y, x1, x2} always contains k, so `with` lists both x and k is skipped"),
    rule("d-boxslash/x/else", S::D(SSlash), At::X, &[], &[T::D(Core::Bot)]),
    rule("d-boxslash/outside", S::D(SSlash), At::NotCore, &[], &[T::Same]),
    // D, fork core.
    rule(
        "d-bot/x/linear",
        S::D(SBot),
        At::X,
        &[Neighbour {
            outside_core: false,
            with: &[A1, A2],
            linear: true,
        }],
        &[T::D(Core::BoxSlash)],
    ),
    rule(
        "d-bot/x/deg3-nonlinear",
        S::D(SBot),
        At::X,
        &[
            Degree(KV, Eq, 3),
            Neighbour {
                outside_core: true,
                with: &[A1, A2],
                linear: false,
            },
        ],
        &[T::D(Core::Bot)],
    ),
    rule("d-bot/x/else", S::D(SBot), At::X, &[], &[T::D(C3)]),
    rule("d-bot/a", S::D(SBot), At::A, &[], &[T::Same])
        .note("the fork item on non-x core vertices says `mutation in x`; read as the a vertices"),
    rule("d-bot/outside", S::D(SBot), At::NotCore, &[], &[T::Same]),
    // B_{*,B}: a D diagram glued to a B diagram.
    rule(
        "bcomma/wide",
        S::BComma(SAny),
        At::Any,
        &[Width(Gt, 0)],
        &[T::BComma(Core::Mutated)],
    )
    .width(Near),
    rule(
        "bcomma/narrow/off-end",
        S::BComma(SAny),
        At::NotOmegaEnd,
        &[Width(Eq, 0)],
        &[T::BComma(Core::Mutated)],
    )
    .width(UpByOne),
    rule(
        "bcomma/end/cycle",
        S::BComma(SCyc),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::BCycleWedgeB(P::N(1))],
    ),
    rule(
        "bcomma/end/square",
        S::BComma(SSq),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::BCycleWedgeB(P::Fix(3))],
    ),
    rule(
        "bcomma/end/boxslash/nonlinear",
        S::BComma(SSlash),
        At::OmegaEnd,
        &[Width(Eq, 0), Linear([OmegaFar, X1, X2], false)],
        &[T::BSlashWedgeB],
    ),
    rule(
        "bcomma/end/boxslash/linear-deg5",
        S::BComma(SSlash),
        At::OmegaEnd,
        &[Width(Eq, 0), Linear([OmegaFar, X1, X2], true), Degree(KV, Eq, 5)],
        &[T::BComma(Core::BoxSlash)],
    )
    .width(Zero)
    .note("deg(x) read as the degree of the mutated vertex"),
    rule(
        "bcomma/end/boxslash/else",
        S::BComma(SSlash),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::BComma(Core::Bot)],
    )
    .width(Zero),
    rule(
        "bcomma/end/bot/linear",
        S::BComma(SBot),
        At::OmegaEnd,
        &[
            Width(Eq, 0),
            Linear([OmegaFar, KV, A1], true),
            Linear([OmegaFar, KV, A2], true),
        ],
        &[T::BSlashWedgeB],
    ),
    rule(
        "bcomma/end/bot/nonlinear-deg4",
        S::BComma(SBot),
        At::OmegaEnd,
        &[
            Width(Eq, 0),
            Linear([OmegaFar, KV, A1], false),
            Linear([OmegaFar, KV, A2], false),
            Degree(KV, Eq, 4),
        ],
        &[T::BComma(Core::BoxSlash)],
    )
    .width(Zero),
    rule(
        "bcomma/end/bot/nonlinear-deg3",
        S::BComma(SBot),
        At::OmegaEnd,
        &[
            Width(Eq, 0),
            Linear([OmegaFar, KV, A1], false),
            Linear([OmegaFar, KV, A2], false),
            Degree(KV, Eq, 3),
        ],
        &[T::BComma(Core::Bot)],
    )
    .width(Zero),
    rule(
        "bcomma/end/bot/else",
        S::BComma(SBot),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::BCycleWedgeB(P::Fix(3))],
    ),
    // B_{(o,n)^B} and its flipped variant.
    rule(
        "bcycle/x1/flip",
        S::BCycleWedgeB,
        At::XIs(1),
        &[],
        &[T::BCycleWedgeFlipB(P::N(0))],
    ),
    rule(
        "bcycle-flip/x1/flip",
        S::BCycleWedgeFlipB,
        At::XIs(1),
        &[],
        &[T::BCycleWedgeB(P::N(0))],
    ),
    rule(
        "bcycle/x/grow",
        S::BCycleWedgeB,
        At::X,
        &[],
        &[T::BCycleWedgeB(P::N(1))],
    ),
    rule(
        "bcycle-flip/x/grow",
        S::BCycleWedgeFlipB,
        At::X,
        &[],
        &[T::BCycleWedgeFlipB(P::N(1))],
    ),
    rule(
        "bcycle/a/shrink",
        S::BCycleWedgeB,
        At::ANot(&[1, 2]),
        &[N(Gt, 3)],
        &[T::BCycleWedgeB(P::N(-1))],
    ),
    rule(
        "bcycle-flip/a/shrink",
        S::BCycleWedgeFlipB,
        At::ANot(&[1, 2]),
        &[N(Gt, 3)],
        &[T::BCycleWedgeFlipB(P::N(-1))],
    ),
    rule(
        "bcycle/a3/n3",
        S::BCycleWedgeB,
        At::AIs(3),
        &[N(Eq, 3)],
        &[T::BSquareWedgeB],
    ),
    rule(
        "bcycle-flip/a3/n3",
        S::BCycleWedgeFlipB,
        At::AIs(3),
        &[N(Eq, 3)],
        &[T::BSlashWedgeSquare],
    ),
    rule(
        "bcycle-flip/a12",
        S::BCycleWedgeFlipB,
        At::A,
        &[],
        &[T::BCycleWedgeFlipB(P::N(0))],
    ),
    rule(
        "bcycle/a12/shrink",
        S::BCycleWedgeB,
        At::A,
        &[N(Gt, 3)],
        &[T::BComma(N_DOWN)],
    )
    .width(Zero),
    rule(
        "bcycle/a12/n3/opposite-x",
        S::BCycleWedgeB,
        At::A,
        &[N(Eq, 3), OppositeX(true)],
        &[T::BComma(Core::Square)],
    )
    .width(Zero),
    rule(
        "bcycle/a12/n3/else",
        S::BCycleWedgeB,
        At::A,
        &[N(Eq, 3)],
        &[T::BComma(Core::Bot)],
    )
    .width(Zero),
    rule("bcycle/outside", S::BCycleWedgeB, At::NotCore, &[], &[T::Same]),
    rule("bcycle-flip/outside", S::BCycleWedgeFlipB, At::NotCore, &[], &[T::Same]),
    // B_{square^B}, B_{boxslash^B}, B_{boxslash^square}.
    rule(
        "bsquare-b/x2",
        S::BSquareWedgeB,
        At::XIs(2),
        &[],
        &[T::BCycleWedgeB(P::Fix(3))],
    ),
    rule(
        "bslash-b/x2/nonlinear-child",
        S::BSlashWedgeB,
        At::XIs(2),
        &[Neighbour {
            outside_core: true,
            with: &[X1],
            linear: false,
        }],
        &[T::BComma(Core::BoxSlash)],
    )
    .width(Zero),
    rule(
        "bslash-b/x2/else",
        S::BSlashWedgeB,
        At::XIs(2),
        &[],
        &[T::BComma(Core::Bot)],
    )
    .width(Zero)
    .note("the item only names an absent y; a present y with linear triple is read as the same case"),
    rule(
        "bslash-square/x2",
        S::BSlashWedgeSquare,
        At::XIs(2),
        &[],
        &[T::BCycleWedgeFlipB(P::Fix(3))],
    ),
    rule(
        "bsquare-b/x1",
        S::BSquareWedgeB,
        At::XIs(1),
        &[],
        &[T::BSlashWedgeSquare],
    ),
    rule(
        "bslash-square/x1",
        S::BSlashWedgeSquare,
        At::XIs(1),
        &[],
        &[T::BSquareWedgeB],
    ),
    rule("bslash-b/x1", S::BSlashWedgeB, At::XIs(1), &[], &[T::BSlashWedgeB]),
    rule("bsquare-b/a", S::BSquareWedgeB, At::A, &[], &[T::BSlashWedgeB]),
    rule("bslash-b/a", S::BSlashWedgeB, At::A, &[], &[T::BSquareWedgeB]),
    rule(
        "bslash-square/a",
        S::BSlashWedgeSquare,
        At::A,
        &[],
        &[T::BSlashWedgeSquare],
    ),
    rule("bsquare-b/outside", S::BSquareWedgeB, At::NotCore, &[], &[T::Same]),
    rule("bslash-b/outside", S::BSlashWedgeB, At::NotCore, &[], &[T::Same]),
    rule(
        "bslash-square/outside",
        S::BSlashWedgeSquare,
        At::NotCore,
        &[],
        &[T::Same],
    ),
    // C_{B,B} and C_{B^B}.
    rule("ccomma/wide", S::CComma, At::Any, &[Width(Gt, 0)], &[T::CComma]).width(Near),
    rule(
        "ccomma/narrow/middle-linear",
        S::CComma,
        At::OmegaInner,
        &[Width(Eq, 0), Linear([Name::Role(Xr(0)), KV, Name::Role(Xpr(0))], true)],
        &[T::CWedge],
    ),
    rule("ccomma/narrow/else", S::CComma, At::Any, &[Width(Eq, 0)], &[T::CComma]),
    rule("cwedge/bullet", S::CWedge, At::Bullet, &[], &[T::CComma]).width(Zero),
    rule("cwedge/other", S::CWedge, At::Any, &[], &[T::CWedge]),
    // D_{*,*'}: two D diagrams glued together.
    rule(
        "dcomma/wide",
        S::DComma(SAny, SAny),
        At::Any,
        &[InFirst(true), Width(Gt, 0)],
        &[T::DComma(Core::Mutated, Core::Other)],
    )
    .width(Near),
    rule(
        "dcomma/narrow/off-end/cycle-cycle",
        S::DComma(SCyc, SCyc),
        At::NotOmegaEnd,
        &[InFirst(true), Width(Eq, 0)],
        &[
            T::DComma(Core::Mutated, Core::Other),
            T::DVee(Core::Mutated, Core::Other),
        ],
    )
    .width(UpByOne)
    .note("not listed; the shared x can become a core vertex, giving the vee family"),
    rule(
        "dcomma/narrow/off-end",
        S::DComma(SAny, SAny),
        At::NotOmegaEnd,
        &[InFirst(true), Width(Eq, 0)],
        &[T::DComma(Core::Mutated, Core::Other)],
    )
    .width(UpByOne),
    rule(
        "dcomma/end/cycle-cycle",
        S::DComma(SCyc, SCyc),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::DVee(N_UP, M_UP)],
    ),
    rule(
        "dcomma/end/cycle",
        S::DComma(SCyc, SAny),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::DVee(N_UP, Core::Other)],
    ),
    rule(
        "dcomma/end/square-cycle",
        S::DComma(SSq, SCyc),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::DComma(C3, Core::Other)],
    )
    .width(Zero),
    rule(
        "dcomma/end/square",
        S::DComma(SSq, SAny),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::DVee(C3, Core::Other)],
    ),
    rule(
        "dcomma/end/boxslash/nonlinear",
        S::DComma(SSlash, SAny),
        At::OmegaEnd,
        &[Width(Eq, 0), Linear([OmegaFar, X1, X2], false)],
        &[T::DVee(Core::BoxSlash, Core::Other)],
    ),
    rule(
        "dcomma/end/boxslash/linear-deg5",
        S::DComma(SSlash, SAny),
        At::OmegaEnd,
        &[Width(Eq, 0), Linear([OmegaFar, X1, X2], true), Degree(KV, Eq, 5)],
        &[T::DComma(Core::BoxSlash, Core::Other)],
    )
    .width(Zero),
    rule(
        "dcomma/end/boxslash/else",
        S::DComma(SSlash, SAny),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::DComma(Core::Bot, Core::Other)],
    )
    .width(Zero),
    rule(
        "dcomma/end/bot/linear",
        S::DComma(SBot, SAny),
        At::OmegaEnd,
        &[
            Width(Eq, 0),
            Linear([OmegaFar, KV, A1], true),
            Linear([OmegaFar, KV, A2], true),
        ],
        &[T::DVee(Core::BoxSlash, Core::Other)],
    ),
    rule(
        "dcomma/end/bot/nonlinear-deg4",
        S::DComma(SBot, SAny),
        At::OmegaEnd,
        &[
            Width(Eq, 0),
            Linear([OmegaFar, KV, A1], false),
            Linear([OmegaFar, KV, A2], false),
            Degree(KV, Eq, 4),
        ],
        &[T::DComma(Core::BoxSlash, Core::Other)],
    )
    .width(Zero)
    .note("degrees 5 and 4 of the table read as 4 and 3, as in the type B table"),
    rule(
        "dcomma/end/bot/nonlinear-deg3",
        S::DComma(SBot, SAny),
        At::OmegaEnd,
        &[
            Width(Eq, 0),
            Linear([OmegaFar, KV, A1], false),
            Linear([OmegaFar, KV, A2], false),
            Degree(KV, Eq, 3),
        ],
        &[T::DComma(Core::Bot, Core::Other)],
    )
    .width(Zero),
    rule(
        "dcomma/end/bot/else/cycle",
        S::DComma(SBot, SCyc),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::DComma(C3, Core::Other)],
    )
    .width(Zero)
    .note("not listed; a cycle on the other side behaves as for the square core"),
    rule(
        "dcomma/end/bot/else",
        S::DComma(SBot, SAny),
        At::OmegaEnd,
        &[Width(Eq, 0)],
        &[T::DVee(C3, Core::Other)],
    ),
    // D_{*v*'}: two cores sharing the vertex `*`. Mutation at the shared vertex.
    rule(
        "dvee/bullet/cycle3-cycle3/both-x3",
        S::DVee(SCyc, SCyc),
        At::Bullet,
        &[N(Eq, 3), M(Eq, 3), Present(Xr(3)), Present(Xpr(3))],
        &[T::DVee(Core::Square, Core::Square)],
    ),
    rule(
        "dvee/bullet/cycle3-cycle3/else",
        S::DVee(SCyc, SCyc),
        At::Bullet,
        &[N(Eq, 3), M(Eq, 3)],
        &[T::DVee(Core::Square, Core::Bot)],
    ),
    rule(
        "dvee/bullet/cycle-cycle3/x3",
        S::DVee(SCyc, SCyc),
        At::Bullet,
        &[M(Eq, 3), Present(Xpr(3))],
        &[T::DVee(N_DOWN, Core::Square)],
    ),
    rule(
        "dvee/bullet/cycle-cycle3/else",
        S::DVee(SCyc, SCyc),
        At::Bullet,
        &[M(Eq, 3)],
        &[T::DVee(N_DOWN, Core::Bot)],
    ),
    rule(
        "dvee/bullet/cycle-cycle",
        S::DVee(SCyc, SCyc),
        At::Bullet,
        &[N(Gt, 3), M(Gt, 3)],
        &[T::DComma(N_DOWN, M_DOWN)],
    )
    .width(Zero),
    rule(
        "dvee/bullet/cycle-boxslash",
        S::DVee(SCyc, SSlash),
        At::Bullet,
        &[],
        &[T::DCycleWedgeSlash(P::N(1))],
    ),
    rule(
        "dvee/bullet/cycle-square",
        S::DVee(SCyc, SSq),
        At::Bullet,
        &[],
        &[T::DVee(N_UP, C3)],
    )
    .note("the wedge of two cycle cores is undefined; read as the vee of the two cycles"),
    rule(
        "dvee/bullet/cycle-bot/nonlinear",
        S::DVee(SCyc, SBot),
        At::Bullet,
        &[Linear([AP1, DOT, AP2], false)],
        &[T::DCycleWedgeSlash(P::N(1))],
    ),
    rule(
        "dvee/bullet/cycle-bot/else",
        S::DVee(SCyc, SBot),
        At::Bullet,
        &[],
        &[T::DVee(N_UP, C3)],
    )
    .note("the wedge of two cycle cores is undefined; read as the vee of the two cycles"),
    rule(
        "dvee/bullet/boxslash-boxslash/nonlinear",
        S::DVee(SSlash, SSlash),
        At::Bullet,
        &[Linear([X2, DOT, XP2], false)],
        &[T::Same],
    )
    .note("with the shared vertex labelled x1 = x'1, the outer pair is x2, x'2"),
    rule(
        "dvee/bullet/boxslash-boxslash/else",
        S::DVee(SSlash, SSlash),
        At::Bullet,
        &[],
        &[T::DBoxTimes],
    ),
    rule(
        "dvee/bullet/square-boxslash",
        S::DVee(SSq, SSlash),
        At::Bullet,
        &[],
        &[T::DCycleWedgeSlash(P::Fix(3))],
    ),
    rule(
        "dvee/bullet/boxslash-square",
        S::DVee(SSlash, SSq),
        At::Bullet,
        &[],
        &[T::DCycleWedgeSlash(P::Fix(3))],
    ),
    rule(
        "dvee/bullet/square-square",
        S::DVee(SSq, SSq),
        At::Bullet,
        &[],
        &[T::DVee(C3, C3)],
    ),
    rule(
        "dvee/bullet/boxslash-bot/deg4",
        S::DVee(SSlash, SBot),
        At::Bullet,
        &[DegreePm(DOT, 4)],
        &[T::Same],
    ),
    rule(
        "dvee/bullet/boxslash-bot/nonlinear",
        S::DVee(SSlash, SBot),
        At::Bullet,
        &[Linear([AP1, DOT, AP2], false)],
        &[T::DBoxTimes],
    ),
    rule(
        "dvee/bullet/boxslash-bot/else",
        S::DVee(SSlash, SBot),
        At::Bullet,
        &[],
        &[T::DCycleWedgeSlash(P::Fix(3))],
    ),
    rule(
        "dvee/bullet/square-bot/nonlinear",
        S::DVee(SSq, SBot),
        At::Bullet,
        &[Linear([AP1, DOT, AP2], false)],
        &[T::DCycleWedgeSlash(P::Fix(3))],
    ),
    rule(
        "dvee/bullet/square-bot/else",
        S::DVee(SSq, SBot),
        At::Bullet,
        &[],
        &[T::DVee(C3, C3)],
    ),
    rule(
        "dvee/bullet/bot-bot/deg4",
        S::DVee(SBot, SBot),
        At::Bullet,
        &[DegreePm(DOT, 4)],
        &[T::Same],
    ),
    rule(
        "dvee/bullet/bot-bot/deg3",
        S::DVee(SBot, SBot),
        At::Bullet,
        &[DegreePm(DOT, 3)],
        &[T::DCycleWedgeSlash(P::Fix(3))],
    ),
    rule(
        "dvee/bullet/bot-bot/else",
        S::DVee(SBot, SBot),
        At::Bullet,
        &[],
        &[T::DBoxTimes],
    ),
    // D_{*v*'}, mutation away from the shared vertex.
    rule(
        "dvee/cycle-cycle/shared-a/n3",
        S::DVee(SCyc, SCyc),
        At::OneOf(&[Ar(1), Ar(3)]),
        &[N(Eq, 3)],
        &[T::DCycleWedgeSquare(P::M(1))],
    ),
    rule(
        "dvee/cycle-cycle/shared-a",
        S::DVee(SCyc, SCyc),
        At::OneOf(&[Ar(1), Ar(3)]),
        &[],
        &[T::DVee(N_DOWN, M_UP)],
    ),
    rule(
        "dvee/cycle-cycle/x/grow",
        S::DVee(SCyc, SCyc),
        At::XNot(&[1, 2]),
        &[],
        &[T::DVee(N_UP, M_SAME)],
    )
    .note("not listed; read as the cycle rule of the first core"),
    rule(
        "dvee/cycle-cycle/a/shrink",
        S::DVee(SCyc, SCyc),
        At::ANot(&[1, 2, 3]),
        &[N(Gt, 3)],
        &[T::DVee(N_DOWN, M_SAME)],
    )
    .note("not listed; read as the cycle rule of the first core"),
    rule(
        "dvee/cycle-cycle/outside",
        S::DVee(SCyc, SCyc),
        At::NotCore,
        &[],
        &[T::Same],
    )
    .note("not listed; vertices off both cores keep the family"),
    rule(
        "dvee/side",
        S::DVee(SNc, SAny),
        At::NotBullet,
        &[InFirst(true)],
        &[
            T::DComma(Core::Mutated, Core::Other),
            T::DVee(Core::Mutated, Core::Other),
        ],
    )
    .width(Zero),
    rule(
        "dvee/side/cycle-first",
        S::DVee(SAny, SNc),
        At::NotBullet,
        &[InFirst(true)],
        &[
            T::DComma(Core::Mutated, Core::Other),
            T::DVee(Core::Mutated, Core::Other),
        ],
    )
    .width(Zero),
    // D_{(o,n)^*} for * in {square, boxslash, flipped boxslash}.
    rule(
        "dwedge-square/x/grow",
        S::DCycleWedgeSquare,
        At::X,
        &[],
        &[T::DCycleWedgeSquare(P::N(1))],
    )
    .note("the target's second core is read as unchanged"),
    rule(
        "dwedge-slash/x/grow",
        S::DCycleWedgeSlash,
        At::X,
        &[],
        &[T::DCycleWedgeSlash(P::N(1))],
    )
    .note("the target's second core is read as unchanged"),
    rule(
        "dwedge-flip/x/grow",
        S::DCycleWedgeFlipSlash,
        At::X,
        &[],
        &[T::DCycleWedgeFlipSlash(P::N(1))],
    )
    .note("the target's second core is read as unchanged"),
    rule(
        "dwedge-square/a/shrink",
        S::DCycleWedgeSquare,
        At::APlain,
        &[N(Gt, 3)],
        &[T::DCycleWedgeSquare(P::N(-1))],
    ),
    rule(
        "dwedge-slash/a/shrink",
        S::DCycleWedgeSlash,
        At::APlain,
        &[N(Gt, 3)],
        &[T::DCycleWedgeSlash(P::N(-1))],
    ),
    rule(
        "dwedge-flip/a/shrink",
        S::DCycleWedgeFlipSlash,
        At::APlain,
        &[N(Gt, 3)],
        &[T::DCycleWedgeFlipSlash(P::N(-1))],
    ),
    rule(
        "dwedge-slash/a/n3",
        S::DCycleWedgeSlash,
        At::APlain,
        &[N(Eq, 3)],
        &[T::DSquareWedgeSquare],
    ),
    rule(
        "dwedge-flip/a/n3",
        S::DCycleWedgeFlipSlash,
        At::APlain,
        &[N(Eq, 3)],
        &[T::DSlashWedgeSlash],
    ),
    rule(
        "dwedge-flip/bullet",
        S::DCycleWedgeFlipSlash,
        At::Bullet,
        &[],
        &[T::Same],
    ),
    rule(
        "dwedge-flip/a-prime",
        S::DCycleWedgeFlipSlash,
        At::APrime,
        &[],
        &[T::DCycleWedgeSquare(P::N(1))],
    ),
    rule(
        "dwedge-slash/a-prime",
        S::DCycleWedgeSlash,
        At::APrime,
        &[],
        &[T::DCycleWedgeSquare(P::N(1))],
    ),
    rule(
        "dwedge-slash/bullet/deg5",
        S::DCycleWedgeSlash,
        At::Bullet,
        &[N(Gt, 3), Degree(KV, Eq, 5)],
        &[T::DVee(N_DOWN, Core::BoxSlash)],
    ),
    rule(
        "dwedge-slash/bullet/else",
        S::DCycleWedgeSlash,
        At::Bullet,
        &[N(Gt, 3)],
        &[T::DVee(N_DOWN, Core::Bot)],
    ),
    rule(
        "dwedge-slash/bullet/n3/both-x",
        S::DCycleWedgeSlash,
        At::Bullet,
        &[N(Eq, 3), Present(Xr(1)), Present(Xr(2))],
        &[T::DVee(Core::BoxSlash, Core::Square)],
    )
    .note("the named wedge family exists only for type B; read as the vee of the same cores"),
    rule(
        "dwedge-slash/bullet/n3/no-x",
        S::DCycleWedgeSlash,
        At::Bullet,
        &[N(Eq, 3), Absent(Xr(1)), Absent(Xr(2))],
        &[T::DVee(Core::Bot, Core::Bot)],
    )
    .note("not listed; the table assumes one of x1, x2 is present"),
    rule(
        "dwedge-slash/bullet/n3/deg5",
        S::DCycleWedgeSlash,
        At::Bullet,
        &[N(Eq, 3), Degree(KV, Eq, 5)],
        &[T::DVee(Core::BoxSlash, Core::Bot)],
    ),
    rule(
        "dwedge-slash/bullet/n3/else",
        S::DCycleWedgeSlash,
        At::Bullet,
        &[N(Eq, 3)],
        &[T::DVee(Core::Square, Core::Bot)],
    ),
    rule(
        "dwedge-square/bullet/n4/bare",
        S::DCycleWedgeSquare,
        At::Bullet,
        &[N(Eq, 4), Vertices(Eq, 5)],
        &[T::DBoxTimes],
    )
    .note("the table skips n = 4; the bare member is also the square-square wedge and follows its rule"),
    rule(
        "dwedge-square/bullet/large",
        S::DCycleWedgeSquare,
        At::Bullet,
        &[N(Gt, 3)],
        &[T::DVee(N_DOWN, C3)],
    )
    .note("the bound n > 4 read as n > 3, which also covers the otherwise missing n = 4"),
    rule(
        "dwedge-square/a-prime1/large",
        S::DCycleWedgeSquare,
        At::APrimeIs(1),
        &[N(Gt, 3)],
        &[T::DCycleWedgeSlash(P::N(-1))],
    ),
    rule(
        "dwedge-square/a-prime2/large",
        S::DCycleWedgeSquare,
        At::APrimeIs(2),
        &[N(Gt, 3)],
        &[T::DCycleWedgeFlipSlash(P::N(-1))],
    ),
    rule(
        "dwedge-square/bullet/n3",
        S::DCycleWedgeSquare,
        At::Bullet,
        &[N(Eq, 3)],
        &[T::Same],
    ),
    rule(
        "dwedge-square/a-prime1/n3",
        S::DCycleWedgeSquare,
        At::APrimeIs(1),
        &[N(Eq, 3)],
        &[T::DSquareWedgeSquare],
    ),
    rule(
        "dwedge-square/a-prime2/n3",
        S::DCycleWedgeSquare,
        At::APrimeIs(2),
        &[N(Eq, 3)],
        &[T::DSlashWedgeSlash],
    ),
    rule(
        "dwedge-square/outside",
        S::DCycleWedgeSquare,
        At::NotCore,
        &[],
        &[T::Same],
    ),
    rule(
        "dwedge-slash/outside",
        S::DCycleWedgeSlash,
        At::NotCore,
        &[],
        &[T::Same],
    ),
    rule(
        "dwedge-flip/outside",
        S::DCycleWedgeFlipSlash,
        At::NotCore,
        &[],
        &[T::Same],
    ),
    // D_{square^square} and D_{boxslash^boxslash}.
    rule(
        "dsquare-square/bullet",
        S::DSquareWedgeSquare,
        At::Bullet,
        &[],
        &[T::DCycleWedgeSlash(P::Fix(3))],
    ),
    rule(
        "dslash-slash/bullet",
        S::DSlashWedgeSlash,
        At::Bullet,
        &[],
        &[T::DCycleWedgeFlipSlash(P::Fix(3))],
    ),
    rule("dsquare-square/x", S::DSquareWedgeSquare, At::X, &[], &[T::DBoxTimes]),
    rule(
        "dslash-slash/x",
        S::DSlashWedgeSlash,
        At::X,
        &[],
        &[T::DSlashWedgeSlash],
    ),
    rule(
        "dsquare-square/a",
        S::DSquareWedgeSquare,
        At::A,
        &[],
        &[T::DCycleWedgeSquare(P::Fix(3))],
    ),
    rule(
        "dslash-slash/a",
        S::DSlashWedgeSlash,
        At::A,
        &[],
        &[T::DCycleWedgeSquare(P::Fix(3))],
    ),
    rule(
        "dsquare-square/outside",
        S::DSquareWedgeSquare,
        At::NotCore,
        &[],
        &[T::Same],
    ),
    rule(
        "dslash-slash/outside",
        S::DSlashWedgeSlash,
        At::NotCore,
        &[],
        &[T::Same],
    ),
    // D_boxtimes.
    rule("dboxtimes/a", S::DBoxTimes, At::A, &[], &[T::DSquareWedgeSquare]),
    rule(
        "dboxtimes/x/deg6",
        S::DBoxTimes,
        At::X,
        &[Degree(KV, Eq, 6)],
        &[T::DVee(Core::BoxSlash, Core::BoxSlash)],
    ),
    rule(
        "dboxtimes/x/deg5",
        S::DBoxTimes,
        At::X,
        &[Degree(KV, Eq, 5)],
        &[T::DVee(Core::BoxSlash, Core::Bot)],
    ),
    rule(
        "dboxtimes/x/else",
        S::DBoxTimes,
        At::X,
        &[],
        &[T::DVee(Core::Bot, Core::Bot)],
    ),
    rule("dboxtimes/outside", S::DBoxTimes, At::NotCore, &[], &[T::Same]),
];
