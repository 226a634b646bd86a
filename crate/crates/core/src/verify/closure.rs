//! Interpreter for the transition tables and the closure check built on it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::canon::{canonical_key, CanonicalKey};
use crate::diagram::Diagram;
use crate::family::{DCore, FamilyId};
use crate::hosts::{HostGraph, Role};
use crate::recognize::{all_matches, comma_witnesses, d_constituent_cores, host_with_embeddings, primed, swap_primes};

use super::report::{Failure, VerificationReport};
use super::rules::{At, Cond, Core, Name, Shape, Source, Target, TransitionRule, WidthBound, P, RULES};

/// Constituent of a glued or vee family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    B,
    D(DCore),
}

/// One reading of a diagram as a family member: labels, cores and, for glued
/// families, the x-vertices of both constituents.
struct Labeling {
    family: FamilyId,
    parts: Option<[Part; 2]>,
    roles: Vec<Vec<Role>>,
    core: Vec<bool>,
    first_core: Vec<bool>,
    second_core: Vec<bool>,
    host: Option<(Arc<HostGraph>, Vec<usize>)>,
    xs: Option<[Vec<usize>; 2]>,
    width: Option<usize>,
}

impl Labeling {
    fn vertex(&self, r: Role) -> Option<usize> {
        self.roles.iter().position(|rs| rs.contains(&r))
    }

    fn has(&self, v: usize, f: impl Fn(Role) -> bool) -> bool {
        self.roles[v].iter().any(|&r| f(r))
    }

    fn cycle_param(&self, i: usize) -> Option<u32> {
        match (self.parts, i) {
            (Some(p), _) => match p[i] {
                Part::D(DCore::Cycle(n)) => Some(n),
                _ => None,
            },
            (None, 0) => self.family.params().first().copied(),
            _ => None,
        }
    }

    fn d_core(&self, i: usize) -> Option<DCore> {
        match (self.parts, self.family) {
            (Some(p), _) => match p[i] {
                Part::D(c) => Some(c),
                Part::B => None,
            },
            (None, FamilyId::D(c)) if i == 0 => Some(c),
            _ => None,
        }
    }
}

/// Every labeling of `d` as a member of `family` (glued families: minimal
/// width witnesses only), in both orientations where the family is symmetric
/// enough to allow it.
fn labelings(d: &Diagram, family: FamilyId, width: Option<usize>) -> Vec<Labeling> {
    let n = d.vertex_count();
    let mut out = Vec::new();
    if family.is_comma() {
        for w in comma_witnesses(d) {
            if w.family != family || Some(w.width) != width {
                continue;
            }
            let orders: &[[usize; 2]] = match family {
                FamilyId::BComma(_) => &[[0, 1]],
                _ => &[[0, 1], [1, 0]],
            };
            for &[s0, s1] in orders {
                let mut roles = vec![Vec::new(); n];
                let mut first_core = vec![false; n];
                let mut second_core = vec![false; n];
                for (slot, s) in [s0, s1].into_iter().enumerate() {
                    let side = &w.sides[s];
                    for ((&v, rs), &c) in side.vertices.iter().zip(&side.roles).zip(&side.core) {
                        roles[v].extend(rs.iter().map(|&r| if slot == 1 { primed(r) } else { r }));
                        if slot == 0 {
                            first_core[v] |= c;
                        } else {
                            second_core[v] |= c;
                        }
                    }
                }
                for r in &mut roles {
                    r.sort_unstable();
                    r.dedup();
                }
                let part = |s: usize| match w.sides[s].family {
                    FamilyId::D(c) => Part::D(c),
                    _ => Part::B,
                };
                let core = (0..n).map(|v| first_core[v] || second_core[v]).collect();
                out.push(Labeling {
                    family,
                    parts: Some([part(s0), part(s1)]),
                    roles,
                    core,
                    first_core,
                    second_core,
                    host: None,
                    xs: Some([w.sides[s0].xs.clone(), w.sides[s1].xs.clone()]),
                    width: Some(w.width),
                });
            }
        }
        return out;
    }
    let Some((h, embs)) = host_with_embeddings(d, family) else {
        return out;
    };
    let mut seen = BTreeSet::new();
    for emb in embs {
        let roles: Vec<Vec<Role>> = emb.iter().map(|&v| h.roles(v).to_vec()).collect();
        let key: Vec<Vec<Role>> = roles
            .iter()
            .map(|rs| rs.iter().copied().filter(|r| !r.is_tree()).collect())
            .collect();
        if !seen.insert(key) {
            continue;
        }
        let core: Vec<bool> = emb.iter().map(|&v| h.is_core(v)).collect();
        let FamilyId::DVee(p, q) = family else {
            out.push(Labeling {
                family,
                parts: None,
                roles,
                core,
                first_core: vec![false; n],
                second_core: vec![false; n],
                host: Some((h.clone(), emb)),
                xs: None,
                width: None,
            });
            continue;
        };
        for swap in [false, true] {
            let roles: Vec<Vec<Role>> = if swap {
                roles
                    .iter()
                    .map(|rs| rs.iter().map(|&r| swap_primes(r)).collect())
                    .collect()
            } else {
                roles.clone()
            };
            let (p, q) = if swap { (q, p) } else { (p, q) };
            let side_core = |c: DCore, unprimed: bool| -> Vec<bool> {
                roles
                    .iter()
                    .map(|rs| {
                        rs.iter().any(|&r| match (r, unprimed) {
                            (Role::A(_), true) | (Role::AP(_), false) => true,
                            (Role::X(_), true) | (Role::XP(_), false) => !c.is_cycle(),
                            _ => false,
                        })
                    })
                    .collect()
            };
            out.push(Labeling {
                family,
                parts: Some([Part::D(p), Part::D(q)]),
                first_core: side_core(p, true),
                second_core: side_core(q, false),
                roles,
                core: core.clone(),
                host: None,
                xs: None,
                width: None,
            });
        }
    }
    out
}

fn shape_matches(s: Shape, c: DCore) -> bool {
    match s {
        Shape::Any => true,
        Shape::Cycle => c.is_cycle(),
        Shape::NotCycle => !c.is_cycle(),
        Shape::Square => c == DCore::Square,
        Shape::BoxSlash => c == DCore::BoxSlash,
        Shape::Bot => c == DCore::Bot,
    }
}

fn source_matches(src: Source, lab: &Labeling) -> bool {
    use FamilyId as F;
    let parts = |s0: Shape, s1: Shape| match lab.parts {
        Some([Part::D(a), Part::D(b)]) => shape_matches(s0, a) && shape_matches(s1, b),
        _ => false,
    };
    match (src, lab.family) {
        (Source::A, F::A) | (Source::B, F::B) | (Source::CComma, F::CComma) | (Source::CWedge, F::CWedge) => true,
        (Source::D(s), F::D(c)) => shape_matches(s, c),
        (Source::BComma(s), F::BComma(c)) => shape_matches(s, c),
        (Source::DComma(s0, s1), F::DComma(..)) | (Source::DVee(s0, s1), F::DVee(..)) => parts(s0, s1),
        (Source::BCycleWedgeB, F::BCycleWedgeB(_))
        | (Source::BCycleWedgeFlipB, F::BCycleWedgeFlipB(_))
        | (Source::BSquareWedgeB, F::BSquareWedgeB)
        | (Source::BSlashWedgeB, F::BSlashWedgeB)
        | (Source::BSlashWedgeSquare, F::BSlashWedgeSquare)
        | (Source::DCycleWedgeSquare, F::DCycleWedgeSquare(_))
        | (Source::DCycleWedgeSlash, F::DCycleWedgeSlash(_))
        | (Source::DCycleWedgeFlipSlash, F::DCycleWedgeFlipSlash(_))
        | (Source::DSquareWedgeSquare, F::DSquareWedgeSquare)
        | (Source::DSlashWedgeSlash, F::DSlashWedgeSlash)
        | (Source::DBoxTimes, F::DBoxTimes) => true,
        _ => false,
    }
}

/// Evaluation of one labeling at one mutated vertex.
struct Eval<'a> {
    d: &'a Diagram,
    lab: &'a Labeling,
    k: usize,
    dist_to_second: Option<Vec<Option<usize>>>,
    dist_to_first: Option<Vec<Option<usize>>>,
}

impl<'a> Eval<'a> {
    fn new(d: &'a Diagram, lab: &'a Labeling, k: usize) -> Self {
        let (dist_to_first, dist_to_second) = match &lab.xs {
            Some([a, b]) => (Some(d.distances_from(a)), Some(d.distances_from(b))),
            None => (None, None),
        };
        Eval {
            d,
            lab,
            k,
            dist_to_second,
            dist_to_first,
        }
    }

    /// Length of a shortest path between the two x-sets.
    fn omega_len(&self) -> Option<usize> {
        let xs = self.lab.xs.as_ref()?;
        let dist = self.dist_to_second.as_ref()?;
        xs[0].iter().filter_map(|&v| dist[v]).min()
    }

    /// First-constituent end of a shortest path, preferring `k`.
    fn omega_end(&self) -> Option<usize> {
        let xs = self.lab.xs.as_ref()?;
        let dist = self.dist_to_second.as_ref()?;
        let best = self.omega_len()?;
        let ends: Vec<usize> = xs[0].iter().copied().filter(|&v| dist[v] == Some(best)).collect();
        if ends.contains(&self.k) {
            Some(self.k)
        } else {
            ends.first().copied()
        }
    }

    fn at(&self, at: At) -> bool {
        let k = self.k;
        let lab = self.lab;
        match at {
            At::Any => true,
            At::NotCore => !lab.core[k],
            At::X => lab.has(k, |r| matches!(r, Role::X(i) if i > 0)),
            At::XIs(i) => lab.has(k, |r| r == Role::X(i)),
            At::XNot(is) => lab.has(k, |r| matches!(r, Role::X(i) if i > 0 && !is.contains(&i))),
            At::A => lab.has(k, |r| matches!(r, Role::A(_))),
            At::AIs(i) => lab.has(k, |r| r == Role::A(i)),
            At::ANot(is) => lab.has(k, |r| matches!(r, Role::A(i) if !is.contains(&i))),
            At::APlain => lab.has(k, |r| matches!(r, Role::A(_))) && !lab.has(k, |r| matches!(r, Role::Bullet(_))),
            At::APrime => lab.has(k, |r| matches!(r, Role::AP(_))),
            At::APrimeIs(i) => lab.has(k, |r| r == Role::AP(i)),
            At::Bullet => lab.has(k, |r| matches!(r, Role::Bullet(_))),
            At::NotBullet => !lab.has(k, |r| matches!(r, Role::Bullet(_))),
            At::OmegaEnd => self.is_omega_end(),
            At::NotOmegaEnd => lab.xs.is_some() && !self.is_omega_end(),
            At::OmegaInner => {
                let (Some(a), Some(b), Some(len)) = (&self.dist_to_first, &self.dist_to_second, self.omega_len())
                else {
                    return false;
                };
                matches!((a[k], b[k]), (Some(x), Some(y)) if x > 0 && y > 0 && x + y == len)
            }
            At::OneOf(rs) => lab.has(k, |r| rs.contains(&r)),
        }
    }

    fn is_omega_end(&self) -> bool {
        let Some(xs) = &self.lab.xs else { return false };
        xs[0].contains(&self.k) && self.omega_end() == Some(self.k)
    }

    fn name(&self, n: Name) -> Option<usize> {
        match n {
            Name::K => Some(self.k),
            Name::Role(r) => self.lab.vertex(r),
            Name::OmegaFar => {
                let xs = self.lab.xs.as_ref()?;
                let dist = self.d.distances_from(&[self.k]);
                xs[1]
                    .iter()
                    .copied()
                    .filter(|&v| dist[v].is_some())
                    .min_by_key(|&v| (dist[v], v))
            }
        }
    }

    fn cond(&self, c: Cond, first_part: &dyn Fn() -> Option<Vec<usize>>) -> bool {
        let lab = self.lab;
        match c {
            Cond::N(cmp, v) => lab.cycle_param(0).is_some_and(|n| cmp.holds(n, v)),
            Cond::M(cmp, v) => lab.cycle_param(1).is_some_and(|m| cmp.holds(m, v)),
            Cond::Vertices(cmp, v) => cmp.holds(self.d.vertex_count(), v),
            Cond::Width(cmp, v) => lab.width.is_some_and(|w| cmp.holds(w, v)),
            Cond::Present(r) => lab.vertex(r).is_some(),
            Cond::Absent(r) => lab.vertex(r).is_none(),
            Cond::OppositeX(want) => self.opposite_x() == Some(want),
            Cond::Linear(names, want) => {
                let [a, b, c] = names.map(|n| self.name(n));
                match (a, b, c) {
                    (Some(a), Some(b), Some(c)) => triple_linear(self.d, a, b, c) == Some(want),
                    _ => false,
                }
            }
            Cond::Neighbour {
                outside_core,
                with,
                linear,
            } => {
                let Some(others) = with.iter().map(|&n| self.name(n)).collect::<Option<Vec<usize>>>() else {
                    return false;
                };
                let others: Vec<usize> = others.into_iter().filter(|&p| p != self.k).collect();
                self.d.neighbors(self.k).any(|y| {
                    (!outside_core || !lab.core[y])
                        && !others.contains(&y)
                        && others
                            .iter()
                            .all(|&p| triple_linear(self.d, y, self.k, p) == Some(linear))
                })
            }
            Cond::Degree(n, cmp, v) => self.name(n).is_some_and(|x| cmp.holds(self.d.degree(x), v)),
            Cond::DegreePm(n, v) => self
                .name(n)
                .is_some_and(|x| self.d.in_degree(x) == v || self.d.out_degree(x) == v),
            Cond::InFirst(want) => first_part().is_some_and(|p| p.contains(&self.k)) == want,
        }
    }

    /// Whether the `x_j` of a 3-cycle core that is not adjacent to `k` in the
    /// host is present; `None` if there is no such vertex to speak of.
    fn opposite_x(&self) -> Option<bool> {
        let (h, emb) = self.lab.host.as_ref()?;
        let hk = emb[self.k];
        let opp: Vec<usize> = (1..=3u8)
            .filter_map(|j| h.vertex(Role::X(j)))
            .filter(|&hx| hx != hk && h.weight(hk, hx) == 0)
            .collect();
        let &[hx] = opp.as_slice() else { return None };
        Some(emb.contains(&hx))
    }

    /// Vertices of the part carrying the first constituent once the second
    /// constituent's own core is removed.
    fn first_part(&self) -> Option<Vec<usize>> {
        let lab = self.lab;
        let n = self.d.vertex_count();
        let (removed, anchor): (Vec<usize>, usize) = match lab.family {
            FamilyId::DVee(..) => {
                let bullet = lab.vertex(Role::Bullet(0))?;
                let removed = (0..n)
                    .filter(|&v| lab.second_core[v] && !lab.first_core[v] && v != bullet)
                    .collect();
                (removed, bullet)
            }
            FamilyId::BComma(_) => (lab.xs.as_ref()?[1].clone(), self.omega_end()?),
            FamilyId::DComma(..) => ((0..n).filter(|&v| lab.second_core[v]).collect(), self.omega_end()?),
            _ => return None,
        };
        if removed.contains(&anchor) {
            return None;
        }
        self.d
            .components_without(&removed)
            .into_iter()
            .find(|c| c.contains(&anchor))
    }

    fn mutated_cores(&self, part: Option<&Vec<usize>>) -> Vec<DCore> {
        match part {
            Some(p) if p.contains(&self.k) => {
                let local = p.iter().position(|&v| v == self.k).expect("k in part");
                match self.d.induced(p).mutate(local) {
                    Ok(m) => d_constituent_cores(&m),
                    Err(_) => Vec::new(),
                }
            }
            _ => self.lab.d_core(0).into_iter().collect(),
        }
    }

    fn param(&self, p: P) -> Option<u32> {
        let add = |base: Option<u32>, d: i8| base.and_then(|b| u32::try_from(b as i64 + d as i64).ok());
        let v = match p {
            P::N(d) => add(self.lab.cycle_param(0), d),
            P::M(d) => add(self.lab.cycle_param(1), d),
            P::Fix(v) => Some(v),
        }?;
        (v >= 3).then_some(v)
    }

    fn cores(&self, c: Core, mutated: &[DCore]) -> Vec<DCore> {
        match c {
            Core::Cycle(p) => self.param(p).map(DCore::Cycle).into_iter().collect(),
            Core::Square => vec![DCore::Square],
            Core::BoxSlash => vec![DCore::BoxSlash],
            Core::Bot => vec![DCore::Bot],
            Core::This => self.lab.d_core(0).into_iter().collect(),
            Core::Other => self.lab.d_core(1).into_iter().collect(),
            Core::Mutated => mutated.to_vec(),
        }
    }

    fn targets(&self, t: Target, mutated: &[DCore]) -> Vec<FamilyId> {
        use FamilyId as F;
        let one = |f: Option<F>| f.into_iter().collect::<Vec<_>>();
        let pair = |a: Core, b: Core, mk: fn(DCore, DCore) -> F| {
            let mut out = Vec::new();
            for x in self.cores(a, mutated) {
                for y in self.cores(b, mutated) {
                    out.push(mk(x, y));
                }
            }
            out
        };
        match t {
            Target::Same => vec![self.lab.family],
            Target::A => vec![F::A],
            Target::B => vec![F::B],
            Target::D(c) => self.cores(c, mutated).into_iter().map(F::D).collect(),
            Target::BComma(c) => self.cores(c, mutated).into_iter().map(F::BComma).collect(),
            Target::BCycleWedgeB(p) => one(self.param(p).map(F::BCycleWedgeB)),
            Target::BCycleWedgeFlipB(p) => one(self.param(p).map(F::BCycleWedgeFlipB)),
            Target::BSquareWedgeB => vec![F::BSquareWedgeB],
            Target::BSlashWedgeB => vec![F::BSlashWedgeB],
            Target::BSlashWedgeSquare => vec![F::BSlashWedgeSquare],
            Target::CComma => vec![F::CComma],
            Target::CWedge => vec![F::CWedge],
            Target::DComma(a, b) => pair(a, b, F::d_comma),
            Target::DVee(a, b) => pair(a, b, F::d_vee),
            Target::DCycleWedgeSquare(p) => one(self.param(p).map(F::DCycleWedgeSquare)),
            Target::DCycleWedgeSlash(p) => one(self.param(p).map(F::DCycleWedgeSlash)),
            Target::DCycleWedgeFlipSlash(p) => one(self.param(p).map(F::DCycleWedgeFlipSlash)),
            Target::DSquareWedgeSquare => vec![F::DSquareWedgeSquare],
            Target::DSlashWedgeSlash => vec![F::DSlashWedgeSlash],
            Target::DBoxTimes => vec![F::DBoxTimes],
        }
    }
}

/// Middle vertex of the path induced on three vertices, with whether its two
/// edges point through it. `None` if the three vertices do not induce a path.
fn triple_linear(d: &Diagram, a: usize, b: usize, c: usize) -> Option<bool> {
    if a == b || b == c || a == c {
        return None;
    }
    let t = [a, b, c];
    for i in 0..3 {
        let (m, p, q) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
        if d.adjacent(m, p) && d.adjacent(m, q) && !d.adjacent(p, q) {
            return Some(d.has_arrow(p, m) != d.has_arrow(q, m));
        }
    }
    None
}

/// Outcome of the first applicable rule for one labeling.
#[derive(Debug, Clone)]
pub struct Decision {
    pub rule: &'static TransitionRule,
    pub targets: Vec<FamilyId>,
    /// Width of the source labeling, for glued families.
    pub width: Option<usize>,
}

impl Decision {
    /// Whether a successor in `family` with width `w` is allowed.
    pub fn accepts(&self, family: FamilyId, w: Option<usize>) -> bool {
        if !self.targets.contains(&family) {
            return false;
        }
        let (Some(w), true) = (w, family.is_comma()) else {
            return true;
        };
        let w0 = self.width.unwrap_or(0);
        match self.rule.width {
            WidthBound::Any => true,
            WidthBound::Zero => w == 0,
            WidthBound::Near => w.abs_diff(w0) <= 1,
            WidthBound::UpByOne => w0 <= w && w <= w0 + 1,
        }
    }
}

fn decide(d: &Diagram, lab: &Labeling, k: usize) -> Option<Decision> {
    let ev = Eval::new(d, lab, k);
    let part = std::cell::OnceCell::new();
    let first_part = || part.get_or_init(|| ev.first_part()).clone();
    let rule = RULES
        .iter()
        .find(|r| source_matches(r.source, lab) && ev.at(r.at) && r.guard.iter().all(|&c| ev.cond(c, &first_part)))?;
    let needs_mutated = rule.targets.iter().any(|t| {
        matches!(
            t,
            Target::D(Core::Mutated)
                | Target::BComma(Core::Mutated)
                | Target::DComma(Core::Mutated, _)
                | Target::DVee(Core::Mutated, _)
        )
    });
    let mutated = if needs_mutated {
        ev.mutated_cores(first_part().as_ref())
    } else {
        Vec::new()
    };
    let mut targets: Vec<FamilyId> = rule.targets.iter().flat_map(|&t| ev.targets(t, &mutated)).collect();
    targets.sort_unstable();
    targets.dedup();
    Some(Decision {
        rule,
        targets,
        width: lab.width,
    })
}

/// Decisions of the transition tables for mutating `d`, read as a member of
/// `family`, at `k`: one per labeling that some rule applies to.
pub fn transition_targets(d: &Diagram, family: FamilyId, width: Option<usize>, k: usize) -> Vec<Decision> {
    labelings(d, family, width)
        .iter()
        .filter_map(|lab| decide(d, lab, k))
        .collect()
}

/// Families (with minimal widths) of a diagram.
type Observed = Arc<Vec<(FamilyId, Option<usize>)>>;

fn observe(d: &Diagram) -> Observed {
    Arc::new(
        all_matches(d)
            .into_iter()
            .map(|m| (m.family, m.width.map(|w| w.value)))
            .collect(),
    )
}

fn describe(obs: &[(FamilyId, Option<usize>)]) -> String {
    if obs.is_empty() {
        return "no family".into();
    }
    obs.iter()
        .map(|(f, w)| match w {
            Some(w) => format!("{f} (width {w})"),
            None => f.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Checks every vertex of every diagram in `members` against the transition
/// tables, for every family the diagram belongs to (or only `only`).
///
/// A mutation passes when, for some labeling, the first applicable rule lists
/// a family of the successor and the rule's width bound holds. Mutations no
/// rule applies to are reported as uncovered.
pub fn check_closure<'a, I>(suite: &str, members: I, only: Option<FamilyId>) -> VerificationReport
where
    I: IntoIterator<Item = &'a Diagram>,
{
    let members: Vec<&Diagram> = members.into_iter().collect();
    let keyed: Vec<(Option<CanonicalKey>, Observed)> = members
        .par_iter()
        .map(|d| (canonical_key(d).ok(), observe(d)))
        .collect();
    let cache: HashMap<CanonicalKey, Observed> = keyed
        .iter()
        .filter_map(|(k, o)| k.clone().map(|k| (k, o.clone())))
        .collect();
    let parts: Vec<VerificationReport> = members
        .par_iter()
        .zip(&keyed)
        .map(|(d, (_, obs))| check_member(d, obs, only, &cache))
        .collect();
    let mut report = VerificationReport::new(suite);
    for p in parts {
        report.merge(p);
    }
    report
}

fn check_member(
    d: &Diagram,
    obs: &Observed,
    only: Option<FamilyId>,
    cache: &HashMap<CanonicalKey, Observed>,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let sources: Vec<(FamilyId, Option<usize>)> = obs
        .iter()
        .copied()
        .filter(|(f, _)| only.is_none_or(|o| o == *f))
        .collect();
    if sources.is_empty() {
        return report;
    }
    report.diagrams = 1;
    for (family, width) in sources {
        let labs = labelings(d, family, width);
        for k in 0..d.vertex_count() {
            report.mutations += 1;
            let succ = match d.mutate(k) {
                Ok(m) => m,
                Err(e) => {
                    report.failures.push(Failure {
                        diagram: d.into(),
                        vertex: Some(k),
                        expected: Vec::new(),
                        observed: e.to_string(),
                        detail: format!("source {family}: mutation failed"),
                    });
                    continue;
                }
            };
            let seen = canonical_key(&succ)
                .ok()
                .and_then(|key| cache.get(&key).cloned())
                .unwrap_or_else(|| observe(&succ));
            let decisions: Vec<Decision> = labs.iter().filter_map(|lab| decide(d, lab, k)).collect();
            let hit = decisions
                .iter()
                .find(|dec| seen.iter().any(|&(f, w)| dec.accepts(f, w)));
            match hit {
                Some(dec) => *report.rule_hits.entry(dec.rule.id.to_string()).or_default() += 1,
                None => {
                    let mut expected: BTreeMap<String, ()> = BTreeMap::new();
                    for dec in &decisions {
                        for t in &dec.targets {
                            expected.insert(t.to_string(), ());
                        }
                    }
                    let rules: BTreeSet<&str> = decisions.iter().map(|dec| dec.rule.id).collect();
                    let detail = if decisions.is_empty() {
                        format!("source {family}: no rule covers this vertex")
                    } else {
                        format!(
                            "source {family} (width {}): rules {}",
                            width.map_or("-".into(), |w| w.to_string()),
                            rules.into_iter().collect::<Vec<_>>().join(", ")
                        )
                    };
                    report.failures.push(Failure {
                        diagram: d.into(),
                        vertex: Some(k),
                        expected: expected.into_keys().collect(),
                        observed: describe(&seen),
                        detail,
                    });
                }
            }
        }
    }
    report
}
