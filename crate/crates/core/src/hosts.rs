//! Finite truncations of the infinite host graphs whose connected full
//! sub-graphs make up each diagram family.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::diagram::{Diagram, UnderlyingGraph};
use crate::error::HostError;
use crate::family::{DCore, FamilyId};

/// Name of a host vertex. Primed labels belong to the second constituent of a
/// glued host; `Tree` names a non-root vertex of an attached ∇ graph by its
/// attachment slot and heap-style path (children of `p` are `2p` and `2p + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Role {
    X(u8),
    A(u8),
    XP(u8),
    AP(u8),
    Bullet(u8),
    Tree { slot: u8, path: u32 },
}

impl Role {
    pub fn is_tree(self) -> bool {
        matches!(self, Role::Tree { .. })
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X(i) => write!(f, "x{i}"),
            Role::A(i) => write!(f, "a{i}"),
            Role::XP(i) => write!(f, "x'{i}"),
            Role::AP(i) => write!(f, "a'{i}"),
            Role::Bullet(0) => f.write_str("*"),
            Role::Bullet(i) => write!(f, "*{i}"),
            Role::Tree { slot, path } => write!(f, "t{slot}.{path:b}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HostGraph {
    family: Option<FamilyId>,
    depth: usize,
    adj: Vec<Vec<(u32, u32)>>,
    roles: Vec<Vec<Role>>,
    by_role: HashMap<Role, usize>,
    core: Vec<usize>,
    anchor: usize,
}

impl HostGraph {
    pub fn family(&self) -> Option<FamilyId> {
        self.family
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn weight(&self, a: usize, b: usize) -> u64 {
        let row = &self.adj[a];
        match row.binary_search_by_key(&(b as u32), |&(v, _)| v) {
            Ok(i) => row[i].1 as u64,
            Err(_) => 0,
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.adj[v].iter().map(|&(u, w)| (u as usize, w as u64))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn roles(&self, v: usize) -> &[Role] {
        &self.roles[v]
    }

    pub fn has_role(&self, v: usize, role: Role) -> bool {
        self.roles[v].contains(&role)
    }

    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.by_role.get(&role).copied()
    }

    /// Vertices every family member must contain.
    pub fn core(&self) -> &[usize] {
        &self.core
    }

    pub fn is_core(&self, v: usize) -> bool {
        self.core.contains(&v)
    }

    /// Vertex the embedding search starts from.
    pub fn anchor(&self) -> usize {
        self.anchor
    }

    /// Edges `(a, b, weight)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .filter(move |&&(b, _)| (b as usize) > a)
                .map(move |&(b, w)| (a, b as usize, w as u64))
        })
    }

    pub fn underlying(&self) -> UnderlyingGraph {
        UnderlyingGraph::from_edges(self.vertex_count(), self.edges())
    }

    /// The host oriented from lower to higher index, for running diagram checks.
    pub fn to_diagram(&self) -> Diagram {
        Diagram::from_edges(self.vertex_count(), self.edges().map(|(a, b, w)| (a, b, w as i64)))
    }
}

#[derive(Default)]
struct Builder {
    roles: Vec<Vec<Role>>,
    edges: Vec<(usize, usize, u32)>,
    glue: Vec<(usize, usize)>,
    nablas: Vec<(usize, u32)>,
    core: Vec<usize>,
}

impl Builder {
    fn vertex(&mut self, role: Role) -> usize {
        self.roles.push(vec![role]);
        self.roles.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize, w: u32) {
        self.edges.push((a, b, w));
    }

    /// Sets the weight of an existing edge.
    fn reweight(&mut self, a: usize, b: usize, w: u32) {
        for e in &mut self.edges {
            if (e.0 == a && e.1 == b) || (e.0 == b && e.1 == a) {
                e.2 = w;
            }
        }
    }

    fn nabla(&mut self, root: usize, root_weight: u32) {
        self.nablas.push((root, root_weight));
    }

    fn identify(&mut self, a: usize, b: usize) {
        self.glue.push((a, b));
    }

    fn finish(self, family: Option<FamilyId>, depth: usize, anchor: usize) -> HostGraph {
        let n0 = self.roles.len();
        let mut parent: Vec<usize> = (0..n0).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for &(a, b) in &self.glue {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut id = vec![usize::MAX; n0];
        let mut roles: Vec<Vec<Role>> = Vec::new();
        for v in 0..n0 {
            let r = find(&mut parent, v);
            if id[r] == usize::MAX {
                id[r] = roles.len();
                roles.push(Vec::new());
            }
            id[v] = id[r];
            roles[id[v]].extend(self.roles[v].iter().copied());
        }
        let mut weights: HashMap<(usize, usize), u32> = HashMap::new();
        let add = |a: usize, b: usize, w: u32, weights: &mut HashMap<(usize, usize), u32>| {
            let key = (a.min(b), a.max(b));
            if let Some(&old) = weights.get(&key) {
                assert_eq!(old, w, "glued edges disagree on weight");
            }
            weights.insert(key, w);
        };
        for &(a, b, w) in &self.edges {
            add(id[a], id[b], w, &mut weights);
        }
        for (slot, &(root, root_weight)) in self.nablas.iter().enumerate() {
            let slot = slot as u8;
            let root = id[root];
            // Breadth-first growth of the binary tree with sibling edges.
            let mut level = vec![(root, 1u32)];
            for d in 0..depth {
                let mut next = Vec::new();
                for &(v, path) in &level {
                    let w = if d == 0 { root_weight } else { 1 };
                    let l = roles.len();
                    roles.push(vec![Role::Tree { slot, path: 2 * path }]);
                    let r = roles.len();
                    roles.push(vec![Role::Tree {
                        slot,
                        path: 2 * path + 1,
                    }]);
                    add(v, l, w, &mut weights);
                    add(v, r, w, &mut weights);
                    add(l, r, 1, &mut weights);
                    next.push((l, 2 * path));
                    next.push((r, 2 * path + 1));
                }
                level = next;
            }
        }
        let n = roles.len();
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
        for (&(a, b), &w) in &weights {
            assert_ne!(a, b, "identification created a loop");
            adj[a].push((b as u32, w));
            adj[b].push((a as u32, w));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        for r in &mut roles {
            r.sort_unstable();
            r.dedup();
        }
        let mut by_role = HashMap::new();
        for (v, rs) in roles.iter().enumerate() {
            for &r in rs {
                by_role.insert(r, v);
            }
        }
        let mut core: Vec<usize> = self.core.iter().map(|&v| id[v]).collect();
        core.sort_unstable();
        core.dedup();
        HostGraph {
            family,
            depth,
            adj,
            roles,
            by_role,
            core,
            anchor: id[anchor],
        }
    }
}

/// Vertex ids of one type D constituent inside a builder.
struct Side {
    x: Vec<usize>,
    a: Vec<usize>,
    core: Vec<usize>,
}

/// Adds a D constituent. `bare` lists x-indices (1-based) that get no ∇ graph.
fn d_side(b: &mut Builder, core: DCore, primed: bool, bare: &[usize]) -> Side {
    let xr = |i: usize| if primed { Role::XP(i as u8) } else { Role::X(i as u8) };
    let ar = |i: usize| if primed { Role::AP(i as u8) } else { Role::A(i as u8) };
    let (x, a, core_ids) = match core {
        DCore::Cycle(n) => {
            let n = n as usize;
            let a: Vec<usize> = (1..=n).map(|i| b.vertex(ar(i))).collect();
            let x: Vec<usize> = (1..=n).map(|i| b.vertex(xr(i))).collect();
            for i in 0..n {
                b.edge(a[i], a[(i + 1) % n], 1);
                b.edge(x[i], a[i], 1);
                b.edge(x[i], a[(i + 1) % n], 1);
            }
            let core = a.clone();
            (x, a, core)
        }
        DCore::Square | DCore::BoxSlash => {
            let a: Vec<usize> = (1..=2).map(|i| b.vertex(ar(i))).collect();
            let x: Vec<usize> = (1..=2).map(|i| b.vertex(xr(i))).collect();
            for &xi in &x {
                for &aj in &a {
                    b.edge(xi, aj, 1);
                }
            }
            if core == DCore::BoxSlash {
                b.edge(x[0], x[1], 1);
            }
            let core = vec![x[0], a[0], x[1], a[1]];
            (x, a, core)
        }
        DCore::Bot => {
            let a: Vec<usize> = (1..=2).map(|i| b.vertex(ar(i))).collect();
            let x = vec![b.vertex(xr(1))];
            b.edge(x[0], a[0], 1);
            b.edge(x[0], a[1], 1);
            let core = vec![x[0], a[0], a[1]];
            (x, a, core)
        }
    };
    for (i, &xi) in x.iter().enumerate() {
        if !bare.contains(&(i + 1)) {
            b.nabla(xi, 1);
        }
    }
    Side { x, a, core: core_ids }
}

pub fn build_nabla(depth: usize) -> HostGraph {
    let mut b = Builder::default();
    let x = b.vertex(Role::X(0));
    b.nabla(x, 1);
    b.core.push(x);
    b.finish(None, depth, x)
}

pub fn build_host(family: FamilyId, depth: usize) -> Result<HostGraph, HostError> {
    use FamilyId::*;
    let invalid = || Err(HostError::InvalidParams(family));
    let mut b = Builder::default();
    let anchor;
    match family {
        BComma(_) | CComma | DComma(..) => return Err(HostError::UnsupportedFamily(family)),
        A => {
            let x = b.vertex(Role::X(0));
            b.nabla(x, 1);
            b.nabla(x, 1);
            anchor = x;
        }
        B => {
            let x = b.vertex(Role::X(0));
            b.nabla(x, 2);
            b.core.push(x);
            anchor = x;
        }
        D(core) => {
            if matches!(core, DCore::Cycle(n) if n < 3) {
                return invalid();
            }
            let s = d_side(&mut b, core, false, &[]);
            b.core = s.core;
            anchor = b.core[0];
        }
        BSquareWedgeB | BSlashWedgeB | BSlashWedgeSquare => {
            let core = if family == BSlashWedgeB {
                DCore::BoxSlash
            } else {
                DCore::Square
            };
            let s = d_side(&mut b, core, false, &[1]);
            let x1 = s.x[0];
            b.reweight(x1, s.a[0], 2);
            b.reweight(x1, s.a[1], 2);
            b.reweight(x1, s.x[1], 2);
            if family == BSlashWedgeSquare {
                b.edge(s.a[0], s.a[1], 4);
            }
            b.core = s.core;
            anchor = x1;
        }
        BCycleWedgeB(n) | BCycleWedgeFlipB(n) => {
            if n < 3 {
                return invalid();
            }
            let s = d_side(&mut b, DCore::Cycle(n), false, &[1]);
            b.reweight(s.x[0], s.a[0], 2);
            b.reweight(s.x[0], s.a[1], 2);
            b.core = s.core;
            b.core.push(s.x[0]);
            anchor = s.x[0];
        }
        CWedge => {
            let bullet = b.vertex(Role::Bullet(0));
            let x1 = b.vertex(Role::X(1));
            let x2 = b.vertex(Role::X(2));
            b.edge(x1, bullet, 2);
            b.edge(x2, bullet, 2);
            b.edge(x1, x2, 4);
            b.nabla(bullet, 1);
            b.core = vec![bullet, x1, x2];
            anchor = bullet;
        }
        DVee(DCore::Cycle(n), DCore::Cycle(m)) => {
            if n < 3 || m < 3 {
                return invalid();
            }
            let s = d_side(&mut b, DCore::Cycle(n), false, &[1, 2]);
            let t = d_side(&mut b, DCore::Cycle(m), true, &[1, 2]);
            b.identify(s.x[0], t.a[0]);
            b.identify(s.x[1], t.a[2]);
            b.identify(s.a[0], t.x[0]);
            b.identify(s.a[2], t.x[1]);
            b.identify(s.a[1], t.a[1]);
            let bullet = b.vertex(Role::Bullet(0));
            b.identify(bullet, s.a[1]);
            b.core = s.core.iter().chain(&t.core).copied().collect();
            anchor = bullet;
        }
        DVee(p, q) => {
            if [p, q].iter().any(|c| matches!(c, DCore::Cycle(n) if *n < 3)) {
                return invalid();
            }
            let s = d_side(&mut b, p, false, &[1]);
            let t = d_side(&mut b, q, true, &[1]);
            let bullet = b.vertex(Role::Bullet(0));
            b.identify(bullet, s.x[0]);
            b.identify(bullet, t.x[0]);
            b.core = s.core.iter().chain(&t.core).copied().collect();
            b.core.push(bullet);
            anchor = bullet;
        }
        DCycleWedgeSquare(n) | DCycleWedgeSlash(n) | DCycleWedgeFlipSlash(n) => {
            if n < 3 {
                return invalid();
            }
            // Path a1..a_len with x_i joined to a_i and a_{i+1}.
            let len = if family == DCycleWedgeSquare(n) { n - 1 } else { n } as usize;
            let a: Vec<usize> = (1..=len).map(|i| b.vertex(Role::A(i as u8))).collect();
            for i in 0..len - 1 {
                b.edge(a[i], a[i + 1], 1);
                let x = b.vertex(Role::X(i as u8 + 1));
                b.edge(x, a[i], 1);
                b.edge(x, a[i + 1], 1);
                b.nabla(x, 1);
            }
            let b1 = b.vertex(Role::Bullet(1));
            let b2 = b.vertex(Role::Bullet(2));
            b.identify(b1, a[len - 1]);
            b.identify(b2, a[0]);
            let ap: Vec<usize> = (1..=2).map(|i| b.vertex(Role::AP(i))).collect();
            for &v in &ap {
                b.edge(v, a[len - 1], 1);
                b.edge(v, a[0], 1);
            }
            if family != DCycleWedgeSquare(n) {
                b.edge(a[0], a[len - 1], 1);
            }
            b.core = a.iter().chain(&ap).copied().collect();
            anchor = a[0];
        }
        DSquareWedgeSquare | DSlashWedgeSlash => {
            let s = d_side(&mut b, DCore::Square, false, &[1, 2]);
            let bullet = b.vertex(Role::Bullet(0));
            b.edge(s.x[0], bullet, 1);
            b.edge(s.x[1], bullet, 1);
            b.nabla(bullet, 1);
            if family == DSlashWedgeSlash {
                b.edge(s.x[0], s.x[1], 4);
            }
            b.core = s.core;
            b.core.push(bullet);
            anchor = bullet;
        }
        DBoxTimes => {
            let a: Vec<usize> = (1..=4).map(|i| b.vertex(Role::A(i))).collect();
            let x1 = b.vertex(Role::X(1));
            for i in 0..4 {
                b.edge(a[i], a[(i + 1) % 4], 1);
                b.edge(x1, a[i], 1);
            }
            b.nabla(x1, 1);
            b.core = a.clone();
            b.core.push(x1);
            anchor = x1;
        }
    }
    Ok(b.finish(Some(family), depth, anchor))
}

type HostCache = Mutex<HashMap<(FamilyId, usize), Arc<HostGraph>>>;

/// Shared, lazily built host.
pub fn host(family: FamilyId, depth: usize) -> Result<Arc<HostGraph>, HostError> {
    static CACHE: OnceLock<HostCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.lock().unwrap().get(&(family, depth)) {
        return Ok(h.clone());
    }
    let built = Arc::new(build_host(family, depth)?);
    Ok(cache.lock().unwrap().entry((family, depth)).or_insert(built).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nabla_sizes() {
        assert_eq!(build_nabla(0).vertex_count(), 1);
        let t = build_nabla(1);
        assert_eq!((t.vertex_count(), t.edge_count()), (3, 3));
        let t = build_nabla(2);
        assert_eq!((t.vertex_count(), t.edge_count()), (7, 9));
    }

    #[test]
    fn boxtimes_depth_zero() {
        let h = build_host(FamilyId::DBoxTimes, 0).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 8);
        let x1 = h.vertex(Role::X(1)).unwrap();
        assert_eq!(h.degree(x1), 4);
    }

    #[test]
    fn c_wedge_weights() {
        let h = build_host(FamilyId::CWedge, 0).unwrap();
        let [x1, x2, b] = [Role::X(1), Role::X(2), Role::Bullet(0)].map(|r| h.vertex(r).unwrap());
        assert_eq!((h.weight(x1, b), h.weight(x2, b), h.weight(x1, x2)), (2, 2, 4));
        assert_eq!(h.vertex_count(), 3);
    }

    #[test]
    fn cycle_vee_identifications() {
        let h = build_host(FamilyId::d_vee(DCore::Cycle(3), DCore::Cycle(3)), 0).unwrap();
        let bullet = h.vertex(Role::Bullet(0)).unwrap();
        assert_eq!(h.vertex(Role::A(2)), Some(bullet));
        assert_eq!(h.vertex(Role::X(1)), h.vertex(Role::AP(1)));
        assert_eq!(h.vertex(Role::A(3)), h.vertex(Role::XP(2)));
        assert_eq!(h.degree(bullet), 4);
        assert_eq!(h.core().len(), 5);
    }

    #[test]
    fn comma_families_have_no_host() {
        assert!(matches!(
            build_host(FamilyId::CComma, 1),
            Err(HostError::UnsupportedFamily(_))
        ));
    }
}
