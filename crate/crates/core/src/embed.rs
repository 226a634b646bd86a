//! Induced-subgraph embeddings of small weighted graphs into host graphs.

use crate::diagram::UnderlyingGraph;
use crate::hosts::HostGraph;

const UNMAPPED: usize = usize::MAX;

/// Injective map from graph vertices to host vertices.
pub type Embedding = Vec<usize>;

/// Some embedding of `g` onto a full sub-graph of `host` covering the core.
pub fn embed_full_subgraph(g: &UnderlyingGraph, host: &HostGraph) -> Option<Embedding> {
    let mut found = None;
    for_each_embedding(g, host, |m| {
        found = Some(m.to_vec());
        true
    });
    found
}

/// Calls `visit` on every embedding of `g` onto a full sub-graph of `host`
/// containing all core vertices, until `visit` returns `true`. Returns whether
/// the search was stopped by `visit`.
///
/// Hosts with a core are searched with the anchor's preimage ranging over all
/// graph vertices. Hosts without a core are vertex-transitive here (type A), so
/// the first graph vertex is pinned to the anchor.
pub fn for_each_embedding<F>(g: &UnderlyingGraph, host: &HostGraph, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let n = g.vertex_count();
    if n == 0 || n < host.core().len() {
        return false;
    }
    let anchor = host.anchor();
    let roots: Vec<usize> = if host.core().is_empty() {
        vec![0]
    } else {
        (0..n).filter(|&r| g.degree(r) <= host.degree(anchor)).collect()
    };
    for r in roots {
        let (order, parent) = bfs_order(g, r);
        if order.len() != n {
            return false;
        }
        let mut state = Search {
            g,
            host,
            order: &order,
            parent: &parent,
            map: vec![UNMAPPED; n],
            used: Vec::with_capacity(n),
            covered: 0,
        };
        if !state.fits(r, anchor) {
            continue;
        }
        state.assign(r, anchor);
        if state.extend(1, &mut visit) {
            return true;
        }
    }
    false
}

fn bfs_order(g: &UnderlyingGraph, r: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut parent = vec![UNMAPPED; n];
    let mut seen = vec![false; n];
    let mut order = vec![r];
    seen[r] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                order.push(u);
            }
        }
    }
    (order, parent)
}

struct Search<'a> {
    g: &'a UnderlyingGraph,
    host: &'a HostGraph,
    order: &'a [usize],
    parent: &'a [usize],
    map: Vec<usize>,
    used: Vec<usize>,
    covered: usize,
}

impl Search<'_> {
    fn fits(&self, v: usize, h: usize) -> bool {
        if self.used.contains(&h) || self.host.degree(h) < self.g.degree(v) {
            return false;
        }
        self.used.iter().all(|&hu| {
            let u = self.preimage(hu);
            self.host.weight(hu, h) == self.g.weight(u, v)
        })
    }

    fn preimage(&self, h: usize) -> usize {
        self.map.iter().position(|&x| x == h).unwrap()
    }

    fn assign(&mut self, v: usize, h: usize) {
        self.map[v] = h;
        self.used.push(h);
        if self.host.is_core(h) {
            self.covered += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let h = self.map[v];
        self.map[v] = UNMAPPED;
        self.used.pop();
        if self.host.is_core(h) {
            self.covered -= 1;
        }
    }

    fn extend<F: FnMut(&[usize]) -> bool>(&mut self, depth: usize, visit: &mut F) -> bool {
        let core = self.host.core().len();
        if self.order.len() - depth < core - self.covered {
            return false;
        }
        if depth == self.order.len() {
            return self.covered == core && visit(&self.map);
        }
        let v = self.order[depth];
        let hp = self.map[self.parent[v]];
        let want = self.g.weight(self.parent[v], v);
        let candidates: Vec<usize> = self
            .host
            .neighbors(hp)
            .filter(|&(_, w)| w == want)
            .map(|(h, _)| h)
            .collect();
        for h in candidates {
            if !self.fits(v, h) {
                continue;
            }
            self.assign(v, h);
            if self.extend(depth + 1, visit) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}
