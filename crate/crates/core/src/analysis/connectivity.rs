//! Classical vertex connectivity, bipartiteness and odd girth.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::topology::{Adjacency, Topology};

/// Largest order accepted by [`vertex_connectivity`].
pub const MAX_CONNECTIVITY_ORDER: usize = 1024;

/// Unit-capacity flow network on split vertices: `v_in = 2v`, `v_out = 2v + 1`.
struct SplitNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u8>,
    next: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl SplitNetwork {
    fn new<G: Adjacency + ?Sized>(g: &G) -> Self {
        let order = g.order();
        let mut net = SplitNetwork {
            head: vec![NONE; 2 * order],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        };
        for v in 0..order {
            net.add(2 * v, 2 * v + 1, 1);
            for w in g.neighbor_list(v) {
                // out(v) -> in(w); capacity is only ever 0/1 since each vertex is 1
                net.add(2 * v + 1, 2 * w, 1);
            }
        }
        net
    }

    fn add(&mut self, a: usize, b: usize, c: u8) {
        for (x, y, cc) in [(a, b, c), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(cc);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// Internally vertex-disjoint `s`-`t` paths, stopping once `limit` is reached.
    fn disjoint_paths(&self, s: usize, t: usize, limit: usize) -> usize {
        let mut cap = self.cap.clone();
        let src = 2 * s + 1;
        let dst = 2 * t;
        let mut flow = 0;
        let mut parent = vec![NONE; self.head.len()];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = NONE);
            let mut queue = VecDeque::from([src]);
            let mut reached = false;
            'bfs: while let Some(a) = queue.pop_front() {
                let mut e = self.head[a];
                while e != NONE {
                    let b = self.to[e];
                    if cap[e] > 0 && b != src && parent[b] == NONE {
                        parent[b] = e;
                        if b == dst {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(b);
                    }
                    e = self.next[e];
                }
            }
            if !reached {
                break;
            }
            let mut b = dst;
            while b != src {
                let e = parent[b];
                cap[e] -= 1;
                cap[e ^ 1] += 1;
                b = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Vertex connectivity of an arbitrary graph by max-flow over non-adjacent pairs.
///
/// Complete graphs report `order - 1`.
pub fn vertex_connectivity_of<G: Adjacency + ?Sized>(g: &G) -> Result<usize> {
    let order = g.order();
    if order > MAX_CONNECTIVITY_ORDER {
        return Err(Error::Guard(format!(
            "vertex connectivity needs order <= {MAX_CONNECTIVITY_ORDER}, got {order}"
        )));
    }
    if order <= 1 {
        return Ok(0);
    }
    let net = SplitNetwork::new(g);
    let mut best = order - 1;
    // some minimum separator misses one of the first best+1 vertices
    let mut i = 0;
    while i <= best && i < order {
        for j in i + 1..order {
            if !g.adjacent(i, j) {
                best = best.min(net.disjoint_paths(i, j, best));
            }
        }
        i += 1;
    }
    Ok(best)
}

/// Vertex connectivity of `t`; refuses orders above [`MAX_CONNECTIVITY_ORDER`].
pub fn vertex_connectivity(t: &Topology) -> Result<usize> {
    vertex_connectivity_of(t)
}

/// Two-colourability by traversal.
pub fn is_bipartite<G: Adjacency + ?Sized>(g: &G) -> bool {
    let mut colour = vec![u8::MAX; g.order()];
    for s in 0..g.order() {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for b in g.neighbor_list(a) {
                if colour[b] == u8::MAX {
                    colour[b] = colour[a] ^ 1;
                    queue.push_back(b);
                } else if colour[b] == colour[a] {
                    return false;
                }
            }
        }
    }
    true
}

/// Length of a shortest odd cycle, or `None` for bipartite graphs.
pub fn odd_girth<G: Adjacency + ?Sized>(g: &G) -> Option<usize> {
    let order = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; order];
    for root in 0..order {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[a] + 1 >= b) {
                break;
            }
            for b in g.neighbor_list(a) {
                if dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                } else if dist[b] == dist[a] {
                    let len = 2 * dist[a] + 1;
                    best = Some(best.map_or(len, |x| x.min(len)));
                }
            }
        }
    }
    best
}
