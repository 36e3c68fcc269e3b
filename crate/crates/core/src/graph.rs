//! Simple undirected graphs in canonical form.

use std::collections::VecDeque;

use thiserror::Error;

use crate::dsu::DisjointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A simple undirected graph on `0..n`.
///
/// Edges are stored with `u < v`, sorted lexicographically and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Self { n, edges: out })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self.n, &self.edges)
    }

    /// Whether the subgraph induced by `vertices` is connected (empty sets are not).
    pub fn induces_connected(&self, vertices: &[usize]) -> bool {
        if vertices.is_empty() {
            return false;
        }
        let mut inside = vec![false; self.n];
        for &v in vertices {
            inside[v] = true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([vertices[0]]);
        seen[vertices[0]] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        let distinct = {
            let mut s = vertices.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        reached == distinct
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// True iff the graph on `0..vertex_count` has exactly one component.
/// Graphs with at most one vertex are connected.
pub fn is_connected(vertex_count: usize, edges: &[(usize, usize)]) -> bool {
    if vertex_count <= 1 {
        return true;
    }
    let mut dsu = DisjointSet::new(vertex_count);
    for &(u, v) in edges {
        dsu.union(u, v);
        if dsu.components() == 1 {
            return true;
        }
    }
    dsu.components() == 1
}
