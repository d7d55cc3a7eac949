//! Rotation systems (fat graphs) for four-valent curve diagrams: face
//! counting, genus, bounded search for planarising virtual-crossing
//! insertions, and the underlying multigraph with its cut tests.
//!
//! A rotation system lists, for every vertex, its incident darts (edge ends)
//! in clockwise order. Faces are the orbits of "cross the edge, then turn to
//! the next dart clockwise"; with `V` vertices, `E` edges and `F` faces the
//! genus of the unique closed oriented surface in which the embedding is
//! cellular is `(2 − V + E − F) / 2`.

/// A connected rotation system. Darts are `0..rot_next.len()`; `twin` pairs
/// the two darts of each edge; `rot_next` is the clockwise successor at the
/// common vertex; `vertex_of` locates a dart.
#[derive(Clone, Debug)]
pub struct RotationMap {
    rot_next: Vec<u32>,
    twin: Vec<u32>,
    vertex_of: Vec<u32>,
    vertex_count: usize,
}

impl RotationMap {
    /// Builds a rotation system from per-vertex clockwise dart lists. Every
    /// dart must appear in exactly one list; `twin` must be a fixed-point
    /// free involution on the darts.
    pub fn new(vertices: Vec<Vec<u32>>, twin: Vec<u32>) -> RotationMap {
        let dart_count = twin.len();
        let mut rot_next = vec![u32::MAX; dart_count];
        let mut vertex_of = vec![u32::MAX; dart_count];
        for (v, darts) in vertices.iter().enumerate() {
            for (i, &d) in darts.iter().enumerate() {
                assert!(rot_next[d as usize] == u32::MAX, "dart {d} listed twice");
                rot_next[d as usize] = darts[(i + 1) % darts.len()];
                vertex_of[d as usize] = v as u32;
            }
        }
        assert!(
            rot_next.iter().all(|&d| d != u32::MAX),
            "every dart must belong to a vertex"
        );
        for (d, &t) in twin.iter().enumerate() {
            assert!(t as usize != d && twin[t as usize] == d as u32, "twin must pair darts");
        }
        RotationMap {
            rot_next,
            twin,
            vertex_of,
            vertex_count: vertices.len(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    /// Number of faces: orbits of `d ↦ rot_next(twin(d))`.
    pub fn face_count(&self) -> usize {
        let n = self.twin.len();
        let mut seen = vec![false; n];
        let mut faces = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = self.rot_next[self.twin[d] as usize] as usize;
            }
        }
        faces
    }

    /// Genus of the closed oriented surface in which this map is cellular.
    pub fn genus(&self) -> usize {
        let v = self.vertex_count as isize;
        let e = self.edge_count() as isize;
        let f = self.face_count() as isize;
        let twice = 2 - v + e - f;
        assert!(twice >= 0 && twice % 2 == 0, "Euler count is off: V={v} E={e} F={f}");
        (twice / 2) as usize
    }

    /// Edges as dart pairs `(d, twin(d))` with `d < twin(d)`.
    fn edge_darts(&self) -> Vec<(u32, u32)> {
        (0..self.twin.len() as u32)
            .filter(|&d| d < self.twin[d as usize])
            .map(|d| (d, self.twin[d as usize]))
            .collect()
    }

    /// Inserts a transversal four-valent vertex joining a point on edge `e`
    /// and a point on edge `f` (darts index [`Self::edge_darts`]). The two
    /// strands cross at the new vertex; `flip` selects the orientation of the
    /// second strand. `e == f` splits one edge twice and crosses its two
    /// pieces.
    fn with_crossing_inserted(&self, e: usize, f: usize, flip: bool) -> RotationMap {
        let edges = self.edge_darts();
        let base = self.twin.len() as u32;
        // Four new darts at the new vertex, clockwise v0,v1,v2,v3; strand A
        // runs v0→v2, strand B runs v1→v3 (transversal by construction).
        let (v0, v1, v2, v3) = (base, base + 1, base + 2, base + 3);
        let mut twin = self.twin.clone();
        twin.extend_from_slice(&[0, 0, 0, 0]);
        let connect = |a: u32, b: u32, tw: &mut Vec<u32>| {
            tw[a as usize] = b;
            tw[b as usize] = a;
        };
        if e == f {
            let (p, q) = edges[e];
            // The edge runs p … q; cut it twice and cross the middle piece
            // over the outer pieces: p–v0, v2–v1 (middle), v3–q.
            if !flip {
                connect(p, v0, &mut twin);
                connect(v2, v1, &mut twin);
                connect(v3, q, &mut twin);
            } else {
                connect(p, v0, &mut twin);
                connect(v2, v3, &mut twin);
                connect(v1, q, &mut twin);
            }
        } else {
            let (p, q) = edges[e];
            let (r, s) = edges[f];
            connect(p, v0, &mut twin);
            connect(v2, q, &mut twin);
            if !flip {
                connect(r, v1, &mut twin);
                connect(v3, s, &mut twin);
            } else {
                connect(s, v1, &mut twin);
                connect(v3, r, &mut twin);
            }
        }
        let mut rot_next = self.rot_next.clone();
        rot_next.extend_from_slice(&[v1, v2, v3, v0]);
        let mut vertex_of = self.vertex_of.clone();
        vertex_of.extend_from_slice(&[self.vertex_count as u32; 4]);
        RotationMap {
            rot_next,
            twin,
            vertex_of,
            vertex_count: self.vertex_count + 1,
        }
    }

    /// Smallest number of virtual (transversal, genus-carrying) crossings
    /// whose insertion makes the map planar, searched up to `max_k` (≤ 2).
    /// Returns `Some(0)` for already-planar maps and `None` if no insertion
    /// of at most `max_k` crossings planarises the map.
    pub fn min_virtual_crossings(&self, max_k: usize) -> Option<usize> {
        if self.genus() == 0 {
            return Some(0);
        }
        if max_k == 0 {
            return None;
        }
        let m = self.edge_count();
        let mut second_round: Vec<RotationMap> = Vec::new();
        for e in 0..m {
            for f in e..m {
                for flip in [false, true] {
                    let refined = self.with_crossing_inserted(e, f, flip);
                    if refined.genus() == 0 {
                        return Some(1);
                    }
                    if max_k >= 2 {
                        second_round.push(refined);
                    }
                }
            }
        }
        for refined in &second_round {
            let m2 = refined.edge_count();
            for e in 0..m2 {
                for f in e..m2 {
                    for flip in [false, true] {
                        if refined.with_crossing_inserted(e, f, flip).genus() == 0 {
                            return Some(2);
                        }
                    }
                }
            }
        }
        None
    }

    /// The underlying multigraph (vertices and edge endpoint pairs).
    pub fn multigraph(&self) -> MultiGraph {
        MultiGraph {
            vertex_count: self.vertex_count,
            edges: self
                .edge_darts()
                .iter()
                .map(|&(d, t)| {
                    (self.vertex_of[d as usize] as usize, self.vertex_of[t as usize] as usize)
                })
                .collect(),
        }
    }
}

/// An undirected multigraph (loops and parallel edges allowed).
#[derive(Clone, Debug)]
pub struct MultiGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> MultiGraph {
        assert!(edges
            .iter()
            .all(|&(u, v)| u < vertex_count && v < vertex_count));
        MultiGraph {
            vertex_count,
            edges,
        }
    }

    fn adjacency(&self, skip: &[usize]) -> Vec<Vec<(usize, usize)>> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if skip.contains(&id) {
                continue;
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        adj
    }

    /// Connectivity ignoring the listed edges.
    pub fn is_connected_without(&self, skip: &[usize]) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency(skip);
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(v, _) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    /// True if removing some single vertex (with its edges) disconnects the
    /// remaining vertices. Loops are ignored; parallel edges are respected
    /// (two vertices joined by two parallel edges are not separated by
    /// either endpoint). Graphs with fewer than 3 vertices have no cut
    /// vertex.
    pub fn has_cut_vertex(&self) -> bool {
        let n = self.vertex_count;
        if n < 3 {
            return false;
        }
        // Iterative depth-first search computing low-links; a non-root vertex
        // u is a cut vertex iff some child subtree cannot reach above u; the
        // root is one iff it has two or more children. Each non-loop edge is
        // usable once in each direction except the tree edge we arrived by.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                continue;
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let mut num = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut counter = 0usize;
        // Stack frames: (vertex, parent edge id, next adjacency index).
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        num[0] = 0;
        low[0] = 0;
        counter += 1;
        let mut root_children = 0usize;
        let mut is_cut = vec![false; n];
        while let Some(top) = stack.last_mut() {
            let (u, pedge, idx) = (top.0, top.1, top.2);
            if idx < adj[u].len() {
                top.2 += 1;
                let (v, id) = adj[u][idx];
                if id == pedge {
                    continue;
                }
                if num[v] == usize::MAX {
                    num[v] = counter;
                    low[v] = counter;
                    counter += 1;
                    if u == 0 {
                        root_children += 1;
                    }
                    stack.push((v, id, 0));
                } else {
                    low[u] = low[u].min(num[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= num[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if num.contains(&usize::MAX) {
            // Disconnected ignoring loops: treat as separable.
            return true;
        }
        is_cut[0] = root_children >= 2;
        is_cut.iter().any(|&b| b)
    }

    /// True if some pair of distinct non-loop edges disconnects the graph
    /// (including a single bridge counted twice — though four-valent curve
    /// graphs have no bridges). Brute force over edge pairs.
    pub fn has_two_edge_cut(&self) -> bool {
        let ids: Vec<usize> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| u != v)
            .map(|(id, _)| id)
            .collect();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                if !self.is_connected_without(&[a, b]) {
                    return true;
                }
            }
        }
        false
    }
}
