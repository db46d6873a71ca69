//! Rotation-system representation of rooted planar maps.
//!
//! A map on `m` edges is stored as a permutation `sigma` of the darts
//! `1..=2m`, where `sigma(d)` is the next dart in *clockwise* order around
//! the vertex holding `d`. The edge pairing is fixed: darts `2k-1` and `2k`
//! are the two sides of edge `k`. Faces are the orbits of the boundary-walk
//! permutation `d -> sigma^{-1}(alpha(d))`; every face lies to the *right*
//! of each dart of its orbit, and the orbit walks origin-to-head along the
//! boundary. A rooted map carries a root dart whose face (on its right) is
//! the outer face.

use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

/// A dart (half-edge), numbered from 1. Darts `2k-1` and `2k` form edge `k`.
pub type Dart = u32;
/// An edge id, numbered from 1.
pub type EdgeId = u32;
/// A vertex, identified by the smallest dart of its rotation orbit.
pub type VertexId = u32;
/// A face, identified by the smallest dart of its boundary orbit.
pub type FaceId = u32;

/// Errors raised when assembling or parsing a map.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("sigma is not a permutation of 1..=2m")]
    NotAPermutation,
    #[error("dart set is not connected under sigma and alpha")]
    Disconnected,
    #[error("Euler characteristic {0} != 2, not a planar (genus 0) map")]
    NonZeroGenus(i64),
    #[error("root dart out of range, or missing on a nonempty map")]
    BadRoot,
    #[error("parse error: {0}")]
    Parse(String),
}

/// The edge pairing: `alpha(2k-1) = 2k`, `alpha(2k) = 2k-1`.
#[inline]
pub fn alpha(d: Dart) -> Dart {
    if d % 2 == 1 {
        d + 1
    } else {
        d - 1
    }
}

/// Edge of a dart.
#[inline]
pub fn edge_of(d: Dart) -> EdgeId {
    d.div_ceil(2)
}

/// The two darts of an edge, odd side first.
#[inline]
pub fn darts_of_edge(e: EdgeId) -> (Dart, Dart) {
    (2 * e - 1, 2 * e)
}

/// Membership flags for the map families tracked by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FamilyFlags {
    pub loopless: bool,
    pub nonseparable: bool,
    pub triangulation: bool,
    pub quad_triangulation: bool,
    pub irreducible: bool,
}

/// A corner of a map: the angular sector between `dart` and `sigma(dart)`
/// at `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub vertex: VertexId,
    pub dart: Dart,
}

/// A face with its boundary orbit, the outer-face id, and the corner list.
pub type FaceScan = (Vec<(FaceId, Vec<Dart>)>, Option<FaceId>, Vec<Corner>);

/// Complete invariant of a rooted (or anchored) map: `[m, root', sigma'...]`
/// after relabeling darts by the canonical traversal. Two rooted maps are
/// isomorphic iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u32>);

/// A planar map given by a rotation system, with an optional root dart.
///
/// The root is mandatory for ordinary rooted maps (`m >= 1`); it is absent
/// for the vertex-map (`m = 0`) and for pole-marked unrooted carriers used
/// by bipolar orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedMap {
    m: u32,
    sigma: Vec<Dart>,     // index 0 unused
    sigma_inv: Vec<Dart>, // index 0 unused
    root: Option<Dart>,
    vertex_rep: Vec<Dart>, // per dart: smallest dart of its sigma orbit
    face_rep: Vec<Dart>,   // per dart: smallest dart of its face orbit
    vertices: Vec<VertexId>,
    faces: Vec<FaceId>,
}

impl RootedMap {
    /// The one-vertex, zero-edge map.
    pub fn vertex_map() -> RootedMap {
        RootedMap {
            m: 0,
            sigma: vec![0],
            sigma_inv: vec![0],
            root: None,
            vertex_rep: vec![0],
            face_rep: vec![0],
            vertices: vec![],
            faces: vec![],
        }
    }

    /// Validates and assembles a rooted map from a successor table.
    ///
    /// `sigma_table[i]` is the clockwise successor of dart `i+1`. A root is
    /// required whenever `m >= 1`.
    pub fn build(m: u32, sigma_table: &[Dart], root: Dart) -> Result<RootedMap, MapError> {
        if m == 0 {
            return if sigma_table.is_empty() && root == 0 {
                Ok(RootedMap::vertex_map())
            } else {
                Err(MapError::BadRoot)
            };
        }
        Self::build_inner(m, sigma_table, Some(root))
    }

    /// Like [`RootedMap::build`] but allows a rootless carrier for `m >= 1`
    /// (pole-marked use); plain rooted maps should use `build`.
    pub fn build_with_optional_root(
        m: u32,
        sigma_table: &[Dart],
        root: Option<Dart>,
    ) -> Result<RootedMap, MapError> {
        if m == 0 {
            return if sigma_table.is_empty() && root.is_none() {
                Ok(RootedMap::vertex_map())
            } else {
                Err(MapError::BadRoot)
            };
        }
        Self::build_inner(m, sigma_table, root)
    }

    fn build_inner(m: u32, sigma_table: &[Dart], root: Option<Dart>) -> Result<RootedMap, MapError> {
        let nd = 2 * m as usize;
        if sigma_table.len() != nd {
            return Err(MapError::NotAPermutation);
        }
        let mut seen = vec![false; nd + 1];
        for &img in sigma_table {
            if img == 0 || img as usize > nd || seen[img as usize] {
                return Err(MapError::NotAPermutation);
            }
            seen[img as usize] = true;
        }
        if let Some(r) = root {
            if r == 0 || r as usize > nd {
                return Err(MapError::BadRoot);
            }
        }

        let mut sigma = vec![0u32; nd + 1];
        sigma[1..].copy_from_slice(sigma_table);
        let mut sigma_inv = vec![0u32; nd + 1];
        for d in 1..=nd {
            sigma_inv[sigma[d] as usize] = d as u32;
        }

        // connectivity under <sigma, alpha>
        let mut comp = vec![false; nd + 1];
        let mut stack = vec![1u32];
        comp[1] = true;
        let mut count = 0usize;
        while let Some(d) = stack.pop() {
            count += 1;
            for n in [sigma[d as usize], alpha(d)] {
                if !comp[n as usize] {
                    comp[n as usize] = true;
                    stack.push(n);
                }
            }
        }
        if count != nd {
            return Err(MapError::Disconnected);
        }

        let vertex_rep = orbit_reps(nd, |d| sigma[d as usize]);
        let face_rep = orbit_reps(nd, |d| sigma_inv[alpha(d) as usize]);
        let vertices = rep_list(&vertex_rep);
        let faces = rep_list(&face_rep);

        let chi = vertices.len() as i64 - m as i64 + faces.len() as i64;
        if chi != 2 {
            return Err(MapError::NonZeroGenus(chi));
        }

        Ok(RootedMap {
            m,
            sigma,
            sigma_inv,
            root,
            vertex_rep,
            face_rep,
            vertices,
            faces,
        })
    }

    pub fn n_edges(&self) -> u32 {
        self.m
    }

    pub fn n_darts(&self) -> u32 {
        2 * self.m
    }

    pub fn root(&self) -> Option<Dart> {
        self.root
    }

    /// Returns a copy rooted at `root` (which must be a valid dart).
    pub fn with_root(&self, root: Dart) -> RootedMap {
        debug_assert!(root >= 1 && root <= self.n_darts());
        let mut m = self.clone();
        m.root = Some(root);
        m
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d as usize]
    }

    #[inline]
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d as usize]
    }

    /// Next dart of the boundary walk of the face to the right of `d`.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.sigma_inv[alpha(d) as usize]
    }

    /// Previous dart of the same boundary walk.
    #[inline]
    pub fn face_prev(&self, d: Dart) -> Dart {
        alpha(self.sigma(d))
    }

    #[inline]
    pub fn vertex_of(&self, d: Dart) -> VertexId {
        self.vertex_rep[d as usize]
    }

    /// Face to the right of `d`.
    #[inline]
    pub fn face_of(&self, d: Dart) -> FaceId {
        self.face_rep[d as usize]
    }

    /// Face to the left of `d`.
    #[inline]
    pub fn face_left_of(&self, d: Dart) -> FaceId {
        self.face_rep[alpha(d) as usize]
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        1..=self.n_darts()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        1..=self.m
    }

    /// Number of vertices (the vertex-map has one).
    pub fn n_vertices(&self) -> usize {
        if self.m == 0 {
            1
        } else {
            self.vertices.len()
        }
    }

    pub fn n_faces(&self) -> usize {
        if self.m == 0 {
            1
        } else {
            self.faces.len()
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn faces(&self) -> &[FaceId] {
        &self.faces
    }

    /// The outer face: the face on the right of the root dart.
    pub fn outer_face(&self) -> Option<FaceId> {
        self.root.map(|r| self.face_of(r))
    }

    /// Darts around the vertex of `start`, clockwise, beginning at `start`.
    pub fn vertex_darts(&self, start: Dart) -> Vec<Dart> {
        let mut out = vec![start];
        let mut d = self.sigma(start);
        while d != start {
            out.push(d);
            d = self.sigma(d);
        }
        out
    }

    /// Boundary walk of the face to the right of `start`, beginning at `start`.
    pub fn face_darts(&self, start: Dart) -> Vec<Dart> {
        let mut out = vec![start];
        let mut d = self.face_next(start);
        while d != start {
            out.push(d);
            d = self.face_next(d);
        }
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertex_darts(v).len()
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.face_darts(f).len()
    }

    /// Endpoints of edge `e`: (vertex of the odd dart, vertex of the even dart).
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let (a, b) = darts_of_edge(e);
        (self.vertex_of(a), self.vertex_of(b))
    }

    pub fn is_loop_edge(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        u == v
    }

    /// No loops and no two edges with the same endpoint pair.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        for e in self.edge_ids() {
            let (u, v) = self.endpoints(e);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    /// Edge lookup by endpoints; only meaningful on simple maps.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_ids()
            .find(|&e| {
                let (a, b) = self.endpoints(e);
                (a, b) == (u, v) || (a, b) == (v, u)
            })
    }

    /// The dart with origin `u` on edge `e`; panics if `u` is not an endpoint.
    pub fn dart_at(&self, e: EdgeId, u: VertexId) -> Dart {
        let (a, b) = darts_of_edge(e);
        if self.vertex_of(a) == u {
            a
        } else {
            assert_eq!(self.vertex_of(b), u, "vertex not on edge");
            b
        }
    }

    /// All faces with their boundary orbits, the outer face, and the corner
    /// list in dart order. The corner at `(v, d)` spans from `d` clockwise
    /// to `sigma(d)`.
    pub fn faces_and_corners(&self) -> FaceScan {
        let faces = self
            .faces
            .iter()
            .map(|&f| (f, self.face_darts(f)))
            .collect();
        let corners = self
            .darts()
            .map(|d| Corner {
                vertex: self.vertex_of(d),
                dart: d,
            })
            .collect();
        (faces, self.outer_face(), corners)
    }

    /// Rotation lists per vertex (vertices in rep order, orbits starting at
    /// the rep dart). The raw material for surgical edits.
    pub fn rotation_lists(&self) -> Vec<Vec<Dart>> {
        self.vertices.iter().map(|&v| self.vertex_darts(v)).collect()
    }

    /// Canonical dart labels from a breadth-first traversal anchored at
    /// `anchor`. The first dart visited on an edge gets the next odd label,
    /// its partner the even one.
    pub fn canonical_labels(&self, anchor: Dart) -> Vec<u32> {
        let nd = self.n_darts() as usize;
        let mut label = vec![0u32; nd + 1];
        let mut next_odd = 1u32;
        let mut queue = VecDeque::new();
        let touch = |d: Dart, label: &mut Vec<u32>, queue: &mut VecDeque<Dart>, next_odd: &mut u32| {
            if label[d as usize] == 0 {
                let a = alpha(d);
                if label[a as usize] != 0 {
                    label[d as usize] = label[a as usize] + 1;
                } else {
                    label[d as usize] = *next_odd;
                    *next_odd += 2;
                }
                queue.push_back(d);
            }
        };
        touch(anchor, &mut label, &mut queue, &mut next_odd);
        while let Some(d) = queue.pop_front() {
            touch(self.sigma(d), &mut label, &mut queue, &mut next_odd);
            touch(alpha(d), &mut label, &mut queue, &mut next_odd);
        }
        label
    }

    /// The map relabeled by `labels` (a dart bijection compatible with the
    /// edge pairing), rooted at the image of `anchor`.
    pub fn relabeled(&self, labels: &[u32], anchor: Option<Dart>) -> RootedMap {
        let nd = self.n_darts() as usize;
        let mut sigma_new = vec![0u32; nd];
        for d in 1..=nd {
            sigma_new[labels[d] as usize - 1] = labels[self.sigma[d] as usize];
        }
        RootedMap::build_with_optional_root(self.m, &sigma_new, anchor.map(|a| labels[a as usize]))
            .expect("relabeling preserves validity")
    }

    /// Canonical form anchored at the root. Equal forms iff equal rooted maps.
    pub fn canonical_form(&self) -> CanonicalForm {
        if self.m == 0 {
            return CanonicalForm(vec![0]);
        }
        let root = self.root.expect("canonical_form requires a rooted map");
        self.canonical_form_anchored(root)
    }

    /// Canonical form anchored at an arbitrary dart (used for pole-marked
    /// structures, whose anchor is the outer dart at the source).
    pub fn canonical_form_anchored(&self, anchor: Dart) -> CanonicalForm {
        let labels = self.canonical_labels(anchor);
        let nd = self.n_darts() as usize;
        let mut data = Vec::with_capacity(nd + 2);
        data.push(self.m);
        data.push(labels[anchor as usize]); // always 1
        let mut inv = vec![0u32; nd + 1];
        for d in 1..=nd {
            inv[labels[d] as usize] = d as u32;
        }
        for l in 1..=nd {
            data.push(labels[self.sigma[inv[l] as usize] as usize]);
        }
        CanonicalForm(data)
    }

    /// The canonically relabeled copy of a rooted map.
    pub fn canonicalized(&self) -> RootedMap {
        if self.m == 0 {
            return self.clone();
        }
        let root = self.root.expect("canonicalized requires a rooted map");
        let labels = self.canonical_labels(root);
        self.relabeled(&labels, Some(root))
    }

    /// Cut vertices of the underlying multigraph (lowpoint depth-first scan).
    pub fn cut_vertices(&self) -> Vec<VertexId> {
        if self.m == 0 {
            return vec![];
        }
        let verts = &self.vertices;
        let idx: HashMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = verts.len();
        // adjacency as (neighbor index, edge id); loops are irrelevant here
        let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![vec![]; n];
        for e in self.edge_ids() {
            let (u, v) = self.endpoints(e);
            if u == v {
                continue;
            }
            let (ui, vi) = (idx[&u], idx[&v]);
            adj[ui].push((vi, e));
            adj[vi].push((ui, e));
        }

        struct Scan<'a> {
            adj: &'a [Vec<(usize, EdgeId)>],
            disc: Vec<usize>,
            low: Vec<usize>,
            cut: Vec<bool>,
            timer: usize,
        }
        impl Scan<'_> {
            fn go(&mut self, u: usize, parent_edge: Option<EdgeId>) {
                self.disc[u] = self.timer;
                self.low[u] = self.timer;
                self.timer += 1;
                let mut children = 0usize;
                for k in 0..self.adj[u].len() {
                    let (v, e) = self.adj[u][k];
                    if Some(e) == parent_edge {
                        continue; // only the tree edge itself; parallel copies count
                    }
                    if self.disc[v] == usize::MAX {
                        children += 1;
                        self.go(v, Some(e));
                        self.low[u] = self.low[u].min(self.low[v]);
                        if parent_edge.is_some() && self.low[v] >= self.disc[u] {
                            self.cut[u] = true;
                        }
                    } else {
                        self.low[u] = self.low[u].min(self.disc[v]);
                    }
                }
                if parent_edge.is_none() && children > 1 {
                    self.cut[u] = true;
                }
            }
        }
        let mut scan = Scan {
            adj: &adj,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            cut: vec![false; n],
            timer: 0,
        };
        scan.go(0, None);
        verts
            .iter()
            .enumerate()
            .filter(|&(i, _)| scan.cut[i])
            .map(|(_, &v)| v)
            .collect()
    }

    /// All 3-cycles of a simple map, as sorted vertex triples.
    pub fn three_cycles(&self) -> Vec<[VertexId; 3]> {
        debug_assert!(self.is_simple());
        let mut nbrs: HashMap<VertexId, HashSet<VertexId>> = HashMap::new();
        for e in self.edge_ids() {
            let (u, v) = self.endpoints(e);
            nbrs.entry(u).or_default().insert(v);
            nbrs.entry(v).or_default().insert(u);
        }
        let mut out = vec![];
        let vs = &self.vertices;
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if !nbrs[&a].contains(&b) {
                    continue;
                }
                for &c in vs.iter().skip(j + 1) {
                    if nbrs[&a].contains(&c) && nbrs[&b].contains(&c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Does some face have exactly the edges `{ab, bc, ca}` as its boundary?
    pub fn cycle_is_facial(&self, t: &[VertexId; 3]) -> bool {
        let ea = self.edge_between(t[0], t[1]).unwrap();
        let eb = self.edge_between(t[1], t[2]).unwrap();
        let ec = self.edge_between(t[2], t[0]).unwrap();
        let mut want = [ea, eb, ec];
        want.sort_unstable();
        self.faces.iter().any(|&f| {
            let ds = self.face_darts(f);
            if ds.len() != 3 {
                return false;
            }
            let mut es = [edge_of(ds[0]), edge_of(ds[1]), edge_of(ds[2])];
            es.sort_unstable();
            es == want
        })
    }

    /// Family membership of a rooted map.
    pub fn classify(&self) -> FamilyFlags {
        let mut flags = FamilyFlags::default();
        flags.loopless = self.edge_ids().all(|e| !self.is_loop_edge(e));
        flags.nonseparable = flags.loopless && self.m >= 1 && self.cut_vertices().is_empty();
        if self.m == 0 || !self.is_simple() {
            return flags;
        }
        let outer = self.outer_face().expect("classify requires a rooted map");
        let all_deg3 = self.faces.iter().all(|&f| self.face_degree(f) == 3);
        flags.triangulation = all_deg3 && self.m >= 3;
        let outer_darts = self.face_darts(outer);
        if outer_darts.len() == 4 {
            let ovs: HashSet<VertexId> = outer_darts.iter().map(|&d| self.vertex_of(d)).collect();
            let inner_deg3 = self
                .faces
                .iter()
                .all(|&f| f == outer || self.face_degree(f) == 3);
            flags.quad_triangulation = ovs.len() == 4 && inner_deg3;
        }
        if flags.quad_triangulation {
            flags.irreducible = self.three_cycles().iter().all(|t| self.cycle_is_facial(t));
        }
        flags
    }

    /// Deletes edge `e`; remaining edges shift down by one. Returns the new
    /// map and the dart relabeling (0 for the two removed darts).
    ///
    /// `new_root` is given in old labels and must not lie on `e`.
    pub fn delete_edge(&self, e: EdgeId, new_root: Option<Dart>) -> (RootedMap, Vec<Dart>) {
        assert!(self.m >= 1 && e >= 1 && e <= self.m);
        let nd = self.n_darts() as usize;
        let (da, db) = darts_of_edge(e);
        let mut relabel = vec![0u32; nd + 1];
        for d in 1..=nd as u32 {
            if d == da || d == db {
                continue;
            }
            relabel[d as usize] = if edge_of(d) < e { d } else { d - 2 };
        }
        let mut sigma_new = vec![0u32; nd - 2];
        for d in 1..=nd as u32 {
            if d == da || d == db {
                continue;
            }
            // skip deleted darts in the rotation
            let mut s = self.sigma(d);
            while s == da || s == db {
                s = self.sigma(s);
            }
            sigma_new[relabel[d as usize] as usize - 1] = relabel[s as usize];
        }
        let root = new_root.map(|r| {
            assert!(r != da && r != db);
            relabel[r as usize]
        });
        let map = RootedMap::build_with_optional_root(self.m - 1, &sigma_new, root)
            .expect("edge deletion kept the map valid");
        (map, relabel)
    }

    /// The submap on the kept edges: kept darts preserve their relative
    /// rotation order, edges are renumbered in increasing old order, and
    /// vertices without kept darts disappear. Returns the new map and the
    /// dart relabeling (0 for dropped darts).
    pub fn restrict_edges(
        &self,
        keep: &[bool],
        root: Option<Dart>,
    ) -> Result<(RootedMap, Vec<Dart>), MapError> {
        assert_eq!(keep.len(), self.m as usize);
        let nd = self.n_darts() as usize;
        let mut dart_map = vec![0u32; nd + 1];
        let mut k = 0u32;
        let mut b = MapBuilder::new();
        for e in self.edge_ids() {
            if keep[e as usize - 1] {
                k += 1;
                b.new_edge();
                dart_map[2 * e as usize - 1] = 2 * k - 1;
                dart_map[2 * e as usize] = 2 * k;
            }
        }
        for &v in self.vertices() {
            let rot: Vec<Dart> = self
                .vertex_darts(v)
                .into_iter()
                .filter(|&d| dart_map[d as usize] != 0)
                .map(|d| dart_map[d as usize])
                .collect();
            if !rot.is_empty() {
                b.add_vertex(rot);
            }
        }
        let map = b.build(root.map(|r| dart_map[r as usize]))?;
        Ok((map, dart_map))
    }

    /// Inserts a new edge with its odd dart placed clockwise-after
    /// `anchor_a` and its even dart clockwise-after `anchor_b` (anchors at
    /// the two endpoints; existing labels are preserved). Returns the map
    /// and the new odd dart `2m+1`.
    pub fn insert_edge_after(&self, anchor_a: Dart, anchor_b: Dart, root: Option<Dart>) -> (RootedMap, Dart) {
        let nd = self.n_darts();
        let (da, db) = (nd + 1, nd + 2);
        let mut sigma_new: Vec<Dart> = Vec::with_capacity(nd as usize + 2);
        for d in 1..=nd {
            sigma_new.push(self.sigma(d));
        }
        sigma_new.push(0); // da
        sigma_new.push(0); // db
        let set = |v: &mut Vec<Dart>, d: Dart, img: Dart| v[d as usize - 1] = img;
        if anchor_a == anchor_b {
            // both new darts in the same corner: da first, then db
            let after = self.sigma(anchor_a);
            set(&mut sigma_new, anchor_a, da);
            set(&mut sigma_new, da, db);
            set(&mut sigma_new, db, after);
        } else {
            let after_a = self.sigma(anchor_a);
            let after_b = self.sigma(anchor_b);
            set(&mut sigma_new, anchor_a, da);
            set(&mut sigma_new, da, after_a);
            set(&mut sigma_new, anchor_b, db);
            set(&mut sigma_new, db, after_b);
        }
        let map = RootedMap::build_with_optional_root(self.m + 1, &sigma_new, root)
            .expect("edge insertion kept the map valid");
        (map, da)
    }
}

fn orbit_reps(nd: usize, next: impl Fn(Dart) -> Dart) -> Vec<Dart> {
    let mut rep = vec![0u32; nd + 1];
    for d in 1..=nd as u32 {
        if rep[d as usize] != 0 {
            continue;
        }
        // find min over the orbit
        let mut min = d;
        let mut x = next(d);
        while x != d {
            min = min.min(x);
            x = next(x);
        }
        rep[d as usize] = min;
        let mut x = next(d);
        while x != d {
            rep[x as usize] = min;
            x = next(x);
        }
    }
    rep
}

fn rep_list(rep: &[Dart]) -> Vec<Dart> {
    let mut out: Vec<Dart> = rep
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(i, &r)| r == i as u32)
        .map(|(_, &r)| r)
        .collect();
    out.sort_unstable();
    out
}

/// Incremental construction of a map from per-vertex rotations.
///
/// Edges are allocated in creation order, so builder darts coincide with the
/// final dart labels.
#[derive(Default)]
pub struct MapBuilder {
    n_edges: u32,
    rotations: Vec<Vec<Dart>>,
}

impl MapBuilder {
    pub fn new() -> MapBuilder {
        MapBuilder::default()
    }

    /// Allocates edge `k`, returning its darts `(2k-1, 2k)`.
    pub fn new_edge(&mut self) -> (Dart, Dart) {
        self.n_edges += 1;
        darts_of_edge(self.n_edges)
    }

    /// Registers the full clockwise rotation of one vertex.
    pub fn add_vertex(&mut self, rotation: Vec<Dart>) {
        self.rotations.push(rotation);
    }

    /// Assembles the map; every allocated dart must appear in exactly one
    /// rotation.
    pub fn build(self, root: Option<Dart>) -> Result<RootedMap, MapError> {
        let nd = 2 * self.n_edges as usize;
        let mut sigma = vec![0u32; nd];
        let mut placed = vec![false; nd + 1];
        for rot in &self.rotations {
            for (i, &d) in rot.iter().enumerate() {
                if d == 0 || d as usize > nd || placed[d as usize] {
                    return Err(MapError::NotAPermutation);
                }
                placed[d as usize] = true;
                let next = rot[(i + 1) % rot.len()];
                sigma[d as usize - 1] = next;
            }
        }
        if placed.iter().skip(1).any(|&p| !p) {
            return Err(MapError::NotAPermutation);
        }
        RootedMap::build_with_optional_root(self.n_edges, &sigma, root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn build_edge_map_and_loop() {
        let emap = RootedMap::build(1, &[1, 2], 1).unwrap();
        assert_eq!(emap.n_vertices(), 2);
        assert_eq!(emap.n_faces(), 1);
        assert_eq!(emap.faces_and_corners().2.len(), 2);
        let lp = RootedMap::build(1, &[2, 1], 1).unwrap();
        assert_eq!(lp.n_vertices(), 1);
        assert_eq!(lp.n_faces(), 2);
        assert_eq!(lp.faces_and_corners().2.len(), 2);
    }

    #[test]
    fn tri_fixture_faces() {
        let tri = fixtures::tri();
        let (faces, outer, corners) = tri.faces_and_corners();
        assert_eq!(corners.len(), 6);
        assert_eq!(outer, Some(tri.face_of(2)));
        let mut orbits: Vec<Vec<Dart>> = faces.into_iter().map(|(_, o)| o).collect();
        orbits.sort();
        assert_eq!(orbits, vec![vec![1, 3, 5], vec![2, 6, 4]]);
        // inner face on the right of dart 1, outer on the right of dart 2
        assert_eq!(tri.face_of(1), 1);
        assert_eq!(tri.face_of(2), 2);
    }

    #[test]
    fn k4_toroidal_rotation_rejected() {
        // K4 with an interleaved rotation at every vertex has genus 1.
        // Vertices a,b,c,d; edges ab, ac, ad, bc, bd, cd; at each vertex the
        // three darts are ordered so opposite pairs interleave.
        // a: 1(ab) 3(ac) 5(ad); b: 2(ab) 7(bc) 9(bd); c: 4(ac) 8(bc) 11(cd);
        // d: 6(ad) 10(bd) 12(cd) -- interleave c and d.
        let sigma = [3, 7, 5, 11, 1, 10, 9, 4, 2, 12, 8, 6];
        match RootedMap::build(6, &sigma, 1) {
            Err(MapError::NonZeroGenus(chi)) => assert_eq!(chi, 0),
            other => panic!("expected NonZeroGenus, got {other:?}"),
        }
    }

    #[test]
    fn canonical_form_invariance() {
        let tri = fixtures::tri();
        // relabel darts by swapping edges 1 and 3 (and flipping edge 2's sides)
        let labels = vec![0u32, 5, 6, 4, 3, 1, 2];
        let relabeled = tri.relabeled(&labels, Some(2));
        assert_eq!(tri.canonical_form(), relabeled.canonical_form());
        // every rooting of the triangle is isomorphic (its symmetry group
        // acts transitively on darts)
        assert_eq!(tri.canonical_form(), tri.with_root(4).canonical_form());
        assert_eq!(tri.canonical_form(), tri.with_root(1).canonical_form());
        // the 2-edge path tells a leaf rooting from a middle rooting
        let path2 = fixtures::path2();
        assert_eq!(path2.canonical_form(), path2.with_root(4).canonical_form());
        assert_ne!(path2.canonical_form(), path2.with_root(2).canonical_form());
    }

    #[test]
    fn classify_fixtures() {
        assert!(!fixtures::loop_map().classify().loopless);
        let emap = fixtures::emap();
        assert!(emap.classify().nonseparable);
        let k4 = fixtures::k4r();
        let fl = k4.classify();
        assert!(fl.triangulation && !fl.quad_triangulation);
        let i5 = fixtures::i5();
        let fl = i5.classify();
        assert!(fl.quad_triangulation && fl.irreducible);
        let path2 = fixtures::path2();
        let fl = path2.classify();
        assert!(fl.loopless && !fl.nonseparable && !fl.quad_triangulation);
    }

    #[test]
    fn delete_and_insert_edge_roundtrip() {
        let tri = fixtures::tri();
        // delete edge 1 (darts 1,2; root 2 lies on it, so reroot on dart 4 -> new label 2)
        let (path, relabel) = tri.delete_edge(1, Some(4));
        assert_eq!(path.n_edges(), 2);
        assert_eq!(relabel[4], 2);
        assert_eq!(path.n_vertices(), 3);
        assert_eq!(path.n_faces(), 1);
    }
}
