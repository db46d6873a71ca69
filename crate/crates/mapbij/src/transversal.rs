//! Transversal structures on irreducible triangulations of the 4-gon.
//!
//! A transversal structure colors every inner edge red or blue and directs
//! it so that around each inner vertex the darts read, in clockwise order:
//! a nonempty interval of outgoing red, outgoing blue, ingoing red, ingoing
//! blue (condition T1), while the inner edges at the outer vertices N, E,
//! S, W are respectively ingoing red, ingoing blue, outgoing red, outgoing
//! blue (condition T2). The outer quadrangle carries no color.
//!
//! The red edges on the vertices other than W, E form a plane bipolar poset
//! from S to N; the blue edges on the vertices other than S, N one from W
//! to E.

use crate::bipolar::{BipolarError, BipolarOrientation};
use crate::map::{alpha, edge_of, CanonicalForm, Dart, EdgeId, MapBuilder, MapError, RootedMap, VertexId};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransversalError {
    #[error("underlying map is not an irreducible triangulation of the 4-gon")]
    NotIrreducible,
    #[error("condition (T1) violated at an inner vertex")]
    T1Violated(VertexId),
    #[error("condition (T2) violated at an outer vertex")]
    T2Violated(VertexId),
    #[error("structure has no inner vertex")]
    NoInnerVertex,
    #[error("size exceeds the configured bound")]
    SizeTooLarge,
    #[error("uniqueness guarantee violated (internal inconsistency)")]
    UniquenessViolation,
    #[error("decoration tables do not fit the map")]
    BadDecoration,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Bipolar(#[from] BipolarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Red,
    Blue,
}

/// Classification of an alternating 4-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleKind {
    Left,
    Right,
}

/// An alternating 4-cycle `(s_r, w1, t_r, w2)` in clockwise order, with
/// `s_r` the common origin and `t_r` the common end of its two boundary
/// paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltFourCycle {
    pub s_r: VertexId,
    pub w1: VertexId,
    pub t_r: VertexId,
    pub w2: VertexId,
    pub kind: CycleKind,
    pub degenerate: bool,
}

/// A validated transversal structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalStructure {
    tri: RootedMap,
    color: Vec<Option<EdgeColor>>, // None = outer quadrangle edge
    orient: Vec<bool>,             // outer edges normalized to `true`
}

impl TransversalStructure {
    /// Validates a coloring and orientation of the inner edges of a rooted
    /// irreducible triangulation of the 4-gon.
    pub fn validate(
        tri: RootedMap,
        color: Vec<Option<EdgeColor>>,
        mut orient: Vec<bool>,
    ) -> Result<TransversalStructure, TransversalError> {
        if !tri.classify().irreducible {
            return Err(TransversalError::NotIrreducible);
        }
        let m = tri.n_edges() as usize;
        if color.len() != m || orient.len() != m {
            return Err(TransversalError::BadDecoration);
        }
        let outer = tri.outer_face().unwrap();
        let outer_edges: HashSet<EdgeId> = tri.face_darts(outer).iter().map(|&d| edge_of(d)).collect();
        for e in tri.edge_ids() {
            let is_outer = outer_edges.contains(&e);
            if is_outer != color[e as usize - 1].is_none() {
                return Err(TransversalError::BadDecoration);
            }
            if is_outer {
                orient[e as usize - 1] = true;
            }
        }
        let x = TransversalStructure { tri, color, orient };
        x.check_t2()?;
        x.check_t1()?;
        Ok(x)
    }

    pub fn tri(&self) -> &RootedMap {
        &self.tri
    }

    pub fn color(&self, e: EdgeId) -> Option<EdgeColor> {
        self.color[e as usize - 1]
    }

    pub fn colors(&self) -> &[Option<EdgeColor>] {
        &self.color
    }

    pub fn orient(&self) -> &[bool] {
        &self.orient
    }

    /// The outer vertices `[N, E, S, W]`, clockwise from the root vertex.
    pub fn nesw(&self) -> [VertexId; 4] {
        nesw_of(&self.tri)
    }

    #[inline]
    pub fn is_tail(&self, d: Dart) -> bool {
        self.orient[edge_of(d) as usize - 1] == (d % 2 == 1)
    }

    pub fn inner_vertices(&self) -> Vec<VertexId> {
        let outer: HashSet<VertexId> = self.nesw().into_iter().collect();
        self.tri
            .vertices()
            .iter()
            .copied()
            .filter(|v| !outer.contains(v))
            .collect()
    }

    pub fn red_edge_count(&self) -> usize {
        self.color
            .iter()
            .filter(|c| **c == Some(EdgeColor::Red))
            .count()
    }

    fn check_t2(&self) -> Result<(), TransversalError> {
        let [n, e, s, w] = self.nesw();
        let want = [
            (n, EdgeColor::Red, false), // ingoing red
            (e, EdgeColor::Blue, false),
            (s, EdgeColor::Red, true), // outgoing red
            (w, EdgeColor::Blue, true),
        ];
        for (v, col, out) in want {
            for d in self.tri.vertex_darts(v) {
                let Some(c) = self.color(edge_of(d)) else {
                    continue; // outer quadrangle edge
                };
                if c != col || self.is_tail(d) != out {
                    return Err(TransversalError::T2Violated(v));
                }
            }
        }
        Ok(())
    }

    fn check_t1(&self) -> Result<(), TransversalError> {
        for v in self.inner_vertices() {
            if !self.t1_holds_at(v) {
                return Err(TransversalError::T1Violated(v));
            }
        }
        Ok(())
    }

    fn t1_holds_at(&self, v: VertexId) -> bool {
        t1_at(&self.tri, &self.color, &self.orient, v)
    }

    fn extract_poset(
        &self,
        keep: EdgeColor,
        source: VertexId,
        sink: VertexId,
        s_anchor: Dart,
        t_anchor: Dart,
    ) -> Result<BipolarOrientation, TransversalError> {
        let kept: Vec<bool> = self
            .tri
            .edge_ids()
            .map(|e| self.color(e) == Some(keep))
            .collect();
        let nd = self.tri.n_darts() as usize;
        let mut dart_map = vec![0u32; nd + 1];
        let mut k = 0u32;
        let mut orient = vec![];
        for e in self.tri.edge_ids() {
            if kept[e as usize - 1] {
                k += 1;
                dart_map[2 * e as usize - 1] = 2 * k - 1;
                dart_map[2 * e as usize] = 2 * k;
                orient.push(self.orient[e as usize - 1]);
            }
        }
        let mut b = MapBuilder::new();
        for _ in 0..k {
            b.new_edge();
        }
        for &v in self.tri.vertices() {
            let rot: Vec<Dart> = self
                .tri
                .vertex_darts(v)
                .into_iter()
                .filter(|&d| kept[edge_of(d) as usize - 1])
                .map(|d| dart_map[d as usize])
                .collect();
            if !rot.is_empty() {
                b.add_vertex(rot);
            }
        }
        let map = b.build(None)?;
        let s_dart = dart_map[s_anchor as usize];
        let t_dart = dart_map[t_anchor as usize];
        debug_assert!(s_dart != 0 && t_dart != 0);
        let s = map.vertex_of(s_dart);
        let t = map.vertex_of(t_dart);
        debug_assert_eq!(s, map.vertex_of(dart_map[self.tri.vertex_darts(source).iter().copied().find(|&d| dart_map[d as usize] != 0).unwrap() as usize]));
        debug_assert_eq!(t, map.vertex_of(dart_map[self.tri.vertex_darts(sink).iter().copied().find(|&d| dart_map[d as usize] != 0).unwrap() as usize]));
        let outer = map.face_of(s_dart);
        let o = BipolarOrientation::validate_with_outer(map, orient, s, t, outer)?;
        Ok(o)
    }

    /// The red bipolar poset: red edges on the vertices other than W and E,
    /// from S to N.
    pub fn red_poset(&self) -> Result<BipolarOrientation, TransversalError> {
        if self.inner_vertices().is_empty() {
            return Err(TransversalError::NoInnerVertex);
        }
        let [n, e, s, w] = self.nesw();
        // anchor: the last red dart clockwise at S before the dart to E,
        // and at N before the dart to W
        let s_anchor = self
            .tri
            .sigma_inv(self.tri.dart_at(self.tri.edge_between(s, e).unwrap(), s));
        let t_anchor = self
            .tri
            .sigma_inv(self.tri.dart_at(self.tri.edge_between(n, w).unwrap(), n));
        self.extract_poset(EdgeColor::Red, s, n, s_anchor, t_anchor)
    }

    /// The blue bipolar poset: blue edges on the vertices other than S and
    /// N, from W to E.
    pub fn blue_poset(&self) -> Result<BipolarOrientation, TransversalError> {
        if self.inner_vertices().is_empty() {
            return Err(TransversalError::NoInnerVertex);
        }
        let [n, e, s, w] = self.nesw();
        let s_anchor = self
            .tri
            .sigma_inv(self.tri.dart_at(self.tri.edge_between(w, s).unwrap(), w));
        let t_anchor = self
            .tri
            .sigma_inv(self.tri.dart_at(self.tri.edge_between(e, n).unwrap(), e));
        self.extract_poset(EdgeColor::Blue, w, e, s_anchor, t_anchor)
    }

    /// Both posets; each is asserted to pass the plane-bipolar-poset check.
    pub fn red_blue_posets(
        &self,
    ) -> Result<(BipolarOrientation, BipolarOrientation), TransversalError> {
        let red = self.red_poset()?;
        let blue = self.blue_poset()?;
        assert!(red.is_bipolar_poset(), "red restriction is not a poset");
        assert!(blue.is_bipolar_poset(), "blue restriction is not a poset");
        Ok((red, blue))
    }

    /// N-avoiding: both the red and the blue bipolar posets are N-avoiding.
    pub fn is_n_avoiding(&self) -> Result<bool, TransversalError> {
        let (red, blue) = self.red_blue_posets()?;
        Ok(red.is_n_avoiding() && blue.is_n_avoiding())
    }

    /// Every alternating 4-cycle, classified left or right.
    pub fn alt_four_cycles(&self) -> Vec<AltFourCycle> {
        let tri = &self.tri;
        let mut nbrs: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
        for e in tri.edge_ids() {
            let (u, v) = tri.endpoints(e);
            nbrs.entry(u).or_default().push(v);
            nbrs.entry(v).or_default().push(u);
        }
        let mut seen = HashSet::new();
        let mut out = vec![];
        let verts = tri.vertices();
        for (i, &x) in verts.iter().enumerate() {
            for &z in verts.iter().skip(i + 1) {
                // common neighbors of the diagonal pair {x, z}
                let common: Vec<VertexId> = nbrs[&x]
                    .iter()
                    .copied()
                    .filter(|w| nbrs[&z].contains(w))
                    .collect();
                for (a, &w1) in common.iter().enumerate() {
                    for &w2 in common.iter().skip(a + 1) {
                        let edges = [
                            tri.edge_between(x, w1).unwrap(),
                            tri.edge_between(w1, z).unwrap(),
                            tri.edge_between(z, w2).unwrap(),
                            tri.edge_between(w2, x).unwrap(),
                        ];
                        let colors: Vec<_> = edges.iter().map(|&e| self.color(e)).collect();
                        if colors.iter().any(|c| c.is_none()) {
                            continue;
                        }
                        if colors[0] != colors[2] || colors[1] != colors[3] || colors[0] == colors[1]
                        {
                            continue;
                        }
                        let key = {
                            let mut d1 = [x, z];
                            d1.sort_unstable();
                            let mut d2 = [w1, w2];
                            d2.sort_unstable();
                            if d1 > d2 {
                                (d2, d1)
                            } else {
                                (d1, d2)
                            }
                        };
                        if !seen.insert(key) {
                            continue;
                        }
                        out.push(self.classify_cycle([x, w1, z, w2], edges));
                    }
                }
            }
        }
        out.sort_by_key(|c| (c.s_r, c.w1, c.t_r, c.w2));
        out
    }

    pub fn has_right_alt_cycle(&self) -> bool {
        self.alt_four_cycles()
            .iter()
            .any(|c| c.kind == CycleKind::Right)
    }

    fn classify_cycle(&self, cycle: [VertexId; 4], edges: [EdgeId; 4]) -> AltFourCycle {
        let tri = &self.tri;
        let edge_set: HashSet<EdgeId> = edges.into_iter().collect();
        // source and sink of the cycle: both cycle edges outgoing / ingoing
        let cycle_dirs = |i: usize| {
            let v = cycle[i];
            let e_prev = edges[(i + 3) % 4];
            let e_next = edges[i];
            let out_prev = self.is_tail(tri.dart_at(e_prev, v));
            let out_next = self.is_tail(tri.dart_at(e_next, v));
            (out_prev, out_next)
        };
        let s_pos = (0..4)
            .find(|&i| cycle_dirs(i) == (true, true))
            .expect("alternating 4-cycle has a source");
        let t_pos = (0..4)
            .find(|&i| cycle_dirs(i) == (false, false))
            .expect("alternating 4-cycle has a sink");
        let s_r = cycle[s_pos];
        let t_r = cycle[t_pos];
        debug_assert_eq!((s_pos + 2) % 4, t_pos);
        let (wa, wb) = (cycle[(s_pos + 1) % 4], cycle[(s_pos + 3) % 4]);

        // interior faces: flood-fill from the outer face across non-cycle
        // edges; the interior is the complement
        let outer = tri.outer_face().unwrap();
        let faces = tri.faces();
        let fidx: HashMap<_, _> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut exterior = vec![false; faces.len()];
        exterior[fidx[&outer]] = true;
        let mut stack = vec![fidx[&outer]];
        while let Some(fi) = stack.pop() {
            for &d in &tri.face_darts(faces[fi]) {
                if edge_set.contains(&edge_of(d)) {
                    continue;
                }
                let gi = fidx[&tri.face_of(alpha(d))];
                if !exterior[gi] {
                    exterior[gi] = true;
                    stack.push(gi);
                }
            }
        }
        let interior_faces: HashSet<FaceIdx> =
            (0..faces.len()).filter(|&i| !exterior[i]).collect();
        debug_assert!(!interior_faces.is_empty());

        // clockwise order: walking s_r -> w has the interior on its right
        let interior_right = |w: VertexId| {
            let e = tri.edge_between(s_r, w).unwrap();
            let d = tri.dart_at(e, s_r);
            interior_faces.contains(&fidx[&tri.face_of(d)])
        };
        let (w1, w2) = if interior_right(wa) { (wa, wb) } else { (wb, wa) };
        debug_assert!(interior_right(w1) && !interior_right(w2));

        // interior vertices: vertices of interior faces not on the cycle
        let cycle_set: HashSet<VertexId> = cycle.into_iter().collect();
        let mut interior_vertices = HashSet::new();
        for (fi, &f) in faces.iter().enumerate() {
            if interior_faces.contains(&fi) {
                for &d in &tri.face_darts(f) {
                    let v = tri.vertex_of(d);
                    if !cycle_set.contains(&v) {
                        interior_vertices.insert(v);
                    }
                }
            }
        }

        let (kind, degenerate) = if !interior_vertices.is_empty() {
            // color of the interior-incident edges at the cycle source
            let d = tri
                .vertex_darts(s_r)
                .into_iter()
                .find(|&d| {
                    !edge_set.contains(&edge_of(d))
                        && interior_faces.contains(&fidx[&tri.face_of(d)])
                })
                .expect("source meets the interior");
            debug_assert!(self.is_tail(d));
            let kind = match self.color(edge_of(d)).expect("interior edges are colored") {
                EdgeColor::Red => CycleKind::Left,
                EdgeColor::Blue => CycleKind::Right,
            };
            (kind, false)
        } else {
            // single interior edge (one of the two diagonals); test the
            // chirality of the triple it forms with the same-colored cycle
            // edges
            let e_in = tri
                .edge_ids()
                .find(|&e| {
                    !edge_set.contains(&e)
                        && interior_faces.contains(&fidx[&tri.face_of(2 * e - 1)])
                })
                .expect("degenerate cycle has an interior edge");
            let td = if self.is_tail(2 * e_in - 1) {
                2 * e_in - 1
            } else {
                2 * e_in
            };
            let hd = alpha(td);
            let col = self.color(e_in).unwrap();
            let same: Vec<EdgeId> = edges
                .into_iter()
                .filter(|&e| self.color(e) == Some(col))
                .collect();
            debug_assert_eq!(same.len(), 2);
            let is_pattern = |succ: fn(&RootedMap, Dart) -> Dart| {
                let e1 = edge_of(succ(tri, td));
                let e3 = edge_of(succ(tri, hd));
                same.contains(&e1)
                    && same.contains(&e3)
                    && e1 != e3
                    && self.is_tail(succ(tri, td))
                    && !self.is_tail(succ(tri, hd))
            };
            let n_pat = is_pattern(|t, d| t.sigma(d));
            let mirrored = is_pattern(|t, d| t.sigma_inv(d));
            assert!(n_pat != mirrored, "degenerate cycle triple must form exactly one pattern");
            let kind = if n_pat { CycleKind::Right } else { CycleKind::Left };
            (kind, true)
        };
        AltFourCycle {
            s_r,
            w1,
            t_r,
            w2,
            kind,
            degenerate,
        }
    }

    /// Complete invariant: canonical form of the rooted map extended with
    /// the color and direction of each edge.
    pub fn canonical_encoding(&self) -> CanonicalForm {
        let root = self.tri.root().unwrap();
        let labels = self.tri.canonical_labels(root);
        let nd = self.tri.n_darts() as usize;
        let mut inv = vec![0u32; nd + 1];
        for d in 1..=nd {
            inv[labels[d] as usize] = d as u32;
        }
        let mut data = vec![self.tri.n_edges(), labels[root as usize]];
        for l in 1..=nd {
            data.push(labels[self.tri.sigma(inv[l]) as usize]);
        }
        for k in 1..=self.tri.n_edges() {
            let old_odd = inv[(2 * k - 1) as usize];
            let code = match self.color(edge_of(old_odd)) {
                None => 2,
                Some(EdgeColor::Red) => 0,
                Some(EdgeColor::Blue) => 1,
            };
            data.push(code);
            // the outer quadrangle carries no direction of its own
            data.push(if code == 2 { 0 } else { self.is_tail(old_odd) as u32 });
        }
        CanonicalForm(data)
    }
}

type FaceIdx = usize;

/// Condition (T1) at one vertex, on raw decoration tables. Dart categories
/// clockwise must read: outgoing red, outgoing blue, ingoing red, ingoing
/// blue, each a single nonempty interval.
fn t1_at(tri: &RootedMap, color: &[Option<EdgeColor>], orient: &[bool], v: VertexId) -> bool {
    let category = |d: Dart| -> u8 {
        let red = color[edge_of(d) as usize - 1] == Some(EdgeColor::Red);
        let out = orient[edge_of(d) as usize - 1] == (d % 2 == 1);
        match (out, red) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        }
    };
    let cats: Vec<u8> = tri.vertex_darts(v).iter().map(|&d| category(d)).collect();
    let n = cats.len();
    let blocks: Vec<u8> = (0..n)
        .filter(|&i| cats[i] != cats[(i + n - 1) % n])
        .map(|i| cats[i])
        .collect();
    if blocks.len() != 4 {
        return false;
    }
    let start = blocks.iter().position(|&c| c == 0).unwrap_or(4);
    (0..4).all(|k| start < 4 && blocks[(start + k) % 4] == k as u8)
}

/// Outer vertices `[N, E, S, W]` of a rooted triangulation of the 4-gon.
pub fn nesw_of(tri: &RootedMap) -> [VertexId; 4] {
    let root = tri.root().expect("rooted map required");
    let walk = tri.face_darts(root);
    debug_assert_eq!(walk.len(), 4);
    // the outer walk runs counterclockwise N, W, S, E
    [
        tri.vertex_of(walk[0]),
        tri.vertex_of(walk[3]),
        tri.vertex_of(walk[2]),
        tri.vertex_of(walk[1]),
    ]
}

/// All (color, direction) assignments satisfying (T1)/(T2) on a rooted
/// triangulation of the 4-gon, irreducible or not. Empty exactly when the
/// input is reducible.
pub fn transversal_candidates(tri: &RootedMap) -> Result<Vec<TransversalStructure>, TransversalError> {
    let flags = tri.classify();
    if !flags.quad_triangulation {
        return Err(TransversalError::NotIrreducible);
    }
    if tri.n_edges() > 3 * 4 + 5 {
        // at most 4 inner vertices
        return Err(TransversalError::SizeTooLarge);
    }
    let [n, e, s, w] = nesw_of(tri);
    let outer = tri.outer_face().unwrap();
    let outer_edges: HashSet<EdgeId> = tri.face_darts(outer).iter().map(|&d| edge_of(d)).collect();

    let m = tri.n_edges() as usize;
    // colors: None outer; forced by (T2) when touching an outer vertex
    let mut color: Vec<Option<EdgeColor>> = vec![None; m];
    let mut orient = vec![true; m];
    let mut free = vec![];
    for eid in tri.edge_ids() {
        if outer_edges.contains(&eid) {
            continue;
        }
        let (a, b) = tri.endpoints(eid);
        let mut forced: Option<(EdgeColor, VertexId /*which endpoint drives*/, bool)> = None;
        let mut conflict = false;
        for (v, col, out) in [
            (n, EdgeColor::Red, false),
            (e, EdgeColor::Blue, false),
            (s, EdgeColor::Red, true),
            (w, EdgeColor::Blue, true),
        ] {
            if a == v || b == v {
                // direction: the dart at v must be outgoing iff `out`
                let dart_v = tri.dart_at(eid, v);
                let tail_is_odd = dart_v % 2 == 1;
                let orient_val = if out { tail_is_odd } else { !tail_is_odd };
                match forced {
                    None => forced = Some((col, v, orient_val)),
                    Some((c0, _, o0)) => {
                        if c0 != col || o0 != orient_val {
                            conflict = true;
                        }
                    }
                }
            }
        }
        if conflict {
            return Ok(vec![]);
        }
        match forced {
            Some((c, _, o)) => {
                color[eid as usize - 1] = Some(c);
                orient[eid as usize - 1] = o;
            }
            None => free.push(eid),
        }
    }

    // order free edges by breadth-first discovery from S (frozen order)
    let order = bfs_vertex_order(tri, s);
    let rank = |v: VertexId| order.iter().position(|&x| x == v).unwrap();
    free.sort_by_key(|&eid| {
        let (a, b) = tri.endpoints(eid);
        let (ra, rb) = (rank(a).min(rank(b)), rank(a).max(rank(b)));
        (ra, rb, eid)
    });

    // incident inner edges per vertex, to know when a vertex is complete
    let inner_vs: HashSet<VertexId> = tri
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != n && v != e && v != s && v != w)
        .collect();
    let mut remaining: HashMap<VertexId, usize> = HashMap::new();
    for &eid in &free {
        let (a, b) = tri.endpoints(eid);
        for v in [a, b] {
            if inner_vs.contains(&v) {
                *remaining.entry(v).or_insert(0) += 1;
            }
        }
    }

    let mut out = vec![];
    search(
        tri,
        &free,
        0,
        &mut color,
        &mut orient,
        &mut remaining,
        &inner_vs,
        &mut out,
    );
    out.sort_by_key(|x| x.canonical_encoding());
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    tri: &RootedMap,
    free: &[EdgeId],
    pos: usize,
    color: &mut Vec<Option<EdgeColor>>,
    orient: &mut Vec<bool>,
    remaining: &mut HashMap<VertexId, usize>,
    inner_vs: &HashSet<VertexId>,
    out: &mut Vec<TransversalStructure>,
) {
    if pos == free.len() {
        // full validation; (T2) and completed-vertex (T1) already hold
        if let Ok(x) = TransversalStructure::validate(tri.clone(), color.clone(), orient.clone()) {
            out.push(x);
        }
        return;
    }
    let eid = free[pos];
    let (a, b) = tri.endpoints(eid);
    for col in [EdgeColor::Red, EdgeColor::Blue] {
        for dir in [true, false] {
            color[eid as usize - 1] = Some(col);
            orient[eid as usize - 1] = dir;
            for v in [a, b] {
                if inner_vs.contains(&v) {
                    *remaining.get_mut(&v).unwrap() -= 1;
                }
            }
            // prune on completed inner vertices
            let ok = [a, b]
                .into_iter()
                .all(|v| !inner_vs.contains(&v) || remaining[&v] > 0 || t1_at(tri, color, orient, v));
            if ok {
                search(tri, free, pos + 1, color, orient, remaining, inner_vs, out);
            }
            for v in [a, b] {
                if inner_vs.contains(&v) {
                    *remaining.get_mut(&v).unwrap() += 1;
                }
            }
        }
    }
    color[eid as usize - 1] = None;
}

fn bfs_vertex_order(map: &RootedMap, start: VertexId) -> Vec<VertexId> {
    let mut order = vec![start];
    let mut seen: HashSet<VertexId> = [start].into_iter().collect();
    let mut qi = 0;
    while qi < order.len() {
        let v = order[qi];
        qi += 1;
        for d in map.vertex_darts(v) {
            let w = map.vertex_of(alpha(d));
            if seen.insert(w) {
                order.push(w);
            }
        }
    }
    order
}

/// All transversal structures of a rooted irreducible triangulation.
pub fn enumerate_transversal(tri: &RootedMap) -> Result<Vec<TransversalStructure>, TransversalError> {
    if !tri.classify().irreducible {
        return Err(TransversalError::NotIrreducible);
    }
    let all = transversal_candidates(tri)?;
    debug_assert!(!all.is_empty(), "irreducible triangulations admit a structure");
    Ok(all)
}

/// The unique transversal structure with no right alternating 4-cycle.
pub fn minimal_transversal(tri: &RootedMap) -> Result<TransversalStructure, TransversalError> {
    let all = enumerate_transversal(tri)?;
    let mut min = all.into_iter().filter(|x| !x.has_right_alt_cycle());
    let first = min.next().ok_or(TransversalError::UniquenessViolation)?;
    if min.next().is_some() {
        return Err(TransversalError::UniquenessViolation);
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// The unique transversal structure on the pyramid: red S->v, v->N,
    /// blue W->v, v->E.
    pub fn x1() -> TransversalStructure {
        let tri = fixtures::i5();
        // edges: NE=1, ES=2, SW=3, WN=4, Nv=5 (9@N,10@v), Ev=6 (11@E,12@v),
        // Sv=7 (13@S,14@v), Wv=8 (15@W,16@v)
        let color = vec![
            None,
            None,
            None,
            None,
            Some(EdgeColor::Red),
            Some(EdgeColor::Blue),
            Some(EdgeColor::Red),
            Some(EdgeColor::Blue),
        ];
        // v->N: tail dart 10 (even) => false; v->E: tail 12 => false;
        // S->v: tail 13 (odd) => true; W->v: tail 15 => true
        let orient = vec![true, true, true, true, false, false, true, true];
        TransversalStructure::validate(tri, color, orient).unwrap()
    }

    #[test]
    fn x1_is_valid_and_unique() {
        let x = x1();
        let [n, e, s, w] = x.nesw();
        assert_eq!(x.inner_vertices().len(), 1);
        assert!(n != e && s != w);
        let all = enumerate_transversal(&fixtures::i5()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].canonical_encoding(), x.canonical_encoding());
        assert!(x.alt_four_cycles().is_empty());
        assert!(x.is_n_avoiding().unwrap());
    }

    #[test]
    fn x1_with_color_swapped_rejected() {
        let tri = fixtures::i5();
        let color = vec![
            None,
            None,
            None,
            None,
            Some(EdgeColor::Blue), // should be red
            Some(EdgeColor::Blue),
            Some(EdgeColor::Red),
            Some(EdgeColor::Blue),
        ];
        let orient = vec![true, true, true, true, false, false, true, true];
        let err = TransversalStructure::validate(tri, color, orient).unwrap_err();
        assert!(matches!(
            err,
            TransversalError::T2Violated(_) | TransversalError::T1Violated(_)
        ));
    }

    #[test]
    fn x1_posets_are_paths() {
        let x = x1();
        let (red, blue) = x.red_blue_posets().unwrap();
        assert_eq!(red.n_edges(), 2);
        assert_eq!(blue.n_edges(), 2);
        assert_eq!(red.map().n_vertices(), 3);
        assert!(red.is_n_avoiding() && blue.is_n_avoiding());
    }

    #[test]
    fn link_maps_have_no_inner_vertex() {
        let qsn = fixtures::qsn();
        // diagonal SN is edge 5 (darts 9@S, 10@N): must be red S->N
        let color = vec![None, None, None, None, Some(EdgeColor::Red)];
        let orient = vec![true, true, true, true, true]; // tail dart 9 at S
        let x = TransversalStructure::validate(qsn, color, orient).unwrap();
        assert_eq!(x.red_poset().unwrap_err(), TransversalError::NoInnerVertex);
    }

    #[test]
    fn reducible_quad_has_no_structure() {
        // stack a vertex inside one face of the WE-link-map: creates a
        // non-facial 3-cycle? No: stacking keeps irreducibility only if
        // the stacked face's 3-cycle stays facial. Instead check the
        // candidates search on a quad-triangulation with a separating
        // 3-cycle: build one by enumerating size 3 and filtering.
        let quads = crate::enumerate::enumerate_quad_triangulations(3).unwrap();
        let mut found_reducible = false;
        for t in quads {
            let flags = t.classify();
            if flags.quad_triangulation && !flags.irreducible {
                found_reducible = true;
                assert!(transversal_candidates(&t).unwrap().is_empty());
                assert_eq!(
                    enumerate_transversal(&t).unwrap_err(),
                    TransversalError::NotIrreducible
                );
            }
        }
        assert!(found_reducible, "expected a reducible quad-triangulation at size 3");
    }
}
