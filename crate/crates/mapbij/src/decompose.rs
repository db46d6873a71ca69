//! The two parallel core decompositions and the recursive bijection
//! between rooted loopless maps and rooted triangulations.
//!
//! A loopless map decomposes into its root block (the core, a non-separable
//! map) with a smaller loopless map hanging in each of the core's corners.
//! A triangulation of the 4-gon decomposes into its core (the map left
//! after emptying every inclusion-maximal non-facial 3-cycle, an
//! irreducible triangulation or a link-map) with a triangulation filling
//! each inner face. Sizes add up on both sides, corners and faces are
//! ordered by canonical dart index, and the two decompositions have
//! matching arity, which makes the recursive bijection `f2` well typed.

use crate::bijections::{f1_tilde, f1_tilde_inv, BijectionError};
use crate::fixtures;
use crate::map::{alpha, edge_of, CanonicalForm, Dart, EdgeId, MapBuilder, MapError, RootedMap, VertexId};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("map has a loop")]
    HasLoop,
    #[error("map has no edges")]
    Empty,
    #[error("a component is not loopless")]
    ComponentNotLoopless,
    #[error("core is not non-separable")]
    CoreNotNonseparable,
    #[error("core is not an irreducible triangulation or link-map")]
    CoreNotAdmissible,
    #[error("component count does not match the core")]
    ArityMismatch,
    #[error("map is not a triangulation of the 4-gon")]
    NotQuadTriangulation,
    #[error("map is not a triangulation")]
    NotTriangulation,
    #[error("W and E are adjacent")]
    WEDiagonal,
    #[error("map too small for this operation")]
    TooSmall,
    #[error("size exceeds the configured bound")]
    SizeTooLarge,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

/// Decomposition of a rooted loopless map into its root block and the
/// loopless maps hanging in the block's corners (one per corner, in
/// canonical corner order; vertex-maps where nothing hangs).
#[derive(Debug, Clone)]
pub struct LooplessDecomposition {
    pub core: RootedMap,
    pub components: Vec<RootedMap>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalKind {
    NonDiagonal,
    WeDiagonal,
    SnDiagonal,
}

/// Decomposition of a rooted triangulation of the 4-gon into its core and
/// the triangulations filling the core's inner faces (triangle-maps where
/// the face was already a face).
#[derive(Debug, Clone)]
pub struct TriangulationDecomposition {
    pub core: RootedMap,
    pub components: Vec<RootedMap>,
    pub kind: DiagonalKind,
}

/// Edge sets of the blocks (2-connected components, bridges included) of
/// the underlying loopless multigraph.
fn blocks(map: &RootedMap) -> Vec<Vec<EdgeId>> {
    let verts = map.vertices();
    let idx: HashMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![vec![]; n];
    for e in map.edge_ids() {
        let (u, v) = map.endpoints(e);
        adj[idx[&u]].push((idx[&v], e));
        adj[idx[&v]].push((idx[&u], e));
    }
    struct Scan<'a> {
        adj: &'a [Vec<(usize, EdgeId)>],
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        stack: Vec<EdgeId>,
        on_stack: Vec<bool>,
        blocks: Vec<Vec<EdgeId>>,
    }
    impl Scan<'_> {
        fn go(&mut self, u: usize, parent_edge: Option<EdgeId>) {
            self.disc[u] = self.timer;
            self.low[u] = self.timer;
            self.timer += 1;
            for k in 0..self.adj[u].len() {
                let (v, e) = self.adj[u][k];
                if Some(e) == parent_edge || self.on_stack[e as usize] {
                    continue;
                }
                if self.disc[v] != usize::MAX && self.disc[v] > self.disc[u] {
                    continue; // already collected below
                }
                self.stack.push(e);
                self.on_stack[e as usize] = true;
                if self.disc[v] == usize::MAX {
                    self.go(v, Some(e));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = vec![];
                        loop {
                            let top = self.stack.pop().unwrap();
                            block.push(top);
                            if top == e {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else {
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let mut scan = Scan {
        adj: &adj,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        stack: vec![],
        on_stack: vec![false; map.n_edges() as usize + 1],
        blocks: vec![],
    };
    scan.go(0, None);
    debug_assert!(scan.stack.is_empty());
    scan.blocks
}

/// Decomposes a rooted loopless map with at least one edge into its root
/// block and the maps hanging in its corners. Core and components are
/// returned canonically labeled.
pub fn block_decompose(map: &RootedMap) -> Result<LooplessDecomposition, DecomposeError> {
    if map.n_edges() == 0 {
        return Err(DecomposeError::Empty);
    }
    if !map.classify().loopless {
        return Err(DecomposeError::HasLoop);
    }
    let root = map.root().unwrap();
    let root_edge = edge_of(root);
    let core_edges: HashSet<EdgeId> = blocks(map)
        .into_iter()
        .find(|b| b.contains(&root_edge))
        .expect("root edge lies in a block")
        .into_iter()
        .collect();
    let in_core_dart = |d: Dart| core_edges.contains(&edge_of(d));

    let keep: Vec<bool> = map.edge_ids().map(|e| core_edges.contains(&e)).collect();
    let (core_raw, to_core) = map.restrict_edges(&keep, Some(root))?;
    debug_assert!(core_raw.classify().nonseparable);
    // canonical corner order: corners of the core indexed by the canonical
    // label of their dart
    let labels = core_raw.canonical_labels(core_raw.root().unwrap());
    let core = core_raw.relabeled(&labels, core_raw.root());
    // old map dart per canonical core dart
    let mut corner_dart = vec![0u32; core.n_darts() as usize + 1];
    for d in map.darts() {
        if in_core_dart(d) {
            corner_dart[labels[to_core[d as usize] as usize] as usize] = d;
        }
    }

    let mut components = vec![];
    for c in 1..=core.n_darts() {
        let d = corner_dart[c as usize];
        // darts hanging in the corner after d, up to the next core dart
        let mut sector = vec![];
        let mut x = map.sigma(d);
        while !in_core_dart(x) {
            sector.push(x);
            x = map.sigma(x);
        }
        if sector.is_empty() {
            components.push(RootedMap::vertex_map());
            continue;
        }
        let v = map.vertex_of(d);
        // edges reachable from the sector without passing through v
        let mut comp_darts: HashSet<Dart> = sector.iter().copied().collect();
        let mut stack: Vec<Dart> = sector.clone();
        while let Some(y) = stack.pop() {
            for z in [alpha(y), map.sigma(y)] {
                // never walk sigma out of the corner at the cut vertex
                let follow = z == alpha(y) || map.vertex_of(y) != v;
                if follow && comp_darts.insert(z) {
                    stack.push(z);
                }
            }
        }
        // assemble the hanging map: the sector closes into the root vertex
        let comp_edges: Vec<EdgeId> = {
            let mut es: Vec<EdgeId> = comp_darts.iter().map(|&d| edge_of(d)).collect();
            es.sort_unstable();
            es.dedup();
            es
        };
        let mut dart_map = vec![0u32; map.n_darts() as usize + 1];
        let mut b = MapBuilder::new();
        for (k, &e) in comp_edges.iter().enumerate() {
            b.new_edge();
            dart_map[2 * e as usize - 1] = 2 * k as u32 + 1;
            dart_map[2 * e as usize] = 2 * k as u32 + 2;
        }
        b.add_vertex(sector.iter().map(|&d| dart_map[d as usize]).collect());
        let mut placed: HashSet<VertexId> = HashSet::new();
        for &d in &comp_darts {
            let u = map.vertex_of(d);
            if u == v || !placed.insert(u) {
                continue;
            }
            b.add_vertex(
                map.vertex_darts(u)
                    .into_iter()
                    .map(|x| {
                        debug_assert!(comp_darts.contains(&x));
                        dart_map[x as usize]
                    })
                    .collect(),
            );
        }
        let comp = b.build(Some(dart_map[sector[0] as usize]))?;
        debug_assert!(comp.classify().loopless);
        components.push(comp.canonicalized());
    }
    Ok(LooplessDecomposition { core, components })
}

/// Inverse of [`block_decompose`]: inserts component `i` into corner `i`
/// of the core (canonical corner order), merging its root vertex with the
/// corner's vertex.
pub fn block_compose(core: &RootedMap, components: &[RootedMap]) -> Result<RootedMap, DecomposeError> {
    if !core.classify().nonseparable {
        return Err(DecomposeError::CoreNotNonseparable);
    }
    if components.len() != core.n_darts() as usize {
        return Err(DecomposeError::ArityMismatch);
    }
    for c in components {
        if !c.classify().loopless {
            return Err(DecomposeError::ComponentNotLoopless);
        }
    }
    let core = core.canonicalized();
    // edge layout: core edges first, then components in corner order
    let mut offset = vec![0u32; components.len() + 1];
    offset[0] = core.n_edges();
    for (i, c) in components.iter().enumerate() {
        offset[i + 1] = offset[i] + c.n_edges();
    }
    let mut b = MapBuilder::new();
    let total: u32 = offset[components.len()];
    for _ in 0..total {
        b.new_edge();
    }
    let comp_dart = |i: usize, d: Dart| -> Dart { 2 * offset[i] + d };
    for &v in core.vertices() {
        let mut rot = vec![];
        for d in core.vertex_darts(v) {
            rot.push(d);
            let i = d as usize - 1;
            let comp = &components[i];
            if comp.n_edges() > 0 {
                let root = comp.root().unwrap();
                for x in comp.vertex_darts(root) {
                    rot.push(comp_dart(i, x));
                }
            }
        }
        b.add_vertex(rot);
    }
    for (i, comp) in components.iter().enumerate() {
        if comp.n_edges() == 0 {
            continue;
        }
        let root_vertex = comp.vertex_of(comp.root().unwrap());
        for &v in comp.vertices() {
            if v == root_vertex {
                continue;
            }
            b.add_vertex(comp.vertex_darts(v).into_iter().map(|x| comp_dart(i, x)).collect());
        }
    }
    let out = b.build(core.root())?;
    debug_assert!(out.classify().loopless);
    Ok(out)
}

struct MaxCycle {
    edges: [EdgeId; 3],
    interior_edges: HashSet<EdgeId>,
    /// A dart of a cycle edge whose right face lies in the interior.
    hole_marker: Dart,
    /// A dart of a cycle edge whose right face lies in the exterior.
    outer_marker: Dart,
}

fn interior_faces_of_cycle(map: &RootedMap, cycle_edges: &[EdgeId; 3]) -> HashSet<u32> {
    let outer = map.outer_face().unwrap();
    let faces = map.faces();
    let fidx: HashMap<u32, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut exterior = vec![false; faces.len()];
    exterior[fidx[&outer]] = true;
    let mut stack = vec![fidx[&outer]];
    while let Some(fi) = stack.pop() {
        for &d in &map.face_darts(faces[fi]) {
            if cycle_edges.contains(&edge_of(d)) {
                continue;
            }
            let gi = fidx[&map.face_of(alpha(d))];
            if !exterior[gi] {
                exterior[gi] = true;
                stack.push(gi);
            }
        }
    }
    faces
        .iter()
        .enumerate()
        .filter(|&(i, _)| !exterior[i])
        .map(|(_, &f)| f)
        .collect()
}

/// Decomposes a rooted triangulation of the 4-gon into its core (every
/// inclusion-maximal non-facial 3-cycle emptied) and the triangulations
/// filling the core's inner faces, in canonical face order. The component
/// of a face that was never emptied is the triangle-map.
pub fn tri_decompose(map: &RootedMap) -> Result<TriangulationDecomposition, DecomposeError> {
    if !map.classify().quad_triangulation {
        return Err(DecomposeError::NotQuadTriangulation);
    }
    // inclusion-maximal non-facial 3-cycles
    let mut candidates: Vec<([VertexId; 3], HashSet<u32>)> = vec![];
    for t in map.three_cycles() {
        if map.cycle_is_facial(&t) {
            continue;
        }
        let edges = [
            map.edge_between(t[0], t[1]).unwrap(),
            map.edge_between(t[1], t[2]).unwrap(),
            map.edge_between(t[2], t[0]).unwrap(),
        ];
        candidates.push((t, interior_faces_of_cycle(map, &edges)));
    }
    let maximal: Vec<MaxCycle> = candidates
        .iter()
        .filter(|(_, faces)| {
            !candidates
                .iter()
                .any(|(_, other)| other.len() > faces.len() && faces.is_subset(other))
        })
        .map(|(t, faces)| {
            let edges = [
                map.edge_between(t[0], t[1]).unwrap(),
                map.edge_between(t[1], t[2]).unwrap(),
                map.edge_between(t[2], t[0]).unwrap(),
            ];
            let interior_edges: HashSet<EdgeId> = map
                .edge_ids()
                .filter(|&e| {
                    !edges.contains(&e)
                        && faces.contains(&map.face_of(2 * e - 1))
                        && faces.contains(&map.face_of(2 * e))
                })
                .collect();
            let hole_marker = edges
                .iter()
                .flat_map(|&e| [2 * e - 1, 2 * e])
                .find(|&d| faces.contains(&map.face_of(d)))
                .unwrap();
            let outer_marker = edges
                .iter()
                .flat_map(|&e| [2 * e - 1, 2 * e])
                .find(|&d| !faces.contains(&map.face_of(d)))
                .unwrap();
            MaxCycle {
                edges,
                interior_edges,
                hole_marker,
                outer_marker,
            }
        })
        .collect();

    // the core: all interiors emptied
    let dropped: HashSet<EdgeId> = maximal
        .iter()
        .flat_map(|c| c.interior_edges.iter().copied())
        .collect();
    let keep: Vec<bool> = map.edge_ids().map(|e| !dropped.contains(&e)).collect();
    let (core_raw, to_core) = map.restrict_edges(&keep, map.root())?;
    let labels = core_raw.canonical_labels(core_raw.root().unwrap());
    let core = core_raw.relabeled(&labels, core_raw.root());
    let core_flags = core.classify();
    debug_assert!(core_flags.irreducible);
    // hole face of each maximal cycle, in canonical core labels
    let hole_of = |c: &MaxCycle| -> u32 { core.face_of(labels[to_core[c.hole_marker as usize] as usize]) };

    let outer = core.outer_face().unwrap();
    let mut components = vec![];
    for &f in core.faces() {
        if f == outer {
            continue;
        }
        let cyc = maximal.iter().find(|c| hole_of(c) == f);
        let Some(cyc) = cyc else {
            components.push(fixtures::tri());
            continue;
        };
        // distinguished vertex: origin of the face's smallest dart, pulled
        // back to the original map
        let mut inv_labels = vec![0u32; core_raw.n_darts() as usize + 1];
        for d in 1..=core_raw.n_darts() {
            inv_labels[labels[d as usize] as usize] = d;
        }
        let mut from_core = vec![0u32; core_raw.n_darts() as usize + 1];
        for d in map.darts() {
            if to_core[d as usize] != 0 {
                from_core[to_core[d as usize] as usize] = d;
            }
        }
        let v_dist = map.vertex_of(from_core[inv_labels[f as usize] as usize]);
        // extract the filling: cycle edges plus interior
        let keep_c: Vec<bool> = map
            .edge_ids()
            .map(|e| cyc.edges.contains(&e) || cyc.interior_edges.contains(&e))
            .collect();
        let (comp, to_comp) = map.restrict_edges(&keep_c, None)?;
        let comp_outer = comp.face_of(to_comp[cyc.outer_marker as usize]);
        let root = comp
            .face_darts(comp_outer)
            .into_iter()
            .find(|&d| comp.vertex_of(d) == comp.vertex_of(to_comp
                [map.vertex_darts(v_dist)
                    .into_iter()
                    .find(|&x| to_comp[x as usize] != 0)
                    .unwrap() as usize]))
            .expect("distinguished vertex lies on the filling's outer face");
        let comp = comp.with_root(root);
        debug_assert!(comp.classify().triangulation);
        components.push(comp.canonicalized());
    }

    let kind = if core.canonical_form() == fixtures::qwe().canonical_form() {
        DiagonalKind::WeDiagonal
    } else if core.canonical_form() == fixtures::qsn().canonical_form() {
        DiagonalKind::SnDiagonal
    } else {
        DiagonalKind::NonDiagonal
    };
    Ok(TriangulationDecomposition {
        core,
        components,
        kind,
    })
}

/// Inverse of [`tri_decompose`]: substitutes component `i` into the `i`-th
/// inner face of the core, matching the component's root vertex with the
/// face's distinguished vertex.
pub fn tri_compose(core: &RootedMap, components: &[RootedMap]) -> Result<RootedMap, DecomposeError> {
    let flags = core.classify();
    if !flags.irreducible {
        return Err(DecomposeError::CoreNotAdmissible);
    }
    let core = core.canonicalized();
    let outer = core.outer_face().unwrap();
    let inner: Vec<u32> = core.faces().iter().copied().filter(|&f| f != outer).collect();
    if components.len() != inner.len() {
        return Err(DecomposeError::ArityMismatch);
    }
    let triangle = fixtures::tri().canonical_form();
    for c in components {
        if !c.classify().triangulation {
            return Err(DecomposeError::NotTriangulation);
        }
    }

    let mut b = MapBuilder::new();
    for _ in 0..core.n_edges() {
        b.new_edge();
    }
    // per substituted component: map its darts into the new map
    let mut splices: HashMap<Dart, Vec<Dart>> = HashMap::new(); // after-core-dart -> sequence
    let mut extra_vertices: Vec<Vec<Dart>> = vec![];
    for (i, comp) in components.iter().enumerate() {
        if comp.canonical_form() == triangle {
            continue;
        }
        let comp = comp.canonicalized();
        let f = inner[i];
        let hole: Vec<Dart> = core.face_darts(f);
        debug_assert_eq!(hole.len(), 3);
        let comp_root = comp.root().unwrap();
        let boundary: Vec<Dart> = comp.face_darts(comp.face_of(comp_root));
        debug_assert_eq!(boundary.len(), 3);
        let rj = {
            // boundary walk starting at the root dart
            let start = boundary.iter().position(|&d| d == comp_root).unwrap();
            [
                boundary[start],
                boundary[(start + 1) % 3],
                boundary[(start + 2) % 3],
            ]
        };
        // dart identification: r_j and its reverse correspond to the hole
        // edge alpha(d_{2-j})
        let mut dart_map = vec![0u32; comp.n_darts() as usize + 1];
        for j in 0..3 {
            dart_map[rj[j] as usize] = alpha(hole[2 - j]);
            dart_map[alpha(rj[j]) as usize] = hole[2 - j];
        }
        let mut next_edge = b.new_edge();
        let mut first_new = true;
        for e in comp.edge_ids() {
            let (d1, d2) = (2 * e - 1, 2 * e);
            if dart_map[d1 as usize] != 0 {
                continue; // boundary edge, already identified
            }
            if !first_new {
                next_edge = b.new_edge();
            }
            first_new = false;
            dart_map[d1 as usize] = next_edge.0;
            dart_map[d2 as usize] = next_edge.1;
        }
        if first_new {
            // component had no interior edges: impossible, a triangulation
            // strictly larger than the triangle has interior edges
            unreachable!("non-triangle component has interior edges");
        }
        // interior vertices keep their full rotations
        let boundary_vs: HashSet<VertexId> =
            rj.iter().map(|&d| comp.vertex_of(d)).collect();
        for &v in comp.vertices() {
            if boundary_vs.contains(&v) {
                continue;
            }
            extra_vertices.push(
                comp.vertex_darts(v)
                    .into_iter()
                    .map(|d| dart_map[d as usize])
                    .collect(),
            );
        }
        // boundary vertices: the interior interval at origin(r_k) runs
        // clockwise from alpha(r_{k-1}) to r_k; splice it after the core
        // dart F(d_j) = d_{j+1}, i.e. after hole[(j+1) % 3] at head(d_j)
        for j in 0..3 {
            let k = (2 + 3 - j) % 3; // 2 - j mod 3
            let vk = comp.vertex_of(rj[k]);
            let rot = comp.vertex_darts(vk);
            let from = alpha(rj[(k + 2) % 3]);
            let pos = rot.iter().position(|&d| d == from).unwrap();
            let mut seq = vec![];
            let mut idx = (pos + 1) % rot.len();
            while rot[idx] != rj[k] {
                seq.push(dart_map[rot[idx] as usize]);
                idx = (idx + 1) % rot.len();
            }
            if !seq.is_empty() {
                splices.insert(hole[(j + 1) % 3], seq);
            }
        }
    }
    for &v in core.vertices() {
        let mut rot = vec![];
        for d in core.vertex_darts(v) {
            rot.push(d);
            if let Some(seq) = splices.get(&d) {
                rot.extend(seq.iter().copied());
            }
        }
        b.add_vertex(rot);
    }
    for rot in extra_vertices {
        b.add_vertex(rot);
    }
    let out = b.build(core.root())?;
    debug_assert!(out.classify().quad_triangulation);
    Ok(out)
}

/// Deletes the outer edge following the root counterclockwise, turning a
/// rooted triangulation into a rooted triangulation of the 4-gon whose W
/// and E poles are non-adjacent.
pub fn tri_to_quad(map: &RootedMap) -> Result<RootedMap, DecomposeError> {
    if !map.classify().triangulation {
        return Err(DecomposeError::NotTriangulation);
    }
    if map.n_vertices() < 4 {
        return Err(DecomposeError::TooSmall);
    }
    let root = map.root().unwrap();
    let gone = edge_of(map.face_next(root));
    let (quad, relabel) = map.delete_edge(gone, Some(root));
    let quad = quad.with_root(relabel[root as usize]);
    debug_assert!(quad.classify().quad_triangulation);
    Ok(quad)
}

/// Adds the chord `{W, E}` inside the outer quadrangle so that the new
/// outer face is the triangle containing N; inverse of [`tri_to_quad`].
pub fn quad_to_tri(map: &RootedMap) -> Result<RootedMap, DecomposeError> {
    if !map.classify().quad_triangulation {
        return Err(DecomposeError::NotQuadTriangulation);
    }
    let root = map.root().unwrap();
    let walk = map.face_darts(root);
    debug_assert_eq!(walk.len(), 4);
    let (w, e) = (map.vertex_of(walk[1]), map.vertex_of(walk[3]));
    if map.edge_between(w, e).is_some() {
        return Err(DecomposeError::WEDiagonal);
    }
    let (out, _chord) = map.insert_edge_after(walk[1], walk[3], Some(root));
    debug_assert!(out.classify().triangulation);
    Ok(out)
}

/// The recursive bijection from rooted loopless maps with `n` edges to
/// rooted triangulations with `n` inner vertices.
pub fn f2(map: &RootedMap) -> Result<RootedMap, DecomposeError> {
    if !map.classify().loopless {
        return Err(DecomposeError::HasLoop);
    }
    let mut memo: HashMap<CanonicalForm, RootedMap> = HashMap::new();
    let mut stack = vec![map.clone()];
    while let Some(cur) = stack.pop() {
        let key = cur.canonical_form();
        if memo.contains_key(&key) {
            continue;
        }
        if cur.n_edges() == 0 {
            memo.insert(key, fixtures::tri());
            continue;
        }
        let dec = block_decompose(&cur)?;
        let pending: Vec<RootedMap> = dec
            .components
            .iter()
            .filter(|c| !memo.contains_key(&c.canonical_form()))
            .cloned()
            .collect();
        if !pending.is_empty() {
            stack.push(cur);
            stack.extend(pending);
            continue;
        }
        let core_t = f1_tilde(&dec.core)?;
        let comps: Vec<RootedMap> = dec
            .components
            .iter()
            .map(|c| memo[&c.canonical_form()].clone())
            .collect();
        let t4 = tri_compose(&core_t, &comps)?;
        let t = quad_to_tri(&t4)?;
        debug_assert_eq!(t.n_vertices() as u32, cur.n_edges() + 3);
        memo.insert(key, t);
    }
    Ok(memo.remove(&map.canonical_form()).unwrap())
}

/// Inverse of [`f2`], for triangulations with at most
/// [`F2_INV_MAX_SIZE`] inner vertices (the bound inherited from the
/// search-based minimal transversal structure).
pub fn f2_inv(map: &RootedMap) -> Result<RootedMap, DecomposeError> {
    if !map.classify().triangulation {
        return Err(DecomposeError::NotTriangulation);
    }
    if map.n_vertices() as u32 - 3 > F2_INV_MAX_SIZE {
        return Err(DecomposeError::SizeTooLarge);
    }
    let triangle = fixtures::tri().canonical_form();
    let mut memo: HashMap<CanonicalForm, RootedMap> = HashMap::new();
    let mut stack = vec![map.clone()];
    while let Some(cur) = stack.pop() {
        let key = cur.canonical_form();
        if memo.contains_key(&key) {
            continue;
        }
        if key == triangle {
            memo.insert(key, RootedMap::vertex_map());
            continue;
        }
        let t4 = tri_to_quad(&cur)?;
        let dec = tri_decompose(&t4)?;
        let pending: Vec<RootedMap> = dec
            .components
            .iter()
            .filter(|c| !memo.contains_key(&c.canonical_form()))
            .cloned()
            .collect();
        if !pending.is_empty() {
            stack.push(cur);
            stack.extend(pending);
            continue;
        }
        let core_m = f1_tilde_inv(&dec.core)?;
        let comps: Vec<RootedMap> = dec
            .components
            .iter()
            .map(|c| memo[&c.canonical_form()].clone())
            .collect();
        let m = block_compose(&core_m, &comps)?;
        debug_assert_eq!(m.n_edges() + 3, cur.n_vertices() as u32);
        memo.insert(key, m.canonicalized());
    }
    Ok(memo.remove(&map.canonical_form()).unwrap())
}

/// Size bound for `f2_inv` (inner vertices of the input triangulation).
pub const F2_INV_MAX_SIZE: u32 = 4;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_decompose_edge_map() {
        let dec = block_decompose(&fixtures::emap()).unwrap();
        assert_eq!(dec.core.canonical_form(), fixtures::emap().canonical_form());
        assert_eq!(dec.components.len(), 2);
        assert!(dec.components.iter().all(|c| c.n_edges() == 0));
    }

    #[test]
    fn block_decompose_path() {
        let dec = block_decompose(&fixtures::path2()).unwrap();
        assert_eq!(dec.core.canonical_form(), fixtures::emap().canonical_form());
        let sizes: Vec<u32> = dec.components.iter().map(|c| c.n_edges()).collect();
        assert_eq!(sizes, vec![0, 1]);
        let back = block_compose(&dec.core, &dec.components).unwrap();
        assert_eq!(back.canonical_form(), fixtures::path2().canonical_form());
    }

    #[test]
    fn block_roundtrip_small() {
        for n in 1..=4 {
            for m in crate::enumerate::enumerate_family(crate::enumerate::Family::Loopless, n).unwrap() {
                let dec = block_decompose(&m).unwrap();
                let total: u32 =
                    dec.core.n_edges() + dec.components.iter().map(|c| c.n_edges()).sum::<u32>();
                assert_eq!(total, m.n_edges(), "sizes must add up");
                let back = block_compose(&dec.core, &dec.components).unwrap();
                assert_eq!(back.canonical_form(), m.canonical_form());
            }
        }
    }

    #[test]
    fn qsn_decomposition() {
        let dec = tri_decompose(&fixtures::qsn()).unwrap();
        assert_eq!(dec.kind, DiagonalKind::SnDiagonal);
        assert_eq!(dec.components.len(), 2);
        let tri_cf = fixtures::tri().canonical_form();
        assert!(dec.components.iter().all(|c| c.canonical_form() == tri_cf));
        let back = tri_compose(&dec.core, &dec.components).unwrap();
        assert_eq!(back.canonical_form(), fixtures::qsn().canonical_form());
    }

    #[test]
    fn k4_to_quad_and_back() {
        let quad = tri_to_quad(&fixtures::k4r()).unwrap();
        assert_eq!(quad.canonical_form(), fixtures::qsn().canonical_form());
        let back = quad_to_tri(&quad).unwrap();
        assert_eq!(back.canonical_form(), fixtures::k4r().canonical_form());
    }

    #[test]
    fn qwe_has_no_chord_slot() {
        assert_eq!(
            quad_to_tri(&fixtures::qwe()).unwrap_err(),
            DecomposeError::WEDiagonal
        );
    }

    #[test]
    fn f2_base_cases() {
        assert_eq!(
            f2(&RootedMap::vertex_map()).unwrap().canonical_form(),
            fixtures::tri().canonical_form()
        );
        assert_eq!(
            f2(&fixtures::emap()).unwrap().canonical_form(),
            fixtures::k4r().canonical_form()
        );
        assert_eq!(
            f2_inv(&fixtures::k4r()).unwrap().canonical_form(),
            fixtures::emap().canonical_form()
        );
        assert_eq!(
            f2_inv(&fixtures::tri()).unwrap().canonical_form(),
            RootedMap::vertex_map().canonical_form()
        );
    }
}
