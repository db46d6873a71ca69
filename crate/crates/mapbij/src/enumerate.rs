//! Isomorph-free exhaustive generation of map families at desk scale.
//!
//! The primary generator completes partial rotation systems depth-first in
//! canonical-traversal order, so every connected rooted map on an orientable
//! surface is produced exactly once, already canonically labeled; genus-0
//! survivors are kept. A second, structurally different generator grows maps
//! by root-preserving edge insertion with canonical deduplication and must
//! agree with the first on small sizes.
//!
//! Triangulations (all faces of degree 3) and triangulations of the 4-gon
//! are generated by boundary completion: starting from the outer cycle, the
//! open region is filled triangle by triangle, branching on the apex of the
//! triangle covering a fixed boundary edge. Each filling of the labeled
//! boundary is a distinct rooted map, so no deduplication is needed.

use crate::map::{alpha, darts_of_edge, Dart, MapBuilder, RootedMap};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("requested size exceeds the configured bound")]
    SizeTooLarge,
}

/// Map families with exhaustive generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Size parameter: edge count.
    Loopless,
    /// Size parameter: edge count.
    Nonseparable,
    /// Size parameter: `||T|| = |V| - 3` (= inner vertex count).
    Triangulation,
    /// Size parameter: `||T|| = |V| - 3` (= inner vertex count + 1).
    QuadTriangulation,
    /// Size parameter: as for `QuadTriangulation`.
    Irreducible,
}

/// Bound for all-maps enumeration.
pub const MAX_EDGES: u32 = 7;
/// Bound for simple-maps enumeration (used by the poset census).
pub const MAX_SIMPLE_EDGES: u32 = 8;
/// Bound on `||T||` for triangulations.
pub const MAX_TRI_SIZE: u32 = 5;
/// Bound on `||T||` for triangulations of the 4-gon.
pub const MAX_QUAD_SIZE: u32 = 5;

/// All rooted planar maps with `n` edges, each exactly once, in canonical
/// order.
pub fn enumerate_maps(n: u32) -> Result<Vec<RootedMap>, EnumError> {
    if n > MAX_EDGES {
        return Err(EnumError::SizeTooLarge);
    }
    Ok(generate(n, false))
}

/// All simple rooted planar maps with `n` edges (no loops, no multiple
/// edges); reaches one edge further than [`enumerate_maps`].
pub fn enumerate_simple_maps(n: u32) -> Result<Vec<RootedMap>, EnumError> {
    if n > MAX_SIMPLE_EDGES {
        return Err(EnumError::SizeTooLarge);
    }
    Ok(generate(n, true))
}

fn generate(n: u32, simple_only: bool) -> Vec<RootedMap> {
    if n == 0 {
        return vec![RootedMap::vertex_map()];
    }
    let mut gen = CanonicalDfs::new(n, simple_only);
    gen.run();
    let mut out = gen.out;
    out.sort_by_key(|m| m.canonical_form());
    out
}

/// Depth-first completion of a rotation system in canonical breadth-first
/// label order. Labels are allocated exactly as the canonical traversal
/// would, so each completed map is emitted once and already canonical.
struct CanonicalDfs {
    nd: u32,
    sigma: Vec<Dart>,
    image_used: Vec<bool>,
    touched: Vec<bool>,
    queue: Vec<Dart>,
    next_odd: u32,
    simple_only: bool,
    dsu: LoopDsu,
    out: Vec<RootedMap>,
}

/// Union–find over darts whose classes are partial vertex orbits, with an
/// edge bitmask per class so that closing a loop is detected on union.
struct LoopDsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    edges: Vec<u32>, // bitmask of edges with a dart in the class
    log: Vec<(u32, u32)>,
}

impl LoopDsu {
    fn new(nd: u32) -> LoopDsu {
        LoopDsu {
            parent: (0..=nd).collect(),
            size: vec![1; nd as usize + 1],
            edges: (0..=nd).map(|d| if d == 0 { 0 } else { 1 << (d.div_ceil(2) - 1) }).collect(),
            log: vec![],
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    /// Unions the classes of `a` and `b`; returns `(loop_created, undo_mark)`.
    fn union(&mut self, a: u32, b: u32) -> (bool, usize) {
        let mark = self.log.len();
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return (false, mark);
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        let looped = self.edges[ra as usize] & self.edges[rb as usize] != 0;
        self.log.push((rb, ra));
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.edges[ra as usize] |= self.edges[rb as usize];
        (looped, mark)
    }

    fn rollback(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (child, root) = self.log.pop().unwrap();
            self.parent[child as usize] = child;
            self.size[root as usize] -= self.size[child as usize];
            self.edges[root as usize] &= !self.edges[child as usize];
        }
    }
}

impl CanonicalDfs {
    fn new(n: u32, simple_only: bool) -> CanonicalDfs {
        let nd = 2 * n;
        let mut gen = CanonicalDfs {
            nd,
            sigma: vec![0; nd as usize + 1],
            image_used: vec![false; nd as usize + 1],
            touched: vec![false; nd as usize + 1],
            queue: vec![],
            next_odd: 3,
            simple_only,
            dsu: LoopDsu::new(nd),
            out: vec![],
        };
        gen.touched[1] = true;
        gen.queue.push(1);
        gen
    }

    fn run(&mut self) {
        self.dfs(0);
    }

    fn dfs(&mut self, qpos: usize) {
        if qpos == self.queue.len() {
            if self.queue.len() == self.nd as usize {
                self.emit();
            }
            return;
        }
        let d = self.queue[qpos];
        // collect candidate images for sigma(d)
        let mut candidates: Vec<Dart> = (1..=self.nd)
            .filter(|&x| {
                !self.image_used[x as usize]
                    && (self.touched[x as usize]
                        || (x % 2 == 0 && self.touched[x as usize - 1])
                        || x == self.next_odd)
            })
            .collect();
        candidates.sort_unstable();
        for x in candidates {
            let (looped, mark) = self.dsu.union(d, x);
            if looped && self.simple_only {
                self.dsu.rollback(mark);
                continue;
            }
            let saved_next_odd = self.next_odd;
            let mut pushed = 0;
            if !self.touched[x as usize] {
                self.touched[x as usize] = true;
                self.queue.push(x);
                pushed += 1;
                if x == self.next_odd {
                    self.next_odd += 2;
                }
            }
            let a = alpha(d);
            if !self.touched[a as usize] {
                self.touched[a as usize] = true;
                self.queue.push(a);
                pushed += 1;
            }
            self.sigma[d as usize] = x;
            self.image_used[x as usize] = true;

            self.dfs(qpos + 1);

            self.sigma[d as usize] = 0;
            self.image_used[x as usize] = false;
            for _ in 0..pushed {
                let y = self.queue.pop().unwrap();
                self.touched[y as usize] = false;
            }
            self.next_odd = saved_next_odd;
            self.dsu.rollback(mark);
        }
    }

    fn emit(&mut self) {
        let nd = self.nd as usize;
        // Euler check: V - m + F = 2
        let v = count_cycles(nd, |d| self.sigma[d as usize]);
        let mut sigma_inv = vec![0u32; nd + 1];
        for d in 1..=nd {
            sigma_inv[self.sigma[d] as usize] = d as u32;
        }
        let f = count_cycles(nd, |d| sigma_inv[alpha(d) as usize]);
        if v as i64 - (self.nd / 2) as i64 + f as i64 != 2 {
            return;
        }
        let map = RootedMap::build(self.nd / 2, &self.sigma[1..], 1).expect("generator output is valid");
        if self.simple_only && !map.is_simple() {
            return;
        }
        self.out.push(map);
    }
}

fn count_cycles(nd: usize, next: impl Fn(Dart) -> Dart) -> usize {
    let mut seen = vec![false; nd + 1];
    let mut count = 0;
    for d in 1..=nd as u32 {
        if seen[d as usize] {
            continue;
        }
        count += 1;
        let mut x = d;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = next(x);
        }
    }
    count
}

/// Second generation strategy: grow maps by inserting one edge at a time
/// (two corners of a common face, or a pendant edge in a corner), keeping
/// the root, deduplicating by canonical form. Agrees with
/// [`enumerate_maps`] on every size it is run at.
pub fn enumerate_maps_by_insertion(n: u32) -> Result<Vec<RootedMap>, EnumError> {
    if n > MAX_EDGES {
        return Err(EnumError::SizeTooLarge);
    }
    if n == 0 {
        return Ok(vec![RootedMap::vertex_map()]);
    }
    // level 1: the edge-map and the loop
    let mut level: Vec<RootedMap> = vec![
        RootedMap::build(1, &[1, 2], 1).unwrap(),
        RootedMap::build(1, &[2, 1], 1).unwrap(),
    ];
    for _ in 2..=n {
        let mut seen = HashSet::new();
        let mut next = vec![];
        for map in &level {
            for candidate in all_insertions(map) {
                let cf = candidate.canonical_form();
                if seen.insert(cf) {
                    next.push(candidate);
                }
            }
        }
        level = next;
    }
    level.sort_by_key(|m| m.canonical_form());
    Ok(level)
}

fn all_insertions(map: &RootedMap) -> Vec<RootedMap> {
    let mut out = vec![];
    let root = map.root();
    // rotations indexed by vertex position; dart -> (vertex pos, slot)
    let rotations = map.rotation_lists();
    let mut pos = vec![(0usize, 0usize); map.n_darts() as usize + 1];
    for (vi, rot) in rotations.iter().enumerate() {
        for (si, &d) in rot.iter().enumerate() {
            pos[d as usize] = (vi, si);
        }
    }
    let (da, db) = darts_of_edge(map.n_edges() + 1);
    let rebuild = |rots: &[Vec<Dart>]| -> RootedMap {
        let mut b = MapBuilder::new();
        for e in map.edge_ids() {
            let _ = e;
            b.new_edge();
        }
        b.new_edge();
        for rot in rots {
            b.add_vertex(rot.clone());
        }
        b.build(root).expect("insertion produced a valid map")
    };
    // edge between two corners of a common face
    for &f in map.faces() {
        let orbit = map.face_darts(f);
        for &d1 in &orbit {
            for &d2 in &orbit {
                let mut rots = rotations.clone();
                if d1 == d2 {
                    let (vi, si) = pos[d1 as usize];
                    rots[vi].splice(si + 1..si + 1, [da, db]);
                } else {
                    let (v1, s1) = pos[d1 as usize];
                    let (v2, s2) = pos[d2 as usize];
                    if v1 == v2 {
                        // insert the later slot first so indices stay valid
                        let (hi, lo, dhi, dlo) = if s1 > s2 {
                            (s1, s2, da, db)
                        } else {
                            (s2, s1, db, da)
                        };
                        rots[v1].insert(hi + 1, dhi);
                        rots[v1].insert(lo + 1, dlo);
                    } else {
                        rots[v1].insert(s1 + 1, da);
                        rots[v2].insert(s2 + 1, db);
                    }
                }
                out.push(rebuild(&rots));
            }
        }
    }
    // pendant edge in any corner
    for d1 in map.darts() {
        let mut rots = rotations.clone();
        let (vi, si) = pos[d1 as usize];
        rots[vi].insert(si + 1, da);
        rots.push(vec![db]);
        out.push(rebuild(&rots));
    }
    out
}

/// Boundary-completion generator for triangulations of a fixed labeled
/// outer cycle.
struct DiskFiller {
    sigma: Vec<Dart>,      // grows; index 0 unused
    vertex_of: Vec<u32>,   // per dart
    n_vertices: u32,
    adjacent: HashSet<(u32, u32)>,
    root: Dart,
    out: Vec<RootedMap>,
}

impl DiskFiller {
    fn edge_key(a: u32, b: u32) -> (u32, u32) {
        (a.min(b), a.max(b))
    }

    fn new_dart_pair(&mut self, u: u32, v: u32) -> (Dart, Dart) {
        let a = self.sigma.len() as Dart;
        self.sigma.push(0);
        self.sigma.push(0);
        self.vertex_of.push(u);
        self.vertex_of.push(v);
        self.adjacent.insert(Self::edge_key(u, v));
        (a, a + 1)
    }

    fn release_dart_pair(&mut self, u: u32, v: u32) {
        self.sigma.pop();
        self.sigma.pop();
        self.vertex_of.pop();
        self.vertex_of.pop();
        self.adjacent.remove(&Self::edge_key(u, v));
    }

    /// Fill the holes; `budget` is the number of interior vertices still to
    /// be created.
    fn fill(&mut self, holes: &[Vec<Dart>], budget: u32) {
        let Some(hole) = holes.first() else {
            if budget == 0 {
                let m = (self.sigma.len() / 2) as u32;
                let map = RootedMap::build(m, &self.sigma[1..], self.root)
                    .expect("filler output is valid");
                self.out.push(map);
            }
            return;
        };
        let rest = &holes[1..];
        let k = hole.len();
        let d0 = hole[0];
        let u = self.vertex_of[d0 as usize];
        let v = self.vertex_of[alpha(d0) as usize];
        debug_assert_eq!(self.vertex_of[hole[1] as usize], v);

        if k == 3 {
            // close the triangular hole as a face
            self.fill(rest, budget);
        }
        // new interior apex
        if budget > 0 {
            let w = self.n_vertices;
            self.n_vertices += 1;
            let (c1v, c1w) = self.new_dart_pair(v, w);
            let (c2w, c2u) = self.new_dart_pair(w, u);
            let saved = [
                (hole[1], self.sigma[hole[1] as usize]),
                (d0, self.sigma[d0 as usize]),
            ];
            let old_sd0 = self.sigma[d0 as usize];
            self.sigma[hole[1] as usize] = c1v;
            self.sigma[c1v as usize] = alpha(d0);
            self.sigma[c1w as usize] = c2w;
            self.sigma[c2w as usize] = c1w;
            self.sigma[d0 as usize] = c2u;
            self.sigma[c2u as usize] = old_sd0;
            let mut new_hole = vec![c2u, c1w];
            new_hole.extend_from_slice(&hole[1..]);
            let mut next = vec![new_hole];
            next.extend_from_slice(rest);
            self.fill(&next, budget - 1);
            for (d, s) in saved {
                self.sigma[d as usize] = s;
            }
            self.release_dart_pair(w, u);
            self.release_dart_pair(v, w);
            self.n_vertices -= 1;
        }
        if k > 3 {
            // apex = the vertex after v: reuse the hole edge (v, w)
            {
                let w = self.vertex_of[hole[2] as usize];
                if !self.adjacent.contains(&Self::edge_key(w, u)) {
                    let (cw, cu) = self.new_dart_pair(w, u);
                    let saved = [
                        (hole[2], self.sigma[hole[2] as usize]),
                        (d0, self.sigma[d0 as usize]),
                    ];
                    let old_sd0 = self.sigma[d0 as usize];
                    self.sigma[hole[2] as usize] = cw;
                    self.sigma[cw as usize] = alpha(hole[1]);
                    self.sigma[d0 as usize] = cu;
                    self.sigma[cu as usize] = old_sd0;
                    let mut new_hole = vec![cu];
                    new_hole.extend_from_slice(&hole[2..]);
                    let mut next = vec![new_hole];
                    next.extend_from_slice(rest);
                    self.fill(&next, budget);
                    for (d, s) in saved {
                        self.sigma[d as usize] = s;
                    }
                    self.release_dart_pair(w, u);
                }
            }
            // apex = the vertex before u: reuse the hole edge (w, u)
            {
                let dl = hole[k - 1];
                let w = self.vertex_of[dl as usize];
                if !self.adjacent.contains(&Self::edge_key(v, w)) {
                    let (cv, cw) = self.new_dart_pair(v, w);
                    let saved = [
                        (hole[1], self.sigma[hole[1] as usize]),
                        (dl, self.sigma[dl as usize]),
                    ];
                    let old_sdl = self.sigma[dl as usize];
                    self.sigma[hole[1] as usize] = cv;
                    self.sigma[cv as usize] = alpha(d0);
                    self.sigma[dl as usize] = cw;
                    self.sigma[cw as usize] = old_sdl;
                    let mut new_hole = vec![cw];
                    new_hole.extend_from_slice(&hole[1..k - 1]);
                    let mut next = vec![new_hole];
                    next.extend_from_slice(rest);
                    self.fill(&next, budget);
                    for (d, s) in saved {
                        self.sigma[d as usize] = s;
                    }
                    self.release_dart_pair(v, w);
                }
            }
            // apex strictly between: two chords, hole splits
            for j in 2..=k - 2 {
                let dj = hole[j];
                let w = self.vertex_of[dj as usize];
                if self.adjacent.contains(&Self::edge_key(v, w))
                    || self.adjacent.contains(&Self::edge_key(w, u))
                {
                    continue;
                }
                let (cv, cw) = self.new_dart_pair(v, w);
                let (cpw, cpu) = self.new_dart_pair(w, u);
                let saved = [
                    (hole[1], self.sigma[hole[1] as usize]),
                    (dj, self.sigma[dj as usize]),
                    (d0, self.sigma[d0 as usize]),
                ];
                let old_sdj = self.sigma[dj as usize];
                let old_sd0 = self.sigma[d0 as usize];
                self.sigma[hole[1] as usize] = cv;
                self.sigma[cv as usize] = alpha(d0);
                self.sigma[dj as usize] = cpw;
                self.sigma[cpw as usize] = cw;
                self.sigma[cw as usize] = old_sdj;
                self.sigma[d0 as usize] = cpu;
                self.sigma[cpu as usize] = old_sd0;
                let mut hole_a = vec![cw];
                hole_a.extend_from_slice(&hole[1..j]);
                let mut hole_b = vec![cpu];
                hole_b.extend_from_slice(&hole[j..]);
                let mut next = vec![hole_a, hole_b];
                next.extend_from_slice(rest);
                self.fill(&next, budget);
                for (d, s) in saved {
                    self.sigma[d as usize] = s;
                }
                self.release_dart_pair(w, u);
                self.release_dart_pair(v, w);
            }
        }
    }
}

/// All rooted triangulations (every face of degree 3, outer included) with
/// `size` = `||T||` = number of inner vertices.
pub fn enumerate_triangulations(size: u32) -> Result<Vec<RootedMap>, EnumError> {
    if size > MAX_TRI_SIZE {
        return Err(EnumError::SizeTooLarge);
    }
    // outer triangle A, B, C; edges AB, BC, CA; hole = inner side; this is
    // the `tri` fixture's labeling, rooted at dart 2
    let mut filler = DiskFiller {
        sigma: vec![0, 6, 3, 2, 5, 4, 1],
        vertex_of: vec![0, 0, 1, 1, 2, 2, 0],
        n_vertices: 3,
        adjacent: [(0, 1), (1, 2), (0, 2)].into_iter().collect(),
        root: 2,
        out: vec![],
    };
    filler.fill(&[vec![1, 3, 5]], size);
    let mut out = filler.out;
    out.sort_by_key(|m| m.canonical_form());
    Ok(out)
}

/// All rooted triangulations of the 4-gon with `size` = `||T||` = `|V| - 3`.
pub fn enumerate_quad_triangulations(size: u32) -> Result<Vec<RootedMap>, EnumError> {
    if size == 0 || size > MAX_QUAD_SIZE {
        return Err(EnumError::SizeTooLarge);
    }
    // outer quadrangle N, E, S, W (vertices 0..4), edges NE, ES, SW, WN;
    // rooted at the dart from N to W (dart 8); hole = the inner square
    let mut filler = DiskFiller {
        sigma: vec![0, 8, 3, 2, 5, 4, 7, 6, 1],
        vertex_of: vec![0, 0, 1, 1, 2, 2, 3, 3, 0],
        n_vertices: 4,
        adjacent: [(0, 1), (1, 2), (2, 3), (0, 3)].into_iter().collect(),
        root: 8,
        out: vec![],
    };
    filler.fill(&[vec![1, 3, 5, 7]], size - 1);
    let mut out = filler.out;
    out.sort_by_key(|m| m.canonical_form());
    Ok(out)
}

/// Exhaustive enumeration of one family at one size, in canonical order.
pub fn enumerate_family(family: Family, size: u32) -> Result<Vec<RootedMap>, EnumError> {
    match family {
        Family::Loopless => Ok(enumerate_maps(size)?
            .into_iter()
            .filter(|m| m.classify().loopless)
            .collect()),
        Family::Nonseparable => Ok(enumerate_maps(size)?
            .into_iter()
            .filter(|m| m.classify().nonseparable)
            .collect()),
        Family::Triangulation => enumerate_triangulations(size),
        Family::QuadTriangulation => enumerate_quad_triangulations(size),
        Family::Irreducible => Ok(enumerate_quad_triangulations(size)?
            .into_iter()
            .filter(|m| m.classify().irreducible)
            .collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_map_counts() {
        assert_eq!(enumerate_maps(0).unwrap().len(), 1);
        assert_eq!(enumerate_maps(1).unwrap().len(), 2);
        assert_eq!(enumerate_maps(2).unwrap().len(), 9);
        assert_eq!(enumerate_maps(3).unwrap().len(), 54);
    }

    #[test]
    fn generators_agree_small() {
        for n in 0..=4 {
            let a = enumerate_maps(n).unwrap();
            let b = enumerate_maps_by_insertion(n).unwrap();
            assert_eq!(a.len(), b.len(), "count mismatch at {n} edges");
            let fa: Vec<_> = a.iter().map(|m| m.canonical_form()).collect();
            let fb: Vec<_> = b.iter().map(|m| m.canonical_form()).collect();
            assert_eq!(fa, fb, "sets differ at {n} edges");
        }
    }

    #[test]
    fn no_duplicates_at_five() {
        let maps = enumerate_maps(5).unwrap();
        assert_eq!(maps.len(), 2916);
        let forms: HashSet<_> = maps.iter().map(|m| m.canonical_form()).collect();
        assert_eq!(forms.len(), maps.len());
        // strictly increasing canonical order
        let sorted: Vec<_> = maps.iter().map(|m| m.canonical_form()).collect();
        assert!(sorted.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn loopless_counts() {
        let expect = [1usize, 1, 3, 13, 68, 399];
        for (n, &want) in expect.iter().enumerate() {
            let got = enumerate_family(Family::Loopless, n as u32).unwrap().len();
            assert_eq!(got, want, "loopless count at {n} edges");
        }
    }

    #[test]
    fn nonseparable_counts() {
        // lambda(n-1) for n = 2..=6 edges
        let expect = [(2u32, 1usize), (3, 2), (4, 6), (5, 22), (6, 91)];
        for (n, want) in expect {
            let got = enumerate_family(Family::Nonseparable, n).unwrap().len();
            assert_eq!(got, want, "nonseparable count at {n} edges");
        }
    }

    #[test]
    fn triangulation_counts() {
        let expect = [1usize, 1, 3, 13];
        for (n, &want) in expect.iter().enumerate() {
            let ts = enumerate_family(Family::Triangulation, n as u32).unwrap();
            assert_eq!(ts.len(), want, "triangulation count at ||T|| = {n}");
            for t in &ts {
                let fl = t.classify();
                assert!(fl.triangulation);
                assert_eq!(t.n_vertices() as u32, n as u32 + 3);
            }
        }
    }

    #[test]
    fn irreducible_counts() {
        // lambda(k) irreducible triangulations with k inner vertices, i.e.
        // size k+1
        let expect = [(1u32, 1usize), (2, 2), (3, 6)];
        for (k, want) in expect {
            let got = enumerate_family(Family::Irreducible, k + 1).unwrap();
            assert_eq!(got.len(), want, "irreducible count at {k} inner vertices");
            for t in &got {
                assert!(t.classify().irreducible);
            }
        }
    }

    #[test]
    fn smallest_irreducible_is_pyramid() {
        let got = enumerate_family(Family::Irreducible, 2).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(
            got[0].canonical_form(),
            crate::fixtures::i5().canonical_form()
        );
    }

    #[test]
    fn link_maps_enumerated_at_size_one() {
        let got = enumerate_family(Family::QuadTriangulation, 1).unwrap();
        assert_eq!(got.len(), 2);
        let forms: HashSet<_> = got.iter().map(|m| m.canonical_form()).collect();
        assert!(forms.contains(&crate::fixtures::qsn().canonical_form()));
        assert!(forms.contains(&crate::fixtures::qwe().canonical_form()));
    }
}
