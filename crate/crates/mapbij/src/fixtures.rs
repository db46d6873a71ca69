//! Frozen small maps used as test oracles and documentation examples.
//!
//! The rotation tables are hand-derived; geometric descriptions are in the
//! guide. `tri` is the convention-pinning fixture: vertices A, B, C clockwise
//! on the boundary, edge AB = darts {1@A, 2@B}, BC = {3@B, 4@C},
//! CA = {5@C, 6@A}, root 2, inner face orbit (1,3,5), outer (2,6,4).

use crate::map::RootedMap;

/// The vertex-map: one vertex, no edges.
pub fn vmap() -> RootedMap {
    RootedMap::vertex_map()
}

/// The edge-map: two vertices joined by one edge, rooted at dart 1.
pub fn emap() -> RootedMap {
    RootedMap::build(1, &[1, 2], 1).unwrap()
}

/// A single loop on one vertex.
pub fn loop_map() -> RootedMap {
    RootedMap::build(1, &[2, 1], 1).unwrap()
}

/// The triangle fixture freezing the clockwise/outer-face conventions.
pub fn tri() -> RootedMap {
    RootedMap::build(3, &[6, 3, 2, 5, 4, 1], 2).unwrap()
}

/// Two parallel edges between two vertices, rooted at dart 1.
pub fn c2() -> RootedMap {
    RootedMap::build(2, &[3, 4, 1, 2], 1).unwrap()
}

/// A path of two edges rooted at a leaf: u -1- v -2- w, root at u.
pub fn path2() -> RootedMap {
    RootedMap::build(2, &[1, 3, 2, 4], 1).unwrap()
}

/// The SN-link-map: quadrangle (N,E,S,W) plus the diagonal {S,N}, rooted at
/// the dart from N to W. Edges: NE, ES, SW, WN, SN.
pub fn qsn() -> RootedMap {
    RootedMap::build(5, &[10, 3, 2, 5, 9, 7, 6, 1, 4, 8], 8).unwrap()
}

/// The WE-link-map: quadrangle (N,E,S,W) plus the diagonal {W,E}, rooted at
/// the dart from N to W. Edges: NE, ES, SW, WN, WE.
pub fn qwe() -> RootedMap {
    RootedMap::build(5, &[8, 3, 10, 5, 4, 7, 9, 1, 6, 2], 8).unwrap()
}

/// K4 as a rooted triangulation: the quadrangle of `qsn` with the chord
/// {W,E} added in the outer face, rooted at the dart from N to W. This is
/// the image of the edge-map under the loopless-to-triangulation bijection.
pub fn k4r() -> RootedMap {
    RootedMap::build(6, &[10, 12, 2, 5, 9, 11, 6, 1, 4, 8, 7, 3], 8).unwrap()
}

/// The 5-vertex pyramid: quadrangle (N,E,S,W) plus a center adjacent to all
/// four outer vertices, rooted at the dart from N to W. The smallest
/// irreducible triangulation with an inner vertex. Edges: NE, ES, SW, WN,
/// Nv, Ev, Sv, Wv.
pub fn i5() -> RootedMap {
    RootedMap::build(
        8,
        &[9, 3, 11, 5, 13, 7, 15, 1, 8, 12, 2, 14, 4, 16, 6, 10],
        8,
    )
    .unwrap()
}
