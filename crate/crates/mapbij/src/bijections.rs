//! The bijections between plane bipolar orientations, N-avoiding plane
//! bipolar posets, N-avoiding transversal structures, and the derived
//! map-level bijection between rooted non-separable maps and rooted
//! irreducible triangulations.
//!
//! `phi` subdivides every edge of the orientation (augmented by two outer
//! edges from source to sink) by a white vertex and joins the whites across
//! each face: every white on the left lateral path to the white of the
//! bottomright edge, and the white of the topleft edge to every white on
//! the right lateral path, all directed left to right. `psi` is the
//! inverse: one vertex per face, one edge per non-special vertex running
//! from its right lateral face to its left lateral face.
//!
//! `phi_prime` completes a plane bipolar poset into a transversal
//! structure by adding W and E poles and triangulating each face with blue
//! edges in the unique N-avoiding way; `psi_prime` extracts the red poset.

use crate::bipolar::{minimal_bipolar, BipolarError, BipolarOrientation, FaceNode};
use crate::fixtures;
use crate::map::{alpha, edge_of, Dart, EdgeId, MapBuilder, MapError, RootedMap, VertexId};
use crate::transversal::{
    minimal_transversal, EdgeColor, TransversalError, TransversalStructure,
};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("input does not satisfy the operation's precondition")]
    InvalidInput,
    #[error("input is not a plane bipolar poset")]
    NotAPoset,
    #[error("structure has no inner vertex")]
    NoInnerVertex,
    #[error("map is not non-separable")]
    NotNonseparable,
    #[error("map is not an irreducible triangulation")]
    NotIrreducible,
    #[error("map too small for this operation")]
    TooSmall,
    #[error("size exceeds the configured bound")]
    SizeTooLarge,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Bipolar(#[from] BipolarError),
    #[error(transparent)]
    Transversal(#[from] TransversalError),
}

/// One face of the augmented orientation, as the whites on its two lateral
/// paths (bottom to top). Whites are indexed by edge: `0..n` for the map's
/// edges, `n` for the added left edge, `n+1` for the added right edge.
struct FanFace {
    left: Vec<usize>,
    right: Vec<usize>,
}

/// The poset associated to a plane bipolar orientation with at least one
/// edge: an N-avoiding plane bipolar poset with `n + 2` vertices.
pub fn phi(o: &BipolarOrientation) -> Result<BipolarOrientation, BijectionError> {
    let n = o.n_edges() as usize;
    if n == 0 {
        return Err(BijectionError::InvalidInput);
    }
    let white = |e: EdgeId| e as usize - 1;
    let w_ell = n; // white on the added left edge: the poset source
    let w_r = n + 1; // white on the added right edge: the poset sink

    let mut faces: Vec<FanFace> = vec![];
    for f in o.inner_faces() {
        let g = o.face_geometry(f)?;
        faces.push(FanFace {
            left: g.left_path.iter().map(|&e| white(e)).collect(),
            right: g.right_path.iter().map(|&e| white(e)).collect(),
        });
    }
    let left_outer: Vec<usize> = o.left_outer_darts().iter().map(|&d| white(edge_of(d))).collect();
    let right_outer: Vec<usize> = o.right_outer_darts().iter().map(|&d| white(edge_of(d))).collect();
    // face between the added left edge and the left outer path
    faces.push(FanFace {
        left: vec![w_ell],
        right: left_outer,
    });
    // face between the right outer path and the added right edge
    faces.push(FanFace {
        left: right_outer,
        right: vec![w_r],
    });

    let mut b = MapBuilder::new();
    let mut east: Vec<Vec<Dart>> = vec![vec![]; n + 2];
    let mut west: Vec<Vec<Dart>> = vec![vec![]; n + 2];
    for face in &faces {
        let (l, r) = (&face.left, &face.right);
        let (p, q) = (l.len(), r.len());
        // fan A: every left white to the bottomright white
        let fan_a: Vec<(Dart, Dart)> = (0..p).map(|_| b.new_edge()).collect();
        // fan B: the topleft white to every other right white
        let fan_b: Vec<(Dart, Dart)> = (1..q).map(|_| b.new_edge()).collect();
        for i in 0..p.saturating_sub(1) {
            east[l[i]].push(fan_a[i].0);
        }
        let top = &mut east[l[p - 1]];
        for j in (1..q).rev() {
            top.push(fan_b[j - 1].0);
        }
        top.push(fan_a[p - 1].0);
        let bottom = &mut west[r[0]];
        for a in &fan_a {
            bottom.push(a.1);
        }
        for j in 1..q {
            west[r[j]].push(fan_b[j - 1].1);
        }
    }

    let mut s_dart = 0;
    let mut t_dart = 0;
    for w in 0..n + 2 {
        let mut rot = east[w].clone();
        rot.extend(&west[w]);
        if w == w_ell {
            s_dart = *rot.last().expect("source white has a fan");
        }
        if w == w_r {
            t_dart = *rot.last().expect("sink white has a fan");
        }
        b.add_vertex(rot);
    }
    let pmap = b.build(None)?;
    let orient = vec![true; pmap.n_edges() as usize];
    let s = pmap.vertex_of(s_dart);
    let t = pmap.vertex_of(t_dart);
    let outer = pmap.face_of(s_dart);
    let p = BipolarOrientation::validate_with_outer(pmap, orient, s, t, outer)?;
    Ok(p)
}

/// The inverse of `phi`: collapses a plane bipolar poset back to a plane
/// bipolar orientation with one vertex per face and one edge per
/// non-special vertex.
pub fn psi(p: &BipolarOrientation) -> Result<BipolarOrientation, BijectionError> {
    if !p.is_bipolar_poset() {
        return Err(BijectionError::NotAPoset);
    }
    let inner = p.inner_faces();
    let node = |fe: FaceNode| -> usize {
        match fe {
            // the source sits in the right special face, the sink in the left
            FaceNode::RightSpecial => 0,
            FaceNode::LeftSpecial => 1,
            FaceNode::Inner(f) => 2 + inner.binary_search(&f).unwrap(),
        }
    };
    let nodes = 2 + inner.len();
    let verts = p.non_special_vertices();

    let mut b = MapBuilder::new();
    // edge k for the k-th non-special vertex; tail at its right lateral
    // face, head at its left lateral face
    let mut tails: Vec<Vec<(VertexId, Dart)>> = vec![vec![]; nodes];
    let mut heads: Vec<Vec<(VertexId, Dart)>> = vec![vec![]; nodes];
    for &v in &verts {
        let (td, hd) = b.new_edge();
        tails[node(p.right_lateral_face(v))].push((v, td));
        heads[node(p.left_lateral_face(v))].push((v, hd));
    }
    let dart_for = |list: &[(VertexId, Dart)], v: VertexId| -> Dart {
        list.iter().find(|&&(u, _)| u == v).expect("edge registered").1
    };

    // rotations: at an inner-face vertex, the out-darts toward the left
    // lateral vertices bottom to top, then the in-darts from the right
    // lateral vertices top to bottom -- the boundary walk order
    let mut rotations: Vec<Vec<Dart>> = vec![vec![]; nodes];
    for &f in &inner {
        let g = p.face_geometry(f)?;
        let idx = node(FaceNode::Inner(f));
        let mut rot = vec![];
        for &v in &g.left_lateral {
            rot.push(dart_for(&tails[idx], v));
        }
        for &v in g.right_lateral.iter().rev() {
            rot.push(dart_for(&heads[idx], v));
        }
        rotations[idx] = rot;
    }
    // at the source vertex: out-darts toward the right outer path's
    // interior vertices, bottom to top
    let right_darts = p.right_outer_darts();
    let s_idx = node(FaceNode::RightSpecial);
    for &d in &right_darts[..right_darts.len() - 1] {
        let v = p.map().vertex_of(alpha(d));
        rotations[s_idx].push(dart_for(&tails[s_idx], v));
    }
    // at the sink vertex: in-darts from the left outer path's interior
    // vertices, top to bottom
    let left_darts = p.left_outer_darts();
    let t_idx = node(FaceNode::LeftSpecial);
    for &d in left_darts[..left_darts.len() - 1].iter().rev() {
        let v = p.map().vertex_of(alpha(d));
        rotations[t_idx].push(dart_for(&heads[t_idx], v));
    }
    let s_dart = *rotations[s_idx].last().expect("source has an edge");
    let t_dart = *rotations[t_idx].last().expect("sink has an edge");
    for rot in rotations {
        b.add_vertex(rot);
    }
    let omap = b.build(None)?;
    let orient = vec![true; omap.n_edges() as usize];
    let s = omap.vertex_of(s_dart);
    let t = omap.vertex_of(t_dart);
    let outer = omap.face_of(s_dart);
    Ok(BipolarOrientation::validate_with_outer(
        omap, orient, s, t, outer,
    )?)
}

/// Completes a plane bipolar poset into a transversal structure: the poset
/// edges become red, new poles W (left special face) and E (right special
/// face) close the outer quadrangle, and every face is triangulated by
/// blue edges from its left lateral vertices to its bottomright lateral
/// vertex and from its topleft lateral vertex to its right lateral
/// vertices.
pub fn phi_prime(p: &BipolarOrientation) -> Result<TransversalStructure, BijectionError> {
    if !p.is_bipolar_poset() {
        return Err(BijectionError::NotAPoset);
    }
    let pmap = p.map();
    let m = pmap.n_edges();
    let mut b = MapBuilder::new();
    for _ in 0..m {
        b.new_edge();
    }
    // the outer quadrangle, oriented from S toward N
    let (a_se, b_se) = b.new_edge(); // S -> E
    let (a_sw, b_sw) = b.new_edge(); // S -> W
    let (a_wn, b_wn) = b.new_edge(); // W -> N
    let (a_en, b_en) = b.new_edge(); // E -> N

    // blue fans; insertions are (anchor dart in P, new darts clockwise)
    let inserts: Vec<(Dart, Vec<Dart>)> = vec![];
    let w_rot: Vec<Dart> = vec![a_wn];
    let e_rot: Vec<Dart> = vec![b_se];
    let mut colors = vec![Some(EdgeColor::Red); m as usize];
    colors.extend([None, None, None, None]);
    let mut orient: Vec<bool> = p.orient().to_vec();
    orient.extend([true, true, true, true]);

    struct BlueFans<'a> {
        p: &'a BipolarOrientation,
        builder: MapBuilder,
        // blue darts spliced into poset corners: (anchor dart, run)
        inserts: Vec<(Dart, Vec<Dart>)>,
        w_rot: Vec<Dart>,
        e_rot: Vec<Dart>,
        colors: Vec<Option<EdgeColor>>,
        orient: Vec<bool>,
    }
    enum Side {
        Vertex(VertexId),
        West, // the W pole
        East, // the E pole
    }
    impl BlueFans<'_> {
        /// Triangulates one face of the augmented poset: every left
        /// lateral vertex to the bottomright one, the topleft one to every
        /// right lateral vertex, directed left to right.
        fn fan(&mut self, left: &[Side], right: &[Side]) {
            let (np, nq) = (left.len(), right.len());
            let fan_a: Vec<(Dart, Dart)> = (0..np).map(|_| self.builder.new_edge()).collect();
            let fan_b: Vec<(Dart, Dart)> = (1..nq).map(|_| self.builder.new_edge()).collect();
            for _ in 0..np + nq - 1 {
                self.colors.push(Some(EdgeColor::Blue));
                self.orient.push(true);
            }
            // out-darts at the left lateral vertices
            for (i, u) in left.iter().enumerate() {
                let mut seq = vec![];
                if i + 1 == np {
                    for j in (1..nq).rev() {
                        seq.push(fan_b[j - 1].0);
                    }
                }
                seq.push(fan_a[i].0);
                match u {
                    Side::Vertex(v) => self.inserts.push((self.p.right_corner_dart(*v), seq)),
                    Side::West => self.w_rot.extend(seq),
                    Side::East => unreachable!("E is never a left lateral vertex"),
                }
            }
            // in-darts at the right lateral vertices
            for (j, x) in right.iter().enumerate() {
                let seq = if j == 0 {
                    fan_a.iter().map(|&(_, h)| h).collect::<Vec<_>>()
                } else {
                    vec![fan_b[j - 1].1]
                };
                match x {
                    Side::Vertex(v) => self.inserts.push((self.p.left_corner_dart(*v), seq)),
                    Side::East => self.e_rot.extend(seq),
                    Side::West => unreachable!("W is never a right lateral vertex"),
                }
            }
        }
    }
    let mut fans = BlueFans {
        p,
        builder: b,
        inserts,
        w_rot,
        e_rot,
        colors,
        orient,
    };

    for f in p.inner_faces() {
        let g = p.face_geometry(f)?;
        let left: Vec<Side> = g.left_lateral.iter().map(|&v| Side::Vertex(v)).collect();
        let right: Vec<Side> = g.right_lateral.iter().map(|&v| Side::Vertex(v)).collect();
        assert!(!left.is_empty() && !right.is_empty(), "poset faces have lateral vertices");
        fans.fan(&left, &right);
    }
    // the face between the W pole and the left outer path
    let left_outer = p.left_outer_darts();
    let interior = |darts: &[Dart]| -> Vec<Side> {
        darts[..darts.len() - 1]
            .iter()
            .map(|&d| Side::Vertex(p.map().vertex_of(alpha(d))))
            .collect()
    };
    let lo_int = interior(&left_outer);
    assert!(!lo_int.is_empty(), "poset poles are never adjacent");
    fans.fan(&[Side::West], &lo_int);
    // the face between the right outer path and the E pole
    let right_outer = p.right_outer_darts();
    let ro_int = interior(&right_outer);
    assert!(!ro_int.is_empty(), "poset poles are never adjacent");
    fans.fan(&ro_int, &[Side::East]);

    let BlueFans {
        builder: mut b,
        inserts,
        mut w_rot,
        mut e_rot,
        colors,
        orient,
        ..
    } = fans;
    w_rot.push(b_sw);
    e_rot.push(a_en);

    // assemble rotations: poset vertices with quadrangle darts and blue
    // fans spliced in, then W and E
    let s_vertex = p.s();
    let t_vertex = p.t();
    for &v in pmap.vertices() {
        let base = pmap.vertex_darts(v);
        let mut rot = vec![];
        for d in base {
            rot.push(d);
            if v == s_vertex && d == p.s_dart() {
                rot.push(a_se);
                rot.push(a_sw);
            }
            if v == t_vertex && d == p.t_dart() {
                rot.push(b_wn);
                rot.push(b_en);
            }
            for (anchor, seq) in &inserts {
                if *anchor == d {
                    rot.extend(seq.iter().copied());
                }
            }
        }
        b.add_vertex(rot);
    }
    b.add_vertex(w_rot);
    b.add_vertex(e_rot);

    let tri = b.build(Some(b_wn))?;
    Ok(TransversalStructure::validate(tri, colors, orient)?)
}

/// The red bipolar poset of a transversal structure (the inverse of
/// `phi_prime` on N-avoiding structures).
pub fn psi_prime(x: &TransversalStructure) -> Result<BipolarOrientation, BijectionError> {
    Ok(x.red_poset()?)
}

/// `phi_prime . phi`: from a plane bipolar orientation to an N-avoiding
/// transversal structure.
pub fn big_phi(o: &BipolarOrientation) -> Result<TransversalStructure, BijectionError> {
    phi_prime(&phi(o)?)
}

/// The map bijection: a rooted non-separable map with `n >= 2` edges to a
/// rooted irreducible triangulation with `n + 3` vertices, through the
/// minimal plane bipolar orientation.
pub fn f1(map: &RootedMap) -> Result<RootedMap, BijectionError> {
    if !map.classify().nonseparable {
        return Err(BijectionError::NotNonseparable);
    }
    if map.n_edges() < 2 {
        return Err(BijectionError::TooSmall);
    }
    let o = minimal_bipolar(map)?;
    let x = big_phi(&o)?;
    debug_assert_eq!(x.tri().n_vertices() as u32, map.n_edges() + 3);
    debug_assert!(!x.has_right_alt_cycle());
    Ok(x.tri().clone())
}

/// Inverse of `f1`: endow the triangulation with its minimal transversal
/// structure, take the red poset, collapse it with `psi`, and reattach the
/// root edge from source to sink.
pub fn f1_inv(tri: &RootedMap) -> Result<RootedMap, BijectionError> {
    if !tri.classify().irreducible {
        return Err(BijectionError::NotIrreducible);
    }
    if tri.n_vertices() <= 4 {
        return Err(BijectionError::TooSmall);
    }
    let x = minimal_transversal(tri)?;
    let p = psi_prime(&x)?;
    let o = psi(&p)?;
    let (rooted, root) = o.map().insert_edge_after(o.s_dart(), o.t_dart(), None);
    let out = rooted.with_root(root);
    debug_assert!(out.classify().nonseparable);
    Ok(out)
}

/// `f1` extended to one object of size 1 on each side: the edge-map
/// corresponds to the SN-link-map. The WE-link-map is never an image.
pub fn f1_tilde(map: &RootedMap) -> Result<RootedMap, BijectionError> {
    if !map.classify().nonseparable {
        return Err(BijectionError::NotNonseparable);
    }
    if map.n_edges() == 1 {
        return Ok(fixtures::qsn());
    }
    f1(map)
}

/// Inverse of `f1_tilde`.
pub fn f1_tilde_inv(tri: &RootedMap) -> Result<RootedMap, BijectionError> {
    if tri.canonical_form() == fixtures::qsn().canonical_form() {
        return Ok(fixtures::emap());
    }
    if tri.canonical_form() == fixtures::qwe().canonical_form() {
        return Err(BijectionError::InvalidInput);
    }
    f1_inv(tri)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipolar::enumerate_bipolar;

    fn o1() -> BipolarOrientation {
        let m = fixtures::emap();
        let (s, t) = (m.vertex_of(1), m.vertex_of(2));
        BipolarOrientation::validate(m, vec![true], s, t)
            .unwrap()
            .forget_root()
    }

    #[test]
    fn phi_of_edge_is_path() {
        let p = phi(&o1()).unwrap();
        assert!(p.is_bipolar_poset());
        assert!(p.is_n_avoiding());
        assert_eq!(p.map().n_vertices(), 3);
        assert_eq!(p.n_edges(), 2);
        assert_eq!(p.inner_faces().len(), 0);
    }

    #[test]
    fn psi_phi_roundtrip_edge() {
        let o = o1();
        let p = phi(&o).unwrap();
        let back = psi(&p).unwrap();
        assert_eq!(back.canonical_encoding(), o.canonical_encoding());
    }

    #[test]
    fn phi_parameters_small() {
        // phi maps n edges / i non-special vertices to n non-special
        // vertices / i inner faces
        let tri = fixtures::tri();
        let (a, c) = (tri.vertex_of(1), tri.vertex_of(4));
        for o in enumerate_bipolar(&tri, a, c).unwrap() {
            let o = o.forget_root();
            let p = phi(&o).unwrap();
            assert!(p.is_bipolar_poset());
            assert!(p.is_n_avoiding());
            assert_eq!(
                p.non_special_vertices().len() as u32,
                o.n_edges(),
            );
            assert_eq!(p.inner_faces().len(), o.non_special_vertices().len());
            let back = psi(&p).unwrap();
            assert_eq!(back.canonical_encoding(), o.canonical_encoding());
        }
    }

    #[test]
    fn phi_prime_of_path_is_pyramid_structure() {
        let p = phi(&o1()).unwrap();
        let x = phi_prime(&p).unwrap();
        assert_eq!(
            x.tri().canonical_form(),
            fixtures::i5().canonical_form()
        );
        assert!(x.is_n_avoiding().unwrap());
        let back = psi_prime(&x).unwrap();
        assert_eq!(back.canonical_encoding(), p.canonical_encoding());
    }

    #[test]
    fn f1_of_double_edge_is_pyramid() {
        let t = f1(&fixtures::c2()).unwrap();
        assert_eq!(t.canonical_form(), fixtures::i5().canonical_form());
        let back = f1_inv(&t).unwrap();
        assert_eq!(back.canonical_form(), fixtures::c2().canonical_form());
    }

    #[test]
    fn f1_tilde_on_edge_map() {
        assert_eq!(
            f1_tilde(&fixtures::emap()).unwrap().canonical_form(),
            fixtures::qsn().canonical_form()
        );
        assert_eq!(
            f1_tilde_inv(&fixtures::qsn()).unwrap().canonical_form(),
            fixtures::emap().canonical_form()
        );
    }
}
