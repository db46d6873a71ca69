//! Exhaustive checks of the structural invariants that the acceptance
//! criteria do not already cover directly.

use mapbij::bijections::{big_phi, phi};
use mapbij::bipolar::{enumerate_bipolar, orientations_minus_root, Chirality, FaceNode};
use mapbij::count::theta_n;
use mapbij::enumerate::{enumerate_family, enumerate_maps, Family};
use mapbij::map::{alpha, RootedMap, VertexId};
use mapbij::transversal::{enumerate_transversal, transversal_candidates};
use mapbij::verify::{alt_cycle_classification_total, phi_image_characterization, Context};
use num_bigint::BigUint;
use std::collections::{HashMap, HashSet};

/// Independent family checker: cut vertices by vertex-deletion
/// connectivity scan, facial 3-cycles by explicit face lookup.
fn classify_oracle(map: &RootedMap) -> mapbij::map::FamilyFlags {
    let mut flags = mapbij::map::FamilyFlags::default();
    flags.loopless = map.edge_ids().all(|e| !map.is_loop_edge(e));
    flags.nonseparable = flags.loopless && map.n_edges() >= 1 && !has_cut_vertex_by_deletion(map);
    if map.n_edges() == 0 || !map.is_simple() {
        return flags;
    }
    let outer = map.outer_face().unwrap();
    flags.triangulation =
        map.n_edges() >= 3 && map.faces().iter().all(|&f| map.face_degree(f) == 3);
    let outer_darts = map.face_darts(outer);
    if outer_darts.len() == 4 {
        let vs: HashSet<VertexId> = outer_darts.iter().map(|&d| map.vertex_of(d)).collect();
        flags.quad_triangulation = vs.len() == 4
            && map
                .faces()
                .iter()
                .all(|&f| f == outer || map.face_degree(f) == 3);
    }
    if flags.quad_triangulation {
        flags.irreducible = map
            .three_cycles()
            .iter()
            .all(|t| facial_by_face_lookup(map, t));
    }
    flags
}

fn has_cut_vertex_by_deletion(map: &RootedMap) -> bool {
    let verts = map.vertices();
    if verts.len() <= 2 {
        return false;
    }
    for &cut in verts {
        // vertices reachable without passing through `cut`
        let start = verts.iter().copied().find(|&v| v != cut).unwrap();
        let mut seen: HashSet<VertexId> = [start].into();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for d in map.vertex_darts(v) {
                let w = map.vertex_of(alpha(d));
                if w != cut && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != verts.len() - 1 {
            return true;
        }
    }
    false
}

fn facial_by_face_lookup(map: &RootedMap, t: &[VertexId; 3]) -> bool {
    map.faces().iter().any(|&f| {
        let walk = map.face_darts(f);
        if walk.len() != 3 {
            return false;
        }
        let mut vs: Vec<VertexId> = walk.iter().map(|&d| map.vertex_of(d)).collect();
        vs.sort_unstable();
        let mut want = *t;
        want.sort_unstable();
        vs == want && {
            // the boundary edges must be exactly the three cycle edges
            let es: HashSet<u32> = walk.iter().map(|&d| mapbij::edge_of(d)).collect();
            [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
                .iter()
                .all(|&(u, v)| map.edge_between(u, v).map(|e| es.contains(&e)) == Some(true))
        }
    })
}

#[test]
fn classify_matches_definitional_oracle() {
    for n in 0..=5 {
        for m in enumerate_maps(n).unwrap() {
            assert_eq!(m.classify(), classify_oracle(&m), "map with {n} edges");
        }
    }
    // quad-triangulations are not reachable through enumerate_maps at
    // their edge counts; check the vertex-counted families separately
    for size in 1..=3 {
        for m in enumerate_family(Family::QuadTriangulation, size).unwrap() {
            assert_eq!(m.classify(), classify_oracle(&m));
        }
        for m in enumerate_family(Family::Triangulation, size).unwrap() {
            assert_eq!(m.classify(), classify_oracle(&m));
        }
    }
}

#[test]
fn canonical_form_separates_and_is_invariant() {
    // pairwise separation among all maps with <= 4 edges: enumeration
    // emits canonical forms that are strictly increasing, and a scrambled
    // relabeling never changes the form
    for n in 1..=4u32 {
        let maps = enumerate_maps(n).unwrap();
        let forms: Vec<_> = maps.iter().map(|m| m.canonical_form()).collect();
        for w in forms.windows(2) {
            assert!(w[0] < w[1], "duplicate or misordered canonical forms");
        }
        for (k, m) in maps.iter().enumerate() {
            // deterministic scramble: rotate edge ids and swap dart parity
            let nd = 2 * n;
            let mut labels = vec![0u32; nd as usize + 1];
            for e in 1..=n {
                let e2 = e % n + 1;
                let flip = (k + e as usize).is_multiple_of(2);
                let (a, b) = (2 * e - 1, 2 * e);
                let (x, y) = if flip { (2 * e2, 2 * e2 - 1) } else { (2 * e2 - 1, 2 * e2) };
                labels[a as usize] = x;
                labels[b as usize] = y;
            }
            let relabeled = m.relabeled(&labels, m.root());
            assert_eq!(m.canonical_form(), relabeled.canonical_form());
        }
    }
}

#[test]
fn decode_encode_identity_up_to_six_edges() {
    for n in 0..=6u32 {
        for m in enumerate_maps(n).unwrap() {
            let text = mapbij::codec::encode_map(&m);
            match mapbij::codec::decode(&text).unwrap() {
                mapbij::codec::Record::Map(back) => assert_eq!(back, m),
                other => panic!("decoded as {}", other.kind()),
            }
        }
    }
}

#[test]
fn face_order_extremes_are_special_faces() {
    let ctx = Context::new(6);
    for k in 1..=5usize {
        for o in &ctx.orientations[k] {
            let ord = o.orders();
            assert!(ord.edge_order_antisymmetric());
            assert!(ord.dual_order_antisymmetric());
            assert!(ord.face_order_antisymmetric());
            let (mins, maxs) = ord.face_order_extremes();
            assert_eq!(mins, vec![FaceNode::LeftSpecial]);
            assert_eq!(maxs, vec![FaceNode::RightSpecial]);
        }
    }
}

#[test]
fn n_pattern_in_poset_induces_lop() {
    let ctx = Context::new(6);
    for k in 1..=5usize {
        for o in &ctx.orientations[k] {
            if !o.map().is_simple() || o.map().n_vertices() < 3 {
                continue;
            }
            if !o.is_bipolar_poset() {
                continue;
            }
            let has_n = o
                .find_n_patterns()
                .iter()
                .any(|p| p.chirality == Chirality::N);
            if has_n {
                assert!(o.has_lop(), "an N-pattern must induce a LOP");
            }
        }
    }
}

#[test]
fn phi_lateral_paths_reflect_degrees() {
    // inner faces of phi(O) correspond to non-special vertices v of O with
    // |P_l| = outdeg(v) + 1 and |P_r| = indeg(v) + 1
    let ctx = Context::new(5);
    for k in 1..=4usize {
        for o in &ctx.orientations[k] {
            let p = phi(o).unwrap();
            let mut face_params: Vec<(usize, usize)> = p
                .inner_faces()
                .iter()
                .map(|&f| {
                    let g = p.face_geometry(f).unwrap();
                    (g.left_path.len(), g.right_path.len())
                })
                .collect();
            let mut vertex_params: Vec<(usize, usize)> = o
                .non_special_vertices()
                .iter()
                .map(|&v| (o.outdeg(v) + 1, o.indeg(v) + 1))
                .collect();
            face_params.sort_unstable();
            vertex_params.sort_unstable();
            assert_eq!(face_params, vertex_params);
        }
    }
}

#[test]
fn transversal_euler_relation_and_theta_sum() {
    // red edges = n + i + 1 for the red poset's parameters, and the
    // N-avoiding structures on irreducible triangulations with n inner
    // vertices are counted by theta(n)
    for n in 1..=3u32 {
        let mut n_avoiding = 0usize;
        for t in enumerate_family(Family::Irreducible, n + 1).unwrap() {
            for x in enumerate_transversal(&t).unwrap() {
                let red = x.red_poset().unwrap();
                let poset_n = red.map().n_vertices() - 2;
                let poset_i = red.map().n_faces() - 1;
                assert_eq!(x.red_edge_count(), poset_n + poset_i + 1);
                assert_eq!(poset_n as u32, n);
                if x.is_n_avoiding().unwrap() {
                    n_avoiding += 1;
                }
            }
        }
        assert_eq!(BigUint::from(n_avoiding), theta_n(n as u64).unwrap());
    }
}

#[test]
fn quad_admits_structure_iff_irreducible() {
    for size in 1..=3u32 {
        for t in enumerate_family(Family::QuadTriangulation, size).unwrap() {
            let admits = !transversal_candidates(&t).unwrap().is_empty();
            assert_eq!(admits, t.classify().irreducible);
        }
    }
}

#[test]
fn phi_image_is_exactly_n_avoiding_structures() {
    let ctx = Context::new(4);
    for n in 1..=3usize {
        assert!(phi_image_characterization(&ctx, n), "size {n}");
    }
}

#[test]
fn alt_cycles_always_classified() {
    // alternating 4-cycles first appear at 4 inner vertices; exercising
    // the classifier there covers its source/sink and left/right
    // assertions
    assert_eq!(alt_cycle_classification_total(3), 0);
    assert!(alt_cycle_classification_total(4) > 0);
}

#[test]
fn bipolar_exists_iff_pole_edge_two_connected() {
    // for every rooted map with <= 4 edges and every ordered pair of outer
    // vertices, orientations exist iff the multigraph plus an (s,t) edge
    // is loopless and 2-connected
    for n in 1..=4u32 {
        for m in enumerate_maps(n).unwrap() {
            if !m.classify().loopless {
                continue;
            }
            let outer_vs: Vec<VertexId> = {
                let outer = m.outer_face().unwrap();
                let mut vs: Vec<VertexId> =
                    m.face_darts(outer).iter().map(|&d| m.vertex_of(d)).collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            };
            for &s in &outer_vs {
                for &t in &outer_vs {
                    if s == t {
                        continue;
                    }
                    let nonempty = !enumerate_bipolar(&m, s, t).unwrap().is_empty();
                    assert_eq!(
                        nonempty,
                        plus_edge_two_connected(&m, s, t),
                        "{n} edges, poles {s},{t}"
                    );
                }
            }
        }
    }
}

fn plus_edge_two_connected(map: &RootedMap, s: VertexId, t: VertexId) -> bool {
    // abstract multigraph check: add the edge (s, t), then no cut vertex
    let verts = map.vertices();
    let idx: HashMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges: Vec<(usize, usize)> = map
        .edge_ids()
        .map(|e| {
            let (u, v) = map.endpoints(e);
            (idx[&u], idx[&v])
        })
        .collect();
    edges.push((idx[&s], idx[&t]));
    let n = verts.len();
    if n == 2 {
        return true; // two vertices joined by parallel edges
    }
    for cut in 0..n {
        let start = (0..n).find(|&v| v != cut).unwrap();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(a, b) in &edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && y != cut && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if seen.iter().filter(|&&b| b).count() != n - 1 {
            return false;
        }
    }
    true
}

#[test]
fn minimal_orientations_map_to_minimal_structures() {
    // the chain O_min -> P_min -> T_min: the image of a minimal
    // orientation never has a right alternating 4-cycle, and f1's image
    // structure is the minimal structure of its triangulation
    for n in 2..=5u32 {
        for m in enumerate_family(Family::Nonseparable, n).unwrap() {
            let o = mapbij::bipolar::minimal_bipolar(&m).unwrap();
            let x = big_phi(&o).unwrap();
            assert!(!x.has_right_alt_cycle());
            let min = mapbij::transversal::minimal_transversal(x.tri()).unwrap();
            assert_eq!(min.canonical_encoding(), x.canonical_encoding());
        }
    }
}

#[test]
fn smallest_lop_example_is_consistent() {
    // find the smallest orientation with a LOP and check that its carrier
    // map still has exactly one LOP-free orientation
    let mut found = None;
    'outer: for n in 3..=6u32 {
        for m in enumerate_family(Family::Nonseparable, n).unwrap() {
            let all = orientations_minus_root(&m).unwrap();
            if let Some(o) = all.iter().find(|o| o.has_lop()) {
                found = Some((m.clone(), o.clone(), all.len()));
                break 'outer;
            }
        }
    }
    let (m, o, _) = found.expect("some orientation in range has a LOP");
    assert!(o.has_lop());
    let lop_free = orientations_minus_root(&m)
        .unwrap()
        .into_iter()
        .filter(|o| !o.has_lop())
        .count();
    assert_eq!(lop_free, 1);
}

#[test]
fn cycle_classification_matches_boundary_incidences() {
    // oracle: walk the cycle counterclockwise; the edge entering a cycle
    // vertex is its left-edge, the one leaving its right-edge; an interior
    // edge incident to the vertex makes a left (right) incidence when its
    // color matches the left-edge (right-edge); all incidences of a cycle
    // agree and determine its kind
    use mapbij::transversal::CycleKind;
    let mut cycles_seen = 0;
    for size in 2..=5u32 {
        for t in enumerate_family(Family::Irreducible, size).unwrap() {
            for x in enumerate_transversal(&t).unwrap() {
                let tri = x.tri();
                for c in x.alt_four_cycles() {
                    cycles_seen += 1;
                    // clockwise order (s_r, w1, t_r, w2) means the
                    // counterclockwise walk is (s_r, w2, t_r, w1)
                    let ccw = [c.s_r, c.w2, c.t_r, c.w1];
                    let cycle_edges: Vec<u32> = (0..4)
                        .map(|i| tri.edge_between(ccw[i], ccw[(i + 1) % 4]).unwrap())
                        .collect();
                    let mut incidences = vec![];
                    for i in 0..4 {
                        let v = ccw[i];
                        let left_edge = cycle_edges[(i + 3) % 4]; // enters v ccw
                        let right_edge = cycle_edges[i]; // leaves v ccw
                        for d in tri.vertex_darts(v) {
                            let e = mapbij::edge_of(d);
                            if cycle_edges.contains(&e)
                                || !interior_edge_of_cycle(tri, &cycle_edges, e)
                            {
                                continue;
                            }
                            let col = x.color(e);
                            if col == x.color(left_edge) {
                                incidences.push(CycleKind::Left);
                            } else {
                                assert_eq!(col, x.color(right_edge));
                                incidences.push(CycleKind::Right);
                            }
                        }
                    }
                    assert!(!incidences.is_empty());
                    assert!(
                        incidences.iter().all(|&k| k == c.kind),
                        "boundary incidences disagree with the classifier"
                    );
                }
            }
        }
    }
    assert!(cycles_seen > 0);
}

fn interior_edge_of_cycle(tri: &RootedMap, cycle_edges: &[u32], e: u32) -> bool {
    // flood from the outer face across non-cycle edges; e is interior when
    // its faces are unreachable
    use std::collections::HashSet as HS;
    let outer = tri.outer_face().unwrap();
    let mut exterior: HS<u32> = HS::new();
    exterior.insert(outer);
    let mut stack = vec![outer];
    while let Some(f) = stack.pop() {
        for d in tri.face_darts(f) {
            if cycle_edges.contains(&mapbij::edge_of(d)) {
                continue;
            }
            let g = tri.face_of(alpha(d));
            if exterior.insert(g) {
                stack.push(g);
            }
        }
    }
    !exterior.contains(&tri.face_of(2 * e - 1)) && !exterior.contains(&tri.face_of(2 * e))
}

#[test]
fn n_pattern_in_structure_yields_right_cycle() {
    // a transversal structure that is not N-avoiding always has a right
    // alternating 4-cycle; first examples exist at 4 inner vertices
    let mut non_avoiding = 0;
    for size in 2..=5u32 {
        for t in enumerate_family(Family::Irreducible, size).unwrap() {
            for x in enumerate_transversal(&t).unwrap() {
                if !x.is_n_avoiding().unwrap() {
                    non_avoiding += 1;
                    assert!(x.has_right_alt_cycle());
                }
            }
        }
    }
    assert_eq!(non_avoiding, 2);
}

#[test]
fn psi_section_fails_off_the_n_avoiding_image() {
    // psi is defined on every poset, but phi(psi(P)) = P only holds for
    // N-avoiding P; exhibit the failure on some poset with an N-pattern
    use mapbij::bijections::{phi, psi};
    use mapbij::bipolar::anchored_orientations;
    use mapbij::enumerate::enumerate_simple_maps;
    let mut found = false;
    'outer: for e in 3..=7u32 {
        let simple = enumerate_simple_maps(e).unwrap();
        for p in anchored_orientations(&simple) {
            if !p.is_bipolar_poset() || p.is_n_avoiding() {
                continue;
            }
            let back = phi(&psi(&p).unwrap()).unwrap();
            assert_ne!(
                back.canonical_encoding(),
                p.forget_root().canonical_encoding(),
                "phi . psi must move a non-N-avoiding poset"
            );
            found = true;
            break 'outer;
        }
    }
    assert!(found, "expected a non-N-avoiding poset in range");
}

#[test]
fn f1_tilde_never_hits_the_we_link_map() {
    use mapbij::bijections::f1_tilde;
    use mapbij::fixtures;
    let qwe = fixtures::qwe().canonical_form();
    for n in 1..=6u32 {
        for m in enumerate_family(Family::Nonseparable, n).unwrap() {
            assert_ne!(f1_tilde(&m).unwrap().canonical_form(), qwe);
        }
    }
}

#[test]
fn f2_size_preserving_and_injective_at_five() {
    // the inverse is search-bounded at four inner vertices, but the
    // forward map scales one size further
    use mapbij::decompose::f2;
    let mut forms = std::collections::HashSet::new();
    let mut count = 0usize;
    for m in enumerate_maps(5).unwrap() {
        if !m.classify().loopless {
            continue;
        }
        let t = f2(&m).unwrap();
        assert_eq!(t.n_vertices(), 8); // n + 3 vertices = n inner vertices
        assert!(t.classify().triangulation);
        assert!(forms.insert(t.canonical_form()), "f2 must stay injective");
        count += 1;
    }
    assert_eq!(count, 399);
}
