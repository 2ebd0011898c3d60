//! Building polytopes from half-spaces or vertex cycles, and adding holes.

use tmh::catalog::point;
use tmh::polytope::{build_polytope, polygon_from_vertices, Halfspace, PolytopeWithHoles};
use tmh::RatVector;

fn main() {
    let cube = build_polytope(
        3,
        (0..3)
            .flat_map(|i| {
                let mut e = [0i64; 3];
                e[i] = 1;
                [Halfspace::from_i64(&e, 0), Halfspace::from_i64(&e.map(|x| -x), -1)]
            })
            .collect(),
    )
    .unwrap();
    println!("cube: {} facets, {} vertices, {} edges", cube.facet_count(), cube.vertices().len(), cube.edges().len());

    let square = polygon_from_vertices(&[
        RatVector::from_i64(&[0, 0]),
        RatVector::from_i64(&[4, 0]),
        RatVector::from_i64(&[4, 4]),
        RatVector::from_i64(&[0, 4]),
    ])
    .unwrap();
    let hole = polygon_from_vertices(&[point(&[(1, 1), (1, 1)]), point(&[(5, 2), (1, 1)]), point(&[(1, 1), (5, 2)])]).unwrap();
    let body = PolytopeWithHoles::build(square, vec![hole]).unwrap();

    println!("square with a triangular hole: {} facets, {} vertices", body.facet_count(), body.vertex_count());
    for f in body.facet_ids() {
        let h = body.facet(f);
        println!("  {f}: {:?} . x >= {}", h.normal.iter().map(|x| x.to_string()).collect::<Vec<_>>(), h.offset);
    }
    for v in body.vertex_ids() {
        let dirs: Vec<String> = body
            .edge_directions_at_vertex(v)
            .into_iter()
            .map(|(f, e)| format!("{f} -> {e}"))
            .collect();
        println!("  {v} at {}: {}", body.vertex_point(v), dirs.join(", "));
    }
    println!("(1/2, 1/2) in body: {}", body.contains(&point(&[(1, 2), (1, 2)])));
    println!("(3/2, 3/2) in body: {}", body.contains(&point(&[(3, 2), (3, 2)])));
}
