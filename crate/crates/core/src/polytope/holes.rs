use num_traits::Zero;

use super::{Constraint, FacetId, Halfspace, PolytopeError, SimplePolytope, Vertex, VertexId};
use crate::exactlin::{is_feasible, RatVector};

/// An outer simple polytope with disjoint simple holes in its interior.
///
/// Components are indexed `0` (outer) then `1..=s` (holes). Facets and
/// vertices carry global ids: those of component 0 first, then each hole's
/// in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeWithHoles {
    components: Vec<SimplePolytope>,
    facet_offsets: Vec<usize>,
    vertex_offsets: Vec<usize>,
}

impl PolytopeWithHoles {
    /// A body without holes.
    pub fn convex(outer: SimplePolytope) -> Self {
        Self::assemble(vec![outer])
    }

    /// Checks strict containment of every hole in the outer interior and
    /// pairwise disjointness of the closed holes.
    pub fn build(outer: SimplePolytope, holes: Vec<SimplePolytope>) -> Result<Self, PolytopeError> {
        let n = outer.dim();
        if let Some(h) = holes.iter().find(|h| h.dim() != n) {
            return Err(PolytopeError::Dimension(format!(
                "hole of dimension {} inside a polytope of dimension {n}",
                h.dim()
            )));
        }
        for (k, hole) in holes.iter().enumerate() {
            let body: Vec<Constraint> = hole.facets().iter().map(|h| h.constraint(false)).collect();
            for f in outer.facets() {
                let mut sys = body.clone();
                sys.push(f.complement());
                if is_feasible(&sys) {
                    return Err(PolytopeError::Containment { hole: k + 1 });
                }
            }
        }
        for (a, b) in (0..holes.len()).flat_map(|a| (a + 1..holes.len()).map(move |b| (a, b))) {
            let sys: Vec<Constraint> = holes[a]
                .facets()
                .iter()
                .chain(holes[b].facets())
                .map(|h| h.constraint(false))
                .collect();
            if is_feasible(&sys) {
                return Err(PolytopeError::Disjointness {
                    first: a + 1,
                    second: b + 1,
                });
            }
        }
        let mut components = vec![outer];
        components.extend(holes);
        Ok(Self::assemble(components))
    }

    fn assemble(components: Vec<SimplePolytope>) -> Self {
        let mut facet_offsets = Vec::with_capacity(components.len());
        let mut vertex_offsets = Vec::with_capacity(components.len());
        let (mut fo, mut vo) = (0, 0);
        for c in &components {
            facet_offsets.push(fo);
            vertex_offsets.push(vo);
            fo += c.facet_count();
            vo += c.vertices().len();
        }
        Self {
            components,
            facet_offsets,
            vertex_offsets,
        }
    }

    pub fn dim(&self) -> usize {
        self.components[0].dim()
    }

    pub fn outer(&self) -> &SimplePolytope {
        &self.components[0]
    }

    pub fn holes(&self) -> &[SimplePolytope] {
        &self.components[1..]
    }

    /// Number of holes `s`.
    pub fn hole_count(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[SimplePolytope] {
        &self.components
    }

    /// Total facet count `m`.
    pub fn facet_count(&self) -> usize {
        self.components.iter().map(SimplePolytope::facet_count).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.vertices().len()).sum()
    }

    pub fn facet_ids(&self) -> impl Iterator<Item = FacetId> {
        (0..self.facet_count()).map(FacetId)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    /// Component index and local index of a facet.
    pub fn locate_facet(&self, f: FacetId) -> (usize, usize) {
        let k = self.facet_offsets.partition_point(|&o| o <= f.0) - 1;
        (k, f.0 - self.facet_offsets[k])
    }

    /// Component index and local index of a vertex.
    pub fn locate_vertex(&self, v: VertexId) -> (usize, usize) {
        let k = self.vertex_offsets.partition_point(|&o| o <= v.0) - 1;
        (k, v.0 - self.vertex_offsets[k])
    }

    pub fn global_facet(&self, component: usize, local: usize) -> FacetId {
        FacetId(self.facet_offsets[component] + local)
    }

    pub fn global_vertex(&self, component: usize, local: usize) -> VertexId {
        VertexId(self.vertex_offsets[component] + local)
    }

    pub fn facet(&self, f: FacetId) -> &Halfspace {
        let (k, i) = self.locate_facet(f);
        &self.components[k].facets()[i]
    }

    /// Display label: the half-space label if set, otherwise `F<id>`.
    pub fn facet_label(&self, f: FacetId) -> String {
        let label = &self.facet(f).label;
        if label.is_empty() {
            f.to_string()
        } else {
            label.clone()
        }
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        let (k, i) = self.locate_vertex(v);
        &self.components[k].vertices()[i]
    }

    pub fn vertex_point(&self, v: VertexId) -> &RatVector {
        &self.vertex(v).point
    }

    /// Global ids of the facets through `v`, ascending.
    pub fn vertex_facets(&self, v: VertexId) -> Vec<FacetId> {
        let (k, i) = self.locate_vertex(v);
        self.components[k].vertices()[i]
            .facets
            .iter()
            .map(|&f| self.global_facet(k, f))
            .collect()
    }

    /// Membership in `P`: inside the outer body and outside every open hole.
    pub fn contains(&self, x: &RatVector) -> bool {
        self.outer().contains(x) && !self.holes().iter().any(|h| h.interior_contains(x))
    }

    /// For each facet `F` through `v` (ascending id), the direction from `v`
    /// along the unique edge at `v` not contained in `F`.
    pub fn edge_directions_at_vertex(&self, v: VertexId) -> Vec<(FacetId, RatVector)> {
        let (k, i) = self.locate_vertex(v);
        let comp = &self.components[k];
        let here = &comp.vertices()[i];
        here.facets
            .iter()
            .map(|&f| {
                let e = comp
                    .edge_leaving(i, f)
                    .expect("simple polytopes have n edges at every vertex");
                let w = if e.ends.0 == i { e.ends.1 } else { e.ends.0 };
                (self.global_facet(k, f), comp.vertices()[w].point.sub(&here.point))
            })
            .collect()
    }

    /// True if `x` lies on the hyperplane of facet `f`.
    pub fn on_facet(&self, f: FacetId, x: &RatVector) -> bool {
        self.facet(f).slack(x).is_zero()
    }
}
