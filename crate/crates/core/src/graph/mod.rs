//! Graph, hypergraph and capacity representations plus the basic
//! cover/domination predicates everything else is built on.

mod capacity;
pub mod families;
mod hypergraph;
pub mod io;
mod properties;
mod simple;
mod vertex_set;

pub use capacity::CapacityFn;
pub use hypergraph::Hypergraph;
pub use properties::{
    bipartition, check_basic_property, component_count, component_labels, degeneracy_ordering,
    has_induced_claw, induced_components, is_bipartite, is_dominating, is_induced_connected,
    is_vertex_cover, ordering_width, BasicKind,
};
pub use simple::Graph;
pub use vertex_set::VertexSet;
