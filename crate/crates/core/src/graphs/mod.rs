//! Projection graphs, Graham-Houghton graphs and the generation criteria
//! built on them.

mod bipartite;
mod coloured;
mod johnson;
mod permanent;
mod projection;
mod tournament;

pub use bipartite::BipartiteGraph;
pub use coloured::{RbrVerdict, TwoColouredDiGraph};
pub use johnson::{iso_check, johnson_graph, UndirectedGraph};
pub use permanent::{
    balanced_subgraph_count, balanced_subgraphs, permanent, permanent_expansion, permanent_ryser,
};
pub use projection::{graham_houghton, projection_graph, projection_label, projections, ProjectionGraph};
pub use tournament::tournament_generates;
