//! Text formats, named graphs, generators and report emission.

pub mod catalog;
pub mod document;
pub mod embedding_doc;
pub mod generate;
pub mod graph6;
pub mod report;

pub use catalog::{catalog, catalog_entry, catalog_names, CatalogEntry};
pub use document::{parse_edge_list, to_edge_list, GraphDocument, GraphFormat};
pub use embedding_doc::{parse_embedding_doc, to_embedding_doc};
pub use generate::{gen_near_triangulation, gen_random_medial, gen_random_planar};
pub use graph6::{parse_graph6, to_graph6};
pub use report::Report;
