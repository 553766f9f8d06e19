pub mod complex;
pub mod error;
pub mod families;
pub mod graph;
pub mod ideal;
pub mod pipeline;
