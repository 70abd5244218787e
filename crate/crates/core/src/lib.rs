pub mod cli;
pub mod enumerate;
pub mod flow;
pub mod graph;
pub mod matroid;
pub mod planar;
pub mod poly;
pub mod theorem;
