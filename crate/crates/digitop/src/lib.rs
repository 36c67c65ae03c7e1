pub mod image;
pub mod metric;
pub mod report;
pub mod scalar;
