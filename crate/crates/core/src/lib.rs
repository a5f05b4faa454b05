pub mod geomcore;
pub mod series;
pub mod okounkov;
pub mod filtered;
pub mod cli;
