pub mod bench;
pub mod exactmath;
pub mod groebner;
pub mod hamgraph;
pub mod polycore;
pub mod resolver;
pub mod setops;
pub mod verdict;
