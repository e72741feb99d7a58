//! Randomized quantum-style divide and conquer for 3SUM-hard geometric
//! problems, with exact arrangements and a query cost model.

pub mod arrangement;
pub mod cli;
pub mod exact;
pub mod experiments;
pub mod cost;
pub mod curved;
pub mod rqs;
pub mod oracles;
pub mod problems;
