pub mod cyclotomic;
pub mod link;
pub mod bracket;
pub mod invariant;
pub mod cli;
