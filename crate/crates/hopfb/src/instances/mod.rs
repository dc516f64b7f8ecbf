//! The concrete graded bialgebras.

pub mod dqsym;
pub mod eh;
pub mod lorder;
pub mod qsym;
pub mod word3;
