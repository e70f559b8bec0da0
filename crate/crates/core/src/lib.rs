pub mod cli;
pub mod hecke;
pub mod macdonald;
pub mod qintegral;
pub mod report;
pub mod ring;
pub mod rmatrix;
pub mod weyl;
