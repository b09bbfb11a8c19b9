pub mod cli;
pub mod induced;
pub mod realization;
pub mod report;
pub mod scalarfield;
pub mod uqgl21;
pub mod walgebra;
