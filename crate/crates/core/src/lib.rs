pub mod cardinal;
pub mod exec;
pub mod functions;
pub mod gen;
pub mod kernel;
pub mod lang;
pub mod notation;
pub mod order;
pub mod ordinal;
pub mod suites;
pub mod umorphism;

pub use kernel::{HSet, KernelError, Limits};
