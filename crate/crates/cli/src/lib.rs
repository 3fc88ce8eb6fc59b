//! Command-line companion to `kstates-core`: output formatting, golden
//! tables, and the cross-validation suites behind `kstates verify`.

pub mod format;
pub mod goldens;
pub mod random;
pub mod verify;
