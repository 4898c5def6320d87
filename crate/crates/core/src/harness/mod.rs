//! Catalogs, the registry of structural checks, reports and the command line.

pub mod catalog;
pub mod checks;
pub mod instance;
pub mod report;
pub mod verify;
pub mod cli;
