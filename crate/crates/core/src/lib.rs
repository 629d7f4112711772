pub mod braid;
pub mod campaign;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod hecke;
pub mod knitted;
pub mod laurent;
pub mod par;
pub mod skein;
pub mod table;

pub use error::{Error, Result};
