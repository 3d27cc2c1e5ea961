#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::suspicious_arithmetic_impl)]

pub mod cli;
pub mod error;
pub mod exactmath;
pub mod gl11;
pub mod glrep;
pub mod qaffine;
pub mod yangian;
pub mod report;
pub mod tableaux;

pub use error::{Error, Result};
pub use report::{Check, Report};
