//! Exact verification of graded Yetter-Drinfel'd objects over
//! finite-dimensional bialgebras with a distributive law λ.

pub mod bimonad;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactmat;
pub mod groupsys;
pub mod involution;
pub mod par;
pub mod report;
pub mod workspace;
pub mod ydcat;

pub use error::{Result, YdError};
