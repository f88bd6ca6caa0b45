//! File formats, reports and the command-line front end for
//! [`avgconn_core`].

pub mod app;
pub mod io;
pub mod report;
pub mod suites;
