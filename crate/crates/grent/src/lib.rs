//! File formats, report rows and the command-line front end for
//! [`grent_core`].

pub mod cli;
pub mod io;
pub mod report;
