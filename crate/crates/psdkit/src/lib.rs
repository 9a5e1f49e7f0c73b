//! IO companion to `psdkit-core`: the JSON/CSV file formats and the seeded
//! self-test suite behind the `psdkit` command-line tool.

pub mod formats;
pub mod selftest;
