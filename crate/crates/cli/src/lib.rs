//! Serialization layer shared by the `critline` binary and its tests:
//! the JSON-lines zero cache and the fixed-key-order JSON objects printed
//! on standard output.

pub mod cache;
pub mod jsonfmt;
