//! Shared fixtures for the criterion benches.

pub use qcorr_core as core;
