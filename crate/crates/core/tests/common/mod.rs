//! Shared fixtures and independent oracles for the integration tests.

#![allow(dead_code)]

pub mod fixtures;
pub mod oracle;
