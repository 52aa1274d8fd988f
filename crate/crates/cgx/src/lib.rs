//! IO companion to `cgx-core`: JSON document formats for geometries,
//! ordering families, embeddings, and polygon maps, plus seeded random
//! family sampling for fuzz runs. The `cgx` binary in this package wires
//! these into a command-line tool.

pub mod formats;
pub mod sample;
