//! Severity scoring for lexicon terms against labeled text corpora.
//!
//! The pipeline: [`corpus`] ingests and normalizes corpora and term lists,
//! [`agreement`] scores every term (hatefulness, relativeness, offensiveness)
//! and derives threshold-filtered severe lists, [`evaluation`] scores lists
//! with class-size-normalized confusion matrices, [`mining`] extracts rules
//! that hold across several sequence databases, and [`concepts`] groups those
//! rules and renders them as graphs.

pub mod agreement;
pub mod cli;
pub mod concepts;
pub mod corpus;
pub mod error;
pub mod evaluation;
pub mod mining;
pub mod report;

pub use error::{Error, Result};
