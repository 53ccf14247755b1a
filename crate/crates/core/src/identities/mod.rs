//! The named polynomials of the group-law proof and the catalog of
//! identities that, checked by division, make up the proof.

mod catalog;
mod report;
mod symbols;

pub use catalog::{
    dichotomy_generators, dichotomy_resolution, CatalogError, TripleCertificates, entry_info, run_entry, CertificateRecord, CheckRecord,
    Context, EntryInfo, EntryOutcome, Status, TripleResult, CATALOG, TRIPLES,
};
pub use report::{check_entry, context, run_all, RunError, RunOptions, VerificationReport};
pub use symbols::{build_symbols, ring, variables, AddLaw, Form, Mutation, SymPoint, SymbolTable};
