//! Command implementations behind the `hopf-ent` binary.

pub mod oracle;
pub mod sweep;
pub mod verify;
