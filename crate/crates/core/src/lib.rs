pub mod dicke;
pub mod error;
pub mod fidelity;
pub mod linalg;
pub mod oracle;
pub mod optimize;
pub mod qfi;
pub mod random;
pub mod serialization;
pub mod state;
pub mod bell;
pub mod cli;
