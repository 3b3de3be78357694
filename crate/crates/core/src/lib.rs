//! GHZ-state quantum secret sharing (QSS) and third-man quantum cryptography
//! (TQC), end to end: an exact few-qubit state-vector simulator, a noisy
//! entanglement source, three-party protocol machines over a pluggable
//! classical transport, block-parity error reduction, and one-time-pad
//! encryption with cooperative two-key decryption.
//!
//! The pipeline a session runs:
//!
//! 1. A seeded source emits GHZ triplets (optionally noisy, optionally
//!    intercepted by an eavesdropper).
//! 2. Each party measures its photon in a randomly chosen basis and records
//!    the result.
//! 3. Bases are announced over the classical channel; rounds with a
//!    key-generating basis combination are sifted and encoded into raw keys.
//! 4. A random sample of the raw key is sacrificed to estimate the QBER.
//! 5. Block-parity passes reduce the remaining error rate.
//! 6. The corrected keys drive a one-time pad: the dealer's ciphertext can be
//!    decrypted only by XOR-combining both recipients' keys.
//!
//! Everything is deterministic given a 64-bit seed; see [`rng`] for how the
//! independent random streams are derived from it.

pub mod bits;
pub mod otp;
pub mod protocol;
pub mod qsim;
pub mod reconcile;
pub mod rng;
pub mod source;
pub mod transport;

pub use protocol::{
    run_party, run_session, BasisCombo, EvePolicy, PartyResult, Role, RoundRecord, SessionConfig,
    SessionError, SessionMode, SessionOutcome, SessionReport,
};
pub use qsim::{Basis, Outcome, StateVector};
pub use source::NoiseModel;
pub use transport::{Envelope, Message, Transport};
