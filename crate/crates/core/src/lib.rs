//! Inductive numeral systems and the sequences they index.
//!
//! Four numeral families live here, each as an ordinary algebraic data type
//! whose arithmetic follows its constructors clause by clause:
//!
//! * [`unary`]: Peano naturals (`Zero`, `Succ`).
//! * [`binary`]: canonical binary naturals (`Z`, `A`: n ↦ 2n, `B`: n ↦ 2n+1).
//! * [`twoscomp`]: two's-complement integers, the binary grammar plus `N` (= −1).
//! * [`braun`]: bijective C–D index numerals and the Braun-tree sequences
//!   they address.
//!
//! Every recursive operation is written once, generic over a
//! [`costmeter::Meter`]. The plain entry points pass a zero-sized
//! [`costmeter::Unmetered`] meter, the metered ones a [`costmeter::StepCount`],
//! so step counts always describe the exact code that produces results.

pub mod binary;
pub mod braun;
pub mod costmeter;
mod error;
pub mod listlab;
pub mod numio;
pub mod suites;
pub mod sweep;
pub mod twoscomp;
pub mod unary;

pub use binary::BinNat;
pub use braun::{BraunSeq, BraunTree, CdIndex};
pub use costmeter::{Meter, StepCount};
pub use error::{Error, Result};
pub use twoscomp::TcInt;
pub use unary::UnaryNat;
