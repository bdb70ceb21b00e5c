//! Exact k-typed parking functions.
//!
//! `M` cars of `k` types park on a one-way street of `M` spots. Type-1 cars
//! park freely; a type-`i` car states exactly how many cars of lower type
//! must stand in front of it (its *gap*). A preference tuple
//! `(m_1; P_2, ..., P_k)` therefore determines a single street.
//!
//! The crate provides
//!
//! * [`tpf`]: the tuple type, its text form, validation, canonical forms and
//!   generative multisets;
//! * [`park`]: two equivalent parking simulators and the inverse map from a
//!   street to its canonical tuple;
//! * [`enumeration`]: streaming generation of all tuples, families and
//!   streets of an order;
//! * [`counting`]: exact closed-form counts, generic over the integer type;
//! * [`atleast`]: brute-force exploration of the two-type "at least" rule.
//!
//! ```
//! use ktpf::{park, ExactTpf};
//!
//! let a: ExactTpf = "(4;(0,1,1,2,2))".parse().unwrap();
//! assert_eq!(park(&a).unwrap().to_string(), "2,1,2,2,1,2,2,1,1");
//! ```

pub mod atleast;
pub mod config;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod order;
pub mod park;
pub mod tpf;

pub use atleast::{atleast_count, atleast_outcomes, atleast_sweep, AtLeastInstance, OutcomeSet};
pub use config::{Configuration, Label};
pub use counting::{count_configurations, count_tpfs, family_size, verify_identity, Count};
pub use enumeration::{
    build_family_table, enumerate_configurations, enumerate_families, enumerate_tpfs, family_members,
    FamilyTable,
};
pub use error::{Error, Result, Violation};
pub use order::Order;
pub use park::{config_to_canonical, park, park_iterative, park_simultaneous};
pub use tpf::{parse_tpf, CanonicalTpf, ExactTpf, GenerativeMultiset};

/// Arbitrary-precision count; the default for everything user-facing.
pub type BigCount = num_bigint::BigUint;

/// Identity report in exact arithmetic.
pub type BigCountReport = counting::CountReport<BigCount>;

/// Identity report in 64-bit arithmetic; overflow is an error.
pub type CountReport64 = counting::CountReport<u64>;
