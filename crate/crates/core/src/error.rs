use std::fmt;

use thiserror::Error;

/// A single out-of-range preference: entry `index` (1-based) of the list for
/// type `car_type` holds `value`, but that type only has gaps `0..=bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub car_type: usize,
    pub index: usize,
    pub value: usize,
    pub bound: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "type {} car {}: preference {} exceeds gap bound {}",
            self.car_type, self.index, self.value, self.bound
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("integer out of range at byte {offset}")]
    IntegerRange { offset: usize },

    #[error("an order needs at least one part")]
    EmptyOrder,

    #[error("part {index} of the order is zero; parts must be positive")]
    ZeroPart { index: usize },

    #[error("invalid preference tuple: {}", join_violations(.0))]
    InvalidTpf(Vec<Violation>),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("at-least preference {value} at position {index} exceeds m1 = {m1}")]
    AtLeastBound { index: usize, value: usize, m1: usize },

    #[error("budget exceeded: {required} items needed, cap is {cap}")]
    BudgetExceeded { required: String, cap: u64 },

    #[error("count overflows the chosen integer type")]
    Overflow,
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
