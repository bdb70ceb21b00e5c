use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{parse_uint_list, Order};

/// Type label of a parked car, `1..=k`.
pub type Label = u32;

/// A parked street: one type label per spot, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Configuration(Vec<Label>);

impl Configuration {
    /// Accepts any non-empty label sequence in which every label `1..=k`
    /// occurs at least once, `k` being the largest label.
    pub fn new(street: Vec<Label>) -> Result<Self> {
        if street.is_empty() {
            return Err(Error::InvalidConfiguration("empty street".into()));
        }
        let k = *street.iter().max().expect("non-empty") as usize;
        let mut seen = vec![false; k + 1];
        for &c in &street {
            seen[c as usize] = true;
        }
        if seen[0] {
            return Err(Error::InvalidConfiguration("label 0 (labels start at 1)".into()));
        }
        if let Some(missing) = seen[1..].iter().position(|&s| !s) {
            return Err(Error::InvalidConfiguration(format!(
                "label {} missing below max label {k}",
                missing + 1
            )));
        }
        Ok(Configuration(street))
    }

    pub(crate) fn from_street(street: Vec<Label>) -> Self {
        Configuration(street)
    }

    pub fn street(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Highest label, i.e. the number of types.
    pub fn types(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    /// The order read off by counting labels.
    pub fn order(&self) -> Order {
        let mut parts = vec![0usize; self.types()];
        for &c in &self.0 {
            parts[c as usize - 1] += 1;
        }
        Order::new(parts).expect("constructor guarantees every label occurs")
    }
}

/// Comma-separated labels, e.g. `2,1,2,2,1,2,2,1,1`.
impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = parse_uint_list(s)?
            .into_iter()
            .map(|x| Label::try_from(x).map_err(|_| Error::InvalidConfiguration(format!("label {x} too large"))))
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(labels)
    }
}
