//! The two parking procedures and the inverse map from a street back to its
//! canonical preference tuple.
//!
//! Both simulators start from `m_1` type-1 cars and add types `2..=k` in
//! turn. A type-`i` car preferring gap `l` ends up right after the `l`-th car
//! of type `< i` (gap 0 is in front of all of them); type-`i` cars sharing a
//! gap sit next to each other.

use crate::config::{Configuration, Label};
use crate::error::Result;
use crate::tpf::{CanonicalTpf, ExactTpf};

/// Parks each type in one pass: tally the gap counts for type `i`, then
/// rebuild the street emitting `a_l` type-`i` cars in front of lower car
/// `l + 1`, and the last gap's cars at the end.
pub fn park_simultaneous(tpf: &ExactTpf) -> Result<Configuration> {
    tpf.validate()?;
    let order = tpf.order();
    let mut street: Vec<Label> = vec![1; order.count(1)];
    for (car_type, list) in tpf.lists() {
        let mut tally = vec![0usize; order.mu(car_type) + 1];
        for &g in list {
            tally[g] += 1;
        }
        let label = car_type as Label;
        let mut next = Vec::with_capacity(street.len() + list.len());
        for (gap, &lower) in street.iter().enumerate() {
            next.extend(std::iter::repeat_n(label, tally[gap]));
            next.push(lower);
        }
        next.extend(std::iter::repeat_n(label, tally[street.len()]));
        street = next;
    }
    Ok(Configuration::from_street(street))
}

/// Parks one car at a time in list order. A car walks past `l` lower-type
/// cars, then past any same-type cars already in that gap.
pub fn park_iterative(tpf: &ExactTpf) -> Result<Configuration> {
    tpf.validate()?;
    let mut street: Vec<Label> = vec![1; tpf.order().count(1)];
    for (car_type, list) in tpf.lists() {
        let label = car_type as Label;
        for &gap in list {
            let mut pos = 0;
            let mut passed = 0;
            while passed < gap {
                if street[pos] < label {
                    passed += 1;
                }
                pos += 1;
            }
            while pos < street.len() && street[pos] == label {
                pos += 1;
            }
            street.insert(pos, label);
        }
    }
    Ok(Configuration::from_street(street))
}

/// The default simulator.
pub fn park(tpf: &ExactTpf) -> Result<Configuration> {
    park_simultaneous(tpf)
}

/// For each type-`i` car (`i >= 2`), records how many cars of type `< i`
/// stand in front of it. Reading left to right already yields each list in
/// weakly increasing order.
pub fn config_to_canonical(config: &Configuration) -> CanonicalTpf {
    let order = config.order();
    let k = order.types();
    let mut seen = vec![0usize; k + 1];
    let mut prefs: Vec<Vec<usize>> = (2..=k).map(|i| Vec::with_capacity(order.count(i))).collect();
    for &c in config.street() {
        let c = c as usize;
        if c >= 2 {
            let lower: usize = seen[1..c].iter().sum();
            prefs[c - 2].push(lower);
        }
        seen[c] += 1;
    }
    let tpf = ExactTpf::new(order.count(1), prefs).expect("order taken from the street");
    CanonicalTpf::new_unchecked(tpf)
}
