//! Exhaustive, streaming generation of every exact TPF of an order, of every
//! canonical form (one per family), and of every distinct parked street.
//!
//! Both streams walk the concatenated preference tuple `(P_2, ..., P_k)` as
//! an odometer, so they hold one tuple of state and emit items in strictly
//! increasing lexicographic order.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::config::Configuration;
use crate::counting::count_tpfs;
use crate::error::{Error, Result};
use crate::order::Order;
use crate::park::park_simultaneous;
use crate::tpf::{CanonicalTpf, ExactTpf};

/// Default cap on the number of TPFs [`build_family_table`] will visit.
pub const DEFAULT_TPF_BUDGET: u64 = 10_000_000;

/// Gap bound `mu_i` of every position in the concatenated tuple, plus the
/// start of the list each position belongs to.
fn layout(order: &Order) -> (Vec<usize>, Vec<usize>) {
    let mut bounds = Vec::new();
    let mut starts = Vec::new();
    let mut start = 0;
    for car_type in 2..=order.types() {
        let m = order.count(car_type);
        bounds.extend(std::iter::repeat_n(order.mu(car_type), m));
        starts.extend(std::iter::repeat_n(start, m));
        start += m;
    }
    (bounds, starts)
}

/// Every exact TPF of an order; see [`enumerate_tpfs`].
#[derive(Debug, Clone)]
pub struct TpfStream {
    order: Order,
    bounds: Vec<usize>,
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

impl TpfStream {
    pub fn order(&self) -> &Order {
        &self.order
    }

    /// Advances and borrows the next concatenated preference tuple, without
    /// allocating an [`ExactTpf`].
    pub fn next_flat(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.started && !step_free(&mut self.cursor, &self.bounds) {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(&self.cursor)
    }
}

/// Odometer step over `0..=bounds[pos]` in every position.
fn step_free(cursor: &mut [usize], bounds: &[usize]) -> bool {
    for pos in (0..cursor.len()).rev() {
        if cursor[pos] < bounds[pos] {
            cursor[pos] += 1;
            for c in &mut cursor[pos + 1..] {
                *c = 0;
            }
            return true;
        }
    }
    false
}

impl Iterator for TpfStream {
    type Item = ExactTpf;

    fn next(&mut self) -> Option<ExactTpf> {
        let order = self.order.clone();
        self.next_flat().map(|flat| ExactTpf::from_flat(&order, flat))
    }
}

/// Streams all `prod (1 + mu_i)^{m_i}` exact TPFs of `order`, each once,
/// ordered lexicographically by `(P_2, ..., P_k)`.
pub fn enumerate_tpfs(order: &Order) -> TpfStream {
    let (bounds, _) = layout(order);
    TpfStream {
        order: order.clone(),
        cursor: vec![0; bounds.len()],
        bounds,
        started: false,
        done: false,
    }
}

/// Every canonical TPF of an order; see [`enumerate_families`].
#[derive(Debug, Clone)]
pub struct FamilyStream {
    order: Order,
    bounds: Vec<usize>,
    starts: Vec<usize>,
    cursor: Vec<usize>,
    done: bool,
}

impl FamilyStream {
    pub fn order(&self) -> &Order {
        &self.order
    }

    /// Next weakly increasing combination in lexicographic order: bump the
    /// rightmost entry below its bound, then reset the rest of its own list
    /// to the bumped value and every later list to zeros.
    fn step(&mut self) -> bool {
        for pos in (0..self.cursor.len()).rev() {
            if self.cursor[pos] < self.bounds[pos] {
                let v = self.cursor[pos] + 1;
                let start = self.starts[pos];
                for q in pos..self.cursor.len() {
                    self.cursor[q] = if self.starts[q] == start { v } else { 0 };
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for FamilyStream {
    type Item = CanonicalTpf;

    fn next(&mut self) -> Option<CanonicalTpf> {
        if self.done {
            return None;
        }
        let item = CanonicalTpf::new_unchecked(ExactTpf::from_flat(&self.order, &self.cursor));
        self.done = !self.step();
        Some(item)
    }
}

/// Streams every canonical form of `order` once: each `P_i` a weakly
/// increasing tuple over `0..=mu_i`, generated directly rather than by
/// filtering.
pub fn enumerate_families(order: &Order) -> FamilyStream {
    let (bounds, starts) = layout(order);
    FamilyStream {
        order: order.clone(),
        cursor: vec![0; bounds.len()],
        bounds,
        starts,
        done: false,
    }
}

/// Parks each canonical form; the streets come out pairwise distinct.
pub fn enumerate_configurations(order: &Order) -> impl Iterator<Item = Configuration> {
    enumerate_families(order)
        .map(|c| park_simultaneous(&c).expect("enumerated canonical forms are valid"))
}

/// In-place next lexicographic permutation of a multiset; `false` once the
/// slice is in descending order (it is left sorted ascending again).
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every parking permutation of `tpf` (the whole family, `tpf` included),
/// each once, in lexicographic order of the concatenated tuple.
pub fn family_members(tpf: &ExactTpf) -> impl Iterator<Item = ExactTpf> {
    let canon = tpf.canonicalize().into_inner();
    let m1 = canon.order().count(1);
    let mut lists: Vec<Vec<usize>> = canon.pref_lists().to_vec();
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let item = ExactTpf::new(m1, lists.clone()).expect("same shape as the input");
        // odometer: the last list turns fastest; a list that wraps resets to sorted
        done = !lists.iter_mut().rev().any(|l| next_permutation(l));
        Some(item)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntry {
    pub members: u64,
    pub config: Configuration,
}

/// Every TPF of an order grouped by canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTable {
    pub order: Order,
    pub families: BTreeMap<CanonicalTpf, FamilyEntry>,
}

impl FamilyTable {
    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn get(&self, key: &CanonicalTpf) -> Option<&FamilyEntry> {
        self.families.get(key)
    }

    pub fn total_members(&self) -> u64 {
        self.families.values().map(|e| e.members).sum()
    }
}

/// Fails with [`Error::BudgetExceeded`] when `required > cap`.
pub(crate) fn check_budget(required: &BigUint, cap: u64) -> Result<()> {
    if *required > BigUint::from(cap) {
        Err(Error::BudgetExceeded {
            required: required.to_string(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Visits every TPF of `order`, files it under its canonical form, and
/// stores the street the key parks to. Refuses to start when the order has
/// more than `cap` TPFs.
pub fn build_family_table(order: &Order, cap: u64) -> Result<FamilyTable> {
    let total: BigUint = count_tpfs(order)?;
    check_budget(&total, cap)?;
    let mut families: BTreeMap<CanonicalTpf, FamilyEntry> = BTreeMap::new();
    for tpf in enumerate_tpfs(order) {
        let key = tpf.canonicalize();
        match families.get_mut(&key) {
            Some(e) => e.members += 1,
            None => {
                let config = park_simultaneous(&key)?;
                families.insert(key, FamilyEntry { members: 1, config });
            }
        }
    }
    Ok(FamilyTable {
        order: order.clone(),
        families,
    })
}
