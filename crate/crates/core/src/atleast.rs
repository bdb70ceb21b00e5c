//! Two-type parking under "at least" preferences: a type-2 car with lower
//! bound `a` may take any gap `g` with `a <= g <= m_1`. Each choice of gaps is
//! a branch; branches park exactly like the exact simulator, so the street
//! depends only on the multiset of chosen gaps.
//!
//! [`atleast_outcomes`] simulates every branch and is the reference.
//! [`reachable_gap_multisets`] and [`atleast_count`] skip the duplicates by
//! working with sorted gap choices directly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::Configuration;
use crate::enumeration::check_budget;
use crate::error::{Error, Result};
use crate::park::park_simultaneous;
use crate::tpf::ExactTpf;

/// Default cap on simulated branches.
pub const DEFAULT_BRANCH_BUDGET: u64 = 1_000_000;

/// `(m_1; (a_1, ..., a_l))` read with at-least semantics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtLeastInstance {
    m1: usize,
    prefs: Vec<usize>,
}

impl AtLeastInstance {
    pub fn new(m1: usize, prefs: Vec<usize>) -> Result<Self> {
        if m1 == 0 {
            return Err(Error::ZeroPart { index: 1 });
        }
        if let Some((i, &a)) = prefs.iter().enumerate().find(|&(_, &a)| a > m1) {
            return Err(Error::AtLeastBound {
                index: i + 1,
                value: a,
                m1,
            });
        }
        Ok(AtLeastInstance { m1, prefs })
    }

    pub fn m1(&self) -> usize {
        self.m1
    }

    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }

    /// Number of gap assignments, `prod_j (m_1 - a_j + 1)`.
    pub fn branches(&self) -> BigUint {
        self.prefs
            .iter()
            .map(|&a| BigUint::from(self.m1 - a + 1))
            .product()
    }

    /// The street obtained when every car takes exactly its lower bound.
    pub fn exact_street(&self) -> Configuration {
        self.park_gaps(&self.prefs)
    }

    fn park_gaps(&self, gaps: &[usize]) -> Configuration {
        let tpf = if gaps.is_empty() {
            ExactTpf::new(self.m1, vec![])
        } else {
            ExactTpf::new(self.m1, vec![gaps.to_vec()])
        };
        park_simultaneous(&tpf.expect("m1 > 0")).expect("gaps lie in 0..=m1")
    }
}

/// Distinct streets reachable from an instance, with the number of branches
/// landing on each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeSet {
    pub branches: u64,
    pub outcomes: BTreeMap<Configuration, u64>,
}

impl OutcomeSet {
    pub fn count(&self) -> usize {
        self.outcomes.len()
    }

    pub fn contains(&self, c: &Configuration) -> bool {
        self.outcomes.contains_key(c)
    }

    /// Streets reached by more than one branch.
    pub fn duplicates(&self) -> impl Iterator<Item = (&Configuration, u64)> {
        self.outcomes.iter().filter(|(_, &n)| n > 1).map(|(c, &n)| (c, n))
    }

    /// Union of two outcome sets from disjoint branch ranges.
    pub fn merge(mut self, other: OutcomeSet) -> OutcomeSet {
        self.branches += other.branches;
        for (c, n) in other.outcomes {
            *self.outcomes.entry(c).or_insert(0) += n;
        }
        self
    }
}

/// Simulates every gap assignment `g_j in a_j..=m_1` and collects the
/// streets. Refuses when there are more than `cap` branches.
pub fn atleast_outcomes(inst: &AtLeastInstance, cap: u64) -> Result<OutcomeSet> {
    check_budget(&inst.branches(), cap)?;
    let mut gaps = inst.prefs.clone();
    let mut outcomes = BTreeMap::new();
    let mut branches = 0u64;
    loop {
        *outcomes.entry(inst.park_gaps(&gaps)).or_insert(0) += 1;
        branches += 1;
        // odometer over a_j..=m1
        let Some(pos) = (0..gaps.len()).rev().find(|&p| gaps[p] < inst.m1) else {
            break;
        };
        gaps[pos] += 1;
        gaps[pos + 1..].copy_from_slice(&inst.prefs[pos + 1..]);
    }
    Ok(OutcomeSet { branches, outcomes })
}

/// Every gap multiset some branch can produce, as a weakly increasing tuple,
/// each exactly once in lexicographic order. A sorted tuple `s` is reachable
/// iff `s_t >= b_t` for all `t`, where `b` is the sorted list of lower bounds.
pub fn reachable_gap_multisets(inst: &AtLeastInstance) -> impl Iterator<Item = Vec<usize>> {
    let mut floor = inst.prefs.clone();
    floor.sort_unstable();
    let m1 = inst.m1;
    let mut cur = Some(floor.clone());
    std::iter::from_fn(move || {
        let out = cur.take()?;
        if let Some(pos) = (0..out.len()).rev().find(|&p| out[p] < m1) {
            let mut next = out.clone();
            let v = next[pos] + 1;
            for q in pos..next.len() {
                next[q] = v.max(floor[q]);
            }
            cur = Some(next);
        }
        Some(out)
    })
}

/// The distinct streets, one per reachable gap multiset.
pub fn atleast_streets(inst: &AtLeastInstance) -> BTreeSet<Configuration> {
    reachable_gap_multisets(inst)
        .map(|g| inst.park_gaps(&g))
        .collect()
}

/// Number of distinct streets, counted as the reachable gap multisets by a
/// dynamic program over the sorted lower bounds; no branch is simulated.
pub fn atleast_count(inst: &AtLeastInstance) -> BigUint {
    let mut floor = inst.prefs.clone();
    floor.sort_unstable();
    let m1 = inst.m1;
    // ways[v]: sorted prefixes whose last entry is v
    let mut ways: Vec<BigUint> = vec![BigUint::zero(); m1 + 1];
    let Some((&first, rest)) = floor.split_first() else {
        return BigUint::one();
    };
    for w in &mut ways[first..] {
        *w = BigUint::one();
    }
    for &b in rest {
        let mut acc = BigUint::zero();
        let mut next = vec![BigUint::zero(); m1 + 1];
        for v in 0..=m1 {
            acc += &ways[v];
            if v >= b {
                next[v] = acc.clone();
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// One instance of a sweep. Integers serialize as decimal strings and
/// `prefs` as a semicolon-joined list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    #[serde(serialize_with = "decimal")]
    pub m1: usize,
    #[serde(serialize_with = "semicolons")]
    pub prefs: Vec<usize>,
    #[serde(serialize_with = "decimal")]
    pub branches: BigUint,
    #[serde(serialize_with = "decimal")]
    pub distinct_count: BigUint,
}

fn decimal<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn semicolons<S: serde::Serializer>(v: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&join_prefs(v))
}

pub fn join_prefs(v: &[usize]) -> String {
    let mut out = String::new();
    for (i, a) in v.iter().enumerate() {
        if i > 0 {
            out.push(';');
        }
        write!(out, "{a}").expect("writing to a String");
    }
    out
}

impl SweepRow {
    pub const CSV_HEADER: &'static str = "m1,prefs,branches,distinct_count";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{}",
            self.m1,
            join_prefs(&self.prefs),
            self.branches,
            self.distinct_count
        )
    }
}

/// Every lower-bound tuple over `0..=m1` with length in `min_len..=max_len`,
/// shortest first and lexicographic within a length, with its branch count
/// and distinct-street count. Refuses when that is more than `cap` rows.
pub fn atleast_sweep(m1: usize, min_len: usize, max_len: usize, cap: u64) -> Result<Vec<SweepRow>> {
    if m1 == 0 {
        return Err(Error::ZeroPart { index: 1 });
    }
    let rows: BigUint = (min_len..=max_len)
        .map(|l| BigUint::from(m1 + 1).pow(l as u32))
        .sum();
    check_budget(&rows, cap)?;
    let mut out = Vec::new();
    for len in min_len..=max_len {
        let mut prefs = vec![0usize; len];
        loop {
            let inst = AtLeastInstance::new(m1, prefs.clone())?;
            out.push(SweepRow {
                m1,
                branches: inst.branches(),
                distinct_count: atleast_count(&inst),
                prefs: prefs.clone(),
            });
            let Some(pos) = (0..len).rev().find(|&p| prefs[p] < m1) else {
                break;
            };
            prefs[pos] += 1;
            for p in &mut prefs[pos + 1..] {
                *p = 0;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(m1: usize, prefs: &[usize]) -> AtLeastInstance {
        AtLeastInstance::new(m1, prefs.to_vec()).unwrap()
    }

    fn streets(o: &OutcomeSet) -> Vec<String> {
        o.outcomes.keys().map(|c| c.to_string()).collect()
    }

    #[test]
    fn single_car_in_front_of_two() {
        let o = atleast_outcomes(&inst(2, &[0]), DEFAULT_BRANCH_BUDGET).unwrap();
        assert_eq!(streets(&o), ["1,1,2", "1,2,1", "2,1,1"]);
        assert_eq!(atleast_count(&inst(2, &[0])), BigUint::from(3u32));
    }

    #[test]
    fn three_cars_with_one_duplicate_pair() {
        let i = inst(4, &[2, 3, 4]);
        let o = atleast_outcomes(&i, DEFAULT_BRANCH_BUDGET).unwrap();
        assert_eq!(o.branches, 6);
        assert_eq!(o.count(), 5);
        let dups: Vec<_> = o.duplicates().map(|(c, n)| (c.to_string(), n)).collect();
        assert_eq!(dups, [("1,1,1,2,1,2,2".to_string(), 2)]);
        assert_eq!(atleast_count(&i), BigUint::from(5u32));
        assert!(o.contains(&i.exact_street()));
    }

    #[test]
    fn all_at_the_end() {
        let o = atleast_outcomes(&inst(3, &[3, 3]), 10).unwrap();
        assert_eq!(streets(&o), ["1,1,1,2,2"]);
        assert_eq!(atleast_count(&inst(3, &[3])), BigUint::one());
    }

    #[test]
    fn two_unconstrained_cars() {
        let i = inst(3, &[0, 0]);
        assert_eq!(atleast_outcomes(&i, 100).unwrap().branches, 16);
        assert_eq!(atleast_outcomes(&i, 100).unwrap().count(), 10);
        assert_eq!(atleast_count(&i), BigUint::from(10u32));
    }

    #[test]
    fn empty_preferences() {
        let i = inst(1, &[]);
        assert_eq!(atleast_count(&i), BigUint::one());
        assert_eq!(streets(&atleast_outcomes(&i, 1).unwrap()), ["1"]);
        assert_eq!(reachable_gap_multisets(&i).count(), 1);
    }

    #[test]
    fn bad_instances() {
        assert_eq!(
            AtLeastInstance::new(2, vec![0, 3]),
            Err(Error::AtLeastBound { index: 2, value: 3, m1: 2 })
        );
        assert!(matches!(
            atleast_outcomes(&inst(3, &[0, 0]), 15),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn merge_is_commutative() {
        let a = atleast_outcomes(&inst(2, &[0]), 10).unwrap();
        let b = atleast_outcomes(&inst(2, &[1]), 10).unwrap();
        assert_eq!(a.clone().merge(b.clone()), b.merge(a));
    }

    #[test]
    fn dedup_matches_branch_simulation() {
        for m1 in 1..=4 {
            for len in 0..=3 {
                for row in atleast_sweep(m1, len, len, 1 << 20).unwrap() {
                    let i = inst(m1, &row.prefs);
                    let naive = atleast_outcomes(&i, 1 << 20).unwrap();
                    let dedup = atleast_streets(&i);
                    assert_eq!(naive.outcomes.keys().cloned().collect::<BTreeSet<_>>(), dedup);
                    assert_eq!(BigUint::from(naive.count()), row.distinct_count);
                    assert_eq!(BigUint::from(naive.branches), row.branches);
                }
            }
        }
    }

    #[test]
    fn sweep_rows() {
        let rows = atleast_sweep(2, 1, 1, 100).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.prefs.clone(), r.distinct_count.to_string())).collect();
        assert_eq!(got, [(vec![0], "3".into()), (vec![1], "2".into()), (vec![2], "1".into())]);

        let rows = atleast_sweep(1, 0, 0, 100).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].to_csv(), "1,,1,1");

        let rows = atleast_sweep(4, 3, 3, 1000).unwrap();
        let r = rows.iter().find(|r| r.prefs == [2, 3, 4]).unwrap();
        assert_eq!(r.to_csv(), "4,2;3;4,6,5");
        let v = serde_json::to_value(r).unwrap();
        assert_eq!(v, serde_json::json!({"m1": "4", "prefs": "2;3;4", "branches": "6", "distinct_count": "5"}));

        assert!(matches!(atleast_sweep(2, 0, 2, 12), Err(Error::BudgetExceeded { .. })));
    }
}
