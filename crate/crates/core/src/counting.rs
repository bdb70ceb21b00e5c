//! Exact closed-form counts.
//!
//! Every function is generic over the integer type `N`. With
//! [`BigCount`](crate::BigCount) the results are exact at any size; with a
//! fixed-width type such as `u64` an overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.
//!
//! * total TPFs of an order: `prod_{i>=2} (1 + mu_i)^{m_i}`
//! * distinct streets `L`: `prod_i C(m_1 + ... + m_i, m_i)`
//! * family size `F(alpha)`: `prod_i m_i! / prod_l a_{i,l}!`

use std::fmt;

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, FromPrimitive, One, Zero};
use serde::{Serialize, Serializer};

use crate::enumeration::{check_budget, enumerate_families};
use crate::error::{Error, Result};
use crate::order::Order;
use crate::tpf::ExactTpf;

/// Integer types the counting functions can run in.
pub trait Count:
    Clone + Ord + fmt::Debug + fmt::Display + Zero + One + CheckedAdd + CheckedMul + CheckedDiv + FromPrimitive
{
}

impl<T> Count for T where
    T: Clone + Ord + fmt::Debug + fmt::Display + Zero + One + CheckedAdd + CheckedMul + CheckedDiv + FromPrimitive
{
}

fn lift<N: Count>(x: usize) -> Result<N> {
    N::from_usize(x).ok_or(Error::Overflow)
}

fn mul<N: Count>(a: &N, b: &N) -> Result<N> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn pow<N: Count>(base: usize, exp: usize) -> Result<N> {
    let b: N = lift(base)?;
    (0..exp).try_fold(N::one(), |acc, _| mul(&acc, &b))
}

/// `C(n, r)` by the running product `prod_{t=1}^{r} (n - r + t) / t`; each
/// partial product is itself a binomial, so every division is exact.
pub fn binomial<N: Count>(n: usize, r: usize) -> Result<N> {
    if r > n {
        return Ok(N::zero());
    }
    let r = r.min(n - r);
    let mut acc = N::one();
    for t in 1..=r {
        acc = mul(&acc, &lift(n - r + t)?)?;
        acc = acc.checked_div(&lift(t)?).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// `(a_0 + ... + a_n)! / (a_0! ... a_n!)` as a product of binomials.
pub fn multinomial<N: Count>(parts: &[usize]) -> Result<N> {
    let mut acc = N::one();
    let mut seen = 0;
    for &a in parts {
        seen += a;
        acc = mul(&acc, &binomial(seen, a)?)?;
    }
    Ok(acc)
}

/// Number of exact TPFs of `order`. `1` for a single type.
pub fn count_tpfs<N: Count>(order: &Order) -> Result<N> {
    (2..=order.types()).try_fold(N::one(), |acc, i| {
        mul(&acc, &pow(1 + order.mu(i), order.count(i))?)
    })
}

/// Number of distinct streets (equivalently, of families) of `order`.
pub fn count_configurations<N: Count>(order: &Order) -> Result<N> {
    (1..=order.types()).try_fold(N::one(), |acc, i| {
        mul(&acc, &binomial(order.mu(i) + order.count(i), order.count(i))?)
    })
}

/// Number of parking permutations of `tpf`, itself included: the product
/// over types of the multinomial of its gap tallies.
pub fn family_size<N: Count>(tpf: &ExactTpf) -> Result<N> {
    let gm = tpf.generative_multiset()?;
    gm.0.iter().try_fold(N::one(), |acc, pairs| {
        let tallies: Vec<usize> = pairs.iter().map(|&(_, a)| a).collect();
        mul(&acc, &multinomial(&tallies)?)
    })
}

fn decimal<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn order_text<S: Serializer>(o: &Order, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(o)
}

/// Both sides of the family-sum identity for one order. Integers serialize
/// as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport<N: Count> {
    #[serde(serialize_with = "order_text")]
    pub order: Order,
    /// Closed-form number of TPFs; the identity's right-hand side.
    #[serde(serialize_with = "decimal")]
    pub total_tpfs: N,
    /// Closed-form number of distinct streets.
    #[serde(serialize_with = "decimal")]
    pub num_configurations: N,
    /// How many canonical forms the stream produced.
    #[serde(serialize_with = "decimal")]
    pub families_enumerated: N,
    /// Sum of family sizes over every canonical form.
    #[serde(serialize_with = "decimal")]
    pub identity_lhs: N,
    pub identity_holds: bool,
    /// `families_enumerated == num_configurations`.
    pub families_match: bool,
}

impl<N: Count> CountReport<N> {
    pub fn ok(&self) -> bool {
        self.identity_holds && self.families_match
    }
}

/// Sums family sizes over every canonical form of `order` and compares
/// against the closed-form TPF total. Visits the `L` families only, never
/// the TPFs themselves; refuses when `L > cap`.
pub fn verify_identity<N: Count>(order: &Order, cap: u64) -> Result<CountReport<N>> {
    let num_configurations: N = count_configurations(order)?;
    let l: num_bigint::BigUint = count_configurations(order)?;
    check_budget(&l, cap)?;
    let total_tpfs: N = count_tpfs(order)?;
    let mut lhs = N::zero();
    let mut families = N::zero();
    for fam in enumerate_families(order) {
        let f: N = family_size(&fam)?;
        lhs = lhs.checked_add(&f).ok_or(Error::Overflow)?;
        families = families.checked_add(&N::one()).ok_or(Error::Overflow)?;
    }
    Ok(CountReport {
        order: order.clone(),
        identity_holds: lhs == total_tpfs,
        families_match: families == num_configurations,
        total_tpfs,
        num_configurations,
        families_enumerated: families,
        identity_lhs: lhs,
    })
}
