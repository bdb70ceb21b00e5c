//! Exact k-typed parking functions `(m_1; P_2, ..., P_k)`.
//!
//! An [`ExactTpf`] is a structurally well-formed tuple; whether its
//! preferences fit the gap bounds is checked separately by
//! [`ExactTpf::validate`], so out-of-range tuples can still be parsed,
//! printed, and reported on.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result, Violation};
use crate::order::Order;

/// `(m_1; P_2, ..., P_k)`. The order is implied by `m_1` and the list lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactTpf {
    order: Order,
    prefs: Vec<Vec<usize>>,
}

impl ExactTpf {
    /// Builds `(m1; prefs[0], prefs[1], ...)`, where `prefs[0]` is `P_2`.
    pub fn new(m1: usize, prefs: Vec<Vec<usize>>) -> Result<Self> {
        let mut parts = Vec::with_capacity(prefs.len() + 1);
        parts.push(m1);
        parts.extend(prefs.iter().map(Vec::len));
        let order = Order::new(parts)?;
        Ok(ExactTpf { order, prefs })
    }

    /// Like [`ExactTpf::new`], but the preferences come as one concatenated
    /// tuple split according to `order`.
    pub fn from_flat(order: &Order, flat: &[usize]) -> Self {
        debug_assert_eq!(flat.len(), order.total() - order.count(1));
        let mut prefs = Vec::with_capacity(order.types() - 1);
        let mut at = 0;
        for &m in &order.parts()[1..] {
            prefs.push(flat[at..at + m].to_vec());
            at += m;
        }
        ExactTpf {
            order: order.clone(),
            prefs,
        }
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    /// Preference lists `P_2, ..., P_k` in type order.
    pub fn pref_lists(&self) -> &[Vec<usize>] {
        &self.prefs
    }

    /// `P_i` for `2 <= car_type <= k`.
    pub fn list(&self, car_type: usize) -> &[usize] {
        &self.prefs[car_type - 2]
    }

    /// `(car_type, P_i)` pairs for every type that carries a list.
    pub fn lists(&self) -> impl Iterator<Item = (usize, &[usize])> + '_ {
        self.prefs
            .iter()
            .enumerate()
            .map(|(i, p)| (i + 2, p.as_slice()))
    }

    /// All out-of-range preferences, in type then list order.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (car_type, list) in self.lists() {
            let bound = self.order.mu(car_type);
            for (j, &value) in list.iter().enumerate() {
                if value > bound {
                    out.push(Violation {
                        car_type,
                        index: j + 1,
                        value,
                        bound,
                    });
                }
            }
        }
        out
    }

    /// Every preference of a type-`i` car must name a gap in `0..=mu_i`.
    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidTpf(v))
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// Sorts every preference list into weakly increasing order.
    pub fn canonicalize(&self) -> CanonicalTpf {
        let mut prefs = self.prefs.clone();
        for p in &mut prefs {
            p.sort_unstable();
        }
        CanonicalTpf(ExactTpf {
            order: self.order.clone(),
            prefs,
        })
    }

    pub fn is_canonical(&self) -> bool {
        self.prefs.iter().all(|p| p.windows(2).all(|w| w[0] <= w[1]))
    }

    /// Whether `other` is obtained from `self` by rearranging the entries
    /// within every preference list. Reflexive.
    pub fn is_parking_permutation(&self, other: &ExactTpf) -> bool {
        self.order == other.order && self.canonicalize() == other.canonicalize()
    }

    pub fn generative_multiset(&self) -> Result<GenerativeMultiset> {
        self.validate()?;
        let lists = self
            .lists()
            .map(|(car_type, list)| {
                let mut tally = vec![0usize; self.order.mu(car_type) + 1];
                for &g in list {
                    tally[g] += 1;
                }
                tally
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, a)| a > 0)
                    .collect()
            })
            .collect();
        Ok(GenerativeMultiset(lists))
    }
}

/// Text form `(m_1;(p,...),(p,...))`, no whitespace.
impl fmt::Display for ExactTpf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.order.count(1))?;
        for (i, list) in self.prefs.iter().enumerate() {
            f.write_str(if i == 0 { ";(" } else { ",(" })?;
            for (j, p) in list.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        f.write_str(")")
    }
}

impl FromStr for ExactTpf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tpf(s)
    }
}

/// Parses `(m_1;(p,...),...)`. Whitespace between tokens is ignored.
/// Only structure is checked; preference bounds are left to `validate`.
pub fn parse_tpf(text: &str) -> Result<ExactTpf> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.expect(b'(')?;
    let m1_at = p.peek_pos();
    let m1 = p.int()?;
    if m1 == 0 {
        return Err(Error::Syntax {
            offset: m1_at,
            message: "m_1 must be positive".into(),
        });
    }
    let mut prefs = Vec::new();
    if p.eat(b';') {
        prefs.push(p.list()?);
        while p.eat(b',') {
            prefs.push(p.list()?);
        }
    }
    p.expect(b')')?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(Error::Syntax {
            offset: p.pos,
            message: "trailing input".into(),
        });
    }
    ExactTpf::new(m1, prefs)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", b as char)))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        let found = match self.src.get(self.pos) {
            Some(&c) => format!("{:?}", c as char),
            None => "end of input".to_string(),
        };
        Error::Syntax {
            offset: self.pos,
            message: format!("expected {wanted}, found {found}"),
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("an integer"));
        }
        // ASCII digits only, so the slice is valid UTF-8
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::IntegerRange { offset: start })
    }

    fn list(&mut self) -> Result<Vec<usize>> {
        self.expect(b'(')?;
        if self.peek_pos() < self.src.len() && self.src[self.pos] == b')' {
            return Err(Error::Syntax {
                offset: self.pos,
                message: "empty preference list (every type needs at least one car)".into(),
            });
        }
        let mut out = vec![self.int()?];
        while self.eat(b',') {
            out.push(self.int()?);
        }
        self.expect(b')')?;
        Ok(out)
    }
}

/// An [`ExactTpf`] whose preference lists are all weakly increasing: the
/// representative of its family of parking permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTpf(ExactTpf);

impl CanonicalTpf {
    /// `None` if some list is not weakly increasing.
    pub fn new(tpf: ExactTpf) -> Option<Self> {
        tpf.is_canonical().then_some(CanonicalTpf(tpf))
    }

    pub(crate) fn new_unchecked(tpf: ExactTpf) -> Self {
        debug_assert!(tpf.is_canonical());
        CanonicalTpf(tpf)
    }

    pub fn into_inner(self) -> ExactTpf {
        self.0
    }
}

impl Deref for CanonicalTpf {
    type Target = ExactTpf;

    fn deref(&self) -> &ExactTpf {
        &self.0
    }
}

impl AsRef<ExactTpf> for CanonicalTpf {
    fn as_ref(&self) -> &ExactTpf {
        &self.0
    }
}

impl fmt::Display for CanonicalTpf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `{mult(P_2), ..., mult(P_k)}`: for each type, the `(gap, count)` pairs
/// with nonzero count, in increasing gap order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenerativeMultiset(pub Vec<Vec<(usize, usize)>>);

impl GenerativeMultiset {
    /// `mult(P_i)` for `2 <= car_type <= k`.
    pub fn mult(&self, car_type: usize) -> &[(usize, usize)] {
        &self.0[car_type - 2]
    }

    /// Rebuilds the canonical preference lists this multiset tallies.
    pub fn to_canonical(&self, m1: usize) -> Result<CanonicalTpf> {
        let prefs = self
            .0
            .iter()
            .map(|pairs| {
                pairs
                    .iter()
                    .flat_map(|&(g, a)| std::iter::repeat_n(g, a))
                    .collect()
            })
            .collect();
        let tpf = ExactTpf::new(m1, prefs)?;
        Ok(tpf.canonicalize())
    }
}

impl fmt::Display for GenerativeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, pairs) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, (g, a)) in pairs.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "({g},{a})")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}
