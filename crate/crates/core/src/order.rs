use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The number of cars of each type, `(m_1, ..., m_k)`: a composition of the
/// street length `M` into positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Order {
    parts: Vec<usize>,
}

impl Order {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyOrder);
        }
        if let Some(pos) = parts.iter().position(|&m| m == 0) {
            return Err(Error::ZeroPart { index: pos + 1 });
        }
        Ok(Order { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of types `k`.
    pub fn types(&self) -> usize {
        self.parts.len()
    }

    /// Street length `M`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of cars of type `car_type` (1-based).
    pub fn count(&self, car_type: usize) -> usize {
        self.parts[car_type - 1]
    }

    /// Number of cars of type strictly below `car_type` (1-based). Gap indices
    /// for that type range over `0..=mu(car_type)`.
    pub fn mu(&self, car_type: usize) -> usize {
        self.parts[..car_type - 1].iter().sum()
    }

    /// Order extended by one more type with `m` cars.
    pub fn push(&self, m: usize) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.push(m);
        Order::new(parts)
    }

    /// All compositions of `total` into at most `max_types` positive parts,
    /// sorted by number of parts and then lexicographically.
    pub fn compositions(total: usize, max_types: usize) -> Vec<Order> {
        fn go(rest: usize, max_types: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                if !cur.is_empty() {
                    out.push(cur.clone());
                }
                return;
            }
            if cur.len() == max_types {
                return;
            }
            for m in 1..=rest {
                cur.push(m);
                go(rest - m, max_types, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(total, max_types, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.into_iter().map(|parts| Order { parts }).collect()
    }

    /// Every order with `1 <= M <= max_total` and at most `max_types` types, by `M` first.
    pub fn all_up_to(max_total: usize, max_types: usize) -> Vec<Order> {
        (1..=max_total)
            .flat_map(|m| Order::compositions(m, max_types))
            .collect()
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses a comma-separated list such as `4,5` or `(4,5)`.
impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_uint_list(s)?;
        Order::new(parts)
    }
}

/// Comma-separated non-negative integers, optionally wrapped in parentheses.
/// An empty (or `()`) input gives an empty list.
pub fn parse_uint_list(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim();
    let lead = s.len() - s.trim_start().len();
    let (body, base) = match trimmed.strip_prefix('(') {
        Some(rest) => match rest.strip_suffix(')') {
            Some(inner) => (inner, lead + 1),
            None => {
                return Err(Error::Syntax {
                    offset: lead + trimmed.len(),
                    message: "expected ')'".into(),
                })
            }
        },
        None => (trimmed, lead),
    };
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = base;
    for tok in body.split(',') {
        let t = tok.trim();
        let at = offset + (tok.len() - tok.trim_start().len());
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Syntax {
                offset: at,
                message: format!("expected a non-negative integer, found {t:?}"),
            });
        }
        out.push(t.parse().map_err(|_| Error::IntegerRange { offset: at })?);
        offset += tok.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_sums() {
        let o = Order::new(vec![4, 2, 3]).unwrap();
        assert_eq!(o.total(), 9);
        assert_eq!(o.mu(1), 0);
        assert_eq!(o.mu(2), 4);
        assert_eq!(o.mu(3), 6);
        assert_eq!(o.mu(3) + o.count(3), o.total());
    }

    #[test]
    fn rejects_zero_and_empty() {
        assert_eq!(Order::new(vec![]), Err(Error::EmptyOrder));
        assert_eq!(Order::new(vec![2, 0, 1]), Err(Error::ZeroPart { index: 2 }));
        assert_eq!("3,0".parse::<Order>(), Err(Error::ZeroPart { index: 2 }));
    }

    #[test]
    fn parse_and_display() {
        let o: Order = " 1, 1 ,1".parse().unwrap();
        assert_eq!(o.parts(), &[1, 1, 1]);
        assert_eq!(o.to_string(), "1,1,1");
        assert_eq!("(4,5)".parse::<Order>().unwrap().parts(), &[4, 5]);
        assert!(matches!("1,x".parse::<Order>(), Err(Error::Syntax { offset: 2, .. })));
    }

    #[test]
    fn composition_counts() {
        // 2^(M-1) compositions of M when the number of parts is unrestricted.
        for m in 1..=8 {
            assert_eq!(Order::compositions(m, m).len(), 1 << (m - 1));
        }
        // compositions of 4 into at most 2 parts: 4, 1+3, 2+2, 3+1
        let c: Vec<String> = Order::compositions(4, 2).iter().map(|o| o.to_string()).collect();
        assert_eq!(c, ["4", "1,3", "2,2", "3,1"]);
    }
}
