//! Test-only oracles. None of these call into the simulators, the inverse
//! map, the stream generators, or the closed forms they are used to check.

#![allow(dead_code)]

use std::collections::HashMap;

use ktpf::{ExactTpf, Order};

/// All distinct arrangements of `parts[i]` copies of label `i + 1`, by
/// plain recursion over which label goes next.
pub fn arrangements(order: &Order) -> Vec<Vec<u32>> {
    fn go(left: &mut [usize], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left.iter().all(|&n| n == 0) {
            out.push(cur.clone());
            return;
        }
        for t in 0..left.len() {
            if left[t] > 0 {
                left[t] -= 1;
                cur.push(t as u32 + 1);
                go(left, cur, out);
                cur.pop();
                left[t] += 1;
            }
        }
    }
    let mut left = order.parts().to_vec();
    let mut out = Vec::new();
    go(&mut left, &mut Vec::new(), &mut out);
    out
}

/// For every type `i >= 2`, the sorted list of "how many cars of type < i
/// stand in front of this type-i car". A street satisfies an exact tuple
/// precisely when this equals the tuple's lists sorted.
pub fn street_signature(street: &[u32], k: usize) -> Vec<Vec<usize>> {
    let mut sig = vec![Vec::new(); k.saturating_sub(1)];
    for (pos, &c) in street.iter().enumerate() {
        if c >= 2 {
            let lower = street[..pos].iter().filter(|&&d| d < c).count();
            sig[c as usize - 2].push(lower);
        }
    }
    for s in &mut sig {
        s.sort_unstable();
    }
    sig
}

pub fn sorted_lists(tpf: &ExactTpf) -> Vec<Vec<usize>> {
    tpf.pref_lists()
        .iter()
        .map(|l| {
            let mut l = l.clone();
            l.sort_unstable();
            l
        })
        .collect()
}

/// Signature -> every street with that signature, for one order.
pub fn streets_by_signature(order: &Order) -> HashMap<Vec<Vec<usize>>, Vec<Vec<u32>>> {
    let mut map: HashMap<_, Vec<_>> = HashMap::new();
    for s in arrangements(order) {
        map.entry(street_signature(&s, order.types())).or_default().push(s);
    }
    map
}

/// Every preference tuple over `0..=mu_i` by nested recursion.
pub fn brute_tpfs(order: &Order) -> Vec<ExactTpf> {
    let mut bounds = Vec::new();
    for i in 2..=order.types() {
        let mu: usize = order.parts()[..i - 1].iter().sum();
        bounds.extend(std::iter::repeat_n(mu, order.parts()[i - 1]));
    }
    fn go(bounds: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == bounds.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=bounds[cur.len()] {
            cur.push(v);
            go(bounds, cur, out);
            cur.pop();
        }
    }
    let mut flats = Vec::new();
    go(&bounds, &mut Vec::new(), &mut flats);
    flats.iter().map(|f| ExactTpf::from_flat(order, f)).collect()
}

/// Number of distinct rearrangements of a list, by listing all `n!`
/// orderings and deduplicating.
pub fn distinct_rearrangements(list: &[usize]) -> usize {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut std::collections::HashSet<Vec<usize>>) {
        if rest.is_empty() {
            out.insert(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = std::collections::HashSet::new();
    go(&mut list.to_vec(), &mut Vec::new(), &mut out);
    out.len()
}

/// Every order with `M <= max_total`, any number of types.
pub fn orders_up_to(max_total: usize) -> Vec<Order> {
    Order::all_up_to(max_total, max_total)
}

/// Street text as the paper prints it, digits without separators.
pub fn compact(street: &[u32]) -> String {
    street.iter().map(|c| c.to_string()).collect()
}
