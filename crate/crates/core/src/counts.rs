//! Closed-form edge counts of the Turán-type host graphs.

use crate::error::{arg, Result};
use crate::graph::{check_h_params, turan_class_sizes};

pub fn binomial2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `t(n, p) = e(T(n, p))`.
pub fn turan_count(n: u64, p: u64) -> Result<u64> {
    if p == 0 {
        return arg("p must be >= 1");
    }
    let (q, r) = (n / p, n % p);
    let squares = r * (q + 1) * (q + 1) + (p - r) * q * q;
    Ok((n * n - squares) / 2)
}

/// `h(n, p, k) = e(K_{k-1} ∨ T(n-k+1, p))`.
pub fn h_count(n: u64, p: u64, k: u64) -> Result<u64> {
    Ok(binomial2(k.saturating_sub(1)) + h_prime_count(n, p, k)?)
}

/// `h'(n, p, k) = e(complement(K_{k-1}) ∨ T(n-k+1, p))`.
pub fn h_prime_count(n: u64, p: u64, k: u64) -> Result<u64> {
    check_h_params(n as usize, p as usize, k as usize)?;
    let rest = n + 1 - k;
    Ok((k - 1) * rest + turan_count(rest, p)?)
}

/// Upper bound `t(n,p) - Σ C(|s_i|, 2)` on the edges of a `p`-colourable graph whose colour
/// classes have the given sizes, where `s_i` is the deviation of class `i` from its balanced size.
///
/// Balanced sizes are matched to the class sizes in sorted order, which minimises the
/// subtracted term.
pub fn simonovits_bound(n: u64, p: u64, class_sizes: &[u64]) -> Result<i64> {
    if p == 0 || class_sizes.len() as u64 != p {
        return arg(format!("expected {p} class sizes, got {}", class_sizes.len()));
    }
    if class_sizes.iter().sum::<u64>() != n {
        return arg(format!("class sizes {class_sizes:?} do not sum to {n}"));
    }
    let balanced = turan_class_sizes(n as usize, p as usize)?;
    let mut sizes = class_sizes.to_vec();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let penalty: u64 = sizes
        .iter()
        .zip(&balanced)
        .map(|(&c, &m)| binomial2(c.abs_diff(m as u64)))
        .sum();
    Ok(turan_count(n, p)? as i64 - penalty as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{h_graph, h_prime_graph, turan};

    #[test]
    fn small_values() {
        assert_eq!(turan_count(5, 2).unwrap(), 6);
        assert_eq!(turan_count(9, 3).unwrap(), 27);
        assert_eq!(turan_count(0, 3).unwrap(), 0);
        assert_eq!(h_prime_count(10, 2, 3).unwrap(), 32);
        assert!(turan_count(4, 0).is_err());
        assert!(h_count(4, 2, 6).is_err());
    }

    #[test]
    fn counts_match_constructed_graphs() {
        for n in 0..14u64 {
            for p in 1..5u64 {
                let t = turan(n as usize, p as usize).unwrap();
                assert_eq!(t.edge_count() as u64, turan_count(n, p).unwrap());
                for k in 1..=n + 1 {
                    assert_eq!(h_count(n, p, 1).unwrap(), turan_count(n, p).unwrap());
                    let h = h_graph(n as usize, p as usize, k as usize).unwrap();
                    let hp = h_prime_graph(n as usize, p as usize, k as usize).unwrap();
                    assert_eq!(h.edge_count() as u64, h_count(n, p, k).unwrap());
                    assert_eq!(hp.edge_count() as u64, h_prime_count(n, p, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn simonovits_examples() {
        assert_eq!(simonovits_bound(4, 2, &[2, 2]).unwrap(), 4);
        assert_eq!(simonovits_bound(4, 2, &[4, 0]).unwrap(), 2);
        assert_eq!(simonovits_bound(5, 2, &[3, 2]).unwrap(), 6);
        assert_eq!(simonovits_bound(5, 2, &[2, 3]).unwrap(), 6);
        assert!(simonovits_bound(5, 2, &[3, 3]).is_err());
        assert!(simonovits_bound(5, 3, &[3, 2]).is_err());
    }
}
