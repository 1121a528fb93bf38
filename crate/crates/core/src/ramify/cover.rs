//! The polynomial of prime degree `p` whose branch data realizes every
//! nontrivial cycle type of `S_m` inside `S_p`.

use crate::arith::modp::is_prime_u64;
use crate::arith::{Field, Poly, Rational};

use super::build::{build_ramified_poly, multiplicity_pattern, RamifiedPoly};
use super::{RamificationCondition, RamificationSpec, RamifyError};

/// Primes past the first candidate tried before giving up.
const EXTRA_PRIMES: usize = 5;

/// Partitions of `m`, largest parts first, in reverse lexicographic order.
pub fn partitions(m: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

fn next_prime_after(n: usize) -> usize {
    (n + 1..).find(|k| is_prime_u64(*k as u64)).expect("primes are unbounded")
}

#[derive(Clone, Debug)]
pub struct Branch {
    pub beta: Rational,
    pub partition: Vec<u32>,
    /// Multiplicities of `P - beta` over an algebraic closure.
    pub pattern: Vec<u32>,
    pub matches: bool,
}

#[derive(Clone, Debug)]
pub struct SmCoverReport {
    pub m: u32,
    pub p: usize,
    pub poly: RamifiedPoly,
    pub branches: Vec<Branch>,
    pub transposition_present: bool,
    pub notes: Vec<String>,
}

impl SmCoverReport {
    pub fn passed(&self) -> bool {
        self.branches.iter().all(|b| b.matches) && self.transposition_present && self.poly.p.deg0() == self.p
    }
}

/// Builds `P` of the smallest admissible prime degree with one branch value
/// per nontrivial partition of `m`, and certifies the inertia cycle types.
pub fn sm_cover(m: u32) -> Result<SmCoverReport, RamifyError> {
    if m < 2 {
        return Err(RamifyError::Invalid(format!("m = {m} must be at least 2")));
    }
    let parts: Vec<Vec<u32>> = partitions(m).into_iter().filter(|p| p[0] > 1).collect();
    let mut entries = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        let cond = RamificationCondition::new(p.iter().copied().filter(|b| *b > 1).collect())?;
        entries.push((cond, Rational::from_i64(i as i64)));
    }
    let bare = RamificationSpec::new(entries.clone(), None)?;
    let first = build_ramified_poly(&bare)?;
    let bound = first.q.deg0().max(first.h.deg0());
    let mut prime = next_prime_after(bound);
    let mut last_err = None;
    for _ in 0..=EXTRA_PRIMES {
        match certify(m, prime, &parts, &entries) {
            Ok(r) => return Ok(r),
            Err(e) => last_err = Some(e),
        }
        prime = next_prime_after(prime);
    }
    Err(last_err.expect("at least one attempt"))
}

fn certify(
    m: u32,
    prime: usize,
    parts: &[Vec<u32>],
    entries: &[(RamificationCondition, Rational)],
) -> Result<SmCoverReport, RamifyError> {
    let spec = RamificationSpec::new(entries.to_vec(), Some(prime))?;
    let poly = build_ramified_poly(&spec)?;
    let mut branches = Vec::new();
    for (part, (_, beta)) in parts.iter().zip(entries) {
        let pattern = multiplicity_pattern(&(&poly.p - &Poly::constant(beta.clone())));
        let mut want = part.clone();
        want.extend(std::iter::repeat(1).take(prime - m as usize));
        branches.push(Branch { beta: beta.clone(), partition: part.clone(), matches: pattern == want, pattern });
    }
    let transposition_present = branches.iter().any(|b| b.matches && b.pattern.iter().filter(|x| **x == 2).count() == 1 && b.pattern.iter().all(|x| *x <= 2));
    if !branches.iter().all(|b| b.matches) {
        return Err(RamifyError::Mismatch { beta: "some branch".into(), detail: "pattern differs from the partition".into() });
    }
    let notes = vec![
        "P(x) - t has degree 1 in t and content 1, so it is irreducible over Q(t)".into(),
        format!("deg P = {prime} is prime: inertia at infinity is a {prime}-cycle"),
        "a p-cycle and a transposition generate S_p".into(),
    ];
    Ok(SmCoverReport { m, p: prime, poly, branches, transposition_present, notes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn small_covers() {
        for m in 2..=3 {
            let r = sm_cover(m).unwrap();
            assert!(r.passed(), "m = {m}: {:?}", r.branches);
            assert!(is_prime_u64(r.p as u64));
            assert_eq!(r.branches.len(), partitions(m).len() - 1);
        }
    }

    #[test]
    fn m_two_has_one_transposition_branch() {
        let r = sm_cover(2).unwrap();
        // H = x^3, Q = x^2: bound 3, next prime 5
        assert_eq!(r.p, 5);
        assert_eq!(r.branches[0].pattern, vec![2, 1, 1, 1]);
    }
}
