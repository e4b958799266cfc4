//! Independent sets on a path that avoid a set of forbidden path edges.
//!
//! The path is `v_0, ..., v_{s+1}` with edges `e_i = v_i v_{i+1}` for
//! `0 <= i <= s`. Vertices are given by index, edges by the index of their
//! lower endpoint.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndependentSetError {
    #[error("need s + 1 >= b, got s = {s}, b = {b}")]
    BadRange { s: usize, b: usize },
}

/// `⌈(s − b)/2⌉`, which is 0 when `b = s + 1`.
pub fn independent_set_bound(s: usize, b: usize) -> Result<usize, IndependentSetError> {
    if b > s + 1 {
        return Err(IndependentSetError::BadRange { s, b });
    }
    Ok((s + 1 - b) / 2)
}

/// The structure forced on a tight configuration with `s − b` odd: every
/// interior vertex is in `I`, touches a forbidden edge, or sits between two
/// members of `I`.
pub fn tight_condition_holds(s: usize, independent: &[usize], forbidden: &[usize]) -> bool {
    let in_i = |v: usize| independent.contains(&v);
    let in_b = |e: usize| forbidden.contains(&e);
    (1..=s).all(|i| in_i(i) || in_b(i) || in_b(i - 1) || (in_i(i - 1) && in_i(i + 1)))
}
