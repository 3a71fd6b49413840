//! List recursion exemplars: structural and accumulative sums, filter, and
//! two list maxima with very different costs.
//!
//! Lists are slices; `split_first` plays the role of the `(x:xs)` pattern.

use crate::costmeter::{Meter, Unmetered};
use crate::{Error, Result};

/// `sumlist [] = 0`, `sumlist (x:xs) = x + sumlist xs`.
pub fn sumlist(xs: &[i64]) -> i64 {
    sumlist_metered(xs, &mut Unmetered)
}

pub fn sumlist_metered<M: Meter>(xs: &[i64], m: &mut M) -> i64 {
    m.tick();
    match xs.split_first() {
        None => 0,
        Some((x, rest)) => x + sumlist_metered(rest, m),
    }
}

/// `sumh [] acc = acc`, `sumh (x:xs) acc = sumh xs (x+acc)`.
pub fn sumh(xs: &[i64], acc: i64) -> i64 {
    sumh_metered(xs, acc, &mut Unmetered)
}

pub fn sumh_metered<M: Meter>(xs: &[i64], acc: i64, m: &mut M) -> i64 {
    m.tick();
    match xs.split_first() {
        None => acc,
        Some((x, rest)) => sumh_metered(rest, x + acc, m),
    }
}

/// `sumlist2 xs = sumh xs 0`. The wrapper itself is not a step.
pub fn sumlist2(xs: &[i64]) -> i64 {
    sumh(xs, 0)
}

pub fn sumlist2_metered<M: Meter>(xs: &[i64], m: &mut M) -> i64 {
    sumh_metered(xs, 0, m)
}

/// Keeps the elements satisfying `p`, in order.
pub fn filter_keep<P: Fn(&i64) -> bool>(p: P, xs: &[i64]) -> Vec<i64> {
    filter_keep_metered(p, xs, &mut Unmetered)
}

pub fn filter_keep_metered<P, M>(p: P, xs: &[i64], m: &mut M) -> Vec<i64>
where
    P: Fn(&i64) -> bool,
    M: Meter,
{
    let mut out = Vec::new();
    filter_into(&p, xs, &mut out, m);
    out
}

// `x : filter p xs` is realized by pushing `x` before recursing, which keeps
// one body entry per clause and the output in order.
fn filter_into<P, M>(p: &P, xs: &[i64], out: &mut Vec<i64>, m: &mut M)
where
    P: Fn(&i64) -> bool,
    M: Meter,
{
    m.tick();
    let Some((x, rest)) = xs.split_first() else {
        return;
    };
    if p(x) {
        out.push(*x);
    }
    filter_into(p, rest, out, m);
}

/// Maximum of a nonempty list, written the naïve way.
///
/// DO NOT "FIX" THIS. The recursive maximum is evaluated in the guard and
/// then evaluated again in the branch that is taken when the guard fails:
///
/// ```text
/// maxn [x] = x
/// maxn (x:xs) | x > maxn xs = x
///             | otherwise   = maxn xs
/// ```
///
/// On a strictly ascending list the guard always fails, so the cost obeys
/// T(n) = 2·T(n−1) + 1 and the call makes exactly 2ⁿ − 1 body entries.
/// The exponential cost is what this function exists to exhibit; compare
/// [`max_fast`].
pub fn max_naive(xs: &[i64]) -> Result<i64> {
    max_naive_metered(xs, &mut Unmetered)
}

pub fn max_naive_metered<M: Meter>(xs: &[i64], m: &mut M) -> Result<i64> {
    if xs.is_empty() {
        return Err(Error::domain("maximum of an empty list"));
    }
    Ok(maxn(xs, m))
}

#[allow(clippy::if_same_then_else)]
fn maxn<M: Meter>(xs: &[i64], m: &mut M) -> i64 {
    m.tick();
    match xs {
        [x] => *x,
        [x, rest @ ..] => {
            if *x > maxn(rest, m) {
                *x
            } else {
                maxn(rest, m)
            }
        }
        [] => unreachable!("callers reject the empty list"),
    }
}

/// Maximum of a nonempty list with the recursive result computed once and
/// handed to a helper: exactly one body entry per element.
pub fn max_fast(xs: &[i64]) -> Result<i64> {
    max_fast_metered(xs, &mut Unmetered)
}

pub fn max_fast_metered<M: Meter>(xs: &[i64], m: &mut M) -> Result<i64> {
    if xs.is_empty() {
        return Err(Error::domain("maximum of an empty list"));
    }
    Ok(maxf(xs, m))
}

fn maxf<M: Meter>(xs: &[i64], m: &mut M) -> i64 {
    m.tick();
    match xs {
        [x] => *x,
        [x, rest @ ..] => larger(*x, maxf(rest, m)),
        [] => unreachable!("callers reject the empty list"),
    }
}

fn larger(x: i64, best_of_rest: i64) -> i64 {
    if x > best_of_rest {
        x
    } else {
        best_of_rest
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::costmeter::count;

    #[test]
    fn sums() {
        for f in [sumlist, sumlist2] {
            assert_eq!(f(&[]), 0);
            assert_eq!(f(&[5]), 5);
            assert_eq!(f(&[1, 2, 3, 4]), 10);
        }
        assert_eq!(sumh(&[], 7), 7);
        assert_eq!(sumh(&[1, 2, 3], 0), 6);
        assert_eq!(sumh(&[4, 5], 10), 19);
    }

    #[test]
    fn filter() {
        let even = |x: &i64| x % 2 == 0;
        assert_eq!(filter_keep(even, &[]), Vec::<i64>::new());
        assert_eq!(filter_keep(even, &[1, 2, 3, 4]), vec![2, 4]);
        assert_eq!(filter_keep(|_| true, &[3, 1, 2]), vec![3, 1, 2]);
    }

    #[test]
    fn maxima() {
        for f in [max_naive, max_fast] {
            assert_eq!(f(&[9]), Ok(9));
            assert_eq!(f(&[3, 1, 2]), Ok(3));
            assert!(matches!(f(&[]), Err(Error::Domain(_))));
        }
        let up: Vec<i64> = (1..=12).collect();
        let (r, s) = count(|m| max_naive_metered(&up, m));
        assert_eq!(r, Ok(12));
        assert_eq!(s.get(), 4095);
        let (r, s) = count(|m| max_fast_metered(&up, m));
        assert_eq!(r, Ok(12));
        assert_eq!(s.get(), 12);
    }

    #[test]
    fn descending_input_is_cheap_for_naive_max() {
        let down: Vec<i64> = (1..=20).rev().collect();
        let (r, s) = count(|m| max_naive_metered(&down, m));
        assert_eq!(r, Ok(20));
        assert_eq!(s.get(), 20);
    }

    #[test]
    fn linear_step_counts() {
        let xs: Vec<i64> = (0..37).collect();
        assert_eq!(count(|m| sumlist_metered(&xs, m)).1.get(), 38);
        assert_eq!(count(|m| sumlist2_metered(&xs, m)).1.get(), 38);
        assert_eq!(count(|m| filter_keep_metered(|x| *x > 3, &xs, m)).1.get(), 38);
    }
}
