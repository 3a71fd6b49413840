//! Peano naturals.
//!
//! Both additions recurse on their second argument, exactly as the defining
//! clauses do. `plus` is structurally recursive:
//!
//! ```text
//! plus x Zero     = x
//! plus x (Succ y) = Succ (plus x y)
//! ```
//!
//! `add` threads its first argument as an accumulator:
//!
//! ```text
//! add x Zero     = x
//! add x (Succ y) = add (Succ x) y
//! ```
//!
//! Recursion depth is the denotation of the second argument. Keep operands
//! small; these are teaching objects, not a bignum.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::costmeter::{Meter, Unmetered};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UnaryNat {
    Zero,
    Succ(Arc<UnaryNat>),
}

use UnaryNat::{Succ, Zero};

impl UnaryNat {
    pub fn succ(self) -> UnaryNat {
        Succ(Arc::new(self))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Zero)
    }

    /// Builds the value with exactly `n` successor layers.
    pub fn from_u64(n: u64) -> UnaryNat {
        (0..n).fold(Zero, |acc, _| acc.succ())
    }

    /// Counts successor layers.
    pub fn to_u64(&self) -> u64 {
        let mut n = 0;
        let mut cur = self;
        while let Succ(pred) = cur {
            n += 1;
            cur = pred;
        }
        n
    }
}

fn shared_zero() -> Arc<UnaryNat> {
    static ZERO: OnceLock<Arc<UnaryNat>> = OnceLock::new();
    Arc::clone(ZERO.get_or_init(|| Arc::new(Zero)))
}

// Long successor chains would otherwise be dropped recursively.
impl Drop for UnaryNat {
    fn drop(&mut self) {
        let Succ(pred) = self else {
            return;
        };
        let mut next = std::mem::replace(pred, shared_zero());
        while let Ok(mut inner) = Arc::try_unwrap(next) {
            match &mut inner {
                Succ(pred) => next = std::mem::replace(pred, shared_zero()),
                Zero => return,
            }
        }
    }
}

impl TryFrom<i64> for UnaryNat {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        u64::try_from(n)
            .map(UnaryNat::from_u64)
            .map_err(|_| Error::domain(format!("{n} is negative, not a natural")))
    }
}

impl From<u64> for UnaryNat {
    fn from(n: u64) -> Self {
        UnaryNat::from_u64(n)
    }
}

impl fmt::Display for UnaryNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let depth = self.to_u64();
        for _ in 0..depth {
            f.write_str("S(")?;
        }
        f.write_str("Z")?;
        for _ in 0..depth {
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn u_from_int(n: i64) -> Result<UnaryNat> {
    UnaryNat::try_from(n)
}

pub fn u_to_int(x: &UnaryNat) -> u64 {
    x.to_u64()
}

pub fn plus(x: &UnaryNat, y: &UnaryNat) -> UnaryNat {
    plus_metered(x, y, &mut Unmetered)
}

pub fn plus_metered<M: Meter>(x: &UnaryNat, y: &UnaryNat, m: &mut M) -> UnaryNat {
    m.tick();
    match y {
        Zero => x.clone(),
        Succ(y) => plus_metered(x, y, m).succ(),
    }
}

pub fn add(x: &UnaryNat, y: &UnaryNat) -> UnaryNat {
    add_metered(x.clone(), y, &mut Unmetered)
}

pub fn add_metered<M: Meter>(x: UnaryNat, y: &UnaryNat, m: &mut M) -> UnaryNat {
    m.tick();
    match y {
        Zero => x,
        Succ(y) => add_metered(x.succ(), y, m),
    }
}

/// `mult x Zero = Zero`, `mult x (Succ y) = plus x (mult x y)`.
pub fn mult(x: &UnaryNat, y: &UnaryNat) -> UnaryNat {
    mult_metered(x, y, &mut Unmetered)
}

pub fn mult_metered<M: Meter>(x: &UnaryNat, y: &UnaryNat, m: &mut M) -> UnaryNat {
    m.tick();
    match y {
        Zero => Zero,
        Succ(y) => {
            let rest = mult_metered(x, y, m);
            plus_metered(x, &rest, m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::costmeter::StepCount;

    fn n(k: u64) -> UnaryNat {
        UnaryNat::from_u64(k)
    }

    #[test]
    fn conversions() {
        assert_eq!(u_from_int(0).unwrap(), Zero);
        assert_eq!(u_from_int(3).unwrap(), Zero.succ().succ().succ());
        assert_eq!(u_from_int(10).unwrap().to_u64(), 10);
        assert_eq!(u_to_int(&Zero), 0);
        assert_eq!(u_to_int(&Zero.succ()), 1);
        assert_eq!(u_to_int(&n(97)), 97);
        assert!(matches!(u_from_int(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn plus_two_is_two_successors() {
        for k in 0..20 {
            let x = n(k);
            assert_eq!(plus(&x, &Zero.succ().succ()), x.clone().succ().succ());
        }
        assert_eq!(plus(&Zero, &Zero), Zero);
        assert_eq!(plus(&n(4), &n(5)), n(9));
    }

    #[test]
    fn add_examples() {
        for k in 0..=100 {
            assert_eq!(add(&Zero, &n(k)), n(k));
        }
        assert_eq!(add(&n(12), &Zero), n(12));
        assert_eq!(add(&n(7), &n(8)), n(15));
    }

    #[test]
    fn mult_examples() {
        assert_eq!(mult(&n(9), &Zero), Zero);
        assert_eq!(mult(&n(1), &n(13)), n(13));
        assert_eq!(mult(&n(6), &n(7)), n(42));
    }

    #[test]
    fn step_counts_follow_second_argument() {
        for (a, b) in [(0, 0), (3, 0), (0, 9), (5, 17)] {
            let mut s = StepCount::default();
            plus_metered(&n(a), &n(b), &mut s);
            assert_eq!(s.get(), b + 1);
            let mut s = StepCount::default();
            add_metered(n(a), &n(b), &mut s);
            assert_eq!(s.get(), b + 1);
        }
    }

    #[test]
    fn display() {
        assert_eq!(Zero.to_string(), "Z");
        assert_eq!(n(2).to_string(), "S(S(Z))");
    }

    #[test]
    fn long_chain_drops_without_overflow() {
        let big = n(1_000_000);
        assert_eq!(big.to_u64(), 1_000_000);
        drop(big);
    }
}
