//! Two's-complement integers: the binary grammar plus a nullary `N` for −1.
//!
//! `A` and `B` keep their meanings (2x and 2x + 1). Canonical values never
//! apply `A` to `Z` or `B` to `N`; the nonnegative canonical values are
//! exactly the canonical [`BinNat`]s. Reading the constructors from the
//! inside out, with `Z` an infinite run of 0 bits and `N` an infinite run
//! of 1 bits, gives the familiar two's-complement bit string
//! (see [`render_bits`]).
//!
//! The clauses involving `N`:
//!
//! ```text
//! add1 N = Z              sub1 Z = N
//!                         sub1 N = A N
//! add x N = sub1 x        addp x N = x
//! add N y = sub1 y        addp N y = y
//! ```
//!
//! Everything else is the natural-number clause set, built with [`mk_a`] and
//! [`mk_b`] so that sums landing on 0 or −1 collapse to `Z` or `N`.

use std::fmt;
use std::sync::Arc;

use crate::binary::BinNat;
use crate::costmeter::{Meter, Unmetered};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TcInt {
    Z,
    N,
    A(Arc<TcInt>),
    B(Arc<TcInt>),
}

use TcInt::{A, B, N, Z};

/// 2x; `A Z` collapses to `Z`.
pub fn mk_a(x: TcInt) -> TcInt {
    match x {
        Z => Z,
        x => A(Arc::new(x)),
    }
}

/// 2x + 1; `B N` collapses to `N`.
pub fn mk_b(x: TcInt) -> TcInt {
    match x {
        N => N,
        x => B(Arc::new(x)),
    }
}

impl TcInt {
    pub fn from_i64(n: i64) -> TcInt {
        match n {
            0 => Z,
            -1 => N,
            // Arithmetic shift is floor division by two for both signs.
            n if n & 1 == 0 => mk_a(TcInt::from_i64(n >> 1)),
            n => mk_b(TcInt::from_i64(n >> 1)),
        }
    }

    /// Interprets any value, canonical or not. Fails only on overflow.
    pub fn denote(&self) -> Result<i64> {
        let double = |x: &TcInt, bit: i64| {
            x.denote()?
                .checked_mul(2)
                .and_then(|v| v.checked_add(bit))
                .ok_or(Error::Overflow)
        };
        match self {
            Z => Ok(0),
            N => Ok(-1),
            A(x) => double(x, 0),
            B(x) => double(x, 1),
        }
    }

    pub fn to_i64(&self) -> Result<i64> {
        if !self.is_canonical() {
            return Err(Error::Validity(format!(
                "{self} applies A to Z or B to N"
            )));
        }
        self.denote()
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            Z | N => true,
            A(x) => !matches!(**x, Z) && x.is_canonical(),
            B(x) => !matches!(**x, N) && x.is_canonical(),
        }
    }

    pub fn is_negative(&self) -> bool {
        let mut cur = self;
        loop {
            match cur {
                Z => return false,
                N => return true,
                A(x) | B(x) => cur = x,
            }
        }
    }

    /// `digits` `B`s over `Z`: 2^digits − 1.
    pub fn all_ones(digits: u64) -> TcInt {
        (0..digits).fold(Z, |acc, _| mk_b(acc))
    }
}

impl From<&BinNat> for TcInt {
    fn from(x: &BinNat) -> Self {
        match x {
            BinNat::Z => Z,
            BinNat::A(x) => A(Arc::new(TcInt::from(&**x))),
            BinNat::B(x) => B(Arc::new(TcInt::from(&**x))),
        }
    }
}

impl From<i64> for TcInt {
    fn from(n: i64) -> Self {
        TcInt::from_i64(n)
    }
}

impl fmt::Display for TcInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Z => f.write_str("Z"),
            N => f.write_str("N"),
            A(x) => write!(f, "A({x})"),
            B(x) => write!(f, "B({x})"),
        }
    }
}

pub fn i_from_int(n: i64) -> TcInt {
    TcInt::from_i64(n)
}

pub fn i_to_int(x: &TcInt) -> Result<i64> {
    x.to_i64()
}

pub fn is_canonical_tc(x: &TcInt) -> bool {
    x.is_canonical()
}

/// Bitwise NOT: −x − 1.
pub fn complement(x: &TcInt) -> TcInt {
    match x {
        Z => N,
        N => Z,
        A(x) => B(Arc::new(complement(x))),
        B(x) => A(Arc::new(complement(x))),
    }
}

pub fn add1(x: &TcInt) -> TcInt {
    add1_metered(x, &mut Unmetered)
}

pub fn add1_metered<M: Meter>(x: &TcInt, m: &mut M) -> TcInt {
    m.tick();
    match x {
        Z => mk_b(Z),
        N => Z,
        A(x) => mk_b((**x).clone()),
        B(x) => mk_a(add1_metered(x, m)),
    }
}

pub fn sub1(x: &TcInt) -> TcInt {
    sub1_metered(x, &mut Unmetered)
}

pub fn sub1_metered<M: Meter>(x: &TcInt, m: &mut M) -> TcInt {
    m.tick();
    match x {
        Z => N,
        N => mk_a(N),
        A(x) => mk_b(sub1_metered(x, m)),
        B(x) => mk_a((**x).clone()),
    }
}

pub fn add(x: &TcInt, y: &TcInt) -> TcInt {
    add_metered(x, y, &mut Unmetered)
}

pub fn add_metered<M: Meter>(x: &TcInt, y: &TcInt, m: &mut M) -> TcInt {
    m.tick();
    match (x, y) {
        (x, Z) => x.clone(),
        (Z, y) => y.clone(),
        (x, N) => sub1_metered(x, m),
        (N, y) => sub1_metered(y, m),
        (A(x), A(y)) => mk_a(add_metered(x, y, m)),
        (A(x), B(y)) | (B(x), A(y)) => mk_b(add_metered(x, y, m)),
        (B(x), B(y)) => mk_a(addp_metered(x, y, m)),
    }
}

/// x + y + 1.
pub fn addp(x: &TcInt, y: &TcInt) -> TcInt {
    addp_metered(x, y, &mut Unmetered)
}

pub fn addp_metered<M: Meter>(x: &TcInt, y: &TcInt, m: &mut M) -> TcInt {
    m.tick();
    match (x, y) {
        (x, Z) => add1_metered(x, m),
        (Z, y) => add1_metered(y, m),
        (x, N) => x.clone(),
        (N, y) => y.clone(),
        (A(x), A(y)) => mk_b(add_metered(x, y, m)),
        (A(x), B(y)) | (B(x), A(y)) => mk_a(addp_metered(x, y, m)),
        (B(x), B(y)) => mk_b(addp_metered(x, y, m)),
    }
}

/// Complement then increment.
pub fn neg(x: &TcInt) -> TcInt {
    add1(&complement(x))
}

pub fn sub(x: &TcInt, y: &TcInt) -> TcInt {
    add(x, &neg(y))
}

/// Two's-complement bit string, most significant bit on the left.
///
/// `Z` contributes a leading `...0` and `N` a leading `...1`, followed by one
/// digit per constructor (`A` is 0, `B` is 1). A bare `N` renders as `...11`.
pub fn render_bits(x: &TcInt) -> String {
    let mut digits = Vec::new();
    let mut cur = x;
    let tail = loop {
        match cur {
            Z => break '0',
            N => break '1',
            A(x) => {
                digits.push('0');
                cur = x;
            }
            B(x) => {
                digits.push('1');
                cur = x;
            }
        }
    };
    if tail == '1' && digits.is_empty() {
        return "...11".to_owned();
    }
    let mut out = String::with_capacity(4 + digits.len());
    out.push_str("...");
    out.push(tail);
    out.extend(digits.iter().rev());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64) -> TcInt {
        TcInt::from_i64(n)
    }

    fn wa(x: TcInt) -> TcInt {
        A(Arc::new(x))
    }

    fn wb(x: TcInt) -> TcInt {
        B(Arc::new(x))
    }

    #[test]
    fn listing_values() {
        assert_eq!(t(-1), N);
        assert_eq!(t(-2), wa(N));
        assert_eq!(t(-3), wb(wa(N)));
        assert_eq!(t(-4), wa(wa(N)));
        assert_eq!(t(-5), wb(wb(wa(N))));
        assert_eq!(t(0), Z);
        assert_eq!(t(4), wa(wa(wb(Z))));
        let v = t(-100);
        assert!(v.is_canonical());
        assert_eq!(v.to_i64(), Ok(-100));
        for n in [-5, -4, -3, -2, -1, 0, 4] {
            assert_eq!(i_to_int(&t(n)), Ok(n));
        }
        assert_eq!(t(i64::MIN).to_i64(), Ok(i64::MIN));
        assert_eq!(t(i64::MAX).to_i64(), Ok(i64::MAX));
    }

    #[test]
    fn canonicality() {
        assert!(N.is_canonical());
        assert!(!wb(N).is_canonical());
        assert!(wa(N).is_canonical());
        assert!(!wa(Z).is_canonical());
        assert!(matches!(wb(N).to_i64(), Err(Error::Validity(_))));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&Z), N);
        assert_eq!(complement(&t(1)), wa(N));
        for n in -40..40 {
            assert_eq!(complement(&complement(&t(n))), t(n));
            assert_eq!(complement(&t(n)), t(-n - 1));
        }
    }

    #[test]
    fn unit_steps() {
        assert_eq!(add1(&N), Z);
        assert_eq!(sub1(&Z), N);
        assert_eq!(add1(&t(7)), t(8));
        assert_eq!(add1(&t(-2)), N);
        assert_eq!(sub1(&t(1)), Z);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(add(&t(19), &Z), t(19));
        assert_eq!(add(&N, &N), wa(N));
        assert_eq!(add(&t(-5), &t(3)), t(-2));
        assert_eq!(neg(&Z), Z);
        assert_eq!(neg(&t(5)), t(-5));
        assert_eq!(sub(&t(3), &t(10)), t(-7));
        assert_eq!(addp(&N, &N), N);
    }

    #[test]
    fn bits() {
        let table = [
            (3, "...011"),
            (2, "...010"),
            (1, "...01"),
            (0, "...0"),
            (-1, "...11"),
            (-2, "...10"),
            (-3, "...101"),
            (-4, "...100"),
            (-5, "...1011"),
        ];
        for (n, s) in table {
            assert_eq!(render_bits(&t(n)), s, "{n}");
        }
    }

    #[test]
    fn embedding_keeps_shape() {
        for n in 0..64u64 {
            assert_eq!(TcInt::from(&BinNat::from_u64(n)), t(n as i64));
        }
    }
}
