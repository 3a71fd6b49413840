//! Canonical binary naturals.
//!
//! `Z` is zero, `A x` is 2x and `B x` is 2x + 1, with the least significant
//! digit outermost. A value is canonical when no `A` is applied directly to
//! `Z` (no leading zeroes); every natural has exactly one canonical form.
//!
//! Two additions are kept side by side. [`add_v1`] handles the `B`/`B` carry
//! by incrementing a recursive sum:
//!
//! ```text
//! add (B x) (B y) = A (add1 (add x y))
//! ```
//!
//! Its linear running time needs an amortized argument over all the `add1`
//! calls. [`add_v2`] instead recurses into the mutually defined [`addp`]
//! (x + y + 1), and every recursive application shrinks its arguments:
//!
//! ```text
//! add (B x) (B y) = A (addp x y)
//! ```
//!
//! All results are assembled through [`mk_a`] / [`mk_b`], so canonical
//! inputs always give canonical outputs.

use std::fmt;
use std::sync::Arc;

use crate::costmeter::{Meter, Unmetered};
use crate::{Error, Result};

/// Step bound for both additions: clause entries ≤ K·(max digit count + 1).
///
/// Measured over every pair of operands in 0..=512, the largest ratio of
/// steps to (max digit count + 1) is 1.90 for `add_v1` and 1.50 for
/// `add_v2`. Rounded up: 2.
pub const ADD_COST_CONSTANT: u64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BinNat {
    Z,
    A(Arc<BinNat>),
    B(Arc<BinNat>),
}

use BinNat::{A, B, Z};

/// 2n, normalizing 2·0 to `Z`.
pub fn mk_a(x: BinNat) -> BinNat {
    match x {
        Z => Z,
        x => A(Arc::new(x)),
    }
}

/// 2n + 1.
pub fn mk_b(x: BinNat) -> BinNat {
    B(Arc::new(x))
}

impl BinNat {
    pub fn from_u64(n: u64) -> BinNat {
        match n {
            0 => Z,
            n if n % 2 == 0 => mk_a(BinNat::from_u64(n / 2)),
            n => mk_b(BinNat::from_u64(n / 2)),
        }
    }

    /// Interprets any value, canonical or not. Fails only on overflow.
    pub fn denote(&self) -> Result<u64> {
        match self {
            Z => Ok(0),
            A(x) => x.denote()?.checked_mul(2).ok_or(Error::Overflow),
            B(x) => x
                .denote()?
                .checked_mul(2)
                .and_then(|v| v.checked_add(1))
                .ok_or(Error::Overflow),
        }
    }

    pub fn to_u64(&self) -> Result<u64> {
        if !self.is_canonical() {
            return Err(Error::Validity(format!("{self} applies A to Z")));
        }
        self.denote()
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            Z => true,
            A(x) => !matches!(**x, Z) && x.is_canonical(),
            B(x) => x.is_canonical(),
        }
    }

    /// Number of `A`/`B` constructors.
    pub fn size(&self) -> u64 {
        match self {
            Z => 0,
            A(x) | B(x) => 1 + x.size(),
        }
    }

    /// The numeral made of `digits` `B`s, i.e. 2^digits − 1.
    pub fn all_ones(digits: u64) -> BinNat {
        (0..digits).fold(Z, |acc, _| mk_b(acc))
    }
}

impl TryFrom<i64> for BinNat {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        u64::try_from(n)
            .map(BinNat::from_u64)
            .map_err(|_| Error::domain(format!("{n} is negative, not a natural")))
    }
}

impl fmt::Display for BinNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Z => f.write_str("Z"),
            A(x) => write!(f, "A({x})"),
            B(x) => write!(f, "B({x})"),
        }
    }
}

pub fn b_from_int(n: i64) -> Result<BinNat> {
    BinNat::try_from(n)
}

pub fn b_to_int(x: &BinNat) -> Result<u64> {
    x.to_u64()
}

pub fn is_canonical(x: &BinNat) -> bool {
    x.is_canonical()
}

pub fn b_size(x: &BinNat) -> u64 {
    x.size()
}

/// `add1 Z = B Z`, `add1 (A x) = B x`, `add1 (B x) = A (add1 x)`.
pub fn add1(x: &BinNat) -> BinNat {
    add1_metered(x, &mut Unmetered)
}

pub fn add1_metered<M: Meter>(x: &BinNat, m: &mut M) -> BinNat {
    m.tick();
    match x {
        Z => mk_b(Z),
        A(x) => mk_b((**x).clone()),
        B(x) => mk_a(add1_metered(x, m)),
    }
}

pub fn add_v1(x: &BinNat, y: &BinNat) -> BinNat {
    add_v1_metered(x, y, &mut Unmetered)
}

/// Steps include the entries of every inner `add1`.
pub fn add_v1_metered<M: Meter>(x: &BinNat, y: &BinNat, m: &mut M) -> BinNat {
    m.tick();
    match (x, y) {
        (x, Z) => x.clone(),
        (Z, y) => y.clone(),
        (A(x), A(y)) => mk_a(add_v1_metered(x, y, m)),
        (A(x), B(y)) | (B(x), A(y)) => mk_b(add_v1_metered(x, y, m)),
        (B(x), B(y)) => {
            let sum = add_v1_metered(x, y, m);
            mk_a(add1_metered(&sum, m))
        }
    }
}

pub fn add_v2(x: &BinNat, y: &BinNat) -> BinNat {
    add_v2_metered(x, y, &mut Unmetered)
}

/// Steps include the entries of `addp` and of the `add1` it bottoms out in.
pub fn add_v2_metered<M: Meter>(x: &BinNat, y: &BinNat, m: &mut M) -> BinNat {
    m.tick();
    match (x, y) {
        (x, Z) => x.clone(),
        (Z, y) => y.clone(),
        (A(x), A(y)) => mk_a(add_v2_metered(x, y, m)),
        (A(x), B(y)) | (B(x), A(y)) => mk_b(add_v2_metered(x, y, m)),
        (B(x), B(y)) => mk_a(addp_metered(x, y, m)),
    }
}

/// x + y + 1.
pub fn addp(x: &BinNat, y: &BinNat) -> BinNat {
    addp_metered(x, y, &mut Unmetered)
}

pub fn addp_metered<M: Meter>(x: &BinNat, y: &BinNat, m: &mut M) -> BinNat {
    m.tick();
    match (x, y) {
        (x, Z) => add1_metered(x, m),
        (Z, y) => add1_metered(y, m),
        (A(x), A(y)) => mk_b(add_v2_metered(x, y, m)),
        (A(x), B(y)) | (B(x), A(y)) => mk_a(addp_metered(x, y, m)),
        (B(x), B(y)) => mk_b(addp_metered(x, y, m)),
    }
}

/// Structural on the second argument:
///
/// ```text
/// mult x Z     = Z
/// mult x (A y) = A (mult x y)
/// mult x (B y) = add x (A (mult x y))
/// ```
pub fn mult(x: &BinNat, y: &BinNat) -> BinNat {
    mult_metered(x, y, &mut Unmetered)
}

pub fn mult_metered<M: Meter>(x: &BinNat, y: &BinNat, m: &mut M) -> BinNat {
    m.tick();
    match y {
        Z => Z,
        A(y) => mk_a(mult_metered(x, y, m)),
        B(y) => {
            let doubled = mk_a(mult_metered(x, y, m));
            add_v2_metered(x, &doubled, m)
        }
    }
}
