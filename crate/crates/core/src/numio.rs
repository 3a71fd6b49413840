//! Numeral literals and CSV.
//!
//! Literals are fully parenthesized constructor terms; whitespace between
//! tokens is ignored:
//!
//! ```text
//! unary    := "Z" | "S(" unary ")"
//! binary   := "Z" | "A(" binary ")" | "B(" binary ")"
//! twoscomp := "Z" | "N" | "A(" twoscomp ")" | "B(" twoscomp ")"
//! cd       := "Z" | "C(" cd ")" | "D(" cd ")"
//! ```
//!
//! Binary and two's-complement literals must be canonical; `A(Z)` (and
//! `B(N)` for two's complement) is rejected with [`Error::NonCanonical`],
//! separately from syntax errors. Printing is the `Display` impl of each
//! type and emits no whitespace.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::binary::BinNat;
use crate::braun::CdIndex;
use crate::twoscomp::{self, TcInt};
use crate::unary::UnaryNat;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumeralKind {
    Unary,
    Binary,
    TwosComp,
    Cd,
}

impl NumeralKind {
    pub const ALL: [NumeralKind; 4] = [
        NumeralKind::Unary,
        NumeralKind::Binary,
        NumeralKind::TwosComp,
        NumeralKind::Cd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NumeralKind::Unary => "unary",
            NumeralKind::Binary => "binary",
            NumeralKind::TwosComp => "twoscomp",
            NumeralKind::Cd => "cd",
        }
    }

    /// Wrapping constructors, then leaves.
    fn alphabet(self) -> (&'static [u8], &'static [u8]) {
        match self {
            NumeralKind::Unary => (b"S", b"Z"),
            NumeralKind::Binary => (b"AB", b"Z"),
            NumeralKind::TwosComp => (b"AB", b"ZN"),
            NumeralKind::Cd => (b"CD", b"Z"),
        }
    }
}

impl fmt::Display for NumeralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumeralKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NumeralKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown numeral kind `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Numeral {
    Unary(UnaryNat),
    Binary(BinNat),
    TwosComp(TcInt),
    Cd(CdIndex),
}

impl Numeral {
    pub fn kind(&self) -> NumeralKind {
        match self {
            Numeral::Unary(_) => NumeralKind::Unary,
            Numeral::Binary(_) => NumeralKind::Binary,
            Numeral::TwosComp(_) => NumeralKind::TwosComp,
            Numeral::Cd(_) => NumeralKind::Cd,
        }
    }

    /// Builds the numeral of `kind` denoting `n`.
    pub fn from_int(kind: NumeralKind, n: i64) -> Result<Numeral> {
        Ok(match kind {
            NumeralKind::Unary => Numeral::Unary(UnaryNat::try_from(n)?),
            NumeralKind::Binary => Numeral::Binary(BinNat::try_from(n)?),
            NumeralKind::TwosComp => Numeral::TwosComp(TcInt::from_i64(n)),
            NumeralKind::Cd => Numeral::Cd(CdIndex::try_from(n)?),
        })
    }

    pub fn to_int(&self) -> Result<i128> {
        Ok(match self {
            Numeral::Unary(x) => x.to_u64().into(),
            Numeral::Binary(x) => x.to_u64()?.into(),
            Numeral::TwosComp(x) => x.to_i64()?.into(),
            Numeral::Cd(x) => x.to_u64()?.into(),
        })
    }
}

impl fmt::Display for Numeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Numeral::Unary(x) => fmt::Display::fmt(x, f),
            Numeral::Binary(x) => fmt::Display::fmt(x, f),
            Numeral::TwosComp(x) => fmt::Display::fmt(x, f),
            Numeral::Cd(x) => fmt::Display::fmt(x, f),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, want: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.syntax(format!(
                "expected `{}`, found `{}`",
                want as char,
                char::from(c)
            ))),
            None => Err(self.syntax(format!("expected `{}`, found end of input", want as char))),
        }
    }
}

fn quoted(set: &[u8]) -> String {
    set.iter()
        .map(|c| format!("`{}`", *c as char))
        .collect::<Vec<_>>()
        .join(" or ")
}

/// The constructor spine of a literal: wrapping constructors from the
/// outside in, each with its byte offset, then the leaf.
struct Spine {
    wraps: Vec<(u8, usize)>,
    leaf: u8,
}

// The grammar is a chain, so it is read with a loop rather than recursion.
fn scan(text: &str, kind: NumeralKind) -> Result<Spine> {
    let (wrappers, leaves) = kind.alphabet();
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut wraps = Vec::new();
    let leaf = loop {
        let Some(c) = lx.peek() else {
            return Err(lx.syntax(format!(
                "expected {}, found end of input",
                quoted(&[wrappers, leaves].concat())
            )));
        };
        if leaves.contains(&c) {
            lx.pos += 1;
            break c;
        }
        if !wrappers.contains(&c) {
            return Err(lx.syntax(format!(
                "expected {}, found `{}`",
                quoted(&[wrappers, leaves].concat()),
                char::from(c)
            )));
        }
        wraps.push((c, lx.pos));
        lx.pos += 1;
        lx.expect(b'(')?;
    };
    for _ in 0..wraps.len() {
        lx.expect(b')')?;
    }
    if lx.peek().is_some() {
        return Err(lx.syntax("trailing input after literal"));
    }
    Ok(Spine { wraps, leaf })
}

fn non_canonical(pos: usize, msg: &str) -> Error {
    Error::NonCanonical {
        pos,
        msg: msg.to_owned(),
    }
}

pub fn parse_unary(text: &str) -> Result<UnaryNat> {
    let spine = scan(text, NumeralKind::Unary)?;
    Ok(UnaryNat::from_u64(spine.wraps.len() as u64))
}

pub fn parse_binary(text: &str) -> Result<BinNat> {
    let spine = scan(text, NumeralKind::Binary)?;
    let mut acc = BinNat::Z;
    for &(c, pos) in spine.wraps.iter().rev() {
        acc = match (c, acc) {
            (b'A', BinNat::Z) => return Err(non_canonical(pos, "A applied to Z")),
            (b'A', x) => BinNat::A(Arc::new(x)),
            (_, x) => BinNat::B(Arc::new(x)),
        };
    }
    Ok(acc)
}

pub fn parse_twoscomp(text: &str) -> Result<TcInt> {
    let spine = scan(text, NumeralKind::TwosComp)?;
    let mut acc = if spine.leaf == b'N' { TcInt::N } else { TcInt::Z };
    for &(c, pos) in spine.wraps.iter().rev() {
        acc = match (c, acc) {
            (b'A', TcInt::Z) => return Err(non_canonical(pos, "A applied to Z")),
            (b'B', TcInt::N) => return Err(non_canonical(pos, "B applied to N")),
            (b'A', x) => TcInt::A(Arc::new(x)),
            (_, x) => TcInt::B(Arc::new(x)),
        };
    }
    Ok(acc)
}

pub fn parse_cd(text: &str) -> Result<CdIndex> {
    let spine = scan(text, NumeralKind::Cd)?;
    Ok(spine.wraps.iter().rev().fold(CdIndex::Z, |acc, &(c, _)| {
        if c == b'C' {
            CdIndex::C(Arc::new(acc))
        } else {
            CdIndex::D(Arc::new(acc))
        }
    }))
}

pub fn parse_numeral(text: &str, kind: NumeralKind) -> Result<Numeral> {
    Ok(match kind {
        NumeralKind::Unary => Numeral::Unary(parse_unary(text)?),
        NumeralKind::Binary => Numeral::Binary(parse_binary(text)?),
        NumeralKind::TwosComp => Numeral::TwosComp(parse_twoscomp(text)?),
        NumeralKind::Cd => Numeral::Cd(parse_cd(text)?),
    })
}

pub fn print_numeral(value: &Numeral) -> String {
    value.to_string()
}

/// Reads a two's-complement bit string such as `...1011`: `...`, the sign
/// digit repeated forever, then the remaining digits, most significant
/// first. Redundant digits next to the sign are absorbed, so `...11`,
/// `...1` and `...111` all read as −1.
pub fn parse_bits(text: &str) -> Result<TcInt> {
    let text = text.trim();
    let Some(body) = text.strip_prefix("...") else {
        return Err(Error::Syntax {
            pos: 0,
            msg: "bit string must start with `...`".to_owned(),
        });
    };
    let mut digits = body.bytes().enumerate();
    let mut acc = match digits.next() {
        Some((_, b'0')) => TcInt::Z,
        Some((_, b'1')) => TcInt::N,
        Some((i, c)) => {
            return Err(Error::Syntax {
                pos: 3 + i,
                msg: format!("expected `0` or `1`, found `{}`", char::from(c)),
            })
        }
        None => {
            return Err(Error::Syntax {
                pos: 3,
                msg: "expected a sign digit after `...`".to_owned(),
            })
        }
    };
    for (i, c) in digits {
        acc = match c {
            b'0' => twoscomp::mk_a(acc),
            b'1' => twoscomp::mk_b(acc),
            _ => {
                return Err(Error::Syntax {
                    pos: 3 + i,
                    msg: format!("expected `0` or `1`, found `{}`", char::from(c)),
                })
            }
        };
    }
    Ok(acc)
}

/// `n,steps` header plus one row per sample, `\n`-terminated.
pub fn csv_emit(rows: &[(u64, u64)]) -> String {
    let mut out = String::from("n,steps\n");
    for (n, steps) in rows {
        out.push_str(&format!("{n},{steps}\n"));
    }
    out
}
