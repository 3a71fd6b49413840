//! Step counting.
//!
//! A step is one entry into a function body, base clauses included. Every
//! instrumented operation in this crate is generic over [`Meter`] and calls
//! [`Meter::tick`] first thing in each body; the plain entry points use
//! [`Unmetered`], which compiles to nothing.
//!
//! On top of that, [`measured`] dispatches by [`OpId`] so that callers (the
//! CLI, the property suites) can name operations as strings, and
//! [`check_bound`] runs an operation over a size schedule of fixed
//! worst-case inputs and checks the counts against a bound.

use std::fmt;
use std::str::FromStr;

use crate::binary::{self, BinNat};
use crate::braun::BraunSeq;
use crate::listlab;
use crate::twoscomp::{self, TcInt};
use crate::unary::{self, UnaryNat};
use crate::{Error, Result};

pub trait Meter {
    fn tick(&mut self);
}

/// The no-op meter behind every plain operation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unmetered;

impl Meter for Unmetered {
    #[inline(always)]
    fn tick(&mut self) {}
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepCount(u64);

impl StepCount {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl Meter for StepCount {
    #[inline]
    fn tick(&mut self) {
        self.0 += 1;
    }
}

impl fmt::Display for StepCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Runs `f` against a fresh counter and returns its result with the tally.
pub fn count<R>(f: impl FnOnce(&mut StepCount) -> R) -> (R, StepCount) {
    let mut steps = StepCount::default();
    let r = f(&mut steps);
    (r, steps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpId {
    UPlus,
    UAdd,
    Sumlist,
    Sumlist2,
    FilterKeep,
    MaxNaive,
    MaxFast,
    BAdd1,
    BAddV1,
    BAddV2,
    BMult,
    IAdd,
    BsAccess,
    BsCons,
    BsRest,
}

impl OpId {
    pub const ALL: [OpId; 15] = [
        OpId::UPlus,
        OpId::UAdd,
        OpId::Sumlist,
        OpId::Sumlist2,
        OpId::FilterKeep,
        OpId::MaxNaive,
        OpId::MaxFast,
        OpId::BAdd1,
        OpId::BAddV1,
        OpId::BAddV2,
        OpId::BMult,
        OpId::IAdd,
        OpId::BsAccess,
        OpId::BsCons,
        OpId::BsRest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OpId::UPlus => "u_plus",
            OpId::UAdd => "u_add",
            OpId::Sumlist => "sumlist",
            OpId::Sumlist2 => "sumlist2",
            OpId::FilterKeep => "filter_keep",
            OpId::MaxNaive => "max_naive",
            OpId::MaxFast => "max_fast",
            OpId::BAdd1 => "b_add1",
            OpId::BAddV1 => "b_add_v1",
            OpId::BAddV2 => "b_add_v2",
            OpId::BMult => "b_mult",
            OpId::IAdd => "i_add",
            OpId::BsAccess => "bs_access",
            OpId::BsCons => "bs_cons",
            OpId::BsRest => "bs_rest",
        }
    }
}

impl fmt::Display for OpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OpId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OpId::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown operation `{s}`")))
    }
}

/// Arguments for one [`measured`] call. The variant must match the operation.
#[derive(Debug, Clone)]
pub enum OpInput {
    Unary(UnaryNat, UnaryNat),
    List(Vec<i64>),
    Bin(BinNat),
    BinPair(BinNat, BinNat),
    TcPair(TcInt, TcInt),
    Access(BraunSeq<i64>, u64),
    Cons(i64, BraunSeq<i64>),
    Seq(BraunSeq<i64>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum OpOutput {
    Unary(UnaryNat),
    Int(i64),
    List(Vec<i64>),
    Bin(BinNat),
    Tc(TcInt),
    Seq(BraunSeq<i64>),
}

fn mismatch(op: OpId) -> Error {
    Error::usage(format!("input does not match the arguments of `{op}`"))
}

fn even(x: &i64) -> bool {
    x % 2 == 0
}

fn run<M: crate::Meter>(op: OpId, input: &OpInput, m: &mut M) -> Result<OpOutput> {
    use OpInput as I;
    Ok(match (op, input) {
        (OpId::UPlus, I::Unary(x, y)) => OpOutput::Unary(unary::plus_metered(x, y, m)),
        (OpId::UAdd, I::Unary(x, y)) => OpOutput::Unary(unary::add_metered(x.clone(), y, m)),
        (OpId::Sumlist, I::List(xs)) => OpOutput::Int(listlab::sumlist_metered(xs, m)),
        (OpId::Sumlist2, I::List(xs)) => OpOutput::Int(listlab::sumlist2_metered(xs, m)),
        (OpId::FilterKeep, I::List(xs)) => {
            OpOutput::List(listlab::filter_keep_metered(even, xs, m))
        }
        (OpId::MaxNaive, I::List(xs)) => OpOutput::Int(listlab::max_naive_metered(xs, m)?),
        (OpId::MaxFast, I::List(xs)) => OpOutput::Int(listlab::max_fast_metered(xs, m)?),
        (OpId::BAdd1, I::Bin(x)) => OpOutput::Bin(binary::add1_metered(x, m)),
        (OpId::BAddV1, I::BinPair(x, y)) => OpOutput::Bin(binary::add_v1_metered(x, y, m)),
        (OpId::BAddV2, I::BinPair(x, y)) => OpOutput::Bin(binary::add_v2_metered(x, y, m)),
        (OpId::BMult, I::BinPair(x, y)) => OpOutput::Bin(binary::mult_metered(x, y, m)),
        (OpId::IAdd, I::TcPair(x, y)) => OpOutput::Tc(twoscomp::add_metered(x, y, m)),
        (OpId::BsAccess, I::Access(s, i)) => OpOutput::Int(*s.access_metered(*i, m)?),
        (OpId::BsCons, I::Cons(v, s)) => OpOutput::Seq(s.cons_metered(*v, m)),
        (OpId::BsRest, I::Seq(s)) => OpOutput::Seq(s.rest_metered(m)?),
        _ => return Err(mismatch(op)),
    })
}

/// Runs `op` on `input`, counting clause entries.
pub fn measured(op: OpId, input: &OpInput) -> Result<(OpOutput, StepCount)> {
    let mut steps = StepCount::default();
    let out = run(op, input, &mut steps)?;
    Ok((out, steps))
}

/// Runs `op` on `input` through the plain, uninstrumented path.
pub fn unmetered(op: OpId, input: &OpInput) -> Result<OpOutput> {
    run(op, input, &mut Unmetered)
}

/// The fixed worst-case input of size `n` for `op`.
///
/// * unary additions: both operands `n`;
/// * list operations: the ascending list `1..=n`;
/// * binary/two's-complement additions and products: all-`B` numerals of
///   `n` digits (maximal carry chains);
/// * `bs_access`: the last index of a length `n + 1` sequence, so the index is `n`;
/// * `bs_cons`/`bs_rest`: a sequence of length `n`.
pub fn worst_case_input(op: OpId, n: u64) -> Result<OpInput> {
    let ascending = || (1..=n as i64).collect::<Vec<_>>();
    let seq = |len: u64| BraunSeq::from_list((0..len as i64).collect::<Vec<_>>());
    Ok(match op {
        OpId::UPlus | OpId::UAdd => OpInput::Unary(UnaryNat::from_u64(n), UnaryNat::from_u64(n)),
        OpId::Sumlist | OpId::Sumlist2 | OpId::FilterKeep => OpInput::List(ascending()),
        OpId::MaxNaive | OpId::MaxFast => {
            if n == 0 {
                return Err(Error::domain("maximum of an empty list"));
            }
            if op == OpId::MaxNaive && n > 30 {
                return Err(Error::domain(format!(
                    "max_naive takes 2^{n} - 1 steps; sizes above 30 are refused"
                )));
            }
            OpInput::List(ascending())
        }
        OpId::BAdd1 => OpInput::Bin(BinNat::all_ones(n)),
        OpId::BAddV1 | OpId::BAddV2 | OpId::BMult => {
            OpInput::BinPair(BinNat::all_ones(n), BinNat::all_ones(n))
        }
        OpId::IAdd => OpInput::TcPair(TcInt::all_ones(n), TcInt::all_ones(n)),
        OpId::BsAccess => OpInput::Access(seq(n + 1), n),
        OpId::BsCons => OpInput::Cons(-1, seq(n)),
        OpId::BsRest => {
            if n == 0 {
                return Err(Error::domain("rest of an empty sequence"));
            }
            OpInput::Seq(seq(n))
        }
    })
}

/// Closed forms for exact checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `slope·n + offset`
    Affine { slope: u64, offset: u64 },
    /// `2^n − 1`
    Pow2MinusOne,
}

impl ClosedForm {
    pub fn eval(self, n: u64) -> u64 {
        match self {
            ClosedForm::Affine { slope, offset } => slope * n + offset,
            ClosedForm::Pow2MinusOne => (1u64 << n) - 1,
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Affine { slope, offset } => write!(f, "{slope}n+{offset}"),
            ClosedForm::Pow2MinusOne => f.write_str("2^n-1"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundForm {
    /// steps ≤ K·n + K
    Linear,
    /// steps ≤ K·log₂ n + K
    Logarithmic,
    /// steps ≤ K·2ⁿ
    Exponential,
    /// steps = f(n)
    Exact(ClosedForm),
}

impl BoundForm {
    fn scale(self, n: u64) -> f64 {
        match self {
            BoundForm::Linear => n as f64 + 1.0,
            BoundForm::Logarithmic => (n.max(1) as f64).log2() + 1.0,
            BoundForm::Exponential => (n as f64).exp2(),
            BoundForm::Exact(form) => form.eval(n) as f64,
        }
    }
}

impl fmt::Display for BoundForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundForm::Linear => f.write_str("linear"),
            BoundForm::Logarithmic => f.write_str("logarithmic"),
            BoundForm::Exponential => f.write_str("exponential"),
            BoundForm::Exact(form) => write!(f, "exact {form}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRequest {
    pub op: OpId,
    pub sizes: Vec<u64>,
    pub form: BoundForm,
    /// Ignored for exact forms.
    pub constant: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostReport {
    pub op: OpId,
    pub samples: Vec<(u64, StepCount)>,
    pub form: BoundForm,
    pub pass: bool,
    /// Largest steps / f(n) over the samples (f without the constant).
    pub worst_ratio: f64,
}

impl CostReport {
    pub fn rows(&self) -> Vec<(u64, u64)> {
        self.samples.iter().map(|&(n, s)| (n, s.get())).collect()
    }
}

/// Steps taken by `op` on its worst-case input of each size.
pub fn sample(op: OpId, sizes: &[u64]) -> Result<Vec<(u64, StepCount)>> {
    sizes
        .iter()
        .map(|&n| {
            let input = worst_case_input(op, n)?;
            Ok((n, measured(op, &input)?.1))
        })
        .collect()
}

pub fn check_bound(req: &BoundRequest) -> Result<CostReport> {
    if req.sizes.is_empty() {
        return Err(Error::usage("empty size schedule"));
    }
    if req.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::usage("size schedule must be strictly increasing"));
    }
    let samples = sample(req.op, &req.sizes)?;
    let k = req.constant as f64;
    let mut pass = true;
    let mut worst_ratio = 0.0f64;
    for &(n, steps) in &samples {
        let steps = steps.get();
        let scale = req.form.scale(n);
        worst_ratio = worst_ratio.max(steps as f64 / scale);
        let ok = match req.form {
            BoundForm::Exact(form) => steps == form.eval(n),
            _ => steps as f64 <= k * scale,
        };
        pass &= ok;
    }
    Ok(CostReport {
        op: req.op,
        samples,
        form: req.form,
        pass,
        worst_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn steps(op: OpId, n: u64) -> u64 {
        measured(op, &worst_case_input(op, n).unwrap()).unwrap().1.get()
    }

    #[test]
    fn op_names_roundtrip() {
        for op in OpId::ALL {
            assert_eq!(op.name().parse::<OpId>().unwrap(), op);
        }
        assert!(matches!("b_sub".parse::<OpId>(), Err(Error::Usage(_))));
    }

    #[test]
    fn documented_examples() {
        let xs: Vec<i64> = (1..=10).collect();
        let (out, s) = measured(OpId::Sumlist, &OpInput::List(xs)).unwrap();
        assert_eq!(out, OpOutput::Int(55));
        assert_eq!(s.get(), 11);

        assert_eq!(steps(OpId::MaxNaive, 10), 1023);

        let x = UnaryNat::from_u64(6);
        let (out, s) = measured(OpId::UPlus, &OpInput::Unary(x.clone(), UnaryNat::Zero)).unwrap();
        assert_eq!(out, OpOutput::Unary(x));
        assert_eq!(s.get(), 1);
    }

    #[test]
    fn mismatched_input_is_usage_error() {
        let err = measured(OpId::BAdd1, &OpInput::List(vec![])).unwrap_err();
        assert!(err.is_usage());
    }

    #[test]
    fn check_bound_examples() {
        let report = check_bound(&BoundRequest {
            op: OpId::FilterKeep,
            sizes: vec![10, 100, 1000],
            form: BoundForm::Exact(ClosedForm::Affine { slope: 1, offset: 1 }),
            constant: 0,
        })
        .unwrap();
        assert!(report.pass);
        assert_eq!(report.rows(), vec![(10, 11), (100, 101), (1000, 1001)]);

        let report = check_bound(&BoundRequest {
            op: OpId::BAddV2,
            sizes: vec![4, 8, 16, 32],
            form: BoundForm::Linear,
            constant: binary::ADD_COST_CONSTANT,
        })
        .unwrap();
        assert!(report.pass, "{report:?}");

        let report = check_bound(&BoundRequest {
            op: OpId::BsAccess,
            sizes: vec![1, 10, 100, 1000],
            form: BoundForm::Logarithmic,
            constant: 2,
        })
        .unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn check_bound_fails_when_bound_is_too_tight() {
        let report = check_bound(&BoundRequest {
            op: OpId::MaxNaive,
            sizes: vec![4, 8],
            form: BoundForm::Linear,
            constant: 1,
        })
        .unwrap();
        assert!(!report.pass);
        assert!(report.worst_ratio > 1.0);
    }

    #[test]
    fn check_bound_rejects_bad_schedules() {
        let mut req = BoundRequest {
            op: OpId::Sumlist,
            sizes: vec![],
            form: BoundForm::Linear,
            constant: 2,
        };
        assert!(matches!(check_bound(&req), Err(Error::Usage(_))));
        req.sizes = vec![5, 5];
        assert!(matches!(check_bound(&req), Err(Error::Usage(_))));
    }

    #[test]
    fn transparency_and_determinism() {
        for op in OpId::ALL {
            for n in [1, 2, 5, 9] {
                let input = worst_case_input(op, n).unwrap();
                let (a, sa) = measured(op, &input).unwrap();
                let (b, sb) = measured(op, &input).unwrap();
                assert_eq!(a, unmetered(op, &input).unwrap(), "{op} n={n}");
                assert_eq!(a, b);
                assert_eq!(sa, sb);
            }
        }
    }
}
