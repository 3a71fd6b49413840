//! Property suites run by `numerals check`.
//!
//! Each suite turns a module's laws into bounded exhaustive sweeps (or
//! seeded random samples) and checks them against machine-integer or
//! list oracles.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binary::{self, BinNat};
use crate::braun::{cd_digit_count, BraunSeq, CdIndex};
use crate::costmeter::count;
use crate::sweep::{self, Outcome};
use crate::twoscomp::{self, render_bits, TcInt};
use crate::unary::{self, UnaryNat};
use crate::{listlab, Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_2013;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Unary,
    Binary,
    TwosComp,
    Braun,
    Listlab,
    All,
}

impl Suite {
    const NAMES: [(&'static str, Suite); 6] = [
        ("unary", Suite::Unary),
        ("binary", Suite::Binary),
        ("twoscomp", Suite::TwosComp),
        ("braun", Suite::Braun),
        ("listlab", Suite::Listlab),
        ("all", Suite::All),
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::NAMES
            .iter()
            .find(|(name, _)| *name == s)
            .map(|&(_, suite)| suite)
            .ok_or_else(|| Error::usage(format!("unknown suite `{s}`")))
    }
}

/// Deliberately broken implementations for checking that the suites notice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutant {
    /// `add_v2` with the `B`/`B` clause dropping its carry.
    CarrylessAdd,
}

impl FromStr for Mutant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "carryless-add" => Ok(Mutant::CarrylessAdd),
            _ => Err(Error::usage(format!("unknown mutant `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub seed: u64,
    pub mutant: Option<Mutant>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            mutant: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub results: Vec<PropertyResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.outcome.passed())
    }

    pub fn failed(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.outcome.passed())
    }

    fn push(&mut self, suite: &'static str, name: &'static str, outcome: Outcome) {
        self.results.push(PropertyResult {
            suite,
            name,
            outcome,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let o = &r.outcome;
            if o.passed() {
                writeln!(f, "PASS {}/{} ({} cases)", r.suite, r.name, o.checked)?;
            } else {
                writeln!(
                    f,
                    "FAIL {}/{} ({} of {} cases failed; first: {})",
                    r.suite,
                    r.name,
                    o.failures.len(),
                    o.checked,
                    o.failures[0]
                )?;
            }
        }
        let failed = self.failed().count();
        writeln!(
            f,
            "{} properties, {} passed, {} failed",
            self.results.len(),
            self.results.len() - failed,
            failed
        )
    }
}

pub fn run(suite: Suite, cfg: &Config) -> Report {
    let mut report = Report::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Unary {
        unary_suite(&mut report);
    }
    if all || suite == Suite::Listlab {
        listlab_suite(&mut report, cfg.seed);
    }
    if all || suite == Suite::Binary {
        binary_suite(&mut report, cfg.mutant);
    }
    if all || suite == Suite::TwosComp {
        twoscomp_suite(&mut report);
    }
    if all || suite == Suite::Braun {
        braun_suite(&mut report, cfg.seed);
    }
    report
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

fn unary_suite(report: &mut Report) {
    const S: &str = "unary";
    let u = |n: i64| UnaryNat::from_u64(n as u64);

    let ns: Vec<i64> = (0..=2000).collect();
    report.push(
        S,
        "roundtrip",
        sweep::check_all(&ns, |&n| {
            let back = unary::u_to_int(&u(n));
            fail_if(back != n as u64, || format!("{n} -> {back}"))
        }),
    );

    report.push(
        S,
        "plus and add agree with oracle",
        sweep::check_all(&sweep::square(0, 60), |&(a, b)| {
            let p = unary::plus(&u(a), &u(b)).to_u64();
            let q = unary::add(&u(a), &u(b)).to_u64();
            let want = (a + b) as u64;
            fail_if(p != want || q != want, || {
                format!("{a}+{b}: plus {p}, add {q}")
            })
        }),
    );

    report.push(
        S,
        "commutativity and associativity",
        sweep::check_all(&sweep::cube(0, 25), |&(a, b, c)| {
            let (a, b, c) = (u(a), u(b), u(c));
            let comm = unary::plus(&a, &b).to_u64() == unary::plus(&b, &a).to_u64();
            let assoc = unary::plus(&unary::plus(&a, &b), &c) == unary::plus(&a, &unary::plus(&b, &c));
            fail_if(!comm || !assoc, || format!("{a}, {b}, {c}"))
        }),
    );

    let ys: Vec<i64> = (0..=100).collect();
    report.push(
        S,
        "add Z y = y",
        sweep::check_all(&ys, |&y| {
            fail_if(unary::add(&UnaryNat::Zero, &u(y)) != u(y), || y.to_string())
        }),
    );

    report.push(
        S,
        "steps = second argument + 1",
        sweep::check_all(&sweep::square(0, 60), |&(a, b)| {
            let (_, p) = count(|m| unary::plus_metered(&u(a), &u(b), m));
            let (_, q) = count(|m| unary::add_metered(u(a), &u(b), m));
            let want = b as u64 + 1;
            fail_if(p.get() != want || q.get() != want, || {
                format!("({a},{b}): plus {p}, add {q}")
            })
        }),
    );
}

fn random_lists(seed: u64, count: usize, max_len: usize, span: i64) -> Vec<(Vec<i64>, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            let xs = (0..len).map(|_| rng.gen_range(-span..=span)).collect();
            (xs, rng.gen_range(-100..=100))
        })
        .collect()
}

fn listlab_suite(report: &mut Report, seed: u64) {
    const S: &str = "listlab";
    let cases = random_lists(seed, 500, 50, 1000);

    report.push(
        S,
        "sumh xs acc = acc + sumlist xs",
        sweep::check_all(&cases, |(xs, acc)| {
            let l = listlab::sumh(xs, *acc);
            let r = acc + listlab::sumlist(xs);
            fail_if(l != r, || format!("{xs:?}, {acc}: {l} vs {r}"))
        }),
    );

    report.push(
        S,
        "sumlist2 = sumlist",
        sweep::check_all(&cases, |(xs, _)| {
            let oracle: i64 = xs.iter().sum();
            fail_if(
                listlab::sumlist2(xs) != oracle || listlab::sumlist(xs) != oracle,
                || format!("{xs:?}"),
            )
        }),
    );

    let short: Vec<Vec<i64>> = random_lists(seed ^ 1, 300, 15, 50)
        .into_iter()
        .map(|(xs, _)| xs)
        .filter(|xs| !xs.is_empty())
        .collect();
    report.push(
        S,
        "max_naive = max_fast = oracle",
        sweep::check_all(&short, |xs| {
            let oracle = xs.iter().copied().max();
            let naive = listlab::max_naive(xs).ok();
            let fast = listlab::max_fast(xs).ok();
            fail_if(naive != oracle || fast != oracle, || format!("{xs:?}"))
        }),
    );

    let sizes = [10usize, 100, 1000];
    report.push(
        S,
        "sumlist and filter take n+1 steps",
        sweep::check_all(&sizes, |&n| {
            let xs: Vec<i64> = (1..=n as i64).collect();
            let (_, s) = count(|m| listlab::sumlist_metered(&xs, m));
            let (_, f) = count(|m| listlab::filter_keep_metered(|x| x % 2 == 0, &xs, m));
            let want = n as u64 + 1;
            fail_if(s.get() != want || f.get() != want, || {
                format!("n={n}: sumlist {s}, filter {f}")
            })
        }),
    );

    let sizes = [8usize, 12, 16];
    report.push(
        S,
        "naive max 2^n-1 steps, fast max n steps",
        sweep::check_all(&sizes, |&n| {
            let xs: Vec<i64> = (1..=n as i64).collect();
            let (_, naive) = count(|m| listlab::max_naive_metered(&xs, m));
            let (_, fast) = count(|m| listlab::max_fast_metered(&xs, m));
            fail_if(
                naive.get() != (1 << n) - 1 || fast.get() != n as u64,
                || format!("n={n}: naive {naive}, fast {fast}"),
            )
        }),
    );
}

type BinOp = fn(&BinNat, &BinNat) -> BinNat;

fn carryless_add(x: &BinNat, y: &BinNat) -> BinNat {
    use BinNat::{A, B, Z};
    match (x, y) {
        (x, Z) => x.clone(),
        (Z, y) => y.clone(),
        (A(x), A(y)) => binary::mk_a(carryless_add(x, y)),
        (A(x), B(y)) | (B(x), A(y)) => binary::mk_b(carryless_add(x, y)),
        (B(x), B(y)) => binary::mk_a(carryless_add(x, y)),
    }
}

fn binary_suite(report: &mut Report, mutant: Option<Mutant>) {
    const S: &str = "binary";
    let add_v2: BinOp = match mutant {
        Some(Mutant::CarrylessAdd) => carryless_add,
        None => binary::add_v2,
    };
    let b = |n: i64| BinNat::from_u64(n as u64);
    let pairs = sweep::square(0, 512);

    report.push(
        S,
        "add_v1 agrees with oracle",
        sweep::check_all(&pairs, |&(x, y)| {
            let r = binary::add_v1(&b(x), &b(y));
            fail_if(!r.is_canonical() || r.to_u64() != Ok((x + y) as u64), || {
                format!("{x}+{y} gave {r}")
            })
        }),
    );

    report.push(
        S,
        "add_v2 agrees with oracle",
        sweep::check_all(&pairs, |&(x, y)| {
            let r = add_v2(&b(x), &b(y));
            fail_if(!r.is_canonical() || r.to_u64() != Ok((x + y) as u64), || {
                format!("{x}+{y} gave {r}")
            })
        }),
    );

    report.push(
        S,
        "add_v1 and add_v2 build identical numerals",
        sweep::check_all(&pairs, |&(x, y)| {
            fail_if(binary::add_v1(&b(x), &b(y)) != add_v2(&b(x), &b(y)), || {
                format!("{x}+{y}")
            })
        }),
    );

    report.push(
        S,
        "mult agrees with oracle",
        sweep::check_all(&sweep::square(0, 128), |&(x, y)| {
            let r = binary::mult(&b(x), &b(y));
            fail_if(!r.is_canonical() || r.to_u64() != Ok((x * y) as u64), || {
                format!("{x}*{y} gave {r}")
            })
        }),
    );

    let ns: Vec<i64> = (1..=4096).collect();
    report.push(
        S,
        "size = floor(log2 n) + 1",
        sweep::check_all(&ns, |&n| {
            let size = b(n).size();
            fail_if(size != u64::from(n.ilog2()) + 1, || format!("{n}: {size}"))
        }),
    );

    let k = binary::ADD_COST_CONSTANT;
    report.push(
        S,
        "additions take at most K(m+1) steps",
        sweep::check_all(&pairs, |&(x, y)| {
            let (x, y) = (b(x), b(y));
            let bound = k * (x.size().max(y.size()) + 1);
            let (_, s1) = count(|m| binary::add_v1_metered(&x, &y, m));
            let (_, s2) = count(|m| binary::add_v2_metered(&x, &y, m));
            fail_if(s1.get() > bound || s2.get() > bound, || {
                format!("{x}+{y}: {s1}, {s2} > {bound}")
            })
        }),
    );

    let ns: Vec<i64> = (0..=1024).collect();
    report.push(
        S,
        "add1 steps = trailing B count + 1",
        sweep::check_all(&ns, |&n| {
            let (_, s) = count(|m| binary::add1_metered(&b(n), m));
            let want = u64::from(n.trailing_ones()) + 1;
            fail_if(s.get() != want, || format!("{n}: {s}"))
        }),
    );
}

fn twoscomp_suite(report: &mut Report) {
    const S: &str = "twoscomp";
    let t = TcInt::from_i64;
    let pairs = sweep::square(-256, 256);

    report.push(
        S,
        "add and sub agree with oracle",
        sweep::check_all(&pairs, |&(x, y)| {
            let s = twoscomp::add(&t(x), &t(y));
            let d = twoscomp::sub(&t(x), &t(y));
            let ok = s.is_canonical()
                && d.is_canonical()
                && s.to_i64() == Ok(x + y)
                && d.to_i64() == Ok(x - y);
            fail_if(!ok, || format!("({x},{y}): sum {s}, difference {d}"))
        }),
    );

    let ns: Vec<i64> = (-256..=256).collect();
    report.push(
        S,
        "neg agrees with oracle; add1 undoes sub1",
        sweep::check_all(&ns, |&n| {
            let neg = twoscomp::neg(&t(n));
            let back = twoscomp::add1(&twoscomp::sub1(&t(n)));
            fail_if(!neg.is_canonical() || neg.to_i64() != Ok(-n) || back != t(n), || {
                n.to_string()
            })
        }),
    );

    let nat_pairs = sweep::square(0, 256);
    report.push(
        S,
        "add on nonnegatives matches binary add_v2",
        sweep::check_all(&nat_pairs, |&(x, y)| {
            let (bx, by) = (BinNat::from_u64(x as u64), BinNat::from_u64(y as u64));
            let want = TcInt::from(&binary::add_v2(&bx, &by));
            let got = twoscomp::add(&TcInt::from(&bx), &TcInt::from(&by));
            fail_if(got != want, || format!("{x}+{y}: {got} vs {want}"))
        }),
    );

    let table: [(i64, &str); 9] = [
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
    report.push(
        S,
        "bit strings match the reference table",
        sweep::check_all(&table, |&(n, s)| {
            let got = render_bits(&t(n));
            fail_if(got != s, || format!("{n}: {got}"))
        }),
    );

    let mut rendered: Vec<String> = (-512..=512).map(|n| render_bits(&t(n))).collect();
    let total = rendered.len();
    rendered.sort();
    rendered.dedup();
    report.push(
        S,
        "bit rendering is injective",
        Outcome {
            checked: total,
            failures: if rendered.len() == total {
                vec![]
            } else {
                vec![format!("{} collisions", total - rendered.len())]
            },
        },
    );
}

fn braun_suite(report: &mut Report, seed: u64) {
    const S: &str = "braun";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(Vec<u32>, u64)> = (0..120)
        .map(|_| {
            let len = rng.gen_range(0..=500);
            let xs = (0..len).map(|_| rng.gen()).collect();
            (xs, rng.gen())
        })
        .collect();

    report.push(
        S,
        "shape and list equivalence",
        sweep::check_all(&cases, |(xs, _)| {
            let s = BraunSeq::from_list(xs.iter().copied());
            let ok = s.tree().check_shape() == Some(xs.len())
                && s.to_list() == *xs
                && (0..xs.len()).all(|i| s.access(i as u64) == Ok(&xs[i]))
                && (0..xs.len())
                    .all(|i| s.access_cd(&CdIndex::from_u64(i as u64)) == Ok(&xs[i]));
            fail_if(!ok, || format!("length {}", xs.len()))
        }),
    );

    report.push(
        S,
        "persistent update, cons and rest",
        sweep::check_all(&cases, |(xs, pick)| {
            let s = BraunSeq::from_list(xs.iter().copied());
            let consed = s.cons(7);
            let mut want = vec![7];
            want.extend(xs);
            let mut ok = consed.to_list() == want
                && consed.tree().check_shape() == Some(want.len())
                && consed.rest().map(|r| r.to_list()).as_ref() == Ok(xs);
            if !xs.is_empty() {
                let i = (*pick % xs.len() as u64) as usize;
                let updated = s.update(i as u64, 99).expect("index in range");
                let mut want = xs.clone();
                want[i] = 99;
                let rest = s.rest().expect("nonempty");
                ok &= updated.to_list() == want
                    && rest.to_list() == xs[1..]
                    && rest.tree().check_shape() == Some(xs.len() - 1)
                    && s.first() == Ok(&xs[0]);
            }
            ok &= s.to_list() == *xs;
            fail_if(!ok, || format!("length {}", xs.len()))
        }),
    );

    let mut seqs = Vec::with_capacity(4096);
    let mut s = BraunSeq::new();
    for n in 1..=4096u32 {
        s = s.cons(n);
        seqs.push(s.clone());
    }
    report.push(
        S,
        "depth = floor(log2 n) + 1",
        sweep::check_all(&seqs, |s| {
            let n = s.len();
            let want = u64::from(n.ilog2()) + 1;
            fail_if(s.depth() != want, || format!("n={n}: depth {}", s.depth()))
        }),
    );

    let full = &seqs[4095];
    let idx: Vec<u64> = (0..4096).collect();
    report.push(
        S,
        "access descends once per C/D digit",
        sweep::check_all(&idx, |&i| {
            let (_, steps) = count(|m| full.access_metered(i, m).copied());
            fail_if(steps.get() > cd_digit_count(i), || format!("index {i}: {steps}"))
        }),
    );

    let sizes: Vec<usize> = (1..=600).collect();
    report.push(
        S,
        "cons and rest visit at most depth+1 nodes",
        sweep::check_all(&sizes, |&n| {
            let s = &seqs[n - 1];
            let bound = s.depth() + 1;
            let (_, c) = count(|m| s.cons_metered(0, m));
            let (_, r) = count(|m| s.rest_metered(m));
            fail_if(c.get() > bound || r.get() > bound, || {
                format!("n={n}: cons {c}, rest {r}, bound {bound}")
            })
        }),
    );

    let mut numerals = vec![CdIndex::Z];
    let mut frontier = vec![CdIndex::Z];
    for _ in 0..12 {
        frontier = frontier
            .iter()
            .flat_map(|i| {
                let i = std::sync::Arc::new(i.clone());
                [CdIndex::C(i.clone()), CdIndex::D(i)]
            })
            .collect();
        numerals.extend(frontier.iter().cloned());
    }
    report.push(
        S,
        "C-D numerals are bijective up to 12 digits",
        sweep::check_all(&numerals, |i| {
            let back = i.to_u64().map(CdIndex::from_u64);
            fail_if(back.as_ref() != Ok(i), || i.to_string())
        }),
    );
}
