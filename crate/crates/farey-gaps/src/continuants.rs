//! Modified continuants and run-length compressed index tuples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("empty tuple string")]
    Empty,
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input")]
    Eof,
    #[error("index must be a positive integer (byte {pos})")]
    NonPositive { pos: usize },
    #[error("repeat count must be positive (byte {pos})")]
    ZeroCount { pos: usize },
    #[error("integer too large at byte {pos}")]
    Overflow { pos: usize },
}

/// A block of indices repeated `count` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Run {
    pub block: Vec<u64>,
    pub count: u32,
}

/// A run-length compressed index tuple such as `2,(4,1)^3,3,2^7,1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TupleSpec {
    runs: Vec<Run>,
}

impl TupleSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds the canonical compression of an explicit sequence: maximal runs of equal values.
    pub fn from_indices(indices: &[u64]) -> Self {
        let mut t = TupleSpec::new();
        for &k in indices {
            t = t.push(k);
        }
        t
    }

    /// Appends one index, merging it into a trailing single-value run.
    pub fn push(mut self, k: u64) -> Self {
        assert!(k >= 1, "indices are positive");
        match self.runs.last_mut() {
            Some(run) if run.block.len() == 1 && run.block[0] == k => run.count += 1,
            _ => self.runs.push(Run {
                block: vec![k],
                count: 1,
            }),
        }
        self
    }

    /// Appends `block` repeated `count` times; a zero count is a no-op.
    pub fn repeat(mut self, block: &[u64], count: u32) -> Self {
        assert!(block.iter().all(|&k| k >= 1), "indices are positive");
        if count == 0 || block.is_empty() {
            return self;
        }
        if block.len() == 1 {
            if let Some(run) = self.runs.last_mut() {
                if run.block.len() == 1 && run.block[0] == block[0] {
                    run.count += count;
                    return self;
                }
            }
        }
        self.runs.push(Run {
            block: block.to_vec(),
            count,
        });
        self
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs
            .iter()
            .map(|r| r.block.len() * r.count as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn expand(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.len());
        for run in &self.runs {
            for _ in 0..run.count {
                out.extend_from_slice(&run.block);
            }
        }
        out
    }

    pub fn reversed(&self) -> TupleSpec {
        let mut v = self.expand();
        v.reverse();
        TupleSpec::from_indices(&v)
    }
}

impl fmt::Display for TupleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, run) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match (run.block.len(), run.count) {
                (1, 1) => write!(f, "{}", run.block[0])?,
                (1, c) => write!(f, "{}^{}", run.block[0], c)?,
                (_, c) => {
                    let inner: Vec<String> = run.block.iter().map(u64::to_string).collect();
                    write!(f, "({})^{}", inner.join(","), c)?
                }
            }
        }
        Ok(())
    }
}

impl FromStr for TupleSpec {
    type Err = TupleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        if chars.is_empty() {
            return Err(TupleError::Empty);
        }
        let mut p = Parser { chars, i: 0 };
        let mut t = TupleSpec::new();
        for (block, count) in p.list()? {
            t = t.repeat(&block, count);
        }
        if let Some(&(pos, found)) = p.chars.get(p.i) {
            return Err(TupleError::Unexpected { pos, found });
        }
        Ok(t)
    }
}

impl Serialize for TupleSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TupleSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.i)
            .map(|&(p, _)| p)
            .unwrap_or_else(|| self.chars.last().map(|&(p, _)| p + 1).unwrap_or(0))
    }

    fn list(&mut self) -> Result<Vec<(Vec<u64>, u32)>, TupleError> {
        let mut items = vec![self.item()?];
        while self.peek() == Some(',') {
            self.i += 1;
            items.push(self.item()?);
        }
        Ok(items)
    }

    fn item(&mut self) -> Result<(Vec<u64>, u32), TupleError> {
        match self.peek() {
            Some('(') => {
                self.i += 1;
                let mut block = Vec::new();
                for (b, c) in self.list()? {
                    for _ in 0..c {
                        block.extend_from_slice(&b);
                    }
                }
                match self.peek() {
                    Some(')') => self.i += 1,
                    Some(found) => {
                        return Err(TupleError::Unexpected {
                            pos: self.pos(),
                            found,
                        })
                    }
                    None => return Err(TupleError::Eof),
                }
                self.expect_caret()?;
                let count = self.count()?;
                Ok((block, count))
            }
            Some(_) => {
                let pos = self.pos();
                let v = self.int()?;
                if v == 0 {
                    return Err(TupleError::NonPositive { pos });
                }
                if self.peek() == Some('^') {
                    self.i += 1;
                    let count = self.count()?;
                    Ok((vec![v], count))
                } else {
                    Ok((vec![v], 1))
                }
            }
            None => Err(TupleError::Eof),
        }
    }

    fn expect_caret(&mut self) -> Result<(), TupleError> {
        match self.peek() {
            Some('^') => {
                self.i += 1;
                Ok(())
            }
            Some(found) => Err(TupleError::Unexpected {
                pos: self.pos(),
                found,
            }),
            None => Err(TupleError::Eof),
        }
    }

    fn count(&mut self) -> Result<u32, TupleError> {
        let pos = self.pos();
        let c = self.int()?;
        if c == 0 {
            return Err(TupleError::ZeroCount { pos });
        }
        u32::try_from(c).map_err(|_| TupleError::Overflow { pos })
    }

    fn int(&mut self) -> Result<u64, TupleError> {
        let pos = self.pos();
        let start = self.i;
        let mut v: u64 = 0;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or(TupleError::Overflow { pos })?;
            self.i += 1;
        }
        if self.i == start {
            return match self.peek() {
                Some(found) => Err(TupleError::Unexpected { pos, found }),
                None => Err(TupleError::Eof),
            };
        }
        Ok(v)
    }
}

fn continuant_i128(ks: &[u64]) -> Option<(i128, i128)> {
    let (mut prev, mut cur): (i128, i128) = (0, 1);
    for &k in ks {
        let next = (k as i128).checked_mul(cur)?.checked_sub(prev)?;
        prev = cur;
        cur = next;
    }
    Some((cur, prev))
}

/// Returns `(K_r(k_1..k_r), K_{r-1}(k_1..k_{r-1}))`, with `K_0 = 1` and `K_{-1} = 0`.
pub fn continuant_pair_of(ks: &[u64]) -> (BigInt, BigInt) {
    if let Some((c, p)) = continuant_i128(ks) {
        return (BigInt::from(c), BigInt::from(p));
    }
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for &k in ks {
        let next = BigInt::from(k) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    (cur, prev)
}

pub fn continuant_of(ks: &[u64]) -> BigInt {
    continuant_pair_of(ks).0
}

pub fn expand(t: &TupleSpec) -> Vec<u64> {
    t.expand()
}

pub fn continuant(t: &TupleSpec) -> BigInt {
    continuant_of(&t.expand())
}

/// `K_r` of the tuple together with `K_{r-1}` of its length-(r-1) prefix.
pub fn continuant_pair(t: &TupleSpec) -> (BigInt, BigInt) {
    continuant_pair_of(&t.expand())
}

/// Parameters of the closed-form continuant families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FamilyParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub m: u32,
    pub n: u32,
}

/// Tuple shapes whose continuants are affine in the exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    FourOne,
    FourOneFour,
    OneFourOne,
    Twos,
    ATwos,
    ATwosB,
    TwosBC,
    ATwosBC,
    AFourOne,
    FourOneB,
    AFourOneB,
    FourOneBC,
    AFourOneBC,
    AOneFour,
    OneFourB,
    AOneFourB,
    FourOneThreeTwos,
    AFourOneThreeTwos,
    FourOneThreeTwosC,
    AFourOneThreeTwosC,
    OneFourOneThreeTwos,
    OneFourOneThreeTwosB,
    AOneFourOneThree,
    AOneFourOneThreeTwosB,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 24] = [
        ClosedForm::FourOne,
        ClosedForm::FourOneFour,
        ClosedForm::OneFourOne,
        ClosedForm::Twos,
        ClosedForm::ATwos,
        ClosedForm::ATwosB,
        ClosedForm::TwosBC,
        ClosedForm::ATwosBC,
        ClosedForm::AFourOne,
        ClosedForm::FourOneB,
        ClosedForm::AFourOneB,
        ClosedForm::FourOneBC,
        ClosedForm::AFourOneBC,
        ClosedForm::AOneFour,
        ClosedForm::OneFourB,
        ClosedForm::AOneFourB,
        ClosedForm::FourOneThreeTwos,
        ClosedForm::AFourOneThreeTwos,
        ClosedForm::FourOneThreeTwosC,
        ClosedForm::AFourOneThreeTwosC,
        ClosedForm::OneFourOneThreeTwos,
        ClosedForm::OneFourOneThreeTwosB,
        ClosedForm::AOneFourOneThree,
        ClosedForm::AOneFourOneThreeTwosB,
    ];

    /// The family written in tuple notation with symbolic parameters.
    pub fn name(self) -> &'static str {
        use ClosedForm::*;
        match self {
            FourOne => "(4,1)^n",
            FourOneFour => "(4,1)^n,4",
            OneFourOne => "1,(4,1)^n",
            Twos => "2^n",
            ATwos => "a,2^n",
            ATwosB => "a,2^n,b",
            TwosBC => "2^n,b,c",
            ATwosBC => "a,2^n,b,c",
            AFourOne => "a,(4,1)^n",
            FourOneB => "(4,1)^n,b",
            AFourOneB => "a,(4,1)^n,b",
            FourOneBC => "(4,1)^n,b,c",
            AFourOneBC => "a,(4,1)^n,b,c",
            AOneFour => "a,(1,4)^n",
            OneFourB => "(1,4)^n,b",
            AOneFourB => "a,(1,4)^n,b",
            FourOneThreeTwos => "(4,1)^n,3,2^m",
            AFourOneThreeTwos => "a,(4,1)^n,3,2^m",
            FourOneThreeTwosC => "(4,1)^n,3,2^m,c",
            AFourOneThreeTwosC => "a,(4,1)^n,3,2^m,c",
            OneFourOneThreeTwos => "(1,4)^n,1,3,2^m",
            OneFourOneThreeTwosB => "(1,4)^n,1,3,2^m,b",
            AOneFourOneThree => "a,(1,4)^n,1,3",
            AOneFourOneThreeTwosB => "a,(1,4)^n,1,3,2^m,b",
        }
    }

    pub fn from_name(name: &str) -> Option<ClosedForm> {
        let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        Self::ALL.into_iter().find(|f| f.name() == key)
    }

    /// Expands the family at the given parameters; unused parameters are ignored.
    pub fn tuple(self, p: FamilyParams) -> TupleSpec {
        let t = TupleSpec::new();
        let (a, b, c, m, n) = (p.a, p.b, p.c, p.m, p.n);
        use ClosedForm::*;
        match self {
            FourOne => t.repeat(&[4, 1], n),
            FourOneFour => t.repeat(&[4, 1], n).push(4),
            OneFourOne => t.push(1).repeat(&[4, 1], n),
            Twos => t.repeat(&[2], n),
            ATwos => t.push(a).repeat(&[2], n),
            ATwosB => t.push(a).repeat(&[2], n).push(b),
            TwosBC => t.repeat(&[2], n).push(b).push(c),
            ATwosBC => t.push(a).repeat(&[2], n).push(b).push(c),
            AFourOne => t.push(a).repeat(&[4, 1], n),
            FourOneB => t.repeat(&[4, 1], n).push(b),
            AFourOneB => t.push(a).repeat(&[4, 1], n).push(b),
            FourOneBC => t.repeat(&[4, 1], n).push(b).push(c),
            AFourOneBC => t.push(a).repeat(&[4, 1], n).push(b).push(c),
            AOneFour => t.push(a).repeat(&[1, 4], n),
            OneFourB => t.repeat(&[1, 4], n).push(b),
            AOneFourB => t.push(a).repeat(&[1, 4], n).push(b),
            FourOneThreeTwos => t.repeat(&[4, 1], n).push(3).repeat(&[2], m),
            AFourOneThreeTwos => t.push(a).repeat(&[4, 1], n).push(3).repeat(&[2], m),
            FourOneThreeTwosC => t.repeat(&[4, 1], n).push(3).repeat(&[2], m).push(c),
            AFourOneThreeTwosC => t.push(a).repeat(&[4, 1], n).push(3).repeat(&[2], m).push(c),
            OneFourOneThreeTwos => t.repeat(&[1, 4], n).push(1).push(3).repeat(&[2], m),
            OneFourOneThreeTwosB => t.repeat(&[1, 4], n).push(1).push(3).repeat(&[2], m).push(b),
            AOneFourOneThree => t.push(a).repeat(&[1, 4], n).push(1).push(3),
            AOneFourOneThreeTwosB => t
                .push(a)
                .repeat(&[1, 4], n)
                .push(1)
                .push(3)
                .repeat(&[2], m)
                .push(b),
        }
    }

    /// The closed-form value of the family's continuant.
    pub fn value(self, p: FamilyParams) -> BigInt {
        let (a, b, c) = (BigInt::from(p.a), BigInt::from(p.b), BigInt::from(p.c));
        let (m, n) = (BigInt::from(p.m), BigInt::from(p.n));
        let one = BigInt::one();
        let two = BigInt::from(2);
        let s = &m + &n + &one;
        let a2 = &two * &a - &one;
        use ClosedForm::*;
        match self {
            FourOne => &two * &n + &one,
            FourOneFour => BigInt::from(4) * (&n + &one),
            OneFourOne | Twos => &n + &one,
            ATwos => (&a - &one) * &n + &a,
            ATwosB => (&a - &one) * (&b - &one) * &n + &a * &b - &one,
            TwosBC => (&b * &c - &c - &one) * &n + &b * &c - &one,
            ATwosBC => (&a - &one) * (&b * &c - &c - &one) * &n + &a * &b * &c - &a - &c,
            AFourOne => &a2 * &n + &a,
            FourOneB => &two * (&b - &two) * &n + &b,
            AFourOneB => &a2 * (&b - &two) * &n + &a * &b - &one,
            FourOneBC => &two * (&b * &c - &two * &c - &one) * &n + &b * &c - &one,
            AFourOneBC => &a2 * (&b * &c - &two * &c - &one) * &n + &a * &b * &c - &a - &c,
            AOneFour => &two * (&a - &two) * &n + &a,
            OneFourB => (&two * &b - &one) * &n + &b,
            AOneFourB => (&a - &two) * (&two * &b - &one) * &n + &a * &b - &one,
            FourOneThreeTwos => &two * &s + &one,
            AFourOneThreeTwos => &a2 * &s + &a,
            FourOneThreeTwosC => &two * (&c - &one) * &s + &c + &one,
            AFourOneThreeTwosC => &a2 * (&c - &one) * &s + &a * &c + &a - &one,
            OneFourOneThreeTwos => &s + &one,
            OneFourOneThreeTwosB => (&b - &one) * &s + &b,
            AOneFourOneThree => (&a - &two) * &n + &two * &a - BigInt::from(3),
            AOneFourOneThreeTwosB => (&a - &two) * (&b - &one) * &s + &a * &b - &b - &one,
        }
    }
}
