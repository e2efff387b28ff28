//! Weight diagrams of `osp(2m+t|2n)`.
//!
//! A diagram labels the positions `0, 1, 2, ...` with the symbols
//! `>`, `<`, `x`, `o`. Position 0 carries a stack of crosses and at most
//! one core symbol; positive positions carry exactly one symbol each.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    Gt,
    Lt,
    Cross,
    Empty,
}

impl Symbol {
    pub fn is_core(self) -> bool {
        matches!(self, Symbol::Gt | Symbol::Lt)
    }

    pub fn ascii(self) -> char {
        match self {
            Symbol::Gt => '>',
            Symbol::Lt => '<',
            Symbol::Cross => 'x',
            Symbol::Empty => 'o',
        }
    }

    pub fn unicode(self) -> char {
        match self {
            Symbol::Gt => '>',
            Symbol::Lt => '<',
            Symbol::Cross => '×',
            Symbol::Empty => '∘',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    None,
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::None => Sign::None,
        }
    }
}

/// The block type `t` of `osp(2m+t|2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BlockType {
    T0,
    T1,
    T2,
}

impl BlockType {
    pub fn from_u8(t: u8) -> Option<BlockType> {
        match t {
            0 => Some(BlockType::T0),
            1 => Some(BlockType::T1),
            2 => Some(BlockType::T2),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            BlockType::T0 => 0,
            BlockType::T1 => 1,
            BlockType::T2 => 2,
        }
    }

    pub fn series(self) -> Series {
        match self {
            BlockType::T1 => Series::B,
            _ => Series::D,
        }
    }

    pub const ALL: [BlockType; 3] = [BlockType::T0, BlockType::T1, BlockType::T2];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    B,
    D,
}

/// A broken validity rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    ZeroCoreForbidden,
    ZeroGtRequired,
    ZeroLtForbidden,
    SignForbidden(&'static str),
    SignRequired(&'static str),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroCoreForbidden => write!(f, "t=0 forbids a core symbol at zero"),
            Violation::ZeroGtRequired => write!(f, "t=2 requires > at zero"),
            Violation::ZeroLtForbidden => write!(f, "t=2 forbids < at zero"),
            Violation::SignForbidden(why) => write!(f, "sign present but {why}"),
            Violation::SignRequired(why) => write!(f, "sign missing although {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightDiagram {
    t: BlockType,
    sign: Sign,
    zero_crosses: usize,
    zero_core: Option<Symbol>,
    // rest[i] is the symbol at position i + 1; never ends in Empty
    rest: Vec<Symbol>,
}

impl WeightDiagram {
    /// Builds a diagram and checks every validity rule.
    pub fn new(
        t: BlockType,
        sign: Sign,
        zero_crosses: usize,
        zero_core: Option<Symbol>,
        rest: Vec<Symbol>,
    ) -> Result<Self> {
        let d = Self::raw(t, sign, zero_crosses, zero_core, rest);
        d.validate().map_err(Error::Invalid)?;
        Ok(d)
    }

    /// Builds a diagram without validation (trailing empties are trimmed).
    pub fn raw(
        t: BlockType,
        sign: Sign,
        zero_crosses: usize,
        zero_core: Option<Symbol>,
        mut rest: Vec<Symbol>,
    ) -> Self {
        assert!(zero_core.is_none_or(Symbol::is_core));
        while rest.last() == Some(&Symbol::Empty) {
            rest.pop();
        }
        WeightDiagram {
            t,
            sign,
            zero_crosses,
            zero_core,
            rest,
        }
    }

    /// The diagram without crosses and without non-zero core symbols.
    pub fn empty(t: BlockType) -> Self {
        let zc = if t == BlockType::T2 {
            Some(Symbol::Gt)
        } else {
            None
        };
        Self::raw(t, Sign::None, 0, zc, vec![])
    }

    pub fn t(&self) -> BlockType {
        self.t
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn zero_crosses(&self) -> usize {
        self.zero_crosses
    }

    pub fn zero_core(&self) -> Option<Symbol> {
        self.zero_core
    }

    pub fn rest(&self) -> &[Symbol] {
        &self.rest
    }

    /// Symbol at a positive position; at 0 reports a cross if the stack is nonempty.
    pub fn at(&self, pos: usize) -> Symbol {
        if pos == 0 {
            if self.zero_crosses > 0 {
                Symbol::Cross
            } else {
                self.zero_core.unwrap_or(Symbol::Empty)
            }
        } else {
            self.rest.get(pos - 1).copied().unwrap_or(Symbol::Empty)
        }
    }

    /// One past the last occupied position (at least 1).
    pub fn width(&self) -> usize {
        self.rest.len() + 1
    }

    pub fn zero_is_empty(&self) -> bool {
        self.zero_crosses == 0 && self.zero_core.is_none()
    }

    /// Coordinates of all crosses in increasing order; zero repeated per stack height.
    pub fn cross_positions(&self) -> Vec<usize> {
        let mut v = vec![0; self.zero_crosses];
        v.extend(self.positive_positions(Symbol::Cross));
        v
    }

    pub fn positive_positions(&self, s: Symbol) -> impl Iterator<Item = usize> + '_ {
        self.rest
            .iter()
            .enumerate()
            .filter(move |(_, &x)| x == s)
            .map(|(i, _)| i + 1)
    }

    pub fn count(&self, s: Symbol) -> usize {
        let zero = match s {
            Symbol::Cross => self.zero_crosses,
            _ if self.zero_core == Some(s) => 1,
            _ => 0,
        };
        zero + self.rest.iter().filter(|&&x| x == s).count()
    }

    pub fn is_core_free(&self) -> bool {
        self.rest.iter().all(|s| !s.is_core())
            && (self.t == BlockType::T2 || self.zero_core.is_none())
    }

    /// The `(m, n)` with `g = osp(2m+t|2n)`.
    pub fn rank(&self) -> (usize, usize) {
        let gt = self.count(Symbol::Gt);
        let x = self.count(Symbol::Cross);
        let m = if self.t == BlockType::T2 {
            gt + x - 1
        } else {
            gt + x
        };
        (m, self.count(Symbol::Lt) + x)
    }

    pub(crate) fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = sign;
        self
    }

    /// Whether the validity rules require a sign.
    pub fn sign_required(&self) -> bool {
        match self.t {
            BlockType::T0 => self.zero_is_empty() && self.rank().0 > 0,
            BlockType::T1 => self.zero_crosses > 0 && self.zero_core.is_none(),
            BlockType::T2 => false,
        }
    }

    /// Drops a forbidden sign and supplies `+` where one is required.
    pub(crate) fn normalize_sign(mut self) -> Self {
        if !self.sign_required() {
            self.sign = Sign::None;
        } else if self.sign == Sign::None {
            self.sign = Sign::Plus;
        }
        self
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        match self.t {
            BlockType::T0 => {
                if self.zero_core.is_some() {
                    v.push(Violation::ZeroCoreForbidden);
                }
            }
            BlockType::T1 => {}
            BlockType::T2 => match self.zero_core {
                Some(Symbol::Gt) => {}
                Some(_) => v.push(Violation::ZeroLtForbidden),
                None => v.push(Violation::ZeroGtRequired),
            },
        }
        let has = self.sign != Sign::None;
        if v.is_empty() {
            let need = self.sign_required();
            let why = match (self.t, need) {
                (BlockType::T0, true) => "zero position is empty",
                (BlockType::T0, false) if self.zero_is_empty() => "diagram is empty",
                (BlockType::T0, false) => "zero position is occupied",
                (BlockType::T1, true) => "zero holds only crosses",
                (BlockType::T1, false) if self.zero_crosses == 0 => "zero holds no cross",
                (BlockType::T1, false) => "zero holds a core symbol",
                (BlockType::T2, _) => "t=2 diagrams carry no sign",
            };
            if has && !need {
                v.push(Violation::SignForbidden(why));
            }
            if need && !has {
                v.push(Violation::SignRequired(why));
            }
        } else if has && self.t == BlockType::T2 {
            v.push(Violation::SignForbidden("t=2 diagrams carry no sign"));
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    /// Parses and validates.
    pub fn parse(s: &str, t: BlockType) -> Result<Self> {
        let d = Self::parse_unchecked(s, t)?;
        d.validate().map_err(Error::Invalid)?;
        Ok(d)
    }

    /// Parses the grammar only.
    pub fn parse_unchecked(s: &str, t: BlockType) -> Result<Self> {
        let b = s.as_bytes();
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let mut i = 0;
        let sign = match b.first() {
            Some(b'+') => {
                i += 1;
                Sign::Plus
            }
            Some(b'-') => {
                i += 1;
                Sign::Minus
            }
            _ => Sign::None,
        };
        let (mut zc, mut core) = (0usize, None);
        match b.get(i) {
            Some(b'o') => i += 1,
            Some(b'>') => {
                core = Some(Symbol::Gt);
                i += 1
            }
            Some(b'<') => {
                core = Some(Symbol::Lt);
                i += 1
            }
            Some(b'x') => {
                i += 1;
                zc = 1;
                if b.get(i) == Some(&b'^') {
                    i += 1;
                    let start = i;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(err(i, "expected a stack height after '^'"));
                    }
                    zc = s[start..i]
                        .parse()
                        .map_err(|_| err(start, "stack height out of range"))?;
                    if zc == 0 {
                        return Err(err(start, "stack height must be at least 1"));
                    }
                }
                if b.get(i) == Some(&b'/') {
                    i += 1;
                    core = match b.get(i) {
                        Some(b'>') => Some(Symbol::Gt),
                        Some(b'<') => Some(Symbol::Lt),
                        _ => return Err(err(i, "expected '>' or '<' after '/'")),
                    };
                    i += 1;
                }
            }
            Some(_) => return Err(err(i, "expected a zero token: o > < x x^N x/> x^N/>")),
            None => return Err(err(i, "missing zero token")),
        }
        let mut rest = Vec::with_capacity(b.len() - i);
        for (k, c) in b[i..].iter().enumerate() {
            rest.push(match c {
                b'o' => Symbol::Empty,
                b'x' => Symbol::Cross,
                b'>' => Symbol::Gt,
                b'<' => Symbol::Lt,
                _ => return Err(err(i + k, "expected one of o x > <")),
            });
        }
        Ok(Self::raw(t, sign, zc, core, rest))
    }

    fn zero_token(&self, cross: &str, empty: &str) -> String {
        let mut s = String::new();
        if self.zero_crosses > 0 {
            s.push_str(cross);
            if self.zero_crosses > 1 {
                s.push_str(&format!("^{}", self.zero_crosses));
            }
            if let Some(c) = self.zero_core {
                s.push('/');
                s.push(c.ascii());
            }
        } else if let Some(c) = self.zero_core {
            s.push(c.ascii());
        } else {
            s.push_str(empty);
        }
        s
    }

    fn sign_str(&self) -> &'static str {
        match self.sign {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::None => "",
        }
    }

    /// The zero token in ASCII (used by renderers).
    pub fn zero_ascii(&self) -> String {
        self.zero_token("x", "o")
    }

    /// Display form with `×` and `∘`; the empty diagram prints as `∅`.
    pub fn to_unicode(&self) -> String {
        if self.t != BlockType::T2
            && self.zero_is_empty()
            && self.rest.is_empty()
            && self.sign == Sign::None
        {
            return "∅".to_string();
        }
        let mut s = self.sign_str().replace('-', "−");
        s.push_str(&self.zero_token("×", "∘"));
        s.extend(self.rest.iter().map(|x| x.unicode()));
        s
    }

    /// Replaces every cross by an empty position.
    pub fn core_of(&self) -> WeightDiagram {
        let rest = self
            .rest
            .iter()
            .map(|&s| if s == Symbol::Cross { Symbol::Empty } else { s })
            .collect();
        let c = Self::raw(self.t, Sign::None, 0, self.zero_core, rest);
        // cores never carry a minus sign
        if c.sign_required() {
            c.with_sign(Sign::Plus)
        } else {
            c
        }
    }

    pub fn atypicality(&self) -> usize {
        self.count(Symbol::Cross)
    }

    pub fn tail_length(&self) -> usize {
        match (self.t, self.sign) {
            (BlockType::T1, Sign::Plus) => self.zero_crosses - 1,
            _ => self.zero_crosses,
        }
    }

    /// True iff every cross lies strictly left of every core symbol (zero `>` exempt for D).
    pub fn is_stable(&self) -> bool {
        let last_cross = match self.cross_positions().last() {
            Some(&c) => c,
            None => return true,
        };
        let zero_core_counts = self.t == BlockType::T1 && self.zero_core.is_some();
        if zero_core_counts {
            return false;
        }
        self.rest
            .iter()
            .enumerate()
            .all(|(i, s)| !s.is_core() || i + 1 > last_cross)
    }

    pub fn sigma(&self) -> WeightDiagram {
        let mut d = self.clone();
        d.sign = d.sign.flip();
        d
    }

    /// `(-1)^p` for the parity `p` of the weight of `howl(self)`.
    pub fn pari(&self) -> i8 {
        let h = crate::howl::howl(self);
        let h = if h.t == BlockType::T2 {
            crate::howl::tau(&h)
        } else {
            h
        };
        let s: usize = h.cross_positions().iter().sum();
        if s.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.sign_str())?;
        f.write_str(&self.zero_ascii())?;
        for s in &self.rest {
            write!(f, "{}", s.ascii())?;
        }
        Ok(())
    }
}

pub fn block_type(core: &WeightDiagram, series: Series) -> BlockType {
    match series {
        Series::B => BlockType::T1,
        Series::D if core.zero_core() == Some(Symbol::Gt) => BlockType::T2,
        Series::D => BlockType::T0,
    }
}

/// Grammar summary printed on usage errors.
pub const GRAMMAR: &str = "\
diagram := sign? zerotok postok*
sign    := '+' | '-'
zerotok := 'o' | '>' | '<' | stack | stack '/>' | stack '/<'
stack   := 'x' | 'x^' INT        (INT >= 1)
postok  := 'o' | 'x' | '>' | '<'
examples: -x^2oxoox  +xoox  x^2/>oox  >xx  (trailing 'o' optional)";
