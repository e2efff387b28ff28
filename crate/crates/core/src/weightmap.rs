//! Conversion between `λ+ρ` coefficient lists and weight diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{BlockType, Series, Sign, Symbol, WeightDiagram};
use crate::error::{Error, Result};

/// An exact half-integer, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    pub fn from_int(x: i64) -> Self {
        HalfInt(2 * x)
    }

    pub fn from_halves(h: i64) -> Self {
        HalfInt(h)
    }

    pub fn halves(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("not an integer or p/2 literal: {s:?}"),
        };
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                match q.trim() {
                    "1" => Ok(HalfInt::from_int(p)),
                    "2" => Ok(HalfInt(p)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

/// Coefficients of `λ+ρ` in the `ε_i` and `δ_j`.
///
/// For a D-series weight whose diagram has `>` at zero (`t = 2`) the list `a`
/// includes the forced trailing coefficient `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominantWeight {
    pub series: Series,
    pub a: Vec<HalfInt>,
    pub b: Vec<HalfInt>,
}

impl DominantWeight {
    pub fn new(series: Series, a: Vec<HalfInt>, b: Vec<HalfInt>) -> Result<Self> {
        let w = DominantWeight { series, a, b };
        w.check()?;
        Ok(w)
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::NonDominant(msg));
        let (a, b) = (&self.a, &self.b);
        match self.series {
            Series::D => {
                if a.iter().chain(b).any(|x| !x.is_integer()) {
                    return bad("D-series coefficients must be integers".into());
                }
                let m = a.len();
                if a.iter().take(m.saturating_sub(1)).chain(b).any(|x| x.0 < 0) {
                    return bad("only the last a may be negative".into());
                }
                let mut abs_a: Vec<HalfInt> = a.clone();
                if let Some(l) = abs_a.last_mut() {
                    *l = l.abs();
                }
                decreasing(&abs_a, HalfInt::ZERO, "a")?;
                decreasing(b, HalfInt::ZERO, "b")?;
            }
            Series::B => {
                if a.iter().any(|x| x.is_integer() || x.0 < -1) {
                    return bad("each a_i + 1/2 must be a non-negative integer".into());
                }
                if b.iter().any(|x| x.is_integer() || x.0 < 1) {
                    return bad("each b_j - 1/2 must be a non-negative integer".into());
                }
                decreasing(a, -HalfInt::HALF, "a")?;
                decreasing(b, HalfInt::HALF, "b")?;
                let za = a.iter().filter(|x| x.abs() == HalfInt::HALF).count();
                let zb = b.iter().filter(|&&x| x == HalfInt::HALF).count();
                let plus = a.contains(&HalfInt::HALF);
                if za > zb && !plus {
                    return bad("an unmatched > at zero needs a_i = 1/2".into());
                }
                if za < zb && plus {
                    return bad("an unmatched < at zero forbids a_i = 1/2".into());
                }
            }
        }
        Ok(())
    }
}

fn decreasing(v: &[HalfInt], boundary: HalfInt, name: &str) -> Result<()> {
    for w in v.windows(2) {
        if w[0] < w[1] || (w[0] == w[1] && w[0] != boundary) {
            return Err(Error::NonDominant(format!(
                "{name} must decrease strictly except at {boundary}"
            )));
        }
    }
    Ok(())
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.series {
            Series::B => "B",
            Series::D => "D",
        };
        let list = |v: &[HalfInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{s} {} {} / {} / {}",
            self.m(),
            self.n(),
            list(&self.a),
            list(&self.b)
        )
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    /// Reads `"B m n / a1,...,am / b1,...,bn"`.
    fn from_str(s: &str) -> Result<Self> {
        let perr = |msg: &str| Error::Parse {
            pos: 0,
            msg: msg.to_string(),
        };
        let mut groups: Vec<Vec<&str>> = vec![vec![]];
        for tok in s.split_whitespace() {
            if tok == "/" {
                groups.push(vec![]);
            } else {
                groups.last_mut().unwrap().push(tok);
            }
        }
        if groups.len() != 3 || groups[0].len() != 3 {
            return Err(perr("expected 'B|D m n / a1,...,am / b1,...,bn'"));
        }
        let series = match groups[0][0] {
            "B" => Series::B,
            "D" => Series::D,
            _ => return Err(perr("series must be B or D")),
        };
        let m: usize = groups[0][1].parse().map_err(|_| perr("bad m"))?;
        let n: usize = groups[0][2].parse().map_err(|_| perr("bad n"))?;
        let list = |g: &[&str]| -> Result<Vec<HalfInt>> {
            let joined = g.concat();
            if joined.is_empty() {
                return Ok(vec![]);
            }
            joined.split(',').map(str::parse).collect()
        };
        let (a, b) = (list(&groups[1])?, list(&groups[2])?);
        if a.len() != m || b.len() != n {
            return Err(perr("coefficient counts differ from m and n"));
        }
        DominantWeight::new(series, a, b)
    }
}

fn position(series: Series, x: HalfInt) -> usize {
    let h = match series {
        Series::D => x.abs().0,
        Series::B => x.abs().0 - 1,
    };
    (h / 2) as usize
}

pub fn weight_to_diagram(w: &DominantWeight) -> Result<WeightDiagram> {
    w.check()?;
    let mut gt = Vec::new();
    let mut lt = Vec::new();
    for &x in &w.a {
        bump(&mut gt, position(w.series, x));
    }
    for &x in &w.b {
        bump(&mut lt, position(w.series, x));
    }
    let len = gt.len().max(lt.len()).max(1);
    gt.resize(len, 0);
    lt.resize(len, 0);
    let zc = gt[0].min(lt[0]);
    let core = match (gt[0] - zc, lt[0] - zc) {
        (0, 0) => None,
        (1, 0) => Some(Symbol::Gt),
        (0, 1) => Some(Symbol::Lt),
        _ => return Err(Error::NonDominant("too many symbols at zero".into())),
    };
    let mut rest = Vec::new();
    for p in 1..len {
        rest.push(match (gt[p], lt[p]) {
            (0, 0) => Symbol::Empty,
            (1, 0) => Symbol::Gt,
            (0, 1) => Symbol::Lt,
            (1, 1) => Symbol::Cross,
            _ => {
                return Err(Error::NonDominant(format!(
                    "repeated coefficient at position {p}"
                )))
            }
        });
    }
    let t = match (w.series, core) {
        (Series::B, _) => BlockType::T1,
        (Series::D, Some(Symbol::Gt)) => BlockType::T2,
        (Series::D, _) => BlockType::T0,
    };
    let d = WeightDiagram::raw(t, Sign::None, zc, core, rest);
    let sign = if !d.sign_required() {
        Sign::None
    } else {
        match w.series {
            Series::D => {
                if w.a.last().is_some_and(|x| x.0 < 0) {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            }
            Series::B => {
                if w.a.contains(&HalfInt::HALF) {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
        }
    };
    let d = WeightDiagram::raw(t, sign, zc, core, d.rest().to_vec());
    d.validate().map_err(|v| {
        Error::NonDominant(
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        )
    })?;
    Ok(d)
}

fn bump(v: &mut Vec<usize>, p: usize) {
    if v.len() <= p {
        v.resize(p + 1, 0);
    }
    v[p] += 1;
}

/// Checks the symbol counts of `d` against `osp(2m+t|2n)`.
pub fn check_counts(d: &WeightDiagram, m: usize, n: usize) -> Result<()> {
    let k = d.atypicality();
    let gt = d.count(Symbol::Gt);
    let lt = d.count(Symbol::Lt);
    let want_gt = if d.t() == BlockType::T2 { m + 1 } else { m };
    if k + gt != want_gt || k + lt != n {
        return Err(Error::CountMismatch(format!(
            "diagram {d} has {k} crosses, {gt} '>' and {lt} '<', which does not fit m={m}, n={n}"
        )));
    }
    Ok(())
}

pub fn diagram_to_weight(d: &WeightDiagram, m: usize, n: usize) -> Result<DominantWeight> {
    check_counts(d, m, n)?;
    let series = d.t().series();
    let mut a_pos: Vec<usize> = d.positive_positions(Symbol::Gt).collect();
    let mut b_pos: Vec<usize> = d.positive_positions(Symbol::Lt).collect();
    for p in d.positive_positions(Symbol::Cross) {
        a_pos.push(p);
        b_pos.push(p);
    }
    let zero_gt = d.zero_crosses() + usize::from(d.zero_core() == Some(Symbol::Gt));
    let zero_lt = d.zero_crosses() + usize::from(d.zero_core() == Some(Symbol::Lt));
    a_pos.extend(std::iter::repeat_n(0, zero_gt));
    b_pos.extend(std::iter::repeat_n(0, zero_lt));
    a_pos.sort_unstable_by(|x, y| y.cmp(x));
    b_pos.sort_unstable_by(|x, y| y.cmp(x));
    let (mut a, b): (Vec<HalfInt>, Vec<HalfInt>) = match series {
        Series::D => (
            a_pos.iter().map(|&p| HalfInt::from_int(p as i64)).collect(),
            b_pos.iter().map(|&p| HalfInt::from_int(p as i64)).collect(),
        ),
        Series::B => (
            a_pos.iter().map(|&p| HalfInt(2 * p as i64 + 1)).collect(),
            b_pos.iter().map(|&p| HalfInt(2 * p as i64 + 1)).collect(),
        ),
    };
    match series {
        Series::D => {
            if d.sign() == Sign::Minus {
                let l = a.last_mut().expect("signed D diagrams have m > 0");
                *l = -*l;
            }
        }
        Series::B => {
            // one a at level 1/2 stays positive for a `+` sign or an unmatched `>`
            let keep = usize::from(d.sign() == Sign::Plus || d.zero_core() == Some(Symbol::Gt));
            let first = a.len() - zero_gt;
            for x in a.iter_mut().skip(first + keep) {
                *x = -*x;
            }
        }
    }
    DominantWeight::new(series, a, b)
}
