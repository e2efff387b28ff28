//! Superdimensions of simple `osp(2m+t|2n)`-modules.
//!
//! The superdimension is invariant under `DS`, so it is read off from
//! `DS_k(L(λ))` with `k` the atypicality. When `n = k` the reduction lands in
//! `so(2(m-k)+t)` and the Weyl dimension formula finishes the job. When
//! `m = k < n` and `t = 0` it lands in `sp(2(n-k))` instead. Otherwise the
//! reduced module is typical for an algebra with isotropic odd roots and the
//! superdimension vanishes.

use crate::diagram::{BlockType, WeightDiagram};
use crate::ds::dsr;
use crate::error::{Error, Result};
use crate::weightmap::{check_counts, diagram_to_weight, HalfInt};

/// Exact fraction accumulator with checked arithmetic.
struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    fn one() -> Self {
        Frac { num: 1, den: 1 }
    }

    fn mul(&mut self, p: i128, q: i128) -> Result<()> {
        let g = gcd(p, self.den);
        let (p, den) = (p / g, self.den / g);
        let h = gcd(self.num, q);
        let (num, q) = (self.num / h, q / h);
        self.num = num.checked_mul(p).ok_or(Error::Overflow)?;
        self.den = den.checked_mul(q).ok_or(Error::Overflow)?;
        Ok(())
    }

    fn integer(&self) -> i128 {
        assert!(
            self.num % self.den == 0,
            "Weyl quotient {}/{} is not integral",
            self.num,
            self.den
        );
        self.num / self.den
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

fn check_dominant(hw: &[HalfInt], d_type: bool) -> Result<()> {
    let bad = |msg: &str| Err(Error::NonDominant(format!("{msg}: {hw:?}")));
    if hw.iter().any(|x| x.is_integer() != hw[0].is_integer()) {
        return bad("entries must be all integers or all half-integers");
    }
    let r = hw.len();
    if hw
        .windows(2)
        .take(if d_type { r.saturating_sub(2) } else { r })
        .any(|w| w[0] < w[1])
    {
        return bad("entries must be non-increasing");
    }
    if d_type {
        if r >= 2 && hw[r - 2] < hw[r - 1].abs() {
            return bad("the last two entries must satisfy a_(r-1) >= |a_r|");
        }
    } else if hw[r - 1] < HalfInt::ZERO {
        return bad("entries must be non-negative");
    }
    Ok(())
}

/// Dimension of the simple `so(N)`-module with highest weight `hw` in the `ε` basis.
pub fn weyl_dim_so(big_n: usize, hw: &[HalfInt]) -> Result<i128> {
    let r = big_n / 2;
    if hw.len() != r {
        return Err(Error::CountMismatch(format!(
            "so({big_n}) weights have {r} entries, got {}",
            hw.len()
        )));
    }
    if big_n <= 2 {
        // so(2) is abelian, so(1) and so(0) are zero
        return Ok(1);
    }
    let d_type = big_n.is_multiple_of(2);
    check_dominant(hw, d_type)?;
    // doubled values of ρ and λ+ρ
    let rho: Vec<i128> = (0..r)
        .map(|i| {
            if d_type {
                2 * (r - 1 - i) as i128
            } else {
                (2 * (r - i) - 1) as i128
            }
        })
        .collect();
    let l: Vec<i128> = hw
        .iter()
        .zip(&rho)
        .map(|(x, p)| x.halves() as i128 + p)
        .collect();
    let mut f = Frac::one();
    for i in 0..r {
        for j in i + 1..r {
            f.mul(l[i] - l[j], rho[i] - rho[j])?;
            f.mul(l[i] + l[j], rho[i] + rho[j])?;
        }
        if !d_type {
            f.mul(l[i], rho[i])?;
        }
    }
    Ok(f.integer())
}

/// Dimension of the simple `sp(2r)`-module with highest weight `hw`.
pub fn weyl_dim_sp(hw: &[i64]) -> Result<i128> {
    let r = hw.len();
    if hw.windows(2).any(|w| w[0] < w[1]) || hw.last().is_some_and(|&x| x < 0) {
        return Err(Error::NonDominant(format!("{hw:?}")));
    }
    let rho: Vec<i128> = (0..r).map(|i| (r - i) as i128).collect();
    let l: Vec<i128> = hw.iter().zip(&rho).map(|(&x, p)| x as i128 + p).collect();
    let mut f = Frac::one();
    for i in 0..r {
        for j in i + 1..r {
            f.mul(l[i] - l[j], rho[i] - rho[j])?;
            f.mul(l[i] + l[j], rho[i] + rho[j])?;
        }
        f.mul(l[i], rho[i])?;
    }
    Ok(f.integer())
}

/// `sdim L(λ)` for `osp(2m+t|2n)`.
pub fn superdimension(lambda: &WeightDiagram, m: usize, n: usize) -> Result<i128> {
    check_counts(lambda, m, n)?;
    let t = lambda.t();
    let k = lambda.atypicality();
    if n == k {
        let big_n = 2 * (m - k) + t.as_u8() as usize;
        let mut total: i128 = 0;
        for (nu, mult) in dsr(lambda, k).iter() {
            let w = diagram_to_weight(nu, m - k, 0)?;
            // λ+ρ back to λ; the zero entry of a `t = 2` list is part of the so(N) weight
            let r = big_n / 2;
            let rho = |i: usize| {
                if big_n.is_multiple_of(2) {
                    HalfInt::from_int((r - 1 - i) as i64)
                } else {
                    HalfInt::from_halves((2 * (r - i) - 1) as i64)
                }
            };
            let hw: Vec<HalfInt> = w.a.iter().enumerate().map(|(i, &x)| x - rho(i)).collect();
            let dim = weyl_dim_so(big_n, &hw)?;
            let term = dim
                .checked_mul(mult.signed() as i128)
                .ok_or(Error::Overflow)?;
            total = total.checked_add(term).ok_or(Error::Overflow)?;
        }
        return Ok(total);
    }
    if m > k || t == BlockType::T2 {
        return Ok(0);
    }
    if t == BlockType::T1 {
        return Err(Error::Unsupported(
            "superdimensions of typical osp(1|2r)-modules are not implemented".into(),
        ));
    }
    let r = n - k;
    let mut total: i128 = 0;
    for (nu, mult) in dsr(lambda, k).iter() {
        let w = diagram_to_weight(nu, 0, r)?;
        let hw: Vec<i64> =
            w.b.iter()
                .enumerate()
                .map(|(j, x)| x.halves() / 2 - (r - j) as i64)
                .collect();
        let dim = weyl_dim_sp(&hw)?;
        let sign = if hw.iter().sum::<i64>() % 2 == 0 {
            1
        } else {
            -1
        };
        let term = dim
            .checked_mul(sign * mult.signed() as i128)
            .ok_or(Error::Overflow)?;
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use BlockType::*;

    fn ints(v: &[i64]) -> Vec<HalfInt> {
        v.iter().map(|&x| HalfInt::from_int(x)).collect()
    }

    fn binom(n: i128, k: i128) -> i128 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn classical_dimensions() {
        for big_n in 3..=12usize {
            let r = big_n / 2;
            let n = big_n as i128;
            let mut hw = ints(&vec![0; r]);
            assert_eq!(weyl_dim_so(big_n, &hw).unwrap(), 1);
            hw[0] = HalfInt::from_int(1);
            assert_eq!(weyl_dim_so(big_n, &hw).unwrap(), n, "vector of so({big_n})");
            hw[0] = HalfInt::from_int(2);
            assert_eq!(weyl_dim_so(big_n, &hw).unwrap(), n * (n + 1) / 2 - 1);
            for p in 1..r {
                let hw: Vec<HalfInt> = (0..r)
                    .map(|i| HalfInt::from_int(i64::from(i < p)))
                    .collect();
                assert_eq!(
                    weyl_dim_so(big_n, &hw).unwrap(),
                    binom(n, p as i128),
                    "so({big_n}) wedge {p}"
                );
            }
            if big_n >= 5 {
                let hw: Vec<HalfInt> = (0..r)
                    .map(|i| HalfInt::from_int(i64::from(i < 2)))
                    .collect();
                assert_eq!(weyl_dim_so(big_n, &hw).unwrap(), n * (n - 1) / 2);
            }
            let spin = vec![HalfInt::HALF; r];
            let expect = if big_n % 2 == 1 { 1 << r } else { 1 << (r - 1) };
            assert_eq!(
                weyl_dim_so(big_n, &spin).unwrap(),
                expect,
                "spin of so({big_n})"
            );
        }
        assert!(weyl_dim_so(5, &ints(&[0, 1])).is_err());
        assert!(weyl_dim_so(6, &ints(&[1, 1, -1])).is_ok());
        assert!(weyl_dim_so(6, &ints(&[0, 0, 1])).is_err());
    }

    #[test]
    fn symplectic_dimensions() {
        assert_eq!(weyl_dim_sp(&[1, 0, 0]).unwrap(), 6);
        assert_eq!(weyl_dim_sp(&[2, 0]).unwrap(), 10);
        assert_eq!(weyl_dim_sp(&[1, 1]).unwrap(), 5);
        assert_eq!(weyl_dim_sp(&[]).unwrap(), 1);
    }

    #[test]
    fn small_superdimensions() {
        let p = |s: &str, t| WeightDiagram::parse(s, t).unwrap();
        // trivial modules
        assert_eq!(superdimension(&p("x", T0), 1, 1).unwrap(), 1);
        assert_eq!(superdimension(&p("+x", T1), 1, 1).unwrap(), 1);
        assert_eq!(superdimension(&p(">", T2), 0, 0).unwrap(), 1);
        assert_eq!(superdimension(&p("xx", T0), 2, 2).unwrap(), -2);
        assert!(superdimension(&p("x", T0), 2, 1).is_err());
        assert_eq!(superdimension(&p("x<", T0), 1, 2).unwrap(), 1);
        assert_eq!(superdimension(&p("+x><", T1), 2, 2).unwrap(), 0);
        assert!(superdimension(&p("+x<", T1), 1, 2).is_err());
    }

    #[test]
    fn maximal_arc_shapes() {
        let fact = |m: i128| (1..=m).product::<i128>();
        for m in 1..=4usize {
            let crosses: String = (0..m).map(|_| "ox").collect();
            let d = p0(&format!("+o{crosses}"));
            assert_eq!(
                superdimension(&d, m, m).unwrap(),
                (1 << (m - 1)) * fact(m as i128),
                "{d}"
            );
        }
    }

    #[test]
    fn sigma_invariant() {
        use crate::diagram::Symbol;
        use crate::enumerate::enumerate_diagrams;
        for t in [T0, T1] {
            for k in 1..=3 {
                for c in 0..=2 {
                    for d in enumerate_diagrams(t, k, c, 7)
                        .into_iter()
                        .filter(|d| d.count(Symbol::Lt) == 0)
                    {
                        let (m, n) = d.rank();
                        assert_eq!(
                            superdimension(&d, m, n).unwrap(),
                            superdimension(&d.sigma(), m, n).unwrap(),
                            "{d}"
                        );
                    }
                }
            }
        }
    }

    fn p0(s: &str) -> WeightDiagram {
        WeightDiagram::parse(s, T0).unwrap()
    }
}
