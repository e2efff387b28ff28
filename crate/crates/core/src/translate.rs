//! Translation functors acting on simple-module diagrams.

use crate::diagram::{BlockType, Sign, Symbol, WeightDiagram};
use crate::error::{Error, Result};

fn core_at(d: &WeightDiagram, q: usize) -> bool {
    if q == 0 {
        d.zero_core().is_some()
    } else {
        d.at(q).is_core()
    }
}

fn set(rest: &mut Vec<Symbol>, pos: usize, s: Symbol) {
    if rest.len() < pos {
        rest.resize(pos, Symbol::Empty);
    }
    rest[pos - 1] = s;
}

/// Moves the core symbol at `a` to `a+1` or back, whichever the core allows.
pub fn trans_swap(d: &WeightDiagram, a: usize) -> Result<WeightDiagram> {
    let (here, next) = (core_at(d, a), core_at(d, a + 1));
    if here == next {
        return Err(Error::Undefined(format!(
            "positions {a} and {} of {d} must hold exactly one core symbol",
            a + 1
        )));
    }
    let t = d.t();
    let mut rest = d.rest().to_vec();
    if a > 0 {
        let (x, y) = (d.at(a), d.at(a + 1));
        set(&mut rest, a, y);
        set(&mut rest, a + 1, x);
        return Ok(WeightDiagram::raw(
            t,
            d.sign(),
            d.zero_crosses(),
            d.zero_core(),
            rest,
        ));
    }
    if t != BlockType::T1 {
        return Err(Error::Undefined("moves at zero exist only for t=1".into()));
    }
    let i = d.zero_crosses();
    let out = if let Some(c) = d.zero_core() {
        let (zero, sign) = match (d.at(1), i) {
            (Symbol::Cross, _) => (i + 1, Sign::Plus),
            (_, 0) => (0, Sign::None),
            _ => (i, Sign::Minus),
        };
        set(&mut rest, 1, c);
        WeightDiagram::raw(t, sign, zero, None, rest)
    } else {
        let c = d.at(1);
        let (zero, s1) = match d.sign() {
            Sign::Plus => (i - 1, Symbol::Cross),
            _ => (i, Symbol::Empty),
        };
        set(&mut rest, 1, s1);
        WeightDiagram::raw(t, Sign::None, zero, Some(c), rest)
    };
    Ok(out)
}

/// Applies a move list produced by [`stabilize`].
pub fn apply_moves(d: &WeightDiagram, moves: &[usize]) -> Result<WeightDiagram> {
    moves.iter().try_fold(d.clone(), |d, &a| trans_swap(&d, a))
}

/// Translates `d` to a stable diagram; returns the diagram and the positions `a` of the moves.
pub fn stabilize(d: &WeightDiagram) -> (WeightDiagram, Vec<usize>) {
    let mut cur = d.clone();
    let mut moves = Vec::new();
    while !cur.is_stable() {
        let last = *cur
            .cross_positions()
            .last()
            .expect("unstable diagrams have crosses");
        let mut c = (1..last).rev().find(|&c| cur.at(c).is_core());
        if c.is_none() && cur.t() == BlockType::T1 && cur.zero_core().is_some() {
            c = Some(0);
        }
        let c = c.expect("an unstable diagram has a core symbol left of a cross");
        push_right(&mut cur, c, &mut moves);
    }
    (cur, moves)
}

fn push_right(d: &mut WeightDiagram, c: usize, moves: &mut Vec<usize>) {
    if d.at(c + 1).is_core() {
        push_right(d, c + 1, moves);
    }
    *d = trans_swap(d, c).expect("the right neighbour is free");
    moves.push(c);
}

fn check_pair(d: &WeightDiagram, u: usize) -> Result<()> {
    if u == 0 || d.at(u) != Symbol::Cross || d.at(u + 1) != Symbol::Empty {
        return Err(Error::Undefined(format!(
            "positions ({u},{}) of {d} are not (x,o)",
            u + 1
        )));
    }
    Ok(())
}

/// Deletes positions `u`, `u+1` holding `x o`.
pub fn shrink(d: &WeightDiagram, u: usize) -> Result<WeightDiagram> {
    check_pair(d, u)?;
    let mut rest = d.rest().to_vec();
    rest.resize(rest.len().max(u + 1), Symbol::Empty);
    rest.drain(u - 1..u + 1);
    Ok(WeightDiagram::raw(d.t(), d.sign(), d.zero_crosses(), d.zero_core(), rest).normalize_sign())
}

/// Replaces `x o` at `u`, `u+1` by `> <`.
pub fn phi(d: &WeightDiagram, u: usize) -> Result<WeightDiagram> {
    check_pair(d, u)?;
    let mut rest = d.rest().to_vec();
    set(&mut rest, u, Symbol::Gt);
    set(&mut rest, u + 1, Symbol::Lt);
    Ok(WeightDiagram::raw(
        d.t(),
        d.sign(),
        d.zero_crosses(),
        d.zero_core(),
        rest,
    ))
}

/// The switch functor on core-free `t = 1` diagrams.
pub fn switch(d: &WeightDiagram) -> WeightDiagram {
    assert!(d.t() == BlockType::T1 && d.is_core_free());
    d.sigma()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_diagrams;
    use crate::howl::howl;
    use BlockType::*;

    fn p(s: &str, t: BlockType) -> WeightDiagram {
        WeightDiagram::parse(s, t).unwrap()
    }

    fn sw(s: &str, t: BlockType, a: usize) -> String {
        trans_swap(&p(s, t), a).unwrap().to_string()
    }

    #[test]
    fn swaps() {
        assert_eq!(sw("x>x", T0, 1), "xx>");
        assert_eq!(sw("x>", T0, 1), "xo>");
        assert_eq!(sw("+o>x", T0, 1), "+ox>");
        assert_eq!(sw("+o>", T0, 1), "+oo>");
        assert_eq!(sw(">xo", T1, 0), "+x>");
        assert_eq!(sw(">o", T1, 0), "o>");
        assert_eq!(sw("x^2/>o", T1, 0), "-x^2>");
        assert_eq!(sw("x^2/>x", T1, 0), "+x^3>");
        assert_eq!(sw("x/<x", T1, 0), "+x^2<");
        assert!(trans_swap(&p("x>>", T0), 1).is_err());
        assert!(trans_swap(&p("x^2", T0), 0).is_err());
    }

    #[test]
    fn swaps_invert() {
        for t in BlockType::ALL {
            for d in enumerate_diagrams(t, 2, 2, 6) {
                for a in 0..6 {
                    if let Ok(e) = trans_swap(&d, a) {
                        assert!(e.validate().is_ok(), "{d} a={a} -> {e}");
                        assert_eq!(trans_swap(&e, a).unwrap(), d);
                        assert_eq!(howl(&e), howl(&d), "{d} a={a}");
                    }
                }
            }
        }
    }

    #[test]
    fn stabilization() {
        let d = p("+x^2>o<", T1);
        assert_eq!(stabilize(&d), (d, vec![]));
        let (s, moves) = stabilize(&p(">x", T1));
        assert_eq!(
            (s.to_string().as_str(), moves.as_slice()),
            ("+x>", &[0][..])
        );
        let (s, _) = stabilize(&p("x/>>ox", T1));
        assert!(s.is_stable());
        for t in BlockType::ALL {
            for d in enumerate_diagrams(t, 2, 3, 7) {
                let (s, moves) = stabilize(&d);
                assert!(s.is_stable() && s.validate().is_ok(), "{d} -> {s}");
                assert_eq!(howl(&s), howl(&d));
                assert_eq!(apply_moves(&d, &moves).unwrap(), s);
                assert!(moves.len() <= 3 * 7);
            }
        }
    }

    #[test]
    fn shrink_and_phi() {
        let d = p("x^3o", T0);
        assert!(shrink(&d, 1).is_err());
        let d = p("xxxo", T0);
        assert_eq!(shrink(&d, 2).unwrap().to_string(), "xx");
        assert!(shrink(&d, 1).is_err());
        assert_eq!(phi(&d, 2).unwrap().to_string(), "xx><");
        let e = p("+oxoxo", T0);
        assert_eq!(shrink(&e, 3).unwrap().to_string(), "+ox");
        assert_eq!(shrink(&p("+ox", T0), 1).unwrap().to_string(), "o");
        for u in [1, 3] {
            assert_eq!(howl(&phi(&e, u).unwrap()), howl(&shrink(&e, u).unwrap()));
        }
    }

    #[test]
    fn switching() {
        assert_eq!(switch(&p("+x^2", T1)).to_string(), "-x^2");
        assert_eq!(switch(&p("ox", T1)).to_string(), "ox");
    }
}
