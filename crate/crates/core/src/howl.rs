//! The howl map to the principal block, its inverse relative to a core, and τ.

use crate::diagram::{BlockType, Sign, Symbol, WeightDiagram};
use crate::error::{Error, Result};

fn place(rest_len: usize, targets: &[usize]) -> (usize, Vec<Symbol>) {
    let zero = targets.iter().filter(|&&x| x == 0).count();
    let mut rest = vec![Symbol::Empty; rest_len];
    for &x in targets.iter().filter(|&&x| x > 0) {
        if rest.len() < x {
            rest.resize(x, Symbol::Empty);
        }
        debug_assert_eq!(rest[x - 1], Symbol::Empty);
        rest[x - 1] = Symbol::Cross;
    }
    (zero, rest)
}

/// Number of non-core positions in `from..a`.
fn non_core_before(d: &WeightDiagram, from: usize, a: usize) -> usize {
    (from..a)
        .filter(|&q| {
            if q == 0 {
                d.zero_core().is_none()
            } else {
                !d.at(q).is_core()
            }
        })
        .count()
}

/// Moves every cross to the principal block by deleting core symbols.
pub fn howl(d: &WeightDiagram) -> WeightDiagram {
    let t = d.t();
    let targets: Vec<usize> = d
        .cross_positions()
        .into_iter()
        .map(|a| match (t, a) {
            (_, 0) => 0,
            (BlockType::T2, a) => non_core_before(d, 1, a) + 1,
            (_, a) => non_core_before(d, 0, a),
        })
        .collect();
    let (zero, rest) = place(0, &targets);
    let zc = if t == BlockType::T2 {
        Some(Symbol::Gt)
    } else {
        None
    };
    let h = WeightDiagram::raw(t, Sign::None, zero, zc, rest);
    let sign = match t {
        BlockType::T1 if zero > 0 => {
            if d.tail_length() + 1 == zero {
                Sign::Plus
            } else {
                debug_assert_eq!(d.tail_length(), zero);
                Sign::Minus
            }
        }
        BlockType::T0 if h.sign_required() => d.sign(),
        _ => Sign::None,
    };
    h.with_sign(sign)
}

/// All diagrams with core `g` whose howl is `h`.
///
/// Returns two diagrams exactly when `t = 0`, `h` is empty and the lift needs a sign.
pub fn unhowl(g: &WeightDiagram, h: &WeightDiagram) -> Result<Vec<WeightDiagram>> {
    let t = g.t();
    if h.t() != t {
        return Err(Error::Undefined(format!(
            "block types differ: {} vs {}",
            t.as_u8(),
            h.t().as_u8()
        )));
    }
    if g.atypicality() != 0 {
        return Err(Error::Undefined(format!("{g} is not a core diagram")));
    }
    if !h.is_core_free() {
        return Err(Error::Undefined(format!("{h} is not core-free")));
    }
    let zero_free = t != BlockType::T2 && g.zero_core().is_none();
    let needed = h.width() + h.zero_crosses() + 1;
    let mut slots = Vec::with_capacity(needed);
    let mut q = if zero_free { 0 } else { 1 };
    while slots.len() < needed {
        if q == 0 || !g.at(q).is_core() {
            slots.push(q);
        }
        q += 1;
    }
    let mut targets = Vec::new();
    let zero = if t == BlockType::T1 && !zero_free {
        // the cross beyond the tail sits in the first free slot
        if h.zero_crosses() > h.tail_length() {
            targets.push(slots[0]);
        }
        h.tail_length()
    } else {
        h.zero_crosses()
    };
    for c in h.positive_positions(Symbol::Cross) {
        targets.push(if t == BlockType::T2 {
            slots[c - 1]
        } else {
            slots[c]
        });
    }
    let mut rest = g.rest().to_vec();
    for &x in &targets {
        if rest.len() < x {
            rest.resize(x, Symbol::Empty);
        }
        rest[x - 1] = Symbol::Cross;
    }
    let d = WeightDiagram::raw(t, Sign::None, zero, g.zero_core(), rest);
    let out = if !d.sign_required() {
        vec![d]
    } else if h.sign() != Sign::None {
        vec![d.with_sign(h.sign())]
    } else {
        vec![d.clone().with_sign(Sign::Plus), d.with_sign(Sign::Minus)]
    };
    for d in &out {
        d.validate().map_err(Error::Invalid)?;
    }
    Ok(out)
}

/// The bijection from core-free `t = 2` diagrams to core-free `t = 1` diagrams.
pub fn tau(h: &WeightDiagram) -> WeightDiagram {
    assert!(h.t() == BlockType::T2 && h.is_core_free());
    let p = h.zero_crosses();
    let rest = h.rest().get(1..).unwrap_or(&[]).to_vec();
    match h.at(1) {
        Symbol::Cross => WeightDiagram::raw(BlockType::T1, Sign::Plus, p + 1, None, rest),
        _ if p > 0 => WeightDiagram::raw(BlockType::T1, Sign::Minus, p, None, rest),
        _ => WeightDiagram::raw(BlockType::T1, Sign::None, 0, None, rest),
    }
}

pub fn tau_inv(h: &WeightDiagram) -> WeightDiagram {
    assert!(h.t() == BlockType::T1 && h.is_core_free());
    let q = h.zero_crosses();
    let mut rest = Vec::with_capacity(h.rest().len() + 1);
    let zero = if h.sign() == Sign::Plus {
        rest.push(Symbol::Cross);
        q - 1
    } else {
        rest.push(Symbol::Empty);
        q
    };
    rest.extend_from_slice(h.rest());
    WeightDiagram::raw(BlockType::T2, Sign::None, zero, Some(Symbol::Gt), rest)
}
