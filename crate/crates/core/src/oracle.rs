//! `[DS₁(L(λ)) : L(ν)]` by the translation-functor recursion, independent of arc diagrams.

use std::fmt;

use crate::diagram::{BlockType, Sign, Symbol, WeightDiagram};
use crate::ds::GradedMult;
use crate::howl::howl;
use crate::translate::shrink;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: &'static str,
    pub source: String,
    pub target: String,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<22} {} / {}", self.rule, self.source, self.target)
    }
}

pub fn oracle_mult1(lambda: &WeightDiagram, nu: &WeightDiagram) -> GradedMult {
    oracle_trace(lambda, nu).0
}

/// The multiplicity together with every reduction step taken.
pub fn oracle_trace(lambda: &WeightDiagram, nu: &WeightDiagram) -> (GradedMult, Vec<Step>) {
    let mut trace = Vec::new();
    let mut log = |rule, f: &WeightDiagram, g: &WeightDiagram| {
        trace.push(Step {
            rule,
            source: f.to_string(),
            target: g.to_string(),
        })
    };
    if lambda.t() != nu.t() || lambda.core_of() != nu.core_of() {
        log("different blocks", lambda, nu);
        return (GradedMult::ZERO, trace);
    }
    if lambda.atypicality() != nu.atypicality() + 1 {
        log("atypicality gap != 1", lambda, nu);
        return (GradedMult::ZERO, trace);
    }
    let (mut f, mut g) = (howl(lambda), howl(nu));
    log("howl", &f, &g);
    let mut scale = 1;
    let mut from_t0 = false;
    let result = loop {
        if let Some(&u) = g.cross_positions().last().filter(|&&u| u > 0) {
            match (shrink(&f, u), shrink(&g, u)) {
                (Ok(f2), Ok(g2)) => {
                    f = f2;
                    g = g2;
                    log("shrink", &f, &g);
                    continue;
                }
                _ => {
                    log("no x o under target x", &f, &g);
                    break GradedMult::ZERO;
                }
            }
        }
        let i = g.zero_crosses();
        let p = f.zero_crosses();
        match f.t() {
            BlockType::T1 if i == 0 => {
                log("base osp(3|2)", &f, &g);
                break base_t1(&f);
            }
            BlockType::T1 => {
                if g.sign() == Sign::Plus {
                    f = f.sigma();
                    g = g.sigma();
                    log("sign flip", &f, &g);
                }
                if f.sign() != Sign::Minus || p < i {
                    log("zero stack too small", &f, &g);
                    break GradedMult::ZERO;
                }
                let j = gap(&f);
                let (zero, rule) = if j == Some(2 * i - 1) {
                    (p - i + 1, "merge cross into stack")
                } else if j.is_none_or(|j| j >= 2 * i) {
                    (p - i, "drop empties")
                } else {
                    log("gap too short", &f, &g);
                    break GradedMult::ZERO;
                };
                f = WeightDiagram::raw(
                    BlockType::T1,
                    Sign::Minus,
                    zero,
                    None,
                    tail_from(&f, 2 * i),
                )
                .normalize_sign();
                g = WeightDiagram::empty(BlockType::T1);
                log(rule, &f, &g);
            }
            BlockType::T0 if i == 0 => {
                log("base osp(2|2)", &f, &g);
                break base_t0(&f);
            }
            BlockType::T0 => {
                if p == 0 || f.at(1) == Symbol::Cross {
                    log("cross next to stack", &f, &g);
                    break GradedMult::ZERO;
                }
                f = WeightDiagram::raw(
                    BlockType::T2,
                    Sign::None,
                    p - 1,
                    Some(Symbol::Gt),
                    tail_from(&f, 1),
                );
                g = WeightDiagram::raw(BlockType::T2, Sign::None, i - 1, Some(Symbol::Gt), vec![]);
                from_t0 = true;
                log("stack over >", &f, &g);
            }
            BlockType::T2 if i > 0 => {
                if p < i || gap(&f).is_some_and(|j| j < 2 * i) {
                    log("gap too short", &f, &g);
                    break GradedMult::ZERO;
                }
                f = WeightDiagram::raw(
                    BlockType::T2,
                    Sign::None,
                    p - i,
                    Some(Symbol::Gt),
                    tail_from(&f, 2 * i),
                );
                g = WeightDiagram::empty(BlockType::T2);
                log("drop empties", &f, &g);
            }
            BlockType::T2 => {
                let zero = if f.at(1) == Symbol::Cross { p + 1 } else { p };
                if zero == 0 && !from_t0 {
                    // L(o>f) splits into the two signed simples
                    scale *= 2;
                }
                f = WeightDiagram::raw(BlockType::T0, Sign::None, zero, None, tail_from(&f, 1))
                    .normalize_sign();
                g = WeightDiagram::empty(BlockType::T0);
                log(
                    if zero == p {
                        "unstack"
                    } else {
                        "unstack with cross"
                    },
                    &f,
                    &g,
                );
            }
        }
    };
    (result.scale(scale), trace)
}

/// Empties between the zero position and the next cross; `None` if no cross follows.
fn gap(f: &WeightDiagram) -> Option<usize> {
    f.rest().iter().position(|&s| s == Symbol::Cross)
}

/// Positions above `k`, renumbered from 1.
fn tail_from(f: &WeightDiagram, k: usize) -> Vec<Symbol> {
    f.rest().get(k..).unwrap_or(&[]).to_vec()
}

fn single_position(f: &WeightDiagram) -> usize {
    let c = f.cross_positions();
    assert_eq!(c.len(), 1, "base case needs atypicality 1");
    c[0]
}

fn base_t0(f: &WeightDiagram) -> GradedMult {
    if single_position(f).is_multiple_of(2) {
        GradedMult::ONE
    } else {
        GradedMult::PI
    }
}

fn base_t1(f: &WeightDiagram) -> GradedMult {
    match single_position(f) {
        0 => GradedMult::ONE,
        j if j % 2 == 0 => GradedMult::new(2, 0),
        _ => GradedMult::new(0, 2),
    }
}
