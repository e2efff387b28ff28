//! Exhaustive enumeration of valid diagrams, for test suites and the CLI.

use crate::diagram::{BlockType, Sign, Symbol, WeightDiagram};

/// All valid core-free diagrams of type `t` with `k` crosses at coordinates `< width`.
pub fn enumerate_corefree(t: BlockType, k: usize, width: usize) -> Vec<WeightDiagram> {
    enumerate_diagrams(t, k, 0, width)
}

/// All valid diagrams of type `t` with `k` crosses and `cores` core symbols
/// (the forced `>` at zero for `t = 2` not counted), coordinates `< width`.
/// Order: zero stack descending, zero core, then positions lexicographically, then `-` before `+`.
pub fn enumerate_diagrams(
    t: BlockType,
    k: usize,
    cores: usize,
    width: usize,
) -> Vec<WeightDiagram> {
    assert!(width >= 1);
    let zero_cores: &[Option<Symbol>] = match t {
        BlockType::T0 => &[None],
        BlockType::T1 => &[None, Some(Symbol::Gt), Some(Symbol::Lt)],
        BlockType::T2 => &[Some(Symbol::Gt)],
    };
    let mut out = Vec::new();
    for p in (0..=k).rev() {
        for &zc in zero_cores {
            let extra = usize::from(t != BlockType::T2 && zc.is_some());
            if extra > cores {
                continue;
            }
            let mut rest = vec![Symbol::Empty; width - 1];
            fill(&mut rest, 0, k - p, cores - extra, &mut |rest| {
                let d = WeightDiagram::raw(t, Sign::None, p, zc, rest.to_vec());
                if d.sign_required() {
                    out.push(d.clone().with_sign(Sign::Minus));
                    out.push(d.with_sign(Sign::Plus));
                } else {
                    out.push(d);
                }
            });
        }
    }
    out
}

fn fill(rest: &mut [Symbol], i: usize, x: usize, c: usize, emit: &mut impl FnMut(&[Symbol])) {
    if x == 0 && c == 0 {
        emit(rest);
        return;
    }
    if i == rest.len() || rest.len() - i < x + c {
        return;
    }
    for s in [Symbol::Cross, Symbol::Gt, Symbol::Lt] {
        let (nx, nc) = match s {
            Symbol::Cross if x > 0 => (x - 1, c),
            Symbol::Gt | Symbol::Lt if c > 0 => (x, c - 1),
            _ => continue,
        };
        rest[i] = s;
        fill(rest, i + 1, nx, nc, emit);
        rest[i] = Symbol::Empty;
    }
    fill(rest, i + 1, x, c, emit);
}
