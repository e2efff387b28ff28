//! The translation-functor recursion checked against the arc formula.

use osp_ds::ds::ds1;
use osp_ds::enumerate::enumerate_corefree;
use osp_ds::oracle::{oracle_mult1, oracle_trace};
use osp_ds::{BlockType, WeightDiagram};

pub fn run() -> osp_ds::Result<()> {
    let l = WeightDiagram::parse("-x^2oooox", BlockType::T1)?;
    let n = WeightDiagram::parse("-x^2", BlockType::T1)?;
    let (m, steps) = oracle_trace(&l, &n);
    println!("[DS L({l}) : L({n})] = {m}");
    for s in steps {
        println!("  {s}");
    }

    let mut checked = 0;
    for t in BlockType::ALL {
        for k in 1..=3 {
            let targets = enumerate_corefree(t, k - 1, 8);
            for lambda in enumerate_corefree(t, k, 8) {
                let d = ds1(&lambda);
                for nu in &targets {
                    assert_eq!(oracle_mult1(&lambda, nu), d.get(nu), "{lambda} / {nu}");
                    checked += 1;
                }
            }
        }
    }
    println!("\n{checked} multiplicities agree between the recursion and the arc formula");
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
