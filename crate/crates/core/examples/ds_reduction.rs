//! DS_1 and its iterates with graded multiplicities.

use osp_ds::ds::{check_purity, ds1, dsr};
use osp_ds::{BlockType, WeightDiagram};

pub fn run() -> osp_ds::Result<()> {
    for (s, t) in [
        ("+xoox", BlockType::T1),
        ("+oxox", BlockType::T0),
        (">xoox", BlockType::T2),
        ("+x^3x", BlockType::T1),
    ] {
        let d = WeightDiagram::parse(s, t)?;
        println!("DS_1 L({s}), t={}:", t.as_u8());
        print!("{}", ds1(&d));
        println!();
    }

    println!("the family -x^2 o^j x against -x^2:");
    let target = WeightDiagram::parse("-x^2", BlockType::T1)?;
    for j in 1..=12 {
        let d = WeightDiagram::parse(&format!("-x^2{}x", "o".repeat(j)), BlockType::T1)?;
        println!("  j={j:<2} {}", ds1(&d).get(&target));
    }

    let d = WeightDiagram::parse("-x^2oxoox", BlockType::T1)?;
    for r in 0..=d.atypicality() {
        let res = dsr(&d, r);
        println!(
            "\nDS_{r} L({d}): {} components, pure: {}",
            res.len(),
            check_purity(&res, &d)
        );
        print!("{res}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
