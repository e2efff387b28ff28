//! DS for the full orthosymplectic group: signs are forgotten or become labels.

use osp_ds::ds::ds_osp;
use osp_ds::{BlockType, Sign, WeightDiagram};

pub fn run() -> osp_ds::Result<()> {
    for (s, t, label) in [
        ("+oxox", BlockType::T0, Sign::None),
        ("+xoox", BlockType::T1, Sign::Plus),
        ("+xoox", BlockType::T1, Sign::Minus),
        (">xoox", BlockType::T2, Sign::None),
    ] {
        let d = WeightDiagram::parse(s, t)?;
        println!("OSp: DS_1 of {s} (t={}, label {label:?})", t.as_u8());
        for (k, m) in ds_osp(&d, label)? {
            println!("  {k:<10} {m}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
