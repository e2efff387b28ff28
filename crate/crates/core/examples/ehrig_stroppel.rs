//! Dotted cup diagrams: the tail of a t=1 diagram becomes dotted arcs.

use osp_ds::arcs::es_dotted;
use osp_ds::ds::ds1;
use osp_ds::{BlockType, WeightDiagram};

pub fn run() -> osp_ds::Result<()> {
    for s in ["+x^3x", "+xoox", "-x^2oxoox", "+x^2"] {
        let d = WeightDiagram::parse(s, BlockType::T1)?;
        let e = es_dotted(&d);
        println!(
            "{s} -> {} (crosses at {:?})",
            e.diagram(),
            e.diagram().cross_positions()
        );
        print!("{}", e.render());
        let dotted: Vec<String> = e.dotted_arcs().iter().map(|a| a.to_string()).collect();
        println!("dotted arcs: {}\n", dotted.join(" "));
    }
    let d = WeightDiagram::parse("+x^3x", BlockType::T1)?;
    println!("DS_1 L(+x^3x):");
    print!("{}", ds1(&d));
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
