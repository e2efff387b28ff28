//! Arc diagrams, maximal arcs and arc removal.

use osp_ds::arcs::{build_arcs, free_left, maximal_arcs, remove_arc, render_ascii};
use osp_ds::howl::howl;
use osp_ds::{BlockType, WeightDiagram};

fn show(s: &str, t: BlockType) -> osp_ds::Result<()> {
    let d = WeightDiagram::parse(s, t)?;
    let a = build_arcs(&howl(&d));
    println!("{s}  (t={})", t.as_u8());
    print!("{}", render_ascii(&a));
    for alpha in maximal_arcs(&a) {
        println!(
            "  maximal {alpha}  free on the left: {}  removal gives {}",
            free_left(&a, &alpha),
            remove_arc(&a, &alpha)?
        );
    }
    println!();
    Ok(())
}

pub fn run() -> osp_ds::Result<()> {
    show("+xoox", BlockType::T1)?;
    show("-x^2oxoox", BlockType::T1)?;
    show("x^2xoxoo", BlockType::T0)?;
    show("x^2/>oxox", BlockType::T2)?;
    show("-x^3ooooxx", BlockType::T1)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
