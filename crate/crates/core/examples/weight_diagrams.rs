//! Parsing, validation, statistics and the weight <-> diagram dictionary.

use osp_ds::weightmap::{diagram_to_weight, weight_to_diagram, DominantWeight};
use osp_ds::{BlockType, WeightDiagram};

pub fn run() -> osp_ds::Result<()> {
    println!("== diagrams and their statistics ==");
    for (s, t) in [
        ("-x^2oxoox", BlockType::T1),
        ("+xoox", BlockType::T1),
        ("x^2/>oox", BlockType::T2),
        ("+o>x<x", BlockType::T0),
    ] {
        let d = WeightDiagram::parse(s, t)?;
        let (m, n) = d.rank();
        println!(
            "{:<12} {:<12} t={} rank=({m}|{n}) k={} core={} tail={} stable={} pari={:+}",
            d.to_string(),
            d.to_unicode(),
            t.as_u8(),
            d.atypicality(),
            d.core_of(),
            d.tail_length(),
            d.is_stable(),
            d.pari()
        );
    }

    println!("\n== rejected inputs ==");
    for (s, t) in [
        ("x", BlockType::T1),
        ("ox", BlockType::T0),
        ("+x", BlockType::T2),
        ("x^0", BlockType::T0),
    ] {
        match WeightDiagram::parse(s, t) {
            Ok(d) => println!("{s:<6} t={} unexpectedly valid: {d}", t.as_u8()),
            Err(e) => println!("{s:<6} t={}  {e}", t.as_u8()),
        }
    }

    println!("\n== weights ==");
    for w in [
        "B 2 2 / 3/2,1/2 / 3/2,1/2",
        "D 2 2 / 1,0 / 1,0",
        "D 2 2 / 2,-1 / 2,1",
        "D 3 2 / 1,0,0 / 1,0",
    ] {
        let w: DominantWeight = w.parse()?;
        let d = weight_to_diagram(&w)?;
        let (m, n) = d.rank();
        let back = diagram_to_weight(&d, m, n)?;
        println!("{w:<28} -> {d:<10} t={} -> {back}", d.t().as_u8());
        assert_eq!(back, w);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
