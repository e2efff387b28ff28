//! Erasing the core, lifting back, and the bijection from t=2 to t=1.

use osp_ds::enumerate::enumerate_corefree;
use osp_ds::howl::{howl, tau, tau_inv, unhowl};
use osp_ds::{BlockType, WeightDiagram};

pub fn run() -> osp_ds::Result<()> {
    println!("== howl ==");
    for (s, t) in [
        ("x^2>x", BlockType::T0),
        ("+o>o<", BlockType::T0),
        ("x^2/>oo>x", BlockType::T2),
        (">x<x", BlockType::T2),
        ("-x<ox", BlockType::T1),
    ] {
        let d = WeightDiagram::parse(s, t)?;
        let h = howl(&d);
        let lifts = unhowl(&d.core_of(), &h)?;
        assert!(lifts.contains(&d));
        println!(
            "{s:<10} t={}  core {:<8} howl {:<8} lifts back to {:?}",
            t.as_u8(),
            d.core_of().to_string(),
            h.to_string(),
            lifts.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
    }

    println!("\n== tau on core-free t=2 diagrams of atypicality 2, width 5 ==");
    let t2 = enumerate_corefree(BlockType::T2, 2, 5);
    for d in &t2 {
        let e = tau(d);
        assert_eq!(&tau_inv(&e), d);
        println!("{d:<10} -> {e}");
    }
    println!("{} diagrams, tau inverted on each", t2.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
