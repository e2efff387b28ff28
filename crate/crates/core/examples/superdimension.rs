//! Superdimensions through DS and the Weyl dimension formula.

use osp_ds::ds::ds1;
use osp_ds::sdim::{superdimension, weyl_dim_so};
use osp_ds::weightmap::HalfInt;
use osp_ds::{BlockType, WeightDiagram};

fn shape(prefix: &str, first: usize, k: usize) -> String {
    let mut s = prefix.to_string();
    let mut pos = 1;
    for c in 0..k {
        while pos < first + 2 * c {
            s.push('o');
            pos += 1;
        }
        s.push('x');
        pos += 1;
    }
    s
}

pub fn run() -> osp_ds::Result<()> {
    let vec7 = [1, 0, 0].map(HalfInt::from_int);
    println!(
        "so(7): vector {}, spinor {}",
        weyl_dim_so(7, &vec7)?,
        weyl_dim_so(7, &[HalfInt::HALF; 3])?
    );

    println!("\nmaximal-arc shapes with n = k:");
    for m in 1..=5usize {
        for (t, s) in [
            (BlockType::T0, shape("+o", 2, m)),
            (BlockType::T1, format!("o{}", shape("", 2, m))),
            (BlockType::T1, shape("-x", 4, m - 1)),
            (BlockType::T2, shape(">", 3, m)),
            (BlockType::T2, shape("x/>", 5, m - 1)),
        ] {
            let d = WeightDiagram::parse(&s, t)?;
            let (a, b) = d.rank();
            println!(
                "  t={} {:<16} osp({}|{}) sdim {}",
                t.as_u8(),
                s,
                2 * a + t.as_u8() as usize,
                2 * b,
                superdimension(&d, a, b)?
            );
        }
    }

    println!("\nconservation under DS_1:");
    let d = WeightDiagram::parse("-x^2oxoox", BlockType::T1)?;
    let (m, n) = d.rank();
    let mut sum = 0;
    for (nu, mult) in ds1(&d).iter() {
        sum += mult.signed() as i128 * superdimension(nu, m - 1, n - 1)?;
    }
    println!(
        "  sdim L({d}) = {}, sum over DS_1 = {sum}",
        superdimension(&d, m, n)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
