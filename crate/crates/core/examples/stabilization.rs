//! Moving core symbols to the right of all crosses by translation functors.

use osp_ds::ds::ds1;
use osp_ds::howl::howl;
use osp_ds::translate::{apply_moves, stabilize};
use osp_ds::{BlockType, WeightDiagram};

pub fn run() -> osp_ds::Result<()> {
    for (s, t) in [
        (">x", BlockType::T1),
        ("x/>>ox", BlockType::T1),
        ("x>x<ox", BlockType::T0),
        ("x/>x<oox", BlockType::T2),
    ] {
        let d = WeightDiagram::parse(s, t)?;
        let (st, moves) = stabilize(&d);
        println!("{s:<10} t={}  stable {st:<12} moves {moves:?}", t.as_u8());
        assert_eq!(howl(&st), howl(&d));
        // DS commutes with the same moves
        let mut moved = Vec::new();
        for nu in ds1(&d).components().keys() {
            moved.push(apply_moves(nu, &moves)?.to_string());
        }
        let direct: Vec<String> = ds1(&st)
            .components()
            .keys()
            .map(|x| x.to_string())
            .collect();
        moved.sort();
        println!("    DS components moved: {moved:?}");
        println!("    DS of stable form:   {direct:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> osp_ds::Result<()> {
    run()
}
