use osp_ds::ds::ds1_audited;
use osp_ds::enumerate::enumerate_corefree;
use osp_ds::oracle::oracle_mult1;
use osp_ds::BlockType;

#[test]
fn oracle_agrees_with_arc_formula() {
    let mut pairs = 0;
    for t in BlockType::ALL {
        for k in 1..=4 {
            let targets = enumerate_corefree(t, k - 1, 10);
            for lambda in enumerate_corefree(t, k, 10) {
                let (d, collisions) = ds1_audited(&lambda);
                assert_eq!(collisions, 0, "{lambda}");
                for nu in d.components().keys() {
                    assert!(targets.contains(nu), "{lambda} -> {nu}");
                }
                for nu in &targets {
                    assert_eq!(
                        oracle_mult1(&lambda, nu),
                        d.get(nu),
                        "t={} {lambda} / {nu}",
                        t.as_u8()
                    );
                    pairs += 1;
                }
            }
        }
    }
    assert!(pairs > 5000);
}
