use osp_ds::ds::{check_purity, ds1};
use osp_ds::howl::{howl, tau, tau_inv, unhowl};
use osp_ds::translate::{apply_moves, stabilize};
use osp_ds::weightmap::{diagram_to_weight, weight_to_diagram};
use osp_ds::{BlockType, Symbol, WeightDiagram};
use proptest::prelude::*;

fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![
        3 => Just(Symbol::Empty),
        2 => Just(Symbol::Cross),
        1 => Just(Symbol::Gt),
        1 => Just(Symbol::Lt),
    ]
}

/// Random diagram strings of every type; invalid ones are filtered out.
fn diagram() -> impl Strategy<Value = WeightDiagram> {
    (
        0u8..3,
        0usize..4,
        prop_oneof![Just(""), Just(">"), Just("<")],
        prop_oneof![Just(""), Just("+"), Just("-")],
        prop::collection::vec(symbol(), 0..9),
    )
        .prop_filter_map("valid diagram", |(t, stack, zc, sign, rest)| {
            let t = BlockType::from_u8(t)?;
            let zero = match (stack, zc) {
                (0, "") => "o".to_string(),
                (0, c) => c.to_string(),
                (s, "") => format!("x^{s}"),
                (s, c) => format!("x^{s}/{c}"),
            };
            let tail: String = rest.iter().map(|s| s.ascii()).collect();
            WeightDiagram::parse(&format!("{sign}{zero}{tail}"), t).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn display_round_trips(d in diagram()) {
        prop_assert_eq!(WeightDiagram::parse(&d.to_string(), d.t()).unwrap(), d);
    }

    #[test]
    fn howl_is_core_free_and_lifts_back(d in diagram()) {
        let h = howl(&d);
        prop_assert!(h.is_core_free());
        prop_assert_eq!(h.atypicality(), d.atypicality());
        prop_assert_eq!(howl(&h), h.clone());
        prop_assert!(unhowl(&d.core_of(), &h).unwrap().contains(&d));
    }

    #[test]
    fn tau_is_a_bijection(d in diagram()) {
        let h = howl(&d);
        if h.t() == BlockType::T2 {
            let e = tau(&h);
            prop_assert_eq!(e.t(), BlockType::T1);
            prop_assert_eq!(tau_inv(&e), h);
        }
    }

    #[test]
    fn ds1_keeps_core_and_is_pure(d in diagram()) {
        prop_assume!(d.atypicality() > 0);
        let res = ds1(&d);
        prop_assert!(!res.is_empty());
        prop_assert!(check_purity(&res, &d));
        for (nu, _) in res.iter() {
            prop_assert_eq!(nu.core_of(), d.core_of());
            prop_assert_eq!(nu.atypicality() + 1, d.atypicality());
        }
    }

    #[test]
    fn stabilization_commutes_with_ds1(d in diagram()) {
        let (s, moves) = stabilize(&d);
        prop_assert!(s.is_stable());
        prop_assert_eq!(apply_moves(&d, &moves).unwrap(), s.clone());
        if d.atypicality() > 0 {
            let direct = ds1(&s);
            for (nu, m) in ds1(&d).iter() {
                prop_assert_eq!(direct.get(&apply_moves(nu, &moves).unwrap()), *m);
            }
        }
    }

    #[test]
    fn weights_round_trip(d in diagram()) {
        let (m, n) = d.rank();
        let w = diagram_to_weight(&d, m, n).unwrap();
        prop_assert_eq!(weight_to_diagram(&w).unwrap(), d);
    }
}
