//! The closed DS₁ formula, its iterates, and the OSp variant.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::arcs::{build_arcs, free_left, maximal_arcs, remove_arc};
use crate::diagram::{BlockType, Sign, WeightDiagram};
use crate::error::{Error, Result};
use crate::howl::{howl, unhowl};

/// Multiplicities `(d0|d1)` of `L` and `ΠL`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GradedMult {
    pub d0: u64,
    pub d1: u64,
}

impl GradedMult {
    pub const ZERO: GradedMult = GradedMult { d0: 0, d1: 0 };
    pub const ONE: GradedMult = GradedMult { d0: 1, d1: 0 };
    pub const PI: GradedMult = GradedMult { d0: 0, d1: 1 };

    pub fn new(d0: u64, d1: u64) -> Self {
        GradedMult { d0, d1 }
    }

    pub fn is_zero(self) -> bool {
        self.d0 == 0 && self.d1 == 0
    }

    pub fn is_pure(self) -> bool {
        self.d0 == 0 || self.d1 == 0
    }

    pub fn scale(self, k: u64) -> Self {
        GradedMult::new(self.d0 * k, self.d1 * k)
    }

    /// `d0 - d1`, the contribution to superdimensions.
    pub fn signed(self) -> i64 {
        self.d0 as i64 - self.d1 as i64
    }
}

impl Add for GradedMult {
    type Output = GradedMult;
    fn add(self, o: GradedMult) -> GradedMult {
        GradedMult::new(self.d0 + o.d0, self.d1 + o.d1)
    }
}

impl Mul for GradedMult {
    type Output = GradedMult;
    fn mul(self, o: GradedMult) -> GradedMult {
        gm_mul(self, o)
    }
}

impl fmt::Display for GradedMult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.d0, self.d1)
    }
}

pub fn gm_mul(x: GradedMult, y: GradedMult) -> GradedMult {
    GradedMult::new(x.d0 * y.d0 + x.d1 * y.d1, x.d0 * y.d1 + x.d1 * y.d0)
}

/// A semisimple module given by the multiplicities of its simple constituents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    t: BlockType,
    components: BTreeMap<WeightDiagram, GradedMult>,
}

impl Decomposition {
    pub fn new(t: BlockType) -> Self {
        Decomposition {
            t,
            components: BTreeMap::new(),
        }
    }

    pub fn t(&self) -> BlockType {
        self.t
    }

    pub fn components(&self) -> &BTreeMap<WeightDiagram, GradedMult> {
        &self.components
    }

    pub fn get(&self, nu: &WeightDiagram) -> GradedMult {
        self.components.get(nu).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Adds to the multiplicity of `nu`; returns whether `nu` was already present.
    pub fn add(&mut self, nu: WeightDiagram, m: GradedMult) -> bool {
        if m.is_zero() {
            return false;
        }
        let e = self.components.entry(nu).or_default();
        let hit = !e.is_zero();
        *e = *e + m;
        hit
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightDiagram, &GradedMult)> {
        self.components.iter()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return writeln!(f, "0");
        }
        let w = self
            .components
            .keys()
            .map(|d| d.to_string().len())
            .max()
            .unwrap_or(0);
        for (d, m) in &self.components {
            writeln!(f, "{:<w$}  {}", d.to_string(), m)?;
        }
        Ok(())
    }
}

/// Multiplicity attached to a maximal arc with `e` free positions on its left.
pub fn arc_mult(t: BlockType, e: usize) -> GradedMult {
    match t {
        BlockType::T0 if e.is_multiple_of(2) => GradedMult::ONE,
        BlockType::T0 => GradedMult::PI,
        _ if e == 0 => GradedMult::ONE,
        _ if e.is_multiple_of(2) => GradedMult::new(2, 0),
        _ => GradedMult::new(0, 2),
    }
}

/// `DS₁(L(λ))`, by removing one maximal arc at a time.
pub fn ds1(lambda: &WeightDiagram) -> Decomposition {
    ds1_audited(lambda).0
}

/// As [`ds1`], also reporting how many times two arcs produced the same component.
pub fn ds1_audited(lambda: &WeightDiagram) -> (Decomposition, usize) {
    let t = lambda.t();
    let mut out = Decomposition::new(t);
    let mut collisions = 0;
    let h = howl(lambda);
    let core = lambda.core_of();
    let a = build_arcs(&h);
    for alpha in maximal_arcs(&a) {
        let smaller = remove_arc(&a, &alpha).expect("maximal");
        let m = arc_mult(t, free_left(&a, &alpha));
        let targets = if t == BlockType::T0 && smaller.sign() != Sign::None {
            vec![smaller.sigma(), smaller]
        } else {
            vec![smaller]
        };
        for h2 in targets {
            for nu in unhowl(&core, &h2).expect("core and howl are compatible") {
                collisions += usize::from(out.add(nu, m));
            }
        }
    }
    (out, collisions)
}

/// `DS_r(L(λ))` as the `r`-fold iterate of [`ds1`].
pub fn dsr(lambda: &WeightDiagram, r: usize) -> Decomposition {
    let mut cur = Decomposition::new(lambda.t());
    cur.add(lambda.clone(), GradedMult::ONE);
    for _ in 0..r {
        let mut next = Decomposition::new(lambda.t());
        for (nu, x) in cur.iter() {
            for (mu, y) in ds1(nu).iter() {
                next.add(mu.clone(), *x * *y);
            }
        }
        cur = next;
    }
    cur
}

/// No component next to its parity shift, and parity shifts exactly where `pari` flips.
pub fn check_purity(d: &Decomposition, lambda: &WeightDiagram) -> bool {
    let p = lambda.pari();
    d.iter().all(|(nu, m)| {
        m.is_pure() && (m.d0 == 0 || nu.pari() == p) && (m.d1 == 0 || nu.pari() == -p)
    })
}

/// A simple module of the full orthosymplectic group.
///
/// Even case: the diagram with its sign erased. Odd case: the diagram plus a `±` label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OspLabel {
    pub diagram: WeightDiagram,
    pub label: Sign,
}

impl fmt::Display for OspLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.diagram.to_string();
        let s = s.trim_start_matches(['+', '-']);
        match self.label {
            Sign::Plus => write!(f, "{s} [+]"),
            Sign::Minus => write!(f, "{s} [-]"),
            Sign::None => write!(f, "{s}"),
        }
    }
}

/// DS₁ for `OSp(2m+t|2n)`. `label` must be `Plus`/`Minus` for `t = 1` and `None` otherwise.
pub fn ds_osp(lambda: &WeightDiagram, label: Sign) -> Result<BTreeMap<OspLabel, GradedMult>> {
    let t = lambda.t();
    let mut out = BTreeMap::new();
    match (t, label) {
        (BlockType::T1, Sign::Plus | Sign::Minus) => {
            for (nu, m) in ds1(lambda).iter() {
                out.insert(
                    OspLabel {
                        diagram: nu.clone(),
                        label,
                    },
                    *m,
                );
            }
        }
        (BlockType::T0 | BlockType::T2, Sign::None) => {
            // a signed lambda is the restriction of a module that splits in two
            let factor = if lambda.sign() == Sign::None { 1 } else { 2 };
            for (nu, m) in ds1(lambda).iter() {
                let key = OspLabel {
                    diagram: nu.clone().with_sign(Sign::None),
                    label: Sign::None,
                };
                let prev = out.insert(key, m.scale(factor));
                debug_assert!(prev.is_none_or(|p| p == m.scale(factor)));
            }
        }
        _ => {
            return Err(Error::Undefined(
                "OSp labels: t=1 needs a + or - label, t=0 and t=2 take none".into(),
            ))
        }
    }
    Ok(out)
}
