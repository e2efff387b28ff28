//! Arc diagrams on core-free weight diagrams.

use std::fmt;

use serde::Serialize;

use crate::diagram::{BlockType, Sign, Symbol, WeightDiagram};
use crate::error::{Error, Result};
use crate::howl::howl;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ends {
    Single(usize),
    Double(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub support: usize,
    /// Height in the zero stack, 0 for the lowest; 0 away from zero.
    pub stack_index: usize,
    pub ends: Ends,
}

impl Arc {
    pub fn right(&self) -> usize {
        match self.ends {
            Ends::Single(b) | Ends::Double(_, b) => b,
        }
    }

    pub fn end_list(&self) -> Vec<usize> {
        match self.ends {
            Ends::Single(b) => vec![b],
            Ends::Double(b1, b2) => vec![b1, b2],
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ends {
            Ends::Single(b) => write!(f, "({};{})", self.support, b),
            Ends::Double(b1, b2) => write!(f, "({};{},{})", self.support, b1, b2),
        }
    }
}

impl Serialize for Arc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Arc", 3)?;
        st.serialize_field("support", &self.support)?;
        st.serialize_field("stack_index", &self.stack_index)?;
        st.serialize_field("ends", &self.end_list())?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcDiagram {
    base: WeightDiagram,
    arcs: Vec<Arc>,
    used: Vec<bool>,
}

impl ArcDiagram {
    pub fn base(&self) -> &WeightDiagram {
        &self.base
    }

    /// Arcs sorted by support, then stack index.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Neither a cross, nor a core symbol, nor an arc end.
    pub fn is_free(&self, q: usize) -> bool {
        self.base.at(q) == Symbol::Empty && !self.used.get(q).copied().unwrap_or(false)
    }

    /// One past the rightmost symbol or arc end.
    pub fn extent(&self) -> usize {
        self.arcs
            .iter()
            .map(|a| a.right() + 1)
            .max()
            .unwrap_or(0)
            .max(self.base.width())
    }
}

/// The unique arc diagram of a core-free diagram.
pub fn build_arcs(h: &WeightDiagram) -> ArcDiagram {
    assert!(h.is_core_free(), "arc diagrams need a core-free diagram");
    let mut used = vec![false; h.width() + 2 * h.atypicality() + 2];
    let mut arcs = Vec::with_capacity(h.atypicality());
    let next_free = |used: &mut Vec<bool>, from: usize| {
        let mut q = from;
        while q == 0 || h.at(q) != Symbol::Empty || used[q] {
            q += 1;
        }
        used[q] = true;
        q
    };
    let p = h.zero_crosses();
    let singles = if h.t() == BlockType::T2 { 0 } else { p.min(1) };
    let positive: Vec<usize> = h.positive_positions(Symbol::Cross).collect();
    for &a in positive.iter().rev() {
        let b = next_free(&mut used, a + 1);
        arcs.push(Arc {
            support: a,
            stack_index: 0,
            ends: Ends::Single(b),
        });
    }
    if singles == 1 {
        let b = next_free(&mut used, 1);
        arcs.push(Arc {
            support: 0,
            stack_index: 0,
            ends: Ends::Single(b),
        });
    }
    for s in singles..p {
        let b1 = next_free(&mut used, 1);
        let b2 = next_free(&mut used, b1 + 1);
        arcs.push(Arc {
            support: 0,
            stack_index: s,
            ends: Ends::Double(b1, b2),
        });
    }
    arcs.sort();
    ArcDiagram {
        base: h.clone(),
        arcs,
        used,
    }
}

/// Whether `x` lies below `y`.
pub fn arc_less(x: &Arc, y: &Arc) -> bool {
    if x == y {
        return false;
    }
    match (x.ends, y.ends) {
        (Ends::Single(_), Ends::Single(b)) => y.support < x.support && x.support < b,
        (Ends::Single(_), Ends::Double(_, b2)) => x.support < b2,
        (Ends::Double(_, c2), Ends::Double(_, b2)) => c2 < b2,
        (Ends::Double(..), Ends::Single(_)) => false,
    }
}

pub fn maximal_arcs(a: &ArcDiagram) -> Vec<Arc> {
    a.arcs
        .iter()
        .filter(|x| !a.arcs.iter().any(|y| arc_less(x, y)))
        .copied()
        .collect()
}

/// Deletes the cross supporting a maximal arc.
pub fn remove_arc(a: &ArcDiagram, alpha: &Arc) -> Result<WeightDiagram> {
    if !maximal_arcs(a).contains(alpha) {
        return Err(Error::NotMaximal);
    }
    Ok(delete_cross(&a.base, alpha.support))
}

pub(crate) fn delete_cross(d: &WeightDiagram, q: usize) -> WeightDiagram {
    let mut rest = d.rest().to_vec();
    let zc = if q == 0 {
        d.zero_crosses() - 1
    } else {
        rest[q - 1] = Symbol::Empty;
        d.zero_crosses()
    };
    WeightDiagram::raw(d.t(), d.sign(), zc, d.zero_core(), rest).normalize_sign()
}

/// Free positions strictly left of the support of `alpha`.
pub fn free_left(a: &ArcDiagram, alpha: &Arc) -> usize {
    (0..alpha.support).filter(|&q| a.is_free(q)).count()
}

fn levels(a: &ArcDiagram) -> Vec<usize> {
    let mut lv = vec![1; a.arcs.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..a.arcs.len() {
            for j in 0..a.arcs.len() {
                if arc_less(&a.arcs[j], &a.arcs[i]) && lv[i] <= lv[j] {
                    lv[i] = lv[j] + 1;
                    changed = true;
                }
            }
        }
    }
    lv
}

/// Arc rows (outermost first), then the symbol row, then the coordinate ruler.
pub fn render_ascii(a: &ArcDiagram) -> String {
    render_with_dots(a, &[])
}

fn render_with_dots(a: &ArcDiagram, dotted: &[bool]) -> String {
    let d = &a.base;
    let w = (d.zero_ascii().len() + 1).max(3);
    let n = a.extent();
    let cols = n * w;
    let mut out = String::new();
    let lv = levels(a);
    let top = lv.iter().copied().max().unwrap_or(0);
    for level in (1..=top).rev() {
        let mut row = vec![' '; cols];
        for (k, arc) in a.arcs.iter().enumerate() {
            let mut pts = vec![arc.support];
            pts.extend(arc.end_list());
            if lv[k] == level {
                row[arc.support * w..=arc.right() * w].fill('-');
                for &q in &pts {
                    row[q * w] = '+';
                }
                if dotted.get(k) == Some(&true) {
                    row[(arc.support * w + arc.right() * w) / 2] = '*';
                }
            } else if lv[k] > level {
                for &q in &pts {
                    if row[q * w] == ' ' {
                        row[q * w] = '|';
                    }
                }
            }
        }
        out.push(' ');
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    let blank =
        d.t() != BlockType::T2 && d.atypicality() == 0 && d.rest().is_empty() && d.zero_is_empty();
    if !blank {
        out.push(match d.sign() {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::None => ' ',
        });
        let mut sym = format!("{:<w$}", d.zero_ascii());
        for q in 1..n {
            sym.push_str(&format!("{:<w$}", d.at(q).ascii()));
        }
        out.push_str(sym.trim_end());
        out.push('\n');
    }
    out.push(' ');
    let ruler: String = (0..n).map(|q| format!("{:<w$}", q)).collect();
    out.push_str(ruler.trim_end());
    out.push('\n');
    out
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
        write!(f, "{} {{{}}}", self.base, v.join(","))
    }
}

/// A tailless `t = 1` diagram with the arcs starting at inserted crosses dotted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DottedDiagram {
    pub arcs: ArcDiagram,
    /// Parallel to `arcs.arcs()`.
    pub dotted: Vec<bool>,
    /// Number of tail crosses that were replaced by dotted arcs.
    pub tail: usize,
}

impl DottedDiagram {
    pub fn diagram(&self) -> &WeightDiagram {
        self.arcs.base()
    }

    pub fn dotted_arcs(&self) -> Vec<Arc> {
        self.arcs
            .arcs()
            .iter()
            .zip(&self.dotted)
            .filter(|(_, &d)| d)
            .map(|(a, _)| *a)
            .collect()
    }

    pub fn render(&self) -> String {
        render_with_dots(&self.arcs, &self.dotted)
    }
}

/// Converts to a dotted cup diagram: the tail is traded for dotted arcs.
pub fn es_dotted(d: &WeightDiagram) -> DottedDiagram {
    let h = howl(d);
    let p = h.zero_crosses();
    let sign = match h.t() {
        BlockType::T1 => h.sign(),
        _ if p > 0 => Sign::Plus,
        _ => Sign::None,
    };
    let b = WeightDiagram::raw(BlockType::T1, sign, p, None, h.rest().to_vec());
    let l = b.tail_length();
    let zero = p - l;
    let tailless = WeightDiagram::raw(
        BlockType::T1,
        if zero > 0 { Sign::Plus } else { Sign::None },
        zero,
        None,
        b.rest().to_vec(),
    );
    let a = build_arcs(&tailless);
    let free: Vec<usize> = (0..).filter(|&q| a.is_free(q)).take(2 * l).collect();
    let coloured: Vec<usize> = free.iter().step_by(2).copied().collect();
    let mut rest = tailless.rest().to_vec();
    let mut zero = tailless.zero_crosses();
    for &q in &coloured {
        if q == 0 {
            zero += 1;
        } else {
            if rest.len() < q {
                rest.resize(q, Symbol::Empty);
            }
            rest[q - 1] = Symbol::Cross;
        }
    }
    let sign = if zero > 0 { Sign::Plus } else { Sign::None };
    let fbar = WeightDiagram::raw(BlockType::T1, sign, zero, None, rest);
    let arcs = build_arcs(&fbar);
    let dotted = arcs
        .arcs()
        .iter()
        .map(|x| coloured.contains(&x.support))
        .collect();
    DottedDiagram {
        arcs,
        dotted,
        tail: l,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_corefree;
    use BlockType::*;

    fn p(s: &str, t: BlockType) -> WeightDiagram {
        WeightDiagram::parse(s, t).unwrap()
    }

    fn arcs_of(s: &str, t: BlockType) -> String {
        let a = build_arcs(&p(s, t));
        a.arcs()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn maxes(s: &str, t: BlockType) -> String {
        let a = build_arcs(&p(s, t));
        maximal_arcs(&a)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    #[test]
    fn construction() {
        assert_eq!(
            arcs_of("x^2oxooxxooooxo", T0),
            "(0;1),(0;4,9),(2;3),(5;8),(6;7),(11;12)"
        );
        assert_eq!(arcs_of("+xoox", T1), "(0;1),(3;4)");
        assert_eq!(arcs_of("-x^2xo", T1), "(0;3),(0;4,5),(1;2)");
        assert_eq!(arcs_of("-x^2oxo", T1), "(0;1),(0;4,5),(2;3)");
        assert_eq!(arcs_of("-x^2ooxo", T1), "(0;1),(0;2,5),(3;4)");
        assert_eq!(arcs_of("-x^2oooxo", T1), "(0;1),(0;2,3),(4;5)");
        assert_eq!(arcs_of(">xoox", T2), "(1;2),(4;5)");
        assert_eq!(arcs_of("x/>oox", T2), "(0;1,2),(3;4)");
    }

    #[test]
    fn order_and_maximality() {
        assert_eq!(maxes("x^2oxooxxooooxo", T0), "(0;4,9),(11;12)");
        assert_eq!(maxes("+xoox", T1), "(0;1),(3;4)");
        assert_eq!(maxes("ox", T1), "(1;2)");
        let x = |s, b| Arc {
            support: s,
            stack_index: 0,
            ends: Ends::Single(b),
        };
        let z = Arc {
            support: 0,
            stack_index: 1,
            ends: Ends::Double(4, 9),
        };
        assert!(arc_less(&x(2, 3), &z));
        assert!(!arc_less(&x(11, 12), &z));
        assert!(arc_less(&x(6, 7), &x(5, 8)));
    }

    #[test]
    fn removal_and_free_counts() {
        let a = build_arcs(&p("+xoox", T1));
        let [lo, hi] = [a.arcs()[0], a.arcs()[1]];
        assert_eq!(remove_arc(&a, &hi).unwrap().to_string(), "+x");
        assert_eq!(remove_arc(&a, &lo).unwrap().to_string(), "ooox");
        assert_eq!((free_left(&a, &lo), free_left(&a, &hi)), (0, 1));
        let a = build_arcs(&p("-x^2ooooxo", T1));
        let top = *a.arcs().iter().find(|x| x.support == 5).unwrap();
        assert_eq!(free_left(&a, &top), 1);
        let a = build_arcs(&p("x^2oxooxxooooxo", T0));
        let inner = *a.arcs().iter().find(|x| x.support == 2).unwrap();
        assert_eq!(remove_arc(&a, &inner), Err(Error::NotMaximal));
        let stripped = delete_cross(a.base(), 2);
        let mut expect: Vec<Arc> = a.arcs().iter().filter(|x| **x != inner).copied().collect();
        expect.sort();
        assert_ne!(build_arcs(&stripped).arcs(), expect.as_slice());
    }

    #[test]
    fn structural_invariants() {
        for t in BlockType::ALL {
            for k in 1..=4 {
                for h in enumerate_corefree(t, k, 8) {
                    let a = build_arcs(&h);
                    assert_eq!(a.arcs().len(), k);
                    for x in a.arcs() {
                        for &e in &x.end_list() {
                            assert!(e > x.support && h.at(e) == Symbol::Empty);
                        }
                        assert!((x.support + 1..x.right()).all(|q| !a.is_free(q)), "{a}");
                    }
                    let m = maximal_arcs(&a);
                    assert!(!m.is_empty());
                    for alpha in &m {
                        let smaller = remove_arc(&a, alpha).unwrap();
                        assert!(smaller.validate().is_ok(), "{smaller}");
                        let mut rest: Vec<Arc> =
                            a.arcs().iter().filter(|x| *x != alpha).copied().collect();
                        rest.sort();
                        assert_eq!(
                            build_arcs(&smaller).arcs(),
                            rest.as_slice(),
                            "{a} minus {alpha}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rendering() {
        let r = render_ascii(&build_arcs(&WeightDiagram::empty(T1)));
        assert_eq!(r, " 0\n");
        let r = render_ascii(&build_arcs(&p("+x", T1)));
        assert_eq!(r, " +--+\n+x  o\n 0  1\n");
        let r = render_ascii(&build_arcs(&p("x^2oxooxxooooxo", T0)));
        let lines: Vec<&str> = r.lines().collect();
        assert!(lines[0].starts_with(" +"), "{r}");
        assert!(lines.iter().any(|l| l.contains('|')), "{r}");
    }

    #[test]
    fn dotted_example() {
        let e = es_dotted(&p("+x^3x", T1));
        assert_eq!(e.diagram().cross_positions(), vec![0, 1, 4, 6]);
        let arcs: Vec<String> = e.arcs.arcs().iter().map(|x| x.to_string()).collect();
        assert_eq!(arcs, ["(0;3)", "(1;2)", "(4;5)", "(6;7)"]);
        let dots: Vec<String> = e.dotted_arcs().iter().map(|x| x.to_string()).collect();
        assert_eq!(dots, ["(4;5)", "(6;7)"]);
        assert_eq!(e.tail, 2);
        let f = es_dotted(&p("+x^2x", T1));
        let dots: Vec<String> = f.dotted_arcs().iter().map(|x| x.to_string()).collect();
        assert_eq!(dots, ["(4;5)"]);
        let plain = es_dotted(&p("+xoox", T1));
        assert_eq!((plain.tail, plain.dotted_arcs().len()), (0, 0));
    }
}
