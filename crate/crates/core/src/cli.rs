//! Command-line front end for the `ospds` binary.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arcs::{build_arcs, es_dotted, free_left, maximal_arcs, remove_arc, render_ascii};
use crate::diagram::{BlockType, Series, WeightDiagram, GRAMMAR};
use crate::ds::{arc_mult, dsr, Decomposition};
use crate::enumerate::{enumerate_corefree, enumerate_diagrams};
use crate::error::Error;
use crate::howl::{howl, tau, tau_inv, unhowl};
use crate::oracle::oracle_trace;
use crate::sdim::superdimension;
use crate::translate::stabilize;
use crate::weightmap::{diagram_to_weight, weight_to_diagram, DominantWeight};

#[derive(Parser, Debug)]
#[command(
    name = "ospds",
    about = "Weight and arc diagram calculus for the DS functor on osp(m|2n)"
)]
struct Cli {
    /// Block type 0, 1 or 2; inferred when a weight is given instead of a diagram
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(0..=2))]
    t: Option<u8>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Print intermediate steps to stderr
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesArg {
    #[value(name = "B")]
    B,
    #[value(name = "D")]
    D,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse a diagram or weight and print its statistics
    Parse {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// Check a diagram against the validity rules
    Validate {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// The core of a diagram
    Core {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// The core-free howl of a diagram
    Howl {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// All diagrams with the given core and howl
    Unhowl {
        #[arg(allow_hyphen_values = true)]
        core: String,
        #[arg(allow_hyphen_values = true)]
        corefree: String,
    },
    /// The map from t=2 to t=1 core-free diagrams
    Tau {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Translate to a stable diagram and list the moves
    Stabilize {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
    },
    /// Arc diagram of the howl
    Arcs {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        #[arg(long, conflicts_with = "json")]
        render: bool,
    },
    /// Dotted cup diagram with the tail traded for dotted arcs
    Es {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        #[arg(long, value_enum)]
        series: Option<SeriesArg>,
    },
    /// DS_r(L(λ)) with graded multiplicities
    Ds {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        #[arg(long, default_value_t = 1)]
        rank: usize,
    },
    /// Single multiplicity [DS(L(λ)) : L(ν)] by the recursion
    Oracle {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
    },
    /// Superdimension of L(λ) for osp(2m+t|2n)
    Sdim {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// List valid diagrams of a given atypicality
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        width: usize,
        #[arg(long, default_value_t = 0)]
        cores: usize,
    },
    /// Coefficients of λ+ρ for a diagram
    Weight {
        #[arg(allow_hyphen_values = true)]
        diagram: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Fail {
    Usage(String),
    Domain(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Fail::Usage(e.to_string()),
            _ => Fail::Domain(e.to_string()),
        }
    }
}

type CliResult = std::result::Result<(), Fail>;

struct Ctx {
    t: Option<BlockType>,
    json: bool,
    trace: bool,
    out: String,
    err: String,
}

impl Ctx {
    fn block(&self) -> std::result::Result<BlockType, Fail> {
        self.t
            .ok_or_else(|| Fail::Usage("--t is required unless a weight is given".into()))
    }

    /// A diagram, or a weight `"B m n / a / b"` converted to one.
    fn diagram(&self, s: &str) -> std::result::Result<WeightDiagram, Fail> {
        Ok(self.resolve(s)?.0)
    }

    fn resolve(
        &self,
        s: &str,
    ) -> std::result::Result<(WeightDiagram, Option<(usize, usize)>), Fail> {
        let s = s.trim();
        if s.starts_with("B ") || s.starts_with("D ") {
            let w: DominantWeight = s.parse()?;
            let d = weight_to_diagram(&w)?;
            if let Some(t) = self.t {
                if t != d.t() {
                    return Err(Fail::Domain(format!(
                        "weight has t={}, not {}",
                        d.t().as_u8(),
                        t.as_u8()
                    )));
                }
            }
            let m = if d.t() == BlockType::T2 {
                w.m() - 1
            } else {
                w.m()
            };
            return Ok((d, Some((m, w.n()))));
        }
        Ok((WeightDiagram::parse(s, self.block()?)?, None))
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn emit(&mut self, v: Value) {
        self.line(serde_json::to_string(&v).expect("JSON values serialise"));
    }

    fn trace_line(&mut self, s: impl AsRef<str>) {
        if self.trace {
            self.err.push_str(s.as_ref());
            self.err.push('\n');
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("{text}\n{GRAMMAR}\n"),
                },
            };
        }
    };
    let mut ctx = Ctx {
        t: cli.t.and_then(BlockType::from_u8),
        json: cli.json,
        trace: cli.trace,
        out: String::new(),
        err: String::new(),
    };
    let res = dispatch(&mut ctx, cli.cmd);
    let (code, extra) = match res {
        Ok(()) => (0, String::new()),
        Err(Fail::Domain(msg)) => (1, format!("error: {msg}\n")),
        Err(Fail::Usage(msg)) => (2, format!("error: {msg}\n\n{GRAMMAR}\n")),
    };
    Outcome {
        code,
        stdout: ctx.out,
        stderr: ctx.err + &extra,
    }
}

fn components_json(d: &Decomposition) -> Value {
    Value::Array(
        d.iter()
            .map(|(nu, m)| json!({"diagram": nu.to_string(), "d0": m.d0, "d1": m.d1}))
            .collect(),
    )
}

fn dispatch(ctx: &mut Ctx, cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Parse { diagram } => {
            let d = ctx.diagram(&diagram)?;
            let (m, n) = d.rank();
            if ctx.json {
                ctx.emit(json!({
                    "diagram": d.to_string(), "unicode": d.to_unicode(), "t": d.t().as_u8(),
                    "m": m, "n": n, "atypicality": d.atypicality(), "core": d.core_of().to_string(),
                    "tail_length": d.tail_length(), "stable": d.is_stable(), "pari": d.pari(),
                }));
            } else {
                ctx.line(format!("diagram      {}  ({})", d, d.to_unicode()));
                ctx.line(format!("t            {}", d.t().as_u8()));
                ctx.line(format!("rank         m={m} n={n}"));
                ctx.line(format!("atypicality  {}", d.atypicality()));
                ctx.line(format!("core         {}", d.core_of()));
                ctx.line(format!("tail length  {}", d.tail_length()));
                ctx.line(format!("stable       {}", d.is_stable()));
                ctx.line(format!("pari         {:+}", d.pari()));
            }
        }
        Cmd::Validate { diagram } => {
            let d = WeightDiagram::parse_unchecked(&diagram, ctx.block()?)?;
            match d.validate() {
                Ok(()) => {
                    if ctx.json {
                        ctx.emit(json!({"valid": true, "violations": []}));
                    } else {
                        ctx.line("valid");
                    }
                }
                Err(v) => {
                    let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    if ctx.json {
                        ctx.emit(json!({"valid": false, "violations": msgs}));
                    } else {
                        for m in &msgs {
                            ctx.line(m);
                        }
                    }
                    return Err(Fail::Domain(format!("{diagram} is not a valid diagram")));
                }
            }
        }
        Cmd::Core { diagram } => {
            let c = ctx.diagram(&diagram)?.core_of();
            if ctx.json {
                ctx.emit(json!({"core": c.to_string()}));
            } else {
                ctx.line(c.to_string());
            }
        }
        Cmd::Howl { diagram } => {
            let h = howl(&ctx.diagram(&diagram)?);
            if ctx.json {
                ctx.emit(json!({"howl": h.to_string()}));
            } else {
                ctx.line(h.to_string());
            }
        }
        Cmd::Unhowl { core, corefree } => {
            let t = ctx.block()?;
            let g = WeightDiagram::parse(&core, t)?;
            let h = WeightDiagram::parse(&corefree, t)?;
            let lifts = unhowl(&g, &h)?;
            if ctx.json {
                ctx.emit(
                    json!({"diagrams": lifts.iter().map(|d| d.to_string()).collect::<Vec<_>>()}),
                );
            } else {
                for d in lifts {
                    ctx.line(d.to_string());
                }
            }
        }
        Cmd::Tau { diagram, inverse } => {
            let t = ctx.block()?;
            let (want, from) = if inverse {
                (BlockType::T1, "t=1")
            } else {
                (BlockType::T2, "t=2")
            };
            let d = WeightDiagram::parse(&diagram, t)?;
            if t != want || !d.is_core_free() {
                return Err(Fail::Domain(format!(
                    "tau{} takes a core-free {from} diagram",
                    if inverse { " --inverse" } else { "" }
                )));
            }
            let r = if inverse { tau_inv(&d) } else { tau(&d) };
            if ctx.json {
                ctx.emit(json!({"diagram": r.to_string(), "t": r.t().as_u8()}));
            } else {
                ctx.line(r.to_string());
            }
        }
        Cmd::Stabilize { diagram } => {
            let d = ctx.diagram(&diagram)?;
            let (s, moves) = stabilize(&d);
            if ctx.trace {
                let mut cur = d.clone();
                for &a in &moves {
                    let next = crate::translate::trans_swap(&cur, a)?;
                    ctx.trace_line(format!("swap at {a}: {cur} -> {next}"));
                    cur = next;
                }
            }
            if ctx.json {
                ctx.emit(json!({"stable": s.to_string(), "moves": moves}));
            } else {
                ctx.line(s.to_string());
                let list: Vec<String> = moves.iter().map(|a| a.to_string()).collect();
                ctx.line(format!(
                    "moves: {}",
                    if list.is_empty() {
                        "none".into()
                    } else {
                        list.join(" ")
                    }
                ));
            }
        }
        Cmd::Arcs { diagram, render } => {
            let h = howl(&ctx.diagram(&diagram)?);
            let a = build_arcs(&h);
            let maximal = maximal_arcs(&a);
            if render {
                ctx.out.push_str(&render_ascii(&a));
            } else if ctx.json {
                let arcs: Vec<Value> = a
                    .arcs()
                    .iter()
                    .map(|x| {
                        let mut v = serde_json::to_value(x).expect("arcs serialise");
                        v["maximal"] = json!(maximal.contains(x));
                        v["free_left"] = json!(free_left(&a, x));
                        v
                    })
                    .collect();
                ctx.emit(json!({"howl": h.to_string(), "arcs": arcs}));
            } else {
                ctx.line(format!("howl {h}"));
                for x in a.arcs() {
                    let mark = if maximal.contains(x) { "  maximal" } else { "" };
                    ctx.line(format!("{x}  free_left={}{mark}", free_left(&a, x)));
                }
            }
        }
        Cmd::Es { diagram, series } => {
            let d = match (series, ctx.t) {
                (_, Some(_)) => ctx.diagram(&diagram)?,
                (Some(SeriesArg::B), None) => WeightDiagram::parse(&diagram, BlockType::T1)?,
                (Some(SeriesArg::D), None) => WeightDiagram::parse(&diagram, BlockType::T0)
                    .or_else(|_| WeightDiagram::parse(&diagram, BlockType::T2))?,
                (None, None) => return Err(Fail::Usage("es needs --t or --series".into())),
            };
            if let (Some(s), t) = (series, d.t()) {
                let want = match s {
                    SeriesArg::B => Series::B,
                    SeriesArg::D => Series::D,
                };
                if t.series() != want {
                    return Err(Fail::Domain(format!(
                        "t={} belongs to the other series",
                        t.as_u8()
                    )));
                }
            }
            let e = es_dotted(&d);
            if ctx.json {
                ctx.emit(json!({
                    "diagram": e.diagram().to_string(),
                    "crosses": e.diagram().cross_positions(),
                    "arcs": e.arcs.arcs(),
                    "dotted": e.dotted_arcs(),
                }));
            } else {
                ctx.line(e.diagram().to_string());
                ctx.out.push_str(&e.render());
                let dotted: Vec<String> = e.dotted_arcs().iter().map(|a| a.to_string()).collect();
                ctx.line(format!(
                    "dotted: {}",
                    if dotted.is_empty() {
                        "none".into()
                    } else {
                        dotted.join(" ")
                    }
                ));
            }
        }
        Cmd::Ds { diagram, rank } => {
            let d = ctx.diagram(&diagram)?;
            if rank > d.atypicality() {
                return Err(Fail::Domain(format!(
                    "rank {rank} exceeds atypicality {}",
                    d.atypicality()
                )));
            }
            if ctx.trace {
                trace_ds(ctx, &d, rank);
            }
            let res = dsr(&d, rank);
            if ctx.json {
                ctx.emit(json!({
                    "t": d.t().as_u8(), "rank": rank, "input": d.to_string(),
                    "components": components_json(&res),
                }));
            } else {
                ctx.out.push_str(&res.to_string());
            }
        }
        Cmd::Oracle { lambda, nu } => {
            let t = ctx.block()?;
            let l = WeightDiagram::parse(&lambda, t)?;
            let n = WeightDiagram::parse(&nu, t)?;
            let (m, steps) = oracle_trace(&l, &n);
            for s in &steps {
                ctx.trace_line(s.to_string());
            }
            if ctx.json {
                let steps: Vec<Value> = steps
                    .iter()
                    .map(|s| json!({"rule": s.rule, "source": s.source, "target": s.target}))
                    .collect();
                ctx.emit(json!({"d0": m.d0, "d1": m.d1, "steps": steps}));
            } else {
                ctx.line(m.to_string());
            }
        }
        Cmd::Sdim { diagram, m, n } => {
            let (d, from_weight) = ctx.resolve(&diagram)?;
            let (m, n) = match (m, n, from_weight) {
                (Some(m), Some(n), _) => (m, n),
                (None, None, Some(mn)) => mn,
                _ => return Err(Fail::Usage("sdim needs --m and --n".into())),
            };
            let s = superdimension(&d, m, n)?;
            if ctx.json {
                ctx.emit(json!({"diagram": d.to_string(), "m": m, "n": n, "sdim": s.to_string()}));
            } else {
                ctx.line(s.to_string());
            }
        }
        Cmd::Enumerate { k, width, cores } => {
            let t = ctx.block()?;
            let list = if cores == 0 {
                enumerate_corefree(t, k, width)
            } else {
                enumerate_diagrams(t, k, cores, width)
            };
            if ctx.json {
                ctx.emit(json!({"t": t.as_u8(), "k": k, "width": width,
                    "diagrams": list.iter().map(|d| d.to_string()).collect::<Vec<_>>()}));
            } else {
                for d in list {
                    ctx.line(d.to_string());
                }
            }
        }
        Cmd::Weight { diagram, m, n } => {
            let d = ctx.diagram(&diagram)?;
            let w = diagram_to_weight(&d, m, n)?;
            if ctx.json {
                ctx.emit(json!({"weight": w.to_string(), "a": w.a.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "b": w.b.iter().map(|x| x.to_string()).collect::<Vec<_>>()}));
            } else {
                ctx.line(w.to_string());
            }
        }
    }
    Ok(())
}

fn trace_ds(ctx: &mut Ctx, d: &WeightDiagram, rank: usize) {
    let mut level = vec![d.clone()];
    for step in 1..=rank {
        let mut next = Vec::new();
        for lam in &level {
            let h = howl(lam);
            let a = build_arcs(&h);
            let mut msg = format!("[{step}] {lam}  howl {h}");
            for alpha in maximal_arcs(&a) {
                let e = free_left(&a, &alpha);
                let smaller = remove_arc(&a, &alpha).expect("maximal arcs are removable");
                let _ = write!(
                    msg,
                    "\n    remove {alpha}  e={e}  {}  -> {smaller}",
                    arc_mult(lam.t(), e)
                );
            }
            ctx.trace_line(msg);
            next.extend(crate::ds::ds1(lam).components().keys().cloned());
        }
        next.sort();
        next.dedup();
        level = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("ospds").chain(args.iter().copied()))
    }

    #[test]
    fn ds_json_shape() {
        let o = go(&["ds", "+xoox", "--t", "1", "--json"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["t"], 1);
        assert_eq!(v["rank"], 1);
        assert_eq!(v["input"], "+xoox");
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys.len(), 4);
        assert_eq!(v["components"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["ds", "+xoox"]).code, 2);
        assert_eq!(go(&["ds", "+x!oox", "--t", "1"]).code, 2);
        assert!(go(&["bogus"]).stderr.contains("zerotok"));
        assert_eq!(go(&["ds", "x", "--t", "1"]).code, 1);
        assert_eq!(go(&["validate", "ox", "--t", "0"]).code, 1);
        assert_eq!(go(&["validate", "-x", "--t", "1"]).code, 0);
        assert_eq!(go(&["--help"]).code, 0);
    }

    #[test]
    fn weights_as_input() {
        let o = go(&["core", "B 1 1 / 1/2 / 1/2"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let o = go(&["sdim", "B 1 1 / 1/2 / 1/2"]);
        assert_eq!(o.stdout.trim(), "1");
    }
}
