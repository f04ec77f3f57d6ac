use std::io::{Read, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use serde_json::json;
use sturdy_core::constructions::FamilySpec;
use sturdy_core::formulas::render_rational;
use sturdy_core::metrics::*;
use sturdy_core::search::{
    max_beta, probe_conjecture, ConstraintSpec, SearchOptions, SearchResult,
};
use sturdy_core::transforms::*;
use sturdy_core::{parse_family, serialize_family, SetFamily, Subset};

use crate::report::{int, ints, Report};
use crate::{
    claims, formula, Budget, CheckArgs, Cli, Command, SearchCommand, Status, TransformArgs,
};

pub fn read_family(path: &str) -> Result<SetFamily> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    parse_family(&text).with_context(|| format!("parsing {path}"))
}

fn write_text(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn parse_subset(text: &str) -> Result<Subset> {
    if text.is_empty() || text == "-" {
        return Ok(Subset::EMPTY);
    }
    let elems = text
        .split(['.', ','])
        .map(|e| {
            e.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("bad element `{e}` in `{text}`"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subset::from_elements(elems)?)
}

struct Out<'a> {
    cli: &'a Cli,
    start: Instant,
}

impl Out<'_> {
    fn elapsed(&self) -> Option<Duration> {
        self.cli.timing.then(|| self.start.elapsed())
    }

    /// Prints the JSON report or the text form, whichever was asked for.
    fn emit(&self, report: &Report, text: &str) -> Result<()> {
        let mut stdout = std::io::stdout();
        if self.cli.json {
            stdout.write_all(report.to_json(self.elapsed()).as_bytes())?;
        } else {
            stdout.write_all(text.as_bytes())?;
            if let Some(t) = self.elapsed() {
                eprintln!("time {:.3}s", t.as_secs_f64());
            }
        }
        Ok(())
    }
}

pub fn run(cli: &Cli, start: Instant) -> Result<Status> {
    let out = Out { cli, start };
    match &cli.command {
        Command::Construct { spec, output } => construct(&out, spec, output.as_deref()),
        Command::Metrics { file, matrix } => metrics(&out, file, *matrix),
        Command::Check(args) => check(&out, args),
        Command::Transform(args) => transform(&out, args),
        Command::Formula(args) => {
            let (report, text) = formula::evaluate(args)?;
            out.emit(&report, &text)?;
            Ok(Status::Ok)
        }
        Command::Search { action } => search(&out, action),
        Command::Verify { ids, all, list } => {
            if *list {
                let (report, text) = claims::listing();
                out.emit(&report, &text)?;
                return Ok(Status::Ok);
            }
            let selected = if *all || ids.is_empty() {
                claims::ids()
            } else {
                ids.clone()
            };
            let (report, text, passed) = claims::verify(&selected, cli.seed, cli.workers)?;
            out.emit(&report, &text)?;
            Ok(if passed {
                Status::Ok
            } else {
                Status::CheckFailed
            })
        }
    }
}

fn construct(out: &Out, spec: &str, output: Option<&Path>) -> Result<Status> {
    let parsed = FamilySpec::parse(spec, |path| {
        read_family(path).map_err(|e| sturdy_core::Error::InvalidParameter(format!("{e:#}")))
    })?;
    let f = parsed.build()?;
    if out.cli.json {
        let mut r = Report::new("construct");
        r.param("spec", parsed.to_string())
            .result("n", int(f.n()))
            .result("members", int(f.len()))
            .witness("family", &f);
        let text = r.to_json(out.elapsed());
        write_text(output, &text)?;
    } else {
        write_text(output, &serialize_family(&f))?;
    }
    Ok(Status::Ok)
}

fn matrix_rows(f: &SetFamily) -> Vec<Vec<u64>> {
    let lm = link_matrix(f);
    (1..=f.n())
        .map(|i| (1..=f.n()).map(|j| lm.get(i, j)).collect())
        .collect()
}

fn metrics(out: &Out, file: &str, with_matrix: bool) -> Result<Status> {
    let f = read_family(file)?;
    let m = metric_report(&f);
    let mut r = Report::new("metrics");
    r.param("file", file).param("matrix", with_matrix);
    r.result("n", int(f.n()))
        .result("members", int(m.members))
        .result(
            "uniformity",
            m.uniformity.map_or(serde_json::Value::Null, int),
        )
        .result("beta", m.beta.map_or(serde_json::Value::Null, int))
        .result("gamma", int(m.gamma))
        .result("delta", int(m.delta))
        .result("degrees", ints(&m.degrees));
    let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    let mut text = format!(
        "n {}\nmembers {}\nuniformity {}\nbeta {}\ngamma {}\ndelta {}\ndegrees {}\n",
        f.n(),
        m.members,
        opt(m.uniformity.map(|k| k.to_string())),
        opt(m.beta.map(|b| b.to_string())),
        m.gamma,
        m.delta,
        m.degrees
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    if with_matrix {
        let rows = matrix_rows(&f);
        r.result(
            "matrix",
            rows.iter().map(ints).collect::<Vec<_>>(),
        );
        text.push_str("matrix\n");
        for row in &rows {
            text.push_str(&row.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
            text.push('\n');
        }
    }
    out.emit(&r, &text)?;
    Ok(Status::Ok)
}

fn need<T: Copy>(value: Option<T>, flag: &str, what: &str) -> Result<T> {
    value.ok_or_else(|| anyhow!("{what} needs --{flag}"))
}

/// First pair (a member with itself included) that is disjoint or covers `[n]`.
fn iu_violation(f: &SetFamily) -> Option<(Subset, Subset)> {
    let full = f.ground();
    let ms = f.members();
    ms.iter().enumerate().find_map(|(idx, &a)| {
        ms[idx..]
            .iter()
            .find(|&&b| (a & b).is_empty() || (a | b) == full)
            .map(|&b| (a, b))
    })
}

fn split_violation(f: &SetFamily, x: Subset) -> Option<(Subset, Subset)> {
    let y = f.ground() - x;
    let ms = f.members();
    ms.iter().enumerate().find_map(|(idx, &a)| {
        ms[idx..]
            .iter()
            .find(|&&b| (a & b & x).is_empty() || (!y.is_empty() && ((a | b) & y) == y))
            .map(|&b| (a, b))
    })
}

fn check(out: &Out, args: &CheckArgs) -> Result<Status> {
    let f = read_family(&args.file)?;
    let pred = args.predicate.as_str();
    let mut r = Report::new("check");
    r.param("predicate", pred).param("file", args.file.as_str());
    let pair = |p: Option<(Subset, Subset)>| p.map(|(a, b)| vec![a, b]);
    let (holds, witness, extra): (bool, Option<Vec<Subset>>, Option<String>) = match pred {
        "intersecting" => {
            let w = pair(t_intersecting_violation(&f, 1));
            (w.is_none(), w, None)
        }
        "t-intersecting" => {
            let t = need(args.t, "t", pred)?;
            r.param("t", int(t));
            let w = pair(t_intersecting_violation(&f, t));
            (w.is_none(), w, None)
        }
        "r-wise" => {
            let (rr, t) = (need(args.r, "r", pred)?, need(args.t, "t", pred)?);
            r.param("r", int(rr)).param("t", int(t));
            let w = r_wise_violation(&f, rr, t);
            (w.is_none(), w, None)
        }
        "u-union" => {
            let u = need(args.u, "u", pred)?;
            r.param("u", int(u));
            let w = pair(u_union_violation(&f, u));
            (w.is_none(), w, None)
        }
        "diameter" => {
            let w = need(args.w, "w", pred)?;
            r.param("w", int(w));
            if f.is_empty() {
                (true, None, None)
            } else {
                let (d, a, b) = diameter_pair(&f)?;
                r.result("diameter", int(d));
                (d <= w, (d > w).then(|| vec![a, b]), Some(format!("diameter {d}")))
            }
        }
        "shifted" => {
            let w = shift_witness(&f);
            let extra = w.map(|(_, i, j)| format!("S_{i}{j} moves it"));
            (w.is_none(), w.map(|(s, _, _)| vec![s]), extra)
        }
        "hamming-ball" => match is_hamming_ball(&f)? {
            Some((center, radius)) => {
                r.result("center", center.to_string()).result("radius", int(radius));
                (true, None, Some(format!("center {center} radius {radius}")))
            }
            None => (false, None, None),
        },
        "iu" => {
            let w = pair(iu_violation(&f));
            (w.is_none(), w, None)
        }
        "split" => {
            let x = parse_subset(args.x.as_deref().ok_or_else(|| anyhow!("split needs --x"))?)?;
            if !x.is_subset_of(f.ground()) {
                bail!("--x {x} is not inside [{}]", f.n());
            }
            r.param("x", x.to_string());
            let w = pair(split_violation(&f, x));
            debug_assert_eq!(w.is_none(), split_check(&f, x));
            (w.is_none(), w, None)
        }
        other => bail!(
            "unknown predicate `{other}`; expected intersecting, t-intersecting, r-wise, u-union, diameter, shifted, hamming-ball, iu or split"
        ),
    };
    r.verdict("holds", holds);
    if let Some(w) = &witness {
        r.verdict(
            "witness",
            w.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        );
    }
    let mut text = if holds {
        "holds".to_string()
    } else {
        "fails".to_string()
    };
    if let Some(w) = &witness {
        text.push_str(": ");
        text.push_str(
            &w.iter()
                .map(Subset::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        );
    }
    if let Some(e) = extra {
        text.push_str(&format!(" ({e})"));
    }
    text.push('\n');
    out.emit(&r, &text)?;
    Ok(if holds {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

fn transform(out: &Out, args: &TransformArgs) -> Result<Status> {
    let f = read_family(&args.file)?;
    let mut r = Report::new("transform");
    r.param("kind", args.kind.as_str())
        .param("file", args.file.as_str());
    let mut comments = Vec::new();
    let result = match args.kind.as_str() {
        "shift" => match (args.i, args.j) {
            (Some(i), Some(j)) => {
                r.param("i", int(i)).param("j", int(j));
                shift_once(&f, i, j)?
            }
            (None, None) => shift_closure(&f),
            _ => bail!("shift takes both --i and --j, or neither"),
        },
        "saturate" => {
            let t = args.t.unwrap_or(1);
            r.param("t", int(t));
            saturate(&f, t)?
        }
        "basis" => {
            let t = args.t.unwrap_or(1);
            r.param("t", int(t));
            let b = basis(&f, t)?;
            r.result("min_size", int(b.min_size()));
            comments.push(format!("tau_t {}", b.min_size()));
            if let Ok(levels) = basis_levels(&b) {
                let sum = basis_weight_sum(&levels);
                r.result("r", int(levels.r))
                    .result("weight_sum", render_rational(&sum));
                comments.push(format!("r {}", levels.r));
                comments.push(format!("weight_sum {}", render_rational(&sum)));
            }
            let check = basis_avoidance_check(&f, t);
            match &check.not_applicable {
                Some(why) => {
                    r.result("avoidance", json!({ "applicable": false, "reason": why }));
                }
                None => {
                    r.result(
                        "avoidance",
                        json!({
                            "applicable": true,
                            "bound": int(check.bound),
                            "counts": check.counts.iter().map(|(s, c)| json!([int(s), int(c)])).collect::<Vec<_>>(),
                            "holds": check.holds,
                        }),
                    );
                    comments.push(format!(
                        "avoidance bound {} holds {}",
                        check.bound, check.holds
                    ));
                }
            }
            b.as_family()
        }
        "generated" => {
            let k = need(args.k, "k", "generated")?;
            r.param("k", int(k));
            generated(f.members(), f.n(), k)?
        }
        other => bail!("unknown transform `{other}`; expected shift, saturate, basis or generated"),
    };
    r.result("members", int(result.len()))
        .witness("family", &result);
    let text = if out.cli.json {
        r.to_json(out.elapsed())
    } else {
        let mut s = String::new();
        for c in &comments {
            s.push_str(&format!("# {c}\n"));
        }
        s.push_str(&serialize_family(&result));
        s
    };
    write_text(args.output.as_deref(), &text)?;
    Ok(Status::Ok)
}

fn options(out: &Out, budget: &Budget) -> Result<SearchOptions> {
    let mut opts = SearchOptions::default().with_workers(out.cli.workers);
    if let Some(n) = budget.budget_nodes {
        opts = opts.with_max_nodes(n);
    }
    if let Some(s) = budget.budget_secs {
        if !(s.is_finite() && s > 0.0) {
            bail!("--budget-secs must be positive");
        }
        opts.max_duration = Some(Duration::from_secs_f64(s));
    }
    Ok(opts)
}

fn constraint(
    kind: &str,
    n: usize,
    k: Option<usize>,
    t: Option<usize>,
    u: Option<usize>,
    w: Option<usize>,
) -> Result<ConstraintSpec> {
    let c = match kind.replace('_', "-").as_str() {
        "t-intersecting-uniform" => ConstraintSpec::TIntersectingUniform { n, k: need(k, "k", kind)?, t: t.unwrap_or(1) },
        "t-intersecting-any" => ConstraintSpec::TIntersectingAny { n, t: t.unwrap_or(1) },
        "u-union" => ConstraintSpec::UUnion { n, u: need(u, "u", kind)? },
        "diameter" => ConstraintSpec::Diameter { n, w: need(w, "w", kind)? },
        "iu" => ConstraintSpec::Iu { n },
        other => bail!("unknown constraint `{other}`; expected t-intersecting-uniform, t-intersecting-any, u-union, diameter or iu"),
    };
    c.validate()?;
    Ok(c)
}

fn search_results(r: &mut Report, res: &SearchResult) {
    r.result("max_beta", int(res.max_beta))
        .result("families_enumerated", int(res.families_enumerated))
        .result("nodes", int(res.nodes))
        .result("exhausted", res.exhausted)
        .witness("witness", &res.witness);
}

fn search_text(res: &SearchResult) -> String {
    format!(
        "max_beta {}\nfamilies {}\nnodes {}\nexhausted {}\nwitness\n{}",
        res.max_beta,
        res.families_enumerated,
        res.nodes,
        res.exhausted,
        serialize_family(&res.witness)
    )
}

fn search(out: &Out, action: &SearchCommand) -> Result<Status> {
    let res = match action {
        SearchCommand::MaxBeta {
            constraint: kind,
            n,
            k,
            t,
            u,
            w,
            budget,
        } => {
            let c = constraint(kind, *n, *k, *t, *u, *w)?;
            let res = max_beta(&c, &options(out, budget)?)?;
            let mut r = Report::new("search max-beta");
            r.param("constraint", c.to_string());
            search_results(&mut r, &res);
            out.emit(&r, &format!("constraint {c}\n{}", search_text(&res)))?;
            res
        }
        SearchCommand::Probe {
            conjecture,
            n,
            s,
            budget,
        } => {
            let p = probe_conjecture(conjecture.parse()?, *n, *s, &options(out, budget)?)?;
            let mut r = Report::new("search probe");
            r.param("conjecture", p.conjecture.id())
                .param("n", int(p.n))
                .param("constraint", p.constraint.to_string());
            if let Some(s) = p.s {
                r.param("s", int(s));
            }
            r.result("bound", render_rational(&p.bound.value))
                .result("bound_applicable", p.bound.applicable);
            search_results(&mut r, &p.result);
            r.verdict("within_bound", p.within_bound);
            let text = format!(
                "conjecture {}\nconstraint {}\nbound {}{}\nwithin_bound {}\n{}",
                p.conjecture.id(),
                p.constraint,
                render_rational(&p.bound.value),
                if p.bound.applicable {
                    ""
                } else {
                    " (outside the conjectured range of n)"
                },
                p.within_bound,
                search_text(&p.result)
            );
            out.emit(&r, &text)?;
            p.result
        }
    };
    Ok(if res.exhausted {
        Status::Ok
    } else {
        Status::BudgetExceeded
    })
}
