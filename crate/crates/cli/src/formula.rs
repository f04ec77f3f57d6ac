use anyhow::{anyhow, bail, Result};
use clap::Args;
use num_bigint::BigInt;
use serde_json::Value;
use sturdy_core::constructions::g0;
use sturdy_core::formulas::*;

use crate::report::{int, Report};

#[derive(Args, Debug)]
pub struct FormulaArgs {
    /// Formula name; `--list` prints them all.
    #[arg(required_unless_present = "list")]
    pub name: Option<String>,
    #[arg(long)]
    pub list: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub t: Option<i64>,
    #[arg(long)]
    pub i: Option<i64>,
    #[arg(long)]
    pub r: Option<i64>,
    #[arg(long)]
    pub s: Option<i64>,
    #[arg(long)]
    pub u: Option<i64>,
    #[arg(long)]
    pub w: Option<i64>,
    #[arg(long)]
    pub l: Option<i64>,
    /// Member count, for the averaging bounds.
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub gamma: Option<u64>,
    /// A rational such as `1/3`.
    #[arg(long)]
    pub alpha: Option<String>,
}

/// Name, parameters, description.
const FORMULAS: &[(&str, &str, &str)] = &[
    ("binom", "a b", "C(a, b), zero outside 0 <= b <= a"),
    (
        "triangle-cases",
        "n k",
        "the four b_ij classes of T(n,k) and their minimum",
    ),
    (
        "frankl-beta",
        "n k t i",
        "sturdiness of A_i(n,k,t), i in {1,2}",
    ),
    (
        "frankl-ratio",
        "n k t",
        "beta(A_2)/beta(A_1) exactly and its large-n form",
    ),
    (
        "f0-links",
        "n k",
        "|F0(i-bar, j)| for the four classes, derived and printed coefficients",
    ),
    ("density-limit", "alpha t l", "alpha^l (1-alpha)^(t-l)"),
    ("binom-ratio", "n k t l", "C(n-t, k-l) / C(n, k)"),
    ("ekr", "n k t", "max size of a t-intersecting k-family"),
    (
        "katona",
        "n t",
        "max size of a t-intersecting family in 2^[n]",
    ),
    (
        "katona-printed",
        "n t",
        "katona with the alternative odd-case index",
    ),
    (
        "intersecting-beta",
        "n k",
        "beta bound for intersecting k-families",
    ),
    (
        "nonuniform-intersecting-beta",
        "n",
        "beta bound 2^(n-3) for intersecting families in 2^[n]",
    ),
    (
        "t-intersecting-beta",
        "n k t",
        "beta bound for t-intersecting k-families",
    ),
    (
        "nonuniform-t-intersecting-beta",
        "n t",
        "beta bound for t-intersecting families in 2^[n]",
    ),
    ("union-beta", "n u", "beta bound for u-union families"),
    (
        "shifted-r-wise-beta",
        "n k t r",
        "beta bound for shifted r-wise t-intersecting k-families",
    ),
    (
        "r-wise-beta",
        "n k t r",
        "beta bound for r-wise t-intersecting k-families",
    ),
    ("diversity-beta", "n k gamma", "k/(n-1) * gamma"),
    (
        "min-degree-product",
        "n k",
        "C(n-2, k-2)^2, bound on delta(A) delta(B) for cross-intersecting A, B",
    ),
    (
        "cross-diameter-size",
        "n w",
        "min(|A|,|B|) bound when all cross distances are <= w",
    ),
    (
        "diameter-beta",
        "n w",
        "beta bound for families of diameter <= w",
    ),
    ("cross-intersecting-sum", "n k t", "1 + C(n,k) - C(n-k-t,k)"),
    ("t-intersecting-size", "n k t", "C(n, k-t)"),
    (
        "hilton-milner",
        "n k",
        "max size of a non-trivial intersecting k-family",
    ),
    ("average-beta", "n m", "n/(4(n-1)) * m"),
    (
        "odd-average-beta",
        "n m",
        "(l+1)/(2(2l+1)) * m for n = 2l+1",
    ),
    (
        "iu-beta",
        "n",
        "conjectured beta bound 2^(n-4) for IU families",
    ),
    (
        "odd-union-conjectured-beta",
        "n s",
        "conjectured beta bound for (2s+1)-union families",
    ),
];

fn get(v: Option<i64>, flag: &str, name: &str) -> Result<i64> {
    v.ok_or_else(|| anyhow!("{name} needs --{flag}"))
}

fn parse_rational(text: &str) -> Result<ExactRational> {
    let bad = || anyhow!("--alpha must look like 1/3, got `{text}`");
    let (p, q) = text.split_once('/').unwrap_or((text, "1"));
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(ExactRational::new(p, q))
}

pub fn listing() -> (Report, String) {
    let mut r = Report::new("formula --list");
    let mut text = String::new();
    for (name, params, what) in FORMULAS {
        r.result(name, Value::String(format!("{params}: {what}")));
        let flags = params
            .split(' ')
            .map(|p| format!("--{p}"))
            .collect::<Vec<_>>()
            .join(" ");
        text.push_str(&format!("{name:<32} {flags:<24} {what}\n"));
    }
    (r, text)
}

pub fn evaluate(args: &FormulaArgs) -> Result<(Report, String)> {
    if args.list {
        return Ok(listing());
    }
    let name = args.name.as_deref().expect("clap enforces a name");
    let g = |v: Option<i64>, flag: &str| get(v, flag, name);
    let mut r = Report::new("formula");
    r.param("name", name);
    let mut lines: Vec<(String, String)> = Vec::new();
    let mut put = |r: &mut Report, key: &str, value: String| {
        r.result(key, Value::String(value.clone()));
        lines.push((key.to_string(), value));
    };

    let bound: Option<Bound> = match name {
        "binom" => {
            let (a, b) = (g(args.a, "a")?, g(args.b, "b")?);
            put(&mut r, "value", binom(a, b).to_string());
            None
        }
        "triangle-cases" => {
            let (n, k) = (g(args.n, "n")?, g(args.k, "k")?);
            let c = triangle_beta_cases(n, k)?;
            put(&mut r, "both_outside", c.both_outside.to_string());
            put(&mut r, "inside_outside", c.inside_outside.to_string());
            put(&mut r, "outside_inside", c.outside_inside.to_string());
            put(&mut r, "both_inside", c.both_inside.to_string());
            put(&mut r, "min", c.min.to_string());
            None
        }
        "frankl-beta" => {
            let v = frankl_beta(
                g(args.n, "n")?,
                g(args.k, "k")?,
                g(args.t, "t")?,
                g(args.i, "i")?,
            )?;
            put(&mut r, "value", v.to_string());
            None
        }
        "frankl-ratio" => {
            let q = frankl_beta_ratio(g(args.n, "n")?, g(args.k, "k")?, g(args.t, "t")?)?;
            put(&mut r, "c", render_rational(&q.c));
            put(&mut r, "exact", render_rational(&q.exact));
            put(&mut r, "exact_decimal", format!("{:.6}", to_f64(&q.exact)));
            put(&mut r, "asymptotic", render_rational(&q.asymptotic));
            None
        }
        "f0-links" => {
            let (n, k) = (g(args.n, "n")?, g(args.k, "k")?);
            let stats = G0Stats::from_family(&g0()?)?;
            let derived = f0_link_formulas(n, k, &stats)?;
            let printed = f0_link_counts(n, k, &F0_PRINTED)?;
            for (key, d, p) in [
                ("both_outside", &derived.both_outside, &printed.both_outside),
                (
                    "inside_outside",
                    &derived.inside_outside,
                    &printed.inside_outside,
                ),
                (
                    "outside_inside",
                    &derived.outside_inside,
                    &printed.outside_inside,
                ),
                ("both_inside", &derived.both_inside, &printed.both_inside),
            ] {
                put(&mut r, key, d.to_string());
                put(&mut r, &format!("{key}_printed"), p.to_string());
            }
            None
        }
        "density-limit" => {
            let alpha = parse_rational(
                args.alpha
                    .as_deref()
                    .ok_or_else(|| anyhow!("density-limit needs --alpha"))?,
            )?;
            let t = u32::try_from(g(args.t, "t")?)?;
            let l = u32::try_from(g(args.l, "l")?)?;
            put(
                &mut r,
                "value",
                render_rational(&density_limit(&alpha, t, l)?),
            );
            None
        }
        "binom-ratio" => {
            let v = binom_ratio(
                g(args.n, "n")?,
                g(args.k, "k")?,
                g(args.t, "t")?,
                g(args.l, "l")?,
            )?;
            put(&mut r, "value", render_rational(&v));
            put(&mut r, "decimal", format!("{:.6}", to_f64(&v)));
            None
        }
        "ekr" => Some(ekr_bound(g(args.n, "n")?, g(args.k, "k")?, g(args.t, "t")?)),
        "katona" => Some(katona_bound(g(args.n, "n")?, g(args.t, "t")?)),
        "katona-printed" => Some(katona_bound_printed(g(args.n, "n")?, g(args.t, "t")?)),
        "intersecting-beta" => Some(intersecting_beta_bound(g(args.n, "n")?, g(args.k, "k")?)),
        "nonuniform-intersecting-beta" => Some(nonuniform_intersecting_beta_bound(g(args.n, "n")?)),
        "t-intersecting-beta" => Some(t_intersecting_beta_bound(
            g(args.n, "n")?,
            g(args.k, "k")?,
            g(args.t, "t")?,
        )),
        "nonuniform-t-intersecting-beta" => Some(nonuniform_t_intersecting_beta_bound(
            g(args.n, "n")?,
            g(args.t, "t")?,
        )),
        "union-beta" => Some(union_beta_bound(g(args.n, "n")?, g(args.u, "u")?)),
        "shifted-r-wise-beta" => Some(shifted_r_wise_beta_bound(
            g(args.n, "n")?,
            g(args.k, "k")?,
            g(args.t, "t")?,
            g(args.r, "r")?,
        )),
        "r-wise-beta" => Some(r_wise_beta_bound(
            g(args.n, "n")?,
            g(args.k, "k")?,
            g(args.t, "t")?,
            g(args.r, "r")?,
        )),
        "diversity-beta" => {
            let gamma = args
                .gamma
                .ok_or_else(|| anyhow!("diversity-beta needs --gamma"))?;
            Some(diversity_beta_bound(
                g(args.n, "n")?,
                g(args.k, "k")?,
                gamma,
            ))
        }
        "min-degree-product" => Some(min_degree_product_bound(g(args.n, "n")?, g(args.k, "k")?)),
        "cross-diameter-size" => Some(cross_diameter_size_bound(g(args.n, "n")?, g(args.w, "w")?)),
        "diameter-beta" => Some(diameter_beta_bound(g(args.n, "n")?, g(args.w, "w")?)),
        "cross-intersecting-sum" => Some(cross_intersecting_sum_bound(
            g(args.n, "n")?,
            g(args.k, "k")?,
            g(args.t, "t")?,
        )),
        "t-intersecting-size" => Some(t_intersecting_size_bound(
            g(args.n, "n")?,
            g(args.k, "k")?,
            g(args.t, "t")?,
        )),
        "hilton-milner" => Some(hilton_milner_bound(g(args.n, "n")?, g(args.k, "k")?)),
        "average-beta" | "odd-average-beta" => {
            let m = args.m.ok_or_else(|| anyhow!("{name} needs --m"))?;
            let n = g(args.n, "n")?;
            Some(if name == "average-beta" {
                average_beta_bound(n, m)
            } else {
                odd_average_beta_bound(n, m)
            })
        }
        "iu-beta" => Some(iu_beta_bound(g(args.n, "n")?)),
        "odd-union-conjectured-beta" => Some(odd_union_conjectured_beta_bound(
            g(args.n, "n")?,
            g(args.s, "s")?,
        )),
        other => bail!("unknown formula `{other}`; run `formula --list`"),
    };
    if let Some(b) = bound {
        put(&mut r, "value", render_rational(&b.value));
        r.result("applicable", b.applicable);
        lines.push(("applicable".into(), b.applicable.to_string()));
    }
    for (flag, v) in [
        ("a", args.a),
        ("b", args.b),
        ("n", args.n),
        ("k", args.k),
        ("t", args.t),
        ("i", args.i),
        ("r", args.r),
        ("s", args.s),
        ("u", args.u),
        ("w", args.w),
        ("l", args.l),
    ] {
        if let Some(v) = v {
            r.param(flag, int(v));
        }
    }
    if let Some(m) = args.m {
        r.param("m", int(m));
    }
    if let Some(gm) = args.gamma {
        r.param("gamma", int(gm));
    }
    if let Some(a) = &args.alpha {
        r.param("alpha", a.as_str());
    }
    let text = lines.iter().map(|(k, v)| format!("{k} {v}\n")).collect();
    Ok((r, text))
}
