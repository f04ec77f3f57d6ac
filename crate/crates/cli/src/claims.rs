//! The `verify` registry: each claim id maps to a deterministic check.
//! Checks recount β by scanning members directly instead of going through
//! the link-matrix code they are checking.

use anyhow::{bail, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use sturdy_core::constructions::*;
use sturdy_core::family::{complement_family, k_subsets};
use sturdy_core::formulas::*;
use sturdy_core::metrics::*;
use sturdy_core::sample::{random_family, random_t_intersecting, random_uniform_family};
use sturdy_core::search::{
    fold_maximal, max_beta, maximal_families, ConstraintSpec, SearchOptions,
};
use sturdy_core::transforms::*;
use sturdy_core::{SetFamily, Subset};

use crate::report::{int, Report};

pub struct Ctx {
    rng: ChaCha8Rng,
    opts: SearchOptions,
}

#[derive(Default)]
pub struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
    values: Vec<(String, Value)>,
}

impl Outcome {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.push((key.into(), v.into()));
    }
}

struct Claim {
    id: &'static str,
    anchor: &'static str,
    run: fn(&mut Ctx, &mut Outcome) -> Result<()>,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "eq5",
        anchor: "β(2^[n]) = 2^(n-2)",
        run: eq5,
    },
    Claim {
        id: "eq6",
        anchor: "β(C([n],k)) = C(n-2,k-1)",
        run: eq6,
    },
    Claim {
        id: "prop12-duality",
        anchor: "β(F) = β(F^c) where F^c = {[n] \\ F : F ∈ F}",
        run: duality,
    },
    Claim {
        id: "eq3-monotonicity",
        anchor: "F ⊂ F' implies b_ij(F) ≤ b_ij(F') for all i ≠ j",
        run: monotonicity,
    },
    Claim {
        id: "claim16",
        anchor: "β(T(n,k)) = C(n-4,k-3) for T(n,k) = {F : |F ∩ [3]| ≥ 2}",
        run: claim16,
    },
    Claim {
        id: "ineq9",
        anchor: "β(F) ≤ k/(n-1) · γ(F) for k-uniform F",
        run: ineq9,
    },
    Claim {
        id: "cor22",
        anchor: "shifted r-wise t-intersecting k-families: β ≤ C(n-t-r-1,k-t-r)",
        run: cor22,
    },
    Claim {
        id: "frankl-beta",
        anchor: "β(A_1) = C(n-t-3,k-t-2); β(A_2) = (t+3)C(n-t-5,k-t-3) + C(n-t-5,k-t-4)",
        run: frankl_beta_claim,
    },
    Claim {
        id: "frankl-ratio",
        anchor: "β(A_2)/β(A_1) ≈ (t+3)/c - (t+2)/c² with c = (n-t-4)/(k-t-3)",
        run: frankl_ratio_claim,
    },
    Claim {
        id: "g0-prop51",
        anchor: "G0 ⊂ C([6],3): 10 members, 5-regular, intersecting, τ = 3",
        run: g0_claim,
    },
    Claim {
        id: "f0-prop36",
        anchor: "|F0(ī,j)| class formulas for F0 = {F : F ⊇ G for some G ∈ G0}",
        run: f0_claim,
    },
    Claim {
        id: "lemma41",
        anchor: "a saturated t-intersecting k-family is generated by its basis",
        run: lemma41,
    },
    Claim {
        id: "lemma42",
        anchor: "Σ_{r≤ℓ≤k} |B^(ℓ)| / (C(ℓ,t) ℓ k^(ℓ-t-1)) ≤ 1 when τ_t ≥ t+1",
        run: lemma42,
    },
    Claim {
        id: "lemma43",
        anchor: "τ_t = t+2: each y is avoided by ≤ 4(t+1)(k-t+2) basis members of size t+2",
        run: lemma43,
    },
    Claim {
        id: "fact51",
        anchor: "β(F) ≤ n/(4(n-1)) · |F|; (ℓ+1)/(2(2ℓ+1)) · |F| for n = 2ℓ+1",
        run: fact51,
    },
    Claim {
        id: "thm18i",
        anchor: "t-intersecting F ⊂ 2^[n] with n-t = 2s: β ≤ Σ_{j<s} C(n-2,j)",
        run: thm18i,
    },
    Claim {
        id: "thm56-tight",
        anchor: "diameter ≤ 2s: β ≤ Σ_{j<s} C(n-2,j), attained by B_s(∅)",
        run: thm56_tight,
    },
    Claim {
        id: "example511",
        anchor: "β(G ∪ {F : |F| ≤ s}) = β(G) + Σ_{j<s} C(n-2,j) for intersecting G ⊂ C([n],s+1)",
        run: example511,
    },
    Claim {
        id: "fact64",
        anchor: "IU family with an intersecting/union split [n] = X ∪ Y: β ≤ 2^(n-4)",
        run: fact64,
    },
    Claim {
        id: "katona-bruteforce",
        anchor: "max |F| over t-intersecting F ⊂ 2^[n] (Katona), against exhaustive search",
        run: katona_claim,
    },
    Claim {
        id: "thm15",
        anchor: "intersecting F ⊂ 2^[n]: β ≤ 2^(n-3)",
        run: thm15,
    },
];

pub fn ids() -> Vec<String> {
    CLAIMS.iter().map(|c| c.id.to_string()).collect()
}

pub fn listing() -> (Report, String) {
    let mut r = Report::new("verify --list");
    let mut text = String::new();
    for c in CLAIMS {
        r.result(c.id, c.anchor);
        text.push_str(&format!("{:<18} {}\n", c.id, c.anchor));
    }
    (r, text)
}

pub fn verify(selected: &[String], seed: u64, workers: usize) -> Result<(Report, String, bool)> {
    let mut claims = Vec::new();
    for id in selected {
        match CLAIMS.iter().position(|c| c.id == id) {
            Some(idx) => claims.push(idx),
            None => bail!("unknown claim `{id}`; run `verify --list`"),
        }
    }
    let mut report = Report::new("verify");
    report
        .param("claims", selected.to_vec())
        .param("seed", int(seed));
    let mut text = String::new();
    let mut results = Vec::new();
    let mut passed = 0;
    for idx in &claims {
        let claim = &CLAIMS[*idx];
        let mut ctx = Ctx {
            rng: ChaCha8Rng::seed_from_u64(
                seed ^ (*idx as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
            ),
            opts: SearchOptions::default().with_workers(workers),
        };
        let mut out = Outcome::default();
        if let Err(e) = (claim.run)(&mut ctx, &mut out) {
            out.failures.push(format!("error: {e:#}"));
        }
        let ok = out.failures.is_empty();
        passed += ok as usize;
        let mut detail = out.notes.join("; ");
        if !ok {
            detail = format!(
                "{}{}",
                out.failures.join("; "),
                if detail.is_empty() {
                    String::new()
                } else {
                    format!(" [{detail}]")
                }
            );
        }
        text.push_str(&format!(
            "[{}] {:<18} {}\n",
            if ok { "PASS" } else { "FAIL" },
            claim.id,
            detail
        ));
        let values: serde_json::Map<String, Value> = out.values.into_iter().collect();
        results.push(json!({
            "id": claim.id,
            "anchor": claim.anchor,
            "verdict": if ok { "pass" } else { "fail" },
            "notes": out.notes,
            "failures": out.failures,
            "values": values,
        }));
    }
    let failed = claims.len() - passed;
    text.push_str(&format!("{passed} passed, {failed} failed\n"));
    report
        .result("claims", results)
        .verdict("passed", int(passed))
        .verdict("failed", int(failed));
    Ok((report, text, failed == 0))
}

// Oracles -------------------------------------------------------------------

fn brute_b(f: &SetFamily, i: usize, j: usize) -> u64 {
    f.iter().filter(|m| m.contains(i) && !m.contains(j)).count() as u64
}

fn brute_beta(f: &SetFamily) -> u64 {
    let n = f.n();
    (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| brute_b(f, i, j))
        .min()
        .unwrap_or(0)
}

fn c(n: i64, k: i64) -> BigInt {
    binom(n, k)
}

fn prefix(n: i64, s: i64) -> u64 {
    (0..=s)
        .map(|j| u64::try_from(c(n, j)).expect("small binomial"))
        .sum()
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

// Checks --------------------------------------------------------------------

fn eq5(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    for n in 2..=12 {
        let beta = brute_beta(&power_set(n)?);
        out.expect(beta == 1 << (n - 2), || format!("n={n}: β = {beta}"));
        out.expect(sturdiness(&power_set(n)?)? == beta, || {
            format!("n={n}: library disagrees")
        });
    }
    out.note("n = 2..12");
    Ok(())
}

fn eq6(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    for n in 2..=11usize {
        for k in 0..=n {
            let beta = brute_beta(&k_level(n, k)?);
            let want = c(n as i64 - 2, k as i64 - 1);
            out.expect(big(beta) == want, || {
                format!("(n,k)=({n},{k}): β = {beta}, want {want}")
            });
        }
    }
    out.note("n = 2..11, every k");
    Ok(())
}

fn duality(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    for idx in 0..1000 {
        let n = ctx.rng.gen_range(2..=10);
        let p = ctx.rng.gen_range(0.02..0.8);
        let f = random_family(&mut ctx.rng, n, p)?;
        let (a, b) = (brute_beta(&f), brute_beta(&complement_family(&f)));
        out.expect(a == b, || {
            format!("random family #{idx}: β = {a}, β(F^c) = {b}")
        });
    }
    out.note("1000 random families, n <= 10");
    Ok(())
}

fn monotonicity(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    for idx in 0..1000 {
        let n = ctx.rng.gen_range(2..=10);
        let (p, q) = (ctx.rng.gen_range(0.02..0.6), ctx.rng.gen_range(0.0..0.3));
        let f = random_family(&mut ctx.rng, n, p)?;
        let bigger = f.union(&random_family(&mut ctx.rng, n, q)?)?;
        out.expect(link_matrix(&f).dominated_by(&link_matrix(&bigger)), || {
            format!("random pair #{idx}")
        });
    }
    out.note("1000 random pairs F ⊂ F', n <= 10");
    Ok(())
}

fn claim16(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    for (n, k) in [(8i64, 4i64), (9, 3), (10, 4), (10, 5), (12, 4)] {
        let beta = brute_beta(&triangle(n as usize, k as usize)?);
        let cases = triangle_beta_cases(n, k)?;
        out.expect(big(beta) == c(n - 4, k - 3), || {
            format!("T({n},{k}): β = {beta}")
        });
        out.expect(cases.min == big(beta), || {
            format!("T({n},{k}): case minimum {}", cases.min)
        });
        if (n, k) == (8, 4) {
            out.value("beta_T_8_4", int(beta));
            out.note(format!("β(T(8,4)) = {beta} = C(4,1)"));
        }
    }
    Ok(())
}

fn ineq9(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let mut fams = vec![
        triangle(8, 4)?,
        star(8, 4, 1)?,
        frankl(10, 5, 1, 2)?,
        f0(9, 4)?,
        k_level(7, 3)?,
    ];
    for _ in 0..500 {
        let n = ctx.rng.gen_range(3..=10);
        let k = ctx.rng.gen_range(1..n);
        let p = ctx.rng.gen_range(0.05..0.9);
        fams.push(random_uniform_family(&mut ctx.rng, n, k, p)?);
    }
    for (idx, f) in fams.iter().enumerate() {
        let Some(k) = f.uniformity() else { continue };
        let bound = diversity_beta_bound(f.n() as i64, k as i64, diversity(f));
        let beta = brute_beta(f);
        out.expect(bound.admits(beta), || {
            format!("family #{idx}: β = {beta} > {}", bound.value)
        });
    }
    out.note(format!("{} uniform families", fams.len()));
    Ok(())
}

fn cor22(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let mut checked = 0;
    let mut run =
        |out: &mut Outcome, label: String, f: &SetFamily, k: usize, t: usize, r: usize| {
            let bound = shifted_r_wise_beta_bound(f.n() as i64, k as i64, t as i64, r as i64);
            let hyp = bound.applicable && is_shifted(f) && is_r_wise_t_intersecting(f, r, t);
            out.expect(hyp, || format!("{label}: outside the hypotheses"));
            let beta = brute_beta(f);
            out.expect(bound.admits(beta), || {
                format!("{label}: β = {beta} > {}", bound.value)
            });
            checked += 1;
        };
    for n in 12..=14 {
        for i in 1..=3 {
            run(
                out,
                format!("A_{i}({n},4,1)"),
                &frankl(n, 4, 1, i)?,
                4,
                1,
                2,
            );
        }
    }
    for idx in 0..10 {
        let f = shift_closure(&random_t_intersecting(&mut ctx.rng, 12, 4, 1, 60)?);
        run(out, format!("shifted random #{idx}"), &f, 4, 1, 2);
    }
    out.note(format!(
        "{checked} shifted 2-wise intersecting 4-families, n >= 12"
    ));
    Ok(())
}

fn frankl_beta_claim(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    for (n, k, t, i) in [
        (10usize, 5usize, 2usize, 1usize),
        (12, 6, 1, 2),
        (8, 4, 1, 1),
        (11, 5, 1, 1),
        (11, 6, 1, 2),
    ] {
        let beta = brute_beta(&frankl(n, k, t, i)?);
        let formula = frankl_beta(n as i64, k as i64, t as i64, i as i64)?;
        out.expect(big(beta) == formula, || {
            format!("A_{i}({n},{k},{t}): brute {beta}, formula {formula}")
        });
        out.value(&format!("A{i}({n},{k},{t})"), int(beta));
    }
    out.note("β(A_2(12,6,1)) = 66");
    Ok(())
}

fn frankl_ratio_claim(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let five_quarters = BigRational::new(5.into(), 4.into());
    let q50 = frankl_beta_ratio(97, 50, 1)?;
    let q200 = frankl_beta_ratio(397, 200, 1)?;
    let (e50, e200) = (to_f64(&q50.exact), to_f64(&q200.exact));
    out.expect((e50 - 1.25).abs() < 0.015, || format!("k=50: exact {e50}"));
    out.expect((e200 - 1.25).abs() < (e50 - 1.25).abs(), || {
        "no convergence toward 5/4".into()
    });
    out.expect(q50.asymptotic == five_quarters, || {
        format!("approximation at c=2 is {}", q50.asymptotic)
    });
    let small = frankl_beta_ratio(10, 5, 1)?;
    out.expect(
        small.exact == BigRational::new(17.into(), 15.into()),
        || format!("(1,5,10): {}", small.exact),
    );
    out.value("exact_k50", format!("{e50:.6}"));
    out.value("exact_k200", format!("{e200:.6}"));
    out.note(format!(
        "c=2: k=50 {e50:.4}, k=200 {e200:.4} -> 5/4; (t,k,n)=(1,5,10): exact {} vs approximation {}",
        render_rational(&small.exact),
        render_rational(&small.asymptotic)
    ));
    Ok(())
}

fn g0_claim(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let g = g0()?;
    out.expect(g.len() == 10 && g.uniformity() == Some(3), || {
        format!("|G0| = {}", g.len())
    });
    out.expect(degree_vector(&g) == vec![5; 6], || {
        format!("degrees {:?}", degree_vector(&g))
    });
    out.expect(is_intersecting(&g), || "G0 not intersecting".into());
    let hits = |s: Subset| g.iter().all(|m| !(*m & s).is_empty());
    let two = k_subsets(6, 2).into_iter().any(hits);
    let three = k_subsets(6, 3).into_iter().any(hits);
    out.expect(!two && three, || "τ(G0) != 3 by scan".into());
    out.expect(transversal_number(&g)? == 3, || {
        "transversal_number(G0) != 3".into()
    });
    out.note("10 triples, degrees 5, τ = 3");
    Ok(())
}

fn f0_claim(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let stats = G0Stats::from_family(&g0()?)?;
    for (n, k) in [(8usize, 4usize), (9, 4), (13, 5)] {
        let f = f0(n, k)?;
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                // |F0(ī, j)| = members avoiding i and containing j
                let brute = brute_b(&f, j, i);
                let formula = f0_link_count(n as i64, k as i64, &stats, i, j)?;
                out.expect(big(brute) == formula, || {
                    format!("f0({n},{k}) ({i},{j}): brute {brute}, formula {formula}")
                });
            }
        }
    }
    let derived = F0Coefficients::derived(&stats);
    out.value("n4_printed", int(F0_PRINTED.both_outside[1]));
    out.value("n4_derived", int(derived.both_outside[1]));
    out.note(format!(
        "printed coefficient {}; derived N₄ = {}",
        F0_PRINTED.both_outside[1], derived.both_outside[1]
    ));
    Ok(())
}

fn saturated_samples(ctx: &mut Ctx, count: usize) -> Result<Vec<(SetFamily, usize)>> {
    let mut out = vec![
        (saturate(&frankl(10, 5, 1, 2)?, 1)?, 1),
        (saturate(&frankl(9, 4, 1, 2)?, 1)?, 1),
    ];
    for idx in 0..count {
        let (n, k, t) = if idx % 2 == 0 { (8, 4, 1) } else { (9, 4, 1) };
        let m = ctx.rng.gen_range(1..=6);
        out.push((
            saturate(&random_t_intersecting(&mut ctx.rng, n, k, t, m)?, t)?,
            t,
        ));
    }
    Ok(out)
}

fn lemma41(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let samples = saturated_samples(ctx, 40)?;
    for (idx, (f, t)) in samples.iter().enumerate() {
        let b = basis(f, *t)?;
        let k = f.uniformity().unwrap_or(0);
        out.expect(generated(&b.members, f.n(), k)? == *f, || {
            format!("sample #{idx}: basis does not generate F")
        });
        out.expect(
            is_t_intersecting(&b.as_family(), *t) && b.is_antichain(),
            || format!("sample #{idx}: basis shape"),
        );
    }
    out.note(format!("{} saturated families", samples.len()));
    Ok(())
}

fn lemma42(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let samples = saturated_samples(ctx, 40)?;
    let mut used = 0;
    let mut worst = BigRational::from_integer(0.into());
    for (idx, (f, t)) in samples.iter().enumerate() {
        let b = basis(f, *t)?;
        if b.min_size() < t + 1 {
            continue;
        }
        used += 1;
        let sum = basis_weight_sum(&basis_levels(&b)?);
        out.expect(sum <= BigRational::from_integer(1.into()), || {
            format!("sample #{idx}: weight sum {sum}")
        });
        worst = worst.max(sum);
    }
    out.expect(used > 0, || "no sample had τ_t >= t+1".into());
    out.value("max_weight_sum", render_rational(&worst));
    out.note(format!(
        "{used} families with τ_t >= t+1, largest sum {}",
        render_rational(&worst)
    ));
    Ok(())
}

fn lemma43(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let samples = saturated_samples(ctx, 100)?;
    let mut applicable = 0;
    for (idx, (f, t)) in samples.iter().enumerate() {
        let rep = basis_avoidance_check(f, *t);
        if rep.not_applicable.is_some() {
            continue;
        }
        applicable += 1;
        out.expect(rep.holds, || {
            format!(
                "sample #{idx}: counts {:?} exceed {}",
                rep.counts, rep.bound
            )
        });
    }
    out.expect(applicable > 0, || {
        "no sample satisfied the hypotheses".into()
    });
    out.note(format!(
        "hypotheses met by {applicable} of {} saturated families",
        samples.len()
    ));
    Ok(())
}

fn fact51(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let mut equality = 0;
    for idx in 0..1000 {
        let n = ctx.rng.gen_range(2..=10);
        let f = if idx % 2 == 0 {
            let p = ctx.rng.gen_range(0.02..0.9);
            random_family(&mut ctx.rng, n, p)?
        } else {
            let (k, p) = (ctx.rng.gen_range(0..=n), ctx.rng.gen_range(0.1..1.0));
            random_uniform_family(&mut ctx.rng, n, k, p)?
        };
        let beta = brute_beta(&f);
        let avg = average_beta_bound(n as i64, f.len() as u64);
        out.expect(avg.admits(beta), || {
            format!("#{idx}: β = {beta} > {}", avg.value)
        });
        if n % 2 == 1 {
            let odd = odd_average_beta_bound(n as i64, f.len() as u64);
            out.expect(odd.admits(beta), || {
                format!("#{idx}: β = {beta} > {}", odd.value)
            });
        }
    }
    for n in [4usize, 6, 8] {
        let mid = k_level(n, n / 2)?;
        let avg = average_beta_bound(n as i64, mid.len() as u64);
        if avg.value == BigRational::from_integer(big(brute_beta(&mid))) {
            equality += 1;
        }
    }
    out.expect(equality == 3, || {
        "middle levels do not attain the average bound".into()
    });
    out.note("1000 random families; equality on C([n], n/2) for n = 4, 6, 8");
    Ok(())
}

fn thm18i(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let mut rows = Vec::new();
    for (n, t) in [(3usize, 1usize), (4, 2), (5, 1), (5, 3), (6, 2), (6, 4)] {
        let res = max_beta(&ConstraintSpec::TIntersectingAny { n, t }, &ctx.opts)?;
        let bound = nonuniform_t_intersecting_beta_bound(n as i64, t as i64);
        out.expect(res.exhausted, || format!("({n},{t}) not exhausted"));
        out.expect(bound.applicable && bound.admits(res.max_beta), || {
            format!("({n},{t}): max β {} > {}", res.max_beta, bound.value)
        });
        rows.push(format!("({n},{t}) {}<={}", res.max_beta, bound.value));
    }
    let at82 = nonuniform_t_intersecting_beta_bound(8, 2);
    out.expect(at82.value == BigRational::from_integer(22.into()), || {
        format!("bound at (8,2) = {}", at82.value)
    });
    out.note(format!(
        "exhaustive (n,t) max β vs bound: {}",
        rows.join(", ")
    ));
    Ok(())
}

fn thm56_tight(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    for (n, s) in [(6usize, 1usize), (8, 2), (10, 3)] {
        let ball = hamming_ball(n, s, Subset::EMPTY)?;
        let beta = brute_beta(&ball);
        let bound = diameter_beta_bound(n as i64, 2 * s as i64);
        out.expect(diameter(&ball)? <= 2 * s, || {
            format!("B_{s}(∅) on [{n}] has diameter > {}", 2 * s)
        });
        out.expect(BigRational::from_integer(big(beta)) == bound.value, || {
            format!("B_{s}(∅) on [{n}]: β = {beta}, bound {}", bound.value)
        });
    }
    let d = diameter_example(8, 2)?;
    let want = prefix(6, 1) + u64::try_from(c(4, 0)).unwrap_or(0);
    out.expect(diameter(&d)? == 5 && brute_beta(&d) == want, || {
        format!("B_2(∅) ∪ T(8,3): β = {}", brute_beta(&d))
    });
    out.note(format!(
        "B_s(∅) attains the bound at (6,1) (8,2) (10,3); β(B_2(∅) ∪ T(8,3)) = {want}"
    ));
    Ok(())
}

fn example511(_: &mut Ctx, out: &mut Outcome) -> Result<()> {
    for (n, s, g) in [
        (9usize, 2usize, triangle(9, 3)?),
        (9, 2, star(9, 3, 1)?),
        (10, 3, triangle(10, 4)?),
    ] {
        let f = example_511(n, s, &g)?;
        let want = brute_beta(&g) + prefix(n as i64 - 2, s as i64 - 1);
        let got = brute_beta(&f);
        out.expect(got == want, || format!("({n},{s}): β = {got}, want {want}"));
        out.expect(is_u_union(&f, 2 * s + 1), || {
            format!("({n},{s}): not {}-union", 2 * s + 1)
        });
    }
    out.note("β(T(9,3) ∪ B_2(∅)) = β(T(9,3)) + 8");
    Ok(())
}

fn fact64(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let mut with_split = 0;
    let mut total = 0;
    for n in 2..=6usize {
        let bound = iu_beta_bound(n as i64);
        let fams = maximal_families(&ConstraintSpec::Iu { n }, &ctx.opts)?;
        out.expect(fams.exhausted, || {
            format!("n={n}: IU enumeration not exhausted")
        });
        for f in &fams.value {
            total += 1;
            let full = (1u64 << n) - 1;
            if (1..full).any(|bits| split_check(f, Subset::from_bits(bits))) {
                with_split += 1;
                let beta = brute_beta(f);
                out.expect(bound.admits(beta), || {
                    format!("n={n}: split IU family with β = {beta}")
                });
            }
        }
    }
    out.note(format!(
        "{with_split} of {total} maximal IU families (n <= 6) have a split"
    ));
    Ok(())
}

fn katona_claim(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let mut rows = Vec::new();
    for (n, t) in [(4usize, 1usize), (5, 1), (5, 2), (6, 2), (6, 3)] {
        let c = ConstraintSpec::TIntersectingAny { n, t };
        let folded = fold_maximal(&c, &ctx.opts, || 0usize, |m, f| m.max(f.len()), usize::max)?;
        let classical = katona_bound(n as i64, t as i64);
        let printed = katona_bound_printed(n as i64, t as i64);
        out.expect(folded.exhausted, || format!("({n},{t}) not exhausted"));
        out.expect(
            classical.value == BigRational::from_integer(folded.value.into()),
            || {
                format!(
                    "({n},{t}): brute {}, formula {}",
                    folded.value, classical.value
                )
            },
        );
        out.expect(katona_family(n, t)?.len() == folded.value, || {
            format!("katona_family({n},{t}) size")
        });
        if printed.value != classical.value {
            rows.push(format!(
                "({n},{t}) brute {} printed {}",
                folded.value, printed.value
            ));
            out.value(&format!("printed_{n}_{t}"), render_rational(&printed.value));
        }
        out.value(&format!("brute_{n}_{t}"), int(folded.value));
    }
    out.note(format!(
        "classical formula matches brute force; odd-case printed index differs: {}",
        rows.join(", ")
    ));
    Ok(())
}

fn thm15(ctx: &mut Ctx, out: &mut Outcome) -> Result<()> {
    let mut rows = Vec::new();
    for n in 3..=6usize {
        let res = max_beta(&ConstraintSpec::TIntersectingAny { n, t: 1 }, &ctx.opts)?;
        let bound = nonuniform_intersecting_beta_bound(n as i64);
        out.expect(res.exhausted && bound.admits(res.max_beta), || {
            format!("n={n}: max β {}", res.max_beta)
        });
        out.expect(brute_beta(&res.witness) == res.max_beta, || {
            format!("n={n}: witness β mismatch")
        });
        rows.push(format!("n={n} {}<={}", res.max_beta, bound.value));
    }
    out.note(format!("exhaustive max β: {}", rows.join(", ")));
    Ok(())
}
