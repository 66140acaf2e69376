//! One function per subcommand. Each returns the text to print and whether
//! the command's check (if any) passed.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tilekit::algebra::{aztec_product, factor_binomial_product, rat, Poly, Rational, Var};
use tilekit::arctic::{aztec_circle, aztec_t0_curves, aztec_tinf_curves, hexagon_t0_curves, hexagon_tinf_curves, CurveFamily};
use tilekit::aztec::{binom2, enumerate_ktilings, enumerate_tilings, KTiling};
use tilekit::bijections::{phi_involution, t0_forward, t0_inverse, zero_interaction_ktilings};
use tilekit::encodings::{generating_polynomial, interactions, t_distribution, tiling_weight, ModelKind};
use tilekit::hexagon::{hex_generating_polynomial, t_coefficients_at_q_one, table1, HexRegion};
use tilekit::render::{render_svg, RenderInput, RenderSpec};
use tilekit::sampler::{parse_rational, run, ArcticProtocol, HexChain, SamplerConfig};
use tilekit::schroder::ktiling_to_paths;
use tilekit::vertex::{
    aztec_lattice_spec, lattice_constant, lattice_partition_function, weight_algebraic, weight_graphical, ybe_check,
    ybe_check_symbolic, FaceConfig, Family, VertexParams, YbeTriple,
};

use crate::args::*;
use crate::doc::{self, envelope, Document};
use crate::CliError;

/// What a command produced.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// `false` when a verification failed (exit code 1).
    pub passed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, passed: true }
    }
}

fn lib(e: tilekit::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn rational(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(lib)
}

/// Parses a count such as `1000000` or `2e9`.
fn count(s: &str) -> Result<u64, CliError> {
    let r = rational(s)?;
    if !r.is_integer() || r < rat(0, 1) {
        return Err(CliError::Usage(format!("expected a nonnegative integer, got {s}")));
    }
    r.to_integer().try_into().map_err(|_| CliError::Usage(format!("{s} is too large")))
}

fn write_or_return(output: Option<&Path>, content: String, what: &str) -> Result<String, CliError> {
    match output {
        Some(p) => {
            fs::write(p, &content).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))?;
            Ok(format!("wrote {what} to {}", p.display()))
        }
        None => Ok(content),
    }
}

fn read_document(p: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
    doc::parse(&text)
}

pub fn enumerate(a: &EnumerateArgs) -> Result<Output, CliError> {
    let tilings = enumerate_tilings(a.rank).map_err(lib)?;
    let n = tilings.len() as u128;
    let total = n.checked_pow(a.colors as u32).ok_or_else(|| CliError::Usage("count overflows".into()))?;
    let mut j = json!({ "rank": a.rank, "colors": a.colors, "count": total.to_string() });
    let mut text = format!("{total}");
    if a.list {
        if a.colors != 1 {
            return Err(CliError::Usage("--list is only available with --colors 1".into()));
        }
        j["tilings"] = json!(tilings);
        for t in &tilings {
            text.push('\n');
            text.push_str(&tilekit::render::render_text(t));
        }
    }
    Ok(Output::ok(text, envelope("count", j)))
}

pub fn pf(a: &PfArgs) -> Result<Output, CliError> {
    let model: ModelKind = a.model.into();
    let (text, poly) = match a.at {
        Some(Specialization::AllOnes) => {
            // At x = y = 1 only the t-distribution matters; it is much cheaper.
            let dist = t_distribution(a.rank, a.colors, model).map_err(lib)?;
            let coeffs: Vec<Rational> = dist.iter().map(|&c| rat(c as i64, 1)).collect();
            let p = Poly::from_univariate(Var::t(), &coeffs);
            (factor_binomial_product(&p).unwrap_or_else(|| p.to_string()), p)
        }
        None => {
            let p = generating_polynomial(a.rank, a.colors, model).map_err(lib)?;
            (p.to_string(), p)
        }
    };
    let j = json!({ "rank": a.rank, "colors": a.colors, "model": model.to_string(), "polynomial": poly.to_string(), "display": text });
    Ok(Output::ok(text, envelope("polynomial", j)))
}

fn random_point(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(1..=40), rng.random_range(1..=40))
}

pub fn verify(a: &VerifyArgs) -> Result<Output, CliError> {
    let (k, m) = (a.colors, a.rank);
    if k == 0 || m == 0 {
        return Err(CliError::Usage("--colors and --rank must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut failures: Vec<String> = Vec::new();
    let mut checked = 0u64;
    match a.check {
        Check::Ybe => {
            for triple in YbeTriple::ALL {
                let report = if k <= 2 {
                    ybe_check_symbolic(k, triple)
                } else {
                    let (x, y, t) = (random_point(&mut rng), random_point(&mut rng), random_point(&mut rng));
                    ybe_check(k, triple, &x, &y, &t).map_err(lib)?
                };
                checked += 1;
                if !report.holds() {
                    failures.push(format!("{triple:?}: {} boundaries differ", report.failures.len()));
                }
            }
        }
        Check::AppendixB => {
            for _ in 0..5 {
                let p = VertexParams::new(random_point(&mut rng), random_point(&mut rng), random_point(&mut rng));
                for family in Family::ALL {
                    for f in FaceConfig::all(k) {
                        checked += 1;
                        let (alg, gra) = (weight_algebraic(family, k, &p, f).map_err(lib)?, weight_graphical(family, k, &p, f).map_err(lib)?);
                        if alg != gra {
                            failures.push(format!("{family} {f:?}: {alg} ≠ {gra}"));
                        }
                    }
                }
            }
        }
        Check::Product => {
            for model in ModelKind::ALL {
                checked += 1;
                let z = generating_polynomial(m, k, model).map_err(lib)?;
                if z != aztec_product(m, k as u32) {
                    failures.push(format!("{model}: sum over tilings differs from the product"));
                }
            }
        }
        Check::Lattice => {
            for model in ModelKind::ALL {
                checked += 1;
                let z = lattice_partition_function(&aztec_lattice_spec(m, k, model).map_err(lib)?).map_err(lib)?;
                if z != aztec_product(m, k as u32).mul_monomial(&lattice_constant(m, k, model)) {
                    failures.push(format!("{model}: lattice partition function differs"));
                }
            }
        }
        Check::T0 => {
            let class = zero_interaction_ktilings(m, k, ModelKind::PurpleGray).map_err(lib)?;
            let mut images = std::collections::BTreeSet::new();
            for kt in &class {
                checked += 1;
                let t = t0_forward(kt).map_err(lib)?;
                let single = KTiling::new(vec![t.clone()]).map_err(lib)?;
                if t0_inverse(&t, k).map_err(lib)? != *kt
                    || tiling_weight(kt, ModelKind::PurpleGray) != tiling_weight(&single, ModelKind::PurpleGray)
                {
                    failures.push(format!("round trip or weight fails for {t:?}"));
                }
                images.insert(t);
            }
            let expected = 1usize << (m * (m + 1) / 2);
            if class.len() != expected || images.len() != expected {
                failures.push(format!("class size {} and image size {} (expected {expected})", class.len(), images.len()));
            }
        }
        Check::Involution => {
            let top = binom2(k as u64) * binom2(m as u64 + 1);
            for kt in enumerate_ktilings(m, k).map_err(lib)? {
                checked += 1;
                let r = phi_involution(&kt);
                if interactions(&kt, ModelKind::PurpleGray) + interactions(&r, ModelKind::PurpleGray) != top || phi_involution(&r) != kt {
                    failures.push("involution identity fails".into());
                    break;
                }
            }
        }
    }
    let passed = failures.is_empty();
    let name = a.check.to_possible_value().expect("every check has a name").get_name().to_string();
    let text = if passed {
        format!("ok: {name} ({checked} cases, k={k}, m={m})")
    } else {
        format!("FAILED: {name}\n{}", failures.join("\n"))
    };
    let j = json!({ "check": name, "colors": k, "rank": m, "cases": checked, "passed": passed, "failures": failures });
    Ok(Output { text, json: envelope("verification", j), passed })
}

pub fn bijection(a: &BijectionArgs) -> Result<Output, CliError> {
    let input = read_document(&a.input)?;
    let result = match (a.map, a.inverse, input) {
        (Map::T0, false, Document::KTiling(kt)) => doc::tiling_value(&t0_forward(&kt).map_err(lib)?),
        (Map::T0, true, Document::Tiling(t)) => {
            let k = a.colors.ok_or_else(|| CliError::Usage("--inverse needs --colors".into()))?;
            doc::ktiling_value(&t0_inverse(&t, k).map_err(lib)?)
        }
        (Map::Phi, _, Document::KTiling(kt)) => doc::ktiling_value(&phi_involution(&kt)),
        (Map::Phi, _, Document::Tiling(t)) => doc::tiling_value(&t.reflect_diagonal()),
        _ => return Err(CliError::Usage("input kind does not fit this map (t0 takes a ktiling, or a tiling with --inverse)".into())),
    };
    let text = serde_json::to_string_pretty(&result).expect("serializable");
    let text = write_or_return(a.output.as_deref(), text, "result")?;
    Ok(Output::ok(text, result))
}

pub fn sample(a: &SampleArgs) -> Result<Output, CliError> {
    let steps = count(&a.steps)?;
    let burn_in = match &a.burn_in {
        Some(b) => count(b)?,
        None => steps / 10,
    };
    let cfg = SamplerConfig { rank: a.rank, colors: a.colors, t: rational(&a.t)?, steps, burn_in, thinning: a.thinning, seed: a.seed };
    let out = run(&cfg).map_err(lib)?;
    let value = envelope("run", &out);
    let summary = format!("rank {} colors {} t {} steps {} seed {}: {} accepted flips, {} recorded states", cfg.rank, cfg.colors, cfg.t, steps, cfg.seed, out.accepted, out.statistics.samples);
    let content = match a.out {
        OutFormat::Json => serde_json::to_string(&value).expect("serializable"),
        OutFormat::Svg => {
            let kt = KTiling::try_from(out.final_state.clone()).map_err(lib)?;
            render_svg(&sample_legend(RenderSpec::new(RenderInput::KTiling(kt)), &cfg)).map_err(lib)?
        }
    };
    let text = match &a.output {
        Some(p) => format!("{summary}\n{}", write_or_return(Some(p), content, "sample")?),
        None => content,
    };
    Ok(Output::ok(text, value))
}

fn sample_legend(spec: RenderSpec, cfg: &SamplerConfig) -> RenderSpec {
    spec.with_legend("model", ModelKind::PurpleGray)
        .with_legend("rank", cfg.rank)
        .with_legend("k", cfg.colors)
        .with_legend("t", &cfg.t)
        .with_legend("seed", cfg.seed)
}

pub fn arctic(a: &ArcticArgs) -> Result<Output, CliError> {
    let mut protocol = ArcticProtocol::new(a.rank, a.colors, a.margin);
    if let Some(s) = a.sweeps {
        protocol.sweeps = s;
    }
    let scores = (0..a.seeds).map(|s| protocol.trial(s)).collect::<Result<Vec<_>, _>>().map_err(lib)?;
    let n = scores.len().max(1) as f64;
    let t0 = scores.iter().map(|s| s.t0).sum::<f64>() / n;
    let tinf = scores.iter().map(|s| s.tinf).sum::<f64>() / n;
    let passed = t0 >= a.threshold && tinf >= a.threshold;
    let text = format!(
        "rank {} colors {} seeds {} sweeps {}: t=0 agreement {t0:.4}, t→∞ agreement {tinf:.4} ({})",
        a.rank,
        a.colors,
        a.seeds,
        protocol.sweeps,
        if passed { "ok" } else { "FAILED" }
    );
    let j = json!({ "rank": a.rank, "colors": a.colors, "sweeps": protocol.sweeps, "margin": a.margin, "scores": scores, "t0": t0, "tinf": tinf, "passed": passed });
    Ok(Output { text, json: envelope("arctic", j), passed })
}

pub fn hexagon(a: &HexagonArgs) -> Result<Output, CliError> {
    match &a.command {
        HexagonCommand::Table1 => {
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut passed = true;
            for row in table1() {
                let got = t_coefficients_at_q_one(&hex_generating_polynomial(row.region, 2).map_err(lib)?);
                let ok = got == row.coefficients;
                passed &= ok;
                text.push_str(&format!("{:<8} {:?}{}\n", row.region.to_string(), got, if ok { "" } else { "  MISMATCH" }));
                rows.push(json!({ "shape": row.region, "coefficients": got, "matches": ok }));
            }
            text.pop();
            Ok(Output { text, json: envelope("hexagon-table", rows), passed })
        }
        HexagonCommand::Pf { shape, colors, q_one } => {
            let r = HexRegion::new(shape.a, shape.b, shape.c);
            let p = hex_generating_polynomial(r, *colors).map_err(lib)?;
            let (text, j) = if *q_one {
                let c = t_coefficients_at_q_one(&p);
                (format!("{c:?}"), json!({ "shape": r, "colors": colors, "t_coefficients": c }))
            } else {
                (p.to_string(), json!({ "shape": r, "colors": colors, "polynomial": p.to_string() }))
            };
            Ok(Output::ok(text, envelope("polynomial", j)))
        }
        HexagonCommand::Sample { shape, colors, t, steps, seed, out, output } => {
            let r = HexRegion::new(shape.a, shape.b, shape.c);
            let t = rational(t)?;
            let state = tilekit::sampler::hex_initial_state(r, *colors, &t).map_err(lib)?;
            let mut chain = HexChain::new(&state, t.clone()).map_err(lib)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for _ in 0..count(steps)? {
                chain.step(&mut rng);
            }
            let fin = chain.state();
            let value = envelope("lozenge-ktiling", &fin);
            let content = match out {
                OutFormat::Json => serde_json::to_string(&value).expect("serializable"),
                OutFormat::Svg => render_svg(
                    &RenderSpec::new(RenderInput::Lozenges(fin))
                        .with_legend("shape", r)
                        .with_legend("k", colors)
                        .with_legend("t", &t)
                        .with_legend("seed", seed),
                )
                .map_err(lib)?,
            };
            let text = write_or_return(output.as_deref(), content, "sample")?;
            Ok(Output::ok(text, value))
        }
    }
}

fn overlay_family(o: Overlay, k: usize) -> CurveFamily {
    match o {
        Overlay::Circle => aztec_circle(),
        Overlay::T0 => aztec_t0_curves(k),
        Overlay::Tinf => aztec_tinf_curves(k),
        Overlay::HexT0 => hexagon_t0_curves(),
        Overlay::HexTinf => hexagon_tinf_curves(),
    }
}

pub fn render(a: &RenderArgs) -> Result<Output, CliError> {
    let (input, legend): (RenderInput, Vec<(String, String)>) = match read_document(&a.input)? {
        Document::Tiling(t) if a.paths => (RenderInput::Paths(ktiling_to_paths(&KTiling::new(vec![t]).map_err(lib)?)), vec![]),
        Document::KTiling(kt) if a.paths => (RenderInput::Paths(ktiling_to_paths(&kt)), vec![]),
        Document::Tiling(t) => (RenderInput::Tiling(t), vec![]),
        Document::KTiling(kt) => (RenderInput::KTiling(kt), vec![]),
        Document::Lozenges(kl) => (RenderInput::Lozenges(kl), vec![]),
        Document::Statistics(s) => (RenderInput::Statistics(s), vec![]),
        Document::Run(r) => {
            let c = &r.config;
            let legend = vec![
                ("model".to_string(), ModelKind::PurpleGray.to_string()),
                ("rank".to_string(), c.rank.to_string()),
                ("k".to_string(), c.colors.to_string()),
                ("t".to_string(), c.t.to_string()),
                ("seed".to_string(), c.seed.to_string()),
            ];
            (RenderInput::Statistics(r.statistics), legend)
        }
        Document::Report(kind) => return Err(CliError::Usage(format!("cannot render a {kind:?} document"))),
    };
    let k = match &input {
        RenderInput::KTiling(kt) => kt.k(),
        RenderInput::Statistics(s) => s.colors,
        RenderInput::Paths(p) => p.len(),
        RenderInput::Lozenges(kl) => kl.k(),
        RenderInput::Tiling(_) => 1,
    };
    let mut spec = RenderSpec::new(input);
    spec.legend = legend;
    if let Some(o) = a.overlay {
        spec.overlay = Some(overlay_family(o, k));
    }
    if let Some(p) = &a.palette {
        spec.palette = p.split(',').map(|s| s.trim().to_string()).collect();
    }
    if let Some(s) = a.scale {
        spec.scale = s;
    }
    let svg = render_svg(&spec).map_err(lib)?;
    let text = write_or_return(a.output.as_deref(), svg.clone(), "picture")?;
    Ok(Output::ok(text, envelope("svg", svg)))
}
