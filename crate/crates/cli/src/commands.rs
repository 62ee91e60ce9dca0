use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use dynmult::exactpoly::{parse_rational, Rational};
use dynmult::families::{
    cartesian_product, lattes_mordell, lattes_quartic, segre_power_product, split_endomorphism,
    symmetric_lattes_fixture, triangular_endomorphism, Family, SegreOrder, SplitSpec,
    TriangularSpec,
};
use dynmult::groebner::GbLimits;
use dynmult::io;
use dynmult::monic::{
    hypersurface_eval, monic_fiber_probe, monic_map, monic_sigma_generators, MonicParams,
};
use dynmult::projdyn::{period_count, rational_periodic_spectrum, DynamicalSystem};
use dynmult::recovery::recover_triangular_2_2;
use dynmult::relations::{
    check_corollary_relation, check_dependence, check_ueda, check_ueda_charpolys,
    corollary_residual,
};
use dynmult::sigma::{
    extract_sigmas, isospectral_scan, sigma_dim1_resultant, sigma_poly, SigmaEngine, SigmaMode,
    SigmaOptions, SigmaPolynomial, SigmaTable,
};
use dynmult::{Error, Result};
use serde_json::{json, Value};

use crate::{Cli, Command, Engine, Flattening, Format, Kind, LattesKind, Mode, Relation, Tier};

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::UnknownVariable(_)
        | Error::VariableMismatch { .. }
        | Error::NegativeExponent(_)
        | Error::InvalidOrder(_) => 1,
        Error::InvalidMap(_) | Error::NotMorphism => 2,
        Error::ResourceLimit(_) => 3,
        _ => 4,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<DynamicalSystem> {
    io::parse_map(&read(path)?)
}

fn limits(cli: &Cli) -> GbLimits {
    let mut l = GbLimits::default();
    if let Some(p) = cli.global.max_pairs {
        l.max_pairs = Some(p as usize);
    }
    if let Some(b) = cli.global.max_coeff_bits {
        l.max_coeff_bits = Some(b);
    }
    l.time_limit_secs = cli.global.time_limit;
    l
}

fn mode(m: Mode) -> SigmaMode {
    match m {
        Mode::Chow => SigmaMode::Chow,
        Mode::Plain => SigmaMode::Plain,
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn parse_json(text: &str) -> Value {
    serde_json::from_str(text).expect("library output is valid json")
}

pub fn sigma_text(s: &SigmaPolynomial, t: &SigmaTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Sigma_{} = {}", s.n, s.poly);
    let _ = writeln!(
        out,
        "mode {}, D_{} = {}, w-degree {}",
        s.mode.name(),
        s.n,
        s.dn,
        s.degree_w()
    );
    if t.degree_deficient {
        let _ = writeln!(out, "note: plain-mode w-degree is below D_{}", s.n);
    }
    for ((i, j), v) in &t.entries {
        let _ = writeln!(out, "sigma[{i},{j}] = {v}");
    }
    out
}

pub fn run(cli: Cli) -> Result<Output> {
    let lim = limits(&cli);
    let format = cli.global.format;
    let opts = |engine: SigmaEngine| SigmaOptions {
        limits: lim.clone(),
        engine,
        ..SigmaOptions::default()
    };
    match &cli.command {
        Command::Sigma {
            map,
            period,
            mode: m,
            engine,
        } => {
            let f = load_map(map)?;
            let s = match engine {
                Engine::Resultant => {
                    if *m != Mode::Chow {
                        return Err(Error::Parse(
                            "the resultant engine computes chow mode only".into(),
                        ));
                    }
                    sigma_dim1_resultant(&f, *period)?
                }
                Engine::Quotient => {
                    sigma_poly(&f, *period, mode(*m), &opts(SigmaEngine::Quotient))?
                }
                Engine::Elimination => {
                    sigma_poly(&f, *period, mode(*m), &opts(SigmaEngine::Elimination))?
                }
            };
            s.check_invariants()?;
            let t = extract_sigmas(&s)?;
            Ok(Output::ok(match format {
                Format::Text => sigma_text(&s, &t),
                Format::Structured => io::sigma_to_json(&s, &t),
            }))
        }
        Command::Verify {
            relation,
            map,
            spectrum,
            period,
            mode: m,
        } => verify(
            *relation,
            map.as_deref(),
            spectrum.as_deref(),
            *period,
            mode(*m),
            &lim,
            format,
        ),
        Command::Construct {
            kind,
            param,
            map,
            component,
            copies,
            flattening,
            lattes,
        } => {
            let a = || -> Result<Rational> {
                parse_rational(
                    param
                        .as_deref()
                        .ok_or_else(|| Error::Parse("--param is required".into()))?,
                )
            };
            let f = match kind {
                Kind::Product => {
                    let [f, g] = map.as_slice() else {
                        return Err(Error::Parse("product needs exactly two --map files".into()));
                    };
                    cartesian_product(&load_map(f)?, &load_map(g)?)?
                }
                Kind::Segre => {
                    let base = match map.as_slice() {
                        [] => lattes_mordell(&a()?)?,
                        [f] => load_map(f)?,
                        _ => return Err(Error::Parse("segre takes at most one --map".into())),
                    };
                    let order = match flattening {
                        Flattening::Row => SegreOrder::RowMajor,
                        Flattening::Column => SegreOrder::ColumnMajor,
                    };
                    segre_power_product(&base, *copies, order)?
                }
                Kind::Split => split_endomorphism(&SplitSpec::parse(component)?)?,
                Kind::Triangular => triangular_endomorphism(&TriangularSpec::parse(component)?)?,
                Kind::Lattes => match lattes {
                    LattesKind::Mordell => lattes_mordell(&a()?)?,
                    LattesKind::Quartic => lattes_quartic(&a()?)?,
                },
                Kind::Symfixture => symmetric_lattes_fixture(&a()?)?,
            };
            Ok(Output::ok(io::map_to_json(&f)))
        }
        Command::Scan {
            kind,
            samples,
            period,
            mode: m,
        } => {
            let family: Family = kind.parse()?;
            if family.is_slow() && cli.global.tier != Tier::Slow {
                return Err(Error::Parse(format!(
                    "family `{kind}` is slow; pass --tier slow"
                )));
            }
            let samples: Vec<Rational> = samples
                .iter()
                .map(|s| parse_rational(s.trim()))
                .collect::<Result<_>>()?;
            let report = isospectral_scan(
                |a| family.build(a),
                &samples,
                *period,
                mode(*m),
                &opts(SigmaEngine::Quotient),
            );
            // a resource cap must not look like a completed scan
            if let Some(e) = report.samples.iter().find_map(|(_, r)| r.as_ref().err()) {
                if matches!(e, Error::ResourceLimit(_)) {
                    return Err(e.clone());
                }
            }
            let mut text = String::new();
            let mut rows = Vec::new();
            for (a, r) in &report.samples {
                match r {
                    Ok(s) => {
                        let _ = writeln!(text, "a = {a}: {}", s.poly);
                        rows.push(json!({"a": a.to_string(), "sigma": s.poly.to_string()}));
                    }
                    Err(e) => {
                        let _ = writeln!(text, "a = {a}: error: {e}");
                        rows.push(json!({"a": a.to_string(), "error": e.to_string()}));
                    }
                }
            }
            let verdict = if report.all_equal {
                "isospectral"
            } else {
                "not isospectral"
            };
            let _ = writeln!(text, "{verdict}");
            let out = match format {
                Format::Text => text,
                Format::Structured => pretty(&json!({
                    "family": family.name(),
                    "period": period,
                    "mode": mode(*m).name(),
                    "samples": rows,
                    "isospectral": report.all_equal,
                })),
            };
            Ok(Output {
                text: out,
                code: if report.all_equal { 0 } else { 4 },
            })
        }
        Command::Recover { spectrum } => {
            let spec = io::parse_eigen_spectrum(&read(spectrum)?)?;
            let maps = recover_triangular_2_2(&spec, &lim)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for f in &maps {
                let s = sigma_poly(f, 1, SigmaMode::Chow, &opts(SigmaEngine::Quotient))?;
                let _ = writeln!(text, "map: {f}");
                let _ = writeln!(text, "Sigma_1 = {}", s.poly);
                rows.push(
                    json!({"map": parse_json(&io::map_to_json(f)), "sigma": s.poly.to_string()}),
                );
            }
            if maps.is_empty() {
                let _ = writeln!(text, "no triangular map has this spectrum");
            }
            Ok(Output::ok(match format {
                Format::Text => text,
                Format::Structured => pretty(&Value::Array(rows)),
            }))
        }
        Command::Monic {
            params,
            check_hypersurface,
            fiber,
        } => {
            let p = MonicParams::parse(params)?;
            let f = monic_map(&p);
            let v = monic_sigma_generators(&p);
            let mut text = format!("map: {f}\ngenerators: {v}\n");
            let mut obj = json!({
                "params": p.as_array().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "map": parse_json(&io::map_to_json(&f)),
                "generators": v.0.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            });
            if *check_hypersurface {
                let r = hypersurface_eval(&v);
                let _ = writeln!(text, "hypersurface residual: {r}");
                obj["hypersurface_residual"] = json!(r.to_string());
            }
            if *fiber {
                let rep = monic_fiber_probe(&v, &lim)?;
                let degree = rep.degree.map_or("n/a".to_string(), |d| d.to_string());
                let _ = writeln!(text, "fiber dimension: {}", rep.dimension);
                let _ = writeln!(text, "fiber degree: {degree}");
                for s in &rep.rational_solutions {
                    let _ = writeln!(text, "rational point: {s}");
                }
                if rep.non_rational_present {
                    let _ = writeln!(text, "non-rational points present");
                }
                obj["fiber"] = json!({
                    "dimension": rep.dimension,
                    "degree": rep.degree,
                    "rational_solutions": rep.rational_solutions.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "non_rational_present": rep.non_rational_present,
                });
            }
            Ok(Output::ok(match format {
                Format::Text => text,
                Format::Structured => pretty(&obj),
            }))
        }
    }
}

/// Degree d with D_1 = #points for a spectrum of N×N multipliers.
fn infer_degree(dim: usize, points: usize) -> Result<u32> {
    (2..=64u32)
        .find(|&d| period_count(dim, d, 1) == points.into())
        .ok_or_else(|| Error::Domain(format!("{points} fixed points fit no degree on P^{dim}")))
}

fn verify(
    relation: Relation,
    map: Option<&Path>,
    spectrum: Option<&Path>,
    period: u32,
    m: SigmaMode,
    lim: &GbLimits,
    format: Format,
) -> Result<Output> {
    let opts = SigmaOptions {
        limits: lim.clone(),
        ..SigmaOptions::default()
    };
    let need_map = || map.ok_or_else(|| Error::Parse("--map is required for this relation".into()));
    let (holds, detail) = match relation {
        Relation::Ueda => {
            let report = match (map, spectrum) {
                (_, Some(path)) => {
                    let cps = io::parse_charpoly_spectrum(&read(path)?)?;
                    let dim = cps.first().map_or(0, |c| c.0.degree());
                    let total: usize = cps.iter().map(|c| c.1 as usize).sum();
                    check_ueda_charpolys(&cps, dim, infer_degree(dim, total)?)?
                }
                (Some(path), None) => {
                    check_ueda(&rational_periodic_spectrum(&load_map(path)?, 1, lim)?)?
                }
                (None, None) => return Err(Error::Parse("ueda needs --map or --spectrum".into())),
            };
            (
                report.holds,
                json!({"lhs": report.lhs.to_string(), "rhs": report.rhs.to_string()}),
            )
        }
        Relation::Corollary => {
            let s = sigma_poly(&load_map(need_map()?)?, 1, SigmaMode::Chow, &opts)?;
            let t = extract_sigmas(&s)?;
            let residual = corollary_residual(&t)?;
            (
                check_corollary_relation(&t)?,
                json!({"residual": residual.to_string()}),
            )
        }
        Relation::Dependence => {
            let s = sigma_poly(&load_map(need_map()?)?, period, m, &opts)?;
            let bad = check_dependence(&extract_sigmas(&s)?)?;
            (
                bad.is_empty(),
                json!({"mismatches": bad.iter().map(|b| b.to_string()).collect::<Vec<_>>()}),
            )
        }
    };
    let verdict = if holds { "HOLDS" } else { "FAILS" };
    let text = match format {
        Format::Text => {
            let mut t = format!("{verdict}\n");
            if let Value::Object(o) = &detail {
                for (k, v) in o {
                    let v = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    let _ = writeln!(t, "{k}: {v}");
                }
            }
            t
        }
        Format::Structured => {
            let mut obj =
                json!({"relation": format!("{relation:?}").to_lowercase(), "holds": holds});
            if let (Value::Object(o), Value::Object(d)) = (&mut obj, detail) {
                o.extend(d);
            }
            pretty(&obj)
        }
    };
    Ok(Output {
        text,
        code: if holds { 0 } else { 4 },
    })
}
