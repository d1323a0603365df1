use std::fmt::Write as _;
use std::path::Path;

use braidalg::builtins::{builtin_adjoint_sl2, builtin_sl, parse_builtin, ADJOINT_PRINTED};
use braidalg::fixture::{Fixture, Payload};
use braidalg::frt::{check_duality, frt_report, RSource};
use braidalg::linalg::{check_braid, minimal_poly, BraidedSpace};
use braidalg::ncalg::{complete_rewrite, eval_at_matrix, hilbert, relations_from_image, RelationSet};
use braidalg::uqg::{
    check_antipode, check_faithful_on_generators, check_ideal_preserved, check_measuring, check_preserves_r,
    check_representation, Representation,
};
use braidalg::{Error, UniPoly};
use serde_json::{json, Map, Value};

use crate::{RSourceArg, SpaceSource, SubCheck};

pub type CmdError = Error;

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

pub enum Input {
    Space { label: String, space: BraidedSpace },
    Relations { label: String, rels: RelationSet },
}

pub struct RepInput {
    label: String,
    rep: Representation,
    space: Option<BraidedSpace>,
}

fn builtin_space(name: &str) -> Result<BraidedSpace, Error> {
    if name == "adjoint:sl2" {
        return Ok(builtin_adjoint_sl2()?.1);
    }
    Ok(builtin_sl(parse_builtin(name)?)?.1)
}

pub fn resolve_space(src: &SpaceSource) -> Result<Input, Error> {
    if let Some(name) = &src.builtin {
        return Ok(Input::Space {
            label: name.clone(),
            space: builtin_space(name)?,
        });
    }
    let path = src.input.as_ref().expect("clap enforces one source");
    let label = path.display().to_string();
    let fixture = Fixture::load(path)?;
    match fixture.payload {
        Payload::Rmatrix(r) => Ok(Input::Space {
            label,
            space: r.space_unchecked()?,
        }),
        Payload::Representation(r) => match r.space()? {
            Some(space) => Ok(Input::Space { label, space }),
            None => Err(Error::Fixture(format!(
                "{label}: representation fixture has no rmatrix"
            ))),
        },
        Payload::Relations(r) => Ok(Input::Relations {
            label,
            rels: r.relation_set()?,
        }),
    }
}

pub fn resolve_rep(name: &str) -> Result<RepInput, Error> {
    let builtin = if name == "adjoint:sl2" {
        Some(builtin_adjoint_sl2()?)
    } else if name.starts_with("sl:") {
        Some(builtin_sl(parse_builtin(name)?)?)
    } else {
        None
    };
    if let Some((rep, space)) = builtin {
        return Ok(RepInput {
            label: name.to_string(),
            rep,
            space: Some(space),
        });
    }
    let fixture = Fixture::load(Path::new(name))?;
    match fixture.payload {
        Payload::Representation(r) => Ok(RepInput {
            label: name.to_string(),
            rep: r.representation()?,
            space: r.space()?,
        }),
        _ => Err(Error::Fixture(format!(
            "{name}: expected a representation fixture, found {}",
            fixture.kind()
        ))),
    }
}

fn need_space(input: &Input) -> Result<(&str, &BraidedSpace), Error> {
    match input {
        Input::Space { label, space } => Ok((label, space)),
        Input::Relations { label, .. } => Err(Error::Fixture(format!("{label}: an R-matrix is required"))),
    }
}

fn join_dims(d: &[usize]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn validate_r(input: &Input, show_minimal_poly: bool) -> Result<Outcome, Error> {
    let (label, space) = need_space(input)?;
    let n = space.dim();
    let braid = check_braid(space.braiding())?;
    let invertible = space.braiding().rank() == n * n;
    let mp = minimal_poly(space.braiding())?;
    let factored = mp.factored_display();
    let mut text = String::new();
    writeln!(text, "source: {label} (dim {n})").unwrap();
    writeln!(text, "convention: braiding Ψ = R_rtt ∘ τ").unwrap();
    match braid.counterexample {
        None => writeln!(text, "braid equation: holds").unwrap(),
        Some((i, j, k)) => {
            writeln!(text, "braid equation: FAILS on v{}⊗v{}⊗v{}", i + 1, j + 1, k + 1).unwrap()
        }
    }
    writeln!(text, "invertible: {}", if invertible { "yes" } else { "NO" }).unwrap();
    if show_minimal_poly {
        writeln!(
            text,
            "minimal polynomial: {}",
            factored.clone().unwrap_or_else(|| mp.to_string())
        )
        .unwrap();
    }
    let json = json!({
        "command": "validate-r",
        "source": label,
        "dim": n,
        "braid_equation": braid,
        "invertible": invertible,
        "minimal_poly": mp.to_string(),
        "minimal_poly_factored": factored,
    });
    Ok(Outcome {
        text,
        json,
        ok: braid.holds && invertible,
    })
}

pub fn chi(
    input: &Input,
    poly: Option<&str>,
    max_degree: usize,
    show_relations: bool,
    show_hilbert: bool,
) -> Result<Outcome, Error> {
    let mut text = String::new();
    let mut warnings = Vec::new();
    let mut extra = Map::new();
    let (label, rels) = match input {
        Input::Space { label, space } => {
            let text_f = poly
                .ok_or_else(|| Error::InvalidArgument("--poly is required for an R-matrix source".into()))?;
            let f = UniPoly::parse(text_f)?;
            let n = space.dim();
            let rank = eval_at_matrix(&f, space.braiding()).rank();
            writeln!(text, "χ_(f,R) for {label} with f = {f}").unwrap();
            writeln!(text, "rank f(Ψ) = {rank} of {}", n * n).unwrap();
            if rank == n * n {
                warnings.push(format!(
                    "f(Ψ) is invertible (rank {rank}): the relations span all of V⊗V"
                ));
            }
            extra.insert("poly".into(), json!(f.to_string()));
            extra.insert("rank".into(), json!(rank));
            (label.clone(), relations_from_image(space, &f))
        }
        Input::Relations { label, rels } => {
            writeln!(text, "quadratic algebra from {label}").unwrap();
            (label.clone(), rels.clone())
        }
    };
    let rs = complete_rewrite(&rels, max_degree.max(2))?;
    let h = hilbert(&rs, max_degree);
    warnings.extend(h.warnings.iter().cloned());
    let lines = rels.display_lines();
    writeln!(text, "relations: {}", lines.len()).unwrap();
    if show_relations {
        for l in &lines {
            writeln!(text, "  {l}").unwrap();
        }
        if label == "adjoint:sl2" {
            writeln!(
                text,
                "as printed in the source text (f = x + q^-2, normalization unspecified):"
            )
            .unwrap();
            for l in ADJOINT_PRINTED {
                writeln!(text, "  {l}").unwrap();
            }
            extra.insert("printed".into(), json!(ADJOINT_PRINTED));
        }
    }
    let derived = rs.rules().len() - rels.len();
    writeln!(
        text,
        "completion: confluent through degree {} ({} rules, {derived} derived)",
        rs.bound(),
        rs.rules().len()
    )
    .unwrap();
    if show_hilbert {
        writeln!(text, "hilbert: {}", join_dims(&h.dims)).unwrap();
    }
    for w in &warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    let mut json = json!({
        "command": "chi",
        "source": label,
        "relation_count": lines.len(),
        "relations": lines,
        "completion": {
            "bound": rs.bound(),
            "confluent": rs.is_confluent(),
            "status": rs.status(),
            "rules": rs.display_rules(),
        },
        "hilbert": h,
        "warnings": warnings,
    });
    json.as_object_mut().unwrap().extend(extra);
    Ok(Outcome { text, json, ok: true })
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn check(
    input: &RepInput,
    checks: &[SubCheck],
    poly: &str,
    samples: usize,
    seed: u64,
    max_degree: usize,
) -> Result<Outcome, Error> {
    let rep = &input.rep;
    let action = rep.action();
    let space = || {
        input
            .space
            .as_ref()
            .ok_or_else(|| Error::Fixture(format!("{}: this check needs an rmatrix", input.label)))
    };
    let mut text = String::new();
    let mut reports = Map::new();
    let mut all_ok = true;
    writeln!(text, "representation: {} (dim {})", input.label, rep.dim()).unwrap();
    let mut seen = Vec::new();
    for c in checks {
        if seen.contains(c) {
            continue;
        }
        seen.push(*c);
        let (name, ok, value) = match c {
            SubCheck::Relations => {
                let r = check_representation(rep);
                for chk in &r.checks {
                    writeln!(text, "  [{}] {}", status(chk.holds), chk.relation).unwrap();
                    if let Some(res) = &chk.residual {
                        writeln!(text, "      residual {:?}", res.rows).unwrap();
                    }
                }
                ("relations", r.all_pass, serde_json::to_value(&r))
            }
            SubCheck::Admissible => {
                let r = check_preserves_r(&action, space()?);
                for g in &r.generators {
                    writeln!(
                        text,
                        "  [{}] {} commutes with Ψ on V⊗V: {}, with Ψ^(2,1), Ψ^(1,2) on V⊗V⊗V: {}",
                        status(g.degree2 && g.degree3),
                        g.generator,
                        g.degree2,
                        g.degree3
                    )
                    .unwrap();
                    if let Some(res) = &g.residual {
                        writeln!(text, "      residual [Ψ, Δ] {:?}", res.rows).unwrap();
                    }
                }
                ("admissible", r.all_pass, serde_json::to_value(&r))
            }
            SubCheck::Ideal => {
                let rels = relations_from_image(space()?, &UniPoly::parse(poly)?);
                let r = check_ideal_preserved(&action, &rels);
                let bad = r.checks.iter().filter(|c| !c.preserved).count();
                writeln!(
                    text,
                    "  [{}] ideal of f = {poly}: {} generator/relation pairs, {bad} leave the span",
                    status(r.all_pass),
                    r.checks.len()
                )
                .unwrap();
                for c in r.checks.iter().filter(|c| !c.preserved) {
                    writeln!(text, "      {} moves {} out of the span", c.generator, c.relation).unwrap();
                }
                ("ideal", r.all_pass, serde_json::to_value(&r))
            }
            SubCheck::Measuring => {
                let rels = relations_from_image(space()?, &UniPoly::parse(poly)?);
                let rs = complete_rewrite(&rels, max_degree.max(2))?;
                let r = check_measuring(&action, &rs, samples, max_degree, seed)?;
                writeln!(
                    text,
                    "  [{}] measuring identity on {} pairs ({}) to degree {max_degree}: {} counterexamples",
                    status(r.passed()),
                    r.pairs_checked,
                    if r.exhaustive { "exhaustive" } else { "sampled" },
                    r.counterexamples.len()
                )
                .unwrap();
                for c in r.counterexamples.iter().take(5) {
                    writeln!(
                        text,
                        "      {}({}·{}): {} != {}",
                        c.generator, c.left, c.right, c.lhs, c.rhs
                    )
                    .unwrap();
                }
                ("measuring", r.passed(), serde_json::to_value(&r))
            }
            SubCheck::Antipode => {
                let r = check_antipode(rep);
                let ok = r.iter().all(|(_, ok)| *ok);
                for (g, ok) in &r {
                    writeln!(text, "  [{}] m(S⊗1)Δ({g}) = ε({g})", status(*ok)).unwrap();
                }
                let v: Map<String, Value> = r.into_iter().map(|(g, ok)| (g, json!(ok))).collect();
                ("antipode", ok, Ok(Value::Object(v)))
            }
            SubCheck::Faithful => {
                let r = check_faithful_on_generators(rep);
                writeln!(
                    text,
                    "  [{}] generator matrices linearly independent (necessary condition only)",
                    status(r.generator_matrices_independent)
                )
                .unwrap();
                (
                    "faithful",
                    r.generator_matrices_independent,
                    serde_json::to_value(&r),
                )
            }
        };
        writeln!(text, "{name}: {}", status(ok)).unwrap();
        all_ok &= ok;
        reports.insert(name.into(), value.expect("report serializes"));
    }
    let json = json!({
        "command": "check",
        "rep": input.label,
        "checks": reports,
        "all_pass": all_ok,
    });
    Ok(Outcome {
        text,
        json,
        ok: all_ok,
    })
}

pub fn frt(
    input: &Input,
    max_degree: usize,
    pair: Option<&RepInput>,
    src: RSourceArg,
) -> Result<Outcome, Error> {
    let (label, space) = need_space(input)?;
    let source = match src {
        RSourceArg::Braiding => RSource::Braiding,
        RSourceArg::Rtt => RSource::Rtt,
    };
    let report = frt_report(space, source, max_degree)?;
    let mut text = String::new();
    let from = match source {
        RSource::Braiding => "the braiding",
        RSource::Rtt => "the RTT-form matrix",
    };
    writeln!(text, "A(R) for {label} (n = {}, α and β from {from})", report.n).unwrap();
    if report.relations.is_empty() {
        writeln!(text, "relations: none (empty relation set)").unwrap();
    } else {
        writeln!(text, "relations: {}", report.relation_count).unwrap();
        for l in &report.relations {
            writeln!(text, "  {l}").unwrap();
        }
    }
    let failing = report
        .coideal
        .entries
        .iter()
        .filter(|e| !(e.coproduct_ok && e.counit_ok))
        .count();
    writeln!(
        text,
        "coideal: {} ({} relations, {failing} failing)",
        status(report.coideal.all_pass),
        report.coideal.entries.len()
    )
    .unwrap();
    writeln!(text, "hilbert: {}", join_dims(&report.hilbert.dims)).unwrap();
    for w in report.warnings.iter().chain(&report.hilbert.warnings) {
        writeln!(text, "warning: {w}").unwrap();
    }
    let mut ok = report.coideal.all_pass;
    let mut json = json!({
        "command": "frt",
        "source": label,
        "frt": report,
    });
    if let Some(p) = pair {
        let d = check_duality(&p.rep, space, source, max_degree);
        writeln!(text, "duality with {} (max degree {max_degree}):", p.label).unwrap();
        writeln!(
            text,
            "  annihilation ⟨u, r⟩ = 0: {} ({} checks, {} failures)",
            status(d.annihilation_failures.is_empty()),
            d.annihilation_checks,
            d.annihilation_failures.len()
        )
        .unwrap();
        for w in d.annihilation_failures.iter().take(5) {
            writeln!(text, "      ⟨{}, {}⟩ = {}", w.u, w.element, w.value).unwrap();
        }
        writeln!(
            text,
            "  ⟨u, ab⟩ = Σ ⟨u1, a⟩⟨u2, b⟩: {} ({} samples)",
            status(d.coproduct_failures.is_empty()),
            d.coproduct_checks
        )
        .unwrap();
        writeln!(
            text,
            "  ⟨uv, a⟩ = Σ ⟨u, a1⟩⟨v, a2⟩: {} ({} samples), orientation: {}",
            status(d.product_plain_pass || d.product_op_pass),
            d.product_checks,
            d.orientation
        )
        .unwrap();
        writeln!(text, "duality: {}", status(d.all_pass)).unwrap();
        ok &= d.all_pass;
        json.as_object_mut().unwrap().insert(
            "duality".into(),
            serde_json::to_value(&d).expect("report serializes"),
        );
    }
    json.as_object_mut().unwrap().insert("all_pass".into(), json!(ok));
    Ok(Outcome { text, json, ok })
}
