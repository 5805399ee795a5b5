use serde_json::{json, Value};

use extlift::free::{
    normal_word_counts, obstructions_resolve, truncated_groebner_free, FreeSlices,
};
use extlift::gin::{
    borel_witness, gin_ext, gin_free, gin_lifted, hilbert_compare, GinIdeal, GinInput, GinRequest,
    GinResult,
};
use extlift::lifting::{
    is_squeezed, lift_groebner, naive_lift, squeeze_witness, stability_witness, ExchangeOrder,
};
use extlift::parse::{AlgebraKind, Generators, IdealFile};
use extlift::{
    groebner_ext, hilbert_ext, hilbert_rational, initial_ideal_ext, ExtGroebnerBasis, ExtIdeal,
    FreeGroebnerCandidate, FreeOrderSpec, MonomialIdealExt, MonomialIdealFree, RationalSeries,
};

use crate::render::{
    ext_poly, ext_poly_text, free_poly, free_poly_text, joined, monomials, words, Report,
};
use crate::{Failure, Options};

pub struct Output {
    pub text: String,
    pub failed: bool,
}

fn header(r: &mut Report, file: &IdealFile) {
    r.put("vars", json!(file.n), file.n);
    r.put(
        "algebra",
        json!(file.algebra().name()),
        file.algebra().name(),
    );
    r.put(
        "order",
        json!(file.order.kind().name()),
        file.order.kind().name(),
    );
    let asc = file.order.ascending_vars();
    let letter = if file.algebra() == AlgebraKind::Exterior {
        'x'
    } else {
        'X'
    };
    let text: Vec<String> = asc.iter().map(|v| format!("{letter}{v}")).collect();
    r.put("varorder", json!(asc), text.join(" < "));
}

fn exterior(file: &IdealFile) -> Result<ExtIdeal, Failure> {
    if file.algebra() != AlgebraKind::Exterior {
        return Err(Failure::Input(
            "this command needs an exterior ideal (algebra: exterior)".into(),
        ));
    }
    Ok(file.ext_ideal()?)
}

fn put_basis(r: &mut Report, gb: &ExtGroebnerBasis) {
    let order = gb.order();
    r.put_json(
        "groebner_basis",
        gb.elements().iter().map(|f| ext_poly(f, order)).collect(),
    );
    r.block(
        "groebner_basis",
        gb.elements().iter().map(|f| ext_poly_text(f, order)),
    );
}

fn series_json(s: &RationalSeries) -> Value {
    let strs = |v: &[extlift::BigInt]| -> Vec<String> { v.iter().map(|c| c.to_string()).collect() };
    json!({ "numerator": strs(&s.numerator), "denominator": strs(&s.denominator), "text": s.to_string() })
}

pub fn gb(file: &IdealFile, opts: &Options) -> Result<Output, Failure> {
    let ideal = exterior(file)?;
    let gb = groebner_ext(&ideal);
    let mut r = Report::new("gb");
    header(&mut r, file);
    put_basis(&mut r, &gb);
    let init = initial_ideal_ext(&gb);
    r.put("initial_ideal", monomials(init.generators()), &init);
    let h = hilbert_ext(&ideal);
    r.put("hilbert", json!(h), joined(&h));
    Ok(Output {
        text: r.finish(opts.json),
        failed: false,
    })
}

fn put_obstructions(r: &mut Report, cand: &FreeGroebnerCandidate) -> bool {
    let report = obstructions_resolve(cand);
    let order = cand.order();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|o| {
            json!({
                "kind": format!("{:?}", o.kind).to_lowercase(),
                "first": o.first,
                "second": o.second,
                "word": o.word.to_string(),
                "remainder": free_poly(&o.remainder, order),
            })
        })
        .collect();
    r.put(
        "obstructions",
        json!({
            "checked": report.checked,
            "skipped_above_cap": report.skipped_above_cap,
            "degree_cap": cand.degree_cap(),
            "resolve": report.resolves(),
            "failures": failures,
        }),
        format!(
            "{} checked, {} skipped above the degree cap, {}",
            report.checked,
            report.skipped_above_cap,
            if report.resolves() {
                "all resolve".to_string()
            } else {
                format!("{} fail", report.failures.len())
            }
        ),
    );
    if !report.resolves() {
        r.block(
            "failing_obstructions",
            report.failures.iter().map(|o| o.to_string()),
        );
    }
    report.resolves()
}

pub fn lift(file: &IdealFile, opts: &Options) -> Result<Output, Failure> {
    let ideal = exterior(file)?;
    let gb = groebner_ext(&ideal);
    let lift = lift_groebner(&gb)?;
    let order = lift.order().clone();
    let mut r = Report::new("lift");
    header(&mut r, file);
    put_basis(&mut r, &gb);
    let lifted: Vec<Value> = lift
        .lifted_elements()
        .iter()
        .map(|e| {
            json!({
                "source": ext_poly(&e.source, gb.order()),
                "multiplier": e.multiplier.to_string(),
                "element": free_poly(&e.element, &order),
            })
        })
        .collect();
    r.put_json("lifted_elements", Value::Array(lifted));
    r.block(
        "lifted_elements",
        lift.lifted_elements().iter().map(|e| {
            format!(
                "{}   (u = {})",
                free_poly_text(&e.element, &order),
                e.multiplier
            )
        }),
    );
    r.put_json(
        "anti_commutators",
        lift.anti_commutators()
            .iter()
            .map(|f| free_poly(f, &order))
            .collect(),
    );
    r.block(
        "anti_commutators",
        lift.anti_commutators()
            .iter()
            .map(|f| free_poly_text(f, &order)),
    );
    let init = lift.initial_ideal();
    r.put("initial_ideal", words(init.generators()), &init);
    let cand = lift.candidate();
    let minimal = cand.is_minimal();
    let squeezed = is_squeezed(&initial_ideal_ext(&gb))?;
    let naive = obstructions_resolve(&naive_lift(&gb)?).resolves();
    r.put("minimal", json!(minimal), minimal);
    r.put("squeezed", json!(squeezed), squeezed);
    r.put("naive_lift_is_groebner", json!(naive), naive);
    Ok(Output {
        text: r.finish(opts.json),
        failed: !minimal || naive != squeezed,
    })
}

/// `dim (T/a)_d` from the slices, and normal-word counts of the candidate.
fn dimension_check(r: &mut Report, expected: &[u128], init: &MonomialIdealFree) -> bool {
    let counts: Vec<u128> = normal_word_counts(init, expected.len() - 1)
        .into_iter()
        .map(|c| u128::try_from(c).expect("count fits"))
        .collect();
    let ok = counts == expected;
    r.put(
        "dimensions",
        json!({ "expected": expected, "normal_words": counts, "agree": ok }),
        format!(
            "expected {} normal words {} {}",
            joined(expected),
            joined(&counts),
            if ok { "agree" } else { "DISAGREE" }
        ),
    );
    ok
}

pub fn verify(file: &IdealFile, opts: &Options) -> Result<Output, Failure> {
    let n = file.n;
    let mut r = Report::new("verify");
    header(&mut r, file);
    let ok = match &file.generators {
        Generators::Exterior(_) => {
            let ideal = exterior(file)?;
            let gb = groebner_ext(&ideal);
            let lift = lift_groebner(&gb)?;
            let cand = lift
                .candidate()
                .with_degree_cap(Some(opts.maxdeg.unwrap_or(n + 1)));
            let init = lift.initial_ideal();
            r.put("initial_ideal", words(init.generators()), &init);
            let resolve = put_obstructions(&mut r, &cand);
            let mut expected = hilbert_ext(&ideal);
            expected.resize(opts.maxdeg.unwrap_or(n + 1) + 1, 0);
            let dims = dimension_check(&mut r, &expected, &init);
            resolve && dims && cand.is_minimal()
        }
        Generators::Free(gens) => {
            let order = file.free_order();
            let cand = FreeGroebnerCandidate::new(
                order.clone(),
                gens.iter().filter(|g| !g.is_zero()).cloned().collect(),
            )?
            .with_degree_cap(opts.maxdeg);
            let init = MonomialIdealFree::new(n, cand.leading_words().iter().cloned());
            r.put("initial_ideal", words(init.generators()), &init);
            r.put("minimal", json!(cand.is_minimal()), cand.is_minimal());
            let resolve = put_obstructions(&mut r, &cand);
            let cap = opts.maxdeg.unwrap_or(n + 1);
            let slices = FreeSlices::new(order, gens, cap)?;
            let expected: Vec<u128> = (0..=cap)
                .map(|d| (n as u128).pow(d as u32) - slices.dimension(d) as u128)
                .collect();
            let dims = dimension_check(&mut r, &expected, &init);
            resolve && dims
        }
    };
    r.put("verified", json!(ok), ok);
    Ok(Output {
        text: r.finish(opts.json),
        failed: !ok,
    })
}

fn gin_json(res: &GinResult) -> Value {
    let gens = match &res.gin {
        GinIdeal::Exterior(l) => monomials(l.generators()),
        GinIdeal::Free(b) => words(b.generators()),
    };
    json!({
        "generators": gens,
        "dimensions": res.dimensions,
        "max_degree": res.max_degree,
        "seeds": res.seeds.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "agreement": res.agreement,
        "disagreeing_trials": res.disagreeing,
    })
}

fn gin_text(res: &GinResult) -> String {
    let seeds: Vec<String> = res.seeds.iter().map(|s| s.to_string()).collect();
    format!(
        "{} up to degree {}, trial seeds [{}], {}",
        res.gin,
        res.max_degree,
        seeds.join(", "),
        if res.agreement {
            "trials agree"
        } else {
            "TRIALS DISAGREE: raise --height or change --seed"
        }
    )
}

fn borel(r: &mut Report, b: &MonomialIdealFree, order: &FreeOrderSpec) {
    let w = borel_witness(b, order);
    let value = json!({
        "fixed": w.is_none(),
        "witness": w.as_ref().map(|w| json!({
            "generator": w.generator.to_string(),
            "from": w.from,
            "to": w.to,
            "monomial": w.monomial.to_string(),
        })),
    });
    let text = match &w {
        None => "true".to_string(),
        Some(w) => format!("false ({w})"),
    };
    r.put("borel_fixed", value, text);
}

pub fn gin(file: &IdealFile, opts: &Options, skip_free: bool) -> Result<Output, Failure> {
    let n = file.n;
    let mut r = Report::new("gin");
    header(&mut r, file);
    let mut ok = true;
    let configure = |req: GinRequest| req.with_trials(opts.trials).with_height(opts.height);
    match &file.generators {
        Generators::Exterior(_) => {
            let input = GinInput::Exterior(exterior(file)?);
            let ext =
                gin_ext(&configure(GinRequest::new(input.clone(), opts.seed)).with_max_degree(n))?;
            r.put("gin_exterior", gin_json(&ext), gin_text(&ext));
            let l = ext.gin.as_exterior().expect("exterior");
            let toward = ExchangeOrder::for_term_order(&file.order);
            let strongly = stability_witness(l, &toward, true);
            r.put(
                "strongly_stable",
                json!(strongly.is_none()),
                strongly.map_or("true".to_string(), |w| format!("false ({w})")),
            );
            let hc = hilbert_compare(&input, &ext)?;
            r.put("hilbert_compare_exterior", json!(hc), hc);
            ok &= ext.agreement && hc;
            if l.generators().iter().all(|m| m.degree() >= 2) {
                let cap = opts.maxdeg.unwrap_or(n + 1);
                let req = configure(GinRequest::new(input.clone(), opts.seed)).with_max_degree(cap);
                let lifted = gin_lifted(&req)?;
                r.put("gin_lifted", gin_json(&lifted), gin_text(&lifted));
                let b = lifted.gin.as_free().expect("free");
                borel(&mut r, b, &file.free_order());
                if !skip_free {
                    let free = gin_free(&req)?;
                    r.put("gin_free", gin_json(&free), gin_text(&free));
                    let same = free.gin == lifted.gin;
                    r.put("lifted_equals_free", json!(same), same);
                    let hc = hilbert_compare(&input, &free)?;
                    r.put("hilbert_compare_free", json!(hc), hc);
                    ok &= free.agreement && same && hc;
                }
            }
        }
        Generators::Free(gens) => {
            let input = GinInput::Free {
                order: file.free_order(),
                generators: gens.clone(),
            };
            if opts.maxdeg.is_none() && !input.contains_anti_commutators() {
                eprintln!(
                    "warning: no --maxdeg given; using {} (the gin is not certified beyond it)",
                    n + 1
                );
            }
            let cap = opts.maxdeg.unwrap_or(n + 1);
            let res = gin_free(
                &configure(GinRequest::new(input.clone(), opts.seed)).with_max_degree(cap),
            )?;
            r.put("gin_free", gin_json(&res), gin_text(&res));
            borel(&mut r, res.gin.as_free().expect("free"), &file.free_order());
            let hc = hilbert_compare(&input, &res)?;
            r.put("hilbert_compare_free", json!(hc), hc);
            ok &= res.agreement && hc;
        }
    }
    Ok(Output {
        text: r.finish(opts.json),
        failed: !ok,
    })
}

pub fn hilbert(file: &IdealFile, opts: &Options) -> Result<Output, Failure> {
    let n = file.n;
    let mut r = Report::new("hilbert");
    header(&mut r, file);
    match &file.generators {
        Generators::Exterior(_) => {
            let ideal = exterior(file)?;
            let h = hilbert_ext(&ideal);
            r.put("hilbert", json!(h), joined(&h));
            let coeffs: Vec<extlift::BigInt> = h.iter().map(|&c| c.into()).collect();
            let s = RationalSeries::new(coeffs, vec![1.into()]);
            r.put("series", series_json(&s), &s);
        }
        Generators::Free(gens) => {
            let cap = opts.maxdeg.unwrap_or(n + 1);
            let order = file.free_order();
            let slices = FreeSlices::new(order.clone(), gens, cap)?;
            let h: Vec<u128> = (0..=cap)
                .map(|d| (n as u128).pow(d as u32) - slices.dimension(d) as u128)
                .collect();
            r.put("hilbert", json!(h), joined(&h));
            let basis = truncated_groebner_free(order, gens, cap)?.with_degree_cap(None);
            let certified = obstructions_resolve(&basis).resolves();
            let s = hilbert_rational(&slices.initial_ideal());
            r.put("series", series_json(&s), &s);
            r.put(
                "series_certified",
                json!(certified),
                if certified {
                    "true (the truncated basis is a Groebner basis)".to_string()
                } else {
                    format!("false (Groebner basis not complete by degree {cap}; raise --maxdeg)")
                },
            );
        }
    }
    Ok(Output {
        text: r.finish(opts.json),
        failed: false,
    })
}

fn stability(r: &mut Report, key: &str, l: &MonomialIdealExt, order: &ExchangeOrder, strong: bool) {
    let w = stability_witness(l, order, strong);
    let value = json!({
        "value": w.is_none(),
        "witness": w.map(|w| json!({
            "monomial": w.monomial.to_string(),
            "removed": w.removed,
            "inserted": w.inserted,
            "image": w.image.to_string(),
        })),
    });
    r.put(
        key,
        value,
        w.map_or("true".to_string(), |w| format!("false ({w})")),
    );
}

pub fn predicates(file: &IdealFile, opts: &Options) -> Result<Output, Failure> {
    let ideal = exterior(file)?;
    let gb = groebner_ext(&ideal);
    let l = initial_ideal_ext(&gb);
    let mut r = Report::new("predicates");
    header(&mut r, file);
    r.put("initial_ideal", monomials(l.generators()), &l);
    let asc = ExchangeOrder::index_ascending(file.n);
    let toward = ExchangeOrder::for_term_order(&file.order);
    stability(&mut r, "stable", &l, &asc, false);
    stability(&mut r, "strongly_stable", &l, &asc, true);
    stability(&mut r, "stable_toward_larger", &l, &toward, false);
    stability(&mut r, "strongly_stable_toward_larger", &l, &toward, true);
    match squeeze_witness(&l) {
        Ok(w) => {
            let value = json!({
                "value": w.is_none(),
                "witness": w.map(|w| json!({ "generator": w.generator.to_string(), "u": w.multiplier.to_string() })),
            });
            let text = w.map_or("true".to_string(), |w| {
                format!("false (u = {} for {})", w.multiplier, w.generator)
            });
            r.put("squeezed", value, text);
        }
        Err(e) => r.put(
            "squeezed",
            json!({ "value": null, "error": e.to_string() }),
            format!("undefined ({e})"),
        ),
    }
    Ok(Output {
        text: r.finish(opts.json),
        failed: false,
    })
}
