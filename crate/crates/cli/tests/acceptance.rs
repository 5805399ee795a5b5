//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails. Every random draw comes from a fixed seed printed
//! with the results.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use extlift::free::{normal_word_count, obstructions_resolve, truncated_groebner_free};
use extlift::gin::{
    borel_witness, gin_ext, gin_free, gin_lifted, hilbert_compare, random_gl, GinInput, GinRequest,
    GinResult, DEFAULT_HEIGHT,
};
use extlift::lifting::{
    anti_commutator_leads, is_squeezed, is_stable_with, is_strongly_stable_with, naive_lift,
    stable_closure, ExchangeOrder,
};
use extlift::scalar::int;
use extlift::{
    anti_commutators, groebner_ext, hilbert_ext, initial_ideal_ext, lift_groebner, pi, Error,
    ExtIdeal, ExtMonomial, ExtOrderSpec, ExtPolynomial, FreeOrderSpec, FreePolynomial,
    MonomialIdealExt, MonomialIdealFree, Word,
};

const CORPUS_SEED: u64 = 20_240_501;
const STABLE_SEED: u64 = 77;
const GIN_SEED: u64 = 4_242;
const QUADRIC_SEED: u64 = 9;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn w(v: &[usize]) -> Word {
    Word::from_vars(v)
}

/// Random homogeneous generators of degree `2..=n-1`, resampled until the
/// ideal is nonzero.
fn random_ideal(rng: &mut ChaCha8Rng, n: usize) -> ExtIdeal {
    loop {
        let count = rng.random_range(1..=3);
        let gens: Vec<ExtPolynomial> = (0..count)
            .map(|_| {
                let d = rng.random_range(2..=n - 1);
                let mut f = ExtPolynomial::zero(n);
                for _ in 0..rng.random_range(1..=4) {
                    let mut vars: Vec<usize> = (1..=n).collect();
                    for i in (1..n).rev() {
                        vars.swap(i, rng.random_range(0..=i));
                    }
                    vars.truncate(d);
                    let mut c = 0;
                    while c == 0 {
                        c = rng.random_range(-5..=5);
                    }
                    f.add_term(ExtMonomial::from_vars(&vars), int(c));
                }
                f
            })
            .collect();
        let ideal = ExtIdeal::new(ExtOrderSpec::deglex(n), gens).expect("homogeneous");
        if !ideal.generators().is_empty() {
            return ideal;
        }
    }
}

fn corpus() -> Vec<ExtIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..240)
        .map(|k| random_ideal(&mut rng, 3 + k % 3))
        .collect()
}

fn criterion_1() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_extlift");
    let mut details = Vec::new();
    let mut pass = true;
    for n in 2..=4 {
        let file = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("tests/data/anti{n}.ideal"));
        let start = Instant::now();
        let out = Command::new(bin)
            .args(["verify", "--json", file.to_str().unwrap()])
            .output()
            .expect("runs");
        let elapsed = start.elapsed();
        let text = String::from_utf8_lossy(&out.stdout);
        let expected: Vec<String> = {
            let mut v: Vec<Word> = anti_commutator_leads(n);
            v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
            v.iter().map(|w| format!("\"{w}\"")).collect()
        };
        let init_ok = text.contains(&format!(
            "\"initial_ideal\": [\n    {}\n  ]",
            expected.join(",\n    ")
        ));
        let ok = out.status.success()
            && text.contains("\"resolve\": true")
            && init_ok
            && elapsed < Duration::from_secs(5);
        pass &= ok;
        details.push(format!(
            "n={n} {:.2}s{}",
            elapsed.as_secs_f64(),
            if ok { "" } else { " FAILED" }
        ));
    }
    outcome(pass, details.join(", "))
}

/// Quadric in the free algebra with all six coefficients `c_ij`, `i <= j`,
/// nonzero. The squares vanish in `E(V)`, so the three mixed coefficients
/// are resampled until their images are nonzero too.
fn sampled_quadric() -> (FreePolynomial, Vec<i64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(QUADRIC_SEED);
    loop {
        let mut f = FreePolynomial::zero(3);
        let mut coeffs = Vec::new();
        for i in 1..=3 {
            for j in i..=3 {
                let mut c = 0;
                while c == 0 {
                    c = rng.random_range(-9..=9);
                }
                coeffs.push(c);
                f.add_term(w(&[i, j]), int(c));
            }
        }
        if pi(&f).len() == 3 {
            return (f, coeffs);
        }
    }
}

fn criterion_2(gins: &mut Vec<(GinInput, GinResult)>) -> Outcome {
    let (q, coeffs) = sampled_quadric();
    let image = pi(&q);
    let ideal = ExtIdeal::new(ExtOrderSpec::deglex(3), vec![image]).unwrap();
    let init = initial_ideal_ext(&groebner_ext(&ideal));
    let x2x3 = MonomialIdealExt::new(3, [ExtMonomial::from_vars(&[2, 3])]);
    let seven = MonomialIdealFree::new(
        3,
        [
            w(&[2, 3]),
            w(&[1, 1]),
            w(&[2, 2]),
            w(&[3, 3]),
            w(&[2, 1]),
            w(&[3, 1]),
            w(&[3, 2]),
        ],
    );
    let mut gens = vec![q];
    gens.extend(anti_commutators(3));
    let input = GinInput::Free {
        order: FreeOrderSpec::deglex(3),
        generators: gens,
    };
    let res = gin_free(&GinRequest::new(input.clone(), GIN_SEED).with_max_degree(4)).unwrap();
    let gin_ok = res.agreement && res.gin.as_free() == Some(&seven);
    let ext_input = GinInput::Exterior(ideal);
    let ext = gin_ext(&GinRequest::new(ext_input.clone(), GIN_SEED)).unwrap();
    let ext_ok = ext.gin.as_exterior() == Some(&x2x3);
    let lifted =
        gin_lifted(&GinRequest::new(ext_input.clone(), GIN_SEED).with_max_degree(4)).unwrap();
    let lifted_ok = lifted.gin == res.gin;
    let witness = borel_witness(&seven, &FreeOrderSpec::deglex(3));
    let borel_ok = witness.as_ref().is_some_and(|b| {
        b.generator == w(&[1, 1]) && b.from == 1 && b.to == 2 && b.monomial == w(&[1, 2])
    });
    gins.push((input, res));
    gins.push((ext_input, ext));
    outcome(
        init == x2x3 && gin_ok && ext_ok && lifted_ok && borel_ok,
        format!(
            "coefficients {coeffs:?}; in(I) = {init}; gin(J) = {}; Borel witness {}",
            gins[gins.len() - 2].1.gin,
            witness.map_or("none".into(), |b| b.monomial.to_string())
        ),
    )
}

fn criterion_3(gins: &mut Vec<(GinInput, GinResult)>) -> Outcome {
    let c = FreePolynomial::from_terms(2, [(w(&[1, 2]), int(1)), (w(&[2, 1]), int(-1))]);
    let input = GinInput::Free {
        order: FreeOrderSpec::deglex(2),
        generators: vec![c],
    };
    let res = gin_free(&GinRequest::new(input.clone(), GIN_SEED).with_max_degree(3)).unwrap();
    let b = res.gin.as_free().unwrap();
    let deg2: Vec<Word> = b.generators_of_degree(2).cloned().collect();
    let borel = borel_witness(b, &FreeOrderSpec::deglex(2));
    let pass = res.agreement && deg2 == vec![w(&[2, 1])] && borel.is_some();
    let detail = format!("degree-2 part {deg2:?}, Borel-fixed {}", borel.is_none());
    gins.push((input, res));
    outcome(pass, detail)
}

fn criterion_4() -> Outcome {
    let x1 = ExtPolynomial::monomial(2, ExtMonomial::from_vars(&[1]), int(1));
    let ideal = ExtIdeal::new(ExtOrderSpec::deglex(2), vec![x1]).unwrap();
    let refused = matches!(
        lift_groebner(&groebner_ext(&ideal)),
        Err(Error::LinearGenerator(_))
    );
    let mut gens = vec![FreePolynomial::word(2, &[1])];
    gens.extend(anti_commutators(2));
    let g = truncated_groebner_free(FreeOrderSpec::deglex(2), &gens, 3)
        .unwrap()
        .with_degree_cap(None);
    let resolves = obstructions_resolve(&g).resolves();
    let init = MonomialIdealFree::new(2, g.leading_words().iter().cloned());
    let expected = MonomialIdealFree::new(2, [w(&[1]), w(&[2, 2])]);
    outcome(
        refused && g.len() == 2 && resolves && init == expected,
        format!(
            "lift refused: {refused}; minimal basis of {} elements, initial ideal {init}",
            g.len()
        ),
    )
}

struct CorpusReport {
    lift_failures: Vec<usize>,
    cor_failures: Vec<usize>,
    saturation_failures: Vec<usize>,
    squeezed: usize,
    not_squeezed: usize,
    elapsed: Duration,
}

fn run_corpus(ideals: &[ExtIdeal]) -> CorpusReport {
    let start = Instant::now();
    let mut r = CorpusReport {
        lift_failures: Vec::new(),
        cor_failures: Vec::new(),
        saturation_failures: Vec::new(),
        squeezed: 0,
        not_squeezed: 0,
        elapsed: Duration::ZERO,
    };
    for (k, ideal) in ideals.iter().enumerate() {
        let n = ideal.n();
        let gb = groebner_ext(ideal);
        let lift = lift_groebner(&gb).expect("degree >= 2");
        let cand = lift.candidate();
        let init = lift.initial_ideal();
        let hilbert = hilbert_ext(ideal);
        let dims_ok = (0..=n + 1).all(|d| {
            let count = u128::try_from(normal_word_count(&init, d)).unwrap();
            count == hilbert.get(d).copied().unwrap_or(0)
        });
        if !(obstructions_resolve(&cand).resolves() && dims_ok) {
            r.lift_failures.push(k);
        }
        if normal_word_count(&init, n + 1) != 0u32.into() {
            r.saturation_failures.push(k);
        }
        let squeezed = is_squeezed(&initial_ideal_ext(&gb)).unwrap();
        if squeezed {
            r.squeezed += 1;
        } else {
            r.not_squeezed += 1;
        }
        let naive = naive_lift(&gb).unwrap();
        let naive_minimal_gb = naive.is_minimal() && obstructions_resolve(&naive).resolves();
        if naive_minimal_gb != squeezed || !cand.is_minimal() {
            r.cor_failures.push(k);
        }
    }
    r.elapsed = start.elapsed();
    r
}

fn random_monomial_ideal(rng: &mut ChaCha8Rng, n: usize) -> MonomialIdealExt {
    let count = rng.random_range(1..=3);
    let gens: Vec<ExtMonomial> = (0..count)
        .map(|_| {
            let d = rng.random_range(2..=n);
            let mut vars: Vec<usize> = (1..=n).collect();
            for i in (1..n).rev() {
                vars.swap(i, rng.random_range(0..=i));
            }
            ExtMonomial::from_vars(&vars[..d])
        })
        .collect();
    MonomialIdealExt::new(n, gens)
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(STABLE_SEED);
    let mut failures = 0;
    for k in 0..1000 {
        let n = rng.random_range(2..=6);
        let order = ExchangeOrder::index_ascending(n);
        let strong = k >= 500;
        let l = stable_closure(&random_monomial_ideal(&mut rng, n), &order, strong);
        let ok = if strong {
            is_strongly_stable_with(&l, &order) && is_stable_with(&l, &order)
        } else {
            is_stable_with(&l, &order) && is_squeezed(&l).unwrap()
        };
        if !ok {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("500 stable + 500 strongly stable ideals, seed {STABLE_SEED}, {failures} failures"),
    )
}

fn criterion_8(gins: &mut Vec<(GinInput, GinResult)>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(GIN_SEED);
    let mut persistent = Vec::new();
    let mut reruns = 0;
    for k in 0..120 {
        let n = 3 + k % 3;
        let ideal = random_ideal(&mut rng, n);
        let toward = ExchangeOrder::for_term_order(ideal.order());
        let input = GinInput::Exterior(ideal.clone());
        let mut cleared = false;
        for attempt in 0..4u64 {
            let seed = GIN_SEED.wrapping_add(1_000 * k as u64 + attempt);
            let res = gin_ext(&GinRequest::new(input.clone(), seed)).unwrap();
            let l = res.gin.as_exterior().unwrap().clone();
            let strongly = is_strongly_stable_with(&l, &toward);
            // naive lift of the basis in the first trial's coordinates
            let g = random_gl(n, res.seeds[0], DEFAULT_HEIGHT).unwrap();
            let moved: Vec<ExtPolynomial> = ideal
                .generators()
                .iter()
                .map(|f| g.apply_ext(f).unwrap())
                .collect();
            let gb = groebner_ext(&ExtIdeal::new(ideal.order().clone(), moved).unwrap());
            let naive = naive_lift(&gb).unwrap();
            let minimal = naive.is_minimal() && obstructions_resolve(&naive).resolves();
            let ok = res.agreement && strongly && minimal && initial_ideal_ext(&gb) == l;
            if ok {
                gins.push((input.clone(), res));
                cleared = true;
                break;
            }
            reruns += 1;
        }
        if !cleared {
            persistent.push(k);
        }
    }
    outcome(
        persistent.is_empty(),
        format!("120 ideals, n in 3..=5, {reruns} reruns with fresh seeds, persistent failures {persistent:?}"),
    )
}

fn criterion_9(gins: &[(GinInput, GinResult)]) -> Outcome {
    let failures = gins
        .iter()
        .filter(|(input, res)| !hilbert_compare(input, res).unwrap())
        .count();
    outcome(
        failures == 0,
        format!("{} gins compared, {failures} mismatches", gins.len()),
    )
}

fn all_words(n: usize, d: usize) -> Vec<Word> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| (1..=n).map(move |l| [p.clone(), vec![l]].concat()))
            .collect();
    }
    out.iter().map(|v| Word::from_vars(v)).collect()
}

fn criterion_10(report: &CorpusReport) -> Outcome {
    let mut exhaustive = true;
    for n in 2..=4 {
        let leads = MonomialIdealFree::new(n, anti_commutator_leads(n));
        exhaustive &= all_words(n, n + 1).iter().all(|w| leads.contains(w));
    }
    outcome(
        exhaustive && report.saturation_failures.is_empty(),
        format!(
            "exhaustive check n = 2..4: {exhaustive}; corpus ideals with normal words in degree n+1: {}",
            report.saturation_failures.len()
        ),
    )
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut gins = Vec::new();
    results.push((
        1,
        "anti-commutators verify, n = 2,3,4, < 5 s each",
        criterion_1(),
    ));
    results.push((
        2,
        "quadric example: in(I), gin(J), Borel witness",
        criterion_2(&mut gins),
    ));
    results.push((3, "commutator gin, n = 2, D = 3", criterion_3(&mut gins)));
    results.push((
        4,
        "linear generator: lift refused, (X1, X2^2)",
        criterion_4(),
    ));
    let ideals = corpus();
    let report = run_corpus(&ideals);
    results.push((
        5,
        "lift certified on random ideals",
        outcome(
            report.lift_failures.is_empty()
                && ideals.len() >= 200
                && report.elapsed < Duration::from_secs(600),
            format!(
                "{} ideals, seed {CORPUS_SEED}, {:.1}s, failures {:?}",
                ideals.len(),
                report.elapsed.as_secs_f64(),
                report.lift_failures
            ),
        ),
    ));
    results.push((
        6,
        "naive lift is a minimal basis iff squeezed",
        outcome(
            report.cor_failures.is_empty(),
            format!(
                "{} squeezed, {} not squeezed, failures {:?}",
                report.squeezed, report.not_squeezed, report.cor_failures
            ),
        ),
    ));
    results.push((7, "stable ideals are squeezed", criterion_7()));
    results.push((
        8,
        "generic initial ideals are strongly stable, lifts minimal",
        criterion_8(&mut gins),
    ));
    results.push((9, "Hilbert functions of gins", criterion_9(&gins)));
    results.push((10, "degree n+1 saturation", criterion_10(&report)));
    let mut failed = 0;
    for (k, name, o) in &results {
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} criterion {k}: {name} ({})",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
