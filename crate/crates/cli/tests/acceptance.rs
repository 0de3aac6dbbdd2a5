//! End-to-end checks of the verdicts the tool must reproduce. Each criterion
//! prints one PASS or FAIL line; the test fails if any criterion does.

use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use operad_pbw::dual::quadratic_dual;
use operad_pbw::format::{AlgebraDoc, PresentationDoc};
use operad_pbw::groebner::{complete, normal_monomial_counts, Element, GroebnerBasis, Presentation};
use operad_pbw::oracle::ideal_dims;
use operad_pbw::pbw::{
    derivative_presentation, numeric_pbw_check, pbw_verdict, sufficient_left_comb, u0_dims, Conclusion, NumericCheck,
};
use operad_pbw::rational::Q;
use operad_pbw::series::named::{as_egf, chi_com, chi_lie, com_egf, lie2_dual, lie_egf, pois_egf, to_qpoly};
use operad_pbw::series::{
    first_negative_schur, necessary_condition_egf, necessary_condition_sym, schur_expand, schur_to_p, Coeff, Partition,
    PowerSeries, QPoly, SeriesData, SymFun,
};
use operad_pbw::trees::{
    enumerate_monomials, graft, is_left_comb, Generator, MonomialOrder, OrderKind, Relabeling, ShuffleTree, Signature,
};
use operad_pbw::uea::{pbw_compare, DimVerdict};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn operad_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../operads").join(name)
}

fn load(name: &str) -> (PresentationDoc, Presentation) {
    let doc = PresentationDoc::parse(&std::fs::read_to_string(operad_file(name)).unwrap()).unwrap();
    let p = doc.to_presentation().unwrap();
    (doc, p)
}

fn algebra(name: &str, doc: &PresentationDoc) -> operad_pbw::uea::AlgebraData {
    let a = AlgebraDoc::parse(&std::fs::read_to_string(operad_file(name)).unwrap()).unwrap();
    a.to_algebra(doc.symmetric.as_ref()).unwrap()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Result<Value, String> {
        serde_json::from_str(&self.stdout).map_err(|e| format!("bad json ({e}): {}", self.stdout))
    }
}

fn cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_operad-pbw")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn exit(run: &Run, code: i32, what: &str) -> Check {
    ensure(run.code == code, || format!("{what}: exit {} (want {code}); {}", run.code, run.stderr.trim()))
}

fn path(name: &str) -> String {
    operad_file(name).to_string_lossy().into_owned()
}

fn strings(v: &Value) -> Vec<String> {
    let mut out: Vec<String> =
        v.as_array().into_iter().flatten().filter_map(|x| x.as_str().map(String::from)).collect();
    out.sort();
    out
}

fn sorted(xs: &[&str]) -> Vec<String> {
    let mut out: Vec<String> = xs.iter().map(|s| s.to_string()).collect();
    out.sort();
    out
}

fn int(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn prelie_pbw() -> Check {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let basis = dir.path().join("prelie-gb.json");
    let basis_s = basis.to_string_lossy().into_owned();
    let run = cli(&[
        "gb",
        &path("prelie.json"),
        "--order",
        "pathlex",
        "--max-arity",
        "5",
        "--format",
        "json",
        "--out",
        &basis_s,
    ]);
    exit(&run, 0, "gb")?;
    let report = run.json()?;
    let leads = strings(&report["basis"]["leading"]);
    let want = sorted(&["gt(gt(1,2),3)", "gt(lt(1,2),3)", "gt(lt(1,3),2)"]);
    ensure(leads == want, || format!("leading monomials {leads:?}"))?;
    let dims: Vec<u64> = report["dims"].as_array().unwrap().iter().filter_map(Value::as_u64).collect();
    ensure(dims == [1, 2, 9, 64, 625], || format!("dims {dims:?}"))?;
    let (_, p) = load("prelie.json");
    let g = complete(&p, &MonomialOrder::new(OrderKind::PathLex, vec!["gt".into(), "lt".into()]).unwrap(), 5).unwrap();
    let mut got: Vec<String> = g.elements().iter().map(ToString::to_string).collect();
    let mut given: Vec<String> = p.relations.iter().map(ToString::to_string).collect();
    got.sort();
    given.sort();
    ensure(got == given, || format!("basis {got:?} differs from the relations {given:?}"))?;
    ensure(sufficient_left_comb(&g) == Ok(true), || "left-comb test not true".into())?;
    exit(&cli(&["verify", &basis_s, "--max-arity", "5"]), 0, "verify")?;
    let run = cli(&["pbw", &path("prelie.json"), "--format", "json"]);
    exit(&run, 0, "pbw")?;
    let verdict = run.json()?;
    ensure(verdict["conclusion"] == "proven", || format!("verdict {}", verdict["conclusion"]))?;
    within(start, Duration::from_secs(10))
}

fn leibniz_basis() -> Check {
    let start = Instant::now();
    let run =
        cli(&["verify", &path("leib.json"), "--order", "path-opp-deglex", "--max-arity", "5", "--format", "json"]);
    exit(&run, 0, "verify")?;
    let report = run.json()?;
    ensure(report["verified"] == true, || "not verified".into())?;
    let leads = strings(&report["leading"]);
    let want =
        sorted(&["lt(1,lt(2,3))", "lt(1,gt(2,3))", "gt(1,lt(2,3))", "gt(1,gt(2,3))", "gt(lt(1,2),3)", "gt(lt(1,3),2)"]);
    ensure(leads == want, || format!("leading monomials {leads:?}"))?;
    let (_, p) = load("leib.json");
    let order = MonomialOrder::new(OrderKind::PathOppositeDegLex, vec!["gt".into(), "lt".into()]).unwrap();
    let g = GroebnerBasis::from_elements(p.signature.clone(), order, p.relations.clone()).unwrap();
    let g = operad_pbw::groebner::verified(g, 5);
    ensure(g.certified, || "library verification failed".into())?;
    ensure(sufficient_left_comb(&g) == Ok(false), || "left-comb test not false".into())?;
    within(start, Duration::from_secs(10))
}

fn zinbiel_pbw() -> Check {
    let start = Instant::now();
    let (_, leib) = load("leib.json");
    let z = quadratic_dual(&leib).map_err(|e| e.to_string())?;
    let g = complete(&z, &MonomialOrder::for_signature(OrderKind::PathLex, &z.signature), 7).unwrap();
    ensure(g.certified, || "dual basis not certified".into())?;
    let bad: Vec<String> = g.leading_monomials().iter().filter(|t| !is_left_comb(t)).map(ToString::to_string).collect();
    ensure(bad.is_empty(), || format!("leading monomials not left combs: {bad:?}"))?;
    let v = pbw_verdict(&g, 6).unwrap();
    ensure(v.conclusion() == Conclusion::Proven, || format!("verdict {}", v.conclusion().name()))?;
    let u0 = u0_dims(&g, &derivative_presentation(&z), 6).unwrap();
    let f = PowerSeries::<Q>::egf_from_dims(&u0);
    let one_plus_t = PowerSeries::from_coeffs(vec![int(1), int(1)], 6);
    let want = one_plus_t.mul(&one_plus_t);
    ensure(f == want, || format!("u0 series {f}, want {want}"))?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dual = dir.path().join("zinb.json").to_string_lossy().into_owned();
    exit(&cli(&["dual", &path("leib.json"), "--out", &dual]), 0, "dual")?;
    let run = cli(&["pbw", &dual, "--max-arity", "7", "--format", "json"]);
    exit(&run, 0, "pbw")?;
    ensure(run.json()?["conclusion"] == "proven", || "cli verdict not proven".into())?;
    within(start, Duration::from_secs(10))
}

/// Coefficients of `(1+qt)^{1+1/q}` up to `t^n`: `prod_{k<m} (1 + (1-k) q) / m!`.
fn pois_closed_form(n: usize) -> Vec<QPoly> {
    let mut out = vec![QPoly::constant(int(1))];
    let mut acc = QPoly::constant(int(1));
    for m in 1..=n {
        let k = m as i64 - 1;
        let mut factor = QPoly::constant(int(1));
        factor.add_term(1, int(1 - k));
        acc = acc.mul(&factor).scale(&frac(1, m as i64));
        out.push(acc.clone());
    }
    out
}

fn poisson_refutation() -> Check {
    let start = Instant::now();
    let r = necessary_condition_egf(&pois_egf(6)).map_err(|e| e.to_string())?;
    let SeriesData::Egf(f) = &r.series else { return Err("expected a power series".into()) };
    let closed = pois_closed_form(5);
    for (n, want) in closed.iter().enumerate().take(f.truncation()) {
        ensure(f.coeff(n) == want, || format!("t^{n}: {} vs closed form {want}", f.coeff(n)))?;
    }
    ensure(!r.nonnegative, || "nonnegativity did not fail".into())?;
    let run = cli(&["pbw", &path("pois.json"), "--format", "json"]);
    exit(&run, 3, "pbw")?;
    ensure(run.json()?["conclusion"] == "refuted", || "cli verdict not refuted".into())?;
    let mut stated = QPoly::constant(frac(-1, 6));
    stated.add_term(2, frac(1, 6));
    ensure(f.coeff(3) == &stated, || format!("t^3 coefficient is {}, not (q^2-1)/6 as stated", f.coeff(3)))?;
    within(start, Duration::from_secs(1))
}

fn classical_series() -> Check {
    let cases: [(&str, PowerSeries<Q>, Vec<Q>); 3] = [
        ("com", com_egf(12), (0..=10).map(|k| Q::new(1.into(), operad_pbw::rational::factorial(k))).collect()),
        ("lie", lie_egf(12), [int(1), int(1)].into_iter().chain(std::iter::repeat_n(int(0), 9)).collect()),
        ("as", as_egf(12), [int(1), int(2), int(1)].into_iter().chain(std::iter::repeat_n(int(0), 8)).collect()),
    ];
    for (name, f, want) in cases {
        let r = necessary_condition_egf(&to_qpoly(&f)).map_err(|e| e.to_string())?;
        let SeriesData::Egf(g) = &r.series else { return Err(format!("{name}: expected a power series")) };
        ensure(g.truncation() > 10, || format!("{name}: only {} coefficients", g.truncation()))?;
        for (n, w) in want.iter().enumerate() {
            let c = g.coeff(n).as_constant();
            ensure(c.as_ref() == Some(w), || format!("{name} t^{n}: {} vs {w}", g.coeff(n)))?;
        }
        ensure(r.nonnegative, || format!("{name}: flagged negative"))?;
    }
    Ok(())
}

fn lie2_character() -> Check {
    let start = Instant::now();
    let r = necessary_condition_sym(&lie2_dual(6)).map_err(|e| e.to_string())?;
    let SeriesData::Sym(chi) = &r.series else { return Err("expected a character".into()) };
    // exp(Σ p_k/k) / (1 - Σ p_k), built from primitives
    let n = 5;
    let sum = |w: fn(usize) -> Q| SymFun::from_terms((1..=n).map(|k| (Partition::new(vec![k]), w(k))), n);
    let h = sum(|k| frac(1, k as i64)).exp().map_err(|e| e.to_string())?;
    let denom = SymFun::constant(int(1), n).sub(&sum(|_| int(1)));
    let want = h.mul(&denom.inverse().map_err(|e| e.to_string())?);
    for d in 0..=n {
        ensure(chi.degree_part(d).truncate(n) == want.degree_part(d), || format!("degree {d} differs"))?;
    }
    let schur = schur_expand(&chi.truncate(n));
    ensure(first_negative_schur(&schur).is_none(), || {
        format!("negative Schur coefficient {:?}", first_negative_schur(&schur))
    })?;
    within(start, Duration::from_secs(60))
}

fn perm_refutation() -> Check {
    let start = Instant::now();
    let (_, prelie) = load("prelie.json");
    let g = complete(&prelie, &MonomialOrder::for_signature(OrderKind::PathLex, &prelie.signature), 3).unwrap();
    let dims = normal_monomial_counts(&g, 3).unwrap();
    ensure(dims[2] == 9, || format!("dim PreLie(3) = {}", dims[2]))?;
    let (_, perm) = load("perm.json");
    let g = complete(&perm, &MonomialOrder::for_signature(OrderKind::PathLex, &perm.signature), 4).unwrap();
    let (check, table) = numeric_pbw_check(&g, &derivative_presentation(&perm), 3).unwrap();
    ensure(check == NumericCheck::FailsAt(2), || format!("numeric check {check:?}"))?;
    // f_U0 ∘ f_Perm would need more than the 8 available in arity 3
    ensure(table.derivative[2] == 3 && table.forced[2] < int(0), || format!("table {table:?}"))?;
    exit(&cli(&["pbw", &path("perm.json")]), 3, "pbw")?;
    within(start, Duration::from_secs(10))
}

fn koszul_characters() -> Check {
    let lhs = chi_lie(4).epsilon().plethysm(&chi_com(4).epsilon()).map_err(|e| e.to_string())?;
    let p1 = SymFun::p(1, 4);
    ensure(lhs == p1, || format!("ε(χ_Lie)∘ε(χ_Com) = {lhs}"))
}

fn enveloping_witnesses() -> Check {
    let start = Instant::now();
    let (ldoc, lie) = load("lie.json");
    let rep = pbw_compare(&lie, &algebra("sl2.json", &ldoc), 3).map_err(|e| e.to_string())?;
    ensure(rep.verdict == DimVerdict::MatchUpTo(3), || format!("sl2: {:?}", rep.verdict))?;
    ensure(rep.graded_dims == [1, 3, 6, 10], || format!("sl2 graded {:?}", rep.graded_dims))?;
    let (bdoc, leib) = load("leib.json");
    let rep = pbw_compare(&leib, &algebra("leib-witness.json", &bdoc), 2).map_err(|e| e.to_string())?;
    ensure(rep.verdict == DimVerdict::MismatchAt(1), || format!("leib: {:?}", rep.verdict))?;
    ensure(rep.filtered_dims[1] == 4 && rep.reference_filtered[1] == 5, || {
        format!("leib F1 {:?} vs {:?}", rep.filtered_dims, rep.reference_filtered)
    })?;
    ensure(rep.refutes(), || "leib witness does not refute".into())?;
    exit(&cli(&["uea", "compare", &path("lie.json"), &path("sl2.json"), "--depth", "3"]), 0, "uea compare sl2")?;
    let run =
        cli(&["pbw", &path("leib.json"), "--algebra", &path("leib-witness.json"), "--depth", "2", "--format", "json"]);
    exit(&run, 3, "pbw leib with witness")?;
    within(start, Duration::from_secs(30))
}

fn random_labels(rng: &mut ChaCha8Rng, total: usize, k: usize) -> Relabeling {
    let mut labels: Vec<usize> = (1..=total).collect();
    for i in 0..k {
        let j = rng.gen_range(i..total);
        labels.swap(i, j);
    }
    let mut s = labels[..k].to_vec();
    s.sort_unstable();
    Relabeling::new(s)
}

fn admissibility(rng: &mut ChaCha8Rng) -> Check {
    let sig = Signature::new(vec![Generator::binary("gt"), Generator::binary("lt"), Generator::new("t", 3)]).unwrap();
    let pool: Vec<ShuffleTree> = (1..=4).flat_map(|n| enumerate_monomials(sig.gens(), n, None).unwrap()).collect();
    let mut cases = 0;
    let mut attempts = 0;
    while cases < 10_000 {
        attempts += 1;
        ensure(attempts < 1_000_000, || format!("only {cases} admissible grafts generated"))?;
        let kind = if rng.gen() { OrderKind::PathLex } else { OrderKind::PathOppositeDegLex };
        let o = MonomialOrder::for_signature(kind, &sig);
        let a = &pool[rng.gen_range(0..pool.len())];
        let same: Vec<&ShuffleTree> = pool.iter().filter(|x| x.arity() == a.arity() && *x != a).collect();
        if same.is_empty() {
            continue;
        }
        let b = same[rng.gen_range(0..same.len())];
        let (lo, hi) = if o.compare(a, b).unwrap() == Ordering::Less { (a, b) } else { (b, a) };
        let g = &pool[rng.gen_range(0..pool.len())];
        let inner_side: bool = rng.gen();
        let (outer_arity, inner_arity) = if inner_side { (g.arity(), lo.arity()) } else { (lo.arity(), g.arity()) };
        let leaf = rng.gen_range(1..=outer_arity);
        let rel = random_labels(rng, outer_arity + inner_arity - 1, inner_arity);
        let pair = if inner_side {
            (graft(g, leaf, lo, &rel), graft(g, leaf, hi, &rel))
        } else {
            (graft(lo, leaf, g, &rel), graft(hi, leaf, g, &rel))
        };
        if let (Ok(x), Ok(y)) = pair {
            cases += 1;
            ensure(o.compare(&x, &y).unwrap() == Ordering::Less, || format!("{lo} < {hi} but {x} >= {y} ({kind:?})"))?;
        }
    }
    Ok(())
}

fn idempotent_reduction(rng: &mut ChaCha8Rng) -> Check {
    for name in ["prelie.json", "leib.json", "pois.json"] {
        let (doc, p) = load(name);
        let order = doc
            .order(&p.signature)
            .unwrap()
            .unwrap_or_else(|| MonomialOrder::for_signature(OrderKind::PathLex, &p.signature));
        let g = complete(&p, &order, 4).unwrap();
        let monomials = enumerate_monomials(p.signature.gens(), 4, None).unwrap();
        for _ in 0..200 {
            let terms = (0..rng.gen_range(1..6))
                .map(|_| (int(rng.gen_range(-3..=3)), monomials[rng.gen_range(0..monomials.len())].clone()));
            let e = Element::from_terms(terms).unwrap();
            let r = g.reduce(&e);
            ensure(g.reduce(&r) == r, || format!("{name}: reducing {e} twice changes the result"))?;
            ensure(r.terms().all(|(t, _)| !g.leading_monomials().contains(t)), || format!("{name}: {r} not reduced"))?;
        }
    }
    Ok(())
}

fn double_factorial_counts() -> Check {
    let sig = Signature::new(vec![Generator::binary("m")]).unwrap();
    let mut want = 1usize;
    for n in 2..=6 {
        want *= 2 * n - 3;
        let got = enumerate_monomials(sig.gens(), n, None).unwrap().len();
        ensure(got == want, || format!("arity {n}: {got} trees, want {want}"))?;
    }
    Ok(())
}

fn oracle_dims() -> Check {
    for name in ["lie.json", "com.json", "as.json", "prelie.json", "leib.json"] {
        let (_, p) = load(name);
        let brute = ideal_dims(&p, 4);
        for kind in [OrderKind::PathLex, OrderKind::PathOppositeDegLex] {
            let g = complete(&p, &MonomialOrder::for_signature(kind, &p.signature), 4).unwrap();
            let dims = normal_monomial_counts(&g, 4).unwrap();
            ensure(dims == brute, || format!("{name} {kind:?}: {dims:?} vs brute force {brute:?}"))?;
        }
    }
    Ok(())
}

fn schur_round_trip(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..50 {
        let mut f = SymFun::zero(6);
        for n in 0..=6 {
            for lambda in Partition::all(n) {
                if rng.gen_bool(0.4) {
                    f.add_term(lambda, frac(rng.gen_range(-5..=5), rng.gen_range(1..=4)));
                }
            }
        }
        let back = schur_to_p(&schur_expand(&f), 6);
        ensure(back == f, || format!("{f} came back as {back}"))?;
    }
    Ok(())
}

fn property_suites() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    admissibility(&mut rng)?;
    idempotent_reduction(&mut rng)?;
    double_factorial_counts()?;
    oracle_dims()?;
    schur_round_trip(&mut rng)?;
    within(start, Duration::from_secs(300))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("pre-Lie has PBW via a left-comb basis", prelie_pbw),
        ("Leibniz Groebner basis and leading terms", leibniz_basis),
        ("Zinbiel has PBW, U0 series (1+t)^2", zinbiel_pbw),
        ("Poisson refuted by the series test", poisson_refutation),
        ("Com, Lie, As series", classical_series),
        ("two compatible brackets: character and Schur positivity", lie2_character),
        ("Perm refuted by the numeric check", perm_refutation),
        ("Lie and Com characters almost inverse", koszul_characters),
        ("enveloping algebra witnesses", enveloping_witnesses),
        ("property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({t:.2?})", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name} ({t:.2?}): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
