//! Acceptance criteria, one line each. Exact arithmetic throughout, so every
//! comparison is equality.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rational_tetra::algebra::{ratio, Rational};
use rational_tetra::cayley_menger::{
    ankum_degree_check, cm0_polynomial, cm_polynomial, cm_value_by_determinant, heron_eval, heron_forms_check,
    neiss_identity_check, sample_leading_sign, schulz_a_printed, shift_expansion, EdgeTuple,
};
use rational_tetra::points::checks::{collinear_seed, random_weddle_inputs};
use rational_tetra::points::{
    classify_faces, collinear_tuples, conic_descent, gaussian_point, heron_cubic_check, heron_point, weddle_point,
};
use rational_tetra::sampling;
use rational_tetra::tetrahedroid::{
    configuration, duality_check, incidence_check, irrational_form_checks, t_dual_scaling_check, t_scaling_check,
    t_symbolic, verify_nodes, verify_tropes, TetraParams,
};
use rational_tetra::weddle::{central_identity_check, jacobian_weddle, printed_span_report, quadric_basis_through, SixPointConfig};
use rational_tetra::MultiPoly;

const SEED: u64 = 0;
const SEARCH_MAX_EDGE: &str = "16";

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

/// Conjunction of named clauses; the detail lists the failing ones.
struct Clauses(Vec<(String, bool, String)>);

impl Clauses {
    fn new() -> Self {
        Clauses(Vec::new())
    }

    fn add(&mut self, name: &str, ok: bool, info: impl Into<String>) {
        self.0.push((name.to_string(), ok, info.into()));
    }

    fn outcome(self) -> Outcome {
        let pass = self.0.iter().all(|c| c.1);
        let detail = self
            .0
            .iter()
            .map(|(n, ok, info)| {
                let mark = if *ok { "ok" } else { "FAILED" };
                if info.is_empty() {
                    format!("{n} {mark}")
                } else {
                    format!("{n} {mark} ({info})")
                }
            })
            .collect::<Vec<_>>()
            .join("; ");
        Outcome::new(pass, detail)
    }
}

fn rtetra(args: &[&str]) -> (Option<i32>, Vec<u8>, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_rtetra")).args(args).output().expect("binary runs");
    (out.status.code(), out.stdout, start.elapsed())
}

fn parse_csv_edges(csv: &[u8]) -> Vec<([i64; 6], String)> {
    let text = std::str::from_utf8(csv).expect("utf8");
    text.lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            let d: [i64; 6] = std::array::from_fn(|i| f[i].parse().expect("integer edge"));
            (d, f[6].to_string())
        })
        .collect()
}

fn c1() -> Outcome {
    let start = Instant::now();
    let cm = cm_polynomial();
    let cm0 = cm0_polynomial();
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    let coeff_ok = |p: &MultiPoly, c: &Rational| p.terms().all(|(_, x)| *x == *c || *x == -c.clone());
    let elapsed = start.elapsed();
    let mut c = Clauses::new();
    c.add("22 monomials", cm.term_count() == 22, cm.term_count().to_string());
    c.add("CM coefficients +-1", coeff_ok(cm, &one), "");
    c.add("CM0 coefficients +-2", cm0.term_count() == 22 && coeff_ok(cm0, &two), "");
    c.add("runtime < 1 s", elapsed < Duration::from_secs(1), format!("{elapsed:?}"));
    c.outcome()
}

fn c2() -> Outcome {
    let v = heron_forms_check();
    let h = heron_eval(&Rational::from_integer(3.into()), &Rational::from_integer(4.into()), &Rational::from_integer(5.into()));
    let area = Rational::from_integer(6.into());
    let four_a = &area * Rational::from_integer(4.into());
    let mut c = Clauses::new();
    c.add("three forms agree", v.is_pass(), v.notes);
    c.add("H(3,4,5) = 576", h == Rational::from_integer(576.into()), h.to_string());
    c.add("(4A)^2 = H with A = 6", &four_a * &four_a == h, "");
    c.outcome()
}

fn c3() -> Outcome {
    let start = Instant::now();
    let v = neiss_identity_check();
    let elapsed = start.elapsed();
    let mut c = Clauses::new();
    c.add("residual zero", v.is_pass() || v.is_corrected(), format!("{}: {}", v.status, v.notes));
    c.add("runtime < 10 s", elapsed < Duration::from_secs(10), format!("{elapsed:?}"));
    c.outcome()
}

fn c4() -> Outcome {
    let deg = ankum_degree_check();
    let e = shift_expansion();
    let a = e.d12_coefficients.get(1).cloned().unwrap_or_else(|| MultiPoly::from_int(0));
    let residual = &a - &schulz_a_printed();
    let s = sample_leading_sign(SEED, 1000);
    let mut c = Clauses::new();
    c.add("s^3, s^4 coefficients vanish", deg.is_pass(), "");
    c.add(
        "s-coefficient of shifted D12 equals printed A",
        residual.is_zero(),
        format!("{} residual terms; the coefficient is degree 3, linear in d14, d24, d34", residual.term_count()),
    );
    let first = s
        .nonpositive
        .first()
        .map(|(d, a)| format!("; e.g. {d} has alpha = {a}"))
        .unwrap_or_default();
    c.add(
        "alpha > 0 on 1000 realizable tuples",
        s.nonpositive.is_empty(),
        format!("{} of {} nonpositive{first}", s.nonpositive.len(), s.samples),
    );
    c.outcome()
}

fn c5() -> Outcome {
    let params = TetraParams::symbolic();
    let cfg = configuration(&params);
    let t = t_symbolic();
    let v = verify_nodes(&cfg, t);
    // coplanarity of the table entries as printed
    let printed_planes: Vec<usize> = (0..4)
        .map(|k| cfg.nodes.iter().filter(|n| n.printed.coords()[k].is_zero()).count())
        .collect();
    let mut c = Clauses::new();
    c.add("all 16 table nodes singular", v.is_pass(), format!("{}: {}", v.status, v.notes));
    c.add(
        "coordinate planes hold four table nodes each",
        printed_planes == [4, 4, 4, 4],
        format!("table nodes per plane X0..X3 = {printed_planes:?}"),
    );
    c.outcome()
}

fn c6() -> Outcome {
    let cfg = configuration(&TetraParams::symbolic());
    let t = t_symbolic();
    let v = verify_tropes(&cfg, t);
    let inc = incidence_check(&cfg);
    let mut c = Clauses::new();
    c.add("16 tropes give lambda Q^2", v.is_pass(), v.notes);
    c.add("16_6 incidence", inc.is_pass(), inc.notes);
    c.outcome()
}

fn c7() -> Outcome {
    let mut c = Clauses::new();
    let d = duality_check();
    c.add("duality", d.is_pass(), "");
    let s = t_scaling_check();
    c.add("T scaling", s.is_pass(), "");
    let sd = t_dual_scaling_check();
    c.add("T* scaling", sd.is_pass(), format!("{}: {}", sd.status, sd.notes));
    for v in irrational_form_checks() {
        let ok = if v.check == "tetrahedroid.irrational_quartic" {
            v.is_pass() || v.is_corrected()
        } else {
            v.is_pass()
        };
        c.add(&v.check, ok, if v.is_corrected() { "L2L2' reading" } else { "" });
    }
    c.outcome()
}

fn c8() -> Outcome {
    let start = Instant::now();
    let v = central_identity_check();
    let elapsed = start.elapsed();
    let mut c = Clauses::new();
    c.add("c^2 T(S*) + W^2 = 0", v.is_pass(), v.notes);
    c.add("runtime < 60 s", elapsed < Duration::from_secs(60), format!("{elapsed:?}"));
    c.outcome()
}

fn c9() -> Outcome {
    let mut rng = sampling::rng(SEED, sampling::stream::CONFIGURATION);
    let mut good = 0;
    let configs = 20;
    for _ in 0..configs {
        let cfg = SixPointConfig::random(&mut rng);
        let dim_ok = quadric_basis_through(&cfg).is_ok_and(|b| b.forms.len() == 4 && b.rank() == Some(4));
        if dim_ok && jacobian_weddle(&cfg).is_ok() {
            good += 1;
        }
    }
    let mut rng = sampling::rng(SEED, sampling::stream::CONFIGURATION);
    let report = printed_span_report(&SixPointConfig::random(&mut rng));
    let mut c = Clauses::new();
    c.add("dimension 4 and JS proportional to W", good == configs, format!("{good} of {configs}"));
    c.add(
        "printed S1..S4 span report",
        report.is_ok(),
        report.map(|r| format!("in span {:?}", r.in_span)).unwrap_or_else(|e| e.to_string()),
    );
    c.outcome()
}

fn c10() -> Outcome {
    let inputs = random_weddle_inputs(SEED, 100);
    let mut real = 0;
    let mut gauss = 0;
    for (p, x) in &inputs {
        if let Ok(pt) = weddle_point(&p[0], &p[1], &p[2], x) {
            let y = pt.y_rational().expect("real");
            if pt.sign == -1 && &y * &y == -cm_value_by_determinant(&pt.edges) {
                real += 1;
            }
        }
        if let Ok(pt) = gaussian_point(&p[0], &p[1], &p[2], x) {
            let y2 = pt.y.clone() * pt.y.clone();
            if pt.sign == 1 && y2.im == Rational::from_integer(0.into()) && y2.re == cm_value_by_determinant(&pt.edges) {
                gauss += 1;
            }
        }
    }
    let mut c = Clauses::new();
    c.add("y^2 = -CM", real == 100, format!("{real} of 100"));
    c.add("Q(i) points on y^2 = CM", gauss == 100, format!("{gauss} of 100"));
    c.outcome()
}

fn c11() -> Outcome {
    let seed = collinear_seed();
    let mut found = BTreeSet::new();
    let mut bad = 0;
    for k in 1..=100i64 {
        match conic_descent(&seed, &ratio(k, 7)) {
            Ok(p) => {
                let y = p.y_rational().expect("real");
                if &y * &y == cm_value_by_determinant(&p.edges) {
                    found.insert(p.edges.to_strings());
                } else {
                    bad += 1;
                }
            }
            Err(_) => bad += 1,
        }
    }
    Outcome::new(
        found.len() >= 100 && bad == 0,
        format!("{} distinct verified solutions, {bad} failures", found.len()),
    )
}

fn c12() -> Outcome {
    let mut c = Clauses::new();
    let fixture = heron_point(&ratio(1, 2), &ratio(1, 1));
    let fixture_ok = fixture.as_ref().is_ok_and(|p| {
        [p.a.clone(), p.b.clone(), p.c.clone()] == [ratio(5, 12), ratio(1, 4), ratio(1, 3)]
            && heron_eval(&p.a, &p.b, &p.c) == ratio(1, 36)
    });
    c.add("(1/2, 1) fixture", fixture_ok, "");
    let mut rng = sampling::rng(SEED, sampling::stream::POINTS);
    let mut ok = 0;
    let mut drawn = 0;
    while drawn < 50 {
        use rand::Rng;
        let v = ratio(rng.gen_range(1..=40), rng.gen_range(1..=40));
        let t = ratio(rng.gen_range(-40..=40), rng.gen_range(1..=40));
        if let Ok(p) = heron_point(&v, &t) {
            drawn += 1;
            if &p.y * &p.y == heron_eval(&p.a, &p.b, &p.c) {
                ok += 1;
            }
        }
    }
    c.add("Y^2 = H on 50 samples", ok == 50, format!("{ok} of 50"));
    let cubic = heron_cubic_check();
    c.add("corrected cubic identity", cubic.is_pass() || cubic.is_corrected(), "1-U-V reading");
    c.outcome()
}

fn search_hits(extra: &[&str], jobs: &str) -> (Option<i32>, Vec<u8>, Duration) {
    let mut args = vec!["search", "--max-edge", SEARCH_MAX_EDGE, "--jobs", jobs];
    args.extend_from_slice(extra);
    rtetra(&args)
}

fn c13() -> Outcome {
    let mut c = Clauses::new();
    let rect = classify_faces(&EdgeTuple::from_ints([3, 5, 4, 4, 5, 3]));
    c.add(
        "rectangle: CM = 0, four equal classes",
        rect.as_ref().is_ok_and(|r| r.cm == Rational::from_integer(0.into()) && r.all_equal()),
        "",
    );
    let (_, out, _) = search_hits(&[], "8");
    let hits = parse_csv_edges(&out);
    let mut checked = 0;
    let mut bad = 0;
    for (d, y) in &hits {
        if y == "0" {
            continue;
        }
        checked += 1;
        if !classify_faces(&EdgeTuple::from_ints(*d)).is_ok_and(|r| r.all_norms()) {
            bad += 1;
        }
    }
    c.add(
        "face ratios of square-CM hits are norms from Q(i)",
        bad == 0 && checked > 0,
        format!("{checked} hits, {bad} failing"),
    );
    c.outcome()
}

fn c14() -> Outcome {
    let mut c = Clauses::new();
    let (code8, out8, t8) = search_hits(&[], "8");
    let (code1, out1, _) = search_hits(&[], "1");
    c.add("exit 0", code8 == Some(0) && code1 == Some(0), "");
    c.add("runtime < 5 min at jobs 8", t8 < Duration::from_secs(300), format!("{t8:?}"));
    c.add("jobs 1 and 8 byte-identical", out1 == out8, format!("{} bytes", out8.len()));
    let hits = parse_csv_edges(&out8);
    let reverified = hits
        .iter()
        .filter(|(d, y)| {
            let y: Rational = y.parse().expect("rational y");
            &y * &y == cm_value_by_determinant(&EdgeTuple::from_ints(*d))
        })
        .count();
    c.add("determinant oracle re-verifies every hit", reverified == hits.len(), format!("{} hits", hits.len()));
    let (_, dg8, _) = search_hits(&["--include-degenerate"], "8");
    let (_, dg1, _) = search_hits(&["--include-degenerate"], "1");
    c.add("degenerate runs byte-identical", dg1 == dg8, "");
    let listed: BTreeSet<[i64; 6]> = parse_csv_edges(&dg8).into_iter().map(|(d, _)| d).collect();
    let collinear = collinear_tuples(SEARCH_MAX_EDGE.parse().unwrap());
    let missing = collinear.iter().filter(|d| !listed.contains(*d)).count();
    c.add(
        "all collinear tuples listed",
        missing == 0 && !collinear.is_empty(),
        format!("{} collinear, {missing} missing", collinear.len()),
    );
    c.outcome()
}

fn c15() -> Outcome {
    let (code, out, elapsed) = rtetra(&["verify", "--suite", "all", "--format", "json"]);
    let verdicts: Vec<serde_json::Value> = serde_json::from_slice(&out).unwrap_or_default();
    let failing: Vec<String> = verdicts
        .iter()
        .filter(|v| v["status"] == "fail")
        .map(|v| v["check"].as_str().unwrap_or("?").to_string())
        .collect();
    let mut c = Clauses::new();
    c.add("exit 0", code == Some(0), format!("exit {code:?}"));
    c.add("zero fail statuses", failing.is_empty() && !verdicts.is_empty(), failing.join(", "));
    c.add("runtime < 2 min", elapsed < Duration::from_secs(120), format!("{elapsed:?}"));
    c.outcome()
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 15] = [
        ("CM expansion", c1),
        ("Heron forms", c2),
        ("Neiss identity", c3),
        ("shift of CM and D12", c4),
        ("tetrahedroid nodes", c5),
        ("tetrahedroid tropes", c6),
        ("duality, scaling, irrational form", c7),
        ("central identity", c8),
        ("random six-point configurations", c9),
        ("weddle and gaussian points", c10),
        ("conic descent", c11),
        ("heron points", c12),
        ("face classification", c13),
        ("integer search", c14),
        ("verify suite", c15),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {:2} {name} ({} ms): {}", i + 1, start.elapsed().as_millis(), o.detail);
        if !o.pass {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 15 criteria pass");
    } else {
        println!("acceptance: {} of 15 criteria fail: {failed:?}", failed.len());
        std::process::exit(1);
    }
}
