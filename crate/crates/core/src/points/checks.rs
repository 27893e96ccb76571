//! Verdict-producing checks of the generators.

use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::algebra::{rat, Rational};
use crate::cayley_menger::{ankum_shift, EdgeTuple};
use crate::error::Error;
use crate::sampling;
use crate::verdict::{Status, Verdict};

use super::{
    classify_faces, conic_descent, gaussian_point, heron_cubic_check, heron_fixture_check, heron_sampling_check,
    reverse_slope, search_integer_tetrahedra, weddle_point, CMPoint, SearchOptions,
};

/// Search bound of the norm check over search hits.
pub const NORM_CHECK_MAX_EDGE: i64 = 16;

fn small_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=9).into())
}

/// Random `(a, b, c, X)` inputs to the point generators, skipping those that
/// map to infinity.
pub fn random_weddle_inputs(seed: u64, count: usize) -> Vec<([Rational; 3], [Rational; 4])> {
    let mut rng = sampling::rng(seed, sampling::stream::POINTS);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p: [Rational; 3] = std::array::from_fn(|_| small_rational(&mut rng));
        let x: [Rational; 4] = std::array::from_fn(|_| rat(rng.gen_range(-20i64..=20)));
        match weddle_point(&p[0], &p[1], &p[2], &x) {
            Err(Error::PointAtInfinity) | Err(Error::DegenerateParameters(_)) => continue,
            _ => out.push((p, x)),
        }
    }
    out
}

pub fn weddle_sampling_check(seed: u64, samples: usize) -> Verdict {
    let start = Instant::now();
    let inputs = random_weddle_inputs(seed, samples);
    let ok = inputs
        .iter()
        .filter(|(p, x)| weddle_point(&p[0], &p[1], &p[2], x).is_ok_and(|pt| pt.satisfies() && pt.sign == -1))
        .count();
    let mut v = Verdict::from_bool(
        "points.weddle_sampling",
        ok == samples,
        format!("{ok} of {samples} random inputs give verified points on y^2 = -CM"),
        start,
    );
    v.residual_terms = samples - ok;
    v
}

pub fn gaussian_sampling_check(seed: u64, samples: usize) -> Verdict {
    let start = Instant::now();
    let inputs = random_weddle_inputs(seed, samples);
    let ok = inputs
        .iter()
        .filter(|(p, x)| {
            gaussian_point(&p[0], &p[1], &p[2], x).is_ok_and(|pt| {
                pt.satisfies() && pt.sign == 1 && pt.y.re.is_zero() && pt.y.norm() == crate::cayley_menger::cm_value(&pt.edges).abs()
            })
        })
        .count();
    let mut v = Verdict::from_bool(
        "points.gaussian_sampling",
        ok == samples,
        format!("{ok} of {samples} random inputs give verified Q(i)-points on y^2 = CM"),
        start,
    );
    v.residual_terms = samples - ok;
    v
}

pub fn weddle_fixture_check() -> Verdict {
    let start = Instant::now();
    let x = [rat(1), rat(2), rat(3), rat(4)];
    let expected = EdgeTuple::new([
        rat(3),
        rat(4),
        Rational::new(7.into(), 5.into()),
        rat(5),
        Rational::new(8.into(), 5.into()),
        rat(3),
    ]);
    let ok = weddle_point(&rat(3), &rat(4), &rat(5), &x)
        .is_ok_and(|p| p.edges == expected && p.y_rational() == Some(Rational::new(672.into(), 25.into())));
    Verdict::from_bool(
        "points.weddle_fixture",
        ok,
        "(a,b,c) = (3,4,5), X = (1,2,3,4) gives edges (3,4,7/5,5,8/5,3), y = 672/25".into(),
        start,
    )
}

/// The collinear seed `(1,2,3,1,2,1)` with `y = 0`.
pub fn collinear_seed() -> CMPoint {
    CMPoint::new(EdgeTuple::from_ints([1, 2, 3, 1, 2, 1]), rat(0), 1).expect("collinear tuple has CM = 0")
}

pub fn descent_check(count: usize) -> Verdict {
    let start = Instant::now();
    let seed = collinear_seed();
    let mut points = Vec::new();
    let mut failures = 0;
    for k in 1..=count as i64 {
        match conic_descent(&seed, &Rational::new(k.into(), 3.into())) {
            Ok(p) if p.satisfies() => points.push(p.edges),
            _ => failures += 1,
        }
    }
    let produced = points.len();
    points.sort();
    points.dedup();
    let distinct = points.len();
    let mut v = Verdict::from_bool(
        "points.descent",
        failures == 0 && distinct >= count,
        format!("{distinct} distinct verified solutions of y^2 = CM from the collinear seed ({produced} produced)"),
        start,
    );
    v.residual_terms = failures + (count - distinct.min(count));
    v
}

/// Seeds on degenerate fibers that are not identically zero, descended and
/// then walked back.
pub fn descent_involution_check(seed: u64, samples: usize) -> Verdict {
    let start = Instant::now();
    let mut rng = sampling::rng(seed, sampling::stream::POINTS);
    let seeds = [
        EdgeTuple::from_ints([3, 5, 4, 4, 5, 3]),
        EdgeTuple::from_ints([2, 4, 1, 4, 2, 3]),
        EdgeTuple::from_ints([1, 2, 3, 1, 2, 1]),
    ];
    let mut bad = 0;
    for i in 0..samples {
        let start_pt = CMPoint::new(seeds[i % seeds.len()].clone(), rat(0), 1).expect("CM = 0");
        let degenerate = ankum_shift(&start_pt.edges).is_identically_zero();
        let t = small_rational(&mut rng);
        let Ok(p) = conic_descent(&start_pt, &t) else {
            continue;
        };
        let back = conic_descent(&p, &reverse_slope(&t, degenerate));
        if back.as_ref() != Ok(&start_pt) {
            bad += 1;
        }
    }
    let mut v = Verdict::from_bool(
        "points.descent_involution",
        bad == 0,
        format!("descending back along the line recovers the seed in {} of {samples} cases", samples - bad),
        start,
    );
    v.residual_terms = bad;
    v
}

pub fn classify_rectangle_check() -> Verdict {
    let start = Instant::now();
    let ok = classify_faces(&EdgeTuple::from_ints([3, 5, 4, 4, 5, 3]))
        .is_ok_and(|r| r.cm.is_zero() && r.all_equal());
    Verdict::from_bool(
        "points.classify_rectangle",
        ok,
        "(3,5,4,4,5,3): CM = 0 and four equal square classes".into(),
        start,
    )
}

/// Every realizable hit with nonzero square `CM`: all face-pair ratios are
/// norms from Q(i).
pub fn search_norm_check(jobs: usize) -> Verdict {
    let start = Instant::now();
    let opts = SearchOptions {
        jobs,
        ..Default::default()
    };
    let hits = match search_integer_tetrahedra(NORM_CHECK_MAX_EDGE, &opts) {
        Ok(h) => h,
        Err(e) => return Verdict::from_bool("points.search_norms", false, e.to_string(), start),
    };
    let mut bad = Vec::new();
    let mut checked = 0;
    for h in hits.iter().filter(|h| h.y != 0) {
        checked += 1;
        match classify_faces(&h.edge_tuple()) {
            Ok(r) if r.all_norms() => {}
            _ => bad.push(h.edges),
        }
    }
    Verdict::new(
        "points.search_norms",
        if bad.is_empty() { Status::Pass } else { Status::Fail },
        bad.len(),
        format!(
            "{checked} hits with edges <= {NORM_CHECK_MAX_EDGE} and CM a nonzero square; face ratios are norms in {}",
            checked - bad.len()
        ),
        start,
    )
}

pub fn all_checks(seed: u64, jobs: usize) -> Vec<Verdict> {
    vec![
        weddle_fixture_check(),
        weddle_sampling_check(seed, 100),
        gaussian_sampling_check(seed, 100),
        descent_check(100),
        descent_involution_check(seed, 30),
        heron_fixture_check(),
        heron_cubic_check(),
        heron_sampling_check(seed, 50),
        classify_rectangle_check(),
        search_norm_check(jobs),
    ]
}
