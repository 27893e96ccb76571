//! Verification suites: every module check, in a fixed order.
//!
//! Order within `all` is `cm`, `tetrahedroid`, `weddle`, `points`, each in
//! the order listed by its `*_checks` function. Sampled checks draw from
//! ChaCha8 seeded with `seed` on the stream given in [`crate::sampling::stream`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::verdict::Verdict;
use crate::{cayley_menger as cm, points, tetrahedroid, weddle};

/// Realizable tuples sampled for the sign of the leading shift coefficient.
pub const LEADING_SIGN_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Cm,
    Tetrahedroid,
    Weddle,
    Points,
    All,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] = [
        SuiteName::Cm,
        SuiteName::Tetrahedroid,
        SuiteName::Weddle,
        SuiteName::Points,
        SuiteName::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Cm => "cm",
            SuiteName::Tetrahedroid => "tetrahedroid",
            SuiteName::Weddle => "weddle",
            SuiteName::Points => "points",
            SuiteName::All => "all",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

pub fn cm_checks(seed: u64) -> Vec<Verdict> {
    vec![
        cm::cm_expansion_check(),
        cm::heron_forms_check(),
        cm::lagrange_volume_check(),
        cm::neiss_identity_check(),
        cm::ankum_degree_check(),
        cm::schulz_linear_check(),
        cm::shift_leading_positive_check(seed, LEADING_SIGN_SAMPLES),
    ]
}

fn run_one(name: SuiteName, seed: u64, jobs: usize) -> Vec<Verdict> {
    match name {
        SuiteName::Cm => cm_checks(seed),
        SuiteName::Tetrahedroid => tetrahedroid::all_checks(),
        SuiteName::Weddle => weddle::all_checks(seed),
        SuiteName::Points => points::checks::all_checks(seed, jobs),
        SuiteName::All => unreachable!(),
    }
}

/// Runs the named suite. With `jobs > 1` the module suites of `all` run
/// concurrently; the result order does not depend on `jobs`.
pub fn run_verify_suite(name: SuiteName, seed: u64, jobs: usize) -> Vec<Verdict> {
    let modules: Vec<SuiteName> = match name {
        SuiteName::All => SuiteName::ALL[..4].to_vec(),
        n => vec![n],
    };
    if jobs <= 1 {
        return modules.into_iter().flat_map(|m| run_one(m, seed, 1)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| {
        use rayon::prelude::*;
        let parts: Vec<Vec<Verdict>> = modules.par_iter().map(|&m| run_one(m, seed, jobs)).collect();
        parts.into_iter().flatten().collect()
    })
}
