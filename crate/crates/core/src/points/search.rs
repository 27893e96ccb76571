//! Exhaustive search for integer edge tuples with square `CM`.

use num_integer::Roots;
use serde::Serialize;

use crate::algebra::Rational;
use crate::cayley_menger::{cm_from_squares, cm_value_by_determinant, heron_eval, realizability, EdgeTuple, RealizabilityReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    /// Admit `CM = 0` tuples whose faces are degenerate or valid triangles.
    pub include_degenerate: bool,
    /// Keep only the lexicographically least tuple of each vertex-relabeling
    /// orbit.
    pub canonical: bool,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub edges: [i64; 6],
    /// `CM = y^2`, `y >= 0`.
    pub y: i128,
    pub report: RealizabilityReport,
}

impl SearchHit {
    pub fn edge_tuple(&self) -> EdgeTuple {
        EdgeTuple::from_ints(self.edges)
    }

    pub fn volume(&self) -> Rational {
        Rational::new(self.y.into(), 12.into())
    }
}

/// Vertex pairs in edge order.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn edge_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    PAIRS.iter().position(|&p| p == (i, j)).expect("pair")
}

/// For each of the 24 vertex permutations, the edge position each slot
/// reads from.
pub fn edge_permutations() -> Vec<[usize; 6]> {
    let mut out = Vec::with_capacity(24);
    let mut perm = [0usize, 1, 2, 3];
    permute(&mut perm, 0, &mut |p| {
        out.push(std::array::from_fn(|k| {
            let (i, j) = PAIRS[k];
            edge_index(p[i], p[j])
        }))
    });
    out.sort();
    out
}

fn permute(p: &mut [usize; 4], k: usize, f: &mut impl FnMut(&[usize; 4])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn is_canonical(d: &[i64; 6], perms: &[[usize; 6]]) -> bool {
    perms.iter().all(|m| {
        let img: [i64; 6] = std::array::from_fn(|k| d[m[k]]);
        img >= *d
    })
}

fn perfect_square_root(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn scan(d12: i64, max_edge: i64, opts: &SearchOptions, perms: &[[usize; 6]]) -> Vec<[i64; 6]> {
    let mut hits = Vec::new();
    let h = |a: i64, b: i64, c: i64| heron_eval(&(a as i128), &(b as i128), &(c as i128));
    let range = || 1..=max_edge;
    for d13 in range() {
        for d23 in range() {
            let h123 = h(d12, d13, d23);
            if h123 < 0 || (h123 == 0 && !opts.include_degenerate) {
                continue;
            }
            for d14 in range() {
                for d24 in range() {
                    let h124 = h(d12, d14, d24);
                    if h124 < 0 || (h124 == 0 && !opts.include_degenerate) {
                        continue;
                    }
                    for d34 in range() {
                        let h134 = h(d13, d14, d34);
                        let h234 = h(d23, d24, d34);
                        let faces = [h123, h124, h134, h234];
                        if faces.iter().any(|&f| f < 0) {
                            continue;
                        }
                        let u = [d12, d13, d14, d23, d24, d34].map(|x| (x as i128) * (x as i128));
                        let cm = cm_from_squares(&u);
                        let realizable = cm > 0 && faces.iter().all(|&f| f > 0);
                        let degenerate = cm == 0;
                        if !(realizable || (opts.include_degenerate && degenerate)) {
                            continue;
                        }
                        if perfect_square_root(cm).is_none() {
                            continue;
                        }
                        let d = [d12, d13, d14, d23, d24, d34];
                        if opts.canonical && !is_canonical(&d, perms) {
                            continue;
                        }
                        hits.push(d);
                    }
                }
            }
        }
    }
    hits
}

/// All tuples in `1..=max_edge` with `CM` a perfect square that pass the
/// filter, sorted lexicographically. Each hit is re-checked with the
/// determinant form of `CM`.
pub fn search_integer_tetrahedra(max_edge: i64, opts: &SearchOptions) -> Result<Vec<SearchHit>> {
    if max_edge < 1 {
        return Err(Error::InvalidArgument("max-edge must be at least 1".into()));
    }
    let perms = edge_permutations();
    let run = || -> Vec<[i64; 6]> {
        use rayon::prelude::*;
        (1..=max_edge)
            .into_par_iter()
            .flat_map_iter(|d12| scan(d12, max_edge, opts, &perms))
            .collect()
    };
    let mut tuples = if opts.jobs <= 1 {
        (1..=max_edge).flat_map(|d12| scan(d12, max_edge, opts, &perms)).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run)
    };
    tuples.sort_unstable();
    tuples.dedup();
    tuples
        .into_iter()
        .map(|d| {
            let e = EdgeTuple::from_ints(d);
            let cm = cm_value_by_determinant(&e);
            let y = perfect_square_root(
                i128::try_from(cm.to_integer()).map_err(|_| Error::VerificationFailed("CM overflow".into()))?,
            )
            .filter(|_| cm.is_integer())
            .ok_or_else(|| Error::VerificationFailed(format!("determinant oracle rejects {e}")))?;
            let report = realizability(&e)?;
            if report.cm_value != cm || report.volume != Some(Rational::new(y.into(), 12.into())) {
                return Err(Error::VerificationFailed(format!("determinant oracle disagrees at {e}")));
            }
            Ok(SearchHit { edges: d, y, report })
        })
        .collect()
}

#[derive(Serialize)]
struct HitRow {
    d12: i64,
    d13: i64,
    d14: i64,
    d23: i64,
    d24: i64,
    d34: i64,
    y: String,
    volume: String,
    realizable: bool,
    degenerate: bool,
}

fn row(h: &SearchHit) -> HitRow {
    let [d12, d13, d14, d23, d24, d34] = h.edges;
    HitRow {
        d12,
        d13,
        d14,
        d23,
        d24,
        d34,
        y: h.y.to_string(),
        volume: h.volume().to_string(),
        realizable: h.report.realizable,
        degenerate: h.report.degenerate,
    }
}

pub fn hits_to_csv(hits: &[SearchHit]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if hits.is_empty() {
        w.write_record(["d12", "d13", "d14", "d23", "d24", "d34", "y", "volume", "realizable", "degenerate"])
            .expect("in-memory write");
    }
    for h in hits {
        w.serialize(row(h)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn hits_to_json(hits: &[SearchHit]) -> String {
    let rows: Vec<HitRow> = hits.iter().map(row).collect();
    serde_json::to_string_pretty(&rows).expect("serializable")
}

/// Integer tuples of four collinear points at distinct integer positions
/// with all distances at most `max_edge`.
pub fn collinear_tuples(max_edge: i64) -> Vec<[i64; 6]> {
    let mut out = Vec::new();
    for p1 in 0..=max_edge {
        for p2 in 0..=max_edge {
            for p3 in 0..=max_edge {
                let pos = [0i64, p1, p2, p3];
                let d: [i64; 6] = PAIRS.map(|(i, j)| (pos[i] - pos[j]).abs());
                if d.iter().all(|&x| (1..=max_edge).contains(&x)) {
                    out.push(d);
                }
            }
        }
    }
    // negative positions are mirror images of these
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        let p = edge_permutations();
        assert_eq!(p.len(), 24);
        assert_eq!(p[0], [0, 1, 2, 3, 4, 5]);
        let mut q = p.clone();
        q.dedup();
        assert_eq!(q.len(), 24);
    }

    #[test]
    fn small_search_with_degenerate() {
        let opts = SearchOptions {
            include_degenerate: true,
            ..Default::default()
        };
        let hits = search_integer_tetrahedra(3, &opts).unwrap();
        assert!(hits.iter().any(|h| h.edges == [1, 2, 3, 1, 2, 1] && h.y == 0));
        assert!(!hits.iter().any(|h| h.edges == [1; 6]));
        let mut sorted = hits.clone();
        sorted.sort_by_key(|h| h.edges);
        assert_eq!(sorted, hits);
    }

    #[test]
    fn parallel_matches_serial() {
        let serial = search_integer_tetrahedra(6, &SearchOptions { include_degenerate: true, jobs: 1, ..Default::default() }).unwrap();
        let par = search_integer_tetrahedra(6, &SearchOptions { include_degenerate: true, jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(hits_to_csv(&serial), hits_to_csv(&par));
    }

    #[test]
    fn canonical_representatives() {
        let opts = SearchOptions { include_degenerate: true, canonical: true, jobs: 1 };
        let hits = search_integer_tetrahedra(4, &opts).unwrap();
        let perms = edge_permutations();
        assert!(hits.iter().all(|h| is_canonical(&h.edges, &perms)));
        let full = search_integer_tetrahedra(4, &SearchOptions { canonical: false, ..opts }).unwrap();
        assert!(hits.len() < full.len());
    }

    #[test]
    fn csv_header_and_rows() {
        let csv = hits_to_csv(&[]);
        assert_eq!(csv.trim(), "d12,d13,d14,d23,d24,d34,y,volume,realizable,degenerate");
        let hits = search_integer_tetrahedra(3, &SearchOptions { include_degenerate: true, ..Default::default() }).unwrap();
        let csv = hits_to_csv(&hits);
        assert!(csv.starts_with("d12,d13,d14,d23,d24,d34,y,volume,realizable,degenerate\n"));
        assert!(csv.contains("1,2,3,1,2,1,0,0,false,true"));
    }

    #[test]
    fn collinear_examples() {
        let c = collinear_tuples(3);
        assert!(c.contains(&[1, 2, 3, 1, 2, 1]));
        assert!(c.iter().all(|d| d.iter().all(|&x| (1..=3).contains(&x))));
    }
}
