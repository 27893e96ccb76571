//! Pass/fail records for identity checks.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::MultiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The statement as written fails; a corrected form passes.
    Corrected,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Corrected => "corrected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    /// Terms left in the residual polynomial, or a count of failing samples.
    pub residual_terms: usize,
    pub notes: String,
    pub elapsed_ms: u64,
}

fn ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

impl Verdict {
    pub fn new(check: &str, status: Status, residual_terms: usize, notes: String, start: Instant) -> Self {
        Verdict {
            check: check.to_string(),
            status,
            residual_terms,
            notes,
            elapsed_ms: ms(start),
        }
    }

    pub fn from_bool(check: &str, ok: bool, notes: String, start: Instant) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Verdict::new(check, status, usize::from(!ok), notes, start)
    }

    /// Passes iff `residual` is the zero polynomial.
    pub fn from_residual(check: &str, residual: &MultiPoly, notes: String, start: Instant) -> Self {
        let n = residual.term_count();
        let status = if n == 0 { Status::Pass } else { Status::Fail };
        Verdict::new(check, status, n, notes, start)
    }

    /// `pass` if the literal residual vanishes, `corrected` if only the
    /// corrected one does, `fail` otherwise. Reports the literal residual size.
    pub fn corrected_or_fail(
        check: &str,
        literal: &MultiPoly,
        corrected: &MultiPoly,
        notes: &str,
        start: Instant,
    ) -> Self {
        let status = match (literal.is_zero(), corrected.is_zero()) {
            (true, _) => Status::Pass,
            (false, true) => Status::Corrected,
            (false, false) => Status::Fail,
        };
        let notes = match status {
            Status::Pass => "holds as written".to_string(),
            Status::Corrected => format!(
                "{notes}; as written leaves {} residual terms",
                literal.term_count()
            ),
            Status::Fail => format!(
                "{notes}; residuals {} (as written) and {} (corrected)",
                literal.term_count(),
                corrected.term_count()
            ),
        };
        Verdict::new(check, status, literal.term_count(), notes, start)
    }

    pub fn fail(&mut self, why: &str) {
        self.status = Status::Fail;
        if self.residual_terms == 0 {
            self.residual_terms = 1;
        }
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(why);
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_corrected(&self) -> bool {
        self.status == Status::Corrected
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<9} {} (residual {}, {} ms): {}",
            self.status.to_string().to_uppercase(),
            self.check,
            self.residual_terms,
            self.elapsed_ms,
            self.notes
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_status() {
        let x = MultiPoly::symbol("x");
        let zero = MultiPoly::from_int(0);
        let t = Instant::now();
        assert!(Verdict::from_residual("a", &zero, String::new(), t).is_pass());
        assert!(Verdict::from_residual("a", &x, String::new(), t).is_fail());
        assert!(Verdict::corrected_or_fail("a", &x, &zero, "n", t).is_corrected());
        let v = Verdict::corrected_or_fail("a", &zero, &x, "n", t);
        assert!(v.is_pass());
    }

    #[test]
    fn serializes_lowercase_status() {
        let v = Verdict::from_bool("c", false, "n".into(), Instant::now());
        let j = serde_json::to_string(&v).unwrap();
        assert!(j.contains("\"status\":\"fail\""));
    }
}
