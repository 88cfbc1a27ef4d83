//! Check results and deterministic text reports.

use std::fmt;

/// Outcome of one asserted relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// The relation holds strictly or as an identity.
    Holds,
    /// The inequality holds with equality.
    Tight,
    /// The relation was evaluated and is false.
    Fails,
    /// A hypothesis is not met, so nothing was asserted.
    Inapplicable,
    /// A hypothesis or oracle could not be decided within budget.
    Unverified,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Fails
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Holds => "HOLDS",
            Status::Tight => "TIGHT",
            Status::Fails => "FAILS",
            Status::Inapplicable => "INAPPLICABLE",
            Status::Unverified => "UNVERIFIED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One named check with printable left and right sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub note: String,
}

impl Check {
    fn new(name: impl Into<String>, lhs: String, rhs: String, status: Status) -> Self {
        Check {
            name: name.into(),
            lhs,
            rhs,
            status,
            note: String::new(),
        }
    }

    /// Equality of exactly comparable values.
    pub fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, lhs: T, rhs: T) -> Self {
        let status = if lhs == rhs {
            Status::Holds
        } else {
            Status::Fails
        };
        Check::new(name, lhs.to_string(), rhs.to_string(), status)
    }

    /// Equality of reals within `tol`.
    pub fn approx(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let status = if (lhs - rhs).abs() <= tol {
            Status::Holds
        } else {
            Status::Fails
        };
        Check::new(name, fmt_side(lhs), fmt_side(rhs), status)
    }

    /// `lhs <= rhs` for exactly comparable values; equality reports TIGHT.
    pub fn at_most<T: PartialOrd + fmt::Display>(name: impl Into<String>, lhs: T, rhs: T) -> Self {
        let status = if lhs < rhs {
            Status::Holds
        } else if lhs == rhs {
            Status::Tight
        } else {
            Status::Fails
        };
        Check::new(name, lhs.to_string(), rhs.to_string(), status)
    }

    /// `lhs <= rhs + tol`; within `tol` of equality reports TIGHT.
    pub fn at_most_approx(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let status = if (lhs - rhs).abs() <= tol {
            Status::Tight
        } else if lhs < rhs {
            Status::Holds
        } else {
            Status::Fails
        };
        Check::new(name, fmt_side(lhs), fmt_side(rhs), status)
    }

    pub fn boolean(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok { Status::Holds } else { Status::Fails };
        Check::new(name, detail.into(), String::new(), status)
    }

    pub fn inapplicable(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check::new(name, "-".into(), "-".into(), Status::Inapplicable).with_note(why)
    }

    pub fn unverified(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check::new(name, "-".into(), "-".into(), Status::Unverified).with_note(why)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn passed(&self) -> bool {
        !self.status.is_failure()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check {} {} lhs={}", self.name, self.status, self.lhs)?;
        if !self.rhs.is_empty() {
            write!(f, " rhs={}", self.rhs)?;
        }
        if !self.note.is_empty() {
            write!(f, " note={}", self.note)?;
        }
        Ok(())
    }
}

/// Key/value lines followed by check lines.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub values: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn value(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.values.push((key.into(), value.to_string()));
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn merge(&mut self, other: Report) {
        self.values.extend(other.values);
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.values {
            writeln!(f, "{k}={v}")?;
        }
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Magnitudes below this print as `0` on check sides, so rounding residues
/// do not leak platform-specific digits into reports.
pub const RESIDUE_FLOOR: f64 = 1e-11;

fn fmt_side(x: f64) -> String {
    if x.abs() < RESIDUE_FLOOR {
        "0".into()
    } else {
        fmt_f64(x)
    }
}

/// Formats a float with 12 significant digits, trailing zeros removed.
///
/// ```
/// use unispec::report::fmt_f64;
///
/// assert_eq!(fmt_f64(2f64.sqrt()), "1.41421356237");
/// assert_eq!(fmt_f64(-0.0), "0");
/// assert_eq!(fmt_f64(3.0), "3");
/// assert_eq!(fmt_f64(1.5e-20), "1.5e-20");
/// ```
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        let s = trim_zeros(&s);
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format() {
        assert_eq!(fmt_f64(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_f64(-2.0), "-2");
        assert_eq!(fmt_f64(123456789012.0), "123456789012");
        assert_eq!(fmt_f64(1.23e15), "1.23e15");
        assert_eq!(fmt_f64(-1e-13), "-1e-13");
        assert_eq!(fmt_f64(0.0001), "0.0001");
        assert_eq!(fmt_f64(f64::INFINITY), "inf");
    }

    #[test]
    fn statuses() {
        assert_eq!(Check::at_most("b", 2, 3).status, Status::Holds);
        assert_eq!(Check::at_most("b", 3, 3).status, Status::Tight);
        assert_eq!(Check::at_most("b", 4, 3).status, Status::Fails);
        assert_eq!(
            Check::at_most_approx("b", 1.0, 1.0 + 1e-12, 1e-8).status,
            Status::Tight
        );
        assert_eq!(Check::approx("e", 1.0, 1.1, 1e-8).status, Status::Fails);
        assert!(Check::inapplicable("x", "loops").passed());
    }

    #[test]
    fn report_text() {
        let mut r = Report::new();
        r.value("k", 10);
        r.push(Check::equal("det", 0, 0));
        assert_eq!(r.to_string(), "k=10\ncheck det HOLDS lhs=0 rhs=0\n");
        assert!(r.passed());
    }
}
