//! Assertion suites over single hypergraphs, part-size profiles and seeded
//! random corpora.

use std::fmt;
use std::str::FromStr;

use crate::bounds::bounds_report;
use crate::constructions::{
    attach_edge, coalesce, disjoint_union, pendant_attach, verify_closed_form, PartSizeProfile,
};
use crate::elementary::{
    check_elementary_formulas, check_girth_from_coeffs, enumerate_elementary_with_budget,
};
use crate::error::{Error, Result};
use crate::exact::{
    check_c2_c3, check_walk_counts, diameter_eigen_bounds, odd_cycle_free_characterization,
};
use crate::hypergraph::Hypergraph;
use crate::identities::{
    check_row_sum_lemma, check_trace_square_identity, check_two_set_minor_sum,
};
use crate::io::inline_hg;
use crate::random::{corpus, profile_corpus, RandomSpec};
use crate::report::{Check, Report, Status};

/// Longest walk length compared against the matrix powers.
pub const WALK_CHECK_LENGTH: u32 = 4;
/// Index sizes above this skip the walk enumeration.
pub const WALK_CHECK_MAX_INDEX: usize = 40;
/// Elementary configurations echoed in full up to this many.
pub const ECHO_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    Elementary,
    ClosedForm,
    Operations,
    Bounds,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Identities,
        Suite::Elementary,
        Suite::ClosedForm,
        Suite::Operations,
        Suite::Bounds,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Elementary => "elementary",
            Suite::ClosedForm => "closed-form",
            Suite::Operations => "operations",
            Suite::Bounds => "bounds",
            Suite::All => "all",
        }
    }

    fn runs(self, part: Suite) -> bool {
        self == Suite::All || self == part
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidProfile(format!("unknown suite {s:?}")))
    }
}

/// A header followed by one report per instance and a summary.
#[derive(Clone, Debug, Default)]
pub struct VerifyLog {
    pub header: Report,
    pub sections: Vec<Report>,
}

impl VerifyLog {
    fn checks(&self) -> impl Iterator<Item = &Check> {
        self.sections.iter().flat_map(|s| &s.checks)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.checks().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks().filter(|c| !c.passed()).collect()
    }

    /// `FAIL` on any failed check, else `UNVERIFIED` if any check was
    /// undecided, else `PASS`.
    pub fn verdict(&self) -> &'static str {
        if !self.passed() {
            "FAIL"
        } else if self.count(Status::Unverified) > 0 {
            "UNVERIFIED"
        } else {
            "PASS"
        }
    }
}

impl fmt::Display for VerifyLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.header)?;
        for s in &self.sections {
            writeln!(f)?;
            write!(f, "{s}")?;
        }
        writeln!(f)?;
        writeln!(f, "summary.checks={}", self.checks().count())?;
        for status in [
            Status::Holds,
            Status::Tight,
            Status::Fails,
            Status::Inapplicable,
            Status::Unverified,
        ] {
            writeln!(
                f,
                "summary.{}={}",
                status.label().to_lowercase(),
                self.count(status)
            )?;
        }
        writeln!(f, "result={}", self.verdict())
    }
}

/// Maps budget and hypothesis errors to per-check statuses.
fn guarded(name: &str, checks: Result<Vec<Check>>) -> Vec<Check> {
    match checks {
        Ok(c) => c,
        Err(Error::BudgetExceeded(b)) => {
            vec![Check::unverified(name, format!("budget {b} exceeded"))]
        }
        Err(e @ (Error::HasLoops(_) | Error::NotSimple(_))) => {
            vec![Check::inapplicable(name, e.to_string())]
        }
        Err(e) => vec![Check::boolean(name, false, e.to_string())],
    }
}

fn identity_checks(h: &Hypergraph) -> Vec<Check> {
    let mut out = check_row_sum_lemma(h);
    out.extend(guarded("trace-square", check_trace_square_identity(h)));
    out.extend(check_two_set_minor_sum(h));
    if h.edge_index().len() > WALK_CHECK_MAX_INDEX {
        out.push(Check::inapplicable(
            "walks",
            format!("index set above {WALK_CHECK_MAX_INDEX}"),
        ));
    } else {
        out.extend(guarded("walks", check_walk_counts(h, WALK_CHECK_LENGTH)));
    }
    out.extend(guarded("c2-c3", check_c2_c3(h)));
    out.extend(guarded("odd-cycle", odd_cycle_free_characterization(h)));
    out.extend(guarded("diameter", diameter_eigen_bounds(h)));
    out
}

/// The determinant expansion over elementary `k`-subhypergraphs as report
/// values, one per configuration, with its signed term.
fn elementary_echo(h: &Hypergraph, budget: u64, report: &mut Report) {
    if !h.is_simple() {
        return;
    }
    let k = h.edge_index().len();
    let Ok(configs) = enumerate_elementary_with_budget(h, k, budget) else {
        return;
    };
    report.value("elementary.full-count", configs.len());
    if configs.len() > ECHO_LIMIT {
        return;
    }
    let mut terms = Vec::new();
    for c in &configs {
        let sign_exp = k - c.c() - c.e();
        let term = (if sign_exp.is_multiple_of(2) { 1i64 } else { -1 }) << c.c();
        report.value(
            "elementary.config",
            format!(
                "{c} c={} e={} term=(-1)^{sign_exp}*2^{}={term}",
                c.c(),
                c.e(),
                c.c()
            ),
        );
        terms.push(term);
    }
    let det: i64 = terms.iter().sum();
    let sum: Vec<String> = terms.iter().map(i64::to_string).collect();
    let sum = if sum.is_empty() {
        "0".to_string()
    } else {
        sum.join(" + ")
    };
    report.value("elementary.det-expansion", format!("{sum} = {det}"));
}

fn elementary_checks(h: &Hypergraph, budget: u64) -> Vec<Check> {
    let mut out = guarded("elementary", check_elementary_formulas(h, budget));
    out.extend(guarded(
        "coefficient-girth",
        check_girth_from_coeffs(h, budget),
    ));
    out
}

fn operation_checks(h: &Hypergraph) -> Vec<Check> {
    if !h.is_simple() {
        return vec![Check::inapplicable("operations", "not simple")];
    }
    if h.n() == 0 {
        return vec![Check::inapplicable("operations", "no vertices")];
    }
    let mut out = Vec::new();
    let k2 = Hypergraph::new(2, [[0, 1]]).expect("fixed fixture");
    let k3 = Hypergraph::new(3, [[0, 1, 2]]).expect("fixed fixture");
    let ops = |r: Result<crate::constructions::Operation>, name: &str| {
        guarded(name, r.map(|op| op.checks))
    };
    out.extend(ops(pendant_attach(h, 0), "pendant"));
    out.extend(ops(coalesce(h, 0, &k2, 0), "coalesce"));
    out.extend(ops(coalesce(h, 0, &k3, 1), "coalesce"));
    out.extend(ops(coalesce(h, h.n() - 1, h, 0), "coalesce"));
    out.extend(ops(disjoint_union(&[h, &k3]), "union"));

    let shared = h
        .edges()
        .iter()
        .find(|e| e.len() > 2)
        .map(|e| (e.part.vertices()[0], e.part.vertices()[1]));
    let separate = (0..h.n())
        .flat_map(|u| (u + 1..h.n()).map(move |v| (u, v)))
        .find(|&(u, v)| {
            !h.edges()
                .iter()
                .any(|e| e.len() > 2 && e.part.contains(u) && e.part.contains(v))
        });
    for (u, v) in shared.into_iter().chain(separate) {
        for s in 1..=2 {
            out.extend(guarded(
                "attach",
                attach_edge(h, u, v, s).map(|(op, _)| op.checks),
            ));
        }
    }
    out
}

/// Runs the per-hypergraph parts of `suite` on `h`. Closed-form checks need
/// a profile and are handled by [`verify_profile`].
pub fn hypergraph_report(h: &Hypergraph, suite: Suite, budget: u64) -> Report {
    let mut r = Report::new();
    r.value("hypergraph", inline_hg(h));
    r.value("k", h.edge_index().len());
    if suite.runs(Suite::Identities) {
        r.extend(identity_checks(h));
    }
    if suite.runs(Suite::Elementary) {
        elementary_echo(h, budget, &mut r);
        r.extend(elementary_checks(h, budget));
    }
    if suite.runs(Suite::Operations) {
        r.extend(operation_checks(h));
    }
    if suite.runs(Suite::Bounds) {
        r.extend(guarded(
            "bounds",
            bounds_report(h, budget).map(|b| b.checks),
        ));
    }
    r
}

/// Closed-form spectrum and census checks for one profile.
pub fn verify_profile(profile: &PartSizeProfile) -> Report {
    verify_closed_form(profile).unwrap_or_else(|e| {
        let mut r = Report::new();
        r.value("profile", profile);
        r.push(Check::boolean("closed-form", false, e.to_string()));
        r
    })
}

/// Runs `suite` on one hypergraph, plus the closed-form suite on `profile`
/// when given.
pub fn verify_hypergraph(
    h: &Hypergraph,
    suite: Suite,
    profile: Option<&PartSizeProfile>,
    budget: u64,
) -> VerifyLog {
    let mut header = Report::new();
    header.value("suite", suite);
    header.value("source", "file");
    header.value("budget", budget);
    let mut log = VerifyLog {
        header,
        sections: Vec::new(),
    };
    if suite != Suite::ClosedForm {
        log.sections.push(hypergraph_report(h, suite, budget));
    }
    if suite.runs(Suite::ClosedForm) {
        match profile {
            Some(p) => log.sections.push(verify_profile(p)),
            None if suite == Suite::All => {
                let mut r = Report::new();
                r.push(Check::inapplicable("closed-form", "no profile given"));
                log.sections.push(r);
            }
            None => {}
        }
    }
    log
}

/// Closed-form suite on a single profile.
pub fn verify_profile_log(profile: &PartSizeProfile) -> VerifyLog {
    let mut header = Report::new();
    header.value("suite", Suite::ClosedForm);
    header.value("source", "profile");
    VerifyLog {
        header,
        sections: vec![verify_profile(profile)],
    }
}

/// Runs `suite` on `count` seeded simple hypergraphs with at most
/// `max_vertices` vertices; the closed-form suite draws `count` profiles
/// from an independent stream with the same seed.
///
/// ```
/// use unispec::verify::{verify_random, Suite};
///
/// let a = verify_random(3, 5, 1, Suite::Identities, 100_000).to_string();
/// assert_eq!(a, verify_random(3, 5, 1, Suite::Identities, 100_000).to_string());
/// assert!(a.ends_with("result=PASS\n"));
/// ```
pub fn verify_random(
    count: usize,
    max_vertices: usize,
    seed: u64,
    suite: Suite,
    budget: u64,
) -> VerifyLog {
    let spec = RandomSpec::simple(max_vertices);
    let mut header = Report::new();
    header.value("suite", suite);
    header.value("source", "random");
    header.value("count", count);
    header.value("max_vertices", spec.max_vertices);
    header.value("max_rank", spec.max_rank);
    header.value("max_index", spec.max_index);
    header.value("seed", seed);
    header.value("generator", "xoshiro256++");
    header.value("budget", budget);
    let mut log = VerifyLog {
        header,
        sections: Vec::new(),
    };
    if suite != Suite::ClosedForm {
        for (i, h) in corpus(count, &spec, seed).iter().enumerate() {
            let mut r = Report::new();
            r.value("instance", i);
            r.merge(hypergraph_report(h, suite, budget));
            log.sections.push(r);
        }
    }
    if suite.runs(Suite::ClosedForm) {
        for (i, p) in profile_corpus(count, seed).iter().enumerate() {
            let mut r = Report::new();
            r.value("profile_instance", i);
            r.merge(verify_profile(p));
            log.sections.push(r);
        }
    }
    log
}
