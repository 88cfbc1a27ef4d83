//! Unified cycles and paths with closed-form spectra, and hypergraph
//! operations with characteristic polynomial identities.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::eigen::eigen_spectrum;
use crate::error::{Error, Result};
use crate::hypergraph::{two_partition_count, Hypergraph, Part, VertexId};
use crate::matrix::{AssociatedGraph, UnifiedMatrix};
use crate::poly::{char_poly, CharPoly, Poly};
use crate::report::{fmt_f64, Check, Report};

/// Tolerance for comparing closed-form and numeric eigenvalues.
pub const CLOSED_FORM_TOL: f64 = 1e-8;

/// Part sizes `|S_0|, …, |S_m|` of a unified cycle or path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSizeProfile {
    sizes: Vec<usize>,
    cyclic: bool,
}

impl PartSizeProfile {
    /// A cycle profile: `n >= 3` sizes, one per part, cyclically ordered.
    pub fn cycle(sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() < 3 {
            return Err(Error::InvalidProfile(format!(
                "a cycle needs at least 3 parts, got {}",
                sizes.len()
            )));
        }
        Self::checked(sizes, true)
    }

    /// A path profile: `n + 1 >= 2` sizes for a path with `n` edges.
    pub fn path(sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::InvalidProfile(format!(
                "a path needs at least 2 parts, got {}",
                sizes.len()
            )));
        }
        Self::checked(sizes, false)
    }

    fn checked(sizes: Vec<usize>, cyclic: bool) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidProfile("part sizes must be positive".into()));
        }
        if sizes.iter().sum::<usize>() > 64 {
            return Err(Error::InvalidProfile("more than 64 vertices".into()));
        }
        Ok(PartSizeProfile { sizes, cyclic })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn is_cycle(&self) -> bool {
        self.cyclic
    }

    /// Number of edges `n`.
    pub fn edge_count(&self) -> usize {
        if self.cyclic {
            self.sizes.len()
        } else {
            self.sizes.len() - 1
        }
    }

    /// Size pairs `(|S_{i-1}|, |S_i|)` of the edges in order.
    fn edge_sizes(&self) -> Vec<(usize, usize)> {
        let m = self.sizes.len();
        (1..=self.edge_count())
            .map(|i| (self.sizes[i - 1], self.sizes[i % m]))
            .collect()
    }
}

/// Parses a comma-separated size list such as `2,1,2`.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            usize::from_str(s.trim())
                .map_err(|_| Error::InvalidProfile(format!("bad part size {s:?}")))
        })
        .collect()
}

impl fmt::Display for PartSizeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.sizes.iter().map(usize::to_string).collect();
        write!(
            f,
            "{}:{}",
            if self.cyclic { "cycle" } else { "path" },
            sizes.join(",")
        )
    }
}

/// A generated unified cycle or path together with its parts.
#[derive(Clone, Debug)]
pub struct Unified {
    pub hypergraph: Hypergraph,
    /// `S_0, …, S_m`, pairwise disjoint, in profile order.
    pub parts: Vec<Part>,
}

/// Allocates consecutive vertex blocks for the parts and joins neighbouring
/// parts into edges `S_{i-1} ∪ S_i`.
pub fn generate(profile: &PartSizeProfile) -> Unified {
    let mut next = 0;
    let parts: Vec<Part> = profile
        .sizes
        .iter()
        .map(|&s| {
            let p = Part::new(next..next + s).expect("non-empty block");
            next += s;
            p
        })
        .collect();
    let m = parts.len();
    let edges =
        (1..=profile.edge_count()).map(|i| parts[i - 1].union(&parts[i % m]).vertices().to_vec());
    let hypergraph =
        Hypergraph::with_rank_limit(next, edges, usize::MAX).expect("generated edges are valid");
    Unified { hypergraph, parts }
}

pub fn gen_unified_cycle(sizes: &[usize]) -> Result<Unified> {
    Ok(generate(&PartSizeProfile::cycle(sizes.to_vec())?))
}

pub fn gen_unified_path(sizes: &[usize]) -> Result<Unified> {
    Ok(generate(&PartSizeProfile::path(sizes.to_vec())?))
}

/// The spectrum of a unified cycle or path in closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormSpectrum {
    /// Eigenvalues of the core cycle `C_n` or path `P_{n+1}`.
    pub core: Vec<f64>,
    /// Multiplicity of each of `1` and `-1`.
    pub unit: u64,
    /// Multiplicity of each of `0`, `√2` and `-√2`.
    pub sqrt2: u64,
}

impl ClosedFormSpectrum {
    pub fn total(&self) -> u64 {
        self.core.len() as u64 + 2 * self.unit + 3 * self.sqrt2
    }

    /// The full multiset, sorted descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut out = self.core.clone();
        for _ in 0..self.unit {
            out.extend([1.0, -1.0]);
        }
        for _ in 0..self.sqrt2 {
            out.extend([0.0, 2f64.sqrt(), -(2f64.sqrt())]);
        }
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }
}

/// `p_i`: the `K_2` components contributed by the edge joining parts of
/// sizes `a` and `b`, `½(2^a - 2)(2^b - 2)`.
fn mixed_pairs(a: usize, b: usize) -> u64 {
    ((1u64 << a) - 2) * ((1u64 << b) - 2) / 2
}

fn tau_total(profile: &PartSizeProfile) -> u64 {
    profile
        .edge_sizes()
        .iter()
        .map(|&(a, b)| two_partition_count(a + b))
        .sum()
}

/// Closed-form spectrum of the unified cycle with this profile.
///
/// ```
/// use unispec::constructions::{cycle_spectrum_closed_form, PartSizeProfile};
///
/// let s = cycle_spectrum_closed_form(&PartSizeProfile::cycle(vec![2, 2, 2]).unwrap()).unwrap();
/// assert_eq!((s.unit, s.sqrt2, s.total()), (6, 6, 33));
/// ```
pub fn cycle_spectrum_closed_form(profile: &PartSizeProfile) -> Result<ClosedFormSpectrum> {
    if !profile.cyclic {
        return Err(Error::InvalidProfile("expected a cycle profile".into()));
    }
    let n = profile.edge_count();
    let core = (1..=n)
        .map(|j| 2.0 * (2.0 * PI * j as f64 / n as f64).cos())
        .collect();
    let t1: u64 = profile
        .edge_sizes()
        .iter()
        .map(|&(a, b)| mixed_pairs(a, b))
        .sum();
    let t2 = (tau_total(profile) - n as u64 - t1) / 2;
    Ok(ClosedFormSpectrum {
        core,
        unit: t1,
        sqrt2: t2,
    })
}

/// Closed-form spectrum of the unified path with this profile; needs `n >= 2`.
pub fn path_spectrum_closed_form(profile: &PartSizeProfile) -> Result<ClosedFormSpectrum> {
    if profile.cyclic {
        return Err(Error::InvalidProfile("expected a path profile".into()));
    }
    let n = profile.edge_count();
    if n < 2 {
        return Err(Error::InvalidProfile(
            "the path closed form needs at least 2 edges".into(),
        ));
    }
    let core = (1..=n + 1)
        .map(|j| 2.0 * (PI * j as f64 / (n + 2) as f64).cos())
        .collect();
    let t1: u64 = profile
        .edge_sizes()
        .iter()
        .map(|&(a, b)| mixed_pairs(a, b))
        .sum();
    let ends = ((1u64 << profile.sizes[0]) - 2) + ((1u64 << profile.sizes[n]) - 2);
    let t = t1 + ends;
    let t_prime = (tau_total(profile) - n as u64 - t) / 2;
    Ok(ClosedFormSpectrum {
        core,
        unit: t,
        sqrt2: t_prime,
    })
}

pub fn closed_form(profile: &PartSizeProfile) -> Result<ClosedFormSpectrum> {
    if profile.cyclic {
        cycle_spectrum_closed_form(profile)
    } else {
        path_spectrum_closed_form(profile)
    }
}

/// Component shapes of `G_H` as `(vertices, edges)`, with the core component
/// (the one holding `S_0`) reported separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCensus {
    pub core: (usize, usize),
    pub k2: u64,
    pub p3: u64,
    pub other: u64,
}

pub fn component_census(u: &Unified) -> Result<ComponentCensus> {
    let g = AssociatedGraph::build(&u.hypergraph)?;
    let s0 = g.index().require(&u.parts[0])?;
    let mut census = ComponentCensus {
        core: (0, 0),
        k2: 0,
        p3: 0,
        other: 0,
    };
    for comp in g.components() {
        let edges: usize = comp.iter().map(|&i| g.neighbors(i).len()).sum::<usize>() / 2;
        let shape = (comp.len(), edges);
        if comp.contains(&s0) {
            census.core = shape;
        } else if shape == (2, 1) {
            census.k2 += 1;
        } else if shape == (3, 2) {
            census.p3 += 1;
        } else {
            census.other += 1;
        }
    }
    Ok(census)
}

/// Numeric spectrum, component census and total multiplicity against the
/// closed form.
pub fn verify_closed_form(profile: &PartSizeProfile) -> Result<Report> {
    let cf = closed_form(profile)?;
    let u = generate(profile);
    let unified = UnifiedMatrix::build(&u.hypergraph);
    let mut report = Report::new();
    report.value("profile", profile);
    report.value("k", unified.order());
    report.value(if profile.cyclic { "t1" } else { "t" }, cf.unit);
    report.value(if profile.cyclic { "t2" } else { "t_prime" }, cf.sqrt2);
    report.push(Check::equal(
        "closed-form.total",
        cf.total(),
        unified.order() as u64,
    ));

    let numeric = eigen_spectrum(unified.matrix())?;
    let expected = cf.eigenvalues();
    let gap = if expected.len() == numeric.len() {
        expected
            .iter()
            .zip(numeric.eigenvalues())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    report.push(
        Check::at_most_approx("closed-form.eigenvalues", gap, CLOSED_FORM_TOL, 0.0)
            .with_note("max deviation"),
    );

    let n = profile.edge_count();
    let census = component_census(&u)?;
    let core = if profile.cyclic { (n, n) } else { (n + 1, n) };
    report.push(Check::equal(
        "census.core",
        fmt_pair(census.core),
        fmt_pair(core),
    ));
    report.push(Check::equal("census.k2", census.k2, cf.unit));
    report.push(Check::equal("census.p3", census.p3, cf.sqrt2));
    report.push(Check::equal("census.other", census.other, 0));
    if !profile.cyclic {
        let arrangements = path_arrangements(&u.hypergraph)?;
        let mut reversed = u.parts.clone();
        reversed.reverse();
        let mut want = vec![u.parts.clone(), reversed];
        want.sort();
        report.push(Check::boolean(
            "path.arrangements",
            arrangements == want,
            format!("{} arrangements", arrangements.len()),
        ));
    }
    Ok(report)
}

fn fmt_pair((a, b): (usize, usize)) -> String {
    format!("{a}v{b}e")
}

/// Every sequence of pairwise disjoint parts `T_0, …, T_n` whose consecutive
/// unions run through all `n` edges of `h` exactly once.
pub fn path_arrangements(h: &Hypergraph) -> Result<Vec<Vec<Part>>> {
    let g = AssociatedGraph::build(h)?;
    let edges: Vec<&Part> = h.distinct_edges().collect();
    let n = edges.len();
    let edge_of = |a: usize, b: usize| -> usize {
        let union = g.index().get(a).union(g.index().get(b));
        edges
            .iter()
            .position(|e| **e == union)
            .expect("adjacent parts split an edge")
    };
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut used = vec![false; n];
    fn extend(
        g: &AssociatedGraph,
        n: usize,
        edge_of: &dyn Fn(usize, usize) -> usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<Part>>,
    ) {
        if path.len() == n + 1 {
            out.push(path.iter().map(|&i| g.index().get(i).clone()).collect());
            return;
        }
        let x = *path.last().expect("non-empty path");
        for &(y, _) in g.neighbors(x) {
            let e = edge_of(x, y);
            let fresh = path
                .iter()
                .all(|&p| g.index().get(p).is_disjoint(g.index().get(y)));
            if !used[e] && fresh {
                used[e] = true;
                path.push(y);
                extend(g, n, edge_of, path, used, out);
                path.pop();
                used[e] = false;
            }
        }
    }
    for start in 0..g.vertex_count() {
        path.push(start);
        extend(&g, n, &edge_of, &mut path, &mut used, &mut out);
        path.pop();
    }
    out.sort();
    Ok(out)
}

/// The hypergraph produced by an operation with its identity checks.
#[derive(Clone, Debug)]
pub struct Operation {
    pub result: Hypergraph,
    pub checks: Vec<Check>,
}

fn poly_of(h: &Hypergraph) -> Result<Poly> {
    Ok(char_poly(UnifiedMatrix::build(h).matrix())?.to_poly())
}

/// `P_{U(H)(T|T)}` for a set `T` of parts.
fn poly_without(u: &UnifiedMatrix, parts: &[Part]) -> Result<Poly> {
    Ok(char_poly(&u.principal_delete(parts)?)?.to_poly())
}

fn require_simple(h: &Hypergraph, what: &'static str) -> Result<()> {
    if h.is_simple() {
        Ok(())
    } else {
        Err(Error::NotSimple(what))
    }
}

/// `P(H \ {u})`: the polynomial of the hypergraph with `u` and its edges removed.
fn poly_deleted(h: &Hypergraph, u: VertexId) -> Result<Poly> {
    poly_of(&h.delete_vertices(&[u])?.0)
}

fn poly_check(name: &str, lhs: &Poly, rhs: &Poly) -> Check {
    Check::equal(name, lhs.to_string(), rhs.to_string())
}

/// Joins a new vertex `v` to `u` by a 2-edge:
/// `P(H_uv) = x P(H) - P(U(H)({u}|{u}))`.
pub fn pendant_attach(h: &Hypergraph, u: VertexId) -> Result<Operation> {
    require_simple(h, "pendant attachment")?;
    h.check_vertex(u)?;
    let result = h.with_extra_vertices(1).with_edge([u, h.n()])?;
    let um = UnifiedMatrix::build(h);
    let direct = poly_of(&result)?;
    let x = Poly::x();
    let minus_u = poly_without(&um, &[Part::singleton(u)])?;
    let mut checks = vec![poly_check(
        "pendant",
        &direct,
        &(&(&x * &poly_of(h)?) - &minus_u),
    )];
    if h.is_g_vertex(u)? {
        let g_form = &(&x * &poly_of(h)?) - &poly_deleted(h, u)?;
        checks.push(poly_check("pendant.g-vertex", &direct, &g_form));
    } else {
        checks.push(Check::inapplicable(
            "pendant.g-vertex",
            format!("{u} lies in an edge of size > 2"),
        ));
    }
    Ok(Operation { result, checks })
}

/// Identifies `u ∈ H1` with `v ∈ H2`. The result keeps `H1`'s vertex ids and
/// appends those of `H2` other than `v`, in order.
pub fn coalesce(h1: &Hypergraph, u: VertexId, h2: &Hypergraph, v: VertexId) -> Result<Operation> {
    require_simple(h1, "coalescence")?;
    require_simple(h2, "coalescence")?;
    h1.check_vertex(u)?;
    h2.check_vertex(v)?;
    let n1 = h1.n();
    let n = n1 + h2.n() - 1;
    let map = |w: VertexId| match w.cmp(&v) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    let moved = h2.relabeled(n, map)?;
    let result = Hypergraph::with_multiplicities(
        n,
        h1.edges()
            .iter()
            .chain(moved.edges())
            .map(|e| (e.part.vertices().to_vec(), e.multiplicity)),
    )?;
    let direct = poly_of(&result)?;
    let (p1, p2) = (poly_of(h1)?, poly_of(h2)?);
    let x = Poly::x();
    let identity = |q1: &Poly, q2: &Poly| &(&(&p1 * q2) + &(q1 * &p2)) - &(&(&x * q1) * q2);
    let q1 = poly_without(&UnifiedMatrix::build(h1), &[Part::singleton(u)])?;
    let q2 = poly_without(&UnifiedMatrix::build(h2), &[Part::singleton(v)])?;
    let mut checks = vec![poly_check("coalesce", &direct, &identity(&q1, &q2))];
    if h1.is_g_vertex(u)? && h2.is_g_vertex(v)? {
        let g_form = identity(&poly_deleted(h1, u)?, &poly_deleted(h2, v)?);
        checks.push(poly_check("coalesce.g-vertex", &direct, &g_form));
    } else {
        checks.push(Check::inapplicable(
            "coalesce.g-vertex",
            "a joined vertex lies in an edge of size > 2",
        ));
    }
    Ok(Operation { result, checks })
}

/// Which identity governs an edge attachment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttachCase {
    /// Some edge of size above two contains both `u` and `v`.
    Shared,
    /// No such edge.
    Separate,
}

/// Adds `s` fresh vertices `S` and the edge `S ∪ {u, v}`.
pub fn attach_edge(
    h: &Hypergraph,
    u: VertexId,
    v: VertexId,
    s: usize,
) -> Result<(Operation, AttachCase)> {
    require_simple(h, "edge attachment")?;
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex);
    }
    if s == 0 {
        return Err(Error::InvalidProfile(
            "at least one new vertex is required".into(),
        ));
    }
    let n = h.n();
    let result = h
        .with_extra_vertices(s)
        .with_edge((n..n + s).chain([u, v]))?;
    let direct = poly_of(&result)?;
    let um = UnifiedMatrix::build(h);
    let (pu, pv) = (Part::singleton(u), Part::singleton(v));
    let uv = Part::new([u, v])?;
    let case = if h
        .edges()
        .iter()
        .any(|e| e.len() > 2 && uv.is_subset(&e.part))
    {
        AttachCase::Shared
    } else {
        AttachCase::Separate
    };
    let x = Poly::x();
    let x2 = &x * &x;
    let p = poly_of(h)?;
    let p_u = poly_without(&um, std::slice::from_ref(&pu))?;
    let p_v = poly_without(&um, std::slice::from_ref(&pv))?;
    let p_t = poly_without(&um, &[pu.clone(), pv.clone()])?;
    let factor = |alpha: u32| (&x2 - &Poly::one()).pow(alpha);
    let top = 1u32 << (s + 1);
    let rhs = match case {
        AttachCase::Separate => {
            let inner = &(&(&(&x2 * &p) - &(&x * &p_u)) - &(&x * &p_v)) + &p_t;
            &factor(top - 3) * &inner
        }
        AttachCase::Shared => {
            let x3 = &x2 * &x;
            let p_uv = poly_without(&um, std::slice::from_ref(&uv))?;
            let p_u_uv = poly_without(&um, &[pu.clone(), uv.clone()])?;
            let p_v_uv = poly_without(&um, &[pv.clone(), uv.clone()])?;
            let p_all = poly_without(&um, &[pu, pv, uv])?;
            let terms = [
                &x3 * &p,
                -(&x2 * &p_u),
                -(&x2 * &p_v),
                &x * &p_t,
                -(&x2 * &p_uv),
                &x * &p_u_uv,
                &x * &p_v_uv,
                -p_all,
            ];
            let inner = terms.iter().fold(Poly::zero(), |acc, t| &acc + t);
            &factor(top - 4) * &inner
        }
    };
    let name = match case {
        AttachCase::Shared => "attach.shared",
        AttachCase::Separate => "attach.separate",
    };
    Ok((
        Operation {
            result,
            checks: vec![poly_check(name, &direct, &rhs)],
        },
        case,
    ))
}

/// Characteristic polynomial of a disjoint union as the product of the parts'.
pub fn disjoint_union_charpoly(parts: &[&Hypergraph]) -> Result<CharPoly> {
    let mut acc = Poly::one();
    for h in parts {
        acc = &acc * &poly_of(h)?;
    }
    Ok(CharPoly::from(acc))
}

pub fn disjoint_union(parts: &[&Hypergraph]) -> Result<Operation> {
    let result = Hypergraph::disjoint_union(parts);
    let product = disjoint_union_charpoly(parts)?;
    let direct = char_poly(UnifiedMatrix::build(&result).matrix())?;
    let checks = vec![Check::equal(
        "union",
        direct.to_string(),
        product.to_string(),
    )];
    Ok(Operation { result, checks })
}

/// Human-readable closed-form summary used by reports.
pub fn describe(cf: &ClosedFormSpectrum) -> String {
    let core: Vec<String> = cf.core.iter().map(|&x| fmt_f64(x)).collect();
    format!(
        "core=[{}] unit={} sqrt2={}",
        core.join(" "),
        cf.unit,
        cf.sqrt2
    )
}
