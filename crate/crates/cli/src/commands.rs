//! One handler per subcommand.

use detvar::combinatorics::binomial;
use detvar::eids::{
    chi_bar_maximal_minors, chi_stabilization, chi_stabilization_good_approx,
    chi_stabilization_good_approx_from_milnor, eu_of_module, eu_section_high_q,
    eu_section_low_q, eu_via_pair_multiplicities, good_approx_q_window, icis_chi_from_polar,
    section_dim, section_regime, solve_polar_multiplicities, SectionRegime,
};
use detvar::linalg::determinant;
use detvar::strata::ambient_dim;
use detvar::{
    csm_cycle, eu_closed, eu_constructible, eu_recurrence,
    evaluate_cycle_at_stratum, polar_class_coefficient, StrataSpec, TriangularSystem,
};
use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::document::ProblemDocument;
use crate::report::{ints_value, Report, Table};
use crate::{json_int, verify, CliError, Command, IntList, NksArgs, SnArgs, EXIT_OK};

pub type Outcome = Result<(Report, i32), CliError>;

pub fn dispatch(cmd: &Command) -> Outcome {
    let report = match cmd {
        Command::Eu(a) => eu(a)?,
        Command::EuConstructible(a) => eu_constructible_cmd(a)?,
        Command::Csm(a) => csm(a)?,
        Command::PolarClass { s, n, k, i } => polar_class(*s, *n, *k, *i)?,
        Command::ChiStab { problem } => chi_stab(problem)?,
        Command::ChiStabGood {
            q,
            n,
            k,
            t,
            chi1,
            mu,
            icis_polar,
        } => chi_stab_good(*q, *n, *k, *t, chi1.as_ref(), mu.as_ref(), icis_polar.as_ref())?,
        Command::GenericSystem(a) => generic_system(a)?,
        Command::SolveSystem { dims, b } => solve_system(dims, b)?,
        Command::EuSection {
            q,
            n,
            k,
            s,
            chi_bar_star,
            chi_bar_1h,
        } => eu_section(*q, *n, *k, *s, &chi_bar_star.0, chi_bar_1h.as_ref())?,
        Command::EuModule {
            polar_mults,
            pair_mults,
            eu_pullback,
        } => eu_module(polar_mults.as_ref(), pair_mults.as_ref(), eu_pullback.as_ref())?,
        Command::QWindow { n, k, r } => q_window(*n, *k, *r)?,
        Command::Pascal { rows } => pascal(*rows),
        Command::Verify {
            suite,
            n_max,
            k_max,
            s_max,
        } => return Ok(verify::run(*suite, *n_max, *k_max, *s_max)),
    };
    Ok((report, EXIT_OK))
}

fn eu(a: &SnArgs) -> Result<Report, CliError> {
    let rec = eu_recurrence(a.s, a.n)?;
    let closed = eu_closed(a.s, a.n)?;
    let mut r = Report::new("eu", "euler-obstruction/closed-form");
    r.field("s", a.s).field("n", a.n).int("eu", &closed);
    let mut routes = Map::new();
    routes.insert("recurrence".into(), json_int::to_value(&rec));
    routes.insert("closed".into(), json_int::to_value(&closed));
    r.field("routes", Value::Object(routes));
    r.field("routes_agree", rec == closed);
    if rec != closed {
        r.flag("routes-disagree");
    }
    Ok(r)
}

fn eu_constructible_cmd(a: &SnArgs) -> Result<Report, CliError> {
    let f = eu_constructible(a.s, a.n)?;
    let mut r = Report::new("eu-constructible", "euler-obstruction/constructible");
    r.field("s", a.s).field("n", a.n).ints("values", f.coeffs());
    let mut t = Table::with_header(["i", "eu"]);
    for (i, v) in f.coeffs().iter().enumerate() {
        t.push(vec![(i + 1).to_string(), v.to_string()]);
    }
    r.table = Some(t);
    Ok(r)
}

fn csm(a: &SnArgs) -> Result<Report, CliError> {
    let cycle = csm_cycle(a.s, a.n)?;
    let evals = (1..=a.s)
        .map(|j| evaluate_cycle_at_stratum(&cycle, j))
        .collect::<Result<Vec<_>, _>>()?;
    let mut r = Report::new("csm", "csm/local-cycle");
    r.field("s", a.s)
        .field("n", a.n)
        .ints("coeffs", cycle.coeffs())
        .field("cycle", cycle.to_string())
        .field("chern_mather", cycle.chern_mather_expansion())
        .ints("eu_by_stratum", &evals);
    if evals.iter().any(|e| *e != BigInt::from(1)) {
        r.flag("cycle-not-normalized");
    }
    let mut t = Table::with_header(["i", "stratum", "coeff", "eu_of_cycle"]);
    for (i, (c, e)) in cycle.coeffs().iter().zip(&evals).enumerate() {
        t.push(vec![
            (i + 1).to_string(),
            format!("Σ^{}", i + 1),
            c.to_string(),
            e.to_string(),
        ]);
    }
    r.table = Some(t);
    Ok(r)
}

fn polar_class(s: u32, n: u32, k: u32, only: Option<u32>) -> Result<Report, CliError> {
    let spec = StrataSpec::new(n, k, s)?;
    let indices: Vec<u32> = match only {
        Some(i) => vec![i],
        None => (0..s).collect(),
    };
    let mut r = Report::new("polar-class", "csm/polar-classes");
    r.field("s", s).field("n", n).field("k", k);
    if let Some(i) = only {
        r.field("i", i);
    }
    let mut t = Table::with_header([
        "i",
        "polar_index",
        "parity_exponent",
        "sign",
        "magnitude",
        "value",
        "csm_magnitude",
    ]);
    let mut rows = Vec::new();
    let mut differs = false;
    for i in indices {
        let p = polar_class_coefficient(spec, i)?;
        differs |= p.magnitude != p.csm_magnitude;
        let mut o = Map::new();
        o.insert("i".into(), i.into());
        o.insert("polar_index".into(), p.polar_index.into());
        o.insert("parity_exponent".into(), p.parity_exponent.into());
        o.insert("sign".into(), p.sign.into());
        o.insert("magnitude".into(), json_int::to_value(&p.magnitude));
        o.insert("value".into(), json_int::to_value(&p.value()));
        o.insert("csm_magnitude".into(), json_int::to_value(&p.csm_magnitude));
        rows.push(Value::Object(o));
        t.push(vec![
            i.to_string(),
            p.polar_index.to_string(),
            p.parity_exponent.to_string(),
            p.sign.to_string(),
            p.magnitude.to_string(),
            p.value().to_string(),
            p.csm_magnitude.to_string(),
        ]);
    }
    r.field("coefficients", Value::Array(rows));
    if differs {
        r.flag("polar-magnitude-differs-from-csm-magnitude");
    }
    r.table = Some(t);
    Ok(r)
}

fn chi_stab(path: &std::path::Path) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let doc = ProblemDocument::parse(&text).map_err(|e| CliError::Schema(e.0))?;
    let problem = doc.to_problem();
    let stab = chi_stabilization(&problem)?;
    let mut r = Report::new("chi-stab", "eids/stabilization");
    r.field("q", doc.q)
        .field("n", doc.n)
        .field("k", doc.k)
        .field("t", doc.t)
        .int("chi", &stab.chi);
    let mut d = Map::new();
    for i in 1..=doc.t {
        d.insert(i.to_string(), problem.d(i)?.into());
    }
    r.field("section_dims", Value::Object(d));
    for st in &doc.strata {
        for (name, v) in [("chi_stab", &st.chi_stab), ("m_top", &st.m_top), ("eu0", &st.eu0)] {
            if v.is_some() {
                r.source(&format!("{name}[{}]", st.i), "user-supplied");
            }
        }
    }
    r.source("n_coefficients", "computed");
    if stab.polar_terms_nonzero {
        r.flag("polar-term-sign-unchecked");
    }
    Ok(r)
}

fn chi_stab_good(
    q: u32,
    n: u32,
    k: u32,
    t: u32,
    chi1: Option<&BigInt>,
    mu: Option<&BigInt>,
    polar: Option<&IntList>,
) -> Result<Report, CliError> {
    let mut r = Report::new("chi-stab-good", "eids/stabilization-good-approximation");
    r.field("q", q).field("n", n).field("k", k).field("t", t);
    let chi = if let Some(c) = chi1 {
        r.int("chi1", c).source("chi1", "user-supplied");
        chi_stabilization_good_approx(q, n, k, t, c)?
    } else if let Some(m) = mu {
        r.int("mu", m).source("mu", "user-supplied");
        r.source("chi1", "computed from mu");
        let chi = chi_stabilization_good_approx_from_milnor(q, n, k, t, m)?;
        if n == 2 && t == 2 {
            r.int("chi_bar_maximal_minors", &chi_bar_maximal_minors(q, m));
        }
        chi
    } else {
        let ms = &polar.expect("clap requires one source").0;
        let c = icis_chi_from_polar(ms);
        r.ints("icis_polar", ms).int("chi1", &c);
        r.source("icis_polar", "user-supplied")
            .source("chi1", "computed from polar multiplicities");
        chi_stabilization_good_approx(q, n, k, t, &c)?
    };
    r.int("chi", &chi);
    Ok(r)
}

fn generic_system(a: &NksArgs) -> Result<Report, CliError> {
    let sys = detvar::eids::build_generic_system(a.n, a.k, a.s)?;
    let x = solve_polar_multiplicities(&sys)?;
    let det = determinant(sys.matrix())?;
    let mut r = system_report("generic-system", a, &sys, &x);
    r.int("determinant", &det);
    r.source("rhs", "computed (cone, generic slice)");
    let expected: Vec<BigInt> = (0..a.s).map(|i| BigInt::from(u8::from(i == 0))).collect();
    if x != expected {
        r.flag("solution-differs-from-generic-expectation");
    }
    Ok(r)
}

fn solve_system(a: &NksArgs, b: &IntList) -> Result<Report, CliError> {
    let sys = TriangularSystem::with_stratum_rhs(a.n, a.k, a.s, &b.0)?;
    let x = solve_polar_multiplicities(&sys)?;
    let mut r = system_report("solve-system", a, &sys, &x);
    r.source("rhs", "user-supplied");
    Ok(r)
}

fn system_report(cmd: &'static str, a: &NksArgs, sys: &TriangularSystem, x: &[BigInt]) -> Report {
    let mut r = Report::new(cmd, "eids/polar-multiplicity-system");
    r.field("n", a.n).field("k", a.k).field("s", a.s);
    let rows: Vec<Value> = sys.matrix().iter().map(|row| ints_value(row)).collect();
    r.field("matrix", Value::Array(rows));
    let b: Vec<BigInt> = (1..=sys.size()).map(|i| sys.b(i).expect("in range").clone()).collect();
    r.ints("rhs", &b).ints("solution", x);
    let mut t = Table::with_header(["i", "dim", "b", "m"]);
    for (idx, (bi, xi)) in b.iter().zip(x).enumerate() {
        let i = idx as u32 + 1;
        let dim = StrataSpec::new(a.n, a.k, i).map(|s| s.geometry().dim);
        t.push(vec![
            i.to_string(),
            dim.map(|d| d.to_string()).unwrap_or_default(),
            bi.to_string(),
            xi.to_string(),
        ]);
    }
    r.table = Some(t);
    r
}

fn eu_section(
    q: u32,
    n: u32,
    k: u32,
    s: u32,
    star: &[BigInt],
    chi_bar_1h: Option<&BigInt>,
) -> Result<Report, CliError> {
    StrataSpec::new(n, k, s)?;
    let regime = section_regime(q, n, k)?;
    let mut r = Report::new(
        "eu-section",
        match regime {
            SectionRegime::BelowAmbient => "eids/section-below-ambient",
            SectionRegime::AboveAmbient => "eids/section-above-ambient",
        },
    );
    r.field("q", q).field("n", n).field("k", k).field("s", s);
    r.field("ambient_dim", ambient_dim(n, k));
    r.ints("chi_bar_star", star).source("chi_bar_star", "user-supplied");
    let eu = match regime {
        SectionRegime::BelowAmbient => {
            r.field("regime", "q < n(n+k)");
            if chi_bar_1h.is_some() {
                r.warnings
                    .push("--chi-bar-1h is not used when q < n(n+k)".to_string());
            }
            eu_section_low_q(s, n, star)?
        }
        SectionRegime::AboveAmbient => {
            r.field("regime", "q > n(n+k)");
            let h = chi_bar_1h.ok_or(detvar::Error::MissingInvariant {
                stratum: 1,
                field: "chi_bar_1h",
            })?;
            r.int("chi_bar_1h", h).source("chi_bar_1h", "user-supplied");
            r.flag("above-ambient-formula-evaluated-as-written");
            eu_section_high_q(s, n, h, star)?
        }
    };
    r.int("eu", &eu);
    Ok(r)
}

fn eu_module(
    polar: Option<&IntList>,
    pairs: Option<&IntList>,
    pullback: Option<&BigInt>,
) -> Result<Report, CliError> {
    if let Some(IntList(ms)) = polar {
        let mut r = Report::new("eu-module", "module/alternating-polar-sum");
        r.ints("polar_mults", ms).source("polar_mults", "user-supplied");
        r.int("eu", &eu_of_module(ms));
        if ms.is_empty() {
            r.warnings
                .push("empty polar multiplicity list; Eu is 0 by convention".to_string());
        }
        return Ok(r);
    }
    let ms = &pairs.expect("clap requires one source").0;
    let pb = pullback.expect("clap requires --eu-pullback");
    let eu = eu_via_pair_multiplicities(ms, pb)?;
    let mut r = Report::new("eu-module", "module/pair-multiplicities");
    r.ints("pair_mults", ms).int("eu_pullback", pb);
    r.source("pair_mults", "user-supplied")
        .source("eu_pullback", "user-supplied");
    r.int("eu", &eu);
    if ms.is_empty() {
        r.warnings
            .push("empty pair multiplicity list; only the pullback term contributes".to_string());
    }
    Ok(r)
}

fn q_window(n: u32, k: u32, r_: u32) -> Result<Report, CliError> {
    let w = good_approx_q_window(n, k, r_)?;
    let mut r = Report::new("q-window", "eids/good-approximation-window");
    r.field("n", n).field("k", k).field("r", r_);
    r.field("kernel_rank", w.kernel_rank)
        .field("rank_bound", w.rank_bound)
        .field("lower_exclusive", w.lower_exclusive)
        .field("upper_exclusive", w.upper_exclusive);
    let values: Vec<u64> = w.values().collect();
    r.field("values", Value::Array(values.iter().map(|&v| v.into()).collect()));
    let mut t = Table::with_header(["q", "d_1", "d_rank_bound"]);
    for &q in &values {
        let q32 = q as u32;
        t.push(vec![
            q.to_string(),
            section_dim(q32, n, k, 1).map(|d| d.to_string()).unwrap_or_default(),
            section_dim(q32, n, k, w.rank_bound)
                .map(|d| d.to_string())
                .unwrap_or_default(),
        ]);
    }
    if w.is_empty() {
        r.warnings.push("the window is empty".to_string());
    }
    r.table = Some(t);
    Ok(r)
}

fn pascal(rows: u32) -> Report {
    let tri = detvar::euler::pascal_triangle_of_spaces(rows);
    let mut r = Report::new("pascal", "euler-obstruction/pascal-triangle");
    r.field("rows", rows);
    r.field(
        "triangle",
        Value::Array(tri.iter().map(|row| ints_value(row)).collect()),
    );
    r.table = Some(Table {
        header: None,
        rows: tri
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect(),
    });
    // binomial is the row oracle; a mismatch would be an engine bug
    let agrees = tri.iter().enumerate().all(|(n, row)| {
        row.iter()
            .enumerate()
            .all(|(i, v)| *v == binomial(n as i64, i as i64))
    });
    if !agrees {
        r.flag("triangle-differs-from-binomials");
    }
    r
}
