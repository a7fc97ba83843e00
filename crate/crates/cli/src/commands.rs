use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Value};
use wgrass_core::grading::{
    degrees, dualising_degrees, from_gl, gamma_ambient, is_positive, is_well_formed, singular_strata, to_gl,
    validate_permutation, weyl_act, GLParams, GradingError, GradingParams,
};
use wgrass_core::hilbert::{
    closed_series_with_budget, recover_numerator, weyl_series_with_budget, HilbertError, HilbertResult,
    LaurentPoly, DEFAULT_BUDGET,
};
use wgrass_core::linalg::LatticeBasis;
use wgrass_core::pluecker::{relation_degrees, relations, standard_monomial_count, symbolic_relation_degrees, PlueckerError};
use wgrass_core::roots::{coweight_lattice, reference_generators, GroupType, RepSpec, Representation, RootError};

use crate::output::{bigs, join, linear_form, poly, table, Report};
use crate::{Cli, CliError, Command, GradingArgs, Method};

/// Highest order the standard-monomial oracle runs to without `--budget`.
pub const ORACLE_MAX_ORDER: usize = 30;

impl From<GradingError> for CliError {
    fn from(e: GradingError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<PlueckerError> for CliError {
    fn from(e: PlueckerError) -> Self {
        match e {
            PlueckerError::NotPositive => CliError::NotPositive(e.to_string()),
            PlueckerError::Grading(g) => g.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<HilbertError> for CliError {
    fn from(e: HilbertError) -> Self {
        match e {
            HilbertError::NotPositive => CliError::NotPositive(e.to_string()),
            HilbertError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::CrossCheck(other.to_string()),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Degrees(g) => cmd_degrees(g),
        Command::Canonical(g) => cmd_canonical(g),
        Command::Hilbert { grading, method } => cmd_hilbert(grading, *method, cli.order, cli.budget),
        Command::Lattice {
            group_type,
            rank,
            fundamental,
        } => cmd_lattice(group_type, *rank, fundamental),
        Command::Relations { n, k, a } => cmd_relations(*n, *k, a.as_deref()),
        Command::Convert {
            n,
            k,
            from_gl,
            to_gl,
            w,
            u,
            a,
        } => cmd_convert(*n, *k, *from_gl, *to_gl, w.as_deref(), *u, a.as_deref()),
        Command::Weyl { grading, perm } => cmd_weyl(grading, perm),
        Command::Strata(g) => cmd_strata(g),
    }
}

fn infer_n(n: Option<usize>, len: usize, what: &str) -> Result<usize, CliError> {
    if len == 0 {
        return Err(CliError::Usage(format!("{what} must not be empty")));
    }
    match n {
        Some(n) if n + 1 != len => Err(CliError::Usage(format!(
            "-n {n} needs {} entries in {what}, got {len}",
            n + 1
        ))),
        _ => Ok(len - 1),
    }
}

fn params(g: &GradingArgs) -> Result<GradingParams, CliError> {
    let n = infer_n(g.n, g.a.len(), "-a")?;
    Ok(GradingParams::new(n, g.k, g.a.clone())?)
}

fn grading_inputs(p: &GradingParams) -> Value {
    json!({ "n": p.n(), "k": p.k(), "a": p.a() })
}

fn well_formed(p: &GradingParams) -> bool {
    is_positive(p) && is_well_formed(&degrees(p)).unwrap_or(false)
}

fn cmd_degrees(g: &GradingArgs) -> Result<Report, CliError> {
    let p = params(g)?;
    let mut r = Report::new("degrees", grading_inputs(&p));
    let table_ = degrees(&p);
    let (positive, wf) = (is_positive(&p), well_formed(&p));
    let rows: Vec<Vec<String>> = table_.iter().map(|(s, d)| vec![format!("T{s}"), d.to_string()]).collect();
    r.human = table(&["I", "deg"], &rows);
    let _ = writeln!(r.human, "positive: {positive}\nwell_formed: {wf}");
    r.result = json!({
        "degrees": table_
            .iter()
            .map(|(s, d)| json!({ "label": format!("T{s}"), "subset": s.indices(), "degree": d }))
            .collect::<Vec<_>>(),
        "positive": positive,
        "well_formed": wf,
    });
    if !positive {
        r.warnings.push("grading is not positive".into());
    }
    Ok(r)
}

fn cmd_canonical(g: &GradingArgs) -> Result<Report, CliError> {
    let p = params(g)?;
    let mut r = Report::new("canonical", grading_inputs(&p));
    let d = dualising_degrees(&p);
    r.human = format!(
        "deg omega_Y:  {}\ndeg omega_wP: {}\nfano:         {}\nwell_formed:  {}\n",
        d.omega_y, d.omega_wp, d.fano, d.well_formed
    );
    r.result = serde_json::to_value(&d).expect("serialisable");
    if !is_positive(&p) {
        r.warnings.push("grading is not positive".into());
    }
    if !d.well_formed {
        r.warnings
            .push("grading is not well-formed; the dualising-sheaf formulas assume well-formedness".into());
    }
    Ok(r)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Closed => "closed",
        Method::Weyl => "weyl",
        Method::Oracle => "oracle",
        Method::All => "all",
    }
}

/// `(1 - t)^6 (1 - t^2)` from the degree multiset.
fn factored_denominator(degs: &[i64]) -> String {
    let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
    for &d in degs {
        *mult.entry(d).or_insert(0) += 1;
    }
    mult.iter()
        .map(|(&d, &m)| {
            let base = if d == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{d})") };
            if m == 1 {
                base
            } else {
                format!("{base}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_hilbert(g: &GradingArgs, method: Option<Method>, order: usize, budget: Option<u64>) -> Result<Report, CliError> {
    let p = params(g)?;
    let method = method.unwrap_or(if p.n() <= 4 { Method::All } else { Method::Closed });
    let mut r = Report::new(
        "hilbert",
        json!({ "n": p.n(), "k": p.k(), "a": p.a(), "order": order, "method": method_name(method) }),
    );
    if !is_positive(&p) {
        return Err(CliError::NotPositive("grading is not positive".into()));
    }
    if let Some(b) = budget {
        r.warnings.push(format!("budget overridden: {b} (default {DEFAULT_BUDGET})"));
    }
    let perm_budget = budget.unwrap_or(DEFAULT_BUDGET);
    let degs = degrees(&p).multiset();

    let mut formulas: Vec<(&str, HilbertResult)> = Vec::new();
    if matches!(method, Method::Closed | Method::All) {
        formulas.push(("closed", closed_series_with_budget(&p, order, perm_budget)?));
    }
    if matches!(method, Method::Weyl | Method::All) {
        formulas.push(("weyl", weyl_series_with_budget(&p, order, perm_budget)?));
    }
    let mut oracle = None;
    if matches!(method, Method::Oracle | Method::All) {
        if order > ORACLE_MAX_ORDER && budget.is_none() {
            let msg = format!("oracle order {order} exceeds {ORACLE_MAX_ORDER}; pass --budget to override");
            if method == Method::Oracle {
                return Err(CliError::Budget(msg));
            }
            r.warnings.push(format!("{msg}; oracle skipped"));
        } else {
            oracle = Some(standard_monomial_count(&p, order)?);
        }
    }

    let mut paths: Vec<&str> = formulas.iter().map(|(name, _)| *name).collect();
    if oracle.is_some() {
        paths.push("oracle");
    }
    let series = match (formulas.first(), &oracle) {
        (Some((_, h)), _) => h.series.clone(),
        (None, Some(s)) => s.clone(),
        (None, None) => unreachable!("at least one path runs"),
    };
    for (name, h) in &formulas {
        if h.series != series {
            return Err(CliError::CrossCheck(format!("{name} series differs from {}", paths[0])));
        }
    }
    if let Some((_, h0)) = formulas.first() {
        if formulas.iter().any(|(_, h)| h != h0) {
            return Err(CliError::CrossCheck("closed and weyl rational functions differ".into()));
        }
    }
    if oracle.as_ref().is_some_and(|s| *s != series) {
        return Err(CliError::CrossCheck("oracle series differs from the formulas".into()));
    }

    let numerator: Option<LaurentPoly> = match formulas.first() {
        Some((_, h)) => {
            if let Ok(rec) = recover_numerator(&h.series, &degs) {
                if rec != h.numerator {
                    return Err(CliError::CrossCheck("recovered numerator differs".into()));
                }
            }
            Some(h.numerator.clone())
        }
        None => match recover_numerator(&series, &degs) {
            Ok(num) => Some(num),
            Err(HilbertError::WindowTooShort { needed, .. }) => {
                r.warnings.push(format!(
                    "numerator not recovered: the oracle needs --order {} or more",
                    needed - 1
                ));
                None
            }
            Err(e) => return Err(e.into()),
        },
    };

    let denominator = wgrass_core::hilbert::hilbert_serre_denominator(&degs);
    let checked = paths.join(" = ");
    let _ = writeln!(r.human, "denominator:  {}", factored_denominator(&degs));
    let mut result = json!({
        "method": method_name(method),
        "paths": paths,
        "series": bigs(&series),
        "denominator_degrees": degs,
        "denominator": poly(&denominator),
        "agreement": true,
    });
    if let Some(num) = &numerator {
        let h = HilbertResult {
            numerator: num.clone(),
            denominator: denominator.clone(),
            series: series.clone(),
        };
        let (rn, rd) = h.reduced();
        let _ = writeln!(r.human, "numerator:    {num}");
        let _ = writeln!(r.human, "reduced:      ({rn}) / ({rd})");
        result["numerator"] = poly(num);
        result["reduced"] = json!({ "numerator": poly(&rn), "denominator": poly(&rd) });
    }
    let _ = writeln!(r.human, "series:       {}", join(&series));
    let _ = writeln!(r.human, "checked:      {checked}");
    r.result = result;
    Ok(r)
}

fn cmd_lattice(group_type: &str, rank: usize, fundamental: &str) -> Result<Report, CliError> {
    let t: GroupType = group_type.parse()?;
    let rep = if fundamental.eq_ignore_ascii_case("standard") {
        Representation::Standard
    } else {
        let k = fundamental
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("--fundamental must be an integer or 'standard', got '{fundamental}'")))?;
        Representation::Exterior(k)
    };
    let spec = RepSpec::new(t, rank, rep)?;
    let mut r = Report::new(
        "lattice",
        json!({ "type": t.to_string(), "rank": rank, "fundamental": fundamental.to_ascii_lowercase() }),
    );
    let lattice = coweight_lattice(&spec)?;
    let (check_name, reference) = match t {
        GroupType::A => {
            let k = match rep {
                Representation::Exterior(k) => k,
                Representation::Standard => 1,
            };
            ("gamma basis", gamma_ambient(rank, k)?)
        }
        _ => (
            "reference generators",
            reference_generators(&spec).ok_or_else(|| CliError::Usage("no reference generators".into()))?,
        ),
    };
    let matches = lattice.same_lattice(&LatticeBasis::from_generators(&reference));
    if !matches {
        return Err(CliError::CrossCheck(format!("coweight lattice does not match the {check_name}")));
    }
    let basis = lattice.basis();
    let mut header = vec!["coord".to_string()];
    header.extend((0..basis.cols()).map(|c| format!("b{c}")));
    let rows: Vec<Vec<String>> = spec
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let mut row = vec![l.to_string()];
            row.extend(basis.row(i).iter().map(ToString::to_string));
            row
        })
        .collect();
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    r.human = table(&header_refs, &rows);
    let _ = writeln!(r.human, "rank: {}", basis.cols());
    let _ = writeln!(r.human, "matches {check_name}: {matches}");
    r.result = json!({
        "labels": spec.labels().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "basis": basis.columns().iter().map(|c| bigs(c)).collect::<Vec<_>>(),
        "rank": basis.cols(),
        "check": check_name,
        "matches": matches,
    });
    Ok(r)
}

fn cmd_relations(n: Option<usize>, k: usize, a: Option<&[i64]>) -> Result<Report, CliError> {
    let n = match (n, a) {
        (_, Some(a)) => infer_n(n, a.len(), "-a")?,
        (Some(n), None) => n,
        (None, None) => return Err(CliError::Usage("relations needs -n or -a".into())),
    };
    let rels = relations(n, k)?;
    let forms = symbolic_relation_degrees(n, k)?;
    let degs = match a {
        Some(a) => Some(relation_degrees(&rels, &degrees(&GradingParams::new(n, k, a.to_vec())?))?),
        None => None,
    };
    let mut r = Report::new("relations", json!({ "n": n, "k": k, "a": a }));
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (i, rel) in rels.iter().enumerate() {
        let mut row = vec![rel.to_string(), linear_form(&forms[i])];
        let mut item = json!({
            "relation": rel.to_string(),
            "terms": rel.terms().iter().map(|t| json!({
                "coefficient": t.coefficient,
                "left": t.left.indices(),
                "right": t.right.indices(),
            })).collect::<Vec<_>>(),
            "degree_form": forms[i],
        });
        if let Some(d) = &degs {
            row.push(d[i].degree.to_string());
            item["degree"] = json!(d[i].degree);
            item["quasi_homogeneous"] = json!(d[i].quasi_homogeneous);
            if !d[i].quasi_homogeneous {
                return Err(CliError::CrossCheck(format!("relation {rel} is not quasi-homogeneous")));
            }
        }
        rows.push(row);
        items.push(item);
    }
    r.human = if rels.is_empty() {
        "no relations\n".to_string()
    } else if degs.is_some() {
        table(&["relation", "degree form", "degree"], &rows)
    } else {
        table(&["relation", "degree form"], &rows)
    };
    let _ = writeln!(r.human, "count: {}", rels.len());
    r.result = json!({ "relations": items, "count": rels.len() });
    Ok(r)
}

#[allow(clippy::too_many_arguments)]
fn cmd_convert(
    n: Option<usize>,
    k: usize,
    from: bool,
    to: bool,
    w: Option<&[i64]>,
    u: Option<i64>,
    a: Option<&[i64]>,
) -> Result<Report, CliError> {
    match (from, to) {
        (true, false) => {
            let (w, u) = (w.unwrap_or_default(), u.unwrap_or_default());
            let n = infer_n(n, w.len(), "--w")?;
            let g = GLParams { w: w.to_vec(), u };
            let p = from_gl(n, k, &g)?;
            let mut r = Report::new("convert", json!({ "direction": "from-gl", "n": n, "k": k, "w": w, "u": u }));
            r.human = format!("a = {}\n", join(p.a()));
            r.result = json!({ "a": p.a() });
            Ok(r)
        }
        (false, true) => {
            let a = a.unwrap_or_default();
            let n = infer_n(n, a.len(), "-a")?;
            let p = GradingParams::new(n, k, a.to_vec())?;
            let g = to_gl(&p);
            let mut r = Report::new("convert", json!({ "direction": "to-gl", "n": n, "k": k, "a": a }));
            r.human = format!("w = {}\nu = {}\n", join(&g.w), g.u);
            r.result = json!({ "w": g.w, "u": g.u });
            Ok(r)
        }
        _ => Err(CliError::Usage("pass exactly one of --from-gl and --to-gl".into())),
    }
}

fn cmd_weyl(g: &GradingArgs, perm: &[usize]) -> Result<Report, CliError> {
    let p = params(g)?;
    validate_permutation(p.n(), perm)?;
    let q = weyl_act(&p, perm)?;
    let mut r = Report::new(
        "weyl",
        json!({ "n": p.n(), "k": p.k(), "a": p.a(), "perm": perm }),
    );
    r.human = format!("a' = {}\n", join(q.a()));
    r.result = json!({ "a": q.a() });
    Ok(r)
}

fn cmd_strata(g: &GradingArgs) -> Result<Report, CliError> {
    let p = params(g)?;
    if !is_positive(&p) {
        return Err(CliError::NotPositive("grading is not positive".into()));
    }
    let strata = singular_strata(&degrees(&p));
    let mut r = Report::new("strata", grading_inputs(&p));
    let rows: Vec<Vec<String>> = strata
        .iter()
        .map(|(prime, subs)| {
            let labels: Vec<String> = subs.iter().map(|s| format!("T{s}")).collect();
            vec![prime.to_string(), labels.join(" ")]
        })
        .collect();
    r.human = if rows.is_empty() {
        "no prime divides any degree\n".to_string()
    } else {
        table(&["prime", "coordinates"], &rows)
    };
    r.result = json!({
        "strata": strata
            .iter()
            .map(|(prime, subs)| json!({
                "prime": prime,
                "coordinates": subs.iter().map(|s| format!("T{s}")).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>(),
    });
    Ok(r)
}
