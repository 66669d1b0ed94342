use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use k3dyn::curvegeom::{gamma0_report, tilde_configuration, tilde_curves, tilde_relations, tilde_selections};
use k3dyn::dynamics::{entropy_table, render_csv, render_text, sig_digits, EntropyRow};
use k3dyn::lattice::{
    build_gram, check_embedding, det_bareiss, det_formula, embedding_vectors, smith_normal_form, EmbeddingName,
    IntMatrix, PureType,
};
use k3dyn::surface::{
    build_tilde_q, curve_contained, find_axis_curves, jacobian, sample_curve_points, sample_surface_points_f64,
    tau_point_f64, verify_tau_identities, Certainty, FoundCurve, TriForm,
};
use k3dyn::Axis;
use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::report::{CliError, Report};

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Reads a JSON file; parse errors keep serde's line and column.
fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_form(poly: Option<&Path>) -> Result<TriForm, CliError> {
    poly.map_or_else(|| Ok(build_tilde_q()), read_json)
}

fn axes(axis: Option<Axis>) -> Vec<Axis> {
    axis.map_or(Axis::ALL.to_vec(), |a| vec![a])
}

pub fn table() -> Result<Report, CliError> {
    let rows = entropy_table()?;
    Ok(Report::new(render_text(&rows), to_json(&rows)).with_csv(render_csv(&rows)))
}

pub fn gram(t: PureType) -> Report {
    let g = build_gram(t);
    let text = format!("M{t}, rank {}\n{}\n{}", t.rank(), g.labels.join(" "), g.gram);
    let mut csv = format!(",{}\n", g.labels.join(","));
    for (label, row) in g.labels.iter().zip(g.gram.to_rows()) {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(csv, "{label},{}", cells.join(","));
    }
    Report::new(text, json!({ "type": t, "labels": g.labels, "gram": g.gram })).with_csv(csv)
}

pub fn det(t: PureType) -> Result<Report, CliError> {
    let formula = det_formula(t)?;
    let bareiss = det_bareiss(&build_gram(t).gram)?;
    let ok = formula == bareiss;
    let text = format!("type {t}: formula {formula}, bareiss {bareiss}, match={ok}\n");
    let csv = format!("type,formula,bareiss,match\n\"{t}\",{formula},{bareiss},{ok}\n");
    let json = json!({ "type": t, "formula": formula.to_string(), "bareiss": bareiss.to_string(), "match": ok });
    Ok(Report::new(text, json).with_csv(csv).with_ok(ok))
}

pub fn snf(t: Option<PureType>, matrix: Option<&Path>) -> Result<Report, CliError> {
    let (source, m) = match (t, matrix) {
        (Some(t), None) => (format!("M{t}"), build_gram(t).gram),
        (None, Some(p)) => (p.display().to_string(), read_json::<IntMatrix>(p)?),
        _ => return Err(CliError::Usage("give exactly one of --type or --matrix".into())),
    };
    let smith = smith_normal_form(&m);
    let factors: Vec<String> = smith.invariant_factors().iter().map(ToString::to_string).collect();
    let text = format!("{source}: {}x{}, invariant factors {}\n", m.rows(), m.cols(), factors.join(" "));
    let json = json!({
        "source": source,
        "invariant_factors": factors,
        "d": smith.d,
        "u": smith.u,
        "v": smith.v,
    });
    Ok(Report::new(text, json))
}

pub fn entropy(t: PureType) -> Result<Report, CliError> {
    let row = EntropyRow::compute(t)?;
    let parts: Vec<String> = row.cyclotomic_parts.iter().map(|(n, m)| format!("Phi{n}^{m}")).collect();
    let text = format!(
        "type {t}\nlambda {}\nmin_poly {}\nchar_poly {}\ncyclotomic {}\nentropy {}\n",
        sig_digits(row.lambda, 12),
        row.min_poly,
        row.char_poly,
        if parts.is_empty() { "none".to_string() } else { parts.join(" ") },
        sig_digits(row.entropy, 12),
    );
    let csv = render_csv(std::slice::from_ref(&row));
    Ok(Report::new(text, to_json(&row)).with_csv(csv))
}

pub fn embed_check(name: Option<EmbeddingName>) -> Result<Report, CliError> {
    let names = name.map_or(EmbeddingName::ALL.to_vec(), |n| vec![n]);
    let (mut text, mut reports, mut ok) = (String::new(), Vec::new(), true);
    for n in names {
        let expected = n.expected_type();
        let r = check_embedding(&embedding_vectors(n), expected)?;
        let primitive = r.primitive;
        let _ = writeln!(text, "{n}: type {expected}, gram_ok={}, primitive={primitive}", r.gram_ok);
        ok &= r.gram_ok && primitive;
        let mut v = to_json(&r);
        v["name"] = json!(n);
        v["type"] = json!(expected);
        reports.push(v);
    }
    Ok(Report::new(text, Value::Array(reports)).with_ok(ok))
}

fn describe(f: &FoundCurve) -> String {
    match (&f.curve, &f.certainty) {
        (Some(c), _) => format!("{}  {c}  exact", f.axis),
        (None, Certainty::Numeric { residual }) => {
            let shown: Vec<String> = f
                .approx
                .iter()
                .map(|z| z.map_or("inf".to_string(), |z| format!("{:.12}{:+.12}i", z.re, z.im)))
                .collect();
            format!("{}  ({})  numeric residual {residual:.1e}", f.axis, shown.join(", "))
        }
        (None, Certainty::Exact) => unreachable!("exact results carry a curve"),
    }
}

pub fn curves(poly: Option<&Path>, axis: Option<Axis>, denom_bound: u64) -> Result<Report, CliError> {
    let q = load_form(poly)?;
    let mut found = Vec::new();
    for a in axes(axis) {
        found.extend(find_axis_curves(&q, a, denom_bound)?);
    }
    let mut text: String = found.iter().map(|f| describe(f) + "\n").collect();
    let exact = found.iter().filter(|f| f.curve.is_some()).count();
    let _ = writeln!(text, "{} curves, {exact} exact", found.len());
    Ok(Report::new(text, to_json(&found)))
}

pub fn identity_check(poly: Option<&Path>, axis: Option<Axis>) -> Result<Report, CliError> {
    let q = load_form(poly)?;
    let (mut text, mut rows, mut ok) = (String::new(), Vec::new(), true);
    for a in axes(axis) {
        let r = verify_tau_identities(&q, a);
        ok &= r.conjugation && r.cross;
        let _ = writeln!(text, "{a}: conjugation={}, cross={}", r.conjugation, r.cross);
        let mut v = to_json(&r);
        v["axis"] = json!(a);
        rows.push(v);
    }
    Ok(Report::new(text, Value::Array(rows)).with_ok(ok))
}

fn relation_checks() -> Result<Vec<(String, bool)>, CliError> {
    let cfg = tilde_configuration();
    tilde_relations()
        .into_iter()
        .map(|r| {
            let ok = cfg.verify_relation(&cfg.parse_class(r.lhs)?, &cfg.parse_class(r.rhs)?);
            Ok((format!("{} = {}", r.lhs, r.rhs), ok))
        })
        .collect()
}

pub fn relations() -> Result<Report, CliError> {
    let checks = relation_checks()?;
    let ok = checks.iter().all(|(_, v)| *v);
    let text: String = checks.iter().map(|(r, v)| format!("{}  {r}\n", verdict(*v))).collect();
    let json: Vec<Value> = checks.iter().map(|(r, v)| json!({ "relation": r, "ok": v })).collect();
    Ok(Report::new(text, Value::Array(json)).with_ok(ok))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok  "
    } else {
        "FAIL"
    }
}

struct Check {
    name: String,
    ok: bool,
    detail: String,
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), ok, detail: detail.into() }
}

pub fn tilde_verify(tol: f64, denom_bound: u64) -> Result<Report, CliError> {
    let q = build_tilde_q();
    let listed = tilde_curves();
    let cfg = tilde_configuration();
    let mut checks = Vec::new();

    let mut exact_total = 0;
    for a in Axis::ALL {
        let found = find_axis_curves(&q, a, denom_bound)?;
        let got: BTreeSet<String> = found.iter().filter_map(|f| f.curve.as_ref()).map(ToString::to_string).collect();
        let want: BTreeSet<String> = listed.iter().filter(|c| c.axis() == a).map(ToString::to_string).collect();
        exact_total += got.len();
        let ok = got == want && found.len() == want.len();
        checks.push(check(format!("curves along {a}"), ok, format!("{} found, {} listed", found.len(), want.len())));
    }
    let contained = listed.iter().filter(|c| curve_contained(&q, c)).count();
    checks.push(check("listed curves contained", contained == listed.len(), format!("{contained}/{}", listed.len())));

    for (r, ok) in relation_checks()? {
        checks.push(check("relation", ok, r));
    }
    for s in tilde_selections() {
        let ok = cfg.sublattice_check(&s.labels, s.ty)?;
        checks.push(check(format!("{} spans M{}", s.name, s.ty), ok, s.labels.join(" ")));
        if let Some(extra) = s.contains {
            let class = cfg.generator(extra)?;
            let inb = cfg.express_in_basis(&class, &s.labels)?;
            let coeffs: Vec<String> = inb.coeffs.iter().map(ToString::to_string).collect();
            checks.push(check(format!("[{extra}] in {}", s.name), inb.integral, coeffs.join(" ")));
            let g = gamma0_report(&cfg, &class, &s.labels)?;
            checks.push(check(format!("[{extra}] gamma0 conditions in {}", s.name), g.ok, ""));
        }
    }
    let rank = cfg.rank();
    checks.push(check("span of fibers and curves", true, format!("rank {rank}")));

    for a in Axis::ALL {
        let r = verify_tau_identities(&q, a);
        checks.push(check(format!("involution identities along {a}"), r.conjugation && r.cross, ""));
    }

    let samples = sample_curve_points(&listed, 50, 1);
    let smooth = samples
        .iter()
        .filter(|p| {
            let j = jacobian(&q, p);
            j.value.is_zero() && !j.is_singular()
        })
        .count();
    checks.push(check("smooth at sampled curve points", smooth == samples.len(), format!("{smooth}/{}", samples.len())));

    let points = sample_surface_points_f64(&q, 100, 1);
    let (mut passed, mut excluded, mut worst) = (0, 0, 0.0f64);
    for p in &points {
        for a in Axis::ALL {
            let Some(once) = tau_point_f64(&q, a, p, 1e-12) else {
                excluded += 1;
                continue;
            };
            let Some(twice) = tau_point_f64(&q, a, &once, 1e-12) else {
                excluded += 1;
                continue;
            };
            let res = once.relative_residual(&q);
            worst = worst.max(res);
            if res < tol && twice.proj_close(p, tol) {
                passed += 1;
            }
        }
    }
    let attempted = points.len() * 3 - excluded;
    checks.push(check(
        "point dynamics",
        points.len() == 100 && passed == attempted,
        format!("{passed}/{attempted} within {tol:e}, {excluded} indeterminate excluded, max residual {worst:.1e}"),
    ));

    let ok = checks.iter().all(|c| c.ok);
    let mut text = String::new();
    for c in &checks {
        let detail = if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) };
        let _ = writeln!(text, "{}  {}{detail}", verdict(c.ok), c.name);
    }
    let _ = writeln!(text, "{exact_total} exact curves; {}", if ok { "all checks passed" } else { "some checks FAILED" });
    let json = json!({
        "exact_curves": exact_total,
        "checks": checks.iter().map(|c| json!({ "name": c.name, "ok": c.ok, "detail": c.detail })).collect::<Vec<_>>(),
    });
    Ok(Report::new(text, json).with_ok(ok))
}
