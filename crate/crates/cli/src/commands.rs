use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use grpact::groupoid::{groupoid_classifier_of, grpd_verify_generic};
use grpact::io::{self, Document};
use grpact::lattice::{centralizer as hom_centralizer, centralizer_of, huq_commutator, normalizer as sub_normalizer};
use grpact::laws::{run_laws, Law, LawConfig};
use grpact::report::VerifyReport;
use grpact::rgraph::{rg_classifier as build_rg_classifier, rg_verify_generic, ReflexiveGraph};
use grpact::splitext::{generic_split_extension_with, verify_generic};
use grpact::xmod::xmod_to_cat1;
use grpact::{catalog, Action, Error, FiniteGroup, Subgroup};

use crate::report::{Outcome, Status};
use crate::Global;

type CmdResult = Result<Outcome, Box<Outcome>>;

fn fail(command: &'static str, inputs: &Value, err: &Error) -> Box<Outcome> {
    Box::new(Outcome::invalid(command, inputs.clone(), err))
}

fn read(command: &'static str, inputs: &Value, path: &Path) -> Result<String, Box<Outcome>> {
    std::fs::read_to_string(path).map_err(|e| {
        let err = Error::Parse { line: 0, message: format!("{}: {e}", path.display()) };
        fail(command, inputs, &err)
    })
}

fn load_group(command: &'static str, inputs: &Value, path: &Path) -> Result<FiniteGroup, Box<Outcome>> {
    io::parse_group(&read(command, inputs, path)?).map_err(|e| fail(command, inputs, &e))
}

fn catalog_label(g: &Global) -> Value {
    match &g.catalog {
        Some(dir) => json!(dir.display().to_string()),
        None => json!("bundled"),
    }
}

fn load_catalog(command: &'static str, inputs: &Value, g: &Global) -> Result<Vec<FiniteGroup>, Box<Outcome>> {
    match &g.catalog {
        Some(dir) => io::read_catalog_dir(dir).map_err(|e| fail(command, inputs, &e)),
        None => Ok(catalog::groups()),
    }
}

fn bases(command: &'static str, inputs: &Value, g: &Global) -> Result<Vec<FiniteGroup>, Box<Outcome>> {
    let max = g.max_base_order as usize;
    Ok(load_catalog(command, inputs, g)?.into_iter().filter(|b| b.order() <= max).collect())
}

fn oracle_inputs(g: &Global, file: &Path, verify: bool) -> Value {
    json!({
        "file": file.display().to_string(),
        "verify": verify,
        "catalog": catalog_label(g),
        "max_base_order": g.max_base_order,
    })
}

fn action_rows(a: &Action) -> Value {
    json!(a.perms())
}

fn attach_verification(o: &mut Outcome, report: &VerifyReport) {
    o.cases_checked = report.cases_checked;
    o.failures = report.failures.iter().map(|f| serde_json::to_value(f).expect("serializable")).collect();
    let _ = writeln!(
        o.text,
        "oracle: {} cases, {} failures: {}",
        report.cases_checked,
        report.failures.len(),
        if report.passed() { "PASS" } else { "FAIL" }
    );
    if !report.passed() {
        o.status = Status::OracleFailed;
    }
}

pub fn validate(file: &Path) -> CmdResult {
    const CMD: &str = "validate";
    let inputs = json!({ "file": file.display().to_string() });
    let text = read(CMD, &inputs, file)?;
    let doc = io::parse_document(&text).map_err(|e| fail(CMD, &inputs, &e))?;
    let mut o = Outcome::new(CMD, inputs);
    let detail = match &doc {
        Document::Group(g) => json!({ "order": g.order(), "name": g.name(), "abelian": g.is_abelian() }),
        Document::Graph(r) => json!({
            "order": r.carrier().order(),
            "objects": r.parts().objects.order(),
            "groupoid": grpact::groupoid::is_groupoid(r),
        }),
        Document::CrossedModule(m) => json!({ "top_order": m.top().order(), "bottom_order": m.bottom().order() }),
    };
    o.result = json!({ "valid": true, "kind": doc.kind(), "detail": detail });
    o.text = format!("ok: valid {}\n", doc.kind());
    Ok(o)
}

pub fn generic(g: &Global, file: &Path, verify: bool) -> CmdResult {
    const CMD: &str = "generic";
    let inputs = oracle_inputs(g, file, verify);
    let x = load_group(CMD, &inputs, file)?;
    let (ext, _) = generic_split_extension_with(&x);
    let mut o = Outcome::new(CMD, inputs.clone());
    o.result = json!({
        "kernel_order": x.order(),
        "base_order": ext.base().order(),
        "total_order": ext.total().order(),
        "base": io::write_group_string(ext.base()),
        "total": io::write_group_string(ext.total()),
        "action": action_rows(&ext.action()),
    });
    let _ = writeln!(
        o.text,
        "Aut({0}) ⋉ {0}: kernel {1}, base {2}, total {3}",
        x.label(),
        x.order(),
        ext.base().order(),
        ext.total().order()
    );
    o.text.push_str(&io::write_group_string(ext.total()));
    if verify {
        let cat = bases(CMD, &inputs, g)?;
        attach_verification(&mut o, &verify_generic(&ext, &cat));
    }
    Ok(o)
}

fn load_graph(command: &'static str, inputs: &Value, path: &Path) -> Result<ReflexiveGraph, Box<Outcome>> {
    io::parse_graph(&read(command, inputs, path)?).map_err(|e| fail(command, inputs, &e))
}

pub fn rg_classifier(g: &Global, file: &Path, verify: bool) -> CmdResult {
    const CMD: &str = "rg-classifier";
    let inputs = oracle_inputs(g, file, verify);
    let x = load_graph(CMD, &inputs, file)?;
    let c = build_rg_classifier(&x);
    let e = &c.extension;
    let mut o = Outcome::new(CMD, inputs.clone());
    o.result = json!({
        "kernel_order": x.carrier().order(),
        "base_order": e.base_graph().carrier().order(),
        "total_order": e.total_graph().carrier().order(),
        "base": io::write_graph_string(e.base_graph()),
        "action": action_rows(c.action.action()),
    });
    let _ = writeln!(
        o.text,
        "reflexive-graph classifier: base {}, total {}",
        e.base_graph().carrier().order(),
        e.total_graph().carrier().order()
    );
    o.text.push_str(&io::write_graph_string(e.base_graph()));
    if verify {
        let cat = bases(CMD, &inputs, g)?;
        attach_verification(&mut o, &rg_verify_generic(e, &cat));
    }
    Ok(o)
}

pub fn actor(g: &Global, file: &Path, verify: bool) -> CmdResult {
    const CMD: &str = "actor";
    let inputs = oracle_inputs(g, file, verify);
    let invalid = |e: &Error| fail(CMD, &inputs, e);
    let doc = io::parse_document(&read(CMD, &inputs, file)?).map_err(|e| invalid(&e))?;
    let x = match doc {
        Document::Graph(r) => r,
        Document::CrossedModule(m) => xmod_to_cat1(&m).map_err(|e| invalid(&e))?.into_graph(),
        Document::Group(_) => {
            return Err(invalid(&Error::ShapeMismatch(
                "expected a cat¹-group or a crossed module, found a bare group".into(),
            )))
        }
    };
    let c = groupoid_classifier_of(&x).map_err(|e| invalid(&e))?;
    let e = c.extension();
    let mut o = Outcome::new(CMD, inputs.clone());
    o.result = json!({
        "kernel_order": x.carrier().order(),
        "base_order": e.base_graph().carrier().order(),
        "total_order": e.total_graph().carrier().order(),
        "base": io::write_graph_string(e.base_graph()),
        "action": action_rows(&e.extension().action()),
    });
    let _ = writeln!(
        o.text,
        "groupoid classifier: base {}, total {}",
        e.base_graph().carrier().order(),
        e.total_graph().carrier().order()
    );
    o.text.push_str(&io::write_graph_string(e.base_graph()));
    o.text.push_str("action:\n");
    for p in e.extension().action().perms() {
        let _ = writeln!(o.text, "{}", p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
    }
    if verify {
        let cat = bases(CMD, &inputs, g)?;
        attach_verification(&mut o, &grpd_verify_generic(&c, &cat));
    }
    Ok(o)
}

/// `all`, `trivial`, or comma-separated generator indices.
fn parse_subgroup(g: &FiniteGroup, spec: &str) -> Result<Subgroup, Error> {
    match spec.trim() {
        "all" => Ok(Subgroup::whole(g)),
        "trivial" | "" => Ok(Subgroup::trivial(g)),
        list => {
            let gens = list
                .split(',')
                .map(|t| {
                    let v = t
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse { line: 0, message: format!("not an index: {t:?}") })?;
                    if v >= g.order() {
                        return Err(Error::IndexOutOfRange { index: 0, value: v });
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Subgroup::generated(g, &gens))
        }
    }
}

fn subgroup_outcome(command: &'static str, inputs: Value, s: &Subgroup) -> Outcome {
    let mut o = Outcome::new(command, inputs);
    o.result = json!({ "order": s.order(), "elements": s.elements() });
    o.text = format!(
        "{command}: order {} {{{}}}\n",
        s.order(),
        s.elements().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    );
    o
}

pub fn commutator(group: &Path, left: &str, right: &str) -> CmdResult {
    const CMD: &str = "commutator";
    let inputs = json!({ "group": group.display().to_string(), "left": left, "right": right });
    let g = load_group(CMD, &inputs, group)?;
    let a = parse_subgroup(&g, left).map_err(|e| fail(CMD, &inputs, &e))?;
    let b = parse_subgroup(&g, right).map_err(|e| fail(CMD, &inputs, &e))?;
    Ok(subgroup_outcome(CMD, inputs, &huq_commutator(&a, &b)))
}

pub fn centralizer(group: &Path, sub: &str, hom: Option<&Path>, domain: Option<&Path>) -> CmdResult {
    const CMD: &str = "centralizer";
    let inputs = json!({
        "group": group.display().to_string(),
        "sub": if hom.is_some() { Value::Null } else { json!(sub) },
        "hom": hom.map(|p| p.display().to_string()),
        "domain": domain.map(|p| p.display().to_string()),
    });
    let g = load_group(CMD, &inputs, group)?;
    let z = match (hom, domain) {
        (Some(h), Some(d)) => {
            let dom = load_group(CMD, &inputs, d)?;
            let f = io::parse_hom(&read(CMD, &inputs, h)?, &dom, &g).map_err(|e| fail(CMD, &inputs, &e))?;
            hom_centralizer(&f)
        }
        _ => centralizer_of(&parse_subgroup(&g, sub).map_err(|e| fail(CMD, &inputs, &e))?),
    };
    Ok(subgroup_outcome(CMD, inputs, &z))
}

pub fn normalizer(group: &Path, sub: &str) -> CmdResult {
    const CMD: &str = "normalizer";
    let inputs = json!({ "group": group.display().to_string(), "sub": sub });
    let g = load_group(CMD, &inputs, group)?;
    let s = parse_subgroup(&g, sub).map_err(|e| fail(CMD, &inputs, &e))?;
    Ok(subgroup_outcome(CMD, inputs, &sub_normalizer(&s)))
}

pub fn laws(g: &Global, law: &str, split_max_order: usize, graph_max_order: usize) -> CmdResult {
    const CMD: &str = "laws run";
    let inputs = json!({
        "law": law,
        "catalog": catalog_label(g),
        "split_max_order": split_max_order,
        "graph_max_order": graph_max_order,
    });
    let selected: Vec<Law> = if law == "all" {
        Law::ALL.to_vec()
    } else {
        let parsed = law.parse::<Law>().map_err(|m| fail(CMD, &inputs, &Error::Parse { line: 0, message: m }))?;
        vec![parsed]
    };
    let cat = load_catalog(CMD, &inputs, g)?;
    let reports = run_laws(&cat, &selected, LawConfig { split_max_order, graph_max_order });
    let mut o = Outcome::new(CMD, inputs);
    o.cases_checked = reports.iter().map(|r| r.cases_checked).sum();
    for r in &reports {
        for f in &r.failures {
            o.failures.push(json!({ "law": r.law, "group": f.group, "subgroups": f.subgroups }));
        }
        let _ = writeln!(
            o.text,
            "{:<20} {:>8} cases {:>8} applicable {:>8} vacuous {:>4} failures  {}",
            r.law.name(),
            r.cases_checked,
            r.applicable,
            r.vacuous,
            r.failures.len(),
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    if reports.iter().any(|r| !r.pass) {
        o.status = Status::OracleFailed;
    }
    o.result = serde_json::to_value(&reports).expect("serializable");
    Ok(o)
}

pub fn export_catalog(dir: &Path) -> CmdResult {
    const CMD: &str = "catalog export";
    let inputs = json!({ "dir": dir.display().to_string() });
    let fail =
        |e: std::io::Error| fail(CMD, &inputs, &Error::Parse { line: 0, message: format!("{}: {e}", dir.display()) });
    std::fs::create_dir_all(dir).map_err(fail)?;
    let mut names = Vec::new();
    for (i, group) in catalog::groups().iter().enumerate() {
        let name = io::catalog_file_name(i, group);
        std::fs::write(dir.join(&name), io::write_group_string(group)).map_err(fail)?;
        names.push(name);
    }
    let mut o = Outcome::new(CMD, inputs);
    o.text = format!("wrote {} groups to {}\n", names.len(), dir.display());
    o.result = json!({ "files": names });
    Ok(o)
}
