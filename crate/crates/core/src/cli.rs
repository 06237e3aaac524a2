//! Commands run against a parsed [`Session`], producing a text report, a JSON
//! document and an exit code.
//!
//! Exit codes: 0 success or true verdict, 1 false verdict, 2 error,
//! 3 inconclusive. The JSON document has the fixed top-level keys `schema`,
//! `command`, `inputs`, `result`, `witnesses`, `points_tested`, `seed` and
//! `timings`; `timings` stays `null` unless requested so that output is
//! byte-stable for a fixed input and seed.

use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Value};

use crate::double_lines::{classify, ClassifyMode};
use crate::error::{Error, Result};
use crate::ideal::{hilbert_data, ideal_colon, ideal_intersect, saturate, Ideal};
use crate::linkage::{doubling_check, link, verify_linked_triple, LinkedTriple};
use crate::local::{artinian_invariants, local_ci_test, local_component, local_mu, translate_to_origin};
use crate::poly::Polynomial;
use crate::session::Session;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const SCHEMA_VERSION: u32 = 1;

pub const COMMANDS: &[(&str, &str)] = &[
    ("gb", "I"),
    ("intersect", "I J"),
    ("colon", "I J"),
    ("saturate", "I J"),
    ("hilbert", "I"),
    ("localize", "I P"),
    ("gorenstein", "I P"),
    ("mu", "I P"),
    ("lci", "I P"),
    ("link", "B I"),
    ("verify-triple", "B I J [P...]"),
    ("doubling", "B I"),
    ("classify", "L1 L2"),
];

#[derive(Clone, Debug)]
pub struct Invocation {
    pub command: String,
    pub args: Vec<String>,
    /// Only meaningful for `classify`; defaults to `both` there.
    pub mode: Option<ClassifyMode>,
    pub seed: u64,
    pub timings: bool,
}

impl Invocation {
    pub fn new(command: &str, args: &[&str]) -> Invocation {
        Invocation {
            command: command.to_string(),
            args: args.iter().map(|s| s.to_string()).collect(),
            mode: None,
            seed: 0,
            timings: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    pub fn json_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("JSON values always serialize") + "\n"
    }
}

fn gens(polys: &[Polynomial]) -> Value {
    Value::Array(polys.iter().map(|p| Value::String(p.to_string())).collect())
}

fn gen_list(polys: &[Polynomial]) -> String {
    polys.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn verdict_code(v: Option<bool>) -> i32 {
    match v {
        Some(true) => EXIT_TRUE,
        Some(false) => EXIT_FALSE,
        None => EXIT_INCONCLUSIVE,
    }
}

struct Report {
    exit_code: i32,
    text: String,
    result: Value,
    witnesses: Value,
    points_tested: Vec<String>,
}

impl Report {
    fn plain(text: String, result: Value) -> Report {
        Report { exit_code: EXIT_TRUE, text, result, witnesses: Value::Null, points_tested: Vec::new() }
    }
}

fn arity(inv: &Invocation, min: usize, max: Option<usize>) -> Result<()> {
    let n = inv.args.len();
    let usage = COMMANDS.iter().find(|(c, _)| *c == inv.command).map_or("", |(_, u)| u);
    if n < min || max.is_some_and(|m| n > m) {
        return Err(Error::Usage(format!("{} {usage}", inv.command)));
    }
    Ok(())
}

pub fn run_command(session: &Session, inv: &Invocation) -> Result<Outcome> {
    if inv.mode.is_some() && inv.command != "classify" {
        return Err(Error::Usage(format!("--mode only applies to classify, not {}", inv.command)));
    }
    let start = Instant::now();
    let report = dispatch(session, inv)?;
    let elapsed = start.elapsed();

    let mut inputs = serde_json::Map::new();
    inputs.insert("ring".into(), Value::String(session.ring.to_string()));
    for name in &inv.args {
        inputs.insert(name.clone(), Value::String(session.get(name)?.to_string()));
    }
    let timings = if inv.timings { json!({ "total_ms": elapsed.as_secs_f64() * 1e3 }) } else { Value::Null };
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "command": inv.command,
        "inputs": inputs,
        "result": report.result,
        "witnesses": report.witnesses,
        "points_tested": report.points_tested,
        "seed": inv.seed,
        "timings": timings,
    });
    let mut text = report.text;
    if inv.timings {
        let _ = writeln!(text, "time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
    }
    Ok(Outcome { exit_code: report.exit_code, text, json: doc })
}

fn ideal_result(label: &str, i: &Ideal) -> Report {
    let g = i.reduced_gens();
    Report::plain(format!("{label} = ({})\n", gen_list(&g)), json!({ "generators": gens(&g) }))
}

fn dispatch(s: &Session, inv: &Invocation) -> Result<Report> {
    let a = &inv.args;
    match inv.command.as_str() {
        "gb" => {
            arity(inv, 1, Some(1))?;
            let gb = s.ideal_like(&a[0])?.groebner_basis();
            let el = gb.elements().to_vec();
            let mut text = format!("reduced Groebner basis of {} ({}):\n", a[0], gb.order());
            for g in &el {
                let _ = writeln!(text, "  {g}");
            }
            Ok(Report::plain(text, json!({ "basis": gens(&el), "order": gb.order().to_string() })))
        }
        "intersect" | "colon" | "saturate" => {
            arity(inv, 2, Some(2))?;
            let (i, j) = (s.ideal_like(&a[0])?, s.ideal_like(&a[1])?);
            let (r, op) = match inv.command.as_str() {
                "intersect" => (ideal_intersect(&i, &j)?, "∩"),
                "colon" => (ideal_colon(&i, &j)?, ":"),
                _ => (saturate(&i, &j)?, ":∞"),
            };
            let label = match op {
                ":∞" => format!("{} : {}^∞", a[0], a[1]),
                _ => format!("{} {op} {}", a[0], a[1]),
            };
            Ok(ideal_result(&label, &r))
        }
        "hilbert" => {
            arity(inv, 1, Some(1))?;
            let h = hilbert_data(&s.ideal_like(&a[0])?)?;
            let text = format!(
                "Hilbert data of {}: krull dim {}, projective dim {}, degree {}, numerator {:?}\n",
                a[0], h.krull_dim, h.projective_dim, h.degree, h.numerator
            );
            Ok(Report::plain(text, serde_json::to_value(&h).unwrap()))
        }
        "localize" => {
            arity(inv, 2, Some(2))?;
            let (i, p) = (s.ideal_like(&a[0])?, s.point(&a[1])?);
            let chart = translate_to_origin(&i, p)?;
            let mu = local_mu(&chart)?;
            let vars = chart.ring().vars().join(",");
            let mut text = format!("{} at {}: chart k[{vars}], local ideal ({})\nmu = {mu}\n", a[0], p.describe(), gen_list(chart.gens()));
            let mut result = json!({ "chart_ideal": gens(chart.gens()), "chart_vars": vars, "mu": mu, "component": null });
            if chart.krull_dim() == 0 {
                let q = local_component(&chart)?;
                let inv_ = artinian_invariants(&q)?;
                let qg = q.reduced_gens();
                let _ = writeln!(
                    text,
                    "point-primary component ({}), length {}, socle dim {}",
                    gen_list(&qg),
                    inv_.length,
                    inv_.socle_dim
                );
                result["component"] = gens(&qg);
                result["length"] = json!(inv_.length);
                result["socle_dim"] = json!(inv_.socle_dim);
            }
            Ok(Report { points_tested: vec![p.describe()], ..Report::plain(text, result) })
        }
        "mu" | "lci" | "gorenstein" => {
            arity(inv, 2, Some(2))?;
            let (i, p) = (s.ideal_like(&a[0])?, s.point(&a[1])?);
            let points_tested = vec![p.describe()];
            if inv.command == "mu" {
                let mu = local_mu(&translate_to_origin(&i, p)?)?;
                let text = format!("mu({} at {}) = {mu}\n", a[0], p.describe());
                return Ok(Report { points_tested, ..Report::plain(text, json!({ "mu": mu })) });
            }
            let rep = local_ci_test(&i, p, inv.seed)?;
            let (verdict, label) = if inv.command == "lci" {
                (Some(rep.lci), "locally a complete intersection")
            } else {
                (rep.gorenstein, "Gorenstein")
            };
            let shown = verdict.map_or("inconclusive".to_string(), |v| v.to_string());
            let mut text = format!("{} at {}: {label}: {shown}\n", a[0], p.describe());
            let _ = writeln!(text, "  mu = {}, codim = {}", rep.mu, rep.codim);
            if let (Some(len), Some(soc)) = (rep.length, rep.socle_dim) {
                let _ = writeln!(text, "  artinian reduction: length {len}, socle dim {soc}");
            }
            if !rep.slices.is_empty() {
                let _ = writeln!(text, "  slices: {}", rep.slices.join(", "));
            }
            Ok(Report {
                exit_code: verdict_code(verdict),
                text,
                result: json!({ "verdict": verdict, "report": rep }),
                witnesses: json!({ "slices": rep.slices }),
                points_tested,
            })
        }
        "link" => {
            arity(inv, 2, Some(2))?;
            let r = link(&s.ideal_like(&a[0])?, &s.ideal_like(&a[1])?)?;
            Ok(ideal_result(&format!("link({}, {})", a[0], a[1]), &r))
        }
        "verify-triple" => {
            arity(inv, 3, None)?;
            let t = LinkedTriple { ib: s.ideal_like(&a[0])?, i1: s.ideal_like(&a[1])?, i2: s.ideal_like(&a[2])? };
            let pts = a[3..].iter().map(|n| s.point(n).cloned()).collect::<Result<Vec<_>>>()?;
            let rep = verify_linked_triple(&t, if pts.is_empty() { None } else { Some(&pts) }, inv.seed)?;
            let exit_code = if rep.pass {
                EXIT_TRUE
            } else if rep.colon_1 && rep.colon_2 && rep.degree_additive && rep.inconclusive {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_FALSE
            };
            let mut text = format!("linked triple ({}; {}, {}): {}\n", a[0], a[1], a[2], if rep.pass { "pass" } else { "fail" });
            let _ = writeln!(text, "  ({} : {}) = {}: {}", a[0], a[1], a[2], rep.colon_1);
            let _ = writeln!(text, "  ({} : {}) = {}: {}", a[0], a[2], a[1], rep.colon_2);
            let _ = writeln!(
                text,
                "  degrees {} = {} + {}: {}",
                rep.degrees[0], rep.degrees[1], rep.degrees[2], rep.degree_additive
            );
            for p in &rep.gorenstein_points {
                let g = p.gorenstein.map_or("inconclusive".into(), |v| v.to_string());
                let socle = p.socle_dim.map_or("?".into(), |d| d.to_string());
                let _ = writeln!(text, "  Gorenstein at {}: {g} (mu {}, socle dim {socle})", p.point, p.mu);
            }
            let _ = writeln!(text, "  ({})", rep.note);
            let points_tested = rep.gorenstein_points.iter().map(|p| p.point.clone()).collect();
            let witnesses = json!({ "local_reports": rep.gorenstein_points });
            Ok(Report { exit_code, text, result: serde_json::to_value(&rep).unwrap(), witnesses, points_tested })
        }
        "doubling" => {
            arity(inv, 2, Some(2))?;
            let v = doubling_check(&s.ideal_like(&a[0])?, &s.ideal_like(&a[1])?)?;
            let text = format!("{} is a doubling of {}: {v}\n", a[0], a[1]);
            Ok(Report { exit_code: verdict_code(Some(v)), ..Report::plain(text, json!({ "verdict": v })) })
        }
        "classify" => {
            arity(inv, 2, Some(2))?;
            let mode = inv.mode.unwrap_or(ClassifyMode::Both);
            let (l1, l2) = (s.double_line(&a[0])?, s.double_line(&a[1])?);
            let c = classify(l1, l2, mode, inv.seed)?;
            let v = &c.verdict;
            let exit_code = if c.inconclusive && mode == ClassifyMode::Oracle {
                EXIT_INCONCLUSIVE
            } else {
                verdict_code(Some(v.lal))
            };
            let case = serde_json::to_value(v.case_tag).unwrap();
            let mut text = format!("{} vs {}: lal = {} (case {})\n", a[0], a[1], v.lal, case.as_str().unwrap());
            if let Some(w) = &v.witness {
                let _ = writeln!(text, "  witness: {}", w.describe());
            }
            if let Some(y) = &v.extension {
                let _ = writeln!(text, "  extension: ({})", gen_list(&y.reduced_gens()));
            }
            let mut points_tested = Vec::new();
            let mut local_reports = Value::Null;
            if let Some(o) = &c.oracle {
                let _ = writeln!(text, "  oracle: {} ({})", o.verdict, o.note);
                for r in &o.reports {
                    let _ = writeln!(text, "    {}: mu {}, codim {}, lci {}", r.point, r.mu, r.codim, r.lci);
                    points_tested.push(r.point.clone());
                }
                local_reports = serde_json::to_value(&o.reports).unwrap();
            }
            let result = json!({
                "lal": v.lal,
                "case": case,
                "mode": mode,
                "conditions_lal": c.conditions.as_ref().map(|c| c.lal),
                "oracle_verdict": c.oracle.as_ref().map(|o| o.verdict),
                "inconclusive": c.inconclusive,
            });
            let witnesses = json!({
                "condition": v.witness.as_ref().map(|w| w.describe()),
                "extension": v.extension.as_ref().map(|y| gens(&y.reduced_gens())),
                "local_reports": local_reports,
            });
            Ok(Report { exit_code, text, result, witnesses, points_tested })
        }
        other => Err(Error::Usage(format!(
            "unknown command `{other}`; expected one of {}",
            COMMANDS.iter().map(|(c, _)| *c).collect::<Vec<_>>().join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::session::parse_session;

    const FIXTURE: &str = "\
ring Q[x,y,z,u]
ideal Y = x^2, y^2
ideal I1 = z*x+u*y, x^2, x*y, y^2
ideal I2 = z*x-u*y, x^2, x*y, y^2
dline L1 support x,y pair (z, u)
dline L2 support x,z pair (y, u)
dline L3 support x,z pair (u, y)
point P = (0:0:0:1)
";

    fn run(cmd: &str, args: &[&str]) -> Outcome {
        run_command(&parse_session(FIXTURE).unwrap(), &Invocation::new(cmd, args)).unwrap()
    }

    #[test]
    fn colon_prints_the_linked_ideal() {
        let out = run("colon", &["Y", "I1"]);
        assert_eq!(out.exit_code, EXIT_TRUE);
        assert_eq!(out.json["result"]["generators"], json!(["x*z - y*u", "y^2", "x*y", "x^2"]));
        assert_eq!(out.json["schema"], json!(1));
        assert_eq!(out.json["timings"], Value::Null);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run("verify-triple", &["Y", "I1", "I2"]).exit_code, EXIT_TRUE);
        assert_eq!(run("doubling", &["Y", "I1"]).exit_code, EXIT_FALSE);
        assert_eq!(run("classify", &["L1", "L2"]).exit_code, EXIT_TRUE);
        assert_eq!(run("classify", &["L1", "L3"]).exit_code, EXIT_FALSE);
        assert_eq!(run("lci", &["Y", "P"]).exit_code, EXIT_TRUE);
        assert_eq!(run("mu", &["I1", "P"]).json["result"]["mu"], json!(2));
        let s = parse_session(FIXTURE).unwrap();
        assert!(matches!(run_command(&s, &Invocation::new("colon", &["Y", "Nope"])), Err(Error::UnknownName(_))));
        assert!(matches!(run_command(&s, &Invocation::new("frobnicate", &[])), Err(Error::Usage(_))));
        let mut inv = Invocation::new("gb", &["Y"]);
        inv.mode = Some(ClassifyMode::Oracle);
        assert!(matches!(run_command(&s, &inv), Err(Error::Usage(_))));
    }
}
