use std::collections::BTreeMap;

use rayon::prelude::*;

use qcanon::bases::{canonical_data, stability_check, verify_shape_expansions, BasisMatrix};
use qcanon::repmod::{closed_form_mismatch, relations_check};
use qcanon::report::{Check, Report};
use qcanon::sl3::{alternating_134a, cross_validate, lusztig_131c};
use qcanon::tableaux::{enumerate_all, enumerate_standard, lemma31_checks, LinearExtension, RootLatticeWeight, Shape};
use qcanon::Result;

use crate::{Cli, Format, Output, VerifyArgs};

/// Bounds matching the acceptance sizes for each rank.
struct Bounds {
    max_mu: usize,
    max_boxes: usize,
    max_cols: usize,
}

impl Bounds {
    fn resolve(n: usize, a: &VerifyArgs) -> Bounds {
        let (mu, boxes, cols) = match n {
            0..=3 => (6, 7, 6),
            4 => (4, 5, 6),
            _ => (3, 3, 3),
        };
        Bounds {
            max_mu: a.max_mu.unwrap_or(mu),
            max_boxes: a.max_boxes.unwrap_or(boxes),
            max_cols: a.max_cols.unwrap_or(cols),
        }
    }
}

fn merged(title: &str, reports: Vec<Report>) -> Report {
    let mut out = Report::new(title);
    for r in reports {
        out.extend(r);
    }
    out.collapsed()
}

fn expansions(n: usize, b: &Bounds) -> Result<Report> {
    let shapes = Shape::all_up_to_boxes(n, b.max_boxes)?;
    let reports = shapes
        .par_iter()
        .map(|l| verify_shape_expansions(l, LinearExtension::Lex))
        .collect::<Result<Vec<_>>>()?;
    Ok(merged("expansions of standard monomials", reports))
}

fn lemma(n: usize, b: &Bounds) -> Result<Report> {
    let mut sigmas = Vec::new();
    for lambda in Shape::all_up_to_boxes(n, b.max_boxes)? {
        sigmas.extend(enumerate_standard(&lambda, None).into_iter().filter(|s| !s.is_smallest()));
    }
    let reports = sigmas
        .par_iter()
        .map(|s| {
            let r = lemma31_checks(s)?;
            let mut rep = Report::new("");
            for (name, ok) in [("(A)", r.a_holds), ("(B)", r.b_holds), ("(C)", r.c_holds)] {
                let witness = (!ok).then(|| format!("{s}: {}", r.witness.clone().unwrap_or_default()));
                rep.push(Check::from_witness(format!("marked step {name}"), 1, witness));
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merged("marked-step lemma", reports))
}

fn stability(n: usize, b: &Bounds) -> Result<Report> {
    let weights = RootLatticeWeight::all_up_to(n, b.max_mu);
    let ones = vec![1; n - 1];
    let reports = weights
        .par_iter()
        .map(|mu| {
            let l = mu.lambda_for();
            stability_check(mu, &l, &l.enlarged(&ones))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merged("shape independence of the dual basis", reports))
}

fn by_label(m: &BasisMatrix) -> BTreeMap<(String, String), String> {
    let mut out = BTreeMap::new();
    for (i, r) in m.rows.iter().enumerate() {
        for (j, c) in m.cols.iter().enumerate() {
            out.insert((r.to_string(), c.to_string()), m.get(i, j).to_string());
        }
    }
    out
}

fn canonical(n: usize, b: &Bounds) -> Result<Report> {
    let weights = RootLatticeWeight::all_up_to(n, b.max_mu);
    let reports = weights
        .par_iter()
        .map(|mu| {
            let lex = canonical_data(mu, LinearExtension::Lex)?;
            let colex = canonical_data(mu, LinearExtension::Colex)?;
            let mut rep = lex.report.clone();
            rep.extend(colex.report.clone());
            let same = by_label(&lex.d) == by_label(&colex.d);
            rep.push(Check::from_witness(
                "canonical basis independent of the linear extension",
                1,
                (!same).then(|| format!("mu={mu}")),
            ));
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merged("canonical basis and its expansion in the dual basis", reports))
}

fn operators(n: usize, b: &Bounds) -> Result<Report> {
    let shapes = Shape::all_up_to_columns(n, b.max_cols)?;
    let reports = shapes
        .par_iter()
        .map(|lambda| {
            let mut rep = Report::new("");
            let basis = enumerate_all(lambda, None);
            let mut witness = None;
            for y in &basis {
                if let Some(w) = closed_form_mismatch(y)? {
                    witness = Some(w);
                    break;
                }
            }
            rep.push(Check::from_witness("subset formula for divided powers", basis.len(), witness));
            for o in relations_check(lambda) {
                rep.push(Check::from_witness(o.relation, o.vectors_checked, o.witness));
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merged("operator consistency", reports))
}

fn identities() -> Report {
    let mut rep = Report::new("quantum binomial identities");
    let mut bad = None;
    let mut cases = 0;
    for k in 0..=6u32 {
        for s in 0..=k {
            for b in -6..=6 {
                cases += 1;
                if !lusztig_131c(b, k, s) && bad.is_none() {
                    bad = Some(format!("b={b} k={k} s={s}"));
                }
            }
        }
    }
    rep.push(Check::from_witness("sum over increasing tuples", cases, bad));
    let bad = (0..=6).find(|&m| !alternating_134a(m)).map(|m| format!("m={m}"));
    rep.push(Check::from_witness("alternating sum", 7, bad));
    rep
}

fn sl3(max_bk: u32) -> Result<Report> {
    let pairs: Vec<(u32, u32)> = (0..=max_bk).flat_map(|b| (0..=max_bk).map(move |k| (b, k))).collect();
    let reports = pairs
        .par_iter()
        .map(|&(b, k)| cross_validate(b, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(merged("sl3 closed forms", reports))
}

pub fn run(cli: &Cli, a: &VerifyArgs) -> Result<Output> {
    let n = cli.n;
    let b = Bounds::resolve(n, a);
    type Suite<'a> = Box<dyn Fn() -> Result<Report> + 'a>;
    let mut suites: Vec<Suite<'_>> = vec![
        Box::new(|| expansions(n, &b)),
        Box::new(|| lemma(n, &b)),
        Box::new(|| stability(n, &b)),
        Box::new(|| canonical(n, &b)),
        Box::new(|| operators(n, &b)),
        Box::new(|| Ok(identities())),
    ];
    if a.sl3 {
        suites.push(Box::new(|| sl3(a.max_bk)));
    }
    let mut reports = Vec::new();
    for suite in suites {
        let r = suite()?;
        let failed = !r.passed();
        reports.push(r);
        if failed && cli.fail_fast {
            break;
        }
    }
    let passed = reports.iter().all(Report::passed);
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "n": n,
                "passed": passed,
                "suites": reports,
            }))
            .expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("suite,check,passed,cases,witness\n");
            for r in &reports {
                for c in &r.checks {
                    s.push_str(&format!(
                        "\"{}\",\"{}\",{},{},\"{}\"\n",
                        r.title,
                        c.name,
                        c.passed,
                        c.cases,
                        c.witness.clone().unwrap_or_default().replace('"', "'")
                    ));
                }
            }
            s
        }
        Format::Pretty => reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
    };
    Ok(Output { text, passed })
}
