use qcanon::bases::{
    canonical_data_in, domain_summary, dual_smt_in, kashiwara_tableau_matrix, smt_matrix, verify_expansion, BasisMatrix,
    WeightSpace,
};
use qcanon::repmod::{apply_monomial, highest_weight_vector, Flavor, ModuleVector};
use qcanon::report::Report;
use qcanon::sl3::{a_inverse_closed, a_matrix};
use qcanon::tableaux::{RootLatticeWeight, Shape, StandardMonomial, Tableau};
use qcanon::{Error, Result};

use crate::{BasisArgs, Cli, ExpandArgs, FlavorArg, Format, Output, Sl3Args, Sl3Which, Which};

fn to_json<T: serde::Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("serializable");
    s.push('\n');
    s
}

pub fn expand(cli: &Cli, a: &ExpandArgs) -> Result<Output> {
    let (monomial, leading) = match (&a.tableau, &a.monomial) {
        (Some(t), _) => {
            let sigma = Tableau::parse(cli.n, t)?;
            (sigma.monomial()?, Some(sigma))
        }
        (None, Some(m)) => (StandardMonomial::parse(cli.n, m)?, None),
        (None, None) => return Err(Error::InvalidArgument("pass --tableau or --monomial".into())),
    };
    let lambda = match &a.lambda {
        Some(l) => Shape::parse(cli.n, l)?,
        None => leading.as_ref().map_or_else(|| monomial.shape(), Tableau::shape),
    };
    let flavor = match a.flavor {
        FlavorArg::Divided => Flavor::Divided,
        FlavorArg::Kashiwara => Flavor::Kashiwara,
    };
    let w = apply_monomial(&monomial, flavor, &highest_weight_vector(&lambda))?;
    let leading = leading.and_then(|s| s.embed(&lambda).ok());
    let text = match cli.format {
        Format::Json => to_json(&w.to_json()),
        Format::Csv => {
            let mut s = String::from("tableau,coeff\n");
            for (t, c) in w.terms() {
                s.push_str(&format!("\"{t}\",\"{c}\"\n"));
            }
            s
        }
        Format::Pretty => pretty_expansion(&w, leading.as_ref(), flavor),
    };
    Ok(Output { text, passed: true })
}

fn pretty_expansion(w: &ModuleVector, leading: Option<&Tableau>, flavor: Flavor) -> String {
    let mut terms: Vec<_> = w.terms().collect();
    if let Some(l) = leading {
        terms.sort_by_key(|(t, _)| *t != l);
    }
    let mut out = String::new();
    for (t, c) in terms {
        let mem = c.membership();
        let flag = if Some(t) == leading {
            "leading".to_string()
        } else {
            match flavor {
                Flavor::Divided => format!("in_nqq={}", mem.in_nqq),
                Flavor::Kashiwara => format!("in_m={}", mem.in_m),
            }
        };
        out.push_str(&format!("{c}\tv_{t}\t{flag}\n"));
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

fn emit_matrix(cli: &Cli, m: &BasisMatrix, report: &Report) -> Output {
    let domains = domain_summary(m);
    let text = match cli.format {
        Format::Json => to_json(&serde_json::json!({
            "matrix": m.to_json(),
            "domains": domains,
            "report": report,
        })),
        Format::Csv => {
            eprint!("{report}");
            m.to_csv()
        }
        Format::Pretty => format!("{}{domains}\n\n{report}", m.to_pretty()),
    };
    Output {
        text,
        passed: report.passed(),
    }
}

pub fn basis(cli: &Cli, a: &BasisArgs) -> Result<Output> {
    let mu = RootLatticeWeight::parse(cli.n, &a.mu)?;
    if mu.is_zero() {
        return Err(Error::InvalidArgument("the weight must be nonzero".into()));
    }
    let lambda = a.lambda.as_deref().map(|l| Shape::parse(cli.n, l)).transpose()?;
    let order = a.order.into();
    let (m, report) = match a.which {
        Which::Smt | Which::Kashiwara => {
            let space = match &lambda {
                Some(l) => WeightSpace::realize(l, &mu, order)?,
                None => WeightSpace::sufficient(&mu, None, order)?,
            };
            let (m, flavor) = if a.which == Which::Smt {
                (smt_matrix(&space)?, Flavor::Divided)
            } else {
                (kashiwara_tableau_matrix(&space)?, Flavor::Kashiwara)
            };
            let report = verify_expansion(&space, &m, flavor);
            (m, report)
        }
        Which::DualSmt => {
            let space = WeightSpace::sufficient(&mu, lambda.as_ref(), order)?;
            let d = dual_smt_in(&space)?;
            (d.coords, d.report)
        }
        Which::Bprime | Which::Canonical | Which::Theorem52 => {
            let data = canonical_data_in(WeightSpace::sufficient(&mu, lambda.as_ref(), order)?)?;
            let m = match a.which {
                Which::Bprime => data.b_prime,
                Which::Canonical => data.d,
                _ => data.t,
            };
            (m, data.report)
        }
    };
    Ok(emit_matrix(cli, &m, &report))
}

pub fn sl3_table(cli: &Cli, a: &Sl3Args) -> Result<Output> {
    let m = match a.which {
        Sl3Which::A => a_matrix(a.b, a.k),
        Sl3Which::AInverse => a_inverse_closed(a.b, a.k),
    };
    let text = match cli.format {
        Format::Json => to_json(&m.to_json()),
        Format::Csv => m.to_csv(),
        Format::Pretty => m.to_pretty(),
    };
    Ok(Output { text, passed: true })
}
