//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Every comparison is exact over `Q(q)`; the only numeric tolerance is the
//! wall-clock budget of the worked example.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use qcanon::bases::{
    canonical_data, crystal_congruence_check, dual_smt, smt_matrix, stability_check,
    verify_shape_expansions, BasisMatrix, Label, WeightSpace,
};
use qcanon::qlaurent::RationalQ;
use qcanon::repmod::{apply_tableau, closed_form_mismatch, highest_weight_vector, relations_check, Flavor};
use qcanon::report::Report;
use qcanon::sl3::{a_inverse_closed, a_matrix, alternating_134a, cross_validate, lusztig_131c};
use qcanon::tableaux::{
    compare, enumerate_all, enumerate_standard, enumerate_standard_monomials, lemma31_checks,
    LinearExtension, PartialOrdering, RootLatticeWeight, Shape, StandardMonomial, Tableau,
};

/// Exact arithmetic throughout: not a single violation is tolerated.
const MAX_VIOLATIONS: usize = 0;
const WORKED_EXAMPLE_BUDGET: Duration = Duration::from_secs(1);

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(cases: usize, failures: Vec<String>) -> Self {
        let passed = failures.len() == MAX_VIOLATIONS;
        let detail = match failures.first() {
            None => format!("{cases} cases, 0 violations"),
            Some(w) => format!("{cases} cases, {} violations; first: {w}", failures.len()),
        };
        Outcome { passed, detail }
    }
}

fn report_failures(r: &Report) -> Vec<String> {
    r.failures()
        .map(|c| format!("{} / {}: {}", r.title, c.name, c.witness.clone().unwrap_or_default()))
        .collect()
}

fn weight(c: &[usize]) -> RootLatticeWeight {
    RootLatticeWeight::new(c.to_vec())
}

fn entries_by_label(m: &BasisMatrix) -> BTreeMap<(String, String), String> {
    let mut out = BTreeMap::new();
    for (i, r) in m.rows.iter().enumerate() {
        for (j, c) in m.cols.iter().enumerate() {
            out.insert((r.to_string(), c.to_string()), m.get(i, j).to_string());
        }
    }
    out
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let sigma = Tableau::parse(4, "[[4],[4],[3],[3,4],[3,4],[2,4],[2,3],[2,3,4],[1,3,4]]").unwrap();
    let expected = StandardMonomial::parse(4, "[[3],[6,3],[7,5,2]]").unwrap();
    let m = sigma.monomial().unwrap();
    if m != expected {
        failures.push(format!("monomial of the tableau is {m}"));
    }
    if m.to_word_string() != "a1^3 (a2^6 a1^3) (a3^7 a2^5 a1^2)" {
        failures.push(format!("word is {}", m.to_word_string()));
    }
    let t = expected.tableau();
    let rows: Vec<String> = t.to_rows_string().lines().map(|l| l.split_whitespace().collect::<Vec<_>>().join(" ")).collect();
    let expected_rows = [
        "4 4 3 3 3 2 2 2 1 1 1 1 1 1 1 1",
        "4 4 4 3 3 3 2 2",
        "4 4",
    ];
    if t.shape() != Shape::new(4, vec![8, 6, 2]).unwrap() || rows != expected_rows {
        failures.push(format!("tableau of the monomial has rows {rows:?}"));
    }
    let elapsed = start.elapsed();
    if elapsed >= WORKED_EXAMPLE_BUDGET {
        failures.push(format!("took {elapsed:?}, budget {WORKED_EXAMPLE_BUDGET:?}"));
    }
    Outcome::from_failures(3, failures)
}

fn prop41_sweep() -> Outcome {
    let mut shapes = Shape::all_up_to_boxes(3, 7).unwrap();
    shapes.extend(Shape::all_up_to_boxes(4, 5).unwrap());
    let reports: Vec<Report> = shapes
        .par_iter()
        .map(|l| verify_shape_expansions(l, LinearExtension::Lex).unwrap())
        .collect();
    let cases: usize = shapes.iter().map(|l| enumerate_standard(l, None).len()).sum();
    let mut failures: Vec<String> = reports.iter().flat_map(report_failures).collect();
    // the worked tableau, in its own shape
    let sigma = Tableau::parse(4, "[[4],[4],[3],[3,4],[3,4],[2,4],[2,3],[2,3,4],[1,3,4]]").unwrap();
    let v = highest_weight_vector(&sigma.shape());
    for flavor in [Flavor::Divided, Flavor::Kashiwara] {
        let w = apply_tableau(&sigma, flavor, &v).unwrap();
        for (x, c) in w.terms() {
            let ok = if *x == sigma {
                c.is_one()
            } else {
                let mem = c.membership();
                let domain = if flavor == Flavor::Divided { mem.in_nqq } else { mem.in_m };
                domain && compare(x, &sigma).unwrap() == PartialOrdering::Less
            };
            if !ok {
                failures.push(format!("{flavor:?} expansion of the worked tableau: v_{x} has coefficient {c}"));
            }
        }
        if w.coeff(&sigma).is_zero() {
            failures.push(format!("{flavor:?} expansion of the worked tableau misses v_sigma"));
        }
    }
    Outcome::from_failures(cases + 2, failures)
}

fn lemma_sweep() -> Outcome {
    let mut sigmas = Vec::new();
    for n in 2..=3 {
        for lambda in Shape::all_up_to_boxes(n, 7).unwrap() {
            sigmas.extend(enumerate_standard(&lambda, None).into_iter().filter(|s| !s.is_smallest()));
        }
    }
    let failures: Vec<String> = sigmas
        .par_iter()
        .filter_map(|s| {
            let r = lemma31_checks(s).unwrap();
            (!r.passed()).then(|| format!("{s}: {}", r.witness.unwrap_or_default()))
        })
        .collect();
    Outcome::from_failures(sigmas.len(), failures)
}

fn stability_sweep() -> Outcome {
    let weights = RootLatticeWeight::all_up_to(3, 6);
    let failures: Vec<String> = weights
        .par_iter()
        .flat_map_iter(|mu| {
            let l = mu.lambda_for();
            let l2 = l.enlarged(&[1, 1]);
            report_failures(&stability_check(mu, &l, &l2).unwrap())
        })
        .collect();
    Outcome::from_failures(weights.len(), failures)
}

fn sl3_closed_forms() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for b in 0..=4 {
        for k in 0..=4 {
            cases += 1;
            failures.extend(report_failures(&cross_validate(b, k).unwrap()));
        }
    }
    for b in 0..=6 {
        for k in 0..=6 {
            cases += 1;
            let prod = a_matrix(b, k).mul(&a_inverse_closed(b, k), "A * A_inverse").unwrap();
            if !prod.is_identity() {
                failures.push(format!("A * A_inverse is not the identity at b={b} k={k}"));
            }
        }
    }
    Outcome::from_failures(cases, failures)
}

fn theorem52_sweep() -> Outcome {
    let weights = RootLatticeWeight::all_up_to(3, 6);
    let mut failures: Vec<String> = weights
        .par_iter()
        .flat_map_iter(|mu| {
            let lex = canonical_data(mu, LinearExtension::Lex).unwrap();
            let colex = canonical_data(mu, LinearExtension::Colex).unwrap();
            let mut out = report_failures(&lex.report);
            out.extend(report_failures(&colex.report));
            if entries_by_label(&lex.d) != entries_by_label(&colex.d) {
                out.push(format!("mu={mu}: canonical basis depends on the linear extension"));
            }
            out
        })
        .collect();
    // anchor at alpha_1 + alpha_2
    let data = canonical_data(&weight(&[1, 1]), LinearExtension::Lex).unwrap();
    let s110 = Label::Monomial(StandardMonomial::parse(3, "[[1],[1,0]]").unwrap());
    let s011 = Label::Monomial(StandardMonomial::parse(3, "[[0],[1,1]]").unwrap());
    let expected = [
        ((&s110, &s110), RationalQ::one()),
        ((&s110, &s011), RationalQ::q_pow(1)),
        ((&s011, &s110), RationalQ::zero()),
        ((&s011, &s011), RationalQ::one()),
    ];
    for ((r, c), want) in expected {
        let i = data.t.rows.iter().position(|x| x == r).unwrap();
        let j = data.t.cols.iter().position(|x| x == c).unwrap();
        if *data.t.get(i, j) != want {
            failures.push(format!("anchor T at ({r}, {c}) is {}", data.t.get(i, j)));
        }
    }
    Outcome::from_failures(weights.len() + 1, failures)
}

fn operator_consistency() -> Outcome {
    let shapes: Vec<Shape> = (2..=4).flat_map(|n| Shape::all_up_to_columns(n, 6).unwrap()).collect();
    let per_shape: Vec<(usize, Vec<String>)> = shapes
        .par_iter()
        .map(|lambda| {
            let basis = enumerate_all(lambda, None);
            let mut failures: Vec<String> = basis
                .iter()
                .filter_map(|y| closed_form_mismatch(y).unwrap())
                .collect();
            for o in relations_check(lambda) {
                if !o.passed {
                    failures.push(format!("{lambda}: {} {}", o.relation, o.witness.unwrap_or_default()));
                }
            }
            (basis.len(), failures)
        })
        .collect();
    let mut cases = 0;
    let mut failures = Vec::new();
    for (c, f) in per_shape {
        cases += c;
        failures.extend(f);
    }
    for k in 0..=6u32 {
        for s in 0..=k {
            for b in -6..=6 {
                cases += 1;
                if !lusztig_131c(b, k, s) {
                    failures.push(format!("product identity fails at b={b} k={k} s={s}"));
                }
            }
        }
    }
    for m in 0..=6 {
        cases += 1;
        if !alternating_134a(m) {
            failures.push(format!("alternating identity fails at m={m}"));
        }
    }
    Outcome::from_failures(cases, failures)
}

fn rank_one() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for a in 1..=6 {
        cases += 1;
        let mu = weight(&[a]);
        let data = canonical_data(&mu, LinearExtension::Lex).unwrap();
        failures.extend(report_failures(&data.report));
        for m in [&data.dual.n_s, &data.dual.coords, &data.b_prime, &data.d, &data.t] {
            if !m.is_identity() {
                failures.push(format!("a={a}: {} is not the identity", m.name));
            }
        }
        let dual = dual_smt(&mu, Some(&Shape::new(2, vec![a + 2]).unwrap())).unwrap();
        if !dual.coords.is_identity() {
            failures.push(format!("a={a}: dual basis in a larger shape is not F^({a})"));
        }
    }
    for lambda in Shape::all_up_to_boxes(2, 6).unwrap() {
        cases += 1;
        failures.extend(report_failures(&verify_shape_expansions(&lambda, LinearExtension::Lex).unwrap()));
        for sigma in enumerate_standard(&lambda, None) {
            let mu = sigma.weight();
            if enumerate_standard(&lambda, Some(&mu)).len() != 1 {
                failures.push(format!("{lambda}: weight {mu} has more than one standard tableau"));
            }
            let space = WeightSpace::realize(&lambda, &mu, LinearExtension::Lex).unwrap();
            let n_s = smt_matrix(&space).unwrap().select_rows(&space.standard_rows, "N_s");
            if !n_s.is_identity() {
                failures.push(format!("{lambda}: N_s at {mu} is not the identity"));
            }
        }
    }
    Outcome::from_failures(cases, failures)
}

/// Number of ways to write `mu` as a sum of positive roots `alpha_i + ... + alpha_j`.
fn kostant(mu: &[i64], roots: &[(usize, usize)]) -> u64 {
    if mu.iter().all(|&b| b == 0) {
        return 1;
    }
    let Some((&(i, j), rest)) = roots.split_first() else {
        return 0;
    };
    let mut total = 0;
    let mut cur = mu.to_vec();
    loop {
        total += kostant(&cur, rest);
        for x in &mut cur[i..=j] {
            *x -= 1;
        }
        if cur[i..=j].iter().any(|&x| x < 0) {
            return total;
        }
    }
}

fn dimension_oracle() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for (n, h) in [(2, 6), (3, 6), (4, 5)] {
        let ell = n - 1;
        let roots: Vec<(usize, usize)> = (0..ell).flat_map(|i| (i..ell).map(move |j| (i, j))).collect();
        for mu in RootLatticeWeight::all_up_to(n, h) {
            cases += 1;
            let coeffs: Vec<i64> = mu.coeffs().iter().map(|&b| b as i64).collect();
            let p = kostant(&coeffs, &roots);
            let monos = enumerate_standard_monomials(n, &mu).unwrap().len() as u64;
            let realized = enumerate_standard(&mu.lambda_for(), Some(&mu)).len() as u64;
            if p != monos || p != realized {
                failures.push(format!("mu={mu}: partition count {p}, monomials {monos}, tableaux {realized}"));
            }
        }
    }
    Outcome::from_failures(cases, failures)
}

fn crystal_congruence() -> Outcome {
    let mut weights = Vec::new();
    for b1 in 0..=3 {
        for b2 in 0..=3 {
            if b1 + b2 > 0 {
                weights.push(weight(&[b1, b2]));
            }
        }
    }
    let failures: Vec<String> = weights
        .par_iter()
        .flat_map_iter(|mu| {
            let big = mu.lambda_for().enlarged(&[1, 1]);
            let smalls: Vec<Shape> = Shape::all_up_to_columns(3, big.num_columns())
                .unwrap()
                .into_iter()
                .filter(|s| s.fits_in(&big))
                .collect();
            report_failures(&crystal_congruence_check(mu, Some(&big), &smalls).unwrap())
        })
        .collect();
    Outcome::from_failures(weights.len(), failures)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("C1 worked tableau and monomial", worked_example),
        ("C2 triangular expansions of monomials", prop41_sweep),
        ("C3 marked-step lemma", lemma_sweep),
        ("C4 shape independence of the dual basis", stability_sweep),
        ("C5 sl3 closed forms", sl3_closed_forms),
        ("C6 canonical basis in the dual basis", theorem52_sweep),
        ("C7 operator consistency and identities", operator_consistency),
        ("C8 rank one degeneracy", rank_one),
        ("S1 dimension oracle", dimension_oracle),
        ("S2 crystal congruences", crystal_congruence),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} ({secs:.2} s)", o.detail);
        all &= o.passed;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
