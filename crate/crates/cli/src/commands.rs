//! One function per subcommand. Each returns its inputs, results, optional
//! oracle verdicts and a plain-text rendering.

use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use transfer_core::markov::{
    brute_force_order_preserving, count_chains, count_chains_bounded, count_surjective_order_preserving,
    ehrhart_order_polytope, ehrhart_polynomial,
};
use transfer_core::oracle::count_colorings_path;
use transfer_core::orbits::{bell_number, color_orbits, orbit_count_f};
use transfer_core::{build_l, build_transition_matrix, BasePoset, CompactTransferMatrix, TransitionMatrix};

use crate::error::{CliError, CliResult};
use crate::spec::{self, Family};

pub struct Output {
    pub inputs: Value,
    pub results: Value,
    pub oracle: Option<Value>,
    pub text: Vec<String>,
}

/// Collected oracle checks; any failing one turns into exit status 4.
#[derive(Default)]
struct Checks(Vec<Value>);

impl Checks {
    fn push(&mut self, what: String, expected: &BigInt, actual: &BigInt) {
        self.0.push(json!({
            "check": what,
            "formula": actual.to_string(),
            "oracle": expected.to_string(),
            "match": expected == actual,
        }));
    }

    fn finish(self, text: &mut Vec<String>) -> CliResult<Value> {
        let failed: Vec<String> = self
            .0
            .iter()
            .filter(|c| c["match"] == false)
            .map(|c| {
                let field = |key: &str| c[key].as_str().unwrap_or_default().to_string();
                format!("{} (formula {}, oracle {})", field("check"), field("formula"), field("oracle"))
            })
            .collect();
        text.push(format!("oracle: {} checks, {} mismatches", self.0.len(), failed.len()));
        if failed.is_empty() {
            Ok(json!({ "checks": self.0, "all_match": true }))
        } else {
            Err(CliError::OracleMismatch(failed.join("; ")))
        }
    }
}

fn compact(graph: &str, aut: Option<&Path>) -> CliResult<(spec::ParsedGraph, CompactTransferMatrix)> {
    let parsed = spec::parse_graph(graph)?;
    let group = spec::group(&parsed.graph, aut)?;
    let ctm = build_l(&parsed.graph, &group)?;
    Ok((parsed, ctm))
}

fn matrix_json(ctm: &CompactTransferMatrix) -> Value {
    json!(ctm.l.rows())
}

pub fn chromatic(graph: &str, length: usize, colors: Option<usize>, aut: Option<&Path>, oracle: bool) -> CliResult<Output> {
    let (parsed, ctm) = compact(graph, aut)?;
    let chi = ctm.chromatic_product_path(length)?;
    let mut text = vec![format!("chi(G x P{length}) = {chi}")];
    let mut results = json!({ "polynomial": chi });
    if let Some(k) = colors {
        let count = chi.eval_i64(k as i64);
        text.push(format!("count at k = {k}: {count}"));
        results["count"] = json!(count.to_string());
    }
    let oracle = if oracle {
        let mut checks = Checks::default();
        let ks: Vec<usize> = colors.map(|k| vec![k]).unwrap_or_else(|| vec![2, 3, 4]);
        for k in ks {
            let walks = count_colorings_path(&parsed.graph, length, k)?;
            checks.push(format!("colorings at k = {k}"), &walks, &chi.eval_i64(k as i64));
        }
        Some(checks.finish(&mut text)?)
    } else {
        None
    };
    Ok(Output {
        inputs: json!({ "graph": graph, "length": length, "colors": colors }),
        results,
        oracle,
        text,
    })
}

pub fn transfer(graph: &str, aut: Option<&Path>, oracle: bool) -> CliResult<Output> {
    let (parsed, ctm) = compact(graph, aut)?;
    let n = parsed.graph.num_vertices() as i64;
    let orbits: Vec<Value> = ctm
        .orbit_set
        .orbits
        .iter()
        .map(|o| {
            json!({
                "representative": o.representative.blocks(),
                "multiplicity": o.multiplicity,
                "colors": o.colors,
                "weight": o.weight(),
            })
        })
        .collect();
    let ks: Vec<i64> = (n.max(1)..=n.max(1) + 3).collect();
    let bounds = ctm.eigen_bounds(&ks)?;
    let mut text = vec![format!("{} orbits", ctm.orbit_count())];
    for (i, o) in ctm.orbit_set.orbits.iter().enumerate() {
        text.push(format!("  o{i}: {} x{} ({} colors), weight {}", o.representative, o.multiplicity, o.colors, o.weight()));
    }
    for (i, row) in ctm.l.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        text.push(format!("L[{i}] = [{}]", cells.join(", ")));
    }
    text.push(format!("delta = {}, Delta = {}", bounds.delta, bounds.big_delta));
    for s in &bounds.samples {
        text.push(format!("  k = {}: {} <= lambda = {:.6} <= {}", s.k, s.min_row_sum, s.lambda, s.max_row_sum));
    }
    let results = json!({
        "orbits": orbits,
        "L": matrix_json(&ctm),
        "weights": ctm.weights,
        "eigen_bounds": bounds,
        "bounds_hold": bounds.bounds_hold(),
        "leading_terms_agree": bounds.leading_terms_agree(),
    });
    let oracle = if oracle {
        let mut checks = Checks::default();
        let k = n.max(2) as usize;
        for len in 1..=3 {
            let chi = ctm.chromatic_product_path(len)?;
            let walks = count_colorings_path(&parsed.graph, len, k)?;
            checks.push(format!("colorings of G x P{len} at k = {k}"), &walks, &chi.eval_i64(k as i64));
        }
        Some(checks.finish(&mut text)?)
    } else {
        None
    };
    Ok(Output { inputs: json!({ "graph": graph }), results, oracle, text })
}

pub fn genfun(graph: &str, aut: Option<&Path>, oracle: bool) -> CliResult<Output> {
    let (parsed, ctm) = compact(graph, aut)?;
    let xi = ctm.generating_function()?;
    let hs = transfer_core::transfer::hidden_symmetry_of(&xi, ctm.orbit_count());
    let mut text = vec![
        format!("Xi = {xi}"),
        format!(
            "hidden symmetry: {} (denominator z-degree {}, {} orbits)",
            hs.holds, hs.reduced_denominator_degree, hs.orbit_count
        ),
    ];
    let results = json!({
        "numerator": xi.numerator,
        "denominator": xi.denominator,
        "hidden_symmetry": hs.holds,
        "reduced_denominator_degree": hs.reduced_denominator_degree,
        "orbit_count": hs.orbit_count,
    });
    let oracle = if oracle {
        let mut checks = Checks::default();
        let series = xi.series_coefficients(3)?;
        let k = parsed.graph.num_vertices().max(2);
        for (i, coeff) in series.iter().enumerate() {
            let walks = count_colorings_path(&parsed.graph, i + 1, k)?;
            checks.push(format!("z^{i} coefficient at k = {k}"), &walks, &coeff.eval_i64(k as i64));
        }
        Some(checks.finish(&mut text)?)
    } else {
        None
    };
    Ok(Output { inputs: json!({ "graph": graph }), results, oracle, text })
}

fn alternating_bell(n: usize) -> BigInt {
    (1..n).map(|i| if (n - 1 - i) % 2 == 0 { bell_number(i) } else { -bell_number(i) }).sum()
}

pub fn orbits(graph: &str, oracle: bool) -> CliResult<Output> {
    let parsed = spec::parse_graph(graph)?;
    let g = &parsed.graph;
    let f = orbit_count_f(g);
    let partitions = color_orbits(g);
    let mut text = vec![format!("F(G) = {f}")];
    text.extend(partitions.iter().map(|p| format!("  {p}")));
    let bell_n = bell_number(g.num_vertices());
    let mut bell = json!({ "bell_N": bell_n.to_string(), "at_most_bell_N": f <= bell_n });
    let closed_form = match parsed.family {
        Family::Path(n) => Some(("Bell(N-1)", bell_number(n - 1))),
        Family::Cycle(n) => Some(("alternating Bell sum", alternating_bell(n))),
        Family::Other => None,
    };
    if let Some((name, value)) = closed_form {
        text.push(format!("{name} = {value}"));
        bell["closed_form"] = json!({ "name": name, "value": value.to_string(), "match": value == f });
        if value != f {
            return Err(CliError::Core(transfer_core::Error::Invariant(format!("{name} = {value} but F(G) = {f}"))));
        }
    }
    let results = json!({
        "F": f.to_string(),
        "partitions": partitions.iter().map(|p| p.blocks()).collect::<Vec<_>>(),
        "bell": bell,
    });
    let oracle = if oracle {
        let mut checks = Checks::default();
        checks.push("partition enumeration".into(), &BigInt::from(partitions.len()), &f);
        Some(checks.finish(&mut text)?)
    } else {
        None
    };
    Ok(Output { inputs: json!({ "graph": graph }), results, oracle, text })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PosetMode {
    Chains,
    Bounded,
    Surjective,
    Ehrhart,
}

impl PosetMode {
    fn name(self) -> &'static str {
        match self {
            PosetMode::Chains => "chains",
            PosetMode::Bounded => "bounded",
            PosetMode::Surjective => "surjective",
            PosetMode::Ehrhart => "ehrhart",
        }
    }
}

/// Walks through the transition graph, one per monomial, by depth-first
/// enumeration rather than matrix powers.
fn chains_by_walking(mtx: &TransitionMatrix, n: usize) -> BigInt {
    fn walk(mtx: &TransitionMatrix, state: usize, left: usize) -> BigInt {
        if left == 0 {
            return BigInt::from(1);
        }
        (0..mtx.size())
            .map(|j| BigInt::from(mtx.entry(state, j).num_terms()) * walk(mtx, j, left - 1))
            .sum()
    }
    (0..mtx.size()).map(|i| walk(mtx, i, n)).sum()
}

pub fn poset(file: &Path, levels: usize, k: Option<usize>, mode: PosetMode, oracle: bool) -> CliResult<Output> {
    let base = BasePoset::parse(&spec::read(file)?)?;
    let mtx = build_transition_matrix(&base);
    let need_k = || {
        k.ok_or_else(|| {
            CliError::Core(transfer_core::Error::InvalidSize { what: "--k (required for this mode)", value: 0 })
        })
    };
    let mut text = Vec::new();
    let mut results = json!({});
    let (count, expected) = match mode {
        PosetMode::Chains => {
            let c = count_chains(&mtx, levels);
            (c, oracle.then(|| Ok(chains_by_walking(&mtx, levels))))
        }
        PosetMode::Bounded => {
            let k = need_k()?;
            let c = count_chains_bounded(&mtx, levels, k);
            let brute = move || -> CliResult<BigInt> {
                let mut total = BigInt::from(0);
                for i in 1..=k {
                    total += brute_force_order_preserving(&base, levels, i, true)?;
                }
                Ok(total)
            };
            (c, oracle.then(brute))
        }
        PosetMode::Surjective => {
            let k = need_k()?;
            let c = count_surjective_order_preserving(&mtx, levels, k);
            (c, oracle.then(|| Ok(brute_force_order_preserving(&base, levels, k, true)?)))
        }
        PosetMode::Ehrhart => {
            let k = need_k()?;
            let c = ehrhart_order_polytope(&mtx, levels, k);
            let poly = ehrhart_polynomial(&mtx, levels)?;
            let shown: Vec<String> = poly.iter().map(ToString::to_string).collect();
            text.push(format!("Ehrhart coefficients (ascending): [{}]", shown.join(", ")));
            results["ehrhart_polynomial"] = json!(shown);
            (c, oracle.then(|| Ok(brute_force_order_preserving(&base, levels, k + 1, false)?)))
        }
    };
    text.insert(0, format!("{}: {count}", mode.name()));
    results["count"] = json!(count.to_string());
    results["monomials_in_M"] = json!(mtx.num_monomials());
    let oracle = match expected {
        Some(expected) => {
            let mut checks = Checks::default();
            checks.push(format!("{} count", mode.name()), &expected?, &count);
            Some(checks.finish(&mut text)?)
        }
        None => None,
    };
    Ok(Output {
        inputs: json!({ "file": file.display().to_string(), "levels": levels, "k": k, "mode": mode.name() }),
        results,
        oracle,
        text,
    })
}
