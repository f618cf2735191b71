use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use vrhq_core::arith::published_value;
use vrhq_core::complexes::{read_complex, vietoris_rips_capped, write_complex};
use vrhq_core::domination::{exact_gamma_t_with, gamma_t_exhaustive, trivial_lower_bound, SolveOptions, SolverStatus};
use vrhq_core::graph::{build_hamming_graph, read_dimacs, Graph, HammingGraphSpec, VertexLabel};
use vrhq_core::homology::{betti_gf2, betti_integer};
use vrhq_core::{
    alpha, connectivity_lower_bound, consistency_check_2r, counterexample_scan, cross_polytope_witness_check,
    euler_characteristic, f_vector, paper_table, tail_degree, BoundQuery, ConnectivityBound,
};

use crate::output::{cell, Report, Table};
use crate::{CoefficientArg, Command, Failure, GammaTArgs, HomologyArgs};

type Outcome = Result<Report, Failure>;

fn big(v: &BigInt) -> Value {
    v.to_i64().map_or_else(|| Value::String(v.to_string()), Value::from)
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn read_file(p: &Path) -> Result<String, Failure> {
    fs::read_to_string(p).map_err(|e| Failure::input(format!("reading {}: {e}", p.display())))
}

/// Inputs echoed into the envelope. Environment-derived values appear
/// after resolution.
pub(crate) fn params(cmd: &Command, threads: usize) -> Value {
    match cmd {
        Command::Bound { n, r } => json!({ "n": n, "r": r }),
        Command::Table { paper, n_max, r_max } => {
            if *paper {
                json!({ "paper": true })
            } else {
                json!({ "paper": false, "n_max": n_max, "r_max": r_max })
            }
        }
        Command::Counterexamples { n_max } => json!({ "n_max": n_max }),
        Command::GammaT(a) => json!({
            "n": a.n,
            "r": a.r,
            "dimacs": a.dimacs.as_deref().map(path_str),
            "time_limit_ms": a.time_limit.map(|d| d.as_millis() as u64),
            "exhaustive": a.exhaustive,
            "threads": threads,
        }),
        Command::Complex { n, r, max_dim, out, max_simplices } => json!({
            "n": n,
            "r": r,
            "max_dim": max_dim,
            "out": out.as_deref().map(path_str),
            "max_simplices": max_simplices,
        }),
        Command::Homology(a) => json!({
            "n": a.n,
            "r": a.r,
            "complex": a.complex.as_deref().map(path_str),
            "up_to": a.up_to,
            "coefficients": match a.coefficients { CoefficientArg::Gf2 => "gf2", CoefficientArg::Z => "z" },
            "max_simplices": a.max_simplices,
            "snf_cap": a.snf_cap,
        }),
        Command::Witness { n, r, vertices } => json!({ "n": n, "r": r, "vertices": vertices }),
    }
}

pub(crate) fn execute(cmd: &Command, threads: usize) -> Outcome {
    match cmd {
        Command::Bound { n, r } => bound(*n, *r),
        Command::Table { paper: true, .. } => published_table(),
        Command::Table { n_max, r_max, .. } => grid_table(*n_max, *r_max),
        Command::Counterexamples { n_max } => counterexamples(*n_max),
        Command::GammaT(a) => gamma_t(a, threads),
        Command::Complex { n, r, max_dim, out, max_simplices } => {
            complex(*n, *r, *max_dim, out.as_deref(), *max_simplices)
        }
        Command::Homology(a) => homology(a),
        Command::Witness { n, r, vertices } => witness(*n, *r, vertices),
    }
}

fn bound_fields(n: u32, r: u32) -> Result<serde_json::Map<String, Value>, Failure> {
    let q = BoundQuery::new(n, r)?;
    let b = connectivity_lower_bound(q);
    let mut m = serde_json::Map::new();
    m.insert("n".into(), n.into());
    m.insert("r".into(), r.into());
    match &b {
        ConnectivityBound::Contractible => {
            m.insert("alpha".into(), Value::Null);
            m.insert("alpha_is_integer".into(), Value::Null);
            m.insert("k".into(), Value::Null);
            m.insert("connectivity".into(), Value::Null);
            m.insert("contractible".into(), true.into());
        }
        ConnectivityBound::LowerBound(c) => {
            let a = alpha(q)?;
            m.insert("alpha".into(), a.to_string().into());
            m.insert("alpha_is_integer".into(), a.is_integer().into());
            m.insert("k".into(), big(&(c + 1)));
            m.insert("connectivity".into(), big(c));
            m.insert("contractible".into(), false.into());
        }
    }
    Ok(m)
}

fn bound(n: u32, r: u32) -> Outcome {
    let mut m = bound_fields(n, r)?;
    if r < n {
        m.insert("tail_degree".into(), big(&BigInt::from(tail_degree(n, r))));
    }
    if let (Some(printed), Some(c)) = (published_value(n, r), m.get("connectivity").and_then(Value::as_i64)) {
        if printed != c {
            m.insert(
                "paper_discrepancy".into(),
                json!({
                    "printed": printed,
                    "computed": c,
                    "note": format!("published table lists {printed}; exact evaluation gives {c}"),
                }),
            );
        }
    }
    let result = Value::Object(m);
    Ok(Report { table: Table::key_value(&result), result })
}

fn published_table() -> Outcome {
    let rows = paper_table();
    let mut t = Table::new(["n", "r", "connectivity", "printed", "agrees"]);
    for row in &rows {
        t.push([
            row.n.to_string(),
            row.r.to_string(),
            row.connectivity.to_string(),
            row.printed.to_string(),
            row.agrees.to_string(),
        ]);
    }
    let agree = rows.iter().filter(|r| r.agrees).count();
    let result = json!({ "rows": rows, "agree_count": agree, "disagree_count": rows.len() - agree });
    Ok(Report { result, table: t })
}

fn grid_table(n_max: u32, r_max: Option<u32>) -> Outcome {
    if n_max == 0 {
        return Err(Failure::usage("--n-max must be at least 1"));
    }
    let mut rows = Vec::new();
    let mut t = Table::new(["n", "r", "alpha", "k", "connectivity"]);
    for n in 1..=n_max {
        let top = r_max.map_or(n - 1, |r| r.min(n - 1));
        for r in 0..=top {
            let m = bound_fields(n, r)?;
            t.push(["n", "r", "alpha", "k", "connectivity"].map(|k| cell(&m[k])));
            rows.push(Value::Object(m));
        }
    }
    Ok(Report { result: json!({ "rows": rows }), table: t })
}

fn counterexamples(n_max: u32) -> Outcome {
    let pairs = counterexample_scan(n_max);
    let violations = consistency_check_2r(n_max);
    let mut t = Table::new(["n", "r", "connectivity"]);
    for p in &pairs {
        t.push([p.n.to_string(), p.r.to_string(), p.bound.to_string()]);
    }
    let result = json!({
        "n_max": n_max,
        "count": pairs.len(),
        "pairs": pairs,
        "consistency_violations": violations,
    });
    Ok(Report { result, table: t })
}

fn load_graph(a: &GammaTArgs) -> Result<Graph, Failure> {
    match (a.n, a.r, &a.dimacs) {
        (Some(n), Some(r), None) => {
            if r >= n {
                return Err(Failure::usage(format!("G^c_{{{n},{r}}} has no edges when r >= n")));
            }
            Ok(build_hamming_graph(HammingGraphSpec::new(n, r, true))?)
        }
        (None, None, Some(path)) => Ok(read_dimacs(&read_file(path)?)?),
        _ => Err(Failure::usage("give either --n and --r or --dimacs")),
    }
}

fn gamma_t(a: &GammaTArgs, threads: usize) -> Outcome {
    let g = load_graph(a)?;
    let trivial = trivial_lower_bound(&g)?;
    let graph = json!({ "order": g.order(), "edges": g.edge_count(), "max_degree": g.max_degree() });
    let result = if a.exhaustive {
        let v = gamma_t_exhaustive(&g)?;
        json!({
            "method": "exhaustive",
            "graph": graph,
            "gamma_t": v,
            "lower": v,
            "upper": v,
            "exact": true,
            "bounds_only": false,
            "time_limit_hit": false,
            "trivial_lower_bound": trivial,
            "witness": Value::Null,
            "nodes": Value::Null,
        })
    } else {
        let opts = SolveOptions { time_limit: a.time_limit.map(Into::into), threads, symmetry: true };
        let res = exact_gamma_t_with(&g, &opts)?;
        let time_limit_hit = matches!(res.status, SolverStatus::BoundsOnly { time_limit_hit: true });
        json!({
            "method": "branch_and_bound",
            "graph": graph,
            "gamma_t": res.exact,
            "lower": res.lower,
            "upper": res.upper,
            "exact": res.is_exact(),
            "bounds_only": !res.is_exact(),
            "time_limit_hit": time_limit_hit,
            "trivial_lower_bound": trivial,
            "witness": res.witness,
            "nodes": res.nodes,
        })
    };
    let mut t = Table::key_value(&result);
    t.rows.retain(|row| row[0] != "graph");
    Ok(Report { result, table: t })
}

fn complex(n: u32, r: u32, max_dim: usize, out: Option<&Path>, cap: u64) -> Outcome {
    let k = vietoris_rips_capped(n, r, max_dim, cap)?;
    if let Some(path) = out {
        fs::write(path, write_complex(&k)).map_err(|e| Failure::input(format!("writing {}: {e}", path.display())))?;
    }
    let f = f_vector(&k);
    let mut t = Table::new(["dim", "simplices"]);
    for (d, c) in f.iter().enumerate() {
        t.push([d, *c]);
    }
    let result = json!({
        "n_vertices": k.n_vertices(),
        "max_dim": k.max_dim(),
        "f_vector": f,
        "total": k.total(),
        "euler_characteristic": euler_characteristic(&k),
        "out": out.map(path_str),
    });
    Ok(Report { result, table: t })
}

fn homology(a: &HomologyArgs) -> Outcome {
    let k = match (a.n, a.r, &a.complex) {
        (Some(n), Some(r), None) => vietoris_rips_capped(n, r, a.up_to + 1, a.max_simplices)?,
        (None, None, Some(path)) => read_complex(&read_file(path)?)?,
        _ => return Err(Failure::usage("give either --n and --r or --complex")),
    };
    let profile = match a.coefficients {
        CoefficientArg::Gf2 => betti_gf2(&k, a.up_to)?,
        CoefficientArg::Z => betti_integer(&k, a.up_to, a.snf_cap)?,
    };
    let mut t = Table::new(["dim", "reduced_betti", "torsion"]);
    for (i, &b) in profile.reduced_betti.iter().enumerate() {
        let tors = profile
            .torsion
            .as_ref()
            .map(|ts| ts[i].iter().map(|f| format!("Z/{f}")).collect::<Vec<_>>().join(" + "))
            .unwrap_or_default();
        t.push([i.to_string(), b.to_string(), tors]);
    }
    let result = serde_json::to_value(&profile).expect("profile serializes");
    Ok(Report { result, table: t })
}

fn parse_vertices(list: &str) -> Result<Vec<VertexLabel>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let parsed = match s.strip_prefix("0b") {
                Some(bits) => u64::from_str_radix(bits, 2),
                None => s.parse::<u64>(),
            };
            parsed.map(VertexLabel).map_err(|e| Failure::usage(format!("bad vertex label {s:?}: {e}")))
        })
        .collect()
}

fn witness(n: u32, r: u32, list: &str) -> Outcome {
    let vertices = parse_vertices(list)?;
    let report = cross_polytope_witness_check(n, r, &vertices)?;
    let result = serde_json::to_value(&report).expect("report serializes");
    let mut t = Table::new(["field", "value"]);
    t.push(["is_cross_polytope_boundary".to_string(), report.is_cross_polytope_boundary.to_string()]);
    t.push([
        "is_total_dominating_in_complement".to_string(),
        report.is_total_dominating_in_complement.map_or(String::new(), |b| b.to_string()),
    ]);
    let pairs: Vec<String> =
        report.pairs.iter().map(|(a, b)| format!("{}-{}", a.to_bit_string(n), b.to_bit_string(n))).collect();
    t.push(["pairs".to_string(), pairs.join(" ")]);
    t.push(["missing_pairs".to_string(), report.missing_pairs.len().to_string()]);
    Ok(Report { result, table: t })
}
