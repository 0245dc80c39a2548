//! One handler per subcommand: load inputs, call the library, shape a
//! report, print it, and translate the verdict into an exit code.

use std::io::Read;

use graphgeom::error::{Error, Result};
use graphgeom::forms::{orientation_search, stokes_verify, Form, OrientationOutcome};
use graphgeom::geometry::{boundary_vertices, classify_vertex, dimension, gauss_bonnet_verify};
use graphgeom::io::{parse_form, parse_graph, parse_vertex_function, write_graph};
use graphgeom::morse::{
    poincare_hopf_verify, random_injective_function, sphere_like, VertexFunction,
};
use graphgeom::rational::{format_rational, rat_int};
use graphgeom::simplicial::{check_intermediate, check_transfer, clique_complex};
use graphgeom::Graph;

use crate::report::{Report, Value, Verdict};
use crate::{Cli, Command};

pub fn execute(cli: Cli) -> Result<i32> {
    let json = cli.json;
    let (report, code) = match cli.command {
        Command::Info { file } => info(&load_graph(&file)?),
        Command::Curvature { file, corrupt } => curvature(&load_graph(&file)?, corrupt),
        Command::Index { file, values, seed } => {
            let g = load_graph(&file)?;
            let (f, source) = match values {
                Some(path) => (
                    parse_vertex_function(&read_input(&path)?, g.order())?,
                    "explicit values".to_string(),
                ),
                None => (random_injective_function(&g, seed), format!("seed {seed}")),
            };
            index(&g, &f, &source)?
        }
        Command::Betti { file } => betti(&load_graph(&file)?)?,
        Command::Boundary { file, dim } => {
            let g = load_graph(&file)?;
            let k = effective_dim(&g, dim)?;
            boundary(&g, k)?
        }
        Command::Orient { file, dim } => {
            let g = load_graph(&file)?;
            let k = effective_dim(&g, dim)?;
            orient(&g, k)?
        }
        Command::Stokes { file, form, random, dim } => {
            let g = load_graph(&file)?;
            let k = effective_dim(&g, dim)?;
            stokes(&g, k, form.as_deref(), random)?
        }
        Command::Spherelike { file, limit } => spherelike(&load_graph(&file)?, limit),
        Command::Gen { name, params, seed } => {
            let spec = graphgeom::GeneratorSpec { name, params, seed };
            let g = graphgeom::generate(&spec)?;
            let mut header = format!("# gen {}", spec.name);
            for p in &spec.params {
                header.push_str(&format!(" {p}"));
            }
            if let Some(s) = spec.seed {
                header.push_str(&format!(" --seed {s}"));
            }
            print!("{header}\n{}", write_graph(&g));
            return Ok(0);
        }
        Command::Verify { file, seeds } => verify(&load_graph(&file)?, seeds)?,
    };
    print!("{}", report.render(json));
    Ok(code)
}

/// Read a file, or standard input for `-`.
fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("reading {path}: {e}")))
    }
}

fn load_graph(path: &str) -> Result<Graph> {
    parse_graph(&read_input(path)?)
}

fn graph_echo(report: &mut Report, g: &Graph) {
    report.input("graph", format!("order {}, size {}", g.order(), g.size()));
}

/// Resolve `--dim`: default to the graph's inductive dimension when it is
/// a non-negative integer, otherwise demand an explicit flag.
fn effective_dim(g: &Graph, flag: Option<usize>) -> Result<usize> {
    if let Some(k) = flag {
        return Ok(k);
    }
    let d = dimension(g);
    if d.is_integer() && d >= rat_int(0) {
        Ok(d.to_integer().try_into().expect("small non-negative dimension"))
    } else {
        Err(Error::Input(format!(
            "graph dimension is {}, not a non-negative integer; choose a level with --dim",
            format_rational(&d)
        )))
    }
}

fn info(g: &Graph) -> (Report, i32) {
    let mut report = Report::new("info");
    graph_echo(&mut report, g);
    let c = clique_complex(g, None);
    report.result("order", Value::nat(g.order()));
    report.result("size", Value::nat(g.size()));
    report.result("fvec", Value::nat_seq(&c.fvec()));
    report.result(
        "euler_characteristic",
        Value::Int(graphgeom::graph_euler_characteristic(g)),
    );
    report.result("dimension", Value::rational(&dimension(g)));
    (report, 0)
}

fn curvature(g: &Graph, corrupt: bool) -> (Report, i32) {
    let mut data = gauss_bonnet_verify(g);
    if corrupt {
        if let Some(first) = data.curvatures.first_mut() {
            *first += rat_int(1);
            data.total += rat_int(1);
        }
    }
    let mut report = Report::new("curvature");
    graph_echo(&mut report, g);
    report.result(
        "curvature",
        Value::Table {
            header: vec!["vertex".into(), "K".into()],
            rows: data
                .curvatures
                .iter()
                .enumerate()
                .map(|(v, k)| vec![Value::nat(v), Value::rational(k)])
                .collect(),
        },
    );
    report.result("total", Value::rational(&data.total));
    report.result("euler_characteristic", Value::Int(data.euler_characteristic));
    report.result("gauss_bonnet", Value::Text("total == euler_characteristic".into()));
    report.verdict = Verdict::from_pass(data.pass());
    let code = report.verdict.exit_code();
    (report, code)
}

fn index(g: &Graph, f: &VertexFunction, source: &str) -> Result<(Report, i32)> {
    let data = poincare_hopf_verify(g, f)?;
    let mut report = Report::new("index");
    graph_echo(&mut report, g);
    report.input("function", source);
    report.result(
        "index",
        Value::Table {
            header: vec!["vertex".into(), "f".into(), "i_f".into()],
            rows: data
                .indices
                .iter()
                .enumerate()
                .map(|(v, &i)| {
                    vec![Value::nat(v), Value::rational(f.value(v)), Value::Int(i)]
                })
                .collect(),
        },
    );
    report.result("critical_vertices", Value::nat_seq(&data.critical_vertices));
    report.result("index_sum", Value::Int(data.index_sum));
    report.result("euler_characteristic", Value::Int(data.euler_characteristic));
    report.result("poincare_hopf", Value::Text("index_sum == euler_characteristic".into()));
    report.verdict = Verdict::from_pass(data.pass());
    let code = report.verdict.exit_code();
    Ok((report, code))
}

fn betti(g: &Graph) -> Result<(Report, i32)> {
    let data = graphgeom::euler_poincare_verify(&clique_complex(g, None))?;
    let mut report = Report::new("betti");
    graph_echo(&mut report, g);
    report.result("betti", Value::nat_seq(&data.betti));
    report.result("fvec", Value::nat_seq(&data.fvec));
    report.result("cohomological_chi", Value::Int(data.cohomological));
    report.result("combinatorial_chi", Value::Int(data.combinatorial));
    report.result("euler_poincare", Value::Text("alternating sums agree".into()));
    report.verdict = Verdict::from_pass(data.pass());
    let code = report.verdict.exit_code();
    Ok((report, code))
}

fn boundary(g: &Graph, k: usize) -> Result<(Report, i32)> {
    let mut rows = Vec::new();
    for v in g.vertices() {
        let class = classify_vertex(g, v, k)?;
        rows.push(vec![Value::nat(v), Value::Text(format!("{class:?}"))]);
    }
    let (set, is_graph_with_boundary) = boundary_vertices(g, k)?;
    let mut report = Report::new("boundary");
    graph_echo(&mut report, g);
    report.input("dim", k.to_string());
    report.result(
        "classification",
        Value::Table { header: vec!["vertex".into(), "class".into()], rows },
    );
    report.result("boundary_set", Value::nat_seq(&set));
    report.result("is_graph_with_boundary", Value::Bool(is_graph_with_boundary));
    Ok((report, 0))
}

fn orient(g: &Graph, k: usize) -> Result<(Report, i32)> {
    let c = clique_complex(g, None);
    let mut report = Report::new("orient");
    graph_echo(&mut report, g);
    report.input("dim", k.to_string());
    match orientation_search(&c, k)? {
        OrientationOutcome::Orientable(o) => {
            report.result("orientable", Value::Bool(true));
            report.result(
                "orientation",
                Value::Table {
                    header: vec!["simplex".into(), "sign".into()],
                    rows: c
                        .layer(k)
                        .iter()
                        .zip(o.signs())
                        .map(|(s, &sign)| {
                            vec![Value::Text(s.to_string()), Value::Int(i64::from(sign))]
                        })
                        .collect(),
                },
            );
        }
        OrientationOutcome::NotOrientable { witness } => {
            report.result("orientable", Value::Bool(false));
            report.result(
                "witness_cycle",
                Value::Seq(witness.iter().map(|s| Value::Text(s.to_string())).collect()),
            );
        }
    }
    Ok((report, 0))
}

fn stokes(g: &Graph, k: usize, form_path: Option<&str>, seed: u64) -> Result<(Report, i32)> {
    let c = clique_complex(g, None);
    if k == 0 {
        return Err(Error::Input(
            "Green-Stokes needs volume dimension >= 1; got --dim 0".into(),
        ));
    }
    let o = match orientation_search(&c, k)? {
        OrientationOutcome::Orientable(o) => o,
        OrientationOutcome::NotOrientable { .. } => {
            return Err(Error::Input(format!(
                "graph is not orientable at dimension {k}; no volume chain exists"
            )));
        }
    };
    let (f, source) = match form_path {
        Some(path) => (parse_form(&read_input(path)?, &c, k - 1)?, "explicit form".to_string()),
        None => (Form::random_int(&c, k - 1, seed), format!("random form, seed {seed}")),
    };
    let data = stokes_verify(&c, &o, &f)?;
    let mut report = Report::new("stokes");
    graph_echo(&mut report, g);
    report.input("dim", k.to_string());
    report.input("form", format!("level {}, {source}", k - 1));
    report.result("integral_of_df_over_volume", Value::rational(&data.lhs));
    report.result("integral_of_f_over_boundary", Value::rational(&data.rhs));
    report.result(
        "boundary_chain",
        Value::Table {
            header: vec!["simplex".into(), "coefficient".into()],
            rows: data
                .boundary_chain
                .support(&c)
                .into_iter()
                .map(|(s, a)| vec![Value::Text(s.to_string()), Value::Int(a)])
                .collect(),
        },
    );
    report.result("green_stokes", Value::Text("both integrals agree".into()));
    report.verdict = Verdict::from_pass(data.pass());
    let code = report.verdict.exit_code();
    Ok((report, code))
}

fn spherelike(g: &Graph, limit: usize) -> (Report, i32) {
    let mut report = Report::new("spherelike");
    graph_echo(&mut report, g);
    report.input("limit", limit.to_string());
    match sphere_like(g, limit) {
        Ok(answer) => {
            report.result("sphere_like", Value::Bool(answer));
        }
        Err(Error::TooLarge { order, limit }) => {
            report.result("sphere_like", Value::Text("too large".into()));
            report.result(
                "note",
                Value::Text(format!(
                    "a graph or sphere of order {order} exceeds the limit {limit}; \
                     raise --limit to force the exhaustive search"
                )),
            );
        }
        Err(other) => {
            // Only size refusals are expected from a validated graph.
            report.result("sphere_like", Value::Text(format!("error: {other}")));
        }
    }
    (report, 0)
}

/// Append one `check / status` row per verifier; all must pass.
fn verify(g: &Graph, seeds: u64) -> Result<(Report, i32)> {
    let c = clique_complex(g, None);
    let mut rows: Vec<(String, bool)> = Vec::new();

    rows.push(("gauss_bonnet".into(), gauss_bonnet_verify(g).pass()));

    let mut ph_ok = true;
    let mut transfer_f_ok = true;
    for seed in 0..seeds.max(1) {
        let f = random_injective_function(g, seed);
        ph_ok &= poincare_hopf_verify(g, &f)?.pass();
        transfer_f_ok &= check_intermediate(g, &c, &f)?.pass();
    }
    rows.push((format!("poincare_hopf ({} seeds)", seeds.max(1)), ph_ok));
    rows.push(("transfer".into(), check_transfer(g, &c)?.pass()));
    rows.push((format!("intermediate ({} seeds)", seeds.max(1)), transfer_f_ok));

    let mut dd_ok = true;
    let top = c.top_dim().map_or(0, |d| d + 1);
    for level in 0..=top {
        for seed in 0..3 {
            let f = Form::random_int(&c, level, seed);
            let ddf = graphgeom::exterior_derivative(
                &c,
                &graphgeom::exterior_derivative(&c, &f)?,
            )?;
            dd_ok &= ddf.is_zero();
        }
    }
    rows.push(("dd_zero".into(), dd_ok));

    rows.push(("euler_poincare".into(), graphgeom::euler_poincare_verify(&c)?.pass()));

    let all_pass = rows.iter().all(|(_, ok)| *ok);
    let mut report = Report::new("verify");
    graph_echo(&mut report, g);
    report.input("seeds", seeds.to_string());
    report.result(
        "checks",
        Value::Table {
            header: vec!["identity".into(), "status".into()],
            rows: rows
                .into_iter()
                .map(|(name, ok)| {
                    vec![
                        Value::Text(name),
                        Value::Text(if ok { "pass" } else { "fail" }.into()),
                    ]
                })
                .collect(),
        },
    );
    report.verdict = Verdict::from_pass(all_pass);
    let code = report.verdict.exit_code();
    Ok((report, code))
}
