use std::path::Path;
use std::time::Instant;

use mimfvs::branchdec::{mim_width, read_decomposition, write_decomposition};
use mimfvs::builders::{
    branchdec_from_cwd, branchdec_from_nice_td, hamcyc_construct, interval_linear_order, leaf_power_instance,
    named_source, named_tree, random_expression, random_intervals, random_source, random_tree, read_nice_td,
    separator_witness, tree_power_instance, CliqueWidthExpression,
};
use mimfvs::dp::{solve_mif, solve_weighted_mif, SolveOptions};
use mimfvs::graph::{read_graph, write_graph};
use mimfvs::{oracle, par, BranchDecomposition, Graph};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{list, Failure, Report};
use crate::{Cli, Command, GenOut, Generator, Instance};

type Res<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Res<()> {
    std::fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load(inst: &Instance) -> Res<(Graph, BranchDecomposition)> {
    let g = read_graph(&read(&inst.graph)?)?;
    let d = match &inst.dec {
        Some(p) => read_decomposition(&read(p)?, g.n())?,
        None => BranchDecomposition::from_linear_order(&(0..g.n()).collect::<Vec<_>>())?,
    };
    if let Some(p) = &inst.dot {
        write(p, &d.to_dot())?;
    }
    Ok((g, d))
}

fn order_text(order: &[usize]) -> String {
    format!("order {}\n", list(order.iter().copied()))
}

fn with_comments(comments: &[String], body: String) -> String {
    let mut s: String = comments.iter().map(|c| format!("c {c}\n")).collect();
    s.push_str(&body);
    s
}

pub fn run(cli: &Cli) -> Res<Report> {
    match &cli.command {
        Command::Solve {
            inst,
            weighted,
            param,
            verify,
        } => solve(inst, *weighted, *param, *verify),
        Command::Mimw { inst } => mimw(inst),
        Command::Convert {
            td,
            graph,
            cwd,
            k,
            out_graph,
            out_dec,
            dot,
        } => {
            let out = Outputs {
                graph: out_graph,
                dec: out_dec,
                dot: dot.as_deref(),
            };
            match (td, cwd) {
                (Some(td), _) => {
                    let gpath = graph
                        .as_ref()
                        .ok_or_else(|| Failure::input("--td needs --graph"))?;
                    convert_td(gpath, td, *k, &out)
                }
                (None, Some(cwd)) => convert_cwd(cwd, *k, &out),
                (None, None) => Err(Failure::input("give --td or --cwd")),
            }
        }
        Command::Gen { which } => generate(which),
        Command::Verify { inst, weighted } => verify(inst, *weighted),
    }
}

fn solve(inst: &Instance, weighted: bool, param: Option<usize>, check: bool) -> Res<Report> {
    let (g, d) = load(inst)?;
    let opts = SolveOptions {
        param,
        parallel: par::available(),
        check_table_bound: false,
    };
    let start = Instant::now();
    let sol = if weighted {
        solve_weighted_mif(&g, &d, &opts)?
    } else {
        solve_mif(&g, &d, &opts)?
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let mut rep = Report::default();
    if weighted {
        rep.add(
            "fvs_weight",
            sol.fvs_weight,
            format!("A minimum-weight feedback vertex set weighs {}.", sol.fvs_weight),
        );
    }
    rep.add(
        "fvs_size",
        sol.fvs_size(),
        format!("The feedback vertex set found has {} vertices.", sol.fvs_size()),
    );
    let fvs = list(sol.fvs.iter());
    rep.add("fvs", &fvs, format!("Its vertices: {fvs}."));
    rep.add(
        "forest_size",
        sol.forest_size(),
        format!("The remaining induced forest has {} vertices.", sol.forest_size()),
    );
    rep.add(
        "mim_width",
        sol.stats.width,
        format!("The decomposition has mim-width {}.", sol.stats.width),
    );
    let used = sol.stats.nodes.iter().map(|s| s.param).max().unwrap_or(0);
    rep.add("param", used, format!("The largest width parameter used at a node was {used}."));
    rep.add(
        "max_keys",
        sol.stats.max_keys(),
        format!("The largest table had {} indices.", sol.stats.max_keys()),
    );
    rep.add("time_ms", format!("{ms:.3}"), format!("Solving took {ms:.3} ms."));
    if check {
        if g.n() > oracle::MAX_VERTICES {
            rep.add(
                "verify",
                "skipped",
                format!("Brute force skipped: more than {} vertices.", oracle::MAX_VERTICES),
            );
        } else if agrees(&g, weighted, sol.fvs_size(), sol.fvs_weight).0 {
            rep.add("verify", "agree", "Brute force agrees.");
        } else {
            rep.add("verify", "disagree", "Brute force DISAGREES.");
            rep.fail_with(4);
        }
    }
    Ok(rep)
}

/// Whether the DP objective matches the oracle, and the oracle's value.
fn agrees(g: &Graph, weighted: bool, size: usize, weight: f64) -> (bool, f64) {
    if weighted {
        let (w, _) = oracle::min_weight_fvs(g);
        ((w - weight).abs() <= 1e-9 * w.abs().max(1.0), w)
    } else {
        let s = oracle::min_fvs(g);
        (s == size, s as f64)
    }
}

fn verify(inst: &Instance, weighted: bool) -> Res<Report> {
    let (g, d) = load(inst)?;
    if g.n() > oracle::MAX_VERTICES {
        return Err(Failure::input(format!(
            "graph has {} vertices; brute force handles at most {}",
            g.n(),
            oracle::MAX_VERTICES
        )));
    }
    let opts = SolveOptions::default();
    let (dp, ok, want) = if weighted {
        let s = solve_weighted_mif(&g, &d, &opts)?;
        let (ok, want) = agrees(&g, true, s.fvs_size(), s.fvs_weight);
        (s.fvs_weight, ok, want)
    } else {
        let s = solve_mif(&g, &d, &opts)?;
        let (ok, want) = agrees(&g, false, s.fvs_size(), s.fvs_weight);
        (s.fvs_size() as f64, ok, want)
    };
    let mut rep = Report::default();
    rep.add("dp_objective", dp, format!("The DP objective is {dp}."));
    rep.add("oracle_objective", want, format!("Brute force gives {want}."));
    rep.add("agree", ok, if ok { "They agree." } else { "They DISAGREE." });
    if !ok {
        rep.fail_with(4);
    }
    Ok(rep)
}

fn mimw(inst: &Instance) -> Res<Report> {
    let (g, d) = load(inst)?;
    let r = mim_width(&g, &d, par::available());
    let mut rep = Report::default();
    for (t, m) in r.per_node.iter().enumerate() {
        rep.add(
            "cut",
            format!("{t} {m}"),
            format!("Cut at node {t} ({} vertices below) has mim {m}.", d.below(t).len()),
        );
    }
    rep.add("mim_width", r.width, format!("The mim-width is {}.", r.width));
    Ok(rep)
}

struct Outputs<'a> {
    graph: &'a Path,
    dec: &'a Path,
    dot: Option<&'a Path>,
}

impl Outputs<'_> {
    fn write(&self, graph: String, d: &BranchDecomposition, dec: String) -> Res<()> {
        write(self.graph, &graph)?;
        write(self.dec, &dec)?;
        if let Some(p) = self.dot {
            write(p, &d.to_dot())?;
        }
        Ok(())
    }
}

fn describe(rep: &mut Report, h: &Graph, d: &BranchDecomposition) -> usize {
    rep.add("vertices", h.n(), format!("The graph has {} vertices", h.n()));
    rep.add("edges", h.m(), format!("and {} edges.", h.m()));
    let w = mim_width(h, d, par::available()).width;
    rep.add("mim_width", w, format!("Its decomposition has mim-width {w}."));
    w
}

fn bound_line(rep: &mut Report, w: usize, bound: usize) {
    let ok = w <= bound;
    rep.add(
        "within_bound",
        ok,
        if ok {
            format!("This is within the bound {bound}.")
        } else {
            format!("This EXCEEDS the bound {bound}.")
        },
    );
    if !ok {
        rep.fail_with(3);
    }
}

fn convert_td(gpath: &Path, tdpath: &Path, k: usize, out: &Outputs) -> Res<Report> {
    let g = read_graph(&read(gpath)?)?;
    let td = read_nice_td(&read(tdpath)?)?;
    let conv = branchdec_from_nice_td(&g, &td)?;
    let sep = separator_witness(&g, &conv)?;
    let h = g.power(k);
    let d = &conv.decomposition;
    out.write(write_graph(&h), d, write_decomposition(d))?;
    let mut rep = Report::default();
    rep.add("k", k, format!("Power k = {k}."));
    let w = describe(&mut rep, &h, d);
    rep.add("declared_width", td.width(), format!("The declared width is {}.", td.width()));
    rep.add("max_separator", sep, format!("Every cut is separated by at most {sep} vertices."));
    bound_line(&mut rep, w, td.width());
    Ok(rep)
}

fn convert_cwd(path: &Path, k: usize, out: &Outputs) -> Res<Report> {
    let expr: CliqueWidthExpression = read(path)?.trim().parse()?;
    cwd_instance(&expr, k, out)
}

fn cwd_instance(expr: &CliqueWidthExpression, k: usize, out: &Outputs) -> Res<Report> {
    let (g, d) = branchdec_from_cwd(expr)?;
    let classes = expr.check_label_classes(&g)?;
    let h = g.power(k);
    let names: Vec<String> = expr
        .names()
        .iter()
        .enumerate()
        .map(|(i, s)| format!("vertex {i} {s}"))
        .collect();
    out.write(with_comments(&names, write_graph(&h)), &d, write_decomposition(&d))?;
    let mut rep = Report::default();
    rep.add("k", k, format!("Power k = {k}."));
    let w = describe(&mut rep, &h, &d);
    rep.add("labels", expr.width(), format!("The expression uses labels up to {}.", expr.width()));
    rep.add("max_classes", classes, format!("At most {classes} label classes occur at a node."));
    bound_line(&mut rep, w, expr.width());
    Ok(rep)
}

fn files(o: &GenOut) -> Outputs<'_> {
    Outputs {
        graph: o.out_graph.as_path(),
        dec: o.out_dec.as_path(),
        dot: o.dot.as_deref(),
    }
}

fn generate(which: &Generator) -> Res<Report> {
    match which {
        Generator::Hamcyc { from, m, out } => {
            let src = match from.as_str() {
                "random" if *m >= 2 => random_source(*m, &mut ChaCha8Rng::seed_from_u64(out.seed)),
                "random" => return Err(Failure::input("--m must be at least 2")),
                name => named_source(name)
                    .ok_or_else(|| Failure::input(format!("unknown source graph {name:?}; use C4, C6, K33 or random")))?,
            };
            let inst = hamcyc_construct(&src)?;
            let d = BranchDecomposition::from_linear_order(&inst.order)?;
            let names: Vec<String> = inst
                .names
                .iter()
                .enumerate()
                .map(|(i, s)| format!("vertex {i} {s}"))
                .collect();
            files(out).write(with_comments(&names, write_graph(&inst.graph)), &d, order_text(&inst.order))?;
            let mut rep = Report::default();
            let w = describe(&mut rep, &inst.graph, &d);
            for (i, ok) in inst.properties().iter().enumerate() {
                rep.add(
                    &format!("h{}", i + 1),
                    ok,
                    format!("Property H{} {}.", i + 1, if *ok { "holds" } else { "FAILS" }),
                );
                if !ok {
                    rep.fail_with(3);
                }
            }
            bound_line(&mut rep, w, 1);
            Ok(rep)
        }
        Generator::Interval { n, len, out } => {
            if !(len.is_finite() && *len > 0.0) {
                return Err(Failure::input("--len must be positive"));
            }
            let iv = random_intervals(*n, *len, &mut ChaCha8Rng::seed_from_u64(out.seed));
            let (g, order) = interval_linear_order(&iv)?;
            let d = BranchDecomposition::from_linear_order(&order)?;
            let comments: Vec<String> = iv
                .iter()
                .enumerate()
                .map(|(i, (l, r))| format!("interval {i} {l} {r}"))
                .collect();
            files(out).write(with_comments(&comments, write_graph(&g)), &d, order_text(&order))?;
            let mut rep = Report::default();
            describe(&mut rep, &g, &d);
            Ok(rep)
        }
        Generator::Power { tree, k, leaves, out } => {
            let t = match tree.strip_prefix("random") {
                Some(s) => {
                    let n: usize = s
                        .parse()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| Failure::input(format!("bad tree {tree:?}")))?;
                    random_tree(n, &mut ChaCha8Rng::seed_from_u64(out.seed))
                }
                None => named_tree(tree)?,
            };
            let (h, d, comments) = if *leaves {
                let lp = leaf_power_instance(&t, *k)?;
                let c = lp.leaves.iter().enumerate().map(|(i, v)| format!("leaf {i} {v}")).collect();
                (lp.graph, lp.decomposition, c)
            } else {
                let (h, d) = tree_power_instance(&t, *k)?;
                (h, d, Vec::new())
            };
            let mut c: Vec<String> = t.edges().iter().map(|(u, v)| format!("tree {u} {v}")).collect();
            c.extend(comments);
            files(out).write(with_comments(&c, write_graph(&h)), &d, write_decomposition(&d))?;
            let mut rep = Report::default();
            rep.add("k", k, format!("Power k = {k}."));
            let w = describe(&mut rep, &h, &d);
            bound_line(&mut rep, w, 1);
            Ok(rep)
        }
        Generator::Cwd { n, w, k, out_expr, out } => {
            if *n == 0 || *w == 0 {
                return Err(Failure::input("--n and --w must be positive"));
            }
            let expr = random_expression(*n, *w, &mut ChaCha8Rng::seed_from_u64(out.seed));
            if let Some(p) = out_expr {
                write(p, &format!("{expr}\n"))?;
            }
            cwd_instance(&expr, *k, &files(out))
        }
    }
}
