use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use charkit::arith::{laurent_specialize, CycNum};
use charkit::coxeter::{coxeter_conjugator, parse_ordering, replay_moves, RootSystem};
use charkit::data::{load_families, load_traces};
use charkit::e7::{
    chi_cuspidal_table, empty_cell_backsolve, final_value_table, recover_almost_characters,
    regular_class_model, solve_signs, CharValueTable, CHI_A1, CHI_A2,
};
use charkit::fourier::{fourier_matrix, FourierContext};
use charkit::groups::{character_table, parse_group};
use charkit::sandbox::{
    build_sandbox, convolution_hecke_check, heckeuch_report, verify_cell_products,
};

#[derive(Parser)]
#[command(
    name = "charkit",
    version,
    about = "Exact Weyl group, Hecke algebra and Fourier transform computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system summary.
    Roots {
        #[arg(long = "type")]
        type_label: String,
    },
    /// Element conjugating one Coxeter element into another.
    CoxeterConj {
        #[arg(long = "type")]
        type_label: String,
        /// 1-based node ordering, e.g. 1,2,3.
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Exact character table of a finite group.
    Chartable {
        #[arg(long)]
        group: String,
    },
    /// M(G), the Fourier matrix and its invariants.
    Fourier {
        #[arg(long)]
        group: String,
    },
    /// Exhaustive checks in GL_n(F_q).
    Sandbox {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u8,
        #[arg(long, value_enum)]
        check: SandboxCheck,
    },
    /// Regular unipotent values for the cuspidal family of E7.
    E7 {
        #[command(subcommand)]
        command: E7Command,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SandboxCheck {
    Heckeuch,
    Cells,
    Hecke,
}

#[derive(Subcommand)]
enum E7Command {
    /// Determine the scalar xi.
    Sign {
        #[arg(long)]
        families: Option<PathBuf>,
        #[arg(long)]
        traces: Option<PathBuf>,
    },
    /// Values of the cuspidal family at the four regular unipotent classes.
    Table {
        /// Specialize at q = 2^f.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        families: Option<PathBuf>,
        #[arg(long)]
        traces: Option<PathBuf>,
    },
}

/// JSON output and whether every invariant check passed.
type Outcome = Result<(Value, bool), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn roots(type_label: &str) -> Outcome {
    let rs = RootSystem::from_type(type_label).map_err(err)?;
    let n = rs.rank();
    let all: Vec<usize> = (0..n).collect();
    let w0 = rs.longest_element(&all).map_err(err)?;
    // −w0 permutes the simple roots.
    let minus_w0: Vec<usize> = (0..n).map(|i| rs.negate(w0.perm()[i] as usize)).collect();
    let fixes_simple = minus_w0.iter().enumerate().all(|(i, &j)| i == j);
    let positive: Vec<&Vec<i32>> = (0..rs.num_roots())
        .filter(|&r| rs.is_positive(r))
        .map(|r| &rs.roots[r])
        .collect();
    let ok = w0.length() == rs.num_positive() && positive.len() == rs.num_positive();
    let out = json!({
        "type": type_label,
        "rank": n,
        "positive_roots": rs.num_positive(),
        "roots": rs.num_roots(),
        "weyl_group_order": rs.group_order().to_string(),
        "longest_element_length": w0.length(),
        "minus_w0_on_simple_roots": minus_w0.iter().map(|j| j + 1).collect::<Vec<_>>(),
        "minus_w0_fixes_simple_roots": fixes_simple,
        "positive_root_coordinates": positive,
    });
    Ok((out, ok))
}

fn coxeter_conj(type_label: &str, source: &str, target: &str) -> Outcome {
    let rs = RootSystem::from_type(type_label).map_err(err)?;
    let (s, t) = (
        parse_ordering(source).map_err(err)?,
        parse_ordering(target).map_err(err)?,
    );
    let cert = coxeter_conjugator(&rs, &s, &t).map_err(err)?;
    let replayed = replay_moves(&rs, &s, &cert.moves).map_err(err)?.0 == t;
    let ok = cert.verified && replayed;
    let out = json!({
        "type": type_label,
        "conjugator": cert.word.iter().map(|g| g + 1).collect::<Vec<_>>(),
        "moves": cert.moves,
        "verified": cert.verified,
        "moves_replay": replayed,
    });
    Ok((out, ok))
}

fn chartable(group: &str) -> Outcome {
    let g = parse_group(group).map_err(err)?;
    let t = character_table(&g).map_err(err)?;
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    let (ro, co, sq) = (
        t.rows_orthogonal(),
        t.columns_orthogonal(),
        t.degrees_square_sum_ok(),
    );
    let out = json!({
        "group": group,
        "order": t.group_order,
        "class_sizes": t.class_sizes,
        "element_orders": t.element_orders,
        "rows": rows,
        "rows_orthogonal": ro,
        "columns_orthogonal": co,
        "degree_squares_sum_to_order": sq,
    });
    Ok((out, ro && co && sq))
}

fn fourier(group: &str) -> Outcome {
    let g = parse_group(group).map_err(err)?;
    let ctx = FourierContext::new(&g).map_err(err)?;
    let fm = fourier_matrix(&g).map_err(err)?;
    let entries: Vec<Vec<String>> = fm
        .entries
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    let (herm, inv) = (fm.is_hermitian(), fm.is_involution());
    let out = json!({
        "group": group,
        "m_set": ctx.m_set().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "eigenvalues": fm.eigenvalues.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "matrix": entries,
        "hermitian": herm,
        "involution": inv,
    });
    Ok((out, herm && inv))
}

fn sandbox(n: usize, q: u8, check: SandboxCheck) -> Outcome {
    let sb = build_sandbox(n, q).map_err(err)?;
    let rep = match check {
        SandboxCheck::Heckeuch => heckeuch_report(&sb).map_err(err)?,
        SandboxCheck::Cells => verify_cell_products(&sb),
        SandboxCheck::Hecke => convolution_hecke_check(&sb),
    };
    let ok = rep.passed();
    Ok((serde_json::to_value(&rep).map_err(err)?, ok))
}

fn e7_sign(families: Option<PathBuf>, traces: Option<PathBuf>) -> Outcome {
    let t = load_traces(traces.as_deref()).map_err(err)?;
    let f = load_families(families.as_deref()).map_err(err)?;
    let s = solve_signs(&t, &f).map_err(err)?;
    Ok((serde_json::to_value(&s).map_err(err)?, true))
}

/// `q = 2^f`.
fn two_power(q: u64) -> Result<u32, String> {
    if q < 2 || !q.is_power_of_two() {
        return Err(format!("q = {q} is not a power of 2; the regular unipotent classes are modelled in characteristic 2"));
    }
    Ok(q.trailing_zeros())
}

fn specialize(table: &CharValueTable, f: u32) -> Result<Value, String> {
    let mut v = table.to_json_value();
    for (i, r) in table.row_labels.iter().enumerate() {
        for (j, c) in table.col_labels.iter().enumerate() {
            if let Some(p) = &table.entries[i][j] {
                let s = laurent_specialize(p, 2, f).map_err(err)?;
                v["rows"][r][c] = Value::String(s.to_string());
            }
        }
    }
    Ok(v)
}

fn e7_table(q: Option<u64>, families: Option<PathBuf>, traces: Option<PathBuf>) -> Outcome {
    let t = load_traces(traces.as_deref()).map_err(err)?;
    let f = load_families(families.as_deref()).map_err(err)?;
    let sign = solve_signs(&t, &f).map_err(err)?;
    let model = regular_class_model().map_err(err)?;
    let chi = chi_cuspidal_table(&model).map_err(err)?;
    let table = final_value_table(&f, sign.xi).map_err(err)?;
    let recovered = recover_almost_characters(&f, &table).map_err(err)?;
    let xi = CycNum::from_integer(sign.xi.into());
    let round_trip = model.class_labels.iter().all(|c| {
        recovered.get("R_x1", c) == chi.get(CHI_A1, c).map(|p| p.scale(&xi)).as_ref()
            && recovered.get("R_x2", c) == chi.get(CHI_A2, c).map(|p| p.scale(&xi)).as_ref()
    });
    let r_a02 = empty_cell_backsolve(&t, &f, sign.xi).map_err(err)?;
    // R_x0 is pinned at u_a0^2, and at u0 only up to the sign delta.
    let rx0 = CharValueTable {
        row_labels: vec!["R_x0".into()],
        col_labels: model.class_labels.clone(),
        entries: vec![vec![None, None, Some(r_a02), None]],
    };
    let (values, mut rx0_json) = match q {
        None => (table.to_json_value(), rx0.to_json_value()),
        Some(q) => {
            let fexp = two_power(q)?;
            (specialize(&table, fexp)?, specialize(&rx0, fexp)?)
        }
    };
    rx0_json["rows"]["R_x0"]["u0"] = Value::String(match q {
        None => "delta*v^4".into(),
        Some(q) => format!("delta*{}", q * q),
    });
    let out = json!({
        "q": q.map_or(Value::String("symbolic".into()), |q| json!(q)),
        "xi": sign.xi,
        "admissible_delta": sign.admissible_delta,
        "values": values,
        "R_x0": rx0_json,
        "round_trip_recovers_chi": round_trip,
    });
    Ok((out, round_trip))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Roots { type_label } => roots(&type_label),
        Command::CoxeterConj {
            type_label,
            source,
            target,
        } => coxeter_conj(&type_label, &source, &target),
        Command::Chartable { group } => chartable(&group),
        Command::Fourier { group } => fourier(&group),
        Command::Sandbox { n, q, check } => sandbox(n, q, check),
        Command::E7 { command } => match command {
            E7Command::Sign { families, traces } => e7_sign(families, traces),
            E7Command::Table {
                q,
                families,
                traces,
            } => e7_table(q, families, traces),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, ok)) => {
            let text = serde_json::to_string_pretty(&out).expect("serializable");
            // A closed pipe is not a failure of the checks.
            let _ = writeln!(std::io::stdout(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
