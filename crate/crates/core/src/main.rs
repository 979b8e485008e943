use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lexcomplex::corpus::{CorpusSpec, MAX_SWEEP_N};
use lexcomplex::descriptor::{config_from_json, MatroidDescriptor};
use lexcomplex::latpath::{
    composite_bijection, lpm_unvalidated, marking_path, paths_between, render_ascii, render_svg,
    statistic, LatticePath,
};
use lexcomplex::oracle::{self, TermOrder};
use lexcomplex::report::Report;
use lexcomplex::stdcomplex::LexMemo;
use lexcomplex::{verify, Error};

#[derive(Parser)]
#[command(
    name = "lexcomplex",
    version,
    about = "Lexicographic standard complexes of matroids"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized generators.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Faces and f-vector of the lex standard complex.
    Std {
        /// JSON descriptor, a file containing one, or `-` for stdin.
        descriptor: String,
    },
    /// The basis-to-face bijection.
    Bijection { descriptor: String },
    /// Lattice path matroid tools.
    Lpm {
        #[arg(long = "U")]
        upper: String,
        #[arg(long = "L")]
        lower: String,
        /// A path between the boundaries to analyze.
        #[arg(long)]
        stat: Option<String>,
        #[arg(long, value_enum)]
        render: Option<Render>,
        /// Print statistic and dual image for every path.
        #[arg(long)]
        bijection_table: bool,
    },
    /// Standard monomials of a 0/1 configuration by exact elimination.
    Oracle {
        #[arg(long, default_value = "lex")]
        order: TermOrder,
        /// JSON configuration, a file containing one, or `-` for stdin.
        #[arg(long)]
        config: String,
    },
    /// Run the invariant suite.
    Verify {
        /// Cap on every size bound in the corpus.
        #[arg(long)]
        max_n: Option<usize>,
        /// JSON corpus spec; defaults to the full corpus.
        #[arg(long)]
        corpus: Option<String>,
        /// Use the small corpus.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Ascii,
    Svg,
}

enum Failure {
    Input(Error),
    Resource(Error),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) | Error::TooManyCoordinates(_) => Failure::Resource(e),
            e => Failure::Input(e),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn read_arg(arg: &str) -> Result<String, Error> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Descriptor(e.to_string()))?;
        return Ok(s);
    }
    fs::read_to_string(arg).map_err(|e| Error::Descriptor(format!("{arg}: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn cmd_std(descriptor: &str, json: bool) -> CmdResult {
    let d = MatroidDescriptor::from_json(&read_arg(descriptor)?)?;
    let m = d.build()?;
    let report = Report::new(&LexMemo::new().complex(&m), m.num_bases());
    Ok(if json {
        report.to_json()
    } else {
        report.to_text()
    })
}

fn cmd_bijection(descriptor: &str, json: bool) -> CmdResult {
    let d = MatroidDescriptor::from_json(&read_arg(descriptor)?)?;
    let m = d.build()?;
    let memo = LexMemo::new();
    let table = memo.table(&m);
    let mut report = Report::new(&memo.complex(&m), m.num_bases()).with_table(&table);
    if let Some((u, l)) = d.boundaries()? {
        for (entry, c) in report.bijection.iter_mut().zip(
            // Bases are listed in canonical order; rebuild their paths.
            table
                .iter()
                .map(|(b, _)| LatticePath::from_east_set(u.len(), b)),
        ) {
            let c = c?;
            let st = statistic(&c, &l)?;
            if st.as_slice() != entry.face.as_slice() {
                return Err(Failure::Invariant(format!(
                    "statistic {st} of {c} differs from Λ = {:?}",
                    entry.face
                )));
            }
            entry.path = Some(c.word());
            entry.statistic = Some(st.as_slice().to_vec());
        }
    }
    Ok(if json {
        report.to_json()
    } else {
        report.to_text()
    })
}

#[derive(Serialize)]
struct PathInfo {
    path: String,
    east: Vec<u32>,
    statistic: Vec<u32>,
    marked: Vec<u32>,
    demarcation: String,
    marking: String,
    dual_image: String,
}

fn path_info(u: &LatticePath, l: &LatticePath, c: &LatticePath) -> Result<PathInfo, Error> {
    let mar = marking_path(c, l)?;
    Ok(PathInfo {
        path: c.word(),
        east: c.east_set().as_slice().to_vec(),
        statistic: statistic(c, l)?.as_slice().to_vec(),
        marked: mar.marked().as_slice().to_vec(),
        demarcation: lexcomplex::latpath::demarcation(c, l)?.word(),
        marking: mar.word(),
        dual_image: composite_bijection(u, l, c)?.word(),
    })
}

fn cmd_lpm(
    upper: &str,
    lower: &str,
    stat: Option<&str>,
    render: Option<Render>,
    table: bool,
    json: bool,
) -> CmdResult {
    let u = LatticePath::parse(upper)?;
    let l = LatticePath::parse(lower)?;
    let m = lpm_unvalidated(&u, &l)?;
    let chosen = stat.map(LatticePath::parse).transpose()?;
    if let Some(c) = &chosen {
        if !lexcomplex::latpath::weakly_above(&u, c)? || !lexcomplex::latpath::weakly_above(c, &l)?
        {
            return Err(Error::NotWeaklyAbove {
                upper: u.word(),
                lower: l.word(),
            }
            .into());
        }
    }
    if let Some(kind) = render {
        let c = chosen.clone().unwrap_or_else(|| u.clone());
        return Ok(match kind {
            Render::Ascii => render_ascii(&c, &l)?,
            Render::Svg => render_svg(&c, &l)?,
        });
    }
    let rows: Vec<PathInfo> = if table {
        paths_between(&u, &l)?
            .iter()
            .map(|c| path_info(&u, &l, c))
            .collect::<Result<_, _>>()?
    } else {
        chosen
            .iter()
            .map(|c| path_info(&u, &l, c))
            .collect::<Result<_, _>>()?
    };
    if json {
        #[derive(Serialize)]
        struct Out {
            n: usize,
            d: usize,
            num_bases: usize,
            f_vector: Vec<usize>,
            paths: Vec<PathInfo>,
        }
        return Ok(to_json(&Out {
            n: u.len(),
            d: u.east_count(),
            num_bases: m.num_bases(),
            f_vector: LexMemo::new().complex(&m).f_vector(),
            paths: rows,
        }));
    }
    let mut out = format!(
        "M[{u},{l}]: n={} d={} bases={} f-vector {:?}\n",
        u.len(),
        u.east_count(),
        m.num_bases(),
        LexMemo::new().complex(&m).f_vector()
    );
    let set = |v: &[u32]| {
        let inner: Vec<String> = v.iter().map(u32::to_string).collect();
        format!("{{{}}}", inner.join(","))
    };
    for r in rows {
        out.push_str(&format!(
            "{} st={} marked={} dem={} mar={} -> {}\n",
            r.path,
            set(&r.statistic),
            set(&r.marked),
            r.demarcation,
            r.marking,
            r.dual_image
        ));
    }
    Ok(out)
}

fn cmd_oracle(order: TermOrder, config: &str, json: bool) -> CmdResult {
    let v = config_from_json(&read_arg(config)?)?;
    let monomials = oracle::standard_monomials(&v, order)?;
    let complex = oracle::standard_complex(&v, order)?;
    if json {
        #[derive(Serialize)]
        struct Out {
            order: TermOrder,
            monomials: Vec<String>,
            faces: Vec<Vec<u32>>,
            f_vector: Vec<usize>,
        }
        return Ok(to_json(&Out {
            order,
            monomials: monomials.iter().map(|m| m.to_string()).collect(),
            faces: complex.to_face_lists(),
            f_vector: complex.f_vector(),
        }));
    }
    let words: Vec<String> = monomials.iter().map(|m| m.to_string()).collect();
    Ok(format!(
        "order {order}\nstandard monomials {}\nfaces {complex}\nf-vector {:?}\n",
        words.join(" "),
        complex.f_vector()
    ))
}

fn cmd_verify(
    max_n: Option<usize>,
    corpus: Option<&str>,
    quick: bool,
    seed: Option<u64>,
    json: bool,
) -> CmdResult {
    if let Some(n) = max_n {
        if n > MAX_SWEEP_N {
            return Err(Failure::Resource(Error::ResourceLimit(format!(
                "--max-n {n} exceeds {MAX_SWEEP_N}"
            ))));
        }
    }
    let mut spec = match corpus {
        Some(c) => CorpusSpec::from_json(&read_arg(c)?)?,
        None if quick => CorpusSpec::small(),
        None => CorpusSpec::default(),
    };
    if let Some(n) = max_n {
        spec = spec.capped(n);
    }
    if let Some(s) = seed {
        spec.seed = s;
    }
    let summary = verify::run(&spec)?;
    let text = if json {
        to_json(&summary)
    } else {
        let mut s = format!(
            "corpus: {} matroids, {} configurations\n",
            summary.matroids, summary.configs
        );
        for r in &summary.results {
            s.push_str(&format!("{r}\n"));
        }
        s
    };
    if summary.passed() {
        Ok(text)
    } else {
        Err(Failure::Invariant(text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match &cli.command {
        Command::Std { descriptor } => cmd_std(descriptor, json),
        Command::Bijection { descriptor } => cmd_bijection(descriptor, json),
        Command::Lpm {
            upper,
            lower,
            stat,
            render,
            bijection_table,
        } => cmd_lpm(
            upper,
            lower,
            stat.as_deref(),
            *render,
            *bijection_table,
            json,
        ),
        Command::Oracle { order, config } => cmd_oracle(*order, config, json),
        Command::Verify {
            max_n,
            corpus,
            quick,
        } => cmd_verify(*max_n, corpus.as_deref(), *quick, cli.seed, json),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Invariant(msg)) => {
            print!("{msg}");
            eprintln!("invariant failure");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(e)) => {
            eprintln!("refused: {e}");
            ExitCode::from(3)
        }
    }
}
