//! Command-line surface for the `hedra` library.
//!
//! Every subcommand reads the text formats documented in `hedra::io`,
//! prints its result (and a certificate block when one exists) to stdout,
//! and reserves stderr for diagnostics. Exit codes: 0 = computed (verdicts
//! like `INFEASIBLE` or `NOT_TU` are results, not failures), 2 = usage or
//! parse error, 3 = precondition violation, 4 = resource cap exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hedra::farkas::{self, Feasibility, Validity};
use hedra::integrality;
use hedra::io::{self, GraphFile, PolyFile};
use hedra::projection;
use hedra::rational::{format_rat, format_vec, parse_rat, Rat};
use hedra::structure::{self, OptOutcome};
use hedra::unimod;
use hedra::{convert, Caps, Error, HRep, VRep};

#[derive(Parser)]
#[command(name = "hedra", version, about = "Exact rational polyhedral computation")]
struct Cli {
    #[command(flatten)]
    caps: CapsArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapsArgs {
    /// Maximum row count at any intermediate elimination step
    #[arg(long, global = true, default_value_t = 100_000)]
    max_rows: usize,
    /// Maximum number of lattice points enumerated
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_lattice: usize,
    /// Maximum number of subsets or submatrices enumerated
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_subsets: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    H,
    V,
}

#[derive(Clone, Copy, ValueEnum)]
enum TuMethod {
    Det,
    Gh,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between outer (hrep) and inner (vrep) descriptions
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        file: PathBuf,
    },
    /// Project a polyhedron: eliminate coordinates or apply a linear map
    Project {
        /// Comma-separated 1-based coordinates to eliminate
        #[arg(long, value_delimiter = ',')]
        eliminate: Vec<usize>,
        /// Matrix file of a linear map to project through
        #[arg(long)]
        matrix: Option<PathBuf>,
        file: PathBuf,
    },
    /// Decide feasibility; infeasibility comes with Farkas multipliers
    Feasible { file: PathBuf },
    /// Decide validity of one inequality "a_1 .. a_n b" on the polyhedron
    Valid {
        #[arg(long)]
        row: String,
        file: PathBuf,
    },
    /// Maximize a linear objective "c_1 .. c_n"
    Optimize {
        #[arg(long)]
        objective: String,
        file: PathBuf,
    },
    /// Enumerate all vertices (pointed input)
    Vertices { file: PathBuf },
    /// List facet-defining rows
    Facets { file: PathBuf },
    /// Certify irredundancy of an hrep or vrep file
    Irredundant { file: PathBuf },
    /// Affine dimension (-1 for the empty polyhedron)
    Dim { file: PathBuf },
    /// Basis of the lineality space
    Lineality { file: PathBuf },
    /// Outer description of the recession cone
    Recession { file: PathBuf },
    /// Outer description of the integer hull (bounded input)
    IntegerHull { file: PathBuf },
    /// Decide whether all vertices are integral
    Integral { file: PathBuf },
    /// Hilbert basis of the pointed cone spanned by matrix rows
    Hilbert { file: PathBuf },
    /// Lattice points as X + mono(Y) (bounded polyhedron or pointed cone)
    LatticeDecompose { file: PathBuf },
    /// Total dual integrality (face criterion, or definitional sweep)
    Tdi {
        #[arg(long)]
        definitional: bool,
        /// Objective box bound for the definitional sweep
        #[arg(long, default_value_t = 3)]
        cbox: i64,
        file: PathBuf,
    },
    /// Rewrite a bounded full-dimensional polyhedron as a TDI system
    MakeTdi { file: PathBuf },
    /// Integral primal max vs integral dual min for one objective
    Duality {
        #[arg(long)]
        objective: String,
        file: PathBuf,
    },
    /// Total unimodularity of a matrix file
    Tu {
        #[arg(long, value_enum, default_value = "det")]
        method: TuMethod,
        file: PathBuf,
    },
    /// Node-arc or node-edge incidence matrix of a graph file
    Incidence {
        #[arg(long, conflicts_with = "graph")]
        digraph: bool,
        #[arg(long)]
        graph: bool,
        file: PathBuf,
    },
    /// Network matrix of a digraph w.r.t. a spanning tree (1-based arc indices)
    NetworkMatrix {
        #[arg(long, value_delimiter = ',')]
        tree: Vec<usize>,
        file: PathBuf,
    },
    /// Outer description of the bipartite matching polytope
    MatchingPolytope { file: PathBuf },
    /// Circulation polytope with integral arc bounds
    Circulation {
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
        file: PathBuf,
    },
    /// Re-verify a certificate file against a polyhedron file
    CheckCert {
        /// The inequality "a_1 .. a_n b" a validity certificate refers to
        #[arg(long)]
        row: Option<String>,
        file: PathBuf,
        cert: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        max_rows: cli.caps.max_rows,
        max_lattice: cli.caps.max_lattice,
        max_subsets: cli.caps.max_subsets,
    };
    match run(cli.command, &caps) {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } => ExitCode::from(2),
                Error::Resource(_) => ExitCode::from(4),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })
}

fn read_hrep(path: &PathBuf) -> Result<HRep, Error> {
    match io::parse_poly(&read(path)?)? {
        PolyFile::H(h) => Ok(h),
        PolyFile::V(_) => Err(Error::Parse {
            line: 1,
            msg: "this command needs an hrep file".to_string(),
        }),
    }
}

fn parse_vector(text: &str) -> Result<Vec<Rat>, Error> {
    text.split([',', ' ', '\t'])
        .filter(|t| !t.is_empty())
        .map(parse_rat)
        .collect()
}

/// Splits "a_1 .. a_n b" into the normal and the bound.
fn parse_row(text: &str) -> Result<(Vec<Rat>, Rat), Error> {
    let mut v = parse_vector(text)?;
    let b = v.pop().ok_or_else(|| Error::Parse {
        line: 0,
        msg: "a row needs at least a right-hand side".to_string(),
    })?;
    Ok((v, b))
}

fn fmt_ints(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cmd: Command, caps: &Caps) -> Result<String, Error> {
    let mut out = String::new();
    match cmd {
        Command::Convert { to, file } => {
            let poly = io::parse_poly(&read(&file)?)?;
            match (to, poly) {
                (Target::V, PolyFile::H(h)) => {
                    out.push_str(&io::emit_vrep(&convert::h_to_v(&h, caps)?.canonicalized()))
                }
                (Target::H, PolyFile::V(v)) => {
                    out.push_str(&io::emit_hrep(&convert::v_to_h(&v, caps)?))
                }
                (Target::V, PolyFile::V(v)) => out.push_str(&io::emit_vrep(&v.canonicalized())),
                (Target::H, PolyFile::H(h)) => {
                    out.push_str(&io::emit_hrep(&convert::canonicalize_hrep(&h, caps)?))
                }
            }
        }
        Command::Project {
            eliminate,
            matrix,
            file,
        } => {
            let h = read_hrep(&file)?;
            let shadow = match matrix {
                Some(mpath) => {
                    let t = io::parse_matrix(&read(&mpath)?)?;
                    projection::project_general(&h, &t, caps)?
                }
                None => {
                    if eliminate.is_empty() {
                        return Err(Error::Parse {
                            line: 0,
                            msg: "project needs --eliminate or --matrix".to_string(),
                        });
                    }
                    if eliminate.iter().any(|&j| j == 0 || j > h.dim) {
                        return Err(Error::Parse {
                            line: 0,
                            msg: format!("--eliminate indices are 1..={}", h.dim),
                        });
                    }
                    let coords: Vec<usize> = eliminate.iter().map(|&j| j - 1).collect();
                    projection::eliminate_coords(&h, &coords, caps)?
                }
            };
            out.push_str(&io::emit_hrep(&shadow));
        }
        Command::Feasible { file } => {
            let h = read_hrep(&file)?;
            match farkas::feasible(&h, caps)? {
                Feasibility::Feasible(x) => {
                    let _ = writeln!(out, "FEASIBLE");
                    let _ = writeln!(out, "{}", format_vec(&x));
                }
                Feasibility::Infeasible(cert) => out.push_str(&io::emit_certificate(&cert)),
            }
        }
        Command::Valid { row, file } => {
            let h = read_hrep(&file)?;
            let (a, b) = parse_row(&row)?;
            match farkas::is_valid(&h, &a, &b, caps)? {
                Validity::Valid(cert) => out.push_str(&io::emit_certificate(&cert)),
                Validity::Invalid { witness } => {
                    let _ = writeln!(out, "INVALID");
                    let _ = writeln!(out, "{}", format_vec(&witness));
                }
            }
        }
        Command::Optimize { objective, file } => {
            let h = read_hrep(&file)?;
            let c = parse_vector(&objective)?;
            match structure::optimize(&h, &c, caps)? {
                OptOutcome::Optimal { value, argmax } => {
                    let _ = writeln!(out, "OPTIMAL {}", format_rat(&value));
                    let _ = writeln!(out, "{}", format_vec(&argmax));
                }
                OptOutcome::Unbounded { ray } => {
                    let _ = writeln!(out, "UNBOUNDED");
                    let _ = writeln!(out, "{}", format_vec(&ray));
                }
                OptOutcome::Infeasible(cert) => out.push_str(&io::emit_certificate(&cert)),
            }
        }
        Command::Vertices { file } => {
            let h = read_hrep(&file)?;
            let verts = structure::vertices(&h, caps)?;
            let v = VRep::new(h.dim, verts, vec![])?;
            out.push_str(&io::emit_vrep(&v));
        }
        Command::Facets { file } => {
            let h = read_hrep(&file)?;
            for (i, face) in structure::facets(&h, caps)? {
                let _ = writeln!(out, "facet row {} dim {}", i + 1, face.dim);
            }
        }
        Command::Irredundant { file } => {
            let verdict = match io::parse_poly(&read(&file)?)? {
                PolyFile::H(h) => structure::certify_irredundant_h(&h, caps)?,
                PolyFile::V(v) => structure::certify_irredundant_v(&v, caps)?,
            };
            if verdict.irredundant {
                let _ = writeln!(out, "IRREDUNDANT");
            } else {
                let _ = writeln!(out, "REDUNDANT");
                let _ = writeln!(out, "{}", verdict.violation.unwrap_or_default());
            }
        }
        Command::Dim { file } => {
            let h = read_hrep(&file)?;
            let _ = writeln!(out, "{}", structure::dimension(&h, caps)?);
        }
        Command::Lineality { file } => {
            let h = read_hrep(&file)?;
            for v in structure::lineality_space(&h, caps)? {
                let _ = writeln!(out, "{}", format_vec(&v));
            }
        }
        Command::Recession { file } => {
            let h = read_hrep(&file)?;
            out.push_str(&io::emit_hrep(&structure::char_cone(&h, caps)?));
        }
        Command::IntegerHull { file } => {
            let h = read_hrep(&file)?;
            out.push_str(&io::emit_hrep(&integrality::integer_hull(&h, caps)?));
        }
        Command::Integral { file } => {
            let h = read_hrep(&file)?;
            let verdict = integrality::is_integral(&h, caps)?;
            if verdict.integral {
                let _ = writeln!(out, "INTEGRAL");
            } else {
                let _ = writeln!(out, "FRACTIONAL");
                let _ = writeln!(out, "{}", format_vec(&verdict.fractional_vertex.unwrap()));
            }
        }
        Command::Hilbert { file } => {
            let m = io::parse_matrix(&read(&file)?)?;
            let gens: Vec<Vec<Rat>> = m.row_vecs();
            let basis = integrality::hilbert_basis(&gens, caps)?;
            for b in &basis.basis {
                let _ = writeln!(out, "{}", fmt_ints(b));
            }
        }
        Command::LatticeDecompose { file } => {
            let h = read_hrep(&file)?;
            let d = integrality::lattice_decomposition(&h, caps)?;
            let _ = writeln!(out, "points {}", d.points.len());
            for p in &d.points {
                let _ = writeln!(out, "{}", fmt_ints(p));
            }
            let _ = writeln!(out, "generators {}", d.generators.len());
            for g in &d.generators {
                let _ = writeln!(out, "{}", fmt_ints(g));
            }
        }
        Command::Tdi {
            definitional,
            cbox,
            file,
        } => {
            let h = read_hrep(&file)?;
            if definitional {
                let verdict = integrality::is_tdi_definitional(&h, cbox, caps)?;
                if verdict.tdi {
                    let _ = writeln!(out, "TDI (no violation up to cbox {})", verdict.c_box);
                } else {
                    let _ = writeln!(out, "NOT_TDI");
                    let (c, omega) = verdict.violation.unwrap();
                    let _ = writeln!(
                        out,
                        "objective {} has optimum {} but no integral dual optimum",
                        fmt_ints(&c),
                        format_rat(&omega)
                    );
                }
            } else {
                let verdict = integrality::is_tdi(&h, caps)?;
                if verdict.tdi {
                    let _ = writeln!(out, "TDI");
                } else {
                    let _ = writeln!(out, "NOT_TDI");
                    if let Some(v) = verdict.violation {
                        let rows: Vec<String> =
                            v.equality_set.iter().map(|i| (i + 1).to_string()).collect();
                        let _ = writeln!(
                            out,
                            "face with tight rows {} misses the integer point {}",
                            rows.join(" "),
                            fmt_ints(&v.point)
                        );
                    }
                }
            }
        }
        Command::MakeTdi { file } => {
            let h = read_hrep(&file)?;
            out.push_str(&io::emit_hrep(&integrality::make_tdi(&h, caps)?));
        }
        Command::Duality { objective, file } => {
            let h = read_hrep(&file)?;
            let c = parse_vector(&objective)?;
            let report = integrality::verify_strong_duality(&h, &c, caps)?;
            let show = |v: &Option<Rat>| {
                v.as_ref()
                    .map(format_rat)
                    .unwrap_or_else(|| "none".to_string())
            };
            let _ = writeln!(out, "primal_lp {}", format_rat(&report.primal_lp));
            let _ = writeln!(out, "primal_integral {}", show(&report.primal_integral));
            let _ = writeln!(out, "dual_integral {}", show(&report.dual_integral));
            let _ = writeln!(out, "{}", if report.equal { "EQUAL" } else { "NOT_EQUAL" });
        }
        Command::Tu { method, file } => {
            let m = io::parse_matrix(&read(&file)?)?;
            let verdict = match method {
                TuMethod::Det => unimod::is_tu_determinant(&m, caps)?,
                TuMethod::Gh => unimod::is_tu_ghouila_houri(&m, caps)?,
            };
            if verdict.is_tu {
                let _ = writeln!(out, "TU");
            } else {
                let _ = writeln!(out, "NOT_TU");
                match verdict.witness.unwrap() {
                    unimod::TuWitness::Submatrix { rows, cols, det } => {
                        let one_based =
                            |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>();
                        let _ = writeln!(
                            out,
                            "submatrix rows {} cols {} det {det}",
                            one_based(&rows).join(" "),
                            one_based(&cols).join(" ")
                        );
                    }
                    unimod::TuWitness::UnsignableRows(rows) => {
                        let _ = writeln!(
                            out,
                            "unsignable rows {}",
                            rows.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
                        );
                    }
                    unimod::TuWitness::UnsignableCols(cols) => {
                        let _ = writeln!(
                            out,
                            "unsignable cols {}",
                            cols.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
                        );
                    }
                }
            }
        }
        Command::Incidence {
            digraph,
            graph,
            file,
        } => {
            let parsed = io::parse_graph(&read(&file)?)?;
            let m = match (parsed, digraph, graph) {
                (GraphFile::Directed(d), _, false) => unimod::node_arc_incidence(&d),
                (GraphFile::Undirected(g), false, _) => unimod::node_edge_incidence(&g),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: "graph file kind does not match the requested flag".to_string(),
                    })
                }
            };
            out.push_str(&io::emit_matrix(&m));
        }
        Command::NetworkMatrix { tree, file } => {
            let GraphFile::Directed(d) = io::parse_graph(&read(&file)?)? else {
                return Err(Error::Parse {
                    line: 1,
                    msg: "network matrices need a digraph file".to_string(),
                });
            };
            if tree.iter().any(|&i| i == 0 || i > d.arcs.len()) {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("--tree indices are 1..={}", d.arcs.len()),
                });
            }
            let tree: Vec<usize> = tree.iter().map(|&i| i - 1).collect();
            out.push_str(&io::emit_matrix(&unimod::network_matrix(&d, &tree)?));
        }
        Command::MatchingPolytope { file } => {
            let GraphFile::Undirected(g) = io::parse_graph(&read(&file)?)? else {
                return Err(Error::Parse {
                    line: 1,
                    msg: "matching polytopes need an undirected graph file".to_string(),
                });
            };
            out.push_str(&io::emit_hrep(&unimod::matching_polytope_bipartite(&g)?));
        }
        Command::Circulation { lower, upper, file } => {
            let GraphFile::Directed(d) = io::parse_graph(&read(&file)?)? else {
                return Err(Error::Parse {
                    line: 1,
                    msg: "circulations need a digraph file".to_string(),
                });
            };
            let l = parse_vector(&lower)?;
            let u = parse_vector(&upper)?;
            out.push_str(&io::emit_hrep(&unimod::circulation_polytope(&d, &l, &u)?));
        }
        Command::CheckCert { row, file, cert } => {
            let h = read_hrep(&file)?;
            let cert = io::parse_certificate(&read(&cert)?)?;
            let ok = match cert.kind {
                farkas::CertKind::Infeasibility => farkas::check_infeasibility(&h, &cert),
                farkas::CertKind::Validity => {
                    let Some(rowspec) = row else {
                        return Err(Error::Parse {
                            line: 0,
                            msg: "validity certificates need --row \"a_1 .. a_n b\"".to_string(),
                        });
                    };
                    let (a, b) = parse_row(&rowspec)?;
                    farkas::check_validity(&h, &cert, &a, &b)
                }
                farkas::CertKind::Separation => {
                    return Err(Error::Unsupported(
                        "separation certificates refer to generator sets, not hrep files"
                            .to_string(),
                    ))
                }
            };
            let _ = writeln!(out, "{}", if ok { "CERTIFICATE OK" } else { "CERTIFICATE INVALID" });
        }
    }
    Ok(out)
}
