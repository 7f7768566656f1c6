//! Command-line front end. Every command produces a [`Report`], printed either
//! as `key: value` lines or as JSON.

use crate::bethe::{self, BetheConfig, BetheRoots, SolveOptions};
use crate::centralizer::{fit_constants_from_rep, structure_constants, verify_relations};
use crate::e6::{self, format_root, parse_root, RootVector};
use crate::error::{Error, Result};
use crate::faces::{self, FourFace};
use crate::hahn;
use crate::matrix::Mat;
use crate::rat::{self, Q};
use crate::symmetry::{self, SymmetryElement};
use crate::tridiag::{self, build_x, build_y, char_poly, xi_params, Tridiagonal};
use crate::weights::{self, ParamSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;
pub const ENV_BETHE_CAP: &str = "SU3ML_BETHE_CAP";
pub const ENV_ORACLE_BOUND: &str = "SU3ML_ORACLE_BOUND";

#[derive(Parser, Debug)]
#[command(
    name = "su3ml",
    version,
    about = "Missing-label operators of su(3) tensor products"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// m1 m2 m'1 m'2 m''1 m''2
    #[arg(num_args = 6, required = true, allow_negative_numbers = true, value_names = ["M1", "M2", "MP1", "MP2", "MPP1", "MPP2"])]
    pub m: Vec<i64>,
}

impl ParamArgs {
    fn params(&self) -> ParamSet {
        ParamSet::new(
            self.m[0], self.m[1], self.m[2], self.m[3], self.m[4], self.m[5],
        )
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    X,
    Y,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplicity d_m as the minimum of the 18 forms.
    Multiplicity {
        #[command(flatten)]
        p: ParamArgs,
        /// Also compute it by decomposing the tensor product.
        #[arg(long)]
        oracle: bool,
    },
    /// The two 3×3 squares of the 18 forms.
    Arrangement {
        #[command(flatten)]
        p: ParamArgs,
    },
    Spectrum {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_enum, default_value = "x", ignore_case = true)]
        operator: Operator,
        #[arg(long, default_value_t = tridiag::DEFAULT_TOL)]
        tol: f64,
        /// Include the exact characteristic polynomial.
        #[arg(long)]
        exact_charpoly: bool,
    },
    Symmetry {
        #[command(subcommand)]
        cmd: SymmetryCmd,
    },
    /// Check the algebra relations with the Weyl-averaged constants.
    VerifyAlgebra {
        #[command(flatten)]
        p: ParamArgs,
    },
    E6 {
        #[command(subcommand)]
        cmd: E6Cmd,
    },
    Faces {
        #[command(subcommand)]
        cmd: FacesCmd,
    },
    Hahn {
        #[command(subcommand)]
        cmd: HahnCmd,
    },
    Bethe {
        #[command(subcommand)]
        cmd: BetheCmd,
    },
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum SymmetryCmd {
    Orbit {
        #[command(flatten)]
        p: ParamArgs,
    },
    /// Check one element (normal-form code such as C012.L102.T0.S1) or all 144.
    Verify {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long)]
        element: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum E6Cmd {
    Roots,
    WeylOrder,
    Subgroup,
    Poset,
}

#[derive(Args, Debug, Clone)]
pub struct FaceArgs {
    /// Positive root, e.g. 12345 or 1,2,3,2,1,2
    #[arg(long)]
    pub root: String,
    #[arg(long, default_value_t = 0)]
    pub k: u8,
    /// + or -
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub sign: String,
}

impl FaceArgs {
    fn face(&self) -> Result<FourFace> {
        let sign = match self.sign.as_str() {
            "+" | "1" | "+1" => 1,
            "-" | "-1" => -1,
            s => return Err(Error::Parse(format!("bad sign {s}"))),
        };
        faces::face(&parse_root(&self.root)?, self.k, sign)
    }
}

#[derive(Subcommand, Debug)]
pub enum FacesCmd {
    List,
    /// Relations on the 9×9 window around `center`.
    Verify {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        f: FaceArgs,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        center: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum HahnCmd {
    Verify {
        #[command(flatten)]
        p: ParamArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum BetheCmd {
    /// Residuals of given roots, written like 0.5 or -1.2+0.3i.
    Residual {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        nu: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<String>,
    },
    /// Closed-form roots of the worked examples.
    Examples,
    Solve {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 200)]
        seeds: usize,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    /// Finite block of a face representation.
    Extract {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        f: FaceArgs,
        #[arg(long)]
        window: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub status: Status,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Error => 3,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} [{}]\n", self.command, status_str(self.status));
        if let Value::Object(m) = &self.outputs {
            for (k, v) in m {
                s.push_str(&format!("{k}: {}\n", text_value(v)));
            }
        }
        s
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Failed => "FAILED",
        Status::Error => "error",
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            a.iter().map(text_value).collect::<Vec<_>>().join(", ")
        }
        other => other.to_string(),
    }
}

pub fn qs(x: &Q) -> Value {
    Value::String(rat::fmt(x))
}

fn qv(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(qs).collect())
}

/// Reals are written with 15 decimals.
pub fn real(x: f64) -> Value {
    Value::String(format!("{x:.15}"))
}

fn complex(z: Complex64) -> Value {
    // imaginary parts at rounding level are dropped
    if z.im.abs() <= 1e-13 * (1.0 + z.re.abs()) {
        real(z.re)
    } else {
        Value::String(format!("{:.15}{:+.15}i", z.re, z.im))
    }
}

fn root_json(r: &RootVector) -> Value {
    Value::String(format_root(r))
}

fn tridiag_json(t: &Tridiagonal) -> Value {
    json!({ "diag": qv(&t.diag), "sup": qv(&t.sup), "sub": qv(&t.sub) })
}

fn mat_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|i| Value::Array((0..m.rows).map(|j| qs(m.get(i, j))).collect()))
            .collect(),
    )
}

fn params_json(p: ParamSet) -> Value {
    json!(p.to_array())
}

fn env_i64(name: &str, default: i64) -> i64 {
    std::env::var(name)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn ok(outputs: Value) -> Result<(Value, Status)> {
    Ok((outputs, Status::Ok))
}

fn checked(outputs: Value, pass: bool) -> Result<(Value, Status)> {
    Ok((outputs, if pass { Status::Ok } else { Status::Failed }))
}

fn parse_complex(s: &str) -> Result<Complex64> {
    s.trim()
        .parse::<Complex64>()
        .map_err(|_| Error::Parse(format!("bad complex number {s}")))
}

fn command_name(c: &Command) -> (String, Value) {
    let pj = |p: &ParamArgs| params_json(p.params());
    match c {
        Command::Multiplicity { p, .. } => ("multiplicity".into(), pj(p)),
        Command::Arrangement { p } => ("arrangement".into(), pj(p)),
        Command::Spectrum { p, operator, .. } => (format!("spectrum {operator:?}"), pj(p)),
        Command::Symmetry {
            cmd: SymmetryCmd::Orbit { p },
        } => ("symmetry orbit".into(), pj(p)),
        Command::Symmetry {
            cmd: SymmetryCmd::Verify { p, .. },
        } => ("symmetry verify".into(), pj(p)),
        Command::VerifyAlgebra { p } => ("verify-algebra".into(), pj(p)),
        Command::E6 { cmd } => {
            let sub = match cmd {
                E6Cmd::Roots => "roots",
                E6Cmd::WeylOrder => "weyl-order",
                E6Cmd::Subgroup => "subgroup",
                E6Cmd::Poset => "poset",
            };
            (format!("e6 {sub}"), Value::Null)
        }
        Command::Faces {
            cmd: FacesCmd::List,
        } => ("faces list".into(), Value::Null),
        Command::Faces {
            cmd: FacesCmd::Verify { p, .. },
        } => ("faces verify".into(), pj(p)),
        Command::Hahn {
            cmd: HahnCmd::Verify { p },
        } => ("hahn verify".into(), pj(p)),
        Command::Bethe {
            cmd: BetheCmd::Residual { p, .. },
        } => ("bethe residual".into(), pj(p)),
        Command::Bethe {
            cmd: BetheCmd::Examples,
        } => ("bethe examples".into(), Value::Null),
        Command::Bethe {
            cmd: BetheCmd::Solve { p, .. },
        } => ("bethe solve".into(), pj(p)),
        Command::Rep {
            cmd: RepCmd::Extract { p, .. },
        } => ("rep extract".into(), pj(p)),
    }
}

fn execute(c: &Command) -> Result<(Value, Status)> {
    match c {
        Command::Multiplicity { p, oracle } => {
            let p = p.params();
            let d = weights::multiplicity(p);
            if *oracle {
                let (a, b, cc) = p.factors();
                let bound = env_i64(ENV_ORACLE_BOUND, weights::DEFAULT_ORACLE_BOUND);
                let o = weights::lr_oracle_bounded(a, b, cc, bound)?;
                checked(json!({ "multiplicity": d, "oracle": o }), o == d)
            } else {
                ok(json!({ "multiplicity": d }))
            }
        }
        Command::Arrangement { p } => {
            let p = p.params();
            let a = weights::arrangement(p)?;
            let ln = weights::derive_ln(p)?;
            ok(json!({
                "l": ln.l, "n": ln.n,
                "left": a.left, "right": a.right,
                "multiplicity": weights::multiplicity(p),
                "rows_columns_equal": a.is_magic(),
            }))
        }
        Command::Spectrum {
            p,
            operator,
            tol,
            exact_charpoly,
        } => {
            let p = p.params();
            let t = match operator {
                Operator::X => build_x(p)?,
                Operator::Y => build_y(p)?,
            };
            let s = tridiag::spectrum(&t, *tol)?;
            let mut out = json!({
                "dimension": t.dim(),
                "values": s.values.iter().map(|&v| real(v)).collect::<Vec<_>>(),
                "exact": s.exact.iter().map(|e| e.as_ref().map(qs).unwrap_or(Value::Null)).collect::<Vec<_>>(),
                "tolerance": format!("{tol:e}"),
            });
            if *exact_charpoly {
                out["char_poly"] = qv(char_poly(&t).coeffs());
                out["matrix"] = tridiag_json(&t);
            }
            ok(out)
        }
        Command::Symmetry {
            cmd: SymmetryCmd::Orbit { p },
        } => {
            let orbit = symmetry::orbit(p.params())?;
            ok(json!({
                "size": orbit.len(),
                "orbit": orbit.iter().map(|q| params_json(*q)).collect::<Vec<_>>(),
            }))
        }
        Command::Symmetry {
            cmd: SymmetryCmd::Verify { p, element },
        } => {
            let p = p.params();
            match element {
                Some(code) => {
                    let e = SymmetryElement::from_code(code)?;
                    let image = symmetry::apply(&e, p)?;
                    let r = symmetry::verify_equivalence(p, &e)?;
                    checked(
                        json!({ "element": e.to_code(), "image": params_json(image), "sign": r.sign,
                                "x_charpoly_match": r.x_charpoly_match, "y_charpoly_match": r.y_charpoly_match }),
                        r.ok(),
                    )
                }
                None => {
                    let failures = symmetry::verify_all(p)?;
                    checked(
                        json!({ "checked": 144, "failures": failures.iter().map(|(e, _)| e.to_code()).collect::<Vec<_>>() }),
                        failures.is_empty(),
                    )
                }
            }
        }
        Command::VerifyAlgebra { p } => {
            let p = p.params();
            let (x, y) = (build_x(p)?.to_mat(), build_y(p)?.to_mat());
            let c = structure_constants(p);
            let d = verify_relations(&x, &y, &c)?;
            let mut out = json!({
                "dimension": x.rows,
                "constants": qv(&c.as_array()),
                "defects": { "xz": qs(&d.xz), "yz": qs(&d.yz), "special": qs(&d.special), "central": qs(&d.central) },
            });
            let mut pass = d.all_zero();
            if let Ok(fit) = fit_constants_from_rep(&x, &y) {
                out["fitted"] = Value::Array(
                    fit.as_array()
                        .iter()
                        .map(|o| o.as_ref().map(qs).unwrap_or(Value::Null))
                        .collect(),
                );
                pass &= fit.agrees_with(&c);
            }
            checked(out, pass)
        }
        Command::E6 { cmd } => e6_command(cmd),
        Command::Faces {
            cmd: FacesCmd::List,
        } => {
            let all = faces::enumerate_faces();
            ok(json!({
                "count": all.len(),
                "faces": all.iter().map(|f| json!({
                    "label": f.label(),
                    "roots": f.roots.iter().map(root_json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }))
        }
        Command::Faces {
            cmd: FacesCmd::Verify { p, f, center },
        } => {
            let face = f.face()?;
            let d = faces::verify_window(&face, p.params(), *center)?;
            checked(
                json!({ "face": face.label(), "center": center,
                        "defects": { "xz": qs(&d.xz), "yz": qs(&d.yz), "special": qs(&d.special) } }),
                d.all_zero(),
            )
        }
        Command::Hahn {
            cmd: HahnCmd::Verify { p },
        } => {
            let p = p.params();
            let xi = xi_params(p)?;
            if weights::multiplicity(p) == 0 {
                return Err(Error::NotPhysical);
            }
            let (hx, hy) = hahn::heun_hahn_xy(&xi)?;
            let x_ok = hx == build_x(p)?.to_mat();
            let y_ok = hy == build_y(p)?.to_mat();
            let (h1, h2) = hahn::hahn_matrices(&xi)?;
            let d = hahn::hahn_algebra_check(&h1, &h2.to_mat(), &hahn::EtaParams::from_xi(&xi))?;
            checked(
                json!({ "x_reproduced": x_ok, "y_reproduced": y_ok,
                        "z": qv(&hahn::z_coefficients(&xi).z),
                        "hahn_defects": { "h3h2": qs(&d.h3h2), "h1h3": qs(&d.h1h3) } }),
                x_ok && y_ok && d.all_zero(),
            )
        }
        Command::Bethe { cmd } => bethe_command(cmd),
        Command::Rep {
            cmd: RepCmd::Extract { p, f, window },
        } => {
            let p = p.params();
            let face = f.face()?;
            let v = faces::face_values(&face, p)?;
            let range = faces::extraction_range(&v, *window)?;
            let (x, y) = faces::extract_finite(&face, p, *window)?;
            ok(json!({
                "face": face.label(),
                "xi": v.xi, "lambda": v.lambda_value,
                "range": [range.0, range.1],
                "x": mat_json(&x.to_mat()), "y": mat_json(&y.to_mat()),
                "x_char_poly": qv(char_poly(&x).coeffs()),
                "y_char_poly": qv(char_poly(&y).coeffs()),
            }))
        }
    }
}

fn e6_command(cmd: &E6Cmd) -> Result<(Value, Status)> {
    match cmd {
        E6Cmd::Roots => {
            let rs = e6::generate_roots();
            let mut roots = rs.positive.clone();
            roots.sort();
            ok(json!({
                "count": rs.roots.len(),
                "positive": rs.positive.len(),
                "highest": root_json(&rs.highest()),
                "positive_roots": roots.iter().map(root_json).collect::<Vec<_>>(),
                "coefficient_one": e6::deg_roots_grid().iter().map(root_json).collect::<Vec<_>>(),
            }))
        }
        E6Cmd::WeylOrder => ok(json!({ "order": e6::weyl_group().elements.len() })),
        E6Cmd::Subgroup => {
            let sub = e6::missing_label_subgroup();
            let stab = e6::deg_set_stabilizer();
            let same = {
                let a: std::collections::HashSet<_> = sub.iter().collect();
                let b: std::collections::HashSet<_> = stab.iter().collect();
                a == b
            };
            let iso = e6::symmetry_isomorphism()?;
            let mut pairs: Vec<(String, String)> = iso
                .iter()
                .map(|(s, e)| (e.to_code(), if s.sign > 0 { "+" } else { "-" }.to_string()))
                .collect();
            pairs.sort();
            checked(
                json!({ "order": sub.len(), "equals_stabilizer": same, "isomorphism_size": iso.len(),
                        "elements": pairs.iter().map(|(c, s)| format!("{s}{c}")).collect::<Vec<_>>() }),
                sub.len() == 144 && same && iso.len() == 144,
            )
        }
        E6Cmd::Poset => {
            let p = e6::root_poset();
            ok(json!({
                "nodes": p.nodes.len(),
                "edges": p.edges.iter().map(|(a, b, i)| json!([format_root(&p.nodes[*a]), format_root(&p.nodes[*b]), i])).collect::<Vec<_>>(),
                "maximal": p.maximal().iter().map(root_json).collect::<Vec<_>>(),
            }))
        }
    }
}

fn bethe_command(cmd: &BetheCmd) -> Result<(Value, Status)> {
    match cmd {
        BetheCmd::Residual { p, nu, lambda } => {
            let p = p.params();
            let cfg = BetheConfig::from_params(p)?;
            let roots = BetheRoots {
                nu: nu.iter().map(|s| parse_complex(s)).collect::<Result<_>>()?,
                lambda: lambda
                    .iter()
                    .map(|s| parse_complex(s))
                    .collect::<Result<_>>()?,
            };
            let r = bethe::bethe_residual(&cfg, &roots)?;
            let ev = bethe::eigenvalue_from_roots(&cfg, &roots, &tridiag::xsca(p)?)?;
            ok(json!({
                "residual_nu": r.nu.iter().map(|&x| format!("{x:e}")).collect::<Vec<_>>(),
                "residual_lambda": r.lambda.iter().map(|&x| format!("{x:e}")).collect::<Vec<_>>(),
                "max_residual": format!("{:e}", r.max()),
                "eigenvalue": complex(ev),
            }))
        }
        BetheCmd::Examples => {
            let examples = [
                tridiag::Example::Two { p: 1, q: 1 },
                tridiag::Example::Two { p: 2, q: 3 },
                tridiag::Example::Three { l: 3, p: 2, q: 2 },
                tridiag::Example::Three { l: 2, p: 1, q: 3 },
            ];
            let mut rows = vec![];
            let mut pass = true;
            for e in examples {
                let p = e.params();
                let cfg = BetheConfig::from_params(p)?;
                let x0 = tridiag::xsca(p)?;
                let spec = tridiag::spectrum(&build_x(p)?, tridiag::DEFAULT_TOL)?.values;
                for r in bethe::example_roots(e)? {
                    let res = bethe::bethe_residual(&cfg, &r)?.max();
                    let ev = bethe::eigenvalue_from_roots(&cfg, &r, &x0)?;
                    let matched = spec
                        .iter()
                        .any(|&s| (ev - s).norm() < 1e-8 * (1.0 + s.abs()));
                    pass &= res < 1e-12 && matched;
                    rows.push(json!({
                        "params": params_json(p),
                        "nu": r.nu.iter().map(|&z| complex(z)).collect::<Vec<_>>(),
                        "lambda": r.lambda.iter().map(|&z| complex(z)).collect::<Vec<_>>(),
                        "residual": format!("{res:e}"),
                        "eigenvalue": complex(ev),
                        "matched": matched,
                    }));
                }
            }
            checked(json!({ "examples": rows }), pass)
        }
        BetheCmd::Solve { p, seeds, rng_seed } => {
            let cfg = BetheConfig::from_params(p.params())?;
            let opts = SolveOptions {
                seeds: *seeds,
                rng_seed: *rng_seed,
                cap: env_i64(ENV_BETHE_CAP, SolveOptions::default().cap),
                ..SolveOptions::default()
            };
            let rep = bethe::numeric_solve(&cfg, &opts)?;
            ok(json!({
                "n": cfg.n, "l": cfg.l,
                "spectrum": rep.spectrum.iter().map(|&v| real(v)).collect::<Vec<_>>(),
                "recovered": rep.n_recovered(),
                "complete": rep.complete(),
                "solutions": rep.solutions.iter().map(|s| json!({
                    "eigenvalue": complex(s.eigenvalue),
                    "residual": format!("{:e}", s.residual),
                    "matched": s.matched,
                    "nu": s.roots.nu.iter().map(|&z| complex(z)).collect::<Vec<_>>(),
                    "lambda": s.roots.lambda.iter().map(|&z| complex(z)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "exceptional_near": rep.explained_by_exceptional(),
            }))
        }
    }
}

/// Run a parsed command line.
pub fn run(cli: &Cli) -> Report {
    let (command, inputs) = command_name(&cli.command);
    let (outputs, status) = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => (
            json!({ "error": e.kind(), "message": e.to_string() }),
            Status::Error,
        ),
    };
    Report {
        schema: SCHEMA_VERSION,
        command,
        inputs,
        outputs,
        status,
    }
}

/// Parse arguments, run, print; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let report = run(&cli);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", report.to_text());
    }
    report.exit_code()
}

/// Parse arguments and run without printing.
pub fn report_for<I, T>(args: I) -> std::result::Result<Report, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Ok(run(&Cli::try_parse_from(args)?))
}
