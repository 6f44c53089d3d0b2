//! The check registry: names, parameter schemas, and runners.

use std::collections::BTreeMap;

use vira_core::coeff::{parse_rational, rat, rat_int, Rational};
use vira_core::fock::{FockSpace, OrderingVariant, TwistVariant};
use vira_core::kreduce::{
    h0_spanning_check, k_monomial_span_check, lowest_k_eigen_check, universal_vs_verma_check,
};
use vira_core::liealg::{
    functional_solver_check, gamma_endo_check, k_bracket_closed, kn_closure_check,
    vir_jacobi_check, BracketVariant, FunctionalVariant, GammaVariant, KCombination,
};
use vira_core::linalg::FieldElem;
use vira_core::report::{location, Report};
use vira_core::verma::{classify, discrete_series, Classification, VermaModule};
use vira_core::Scalar;

#[derive(Clone, Copy, Debug)]
pub struct ParamDef {
    pub name: &'static str,
    pub default: &'static str,
    pub help: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckDef {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamDef],
}

/// The registry, in the fixed order used by `all`.
pub static CATALOG: &[CheckDef] = &[
    CheckDef {
        name: "vir-jacobi",
        summary: "Jacobi, antisymmetry and involution identities for the Virasoro bracket",
        params: &[
            ParamDef {
                name: "range",
                default: "6",
                help: "generator index bound",
            },
            ParamDef {
                name: "samples",
                default: "24",
                help: "number of seeded random triples",
            },
        ],
    },
    CheckDef {
        name: "k-bracket",
        summary: "closed bracket of difference generators equals the expanded bracket",
        params: &[ParamDef {
            name: "rmax",
            default: "10",
            help: "index bound",
        }],
    },
    CheckDef {
        name: "kn-closure",
        summary: "point-stabilizer subalgebras close under the bracket",
        params: &[
            ParamDef {
                name: "n",
                default: "1,2,3",
                help: "point counts (comma list)",
            },
            ParamDef {
                name: "rmax",
                default: "4",
                help: "index bound",
            },
            ParamDef {
                name: "variant",
                default: "exact",
                help: "exact | perturbed",
            },
        ],
    },
    CheckDef {
        name: "gamma-endo",
        summary: "index-rescaling maps are endomorphisms commuting with the involution",
        params: &[
            ParamDef {
                name: "r",
                default: "2,3",
                help: "rescaling indices (comma list)",
            },
            ParamDef {
                name: "range",
                default: "6",
                help: "generator index bound",
            },
            ParamDef {
                name: "variant",
                default: "exact",
                help: "exact | drop-central-term",
            },
        ],
    },
    CheckDef {
        name: "functional-solver",
        summary: "linear functionals killing all brackets, restricted to the inner window",
        params: &[
            ParamDef {
                name: "n",
                default: "1,2,3",
                help: "point counts (comma list)",
            },
            ParamDef {
                name: "rtrunc",
                default: "12",
                help: "truncation radius (>= 6)",
            },
            ParamDef {
                name: "variant",
                default: "exact",
                help: "exact | drop-delta",
            },
        ],
    },
    CheckDef {
        name: "admissible",
        summary: "classification of parameter pairs and the discrete series table",
        params: &[
            ParamDef {
                name: "c",
                default: "1/2",
                help: "central charge",
            },
            ParamDef {
                name: "h",
                default: "1/16",
                help: "lowest energy",
            },
            ParamDef {
                name: "m",
                default: "1",
                help: "discrete series index",
            },
        ],
    },
    CheckDef {
        name: "gram",
        summary: "level Gram matrix with exact rank and radical",
        params: &[
            ParamDef {
                name: "c",
                default: "1/2",
                help: "central charge",
            },
            ParamDef {
                name: "h",
                default: "1/16",
                help: "lowest energy",
            },
            ParamDef {
                name: "level",
                default: "4",
                help: "energy level",
            },
        ],
    },
    CheckDef {
        name: "psd",
        summary: "exact positive semidefiniteness of all levels up to a bound",
        params: &[
            ParamDef {
                name: "c",
                default: "1/2",
                help: "central charge",
            },
            ParamDef {
                name: "h",
                default: "1/16",
                help: "lowest energy",
            },
            ParamDef {
                name: "maxlevel",
                default: "6",
                help: "largest level tested",
            },
        ],
    },
    CheckDef {
        name: "k-span",
        summary: "difference-generator monomials span every level",
        params: &[
            ParamDef {
                name: "c",
                default: "3",
                help: "central charge",
            },
            ParamDef {
                name: "h",
                default: "1/5",
                help: "lowest energy",
            },
            ParamDef {
                name: "maxlevel",
                default: "6",
                help: "largest level tested",
            },
        ],
    },
    CheckDef {
        name: "lowest-k-eigen",
        summary: "eigen-relations of the lowest vector and their uniqueness",
        params: &[
            ParamDef {
                name: "c",
                default: "3",
                help: "central charge",
            },
            ParamDef {
                name: "h",
                default: "1/5",
                help: "lowest energy",
            },
            ParamDef {
                name: "nmax",
                default: "6",
                help: "largest generator index",
            },
            ParamDef {
                name: "uniqlevel",
                default: "3",
                help: "uniqueness level bound",
            },
        ],
    },
    CheckDef {
        name: "h0-span",
        summary: "three-point annihilator family spans the vacuum module",
        params: &[
            ParamDef {
                name: "c",
                default: "3,1/2",
                help: "central charges (comma list)",
            },
            ParamDef {
                name: "maxlevel",
                default: "6",
                help: "largest level tested",
            },
        ],
    },
    CheckDef {
        name: "current-virasoro",
        summary: "quadratic current operators satisfy Virasoro at central charge one",
        params: &[
            ParamDef {
                name: "q",
                default: "0,1",
                help: "charges (comma list)",
            },
            ParamDef {
                name: "level",
                default: "6",
                help: "largest oscillator level",
            },
            ParamDef {
                name: "nmax",
                default: "3",
                help: "mode bound",
            },
            ParamDef {
                name: "variant",
                default: "normal",
                help: "normal | naive",
            },
        ],
    },
    CheckDef {
        name: "k-alpha-relations",
        summary: "twisted generators satisfy the closed relations identically in alpha",
        params: &[
            ParamDef {
                name: "level",
                default: "6",
                help: "largest oscillator level",
            },
            ParamDef {
                name: "nmax",
                default: "4",
                help: "mode bound",
            },
            ParamDef {
                name: "variant",
                default: "exact",
                help: "exact | drop-correction",
            },
        ],
    },
    CheckDef {
        name: "rho2-eigen",
        summary: "doubled generators on the two lowest vectors: eigenvalues and overlap",
        params: &[
            ParamDef {
                name: "nmax",
                default: "6",
                help: "largest positive mode",
            },
            ParamDef {
                name: "routeslevel",
                default: "5",
                help: "level bound for the two routes",
            },
        ],
    },
    CheckDef {
        name: "overlap",
        summary: "orbit families of the two lowest vectors: ranks and nonzero overlap",
        params: &[
            ParamDef {
                name: "maxenergy",
                default: "3",
                help: "largest orbit energy",
            },
            ParamDef {
                name: "alpha2",
                default: "1",
                help: "rational specialization of alpha^2",
            },
        ],
    },
    CheckDef {
        name: "crosscheck-universal",
        summary: "universal scalar product against the module and oscillator realizations",
        params: &[
            ParamDef {
                name: "maxenergy",
                default: "4",
                help: "module-side energy bound",
            },
            ParamDef {
                name: "maxdegree",
                default: "3",
                help: "oscillator-side energy bound",
            },
        ],
    },
    CheckDef {
        name: "all",
        summary: "every suite at default parameters, aggregated in catalog order",
        params: &[],
    },
];

pub fn find(name: &str) -> Option<&'static CheckDef> {
    CATALOG.iter().find(|def| def.name == name)
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type Params = BTreeMap<String, String>;

fn get<'a>(def: &CheckDef, params: &'a Params, key: &str) -> Result<&'a str, UsageError> {
    if let Some(v) = params.get(key) {
        return Ok(v);
    }
    def.params
        .iter()
        .find(|p| p.name == key)
        .map(|p| p.default)
        .ok_or_else(|| UsageError(format!("check {} has no parameter {key}", def.name)))
}

fn get_u32(def: &CheckDef, params: &Params, key: &str) -> Result<u32, UsageError> {
    let raw = get(def, params, key)?;
    raw.parse()
        .map_err(|_| UsageError(format!("parameter {key}={raw} is not a small integer")))
}

fn get_i64(def: &CheckDef, params: &Params, key: &str) -> Result<i64, UsageError> {
    let raw = get(def, params, key)?;
    raw.parse()
        .map_err(|_| UsageError(format!("parameter {key}={raw} is not an integer")))
}

fn get_rat(def: &CheckDef, params: &Params, key: &str) -> Result<Rational, UsageError> {
    let raw = get(def, params, key)?;
    parse_rational(raw).map_err(|e| UsageError(format!("parameter {key}={raw}: {e}")))
}

fn get_u32_list(def: &CheckDef, params: &Params, key: &str) -> Result<Vec<u32>, UsageError> {
    let raw = get(def, params, key)?;
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| UsageError(format!("parameter {key}={raw} is not an integer list")))
        })
        .collect()
}

fn get_rat_list(def: &CheckDef, params: &Params, key: &str) -> Result<Vec<Rational>, UsageError> {
    let raw = get(def, params, key)?;
    raw.split(',')
        .map(|s| {
            parse_rational(s.trim()).map_err(|e| UsageError(format!("parameter {key}={raw}: {e}")))
        })
        .collect()
}

fn validate_keys(def: &CheckDef, params: &Params) -> Result<(), UsageError> {
    for key in params.keys() {
        if !def.params.iter().any(|p| p.name == key) {
            return Err(UsageError(format!(
                "unknown parameter {key} for check {} (expected one of: {})",
                def.name,
                def.params
                    .iter()
                    .map(|p| p.name)
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
    }
    Ok(())
}

/// Runs one named check with the given parameters; `all` aggregates the
/// rest of the catalog at defaults, in catalog order.
pub fn run_check(name: &str, params: &Params, seed: u64) -> Result<Report, UsageError> {
    let def = find(name).ok_or_else(|| {
        UsageError(format!(
            "unknown check {name} (expected one of: {})",
            CATALOG
                .iter()
                .map(|d| d.name)
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })?;
    validate_keys(def, params)?;
    match name {
        "vir-jacobi" => {
            let range = get_i64(def, params, "range")?;
            let samples = get_u32(def, params, "samples")?;
            Ok(vir_jacobi_check(range, samples, seed))
        }
        "k-bracket" => {
            let rmax = get_i64(def, params, "rmax")?;
            let mut report = Report::new("k-bracket").with_param("rmax", rmax);
            for r in -rmax..=rmax {
                let mut mismatches = 0usize;
                for m in -rmax..=rmax {
                    let direct = vira_core::liealg::bracket(
                        &KCombination::k(r).expand(),
                        &KCombination::k(m).expand(),
                    );
                    let closed = k_bracket_closed(r, m).expand();
                    if direct != closed {
                        mismatches += 1;
                        report.fail_case(
                            format!("closed bracket at ({r},{m})"),
                            location(&[("r", r.to_string()), ("m", m.to_string())]),
                            closed.to_string(),
                            direct.to_string(),
                        );
                    }
                }
                if mismatches == 0 {
                    report.pass_case(
                        format!("closed bracket row r = {r}"),
                        format!("{} partners", 2 * rmax + 1),
                    );
                }
            }
            Ok(report)
        }
        "kn-closure" => {
            let ns = get_u32_list(def, params, "n")?;
            let rmax = get_i64(def, params, "rmax")?;
            let variant = match get(def, params, "variant")? {
                "exact" => BracketVariant::Exact,
                "perturbed" => BracketVariant::PerturbedLinearTerm,
                other => return Err(UsageError(format!("unknown variant {other}"))),
            };
            let mut report = Report::new("kn-closure")
                .with_param("n", get(def, params, "n")?)
                .with_param("rmax", rmax)
                .with_param("variant", get(def, params, "variant")?);
            for n in ns {
                report.absorb(&kn_closure_check(n, rmax, variant));
            }
            Ok(report)
        }
        "gamma-endo" => {
            let rs = get_u32_list(def, params, "r")?;
            let range = get_i64(def, params, "range")?;
            let variant = match get(def, params, "variant")? {
                "exact" => GammaVariant::Exact,
                "drop-central-term" => GammaVariant::DropCentralTerm,
                other => return Err(UsageError(format!("unknown variant {other}"))),
            };
            let mut report = Report::new("gamma-endo")
                .with_param("r", get(def, params, "r")?)
                .with_param("range", range)
                .with_param("variant", get(def, params, "variant")?);
            for r in rs {
                report.absorb(&gamma_endo_check(r, range, variant));
            }
            Ok(report)
        }
        "functional-solver" => {
            let ns = get_u32_list(def, params, "n")?;
            let rtrunc = get_i64(def, params, "rtrunc")?;
            let variant = match get(def, params, "variant")? {
                "exact" => FunctionalVariant::Exact,
                "drop-delta" => FunctionalVariant::DropCentralDelta,
                other => return Err(UsageError(format!("unknown variant {other}"))),
            };
            let mut report = Report::new("functional-solver")
                .with_param("n", get(def, params, "n")?)
                .with_param("rtrunc", rtrunc)
                .with_param("variant", get(def, params, "variant")?);
            for n in ns {
                report.absorb(&functional_solver_check(n, rtrunc, variant));
            }
            Ok(report)
        }
        "admissible" => {
            let c = get_rat(def, params, "c")?;
            let h = get_rat(def, params, "h")?;
            let m = get_u32(def, params, "m")?;
            let mut report = Report::new("admissible")
                .with_param("c", c.to_string())
                .with_param("h", h.to_string())
                .with_param("m", m);
            let class = classify(&c, &h);
            report.pass_case(format!("({c}, {h}) classified"), class.to_string());
            for point in discrete_series(m) {
                let cls = classify(&point.c, &point.h);
                let consistent = matches!(cls, Classification::Discrete { .. })
                    || (point.c == rat_int(0) && point.h == rat_int(0));
                if consistent {
                    report.pass_case(
                        format!("series point (p={}, q={})", point.p, point.q),
                        format!("c = {}, h = {}, {}", point.c, point.h, cls),
                    );
                } else {
                    report.fail_case(
                        format!("series point (p={}, q={})", point.p, point.q),
                        location(&[("p", point.p.to_string()), ("q", point.q.to_string())]),
                        cls.to_string(),
                        "discrete",
                    );
                }
                if point.h < rat_int(0) {
                    report.fail_case(
                        format!("series energy nonnegative (p={}, q={})", point.p, point.q),
                        location(&[("p", point.p.to_string()), ("q", point.q.to_string())]),
                        point.h.to_string(),
                        ">= 0",
                    );
                }
            }
            Ok(report)
        }
        "gram" => {
            let c = get_rat(def, params, "c")?;
            let h = get_rat(def, params, "h")?;
            let level = get_u32(def, params, "level")?;
            let module = VermaModule::rational(c.clone(), h.clone());
            let gram = module.gram(level);
            let mut report = Report::new("gram")
                .with_param("c", c.to_string())
                .with_param("h", h.to_string())
                .with_param("level", level);
            report.pass_case(
                format!("level {level} Gram data"),
                format!(
                    "dim {}, rank {}, radical {}",
                    gram.dim(),
                    gram.rank,
                    gram.radical_dim()
                ),
            );
            let consistent = gram.rank + gram.radical_dim() == gram.dim();
            if consistent {
                report.pass_case("rank + radical = dimension", String::new());
            } else {
                report.fail_case(
                    "rank + radical = dimension",
                    location(&[("level", level.to_string())]),
                    format!("{} + {}", gram.rank, gram.radical_dim()),
                    gram.dim().to_string(),
                );
            }
            let mut hermitian = true;
            for i in 0..gram.dim() {
                for j in 0..gram.dim() {
                    if gram.entries[i][j] != gram.entries[j][i].conj() {
                        hermitian = false;
                    }
                }
            }
            if hermitian {
                report.pass_case("entries are Hermitian", String::new());
            } else {
                report.fail_case(
                    "entries are Hermitian",
                    location(&[("level", level.to_string())]),
                    "conjugate-transpose mismatch".to_string(),
                    "Hermitian",
                );
            }
            Ok(report)
        }
        "psd" => {
            let c = get_rat(def, params, "c")?;
            let h = get_rat(def, params, "h")?;
            let maxlevel = get_u32(def, params, "maxlevel")?;
            let module = VermaModule::rational(c, h);
            module
                .psd_check(maxlevel)
                .map_err(|e| UsageError(e.to_string()))
        }
        "k-span" => {
            let c = get_rat(def, params, "c")?;
            let h = get_rat(def, params, "h")?;
            let maxlevel = get_u32(def, params, "maxlevel")?;
            let module = VermaModule::rational(c, h);
            Ok(k_monomial_span_check(&module, maxlevel))
        }
        "lowest-k-eigen" => {
            let c = get_rat(def, params, "c")?;
            let h = get_rat(def, params, "h")?;
            let nmax = get_u32(def, params, "nmax")?;
            let uniqlevel = get_u32(def, params, "uniqlevel")?;
            let module = VermaModule::rational(c, h);
            Ok(lowest_k_eigen_check(&module, nmax, uniqlevel))
        }
        "h0-span" => {
            let cs = get_rat_list(def, params, "c")?;
            let maxlevel = get_u32(def, params, "maxlevel")?;
            let mut report = Report::new("h0-span")
                .with_param("c", get(def, params, "c")?)
                .with_param("maxlevel", maxlevel);
            for c in cs {
                report.absorb(&h0_spanning_check(c, maxlevel));
            }
            Ok(report)
        }
        "current-virasoro" => {
            let qs = get_rat_list(def, params, "q")?;
            let level = get_u32(def, params, "level")?;
            let nmax = get_i64(def, params, "nmax")?;
            let variant = match get(def, params, "variant")? {
                "normal" => OrderingVariant::NormalOrdered,
                "naive" => OrderingVariant::Naive,
                other => return Err(UsageError(format!("unknown variant {other}"))),
            };
            let mut report = Report::new("current-virasoro")
                .with_param("q", get(def, params, "q")?)
                .with_param("level", level)
                .with_param("nmax", nmax)
                .with_param("variant", get(def, params, "variant")?);
            for q in qs {
                let space = FockSpace::new(q);
                report.absorb(&space.current_virasoro_check(level, nmax, variant));
            }
            Ok(report)
        }
        "k-alpha-relations" => {
            let level = get_u32(def, params, "level")?;
            let nmax = get_i64(def, params, "nmax")?;
            let variant = match get(def, params, "variant")? {
                "exact" => TwistVariant::Exact,
                "drop-correction" => TwistVariant::DropBoundaryCorrection,
                other => return Err(UsageError(format!("unknown variant {other}"))),
            };
            let space = FockSpace::vacuum();
            Ok(space.k_alpha_relations_check(level, nmax, variant))
        }
        "rho2-eigen" => {
            let nmax = get_i64(def, params, "nmax")?;
            let routeslevel = get_u32(def, params, "routeslevel")?;
            let space = FockSpace::vacuum();
            let mut report = Report::new("rho2-eigen")
                .with_param("nmax", nmax)
                .with_param("routeslevel", routeslevel);
            report.absorb(&space.rho2_routes_check(routeslevel, 3));
            match space.rho2_eigen_analysis(nmax) {
                Err(e) => return Ok(report.error(e.to_string())),
                Ok(analysis) => {
                    report.pass_case(
                        "restricted action is upper triangular and mode independent",
                        format!(
                            "matrix [[{}, {}], [{}, {}]]",
                            analysis.matrix[0][0],
                            analysis.matrix[0][1],
                            analysis.matrix[1][0],
                            analysis.matrix[1][1]
                        ),
                    );
                    report.pass_case(
                        "eigenvalues",
                        format!("{} and {}", analysis.eigenvalues.0, analysis.eigenvalues.1),
                    );
                    let half = Scalar::from_rat(rat(1, 2));
                    if analysis.gap == half {
                        report.pass_case("eigenvalue gap is exactly 1/2", String::new());
                    } else {
                        report.fail_case(
                            "eigenvalue gap is exactly 1/2",
                            location(&[]),
                            analysis.gap.to_string(),
                            half.to_string(),
                        );
                    }
                    let beta_ok = !analysis.beta.is_zero()
                        && analysis.beta.is_pure_imaginary()
                        && analysis.beta.is_odd_in_alpha();
                    if beta_ok {
                        report.pass_case(
                            "overlap coefficient nonzero, purely imaginary, odd",
                            format!("beta = {}", analysis.beta),
                        );
                    } else {
                        report.fail_case(
                            "overlap coefficient nonzero, purely imaginary, odd",
                            location(&[]),
                            analysis.beta.to_string(),
                            "nonzero, purely imaginary, odd in alpha",
                        );
                    }
                    let phi = space.second_lowest_vector(&analysis);
                    let mut eigen_ok = true;
                    for n in 1..=nmax {
                        let moved = space.rho2(n, &phi).expect("vacuum, nonzero mode");
                        if moved != phi.scale(&analysis.eigenvalues.1) {
                            eigen_ok = false;
                        }
                    }
                    if eigen_ok {
                        report.pass_case(
                            "second vector is a full eigenvector for every mode",
                            format!("modes 1..={nmax}"),
                        );
                    } else {
                        report.fail_case(
                            "second vector is a full eigenvector for every mode",
                            location(&[]),
                            "mode-dependent action".to_string(),
                            "uniform eigenvalue",
                        );
                    }
                }
            }
            Ok(report)
        }
        "overlap" => {
            let maxenergy = get_u32(def, params, "maxenergy")?;
            let alpha2 = get_rat(def, params, "alpha2")?;
            let space = FockSpace::vacuum();
            let mut report = Report::new("overlap")
                .with_param("maxenergy", maxenergy)
                .with_param("alpha2", alpha2.to_string());
            let analysis = match space.rho2_eigen_analysis(6) {
                Ok(a) => a,
                Err(e) => return Ok(report.error(e.to_string())),
            };
            let phi = space.second_lowest_vector(&analysis);
            let overlap = space.inner(&space.lowest(), &phi).expect("same charge");
            if overlap == analysis.beta && !overlap.is_zero() {
                report.pass_case(
                    "vacuum overlaps the second vector",
                    format!("<Omega, Phi> = {overlap}"),
                );
            } else {
                report.fail_case(
                    "vacuum overlaps the second vector",
                    location(&[]),
                    overlap.to_string(),
                    "beta, nonzero",
                );
            }
            if FieldElem::is_zero(&overlap.eval_alpha(&rat_int(0))) {
                report.pass_case("overlap vanishes at alpha = 0", String::new());
            } else {
                report.fail_case(
                    "overlap vanishes at alpha = 0",
                    location(&[]),
                    overlap.eval_alpha(&rat_int(0)).to_string(),
                    "0",
                );
            }
            for (label, start) in [("vacuum", space.lowest()), ("second", phi.clone())] {
                match space.orbit_family(&start, label, maxenergy, &alpha2) {
                    Err(e) => return Ok(report.error(e.to_string())),
                    Ok(family) => {
                        for level in &family.levels {
                            if level.rank_generic == level.rank_specialized {
                                report.pass_case(
                                    format!("{label} orbit energy {}", level.energy),
                                    format!(
                                        "rank {} (generic = specialized at alpha^2 = {})",
                                        level.rank_generic, family.alpha_sq
                                    ),
                                );
                            } else {
                                report.fail_case(
                                    format!("{label} orbit energy {}", level.energy),
                                    location(&[("energy", level.energy.to_string())]),
                                    format!("specialized rank {}", level.rank_specialized),
                                    format!("generic rank {}", level.rank_generic),
                                );
                            }
                        }
                    }
                }
            }
            Ok(report)
        }
        "crosscheck-universal" => {
            let maxenergy = get_u32(def, params, "maxenergy")?;
            let maxdegree = get_u32(def, params, "maxdegree")?;
            let mut report = Report::new("crosscheck-universal")
                .with_param("maxenergy", maxenergy)
                .with_param("maxdegree", maxdegree);
            for (c, h) in [
                (rat_int(3), rat(1, 5)),
                (rat(1, 2), rat(1, 16)),
                (rat(5, 2), rat_int(0)),
            ] {
                let module = VermaModule::rational(c, h);
                report.absorb(&universal_vs_verma_check(&module, maxenergy));
            }
            let space = FockSpace::vacuum();
            report.absorb(&space.crosscheck_universal(maxdegree));
            Ok(report)
        }
        "all" => {
            let mut report = Report::new("all");
            for sub in CATALOG.iter().filter(|d| d.name != "all") {
                let sub_report = run_check(sub.name, &Params::new(), seed)?;
                report.absorb(&sub_report);
            }
            Ok(report)
        }
        other => Err(UsageError(format!("unknown check {other}"))),
    }
}
