use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use shellkit::format::{parse_listing, BlockMark, Listing, Tag};
use shellkit::search::SearchConfig;
use shellkit::{
    betti_reduced, echo, echo_shelling, extension_candidates, find_shelling, induced_link_shelling,
    is_austere, is_quiet, load_builtin, reisner_cm, remove_boundary_glued, verify_shelling,
    verify_shelling_bruteforce, Complex, Error, Face, SearchOutcome, ShellingOrder, StepClass,
};

use crate::{Cli, Command};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail | Status::Inconclusive => 1,
            Status::Error => 2,
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    /// Complex or order produced by the command, emitted as a listing.
    #[serde(skip)]
    pub artifact: Option<Listing>,
}

impl CommandResult {
    fn new(command: &str, status: Status, payload: Value) -> Self {
        CommandResult {
            command: command.to_string(),
            status,
            payload,
            diagnostics: Vec::new(),
            artifact: None,
        }
    }

    fn with_artifact(mut self, listing: Listing) -> Self {
        self.artifact = Some(listing);
        self
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Fvector { .. } => "fvector",
        Command::Hvector { .. } => "hvector",
        Command::Nonfaces { .. } => "nonfaces",
        Command::Skeleton { .. } => "skeleton",
        Command::Complement { .. } => "complement",
        Command::Link { .. } => "link",
        Command::Cone { .. } => "cone",
        Command::VerifyShelling { .. } => "verify-shelling",
        Command::FindShelling { .. } => "find-shelling",
        Command::IsAustere { .. } => "is-austere",
        Command::IsQuiet { .. } => "is-quiet",
        Command::Echo { .. } => "echo",
        Command::EchoShelling { .. } => "echo-shelling",
        Command::ExtendCandidates { .. } => "extend-candidates",
        Command::RemoveGlued { .. } => "remove-glued",
        Command::Homology { .. } => "homology",
        Command::ReisnerCm { .. } => "reisner-cm",
        Command::Counterexample { .. } => "counterexample",
        Command::CertifySimon => "certify-simon",
    }
}

pub fn run(cli: &Cli) -> CommandResult {
    let name = command_name(&cli.command);
    match dispatch(cli, name) {
        Ok(r) => r,
        Err(e) => CommandResult::new(name, Status::Error, json!({ "error": e.to_string() })),
    }
}

/// Reads a listing from a file, falling back to a built-in dataset name.
fn read_listing(input: &str) -> Result<Listing, Error> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)?;
        return parse_listing(&text);
    }
    match load_builtin(input) {
        Ok(ds) => Ok(ds.listing),
        Err(Error::UnknownDataset(_)) => Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("`{input}` is neither a readable file nor a built-in dataset"),
        ))),
        Err(e) => Err(e),
    }
}

fn read_complex(input: &str) -> Result<Complex, Error> {
    read_listing(input)?.to_complex()
}

fn read_order(input: &str) -> Result<ShellingOrder, Error> {
    read_listing(input)?.to_order()
}

fn parse_face(s: &str) -> Result<Face, Error> {
    let ids: Result<Vec<u32>, _> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>())
        .collect();
    let ids = ids.map_err(|_| Error::Parse {
        line: 0,
        message: format!("bad face `{s}`"),
    })?;
    Face::from_vertices(ids)
}

fn complex_summary(c: &Complex) -> Value {
    json!({
        "n": c.n(),
        "d": c.dim(),
        "facets": c.facet_count(),
    })
}

fn order_listing(order: &ShellingOrder, glued: &[usize]) -> Listing {
    let mut listing = Listing::from_order(order);
    for &i in glued {
        listing.entries[i].tag = Some(Tag::Blue);
    }
    listing
}

fn dispatch(cli: &Cli, name: &str) -> Result<CommandResult, Error> {
    let r = match &cli.command {
        Command::Fvector { input } => {
            let c = read_complex(input)?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "complex": complex_summary(&c), "f_vector": c.f_vector() }),
            )
        }
        Command::Hvector { input } => {
            let c = read_complex(input)?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "complex": complex_summary(&c), "f_vector": c.f_vector(), "h_vector": c.h_vector() }),
            )
        }
        Command::Nonfaces { input } => {
            let c = read_complex(input)?;
            let nf = c.minimal_nonfaces();
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "count": nf.len(), "minimal_nonfaces": nf }),
            )
        }
        Command::Skeleton { d, n } => {
            let c = Complex::skeleton(*d, *n)?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "complex": complex_summary(&c) }),
            )
            .with_artifact(Listing::from_complex(&c))
        }
        Command::Complement { input } => {
            let c = read_complex(input)?.complement();
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "complex": complex_summary(&c) }),
            )
            .with_artifact(Listing::from_complex(&c))
        }
        Command::Link { input, face } => {
            let f = parse_face(face)?;
            let c = read_complex(input)?.link(f)?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "face": f, "complex": complex_summary(&c), "ambient": c.ambient() }),
            )
            .with_artifact(Listing::from_complex(&c))
        }
        Command::Cone { input } => {
            let c = read_complex(input)?.cone()?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "apex": c.n(), "complex": complex_summary(&c) }),
            )
            .with_artifact(Listing::from_complex(&c))
        }
        Command::VerifyShelling { input, brute_force } => {
            let order = read_order(input)?;
            let report = if *brute_force {
                verify_shelling_bruteforce(&order)
            } else {
                verify_shelling(&order)
            };
            CommandResult::new(
                name,
                Status::from_bool(report.valid),
                json!({
                    "valid": report.valid,
                    "steps": order.len(),
                    "complete": order.is_complete(),
                    "failing_step": report.failing_step,
                    "boundary_glued": report.boundary_glued_steps.len(),
                    "boundary_glued_steps": report.boundary_glued_steps,
                    "restriction_faces": report.restriction_faces,
                }),
            )
        }
        Command::FindShelling { input } => {
            let c = read_complex(input)?;
            let config = SearchConfig {
                budget: cli.budget,
                workers: cli.workers,
            };
            match find_shelling(&c, config)? {
                SearchOutcome::Found(order) => {
                    let glued = verify_shelling(&order).boundary_glued_steps;
                    CommandResult::new(
                        name,
                        Status::Pass,
                        json!({ "verdict": "found", "steps": order.steps() }),
                    )
                    .with_artifact(order_listing(&order, &glued))
                }
                SearchOutcome::NoShelling { explored } => CommandResult::new(
                    name,
                    Status::Fail,
                    json!({ "verdict": "none", "explored": explored }),
                ),
                SearchOutcome::Inconclusive { explored } => CommandResult::new(
                    name,
                    Status::Inconclusive,
                    json!({ "verdict": "inconclusive", "explored": explored, "budget": cli.budget }),
                ),
            }
        }
        Command::IsAustere { input } => {
            let c = read_complex(input)?;
            let v = is_austere(&c)?;
            CommandResult::new(name, Status::from_bool(v.austere), json!(v))
        }
        Command::IsQuiet { input } => {
            let c = read_complex(input)?;
            let v = is_quiet(&c)?;
            CommandResult::new(
                name,
                Status::from_bool(v.quiet),
                json!({ "quiet": v.quiet, "witness": v.witness(), "violation": v.violation }),
            )
        }
        Command::Echo { input } => {
            let g = read_complex(input)?;
            let e = echo(&g)?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "complex": complex_summary(&e), "f_vector": e.f_vector(), "h_vector": e.h_vector() }),
            )
            .with_artifact(Listing::from_complex(&e))
        }
        Command::EchoShelling { input, order } => {
            echo_shelling_cmd(cli, name, input, order.as_deref())?
        }
        Command::ExtendCandidates { input, pool } => {
            let c = read_complex(input)?;
            let mut skipped = 0;
            let pool = match pool {
                Some(path) => {
                    let faces = read_listing(path)?.faces();
                    let total = faces.len();
                    let fresh: Vec<Face> = faces.into_iter().filter(|&f| !c.has_facet(f)).collect();
                    skipped = total - fresh.len();
                    Some(fresh)
                }
                None => None,
            };
            let cands = extension_candidates(&c, pool.as_deref())?;
            let mut r = CommandResult::new(
                name,
                Status::Pass,
                json!({ "count": cands.len(), "candidates": cands }),
            );
            if skipped > 0 {
                r.diagnostics.push(format!(
                    "skipped {skipped} pool faces that are already facets"
                ));
            }
            r
        }
        Command::RemoveGlued { input } => {
            let order = read_order(input)?;
            let (reduced, sub) = remove_boundary_glued(&order)?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({
                    "removed": order.len() - sub.len(),
                    "complex": complex_summary(&reduced),
                    "f_vector": reduced.f_vector(),
                    "h_vector": reduced.h_vector(),
                }),
            )
            .with_artifact(Listing::from_order(&sub))
        }
        Command::Homology { input } => {
            let c = read_complex(input)?;
            let b = betti_reduced(&c, cli.p)?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "p": cli.p, "first_degree": -1, "betti": b.values }),
            )
        }
        Command::ReisnerCm { input } => {
            let c = read_complex(input)?;
            let v = reisner_cm(&c, cli.p)?;
            let witness = v
                .witness
                .map(|(f, deg)| json!({ "face": f, "degree": deg }));
            CommandResult::new(
                name,
                Status::from_bool(v.cohen_macaulay),
                json!({ "p": cli.p, "cohen_macaulay": v.cohen_macaulay, "witness": witness }),
            )
        }
        Command::Counterexample { name: ds } => {
            let d = load_builtin(ds)?;
            CommandResult::new(
                name,
                Status::Pass,
                json!({ "name": d.name, "note": d.note, "complex": complex_summary(&d.complex), "expected": d.expected }),
            )
            .with_artifact(d.listing)
        }
        Command::CertifySimon => certify_simon(name)?,
    };
    Ok(r)
}

fn echo_shelling_cmd(
    cli: &Cli,
    name: &str,
    input: &str,
    order: Option<&str>,
) -> Result<CommandResult, Error> {
    let listing = read_listing(input)?;
    let g = listing.to_complex()?;
    let mut diagnostics = Vec::new();
    let order = match order {
        Some(path) => read_order(path)?,
        None => {
            let in_file = ShellingOrder::new(g.clone(), listing.faces())?;
            if verify_shelling(&in_file).valid {
                in_file
            } else {
                diagnostics.push("input line order is not a shelling; searching".to_string());
                let config = SearchConfig {
                    budget: cli.budget,
                    workers: cli.workers,
                };
                match find_shelling(&g, config)? {
                    SearchOutcome::Found(o) => o,
                    SearchOutcome::NoShelling { .. } => {
                        let mut r = CommandResult::new(
                            name,
                            Status::Fail,
                            json!({ "verdict": "input is not shellable" }),
                        );
                        r.diagnostics = diagnostics;
                        return Ok(r);
                    }
                    SearchOutcome::Inconclusive { explored } => {
                        let mut r = CommandResult::new(
                            name,
                            Status::Inconclusive,
                            json!({ "verdict": "inconclusive", "explored": explored }),
                        );
                        r.diagnostics = diagnostics;
                        return Ok(r);
                    }
                }
            }
        }
    };
    if order.complex() != &g {
        return Err(Error::Parse {
            line: 0,
            message: "order does not shell the input complex".into(),
        });
    }
    let generated = match echo_shelling(&order) {
        Ok(s) => s,
        Err(e @ Error::NotContractible { .. }) => {
            let mut r = CommandResult::new(name, Status::Fail, json!({ "error": e.to_string() }));
            r.diagnostics.push(e.to_string());
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    let mut listing = order_listing(&generated.order, &generated.boundary_glued_steps);
    listing.blocks = generated
        .blocks
        .iter()
        .map(|b| BlockMark {
            start: b.start,
            source: b.source,
            tag: b.class.color().parse().ok(),
        })
        .collect();
    let classes: Vec<&StepClass> = generated.blocks.iter().map(|b| &b.class).collect();
    let mut r = CommandResult::new(
        name,
        Status::Pass,
        json!({
            "steps": generated.order.len(),
            "boundary_glued": generated.boundary_glued_steps.len(),
            "blocks": generated.blocks.iter().map(|b| json!({ "source": b.source, "len": b.len })).collect::<Vec<_>>(),
            "classes": classes,
        }),
    )
    .with_artifact(listing);
    r.diagnostics = diagnostics;
    Ok(r)
}

#[derive(Serialize)]
struct Certificate {
    check: &'static str,
    ok: bool,
    detail: String,
}

/// Runs the full counterexample pipeline and reports every certificate.
fn certify_simon(name: &str) -> Result<CommandResult, Error> {
    let mut certs = Vec::new();
    let mut push = |check: &'static str, ok: bool, detail: String| {
        certs.push(Certificate { check, ok, detail });
        ok
    };

    let quiet8 = load_builtin("quiet8")?.complex;
    let order = load_builtin("quiet8_shelling")?
        .shelling
        .ok_or_else(|| Error::Internal("quiet8_shelling carries no order".into()))?;
    let q = is_quiet(&quiet8)?;
    push("quiet", q.quiet, format!("violation: {:?}", q.violation));
    let report = verify_shelling(&order);
    push(
        "base shelling",
        report.valid && order.complex() == &quiet8 && order.is_complete(),
        format!("{} steps", order.len()),
    );
    let h_base = quiet8.h_vector();
    push(
        "base contractible",
        report.boundary_glued_steps.is_empty() && h_base.last() == 0,
        format!("f={} h={}", quiet8.f_vector(), h_base),
    );

    let e = echo(&quiet8)?;
    let (f_echo, h_echo) = (e.f_vector(), e.h_vector());
    push(
        "echo",
        e.facet_count() == 280,
        format!("{} facets, f={f_echo} h={h_echo}", e.facet_count()),
    );
    let generated = echo_shelling(&order)?;
    let brute = verify_shelling_bruteforce(&generated.order);
    push(
        "echo shelling",
        generated.order.is_complete() && brute.valid,
        format!("{} steps verified by both checks", generated.order.len()),
    );
    let glued = generated.boundary_glued_steps.len();
    push(
        "echo glued count",
        glued as i64 == h_echo.last(),
        format!("{glued} boundary-glued steps, h_4 = {}", h_echo.last()),
    );
    let a = is_austere(&e)?;
    push(
        "echo austere",
        a.austere,
        format!("witness: {:?}", a.witness),
    );
    let cands = extension_candidates(&e, None)?;
    push(
        "echo not shelling completable",
        cands.is_empty(),
        format!("{} extension candidates", cands.len()),
    );

    let (reduced, sub) = remove_boundary_glued(&generated.order)?;
    let (f_red, h_red) = (reduced.f_vector(), reduced.h_vector());
    push(
        "contractible reduction",
        reduced.facet_count() == 175 && h_red.last() == 0 && verify_shelling(&sub).valid,
        format!("{} facets, f={f_red} h={h_red}", reduced.facet_count()),
    );
    let removed: Vec<Face> = e
        .facets()
        .iter()
        .copied()
        .filter(|&f| !reduced.has_facet(f))
        .collect();
    let red_cands = extension_candidates(&reduced, None)?;
    push(
        "reduction not shelling completable",
        red_cands == removed,
        format!(
            "{} candidates, all among the {} removed facets",
            red_cands.len(),
            removed.len()
        ),
    );

    let cone = reduced.cone()?;
    let apex = Face::vertex(cone.n());
    let coned = ShellingOrder::new(
        cone.clone(),
        sub.steps().iter().map(|f| f.union(apex)).collect(),
    )?;
    let induced = induced_link_shelling(&coned, apex)?;
    push(
        "cone lift",
        cone.link(apex)? == reduced && induced == sub && verify_shelling(&coned).valid,
        format!(
            "dimension {} on {} vertices, {} facets",
            cone.dim(),
            cone.n(),
            cone.facet_count()
        ),
    );

    let ok = certs.iter().all(|c| c.ok);
    Ok(CommandResult::new(
        name,
        Status::from_bool(ok),
        json!({
            "echo": { "f_vector": f_echo, "h_vector": h_echo },
            "contractible": { "f_vector": f_red, "h_vector": h_red },
            "certificates": certs,
        }),
    ))
}
