//! End-to-end commands behind the `gemlink` binary. Each command reads its
//! inputs, writes its artifacts into `output_dir` and returns a short text
//! report. Identical inputs and configuration give byte-identical files.

use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::codecs::{
    blackboard_frame, dq_to_diagram, dq_to_map, from_diagram, linking_matrix, parse_dq, parse_gauss, realizable,
    serialize_gauss, to_diagram, LinkingMatrix,
};
use crate::error::{Error, Result};
use crate::geom3::{blowup_point, blowup_points, build_h1_diamond, cone, p3, shortcut, AxisFrame, BlowupVariant, Point3};
use crate::linkproj::{
    check_size_bound, diagram_svg, framings_from_cylinders, project_with, realize, Cylinder, GenericityTolerances,
    LinkDiagram, PLLink,
};
use crate::planar_map::{MoveLog, Side};
use crate::tutte::{embed_wing, embedding_json, embedding_svg, lift_to_halfplane, verify_rectilinear, Solver, TutteOptions};

/// Minimum distance between non-adjacent segments of an input link.
pub const LINK_CLEARANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineConfig {
    pub tolerance: f64,
    pub max_iters: Option<usize>,
    pub weight_multiplier: u32,
    pub seed: u64,
    pub solver: Solver,
    pub output_dir: PathBuf,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            tolerance: 1e-10,
            max_iters: None,
            weight_multiplier: 1,
            seed: 0,
            solver: Solver::Direct,
            output_dir: PathBuf::from("out"),
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::Argument(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.weight_multiplier < 1 {
            return Err(Error::Argument("weight multiplier must be at least 1".into()));
        }
        Ok(())
    }

    fn tutte(&self) -> TutteOptions {
        TutteOptions { solver: self.solver, max_iters: self.max_iters, tol: self.tolerance }
    }

    /// Seeded projection direction, tilted away from every axis.
    pub fn direction(&self) -> Point3 {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        p3(rng.gen_range(-0.4..0.4), rng.gen_range(-0.4..0.4), 1.0)
    }

    fn write(&self, name: &str, contents: &str) -> Result<PathBuf> {
        fs::create_dir_all(&self.output_dir)?;
        let path = self.output_dir.join(name);
        fs::write(&path, contents)?;
        Ok(path)
    }
}

/// Text summary of a command plus the files it wrote.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub lines: Vec<String>,
    pub files: Vec<PathBuf>,
}

impl Report {
    fn say(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        for p in &self.files {
            writeln!(f, "wrote {}", p.display())?;
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Replays a move log, draws both wings and assembles the cone complex over
/// them.
pub fn cmd_wings(movelog: &Path, cfg: &PipelineConfig) -> Result<Report> {
    cfg.validate()?;
    let log = MoveLog::parse(&read(movelog)?)?;
    let state = log.final_state()?;
    let mut rep = Report::default();
    rep.say(format!("n = {}, {} moves", log.n, log.moves.len()));
    let mut lifts = Vec::new();
    for side in [Side::Left, Side::Right] {
        let name = match side {
            Side::Left => "left",
            Side::Right => "right",
        };
        let map = state.side(side);
        let emb = embed_wing(&state, side, cfg.weight_multiplier, cfg.tutte())?;
        let check = verify_rectilinear(map, &emb);
        if !check.ok {
            return Err(Error::Embedding(format!(
                "{name} wing drawing has {} crossing edge pairs",
                check.crossings.len()
            )));
        }
        rep.say(format!(
            "{name} wing: {} vertices, {} edges, residual {:.3e}",
            map.vertex_count(),
            map.edge_count(),
            emb.residual
        ));
        rep.files.push(cfg.write(&format!("wing_{name}.json"), &pretty(&embedding_json(map, &emb))?)?);
        rep.files.push(cfg.write(&format!("wing_{name}.svg"), &embedding_svg(map, &emb))?);
        lifts.push(lift_to_halfplane(map, &emb, side)?);
    }
    let roots = [state.root(Side::Left), state.root(Side::Right)];
    let frame = AxisFrame::standard(log.n, lifts[0][&roots[0]], lifts[1][&roots[1]]);
    let cx = build_h1_diamond(&state, &lifts[0], &lifts[1], &frame)?;
    rep.say(format!("cone complex: {} triangles, embedded", cx.simplices2.len()));
    rep.files.push(cfg.write("h1.obj", &cx.to_obj())?);
    Ok(rep)
}

#[derive(Deserialize)]
struct ConeInput {
    apex: Point3,
    base: Vec<Point3>,
}

/// Cone from `{"apex": [x,y,z], "base": [[x,y,z], ...]}` over the polyline
/// `base`.
pub fn cmd_cone(input: &Path, cfg: &PipelineConfig) -> Result<Report> {
    let inp: ConeInput = serde_json::from_str(&read(input)?)?;
    let tris = cone(inp.apex, &inp.base)?;
    let mut rep = Report::default();
    rep.say(format!("{} triangles", tris.len()));
    let mut obj = String::new();
    for p in std::iter::once(inp.apex).chain(inp.base.iter().copied()) {
        obj.push_str(&format!("v {} {} {}\n", p.x, p.y, p.z));
    }
    for i in 0..tris.len() {
        obj.push_str(&format!("f 1 {} {}\n", i + 2, i + 3));
    }
    rep.files.push(cfg.write("cone.json", &pretty(&json!({ "triangles": tris }))?)?);
    rep.files.push(cfg.write("cone.obj", &obj)?);
    Ok(rep)
}

#[derive(Deserialize)]
struct BlowupInput {
    z2: Point3,
    chi: Vec<Point3>,
    #[serde(default)]
    omega: Vec<Point3>,
    variant: BlowupVariant,
    j: Option<usize>,
}

/// Midpoint placements for a tail blow-up from
/// `{"z2", "chi", "omega", "variant", "j"?}`.
pub fn cmd_blowup_points(input: &Path, cfg: &PipelineConfig) -> Result<Report> {
    let inp: BlowupInput = serde_json::from_str(&read(input)?)?;
    let points = match inp.j {
        Some(j) => vec![blowup_point(inp.z2, &inp.chi, &inp.omega, inp.variant, j)?],
        None => blowup_points(inp.z2, &inp.chi, &inp.omega, inp.variant)?,
    };
    let mut rep = Report::default();
    rep.say(format!("{} placements", points.len()));
    rep.files.push(cfg.write("blowup.json", &pretty(&points)?)?);
    Ok(rep)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LinkInput {
    Cylinders { cylinders: Vec<Cylinder> },
    Curves(PLLink),
}

/// Reads a link from polylines (`{"components": ...}`) or from cylinders
/// (`{"cylinders": ...}`), the latter carrying framings.
pub fn load_link(path: &Path) -> Result<PLLink> {
    let inp: LinkInput = serde_json::from_str(&read(path)?)?;
    let link = match inp {
        LinkInput::Cylinders { cylinders } => framings_from_cylinders(&cylinders, 0)?,
        LinkInput::Curves(mut l) => {
            l.framing.resize(l.components.len(), None);
            l
        }
    };
    link.check_structure()?;
    Ok(link)
}

fn write_matrix(cfg: &PipelineConfig, rep: &mut Report, m: &LinkingMatrix) -> Result<()> {
    rep.say(format!("linking matrix ({:?} on the diagonal):", m.diagonal));
    for row in m.to_csv().lines() {
        rep.say(format!("  {row}"));
    }
    rep.files.push(cfg.write("linking_matrix.csv", &m.to_csv())?);
    rep.files.push(cfg.write("linking_matrix.json", &pretty(m)?)?);
    Ok(())
}

fn framings_of(link: &PLLink) -> Option<Vec<i64>> {
    link.framing.iter().copied().collect()
}

/// Projects a link, then writes its Gauss code, linking matrix and diagram.
pub fn cmd_link(input: &Path, cfg: &PipelineConfig) -> Result<Report> {
    let link = load_link(input)?;
    link.validate(LINK_CLEARANCE)?;
    let (d, dir) = project_with(&link, cfg.direction(), cfg.seed, &GenericityTolerances::default())?;
    let mut rep = Report::default();
    rep.say(format!(
        "{} components, {} segments, {} crossings (direction {:.4} {:.4} {:.4})",
        link.component_count(),
        link.segment_count(),
        d.crossing_count(),
        dir.x,
        dir.y,
        dir.z
    ));
    let code = serialize_gauss(&from_diagram(&d));
    rep.say(format!("gauss: {code}"));
    rep.files.push(cfg.write("link.gauss", &(code + "\n"))?);
    let m = linking_matrix(&d, framings_of(&link).as_deref())?;
    write_matrix(cfg, &mut rep, &m)?;
    rep.files.push(cfg.write("diagram.svg", &diagram_svg(&d)?)?);
    Ok(rep)
}

/// Validates a duet/quintet file and reports its diagram invariants.
pub fn cmd_dq(input: &Path, cfg: &PipelineConfig) -> Result<Report> {
    let file = parse_dq(&read(input)?)?;
    let map = dq_to_map(&file)?;
    let faces = map.trace_faces()?.len();
    let genus = map.genus()?;
    let d = dq_to_diagram(&file)?;
    let mut rep = Report::default();
    rep.say("OK".to_string());
    rep.say(format!(
        "{} crossings, {} legs, {} quintets, {} components",
        file.crossing_count(),
        2 * file.duets.len(),
        file.quintets.len(),
        file.component_count()
    ));
    rep.say(format!("V = {}, E = {}, F = {faces}, genus {genus}", map.vertex_count(), map.edge_count()));
    let code = serialize_gauss(&from_diagram(&d));
    rep.files.push(cfg.write("dq.gauss", &(code + "\n"))?);
    write_matrix(cfg, &mut rep, &linking_matrix(&d, None)?)?;
    Ok(rep)
}

/// Band around each component pushed up along `z`; on a realized diagram
/// this measures the blackboard framing.
pub fn vertical_cylinders(link: &PLLink) -> Vec<Cylinder> {
    let h = link
        .components
        .iter()
        .flatten()
        .map(|p| p.z.abs())
        .filter(|&z| z > 0.0)
        .fold(f64::INFINITY, f64::min);
    let eps = if h.is_finite() { 0.5 * h } else { 0.1 };
    link.components.iter().map(|c| Cylinder::band(c, p3(0.0, 0.0, eps))).collect()
}

/// Options for [`cmd_gauss`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GaussOptions {
    /// Blackboard-frame the diagram to these framings first.
    pub frame: Option<Vec<i64>>,
    /// Also write a realization in 3-space and its vertical cylinders.
    pub realize: bool,
}

/// Checks realizability of a Gauss code and, if planar, reports its linking
/// matrix; optionally frames and realizes it.
pub fn cmd_gauss(input: &Path, opts: &GaussOptions, cfg: &PipelineConfig) -> Result<Report> {
    let code = parse_gauss(&read(input)?)?;
    let mut rep = Report::default();
    rep.say(format!("{} components, {} crossings", code.components.len(), code.crossing_count()));
    let ok = realizable(&code)?;
    rep.say(format!("realizable: {ok}"));
    if !ok {
        return Ok(rep);
    }
    let mut d: LinkDiagram = to_diagram(&code)?;
    if let Some(f) = &opts.frame {
        d = blackboard_frame(&d, f)?;
        let framed = serialize_gauss(&from_diagram(&d));
        rep.say(format!("blackboard framed: {framed}"));
        rep.files.push(cfg.write("framed.gauss", &(framed + "\n"))?);
    }
    write_matrix(cfg, &mut rep, &linking_matrix(&d, None)?)?;
    if opts.realize {
        let link = realize(&d)?;
        rep.say(format!("realized with {} segments", link.segment_count()));
        rep.files.push(cfg.write("realized.json", &pretty(&link)?)?);
        let cyl = vertical_cylinders(&link);
        rep.files.push(cfg.write("cylinders.json", &pretty(&json!({ "cylinders": cyl }))?)?);
    }
    Ok(rep)
}

/// Shortcuts a link and checks that its linking matrix survives.
pub fn cmd_simplify(input: &Path, cfg: &PipelineConfig) -> Result<Report> {
    let link = load_link(input)?;
    link.validate(LINK_CLEARANCE)?;
    let out = shortcut(&link, &[]);
    let dir = cfg.direction();
    let before = crate::linkproj::linking_numbers(&link, dir, cfg.seed)?;
    let after = crate::linkproj::linking_numbers(&out, dir, cfg.seed)?;
    let k = link.component_count();
    let same = (0..k).all(|i| (0..k).all(|j| i == j || before[i][j] == after[i][j]));
    if !same {
        return Err(Error::Embedding("shortcut changed a linking number".into()));
    }
    let mut rep = Report::default();
    rep.say(format!("segments: {} -> {}", link.segment_count(), out.segment_count()));
    rep.say("linking numbers unchanged".to_string());
    rep.files.push(cfg.write("simplified.json", &pretty(&out)?)?);
    Ok(rep)
}

/// Compares a link's segment count with `12 n^2`.
pub fn cmd_check_bounds(input: &Path, n: u64) -> Result<(bool, Report)> {
    let link = load_link(input)?;
    let ok = check_size_bound(&link, n);
    let mut rep = Report::default();
    rep.say(format!(
        "{} segments {} 12n^2 = {} (n = {n})",
        link.segment_count(),
        if ok { "<=" } else { ">" },
        12 * n * n
    ));
    Ok((ok, rep))
}
