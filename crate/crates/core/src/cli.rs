//! Command-line front end.
//!
//! Every subcommand renders a complete document into memory before anything
//! is written, so failures never leave partial output behind.
//!
//! Exit codes: 0 on success, 1 on a domain error (for example a cutoff too
//! small for the requested rank), 2 on invalid flags.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::base_change::{bc_component, induced_k_map, is_proper};
use crate::error::Error;
use crate::ktheory::{k_complex, k_real, Degree, GeneratorRef, IndexFamily, KGroups};
use crate::levi::{enumerate_levi_shapes, weyl_group, IsotropyDescriptor};
use crate::param_space::{
    complex_components, cone_chart, real_components, ComplexComponent, Component, ComponentKind,
    ConeChart, OrbitSpace,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "tempered-dual",
    version,
    about = "Catalogs, K-theory and base change for the tempered duals of GL(n,R) and GL(n,C)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Levi shapes n = 2q + r and their Weyl groups
    Partitions(CommonArgs),
    /// Components of the tempered dual
    Components(CommonArgs),
    /// K-groups of the reduced group C*-algebra
    Ktheory(CommonArgs),
    /// Base change on components (parameter maps)
    Bc(CommonArgs),
    /// Base change on K-theory generators
    Kmap(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Rank of the general linear group
    #[arg(long = "n")]
    n: usize,
    /// Largest discrete label enumerated
    #[arg(long, default_value_t = 4)]
    cutoff: usize,
    #[arg(long, value_enum, default_value_t = FieldArg::Real)]
    field: FieldArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DocumentKind {
    Partitions,
    RealComponents,
    ComplexComponents,
    KReal,
    KComplex,
    Bc,
    Kmap,
}

/// Top-level JSON document.
#[derive(Debug, Serialize)]
pub struct CatalogDocument<P: Serialize> {
    pub tool_version: &'static str,
    pub n: usize,
    pub cutoff: usize,
    pub kind: DocumentKind,
    pub payload: P,
}

#[derive(Debug, Serialize)]
struct ShapeRecord {
    q: usize,
    r: usize,
}

#[derive(Debug, Serialize)]
struct PartitionRecord {
    label: String,
    q: usize,
    r: usize,
    dimension: usize,
    weyl_group: String,
    weyl_factor_degrees: Vec<usize>,
    weyl_order: u128,
}

#[derive(Debug, Serialize)]
struct PartitionsPayload {
    count: usize,
    partitions: Vec<PartitionRecord>,
}

#[derive(Debug, Serialize)]
struct ComponentRecord {
    key: String,
    shape: ShapeRecord,
    gl2_labels: Vec<u32>,
    gl1_labels: Vec<u8>,
    dimension: usize,
    kind: &'static str,
    isotropy: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chart: Option<ConeChart>,
}

#[derive(Debug, Serialize)]
struct ComplexComponentRecord {
    key: String,
    labels: Vec<i64>,
    dimension: usize,
    kind: &'static str,
    isotropy: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chart: Option<ConeChart>,
}

#[derive(Debug, Serialize)]
struct ComponentsPayload<R: Serialize> {
    count: usize,
    free: usize,
    cones: usize,
    components: Vec<R>,
}

#[derive(Debug, Serialize)]
struct ClosedFormRecord {
    description: String,
    #[serde(flatten)]
    family: IndexFamily,
    count_at_cutoff: u128,
}

#[derive(Debug, Serialize)]
struct KGroupRecord {
    degree: Degree,
    rank: usize,
    closed_form: ClosedFormRecord,
    generators: Vec<GeneratorRef>,
}

#[derive(Debug, Serialize)]
struct KTheoryPayload {
    field: &'static str,
    ranks: BTreeMap<String, usize>,
    groups: Vec<KGroupRecord>,
}

#[derive(Debug, Serialize)]
struct ParameterMapRecord {
    source: String,
    target: String,
    target_kind: &'static str,
    row_labels: Vec<i64>,
    matrix: Vec<Vec<i64>>,
    proper: bool,
}

#[derive(Debug, Serialize)]
struct BcPayload {
    count: usize,
    all_proper: bool,
    maps: Vec<ParameterMapRecord>,
}

#[derive(Debug, Serialize)]
struct AssignmentRecord {
    generator: GeneratorRef,
    degree: Degree,
    image: BTreeMap<GeneratorRef, i64>,
}

#[derive(Debug, Serialize)]
struct KmapPayload {
    summary: String,
    zero_map: bool,
    nonzero_assignments: usize,
    complex_generators: BTreeMap<String, usize>,
    real_generators: BTreeMap<String, usize>,
    assignments: Vec<AssignmentRecord>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Domain(err.to_string())
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };

    match dispatch(&cli.command) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "error: failed to write output: {e}");
                1
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nUsage: tempered-dual <COMMAND> --n <N> [--cutoff <CUTOFF>] [--field <real|complex>] [--format <json|table>]");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Partitions(args) => {
            real_only(args, "partitions")?;
            partitions(args)
        }
        Command::Components(args) => match args.field {
            FieldArg::Real => components_real(args),
            FieldArg::Complex => components_complex(args),
        },
        Command::Ktheory(args) => ktheory(args),
        Command::Bc(args) => {
            real_only(args, "bc")?;
            bc(args)
        }
        Command::Kmap(args) => {
            real_only(args, "kmap")?;
            kmap(args)
        }
    }
}

fn real_only(args: &CommonArgs, name: &str) -> Result<(), Failure> {
    if args.field == FieldArg::Complex {
        return Err(Failure::Usage(format!(
            "`{name}` is indexed by real Levi data and does not accept --field complex"
        )));
    }
    Ok(())
}

fn emit<P: Serialize>(
    args: &CommonArgs,
    kind: DocumentKind,
    payload: P,
    table: impl FnOnce(&P) -> String,
) -> Result<String, Failure> {
    match args.format {
        Format::Json => {
            let doc = CatalogDocument {
                tool_version: TOOL_VERSION,
                n: args.n,
                cutoff: args.cutoff,
                kind,
                payload,
            };
            let mut text = serde_json::to_string_pretty(&doc)
                .map_err(|e| Failure::Domain(format!("serialization failed: {e}")))?;
            text.push('\n');
            Ok(text)
        }
        Format::Table => {
            let kind_name = serde_json::to_value(kind)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default();
            Ok(format!(
                "# {kind_name} n={} cutoff={}\n{}",
                args.n,
                args.cutoff,
                table(&payload)
            ))
        }
    }
}

fn partitions(args: &CommonArgs) -> Result<String, Failure> {
    let records: Vec<PartitionRecord> = enumerate_levi_shapes(args.n)?
        .into_iter()
        .map(|shape| {
            let weyl = weyl_group(shape);
            PartitionRecord {
                label: shape.to_string(),
                q: shape.q,
                r: shape.r,
                dimension: shape.dimension(),
                weyl_group: weyl.to_string(),
                weyl_order: weyl.order(),
                weyl_factor_degrees: weyl.factor_degrees,
            }
        })
        .collect();
    let payload = PartitionsPayload {
        count: records.len(),
        partitions: records,
    };
    emit(args, DocumentKind::Partitions, payload, |p| {
        render_table(
            &["partition", "q", "r", "dim", "weyl", "order"],
            p.partitions.iter().map(|r| {
                vec![
                    r.label.clone(),
                    r.q.to_string(),
                    r.r.to_string(),
                    r.dimension.to_string(),
                    r.weyl_group.clone(),
                    r.weyl_order.to_string(),
                ]
            }),
        )
    })
}

fn isotropy_of(kind: &ComponentKind) -> Vec<usize> {
    match kind {
        ComponentKind::Free => Vec::new(),
        ComponentKind::Cone(IsotropyDescriptor { multiplicities }) => multiplicities.clone(),
    }
}

fn chart_of<C: OrbitSpace>(c: &C) -> Option<ConeChart> {
    (!c.is_free()).then(|| cone_chart(c))
}

fn real_record(c: &Component) -> ComponentRecord {
    ComponentRecord {
        key: c.key(),
        shape: ShapeRecord {
            q: c.shape.q,
            r: c.shape.r,
        },
        gl2_labels: c.orbit.gl2_labels().to_vec(),
        gl1_labels: c.orbit.gl1_labels().iter().map(|s| s.exponent()).collect(),
        dimension: c.dimension,
        kind: c.kind.name(),
        isotropy: isotropy_of(&c.kind),
        chart: chart_of(c),
    }
}

fn complex_record(c: &ComplexComponent) -> ComplexComponentRecord {
    ComplexComponentRecord {
        key: c.key(),
        labels: c.labels().to_vec(),
        dimension: c.dimension,
        kind: c.kind.name(),
        isotropy: isotropy_of(&c.kind),
        chart: chart_of(c),
    }
}

fn chart_cell(chart: &Option<ConeChart>) -> String {
    chart.map_or_else(
        || "-".to_string(),
        |c| format!("R^{} x [0,inf)^{}", c.num_lines, c.num_rays),
    )
}

fn components_real(args: &CommonArgs) -> Result<String, Failure> {
    let records: Vec<ComponentRecord> = real_components(args.n, args.cutoff)?
        .iter()
        .map(real_record)
        .collect();
    let free = records.iter().filter(|r| r.kind == "free").count();
    let payload = ComponentsPayload {
        count: records.len(),
        free,
        cones: records.len() - free,
        components: records,
    };
    emit(args, DocumentKind::RealComponents, payload, |p| {
        let mut text = format!("components={} free={} cones={}\n", p.count, p.free, p.cones);
        text.push_str(&render_table(
            &["key", "dim", "kind", "isotropy", "chart"],
            p.components.iter().map(|r| {
                vec![
                    r.key.clone(),
                    r.dimension.to_string(),
                    r.kind.to_string(),
                    join(&r.isotropy),
                    chart_cell(&r.chart),
                ]
            }),
        ));
        text
    })
}

fn components_complex(args: &CommonArgs) -> Result<String, Failure> {
    let records: Vec<ComplexComponentRecord> = complex_components(args.n, args.cutoff)?
        .iter()
        .map(complex_record)
        .collect();
    let free = records.iter().filter(|r| r.kind == "free").count();
    let payload = ComponentsPayload {
        count: records.len(),
        free,
        cones: records.len() - free,
        components: records,
    };
    emit(args, DocumentKind::ComplexComponents, payload, |p| {
        let mut text = format!("components={} free={} cones={}\n", p.count, p.free, p.cones);
        text.push_str(&render_table(
            &["key", "dim", "kind", "isotropy", "chart"],
            p.components.iter().map(|r| {
                vec![
                    r.key.clone(),
                    r.dimension.to_string(),
                    r.kind.to_string(),
                    join(&r.isotropy),
                    chart_cell(&r.chart),
                ]
            }),
        ));
        text
    })
}

fn ktheory_payload(groups: &KGroups, field: &'static str, cutoff: usize) -> KTheoryPayload {
    let records: Vec<KGroupRecord> = Degree::BOTH
        .into_iter()
        .map(|d| {
            let group = groups.degree(d);
            KGroupRecord {
                degree: d,
                rank: group.rank(),
                closed_form: ClosedFormRecord {
                    description: group.closed_form.to_string(),
                    family: group.closed_form,
                    count_at_cutoff: group.closed_form.count_at(cutoff),
                },
                generators: group.generators.clone(),
            }
        })
        .collect();
    KTheoryPayload {
        field,
        ranks: records
            .iter()
            .map(|r| (format!("k{}", r.degree), r.rank))
            .collect(),
        groups: records,
    }
}

fn ktheory(args: &CommonArgs) -> Result<String, Failure> {
    let (groups, field, kind) = match args.field {
        FieldArg::Real => (k_real(args.n, args.cutoff)?, "real", DocumentKind::KReal),
        FieldArg::Complex => {
            let groups = k_complex(args.n, args.cutoff)?;
            // only degree n mod 2 may carry generators
            let live = Degree::of_dimension(args.n);
            if groups.degree(live.other()).rank() != 0 || groups.degree(live).rank() == 0 {
                return Err(Failure::Domain(format!(
                    "parity self-check failed: ranks {:?} for n = {}",
                    groups.ranks(),
                    args.n
                )));
            }
            (groups, "complex", DocumentKind::KComplex)
        }
    };
    let payload = ktheory_payload(&groups, field, args.cutoff);
    emit(args, kind, payload, |p| {
        let mut text = render_table(
            &["group", "rank", "closed form", "count at cutoff"],
            p.groups.iter().map(|g| {
                vec![
                    format!("K{}", g.degree),
                    g.rank.to_string(),
                    g.closed_form.description.clone(),
                    g.closed_form.count_at_cutoff.to_string(),
                ]
            }),
        );
        for g in &p.groups {
            if g.generators.is_empty() {
                continue;
            }
            text.push_str(&format!("\ngenerators of K{}:\n", g.degree));
            for generator in &g.generators {
                text.push_str(&format!("  {generator}\n"));
            }
        }
        text
    })
}

fn bc(args: &CommonArgs) -> Result<String, Failure> {
    let maps: Vec<ParameterMapRecord> = real_components(args.n, args.cutoff)?
        .iter()
        .map(|c| {
            let m = bc_component(c);
            ParameterMapRecord {
                source: c.key(),
                target: m.target.key(),
                target_kind: m.target.kind.name(),
                proper: is_proper(&m),
                row_labels: m.row_labels,
                matrix: m.matrix,
            }
        })
        .collect();
    let payload = BcPayload {
        count: maps.len(),
        all_proper: maps.iter().all(|m| m.proper),
        maps,
    };
    emit(args, DocumentKind::Bc, payload, |p| {
        let mut text = format!("maps={} all_proper={}\n", p.count, p.all_proper);
        text.push_str(&render_table(
            &["source", "target", "target kind", "matrix", "proper"],
            p.maps.iter().map(|m| {
                vec![
                    m.source.clone(),
                    m.target.clone(),
                    m.target_kind.to_string(),
                    m.matrix
                        .iter()
                        .map(|row| format!("[{}]", join(row)))
                        .collect::<Vec<_>>()
                        .join(""),
                    m.proper.to_string(),
                ]
            }),
        ));
        text
    })
}

fn kmap(args: &CommonArgs) -> Result<String, Failure> {
    let map = induced_k_map(args.n, args.cutoff)?;
    let assignments: Vec<AssignmentRecord> = map
        .assignments
        .iter()
        .map(|(generator, class)| AssignmentRecord {
            generator: generator.clone(),
            degree: class.presentation.degree,
            image: class.coefficients().clone(),
        })
        .collect();
    let count_by_degree = |groups: &KGroups| -> BTreeMap<String, usize> {
        Degree::BOTH
            .into_iter()
            .map(|d| (format!("k{d}"), groups.degree(d).rank()))
            .collect()
    };
    let payload = KmapPayload {
        summary: if map.is_zero() {
            "zero map".to_string()
        } else {
            "nonzero map".to_string()
        },
        zero_map: map.is_zero(),
        nonzero_assignments: assignments.len(),
        complex_generators: count_by_degree(&map.complex),
        real_generators: count_by_degree(&map.real),
        assignments,
    };
    emit(args, DocumentKind::Kmap, payload, |p| {
        let mut text = format!(
            "{} ({} nonzero assignments)\n",
            p.summary, p.nonzero_assignments
        );
        if !p.assignments.is_empty() {
            text.push_str(&render_table(
                &["generator", "degree", "image"],
                p.assignments.iter().map(|a| {
                    let image = a
                        .image
                        .iter()
                        .map(|(g, c)| format!("{c}*[{g}]"))
                        .collect::<Vec<_>>()
                        .join(" + ");
                    vec![a.generator.to_string(), format!("K{}", a.degree), image]
                }),
            ));
        }
        text
    })
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn render_table(headers: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let rows: Vec<Vec<String>> = rows.collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut text = line(headers.to_vec());
    text.push_str(&line(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    for row in &rows {
        text.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    text
}
