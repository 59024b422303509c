use itertools::Itertools;

use super::{Format, OutputDocument, Payload};
use crate::capacities::Verdict;
use crate::rational::Rational;
use crate::toric_geometry::{Shape, ToricDomain};

pub const DISCREPANCY_NOTE: &str = "for E(3.5, 4) the formula c_k = min{T : Σ⌊T/a_i⌋ ≥ k} gives \
c_4 = 8 and c_7 = 14; the commonly quoted row lists 7.5 and 11, which are sums 3.5m + 4n rather than \
capacities. Values here follow the formula; pass --override to reproduce the quoted [c]_k row.";

pub struct Rendered {
    pub stdout: String,
    /// Lines for stderr (CSV keeps notes out of the data stream).
    pub stderr: Vec<String>,
}

fn dec(r: &Rational) -> String {
    r.to_decimal_string()
}

fn list(v: &[Rational]) -> String {
    v.iter().map(dec).join(", ")
}

pub fn describe_domain(d: &ToricDomain) -> String {
    match d.shape() {
        Shape::Ellipsoid { a } => format!("E({})", list(a)),
        Shape::Polydisk { a } => format!("P({})", list(a)),
        Shape::Ball { a, dimension } => format!("B^{}({})", 2 * dimension, dec(a)),
        Shape::Polytope { vertices } => format!(
            "X_Ω, Ω = conv{{{}}}",
            vertices.iter().map(|v| format!("({})", list(v))).join(", ")
        ),
    }
}

fn table(header: &[&str], rows: &[Vec<String>], left: bool) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| if left { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    out.push_str(&widths.iter().map(|w| "-".repeat(*w)).join("  "));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// A payload as a header line block plus a grid (for tabular payloads) or a
/// key/value list.
struct View {
    preamble: Vec<(String, String)>,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    left: bool,
}

fn view(payload: &Payload) -> View {
    let kv = |pairs: Vec<(&str, String)>| View {
        preamble: vec![],
        header: vec!["field", "value"],
        rows: pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect(),
        left: true,
    };
    match payload {
        Payload::Capacities(r) => View {
            preamble: vec![
                ("domain".into(), describe_domain(&r.domain)),
                ("method".into(), format!("{:?}", r.method).to_lowercase()),
            ],
            header: vec!["k", "c_k", "witness", "T"],
            rows: r
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.k.to_string(),
                        dec(&e.c_k),
                        e.witness_vector.iter().join(" "),
                        dec(&e.witness_t),
                    ]
                })
                .collect(),
            left: false,
        },
        Payload::Contact(r) => View {
            preamble: vec![
                ("domain".into(), describe_domain(&r.domain)),
                ("polar_inf_norm".into(), dec(&r.polar_inf_norm)),
                ("big".into(), r.big.to_string()),
            ],
            header: vec!["k", "c_k", "c_k_source", "contact_c_k", "spf"],
            rows: r
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.k.to_string(),
                        dec(&e.c_k),
                        format!("{:?}", e.c_k_source).to_lowercase(),
                        e.contact_c_k.to_string(),
                        e.spf.to_string(),
                    ]
                })
                .collect(),
            left: false,
        },
        Payload::Structure(r) => {
            let mut pairs = vec![
                ("domain", describe_domain(&r.domain)),
                ("T", dec(&r.t)),
                ("ell", r.ell.to_string()),
                ("p_ell", r.p_ell.to_string()),
                ("admissibility_bound", dec(&r.admissibility_bound)),
                ("admissible", r.admissible.to_string()),
            ];
            if let Some(inv) = &r.invariants {
                pairs.extend([
                    ("lattice_max", inv.lattice_max.to_string()),
                    ("min_degree", inv.min_degree.to_string()),
                    (
                        "torsion_window",
                        inv.torsion_window
                            .map_or("none".into(), |w| format!("[{}, {}]", w.lo, w.hi)),
                    ),
                    ("free_rank", inv.free_rank.to_string()),
                    ("torsion_free", opt(&inv.torsion_free)),
                    (
                        "bouquet_corners",
                        format!("{} ({})", inv.bouquet_corners.iter().join(" "), inv.bouquet_label),
                    ),
                ]);
                for eta in &inv.eta_exponents {
                    pairs.push(("eta", eta.statement.clone()));
                }
            }
            kv(pairs)
        }
        Payload::Obstruction(r) => {
            let mut pairs = vec![
                ("source", describe_domain(&r.source)),
                ("target", describe_domain(&r.target)),
                ("kind", format!("{:?}", r.kind).to_lowercase()),
                ("k_max", r.k_max.to_string()),
            ];
            match &r.verdict {
                Verdict::Obstructed {
                    first_k,
                    source_value,
                    target_value,
                } => pairs.extend([
                    ("verdict", "obstructed".into()),
                    ("first_k", first_k.to_string()),
                    ("source_value", dec(source_value)),
                    ("target_value", dec(target_value)),
                ]),
                Verdict::NoObstructionFound => pairs.push(("verdict", "no_obstruction_found".into())),
            }
            for n in &r.notes {
                pairs.push(("note", n.clone()));
            }
            kv(pairs)
        }
        Payload::Squeezing(r) => {
            let name = |s| serde_json::to_value(s).unwrap().as_str().unwrap().to_string();
            let mut pairs = vec![
                ("r2", dec(&r.r2)),
                ("R2", dec(&r.big_r2)),
                ("dimension", r.dimension.to_string()),
                ("verdict", name(r.verdict)),
                ("criteria", r.criteria.iter().map(|&c| name(c)).join(" ")),
                ("integer_in_range", opt(&r.integer_in_range)),
            ];
            for n in &r.notes {
                pairs.push(("note", n.clone()));
            }
            kv(pairs)
        }
        Payload::Spectrum(r) => kv(vec![
            ("M", r.form.m().to_string()),
            ("ell", r.form.ell().to_string()),
            ("z", dec(r.form.z())),
            ("matrix_dim", r.matrix_dim.to_string()),
            ("min_eigenvalue", format!("{:.12}", r.min_eigenvalue)),
            ("max_eigenvalue", format!("{:.12}", r.max_eigenvalue)),
            ("index", r.index_count.to_string()),
            ("fixed_index", r.fixed_index_count.to_string()),
            ("oracle_agrees", r.oracle_agrees.to_string()),
        ]),
    }
}

pub fn render(doc: &OutputDocument) -> Result<Rendered, Box<dyn std::error::Error>> {
    match doc.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc)?;
            s.push('\n');
            Ok(Rendered {
                stdout: s,
                stderr: vec![],
            })
        }
        Format::Csv => {
            let v = view(&doc.payload);
            Ok(Rendered {
                stdout: csv(&v.header, &v.rows)?,
                stderr: doc.notes.iter().map(|n| format!("note: {n}")).collect(),
            })
        }
        Format::Table => {
            let v = view(&doc.payload);
            let mut s = String::new();
            for (k, val) in &v.preamble {
                s.push_str(&format!("{k}: {val}\n"));
            }
            if !v.preamble.is_empty() {
                s.push('\n');
            }
            s.push_str(&table(&v.header, &v.rows, v.left));
            for n in &doc.notes {
                s.push_str(&format!("\nnote: {n}\n"));
            }
            Ok(Rendered {
                stdout: s,
                stderr: vec![],
            })
        }
    }
}
