//! Three-column schematic of an artifact, as text or SVG.
//!
//! Columns are drawn D, M, G from left to right. Each notch is one mark at
//! its laid-out height; the mark's width follows the notch's length class
//! within its group.

use std::fmt::Write as _;

use serde::Serialize;

use crate::artifact::{Artifact, ColumnId, Layout, NotchGroup};
use crate::schema::{classify_notches, ClassifyParams, LengthClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RenderMode {
    Ascii,
    Svg,
}

/// Left-to-right drawing order.
pub const DRAW_ORDER: [ColumnId; 3] = [ColumnId::D, ColumnId::M, ColumnId::G];

const MM_PER_ROW: f64 = 2.0;
const LABEL_WIDTH: usize = 8;
const CELL_WIDTH: usize = 18;

pub fn render_artifact(a: &Artifact, l: &Layout, mode: RenderMode) -> String {
    match mode {
        RenderMode::Ascii => render_ascii(a, l),
        RenderMode::Svg => render_svg(a, l),
    }
}

struct Mark {
    y_mm: f64,
    class: LengthClass,
    damaged: bool,
    label: Option<String>,
}

// Unmeasured or single-length groups are drawn with medium marks.
fn classes(g: &NotchGroup) -> Vec<LengthClass> {
    match classify_notches(g, &ClassifyParams::default()) {
        Ok(c) if !c.uniform => c.classes,
        _ => vec![LengthClass::Medium; g.count()],
    }
}

fn marks(a: &Artifact, l: &Layout, col: ColumnId) -> Vec<Mark> {
    let mut out = Vec::new();
    for g in &a.column(col).groups {
        let Some(iv) = l.interval(&g.label) else {
            continue;
        };
        let offsets = g.notch_offsets(l.pitch_mm());
        for (i, ((notch, class), dy)) in g.notches.iter().zip(classes(g)).zip(offsets).enumerate() {
            out.push(Mark {
                y_mm: iv.top_mm + dy,
                class,
                damaged: notch.damaged || notch.interrupted,
                label: (i == 0).then(|| format!("{}({})", g.label, g.count())),
            });
        }
    }
    out
}

fn render_ascii(a: &Artifact, l: &Layout) -> String {
    let mut columns: Vec<Vec<(usize, String)>> = Vec::new();
    for col in DRAW_ORDER {
        let mut rows = Vec::new();
        let mut next = 0usize;
        for m in marks(a, l, col) {
            let row = ((m.y_mm / MM_PER_ROW).round() as usize).max(next);
            next = row + 1;
            let width = match m.class {
                LengthClass::Small => 3,
                LengthClass::Medium => 6,
                LengthClass::Long => 9,
            };
            let stroke = if m.damaged { "~" } else { "-" };
            let label = m.label.unwrap_or_default();
            rows.push((
                row,
                format!("{label:<LABEL_WIDTH$}{}", stroke.repeat(width)),
            ));
        }
        columns.push(rows);
    }
    let height = columns
        .iter()
        .filter_map(|c| c.last().map(|r| r.0 + 1))
        .max()
        .unwrap_or(0);
    let mut grid = vec![vec![String::new(); DRAW_ORDER.len()]; height];
    for (ci, rows) in columns.into_iter().enumerate() {
        for (row, cell) in rows {
            grid[row][ci] = cell;
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, "{}", a.name());
    let header: String = DRAW_ORDER
        .iter()
        .map(|c| format!("{:<CELL_WIDTH$}", c.letter()))
        .collect();
    let _ = writeln!(out, "{}", header.trim_end());
    for row in grid {
        let line: String = row.iter().map(|c| format!("{c:<CELL_WIDTH$}")).collect();
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn render_svg(a: &Artifact, l: &Layout) -> String {
    const SCALE: f64 = 4.0;
    const COL_WIDTH: f64 = 160.0;
    const TOP: f64 = 40.0;
    let height = TOP + (l.bottom_mm() + 10.0) * SCALE;
    let width = COL_WIDTH * DRAW_ORDER.len() as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(a.name()));
    let _ = writeln!(
        out,
        r#"  <rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    );
    for (ci, col) in DRAW_ORDER.iter().enumerate() {
        let x0 = ci as f64 * COL_WIDTH;
        let cx = x0 + COL_WIDTH * 0.6;
        let _ = writeln!(
            out,
            r#"  <text x="{cx}" y="20" font-family="monospace" font-size="14" text-anchor="middle">{}</text>"#,
            col.letter()
        );
        let _ = writeln!(out, r#"  <g id="column-{}">"#, col.letter());
        for m in marks(a, l, *col) {
            let y = TOP + m.y_mm * SCALE;
            let half = match m.class {
                LengthClass::Small => 12.0,
                LengthClass::Medium => 20.0,
                LengthClass::Long => 30.0,
            };
            let dash = if m.damaged {
                r#" stroke-dasharray="3,2""#
            } else {
                ""
            };
            let _ = writeln!(
                out,
                r#"    <line x1="{:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="black" stroke-width="1.5"{dash}/>"#,
                cx - half,
                cx + half
            );
            if let Some(label) = m.label {
                let _ = writeln!(
                    out,
                    r#"    <text x="{:.1}" y="{:.1}" font-family="monospace" font-size="10">{}</text>"#,
                    x0 + 4.0,
                    y + 3.0,
                    escape(&label)
                );
            }
        }
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}
