//! Static barcode rendering: graph bars on top, a divider, then Conley bars
//! grouped by dimension.

use std::fmt::Write;

use crate::output::{BarOut, BarcodeOut};

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 48.0;
const ROW: f64 = 14.0;
const GAP: f64 = 10.0;
const COLORS: [&str; 4] = ["#1f4e79", "#c55a11", "#548235", "#7030a0"];

fn color(dim: usize) -> &'static str {
    COLORS[dim % COLORS.len()]
}

pub fn render(out: &BarcodeOut, fields: usize) -> String {
    let positions = (2 * fields).saturating_sub(1).max(1);
    let step = (WIDTH - 2.0 * MARGIN) / positions as f64;
    let x = |pos: usize| MARGIN + (pos as f64 - 1.0) * step;

    let mut conley: Vec<&BarOut> = out.conley_bars.iter().collect();
    conley.sort_by_key(|b| (b.dim, b.birth_pos, b.death_pos));
    let rows = out.graph_bars.len() + conley.len();
    let dims = conley.iter().map(|b| b.dim).collect::<std::collections::BTreeSet<_>>().len();
    let height = 2.0 * MARGIN + rows as f64 * ROW + (dims + 1) as f64 * GAP;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" font-family="sans-serif" font-size="10">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for f in 1..=fields {
        let px = x(2 * f - 1) + step / 2.0;
        writeln!(s, r#"<text x="{px:.1}" y="{:.1}" text-anchor="middle">{f}</text>"#, MARGIN - 16.0).unwrap();
        writeln!(
            s,
            r##"<line x1="{px:.1}" y1="{:.1}" x2="{px:.1}" y2="{:.1}" stroke="#dddddd"/>"##,
            MARGIN - 10.0,
            height - MARGIN
        )
        .unwrap();
    }

    let mut y = MARGIN;
    let bar = |s: &mut String, y: f64, b: &BarOut, fill: &str| {
        let x0 = x(b.birth_pos);
        let w = (b.death_pos + 1 - b.birth_pos) as f64 * step;
        writeln!(
            s,
            r#"<rect x="{x0:.1}" y="{:.1}" width="{w:.1}" height="{:.1}" fill="{fill}"><title>dim {} [{}, {}] {}</title></rect>"#,
            y + 2.0,
            ROW - 4.0,
            b.dim,
            b.birth_pos,
            b.death_pos,
            b.source
        )
        .unwrap();
    };
    for b in &out.graph_bars {
        bar(&mut s, y, b, "#7f7f7f");
        y += ROW;
    }
    y += GAP / 2.0;
    writeln!(
        s,
        r##"<line x1="{:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="black" stroke-dasharray="4 3"/>"##,
        MARGIN / 2.0,
        WIDTH - MARGIN / 2.0
    )
    .unwrap();
    y += GAP / 2.0;
    let mut last_dim = None;
    for b in conley {
        if last_dim.is_some_and(|d| d != b.dim) {
            y += GAP;
        }
        if last_dim != Some(b.dim) {
            writeln!(s, r#"<text x="4" y="{:.1}">H{}</text>"#, y + ROW - 4.0, b.dim).unwrap();
        }
        last_dim = Some(b.dim);
        bar(&mut s, y, b, color(b.dim));
        y += ROW;
    }
    s.push_str("</svg>\n");
    s
}
