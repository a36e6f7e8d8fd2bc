//! Rectangle diagrams for two-dimensional representations.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rep::BoxRep;
use crate::scalar::IntEndpoint;

const CELL: i64 = 40;
const MARGIN: i64 = 20;

/// SVG drawing of a 2-box representation on an integer grid, one labeled
/// rectangle per vertex. Point-like extents are padded to stay visible.
pub fn to_svg<T: IntEndpoint>(rep: &BoxRep<T>, labels: &[String]) -> Result<String> {
    if rep.dimension() != 2 {
        return Err(Error::Parameter(format!(
            "SVG output needs a 2-dimensional representation, got {}",
            rep.dimension()
        )));
    }
    if labels.len() != rep.len() {
        return Err(Error::SizeMismatch {
            expected: rep.len(),
            found: labels.len(),
        });
    }
    let to_i64 = |x: T| {
        x.to_i64()
            .ok_or_else(|| Error::Parameter("endpoint outside i64".into()))
    };
    let mut rects = Vec::with_capacity(rep.len());
    for b in rep.boxes() {
        rects.push([
            to_i64(b[0].lo())?,
            to_i64(b[0].hi())?,
            to_i64(b[1].lo())?,
            to_i64(b[1].hi())?,
        ]);
    }
    let min_x = rects.iter().map(|r| r[0]).min().unwrap_or(0);
    let max_x = rects.iter().map(|r| r[1]).max().unwrap_or(0);
    let min_y = rects.iter().map(|r| r[2]).min().unwrap_or(0);
    let max_y = rects.iter().map(|r| r[3]).max().unwrap_or(0);
    let width = (max_x - min_x + 1) * CELL + 2 * MARGIN;
    let height = (max_y - min_y + 1) * CELL + 2 * MARGIN;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    for x in min_x..=max_x + 1 {
        let px = MARGIN + (x - min_x) * CELL;
        writeln!(
            out,
            r##"  <line x1="{px}" y1="{MARGIN}" x2="{px}" y2="{}" stroke="#ddd"/>"##,
            height - MARGIN
        )
        .unwrap();
    }
    for y in min_y..=max_y + 1 {
        let py = MARGIN + (y - min_y) * CELL;
        writeln!(
            out,
            r##"  <line x1="{MARGIN}" y1="{py}" x2="{}" y2="{py}" stroke="#ddd"/>"##,
            width - MARGIN
        )
        .unwrap();
    }
    for (v, r) in rects.iter().enumerate() {
        // y grows downward in SVG; flip so larger coordinates sit higher
        let x = MARGIN + (r[0] - min_x) * CELL + 4;
        let y = MARGIN + (max_y - r[3]) * CELL + 4;
        let w = (r[1] - r[0] + 1) * CELL - 8;
        let h = (r[3] - r[2] + 1) * CELL - 8;
        writeln!(
            out,
            r##"  <rect x="{x}" y="{y}" width="{w}" height="{h}" fill="#4a90d9" fill-opacity="0.15" stroke="#1f4e79"/>"##
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="10" font-family="monospace">{}</text>"#,
            x + 2,
            y + 12,
            escape_xml(&labels[v])
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
