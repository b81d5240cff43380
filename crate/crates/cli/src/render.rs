//! SVG drawings of configurations.
//!
//! Output depends only on the input document, so the same tableau always
//! renders to the same bytes.

use std::fmt::Write;

use anyhow::Result;
use clap::ValueEnum;
use dellac::grid::{Cell, Kind};
use dellac::json::TableauDoc;
use dellac::stats::{forward_labels, ForwardLabel, OddPathReport, PathReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Overlay {
    #[default]
    None,
    Paths,
    Labels,
}

const BLUE: &str = "#1f5fbf";
const RED: &str = "#c8322d";
const GREEN: &str = "#2e8b3a";
const VIOLET: &str = "#7a3fb0";

struct Canvas {
    cell: u32,
    height: usize,
    margin: u32,
    out: String,
}

impl Canvas {
    // Centre of box (j:i); row 1 sits at the bottom.
    fn centre(&self, p: Cell) -> (f64, f64) {
        let c = self.cell as f64;
        let x = self.margin as f64 + (p.col as f64 - 0.5) * c;
        let y = self.margin as f64 + (self.height as f64 - p.row as f64 + 0.5) * c;
        (x, y)
    }

    // Grid corner below-left of box (j+1:i+1), in lattice units.
    fn corner(&self, j: f64, i: f64) -> (f64, f64) {
        let c = self.cell as f64;
        (self.margin as f64 + j * c, self.margin as f64 + (self.height as f64 - i) * c)
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), style: &str) {
        let _ = writeln!(
            self.out,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" {style}/>"#,
            a.0, a.1, b.0, b.1
        );
    }

    fn polyline(&mut self, pts: &[Cell], colour: &str, shift: f64) {
        if pts.len() < 2 {
            return;
        }
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = self.centre(p);
                format!("{:.1},{:.1}", x + shift, y + shift)
            })
            .collect();
        let _ = writeln!(
            self.out,
            r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="2" stroke-opacity="0.8"/>"#,
            coords.join(" ")
        );
    }

    fn text(&mut self, p: Cell, dx: f64, dy: f64, s: &str, colour: &str) {
        let (x, y) = self.centre(p);
        let size = (self.cell as f64 * 0.45).max(6.0);
        let _ = writeln!(
            self.out,
            r#"<text x="{:.1}" y="{:.1}" font-size="{size:.1}" font-family="sans-serif" fill="{colour}">{s}</text>"#,
            x + dx,
            y + dy
        );
    }
}

fn star(cx: f64, cy: f64, r: f64) -> String {
    let pts: Vec<String> = (0..10)
        .map(|k| {
            let a = std::f64::consts::PI * (k as f64) / 5.0 - std::f64::consts::FRAC_PI_2;
            let rr = if k % 2 == 0 { r } else { r * 0.45 };
            format!("{:.1},{:.1}", cx + rr * a.cos(), cy + rr * a.sin())
        })
        .collect();
    pts.join(" ")
}

pub fn svg(doc: &TableauDoc, overlay: Overlay, cell: u32) -> Result<String> {
    anyhow::ensure!(cell >= 4, "cell size must be at least 4");
    let t = doc.tableau()?;
    let (w, h) = (t.width(), t.height());
    let margin = cell;
    let mut cv = Canvas { cell, height: h, margin, out: String::new() };
    let (pw, ph) = (w as u32 * cell + 2 * margin, h as u32 * cell + 2 * margin);
    let _ = writeln!(
        cv.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{pw}" height="{ph}" viewBox="0 0 {pw} {ph}">"#
    );
    let _ = writeln!(cv.out, r#"<rect width="{pw}" height="{ph}" fill="white"/>"#);

    let extended = matches!(doc.kind, Kind::EvenExtended | Kind::OddExtended);
    if doc.kind == Kind::OddExtended {
        if let Some(&e) = t.empty_rows().first() {
            let (x, y) = cv.corner(0.0, e as f64);
            let _ = writeln!(
                cv.out,
                r##"<rect x="{x:.1}" y="{y:.1}" width="{}" height="{cell}" fill="#e6e6e6"/>"##,
                w as u32 * cell
            );
        }
    }

    let grid = r##"stroke="#999" stroke-width="1""##;
    for j in 0..=w {
        cv.line(cv.corner(j as f64, 0.0), cv.corner(j as f64, h as f64), grid);
    }
    for i in 0..=h {
        cv.line(cv.corner(0.0, i as f64), cv.corner(w as f64, i as f64), grid);
    }

    let diag = r##"stroke="#444" stroke-width="1.5""##;
    cv.line(cv.corner(0.0, 0.0), cv.corner(w as f64, w as f64), diag);
    if extended {
        // Boxes above this line hold free points.
        let dash = r##"stroke="#444" stroke-width="1.2" stroke-dasharray="4 3""##;
        cv.line(cv.corner(0.0, h as f64), cv.corner(w as f64, (h - w) as f64), dash);
    } else {
        cv.line(cv.corner(0.0, w as f64), cv.corner(w as f64, 2.0 * w as f64), diag);
    }

    if overlay == Overlay::Paths {
        match doc.kind {
            Kind::EvenExtended => {
                let r = PathReport::new(&doc.even()?);
                let s = cell as f64 * 0.08;
                cv.polyline(&r.blue, BLUE, -s);
                cv.polyline(&r.red, RED, s);
                cv.polyline(&r.green, GREEN, 0.0);
            }
            Kind::OddExtended => {
                let r = OddPathReport::new(&doc.odd()?);
                cv.polyline(&r.violet, VIOLET, 0.0);
                cv.polyline(&r.green, GREEN, 0.0);
            }
            _ => anyhow::bail!("path overlay needs an extended configuration (te or to)"),
        }
    }

    let radius = cell as f64 * 0.28;
    for p in t.points() {
        let (x, y) = cv.centre(p);
        if extended && t.is_free(p) {
            let _ = writeln!(cv.out, r#"<polygon points="{}" fill="black"/>"#, star(x, y, radius * 1.3));
        } else {
            let _ = writeln!(cv.out, r#"<circle cx="{x:.1}" cy="{y:.1}" r="{radius:.1}" fill="black"/>"#);
        }
    }

    if overlay == Overlay::Labels {
        let off = cell as f64 * 0.3;
        if let Some(labels) = &doc.free_labels {
            for (&p, &b) in labels {
                cv.text(p, off, off, &b.to_string(), "#333");
            }
        }
        if doc.kind == Kind::EvenExtended && doc.n >= 2 {
            let r = PathReport::new(&doc.even()?);
            for (p, l) in forward_labels(&t, &r) {
                let (s, colour) = match l {
                    ForwardLabel::Beta => ("β", BLUE),
                    ForwardLabel::Rho => ("ρ", RED),
                    ForwardLabel::Gamma => ("γ", GREEN),
                };
                cv.text(p, off, -off * 0.4, s, colour);
            }
        }
    }

    cv.out.push_str("</svg>\n");
    Ok(cv.out)
}
