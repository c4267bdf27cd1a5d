//! SVG drawings of a solved instance.
//!
//! Main nodes are filled red circles, demo nodes smaller hollow blue circles.
//! Edges of the full rectilinear graph are drawn thin and grey underneath the
//! kept network edges. The y axis points up.

use std::fmt::Write as _;

use mmnfa_core::{Point, RectEdge};

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 30.0;

struct Frame {
    min_x: i64,
    min_y: i64,
    scale: f64,
    height: f64,
}

impl Frame {
    fn fit(points: &[Point]) -> Self {
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (0, 1, 0, 1);
        if let Some(first) = points.first() {
            (min_x, max_x, min_y, max_y) = (first.x, first.x, first.y, first.y);
            for p in points {
                min_x = min_x.min(p.x);
                max_x = max_x.max(p.x);
                min_y = min_y.min(p.y);
                max_y = max_y.max(p.y);
            }
        }
        let span = (max_x - min_x).max(max_y - min_y).max(1) as f64;
        let scale = (CANVAS - 2.0 * MARGIN) / span;
        Frame {
            min_x,
            min_y,
            scale,
            height: (max_y - min_y) as f64 * scale + 2.0 * MARGIN,
        }
    }

    fn width(&self, points: &[Point]) -> f64 {
        let max_x = points.iter().map(|p| p.x).max().unwrap_or(self.min_x + 1);
        (max_x - self.min_x) as f64 * self.scale + 2.0 * MARGIN
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        let x = MARGIN + (p.x - self.min_x) as f64 * self.scale;
        let y = self.height - MARGIN - (p.y - self.min_y) as f64 * self.scale;
        (x, y)
    }
}

/// A figure: every node of the augmented graph, optionally its edges, and the
/// kept network edges. `kept` is given as coordinate pairs so it can come
/// from a network with its own numbering.
pub struct Figure<'a> {
    pub nodes: &'a [Point],
    pub graph_edges: &'a [RectEdge],
    pub kept: Vec<(Point, Point)>,
}

impl Figure<'_> {
    pub fn render(&self) -> String {
        let frame = Frame::fit(self.nodes);
        let width = frame.width(self.nodes);
        let r_main = (frame.scale * 0.15).clamp(1.5, 6.0);
        let r_demo = r_main * 0.6;

        let mut s = String::new();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{:.0}" viewBox="0 0 {width:.1} {:.1}">"#,
            frame.height, frame.height
        )
        .unwrap();
        s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

        s.push_str("<g stroke=\"#cccccc\" stroke-width=\"0.8\">\n");
        for e in self.graph_edges {
            line(&mut s, &frame, &self.nodes[e.u], &self.nodes[e.v]);
        }
        s.push_str("</g>\n<g stroke=\"black\" stroke-width=\"2\">\n");
        for (a, b) in &self.kept {
            line(&mut s, &frame, a, b);
        }
        s.push_str("</g>\n<g fill=\"none\" stroke=\"blue\" stroke-width=\"1\">\n");
        for p in self.nodes.iter().filter(|p| !p.is_main()) {
            circle(&mut s, &frame, p, r_demo);
        }
        s.push_str("</g>\n<g fill=\"red\" stroke=\"none\">\n");
        for p in self.nodes.iter().filter(|p| p.is_main()) {
            circle(&mut s, &frame, p, r_main);
        }
        s.push_str("</g>\n</svg>\n");
        s
    }
}

fn line(s: &mut String, frame: &Frame, a: &Point, b: &Point) {
    let (x1, y1) = frame.map(a);
    let (x2, y2) = frame.map(b);
    writeln!(
        s,
        r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
    )
    .unwrap();
}

fn circle(s: &mut String, frame: &Frame, p: &Point, r: f64) {
    let (cx, cy) = frame.map(p);
    writeln!(s, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}"/>"#).unwrap();
}
