//! Schematic SVG: singular value circles of a descriptor, or a graph drawn
//! with its vertices on a circle. Output is byte-for-byte deterministic.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write;

use crate::repgraph::{RepGraph, VertexKind};
use crate::roundmap::RoundMapDescriptor;

pub const DEFINITE: &str = "red";
pub const INDEFINITE: &str = "blue";

#[derive(Debug, Clone, Copy)]
pub enum Subject<'a> {
    Descriptor(&'a RoundMapDescriptor),
    Graph(&'a RepGraph),
}

#[derive(Debug, Clone, Copy)]
pub struct DiagramSpec<'a> {
    pub subject: Subject<'a>,
    /// Pixels per radius unit.
    pub scale: u32,
}

impl<'a> DiagramSpec<'a> {
    pub fn descriptor(d: &'a RoundMapDescriptor) -> Self {
        Self { subject: Subject::Descriptor(d), scale: 40 }
    }

    pub fn graph(g: &'a RepGraph) -> Self {
        Self { subject: Subject::Graph(g), scale: 40 }
    }
}

fn header(size: f64, out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub fn emit_svg(diagram: &DiagramSpec) -> String {
    let scale = f64::from(diagram.scale.max(1));
    let mut out = String::new();
    match diagram.subject {
        Subject::Descriptor(d) => {
            let size = 2.0 * (d.l() as f64 + 1.0) * scale;
            let c = size / 2.0;
            header(size, &mut out);
            for circle in &d.circles {
                let stroke = if circle.index == 0 { DEFINITE } else { INDEFINITE };
                let _ = writeln!(
                    out,
                    r#"  <circle cx="{c:.2}" cy="{c:.2}" r="{:.2}" fill="none" stroke="{stroke}" stroke-width="2"><title>{}</title></circle>"#,
                    f64::from(circle.radius) * scale,
                    escape(&format!("radius {} index {}: {}", circle.radius, circle.index, circle.event)),
                );
            }
        }
        Subject::Graph(g) => {
            let big = 4.0 * scale;
            let size = 2.0 * (big + scale);
            let c = size / 2.0;
            header(size, &mut out);
            let mut ids: Vec<&str> = g.vertices().iter().map(|v| v.id.as_str()).collect();
            ids.sort_unstable();
            ids.dedup();
            let n = ids.len().max(1) as f64;
            let pos: HashMap<&str, (f64, f64)> = ids
                .iter()
                .enumerate()
                .map(|(k, id)| {
                    let a = 2.0 * PI * k as f64 / n - PI / 2.0;
                    (*id, (c + big * a.cos(), c + big * a.sin()))
                })
                .collect();
            // parallel edges bow outwards alternately
            let mut seen: HashMap<(String, String), usize> = HashMap::new();
            for e in g.edges() {
                let (Some(&(x1, y1)), Some(&(x2, y2))) = (pos.get(e.ends.0.as_str()), pos.get(e.ends.1.as_str())) else {
                    continue;
                };
                let key = if e.ends.0 <= e.ends.1 { (e.ends.0.clone(), e.ends.1.clone()) } else { (e.ends.1.clone(), e.ends.0.clone()) };
                let k = *seen.entry(key).and_modify(|k| *k += 1).or_insert(0);
                let bow = if k == 0 { 0.0 } else { k.div_ceil(2) as f64 * if k % 2 == 1 { 1.0 } else { -1.0 } * scale * 0.6 };
                let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
                let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt().max(1e-9);
                let (qx, qy) = (mx - (y2 - y1) / len * bow, my + (x2 - x1) / len * bow);
                let _ = writeln!(
                    out,
                    r#"  <path d="M {x1:.2} {y1:.2} Q {qx:.2} {qy:.2} {x2:.2} {y2:.2}" fill="none" stroke="black" stroke-width="1.5"><title>{}</title></path>"#,
                    escape(&e.id)
                );
            }
            for v in g.vertices() {
                let Some(&(x, y)) = pos.get(v.id.as_str()) else { continue };
                let fill = match v.kind {
                    VertexKind::Disk => "white",
                    VertexKind::Pants => "black",
                };
                let _ = writeln!(
                    out,
                    r#"  <circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="{fill}" stroke="black"><title>{}</title></circle>"#,
                    scale * 0.15,
                    escape(&format!("{} {}", v.id, v.kind.keyword()))
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repgraph::canonical_example;
    use crate::roundmap::s_map_descriptor;

    fn strokes(svg: &str) -> Vec<&str> {
        svg.match_indices("stroke=\"").map(|(i, m)| svg[i + m.len()..].split('"').next().unwrap()).collect()
    }

    #[test]
    fn colours_follow_index() {
        let d = s_map_descriptor(2, 0, 5, 1, 0).unwrap().base;
        let svg = emit_svg(&DiagramSpec::descriptor(&d));
        assert_eq!(strokes(&svg), vec!["red", "blue", "red", "blue", "red"]);
        assert_eq!(svg, emit_svg(&DiagramSpec::descriptor(&d)));
    }

    #[test]
    fn graph_drawing_counts() {
        let g = canonical_example("s2xs1").unwrap();
        let svg = emit_svg(&DiagramSpec::graph(&g));
        assert_eq!(svg.matches("<path").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 4);
    }
}
