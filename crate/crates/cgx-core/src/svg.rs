//! SVG rendering of polygon maps. Display only: coordinates are converted
//! to floating point here, while all verification elsewhere stays rational.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::polygon::PolygonMap;

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

struct Canvas {
    min_x: f64,
    min_y: f64,
    width: f64,
    height: f64,
}

impl Canvas {
    /// Fit all vertices plus the origin, with a 5% margin on each side.
    fn fit(points: &[(f64, f64)]) -> Canvas {
        let mut min_x: f64 = 0.0;
        let mut max_x: f64 = 0.0;
        let mut min_y: f64 = 0.0;
        let mut max_y: f64 = 0.0;
        for &(x, y) in points {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let spread = (max_x - min_x).max(max_y - min_y).max(1.0);
        let margin = spread * 0.05;
        Canvas {
            min_x: min_x - margin,
            min_y: min_y - margin,
            width: max_x - min_x + 2.0 * margin,
            height: max_y - min_y + 2.0 * margin,
        }
    }

    fn scale(&self) -> f64 {
        self.width.max(self.height)
    }
}

/// Render the map as a standalone SVG document. Segment and point shapes
/// are staggered slightly in y so stacked intervals stay readable; polygons
/// are drawn where they are.
pub fn render_svg(m: &PolygonMap) -> String {
    let n = m.ground().len();

    // Gather display coordinates, staggering degenerate shapes.
    let mut shapes: Vec<Vec<(f64, f64)>> = Vec::with_capacity(n);
    let mut all: Vec<(f64, f64)> = Vec::new();
    for shape in m.shapes() {
        for v in shape.vertices() {
            let x = v.coord(0).to_f64().unwrap_or(0.0);
            let y = v.coord(1).to_f64().unwrap_or(0.0);
            all.push((x, y));
        }
    }
    let rough = Canvas::fit(&all);
    for (e, shape) in m.shapes().iter().enumerate() {
        let mut pts: Vec<(f64, f64)> = shape
            .vertices()
            .iter()
            .map(|v| {
                (
                    v.coord(0).to_f64().unwrap_or(0.0),
                    v.coord(1).to_f64().unwrap_or(0.0),
                )
            })
            .collect();
        if shape.is_degenerate() && n > 1 {
            let dy = rough.scale() * 0.04 * (e as f64 + 1.0);
            for p in &mut pts {
                p.1 += dy;
            }
        }
        shapes.push(pts);
    }

    let mut display: Vec<(f64, f64)> = shapes.iter().flatten().copied().collect();
    display.push((0.0, 0.0));
    let canvas = Canvas::fit(&display);
    let stroke = canvas.scale() * 0.006;
    let font = canvas.scale() * 0.045;

    // SVG y grows downward; flip around the canvas midline.
    let flip = |y: f64| 2.0 * canvas.min_y + canvas.height - y;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"720\" height=\"{:.0}\" \
         viewBox=\"{:.6} {:.6} {:.6} {:.6}\">\n",
        (720.0 * canvas.height / canvas.width).max(80.0),
        canvas.min_x,
        canvas.min_y,
        canvas.width,
        canvas.height
    ));
    out.push_str(&format!(
        "  <rect x=\"{:.6}\" y=\"{:.6}\" width=\"{:.6}\" height=\"{:.6}\" fill=\"#ffffff\"/>\n",
        canvas.min_x, canvas.min_y, canvas.width, canvas.height
    ));

    // Origin crosshair.
    let tick = canvas.scale() * 0.025;
    out.push_str(&format!(
        "  <g stroke=\"#555555\" stroke-width=\"{:.6}\">\n    <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\"/>\n    <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\"/>\n  </g>\n",
        stroke,
        -tick,
        flip(0.0),
        tick,
        flip(0.0),
        0.0,
        flip(-tick),
        0.0,
        flip(tick)
    ));

    for (e, pts) in shapes.iter().enumerate() {
        let color = PALETTE[e % PALETTE.len()];
        match pts.len() {
            1 => out.push_str(&format!(
                "  <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"{}\"/>\n",
                pts[0].0,
                flip(pts[0].1),
                stroke * 2.5,
                color
            )),
            2 => out.push_str(&format!(
                "  <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" stroke=\"{}\" stroke-width=\"{:.6}\" stroke-linecap=\"round\"/>\n",
                pts[0].0,
                flip(pts[0].1),
                pts[1].0,
                flip(pts[1].1),
                color,
                stroke * 1.5
            )),
            _ => {
                let mut attr = String::new();
                for (i, p) in pts.iter().enumerate() {
                    if i > 0 {
                        attr.push(' ');
                    }
                    attr.push_str(&format!("{:.6},{:.6}", p.0, flip(p.1)));
                }
                out.push_str(&format!(
                    "  <polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.15\" stroke=\"{}\" stroke-width=\"{:.6}\"/>\n",
                    attr, color, color, stroke
                ));
            }
        }

        // Label at the vertex centroid.
        let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
        let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
        out.push_str(&format!(
            "  <text x=\"{:.6}\" y=\"{:.6}\" font-size=\"{:.6}\" fill=\"{}\" text-anchor=\"middle\">{}</text>\n",
            cx,
            flip(cy) - stroke * 2.0,
            font,
            color,
            m.ground().name(e)
        ));
    }

    // Legend in the top-left corner.
    let box_side = font * 0.8;
    for e in 0..n {
        let color = PALETTE[e % PALETTE.len()];
        let y = canvas.min_y + font * 1.3 * (e as f64 + 1.0);
        out.push_str(&format!(
            "  <rect x=\"{:.6}\" y=\"{:.6}\" width=\"{:.6}\" height=\"{:.6}\" fill=\"{}\"/>\n  <text x=\"{:.6}\" y=\"{:.6}\" font-size=\"{:.6}\" fill=\"#333333\">{}</text>\n",
            canvas.min_x + font * 0.5,
            y - box_side,
            box_side,
            box_side,
            color,
            canvas.min_x + font * 0.5 + box_side * 1.4,
            y - box_side * 0.15,
            font,
            m.ground().name(e)
        ));
    }

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::GroundSet;
    use crate::hull::RationalPoint;
    use crate::polygon::Polygon;
    use alloc::vec;

    fn segment(a: i64, b: i64) -> Polygon {
        Polygon::from_points(vec![
            RationalPoint::from_integers(&[a, 0]),
            RationalPoint::from_integers(&[b, 0]),
        ])
        .unwrap()
    }

    #[test]
    fn renders_segments() {
        let ground = GroundSet::letters(3).unwrap();
        let m = PolygonMap::new(
            ground,
            vec![segment(0, 1), segment(-1, 2), segment(-2, 3)],
        )
        .unwrap();
        let svg = render_svg(&m);
        assert!(svg.starts_with("<svg "));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<line ").count(), 3 + 2);
        assert!(svg.contains(">a</text>"));
        assert!(!svg.contains("NaN"));
    }

    #[test]
    fn renders_polygons() {
        let ground = GroundSet::letters(2).unwrap();
        let tri = Polygon::from_points(vec![
            RationalPoint::from_integers(&[8, 0]),
            RationalPoint::from_integers(&[-4, 7]),
            RationalPoint::from_integers(&[-4, -7]),
        ])
        .unwrap();
        let quad = Polygon::from_points(vec![
            RationalPoint::from_integers(&[9, 0]),
            RationalPoint::from_integers(&[0, 9]),
            RationalPoint::from_integers(&[-9, 0]),
            RationalPoint::from_integers(&[0, -9]),
        ])
        .unwrap();
        let m = PolygonMap::new(ground, vec![tri, quad]).unwrap();
        let svg = render_svg(&m);
        assert_eq!(svg.matches("<polygon ").count(), 2);
        assert!(svg.contains("viewBox"));
    }
}
