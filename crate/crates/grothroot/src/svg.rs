//! Drawing of the two-dimensional vertex figure `V(P_4)`. Floating point appears only here,
//! for pixel positions.

use std::fmt::Write;

use grothroot_core::realization::RealizationMap;
use grothroot_core::Point;
use num_traits::ToPrimitive;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Barycentric coordinates on the simple roots are the partial sums `x_1 + ... + x_k`.
fn pixel(p: &Point) -> (f64, f64) {
    let corners = [(MARGIN, SIZE - MARGIN), (SIZE / 2.0, MARGIN), (SIZE - MARGIN, SIZE - MARGIN)];
    let mut partial = 0.0;
    let (mut x, mut y) = (0.0, 0.0);
    for (k, c) in corners.iter().enumerate() {
        partial += p.0[k].to_f64().unwrap_or(0.0);
        x += partial * c.0;
        y += partial * c.1;
    }
    (x, y)
}

pub fn vertex_figure_svg(map: &RealizationMap) -> String {
    assert_eq!(map.n, 4, "only the two-dimensional vertex figure is drawn");
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#, SIZE).unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (pd, simplex) in &map.facet_map {
        let pts: Vec<String> = simplex
            .vertices()
            .iter()
            .map(|v| {
                let (x, y) = pixel(v);
                format!("{:.2},{:.2}", x, y)
            })
            .collect();
        let crosses: Vec<String> = pd.crosses().iter().map(|b| b.to_string()).collect();
        writeln!(
            s,
            r##"<polygon points="{}" fill="#dde8f5" stroke="black" stroke-width="1.5"><title>crosses {}</title></polygon>"##,
            pts.join(" "),
            crosses.join(" ")
        )
        .unwrap();
    }
    for (b, p) in &map.vertex_map {
        let (x, y) = pixel(p);
        writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="black"/>"#, x, y).unwrap();
        writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13">{}</text>"#,
            x + 6.0,
            y - 6.0,
            b
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
