//! SVG rendering of the Landen construction for a pair `(m, n)` and a tangent length `t`.
//!
//! Everything is drawn in one frame centred at `S = (0, 0)`. The `t` scale runs
//! downwards from the x axis, so `H` and `Z` sit below it.

use std::fmt::Write as _;

use crate::conic::{
    abscissae_from_tangent, hyperbola_pedal_point, hyperbola_point_from_pedal, LandenPair, TANGENT_GUARD,
};
use crate::error::{Error, Result};

/// Largest tolerated defect of a plotted point, relative to the figure size.
pub const POINT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub label: &'static str,
    pub x: f64,
    pub y: f64,
}

/// The labelled points of the construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Construction {
    pub pair: LandenPair,
    pub t: f64,
    pub p: f64,
    pub points: Vec<Point>,
}

impl Construction {
    pub fn point(&self, label: &str) -> Point {
        *self.points.iter().find(|p| p.label == label).expect("known label")
    }
}

pub fn construct(pair: &LandenPair, t: f64) -> Result<Construction> {
    let t = pair.check_tangent(t)?;
    let d = pair.max_tangent();
    if t >= d * (1.0 - TANGENT_GUARD) {
        return Err(Error::domain(format!(
            "tangent length {t} is within the guard band of its maximum m - n = {d}; the figure is unrepresentable"
        )));
    }
    let (m, n) = (pair.m, pair.n);
    let h = pair.hyperbola();
    let (a, b) = (h.a, h.b);
    let p = ((d - t) * (d + t)).sqrt();

    // ellipse (m, n): point E at the smaller abscissa and the foot Q of the
    // perpendicular from the centre to its tangent
    let (xe, _) = abscissae_from_tangent(pair, t)?;
    let ye = n * ((m - xe) * (m + xe)).sqrt() / m;
    let (ex, ey) = (xe / (m * m), ye / (n * n));
    let en = ex * ex + ey * ey;

    // hyperbola: F with pedal distance p and the foot P on its tangent
    let (xf, yf) = hyperbola_point_from_pedal(&h, p)?;
    let (fx, fy) = (xf / (a * a), -yf / (b * b));
    let fnorm = fx * fx + fy * fy;

    let points = vec![
        Point { label: "S", x: 0.0, y: 0.0 },
        Point { label: "A", x: a, y: 0.0 },
        Point { label: "N", x: a, y: b },
        Point { label: "Z", x: m + n, y: -d },
        Point { label: "E", x: xe, y: ye },
        Point { label: "Q", x: ex / en, y: ey / en },
        Point { label: "H", x: a, y: -t },
        Point { label: "K", x: p * p / a, y: -t * p / a },
        Point { label: "F", x: xf, y: yf },
        Point { label: "P", x: fx / fnorm, y: fy / fnorm },
    ];
    let c = Construction { pair: *pair, t, p, points };
    verify(&c)?;
    Ok(c)
}

/// Defect of every point against the equation that defines it.
pub fn defects(c: &Construction) -> Vec<(&'static str, f64)> {
    let (m, n) = (c.pair.m, c.pair.n);
    let (a, b) = c.pair.semiaxes();
    let (t, p) = (c.t, c.p);
    let pt = |l: &str| c.point(l);
    let dist = |u: Point, v: Point| (u.x - v.x).hypot(u.y - v.y);
    let (s, ap, n_, z, e, q, h, k, f, pp) =
        (pt("S"), pt("A"), pt("N"), pt("Z"), pt("E"), pt("Q"), pt("H"), pt("K"), pt("F"), pt("P"));
    let on_hyperbola = |u: Point| u.x * u.x / (a * a) - u.y * u.y / (b * b) - 1.0;
    let t_hyp = hyperbola_pedal_point(&c.pair.hyperbola(), p).map(|x| x.t).unwrap_or(f64::NAN);
    vec![
        ("S at the centre", s.x.hypot(s.y)),
        ("A on the hyperbola", on_hyperbola(ap)),
        ("A is the vertex", ap.y),
        ("N on the vertical tangent", n_.x - a),
        ("N on the asymptote", n_.y - b / a * n_.x),
        ("N at the semiaxis of ellipse 1", n_.y - 2.0 * (m * n).sqrt()),
        ("Z on the line x = (m+n)/(m-n) t", z.x * (m - n) + z.y * (m + n)),
        ("Z at x = m + n", z.x - (m + n)),
        ("E on ellipse 2", e.x * e.x / (m * m) + e.y * e.y / (n * n) - 1.0),
        ("Q on the tangent at E", q.x * e.x / (m * m) + q.y * e.y / (n * n) - 1.0),
        ("SQ perpendicular to QE", q.x * (e.x - q.x) + q.y * (e.y - q.y)),
        ("QE equals t", dist(q, e) - t),
        ("H on the vertical tangent", h.x - a),
        ("AH equals t", dist(ap, h) - t),
        ("K on the circle about A through H", dist(k, ap) - dist(h, ap)),
        ("K on the circle over AS", dist(k, Point { label: "C0", x: 0.5 * a, y: 0.0 }) - 0.5 * a),
        ("SK equals p", dist(k, s) - p),
        ("F on the hyperbola", on_hyperbola(f) / (f.x * f.x / (a * a)).max(1.0)),
        ("P on the pedal circle", dist(pp, s) - p),
        ("P on the tangent at F", pp.x * f.x / (a * a) - pp.y * f.y / (b * b) - 1.0),
        ("SP perpendicular to PF", pp.x * (f.x - pp.x) + pp.y * (f.y - pp.y)),
        ("PF equals the hyperbola tangent", dist(pp, f) - t_hyp),
    ]
}

fn verify(c: &Construction) -> Result<()> {
    let scale = (c.pair.m + c.pair.n).max(1.0);
    for (what, defect) in defects(c) {
        // NaN defects fail too
        if defect.is_nan() || defect.abs() > POINT_TOLERANCE * scale {
            return Err(Error::domain(format!("construction point check failed: {what} (defect {defect:e})")));
        }
    }
    Ok(())
}

fn polyline(out: &mut String, class: &str, pts: impl Iterator<Item = (f64, f64)>) {
    let coords: Vec<String> = pts.map(|(x, y)| format!("{:.6},{:.6}", x, -y)).collect();
    let _ = writeln!(out, r#"  <polyline class="{class}" points="{}"/>"#, coords.join(" "));
}

fn line(out: &mut String, class: &str, (x0, y0): (f64, f64), (x1, y1): (f64, f64)) {
    let _ = writeln!(out, r#"  <line class="{class}" x1="{x0:.6}" y1="{:.6}" x2="{x1:.6}" y2="{:.6}"/>"#, -y0, -y1);
}

const SEGMENTS: usize = 200;

/// Elliptic arc about `centre` with semiaxes `radii`, over the angle range `span`.
fn arc(out: &mut String, class: &str, centre: (f64, f64), radii: (f64, f64), span: (f64, f64)) {
    let ((cx, cy), (rx, ry), (from, to)) = (centre, radii, span);
    polyline(
        out,
        class,
        (0..=SEGMENTS).map(|i| {
            let th = from + (to - from) * i as f64 / SEGMENTS as f64;
            (cx + rx * th.cos(), cy + ry * th.sin())
        }),
    );
}

/// The SVG 1.1 document; byte-stable for identical inputs.
pub fn render(c: &Construction) -> String {
    use std::f64::consts::{FRAC_PI_2, PI, TAU};
    let (m, n) = (c.pair.m, c.pair.n);
    let (a, b) = c.pair.semiaxes();
    let e1 = c.pair.ellipse1();
    let (w, hgt) = (2.4 * e1.a, 2.4 * e1.b);
    let stroke = 0.004 * e1.a;
    let radius = 0.012 * e1.a;
    let font = 0.05 * e1.a;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.6} {:.6} {w:.6} {hgt:.6}" width="800" height="{:.0}">"#,
        -0.5 * w,
        -0.5 * hgt,
        800.0 * hgt / w
    );
    let _ = writeln!(s, "  <title>Landen construction m={m} n={n} t={}</title>", c.t);
    let _ = writeln!(s, r#"  <desc data-m="{m}" data-n="{n}" data-t="{}" data-p="{}"/>"#, c.t, c.p);
    let _ = writeln!(
        s,
        "  <style>polyline,line,circle.curve{{fill:none;stroke-width:{stroke:.6}}} .hyperbola{{stroke:#b22}} .ellipse1{{stroke:#26b}} .ellipse2{{stroke:#2a6}} .aux{{stroke:#888;stroke-dasharray:{:.6}}} .tangent{{stroke:#a60}} .point{{fill:#000}} text{{font-size:{font:.6}px;font-family:sans-serif}}</style>",
        4.0 * stroke
    );

    // hyperbola branch, x > 0, y > 0, out to the edge of the view
    let u_max = (0.5 * w / a).acosh();
    polyline(
        &mut s,
        "hyperbola",
        (0..=SEGMENTS).map(|i| {
            let u = u_max * i as f64 / SEGMENTS as f64;
            (a * u.cosh(), b * u.sinh())
        }),
    );
    arc(&mut s, "ellipse1", (0.0, 0.0), (e1.a, e1.b), (0.0, FRAC_PI_2));
    arc(&mut s, "ellipse2", (0.0, 0.0), (m, n), (0.0, FRAC_PI_2));
    let reach = 0.5 * w;
    line(&mut s, "aux asymptote", (0.0, 0.0), (reach, reach * b / a));
    line(&mut s, "aux vertical-tangent", (a, -0.5 * hgt), (a, 0.5 * hgt));
    arc(&mut s, "aux half-circle", (0.5 * a, 0.0), (0.5 * a, 0.5 * a), (PI, TAU));
    line(&mut s, "aux t-line", (0.0, 0.0), (m + n, -(m - n)));
    let _ = writeln!(s, r#"  <circle class="aux curve pedal-circle" cx="0" cy="0" r="{:.6}"/>"#, c.p);
    let _ = writeln!(s, r#"  <circle class="aux curve" cx="{a:.6}" cy="0" r="{:.6}"/>"#, c.t);
    let (f, p, e, q) = (c.point("F"), c.point("P"), c.point("E"), c.point("Q"));
    let ext = |u: Point, v: Point, k: f64| (u.x + k * (u.x - v.x), u.y + k * (u.y - v.y));
    line(&mut s, "tangent tan-ob", ext(p, f, 0.3), ext(f, p, 0.3));
    line(&mut s, "tangent", ext(q, e, 0.3), ext(e, q, 0.3));
    line(&mut s, "aux", (0.0, 0.0), (q.x, q.y));
    line(&mut s, "aux", (0.0, 0.0), (p.x, p.y));
    line(&mut s, "aux projecting", (0.0, -c.t), (a.max(m + n), -c.t));

    for pt in &c.points {
        let _ = writeln!(
            s,
            r#"  <circle class="point" id="pt-{l}" data-label="{l}" data-x="{x}" data-y="{y}" cx="{x:.6}" cy="{:.6}" r="{radius:.6}"/>"#,
            -pt.y,
            l = pt.label,
            x = pt.x,
            y = pt.y,
        );
        let _ = writeln!(
            s,
            r#"  <text x="{:.6}" y="{:.6}">{}</text>"#,
            pt.x + 1.5 * radius,
            -pt.y - 1.5 * radius,
            pt.label
        );
    }
    s.push_str("</svg>\n");
    s
}
