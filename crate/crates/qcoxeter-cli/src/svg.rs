//! SVG rendering of rank-2 alcove pictures with a metrically correct
//! Euclidean embedding of the coroot lattice.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::ToPrimitive;
use thiserror::Error;

use qcoxeter::geometry::Alcove;
use qcoxeter::group::GroupContext;
use qcoxeter::linalg::{rat, solve_square, Rat};

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("rendering requires rank 2, got rank {0}")]
    RankNot2(usize),
}

#[derive(Clone, Debug, Default)]
pub struct FigureSpec {
    /// include alcoves whose pairings stay within [-radius, radius]
    pub radius: i64,
    /// fill the base alcove
    pub base: bool,
    /// alcoves filled as a lateral class
    pub class: Vec<Alcove>,
    /// alcoves filled as a gallery
    pub gallery: Vec<Alcove>,
    /// shade the dominant and anti-dominant chambers
    pub shade_chambers: bool,
}

const FILL_DEFAULT: &str = "#ffffff";
const FILL_DOMINANT: &str = "#dce9fb";
const FILL_ANTIDOMINANT: &str = "#fbdce9";
const FILL_BASE: &str = "#4169e1";
const FILL_CLASS: &str = "#e04444";
const FILL_GALLERY: &str = "#2e8b57";

/// Euclidean embedding of the two coroot basis vectors from their Gram matrix.
fn embedding(ctx: &GroupContext) -> [[f64; 2]; 2] {
    let rs = &ctx.roots;
    let norm = |i: usize| rs.positive_roots[i].norm.to_f64().expect("small rational");
    let a12 = rs.cartan_matrix[0][1] as f64;
    let g11 = 4.0 / norm(0);
    let g22 = 4.0 / norm(1);
    let g12 = 2.0 * a12 / norm(1);
    let e1 = [g11.sqrt(), 0.0];
    let e2 = [g12 / g11.sqrt(), (g22 - g12 * g12 / g11).sqrt()];
    [e1, e2]
}

/// Exact rational vertices of a rank-2 alcove: pairwise wall intersections.
fn alcove_vertices(ctx: &GroupContext, a: &Alcove) -> Vec<(Rat, Rat)> {
    let rs = &ctx.roots;
    let walls = a.walls(rs);
    let mut out = Vec::with_capacity(3);
    for i in 0..walls.len() {
        for j in (i + 1)..walls.len() {
            let rows = vec![
                rs.positive_roots[walls[i].root]
                    .pairings
                    .iter()
                    .map(|&p| rat(p))
                    .collect::<Vec<_>>(),
                rs.positive_roots[walls[j].root]
                    .pairings
                    .iter()
                    .map(|&p| rat(p))
                    .collect::<Vec<_>>(),
            ];
            let rhs = vec![rat(walls[i].level), rat(walls[j].level)];
            if let Some(x) = solve_square(&rows, &rhs) {
                out.push((x[0].clone(), x[1].clone()));
            }
        }
    }
    out
}

/// Alcoves whose closure stays inside the box |<x, alpha>| <= radius.
pub fn alcoves_within_radius(ctx: &GroupContext, radius: i64) -> Vec<Alcove> {
    let rs = &ctx.roots;
    let inside = |a: &Alcove| {
        a.coords()
            .iter()
            .all(|&k| k >= -radius && k + 1 <= radius)
    };
    let base = Alcove::base(rs);
    if !inside(&base) {
        return vec![];
    }
    let mut seen: HashSet<Alcove> = HashSet::new();
    seen.insert(base.clone());
    let mut queue = VecDeque::from([base.clone()]);
    let mut out = vec![base];
    while let Some(a) = queue.pop_front() {
        for (_, nb) in a.walls_with_neighbors(rs) {
            if inside(&nb) && !seen.contains(&nb) {
                seen.insert(nb.clone());
                out.push(nb.clone());
                queue.push_back(nb);
            }
        }
    }
    out.sort();
    out
}

fn fmt_coord(x: f64) -> String {
    format!("{:.12}", x)
}

/// Renders the figure; output is byte-deterministic for a fixed input.
pub fn render(ctx: &GroupContext, fig: &FigureSpec) -> Result<String, RenderError> {
    if ctx.rank() != 2 {
        return Err(RenderError::RankNot2(ctx.rank()));
    }
    let rs = &ctx.roots;
    let emb = embedding(ctx);
    let scale = 100.0;
    let embed = |x: &Rat, y: &Rat| -> (f64, f64) {
        let xf = x.to_f64().expect("coordinate in f64 range");
        let yf = y.to_f64().expect("coordinate in f64 range");
        let px = xf * emb[0][0] + yf * emb[1][0];
        let py = xf * emb[0][1] + yf * emb[1][1];
        (px * scale, -py * scale)
    };

    let alcoves = alcoves_within_radius(ctx, fig.radius);
    let class_set: BTreeSet<&Alcove> = fig.class.iter().collect();
    let gallery_set: BTreeSet<&Alcove> = fig.gallery.iter().collect();
    let base = Alcove::base(rs);
    let dominant = qcoxeter::geometry::Chamber::dominant(rs);
    let antidominant = qcoxeter::geometry::Chamber::antidominant(rs);

    let mut polygons = Vec::new();
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for a in &alcoves {
        let fill = if fig.base && *a == base {
            FILL_BASE
        } else if gallery_set.contains(a) {
            FILL_GALLERY
        } else if class_set.contains(a) {
            FILL_CLASS
        } else if fig.shade_chambers && dominant.contains_alcove(rs, a) {
            FILL_DOMINANT
        } else if fig.shade_chambers && antidominant.contains_alcove(rs, a) {
            FILL_ANTIDOMINANT
        } else {
            FILL_DEFAULT
        };
        let mut pts = Vec::new();
        for (x, y) in alcove_vertices(ctx, a) {
            let (px, py) = embed(&x, &y);
            min_x = min_x.min(px);
            min_y = min_y.min(py);
            max_x = max_x.max(px);
            max_y = max_y.max(py);
            pts.push(format!("{},{}", fmt_coord(px), fmt_coord(py)));
        }
        polygons.push(format!(
            "  <polygon points=\"{}\" fill=\"{}\" stroke=\"#444444\" stroke-width=\"0.8\"/>",
            pts.join(" "),
            fill
        ));
    }

    if polygons.is_empty() {
        min_x = 0.0;
        min_y = 0.0;
        max_x = 1.0;
        max_y = 1.0;
    }
    let margin = 10.0;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n",
        fmt_coord(min_x - margin),
        fmt_coord(min_y - margin),
        fmt_coord(max_x - min_x + 2.0 * margin),
        fmt_coord(max_y - min_y + 2.0 * margin)
    ));
    for p in polygons {
        out.push_str(&p);
        out.push('\n');
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::GroupConfig;

    fn ctx(family: &str, rank: usize) -> GroupContext {
        GroupConfig::parse(&format!("[group]\nfamily = {}\nrank = {}\n", family, rank))
            .unwrap()
            .build_context()
            .unwrap()
    }

    fn polygon_points(svg: &str) -> Vec<Vec<(f64, f64)>> {
        svg.lines()
            .filter(|l| l.contains("<polygon"))
            .map(|l| {
                let start = l.find("points=\"").unwrap() + 8;
                let end = l[start..].find('"').unwrap() + start;
                l[start..end]
                    .split(' ')
                    .map(|p| {
                        let (x, y) = p.split_once(',').unwrap();
                        (x.parse().unwrap(), y.parse().unwrap())
                    })
                    .collect()
            })
            .collect()
    }

    fn angles(tri: &[(f64, f64)]) -> Vec<f64> {
        let mut out = Vec::new();
        for i in 0..3 {
            let a = tri[i];
            let b = tri[(i + 1) % 3];
            let c = tri[(i + 2) % 3];
            let u = (b.0 - a.0, b.1 - a.1);
            let v = (c.0 - a.0, c.1 - a.1);
            let dot = u.0 * v.0 + u.1 * v.1;
            let nu = (u.0 * u.0 + u.1 * u.1).sqrt();
            let nv = (v.0 * v.0 + v.1 * v.1).sqrt();
            out.push((dot / (nu * nv)).clamp(-1.0, 1.0).acos().to_degrees());
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out
    }

    #[test]
    fn a2_radius_two_has_24_equilateral_triangles() {
        let c = ctx("A", 2);
        let alcoves = alcoves_within_radius(&c, 2);
        assert_eq!(alcoves.len(), 24);
        let svg = render(&c, &FigureSpec { radius: 2, ..Default::default() }).unwrap();
        let polys = polygon_points(&svg);
        assert_eq!(polys.len(), 24);
        for tri in &polys {
            for ang in angles(tri) {
                assert!((ang - 60.0).abs() < 1e-9, "angle {} not 60", ang);
            }
        }
    }

    #[test]
    fn g2_triangles_are_30_60_90() {
        let c = ctx("G", 2);
        let svg = render(&c, &FigureSpec { radius: 3, ..Default::default() }).unwrap();
        let polys = polygon_points(&svg);
        assert!(!polys.is_empty());
        for tri in &polys {
            let a = angles(tri);
            assert!((a[0] - 30.0).abs() < 1e-9, "got {:?}", a);
            assert!((a[1] - 60.0).abs() < 1e-9, "got {:?}", a);
            assert!((a[2] - 90.0).abs() < 1e-9, "got {:?}", a);
        }
    }

    #[test]
    fn byte_deterministic_output() {
        let c = ctx("C", 2);
        let fig = FigureSpec { radius: 2, base: true, shade_chambers: true, ..Default::default() };
        let one = render(&c, &fig).unwrap();
        let two = render(&c, &fig).unwrap();
        assert_eq!(one, two);
        assert!(one.starts_with("<svg"));
    }

    #[test]
    fn rank_one_is_rejected() {
        let c = ctx("A", 1);
        assert!(matches!(
            render(&c, &FigureSpec::default()),
            Err(RenderError::RankNot2(1))
        ));
    }
}
