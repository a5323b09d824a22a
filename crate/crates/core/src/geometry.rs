//! Point clouds of tiles and boundary pieces, Hausdorff distances, a
//! grid-based open-set check, and PPM/SVG output.
//!
//! Coordinates are in the lattice basis `{v, Av}`. A depth-`d` point is
//! `A^{-d} n` for an integer vector `n`; the `n` are built exactly and only
//! the final division by `A^d` happens in floating point.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{a_power, LatticeVec, TilePoly};
use crate::error::{Result, TileError};
use crate::gifs::GifsSystem;

pub const DEFAULT_TILE_DEPTH_MAX: u32 = 14;
pub const DEFAULT_BOUNDARY_DEPTH_MAX: u32 = 20;
pub const DEFAULT_OSC_DEPTH_MAX: u32 = 12;
/// Upper bound on generated points, independent of the depth guard.
pub const POINT_BUDGET: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
    pub points: Vec<(f64, f64)>,
    pub depth: u32,
}

impl PointCloud {
    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn bbox(&self) -> Option<(f64, f64, f64, f64)> {
        let first = self.points.first()?;
        Some(self.points.iter().fold((first.0, first.1, first.0, first.1), |b, &(x, y)| {
            (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y))
        }))
    }

    pub fn diameter_bound(&self) -> f64 {
        self.bbox().map(|(a, b, c, d)| ((c - a).powi(2) + (d - b).powi(2)).sqrt()).unwrap_or(0.0)
    }

    pub fn translated(&self, dx: f64, dy: f64) -> PointCloud {
        PointCloud { points: self.points.iter().map(|&(x, y)| (x + dx, y + dy)).collect(), depth: self.depth }
    }

    /// Image under the linear map of `poly`'s companion matrix.
    pub fn mapped_by_a(&self, poly: &TilePoly) -> PointCloud {
        let (p, q) = (poly.p() as f64, poly.q() as f64);
        PointCloud { points: self.points.iter().map(|&(g, d)| (-q * d, g - p * d)).collect(), depth: self.depth }
    }

    pub fn union(clouds: impl IntoIterator<Item = PointCloud>) -> PointCloud {
        let mut points = Vec::new();
        let mut depth = 0;
        for c in clouds {
            depth = depth.max(c.depth);
            points.extend(c.points);
        }
        PointCloud { points, depth }
    }

    /// One `x y` line per point.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (x, y) in &self.points {
            let _ = writeln!(s, "{x:.12} {y:.12}");
        }
        s
    }
}

fn scale_down(poly: &TilePoly, depth: u32, n: (i128, i128)) -> (f64, f64) {
    // A^{-d} = adj(A^d) / det(A^d), det(A^d) = q^d
    let m = a_power(poly, depth);
    let det = (poly.q() as f64).powi(depth as i32);
    let g = m[1][1] * n.0 - m[0][1] * n.1;
    let d = -m[1][0] * n.0 + m[0][0] * n.1;
    (g as f64 / det, d as f64 / det)
}

fn apply_a_i128(poly: &TilePoly, n: (i128, i128)) -> (i128, i128) {
    let (p, q) = (poly.p() as i128, poly.q() as i128);
    (-q * n.1, n.0 - p * n.1)
}

fn check_budget(base: u64, depth: u32, limit: u32) -> Result<()> {
    if depth > limit {
        return Err(TileError::DepthTooLarge { depth, limit });
    }
    let total = base.checked_pow(depth).unwrap_or(u64::MAX);
    if total > POINT_BUDGET as u64 {
        let fit = (1..=depth).take_while(|&d| base.pow(d) <= POINT_BUDGET as u64).last().unwrap_or(0);
        return Err(TileError::DepthTooLarge { depth, limit: fit });
    }
    Ok(())
}

/// Exact numerators `n = sum_{i=1..d} a_i A^{d-i} v` of the depth-`d` tile
/// points `A^{-d} n`, sorted and deduplicated.
pub fn tile_numerators(poly: &TilePoly, depth: u32) -> Vec<(i128, i128)> {
    let qa = poly.digit_count() as i128;
    let mut cur = vec![(0i128, 0i128)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(cur.len() * qa as usize);
        for &n in &cur {
            let an = apply_a_i128(poly, n);
            for a in 0..qa {
                next.push((an.0 + a, an.1));
            }
        }
        cur = next;
    }
    cur.sort_unstable();
    cur.dedup();
    cur
}

pub fn tile_cloud(poly: &TilePoly, depth: u32) -> Result<PointCloud> {
    tile_cloud_limited(poly, depth, DEFAULT_TILE_DEPTH_MAX)
}

/// [`tile_cloud`] with an explicit depth guard.
pub fn tile_cloud_limited(poly: &TilePoly, depth: u32, limit: u32) -> Result<PointCloud> {
    if depth == 0 {
        return Err(TileError::DepthTooLarge { depth, limit });
    }
    check_budget(poly.digit_count() as u64, depth, limit)?;
    let points = tile_numerators(poly, depth).into_iter().map(|n| scale_down(poly, depth, n)).collect();
    Ok(PointCloud { points, depth })
}

/// Exact numerators of the depth-`k` approximation of `T_ell`, seeded
/// with the origin at every vertex.
pub fn boundary_numerators(gs: &GifsSystem, ell: LatticeVec, depth: u32) -> Result<Vec<(i128, i128)>> {
    let start = gs.graph.index_of(&ell).ok_or(TileError::UnknownVertex(ell))?;
    let poly = *gs.poly();
    let mut states: HashSet<(usize, (i128, i128))> = HashSet::from([(start, (0, 0))]);
    for _ in 0..depth {
        let mut next = HashSet::with_capacity(states.len() * 2);
        for &(v, n) in &states {
            let an = apply_a_i128(&poly, n);
            for m in gs.maps_from(v) {
                next.insert((m.to, (an.0 + m.j as i128, an.1)));
            }
        }
        if next.len() > POINT_BUDGET {
            return Err(TileError::DepthTooLarge { depth, limit: DEFAULT_BOUNDARY_DEPTH_MAX });
        }
        states = next;
    }
    let mut out: Vec<(i128, i128)> = states.into_iter().map(|(_, n)| n).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Points of the depth-`k` approximation of the boundary piece `T_ell`.
pub fn boundary_cloud(gs: &GifsSystem, ell: LatticeVec, depth: u32) -> Result<PointCloud> {
    boundary_cloud_limited(gs, ell, depth, DEFAULT_BOUNDARY_DEPTH_MAX)
}

/// [`boundary_cloud`] with an explicit depth guard.
pub fn boundary_cloud_limited(gs: &GifsSystem, ell: LatticeVec, depth: u32, limit: u32) -> Result<PointCloud> {
    if depth > limit {
        return Err(TileError::DepthTooLarge { depth, limit });
    }
    let poly = *gs.poly();
    let points = boundary_numerators(gs, ell, depth)?.into_iter().map(|n| scale_down(&poly, depth, n)).collect();
    Ok(PointCloud { points, depth })
}

/// Union of all pieces `T_ell`, an approximation of the whole boundary.
pub fn boundary_union_cloud(gs: &GifsSystem, depth: u32) -> Result<PointCloud> {
    boundary_union_cloud_limited(gs, depth, DEFAULT_BOUNDARY_DEPTH_MAX)
}

pub fn boundary_union_cloud_limited(gs: &GifsSystem, depth: u32, limit: u32) -> Result<PointCloud> {
    let mut all = Vec::new();
    for ell in gs.graph.vertices() {
        all.extend(boundary_cloud_limited(gs, *ell, depth, limit)?.points);
    }
    all.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    all.dedup();
    Ok(PointCloud { points: all, depth })
}

fn directed_hausdorff(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let mut worst = 0.0f64;
    for &(x, y) in a {
        let mut best = f64::INFINITY;
        for &(u, w) in b {
            let d = (x - u).powi(2) + (y - w).powi(2);
            if d < best {
                best = d;
                if best <= worst {
                    break;
                }
            }
        }
        worst = worst.max(best);
    }
    worst.sqrt()
}

pub fn hausdorff_distance(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(TileError::EmptyCloud);
    }
    Ok(directed_hausdorff(&a.points, &b.points).max(directed_hausdorff(&b.points, &a.points)))
}

/// Hausdorff distance between `A * cloud(T_ell)` and the union of the
/// translated pieces `cloud(T_ell') + j v`, both at `depth`, together with
/// the diameter bound of the left side.
pub fn set_equation_gap(gs: &GifsSystem, ell: LatticeVec, depth: u32) -> Result<(f64, f64)> {
    let vi = gs.graph.index_of(&ell).ok_or(TileError::UnknownVertex(ell))?;
    let lhs = boundary_cloud(gs, ell, depth)?.mapped_by_a(gs.poly());
    let mut pieces = Vec::new();
    for m in gs.maps_from(vi) {
        pieces.push(boundary_cloud(gs, gs.graph.vertices()[m.to], depth)?.translated(m.j as f64, 0.0));
    }
    let rhs = PointCloud::union(pieces);
    Ok((hausdorff_distance(&lhs, &rhs)?, lhs.diameter_bound()))
}

/// Largest [`set_equation_gap`] over all vertices: the distance between the
/// two sides of the whole system in the max metric on tuples of sets,
/// together with the largest left-side diameter. Corner pieces can be
/// single points, so the diameter is not taken from the worst vertex.
pub fn set_equation_gap_max(gs: &GifsSystem, depth: u32) -> Result<(f64, f64)> {
    let mut worst = (0.0f64, 0.0f64);
    for ell in gs.graph.vertices() {
        let (d, diam) = set_equation_gap(gs, *ell, depth)?;
        worst = (worst.0.max(d), worst.1.max(diam));
    }
    Ok(worst)
}

/// Area of the convex hull (monotone chain).
pub fn convex_hull_area(cloud: &PointCloud) -> f64 {
    let mut pts = cloud.points.clone();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup();
    if pts.len() < 3 {
        return 0.0;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    let n = hull.len();
    (0..n).map(|i| cross((0.0, 0.0), hull[i], hull[(i + 1) % n])).sum::<f64>().abs() / 2.0
}

/// Sets of the form `T + (gamma, delta)` used by the open-set check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OscKind {
    Containment,
    Disjointness,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscItem {
    pub vertex: LatticeVec,
    pub kind: OscKind,
    pub passed: bool,
    /// Containment: fraction of right-side interior cells outside the left
    /// side. Disjointness: worst pairwise shared-interior fraction.
    pub measure: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscReport {
    pub depth: u32,
    pub inconclusive: bool,
    pub items: Vec<OscItem>,
}

impl OscReport {
    pub fn all_passed(&self) -> bool {
        !self.inconclusive && self.items.iter().all(|i| i.passed)
    }
    pub fn passed(&self, kind: OscKind) -> bool {
        !self.inconclusive && self.items.iter().filter(|i| i.kind == kind).all(|i| i.passed)
    }
}

/// Tolerance on the shared-interior fraction of two right-side pieces.
pub const OSC_OVERLAP_TOLERANCE: f64 = 0.01;
/// Tolerance on right-side interior cells missing from the left side.
pub const OSC_CONTAINMENT_TOLERANCE: f64 = 0.01;
const OSC_MARGIN: i64 = 2;

struct Grid {
    x0: f64,
    y0: f64,
    h: f64,
    nx: i64,
    ny: i64,
}

impl Grid {
    fn cell(&self, x: f64, y: f64) -> Option<(i64, i64)> {
        let i = ((x - self.x0) / self.h).floor() as i64;
        let j = ((y - self.y0) / self.h).floor() as i64;
        (i >= 0 && j >= 0 && i < self.nx && j < self.ny).then_some((i, j))
    }

    fn occupancy(&self, pts: &[(f64, f64)], dx: f64, dy: f64) -> Vec<bool> {
        let mut occ = vec![false; (self.nx * self.ny) as usize];
        for &(x, y) in pts {
            if let Some((i, j)) = self.cell(x + dx, y + dy) {
                occ[(j * self.nx + i) as usize] = true;
            }
        }
        occ
    }

    /// Occupied cells whose whole `margin`-neighborhood is occupied.
    fn interior(&self, occ: &[bool], margin: i64) -> Vec<bool> {
        let mut out = vec![false; occ.len()];
        for j in 0..self.ny {
            for i in 0..self.nx {
                let mut all = true;
                'scan: for dj in -margin..=margin {
                    for di in -margin..=margin {
                        let (a, b) = (i + di, j + dj);
                        if a < 0 || b < 0 || a >= self.nx || b >= self.ny || !occ[(b * self.nx + a) as usize] {
                            all = false;
                            break 'scan;
                        }
                    }
                }
                out[(j * self.nx + i) as usize] = all;
            }
        }
        out
    }

    fn dilate(&self, occ: &[bool], r: i64) -> Vec<bool> {
        let mut out = vec![false; occ.len()];
        for j in 0..self.ny {
            for i in 0..self.nx {
                if !occ[(j * self.nx + i) as usize] {
                    continue;
                }
                for dj in -r..=r {
                    for di in -r..=r {
                        let (a, b) = (i + di, j + dj);
                        if a >= 0 && b >= 0 && a < self.nx && b < self.ny {
                            out[(b * self.nx + a) as usize] = true;
                        }
                    }
                }
            }
        }
        out
    }
}

/// Grid check of the open-set condition with `O_l = (T + l)°`: for each
/// vertex `l`, the pieces `(T + l')° + j v` of the set equation should lie
/// in `A (T + l)°` and be pairwise disjoint.
pub fn check_osc_numeric(poly: &TilePoly, gs: &GifsSystem, depth: u32) -> Result<OscReport> {
    if depth > DEFAULT_OSC_DEPTH_MAX {
        return Err(TileError::DepthTooLarge { depth, limit: DEFAULT_OSC_DEPTH_MAX });
    }
    if depth < 4 {
        return Ok(OscReport { depth, inconclusive: true, items: Vec::new() });
    }
    let tile = tile_cloud_limited(poly, depth, DEFAULT_OSC_DEPTH_MAX)?;
    let qa = poly.digit_count();
    let verts = gs.graph.vertices();
    let mut items = Vec::new();
    let mut inconclusive = false;
    for (vi, ell) in verts.iter().enumerate() {
        let a_ell = crate::algebra::apply_a(*ell, poly);
        // A(T + l) = T + D + A l
        let left_shifts: Vec<(f64, f64)> = (0..qa).map(|d| ((a_ell.gamma + d) as f64, a_ell.delta as f64)).collect();
        let pieces: Vec<(LatticeVec, i64, (f64, f64))> = gs
            .maps_from(vi)
            .map(|m| {
                let t = verts[m.to];
                (t, m.j, ((t.gamma + m.j) as f64, t.delta as f64))
            })
            .collect();
        let (tx0, ty0, tx1, ty1) = tile.bbox().ok_or(TileError::EmptyCloud)?;
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(dx, dy) in left_shifts.iter().chain(pieces.iter().map(|p| &p.2)) {
            x0 = x0.min(tx0 + dx);
            y0 = y0.min(ty0 + dy);
            x1 = x1.max(tx1 + dx);
            y1 = y1.max(ty1 + dy);
        }
        // about four points per cell for a unit-area tile
        let h = (4.0 / tile.len() as f64).sqrt();
        let pad = 4.0 * h;
        let grid = Grid {
            x0: x0 - pad,
            y0: y0 - pad,
            h,
            nx: ((x1 - x0 + 2.0 * pad) / h).ceil() as i64 + 1,
            ny: ((y1 - y0 + 2.0 * pad) / h).ceil() as i64 + 1,
        };
        let mut left = vec![false; (grid.nx * grid.ny) as usize];
        for &(dx, dy) in &left_shifts {
            for (c, o) in left.iter_mut().zip(grid.occupancy(&tile.points, dx, dy)) {
                *c |= o;
            }
        }
        let left = grid.dilate(&left, 1);
        let interiors: Vec<Vec<bool>> = pieces
            .iter()
            .map(|&(_, _, (dx, dy))| grid.interior(&grid.occupancy(&tile.points, dx, dy), OSC_MARGIN))
            .collect();
        let counts: Vec<usize> = interiors.iter().map(|m| m.iter().filter(|&&b| b).count()).collect();
        if counts.iter().any(|&c| c < 16) {
            inconclusive = true;
        }

        let missing: usize = interiors.iter().map(|m| m.iter().zip(&left).filter(|(&a, &b)| a && !b).count()).sum();
        let total: usize = counts.iter().sum::<usize>().max(1);
        let frac = missing as f64 / total as f64;
        items.push(OscItem {
            vertex: *ell,
            kind: OscKind::Containment,
            passed: frac < OSC_CONTAINMENT_TOLERANCE,
            measure: frac,
            detail: format!("{} pieces in A(T+{})°", pieces.len(), ell.name()),
        });

        let mut worst = 0.0f64;
        let mut worst_pair = String::from("none");
        for a in 0..pieces.len() {
            for b in a + 1..pieces.len() {
                let shared = interiors[a].iter().zip(&interiors[b]).filter(|(&x, &y)| x && y).count();
                let f = shared as f64 / counts[a].min(counts[b]).max(1) as f64;
                if f > worst {
                    worst = f;
                    let (la, ja, _) = pieces[a];
                    let (lb, jb, _) = pieces[b];
                    worst_pair = format!("(T+{})°+{}v vs (T+{})°+{}v", la.name(), ja, lb.name(), jb);
                }
            }
        }
        items.push(OscItem {
            vertex: *ell,
            kind: OscKind::Disjointness,
            passed: worst < OSC_OVERLAP_TOLERANCE,
            measure: worst,
            detail: format!("worst pair {worst_pair}"),
        });
    }
    Ok(OscReport { depth, inconclusive, items })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ImageFormat {
    Ppm,
    Svg,
}

impl ImageFormat {
    pub fn from_path(path: &Path) -> Option<ImageFormat> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "ppm" => Some(ImageFormat::Ppm),
            "svg" => Some(ImageFormat::Svg),
            _ => None,
        }
    }
}

struct Frame {
    x0: f64,
    y0: f64,
    scale: f64,
    width: u32,
    height: u32,
}

fn frame(cloud: &PointCloud, width: u32) -> Frame {
    let Some((x0, y0, x1, y1)) = cloud.bbox() else {
        return Frame { x0: 0.0, y0: 0.0, scale: 1.0, width, height: width };
    };
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let mx = 0.05 * span;
    let (w, h) = (x1 - x0 + 2.0 * mx, y1 - y0 + 2.0 * mx);
    let scale = (width as f64 - 1.0) / w.max(h);
    let height = ((h * scale).ceil() as u32 + 1).clamp(1, width);
    Frame { x0: x0 - mx, y0: y0 - mx, scale, width, height }
}

impl Frame {
    fn pixel(&self, x: f64, y: f64) -> (u32, u32) {
        let px = ((x - self.x0) * self.scale).round().clamp(0.0, self.width as f64 - 1.0) as u32;
        let py = ((y - self.y0) * self.scale).round().clamp(0.0, self.height as f64 - 1.0) as u32;
        // y axis points up
        (px, self.height - 1 - py)
    }
}

/// Image bytes for `cloud`: binary PPM or an SVG of unit rects.
pub fn render_bytes(cloud: &PointCloud, format: ImageFormat, width: u32) -> Result<Vec<u8>> {
    if !(64..=4096).contains(&width) {
        return Err(TileError::BadWidth(width));
    }
    let f = frame(cloud, width);
    match format {
        ImageFormat::Ppm => {
            let mut px = vec![255u8; (f.width * f.height * 3) as usize];
            for &(x, y) in &cloud.points {
                let (i, j) = f.pixel(x, y);
                let k = ((j * f.width + i) * 3) as usize;
                px[k..k + 3].copy_from_slice(&[0, 0, 0]);
            }
            let mut out = format!("P6\n{} {}\n255\n", f.width, f.height).into_bytes();
            out.extend(px);
            Ok(out)
        }
        ImageFormat::Svg => {
            let mut seen = HashSet::new();
            let mut s = String::new();
            let _ = writeln!(
                s,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
                w = f.width,
                h = f.height
            );
            let _ = writeln!(s, "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>", f.width, f.height);
            let mut cells: Vec<(u32, u32)> = cloud.points.iter().map(|&(x, y)| f.pixel(x, y)).filter(|c| seen.insert(*c)).collect();
            cells.sort_unstable_by_key(|&(i, j)| (j, i));
            for (i, j) in cells {
                let _ = writeln!(s, "<rect x=\"{i}\" y=\"{j}\" width=\"1\" height=\"1\" fill=\"black\"/>");
            }
            s.push_str("</svg>\n");
            Ok(s.into_bytes())
        }
    }
}

pub fn render(cloud: &PointCloud, path: &Path, format: ImageFormat, width: u32) -> Result<()> {
    let bytes = render_bytes(cloud, format, width)?;
    let mut f = std::fs::File::create(path)?;
    f.write_all(&bytes)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_poly;
    use crate::gifs::build_gifs;
    use crate::neighbors::appendix_neighbor_graph;

    fn poly(p: i64, q: i64) -> TilePoly {
        validate_poly(p, q).unwrap()
    }

    fn gifs(p: i64, q: i64) -> GifsSystem {
        let poly = poly(p, q);
        build_gifs(&appendix_neighbor_graph(&poly), &poly).unwrap()
    }

    #[test]
    fn depth_one_tile() {
        let c = tile_cloud(&poly(2, 3), 1).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.points.contains(&(0.0, 0.0)));
        assert!(matches!(tile_cloud(&poly(2, 3), 15), Err(TileError::DepthTooLarge { .. })));
    }

    #[test]
    fn square_tile_hull() {
        let c = tile_cloud(&poly(0, 2), 12).unwrap();
        let area = convex_hull_area(&c);
        assert!((area - 1.0).abs() < 0.1, "{area}");
    }

    #[test]
    fn hausdorff_basics() {
        let a = PointCloud { points: vec![(0.0, 0.0)], depth: 0 };
        let b = PointCloud { points: vec![(3.0, 4.0)], depth: 0 };
        assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), 5.0);
        let e = PointCloud { points: vec![], depth: 0 };
        assert_eq!(hausdorff_distance(&a, &e), Err(TileError::EmptyCloud));
    }

    #[test]
    fn boundary_seed_and_origin() {
        let gs = gifs(-2, 2);
        let avmv = LatticeVec::new(-1, 1);
        assert_eq!(boundary_cloud(&gs, avmv, 0).unwrap().points, vec![(0.0, 0.0)]);
        for k in [1, 5, 12] {
            assert!(boundary_cloud(&gs, avmv, k).unwrap().points.contains(&(0.0, 0.0)));
        }
        assert_eq!(boundary_cloud(&gs, LatticeVec::new(7, 7), 3), Err(TileError::UnknownVertex(LatticeVec::new(7, 7))));
    }

    #[test]
    fn render_is_deterministic() {
        let c = tile_cloud(&poly(-2, 2), 8).unwrap();
        let a = render_bytes(&c, ImageFormat::Ppm, 128).unwrap();
        assert_eq!(a, render_bytes(&c, ImageFormat::Ppm, 128).unwrap());
        assert!(a.starts_with(b"P6\n128 "));
        let svg = String::from_utf8(render_bytes(&c, ImageFormat::Svg, 64).unwrap()).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        let empty = PointCloud { points: vec![], depth: 0 };
        assert_eq!(render_bytes(&empty, ImageFormat::Ppm, 64).unwrap().len(), "P6\n64 64\n255\n".len() + 64 * 64 * 3);
        assert_eq!(render_bytes(&c, ImageFormat::Ppm, 10), Err(TileError::BadWidth(10)));
    }

    #[test]
    fn osc_guard_depth() {
        let p = poly(2, 3);
        let r = check_osc_numeric(&p, &gifs(2, 3), 1).unwrap();
        assert!(r.inconclusive);
    }
}
