//! Exact alcove geometry: hyperplanes, alcove coordinates, marked alcoves
//! with wall labelings, galleries, simplicial regions, and the three distance
//! functions.
//!
//! An alcove is stored as its integer coordinate vector over the positive
//! roots (coords[a] = k iff k < <x, a> < k + 1 on the interior) together with
//! an exact rational interior point that witnesses nonemptiness.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::Signed;
use thiserror::Error;

use crate::group::{GroupContext, GroupElement};
use crate::linalg::{floor_to_i64, rat, Point};
use crate::rootsys::{FiniteWeylElement, RootSystem};

/// The set {x : <x, alpha> = level} for a positive root alpha.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub root: usize,
    pub level: i64,
}

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("vertex is not special")]
    VertexNotSpecial,
    #[error("hyperplane is not a wall of the alcove")]
    NotAWall,
    #[error("coordinate vector does not describe an alcove")]
    InvalidCoords,
    #[error("alcove search exceeded cap {cap}")]
    SearchCap { cap: usize },
    #[error("gallery alcoves are not consecutively adjacent")]
    NotAGallery,
}

/// Affine reflection of a point across a hyperplane.
pub fn reflect_point(rs: &RootSystem, h: Hyperplane, x: &Point) -> Point {
    let root = &rs.positive_roots[h.root];
    let excess = x.pair(&root.pairings) - rat(h.level);
    x.sub(&rs.coroot_point(h.root).scale(&excess))
}

/// Image of a hyperplane under the affine reflection across `mirror`.
pub fn reflect_hyperplane(rs: &RootSystem, mirror: Hyperplane, h: Hyperplane) -> Hyperplane {
    // linear part s_alpha, translation by level * alpha^vee
    let m_root = &rs.positive_roots[mirror.root];
    let target = &rs.positive_roots[h.root];
    // s_alpha(beta) as covector
    let pair_with_coroot: i64 = m_root
        .coroot
        .iter()
        .zip(&target.pairings)
        .map(|(&c, &p)| c * p)
        .sum();
    let image: Vec<i64> = target
        .pairings
        .iter()
        .zip(&m_root.pairings)
        .map(|(&t, &a)| t - pair_with_coroot * a)
        .collect();
    let (idx, negative) = rs
        .classify_covector(&image)
        .expect("reflection of a root is a root");
    // level transforms by k + mirror.level * <alpha^vee, s_alpha(beta)>
    let coroot_pairing: i64 = rs.positive_roots[mirror.root]
        .coroot
        .iter()
        .zip(&image)
        .map(|(&c, &p)| c * p)
        .sum();
    let level = h.level + mirror.level * coroot_pairing;
    if negative {
        Hyperplane { root: idx, level: -level }
    } else {
        Hyperplane { root: idx, level }
    }
}

/// Image of a hyperplane under a group element.
pub fn map_hyperplane(ctx: &GroupContext, w: &GroupElement, h: Hyperplane) -> Hyperplane {
    let rs = &ctx.roots;
    let image = w.finite.apply_covector(&rs.positive_roots[h.root].pairings);
    let (idx, negative) = rs.classify_covector(&image).expect("Weyl image of a root");
    let shift = w.translation.pair_int(&image);
    let level = h.level + i64::try_from(&shift).unwrap();
    if negative {
        Hyperplane { root: idx, level: -level }
    } else {
        Hyperplane { root: idx, level }
    }
}

/// An alcove of the affine hyperplane arrangement.
#[derive(Clone, Debug)]
pub struct Alcove {
    coords: Vec<i64>,
    interior: Point,
}

impl PartialEq for Alcove {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}
impl Eq for Alcove {}
impl std::hash::Hash for Alcove {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}
impl PartialOrd for Alcove {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Alcove {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl Alcove {
    pub fn base(rs: &RootSystem) -> Alcove {
        Alcove {
            coords: vec![0; rs.positive_roots.len()],
            interior: rs.interior_point.clone(),
        }
    }

    /// The alcove containing an interior point (which must avoid every hyperplane).
    pub fn of_point(rs: &RootSystem, x: &Point) -> Alcove {
        let coords = rs
            .positive_roots
            .iter()
            .map(|root| {
                let v = x.pair(&root.pairings);
                assert!(!v.is_integer(), "point lies on a hyperplane");
                floor_to_i64(&v)
            })
            .collect();
        Alcove {
            coords,
            interior: x.clone(),
        }
    }

    pub fn of_element(ctx: &GroupContext, w: &GroupElement) -> Alcove {
        Alcove::of_point(&ctx.roots, &ctx.act_on_point(w, &ctx.roots.interior_point))
    }

    /// Realizes a raw coordinate vector by walking from the base alcove;
    /// fails when the coordinates are not those of an actual alcove.
    pub fn from_coords(rs: &RootSystem, coords: &[i64]) -> Result<Alcove, GeometryError> {
        if coords.len() != rs.positive_roots.len() {
            return Err(GeometryError::InvalidCoords);
        }
        let mut cur = Alcove::base(rs);
        while cur.coords != coords {
            let mut moved = false;
            for (h, neighbor) in cur.walls_with_neighbors(rs) {
                let target_side = if coords[h.root] >= h.level { 1 } else { -1 };
                if cur.side_of(h) != target_side {
                    cur = neighbor;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return Err(GeometryError::InvalidCoords);
            }
        }
        Ok(cur)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn interior(&self) -> &Point {
        &self.interior
    }

    /// +1 iff the alcove lies on the side where the pairing exceeds the level.
    pub fn side_of(&self, h: Hyperplane) -> i8 {
        if self.coords[h.root] >= h.level {
            1
        } else {
            -1
        }
    }

    /// Total number of separating hyperplanes.
    pub fn distance(&self, other: &Alcove) -> u64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }

    pub fn reflect(&self, rs: &RootSystem, h: Hyperplane) -> Alcove {
        Alcove::of_point(rs, &reflect_point(rs, h, &self.interior))
    }

    /// The r+1 walls of the alcove with the adjacent alcove across each.
    pub fn walls_with_neighbors(&self, rs: &RootSystem) -> Vec<(Hyperplane, Alcove)> {
        let mut out = Vec::with_capacity(rs.rank + 1);
        for root in 0..rs.positive_roots.len() {
            for level in [self.coords[root], self.coords[root] + 1] {
                let h = Hyperplane { root, level };
                let image = self.reflect(rs, h);
                if self.distance(&image) == 1 {
                    out.push((h, image));
                }
            }
        }
        debug_assert_eq!(out.len(), rs.rank + 1);
        out
    }

    pub fn walls(&self, rs: &RootSystem) -> Vec<Hyperplane> {
        self.walls_with_neighbors(rs).into_iter().map(|(h, _)| h).collect()
    }

    pub fn has_wall(&self, rs: &RootSystem, h: Hyperplane) -> bool {
        (h.level == self.coords[h.root] || h.level == self.coords[h.root] + 1)
            && self.distance(&self.reflect(rs, h)) == 1
    }

    pub fn closure_contains(&self, rs: &RootSystem, v: &Point) -> bool {
        rs.positive_roots.iter().enumerate().all(|(i, root)| {
            let p = v.pair(&root.pairings);
            p >= rat(self.coords[i]) && p <= rat(self.coords[i] + 1)
        })
    }
}

/// True when every root pairing at the point is integral.
pub fn is_special_vertex(rs: &RootSystem, v: &Point) -> bool {
    rs.positive_roots.iter().all(|root| v.pair(&root.pairings).is_integer())
}

/// The finitely many alcoves whose closure contains a special vertex.
pub fn alcoves_at_vertex(rs: &RootSystem, v: &Point) -> Result<Vec<Alcove>, GeometryError> {
    if !is_special_vertex(rs, v) {
        return Err(GeometryError::VertexNotSpecial);
    }
    let first = Alcove::of_point(rs, &v.add(&rs.interior_point));
    debug_assert!(first.closure_contains(rs, v));
    let mut seen = HashSet::new();
    seen.insert(first.clone());
    let mut queue = VecDeque::from([first]);
    let mut out = Vec::new();
    while let Some(a) = queue.pop_front() {
        for (h, nb) in a.walls_with_neighbors(rs) {
            let on_wall = v.pair(&rs.positive_roots[h.root].pairings) == rat(h.level);
            if on_wall && !seen.contains(&nb) {
                seen.insert(nb.clone());
                queue.push_back(nb);
            }
        }
        out.push(a);
    }
    out.sort();
    Ok(out)
}

/// A marked alcove: the alcove, a special vertex in its closure, and the
/// labeling of its walls by the affine generators (index 0 the affine one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedAlcove {
    pub alcove: Alcove,
    pub vertex: Point,
    pub labeling: Vec<Hyperplane>,
}

impl MarkedAlcove {
    /// Base marking: base alcove, origin, each generator labeling its fixed wall.
    pub fn base(ctx: &GroupContext) -> MarkedAlcove {
        let rs = &ctx.roots;
        let mut labeling = Vec::with_capacity(rs.rank + 1);
        labeling.push(Hyperplane {
            root: rs.highest_root,
            level: 1,
        });
        for i in 0..rs.rank {
            labeling.push(Hyperplane { root: i, level: 0 });
        }
        MarkedAlcove {
            alcove: Alcove::base(rs),
            vertex: Point::zero(rs.rank),
            labeling,
        }
    }

    /// The image of the base marking under a group element.
    pub fn of_element(ctx: &GroupContext, w: &GroupElement) -> MarkedAlcove {
        let base = MarkedAlcove::base(ctx);
        MarkedAlcove {
            alcove: Alcove::of_element(ctx, w),
            vertex: ctx.act_on_point(w, &base.vertex),
            labeling: base
                .labeling
                .iter()
                .map(|&h| map_hyperplane(ctx, w, h))
                .collect(),
        }
    }

    /// The operation reflecting across the wall labeled by generator `s`.
    pub fn reflect(&self, rs: &RootSystem, s: usize) -> MarkedAlcove {
        let mirror = self.labeling[s];
        MarkedAlcove {
            alcove: self.alcove.reflect(rs, mirror),
            vertex: reflect_point(rs, mirror, &self.vertex),
            labeling: self
                .labeling
                .iter()
                .map(|&h| reflect_hyperplane(rs, mirror, h))
                .collect(),
        }
    }

    /// The unique Weyl chamber at the vertex containing the alcove.
    pub fn chamber(&self, rs: &RootSystem) -> Result<Chamber, GeometryError> {
        Chamber::at_vertex_containing(rs, &self.vertex, self.alcove.interior())
    }
}

/// A Weyl chamber at a special vertex: vertex + orient(dominant cone).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub vertex: Point,
    pub orient: FiniteWeylElement,
}

impl Chamber {
    pub fn dominant(rs: &RootSystem) -> Chamber {
        Chamber {
            vertex: Point::zero(rs.rank),
            orient: FiniteWeylElement::identity(rs.rank),
        }
    }

    pub fn antidominant(rs: &RootSystem) -> Chamber {
        Chamber::dominant(rs).opposite(rs)
    }

    pub fn opposite(&self, rs: &RootSystem) -> Chamber {
        Chamber {
            vertex: self.vertex.clone(),
            orient: self.orient.compose(&rs.longest_element()),
        }
    }

    /// The chamber at `vertex` containing the given point off all hyperplanes.
    pub fn at_vertex_containing(
        rs: &RootSystem,
        vertex: &Point,
        point: &Point,
    ) -> Result<Chamber, GeometryError> {
        if !is_special_vertex(rs, vertex) {
            return Err(GeometryError::VertexNotSpecial);
        }
        let mut y = point.sub(vertex);
        let mut w = FiniteWeylElement::identity(rs.rank);
        loop {
            let mut moved = false;
            for i in 1..=rs.rank {
                if y.pair(&rs.positive_roots[i - 1].pairings).is_negative() {
                    let s = rs.simple_reflection(i);
                    y = s.apply_point(&y);
                    w = s.compose(&w);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        // point - vertex is in orient(dominant cone) with orient = w^{-1}
        Ok(Chamber {
            vertex: vertex.clone(),
            orient: w.inverse(),
        })
    }

    /// Sign of the chamber against every positive root (by the orientation).
    fn sign(&self, rs: &RootSystem, root: usize) -> i8 {
        let pre = self
            .orient
            .inverse()
            .apply_covector(&rs.positive_roots[root].pairings);
        let (_, negative) = rs.classify_covector(&pre).expect("Weyl image of a root");
        if negative {
            -1
        } else {
            1
        }
    }

    pub fn contains_alcove(&self, rs: &RootSystem, a: &Alcove) -> bool {
        (0..rs.positive_roots.len()).all(|root| {
            let level = self.vertex.pair_int(&rs.positive_roots[root].pairings);
            let level = i64::try_from(&level).unwrap();
            a.side_of(Hyperplane { root, level }) == self.sign(rs, root)
        })
    }

    pub fn contains_point(&self, rs: &RootSystem, x: &Point) -> bool {
        (0..rs.positive_roots.len()).all(|root| {
            let d = x
                .sub(&self.vertex)
                .pair(&rs.positive_roots[root].pairings);
            match self.sign(rs, root) {
                1 => d.is_positive(),
                _ => d.is_negative(),
            }
        })
    }

    /// Some(side) when the whole chamber lies weakly on one side of `h`.
    pub fn weak_side_of(&self, rs: &RootSystem, h: Hyperplane) -> Option<i8> {
        let apex = self.vertex.pair(&rs.positive_roots[h.root].pairings);
        match self.sign(rs, h.root) {
            1 if apex >= rat(h.level) => Some(1),
            -1 if apex <= rat(h.level) => Some(-1),
            _ => None,
        }
    }
}

/// A simplicial region: a half-space or a Weyl chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    HalfSpace { hyperplane: Hyperplane, side: i8 },
    Chamber(Chamber),
}

impl Region {
    pub fn contains_alcove(&self, rs: &RootSystem, a: &Alcove) -> bool {
        match self {
            Region::HalfSpace { hyperplane, side } => a.side_of(*hyperplane) == *side,
            Region::Chamber(c) => c.contains_alcove(rs, a),
        }
    }

    /// Some(side) when the whole region lies weakly on one side of `h`.
    pub fn weak_side_of(&self, rs: &RootSystem, h: Hyperplane) -> Option<i8> {
        match self {
            Region::HalfSpace { hyperplane, side } => {
                if hyperplane.root != h.root {
                    return None;
                }
                match side {
                    1 if h.level <= hyperplane.level => Some(1),
                    -1 if h.level >= hyperplane.level => Some(-1),
                    _ => None,
                }
            }
            Region::Chamber(c) => c.weak_side_of(rs, h),
        }
    }
}

/// Gallery of pairwise-adjacent, non-stuttering alcoves with its walls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gallery {
    pub alcoves: Vec<Alcove>,
    pub walls: Vec<Hyperplane>,
}

impl Gallery {
    pub fn new(alcoves: Vec<Alcove>) -> Result<Gallery, GeometryError> {
        assert!(!alcoves.is_empty());
        let mut walls = Vec::with_capacity(alcoves.len().saturating_sub(1));
        for pair in alcoves.windows(2) {
            if pair[0].distance(&pair[1]) != 1 {
                return Err(GeometryError::NotAGallery);
            }
            let root = (0..pair[0].coords.len())
                .find(|&i| pair[0].coords[i] != pair[1].coords[i])
                .unwrap();
            let level = pair[0].coords[root].max(pair[1].coords[root]);
            walls.push(Hyperplane { root, level });
        }
        Ok(Gallery { alcoves, walls })
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn first(&self) -> &Alcove {
        self.alcoves.first().unwrap()
    }

    pub fn last(&self) -> &Alcove {
        self.alcoves.last().unwrap()
    }

    pub fn is_minimal(&self) -> bool {
        self.len() as u64 == self.first().distance(self.last())
    }
}

/// A minimal gallery, built by greedy separating-wall crossings.
pub fn minimal_gallery(rs: &RootSystem, a: &Alcove, b: &Alcove) -> Gallery {
    let mut alcoves = vec![a.clone()];
    let mut cur = a.clone();
    while cur != *b {
        let mut next = None;
        for (h, nb) in cur.walls_with_neighbors(rs) {
            let b_side = if b.coords[h.root] >= h.level { 1 } else { -1 };
            if cur.side_of(h) != b_side {
                next = Some(nb);
                break;
            }
        }
        cur = next.expect("some wall separates distinct alcoves");
        alcoves.push(cur.clone());
    }
    let g = Gallery::new(alcoves).expect("constructed gallery is adjacent");
    debug_assert!(g.is_minimal());
    g
}

/// The umbrella predicate: the gallery stays on `a`'s side of `h` and extends
/// to a minimal gallery ending at `a`.
pub fn is_umbrella(
    rs: &RootSystem,
    g: &Gallery,
    a: &Alcove,
    h: Hyperplane,
) -> Result<bool, GeometryError> {
    if !a.has_wall(rs, h) {
        return Err(GeometryError::NotAWall);
    }
    let a_side = a.side_of(h);
    if !g.alcoves.iter().all(|b| b.side_of(h) == a_side) {
        return Ok(false);
    }
    if !g.is_minimal() {
        return Ok(false);
    }
    // each intermediate wall separates its alcove from a
    for (i, w) in g.walls.iter().enumerate() {
        if g.alcoves[i].side_of(*w) == a.side_of(*w) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distance from an alcove to a simplicial region, with the achieving alcove.
/// Greedy certified wall-crossings first, bounded BFS as fallback.
pub fn dist_alcove_region(
    rs: &RootSystem,
    a: &Alcove,
    region: &Region,
    bfs_cap: usize,
) -> Result<(u64, Alcove), GeometryError> {
    let mut cur = a.clone();
    let mut steps = 0u64;
    loop {
        if region.contains_alcove(rs, &cur) {
            return Ok((steps, cur));
        }
        // a wall strictly separating cur from the whole region lets us move
        let mut advanced = false;
        for (h, nb) in cur.walls_with_neighbors(rs) {
            if let Some(side) = region.weak_side_of(rs, h) {
                if cur.side_of(h) != side {
                    cur = nb;
                    steps += 1;
                    advanced = true;
                    break;
                }
            }
        }
        if !advanced {
            let (d, achieved) = bfs_to_region(rs, &cur, region, bfs_cap)?;
            return Ok((steps + d, achieved));
        }
    }
}

fn bfs_to_region(
    rs: &RootSystem,
    start: &Alcove,
    region: &Region,
    cap: usize,
) -> Result<(u64, Alcove), GeometryError> {
    let mut dist: HashMap<Alcove, u64> = HashMap::new();
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(a) = queue.pop_front() {
        let d = dist[&a];
        if region.contains_alcove(rs, &a) {
            return Ok((d, a));
        }
        for (_, nb) in a.walls_with_neighbors(rs) {
            if !dist.contains_key(&nb) {
                if dist.len() >= cap {
                    return Err(GeometryError::SearchCap { cap });
                }
                dist.insert(nb.clone(), d + 1);
                queue.push_back(nb);
            }
        }
    }
    unreachable!("nonempty simplicial regions are reachable")
}

/// Distance from a special vertex to a region: minimum over the alcoves at
/// the vertex.
pub fn dist_vertex_region(
    rs: &RootSystem,
    v: &Point,
    region: &Region,
    bfs_cap: usize,
) -> Result<u64, GeometryError> {
    let mut best: Option<u64> = None;
    for a in alcoves_at_vertex(rs, v)? {
        let (d, _) = dist_alcove_region(rs, &a, region, bfs_cap)?;
        best = Some(best.map_or(d, |b| b.min(d)));
    }
    Ok(best.expect("a vertex has at least one alcove"))
}

/// All alcoves within gallery distance `radius` of `center`.
pub fn alcove_ball(rs: &RootSystem, center: &Alcove, radius: u64) -> Vec<Alcove> {
    let mut dist: HashMap<Alcove, u64> = HashMap::new();
    dist.insert(center.clone(), 0);
    let mut queue = VecDeque::from([center.clone()]);
    let mut out = vec![center.clone()];
    while let Some(a) = queue.pop_front() {
        let d = dist[&a];
        if d == radius {
            continue;
        }
        for (_, nb) in a.walls_with_neighbors(rs) {
            if !dist.contains_key(&nb) {
                dist.insert(nb.clone(), d + 1);
                out.push(nb.clone());
                queue.push_back(nb);
            }
        }
    }
    out.sort();
    out
}

/// A reduced word for the translation by twice the sum of the fundamental
/// coweights; cycling it drives the anti-dominant search.
pub fn infinite_gallery_word(ctx: &GroupContext) -> Vec<usize> {
    let two_rho = ctx.roots.rho_check.scale(&rat(2));
    let t = ctx.translation(&two_rho);
    let (word, rest) = ctx.reduced_word(&t);
    assert_eq!(rest, ctx.identity(), "translation lies in the affine Weyl group");
    assert_eq!(word.len() as u64, ctx.length(&t));
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::LatticeSpec;
    use crate::linalg::ratio;
    use crate::rootsys::{build_root_system, CartanDatum, Family};

    fn ctx(family: Family, rank: usize, coweight: bool) -> GroupContext {
        let rs = build_root_system(CartanDatum::new(family, rank).unwrap()).unwrap();
        let lat = if coweight {
            LatticeSpec::coweight(&rs)
        } else {
            LatticeSpec::adjoint(&rs)
        };
        GroupContext::new(rs, lat, 2000).unwrap()
    }

    #[test]
    fn base_alcove_sides() {
        let c = ctx(Family::A, 2, false);
        let rs = &c.roots;
        let base = Alcove::base(rs);
        for i in 0..rs.rank {
            assert_eq!(base.side_of(Hyperplane { root: i, level: 0 }), 1);
        }
        assert_eq!(
            base.side_of(Hyperplane { root: rs.highest_root, level: 1 }),
            -1
        );
        // reflecting across the affine wall flips to the positive side
        let s0 = c.delta_aff(0);
        let img = Alcove::of_element(&c, &s0);
        assert_eq!(img.side_of(Hyperplane { root: rs.highest_root, level: 1 }), 1);
    }

    #[test]
    fn distance_is_length() {
        let c = ctx(Family::A, 2, false);
        let base = Alcove::base(&c.roots);
        for seed in 0..10u64 {
            let w = c.random_element(6, seed);
            let img = Alcove::of_element(&c, &w);
            assert_eq!(base.distance(&img), c.length(&w));
        }
        let two_rho = c.roots.rho_check.scale(&rat(2));
        let t = c.translation(&two_rho);
        assert_eq!(base.distance(&Alcove::of_element(&c, &t)), 8);
    }

    #[test]
    fn walls_count_and_adjacency() {
        for c in [ctx(Family::A, 2, false), ctx(Family::C, 2, false), ctx(Family::G, 2, false)] {
            let rs = &c.roots;
            let base = Alcove::base(rs);
            let walls = base.walls_with_neighbors(rs);
            assert_eq!(walls.len(), rs.rank + 1);
            for (h, nb) in walls {
                assert_eq!(base.distance(&nb), 1);
                assert!(base.has_wall(rs, h));
                // reflecting twice returns
                assert_eq!(nb.reflect(rs, h), base);
            }
        }
    }

    #[test]
    fn from_coords_roundtrip_and_rejection() {
        let c = ctx(Family::A, 2, false);
        let rs = &c.roots;
        for seed in 0..8u64 {
            let w = c.random_element(5, seed);
            let a = Alcove::of_element(&c, &w);
            let re = Alcove::from_coords(rs, a.coords()).unwrap();
            assert_eq!(re, a);
        }
        // theta-coordinate forced by the simple coordinates in rank 2
        assert!(Alcove::from_coords(rs, &[0, 0, 5]).is_err());
    }

    #[test]
    fn base_marking_and_element_marking() {
        let c = ctx(Family::A, 1, false);
        let base = MarkedAlcove::base(&c);
        assert_eq!(base.vertex, Point::zero(1));
        assert_eq!(base.labeling[1], Hyperplane { root: 0, level: 0 });
        assert_eq!(base.labeling[0], Hyperplane { root: 0, level: 1 });

        let m = MarkedAlcove::of_element(&c, &c.delta_aff(0));
        assert_eq!(m.alcove.coords(), &[1]);
        assert_eq!(m.vertex, Point::from_i64(&[1]));
        // the labeling swaps the two walls
        assert_eq!(m.labeling[0], Hyperplane { root: 0, level: 1 });
        assert_eq!(m.labeling[1], Hyperplane { root: 0, level: 2 });
        assert_eq!(MarkedAlcove::of_element(&c, &c.identity()), MarkedAlcove::base(&c));
    }

    #[test]
    fn marked_reflection_is_involution() {
        let c = ctx(Family::C, 2, false);
        let rs = &c.roots;
        let base = MarkedAlcove::base(&c);
        for s in 0..c.delta_aff_count() {
            let m = base.reflect(rs, s);
            assert_eq!(m.reflect(rs, s), base);
            if s >= 1 {
                assert_eq!(m.vertex, Point::zero(2), "finite reflections fix the origin");
            } else {
                assert_ne!(m.vertex, Point::zero(2));
            }
        }
    }

    #[test]
    fn marked_reflection_matches_element_action() {
        // iterating the reflections of a word reproduces the word's marking
        let c = ctx(Family::G, 2, false);
        let rs = &c.roots;
        let word = infinite_gallery_word(&c);
        let mut m = MarkedAlcove::base(&c);
        let mut g = c.identity();
        for &s in &word {
            m = m.reflect(rs, s);
            g = c.compose(&g, &c.delta_aff(s));
        }
        assert_eq!(m, MarkedAlcove::of_element(&c, &g));
        let two_rho = c.roots.rho_check.scale(&rat(2));
        assert_eq!(g, c.translation(&two_rho));
    }

    #[test]
    fn chamber_membership() {
        let c = ctx(Family::A, 2, false);
        let rs = &c.roots;
        let dominant = Chamber::dominant(rs);
        let base = Alcove::base(rs);
        assert!(dominant.contains_alcove(rs, &base));
        // the affine reflection keeps the alcove dominant, a simple one does not
        let s0_img = Alcove::of_element(&c, &c.delta_aff(0));
        assert!(dominant.contains_alcove(rs, &s0_img));
        let s1_img = Alcove::of_element(&c, &c.delta_aff(1));
        assert!(!dominant.contains_alcove(rs, &s1_img));
        // chamber of a finite element's marking is the rotated cone
        let u = c.delta_aff(1);
        let m = MarkedAlcove::of_element(&c, &u);
        let ch = m.chamber(rs).unwrap();
        assert_eq!(ch.vertex, Point::zero(2));
        assert!(ch.contains_alcove(rs, &s1_img));
        assert!(!ch.contains_alcove(rs, &base));
        // chamber of a translation marking is the shifted dominant cone
        let t = c.translation(&Point::from_i64(&[1, 1]));
        let mt = MarkedAlcove::of_element(&c, &t);
        let cht = mt.chamber(rs).unwrap();
        assert_eq!(cht.vertex, Point::from_i64(&[1, 1]));
        assert_eq!(cht.orient, FiniteWeylElement::identity(2));
    }

    #[test]
    fn opposite_chamber_and_vertex_distances() {
        let c = ctx(Family::A, 1, false);
        let rs = &c.roots;
        let opp = Region::Chamber(Chamber::antidominant(rs));
        let base = Alcove::base(rs);
        // A1: the opposite chamber is one step away
        let (d, achieved) = dist_alcove_region(rs, &base, &opp, 10_000).unwrap();
        assert_eq!(d, 1);
        assert!(opp.contains_alcove(rs, &achieved));
        // vertex distances
        assert_eq!(dist_vertex_region(rs, &Point::zero(1), &opp, 10_000).unwrap(), 0);
        let v = Point::from_i64(&[1]);
        assert_eq!(dist_vertex_region(rs, &v, &opp, 10_000).unwrap(), 2);
    }

    #[test]
    fn halfspace_distance() {
        let c = ctx(Family::A, 2, false);
        let rs = &c.roots;
        let base = Alcove::base(rs);
        let hs = Region::HalfSpace {
            hyperplane: Hyperplane { root: rs.highest_root, level: 1 },
            side: 1,
        };
        let (d, _) = dist_alcove_region(rs, &base, &hs, 10_000).unwrap();
        assert_eq!(d, 1);
        let (d0, _) = dist_alcove_region(
            rs,
            &base,
            &Region::HalfSpace { hyperplane: Hyperplane { root: 0, level: 0 }, side: 1 },
            10_000,
        )
        .unwrap();
        assert_eq!(d0, 0);
    }

    #[test]
    fn minimal_gallery_properties() {
        let c = ctx(Family::A, 2, false);
        let rs = &c.roots;
        let base = Alcove::base(rs);
        let two_rho = c.roots.rho_check.scale(&rat(2));
        let target = Alcove::of_element(&c, &c.translation(&two_rho));
        let g = minimal_gallery(rs, &base, &target);
        assert_eq!(g.len(), 8);
        assert!(g.is_minimal());
        // simplicial convexity: whole gallery inside the dominant chamber
        let dom = Chamber::dominant(rs);
        for a in &g.alcoves {
            assert!(dom.contains_alcove(rs, a));
        }
        // every intermediate wall separates its alcove from the endpoint
        for (i, w) in g.walls.iter().enumerate() {
            assert_ne!(g.alcoves[i].side_of(*w), target.side_of(*w));
        }
        // singleton and adjacent galleries
        assert_eq!(minimal_gallery(rs, &base, &base).len(), 0);
    }

    #[test]
    fn umbrella_predicate() {
        let c = ctx(Family::A, 2, false);
        let rs = &c.roots;
        let base = Alcove::base(rs);
        let wall = Hyperplane { root: rs.highest_root, level: 1 };
        // singleton gallery on the same side: trivially an umbrella
        let g = Gallery::new(vec![base.clone()]).unwrap();
        assert!(is_umbrella(rs, &g, &base, wall).unwrap());
        // a gallery crossing the wall is not
        let across = base.reflect(rs, wall);
        let g2 = Gallery::new(vec![base.clone(), across.clone()]).unwrap();
        assert!(!is_umbrella(rs, &g2, &base, wall).unwrap());
        // backtracking galleries are rejected as non-minimal
        let s1_wall = Hyperplane { root: 0, level: 0 };
        let side_alcove = base.reflect(rs, s1_wall);
        let g3 = Gallery::new(vec![side_alcove.clone(), base.clone(), side_alcove.clone()]).unwrap();
        assert!(!is_umbrella(rs, &g3, &base, wall).unwrap());
        // an error when the hyperplane is not a wall
        assert!(is_umbrella(rs, &g, &base, Hyperplane { root: 0, level: 7 }).is_err());
    }

    #[test]
    fn infinite_gallery_word_lengths() {
        let a1 = ctx(Family::A, 1, false);
        let w = infinite_gallery_word(&a1);
        assert_eq!(w, vec![0, 1]);
        let a2 = ctx(Family::A, 2, false);
        assert_eq!(infinite_gallery_word(&a2).len(), 8);
    }

    #[test]
    fn alcoves_at_origin_count() {
        for c in [ctx(Family::A, 2, false), ctx(Family::C, 2, false)] {
            let rs = &c.roots;
            let at0 = alcoves_at_vertex(rs, &Point::zero(2)).unwrap();
            assert_eq!(at0.len(), c.finite_weyl_elements().len());
            assert!(alcoves_at_vertex(rs, &Point(vec![ratio(1, 3), ratio(0, 1)])).is_err());
        }
    }

    #[test]
    fn hyperplane_images() {
        let c = ctx(Family::A, 2, false);
        let h = Hyperplane { root: 0, level: 0 };
        let t = c.translation(&Point::from_i64(&[1, 0]));
        let img = map_hyperplane(&c, &t, h);
        assert_eq!(img, Hyperplane { root: 0, level: 2 });
        // group action on hyperplanes respects membership
        let rs = &c.roots;
        let base = Alcove::base(rs);
        for seed in 0..6u64 {
            let w = c.random_element(5, seed);
            for wall in base.walls(rs) {
                let img = map_hyperplane(&c, &w, wall);
                let moved = Alcove::of_element(&c, &w);
                assert!(moved.has_wall(rs, img), "images of walls are walls of the image");
            }
        }
    }
}
