//! Reduced irreducible root systems with exact integer data: simple roots in
//! Bourbaki order, positive roots by closure, coroots, fundamental coweights,
//! and the finite Weyl group realized by integer matrices on coroot
//! coordinates.
//!
//! Coordinate conventions: the ambient space uses the simple-coroot basis, so
//! a point is a rational vector and a root is the integer covector of its
//! pairings with the simple coroots. The Cartan matrix is
//! `cartan_matrix[i][j] = <alpha_i^vee, alpha_j>`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::linalg::{rat, solve_square, IntMat, Point, Rat};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
    F,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
            Family::F => 'F',
        };
        write!(f, "{}", c)
    }
}

/// Type of a reduced irreducible root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    pub family: Family,
    pub rank: usize,
}

#[derive(Debug, Error)]
pub enum RootSystemError {
    #[error("inadmissible family/rank combination {family}{rank}")]
    Inadmissible { family: Family, rank: usize },
    #[error("finite Weyl group order exceeds cap {cap}")]
    WeylOrderCap { cap: usize },
}

impl CartanDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::G => rank == 2,
            Family::F => rank == 4,
        };
        if ok {
            Ok(CartanDatum { family, rank })
        } else {
            Err(RootSystemError::Inadmissible { family, rank })
        }
    }

    /// Cartan matrix in Bourbaki labeling, a[i][j] = <alpha_i^vee, alpha_j>.
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for i in 0..r {
            a[i][i] = 2;
        }
        fn chain(a: &mut [Vec<i64>], i: usize, j: usize) {
            a[i][j] = -1;
            a[j][i] = -1;
        }
        match self.family {
            Family::A => {
                for i in 0..r - 1 {
                    chain(&mut a, i, i + 1);
                }
            }
            Family::B => {
                // alpha_r short: <alpha_{r-1}^vee, alpha_r> = -1, <alpha_r^vee, alpha_{r-1}> = -2
                for i in 0..r - 2 {
                    chain(&mut a, i, i + 1);
                }
                a[r - 2][r - 1] = -1;
                a[r - 1][r - 2] = -2;
            }
            Family::C => {
                // alpha_r long: <alpha_{r-1}^vee, alpha_r> = -2, <alpha_r^vee, alpha_{r-1}> = -1
                for i in 0..r - 2 {
                    chain(&mut a, i, i + 1);
                }
                a[r - 2][r - 1] = -2;
                a[r - 1][r - 2] = -1;
            }
            Family::D => {
                for i in 0..r - 2 {
                    chain(&mut a, i, i + 1);
                }
                chain(&mut a, r - 3, r - 1);
            }
            Family::G => {
                // alpha_1 short, alpha_2 long
                a[0][1] = -3;
                a[1][0] = -1;
            }
            Family::F => {
                // alpha_1, alpha_2 long; alpha_3, alpha_4 short
                chain(&mut a, 0, 1);
                a[1][2] = -2;
                a[2][1] = -1;
                chain(&mut a, 2, 3);
            }
        }
        a
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G => 6,
            Family::F => 24,
        }
    }
}

/// A positive root, stored three ways: coefficients over the simple roots,
/// the pairing covector, and the coroot in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub pairings: Vec<i64>,
    pub coroot: Vec<i64>,
    /// squared length normalized so the short simple roots measure smallest
    pub norm: Rat,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// Element of the finite Weyl group acting on coroot coordinates.
#[derive(Clone, Debug)]
pub struct FiniteWeylElement {
    pub matrix: IntMat,
    inverse: IntMat,
    pub word: Option<Vec<usize>>,
}

impl PartialEq for FiniteWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}
impl Eq for FiniteWeylElement {}
impl std::hash::Hash for FiniteWeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}
impl PartialOrd for FiniteWeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FiniteWeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.matrix.cmp(&other.matrix)
    }
}

impl FiniteWeylElement {
    pub fn identity(rank: usize) -> Self {
        FiniteWeylElement {
            matrix: IntMat::identity(rank),
            inverse: IntMat::identity(rank),
            word: Some(vec![]),
        }
    }

    /// Wraps a reflection matrix (its own inverse).
    pub fn from_involution(matrix: IntMat) -> Self {
        FiniteWeylElement {
            inverse: matrix.clone(),
            matrix,
            word: None,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn compose(&self, other: &FiniteWeylElement) -> FiniteWeylElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend(b);
                Some(w)
            }
            _ => None,
        };
        FiniteWeylElement {
            matrix: self.matrix.mul(&other.matrix),
            inverse: other.inverse.mul(&self.inverse),
            word,
        }
    }

    pub fn inverse(&self) -> FiniteWeylElement {
        FiniteWeylElement {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            word: self.word.as_ref().map(|w| w.iter().rev().copied().collect()),
        }
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        self.matrix.mul_point(p)
    }

    /// Image of a root covector under this element.
    pub fn apply_covector(&self, v: &[i64]) -> Vec<i64> {
        self.inverse.transpose().mul_ivec(v)
    }
}

/// Full data of a reduced irreducible root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: CartanDatum,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// simple roots first (indices 0..rank), then by increasing height
    pub positive_roots: Vec<Root>,
    pub highest_root: usize,
    pub fundamental_coweights: Vec<Point>,
    pub rho_check: Point,
    /// <rho^vee, theta> + 1
    pub coxeter_number_data: i64,
    /// canonical interior point of the base alcove: rho^vee / coxeter_number_data
    pub interior_point: Point,
    covector_index: HashMap<Vec<i64>, (usize, bool)>,
}

pub fn build_root_system(c: CartanDatum) -> Result<RootSystem, RootSystemError> {
    let r = c.rank;
    let a = c.cartan_matrix();

    // relative squared lengths of the simple roots, propagated along the diagram
    let mut norms: Vec<Option<Rat>> = vec![None; r];
    norms[0] = Some(rat(2));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..r {
            if i != j && a[i][j] != 0 && norms[j].is_none() {
                // a[i][j] * (alpha_i, alpha_i) = a[j][i] * (alpha_j, alpha_j)
                let ni = norms[i].clone().unwrap();
                norms[j] = Some(ni * rat(a[i][j]) / rat(a[j][i]));
                queue.push_back(j);
            }
        }
    }
    let norms: Vec<Rat> = norms
        .into_iter()
        .map(|n| n.expect("Dynkin diagram is connected"))
        .collect();

    // closure of the simple roots under the simple reflections, positives only
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut coeff_list: Vec<Vec<i64>> = Vec::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..r {
        let mut e = vec![0i64; r];
        e[i] = 1;
        seen.insert(e.clone(), ());
        coeff_list.push(e.clone());
        frontier.push(e);
    }
    while let Some(cv) = frontier.pop() {
        for i in 0..r {
            // s_i in root-coefficient coordinates: c -> c - <alpha_i^vee, beta> e_i
            let pairing: i64 = (0..r).map(|j| a[i][j] * cv[j]).sum();
            let mut img = cv.clone();
            img[i] -= pairing;
            if img.iter().all(|&x| x >= 0) && !seen.contains_key(&img) {
                seen.insert(img.clone(), ());
                coeff_list.push(img.clone());
                frontier.push(img);
            }
        }
    }
    // simple roots first in index order, the rest by height then lexicographically
    coeff_list.sort_by_key(|cv| {
        let height = cv.iter().sum::<i64>();
        if height == 1 {
            let idx = cv.iter().position(|&x| x == 1).unwrap();
            (1, idx as i64, cv.clone())
        } else {
            (2, height, cv.clone())
        }
    });
    assert_eq!(
        coeff_list.len(),
        c.positive_root_count(),
        "positive-root closure does not match the classical count"
    );

    let mut positive_roots = Vec::with_capacity(coeff_list.len());
    for cv in &coeff_list {
        // covector of pairings: (A c)_j over rows j
        let pairings: Vec<i64> = (0..r).map(|j| (0..r).map(|i| a[j][i] * cv[i]).sum()).collect();
        // (alpha, alpha) = sum_ij c_i c_j a[i][j] norms[i] / 2
        let mut norm = Rat::zero();
        for i in 0..r {
            if cv[i] == 0 {
                continue;
            }
            for j in 0..r {
                if cv[j] != 0 {
                    norm += rat(cv[i] * cv[j] * a[i][j]) * &norms[i] / rat(2);
                }
            }
        }
        // coroot coordinates: alpha^vee = sum_i c_i (alpha_i,alpha_i)/(alpha,alpha) alpha_i^vee
        let coroot: Vec<i64> = (0..r)
            .map(|i| {
                let d = rat(cv[i]) * &norms[i] / &norm;
                assert!(d.is_integer(), "non-integral coroot coordinate");
                i64::try_from(&d.to_integer()).unwrap()
            })
            .collect();
        positive_roots.push(Root {
            coeffs: cv.clone(),
            pairings,
            coroot,
            norm,
        });
    }

    // highest root: unique maximum of the poset
    let highest_root = positive_roots
        .iter()
        .enumerate()
        .max_by_key(|(_, root)| root.height())
        .map(|(i, _)| i)
        .unwrap();
    {
        let theta = &positive_roots[highest_root];
        // dominance and maximality
        assert!(theta.pairings.iter().all(|&p| p >= 0));
        for i in 0..r {
            let mut up = theta.coeffs.clone();
            up[i] += 1;
            assert!(
                !positive_roots.iter().any(|rt| rt.coeffs == up),
                "highest root is not maximal"
            );
        }
    }

    // fundamental coweights: <omega_i, alpha_j> = delta_ij
    let g: Vec<Vec<Rat>> = (0..r)
        .map(|j| (0..r).map(|i| rat(a[j][i])).collect())
        .collect();
    // omega_i solves A^T omega = e_i, with rows of A^T being columns of A
    let at: Vec<Vec<Rat>> = (0..r)
        .map(|i| (0..r).map(|j| g[j][i].clone()).collect())
        .collect();
    let mut fundamental_coweights = Vec::with_capacity(r);
    for i in 0..r {
        let mut e = vec![Rat::zero(); r];
        e[i] = Rat::one();
        let w = solve_square(&at, &e).expect("Cartan matrix is invertible");
        fundamental_coweights.push(Point(w));
    }
    let mut rho_check = Point::zero(r);
    for w in &fundamental_coweights {
        rho_check = rho_check.add(w);
    }

    let theta_pairings = positive_roots[highest_root].pairings.clone();
    let h = rho_check.pair_int(&theta_pairings);
    let coxeter_number_data = i64::try_from(&h).unwrap() + 1;
    let interior_point = rho_check.scale(&(Rat::one() / rat(coxeter_number_data)));

    let mut covector_index = HashMap::new();
    for (i, root) in positive_roots.iter().enumerate() {
        covector_index.insert(root.pairings.clone(), (i, false));
        covector_index.insert(root.pairings.iter().map(|&x| -x).collect(), (i, true));
    }

    let rs = RootSystem {
        cartan: c,
        rank: r,
        cartan_matrix: a,
        positive_roots,
        highest_root,
        fundamental_coweights,
        rho_check,
        coxeter_number_data,
        interior_point,
        covector_index,
    };

    // 0 < <p_deg, alpha> < 1 for every positive root
    for root in &rs.positive_roots {
        let v = rs.interior_point.pair(&root.pairings);
        assert!(v.is_positive() && v < Rat::one());
    }
    Ok(rs)
}

impl RootSystem {
    pub fn pairing(&self, x: &Point, root_index: usize) -> Rat {
        x.pair(&self.positive_roots[root_index].pairings)
    }

    /// Looks up a covector as +-(positive root); None if it is not a root.
    pub fn classify_covector(&self, v: &[i64]) -> Option<(usize, bool)> {
        self.covector_index.get(v).copied()
    }

    pub fn coroot_point(&self, root_index: usize) -> Point {
        Point::from_i64(&self.positive_roots[root_index].coroot)
    }

    pub fn simple_reflection(&self, i: usize) -> FiniteWeylElement {
        assert!(
            (1..=self.rank).contains(&i),
            "simple reflection index {} out of range 1..={}",
            i,
            self.rank
        );
        let idx = i - 1;
        let pairings = &self.positive_roots[idx].pairings;
        let coroot = &self.positive_roots[idx].coroot;
        let n = self.rank;
        let mut a = vec![0i64; n * n];
        for row in 0..n {
            for col in 0..n {
                let mut v = if row == col { 1 } else { 0 };
                v -= coroot[row] * pairings[col];
                a[row * n + col] = v;
            }
        }
        let m = IntMat { n, a };
        FiniteWeylElement {
            inverse: m.clone(),
            matrix: m,
            word: Some(vec![i]),
        }
    }

    /// Complete list of the finite Weyl group, BFS over the generators.
    pub fn enumerate_finite_weyl(&self, cap: usize) -> Result<Vec<FiniteWeylElement>, RootSystemError> {
        let gens: Vec<FiniteWeylElement> = (1..=self.rank).map(|i| self.simple_reflection(i)).collect();
        let mut seen: HashMap<IntMat, ()> = HashMap::new();
        let id = FiniteWeylElement::identity(self.rank);
        seen.insert(id.matrix.clone(), ());
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let next = g.compose(&w);
                if !seen.contains_key(&next.matrix) {
                    if out.len() >= cap {
                        return Err(RootSystemError::WeylOrderCap { cap });
                    }
                    seen.insert(next.matrix.clone(), ());
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(out)
    }

    /// The longest element of the finite Weyl group.
    pub fn longest_element(&self) -> FiniteWeylElement {
        let mut u = FiniteWeylElement::identity(self.rank);
        let mut p = self.interior_point.clone();
        loop {
            let mut moved = false;
            for i in 1..=self.rank {
                if self.pairing(&p, i - 1).is_positive() {
                    let s = self.simple_reflection(i);
                    p = s.apply_point(&p);
                    u = s.compose(&u);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        for root in &self.positive_roots {
            debug_assert!(p.pair(&root.pairings).is_negative());
        }
        u
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn rs(family: Family, rank: usize) -> RootSystem {
        build_root_system(CartanDatum::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn a1_basics() {
        let r = rs(Family::A, 1);
        assert_eq!(r.positive_roots.len(), 1);
        assert_eq!(r.cartan_matrix, vec![vec![2]]);
        assert_eq!(r.highest_root, 0);
        // pairing (alpha1^vee, alpha1) = 2
        assert_eq!(r.coroot_point(0).pair(&r.positive_roots[0].pairings), rat(2));
        // omega_1 = alpha1^vee / 2
        assert_eq!(r.fundamental_coweights[0], Point(vec![ratio(1, 2)]));
        // s1(alpha1^vee) = -alpha1^vee
        let s1 = r.simple_reflection(1);
        assert_eq!(s1.apply_point(&r.coroot_point(0)), r.coroot_point(0).neg());
    }

    #[test]
    fn a2_closure_and_highest_root() {
        let r = rs(Family::A, 2);
        assert_eq!(r.positive_roots.len(), 3);
        assert_eq!(r.positive_roots[r.highest_root].coeffs, vec![1, 1]);
        // (alpha1^vee, alpha2) = -1
        assert_eq!(r.coroot_point(0).pair(&r.positive_roots[1].pairings), rat(-1));
        // <omega1 + omega2, theta> = 2
        let theta = &r.positive_roots[r.highest_root].pairings;
        assert_eq!(r.rho_check.pair(theta), rat(2));
        // s1(alpha2^vee) = alpha1^vee + alpha2^vee
        let s1 = r.simple_reflection(1);
        let img = s1.apply_point(&r.coroot_point(1));
        assert_eq!(img, r.coroot_point(0).add(&r.coroot_point(1)));
    }

    #[test]
    fn weyl_group_orders() {
        assert_eq!(rs(Family::A, 1).enumerate_finite_weyl(2000).unwrap().len(), 2);
        assert_eq!(rs(Family::A, 2).enumerate_finite_weyl(2000).unwrap().len(), 6);
        assert_eq!(rs(Family::C, 2).enumerate_finite_weyl(2000).unwrap().len(), 8);
        assert_eq!(rs(Family::G, 2).enumerate_finite_weyl(2000).unwrap().len(), 12);
        assert!(matches!(
            rs(Family::G, 2).enumerate_finite_weyl(5),
            Err(RootSystemError::WeylOrderCap { cap: 5 })
        ));
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs(Family::A, 3).positive_roots.len(), 6);
        assert_eq!(rs(Family::B, 3).positive_roots.len(), 9);
        assert_eq!(rs(Family::C, 3).positive_roots.len(), 9);
        assert_eq!(rs(Family::D, 4).positive_roots.len(), 12);
        assert_eq!(rs(Family::G, 2).positive_roots.len(), 6);
        assert_eq!(rs(Family::F, 4).positive_roots.len(), 24);
    }

    #[test]
    fn c2_highest_root_is_long_dominant() {
        let r = rs(Family::C, 2);
        let theta = &r.positive_roots[r.highest_root];
        assert_eq!(theta.coeffs, vec![2, 1]);
        assert!(theta.pairings.iter().all(|&p| p >= 0));
        // long root: norm maximal
        assert!(r.positive_roots.iter().all(|rt| rt.norm <= theta.norm));
    }

    #[test]
    fn simple_reflections_are_involutions() {
        for (family, rank) in [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::F, 4)] {
            let r = rs(family, rank);
            for i in 1..=rank {
                let s = r.simple_reflection(i);
                assert!(s.compose(&s).is_identity());
            }
        }
    }

    #[test]
    fn weyl_orbit_preserves_coroots() {
        for (family, rank) in [(Family::A, 2), (Family::C, 2), (Family::G, 2)] {
            let r = rs(family, rank);
            let coroots: Vec<Point> = (0..r.positive_roots.len()).map(|i| r.coroot_point(i)).collect();
            for w in r.enumerate_finite_weyl(2000).unwrap() {
                for c in &coroots {
                    let img = w.apply_point(c);
                    let hit = coroots.iter().any(|d| *d == img || d.neg() == img);
                    assert!(hit, "{:?} not +- a coroot", img);
                }
            }
        }
    }

    #[test]
    fn fundamental_coweights_dominant() {
        for (family, rank) in [(Family::A, 2), (Family::C, 2), (Family::G, 2), (Family::B, 3)] {
            let r = rs(family, rank);
            for (i, w) in r.fundamental_coweights.iter().enumerate() {
                for (j, root) in r.positive_roots.iter().take(rank).enumerate() {
                    let expect = if i == j { rat(1) } else { rat(0) };
                    assert_eq!(w.pair(&root.pairings), expect);
                }
                for root in &r.positive_roots {
                    assert!(w.pair(&root.pairings) >= Rat::zero());
                }
            }
        }
    }

    #[test]
    fn inadmissible_data_rejected() {
        assert!(CartanDatum::new(Family::B, 1).is_err());
        assert!(CartanDatum::new(Family::D, 2).is_err());
        assert!(CartanDatum::new(Family::G, 3).is_err());
        assert!(CartanDatum::new(Family::F, 3).is_err());
    }

    #[test]
    fn covector_action_is_contragredient() {
        let r = rs(Family::G, 2);
        for w in r.enumerate_finite_weyl(2000).unwrap() {
            for root in &r.positive_roots {
                let img = w.apply_covector(&root.pairings);
                assert!(r.classify_covector(&img).is_some());
                // <w x, w alpha> = <x, alpha> on a sample point
                let x = &r.interior_point;
                let lhs = w.apply_point(x).pair(&img);
                assert_eq!(lhs, x.pair(&root.pairings));
            }
        }
    }
}
