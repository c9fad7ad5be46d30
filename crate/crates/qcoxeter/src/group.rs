//! The quasi-Coxeter group: a finitely generated translation group (free
//! lattice part plus optional torsion on which everything acts trivially)
//! extended by the finite Weyl group, with its affine action, length
//! function, omega projection, and hypothesis validation.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::linalg::{
    floor_to_i64, inverse_unimodular_big, rat, smith_normal_form, solve_square, Int, Point, Rat,
};
use crate::rootsys::{FiniteWeylElement, RootSystem, RootSystemError};

/// Generators of the translation lattice plus torsion orders.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeSpec {
    /// exactly rank-many points spanning a full-rank lattice containing the coroots
    pub free_generators: Vec<Point>,
    pub torsion_orders: Vec<u64>,
}

impl LatticeSpec {
    pub fn adjoint(rs: &RootSystem) -> Self {
        let r = rs.rank;
        let free_generators = (0..r)
            .map(|i| {
                let mut v = vec![0i64; r];
                v[i] = 1;
                Point::from_i64(&v)
            })
            .collect();
        LatticeSpec {
            free_generators,
            torsion_orders: vec![],
        }
    }

    pub fn coweight(rs: &RootSystem) -> Self {
        LatticeSpec {
            free_generators: rs.fundamental_coweights.clone(),
            torsion_orders: vec![],
        }
    }

    pub fn with_torsion(mut self, orders: Vec<u64>) -> Self {
        self.torsion_orders = orders;
        self
    }
}

/// Element of the quasi-Coxeter group: translation part (free + torsion) and
/// finite part, acting by x -> finite(x) + translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub translation: Point,
    pub torsion: Vec<u64>,
    pub finite: FiniteWeylElement,
}

/// Class in the quotient by the affine Weyl group: free residues in Smith
/// normal form coordinates plus the torsion tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaElement {
    pub free: Vec<u64>,
    pub torsion: Vec<u64>,
}

impl OmegaElement {
    pub fn is_trivial(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.torsion.iter().all(|&x| x == 0)
    }
}

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("lattice generator count {got} does not match rank {rank}")]
    GeneratorCount { got: usize, rank: usize },
    #[error("lattice generators are not full rank")]
    NotFullRank,
    #[error("generator {index} does not pair integrally with all roots")]
    NonIntegralGenerator { index: usize },
    #[error("lattice is not stable under the finite Weyl group (generator {index})")]
    NotWeylStable { index: usize },
    #[error("coroot lattice is not contained in the given lattice (coroot {index})")]
    MissingCoroot { index: usize },
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// Shared read-only context: the root system, the validated lattice, and
/// derived omega data.
#[derive(Clone, Debug)]
pub struct GroupContext {
    pub roots: RootSystem,
    pub lattice: LatticeSpec,
    /// generator matrix columns in coroot coordinates
    gen_matrix: Vec<Vec<Rat>>,
    /// Smith form of the coroot lattice inside the free lattice
    snf_u: Vec<Vec<Int>>,
    snf_u_inv: Vec<Vec<Int>>,
    /// orders of the cyclic factors of the free quotient (1 = trivial factor)
    pub free_orders: Vec<u64>,
    finite_weyl: Vec<FiniteWeylElement>,
    sections: BTreeMap<OmegaElement, GroupElement>,
}

impl GroupContext {
    /// Validates the lattice structurally and precomputes omega data.
    pub fn new(roots: RootSystem, lattice: LatticeSpec, weyl_cap: usize) -> Result<Self, GroupError> {
        let r = roots.rank;
        if lattice.free_generators.len() != r {
            return Err(GroupError::GeneratorCount {
                got: lattice.free_generators.len(),
                rank: r,
            });
        }
        // columns are generators
        let gen_matrix: Vec<Vec<Rat>> = (0..r)
            .map(|row| (0..r).map(|col| lattice.free_generators[col].0[row].clone()).collect())
            .collect();
        // integrality against every root
        for (index, g) in lattice.free_generators.iter().enumerate() {
            for root in &roots.positive_roots {
                if !g.pair(&root.pairings).is_integer() {
                    return Err(GroupError::NonIntegralGenerator { index });
                }
            }
        }
        // generator coordinates of an arbitrary point
        let in_lattice = |m: &Vec<Vec<Rat>>, p: &Point| -> Option<Vec<Int>> {
            let x = solve_square(m, &p.0)?;
            if x.iter().all(|c| c.is_integer()) {
                Some(x.into_iter().map(|c| c.to_integer()).collect())
            } else {
                None
            }
        };
        if solve_square(&gen_matrix, &Point::zero(r).0).is_none() {
            return Err(GroupError::NotFullRank);
        }
        // W-stability: images of generators under simple reflections stay inside
        for (index, g) in lattice.free_generators.iter().enumerate() {
            for i in 1..=r {
                let img = roots.simple_reflection(i).apply_point(g);
                if in_lattice(&gen_matrix, &img).is_none() {
                    return Err(GroupError::NotWeylStable { index });
                }
            }
        }
        // coroot lattice containment, and the integer matrix expressing it
        let mut coroot_coords: Vec<Vec<Int>> = Vec::with_capacity(r);
        for index in 0..r {
            let mut e = vec![0i64; r];
            e[index] = 1;
            match in_lattice(&gen_matrix, &Point::from_i64(&e)) {
                Some(c) => coroot_coords.push(c),
                None => return Err(GroupError::MissingCoroot { index }),
            }
        }
        // columns of m are the coroot basis vectors in generator coordinates
        let m: Vec<Vec<Int>> = (0..r)
            .map(|row| (0..r).map(|col| coroot_coords[col][row].clone()).collect())
            .collect();
        let (u, d, _v) = smith_normal_form(&m);
        let u_inv = inverse_unimodular_big(&u);
        let free_orders: Vec<u64> = (0..r)
            .map(|i| u64::try_from(&d[i][i]).expect("finite index"))
            .collect();

        let finite_weyl = roots.enumerate_finite_weyl(weyl_cap)?;

        let mut ctx = GroupContext {
            roots,
            lattice,
            gen_matrix,
            snf_u: u,
            snf_u_inv: u_inv,
            free_orders,
            finite_weyl,
            sections: BTreeMap::new(),
        };
        let classes = ctx.all_omega_classes();
        let mut sections = BTreeMap::new();
        for class in classes {
            let g = ctx.compute_section(&class);
            sections.insert(class, g);
        }
        ctx.sections = sections;
        Ok(ctx)
    }

    pub fn rank(&self) -> usize {
        self.roots.rank
    }

    /// Number of affine Coxeter generators (s0 = affine reflection, s1..sr simple).
    pub fn delta_aff_count(&self) -> usize {
        self.roots.rank + 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            translation: Point::zero(self.rank()),
            torsion: vec![0; self.lattice.torsion_orders.len()],
            finite: FiniteWeylElement::identity(self.rank()),
        }
    }

    /// The affine Coxeter generator with index j (0 = reflection through the
    /// level-one wall of the highest root, j >= 1 the simple reflections).
    pub fn delta_aff(&self, j: usize) -> GroupElement {
        assert!(j <= self.rank(), "generator index out of range");
        if j == 0 {
            let theta = self.roots.highest_root;
            GroupElement {
                translation: self.roots.coroot_point(theta),
                torsion: vec![0; self.lattice.torsion_orders.len()],
                finite: self.reflection_element(theta),
            }
        } else {
            GroupElement {
                translation: Point::zero(self.rank()),
                torsion: vec![0; self.lattice.torsion_orders.len()],
                finite: self.roots.simple_reflection(j),
            }
        }
    }

    fn reflection_element(&self, root_index: usize) -> FiniteWeylElement {
        let root = &self.roots.positive_roots[root_index];
        let n = self.rank();
        let mut a = vec![0i64; n * n];
        for row in 0..n {
            for col in 0..n {
                let mut v = if row == col { 1 } else { 0 };
                v -= root.coroot[row] * root.pairings[col];
                a[row * n + col] = v;
            }
        }
        FiniteWeylElement::from_involution(crate::linalg::IntMat { n, a })
    }

    pub fn translation(&self, lambda: &Point) -> GroupElement {
        assert!(self.lattice_coords(lambda).is_some(), "point is not in the lattice");
        GroupElement {
            translation: lambda.clone(),
            torsion: vec![0; self.lattice.torsion_orders.len()],
            finite: FiniteWeylElement::identity(self.rank()),
        }
    }

    pub fn torsion_element(&self, torsion: Vec<u64>) -> GroupElement {
        assert_eq!(torsion.len(), self.lattice.torsion_orders.len());
        let torsion = torsion
            .iter()
            .zip(&self.lattice.torsion_orders)
            .map(|(&t, &o)| t % o)
            .collect();
        GroupElement {
            translation: Point::zero(self.rank()),
            torsion,
            finite: FiniteWeylElement::identity(self.rank()),
        }
    }

    /// Generator coordinates of a lattice point; None when outside the lattice.
    pub fn lattice_coords(&self, p: &Point) -> Option<Vec<Int>> {
        let x = solve_square(&self.gen_matrix, &p.0)?;
        if x.iter().all(|c| c.is_integer()) {
            Some(x.into_iter().map(|c| c.to_integer()).collect())
        } else {
            None
        }
    }

    pub fn lattice_point(&self, coords: &[Int]) -> Point {
        let r = self.rank();
        assert_eq!(coords.len(), r);
        let mut p = Point::zero(r);
        for (c, g) in coords.iter().zip(&self.lattice.free_generators) {
            p = p.add(&g.scale(&Rat::from_integer(c.clone())));
        }
        p
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        assert_eq!(a.translation.dim(), b.translation.dim());
        let translation = a.translation.add(&a.finite.apply_point(&b.translation));
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.lattice.torsion_orders)
            .map(|((&x, &y), &o)| (x + y) % o)
            .collect();
        GroupElement {
            translation,
            torsion,
            finite: a.finite.compose(&b.finite),
        }
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        let finite = w.finite.inverse();
        let translation = finite.apply_point(&w.translation).neg();
        let torsion = w
            .torsion
            .iter()
            .zip(&self.lattice.torsion_orders)
            .map(|(&x, &o)| (o - x % o) % o)
            .collect();
        GroupElement {
            translation,
            torsion,
            finite,
        }
    }

    pub fn act_on_point(&self, w: &GroupElement, x: &Point) -> Point {
        w.finite.apply_point(x).add(&w.translation)
    }

    pub fn is_translation(&self, w: &GroupElement) -> bool {
        w.finite.is_identity()
    }

    /// Length as the number of hyperplanes separating the base alcove from its
    /// image, read off from the alcove coordinates of the image.
    pub fn length(&self, w: &GroupElement) -> u64 {
        let p = self.act_on_point(w, &self.roots.interior_point);
        let mut total = 0u64;
        for root in &self.roots.positive_roots {
            let v = p.pair(&root.pairings);
            debug_assert!(!v.is_integer(), "image of the interior point lies on a hyperplane");
            total += floor_to_i64(&v).unsigned_abs();
        }
        total
    }

    /// Independent closed-form length: over positive roots alpha,
    /// |<lambda, alpha>| when the finite part keeps alpha positive, otherwise
    /// |<lambda, alpha> - 1|.
    pub fn length_formula(&self, w: &GroupElement) -> u64 {
        let u_inv = w.finite.inverse();
        let mut total = 0u64;
        for root in &self.roots.positive_roots {
            let pre = u_inv.apply_covector(&root.pairings);
            let (_, negative) = self
                .roots
                .classify_covector(&pre)
                .expect("Weyl image of a root is a root");
            let lam = w.translation.pair_int(&root.pairings);
            let lam = i64::try_from(&lam).unwrap();
            total += if negative { (lam - 1).unsigned_abs() } else { lam.unsigned_abs() };
        }
        total
    }

    /// Smith-normal-form residues of the free part plus the torsion tuple.
    pub fn omega_projection(&self, w: &GroupElement) -> OmegaElement {
        let coords = self
            .lattice_coords(&w.translation)
            .expect("element translation lies in the lattice");
        let free = (0..self.rank())
            .map(|i| {
                let mut acc = Int::zero();
                for j in 0..self.rank() {
                    acc += &self.snf_u[i][j] * &coords[j];
                }
                let order = Int::from(self.free_orders[i]);
                let m = ((acc % &order) + &order) % &order;
                u64::try_from(&m).unwrap()
            })
            .collect();
        OmegaElement {
            free,
            torsion: w.torsion.clone(),
        }
    }

    pub fn omega_mul(&self, a: &OmegaElement, b: &OmegaElement) -> OmegaElement {
        OmegaElement {
            free: a
                .free
                .iter()
                .zip(&b.free)
                .zip(&self.free_orders)
                .map(|((&x, &y), &o)| (x + y) % o)
                .collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&b.torsion)
                .zip(&self.lattice.torsion_orders)
                .map(|((&x, &y), &o)| (x + y) % o)
                .collect(),
        }
    }

    pub fn omega_inverse(&self, a: &OmegaElement) -> OmegaElement {
        OmegaElement {
            free: a
                .free
                .iter()
                .zip(&self.free_orders)
                .map(|(&x, &o)| (o - x % o) % o)
                .collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.lattice.torsion_orders)
                .map(|(&x, &o)| (o - x % o) % o)
                .collect(),
        }
    }

    pub fn trivial_omega(&self) -> OmegaElement {
        OmegaElement {
            free: vec![0; self.rank()],
            torsion: vec![0; self.lattice.torsion_orders.len()],
        }
    }

    pub fn all_omega_classes(&self) -> Vec<OmegaElement> {
        let mut classes = vec![self.trivial_omega()];
        for (i, &o) in self.free_orders.iter().enumerate() {
            let mut next = Vec::new();
            for c in &classes {
                for v in 0..o {
                    let mut c2 = c.clone();
                    c2.free[i] = v;
                    next.push(c2);
                }
            }
            classes = next;
        }
        for (i, &o) in self.lattice.torsion_orders.iter().enumerate() {
            let mut next = Vec::new();
            for c in &classes {
                for v in 0..o {
                    let mut c2 = c.clone();
                    c2.torsion[i] = v;
                    next.push(c2);
                }
            }
            classes = next;
        }
        classes.sort();
        classes
    }

    /// Generators of the omega group (one per nontrivial cyclic factor).
    pub fn omega_generators(&self) -> Vec<OmegaElement> {
        let mut gens = Vec::new();
        for (i, &o) in self.free_orders.iter().enumerate() {
            if o > 1 {
                let mut c = self.trivial_omega();
                c.free[i] = 1;
                gens.push(c);
            }
        }
        for (i, &o) in self.lattice.torsion_orders.iter().enumerate() {
            if o > 1 {
                let mut c = self.trivial_omega();
                c.torsion[i] = 1;
                gens.push(c);
            }
        }
        gens
    }

    fn compute_section(&self, class: &OmegaElement) -> GroupElement {
        // lift the free residues back through the Smith transform
        let residues: Vec<Int> = class.free.iter().map(|&x| Int::from(x)).collect();
        let mut coords = vec![Int::zero(); self.rank()];
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                coords[i] += &self.snf_u_inv[i][j] * &residues[j];
            }
        }
        let lambda = self.lattice_point(&coords);
        let mut g = GroupElement {
            translation: lambda,
            torsion: class.torsion.clone(),
            finite: FiniteWeylElement::identity(self.rank()),
        };
        // greedy left descent to the unique length-zero coset representative
        loop {
            let len = self.length(&g);
            if len == 0 {
                break;
            }
            let mut descended = false;
            for j in 0..self.delta_aff_count() {
                let cand = self.compose(&self.delta_aff(j), &g);
                if self.length(&cand) < len {
                    g = cand;
                    descended = true;
                    break;
                }
            }
            assert!(descended, "no descent from a positive-length element");
        }
        debug_assert_eq!(&self.omega_projection(&g), class);
        g
    }

    /// The unique length-zero element of the coset named by the class.
    pub fn omega_section(&self, class: &OmegaElement) -> GroupElement {
        self.sections
            .get(class)
            .cloned()
            .unwrap_or_else(|| self.compute_section(class))
    }

    /// Greedy reduced word over the affine generators; returns the word and
    /// the trailing length-zero remainder, so that w = word * remainder.
    pub fn reduced_word(&self, w: &GroupElement) -> (Vec<usize>, GroupElement) {
        let mut word = Vec::new();
        let mut g = w.clone();
        loop {
            let len = self.length(&g);
            if len == 0 {
                break;
            }
            let mut descended = false;
            for j in 0..self.delta_aff_count() {
                let cand = self.compose(&self.delta_aff(j), &g);
                if self.length(&cand) < len {
                    word.push(j);
                    g = cand;
                    descended = true;
                    break;
                }
            }
            assert!(descended);
        }
        (word, g)
    }

    pub fn finite_weyl_elements(&self) -> &[FiniteWeylElement] {
        &self.finite_weyl
    }

    /// Deterministic pseudo-random element: a word over the affine generators
    /// followed by a random omega section.
    pub fn random_element(&self, word_length: usize, seed: u64) -> GroupElement {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = self.identity();
        for _ in 0..word_length {
            let j = rng.gen_range(0..self.delta_aff_count());
            g = self.compose(&g, &self.delta_aff(j));
        }
        let classes = self.all_omega_classes();
        let class = &classes[rng.gen_range(0..classes.len())];
        self.compose(&g, &self.omega_section(class))
    }

    /// All affine-Weyl-group elements of length at most `max_len`.
    pub fn weyl_ball(&self, max_len: u64) -> Vec<GroupElement> {
        let mut out = vec![self.identity()];
        let mut seen: HashSet<GroupElement> = out.iter().cloned().collect();
        let mut frontier = out.clone();
        for len in 1..=max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for j in 0..self.delta_aff_count() {
                    let cand = self.compose(&self.delta_aff(j), w);
                    if self.length(&cand) == len && !seen.contains(&cand) {
                        seen.insert(cand.clone());
                        next.push(cand);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Whole-group ball: every element of length at most `max_len`.
    pub fn group_ball(&self, max_len: u64) -> Vec<GroupElement> {
        let base = self.weyl_ball(max_len);
        let mut out = Vec::new();
        for class in self.all_omega_classes() {
            let g = self.omega_section(&class);
            for a in &base {
                out.push(self.compose(a, &g));
            }
        }
        out
    }

    /// Lattice points whose translations have length at most `max_len`.
    pub fn translations_up_to(&self, max_len: u64) -> Vec<Point> {
        let r = self.rank();
        let bound = max_len as i64;
        let mut out = Vec::new();
        let mut m = vec![-bound; r];
        loop {
            let mut p = Point::zero(r);
            for (i, w) in self.roots.fundamental_coweights.iter().enumerate() {
                p = p.add(&w.scale(&rat(m[i])));
            }
            if self.lattice_coords(&p).is_some() {
                let t = GroupElement {
                    translation: p.clone(),
                    torsion: vec![0; self.lattice.torsion_orders.len()],
                    finite: FiniteWeylElement::identity(r),
                };
                if self.length(&t) <= max_len {
                    out.push(p);
                }
            }
            // advance the odometer
            let mut i = 0;
            loop {
                if i == r {
                    return out;
                }
                m[i] += 1;
                if m[i] <= bound {
                    break;
                }
                m[i] = -bound;
                i += 1;
            }
        }
    }
}

/// Validation report for the group hypotheses.
#[derive(Clone, Debug)]
pub struct QcgCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct QcgReport {
    pub checks: Vec<QcgCheck>,
    pub omega_order: Option<u64>,
}

impl QcgReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(
                s,
                "{} {}{}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(": {}", c.detail)
                }
            );
        }
        if let Some(o) = self.omega_order {
            let _ = writeln!(s, "omega order: {}", o);
        }
        s
    }
}

/// Checks the structural lattice conditions and the four group hypotheses,
/// exhaustively for translations up to `length_bound`.
pub fn validate_qcg(
    roots: &RootSystem,
    lattice: &LatticeSpec,
    weyl_cap: usize,
    length_bound: u64,
) -> QcgReport {
    let mut checks = Vec::new();
    match GroupContext::new(roots.clone(), lattice.clone(), weyl_cap) {
        Err(e) => {
            checks.push(QcgCheck {
                name: "structural lattice conditions",
                passed: false,
                detail: e.to_string(),
            });
            for name in ["QCG1 base alcove stabilized", "QCG2 semidirect factorization", "QCG3 class-constant length", "QCG4 finitely generated abelian"] {
                checks.push(QcgCheck {
                    name,
                    passed: false,
                    detail: "skipped: structural failure".into(),
                });
            }
            QcgReport {
                checks,
                omega_order: None,
            }
        }
        Ok(ctx) => {
            checks.push(QcgCheck {
                name: "structural lattice conditions",
                passed: true,
                detail: String::new(),
            });

            // QCG1: every omega generator section stabilizes the base alcove
            // and conjugation by it permutes the affine generators
            let mut qcg1_ok = true;
            let mut qcg1_detail = String::new();
            for class in ctx.omega_generators() {
                let g = ctx.omega_section(&class);
                if ctx.length(&g) != 0 {
                    qcg1_ok = false;
                    qcg1_detail = format!("section of {:?} has positive length", class);
                    break;
                }
                let g_inv = ctx.inverse(&g);
                for j in 0..ctx.delta_aff_count() {
                    let conj = ctx.compose(&ctx.compose(&g, &ctx.delta_aff(j)), &g_inv);
                    let hit = (0..ctx.delta_aff_count()).any(|k| conj == ctx.delta_aff(k));
                    if !hit {
                        qcg1_ok = false;
                        qcg1_detail = format!("conjugate of generator {} leaves the generating set", j);
                        break;
                    }
                }
            }
            checks.push(QcgCheck {
                name: "QCG1 base alcove stabilized",
                passed: qcg1_ok,
                detail: qcg1_detail,
            });

            // QCG2: the stored representation is the factorization; verify the
            // action/composition compatibility on the generators
            let mut qcg2_ok = true;
            let x = &roots.interior_point;
            for j in 0..ctx.delta_aff_count() {
                for k in 0..ctx.delta_aff_count() {
                    let a = ctx.delta_aff(j);
                    let b = ctx.delta_aff(k);
                    let lhs = ctx.act_on_point(&ctx.compose(&a, &b), x);
                    let rhs = ctx.act_on_point(&a, &ctx.act_on_point(&b, x));
                    if lhs != rhs {
                        qcg2_ok = false;
                    }
                }
            }
            checks.push(QcgCheck {
                name: "QCG2 semidirect factorization",
                passed: qcg2_ok,
                detail: String::new(),
            });

            // QCG3: length constant on finite-Weyl conjugacy classes of translations
            let mut qcg3_ok = true;
            let mut qcg3_detail = String::new();
            'outer: for lambda in ctx.translations_up_to(length_bound) {
                let t = ctx.translation(&lambda);
                let base = ctx.length(&t);
                for u in ctx.finite_weyl_elements() {
                    let conj = GroupElement {
                        translation: u.apply_point(&lambda),
                        torsion: t.torsion.clone(),
                        finite: FiniteWeylElement::identity(ctx.rank()),
                    };
                    if ctx.length(&conj) != base {
                        qcg3_ok = false;
                        qcg3_detail = format!("orbit of {:?} has non-constant length", lambda);
                        break 'outer;
                    }
                }
            }
            // random sampling beyond the exhaustive bound
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            for _ in 0..20 {
                let r = ctx.rank();
                let mut p = Point::zero(r);
                for w in &ctx.roots.fundamental_coweights {
                    let c = rng.gen_range(-(2 * length_bound as i64)..=(2 * length_bound as i64));
                    p = p.add(&w.scale(&rat(c)));
                }
                if ctx.lattice_coords(&p).is_none() {
                    continue;
                }
                let t = ctx.translation(&p);
                let base = ctx.length(&t);
                for u in ctx.finite_weyl_elements() {
                    let conj = ctx.translation(&u.apply_point(&p));
                    if ctx.length(&conj) != base {
                        qcg3_ok = false;
                        qcg3_detail = format!("sampled orbit of {:?} has non-constant length", p);
                    }
                }
            }
            checks.push(QcgCheck {
                name: "QCG3 class-constant length",
                passed: qcg3_ok,
                detail: qcg3_detail,
            });

            checks.push(QcgCheck {
                name: "QCG4 finitely generated abelian",
                passed: true,
                detail: "by construction (free lattice of finite rank plus finite torsion)".into(),
            });

            let omega_order = ctx
                .free_orders
                .iter()
                .chain(&ctx.lattice.torsion_orders)
                .product::<u64>();
            QcgReport {
                checks,
                omega_order: Some(omega_order),
            }
        }
    }
}
