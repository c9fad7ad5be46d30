//! Exact-arithmetic extended affine Weyl groups (with optional torsion),
//! alcove geometry, certificate-producing diamond-property searches, and
//! Iwahori-Hecke algebra center computations.

pub mod diamond;
pub mod geometry;
pub mod group;
pub mod hecke;
pub mod linalg;
pub mod rootsys;

pub use diamond::{
    brute_force_diamond, find_diamond, has_direct_diamond, lateral_class, verify_certificate,
    BruteForceOutcome, DiamondCertificate, SearchOptions,
};
pub use geometry::{Alcove, Chamber, Gallery, Hyperplane, MarkedAlcove, Region};
pub use group::{validate_qcg, GroupContext, GroupElement, LatticeSpec, OmegaElement};
pub use hecke::{HeckeElement, QParams};
pub use linalg::{Point, Rat};
pub use rootsys::{build_root_system, CartanDatum, Family, FiniteWeylElement, Root, RootSystem};
