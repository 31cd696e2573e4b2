//! Berglund-Hubsch-Krawitz duality.
//!
//! `P` is an invertible nonnegative exponent matrix whose columns are the
//! exponents of `W_P`. A group `Q` of phases with `P^t q` integral gives the
//! character lattice `M = {m : <m, q> in Z}` with basis `A` (columns), and
//! `P = A B^t` defines `B^t`. Then `Sigma` is the image of the orthant under
//! `A^t` in `N = M^*` and `Sigma'` its image under `B^t` in `M`, so that the
//! marked generators pair to `e_i^t A B^t e_j = p_ij`.

use num_traits::{Signed, Zero};

use super::{duality_detail, Checks, MirrorReport, NamedPotential};
use crate::fans::{is_dual_pair, orthant_fan, quotient_fan, Fan};
use crate::lattice::{
    annihilator_lattice, dot, dot_rat, normalize_phase, solve_integer, FiniteAbelianGroup, LatticeMap,
};
use crate::toric_lg::{apply_specialization, auxiliary_lg_from_potential, base_change_check, Specialization};
use crate::{Error, IntVec, RatVec, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BHKInput {
    pub p: LatticeMap,
    /// Generators of `Q` as phase vectors.
    pub q: Vec<RatVec>,
}

impl BHKInput {
    pub fn new(p: LatticeMap, q: Vec<RatVec>) -> Result<Self> {
        if !p.is_square() {
            return Err(Error::Dimension("P must be square".into()));
        }
        if p.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
        if p.entries().iter().flatten().any(|x| x.is_negative()) {
            return Err(Error::Invalid("P must have nonnegative entries".into()));
        }
        let n = p.rows();
        for (k, g) in q.iter().enumerate() {
            if g.len() != n {
                return Err(Error::Dimension(format!("phase generator {k} has length {}", g.len())));
            }
            if let Some(j) = (0..n).find(|&j| !dot_rat(&p.column(j), g).is_integer()) {
                return Err(Error::NotSubgroup(j));
            }
        }
        Ok(BHKInput { p, q })
    }
}

/// `S_P = {q : P^t q in Z^n}`; its phases are generated by the rows of
/// `P^{-1}`.
pub fn phase_symmetries(p: &LatticeMap) -> Result<FiniteAbelianGroup> {
    if !p.is_square() {
        return Err(Error::Dimension("P must be square".into()));
    }
    let inv = p.inverse_rational()?;
    FiniteAbelianGroup::generated_by(&inv, p.rows())
}

struct Core {
    a: LatticeMap,
    bt: LatticeMap,
    sigma: Fan,
    sigma_prime: Fan,
    q_group: FiniteAbelianGroup,
    s_group: FiniteAbelianGroup,
    g_group: FiniteAbelianGroup,
    qt_phases: Vec<RatVec>,
    qt_group: FiniteAbelianGroup,
    g_t_group: FiniteAbelianGroup,
}

fn core(inp: &BHKInput) -> Result<Core> {
    let p = &inp.p;
    let n = p.rows();
    let a = annihilator_lattice(&inp.q, n)?;
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        cols.push(solve_integer(&a, &p.column(j)).ok_or(Error::NotSubgroup(j))?);
    }
    let bt = LatticeMap::from_columns(n, &cols)?;
    let inv = bt.inverse_rational()?;
    let qt_phases: Vec<RatVec> = (0..n)
        .map(|j| normalize_phase(&inv.iter().map(|row| row[j].clone()).collect::<RatVec>()))
        .filter(|q| q.iter().any(|x| !x.is_zero()))
        .collect();
    let (sigma, _) = quotient_fan(&orthant_fan(n), &a.transpose())?;
    let (sigma_prime, _) = quotient_fan(&orthant_fan(n), &bt)?;
    Ok(Core {
        q_group: FiniteAbelianGroup::dual_of_quotient(&a)?,
        s_group: phase_symmetries(p)?,
        g_group: FiniteAbelianGroup::lattice_quotient(&a, p)?,
        qt_group: FiniteAbelianGroup::generated_by(&qt_phases, n)?,
        g_t_group: FiniteAbelianGroup::lattice_quotient(&bt.transpose(), &p.transpose())?,
        qt_phases,
        a,
        bt,
        sigma,
        sigma_prime,
    })
}

/// `Q_{P^t} = {q : B^t q in Z^n}`, the kernel of the dual-side map.
pub fn krawitz_dual_group(inp: &BHKInput) -> Result<FiniteAbelianGroup> {
    Ok(core(inp)?.qt_group)
}

/// `Q_P = G_{P^t}` and `Q_{P^t} = G_P` as abstract groups.
pub fn verify_bhk_criterion(
    q_p: &FiniteAbelianGroup,
    g_p: &FiniteAbelianGroup,
    q_pt: &FiniteAbelianGroup,
    g_pt: &FiniteAbelianGroup,
) -> bool {
    q_p.is_isomorphic(g_pt) && q_pt.is_isomorphic(g_p)
}

pub fn bhk_pair(inp: &BHKInput) -> Result<MirrorReport> {
    let p = &inp.p;
    let n = p.rows();
    let c = core(inp)?;
    let mut checks = Checks::default();
    let mut notes = vec![
        "the dual fan is the image of the orthant under B^t: Z^n -> M, the only map with that signature".to_string(),
    ];

    let pairing_rows: Vec<IntVec> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| dot(&c.sigma.marked_generators()[i], &c.sigma_prime.marked_generators()[j]))
                .collect()
        })
        .collect();
    let pairing = LatticeMap::from_rows(n, pairing_rows)?;
    checks.add("pairing_matrix", pairing.entries() == p.entries(), format!("pairing {pairing}"));

    let det = p.determinant()?.abs();
    let prod = c.q_group.order() * c.qt_group.order();
    checks.add(
        "order_law",
        prod == det,
        format!("|Q_P| = {}, |Q_P^t| = {}, |det P| = {det}", c.q_group.order(), c.qt_group.order()),
    );
    let in_s_pt = c
        .qt_phases
        .iter()
        .all(|q| (0..n).all(|i| dot_rat(p.row(i), q).is_integer()));
    checks.add("dual_group_in_s_pt", in_s_pt, "P q integral for generators of Q_P^t");
    checks.add(
        "mirror_criterion",
        verify_bhk_criterion(&c.q_group, &c.g_group, &c.qt_group, &c.g_t_group),
        format!(
            "Q_P = {}, G_P^t = {}, Q_P^t = {}, G_P = {}",
            c.q_group, c.g_t_group, c.qt_group, c.g_group
        ),
    );

    let duality = is_dual_pair(&c.sigma, &c.sigma_prime)?;
    checks.add("dual_fans", duality.verdict, duality_detail(&duality));

    // Gamma: exponents of W_P as characters of X(Sigma), i.e. columns of B^t
    let xi: Vec<IntVec> = c.bt.columns();
    let aux = auxiliary_lg_from_potential(&c.sigma, &xi)?;
    let inclusion = base_change_check(&aux, &c.sigma_prime);
    checks.add(
        "c_sigma_prime_iso_gamma",
        inclusion.verdict && inclusion.is_isomorphism,
        format!("{} of {} coordinates", inclusion.surviving.len(), xi.len()),
    );
    // Gamma': exponents of W_{P^t} as characters of X(Sigma'), i.e. rows of A
    let xi_prime: Vec<IntVec> = c.a.entries().to_vec();
    let aux_prime = auxiliary_lg_from_potential(&c.sigma_prime, &xi_prime)?;
    let inclusion_prime = base_change_check(&aux_prime, &c.sigma);
    checks.add(
        "c_sigma_iso_gamma_prime",
        inclusion_prime.verdict && inclusion_prime.is_isomorphism,
        format!("{} of {} coordinates", inclusion_prime.surviving.len(), xi_prime.len()),
    );

    let w = apply_specialization(&aux, &Specialization::constant(&xi, 1))?;
    let w_prime = apply_specialization(&aux_prime, &Specialization::constant(&xi_prime, 1))?;

    let transposed = BHKInput::new(p.transpose(), c.qt_phases.clone())?;
    let t = core(&transposed)?;
    let swapped = t.sigma.canonical_form() == c.sigma_prime.canonical_form()
        && t.sigma_prime.canonical_form() == c.sigma.canonical_form()
        && t.qt_group.is_isomorphic(&c.q_group);
    checks.add("involution", swapped, "construction on (P^t, Q_P^t) returns the swapped pair");

    let imprimitive: Vec<usize> = (0..n)
        .filter(|&i| c.sigma.marked_generators()[i] != c.sigma.rays()[i])
        .collect();
    let imprimitive_prime: Vec<usize> = (0..n)
        .filter(|&j| c.sigma_prime.marked_generators()[j] != c.sigma_prime.rays()[j])
        .collect();
    if !imprimitive.is_empty() || !imprimitive_prime.is_empty() {
        notes.push(format!(
            "marked generators differ from primitive ones on rays {imprimitive:?} of Sigma and {imprimitive_prime:?} of Sigma'; pairings use marked generators"
        ));
    }

    Ok(MirrorReport {
        pipeline: "bhk".into(),
        sigma: c.sigma,
        sigma_prime: c.sigma_prime,
        duality,
        xi,
        xi_prime,
        inclusion,
        inclusion_prime,
        groups: vec![
            ("Q_P".into(), c.q_group),
            ("S_P".into(), c.s_group),
            ("G_P".into(), c.g_group),
            ("Q_P^t".into(), c.qt_group),
            ("S_P^t".into(), phase_symmetries(&p.transpose())?),
            ("G_P^t".into(), c.g_t_group),
        ],
        matrices: vec![
            ("P".into(), p.clone()),
            ("A".into(), c.a),
            ("B^t".into(), c.bt),
            ("pairing".into(), pairing),
        ],
        potentials: vec![
            NamedPotential {
                name: "W_P".into(),
                terms: w,
            },
            NamedPotential {
                name: "W_P^t".into(),
                terms: w_prime,
            },
        ],
        checks: checks.0,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Int};

    #[test]
    fn phase_groups() {
        assert!(phase_symmetries(&LatticeMap::identity(3)).unwrap().is_trivial());
        let g = phase_symmetries(&LatticeMap::from_i64(2, &[&[2, 1], &[1, 2]])).unwrap();
        assert_eq!(g.invariant_factors(), &[Int::from(3)]);
        assert_eq!(phase_symmetries(&LatticeMap::zero(2, 2)).unwrap_err(), Error::Singular);
    }

    #[test]
    fn rejects_phase_outside_s_p() {
        let p = LatticeMap::from_i64(2, &[&[2, 0], &[0, 2]]);
        let err = BHKInput::new(p, vec![vec![rat(1, 3), rat(0, 1)]]).unwrap_err();
        assert!(err.to_string().starts_with("Q not a subgroup of S_P"));
    }

    #[test]
    fn two_by_two() {
        let p = LatticeMap::from_i64(2, &[&[2, 1], &[1, 2]]);
        let r = bhk_pair(&BHKInput::new(p, vec![]).unwrap()).unwrap();
        assert!(r.all_passed(), "{:?}", r.failed_checks());
        assert_eq!(r.sigma_prime.marked_generators(), &crate::ivecs(&[&[2, 1], &[1, 2]])[..]);
    }
}
